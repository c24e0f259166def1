//! JSON documents. Every index in a document is 1-based.
//!
//! A document is `{"kind": ..., "payload": {...}}`; a bundle is an array of
//! documents. Integers are arbitrary precision, and numbers in Q(√2) are
//! written as `{"rat": "p/q", "sqrt2": "r/s"}`.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::{json, Number, Value};

use crate::charmap::CharacteristicMap;
use crate::charsearch::{Goal, SearchConfig, DEFAULT_NODE_BUDGET};
use crate::complexes::{OrientationData, SimplePolytope, SimplicialComplex};
use crate::cyclic::{eighth_turns, AngleSpec};
use crate::error::{Error, Result};
use crate::exactnum::{format_rational, parse_rational, BigRational, Sqrt2Number};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "payload", rename_all = "snake_case", deny_unknown_fields)]
pub enum Document {
    SimplicialComplex(ComplexDoc),
    SimplePolytope(PolytopeDoc),
    Charmap(CharmapDoc),
    Orientation(OrientationDoc),
    Angles(AnglesDoc),
    SearchConfig(SearchConfigDoc),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexDoc {
    pub num_vertices: usize,
    pub facets: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolytopeDoc {
    pub num_facets: usize,
    pub dimension: usize,
    /// Facets meeting at each vertex.
    pub vertices: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CharmapDoc {
    pub rank: usize,
    pub vectors: Vec<Vec<Number>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OrientationDoc {
    pub tuples: Vec<Vec<usize>>,
    #[serde(default)]
    pub reversed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AnglesDoc {
    /// Curve parameters divided by π, e.g. `"3/4"`.
    pub angles_over_pi: Vec<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GoalDoc {
    Unimodular,
    AllPositive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SearchConfigDoc {
    pub bound: i64,
    pub base_vertex: Vec<usize>,
    pub goal: GoalDoc,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub facet_order: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub solution_cap: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub node_budget: Option<u64>,
}

impl From<GoalDoc> for Goal {
    fn from(g: GoalDoc) -> Goal {
        match g {
            GoalDoc::Unimodular => Goal::Unimodular,
            GoalDoc::AllPositive => Goal::AllPositive,
        }
    }
}

impl From<Goal> for GoalDoc {
    fn from(g: Goal) -> GoalDoc {
        match g {
            Goal::Unimodular => GoalDoc::Unimodular,
            Goal::AllPositive => GoalDoc::AllPositive,
        }
    }
}

fn parse_error(e: &serde_json::Error) -> Error {
    Error::Parse { line: e.line(), column: e.column(), message: e.to_string() }
}

/// Parses a single document or a bundle (array of documents).
pub fn parse_bundle(text: &str) -> Result<Vec<Document>> {
    let value: Value = serde_json::from_str(text).map_err(|e| parse_error(&e))?;
    match value {
        Value::Array(items) => items
            .into_iter()
            .enumerate()
            .map(|(i, v)| Document::deserialize(v).map_err(|e| Error::Schema(format!("document {}: {e}", i + 1))))
            .collect(),
        v => Ok(vec![Document::deserialize(v).map_err(|e| Error::Schema(e.to_string()))?]),
    }
}

pub fn parse_document(text: &str) -> Result<Document> {
    let value: Value = serde_json::from_str(text).map_err(|e| parse_error(&e))?;
    Document::deserialize(value).map_err(|e| Error::Schema(e.to_string()))
}

/// Canonical text: pretty-printed, fields in declaration order, trailing newline.
pub fn to_canonical_string<T: Serialize + ?Sized>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents serialize");
    s.push('\n');
    s
}

fn to_zero_based(what: &str, idx: usize, items: &[usize], limit: usize) -> Result<Vec<usize>> {
    items
        .iter()
        .map(|&x| {
            if x == 0 || x > limit {
                Err(Error::Schema(format!("{what} {idx}: index {x} outside 1..={limit}")))
            } else {
                Ok(x - 1)
            }
        })
        .collect()
}

fn one_based(items: &[usize]) -> Vec<usize> {
    items.iter().map(|x| x + 1).collect()
}

pub fn bigint_number(x: &BigInt) -> Number {
    x.to_string().parse().expect("integers are valid JSON numbers")
}

pub fn sqrt2_value(x: &Sqrt2Number) -> Value {
    json!({
        "rat": format_rational(x.rational_part()),
        "sqrt2": format_rational(x.sqrt2_part()),
    })
}

pub fn rational_value(x: &BigRational) -> Value {
    Value::String(format_rational(x))
}

impl ComplexDoc {
    pub fn to_complex(&self) -> Result<SimplicialComplex> {
        if self.facets.is_empty() {
            return Err(Error::Schema("field `facets` is empty".into()));
        }
        let facets = self
            .facets
            .iter()
            .enumerate()
            .map(|(i, f)| to_zero_based("facet", i + 1, f, self.num_vertices))
            .collect::<Result<Vec<_>>>()?;
        SimplicialComplex::new(self.num_vertices, facets).map_err(|e| Error::Schema(e.to_string()))
    }

    pub fn from_complex(k: &SimplicialComplex) -> Self {
        ComplexDoc { num_vertices: k.num_vertices(), facets: k.facets().iter().map(|f| one_based(f)).collect() }
    }
}

impl PolytopeDoc {
    pub fn to_polytope(&self) -> Result<SimplePolytope> {
        if self.vertices.is_empty() {
            return Err(Error::Schema("field `vertices` is empty".into()));
        }
        let vertices = self
            .vertices
            .iter()
            .enumerate()
            .map(|(i, v)| to_zero_based("vertex", i + 1, v, self.num_facets))
            .collect::<Result<Vec<_>>>()?;
        SimplePolytope::new(self.num_facets, self.dimension, vertices).map_err(|e| Error::Schema(e.to_string()))
    }

    pub fn from_polytope(p: &SimplePolytope) -> Self {
        PolytopeDoc {
            num_facets: p.num_facets(),
            dimension: p.dimension(),
            vertices: p.vertices().iter().map(|v| one_based(v)).collect(),
        }
    }
}

impl CharmapDoc {
    pub fn to_map(&self) -> Result<CharacteristicMap> {
        if self.vectors.is_empty() {
            return Err(Error::Schema("field `vectors` is empty".into()));
        }
        let mut vectors = Vec::with_capacity(self.vectors.len());
        for (i, v) in self.vectors.iter().enumerate() {
            if v.len() != self.rank {
                return Err(Error::Schema(format!(
                    "vector for facet {} has {} entries, expected {}",
                    i + 1,
                    v.len(),
                    self.rank
                )));
            }
            let entries = v
                .iter()
                .map(|n| {
                    n.to_string()
                        .parse::<BigInt>()
                        .map_err(|_| Error::Schema(format!("vector for facet {}: {n} is not an integer", i + 1)))
                })
                .collect::<Result<Vec<_>>>()?;
            vectors.push(entries);
        }
        CharacteristicMap::new(self.rank, vectors).map_err(|e| Error::Schema(e.to_string()))
    }

    pub fn from_map(m: &CharacteristicMap) -> Self {
        CharmapDoc {
            rank: m.rank(),
            vectors: m.vectors().iter().map(|v| v.iter().map(bigint_number).collect()).collect(),
        }
    }
}

impl OrientationDoc {
    /// Zero-based tuples, unaligned with any incidence list.
    pub fn to_orientation(&self) -> Result<OrientationData> {
        if self.tuples.is_empty() {
            return Err(Error::Schema("field `tuples` is empty".into()));
        }
        let tuples = self
            .tuples
            .iter()
            .enumerate()
            .map(|(i, t)| to_zero_based("tuple", i + 1, t, usize::MAX))
            .collect::<Result<Vec<_>>>()?;
        Ok(OrientationData { tuples, reversed: self.reversed })
    }

    pub fn from_orientation(o: &OrientationData) -> Self {
        OrientationDoc { tuples: o.tuples.iter().map(|t| one_based(t)).collect(), reversed: o.reversed }
    }
}

impl AnglesDoc {
    pub fn to_angles(&self) -> Result<AngleSpec> {
        let turns = self
            .angles_over_pi
            .iter()
            .map(|a| {
                let r =
                    parse_rational(a).ok_or_else(|| Error::Schema(format!("angle `{a}` is not a rational number")))?;
                eighth_turns(&r)
            })
            .collect::<Result<Vec<_>>>()?;
        AngleSpec::new(turns).map_err(|e| Error::Schema(e.to_string()))
    }

    pub fn from_angles(a: &AngleSpec) -> Self {
        AnglesDoc {
            angles_over_pi: a
                .turns()
                .iter()
                .map(|&k| format_rational(&BigRational::new(BigInt::from(k), BigInt::from(4))))
                .collect(),
        }
    }
}

impl SearchConfigDoc {
    pub fn to_config(&self) -> Result<SearchConfig> {
        let base_vertex = to_zero_based("base_vertex", 1, &self.base_vertex, usize::MAX)?;
        let facet_order =
            self.facet_order.as_ref().map(|o| to_zero_based("facet_order", 1, o, usize::MAX)).transpose()?;
        Ok(SearchConfig {
            bound: self.bound,
            base_vertex,
            goal: self.goal.into(),
            facet_order,
            solution_cap: self.solution_cap,
            node_budget: self.node_budget.unwrap_or(DEFAULT_NODE_BUDGET),
            jobs: None,
        })
    }

    pub fn from_config(c: &SearchConfig) -> Self {
        SearchConfigDoc {
            bound: c.bound,
            base_vertex: one_based(&c.base_vertex),
            goal: c.goal.into(),
            facet_order: c.facet_order.as_deref().map(one_based),
            solution_cap: c.solution_cap,
            node_budget: (c.node_budget != DEFAULT_NODE_BUDGET).then_some(c.node_budget),
        }
    }
}
