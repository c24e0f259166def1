//! One function per subcommand, each producing a [`Report`].

use itertools::Itertools;
use serde_json::{json, Value};

use crate::charmap::{
    almost_complex_check, cell_label, solve_flips, unimodularity_check, Base, CharacteristicPair, FlipSolution,
    SignPattern,
};
use crate::charsearch::{normalize_map, search, Goal, SearchConfig};
use crate::complexes::{
    coherent_orientation, compare_orientations, dualize, f_vector, h_vector, incoherent_pairs, pseudomanifold_check,
    Orientability, OrientationAgreement, OrientationData, SimplicialComplex,
};
use crate::cyclic::{
    build_cyclic_polar, contains_origin_interior, gale_facets, geometric_facets, verify_facets_geometric,
    vertex_orientation_tuples, CaratheodoryRealization, PolarPolytope,
};
use crate::error::{Error, Result};
use crate::fanchk::{cones_from_pair, fan_properness, sample_coverage};

use super::document::{rational_value, sqrt2_value, CharmapDoc, ComplexDoc, Document, PolytopeDoc};
use super::inputs::Inputs;
use super::report::{Report, Verdict};

/// Flag values that override or supplement the documents.
#[derive(Clone, Debug, Default)]
pub struct Options {
    pub bound: Option<i64>,
    pub goal: Option<Goal>,
    /// Zero-based facet labels.
    pub base_vertex: Option<Vec<usize>>,
    pub jobs: Option<usize>,
    pub node_budget: Option<u64>,
    pub solution_cap: Option<usize>,
    pub n: Option<usize>,
    pub dim: Option<usize>,
}

fn labels(cells: &[Vec<usize>]) -> Vec<String> {
    cells.iter().map(|c| cell_label(c)).collect()
}

fn one_based(items: &[usize]) -> Vec<usize> {
    items.iter().map(|x| x + 1).collect()
}

fn missing(what: &str) -> Error {
    Error::Schema(format!("input bundle has no {what}"))
}

fn realization(inputs: &Inputs) -> Option<CaratheodoryRealization> {
    inputs.angles.clone().map(CaratheodoryRealization::new)
}

/// The simplicial complex named by the bundle: an explicit complex, the
/// boundary of a cyclic polytope, or the dual of a simple polytope.
fn complex_of(inputs: &Inputs) -> Result<SimplicialComplex> {
    if let Some(k) = &inputs.complex {
        return Ok(k.clone());
    }
    if let Some(r) = realization(inputs) {
        return SimplicialComplex::new(r.angles().len(), geometric_facets(r.config())?);
    }
    if let Some(p) = &inputs.polytope {
        return SimplicialComplex::new(p.num_facets(), p.vertices().to_vec());
    }
    Err(missing("simplicial complex, angles or polytope"))
}

struct Setting {
    base: Base,
    polar: Option<PolarPolytope>,
    /// One entry, or both global classes when the orientation was a choice.
    classes: Vec<(&'static str, OrientationData)>,
}

fn align(supplied: &OrientationData, cells: &[Vec<usize>]) -> Result<OrientationData> {
    let tuples = cells
        .iter()
        .map(|cell| {
            supplied
                .tuples
                .iter()
                .find(|t| {
                    let mut s = (*t).clone();
                    s.sort_unstable();
                    s == *cell
                })
                .cloned()
                .ok_or_else(|| Error::Schema(format!("orientation has no tuple for vertex {}", cell_label(cell))))
        })
        .collect::<Result<Vec<_>>>()?;
    if supplied.tuples.len() != cells.len() {
        return Err(Error::Schema(format!(
            "orientation has {} tuples for {} vertices",
            supplied.tuples.len(),
            cells.len()
        )));
    }
    Ok(OrientationData { tuples, reversed: supplied.reversed })
}

fn setting(inputs: &Inputs) -> Result<Setting> {
    if let Some(r) = realization(inputs) {
        let polar = build_cyclic_polar(&r)?;
        let tuples = vertex_orientation_tuples(&polar)?;
        return Ok(Setting {
            base: Base::Polytope(polar.combinatorics.clone()),
            polar: Some(polar),
            classes: vec![("geometric", tuples)],
        });
    }
    let base = match (&inputs.polytope, &inputs.complex) {
        (Some(p), _) => Base::Polytope(p.clone()),
        (None, Some(k)) => Base::Sphere(k.clone()),
        (None, None) => return Err(missing("polytope, angles or simplicial complex")),
    };
    let classes = match (&inputs.orientation, &base) {
        (Some(o), _) => vec![("supplied", align(o, base.cells())?)],
        (None, Base::Sphere(k)) => match coherent_orientation(k)? {
            Orientability::Orientable(o) => {
                let r = o.reverse();
                vec![("coherent", o), ("reversed", r)]
            }
            Orientability::NonOrientable { .. } => return Err(Error::Validation("complex is not orientable".into())),
        },
        (None, Base::Polytope(_)) => return Err(missing("orientation for the polytope")),
    };
    Ok(Setting { base, polar: None, classes })
}

fn pair_of(inputs: &Inputs, base: &Base) -> Result<CharacteristicPair> {
    let map = inputs.map.clone().ok_or_else(|| missing("charmap"))?;
    CharacteristicPair::new(base.clone(), map)
}

fn orientation_value(o: &OrientationData) -> Value {
    json!(labels(&o.tuples))
}

pub fn fvector(inputs: &Inputs, _: &Options) -> Result<Report> {
    let k = complex_of(inputs)?;
    let f = f_vector(&k);
    Ok(Report::new(
        "fvector",
        Verdict::Output,
        json!({
            "f_vector": f.0,
            "euler_characteristic": f.euler_characteristic(),
            "dimension": k.dimension(),
        }),
        &inputs.provenance,
    ))
}

pub fn hvector(inputs: &Inputs, _: &Options) -> Result<Report> {
    let k = complex_of(inputs)?;
    let f = f_vector(&k);
    let h = h_vector(&f, k.dimension() + 1)?;
    let symmetric = h.iter().eq(h.iter().rev());
    Ok(Report::new(
        "hvector",
        Verdict::Output,
        json!({ "f_vector": f.0, "h_vector": h, "dehn_sommerville_symmetric": symmetric }),
        &inputs.provenance,
    ))
}

pub fn orient(inputs: &Inputs, _: &Options) -> Result<Report> {
    let k = complex_of(inputs)?;
    let pm = pseudomanifold_check(&k);
    if !pm.passed() {
        let offending: Vec<Value> =
            pm.offending.iter().map(|(r, n)| json!({ "ridge": cell_label(r), "facets": n })).collect();
        return Ok(Report::new(
            "orient",
            Verdict::Fail,
            json!({ "pseudomanifold": false, "orientable": Value::Null, "offending_ridges": offending }),
            &inputs.provenance,
        ));
    }
    let (verdict, details) = match coherent_orientation(&k)? {
        Orientability::Orientable(o) => (
            Verdict::Pass,
            json!({
                "pseudomanifold": true,
                "orientable": true,
                "orientation": orientation_value(&o),
                "reversed_orientation": orientation_value(&o.reverse()),
            }),
        ),
        Orientability::NonOrientable { cycle } => (
            Verdict::Fail,
            json!({
                "pseudomanifold": true,
                "orientable": false,
                "cycle": cycle.iter().map(|&i| cell_label(&k.facets()[i])).collect::<Vec<_>>(),
            }),
        ),
    };
    Ok(Report::new("orient", verdict, details, &inputs.provenance))
}

pub fn dualize_cmd(inputs: &Inputs, _: &Options) -> Result<Report> {
    let k = complex_of(inputs)?;
    let p = dualize(&k)?;
    let doc = Document::SimplePolytope(PolytopeDoc::from_polytope(&p));
    Ok(Report::new(
        "dualize",
        Verdict::Output,
        json!({
            "document": serde_json::to_value(&doc).expect("documents serialize"),
            "num_vertices": p.vertices().len(),
            "num_edges": p.edges().len(),
        }),
        &inputs.provenance,
    ))
}

pub fn cyclic_gen(inputs: &Inputs, _: &Options) -> Result<Report> {
    let r = realization(inputs).ok_or_else(|| missing("angles"))?;
    let facets = geometric_facets(r.config())?;
    let gale = gale_facets(r.angles().len(), 4)?;
    if facets != gale {
        return Err(Error::RealizationMismatch(format!(
            "{} geometric facets against {} Gale facets",
            facets.len(),
            gale.len()
        )));
    }
    let k = SimplicialComplex::new(r.angles().len(), facets)?;
    let points: Vec<Value> =
        r.config().points().iter().map(|p| Value::Array(p.iter().map(sqrt2_value).collect())).collect();
    let doc = Document::SimplicialComplex(ComplexDoc::from_complex(&k));
    Ok(Report::new(
        "cyclic gen",
        Verdict::Output,
        json!({
            "points": points,
            "facets": labels(k.facets()),
            "document": serde_json::to_value(&doc).expect("documents serialize"),
        }),
        &inputs.provenance,
    ))
}

pub fn gale(inputs: &Inputs, opts: &Options) -> Result<Report> {
    let r = realization(inputs);
    let n = opts
        .n
        .or_else(|| r.as_ref().map(|r| r.angles().len()))
        .ok_or_else(|| Error::Schema("gale needs --n or an angles document".into()))?;
    let d = opts.dim.unwrap_or(4);
    let facets = gale_facets(n, d)?;
    let mut details = json!({
        "n": n,
        "dimension": d,
        "facets": labels(&facets),
        "count": facets.len(),
    });
    let verdict = match r {
        Some(r) if r.angles().len() == n && d == 4 => {
            let mut disagreements = Vec::new();
            let mut checked = 0usize;
            for subset in (0..n).combinations(d) {
                checked += 1;
                let geometric = verify_facets_geometric(r.config(), &subset)?;
                if geometric != facets.contains(&subset) {
                    disagreements.push(cell_label(&subset));
                }
            }
            details["geometric_check"] = json!({
                "subsets_checked": checked,
                "disagreements": disagreements,
            });
            Verdict::from_bool(disagreements.is_empty())
        }
        _ => Verdict::Output,
    };
    Ok(Report::new("gale", verdict, details, &inputs.provenance))
}

pub fn polar(inputs: &Inputs, _: &Options) -> Result<Report> {
    let r = realization(inputs).ok_or_else(|| missing("angles"))?;
    if !contains_origin_interior(r.config())? {
        return Ok(Report::new("polar", Verdict::Fail, json!({ "origin_interior": false }), &inputs.provenance));
    }
    let p = build_cyclic_polar(&r)?;
    let vertices: Vec<Value> = p
        .combinatorics
        .vertices()
        .iter()
        .zip(&p.vertex_coords)
        .map(|(v, c)| json!({ "vertex": cell_label(v), "coords": c.iter().map(sqrt2_value).collect::<Vec<_>>() }))
        .collect();
    let doc = Document::SimplePolytope(PolytopeDoc::from_polytope(&p.combinatorics));
    Ok(Report::new(
        "polar",
        Verdict::Pass,
        json!({
            "origin_interior": true,
            "num_vertices": p.combinatorics.vertices().len(),
            "num_edges": p.combinatorics.edges().len(),
            "vertices": vertices,
            "facet_functionals": p.facet_functionals.iter()
                .map(|f| f.iter().map(sqrt2_value).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
            "document": serde_json::to_value(&doc).expect("documents serialize"),
        }),
        &inputs.provenance,
    ))
}

pub fn orient_tuples(inputs: &Inputs, _: &Options) -> Result<Report> {
    // with angles or a sphere the tuples are computed and any orientation
    // document is a reference; a bare polytope reports its own document
    let computes = inputs.angles.is_some() || inputs.polytope.is_none();
    let s =
        setting(&Inputs { orientation: if computes { None } else { inputs.orientation.clone() }, ..inputs.clone() })?;
    let reference = if computes { inputs.orientation.as_ref() } else { None };
    let cells = s.base.cells();
    let computed = &s.classes[0].1;
    let coherent = incoherent_pairs(cells, &computed.tuples).is_empty();
    let mut details = json!({
        "source": s.classes[0].0,
        "tuples": orientation_value(computed),
        "coherent": coherent,
    });
    if s.classes.len() > 1 {
        details["reversed_tuples"] = orientation_value(&s.classes[1].1);
    }
    let mut verdict = Verdict::from_bool(coherent);
    if let Some(reference) = reference {
        let cmp = compare_orientations(computed, &reference.tuples);
        let mismatched = |flags: &[bool]| -> Vec<String> {
            reference.tuples.iter().zip(flags).filter(|(_, &ok)| !ok).map(|(t, _)| cell_label(t)).collect()
        };
        let agreement = match cmp.agreement() {
            OrientationAgreement::Direct => "direct",
            OrientationAgreement::Reversed => "reversed",
            OrientationAgreement::Partial => "partial",
        };
        let incoherent: Vec<Value> = if reference.tuples.len() == cells.len() {
            align(reference, cells)
                .map(|o| {
                    incoherent_pairs(cells, &o.tuples)
                        .into_iter()
                        .map(|(a, b)| json!([cell_label(&o.tuples[a]), cell_label(&o.tuples[b])]))
                        .collect()
                })
                .unwrap_or_default()
        } else {
            Vec::new()
        };
        details["reference"] = json!({
            "agreement": agreement,
            "tuples": orientation_value(reference),
            "direct_matches": cmp.direct.iter().filter(|&&m| m).count(),
            "reversed_matches": cmp.reversed.iter().filter(|&&m| m).count(),
            "direct_mismatches": mismatched(&cmp.direct),
            "reversed_mismatches": mismatched(&cmp.reversed),
            "incoherent_pairs": incoherent,
        });
        verdict = Verdict::from_bool(coherent && cmp.agreement() != OrientationAgreement::Partial);
    }
    if let Some(p) = &s.polar {
        details["num_vertices"] = json!(p.combinatorics.vertices().len());
    }
    Ok(Report::new("orient-tuples", verdict, details, &inputs.provenance))
}

pub fn check_unimodular(inputs: &Inputs, _: &Options) -> Result<Report> {
    let base = match setting(inputs) {
        Ok(s) => s.base,
        Err(_) => match (&inputs.polytope, &inputs.complex) {
            (Some(p), _) => Base::Polytope(p.clone()),
            (None, Some(k)) => Base::Sphere(k.clone()),
            _ => return Err(missing("polytope, angles or simplicial complex")),
        },
    };
    let pair = pair_of(inputs, &base)?;
    let r = unimodularity_check(&pair);
    let dets: Vec<Value> = pair
        .cells()
        .iter()
        .zip(&r.determinants)
        .map(|(c, d)| json!({ "vertex": cell_label(c), "det": d.to_string() }))
        .collect();
    Ok(Report::new(
        "check-unimodular",
        Verdict::from_bool(r.passed()),
        json!({
            "cells": pair.cells().len(),
            "determinants": dets,
            "offending": r.offending.iter().map(|&i| cell_label(&pair.cells()[i])).collect::<Vec<_>>(),
        }),
        &inputs.provenance,
    ))
}

fn pattern_value(o: &OrientationData, p: &SignPattern) -> Value {
    let signs: Vec<Value> =
        o.tuples.iter().zip(&p.0).map(|(t, s)| json!({ "vertex": cell_label(t), "sign": s })).collect();
    json!({
        "signs": signs,
        "negative": p.negative_cells().iter().map(|&i| cell_label(&o.tuples[i])).collect::<Vec<_>>(),
        "all_positive": p.all_positive(),
    })
}

fn sign_classes(inputs: &Inputs) -> Result<(Vec<Value>, bool)> {
    let s = setting(inputs)?;
    let pair = pair_of(inputs, &s.base)?;
    let mut any = false;
    let mut out = Vec::new();
    for (name, o) in &s.classes {
        let r = almost_complex_check(&pair, o)?;
        any |= r.holds();
        let mut v = pattern_value(o, &r.pattern);
        v["orientation"] = json!(name);
        out.push(v);
    }
    Ok((out, any))
}

pub fn signs(inputs: &Inputs, _: &Options) -> Result<Report> {
    let (classes, any) = sign_classes(inputs)?;
    Ok(Report::new("signs", Verdict::from_bool(any), json!({ "classes": classes }), &inputs.provenance))
}

pub fn almost_complex(inputs: &Inputs, _: &Options) -> Result<Report> {
    let (classes, any) = sign_classes(inputs)?;
    Ok(Report::new(
        "almost-complex",
        Verdict::from_bool(any),
        json!({ "almost_complex": any, "classes": classes }),
        &inputs.provenance,
    ))
}

pub fn flip_solve(inputs: &Inputs, _: &Options) -> Result<Report> {
    let s = setting(inputs)?;
    let pair = pair_of(inputs, &s.base)?;
    let mut any = false;
    let mut classes = Vec::new();
    for (name, o) in &s.classes {
        let v = match solve_flips(&pair, o)? {
            FlipSolution::Feasible { flip, dimension } => {
                any = true;
                let flipped: Vec<usize> = (0..flip.0.len()).filter(|&i| flip.0[i] < 0).map(|i| i + 1).collect();
                let map = crate::charmap::apply_flip(&pair, &flip)?;
                json!({
                    "orientation": name,
                    "feasible": true,
                    "flipped_facets": flipped,
                    "solution_space_dimension": dimension,
                    "flipped_map": serde_json::to_value(CharmapDoc::from_map(&map)).expect("documents serialize"),
                })
            }
            FlipSolution::Infeasible { contradictory_cells } => json!({
                "orientation": name,
                "feasible": false,
                "contradictory_vertices": contradictory_cells.iter()
                    .map(|&i| cell_label(&o.tuples[i]))
                    .collect::<Vec<_>>(),
            }),
        };
        classes.push(v);
    }
    Ok(Report::new(
        "flip-solve",
        Verdict::from_bool(any),
        json!({ "feasible": any, "classes": classes }),
        &inputs.provenance,
    ))
}

pub fn fan_check(inputs: &Inputs, _: &Options) -> Result<Report> {
    let base = match (&inputs.complex, &inputs.polytope) {
        (Some(k), _) => Base::Sphere(k.clone()),
        (None, Some(p)) => Base::Polytope(p.clone()),
        _ => setting(inputs)?.base,
    };
    let pair = pair_of(inputs, &base)?;
    let cones = cones_from_pair(&pair)?;
    let report = fan_properness(&cones);
    let label = |i: usize| cell_label(&cones[i].labels);
    let overlaps: Vec<Value> = report
        .overlaps
        .iter()
        .map(|o| {
            json!({
                "first": label(o.first),
                "second": label(o.second),
                "shared_labels": o.shared_labels,
                "witness": o.witness.iter().map(rational_value).collect::<Vec<_>>(),
            })
        })
        .collect();
    let coverage = sample_coverage(&cones, 1)?;
    Ok(Report::new(
        "fan-check",
        Verdict::from_bool(report.proper()),
        json!({
            "cones": cones.len(),
            "pairs_checked": report.pairs_checked,
            "proper": report.proper(),
            "overlaps": overlaps,
            "ridge_mismatches": report.ridge_mismatches.iter()
                .map(|&(a, b)| json!([label(a), label(b)]))
                .collect::<Vec<_>>(),
            "non_smooth": report.non_smooth.iter().map(|&i| label(i)).collect::<Vec<_>>(),
            "coverage_heuristic": {
                "radius": 1,
                "directions": coverage.directions,
                "uncovered": coverage.uncovered,
                "multiply_covered": coverage.multiply_covered,
                "on_boundary": coverage.boundary,
            },
        }),
        &inputs.provenance,
    ))
}

fn search_config(inputs: &Inputs, opts: &Options) -> Result<SearchConfig> {
    let mut cfg = match (&inputs.search, &opts.base_vertex) {
        (Some(c), _) => c.clone(),
        (None, Some(b)) => SearchConfig::new(1, b.clone(), Goal::Unimodular),
        (None, None) => return Err(missing("search_config or --base-vertex")),
    };
    if let Some(b) = opts.bound {
        cfg.bound = b;
    }
    if let Some(g) = opts.goal {
        cfg.goal = g;
    }
    if let Some(b) = &opts.base_vertex {
        cfg.base_vertex = b.clone();
    }
    if let Some(n) = opts.node_budget {
        cfg.node_budget = n;
    }
    if opts.solution_cap.is_some() {
        cfg.solution_cap = opts.solution_cap;
    }
    cfg.jobs = opts.jobs;
    Ok(cfg)
}

pub fn search_cmd(inputs: &Inputs, opts: &Options) -> Result<Report> {
    let s = setting(inputs)?;
    let cfg = search_config(inputs, opts)?;
    let (_, orientation) = &s.classes[0];
    let result = search(&s.base, orientation, &cfg)?;

    let mut details = json!({
        "goal": match cfg.goal { Goal::Unimodular => "unimodular", Goal::AllPositive => "all-positive" },
        "bound": cfg.bound,
        "base_tuple": cell_label(&result.base_tuple),
        "facet_order": one_based(&result.facet_order),
        "nodes": result.nodes,
        "node_budget": cfg.node_budget,
        "exhaustive": result.exhaustive,
        "budget_exceeded": result.budget_exceeded,
        "solution_count": result.solutions.len(),
        "solutions": result.solutions.iter()
            .map(|m| serde_json::to_value(CharmapDoc::from_map(m)).expect("documents serialize"))
            .collect::<Vec<_>>(),
    });
    if let Some(map) = &inputs.map {
        let pair = CharacteristicPair::new(s.base.clone(), map.clone())?;
        let normalized = normalize_map(&pair, &cfg.base_vertex, orientation)?;
        details["input_map_normalized"] =
            serde_json::to_value(CharmapDoc::from_map(&normalized)).expect("documents serialize");
        details["input_map_found"] = json!(result.solutions.contains(&normalized));
    }
    Ok(Report::new("search", Verdict::Output, details, &inputs.provenance))
}
