//! Turns a bundle of documents into domain objects.

use crate::charmap::CharacteristicMap;
use crate::charsearch::SearchConfig;
use crate::complexes::{OrientationData, SimplePolytope, SimplicialComplex};
use crate::cyclic::AngleSpec;
use crate::error::{Error, Result};

use super::document::{parse_bundle, Document};
use super::fixtures::fixture;

#[derive(Clone, Debug, Default)]
pub struct Inputs {
    pub provenance: String,
    pub complex: Option<SimplicialComplex>,
    pub polytope: Option<SimplePolytope>,
    pub map: Option<CharacteristicMap>,
    /// As written in the document: zero-based, not aligned with any cell list.
    pub orientation: Option<OrientationData>,
    pub angles: Option<AngleSpec>,
    pub search: Option<SearchConfig>,
}

fn place<T>(slot: &mut Option<T>, value: T, kind: &str) -> Result<()> {
    if slot.is_some() {
        return Err(Error::Schema(format!("bundle holds more than one `{kind}` document")));
    }
    *slot = Some(value);
    Ok(())
}

impl Inputs {
    pub fn from_documents(docs: &[Document], provenance: &str) -> Result<Self> {
        let mut inputs = Inputs { provenance: provenance.to_string(), ..Inputs::default() };
        for doc in docs {
            match doc {
                Document::SimplicialComplex(d) => place(&mut inputs.complex, d.to_complex()?, "simplicial_complex")?,
                Document::SimplePolytope(d) => place(&mut inputs.polytope, d.to_polytope()?, "simple_polytope")?,
                Document::Charmap(d) => place(&mut inputs.map, d.to_map()?, "charmap")?,
                Document::Orientation(d) => place(&mut inputs.orientation, d.to_orientation()?, "orientation")?,
                Document::Angles(d) => place(&mut inputs.angles, d.to_angles()?, "angles")?,
                Document::SearchConfig(d) => place(&mut inputs.search, d.to_config()?, "search_config")?,
            }
        }
        Ok(inputs)
    }

    pub fn from_text(text: &str, provenance: &str) -> Result<Self> {
        Inputs::from_documents(&parse_bundle(text)?, provenance)
    }

    /// `fixtures:<name>` or a file path.
    pub fn load(source: &str) -> Result<Self> {
        if let Some(name) = source.strip_prefix("fixtures:") {
            let text = fixture(name)
                .ok_or_else(|| Error::Io { path: source.to_string(), message: "no such fixture".into() })?;
            return Inputs::from_text(text, &format!("fixture:{name}"));
        }
        let text = std::fs::read_to_string(source)
            .map_err(|e| Error::Io { path: source.to_string(), message: e.to_string() })?;
        Inputs::from_text(&text, &format!("file:{source}"))
    }
}
