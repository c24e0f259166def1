//! Exhaustive search for characteristic maps with small entries.

use qtoric::charmap::{Base, CharacteristicPair};
use qtoric::charsearch::{search, Goal, SearchConfig};
use qtoric::complexes::{OrientationData, SimplePolytope};

fn main() -> qtoric::Result<()> {
    let cells: Vec<Vec<usize>> = (0..5).map(|i| vec![i, (i + 1) % 5]).collect();
    let base = Base::Polytope(SimplePolytope::new(5, 2, cells.clone())?);
    let o = OrientationData::new(cells);

    for goal in [Goal::Unimodular, Goal::AllPositive] {
        for bound in 1..=2 {
            let r = search(&base, &o, &SearchConfig::new(bound, vec![0, 1], goal))?;
            println!("{goal:?} B={bound}: {} maps, {} nodes, exhaustive {}", r.solutions.len(), r.nodes, r.exhaustive);
        }
    }

    let r = search(&base, &o, &SearchConfig::new(2, vec![0, 1], Goal::AllPositive))?;
    if let Some(m) = r.solutions.first() {
        let pair = CharacteristicPair::new(base.clone(), m.clone())?;
        println!("first: {:?}", pair.map().vectors());
    }
    Ok(())
}
