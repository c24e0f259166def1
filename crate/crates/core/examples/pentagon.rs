//! Sign pattern of a small quasitoric pair over the pentagon.

use qtoric::charmap::{
    almost_complex_check, cell_label, unimodularity_check, Base, CharacteristicMap, CharacteristicPair,
};
use qtoric::complexes::{OrientationData, SimplePolytope};

fn main() -> qtoric::Result<()> {
    let edges: Vec<Vec<usize>> = (0..5).map(|i| vec![i, (i + 1) % 5]).collect();
    let pentagon = SimplePolytope::new(5, 2, edges.clone())?;
    let map = CharacteristicMap::from_i64(2, &[&[0, -1], &[1, 1], &[1, 2], &[-2, -3], &[-1, -2]])?;
    let pair = CharacteristicPair::new(Base::Polytope(pentagon), map)?;

    let unimodular = unimodularity_check(&pair);
    println!("unimodular: {}", unimodular.passed());

    let report = almost_complex_check(&pair, &OrientationData::new(edges))?;
    for (cell, sign) in pair.cells().iter().zip(&report.pattern.0) {
        println!("  vertex {}: {:+}", cell_label(cell), sign);
    }
    println!("almost complex: {}", report.holds());
    Ok(())
}
