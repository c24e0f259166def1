//! The cyclic polytope C(7,4) on the Carathéodory curve, its polar and the
//! orientation that the polar's geometry induces on each vertex.

use qtoric::charmap::cell_label;
use qtoric::cyclic::{
    build_cyclic_polar, gale_facets, geometric_facets, vertex_orientation_tuples, AngleSpec, CaratheodoryRealization,
};

fn main() -> qtoric::Result<()> {
    let r = CaratheodoryRealization::new(AngleSpec::new((0..7).collect())?);
    for (k, p) in r.config().points().iter().enumerate() {
        let coords: Vec<String> = p.iter().map(|x| x.to_string()).collect();
        println!("v{}: ({})", k + 1, coords.join(", "));
    }

    let facets = geometric_facets(r.config())?;
    println!("{} facets, Gale agrees: {}", facets.len(), facets == gale_facets(7, 4)?);

    let polar = build_cyclic_polar(&r)?;
    let o = vertex_orientation_tuples(&polar)?;
    let labels: Vec<String> = o.tuples.iter().map(|t| cell_label(t)).collect();
    println!("polar vertices, positively ordered: {}", labels.join(" "));
    Ok(())
}
