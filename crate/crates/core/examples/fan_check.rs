//! Pairwise properness of the cones spanned by a characteristic map.

use qtoric::charmap::{cell_label, Base, CharacteristicPair};
use qtoric::cli::Inputs;
use qtoric::fanchk::{cones_from_pair, fan_properness};

fn check(name: &str) -> qtoric::Result<()> {
    let inputs = Inputs::load(&format!("fixtures:{name}"))?;
    let base = match (inputs.polytope, inputs.complex) {
        (Some(p), _) => Base::Polytope(p),
        (None, Some(k)) => Base::Sphere(k),
        (None, None) => unreachable!("every fixture used here has a base"),
    };
    let pair = CharacteristicPair::new(base, inputs.map.expect("fixture has a map"))?;
    let cones = cones_from_pair(&pair)?;
    let report = fan_properness(&cones);
    println!("{name}: {} pairs, proper: {}", report.pairs_checked, report.proper());
    if let Some(o) = report.overlaps.first() {
        let w: Vec<String> = o.witness.iter().map(|x| x.to_string()).collect();
        println!(
            "  cones {} and {} share interior point ({})",
            cell_label(&cones[o.first].labels),
            cell_label(&cones[o.second].labels),
            w.join(", ")
        );
    }
    Ok(())
}

fn main() -> qtoric::Result<()> {
    for name in ["cross4", "pentagon", "barnette"] {
        check(name)?;
    }
    Ok(())
}
