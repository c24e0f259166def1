//! Looks for sign flips that would make every vertex of a pair over the
//! polar of C(7,4) positive, and prints the GF(2) certificate when none exist.

use qtoric::charmap::{cell_label, solve_flips, Base, CharacteristicPair, FlipSolution};
use qtoric::cli::Inputs;
use qtoric::cyclic::{build_cyclic_polar, vertex_orientation_tuples, CaratheodoryRealization};

fn main() -> qtoric::Result<()> {
    let inputs = Inputs::load("fixtures:d47")?;
    let r = CaratheodoryRealization::new(inputs.angles.expect("fixture has angles"));
    let polar = build_cyclic_polar(&r)?;
    let o = vertex_orientation_tuples(&polar)?;
    let pair = CharacteristicPair::new(Base::Polytope(polar.combinatorics), inputs.map.expect("fixture has a map"))?;

    match solve_flips(&pair, &o)? {
        FlipSolution::Feasible { flip, dimension } => {
            println!("flip {:?} works; {dimension}-dimensional solution space", flip.0)
        }
        FlipSolution::Infeasible { contradictory_cells } => {
            let cells: Vec<String> = contradictory_cells.iter().map(|&c| cell_label(&pair.cells()[c])).collect();
            println!("no flip exists; these vertex equations sum to 0 = 1: {}", cells.join(" "));
        }
    }
    Ok(())
}
