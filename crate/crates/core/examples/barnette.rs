//! Combinatorics of Barnette's sphere: counts, orientation, unimodularity.

use qtoric::charmap::{unimodularity_check, Base, CharacteristicPair};
use qtoric::cli::Inputs;
use qtoric::complexes::{coherent_orientation, f_vector, h_vector, pseudomanifold_check, Orientability};

fn main() -> qtoric::Result<()> {
    let inputs = Inputs::load("fixtures:barnette")?;
    let k = inputs.complex.expect("fixture has a complex");

    let f = f_vector(&k);
    println!("f = {:?}, chi = {}", f.as_slice(), f.euler_characteristic());
    println!("h = {:?}", h_vector(&f, k.dimension() + 1)?);
    println!("pseudomanifold: {}", pseudomanifold_check(&k).passed());

    match coherent_orientation(&k)? {
        Orientability::Orientable(o) => println!("orientable, first tuple {:?}", o.tuples[0]),
        Orientability::NonOrientable { cycle } => println!("non-orientable along {cycle:?}"),
    }

    let pair = CharacteristicPair::new(Base::Sphere(k), inputs.map.expect("fixture has a map"))?;
    println!("unimodular: {}", unimodularity_check(&pair).passed());
    Ok(())
}
