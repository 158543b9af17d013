// A T³ action on S³×S³ descends to a T² action on S³×ₖS².

use polar_core::data::{quotient, Forest3};
use polar_core::forest5;
use polar_core::lattice::Slope3;

pub fn run_example() -> polar_core::Result<()> {
    let marking = Forest3::path(&[[0, 1, 0], [0, 0, 1], [1, 0, 0]]);
    for k in 0..5 {
        let f = quotient(&marking, Slope3::new(1, -1, k)?)?;
        println!(
            "k={k}: {:?} -> {}",
            f.components[0].slopes,
            forest5::diffeo_type(&f)?
        );
    }
    Ok(())
}

fn main() -> polar_core::Result<()> {
    run_example()
}
