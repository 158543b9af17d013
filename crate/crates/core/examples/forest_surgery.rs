// Fixed point sums glue boundary trees along an edge; regular orbit sums
// take disjoint unions.

use polar_core::forest5::{self, find_edge, ForestData};

pub fn run_example() -> polar_core::Result<()> {
    let a = ForestData::path(&[[1, 0], [0, 1], [1, 1]]);
    let b = ForestData::path(&[[1, 0], [0, 1], [1, 2]]);
    let ea = find_edge(&a, [1, 0], [0, 1]).expect("edge present");
    let eb = find_edge(&b, [1, 0], [0, 1]).expect("edge present");

    let star = forest5::fixed_point_sum(&a, ea, &b, eb)?;
    println!("fixed point sum: {:?}", star.components[0]);
    println!("  {} with h2 rank {}", forest5::diffeo_type(&star)?, forest5::h2_rank(&star)?);

    let edge = ForestData::path(&[[1, 0], [0, 1]]);
    let pair = forest5::regular_orbit_sum(&edge, &edge)?;
    println!("S5 along a principal orbit with S5: {}", forest5::diffeo_type(&pair)?);

    let mixed = forest5::regular_orbit_sum(&star, &a)?;
    let section = forest5::section_descriptor(&mixed)?;
    println!("{} with section {section}", forest5::diffeo_type(&mixed)?);
    Ok(())
}

fn main() -> polar_core::Result<()> {
    run_example()
}
