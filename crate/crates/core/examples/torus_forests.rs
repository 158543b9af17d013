// The T² actions on S³×ₖS² and what their boundary trees say about them.

use polar_core::forest5::{self, ForestData, Tree};

pub fn run_example() -> polar_core::Result<()> {
    for k in 0..5 {
        let f = ForestData::path(&[[1, 0], [0, 1], [1, k]]);
        let inv = forest5::invariants(&f)?;
        let section = forest5::section_descriptor(&f)?;
        println!(
            "k={k}: {} spin={:?} section={section} polar group of order {}",
            inv.diffeo, inv.spin, inv.polar_group_order
        );
    }

    let blocks = ForestData::new(vec![Tree::isolated([1, 0]), Tree::isolated([0, 1])]);
    println!("two complementary blocks: {}", forest5::diffeo_type(&blocks)?);

    let twisted = ForestData::new(vec![Tree::isolated([1, 0]), Tree::isolated([1, 2])]);
    println!("blocks (1,0),(1,2): pi1 = {}", forest5::fundamental_group(&twisted)?);

    let star = ForestData::single(Tree::star([0, 1], &[[1, 0], [1, 1], [1, 2]]));
    println!(
        "star: {} (canonical {:?})",
        forest5::diffeo_type(&star)?,
        forest5::canonicalize(&star)?.components[0].slopes
    );
    Ok(())
}

fn main() -> polar_core::Result<()> {
    run_example()
}
