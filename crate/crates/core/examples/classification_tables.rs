// Every class of small boundary forests, with invariants.

use polar_core::enumerate::{enumerate_so3, enumerate_t2_forests};

pub fn run_example() -> polar_core::Result<()> {
    for (e, c) in [(1, 1), (2, 1), (3, 1), (0, 2), (1, 2)] {
        let table = enumerate_t2_forests(e, c, 2);
        println!("E={e} c={c} height<=2: {} classes", table.rows.len());
        for r in table.rows.iter().filter(|r| r.nonneg) {
            println!("  {:?} {}", r.forest.components, r.diffeo);
        }
    }
    for r in enumerate_so3(5) {
        println!("5 sides: {} {} genus {}", r.word, r.so3_type, r.genus);
    }
    Ok(())
}

fn main() -> polar_core::Result<()> {
    run_example()
}
