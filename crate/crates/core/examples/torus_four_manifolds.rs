// T² actions on simply connected 4-manifolds as cycles of slopes.

use polar_core::cycle4::{self, CycleData};

pub fn run_example() -> polar_core::Result<()> {
    let bigon = CycleData::new(vec![[1, 0], [0, 1]]);
    let triangle = CycleData::new(vec![[1, 0], [1, 1], [0, 1]]);
    println!("bigon: {}", cycle4::recognize_basic(&bigon)?);
    println!("triangle: {}", cycle4::recognize_basic(&triangle)?);
    for k in 0..4 {
        let square = CycleData::new(vec![[1, 0], [0, 1], [1, k], [0, 1]]);
        println!("square k={k}: {}", cycle4::recognize_basic(&square)?);
    }

    let sum = cycle4::fixed_point_sum(&triangle, 0, &CycleData::new(vec![[1, 1], [1, 0], [0, 1]]), 0)?;
    println!(
        "triangle # triangle: {:?}, b2 {}, {}",
        sum.slopes,
        cycle4::b2(&sum)?,
        cycle4::recognize_basic(&sum)?
    );
    Ok(())
}

fn main() -> polar_core::Result<()> {
    run_example()
}
