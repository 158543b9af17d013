// SO(3) actions on 5-manifolds: marked polygons, their classes, and the
// split into Brieskorn and Wu sums.

use polar_core::polygon5::{self, find_vertex, Letter, PolygonWord};

pub fn run_example() -> polar_core::Result<()> {
    for n in 2..=7 {
        let classes = polygon5::enumerate(n);
        let types: Vec<String> = classes
            .iter()
            .map(|w| polygon5::decompose(w).map(|d| d.so3_type.to_string()))
            .collect::<Result<_, _>>()?;
        println!("{n} sides: {} classes {:?}", classes.len(), types);
    }

    let wu = PolygonWord::new(vec![Letter::E12, Letter::E23, Letter::E13]);
    let at = find_vertex(&wu, Letter::E12, Letter::E13).expect("vertex present");
    let ww = polygon5::fixed_point_sum(&wu, at, &wu, at)?;
    let d = polygon5::decompose(&ww)?;
    println!(
        "W # W = {ww} of type {}, genus {}, orbifold Euler {}",
        d.so3_type,
        polygon5::section_genus(&ww)?,
        polygon5::orbifold_euler(&ww)?
    );
    for step in d.trace {
        println!("  drop side {} ({}) -> {}", step.position, step.letter, step.result);
    }
    Ok(())
}

fn main() -> polar_core::Result<()> {
    run_example()
}
