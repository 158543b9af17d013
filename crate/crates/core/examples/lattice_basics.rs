// Slopes, lattice quotients and changes of coordinates on T².

use polar_core::lattice::{hermite_pair_map, normalize_pair, project_along, smith_quotient, Slope, Slope3};

pub fn run_example() -> polar_core::Result<()> {
    let u = Slope::new(2, 1)?;
    let v = Slope::new(1, 1)?;
    let m = normalize_pair(u, v)?;
    println!("{u} and {v} become {} and {}", m.apply_slope(u)?, m.apply_slope(v)?);

    for pair in [[[1, 0], [0, 1]], [[1, 0], [1, 2]], [[2, 1], [1, 2]]] {
        let slopes: Vec<Slope> = pair.iter().map(|&p| Slope::from_vec(p)).collect::<Result<_, _>>()?;
        println!("Z^2 / <{}, {}> = {}", slopes[0], slopes[1], smith_quotient(&slopes));
    }

    let h = hermite_pair_map([3, 1], [1, 1])?;
    println!("Hermite form of (3,1),(1,1): {:?}", [h.apply([3, 1])?, h.apply([1, 1])?]);

    let w = Slope3::new(1, -1, 2)?;
    for e in [[1, 0, 0], [0, 1, 0], [0, 0, 1]] {
        println!("{e:?} mod <(1,-1,2)> = {}", project_along(w, Slope3::from_vec(e)?)?);
    }
    Ok(())
}

fn main() -> polar_core::Result<()> {
    run_example()
}
