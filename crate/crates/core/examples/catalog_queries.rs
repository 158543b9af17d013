// Looking up known actions, and circle actions from their chambers.

use polar_core::catalog::{self, CircleChamberData, Query};

pub fn run_example() -> polar_core::Result<()> {
    println!("catalog version {}", catalog::version());
    for e in catalog::query(&Query::default().dimension(5).nonneg(true)) {
        println!("{:>9} on {:<10} cohomogeneity {}", e.group, e.manifold, e.cohomogeneity);
    }

    let chambers = [("D4", 0, true, 1), ("S3 x I", 0, true, 2), ("Euler 3 disc bundle", 1, false, 1)];
    for (name, b2, spin, p) in chambers {
        let d = CircleChamberData {
            b2,
            spin,
            boundary_components: p,
            simply_connected: true,
        };
        println!("circle action with chamber {name}: {}", catalog::circle_action_type(&d)?);
    }
    Ok(())
}

fn main() -> polar_core::Result<()> {
    run_example()
}
