//! Embedding ℂⁿ into ℂⁿ ⊗ ℂᵏ is a lattice homomorphism, so counterexamples
//! lift to larger registers.

use qlat::formula::law;
use qlat::search::{falsify, lift_counterexample};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let v = falsify(&law("distributivity")?, 2, 1000, 5, None)?;
    let gap = v.gap.as_ref().expect("counterexample in C^2");
    println!("C^2: lhs dim {}, rhs dim {}", gap.lhs.dim(), gap.rhs.dim());
    for k in [2, 3, 4] {
        let lifted = lift_counterexample(&v, k)?;
        let g = lifted.gap.as_ref().expect("lifted gap");
        println!("C^{}: lhs dim {}, rhs dim {}, replays = {}", lifted.ambient, g.lhs.dim(), g.rhs.dim(), lifted.replay()?);
    }
    Ok(())
}
