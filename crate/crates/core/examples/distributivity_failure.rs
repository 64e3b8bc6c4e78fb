//! Distributivity fails in every ℂᵐ with m ≥ 2: random search finds a
//! counterexample, and the structured triple makes α exactly m/2-dimensional.

use qlat::formula::{alpha, eval, law};
use qlat::search::{falsify, structured_alpha_witness};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let v = falsify(&law("distributivity")?, 2, 1000, 42, None)?;
    println!("{}", v.to_json());

    for m in [2, 4, 6, 8] {
        let a = structured_alpha_witness(m)?;
        println!("C^{m}: dim alpha(p, q, r) = {}", eval(&alpha(), &a)?.dim());
    }

    let modular = falsify(&law("modularity")?, 4, 300, 42, None)?;
    println!("modularity in C^4: {} after {} trials", modular.status, modular.trials_run);
    Ok(())
}
