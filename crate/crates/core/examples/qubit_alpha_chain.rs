//! Iterated α separates n-qubit registers: αⁿ⁺¹ = 0 in ℂ^(2ⁿ) but not in
//! ℂ^(2ⁿ⁺¹).

use qlat::formula::alpha_iter;
use qlat::search::{chained_alpha_witness, qubit_alpha_separator, SearchConfig};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for m in 1..=4 {
        let f = alpha_iter(m)?;
        println!("alpha^{m}: {} variables, printed size {}, shared size {}", f.vars().len(), f.tree_size(), f.dag_size());
    }

    let w = chained_alpha_witness(3, 8)?;
    println!("chained witness in C^8: level dims {:?}", w.level_dims);

    let config = SearchConfig { alpha_holds_trials: 100, ..SearchConfig::default() };
    for n in 0..=2 {
        let cert = qubit_alpha_separator(n, 1, &config)?;
        println!(
            "C^{} vs C^{}: dim alpha^{} at the witness = {}",
            cert.low_dim,
            cert.high_dim,
            n + 1,
            cert.fails_witness.gap.as_ref().expect("gap").lhs.dim()
        );
    }
    Ok(())
}
