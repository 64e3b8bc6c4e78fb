//! The m-distributive law holds in ℂᵐ and fails in ℂᵐ⁺¹.

use qlat::search::{separate_dims, SearchConfig};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let config = SearchConfig::default();
    for m in 1..=3 {
        let cert = separate_dims(m, m + 1, 7, &config)?;
        let gap = cert.fails_witness.gap.as_ref().expect("counterexample");
        println!(
            "C^{} vs C^{}: {} trials hold, fails at trial {} (lhs dim {}, rhs dim {}), verified = {}",
            cert.low_dim,
            cert.high_dim,
            cert.holds_evidence.trials_run,
            cert.fails_witness.trials_run,
            gap.lhs.dim(),
            gap.rhs.dim(),
            cert.verify()?
        );
    }
    Ok(())
}
