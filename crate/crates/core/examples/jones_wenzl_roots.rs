//! Specializing to d = 2cos(π/r): the projectors exist for n ≤ r−1 and the
//! sequence stops where Δ_{r−1} vanishes.

use qlat::tl::{chebyshev, eval_at_root, generator_e, jw_at_root, markov_trace, root_params};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for r in 3..=6u32 {
        let params = root_params(r)?;
        let tr_e = eval_at_root(&markov_trace(&generator_e(2, 1)?), r)?;
        println!(
            "r = {r}: d = {:.10}, A = {:.6}, tr(e_i) = {tr_e:.10}, Delta_{}(d) = {:.1e}",
            params.d,
            params.a,
            r - 1,
            chebyshev(r as usize - 1).eval_f64(params.d)
        );
        for n in 1..r as usize {
            let p = jw_at_root(n, r)?;
            println!("  p_{n}: {} terms, tr = {:.10}", p.terms.len(), p.markov_trace());
        }
        match jw_at_root(r as usize, r) {
            Ok(_) => println!("  p_{r} unexpectedly exists"),
            Err(e) => println!("  p_{r}: {e}"),
        }
    }
    Ok(())
}
