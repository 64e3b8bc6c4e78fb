//! Diagrams, generators, relations and Jones-Wenzl projectors over ℚ(d).

use qlat::tl::{chebyshev, generator_e, jones_wenzl, markov_trace, relation_checks, PlanarDiagram, RationalFunction};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for n in 0..=6 {
        println!("TL_{n}: {} basis diagrams", PlanarDiagram::enumerate(n).len());
    }
    for n in 0..=4 {
        println!("Delta_{n} = {}", chebyshev(n));
    }

    let e1 = generator_e(3, 1)?;
    let e2 = generator_e(3, 2)?;
    println!("e1 = {e1}");
    println!("e1 e2 e1 = {}", e1.mul(&e2)?.mul(&e1)?);
    let checks = relation_checks(5)?;
    println!("TL_5 relations: {}/{} hold", checks.iter().filter(|c| c.holds).count(), checks.len());

    for n in 1..=4 {
        let p = jones_wenzl(n)?;
        println!("p_{n}: {} terms, tr = {}", p.len(), markov_trace(&p));
    }
    println!("p_2 = {}", jones_wenzl(2)?);
    println!("tr(e_1) = {}", markov_trace(&generator_e(2, 1)?));
    println!("d^-2 = {}", RationalFunction::d_pow(-2));
    Ok(())
}
