//! Parse, print, normalize and evaluate formulas.

use qlat::formula::{eval, eval_equation, parse_equation, parse_formula, restrict, to_nnf, Assignment};
use qlat::lattice::Subspace;
use qlat::linalg::GaussianRational as Q;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let line = |x: i64, y: i64| Subspace::span(&[vec![Q::from_integers(x, 0), Q::from_integers(y, 0)]], 2);
    let a = Assignment::from_pairs(2, [("p", line(1, 0)?), ("q", line(0, 1)?), ("r", line(1, 1)?)])?;

    for src in ["p | ~p", "p & ~p", "p & (q | r)", "p & q | p & r", "~(p & ~(q | r))"] {
        let f = parse_formula(src)?;
        println!("{:<20} nnf {:<28} = {}", f.to_string(), to_nnf(&f).to_string(), eval(&f, &a)?);
    }

    let eq = parse_equation("p & (q | r) <= p & q | p & r")?;
    let v = eval_equation(&eq, &a)?;
    println!("{eq}: holds = {} (lhs dim {}, rhs dim {})", v.holds, v.lhs.dim(), v.rhs.dim());

    let restricted = restrict(&parse_formula("~p | q")?, &parse_formula("r")?);
    println!("(~p | q) restricted to r: {restricted}");
    Ok(())
}
