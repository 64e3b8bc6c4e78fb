//! The nested α term vanishes whenever two of its lines coincide.

use qlat::formula::{distinctness_formula, eval, Assignment};
use qlat::lattice::Subspace;
use qlat::linalg::GaussianRational as Q;
use qlat::search::search_nonvanishing;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let names = ["p", "q", "r", "s"];
    let f = distinctness_formula(&names)?;
    println!("formula has {} nodes printed, {} shared", f.tree_size(), f.dag_size());

    let line = |x: i64, y: i64| Subspace::span(&[vec![Q::from_integers(x, 0), Q::from_integers(y, 0)]], 2);
    let lines = [line(1, 0)?, line(0, 1)?, line(1, 1)?, line(1, 2)?];
    let coincident = Assignment::from_pairs(
        2,
        [("p", lines[0].clone()), ("q", lines[1].clone()), ("r", lines[0].clone()), ("s", lines[3].clone())],
    )?;
    println!("p = r: value {}", eval(&f, &coincident)?);

    match search_nonvanishing(&f, 2, 1, 2000, 3, 3)? {
        Some((a, value, trials)) => {
            println!("distinct lines after {trials} trials give {value}");
            for (k, v) in a.iter() {
                println!("  {k} = {v}");
            }
        }
        None => println!("no nonvanishing quadruple found"),
    }
    Ok(())
}
