//! Lattice operations on subspaces of ℂ³ with exact Gaussian-rational
//! coordinates.

use qlat::lattice::{Side, Subspace};
use qlat::linalg::GaussianRational as Q;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let v = |xs: &[(i64, i64)]| xs.iter().map(|&(re, im)| Q::from_integers(re, im)).collect::<Vec<_>>();

    let plane = Subspace::span(&[v(&[(1, 0), (0, 1), (0, 0)]), v(&[(0, 0), (1, 0), (1, 0)])], 3)?;
    let line = Subspace::span(&[v(&[(1, 0), (1, 0), (1, 0)])], 3)?;

    println!("plane      : {plane}");
    println!("line       : {line}");
    println!("~plane     : {}", plane.ortho());
    println!("plane & line: {}", plane.meet(&line)?);
    println!("plane | line: {}", plane.join(&line)?);
    println!("line <= plane: {}", line.leq(&plane)?);
    println!("d(plane) = {}", plane.normalized_dim().value());

    // valuation: d(a) + d(b) = d(a|b) + d(a&b)
    let (j, m) = (plane.join(&line)?, plane.meet(&line)?);
    println!("valuation: {} + {} = {} + {}", plane.dim(), line.dim(), j.dim(), m.dim());

    let lifted = line.tensor_embed(2, Side::Right)?;
    println!("line (x) C^2: {lifted}");
    println!("json: {}", serde_json::to_string(&line)?);
    Ok(())
}
