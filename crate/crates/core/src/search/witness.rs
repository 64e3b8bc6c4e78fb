use crate::formula::{alpha_level_vars, alpha_levels, Assignment, Evaluator, Formula};
use crate::lattice::{random_subspace_with, Subspace};
use crate::linalg::GaussianRational;

use super::SearchError;

/// The half-dimension triple inside `beta`: with b₁..b₂ₕ the canonical basis
/// of β, p = span(b₁..bₕ), q = span(bₕ₊₁..b₂ₕ), r = span(bᵢ + bₕ₊ᵢ). The three
/// pairwise meets are 𝟎 and α(p, q, r) relative to β has dimension h.
pub fn structured_triple_in(beta: &Subspace) -> Result<[Subspace; 3], SearchError> {
    let m = beta.dim();
    if m == 0 || m % 2 != 0 {
        return Err(SearchError::OddDimension(m));
    }
    let h = m / 2;
    let n = beta.ambient();
    let rows = beta.basis().row_vecs();
    let p = Subspace::span(&rows[..h], n)?;
    let q = Subspace::span(&rows[h..], n)?;
    let sums: Vec<Vec<GaussianRational>> =
        (0..h).map(|i| rows[i].iter().zip(&rows[h + i]).map(|(a, b)| a + b).collect()).collect();
    let r = Subspace::span(&sums, n)?;
    Ok([p, q, r])
}

/// p = span(e₁..e_{m/2}), q = span(e_{m/2+1}..e_m), r = span(eᵢ + e_{m/2+i})
/// in ℂᵐ, bound to the variables p, q, r.
pub fn structured_alpha_witness(m: usize) -> Result<Assignment, SearchError> {
    if m == 0 || m % 2 != 0 {
        return Err(SearchError::OddDimension(m));
    }
    let [p, q, r] = structured_triple_in(&Subspace::full(m)?)?;
    Ok(Assignment::from_pairs(m, [("p", p), ("q", q), ("r", r)])?)
}

/// A witness for αᵏ built level by level, with the value of every level.
#[derive(Debug, Clone)]
pub struct ChainedWitness {
    pub assignment: Assignment,
    /// `level_dims[k-1]` = dim αᵏ at the witness.
    pub level_dims: Vec<usize>,
    pub levels: Vec<Subspace>,
}

/// Builds an assignment for p1..r_m in ℂⁿ where level k's triple is the
/// structured triple inside the value of αᵏ⁻¹ (level 1 uses all of ℂⁿ).
/// Needs 2ᵐ | n; then dim αᵏ = n / 2ᵏ exactly.
pub fn chained_alpha_witness(levels: usize, ambient: usize) -> Result<ChainedWitness, SearchError> {
    let formulas = alpha_levels(levels)?;
    chained_from_formulas(&formulas, ambient)
}

pub(crate) fn chained_from_formulas(formulas: &[Formula], ambient: usize) -> Result<ChainedWitness, SearchError> {
    let mut assignment = Assignment::new(ambient)?;
    let mut beta = Subspace::full(ambient)?;
    let mut values = Vec::with_capacity(formulas.len());
    for (k, formula) in formulas.iter().enumerate() {
        let triple = structured_triple_in(&beta)?;
        for (name, value) in alpha_level_vars(k + 1).into_iter().zip(triple) {
            assignment.insert(name, value)?;
        }
        beta = Evaluator::new(&assignment).eval(formula)?;
        values.push(beta.clone());
    }
    Ok(ChainedWitness { level_dims: values.iter().map(Subspace::dim).collect(), levels: values, assignment })
}

/// Seeded search for distinct random lines (dimension-`dim` subspaces) at
/// which `formula` does not vanish. Returns the first such assignment and
/// the number of trials it took.
pub fn search_nonvanishing(
    formula: &Formula,
    ambient: usize,
    dim: usize,
    trials: usize,
    seed: u64,
    entry_bound: i64,
) -> Result<Option<(Assignment, Subspace, usize)>, SearchError> {
    use rand::SeedableRng;
    let vars: Vec<String> = formula.vars().into_iter().collect();
    for t in 0..trials {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(t as u64);
        let mut a = Assignment::new(ambient)?;
        for v in &vars {
            a.insert(v.clone(), random_subspace_with(&mut rng, ambient, dim, entry_bound)?)?;
        }
        let distinct = {
            let vals: Vec<&Subspace> = a.iter().map(|(_, s)| s).collect();
            vals.iter().enumerate().all(|(i, x)| vals[i + 1..].iter().all(|y| x != y))
        };
        if !distinct {
            continue;
        }
        let value = Evaluator::new(&a).eval(formula)?;
        if !value.is_zero() {
            return Ok(Some((a, value, t + 1)));
        }
    }
    Ok(None)
}
