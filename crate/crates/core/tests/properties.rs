//! Property tests over randomly generated subspaces, formulas and
//! Temperley-Lieb elements.

mod common;

use common::{random_assignment, random_formula, random_subspace, rng};
use proptest::prelude::*;
use qlat::formula::*;
use qlat::lattice::{Side, Subspace};
use qlat::linalg::{GaussianRational, RationalMatrix};
use qlat::tl::*;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

const VARS: [&str; 4] = ["p", "q", "r", "s"];

fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> RationalMatrix {
    let mut m = RationalMatrix::zeros(rows, cols);
    for r in 0..rows {
        for c in 0..cols {
            if rng.random_bool(0.6) {
                m.set(r, c, GaussianRational::from_integers(rng.random_range(-3..=3), rng.random_range(-3..=3)));
            }
        }
    }
    m
}

fn random_tl(rng: &mut ChaCha8Rng, n: usize) -> TLElement {
    let diagrams = PlanarDiagram::enumerate(n);
    let terms = (0..rng.random_range(1..=3)).map(|_| {
        let d = diagrams[rng.random_range(0..diagrams.len())].clone();
        let c = &RationalFunction::from_int(rng.random_range(-3..=3)) * &RationalFunction::d_pow(rng.random_range(-1..=1));
        (d, c)
    });
    TLElement::from_terms(n, terms.collect::<Vec<_>>()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn ortholattice_laws(seed in any::<u64>(), n in 1usize..=5) {
        let mut g = rng(seed);
        let (a, b, c) = (random_subspace(&mut g, n), random_subspace(&mut g, n), random_subspace(&mut g, n));
        prop_assert_eq!(a.ortho().ortho(), a.clone());
        prop_assert!(a.meet(&a.ortho()).unwrap().is_zero());
        prop_assert!(a.join(&a.ortho()).unwrap().is_full());
        prop_assert_eq!(a.meet(&b).unwrap(), b.meet(&a).unwrap());
        prop_assert_eq!(a.join(&b).unwrap(), b.join(&a).unwrap());
        prop_assert_eq!(a.meet(&b).unwrap().meet(&c).unwrap(), a.meet(&b.meet(&c).unwrap()).unwrap());
        prop_assert_eq!(a.join(&b).unwrap().join(&c).unwrap(), a.join(&b.join(&c).unwrap()).unwrap());
        prop_assert_eq!(a.meet(&a.join(&b).unwrap()).unwrap(), a.clone());
        prop_assert_eq!(a.join(&a.meet(&b).unwrap()).unwrap(), a.clone());
        prop_assert_eq!(a.join(&b).unwrap().ortho(), a.ortho().meet(&b.ortho()).unwrap());
        prop_assert_eq!(a.meet(&b).unwrap().ortho(), a.ortho().join(&b.ortho()).unwrap());
        prop_assert_eq!(a.meet(&b).unwrap().dim() + a.join(&b).unwrap().dim(), a.dim() + b.dim());
        prop_assert_eq!(a.dim() + a.ortho().dim(), n);
    }

    #[test]
    fn order_laws(seed in any::<u64>(), n in 1usize..=5) {
        let mut g = rng(seed);
        let (a, b, c) = (random_subspace(&mut g, n), random_subspace(&mut g, n), random_subspace(&mut g, n));
        let ab = a.meet(&b).unwrap();
        prop_assert!(ab.leq(&a).unwrap() && ab.leq(&b).unwrap());
        prop_assert!(a.leq(&a.join(&b).unwrap()).unwrap());
        prop_assert_eq!(a.leq(&b).unwrap(), b.ortho().leq(&a.ortho()).unwrap());
        // orthomodularity
        if a.leq(&b).unwrap() {
            prop_assert_eq!(a.join(&a.ortho().meet(&b).unwrap()).unwrap(), b.clone());
        }
        // modularity for z ≤ x, with z = x ∧ c
        let z = a.meet(&c).unwrap();
        prop_assert_eq!(z.join(&a.meet(&b).unwrap()).unwrap(), a.meet(&z.join(&b).unwrap()).unwrap());
        // equality lemma
        let gap = a.join(&b).unwrap().meet(&a.ortho().join(&b.ortho()).unwrap()).unwrap();
        prop_assert_eq!(gap.is_zero(), a == b);
    }

    #[test]
    fn rref_is_idempotent_and_rank_stable(seed in any::<u64>(), rows in 1usize..=4, cols in 1usize..=5) {
        let mut g = rng(seed);
        let m = random_matrix(&mut g, rows, cols);
        let r = m.rref();
        prop_assert_eq!(r.matrix.rref().matrix, r.matrix.clone());
        prop_assert_eq!(m.rank(), m.conj_transpose().rank());
        prop_assert!(r.rank <= rows.min(cols));
        let k = m.kernel();
        prop_assert_eq!(k.rows() + m.rank(), cols);
        for v in k.row_vecs() {
            prop_assert!(m.apply(&v).unwrap().iter().all(GaussianRational::is_zero));
        }
    }

    #[test]
    fn tensor_embedding_is_a_homomorphism(seed in any::<u64>(), n in 1usize..=3, k in 1usize..=2, right in any::<bool>()) {
        let side = if right { Side::Right } else { Side::Left };
        let mut g = rng(seed);
        let (a, b) = (random_subspace(&mut g, n), random_subspace(&mut g, n));
        let e = |s: &Subspace| s.tensor_embed(k, side).unwrap();
        prop_assert_eq!(e(&a.meet(&b).unwrap()), e(&a).meet(&e(&b)).unwrap());
        prop_assert_eq!(e(&a.join(&b).unwrap()), e(&a).join(&e(&b)).unwrap());
        prop_assert_eq!(e(&a.ortho()), e(&a).ortho());
        prop_assert_eq!(e(&a).dim(), k * a.dim());
    }

    #[test]
    fn nnf_preserves_meaning(seed in any::<u64>(), n in 1usize..=3) {
        let mut g = rng(seed);
        let f = random_formula(&mut g, &VARS, 5);
        let a = random_assignment(&mut g, &VARS, n);
        let nnf = to_nnf(&f);
        prop_assert!(is_nnf(&nnf));
        prop_assert_eq!(eval(&nnf, &a).unwrap(), eval(&f, &a).unwrap());
    }

    #[test]
    fn restriction_stays_below_its_bound(seed in any::<u64>(), n in 1usize..=3) {
        let mut g = rng(seed);
        let f = random_formula(&mut g, &VARS[..3], 4);
        let beta = random_formula(&mut g, &VARS, 2);
        let a = random_assignment(&mut g, &VARS, n);
        let restricted = eval(&restrict(&f, &beta), &a).unwrap();
        prop_assert!(restricted.leq(&eval(&beta, &a).unwrap()).unwrap());
    }

    #[test]
    fn alpha_is_b_and_not_a(seed in any::<u64>(), n in 1usize..=4) {
        let mut g = rng(seed);
        let a = random_assignment(&mut g, &VARS[..3], n);
        let (lo, hi) = alpha_sides(&Formula::var("p"), &Formula::var("q"), &Formula::var("r"));
        let (lo, hi) = (eval(&lo, &a).unwrap(), eval(&hi, &a).unwrap());
        let v = eval(&alpha(), &a).unwrap();
        prop_assert!(lo.leq(&hi).unwrap());
        prop_assert_eq!(v.clone(), hi.meet(&lo.ortho()).unwrap());
        prop_assert!(2 * v.dim() <= n);
        prop_assert!(v.leq(&a.get("p").unwrap().ortho()).unwrap());
    }

    #[test]
    fn tl_product_is_associative(seed in any::<u64>(), n in 1usize..=4) {
        let mut g = rng(seed);
        let (x, y, z) = (random_tl(&mut g, n), random_tl(&mut g, n), random_tl(&mut g, n));
        prop_assert_eq!(x.mul(&y).unwrap().mul(&z).unwrap(), x.mul(&y.mul(&z).unwrap()).unwrap());
        let sum = y.add(&z).unwrap();
        prop_assert_eq!(x.mul(&sum).unwrap(), x.mul(&y).unwrap().add(&x.mul(&z).unwrap()).unwrap());
    }

    #[test]
    fn trace_is_cyclic_and_stable_under_inclusion(seed in any::<u64>(), n in 1usize..=5) {
        let mut g = rng(seed);
        let (x, y) = (random_tl(&mut g, n), random_tl(&mut g, n));
        prop_assert_eq!(markov_trace(&x.mul(&y).unwrap()), markov_trace(&y.mul(&x).unwrap()));
        prop_assert_eq!(markov_trace(&x.include()), markov_trace(&x));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn print_then_parse_is_identity(seed in any::<u64>()) {
        let mut g = rng(seed);
        let f = random_formula(&mut g, &VARS, 8);
        prop_assert_eq!(parse_formula(&f.to_string()).unwrap(), f);
    }
}
