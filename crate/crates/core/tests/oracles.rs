//! Worked examples for every public operation, checked against hand-derived
//! values.

mod common;

use common::{line2, standard_triple};
use qlat::formula::*;
use qlat::lattice::{random_subspace, Side, Subspace};
use qlat::linalg::{GaussianRational as Q, RationalMatrix};
use qlat::search::*;
use qlat::tl::*;

fn q(re: i64, im: i64) -> Q {
    Q::from_integers(re, im)
}

// exact linear algebra

#[test]
fn rref_examples() {
    let r = RationalMatrix::identity(3).rref();
    assert_eq!((r.matrix, r.rank, r.pivot_cols), (RationalMatrix::identity(3), 3, vec![0, 1, 2]));
    let r = RationalMatrix::zeros(1, 1).rref();
    assert_eq!((r.rank, r.pivot_cols.len()), (0, 0));
    assert!(r.matrix.is_zero());
    let m = RationalMatrix::from_int_rows(&[&[(1, 0), (0, 1)], &[(0, 1), (-1, 0)]]);
    assert_eq!(m.rank(), 1);
}

#[test]
fn kernel_examples() {
    assert_eq!(RationalMatrix::identity(4).kernel().rows(), 0);
    let m = RationalMatrix::from_int_rows(&[&[(1, 0), (0, -1)]]);
    let k = m.kernel();
    assert_eq!(k.rows(), 1);
    // canonical form of span{(i, 1)} is (1, -i)
    assert_eq!(k.row(0), &[q(1, 0), q(0, -1)]);
    assert!(m.apply(k.row(0)).unwrap().iter().all(Q::is_zero));
    assert_eq!(RationalMatrix::zeros(1, 3).kernel(), RationalMatrix::identity(3));
}

#[test]
fn conj_transpose_and_products() {
    let m = RationalMatrix::from_int_rows(&[&[(0, 1)]]);
    assert_eq!(m.conj_transpose(), RationalMatrix::from_int_rows(&[&[(0, -1)]]));
    let real = RationalMatrix::from_int_rows(&[&[(1, 0), (2, 0)], &[(3, 0), (4, 0)]]);
    assert_eq!(real.conj_transpose(), real.transpose());
    assert_eq!(RationalMatrix::identity(2).kron(&RationalMatrix::identity(2)), RationalMatrix::identity(4));
    assert_eq!(RationalMatrix::identity(2).matmul(&real).unwrap(), real);
    let k = real.kron(&real);
    assert_eq!((k.rows(), k.cols()), (4, 4));
    assert!(real.matmul(&RationalMatrix::identity(3)).is_err());
}

// subspace lattice

#[test]
fn span_examples() {
    assert_eq!(Subspace::span(&[vec![q(1, 0), q(0, 0)]], 2).unwrap().dim(), 1);
    assert!(Subspace::span(&[], 3).unwrap().is_zero());
    assert_eq!(Subspace::span(&[vec![q(1, 0), q(0, 0)], vec![q(2, 0), q(0, 0)]], 2).unwrap().dim(), 1);
    assert!(Subspace::span(&[vec![q(1, 0)]], 2).is_err());
    assert!(Subspace::zero(0).is_err());
}

#[test]
fn meet_join_ortho_examples() {
    let x = line2((1, 0), (0, 0));
    let y = line2((0, 0), (1, 0));
    let d = line2((1, 0), (1, 0));
    let full = Subspace::full(2).unwrap();
    let zero = Subspace::zero(2).unwrap();
    assert!(x.meet(&y).unwrap().is_zero());
    assert_eq!(x.meet(&x).unwrap(), x);
    assert_eq!(full.meet(&d).unwrap(), d);
    assert!(x.join(&y).unwrap().is_full());
    assert_eq!(x.join(&zero).unwrap(), x);
    assert_eq!(zero.ortho(), full);
    assert_eq!(full.ortho(), zero);
    assert_eq!(x.ortho(), y);
    assert_eq!(line2((1, 0), (0, 1)).ortho(), line2((0, 1), (1, 0)));
    assert!(x.meet(&Subspace::full(3).unwrap()).is_err());
}

#[test]
fn equality_and_order_examples() {
    let p = line2((1, 0), (0, 0));
    let r = line2((1, 0), (1, 0));
    assert!(p.equals(&p).unwrap());
    let lemma = p.join(&r).unwrap().meet(&p.ortho().join(&r.ortho()).unwrap()).unwrap();
    assert!(!lemma.is_zero());
    assert!(!p.equals(&r).unwrap());
    assert!(Subspace::zero(2).unwrap().leq(&p).unwrap());
}

#[test]
fn tensor_embed_examples() {
    assert!(Subspace::full(2).unwrap().tensor_embed(2, Side::Right).unwrap().is_full());
    let e = line2((1, 0), (0, 0)).tensor_embed(2, Side::Right).unwrap();
    assert_eq!((e.ambient(), e.dim()), (4, 2));
    let p = line2((1, 0), (2, -1));
    for side in [Side::Left, Side::Right] {
        assert_eq!(p.tensor_embed(2, side).unwrap().ortho(), p.ortho().tensor_embed(2, side).unwrap());
    }
}

#[test]
fn random_subspace_examples() {
    assert_eq!(random_subspace(4, 2, 9, 3).unwrap().dim(), 2);
    assert_eq!(random_subspace(4, 2, 9, 3).unwrap(), random_subspace(4, 2, 9, 3).unwrap());
    assert!(random_subspace(4, 0, 9, 3).unwrap().is_zero());
    assert!(random_subspace(2, 3, 9, 3).is_err());
}

// formula language

#[test]
fn parse_examples() {
    let (p, qv, r) = (Formula::var("p"), Formula::var("q"), Formula::var("r"));
    assert_eq!(parse_formula("p & (q | r)").unwrap(), p.clone().and(qv.clone().or(r.clone())));
    assert_eq!(parse_formula("~~p").unwrap(), p.clone().not().not());
    assert_eq!(parse_formula("p & q | r").unwrap(), p.clone().and(qv.clone()).or(r.clone()));
    assert_eq!(parse_formula("p ∧ (q ∨ ¬r)").unwrap(), p.clone().and(qv.or(r.not())));
    assert!(matches!(parse_formula(""), Err(ParseError::Empty)));
    assert!(parse_formula("(p & q").is_err());
    assert!(parse_formula("p & & q").is_err());
    assert!(matches!(parse("p <= q").unwrap(), Parsed::Equation(_)));
}

#[test]
fn print_examples() {
    assert_eq!(Formula::var("p").to_string(), "p");
    let f = Formula::var("p").or(Formula::var("q")).and(Formula::var("r"));
    assert_eq!(f.to_string(), "(p | q) & r");
    assert_eq!(parse_formula(&f.to_string()).unwrap(), f);
}

#[test]
fn nnf_examples() {
    let nnf = |s: &str| to_nnf(&parse_formula(s).unwrap()).to_string();
    assert_eq!(nnf("~(p & q)"), "~p | ~q");
    assert_eq!(nnf("~~p"), "p");
    assert_eq!(nnf("~(p | (q & r))"), "~p & (~q | ~r)");
}

#[test]
fn eval_examples() {
    let a = standard_triple();
    assert!(eval(&parse_formula("p | ~p").unwrap(), &a).unwrap().is_full());
    assert!(eval(&parse_formula("p & ~p").unwrap(), &a).unwrap().is_zero());
    let lhs = eval(&parse_formula("p | q & r").unwrap(), &a).unwrap();
    let rhs = eval(&parse_formula("(p | q) & (p | r)").unwrap(), &a).unwrap();
    assert_eq!(&lhs, a.get("p").unwrap());
    assert!(rhs.is_full());
    let err = eval(&parse_formula("p & s").unwrap(), &a).unwrap_err();
    assert!(err.to_string().contains('s'));
}

#[test]
fn restrict_examples() {
    let b = Formula::var("b");
    let r = |s: &str| restrict(&parse_formula(s).unwrap(), &b);
    assert_eq!(r("u"), parse_formula("u & b").unwrap());
    assert_eq!(r("~u"), parse_formula("~(u & b) & b").unwrap());
    assert_eq!(r("u | ~v"), parse_formula("u & b | ~(v & b) & b").unwrap());
    assert_eq!(r("1"), b);
    assert_eq!(r("0"), Formula::Zero);
}

#[test]
fn alpha_examples() {
    let a = standard_triple();
    let v = eval(&alpha(), &a).unwrap();
    assert_eq!(v, line2((0, 0), (1, 0)));
    let p = line2((1, 0), (2, 0));
    let same = Assignment::from_pairs(2, [("p", p.clone()), ("q", p.clone()), ("r", p)]).unwrap();
    assert!(eval(&alpha(), &same).unwrap().is_zero());
    assert!(v.leq(&a.get("p").unwrap().ortho()).unwrap());
}

#[test]
fn alpha_iter_examples() {
    let strip = |s: &str| s.trim_end_matches(char::is_numeric).to_string();
    assert_eq!(alpha_iter(1).unwrap().rename(&strip), alpha());
    for m in 1..=4 {
        assert_eq!(alpha_iter(m).unwrap().vars().len(), 3 * m);
    }
    assert!(alpha_iter(0).is_err());
    let w = chained_alpha_witness(2, 4).unwrap();
    assert_eq!(eval(&alpha_iter(2).unwrap(), &w.assignment).unwrap().dim(), 1);
}

#[test]
fn m_distributive_examples() {
    let eq = m_distributive(1).unwrap();
    assert_eq!(eq.to_string(), "x & (y0 | y1) = x & y1 | x & y0");
    assert!(m_distributive(0).is_err());
    // every assignment in ℂ¹ is classical
    let bits = [Subspace::zero(1).unwrap(), Subspace::full(1).unwrap()];
    for m in 1..=3 {
        let eq = m_distributive(m).unwrap();
        let vars: Vec<String> = eq.vars().into_iter().collect();
        for mask in 0..(1u32 << vars.len()) {
            let a = Assignment::from_pairs(1, vars.iter().enumerate().map(|(i, v)| (v.clone(), bits[(mask >> i & 1) as usize].clone())))
                .unwrap();
            assert!(eval_equation(&eq, &a).unwrap().holds);
        }
    }
}

#[test]
fn law_examples() {
    assert!(!falsify(&law("modularity").unwrap(), 3, 200, 1, None).unwrap().is_counterexample());
    assert!(!eval_equation(&law("distributivity").unwrap().rename_for_test(), &standard_triple()).unwrap().holds);
    assert!(!falsify(&law("double_negation").unwrap(), 3, 200, 1, None).unwrap().is_counterexample());
    assert!(law("orthoarguesian").is_err());
    assert_eq!(Law::ALL.len(), 8);
}

trait RenameForTest {
    fn rename_for_test(&self) -> Equation;
}

impl RenameForTest for Equation {
    fn rename_for_test(&self) -> Equation {
        let map = |s: &str| match s {
            "x" => "p".into(),
            "y" => "q".into(),
            "z" => "r".into(),
            other => other.into(),
        };
        Equation::new(self.lhs.rename(&map), self.relation, self.rhs.rename(&map))
    }
}

#[test]
fn distinctness_examples() {
    assert_eq!(distinctness_formula(&["p", "q", "r"]).unwrap(), alpha());
    assert!(distinctness_formula(&["p", "q"]).is_err());
    let f = distinctness_formula(&["p", "q", "r", "s"]).unwrap();
    let l = [line2((1, 0), (0, 0)), line2((0, 0), (1, 0)), line2((1, 0), (1, 0))];
    let a = Assignment::from_pairs(2, [("p", l[0].clone()), ("q", l[1].clone()), ("r", l[2].clone()), ("s", l[1].clone())]).unwrap();
    assert!(eval(&f, &a).unwrap().is_zero());
    let found = search_nonvanishing(&f, 2, 1, 2000, 0, 3).unwrap();
    assert!(found.is_some());
}

// tautology search

#[test]
fn falsify_examples() {
    let v = falsify(&law("distributivity").unwrap(), 2, 1000, 3, None).unwrap();
    assert!(v.is_counterexample() && v.replay().unwrap());
    let v = falsify(&law("modularity").unwrap(), 4, 500, 3, None).unwrap();
    assert_eq!(v.status, VerdictStatus::NoCounterexample);
    assert!(!falsify(&parse_equation("x = x").unwrap(), 5, 50, 3, None).unwrap().is_counterexample());
}

#[test]
fn structured_witness_examples() {
    let a = structured_alpha_witness(2).unwrap();
    assert_eq!(a, standard_triple());
    assert_eq!(eval(&alpha(), &structured_alpha_witness(4).unwrap()).unwrap().dim(), 2);
    for m in [2, 4, 6] {
        let a = structured_alpha_witness(m).unwrap();
        let v: Vec<&Subspace> = a.iter().map(|(_, s)| s).collect();
        assert!(v[0].meet(v[1]).unwrap().is_zero() && v[0].meet(v[2]).unwrap().is_zero() && v[1].meet(v[2]).unwrap().is_zero());
    }
    assert!(structured_alpha_witness(5).is_err());
}

#[test]
fn qubit_separator_examples() {
    let cfg = SearchConfig { alpha_holds_trials: 100, ..SearchConfig::default() };
    let c0 = qubit_alpha_separator(0, 2, &cfg).unwrap();
    assert_eq!((c0.low_dim, c0.high_dim), (1, 2));
    assert_eq!(c0.fails_witness.witness.as_ref().unwrap().iter().count(), 3);
    let c1 = qubit_alpha_separator(1, 2, &cfg).unwrap();
    assert_eq!(c1.fails_witness.gap.as_ref().unwrap().lhs.dim(), 1);
    assert_eq!(chained_alpha_witness(3, 8).unwrap().level_dims, vec![4, 2, 1]);
    assert!(matches!(qubit_alpha_separator(4, 0, &cfg), Err(SearchError::SizeCap { requested: 32, cap: 16 })));
}

#[test]
fn separate_dims_examples() {
    let cfg = SearchConfig { holds_trials: 200, ..SearchConfig::default() };
    let c = separate_dims(1, 2, 0, &cfg).unwrap();
    assert_eq!(c.separator, m_distributive(1).unwrap());
    assert!(c.verify().unwrap());
    let c = separate_dims(2, 3, 0, &cfg).unwrap();
    assert!(c.fails_witness.replay().unwrap());
    assert!(matches!(separate_dims(2, 2, 0, &cfg), Err(SearchError::BadOrder { .. })));
}

#[test]
fn lift_examples() {
    let v = falsify(&law("distributivity").unwrap(), 2, 1000, 1, None).unwrap();
    let l = lift_counterexample(&v, 2).unwrap();
    assert_eq!(l.ambient, 4);
    assert!(l.is_counterexample() && l.replay().unwrap());
    assert_eq!(l.gap.as_ref().unwrap().lhs.dim(), 2 * v.gap.as_ref().unwrap().lhs.dim());
    let none = falsify(&parse_equation("x = x").unwrap(), 2, 10, 1, None).unwrap();
    assert!(lift_counterexample(&none, 2).is_err());
}

#[test]
fn audit_examples() {
    let r = audit_invariants(&standard_triple()).unwrap();
    assert!(r.all_passed());
    assert_eq!(r.alpha_dim, Some(1));
    assert!(r.entries.iter().any(|e| e.name.starts_with("valuation")));
    assert!(r.entries.iter().any(|e| e.name == "excluded_middle[p]" && e.passed));
}

// Temperley-Lieb

#[test]
fn generator_examples() {
    let e1 = generator_e(2, 1).unwrap();
    assert_eq!(e1.mul(&e1).unwrap(), e1);
    let (a, b) = (generator_e(3, 1).unwrap(), generator_e(3, 2).unwrap());
    assert_eq!(a.mul(&b).unwrap().mul(&a).unwrap(), a.scale(&RationalFunction::d_pow(-2)));
    let (a, c) = (generator_e(4, 1).unwrap(), generator_e(4, 3).unwrap());
    assert_eq!(a.mul(&c).unwrap(), c.mul(&a).unwrap());
    assert!(generator_e(2, 2).is_err());
}

#[test]
fn tl_mul_examples() {
    let u = TLElement::cup_cap(3, 2).unwrap();
    assert_eq!(TLElement::identity(3).mul(&u).unwrap(), u);
    let u1 = TLElement::cup_cap(2, 1).unwrap();
    assert_eq!(u1.mul(&u1).unwrap(), u1.scale(&RationalFunction::d()));
    assert!(u.mul(&u1).is_err());
}

#[test]
fn chebyshev_examples() {
    assert_eq!(chebyshev(0).to_poly(), Poly::one());
    assert_eq!(chebyshev(1).to_poly(), Poly::x());
    assert_eq!(chebyshev(2).to_poly(), Poly::from_ints(&[-1, 0, 1]));
    assert_eq!(chebyshev(3).to_poly(), Poly::from_ints(&[0, -2, 0, 1]));
}

#[test]
fn jones_wenzl_examples() {
    assert_eq!(jones_wenzl(1).unwrap(), TLElement::identity(1));
    assert_eq!(jones_wenzl(2).unwrap(), TLElement::identity(2).sub(&generator_e(2, 1).unwrap()).unwrap());
    let p = jones_wenzl(4).unwrap();
    for i in 1..4 {
        assert!(generator_e(4, i).unwrap().mul(&p).unwrap().is_zero());
    }
}

#[test]
fn markov_trace_examples() {
    assert!(markov_trace(&TLElement::identity(3)).is_one());
    assert_eq!(markov_trace(&generator_e(2, 1).unwrap()), RationalFunction::d_pow(-2));
    let expected = RationalFunction::new(Poly::from_ints(&[-1, 0, 1]), Poly::from_ints(&[0, 0, 1])).unwrap();
    assert_eq!(markov_trace(&jones_wenzl(2).unwrap()), expected);
}

#[test]
fn root_examples() {
    assert!((root_params(3).unwrap().d - 1.0).abs() < 1e-12);
    assert!((root_params(4).unwrap().d - 1.4142135624).abs() < 1e-9);
    let ds: Vec<f64> = (3..40).map(|r| root_params(r).unwrap().d).collect();
    assert!(ds.windows(2).all(|w| w[0] < w[1]) && ds.iter().all(|&d| d < 2.0));
    assert!(root_params(2).is_err());
    for r in 3..=6u32 {
        assert!(chebyshev(r as usize - 1).eval_f64(root_params(r).unwrap().d).abs() < 1e-9);
    }
    let tr_e = markov_trace(&generator_e(2, 1).unwrap());
    assert!((eval_at_root(&tr_e, 4).unwrap() - 0.5).abs() < 1e-9);
    assert!(eval_at_root(&delta(2), 3).unwrap().abs() < 1e-9);
    assert_eq!(eval_at_root(&RationalFunction::one(), 11).unwrap(), 1.0);
    assert!(matches!(eval_at_root(&RationalFunction::one().div(&delta(2)).unwrap(), 3), Err(TlError::Pole { .. })));
}

#[test]
fn jw_at_root_examples() {
    let p = jw_at_root(2, 4).unwrap();
    let u = PlanarDiagram::cup_cap(2, 1).unwrap();
    assert!((p.coeff(&PlanarDiagram::identity(2)) - 1.0).abs() < 1e-12);
    assert!((p.coeff(&u) + 1.0 / 2f64.sqrt()).abs() < 1e-12);
    for r in 3..=5u32 {
        assert!(jw_at_root(r as usize - 1, r).is_ok());
        assert!(matches!(jw_at_root(r as usize, r), Err(TlError::BeyondRootBound { .. })));
        for j in 1..r as usize {
            let d = root_params(r).unwrap().d;
            let tr = eval_at_root(&markov_trace(&jones_wenzl(j).unwrap()), r).unwrap();
            assert!((tr - chebyshev(j).eval_f64(d) / d.powi(j as i32)).abs() < 1e-9);
        }
    }
}
