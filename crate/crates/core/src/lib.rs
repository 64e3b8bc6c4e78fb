//! Exact quantum logic on finite-dimensional complex space.
//!
//! Propositions are subspaces of ℂⁿ with rational complex coordinates. Meet
//! is intersection, join is span, negation is orthogonal complement, and
//! every operation is exact. On top of that sit a propositional formula
//! language, a seeded counterexample search that separates the logics of
//! different dimensions, and the Temperley-Lieb algebra with its Jones-Wenzl
//! projectors and Markov trace.
//!
//! | module | contents |
//! |---|---|
//! | [`linalg`] | ℚ(i) scalars, matrices, RREF, kernels, Kronecker products |
//! | [`lattice`] | [`lattice::Subspace`] and its ortholattice operations |
//! | [`formula`] | AST, parser, printer, evaluation, NNF, restriction, α and friends |
//! | [`search`] | falsification, structured witnesses, dimension separation |
//! | [`tl`] | planar diagrams, TLₙ over ℚ(d), Jones-Wenzl, traces, roots of unity |
//! | [`cli`] | the `qlat` command line |
//!
//! ```
//! use qlat::formula::{alpha, eval};
//! use qlat::search::structured_alpha_witness;
//!
//! let a = structured_alpha_witness(4).unwrap();
//! assert_eq!(eval(&alpha(), &a).unwrap().dim(), 2);
//! ```
//!
//! Runnable examples live in `examples/`:
//! `subspace_lattice`, `formula_eval`, `distributivity_failure`,
//! `dimension_separation`, `qubit_alpha_chain`, `distinctness`,
//! `tensor_lift`, `temperley_lieb`, `jones_wenzl_roots`.

pub mod cli;
pub mod formula;
pub mod lattice;
pub mod linalg;
pub mod search;
pub mod tl;
