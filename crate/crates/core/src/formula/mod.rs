//! The propositional language: formulas, equations, parsing and printing,
//! negation normal form, relativization to a subformula, and evaluation
//! over an assignment of subspaces.
//!
//! Concrete syntax:
//!
//! ```text
//! equation := formula (("=" | "<=") formula)?
//! formula  := conj { "|" conj }
//! conj     := atom { "&" atom }
//! atom     := "~" atom | "0" | "1" | ident | "(" formula ")"
//! ident    := letter { letter | digit | "_" }
//! ```
//!
//! `∧`, `∨`, `¬` are accepted as input aliases for `&`, `|`, `~`.

mod ast;
mod eval;
mod generators;
mod parse;
mod print;
mod transform;

pub use ast::{Equation, Formula, Relation};
pub use eval::{eval, eval_equation, Assignment, EquationValue, EvalError, Evaluator};
pub use generators::{
    alpha, alpha_iter, alpha_level_vars, alpha_levels, alpha_sides, alpha_with, distinctness_formula, law,
    m_distributive, GeneratorError, Law,
};
pub use parse::{parse, parse_equation, parse_formula, ParseError, Parsed};
pub use transform::{is_nnf, restrict, to_nnf};
