use std::fmt;

use super::Formula;

const PREC_OR: u8 = 1;
const PREC_AND: u8 = 2;
const PREC_ATOM: u8 = 3;

fn precedence(f: &Formula) -> u8 {
    match f {
        Formula::Or(..) => PREC_OR,
        Formula::And(..) => PREC_AND,
        _ => PREC_ATOM,
    }
}

fn write_child(out: &mut fmt::Formatter<'_>, child: &Formula, wrap: bool) -> fmt::Result {
    if wrap {
        write!(out, "({child})")
    } else {
        write!(out, "{child}")
    }
}

/// Minimal parenthesization: `~` binds tightest, then `&`, then `|`; both
/// binary connectives associate to the left, so a right operand of equal
/// precedence is wrapped.
impl fmt::Display for Formula {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Var(v) => write!(out, "{v}"),
            Formula::Zero => write!(out, "0"),
            Formula::One => write!(out, "1"),
            Formula::Not(c) => {
                write!(out, "~")?;
                write_child(out, c, precedence(c) < PREC_ATOM)
            }
            Formula::And(a, b) => {
                write_child(out, a, precedence(a) < PREC_AND)?;
                write!(out, " & ")?;
                write_child(out, b, precedence(b) <= PREC_AND)
            }
            Formula::Or(a, b) => {
                write_child(out, a, precedence(a) < PREC_OR)?;
                write!(out, " | ")?;
                write_child(out, b, precedence(b) <= PREC_OR)
            }
        }
    }
}
