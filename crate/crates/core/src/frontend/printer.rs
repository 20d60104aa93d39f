use std::fmt::Write as _;

use super::{Input, Problem};
use crate::algebra::{Signature, Term};
use crate::engine::ReliableClause;
use crate::logic::Formula;

fn precedence(f: &Formula) -> u8 {
    match f {
        Formula::Iff(..) => 1,
        Formula::Implies(..) => 2,
        Formula::Or(..) => 3,
        Formula::And(..) => 4,
        Formula::Not(_) | Formula::Literal(_) | Formula::Constant(_) => 5,
    }
}

fn write_formula(out: &mut String, sig: &Signature, f: &Formula, min: u8) {
    let parens = precedence(f) < min;
    if parens {
        out.push('(');
    }
    let mut binary = |op: &str, a: &Formula, b: &Formula, left: u8, right: u8| {
        write_formula(out, sig, a, left);
        out.push_str(op);
        write_formula(out, sig, b, right);
    };
    match f {
        Formula::Literal(l) => {
            let _ = write!(out, "{}", l.show(sig));
        }
        Formula::Constant(t) => {
            let _ = write!(out, "{}", sig.show(t));
        }
        Formula::Not(a) => {
            out.push('!');
            write_formula(out, sig, a, 5);
        }
        Formula::And(a, b) => binary(" & ", a, b, 4, 5),
        Formula::Or(a, b) => binary(" | ", a, b, 3, 4),
        Formula::Implies(a, b) => binary(" -> ", a, b, 3, 2),
        Formula::Iff(a, b) => binary(" <-> ", a, b, 1, 2),
    }
    if parens {
        out.push(')');
    }
}

/// Formula text with the minimum parentheses needed to parse back to the
/// same tree.
pub fn format_formula(sig: &Signature, f: &Formula) -> String {
    let mut out = String::new();
    write_formula(&mut out, sig, f, 0);
    out
}

/// `lits` or `lits @ reliability` when the reliability is not `⊤`.
pub fn format_clause(sig: &Signature, rc: &ReliableClause) -> String {
    let mut out = rc.clause().show(sig).to_string();
    if rc.reliability() != &Term::top() {
        let _ = write!(out, " @ {}", sig.show(rc.reliability()));
    }
    out
}

impl Problem {
    /// Canonical problem-file text. Parsing it yields an equal problem.
    pub fn to_text(&self) -> String {
        let sig = &self.signature;
        let mut out = format!(
            "hedges: H+ = {} ; H- = {}\nmaxdepth: {}\n",
            sig.positive_names().join(" < "),
            sig.negative_names().join(" < "),
            sig.max_depth()
        );
        let d = &self.directives;
        if let Some(m) = d.merge {
            let _ = writeln!(out, "option: merge_duplicates = {m}");
        }
        if let Some(s) = d.strategy {
            let _ = writeln!(out, "option: strategy = {s}");
        }
        if let Some(n) = d.max_steps {
            let _ = writeln!(out, "option: max_steps = {n}");
        }
        for input in &self.inputs {
            match input {
                Input::Clause(rc) => {
                    let _ = writeln!(out, "clause: {}.", format_clause(sig, rc));
                }
                Input::Formula(f) => {
                    let _ = writeln!(out, "formula: {}.", format_formula(sig, f));
                }
            }
        }
        out
    }
}
