//! CPLEX LP text for [`LinearConstraintSystem`]. Equalities become named rows
//! `c<j>`, fixed bits become unnamed rows `y<i> = <b>`.

use std::fmt::Write;

use hosens_core::{Error, Result};

use crate::system::{Equality, LinearConstraintSystem};

const TERMS_PER_LINE: usize = 12;
const NAMES_PER_LINE: usize = 16;

pub fn export_lp(sys: &LinearConstraintSystem) -> String {
    let mut out = String::new();
    out.push_str("Minimize\n obj: 0 y0\nSubject To\n");
    for (j, e) in sys.equalities().iter().enumerate() {
        let _ = write!(out, " c{j}:");
        for (t, &(v, a)) in e.coeffs.iter().enumerate() {
            if t > 0 && t % TERMS_PER_LINE == 0 {
                out.push_str("\n   ");
            }
            let sign = if a < 0 { '-' } else { '+' };
            match a.unsigned_abs() {
                1 => {
                    let _ = write!(out, " {sign} y{v}");
                }
                m => {
                    let _ = write!(out, " {sign} {m} y{v}");
                }
            }
        }
        let _ = writeln!(out, " = {}", e.rhs);
    }
    for &(v, b) in sys.fixed() {
        let _ = writeln!(out, " y{v} = {}", u8::from(b));
    }
    out.push_str("Binary\n");
    for chunk in (0..sys.num_vars()).collect::<Vec<_>>().chunks(NAMES_PER_LINE) {
        let names: Vec<String> = chunk.iter().map(|v| format!("y{v}")).collect();
        let _ = writeln!(out, " {}", names.join(" "));
    }
    out.push_str("End\n");
    out
}

#[derive(Clone, Copy, PartialEq)]
enum Section {
    Start,
    Objective,
    Constraints,
    Binary,
    End,
}

#[derive(Default)]
struct Row {
    line: usize,
    named: bool,
    terms: Vec<(usize, i64)>,
    sign: Option<i64>,
    coeff: Option<i64>,
}

fn var_index(tok: &str) -> Option<usize> {
    tok.strip_prefix('y').and_then(|d| d.parse().ok())
}

/// Parses the subset of LP written by [`export_lp`]. Objective content is
/// ignored.
pub fn parse_lp(text: &str) -> Result<LinearConstraintSystem> {
    let mut section = Section::Start;
    let mut equalities = Vec::new();
    let mut fixed = Vec::new();
    let mut binaries: Vec<usize> = Vec::new();
    let mut row: Option<Row> = None;
    let mut last_line = 0;

    for (lineno, raw) in text.lines().enumerate() {
        let line_no = lineno + 1;
        last_line = line_no;
        let line = raw.split('\\').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let lower = line.to_ascii_lowercase();
        let next = match lower.as_str() {
            "minimize" | "maximize" => Some(Section::Objective),
            "subject to" | "st" | "s.t." => Some(Section::Constraints),
            "binary" | "binaries" => Some(Section::Binary),
            "end" => Some(Section::End),
            _ => None,
        };
        if let Some(s) = next {
            if row.is_some() {
                return Err(Error::parse(line_no, "constraint row not terminated by '='"));
            }
            section = s;
            continue;
        }
        match section {
            Section::Start => return Err(Error::parse(line_no, "expected 'Minimize'")),
            Section::End => return Err(Error::parse(line_no, "content after 'End'")),
            Section::Objective => {}
            Section::Binary => {
                for tok in line.split_whitespace() {
                    let v =
                        var_index(tok).ok_or_else(|| Error::parse(line_no, format!("bad variable name '{tok}'")))?;
                    binaries.push(v);
                }
            }
            Section::Constraints => {
                let mut toks = line.split_whitespace().peekable();
                while let Some(tok) = toks.next() {
                    let r = row.get_or_insert_with(|| Row { line: line_no, ..Row::default() });
                    if let Some(name) = tok.strip_suffix(':') {
                        if r.named || !r.terms.is_empty() || r.sign.is_some() {
                            return Err(Error::parse(line_no, format!("misplaced label '{tok}'")));
                        }
                        if name.is_empty() {
                            return Err(Error::parse(line_no, "empty row label"));
                        }
                        r.named = true;
                        continue;
                    }
                    match tok {
                        "+" | "-" => {
                            if r.sign.is_some() || r.coeff.is_some() {
                                return Err(Error::parse(line_no, "dangling sign"));
                            }
                            r.sign = Some(if tok == "-" { -1 } else { 1 });
                        }
                        "=" => {
                            let rhs_tok =
                                toks.next().ok_or_else(|| Error::parse(line_no, "missing right-hand side"))?;
                            let rhs: i64 = rhs_tok
                                .parse()
                                .map_err(|_| Error::parse(line_no, format!("bad right-hand side '{rhs_tok}'")))?;
                            if toks.peek().is_some() {
                                return Err(Error::parse(line_no, "trailing tokens after right-hand side"));
                            }
                            let r = row.take().unwrap_or_default();
                            if r.sign.is_some() || r.coeff.is_some() {
                                return Err(Error::parse(line_no, "term without variable"));
                            }
                            if r.terms.is_empty() {
                                return Err(Error::parse(r.line, "row has no terms"));
                            }
                            if !r.named && r.terms.len() == 1 && r.terms[0].1 == 1 && (rhs == 0 || rhs == 1) {
                                fixed.push((r.terms[0].0, rhs == 1));
                            } else {
                                equalities.push(Equality::new(r.terms, rhs));
                            }
                        }
                        _ => {
                            if let Some(v) = var_index(tok) {
                                let a = r.sign.take().unwrap_or(1) * r.coeff.take().unwrap_or(1);
                                r.terms.push((v, a));
                            } else if let Ok(c) = tok.parse::<i64>() {
                                if r.coeff.is_some() {
                                    return Err(Error::parse(line_no, "two coefficients in a row"));
                                }
                                r.coeff = Some(c);
                            } else {
                                return Err(Error::parse(line_no, format!("unexpected token '{tok}'")));
                            }
                        }
                    }
                }
            }
        }
    }
    if section != Section::End {
        return Err(Error::parse(last_line, "missing 'End'"));
    }
    binaries.sort_unstable();
    binaries.dedup();
    let num_vars = binaries.len();
    if binaries.iter().enumerate().any(|(i, &v)| i != v) {
        return Err(Error::parse(last_line, "Binary block must list y0..y(N-1)"));
    }
    LinearConstraintSystem::new(num_vars, equalities, fixed)
}
