//! Restricted Lie expressions and their S-expression syntax:
//!
//! ```text
//! elem := NAME | "0" | "(br" elem elem ")" | "(pp" elem INT ")"
//!       | "(sc" FIELDLIT elem ")" | "(sum" elem+ ")"
//! ```
//!
//! `(pp e n)` is `e^{[p^n]}` with `n >= 1`. Expressions are shared DAGs:
//! substitution reuses subtrees instead of copying them, and every traversal
//! memoises on node identity so shared nodes are visited once.

use std::collections::HashMap;
use std::fmt::Write;
use std::sync::Arc;

use crate::algebra::{self, RestrictedLieAlgebra};
use crate::error::{Error, Result};
use crate::field::{FiniteField, Fq};

#[derive(Debug, PartialEq, Eq)]
pub enum Expr {
    Zero,
    /// Leaf: index into the surrounding symbol list.
    Gen(usize),
    Br(ExprRef, ExprRef),
    Pp(ExprRef, u32),
    Sc(Fq, ExprRef),
    Sum(Vec<ExprRef>),
}

pub type ExprRef = Arc<Expr>;

fn key(e: &ExprRef) -> *const Expr {
    Arc::as_ptr(e)
}

impl Expr {
    pub fn zero() -> ExprRef {
        Arc::new(Expr::Zero)
    }

    pub fn gen(i: usize) -> ExprRef {
        Arc::new(Expr::Gen(i))
    }

    pub fn br(a: ExprRef, b: ExprRef) -> ExprRef {
        Arc::new(Expr::Br(a, b))
    }

    /// `a^{[p^n]}`; `n = 0` returns `a` itself.
    pub fn pp(a: ExprRef, n: u32) -> ExprRef {
        if n == 0 {
            a
        } else {
            Arc::new(Expr::Pp(a, n))
        }
    }

    pub fn sc(c: Fq, a: ExprRef) -> ExprRef {
        Arc::new(Expr::Sc(c, a))
    }

    pub fn sum(terms: Vec<ExprRef>) -> ExprRef {
        match terms.len() {
            0 => Expr::zero(),
            1 => terms.into_iter().next().unwrap(),
            _ => Arc::new(Expr::Sum(terms)),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Open,
    Close,
    Lit(String),
    Atom(String),
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>> {
    let mut out = Vec::new();
    let bytes = text.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            c if c.is_whitespace() => i += 1,
            '(' => {
                out.push((i, Tok::Open));
                i += 1;
            }
            ')' => {
                out.push((i, Tok::Close));
                i += 1;
            }
            '[' => {
                let end = text[i..].find(']').ok_or_else(|| Error::parse(i, "unterminated field literal"))?;
                out.push((i, Tok::Lit(text[i..=i + end].to_string())));
                i += end + 1;
            }
            _ => {
                let start = i;
                while i < bytes.len() && !matches!(bytes[i] as char, '(' | ')' | '[' | ']') && !(bytes[i] as char).is_whitespace() {
                    i += 1;
                }
                if start == i {
                    return Err(Error::parse(i, format!("unexpected `{c}`")));
                }
                out.push((start, Tok::Atom(text[start..i].to_string())));
            }
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
    field: &'a FiniteField,
    names: &'a [String],
}

impl Parser<'_> {
    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |t| t.0)
    }

    fn next(&mut self) -> Result<(usize, Tok)> {
        let t = self.toks.get(self.at).cloned().ok_or_else(|| Error::parse(self.end, "unexpected end of input"))?;
        self.at += 1;
        Ok(t)
    }

    fn close(&mut self) -> Result<()> {
        match self.next()? {
            (_, Tok::Close) => Ok(()),
            (pos, t) => Err(Error::parse(pos, format!("expected `)`, found {t:?}"))),
        }
    }

    fn elem(&mut self) -> Result<ExprRef> {
        match self.next()? {
            (_, Tok::Atom(a)) if a == "0" => Ok(Expr::zero()),
            (pos, Tok::Atom(a)) => {
                if a.starts_with(|c: char| c.is_ascii_digit()) {
                    return Err(Error::parse(pos, format!("expected an element, found number `{a}`")));
                }
                let i = self.names.iter().position(|n| *n == a).ok_or(Error::UnknownGenerator(a))?;
                Ok(Expr::gen(i))
            }
            (_, Tok::Open) => {
                let (pos, head) = self.next()?;
                let Tok::Atom(head) = head else {
                    return Err(Error::parse(pos, "expected br, pp, sc or sum"));
                };
                let e = match head.as_str() {
                    "br" => {
                        let a = self.elem()?;
                        let b = self.elem()?;
                        Expr::br(a, b)
                    }
                    "pp" => {
                        let a = self.elem()?;
                        let (pos, n) = self.next()?;
                        let n = match n {
                            Tok::Atom(n) => n.parse::<u32>().ok().filter(|&n| n >= 1),
                            _ => None,
                        }
                        .ok_or_else(|| Error::parse(pos, "expected a positive p-power exponent"))?;
                        Arc::new(Expr::Pp(a, n))
                    }
                    "sc" => {
                        let (pos, lit) = self.next()?;
                        let lit = match lit {
                            Tok::Lit(s) | Tok::Atom(s) => s,
                            _ => return Err(Error::parse(pos, "expected a field literal")),
                        };
                        let c = self.field.parse_element(&lit).map_err(|e| match e {
                            Error::Parse { msg, .. } => Error::parse(pos, msg),
                            other => other,
                        })?;
                        let a = self.elem()?;
                        Expr::sc(c, a)
                    }
                    "sum" => {
                        let mut terms = vec![self.elem()?];
                        while !matches!(self.toks.get(self.at), Some((_, Tok::Close)) | None) {
                            terms.push(self.elem()?);
                        }
                        Arc::new(Expr::Sum(terms))
                    }
                    other => return Err(Error::parse(pos, format!("unknown operator `{other}`"))),
                };
                self.close()?;
                Ok(e)
            }
            (pos, t) => Err(Error::parse(pos, format!("unexpected {t:?}"))),
        }
    }
}

/// Parses an expression over the given generator names.
pub fn parse_expr(text: &str, field: &FiniteField, names: &[String]) -> Result<ExprRef> {
    let mut p = Parser { toks: tokenize(text)?, at: 0, end: text.len(), field, names };
    let e = p.elem()?;
    if p.at != p.toks.len() {
        return Err(Error::parse(p.pos(), "trailing input"));
    }
    Ok(e)
}

/// Writes an expression in the S-expression syntax, expanding shared nodes.
pub fn format_expr(e: &Expr, field: &FiniteField, names: &[String]) -> String {
    let mut out = String::new();
    write_expr(&mut out, e, field, names);
    out
}

fn write_expr(out: &mut String, e: &Expr, field: &FiniteField, names: &[String]) {
    match e {
        Expr::Zero => out.push('0'),
        Expr::Gen(i) => out.push_str(&names[*i]),
        Expr::Br(a, b) => {
            out.push_str("(br ");
            write_expr(out, a, field, names);
            out.push(' ');
            write_expr(out, b, field, names);
            out.push(')');
        }
        Expr::Pp(a, n) => {
            out.push_str("(pp ");
            write_expr(out, a, field, names);
            let _ = write!(out, " {n})");
        }
        Expr::Sc(c, a) => {
            let _ = write!(out, "(sc {} ", field.format(*c));
            write_expr(out, a, field, names);
            out.push(')');
        }
        Expr::Sum(ts) => {
            out.push_str("(sum");
            for t in ts {
                out.push(' ');
                write_expr(out, t, field, names);
            }
            out.push(')');
        }
    }
}

/// Whether generator `i` occurs anywhere in `e`.
pub fn mentions(e: &ExprRef, i: usize) -> bool {
    fn go(e: &ExprRef, i: usize, seen: &mut HashMap<*const Expr, bool>) -> bool {
        if let Some(&r) = seen.get(&key(e)) {
            return r;
        }
        let r = match &**e {
            Expr::Zero => false,
            Expr::Gen(j) => *j == i,
            Expr::Br(a, b) => go(a, i, seen) || go(b, i, seen),
            Expr::Pp(a, _) | Expr::Sc(_, a) => go(a, i, seen),
            Expr::Sum(ts) => ts.iter().any(|t| go(t, i, seen)),
        };
        seen.insert(key(e), r);
        r
    }
    go(e, i, &mut HashMap::new())
}

/// Largest generator index used, if any.
pub fn max_generator(e: &ExprRef) -> Option<usize> {
    fn go(e: &ExprRef, seen: &mut HashMap<*const Expr, Option<usize>>) -> Option<usize> {
        if let Some(&r) = seen.get(&key(e)) {
            return r;
        }
        let r = match &**e {
            Expr::Zero => None,
            Expr::Gen(j) => Some(*j),
            Expr::Br(a, b) => go(a, seen).max(go(b, seen)),
            Expr::Pp(a, _) | Expr::Sc(_, a) => go(a, seen),
            Expr::Sum(ts) => ts.iter().filter_map(|t| go(t, seen)).max(),
        };
        seen.insert(key(e), r);
        r
    }
    go(e, &mut HashMap::new())
}

/// Replaces every leaf `Gen(i)` by `images[i]`, sharing the images.
pub fn substitute(e: &ExprRef, images: &[ExprRef]) -> ExprRef {
    fn go(e: &ExprRef, images: &[ExprRef], seen: &mut HashMap<*const Expr, ExprRef>) -> ExprRef {
        if let Some(r) = seen.get(&key(e)) {
            return r.clone();
        }
        let r = match &**e {
            Expr::Zero => e.clone(),
            Expr::Gen(i) => images[*i].clone(),
            Expr::Br(a, b) => Expr::br(go(a, images, seen), go(b, images, seen)),
            Expr::Pp(a, n) => Expr::pp(go(a, images, seen), *n),
            Expr::Sc(c, a) => Expr::sc(*c, go(a, images, seen)),
            Expr::Sum(ts) => Expr::sum(ts.iter().map(|t| go(t, images, seen)).collect()),
        };
        seen.insert(key(e), r.clone());
        r
    }
    go(e, images, &mut HashMap::new())
}

/// Local rewriting that never changes the denoted element: drops zeros and
/// unit scalars, merges nested sums, scalars and p-powers, cancels `[a, a]`
/// for identical leaves or shared nodes, and collects scalar multiples of
/// the same leaf or shared node inside a sum.
pub fn simplify(e: &ExprRef, field: &FiniteField) -> ExprRef {
    fn go(e: &ExprRef, f: &FiniteField, seen: &mut HashMap<*const Expr, ExprRef>) -> ExprRef {
        if let Some(r) = seen.get(&key(e)) {
            return r.clone();
        }
        let r = match &**e {
            Expr::Zero | Expr::Gen(_) => e.clone(),
            Expr::Br(a, b) => {
                let (a, b) = (go(a, f, seen), go(b, f, seen));
                let same = Arc::ptr_eq(&a, &b) || matches!((&*a, &*b), (Expr::Gen(i), Expr::Gen(j)) if i == j);
                if same || matches!(*a, Expr::Zero) || matches!(*b, Expr::Zero) {
                    Expr::zero()
                } else {
                    Expr::br(a, b)
                }
            }
            Expr::Pp(a, n) => {
                let a = go(a, f, seen);
                match &*a {
                    Expr::Zero => a.clone(),
                    Expr::Pp(b, m) => Expr::pp(b.clone(), m + n),
                    _ => Expr::pp(a, *n),
                }
            }
            Expr::Sc(c, a) => {
                let a = go(a, f, seen);
                scaled(f, *c, a)
            }
            Expr::Sum(ts) => {
                // (base, coefficient) in first-seen order
                let mut terms: Vec<(ExprRef, Fq)> = Vec::new();
                let mut stack: Vec<(ExprRef, Fq)> = ts.iter().rev().map(|t| (go(t, f, seen), Fq::ONE)).collect();
                while let Some((t, c)) = stack.pop() {
                    match &*t {
                        Expr::Zero => {}
                        Expr::Sum(inner) => stack.extend(inner.iter().rev().map(|s| (s.clone(), c))),
                        Expr::Sc(d, base) => stack.push((base.clone(), f.mul(c, *d))),
                        _ => {
                            let same = |b: &ExprRef| {
                                Arc::ptr_eq(b, &t) || matches!((&**b, &*t), (Expr::Gen(i), Expr::Gen(j)) if i == j)
                            };
                            match terms.iter_mut().find(|(b, _)| same(b)) {
                                Some(entry) => entry.1 = f.add(entry.1, c),
                                None => terms.push((t.clone(), c)),
                            }
                        }
                    }
                }
                Expr::sum(
                    terms
                        .into_iter()
                        .filter(|(_, c)| !c.is_zero())
                        .map(|(b, c)| scaled(f, c, b))
                        .collect(),
                )
            }
        };
        seen.insert(key(e), r.clone());
        r
    }
    go(e, field, &mut HashMap::new())
}

fn scaled(f: &FiniteField, c: Fq, a: ExprRef) -> ExprRef {
    if c.is_zero() || matches!(*a, Expr::Zero) {
        return Expr::zero();
    }
    if c == Fq::ONE {
        return a;
    }
    match &*a {
        Expr::Sc(d, b) => scaled(f, f.mul(c, *d), b.clone()),
        _ => Expr::sc(c, a),
    }
}

/// True when the expression denotes zero for purely syntactic reasons.
pub fn is_formally_zero(e: &ExprRef, field: &FiniteField) -> bool {
    matches!(*simplify(e, field), Expr::Zero)
}

/// Evaluates `e` in `alg`, sending leaf `i` to `leaves[i]`.
pub fn eval<A: RestrictedLieAlgebra + ?Sized>(e: &ExprRef, alg: &A, leaves: &[Vec<Fq>]) -> Result<Vec<Fq>> {
    fn go<A: RestrictedLieAlgebra + ?Sized>(
        e: &ExprRef,
        alg: &A,
        leaves: &[Vec<Fq>],
        seen: &mut HashMap<*const Expr, Vec<Fq>>,
    ) -> Result<Vec<Fq>> {
        if let Some(v) = seen.get(&key(e)) {
            return Ok(v.clone());
        }
        let f = alg.field();
        let v = match &**e {
            Expr::Zero => alg.zero_vec(),
            Expr::Gen(i) => leaves
                .get(*i)
                .cloned()
                .ok_or_else(|| Error::Invalid(format!("no value for generator index {i}")))?,
            Expr::Br(a, b) => {
                let a = go(a, alg, leaves, seen)?;
                let b = go(b, alg, leaves, seen)?;
                alg.bracket(&a, &b)
            }
            Expr::Pp(a, n) => {
                let a = go(a, alg, leaves, seen)?;
                alg.pmap_iter(&a, *n)
            }
            Expr::Sc(c, a) => algebra::scale(f, *c, &go(a, alg, leaves, seen)?),
            Expr::Sum(ts) => {
                let mut acc = alg.zero_vec();
                for t in ts {
                    let v = go(t, alg, leaves, seen)?;
                    algebra::axpy(f, &mut acc, Fq::ONE, &v);
                }
                acc
            }
        };
        seen.insert(key(e), v.clone());
        Ok(v)
    }
    go(e, alg, leaves, &mut HashMap::new())
}
