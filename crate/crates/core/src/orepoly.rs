//! The twisted polynomial ring `F[t; Frob]`: polynomials in `t` with
//! coefficients written on the left and the commutation rule `t c = c^p t`.
//!
//! Abelian restricted Lie algebras are left modules over this ring with `t`
//! acting as the p-map, so a finite presentation of an abelian restricted
//! algebra is a matrix over it. [`diagonalize`] brings such a matrix to
//! diagonal shape with elementary row and column operations, recording them
//! so they can be replayed on the presentation the matrix came from.

use std::fmt;

use rand::Rng;

use crate::error::{Error, Result};
use crate::field::{FiniteField, Fq};

/// `sum c_i t^i`, coefficients on the left. No trailing zero coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct OrePoly {
    field: FiniteField,
    coeffs: Vec<Fq>,
}

/// Which side the divisor sits on in [`OrePoly::divide`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DivSide {
    /// `f = q * g + r`
    Right,
    /// `f = g * q + r`
    Left,
}

impl OrePoly {
    pub fn from_coeffs(field: &FiniteField, mut coeffs: Vec<Fq>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        OrePoly { field: field.clone(), coeffs }
    }

    pub fn zero(field: &FiniteField) -> Self {
        Self::from_coeffs(field, Vec::new())
    }

    pub fn constant(field: &FiniteField, c: Fq) -> Self {
        Self::from_coeffs(field, vec![c])
    }

    pub fn one(field: &FiniteField) -> Self {
        Self::constant(field, Fq::ONE)
    }

    /// `c t^e`
    pub fn monomial(field: &FiniteField, c: Fq, e: usize) -> Self {
        let mut v = vec![Fq::ZERO; e + 1];
        v[e] = c;
        Self::from_coeffs(field, v)
    }

    pub fn t(field: &FiniteField) -> Self {
        Self::monomial(field, Fq::ONE, 1)
    }

    pub fn random<R: Rng + ?Sized>(field: &FiniteField, max_degree: usize, rng: &mut R) -> Self {
        let coeffs = (0..=max_degree).map(|_| field.random(rng)).collect();
        Self::from_coeffs(field, coeffs)
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn coeffs(&self) -> &[Fq] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Fq {
        self.coeffs.get(i).copied().unwrap_or(Fq::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Fq {
        self.coeffs.last().copied().unwrap_or(Fq::ZERO)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == Fq::ONE
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.add_unchecked(other))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.add_unchecked(&other.neg()))
    }

    pub(crate) fn add_unchecked(&self, other: &Self) -> Self {
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let v = (0..n).map(|i| f.add(self.coeff(i), other.coeff(i))).collect();
        Self::from_coeffs(f, v)
    }

    pub fn neg(&self) -> Self {
        let f = &self.field;
        Self::from_coeffs(f, self.coeffs.iter().map(|&c| f.neg(c)).collect())
    }

    /// `c * self`
    pub fn scale_left(&self, c: Fq) -> Self {
        let f = &self.field;
        Self::from_coeffs(f, self.coeffs.iter().map(|&a| f.mul(c, a)).collect())
    }

    /// `self * c`, using `t^i c = c^(p^i) t^i`.
    pub fn scale_right(&self, c: Fq) -> Self {
        let f = &self.field;
        let v = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, &a)| f.mul(a, f.frobenius(c, i as i64)))
            .collect();
        Self::from_coeffs(f, v)
    }

    /// Product in the twisted ring.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn mul_unchecked(&self, other: &Self) -> Self {
        let f = &self.field;
        if self.is_zero() || other.is_zero() {
            return Self::zero(f);
        }
        let mut out = vec![Fq::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.mul_add(out[i + j], a, f.frobenius(b, i as i64));
            }
        }
        Self::from_coeffs(f, out)
    }

    /// Euclidean division on the given side; `deg r < deg g` in both cases.
    /// Left division needs p-th roots of leading coefficients, which is where
    /// perfectness of the coefficient field is used.
    pub fn divide(&self, g: &Self, side: DivSide) -> Result<(Self, Self)> {
        self.check(g)?;
        let f = &self.field;
        let dg = g.degree().ok_or(Error::DivisionByZero)?;
        let lg = g.leading();
        let mut q = vec![Fq::ZERO; self.coeffs.len().saturating_sub(dg)];
        let mut r = self.clone();
        while let Some(dr) = r.degree().filter(|&d| d >= dg) {
            let e = dr - dg;
            let c = match side {
                DivSide::Right => f.div(r.leading(), f.frobenius(lg, e as i64))?,
                DivSide::Left => f.frobenius(f.div(r.leading(), lg)?, -(dg as i64)),
            };
            q[e] = f.add(q[e], c);
            let m = Self::monomial(f, c, e);
            let prod = match side {
                DivSide::Right => m.mul_unchecked(g),
                DivSide::Left => g.mul_unchecked(&m),
            };
            r = r.add_unchecked(&prod.neg());
            debug_assert!(r.degree().is_none_or(|d| d < dr));
        }
        Ok((Self::from_coeffs(f, q), r))
    }

    /// Parses `c0 + c1*t + c2*t^2`; coefficients are field literals, `t`
    /// alone means `1*t`, and repeated powers are summed.
    pub fn parse(field: &FiniteField, text: &str) -> Result<Self> {
        let mut acc = Self::zero(field);
        let mut offset = 0;
        for term in split_top_level_plus(text) {
            let pos = offset;
            offset += term.len() + 1;
            let term = term.trim();
            if term.is_empty() {
                return Err(Error::parse(pos, "empty term"));
            }
            let (coef, power) = match term.find('t') {
                None => (term, None),
                Some(i) => {
                    let head = term[..i].trim();
                    let head = head.strip_suffix('*').map(str::trim).unwrap_or(head);
                    let tail = term[i + 1..].trim();
                    let e = if tail.is_empty() {
                        1
                    } else {
                        tail.strip_prefix('^')
                            .and_then(|x| x.trim().parse::<usize>().ok())
                            .ok_or_else(|| Error::parse(pos + i, format!("bad power in `{term}`")))?
                    };
                    (if head.is_empty() { "1" } else { head }, Some(e))
                }
            };
            let c = field.parse_element(coef).map_err(|_| Error::parse(pos, format!("bad coefficient in `{term}`")))?;
            acc = acc.add_unchecked(&Self::monomial(field, c, power.unwrap_or(0)));
        }
        Ok(acc)
    }
}

fn split_top_level_plus(text: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in text.char_indices() {
        match ch {
            '[' => depth += 1,
            ']' => depth -= 1,
            '+' if depth == 0 => {
                out.push(&text[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&text[start..]);
    out
}

impl fmt::Display for OrePoly {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return out.write_str("0");
        }
        let f = &self.field;
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                out.write_str(" + ")?;
            }
            first = false;
            match i {
                0 => out.write_str(&f.format(c))?,
                _ => {
                    if c != Fq::ONE {
                        write!(out, "{}*", f.format(c))?;
                    }
                    if i == 1 {
                        out.write_str("t")?;
                    } else {
                        write!(out, "t^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for OrePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OrePoly({self})")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OpSide {
    Row,
    Col,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MulSide {
    Left,
    Right,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OpKind {
    /// row: `row[target] += multiplier * row[source]`;
    /// col: `col[target] += col[source] * multiplier`.
    AddMultiple { target: usize, source: usize, multiplier: OrePoly },
    Swap { a: usize, b: usize },
    /// Multiplication by a nonzero constant, the only units of the ring.
    Scale { target: usize, factor: Fq },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElementaryOp {
    pub side: OpSide,
    pub kind: OpKind,
}

impl ElementaryOp {
    /// Rows are combined by left multiplication, columns by right.
    pub fn multiplication_side(&self) -> MulSide {
        match self.side {
            OpSide::Row => MulSide::Left,
            OpSide::Col => MulSide::Right,
        }
    }

    pub fn inverse(&self, field: &FiniteField) -> Result<Self> {
        let kind = match &self.kind {
            OpKind::AddMultiple { target, source, multiplier } => OpKind::AddMultiple {
                target: *target,
                source: *source,
                multiplier: multiplier.neg(),
            },
            OpKind::Swap { a, b } => OpKind::Swap { a: *a, b: *b },
            OpKind::Scale { target, factor } => OpKind::Scale { target: *target, factor: field.inv(*factor)? },
        };
        Ok(ElementaryOp { side: self.side, kind })
    }
}

/// A matrix over the twisted ring with the log of operations applied to it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OreMatrix {
    field: FiniteField,
    rows: usize,
    cols: usize,
    entries: Vec<Vec<OrePoly>>,
    log: Vec<ElementaryOp>,
}

impl OreMatrix {
    pub fn zeros(field: &FiniteField, rows: usize, cols: usize) -> Self {
        OreMatrix {
            field: field.clone(),
            rows,
            cols,
            entries: vec![vec![OrePoly::zero(field); cols]; rows],
            log: Vec::new(),
        }
    }

    pub fn from_rows(field: &FiniteField, entries: Vec<Vec<OrePoly>>) -> Result<Self> {
        let rows = entries.len();
        let cols = entries.first().map_or(0, Vec::len);
        if entries.iter().any(|r| r.len() != cols) {
            return Err(Error::Invalid("ragged matrix".into()));
        }
        if entries.iter().flatten().any(|e| e.field() != field) {
            return Err(Error::FieldMismatch);
        }
        Ok(OreMatrix { field: field.clone(), rows, cols, entries, log: Vec::new() })
    }

    pub fn parse_rows(field: &FiniteField, rows: &[Vec<String>]) -> Result<Self> {
        let entries = rows
            .iter()
            .map(|r| r.iter().map(|s| OrePoly::parse(field, s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(field, entries)
    }

    pub fn to_strings(&self) -> Vec<Vec<String>> {
        self.entries.iter().map(|r| r.iter().map(|e| e.to_string()).collect()).collect()
    }

    pub fn random<R: Rng + ?Sized>(field: &FiniteField, rows: usize, cols: usize, max_degree: usize, rng: &mut R) -> Self {
        let entries = (0..rows)
            .map(|_| (0..cols).map(|_| OrePoly::random(field, max_degree, rng)).collect())
            .collect();
        OreMatrix { field: field.clone(), rows, cols, entries, log: Vec::new() }
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, i: usize, j: usize) -> &OrePoly {
        &self.entries[i][j]
    }

    pub fn entries(&self) -> &[Vec<OrePoly>] {
        &self.entries
    }

    pub fn log(&self) -> &[ElementaryOp] {
        &self.log
    }

    /// Entries equal, ignoring the operation logs.
    pub fn same_entries(&self, other: &Self) -> bool {
        self.entries == other.entries
    }

    /// Nonzero entries lie on the diagonal only, in a leading block.
    pub fn is_diagonal(&self) -> bool {
        let mut seen_zero = false;
        for i in 0..self.rows {
            for j in 0..self.cols {
                let e = &self.entries[i][j];
                if i != j && !e.is_zero() {
                    return false;
                }
                if i == j {
                    if e.is_zero() {
                        seen_zero = true;
                    } else if seen_zero {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn diagonal_rank(&self) -> usize {
        (0..self.rows.min(self.cols)).filter(|&i| !self.entries[i][i].is_zero()).count()
    }

    pub fn apply(&mut self, op: &ElementaryOp) -> Result<()> {
        let bound = match op.side {
            OpSide::Row => self.rows,
            OpSide::Col => self.cols,
        };
        let in_range = match &op.kind {
            OpKind::AddMultiple { target, source, multiplier } => {
                if multiplier.field() != &self.field {
                    return Err(Error::FieldMismatch);
                }
                *target < bound && *source < bound && target != source
            }
            OpKind::Swap { a, b } => *a < bound && *b < bound,
            OpKind::Scale { target, factor } => {
                if factor.is_zero() {
                    return Err(Error::Invalid("scale factor must be nonzero".into()));
                }
                *target < bound
            }
        };
        if !in_range {
            return Err(Error::Invalid(format!("operation out of range: {op:?}")));
        }
        match (&op.side, &op.kind) {
            (OpSide::Row, OpKind::AddMultiple { target, source, multiplier }) => {
                for j in 0..self.cols {
                    let add = multiplier.mul_unchecked(&self.entries[*source][j]);
                    self.entries[*target][j] = self.entries[*target][j].add_unchecked(&add);
                }
            }
            (OpSide::Col, OpKind::AddMultiple { target, source, multiplier }) => {
                for row in &mut self.entries {
                    let add = row[*source].mul_unchecked(multiplier);
                    row[*target] = row[*target].add_unchecked(&add);
                }
            }
            (OpSide::Row, OpKind::Swap { a, b }) => self.entries.swap(*a, *b),
            (OpSide::Col, OpKind::Swap { a, b }) => {
                for row in &mut self.entries {
                    row.swap(*a, *b);
                }
            }
            (OpSide::Row, OpKind::Scale { target, factor }) => {
                for j in 0..self.cols {
                    self.entries[*target][j] = self.entries[*target][j].scale_left(*factor);
                }
            }
            (OpSide::Col, OpKind::Scale { target, factor }) => {
                for row in &mut self.entries {
                    row[*target] = row[*target].scale_right(*factor);
                }
            }
        }
        self.log.push(op.clone());
        Ok(())
    }
}

/// Output of [`diagonalize`].
#[derive(Clone, Debug)]
pub struct Diagonalization {
    pub diagonal: OreMatrix,
    pub row_ops: Vec<ElementaryOp>,
    pub col_ops: Vec<ElementaryOp>,
    /// Number of nonzero diagonal entries; they occupy positions `0..rank`.
    pub rank: usize,
}

/// Applies row operations then column operations to a copy of `m`. Row and
/// column operations commute, so this reproduces any interleaving.
pub fn replay(m: &OreMatrix, row_ops: &[ElementaryOp], col_ops: &[ElementaryOp]) -> Result<OreMatrix> {
    let mut out = m.clone();
    for op in row_ops.iter().chain(col_ops) {
        out.apply(op)?;
    }
    Ok(out)
}

fn min_degree_entry(m: &OreMatrix, s: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, usize)> = None;
    for i in s..m.rows {
        for j in s..m.cols {
            if let Some(d) = m.entries[i][j].degree() {
                if best.is_none_or(|(bd, _, _)| d < bd) {
                    best = Some((d, i, j));
                }
            }
        }
    }
    best.map(|(_, i, j)| (i, j))
}

/// Reduces `m` to diagonal shape by elementary operations.
///
/// The pivot is a nonzero entry of minimal degree in the trailing block,
/// ties going to the smallest `(row, col)`. Its column is cleared with right
/// division and row operations, its row with left division and column
/// operations; a nonzero remainder has smaller degree and triggers a new
/// pivot choice. Nonzero diagonal entries are finally made monic by scaling
/// rows. No divisibility relation between diagonal entries is produced.
pub fn diagonalize(m: &OreMatrix) -> Result<Diagonalization> {
    let field = m.field.clone();
    let mut w = m.clone();
    w.log.clear();
    let mut row_ops = Vec::new();
    let mut col_ops = Vec::new();
    let mut push = |w: &mut OreMatrix, op: ElementaryOp| -> Result<()> {
        w.apply(&op)?;
        match op.side {
            OpSide::Row => row_ops.push(op),
            OpSide::Col => col_ops.push(op),
        }
        Ok(())
    };

    let mut s = 0;
    while s < m.rows.min(m.cols) {
        let Some(mut at) = min_degree_entry(&w, s) else { break };
        loop {
            let (i, j) = at;
            if i != s {
                push(&mut w, ElementaryOp { side: OpSide::Row, kind: OpKind::Swap { a: s, b: i } })?;
            }
            if j != s {
                push(&mut w, ElementaryOp { side: OpSide::Col, kind: OpKind::Swap { a: s, b: j } })?;
            }
            let pivot = w.entries[s][s].clone();
            let mut remainder_left = false;
            for i in s + 1..m.rows {
                if w.entries[i][s].is_zero() {
                    continue;
                }
                let (q, r) = w.entries[i][s].divide(&pivot, DivSide::Right)?;
                if !q.is_zero() {
                    let op = OpKind::AddMultiple { target: i, source: s, multiplier: q.neg() };
                    push(&mut w, ElementaryOp { side: OpSide::Row, kind: op })?;
                }
                remainder_left |= !r.is_zero();
            }
            for j in s + 1..m.cols {
                if w.entries[s][j].is_zero() {
                    continue;
                }
                let (q, r) = w.entries[s][j].divide(&pivot, DivSide::Left)?;
                if !q.is_zero() {
                    let op = OpKind::AddMultiple { target: j, source: s, multiplier: q.neg() };
                    push(&mut w, ElementaryOp { side: OpSide::Col, kind: op })?;
                }
                remainder_left |= !r.is_zero();
            }
            if !remainder_left {
                break;
            }
            at = min_degree_entry(&w, s).expect("a nonzero remainder exists");
        }
        s += 1;
    }

    let rank = w.diagonal_rank();
    for i in 0..rank {
        let lead = w.entries[i][i].leading();
        if lead != Fq::ONE {
            let op = OpKind::Scale { target: i, factor: field.inv(lead)? };
            push(&mut w, ElementaryOp { side: OpSide::Row, kind: op })?;
        }
    }
    debug_assert!(w.is_diagonal());
    Ok(Diagonalization { diagonal: w, row_ops, col_ops, rank })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn f2() -> FiniteField {
        FiniteField::prime(2).unwrap()
    }

    fn f4() -> FiniteField {
        FiniteField::new(2, vec![1, 1, 1]).unwrap()
    }

    fn p(f: &FiniteField, s: &str) -> OrePoly {
        OrePoly::parse(f, s).unwrap()
    }

    #[test]
    fn multiplication_examples() {
        let f = f4();
        assert_eq!(p(&f, "t").mul(&p(&f, "[0,1]*t")).unwrap(), p(&f, "[1,1]*t^2"));
        let f = f2();
        assert_eq!(p(&f, "t + 1").mul(&p(&f, "t + 1")).unwrap(), p(&f, "t^2 + 1"));
        let g = p(&f4(), "[1,1] + t^3 + [0,1]*t");
        assert_eq!(g.mul(&OrePoly::one(&f4())).unwrap(), g);
    }

    #[test]
    fn division_examples() {
        let f = f2();
        let (q, r) = p(&f, "t^2 + t").divide(&p(&f, "t + 1"), DivSide::Right).unwrap();
        assert_eq!((q, r), (p(&f, "t"), OrePoly::zero(&f)));

        let f = f4();
        let (q, r) = p(&f, "[0,1]*t^2").divide(&p(&f, "t"), DivSide::Left).unwrap();
        assert_eq!(q, p(&f, "[1,1]*t"));
        assert!(r.is_zero());
        assert_eq!(p(&f, "t").mul(&q).unwrap(), p(&f, "[0,1]*t^2"));

        let g = p(&f, "[0,1]*t^2 + 1");
        let (q, r) = g.divide(&g, DivSide::Right).unwrap();
        assert_eq!((q, r), (OrePoly::one(&f), OrePoly::zero(&f)));
        assert_eq!(g.divide(&OrePoly::zero(&f), DivSide::Left), Err(Error::DivisionByZero));
    }

    #[test]
    fn division_recomposes() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for field in [f2(), f4(), FiniteField::with_order(9).unwrap()] {
            for _ in 0..300 {
                let f = OrePoly::random(&field, 6, &mut rng);
                let g = OrePoly::random(&field, 3, &mut rng);
                if g.is_zero() {
                    continue;
                }
                let (q, r) = f.divide(&g, DivSide::Right).unwrap();
                assert_eq!(q.mul(&g).unwrap().add(&r).unwrap(), f);
                assert!(r.degree() < g.degree());
                let (q, r) = f.divide(&g, DivSide::Left).unwrap();
                assert_eq!(g.mul(&q).unwrap().add(&r).unwrap(), f);
                assert!(r.degree() < g.degree());
            }
        }
    }

    #[test]
    fn prime_field_ring_is_commutative() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let field = FiniteField::prime(5).unwrap();
        for _ in 0..200 {
            let f = OrePoly::random(&field, 5, &mut rng);
            let g = OrePoly::random(&field, 2, &mut rng);
            if g.is_zero() {
                continue;
            }
            assert_eq!(f.divide(&g, DivSide::Left).unwrap(), f.divide(&g, DivSide::Right).unwrap());
        }
    }

    #[test]
    fn text_format() {
        let f = f4();
        let g = p(&f, "[1,1] + [0,1]*t + t^3");
        assert_eq!(g.to_string(), "[1,1] + [0,1]*t + t^3");
        assert_eq!(p(&f, "t + t").to_string(), "0");
        assert_eq!(p(&f2(), "1 + t^2").to_string(), "1 + t^2");
        assert!(OrePoly::parse(&f, "t^x").is_err());
        assert!(OrePoly::parse(&f, "1 + ").is_err());
    }

    #[test]
    fn diagonalize_examples() {
        let f = f2();
        let rows = |v: &[&[&str]]| -> Vec<Vec<String>> {
            v.iter().map(|r| r.iter().map(|s| s.to_string()).collect()).collect()
        };
        let m = OreMatrix::parse_rows(&f, &rows(&[&["t", "t"], &["t", "t"]])).unwrap();
        let d = diagonalize(&m).unwrap();
        assert_eq!(d.rank, 1);
        assert_eq!(d.diagonal.to_strings(), rows(&[&["t", "0"], &["0", "0"]]));
        assert!(replay(&m, &d.row_ops, &d.col_ops).unwrap().same_entries(&d.diagonal));

        let one = OreMatrix::parse_rows(&f, &rows(&[&["1"]])).unwrap();
        let d = diagonalize(&one).unwrap();
        assert!(d.diagonal.same_entries(&one));
        assert!(d.row_ops.is_empty() && d.col_ops.is_empty());

        for field in [f2(), f4()] {
            let m = OreMatrix::parse_rows(&field, &rows(&[&["t", "t"]])).unwrap();
            let d = diagonalize(&m).unwrap();
            assert_eq!(d.diagonal.to_strings(), rows(&[&["t", "0"]]));
            assert_eq!(d.col_ops.len(), 1);
            assert!(replay(&m, &d.row_ops, &d.col_ops).unwrap().same_entries(&d.diagonal));
        }
    }

    #[test]
    fn ops_invert() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        let field = f4();
        for _ in 0..30 {
            let m = OreMatrix::random(&field, 3, 4, 3, &mut rng);
            let d = diagonalize(&m).unwrap();
            let mut back = d.diagonal.clone();
            for op in d.col_ops.iter().rev().chain(d.row_ops.iter().rev()) {
                back.apply(&op.inverse(&field).unwrap()).unwrap();
            }
            assert!(back.same_entries(&m));
        }
    }

    #[test]
    fn diagonal_entries_are_monic() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let field = FiniteField::with_order(9).unwrap();
        for _ in 0..40 {
            let m = OreMatrix::random(&field, 3, 3, 2, &mut rng);
            let d = diagonalize(&m).unwrap();
            assert!(d.diagonal.is_diagonal());
            for i in 0..d.rank {
                assert!(d.diagonal.entry(i, i).is_monic());
            }
        }
    }
}
