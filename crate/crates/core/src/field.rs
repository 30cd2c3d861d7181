//! Exact arithmetic in finite fields `F_{p^k}`.
//!
//! A [`FiniteField`] is a cheap, shareable handle. Elements are plain
//! [`Fq`] codes that only make sense together with their field, in the style
//! of ring handles: `field.mul(a, b)`. The code of `c_0 + c_1 a + ... +
//! c_{k-1} a^{k-1}` is `c_0 + c_1 p + ... + c_{k-1} p^{k-1}`.
//!
//! [`FieldElement`] bundles a code with its field for the checked, public
//! arithmetic where mixing fields must be rejected.

use std::fmt;
use std::sync::Arc;

use rand::Rng;

use crate::error::{Error, Result};

/// Largest supported field order.
pub const MAX_ORDER: u32 = 1 << 16;

/// Element code of some finite field. Meaningless without its field.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fq(pub(crate) u32);

impl Fq {
    pub const ZERO: Fq = Fq(0);
    pub const ONE: Fq = Fq(1);

    pub fn code(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

struct Inner {
    p: u32,
    k: usize,
    q: u32,
    modulus: Vec<u32>,
    // exp[i] = g^i for a fixed primitive element g, i < q - 1
    exp: Vec<u32>,
    log: Vec<u32>,
    // full addition table for small non-binary extension fields
    add_table: Option<Vec<u16>>,
}

/// The field `F_p[a]/(m(a))` for a monic irreducible `m` of degree `k`.
#[derive(Clone)]
pub struct FiniteField {
    inner: Arc<Inner>,
}

impl PartialEq for FiniteField {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.p == other.inner.p && self.inner.modulus == other.inner.modulus)
    }
}

impl Eq for FiniteField {}

impl fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.k == 1 {
            write!(f, "gf({})", self.inner.p)
        } else {
            let m: Vec<String> = self.inner.modulus.iter().map(|c| c.to_string()).collect();
            write!(f, "gf({}; {})", self.inner.q, m.join(","))
        }
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Splits a prime power `q = p^k`.
pub(crate) fn prime_power(q: u64) -> Option<(u32, usize)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut rest = q;
    let mut k = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        k += 1;
    }
    (rest == 1).then_some((p as u32, k))
}

// Dense polynomials over F_p, constant term first, used only while the field
// tables are being built.
mod fp_poly {
    pub fn trim(a: &mut Vec<u32>) {
        while a.last() == Some(&0) {
            a.pop();
        }
    }

    pub fn rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
        let mut r = a.to_vec();
        trim(&mut r);
        let db = b.len() - 1;
        let inv_lead = inv(b[db], p);
        while r.len() > db {
            let shift = r.len() - 1 - db;
            let c = (r[r.len() - 1] as u64 * inv_lead as u64 % p as u64) as u32;
            for (i, &bi) in b.iter().enumerate() {
                let t = (c as u64 * bi as u64 % p as u64) as u32;
                r[shift + i] = (r[shift + i] + p - t) % p;
            }
            trim(&mut r);
        }
        r
    }

    pub fn mul_mod(a: &[u32], b: &[u32], m: &[u32], p: u32) -> Vec<u32> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u32; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = ((out[i + j] as u64 + x as u64 * y as u64) % p as u64) as u32;
            }
        }
        rem(&out, m, p)
    }

    pub fn inv(a: u32, p: u32) -> u32 {
        let mut r = 1u64;
        let mut b = a as u64 % p as u64;
        let mut e = p - 2;
        while e > 0 {
            if e & 1 == 1 {
                r = r * b % p as u64;
            }
            b = b * b % p as u64;
            e >>= 1;
        }
        r as u32
    }
}

fn digits(code: u32, p: u32, k: usize) -> Vec<u32> {
    let mut c = code;
    (0..k)
        .map(|_| {
            let d = c % p;
            c /= p;
            d
        })
        .collect()
}

fn undigits(d: &[u32], p: u32) -> u32 {
    d.iter().rev().fold(0, |acc, &x| acc * p + x)
}

fn is_irreducible(modulus: &[u32], p: u32) -> bool {
    let k = modulus.len() - 1;
    for d in 1..=k / 2 {
        let count = (p as u64).pow(d as u32);
        for low in 0..count {
            let mut g = digits(low as u32, p, d);
            g.push(1);
            if fp_poly::rem(modulus, &g, p).is_empty() {
                return false;
            }
        }
    }
    true
}

impl FiniteField {
    /// The prime field `F_p`.
    pub fn prime(p: u32) -> Result<Self> {
        Self::new(p, vec![0, 1])
    }

    /// `F_p[a]/(modulus)`, coefficients constant term first. The modulus
    /// must be monic and irreducible; this is checked.
    pub fn new(p: u32, modulus: Vec<u32>) -> Result<Self> {
        if !is_prime(p as u64) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        if modulus.len() < 2 {
            return Err(Error::InvalidField("modulus must have degree at least 1".into()));
        }
        let k = modulus.len() - 1;
        if modulus[k] != 1 {
            return Err(Error::InvalidField("modulus must be monic".into()));
        }
        if let Some(c) = modulus.iter().find(|&&c| c >= p) {
            return Err(Error::InvalidField(format!("modulus coefficient {c} is not reduced mod {p}")));
        }
        let q = (p as u64)
            .checked_pow(k as u32)
            .filter(|&q| q <= MAX_ORDER as u64)
            .ok_or_else(|| Error::InvalidField(format!("order {p}^{k} exceeds {MAX_ORDER}")))?
            as u32;
        if !is_irreducible(&modulus, p) {
            return Err(Error::InvalidField("modulus is reducible".into()));
        }

        let slow_mul = |a: u32, b: u32| -> u32 {
            let r = fp_poly::mul_mod(&digits(a, p, k), &digits(b, p, k), &modulus, p);
            let mut d = r;
            d.resize(k, 0);
            undigits(&d, p)
        };
        let slow_pow = |a: u32, mut e: u64| -> u32 {
            let mut r = 1;
            let mut b = a;
            while e > 0 {
                if e & 1 == 1 {
                    r = slow_mul(r, b);
                }
                b = slow_mul(b, b);
                e >>= 1;
            }
            r
        };
        let order = (q - 1) as u64;
        let factors = prime_factors(order);
        let g = (1..q)
            .find(|&g| factors.iter().all(|&l| slow_pow(g, order / l) != 1))
            .expect("multiplicative group of a finite field is cyclic");
        let mut exp = Vec::with_capacity(q as usize - 1);
        let mut log = vec![0u32; q as usize];
        let mut x = 1;
        for i in 0..q - 1 {
            exp.push(x);
            log[x as usize] = i;
            x = slow_mul(x, g);
        }

        let add_table = (k > 1 && p != 2 && q <= 256).then(|| {
            let mut t = vec![0u16; (q * q) as usize];
            for a in 0..q {
                let da = digits(a, p, k);
                for b in 0..q {
                    let db = digits(b, p, k);
                    let s: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                    t[(a * q + b) as usize] = undigits(&s, p) as u16;
                }
            }
            t
        });

        Ok(FiniteField {
            inner: Arc::new(Inner { p, k, q, modulus, exp, log, add_table }),
        })
    }

    /// `F_q` with the first monic irreducible modulus in the order of
    /// increasing code of its lower coefficients.
    pub fn with_order(q: u32) -> Result<Self> {
        let (p, k) = prime_power(q as u64)
            .ok_or_else(|| Error::InvalidField(format!("{q} is not a prime power")))?;
        if k == 1 {
            return Self::prime(p);
        }
        if q > MAX_ORDER {
            return Err(Error::InvalidField(format!("order {q} exceeds {MAX_ORDER}")));
        }
        for low in 0..q {
            let mut m = digits(low, p, k);
            m.push(1);
            if is_irreducible(&m, p) {
                return Self::new(p, m);
            }
        }
        unreachable!("irreducible polynomials exist in every degree")
    }

    /// Parses `gf(p)`, `gf(q)`, `gf(q; c0,...,ck)` or `gf(p^k; c0,...,ck)`.
    pub fn parse(text: &str) -> Result<Self> {
        let bad = |m: &str| Error::InvalidField(format!("`{text}`: {m}"));
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let body = s
            .strip_prefix("gf(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| bad("expected gf(...)"))?;
        let (order, modulus) = match body.split_once(';') {
            Some((o, m)) => (o, Some(m)),
            None => (body, None),
        };
        let q: u64 = match order.split_once('^') {
            Some((b, e)) => {
                let b: u64 = b.parse().map_err(|_| bad("bad characteristic"))?;
                let e: u32 = e.parse().map_err(|_| bad("bad exponent"))?;
                b.checked_pow(e).ok_or_else(|| bad("order too large"))?
            }
            None => order.parse().map_err(|_| bad("bad order"))?,
        };
        let (p, k) = prime_power(q).ok_or_else(|| bad("order is not a prime power"))?;
        match modulus {
            None if q > MAX_ORDER as u64 => Err(bad("order too large")),
            None => Self::with_order(q as u32),
            Some(m) => {
                let coeffs = m
                    .split(',')
                    .map(|c| c.parse::<u32>())
                    .collect::<std::result::Result<Vec<_>, _>>()
                    .map_err(|_| bad("bad modulus coefficient"))?;
                if coeffs.len() != k + 1 {
                    return Err(bad("modulus degree does not match the order"));
                }
                Self::new(p, coeffs)
            }
        }
    }

    pub fn characteristic(&self) -> u32 {
        self.inner.p
    }

    pub fn degree(&self) -> usize {
        self.inner.k
    }

    pub fn order(&self) -> u32 {
        self.inner.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.inner.modulus
    }

    pub fn elements(&self) -> impl Iterator<Item = Fq> {
        (0..self.inner.q).map(Fq)
    }

    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Fq {
        Fq(rng.gen_range(0..self.inner.q))
    }

    pub fn random_nonzero<R: Rng + ?Sized>(&self, rng: &mut R) -> Fq {
        Fq(rng.gen_range(1..self.inner.q))
    }

    /// The element with the given power-basis coordinates (shorter vectors
    /// are zero-padded).
    pub fn element(&self, coeffs: &[u32]) -> Result<Fq> {
        let Inner { p, k, .. } = *self.inner;
        if coeffs.len() > k {
            return Err(Error::Invalid(format!("element has {} coordinates, field degree is {k}", coeffs.len())));
        }
        if let Some(c) = coeffs.iter().find(|&&c| c >= p) {
            return Err(Error::Invalid(format!("coordinate {c} is not reduced mod {p}")));
        }
        Ok(Fq(undigits(coeffs, p)))
    }

    /// The image of an integer under `Z -> F_p -> F`.
    pub fn from_int(&self, n: i64) -> Fq {
        Fq(n.rem_euclid(self.inner.p as i64) as u32)
    }

    pub fn coeffs(&self, a: Fq) -> Vec<u32> {
        digits(a.0, self.inner.p, self.inner.k)
    }

    /// Element literal: a bare integer for prime fields, `[c0,c1,...]`
    /// otherwise.
    pub fn format(&self, a: Fq) -> String {
        if self.inner.k == 1 {
            a.0.to_string()
        } else {
            let c: Vec<String> = self.coeffs(a).iter().map(|c| c.to_string()).collect();
            format!("[{}]", c.join(","))
        }
    }

    /// Parses `[c0,c1,...]` or a bare non-negative integer below `p`.
    pub fn parse_element(&self, text: &str) -> Result<Fq> {
        let t = text.trim();
        let err = |m: String| Error::parse(0, format!("field literal `{t}`: {m}"));
        let coeffs: Vec<u32> = if let Some(inner) = t.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
            if inner.trim().is_empty() {
                Vec::new()
            } else {
                inner
                    .split(',')
                    .map(|c| c.trim().parse::<u32>())
                    .collect::<std::result::Result<_, _>>()
                    .map_err(|e| err(e.to_string()))?
            }
        } else {
            vec![t.parse::<u32>().map_err(|e| err(e.to_string()))?]
        };
        self.element(&coeffs).map_err(|e| err(e.to_string()))
    }

    #[inline]
    pub fn add(&self, a: Fq, b: Fq) -> Fq {
        let inner = &*self.inner;
        if inner.k == 1 {
            let s = a.0 + b.0;
            Fq(if s >= inner.p { s - inner.p } else { s })
        } else if inner.p == 2 {
            Fq(a.0 ^ b.0)
        } else if let Some(t) = &inner.add_table {
            Fq(t[(a.0 * inner.q + b.0) as usize] as u32)
        } else {
            let (p, k) = (inner.p, inner.k);
            let (mut x, mut y, mut out, mut place) = (a.0, b.0, 0, 1);
            for _ in 0..k {
                out += ((x % p + y % p) % p) * place;
                x /= p;
                y /= p;
                place *= p;
            }
            Fq(out)
        }
    }

    #[inline]
    pub fn neg(&self, a: Fq) -> Fq {
        let inner = &*self.inner;
        if inner.k == 1 {
            Fq(if a.0 == 0 { 0 } else { inner.p - a.0 })
        } else if inner.p == 2 {
            a
        } else {
            let d: Vec<u32> = self.coeffs(a).iter().map(|&c| (inner.p - c) % inner.p).collect();
            Fq(undigits(&d, inner.p))
        }
    }

    #[inline]
    pub fn sub(&self, a: Fq, b: Fq) -> Fq {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Fq, b: Fq) -> Fq {
        let inner = &*self.inner;
        if a.0 == 0 || b.0 == 0 {
            return Fq::ZERO;
        }
        if inner.k == 1 {
            return Fq((a.0 as u64 * b.0 as u64 % inner.p as u64) as u32);
        }
        let n = inner.q - 1;
        let s = inner.log[a.0 as usize] + inner.log[b.0 as usize];
        Fq(inner.exp[(if s >= n { s - n } else { s }) as usize])
    }

    /// `a + b * c`
    #[inline]
    pub fn mul_add(&self, a: Fq, b: Fq, c: Fq) -> Fq {
        self.add(a, self.mul(b, c))
    }

    pub fn inv(&self, a: Fq) -> Result<Fq> {
        if a.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        let inner = &*self.inner;
        let n = inner.q - 1;
        let l = inner.log[a.0 as usize];
        Ok(Fq(inner.exp[((n - l) % n) as usize]))
    }

    pub fn div(&self, a: Fq, b: Fq) -> Result<Fq> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: Fq, e: u64) -> Fq {
        if e == 0 {
            return Fq::ONE;
        }
        if a.0 == 0 {
            return Fq::ZERO;
        }
        let inner = &*self.inner;
        let n = (inner.q - 1) as u64;
        let l = inner.log[a.0 as usize] as u64;
        Fq(inner.exp[((l * (e % n)) % n) as usize])
    }

    /// `a^(p^n)`; negative `n` applies the inverse automorphism, realised as
    /// `x -> x^(p^(n mod k))` since `x^(p^k) = x`.
    pub fn frobenius(&self, a: Fq, n: i64) -> Fq {
        let inner = &*self.inner;
        if inner.k == 1 || a.0 == 0 {
            return a;
        }
        let s = n.rem_euclid(inner.k as i64) as u32;
        if s == 0 {
            return a;
        }
        let order = (inner.q - 1) as u64;
        let e = (inner.p as u64).pow(s) % order;
        let l = inner.log[a.0 as usize] as u64;
        Fq(inner.exp[(l * e % order) as usize])
    }

    pub fn wrap(&self, a: Fq) -> FieldElement {
        FieldElement { field: self.clone(), value: a }
    }
}

/// An element together with the field it belongs to.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldElement {
    field: FiniteField,
    value: Fq,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Checked arithmetic on owned elements; cross-field operands are rejected.
pub fn field_arith(a: &FieldElement, b: &FieldElement, op: ArithOp) -> Result<FieldElement> {
    if a.field != b.field {
        return Err(Error::FieldMismatch);
    }
    let f = &a.field;
    let value = match op {
        ArithOp::Add => f.add(a.value, b.value),
        ArithOp::Sub => f.sub(a.value, b.value),
        ArithOp::Mul => f.mul(a.value, b.value),
        ArithOp::Div => f.div(a.value, b.value)?,
    };
    Ok(f.wrap(value))
}

impl FieldElement {
    pub fn new(field: &FiniteField, coeffs: &[u32]) -> Result<Self> {
        Ok(field.wrap(field.element(coeffs)?))
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn value(&self) -> Fq {
        self.value
    }

    pub fn coeffs(&self) -> Vec<u32> {
        self.field.coeffs(self.value)
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        field_arith(self, other, ArithOp::Add)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        field_arith(self, other, ArithOp::Sub)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        field_arith(self, other, ArithOp::Mul)
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        field_arith(self, other, ArithOp::Div)
    }

    pub fn frobenius(&self, n: i64) -> Self {
        self.field.wrap(self.field.frobenius(self.value, n))
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in {}", self.field.format(self.value), self.field)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.field.format(self.value))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn f4() -> FiniteField {
        FiniteField::new(2, vec![1, 1, 1]).unwrap()
    }

    fn small_fields() -> Vec<FiniteField> {
        (2..=256u32)
            .filter(|&q| prime_power(q as u64).is_some())
            .map(|q| FiniteField::with_order(q).unwrap())
            .collect()
    }

    #[test]
    fn arithmetic_examples() {
        let f2 = FiniteField::prime(2).unwrap();
        let one = f2.wrap(Fq::ONE);
        assert!(one.add(&one).unwrap().is_zero());

        let f4 = f4();
        let a = FieldElement::new(&f4, &[0, 1]).unwrap();
        assert_eq!(a.mul(&a).unwrap().coeffs(), vec![1, 1]);

        let f9 = FiniteField::new(3, vec![1, 0, 1]).unwrap();
        let a = FieldElement::new(&f9, &[0, 1]).unwrap();
        assert_eq!(a.mul(&a).unwrap().coeffs(), vec![2, 0]);
    }

    #[test]
    fn checked_errors() {
        let f4 = f4();
        let f2 = FiniteField::prime(2).unwrap();
        let a = FieldElement::new(&f4, &[0, 1]).unwrap();
        let zero = FieldElement::new(&f4, &[]).unwrap();
        assert_eq!(a.div(&zero), Err(Error::DivisionByZero));
        let b = f2.wrap(Fq::ONE);
        assert_eq!(a.add(&b), Err(Error::FieldMismatch));
    }

    #[test]
    fn frobenius_examples() {
        let f4 = f4();
        let a = f4.element(&[0, 1]).unwrap();
        let a1 = f4.element(&[1, 1]).unwrap();
        assert_eq!(f4.frobenius(a, 1), a1);
        assert_eq!(f4.frobenius(a, -1), a1);
        assert_eq!(f4.mul(a1, a1), a);
        for f in small_fields() {
            for n in -5..5 {
                assert_eq!(f.frobenius(Fq::ONE, n), Fq::ONE);
            }
        }
    }

    #[test]
    fn frobenius_inverts_on_small_fields() {
        for f in small_fields() {
            let k = f.degree() as i64;
            for e in f.elements() {
                for n in -k - 1..=k + 1 {
                    assert_eq!(f.frobenius(f.frobenius(e, n), -n), e, "{f} {e:?} {n}");
                }
                assert_eq!(f.frobenius(e, 1), f.pow(e, f.characteristic() as u64));
                if k == 1 {
                    assert_eq!(f.frobenius(e, 3), e);
                }
            }
        }
    }

    #[test]
    fn frobenius_is_a_ring_map() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for f in [f4(), FiniteField::with_order(27).unwrap(), FiniteField::with_order(125).unwrap()] {
            for _ in 0..1000 {
                let (a, b) = (f.random(&mut rng), f.random(&mut rng));
                let fr = |x| f.frobenius(x, 1);
                assert_eq!(fr(f.add(a, b)), f.add(fr(a), fr(b)));
                assert_eq!(fr(f.mul(a, b)), f.mul(fr(a), fr(b)));
            }
        }
    }

    #[test]
    fn table_arithmetic_matches_field_axioms() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for f in [FiniteField::with_order(9).unwrap(), FiniteField::with_order(625).unwrap(), FiniteField::with_order(1 << 12).unwrap()] {
            for _ in 0..500 {
                let (a, b, c) = (f.random(&mut rng), f.random(&mut rng), f.random(&mut rng));
                assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                assert_eq!(f.add(a, f.neg(a)), Fq::ZERO);
                if !b.is_zero() {
                    assert_eq!(f.mul(f.div(a, b).unwrap(), b), a);
                }
            }
        }
    }

    #[test]
    fn construction_is_validated() {
        assert!(FiniteField::new(2, vec![1, 0, 1]).is_err()); // (a+1)^2
        assert!(FiniteField::new(4, vec![0, 1]).is_err());
        assert!(FiniteField::new(2, vec![1, 1, 0]).is_err());
        assert!(FiniteField::with_order(6).is_err());
        assert!(FiniteField::with_order(1 << 17).is_err());
    }

    #[test]
    fn literals() {
        let f = FiniteField::parse("gf(4; 1,1,1)").unwrap();
        assert_eq!(f, f4());
        assert_eq!(FiniteField::parse("gf(2^2;1,1,1)").unwrap(), f4());
        assert_eq!(FiniteField::parse("gf(9)").unwrap().modulus(), &[1, 0, 1]);
        assert_eq!(FiniteField::parse("gf(3)").unwrap().to_string(), "gf(3)");
        assert_eq!(f.to_string(), "gf(4; 1,1,1)");
        assert!(FiniteField::parse("gf(4; 1,1)").is_err());
        let x = f.parse_element("[1,1]").unwrap();
        assert_eq!(f.coeffs(x), vec![1, 1]);
        assert_eq!(f.format(x), "[1,1]");
        assert_eq!(f.parse_element("1").unwrap(), Fq::ONE);
        assert!(f.parse_element("[2]").is_err());
    }
}
