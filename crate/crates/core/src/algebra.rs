//! The interface shared by every finite-dimensional restricted Lie algebra
//! in the crate, plus dense coordinate-vector helpers.

use crate::field::{FiniteField, Fq};

/// A finite-dimensional restricted Lie algebra with a fixed basis. Vectors
/// are dense coordinate slices of length [`dim`](Self::dim).
pub trait RestrictedLieAlgebra {
    fn field(&self) -> &FiniteField;

    fn dim(&self) -> usize;

    fn bracket(&self, u: &[Fq], v: &[Fq]) -> Vec<Fq>;

    /// The p-map `u -> u^{[p]}`.
    fn pmap(&self, u: &[Fq]) -> Vec<Fq>;

    /// Vectors whose adjoint maps, together with the p-map, generate every
    /// adjoint map: closing a subspace under bracketing with these and under
    /// the p-map yields a restricted ideal.
    fn ideal_test_vectors(&self) -> Vec<Vec<Fq>>;

    /// Weight of each basis vector, if brackets add weights and the p-map
    /// multiplies them by `p`. Only used to skip provably redundant work.
    fn basis_weights(&self) -> Option<&[usize]> {
        None
    }

    fn zero_vec(&self) -> Vec<Fq> {
        vec![Fq::ZERO; self.dim()]
    }

    fn basis_vec(&self, i: usize) -> Vec<Fq> {
        let mut v = self.zero_vec();
        v[i] = Fq::ONE;
        v
    }

    /// `u^{[p^n]}`
    fn pmap_iter(&self, u: &[Fq], n: u32) -> Vec<Fq> {
        let mut v = u.to_vec();
        for _ in 0..n {
            if is_zero(&v) {
                break;
            }
            v = self.pmap(&v);
        }
        v
    }

    /// `(ad u)^k (v)`
    fn ad_pow(&self, u: &[Fq], k: usize, v: &[Fq]) -> Vec<Fq> {
        let mut out = v.to_vec();
        for _ in 0..k {
            out = self.bracket(u, &out);
        }
        out
    }
}

pub fn is_zero(v: &[Fq]) -> bool {
    v.iter().all(|c| c.is_zero())
}

pub fn add(field: &FiniteField, u: &[Fq], v: &[Fq]) -> Vec<Fq> {
    u.iter().zip(v).map(|(&a, &b)| field.add(a, b)).collect()
}

pub fn sub(field: &FiniteField, u: &[Fq], v: &[Fq]) -> Vec<Fq> {
    u.iter().zip(v).map(|(&a, &b)| field.sub(a, b)).collect()
}

pub fn scale(field: &FiniteField, c: Fq, u: &[Fq]) -> Vec<Fq> {
    u.iter().map(|&a| field.mul(c, a)).collect()
}

/// `u += c v`
pub fn axpy(field: &FiniteField, u: &mut [Fq], c: Fq, v: &[Fq]) {
    if c.is_zero() {
        return;
    }
    for (a, &b) in u.iter_mut().zip(v) {
        if !b.is_zero() {
            *a = field.mul_add(*a, c, b);
        }
    }
}

/// Weight of `v` if it is supported on a single weight.
pub fn homogeneous_weight(weights: &[usize], v: &[Fq]) -> Option<usize> {
    let mut w = None;
    for (i, c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        match w {
            None => w = Some(weights[i]),
            Some(x) if x != weights[i] => return None,
            _ => {}
        }
    }
    w
}

/// The sum `s(x, y) = (x + y)^{[p]} - x^{[p]} - y^{[p]}` computed from
/// brackets only: `i s_i(x, y)` is the coefficient of `λ^{i-1}` in
/// `(ad (λx + y))^{p-1}(x)`.
pub fn jacobson_sum<A: RestrictedLieAlgebra + ?Sized>(alg: &A, x: &[Fq], y: &[Fq]) -> Vec<Fq> {
    let f = alg.field();
    let p = f.characteristic() as usize;
    // poly[k] = coefficient vector of λ^k
    let mut poly: Vec<Vec<Fq>> = vec![x.to_vec()];
    for _ in 0..p - 1 {
        let mut next = vec![alg.zero_vec(); poly.len() + 1];
        for (k, c) in poly.iter().enumerate() {
            axpy(f, &mut next[k + 1], Fq::ONE, &alg.bracket(x, c));
            axpy(f, &mut next[k], Fq::ONE, &alg.bracket(y, c));
        }
        poly = next;
    }
    let mut out = alg.zero_vec();
    for i in 1..p {
        let inv_i = f.inv(f.from_int(i as i64)).expect("i < p");
        axpy(f, &mut out, inv_i, &poly[i - 1]);
    }
    out
}
