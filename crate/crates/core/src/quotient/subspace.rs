//! Exact subspaces of `F^n` in reduced row-echelon form.

use crate::algebra;
use crate::field::{FiniteField, Fq};

/// A subspace kept in reduced row-echelon form, so equality of subspaces
/// is equality of row lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FdSubspace {
    field: FiniteField,
    ambient: usize,
    rows: Vec<Vec<Fq>>,
    pivots: Vec<usize>,
}

fn pivot_of(v: &[Fq]) -> Option<usize> {
    v.iter().position(|c| !c.is_zero())
}

impl FdSubspace {
    pub fn zero(field: &FiniteField, ambient: usize) -> Self {
        FdSubspace { field: field.clone(), ambient, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(field: &FiniteField, ambient: usize) -> Self {
        let mut s = Self::zero(field, ambient);
        for i in 0..ambient {
            let mut v = vec![Fq::ZERO; ambient];
            v[i] = Fq::ONE;
            s.rows.push(v);
            s.pivots.push(i);
        }
        s
    }

    pub fn span<V: AsRef<[Fq]>>(field: &FiniteField, ambient: usize, vectors: impl IntoIterator<Item = V>) -> Self {
        let mut s = Self::zero(field, ambient);
        for v in vectors {
            s.insert(v.as_ref());
        }
        s
    }

    /// Span of the given standard basis vectors.
    pub fn coordinate(field: &FiniteField, ambient: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        Self::span(
            field,
            ambient,
            indices.into_iter().map(|i| {
                let mut v = vec![Fq::ZERO; ambient];
                v[i] = Fq::ONE;
                v
            }),
        )
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn codim(&self) -> usize {
        self.ambient - self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    /// Rows of the reduced echelon basis, sorted by pivot.
    pub fn rows(&self) -> &[Vec<Fq>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Indices of the standard basis vectors that complement the subspace.
    pub fn non_pivots(&self) -> Vec<usize> {
        (0..self.ambient).filter(|i| self.pivots.binary_search(i).is_err()).collect()
    }

    /// Remainder of `v` modulo the subspace; it vanishes on every pivot.
    pub fn reduce(&self, v: &[Fq]) -> Vec<Fq> {
        let mut out = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = out[p];
            if !c.is_zero() {
                algebra::axpy(&self.field, &mut out, self.field.neg(c), row);
            }
        }
        out
    }

    pub fn contains(&self, v: &[Fq]) -> bool {
        algebra::is_zero(&self.reduce(v))
    }

    /// Adds `v`; returns whether the dimension grew.
    pub fn insert(&mut self, v: &[Fq]) -> bool {
        assert_eq!(v.len(), self.ambient, "vector length does not match the ambient space");
        let mut r = self.reduce(v);
        let Some(p) = pivot_of(&r) else {
            return false;
        };
        let inv = self.field.inv(r[p]).expect("pivot is nonzero");
        r = algebra::scale(&self.field, inv, &r);
        for row in &mut self.rows {
            let c = row[p];
            if !c.is_zero() {
                algebra::axpy(&self.field, row, self.field.neg(c), &r);
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.rows.insert(at, r);
        self.pivots.insert(at, p);
        true
    }

    pub fn is_subspace_of(&self, other: &Self) -> bool {
        self.rows.iter().all(|r| other.contains(r))
    }

    pub fn sum(&self, other: &Self) -> Self {
        let mut s = self.clone();
        for r in &other.rows {
            s.insert(r);
        }
        s
    }

    pub fn intersection_dim(&self, other: &Self) -> usize {
        self.dim() + other.dim() - self.sum(other).dim()
    }

    /// Number of pivots falling in each weight `1..=max_weight`.
    pub fn graded_profile(&self, weights: &[usize], max_weight: usize) -> Vec<usize> {
        let mut out = vec![0; max_weight];
        for &p in &self.pivots {
            let w = weights[p];
            if (1..=max_weight).contains(&w) {
                out[w - 1] += 1;
            }
        }
        out
    }

    /// Whether every basis row is supported on a single weight.
    pub fn is_homogeneous(&self, weights: &[usize]) -> bool {
        self.rows.iter().all(|r| algebra::homogeneous_weight(weights, r).is_some())
    }
}
