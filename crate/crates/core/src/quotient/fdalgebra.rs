//! Restricted Lie algebras given by structure constants.

use std::sync::Arc;

use crate::algebra::{self, RestrictedLieAlgebra};
use crate::error::{Error, Result};
use crate::field::{FiniteField, Fq};
use crate::freerla::TruncatedFreeRLA;

use super::closure;
use super::subspace::FdSubspace;

/// A finite-dimensional restricted Lie algebra stored as a bracket table on
/// basis pairs and the p-map images of basis vectors. The p-map of other
/// vectors follows from semilinearity and Jacobson's sum formula.
#[derive(Clone, Debug)]
pub struct FdAlgebra {
    field: FiniteField,
    dim: usize,
    // brackets[i * dim + j] = [e_i, e_j]
    brackets: Vec<Vec<Fq>>,
    pmaps: Vec<Vec<Fq>>,
    weights: Option<Vec<usize>>,
    lift: Option<Lift>,
}

// How a quotient sits over its truncated free algebra.
#[derive(Clone, Debug)]
struct Lift {
    parent: Arc<TruncatedFreeRLA>,
    ideal: FdSubspace,
    complement: Vec<usize>,
}

impl FdAlgebra {
    /// Validates that the table is alternating and that the main identity
    /// `[e_i^{[p]}, e_j] = (ad e_i)^p (e_j)` holds on basis pairs.
    pub fn new(field: &FiniteField, dim: usize, brackets: Vec<Vec<Fq>>, pmaps: Vec<Vec<Fq>>) -> Result<Self> {
        if brackets.len() != dim * dim || pmaps.len() != dim || brackets.iter().chain(&pmaps).any(|v| v.len() != dim) {
            return Err(Error::Invalid("structure table has the wrong shape".into()));
        }
        let alg = FdAlgebra { field: field.clone(), dim, brackets, pmaps, weights: None, lift: None };
        for i in 0..dim {
            for j in 0..dim {
                let sum = algebra::add(field, &alg.brackets[i * dim + j], &alg.brackets[j * dim + i]);
                if !algebra::is_zero(&sum) || !algebra::is_zero(&alg.brackets[i * dim + i]) {
                    return Err(Error::Invalid("bracket table is not alternating".into()));
                }
            }
        }
        if !alg.main_identity_holds() {
            return Err(Error::Invalid("p-map table violates the main identity".into()));
        }
        Ok(alg)
    }

    /// The abelian algebra with the given p-map matrix (rows are images).
    pub fn abelian(field: &FiniteField, pmaps: Vec<Vec<Fq>>) -> Result<Self> {
        let dim = pmaps.len();
        Self::new(field, dim, vec![vec![Fq::ZERO; dim]; dim * dim], pmaps)
    }

    /// `[e_i^{[p]}, e_j] = (ad e_i)^p (e_j)` for all basis pairs.
    pub fn main_identity_holds(&self) -> bool {
        let p = self.field.characteristic() as usize;
        (0..self.dim).all(|i| {
            let ei = self.basis_vec(i);
            (0..self.dim).all(|j| {
                let ej = self.basis_vec(j);
                self.bracket(&self.pmaps[i], &ej) == self.ad_pow(&ei, p, &ej)
            })
        })
    }

    /// `p`-map by lifting to the parent free algebra, for quotients only.
    pub fn pmap_via_lift(&self, u: &[Fq]) -> Option<Vec<Fq>> {
        let lift = self.lift.as_ref()?;
        let mut up = lift.parent.zero_vec();
        for (k, &c) in u.iter().enumerate() {
            up[lift.complement[k]] = c;
        }
        Some(project(&lift.ideal, &lift.complement, &lift.parent.pmap(&up)))
    }

    /// `(x + y)^{[p]} - x^{[p]} - y^{[p]}` from brackets alone.
    pub fn jacobson_defect(&self, x: &[Fq], y: &[Fq]) -> Vec<Fq> {
        algebra::jacobson_sum(self, x, y)
    }
}

fn project(ideal: &FdSubspace, complement: &[usize], v: &[Fq]) -> Vec<Fq> {
    let r = ideal.reduce(v);
    complement.iter().map(|&j| r[j]).collect()
}

impl RestrictedLieAlgebra for FdAlgebra {
    fn field(&self) -> &FiniteField {
        &self.field
    }

    fn dim(&self) -> usize {
        self.dim
    }

    fn bracket(&self, u: &[Fq], v: &[Fq]) -> Vec<Fq> {
        let f = &self.field;
        let mut out = self.zero_vec();
        for (i, &a) in u.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in v.iter().enumerate() {
                if b.is_zero() || i == j {
                    continue;
                }
                algebra::axpy(f, &mut out, f.mul(a, b), &self.brackets[i * self.dim + j]);
            }
        }
        out
    }

    fn pmap(&self, u: &[Fq]) -> Vec<Fq> {
        let f = &self.field;
        let mut acc = self.zero_vec();
        let mut image = self.zero_vec();
        for (i, &c) in u.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let term = algebra::scale(f, c, &self.basis_vec(i));
            algebra::axpy(f, &mut image, f.frobenius(c, 1), &self.pmaps[i]);
            if !algebra::is_zero(&acc) {
                let defect = self.jacobson_defect(&acc, &term);
                algebra::axpy(f, &mut image, Fq::ONE, &defect);
            }
            algebra::axpy(f, &mut acc, Fq::ONE, &term);
        }
        image
    }

    fn ideal_test_vectors(&self) -> Vec<Vec<Fq>> {
        (0..self.dim).map(|i| self.basis_vec(i)).collect()
    }

    fn basis_weights(&self) -> Option<&[usize]> {
        self.weights.as_deref()
    }
}

/// `A / I` on the complement of the pivot columns of `I`.
pub fn quotient_algebra(parent: &Arc<TruncatedFreeRLA>, ideal: &FdSubspace) -> Result<FdAlgebra> {
    let a = &**parent;
    if ideal.ambient_dim() != a.dim() {
        return Err(Error::Invalid("ideal lives in a different algebra".into()));
    }
    if !closure::is_ideal(a, ideal) {
        return Err(Error::NotAnIdeal);
    }
    let complement = ideal.non_pivots();
    let dim = complement.len();
    let mut brackets = vec![vec![Fq::ZERO; dim]; dim * dim];
    for i in 0..dim {
        for j in i + 1..dim {
            let b = project(ideal, &complement, &a.bracket(&a.basis_vec(complement[i]), &a.basis_vec(complement[j])));
            brackets[j * dim + i] = algebra::scale(a.field(), a.field().neg(Fq::ONE), &b);
            brackets[i * dim + j] = b;
        }
    }
    let pmaps = complement.iter().map(|&j| project(ideal, &complement, &a.pmap(&a.basis_vec(j)))).collect();
    let mut q = FdAlgebra::new(a.field(), dim, brackets, pmaps)?;
    if ideal.is_homogeneous(a.weights()) {
        q.weights = Some(complement.iter().map(|&j| a.weights()[j]).collect());
    }
    q.lift = Some(Lift { parent: parent.clone(), ideal: ideal.clone(), complement });
    Ok(q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freerla::build_algebra;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn quotient_examples() {
        let f = FiniteField::prime(2).unwrap();
        let a = build_algebra(&f, &["x", "y"], 4).unwrap();
        let whole = FdSubspace::full(&f, a.dim());
        assert_eq!(quotient_algebra(&a, &whole).unwrap().dim(), 0);
        let zero = FdSubspace::zero(&f, a.dim());
        let same = quotient_algebra(&a, &zero).unwrap();
        assert_eq!(same.dim(), a.dim());
        for i in 0..a.dim() {
            assert_eq!(same.pmap(&same.basis_vec(i)), a.pmap(&a.basis_vec(i)));
        }
        let iy = closure::ideal_closure(&*a, &[a.generator(1).to_vec()]);
        let q = quotient_algebra(&a, &iy).unwrap();
        assert_eq!(q.dim(), 3);
        assert_eq!(q.basis_weights(), Some(&[1, 2, 4][..]));
        let not_ideal = FdSubspace::span(&f, a.dim(), [a.generator(1)]);
        assert_eq!(quotient_algebra(&a, &not_ideal).unwrap_err(), Error::NotAnIdeal);
    }

    #[test]
    fn jacobson_pmap_matches_lift() {
        for (p, n) in [(2, 6), (3, 6), (5, 5)] {
            let f = FiniteField::prime(p).unwrap();
            let a = build_algebra(&f, &["x", "y"], n).unwrap();
            let i = closure::ideal_closure(&*a, &[a.parse_vector("(br x (br x y))").unwrap()]);
            let q = quotient_algebra(&a, &i).unwrap();
            let mut rng = ChaCha8Rng::seed_from_u64(p as u64);
            for _ in 0..10 {
                let u: Vec<Fq> = (0..q.dim()).map(|_| f.random(&mut rng)).collect();
                assert_eq!(Some(q.pmap(&u)), q.pmap_via_lift(&u));
            }
        }
    }

    #[test]
    fn extension_field_quotient() {
        let f = FiniteField::parse("gf(4; 1,1,1)").unwrap();
        let a = build_algebra(&f, &["x", "y"], 5).unwrap();
        let q = quotient_algebra(&a, &FdSubspace::zero(&f, a.dim())).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..10 {
            let u: Vec<Fq> = (0..q.dim()).map(|_| f.random(&mut rng)).collect();
            assert_eq!(q.pmap(&u), a.pmap(&u));
        }
    }

    #[test]
    fn rejects_bad_tables() {
        let f = FiniteField::prime(2).unwrap();
        assert!(FdAlgebra::abelian(&f, vec![vec![Fq::ZERO, Fq::ONE], vec![Fq::ZERO; 2]]).is_ok());
        let bad = vec![vec![Fq::ONE, Fq::ZERO], vec![Fq::ZERO; 2], vec![Fq::ZERO; 2], vec![Fq::ZERO; 2]];
        assert!(FdAlgebra::new(&f, 2, bad, vec![vec![Fq::ZERO; 2]; 2]).is_err());
    }
}
