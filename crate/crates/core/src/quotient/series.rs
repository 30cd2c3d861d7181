//! Derived p-series, nil-indices and nilpotency.

use crate::algebra::{self, RestrictedLieAlgebra};
use crate::error::{Error, Result};
use crate::field::Fq;

use super::closure::{self, subalgebra_closure};
use super::subspace::FdSubspace;

/// `D^i = [D^{i-1}, D^{i-1}] + (D^{i-1})^{[p]}`, closed to a subalgebra.
pub fn next_derived<A: RestrictedLieAlgebra + ?Sized>(alg: &A, prev: &FdSubspace) -> FdSubspace {
    let rows = prev.rows();
    let mut gens = Vec::new();
    for (i, v) in rows.iter().enumerate() {
        gens.push(alg.pmap(v));
        for u in &rows[..i] {
            gens.push(alg.bracket(u, v));
        }
    }
    gens.retain(|g| !algebra::is_zero(g));
    subalgebra_closure(alg, &gens)
}

/// `D^0, D^1, ...` up to `D^depth`, stopping early once a term repeats
/// (the repeat is not included). Each term is checked to be an ideal.
pub fn derived_p_series<A: RestrictedLieAlgebra + ?Sized>(alg: &A, depth: usize) -> Result<Vec<FdSubspace>> {
    let mut series = vec![FdSubspace::full(alg.field(), alg.dim())];
    while series.len() <= depth {
        let last = series.last().expect("nonempty");
        if last.is_zero() {
            break;
        }
        let next = next_derived(alg, last);
        if next == *last {
            break;
        }
        if !closure::is_ideal(alg, &next) {
            return Err(Error::NotAnIdeal);
        }
        series.push(next);
    }
    Ok(series)
}

/// Least `d` with `D^d ∩ V = 0`. Fails if the series stabilises at a term
/// that still meets `V`.
pub fn find_d_for_subspace<A: RestrictedLieAlgebra + ?Sized>(alg: &A, v: &FdSubspace) -> Result<usize> {
    let mut d = 0;
    let mut current = FdSubspace::full(alg.field(), alg.dim());
    loop {
        if current.intersection_dim(v) == 0 {
            return Ok(d);
        }
        let next = next_derived(alg, &current);
        if next == current {
            return Err(Error::IterationBoundExceeded { cap: d });
        }
        current = next;
        d += 1;
    }
}

/// Least `n` with `g^{[p^n]} = 0`; the nil-index itself is `p^n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NilIndex {
    pub exponent: u32,
    /// `p^exponent`, absent on overflow.
    pub value: Option<u64>,
}

/// Iterates the p-map at most `dim + 1` times.
pub fn nil_index<A: RestrictedLieAlgebra + ?Sized>(alg: &A, g: &[Fq]) -> Result<NilIndex> {
    let cap = alg.dim() + 1;
    let p = alg.field().characteristic() as u64;
    let mut v = g.to_vec();
    for n in 0..=cap {
        if algebra::is_zero(&v) {
            return Ok(NilIndex { exponent: n as u32, value: p.checked_pow(n as u32) });
        }
        if n < cap {
            v = alg.pmap(&v);
        }
    }
    Err(Error::IterationBoundExceeded { cap })
}

/// `C^1 = L`, `C^{i+1} = [L, C^i]`, as ordinary Lie algebra, until it
/// reaches zero or stabilises.
pub fn lower_central_series<A: RestrictedLieAlgebra + ?Sized>(alg: &A) -> Vec<FdSubspace> {
    let mut out = vec![FdSubspace::full(alg.field(), alg.dim())];
    loop {
        let last = out.last().expect("nonempty");
        if last.is_zero() {
            return out;
        }
        let mut next = FdSubspace::zero(alg.field(), alg.dim());
        for i in 0..alg.dim() {
            let e = alg.basis_vec(i);
            for v in last.rows() {
                next.insert(&alg.bracket(&e, v));
            }
        }
        if next == *last {
            return out;
        }
        out.push(next);
    }
}

pub fn is_nilpotent<A: RestrictedLieAlgebra + ?Sized>(alg: &A) -> bool {
    lower_central_series(alg).last().is_none_or(|s| s.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FiniteField;
    use crate::freerla::build_algebra;
    use crate::quotient::fdalgebra::{quotient_algebra, FdAlgebra};

    #[test]
    fn derived_series_small() {
        let f = FiniteField::prime(2).unwrap();
        let a = build_algebra(&f, &["x", "y"], 4).unwrap();
        let s = derived_p_series(&*a, 10).unwrap();
        assert_eq!(s[0].dim(), 13);
        assert_eq!(s[1].codim(), 2);
        assert!(s.last().unwrap().is_zero());
        for w in s.windows(2) {
            assert!(w[1].is_subspace_of(&w[0]));
        }
        for d in &s {
            assert!(is_nilpotent(&quotient_algebra(&a, d).unwrap()));
        }
    }

    #[test]
    fn find_d_examples() {
        let f = FiniteField::prime(2).unwrap();
        let a = build_algebra(&f, &["x", "y"], 8).unwrap();
        let x = a.generator(0).to_vec();
        let xy = a.parse_vector("(br x y)").unwrap();
        assert_eq!(find_d_for_subspace(&*a, &FdSubspace::span(&f, a.dim(), [&x])).unwrap(), 1);
        assert_eq!(find_d_for_subspace(&*a, &FdSubspace::span(&f, a.dim(), [&x, &xy])).unwrap(), 2);
        assert_eq!(find_d_for_subspace(&*a, &FdSubspace::zero(&f, a.dim())).unwrap(), 0);
    }

    #[test]
    fn nil_indices() {
        let f = FiniteField::prime(2).unwrap();
        let a = build_algebra(&f, &["x", "y"], 8).unwrap();
        let n = nil_index(&*a, a.generator(0)).unwrap();
        assert_eq!(n, NilIndex { exponent: 4, value: Some(16) });
        assert_eq!(nil_index(&*a, &a.zero_vec()).unwrap().value, Some(1));
        let a4 = build_algebra(&f, &["x", "y"], 4).unwrap();
        assert_eq!(nil_index(&*a4, &a4.parse_vector("(br x y)").unwrap()).unwrap().value, Some(4));
        // e^{[2]} = e never vanishes
        let torus = FdAlgebra::abelian(&f, vec![vec![Fq::ONE]]).unwrap();
        assert_eq!(nil_index(&torus, &[Fq::ONE]), Err(Error::IterationBoundExceeded { cap: 2 }));
        assert!(is_nilpotent(&torus));
    }
}
