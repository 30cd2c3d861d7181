//! Ideal-generation facts checked by brute-force closure.

use crate::algebra::{self, RestrictedLieAlgebra};
use crate::error::{Error, Result};
use crate::field::Fq;
use crate::freerla::TruncatedFreeRLA;

use super::closure::{self, ideal_closure, ideal_of_subalgebra_closure};
use super::subspace::FdSubspace;

/// The set `Z_p = {(ad t_1)^{l_1} ... (ad t_s)^{l_s}(g) : 0 <= l_i < p}`,
/// in odometer order with the exponent of `t_s` running fastest. The
/// innermost operator is `ad t_s`.
///
/// Requires `g` in the ideal `n`, `n` an ideal of `alg`, and the span of `t`
/// together with `n` to be all of `alg`.
pub fn zp_generators<A: RestrictedLieAlgebra + ?Sized>(
    alg: &A,
    n: &FdSubspace,
    g: &[Fq],
    t: &[Vec<Fq>],
) -> Result<Vec<Vec<Fq>>> {
    if !n.contains(g) {
        return Err(Error::NotInIdeal);
    }
    if !closure::is_ideal(alg, n) {
        return Err(Error::NotAnIdeal);
    }
    let mut spanned = n.clone();
    for v in t {
        spanned.insert(v);
    }
    if spanned.dim() != alg.dim() {
        return Err(Error::SpanningFailure);
    }
    let p = alg.field().characteristic() as usize;
    let s = t.len();
    let mut out = Vec::with_capacity(p.pow(s as u32));
    let mut exps = vec![0usize; s];
    loop {
        let mut v = g.to_vec();
        for (ti, &l) in t.iter().zip(&exps).rev() {
            v = alg.ad_pow(ti, l, &v);
        }
        out.push(v);
        // odometer, last position fastest
        let mut k = s;
        loop {
            if k == 0 {
                return Ok(out);
            }
            k -= 1;
            exps[k] += 1;
            if exps[k] < p {
                break;
            }
            exps[k] = 0;
        }
    }
}

/// Whether the ideal of `alg` generated by `g` equals the restricted ideal
/// of `n` generated by `Z_p`.
pub fn check_zp<A: RestrictedLieAlgebra + ?Sized>(alg: &A, n: &FdSubspace, g: &[Fq], t: &[Vec<Fq>]) -> Result<bool> {
    let z = zp_generators(alg, n, g, t)?;
    Ok(ideal_closure(alg, &[g.to_vec()]) == ideal_of_subalgebra_closure(alg, n, &z))
}

/// Position of the top element of `Z_p`: the last nonzero one in odometer
/// order.
pub fn zp_top_index(z: &[Vec<Fq>]) -> Option<usize> {
    z.iter().rposition(|v| !algebra::is_zero(v))
}

/// Whether removing element `index` of `Z_p` makes the ideal of `n` it
/// generates differ from the ideal of `g`.
pub fn zp_drop_breaks<A: RestrictedLieAlgebra + ?Sized>(
    alg: &A,
    n: &FdSubspace,
    g: &[Fq],
    t: &[Vec<Fq>],
    index: usize,
) -> Result<bool> {
    let mut z = zp_generators(alg, n, g, t)?;
    if index >= z.len() {
        return Err(Error::Invalid(format!("Z_p has only {} elements", z.len())));
    }
    z.remove(index);
    Ok(ideal_closure(alg, &[g.to_vec()]) != ideal_of_subalgebra_closure(alg, n, &z))
}

/// [`zp_drop_breaks`] for the top element; `false` when `Z_p` is all zero.
pub fn zp_top_element_needed<A: RestrictedLieAlgebra + ?Sized>(
    alg: &A,
    n: &FdSubspace,
    g: &[Fq],
    t: &[Vec<Fq>],
) -> Result<bool> {
    match zp_top_index(&zp_generators(alg, n, g, t)?) {
        Some(i) => zp_drop_breaks(alg, n, g, t, i),
        None => Ok(false),
    }
}

/// Standard basis vectors complementing `n`, in basis order: the default
/// choice of `T`.
pub fn complement_vectors(n: &FdSubspace) -> Vec<Vec<Fq>> {
    n.non_pivots()
        .into_iter()
        .map(|i| {
            let mut v = vec![Fq::ZERO; n.ambient_dim()];
            v[i] = Fq::ONE;
            v
        })
        .collect()
}

/// `I_f`: the span of basis elements of weight at least `f`.
pub fn filtration_ideal(alg: &TruncatedFreeRLA, f: usize) -> FdSubspace {
    let idx = alg.weights().iter().enumerate().filter(|(_, &w)| w >= f).map(|(i, _)| i);
    FdSubspace::coordinate(alg.field(), alg.dim(), idx)
}

/// The two closures compared by [`check_l991`].
#[derive(Clone, Debug)]
pub struct InclusionWitness {
    pub codim: usize,
    /// Ideal of the whole algebra generated by `g^{[p^n]}`.
    pub i: FdSubspace,
    /// Ideal of `H` generated by `g^{[p^{n-d}]}`.
    pub j: FdSubspace,
}

impl InclusionWitness {
    pub fn holds(&self) -> bool {
        self.i.is_subspace_of(&self.j)
    }
}

/// For a restricted ideal `h` of codimension `d <= n` and `g` in `h`:
/// computes `I = <g^{[p^n]}>` in the whole algebra and the ideal `J` of `h`
/// generated by `g^{[p^{n-d}]}`.
pub fn l991_closures<A: RestrictedLieAlgebra + ?Sized>(alg: &A, h: &FdSubspace, g: &[Fq], n: u32) -> Result<InclusionWitness> {
    let d = h.codim();
    if (n as usize) < d {
        return Err(Error::PreconditionFailed(format!("n = {n} is smaller than the codimension {d}")));
    }
    if !h.contains(g) {
        return Err(Error::PreconditionFailed("g does not lie in H".into()));
    }
    if !closure::is_ideal(alg, h) {
        return Err(Error::PreconditionFailed("H is not a restricted ideal".into()));
    }
    let i = ideal_closure(alg, &[alg.pmap_iter(g, n)]);
    let j = ideal_of_subalgebra_closure(alg, h, &[alg.pmap_iter(g, n - d as u32)]);
    Ok(InclusionWitness { codim: d, i, j })
}

/// Whether `I` is contained in `J` (see [`l991_closures`]).
pub fn check_l991<A: RestrictedLieAlgebra + ?Sized>(alg: &A, h: &FdSubspace, g: &[Fq], n: u32) -> Result<bool> {
    Ok(l991_closures(alg, h, g, n)?.holds())
}

/// Restricted ideal generated by the vectors, with a sanity check that it
/// contains them all.
pub fn ideal_generated_by<A: RestrictedLieAlgebra + ?Sized>(alg: &A, gens: &[Vec<Fq>]) -> FdSubspace {
    let s = ideal_closure(alg, gens);
    debug_assert!(gens.iter().all(|g| s.contains(g) || algebra::is_zero(g)));
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FiniteField;
    use crate::freerla::build_algebra;

    #[test]
    fn zp_sets() {
        let f2 = FiniteField::prime(2).unwrap();
        let a = build_algebra(&f2, &["x", "y"], 6).unwrap();
        let (x, y) = (a.generator(0).to_vec(), a.generator(1).to_vec());
        let n = ideal_closure(&*a, std::slice::from_ref(&y));
        // x alone misses x^[2] and x^[4] modulo <y>
        assert_eq!(zp_generators(&*a, &n, &y, std::slice::from_ref(&x)), Err(Error::SpanningFailure));
        let t = complement_vectors(&n);
        assert_eq!(t.len(), 3);
        let z = zp_generators(&*a, &n, &y, &t).unwrap();
        assert_eq!(z.len(), 8);
        assert_eq!(z[0], y);
        assert_eq!(z[4], a.parse_vector("(br x y)").unwrap());
        assert!(check_zp(&*a, &n, &y, &t).unwrap());
        assert!(check_zp(&*a, &n, &a.zero_vec(), &t).unwrap());
        assert!(zp_drop_breaks(&*a, &n, &y, &t, 0).unwrap());
        let whole = FdSubspace::full(&f2, a.dim());
        assert_eq!(zp_generators(&*a, &whole, &y, &[]).unwrap(), vec![y.clone()]);
        assert_eq!(zp_generators(&*a, &n, &x, &t), Err(Error::NotInIdeal));

        // modulo the weight >= 2 ideal, x and y span: T = (x, y)
        let f3 = FiniteField::prime(3).unwrap();
        let b = build_algebra(&f3, &["x", "y"], 6).unwrap();
        let i2 = filtration_ideal(&b, 2);
        let g = b.parse_vector("(br x y)").unwrap();
        let t = complement_vectors(&i2);
        let z = zp_generators(&*b, &i2, &g, &t).unwrap();
        assert_eq!(z.len(), 9);
        assert_eq!(z[2], b.parse_vector("(br y (br y (br x y)))").unwrap());
        assert_eq!(z[8], b.parse_vector("(br x (br x (br y (br y (br x y)))))").unwrap());
        assert!(check_zp(&*b, &i2, &g, &t).unwrap());
    }

    #[test]
    fn filtration_codims() {
        let f = FiniteField::prime(2).unwrap();
        let a = build_algebra(&f, &["x", "y"], 6).unwrap();
        assert_eq!(filtration_ideal(&a, 3).codim(), 5);
        assert_eq!(filtration_ideal(&a, 1).codim(), 0);
        assert!(filtration_ideal(&a, 7).is_zero());
        assert!(closure::is_ideal_exhaustive(&*a, &filtration_ideal(&a, 4)));
    }

    #[test]
    fn inclusion_examples() {
        let f = FiniteField::prime(2).unwrap();
        let a = build_algebra(&f, &["x", "y"], 8).unwrap();
        let y = a.generator(1).to_vec();
        let h = ideal_closure(&*a, &[y.clone(), a.parse_vector("(pp x 1)").unwrap()]);
        assert_eq!(h.codim(), 1);
        assert!(check_l991(&*a, &h, &y, 2).unwrap());
        assert!(check_l991(&*a, &h, &y, 1).unwrap());
        assert!(check_l991(&*a, &h, &a.parse_vector("(pp y 2)").unwrap(), 2).unwrap());
        assert!(matches!(check_l991(&*a, &h, &y, 0), Err(Error::PreconditionFailed(_))));
        assert!(matches!(check_l991(&*a, &h, a.generator(0), 1), Err(Error::PreconditionFailed(_))));
    }
}
