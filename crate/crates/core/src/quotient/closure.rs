//! Worklist closures of subspaces under brackets and the p-map.
//!
//! Every vector that enters the span is bracketed once with the relevant
//! partners and mapped once by the p-map. That suffices: Jacobson's sum
//! formula writes `(x + y)^{[p]}` as `x^{[p]} + y^{[p]}` plus brackets of
//! `x` and `y`, and `(c x)^{[p]} = c^p x^{[p]}`.

use std::collections::HashMap;

use crate::algebra::{self, RestrictedLieAlgebra};
use crate::field::Fq;
use crate::freerla::expr::{self, Expr, ExprRef};

use super::subspace::FdSubspace;

/// What the span must be closed under, besides the p-map.
#[derive(Clone, Copy, Debug)]
pub enum ClosureMode<'a> {
    /// Brackets of members with members.
    Subalgebra,
    /// Brackets with the whole algebra: a restricted ideal.
    Ideal,
    /// Brackets with members of the given subalgebra `H` only: a restricted
    /// ideal of `H`, provided the generators lie in `H`.
    IdealOf(&'a FdSubspace),
}

struct Engine<'a, A: RestrictedLieAlgebra + ?Sized> {
    alg: &'a A,
    rows: Vec<Vec<Fq>>,
    pivots: Vec<usize>,
    exprs: Option<Vec<ExprRef>>,
    // weight bookkeeping, only when everything in sight is homogeneous
    weights: Option<&'a [usize]>,
    row_weight: Vec<usize>,
    filled: HashMap<usize, usize>,
    block_size: HashMap<usize, usize>,
    max_weight: usize,
}

impl<'a, A: RestrictedLieAlgebra + ?Sized> Engine<'a, A> {
    fn new(alg: &'a A, tracked: bool, homogeneous: bool) -> Self {
        let weights = if homogeneous { alg.basis_weights() } else { None };
        let mut block_size = HashMap::new();
        for &w in weights.unwrap_or(&[]) {
            *block_size.entry(w).or_insert(0) += 1;
        }
        Engine {
            alg,
            rows: Vec::new(),
            pivots: Vec::new(),
            exprs: tracked.then(Vec::new),
            weights,
            row_weight: Vec::new(),
            filled: HashMap::new(),
            block_size,
            max_weight: weights.and_then(|w| w.iter().copied().max()).unwrap_or(0),
        }
    }

    // Subtracts multiples of stored rows; the coefficients are returned so
    // that callers can track expressions.
    fn reduce(&self, v: &mut [Fq]) -> Vec<(usize, Fq)> {
        let f = self.alg.field();
        let mut used = Vec::new();
        for (k, (row, &p)) in self.rows.iter().zip(&self.pivots).enumerate() {
            let c = v[p];
            if !c.is_zero() {
                algebra::axpy(f, v, f.neg(c), row);
                used.push((k, c));
            }
        }
        used
    }

    fn skip(&self, weight: Option<usize>) -> bool {
        match (self.weights, weight) {
            (Some(_), Some(w)) => w > self.max_weight || self.filled.get(&w) == self.block_size.get(&w),
            _ => false,
        }
    }

    fn offer(&mut self, mut v: Vec<Fq>, e: Option<ExprRef>, weight: Option<usize>) {
        if self.skip(weight) {
            return;
        }
        let used = self.reduce(&mut v);
        let Some(p) = v.iter().position(|c| !c.is_zero()) else {
            return;
        };
        let f = self.alg.field();
        let inv = f.inv(v[p]).expect("pivot is nonzero");
        let v = algebra::scale(f, inv, &v);
        if let Some(exprs) = &mut self.exprs {
            let mut terms = vec![e.expect("tracked closure needs expressions")];
            terms.extend(used.into_iter().map(|(k, c)| Expr::sc(f.neg(c), exprs[k].clone())));
            exprs.push(Expr::sc(inv, Expr::sum(terms)));
        }
        if let Some(ws) = self.weights {
            let w = algebra::homogeneous_weight(ws, &v).expect("homogeneous closure stays homogeneous");
            *self.filled.entry(w).or_insert(0) += 1;
            self.row_weight.push(w);
        }
        self.rows.push(v);
        self.pivots.push(p);
    }

    fn expr(&self, k: usize) -> Option<ExprRef> {
        self.exprs.as_ref().map(|e| e[k].clone())
    }

    fn run(&mut self, mode: ClosureMode<'_>, partners: &[(Vec<Fq>, Option<usize>)]) {
        let p = self.alg.field().characteristic() as usize;
        let mut i = 0;
        while i < self.rows.len() {
            let wi = self.row_weight.get(i).copied();
            let pw = wi.map(|w| w * p);
            if !self.skip(pw) {
                let v = self.alg.pmap(&self.rows[i]);
                let e = self.expr(i).map(|e| Expr::pp(e, 1));
                self.offer(v, e, pw);
            }
            match mode {
                ClosureMode::Subalgebra => {
                    for j in 0..i {
                        let w = wi.zip(self.row_weight.get(j)).map(|(a, b)| a + b);
                        if self.skip(w) {
                            continue;
                        }
                        let v = self.alg.bracket(&self.rows[j], &self.rows[i]);
                        let e = self.expr(j).zip(self.expr(i)).map(|(a, b)| Expr::br(a, b));
                        self.offer(v, e, w);
                    }
                }
                ClosureMode::Ideal | ClosureMode::IdealOf(_) => {
                    for (t, tw) in partners {
                        let w = wi.zip(*tw).map(|(a, b)| a + b);
                        if self.skip(w) {
                            continue;
                        }
                        let v = self.alg.bracket(t, &self.rows[i]);
                        self.offer(v, None, w);
                    }
                }
            }
            i += 1;
        }
    }

    fn into_subspace(self) -> FdSubspace {
        FdSubspace::span(self.alg.field(), self.alg.dim(), &self.rows)
    }
}

fn homogeneous_input<A: RestrictedLieAlgebra + ?Sized>(alg: &A, vs: &[&[Fq]]) -> bool {
    match alg.basis_weights() {
        Some(ws) => vs.iter().all(|v| algebra::is_zero(v) || algebra::homogeneous_weight(ws, v).is_some()),
        None => false,
    }
}

/// The least subspace containing `gens` that is closed under the p-map and
/// under the brackets selected by `mode`.
pub fn closure<A: RestrictedLieAlgebra + ?Sized>(alg: &A, gens: &[Vec<Fq>], mode: ClosureMode<'_>) -> FdSubspace {
    let partners: Vec<Vec<Fq>> = match mode {
        ClosureMode::Subalgebra => Vec::new(),
        ClosureMode::Ideal => alg.ideal_test_vectors(),
        ClosureMode::IdealOf(h) => h.rows().to_vec(),
    };
    let mut all: Vec<&[Fq]> = gens.iter().map(|v| v.as_slice()).collect();
    all.extend(partners.iter().map(|v| v.as_slice()));
    let homogeneous = homogeneous_input(alg, &all);
    let mut engine = Engine::new(alg, false, homogeneous);
    let partners: Vec<(Vec<Fq>, Option<usize>)> = partners
        .into_iter()
        .map(|t| {
            let w = engine.weights.and_then(|ws| algebra::homogeneous_weight(ws, &t));
            (t, w)
        })
        .collect();
    for g in gens {
        let w = engine.weights.and_then(|ws| algebra::homogeneous_weight(ws, g));
        engine.offer(g.clone(), None, w);
    }
    engine.run(mode, &partners);
    engine.into_subspace()
}

pub fn subalgebra_closure<A: RestrictedLieAlgebra + ?Sized>(alg: &A, gens: &[Vec<Fq>]) -> FdSubspace {
    closure(alg, gens, ClosureMode::Subalgebra)
}

pub fn ideal_closure<A: RestrictedLieAlgebra + ?Sized>(alg: &A, gens: &[Vec<Fq>]) -> FdSubspace {
    closure(alg, gens, ClosureMode::Ideal)
}

pub fn ideal_of_subalgebra_closure<A: RestrictedLieAlgebra + ?Sized>(alg: &A, h: &FdSubspace, gens: &[Vec<Fq>]) -> FdSubspace {
    closure(alg, gens, ClosureMode::IdealOf(h))
}

/// Direct re-verification: `[a, v]` and `v^{[p]}` lie in `s` for every
/// test vector `a` and basis row `v`.
pub fn is_ideal<A: RestrictedLieAlgebra + ?Sized>(alg: &A, s: &FdSubspace) -> bool {
    let tests = alg.ideal_test_vectors();
    s.rows()
        .iter()
        .all(|v| s.contains(&alg.pmap(v)) && tests.iter().all(|a| s.contains(&alg.bracket(a, v))))
}

/// Same check against every basis vector of the algebra rather than the
/// test vectors alone.
pub fn is_ideal_exhaustive<A: RestrictedLieAlgebra + ?Sized>(alg: &A, s: &FdSubspace) -> bool {
    s.rows().iter().all(|v| {
        s.contains(&alg.pmap(v)) && (0..alg.dim()).all(|i| s.contains(&alg.bracket(&alg.basis_vec(i), v)))
    })
}

pub fn is_subalgebra<A: RestrictedLieAlgebra + ?Sized>(alg: &A, s: &FdSubspace) -> bool {
    let rows = s.rows();
    rows.iter().enumerate().all(|(i, v)| {
        s.contains(&alg.pmap(v)) && rows[..i].iter().all(|u| s.contains(&alg.bracket(u, v)))
    })
}

/// A subalgebra closure that remembers, for every vector it produced, an
/// expression in the generators' symbols.
pub struct TrackedClosure<'a, A: RestrictedLieAlgebra + ?Sized> {
    engine: Engine<'a, A>,
}

impl<'a, A: RestrictedLieAlgebra + ?Sized> TrackedClosure<'a, A> {
    /// `gens` pairs each generating vector with its symbolic name.
    pub fn subalgebra(alg: &'a A, gens: &[(Vec<Fq>, ExprRef)]) -> Self {
        let vs: Vec<&[Fq]> = gens.iter().map(|(v, _)| v.as_slice()).collect();
        let mut engine = Engine::new(alg, true, homogeneous_input(alg, &vs));
        for (g, e) in gens {
            let w = engine.weights.and_then(|ws| algebra::homogeneous_weight(ws, g));
            engine.offer(g.clone(), Some(e.clone()), w);
        }
        engine.run(ClosureMode::Subalgebra, &[]);
        TrackedClosure { engine }
    }

    pub fn dim(&self) -> usize {
        self.engine.rows.len()
    }

    /// An expression for `v` in the generator symbols, if `v` is in the span.
    pub fn express(&self, v: &[Fq]) -> Option<ExprRef> {
        let mut r = v.to_vec();
        let used = self.engine.reduce(&mut r);
        if !algebra::is_zero(&r) {
            return None;
        }
        let exprs = self.engine.exprs.as_ref().expect("tracked");
        let e = Expr::sum(used.into_iter().map(|(k, c)| Expr::sc(c, exprs[k].clone())).collect());
        Some(expr::simplify(&e, self.engine.alg.field()))
    }

    pub fn into_subspace(self) -> FdSubspace {
        self.engine.into_subspace()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FiniteField;
    use crate::freerla::build_algebra;

    #[test]
    fn closure_examples() {
        let f = FiniteField::prime(2).unwrap();
        let a = build_algebra(&f, &["x", "y"], 8).unwrap();
        let x = a.generator(0).to_vec();
        let y = a.generator(1).to_vec();
        assert_eq!(subalgebra_closure(&*a, std::slice::from_ref(&x)).dim(), 4);
        assert_eq!(subalgebra_closure(&*a, &[x.clone(), y.clone()]).dim(), a.dim());
        assert_eq!(ideal_closure(&*a, &[x.clone(), y.clone()]).dim(), a.dim());
        assert!(ideal_closure(&*a, &[a.zero_vec()]).is_zero());

        let a4 = build_algebra(&f, &["x", "y"], 4).unwrap();
        let xy = a4.parse_vector("(br x y)").unwrap();
        assert_eq!(subalgebra_closure(&*a4, &[xy]).dim(), 2);
        let iy = ideal_closure(&*a4, &[a4.generator(1).to_vec()]);
        assert_eq!(iy.codim(), 3);
        assert!(is_ideal_exhaustive(&*a4, &iy));
    }

    #[test]
    fn homogeneous_shortcut_matches_plain_closure() {
        // a non-homogeneous generator disables the weight shortcut
        let f = FiniteField::prime(3).unwrap();
        let a = build_algebra(&f, &["x", "y"], 6).unwrap();
        let g = a.parse_vector("(sum x (br x y))").unwrap();
        let y = a.generator(1).to_vec();
        let mixed = ideal_closure(&*a, std::slice::from_ref(&g));
        assert!(is_ideal_exhaustive(&*a, &mixed));
        let homog = ideal_closure(&*a, std::slice::from_ref(&y));
        assert!(is_ideal_exhaustive(&*a, &homog));
        let sub = subalgebra_closure(&*a, &[g, y]);
        assert!(is_subalgebra(&*a, &sub));
    }

    #[test]
    fn tracked_expressions_evaluate_back() {
        let f = FiniteField::prime(2).unwrap();
        let a = build_algebra(&f, &["t", "a"], 6).unwrap();
        let names = vec!["u".to_string(), "v".to_string()];
        let u = a.generator(1).to_vec();
        let v = a.parse_vector("(br t a)").unwrap();
        let tc = TrackedClosure::subalgebra(&*a, &[(u.clone(), Expr::gen(0)), (v.clone(), Expr::gen(1))]);
        let w = a.parse_vector("(sum (br a (br t a)) (pp (br t a) 1))").unwrap();
        let e = tc.express(&w).unwrap();
        assert_eq!(expr::eval(&e, &*a, &[u, v]).unwrap(), w);
        assert!(expr::format_expr(&e, &f, &names).contains("(pp v 1)"));
        assert!(tc.express(a.generator(0)).is_none());
    }
}
