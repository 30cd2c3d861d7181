//! Truncated free restricted Lie algebras.
//!
//! The free restricted Lie algebra on `r` generators sits inside the free
//! associative algebra on the same letters (its restricted enveloping
//! algebra). Each canonical basis element `[w]^{[p^e]}`, with `w` a Lyndon
//! word under its standard bracketing, expands to a homogeneous associative
//! polynomial whose lexicographically least word is `w^{p^e}` with
//! coefficient one. Brackets and p-maps are computed associatively and
//! converted back to canonical coordinates by peeling off least words.
//!
//! Everything of weight above the truncation bound `N` is discarded, where
//! `[w]^{[p^e]}` has weight `|w| p^e`. Those elements span a restricted
//! ideal, so the truncated algebra is an honest restricted Lie algebra.

pub mod assoc;
pub mod dims;
pub mod expr;
pub mod lyndon;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::Range;
use std::sync::Arc;

use rand::Rng;

use crate::algebra::{self, RestrictedLieAlgebra};
use crate::error::{Error, Result};
use crate::field::{FiniteField, Fq};
use assoc::{homog_mul, homog_sub, Assoc, Homog, Shape};
use expr::{Expr, ExprRef};

/// Default cap on the number of basis elements `build_algebra` will create.
pub const DEFAULT_CAP: usize = 20_000;

/// The canonical basis element `[word]^{[p^pexp]}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BasisElement {
    pub word: Vec<usize>,
    pub pexp: u32,
    pub weight: usize,
}

impl BasisElement {
    /// The element as an expression over generator indices.
    pub fn to_expr(&self) -> ExprRef {
        Expr::pp(bracketing(&self.word), self.pexp)
    }
}

fn bracketing(w: &[usize]) -> ExprRef {
    if w.len() == 1 {
        return Expr::gen(w[0]);
    }
    let (u, v) = lyndon::standard_factorization(w);
    Expr::br(bracketing(u), bracketing(v))
}

/// All canonical basis elements of weight at most `n` on `r` generators,
/// ordered by weight, then p-exponent, then word.
pub fn enumerate_basis(r: usize, p: u64, n: usize) -> Vec<BasisElement> {
    let mut out = Vec::new();
    for word in lyndon::lyndon_words(r, n) {
        let mut weight = word.len();
        let mut pexp = 0;
        while weight <= n {
            out.push(BasisElement { word: word.clone(), pexp, weight });
            if p > (n / weight) as u64 {
                break;
            }
            weight *= p as usize;
            pexp += 1;
        }
    }
    out.sort_unstable_by(|a, b| (a.weight, a.pexp, &a.word).cmp(&(b.weight, b.pexp, &b.word)));
    out
}

pub(crate) fn check_names(names: &[String]) -> Result<()> {
    for (i, n) in names.iter().enumerate() {
        let ok = !n.is_empty()
            && n != "0"
            && !n.starts_with(|c: char| c.is_ascii_digit())
            && !n.chars().any(|c| c.is_whitespace() || "()[]".contains(c));
        if !ok {
            return Err(Error::Invalid(format!("invalid generator name `{n}`")));
        }
        if names[..i].contains(n) {
            return Err(Error::Invalid(format!("duplicate generator name `{n}`")));
        }
    }
    Ok(())
}

/// The free restricted Lie algebra on named generators, truncated above a
/// weight bound.
pub struct TruncatedFreeRLA {
    field: FiniteField,
    generators: Vec<String>,
    max_degree: usize,
    shape: Shape,
    basis: Vec<BasisElement>,
    weights: Vec<usize>,
    // blocks[d] = index range of weight-d basis elements
    blocks: Vec<Range<usize>>,
    expansions: Vec<Homog>,
    // per degree: least word -> basis index
    leads: Vec<HashMap<u64, usize>>,
    gen_vectors: Vec<Vec<Fq>>,
}

impl fmt::Debug for TruncatedFreeRLA {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruncatedFreeRLA({}, {:?}, N={}, dim={})", self.field, self.generators, self.max_degree, self.dim())
    }
}

/// Builds the truncation at weight `n` with the default size cap.
pub fn build_algebra(field: &FiniteField, generators: &[&str], n: usize) -> Result<Arc<TruncatedFreeRLA>> {
    let names: Vec<String> = generators.iter().map(|s| s.to_string()).collect();
    TruncatedFreeRLA::new(field, names, n, DEFAULT_CAP)
}

impl TruncatedFreeRLA {
    /// Fails with `ResourceBound` before allocating anything if the basis
    /// would exceed `cap` elements.
    pub fn new(field: &FiniteField, generators: Vec<String>, n: usize, cap: usize) -> Result<Arc<Self>> {
        check_names(&generators)?;
        let r = generators.len();
        let p = field.characteristic() as u64;
        let dims = dims::graded_dims(r as u64, p, n);
        let needed: u64 = dims.iter().sum();
        if needed > cap as u64 {
            return Err(Error::ResourceBound { needed, cap: cap as u64 });
        }
        let shape = Shape::new(r.max(1), n).ok_or(Error::ResourceBound { needed: u64::MAX, cap: cap as u64 })?;

        let basis = enumerate_basis(r, p, n);
        let weights: Vec<usize> = basis.iter().map(|b| b.weight).collect();
        let mut blocks = vec![0..0; n + 1];
        for d in 1..=n {
            let start = weights.partition_point(|&w| w < d);
            let end = weights.partition_point(|&w| w <= d);
            if (end - start) as u64 != dims[d - 1] {
                return Err(Error::Invalid(format!("weight {d}: enumerated {} basis elements, expected {}", end - start, dims[d - 1])));
            }
            blocks[d] = start..end;
        }

        let mut lie: HashMap<Vec<usize>, Homog> = HashMap::new();
        let mut words: Vec<&Vec<usize>> = basis.iter().filter(|b| b.pexp == 0).map(|b| &b.word).collect();
        words.sort_by_key(|w| w.len());
        for w in words {
            let e = if w.len() == 1 {
                vec![(w[0] as u64, Fq::ONE)]
            } else {
                let (u, v) = lyndon::standard_factorization(w);
                let (eu, ev) = (&lie[u], &lie[v]);
                homog_sub(&homog_mul(eu, ev, v.len(), field, &shape), &homog_mul(ev, eu, u.len(), field, &shape), field)
            };
            lie.insert(w.clone(), e);
        }

        let mut expansions = Vec::with_capacity(basis.len());
        let mut leads = vec![HashMap::new(); n + 1];
        for (i, b) in basis.iter().enumerate() {
            let mut e = lie[&b.word].clone();
            let mut deg = b.word.len();
            for _ in 0..b.pexp {
                let base = e.clone();
                for _ in 1..p {
                    e = homog_mul(&e, &base, deg, field, &shape);
                }
                deg *= p as usize;
            }
            let repeated: Vec<usize> = b.word.iter().copied().cycle().take(b.weight).collect();
            let lead = shape.encode(&repeated);
            if e.first() != Some(&(lead, Fq::ONE)) || leads[b.weight].insert(lead, i).is_some() {
                return Err(Error::Invalid(format!("basis element {i} is not triangular")));
            }
            expansions.push(e);
        }

        let gen_vectors = (0..r)
            .map(|i| {
                let mut v = vec![Fq::ZERO; basis.len()];
                if n >= 1 {
                    v[i] = Fq::ONE;
                }
                v
            })
            .collect();
        Ok(Arc::new(TruncatedFreeRLA {
            field: field.clone(),
            generators,
            max_degree: n,
            shape,
            basis,
            weights,
            blocks,
            expansions,
            leads,
            gen_vectors,
        }))
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn basis(&self) -> &[BasisElement] {
        &self.basis
    }

    pub fn weights(&self) -> &[usize] {
        &self.weights
    }

    /// Index range of the basis elements of weight `d`.
    pub fn block(&self, d: usize) -> Range<usize> {
        self.blocks.get(d).cloned().unwrap_or(0..0)
    }

    /// Number of basis elements of each weight `1..=N`.
    pub fn graded_counts(&self) -> Vec<usize> {
        (1..=self.max_degree).map(|d| self.block(d).len()).collect()
    }

    pub fn basis_index(&self, word: &[usize], pexp: u32) -> Option<usize> {
        self.basis.iter().position(|b| b.word == word && b.pexp == pexp)
    }

    /// Coordinates of generator `i` (zero when `N = 0`).
    pub fn generator(&self, i: usize) -> &[Fq] {
        &self.gen_vectors[i]
    }

    /// Associative expansion of basis element `i` as `(word, coefficient)`
    /// pairs; words are listed as letter sequences.
    pub fn expansion(&self, i: usize) -> Vec<(Vec<usize>, Fq)> {
        let len = self.weights[i];
        let r = self.shape.r;
        self.expansions[i]
            .iter()
            .map(|&(mut code, c)| {
                let mut w = vec![0; len];
                for slot in w.iter_mut().rev() {
                    *slot = (code % r) as usize;
                    code /= r;
                }
                (w, c)
            })
            .collect()
    }

    fn to_assoc(&self, v: &[Fq]) -> Assoc {
        let mut a = Assoc::zero(&self.shape);
        for (i, &c) in v.iter().enumerate() {
            if !c.is_zero() {
                a.add_scaled(&self.field, self.weights[i], &self.expansions[i], c);
            }
        }
        a
    }

    // Back-substitution against the triangular expansions.
    fn solve(&self, a: &Assoc) -> Vec<Fq> {
        let f = &self.field;
        let mut out = self.zero_vec();
        for d in 1..=self.max_degree {
            let mut part: BTreeMap<u64, Fq> = a.sorted_part(d);
            while let Some((&w, &c)) = part.iter().next() {
                let i = *self.leads[d]
                    .get(&w)
                    .expect("associative result is not a restricted Lie element");
                out[i] = c;
                for &(w2, c2) in &self.expansions[i] {
                    let e = part.entry(w2).or_insert(Fq::ZERO);
                    *e = f.sub(*e, f.mul(c, c2));
                    if e.is_zero() {
                        part.remove(&w2);
                    }
                }
            }
        }
        out
    }

    /// A uniformly random vector supported on weights `<= max_weight`.
    pub fn random_vector<R: Rng + ?Sized>(&self, max_weight: usize, rng: &mut R) -> Vec<Fq> {
        self.weights
            .iter()
            .map(|&w| if w <= max_weight { self.field.random(rng) } else { Fq::ZERO })
            .collect()
    }

    /// Expression for a coordinate vector: a sum of scaled basis elements.
    pub fn vector_expr(&self, v: &[Fq]) -> ExprRef {
        let terms = v
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, &c)| {
                let b = self.basis[i].to_expr();
                if c == Fq::ONE {
                    b
                } else {
                    Expr::sc(c, b)
                }
            })
            .collect();
        Expr::sum(terms)
    }

    pub fn format_vector(&self, v: &[Fq]) -> String {
        expr::format_expr(&self.vector_expr(v), &self.field, &self.generators)
    }

    pub fn parse_vector(&self, text: &str) -> Result<Vec<Fq>> {
        let e = expr::parse_expr(text, &self.field, &self.generators)?;
        self.eval(&e)
    }

    /// Evaluates an expression over this algebra's generators.
    pub fn eval(&self, e: &ExprRef) -> Result<Vec<Fq>> {
        expr::eval(e, self, &self.gen_vectors)
    }
}

impl RestrictedLieAlgebra for TruncatedFreeRLA {
    fn field(&self) -> &FiniteField {
        &self.field
    }

    fn dim(&self) -> usize {
        self.basis.len()
    }

    fn bracket(&self, u: &[Fq], v: &[Fq]) -> Vec<Fq> {
        if algebra::is_zero(u) || algebra::is_zero(v) {
            return self.zero_vec();
        }
        let (a, b) = (self.to_assoc(u), self.to_assoc(v));
        let mut ab = a.mul(&b, &self.field, &self.shape);
        ab.sub_assign(&b.mul(&a, &self.field, &self.shape), &self.field);
        self.solve(&ab)
    }

    fn pmap(&self, u: &[Fq]) -> Vec<Fq> {
        if algebra::is_zero(u) {
            return self.zero_vec();
        }
        let a = self.to_assoc(u);
        self.solve(&a.pow(self.field.characteristic(), &self.field, &self.shape))
    }

    fn ideal_test_vectors(&self) -> Vec<Vec<Fq>> {
        if self.dim() == 0 {
            return Vec::new();
        }
        self.gen_vectors.clone()
    }

    fn basis_weights(&self) -> Option<&[usize]> {
        Some(&self.weights)
    }
}

/// An element of a truncated free restricted Lie algebra in canonical
/// coordinates.
#[derive(Clone)]
pub struct LieElement {
    owner: Arc<TruncatedFreeRLA>,
    coords: BTreeMap<usize, Fq>,
}

impl PartialEq for LieElement {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.owner, &other.owner) && self.coords == other.coords
    }
}

impl Eq for LieElement {}

impl fmt::Debug for LieElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format())
    }
}

impl fmt::Display for LieElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format())
    }
}

impl LieElement {
    pub fn from_vector(owner: &Arc<TruncatedFreeRLA>, v: &[Fq]) -> Self {
        let coords = v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, &c)| (i, c)).collect();
        LieElement { owner: owner.clone(), coords }
    }

    pub fn zero(owner: &Arc<TruncatedFreeRLA>) -> Self {
        LieElement { owner: owner.clone(), coords: BTreeMap::new() }
    }

    pub fn generator(owner: &Arc<TruncatedFreeRLA>, name: &str) -> Result<Self> {
        let i = owner.generators.iter().position(|g| g == name).ok_or_else(|| Error::UnknownGenerator(name.into()))?;
        Ok(Self::from_vector(owner, owner.generator(i)))
    }

    pub fn basis_element(owner: &Arc<TruncatedFreeRLA>, i: usize) -> Self {
        Self::from_vector(owner, &owner.basis_vec(i))
    }

    pub fn parse(owner: &Arc<TruncatedFreeRLA>, text: &str) -> Result<Self> {
        Ok(Self::from_vector(owner, &owner.parse_vector(text)?))
    }

    pub fn owner(&self) -> &Arc<TruncatedFreeRLA> {
        &self.owner
    }

    /// Nonzero coordinates by basis index.
    pub fn coords(&self) -> &BTreeMap<usize, Fq> {
        &self.coords
    }

    pub fn coeff(&self, i: usize) -> Fq {
        self.coords.get(&i).copied().unwrap_or(Fq::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn to_vector(&self) -> Vec<Fq> {
        let mut v = self.owner.zero_vec();
        for (&i, &c) in &self.coords {
            v[i] = c;
        }
        v
    }

    pub fn format(&self) -> String {
        self.owner.format_vector(&self.to_vector())
    }

    fn same_owner(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.owner, &other.owner) {
            Ok(())
        } else {
            Err(Error::OwnerMismatch)
        }
    }

    pub fn bracket(&self, other: &Self) -> Result<Self> {
        self.same_owner(other)?;
        Ok(Self::from_vector(&self.owner, &self.owner.bracket(&self.to_vector(), &other.to_vector())))
    }

    /// `self^{[p^n]}`
    pub fn pmap(&self, n: u32) -> Self {
        Self::from_vector(&self.owner, &self.owner.pmap_iter(&self.to_vector(), n))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_owner(other)?;
        let f = &self.owner.field;
        Ok(Self::from_vector(&self.owner, &algebra::add(f, &self.to_vector(), &other.to_vector())))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_owner(other)?;
        let f = &self.owner.field;
        Ok(Self::from_vector(&self.owner, &algebra::sub(f, &self.to_vector(), &other.to_vector())))
    }

    pub fn scale(&self, c: Fq) -> Self {
        Self::from_vector(&self.owner, &algebra::scale(&self.owner.field, c, &self.to_vector()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn f(p: u32) -> FiniteField {
        FiniteField::prime(p).unwrap()
    }

    #[test]
    fn basis_sizes() {
        let a = build_algebra(&f(2), &["x", "y"], 4).unwrap();
        assert_eq!(a.dim(), 13);
        assert_eq!(a.graded_counts(), vec![2, 3, 2, 6]);
        let a = build_algebra(&f(2), &["x"], 2).unwrap();
        assert_eq!(a.basis().iter().map(|b| b.pexp).collect::<Vec<_>>(), vec![0, 1]);
        let a = build_algebra(&f(3), &["x", "y"], 3).unwrap();
        assert_eq!(a.graded_counts(), vec![2, 1, 4]);
        assert_eq!(build_algebra(&f(2), &["x"], 0).unwrap().dim(), 0);
    }

    #[test]
    fn resource_cap_and_names() {
        let err = TruncatedFreeRLA::new(&f(2), vec!["x".into(), "y".into()], 12, 100).unwrap_err();
        assert!(matches!(err, Error::ResourceBound { cap: 100, .. }));
        assert!(build_algebra(&f(2), &["x", "x"], 3).is_err());
        assert!(build_algebra(&f(2), &["(x"], 3).is_err());
    }

    #[test]
    fn bracket_examples() {
        let a = build_algebra(&f(2), &["x", "y"], 6).unwrap();
        let x = LieElement::generator(&a, "x").unwrap();
        let y = LieElement::generator(&a, "y").unwrap();
        let xy = x.bracket(&y).unwrap();
        assert_eq!(xy.format(), "(br x y)");
        assert!(x.bracket(&x).unwrap().is_zero());
        assert_eq!(x.pmap(1).bracket(&y).unwrap(), x.bracket(&xy).unwrap());
        let s = x.add(&y).unwrap().pmap(1);
        assert_eq!(s, LieElement::parse(&a, "(sum (pp x 1) (pp y 1) (br x y))").unwrap());
        let other = build_algebra(&f(2), &["x", "y"], 6).unwrap();
        let z = LieElement::generator(&other, "x").unwrap();
        assert_eq!(x.bracket(&z), Err(Error::OwnerMismatch));
    }

    #[test]
    fn semilinear_pmap() {
        let f4 = FiniteField::parse("gf(4; 1,1,1)").unwrap();
        let a = build_algebra(&f4, &["x", "y"], 4).unwrap();
        let alpha = f4.element(&[0, 1]).unwrap();
        let x = LieElement::generator(&a, "x").unwrap();
        let lhs = x.scale(alpha).pmap(1);
        assert_eq!(lhs, x.pmap(1).scale(f4.frobenius(alpha, 1)));
        assert_eq!(lhs.format(), "(sc [1,1] (pp x 1))");
    }

    #[test]
    fn format_round_trip() {
        let f9 = FiniteField::parse("gf(9; 1,0,1)").unwrap();
        let a = build_algebra(&f9, &["x", "y"], 6).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            let v = LieElement::from_vector(&a, &a.random_vector(6, &mut rng));
            assert_eq!(LieElement::parse(&a, &v.format()).unwrap(), v);
        }
        assert_eq!(LieElement::parse(&a, "(br x x)").unwrap().format(), "0");
    }

    #[test]
    fn lie_axioms() {
        for (p, n) in [(2, 6), (3, 6), (5, 5)] {
            let a = build_algebra(&f(p), &["x", "y", "z"], n).unwrap();
            let fl = a.field().clone();
            let mut rng = ChaCha8Rng::seed_from_u64(p as u64);
            for _ in 0..5 {
                let (u, v, w) = (a.random_vector(n, &mut rng), a.random_vector(n, &mut rng), a.random_vector(n, &mut rng));
                assert!(algebra::is_zero(&a.bracket(&u, &u)));
                let mut jac = a.bracket(&u, &a.bracket(&v, &w));
                algebra::axpy(&fl, &mut jac, Fq::ONE, &a.bracket(&v, &a.bracket(&w, &u)));
                algebra::axpy(&fl, &mut jac, Fq::ONE, &a.bracket(&w, &a.bracket(&u, &v)));
                assert!(algebra::is_zero(&jac));
                let lhs = a.bracket(&a.pmap(&u), &v);
                assert_eq!(lhs, a.ad_pow(&u, p as usize, &v));
            }
        }
    }

    #[test]
    fn expansions_are_triangular() {
        let a = build_algebra(&f(3), &["x", "y"], 6).unwrap();
        for i in 0..a.dim() {
            let b = &a.basis()[i];
            let (w, c) = &a.expansion(i)[0];
            assert_eq!(*c, Fq::ONE);
            assert_eq!(w.len(), b.weight);
            assert!(w.chunks(b.word.len()).all(|ch| ch == b.word.as_slice()));
        }
    }
}
