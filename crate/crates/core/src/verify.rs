//! Exact verification suites, one per checked fact. Shared by the `rlak
//! verify` command and the acceptance tests.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{self, RestrictedLieAlgebra};
use crate::error::{Error, Result};
use crate::field::{FiniteField, Fq};
use crate::freerla::dims::{graded_dims, series_dims};
use crate::freerla::expr::{self, Expr, ExprRef};
use crate::freerla::{build_algebra, enumerate_basis, TruncatedFreeRLA};
use crate::orepoly::{diagonalize, replay, DivSide, OreMatrix, OrePoly};
use crate::presentation::{
    abelianize, bp_certificate, ideal_free_generators, ideals_agree, kukin_check, largeness_counts, normalize, Presentation,
    QMode,
};
use crate::quotient::{
    check_l991, check_zp, complement_vectors, derived_p_series, filtration_ideal, find_d_for_subspace, ideal_closure,
    is_nilpotent, quotient_algebra, zp_drop_breaks, zp_generators, zp_top_index, FdSubspace,
};

/// Suite names in report order.
pub const SUITES: [&str; 10] =
    ["dims", "main-identity", "jacobson", "ore", "normalize", "kukin", "zp", "inclusion", "series", "counting"];

/// Outcome of one suite.
#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    /// Short description of the fact being checked.
    pub anchor: String,
    pub seed: u64,
    pub cases: usize,
    pub passed: usize,
    pub failures: Vec<String>,
    /// Notable values found along the way, such as a strictness witness.
    pub notes: Vec<String>,
    /// Wall time; left out of JSON so reports are reproducible.
    #[serde(skip)]
    pub millis: u128,
}

impl SuiteReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty() && self.passed == self.cases
    }
}

struct Tally {
    cases: usize,
    passed: usize,
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Tally {
    fn new() -> Self {
        Tally { cases: 0, passed: 0, failures: Vec::new(), notes: Vec::new() }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if ok {
            self.passed += 1;
        } else if self.failures.len() < 20 {
            self.failures.push(what());
        }
    }

    fn check_result(&mut self, r: Result<bool>, what: impl FnOnce() -> String) {
        match r {
            Ok(ok) => self.check(ok, what),
            Err(e) => {
                let msg = what();
                self.check(false, || format!("{msg}: {e}"))
            }
        }
    }
}

pub fn anchor(suite: &str) -> Option<&'static str> {
    Some(match suite {
        "dims" => "graded dimensions of the free restricted Lie algebra",
        "main-identity" => "main identity [g^[p], h] = (ad g)^p h",
        "jacobson" => "Jacobson sum formula (x+y)^[p] = x^[p] + y^[p] + w(x,y)",
        "ore" => "Euclidean division and diagonalization over the twisted polynomial ring",
        "normalize" => "normalization of a presentation with m <= n-1",
        "kukin" => "free generators p^k(r-1)+1 of a codimension-k ideal",
        "zp" => "ideal of g coincides with the ideal of N generated by Z_p",
        "inclusion" => "ideal of g^[p^n] lies in the ideal of H generated by g^[p^(n-d)]",
        "series" => "derived p-series, nilpotent quotients and find_d",
        "counting" => "generator count (n-m-1)p^k - (n-1)p^q",
        _ => return None,
    })
}

/// Runs one suite by name.
pub fn run_suite(suite: &str, seed: u64) -> Result<SuiteReport> {
    let anchor = anchor(suite).ok_or_else(|| Error::Invalid(format!("unknown suite `{suite}`")))?;
    let start = Instant::now();
    let mut t = Tally::new();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let outcome = match suite {
        "dims" => dims_suite(&mut t),
        "main-identity" => main_identity_suite(&mut t, &mut rng),
        "jacobson" => jacobson_suite(&mut t, &mut rng),
        "ore" => ore_suite(&mut t, &mut rng),
        "normalize" => normalize_suite(&mut t, &mut rng),
        "kukin" => kukin_suite(&mut t),
        "zp" => zp_suite(&mut t, &mut rng),
        "inclusion" => inclusion_suite(&mut t, &mut rng),
        "series" => series_suite(&mut t, &mut rng),
        "counting" => counting_suite(&mut t),
        _ => unreachable!(),
    };
    if let Err(e) = outcome {
        t.check(false, || format!("suite aborted: {e}"));
    }
    Ok(SuiteReport {
        suite: suite.to_string(),
        anchor: anchor.to_string(),
        seed,
        cases: t.cases,
        passed: t.passed,
        failures: t.failures,
        notes: t.notes,
        millis: start.elapsed().as_millis(),
    })
}

/// Runs every suite, each on its own thread; reports come back in
/// [`SUITES`] order.
pub fn run_all(seed: u64) -> Vec<SuiteReport> {
    std::thread::scope(|s| {
        let handles: Vec<_> = SUITES.iter().map(|name| s.spawn(move || run_suite(name, seed))).collect();
        handles.into_iter().map(|h| h.join().expect("suite panicked").expect("known suite")).collect()
    })
}

fn gf(q: u32) -> FiniteField {
    FiniteField::with_order(q).expect("supported order")
}

fn dims_suite(t: &mut Tally) -> Result<()> {
    t.check(graded_dims(2, 2, 6) == [2, 3, 2, 6, 6, 11], || "spot value (r=2, p=2)".into());
    for r in 1..=4usize {
        for p in [2u64, 3, 5] {
            let witt = graded_dims(r as u64, p, 12);
            let series = series_dims(r as u64, p, 12);
            let mut counted = vec![0u64; 12];
            for b in enumerate_basis(r, p, 12) {
                counted[b.weight - 1] += 1;
            }
            t.check(witt == series, || format!("r={r} p={p}: Witt {witt:?} vs series {series:?}"));
            t.check(witt == counted, || format!("r={r} p={p}: Witt {witt:?} vs enumerated {counted:?}"));
            for n in 1..=12 {
                t.check(graded_dims(r as u64, p, n)[..] == witt[..n], || format!("r={r} p={p} N={n}: prefix"));
            }
        }
    }
    // full constructions, where small enough
    for (r, q, n) in [(1, 2, 12), (2, 2, 8), (2, 3, 7), (3, 2, 5), (2, 5, 6), (3, 3, 4), (4, 2, 4), (2, 4, 6)] {
        let names: Vec<String> = (0..r).map(|i| format!("x{i}")).collect();
        let f = gf(q);
        let alg = TruncatedFreeRLA::new(&f, names, n, usize::MAX)?;
        let expect = graded_dims(r as u64, f.characteristic() as u64, n);
        let got: Vec<u64> = alg.graded_counts().iter().map(|&c| c as u64).collect();
        t.check(got == expect, || format!("build r={r} q={q} N={n}: {got:?} vs {expect:?}"));
    }
    Ok(())
}

fn two_generator_algebras() -> Result<Vec<std::sync::Arc<TruncatedFreeRLA>>> {
    Ok(vec![build_algebra(&gf(2), &["x", "y"], 8)?, build_algebra(&gf(3), &["x", "y"], 9)?])
}

fn main_identity_suite(t: &mut Tally, rng: &mut ChaCha8Rng) -> Result<()> {
    for alg in two_generator_algebras()? {
        let p = alg.field().characteristic() as usize;
        let n = alg.max_degree();
        for trial in 0..200 {
            // low weights keep g^[p] inside the truncation for some pairs
            let g = alg.random_vector(1 + trial % n, rng);
            let h = alg.random_vector(n, rng);
            let lhs = alg.bracket(&alg.pmap(&g), &h);
            let rhs = alg.ad_pow(&g, p, &h);
            t.check(lhs == rhs, || format!("p={p} trial {trial}: {} / {}", alg.format_vector(&g), alg.format_vector(&h)));
        }
    }
    Ok(())
}

fn jacobson_suite(t: &mut Tally, rng: &mut ChaCha8Rng) -> Result<()> {
    for alg in two_generator_algebras()? {
        let f = alg.field().clone();
        let p = f.characteristic() as usize;
        let n = alg.max_degree();
        let pexp0: Vec<bool> = alg.basis().iter().map(|b| b.pexp == 0).collect();
        for trial in 0..200 {
            let x = alg.random_vector(1 + trial % n, rng);
            let y = alg.random_vector(1 + (trial / n) % n, rng);
            let sum = algebra::add(&f, &x, &y);
            let defect = algebra::sub(&f, &algebra::sub(&f, &alg.pmap(&sum), &alg.pmap(&x)), &alg.pmap(&y));
            let in_span = defect.iter().zip(&pexp0).all(|(c, &ok)| ok || c.is_zero());
            t.check(in_span, || format!("p={p} trial {trial}: defect outside the bracket span"));
            t.check(defect == algebra::jacobson_sum(&*alg, &x, &y), || {
                format!("p={p} trial {trial}: defect differs from the bracket formula")
            });
        }
    }
    Ok(())
}

fn ore_suite(t: &mut Tally, rng: &mut ChaCha8Rng) -> Result<()> {
    for f in [gf(2), gf(4)] {
        for i in 0..500 {
            let a = OrePoly::random(&f, rng.gen_range(0..=8), rng);
            let mut g = OrePoly::random(&f, rng.gen_range(0..=4), rng);
            if g.is_zero() {
                g = OrePoly::one(&f);
            }
            let side = if i % 2 == 0 { DivSide::Right } else { DivSide::Left };
            let (q, r) = a.divide(&g, side)?;
            let back = match side {
                DivSide::Right => q.mul(&g)?.add(&r)?,
                DivSide::Left => g.mul(&q)?.add(&r)?,
            };
            let small = r.degree().is_none_or(|d| Some(d) < g.degree());
            t.check(back == a && small, || format!("{f} {side:?}: {a} / {g} gave q={q} r={r}"));
        }
    }
    for i in 0..100 {
        let f = if i % 2 == 0 { gf(2) } else { gf(4) };
        let (rows, cols) = (rng.gen_range(1..=4), rng.gen_range(1..=4));
        let m = OreMatrix::random(&f, rows, cols, 4, rng);
        let d = diagonalize(&m)?;
        let replayed = replay(&m, &d.row_ops, &d.col_ops)?;
        t.check(replayed.same_entries(&d.diagonal), || format!("matrix {i}: replay differs"));
        t.check(d.diagonal.is_diagonal(), || format!("matrix {i}: not diagonal"));
        t.check(d.rank == d.diagonal.diagonal_rank() && d.rank <= rows.min(cols), || format!("matrix {i}: rank"));
    }
    Ok(())
}

/// A random relator: a power component over some generators plus at most
/// two brackets.
fn random_relator(f: &FiniteField, n: usize, rng: &mut ChaCha8Rng) -> ExprRef {
    let mut terms = Vec::new();
    for j in 0..n {
        if rng.gen_bool(0.5) {
            let c = f.random_nonzero(rng);
            terms.push(Expr::sc(c, Expr::pp(Expr::gen(j), rng.gen_range(0..=2))));
        }
    }
    for _ in 0..rng.gen_range(0..=2) {
        let a = rng.gen_range(0..n);
        let b = (a + rng.gen_range(1..n)) % n;
        terms.push(Expr::br(Expr::gen(a), Expr::gen(b)));
    }
    Expr::sum(terms)
}

fn random_presentation(rng: &mut ChaCha8Rng) -> Result<Presentation> {
    let f = if rng.gen_bool(0.7) { gf(2) } else { gf(3) };
    let n = rng.gen_range(2..=if f.order() == 2 { 4 } else { 3 });
    let m = rng.gen_range(1..n);
    let names: Vec<String> = ["x", "y", "z", "w"][..n].iter().map(|s| s.to_string()).collect();
    let mut rels = Vec::new();
    while rels.len() < m {
        let r = random_relator(&f, n, rng);
        if !expr::is_formally_zero(&r, &f) {
            rels.push(r);
        }
    }
    Presentation::new(&f, names, rels)
}

fn normalize_suite(t: &mut Tally, rng: &mut ChaCha8Rng) -> Result<()> {
    let p = Presentation::parse(&gf(2), &["x", "y"], &["(sum (pp x 1) (pp y 1) (br x y))"])?;
    let out = normalize(&p)?;
    let m = &out.diagonal;
    t.check(!m.entry(0, 0).is_zero() && m.entry(0, 1).is_zero(), || "worked example: power component".into());
    t.check(!out.omitted.is_empty(), || "worked example: nothing omitted".into());
    t.check_result(ideals_agree(&p, &out.presentation, &out.definitions, 6), || "worked example: ideals".into());
    t.notes.push(format!("worked example -> {:?}, omitted {:?}", out.presentation, out.omitted));

    for i in 0..50 {
        let p = random_presentation(rng)?;
        let out = normalize(&p)?;
        let ab = abelianize(&out.presentation);
        let absent = |j: usize| (0..ab.rows()).all(|r| ab.entry(r, j).is_zero());
        let gens = out.presentation.generators();
        let omitted_ok = !out.omitted.is_empty()
            && out.omitted.iter().all(|name| absent(gens.iter().position(|g| g == name).expect("omitted is a generator")));
        t.check(omitted_ok, || format!("presentation {i} {p:?}: no absent generator"));
        t.check_result(ideals_agree(&p, &out.presentation, &out.definitions, 6), || {
            format!("presentation {i} {p:?}: ideals differ")
        });
    }
    Ok(())
}

fn kukin_suite(t: &mut Tally) -> Result<()> {
    for (r, q, k) in [(2, 2, 1), (2, 2, 2), (3, 2, 1), (2, 3, 1)] {
        let f = gf(q);
        let p = f.characteristic();
        let count = ideal_free_generators(r, p, k)?.len();
        t.check(count == (p as usize).pow(k) * (r - 1) + 1, || format!("(r,p,k)=({r},{p},{k}): count {count}"));
        let rep = kukin_check(&f, r, k, 8)?;
        t.check(rep.agree, || format!("(r,p,k)=({r},{p},{k}): {:?} vs {:?}", rep.closure_dims, rep.model_dims));
    }
    Ok(())
}

/// Random element of a subspace.
fn random_member(s: &FdSubspace, rng: &mut ChaCha8Rng) -> Vec<Fq> {
    let f = s.field();
    let mut v = vec![Fq::ZERO; s.ambient_dim()];
    for row in s.rows() {
        algebra::axpy(f, &mut v, f.random(rng), row);
    }
    v
}

fn zp_suite(t: &mut Tally, rng: &mut ChaCha8Rng) -> Result<()> {
    let mut witness = None;
    for q in [2, 3] {
        for n in 2..=6 {
            let alg = build_algebra(&gf(q), &["x", "y"], n)?;
            let y = alg.generator(1).to_vec();
            let xp = alg.parse_vector("(pp x 1)")?;
            let mut ideals = vec![("<y>", ideal_closure(&*alg, std::slice::from_ref(&y))), ("I_2", filtration_ideal(&alg, 2))];
            if n >= 3 {
                ideals.push(("I_3", filtration_ideal(&alg, 3)));
            }
            if n >= q as usize {
                ideals.push(("<y, x^[p]>", ideal_closure(&*alg, &[y.clone(), xp.clone()])));
            }
            for (label, ideal) in &ideals {
                let tvecs = complement_vectors(ideal);
                let mut gs = vec![ideal.rows()[0].clone(), random_member(ideal, rng)];
                if ideal.contains(&y) {
                    gs.push(y.clone());
                }
                for g in gs {
                    let what = || format!("p={q} N={n} {label} g={}", alg.format_vector(&g));
                    t.check_result(check_zp(&*alg, ideal, &g, &tvecs), what);
                    if witness.is_none() {
                        let z = zp_generators(&*alg, ideal, &g, &tvecs)?;
                        if let Some(top) = zp_top_index(&z) {
                            if zp_drop_breaks(&*alg, ideal, &g, &tvecs, top)? {
                                witness = Some(format!(
                                    "dropping {} from Z_p (p={q} N={n} {label} g={}) breaks equality",
                                    alg.format_vector(&z[top]),
                                    alg.format_vector(&g)
                                ));
                            }
                        }
                    }
                }
            }
        }
    }
    t.check(witness.is_some(), || "no strictness witness found".into());
    t.notes.extend(witness);
    Ok(())
}

fn inclusion_suite(t: &mut Tally, rng: &mut ChaCha8Rng) -> Result<()> {
    for q in [2, 3] {
        for big_n in 4..=8 {
            let alg = build_algebra(&gf(q), &["x", "y"], big_n)?;
            let y = alg.generator(1).to_vec();
            let xp = alg.parse_vector("(pp x 1)")?;
            let xpp = alg.parse_vector("(pp x 2)")?;
            let hs = [
                ("<y, x^[p]>", ideal_closure(&*alg, &[y.clone(), xp])),
                ("I_2", filtration_ideal(&alg, 2)),
                ("<y, x^[p^2]>", ideal_closure(&*alg, &[y.clone(), xpp])),
            ];
            for (label, h) in &hs {
                let d = h.codim();
                if !(1..=2).contains(&d) {
                    continue;
                }
                let gs = [h.rows()[0].clone(), random_member(h, rng)];
                for g in &gs {
                    for n in d..=d + 2 {
                        t.check_result(check_l991(&*alg, h, g, n as u32), || {
                            format!("p={q} N={big_n} H={label} d={d} n={n} g={}", alg.format_vector(g))
                        });
                    }
                }
            }
        }
    }
    Ok(())
}

fn series_suite(t: &mut Tally, rng: &mut ChaCha8Rng) -> Result<()> {
    let a4 = build_algebra(&gf(2), &["x", "y"], 4)?;
    let series = derived_p_series(&*a4, 16)?;
    t.check(series.len() > 1 && series[1].codim() == 2, || "dim A/D^1 != 2".into());
    for (i, d) in series.iter().enumerate() {
        t.check(is_nilpotent(&quotient_algebra(&a4, d)?), || format!("A/D^{i} not nilpotent"));
    }
    for f in 1..=a4.max_degree() + 1 {
        t.check(is_nilpotent(&quotient_algebra(&a4, &filtration_ideal(&a4, f))?), || format!("A/I_{f} not nilpotent"));
    }

    let a = build_algebra(&gf(2), &["x", "y"], 6)?;
    let series = derived_p_series(&*a, 64)?;
    for trial in 0..20 {
        let k = rng.gen_range(1..=3);
        let vecs: Vec<Vec<Fq>> = (0..k).map(|_| a.random_vector(a.max_degree(), rng)).collect();
        let v = FdSubspace::span(a.field(), a.dim(), vecs.iter());
        let d = find_d_for_subspace(&*a, &v)?;
        // D^i for i past the stored series equals the last term
        let term = |i: usize| &series[i.min(series.len() - 1)];
        let minimal = term(d).intersection_dim(&v) == 0 && (d == 0 || term(d - 1).intersection_dim(&v) > 0);
        t.check(minimal, || format!("trial {trial}: find_d = {d} is not minimal"));
    }
    Ok(())
}

fn counting_suite(t: &mut Tally) -> Result<()> {
    let p = Presentation::parse(&gf(2), &["x", "y", "z"], &["(sum (pp x 1) (br y z))"])?;
    let c = bp_certificate(&p, 0)?;
    t.check(c.k == 2 && c.difference == 2, || format!("(n=3, m=1, p=2, q=0): {c:?}"));
    for prime in [2u32, 3, 5] {
        for n in 1..=6usize {
            for m in 0..=6usize {
                for q in 0..=2u32 {
                    let res = largeness_counts(n, m, prime, q, QMode::Supplied);
                    match res {
                        Err(Error::HypothesisFailed { .. }) => t.check(m + 2 > n, || format!("n={n} m={m}: rejected")),
                        Ok(c) => {
                            let pk = (prime as i128).pow(c.k);
                            let pq = (prime as i128).pow(q);
                            let diff = |k: u32| (n as i128 - m as i128 - 1) * (prime as i128).pow(k) - (n as i128 - 1) * pq;
                            let ok = m + 2 <= n
                                && c.difference == diff(c.k)
                                && c.difference > 0
                                && (c.k == q + 1 || diff(c.k - 1) <= 0)
                                && c.generator_count as i128 == (n as i128 - 1) * (pk - pq)
                                && c.relation_count as i128 == m as i128 * pk;
                            t.check(ok, || format!("n={n} m={m} p={prime} q={q}: {c:?}"));
                        }
                        Err(e) => t.check(false, || format!("n={n} m={m}: {e}")),
                    }
                }
            }
        }
    }
    Ok(())
}
