//! Presentations `<x_1, ..., x_n | w_1, ..., w_m>` of restricted Lie
//! algebras: generator changes, abelianization into matrices over the
//! twisted polynomial ring, normalization, and the counting certificates
//! for largeness.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::RestrictedLieAlgebra;
use crate::error::{Error, Result};
use crate::field::{FiniteField, Fq};
use crate::freerla::dims::weighted_free_dims;
use crate::freerla::expr::{self, Expr, ExprRef};
use crate::freerla::{check_names, TruncatedFreeRLA, DEFAULT_CAP};
use crate::orepoly::{diagonalize, OpKind, OpSide, OreMatrix, OrePoly};
use crate::quotient::{ideal_closure, TrackedClosure};

/// Presentation as read from and written to JSON.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationSpec {
    pub field: String,
    pub generators: Vec<String>,
    pub relators: Vec<String>,
}

/// The generator change `x_target -> lambda x_target + tail`, where `tail`
/// is a p-polynomial (sums and scalar multiples of p-powers) in the other
/// generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenTransform {
    pub target: usize,
    pub lambda: Fq,
    pub tail: ExprRef,
}

impl GenTransform {
    pub fn identity(target: usize) -> Self {
        GenTransform { target, lambda: Fq::ONE, tail: Expr::zero() }
    }

    fn validate(&self, n: usize) -> Result<()> {
        if self.target >= n {
            return Err(Error::MalformedTransform(format!("no generator with index {}", self.target)));
        }
        if self.lambda.is_zero() {
            return Err(Error::MalformedTransform("the leading coefficient must be nonzero".into()));
        }
        if expr::max_generator(&self.tail).is_some_and(|g| g >= n) {
            return Err(Error::MalformedTransform("tail mentions an undeclared generator".into()));
        }
        if expr::mentions(&self.tail, self.target) {
            return Err(Error::MalformedTransform("tail mentions the target generator".into()));
        }
        if !is_p_polynomial(&self.tail) {
            return Err(Error::MalformedTransform("tail must be a p-polynomial (no brackets)".into()));
        }
        Ok(())
    }
}

fn is_p_polynomial(e: &Expr) -> bool {
    match e {
        Expr::Zero | Expr::Gen(_) => true,
        Expr::Br(..) => false,
        Expr::Pp(a, _) | Expr::Sc(_, a) => is_p_polynomial(a),
        Expr::Sum(ts) => ts.iter().all(|t| is_p_polynomial(t)),
    }
}

/// One step in the life of a presentation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HistoryEntry {
    Transform(GenTransform),
    SwapGenerators(usize, usize),
    /// `w_target += multiplier * w_source`, with `t` acting as the p-map.
    Recombine { target: usize, source: usize, multiplier: OrePoly },
    ScaleRelator { target: usize, factor: Fq },
    SwapRelators(usize, usize),
}

#[derive(Clone, PartialEq, Eq)]
pub struct Presentation {
    field: FiniteField,
    generators: Vec<String>,
    relators: Vec<ExprRef>,
    history: Vec<HistoryEntry>,
}

impl fmt::Debug for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{} | {}> over {}", self.generators.join(", "), self.relator_strings().join(", "), self.field)
    }
}

impl Presentation {
    /// Relators must be formally nonzero and use only the listed generators.
    pub fn new(field: &FiniteField, generators: Vec<String>, relators: Vec<ExprRef>) -> Result<Self> {
        check_names(&generators)?;
        for r in &relators {
            if expr::max_generator(r).is_some_and(|g| g >= generators.len()) {
                return Err(Error::Invalid("relator mentions an undeclared generator".into()));
            }
            if expr::is_formally_zero(r, field) {
                return Err(Error::Invalid("relators must be nonzero".into()));
            }
        }
        Ok(Presentation { field: field.clone(), generators, relators, history: Vec::new() })
    }

    pub fn parse(field: &FiniteField, generators: &[&str], relators: &[&str]) -> Result<Self> {
        let names: Vec<String> = generators.iter().map(|s| s.to_string()).collect();
        let rels = relators.iter().map(|r| expr::parse_expr(r, field, &names)).collect::<Result<_>>()?;
        Self::new(field, names, rels)
    }

    pub fn from_spec(spec: &PresentationSpec) -> Result<Self> {
        let field = FiniteField::parse(&spec.field)?;
        let gens: Vec<&str> = spec.generators.iter().map(String::as_str).collect();
        let rels: Vec<&str> = spec.relators.iter().map(String::as_str).collect();
        Self::parse(&field, &gens, &rels)
    }

    pub fn to_spec(&self) -> PresentationSpec {
        PresentationSpec { field: self.field.to_string(), generators: self.generators.clone(), relators: self.relator_strings() }
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relators(&self) -> &[ExprRef] {
        &self.relators
    }

    pub fn history(&self) -> &[HistoryEntry] {
        &self.history
    }

    pub fn relator_strings(&self) -> Vec<String> {
        self.relators.iter().map(|r| expr::format_expr(r, &self.field, &self.generators)).collect()
    }

    pub fn n(&self) -> usize {
        self.generators.len()
    }

    pub fn m(&self) -> usize {
        self.relators.len()
    }

    /// Rewrites every relator through `images` (old generator `i` becomes
    /// `images[i]`, an expression in the same generator slots) and brings
    /// it to canonical form.
    fn substituted(&self, images: &[ExprRef]) -> Vec<ExprRef> {
        let rels: Vec<ExprRef> = self.relators.iter().map(|r| expr::substitute(r, images)).collect();
        canonical_forms(&self.field, &self.generators, &rels)
    }
}

/// `f * e = sum_i c_i e^{[p^i]}` for `f = sum_i c_i t^i`.
pub fn apply_poly(f: &OrePoly, e: &ExprRef) -> ExprRef {
    Expr::sum(
        f.coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, &c)| {
                let pe = Expr::pp(e.clone(), i as u32);
                if c == Fq::ONE {
                    pe
                } else {
                    Expr::sc(c, pe)
                }
            })
            .collect(),
    )
}

/// Weight bound of an expression: generators weigh 1, brackets add,
/// `pp` multiplies by `p^n`, sums take the maximum. Saturates.
pub fn expr_weight(e: &ExprRef, p: u64) -> u64 {
    match &**e {
        Expr::Zero => 0,
        Expr::Gen(_) => 1,
        Expr::Br(a, b) => expr_weight(a, p).saturating_add(expr_weight(b, p)),
        Expr::Pp(a, n) => expr_weight(a, p).saturating_mul(p.saturating_pow(*n)),
        Expr::Sc(_, a) => expr_weight(a, p),
        Expr::Sum(ts) => ts.iter().map(|t| expr_weight(t, p)).max().unwrap_or(0),
    }
}

/// Canonical basis expansions of the expressions, computed exactly in the
/// truncation at their largest weight. Falls back to local simplification
/// when that algebra would be too large.
pub fn canonical_forms(field: &FiniteField, names: &[String], exprs: &[ExprRef]) -> Vec<ExprRef> {
    let p = field.characteristic() as u64;
    let w = exprs.iter().map(|e| expr_weight(e, p)).max().unwrap_or(0);
    let alg = usize::try_from(w).ok().and_then(|w| TruncatedFreeRLA::new(field, names.to_vec(), w, DEFAULT_CAP).ok());
    exprs
        .iter()
        .map(|e| match alg.as_ref().and_then(|a| a.eval(e).ok().map(|v| a.vector_expr(&v))) {
            Some(c) => c,
            None => expr::simplify(e, field),
        })
        .collect()
}

/// Applies a generator change. The relators are rewritten in the new
/// generators by substituting `x_i = lambda^{-1} (x_i' - tail)`.
pub fn apply_transform(p: &Presentation, t: &GenTransform) -> Result<Presentation> {
    t.validate(p.n())?;
    let f = &p.field;
    let inv = f.inv(t.lambda)?;
    let mut images: Vec<ExprRef> = (0..p.n()).map(Expr::gen).collect();
    images[t.target] = Expr::sc(inv, Expr::sum(vec![Expr::gen(t.target), Expr::sc(f.neg(Fq::ONE), t.tail.clone())]));
    let mut out = p.clone();
    out.relators = p.substituted(&images);
    out.history.push(HistoryEntry::Transform(t.clone()));
    Ok(out)
}

/// The new generators of `apply_transform(p, t)` written in the old ones.
pub fn transform_definitions(n: usize, t: &GenTransform) -> Vec<ExprRef> {
    let mut defs: Vec<ExprRef> = (0..n).map(Expr::gen).collect();
    defs[t.target] = Expr::sum(vec![Expr::sc(t.lambda, Expr::gen(t.target)), t.tail.clone()]);
    defs
}

fn abelian_row(e: &ExprRef, field: &FiniteField, n: usize) -> Vec<OrePoly> {
    match &**e {
        Expr::Zero | Expr::Br(..) => vec![OrePoly::zero(field); n],
        Expr::Gen(j) => {
            let mut row = vec![OrePoly::zero(field); n];
            row[*j] = OrePoly::one(field);
            row
        }
        Expr::Pp(a, k) => {
            let tk = OrePoly::monomial(field, Fq::ONE, *k as usize);
            abelian_row(a, field, n).iter().map(|f| tk.mul_unchecked(f)).collect()
        }
        Expr::Sc(c, a) => abelian_row(a, field, n).iter().map(|f| f.scale_left(*c)).collect(),
        Expr::Sum(ts) => {
            let mut row = vec![OrePoly::zero(field); n];
            for t in ts {
                for (acc, f) in row.iter_mut().zip(abelian_row(t, field, n)) {
                    *acc = acc.add_unchecked(&f);
                }
            }
            row
        }
    }
}

/// Image of the relators in the free abelian restricted Lie algebra, a free
/// module over the twisted polynomial ring: entry `(i, j)` collects the
/// terms `c x_j^{[p^e]}` of relator `i` as `c t^e`.
pub fn abelianize(p: &Presentation) -> OreMatrix {
    let rows = p.relators.iter().map(|r| abelian_row(r, &p.field, p.n())).collect();
    OreMatrix::from_rows(&p.field, rows).expect("rows share the field")
}

/// Output of [`normalize`].
#[derive(Clone, Debug)]
pub struct Normalization {
    pub presentation: Presentation,
    /// Names of the generators absent from every power component.
    pub omitted: Vec<String>,
    /// Each new generator as an expression in the original generators.
    pub definitions: Vec<ExprRef>,
    /// Abelianization of the new presentation.
    pub diagonal: OreMatrix,
    pub rank: usize,
}

/// Changes generators and recombines relators so that the power component
/// of relator `i` involves only generator `i`, for `i < rank`. Generators
/// `rank..n` then occur in commutators only. Needs `m <= n - 1`.
///
/// A new generator keeps its old name when it is unchanged and is otherwise
/// primed.
pub fn normalize(p: &Presentation) -> Result<Normalization> {
    let (n, m) = (p.n(), p.m());
    if m + 1 > n {
        return Err(Error::TooManyRelators { n, m });
    }
    let f = p.field.clone();
    let diag = diagonalize(&abelianize(p))?;

    let mut rels = p.relators.clone();
    let mut history = p.history.clone();
    for op in &diag.row_ops {
        match &op.kind {
            OpKind::AddMultiple { target, source, multiplier } => {
                rels[*target] = Expr::sum(vec![rels[*target].clone(), apply_poly(multiplier, &rels[*source])]);
                history.push(HistoryEntry::Recombine { target: *target, source: *source, multiplier: multiplier.clone() });
            }
            OpKind::Swap { a, b } => {
                rels.swap(*a, *b);
                history.push(HistoryEntry::SwapRelators(*a, *b));
            }
            OpKind::Scale { target, factor } => {
                rels[*target] = Expr::sc(*factor, rels[*target].clone());
                history.push(HistoryEntry::ScaleRelator { target: *target, factor: *factor });
            }
        }
    }

    // Column operations: relator expressions are rewritten through the
    // inverse generator change; `defs` tracks the forward change.
    let mut defs: Vec<ExprRef> = (0..n).map(Expr::gen).collect();
    let mut names = p.generators.clone();
    let mut changed = vec![false; n];
    let minus_one = f.neg(Fq::ONE);
    for op in &diag.col_ops {
        debug_assert_eq!(op.side, OpSide::Col);
        let mut images: Vec<ExprRef> = (0..n).map(Expr::gen).collect();
        match &op.kind {
            // col_t += col_s h  <=>  z_s = x_s - h * x_t, x_s = z_s + h * z_t
            OpKind::AddMultiple { target, source, multiplier } => {
                images[*source] = Expr::sum(vec![Expr::gen(*source), apply_poly(multiplier, &Expr::gen(*target))]);
                let tail = apply_poly(&multiplier.scale_left(minus_one), &Expr::gen(*target));
                defs[*source] = Expr::sum(vec![defs[*source].clone(), expr::substitute(&tail, &defs)]);
                changed[*source] = true;
                history.push(HistoryEntry::Transform(GenTransform { target: *source, lambda: Fq::ONE, tail }));
            }
            // col_j c  <=>  x_j = c z_j
            OpKind::Scale { target, factor } => {
                images[*target] = Expr::sc(*factor, Expr::gen(*target));
                let lambda = f.inv(*factor)?;
                defs[*target] = Expr::sc(lambda, defs[*target].clone());
                changed[*target] = true;
                history.push(HistoryEntry::Transform(GenTransform { target: *target, lambda, tail: Expr::zero() }));
            }
            OpKind::Swap { a, b } => {
                images.swap(*a, *b);
                defs.swap(*a, *b);
                names.swap(*a, *b);
                changed.swap(*a, *b);
                history.push(HistoryEntry::SwapGenerators(*a, *b));
            }
        }
        rels = rels.iter().map(|r| expr::substitute(r, &images)).collect();
    }

    let defs: Vec<ExprRef> = defs.iter().map(|d| expr::simplify(d, &f)).collect();
    for (j, name) in names.iter_mut().enumerate() {
        if changed[j] && !matches!(&*defs[j], Expr::Gen(i) if p.generators[*i] == *name) {
            name.push('\'');
            while p.generators.contains(name) {
                name.push('\'');
            }
        }
    }
    let rels = canonical_forms(&f, &names, &rels);
    let presentation = Presentation { field: f.clone(), generators: names, relators: rels, history };
    let diagonal = abelianize(&presentation);
    if !diagonal.same_entries(&diag.diagonal) {
        return Err(Error::Invalid("normalized relators do not abelianize to the diagonal form".into()));
    }
    let omitted = presentation.generators[diag.rank..].to_vec();
    Ok(Normalization { presentation, omitted, definitions: defs, diagonal, rank: diag.rank })
}

/// Whether `old` and `new` define the same restricted ideal after pulling
/// the relators of `new` back along `definitions` (new generators written
/// in old ones), computed in the truncation at weight `n`.
pub fn ideals_agree(old: &Presentation, new: &Presentation, definitions: &[ExprRef], n: usize) -> Result<bool> {
    if definitions.len() != new.n() || old.n() != new.n() {
        return Err(Error::Invalid("generator counts differ".into()));
    }
    let alg = TruncatedFreeRLA::new(&old.field, old.generators.clone(), n, DEFAULT_CAP)?;
    let eval_all = |rels: Vec<ExprRef>| rels.iter().map(|r| alg.eval(r)).collect::<Result<Vec<_>>>();
    let before = eval_all(old.relators.clone())?;
    let after = eval_all(new.relators.iter().map(|r| expr::substitute(r, definitions)).collect())?;
    Ok(ideal_closure(&*alg, &before) == ideal_closure(&*alg, &after))
}

/// A free generator of an ideal, with its weight.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightedGenerator {
    pub name: String,
    pub weight: usize,
}

/// Free generators of the ideal `M_k` of the free restricted Lie algebra on
/// `a_1, ..., a_{r-1}, t` generated by the `a_i` and `t^{[p^k]}`: the
/// elements `a_{l,i} = (ad t)^l a_i` of weight `l + 1` for `l < p^k`, and
/// `t^{[p^k]}` of weight `p^k`. There are `(r - 1) p^k + 1` of them.
pub fn ideal_free_generators(r: usize, p: u32, k: u32) -> Result<Vec<WeightedGenerator>> {
    if r < 2 || k < 1 {
        return Err(Error::Invalid("need r >= 2 and k >= 1".into()));
    }
    let pk = (p as usize).checked_pow(k).filter(|&x| x.checked_mul(r).is_some()).ok_or(Error::ResourceBound {
        needed: u64::MAX,
        cap: DEFAULT_CAP as u64,
    })?;
    let mut out = Vec::with_capacity((r - 1) * pk + 1);
    for l in 0..pk {
        for i in 1..r {
            out.push(WeightedGenerator { name: format!("a_{{{l},{i}}}"), weight: l + 1 });
        }
    }
    out.push(WeightedGenerator { name: format!("t^[{pk}]"), weight: pk });
    Ok(out)
}

/// Graded dimensions of `M_k` computed by closure, against the free model.
#[derive(Clone, Debug, Serialize)]
pub struct KukinReport {
    pub r: usize,
    pub p: u32,
    pub k: u32,
    pub max_degree: usize,
    pub generator_count: usize,
    pub formula_count: usize,
    pub closure_dims: Vec<usize>,
    pub model_dims: Vec<u64>,
    pub agree: bool,
}

/// Builds the truncation at weight `n` on `a1, ..., a{r-1}, t`, closes
/// `{a_i, t^{[p^k]}}` to an ideal and compares its graded dimensions with
/// those of a free algebra on the weighted generators.
pub fn kukin_check(field: &FiniteField, r: usize, k: u32, n: usize) -> Result<KukinReport> {
    let p = field.characteristic();
    let gens = ideal_free_generators(r, p, k)?;
    let mut names: Vec<String> = (1..r).map(|i| format!("a{i}")).collect();
    names.push("t".into());
    let alg = TruncatedFreeRLA::new(field, names, n, DEFAULT_CAP)?;
    let mut seeds: Vec<Vec<Fq>> = (0..r - 1).map(|i| alg.generator(i).to_vec()).collect();
    seeds.push(alg.pmap_iter(alg.generator(r - 1), k));
    let ideal = ideal_closure(&*alg, &seeds);
    let closure_dims = ideal.graded_profile(alg.weights(), n);
    let weights: Vec<usize> = gens.iter().map(|g| g.weight).collect();
    let model_dims = weighted_free_dims(&weights, p as u64, n);
    let formula_count = (p as usize).pow(k) * (r - 1) + 1;
    let agree = gens.len() == formula_count && closure_dims.iter().zip(&model_dims).all(|(&a, &b)| a as u64 == b);
    Ok(KukinReport { r, p, k, max_degree: n, generator_count: gens.len(), formula_count, closure_dims, model_dims, agree })
}

/// An element of the ideal generated by the non-distinguished generators,
/// written in the symbols `a_{l,i} = (ad t)^l a_i`.
#[derive(Clone, Debug)]
pub struct IdealRewrite {
    pub expr: ExprRef,
    /// Names of the symbols `expr` refers to, by leaf index.
    pub symbols: Vec<String>,
    /// Least `q` such that only `a_{l,i}` with `l < p^q` are needed.
    pub q: u32,
}

impl IdealRewrite {
    pub fn format(&self, field: &FiniteField) -> String {
        expr::format_expr(&self.expr, field, &self.symbols)
    }
}

/// Finds the least `q` for which `w` lies in the restricted subalgebra
/// generated by the `a_{l,i}` with `l < p^q`, and an expression for `w` in
/// them. Errors with `NotInIdeal` if `w` is not in the ideal generated by
/// the generators other than `distinguished`.
pub fn rewrite_in_ideal_generators(alg: &Arc<TruncatedFreeRLA>, distinguished: usize, w: &[Fq]) -> Result<IdealRewrite> {
    let r = alg.rank();
    if distinguished >= r {
        return Err(Error::Invalid(format!("no generator with index {distinguished}")));
    }
    let others: Vec<usize> = (0..r).filter(|&i| i != distinguished).collect();
    let ideal = ideal_closure(&**alg, &others.iter().map(|&i| alg.generator(i).to_vec()).collect::<Vec<_>>());
    if !ideal.contains(w) {
        return Err(Error::NotInIdeal);
    }
    let t = alg.generator(distinguished).to_vec();
    let p = alg.field().characteristic() as usize;
    let n = alg.max_degree();
    let mut q = 0u32;
    loop {
        let bound = p.checked_pow(q).unwrap_or(usize::MAX);
        let mut gens = Vec::new();
        let mut symbols = Vec::new();
        for l in 0..bound.min(n) {
            for (pos, &i) in others.iter().enumerate() {
                symbols.push(format!("a_{{{l},{}}}", pos + 1));
                gens.push((alg.ad_pow(&t, l, alg.generator(i)), Expr::gen(gens.len())));
            }
        }
        if let Some(e) = TrackedClosure::subalgebra(&**alg, &gens).express(w) {
            return Ok(IdealRewrite { expr: e, symbols, q });
        }
        if bound >= n {
            return Err(Error::Invalid("element of the ideal not reached by its generators".into()));
        }
        q += 1;
    }
}

/// How `q` was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum QMode {
    Supplied,
    Computed,
}

/// Generator and relation counts for a finite-codimension ideal whose
/// presentation has more generators than relations.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct LargenessCertificate {
    pub n: usize,
    pub m: usize,
    pub p: u32,
    pub q: u32,
    pub k: u32,
    /// `(n - 1)(p^k - p^q)`
    pub generator_count: u128,
    /// `m p^k`
    pub relation_count: u128,
    /// `(n - m - 1) p^k - (n - 1) p^q`
    pub difference: i128,
    /// Whether `difference >= 2`.
    pub recursion_ready: bool,
    pub q_mode: QMode,
}

/// The least `k > q` with `(n - m - 1) p^k - (n - 1) p^q > 0`.
pub fn largeness_counts(n: usize, m: usize, p: u32, q: u32, q_mode: QMode) -> Result<LargenessCertificate> {
    if m + 2 > n {
        return Err(Error::HypothesisFailed { n, m });
    }
    let overflow = || Error::Invalid("counts overflow".into());
    let pq = (p as i128).checked_pow(q).ok_or_else(overflow)?;
    let (n_i, m_i) = (n as i128, m as i128);
    let mut k = q + 1;
    loop {
        let pk = (p as i128).checked_pow(k).ok_or_else(overflow)?;
        let difference = (n_i - m_i - 1).checked_mul(pk).and_then(|a| a.checked_sub((n_i - 1) * pq)).ok_or_else(overflow)?;
        if difference > 0 {
            let generator_count = ((n_i - 1) * (pk - pq)) as u128;
            let relation_count = (m_i * pk) as u128;
            debug_assert_eq!(generator_count as i128 - relation_count as i128, difference);
            return Ok(LargenessCertificate {
                n,
                m,
                p,
                q,
                k,
                generator_count,
                relation_count,
                difference,
                recursion_ready: difference >= 2,
                q_mode,
            });
        }
        k += 1;
    }
}

/// Certificate for a presentation with `m <= n - 2` and a given `q`.
pub fn bp_certificate(p: &Presentation, q: u32) -> Result<LargenessCertificate> {
    largeness_counts(p.n(), p.m(), p.field.characteristic(), q, QMode::Supplied)
}

/// Certificate with `q` computed: normalize, take the last omitted
/// generator as `t`, and rewrite every relator in the `a_{l,i}` inside the
/// truncation at weight `n_trunc`.
pub fn bp_certificate_computed(p: &Presentation, n_trunc: usize) -> Result<(LargenessCertificate, Vec<IdealRewrite>)> {
    if p.m() + 2 > p.n() {
        return Err(Error::HypothesisFailed { n: p.n(), m: p.m() });
    }
    let norm = normalize(p)?;
    let np = &norm.presentation;
    let alg = TruncatedFreeRLA::new(&np.field, np.generators.clone(), n_trunc, DEFAULT_CAP)?;
    let t = np.n() - 1;
    let mut rewrites = Vec::new();
    for r in &np.relators {
        rewrites.push(rewrite_in_ideal_generators(&alg, t, &alg.eval(r)?)?);
    }
    let q = rewrites.iter().map(|r| r.q).max().unwrap_or(0);
    let cert = largeness_counts(p.n(), p.m(), p.field.characteristic(), q, QMode::Computed)?;
    Ok((cert, rewrites))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freerla::build_algebra;

    fn f2() -> FiniteField {
        FiniteField::prime(2).unwrap()
    }

    #[test]
    fn transforms() {
        let p = Presentation::parse(&f2(), &["x", "y"], &["y"]).unwrap();
        let t = GenTransform { target: 1, lambda: Fq::ONE, tail: Expr::pp(Expr::gen(0), 1) };
        let q = apply_transform(&p, &t).unwrap();
        assert_eq!(q.relator_strings(), vec!["(sum y (pp x 1))"]);
        assert!(ideals_agree(&p, &q, &transform_definitions(2, &t), 6).unwrap());
        let same = apply_transform(&p, &GenTransform::identity(0)).unwrap();
        assert_eq!(same.relators(), p.relators());

        let bad = GenTransform { target: 1, lambda: Fq::ONE, tail: Expr::gen(1) };
        assert!(matches!(apply_transform(&p, &bad), Err(Error::MalformedTransform(_))));
        let bad = GenTransform { target: 1, lambda: Fq::ONE, tail: Expr::br(Expr::gen(0), Expr::gen(0)) };
        assert!(matches!(apply_transform(&p, &bad), Err(Error::MalformedTransform(_))));

        let jac = Presentation::parse(&f2(), &["x", "y"], &["(sum (pp x 1) (pp y 1) (br x y))"]).unwrap();
        let t = GenTransform { target: 1, lambda: Fq::ONE, tail: Expr::gen(0) };
        assert_eq!(apply_transform(&jac, &t).unwrap().relator_strings(), vec!["(pp y 1)"]);
    }

    #[test]
    fn abelianization() {
        let f4 = FiniteField::parse("gf(4; 1,1,1)").unwrap();
        let p = Presentation::parse(&f4, &["x", "y"], &["(sum (pp x 1) (pp y 1) (br x y))", "(br x y)", "(sc [0,1] x)"]).unwrap();
        let m = abelianize(&p);
        assert_eq!(m.to_strings()[0], vec!["t", "t"]);
        assert!(m.entry(1, 0).is_zero() && m.entry(1, 1).is_zero());
        assert_eq!(m.entry(2, 0), &OrePoly::constant(&f4, f4.element(&[0, 1]).unwrap()));
        // semilinearity: (a x)^[2] abelianizes to t a = a^2 t
        let q = Presentation::parse(&f4, &["x"], &["(pp (sc [0,1] x) 1)"]).unwrap();
        assert_eq!(abelianize(&q).entry(0, 0), &OrePoly::monomial(&f4, f4.element(&[1, 1]).unwrap(), 1));
    }

    #[test]
    fn normalize_examples() {
        let p = Presentation::parse(&f2(), &["x", "y"], &["(sum (pp x 1) (pp y 1) (br x y))"]).unwrap();
        let out = normalize(&p).unwrap();
        assert_eq!(out.presentation.generators(), &["x'", "y"]);
        assert_eq!(out.presentation.relator_strings(), vec!["(pp x' 1)"]);
        assert_eq!(out.omitted, vec!["y"]);
        assert_eq!(expr::format_expr(&out.definitions[0], &f2(), p.generators()), "(sum x y)");
        assert!(ideals_agree(&p, &out.presentation, &out.definitions, 6).unwrap());

        let p = Presentation::parse(&f2(), &["x", "y"], &["(br x y)"]).unwrap();
        let out = normalize(&p).unwrap();
        assert_eq!(out.presentation.relators(), p.relators());
        assert_eq!(out.omitted, vec!["x", "y"]);

        let p = Presentation::parse(&f2(), &["x", "y", "z"], &["(pp x 1)"]).unwrap();
        let out = normalize(&p).unwrap();
        assert_eq!(out.presentation.relator_strings(), vec!["(pp x 1)"]);
        assert_eq!(out.omitted, vec!["y", "z"]);

        let p = Presentation::parse(&f2(), &["x"], &["x"]).unwrap();
        assert_eq!(normalize(&p).unwrap_err(), Error::TooManyRelators { n: 1, m: 1 });
    }

    #[test]
    fn kukin_counts() {
        assert_eq!(ideal_free_generators(2, 2, 1).unwrap().len(), 3);
        assert_eq!(ideal_free_generators(3, 2, 1).unwrap().len(), 5);
        assert_eq!(ideal_free_generators(2, 3, 2).unwrap().len(), 10);
        let names: Vec<String> = ideal_free_generators(2, 2, 1).unwrap().into_iter().map(|g| g.name).collect();
        assert_eq!(names, vec!["a_{0,1}", "a_{1,1}", "t^[2]"]);
        let rep = kukin_check(&f2(), 2, 1, 6).unwrap();
        assert!(rep.agree, "{rep:?}");
    }

    #[test]
    fn rewriting() {
        let a = build_algebra(&f2(), &["a", "t"], 6).unwrap();
        let cases = [("a", 0), ("(br t (br t a))", 2), ("(br a (br t a))", 1), ("(pp (br t a) 1)", 1)];
        for (text, q) in cases {
            let w = a.parse_vector(text).unwrap();
            let rw = rewrite_in_ideal_generators(&a, 1, &w).unwrap();
            assert_eq!(rw.q, q, "{text}");
            let leaves: Vec<Vec<Fq>> = (0..rw.symbols.len()).map(|j| a.ad_pow(a.generator(1), j, a.generator(0))).collect();
            assert_eq!(expr::eval(&rw.expr, &*a, &leaves).unwrap(), w);
        }
        let rw = rewrite_in_ideal_generators(&a, 1, &a.parse_vector("(br t (br t a))").unwrap()).unwrap();
        assert_eq!(rw.format(&f2()), "a_{2,1}");
        let t = a.generator(1).to_vec();
        assert_eq!(rewrite_in_ideal_generators(&a, 1, &t).unwrap_err(), Error::NotInIdeal);
    }

    #[test]
    fn certificates() {
        let c = largeness_counts(3, 1, 2, 0, QMode::Supplied).unwrap();
        assert_eq!((c.k, c.generator_count, c.relation_count, c.difference), (2, 6, 4, 2));
        assert!(c.recursion_ready);
        let c = largeness_counts(4, 2, 2, 0, QMode::Supplied).unwrap();
        assert_eq!((c.k, c.difference), (2, 1));
        let c = largeness_counts(2, 0, 3, 0, QMode::Supplied).unwrap();
        assert_eq!((c.k, c.difference), (1, 2));
        assert_eq!(largeness_counts(3, 2, 2, 0, QMode::Supplied).unwrap_err(), Error::HypothesisFailed { n: 3, m: 2 });

        let p = Presentation::parse(&f2(), &["x", "y", "z"], &["(sum (pp x 1) (br y z))"]).unwrap();
        let (c, rw) = bp_certificate_computed(&p, 6).unwrap();
        assert_eq!(c.q_mode, QMode::Computed);
        assert_eq!(rw.len(), 1);
        assert_eq!(c.q, rw[0].q);
    }
}
