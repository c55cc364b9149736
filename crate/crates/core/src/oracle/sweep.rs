//! Exhaustive sweep over every binomial `x^(q^r) + a·x` of small fields,
//! cross-checking every route against the brute-force oracle.

use std::fmt;
use std::sync::Arc;

use num_integer::Integer;
use rayon::prelude::*;

use super::{Oracle, CAPACITY_CAP};
use crate::binomial::{geometric_power, lift_with, unit_shift_cofactors, BinomialSpec, Corollary};
use crate::error::{Error, Result};
use crate::ffield::{poly::is_prime, Embedding, FieldCtx, FieldElem};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepConfig {
    pub max_field_order: u64,
    pub primes: Vec<u64>,
    pub max_n: usize,
    pub max_e: usize,
    pub max_t: usize,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self { max_field_order: 729, primes: vec![2, 3, 5], max_n: 64, max_e: 64, max_t: 64 }
    }
}

impl SweepConfig {
    pub fn validate(&self) -> Result<()> {
        if self.max_field_order == 0 || self.max_field_order > CAPACITY_CAP {
            return Err(Error::InvalidParameter(format!("max field order must lie in [1, {CAPACITY_CAP}]")));
        }
        if self.max_n == 0 || self.max_e == 0 || self.max_t == 0 {
            return Err(Error::InvalidParameter("structural bounds must be at least 1".into()));
        }
        if let Some(&p) = self.primes.iter().find(|&&p| !is_prime(p)) {
            return Err(Error::NotPrime(p));
        }
        Ok(())
    }
}

/// Which cross-check failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Check {
    Criterion,
    Composition,
    Pointwise,
    DicksonAgreement,
    SpecialAgreement(CorollaryTag),
    Cofactors,
    GeometricNorm,
    Lift,
}

/// Orderable mirror of [`Corollary`] for failure reports.
pub type CorollaryTag = u8;

fn corollary_tag(c: Corollary) -> CorollaryTag {
    match c {
        Corollary::UnitShift => 1,
        Corollary::Coprime => 2,
        Corollary::HalfDegree => 3,
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Check::Criterion => f.write_str("criterion"),
            Check::Composition => f.write_str("composition"),
            Check::Pointwise => f.write_str("pointwise"),
            Check::DicksonAgreement => f.write_str("dickson-agreement"),
            Check::SpecialAgreement(2) => f.write_str("special-agreement-coprime"),
            Check::SpecialAgreement(3) => f.write_str("special-agreement-half-degree"),
            Check::SpecialAgreement(_) => f.write_str("special-agreement-unit-shift"),
            Check::Cofactors => f.write_str("cofactors"),
            Check::GeometricNorm => f.write_str("geometric-norm"),
            Check::Lift => f.write_str("lift"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub p: u64,
    pub e: usize,
    pub n: usize,
    pub r: usize,
    pub a: u64,
    pub t: Option<usize>,
    pub check: Check,
    pub detail: String,
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p={} e={} n={} r={} a={}", self.p, self.e, self.n, self.r, self.a)?;
        if let Some(t) = self.t {
            write!(f, " t={t}")?;
        }
        write!(f, " check={} detail={}", self.check, self.detail)
    }
}

/// Per-`(p, e, n, r)` counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShapeStats {
    pub p: u64,
    pub e: usize,
    pub n: usize,
    pub r: usize,
    pub cases: usize,
    pub permutations: usize,
    /// Encodings of `a` for which the binomial permutes the field.
    pub permuting: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SweepReport {
    pub cases: usize,
    pub permutations: usize,
    pub lift_cases: usize,
    pub shapes: Vec<ShapeStats>,
    pub failures: Vec<Failure>,
}

impl SweepReport {
    pub fn is_clean(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for SweepReport {
    /// One line per failure followed by the summary line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for failure in &self.failures {
            writeln!(f, "failure: {failure}")?;
        }
        write!(
            f,
            "cases: {} permutations: {} lift_cases: {} failures: {}",
            self.cases,
            self.permutations,
            self.lift_cases,
            self.failures.len()
        )
    }
}

struct LiftTarget {
    t: usize,
    embedding: Embedding,
}

#[derive(Default)]
struct CaseOutcome {
    permutation: bool,
    lift_cases: usize,
    failures: Vec<Failure>,
}

struct Case<'a> {
    oracle: &'a Oracle,
    spec: BinomialSpec,
    a_enc: u64,
    out: CaseOutcome,
}

impl Case<'_> {
    fn fail(&mut self, check: Check, t: Option<usize>, detail: impl Into<String>) {
        let ctx = self.spec.ctx();
        self.out.failures.push(Failure {
            p: ctx.p(),
            e: ctx.e(),
            n: ctx.n(),
            r: self.spec.r(),
            a: self.a_enc,
            t,
            check,
            detail: detail.into(),
        });
    }

    fn expect(&mut self, check: Check, t: Option<usize>, result: Result<bool>) {
        match result {
            Ok(true) => {}
            Ok(false) => self.fail(check, t, "mismatch"),
            Err(e) => self.fail(check, t, e.to_string()),
        }
    }

    fn run(mut self, lifts: &[LiftTarget]) -> CaseOutcome {
        let l = self.spec.poly();
        let by_criterion = self.spec.is_permutation();
        let by_dickson = l.is_permutation_dickson();
        let brute = match self.oracle.brute_is_permutation(&l) {
            Ok(b) => b,
            Err(e) => {
                self.fail(Check::Criterion, None, e.to_string());
                return self.out;
            }
        };
        if by_criterion != by_dickson || by_dickson != brute {
            self.fail(
                Check::Criterion,
                None,
                format!("criterion={by_criterion} dickson={by_dickson} brute={brute}"),
            );
        }
        self.out.permutation = brute;

        let a = self.spec.a().clone();
        if !a.is_zero() {
            let r = self.spec.r();
            let d = self.spec.d();
            let ok =
                geometric_power(&a, r, self.spec.n() / d - 1).and_then(|g| a.norm_rel(d).map(|nrm| g == nrm));
            self.expect(Check::GeometricNorm, None, ok);
            if r == 1 {
                let ok = self.cofactors_hold(&l);
                self.expect(Check::Cofactors, None, ok);
            }
        }

        if brute {
            self.check_inverses(&l);
            for target in lifts {
                self.check_lift(&l, target);
            }
        }
        self.out
    }

    fn cofactors_hold(&self, l: &crate::linpoly::LinearizedPoly) -> Result<bool> {
        let a = self.spec.a();
        let ctx = a.ctx();
        let n = ctx.n();
        let closed = unit_shift_cofactors(a)?;
        let generic = l.cofactors();
        let det_form = a.norm_rel(1)? + ctx.sign(n - 1);
        let det_expansion = a * &generic.values[0] + &generic.values[n - 1];
        Ok(closed == generic && generic.det == det_form && det_expansion == det_form)
    }

    fn check_inverses(&mut self, l: &crate::linpoly::LinearizedPoly) {
        let inverse = match self.spec.inverse() {
            Ok(m) => m,
            Err(e) => {
                self.fail(Check::Composition, None, e.to_string());
                return;
            }
        };
        let composed = l
            .compose(&inverse)
            .and_then(|lm| inverse.compose(l).map(|ml| lm.is_identity() && ml.is_identity()));
        self.expect(Check::Composition, None, composed);

        let pointwise = self
            .oracle
            .verify_inverse(l, &inverse)
            .and_then(|ok| Ok(ok && self.oracle.matches_table(l, &inverse)?));
        self.expect(Check::Pointwise, None, pointwise);

        let dickson = l.inverse_dickson().map(|m| m == inverse);
        self.expect(Check::DicksonAgreement, None, dickson);

        for shape in self.spec.corollaries() {
            let special = shape.inverse(&self.spec).map(|m| m == inverse);
            self.expect(Check::SpecialAgreement(corollary_tag(shape)), None, special);
        }
    }

    fn check_lift(&mut self, l: &crate::linpoly::LinearizedPoly, target: &LiftTarget) {
        self.out.lift_cases += 1;
        let t = Some(target.t);
        let lifted = match lift_with(l, target.t, &target.embedding) {
            Ok(lifted) => lifted,
            Err(e) => {
                self.fail(Check::Lift, t, e.to_string());
                return;
            }
        };
        match self.oracle.brute_is_permutation(&lifted) {
            Ok(true) => {}
            Ok(false) => self.fail(Check::Lift, t, "lifted polynomial does not permute"),
            Err(e) => self.fail(Check::Lift, t, e.to_string()),
        }
        let small = l.ctx();
        let agrees = small.elements().map(|mut xs| {
            xs.all(|x| {
                let lhs = target.embedding.apply(&x).and_then(|ex| lifted.eval(&ex));
                let rhs = l.eval(&x).and_then(|y| target.embedding.apply(&y));
                matches!((lhs, rhs), (Ok(u), Ok(v)) if u == v)
            })
        });
        match agrees {
            Ok(true) => {}
            Ok(false) => self.fail(Check::Lift, t, "disagrees with the original on the subfield"),
            Err(e) => self.fail(Check::Lift, t, e.to_string()),
        }
    }
}

fn field_order(p: u64, m: usize) -> Option<u64> {
    p.checked_pow(u32::try_from(m).ok()?)
}

/// Runs every cross-check on every binomial within the configured bounds,
/// in lexicographic `(p, e, n, r, enc(a))` order. Failures are collected,
/// never raised.
pub fn sweep(cfg: &SweepConfig) -> Result<SweepReport> {
    cfg.validate()?;
    let oracle = Oracle::new(cfg.max_field_order)?;
    let fits = |p: u64, m: usize| field_order(p, m).is_some_and(|o| o <= cfg.max_field_order);

    let mut primes = cfg.primes.clone();
    primes.sort_unstable();
    primes.dedup();

    let mut report = SweepReport::default();
    for p in primes {
        for e in (1..=cfg.max_e).take_while(|&e| fits(p, e)) {
            for n in (2..=cfg.max_n).take_while(|&n| fits(p, e * n)) {
                let ctx = FieldCtx::new(p, e, n)?;
                let lifts = lift_targets(&ctx, cfg, &fits)?;
                for r in 1..n {
                    sweep_shape(&oracle, &ctx, r, &lifts, &mut report)?;
                }
            }
        }
    }
    Ok(report)
}

fn lift_targets(
    ctx: &Arc<FieldCtx>,
    cfg: &SweepConfig,
    fits: &dyn Fn(u64, usize) -> bool,
) -> Result<Vec<LiftTarget>> {
    let (p, e, n) = (ctx.p(), ctx.e(), ctx.n());
    let mut out = Vec::new();
    for t in (1..=cfg.max_t).take_while(|&t| fits(p, e * n * t)) {
        if t.gcd(&n) != 1 {
            continue;
        }
        let big = FieldCtx::new(p, e * t, n)?;
        out.push(LiftTarget { t, embedding: Embedding::new(ctx, &big)? });
    }
    Ok(out)
}

fn sweep_shape(
    oracle: &Oracle,
    ctx: &Arc<FieldCtx>,
    r: usize,
    lifts: &[LiftTarget],
    report: &mut SweepReport,
) -> Result<()> {
    let order = ctx.order_u64().expect("bounded by capacity");
    let outcomes: Vec<CaseOutcome> = (0..order)
        .into_par_iter()
        .map(|enc| {
            let a: FieldElem = ctx.from_u64(enc).expect("in range");
            let spec = BinomialSpec::new(a, r).expect("1 <= r < n");
            Case { oracle, spec, a_enc: enc, out: CaseOutcome::default() }.run(lifts)
        })
        .collect();

    let mut stats = ShapeStats {
        p: ctx.p(),
        e: ctx.e(),
        n: ctx.n(),
        r,
        cases: outcomes.len(),
        permutations: 0,
        permuting: Vec::new(),
    };
    for (enc, outcome) in outcomes.into_iter().enumerate() {
        if outcome.permutation {
            stats.permutations += 1;
            stats.permuting.push(enc as u64);
        }
        report.lift_cases += outcome.lift_cases;
        report.failures.extend(outcome.failures);
    }
    report.cases += stats.cases;
    report.permutations += stats.permutations;
    report.shapes.push(stats);
    Ok(())
}
