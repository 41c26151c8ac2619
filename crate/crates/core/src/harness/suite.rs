use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::diffop::{dop_eq, dop_mul, DiffOp};
use crate::phi::{
    cartan_relation_sides, phi_gen, phi_residue, relation_lhs, relation_rhs, CartanRelation, CoulombContext,
};
use crate::quiver::{chi_inequality_sides, i_partitions, partition_greater, DimVector, Quiver, QuiverError};
use crate::ring::{Alphabet, LaurentPoly, Monomial, RationalFn, Var};
use crate::shuffle::{
    gen_e, is_integral, psym_blocks, psym_closed_product, psym_factored_product, psym_product, shuffle_mul,
    shuffle_mul_bar, spec_p, xi, z, Generator, Integrality, ShuffleElement, Side,
};

use super::random::{nonzero_dims, Sampler};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Hom,
    Wheel,
    Commutator,
    Cartan,
    Chi,
    Xi,
    Psym,
    PhiConsistency,
    RingAxioms,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Hom,
        Suite::Wheel,
        Suite::Commutator,
        Suite::Cartan,
        Suite::Chi,
        Suite::Xi,
        Suite::Psym,
        Suite::PhiConsistency,
        Suite::RingAxioms,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Hom => "hom",
            Suite::Wheel => "wheel",
            Suite::Commutator => "commutator",
            Suite::Cartan => "cartan",
            Suite::Chi => "chi",
            Suite::Xi => "xi",
            Suite::Psym => "psym",
            Suite::PhiConsistency => "phi-consistency",
            Suite::RingAxioms => "ring-axioms",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = ConfigError;

    fn from_str(s: &str) -> Result<Suite, ConfigError> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| ConfigError::UnknownSuite(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConfigError {
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
    #[error(transparent)]
    Quiver(#[from] QuiverError),
    #[error("invalid configuration: {0}")]
    Invalid(String),
}

/// Everything a suite run depends on. Equal configurations give equal
/// case lists and equal reports apart from the wall time.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    pub suite: Suite,
    /// Builtin fixture name or configuration file path.
    pub quiver_source: String,
    pub quiver: Quiver,
    /// Dimension vector of the difference-operator side.
    pub d: DimVector,
    /// Bound on the total horizontal degree of a sampled element.
    pub max_hdeg: u32,
    /// Exponent window for sampled monomials and for `k, l` grids.
    pub vdeg: (i32, i32),
    pub seed: u64,
    pub coeff_bound: i64,
    /// Number of sampled cases for the randomized suites.
    pub cases: usize,
    /// Adds a deliberately false case that is reported as an ordinary failure.
    pub inject_fault: bool,
}

impl SuiteConfig {
    pub fn new(suite: Suite, quiver_source: &str) -> Result<SuiteConfig, ConfigError> {
        let quiver = Quiver::load(quiver_source)?;
        Ok(SuiteConfig::with_quiver(suite, quiver_source, quiver))
    }

    /// Defaults: `d = (1, …, 1)`, hdeg ≤ 2, exponents in `[-1, 1]`, seed 0,
    /// coefficients in `[-3, 3]`, 10 cases.
    pub fn with_quiver(suite: Suite, source: &str, quiver: Quiver) -> SuiteConfig {
        SuiteConfig {
            suite,
            quiver_source: source.to_string(),
            d: vec![1; quiver.num_vertices()],
            quiver,
            max_hdeg: 2,
            vdeg: (-1, 1),
            seed: 0,
            coeff_bound: 3,
            cases: 10,
            inject_fault: false,
        }
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        let bad = |m: &str| Err(ConfigError::Invalid(m.to_string()));
        if self.d.len() != self.quiver.num_vertices() {
            return bad("dimension vector length differs from the vertex count");
        }
        if self.max_hdeg == 0 || self.cases == 0 || self.coeff_bound <= 0 {
            return bad("bounds must be positive");
        }
        if self.vdeg.0 > self.vdeg.1 {
            return bad("empty exponent window");
        }
        Ok(())
    }

    fn ctx(&self) -> CoulombContext {
        CoulombContext::new(&self.quiver, self.d.clone()).expect("validated shape")
    }

    /// The context with `d` raised to at least one at the first vertex, so
    /// that controls have nonzero images.
    fn control_ctx(&self) -> CoulombContext {
        let mut d = self.d.clone();
        d[0] = d[0].max(1);
        CoulombContext::new(&self.quiver, d).expect("validated shape")
    }

    fn window(&self) -> i32 {
        self.vdeg.0.abs().max(self.vdeg.1.abs())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub case: String,
    /// Counterexample in canonical print.
    pub witness: String,
}

#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub suite: Suite,
    pub quiver: String,
    pub seed: u64,
    pub cases: usize,
    pub passed: usize,
    pub failures: Vec<Failure>,
    pub wall_time: Duration,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// The report without the wall time.
    pub fn canonical(&self) -> String {
        let mut s = format!(
            "suite {}\nquiver {}\nseed {}\ncases {}\npassed {}\nfailed {}\n",
            self.suite,
            self.quiver,
            self.seed,
            self.cases,
            self.passed,
            self.failures.len()
        );
        for f in &self.failures {
            s.push_str(&format!("FAIL {}\n", f.case));
            for line in f.witness.lines() {
                s.push_str(&format!("  {line}\n"));
            }
        }
        s
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}wall_time {:.3}s", self.canonical(), self.wall_time.as_secs_f64())
    }
}

type Check = Box<dyn Fn() -> Result<(), String> + Send + Sync>;

/// One verification case. A control is a falsified statement: it passes when
/// the check fails.
pub struct Case {
    pub label: String,
    pub control: bool,
    check: Check,
}

impl Case {
    fn new(label: impl Into<String>, check: impl Fn() -> Result<(), String> + Send + Sync + 'static) -> Case {
        Case {
            label: label.into(),
            control: false,
            check: Box::new(check),
        }
    }

    fn control(label: impl Into<String>, check: impl Fn() -> Result<(), String> + Send + Sync + 'static) -> Case {
        Case {
            label: format!("control: {}", label.into()),
            control: true,
            check: Box::new(check),
        }
    }

    pub fn run(&self) -> Option<Failure> {
        match ((self.check)(), self.control) {
            (Ok(()), false) | (Err(_), true) => None,
            (Err(witness), false) => Some(Failure {
                case: self.label.clone(),
                witness,
            }),
            (Ok(()), true) => Some(Failure {
                case: self.label.clone(),
                witness: "falsified statement was not detected".into(),
            }),
        }
    }
}

/// Worker count from `QSHUFFLE_THREADS`; absent or unparsable means one.
pub fn worker_count() -> usize {
    std::env::var("QSHUFFLE_THREADS")
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&n| n > 0)
        .unwrap_or(1)
}

/// The case list of a configuration, controls included.
pub fn suite_cases(cfg: &SuiteConfig) -> Result<Vec<Case>, ConfigError> {
    cfg.validate()?;
    Ok(match cfg.suite {
        Suite::Hom => hom_cases(cfg),
        Suite::Wheel => wheel_cases(cfg),
        Suite::Commutator => commutator_cases(cfg),
        Suite::Cartan => cartan_cases(cfg),
        Suite::Chi => chi_cases(cfg),
        Suite::Xi => xi_cases(cfg),
        Suite::Psym => psym_cases(cfg),
        Suite::PhiConsistency => phi_consistency_cases(cfg),
        Suite::RingAxioms => ring_cases(cfg),
    })
}

pub fn run_suite(cfg: &SuiteConfig) -> Result<VerificationReport, ConfigError> {
    let start = Instant::now();
    let cases = suite_cases(cfg)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(worker_count())
        .build()
        .map_err(|e| ConfigError::Invalid(e.to_string()))?;
    let failures: Vec<Failure> = pool.install(|| cases.par_iter().filter_map(Case::run).collect());
    Ok(VerificationReport {
        suite: cfg.suite,
        quiver: cfg.quiver_source.clone(),
        seed: cfg.seed,
        cases: cases.len(),
        passed: cases.len() - failures.len(),
        failures,
        wall_time: start.elapsed(),
    })
}

fn dop_check(lhs: &DiffOp, rhs: &DiffOp, alphabet: &Alphabet) -> Result<(), String> {
    if dop_eq(lhs, rhs) {
        Ok(())
    } else {
        Err(format!("lhs - rhs = {}", lhs.sub(rhs).write(alphabet)))
    }
}

fn rat_check(lhs: &RationalFn, rhs: &RationalFn, alphabet: &Alphabet) -> Result<(), String> {
    if lhs.rat_eq(rhs) {
        Ok(())
    } else {
        Err(format!("lhs - rhs = {}", lhs.sub(rhs).reduced().write(alphabet)))
    }
}

fn poly_check(lhs: &LaurentPoly, rhs: &LaurentPoly, alphabet: &Alphabet) -> Result<(), String> {
    if lhs == rhs {
        Ok(())
    } else {
        Err(format!("lhs - rhs = {}", (lhs - rhs).write(alphabet)))
    }
}

fn q_poly() -> LaurentPoly {
    LaurentPoly::var(Var::q())
}

fn side_of(idx: usize) -> Side {
    if idx % 2 == 0 {
        Side::Plus
    } else {
        Side::Minus
    }
}

fn unit(nv: usize, i: usize) -> DimVector {
    let mut n = vec![0; nv];
    n[i] = 1;
    n
}

fn control_pair(q: &Quiver) -> (ShuffleElement, ShuffleElement) {
    let n = unit(q.num_vertices(), 0);
    (
        gen_e(q, n.clone(), LaurentPoly::one()).expect("symmetric"),
        gen_e(q, n, LaurentPoly::var(z(0, 1))).expect("symmetric"),
    )
}

fn hom_check(ctx: &CoulombContext, e: &ShuffleElement, f: &ShuffleElement, scale: &LaurentPoly) -> Result<(), String> {
    let q = ctx.quiver();
    let alphabet = q.alphabet();
    let prod = shuffle_mul(q, e, f).map_err(|x| x.to_string())?;
    let lhs = phi_residue(ctx, &prod).map_err(|x| x.to_string())?;
    let pe = phi_residue(ctx, e).map_err(|x| x.to_string())?;
    let pf = phi_residue(ctx, f).map_err(|x| x.to_string())?;
    dop_check(&lhs, &dop_mul(&pe, &pf).scale_poly(scale), &alphabet)
}

fn hom_cases(cfg: &SuiteConfig) -> Vec<Case> {
    let mut out = Vec::new();
    for idx in 0..cfg.cases {
        let side = side_of(idx);
        let mut s = Sampler::for_case(cfg, idx as u64);
        let e = s.product(&cfg.quiver, side, 2, cfg.max_hdeg);
        let f = s.product(&cfg.quiver, side, 2, cfg.max_hdeg);
        let ctx = cfg.ctx();
        let label = format!("#{idx} side {side} hdeg {:?} * {:?}", e.hdeg(), f.hdeg());
        out.push(Case::new(label, move || hom_check(&ctx, &e, &f, &LaurentPoly::one())));
    }
    let ctx = cfg.control_ctx();
    let (e, f) = control_pair(&cfg.quiver);
    out.push(Case::control("product image scaled by q", move || hom_check(&ctx, &e, &f, &q_poly())));
    out
}

fn wheel_check(q: &Quiver, e: &ShuffleElement) -> Result<(), String> {
    match is_integral(q, e) {
        Integrality::Pass => Ok(()),
        Integrality::Fail(c) => Err(c.write(&q.alphabet())),
    }
}

fn wheel_cases(cfg: &SuiteConfig) -> Vec<Case> {
    let mut out = Vec::new();
    for idx in 0..cfg.cases {
        let mut s = Sampler::for_case(cfg, idx as u64);
        let e = s.product(&cfg.quiver, Side::Plus, 3, cfg.max_hdeg);
        let q = cfg.quiver.clone();
        out.push(Case::new(format!("#{idx} hdeg {:?}", e.hdeg()), move || wheel_check(&q, &e)));
    }
    let n = unit(cfg.quiver.num_vertices(), 0);
    let one = ShuffleElement::new(&cfg.quiver, Side::Plus, n.clone(), LaurentPoly::one()).expect("constant");
    let (q, e) = (cfg.quiver.clone(), one.clone());
    out.push(Case::control(format!("constant 1 at hdeg {n:?}"), move || wheel_check(&q, &e)));
    if cfg.inject_fault {
        let q = cfg.quiver.clone();
        out.push(Case::new(format!("injected: constant 1 at hdeg {n:?}"), move || wheel_check(&q, &one)));
    }
    out
}

fn commutator_cases(cfg: &SuiteConfig) -> Vec<Case> {
    let mut out = Vec::new();
    let nv = cfg.quiver.num_vertices();
    let w = cfg.window();
    let alphabet = cfg.quiver.alphabet();
    for i in 0..nv {
        for j in 0..nv {
            for k in -w..=w {
                for l in -w..=w {
                    let ctx = cfg.ctx();
                    let (vi, vj) = (alphabet.vertex_name(i), alphabet.vertex_name(j));
                    out.push(Case::new(format!("i={vi} j={vj} k={k} l={l}"), move || {
                        let lhs = relation_lhs(&ctx, i, j, k, l).map_err(|x| x.to_string())?;
                        let rhs = relation_rhs(&ctx, i, j, k as i64, l as i64).map_err(|x| x.to_string())?;
                        dop_check(&lhs, &rhs, &ctx.quiver().alphabet())
                    }));
                }
            }
        }
    }
    let ctx = cfg.control_ctx();
    out.push(Case::control("first vertex, k=l=0, with one added", move || {
        let lhs = relation_lhs(&ctx, 0, 0, 0, 0).map_err(|x| x.to_string())?;
        let rhs = relation_rhs(&ctx, 0, 0, 0, 0).map_err(|x| x.to_string())?;
        dop_check(&lhs, &rhs.add(&DiffOp::one()), &ctx.quiver().alphabet())
    }));
    out
}

fn cartan_check(ctx: &CoulombContext, rel: CartanRelation, e: &ShuffleElement, ks: &[i32]) -> Result<(), String> {
    let alphabet = ctx.quiver().alphabet();
    for i in 0..ctx.quiver().num_vertices() {
        for &k in ks {
            let (lhs, rhs) = cartan_relation_sides(ctx, rel, e, i, k).map_err(|x| x.to_string())?;
            dop_check(&lhs, &rhs, &alphabet).map_err(|w| format!("vertex {} k={k}\n{w}", alphabet.vertex_name(i)))?;
        }
    }
    Ok(())
}

fn cartan_cases(cfg: &SuiteConfig) -> Vec<Case> {
    let mut out = Vec::new();
    let w = cfg.window().max(1);
    for idx in 0..cfg.cases {
        let side = side_of(idx);
        let mut s = Sampler::for_case(cfg, idx as u64);
        let e = s.generator(&cfg.quiver, side, cfg.max_hdeg);
        for rel in CartanRelation::ALL {
            if rel.side().is_some_and(|x| x != side) {
                continue;
            }
            let ks: Vec<i32> = match rel {
                CartanRelation::CCentral | CartanRelation::PE | CartanRelation::PF => {
                    (-w..=w).filter(|&k| k != 0).collect()
                }
                _ => vec![0],
            };
            let ctx = cfg.ctx();
            let e = e.clone();
            let label = format!("#{idx} {} hdeg {:?}", rel.label(), e.hdeg());
            out.push(Case::new(label, move || cartan_check(&ctx, rel, &e, &ks)));
        }
    }
    let ctx = cfg.control_ctx();
    let (e, _) = control_pair(&cfg.quiver);
    out.push(Case::control("kappa+ relation scaled by q", move || {
        let (lhs, rhs) = cartan_relation_sides(&ctx, CartanRelation::KappaPlusE, &e, 0, 0).map_err(|x| x.to_string())?;
        dop_check(&lhs, &rhs.scale_poly(&q_poly()), &ctx.quiver().alphabet())
    }));
    out
}

fn chi_cases(_cfg: &SuiteConfig) -> Vec<Case> {
    let mut out = Vec::new();
    for k in 0..=5u32 {
        for k2 in 0..=5u32 {
            for l in 0..=k {
                for l2 in 0..=k2 {
                    for c in -6..=6i64 {
                        out.push(Case::new(format!("k={k} k'={k2} l={l} l'={l2} c={c}"), move || {
                            let (lhs, rhs) = chi_inequality_sides(k, k2, l, l2, c).map_err(|x| x.to_string())?;
                            if lhs <= rhs && rhs - lhs <= 1 {
                                Ok(())
                            } else {
                                Err(format!("lhs {lhs} rhs {rhs}"))
                            }
                        }));
                    }
                }
            }
        }
    }
    out.push(Case::control("strict inequality at k=k'=1 l=l'=0 c=1", || {
        let (lhs, rhs) = chi_inequality_sides(1, 1, 0, 0, 1).map_err(|x| x.to_string())?;
        if lhs < rhs {
            Ok(())
        } else {
            Err(format!("lhs {lhs} rhs {rhs}"))
        }
    }));
    out
}

fn xi_check(q: &Quiver, e: &ShuffleElement, f: &ShuffleElement, scale: &LaurentPoly) -> Result<(), String> {
    let prod = shuffle_mul(q, e, f).map_err(|x| x.to_string())?;
    let lhs = xi(q, &prod);
    let rhs = shuffle_mul_bar(q, &xi(q, e), &xi(q, f)).map_err(|x| x.to_string())?;
    rat_check(&lhs.value, &rhs.value.mul_poly(scale), &q.alphabet())
}

fn xi_cases(cfg: &SuiteConfig) -> Vec<Case> {
    let mut out = Vec::new();
    for idx in 0..cfg.cases {
        let side = side_of(idx);
        let mut s = Sampler::for_case(cfg, idx as u64);
        let e = s.product(&cfg.quiver, side, 2, cfg.max_hdeg);
        let f = s.product(&cfg.quiver, side, 2, cfg.max_hdeg);
        let q = cfg.quiver.clone();
        let label = format!("#{idx} side {side} hdeg {:?} * {:?}", e.hdeg(), f.hdeg());
        out.push(Case::new(label, move || xi_check(&q, &e, &f, &LaurentPoly::one())));
    }
    let q = cfg.quiver.clone();
    let (e, f) = control_pair(&q);
    out.push(Case::control("bar product scaled by q", move || xi_check(&q, &e, &f, &q_poly())));
    out
}

fn psym_check(q: &Quiver, p: &crate::quiver::IPartition, gs: &[LaurentPoly], scale: &LaurentPoly) -> Result<(), String> {
    let alphabet = q.alphabet();
    let e = psym_product(q, p, gs).map_err(|x| x.to_string())?;
    for p2 in i_partitions(&p.dims()) {
        if partition_greater(&p2, p).map_err(|x| x.to_string())? {
            let s = spec_p(&e, p2.as_composition()).map_err(|x| x.to_string())?;
            if !s.is_zero() {
                return Err(format!("nonzero at {p2}: {}", s.write(&alphabet)));
            }
        }
    }
    let spec = spec_p(&e, p.as_composition()).map_err(|x| x.to_string())?;
    rat_check(
        &RationalFn::from_poly(spec.clone()),
        &psym_closed_product(q, p, gs).mul_poly(scale),
        &alphabet,
    )?;
    poly_check(&spec, &(&psym_factored_product(q, p, gs) * scale), &alphabet)
}

fn psym_cases(cfg: &SuiteConfig) -> Vec<Case> {
    let mut out = Vec::new();
    let mut stream = 0u64;
    for n in nonzero_dims(cfg.quiver.num_vertices(), cfg.max_hdeg) {
        for p in i_partitions(&n) {
            let mut s = Sampler::for_case(cfg, stream);
            stream += 1;
            let gs: Vec<LaurentPoly> = psym_blocks(&p).iter().map(|m| s.symmetric(m)).collect();
            let q = cfg.quiver.clone();
            out.push(Case::new(format!("partition {p}"), move || {
                psym_check(&q, &p, &gs, &LaurentPoly::one())
            }));
        }
    }
    let q = cfg.quiver.clone();
    let p = i_partitions(&unit(q.num_vertices(), 0)).remove(0);
    out.push(Case::control(format!("partition {p} closed product scaled by q"), move || {
        psym_check(&q, &p, &[LaurentPoly::one()], &q_poly())
    }));
    out
}

fn phi_check(ctx: &CoulombContext, gen: &Generator, closed_scale: &LaurentPoly) -> Result<(), String> {
    let alphabet = ctx.quiver().alphabet();
    let lhs = phi_residue(ctx, &gen.element()).map_err(|x| x.to_string())?;
    let scaled = Generator {
        g: &gen.g * closed_scale,
        ..gen.clone()
    };
    dop_check(&lhs, &phi_gen(ctx, &scaled), &alphabet)
}

fn phi_consistency_cases(cfg: &SuiteConfig) -> Vec<Case> {
    let mut out = Vec::new();
    let nv = cfg.quiver.num_vertices();
    let mut all = nonzero_dims(nv, cfg.max_hdeg * nv as u32);
    all.retain(|n| n.iter().all(|&k| k <= cfg.max_hdeg));
    let mut stream = 0u64;
    for n in all {
        for side in [Side::Plus, Side::Minus] {
            let mut s = Sampler::for_case(cfg, stream);
            stream += 1;
            let gen = Generator {
                side,
                g: s.symmetric(&n),
                n: n.clone(),
            };
            let ctx = cfg.ctx();
            out.push(Case::new(format!("side {side} n {:?}", gen.n), move || {
                phi_check(&ctx, &gen, &LaurentPoly::one())
            }));
        }
    }
    let ctx = cfg.control_ctx();
    let gen = Generator {
        side: Side::Plus,
        n: unit(nv, 0),
        g: LaurentPoly::one(),
    };
    out.push(Case::control("closed form with g scaled by q", move || phi_check(&ctx, &gen, &q_poly())));
    out
}

fn random_poly(s: &mut Sampler) -> LaurentPoly {
    let a = s.symmetric(&[2]);
    let b = s.symmetric(&[1]).mul_mono(&Monomial::power(Var::arrow(0), 1));
    &a + &b
}

fn ring_check(a: &LaurentPoly, b: &LaurentPoly, c: &LaurentPoly) -> Result<(), String> {
    let alphabet = Alphabet::default();
    poly_check(&(&(a * b) * c), &(a * &(b * c)), &alphabet).map_err(|w| format!("associativity\n{w}"))?;
    poly_check(&(a * &(b + c)), &(&(a * b) + &(a * c)), &alphabet).map_err(|w| format!("distributivity\n{w}"))?;
    poly_check(&(a * b), &(b * a), &alphabet).map_err(|w| format!("commutativity\n{w}"))?;
    if !b.is_zero() {
        let back = (a * b).divexact(b).ok_or("exact division failed")?;
        poly_check(&back, a, &alphabet).map_err(|w| format!("division\n{w}"))?;
        let sum = RationalFn::new(a.clone(), b.clone())
            .and_then(|x| Ok(x.add(&RationalFn::new(c.clone(), b.clone())?)))
            .map_err(|x| x.to_string())?;
        let direct = RationalFn::new(a + c, b.clone()).map_err(|x| x.to_string())?;
        rat_check(&sum, &direct, &alphabet).map_err(|w| format!("fraction addition\n{w}"))?;
    }
    let sub = crate::ring::mono_bindings([(z(0, 1), Monomial::from_pairs([(Var::q(), 1), (z(0, 2), 1)]))]);
    let ev = |p: &LaurentPoly| p.substitute(&sub).expect("monomial binding");
    poly_check(&ev(&(a * b)), &(&ev(a) * &ev(b)), &alphabet).map_err(|w| format!("substitution\n{w}"))
}

fn ring_cases(cfg: &SuiteConfig) -> Vec<Case> {
    let mut out = Vec::new();
    for idx in 0..cfg.cases {
        let mut s = Sampler::for_case(cfg, idx as u64);
        let (a, b, c) = (random_poly(&mut s), random_poly(&mut s), random_poly(&mut s));
        out.push(Case::new(format!("#{idx} polynomial laws"), move || ring_check(&a, &b, &c)));
        let e: Vec<ShuffleElement> = (0..3).map(|_| s.generator(&cfg.quiver, Side::Plus, 1)).collect();
        let q = cfg.quiver.clone();
        out.push(Case::new(format!("#{idx} shuffle associativity"), move || {
            let m = |x: &ShuffleElement, y: &ShuffleElement| shuffle_mul(&q, x, y).map_err(|x| x.to_string());
            let lhs = m(&m(&e[0], &e[1])?, &e[2])?;
            let rhs = m(&e[0], &m(&e[1], &e[2])?)?;
            poly_check(lhs.poly(), rhs.poly(), &q.alphabet())
        }));
    }
    let mut s = Sampler::for_case(cfg, cfg.cases as u64);
    let a = &random_poly(&mut s) + &LaurentPoly::var(Var::q());
    let b = &random_poly(&mut s) + &LaurentPoly::one();
    out.push(Case::control("(a + b)^2 = a^2 + b^2", move || {
        poly_check(&(&a + &b).pow(2), &(&a.pow(2) + &b.pow(2)), &Alphabet::default())
    }));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(suite: Suite, q: &str) -> SuiteConfig {
        SuiteConfig::new(suite, q).unwrap()
    }

    #[test]
    fn suite_names_roundtrip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn chi_suite_passes() {
        let r = run_suite(&cfg(Suite::Chi, "a1")).unwrap();
        assert!(r.all_passed(), "{r}");
        assert!(r.cases > 300);
    }

    #[test]
    fn hom_on_a1() {
        let mut c = cfg(Suite::Hom, "a1");
        c.cases = 4;
        let r = run_suite(&c).unwrap();
        assert!(r.all_passed(), "{r}");
        assert_eq!(r.cases, 5);
    }

    #[test]
    fn injected_wheel_fault() {
        let mut c = cfg(Suite::Wheel, "jordan");
        c.cases = 3;
        c.inject_fault = true;
        let r = run_suite(&c).unwrap();
        assert_eq!(r.failures.len(), 1);
        assert!(r.failures[0].witness.starts_with("partition"));
        assert_eq!(r.passed + r.failures.len(), r.cases);
    }

    #[test]
    fn reports_are_deterministic() {
        let mut c = cfg(Suite::Xi, "a2");
        c.cases = 3;
        c.seed = 11;
        assert_eq!(run_suite(&c).unwrap().canonical(), run_suite(&c).unwrap().canonical());
    }

    #[test]
    fn invalid_bounds() {
        let mut c = cfg(Suite::Hom, "a1");
        c.max_hdeg = 0;
        assert!(run_suite(&c).is_err());
    }
}
