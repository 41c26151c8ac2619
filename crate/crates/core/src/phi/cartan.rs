use std::fmt;

use crate::diffop::{dop_mul, DiffOp};
use crate::ring::{expand_series, LaurentPoly, Monomial, RationalFn, Regime, Var};
use crate::shuffle::{ShuffleElement, Side};

use super::context::{one_minus, qpow, wq, CoulombContext, PhiError};
use super::residue::phi_residue;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CartanKind {
    KappaPlus,
    KappaMinus,
    P,
    C,
}

/// `κ_i^±`, `p_{i,k}` or `c_{i,k}`; `k` is ignored for κ.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CartanGenerator {
    pub kind: CartanKind,
    pub vertex: usize,
    pub k: i32,
}

impl CartanGenerator {
    pub fn kappa(side: Side, vertex: usize) -> CartanGenerator {
        let kind = match side {
            Side::Plus => CartanKind::KappaPlus,
            Side::Minus => CartanKind::KappaMinus,
        };
        CartanGenerator { kind, vertex, k: 0 }
    }

    pub fn p(vertex: usize, k: i32) -> CartanGenerator {
        CartanGenerator { kind: CartanKind::P, vertex, k }
    }

    pub fn c(vertex: usize, k: i32) -> CartanGenerator {
        CartanGenerator { kind: CartanKind::C, vertex, k }
    }
}

fn mono_rational(num: Monomial, neg: bool) -> RationalFn {
    let p = LaurentPoly::mono(num);
    RationalFn::from_poly(if neg { -p } else { p })
}

/// Images of the Cartan generators: functions of `w`, `σ`, `τ`.
pub fn phi_cartan_fn(ctx: &CoulombContext, g: CartanGenerator) -> RationalFn {
    let q = ctx.quiver();
    let i = g.vertex;
    let d = ctx.d();
    match g.kind {
        CartanKind::KappaPlus => {
            // Π_{α:i→j} Π_b (−t/w_jb) Π_s (−1/σ_is) / Π_b (−q/w_ib)
            let mut m = Monomial::one();
            let mut count = 0u32;
            for (j, &dj) in d.iter().enumerate() {
                for arrow in q.arrows_between(i, j) {
                    for b in 1..=dj as usize {
                        m = m.mul(&Monomial::from_pairs([(q.t(arrow), 1), (Var::w(j, b), -1)]));
                        count += 1;
                    }
                }
            }
            for s in 1..=ctx.k(i) as usize {
                m = m.mul(&Monomial::power(Var::sigma(i, s), -1));
                count += 1;
            }
            for b in 1..=d[i] as usize {
                m = m.mul(&Monomial::from_pairs([(Var::q(), -1), (Var::w(i, b), 1)]));
                count += 1;
            }
            mono_rational(m, count % 2 == 1)
        }
        CartanKind::KappaMinus => {
            // Π_{α:j→i} Π_b (−w_jb t/q) Π_t (−τ_it) / Π_b (−w_ib)
            let mut m = Monomial::one();
            let mut count = 0u32;
            for (j, &dj) in d.iter().enumerate() {
                for arrow in q.arrows_between(j, i) {
                    for b in 1..=dj as usize {
                        m = m.mul(&Monomial::from_pairs([(q.t(arrow), 1), (Var::w(j, b), 1), (Var::q(), -1)]));
                        count += 1;
                    }
                }
            }
            for t in 1..=ctx.l(i) as usize {
                m = m.mul(&Monomial::var(Var::tau(i, t)));
                count += 1;
            }
            for b in 1..=d[i] as usize {
                m = m.mul(&Monomial::power(Var::w(i, b), -1));
                count += 1;
            }
            mono_rational(m, count % 2 == 1)
        }
        CartanKind::P => RationalFn::from_poly((1..=d[i] as usize).map(|a| LaurentPoly::var_pow(Var::w(i, a), g.k)).sum()),
        CartanKind::C => {
            let s = (1..=ctx.k(i) as usize).map(|s| LaurentPoly::var_pow(Var::sigma(i, s), g.k));
            let t = (1..=ctx.l(i) as usize).map(|t| LaurentPoly::var_pow(Var::tau(i, t), g.k));
            RationalFn::from_poly(s.chain(t).sum())
        }
    }
}

pub fn phi_cartan(ctx: &CoulombContext, g: CartanGenerator) -> DiffOp {
    DiffOp::function(phi_cartan_fn(ctx, g))
}

/// The rational function of `x` whose expansions give the images of `φ_i^±(x)`
/// up to the powers `x^(a_i)`, `x^(b_i)`.
pub fn phi_series_function(ctx: &CoulombContext, i: usize) -> RationalFn {
    let q = ctx.quiver();
    let x = Monomial::var(Var::series());
    let mut num = Vec::new();
    let mut den = Vec::new();
    for (j, b) in ctx.slots() {
        let wjb = Monomial::var(Var::w(j, b));
        for arrow in q.arrows_between(i, j) {
            num.push(one_minus(x.mul(&Monomial::var(q.t(arrow))).mul(&wjb.inv())));
        }
        for arrow in q.arrows_between(j, i) {
            num.push(one_minus(Monomial::var(q.t(arrow)).mul(&wjb).mul(&x.inv()).mul(&qpow(-1))));
        }
    }
    for s in 1..=ctx.k(i) as usize {
        num.push(one_minus(x.mul(&Monomial::power(Var::sigma(i, s), -1))));
    }
    for t in 1..=ctx.l(i) as usize {
        num.push(one_minus(Monomial::var(Var::tau(i, t)).mul(&x.inv())));
    }
    for a in 1..=ctx.d()[i] as usize {
        let w = wq(i, a, 0);
        den.push((one_minus(w.mul(&x.inv())), 1));
        den.push((one_minus(x.mul(&qpow(1)).mul(&w.inv())), 1));
    }
    RationalFn::with_factors(LaurentPoly::product(num.iter()), den).expect("nonzero factors")
}

/// Image of `φ^±_{i,m}`: the coefficient of `x^(∓m)` in `x^(a_i) R(x)` at
/// infinity (`+`) or in `x^(b_i) R(x)` at zero (`−`).
pub fn phi_series_coeff(ctx: &CoulombContext, i: usize, sign: Side, m: i64) -> Result<DiffOp, PhiError> {
    if m < 0 {
        return Ok(DiffOp::zero());
    }
    let (regime, power) = match sign {
        Side::Plus => (Regime::AtInfinity, ctx.shifts().a[i]),
        Side::Minus => (Regime::AtZero, ctx.shifts().b[i]),
    };
    let r = phi_series_function(ctx, i).mul_poly(&LaurentPoly::var_pow(Var::series(), power as i32));
    let coeffs = expand_series(&r, Var::series(), regime, m as usize)?;
    Ok(DiffOp::function(coeffs[m as usize].clone()))
}

/// `δ_ij/γ_i (δ_{k+l≤b_i} φ⁻_{i,b_i−k−l} − δ_{k+l≥a_i} φ⁺_{i,k+l−a_i})`.
pub fn relation_rhs(ctx: &CoulombContext, i: usize, j: usize, k: i64, l: i64) -> Result<DiffOp, PhiError> {
    if i != j {
        return Ok(DiffOp::zero());
    }
    let s = ctx.shifts();
    let (a, b) = (s.a[i], s.b[i]);
    let mut out = DiffOp::zero();
    if k + l <= b {
        out = out.add(&phi_series_coeff(ctx, i, Side::Minus, b - k - l)?);
    }
    if k + l >= a {
        out = out.sub(&phi_series_coeff(ctx, i, Side::Plus, k + l - a)?);
    }
    let gamma = RationalFn::recip_of(ctx.quiver().gamma(i)).expect("γ is nonzero");
    Ok(out.scale(&gamma))
}

/// `[Φ(e_{i,k}), Φ(f_{j,l})]` for the localized generators.
pub fn relation_lhs(ctx: &CoulombContext, i: usize, j: usize, k: i32, l: i32) -> Result<DiffOp, PhiError> {
    let q = ctx.quiver();
    let e = phi_residue(ctx, &crate::shuffle::gen_loc(q, i, k, Side::Plus))?;
    let f = phi_residue(ctx, &crate::shuffle::gen_loc(q, j, l, Side::Minus))?;
    Ok(dop_mul(&e, &f).sub(&dop_mul(&f, &e)))
}

/// The Cartan-type relations between `S^±` and the Cartan generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CartanRelation {
    /// `c_{i,k}` is central.
    CCentral,
    /// `κ_i^+ E = E κ_i^+ q^(−⟨ς^i, n⟩)`.
    KappaPlusE,
    /// `κ_i^+ F = F κ_i^+ q^(⟨ς^i, n⟩)`.
    KappaPlusF,
    /// `κ_i^− E = E κ_i^− q^(⟨n, ς^i⟩)`.
    KappaMinusE,
    /// `κ_i^− F = F κ_i^− q^(−⟨n, ς^i⟩)`.
    KappaMinusF,
    /// `[p_{i,k}, E] = (1 − q^k)(Σ_a z_ia^k) E`.
    PE,
    /// `[p_{i,k}, F] = (1 − q^-k)(Σ_a z_ia^k) F`.
    PF,
}

impl CartanRelation {
    pub const ALL: [CartanRelation; 7] = [
        CartanRelation::CCentral,
        CartanRelation::KappaPlusE,
        CartanRelation::KappaPlusF,
        CartanRelation::KappaMinusE,
        CartanRelation::KappaMinusF,
        CartanRelation::PE,
        CartanRelation::PF,
    ];

    /// The side of the shuffle element the relation is about (`None` for both).
    pub fn side(self) -> Option<Side> {
        match self {
            CartanRelation::CCentral => None,
            CartanRelation::KappaPlusE | CartanRelation::KappaMinusE | CartanRelation::PE => Some(Side::Plus),
            _ => Some(Side::Minus),
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            CartanRelation::CCentral => "c-central",
            CartanRelation::KappaPlusE => "kappa+E",
            CartanRelation::KappaPlusF => "kappa+F",
            CartanRelation::KappaMinusE => "kappa-E",
            CartanRelation::KappaMinusF => "kappa-F",
            CartanRelation::PE => "pE",
            CartanRelation::PF => "pF",
        }
    }
}

impl fmt::Display for CartanRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

fn unit_vector(n: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

/// Both sides of a Cartan relation after applying Φ. `k` is used by the
/// `c` and `p` relations.
pub fn cartan_relation_sides(
    ctx: &CoulombContext,
    which: CartanRelation,
    e: &ShuffleElement,
    i: usize,
    k: i32,
) -> Result<(DiffOp, DiffOp), PhiError> {
    if let Some(side) = which.side() {
        if side != e.side() {
            return Err(PhiError::WrongSide(which.label()));
        }
    }
    let q = ctx.quiver();
    let phi_e = phi_residue(ctx, e)?;
    let n: Vec<i64> = e.hdeg().iter().map(|&x| x as i64).collect();
    let si = unit_vector(q.num_vertices(), i);
    let kappa = |side| phi_cartan(ctx, CartanGenerator::kappa(side, i));
    let with_power = |side, exp: i64| -> (DiffOp, DiffOp) {
        let c = kappa(side);
        let lhs = dop_mul(&c, &phi_e);
        let rhs = dop_mul(&phi_e, &c).scale_poly(&LaurentPoly::mono(qpow(exp as i32)));
        (lhs, rhs)
    };
    Ok(match which {
        CartanRelation::CCentral => {
            let c = phi_cartan(ctx, CartanGenerator::c(i, k));
            (dop_mul(&c, &phi_e), dop_mul(&phi_e, &c))
        }
        CartanRelation::KappaPlusE => with_power(Side::Plus, -q.pairing(&si, &n)),
        CartanRelation::KappaPlusF => with_power(Side::Plus, q.pairing(&si, &n)),
        CartanRelation::KappaMinusE => with_power(Side::Minus, q.pairing(&n, &si)),
        CartanRelation::KappaMinusF => with_power(Side::Minus, -q.pairing(&n, &si)),
        CartanRelation::PE | CartanRelation::PF => {
            let p = phi_cartan(ctx, CartanGenerator::p(i, k));
            let lhs = dop_mul(&p, &phi_e).sub(&dop_mul(&phi_e, &p));
            let coeff = match which {
                CartanRelation::PE => one_minus(qpow(k)),
                _ => one_minus(qpow(-k)),
            };
            let power_sum: LaurentPoly = (1..=e.hdeg()[i] as usize)
                .map(|a| LaurentPoly::var_pow(Var::z(i, a), k))
                .sum();
            let shifted = e.map_poly(|p| &(&coeff * &power_sum) * p);
            (lhs, phi_residue(ctx, &shifted)?)
        }
    })
}

pub fn cartan_relation_check(
    ctx: &CoulombContext,
    which: CartanRelation,
    e: &ShuffleElement,
    i: usize,
    k: i32,
) -> Result<bool, PhiError> {
    let (lhs, rhs) = cartan_relation_sides(ctx, which, e, i, k)?;
    Ok(crate::diffop::dop_eq(&lhs, &rhs))
}
