use crate::diffop::{DMonomial, DiffOp};
use crate::quiver::{i_weak_compositions, IComposition};
use crate::ring::{Bindings, LaurentPoly, Monomial, RationalFn, Term, Var};
use rustc_hash::FxHashMap;

use crate::shuffle::{xi, xi_factors, z, ShuffleElement, Side, XiFactors};

use super::context::{one_minus, qpow, wq, CoulombContext, PhiError};

/// Canonical denominator form of a binomial.
fn canonical(f: &LaurentPoly) -> (LaurentPoly, LaurentPoly) {
    let r = RationalFn::recip_of(f.clone()).expect("nonzero");
    let c = r.den_factors()[0].0.clone();
    let unit = f.divexact(&c).expect("canonical form divides");
    (c, unit)
}

/// `((1 − q^c first/next) G)` at `next = q^c first`.
///
/// Denominator copies of the pole factor are first cancelled against the
/// numerator; zero copies give zero, more than one is a higher-order pole.
fn residue_step(g: &RationalFn, first: Var, next: Var, c: i32, alphabet_vertex: &dyn Fn() -> String) -> Result<RationalFn, PhiError> {
    let pole = one_minus(Monomial::from_pairs([(Var::q(), c), (first, 1), (next, -1)]));
    let (canon, unit) = canonical(&pole);
    let mut num = g.num().clone();
    let mut den: Vec<(LaurentPoly, u32)> = Vec::with_capacity(g.den_factors().len());
    let mut order = 0u32;
    for (f, m) in g.den_factors() {
        if *f == canon {
            order = *m;
        } else {
            den.push((f.clone(), *m));
        }
    }
    while order > 0 {
        match num.divexact(&canon) {
            Some(r) => {
                num = r;
                order -= 1;
            }
            None => break,
        }
    }
    match order {
        0 => return Ok(RationalFn::zero()),
        1 => num = &num * &unit,
        _ => {
            return Err(PhiError::HigherOrderPole {
                vertex: alphabet_vertex(),
                index: next.minor(),
                first: first.minor(),
                power: c,
                order,
            })
        }
    }
    let mut b = Bindings::default();
    b.insert(next, Term::mono(Monomial::from_pairs([(Var::q(), c), (first, 1)])));
    let r = RationalFn::with_factors(num, den).expect("nonzero factors");
    r.substitute(&b).map_err(|_| PhiError::HigherOrderPole {
        vertex: alphabet_vertex(),
        index: next.minor(),
        first: first.minor(),
        power: c,
        order: 1,
    })
}

/// `Res_P` followed by the evaluation of the first variable of each string
/// at `w_ia` (plus side) or `w_ia q^(−n_ia)` (minus side), without the
/// normalizing denominator.
pub fn residue_at(ctx: &CoulombContext, g: &RationalFn, p: &IComposition, side: Side) -> Result<RationalFn, PhiError> {
    let alphabet = ctx.quiver().alphabet();
    let mut g = g.clone();
    let mut firsts = Bindings::default();
    for (i, parts) in p.parts.iter().enumerate() {
        let mut nu = 0usize;
        for (a, &n) in parts.iter().enumerate() {
            if n == 0 {
                continue;
            }
            let first = z(i, nu + 1);
            for c in 1..n as usize {
                g = residue_step(&g, first, z(i, nu + 1 + c), c as i32, &|| alphabet.vertex_name(i))?;
                if g.is_zero() {
                    return Ok(g);
                }
            }
            let shift = match side {
                Side::Plus => 0,
                Side::Minus => -(n as i32),
            };
            firsts.insert(first, Term::mono(wq(i, a + 1, shift)));
            nu += n as usize;
        }
    }
    g.substitute(&firsts).map_err(|_| PhiError::HigherOrderPole {
        vertex: String::new(),
        index: 0,
        first: 0,
        power: 0,
        order: 1,
    })
}

/// `Π_{(i,a)} [(1 − q^-1)…(1 − q^(−n+1)) Π_{loops} (1 − t)^(n−1)/((1 − tq)…(1 − tq^(n−1)))]`.
pub fn residue_normalization(ctx: &CoulombContext, p: &IComposition) -> RationalFn {
    let q = ctx.quiver();
    let mut num = Vec::new();
    let mut den = Vec::new();
    for (i, parts) in p.parts.iter().enumerate() {
        for &n in parts.iter().filter(|&&n| n > 0) {
            for k in 1..n as i32 {
                num.push(one_minus(qpow(-k)));
            }
            for arrow in q.loops(i) {
                let t = Monomial::var(q.t(arrow));
                num.push(one_minus(t.clone()).pow(n - 1));
                for k in 1..n as i32 {
                    den.push((one_minus(t.mul(&qpow(k))), 1));
                }
            }
        }
    }
    RationalFn::with_factors(LaurentPoly::product(num.iter()), den).expect("nonzero factors")
}

/// Factors of `1 / residue_normalization`.
fn inverse_normalization(ctx: &CoulombContext, p: &IComposition) -> Factors {
    let q = ctx.quiver();
    let mut num = Vec::new();
    let mut den = Vec::new();
    for (i, parts) in p.parts.iter().enumerate() {
        for &n in parts.iter().filter(|&&n| n > 0) {
            for k in 1..n as i32 {
                den.push((one_minus(qpow(-k)), 1));
            }
            for arrow in q.loops(i) {
                let t = Monomial::var(q.t(arrow));
                den.push((one_minus(t.clone()), n - 1));
                for k in 1..n as i32 {
                    num.push(one_minus(t.mul(&qpow(k))));
                }
            }
        }
    }
    (num, den)
}

/// How the minus-side bracket steps through a string of length `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MinusBracket {
    /// `w_ia q^-c` for `0 ≤ c < n`: one step above each residue point
    /// `w_ia q^(-c-1)`, mirroring the plus side.
    Descending,
    /// `w_ia q^c` for `0 ≤ c < n`, as the formula is usually printed. Not
    /// multiplicative once strings of length ≥ 2 occur.
    Ascending,
}

/// The bracketed `w` factors attached to a composition, and its `D` monomial.
pub fn residue_bracket(ctx: &CoulombContext, p: &IComposition, side: Side) -> (RationalFn, DMonomial) {
    residue_bracket_with(ctx, p, side, MinusBracket::Descending)
}

pub fn residue_bracket_with(
    ctx: &CoulombContext,
    p: &IComposition,
    side: Side,
    minus: MinusBracket,
) -> (RationalFn, DMonomial) {
    let (num, den, dm) = bracket_factors(ctx, p, side, minus);
    let f = RationalFn::with_factors(LaurentPoly::product(num.iter()), den).expect("nonzero factors");
    (f, dm)
}

type Factors = (Vec<LaurentPoly>, Vec<(LaurentPoly, u32)>);

fn bracket_factors(
    ctx: &CoulombContext,
    p: &IComposition,
    side: Side,
    minus: MinusBracket,
) -> (Vec<LaurentPoly>, Vec<(LaurentPoly, u32)>, DMonomial) {
    let q = ctx.quiver();
    let d = ctx.d();
    let plus = side == Side::Plus;
    let mut num = Vec::new();
    let mut den = Vec::new();
    let mut dm = Vec::new();
    for (i, parts) in p.parts.iter().enumerate() {
        for (a0, &n) in parts.iter().enumerate() {
            let a = a0 + 1;
            if n == 0 {
                continue;
            }
            dm.push(((i, a), if plus { n as i32 } else { -(n as i32) }));
            for c in 0..n as i32 {
                let step = match (plus, minus) {
                    (false, MinusBracket::Descending) => -c,
                    _ => c,
                };
                let w = wq(i, a, step);
                for (j, b) in ctx.slots() {
                    if (j, b) == (i, a) {
                        continue;
                    }
                    let wjb = wq(j, b, 0);
                    let arrows: Vec<usize> = if plus {
                        q.arrows_between(i, j).collect()
                    } else {
                        q.arrows_between(j, i).collect()
                    };
                    for arrow in arrows {
                        let t = Monomial::var(q.t(arrow));
                        let m = if plus { w.mul(&t).mul(&wjb.inv()) } else { wjb.mul(&t).mul(&w.inv()) };
                        num.push(one_minus(m));
                    }
                }
                if plus {
                    for s in 1..=ctx.k(i) as usize {
                        num.push(one_minus(w.mul(&Monomial::power(Var::sigma(i, s), -1))));
                    }
                } else {
                    for t in 1..=ctx.l(i) as usize {
                        num.push(one_minus(Monomial::var(Var::tau(i, t)).mul(&w.inv())));
                    }
                }
                for b in (1..=d[i] as usize).filter(|&b| b != a) {
                    let wb = wq(i, b, 0);
                    let m = if plus { wb.mul(&w.inv()) } else { w.mul(&wb.inv()) };
                    den.push((one_minus(m), 1));
                }
            }
        }
    }
    (num, den, DMonomial::from_pairs(dm))
}

/// One composition's contribution to the image of `E`.
pub fn phi_residue_term(
    ctx: &CoulombContext,
    g: &RationalFn,
    p: &IComposition,
    side: Side,
    minus: MinusBracket,
) -> Result<(RationalFn, DMonomial), PhiError> {
    let res = residue_at(ctx, g, p, side)?;
    if res.is_zero() {
        return Ok((res, DMonomial::one()));
    }
    let norm = residue_normalization(ctx, p);
    let (bracket, dm) = residue_bracket_with(ctx, p, side, minus);
    let coeff = res.mul(&bracket).div(&norm).expect("normalization is nonzero");
    Ok((coeff, dm))
}

/// `Res_P Ξ(E)` evaluated in one pass: every string variable is sent to its
/// point, the consecutive pole factors are dropped and the rest of Ξ is
/// evaluated factor by factor. `None` when some other denominator factor
/// vanishes at the point.
fn residue_direct(e: &ShuffleElement, xf: &XiFactors, p: &IComposition, side: Side) -> Option<Factors> {
    let q = Monomial::var(Var::q());
    let mut point: FxHashMap<Var, Monomial> = FxHashMap::default();
    let mut poles: Vec<LaurentPoly> = Vec::new();
    for (i, parts) in p.parts.iter().enumerate() {
        let mut nu = 0usize;
        for (a, &n) in parts.iter().enumerate() {
            let shift = match side {
                Side::Plus => 0,
                Side::Minus => -(n as i32),
            };
            for c in 0..n as usize {
                point.insert(z(i, nu + 1 + c), wq(i, a + 1, c as i32 + shift));
                if c > 0 {
                    let r = Monomial::from_pairs([(z(i, nu + c), 1), (z(i, nu + c + 1), -1)]);
                    poles.push(one_minus(r.mul(&q)));
                }
            }
            nu += n as usize;
        }
    }
    let mut den = Vec::with_capacity(xf.den.len());
    for f in &xf.den {
        if let Some(k) = poles.iter().position(|p| p == f) {
            poles.swap_remove(k);
            continue;
        }
        let v = f.substitute_monos(&point);
        if v.is_zero() {
            return None;
        }
        den.push((v, 1));
    }
    let mut num = vec![e.poly().substitute_monos(&point), LaurentPoly::mono(Monomial::power(Var::q(), xf.shift))];
    num.extend(xf.num.iter().map(|f| f.substitute_monos(&point)));
    Some((num, den))
}

/// The image of a shuffle element under Φ, via residues of `Ξ(E)`.
pub fn phi_residue(ctx: &CoulombContext, e: &ShuffleElement) -> Result<DiffOp, PhiError> {
    phi_residue_with(ctx, e, MinusBracket::Descending)
}

pub fn phi_residue_with(ctx: &CoulombContext, e: &ShuffleElement, minus: MinusBracket) -> Result<DiffOp, PhiError> {
    let n = e.hdeg();
    let d = ctx.d();
    let mut out = DiffOp::zero();
    if e.is_zero() || n.iter().zip(d).any(|(&ni, &di)| ni > 0 && di == 0) {
        return Ok(out);
    }
    let xf = xi_factors(ctx.quiver(), n);
    let mut generic: Option<RationalFn> = None;
    let total: u32 = n.iter().sum();
    let pre = RationalFn::with_factors(LaurentPoly::one(), [(one_minus(qpow(-1)), total)]).expect("nonzero");
    for p in i_weak_compositions(n, d) {
        match residue_direct(e, &xf, &p, e.side()) {
            Some((mut num, mut den)) => {
                let (bn, bd, dm) = bracket_factors(ctx, &p, e.side(), minus);
                let (nn, nd) = inverse_normalization(ctx, &p);
                num.extend(bn.into_iter().chain(nn));
                den.extend(bd.into_iter().chain(nd));
                den.push((one_minus(qpow(-1)), total));
                out.add_term(RationalFn::from_factor_lists(num, den).expect("nonzero factors"), dm);
            }
            None => {
                let g = generic.get_or_insert_with(|| xi(ctx.quiver(), e).value);
                let (f, dm) = phi_residue_term(ctx, g, &p, e.side(), minus)?;
                out.add_term(f.mul(&pre), dm);
            }
        }
    }
    Ok(out)
}
