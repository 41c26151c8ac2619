use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use dashu_int::ops::Gcd;
use dashu_int::IBig;
use rustc_hash::FxHashMap;

use super::monomial::Monomial;
use super::var::{Alphabet, Var};

/// Arbitrary precision integer coefficient.
pub type Int = IBig;

/// Multivariate Laurent polynomial over the integers.
///
/// Terms are kept sorted by the lexicographic [`Monomial`] order with no zero
/// coefficients, so structural equality is mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct LaurentPoly {
    terms: Vec<(Monomial, Int)>,
}

/// Image of an indeterminate under [`LaurentPoly::substitute`]: `coeff * mono`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub coeff: Int,
    pub mono: Monomial,
}

impl Term {
    pub fn mono(mono: Monomial) -> Term {
        Term {
            coeff: Int::ONE,
            mono,
        }
    }
}

/// Indeterminate bindings for substitution.
pub type Bindings = FxHashMap<Var, Term>;

/// Bindings that send variables to monomials with coefficient 1.
pub fn mono_bindings<I: IntoIterator<Item = (Var, Monomial)>>(it: I) -> Bindings {
    it.into_iter().map(|(v, m)| (v, Term::mono(m))).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SubstituteError {
    #[error("negative power of the non-unit coefficient {0}")]
    NonUnitInverse(Int),
}

impl LaurentPoly {
    pub fn zero() -> LaurentPoly {
        LaurentPoly { terms: Vec::new() }
    }

    pub fn one() -> LaurentPoly {
        LaurentPoly::constant(1)
    }

    pub fn constant(c: i64) -> LaurentPoly {
        LaurentPoly::term(Monomial::one(), Int::from(c))
    }

    pub fn var(v: Var) -> LaurentPoly {
        LaurentPoly::term(Monomial::var(v), Int::ONE)
    }

    pub fn var_pow(v: Var, e: i32) -> LaurentPoly {
        LaurentPoly::term(Monomial::power(v, e), Int::ONE)
    }

    pub fn mono(m: Monomial) -> LaurentPoly {
        LaurentPoly::term(m, Int::ONE)
    }

    pub fn term(m: Monomial, c: Int) -> LaurentPoly {
        if c.is_zero() {
            LaurentPoly::zero()
        } else {
            LaurentPoly {
                terms: vec![(m, c)],
            }
        }
    }

    /// `1 - c*m`, the binomial shape that every divisor in this crate is built from.
    pub fn one_minus(m: Monomial) -> LaurentPoly {
        LaurentPoly::from_terms([(Monomial::one(), Int::ONE), (m, Int::NEG_ONE)])
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Int)>>(it: I) -> LaurentPoly {
        let mut acc: FxHashMap<Monomial, Int> = FxHashMap::default();
        for (m, c) in it {
            *acc.entry(m).or_insert(Int::ZERO) += c;
        }
        LaurentPoly::from_map(acc)
    }

    fn from_map(acc: FxHashMap<Monomial, Int>) -> LaurentPoly {
        let mut terms: Vec<(Monomial, Int)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        LaurentPoly { terms }
    }

    fn from_sorted(terms: Vec<(Monomial, Int)>) -> LaurentPoly {
        LaurentPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(Monomial, Int)] {
        &self.terms
    }

    /// The single term of a monomial polynomial.
    pub fn as_term(&self) -> Option<(&Monomial, &Int)> {
        match self.terms.as_slice() {
            [(m, c)] => Some((m, c)),
            _ => None,
        }
    }

    pub fn as_constant(&self) -> Option<Int> {
        match self.terms.as_slice() {
            [] => Some(Int::ZERO),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    /// Lexicographically largest term.
    pub fn leading(&self) -> Option<(&Monomial, &Int)> {
        self.terms.last().map(|(m, c)| (m, c))
    }

    pub fn scale(&self, c: &Int) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly::from_sorted(self.terms.iter().map(|(m, d)| (m.clone(), d * c)).collect())
    }

    pub fn mul_mono(&self, m: &Monomial) -> LaurentPoly {
        // multiplication by a monomial preserves the lex order
        LaurentPoly::from_sorted(self.terms.iter().map(|(n, c)| (n.mul(m), c.clone())).collect())
    }

    pub fn pow(&self, k: u32) -> LaurentPoly {
        let mut acc = LaurentPoly::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn product<'a, I: IntoIterator<Item = &'a LaurentPoly>>(it: I) -> LaurentPoly {
        let mut factors: Vec<&LaurentPoly> = it.into_iter().collect();
        // small factors first keeps intermediate sizes down
        factors.sort_by_key(|p| p.len());
        ordered_product(&factors)
    }

    /// Monomial gcd of all terms (componentwise minimum of exponents).
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.iter();
        let Some((first, _)) = it.next() else {
            return Monomial::one();
        };
        it.fold(first.clone(), |g, (m, _)| g.gcd(m))
    }

    /// Nonnegative gcd of all coefficients.
    pub fn content(&self) -> Int {
        let mut g = dashu_int::UBig::ZERO;
        for (_, c) in &self.terms {
            g = (&g).gcd(c);
            if g == dashu_int::UBig::ONE {
                break;
            }
        }
        Int::from(g)
    }

    pub fn vars(&self) -> Vec<Var> {
        let mut v: Vec<Var> = self.terms.iter().flat_map(|(m, _)| m.vars()).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    pub fn contains_var(&self, v: Var) -> bool {
        self.terms.iter().any(|(m, _)| m.contains(v))
    }

    /// Decomposes as `sum_k c_k * v^k` with `c_k` free of `v`.
    pub fn coefficients_in(&self, v: Var) -> BTreeMap<i32, LaurentPoly> {
        let mut parts: BTreeMap<i32, Vec<(Monomial, Int)>> = BTreeMap::new();
        for (m, c) in &self.terms {
            let (e, rest) = m.split_off(v);
            parts.entry(e).or_default().push((rest, c.clone()));
        }
        parts
            .into_iter()
            .map(|(e, ts)| (e, LaurentPoly::from_terms(ts)))
            .collect()
    }

    /// Substitutes bound indeterminates by `coeff * monomial` images.
    ///
    /// Fails only when a negative power of a non-unit coefficient is required.
    pub fn substitute(&self, bindings: &Bindings) -> Result<LaurentPoly, SubstituteError> {
        if bindings.is_empty() {
            return Ok(self.clone());
        }
        let mut acc: FxHashMap<Monomial, Int> = FxHashMap::default();
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut pairs: Vec<(Var, i32)> = Vec::with_capacity(m.exponents().len() + 2);
            for &(v, e) in m.exponents() {
                match bindings.get(&v) {
                    None => pairs.push((v, e)),
                    Some(t) => {
                        if !t.coeff.is_one() {
                            coeff *= int_pow(&t.coeff, e)?;
                        }
                        pairs.extend(t.mono.exponents().iter().map(|&(u, f)| (u, f * e)));
                    }
                }
            }
            *acc.entry(Monomial::from_pairs(pairs)).or_insert(Int::ZERO) += coeff;
        }
        Ok(LaurentPoly::from_map(acc))
    }

    /// Substitution where every image is a monomial with coefficient 1; infallible.
    pub fn substitute_monos(&self, bindings: &FxHashMap<Var, Monomial>) -> LaurentPoly {
        if bindings.is_empty() {
            return self.clone();
        }
        let mut acc: FxHashMap<Monomial, Int> = FxHashMap::default();
        for (m, c) in &self.terms {
            let mut pairs: Vec<(Var, i32)> = Vec::with_capacity(m.exponents().len() + 2);
            for &(v, e) in m.exponents() {
                match bindings.get(&v) {
                    None => pairs.push((v, e)),
                    Some(img) => pairs.extend(img.exponents().iter().map(|&(u, f)| (u, f * e))),
                }
            }
            *acc.entry(Monomial::from_pairs(pairs)).or_insert(Int::ZERO) += c;
        }
        LaurentPoly::from_map(acc)
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn divexact(&self, d: &LaurentPoly) -> Option<LaurentPoly> {
        assert!(!d.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(LaurentPoly::zero());
        }
        if let Some((m, c)) = d.as_term() {
            if self.terms.iter().all(|(_, e)| (e % c).is_zero()) {
                let inv = m.inv();
                return Some(LaurentPoly::from_sorted(
                    self.terms.iter().map(|(n, e)| (n.mul(&inv), e / c)).collect(),
                ));
            }
            return None;
        }
        if let Some(q) = self.divexact_unit_binomial(d) {
            return q;
        }
        let (q, r) = self.div_rem_inner(d, true);
        r.is_zero().then_some(q)
    }

    /// Division by `±m1 ± m2`, solved along chains of the ratio `m2/m1`.
    /// `None` when `d` has another shape.
    fn divexact_unit_binomial(&self, d: &LaurentPoly) -> Option<Option<LaurentPoly>> {
        let [(m1, c1), (m2, c2)] = d.terms.as_slice() else {
            return None;
        };
        let unit = |c: &Int| c.is_one() || *c == Int::NEG_ONE;
        if !unit(c1) || !unit(c2) {
            return None;
        }
        // self = c1 m1 (1 + r x) Q
        let x = m2.div(m1);
        let r_negative = c1 != c2;
        let &(pivot, e) = x.exponents().first()?;
        let m1_inv = m1.inv();
        let mut chains: FxHashMap<Monomial, Vec<(i32, Int)>> = FxHashMap::default();
        for (m, c) in &self.terms {
            let m = m.mul(&m1_inv);
            let k = m.exponent(pivot).div_euclid(e);
            let key = m.mul(&x.pow(-k));
            let c = if c1.is_one() { c.clone() } else { -c.clone() };
            chains.entry(key).or_default().push((k, c));
        }
        let mut out: Vec<(Monomial, Int)> = Vec::with_capacity(self.terms.len());
        for (key, mut chain) in chains {
            chain.sort_unstable_by_key(|t| t.0);
            let (lo, hi) = (chain[0].0, chain[chain.len() - 1].0);
            let mut prev = Int::ZERO;
            let mut it = chain.into_iter().peekable();
            for k in lo..=hi {
                let pk = match it.peek() {
                    Some((j, _)) if *j == k => it.next().map(|t| t.1).unwrap_or(Int::ZERO),
                    _ => Int::ZERO,
                };
                // Q_k = P_k − r Q_(k−1)
                let qk = if r_negative { pk + &prev } else { pk - &prev };
                if k == hi {
                    if !qk.is_zero() {
                        return Some(None);
                    }
                } else if !qk.is_zero() {
                    out.push((key.mul(&x.pow(k)), qk.clone()));
                }
                prev = qk;
            }
        }
        out.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        Some(Some(LaurentPoly::from_sorted(out)))
    }

    /// Multivariate division with lexicographic leading terms.
    ///
    /// Both operands are first shifted by monomials to honest polynomials with
    /// no monomial factor in the divisor, so the reduction terminates.
    /// `self == q * d + r`, and `r` is zero exactly when `d` divides `self`.
    pub fn div_rem(&self, d: &LaurentPoly) -> (LaurentPoly, LaurentPoly) {
        assert!(!d.is_zero(), "division by the zero polynomial");
        self.div_rem_inner(d, false)
    }

    fn div_rem_inner(&self, d: &LaurentPoly, stop_early: bool) -> (LaurentPoly, LaurentPoly) {
        let p_shift = self.monomial_content();
        let d_shift = d.monomial_content();
        let p = self.mul_mono(&p_shift.inv());
        let dd = d.mul_mono(&d_shift.inv());
        let (lm, lc) = {
            let (m, c) = dd.leading().expect("nonzero divisor");
            (m.clone(), c.clone())
        };
        let mut rem: BTreeMap<Monomial, Int> = p.terms.into_iter().collect();
        let mut quot: Vec<(Monomial, Int)> = Vec::new();
        let mut rest: Vec<(Monomial, Int)> = Vec::new();
        while let Some((m, c)) = rem.pop_last() {
            let divisible = m.divisible_by(&lm) && (&c % &lc).is_zero();
            if !divisible {
                rest.push((m, c));
                if stop_early {
                    break;
                }
                continue;
            }
            let qm = m.div(&lm);
            let qc = &c / &lc;
            for (dm, dc) in dd.terms.iter().rev().skip(1) {
                let key = dm.mul(&qm);
                let delta = dc * &qc;
                match rem.entry(key) {
                    std::collections::btree_map::Entry::Occupied(mut o) => {
                        *o.get_mut() -= delta;
                        if o.get().is_zero() {
                            o.remove();
                        }
                    }
                    std::collections::btree_map::Entry::Vacant(v) => {
                        v.insert(-delta);
                    }
                }
            }
            quot.push((qm, qc));
        }
        let shift = p_shift.mul(&d_shift.inv());
        let q = LaurentPoly::from_terms(quot).mul_mono(&shift);
        let r = LaurentPoly::from_terms(rest).mul_mono(&p_shift);
        (q, r)
    }

    pub fn write(&self, alphabet: &Alphabet) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut order: Vec<&(Monomial, Int)> = self.terms.iter().collect();
        order.sort_by(|a, b| match b.0.total_degree().cmp(&a.0.total_degree()) {
            Ordering::Equal => b.0.cmp(&a.0),
            o => o,
        });
        let mut out = String::new();
        for (k, (m, c)) in order.into_iter().enumerate() {
            let negative = c.sign() == dashu_int::Sign::Negative;
            let abs = if negative { -c.clone() } else { c.clone() };
            if k == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            if m.is_one() {
                out.push_str(&abs.to_string());
            } else {
                if !abs.is_one() {
                    out.push_str(&abs.to_string());
                    out.push('*');
                }
                m.write(alphabet, &mut out);
            }
        }
        out
    }

    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> impl fmt::Display + 'a {
        struct D<'a>(&'a LaurentPoly, &'a Alphabet);
        impl fmt::Display for D<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(&self.0.write(self.1))
            }
        }
        D(self, alphabet)
    }

    fn merge(&self, other: &LaurentPoly, negate: bool) -> LaurentPoly {
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    let c = if negate { -b[j].1.clone() } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        for t in &b[j..] {
            let c = if negate { -t.1.clone() } else { t.1.clone() };
            out.push((t.0.clone(), c));
        }
        LaurentPoly::from_sorted(out)
    }

    fn multiply(&self, other: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || other.is_zero() {
            return LaurentPoly::zero();
        }
        if let Some((m, c)) = other.as_term() {
            return self.mul_mono(m).scale(c);
        }
        if let Some((m, c)) = self.as_term() {
            return other.mul_mono(m).scale(c);
        }
        packed_product(&[self, other]).unwrap_or_else(|| self.multiply_general(other))
    }

    fn multiply_general(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut acc: FxHashMap<Monomial, Int> = FxHashMap::default();
        acc.reserve(self.len() * other.len() / 2 + 1);
        for (m, c) in &self.terms {
            for (n, d) in &other.terms {
                *acc.entry(m.mul(n)).or_insert(Int::ZERO) += c * d;
            }
        }
        LaurentPoly::from_map(acc)
    }
}

const LANES: usize = 16;
const BIAS: i32 = 64;

/// Merges `(var, max |exponent|)` over the terms of `p` into `acc`.
fn exponent_bounds(p: &LaurentPoly, acc: &mut Vec<(Var, i32)>) {
    for (m, _) in &p.terms {
        for &(v, e) in m.exponents() {
            match acc.binary_search_by_key(&v, |t| t.0) {
                Ok(i) => acc[i].1 = acc[i].1.max(e.abs()),
                Err(i) => acc.insert(i, (v, e.abs())),
            }
        }
    }
}

/// Byte lanes with the first variable most significant, so that integer
/// order on packed keys is the monomial order.
fn lane_shift(k: usize) -> u32 {
    8 * (LANES - 1 - k) as u32
}

fn pack(m: &Monomial, vars: &[Var], bias: u128) -> u128 {
    let mut out = bias;
    let mut lane = 0;
    for &(v, e) in m.exponents() {
        while vars[lane] != v {
            lane += 1;
        }
        out = out.wrapping_add(((e as i128) << lane_shift(lane)) as u128);
    }
    out
}

fn unpack(key: u128, vars: &[Var]) -> Monomial {
    Monomial::from_pairs(
        vars.iter()
            .enumerate()
            .map(|(k, &v)| (v, ((key >> lane_shift(k)) & 0xff) as i32 - BIAS)),
    )
}

/// Left-to-right product with exponents packed into byte lanes and
/// machine-word coefficients; `None` when the factors do not fit or a sum
/// overflows.
fn packed_product(factors: &[&LaurentPoly]) -> Option<LaurentPoly> {
    let mut bounds: Vec<Vec<(Var, i32)>> = Vec::with_capacity(factors.len());
    let mut vars: Vec<Var> = Vec::new();
    for f in factors {
        let mut b = Vec::new();
        exponent_bounds(f, &mut b);
        vars.extend(b.iter().map(|t| t.0));
        bounds.push(b);
    }
    vars.sort_unstable();
    vars.dedup();
    if vars.len() > LANES {
        return None;
    }
    for &v in &vars {
        let total: i32 = bounds
            .iter()
            .map(|b| b.binary_search_by_key(&v, |t| t.0).map(|i| b[i].1).unwrap_or(0))
            .sum();
        if total >= BIAS {
            return None;
        }
    }
    let mut bias = 0u128;
    for k in 0..vars.len() {
        bias |= (BIAS as u128) << lane_shift(k);
    }
    let small = |p: &LaurentPoly| -> Option<Vec<(u128, i128)>> {
        p.terms
            .iter()
            .map(|(m, c)| Some((pack(m, &vars, bias), i64::try_from(c).ok()? as i128)))
            .collect()
    };
    let mut acc = small(factors[0])?;
    for f in &factors[1..] {
        let pf = small(f)?;
        let mut map: FxHashMap<u128, i128> = FxHashMap::default();
        map.reserve(acc.len() * pf.len() / 2 + 1);
        for &(m, c) in &acc {
            for &(n, d) in &pf {
                let slot = map.entry(m + n - bias).or_insert(0);
                *slot = slot.checked_add(c.checked_mul(d)?)?;
            }
        }
        acc = map.into_iter().filter(|&(_, c)| c != 0).collect();
    }
    acc.sort_unstable_by_key(|t| t.0);
    Some(LaurentPoly::from_sorted(
        acc.into_iter().map(|(k, c)| (unpack(k, &vars), Int::from(c))).collect(),
    ))
}

/// Left-to-right product of the factors.
pub(crate) fn ordered_product(factors: &[&LaurentPoly]) -> LaurentPoly {
    match factors {
        [] => LaurentPoly::one(),
        [f] => (*f).clone(),
        _ => {
            if factors.iter().any(|f| f.is_zero()) {
                return LaurentPoly::zero();
            }
            packed_product(factors).unwrap_or_else(|| {
                factors[1..].iter().fold(factors[0].clone(), |acc, f| acc.multiply_general(f))
            })
        }
    }
}

fn int_pow(c: &Int, e: i32) -> Result<Int, SubstituteError> {
    if e >= 0 {
        return Ok(c.pow(e as usize));
    }
    if c.is_one() {
        Ok(Int::ONE)
    } else if *c == Int::NEG_ONE {
        Ok(if e % 2 == 0 { Int::ONE } else { Int::NEG_ONE })
    } else {
        Err(SubstituteError::NonUnitInverse(c.clone()))
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.write(&Alphabet::default()))
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.write(&Alphabet::default()))
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.merge(rhs, false)
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.merge(rhs, true)
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.multiply(rhs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly::from_sorted(self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $f(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$f(&rhs)
            }
        }
        impl<'a> $tr<&'a LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $f(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$f(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> LaurentPoly {
        let mut acc: FxHashMap<Monomial, Int> = FxHashMap::default();
        for p in iter {
            for (m, c) in p.terms {
                *acc.entry(m).or_insert(Int::ZERO) += c;
            }
        }
        LaurentPoly::from_map(acc)
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> LaurentPoly {
        LaurentPoly::constant(c)
    }
}

impl From<Var> for LaurentPoly {
    fn from(v: Var) -> LaurentPoly {
        LaurentPoly::var(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> LaurentPoly {
        LaurentPoly::var(Var::series())
    }
    fn q() -> LaurentPoly {
        LaurentPoly::var(Var::q())
    }
    fn qinv() -> LaurentPoly {
        LaurentPoly::var_pow(Var::q(), -1)
    }
    fn one() -> LaurentPoly {
        LaurentPoly::one()
    }

    #[test]
    fn difference_of_squares() {
        let p = (&one() - &x()) * (&one() + &x());
        assert_eq!(p, &one() - &x().pow(2));
        assert_eq!(&p * &one(), p);
    }

    #[test]
    fn q_shifted_pair_expands() {
        let p = (&one() - &(&x() * &qinv())) * (&one() - &(&x() * &q()));
        let expected = &(&one() - &(&x() * &(&q() + &qinv()))) + &x().pow(2);
        assert_eq!(p, expected);
    }

    #[test]
    fn divexact_cases() {
        let a = &one() - &x().pow(2);
        let b = &one() - &x();
        assert_eq!(a.divexact(&b), Some(&one() + &x()));
        let c = &one() - &(&x() * &qinv());
        assert_eq!(b.divexact(&c), None);
        assert_eq!(LaurentPoly::zero().divexact(&c), Some(LaurentPoly::zero()));
        // monomials are units
        let m = LaurentPoly::mono(Monomial::from_pairs([(Var::q(), 3), (Var::series(), -2)]));
        assert_eq!(a.divexact(&m).map(|r| &r * &m), Some(a.clone()));
    }

    #[test]
    fn binomial_division_matches_long_division() {
        let z1 = LaurentPoly::var(Var::z(0, 1));
        let z2 = LaurentPoly::var(Var::z(0, 2));
        let p = &(&(&z1 * &q()) - &z2.pow(2)) + &(&qinv() * &z1.pow(3));
        for d in [&z1 - &z2, &z1 + &(&z2 * &qinv()), &(&z2 * &z2) - &(&z1 * &q())] {
            let prod = &p * &d;
            assert_eq!(prod.divexact(&d), Some(p.clone()));
            assert_eq!(prod.div_rem_inner(&d, false).0, p);
            let off = &prod + &one();
            assert_eq!(off.divexact(&d), None);
        }
    }

    #[test]
    fn packed_product_matches_general() {
        let z1 = LaurentPoly::var(Var::z(0, 1));
        let z2 = LaurentPoly::var_pow(Var::z(0, 2), -3);
        let a = &(&(&z1 * &q()) - &z2) + &(&LaurentPoly::constant(7) * &qinv());
        let b = &(&(&a * &a) + &z1.pow(5)) - &LaurentPoly::constant(3);
        assert_eq!(packed_product(&[&a, &b]), Some(a.multiply_general(&b)));
        let big = LaurentPoly::term(Monomial::one(), Int::from(i64::MAX));
        assert_eq!(packed_product(&[&big, &big]), Some(big.multiply_general(&big)));
        let huge = &big * &big;
        assert_eq!(packed_product(&[&huge, &a]), None);
        assert_eq!(&huge * &a, huge.multiply_general(&a));
        let steep = LaurentPoly::var_pow(Var::q(), 40);
        assert_eq!(packed_product(&[&steep, &steep]), None);
        assert_eq!(packed_product(&[&a, &b, &a]), Some(a.multiply_general(&b).multiply_general(&a)));
        assert_eq!(&steep * &steep, LaurentPoly::var_pow(Var::q(), 80));
    }

    #[test]
    fn divexact_respects_integer_content() {
        let two = LaurentPoly::constant(2);
        let p = &one() + &x();
        assert_eq!(p.divexact(&two), None);
        let twice = &p * &two;
        assert_eq!(twice.divexact(&(&two * &(&one() - &x()))), None);
        assert_eq!(twice.divexact(&two), Some(p));
    }

    #[test]
    fn div_rem_reports_remainder() {
        let p = &one() - &x();
        let d = &one() - &(&x() * &qinv());
        let (_, r) = p.div_rem(&d);
        assert!(!r.is_zero());
    }

    #[test]
    fn substitution_examples() {
        let z1 = Var::z(0, 1);
        let z2 = Var::z(0, 2);
        let xv = Var::x(0, 1);
        let b = mono_bindings([(z2, Monomial::from_pairs([(Var::q(), 1), (z1, 1)]))]);
        let r = LaurentPoly::var(z2).substitute(&b).unwrap();
        assert_eq!(r, &q() * &LaurentPoly::var(z1));

        let p = LaurentPoly::mono(Monomial::from_pairs([(z1, 1), (z2, 1)]));
        let b = mono_bindings([
            (z1, Monomial::var(xv)),
            (z2, Monomial::from_pairs([(xv, 1), (Var::q(), 1)])),
        ]);
        let expected = LaurentPoly::mono(Monomial::from_pairs([(xv, 2), (Var::q(), 1)]));
        assert_eq!(p.substitute(&b).unwrap(), expected);
        assert_eq!(p.substitute(&Bindings::default()).unwrap(), p);
    }

    #[test]
    fn substitution_rejects_non_unit_inverse() {
        let z1 = Var::z(0, 1);
        let mut b = Bindings::default();
        b.insert(z1, Term { coeff: Int::from(2), mono: Monomial::one() });
        assert!(LaurentPoly::var_pow(z1, -1).substitute(&b).is_err());
        assert_eq!(
            LaurentPoly::var_pow(z1, 3).substitute(&b).unwrap(),
            LaurentPoly::constant(8)
        );
    }

    #[test]
    fn canonical_print() {
        let z11 = Var::z(0, 1);
        let z12 = Var::z(0, 2);
        let p = &one()
            - &LaurentPoly::mono(Monomial::from_pairs([(Var::q(), -1), (z11, 1), (z12, -1)]));
        assert_eq!(p.to_string(), "1 - q^-1*z[1,1]*z[1,2]^-1");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!((&x().pow(2).scale(&Int::from(-3)) + &one()).to_string(), "-3*x^2 + 1");
    }
}
