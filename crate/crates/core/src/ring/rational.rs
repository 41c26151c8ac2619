use std::fmt;

use dashu_int::Sign;

use super::monomial::Monomial;
use super::poly::{Bindings, Int, LaurentPoly, SubstituteError};
use super::var::{Alphabet, Var};

/// Fraction of Laurent polynomials with a factored denominator.
///
/// The denominator is a product of canonical factors with multiplicities.
/// A canonical factor has no monomial content and a positive lexicographic
/// leading coefficient; units are absorbed into the numerator. Fractions are
/// not gcd-reduced, equality is decided by cross-multiplication.
#[derive(Clone)]
pub struct RationalFn {
    num: LaurentPoly,
    den: Vec<(LaurentPoly, u32)>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RationalError {
    #[error("division by zero")]
    DivisionByZero,
    #[error(transparent)]
    Substitute(#[from] SubstituteError),
}

/// Splits `p` as `unit * canonical` with `unit = ±monomial`.
fn normalize_factor(p: &LaurentPoly) -> (Monomial, bool, LaurentPoly) {
    let content = p.monomial_content();
    let shifted = p.mul_mono(&content.inv());
    let negative = shifted
        .leading()
        .map(|(_, c)| c.sign() == Sign::Negative)
        .unwrap_or(false);
    let canon = if negative { -&shifted } else { shifted };
    (content, negative, canon)
}

impl RationalFn {
    pub fn zero() -> RationalFn {
        RationalFn::from_poly(LaurentPoly::zero())
    }

    pub fn one() -> RationalFn {
        RationalFn::from_poly(LaurentPoly::one())
    }

    pub fn from_poly(p: LaurentPoly) -> RationalFn {
        RationalFn {
            num: p,
            den: Vec::new(),
        }
    }

    /// `num / den`; `den` is kept as a single factor.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<RationalFn, RationalError> {
        RationalFn::with_factors(num, [(den, 1)])
    }

    /// `num / prod(f^m)` over the given factors.
    pub fn with_factors<I>(num: LaurentPoly, factors: I) -> Result<RationalFn, RationalError>
    where
        I: IntoIterator<Item = (LaurentPoly, u32)>,
    {
        let mut r = RationalFn::from_poly(num);
        for (f, m) in factors {
            r.push_factor(f, m)?;
        }
        Ok(r)
    }

    /// `Π num / Π den^m`, cancelling numerator factors that agree with a
    /// denominator factor up to a unit before anything is expanded.
    pub fn from_factor_lists(num: Vec<LaurentPoly>, den: Vec<(LaurentPoly, u32)>) -> Result<RationalFn, RationalError> {
        let mut r = RationalFn::from_poly(LaurentPoly::one());
        for (f, m) in den {
            r.push_factor(f, m)?;
        }
        let mut unit = r.num;
        let mut kept = Vec::with_capacity(num.len());
        for f in num {
            if f.is_zero() {
                return Ok(RationalFn::zero());
            }
            if f.len() == 1 {
                unit = &unit * &f;
                continue;
            }
            let (content, negative, canon) = normalize_factor(&f);
            match r.den.binary_search_by(|(g, _)| g.cmp(&canon)) {
                Ok(i) => {
                    unit = unit.mul_mono(&content);
                    if negative {
                        unit = -&unit;
                    }
                    r.den[i].1 -= 1;
                    if r.den[i].1 == 0 {
                        r.den.remove(i);
                    }
                }
                Err(_) => kept.push(f),
            }
        }
        kept.push(unit);
        r.num = LaurentPoly::product(kept.iter());
        Ok(r)
    }

    /// `1 / f`.
    pub fn recip_of(f: LaurentPoly) -> Result<RationalFn, RationalError> {
        RationalFn::new(LaurentPoly::one(), f)
    }

    fn push_factor(&mut self, f: LaurentPoly, m: u32) -> Result<(), RationalError> {
        if f.is_zero() {
            return Err(RationalError::DivisionByZero);
        }
        if m == 0 {
            return Ok(());
        }
        let (unit, negative, canon) = normalize_factor(&f);
        let unit_pow = unit.inv().pow(m as i32);
        if !unit_pow.is_one() {
            self.num = self.num.mul_mono(&unit_pow);
        }
        if negative && m % 2 == 1 {
            self.num = -&self.num;
        }
        if canon.is_one() {
            return Ok(());
        }
        match self.den.binary_search_by(|(g, _)| g.cmp(&canon)) {
            Ok(i) => self.den[i].1 += m,
            Err(i) => self.den.insert(i, (canon, m)),
        }
        Ok(())
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den_factors(&self) -> &[(LaurentPoly, u32)] {
        &self.den
    }

    /// Expanded denominator.
    pub fn den(&self) -> LaurentPoly {
        let mut acc = LaurentPoly::one();
        for (f, m) in &self.den {
            acc = &acc * &f.pow(*m);
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_poly(&self) -> bool {
        self.den.is_empty()
    }

    /// Polynomial value, if the denominator divides the numerator.
    pub fn to_poly(&self) -> Option<LaurentPoly> {
        let r = self.reduced();
        r.den.is_empty().then_some(r.num)
    }

    /// Cancels denominator factors that divide the numerator.
    pub fn reduced(&self) -> RationalFn {
        if self.num.is_zero() {
            return RationalFn::zero();
        }
        let mut num = self.num.clone();
        let mut den = Vec::with_capacity(self.den.len());
        for (f, m) in &self.den {
            let mut left = *m;
            while left > 0 {
                match num.divexact(f) {
                    Some(q) => {
                        num = q;
                        left -= 1;
                    }
                    None => break,
                }
            }
            if left > 0 {
                den.push((f.clone(), left));
            }
        }
        RationalFn { num, den }
    }

    /// Multiplies by the factors of `lcm / self.den`, returning the new numerator.
    fn num_over(&self, lcm: &[(LaurentPoly, u32)]) -> LaurentPoly {
        let mut extra: Vec<&LaurentPoly> = Vec::new();
        for (f, m) in lcm {
            let own = self
                .den
                .binary_search_by(|(g, _)| g.cmp(f))
                .map(|i| self.den[i].1)
                .unwrap_or(0);
            for _ in own..*m {
                extra.push(f);
            }
        }
        // one small factor at a time keeps the work near linear in the numerator
        extra.sort_by_key(|f| f.len());
        extra.insert(0, &self.num);
        super::poly::ordered_product(&extra)
    }

    fn lcm_den(&self, other: &RationalFn) -> Vec<(LaurentPoly, u32)> {
        let mut out: Vec<(LaurentPoly, u32)> = self.den.clone();
        for (f, m) in &other.den {
            match out.binary_search_by(|(g, _)| g.cmp(f)) {
                Ok(i) => out[i].1 = out[i].1.max(*m),
                Err(i) => out.insert(i, (f.clone(), *m)),
            }
        }
        out
    }

    pub fn add(&self, other: &RationalFn) -> RationalFn {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return other.clone();
        }
        let lcm = self.lcm_den(other);
        let num = &self.num_over(&lcm) + &other.num_over(&lcm);
        if num.is_zero() {
            return RationalFn::zero();
        }
        RationalFn { num, den: lcm }
    }

    pub fn neg(&self) -> RationalFn {
        RationalFn {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, other: &RationalFn) -> RationalFn {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &RationalFn) -> RationalFn {
        if self.is_zero() || other.is_zero() {
            return RationalFn::zero();
        }
        let mut den = self.den.clone();
        for (f, m) in &other.den {
            match den.binary_search_by(|(g, _)| g.cmp(f)) {
                Ok(i) => den[i].1 += m,
                Err(i) => den.insert(i, (f.clone(), *m)),
            }
        }
        RationalFn {
            num: &self.num * &other.num,
            den,
        }
    }

    pub fn mul_poly(&self, p: &LaurentPoly) -> RationalFn {
        if p.is_zero() {
            return RationalFn::zero();
        }
        RationalFn {
            num: &self.num * p,
            den: self.den.clone(),
        }
    }

    pub fn scale(&self, c: &Int) -> RationalFn {
        if c.is_zero() {
            return RationalFn::zero();
        }
        RationalFn {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    /// Divides by a polynomial, recorded as one more denominator factor.
    pub fn div_poly(&self, p: &LaurentPoly) -> Result<RationalFn, RationalError> {
        let mut r = self.clone();
        r.push_factor(p.clone(), 1)?;
        Ok(r)
    }

    pub fn inv(&self) -> Result<RationalFn, RationalError> {
        if self.num.is_zero() {
            return Err(RationalError::DivisionByZero);
        }
        RationalFn::new(self.den(), self.num.clone())
    }

    pub fn div(&self, other: &RationalFn) -> Result<RationalFn, RationalError> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, k: u32) -> RationalFn {
        let mut acc = RationalFn::one();
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Semantic equality: `a.num * b.den == b.num * a.den`.
    pub fn rat_eq(&self, other: &RationalFn) -> bool {
        if self.den == other.den {
            return self.num == other.num;
        }
        if self.num.is_zero() || other.num.is_zero() {
            return self.num.is_zero() && other.num.is_zero();
        }
        let lcm = self.lcm_den(other);
        self.num_over(&lcm) == other.num_over(&lcm)
    }

    pub fn substitute(&self, bindings: &Bindings) -> Result<RationalFn, RationalError> {
        let mut r = RationalFn::from_poly(self.num.substitute(bindings)?);
        for (f, m) in &self.den {
            r.push_factor(f.substitute(bindings)?, *m)?;
        }
        Ok(r)
    }

    pub fn contains_var(&self, v: Var) -> bool {
        self.num.contains_var(v) || self.den.iter().any(|(f, _)| f.contains_var(v))
    }

    pub fn vars(&self) -> Vec<Var> {
        let mut v = self.num.vars();
        for (f, _) in &self.den {
            v.extend(f.vars());
        }
        v.sort_unstable();
        v.dedup();
        v
    }

    pub fn write(&self, alphabet: &Alphabet) -> String {
        let den = self.den();
        format!("[{}]/[{}]", self.num.write(alphabet), den.write(alphabet))
    }

    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> impl fmt::Display + 'a {
        struct D<'a>(&'a RationalFn, &'a Alphabet);
        impl fmt::Display for D<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(&self.0.write(self.1))
            }
        }
        D(self, alphabet)
    }
}

impl PartialEq for RationalFn {
    fn eq(&self, other: &RationalFn) -> bool {
        self.rat_eq(other)
    }
}

impl fmt::Debug for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.write(&Alphabet::default()))
    }
}

impl From<LaurentPoly> for RationalFn {
    fn from(p: LaurentPoly) -> RationalFn {
        RationalFn::from_poly(p)
    }
}
