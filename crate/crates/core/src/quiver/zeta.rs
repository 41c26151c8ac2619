use crate::ring::{LaurentPoly, Monomial, RationalFn, Var};

use super::model::Quiver;

/// The factor `1 − coeff · x^power`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Binomial {
    pub coeff: Monomial,
    pub power: i32,
}

impl Binomial {
    fn new(coeff: Monomial, power: i32) -> Binomial {
        Binomial { coeff, power }
    }

    /// Value at `x = ratio`.
    pub fn at(&self, ratio: &Monomial) -> LaurentPoly {
        LaurentPoly::one_minus(self.coeff.mul(&ratio.pow(self.power)))
    }
}

/// A rational function of one variable written as a ratio of binomial products.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BinomialRatio {
    pub num: Vec<Binomial>,
    pub den: Vec<Binomial>,
}

impl BinomialRatio {
    /// Numerator and denominator factors at `x = ratio`.
    pub fn at(&self, ratio: &Monomial) -> (Vec<LaurentPoly>, Vec<LaurentPoly>) {
        (
            self.num.iter().map(|b| b.at(ratio)).collect(),
            self.den.iter().map(|b| b.at(ratio)).collect(),
        )
    }

    pub fn eval(&self, ratio: &Monomial) -> RationalFn {
        let (num, den) = self.at(ratio);
        RationalFn::with_factors(LaurentPoly::product(num.iter()), den.into_iter().map(|f| (f, 1)))
            .expect("binomial factors are nonzero")
    }

    /// As a rational function of the series variable `x`.
    pub fn to_rational(&self) -> RationalFn {
        self.eval(&Monomial::var(Var::series()))
    }
}

fn qpow(e: i32) -> Monomial {
    Monomial::power(Var::q(), e)
}

/// `ζ_ij(x) = ((1 − x/q)/(1 − x))^δ Π_{α:i→j}(1 − x t_α) Π_{α:j→i}(1 − t_α/(x q))`.
pub fn zeta_factors(q: &Quiver, i: usize, j: usize) -> BinomialRatio {
    let mut r = BinomialRatio::default();
    if i == j {
        r.num.push(Binomial::new(qpow(-1), 1));
        r.den.push(Binomial::new(Monomial::one(), 1));
    }
    for a in q.arrows_between(i, j) {
        r.num.push(Binomial::new(Monomial::var(q.t(a)), 1));
    }
    for a in q.arrows_between(j, i) {
        r.num.push(Binomial::new(Monomial::var(q.t(a)).mul(&qpow(-1)), -1));
    }
    r
}

/// `ζ̄_ij(x) = ((1 − x)/(1 − x q))^δ Π_{α:j→i}(1 − t_α/(x q))/(1 − t_α/x)`.
pub fn zeta_bar_factors(q: &Quiver, i: usize, j: usize) -> BinomialRatio {
    let mut r = BinomialRatio::default();
    if i == j {
        r.num.push(Binomial::new(Monomial::one(), 1));
        r.den.push(Binomial::new(qpow(1), 1));
    }
    for a in q.arrows_between(j, i) {
        let t = Monomial::var(q.t(a));
        r.num.push(Binomial::new(t.mul(&qpow(-1)), -1));
        r.den.push(Binomial::new(t, -1));
    }
    r
}

pub fn zeta(q: &Quiver, i: usize, j: usize) -> RationalFn {
    zeta_factors(q, i, j).to_rational()
}

pub fn zeta_bar(q: &Quiver, i: usize, j: usize) -> RationalFn {
    zeta_bar_factors(q, i, j).to_rational()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> Monomial {
        Monomial::var(Var::series())
    }

    #[test]
    fn zeta_examples() {
        let qi = qpow(-1);
        let a1 = zeta(&Quiver::a1(), 0, 0);
        let expect = RationalFn::new(LaurentPoly::one_minus(x().mul(&qi)), LaurentPoly::one_minus(x())).unwrap();
        assert_eq!(a1, expect);

        let t = Monomial::var(Var::arrow(0));
        let jordan = zeta(&Quiver::jordan(), 0, 0);
        let expect = expect
            .mul_poly(&LaurentPoly::one_minus(x().mul(&t)))
            .mul_poly(&LaurentPoly::one_minus(t.mul(&qi).mul(&x().inv())));
        assert_eq!(jordan, expect);

        let a2 = Quiver::a2();
        assert_eq!(zeta(&a2, 0, 1), RationalFn::from_poly(LaurentPoly::one_minus(x().mul(&t))));
        assert_eq!(
            zeta(&a2, 1, 0),
            RationalFn::from_poly(LaurentPoly::one_minus(t.mul(&qi).mul(&x().inv())))
        );
    }

    #[test]
    fn zeta_bar_examples() {
        let a1 = zeta_bar(&Quiver::a1(), 0, 0);
        let expect = RationalFn::new(LaurentPoly::one_minus(x()), LaurentPoly::one_minus(x().mul(&qpow(1)))).unwrap();
        assert_eq!(a1, expect);
        assert_eq!(zeta_bar(&Quiver::a2(), 0, 1), RationalFn::one());
    }

    #[test]
    fn bar_ratio_matches_plain_ratio() {
        for (_, q) in Quiver::fixtures() {
            for i in 0..q.num_vertices() {
                for j in 0..q.num_vertices() {
                    let xi = x().inv();
                    let lhs = zeta_bar_factors(&q, i, j).eval(&x()).div(&zeta_bar_factors(&q, j, i).eval(&xi)).unwrap();
                    let rhs = zeta_factors(&q, i, j).eval(&x()).div(&zeta_factors(&q, j, i).eval(&xi)).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }
}
