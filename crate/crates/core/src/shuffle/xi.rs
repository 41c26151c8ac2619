use crate::quiver::{zeta_bar_factors, DimVector, Quiver};
use crate::ring::{LaurentPoly, Monomial, RationalFn, Var};

use super::element::{z, ShuffleElement, ShuffleError, Side};
use super::product::symmetrize_rational;

/// A rational function of the `z` variables with a horizontal degree: the
/// shape of the image of Ξ.
#[derive(Clone, Debug)]
pub struct XiImage {
    pub side: Side,
    pub hdeg: DimVector,
    pub value: RationalFn,
}

impl PartialEq for XiImage {
    fn eq(&self, other: &XiImage) -> bool {
        self.side == other.side && self.hdeg == other.hdeg && self.value.rat_eq(&other.value)
    }
}

fn binom2(n: u32) -> i32 {
    (n as i32) * (n as i32 - 1) / 2
}

/// Factors of the Ξ multiplier at horizontal degree `n`.
#[derive(Clone, Debug)]
pub struct XiFactors {
    /// Exponent of the monomial `q^shift` in the numerator.
    pub shift: i32,
    /// Binomial numerator factors `1 − z_a/z_b`.
    pub num: Vec<LaurentPoly>,
    /// Binomial denominator factors, each to the first power.
    pub den: Vec<LaurentPoly>,
}

pub fn xi_factors(q: &Quiver, n: &[u32]) -> XiFactors {
    let mut num = Vec::new();
    let mut den = Vec::new();
    let shift: i32 = n.iter().map(|&k| binom2(k)).sum();
    for (i, &ni) in n.iter().enumerate() {
        for a in 1..=ni as usize {
            for b in 1..=ni as usize {
                if a != b {
                    let r = Monomial::from_pairs([(z(i, a), 1), (z(i, b), -1)]);
                    num.push(LaurentPoly::one_minus(r.clone()));
                    den.push(LaurentPoly::one_minus(r.mul(&Monomial::var(Var::q()))));
                }
            }
        }
    }
    for (k, arrow) in q.arrows().iter().enumerate() {
        let (i, j) = (arrow.source, arrow.target);
        let t = Monomial::var(q.t(k));
        for a in 1..=n[i] as usize {
            for b in 1..=n[j] as usize {
                if (i, a) != (j, b) {
                    let r = Monomial::from_pairs([(z(i, a), 1), (z(j, b), -1)]).mul(&t);
                    den.push(LaurentPoly::one_minus(r));
                }
            }
        }
    }
    XiFactors { shift, num, den }
}

/// The multiplier of Ξ at horizontal degree `n`:
/// `Π_{a≠b}(1 − z_a/z_b) / [q^(−Σ binom(n_i,2)) Π_{a≠b}(1 − z_a q/z_b) Π_{α:i→j, (i,a)≠(j,b)}(1 − z[i,a] t_α/z[j,b])]`.
pub fn xi_factor(q: &Quiver, n: &[u32]) -> RationalFn {
    let f = xi_factors(q, n);
    let num = LaurentPoly::product(f.num.iter()).mul_mono(&Monomial::power(Var::q(), f.shift));
    RationalFn::with_factors(num, f.den.into_iter().map(|f| (f, 1))).expect("nonzero factors")
}

/// `Ξ(E)`: multiplication by [`xi_factor`].
pub fn xi(q: &Quiver, e: &ShuffleElement) -> XiImage {
    XiImage {
        side: e.side(),
        hdeg: e.hdeg().to_vec(),
        value: xi_factor(q, e.hdeg()).mul_poly(e.poly()),
    }
}

/// The shuffle product built from `ζ̄` instead of `ζ`.
pub fn shuffle_mul_bar(q: &Quiver, a: &XiImage, b: &XiImage) -> Result<XiImage, ShuffleError> {
    if a.side != b.side {
        return Err(ShuffleError::SideMismatch);
    }
    let (first, second) = match a.side {
        Side::Plus => (a, b),
        Side::Minus => (b, a),
    };
    let value = symmetrize_rational(
        q,
        &[(&first.hdeg, &first.value), (&second.hdeg, &second.value)],
        |i, j| zeta_bar_factors(q, i, j),
    );
    Ok(XiImage {
        side: a.side,
        hdeg: a.hdeg.iter().zip(&b.hdeg).map(|(x, y)| x + y).collect(),
        value,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shuffle::product::shuffle_mul;

    fn elem(q: &Quiver, n: Vec<u32>, p: LaurentPoly) -> ShuffleElement {
        ShuffleElement::new(q, Side::Plus, n, p).unwrap()
    }

    #[test]
    fn trivial_degrees() {
        let q = Quiver::jordan();
        let e = elem(&q, vec![1], LaurentPoly::var(z(0, 1)));
        assert!(xi(&q, &e).value.rat_eq(&RationalFn::from_poly(e.poly().clone())));
        let id = ShuffleElement::identity(&q, Side::Plus);
        assert!(xi(&q, &id).value.rat_eq(&RationalFn::one()));
    }

    #[test]
    fn a1_two_variables() {
        let q = Quiver::a1();
        let r = Monomial::from_pairs([(z(0, 1), 1), (z(0, 2), -1)]);
        let num = &LaurentPoly::one_minus(r.clone()) * &LaurentPoly::one_minus(r.inv());
        let qm = Monomial::var(Var::q());
        let den = (&LaurentPoly::one_minus(r.mul(&qm)) * &LaurentPoly::one_minus(r.inv().mul(&qm)))
            .mul_mono(&Monomial::power(Var::q(), -1));
        let expect = RationalFn::new(num, den).unwrap();
        let got = xi(&q, &elem(&q, vec![2], LaurentPoly::one())).value;
        assert!(got.rat_eq(&expect));
    }

    #[test]
    fn intertwines_small_products() {
        for (_, q) in Quiver::fixtures() {
            let nv = q.num_vertices();
            let mut n1 = vec![0; nv];
            n1[0] = 1;
            let mut n2 = vec![0; nv];
            n2[nv - 1] = 1;
            let e = elem(&q, n1, LaurentPoly::var(z(0, 1)));
            let f = elem(&q, n2, LaurentPoly::one());
            for (a, b) in [(&e, &f), (&f, &e), (&f, &f)] {
                let lhs = xi(&q, &shuffle_mul(&q, a, b).unwrap());
                let rhs = shuffle_mul_bar(&q, &xi(&q, a), &xi(&q, b)).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }
}
