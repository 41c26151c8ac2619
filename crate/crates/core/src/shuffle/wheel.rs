use crate::quiver::{chi, i_partitions, IComposition, IPartition, Quiver};
use crate::ring::{Alphabet, Bindings, LaurentPoly, Monomial, Term, Var};

use super::element::{z, ShuffleElement, ShuffleError};

/// The variable `x[i,a]` of a specialization.
pub fn xv(i: usize, a: usize) -> Var {
    Var::x(i, a)
}

/// Bindings sending the `z` variables of part `a` of vertex `i` to
/// `x[i,a], x[i,a] q, …, x[i,a] q^(n−1)`.
pub(crate) fn spec_bindings(p: &IComposition) -> Bindings {
    let mut b = Bindings::default();
    for (i, parts) in p.parts.iter().enumerate() {
        let mut next = 1usize;
        for (a, &len) in parts.iter().enumerate() {
            for c in 0..len as i32 {
                let img = Monomial::from_pairs([(xv(i, a + 1), 1), (Var::q(), c)]);
                b.insert(z(i, next), Term::mono(img));
                next += 1;
            }
        }
    }
    b
}

/// Specialization of `E` at the geometric progressions of `P`.
pub fn spec_p(e: &ShuffleElement, p: &IComposition) -> Result<LaurentPoly, ShuffleError> {
    if p.dims() != e.hdeg() {
        return Err(ShuffleError::Shape(format!(
            "composition {p} does not match horizontal degree {:?}",
            e.hdeg()
        )));
    }
    spec_poly(e.poly(), p)
}

pub(crate) fn spec_poly(poly: &LaurentPoly, p: &IComposition) -> Result<LaurentPoly, ShuffleError> {
    if !p.is_positive() {
        return Err(ShuffleError::Shape(format!("composition {p} has a zero part")));
    }
    Ok(poly.substitute(&spec_bindings(p)).expect("monomial bindings"))
}

/// `(1 − q^-1)(1 − q^-2)…(1 − q^-n)` as separate factors.
pub(crate) fn q_pochhammer_factors(n: u32) -> Vec<LaurentPoly> {
    (1..=n as i32)
        .map(|k| LaurentPoly::one_minus(Monomial::power(Var::q(), -k)))
        .collect()
}

/// Binomial factors of the wheel divisor, repeated by multiplicity.
pub fn wheel_divisor_factors(q: &Quiver, p: &IComposition) -> Vec<LaurentPoly> {
    let mut out = Vec::new();
    for parts in &p.parts {
        for &n in parts {
            out.extend(q_pochhammer_factors(n));
        }
    }
    for (k, arrow) in q.arrows().iter().enumerate() {
        let (i, j) = (arrow.source, arrow.target);
        let t = Monomial::var(q.t(k));
        for (a, &na) in p.parts[i].iter().enumerate() {
            for (b, &nb) in p.parts[j].iter().enumerate() {
                let ratio = Monomial::from_pairs([(xv(i, a + 1), 1), (xv(j, b + 1), -1)]).mul(&t);
                let span = (na.max(nb) + 1) as i64;
                for c in -span..=span {
                    let m = chi(na, nb, c);
                    let f = LaurentPoly::one_minus(ratio.mul(&Monomial::power(Var::q(), -c as i32)));
                    for _ in 0..m {
                        out.push(f.clone());
                    }
                }
            }
        }
    }
    out
}

pub fn wheel_divisor(q: &Quiver, p: &IComposition) -> LaurentPoly {
    LaurentPoly::product(wheel_divisor_factors(q, p).iter())
}

/// Witness of a failed divisibility condition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub partition: IPartition,
    /// The divisor factor that failed to divide.
    pub factor: LaurentPoly,
    /// Nonzero remainder of the failed division.
    pub remainder: LaurentPoly,
}

impl Certificate {
    pub fn write(&self, alphabet: &Alphabet) -> String {
        format!(
            "partition {}\nfactor {}\nremainder {}",
            self.partition,
            self.factor.write(alphabet),
            self.remainder.write(alphabet)
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Integrality {
    Pass,
    Fail(Box<Certificate>),
}

impl Integrality {
    pub fn passed(&self) -> bool {
        matches!(self, Integrality::Pass)
    }
}

/// Divides by each factor in turn; returns the offending factor and remainder on failure.
pub(crate) fn divide_by_factors(
    mut p: LaurentPoly,
    factors: &[LaurentPoly],
) -> Result<LaurentPoly, (LaurentPoly, LaurentPoly)> {
    for f in factors {
        match p.divexact(f) {
            Some(r) => p = r,
            None => {
                let (_, rem) = p.div_rem(f);
                return Err((f.clone(), rem));
            }
        }
    }
    Ok(p)
}

/// Membership in the integral shuffle algebra: for every I-partition `P`,
/// `Spec_P(E)` is divisible by the wheel divisor of `P`.
pub fn is_integral(q: &Quiver, e: &ShuffleElement) -> Integrality {
    for p in i_partitions(e.hdeg()) {
        let spec = spec_poly(e.poly(), p.as_composition()).expect("partition of hdeg");
        let factors = wheel_divisor_factors(q, p.as_composition());
        if let Err((factor, remainder)) = divide_by_factors(spec, &factors) {
            return Integrality::Fail(Box::new(Certificate {
                partition: p,
                factor,
                remainder,
            }));
        }
    }
    Integrality::Pass
}

/// The localized wheel condition at vertex `i`: with `z[i,2] = q z[i,1]`, the
/// element is divisible by `z[j,b] − z[i,1] t_α` for arrows `i → j` and by
/// `z[j,b] − z[i,1] q/t_β` for arrows `j → i` (with `b > 2` when `j = i`).
pub fn localized_wheel_holds(q: &Quiver, e: &ShuffleElement, i: usize) -> Option<bool> {
    if e.hdeg()[i] < 2 {
        return None;
    }
    let mut b = Bindings::default();
    b.insert(
        z(i, 2),
        Term::mono(Monomial::from_pairs([(Var::q(), 1), (z(i, 1), 1)])),
    );
    let mut p = e.poly().substitute(&b).expect("monomial binding");
    let z1 = LaurentPoly::var(z(i, 1));
    let mut factors = Vec::new();
    for j in 0..q.num_vertices() {
        let first = if j == i { 3 } else { 1 };
        let params: Vec<Monomial> = q
            .arrows_between(i, j)
            .map(|a| Monomial::var(q.t(a)))
            .chain(
                q.arrows_between(j, i)
                    .map(|a| Monomial::from_pairs([(Var::q(), 1), (q.t(a), -1)])),
            )
            .collect();
        for t in params {
            for bb in first..=e.hdeg()[j] as usize {
                factors.push(&LaurentPoly::var(z(j, bb)) - &z1.mul_mono(&t));
            }
        }
    }
    for f in factors {
        match p.divexact(&f) {
            Some(r) => p = r,
            None => return Some(false),
        }
    }
    Some(true)
}
