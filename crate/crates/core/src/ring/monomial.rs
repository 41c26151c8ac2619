use std::cmp::Ordering;

use smallvec::SmallVec;

use super::var::{Alphabet, Var};

/// A Laurent monomial: sorted `(variable, exponent)` pairs without zero exponents.
#[derive(Clone, PartialEq, Eq, Hash, Default, Debug)]
pub struct Monomial(SmallVec<[(Var, i32); 8]>);

impl Monomial {
    pub fn one() -> Monomial {
        Monomial(SmallVec::new())
    }

    pub fn var(v: Var) -> Monomial {
        Monomial::power(v, 1)
    }

    pub fn power(v: Var, e: i32) -> Monomial {
        let mut m = Monomial::one();
        if e != 0 {
            m.0.push((v, e));
        }
        m
    }

    /// Builds a monomial from pairs in any order; repeated variables are merged.
    pub fn from_pairs<I: IntoIterator<Item = (Var, i32)>>(pairs: I) -> Monomial {
        let mut v: SmallVec<[(Var, i32); 8]> = pairs.into_iter().collect();
        v.sort_unstable_by_key(|p| p.0);
        let mut out: SmallVec<[(Var, i32); 8]> = SmallVec::with_capacity(v.len());
        for (var, e) in v {
            match out.last_mut() {
                Some(last) if last.0 == var => last.1 += e,
                _ => out.push((var, e)),
            }
        }
        out.retain(|p| p.1 != 0);
        Monomial(out)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponents(&self) -> &[(Var, i32)] {
        &self.0
    }

    pub fn exponent(&self, v: Var) -> i32 {
        self.0
            .binary_search_by_key(&v, |p| p.0)
            .map(|i| self.0[i].1)
            .unwrap_or(0)
    }

    pub fn total_degree(&self) -> i64 {
        self.0.iter().map(|p| p.1 as i64).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        self.combine(other, 1)
    }

    pub fn div(&self, other: &Monomial) -> Monomial {
        self.combine(other, -1)
    }

    pub fn inv(&self) -> Monomial {
        Monomial(self.0.iter().map(|&(v, e)| (v, -e)).collect())
    }

    pub fn pow(&self, k: i32) -> Monomial {
        if k == 0 {
            return Monomial::one();
        }
        Monomial(self.0.iter().map(|&(v, e)| (v, e * k)).collect())
    }

    fn combine(&self, other: &Monomial, sign: i32) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = SmallVec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push((b[j].0, sign * b[j].1));
                    j += 1;
                }
                Ordering::Equal => {
                    let e = a[i].1 + sign * b[j].1;
                    if e != 0 {
                        out.push((a[i].0, e));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend(b[j..].iter().map(|&(v, e)| (v, sign * e)));
        Monomial(out)
    }

    /// Componentwise minimum of exponents (missing variables count as 0).
    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut pairs: Vec<(Var, i32)> = Vec::new();
        for &(v, e) in &self.0 {
            let f = other.exponent(v);
            if e.min(f) != 0 {
                pairs.push((v, e.min(f)));
            }
        }
        for &(v, f) in &other.0 {
            if self.exponent(v) == 0 && f < 0 {
                pairs.push((v, f));
            }
        }
        Monomial::from_pairs(pairs)
    }

    /// True when `self / other` has only nonnegative exponents.
    pub fn divisible_by(&self, other: &Monomial) -> bool {
        other.0.iter().all(|&(v, e)| self.exponent(v) >= e)
            && self.0.iter().all(|&(v, e)| e >= 0 || other.exponent(v) <= e)
    }

    pub fn contains(&self, v: Var) -> bool {
        self.0.binary_search_by_key(&v, |p| p.0).is_ok()
    }

    pub fn vars(&self) -> impl Iterator<Item = Var> + '_ {
        self.0.iter().map(|p| p.0)
    }

    /// Removes `v` and returns its exponent together with the rest.
    pub fn split_off(&self, v: Var) -> (i32, Monomial) {
        let e = self.exponent(v);
        let rest = Monomial(self.0.iter().copied().filter(|p| p.0 != v).collect());
        (e, rest)
    }

    pub fn write(&self, alphabet: &Alphabet, out: &mut String) {
        for (k, &(v, e)) in self.0.iter().enumerate() {
            if k > 0 {
                out.push('*');
            }
            out.push_str(&alphabet.var_name(v));
            if e != 1 {
                out.push('^');
                out.push_str(&e.to_string());
            }
        }
    }
}

/// Lexicographic order with the earliest variable most significant.
impl Ord for Monomial {
    fn cmp(&self, other: &Monomial) -> Ordering {
        let (a, b) = (&self.0, &other.0);
        let (mut i, mut j) = (0, 0);
        loop {
            match (a.get(i), b.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(&(_, e)), None) => return e.cmp(&0),
                (None, Some(&(_, f))) => return 0.cmp(&f),
                (Some(&(u, e)), Some(&(v, f))) => match u.cmp(&v) {
                    Ordering::Less => return e.cmp(&0),
                    Ordering::Greater => return 0.cmp(&f),
                    Ordering::Equal => {
                        if e != f {
                            return e.cmp(&f);
                        }
                        i += 1;
                        j += 1;
                    }
                },
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Monomial) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mul_and_div_cancel() {
        let a = Monomial::from_pairs([(Var::q(), 2), (Var::z(0, 1), -1)]);
        let b = Monomial::from_pairs([(Var::z(0, 1), 1), (Var::z(0, 2), 3)]);
        let ab = a.mul(&b);
        assert_eq!(ab, Monomial::from_pairs([(Var::q(), 2), (Var::z(0, 2), 3)]));
        assert_eq!(ab.div(&b), a);
        assert!(a.mul(&a.inv()).is_one());
    }

    #[test]
    fn lex_order_is_multiplicative() {
        let x = Monomial::var(Var::q());
        let y = Monomial::var(Var::z(0, 1));
        assert!(x > y);
        assert!(x.mul(&y.inv()) > Monomial::one());
        assert!(y.inv() < Monomial::one());
        assert!(x.mul(&y) > y.mul(&y));
    }

    #[test]
    fn gcd_takes_componentwise_min() {
        let a = Monomial::from_pairs([(Var::q(), 2), (Var::z(0, 1), -1)]);
        let b = Monomial::from_pairs([(Var::z(0, 2), 3)]);
        assert_eq!(a.gcd(&b), Monomial::from_pairs([(Var::z(0, 1), -1)]));
        assert!(a.divisible_by(&a.gcd(&b)));
        assert!(b.divisible_by(&a.gcd(&b)));
    }
}
