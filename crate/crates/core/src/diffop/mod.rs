use std::collections::BTreeMap;
use std::fmt;

use smallvec::SmallVec;

use crate::ring::{Alphabet, Bindings, LaurentPoly, Monomial, RationalFn, Term, Var, VarKind};

/// A monomial `Π D[i,a]^e` in the shift operators, exponents in ℤ.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DMonomial(SmallVec<[((usize, usize), i32); 4]>);

impl DMonomial {
    pub fn one() -> DMonomial {
        DMonomial::default()
    }

    /// `D[i,a]^e` with vertex position `i` and 1-based index `a`.
    pub fn d(i: usize, a: usize, e: i32) -> DMonomial {
        DMonomial::from_pairs([((i, a), e)])
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = ((usize, usize), i32)>) -> DMonomial {
        pairs.into_iter().filter(|&(_, e)| e != 0).fold(DMonomial::one(), |acc, (k, e)| {
            let mut single = SmallVec::new();
            single.push((k, e));
            acc.mul(&DMonomial(single))
        })
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponents(&self) -> &[((usize, usize), i32)] {
        &self.0
    }

    pub fn exponent(&self, i: usize, a: usize) -> i32 {
        self.0
            .binary_search_by(|(k, _)| k.cmp(&(i, a)))
            .map(|p| self.0[p].1)
            .unwrap_or(0)
    }

    pub fn mul(&self, other: &DMonomial) -> DMonomial {
        let mut out: SmallVec<[((usize, usize), i32); 4]> = SmallVec::new();
        let (mut x, mut y) = (self.0.iter().peekable(), other.0.iter().peekable());
        loop {
            match (x.peek(), y.peek()) {
                (Some(&&(k1, e1)), Some(&&(k2, e2))) => {
                    if k1 < k2 {
                        out.push((k1, e1));
                        x.next();
                    } else if k2 < k1 {
                        out.push((k2, e2));
                        y.next();
                    } else {
                        if e1 + e2 != 0 {
                            out.push((k1, e1 + e2));
                        }
                        x.next();
                        y.next();
                    }
                }
                (Some(&&p), None) => {
                    out.push(p);
                    x.next();
                }
                (None, Some(&&p)) => {
                    out.push(p);
                    y.next();
                }
                (None, None) => break,
            }
        }
        DMonomial(out)
    }

    pub fn inv(&self) -> DMonomial {
        DMonomial(self.0.iter().map(|&(k, e)| (k, -e)).collect())
    }

    pub fn write(&self, alphabet: &Alphabet) -> String {
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|&((i, a), e)| format!("D[{},{}]^{}", alphabet.vertex_name(i), a, e))
            .collect();
        parts.join(" * ")
    }
}

impl fmt::Debug for DMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            f.write_str("1")
        } else {
            f.write_str(&self.write(&Alphabet::default()))
        }
    }
}

/// `D^m f D^-m`: each `w[i,a]` becomes `q^m_ia · w[i,a]`.
pub fn dop_shift(f: &RationalFn, m: &DMonomial) -> RationalFn {
    if m.is_one() {
        return f.clone();
    }
    let mut b = Bindings::default();
    for &((i, a), e) in m.exponents() {
        let w = Var::w(i, a);
        if f.contains_var(w) {
            b.insert(w, Term::mono(Monomial::from_pairs([(Var::q(), e), (w, 1)])));
        }
    }
    if b.is_empty() {
        return f.clone();
    }
    f.substitute(&b).expect("shifts never vanish a factor")
}

/// A normal-ordered q-difference operator `Σ f_m(w, σ, τ) D^m`.
#[derive(Clone, Default)]
pub struct DiffOp {
    terms: BTreeMap<DMonomial, RationalFn>,
}

impl DiffOp {
    pub fn zero() -> DiffOp {
        DiffOp::default()
    }

    pub fn one() -> DiffOp {
        DiffOp::term(RationalFn::one(), DMonomial::one())
    }

    pub fn term(f: RationalFn, m: DMonomial) -> DiffOp {
        let mut terms = BTreeMap::new();
        if !f.is_zero() {
            terms.insert(m, f);
        }
        DiffOp { terms }
    }

    pub fn function(f: RationalFn) -> DiffOp {
        DiffOp::term(f, DMonomial::one())
    }

    pub fn d(i: usize, a: usize, e: i32) -> DiffOp {
        DiffOp::term(RationalFn::one(), DMonomial::d(i, a, e))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&DMonomial, &RationalFn)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &DMonomial) -> RationalFn {
        self.terms.get(m).cloned().unwrap_or_else(RationalFn::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficients may only involve `w`, `σ`, `τ` and the parameters.
    pub fn is_well_formed(&self) -> bool {
        self.terms
            .values()
            .all(|f| f.vars().iter().all(|v| !matches!(v.kind(), VarKind::Z | VarKind::X | VarKind::Series)))
    }

    pub fn add_term(&mut self, f: RationalFn, m: DMonomial) {
        if f.is_zero() {
            return;
        }
        match self.terms.remove(&m) {
            Some(g) => {
                let s = g.add(&f);
                if !s.is_zero() {
                    self.terms.insert(m, s);
                }
            }
            None => {
                self.terms.insert(m, f);
            }
        }
    }

    pub fn add(&self, other: &DiffOp) -> DiffOp {
        let mut out = self.clone();
        for (m, f) in &other.terms {
            out.add_term(f.clone(), m.clone());
        }
        out
    }

    pub fn neg(&self) -> DiffOp {
        DiffOp {
            terms: self.terms.iter().map(|(m, f)| (m.clone(), f.neg())).collect(),
        }
    }

    pub fn sub(&self, other: &DiffOp) -> DiffOp {
        self.add(&other.neg())
    }

    /// Left multiplication by a function.
    pub fn scale(&self, f: &RationalFn) -> DiffOp {
        let mut out = DiffOp::zero();
        for (m, g) in &self.terms {
            out.add_term(f.mul(g), m.clone());
        }
        out
    }

    pub fn scale_poly(&self, p: &LaurentPoly) -> DiffOp {
        self.scale(&RationalFn::from_poly(p.clone()))
    }

    /// Substitutes into every coefficient; the bindings must not touch `w`.
    pub fn substitute(&self, b: &Bindings) -> Result<DiffOp, crate::ring::RationalError> {
        let mut out = DiffOp::zero();
        for (m, f) in &self.terms {
            out.add_term(f.substitute(b)?, m.clone());
        }
        Ok(out)
    }

    /// Coefficients with cancellable denominator factors removed.
    pub fn reduced(&self) -> DiffOp {
        DiffOp {
            terms: self.terms.iter().map(|(m, f)| (m.clone(), f.reduced())).collect(),
        }
    }

    pub fn write(&self, alphabet: &Alphabet) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, f)| {
                let c = f.reduced().write(alphabet);
                if m.is_one() {
                    c
                } else {
                    format!("{c} * {}", m.write(alphabet))
                }
            })
            .collect();
        parts.join(" + ")
    }
}

/// `(f D^m)(g D^n) = f · shift(g, m) · D^(m+n)`, extended bilinearly.
pub fn dop_mul(a: &DiffOp, b: &DiffOp) -> DiffOp {
    let mut out = DiffOp::zero();
    for (m, f) in &a.terms {
        for (n, g) in &b.terms {
            out.add_term(f.mul(&dop_shift(g, m)), m.mul(n));
        }
    }
    out
}

/// Coefficientwise semantic equality.
pub fn dop_eq(a: &DiffOp, b: &DiffOp) -> bool {
    let keys: std::collections::BTreeSet<&DMonomial> = a.terms.keys().chain(b.terms.keys()).collect();
    keys.into_iter().all(|m| a.coefficient(m).rat_eq(&b.coefficient(m)))
}

impl PartialEq for DiffOp {
    fn eq(&self, other: &DiffOp) -> bool {
        dop_eq(self, other)
    }
}

impl fmt::Debug for DiffOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.write(&Alphabet::default()))
    }
}
