use std::fmt;

use rustc_hash::FxHashMap;

use crate::quiver::{DimVector, Quiver};
use crate::ring::{Alphabet, LaurentPoly, Monomial, Var, VarKind};

/// Which half of the double an element lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Plus,
    Minus,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Plus => "+",
            Side::Minus => "-",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ShuffleError {
    #[error("polynomial is not color-symmetric in z[{vertex},*]")]
    NotSymmetric { vertex: String },
    #[error("variable {0} is not allowed at horizontal degree {1:?}")]
    BadVariable(String, DimVector),
    #[error("operands live on different sides")]
    SideMismatch,
    #[error("cannot add elements of horizontal degrees {0:?} and {1:?}")]
    HdegMismatch(DimVector, DimVector),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("symmetrized product is not a Laurent polynomial")]
    NonPolynomialResult,
}

/// The variable `z[i,a]` (vertex position `i`, 1-based `a`).
pub fn z(i: usize, a: usize) -> Var {
    Var::z(i, a)
}

/// Color-symmetric Laurent polynomial of a fixed horizontal degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ShuffleElement {
    side: Side,
    hdeg: DimVector,
    poly: LaurentPoly,
}

/// Relabels `z[i,k]` to `z[i,map[i][k-1]]`.
pub(crate) fn relabel(p: &LaurentPoly, map: &[Vec<usize>]) -> LaurentPoly {
    let mut b: FxHashMap<Var, Monomial> = FxHashMap::default();
    for (i, m) in map.iter().enumerate() {
        for (k, &to) in m.iter().enumerate() {
            if k + 1 != to {
                b.insert(z(i, k + 1), Monomial::var(z(i, to)));
            }
        }
    }
    p.substitute_monos(&b)
}

/// Checks that only parameters and `z[i,a]` with `a ≤ n_i` occur.
pub(crate) fn check_vars(p: &LaurentPoly, n: &[u32], alphabet: &Alphabet) -> Result<(), ShuffleError> {
    for v in p.vars() {
        let ok = match v.kind() {
            VarKind::Q | VarKind::Arrow => true,
            VarKind::Z => v.major() < n.len() && v.minor() <= n[v.major()] as usize,
            _ => false,
        };
        if !ok {
            return Err(ShuffleError::BadVariable(alphabet.var_name(v), n.to_vec()));
        }
    }
    Ok(())
}

/// Checks invariance under adjacent transpositions `z[i,a] <-> z[i,a+1]`.
pub(crate) fn check_symmetric(p: &LaurentPoly, n: &[u32], alphabet: &Alphabet) -> Result<(), ShuffleError> {
    for (i, &ni) in n.iter().enumerate() {
        for a in 1..ni as usize {
            let mut b: FxHashMap<Var, Monomial> = FxHashMap::default();
            b.insert(z(i, a), Monomial::var(z(i, a + 1)));
            b.insert(z(i, a + 1), Monomial::var(z(i, a)));
            if p.substitute_monos(&b) != *p {
                return Err(ShuffleError::NotSymmetric {
                    vertex: alphabet.vertex_name(i),
                });
            }
        }
    }
    Ok(())
}

impl ShuffleElement {
    /// Validates variable usage and color-symmetry.
    pub fn new(q: &Quiver, side: Side, hdeg: DimVector, poly: LaurentPoly) -> Result<ShuffleElement, ShuffleError> {
        if hdeg.len() != q.num_vertices() {
            return Err(ShuffleError::Shape(format!(
                "horizontal degree {hdeg:?} has {} entries, the quiver has {} vertices",
                hdeg.len(),
                q.num_vertices()
            )));
        }
        let alphabet = q.alphabet();
        check_vars(&poly, &hdeg, &alphabet)?;
        check_symmetric(&poly, &hdeg, &alphabet)?;
        Ok(ShuffleElement { side, hdeg, poly })
    }

    pub(crate) fn new_unchecked(side: Side, hdeg: DimVector, poly: LaurentPoly) -> ShuffleElement {
        ShuffleElement { side, hdeg, poly }
    }

    /// The unit: constant 1 at horizontal degree 0.
    pub fn identity(q: &Quiver, side: Side) -> ShuffleElement {
        ShuffleElement::scalar(q, side, LaurentPoly::one())
    }

    /// A parameter-valued element of horizontal degree 0.
    pub fn scalar(q: &Quiver, side: Side, c: LaurentPoly) -> ShuffleElement {
        ShuffleElement {
            side,
            hdeg: vec![0; q.num_vertices()],
            poly: c,
        }
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn hdeg(&self) -> &[u32] {
        &self.hdeg
    }

    pub fn poly(&self) -> &LaurentPoly {
        &self.poly
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn is_scalar(&self) -> bool {
        self.hdeg.iter().all(|&n| n == 0)
    }

    /// Total degree in the `z` variables, if homogeneous.
    pub fn vdeg(&self) -> Option<i64> {
        let mut degs = self.poly.terms().iter().map(|(m, _)| {
            m.exponents()
                .iter()
                .filter(|(v, _)| v.kind() == VarKind::Z)
                .map(|&(_, e)| e as i64)
                .sum::<i64>()
        });
        let first = degs.next().unwrap_or(0);
        degs.all(|d| d == first).then_some(first)
    }

    /// Same polynomial on the other side.
    pub fn with_side(&self, side: Side) -> ShuffleElement {
        ShuffleElement { side, ..self.clone() }
    }

    pub fn map_poly(&self, f: impl FnOnce(&LaurentPoly) -> LaurentPoly) -> ShuffleElement {
        ShuffleElement {
            poly: f(&self.poly),
            ..self.clone()
        }
    }

    pub fn add(&self, other: &ShuffleElement) -> Result<ShuffleElement, ShuffleError> {
        if self.side != other.side {
            return Err(ShuffleError::SideMismatch);
        }
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.hdeg != other.hdeg {
            return Err(ShuffleError::HdegMismatch(self.hdeg.clone(), other.hdeg.clone()));
        }
        Ok(self.map_poly(|p| p + &other.poly))
    }

    pub fn neg(&self) -> ShuffleElement {
        self.map_poly(|p| -p)
    }

    pub fn sub(&self, other: &ShuffleElement) -> Result<ShuffleElement, ShuffleError> {
        self.add(&other.neg())
    }

    pub fn write(&self, alphabet: &Alphabet) -> String {
        self.poly.write(alphabet)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symmetry_is_checked() {
        let q = Quiver::a1();
        let sym = &LaurentPoly::var(z(0, 1)) + &LaurentPoly::var(z(0, 2));
        assert!(ShuffleElement::new(&q, Side::Plus, vec![2], sym).is_ok());
        let asym = LaurentPoly::var(z(0, 1));
        assert!(matches!(
            ShuffleElement::new(&q, Side::Plus, vec![2], asym.clone()),
            Err(ShuffleError::NotSymmetric { .. })
        ));
        assert!(matches!(
            ShuffleElement::new(&q, Side::Plus, vec![0], asym),
            Err(ShuffleError::BadVariable(..))
        ));
    }

    #[test]
    fn vdeg_of_homogeneous_elements() {
        let q = Quiver::a1();
        let e = ShuffleElement::new(&q, Side::Plus, vec![1], LaurentPoly::var_pow(z(0, 1), 3)).unwrap();
        assert_eq!(e.vdeg(), Some(3));
        let mixed = &LaurentPoly::var(z(0, 1)) + &LaurentPoly::one();
        let e = ShuffleElement::new(&q, Side::Plus, vec![1], mixed).unwrap();
        assert_eq!(e.vdeg(), None);
    }
}
