use crate::quiver::{DimVector, Quiver, Shifts};
use crate::ring::{LaurentPoly, Monomial, Var};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PhiError {
    #[error("dimension vector {0:?} does not match the quiver")]
    Shape(DimVector),
    #[error("pole of order {order} at z[{vertex},{index}] = q^{power} z[{vertex},{first}]")]
    HigherOrderPole {
        vertex: String,
        index: usize,
        first: usize,
        power: i32,
        order: u32,
    },
    #[error("relation {0} does not apply to elements of this side")]
    WrongSide(&'static str),
    #[error(transparent)]
    Series(#[from] crate::ring::SeriesError),
}

/// A quiver with framing together with the dimension vector `d` of the
/// difference-operator ring it maps into.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoulombContext {
    quiver: Quiver,
    d: DimVector,
    shifts: Shifts,
}

impl CoulombContext {
    /// The framing is the one stored on `quiver`.
    pub fn new(quiver: &Quiver, d: DimVector) -> Result<CoulombContext, PhiError> {
        if d.len() != quiver.num_vertices() {
            return Err(PhiError::Shape(d));
        }
        let shifts = quiver.shifts(&d);
        Ok(CoulombContext {
            quiver: quiver.clone(),
            d,
            shifts,
        })
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn d(&self) -> &[u32] {
        &self.d
    }

    pub fn shifts(&self) -> &Shifts {
        &self.shifts
    }

    pub fn k(&self, i: usize) -> u32 {
        self.quiver.framing_k()[i]
    }

    pub fn l(&self, i: usize) -> u32 {
        self.quiver.framing_l()[i]
    }

    /// All `(j, b)` with `b ≤ d_j`.
    pub fn slots(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.d
            .iter()
            .enumerate()
            .flat_map(|(j, &dj)| (1..=dj as usize).map(move |b| (j, b)))
    }
}

pub(crate) fn wq(i: usize, a: usize, c: i32) -> Monomial {
    Monomial::from_pairs([(Var::w(i, a), 1), (Var::q(), c)])
}

pub(crate) fn qpow(c: i32) -> Monomial {
    Monomial::power(Var::q(), c)
}

pub(crate) fn one_minus(m: Monomial) -> LaurentPoly {
    LaurentPoly::one_minus(m)
}
