use crate::quiver::{DimVector, Quiver};
use crate::ring::{LaurentPoly, Monomial, Var};

use super::element::{check_symmetric, check_vars, z, ShuffleElement, ShuffleError, Side};

/// The data `(n, g)` of an integral generator `e_{n,g}` or `f_{n,g}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub side: Side,
    pub n: DimVector,
    pub g: LaurentPoly,
}

/// `Π_i Π_{1 ≤ a,b ≤ n_i} (1 − z[i,a]/(z[i,b] q))`, diagonal included.
pub fn gen_prefactor(n: &[u32]) -> LaurentPoly {
    let qi = Monomial::power(Var::q(), -1);
    let mut factors = Vec::new();
    for (i, &ni) in n.iter().enumerate() {
        for a in 1..=ni as usize {
            for b in 1..=ni as usize {
                let m = Monomial::from_pairs([(z(i, a), 1), (z(i, b), -1)]).mul(&qi);
                factors.push(LaurentPoly::one_minus(m));
            }
        }
    }
    LaurentPoly::product(factors.iter())
}

impl Generator {
    pub fn new(q: &Quiver, side: Side, n: DimVector, g: LaurentPoly) -> Result<Generator, ShuffleError> {
        if n.len() != q.num_vertices() {
            return Err(ShuffleError::Shape(format!("dimension vector {n:?} does not match the quiver")));
        }
        let alphabet = q.alphabet();
        check_vars(&g, &n, &alphabet)?;
        check_symmetric(&g, &n, &alphabet)?;
        Ok(Generator { side, n, g })
    }

    pub fn element(&self) -> ShuffleElement {
        let poly = &self.g * &gen_prefactor(&self.n);
        ShuffleElement::new_unchecked(self.side, self.n.clone(), poly)
    }
}

/// `e_{n,g} = g · Π_i Π_{a,b ≤ n_i} (1 − z[i,a]/(z[i,b] q))`.
pub fn gen_e(q: &Quiver, n: DimVector, g: LaurentPoly) -> Result<ShuffleElement, ShuffleError> {
    Ok(Generator::new(q, Side::Plus, n, g)?.element())
}

/// `f_{n,g}`: the same polynomial on the minus side.
pub fn gen_f(q: &Quiver, n: DimVector, g: LaurentPoly) -> Result<ShuffleElement, ShuffleError> {
    Ok(Generator::new(q, Side::Minus, n, g)?.element())
}

/// The localized generator `z[i,1]^k` at horizontal degree `ς^i`.
pub fn gen_loc(q: &Quiver, i: usize, k: i32, side: Side) -> ShuffleElement {
    let mut n = vec![0; q.num_vertices()];
    n[i] = 1;
    ShuffleElement::new_unchecked(side, n, LaurentPoly::var_pow(z(i, 1), k))
}
