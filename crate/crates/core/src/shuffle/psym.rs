use crate::quiver::{chi, zeta_factors, IPartition, Quiver};
use crate::ring::{Bindings, LaurentPoly, Monomial, RationalFn, Term, Var};

use super::element::{check_symmetric, check_vars, z, ShuffleElement, ShuffleError, Side};
use super::generators::gen_prefactor;
use super::product::symmetrize_blocks;
use super::wheel::{q_pochhammer_factors, xv};

/// The rows `m^(a)` of the transpose of `P`, across all vertices:
/// `m_i^(a) = #{b : n_i^(b) ≥ a}`.
pub fn psym_blocks(p: &IPartition) -> Vec<Vec<u32>> {
    let rows = p.parts().iter().filter_map(|ps| ps.first()).copied().max().unwrap_or(0);
    (1..=rows)
        .map(|a| {
            p.parts()
                .iter()
                .map(|ps| ps.iter().filter(|&&n| n >= a).count() as u32)
                .collect()
        })
        .collect()
}

/// `pSym[Π_a e_{m^(a), g_a} · Π_{a<b} ζ]`: one `g` per row of the transpose.
pub fn psym_product(q: &Quiver, p: &IPartition, gs: &[LaurentPoly]) -> Result<ShuffleElement, ShuffleError> {
    let blocks = psym_blocks(p);
    if p.parts().len() != q.num_vertices() {
        return Err(ShuffleError::Shape(format!("partition {p} does not match the quiver")));
    }
    if blocks.len() != gs.len() {
        return Err(ShuffleError::Shape(format!(
            "partition {p} needs {} polynomials, got {}",
            blocks.len(),
            gs.len()
        )));
    }
    let alphabet = q.alphabet();
    let mut polys = Vec::with_capacity(gs.len());
    for (m, g) in blocks.iter().zip(gs) {
        check_vars(g, m, &alphabet)?;
        check_symmetric(g, m, &alphabet)?;
        polys.push(g * &gen_prefactor(m));
    }
    let args: Vec<(&[u32], &LaurentPoly)> = blocks.iter().map(|m| m.as_slice()).zip(polys.iter()).collect();
    let poly = symmetrize_blocks(q, &args)?;
    Ok(ShuffleElement::new_unchecked(Side::Plus, p.dims(), poly))
}

/// `g_1(x_i1, x_i2, …) g_2(x_i1 q, x_i2 q, …) …`
pub fn psym_g_evaluations(p: &IPartition, gs: &[LaurentPoly]) -> LaurentPoly {
    let blocks = psym_blocks(p);
    let evals: Vec<LaurentPoly> = blocks
        .iter()
        .zip(gs)
        .enumerate()
        .map(|(a, (m, g))| {
            let mut b = Bindings::default();
            for (i, &mi) in m.iter().enumerate() {
                for c in 1..=mi as usize {
                    let img = Monomial::from_pairs([(xv(i, c), 1), (Var::q(), a as i32)]);
                    b.insert(z(i, c), Term::mono(img));
                }
            }
            g.substitute(&b).expect("monomial bindings")
        })
        .collect();
    LaurentPoly::product(evals.iter())
}

fn xq(i: usize, a: usize, r: i32) -> Monomial {
    Monomial::from_pairs([(xv(i, a), 1), (Var::q(), r)])
}

/// The closed product for `Spec_P` of [`psym_product`] before rearrangement:
/// g-evaluations, `Π (1 − x_ia/(x_ib q))^min(n_a,n_b)` and the ζ factors
/// between progression points with `r < s`.
pub fn psym_closed_product(q: &Quiver, p: &IPartition, gs: &[LaurentPoly]) -> RationalFn {
    let parts = p.parts();
    let mut num = vec![psym_g_evaluations(p, gs)];
    let mut den = Vec::new();
    let qi = Monomial::power(Var::q(), -1);
    for (i, ps) in parts.iter().enumerate() {
        for (a, &na) in ps.iter().enumerate() {
            for (b, &nb) in ps.iter().enumerate() {
                let f = LaurentPoly::one_minus(xq(i, a + 1, 0).mul(&xq(i, b + 1, 0).inv()).mul(&qi));
                num.push(f.pow(na.min(nb)));
            }
        }
    }
    for i in 0..parts.len() {
        for j in 0..parts.len() {
            let zt = zeta_factors(q, i, j);
            for (a, &na) in parts[i].iter().enumerate() {
                for (b, &nb) in parts[j].iter().enumerate() {
                    for r in 0..na as i32 {
                        for s in r + 1..nb as i32 {
                            let ratio = xq(i, a + 1, r).mul(&xq(j, b + 1, s).inv());
                            let (n, d) = zt.at(&ratio);
                            num.extend(n);
                            den.extend(d.into_iter().map(|f| (f, 1)));
                        }
                    }
                }
            }
        }
    }
    RationalFn::with_factors(LaurentPoly::product(num.iter()), den).expect("nonzero factors")
}

/// `Π1 = Π_i Π_a (1 − q^-1)…(1 − q^-n_i^(a))`.
pub fn psym_pi1(p: &IPartition) -> LaurentPoly {
    let f: Vec<LaurentPoly> = p.parts().iter().flatten().flat_map(|&n| q_pochhammer_factors(n)).collect();
    LaurentPoly::product(f.iter())
}

fn pi2_pieces(q: &Quiver, p: &IPartition, lower: bool) -> LaurentPoly {
    let parts = p.parts();
    let mut f = Vec::new();
    for (k, arrow) in q.arrows().iter().enumerate() {
        let (i, j) = (arrow.source, arrow.target);
        let t = Monomial::var(q.t(k));
        for (a, &na) in parts[i].iter().enumerate() {
            for (b, &nb) in parts[j].iter().enumerate() {
                for r in 0..na as i32 {
                    for s in 0..nb as i32 {
                        let shift = match (lower, r.cmp(&s)) {
                            (true, std::cmp::Ordering::Less) => s,
                            (false, std::cmp::Ordering::Greater) => s + 1,
                            _ => continue,
                        };
                        let m = xq(i, a + 1, r).mul(&t).mul(&xq(j, b + 1, shift).inv());
                        f.push(LaurentPoly::one_minus(m));
                    }
                }
            }
        }
    }
    LaurentPoly::product(f.iter())
}

/// The `r < s` half of Π2.
pub fn psym_pi2_lower(q: &Quiver, p: &IPartition) -> LaurentPoly {
    pi2_pieces(q, p, true)
}

/// The `r > s` half of Π2.
pub fn psym_pi2_upper(q: &Quiver, p: &IPartition) -> LaurentPoly {
    pi2_pieces(q, p, false)
}

/// Π2 in its χ-power form: `Π_{α:i→j} Π_{a,b} Π_c (1 − x_ia t_α/(x_jb q^c))^χ(c)`.
pub fn psym_pi2_chi(q: &Quiver, p: &IPartition) -> LaurentPoly {
    let parts = p.parts();
    let mut f = Vec::new();
    for (k, arrow) in q.arrows().iter().enumerate() {
        let (i, j) = (arrow.source, arrow.target);
        let t = Monomial::var(q.t(k));
        for (a, &na) in parts[i].iter().enumerate() {
            for (b, &nb) in parts[j].iter().enumerate() {
                let span = (na.max(nb) + 1) as i64;
                for c in -span..=span {
                    let m = xq(i, a + 1, 0).mul(&t).mul(&xq(j, b + 1, c as i32).inv());
                    f.push(LaurentPoly::one_minus(m).pow(chi(na, nb, c)));
                }
            }
        }
    }
    LaurentPoly::product(f.iter())
}

/// `Π3 = Π_i Π_{a≠b} Π_{s = 1+max(0, n_a−n_b)}^{n_a} (1 − x_ib/(x_ia q^s))`.
pub fn psym_pi3(p: &IPartition) -> LaurentPoly {
    let mut f = Vec::new();
    for (i, ps) in p.parts().iter().enumerate() {
        for (a, &na) in ps.iter().enumerate() {
            for (b, &nb) in ps.iter().enumerate() {
                if a == b {
                    continue;
                }
                let lo = 1 + na.saturating_sub(nb);
                for s in lo..=na {
                    let m = xq(i, b + 1, 0).mul(&xq(i, a + 1, s as i32).inv());
                    f.push(LaurentPoly::one_minus(m));
                }
            }
        }
    }
    LaurentPoly::product(f.iter())
}

/// `(Π1, Π2, Π3)`, with Π2 computed from its `r, s` definition.
pub fn spec_psym_factors(q: &Quiver, p: &IPartition) -> (LaurentPoly, LaurentPoly, LaurentPoly) {
    let pi2 = &psym_pi2_lower(q, p) * &psym_pi2_upper(q, p);
    debug_assert_eq!(pi2, psym_pi2_chi(q, p));
    (psym_pi1(p), pi2, psym_pi3(p))
}

/// `g-evaluations · Π1 Π2 Π3`.
pub fn psym_factored_product(q: &Quiver, p: &IPartition, gs: &[LaurentPoly]) -> LaurentPoly {
    let (a, b, c) = spec_psym_factors(q, p);
    LaurentPoly::product([psym_g_evaluations(p, gs), a, b, c].iter())
}
