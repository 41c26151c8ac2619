use crate::quiver::{zeta_factors, BinomialRatio, Quiver};
use crate::ring::{LaurentPoly, Monomial, RationalFn};

use super::element::{relabel, z, ShuffleElement, ShuffleError, Side};

/// Ordered set partitions of `{1..=sum(sizes)}` into sorted blocks of the given sizes.
pub(crate) fn block_assignments(sizes: &[u32]) -> Vec<Vec<Vec<usize>>> {
    fn go(free: &[usize], sizes: &[u32], cur: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        let Some((&first, rest)) = sizes.split_first() else {
            out.push(cur.clone());
            return;
        };
        for chosen in subsets(free, first as usize) {
            let left: Vec<usize> = free.iter().copied().filter(|x| !chosen.contains(x)).collect();
            cur.push(chosen);
            go(&left, rest, cur, out);
            cur.pop();
        }
    }
    let total: u32 = sizes.iter().sum();
    let free: Vec<usize> = (1..=total as usize).collect();
    let mut out = Vec::new();
    go(&free, sizes, &mut Vec::new(), &mut out);
    out
}

/// Sorted `k`-subsets of `items`.
pub(crate) fn subsets(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if items.len() < k {
        return vec![];
    }
    let mut out = Vec::new();
    for (idx, &x) in items.iter().enumerate() {
        for mut rest in subsets(&items[idx + 1..], k - 1) {
            rest.insert(0, x);
            out.push(rest);
        }
    }
    out
}

/// For each combined assignment: `positions[block][vertex]` lists the
/// z-indices that receive the block's variables.
pub(crate) fn all_assignments(blocks: &[&[u32]], num_vertices: usize) -> Vec<Vec<Vec<Vec<usize>>>> {
    let per_vertex: Vec<Vec<Vec<Vec<usize>>>> = (0..num_vertices)
        .map(|i| {
            let sizes: Vec<u32> = blocks.iter().map(|b| b[i]).collect();
            block_assignments(&sizes)
        })
        .collect();
    let mut acc: Vec<Vec<Vec<Vec<usize>>>> = vec![vec![Vec::new(); blocks.len()]];
    for (i, options) in per_vertex.iter().enumerate() {
        let mut next = Vec::with_capacity(acc.len() * options.len());
        for prefix in &acc {
            for o in options {
                let mut v = prefix.clone();
                for (blk, pos) in o.iter().enumerate() {
                    debug_assert_eq!(v[blk].len(), i);
                    v[blk].push(pos.clone());
                }
                next.push(v);
            }
        }
        acc = next;
    }
    acc
}

fn ratio(i: usize, a: usize, j: usize, b: usize) -> Monomial {
    Monomial::from_pairs([(z(i, a), 1), (z(j, b), -1)])
}

/// `Π_{a<b} (z[i,a] − z[i,b])` over the given indices of one color.
pub(crate) fn vandermonde(i: usize, idx: &[usize]) -> LaurentPoly {
    let mut factors = Vec::new();
    for (k, &a) in idx.iter().enumerate() {
        for &b in &idx[k + 1..] {
            factors.push(&LaurentPoly::var(z(i, a)) - &LaurentPoly::var(z(i, b)));
        }
    }
    LaurentPoly::product(factors.iter())
}

/// Symmetrization of `Π_a F_a(block a) · Π_{a<b} ζ(block a / block b)` over
/// all ways of distributing the variables among the blocks.
///
/// Every summand is multiplied by the full Vandermonde product, which clears
/// the diagonal ζ denominators; the sum is then divided back exactly.
pub(crate) fn symmetrize_blocks(
    q: &Quiver,
    blocks: &[(&[u32], &LaurentPoly)],
) -> Result<LaurentPoly, ShuffleError> {
    let nv = q.num_vertices();
    let nonempty: Vec<(&[u32], &LaurentPoly)> = blocks
        .iter()
        .copied()
        .filter(|(n, _)| n.iter().any(|&k| k > 0))
        .collect();
    let scalar: LaurentPoly = LaurentPoly::product(
        blocks
            .iter()
            .filter(|(n, _)| n.iter().all(|&k| k == 0))
            .map(|(_, p)| *p),
    );
    if nonempty.len() <= 1 {
        return Ok(match nonempty.first() {
            Some((_, p)) => &scalar * *p,
            None => scalar,
        });
    }
    if scalar.is_zero() || nonempty.iter().any(|(_, p)| p.is_zero()) {
        return Ok(LaurentPoly::zero());
    }
    let zetas: Vec<Vec<BinomialRatio>> =
        (0..nv).map(|i| (0..nv).map(|j| zeta_factors(q, i, j)).collect()).collect();
    let sizes: Vec<&[u32]> = nonempty.iter().map(|(n, _)| *n).collect();
    let mut total = LaurentPoly::zero();
    for pos in all_assignments(&sizes, nv) {
        let mut factors: Vec<LaurentPoly> = Vec::new();
        let mut mono = Monomial::one();
        let mut negative = false;
        for (blk, (_, p)) in nonempty.iter().enumerate() {
            factors.push(relabel(p, &pos[blk]));
            for (i, idx) in pos[blk].iter().enumerate() {
                if idx.len() > 1 {
                    factors.push(vandermonde(i, idx));
                }
            }
        }
        for a in 0..nonempty.len() {
            for b in a + 1..nonempty.len() {
                for i in 0..nv {
                    for j in 0..nv {
                        let zt = &zetas[i][j];
                        for &x in &pos[a][i] {
                            for &y in &pos[b][j] {
                                let r = ratio(i, x, j, y);
                                for f in &zt.num {
                                    factors.push(f.at(&r));
                                }
                                if i == j {
                                    // 1/(1 − z_x/z_y) = z_y/(z_y − z_x); the
                                    // Vandermonde supplies ±(z_y − z_x)
                                    mono = mono.mul(&Monomial::var(z(j, y)));
                                    if x < y {
                                        negative = !negative;
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        let mut term = LaurentPoly::product(factors.iter()).mul_mono(&mono);
        if negative {
            term = -term;
        }
        total = &total + &term;
    }
    let total_sizes: Vec<usize> = (0..nv).map(|i| sizes.iter().map(|n| n[i] as usize).sum()).collect();
    let mut result = total;
    for (i, &n) in total_sizes.iter().enumerate() {
        for a in 1..=n {
            for b in a + 1..=n {
                let d = &LaurentPoly::var(z(i, a)) - &LaurentPoly::var(z(i, b));
                result = result.divexact(&d).ok_or(ShuffleError::NonPolynomialResult)?;
            }
        }
    }
    Ok(&result * &scalar)
}

/// Rational-function symmetrization with an arbitrary ζ-type kernel.
///
/// Used for the barred product and as an independent oracle for the
/// polynomial route.
pub(crate) fn symmetrize_rational(
    q: &Quiver,
    blocks: &[(&[u32], &RationalFn)],
    kernel: impl Fn(usize, usize) -> BinomialRatio,
) -> RationalFn {
    let nv = q.num_vertices();
    let kernels: Vec<Vec<BinomialRatio>> = (0..nv).map(|i| (0..nv).map(|j| kernel(i, j)).collect()).collect();
    let sizes: Vec<&[u32]> = blocks.iter().map(|(n, _)| *n).collect();
    let mut total = RationalFn::zero();
    for pos in all_assignments(&sizes, nv) {
        let mut term = RationalFn::one();
        for (blk, (_, f)) in blocks.iter().enumerate() {
            let map = &pos[blk];
            let mut bindings = rustc_hash::FxHashMap::default();
            for (i, m) in map.iter().enumerate() {
                for (k, &to) in m.iter().enumerate() {
                    bindings.insert(z(i, k + 1), crate::ring::Term::mono(Monomial::var(z(i, to))));
                }
            }
            term = term.mul(&f.substitute(&bindings).expect("relabeling is invertible"));
        }
        let mut num: Vec<LaurentPoly> = Vec::new();
        let mut den: Vec<(LaurentPoly, u32)> = Vec::new();
        for a in 0..blocks.len() {
            for b in a + 1..blocks.len() {
                for i in 0..nv {
                    for j in 0..nv {
                        for &x in &pos[a][i] {
                            for &y in &pos[b][j] {
                                let (n, d) = kernels[i][j].at(&ratio(i, x, j, y));
                                num.extend(n);
                                den.extend(d.into_iter().map(|f| (f, 1)));
                            }
                        }
                    }
                }
            }
        }
        let zeta = RationalFn::with_factors(LaurentPoly::product(num.iter()), den).expect("nonzero kernel");
        total = total.add(&term.mul(&zeta));
    }
    total
}

/// The shuffle product. On the minus side the operands are swapped.
pub fn shuffle_mul(q: &Quiver, e: &ShuffleElement, f: &ShuffleElement) -> Result<ShuffleElement, ShuffleError> {
    if e.side() != f.side() {
        return Err(ShuffleError::SideMismatch);
    }
    let (first, second) = match e.side() {
        Side::Plus => (e, f),
        Side::Minus => (f, e),
    };
    let poly = symmetrize_blocks(q, &[(first.hdeg(), first.poly()), (second.hdeg(), second.poly())])?;
    let hdeg = e.hdeg().iter().zip(f.hdeg()).map(|(a, b)| a + b).collect();
    Ok(ShuffleElement::new_unchecked(e.side(), hdeg, poly))
}

/// Left-to-right product of a nonempty list.
pub fn shuffle_product(q: &Quiver, factors: &[ShuffleElement]) -> Result<ShuffleElement, ShuffleError> {
    let (first, rest) = factors
        .split_first()
        .ok_or_else(|| ShuffleError::Shape("empty product".into()))?;
    rest.iter().try_fold(first.clone(), |acc, f| shuffle_mul(q, &acc, f))
}

/// The product computed summand by summand over rational functions, then
/// checked to be polynomial.
pub fn shuffle_mul_rational(
    q: &Quiver,
    e: &ShuffleElement,
    f: &ShuffleElement,
) -> Result<ShuffleElement, ShuffleError> {
    if e.side() != f.side() {
        return Err(ShuffleError::SideMismatch);
    }
    let (first, second) = match e.side() {
        Side::Plus => (e, f),
        Side::Minus => (f, e),
    };
    let a = RationalFn::from_poly(first.poly().clone());
    let b = RationalFn::from_poly(second.poly().clone());
    let r = symmetrize_rational(q, &[(first.hdeg(), &a), (second.hdeg(), &b)], |i, j| zeta_factors(q, i, j));
    let poly = r.to_poly().ok_or(ShuffleError::NonPolynomialResult)?;
    let hdeg = e.hdeg().iter().zip(f.hdeg()).map(|(a, b)| a + b).collect();
    Ok(ShuffleElement::new_unchecked(e.side(), hdeg, poly))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Var;

    fn one_at(q: &Quiver, n: Vec<u32>) -> ShuffleElement {
        ShuffleElement::new(q, Side::Plus, n, LaurentPoly::one()).unwrap()
    }

    #[test]
    fn assignments_count_multinomials() {
        assert_eq!(block_assignments(&[1, 1]).len(), 2);
        assert_eq!(block_assignments(&[2, 1]).len(), 3);
        assert_eq!(block_assignments(&[1, 1, 1]).len(), 6);
        assert_eq!(block_assignments(&[0, 2]).len(), 1);
    }

    #[test]
    fn a1_constants() {
        // f(x) + f(1/x) with f = (1 − x/q)/(1 − x) equals 1 + 1/q
        let q = Quiver::a1();
        let p = shuffle_mul(&q, &one_at(&q, vec![1]), &one_at(&q, vec![1])).unwrap();
        let expect = &LaurentPoly::one() + &LaurentPoly::var_pow(Var::q(), -1);
        assert_eq!(p.poly(), &expect);
        assert_eq!(p.hdeg(), &[2]);
    }

    #[test]
    fn identity_is_neutral() {
        let q = Quiver::jordan();
        let e = ShuffleElement::new(&q, Side::Plus, vec![1], LaurentPoly::var_pow(z(0, 1), 2)).unwrap();
        let id = ShuffleElement::identity(&q, Side::Plus);
        assert_eq!(shuffle_mul(&q, &id, &e).unwrap(), e);
        assert_eq!(shuffle_mul(&q, &e, &id).unwrap(), e);
    }

    #[test]
    fn polynomial_route_matches_rational_route() {
        for (_, q) in Quiver::fixtures() {
            let nv = q.num_vertices();
            let mut n1 = vec![0; nv];
            n1[0] = 1;
            let mut n2 = vec![0; nv];
            n2[nv - 1] = 1;
            let e = ShuffleElement::new(&q, Side::Plus, n1.clone(), LaurentPoly::var(z(0, 1))).unwrap();
            let f = ShuffleElement::new(&q, Side::Plus, n2.clone(), LaurentPoly::var_pow(z(nv - 1, 1), -1)).unwrap();
            for (a, b) in [(&e, &f), (&f, &e), (&e, &e)] {
                let fast = shuffle_mul(&q, a, b).unwrap();
                let slow = shuffle_mul_rational(&q, a, b).unwrap();
                assert_eq!(fast, slow);
            }
        }
    }
}
