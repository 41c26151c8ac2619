use crate::diffop::{DMonomial, DiffOp};
use crate::quiver::dim_leq;
use crate::ring::{Bindings, LaurentPoly, Monomial, RationalFn, Term, Var};
use crate::shuffle::{subsets, z, Generator, Side};

use super::context::{one_minus, qpow, wq, CoulombContext};

/// All tuples `(A_i ⊂ {1..d_i}, |A_i| = n_i)`, each `A_i` sorted.
pub(crate) fn subset_tuples(n: &[u32], d: &[u32]) -> Vec<Vec<Vec<usize>>> {
    let mut acc: Vec<Vec<Vec<usize>>> = vec![vec![]];
    for (&ni, &di) in n.iter().zip(d) {
        let all: Vec<usize> = (1..=di as usize).collect();
        let options = subsets(&all, ni as usize);
        let mut next = Vec::with_capacity(acc.len() * options.len());
        for prefix in &acc {
            for o in &options {
                let mut v = prefix.clone();
                v.push(o.clone());
                next.push(v);
            }
        }
        acc = next;
    }
    acc
}

fn binom2(n: u32) -> i32 {
    (n as i32) * (n as i32 - 1) / 2
}

/// One summand of the closed formula, for a fixed subset tuple.
pub fn phi_gen_summand(ctx: &CoulombContext, gen: &Generator, subsets: &[Vec<usize>]) -> (RationalFn, DMonomial) {
    let q = ctx.quiver();
    let d = ctx.d();
    let plus = gen.side == Side::Plus;
    let mut bind = Bindings::default();
    for (i, set) in subsets.iter().enumerate() {
        for (k, &a) in set.iter().enumerate() {
            bind.insert(z(i, k + 1), Term::mono(wq(i, a, if plus { 0 } else { -1 })));
        }
    }
    let g = gen.g.substitute(&bind).expect("monomial bindings");
    let mut num = vec![g];
    let mut den = Vec::new();
    let inside = |j: usize, b: usize| subsets[j].contains(&b);
    for (i, set) in subsets.iter().enumerate() {
        for &a in set {
            let w = wq(i, a, 0);
            for (j, &dj) in d.iter().enumerate() {
                let arrows: Vec<usize> = if plus {
                    q.arrows_between(i, j).collect()
                } else {
                    q.arrows_between(j, i).collect()
                };
                for arrow in arrows {
                    let t = Monomial::var(q.t(arrow));
                    for b in (1..=dj as usize).filter(|&b| !inside(j, b)) {
                        let wjb = wq(j, b, 0);
                        let m = if plus { w.mul(&t).mul(&wjb.inv()) } else { wjb.mul(&t).mul(&w.inv()) };
                        num.push(one_minus(m));
                    }
                }
            }
            if plus {
                for s in 1..=ctx.k(i) as usize {
                    num.push(one_minus(w.mul(&Monomial::power(Var::sigma(i, s), -1))));
                }
            } else {
                for t in 1..=ctx.l(i) as usize {
                    num.push(one_minus(Monomial::var(Var::tau(i, t)).mul(&w.inv())));
                }
            }
            for b in (1..=d[i] as usize).filter(|&b| !inside(i, b)) {
                let wb = wq(i, b, 0);
                let m = if plus { wb.mul(&w.inv()) } else { w.mul(&wb.inv()) };
                den.push((one_minus(m), 1));
            }
        }
    }
    let shift: i32 = gen.n.iter().map(|&k| binom2(k)).sum();
    let num = LaurentPoly::product(num.iter()).mul_mono(&qpow(-shift));
    let coeff = RationalFn::with_factors(num, den).expect("nonzero factors");
    let e = if plus { 1 } else { -1 };
    let dm = DMonomial::from_pairs(
        subsets
            .iter()
            .enumerate()
            .flat_map(|(i, set)| set.iter().map(move |&a| ((i, a), e))),
    );
    (coeff, dm)
}

/// The closed-form image of `e_{n,g}` or `f_{n,g}`: a sum over subset
/// tuples, zero unless `n ≤ d`.
pub fn phi_gen(ctx: &CoulombContext, gen: &Generator) -> DiffOp {
    let mut out = DiffOp::zero();
    if !dim_leq(&gen.n, ctx.d()) {
        return out;
    }
    for tuple in subset_tuples(&gen.n, ctx.d()) {
        let (f, m) = phi_gen_summand(ctx, gen, &tuple);
        out.add_term(f, m);
    }
    out
}
