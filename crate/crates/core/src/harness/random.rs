use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::quiver::{DimVector, Quiver};
use crate::ring::{LaurentPoly, Monomial, Var};
use crate::shuffle::{gen_e, gen_f, shuffle_product, z, ShuffleElement, Side};

use super::suite::SuiteConfig;

/// Seeded source of random shuffle data. Stream `k` of a seed is independent
/// of the others, so cases can be drawn in any order.
pub struct Sampler {
    rng: ChaCha8Rng,
    vdeg: (i32, i32),
    bound: i64,
}

impl Sampler {
    pub fn new(seed: u64, stream: u64, vdeg: (i32, i32), bound: i64) -> Sampler {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream);
        Sampler {
            rng,
            vdeg: (vdeg.0.min(vdeg.1), vdeg.0.max(vdeg.1)),
            bound: bound.max(1),
        }
    }

    pub fn for_case(cfg: &SuiteConfig, stream: u64) -> Sampler {
        Sampler::new(cfg.seed, stream, cfg.vdeg, cfg.coeff_bound)
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    fn coefficient(&mut self) -> i64 {
        let c = self.rng.gen_range(1..=self.bound);
        if self.rng.gen_bool(0.5) {
            -c
        } else {
            c
        }
    }

    /// Uniform among nonzero dimension vectors with total at most `max`.
    pub fn dims(&mut self, nv: usize, max: u32) -> DimVector {
        let all = nonzero_dims(nv, max);
        all.choose(&mut self.rng).cloned().unwrap_or_else(|| vec![0; nv])
    }

    /// A random color-symmetric Laurent polynomial in the `z` variables of
    /// horizontal degree `n`: a sum of orbit sums of random monomials, each
    /// with a random integer coefficient and a power of `q` in `{-1, 0, 1}`.
    pub fn symmetric(&mut self, n: &[u32]) -> LaurentPoly {
        let orbits = self.rng.gen_range(1..=2);
        let mut out = LaurentPoly::zero();
        for _ in 0..orbits {
            let exps: Vec<Vec<i32>> = n
                .iter()
                .map(|&k| (0..k).map(|_| self.rng.gen_range(self.vdeg.0..=self.vdeg.1)).collect())
                .collect();
            let orbit = orbit_sum(&exps);
            let scale = Monomial::power(Var::q(), self.rng.gen_range(-1..=1));
            out = &out + &orbit.mul_mono(&scale).scale(&self.coefficient().into());
        }
        out
    }

    /// `e_{n,g}` or `f_{n,g}` with random `n` (total ≤ `max`) and `g`.
    pub fn generator(&mut self, q: &Quiver, side: Side, max: u32) -> ShuffleElement {
        let n = self.dims(q.num_vertices(), max);
        let g = self.symmetric(&n);
        match side {
            Side::Plus => gen_e(q, n, g),
            Side::Minus => gen_f(q, n, g),
        }
        .expect("sampled g is symmetric")
    }

    /// A product of `1..=factors` random generators of total degree ≤ `max`.
    pub fn product(&mut self, q: &Quiver, side: Side, factors: usize, max: u32) -> ShuffleElement {
        let count = self.rng.gen_range(1..=factors.max(1)).min(max.max(1) as usize);
        let mut left = max.max(1);
        let mut gens = Vec::with_capacity(count);
        for k in 0..count {
            let reserve = (count - k - 1) as u32;
            let cap = left - reserve;
            let g = self.generator(q, side, cap);
            left -= g.hdeg().iter().sum::<u32>();
            gens.push(g);
        }
        shuffle_product(q, &gens).expect("same side")
    }
}

/// All nonzero dimension vectors with `nv` entries and total at most `max`.
pub fn nonzero_dims(nv: usize, max: u32) -> Vec<DimVector> {
    let mut out = vec![vec![]];
    for _ in 0..nv {
        out = out
            .into_iter()
            .flat_map(|v: Vec<u32>| {
                let used: u32 = v.iter().sum();
                (0..=max - used).map(move |k| {
                    let mut w = v.clone();
                    w.push(k);
                    w
                })
            })
            .collect();
    }
    out.retain(|v| v.iter().any(|&k| k > 0));
    out
}

/// Sum of the distinct monomials obtained by permuting the exponents of each
/// vertex among that vertex's variables.
pub fn orbit_sum(exps: &[Vec<i32>]) -> LaurentPoly {
    let mut monos: BTreeSet<Vec<Vec<i32>>> = BTreeSet::new();
    let per_vertex: Vec<Vec<Vec<i32>>> = exps.iter().map(|e| permutations(e)).collect();
    let mut acc: Vec<Vec<Vec<i32>>> = vec![vec![]];
    for perms in &per_vertex {
        acc = acc
            .into_iter()
            .flat_map(|prefix| {
                perms.iter().map(move |p| {
                    let mut v = prefix.clone();
                    v.push(p.clone());
                    v
                })
            })
            .collect();
    }
    monos.extend(acc);
    LaurentPoly::from_terms(monos.into_iter().map(|m| {
        let pairs = m
            .iter()
            .enumerate()
            .flat_map(|(i, e)| e.iter().enumerate().map(move |(a, &k)| (z(i, a + 1), k)))
            .collect::<Vec<_>>();
        (Monomial::from_pairs(pairs), 1.into())
    }))
}

fn permutations(v: &[i32]) -> Vec<Vec<i32>> {
    let mut sorted = v.to_vec();
    sorted.sort_unstable();
    let mut out = vec![sorted.clone()];
    // next_permutation over the sorted multiset
    loop {
        let n = sorted.len();
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| sorted[i] < sorted[i + 1]) else {
            return out;
        };
        let j = (i + 1..n).rev().find(|&j| sorted[j] > sorted[i]).expect("exists");
        sorted.swap(i, j);
        sorted[i + 1..].reverse();
        out.push(sorted.clone());
    }
}

/// `gen_e(n, g)` with `n` and `g` drawn from the configuration's seed and bounds.
pub fn random_element(cfg: &SuiteConfig) -> ShuffleElement {
    let q = cfg.quiver();
    Sampler::for_case(cfg, 0).generator(q, Side::Plus, cfg.max_hdeg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shuffle::is_integral;

    #[test]
    fn orbit_sums_are_symmetric() {
        let p = orbit_sum(&[vec![1, 0, 0]]);
        assert_eq!(p.len(), 3);
        let p = orbit_sum(&[vec![2, 2]]);
        assert_eq!(p.len(), 1);
        assert_eq!(permutations(&[1, 2, 3]).len(), 6);
    }

    #[test]
    fn dims_enumeration() {
        assert_eq!(nonzero_dims(2, 1), vec![vec![0, 1], vec![1, 0]]);
        assert_eq!(nonzero_dims(1, 3).len(), 3);
    }

    #[test]
    fn sampler_is_deterministic_and_integral() {
        let q = Quiver::kronecker();
        for stream in 0..6 {
            let a = Sampler::new(7, stream, (-1, 1), 3).product(&q, Side::Plus, 2, 3);
            let b = Sampler::new(7, stream, (-1, 1), 3).product(&q, Side::Plus, 2, 3);
            assert_eq!(a, b);
            assert!(a.hdeg().iter().sum::<u32>() <= 3);
            assert!(is_integral(&q, &a).passed());
        }
    }
}
