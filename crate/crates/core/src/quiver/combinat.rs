use std::fmt;

/// Dimension vector indexed by vertex position.
pub type DimVector = Vec<u32>;

/// Pointwise `m ≤ n`.
pub fn dim_leq(m: &[u32], n: &[u32]) -> bool {
    m.iter().zip(n).all(|(a, b)| a <= b)
}

pub fn dim_total(n: &[u32]) -> u32 {
    n.iter().sum()
}

/// Per-vertex lists of parts. Parts are positive for a composition in the
/// usual sense; [`weak_compositions`] also produces zero parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IComposition {
    pub parts: Vec<Vec<u32>>,
}

/// An [`IComposition`] whose parts are positive and weakly decreasing per vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IPartition(IComposition);

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CombinatError {
    #[error("parts must be positive")]
    ZeroPart,
    #[error("parts of vertex {0} are not weakly decreasing")]
    NotDecreasing(usize),
    #[error("size mismatch: {0:?} vs {1:?}")]
    SizeMismatch(Vec<u32>, Vec<u32>),
    #[error("precondition violated: need 0 <= l <= k and 0 <= l' <= k'")]
    Precondition,
}

impl IComposition {
    pub fn new(parts: Vec<Vec<u32>>) -> IComposition {
        IComposition { parts }
    }

    /// Sums of the parts per vertex.
    pub fn dims(&self) -> DimVector {
        self.parts.iter().map(|p| p.iter().sum()).collect()
    }

    pub fn is_positive(&self) -> bool {
        self.parts.iter().flatten().all(|&p| p > 0)
    }

    pub fn is_partition(&self) -> bool {
        self.is_positive() && self.parts.iter().all(|p| p.windows(2).all(|w| w[0] >= w[1]))
    }

    /// All parts equal to 1.
    pub fn finest(n: &[u32]) -> IComposition {
        IComposition::new(n.iter().map(|&k| vec![1; k as usize]).collect())
    }

    pub fn num_vertices(&self) -> usize {
        self.parts.len()
    }
}

impl fmt::Display for IComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let blocks: Vec<String> = self
            .parts
            .iter()
            .map(|p| {
                let s: Vec<String> = p.iter().map(|x| x.to_string()).collect();
                format!("({})", s.join(","))
            })
            .collect();
        f.write_str(&blocks.join(" "))
    }
}

impl IPartition {
    pub fn new(parts: Vec<Vec<u32>>) -> Result<IPartition, CombinatError> {
        let c = IComposition::new(parts);
        if !c.is_positive() {
            return Err(CombinatError::ZeroPart);
        }
        for (i, p) in c.parts.iter().enumerate() {
            if p.windows(2).any(|w| w[0] < w[1]) {
                return Err(CombinatError::NotDecreasing(i));
            }
        }
        Ok(IPartition(c))
    }

    pub fn as_composition(&self) -> &IComposition {
        &self.0
    }

    pub fn parts(&self) -> &[Vec<u32>] {
        &self.0.parts
    }

    pub fn dims(&self) -> DimVector {
        self.0.dims()
    }

    pub fn finest(n: &[u32]) -> IPartition {
        IPartition(IComposition::finest(n))
    }

    /// One part per nonzero vertex.
    pub fn coarsest(n: &[u32]) -> IPartition {
        IPartition(IComposition::new(
            n.iter().map(|&k| if k == 0 { vec![] } else { vec![k] }).collect(),
        ))
    }

    /// Per-vertex conjugate partition: `m^(a) = #{b : n^(b) ≥ a}`.
    pub fn transpose(&self) -> IPartition {
        IPartition(IComposition::new(self.parts().iter().map(|p| conjugate(p)).collect()))
    }
}

impl fmt::Display for IPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Conjugate of a weakly decreasing list of positive parts.
pub fn conjugate(p: &[u32]) -> Vec<u32> {
    let top = p.first().copied().unwrap_or(0);
    (1..=top).map(|a| p.iter().filter(|&&x| x >= a).count() as u32).collect()
}

/// Product-of-lexicographic order: `p ≥ p'` at every vertex, strictly somewhere.
pub fn partition_greater(p: &IPartition, p2: &IPartition) -> Result<bool, CombinatError> {
    if p.dims() != p2.dims() {
        return Err(CombinatError::SizeMismatch(p.dims(), p2.dims()));
    }
    let mut strict = false;
    for (a, b) in p.parts().iter().zip(p2.parts()) {
        match a.cmp(b) {
            std::cmp::Ordering::Less => return Ok(false),
            std::cmp::Ordering::Greater => strict = true,
            std::cmp::Ordering::Equal => {}
        }
    }
    Ok(strict)
}

/// Partitions of `n`, in decreasing lexicographic order.
pub fn partitions(n: u32) -> Vec<Vec<u32>> {
    fn go(n: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=max.min(n)).rev() {
            cur.push(p);
            go(n - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Compositions of `n` into positive parts.
pub fn compositions(n: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 1..=n {
        for mut rest in compositions(n - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Sequences of exactly `len` nonnegative parts summing to `n`.
pub fn weak_compositions(n: u32, len: usize) -> Vec<Vec<u32>> {
    if len == 0 {
        return if n == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 0..=n {
        for mut rest in weak_compositions(n - first, len - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn cartesian(per_vertex: Vec<Vec<Vec<u32>>>) -> Vec<IComposition> {
    let mut acc: Vec<Vec<Vec<u32>>> = vec![vec![]];
    for options in per_vertex {
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
    acc.into_iter().map(IComposition::new).collect()
}

pub fn i_partitions(n: &[u32]) -> Vec<IPartition> {
    cartesian(n.iter().map(|&k| partitions(k)).collect())
        .into_iter()
        .map(IPartition)
        .collect()
}

pub fn i_compositions(n: &[u32]) -> Vec<IComposition> {
    cartesian(n.iter().map(|&k| compositions(k)).collect())
}

/// I-compositions of `n` with exactly `lens[i]` parts at vertex `i`, zeros allowed.
pub fn i_weak_compositions(n: &[u32], lens: &[u32]) -> Vec<IComposition> {
    cartesian(
        n.iter()
            .zip(lens)
            .map(|(&k, &d)| weak_compositions(k, d as usize))
            .collect(),
    )
}

/// `χ_{n,n'}(c)`: for `c > 0` the number of `(r, s) ∈ [0,n)×[0,n')` with
/// `s − r = c`, for `c ≤ 0` those with `s + 1 − r = c`. Zero when `n` or `n'` is 0.
pub fn chi(n: u32, n2: u32, c: i64) -> u32 {
    let (n, n2) = (n as i64, n2 as i64);
    let shift = if c > 0 { c } else { c - 1 };
    // s = r + shift
    (0..n).filter(|r| (0..n2).contains(&(r + shift))).count() as u32
}

/// Both sides of the elementary inequality
/// `χ_{k,k'}(c) ≤ χ_{l,l'}(c) + χ_{k−l,k'−l'}(c + l − l') + #{…} + #{…}`.
pub fn chi_inequality_sides(k: u32, k2: u32, l: u32, l2: u32, c: i64) -> Result<(u32, u32), CombinatError> {
    if l > k || l2 > k2 {
        return Err(CombinatError::Precondition);
    }
    let lhs = chi(k, k2, c);
    let cross1 = (0..l as i64)
        .flat_map(|r| (l2 as i64..k2 as i64).map(move |s| (r, s)))
        .filter(|(r, s)| s - r == c)
        .count() as u32;
    let cross2 = (l as i64..k as i64)
        .flat_map(|r| (0..l2 as i64).map(move |s| (r, s)))
        .filter(|(r, s)| s + 1 - r == c)
        .count() as u32;
    let rhs = chi(l, l2, c) + chi(k - l, k2 - l2, c + l as i64 - l2 as i64) + cross1 + cross2;
    Ok((lhs, rhs))
}

pub fn chi_inequality_holds(k: u32, k2: u32, l: u32, l2: u32, c: i64) -> Result<bool, CombinatError> {
    chi_inequality_sides(k, k2, l, l2, c).map(|(lhs, rhs)| lhs <= rhs)
}
