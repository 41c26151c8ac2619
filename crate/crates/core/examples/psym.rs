//! Products attached to an I-partition and their specializations.

use qshuffle::quiver::{i_partitions, partition_greater, IPartition, Quiver};
use qshuffle::ring::LaurentPoly;
use qshuffle::shuffle::{psym_blocks, psym_factored_product, psym_product, spec_p, z};

fn main() {
    let q = Quiver::a1();
    let p = IPartition::new(vec![vec![2, 1]]).unwrap();
    let gs: Vec<LaurentPoly> = psym_blocks(&p)
        .iter()
        .map(|m| (1..=m[0] as usize).map(|a| LaurentPoly::var(z(0, a))).sum())
        .collect();
    let e = psym_product(&q, &p, &gs).unwrap();
    println!("pSym for {p}: {} terms", e.poly().len());
    for other in i_partitions(&[3]) {
        let s = spec_p(&e, other.as_composition()).unwrap();
        let greater = partition_greater(&other, &p).unwrap();
        println!("  spec at {other}: {} terms{}", s.len(), if greater { " (greater)" } else { "" });
    }
    let closed = psym_factored_product(&q, &p, &gs);
    println!("matches the factored product: {}", spec_p(&e, p.as_composition()).unwrap() == closed);
}
