//! Cartan relations and the E/F commutator in the operator image.

use qshuffle::diffop::dop_eq;
use qshuffle::phi::{cartan_relation_check, relation_lhs, relation_rhs, CartanRelation, CoulombContext};
use qshuffle::quiver::Quiver;
use qshuffle::ring::LaurentPoly;
use qshuffle::shuffle::{gen_e, gen_f, z};

fn main() {
    let q = Quiver::jordan().with_framing(&[1], &[1]);
    let alphabet = q.alphabet();
    let ctx = CoulombContext::new(&q, vec![2]).unwrap();
    let e = gen_e(&q, vec![1], LaurentPoly::var(z(0, 1))).unwrap();
    let f = gen_f(&q, vec![1], LaurentPoly::one()).unwrap();
    for which in CartanRelation::ALL {
        let elem = match which.side() {
            Some(qshuffle::shuffle::Side::Minus) => &f,
            _ => &e,
        };
        let ok = cartan_relation_check(&ctx, which, elem, 0, 1).unwrap();
        println!("{which:<10} {}", if ok { "holds" } else { "fails" });
    }

    let lhs = relation_lhs(&ctx, 0, 0, 1, 0).unwrap();
    let rhs = relation_rhs(&ctx, 0, 0, 1, 0).unwrap();
    println!("[e_1, f_0] = {}", lhs.write(&alphabet));
    println!("series side = {}", rhs.write(&alphabet));
    println!("equal as stated: {}", dop_eq(&lhs, &rhs));
}
