//! Images of shuffle elements as q-difference operators: residues against
//! the closed form, and multiplicativity on a product.

use qshuffle::diffop::{dop_eq, dop_mul};
use qshuffle::phi::{phi_gen, phi_residue, CoulombContext};
use qshuffle::quiver::Quiver;
use qshuffle::ring::LaurentPoly;
use qshuffle::shuffle::{gen_e, shuffle_mul, z, Generator, Side};

fn main() {
    let q = Quiver::kronecker().with_framing(&[1, 0], &[0, 1]);
    let alphabet = q.alphabet();
    let ctx = CoulombContext::new(&q, vec![1, 2]).unwrap();

    let g = LaurentPoly::var(z(1, 1)) + LaurentPoly::var(z(1, 2));
    let gen = Generator::new(&q, Side::Plus, vec![0, 2], g).unwrap();
    let residue = phi_residue(&ctx, &gen.element()).unwrap();
    println!("Phi(e) = {}", residue.write(&alphabet));
    println!("closed form agrees: {}", dop_eq(&residue, &phi_gen(&ctx, &gen)));

    let a = gen_e(&q, vec![1, 0], LaurentPoly::one()).unwrap();
    let b = gen_e(&q, vec![0, 1], LaurentPoly::var(z(1, 1))).unwrap();
    let lhs = phi_residue(&ctx, &shuffle_mul(&q, &a, &b).unwrap()).unwrap();
    let rhs = dop_mul(&phi_residue(&ctx, &a).unwrap(), &phi_residue(&ctx, &b).unwrap());
    println!("Phi(a * b) == Phi(a) Phi(b): {}", dop_eq(&lhs, &rhs));
}
