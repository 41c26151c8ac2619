//! Multiplies generators in the shuffle algebra of the Jordan quiver and
//! checks the product against the summand-by-summand rational computation.

use qshuffle::quiver::Quiver;
use qshuffle::ring::{LaurentPoly, Var};
use qshuffle::shuffle::{gen_e, shuffle_mul, shuffle_mul_rational, z};

fn main() {
    let q = Quiver::jordan();
    let alphabet = q.alphabet();
    let a = gen_e(&q, vec![1], LaurentPoly::var(z(0, 1))).unwrap();
    let b = gen_e(&q, vec![1], LaurentPoly::var(Var::q())).unwrap();
    println!("a     = {}", a.write(&alphabet));
    println!("b     = {}", b.write(&alphabet));
    let ab = shuffle_mul(&q, &a, &b).unwrap();
    println!("a * b = {}", ab.write(&alphabet));
    let ba = shuffle_mul(&q, &b, &a).unwrap();
    println!("a * b == b * a: {}", ab == ba);
    let slow = shuffle_mul_rational(&q, &a, &b).unwrap();
    println!("rational route agrees: {}", slow == ab);
}
