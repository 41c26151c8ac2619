//! Tests elements of the A2 shuffle algebra against the wheel conditions and
//! prints the certificate of a failure.

use qshuffle::quiver::Quiver;
use qshuffle::ring::LaurentPoly;
use qshuffle::shuffle::{gen_e, is_integral, shuffle_product, Integrality, ShuffleElement, Side};

fn report(q: &Quiver, label: &str, e: &ShuffleElement) {
    match is_integral(q, e) {
        Integrality::Pass => println!("{label}: PASS"),
        Integrality::Fail(c) => println!("{label}: FAIL\n{}", c.write(&q.alphabet())),
    }
}

fn main() {
    let q = Quiver::a2();
    let e1 = gen_e(&q, vec![1, 0], LaurentPoly::one()).unwrap();
    let e2 = gen_e(&q, vec![0, 1], LaurentPoly::one()).unwrap();
    let e11 = gen_e(&q, vec![1, 1], LaurentPoly::one()).unwrap();
    report(&q, "e1 * e2 * e11", &shuffle_product(&q, &[e1, e2, e11]).unwrap());
    let bare = ShuffleElement::new(&q, Side::Plus, vec![1, 1], LaurentPoly::one()).unwrap();
    report(&q, "constant 1 in degree (1,1)", &bare);
}
