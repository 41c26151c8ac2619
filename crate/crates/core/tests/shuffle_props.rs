use proptest::prelude::*;

use qshuffle::harness::Sampler;
use qshuffle::quiver::{chi, Quiver};
use qshuffle::ring::LaurentPoly;
use qshuffle::shuffle::{
    gen_e, is_integral, localized_wheel_holds, shuffle_mul, shuffle_mul_rational, shuffle_product, xi, z,
    ShuffleElement, Side,
};

fn fixture() -> impl Strategy<Value = Quiver> {
    prop::sample::select(Quiver::fixtures().into_iter().map(|(_, q)| q).collect::<Vec<_>>())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn products_are_associative(q in fixture(), seed in any::<u64>()) {
        let mut s = Sampler::new(seed, 0, (-1, 1), 2);
        let side = if seed % 2 == 0 { Side::Plus } else { Side::Minus };
        let a = s.generator(&q, side, 1);
        let b = s.generator(&q, side, 1);
        let c = s.generator(&q, side, 1);
        let left = shuffle_mul(&q, &shuffle_mul(&q, &a, &b).unwrap(), &c).unwrap();
        let right = shuffle_mul(&q, &a, &shuffle_mul(&q, &b, &c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn polynomial_product_matches_rational_sum(q in fixture(), seed in any::<u64>()) {
        let mut s = Sampler::new(seed, 1, (-1, 1), 2);
        let a = s.generator(&q, Side::Plus, 2);
        let b = s.generator(&q, Side::Plus, 1);
        prop_assert_eq!(shuffle_mul(&q, &a, &b).unwrap(), shuffle_mul_rational(&q, &a, &b).unwrap());
    }

    #[test]
    fn generator_products_are_integral(q in fixture(), seed in any::<u64>()) {
        let e = Sampler::new(seed, 2, (-1, 1), 3).product(&q, Side::Plus, 3, 3);
        prop_assert!(is_integral(&q, &e).passed());
        for i in 0..q.num_vertices() {
            prop_assert_ne!(localized_wheel_holds(&q, &e, i), Some(false));
        }
    }

    #[test]
    fn chi_sum(n in 0u32..6, m in 0u32..6) {
        let total: u32 = (-8..=8).map(|c| chi(n, m, c)).sum();
        prop_assert_eq!(total, n * m - n.min(m));
    }

    #[test]
    fn xi_is_multiplication(q in fixture(), seed in any::<u64>()) {
        let e = Sampler::new(seed, 3, (-1, 1), 2).generator(&q, Side::Plus, 2);
        let image = xi(&q, &e);
        prop_assert_eq!(image.hdeg, e.hdeg().to_vec());
    }
}

#[test]
fn identity_is_neutral() {
    let q = Quiver::jordan();
    let one = ShuffleElement::identity(&q, Side::Plus);
    let e = gen_e(&q, vec![2], LaurentPoly::var(z(0, 1)) + LaurentPoly::var(z(0, 2))).unwrap();
    assert_eq!(shuffle_mul(&q, &one, &e).unwrap(), e);
    assert_eq!(shuffle_mul(&q, &e, &one).unwrap(), e);
}

#[test]
fn a1_degree_one_product() {
    // 1 * 1 on A1: the symmetrization of (z1 - z2 q^-1)/(z1 - z2) with both prefactors
    let q = Quiver::a1();
    let e = gen_e(&q, vec![1], LaurentPoly::one()).unwrap();
    let p = shuffle_product(&q, &[e.clone(), e]).unwrap();
    assert_eq!(p.hdeg(), &[2]);
    assert!(is_integral(&q, &p).passed());
}
