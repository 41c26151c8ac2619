use proptest::prelude::*;

use qshuffle::harness::parse_poly;
use qshuffle::quiver::Quiver;
use qshuffle::ring::{mono_bindings, LaurentPoly, Monomial, RationalFn, Var};

fn vars() -> [Var; 4] {
    [Var::q(), Var::arrow(0), Var::z(0, 1), Var::z(0, 2)]
}

fn poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((prop::array::uniform4(-2i32..=2), -4i64..=4), 0..5).prop_map(|terms| {
        LaurentPoly::from_terms(terms.into_iter().map(|(e, c)| {
            let m = Monomial::from_pairs(vars().into_iter().zip(e));
            (m, c.into())
        }))
    })
}

fn nonzero_poly() -> impl Strategy<Value = LaurentPoly> {
    poly().prop_filter("nonzero", |p| !p.is_zero())
}

proptest! {
    #[test]
    fn ring_laws(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        prop_assert_eq!(&a * &LaurentPoly::one(), a);
    }

    #[test]
    fn exact_division(a in poly(), b in nonzero_poly()) {
        prop_assert_eq!((&a * &b).divexact(&b), Some(a));
    }

    #[test]
    fn division_remainder(a in poly(), b in nonzero_poly()) {
        let (quot, rem) = a.div_rem(&b);
        let back = &(&quot * &b) + &rem;
        prop_assert!(RationalFn::from_poly(back).rat_eq(&RationalFn::from_poly(a)));
    }

    #[test]
    fn fractions(a in poly(), b in nonzero_poly(), c in poly(), d in nonzero_poly()) {
        let x = RationalFn::new(a.clone(), b.clone()).unwrap();
        let y = RationalFn::new(c.clone(), d.clone()).unwrap();
        let sum = RationalFn::new(&(&a * &d) + &(&c * &b), &b * &d).unwrap();
        prop_assert!(x.add(&y).rat_eq(&sum));
        let prod = RationalFn::new(&a * &c, &b * &d).unwrap();
        prop_assert!(x.mul(&y).rat_eq(&prod));
        prop_assert!(x.sub(&x).is_zero());
        let scaled = RationalFn::new(&a * &d, &b * &d).unwrap();
        prop_assert!(x.rat_eq(&scaled));
    }

    #[test]
    fn substitution_is_multiplicative(a in poly(), b in poly(), e in -2i32..=2) {
        let s = mono_bindings([(Var::z(0, 1), Monomial::from_pairs([(Var::q(), e), (Var::z(0, 2), 1)]))]);
        let ev = |p: &LaurentPoly| p.substitute(&s).unwrap();
        prop_assert_eq!(ev(&(&a * &b)), &ev(&a) * &ev(&b));
        prop_assert_eq!(ev(&(&a + &b)), &ev(&a) + &ev(&b));
    }

    #[test]
    fn canonical_print_parses_back(a in poly()) {
        let q = Quiver::jordan();
        let text = a.write(&q.alphabet());
        prop_assert_eq!(parse_poly(&text, &q).unwrap(), a);
    }
}

#[test]
fn canonical_form_example() {
    let q = Quiver::a1();
    let p = parse_poly("1 - q^-1*z[1,1]*z[1,2]^-1", &q).unwrap();
    assert_eq!(p.write(&q.alphabet()), "1 - q^-1*z[1,1]*z[1,2]^-1");
}
