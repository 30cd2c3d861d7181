//! Algebraic laws checked on generated inputs.

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use rlak::algebra::{self, RestrictedLieAlgebra};
use rlak::field::FiniteField;
use rlak::freerla::build_algebra;
use rlak::freerla::expr::Expr;
use rlak::orepoly::{DivSide, OrePoly};
use rlak::presentation::{abelianize, apply_transform, ideals_agree, transform_definitions, GenTransform, Presentation};

const ORDERS: [u32; 6] = [2, 3, 4, 8, 9, 25];

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig { cases, ..ProptestConfig::default() }
}

proptest! {
    #![proptest_config(config(64))]

    #[test]
    fn field_laws(qi in 0..ORDERS.len(), seed in any::<u64>()) {
        let f = FiniteField::with_order(ORDERS[qi]).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (a, b, c) = (f.random(&mut rng), f.random(&mut rng), f.random(&mut rng));
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        prop_assert_eq!(f.frobenius(f.add(a, b), 1), f.add(f.frobenius(a, 1), f.frobenius(b, 1)));
        prop_assert_eq!(f.frobenius(a, 1), f.pow(a, f.characteristic() as u64));
        if !a.is_zero() {
            prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), f.from_int(1));
        }
    }

    #[test]
    fn twisted_ring_laws(q in prop::sample::select(vec![2u32, 3, 4, 9]), seed in any::<u64>()) {
        let f = FiniteField::with_order(q).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = OrePoly::random(&f, 5, &mut rng);
        let b = OrePoly::random(&f, 4, &mut rng);
        let c = OrePoly::random(&f, 3, &mut rng);
        prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
        let k = f.random(&mut rng);
        let lhs = OrePoly::t(&f).mul(&OrePoly::constant(&f, k)).unwrap();
        prop_assert_eq!(lhs, OrePoly::monomial(&f, f.frobenius(k, 1), 1));
        if !b.is_zero() {
            let (q1, r1) = a.divide(&b, DivSide::Right).unwrap();
            prop_assert_eq!(q1.mul(&b).unwrap().add(&r1).unwrap(), a.clone());
            let (q2, r2) = a.divide(&b, DivSide::Left).unwrap();
            prop_assert_eq!(b.mul(&q2).unwrap().add(&r2).unwrap(), a.clone());
            prop_assert!(r1.degree() < b.degree() && r2.degree() < b.degree());
        }
    }
}

proptest! {
    #![proptest_config(config(24))]

    #[test]
    fn restricted_lie_laws(q in prop::sample::select(vec![2u32, 3, 4]), seed in any::<u64>()) {
        let f = FiniteField::with_order(q).unwrap();
        let p = f.characteristic() as usize;
        let a = build_algebra(&f, &["x", "y"], 6).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (u, v, w) = (a.random_vector(3, &mut rng), a.random_vector(3, &mut rng), a.random_vector(2, &mut rng));
        prop_assert!(algebra::is_zero(&a.bracket(&u, &u)));
        let jacobi = algebra::add(
            &f,
            &algebra::add(&f, &a.bracket(&u, &a.bracket(&v, &w)), &a.bracket(&v, &a.bracket(&w, &u))),
            &a.bracket(&w, &a.bracket(&u, &v)),
        );
        prop_assert!(algebra::is_zero(&jacobi));
        prop_assert_eq!(a.bracket(&a.pmap(&u), &v), a.ad_pow(&u, p, &v));
        let c = f.random(&mut rng);
        prop_assert_eq!(a.pmap(&algebra::scale(&f, c, &u)), algebra::scale(&f, f.frobenius(c, 1), &a.pmap(&u)));
        let s = algebra::add(&f, &u, &v);
        let defect = algebra::sub(&f, &algebra::sub(&f, &a.pmap(&s), &a.pmap(&u)), &a.pmap(&v));
        prop_assert_eq!(defect, algebra::jacobson_sum(&*a, &u, &v));
    }

    #[test]
    fn transforms_preserve_the_ideal(coef in 1u32..3, e in 0u32..3, bracket in any::<bool>()) {
        let f = FiniteField::prime(3).unwrap();
        let rel = if bracket { "(sum (pp x 1) y (br x y))" } else { "(sum (pp y 1) (sc 2 x))" };
        let p = Presentation::parse(&f, &["x", "y"], &[rel]).unwrap();
        let c = f.from_int(coef as i64);
        let t = GenTransform { target: 1, lambda: c, tail: Expr::pp(Expr::gen(0), e) };
        let out = apply_transform(&p, &t).unwrap();
        prop_assert!(ideals_agree(&p, &out, &transform_definitions(2, &t), 6).unwrap());
        // abelianization transforms by the matching column operation
        let before = abelianize(&p);
        let after = abelianize(&out);
        let lam_inv = f.inv(c).unwrap();
        let col_y = before.entry(0, 1).scale_right(lam_inv);
        let tail = OrePoly::monomial(&f, f.from_int(-1), e as usize).scale_left(lam_inv);
        let col_x = before.entry(0, 0).add(&before.entry(0, 1).mul(&tail).unwrap()).unwrap();
        prop_assert_eq!(after.entry(0, 0), &col_x);
        prop_assert_eq!(after.entry(0, 1), &col_y);
    }
}
