use num_rational::BigRational;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rowmotion_core::algebra::{parallel_sum, random_labeling, sum, AlgebraBackend, MatrixRing, RationalField, TropicalSemiring};
use rowmotion_core::dynamics::Dynamics;
use rowmotion_core::pl;
use rowmotion_core::Poset;

fn axioms<B: AlgebraBackend>(b: &B, seed: u64) -> Result<(), TestCaseError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (x, y, z) = (b.sample(&mut rng), b.sample(&mut rng), b.sample(&mut rng));
    let one = b.one();
    prop_assert!(b.equals(&b.add(&b.add(&x, &y), &z), &b.add(&x, &b.add(&y, &z))));
    prop_assert!(b.equals(&b.add(&x, &y), &b.add(&y, &x)));
    prop_assert!(b.equals(&b.mul(&b.mul(&x, &y), &z), &b.mul(&x, &b.mul(&y, &z))));
    prop_assert!(b.equals(&b.mul(&x, &b.add(&y, &z)), &b.add(&b.mul(&x, &y), &b.mul(&x, &z))));
    prop_assert!(b.equals(&b.mul(&b.add(&y, &z), &x), &b.add(&b.mul(&y, &x), &b.mul(&z, &x))));
    prop_assert!(b.equals(&b.mul(&x, &one), &x) && b.equals(&b.mul(&one, &x), &x));
    let xi = b.inv(&x).expect("samples are invertible");
    prop_assert!(b.equals(&b.mul(&x, &xi), &one) && b.equals(&b.mul(&xi, &x), &one));
    let c = b.constant_c();
    prop_assert!(b.is_central(&c));
    prop_assert!(b.equals(&b.mul(&c, &x), &b.mul(&x, &c)));
    let s = b.sample_central(&mut rng);
    prop_assert!(b.equals(&b.mul(&s, &y), &b.mul(&y, &s)));
    if b.is_commutative() {
        prop_assert!(b.equals(&b.mul(&x, &y), &b.mul(&y, &x)));
    }
    Ok(())
}

fn reciprocity<B: AlgebraBackend>(b: &B, seed: u64, k: usize) -> Result<(), TestCaseError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let xs: Vec<B::Elem> = (0..k).map(|_| b.sample(&mut rng)).collect();
    let ps = parallel_sum(b, &xs).unwrap();
    let s = sum(b, xs.iter().map(|x| b.inv(x).unwrap())).unwrap();
    prop_assert!(b.equals(&b.mul(&ps, &s), &b.one()));
    prop_assert!(b.equals(&b.mul(&s, &ps), &b.one()));
    if k == 2 {
        // x ∥ y = y (x+y)⁻¹ x = x (x+y)⁻¹ y
        let t = b.inv(&b.add(&xs[0], &xs[1])).unwrap();
        prop_assert!(b.equals(&ps, &b.mul(&b.mul(&xs[1], &t), &xs[0])));
        prop_assert!(b.equals(&ps, &b.mul(&b.mul(&xs[0], &t), &xs[1])));
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn rational_axioms(seed in any::<u64>(), k in 1usize..6) {
        axioms(&RationalField::default(), seed)?;
        reciprocity(&RationalField::default(), seed, k)?;
    }

    #[test]
    fn matrix_axioms(seed in any::<u64>(), d in 1usize..4, k in 1usize..5) {
        axioms(&MatrixRing::new(d), seed)?;
        reciprocity(&MatrixRing::new(d), seed, k)?;
    }

    #[test]
    fn tropical_axioms(seed in any::<u64>(), k in 1usize..6) {
        axioms(&TropicalSemiring::default(), seed)?;
        reciprocity(&TropicalSemiring::default(), seed, k)?;
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn elggots_undo_toggles_with_matrix_labels(n in 1usize..7, density in 0.0f64..0.8, seed in any::<u64>()) {
        let p = Poset::random(n, density, seed);
        let b = MatrixRing::new(2);
        let d = Dynamics::new(&p, b.clone());
        let g = random_labeling(&b, &p, seed);
        for v in p.elements() {
            prop_assert_eq!(&d.order_elggot(v, &d.order_toggle(v, &g).unwrap()).unwrap(), &g);
            prop_assert_eq!(&d.antichain_elggot(v, &d.antichain_toggle(v, &g).unwrap()).unwrap(), &g);
        }
    }

    #[test]
    fn transfer_maps_invert_each_other(n in 1usize..8, density in 0.0f64..0.8, seed in any::<u64>()) {
        let p = Poset::random(n, density, seed);
        let b = MatrixRing::new(2);
        let d = Dynamics::new(&p, b.clone());
        let g = random_labeling(&b, &p, seed);
        prop_assert_eq!(&d.down_transfer(&d.inv_down_transfer(&g).unwrap()).unwrap(), &g);
        prop_assert_eq!(&d.up_transfer(&d.inv_up_transfer(&g).unwrap()).unwrap(), &g);
        prop_assert_eq!(&d.inv_down_transfer(&d.down_transfer(&g).unwrap()).unwrap(), &g);
        prop_assert_eq!(&d.theta(&d.theta(&g).unwrap()).unwrap(), &g);
    }

    #[test]
    fn piecewise_linear_toggles_stay_in_their_polytopes(n in 1usize..8, density in 0.0f64..0.8, seed in any::<u64>()) {
        let p = Poset::random(n, density, seed);
        let f = pl::random_order_point(&p, seed, 9);
        let g = pl::random_chain_point(&p, seed, 9);
        prop_assert!(pl::in_order_polytope(&p, &f));
        prop_assert!(pl::in_chain_polytope(&p, &g));
        for v in p.elements() {
            let t = pl::pl_order_toggle(&p, v, &f).unwrap();
            prop_assert!(pl::in_order_polytope(&p, &t));
            prop_assert_eq!(&pl::pl_order_toggle(&p, v, &t).unwrap(), &f);
            let tau = pl::pl_antichain_toggle(&p, v, &g).unwrap();
            prop_assert!(pl::in_chain_polytope(&p, &tau));
            prop_assert_eq!(&pl::pl_antichain_toggle(&p, v, &tau).unwrap(), &g);
        }
        let r = pl::pl_antichain_rowmotion(&p, &g).unwrap();
        prop_assert!(pl::in_chain_polytope(&p, &r));
        let zero: Vec<BigRational> = vec![BigRational::from_integer(0.into()); p.len()];
        prop_assert!(pl::in_chain_polytope(&p, &zero));
    }
}
