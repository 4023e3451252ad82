use hessdd::{
    act, expand_in_basis, CohomologyClass, Monomial, Polynomial, Rational, RootSystem, WeylGroup,
};
use proptest::prelude::*;

fn group(t: &str) -> WeylGroup {
    WeylGroup::new(RootSystem::new(t.parse().unwrap()).unwrap())
}

fn poly(nvars: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((prop::collection::vec(0u8..3, nvars), -5i64..=5), 0..5).prop_map(
        move |terms| {
            Polynomial::from_terms(
                nvars,
                terms.into_iter().map(|(e, c)| {
                    (
                        Monomial::from_exponents(&e),
                        Rational::from_integer(c.into()),
                    )
                }),
            )
        },
    )
}

proptest! {
    #[test]
    fn act_is_a_group_action(p in poly(2)) {
        let g = group("A2");
        for a in 0..g.order() {
            for b in 0..g.order() {
                prop_assert_eq!(act(&g, g.mul(a, b), &p), act(&g, a, &act(&g, b, &p)));
            }
        }
    }

    #[test]
    fn divide_round_trip(p in poly(3)) {
        let rs = RootSystem::new("A3".parse().unwrap()).unwrap();
        for id in 0..rs.n_positive() {
            let l = Polynomial::linear(rs.coords(id));
            let q = (&p * &l).divide_exact(&l);
            prop_assert_eq!(q, Some(p.clone()));
        }
    }

    #[test]
    fn b2_divide_round_trip(p in poly(2)) {
        let rs = RootSystem::new("B2".parse().unwrap()).unwrap();
        for id in 0..rs.n_positive() {
            prop_assert_eq!((&p * &Polynomial::linear(rs.coords(id))).divide_by_linear(rs.coords(id)), Some(p.clone()));
        }
    }

    /// A removed set is accepted exactly when it is closed upward in the
    /// dominance order.
    #[test]
    fn a3_removed_sets(bits in 0u32..64) {
        let rs = RootSystem::new("A3".parse().unwrap()).unwrap();
        let n = rs.n_positive();
        let removed: Vec<usize> = (0..n).filter(|i| bits & (1 << i) != 0).collect();
        let upward = removed.iter().all(|&r| {
            (0..n).all(|q| !rs.dominance_leq_ids(r, q) || removed.contains(&q))
        });
        let roots: Vec<_> = removed.iter().map(|&r| rs.root(r).clone()).collect();
        prop_assert_eq!(rs.make_hessenberg(&roots).is_ok(), upward);
    }

    #[test]
    fn expand_round_trip(coeffs in prop::collection::vec(poly(2), 6)) {
        let g = group("A2");
        let fam = hessdd::build_family(&g).unwrap();
        let h = fam.hessenberg();
        let mut target = CohomologyClass::zero(&g);
        for (x, f) in coeffs.iter().enumerate() {
            target = target.add(&fam.class(x).scale(f));
        }
        let got = expand_in_basis(&g, h, &target, fam.classes()).unwrap();
        prop_assert_eq!(got, coeffs);
    }
}
