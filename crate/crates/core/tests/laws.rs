//! Property tests for the algebraic layers: ring laws in Q[t], the
//! congruence split and truncation homomorphism, the unipotent group law
//! against its matrix embedding, and the degree-n label homomorphism.

use proptest::prelude::*;

use sector_core::matrix::{Mat3, Unipotent};
use sector_core::poly::{ratio, Poly, Rat};

fn arb_rat() -> impl Strategy<Value = Rat> {
    (-30i64..=30, 1i64..=6).prop_map(|(n, d)| ratio(n, d))
}

fn arb_poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec(arb_rat(), 0..=13).prop_map(Poly::from_coeffs)
}

fn arb_unipotent() -> impl Strategy<Value = Unipotent> {
    (arb_poly(), arb_poly(), arb_poly()).prop_map(|(x, y, z)| Unipotent::new(x, y, z))
}

proptest! {
    #[test]
    fn poly_add_commutes(a in arb_poly(), b in arb_poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
    }

    #[test]
    fn poly_add_associates(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
    }

    #[test]
    fn poly_mul_commutes(a in arb_poly(), b in arb_poly()) {
        prop_assert_eq!(&a * &b, &b * &a);
    }

    #[test]
    fn poly_mul_associates(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn poly_distributes(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn poly_degree_of_product_adds(a in arb_poly(), b in arb_poly()) {
        use sector_core::poly::Degree;
        match (a.degree(), b.degree()) {
            (Degree::Fin(da), Degree::Fin(db)) => {
                prop_assert_eq!((&a * &b).degree(), Degree::Fin(da + db));
            }
            _ => prop_assert_eq!((&a * &b).degree(), Degree::NegInf),
        }
    }

    #[test]
    fn split_reassembles(p in arb_poly(), n in 0usize..=14) {
        let (high, low) = p.split(n);
        prop_assert_eq!(&high + &low, p.clone());
        prop_assert!(low.degree().at_most(n as i64));
        prop_assert!(high.in_ideal(n));
        prop_assert_eq!(p.truncate(n), low);
    }

    #[test]
    fn truncation_is_a_ring_homomorphism(a in arb_poly(), b in arb_poly(), n in 0usize..=10) {
        prop_assert_eq!((&a * &b).truncate(n), (&a.truncate(n) * &b.truncate(n)).truncate(n));
        prop_assert_eq!((&a + &b).truncate(n), &a.truncate(n) + &b.truncate(n));
    }

    #[test]
    fn unipotent_matches_matrix_product(u in arb_unipotent(), v in arb_unipotent()) {
        prop_assert_eq!((&u * &v).embed(), &u.embed() * &v.embed());
    }

    #[test]
    fn unipotent_inverse_embeds(u in arb_unipotent()) {
        prop_assert_eq!(&u.embed() * &u.inverse().embed(), Mat3::identity());
    }

    #[test]
    fn heisenberg_commutator_relation(a in arb_poly(), b in arb_poly()) {
        let c = Unipotent::commutator(&Unipotent::e12(a.clone()), &Unipotent::e23(b.clone()));
        prop_assert_eq!(c, Unipotent::e13(&a * &b));
    }

    #[test]
    fn inverted_commutators_agree(u in arb_unipotent(), v in arb_unipotent()) {
        prop_assert_eq!(
            Unipotent::commutator(&u.inverse(), &v),
            Unipotent::commutator(&u, &v.inverse())
        );
    }

    #[test]
    fn label_is_additive(u in arb_unipotent(), v in arb_unipotent(), n in 0usize..=10) {
        let (a1, b1) = u.label(n);
        let (a2, b2) = v.label(n);
        prop_assert_eq!((&u * &v).label(n), (a1 + a2, b1 + b2));
    }

    #[test]
    fn label_kills_congruence_elements(x in arb_poly(), y in arb_poly(), z in arb_poly(), n in 0usize..=8) {
        let shift = Poly::t_pow(n + 1);
        let u = Unipotent::new(&x * &shift, &y * &shift, &z * &shift);
        prop_assert!(u.in_congruence_subgroup(n));
        prop_assert_eq!(u.label(n), (Rat::from_integer(0.into()), Rat::from_integer(0.into())));
    }

    #[test]
    fn quotient_multiplication_matches(u in arb_unipotent(), v in arb_unipotent(), n in 0usize..=8) {
        prop_assert_eq!((&u * &v).truncate(n), &u.truncate(n) * &v.truncate(n));
        prop_assert!((&u.truncate(n) * &u.inverse().truncate(n)).is_identity());
    }

    #[test]
    fn congruence_split_parts(u in arb_unipotent(), n in 0usize..=8) {
        let (high, low) = u.split_at(n);
        prop_assert_eq!(&high * &low, u);
        prop_assert!(high.in_congruence_subgroup(n));
        prop_assert!(low.x.degree().at_most(n as i64));
        prop_assert!(low.y.degree().at_most(n as i64));
        prop_assert!(low.z.degree().at_most(n as i64));
    }
}
