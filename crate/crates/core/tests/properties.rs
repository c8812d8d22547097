use proptest::prelude::*;
use suzuki_core::curve::Curve;
use suzuki_core::expr::parse_expression;
use suzuki_core::rewrite::{reduce, Coeff};
use suzuki_core::tuples::{decompose_unit_sum, normalize};
use suzuki_core::{make_params, ExponentTuple, FFPoly, FieldElement, Gf2, GfField, SemigroupTable};

fn tuple(max: u64) -> impl Strategy<Value = ExponentTuple> {
    (0..=max, 0..=max, 0..=max, 0..=max).prop_map(|(a, b, c, d)| ExponentTuple::new(a, b, c, d))
}

fn poly(max: u64) -> impl Strategy<Value = FFPoly> {
    prop::collection::vec(tuple(max), 0..6).prop_map(|ts| {
        let mut p = FFPoly::zero();
        for t in ts {
            p.add_term(t, Gf2::ONE);
        }
        p
    })
}

proptest! {
    #[test]
    fn normalize_is_canonical_and_norm_preserving(n in 1u32..=3, t in tuple(20)) {
        let p = make_params(n).unwrap();
        let c = normalize(t, &p);
        prop_assert!(c.tuple().is_canonical(&p));
        prop_assert_eq!(c.tuple().norm(&p), t.norm(&p));
        prop_assert_eq!(normalize(c.tuple(), &p), c);
    }

    #[test]
    fn canonical_norms_are_in_semigroup(t in tuple(12)) {
        let p = make_params(2).unwrap();
        let s = normalize(t, &p).tuple().norm(&p);
        let table = SemigroupTable::build(p, s + 1);
        prop_assert!(table.contains(s).unwrap());
    }

    #[test]
    fn unit_sum_decomposition_adds_up(t in tuple(5), extra in 0u64..4) {
        let total = t.weight() + extra;
        let parts = decompose_unit_sum(t, total).unwrap();
        prop_assert_eq!(parts.len() as u64, total);
        prop_assert!(parts.iter().all(|p| p.weight() <= 1));
        let sum = parts.into_iter().fold(ExponentTuple::ZERO, |acc, p| acc + p);
        prop_assert_eq!(sum, t);
    }

    #[test]
    fn reduction_is_idempotent_and_canonical(f in poly(6)) {
        let p = make_params(2).unwrap();
        let r = reduce(&f, &p).unwrap();
        prop_assert!(r.is_canonical(&p));
        prop_assert_eq!(reduce(&r, &p).unwrap(), r);
    }

    #[test]
    fn reduction_is_additive(f in poly(5), g in poly(5)) {
        let p = make_params(1).unwrap();
        let lhs = reduce(&f.add(&g), &p).unwrap();
        let rhs = reduce(&f, &p).unwrap().add(&reduce(&g, &p).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn reduction_preserves_values_on_points(f in poly(5), idx in 0usize..64) {
        let p = make_params(1).unwrap();
        let curve = Curve::new(p).unwrap();
        let pts = curve.enumerate_points();
        let pt = pts[idx % pts.len()];
        let r = reduce(&f, &p).unwrap();
        prop_assert_eq!(curve.eval_ffpoly(&f, pt), curve.eval_ffpoly(&r, pt));
    }

    #[test]
    fn printed_polynomials_parse_back(f in poly(4)) {
        let text = f.to_string();
        prop_assert_eq!(parse_expression(&text).unwrap(), f);
    }

    #[test]
    fn field_inverse_and_frobenius(n in 1u32..=4, raw in any::<u32>()) {
        let f = GfField::for_suzuki(n).unwrap();
        let a = FieldElement(raw % f.order() as u32);
        if !a.is_zero() {
            prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), FieldElement::ONE);
        }
        prop_assert_eq!(f.pow(a, f.order()), a);
        let s = f.sqrt(a);
        prop_assert_eq!(f.mul(s, s), a);
    }
}
