use level2::gf::{divisors, mobius, Elem, FieldElement, FieldTower, GfError, PrimePower};
use proptest::prelude::*;

const SMALL_TOWERS: &[(u64, u32)] = &[(3, 1), (3, 2), (3, 3), (3, 4), (3, 6), (5, 1), (5, 2), (5, 4), (7, 2), (9, 2), (25, 1)];

#[test]
fn subfields_have_the_right_size() {
    for &(q, m) in SMALL_TOWERS {
        let t = FieldTower::new(q, m).unwrap();
        for d in divisors(m) {
            let n = t.elements().filter(|&x| d % t.subfield_degree(x) == 0).count() as u64;
            assert_eq!(n, q.pow(d), "F_{q}^{m}, d = {d}");
            assert_eq!(t.subfield_elements(d).len() as u64, q.pow(d));
        }
    }
}

#[test]
fn strict_elements_follow_the_mobius_count() {
    for &(q, m) in SMALL_TOWERS {
        let t = FieldTower::new(q, m).unwrap();
        let strict = t.elements().filter(|&x| t.subfield_degree(x) == m).count() as i64;
        let expected: i64 = divisors(m).iter().map(|&d| mobius(m / d) * q.pow(d) as i64).sum();
        assert_eq!(strict, expected, "F_{q}^{m}");
        for x in t.elements() {
            assert_eq!(m % t.subfield_degree(x), 0);
            assert_eq!(t.frobenius(x, t.subfield_degree(x)), x);
        }
    }
}

#[test]
fn exp_log_round_trip_up_to_three_to_the_twelve() {
    for m in [1u32, 5, 7, 12] {
        let t = FieldTower::new(3, m).unwrap();
        for x in t.elements().filter(|x| !x.is_zero()) {
            assert_eq!(t.exp(x.log().unwrap() as i64), x);
        }
        assert_eq!(t.exp(t.order() as i64 - 1), Elem::ONE);
    }
}

#[test]
fn embedded_subfield_matches_the_small_field() {
    // F_9 inside F_{3^4}: the index-scaled generator has the right minimal behaviour
    let t = FieldTower::new(3, 4).unwrap();
    let stride = t.subfield_stride(2);
    assert_eq!(stride, 80 / 8);
    let g = t.exp(stride as i64);
    assert_eq!(t.subfield_degree(g), 2);
    assert_eq!(t.pow(g, 8), Elem::ONE);
}

#[test]
fn rejects_unsupported_fields() {
    assert!(matches!(PrimePower::new(4), Err(GfError::EvenCharacteristic(4))));
    assert!(matches!(PrimePower::new(15), Err(GfError::NotPrimePower(15))));
    assert!(matches!(FieldTower::new(5, 15), Err(GfError::ExtensionTooLarge { .. })));
    let a = FieldTower::new(3, 2).unwrap();
    let b = FieldTower::new(3, 2).unwrap();
    let x = FieldElement::new(&a, Elem::ONE);
    let y = FieldElement::new(&b, Elem::ONE);
    assert!(matches!(x.add(y), Err(GfError::TowerMismatch)));
    assert!(matches!(x.add(x).unwrap().inv(), Ok(_)));
    assert!(matches!(a.inv(Elem::ZERO), Err(GfError::DivisionByZero)));
}

fn tower_and_elems() -> impl Strategy<Value = (usize, u32, u32, u32)> {
    (0..SMALL_TOWERS.len(), any::<u32>(), any::<u32>(), any::<u32>())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn field_axioms((ti, a, b, c) in tower_and_elems()) {
        let (q, m) = SMALL_TOWERS[ti];
        let t = FieldTower::new(q, m).unwrap();
        let pick = |v: u32| t.from_code(v % t.order());
        let (a, b, c) = (pick(a), pick(b), pick(c));
        prop_assert_eq!(t.add(a, b), t.add(b, a));
        prop_assert_eq!(t.mul(a, b), t.mul(b, a));
        prop_assert_eq!(t.mul(a, t.add(b, c)), t.add(t.mul(a, b), t.mul(a, c)));
        prop_assert_eq!(t.add(t.add(a, b), c), t.add(a, t.add(b, c)));
        prop_assert_eq!(t.add(a, t.neg(a)), Elem::ZERO);
        prop_assert_eq!(t.sub(t.add(a, b), b), a);
        if !a.is_zero() {
            prop_assert_eq!(t.mul(a, t.inv(a).unwrap()), Elem::ONE);
        }
        prop_assert_eq!(t.to_code(t.from_code(t.to_code(a))), t.to_code(a));
    }

    #[test]
    fn frobenius_is_a_ring_map((ti, a, b, k) in tower_and_elems()) {
        let (q, m) = SMALL_TOWERS[ti];
        let t = FieldTower::new(q, m).unwrap();
        let pick = |v: u32| t.from_code(v % t.order());
        let (a, b, k) = (pick(a), pick(b), k % (m + 1));
        prop_assert_eq!(t.frobenius(t.add(a, b), k), t.add(t.frobenius(a, k), t.frobenius(b, k)));
        prop_assert_eq!(t.frobenius(t.mul(a, b), k), t.mul(t.frobenius(a, k), t.frobenius(b, k)));
        prop_assert_eq!(t.frobenius(a, 1), t.pow(a, q));
        prop_assert_eq!(t.frobenius(a, m), a);
    }
}
