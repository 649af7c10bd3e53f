use level2::closedform::{quartic_locus_count, printed_hyperelliptic_cohomology};
use level2::reptheory::*;
use proptest::prelude::*;

#[test]
fn row_and_column_orthogonality() {
    for n in 1..=8 {
        let t = CharacterTable::new(n);
        let k = t.partitions.len();
        for a in 0..k {
            for b in 0..k {
                let rows: i128 =
                    (0..k).map(|c| t.class_sizes[c] as i128 * (t.values[a][c] * t.values[b][c]) as i128).sum();
                assert_eq!(rows, if a == b { factorial(n) as i128 } else { 0 }, "S{n} rows {a},{b}");
                let cols: i128 = (0..k).map(|l| (t.values[l][a] * t.values[l][b]) as i128).sum();
                let z = t.partitions[a].z() as i128;
                assert_eq!(cols, if a == b { z } else { 0 }, "S{n} columns {a},{b}");
            }
        }
        let id = Partition::new(vec![1; n as usize]);
        for irrep in &t.partitions {
            assert_eq!(t.value(irrep, &id) as u128, irrep.dimension());
        }
        assert_eq!(t.class_sizes.iter().sum::<u128>(), factorial(n));
    }
}

#[test]
fn known_character_values() {
    let t = CharacterTable::new(7);
    let v = |a: &str, b: &str| t.value(&a.parse().unwrap(), &b.parse().unwrap());
    assert_eq!(v("[6,1]", "[1^7]"), 6);
    assert_eq!(v("[6,1]", "[2,1^5]"), 4);
    assert_eq!(v("[1^7]", "[2,1^5]"), -1);
    assert_eq!(v("[4,3]", "[7]"), 0);
    // [5,2] is the 2-subset permutation character minus the point one
    assert_eq!(v("[5,2]", "[2,1^5]"), 11 - 5);
    assert_eq!(v("[5,2]", "[3,1^4]"), 6 - 4);
}

#[test]
fn every_quartic_trace_is_integral() {
    let counts = ClassFunction::try_from_fn(7, quartic_locus_count).unwrap();
    let table = CharacterTable::new(7);
    let traces = counts_to_traces(&counts, 6).unwrap();
    assert_eq!(traces.len(), 7);
    assert!(decompose(&traces, &table).is_ok());
}

#[test]
fn restriction_to_s7_appends_a_fixed_point() {
    let f = ClassFunction::from_fn(8, |p| p.len() as i64);
    let r = restrict_class_function(&f);
    for (mu, v) in &r.values {
        assert_eq!(*v, mu.len() as i64 + 1);
    }
}

#[test]
fn hyperelliptic_table_round_trips() {
    let t = printed_hyperelliptic_cohomology();
    let table = CharacterTable::new(7);
    assert_eq!(decompose(&synthesize_traces(&t, &table), &table).unwrap(), t);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn decompose_inverts_synthesis(n in 3u32..=7, rows in prop::collection::vec(prop::collection::vec(0i64..5, 15), 1..4)) {
        let table = CharacterTable::new(n);
        let k = table.partitions.len();
        let t = CohomologyTable {
            dim: rows.len() - 1,
            irreps: table.partitions.clone(),
            rows: rows.iter().map(|r| r[..k].to_vec()).collect(),
        };
        prop_assert_eq!(decompose(&synthesize_traces(&t, &table), &table).unwrap(), t);
    }

    #[test]
    fn partitions_round_trip_through_text(n in 1u32..=9, i in any::<prop::sample::Index>()) {
        let all = Partition::all(n);
        let lam = &all[i.index(all.len())];
        prop_assert_eq!(&lam.to_string().parse::<Partition>().unwrap(), lam);
        prop_assert_eq!(&lam.plain().parse::<Partition>().unwrap(), lam);
        prop_assert_eq!(lam.conjugate().conjugate(), lam.clone());
        prop_assert_eq!(lam.conjugate().dimension(), lam.dimension());
        prop_assert_eq!(factorial(n) % lam.z(), 0);
    }
}
