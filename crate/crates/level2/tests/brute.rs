use level2::brute::{
    count_delta_components, count_fixed_delta_components, count_fixed_septuples, count_fixed_tuples, count_m0n_fixed,
    enumerate_conjugate_tuples, Ambient, BruteError, BruteOptions, CycleLayout, ExecMode, Strategy,
};
use level2::closedform::{decomposition, m08_count, quartic_locus_count, FormulaEntry, USpec};
use level2::gf::FieldTower;
use level2::projgeom::{count_conjugate_tuples, projective_counts, PlanePoint};
use level2::reptheory::Partition;
use proptest::prelude::{prop_assert_eq, prop_assume, proptest, ProptestConfig};

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

#[test]
fn quartic_counts_at_three_match_table() {
    for lam in Partition::all(7) {
        let r = count_fixed_septuples(&lam, 3, Strategy::Auto).unwrap();
        let expected = quartic_locus_count(&lam).unwrap().eval(3);
        assert_eq!(r.quotient_count, expected, "{lam}");
        assert_eq!(r.raw_general_position, r.pgl_order * r.quotient_count);
    }
}

#[test]
fn spec_examples() {
    assert_eq!(count_fixed_septuples(&p("[2,5]"), 3, Strategy::Auto).unwrap().quotient_count, 720);
    assert_eq!(count_fixed_septuples(&p("[7]"), 3, Strategy::Auto).unwrap().quotient_count, 756);
    let r = count_fixed_septuples(&p("[1^7]"), 3, Strategy::FrameFix).unwrap();
    assert_eq!((r.quotient_count, r.strategy), (0, Strategy::FrameFix));
}

#[test]
fn representative_independence_for_five_two() {
    let opts = BruteOptions::with_strategy(Strategy::QuotientDivide);
    let a = CycleLayout::from_cycle_notation(7, "(12)(34567)").unwrap();
    let b = CycleLayout::from_cycle_notation(7, "(67)(12345)").unwrap();
    let ra = count_fixed_tuples(&a, 3, &opts).unwrap();
    let rb = count_fixed_tuples(&b, 3, &opts).unwrap();
    assert_eq!(ra.raw_general_position, rb.raw_general_position);
    assert_eq!(ra.quotient_count, 720);
    let orbit = count_fixed_tuples(&b, 3, &BruteOptions::with_strategy(Strategy::LeadOrbit)).unwrap();
    assert_eq!(orbit.raw_general_position, ra.raw_general_position);
}

#[test]
fn frame_fix_agrees_with_quotient_divide() {
    for lam in ["[1^7]", "[2,1^5]", "[3,1^4]"] {
        let f = count_fixed_septuples(&p(lam), 3, Strategy::FrameFix).unwrap();
        let d = count_fixed_septuples(&p(lam), 3, Strategy::QuotientDivide).unwrap();
        let o = count_fixed_septuples(&p(lam), 3, Strategy::LeadOrbit).unwrap();
        assert_eq!(f.raw_general_position, d.raw_general_position, "{lam}");
        assert_eq!(o.raw_general_position, d.raw_general_position, "{lam}");
    }
}

#[test]
fn sequential_and_parallel_agree() {
    for lam in ["[4,3]", "[3,2,1^2]"] {
        let layout = CycleLayout::canonical(&p(lam));
        let seq = BruteOptions { exec: ExecMode::Sequential, ..Default::default() };
        let par = BruteOptions { exec: ExecMode::Parallel, ..Default::default() };
        let a = count_fixed_tuples(&layout, 3, &seq).unwrap();
        let b = count_fixed_tuples(&layout, 3, &par).unwrap();
        assert_eq!(a.raw_general_position, b.raw_general_position, "{lam}");
    }
}

fn assert_components(lam: &Partition, q: u64) {
    let d = decomposition(lam).unwrap();
    let c = count_fixed_delta_components(lam, q, d.uspec()).unwrap();
    let ev = |e: &FormulaEntry| e.eval(q as i128).unwrap();
    assert_eq!(c.u, ev(d.ambient), "{lam} U at q={q}");
    assert_eq!(c.delta_l, ev(d.delta_l), "{lam} Δ_l at q={q}");
    assert_eq!(c.delta_c, ev(d.delta_c), "{lam} Δ_c at q={q}");
    assert_eq!(c.both, ev(d.intersection), "{lam} Δ_l∩Δ_c at q={q}");
}

#[test]
fn components_at_three_match_registry() {
    for lam in Partition::all(7).iter().filter(|l| decomposition(l).is_some()) {
        assert_components(lam, 3);
    }
}

#[test]
fn component_examples() {
    let c = count_fixed_delta_components(&p("[7]"), 3, USpec::Full).unwrap();
    assert_eq!((c.delta_l, c.both), (28392, 0));
    let c = count_fixed_delta_components(&p("[1,6]"), 3, USpec::Full).unwrap();
    assert_eq!(c.both, 50544);
    let gp = count_fixed_septuples(&p("[1,6]"), 3, Strategy::LeadOrbit).unwrap();
    assert_eq!(c.complement(), gp.raw_general_position);
}

#[test]
fn corrected_intersection_for_two_one_five_at_seven() {
    assert_components(&p("[2,1^5]"), 7);
}

#[test]
fn corrected_inside_triple_for_two_cubed_one_at_five() {
    assert_components(&p("[2^3,1]"), 5);
}

#[test]
fn corrected_conic_component_for_two_squared_one_cubed_at_five() {
    assert_components(&p("[2^2,1^3]"), 5);
}

#[test]
fn frame_fix_needs_the_frame_in_general_position() {
    let r = count_delta_components(
        &CycleLayout::canonical(&p("[3,1^4]")),
        3,
        USpec::Full,
        &BruteOptions::with_strategy(Strategy::FrameFix),
    );
    assert!(matches!(r, Err(BruteError::StrategyNotApplicable { .. })));
}

#[test]
fn frame_fixed_seven_points_at_nine_and_eleven() {
    for (q, expected) in [(9u64, 240i128), (11, 8640)] {
        let r = count_fixed_septuples(&p("[1^7]"), q, Strategy::FrameFix).unwrap();
        assert_eq!(r.quotient_count, expected);
        assert_eq!(quartic_locus_count(&p("[1^7]")).unwrap().eval(q as i128), expected);
    }
}

#[test]
fn oversized_towers_are_reported() {
    let r = count_fixed_septuples(&p("[4,3]"), 5, Strategy::Auto);
    assert!(matches!(r, Err(BruteError::ExtensionTooLarge { .. })), "{r:?}");
    let r = count_fixed_septuples(&p("[7]"), 5, Strategy::Auto);
    assert!(matches!(r, Err(BruteError::TooMuchWork { .. })), "{r:?}");
}

#[test]
fn m08_counts_match_table() {
    for q in [3u64, 5, 7] {
        for lam in Partition::all(8) {
            let r = count_m0n_fixed(&lam, q, 3).unwrap();
            assert_eq!(r.quotient_count, m08_count(&lam).unwrap().eval(q as i128), "{lam} q={q}");
        }
    }
}

fn distinct(tuple: &[Vec<level2::gf::Elem>]) -> bool {
    (0..tuple.len()).all(|i| (i + 1..tuple.len()).all(|j| tuple[i] != tuple[j]))
}

#[test]
fn mobius_tuple_count_matches_enumeration() {
    for (ambient, r, lams) in [
        (Ambient::P1, 1, vec!["[1^3]", "[2,1]", "[3]", "[2^2]", "[4]", "[2,1^2]", "[3,1]"]),
        (Ambient::P2, 2, vec!["[1^2]", "[2]", "[3]", "[2,1]", "[1^3]"]),
    ] {
        for lam in lams {
            let lam = p(lam);
            let tuples = enumerate_conjugate_tuples(&lam, ambient, 3).unwrap();
            let direct = tuples.iter().filter(|t| distinct(t)).count() as i128;
            let formula = count_conjugate_tuples(&projective_counts(r, 3, &lam), &lam).unwrap();
            assert_eq!(direct, formula, "{lam} on P^{r}");
        }
    }
}

#[test]
fn enumerated_tuples_are_frobenius_twisted() {
    let tuples = enumerate_conjugate_tuples(&p("[3,2]"), Ambient::P2, 3).unwrap();
    let t: &FieldTower = tuples.tower();
    let layout = tuples.layout().clone();
    for tuple in tuples.iter().step_by(997).take(200) {
        for c in &layout.cycles {
            for j in 0..c.positions.len() {
                let here = PlanePoint::new(t, tuple[c.positions[j]].clone().try_into().unwrap()).unwrap();
                let next = tuple[c.positions[(j + 1) % c.positions.len()]].clone();
                assert_eq!(here.frobenius(t, 1).coords().to_vec(), next);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn inclusion_exclusion_reproduces_general_position(idx in 0usize..15) {
        let lam = &Partition::all(7)[idx];
        let c = count_fixed_delta_components(lam, 3, USpec::Full).unwrap();
        let gp = count_fixed_septuples(lam, 3, Strategy::Auto).unwrap();
        prop_assert_eq!(c.complement(), gp.raw_general_position);
    }

    #[test]
    fn strategies_agree_on_raw_totals(idx in 0usize..15) {
        let lam = &Partition::all(7)[idx];
        prop_assume!(lam.lcm() <= 6);
        let a = count_fixed_septuples(lam, 3, Strategy::LeadOrbit).unwrap();
        let b = count_fixed_septuples(lam, 3, Strategy::Auto).unwrap();
        prop_assert_eq!(a.raw_general_position, b.raw_general_position);
    }

    #[test]
    fn report_divisibility(idx in 0usize..22, qi in 0usize..2) {
        let lam = &Partition::all(8)[idx];
        let q = [3u64, 5][qi];
        let r = count_m0n_fixed(lam, q, 3).unwrap();
        prop_assert_eq!(r.raw_general_position, r.quotient_count * r.pgl_order);
    }
}
