//! One PASS/FAIL line per acceptance criterion. Criteria listed in `KNOWN_FAILURES`
//! are expected to fail; the process exits non-zero only on an unexpected outcome.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use level2::brute::{
    count_fixed_delta_components, count_fixed_septuples, count_fixed_tuples, count_m0n_fixed,
    enumerate_conjugate_tuples, Ambient, BruteOptions, CycleLayout, ExecMode, Strategy,
};
use level2::closedform::{
    decomposition, h3_count, hyperelliptic_cohomology, m08_count, printed_hyperelliptic_cohomology,
    printed_quartic_cohomology, quartic_cohomology, quartic_locus_count, FormulaEntry, Group, USpec,
};
use level2::gf::{Elem, FieldTower};
use level2::gysin::compute_bounds;
use level2::poly::CountPolynomial;
use level2::projgeom::{
    classify_point, count_conjugate_tuples, is_smooth_conic, points_over, projective_counts, rational_tangents,
    Conic, TangencyClass,
};
use level2::reptheory::{factorial, poincare_polynomial, CharacterTable, ClassFunction, CohomologyTable, Partition};
use level2::sp6;

/// Criterion number and the reason it cannot pass.
const KNOWN_FAILURES: &[(usize, &str)] = &[(
    5,
    "the printed H^4(Q[2]) multiplicity of s_{2,1^5} is 6; the counts force 8, the only value consistent with the printed Poincaré coefficient 13174",
)];

type Outcome = Result<String, String>;

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn table1_by_oracle() -> Outcome {
    let mut checked = 0;
    for lam in Partition::all(7) {
        let expected = quartic_locus_count(&lam).map_err(|e| e.to_string())?;
        for q in [3u64, 5] {
            if q == 5 && lam.lcm() > 4 {
                continue;
            }
            let r = count_fixed_septuples(&lam, q, Strategy::Auto).map_err(|e| format!("{lam} q={q}: {e}"))?;
            let want = expected.eval(q as i128);
            ensure(r.quotient_count == want, || format!("{lam} q={q}: brute {} vs {want}", r.quotient_count))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} classes (15 at q=3, lcm<=4 at q=5)"))
}

fn frame_fixed_spot_checks() -> Outcome {
    let lam = p("[1^7]");
    let poly = quartic_locus_count(&lam).map_err(|e| e.to_string())?;
    let mut out = Vec::new();
    for (q, expected) in [(9u64, 240i128), (11, 8640)] {
        let start = Instant::now();
        let r = count_fixed_septuples(&lam, q, Strategy::FrameFix).map_err(|e| e.to_string())?;
        let took = start.elapsed();
        ensure(r.quotient_count == expected, || format!("q={q}: frame-fixed {}", r.quotient_count))?;
        ensure(poly.eval(q as i128) == expected, || format!("q={q}: polynomial {}", poly.eval(q as i128)))?;
        ensure(took <= Duration::from_secs(5), || format!("q={q}: {took:?} over budget"))?;
        out.push(format!("q={q}: {expected} in {:.2}s", took.as_secs_f64()));
    }
    Ok(out.join(", "))
}

fn component_oracle() -> Outcome {
    let mut out = Vec::new();
    for lam in [p("[7]"), p("[1,6]")] {
        let d = decomposition(&lam).ok_or_else(|| format!("{lam}: no decomposition"))?;
        let c = count_fixed_delta_components(&lam, 3, USpec::Full).map_err(|e| e.to_string())?;
        let ev = |e: &FormulaEntry| e.eval(3).unwrap_or(i128::MIN);
        for (name, brute, entry) in
            [("Δ_l", c.delta_l, d.delta_l), ("Δ_c", c.delta_c, d.delta_c), ("Δ_l∩Δ_c", c.both, d.intersection)]
        {
            ensure(brute == ev(entry), || format!("{lam} {name}: brute {brute} vs {}", ev(entry)))?;
        }
        let raw = count_fixed_septuples(&lam, 3, Strategy::Auto).map_err(|e| e.to_string())?.raw_general_position;
        ensure(c.complement() == raw, || format!("{lam}: U-Δ_l-Δ_c+∩ = {} vs raw {raw}", c.complement()))?;
        out.push(format!("{lam}: {}/{}/{}", c.delta_l, c.delta_c, c.both));
    }
    Ok(out.join(", "))
}

fn m08_by_oracle() -> Outcome {
    let start = Instant::now();
    for q in [3u64, 5, 7] {
        for lam in Partition::all(8) {
            let r = count_m0n_fixed(&lam, q, 3).map_err(|e| format!("{lam} q={q}: {e}"))?;
            ensure(r.raw_general_position == r.pgl_order * r.quotient_count, || format!("{lam} q={q}: not divisible"))?;
            let want = m08_count(&lam).map_err(|e| e.to_string())?.eval(q as i128);
            ensure(r.quotient_count == want, || format!("{lam} q={q}: brute {} vs {want}", r.quotient_count))?;
        }
    }
    let took = start.elapsed();
    ensure(took <= Duration::from_secs(60), || format!("{took:?} over budget"))?;
    Ok(format!("66 values in {:.2}s", took.as_secs_f64()))
}

fn compare_tables(name: &str, computed: &CohomologyTable, printed: &CohomologyTable, bad: &mut Vec<String>) {
    for (k, (a, b)) in computed.rows.iter().zip(&printed.rows).enumerate() {
        for ((x, y), irrep) in a.iter().zip(b).zip(&computed.irreps) {
            if x != y {
                bad.push(format!("{name} H^{k} s{irrep}: computed {x}, printed {y}"));
            }
            if *x < 0 {
                bad.push(format!("{name} H^{k} s{irrep}: negative {x}"));
            }
        }
    }
}

fn cohomology_tables() -> Outcome {
    let q2 = quartic_cohomology().map_err(|e| e.to_string())?;
    let h3 = hyperelliptic_cohomology().map_err(|e| e.to_string())?;
    let (pq, ph) = (poincare_polynomial(&q2), poincare_polynomial(&h3));
    for (t, pp) in [(&q2, &pq), (&h3, &ph)] {
        for k in 0..=t.dim {
            ensure(t.total_dimension(k) == pp.coeff(k) as i128, || format!("row {k} dimension sum"))?;
        }
    }
    ensure(q2.total_dimension(6) == 18375 && h3.total_dimension(0) == 36, || "spot totals".into())?;
    let mut bad = Vec::new();
    compare_tables("Q[2]", &q2, &printed_quartic_cohomology(), &mut bad);
    compare_tables("H3[2]", &h3, &printed_hyperelliptic_cohomology(), &mut bad);
    if bad.is_empty() {
        Ok("195 multiplicities as printed; row sums match".into())
    } else {
        Err(format!("{} of 195 cells differ: {}", bad.len(), bad.join("; ")))
    }
}

fn poincare_polynomials() -> Outcome {
    let want_q = CountPolynomial::new(vec![1, 35, 490, 3485, 13174, 24920, 18375]);
    let want_h = CountPolynomial::new(vec![36, 720, 5580, 20880, 37584, 25920]);
    let got_q = poincare_polynomial(&quartic_cohomology().map_err(|e| e.to_string())?);
    let got_h = poincare_polynomial(&hyperelliptic_cohomology().map_err(|e| e.to_string())?);
    ensure(got_q == want_q, || format!("Q[2]: {}", got_q.display_in("t")))?;
    ensure(got_h == want_h, || format!("H3[2]: {}", got_h.display_in("t")))?;
    Ok(format!("{} and {}", got_q.display_in("t"), got_h.display_in("t")))
}

fn sp6_pipeline() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let start = Instant::now();
    let (group, status) = sp6::load_or_generate(dir.path()).map_err(|e| e.to_string())?;
    let emb = sp6::embed_s8().map_err(|e| e.to_string())?;
    ensure(status == sp6::CacheStatus::Built, || format!("cold run reported {status:?}"))?;
    ensure(group.len() == 1_451_520, || format!("order {}", group.len()))?;
    ensure(emb.image_size() == 40_320 && emb.image().all(|m| group.contains(m)), || "S8 image".into())?;
    ensure(group.len() / emb.image_size() == 36, || "index".into())?;
    let psi = ClassFunction::try_from_fn(8, m08_count).map_err(|e| e.to_string())?;
    let run = |group: &sp6::GroupEnumeration| -> Result<(), String> {
        let induced = sp6::fusion(group, &emb, ExecMode::Parallel).induce(&psi).map_err(|e| e.to_string())?;
        for (mu, v) in &induced.values {
            ensure(*v == h3_count(mu, Group::S8).unwrap(), || format!("induced {mu}: {v}"))?;
        }
        for (mu, v) in &sp6::restrict_induced_to_s7(&induced).values {
            ensure(*v == h3_count(mu, Group::S7).unwrap(), || format!("restricted {mu}: {v}"))?;
        }
        Ok(())
    };
    run(&group)?;
    let cold = start.elapsed();
    let start = Instant::now();
    let (cached, status) = sp6::load_or_generate(dir.path()).map_err(|e| e.to_string())?;
    ensure(status == sp6::CacheStatus::Loaded, || format!("warm run reported {status:?}"))?;
    run(&cached)?;
    let warm = start.elapsed();
    ensure(cold <= Duration::from_secs(300) && warm <= Duration::from_secs(60), || "over budget".into())?;
    Ok(format!(
        "1451520 / 40320 / 36; 22 + 15 polynomials; cold {:.1}s, cached {:.1}s",
        cold.as_secs_f64(),
        warm.as_secs_f64()
    ))
}

fn orthogonality(n: u32) -> Result<(), String> {
    let t = CharacterTable::new(n);
    let irreps = Partition::all(n);
    for a in &irreps {
        for b in &irreps {
            let s: i128 =
                irreps.iter().map(|c| c.class_size() as i128 * t.value(a, c) as i128 * t.value(b, c) as i128).sum();
            let want = if a == b { factorial(n) as i128 } else { 0 };
            ensure(s == want, || format!("S{n}: <{a},{b}> = {s}"))?;
        }
    }
    Ok(())
}

fn distinct(tuple: &[Vec<Elem>]) -> bool {
    (0..tuple.len()).all(|i| (i + 1..tuple.len()).all(|j| tuple[i] != tuple[j]))
}

fn smooth_conics(t: &FieldTower) -> Vec<Conic> {
    let q = t.q() as u32;
    let mut out = Vec::new();
    for code in 1..q.pow(6) {
        let mut digits = [Elem::ZERO; 6];
        let mut c = code;
        for d in &mut digits {
            *d = t.from_int((c % q) as i64);
            c /= q;
        }
        // one representative per projective class: leading nonzero coefficient 1
        if digits.iter().find(|e| !e.is_zero()) != Some(&Elem::ONE) {
            continue;
        }
        let conic = Conic::new(t, digits).unwrap();
        if is_smooth_conic(t, &conic) {
            out.push(conic);
        }
    }
    out
}

fn property_suites() -> Outcome {
    orthogonality(7)?;
    orthogonality(8)?;

    for (ambient, r, lams) in [
        (Ambient::P1, 1, ["[1^3]", "[2,1]", "[3]", "[2^2]", "[3,1]"]),
        (Ambient::P2, 2, ["[1^2]", "[2]", "[3]", "[2,1]", "[1^3]"]),
    ] {
        for lam in lams.map(p) {
            let direct = enumerate_conjugate_tuples(&lam, ambient, 3)
                .map_err(|e| e.to_string())?
                .iter()
                .filter(|t| distinct(t))
                .count() as i128;
            let formula = count_conjugate_tuples(&projective_counts(r, 3, &lam), &lam).map_err(|e| e.to_string())?;
            ensure(direct == formula, || format!("Möbius {lam} on P^{r}: {direct} vs {formula}"))?;
        }
    }

    for q in [3u64, 5] {
        let t = FieldTower::new(q, 1).map_err(|e| e.to_string())?;
        let conics = smooth_conics(&t);
        let qi = q as usize;
        ensure(q != 3 || conics.len() == 234, || format!("{} smooth conics at q=3", conics.len()))?;
        ensure(conics.len() == qi.pow(5) - qi.pow(2), || format!("{} smooth conics at q={q}", conics.len()))?;
        let points = points_over::<3>(&t, 1);
        for c in &conics {
            let tangents = rational_tangents(&t, c).map_err(|e| e.to_string())?;
            let (mut on, mut inside, mut outside) = (0, 0, 0);
            for pt in &points {
                let through = tangents.iter().filter(|l| l.contains(&t, pt)).count();
                ensure(through <= 2, || format!("q={q}: a point on {through} tangents"))?;
                match classify_point(&t, c, pt).map_err(|e| e.to_string())? {
                    TangencyClass::On => on += 1,
                    TangencyClass::Inside => inside += 1,
                    TangencyClass::Outside => outside += 1,
                }
            }
            ensure((inside, outside, on) == ((qi * qi - qi) / 2, (qi * qi + qi) / 2, qi + 1), || {
                format!("q={q}: inside/outside/on = {inside}/{outside}/{on}")
            })?;
        }
    }

    let opts = BruteOptions::with_strategy(Strategy::QuotientDivide);
    let counts: Vec<i128> = ["(12)(34567)", "(67)(12345)", "(15)(23467)"]
        .iter()
        .map(|s| count_fixed_tuples(&CycleLayout::from_cycle_notation(7, s).unwrap(), 3, &opts).map(|r| r.quotient_count))
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    ensure(counts.iter().all(|&c| c == 720), || format!("[2,5] representatives: {counts:?}"))?;

    Ok("orthogonality S7/S8, Möbius lemma, 234 smooth conics, inside/outside/tangents at q=3,5, [2,5] = 720 for 3 representatives".into())
}

fn gysin_bounds() -> Outcome {
    let q2 = quartic_cohomology().map_err(|e| e.to_string())?;
    let h3 = hyperelliptic_cohomology().map_err(|e| e.to_string())?;
    let b = compute_bounds(&q2, &h3).map_err(|e| e.to_string())?;
    let s7 = p("[7]");
    let n0 = b.get(0, &s7).unwrap();
    let n2 = b.get(2, &s7).unwrap();
    ensure(n0.n_k == 1 && n2.n_k == -2, || format!("n0 = {}, n2 = {}", n0.n_k, n2.n_k))?;
    for (k, lhs, rhs) in b.bookkeeping(&q2, &h3) {
        ensure(lhs == rhs, || format!("bookkeeping k={k}: {lhs} vs {rhs}"))?;
    }
    Ok(format!("n0(s7)=1, n2(s7)=-2 ({}), bookkeeping for k=0..7", n2.statement().unwrap()))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("quartic locus counts by brute force", table1_by_oracle),
        ("frame-fixed [1^7] at q=9, 11", frame_fixed_spot_checks),
        ("discriminant components for [7], [1,6]", component_oracle),
        ("M_{0,8} counts by brute force", m08_by_oracle),
        ("cohomology tables cell-for-cell", cohomology_tables),
        ("Poincaré polynomials", poincare_polynomials),
        ("Sp(6,F_2) induction", sp6_pipeline),
        ("property suites", property_suites),
        ("Gysin bounds", gysin_bounds),
    ];
    let mut unexpected = 0;
    let mut passed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let n = i + 1;
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        let known = KNOWN_FAILURES.iter().find(|(k, _)| *k == n);
        match (&outcome, known) {
            (Ok(detail), None) => {
                passed += 1;
                println!("PASS {n} {name}: {detail} [{secs:.1}s]");
            }
            (Ok(detail), Some(_)) => {
                unexpected += 1;
                println!("PASS {n} {name}: {detail} [{secs:.1}s] (listed as a known failure; update the list)");
            }
            (Err(why), Some((_, reason))) => {
                println!("FAIL {n} {name}: {why} [{secs:.1}s] (known: {reason})");
            }
            (Err(why), None) => {
                unexpected += 1;
                println!("FAIL {n} {name}: {why} [{secs:.1}s]");
            }
        }
    }
    println!("{passed}/9 criteria pass, {} known failure(s), {unexpected} unexpected", KNOWN_FAILURES.len());
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
