//! Exhaustive counting of Frobenius-twisted fixed points.
//!
//! A fixed point of `F∘σ` on `(P^r)^n` is a conjugate tuple: for every cycle
//! `(c₀ … c_{m−1})` of `σ⁻¹` the entries satisfy `P_{c_{j+1}} = F(P_{c_j})`, so the
//! tuple is fixed by one strict `F_{q^m}`-point per cycle. Tuples are enumerated
//! depth-first cycle by cycle with a cache of 3×3 determinants, and classified as
//! three-on-a-line (`Δ_l`), six-on-a-smooth-conic (`Δ_c`) or general position.
//!
//! Three strategies reduce the PGL₃-quotient:
//! - `QuotientDivide` enumerates everything and divides by `|PGL₃(F_q)|`;
//! - `FrameFix` pins four rational points to the standard frame;
//! - `LeadOrbit` splits the lead point of the longest cycle into PGL₃(F_q)-orbits
//!   and weights one representative per orbit by its orbit size.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::closedform::{group_order, LinearGroup, USpec};
use crate::gf::{divisors, lcm, Elem, FieldTower, GfError, DEFAULT_CAP};
use crate::reptheory::Partition;

#[derive(Debug, Error)]
pub enum BruteError {
    #[error("F_{q}^{m} has {order} elements, above the cap {cap}")]
    ExtensionTooLarge { q: u64, m: u32, order: u128, cap: u64 },
    #[error("strategy {strategy:?} does not apply to {lambda}: {reason}")]
    StrategyNotApplicable { strategy: Strategy, lambda: Partition, reason: String },
    #[error("raw total {total} is not divisible by the group order {order}")]
    NonDivisibleTotal { total: i128, order: i128 },
    #[error("estimated work {estimate} exceeds the limit {limit}")]
    TooMuchWork { estimate: u128, limit: u128 },
    #[error("q = {0} is not an odd prime power")]
    UnsupportedField(u64),
    #[error("{0}")]
    Layout(String),
    #[error(transparent)]
    Field(GfError),
    #[error("cannot write {path}: {source}")]
    Io { path: String, source: std::io::Error },
}

impl From<GfError> for BruteError {
    fn from(e: GfError) -> Self {
        match e {
            GfError::ExtensionTooLarge { q, m, order, cap } => BruteError::ExtensionTooLarge { q, m, order, cap },
            other => BruteError::Field(other),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Strategy {
    QuotientDivide,
    FrameFix,
    LeadOrbit,
    /// `FrameFix` when it applies, otherwise `LeadOrbit`.
    Auto,
}

impl std::str::FromStr for Strategy {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().replace(['-', '_'], "").as_str() {
            "quotientdivide" | "quotient" => Ok(Strategy::QuotientDivide),
            "framefix" | "frame" => Ok(Strategy::FrameFix),
            "leadorbit" | "orbit" => Ok(Strategy::LeadOrbit),
            "auto" => Ok(Strategy::Auto),
            _ => Err(format!("unknown strategy {s:?} (quotient-divide, frame-fix, lead-orbit, auto)")),
        }
    }
}

/// Whether enumeration chunks run on the rayon pool. Without the `parallel`
/// feature both modes run sequentially.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum ExecMode {
    Sequential,
    #[default]
    Parallel,
}

#[derive(Debug, Clone, Copy)]
pub struct BruteOptions {
    pub strategy: Strategy,
    pub exec: ExecMode,
    /// Upper bound on the estimated number of visited points and leaves.
    pub work_limit: u128,
    pub cap: u64,
}

impl Default for BruteOptions {
    fn default() -> Self {
        BruteOptions { strategy: Strategy::Auto, exec: ExecMode::Parallel, work_limit: 1_000_000_000, cap: DEFAULT_CAP }
    }
}

impl BruteOptions {
    pub fn with_strategy(strategy: Strategy) -> Self {
        BruteOptions { strategy, ..Default::default() }
    }
}

/// One cycle of `σ⁻¹`; `positions[j+1]` holds the Frobenius image of `positions[j]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cycle {
    pub len: u32,
    pub positions: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleLayout {
    pub n: usize,
    /// Decreasing length; ties by first position.
    pub cycles: Vec<Cycle>,
    pub lcm: u32,
}

impl CycleLayout {
    /// Cycles of decreasing length on consecutive positions:
    /// `σ⁻¹ = (0 1 … m₁−1)(m₁ … )…`.
    pub fn canonical(lambda: &Partition) -> Self {
        let mut start = 0;
        let cycles = lambda
            .parts()
            .iter()
            .map(|&m| {
                let c = Cycle { len: m, positions: (start..start + m as usize).collect() };
                start += m as usize;
                c
            })
            .collect();
        Self::from_cycles(start, cycles)
    }

    /// Layout of a permutation given as `perm[i] = σ(i)` on `0..n`.
    pub fn from_permutation(perm: &[usize]) -> Result<Self, BruteError> {
        let n = perm.len();
        let mut inv = vec![usize::MAX; n];
        for (i, &s) in perm.iter().enumerate() {
            if s >= n || inv[s] != usize::MAX {
                return Err(BruteError::Layout(format!("{perm:?} is not a permutation")));
            }
            inv[s] = i;
        }
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut positions = Vec::new();
            let mut c = start;
            while !seen[c] {
                seen[c] = true;
                positions.push(c);
                c = inv[c];
            }
            cycles.push(Cycle { len: positions.len() as u32, positions });
        }
        Ok(Self::from_cycles(n, cycles))
    }

    /// Layout of a permutation in 1-based cycle notation, e.g. `"(12)(34567)"`;
    /// digits are single positions, so this form is limited to `n ≤ 9`.
    pub fn from_cycle_notation(n: usize, s: &str) -> Result<Self, BruteError> {
        let mut perm: Vec<usize> = (0..n).collect();
        for group in s.split(')').map(|g| g.trim().trim_start_matches('(')).filter(|g| !g.is_empty()) {
            let pts: Vec<usize> = group
                .chars()
                .map(|c| c.to_digit(10).map(|d| d as usize).filter(|&d| d >= 1 && d <= n).map(|d| d - 1))
                .collect::<Option<_>>()
                .ok_or_else(|| BruteError::Layout(format!("bad cycle {group:?}")))?;
            for (k, &p) in pts.iter().enumerate() {
                perm[p] = pts[(k + 1) % pts.len()];
            }
        }
        Self::from_permutation(&perm)
    }

    fn from_cycles(n: usize, mut cycles: Vec<Cycle>) -> Self {
        cycles.sort_by(|a, b| b.len.cmp(&a.len).then(a.positions[0].cmp(&b.positions[0])));
        let l = cycles.iter().fold(1u64, |acc, c| lcm(acc, c.len as u64)) as u32;
        CycleLayout { n, cycles, lcm: l }
    }

    pub fn partition(&self) -> Partition {
        Partition::new(self.cycles.iter().map(|c| c.len).collect())
    }

    /// Indices of the cycles of length 1, in layout order.
    pub fn fixed_cycles(&self) -> Vec<usize> {
        (0..self.cycles.len()).filter(|&i| self.cycles[i].len == 1).collect()
    }

    /// Cycles whose points the U-restriction requires to have no three collinear:
    /// whole cycles totalling the required number of points, with as many
    /// rational points as possible, earliest cycles first.
    pub fn selection(&self, uspec: USpec) -> Option<Vec<usize>> {
        let k = match uspec {
            USpec::Full => return Some(Vec::new()),
            USpec::LastThreeNotCollinear => 3,
            USpec::FirstFourGeneralPosition => 4,
            USpec::FirstFiveGeneralPosition => 5,
            USpec::FirstSixNoThreeCollinear => 6,
        };
        let nc = self.cycles.len();
        (0u32..1 << nc)
            .map(|mask| (0..nc).filter(|&i| mask >> i & 1 == 1).collect::<Vec<_>>())
            .filter(|s| s.iter().map(|&i| self.cycles[i].len).sum::<u32>() == k)
            .min_by(|a, b| {
                let ones = |s: &Vec<usize>| s.iter().filter(|&&i| self.cycles[i].len == 1).count();
                ones(b).cmp(&ones(a)).then(a.cmp(b))
            })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BruteReport {
    pub lambda: Partition,
    pub q: u64,
    pub raw_general_position: i128,
    pub pgl_order: i128,
    pub quotient_count: i128,
    pub strategy: Strategy,
    pub elapsed: Duration,
}

/// `|U|`, `|Δ_l|`, `|Δ_c|`, `|Δ_l∩Δ_c|` inside a restricted ambient set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentCounts {
    pub u: i128,
    pub delta_l: i128,
    pub delta_c: i128,
    pub both: i128,
    pub strategy: Strategy,
}

impl ComponentCounts {
    /// Number of tuples in general position.
    pub fn complement(&self) -> i128 {
        self.u - self.delta_l - self.delta_c + self.both
    }

    /// Keyed by the registry's component labels.
    pub fn to_map(&self) -> BTreeMap<&'static str, i128> {
        BTreeMap::from([("U", self.u), ("Δ_l", self.delta_l), ("Δ_c", self.delta_c), ("Δ_l∩Δ_c", self.both)])
    }
}

/// Per-chunk tallies; all fields add.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
struct Tally {
    u: u64,
    dl: u64,
    dc: u64,
    both: u64,
    gp: u64,
}

impl std::ops::Add for Tally {
    type Output = Tally;
    fn add(self, o: Tally) -> Tally {
        Tally { u: self.u + o.u, dl: self.dl + o.dl, dc: self.dc + o.dc, both: self.both + o.both, gp: self.gp + o.gp }
    }
}

impl std::iter::Sum for Tally {
    fn sum<I: Iterator<Item = Tally>>(it: I) -> Tally {
        it.fold(Tally::default(), |a, b| a + b)
    }
}

impl Tally {
    fn scale(self, w: u64) -> Tally {
        Tally { u: self.u * w, dl: self.dl * w, dc: self.dc * w, both: self.both * w, gp: self.gp * w }
    }
}

fn sum_range<T, F>(exec: ExecMode, n: usize, f: F) -> T
where
    T: Send + std::iter::Sum<T>,
    F: Fn(usize) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec == ExecMode::Parallel {
        use rayon::prelude::*;
        return (0..n).into_par_iter().map(f).sum();
    }
    let _ = exec;
    (0..n).map(f).sum()
}

fn check_field(q: u64) -> Result<(), BruteError> {
    match crate::gf::PrimePower::new(q) {
        Ok(pp) if pp.p != 2 => Ok(()),
        _ => Err(BruteError::UnsupportedField(q)),
    }
}

/// `x ↦ x^q` on logarithms.
#[derive(Clone, Copy)]
struct Frob {
    n1: u64,
    mult: u64,
}

impl Frob {
    fn new(t: &FieldTower) -> Self {
        Frob { n1: t.order() as u64 - 1, mult: t.frobenius_multiplier() }
    }

    #[inline]
    fn apply(self, x: Elem) -> Elem {
        match x.log() {
            None => x,
            Some(i) => Elem(((i as u64 * self.mult) % self.n1) as u32 + 1),
        }
    }
}

/// Points of `P^{N−1}(F_{q^m})` inside a larger tower, indexed arithmetically.
///
/// Index layout: leading coordinate first, remaining coordinates as base-`q^m`
/// digits of their subfield codes (`0` for zero, `log/stride + 1` otherwise).
#[derive(Debug, Clone)]
struct PointSpace<const N: usize> {
    m: u32,
    stride: u32,
    qm: u64,
    /// Degrees of the maximal proper subfields of F_{q^m}.
    maximal_subfields: Vec<u32>,
}

impl<const N: usize> PointSpace<N> {
    fn new(t: &FieldTower, m: u32) -> Self {
        let maximal_subfields = divisors(m)
            .into_iter()
            .filter(|&d| d < m)
            .filter(|&d| !divisors(m).into_iter().any(|e| e < m && e > d && e % d == 0))
            .collect();
        PointSpace { m, stride: t.subfield_stride(m), qm: t.q().pow(m), maximal_subfields }
    }

    fn size(&self) -> u64 {
        (0..N as u32).map(|k| self.qm.pow(k)).sum()
    }

    #[inline]
    fn code(&self, x: Elem) -> u64 {
        match x.log() {
            None => 0,
            Some(i) => (i / self.stride) as u64 + 1,
        }
    }

    #[inline]
    fn elem(&self, c: u64) -> Elem {
        if c == 0 {
            Elem::ZERO
        } else {
            Elem((c as u32 - 1) * self.stride + 1)
        }
    }

    fn decode(&self, mut idx: u64) -> [Elem; N] {
        let mut v = [Elem::ZERO; N];
        for lead in 0..N {
            let free = (N - lead - 1) as u32;
            let block = self.qm.pow(free);
            if idx < block {
                v[lead] = Elem::ONE;
                for k in (lead + 1..N).rev() {
                    v[k] = self.elem(idx % self.qm);
                    idx /= self.qm;
                }
                return v;
            }
            idx -= block;
        }
        unreachable!("index out of range")
    }

    fn encode(&self, v: &[Elem; N]) -> u64 {
        let lead = v.iter().position(|c| !c.is_zero()).expect("nonzero point");
        let offset: u64 = (0..lead).map(|l| self.qm.pow((N - l - 1) as u32)).sum();
        offset + v[lead + 1..].iter().fold(0, |acc, &c| acc * self.qm + self.code(c))
    }

    fn is_strict(&self, t: &FieldTower, v: &[Elem; N]) -> bool {
        !self.maximal_subfields.iter().any(|&d| v.iter().all(|&c| t.in_subfield(c, d)))
    }

    fn strict_points(&self, t: &FieldTower) -> Vec<[Elem; N]> {
        (0..self.size()).map(|i| self.decode(i)).filter(|v| self.is_strict(t, v)).collect()
    }

    fn strict_count(&self, t: &FieldTower) -> u64 {
        if self.m == 1 {
            return self.size();
        }
        (0..self.size()).filter(|&i| self.is_strict(t, &self.decode(i))).count() as u64
    }
}

#[inline]
fn normalize3(t: &FieldTower, mut v: [Elem; 3]) -> [Elem; 3] {
    let lead = *v.iter().find(|c| !c.is_zero()).expect("nonzero vector");
    if lead != Elem::ONE {
        let inv = t.inv(lead).expect("nonzero");
        for c in v.iter_mut() {
            *c = t.mul(*c, inv);
        }
    }
    v
}

/// Generators of GL₃(F_q): elementary shears over an F_p-basis of F_q, and a
/// diagonal matrix scaling the first coordinate by a generator of F_q^×.
#[derive(Debug, Clone, Copy)]
enum Generator {
    Shear { i: usize, j: usize, b: Elem },
    Scale(Elem),
}

fn pgl3_generators(t: &FieldTower) -> Vec<Generator> {
    let mut gens = Vec::new();
    for b in t.base_field_basis() {
        for i in 0..3 {
            for j in 0..3 {
                if i != j {
                    gens.push(Generator::Shear { i, j, b });
                }
            }
        }
    }
    if t.q() > 2 {
        gens.push(Generator::Scale(Elem(t.subfield_stride(1) + 1)));
    }
    gens
}

#[inline]
fn apply_generator(t: &FieldTower, g: Generator, mut v: [Elem; 3]) -> [Elem; 3] {
    match g {
        Generator::Shear { i, j, b } => v[i] = t.add(v[i], t.mul(b, v[j])),
        Generator::Scale(s) => v[0] = t.mul(s, v[0]),
    }
    normalize3(t, v)
}

/// PGL₃(F_q)-orbits on the strict points of `P²(F_{q^m})`: one representative
/// per orbit with the orbit size, in index order of the representatives.
fn lead_orbits(t: &FieldTower, space: &PointSpace<3>) -> Vec<([Elem; 3], u64)> {
    let gens = pgl3_generators(t);
    let size = space.size() as usize;
    let mut seen = vec![0u64; size.div_ceil(64)];
    let mark = |seen: &mut [u64], i: usize| -> bool {
        let (w, b) = (i / 64, i % 64);
        let fresh = seen[w] >> b & 1 == 0;
        seen[w] |= 1 << b;
        fresh
    };
    let mut reps = Vec::new();
    let mut stack = Vec::new();
    for idx in 0..size {
        if seen[idx / 64] >> (idx % 64) & 1 == 1 {
            continue;
        }
        let p = space.decode(idx as u64);
        if !space.is_strict(t, &p) {
            continue;
        }
        mark(&mut seen, idx);
        stack.push(p);
        let mut count = 0u64;
        while let Some(v) = stack.pop() {
            count += 1;
            for &g in &gens {
                let w = apply_generator(t, g, v);
                if mark(&mut seen, space.encode(&w) as usize) {
                    stack.push(w);
                }
            }
        }
        reps.push((p, count));
    }
    reps
}

const MAXN: usize = 8;

#[inline]
fn tri(a: usize, b: usize, c: usize) -> usize {
    (a * MAXN + b) * MAXN + c
}

/// Six points with no three collinear lie on a conic iff
/// `[135][146][236][245] = [136][145][235][246]` (brackets are 3×3 minors).
#[inline]
fn on_conic(t: &FieldTower, det: &[Elem], s: &[usize; 6]) -> bool {
    let d = |a: usize, b: usize, c: usize| det[tri(s[a], s[b], s[c])];
    let m = |a, b| t.mul(a, b);
    let lhs = m(m(d(0, 2, 4), d(0, 3, 5)), m(d(1, 2, 5), d(1, 3, 4)));
    let rhs = m(m(d(0, 2, 5), d(0, 3, 4)), m(d(1, 2, 4), d(1, 3, 5)));
    lhs == rhs
}

/// The `n − 1`-subsets of `0..n` for `n = 7`, or the single set for `n = 6`.
fn six_subsets(n: usize) -> Vec<[usize; 6]> {
    if n < 6 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let all: Vec<usize> = (0..n).collect();
    combos(&all, 6, &mut Vec::new(), &mut |s| out.push(s.try_into().unwrap()));
    out
}

fn combos(from: &[usize], k: usize, acc: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
    if acc.len() == k {
        f(acc);
        return;
    }
    for (i, &x) in from.iter().enumerate() {
        acc.push(x);
        combos(&from[i + 1..], k, acc, f);
        acc.pop();
    }
}

struct EngineCycle {
    len: usize,
    offset: usize,
    /// Earlier engine cycles of the same length (only these can share points).
    same_len_before: Vec<usize>,
}

enum Level0 {
    Listed(Vec<([Elem; 3], u64)>),
    Indexed(PointSpace<3>),
}

impl Level0 {
    fn len(&self) -> usize {
        match self {
            Level0::Listed(v) => v.len(),
            Level0::Indexed(s) => s.size() as usize,
        }
    }
}

/// Depth-first enumeration over cycles in engine order. The first `pinned.len()`
/// cycles are fixed, the next ranges over `level0`, the rest over `cands`.
struct Engine<'a> {
    t: &'a FieldTower,
    frob: Frob,
    n: usize,
    cycles: Vec<EngineCycle>,
    pinned: Vec<[Elem; 3]>,
    level0: Level0,
    cands: Vec<Vec<[Elem; 3]>>,
    components: bool,
    /// Flattened indices that must have no three collinear, checked once the
    /// cycle `selection_depth` is placed.
    selection: Vec<usize>,
    selection_depth: Option<usize>,
    sixes: Vec<[usize; 6]>,
}

struct State {
    pts: [[Elem; 3]; MAXN],
    det: Vec<Elem>,
}

impl Engine<'_> {
    fn place(&self, st: &mut State, ci: usize, lead: [Elem; 3]) -> bool {
        let c = &self.cycles[ci];
        for &prev in &c.same_len_before {
            let pc = &self.cycles[prev];
            if st.pts[pc.offset..pc.offset + pc.len].contains(&lead) {
                return false;
            }
        }
        let mut p = lead;
        for j in 0..c.len {
            st.pts[c.offset + j] = p;
            p = p.map(|x| self.frob.apply(x));
        }
        for k in c.offset..c.offset + c.len {
            for a in 0..k {
                for b in a + 1..k {
                    let d = crate::projgeom::det3(self.t, &st.pts[a], &st.pts[b], &st.pts[k]);
                    if !self.components && d.is_zero() {
                        return false;
                    }
                    st.det[tri(a, b, k)] = d;
                }
            }
        }
        if self.components && self.selection_depth == Some(ci) {
            let s = &self.selection;
            for x in 0..s.len() {
                for y in x + 1..s.len() {
                    for z in y + 1..s.len() {
                        if st.det[tri(s[x], s[y], s[z])].is_zero() {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    fn leaf(&self, st: &State) -> Tally {
        let sixes = &self.sixes;
        if !self.components {
            let conic = sixes.iter().any(|s| on_conic(self.t, &st.det, s));
            return Tally { gp: !conic as u64, ..Default::default() };
        }
        let n = self.n;
        let mut line = false;
        'outer: for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    if st.det[tri(a, b, c)].is_zero() {
                        line = true;
                        break 'outer;
                    }
                }
            }
        }
        let conic = sixes.iter().any(|s| {
            let nonzero = (0..6).all(|x| {
                (x + 1..6).all(|y| (y + 1..6).all(|z| !st.det[tri(s[x], s[y], s[z])].is_zero()))
            });
            nonzero && on_conic(self.t, &st.det, s)
        });
        Tally { u: 1, dl: line as u64, dc: conic as u64, both: (line && conic) as u64, gp: (!line && !conic) as u64 }
    }

    fn descend(&self, st: &mut State, ci: usize) -> Tally {
        if ci == self.cycles.len() {
            return self.leaf(st);
        }
        let mut acc = Tally::default();
        for &lead in &self.cands[ci] {
            if self.place(st, ci, lead) {
                acc = acc + self.descend(st, ci + 1);
            }
        }
        acc
    }

    fn level0_item(&self, i: usize) -> Option<([Elem; 3], u64)> {
        match &self.level0 {
            Level0::Listed(v) => Some(v[i]),
            Level0::Indexed(s) => {
                let p = s.decode(i as u64);
                s.is_strict(self.t, &p).then_some((p, 1))
            }
        }
    }

    fn run(&self, exec: ExecMode) -> Tally {
        let k0 = self.pinned.len();
        let n0 = self.level0.len();
        let split = k0 + 1 < self.cycles.len();
        let n1 = if split { self.cands[k0 + 1].len() } else { 1 };
        sum_range(exec, n0 * n1, |item| {
            let (i0, i1) = (item / n1, item % n1);
            let Some((lead, w)) = self.level0_item(i0) else {
                return Tally::default();
            };
            let mut st = State { pts: [[Elem::ZERO; 3]; MAXN], det: vec![Elem::ZERO; MAXN * MAXN * MAXN] };
            for (ci, &p) in self.pinned.iter().enumerate() {
                if !self.place(&mut st, ci, p) {
                    return Tally::default();
                }
            }
            if !self.place(&mut st, k0, lead) {
                return Tally::default();
            }
            let mut next = k0 + 1;
            if split {
                if !self.place(&mut st, next, self.cands[next][i1]) {
                    return Tally::default();
                }
                next += 1;
            }
            self.descend(&mut st, next).scale(w)
        })
    }
}

fn frame(t: &FieldTower) -> [[Elem; 3]; 4] {
    let (o, z) = (Elem::ONE, Elem::ZERO);
    let _ = t;
    [[o, z, z], [z, o, z], [z, z, o], [o, o, o]]
}

/// Resolves `Auto` and checks applicability. `selection` is the set of cycles
/// the U-restriction forces into general position (components mode only).
fn resolve_strategy(
    layout: &CycleLayout,
    strategy: Strategy,
    selection: Option<&[usize]>,
) -> Result<Strategy, BruteError> {
    let ones = layout.fixed_cycles();
    let frame_ok = || -> Result<(), String> {
        if ones.len() < 4 {
            return Err(format!("needs four fixed points, λ has {}", ones.len()));
        }
        if let Some(sel) = selection {
            if !ones[..4].iter().all(|c| sel.contains(c)) {
                return Err("the U-restriction does not put the four fixed points in general position".into());
            }
        }
        Ok(())
    };
    match strategy {
        Strategy::Auto => Ok(if frame_ok().is_ok() { Strategy::FrameFix } else { Strategy::LeadOrbit }),
        Strategy::FrameFix => frame_ok().map(|_| Strategy::FrameFix).map_err(|reason| {
            BruteError::StrategyNotApplicable { strategy, lambda: layout.partition(), reason }
        }),
        s => Ok(s),
    }
}

/// Builds the engine for a layout in the plane.
fn build_engine<'a>(
    t: &'a FieldTower,
    layout: &CycleLayout,
    strategy: Strategy,
    components: bool,
    selection: &[usize],
    pgl: u128,
    work_limit: u128,
) -> Result<Engine<'a>, BruteError> {
    let ones = layout.fixed_cycles();
    let pinned_cycles: Vec<usize> = if strategy == Strategy::FrameFix { ones[..4].to_vec() } else { Vec::new() };
    let mut order = pinned_cycles.clone();
    order.extend((0..layout.cycles.len()).filter(|c| !pinned_cycles.contains(c)));

    let mut cycles = Vec::new();
    let mut offset = 0;
    for (ei, &ci) in order.iter().enumerate() {
        let len = layout.cycles[ci].len as usize;
        let same_len_before = (0..ei).filter(|&e| layout.cycles[order[e]].len as usize == len).collect();
        cycles.push(EngineCycle { len, offset, same_len_before });
        offset += len;
    }
    let flat_start: Vec<usize> = cycles.iter().map(|c| c.offset).collect();
    let engine_index = |ci: usize| order.iter().position(|&c| c == ci).unwrap();

    let k0 = pinned_cycles.len();
    if k0 == order.len() {
        return Err(BruteError::Layout("no free cycle to enumerate".into()));
    }
    let mut cands: Vec<Vec<[Elem; 3]>> = vec![Vec::new(); order.len()];
    let mut counts = Vec::new();
    let mut cache: BTreeMap<usize, Vec<[Elem; 3]>> = BTreeMap::new();
    for e in k0 + 1..order.len() {
        let len = cycles[e].len;
        let list = cache.entry(len).or_insert_with(|| PointSpace::<3>::new(t, len as u32).strict_points(t));
        counts.push(list.len() as u128);
        cands[e] = list.clone();
    }
    let space0 = PointSpace::<3>::new(t, cycles[k0].len as u32);
    let rest: u128 = counts.iter().product();
    let size0 = space0.size() as u128;
    let estimate = match strategy {
        Strategy::LeadOrbit => size0 + (size0 / pgl + 1) * rest,
        Strategy::QuotientDivide => size0 * rest.max(1),
        _ => size0 * rest.max(1),
    };
    if estimate > work_limit {
        return Err(BruteError::TooMuchWork { estimate, limit: work_limit });
    }
    let level0 = match strategy {
        Strategy::LeadOrbit => Level0::Listed(lead_orbits(t, &space0)),
        _ => Level0::Indexed(space0),
    };
    let pinned = if strategy == Strategy::FrameFix { frame(t).to_vec() } else { Vec::new() };

    let mut sel_flat = Vec::new();
    let mut selection_depth = None;
    for &ci in selection {
        let e = engine_index(ci);
        sel_flat.extend(flat_start[e]..flat_start[e] + cycles[e].len);
        selection_depth = selection_depth.max(Some(e));
    }
    sel_flat.sort_unstable();

    Ok(Engine {
        t,
        frob: Frob::new(t),
        n: layout.n,
        cycles,
        pinned,
        level0,
        cands,
        components,
        selection: sel_flat,
        selection_depth: if selection.is_empty() { None } else { selection_depth },
        sixes: six_subsets(layout.n),
    })
}

fn plane_tower(layout: &CycleLayout, q: u64, cap: u64) -> Result<FieldTower, BruteError> {
    check_field(q)?;
    if layout.n > MAXN {
        return Err(BruteError::Layout(format!("at most {MAXN} points are supported")));
    }
    Ok(FieldTower::with_cap(q, layout.lcm, cap)?)
}

/// `|(P²₇)^{Fσ}|` for σ of cycle type λ (or any partition of at most 8 points).
pub fn count_fixed_septuples(lambda: &Partition, q: u64, strategy: Strategy) -> Result<BruteReport, BruteError> {
    count_fixed_tuples(&CycleLayout::canonical(lambda), q, &BruteOptions::with_strategy(strategy))
}

pub fn count_fixed_tuples(layout: &CycleLayout, q: u64, opts: &BruteOptions) -> Result<BruteReport, BruteError> {
    let start = Instant::now();
    let strategy = resolve_strategy(layout, opts.strategy, None)?;
    let t = plane_tower(layout, q, opts.cap)?;
    let pgl = group_order(LinearGroup::PGL3, q);
    let engine = build_engine(&t, layout, strategy, false, &[], pgl as u128, opts.work_limit)?;
    let total = engine.run(opts.exec).gp as i128;
    let (raw, quotient) = if strategy == Strategy::FrameFix {
        (total * pgl, total)
    } else {
        if total % pgl != 0 {
            return Err(BruteError::NonDivisibleTotal { total, order: pgl });
        }
        (total, total / pgl)
    };
    Ok(BruteReport {
        lambda: layout.partition(),
        q,
        raw_general_position: raw,
        pgl_order: pgl,
        quotient_count: quotient,
        strategy,
        elapsed: start.elapsed(),
    })
}

/// `|U|`, `|Δ_l|`, `|Δ_c|` and `|Δ_l∩Δ_c|` for conjugate λ-tuples in the ambient set
/// described by `uspec`. `Δ_c` means six of the points, no three of them
/// collinear, on a conic.
pub fn count_fixed_delta_components(lambda: &Partition, q: u64, uspec: USpec) -> Result<ComponentCounts, BruteError> {
    count_delta_components(&CycleLayout::canonical(lambda), q, uspec, &BruteOptions::default())
}

pub fn count_delta_components(
    layout: &CycleLayout,
    q: u64,
    uspec: USpec,
    opts: &BruteOptions,
) -> Result<ComponentCounts, BruteError> {
    let selection = layout.selection(uspec).ok_or_else(|| {
        BruteError::Layout(format!("{} has no union of cycles matching {uspec:?}", layout.partition()))
    })?;
    let strategy = resolve_strategy(layout, opts.strategy, Some(&selection))?;
    let t = plane_tower(layout, q, opts.cap)?;
    let pgl = group_order(LinearGroup::PGL3, q);
    let engine = build_engine(&t, layout, strategy, true, &selection, pgl as u128, opts.work_limit)?;
    let tally = engine.run(opts.exec);
    let w = if strategy == Strategy::FrameFix { pgl } else { 1 };
    Ok(ComponentCounts {
        u: tally.u as i128 * w,
        delta_l: tally.dl as i128 * w,
        delta_c: tally.dc as i128 * w,
        both: tally.both as i128 * w,
        strategy,
    })
}

/// `|M_{0,2g+2}^{Fσ}|`: conjugate λ-tuples of pairwise distinct points of P¹,
/// divided by `|PGL₂(F_q)|`.
///
/// Points of different strict degrees never coincide, so the tuple count is the
/// product over part lengths `m` of the number of distinct-orbit choices of
/// strict F_{q^m}-leads, each enumerated in F_{q^m} alone.
pub fn count_m0n_fixed(lambda: &Partition, q: u64, g: u32) -> Result<BruteReport, BruteError> {
    count_m0n_fixed_with(lambda, q, g, &BruteOptions::default())
}

pub fn count_m0n_fixed_with(lambda: &Partition, q: u64, g: u32, opts: &BruteOptions) -> Result<BruteReport, BruteError> {
    let start = Instant::now();
    check_field(q)?;
    if lambda.n() != 2 * g + 2 {
        return Err(BruteError::Layout(format!("{lambda} is not a partition of {}", 2 * g + 2)));
    }
    let mut raw: i128 = 1;
    for (m, a) in lambda.multiplicities() {
        let t = FieldTower::with_cap(q, m, opts.cap)?;
        let space = PointSpace::<2>::new(&t, m);
        let strict = space.strict_count(&t) as u128;
        let estimate = strict.pow(a.min(4));
        if estimate > opts.work_limit {
            return Err(BruteError::TooMuchWork { estimate, limit: opts.work_limit });
        }
        raw *= distinct_orbit_tuples(&t, &space, a as usize, opts.exec) as i128;
        if raw == 0 {
            break;
        }
    }
    let pgl = group_order(LinearGroup::PGL2, q);
    if raw % pgl != 0 {
        return Err(BruteError::NonDivisibleTotal { total: raw, order: pgl });
    }
    Ok(BruteReport {
        lambda: lambda.clone(),
        q,
        raw_general_position: raw,
        pgl_order: pgl,
        quotient_count: raw / pgl,
        strategy: Strategy::QuotientDivide,
        elapsed: start.elapsed(),
    })
}

/// Ordered `a`-tuples of strict leads on P¹ with pairwise distinct Frobenius orbits.
fn distinct_orbit_tuples(t: &FieldTower, space: &PointSpace<2>, a: usize, exec: ExecMode) -> u64 {
    if a == 1 {
        return space.strict_count(t);
    }
    let frob = Frob::new(t);
    let leads = space.strict_points(t);
    let orbit_id: Vec<u64> = leads
        .iter()
        .map(|&p| {
            let mut best = space.encode(&p);
            let mut v = p;
            for _ in 1..space.m {
                v = v.map(|x| frob.apply(x));
                best = best.min(space.encode(&v));
            }
            best
        })
        .collect();
    fn rec(ids: &[u64], chosen: &mut Vec<u64>, a: usize) -> u64 {
        if chosen.len() == a {
            return 1;
        }
        let mut acc = 0;
        for &id in ids {
            if !chosen.contains(&id) {
                chosen.push(id);
                acc += rec(ids, chosen, a);
                chosen.pop();
            }
        }
        acc
    }
    sum_range(exec, orbit_id.len(), |i| rec(&orbit_id, &mut vec![orbit_id[i]], a))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Ambient {
    P1,
    P2,
}

/// All conjugate tuples of a layout over F_q, before any distinctness filter.
pub struct ConjugateTuples {
    tower: FieldTower,
    layout: CycleLayout,
    leads: Vec<Vec<Vec<Elem>>>,
}

/// Every fixed point of `F∘σ` on `(P^r)^n` (r = 1, 2) for σ of cycle type λ, once
/// each: one strict F_{q^m} lead per cycle, laid out by repeated Frobenius.
pub fn enumerate_conjugate_tuples(lambda: &Partition, ambient: Ambient, q: u64) -> Result<ConjugateTuples, BruteError> {
    let layout = CycleLayout::canonical(lambda);
    check_field(q)?;
    let tower = FieldTower::new(q, layout.lcm)?;
    let leads = layout
        .cycles
        .iter()
        .map(|c| match ambient {
            Ambient::P1 => PointSpace::<2>::new(&tower, c.len).strict_points(&tower).iter().map(|v| v.to_vec()).collect(),
            Ambient::P2 => PointSpace::<3>::new(&tower, c.len).strict_points(&tower).iter().map(|v| v.to_vec()).collect(),
        })
        .collect();
    Ok(ConjugateTuples { tower, layout, leads })
}

impl ConjugateTuples {
    pub fn tower(&self) -> &FieldTower {
        &self.tower
    }

    pub fn layout(&self) -> &CycleLayout {
        &self.layout
    }

    /// Number of tuples the iterator yields.
    pub fn len(&self) -> u128 {
        self.leads.iter().map(|l| l.len() as u128).product()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Tuples in position order, each point as normalised coordinates.
    pub fn iter(&self) -> impl Iterator<Item = Vec<Vec<Elem>>> + '_ {
        let radix: Vec<usize> = self.leads.iter().map(|l| l.len()).collect();
        let total = if radix.contains(&0) { 0 } else { radix.iter().product::<usize>() };
        let frob = Frob::new(&self.tower);
        (0..total).map(move |mut k| {
            let mut tuple = vec![Vec::new(); self.layout.n];
            for (ci, c) in self.layout.cycles.iter().enumerate() {
                let mut p = self.leads[ci][k % radix[ci]].clone();
                k /= radix[ci];
                for &pos in &c.positions {
                    let next = p.iter().map(|&x| frob.apply(x)).collect();
                    tuple[pos] = std::mem::replace(&mut p, next);
                }
            }
            tuple
        })
    }
}

/// One line of a verification report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyRecord {
    pub lambda: String,
    pub closed_form_value: i128,
    pub brute_value: i128,
    pub agree: bool,
    pub elapsed_ms: u128,
}

impl VerifyRecord {
    pub fn new(lambda: &Partition, closed_form_value: i128, brute_value: i128, elapsed: Duration) -> Self {
        VerifyRecord {
            lambda: lambda.to_string(),
            closed_form_value,
            brute_value,
            agree: closed_form_value == brute_value,
            elapsed_ms: elapsed.as_millis(),
        }
    }
}

/// Writes `verify-<space>-q<q>.json` into `dir` and returns its path.
pub fn write_verify_report(dir: &Path, space: &str, q: u64, records: &[VerifyRecord]) -> Result<PathBuf, BruteError> {
    let path = dir.join(format!("verify-{space}-q{q}.json"));
    let io = |source| BruteError::Io { path: path.display().to_string(), source };
    std::fs::create_dir_all(dir).map_err(io)?;
    let body = serde_json::to_string_pretty(records).expect("records serialise");
    std::fs::write(&path, body + "\n").map_err(io)?;
    Ok(path)
}
