//! Characters of symmetric groups, purity-based trace extraction and decomposition
//! of class functions into irreducible multiplicities.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::poly::CountPolynomial;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RepError {
    #[error("class function for {lambda} has degree {degree}, above the dimension {dim}")]
    DegreeOverflow { lambda: Partition, degree: usize, dim: usize },
    #[error("multiplicity of {irrep} in degree {k} is not an integer ({num}/{den})")]
    NonIntegralMultiplicity { k: usize, irrep: Partition, num: i128, den: i128 },
    #[error("multiplicity of {irrep} in degree {k} is negative ({value})")]
    NegativeMultiplicity { k: usize, irrep: Partition, value: i128 },
    #[error("class function is missing the class {0}")]
    MissingClass(Partition),
    #[error("cannot parse partition {0:?}")]
    BadPartition(String),
}

/// A partition, parts stored in weakly decreasing order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn n(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// All partitions of `n` in reverse lexicographic order: `[n]` first, `[1^n]` last.
    pub fn all(n: u32) -> Vec<Partition> {
        fn rec(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                rec(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// `(part, multiplicity)` pairs in increasing part order.
    pub fn multiplicities(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &p in self.parts.iter().rev() {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Centraliser order `z_λ = Π i^{a_i} a_i!`.
    pub fn z(&self) -> u128 {
        self.multiplicities()
            .into_iter()
            .map(|(i, a)| (i as u128).pow(a) * factorial(a))
            .product()
    }

    /// Size of the conjugacy class of this cycle type.
    pub fn class_size(&self) -> u128 {
        factorial(self.n()) / self.z()
    }

    pub fn lcm(&self) -> u32 {
        self.parts.iter().fold(1u64, |a, &b| crate::gf::lcm(a, b as u64)) as u32
    }

    /// `λ ∪ {k}`.
    pub fn with_part(&self, k: u32) -> Partition {
        let mut parts = self.parts.clone();
        parts.push(k);
        Partition::new(parts)
    }

    /// Dimension of the irreducible representation `s_λ` by the hook length formula.
    pub fn dimension(&self) -> u128 {
        let conj = self.conjugate();
        let hooks: u128 = self
            .parts
            .iter()
            .enumerate()
            .flat_map(|(i, &row)| {
                let conj = &conj;
                (0..row).map(move |j| (row - j - 1 + conj.parts[j as usize] - i as u32) as u128)
            })
            .product();
        factorial(self.n()) / hooks
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        Partition::new((0..width).map(|j| self.parts.iter().filter(|&&p| p > j).count() as u32).collect())
    }

    /// Comma-joined parts, e.g. `3,3,1`.
    pub fn plain(&self) -> String {
        self.parts.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
    }

    /// Compact exponent notation used by the printed tables, e.g. `3^2,1` or `2,1^5`.
    pub fn compact(&self) -> String {
        self.multiplicities()
            .into_iter()
            .rev()
            .map(|(p, m)| if m == 1 { p.to_string() } else { format!("{p}^{m}") })
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.compact())
    }
}

impl FromStr for Partition {
    type Err = RepError;

    /// Accepts `[6,1]`, `6,1`, `7`, `[2^2,1^3]`, `2 2 1 1 1` and mixes thereof.
    fn from_str(s: &str) -> Result<Self, RepError> {
        let bad = || RepError::BadPartition(s.to_string());
        let inner = s.trim().trim_start_matches('[').trim_end_matches(']');
        let mut parts = Vec::new();
        for tok in inner.split(|c: char| c == ',' || c.is_whitespace()).filter(|t| !t.is_empty()) {
            let (p, m) = match tok.split_once('^') {
                Some((p, m)) => (p, m.parse::<u32>().map_err(|_| bad())?),
                None => (tok, 1),
            };
            let p: u32 = p.parse().map_err(|_| bad())?;
            if p == 0 {
                return Err(bad());
            }
            parts.extend(std::iter::repeat(p).take(m as usize));
        }
        if parts.is_empty() {
            return Err(bad());
        }
        Ok(Partition::new(parts))
    }
}

pub fn factorial(n: u32) -> u128 {
    (1..=n as u128).product()
}

/// Character table of S_n, rows indexed by irreducibles, columns by classes,
/// both in the order of [`Partition::all`].
#[derive(Debug, Clone)]
pub struct CharacterTable {
    pub n: u32,
    pub partitions: Vec<Partition>,
    pub values: Vec<Vec<i64>>,
    pub class_sizes: Vec<u128>,
}

impl CharacterTable {
    pub fn new(n: u32) -> Self {
        let partitions = Partition::all(n);
        let mut memo = HashMap::new();
        let values = partitions
            .iter()
            .map(|lam| partitions.iter().map(|mu| mn_character(lam, mu, &mut memo)).collect())
            .collect();
        let class_sizes = partitions.iter().map(Partition::class_size).collect();
        CharacterTable { n, partitions, values, class_sizes }
    }

    pub fn index_of(&self, p: &Partition) -> Option<usize> {
        self.partitions.iter().position(|x| x == p)
    }

    pub fn value(&self, irrep: &Partition, class: &Partition) -> i64 {
        self.values[self.index_of(irrep).unwrap()][self.index_of(class).unwrap()]
    }
}

/// χ_λ(μ) by the Murnaghan–Nakayama rule on beta-sets.
pub fn mn_character(lambda: &Partition, mu: &Partition, memo: &mut HashMap<(Vec<u32>, Vec<u32>), i64>) -> i64 {
    let l = lambda.len() as u32;
    let beta: Vec<u32> = lambda.parts.iter().enumerate().map(|(i, &p)| p + l - 1 - i as u32).collect();
    mn_beta(beta, mu.parts.clone(), memo)
}

fn mn_beta(beta: Vec<u32>, cycles: Vec<u32>, memo: &mut HashMap<(Vec<u32>, Vec<u32>), i64>) -> i64 {
    let Some((&r, rest)) = cycles.split_first() else {
        return 1;
    };
    let key = (beta.clone(), cycles.clone());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let mut total = 0;
    for &b in &beta {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let between = beta.iter().filter(|&&x| x > b - r && x < b).count();
        let mut next: Vec<u32> = beta.iter().map(|&x| if x == b { b - r } else { x }).collect();
        next.sort_unstable_by(|a, b| b.cmp(a));
        let sign = if between % 2 == 0 { 1 } else { -1 };
        total += sign * mn_beta(next, rest.to_vec(), memo);
    }
    memo.insert(key, total);
    total
}

/// A function on the conjugacy classes of S_n, in the order of [`Partition::all`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassFunction<T> {
    pub n: u32,
    pub values: Vec<(Partition, T)>,
}

impl<T: Clone> ClassFunction<T> {
    /// Builds by evaluating `f` on every class.
    pub fn from_fn(n: u32, mut f: impl FnMut(&Partition) -> T) -> Self {
        ClassFunction { n, values: Partition::all(n).into_iter().map(|p| { let v = f(&p); (p, v) }).collect() }
    }

    /// Builds from a partial map, failing on any missing class.
    pub fn try_from_fn<E>(n: u32, mut f: impl FnMut(&Partition) -> Result<T, E>) -> Result<Self, E> {
        let values = Partition::all(n)
            .into_iter()
            .map(|p| f(&p).map(|v| (p, v)))
            .collect::<Result<_, E>>()?;
        Ok(ClassFunction { n, values })
    }

    pub fn get(&self, p: &Partition) -> Option<&T> {
        self.values.iter().find(|(q, _)| q == p).map(|(_, v)| v)
    }

    pub fn map<U: Clone>(&self, mut f: impl FnMut(&T) -> U) -> ClassFunction<U> {
        ClassFunction { n: self.n, values: self.values.iter().map(|(p, v)| (p.clone(), f(v))).collect() }
    }
}

/// Restriction from S_n to S_{n−1} fixing the last letter: `f'(μ) = f(μ ∪ {1})`.
pub fn restrict_class_function<T: Clone>(f: &ClassFunction<T>) -> ClassFunction<T> {
    assert!(f.n >= 2, "restriction needs n ≥ 2");
    ClassFunction::from_fn(f.n - 1, |mu| {
        f.get(&mu.with_part(1)).cloned().expect("class function is total")
    })
}

/// Per-degree traces: trace on H^k is `(−1)^k` times the coefficient of `q^{d−k}`.
pub fn counts_to_traces(
    counts: &ClassFunction<CountPolynomial>,
    d: usize,
) -> Result<Vec<ClassFunction<i64>>, RepError> {
    for (lambda, poly) in &counts.values {
        if let Some(deg) = poly.degree().filter(|&deg| deg > d) {
            return Err(RepError::DegreeOverflow { lambda: lambda.clone(), degree: deg, dim: d });
        }
    }
    Ok((0..=d)
        .map(|k| {
            let sign = if k % 2 == 0 { 1 } else { -1 };
            counts.map(|p| sign * p.coeff(d - k))
        })
        .collect())
}

/// Multiplicities `m^k(λ)` of irreducibles in each degree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CohomologyTable {
    pub dim: usize,
    pub irreps: Vec<Partition>,
    pub rows: Vec<Vec<i64>>,
}

impl CohomologyTable {
    pub fn get(&self, k: usize, irrep: &Partition) -> Option<i64> {
        let j = self.irreps.iter().position(|p| p == irrep)?;
        self.rows.get(k).map(|r| r[j])
    }

    /// Total dimension of the degree-k piece.
    pub fn total_dimension(&self, k: usize) -> i128 {
        self.rows[k].iter().zip(&self.irreps).map(|(&m, p)| m as i128 * p.dimension() as i128).sum()
    }
}

/// Decomposes per-degree traces via `m = (1/n!) Σ_μ |C_μ| tr(μ) χ(μ)`, exactly.
pub fn decompose(traces: &[ClassFunction<i64>], table: &CharacterTable) -> Result<CohomologyTable, RepError> {
    let order = factorial(table.n) as i128;
    let mut rows = Vec::with_capacity(traces.len());
    for (k, tr) in traces.iter().enumerate() {
        let mut row = Vec::with_capacity(table.partitions.len());
        for (li, irrep) in table.partitions.iter().enumerate() {
            let mut num = 0i128;
            for (ci, class) in table.partitions.iter().enumerate() {
                let v = *tr.get(class).ok_or_else(|| RepError::MissingClass(class.clone()))?;
                num += table.class_sizes[ci] as i128 * v as i128 * table.values[li][ci] as i128;
            }
            if num % order != 0 {
                return Err(RepError::NonIntegralMultiplicity { k, irrep: irrep.clone(), num, den: order });
            }
            let m = num / order;
            if m < 0 {
                return Err(RepError::NegativeMultiplicity { k, irrep: irrep.clone(), value: m });
            }
            row.push(m as i64);
        }
        rows.push(row);
    }
    Ok(CohomologyTable { dim: traces.len().saturating_sub(1), irreps: table.partitions.clone(), rows })
}

/// Traces of a cohomology table, i.e. the inverse of [`decompose`].
pub fn synthesize_traces(t: &CohomologyTable, table: &CharacterTable) -> Vec<ClassFunction<i64>> {
    t.rows
        .iter()
        .map(|row| {
            ClassFunction::from_fn(table.n, |class| {
                let ci = table.index_of(class).unwrap();
                row.iter().zip(&t.irreps).map(|(&m, irrep)| m * table.values[table.index_of(irrep).unwrap()][ci]).sum()
            })
        })
        .collect()
}

/// `Σ_k (Σ_λ m^k(λ) dim λ) t^k`.
pub fn poincare_polynomial(t: &CohomologyTable) -> CountPolynomial {
    CountPolynomial::new((0..t.rows.len()).map(|k| t.total_dimension(k) as i64).collect())
}
