//! Bounds on the cohomology of M₃[2] from the Gysin sequences of
//! `H₃[2] ⊂ M₃[2] ⊃ Q[2]`: `n^k(λ) = m^k_{Q[2]}(λ) − m^{k−2}_{H₃[2]}(λ)`.
//! A positive `n^k(λ)` forces λ into `W_kH^k(M₃[2])`, a negative one into
//! `W_kH^{k+1}(M₃[2])`, with at least that multiplicity.

use std::fmt::Write as _;

use serde::Serialize;
use thiserror::Error;

use crate::reptheory::{poincare_polynomial, CohomologyTable, Partition};

/// Top degree for which a bound is computed.
pub const MAX_DEGREE: usize = 7;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GysinError {
    #[error("expected tables of dimension 6 and 5 on the same irreducibles, got {q_dim} and {h_dim}")]
    TableShapeMismatch { q_dim: usize, h_dim: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum BoundTarget {
    /// `W_kH^k`
    Hk,
    /// `W_kH^{k+1}`
    #[serde(rename = "Hk_plus_1")]
    HkPlus1,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundEntry {
    pub k: usize,
    pub lambda: Partition,
    pub n_k: i64,
}

impl BoundEntry {
    /// Where λ is forced to occur, and with which multiplicity; `None` when `n^k(λ) = 0`.
    pub fn bound(&self) -> Option<(BoundTarget, i64)> {
        match self.n_k {
            0 => None,
            n if n > 0 => Some((BoundTarget::Hk, n)),
            n => Some((BoundTarget::HkPlus1, -n)),
        }
    }

    /// E.g. `≥2 in W_2H^3`.
    pub fn statement(&self) -> Option<String> {
        self.bound().map(|(target, v)| {
            let degree = match target {
                BoundTarget::Hk => self.k,
                BoundTarget::HkPlus1 => self.k + 1,
            };
            format!("≥{v} in W_{}H^{degree}", self.k)
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundsTable {
    pub irreps: Vec<Partition>,
    /// Row-major: degree `k = 0..=7`, then irreducible.
    pub entries: Vec<BoundEntry>,
}

fn multiplicity(t: &CohomologyTable, k: isize, j: usize) -> i64 {
    if k < 0 {
        return 0;
    }
    t.rows.get(k as usize).map_or(0, |r| r[j])
}

pub fn compute_bounds(q_table: &CohomologyTable, h_table: &CohomologyTable) -> Result<BoundsTable, GysinError> {
    if q_table.dim != 6 || h_table.dim != 5 || q_table.irreps != h_table.irreps {
        return Err(GysinError::TableShapeMismatch { q_dim: q_table.dim, h_dim: h_table.dim });
    }
    let mut entries = Vec::new();
    for k in 0..=MAX_DEGREE {
        for (j, lambda) in q_table.irreps.iter().enumerate() {
            let n_k = multiplicity(q_table, k as isize, j) - multiplicity(h_table, k as isize - 2, j);
            entries.push(BoundEntry { k, lambda: lambda.clone(), n_k });
        }
    }
    Ok(BoundsTable { irreps: q_table.irreps.clone(), entries })
}

impl BoundsTable {
    pub fn get(&self, k: usize, lambda: &Partition) -> Option<&BoundEntry> {
        self.entries.iter().find(|e| e.k == k && &e.lambda == lambda)
    }

    pub fn degree(&self, k: usize) -> impl Iterator<Item = &BoundEntry> {
        self.entries.iter().filter(move |e| e.k == k)
    }

    /// `Σ_λ n^k(λ) dim λ` for each k.
    pub fn dimension_sums(&self) -> Vec<i128> {
        (0..=MAX_DEGREE)
            .map(|k| self.degree(k).map(|e| e.n_k as i128 * e.lambda.dimension() as i128).sum())
            .collect()
    }

    /// `(k, Σ_λ n^k(λ) dim λ, p_Q[k] − p_H[k−2])` from the Poincaré polynomials of the inputs.
    pub fn bookkeeping(&self, q_table: &CohomologyTable, h_table: &CohomologyTable) -> Vec<(usize, i128, i128)> {
        let pq = poincare_polynomial(q_table);
        let ph = poincare_polynomial(h_table);
        self.dimension_sums()
            .into_iter()
            .enumerate()
            .map(|(k, lhs)| {
                let rhs = pq.coeff(k) as i128 - if k >= 2 { ph.coeff(k - 2) as i128 } else { 0 };
                (k, lhs, rhs)
            })
            .collect()
    }

    /// `k,lambda,n_k,bound_target,bound_value`; zero rows have empty target and value 0.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("k,lambda,n_k,bound_target,bound_value\n");
        for e in &self.entries {
            let (target, value) = match e.bound() {
                Some((BoundTarget::Hk, v)) => ("Hk", v),
                Some((BoundTarget::HkPlus1, v)) => ("Hk_plus_1", v),
                None => ("", 0),
            };
            writeln!(out, "{},\"{}\",{},{},{}", e.k, e.lambda, e.n_k, target, value).unwrap();
        }
        out
    }
}
