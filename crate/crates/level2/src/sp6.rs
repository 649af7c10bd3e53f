//! The symplectic group Sp(6, F₂), its subgroup S₈, and induction of class
//! functions from S₈.
//!
//! Vectors of F₂⁶ are 6-bit words; coordinates 0–2 pair with 3–5 under the form
//! `J = [[0, I₃], [I₃, 0]]`. A matrix is six rows packed into one word, row 0 in
//! the low six bits.

use std::collections::HashMap;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::brute::ExecMode;
use crate::poly::CountPolynomial;
use crate::reptheory::{factorial, ClassFunction, Partition};

pub const GROUP_ORDER: usize = 1_451_520;
pub const S8_ORDER: usize = 40_320;
pub const CACHE_FILE: &str = "sp6f2.cache";
const CACHE_MAGIC: &[u8; 8] = b"SP6F2GRP";
const CACHE_VERSION: u32 = 1;
const HEADER_LEN: usize = 8 + 4 + 8 + 32;

#[derive(Debug, Error)]
pub enum Sp6Error {
    #[error("cache {path} is corrupt: {reason}")]
    CacheCorrupt { path: String, reason: String },
    #[error("no symplectic partner for {0:#010b} in the even-weight quotient")]
    FormReductionFailure(u8),
    #[error("induced value on {class} is not divisible by 8!")]
    NonIntegralInduction { class: Partition },
    #[error("class function is not defined on S_8")]
    WrongDegree,
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
}

/// Symplectic pairing of two vectors of F₂⁶.
#[inline]
pub fn form(x: u8, y: u8) -> bool {
    let swapped = ((y & 0b111) << 3) | (y >> 3);
    (x & swapped).count_ones() % 2 == 1
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SpMatrix(pub u64);

impl SpMatrix {
    pub const IDENTITY: SpMatrix = SpMatrix(0b100000_010000_001000_000100_000010_000001);

    #[inline]
    pub fn row(self, i: usize) -> u8 {
        ((self.0 >> (6 * i)) & 0x3f) as u8
    }

    pub fn from_rows(rows: [u8; 6]) -> Self {
        SpMatrix(rows.iter().enumerate().fold(0, |acc, (i, &r)| acc | ((r as u64 & 0x3f) << (6 * i))))
    }

    /// The matrix whose `j`-th column is `cols[j]`.
    pub fn from_columns(cols: [u8; 6]) -> Self {
        SpMatrix::from_rows(cols).transpose()
    }

    #[inline]
    pub fn column(self, j: usize) -> u8 {
        (0..6).fold(0, |acc, i| acc | (((self.row(i) >> j) & 1) << i))
    }

    #[inline]
    pub fn transpose(self) -> Self {
        let mut out = 0u64;
        for i in 0..6 {
            let r = self.row(i);
            for j in 0..6 {
                if r >> j & 1 == 1 {
                    out |= 1 << (6 * j + i);
                }
            }
        }
        SpMatrix(out)
    }

    /// `M x` for a column vector `x`.
    #[inline]
    pub fn apply(self, x: u8) -> u8 {
        (0..6).fold(0, |acc, i| acc | ((((self.row(i) & x).count_ones() & 1) as u8) << i))
    }

    /// Matrix product `self · other`.
    #[inline]
    pub fn mul(self, other: SpMatrix) -> SpMatrix {
        let mut out = 0u64;
        for i in 0..6 {
            let a = self.row(i);
            let mut r = 0u8;
            for k in 0..6 {
                if a >> k & 1 == 1 {
                    r ^= other.row(k);
                }
            }
            out |= (r as u64) << (6 * i);
        }
        SpMatrix(out)
    }

    /// XOR-combinations of the rows: `table[a]` is row `i` of `X·self` whenever row
    /// `i` of `X` is `a`.
    pub fn row_combinations(self) -> [u8; 64] {
        let mut table = [0u8; 64];
        for a in 1..64usize {
            let low = a.trailing_zeros() as usize;
            table[a] = table[a & (a - 1)] ^ self.row(low);
        }
        table
    }

    /// `self · other`, with `other` given by its row combinations.
    #[inline]
    pub fn mul_by_table(self, table: &[u8; 64]) -> SpMatrix {
        SpMatrix((0..6).fold(0, |acc, i| acc | ((table[self.row(i) as usize] as u64) << (6 * i))))
    }

    /// `J Mᵀ J`, the inverse of a symplectic matrix.
    #[inline]
    pub fn symplectic_inverse(self) -> SpMatrix {
        let t = self.transpose();
        let swap = |r: u8| ((r & 0b111) << 3) | (r >> 3);
        let rows: [u8; 6] = std::array::from_fn(|i| swap(t.row((i + 3) % 6)));
        SpMatrix::from_rows(rows)
    }

    /// `MᵀJM = J`, checked on pairs of columns.
    pub fn is_symplectic(self) -> bool {
        let cols: [u8; 6] = std::array::from_fn(|j| self.column(j));
        (0..6).all(|i| (0..6).all(|j| form(cols[i], cols[j]) == form(1 << i, 1 << j)))
    }

    /// `t_v(x) = x + ⟨x, v⟩ v`.
    pub fn transvection(v: u8) -> SpMatrix {
        SpMatrix::from_columns(std::array::from_fn(|j| {
            let e = 1u8 << j;
            if form(e, v) {
                e ^ v
            } else {
                e
            }
        }))
    }
}

/// All of Sp(6, F₂), sorted by packed word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupEnumeration {
    elements: Vec<SpMatrix>,
}

impl GroupEnumeration {
    pub fn elements(&self) -> &[SpMatrix] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Ordinal of a matrix in the enumeration.
    pub fn index_of(&self, m: SpMatrix) -> Option<usize> {
        self.elements.binary_search(&m).ok()
    }

    pub fn contains(&self, m: SpMatrix) -> bool {
        self.index_of(m).is_some()
    }

    fn checksum(&self) -> [u8; 32] {
        let mut h = Sha256::new();
        for m in &self.elements {
            h.update(m.0.to_le_bytes());
        }
        h.finalize().into()
    }
}

/// Multiplicative hashing for packed matrices; the keys are already well mixed
/// bit patterns, so SipHash's strength buys nothing here.
#[derive(Debug, Clone, Copy, Default)]
pub struct WordHash;

#[derive(Debug, Default)]
pub struct WordHasher(u64);

impl std::hash::Hasher for WordHasher {
    fn finish(&self) -> u64 {
        self.0
    }
    fn write(&mut self, bytes: &[u8]) {
        for &b in bytes {
            self.0 = (self.0.rotate_left(8) ^ b as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15);
        }
    }
    fn write_u64(&mut self, x: u64) {
        self.0 = (self.0 ^ x).wrapping_mul(0x9e37_79b9_7f4a_7c15).rotate_left(29);
    }
}

impl std::hash::BuildHasher for WordHash {
    type Hasher = WordHasher;
    fn build_hasher(&self) -> WordHasher {
        WordHasher(0)
    }
}

/// Breadth-first closure of the 63 transvections.
pub fn generate_group() -> GroupEnumeration {
    let gens: Vec<[u8; 64]> = (1u8..64).map(|v| SpMatrix::transvection(v).row_combinations()).collect();
    let mut seen: std::collections::HashSet<u64, WordHash> =
        std::collections::HashSet::with_capacity_and_hasher(GROUP_ORDER, WordHash);
    seen.insert(SpMatrix::IDENTITY.0);
    let mut frontier = vec![SpMatrix::IDENTITY];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &m in &frontier {
            for g in &gens {
                let p = m.mul_by_table(g);
                if seen.insert(p.0) {
                    next.push(p);
                }
            }
        }
        frontier = next;
    }
    let mut elements: Vec<SpMatrix> = seen.into_iter().map(SpMatrix).collect();
    elements.sort_unstable();
    GroupEnumeration { elements }
}

/// Whether the group came from disk or was rebuilt.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CacheStatus {
    Loaded,
    Built,
    /// The cache failed verification and was rebuilt.
    Rebuilt,
}

pub fn cache_path(dir: &Path) -> PathBuf {
    dir.join(CACHE_FILE)
}

pub fn write_cache(dir: &Path, group: &GroupEnumeration) -> Result<PathBuf, Sp6Error> {
    let path = cache_path(dir);
    let io = |source| Sp6Error::Io { path: path.display().to_string(), source };
    std::fs::create_dir_all(dir).map_err(io)?;
    let mut buf = Vec::with_capacity(HEADER_LEN + 8 * group.len());
    buf.extend_from_slice(CACHE_MAGIC);
    buf.extend_from_slice(&CACHE_VERSION.to_le_bytes());
    buf.extend_from_slice(&(group.len() as u64).to_le_bytes());
    buf.extend_from_slice(&group.checksum());
    for m in &group.elements {
        buf.extend_from_slice(&m.0.to_le_bytes());
    }
    let tmp = path.with_extension("tmp");
    let mut f = std::fs::File::create(&tmp).map_err(io)?;
    f.write_all(&buf).map_err(io)?;
    f.sync_all().map_err(io)?;
    std::fs::rename(&tmp, &path).map_err(io)?;
    Ok(path)
}

pub fn read_cache(dir: &Path) -> Result<GroupEnumeration, Sp6Error> {
    let path = cache_path(dir);
    let corrupt = |reason: &str| Sp6Error::CacheCorrupt { path: path.display().to_string(), reason: reason.into() };
    let mut buf = Vec::new();
    std::fs::File::open(&path)
        .and_then(|mut f| f.read_to_end(&mut buf))
        .map_err(|source| Sp6Error::Io { path: path.display().to_string(), source })?;
    if buf.len() < HEADER_LEN || &buf[..8] != CACHE_MAGIC {
        return Err(corrupt("bad magic"));
    }
    if u32::from_le_bytes(buf[8..12].try_into().unwrap()) != CACHE_VERSION {
        return Err(corrupt("unsupported version"));
    }
    let count = u64::from_le_bytes(buf[12..20].try_into().unwrap()) as usize;
    if count != GROUP_ORDER || buf.len() != HEADER_LEN + 8 * count {
        return Err(corrupt("wrong element count"));
    }
    let elements: Vec<SpMatrix> = buf[HEADER_LEN..]
        .chunks_exact(8)
        .map(|c| SpMatrix(u64::from_le_bytes(c.try_into().unwrap())))
        .collect();
    let group = GroupEnumeration { elements };
    if group.checksum()[..] != buf[20..52] {
        return Err(corrupt("checksum mismatch"));
    }
    if !group.elements.windows(2).all(|w| w[0] < w[1]) {
        return Err(corrupt("elements not sorted"));
    }
    Ok(group)
}

/// Loads the cached enumeration, rebuilding (and rewriting) it when absent or corrupt.
pub fn load_or_generate(dir: &Path) -> Result<(GroupEnumeration, CacheStatus), Sp6Error> {
    let status = match read_cache(dir) {
        Ok(g) => return Ok((g, CacheStatus::Loaded)),
        Err(Sp6Error::Io { .. }) => CacheStatus::Built,
        Err(_) => CacheStatus::Rebuilt,
    };
    let group = generate_group();
    write_cache(dir, &group)?;
    Ok((group, status))
}

/// S₈ acting on the even-weight vectors of F₂⁸ modulo the all-ones vector,
/// written in a symplectic basis of the induced dot-product form.
#[derive(Debug, Clone)]
pub struct S8Embedding {
    /// Symplectic basis `e₁, e₂, e₃, f₁, f₂, f₃` as 8-bit representatives.
    basis: [u8; 6],
    classes: Vec<Partition>,
    reverse: HashMap<SpMatrix, u8, WordHash>,
}

/// Representative of a class in F₂⁸ / ⟨1⟩ with bit 7 clear.
#[inline]
fn reduce(x: u8) -> u8 {
    if x & 0x80 != 0 {
        !x
    } else {
        x
    }
}

#[inline]
fn dot(x: u8, y: u8) -> bool {
    (x & y).count_ones() % 2 == 1
}

/// Permutes the bits of `x`: bit `i` moves to bit `perm[i]`.
#[inline]
fn permute_bits(perm: &[usize; 8], x: u8) -> u8 {
    (0..8).fold(0, |acc, i| acc | (((x >> i) & 1) << perm[i]))
}

/// A permutation of 0..8 with the given cycle type, cycles on consecutive letters.
pub fn class_representative(mu: &Partition) -> [usize; 8] {
    let mut perm = [0usize; 8];
    let mut start = 0;
    for &m in mu.parts() {
        let m = m as usize;
        for k in 0..m {
            perm[start + k] = start + (k + 1) % m;
        }
        start += m;
    }
    perm
}

pub fn cycle_type(perm: &[usize; 8]) -> Partition {
    let mut seen = [false; 8];
    let mut parts = Vec::new();
    for s in 0..8 {
        let mut len = 0;
        let mut c = s;
        while !seen[c] {
            seen[c] = true;
            c = perm[c];
            len += 1;
        }
        if len > 0 {
            parts.push(len);
        }
    }
    Partition::new(parts)
}

fn all_permutations() -> Vec<[usize; 8]> {
    let mut out = Vec::with_capacity(S8_ORDER);
    let mut p = [0, 1, 2, 3, 4, 5, 6, 7];
    fn heap(k: usize, p: &mut [usize; 8], out: &mut Vec<[usize; 8]>) {
        if k == 1 {
            out.push(*p);
            return;
        }
        for i in 0..k {
            heap(k - 1, p, out);
            if k % 2 == 0 {
                p.swap(i, k - 1);
            } else {
                p.swap(0, k - 1);
            }
        }
    }
    heap(8, &mut p, &mut out);
    out
}

pub fn embed_s8() -> Result<S8Embedding, Sp6Error> {
    let quotient: Vec<u8> = (0u8..128).filter(|x| x.count_ones() % 2 == 0).collect();
    let mut space: Vec<u8> = quotient.iter().copied().filter(|&x| x != 0).collect();
    let mut es = Vec::new();
    let mut fs = Vec::new();
    while let Some(&v) = space.first() {
        let w = *space.iter().find(|&&w| dot(v, w)).ok_or(Sp6Error::FormReductionFailure(v))?;
        es.push(v);
        fs.push(w);
        space.retain(|&x| !dot(x, v) && !dot(x, w));
    }
    if es.len() != 3 {
        return Err(Sp6Error::FormReductionFailure(0));
    }
    let basis = [es[0], es[1], es[2], fs[0], fs[1], fs[2]];
    let mut emb = S8Embedding { basis, classes: Partition::all(8), reverse: HashMap::with_capacity_and_hasher(S8_ORDER, WordHash) };
    for perm in all_permutations() {
        let m = emb.forward(&perm);
        let class = emb.classes.iter().position(|c| *c == cycle_type(&perm)).expect("partition of 8") as u8;
        emb.reverse.insert(m, class);
    }
    Ok(emb)
}

impl S8Embedding {
    /// Coordinates of a quotient vector in the symplectic basis.
    fn coords(&self, x: u8) -> u8 {
        let b = &self.basis;
        (0..3).fold(0, |acc, i| acc | ((dot(x, b[3 + i]) as u8) << i) | ((dot(x, b[i]) as u8) << (3 + i)))
    }

    /// Matrix of a permutation of 0..8 (given as `perm[i] = π(i)`).
    pub fn forward(&self, perm: &[usize; 8]) -> SpMatrix {
        SpMatrix::from_columns(std::array::from_fn(|j| self.coords(reduce(permute_bits(perm, self.basis[j])))))
    }

    /// Cycle type of the permutation a matrix comes from, if it is in the image.
    pub fn cycle_type_of(&self, m: SpMatrix) -> Option<&Partition> {
        self.reverse.get(&m).map(|&c| &self.classes[c as usize])
    }

    pub fn image_size(&self) -> usize {
        self.reverse.len()
    }

    pub fn image(&self) -> impl Iterator<Item = SpMatrix> + '_ {
        self.reverse.keys().copied()
    }

    pub fn classes(&self) -> &[Partition] {
        &self.classes
    }

    /// Image sizes of each cycle type.
    pub fn class_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.classes.len()];
        for &c in self.reverse.values() {
            sizes[c as usize] += 1;
        }
        sizes
    }

    pub fn representative(&self, mu: &Partition) -> SpMatrix {
        self.forward(&class_representative(mu))
    }
}

/// `fusion[μ][ν] = #{g ∈ Sp(6,F₂) : g α_μ g⁻¹ ∈ S₈ has cycle type ν}` for one
/// embedded representative `α_μ` of every S₈ class `μ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fusion {
    pub classes: Vec<Partition>,
    pub counts: Vec<Vec<u64>>,
}

/// Conjugates of `alpha` that land in S₈, tallied by cycle type.
pub fn conjugate_counts(group: &GroupEnumeration, emb: &S8Embedding, alpha: SpMatrix, exec: ExecMode) -> Vec<u64> {
    let k = emb.classes.len();
    let alpha_rows = alpha.row_combinations();
    let tally = |chunk: &[SpMatrix]| {
        let mut c = vec![0u64; k];
        for &g in chunk {
            let conj = g.mul_by_table(&alpha_rows).mul(g.symplectic_inverse());
            if let Some(&cls) = emb.reverse.get(&conj) {
                c[cls as usize] += 1;
            }
        }
        c
    };
    let add = |mut a: Vec<u64>, b: Vec<u64>| {
        a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
        a
    };
    let chunks: Vec<&[SpMatrix]> = group.elements.chunks(16_384).collect();
    #[cfg(feature = "parallel")]
    if exec == ExecMode::Parallel {
        use rayon::prelude::*;
        return chunks.par_iter().map(|c| tally(c)).reduce(|| vec![0; k], add);
    }
    let _ = exec;
    chunks.iter().map(|c| tally(c)).fold(vec![0; k], add)
}

pub fn fusion(group: &GroupEnumeration, emb: &S8Embedding, exec: ExecMode) -> Fusion {
    let counts = emb.classes.iter().map(|mu| conjugate_counts(group, emb, emb.representative(mu), exec)).collect();
    Fusion { classes: emb.classes.clone(), counts }
}

impl Fusion {
    /// `ψ̂(α_μ) = (1/8!) Σ_ν fusion[μ][ν] ψ(ν)`, coefficientwise and exact.
    pub fn induce(&self, psi: &ClassFunction<CountPolynomial>) -> Result<ClassFunction<CountPolynomial>, Sp6Error> {
        if psi.n != 8 {
            return Err(Sp6Error::WrongDegree);
        }
        let s8 = factorial(8) as i64;
        ClassFunction::try_from_fn(8, |mu| {
            let i = self.classes.iter().position(|c| c == mu).expect("class of S_8");
            let mut sum = CountPolynomial::zero();
            for (j, nu) in self.classes.iter().enumerate() {
                let v = psi.get(nu).expect("class function is total");
                sum = &sum + &v.scale(self.counts[i][j] as i64);
            }
            sum.div_exact(s8).ok_or_else(|| Sp6Error::NonIntegralInduction { class: mu.clone() })
        })
    }
}

/// Induction of `ψ` from S₈ to Sp(6, F₂), evaluated on the S₈ classes.
pub fn induce_class_function(
    group: &GroupEnumeration,
    emb: &S8Embedding,
    psi: &ClassFunction<CountPolynomial>,
) -> Result<ClassFunction<CountPolynomial>, Sp6Error> {
    fusion(group, emb, ExecMode::Parallel).induce(psi)
}

/// `μ ↦ ψ̂(μ ∪ {1})` on partitions of 7.
pub fn restrict_induced_to_s7<T: Clone>(induced: &ClassFunction<T>) -> ClassFunction<T> {
    crate::reptheory::restrict_class_function(induced)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_and_transvections() {
        assert!(SpMatrix::IDENTITY.is_symplectic());
        for v in 1u8..64 {
            let t = SpMatrix::transvection(v);
            assert!(t.is_symplectic());
            assert_eq!(t.mul(t), SpMatrix::IDENTITY);
            assert_eq!(t.symplectic_inverse(), t);
            for x in 0u8..64 {
                assert_eq!(t.apply(x), x ^ if form(x, v) { v } else { 0 });
            }
        }
    }

    #[test]
    fn product_matches_composition() {
        let a = SpMatrix::transvection(5).mul(SpMatrix::transvection(40));
        let b = SpMatrix::transvection(17).mul(SpMatrix::transvection(3));
        for x in 0u8..64 {
            assert_eq!(a.mul(b).apply(x), a.apply(b.apply(x)));
        }
        assert_eq!(a.mul(a.symplectic_inverse()), SpMatrix::IDENTITY);
        assert_eq!(a.mul_by_table(&b.row_combinations()), a.mul(b));
        assert_eq!(a.transpose().transpose(), a);
    }

    #[test]
    fn embedding_basics() {
        let emb = embed_s8().unwrap();
        assert_eq!(emb.forward(&[0, 1, 2, 3, 4, 5, 6, 7]), SpMatrix::IDENTITY);
        assert_eq!(emb.image_size(), S8_ORDER);
        assert!(emb.image().all(|m| m.is_symplectic()));
        let sizes = emb.class_sizes();
        for (mu, s) in emb.classes().iter().zip(sizes) {
            assert_eq!(s as u128, mu.class_size(), "{mu}");
        }
        let swap = [1, 0, 2, 3, 4, 5, 6, 7];
        assert_eq!(emb.cycle_type_of(emb.forward(&swap)), Some(&"[2,1^6]".parse().unwrap()));
    }

    #[test]
    fn class_representatives_have_their_type() {
        for mu in Partition::all(8) {
            assert_eq!(cycle_type(&class_representative(&mu)), mu);
        }
    }
}
