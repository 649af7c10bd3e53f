//! Points, lines and conics in P¹ and P² over a field tower.
//!
//! Dimension is a const parameter, so mixing P¹ and P² objects is a type error
//! rather than a runtime failure.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::gf::{divisors, lcm, mobius, Elem, FieldTower};
use crate::reptheory::Partition;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeomError {
    #[error("the zero vector is not a projective point")]
    ZeroVector,
    #[error("the two points coincide")]
    CoincidentPoints,
    #[error("the five points do not determine a unique conic")]
    UnderdeterminedSystem,
    #[error("the point does not lie on the conic")]
    PointNotOnConic,
    #[error("the conic is singular")]
    SingularConic,
    #[error("point count over F_q^{0} was not supplied")]
    MissingDegree(u32),
    #[error("a rational point lies on {0} rational tangents")]
    TangentAnomaly(usize),
}

/// A point of P^{N−1}, normalised so its first nonzero coordinate is 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjPoint<const N: usize> {
    coords: [Elem; N],
}

pub type PlanePoint = ProjPoint<3>;
pub type LinePoint = ProjPoint<2>;

impl<const N: usize> ProjPoint<N> {
    pub fn new(t: &FieldTower, coords: [Elem; N]) -> Result<Self, GeomError> {
        normalize(t, coords).map(|coords| ProjPoint { coords }).ok_or(GeomError::ZeroVector)
    }

    /// Wraps coordinates that are already normalised.
    pub fn from_normalized(coords: [Elem; N]) -> Self {
        debug_assert!(coords.iter().find(|c| !c.is_zero()) == Some(&Elem::ONE));
        ProjPoint { coords }
    }

    pub fn coords(&self) -> [Elem; N] {
        self.coords
    }

    pub fn frobenius(&self, t: &FieldTower, k: u32) -> Self {
        ProjPoint { coords: self.coords.map(|c| t.frobenius(c, k)) }
    }

    /// Degree of the smallest subfield containing the point.
    pub fn field_degree(&self, t: &FieldTower) -> u32 {
        self.coords.iter().fold(1, |acc, &c| lcm(acc as u64, t.subfield_degree(c) as u64) as u32)
    }
}

fn normalize<const N: usize>(t: &FieldTower, mut v: [Elem; N]) -> Option<[Elem; N]> {
    let lead = *v.iter().find(|c| !c.is_zero())?;
    let inv = t.inv(lead).expect("nonzero");
    for c in v.iter_mut() {
        *c = t.mul(*c, inv);
    }
    Some(v)
}

/// All points of P^{N−1}(F_{q^d}) inside the tower, in normalised coordinates.
pub fn points_over<const N: usize>(t: &FieldTower, d: u32) -> Vec<ProjPoint<N>> {
    let sub = t.subfield_elements(d);
    let mut out = Vec::new();
    for lead in 0..N {
        let free = N - lead - 1;
        let total = sub.len().pow(free as u32);
        for mut idx in 0..total {
            let mut coords = [Elem::ZERO; N];
            coords[lead] = Elem::ONE;
            for c in coords.iter_mut().skip(lead + 1) {
                *c = sub[idx % sub.len()];
                idx /= sub.len();
            }
            out.push(ProjPoint { coords });
        }
    }
    out
}

/// Points of P^{N−1} whose field of definition is exactly F_{q^d}.
pub fn strict_points_over<const N: usize>(t: &FieldTower, d: u32) -> Vec<ProjPoint<N>> {
    points_over::<N>(t, d).into_iter().filter(|p| p.field_degree(t) == d).collect()
}

#[inline]
pub fn det3(t: &FieldTower, a: &[Elem; 3], b: &[Elem; 3], c: &[Elem; 3]) -> Elem {
    let m = |x, y| t.mul(x, y);
    let minor0 = t.sub(m(b[1], c[2]), m(b[2], c[1]));
    let minor1 = t.sub(m(b[0], c[2]), m(b[2], c[0]));
    let minor2 = t.sub(m(b[0], c[1]), m(b[1], c[0]));
    t.add(t.sub(m(a[0], minor0), m(a[1], minor1)), m(a[2], minor2))
}

pub fn collinear(t: &FieldTower, p1: &PlanePoint, p2: &PlanePoint, p3: &PlanePoint) -> bool {
    det3(t, &p1.coords, &p2.coords, &p3.coords).is_zero()
}

/// Conic monomials x², y², z², xy, xz, yz at a point.
pub fn conic_monomials(t: &FieldTower, p: &[Elem; 3]) -> [Elem; 6] {
    let [x, y, z] = *p;
    [t.mul(x, x), t.mul(y, y), t.mul(z, z), t.mul(x, y), t.mul(x, z), t.mul(y, z)]
}

/// Rank of a matrix over the tower by Gaussian elimination.
pub fn rank(t: &FieldTower, rows: &mut [Vec<Elem>]) -> usize {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut r = 0;
    for col in 0..ncols {
        let Some(piv) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, piv);
        let inv = t.inv(rows[r][col]).expect("pivot is nonzero");
        for c in rows[r].iter_mut() {
            *c = t.mul(*c, inv);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[col].is_zero() {
                let f = row[col];
                for (x, &y) in row.iter_mut().zip(&pivot_row) {
                    *x = t.sub(*x, t.mul(f, y));
                }
            }
        }
        r += 1;
    }
    r
}

/// True iff the 6×6 matrix of conic monomials at the points is singular.
pub fn six_on_a_conic(t: &FieldTower, pts: &[PlanePoint; 6]) -> bool {
    let mut rows: Vec<Vec<Elem>> =
        pts.iter().map(|p| conic_monomials(t, &p.coords).to_vec()).collect();
    rank(t, &mut rows) < 6
}

/// Seven pairwise distinct points, no three collinear and no six on a conic.
pub fn in_general_position(t: &FieldTower, pts: &[PlanePoint; 7]) -> bool {
    for i in 0..7 {
        for j in i + 1..7 {
            for k in j + 1..7 {
                if collinear(t, &pts[i], &pts[j], &pts[k]) {
                    return false;
                }
            }
        }
    }
    (0..7).all(|skip| {
        let six: Vec<PlanePoint> =
            pts.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, p)| *p).collect();
        !six_on_a_conic(t, &six.try_into().unwrap())
    })
}

/// A line `a x + b y + c z = 0` with normalised coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Line {
    coeffs: [Elem; 3],
}

impl Line {
    pub fn new(t: &FieldTower, coeffs: [Elem; 3]) -> Result<Self, GeomError> {
        normalize(t, coeffs).map(|coeffs| Line { coeffs }).ok_or(GeomError::ZeroVector)
    }

    pub fn coeffs(&self) -> [Elem; 3] {
        self.coeffs
    }

    pub fn contains(&self, t: &FieldTower, p: &PlanePoint) -> bool {
        let [a, b, c] = self.coeffs;
        let [x, y, z] = p.coords;
        t.add(t.add(t.mul(a, x), t.mul(b, y)), t.mul(c, z)).is_zero()
    }

    pub fn frobenius(&self, t: &FieldTower, k: u32) -> Self {
        Line { coeffs: self.coeffs.map(|c| t.frobenius(c, k)) }
    }
}

pub fn line_through(t: &FieldTower, p1: &PlanePoint, p2: &PlanePoint) -> Result<Line, GeomError> {
    let [a0, a1, a2] = p1.coords;
    let [b0, b1, b2] = p2.coords;
    let cross = [
        t.sub(t.mul(a1, b2), t.mul(a2, b1)),
        t.sub(t.mul(a2, b0), t.mul(a0, b2)),
        t.sub(t.mul(a0, b1), t.mul(a1, b0)),
    ];
    Line::new(t, cross).map_err(|_| GeomError::CoincidentPoints)
}

/// A conic with coefficients of x², y², z², xy, xz, yz, normalised.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Conic {
    coeffs: [Elem; 6],
}

impl Conic {
    pub fn new(t: &FieldTower, coeffs: [Elem; 6]) -> Result<Self, GeomError> {
        normalize(t, coeffs).map(|coeffs| Conic { coeffs }).ok_or(GeomError::ZeroVector)
    }

    pub fn coeffs(&self) -> [Elem; 6] {
        self.coeffs
    }

    pub fn contains(&self, t: &FieldTower, p: &PlanePoint) -> bool {
        conic_monomials(t, &p.coords)
            .iter()
            .zip(&self.coeffs)
            .fold(Elem::ZERO, |acc, (&m, &c)| t.add(acc, t.mul(m, c)))
            .is_zero()
    }

    pub fn frobenius(&self, t: &FieldTower, k: u32) -> Self {
        Conic { coeffs: self.coeffs.map(|c| t.frobenius(c, k)) }
    }

    /// Gradient `(2ax+dy+ez, dx+2by+fz, ex+fy+2cz)` at `p`.
    fn gradient(&self, t: &FieldTower, p: &PlanePoint) -> [Elem; 3] {
        let [a, b, c, d, e, f] = self.coeffs;
        let [x, y, z] = p.coords;
        let two = t.from_int(2);
        let lin = |u: Elem, ux: Elem, v: Elem, vx: Elem, w: Elem, wx: Elem| {
            t.add(t.add(t.mul(u, ux), t.mul(v, vx)), t.mul(w, wx))
        };
        [
            lin(t.mul(two, a), x, d, y, e, z),
            lin(d, x, t.mul(two, b), y, f, z),
            lin(e, x, f, y, t.mul(two, c), z),
        ]
    }
}

/// Nonsingularity of the symmetric matrix `[[2a,d,e],[d,2b,f],[e,f,2c]]`.
pub fn is_smooth_conic(t: &FieldTower, c: &Conic) -> bool {
    let [a, b, cc, d, e, f] = c.coeffs;
    let two = t.from_int(2);
    let m = [[t.mul(two, a), d, e], [d, t.mul(two, b), f], [e, f, t.mul(two, cc)]];
    !det3(t, &m[0], &m[1], &m[2]).is_zero()
}

pub fn tangent_line(t: &FieldTower, c: &Conic, p: &PlanePoint) -> Result<Line, GeomError> {
    if !is_smooth_conic(t, c) {
        return Err(GeomError::SingularConic);
    }
    if !c.contains(t, p) {
        return Err(GeomError::PointNotOnConic);
    }
    Line::new(t, c.gradient(t, p)).map_err(|_| GeomError::SingularConic)
}

/// The conic through five points, when the linear system has a one-dimensional kernel.
pub fn conic_through_five(t: &FieldTower, pts: &[PlanePoint; 5]) -> Result<Conic, GeomError> {
    let mut rows: Vec<Vec<Elem>> =
        pts.iter().map(|p| conic_monomials(t, &p.coords).to_vec()).collect();
    if rank(t, &mut rows) != 5 {
        return Err(GeomError::UnderdeterminedSystem);
    }
    // Reduced row echelon form: exactly one free column.
    let pivots: Vec<usize> =
        rows.iter().map(|r| r.iter().position(|c| !c.is_zero()).unwrap()).collect();
    let free = (0..6).find(|c| !pivots.contains(c)).unwrap();
    let mut coeffs = [Elem::ZERO; 6];
    coeffs[free] = Elem::ONE;
    for (row, &pc) in rows.iter().zip(&pivots) {
        coeffs[pc] = t.neg(row[free]);
    }
    Conic::new(t, coeffs)
}

/// Position of a point relative to a smooth conic over F_q.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
pub enum TangencyClass {
    On,
    Inside,
    Outside,
}

/// Classifies a rational point by the number of rational tangents through it.
pub fn classify_point(t: &FieldTower, c: &Conic, p: &PlanePoint) -> Result<TangencyClass, GeomError> {
    if !is_smooth_conic(t, c) {
        return Err(GeomError::SingularConic);
    }
    if c.contains(t, p) {
        return Ok(TangencyClass::On);
    }
    let through = rational_tangents(t, c)?.iter().filter(|l| l.contains(t, p)).count();
    match through {
        0 => Ok(TangencyClass::Inside),
        2 => Ok(TangencyClass::Outside),
        n => Err(GeomError::TangentAnomaly(n)),
    }
}

/// Tangent lines at the F_q-points of a smooth conic.
pub fn rational_tangents(t: &FieldTower, c: &Conic) -> Result<Vec<Line>, GeomError> {
    points_over::<3>(t, 1)
        .iter()
        .filter(|p| c.contains(t, p))
        .map(|p| tangent_line(t, c, p))
        .collect()
}

/// `|P^n(F_q)| = Σ_{i=0}^n q^i`.
pub fn count_projective_points(n: u32, q: u64) -> u128 {
    (0..=n).map(|i| (q as u128).pow(i)).sum()
}

/// Number of strict F_{q^i}-points given `|X(F_{q^d})|` for `d | i`.
pub fn strict_count(counts: &BTreeMap<u32, u128>, i: u32) -> Result<i128, GeomError> {
    divisors(i).into_iter().try_fold(0i128, |acc, d| {
        let c = *counts.get(&d).ok_or(GeomError::MissingDegree(d))?;
        Ok(acc + mobius(i / d) as i128 * c as i128)
    })
}

/// Number of conjugate λ-tuples of pairwise distinct points:
/// `Π_i Π_{j<a_i} (strict_i − i·j)` with `a_i` the multiplicity of `i` in λ.
pub fn count_conjugate_tuples(
    counts: &BTreeMap<u32, u128>,
    lambda: &Partition,
) -> Result<i128, GeomError> {
    let mut total = 1i128;
    for (i, a) in lambda.multiplicities() {
        let s = strict_count(counts, i)?;
        for j in 0..a as i128 {
            total *= s - i as i128 * j;
        }
    }
    Ok(total)
}

/// `|P^n(F_{q^d})|` for every `d` dividing a part of λ.
pub fn projective_counts(n: u32, q: u64, lambda: &Partition) -> BTreeMap<u32, u128> {
    lambda
        .parts()
        .iter()
        .flat_map(|&i| divisors(i))
        .map(|d| (d, count_projective_points(n, q.pow(d))))
        .collect()
}

/// `A·p` for a 3×3 matrix acting on column vectors.
pub fn apply_matrix(t: &FieldTower, a: &[[Elem; 3]; 3], p: &PlanePoint) -> PlanePoint {
    let v = p.coords;
    let row = |r: &[Elem; 3]| {
        t.add(t.add(t.mul(r[0], v[0]), t.mul(r[1], v[1])), t.mul(r[2], v[2]))
    };
    PlanePoint::new(t, [row(&a[0]), row(&a[1]), row(&a[2])]).expect("invertible matrix")
}
