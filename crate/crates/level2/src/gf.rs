//! Finite fields F_{q^m} over an odd prime power q, realised with exp/log/Zech tables.
//!
//! Nonzero elements are stored by their discrete logarithm with respect to a fixed
//! primitive element `g`, so multiplication is an index addition and addition goes
//! through a Zech table built from the additive (base-p digit) representation.

use std::sync::atomic::{AtomicU64, Ordering};

use thiserror::Error;

/// Default ceiling on the number of field elements a tower may tabulate.
pub const DEFAULT_CAP: u64 = 1 << 24;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GfError {
    #[error("q = {0} has characteristic 2, which is not supported")]
    EvenCharacteristic(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("F_{{{q}^{m}}} would need {order} elements, above the cap of {cap}")]
    ExtensionTooLarge { q: u64, m: u32, order: u128, cap: u64 },
    #[error("no primitive polynomial of degree {0} was found")]
    NoIrreducibleFound(u32),
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands live in different field towers")]
    TowerMismatch,
}

/// An odd prime power `q = p^n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
pub struct PrimePower {
    pub p: u64,
    pub n: u32,
    pub q: u64,
}

impl PrimePower {
    pub fn new(q: u64) -> Result<Self, GfError> {
        if q < 2 {
            return Err(GfError::NotPrimePower(q));
        }
        if q % 2 == 0 {
            return Err(if q.is_power_of_two() {
                GfError::EvenCharacteristic(q)
            } else {
                GfError::NotPrimePower(q)
            });
        }
        let p = smallest_prime_factor(q);
        let (mut rest, mut n) = (q, 0u32);
        while rest % p == 0 {
            rest /= p;
            n += 1;
        }
        if rest != 1 {
            return Err(GfError::NotPrimePower(q));
        }
        Ok(PrimePower { p, n, q })
    }
}

fn smallest_prime_factor(n: u64) -> u64 {
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return d;
        }
        d += 1;
    }
    n
}

/// A field element: `Elem(0)` is zero, `Elem(i + 1)` is `g^i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Elem(pub u32);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Discrete logarithm, `None` for zero.
    #[inline]
    pub fn log(self) -> Option<u32> {
        self.0.checked_sub(1)
    }
}

static NEXT_TOWER_ID: AtomicU64 = AtomicU64::new(1);

/// The field F_{q^m}, immutable once built.
#[derive(Debug)]
pub struct FieldTower {
    base: PrimePower,
    degree: u32,
    order: u32,
    modulus: Vec<u32>,
    exp: Vec<u32>,
    log: Vec<u32>,
    zech: Vec<u32>,
    id: u64,
}

impl FieldTower {
    /// Builds F_{q^m} with the default element cap.
    pub fn new(q: u64, m: u32) -> Result<Self, GfError> {
        Self::with_cap(q, m, DEFAULT_CAP)
    }

    /// Builds F_{q^m}. The modulus is the first monic polynomial of degree n·m over
    /// F_p, ordered by the integer `Σ c_i p^i` of its lower coefficients, for which
    /// `x` has multiplicative order exactly `q^m − 1`.
    pub fn with_cap(q: u64, m: u32, cap: u64) -> Result<Self, GfError> {
        let base = PrimePower::new(q)?;
        assert!(m >= 1, "extension degree must be positive");
        let order = (q as u128).checked_pow(m).unwrap_or(u128::MAX);
        if order > cap as u128 || order > u32::MAX as u128 {
            return Err(GfError::ExtensionTooLarge { q, m, order, cap });
        }
        let order = order as u32;
        let k = (base.n * m) as usize;
        let p = base.p as u32;
        let n1 = order - 1;
        let mut exp = vec![0u32; n1 as usize];
        let mut log = vec![u32::MAX; order as usize];
        let mut digits = vec![0u32; k];
        for t in 0..order {
            let mut coeffs = vec![0u32; k];
            let mut r = t;
            for c in coeffs.iter_mut() {
                *c = r % p;
                r /= p;
            }
            if coeffs[0] == 0 {
                continue;
            }
            if !try_primitive(&coeffs, p, n1, &mut exp, &mut digits) {
                continue;
            }
            for (i, &code) in exp.iter().enumerate() {
                log[code as usize] = i as u32;
            }
            let zech = exp
                .iter()
                .map(|&code| {
                    let c0 = code % p;
                    let bumped = code - c0 + (c0 + 1) % p;
                    if bumped == 0 {
                        0
                    } else {
                        log[bumped as usize] + 1
                    }
                })
                .collect();
            return Ok(FieldTower {
                base,
                degree: m,
                order,
                modulus: coeffs,
                exp,
                log,
                zech,
                id: NEXT_TOWER_ID.fetch_add(1, Ordering::Relaxed),
            });
        }
        Err(GfError::NoIrreducibleFound(k as u32))
    }

    pub fn base(&self) -> PrimePower {
        self.base
    }

    pub fn q(&self) -> u64 {
        self.base.q
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Number of elements, `q^m`.
    pub fn order(&self) -> u32 {
        self.order
    }

    /// Lower coefficients `c_0..c_{k−1}` of the monic modulus over F_p.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn id(&self) -> u64 {
        self.id
    }

    #[inline]
    fn n1(&self) -> u32 {
        self.order - 1
    }

    /// All elements, zero first, then `g^0, g^1, …`.
    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        (0..self.order).map(Elem)
    }

    pub fn generator(&self) -> Elem {
        Elem(2)
    }

    /// `g^i` for any integer exponent.
    #[inline]
    pub fn exp(&self, i: i64) -> Elem {
        Elem(i.rem_euclid(self.n1() as i64) as u32 + 1)
    }

    /// Base-p digit encoding of the additive representation.
    pub fn to_code(&self, x: Elem) -> u32 {
        match x.log() {
            None => 0,
            Some(i) => self.exp[i as usize],
        }
    }

    pub fn from_code(&self, code: u32) -> Elem {
        if code == 0 {
            Elem::ZERO
        } else {
            Elem(self.log[code as usize] + 1)
        }
    }

    /// Image of an integer under Z → F_p ⊂ F_{q^m}.
    pub fn from_int(&self, k: i64) -> Elem {
        self.from_code(k.rem_euclid(self.base.p as i64) as u32)
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a.0 == 0 || b.0 == 0 {
            return Elem::ZERO;
        }
        let s = a.0 - 1 + b.0 - 1;
        let n1 = self.n1();
        Elem(if s >= n1 { s - n1 } else { s } + 1)
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        if a.0 == 0 {
            return b;
        }
        if b.0 == 0 {
            return a;
        }
        let n1 = self.n1();
        let (i, j) = (a.0 - 1, b.0 - 1);
        let d = if j >= i { j - i } else { j + n1 - i };
        let z = self.zech[d as usize];
        if z == 0 {
            return Elem::ZERO;
        }
        let s = i + z - 1;
        Elem(if s >= n1 { s - n1 } else { s } + 1)
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        if a.0 == 0 {
            return a;
        }
        let n1 = self.n1();
        let s = a.0 - 1 + n1 / 2;
        Elem(if s >= n1 { s - n1 } else { s } + 1)
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    pub fn inv(&self, a: Elem) -> Result<Elem, GfError> {
        match a.log() {
            None => Err(GfError::DivisionByZero),
            Some(0) => Ok(Elem::ONE),
            Some(i) => Ok(Elem(self.n1() - i + 1)),
        }
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem, GfError> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: Elem, e: u64) -> Elem {
        match a.log() {
            None if e == 0 => Elem::ONE,
            None => Elem::ZERO,
            Some(i) => {
                let n1 = self.n1() as u64;
                Elem(((i as u64 * (e % n1)) % n1) as u32 + 1)
            }
        }
    }

    /// `x ↦ x^{q^k}`.
    #[inline]
    pub fn frobenius(&self, x: Elem, k: u32) -> Elem {
        match x.log() {
            None => x,
            Some(i) => {
                let n1 = self.n1() as u64;
                let f = pow_mod(self.base.q, k as u64, n1);
                Elem(((i as u64 * f) % n1) as u32 + 1)
            }
        }
    }

    /// Multiplier on logarithms realising one Frobenius step.
    pub fn frobenius_multiplier(&self) -> u64 {
        self.base.q % self.n1() as u64
    }

    /// Index stride of F_{q^d}^× inside F_{q^m}^×.
    pub fn subfield_stride(&self, d: u32) -> u32 {
        assert!(self.degree % d == 0, "F_q^{d} is not a subfield of F_q^{}", self.degree);
        let sub = self.base.q.pow(d) - 1;
        (self.n1() as u64 / sub) as u32
    }

    pub fn in_subfield(&self, x: Elem, d: u32) -> bool {
        match x.log() {
            None => true,
            Some(i) => i % self.subfield_stride(d) == 0,
        }
    }

    /// Least `d | m` with `x ∈ F_{q^d}`.
    pub fn subfield_degree(&self, x: Elem) -> u32 {
        divisors(self.degree)
            .into_iter()
            .find(|&d| self.in_subfield(x, d))
            .expect("m divides itself")
    }

    /// Elements of the subfield F_{q^d}, zero first.
    pub fn subfield_elements(&self, d: u32) -> Vec<Elem> {
        let s = self.subfield_stride(d);
        let count = self.base.q.pow(d) - 1;
        std::iter::once(Elem::ZERO)
            .chain((0..count as u32).map(|i| Elem(i * s + 1)))
            .collect()
    }

    /// A basis of F_q over F_p, given as powers of a generator of F_q^×.
    pub fn base_field_basis(&self) -> Vec<Elem> {
        let h = Elem(self.subfield_stride(1) + 1);
        (0..self.base.n as u64).map(|e| self.pow(h, e)).collect()
    }

    pub fn same_tower(&self, other: &FieldTower) -> bool {
        self.id == other.id
    }
}

/// Runs `x ↦ x·x` over F_p[x]/(f) from 1 and records the orbit; true when `x` has order `n1`.
fn try_primitive(coeffs: &[u32], p: u32, n1: u32, exp: &mut [u32], digits: &mut [u32]) -> bool {
    let k = coeffs.len();
    digits.iter_mut().for_each(|d| *d = 0);
    digits[0] = 1;
    for (step, slot) in exp.iter_mut().enumerate() {
        let mut code = 0u32;
        for &d in digits.iter().rev() {
            code = code * p + d;
        }
        *slot = code;
        let top = digits[k - 1];
        for i in (1..k).rev() {
            digits[i] = (digits[i - 1] + p - (top * coeffs[i]) % p) % p;
        }
        digits[0] = (p - (top * coeffs[0]) % p) % p;
        if digits[0] == 1 && digits[1..].iter().all(|&d| d == 0) {
            // x^(step+1) = 1, so x is primitive only when step + 1 = n1.
            return step + 1 == n1 as usize;
        }
    }
    false
}

pub(crate) fn pow_mod(b: u64, e: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let (mut r, mut b, mut e) = (1u128, b as u128 % m as u128, e);
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m as u128;
        }
        b = b * b % m as u128;
        e >>= 1;
    }
    r as u64
}

pub fn divisors(n: u32) -> Vec<u32> {
    (1..=n).filter(|d| n % d == 0).collect()
}

pub fn mobius(n: u32) -> i64 {
    let (mut n, mut sign, mut d) = (n, 1i64, 2u32);
    while d * d <= n {
        if n % d == 0 {
            n /= d;
            if n % d == 0 {
                return 0;
            }
            sign = -sign;
        }
        d += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

/// An element bundled with its tower, for checked arithmetic across API boundaries.
#[derive(Debug, Clone, Copy)]
pub struct FieldElement<'a> {
    pub tower: &'a FieldTower,
    pub value: Elem,
}

impl PartialEq for FieldElement<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.tower.same_tower(other.tower) && self.value == other.value
    }
}

impl Eq for FieldElement<'_> {}

impl<'a> FieldElement<'a> {
    pub fn new(tower: &'a FieldTower, value: Elem) -> Self {
        FieldElement { tower, value }
    }

    fn check(&self, other: &Self) -> Result<(), GfError> {
        if self.tower.same_tower(other.tower) {
            Ok(())
        } else {
            Err(GfError::TowerMismatch)
        }
    }

    pub fn add(self, other: Self) -> Result<Self, GfError> {
        self.check(&other)?;
        Ok(Self::new(self.tower, self.tower.add(self.value, other.value)))
    }

    pub fn mul(self, other: Self) -> Result<Self, GfError> {
        self.check(&other)?;
        Ok(Self::new(self.tower, self.tower.mul(self.value, other.value)))
    }

    pub fn neg(self) -> Self {
        Self::new(self.tower, self.tower.neg(self.value))
    }

    pub fn inv(self) -> Result<Self, GfError> {
        Ok(Self::new(self.tower, self.tower.inv(self.value)?))
    }

    pub fn frobenius(self, k: u32) -> Self {
        Self::new(self.tower, self.tower.frobenius(self.value, k))
    }

    pub fn subfield_degree(self) -> u32 {
        self.tower.subfield_degree(self.value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_f3() {
        let t = FieldTower::new(3, 1).unwrap();
        assert_eq!(t.order(), 3);
        let one = t.one_hot();
        assert_eq!(t.add(t.add(one, one), one), Elem::ZERO);
        assert_eq!(t.pow(t.generator(), 2), Elem::ONE);
    }

    #[test]
    fn f9_generator_order() {
        let t = FieldTower::new(3, 2).unwrap();
        let g = t.generator();
        assert_eq!(t.pow(g, 8), Elem::ONE);
        assert_eq!(t.pow(g, 4), t.neg(Elem::ONE));
        assert_eq!(t.mul(g, t.pow(g, 3)), t.neg(Elem::ONE));
    }

    #[test]
    fn frobenius_order_in_f3_7() {
        let t = FieldTower::new(3, 7).unwrap();
        let g = t.generator();
        for k in 1..7 {
            assert_ne!(t.frobenius(g, k), g);
        }
        assert_eq!(t.frobenius(g, 7), g);
    }

    #[test]
    fn rejects_bad_q() {
        assert_eq!(PrimePower::new(8), Err(GfError::EvenCharacteristic(8)));
        assert_eq!(PrimePower::new(15), Err(GfError::NotPrimePower(15)));
        assert_eq!(PrimePower::new(9).unwrap(), PrimePower { p: 3, n: 2, q: 9 });
        assert!(matches!(FieldTower::new(3, 16), Err(GfError::ExtensionTooLarge { .. })));
    }

    #[test]
    fn mobius_values() {
        let m: Vec<i64> = (1..=10).map(mobius).collect();
        assert_eq!(m, vec![1, -1, -1, 0, -1, 1, -1, 0, 0, 1]);
    }

    impl FieldTower {
        fn one_hot(&self) -> Elem {
            self.from_int(1)
        }
    }
}
