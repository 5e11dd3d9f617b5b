//! Finite (possibly nonassociative) rings given by structure constants.
//!
//! The additive group is `Z_{d_1} x ... x Z_{d_k}`. Elements are encoded as a
//! mixed-radix index with coordinate 0 least significant. Multiplication is
//! the bilinear extension of the generator products `sc[i][j]`.

use std::sync::{Arc, OnceLock};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::group::Element;

/// Upper bound on the number of cyclic factors; orders are capped at 2^32.
pub const MAX_RANK: usize = 32;

/// Default order up to which a ring materializes its full product table.
pub const DEFAULT_TABLE_THRESHOLD: usize = 4096;

type Coords = [u64; MAX_RANK];

/// Integer pair `(a, b)` standing for `f(X, Y) = aXY + bYX`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PolySpec {
    pub a: i64,
    pub b: i64,
}

impl PolySpec {
    pub const COMMUTE: PolySpec = PolySpec { a: 1, b: -1 };
    pub const ANNIHILATE: PolySpec = PolySpec { a: 1, b: 0 };

    pub fn new(a: i64, b: i64) -> Self {
        PolySpec { a, b }
    }
}

impl std::fmt::Display for PolySpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{},{}", self.a, self.b)
    }
}

impl std::str::FromStr for PolySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::ParamError(format!("poly `{s}` is not of the form a,b"));
        let (a, b) = s.split_once(',').ok_or_else(bad)?;
        Ok(PolySpec {
            a: a.trim().parse().map_err(|_| bad())?,
            b: b.trim().parse().map_err(|_| bad())?,
        })
    }
}

#[derive(Clone)]
struct NonzeroConstant {
    i: usize,
    j: usize,
    /// gcd(d_i, d_j); the product coefficient only matters modulo this
    modulus: u64,
    coeffs: Vec<u64>,
}

/// A finite ring: additive invariants plus a structure-constant tensor.
#[derive(Clone)]
pub struct FiniteRing {
    invariants: Vec<u64>,
    sc: Vec<Vec<Vec<u64>>>,
    order: usize,
    strides: Vec<usize>,
    nonzero: Vec<NonzeroConstant>,
    table_threshold: usize,
    table: OnceLock<Arc<Vec<u32>>>,
}

impl PartialEq for FiniteRing {
    fn eq(&self, other: &Self) -> bool {
        self.invariants == other.invariants && self.sc == other.sc
    }
}

impl Eq for FiniteRing {}

impl std::fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FiniteRing")
            .field("invariants", &self.invariants)
            .field("sc", &self.sc)
            .finish()
    }
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Additive order of the vector `v` in `Z_{d_1} x ... x Z_{d_k}`.
pub(crate) fn vector_order(invariants: &[u64], v: &[u64]) -> u64 {
    invariants
        .iter()
        .zip(v)
        .map(|(&d, &x)| d / gcd(d, x))
        .fold(1, |acc, o| acc / gcd(acc, o) * o)
}

impl FiniteRing {
    /// Validates invariants and structure constants.
    ///
    /// Every `sc[i][j]` must have additive order dividing `gcd(d_i, d_j)`,
    /// which is exactly the condition for the bilinear extension to exist.
    pub fn validate(invariants: Vec<u64>, sc: Vec<Vec<Vec<u64>>>) -> Result<Self> {
        if invariants.is_empty() {
            return Err(Error::EmptyInvariants);
        }
        for (index, &value) in invariants.iter().enumerate() {
            if value < 2 {
                return Err(Error::InvalidInvariant { index, value });
            }
        }
        let k = invariants.len();
        let order = invariants
            .iter()
            .try_fold(1u128, |acc, &d| acc.checked_mul(d as u128))
            .unwrap_or(u128::MAX);
        if k > MAX_RANK || order > u32::MAX as u128 {
            return Err(Error::OrderOverflow {
                order,
                cap: u32::MAX as u128,
            });
        }
        if sc.len() != k {
            return Err(Error::MalformedVector(format!(
                "sc has {} rows, expected {k}",
                sc.len()
            )));
        }
        for (i, row) in sc.iter().enumerate() {
            if row.len() != k {
                return Err(Error::MalformedVector(format!(
                    "sc row {i} has {} entries, expected {k}",
                    row.len()
                )));
            }
            for (j, v) in row.iter().enumerate() {
                if v.len() != k {
                    return Err(Error::MalformedVector(format!(
                        "sc[{i}][{j}] has length {}, expected {k}",
                        v.len()
                    )));
                }
                if let Some(m) = v.iter().zip(&invariants).position(|(&c, &d)| c >= d) {
                    return Err(Error::MalformedVector(format!(
                        "sc[{i}][{j}] coordinate {m} is {} but must be below {}",
                        v[m], invariants[m]
                    )));
                }
                let g = gcd(invariants[i], invariants[j]);
                let ord = vector_order(&invariants, v);
                if g % ord != 0 {
                    return Err(Error::IncompatibleOrder {
                        i,
                        j,
                        order: ord,
                        gcd: g,
                    });
                }
            }
        }
        Ok(Self::from_parts(invariants, sc))
    }

    /// The ring with one element. It has no invariant factors and is only
    /// reachable through this constructor.
    pub fn zero() -> Self {
        Self::from_parts(Vec::new(), Vec::new())
    }

    /// Ring with all products zero.
    pub fn null(invariants: Vec<u64>) -> Result<Self> {
        let k = invariants.len();
        FiniteRing::validate(invariants, vec![vec![vec![0; k]; k]; k])
    }

    pub(crate) fn from_parts(invariants: Vec<u64>, sc: Vec<Vec<Vec<u64>>>) -> Self {
        let k = invariants.len();
        let mut strides = Vec::with_capacity(k);
        let mut order = 1usize;
        for &d in &invariants {
            strides.push(order);
            order *= d as usize;
        }
        let mut nonzero = Vec::new();
        for i in 0..k {
            for j in 0..k {
                if sc[i][j].iter().any(|&c| c != 0) {
                    nonzero.push(NonzeroConstant {
                        i,
                        j,
                        modulus: gcd(invariants[i], invariants[j]),
                        coeffs: sc[i][j].clone(),
                    });
                }
            }
        }
        FiniteRing {
            invariants,
            sc,
            order,
            strides,
            nonzero,
            table_threshold: DEFAULT_TABLE_THRESHOLD,
            table: OnceLock::new(),
        }
    }

    /// Overrides the order up to which [`FiniteRing::ensure_table`] materializes
    /// the product table.
    pub fn with_table_threshold(mut self, threshold: usize) -> Self {
        self.table_threshold = threshold;
        self.table = OnceLock::new();
        self
    }

    pub fn invariants(&self) -> &[u64] {
        &self.invariants
    }

    pub fn structure_constants(&self) -> &[Vec<Vec<u64>>] {
        &self.sc
    }

    pub fn rank(&self) -> usize {
        self.invariants.len()
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn elements(&self) -> std::ops::Range<Element> {
        0..self.order
    }

    pub fn is_null(&self) -> bool {
        self.nonzero.is_empty()
    }

    pub const ZERO: Element = 0;

    /// Index of the generator `e_i`.
    pub fn generator(&self, i: usize) -> Element {
        self.strides[i]
    }

    pub fn encode(&self, v: &[u64]) -> Element {
        debug_assert_eq!(v.len(), self.rank());
        v.iter()
            .zip(&self.invariants)
            .zip(&self.strides)
            .map(|((&x, &d), &s)| (x % d) as usize * s)
            .sum()
    }

    pub fn decode(&self, x: Element) -> Vec<u64> {
        let mut c = [0u64; MAX_RANK];
        self.decode_into(x, &mut c);
        c[..self.rank()].to_vec()
    }

    #[inline]
    fn decode_into(&self, mut x: Element, out: &mut Coords) {
        for (slot, &d) in out.iter_mut().zip(&self.invariants) {
            *slot = (x % d as usize) as u64;
            x /= d as usize;
        }
    }

    #[inline]
    fn encode_coords(&self, c: &Coords) -> Element {
        c.iter()
            .zip(&self.strides)
            .map(|(&x, &s)| x as usize * s)
            .sum()
    }

    pub fn add(&self, x: Element, y: Element) -> Element {
        let (mut a, mut b) = ([0u64; MAX_RANK], [0u64; MAX_RANK]);
        self.decode_into(x, &mut a);
        self.decode_into(y, &mut b);
        for (m, &d) in self.invariants.iter().enumerate() {
            a[m] = (a[m] + b[m]) % d;
        }
        self.encode_coords(&a)
    }

    pub fn neg(&self, x: Element) -> Element {
        self.scale(-1, x)
    }

    pub fn sub(&self, x: Element, y: Element) -> Element {
        self.add(x, self.neg(y))
    }

    /// Integer multiple `m * x`, computed coordinatewise.
    pub fn scale(&self, m: i64, x: Element) -> Element {
        let mut a = [0u64; MAX_RANK];
        self.decode_into(x, &mut a);
        for (c, &d) in a.iter_mut().zip(&self.invariants) {
            let md = (m as i128).rem_euclid(d as i128) as u128;
            *c = ((*c as u128 * md) % d as u128) as u64;
        }
        self.encode_coords(&a)
    }

    /// Additive order of `x`.
    pub fn additive_order(&self, x: Element) -> u64 {
        vector_order(&self.invariants, &self.decode(x))
    }

    /// Product `x * y`, from the table when one has been built.
    #[inline]
    pub fn mul(&self, x: Element, y: Element) -> Element {
        match self.table.get() {
            Some(t) => t[x * self.order + y] as usize,
            None => self.mul_direct(x, y),
        }
    }

    /// Product computed from the structure constants, ignoring any table.
    pub fn mul_direct(&self, x: Element, y: Element) -> Element {
        if self.nonzero.is_empty() {
            return 0;
        }
        let (mut a, mut b, mut acc) = ([0u64; MAX_RANK], [0u64; MAX_RANK], [0u64; MAX_RANK]);
        self.decode_into(x, &mut a);
        self.decode_into(y, &mut b);
        for nz in &self.nonzero {
            let s = (a[nz.i] as u128 * b[nz.j] as u128 % nz.modulus as u128) as u64;
            if s == 0 {
                continue;
            }
            for (m, &c) in nz.coeffs.iter().enumerate() {
                if c != 0 {
                    let d = self.invariants[m] as u128;
                    acc[m] = ((acc[m] as u128 + s as u128 * c as u128) % d) as u64;
                }
            }
        }
        self.encode_coords(&acc)
    }

    /// Materializes the product table if the order is within the threshold.
    /// Returns whether a table is available afterwards.
    pub fn ensure_table(&self) -> bool {
        if self.order > self.table_threshold {
            return self.table.get().is_some();
        }
        self.table.get_or_init(|| {
            let n = self.order;
            let mut t = vec![0u32; n * n];
            if !self.nonzero.is_empty() {
                t.par_chunks_mut(n).enumerate().for_each(|(x, row)| {
                    for (y, slot) in row.iter_mut().enumerate() {
                        *slot = self.mul_direct(x, y) as u32;
                    }
                });
            }
            Arc::new(t)
        });
        true
    }

    /// Evaluates `a*xy + b*yx`.
    pub fn eval_poly(&self, f: PolySpec, x: Element, y: Element) -> Element {
        let xy = self.mul(x, y);
        let yx = self.mul(y, x);
        self.add(self.scale(f.a, xy), self.scale(f.b, yx))
    }

    pub fn commutator(&self, x: Element, y: Element) -> Element {
        self.sub(self.mul(x, y), self.mul(y, x))
    }

    /// Associativity checked on generator triples; both bracketings are
    /// trilinear, so this decides associativity for all elements.
    pub fn associativity_witness(&self) -> Option<(Element, Element, Element)> {
        let k = self.rank();
        for i in 0..k {
            for j in 0..k {
                for l in 0..k {
                    let (a, b, c) = (self.generator(i), self.generator(j), self.generator(l));
                    if self.mul_direct(self.mul_direct(a, b), c)
                        != self.mul_direct(a, self.mul_direct(b, c))
                    {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    pub fn is_associative(&self) -> bool {
        self.associativity_witness().is_none()
    }

    pub fn is_commutative(&self) -> bool {
        let k = self.rank();
        (0..k).all(|i| (0..k).all(|j| self.sc[i][j] == self.sc[j][i]))
    }
}
