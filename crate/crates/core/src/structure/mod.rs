//! Subobjects and structural predicates: centers, commutator subgroups,
//! central series, ring power chains, antisymmetry and primary decomposition.

mod groups;
mod rings;

pub(crate) use groups::subgroup_as_group;
pub use groups::{
    abelian_decomposition, center_group, commutator, commutator_subgroup, conjugacy_class_count,
    generated_subgroup, is_class_at_most_2, lower_central_series, quotient_group,
    AbelianDecomposition, Quotient,
};
pub use rings::{
    additive_span, is_antisymmetric, is_strongly_antisymmetric, p_primary_decomposition,
    ring_powers,
};

use crate::error::{Error, Result};
use crate::group::{Element, FiniteGroup};
use crate::ring::FiniteRing;

/// Membership bitset over the elements of a parent group, or over the
/// additive group of a parent ring.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SubgroupMask {
    bits: Vec<bool>,
    size: usize,
}

impl std::fmt::Debug for SubgroupMask {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.elements()).finish()
    }
}

impl SubgroupMask {
    /// Checks that `bits` marks a subgroup of `group`.
    pub fn for_group(group: &FiniteGroup, bits: Vec<bool>) -> Result<Self> {
        let mask = Self::from_bits(bits);
        if mask.bits.len() != group.order() {
            return Err(Error::NotSubgroup(
                "mask length differs from group order".into(),
            ));
        }
        if !mask.contains(group.identity()) {
            return Err(Error::NotSubgroup("identity missing".into()));
        }
        let members: Vec<_> = mask.elements().collect();
        for &a in &members {
            if !mask.contains(group.inv(a)) {
                return Err(Error::NotSubgroup(format!("inverse of {a} missing")));
            }
            for &b in &members {
                if !mask.contains(group.op(a, b)) {
                    return Err(Error::NotSubgroup(format!("{a}*{b} missing")));
                }
            }
        }
        Ok(mask)
    }

    /// Checks that `bits` marks an additive subgroup of `ring`.
    pub fn for_ring(ring: &FiniteRing, bits: Vec<bool>) -> Result<Self> {
        let mask = Self::from_bits(bits);
        if mask.bits.len() != ring.order() {
            return Err(Error::NotSubgroup(
                "mask length differs from ring order".into(),
            ));
        }
        if !mask.contains(FiniteRing::ZERO) {
            return Err(Error::NotSubgroup("zero missing".into()));
        }
        let members: Vec<_> = mask.elements().collect();
        for &a in &members {
            for &b in &members {
                if !mask.contains(ring.add(a, b)) {
                    return Err(Error::NotSubgroup(format!("{a}+{b} missing")));
                }
            }
        }
        Ok(mask)
    }

    pub(crate) fn from_bits(bits: Vec<bool>) -> Self {
        let size = bits.iter().filter(|&&b| b).count();
        SubgroupMask { bits, size }
    }

    pub fn contains(&self, x: Element) -> bool {
        self.bits[x]
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn is_trivial(&self) -> bool {
        self.size == 1
    }

    pub fn is_full(&self) -> bool {
        self.size == self.bits.len()
    }

    pub fn is_subset_of(&self, other: &SubgroupMask) -> bool {
        self.bits.iter().zip(&other.bits).all(|(&a, &b)| !a || b)
    }

    pub fn elements(&self) -> impl Iterator<Item = Element> + '_ {
        self.bits
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(|(i, _)| i)
    }
}

/// Which kind of structure a [`NilpotencyReport`] describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StructureKind {
    Group,
    Ring,
}

/// Nilpotency class, indexed the usual way for each kind: a group has class
/// `n` when `G_n = {e}` and `G_{n-1} != {e}`; a ring has class `n` when `n`
/// is the least power with `R^n = 0`, so the null ring has class 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NilpotencyClass {
    Nilpotent(usize),
    NotNilpotent,
}

impl NilpotencyClass {
    pub fn is_at_most(self, bound: usize) -> bool {
        matches!(self, NilpotencyClass::Nilpotent(c) if c <= bound)
    }
}

impl std::fmt::Display for NilpotencyClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            NilpotencyClass::Nilpotent(c) => write!(f, "{c}"),
            NilpotencyClass::NotNilpotent => write!(f, "not nilpotent"),
        }
    }
}

/// A descending series together with the class it certifies.
///
/// For groups `series[0] = G`; for rings `series[0] = R^1 = R`.
#[derive(Debug, Clone)]
pub struct NilpotencyReport {
    pub kind: StructureKind,
    pub class: NilpotencyClass,
    pub series: Vec<SubgroupMask>,
}

/// Order, parity and prime-power status of a structure.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OrderInfo {
    pub order: usize,
    pub is_odd: bool,
    /// `Some((p, n))` when `order = p^n` with `n >= 1`
    pub prime_power: Option<(u64, u32)>,
}

impl OrderInfo {
    pub fn of(order: usize) -> Self {
        OrderInfo {
            order,
            is_odd: order % 2 == 1,
            prime_power: prime_power(order as u64),
        }
    }

    pub fn is_p_structure(&self, p: u64) -> bool {
        matches!(self.prime_power, Some((q, _)) if q == p)
    }
}

pub fn parity_and_p_group(g: &FiniteGroup) -> OrderInfo {
    OrderInfo::of(g.order())
}

pub fn parity_and_p_ring(r: &FiniteRing) -> OrderInfo {
    OrderInfo::of(r.order())
}

pub(crate) fn prime_factors(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub(crate) fn prime_power(n: u64) -> Option<(u64, u32)> {
    match prime_factors(n).as_slice() {
        [single] => Some(*single),
        _ => None,
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
    matches!(prime_power(n), Some((_, 1)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_info() {
        let o = OrderInfo::of(8);
        assert!(o.is_p_structure(2) && !o.is_odd);
        let o = OrderInfo::of(27);
        assert!(o.is_p_structure(3) && o.is_odd);
        let o = OrderInfo::of(12);
        assert_eq!(o.prime_power, None);
        assert!(!o.is_odd);
        assert_eq!(OrderInfo::of(1).prime_power, None);
    }

    #[test]
    fn primes() {
        let primes: Vec<u64> = (1..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert_eq!(prime_factors(360), vec![(2, 3), (3, 2), (5, 1)]);
    }
}
