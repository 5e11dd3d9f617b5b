//! Exact counting kernels for commuting, annihilating and f-probabilities.
//!
//! All kernels walk the full pair space. The outer loop is split across the
//! rayon pool; partial counts are summed, so the result does not depend on
//! how the work was partitioned.

use rayon::prelude::*;

use crate::group::FiniteGroup;
use crate::rational::Rational;
use crate::ring::{FiniteRing, PolySpec};
use crate::structure::conjugacy_class_count;

/// How a probability was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    /// explicit count over all ordered pairs
    Brute,
    /// `k(G) / |G|` from the number of conjugacy classes
    ClassCount,
}

/// `favorable / total` with `total = order^2`, plus the reduced value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProbabilityResult {
    pub value: Rational,
    pub favorable: u64,
    pub total: u64,
    pub method: Method,
}

impl ProbabilityResult {
    fn new(favorable: u64, order: usize, method: Method) -> Self {
        let total = (order as u64) * (order as u64);
        ProbabilityResult {
            value: Rational::from_counts(favorable, total),
            favorable,
            total,
            method,
        }
    }
}

/// Commuting probability of a group by direct pair count.
pub fn pr_c_group(g: &FiniteGroup) -> ProbabilityResult {
    let n = g.order();
    let favorable: u64 = (0..n)
        .into_par_iter()
        .map(|a| {
            // centralizer size of a
            let row = g.row(a);
            (0..n).filter(|&b| row[b] as usize == g.op(b, a)).count() as u64
        })
        .sum();
    ProbabilityResult::new(favorable, n, Method::Brute)
}

/// Commuting probability as `k(G) / |G|`; the favorable count reported is
/// `k(G) * |G|`, which equals the brute-force pair count.
pub fn pr_c_group_class_count(g: &FiniteGroup) -> ProbabilityResult {
    let n = g.order();
    let k = conjugacy_class_count(g) as u64;
    ProbabilityResult::new(k * n as u64, n, Method::ClassCount)
}

/// Fraction of pairs `(x, y)` with `a*xy + b*yx = 0`.
pub fn pr_f_ring(r: &FiniteRing, f: PolySpec) -> ProbabilityResult {
    let n = r.order();
    r.ensure_table();
    let count_row = |x: usize| -> u64 {
        match f {
            PolySpec::COMMUTE => (0..n).filter(|&y| r.mul(x, y) == r.mul(y, x)).count() as u64,
            PolySpec::ANNIHILATE => (0..n).filter(|&y| r.mul(x, y) == 0).count() as u64,
            _ => (0..n)
                .filter(|&y| r.eval_poly(f, x, y) == FiniteRing::ZERO)
                .count() as u64,
        }
    };
    let favorable = if n < 64 {
        (0..n).map(count_row).sum()
    } else {
        (0..n).into_par_iter().map(count_row).sum()
    };
    ProbabilityResult::new(favorable, n, Method::Brute)
}

pub fn pr_c_ring(r: &FiniteRing) -> ProbabilityResult {
    pr_f_ring(r, PolySpec::COMMUTE)
}

pub fn pr_ann_ring(r: &FiniteRing) -> ProbabilityResult {
    pr_f_ring(r, PolySpec::ANNIHILATE)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::catalog::{self, CatalogName};

    fn group(name: CatalogName) -> FiniteGroup {
        catalog::group(&name).unwrap()
    }

    fn ring(name: CatalogName) -> FiniteRing {
        catalog::ring(&name).unwrap()
    }

    #[test]
    fn s3_is_one_half() {
        let g = group(CatalogName::Symmetric(3));
        assert_eq!(pr_c_group(&g).value, Rational::new(1, 2));
        assert_eq!(pr_c_group_class_count(&g).value, Rational::new(1, 2));
    }

    #[test]
    fn abelian_groups_are_one() {
        for n in [1, 2, 7, 12] {
            assert_eq!(
                pr_c_group(&group(CatalogName::Cyclic(n))).value,
                Rational::ONE
            );
        }
    }

    #[test]
    fn d4_both_methods() {
        let g = group(CatalogName::Dihedral(4));
        let brute = pr_c_group(&g);
        assert_eq!((brute.favorable, brute.total), (40, 64));
        assert_eq!(brute.value, Rational::new(5, 8));
        let cc = pr_c_group_class_count(&g);
        assert_eq!(cc.favorable, 40);
        assert_eq!(cc.method, Method::ClassCount);
    }

    #[test]
    fn s5_golden_value() {
        let g = group(CatalogName::Symmetric(5));
        assert_eq!(pr_c_group(&g).value, Rational::new(7, 120));
        assert_eq!(pr_c_group_class_count(&g).value, Rational::new(7, 120));
    }

    #[test]
    fn ring_commuting_and_annihilating() {
        assert_eq!(pr_c_ring(&ring(CatalogName::Zn(12))).value, Rational::ONE);
        let null = FiniteRing::null(vec![2, 3]).unwrap();
        assert_eq!(pr_ann_ring(&null).value, Rational::ONE);
        for p in [2u64, 3, 5, 7] {
            let r = ring(CatalogName::Zn(p));
            let want = Rational::new(2 * p as i128 - 1, (p * p) as i128);
            assert_eq!(pr_ann_ring(&r).value, want);
        }
        assert_eq!(
            pr_ann_ring(&ring(CatalogName::Zn(2))).value,
            Rational::new(3, 4)
        );
    }

    #[test]
    fn upper_triangular_values() {
        let r2 = ring(CatalogName::Ut3(2));
        let res = pr_c_ring(&r2);
        assert_eq!((res.favorable, res.total), (40, 64));
        let r3 = ring(CatalogName::Ut3(3));
        let res = pr_c_ring(&r3);
        assert_eq!((res.favorable, res.total), (297, 729));
        assert_eq!(res.value, Rational::new(11, 27));
    }

    #[test]
    fn general_poly_agrees_with_fast_paths() {
        let r = ring(CatalogName::Ut3(3));
        // (2, -2) has the same zero set as COMMUTE in odd characteristic
        assert_eq!(
            pr_f_ring(&r, PolySpec::new(2, -2)).value,
            pr_c_ring(&r).value
        );
        // (-1, 0) has the same zero set as ANNIHILATE
        assert_eq!(
            pr_f_ring(&r, PolySpec::new(-1, 0)).value,
            pr_ann_ring(&r).value
        );
        // (0, 0) is satisfied by every pair
        assert_eq!(pr_f_ring(&r, PolySpec::new(0, 0)).value, Rational::ONE);
    }

    #[test]
    fn commuting_count_contains_the_diagonal() {
        for r in [ring(CatalogName::Matrix2(2)), ring(CatalogName::Ut3(3))] {
            let res = pr_c_ring(&r);
            assert!(res.favorable >= r.order() as u64);
            // off-diagonal commuting pairs come in symmetric pairs
            assert_eq!((res.favorable - r.order() as u64) % 2, 0);
        }
    }
}
