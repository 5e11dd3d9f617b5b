use std::collections::VecDeque;

use super::{NilpotencyClass, NilpotencyReport, StructureKind, SubgroupMask};
use crate::error::{Error, Result};
use crate::group::{Element, FiniteGroup};

/// `{z : zg = gz for all g}`.
pub fn center_group(g: &FiniteGroup) -> SubgroupMask {
    let n = g.order();
    let bits = (0..n)
        .map(|z| g.elements().all(|x| g.op(z, x) == g.op(x, z)))
        .collect();
    SubgroupMask::from_bits(bits)
}

/// `[a, b] = a^-1 b^-1 a b`.
#[inline]
pub fn commutator(g: &FiniteGroup, a: Element, b: Element) -> Element {
    g.op(g.op(g.inv(a), g.inv(b)), g.op(a, b))
}

/// Smallest subgroup containing `seed`.
///
/// Closes `{e}` under right multiplication by the generators; a seed element
/// already inside the current subgroup is skipped, so only a short list of
/// generators is ever multiplied through.
pub fn generated_subgroup(
    g: &FiniteGroup,
    seed: impl IntoIterator<Item = Element>,
) -> SubgroupMask {
    let n = g.order();
    let mut bits = vec![false; n];
    bits[g.identity()] = true;
    let mut members = vec![g.identity()];
    let mut gens: Vec<Element> = Vec::new();
    for s in seed {
        if bits[s] {
            continue;
        }
        gens.push(s);
        let mut queue: VecDeque<Element> = members.iter().copied().collect();
        while let Some(x) = queue.pop_front() {
            for &h in &gens {
                let y = g.op(x, h);
                if !bits[y] {
                    bits[y] = true;
                    members.push(y);
                    queue.push_back(y);
                }
            }
        }
    }
    SubgroupMask::from_bits(bits)
}

/// `[H, G]`: the subgroup generated by `[x, g]` for `x` in `h`, `g` in `G`.
fn commutator_with_whole(g: &FiniteGroup, h: &SubgroupMask) -> SubgroupMask {
    let mut hit = vec![false; g.order()];
    for x in h.elements() {
        for y in g.elements() {
            hit[commutator(g, x, y)] = true;
        }
    }
    let seed = hit.iter().enumerate().filter(|(_, &b)| b).map(|(c, _)| c);
    generated_subgroup(g, seed)
}

/// The derived subgroup `[G, G]`.
pub fn commutator_subgroup(g: &FiniteGroup) -> SubgroupMask {
    commutator_with_whole(g, &SubgroupMask::from_bits(vec![true; g.order()]))
}

/// `G_0 = G`, `G_i = [G_{i-1}, G]`, until the trivial subgroup is reached or
/// the series stalls.
pub fn lower_central_series(g: &FiniteGroup) -> NilpotencyReport {
    let mut series = vec![SubgroupMask::from_bits(vec![true; g.order()])];
    let class = loop {
        let last = series.last().unwrap();
        if last.is_trivial() {
            break NilpotencyClass::Nilpotent(series.len() - 1);
        }
        let next = commutator_with_whole(g, last);
        if &next == last {
            break NilpotencyClass::NotNilpotent;
        }
        series.push(next);
    };
    NilpotencyReport {
        kind: StructureKind::Group,
        class,
        series,
    }
}

/// Class at most 2 decided as `[G, G] <= Z(G)`, independently of the series.
pub fn is_class_at_most_2(g: &FiniteGroup) -> bool {
    commutator_subgroup(g).is_subset_of(&center_group(g))
}

/// Number of conjugacy classes.
pub fn conjugacy_class_count(g: &FiniteGroup) -> usize {
    let n = g.order();
    let mut seen = vec![false; n];
    let mut classes = 0;
    for x in 0..n {
        if seen[x] {
            continue;
        }
        classes += 1;
        for y in 0..n {
            seen[g.op(g.op(g.inv(y), x), y)] = true;
        }
    }
    classes
}

/// A quotient group together with the canonical surjection.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub group: FiniteGroup,
    /// coset index of every element of the parent
    pub coset_of: Vec<usize>,
    /// lowest-index element of each coset
    pub representatives: Vec<Element>,
}

/// `G / N` on coset representatives; cosets are numbered by their lowest
/// element, so `coset_of[e] = 0` and the quotient identity is 0.
pub fn quotient_group(g: &FiniteGroup, normal: &SubgroupMask) -> Result<Quotient> {
    let members: Vec<Element> = normal.elements().collect();
    for y in g.elements() {
        for &m in &members {
            if !normal.contains(g.op(g.op(g.inv(y), m), y)) {
                return Err(Error::NotNormal { member: m, by: y });
            }
        }
    }
    let n = g.order();
    let mut coset_of = vec![usize::MAX; n];
    let mut representatives = Vec::new();
    for x in 0..n {
        if coset_of[x] != usize::MAX {
            continue;
        }
        let c = representatives.len();
        representatives.push(x);
        for &m in &members {
            coset_of[g.op(x, m)] = c;
        }
    }
    let q = representatives.len();
    let identity = coset_of[g.identity()];
    let group = FiniteGroup::from_fn(q, identity, |a, b| {
        coset_of[g.op(representatives[a], representatives[b])]
    });
    Ok(Quotient {
        group,
        coset_of,
        representatives,
    })
}

/// The subgroup marked by `mask` as a standalone group, plus the embedding
/// of its relabeled elements back into `g`.
pub(crate) fn subgroup_as_group(
    g: &FiniteGroup,
    mask: &SubgroupMask,
) -> (FiniteGroup, Vec<Element>) {
    let embed: Vec<Element> = mask.elements().collect();
    let mut local = vec![usize::MAX; g.order()];
    for (i, &x) in embed.iter().enumerate() {
        local[x] = i;
    }
    let sub = FiniteGroup::from_fn(embed.len(), local[g.identity()], |a, b| {
        local[g.op(embed[a], embed[b])]
    });
    (sub, embed)
}

/// Invariant factors `d_1 | d_2 | ... | d_k` with a basis realizing
/// `A = <b_1> x ... x <b_k>`, `|b_i| = d_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianDecomposition {
    pub invariants: Vec<u64>,
    pub basis: Vec<Element>,
}

/// Splits off cyclic factors of maximal order one at a time.
///
/// At each step an element of maximal order `m` modulo the span `S` of the
/// basis chosen so far is picked (lowest index on ties) and replaced by the
/// lowest-index element of its coset `xS` whose order in `A` is exactly `m`.
/// Such a lift always exists, and it keeps the new cyclic factor disjoint
/// from `S`.
pub fn abelian_decomposition(a: &FiniteGroup) -> Result<AbelianDecomposition> {
    for x in a.elements() {
        for y in x + 1..a.order() {
            if a.op(x, y) != a.op(y, x) {
                return Err(Error::NotAbelian { a: x, b: y });
            }
        }
    }
    let mut span = generated_subgroup(a, std::iter::empty());
    let mut orders = Vec::new();
    let mut basis = Vec::new();
    while !span.is_full() {
        let order_mod = |x: Element| {
            let mut y = x;
            let mut m = 1u64;
            while !span.contains(y) {
                y = a.op(y, x);
                m += 1;
            }
            m
        };
        let (best, m) = a
            .elements()
            .map(|x| (x, order_mod(x)))
            .fold((0, 0), |acc, cur| if cur.1 > acc.1 { cur } else { acc });
        let lift = span
            .elements()
            .map(|s| a.op(best, s))
            .filter(|&y| a.element_order(y) as u64 == m)
            .min()
            .expect("an order-preserving lift exists");
        orders.push(m);
        basis.push(lift);
        span = generated_subgroup(a, basis.iter().copied());
    }
    orders.reverse();
    basis.reverse();
    Ok(AbelianDecomposition {
        invariants: orders,
        basis,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::catalog::{self, CatalogName};

    fn group(name: CatalogName) -> FiniteGroup {
        catalog::group(&name).unwrap()
    }

    fn s3() -> FiniteGroup {
        group(CatalogName::Symmetric(3))
    }

    fn q8() -> FiniteGroup {
        group(CatalogName::Quaternion8)
    }

    #[test]
    fn centers() {
        let c6 = group(CatalogName::Cyclic(6));
        assert!(center_group(&c6).is_full());
        assert_eq!(center_group(&s3()).size(), 1);
        let z = center_group(&q8());
        assert_eq!(z.size(), 2);
        // the non-identity central element squares to the identity
        let g = q8();
        let minus_one = z.elements().find(|&x| x != g.identity()).unwrap();
        assert_eq!(g.op(minus_one, minus_one), g.identity());
    }

    #[test]
    fn commutators_in_s3() {
        let g = s3();
        for a in g.elements() {
            assert_eq!(commutator(&g, a, a), g.identity());
        }
        let transpositions: Vec<_> = g.elements().filter(|&x| g.element_order(x) == 2).collect();
        assert_eq!(transpositions.len(), 3);
        let c = commutator(&g, transpositions[0], transpositions[1]);
        assert_eq!(g.element_order(c), 3);
    }

    #[test]
    fn generated_subgroups() {
        let g = s3();
        assert!(generated_subgroup(&g, [g.identity()]).is_trivial());
        let three_cycle = g.elements().find(|&x| g.element_order(x) == 3).unwrap();
        let a3 = generated_subgroup(&g, [three_cycle]);
        assert_eq!(a3.size(), 3);
        let q = q8();
        let derived = commutator_subgroup(&q);
        assert_eq!(derived, center_group(&q));
    }

    #[test]
    fn lower_central_series_examples() {
        let c5 = group(CatalogName::Cyclic(5));
        assert_eq!(
            lower_central_series(&c5).class,
            NilpotencyClass::Nilpotent(1)
        );
        let r = lower_central_series(&q8());
        assert_eq!(r.class, NilpotencyClass::Nilpotent(2));
        assert_eq!(
            r.series.iter().map(|m| m.size()).collect::<Vec<_>>(),
            vec![8, 2, 1]
        );
        let r = lower_central_series(&s3());
        assert_eq!(r.class, NilpotencyClass::NotNilpotent);
        assert_eq!(r.series.last().unwrap().size(), 3);
        let trivial = group(CatalogName::Cyclic(1));
        assert_eq!(
            lower_central_series(&trivial).class,
            NilpotencyClass::Nilpotent(0)
        );
    }

    #[test]
    fn quotients() {
        let g = q8();
        let full = SubgroupMask::from_bits(vec![true; 8]);
        assert_eq!(quotient_group(&g, &full).unwrap().group.order(), 1);
        let triv = generated_subgroup(&g, []);
        let q = quotient_group(&g, &triv).unwrap();
        assert_eq!(q.group.order(), 8);
        assert_eq!(q.representatives, (0..8).collect::<Vec<_>>());
        let q = quotient_group(&g, &center_group(&g)).unwrap();
        assert_eq!(q.group.order(), 4);
        assert!(q.group.is_abelian());
        assert!(q.group.elements().all(|x| q.group.element_order(x) <= 2));
    }

    #[test]
    fn non_normal_subgroup_is_rejected() {
        let g = s3();
        let t = g.elements().find(|&x| g.element_order(x) == 2).unwrap();
        let h = generated_subgroup(&g, [t]);
        assert!(matches!(
            quotient_group(&g, &h),
            Err(Error::NotNormal { .. })
        ));
    }

    #[test]
    fn decompositions() {
        let d = abelian_decomposition(&group(CatalogName::Cyclic(6))).unwrap();
        assert_eq!(d.invariants, vec![6]);
        let d = abelian_decomposition(&group(CatalogName::Klein4)).unwrap();
        assert_eq!(d.invariants, vec![2, 2]);
        let z2z4 = crate::constructions::direct_product_group(
            &group(CatalogName::Cyclic(2)),
            &group(CatalogName::Cyclic(4)),
            &crate::Caps::default(),
        )
        .unwrap();
        let d = abelian_decomposition(&z2z4).unwrap();
        assert_eq!(d.invariants, vec![2, 4]);
        assert!(matches!(
            abelian_decomposition(&s3()),
            Err(Error::NotAbelian { .. })
        ));
        let d = abelian_decomposition(&group(CatalogName::Cyclic(1))).unwrap();
        assert!(d.invariants.is_empty());
    }

    #[test]
    fn decomposition_basis_spans_independently() {
        let c2 = group(CatalogName::Cyclic(2));
        let c6 = group(CatalogName::Cyclic(6));
        let caps = crate::Caps::default();
        let a = crate::constructions::direct_product_group(&c2, &c6, &caps).unwrap();
        let a = crate::constructions::direct_product_group(&a, &c6, &caps).unwrap();
        let d = abelian_decomposition(&a).unwrap();
        assert_eq!(d.invariants, vec![2, 6, 6]);
        let mut hit = vec![false; a.order()];
        for i in 0..2 {
            for j in 0..6 {
                for k in 0..6 {
                    let x = a.op(
                        a.op(a.pow(d.basis[0], i), a.pow(d.basis[1], j)),
                        a.pow(d.basis[2], k),
                    );
                    assert!(!hit[x]);
                    hit[x] = true;
                }
            }
        }
    }

    #[test]
    fn class_count_of_d4() {
        assert_eq!(conjugacy_class_count(&group(CatalogName::Dihedral(4))), 5);
        assert_eq!(conjugacy_class_count(&s3()), 3);
    }
}
