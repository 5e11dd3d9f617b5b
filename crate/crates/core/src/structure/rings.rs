use std::collections::VecDeque;

use super::{prime_factors, NilpotencyClass, NilpotencyReport, StructureKind, SubgroupMask};
use crate::group::Element;
use crate::ring::FiniteRing;

/// Additive subgroup generated by `seed`, with the (irredundant) generators
/// that were actually needed.
pub fn additive_span(
    ring: &FiniteRing,
    seed: impl IntoIterator<Item = Element>,
) -> (SubgroupMask, Vec<Element>) {
    let mut bits = vec![false; ring.order()];
    bits[FiniteRing::ZERO] = true;
    let mut members = vec![FiniteRing::ZERO];
    let mut gens = Vec::new();
    for s in seed {
        if bits[s] {
            continue;
        }
        gens.push(s);
        let mut queue: VecDeque<Element> = members.iter().copied().collect();
        while let Some(x) = queue.pop_front() {
            for &g in &gens {
                let y = ring.add(x, g);
                if !bits[y] {
                    bits[y] = true;
                    members.push(y);
                    queue.push_back(y);
                }
            }
        }
    }
    (SubgroupMask::from_bits(bits), gens)
}

/// Power chain `R^1 = R`, `R^n = sum over i+j=n of R^i R^j` as additive
/// subgroups; this covers every bracketing of an `n`-fold product.
///
/// By bilinearity `R^i R^j` is spanned by products of generators of `R^i`
/// and `R^j`, so only generator sets are multiplied. Without associativity a
/// single repeat `R^n = R^{n-1}` does not yet prove stabilization; once the
/// chain has been constant on `[s, n]` with `n >= 2s + 1`, every later term
/// provably equals `R^n`.
pub fn ring_powers(ring: &FiniteRing) -> NilpotencyReport {
    let k = ring.rank();
    let full = SubgroupMask::from_bits(vec![true; ring.order()]);
    // index 0 unused so that powers[n] is R^n
    let mut masks: Vec<SubgroupMask> = vec![full.clone(), full];
    let mut gens: Vec<Vec<Element>> = vec![Vec::new(), (0..k).map(|i| ring.generator(i)).collect()];
    let mut run_start = 1;
    let class = loop {
        let n = masks.len() - 1;
        if masks[n].is_trivial() {
            break NilpotencyClass::Nilpotent(n);
        }
        let next = n + 1;
        let mut seed = Vec::new();
        for i in 1..next {
            for &a in &gens[i] {
                for &b in &gens[next - i] {
                    seed.push(ring.mul(a, b));
                }
            }
        }
        let (mask, g) = additive_span(ring, seed);
        if mask != masks[n] {
            run_start = next;
        }
        masks.push(mask);
        gens.push(g);
        if next > 2 * run_start && run_start < next {
            masks.truncate(run_start + 1);
            break NilpotencyClass::NotNilpotent;
        }
    };
    masks.remove(0);
    NilpotencyReport {
        kind: StructureKind::Ring,
        class,
        series: masks,
    }
}

/// `ab = -ba` for all `a, b`; by bilinearity it suffices to check generator
/// pairs, diagonal included.
pub fn is_antisymmetric(ring: &FiniteRing) -> bool {
    let k = ring.rank();
    (0..k).all(|i| {
        (0..k).all(|j| {
            let (a, b) = (ring.generator(i), ring.generator(j));
            ring.add(ring.mul(a, b), ring.mul(b, a)) == FiniteRing::ZERO
        })
    })
}

/// `a^2 = 0` for every element. Checked on all elements: with even
/// invariants the cross terms `2 e_i e_j` can survive a generator-only test.
pub fn is_strongly_antisymmetric(ring: &FiniteRing) -> bool {
    ring.elements().all(|a| ring.mul(a, a) == FiniteRing::ZERO)
}

/// The `p`-primary components: for each prime `p` dividing `|R|`, the
/// subring of elements of `p`-power additive order with its induced
/// structure constants.
pub fn p_primary_decomposition(ring: &FiniteRing) -> Vec<(u64, FiniteRing)> {
    let inv = ring.invariants();
    let sc = ring.structure_constants();
    let mut out = Vec::new();
    for (p, _) in prime_factors(ring.order() as u64) {
        // (original coordinate, cofactor d_i / p^v, p^v)
        let parts: Vec<(usize, u64, u64)> = inv
            .iter()
            .enumerate()
            .filter_map(|(i, &d)| {
                let mut q = 1;
                while d % (q * p) == 0 {
                    q *= p;
                }
                (q > 1).then_some((i, d / q, q))
            })
            .collect();
        let m = parts.len();
        let mut csc = vec![vec![vec![0u64; m]; m]; m];
        for (a, &(i, ci, _)) in parts.iter().enumerate() {
            for (b, &(j, cj, _)) in parts.iter().enumerate() {
                for (c, &(l, cl, ql)) in parts.iter().enumerate() {
                    let y = (ci as u128 * cj as u128 * sc[i][j][l] as u128 % inv[l] as u128) as u64;
                    debug_assert_eq!(y % cl, 0);
                    csc[a][b][c] = (y / cl) % ql;
                }
            }
        }
        let invariants = parts.iter().map(|&(_, _, q)| q).collect();
        let component = FiniteRing::validate(invariants, csc)
            .expect("primary components inherit compatible structure constants");
        out.push((p, component));
    }
    out
}
