//! Transport between rings and groups that preserves commuting-type
//! probabilities, plus direct products.

pub mod catalog;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::group::{Element, FiniteGroup};
use crate::ring::FiniteRing;
use crate::structure::{
    abelian_decomposition, center_group, commutator, lower_central_series, quotient_group,
    ring_powers, subgroup_as_group, NilpotencyClass,
};
use crate::Caps;

fn check_cap(order: u128, caps: &Caps) -> Result<()> {
    if order > caps.order_cap as u128 {
        return Err(Error::OrderOverflow {
            order,
            cap: caps.order_cap as u128,
        });
    }
    Ok(())
}

/// `N(R)`: additive group `R x R` with `(a, x)(b, y) = (0, ab)`.
///
/// Generators `(e_i, 0)` come first, then `(0, e_i)`.
pub fn construct_n(r: &FiniteRing, caps: &Caps) -> Result<FiniteRing> {
    check_cap((r.order() as u128).pow(2), caps)?;
    let k = r.rank();
    if k == 0 {
        return Ok(FiniteRing::zero());
    }
    let mut invariants = r.invariants().to_vec();
    invariants.extend_from_slice(r.invariants());
    let mut sc = vec![vec![vec![0u64; 2 * k]; 2 * k]; 2 * k];
    for i in 0..k {
        for j in 0..k {
            sc[i][j][k..].copy_from_slice(&r.structure_constants()[i][j]);
        }
    }
    FiniteRing::validate(invariants, sc)
}

/// The group `G_N` on the elements of an associative nilpotent ring under
/// `a o b = a + b + ab`, with identity 0.
pub fn circle_group(n: &FiniteRing) -> Result<FiniteGroup> {
    if let Some((a, b, c)) = n.associativity_witness() {
        return Err(Error::NotAssociative { a, b, c });
    }
    if ring_powers(n).class == NilpotencyClass::NotNilpotent {
        return Err(Error::NotNilpotent);
    }
    n.ensure_table();
    Ok(FiniteGroup::from_fn(n.order(), FiniteRing::ZERO, |a, b| {
        n.add(n.add(a, b), n.mul(a, b))
    }))
}

/// How [`commutator_ring_with`] picks coset representatives.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Representatives {
    /// lowest element index in each coset
    Lowest,
    /// uniformly random member, seeded
    Random(u64),
}

/// `R_G` for a group of class at most 2: additive group `G/Z + Z` with
/// `(aZ, x)(bZ, y) = (Z, [a, b])`.
///
/// Generators are a basis of `G/Z` followed by a basis of `Z`, both from
/// [`abelian_decomposition`]; products of the former are commutators of
/// coset representatives written in the basis of `Z`.
pub fn commutator_ring(g: &FiniteGroup) -> Result<FiniteRing> {
    commutator_ring_with(g, Representatives::Lowest)
}

pub fn commutator_ring_with(g: &FiniteGroup, reps: Representatives) -> Result<FiniteRing> {
    if !lower_central_series(g).class.is_at_most(2) {
        return Err(Error::NotClass2);
    }
    let center = center_group(g);
    let quotient = quotient_group(g, &center)?;
    let qdec = abelian_decomposition(&quotient.group)?;
    let (zgroup, zembed) = subgroup_as_group(g, &center);
    let zdec = abelian_decomposition(&zgroup)?;

    // coordinates of every central element in the basis of Z
    let zk = zdec.invariants.len();
    let mut zlog: Vec<Option<Vec<u64>>> = vec![None; g.order()];
    let mut coords = vec![0u64; zk];
    loop {
        let x = coords
            .iter()
            .zip(&zdec.basis)
            .fold(zgroup.identity(), |acc, (&c, &b)| {
                zgroup.op(acc, zgroup.pow(b, c as usize))
            });
        zlog[zembed[x]] = Some(coords.clone());
        // odometer over the coordinate box
        let mut m = 0;
        while m < zk {
            coords[m] += 1;
            if coords[m] < zdec.invariants[m] {
                break;
            }
            coords[m] = 0;
            m += 1;
        }
        if m == zk {
            break;
        }
    }

    let representative: Vec<Element> = match reps {
        Representatives::Lowest => qdec
            .basis
            .iter()
            .map(|&c| quotient.representatives[c])
            .collect(),
        Representatives::Random(seed) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            qdec.basis
                .iter()
                .map(|&c| {
                    let members: Vec<Element> = g
                        .elements()
                        .filter(|&x| quotient.coset_of[x] == c)
                        .collect();
                    *members.choose(&mut rng).unwrap()
                })
                .collect()
        }
    };

    let qk = qdec.invariants.len();
    let k = qk + zk;
    if k == 0 {
        return Ok(FiniteRing::zero());
    }
    let mut invariants = qdec.invariants.clone();
    invariants.extend_from_slice(&zdec.invariants);
    let mut sc = vec![vec![vec![0u64; k]; k]; k];
    for i in 0..qk {
        for j in 0..qk {
            let c = commutator(g, representative[i], representative[j]);
            let log = zlog[c]
                .as_ref()
                .expect("commutators are central in class 2");
            sc[i][j][qk..].copy_from_slice(log);
        }
    }
    FiniteRing::validate(invariants, sc)
}

/// The group on `R x R` with `(a, b)(c, d) = (a + c, ac + b + d)`.
///
/// The pair `(a, b)` has index `a * |R| + b`, so `(0, 0)` is element 0.
pub fn malcev_group(r: &FiniteRing, caps: &Caps) -> Result<FiniteGroup> {
    let n = r.order();
    check_cap((n as u128).pow(2), caps)?;
    r.ensure_table();
    Ok(FiniteGroup::from_fn(n * n, 0, |x, y| {
        let (a, b) = (x / n, x % n);
        let (c, d) = (y / n, y % n);
        r.add(a, c) * n + r.add(r.add(r.mul(a, c), b), d)
    }))
}

/// `G1 x G2` with `(a, b)` at index `a * |G2| + b`.
pub fn direct_product_group(
    g1: &FiniteGroup,
    g2: &FiniteGroup,
    caps: &Caps,
) -> Result<FiniteGroup> {
    let n2 = g2.order();
    check_cap(g1.order() as u128 * n2 as u128, caps)?;
    let identity = g1.identity() * n2 + g2.identity();
    Ok(FiniteGroup::from_fn(g1.order() * n2, identity, |x, y| {
        g1.op(x / n2, y / n2) * n2 + g2.op(x % n2, y % n2)
    }))
}

/// `R1 x R2`: invariants concatenated, structure constants block diagonal.
pub fn direct_product_ring(r1: &FiniteRing, r2: &FiniteRing, caps: &Caps) -> Result<FiniteRing> {
    check_cap(r1.order() as u128 * r2.order() as u128, caps)?;
    let (k1, k2) = (r1.rank(), r2.rank());
    let k = k1 + k2;
    if k == 0 {
        return Ok(FiniteRing::zero());
    }
    let mut invariants = r1.invariants().to_vec();
    invariants.extend_from_slice(r2.invariants());
    let mut sc = vec![vec![vec![0u64; k]; k]; k];
    for i in 0..k1 {
        for j in 0..k1 {
            sc[i][j][..k1].copy_from_slice(&r1.structure_constants()[i][j]);
        }
    }
    for i in 0..k2 {
        for j in 0..k2 {
            sc[k1 + i][k1 + j][k1..].copy_from_slice(&r2.structure_constants()[i][j]);
        }
    }
    FiniteRing::validate(invariants, sc)
}
