use proptest::prelude::*;

use spectra_core::constructions::catalog::{self, CatalogName};
use spectra_core::constructions::{construct_n, direct_product_ring, malcev_group};
use spectra_core::probability::{pr_c_group, pr_c_group_class_count, pr_f_ring};
use spectra_core::structure::{p_primary_decomposition, ring_powers};
use spectra_core::{Caps, FiniteGroup, FiniteRing, PolySpec, Rational};

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Random compatible structure constants over small invariants.
fn arb_ring(max_rank: usize) -> impl Strategy<Value = FiniteRing> {
    prop::collection::vec(prop::sample::select(vec![2u64, 3, 4, 5, 6]), 1..=max_rank).prop_flat_map(
        |inv| {
            let k = inv.len();
            prop::collection::vec(any::<u64>(), k * k * k).prop_map(move |raw| {
                let mut sc = vec![vec![vec![0u64; k]; k]; k];
                for i in 0..k {
                    for j in 0..k {
                        let g = gcd(inv[i], inv[j]);
                        for l in 0..k {
                            let step = inv[l] / gcd(inv[l], g);
                            sc[i][j][l] = (raw[(i * k + j) * k + l] % (inv[l] / step)) * step;
                        }
                    }
                }
                FiniteRing::validate(inv.clone(), sc).unwrap()
            })
        },
    )
}

fn arb_group() -> impl Strategy<Value = FiniteGroup> {
    prop_oneof![
        (1u64..30).prop_map(CatalogName::Cyclic),
        (3u64..12).prop_map(CatalogName::Dihedral),
        (1u64..=4).prop_map(CatalogName::Symmetric),
        prop::sample::select(vec![2u64, 3]).prop_map(CatalogName::Heisenberg),
        Just(CatalogName::Quaternion8),
        Just(CatalogName::Klein4),
    ]
    .prop_map(|name| catalog::group(&name).unwrap())
}

fn arb_poly() -> impl Strategy<Value = PolySpec> {
    (-3i64..=3, -3i64..=3).prop_map(|(a, b)| PolySpec::new(a, b))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn catalog_groups_satisfy_the_axioms(g in arb_group()) {
        let e = g.identity();
        for a in g.elements() {
            prop_assert_eq!(g.op(a, e), a);
            prop_assert_eq!(g.op(a, g.inv(a)), e);
            for b in g.elements() {
                for c in g.elements() {
                    prop_assert_eq!(g.op(g.op(a, b), c), g.op(a, g.op(b, c)));
                }
            }
        }
    }

    #[test]
    fn class_count_matches_pair_count(g in arb_group()) {
        prop_assert_eq!(pr_c_group(&g).value, pr_c_group_class_count(&g).value);
    }

    #[test]
    fn multiplication_distributes(r in arb_ring(3)) {
        for x in r.elements() {
            for y in r.elements() {
                for z in r.elements().step_by(3) {
                    prop_assert_eq!(r.mul(r.add(x, y), z), r.add(r.mul(x, z), r.mul(y, z)));
                    prop_assert_eq!(r.mul(z, r.add(x, y)), r.add(r.mul(z, x), r.mul(z, y)));
                }
            }
        }
    }

    #[test]
    fn encode_decode_round_trip(r in arb_ring(4)) {
        for x in r.elements() {
            let v = r.decode(x);
            prop_assert!(v.iter().zip(r.invariants()).all(|(c, d)| c < d));
            prop_assert_eq!(r.encode(&v), x);
        }
    }

    #[test]
    fn table_and_direct_products_agree(r in arb_ring(3)) {
        let direct: Vec<_> = r.elements().flat_map(|x| r.elements().map(move |y| (x, y))).map(|(x, y)| r.mul_direct(x, y)).collect();
        r.ensure_table();
        let tabled: Vec<_> = r.elements().flat_map(|x| r.elements().map(move |y| (x, y))).map(|(x, y)| r.mul(x, y)).collect();
        prop_assert_eq!(direct, tabled);
    }

    #[test]
    fn pr_f_is_multiplicative(r1 in arb_ring(2), r2 in arb_ring(2), f in arb_poly()) {
        let prod = direct_product_ring(&r1, &r2, &Caps::default()).unwrap();
        prop_assert_eq!(pr_f_ring(&prod, f).value, pr_f_ring(&r1, f).value * pr_f_ring(&r2, f).value);
    }

    #[test]
    fn pr_f_splits_over_primary_components(r in arb_ring(3), f in arb_poly()) {
        let parts = p_primary_decomposition(&r);
        prop_assert_eq!(parts.iter().map(|(_, p)| p.order()).product::<usize>(), r.order());
        let product = parts.iter().fold(Rational::ONE, |acc, (_, p)| acc * pr_f_ring(p, f).value);
        prop_assert_eq!(product, pr_f_ring(&r, f).value);
    }

    #[test]
    fn n_construction_preserves_pr_f(r in arb_ring(2), f in arb_poly()) {
        let n = construct_n(&r, &Caps::default()).unwrap();
        prop_assert_eq!(pr_f_ring(&n, f).value, pr_f_ring(&r, f).value);
        prop_assert!(ring_powers(&n).class.is_at_most(3));
    }

    #[test]
    fn malcev_group_preserves_commuting_probability(r in arb_ring(2)) {
        prop_assume!(r.order() <= 12);
        let m = malcev_group(&r, &Caps::default()).unwrap();
        prop_assert!(m.associativity_witness().is_none());
        prop_assert_eq!(pr_c_group(&m).value, pr_f_ring(&r, PolySpec::COMMUTE).value);
    }
}
