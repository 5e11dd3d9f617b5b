//! Small-ring enumeration and probability spectra.
//!
//! An enumeration is a list of structure-constant slots, each with a finite
//! list of admissible coefficient vectors. Candidate `t` is the mixed-radix
//! decoding of `t` over those lists, so the search space is a plain integer
//! range: it is cut into contiguous chunks, each chunk is swept on its own,
//! and the partial spectra are merged. The merge adds counts and keeps the
//! witness with the smallest candidate index, so the result is independent
//! of the partition.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::constructions::catalog::{self, CatalogName};
use crate::constructions::{
    circle_group, commutator_ring, construct_n, direct_product_group, malcev_group,
};
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::probability::{pr_ann_ring, pr_c_group, pr_c_ring, pr_f_ring};
use crate::rational::Rational;
use crate::ring::{gcd, FiniteRing, PolySpec};
use crate::structure::{is_antisymmetric, is_strongly_antisymmetric, ring_powers, NilpotencyClass};
use crate::Caps;

/// Parameters of a family of rings `V + W` with `(v, w)(v', w') = (0, b(v, v'))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BilinearFamilySpec {
    pub v_invariants: Vec<u64>,
    pub w_invariants: Vec<u64>,
    /// only alternating maps: `b(v, v) = 0`, `b(u, v) = -b(v, u)`
    pub alternating: bool,
}

impl std::fmt::Display for BilinearFamilySpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "bilinear V={:?} W={:?}{}",
            self.v_invariants,
            self.w_invariants,
            if self.alternating { " alternating" } else { "" }
        )
    }
}

/// Predicates an enumeration can be restricted to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RingFilter {
    Associative,
    NonAssociative,
    Commutative,
    Antisymmetric,
    StronglyAntisymmetric,
    Nilpotent,
    /// nilpotent of class at most the given bound
    ClassAtMost(usize),
}

impl RingFilter {
    pub fn accepts(&self, r: &FiniteRing) -> bool {
        match *self {
            RingFilter::Associative => r.is_associative(),
            RingFilter::NonAssociative => !r.is_associative(),
            RingFilter::Commutative => r.is_commutative(),
            RingFilter::Antisymmetric => is_antisymmetric(r),
            RingFilter::StronglyAntisymmetric => is_strongly_antisymmetric(r),
            RingFilter::Nilpotent => ring_powers(r).class != NilpotencyClass::NotNilpotent,
            RingFilter::ClassAtMost(c) => ring_powers(r).class.is_at_most(c),
        }
    }
}

impl std::str::FromStr for RingFilter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "associative" => RingFilter::Associative,
            "nonassociative" => RingFilter::NonAssociative,
            "commutative" => RingFilter::Commutative,
            "antisymmetric" => RingFilter::Antisymmetric,
            "strongly-antisymmetric" => RingFilter::StronglyAntisymmetric,
            "nilpotent" => RingFilter::Nilpotent,
            other => match other.strip_prefix("class<=") {
                Some(c) => RingFilter::ClassAtMost(
                    c.parse()
                        .map_err(|_| Error::ParamError(format!("bad filter `{s}`")))?,
                ),
                None => return Err(Error::ParamError(format!("unknown filter `{s}`"))),
            },
        })
    }
}

#[derive(Debug, Clone)]
struct Slot {
    i: usize,
    j: usize,
    choices: Vec<Vec<u64>>,
    /// alternating mode also writes `-choice` into `sc[j][i]`
    mirrored: bool,
}

/// A finite search space of structure-constant tensors over fixed invariants.
#[derive(Debug, Clone)]
pub struct RingSearch {
    family: String,
    invariants: Vec<u64>,
    slots: Vec<Slot>,
    filters: Vec<RingFilter>,
}

/// All vectors of `Z_{d_1} x ... x Z_{d_k}` whose coordinates lie in the
/// positions `support` and whose additive order divides `g`.
fn vectors_killed_by(invariants: &[u64], support: std::ops::Range<usize>, g: u64) -> Vec<Vec<u64>> {
    let mut out = vec![vec![0u64; invariants.len()]];
    for m in support {
        let d = invariants[m];
        let step = d / gcd(d, g);
        let mut next = Vec::with_capacity(out.len() * (d / step) as usize);
        for v in &out {
            let mut x = 0;
            while x < d {
                let mut w = v.clone();
                w[m] = x;
                next.push(w);
                x += step;
            }
        }
        out = next;
    }
    out
}

fn count_killed_by(invariants: &[u64], support: std::ops::Range<usize>, g: u64) -> u128 {
    support.map(|m| gcd(invariants[m], g) as u128).product()
}

fn check_budget(slot_counts: &[u128], caps: &Caps) -> Result<()> {
    let total = slot_counts
        .iter()
        .try_fold(1u128, |acc, &c| acc.checked_mul(c))
        .unwrap_or(u128::MAX);
    if total > caps.candidate_budget {
        return Err(Error::BudgetExceeded {
            candidates: total,
            budget: caps.candidate_budget,
        });
    }
    Ok(())
}

fn check_invariants(invariants: &[u64], cap: usize) -> Result<u128> {
    if let Some((index, &value)) = invariants.iter().enumerate().find(|(_, &d)| d < 2) {
        return Err(Error::InvalidInvariant { index, value });
    }
    let order = invariants
        .iter()
        .try_fold(1u128, |acc, &d| acc.checked_mul(d as u128))
        .unwrap_or(u128::MAX);
    if order > cap as u128 {
        return Err(Error::CapExceeded {
            order,
            cap: cap as u128,
        });
    }
    Ok(order)
}

/// Every ring `V + W` whose only products are `b(V, V) in W`, for every
/// admissible choice of `b(e_i, e_j)`.
pub fn enumerate_bilinear_rings(spec: &BilinearFamilySpec, caps: &Caps) -> Result<RingSearch> {
    if spec.w_invariants.is_empty() {
        return Err(Error::ParamError(
            "the target part W must be nontrivial".into(),
        ));
    }
    let mut invariants = spec.v_invariants.clone();
    invariants.extend_from_slice(&spec.w_invariants);
    check_invariants(&invariants, caps.bilinear_order_cap)?;
    let kv = spec.v_invariants.len();
    let w_range = kv..invariants.len();
    let pairs: Vec<(usize, usize)> = (0..kv)
        .flat_map(|i| (0..kv).map(move |j| (i, j)))
        .filter(|&(i, j)| !spec.alternating || i < j)
        .collect();
    let counts: Vec<u128> = pairs
        .iter()
        .map(|&(i, j)| {
            count_killed_by(
                &invariants,
                w_range.clone(),
                gcd(invariants[i], invariants[j]),
            )
        })
        .collect();
    check_budget(&counts, caps)?;
    let slots = pairs
        .into_iter()
        .map(|(i, j)| Slot {
            i,
            j,
            choices: vectors_killed_by(
                &invariants,
                w_range.clone(),
                gcd(invariants[i], invariants[j]),
            ),
            mirrored: spec.alternating,
        })
        .collect();
    Ok(RingSearch {
        family: spec.to_string(),
        invariants,
        slots,
        filters: Vec::new(),
    })
}

/// Every compatible structure-constant tensor on the given invariants,
/// restricted to rings passing all `filters`.
pub fn enumerate_general_rings(
    invariants: &[u64],
    filters: &[RingFilter],
    caps: &Caps,
) -> Result<RingSearch> {
    if invariants.is_empty() {
        return Err(Error::EmptyInvariants);
    }
    check_invariants(invariants, caps.general_order_cap)?;
    let k = invariants.len();
    let pairs: Vec<(usize, usize)> = (0..k).flat_map(|i| (0..k).map(move |j| (i, j))).collect();
    let counts: Vec<u128> = pairs
        .iter()
        .map(|&(i, j)| count_killed_by(invariants, 0..k, gcd(invariants[i], invariants[j])))
        .collect();
    check_budget(&counts, caps)?;
    let slots = pairs
        .into_iter()
        .map(|(i, j)| Slot {
            i,
            j,
            choices: vectors_killed_by(invariants, 0..k, gcd(invariants[i], invariants[j])),
            mirrored: false,
        })
        .collect();
    let mut family = format!("general {invariants:?}");
    for f in filters {
        family.push_str(&format!(" {f:?}").to_lowercase());
    }
    Ok(RingSearch {
        family,
        invariants: invariants.to_vec(),
        slots,
        filters: filters.to_vec(),
    })
}

impl RingSearch {
    pub fn family(&self) -> &str {
        &self.family
    }

    /// Number of candidate tensors, before filtering.
    pub fn candidates(&self) -> u128 {
        self.slots.iter().map(|s| s.choices.len() as u128).product()
    }

    pub fn with_filters(mut self, filters: &[RingFilter]) -> Self {
        for f in filters {
            self.family.push_str(&format!(" {f:?}").to_lowercase());
        }
        self.filters.extend_from_slice(filters);
        self
    }

    /// Candidate number `t`, without applying filters.
    pub fn candidate(&self, mut t: u128) -> FiniteRing {
        let k = self.invariants.len();
        let mut sc = vec![vec![vec![0u64; k]; k]; k];
        for slot in &self.slots {
            let n = slot.choices.len() as u128;
            let choice = &slot.choices[(t % n) as usize];
            t /= n;
            sc[slot.i][slot.j].clone_from(choice);
            if slot.mirrored {
                sc[slot.j][slot.i] = choice
                    .iter()
                    .zip(&self.invariants)
                    .map(|(&c, &d)| (d - c) % d)
                    .collect();
            }
        }
        FiniteRing::from_parts(self.invariants.clone(), sc)
    }

    fn accepts(&self, r: &FiniteRing) -> bool {
        self.filters.iter().all(|f| f.accepts(r))
    }

    /// The rings of the family, in candidate order.
    pub fn rings(&self) -> impl Iterator<Item = FiniteRing> + '_ {
        (0..self.candidates())
            .map(|t| self.candidate(t))
            .filter(|r| self.accepts(r))
    }

    /// Spectrum of `f` over the whole family, swept in parallel chunks.
    pub fn spectrum(&self, f: PolySpec) -> Result<Spectrum> {
        let total = self.candidates();
        let chunks = (rayon::current_num_threads() as u128 * 8).min(total).max(1);
        let per = total.div_ceil(chunks);
        let partials: Vec<Spectrum> = (0..chunks)
            .into_par_iter()
            .map(|c| {
                let mut s = Spectrum::new(&self.family, f);
                for t in c * per..((c + 1) * per).min(total) {
                    let r = self.candidate(t);
                    if self.accepts(&r) {
                        let value = pr_f_ring(&r, f).value;
                        s.record(value, t, &r);
                    }
                }
                s
            })
            .collect();
        let mut out = Spectrum::new(&self.family, f);
        for p in partials {
            out.merge(p);
        }
        if out.is_empty() {
            return Err(Error::EmptyFamily);
        }
        Ok(out)
    }
}

/// One value of a spectrum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectrumEntry {
    pub value: Rational,
    /// number of labeled structures attaining the value
    pub count: u64,
    /// first structure (in enumeration order) attaining the value
    pub witness: FiniteRing,
    witness_index: u128,
}

/// The set of values of `Pr_f` over a family, with multiplicities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Spectrum {
    pub family: String,
    pub poly: PolySpec,
    entries: BTreeMap<Rational, SpectrumEntry>,
}

impl Spectrum {
    pub fn new(family: &str, poly: PolySpec) -> Self {
        Spectrum {
            family: family.to_string(),
            poly,
            entries: BTreeMap::new(),
        }
    }

    pub fn record(&mut self, value: Rational, index: u128, witness: &FiniteRing) {
        self.entries
            .entry(value)
            .and_modify(|e| {
                e.count += 1;
                if index < e.witness_index {
                    e.witness_index = index;
                    e.witness = witness.clone();
                }
            })
            .or_insert_with(|| SpectrumEntry {
                value,
                count: 1,
                witness: witness.clone(),
                witness_index: index,
            });
    }

    pub fn merge(&mut self, other: Spectrum) {
        for (value, e) in other.entries {
            match self.entries.get_mut(&value) {
                Some(mine) => {
                    mine.count += e.count;
                    if e.witness_index < mine.witness_index {
                        mine.witness_index = e.witness_index;
                        mine.witness = e.witness;
                    }
                }
                None => {
                    self.entries.insert(value, e);
                }
            }
        }
    }

    /// Values in strictly ascending order.
    pub fn values(&self) -> Vec<Rational> {
        self.entries.keys().copied().collect()
    }

    pub fn entries(&self) -> impl Iterator<Item = &SpectrumEntry> {
        self.entries.values()
    }

    pub fn contains(&self, v: Rational) -> bool {
        self.entries.contains_key(&v)
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn total_count(&self) -> u64 {
        self.entries.values().map(|e| e.count).sum()
    }
}

/// Collects `Pr_f` over a stream of rings.
pub fn spectrum_of<I>(rings: I, f: PolySpec, family: &str) -> Result<Spectrum>
where
    I: IntoIterator<Item = FiniteRing>,
{
    let mut s = Spectrum::new(family, f);
    for (t, r) in rings.into_iter().enumerate() {
        s.record(pr_f_ring(&r, f).value, t as u128, &r);
    }
    if s.is_empty() {
        return Err(Error::EmptyFamily);
    }
    Ok(s)
}

/// Why a value failed [`gate_check_32`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GateReason {
    OneHalf,
    NotInList,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GateViolation {
    pub value: Rational,
    pub reason: GateReason,
    pub witness: Option<FiniteRing>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GateReport {
    pub pass: bool,
    pub violations: Vec<GateViolation>,
}

/// Whether `v` is one of the commuting probabilities of rings known to lie in
/// `[11/32, 1]`: `1, 7/16, 11/27, 25/64, 11/32` and `(2^(2k) + 1) / 2^(2k+1)`
/// for `k >= 1`.
pub fn is_known_large_value(v: Rational) -> bool {
    let listed = [(1, 1), (7, 16), (11, 27), (25, 64), (11, 32)];
    if listed.iter().any(|&(n, d)| v == Rational::new(n, d)) {
        return true;
    }
    let d = v.denom();
    if d < 8 || d.count_ones() != 1 || d.trailing_zeros() % 2 == 0 {
        return false;
    }
    v.numer() == d / 2 + 1
}

/// Flags every value `>= 11/32` outside the known list, and `1/2` outright.
pub fn gate_check_32(s: &Spectrum) -> GateReport {
    let threshold = Rational::new(11, 32);
    let half = Rational::new(1, 2);
    let violations: Vec<GateViolation> = s
        .entries()
        .filter(|e| e.value == half || (e.value >= threshold && !is_known_large_value(e.value)))
        .map(|e| GateViolation {
            value: e.value,
            reason: if e.value == half {
                GateReason::OneHalf
            } else {
                GateReason::NotInList
            },
            witness: Some(e.witness.clone()),
        })
        .collect();
    GateReport {
        pass: violations.is_empty(),
        violations,
    }
}

/// Result of [`odd_round_trip`].
#[derive(Debug, Clone, Default)]
pub struct OddRoundTripReport {
    pub rings_checked: usize,
    pub groups_checked: usize,
    pub max_order: usize,
    pub failures: Vec<String>,
    pub elapsed: Duration,
}

/// Odd-order rings of order at most `order_cap` used by [`odd_round_trip`].
pub fn odd_rings(order_cap: usize, caps: &Caps) -> Result<Vec<(String, FiniteRing)>> {
    let mut out = Vec::new();
    let names = [
        "zn:3",
        "zn:5",
        "zn:7",
        "zn:9",
        "zn:15",
        "zn:27",
        "zn:81",
        "null:3",
        "null:3,3",
        "null:9",
        "null:3,9",
        "ut3:3",
        "matrix2:3",
    ];
    for s in names {
        let name: CatalogName = s.parse()?;
        let r = catalog::ring(&name)?;
        if r.order() <= order_cap {
            out.push((s.to_string(), r));
        }
    }
    for inv in [vec![3], vec![5], vec![9], vec![3, 3]] {
        if inv.iter().product::<u64>() as usize > order_cap {
            continue;
        }
        let search = enumerate_general_rings(&inv, &[], caps)?;
        for (t, r) in search.rings().enumerate() {
            out.push((format!("{} #{t}", search.family()), r));
        }
    }
    let families = [
        (vec![3, 3], vec![3]),
        (vec![5, 5], vec![5]),
        (vec![3, 3], vec![3, 3]),
        (vec![3, 3, 3], vec![3]),
    ];
    for (v, w) in families {
        let spec = BilinearFamilySpec {
            v_invariants: v,
            w_invariants: w,
            alternating: true,
        };
        let order: u64 = spec.v_invariants.iter().chain(&spec.w_invariants).product();
        if order as usize > order_cap {
            continue;
        }
        let search = enumerate_bilinear_rings(&spec, caps)?;
        // N(R) has order |R|^2, so the largest families contribute one nonzero map
        let take = if order > 27 { 1 } else { 4 };
        for t in (1..search.candidates()).take(take) {
            out.push((format!("{} #{t}", search.family()), search.candidate(t)));
        }
    }
    Ok(out)
}

/// Odd-order groups of class at most 2 and order at most `order_cap`.
pub fn odd_class_two_groups(order_cap: usize, caps: &Caps) -> Result<Vec<(String, FiniteGroup)>> {
    let mut out = Vec::new();
    for s in [
        "cyclic:1",
        "cyclic:3",
        "cyclic:9",
        "cyclic:15",
        "cyclic:27",
        "cyclic:81",
        "heisenberg:3",
        "heisenberg:5",
    ] {
        let name: CatalogName = s.parse()?;
        let g = catalog::group(&name)?;
        if g.order() <= order_cap {
            out.push((s.to_string(), g));
        }
    }
    let h3 = catalog::group(&CatalogName::Heisenberg(3))?;
    let c3 = catalog::group(&CatalogName::Cyclic(3))?;
    if h3.order() * 3 <= order_cap {
        out.push((
            "heisenberg:3 x cyclic:3".into(),
            direct_product_group(&h3, &c3, caps)?,
        ));
    }
    let z3 = catalog::ring(&CatalogName::Zn(3))?;
    if 9 <= order_cap {
        out.push(("malcev(zn:3)".into(), malcev_group(&z3, caps)?));
    }
    let spec = BilinearFamilySpec {
        v_invariants: vec![3, 3],
        w_invariants: vec![3],
        alternating: true,
    };
    if 27 <= order_cap {
        for r in enumerate_bilinear_rings(&spec, caps)?.rings() {
            out.push((format!("circle({spec} ring)"), circle_group(&r)?));
        }
    }
    Ok(out)
}

/// Pointwise evidence for the odd-order equalities: for every odd ring `R`,
/// `Pr_c(R) = Pr_c(G_{N(R)})`; for every odd group `G` of class at most 2,
/// `Pr_c(G) = Pr_ann(R_G) = Pr_c(R_G)`.
///
/// `N(R)` has order `|R|^2`, so the construction cap is raised to
/// `order_cap^2` for this check.
pub fn odd_round_trip(order_cap: usize, caps: &Caps) -> Result<OddRoundTripReport> {
    let start = Instant::now();
    let mut report = OddRoundTripReport::default();
    let wide = Caps {
        order_cap: caps.order_cap.max(order_cap * order_cap),
        ..*caps
    };
    for (name, r) in odd_rings(order_cap, caps)? {
        debug_assert!(r.order() % 2 == 1);
        let n = construct_n(&r, &wide)?;
        let ring_value = pr_c_ring(&r).value;
        let group_value = match circle_group(&n) {
            Ok(g) => pr_c_group(&g).value,
            Err(e) => {
                report
                    .failures
                    .push(format!("{name}: circle group of N(R) failed: {e}"));
                continue;
            }
        };
        if ring_value != group_value {
            report.failures.push(format!(
                "{name}: Pr_c(R) = {ring_value} but Pr_c(G_N(R)) = {group_value}"
            ));
        }
        report.rings_checked += 1;
        report.max_order = report.max_order.max(r.order());
    }
    for (name, g) in odd_class_two_groups(order_cap, caps)? {
        let rg = match commutator_ring(&g) {
            Ok(rg) => rg,
            Err(e) => {
                report
                    .failures
                    .push(format!("{name}: commutator ring failed: {e}"));
                continue;
            }
        };
        let pc = pr_c_group(&g).value;
        let pann = pr_ann_ring(&rg).value;
        let pcr = pr_c_ring(&rg).value;
        if pc != pann || pann != pcr {
            report.failures.push(format!(
                "{name}: Pr_c(G) = {pc}, Pr_ann(R_G) = {pann}, Pr_c(R_G) = {pcr}"
            ));
        }
        report.groups_checked += 1;
        report.max_order = report.max_order.max(g.order());
    }
    report.elapsed = start.elapsed();
    Ok(report)
}
