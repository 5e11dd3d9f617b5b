//! Verification suites: each one checks a family of exact identities over
//! catalog and enumerated instances and records every violation together
//! with a serialized witness.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::constructions::catalog;
use crate::constructions::{
    circle_group, commutator_ring, commutator_ring_with, construct_n, direct_product_ring,
    malcev_group, Representatives,
};
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::json::{group_value, ring_value};
use crate::probability::{pr_ann_ring, pr_c_group, pr_c_ring, pr_f_ring};
use crate::rational::Rational;
use crate::ring::{FiniteRing, PolySpec};
use crate::spectrum::{
    enumerate_bilinear_rings, enumerate_general_rings, gate_check_32, odd_round_trip,
    BilinearFamilySpec, RingFilter, Spectrum,
};
use crate::structure::{
    commutator, is_antisymmetric, is_strongly_antisymmetric, lower_central_series,
    p_primary_decomposition, ring_powers,
};
use crate::Caps;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Lemma11,
    Lemma31,
    Lemma32,
    Lemma33,
    Malcev,
    Multiplicativity,
    Thm21,
    Odd22,
    Gate32,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Lemma11,
        Suite::Lemma31,
        Suite::Lemma32,
        Suite::Lemma33,
        Suite::Malcev,
        Suite::Multiplicativity,
        Suite::Thm21,
        Suite::Odd22,
        Suite::Gate32,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Lemma11 => "lemma11",
            Suite::Lemma31 => "lemma31",
            Suite::Lemma32 => "lemma32",
            Suite::Lemma33 => "lemma33",
            Suite::Malcev => "malcev",
            Suite::Multiplicativity => "multiplicativity",
            Suite::Thm21 => "thm21",
            Suite::Odd22 => "odd22",
            Suite::Gate32 => "gate32",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}

/// One violated identity.
#[derive(Debug, Clone, PartialEq)]
pub struct Failure {
    pub instance: String,
    pub violated: String,
    pub witness: Value,
}

#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub suite: Suite,
    pub seed: u64,
    pub instances: usize,
    pub max_order: usize,
    pub failures: Vec<Failure>,
    pub elapsed: Duration,
}

impl VerifyReport {
    fn new(suite: Suite, seed: u64) -> Self {
        VerifyReport {
            suite,
            seed,
            instances: 0,
            max_order: 0,
            failures: Vec::new(),
            elapsed: Duration::ZERO,
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn count(&mut self, order: usize) {
        self.instances += 1;
        self.max_order = self.max_order.max(order);
    }

    fn fail(&mut self, instance: &str, violated: String, witness: Value) {
        self.failures.push(Failure {
            instance: instance.to_string(),
            violated,
            witness,
        });
    }

    fn expect_eq(
        &mut self,
        instance: &str,
        what: &str,
        lhs: Rational,
        rhs: Rational,
        witness: impl FnOnce() -> Value,
    ) {
        if lhs != rhs {
            self.fail(instance, format!("{what}: {lhs} != {rhs}"), witness());
        }
    }

    /// The report without wall time, for comparing runs.
    pub fn to_json(&self) -> Value {
        json!({
            "suite": self.suite.name(),
            "seed": self.seed,
            "instances": self.instances,
            "max_order": self.max_order,
            "passed": self.passed(),
            "failures": self.failures.iter().map(|f| json!({
                "instance": f.instance,
                "violated": f.violated,
                "witness": f.witness,
            })).collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "suite {}: {} instances, max order {}, {} failures, {:.2?}",
            self.suite,
            self.instances,
            self.max_order,
            self.failures.len(),
            self.elapsed
        )?;
        for fail in &self.failures {
            writeln!(f, "  FAIL {}: {}", fail.instance, fail.violated)?;
            writeln!(f, "    witness {}", fail.witness)?;
        }
        Ok(())
    }
}

pub fn run_suite(suite: Suite, seed: u64, caps: &Caps) -> Result<VerifyReport> {
    let start = Instant::now();
    let mut report = VerifyReport::new(suite, seed);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match suite {
        Suite::Lemma11 => lemma11(&mut report, &mut rng, caps)?,
        Suite::Lemma31 => lemma31(&mut report, caps)?,
        Suite::Lemma32 => lemma32(&mut report, &mut rng, caps)?,
        Suite::Lemma33 => lemma33(&mut report, caps)?,
        Suite::Malcev => malcev(&mut report, &mut rng, caps)?,
        Suite::Multiplicativity => multiplicativity(&mut report, &mut rng, caps)?,
        Suite::Thm21 => thm21(&mut report, &mut rng, caps)?,
        Suite::Odd22 => odd22(&mut report, caps)?,
        Suite::Gate32 => gate32(&mut report, caps)?,
    }
    report.elapsed = start.elapsed();
    Ok(report)
}

fn catalog_rings(max_order: usize) -> Result<Vec<(String, FiniteRing)>> {
    let mut out = Vec::new();
    for name in catalog::small_rings() {
        let r = catalog::ring(&name)?;
        if r.order() <= max_order {
            out.push((name.to_string(), r));
        }
    }
    Ok(out)
}

fn sample_of(
    search: &crate::spectrum::RingSearch,
    size: usize,
    rng: &mut ChaCha8Rng,
) -> Vec<(String, FiniteRing)> {
    let mut all: Vec<(String, FiniteRing)> = search
        .rings()
        .enumerate()
        .map(|(t, r)| (format!("{} #{t}", search.family()), r))
        .collect();
    if all.len() > size {
        all.shuffle(rng);
        all.truncate(size);
    }
    all
}

fn lemma11(report: &mut VerifyReport, rng: &mut ChaCha8Rng, caps: &Caps) -> Result<()> {
    let mut rings = catalog_rings(32)?;
    for s in ["zn:16", "zn:32", "null:2,2,2", "null:2,4,4"] {
        rings.push((s.to_string(), catalog::ring(&s.parse()?)?));
    }
    for inv in [vec![2], vec![3], vec![4]] {
        let search = enumerate_general_rings(&inv, &[], caps)?;
        rings.extend(sample_of(&search, usize::MAX, rng));
    }
    rings.extend(sample_of(
        &enumerate_general_rings(&[2, 2], &[], caps)?,
        24,
        rng,
    ));
    for (name, r) in rings {
        let n = construct_n(&r, caps)?;
        for f in [PolySpec::COMMUTE, PolySpec::ANNIHILATE] {
            report.expect_eq(
                &name,
                &format!("Pr_({f})(R) = Pr_({f})(N(R))"),
                pr_f_ring(&r, f).value,
                pr_f_ring(&n, f).value,
                || ring_value(&r),
            );
        }
        let class = ring_powers(&n).class;
        if !class.is_at_most(3) {
            report.fail(
                &name,
                format!("N(R) has class {class}, expected at most 3"),
                ring_value(&r),
            );
        }
        report.count(r.order());
    }
    Ok(())
}

/// Associative rings of order at most 64 and class at most 3.
pub fn class_three_rings(caps: &Caps) -> Result<Vec<(String, FiniteRing)>> {
    let keep = |r: &FiniteRing| r.is_associative() && ring_powers(r).class.is_at_most(3);
    let mut out: Vec<(String, FiniteRing)> = catalog_rings(64)?
        .into_iter()
        .filter(|(_, r)| keep(r))
        .collect();
    let wide = Caps {
        order_cap: caps.order_cap.max(64),
        ..*caps
    };
    for (name, r) in catalog_rings(8)? {
        out.push((format!("N({name})"), construct_n(&r, &wide)?));
    }
    let filters = [RingFilter::Associative, RingFilter::ClassAtMost(3)];
    for inv in [
        vec![2],
        vec![4],
        vec![8],
        vec![2, 2],
        vec![2, 4],
        vec![3, 3],
    ] {
        let search = enumerate_general_rings(&inv, &filters, caps)?;
        for (t, r) in search.rings().enumerate() {
            out.push((format!("{} #{t}", search.family()), r));
        }
    }
    let families: [(&[u64], &[u64], bool); 7] = [
        (&[2, 2], &[2], false),
        (&[2, 2, 2], &[2], false),
        (&[2, 2], &[2, 2], false),
        (&[3, 3], &[3], false),
        (&[2, 4], &[2], false),
        (&[2, 2, 2], &[2, 2], true),
        (&[2, 2, 2], &[2, 2, 2], true),
    ];
    for (v, w, alternating) in families {
        let spec = BilinearFamilySpec {
            v_invariants: v.to_vec(),
            w_invariants: w.to_vec(),
            alternating,
        };
        let search = enumerate_bilinear_rings(&spec, caps)?;
        for (t, r) in search.rings().enumerate() {
            out.push((format!("{} #{t}", search.family()), r));
        }
    }
    Ok(out)
}

fn lemma31(report: &mut VerifyReport, caps: &Caps) -> Result<()> {
    for (name, r) in class_three_rings(caps)? {
        let g = circle_group(&r)?;
        if let Err(e) = FiniteGroup::validate(g.order(), &g.table_rows(), g.identity()) {
            report.fail(
                &name,
                format!("circle group fails validation: {e}"),
                ring_value(&r),
            );
            continue;
        }
        if let Some((a, b)) = r
            .elements()
            .flat_map(|a| r.elements().map(move |b| (a, b)))
            .find(|&(a, b)| commutator(&g, a, b) != r.commutator(a, b))
        {
            report.fail(
                &name,
                format!(
                    "group commutator [{a},{b}] = {} but ring commutator = {}",
                    commutator(&g, a, b),
                    r.commutator(a, b)
                ),
                ring_value(&r),
            );
        }
        let class = lower_central_series(&g).class;
        if !class.is_at_most(2) {
            report.fail(
                &name,
                format!("circle group has class {class}"),
                ring_value(&r),
            );
        }
        report.expect_eq(
            &name,
            "Pr_c(N) = Pr_c(G_N)",
            pr_c_ring(&r).value,
            pr_c_group(&g).value,
            || ring_value(&r),
        );
        report.count(r.order());
    }
    Ok(())
}

/// Groups of class at most 2: the catalog ones plus circle groups of
/// [`class_three_rings`].
pub fn class_two_group_instances(caps: &Caps) -> Result<Vec<(String, FiniteGroup)>> {
    let mut out = Vec::new();
    for name in catalog::class_two_groups() {
        out.push((name.to_string(), catalog::group(&name)?));
    }
    for (name, r) in class_three_rings(caps)? {
        out.push((format!("circle({name})"), circle_group(&r)?));
    }
    Ok(out)
}

fn lemma32(report: &mut VerifyReport, rng: &mut ChaCha8Rng, caps: &Caps) -> Result<()> {
    for (name, g) in class_two_group_instances(caps)? {
        let rg = match commutator_ring(&g) {
            Ok(rg) => rg,
            Err(e) => {
                report.fail(
                    &name,
                    format!("commutator ring failed: {e}"),
                    group_value(&g),
                );
                continue;
            }
        };
        if rg.rank() > 0 {
            if let Err(e) =
                FiniteRing::validate(rg.invariants().to_vec(), rg.structure_constants().to_vec())
            {
                report.fail(&name, format!("R_G fails validation: {e}"), group_value(&g));
                continue;
            }
        }
        if !is_strongly_antisymmetric(&rg) {
            report.fail(
                &name,
                "R_G is not strongly antisymmetric".into(),
                group_value(&g),
            );
        }
        let class = ring_powers(&rg).class;
        if !class.is_at_most(3) {
            report.fail(&name, format!("R_G has class {class}"), group_value(&g));
        }
        if rg.order() != g.order() {
            report.fail(
                &name,
                format!("|R_G| = {} but |G| = {}", rg.order(), g.order()),
                group_value(&g),
            );
        }
        let pc = pr_c_group(&g).value;
        report.expect_eq(
            &name,
            "Pr_c(G) = Pr_ann(R_G)",
            pc,
            pr_ann_ring(&rg).value,
            || group_value(&g),
        );
        if g.order() <= 64 {
            let other = commutator_ring_with(&g, Representatives::Random(rand::Rng::gen(rng)))?;
            report.expect_eq(
                &name,
                "Pr_ann(R_G) independent of coset representatives",
                pr_ann_ring(&rg).value,
                pr_ann_ring(&other).value,
                || group_value(&g),
            );
        }
        report.count(g.order());
    }
    Ok(())
}

fn lemma33(report: &mut VerifyReport, caps: &Caps) -> Result<()> {
    let families: [(&[u64], &[u64], bool); 8] = [
        (&[3, 3], &[3], true),
        (&[3, 3], &[3], false),
        (&[3, 3, 3], &[3], true),
        (&[3, 3], &[3, 3], true),
        (&[3, 3], &[9], true),
        (&[3, 9], &[3], true),
        (&[5, 5], &[5], true),
        (&[3, 3, 3], &[3, 3], true),
    ];
    for (v, w, alternating) in families {
        let spec = BilinearFamilySpec {
            v_invariants: v.to_vec(),
            w_invariants: w.to_vec(),
            alternating,
        };
        let search =
            enumerate_bilinear_rings(&spec, caps)?.with_filters(&[RingFilter::Antisymmetric]);
        for (t, r) in search.rings().enumerate() {
            let name = format!("{} #{t}", search.family());
            if r.order() % 2 == 0 || !is_antisymmetric(&r) {
                report.fail(
                    &name,
                    "instance is not an odd antisymmetric ring".into(),
                    ring_value(&r),
                );
            }
            report.expect_eq(
                &name,
                "Pr_c(R) = Pr_ann(R)",
                pr_c_ring(&r).value,
                pr_ann_ring(&r).value,
                || ring_value(&r),
            );
            report.count(r.order());
        }
    }
    Ok(())
}

fn malcev(report: &mut VerifyReport, rng: &mut ChaCha8Rng, caps: &Caps) -> Result<()> {
    let mut rings = catalog_rings(16)?;
    let general = enumerate_general_rings(&[2, 2], &[], caps)?;
    let nonassoc = general.clone().with_filters(&[RingFilter::NonAssociative]);
    rings.extend(
        nonassoc
            .rings()
            .take(4)
            .enumerate()
            .map(|(t, r)| (format!("{} #{t}", nonassoc.family()), r)),
    );
    rings.extend(sample_of(&general, 8, rng));
    rings.extend(sample_of(
        &enumerate_general_rings(&[3], &[], caps)?,
        usize::MAX,
        rng,
    ));
    for (name, r) in rings {
        let m = malcev_group(&r, caps)?;
        if let Err(e) = FiniteGroup::validate(m.order(), &m.table_rows(), m.identity()) {
            report.fail(
                &name,
                format!("Mal'cev group fails validation: {e}"),
                ring_value(&r),
            );
            continue;
        }
        let class = lower_central_series(&m).class;
        if !class.is_at_most(2) {
            report.fail(
                &name,
                format!("Mal'cev group has class {class}"),
                ring_value(&r),
            );
        }
        report.expect_eq(
            &name,
            "Pr_c(M(R)) = Pr_c(R)",
            pr_c_group(&m).value,
            pr_c_ring(&r).value,
            || ring_value(&r),
        );
        report.count(r.order());
    }
    Ok(())
}

fn multiplicativity(report: &mut VerifyReport, rng: &mut ChaCha8Rng, caps: &Caps) -> Result<()> {
    let pool = catalog_rings(usize::MAX)?;
    let mut pairs = 0;
    while pairs < 25 {
        let (n1, r1) = pool.choose(rng).expect("catalog is nonempty");
        let (n2, r2) = pool.choose(rng).expect("catalog is nonempty");
        if r1.order() * r2.order() > caps.order_cap {
            continue;
        }
        pairs += 1;
        let name = format!("{n1} x {n2}");
        let prod = direct_product_ring(r1, r2, caps)?;
        for f in [PolySpec::COMMUTE, PolySpec::ANNIHILATE] {
            report.expect_eq(
                &name,
                &format!("Pr_({f})(R1 x R2) = Pr_({f})(R1) Pr_({f})(R2)"),
                pr_f_ring(&prod, f).value,
                pr_f_ring(r1, f).value * pr_f_ring(r2, f).value,
                || json!([ring_value(r1), ring_value(r2)]),
            );
            let from_parts = p_primary_decomposition(&prod)
                .iter()
                .map(|(_, part)| pr_f_ring(part, f).value)
                .fold(Rational::ONE, |a, b| a * b);
            report.expect_eq(
                &name,
                &format!("Pr_({f})(R) = product over primary components"),
                pr_f_ring(&prod, f).value,
                from_parts,
                || ring_value(&prod),
            );
        }
        report.count(prod.order());
    }
    Ok(())
}

fn thm21(report: &mut VerifyReport, rng: &mut ChaCha8Rng, caps: &Caps) -> Result<()> {
    let mut rings = catalog_rings(64)?;
    rings.extend(sample_of(
        &enumerate_general_rings(&[2, 2], &[], caps)?,
        32,
        rng,
    ));
    for (name, r) in rings {
        let g = circle_group(&construct_n(&r, caps)?)?;
        report.expect_eq(
            &name,
            "Pr_c(R) = Pr_c(G_N(R))",
            pr_c_ring(&r).value,
            pr_c_group(&g).value,
            || ring_value(&r),
        );
        report.count(r.order());
    }
    for name in catalog::class_two_groups() {
        let g = catalog::group(&name)?;
        let rg = commutator_ring(&g)?;
        report.expect_eq(
            &name.to_string(),
            "Pr_c(G) = Pr_ann(R_G)",
            pr_c_group(&g).value,
            pr_ann_ring(&rg).value,
            || group_value(&g),
        );
        report.count(g.order());
    }
    Ok(())
}

fn odd22(report: &mut VerifyReport, caps: &Caps) -> Result<()> {
    let rep = odd_round_trip(81, caps)?;
    report.instances = rep.rings_checked + rep.groups_checked;
    report.max_order = rep.max_order;
    for f in rep.failures {
        report.fail("odd round trip", f, Value::Null);
    }
    Ok(())
}

/// Commuting spectra checked by the gate suite.
pub fn gate_spectra(caps: &Caps) -> Result<Vec<Spectrum>> {
    let mut out = vec![enumerate_general_rings(&[2, 2], &[], caps)?.spectrum(PolySpec::COMMUTE)?];
    let families: [(&[u64], &[u64]); 3] = [(&[2, 2], &[2]), (&[2, 2, 2], &[2]), (&[3, 3], &[3])];
    for (v, w) in families {
        for alternating in [true, false] {
            let spec = BilinearFamilySpec {
                v_invariants: v.to_vec(),
                w_invariants: w.to_vec(),
                alternating,
            };
            out.push(enumerate_bilinear_rings(&spec, caps)?.spectrum(PolySpec::COMMUTE)?);
        }
    }
    for inv in [
        vec![2],
        vec![3],
        vec![4],
        vec![2, 4],
        vec![3, 3],
        vec![4, 4],
    ] {
        out.push(enumerate_general_rings(&inv, &[], caps)?.spectrum(PolySpec::COMMUTE)?);
    }
    Ok(out)
}

fn gate32(report: &mut VerifyReport, caps: &Caps) -> Result<()> {
    for s in gate_spectra(caps)? {
        let gate = gate_check_32(&s);
        for v in gate.violations {
            report.fail(
                &s.family,
                format!(
                    "commuting probability {} in [11/32, 1] outside the known list ({:?})",
                    v.value, v.reason
                ),
                v.witness.as_ref().map(ring_value).unwrap_or(Value::Null),
            );
        }
        let max_order = s.entries().map(|e| e.witness.order()).max().unwrap_or(0);
        report.instances += s.total_count() as usize;
        report.max_order = report.max_order.max(max_order);
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("lemma99".parse::<Suite>().is_err());
    }

    #[test]
    fn quick_suites_pass_and_are_deterministic() {
        let caps = Caps::default();
        for suite in [Suite::Lemma11, Suite::Multiplicativity, Suite::Malcev] {
            let a = run_suite(suite, 7, &caps).unwrap();
            let b = run_suite(suite, 7, &caps).unwrap();
            assert!(a.passed(), "{a}");
            assert_eq!(a.to_json(), b.to_json());
        }
    }

    #[test]
    fn failures_carry_witnesses() {
        let mut rep = VerifyReport::new(Suite::Lemma33, 0);
        let r = FiniteRing::zero();
        rep.expect_eq("x", "1 = 1/2", Rational::ONE, Rational::new(1, 2), || {
            ring_value(&r)
        });
        assert!(!rep.passed());
        let j = rep.to_json();
        assert_eq!(j["failures"][0]["violated"], "1 = 1/2: 1 != 1/2");
        assert_eq!(j["failures"][0]["witness"]["type"], "ring");
    }
}
