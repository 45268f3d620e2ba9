//! Executable verifiers for the characterization results, each computing
//! both sides of its equivalence by independent code paths, plus the
//! worked-example reproduction and the catalog suite runner.
//!
//! Claims:
//! - `lemma1`: Con(X) of a transitive G-set is order-isomorphic to the
//!   subgroup interval [Stab(x), G], via the explicit mutually inverse maps.
//! - `lemma2`: a transitive G-set is congruence permutable iff HK = KH for
//!   all H, K in that interval, independent of the base point.
//! - `lemma3`: a G-set is congruence permutable iff it is segregated, has at
//!   most two orbits, and each orbit is congruence permutable.
//! - `thm1`: X is transitive and congruence permutable iff (G,X,0) is a
//!   congruence permutable semigroup; the proof facts about congruence
//!   classes of (G,X,0) are checked alongside.
//! - `thm6`: X is congruence permutable iff (G,X,0) is segregated with at
//!   most two orbit subsemigroups, each congruence permutable.
//! - `ideal_chain`: a congruence permutable (G,X,0) has totally ordered
//!   ideals.
//! - `example`: the two-fixed-points instance, where the G-set is
//!   permutable but the semigroup is not.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::congruence::{
    congruences_principal, gset_permutable, is_congruence, is_segregated,
};
use crate::group::{interval_subgroups, set_product, FiniteGroup, Subgroup};
use crate::gset::{catalog, CatalogBounds, GSet};
use crate::partition::{compose, Partition, UnionFind};
use crate::semigroup::{
    build_gx0, ideals_form_chain, is_sg_congruence, orbit_subsemigroups, sg_congruences,
    sg_permutable, sg_segregated,
};

/// Hard caps for suite bounds; principal-congruence enumeration stays exact
/// and fast below these.
pub const MAX_GROUP_ORDER: usize = 8;
pub const MAX_CARRIER: usize = 12;
pub const MAX_ORBITS: usize = 4;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum ClaimId {
    Lemma1,
    Lemma2,
    Lemma3,
    Thm1,
    Thm6,
    IdealChain,
    Example,
}

impl ClaimId {
    pub const ALL: [ClaimId; 7] = [
        ClaimId::Lemma1,
        ClaimId::Lemma2,
        ClaimId::Lemma3,
        ClaimId::Thm1,
        ClaimId::Thm6,
        ClaimId::IdealChain,
        ClaimId::Example,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ClaimId::Lemma1 => "lemma1",
            ClaimId::Lemma2 => "lemma2",
            ClaimId::Lemma3 => "lemma3",
            ClaimId::Thm1 => "thm1",
            ClaimId::Thm6 => "thm6",
            ClaimId::IdealChain => "ideal_chain",
            ClaimId::Example => "example",
        }
    }

    pub fn from_name(name: &str) -> Option<ClaimId> {
        ClaimId::ALL.into_iter().find(|c| c.name() == name)
    }
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Check counts for a verdict; `elapsed_micros` is filled by callers that
/// can measure time (the core stays clock-free).
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct Stats {
    pub congruences: usize,
    pub pairs_checked: usize,
    pub elapsed_micros: Option<u64>,
}

/// Outcome of one verifier on one instance. A false verdict always carries
/// a witness.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VerdictReport {
    pub claim: ClaimId,
    pub instance: String,
    pub verdict: bool,
    pub witness: Option<String>,
    pub stats: Stats,
}

impl VerdictReport {
    fn pass(claim: ClaimId, instance: &str, stats: Stats) -> VerdictReport {
        VerdictReport { claim, instance: instance.into(), verdict: true, witness: None, stats }
    }

    fn fail(claim: ClaimId, instance: &str, witness: String, stats: Stats) -> VerdictReport {
        VerdictReport {
            claim,
            instance: instance.into(),
            verdict: false,
            witness: Some(witness),
            stats,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TheoremError {
    NotTransitive,
    BoundsExceeded { what: &'static str, value: usize, max: usize },
}

impl fmt::Display for TheoremError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            TheoremError::NotTransitive => write!(f, "instance is not transitive"),
            TheoremError::BoundsExceeded { what, value, max } => {
                write!(f, "{what} bound {value} exceeds the supported maximum {max}")
            }
        }
    }
}

/// One-line replayable serialization of an instance, for failure witnesses.
fn compact_gset(x: &GSet) -> String {
    let group_rows: Vec<String> = x
        .group()
        .table_rows()
        .map(|r| r.iter().map(|v| format!("{v}")).collect::<Vec<_>>().join(","))
        .collect();
    let action_rows: Vec<String> = x
        .action_rows()
        .map(|r| r.iter().map(|v| format!("{v}")).collect::<Vec<_>>().join(","))
        .collect();
    format!("group=[{}];action=[{}]", group_rows.join("|"), action_rows.join("|"))
}

fn fail_with_instance(
    claim: ClaimId,
    instance: &str,
    detail: String,
    x: &GSet,
    stats: Stats,
) -> VerdictReport {
    VerdictReport::fail(claim, instance, format!("{detail};instance:{}", compact_gset(x)), stats)
}

/// The map `φ: α ↦ H_α = {g : (x^g, x) ∈ α}` from Con(X) into the subgroup
/// lattice.
fn phi(x: &GSet, base: usize, alpha: &Partition) -> crate::set::ElemSet {
    (0..x.group().order()).filter(|&g| alpha.same(x.act(base, g), base)).collect()
}

/// The map `ψ: H ↦ α_H = {(x^g, x^h) : Hg = Hh}` from the interval into the
/// partitions of the carrier.
fn psi(x: &GSet, base: usize, h: &Subgroup<'_>) -> Partition {
    let group = x.group();
    let n = group.order();
    let mut uf = UnionFind::new(x.carrier());
    for g in 0..n {
        for k in 0..n {
            // Hg = Hk iff g * k^{-1} lands in H
            if h.contains(group.mul(g, group.inverse_of(k))) {
                uf.union(x.act(base, g), x.act(base, k));
            }
        }
    }
    uf.into_partition()
}

/// Verifies the lattice isomorphism Con(X) ≅ [Stab(x), G] at one base point:
/// φ lands in the interval, ψ lands in Con(X), the maps are mutually inverse,
/// and both are order-preserving. The two sides are enumerated independently
/// (congruence lattice vs. subgroup interval).
pub fn verify_lemma1(
    x: &GSet,
    base: usize,
    instance: &str,
) -> Result<VerdictReport, TheoremError> {
    if !x.is_transitive() {
        return Err(TheoremError::NotTransitive);
    }
    let congruences = congruences_principal(x);
    let stab = x.stabilizer(base);
    let interval = interval_subgroups(x.group(), &stab).expect("stabilizer is a subgroup");
    let mut pairs_checked = 0;
    let mut stats = Stats { congruences: congruences.len(), ..Stats::default() };
    let claim = ClaimId::Lemma1;

    if congruences.len() != interval.len() {
        return Ok(fail_with_instance(
            claim,
            instance,
            format!("size:|Con(X)|={},interval={}", congruences.len(), interval.len()),
            x,
            stats,
        ));
    }
    for alpha in &congruences {
        let h_alpha = phi(x, base, alpha);
        pairs_checked += 1;
        let in_interval = Subgroup::new(x.group(), h_alpha)
            .map(|h| stab.members().is_subset(h.members()))
            .unwrap_or(false);
        if !in_interval {
            stats.pairs_checked = pairs_checked;
            return Ok(fail_with_instance(
                claim,
                instance,
                format!("phi-not-in-interval:alpha:{alpha};image:{h_alpha}"),
                x,
                stats,
            ));
        }
        let back = psi(x, base, &Subgroup::new(x.group(), h_alpha).unwrap());
        if &back != alpha {
            stats.pairs_checked = pairs_checked;
            return Ok(fail_with_instance(
                claim,
                instance,
                format!("psi-phi-not-identity:alpha:{alpha};back:{back}"),
                x,
                stats,
            ));
        }
    }
    for h in &interval {
        let alpha_h = psi(x, base, h);
        pairs_checked += 1;
        if is_congruence(x, &alpha_h).expect("carriers agree").is_some() {
            stats.pairs_checked = pairs_checked;
            return Ok(fail_with_instance(
                claim,
                instance,
                format!("psi-not-a-congruence:H:{h};image:{alpha_h}"),
                x,
                stats,
            ));
        }
        if phi(x, base, &alpha_h) != h.members() {
            stats.pairs_checked = pairs_checked;
            return Ok(fail_with_instance(
                claim,
                instance,
                format!("phi-psi-not-identity:H:{h}"),
                x,
                stats,
            ));
        }
    }
    // order preservation, both directions of both maps
    for (i, alpha) in congruences.iter().enumerate() {
        for beta in &congruences[i + 1..] {
            pairs_checked += 1;
            let (ha, hb) = (phi(x, base, alpha), phi(x, base, beta));
            let order_matches = (alpha.refines(beta) == ha.is_subset(hb))
                && (beta.refines(alpha) == hb.is_subset(ha));
            if !order_matches {
                stats.pairs_checked = pairs_checked;
                return Ok(fail_with_instance(
                    claim,
                    instance,
                    format!("order-not-preserved:alpha:{alpha};beta:{beta}"),
                    x,
                    stats,
                ));
            }
        }
    }
    stats.pairs_checked = pairs_checked;
    Ok(VerdictReport::pass(claim, instance, stats))
}

/// Verifies that congruence permutability of a transitive G-set coincides
/// with `HK = KH` for all pairs in the stabilizer interval, for every base
/// point, and that the outcome does not depend on the base point.
pub fn verify_lemma2(x: &GSet, instance: &str) -> Result<VerdictReport, TheoremError> {
    if !x.is_transitive() {
        return Err(TheoremError::NotTransitive);
    }
    let claim = ClaimId::Lemma2;
    let left = gset_permutable(x);
    let mut pairs_checked = left.pairs_checked;
    let mut stats = Stats { congruences: left.congruence_count, ..Stats::default() };
    let mut first_right: Option<bool> = None;
    for base in 0..x.carrier() {
        let stab = x.stabilizer(base);
        let interval = interval_subgroups(x.group(), &stab).expect("stabilizer is a subgroup");
        let mut products_commute = true;
        'pairs: for h in &interval {
            for k in &interval {
                pairs_checked += 1;
                if set_product(h, k).unwrap() != set_product(k, h).unwrap() {
                    products_commute = false;
                    break 'pairs;
                }
            }
        }
        match first_right {
            None => first_right = Some(products_commute),
            Some(prev) if prev != products_commute => {
                stats.pairs_checked = pairs_checked;
                return Ok(fail_with_instance(
                    claim,
                    instance,
                    format!("base-point-dependent:x={base}"),
                    x,
                    stats,
                ));
            }
            _ => {}
        }
    }
    stats.pairs_checked = pairs_checked;
    let right = first_right.expect("carrier is non-empty");
    if left.permutable == right {
        Ok(VerdictReport::pass(claim, instance, stats))
    } else {
        Ok(fail_with_instance(
            claim,
            instance,
            format!("sides-differ:permutable={},products-commute={right}", left.permutable),
            x,
            stats,
        ))
    }
}

/// Verifies the arbitrary-G-set characterization: permutable iff segregated,
/// at most two orbits, and every orbit permutable.
pub fn verify_lemma3(x: &GSet, instance: &str) -> VerdictReport {
    let claim = ClaimId::Lemma3;
    let left = gset_permutable(x);
    let mut stats =
        Stats { congruences: left.congruence_count, pairs_checked: left.pairs_checked, ..Stats::default() };
    let orbits = x.orbits();
    let segregated = is_segregated(x).segregated;
    let mut orbits_permutable = true;
    for block in orbits.blocks() {
        let orbit_report = gset_permutable(&x.restrict_to(block));
        stats.pairs_checked += orbit_report.pairs_checked;
        if !orbit_report.permutable {
            orbits_permutable = false;
            break;
        }
    }
    let right = segregated && orbits.count() <= 2 && orbits_permutable;
    if left.permutable == right {
        VerdictReport::pass(claim, instance, stats)
    } else {
        fail_with_instance(
            claim,
            instance,
            format!(
                "sides-differ:permutable={},segregated={segregated},orbits={},orbits-permutable={orbits_permutable}",
                left.permutable,
                orbits.count()
            ),
            x,
            stats,
        )
    }
}

/// Verifies the transitive characterization through the semigroup: X is
/// transitive and permutable iff (G,X,0) is permutable. When the left side
/// holds, the congruence-class facts from the proof are asserted as well:
/// every non-universal congruence of (G,X,0) keeps group-element classes
/// inside the group part and has zero class `{0}` or all of `X ∪ {0}`.
pub fn verify_thm1(x: &GSet, instance: &str) -> VerdictReport {
    let claim = ClaimId::Thm1;
    let gset_side = gset_permutable(x);
    let left = x.is_transitive() && gset_side.permutable;
    let built = build_gx0(x);
    let sg_side = sg_permutable(built.semigroup());
    let stats = Stats {
        congruences: gset_side.congruence_count + sg_side.congruence_count,
        pairs_checked: gset_side.pairs_checked + sg_side.pairs_checked,
        elapsed_micros: None,
    };
    if left != sg_side.permutable {
        return fail_with_instance(
            claim,
            instance,
            format!(
                "sides-differ:transitive={},gset-permutable={},sg-permutable={}",
                x.is_transitive(),
                gset_side.permutable,
                sg_side.permutable
            ),
            x,
            stats,
        );
    }
    if left {
        if let Some(detail) = class_fact_violation(&built) {
            return fail_with_instance(claim, instance, detail, x, stats);
        }
    }
    VerdictReport::pass(claim, instance, stats)
}

/// Checks the proof facts on every non-universal congruence of a (G,X,0)
/// semigroup; returns a description of the first violation.
pub fn class_fact_violation(built: &crate::semigroup::Gx0) -> Option<String> {
    let n = built.group_order();
    let order = built.order();
    let zero = built.zero_index();
    for alpha in sg_congruences(built.semigroup()) {
        if alpha.is_universal() {
            continue;
        }
        for g in 0..n {
            for other in n..order {
                if alpha.same(g, other) {
                    return Some(format!(
                        "group-class-escapes:alpha:{alpha};pair:({g},{other})"
                    ));
                }
            }
        }
        let zero_class: Vec<usize> = (0..order).filter(|&s| alpha.same(zero, s)).collect();
        let whole_n: Vec<usize> = (n..order).collect();
        if !(zero_class == [zero] || zero_class == whole_n) {
            return Some(format!("zero-class-irregular:alpha:{alpha}"));
        }
    }
    None
}

/// Verifies the arbitrary characterization through the semigroup: X is
/// permutable iff (G,X,0) is segregated with at most two orbit
/// subsemigroups, each of which is permutable.
pub fn verify_thm6(x: &GSet, instance: &str) -> VerdictReport {
    let claim = ClaimId::Thm6;
    let left = gset_permutable(x);
    let mut stats =
        Stats { congruences: left.congruence_count, pairs_checked: left.pairs_checked, ..Stats::default() };
    let segregated = sg_segregated(x).segregated;
    let subs = orbit_subsemigroups(x);
    let mut subs_permutable = true;
    for sub in &subs {
        let report = sg_permutable(sub.semigroup());
        stats.pairs_checked += report.pairs_checked;
        if !report.permutable {
            subs_permutable = false;
            break;
        }
    }
    let right = segregated && subs.len() <= 2 && subs_permutable;
    if left.permutable == right {
        VerdictReport::pass(claim, instance, stats)
    } else {
        fail_with_instance(
            claim,
            instance,
            format!(
                "sides-differ:permutable={},sg-segregated={segregated},orbit-subsemigroups={},subs-permutable={subs_permutable}",
                left.permutable,
                subs.len()
            ),
            x,
            stats,
        )
    }
}

/// Verifies that a congruence permutable (G,X,0) has chain-ordered ideals.
pub fn verify_ideal_chain(x: &GSet, instance: &str) -> VerdictReport {
    let claim = ClaimId::IdealChain;
    let built = build_gx0(x);
    let permutable = sg_permutable(built.semigroup());
    let stats = Stats {
        congruences: permutable.congruence_count,
        pairs_checked: permutable.pairs_checked,
        elapsed_micros: None,
    };
    if !permutable.permutable {
        return VerdictReport::pass(claim, instance, stats);
    }
    let chain = ideals_form_chain(built.semigroup());
    if chain.chain {
        VerdictReport::pass(claim, instance, stats)
    } else {
        let (a, b) = chain.witness.unwrap();
        fail_with_instance(
            claim,
            instance,
            format!("permutable-but-incomparable-ideals:({a},{b})"),
            x,
            stats,
        )
    }
}

/// One assertion of the worked-example reproduction.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ExampleCheck {
    /// Which acting group the run used ("Z1" or "Z2").
    pub group: &'static str,
    pub check: &'static str,
    pub ok: bool,
}

/// Runs the worked example — two fixed points, where the G-set is congruence
/// permutable but (G,X,0) is not — with the trivial group and again with Z2.
///
/// Checks per run: the G-set is permutable; the partitions `{a,0},{b},G` and
/// `{b,0},{a},G` are semigroup congruences; `(a,b)` lies in `α∘β` but not in
/// `β∘α`; the semigroup is not permutable.
pub fn example_checks() -> Vec<ExampleCheck> {
    let mut out = Vec::new();
    for (name, group) in [("Z1", FiniteGroup::trivial()), ("Z2", FiniteGroup::cyclic(2))] {
        let n = group.order();
        let rows: Vec<Vec<usize>> = (0..2).map(|p| vec![p; n]).collect();
        let x = GSet::validate(group, &rows).expect("fixed points form a G-set");
        let built = build_gx0(&x);
        let s = built.semigroup();
        let (a, b, zero) = (built.set_index(0), built.set_index(1), built.zero_index());
        // alpha: {a,0}, {b}, G as one class; beta: {b,0}, {a}, G
        let mut labels: Vec<usize> = vec![0; built.order()];
        labels[a] = 1;
        labels[b] = 2;
        let mut alpha_labels = labels.clone();
        alpha_labels[zero] = 1;
        let mut beta_labels = labels;
        beta_labels[zero] = 2;
        let alpha = Partition::from_labels(&alpha_labels);
        let beta = Partition::from_labels(&beta_labels);

        let checks: [(&'static str, bool); 6] = [
            ("gset-permutable", gset_permutable(&x).permutable),
            ("alpha-congruence", is_sg_congruence(s, &alpha).unwrap().is_none()),
            ("beta-congruence", is_sg_congruence(s, &beta).unwrap().is_none()),
            ("ab-in-alpha-beta", compose(&alpha, &beta).unwrap().contains(a, b)),
            ("ab-not-in-beta-alpha", !compose(&beta, &alpha).unwrap().contains(a, b)),
            ("sg-not-permutable", !sg_permutable(s).permutable),
        ];
        out.extend(checks.iter().map(|&(check, ok)| ExampleCheck { group: name, check, ok }));
    }
    out
}

/// [`example_checks`] folded into a single verdict.
pub fn reproduce_example() -> VerdictReport {
    let claim = ClaimId::Example;
    let checks = example_checks();
    let stats = Stats { congruences: 0, pairs_checked: checks.len(), elapsed_micros: None };
    match checks.iter().find(|c| !c.ok) {
        None => VerdictReport::pass(claim, "example", stats),
        Some(failed) => VerdictReport::fail(
            claim,
            "example",
            format!("{}:{}", failed.group, failed.check),
            stats,
        ),
    }
}

/// Per-claim tallies of a suite run.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ClaimSummary {
    pub claim: ClaimId,
    pub instances: usize,
    pub passes: usize,
    pub failures: usize,
}

/// All reports of a suite run, in deterministic order, with per-claim
/// totals.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SuiteSummary {
    pub reports: Vec<VerdictReport>,
    pub totals: Vec<ClaimSummary>,
}

impl SuiteSummary {
    pub fn all_pass(&self) -> bool {
        self.reports.iter().all(|r| r.verdict)
    }
}

/// Runs the selected verifiers over every applicable catalog instance.
/// Reports are grouped by claim in the fixed claim order, then follow the
/// catalog order (and base-point order for `lemma1`).
pub fn run_catalog_suite(
    bounds: &CatalogBounds,
    claims: &[ClaimId],
) -> Result<SuiteSummary, TheoremError> {
    if bounds.max_group_order > MAX_GROUP_ORDER {
        return Err(TheoremError::BoundsExceeded {
            what: "group order",
            value: bounds.max_group_order,
            max: MAX_GROUP_ORDER,
        });
    }
    if bounds.max_carrier > MAX_CARRIER {
        return Err(TheoremError::BoundsExceeded {
            what: "carrier",
            value: bounds.max_carrier,
            max: MAX_CARRIER,
        });
    }
    if bounds.max_orbits > MAX_ORBITS {
        return Err(TheoremError::BoundsExceeded {
            what: "orbits",
            value: bounds.max_orbits,
            max: MAX_ORBITS,
        });
    }
    let instances = catalog(bounds);
    let mut reports = Vec::new();
    let mut totals = Vec::new();
    for claim in ClaimId::ALL {
        if !claims.contains(&claim) {
            continue;
        }
        let start = reports.len();
        match claim {
            ClaimId::Lemma1 => {
                for ci in &instances {
                    if !ci.gset.is_transitive() {
                        continue;
                    }
                    for base in 0..ci.gset.carrier() {
                        let instance = format!("{} x={base}", ci.id);
                        reports.push(
                            verify_lemma1(&ci.gset, base, &instance)
                                .expect("instance is transitive"),
                        );
                    }
                }
            }
            ClaimId::Lemma2 => {
                for ci in &instances {
                    if !ci.gset.is_transitive() {
                        continue;
                    }
                    reports
                        .push(verify_lemma2(&ci.gset, &ci.id).expect("instance is transitive"));
                }
            }
            ClaimId::Lemma3 => {
                reports.extend(instances.iter().map(|ci| verify_lemma3(&ci.gset, &ci.id)));
            }
            ClaimId::Thm1 => {
                reports.extend(instances.iter().map(|ci| verify_thm1(&ci.gset, &ci.id)));
            }
            ClaimId::Thm6 => {
                reports.extend(instances.iter().map(|ci| verify_thm6(&ci.gset, &ci.id)));
            }
            ClaimId::IdealChain => {
                reports.extend(instances.iter().map(|ci| verify_ideal_chain(&ci.gset, &ci.id)));
            }
            ClaimId::Example => reports.push(reproduce_example()),
        }
        let run = &reports[start..];
        totals.push(ClaimSummary {
            claim,
            instances: run.len(),
            passes: run.iter().filter(|r| r.verdict).count(),
            failures: run.iter().filter(|r| !r.verdict).count(),
        });
    }
    Ok(SuiteSummary { reports, totals })
}
