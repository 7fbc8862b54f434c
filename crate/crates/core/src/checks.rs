//! Executable verification of the quantitative statements the library is
//! built around: minimal subgroup counts, congruence theorems, the
//! dihedral and quaternion counting identities, and the structural facts
//! used to classify the minimal groups.
//!
//! Every check produces a [`CheckReport`]: deterministic given its
//! parameters, with one witness per group (or per parameter value)
//! recording the observed and expected quantities. A report fails exactly
//! when one of its witnesses does. Checks never panic on mathematical
//! grounds; parameter-domain violations are errors, cap violations are
//! skipped reports.

use num_bigint::BigUint;
use serde::Serialize;

use crate::catalog;
use crate::counting::{self, count_subgroups_of_order, tau_sigma};
use crate::error::{Error, Result};
use crate::group::{self, GroupTable};
use crate::iso;
use crate::lattice::{self, ENUMERATION_CAP};
use crate::partition::Partition;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

/// One compared quantity: a group (or parameter) label, the observed
/// value, the expected value or bound, and whether the comparison held.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub group: String,
    pub observed: String,
    pub expected: String,
    pub ok: bool,
}

impl Witness {
    fn new(
        group: impl Into<String>,
        observed: impl ToString,
        expected: impl ToString,
        ok: bool,
    ) -> Self {
        Witness {
            group: group.into(),
            observed: observed.to_string(),
            expected: expected.to_string(),
            ok,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub params: String,
    pub status: CheckStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    pub witnesses: Vec<Witness>,
}

impl CheckReport {
    fn from_witnesses(check: &str, params: String, witnesses: Vec<Witness>) -> Self {
        let status = if witnesses.iter().all(|w| w.ok) {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail
        };
        CheckReport {
            check: check.to_string(),
            params,
            status,
            reason: None,
            witnesses,
        }
    }

    fn with_reason(mut self, reason: impl Into<String>) -> Self {
        self.reason = Some(reason.into());
        self
    }

    fn skipped(check: &str, params: String, reason: impl Into<String>) -> Self {
        CheckReport {
            check: check.to_string(),
            params,
            status: CheckStatus::Skipped,
            reason: Some(reason.into()),
            witnesses: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.status != CheckStatus::Fail
    }
}

fn require_prime(p: u64) -> Result<()> {
    if counting::is_prime(p) {
        Ok(())
    } else {
        Err(Error::invalid(format!("{p} is not prime")))
    }
}

fn fmt_counts(counts: &[u64]) -> String {
    let inner = counts
        .iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(", ");
    format!("[{inner}]")
}

/// The minimal total subgroup count over non-cyclic groups of order
/// `p^lam`: `(p+1)(lam-1) + 2` for odd p, with hand-set values at the
/// small erratic cases for p = 2 and `3*lam - 1` from lam = 5 on.
pub fn minimal_bound(p: u64, lam: u32) -> Result<u64> {
    require_prime(p)?;
    if lam < 2 {
        return Err(Error::invalid(format!(
            "minimal bound needs lambda >= 2, got {lam}"
        )));
    }
    Ok(if p == 2 {
        match lam {
            2 => 5,
            3 => 6,
            4 => 11,
            _ => 3 * lam as u64 - 1,
        }
    } else {
        (p + 1) * (lam as u64 - 1) + 2
    })
}

fn total_subgroups(g: &GroupTable) -> Result<u64> {
    Ok(lattice::enumerate_subgroups(g)?.len() as u64)
}

/// Exhaustive minimality over a complete catalog order: every non-cyclic
/// class has at least `minimal_bound` subgroups, and equality is attained
/// by exactly the known classes.
pub fn check_minimality_exhaustive(order: u64) -> Result<CheckReport> {
    let expected_attainers: Vec<&str> = match order {
        8 => vec!["Q8"],
        16 => vec!["C8xC2", "M16", "Q16"],
        27 => vec!["C9xC3", "M27"],
        _ => {
            return Err(Error::invalid(format!(
                "exhaustive minimality is catalogued for orders 8, 16, 27; got {order}"
            )))
        }
    };
    let (p, lam) = group::prime_power_decomposition(order).expect("catalog orders");
    let bound = minimal_bound(p, lam)?;
    let params = format!("order={order}");

    let mut witnesses = Vec::new();
    let mut attainers: Vec<String> = Vec::new();
    for entry in catalog::groups_of_order(order)? {
        let g = entry.build()?;
        if g.exponent_witness() == g.order() {
            continue; // the theorem excludes the cyclic group
        }
        let total = total_subgroups(&g)?;
        witnesses.push(Witness::new(
            entry.label(),
            total,
            format!(">= {bound}"),
            total >= bound,
        ));
        if total == bound {
            attainers.push(entry.label().to_string());
        }
    }
    attainers.sort_unstable();
    let mut expected = expected_attainers
        .iter()
        .map(|s| s.to_string())
        .collect::<Vec<_>>();
    expected.sort_unstable();
    witnesses.push(Witness::new(
        "equality attainers",
        attainers.join(", "),
        expected.join(", "),
        attainers == expected,
    ));
    Ok(CheckReport::from_witnesses(
        "minimal.exhaustive",
        params,
        witnesses,
    ))
}

/// The two named families attaining the bound: `C_{p^(lam-1)} x C_p` and
/// the modular group. For odd p (and p = 2 from lam = 5) both must have
/// the flat profile `(1, p+1, ..., p+1, 1)`; at p = 2, lam in {3, 4} the
/// special attainers are verified instead.
pub fn check_minimality_families(p: u64, lam: u32) -> Result<CheckReport> {
    require_prime(p)?;
    if lam < 2 {
        return Err(Error::invalid(format!(
            "family minimality needs lambda >= 2, got {lam}"
        )));
    }
    let params = format!("p={p},lambda={lam}");
    let order = p.checked_pow(lam).unwrap_or(u64::MAX);
    if order > ENUMERATION_CAP as u64 {
        return Ok(CheckReport::skipped(
            "minimal.families",
            params,
            format!("order {order} exceeds the enumeration cap {ENUMERATION_CAP}"),
        ));
    }
    let bound = minimal_bound(p, lam)?;

    if p == 2 && (lam == 3 || lam == 4) {
        let attainers: Vec<GroupTable> = if lam == 3 {
            vec![group::quaternion(8)?]
        } else {
            vec![
                group::quaternion(16)?,
                group::modular(2, 4)?,
                group::abelian_of_type(2, &Partition::new(vec![3, 1])?)?,
            ]
        };
        let mut witnesses = Vec::new();
        for g in &attainers {
            let total = total_subgroups(g)?;
            witnesses.push(Witness::new(g.name(), total, bound, total == bound));
        }
        return Ok(CheckReport::from_witnesses(
            "minimal.families",
            params,
            witnesses,
        ));
    }

    let mut groups = vec![group::abelian_of_type(
        p,
        &Partition::new(vec![lam - 1, 1])?,
    )?];
    if lam >= 3 {
        groups.push(group::modular(p, lam)?);
    }
    let mut witnesses = Vec::new();
    for g in &groups {
        let prof = lattice::profile(g, p)?;
        let flat = (1..lam as usize).all(|k| prof.counts[k] == p + 1)
            && prof.counts[0] == 1
            && prof.counts[lam as usize] == 1;
        let ok = flat && prof.total == bound;
        witnesses.push(Witness::new(
            g.name(),
            format!("s = {}, total = {}", fmt_counts(&prof.counts), prof.total),
            format!("s = (1, {}.., 1), total = {bound}", p + 1),
            ok,
        ));
    }
    Ok(CheckReport::from_witnesses(
        "minimal.families",
        params,
        witnesses,
    ))
}

/// The groups a family check sweeps at order `p^lam`: the full catalog at
/// lam = 3, otherwise the non-cyclic abelian types together with the
/// modular group and the exponent-p extension `M_p(1,1,1) x C_p^(lam-3)`.
fn non_cyclic_families(p: u64, lam: u32) -> Result<Vec<GroupTable>> {
    if lam == 3 && catalog::groups_of_order(p.pow(3)).is_ok() {
        let mut out = Vec::new();
        for entry in catalog::groups_of_order(p.pow(3))? {
            let g = entry.build()?;
            if g.exponent_witness() != g.order() {
                out.push(g);
            }
        }
        return Ok(out);
    }
    let mut out = Vec::new();
    for mu in Partition::all_of_weight(lam) {
        if mu.len() < 2 {
            continue; // cyclic
        }
        out.push(group::abelian_of_type(p, &mu)?);
    }
    if lam >= 3 {
        out.push(group::modular(p, lam)?);
        if p != 2 {
            let mut g = group::heisenberg(p)?;
            if lam > 3 {
                let tail = group::abelian_of_type(p, &Partition::new(vec![1; lam as usize - 3])?)?;
                g = group::direct_product(&g, &tail)?;
            }
            out.push(g);
        }
    }
    Ok(out)
}

/// Kulakoff's congruence: for non-cyclic p-groups with p odd,
/// `s_k = p+1 (mod p^2)` for every intermediate k.
pub fn check_kulakoff(p: u64, lam: u32) -> Result<CheckReport> {
    require_prime(p)?;
    if p == 2 {
        return Err(Error::invalid("the congruence requires p odd"));
    }
    if lam < 2 {
        return Err(Error::invalid("kulakoff needs lambda >= 2"));
    }
    let params = format!("p={p},lambda={lam}");
    let order = p.checked_pow(lam).unwrap_or(u64::MAX);
    if order > ENUMERATION_CAP as u64 {
        return Ok(CheckReport::skipped(
            "kulakoff",
            params,
            format!("order {order} exceeds the enumeration cap {ENUMERATION_CAP}"),
        ));
    }
    let mut witnesses = Vec::new();
    for g in non_cyclic_families(p, lam)? {
        let prof = lattice::profile(&g, p)?;
        let ok = (1..lam as usize).all(|k| prof.counts[k] % (p * p) == p + 1);
        witnesses.push(Witness::new(
            g.name(),
            format!("s = {}", fmt_counts(&prof.counts)),
            format!("s_k = {} (mod {})", p + 1, p * p),
            ok,
        ));
    }
    Ok(CheckReport::from_witnesses("kulakoff", params, witnesses))
}

/// Frobenius' congruence on one group: every subgroup count `s_mu` is
/// `1 (mod p)`.
pub fn check_frobenius(g: &GroupTable, p: u64) -> Result<CheckReport> {
    let prof = lattice::profile(g, p)?;
    let ok = prof.counts.iter().all(|&c| c % p == 1);
    let witness = Witness::new(
        g.name(),
        format!("s = {}", fmt_counts(&prof.counts)),
        format!("s_mu = 1 (mod {p})"),
        ok,
    );
    Ok(CheckReport::from_witnesses(
        "frobenius",
        format!("group={},p={p}", g.name()),
        vec![witness],
    ))
}

/// Frobenius' congruence over a full catalog order.
pub fn check_frobenius_catalog(order: u64) -> Result<CheckReport> {
    let (p, _) = group::prime_power_decomposition(order)
        .ok_or_else(|| Error::invalid(format!("{order} is not a prime power")))?;
    let mut witnesses = Vec::new();
    for entry in catalog::groups_of_order(order)? {
        let g = entry.build()?;
        let report = check_frobenius(&g, p)?;
        witnesses.extend(report.witnesses);
    }
    Ok(CheckReport::from_witnesses(
        "frobenius",
        format!("order={order}"),
        witnesses,
    ))
}

/// The abelian classification, checked analytically over every type of
/// weight `lam`: the flat count `s_k = p+1` for all intermediate k holds
/// exactly for the type `(lam-1, 1)`. Pure partition arithmetic, no
/// enumeration.
pub fn check_abelian_lemma(p: u64, lam: u32) -> Result<CheckReport> {
    require_prime(p)?;
    if p > 97 || lam < 2 || lam > 30 {
        return Err(Error::invalid(
            "abelian lemma check covers 2 <= lambda <= 30 and p <= 97",
        ));
    }
    let params = format!("p={p},lambda={lam}");
    let target = Partition::new(vec![lam - 1, 1])?;
    let flat_value = BigUint::from(p + 1);
    let mut qualifying = Vec::new();
    let mut witnesses = Vec::new();
    for mu in Partition::all_of_weight(lam) {
        let flat = (1..lam)
            .all(|k| match count_subgroups_of_order(&mu, k, p) {
                Ok(c) => c == flat_value,
                Err(_) => false,
            });
        if flat {
            qualifying.push(mu.to_string());
        }
        if flat != (mu == target) {
            witnesses.push(Witness::new(
                format!("type {mu}"),
                if flat { "flat" } else { "not flat" },
                if mu == target { "flat" } else { "not flat" },
                false,
            ));
        }
    }
    witnesses.push(Witness::new(
        "types with s_k = p+1 for all k",
        qualifying.join(", "),
        target.to_string(),
        qualifying == vec![target.to_string()],
    ));
    Ok(CheckReport::from_witnesses(
        "abelian_lemma",
        params,
        witnesses,
    ))
}

/// The dihedral counting identity: `D_2m` has `tau(m) + sigma(m)`
/// subgroups, for every m up to `m_max`.
pub fn check_dihedral_formula(m_max: u32) -> Result<CheckReport> {
    let params = format!("m_max={m_max}");
    let mut witnesses = Vec::new();
    let mut skipped = Vec::new();
    for m in 1..=m_max {
        if 2 * m > ENUMERATION_CAP {
            skipped.push(m.to_string());
            continue;
        }
        let g = group::dihedral(2 * m)?;
        let total = total_subgroups(&g)?;
        let (tau, sigma) = tau_sigma(m as u64)?;
        let expected = tau + sigma;
        witnesses.push(Witness::new(
            g.name(),
            total,
            format!("tau({m}) + sigma({m}) = {expected}"),
            BigUint::from(total) == expected,
        ));
    }
    let report = CheckReport::from_witnesses("dihedral", params, witnesses);
    Ok(if skipped.is_empty() {
        report
    } else {
        report.with_reason(format!("skipped m over the enumeration cap: {}", skipped.join(", ")))
    })
}

/// The quaternion counting identity `2^(lam-1) + lam - 1`, and the fact
/// that it stays at or above `3*lam - 1` from lam = 4 on, with equality
/// exactly at lam = 4.
pub fn check_quaternion_total(lam_max: u32) -> Result<CheckReport> {
    if lam_max < 3 {
        return Err(Error::invalid("quaternion groups start at lambda = 3"));
    }
    let params = format!("lam_max={lam_max}");
    let mut witnesses = Vec::new();
    let mut skipped = Vec::new();
    for lam in 3..=lam_max {
        let order = 1u64 << lam;
        let formula = (1u64 << (lam - 1)) + lam as u64 - 1;
        if order > ENUMERATION_CAP as u64 {
            skipped.push(format!("lambda={lam}"));
            continue;
        }
        let g = group::quaternion(order as u32)?;
        let total = total_subgroups(&g)?;
        witnesses.push(Witness::new(
            g.name(),
            total,
            format!("2^{} + {} = {formula}", lam - 1, lam as i64 - 1),
            total == formula,
        ));
        if lam >= 4 {
            let floor = 3 * lam as u64 - 1;
            let ok = formula >= floor && (formula == floor) == (lam == 4);
            witnesses.push(Witness::new(
                format!("{} vs 3*lambda-1", g.name()),
                formula,
                format!(">= {floor}, equal only at lambda=4"),
                ok,
            ));
        }
    }
    let report = CheckReport::from_witnesses("quaternion", params, witnesses);
    Ok(if skipped.is_empty() {
        report
    } else {
        report.with_reason(format!(
            "skipped over the enumeration cap: {}",
            skipped.join(", ")
        ))
    })
}

/// Subgroup-count maximality of the exponent-p extraspecial group at
/// order p^3: every non-elementary-abelian class has `s_k` at most that
/// of `M_p(1,1,1)`, for every k.
pub fn check_qu_maximality(p: u64) -> Result<CheckReport> {
    require_prime(p)?;
    if p == 2 {
        return Err(Error::invalid("the maximality statement requires p odd"));
    }
    let params = format!("p={p}");
    let order = p.pow(3);
    if order > ENUMERATION_CAP as u64 {
        return Ok(CheckReport::skipped(
            "qu",
            params,
            format!("order {order} exceeds the enumeration cap {ENUMERATION_CAP}"),
        ));
    }
    let reference = group::heisenberg(p)?;
    let ref_prof = lattice::profile(&reference, p)?;
    let mut witnesses = Vec::new();
    for entry in catalog::groups_of_order(order)? {
        let g = entry.build()?;
        let elementary_abelian = g.is_abelian() && g.exponent_witness() as u64 == p;
        if elementary_abelian {
            continue; // excluded by the theorem's hypothesis
        }
        let prof = lattice::profile(&g, p)?;
        let ok = prof
            .counts
            .iter()
            .zip(&ref_prof.counts)
            .all(|(c, r)| c <= r);
        witnesses.push(Witness::new(
            entry.label(),
            format!("s = {}", fmt_counts(&prof.counts)),
            format!("s_k <= {} pointwise", fmt_counts(&ref_prof.counts)),
            ok,
        ));
    }
    Ok(CheckReport::from_witnesses("qu", params, witnesses))
}

/// Split extensions `C_{p^(lam-1)} x| C_p` have the flat profile with
/// total `(p+1)(lam-1) + 2`, for every action of order dividing p. At
/// p = 2 only the modular action qualifies, and the check is restricted
/// accordingly.
pub fn check_lindenberg_split(p: u64, lam: u32) -> Result<CheckReport> {
    require_prime(p)?;
    if lam < 3 {
        return Err(Error::invalid("split-extension check needs lambda >= 3"));
    }
    let params = format!("p={p},lambda={lam}");
    let order = p.checked_pow(lam).unwrap_or(u64::MAX);
    if order > ENUMERATION_CAP as u64 {
        return Ok(CheckReport::skipped(
            "lindenberg",
            params,
            format!("order {order} exceeds the enumeration cap {ENUMERATION_CAP}"),
        ));
    }
    if p == 2 && lam == 3 {
        return Ok(CheckReport::skipped(
            "lindenberg",
            params,
            "at p=2 the only admissible action is r = 1 + 2^(lambda-2), which needs lambda >= 4",
        ));
    }
    let m = p.pow(lam - 1);
    let actions: Vec<u64> = if p == 2 {
        vec![1 + (1 << (lam - 2))]
    } else {
        (0..p).map(|t| (1 + t * p.pow(lam - 2)) % m).collect()
    };
    let expected_total = (p + 1) * (lam as u64 - 1) + 2;
    let mut witnesses = Vec::new();
    for r in actions {
        let g = group::semidirect_cyclic(m as u32, p as u32, r)?;
        let prof = lattice::profile(&g, p)?;
        let ok = (1..lam as usize).all(|j| prof.counts[j] == p + 1)
            && prof.total == expected_total;
        witnesses.push(Witness::new(
            format!("C{m}:C{p} with r={r}"),
            format!("s = {}, total = {}", fmt_counts(&prof.counts), prof.total),
            format!("s_j = {}, total = {expected_total}", p + 1),
            ok,
        ));
    }
    let report = CheckReport::from_witnesses("lindenberg", params, witnesses);
    Ok(if p == 2 {
        report.with_reason("p=2 restricted to the modular action r = 1 + 2^(lambda-2)")
    } else {
        report
    })
}

/// The structural facts the classification arguments lean on, over one
/// catalog order: modular groups are non-Dedekind CO-groups, quaternion
/// groups have a unique involution, `Q16` modulo its centre is `D8`, the
/// nonabelian classes with a cyclic maximal subgroup are exactly the
/// known ones, and (at order 16) `Q8 x C2^2` is Dedekind with more than
/// p+1 subgroups of order 4.
pub fn check_structural_proof_steps(order: u64) -> Result<CheckReport> {
    if ![8, 16, 27].contains(&order) {
        return Err(Error::invalid(format!(
            "structural checks are catalogued for orders 8, 16, 27; got {order}"
        )));
    }
    let params = format!("order={order}");
    let entries = catalog::groups_of_order(order)?;
    let mut witnesses = Vec::new();

    for entry in &entries {
        if !entry.label().starts_with('M') {
            continue;
        }
        let g = entry.build()?;
        let co = lattice::is_co_group(&g)?;
        let dedekind = lattice::is_dedekind(&g)?;
        witnesses.push(Witness::new(
            entry.label(),
            format!("CO-group: {co}, Dedekind: {dedekind}"),
            "CO-group: true, Dedekind: false",
            co && !dedekind,
        ));
    }

    for entry in &entries {
        if !entry.label().starts_with('Q') || entry.label().contains('x') {
            continue;
        }
        let g = entry.build()?;
        let involutions = g.count_involutions();
        witnesses.push(Witness::new(
            entry.label(),
            involutions,
            "exactly 1 involution",
            involutions == 1,
        ));
    }

    if order == 16 {
        let q16 = group::quaternion(16)?;
        let quot = group::quotient(&q16, &q16.center())?;
        let d8 = group::dihedral(8)?;
        let ok = iso::are_isomorphic(&quot, &d8)?;
        witnesses.push(Witness::new(
            "Q16/Z(Q16)",
            if ok { "isomorphic to D8" } else { "not isomorphic to D8" },
            "isomorphic to D8",
            ok,
        ));

        let g0 = group::direct_product(
            &group::quaternion(8)?,
            &group::abelian_of_type(2, &Partition::new(vec![1, 1])?)?,
        )?;
        let dedekind = lattice::is_dedekind(&g0)?;
        witnesses.push(Witness::new("Q8xC2xC2", dedekind, "Dedekind: true", dedekind));
        let prof = lattice::profile(&g0, 2)?;
        let s2 = prof.counts[2];
        witnesses.push(Witness::new(
            "Q8xC2xC2 order-4 subgroups",
            s2,
            "> 3 (enumeration is authoritative; the source text states 7)",
            s2 > 3,
        ));
    }

    let expected_cyclic_maximal: Vec<&str> = match order {
        8 => vec!["D8", "Q8"],
        16 => vec!["D16", "M16", "Q16", "SD16"],
        _ => vec!["M27"],
    };
    let mut observed: Vec<String> = Vec::new();
    for entry in &entries {
        let g = entry.build()?;
        if !g.is_abelian() && lattice::has_cyclic_maximal_subgroup(&g)? {
            observed.push(entry.label().to_string());
        }
    }
    observed.sort_unstable();
    witnesses.push(Witness::new(
        "nonabelian classes with a cyclic maximal subgroup",
        observed.join(", "),
        expected_cyclic_maximal.join(", "),
        observed == expected_cyclic_maximal,
    ));

    Ok(CheckReport::from_witnesses("structural", params, witnesses))
}

/// Analytic subgroup counts against brute-force lattice enumeration, over
/// every abelian type of order `p^lam <= max_order`. Elementary abelian
/// types above order 64 are skipped (their subspace counts blow up the
/// lattice caps first).
pub fn check_butler(p: u64, max_order: u64) -> Result<CheckReport> {
    require_prime(p)?;
    if max_order < p {
        return Err(Error::invalid(format!(
            "max_order {max_order} admits no nontrivial p-group at p={p}"
        )));
    }
    let params = format!("p={p},max_order={max_order}");
    let mut witnesses = Vec::new();
    let mut skipped = Vec::new();
    let mut lam = 1u32;
    while p.pow(lam) <= max_order.min(ENUMERATION_CAP as u64) {
        for mu in Partition::all_of_weight(lam) {
            let order = p.pow(lam);
            let elementary = lam >= 2 && mu.parts().iter().all(|&x| x == 1);
            if elementary && order > 64 {
                skipped.push(format!("type {mu} at order {order}"));
                continue;
            }
            let g = group::abelian_of_type(p, &mu)?;
            let prof = lattice::profile(&g, p)?;
            let analytic: Vec<BigUint> = (0..=lam)
                .map(|k| count_subgroups_of_order(&mu, k, p))
                .collect::<Result<_>>()?;
            let ok = prof
                .counts
                .iter()
                .zip(&analytic)
                .all(|(c, a)| BigUint::from(*c) == *a)
                && analytic.iter().sum::<BigUint>() == BigUint::from(prof.total);
            let analytic_str = analytic
                .iter()
                .map(|a| a.to_string())
                .collect::<Vec<_>>()
                .join(", ");
            witnesses.push(Witness::new(
                g.name(),
                format!("enumerated s = {}", fmt_counts(&prof.counts)),
                format!("analytic s = [{analytic_str}]"),
                ok,
            ));
        }
        lam += 1;
    }
    let report = CheckReport::from_witnesses("butler", params, witnesses);
    Ok(if skipped.is_empty() {
        report
    } else {
        report.with_reason(format!("skipped: {}", skipped.join("; ")))
    })
}

/// The full default verification suite, merged deterministically by check
/// name and parameters. Runs the independent checks in parallel when the
/// `parallel` feature is enabled.
pub fn all_reports() -> Result<Vec<CheckReport>> {
    type Job = Box<dyn Fn() -> Result<CheckReport> + Send + Sync>;
    let mut jobs: Vec<Job> = Vec::new();
    for order in [8u64, 16, 27] {
        jobs.push(Box::new(move || check_minimality_exhaustive(order)));
        jobs.push(Box::new(move || check_frobenius_catalog(order)));
        jobs.push(Box::new(move || check_structural_proof_steps(order)));
    }
    for (p, lam) in [(3u64, 3u32), (3, 4), (5, 3), (2, 5), (2, 6)] {
        jobs.push(Box::new(move || check_minimality_families(p, lam)));
    }
    for (p, max_order) in [(2u64, 64u64), (3, 128)] {
        jobs.push(Box::new(move || check_butler(p, max_order)));
    }
    for (p, lam) in [(3u64, 3u32), (3, 4), (5, 3)] {
        jobs.push(Box::new(move || check_kulakoff(p, lam)));
        jobs.push(Box::new(move || check_lindenberg_split(p, lam)));
    }
    for (p, lam) in [(3u64, 5u32), (2, 6)] {
        jobs.push(Box::new(move || check_abelian_lemma(p, lam)));
    }
    jobs.push(Box::new(|| check_dihedral_formula(50)));
    jobs.push(Box::new(|| check_quaternion_total(7)));
    for p in [3u64, 5] {
        jobs.push(Box::new(move || check_qu_maximality(p)));
    }

    let reports: Result<Vec<CheckReport>> = {
        #[cfg(feature = "parallel")]
        {
            jobs.par_iter().map(|job| job()).collect()
        }
        #[cfg(not(feature = "parallel"))]
        {
            jobs.iter().map(|job| job()).collect()
        }
    };
    let mut reports = reports?;
    reports.sort_by(|a, b| (&a.check, &a.params).cmp(&(&b.check, &b.params)));
    Ok(reports)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_bound_values() {
        assert_eq!(minimal_bound(3, 3).unwrap(), 10);
        assert_eq!(minimal_bound(3, 4).unwrap(), 14);
        assert_eq!(minimal_bound(5, 3).unwrap(), 14);
        assert_eq!(minimal_bound(2, 2).unwrap(), 5);
        assert_eq!(minimal_bound(2, 3).unwrap(), 6);
        assert_eq!(minimal_bound(2, 4).unwrap(), 11);
        assert_eq!(minimal_bound(2, 5).unwrap(), 14);
        assert_eq!(minimal_bound(2, 6).unwrap(), 17);
        assert!(minimal_bound(2, 1).is_err());
        assert!(minimal_bound(6, 3).is_err());
    }

    #[test]
    fn minimal_bound_is_monotone_in_lambda() {
        for p in [2u64, 3, 5] {
            let start = if p == 2 { 2 } else { 2 };
            let mut prev = minimal_bound(p, start).unwrap();
            for lam in start + 1..=10 {
                let next = minimal_bound(p, lam).unwrap();
                assert!(next > prev, "p={p} lam={lam}");
                prev = next;
            }
        }
    }

    #[test]
    fn exhaustive_minimality_at_order_8() {
        let report = check_minimality_exhaustive(8).unwrap();
        assert_eq!(report.status, CheckStatus::Pass);
        let attainer = report
            .witnesses
            .iter()
            .find(|w| w.group == "equality attainers")
            .unwrap();
        assert_eq!(attainer.observed, "Q8");
        assert!(check_minimality_exhaustive(32).is_err());
    }

    #[test]
    fn family_minimality_at_3_3() {
        let report = check_minimality_families(3, 3).unwrap();
        assert_eq!(report.status, CheckStatus::Pass);
        assert_eq!(report.witnesses.len(), 2);
    }

    #[test]
    fn family_minimality_skips_above_caps() {
        let report = check_minimality_families(3, 6).unwrap();
        assert_eq!(report.status, CheckStatus::Skipped);
    }

    #[test]
    fn kulakoff_rejects_p_2() {
        assert!(check_kulakoff(2, 4).is_err());
    }

    #[test]
    fn kulakoff_at_3_3_passes() {
        let report = check_kulakoff(3, 3).unwrap();
        assert_eq!(report.status, CheckStatus::Pass);
        assert_eq!(report.witnesses.len(), 4); // non-cyclic order-27 classes
    }

    #[test]
    fn frobenius_on_cyclic_group() {
        let g = group::cyclic(16).unwrap();
        let report = check_frobenius(&g, 2).unwrap();
        assert_eq!(report.status, CheckStatus::Pass);
    }

    #[test]
    fn abelian_lemma_small_cases() {
        let report = check_abelian_lemma(3, 5).unwrap();
        assert_eq!(report.status, CheckStatus::Pass);
        let summary = report.witnesses.last().unwrap();
        assert_eq!(summary.observed, "(4,1)");

        let degenerate = check_abelian_lemma(3, 2).unwrap();
        assert_eq!(degenerate.status, CheckStatus::Pass);

        assert!(check_abelian_lemma(3, 1).is_err());
        assert!(check_abelian_lemma(101, 5).is_err());
    }

    #[test]
    fn abelian_lemma_disqualifies_wide_types() {
        // type (4,2) at p=3 must fail flatness at the top order
        let mu = Partition::new(vec![4, 2]).unwrap();
        let c4 = count_subgroups_of_order(&mu, 4, 3).unwrap();
        assert!(c4 >= BigUint::from(2u64 * 3), "s_4 = {c4} should be >= 2p");
        let report = check_abelian_lemma(3, 6).unwrap();
        assert_eq!(report.status, CheckStatus::Pass);
    }

    #[test]
    fn dihedral_formula_small_range() {
        let report = check_dihedral_formula(8).unwrap();
        assert_eq!(report.status, CheckStatus::Pass);
        let d8 = report.witnesses.iter().find(|w| w.group == "D8").unwrap();
        assert_eq!(d8.observed, "10");
        let d2 = report.witnesses.iter().find(|w| w.group == "D2").unwrap();
        assert_eq!(d2.observed, "2");
    }

    #[test]
    fn quaternion_totals_small_range() {
        let report = check_quaternion_total(5).unwrap();
        assert_eq!(report.status, CheckStatus::Pass);
        let q8 = report.witnesses.iter().find(|w| w.group == "Q8").unwrap();
        assert_eq!(q8.observed, "6");
        let q32 = report.witnesses.iter().find(|w| w.group == "Q32").unwrap();
        assert_eq!(q32.observed, "20");
        assert!(check_quaternion_total(2).is_err());
    }

    #[test]
    fn qu_maximality_rejects_p_2_and_skips_p_7() {
        assert!(check_qu_maximality(2).is_err());
        let report = check_qu_maximality(7).unwrap();
        assert_eq!(report.status, CheckStatus::Skipped);
    }

    #[test]
    fn lindenberg_at_3_3() {
        let report = check_lindenberg_split(3, 3).unwrap();
        assert_eq!(report.status, CheckStatus::Pass);
        assert_eq!(report.witnesses.len(), 3); // r = 1, 4, 7
    }

    #[test]
    fn lindenberg_p2_is_restricted() {
        let report = check_lindenberg_split(2, 5).unwrap();
        assert_eq!(report.status, CheckStatus::Pass);
        assert_eq!(report.witnesses.len(), 1);
        assert!(report.reason.is_some());
        let skipped = check_lindenberg_split(2, 3).unwrap();
        assert_eq!(skipped.status, CheckStatus::Skipped);
    }

    #[test]
    fn structural_steps_pass_for_all_three_orders() {
        for order in [8u64, 16, 27] {
            let report = check_structural_proof_steps(order).unwrap();
            assert_eq!(report.status, CheckStatus::Pass, "order {order}");
        }
    }

    #[test]
    fn butler_equivalence_at_small_orders() {
        let report = check_butler(2, 16).unwrap();
        assert_eq!(report.status, CheckStatus::Pass);
        // one witness per type: p(1) + p(2) + p(3) + p(4) = 1 + 2 + 3 + 5
        assert_eq!(report.witnesses.len(), 11);
    }

    #[test]
    fn reports_are_deterministic() {
        let a = check_kulakoff(3, 3).unwrap();
        let b = check_kulakoff(3, 3).unwrap();
        assert_eq!(a, b);
        let a = check_structural_proof_steps(16).unwrap();
        let b = check_structural_proof_steps(16).unwrap();
        assert_eq!(a, b);
    }
}
