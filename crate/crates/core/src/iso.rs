//! Isomorphism testing for small groups: invariant fingerprints to refute
//! quickly, generator-image backtracking to confirm.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::group::GroupTable;
use crate::lattice;

/// Orders up to this bound get a subgroup census in their fingerprint.
const FINGERPRINT_LATTICE_CAP: u32 = 64;

/// Fingerprints are available up to this order.
pub const FINGERPRINT_CAP: u32 = 256;

/// Full isomorphism decisions are available up to this order.
pub const ISO_CAP: u32 = 64;

/// Cheap isomorphism invariants. Equal fingerprints are necessary for
/// isomorphism; unequal fingerprints prove non-isomorphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupFingerprint {
    pub order: u32,
    pub element_orders: Vec<u32>,
    pub center_size: u32,
    pub abelian: bool,
    /// (subgroup order, count) pairs; present when the order is within
    /// [`FINGERPRINT_LATTICE_CAP`].
    pub subgroup_counts: Option<Vec<(u32, u64)>>,
}

pub fn fingerprint(g: &GroupTable) -> Result<GroupFingerprint> {
    if g.order() > FINGERPRINT_CAP {
        return Err(Error::limit(format!(
            "fingerprints are capped at order {FINGERPRINT_CAP}, got {}",
            g.order()
        )));
    }
    let mut element_orders: Vec<u32> = g
        .elements()
        .map(|x| g.element_order(x).expect("in range"))
        .collect();
    element_orders.sort_unstable();
    let subgroup_counts = if g.order() <= FINGERPRINT_LATTICE_CAP {
        let mut by_order: BTreeMap<u32, u64> = BTreeMap::new();
        for s in lattice::enumerate_subgroups(g)? {
            *by_order.entry(s.size()).or_insert(0) += 1;
        }
        Some(by_order.into_iter().collect())
    } else {
        None
    };
    Ok(GroupFingerprint {
        order: g.order(),
        element_orders,
        center_size: g.center().size(),
        abelian: g.is_abelian(),
        subgroup_counts,
    })
}

/// Greedy minimal generating set: repeatedly add the element whose join
/// with the current span is largest, ties broken by smallest index.
pub fn minimal_generating_set(g: &GroupTable) -> Vec<u16> {
    let mut gens: Vec<u16> = Vec::new();
    let mut span = lattice::SubgroupSet::trivial(g.order());
    while span.size() < g.order() {
        let mut best: Option<(u32, u16, lattice::SubgroupSet)> = None;
        for x in g.elements() {
            if span.contains(x) {
                continue;
            }
            let mut candidate = gens.clone();
            candidate.push(x);
            let grown = lattice::generated_subgroup(g, &candidate);
            if best.as_ref().is_none_or(|(s, _, _)| grown.size() > *s) {
                best = Some((grown.size(), x, grown));
            }
        }
        let (_, x, grown) = best.expect("span is proper, so some element extends it");
        gens.push(x);
        span = grown;
    }
    gens
}

/// Attempts to extend `gens[i] -> images[i]` to a homomorphism on the
/// subgroup generated by the mapped prefix. Returns false on any closure
/// or injectivity conflict.
fn extends_consistently(g: &GroupTable, h: &GroupTable, gens: &[u16], images: &[u16]) -> bool {
    let n = g.order() as usize;
    const UNSET: u16 = u16::MAX;
    let mut map = vec![UNSET; n];
    let mut used = vec![false; h.order() as usize];
    map[0] = 0;
    used[0] = true;
    let mut known = vec![0u16];

    for (&s, &fs) in gens.iter().zip(images) {
        if g.element_order(s).expect("in range") != h.element_order(fs).expect("in range") {
            return false;
        }
    }

    let mut i = 0;
    while i < known.len() {
        let a = known[i];
        let fa = map[a as usize];
        for (&s, &fs) in gens.iter().zip(images) {
            let b = g.mul(a, s);
            let fb = h.mul(fa, fs);
            match map[b as usize] {
                UNSET => {
                    if used[fb as usize] {
                        return false;
                    }
                    map[b as usize] = fb;
                    used[fb as usize] = true;
                    known.push(b);
                }
                existing => {
                    if existing != fb {
                        return false;
                    }
                }
            }
        }
        i += 1;
    }
    true
}

fn centralizer_sizes(g: &GroupTable) -> Vec<u32> {
    g.elements()
        .map(|x| {
            g.elements()
                .filter(|&y| g.mul(x, y) == g.mul(y, x))
                .count() as u32
        })
        .collect()
}

/// Decides isomorphism for groups of order at most [`ISO_CAP`]. Groups of
/// different order are simply not isomorphic; fingerprints filter most
/// non-isomorphic pairs before the backtracking search runs.
pub fn are_isomorphic(g: &GroupTable, h: &GroupTable) -> Result<bool> {
    if g.order() != h.order() {
        return Ok(false);
    }
    if g.order() > ISO_CAP {
        return Err(Error::limit(format!(
            "isomorphism testing is capped at order {ISO_CAP}, got {}",
            g.order()
        )));
    }
    if fingerprint(g)? != fingerprint(h)? {
        return Ok(false);
    }
    let gens = minimal_generating_set(g);
    if gens.is_empty() {
        return Ok(true); // both trivial
    }
    let g_orders: Vec<u32> = g
        .elements()
        .map(|x| g.element_order(x).expect("in range"))
        .collect();
    let h_orders: Vec<u32> = h
        .elements()
        .map(|x| h.element_order(x).expect("in range"))
        .collect();
    let g_cent = centralizer_sizes(g);
    let h_cent = centralizer_sizes(h);

    fn search(
        g: &GroupTable,
        h: &GroupTable,
        gens: &[u16],
        images: &mut Vec<u16>,
        g_orders: &[u32],
        h_orders: &[u32],
        g_cent: &[u32],
        h_cent: &[u32],
    ) -> bool {
        if images.len() == gens.len() {
            return true;
        }
        let t = images.len();
        let s = gens[t];
        for y in h.elements() {
            if h_orders[y as usize] != g_orders[s as usize]
                || h_cent[y as usize] != g_cent[s as usize]
            {
                continue;
            }
            images.push(y);
            if extends_consistently(g, h, &gens[..=t], images)
                && search(g, h, gens, images, g_orders, h_orders, g_cent, h_cent)
            {
                return true;
            }
            images.pop();
        }
        false
    }

    let mut images = Vec::new();
    Ok(search(
        g, h, &gens, &mut images, &g_orders, &h_orders, &g_cent, &h_cent,
    ))
}
