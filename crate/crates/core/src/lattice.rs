//! Subgroup-lattice enumeration and the structural predicates built on it.
//!
//! Enumeration is seeded join-closure: every subgroup of a finite group is
//! a join of cyclic subgroups, so starting from the cyclic subgroups and
//! repeatedly closing the union of a known subgroup with a cyclic one
//! reaches everything. Joins within a round are independent, which is
//! where the data-parallel path (feature `parallel`, on by default) comes
//! in; results are merged through a set, so the final list is identical
//! for any worker count.

use std::cmp::Ordering;
use std::collections::{HashMap, HashSet};

use crate::error::{Error, Result};
use crate::group::GroupTable;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// General enumeration cap on the group order.
pub const ENUMERATION_CAP: u32 = 256;

/// Tighter cap for elementary abelian 2-groups, where subspace counts
/// explode.
pub const ELEMENTARY_ABELIAN_2_CAP: u32 = 64;

/// Hard limit on the number of subgroups an enumeration may produce.
pub const SUBGROUP_COUNT_CAP: usize = 1 << 22;

/// A subgroup as a canonical bitset over element indices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SubgroupSet {
    universe: u32,
    words: Box<[u64]>,
    size: u32,
}

impl SubgroupSet {
    pub fn from_members(universe: u32, members: impl Iterator<Item = u16>) -> Self {
        let mut words = vec![0u64; (universe as usize + 63) / 64].into_boxed_slice();
        let mut size = 0;
        for m in members {
            debug_assert!((m as u32) < universe);
            let w = m as usize / 64;
            let bit = 1u64 << (m as usize % 64);
            if words[w] & bit == 0 {
                words[w] |= bit;
                size += 1;
            }
        }
        SubgroupSet {
            universe,
            words,
            size,
        }
    }

    pub fn trivial(universe: u32) -> Self {
        Self::from_members(universe, std::iter::once(0))
    }

    pub fn universe(&self) -> u32 {
        self.universe
    }

    pub fn size(&self) -> u32 {
        self.size
    }

    #[inline]
    pub fn contains(&self, x: u16) -> bool {
        self.words[x as usize / 64] >> (x as usize % 64) & 1 == 1
    }

    fn insert(&mut self, x: u16) -> bool {
        let w = x as usize / 64;
        let bit = 1u64 << (x as usize % 64);
        if self.words[w] & bit == 0 {
            self.words[w] |= bit;
            self.size += 1;
            true
        } else {
            false
        }
    }

    pub fn is_subset_of(&self, other: &SubgroupSet) -> bool {
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(a, b)| a & !b == 0)
    }

    /// Member indices in ascending order.
    pub fn members(&self) -> impl Iterator<Item = u16> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let bit = w.trailing_zeros();
                    w &= w - 1;
                    Some((wi * 64) as u16 + bit as u16)
                }
            })
        })
    }
}

/// Canonical order: by size, then by the smallest element at which the
/// member lists differ.
impl Ord for SubgroupSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size
            .cmp(&other.size)
            .then_with(|| {
                for (a, b) in self.words.iter().zip(other.words.iter()) {
                    if a != b {
                        let low = (a ^ b).trailing_zeros();
                        return if a >> low & 1 == 1 {
                            Ordering::Less
                        } else {
                            Ordering::Greater
                        };
                    }
                }
                Ordering::Equal
            })
            .then_with(|| self.universe.cmp(&other.universe))
    }
}

impl PartialOrd for SubgroupSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl std::fmt::Debug for SubgroupSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (i, m) in self.members().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{m}")?;
        }
        write!(f, "}}")
    }
}

/// Subgroup counts of a p-group, indexed by k with subgroup order p^k.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgroupProfile {
    pub prime: u64,
    pub counts: Vec<u64>,
    pub total: u64,
}

/// True when `set` contains the identity and is closed under the group
/// operation (which suffices in a finite group).
pub fn is_subgroup(g: &GroupTable, set: &SubgroupSet) -> bool {
    if set.universe() != g.order() || !set.contains(0) {
        return false;
    }
    let members: Vec<u16> = set.members().collect();
    members
        .iter()
        .all(|&a| members.iter().all(|&b| set.contains(g.mul(a, b))))
}

/// Closure of `base` (already a subgroup) together with `extra` under the
/// group operation.
fn closure_extend(g: &GroupTable, base: &SubgroupSet, extra: &[u16]) -> SubgroupSet {
    let mut bits = base.clone();
    let mut members: Vec<u16> = base.members().collect();
    let first_new = members.len();
    for &x in extra {
        if bits.insert(x) {
            members.push(x);
        }
    }
    let mut i = first_new;
    while i < members.len() {
        let x = members[i];
        let mut j = 0;
        while j < members.len() {
            let m = members[j];
            let p = g.mul(x, m);
            if bits.insert(p) {
                members.push(p);
            }
            let q = g.mul(m, x);
            if bits.insert(q) {
                members.push(q);
            }
            j += 1;
        }
        i += 1;
    }
    bits
}

/// The subgroup generated by a set of elements.
pub fn generated_subgroup(g: &GroupTable, generators: &[u16]) -> SubgroupSet {
    closure_extend(g, &SubgroupSet::trivial(g.order()), generators)
}

/// Distinct cyclic subgroups, each paired with one generating element.
fn cyclic_subgroups(g: &GroupTable) -> Vec<(SubgroupSet, u16)> {
    let mut seen: HashSet<SubgroupSet> = HashSet::new();
    let mut out = Vec::new();
    for x in g.elements() {
        let sub = generated_subgroup(g, &[x]);
        if seen.insert(sub.clone()) {
            out.push((sub, x));
        }
    }
    out
}

fn enumeration_caps(g: &GroupTable) -> Result<()> {
    if g.order() > ENUMERATION_CAP {
        return Err(Error::limit(format!(
            "subgroup enumeration is capped at order {ENUMERATION_CAP}, got {}",
            g.order()
        )));
    }
    let elementary_abelian_2 = g.elements().all(|x| g.mul(x, x) == 0);
    if elementary_abelian_2 && g.order() > ELEMENTARY_ABELIAN_2_CAP {
        return Err(Error::limit(format!(
            "elementary abelian 2-groups are capped at order {ELEMENTARY_ABELIAN_2_CAP}, got {}",
            g.order()
        )));
    }
    Ok(())
}

fn enumerate_impl(g: &GroupTable, parallel: bool) -> Result<Vec<SubgroupSet>> {
    enumeration_caps(g)?;
    let cyclic = cyclic_subgroups(g);
    let mut known: HashSet<SubgroupSet> = cyclic.iter().map(|(s, _)| s.clone()).collect();
    let mut frontier: Vec<SubgroupSet> = known.iter().cloned().collect();
    frontier.sort_unstable();

    while !frontier.is_empty() {
        let join_row = |h: &SubgroupSet| -> Vec<SubgroupSet> {
            cyclic
                .iter()
                .filter(|(z, _)| !z.is_subset_of(h))
                .map(|(_, gen)| closure_extend(g, h, &[*gen]))
                .collect()
        };

        let candidates: Vec<SubgroupSet> = {
            #[cfg(feature = "parallel")]
            {
                if parallel {
                    frontier.par_iter().flat_map_iter(join_row).collect()
                } else {
                    frontier.iter().flat_map(join_row).collect()
                }
            }
            #[cfg(not(feature = "parallel"))]
            {
                let _ = parallel;
                frontier.iter().flat_map(join_row).collect()
            }
        };

        let mut next = Vec::new();
        for cand in candidates {
            if known.insert(cand.clone()) {
                next.push(cand);
            }
        }
        if known.len() > SUBGROUP_COUNT_CAP {
            return Err(Error::limit(format!(
                "more than {SUBGROUP_COUNT_CAP} subgroups in {}",
                g.name()
            )));
        }
        next.sort_unstable();
        frontier = next;
    }

    let mut out: Vec<SubgroupSet> = known.into_iter().collect();
    out.sort_unstable();
    Ok(out)
}

/// Every subgroup of `g`, duplicate-free, sorted by size and then by
/// canonical bitset order. Uses the parallel path when the crate is built
/// with the `parallel` feature.
pub fn enumerate_subgroups(g: &GroupTable) -> Result<Vec<SubgroupSet>> {
    enumerate_impl(g, cfg!(feature = "parallel"))
}

/// Sequential enumeration; same output as [`enumerate_subgroups`].
pub fn enumerate_subgroups_seq(g: &GroupTable) -> Result<Vec<SubgroupSet>> {
    enumerate_impl(g, false)
}

/// Order-wise subgroup counts of a p-group of order `p^lambda`.
pub fn profile(g: &GroupTable, p: u64) -> Result<SubgroupProfile> {
    if !crate::counting::is_prime(p) {
        return Err(Error::invalid(format!("{p} is not prime")));
    }
    let mut lambda = 0u32;
    let mut m = g.order() as u64;
    while m % p == 0 {
        m /= p;
        lambda += 1;
    }
    if m != 1 {
        return Err(Error::invalid(format!(
            "order {} of {} is not a power of {p}",
            g.order(),
            g.name()
        )));
    }
    let subs = enumerate_subgroups(g)?;
    let mut counts = vec![0u64; lambda as usize + 1];
    for s in &subs {
        let mut k = 0;
        let mut size = s.size() as u64;
        while size > 1 {
            debug_assert_eq!(size % p, 0);
            size /= p;
            k += 1;
        }
        counts[k] += 1;
    }
    Ok(SubgroupProfile {
        prime: p,
        total: subs.len() as u64,
        counts,
    })
}

/// Conjugate subgroup `x H x^-1`.
pub fn conjugate_subgroup(g: &GroupTable, h: &SubgroupSet, x: u16) -> SubgroupSet {
    let xi = g.inv(x);
    SubgroupSet::from_members(g.order(), h.members().map(|m| g.mul(g.mul(x, m), xi)))
}

/// True iff `x H x^-1 = H` for every x. Errors when `h` is not a subgroup.
pub fn is_normal(g: &GroupTable, h: &SubgroupSet) -> Result<bool> {
    if !is_subgroup(g, h) {
        return Err(Error::invalid("normality test requires a subgroup"));
    }
    let members: Vec<u16> = h.members().collect();
    Ok(g.elements().all(|x| {
        let xi = g.inv(x);
        members.iter().all(|&m| h.contains(g.mul(g.mul(x, m), xi)))
    }))
}

/// Partition of the full subgroup list into conjugacy classes
/// `H ~ x H x^-1`. Classes appear in the canonical order of their first
/// member; each class is sorted.
pub fn conjugacy_classes_of_subgroups(g: &GroupTable) -> Result<Vec<Vec<SubgroupSet>>> {
    let subs = enumerate_subgroups(g)?;
    let index: HashMap<&SubgroupSet, usize> =
        subs.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let mut assigned = vec![false; subs.len()];
    let mut classes = Vec::new();
    for i in 0..subs.len() {
        if assigned[i] {
            continue;
        }
        let mut orbit: Vec<usize> = Vec::new();
        for x in g.elements() {
            let conj = conjugate_subgroup(g, &subs[i], x);
            let j = *index.get(&conj).expect("conjugates are subgroups");
            if !assigned[j] {
                assigned[j] = true;
                orbit.push(j);
            }
        }
        orbit.sort_unstable();
        classes.push(orbit.into_iter().map(|j| subs[j].clone()).collect());
    }
    Ok(classes)
}

/// True iff for every subgroup order, the non-normal subgroups of that
/// order form at most one conjugacy class. Vacuously true for Dedekind
/// groups.
pub fn is_co_group(g: &GroupTable) -> Result<bool> {
    let classes = conjugacy_classes_of_subgroups(g)?;
    let mut nonnormal_class_orders: HashSet<u32> = HashSet::new();
    for class in &classes {
        if class.len() > 1 {
            let order = class[0].size();
            if !nonnormal_class_orders.insert(order) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// True iff every subgroup is normal.
pub fn is_dedekind(g: &GroupTable) -> Result<bool> {
    let classes = conjugacy_classes_of_subgroups(g)?;
    Ok(classes.iter().all(|c| c.len() == 1))
}

/// True iff some subgroup of index p is cyclic. Since a cyclic subgroup of
/// order |G|/p in a p-group is automatically maximal, this is equivalent
/// to the existence of an element of order |G|/p.
pub fn has_cyclic_maximal_subgroup(g: &GroupTable) -> Result<bool> {
    let Some((p, _)) = g.prime_power() else {
        return Err(Error::invalid(format!(
            "{} does not have prime-power order",
            g.name()
        )));
    };
    let target = g.order() as u64 / p;
    Ok(g
        .elements()
        .any(|x| g.element_order(x).expect("in range") as u64 == target))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group;
    use crate::partition::Partition;

    /// Independent oracle: enumerate subgroups by testing every subset
    /// containing the identity for closure. Only viable for tiny groups.
    fn naive_subgroups(g: &GroupTable) -> Vec<SubgroupSet> {
        let n = g.order() as usize;
        assert!(n <= 16, "oracle is exponential in the order");
        let mut out = Vec::new();
        for mask in 0u32..(1 << n) {
            if mask & 1 == 0 {
                continue;
            }
            let members: Vec<u16> = (0..n as u16).filter(|&i| mask >> i & 1 == 1).collect();
            let closed = members
                .iter()
                .all(|&a| members.iter().all(|&b| mask >> g.mul(a, b) & 1 == 1));
            if closed {
                out.push(SubgroupSet::from_members(g.order(), members.into_iter()));
            }
        }
        out.sort_unstable();
        out
    }

    #[test]
    fn join_closure_matches_naive_oracle_up_to_order_16() {
        let groups = vec![
            group::cyclic(1).unwrap(),
            group::cyclic(8).unwrap(),
            group::cyclic(12).unwrap(),
            group::abelian_of_type(2, &Partition::new(vec![2, 1]).unwrap()).unwrap(),
            group::abelian_of_type(2, &Partition::new(vec![1, 1, 1]).unwrap()).unwrap(),
            group::dihedral(8).unwrap(),
            group::dihedral(12).unwrap(),
            group::quaternion(8).unwrap(),
            group::quaternion(16).unwrap(),
            group::modular(2, 4).unwrap(),
            group::abelian_of_type(2, &Partition::new(vec![1, 1, 1, 1]).unwrap()).unwrap(),
        ];
        for g in &groups {
            let fast = enumerate_subgroups(g).unwrap();
            let naive = naive_subgroups(g);
            assert_eq!(fast, naive, "mismatch for {}", g.name());
        }
    }

    #[test]
    fn enumerated_subgroups_satisfy_lagrange_and_closure() {
        let g = group::modular(3, 3).unwrap();
        for s in enumerate_subgroups(&g).unwrap() {
            assert!(is_subgroup(&g, &s));
            assert_eq!(g.order() % s.size(), 0);
        }
    }

    #[test]
    fn trivial_group_has_one_subgroup() {
        let g = group::cyclic(1).unwrap();
        let subs = enumerate_subgroups(&g).unwrap();
        assert_eq!(subs.len(), 1);
        assert_eq!(subs[0].size(), 1);
    }

    #[test]
    fn quaternion_8_has_six_subgroups() {
        let g = group::quaternion(8).unwrap();
        assert_eq!(enumerate_subgroups(&g).unwrap().len(), 6);
    }

    #[test]
    fn c4_x_c2_has_eight_subgroups() {
        let g = group::abelian_of_type(2, &Partition::new(vec![2, 1]).unwrap()).unwrap();
        assert_eq!(enumerate_subgroups(&g).unwrap().len(), 8);
    }

    #[test]
    fn cyclic_27_has_four_subgroups() {
        let g = group::cyclic(27).unwrap();
        assert_eq!(enumerate_subgroups(&g).unwrap().len(), 4);
    }

    #[test]
    fn profile_examples() {
        let m27 = group::modular(3, 3).unwrap();
        let p = profile(&m27, 3).unwrap();
        assert_eq!(p.counts, vec![1, 4, 4, 1]);
        assert_eq!(p.total, 10);

        let c16 = group::cyclic(16).unwrap();
        let p = profile(&c16, 2).unwrap();
        assert_eq!(p.counts, vec![1, 1, 1, 1, 1]);

        // s_1 = 13 from the element-of-order-3 census (26 / 2), s_2 = 4
        // from the maximal-subgroup count of the rank-2 Frattini quotient
        let h27 = group::heisenberg(3).unwrap();
        let p = profile(&h27, 3).unwrap();
        assert_eq!(p.counts, vec![1, 13, 4, 1]);
        assert_eq!(p.total, 19);
    }

    #[test]
    fn profile_rejects_wrong_prime() {
        let g = group::dihedral(12).unwrap();
        assert!(profile(&g, 2).is_err());
        let c8 = group::cyclic(8).unwrap();
        assert!(profile(&c8, 3).is_err());
        assert!(profile(&c8, 4).is_err());
    }

    #[test]
    fn normality_examples() {
        let g = group::quaternion(16).unwrap();
        let whole = SubgroupSet::from_members(16, g.elements());
        assert!(is_normal(&g, &whole).unwrap());
        assert!(is_normal(&g, &g.center()).unwrap());

        let d8 = group::dihedral(8).unwrap();
        let refl = generated_subgroup(&d8, &[1]);
        assert_eq!(refl.size(), 2);
        assert!(!is_normal(&d8, &refl).unwrap());

        let not_sub = SubgroupSet::from_members(8, [0u16, 3].into_iter());
        assert!(is_normal(&d8, &not_sub).is_err());
    }

    #[test]
    fn conjugacy_classes_in_abelian_groups_are_singletons() {
        let g = group::abelian_of_type(3, &Partition::new(vec![1, 1]).unwrap()).unwrap();
        let classes = conjugacy_classes_of_subgroups(&g).unwrap();
        assert_eq!(classes.len(), 6);
        assert!(classes.iter().all(|c| c.len() == 1));
    }

    #[test]
    fn conjugacy_classes_of_modular_27_order_3_subgroups() {
        let g = group::modular(3, 3).unwrap();
        let classes = conjugacy_classes_of_subgroups(&g).unwrap();
        let order3: Vec<&Vec<SubgroupSet>> = classes
            .iter()
            .filter(|c| c[0].size() == 3)
            .collect();
        let mut sizes: Vec<usize> = order3.iter().map(|c| c.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 3]);
        // class sizes divide the group order
        for c in &classes {
            assert_eq!(27 % c.len(), 0);
        }
    }

    #[test]
    fn conjugacy_classes_of_dihedral_8_order_2_subgroups() {
        let g = group::dihedral(8).unwrap();
        let classes = conjugacy_classes_of_subgroups(&g).unwrap();
        let mut sizes: Vec<usize> = classes
            .iter()
            .filter(|c| c[0].size() == 2)
            .map(|c| c.len())
            .collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 2, 2]);
    }

    #[test]
    fn co_group_examples() {
        for g in [
            group::modular(3, 3).unwrap(),
            group::modular(3, 4).unwrap(),
            group::modular(2, 4).unwrap(),
            group::modular(2, 5).unwrap(),
        ] {
            assert!(is_co_group(&g).unwrap(), "{}", g.name());
        }
        assert!(!is_co_group(&group::dihedral(16).unwrap()).unwrap());
        assert!(is_co_group(&group::cyclic(16).unwrap()).unwrap());
    }

    #[test]
    fn dedekind_examples() {
        assert!(is_dedekind(&group::cyclic(16).unwrap()).unwrap());
        let q8xc22 = group::direct_product(
            &group::quaternion(8).unwrap(),
            &group::abelian_of_type(2, &Partition::new(vec![1, 1]).unwrap()).unwrap(),
        )
        .unwrap();
        assert!(is_dedekind(&q8xc22).unwrap());
        assert!(!is_dedekind(&group::modular(2, 4).unwrap()).unwrap());
    }

    #[test]
    fn cyclic_maximal_subgroup_examples() {
        assert!(has_cyclic_maximal_subgroup(&group::cyclic(81).unwrap()).unwrap());
        assert!(has_cyclic_maximal_subgroup(&group::modular(3, 3).unwrap()).unwrap());
        assert!(has_cyclic_maximal_subgroup(&group::modular(2, 5).unwrap()).unwrap());
        assert!(!has_cyclic_maximal_subgroup(&group::heisenberg(3).unwrap()).unwrap());
        assert!(has_cyclic_maximal_subgroup(&group::dihedral(12).unwrap()).is_err());
    }

    #[test]
    fn cyclic_maximal_fast_path_matches_enumeration_on_order_16() {
        for entry in crate::catalog::groups_of_order(16).unwrap() {
            let g = entry.build().unwrap();
            let by_elements = has_cyclic_maximal_subgroup(&g).unwrap();
            let by_lattice = enumerate_subgroups(&g)
                .unwrap()
                .iter()
                .filter(|s| s.size() == 8)
                .any(|s| {
                    s.members()
                        .any(|x| g.element_order(x).unwrap() == 8)
                });
            assert_eq!(by_elements, by_lattice, "{}", g.name());
        }
    }

    #[test]
    fn involution_counts() {
        for lam in 3..=7u32 {
            assert_eq!(group::quaternion(1 << lam).unwrap().count_involutions(), 1);
        }
        assert_eq!(group::cyclic(32).unwrap().count_involutions(), 1);
        // D_2m with m even: m reflections plus the central rotation
        for m in [2u32, 4, 6, 8] {
            assert_eq!(
                group::dihedral(2 * m).unwrap().count_involutions(),
                (m + 1) as u64
            );
        }
    }

    #[test]
    fn enumeration_caps_are_enforced() {
        let big = group::cyclic(512).unwrap();
        assert!(matches!(
            enumerate_subgroups(&big),
            Err(Error::ResourceLimit(_))
        ));
        let ea128 = group::abelian_of_type(
            2,
            &Partition::new(vec![1, 1, 1, 1, 1, 1, 1]).unwrap(),
        )
        .unwrap();
        assert!(matches!(
            enumerate_subgroups(&ea128),
            Err(Error::ResourceLimit(_))
        ));
    }

    #[test]
    fn parallel_and_sequential_enumeration_agree() {
        let groups = vec![
            group::quaternion(32).unwrap(),
            group::heisenberg(3).unwrap(),
            group::abelian_of_type(2, &Partition::new(vec![2, 2, 1]).unwrap()).unwrap(),
            group::dihedral(48).unwrap(),
        ];
        for g in &groups {
            assert_eq!(
                enumerate_subgroups(g).unwrap(),
                enumerate_subgroups_seq(g).unwrap(),
                "{}",
                g.name()
            );
        }
    }

    #[test]
    fn subgroup_set_ordering_is_by_size_then_first_difference() {
        let a = SubgroupSet::from_members(8, [0u16, 1, 4].into_iter());
        let b = SubgroupSet::from_members(8, [0u16, 2, 3].into_iter());
        let c = SubgroupSet::from_members(8, [0u16, 1].into_iter());
        assert!(c < a);
        assert!(a < b);
    }
}
