//! Integer partitions, the "types" of finite abelian p-groups.
//!
//! A partition is a weakly decreasing sequence of positive integers. The
//! abelian p-group of type `(m1, m2, ...)` is `C_{p^m1} x C_{p^m2} x ...`,
//! and every question about its subgroup counts reduces to partition
//! combinatorics (see [`crate::counting`]).

use std::fmt;

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition, rejecting sequences that are not weakly
    /// decreasing or contain zero parts.
    pub fn new(parts: impl Into<Vec<u32>>) -> Result<Self> {
        let parts = parts.into();
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::invalid("partition parts must be positive"));
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::invalid(
                "partition parts must be weakly decreasing",
            ));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Sum of the parts.
    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// The i-th part (0-based), zero beyond the last part.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Transpose of the Young diagram: the i-th conjugate part counts the
    /// parts of `self` that are >= i+1.
    pub fn conjugate(&self) -> Partition {
        let Some(&first) = self.parts.first() else {
            return Partition::empty();
        };
        let parts = (1..=first)
            .map(|i| self.parts.iter().filter(|&&p| p >= i).count() as u32)
            .collect();
        Partition { parts }
    }

    /// Young-diagram containment: every part of `other` fits under the
    /// corresponding part of `self`.
    pub fn contains(&self, other: &Partition) -> bool {
        (0..other.len()).all(|i| self.part(i) >= other.part(i))
    }

    /// All partitions of weight `k`, in lexicographically decreasing order.
    pub fn all_of_weight(k: u32) -> Vec<Partition> {
        let bound = Partition {
            parts: vec![k.max(1); k as usize],
        };
        Self::bounded_of_weight(k, &bound)
    }

    /// All partitions `nu` of weight `k` with `nu_i <= bound_i` for every i,
    /// in lexicographically decreasing order.
    pub fn bounded_of_weight(k: u32, bound: &Partition) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        collect_bounded(k, bound, 0, u32::MAX, &mut current, &mut out);
        out
    }
}

fn collect_bounded(
    remaining: u32,
    bound: &Partition,
    index: usize,
    prev: u32,
    current: &mut Vec<u32>,
    out: &mut Vec<Partition>,
) {
    if remaining == 0 {
        out.push(Partition {
            parts: current.clone(),
        });
        return;
    }
    let cap = bound.part(index).min(prev).min(remaining);
    // Larger leading parts first gives lex-decreasing output.
    for v in (1..=cap).rev() {
        current.push(v);
        collect_bounded(remaining - v, bound, index + 1, v, current, out);
        current.pop();
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn rejects_increasing_or_zero_parts() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert!(Partition::new(vec![3, 3, 1]).is_ok());
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        // (4,1) has columns of heights 2,1,1,1
        assert_eq!(p(&[4, 1]).conjugate(), p(&[2, 1, 1, 1]));
        // (3,2): count columns of the Young diagram by hand
        assert_eq!(p(&[3, 2]).conjugate(), p(&[2, 2, 1]));
    }

    #[test]
    fn conjugate_of_two_row_type() {
        // (m1, m2) with m2 <= m1 conjugates to m2 twos followed by m1-m2 ones
        let mu = p(&[5, 2]);
        assert_eq!(mu.conjugate(), p(&[2, 2, 1, 1, 1]));
    }

    #[test]
    fn conjugation_is_an_involution_up_to_weight_12() {
        for k in 0..=12 {
            for mu in Partition::all_of_weight(k) {
                assert_eq!(mu.conjugate().conjugate(), mu, "mu = {mu}");
                assert_eq!(mu.conjugate().weight(), mu.weight());
            }
        }
    }

    #[test]
    fn containment() {
        assert!(p(&[3, 2]).contains(&p(&[2, 2])));
        assert!(p(&[3, 2]).contains(&Partition::empty()));
        assert!(!p(&[3, 2]).contains(&p(&[3, 3])));
        assert!(!p(&[3, 2]).contains(&p(&[1, 1, 1])));
    }

    #[test]
    fn bounded_enumeration_examples() {
        assert_eq!(
            Partition::bounded_of_weight(0, &p(&[2, 1])),
            vec![Partition::empty()]
        );
        assert_eq!(
            Partition::bounded_of_weight(2, &p(&[2, 1])),
            vec![p(&[2]), p(&[1, 1])]
        );
        assert_eq!(
            Partition::bounded_of_weight(3, &p(&[1, 1, 1])),
            vec![p(&[1, 1, 1])]
        );
        // weight exceeding the bound's weight leaves nothing
        assert!(Partition::bounded_of_weight(4, &p(&[2, 1])).is_empty());
    }

    #[test]
    fn all_of_weight_is_lex_decreasing_and_complete() {
        let all = Partition::all_of_weight(6);
        assert_eq!(all.len(), 11); // p(6) = 11
        for w in all.windows(2) {
            assert!(w[0].parts() > w[1].parts());
        }
        assert_eq!(all[0], p(&[6]));
        assert_eq!(all[10], p(&[1, 1, 1, 1, 1, 1]));
    }
}
