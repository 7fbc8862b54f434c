//! Complete lists of isomorphism classes for the orders the verification
//! suite sweeps exhaustively: all groups of order 8, 16 and p^3 for odd p,
//! and all abelian groups of a given prime-power order.

use crate::error::{Error, Result};
use crate::group::{self, GroupTable};
use crate::groupspec::GroupSpec;
use crate::lattice::SubgroupSet;
use crate::partition::Partition;

/// One isomorphism class, with a recipe that rebuilds its table on demand.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    label: String,
    order: u32,
    recipe: Recipe,
}

#[derive(Clone, Debug)]
enum Recipe {
    /// A group-spec string (see [`crate::groupspec`]).
    Spec(String),
    /// `(C2 x C2) : C4`, the wreath-like extension where C4 swaps the two
    /// Klein coordinates. Not expressible over a cyclic base, so it gets
    /// its own table.
    KleinByCyclicFour,
    /// The central product `D8 o C4`: quotient of `D8 x C4` by the
    /// diagonal central subgroup of order 2.
    CentralProductD8C4,
}

impl CatalogEntry {
    fn spec(label: &str, order: u32, spec: &str) -> Self {
        CatalogEntry {
            label: label.to_string(),
            order,
            recipe: Recipe::Spec(spec.to_string()),
        }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Human-readable constructor expression.
    pub fn recipe(&self) -> String {
        match &self.recipe {
            Recipe::Spec(s) => s.clone(),
            Recipe::KleinByCyclicFour => "(C2xC2) : C4 swapping coordinates".to_string(),
            Recipe::CentralProductD8C4 => {
                "quotient of D8xC4 by the diagonal central C2".to_string()
            }
        }
    }

    /// Constructs the group, relabelled with the catalog label.
    pub fn build(&self) -> Result<GroupTable> {
        let g = match &self.recipe {
            Recipe::Spec(s) => GroupSpec::parse(s)?.build()?,
            Recipe::KleinByCyclicFour => klein_by_cyclic_four()?,
            Recipe::CentralProductD8C4 => central_product_d8_c4()?,
        };
        debug_assert_eq!(g.order(), self.order);
        Ok(g.with_name(self.label.clone()))
    }
}

fn klein_by_cyclic_four() -> Result<GroupTable> {
    // pairs (w, j): w in F_2^2, j mod 4; odd j swaps the coordinates of w
    let swap = |w: u16| (w & 1) << 1 | w >> 1;
    GroupTable::from_fn(
        "(C2xC2):C4",
        16,
        |a, b| {
            let (w, j) = (a / 4, a % 4);
            let (v, l) = (b / 4, b % 4);
            let acted = if j % 2 == 1 { swap(v) } else { v };
            (w ^ acted) * 4 + (j + l) % 4
        },
        vec![4, 1],
    )
}

fn central_product_d8_c4() -> Result<GroupTable> {
    let d8 = group::dihedral(8)?;
    let c4 = group::cyclic(4)?;
    let prod = group::direct_product(&d8, &c4)?;
    // r^2 sits at index 4 in D8 and c^2 at index 2 in C4; (r^2, c^2) is
    // the diagonal central involution at index 4 * 4 + 2.
    let diag = SubgroupSet::from_members(prod.order(), [0u16, 18].into_iter());
    group::quotient(&prod, &diag)
}

/// All isomorphism classes of groups of order `n`, for
/// `n in {8, 16} or n = p^3` with p an odd prime. Abelian classes come
/// first (types in lexicographically decreasing order), then the
/// nonabelian classes in a fixed documented order.
pub fn groups_of_order(n: u64) -> Result<Vec<CatalogEntry>> {
    match n {
        8 => Ok(vec![
            CatalogEntry::spec("C8", 8, "cyclic:8"),
            CatalogEntry::spec("C4xC2", 8, "abelian:p=2,type=2.1"),
            CatalogEntry::spec("C2xC2xC2", 8, "abelian:p=2,type=1.1.1"),
            CatalogEntry::spec("D8", 8, "dihedral:8"),
            CatalogEntry::spec("Q8", 8, "quaternion:8"),
        ]),
        16 => Ok(vec![
            CatalogEntry::spec("C16", 16, "cyclic:16"),
            CatalogEntry::spec("C8xC2", 16, "abelian:p=2,type=3.1"),
            CatalogEntry::spec("C4xC4", 16, "abelian:p=2,type=2.2"),
            CatalogEntry::spec("C4xC2xC2", 16, "abelian:p=2,type=2.1.1"),
            CatalogEntry::spec("C2xC2xC2xC2", 16, "abelian:p=2,type=1.1.1.1"),
            CatalogEntry::spec("D16", 16, "dihedral:16"),
            CatalogEntry::spec("SD16", 16, "semidirect:m=8,n=2,r=3"),
            CatalogEntry::spec("Q16", 16, "quaternion:16"),
            CatalogEntry::spec("M16", 16, "modular:p=2,lambda=4"),
            CatalogEntry::spec("D8xC2", 16, "product:dihedral:8*cyclic:2"),
            CatalogEntry::spec("Q8xC2", 16, "product:quaternion:8*cyclic:2"),
            CatalogEntry::spec("C4:C4", 16, "semidirect:m=4,n=4,r=3"),
            CatalogEntry {
                label: "(C2xC2):C4".to_string(),
                order: 16,
                recipe: Recipe::KleinByCyclicFour,
            },
            CatalogEntry {
                label: "D8oC4".to_string(),
                order: 16,
                recipe: Recipe::CentralProductD8C4,
            },
        ]),
        _ => {
            let Some((p, 3)) = group::prime_power_decomposition(n) else {
                return Err(Error::invalid(format!(
                    "no catalog for order {n}; supported orders are 8, 16 and p^3 for odd p"
                )));
            };
            if p == 2 || n > 512 {
                return Err(Error::invalid(format!(
                    "no catalog for order {n}; supported orders are 8, 16 and p^3 <= 512 for odd p"
                )));
            }
            let p2 = p * p;
            Ok(vec![
                CatalogEntry::spec(&format!("C{n}"), n as u32, &format!("cyclic:{n}")),
                CatalogEntry::spec(
                    &format!("C{p2}xC{p}"),
                    n as u32,
                    &format!("abelian:p={p},type=2.1"),
                ),
                CatalogEntry::spec(
                    &format!("C{p}xC{p}xC{p}"),
                    n as u32,
                    &format!("abelian:p={p},type=1.1.1"),
                ),
                CatalogEntry::spec(
                    &format!("M{p}(1,1,1)"),
                    n as u32,
                    &format!("heisenberg:{p}"),
                ),
                CatalogEntry::spec(&format!("M{n}"), n as u32, &format!("modular:p={p},lambda=3")),
            ])
        }
    }
}

/// One entry per partition of `lam`: every abelian group of order
/// `p^lam`, in lexicographically decreasing type order.
pub fn abelian_groups_of_order(p: u64, lam: u32) -> Result<Vec<CatalogEntry>> {
    if !crate::counting::is_prime(p) {
        return Err(Error::invalid(format!("{p} is not prime")));
    }
    let order = p
        .checked_pow(lam)
        .filter(|&o| o <= group::MAX_ORDER as u64)
        .ok_or_else(|| {
            Error::limit(format!(
                "p^lambda = {p}^{lam} exceeds order {}",
                group::MAX_ORDER
            ))
        })?;
    Ok(Partition::all_of_weight(lam)
        .into_iter()
        .map(|mu| {
            let label = if mu.is_empty() {
                "C1".to_string()
            } else {
                mu.parts()
                    .iter()
                    .map(|&m| format!("C{}", p.pow(m)))
                    .collect::<Vec<_>>()
                    .join("x")
            };
            let type_str = mu
                .parts()
                .iter()
                .map(|m| m.to_string())
                .collect::<Vec<_>>()
                .join(".");
            let spec = if mu.is_empty() {
                "cyclic:1".to_string()
            } else {
                format!("abelian:p={p},type={type_str}")
            };
            CatalogEntry {
                label,
                order: order as u32,
                recipe: Recipe::Spec(spec),
            }
        })
        .collect())
}

/// Builds a group from a spec string (see [`crate::groupspec`] for the
/// grammar).
pub fn named(spec: &str) -> Result<GroupTable> {
    GroupSpec::parse(spec)?.build()
}
