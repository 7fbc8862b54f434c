//! The textual group-spec grammar shared by the CLI and the catalog:
//!
//! ```text
//!   spec      := name [ ":" args ]
//!   name      := cyclic | abelian | dihedral | quaternion | modular
//!              | heisenberg | semidirect | product | smallcat
//!   args      := positional | keyed | factors | address
//!   positional:= integer                      (cyclic, dihedral,
//!                                              quaternion, heisenberg)
//!   keyed     := key "=" value { "," ... }    (abelian: p, type;
//!                                              modular: p, lambda;
//!                                              semidirect: m, n, r)
//!   factors   := spec "*" spec { "*" spec }   (product)
//!   address   := ORDER "/" INDEX              (smallcat, 1-based index)
//! ```
//!
//! Abelian types are dot-separated partitions: `abelian:p=2,type=3.1` is
//! `C8 x C2`. Every spec parses to exactly one constructor call.

use crate::catalog;
use crate::error::{Error, Result};
use crate::group::{self, GroupTable};
use crate::partition::Partition;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic(u32),
    Abelian { p: u64, parts: Vec<u32> },
    Dihedral(u32),
    Quaternion(u32),
    Modular { p: u64, lambda: u32 },
    Heisenberg(u64),
    Semidirect { m: u32, n: u32, r: u64 },
    Product(Vec<GroupSpec>),
    SmallCat { order: u64, index: usize },
}

fn int<T: std::str::FromStr>(s: &str, what: &str) -> Result<T> {
    s.trim()
        .parse()
        .map_err(|_| Error::parse(format!("expected an integer for {what}, got '{s}'")))
}

fn keyed_args<'a>(rest: &'a str, keys: &[&str]) -> Result<Vec<&'a str>> {
    let mut values: Vec<Option<&str>> = vec![None; keys.len()];
    for pair in rest.split(',') {
        let (k, v) = pair
            .split_once('=')
            .ok_or_else(|| Error::parse(format!("expected key=value, got '{pair}'")))?;
        let idx = keys
            .iter()
            .position(|&key| key == k.trim())
            .ok_or_else(|| Error::parse(format!("unknown key '{}'", k.trim())))?;
        if values[idx].replace(v.trim()).is_some() {
            return Err(Error::parse(format!("duplicate key '{}'", k.trim())));
        }
    }
    keys.iter()
        .zip(&values)
        .map(|(k, v)| v.ok_or_else(|| Error::parse(format!("missing key '{k}'"))))
        .collect()
}

impl GroupSpec {
    pub fn parse(text: &str) -> Result<GroupSpec> {
        let text = text.trim();
        let (head, rest) = match text.split_once(':') {
            Some((h, r)) => (h.trim(), r.trim()),
            None => (text, ""),
        };
        let need_args = |what: &str| -> Result<()> {
            if rest.is_empty() {
                Err(Error::parse(format!("'{head}' needs {what}")))
            } else {
                Ok(())
            }
        };
        match head {
            "cyclic" => {
                need_args("an order, e.g. cyclic:8")?;
                Ok(GroupSpec::Cyclic(int(rest, "cyclic order")?))
            }
            "dihedral" => {
                need_args("an order, e.g. dihedral:8")?;
                Ok(GroupSpec::Dihedral(int(rest, "dihedral order")?))
            }
            "quaternion" => {
                need_args("an order, e.g. quaternion:8")?;
                Ok(GroupSpec::Quaternion(int(rest, "quaternion order")?))
            }
            "heisenberg" => {
                need_args("a prime, e.g. heisenberg:3")?;
                Ok(GroupSpec::Heisenberg(int(rest, "heisenberg prime")?))
            }
            "abelian" => {
                need_args("p and type, e.g. abelian:p=2,type=3.1")?;
                let vals = keyed_args(rest, &["p", "type"])?;
                let parts = vals[1]
                    .split('.')
                    .map(|s| int(s, "type part"))
                    .collect::<Result<Vec<u32>>>()?;
                Ok(GroupSpec::Abelian {
                    p: int(vals[0], "p")?,
                    parts,
                })
            }
            "modular" => {
                need_args("p and lambda, e.g. modular:p=2,lambda=4")?;
                let vals = keyed_args(rest, &["p", "lambda"])?;
                Ok(GroupSpec::Modular {
                    p: int(vals[0], "p")?,
                    lambda: int(vals[1], "lambda")?,
                })
            }
            "semidirect" => {
                need_args("m, n and r, e.g. semidirect:m=8,n=2,r=3")?;
                let vals = keyed_args(rest, &["m", "n", "r"])?;
                Ok(GroupSpec::Semidirect {
                    m: int(vals[0], "m")?,
                    n: int(vals[1], "n")?,
                    r: int(vals[2], "r")?,
                })
            }
            "product" => {
                need_args("factors, e.g. product:heisenberg:3*cyclic:3")?;
                let factors = rest
                    .split('*')
                    .map(GroupSpec::parse)
                    .collect::<Result<Vec<_>>>()?;
                if factors.len() < 2 {
                    return Err(Error::parse("product needs at least two factors"));
                }
                Ok(GroupSpec::Product(factors))
            }
            "smallcat" => {
                need_args("an address, e.g. smallcat:16/9")?;
                let (order, index) = rest.split_once('/').ok_or_else(|| {
                    Error::parse("smallcat address is ORDER/INDEX, e.g. smallcat:16/9")
                })?;
                let index: usize = int(index, "catalog index")?;
                if index == 0 {
                    return Err(Error::parse("catalog indices start at 1"));
                }
                Ok(GroupSpec::SmallCat {
                    order: int(order, "catalog order")?,
                    index,
                })
            }
            other => Err(Error::parse(format!("unknown group kind '{other}'"))),
        }
    }

    pub fn build(&self) -> Result<GroupTable> {
        match self {
            GroupSpec::Cyclic(n) => group::cyclic(*n),
            GroupSpec::Abelian { p, parts } => {
                let mu = Partition::new(parts.clone())?;
                group::abelian_of_type(*p, &mu)
            }
            GroupSpec::Dihedral(n) => group::dihedral(*n),
            GroupSpec::Quaternion(n) => group::quaternion(*n),
            GroupSpec::Modular { p, lambda } => group::modular(*p, *lambda),
            GroupSpec::Heisenberg(p) => group::heisenberg(*p),
            GroupSpec::Semidirect { m, n, r } => group::semidirect_cyclic(*m, *n, *r),
            GroupSpec::Product(factors) => {
                let mut acc = factors[0].build()?;
                for f in &factors[1..] {
                    acc = group::direct_product(&acc, &f.build()?)?;
                }
                Ok(acc)
            }
            GroupSpec::SmallCat { order, index } => {
                let entries = catalog::groups_of_order(*order)?;
                let entry = entries.get(index - 1).ok_or_else(|| {
                    Error::invalid(format!(
                        "catalog for order {order} has {} entries, index {index} is out of range",
                        entries.len()
                    ))
                })?;
                entry.build()
            }
        }
    }
}
