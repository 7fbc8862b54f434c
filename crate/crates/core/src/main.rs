//! Command-line front end: build groups from spec strings, print subgroup
//! profiles, list catalogs, and run the verification suite.
//!
//! Exit codes: 0 on success, 1 when a verification check fails, 2 on
//! usage or parse errors, 3 on resource-limit violations.

use clap::{Parser, Subcommand};
use serde::Serialize;

use pgroups::checks::{self, CheckReport, CheckStatus};
use pgroups::error::Error;
use pgroups::group::{DEFAULT_ASSOC_SEED, FULL_ASSOC_ORDER};
use pgroups::{catalog, lattice, GroupSpec, GroupTable};

#[derive(Parser)]
#[command(
    name = "pgroups",
    about = "Exact subgroup counting and theorem checks for small finite p-groups",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Emit machine-readable JSON instead of tables.
    #[arg(long, global = true)]
    json: bool,

    /// Reject groups above this order (on top of the built-in caps).
    #[arg(long, global = true)]
    max_order: Option<u32>,

    /// Worker threads for enumeration and the verification suite
    /// (default: one per CPU; output is identical for any value).
    #[arg(long, global = true)]
    jobs: Option<usize>,

    /// Seed for the sampled associativity re-check on groups above order
    /// 256.
    #[arg(long, global = true, default_value_t = DEFAULT_ASSOC_SEED)]
    seed: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Print the subgroup profile of a group, e.g. `profile quaternion:8`.
    Profile {
        /// Group spec: cyclic:N, abelian:p=P,type=A.B, dihedral:N,
        /// quaternion:N, modular:p=P,lambda=L, heisenberg:P,
        /// semidirect:m=M,n=N,r=R, product:SPEC*SPEC, smallcat:ORDER/INDEX
        spec: String,
    },
    /// Run verification checks. CHECK is one of: minimal, kulakoff,
    /// frobenius, butler, dihedral, quaternion, qu, lindenberg,
    /// structural, all.
    Verify {
        check: String,
        /// Catalog order for minimal/frobenius/structural (8, 16 or 27).
        #[arg(long)]
        order: Option<u64>,
        /// Prime parameter for family checks.
        #[arg(long)]
        p: Option<u64>,
        /// Exponent parameter for family checks.
        #[arg(long)]
        lambda: Option<u32>,
        /// Largest m for the dihedral identity (default 50).
        #[arg(long)]
        m_max: Option<u32>,
        /// Largest lambda for the quaternion identity (default 7).
        #[arg(long)]
        lam_max: Option<u32>,
    },
    /// List a complete catalog order with profile summaries.
    Catalog { order: u64 },
}

#[derive(Serialize)]
struct ProfileOutput {
    group: String,
    order: u32,
    p: u64,
    s: Vec<String>,
    total: String,
}

#[derive(Serialize)]
struct CatalogRow {
    id: String,
    label: String,
    order: u32,
    abelian: bool,
    s: Vec<String>,
    total: String,
}

#[derive(Serialize)]
struct CatalogOutput {
    order: u64,
    entries: Vec<CatalogRow>,
}

#[derive(Serialize)]
struct VerifyOutput {
    status: String,
    reports: Vec<CheckReport>,
}

fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::InvalidArgument(_) | Error::Parse(_) => 2,
        Error::ResourceLimit(_) => 3,
    }
}

fn build_group(spec: &str, cli: &Cli) -> Result<GroupTable, Error> {
    let g = GroupSpec::parse(spec)?.build()?;
    if let Some(cap) = cli.max_order {
        if g.order() > cap {
            return Err(Error::ResourceLimit(format!(
                "group {} has order {}, above --max-order {cap}",
                g.name(),
                g.order()
            )));
        }
    }
    if g.order() > FULL_ASSOC_ORDER && !g.check_associativity_sampled(cli.seed, 100_000) {
        return Err(Error::InvalidArgument(format!(
            "sampled associativity check failed for {} with seed {}",
            g.name(),
            cli.seed
        )));
    }
    Ok(g)
}

fn profile_output(g: &GroupTable) -> Result<ProfileOutput, Error> {
    let p = match g.prime_power() {
        Some((p, _)) => p,
        None if g.order() == 1 => 1,
        None => {
            return Err(Error::InvalidArgument(format!(
                "{} has order {}, not a prime power; profiles are defined for p-groups",
                g.name(),
                g.order()
            )))
        }
    };
    let prof = if g.order() == 1 {
        lattice::SubgroupProfile {
            prime: 1,
            counts: vec![1],
            total: 1,
        }
    } else {
        lattice::profile(g, p)?
    };
    Ok(ProfileOutput {
        group: g.name().to_string(),
        order: g.order(),
        p,
        s: prof.counts.iter().map(|c| c.to_string()).collect(),
        total: prof.total.to_string(),
    })
}

fn cmd_profile(spec: &str, cli: &Cli) -> Result<i32, Error> {
    let g = build_group(spec, cli)?;
    let out = profile_output(&g)?;
    if cli.json {
        println!("{}", serde_json::to_string(&out).expect("serializable"));
    } else {
        println!("group: {} (order {}, p = {})", out.group, out.order, out.p);
        println!("s = [{}], total = {}", out.s.join(", "), out.total);
    }
    Ok(0)
}

fn cmd_catalog(order: u64, cli: &Cli) -> Result<i32, Error> {
    let entries = catalog::groups_of_order(order)?;
    let mut rows = Vec::new();
    for (i, entry) in entries.iter().enumerate() {
        let g = entry.build()?;
        let out = profile_output(&g)?;
        rows.push(CatalogRow {
            id: format!("{order}/{}", i + 1),
            label: entry.label().to_string(),
            order: entry.order(),
            abelian: g.is_abelian(),
            s: out.s,
            total: out.total,
        });
    }
    if cli.json {
        let out = CatalogOutput { order, entries: rows };
        println!("{}", serde_json::to_string(&out).expect("serializable"));
    } else {
        println!("{} groups of order {order}:", rows.len());
        for row in &rows {
            println!(
                "{:>7}  {:<14} {:<10} s = [{}], total = {}",
                row.id,
                row.label,
                if row.abelian { "abelian" } else { "nonabelian" },
                row.s.join(", "),
                row.total
            );
        }
    }
    Ok(0)
}

struct VerifyParams {
    order: Option<u64>,
    p: Option<u64>,
    lambda: Option<u32>,
    m_max: Option<u32>,
    lam_max: Option<u32>,
    max_order: Option<u32>,
}

fn gather_reports(check: &str, params: &VerifyParams) -> Result<Vec<CheckReport>, Error> {
    let mut reports = Vec::new();
    match check {
        "all" => {
            reports = checks::all_reports()?;
        }
        "minimal" => match (params.order, params.p, params.lambda) {
            (Some(order), None, None) => {
                reports.push(checks::check_minimality_exhaustive(order)?)
            }
            (None, Some(p), Some(lambda)) => {
                reports.push(checks::check_minimality_families(p, lambda)?)
            }
            (None, None, None) => {
                for order in [8, 16, 27] {
                    reports.push(checks::check_minimality_exhaustive(order)?);
                }
                for (p, lam) in [(3, 3), (3, 4), (5, 3), (2, 5), (2, 6)] {
                    reports.push(checks::check_minimality_families(p, lam)?);
                }
            }
            _ => {
                return Err(Error::InvalidArgument(
                    "minimal takes either --order, or --p with --lambda".into(),
                ))
            }
        },
        "kulakoff" => match (params.p, params.lambda) {
            (Some(p), Some(lam)) => reports.push(checks::check_kulakoff(p, lam)?),
            (None, None) => {
                for (p, lam) in [(3, 3), (3, 4), (5, 3)] {
                    reports.push(checks::check_kulakoff(p, lam)?);
                }
            }
            _ => {
                return Err(Error::InvalidArgument(
                    "kulakoff takes --p and --lambda together".into(),
                ))
            }
        },
        "frobenius" => match params.order {
            Some(order) => reports.push(checks::check_frobenius_catalog(order)?),
            None => {
                for order in [8, 16, 27] {
                    reports.push(checks::check_frobenius_catalog(order)?);
                }
            }
        },
        "butler" => {
            let defaults: Vec<(u64, u64)> = match params.p {
                Some(p) => vec![(
                    p,
                    params.max_order.map(u64::from).unwrap_or(64),
                )],
                None => vec![(2, 64), (3, 128)],
            };
            for (p, max_order) in defaults {
                reports.push(checks::check_butler(p, max_order)?);
            }
        }
        "dihedral" => {
            reports.push(checks::check_dihedral_formula(params.m_max.unwrap_or(50))?)
        }
        "quaternion" => {
            reports.push(checks::check_quaternion_total(params.lam_max.unwrap_or(7))?)
        }
        "qu" => match params.p {
            Some(p) => reports.push(checks::check_qu_maximality(p)?),
            None => {
                for p in [3, 5] {
                    reports.push(checks::check_qu_maximality(p)?);
                }
            }
        },
        "lindenberg" => match (params.p, params.lambda) {
            (Some(p), Some(lam)) => reports.push(checks::check_lindenberg_split(p, lam)?),
            (None, None) => {
                for (p, lam) in [(3, 3), (3, 4), (5, 3)] {
                    reports.push(checks::check_lindenberg_split(p, lam)?);
                }
            }
            _ => {
                return Err(Error::InvalidArgument(
                    "lindenberg takes --p and --lambda together".into(),
                ))
            }
        },
        "structural" => match params.order {
            Some(order) => reports.push(checks::check_structural_proof_steps(order)?),
            None => {
                for order in [8, 16, 27] {
                    reports.push(checks::check_structural_proof_steps(order)?);
                }
            }
        },
        other => {
            return Err(Error::Parse(format!(
                "unknown check '{other}'; expected one of minimal, kulakoff, frobenius, \
                 butler, dihedral, quaternion, qu, lindenberg, structural, all"
            )))
        }
    }
    reports.sort_by(|a, b| (&a.check, &a.params).cmp(&(&b.check, &b.params)));
    Ok(reports)
}

fn cmd_verify(check: &str, params: &VerifyParams, json: bool) -> Result<i32, Error> {
    let reports = gather_reports(check, params)?;
    let all_pass = reports.iter().all(|r| r.passed());
    if json {
        let out = VerifyOutput {
            status: if all_pass { "pass" } else { "fail" }.to_string(),
            reports,
        };
        println!("{}", serde_json::to_string(&out).expect("serializable"));
    } else {
        for report in &reports {
            let tag = match report.status {
                CheckStatus::Pass => "PASS",
                CheckStatus::Fail => "FAIL",
                CheckStatus::Skipped => "SKIP",
            };
            println!("{tag} {}({})", report.check, report.params);
            if let Some(reason) = &report.reason {
                println!("     note: {reason}");
            }
            for w in &report.witnesses {
                let mark = if w.ok { "ok " } else { "BAD" };
                println!("     {mark} {}: {} (expected {})", w.group, w.observed, w.expected);
            }
        }
        println!(
            "{} checks, {} failed, {} skipped",
            reports.len(),
            reports.iter().filter(|r| r.status == CheckStatus::Fail).count(),
            reports.iter().filter(|r| r.status == CheckStatus::Skipped).count(),
        );
    }
    Ok(if all_pass { 0 } else { 1 })
}

fn run(cli: &Cli) -> Result<i32, Error> {
    match &cli.command {
        Command::Profile { spec } => cmd_profile(spec, cli),
        Command::Verify {
            check,
            order,
            p,
            lambda,
            m_max,
            lam_max,
        } => {
            let params = VerifyParams {
                order: *order,
                p: *p,
                lambda: *lambda,
                m_max: *m_max,
                lam_max: *lam_max,
                max_order: cli.max_order,
            };
            cmd_verify(check, &params, cli.json)
        }
        Command::Catalog { order } => cmd_catalog(*order, cli),
    }
}

fn main() {
    let cli = Cli::parse();

    #[cfg(feature = "parallel")]
    let pool = {
        let mut builder = rayon::ThreadPoolBuilder::new();
        if let Some(jobs) = cli.jobs {
            builder = builder.num_threads(jobs.max(1));
        }
        builder.build().expect("thread pool")
    };
    #[cfg(not(feature = "parallel"))]
    if cli.jobs.is_some() {
        eprintln!("note: built without the parallel feature; --jobs is ignored");
    }

    let result = {
        #[cfg(feature = "parallel")]
        {
            pool.install(|| run(&cli))
        }
        #[cfg(not(feature = "parallel"))]
        {
            run(&cli)
        }
    };

    match result {
        Ok(code) => std::process::exit(code),
        Err(err) => {
            eprintln!("error: {err}");
            std::process::exit(exit_code_for(&err));
        }
    }
}
