//! Command-line front end.
//!
//! Exit codes: 0 when the property holds, the check is consistent or a
//! factorization is found; 1 when it fails; 2 for usage or input errors;
//! 3 when the enumeration cap or search budget is exceeded.

pub mod report;

use std::io::Write;
use std::path::Path;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use sylowfact_core::{
    all_sylow_subgroups, check_property_a, check_property_a_tuples, expand_catalog,
    is_nilpotent_lcs, is_nilpotent_sylow, resolve_group, search_sylow_factorization,
    sylow_subgroup, verify_theorem, CatalogSpec, Error, SearchMode, DEFAULT_BUDGET,
    DEFAULT_MAX_ELEMENTS,
};

use report::{CatalogSummary, GroupReport, RunReport, SubgroupListing, SylowReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "sylowfact",
    version,
    about = "Coprime-order products, nilpotency and Sylow factorizations of finite permutation groups"
)]
struct Cli {
    /// Largest group order that will be enumerated.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_ELEMENTS)]
    max_elements: usize,

    /// Element multiplications allowed for one factorization search.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u64,

    /// Omit the timestamp and wall times so reports are reproducible.
    #[arg(long, global = true)]
    no_timestamp: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the order of a group.
    Order { group: String },
    /// Check Property A or nilpotency of one group.
    #[command(subcommand)]
    Check(Check),
    /// Show a Sylow p-subgroup, or all of them with --all.
    Sylow {
        #[arg(short = 'p', long = "prime")]
        prime: u64,
        group: String,
        #[arg(long)]
        all: bool,
    },
    /// Search for Sylow subgroups S1, ..., Sr with S1 S2 ... Sr = G.
    Factorize {
        group: String,
        /// Try every Sylow system and report a failing one if any.
        #[arg(long)]
        exhaustive: bool,
    },
    /// Check Property A against both nilpotency tests on a catalog.
    VerifyTheorem {
        /// A catalog file, or `default`.
        #[arg(long)]
        catalog: String,
    },
}

#[derive(Debug, Subcommand)]
enum Check {
    /// Do coprime-order elements multiply to an element of the product order?
    PropertyA {
        group: String,
        /// Also check k-tuples of pairwise coprime orders (k = 2 or 3).
        #[arg(long)]
        tuples: Option<usize>,
    },
    /// Is the group nilpotent?
    Nilpotent {
        group: String,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Sylow,
    Lcs,
    Both,
}

fn exit_code_for(err: &Error) -> i32 {
    if err.is_resource() {
        EXIT_RESOURCE
    } else {
        EXIT_USAGE
    }
}

/// Parses `args` (including the program name) and runs the command, writing
/// the report to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code_for(&e)
        }
    }
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32, Error> {
    let cap = cli.max_elements;
    let timed = !cli.no_timestamp;
    let write = |out: &mut dyn Write, text: &str| {
        out.write_all(text.as_bytes()).map_err(|e| Error::Io {
            path: "<stdout>".into(),
            message: e.to_string(),
        })
    };

    match &cli.command {
        Command::Order { group } => {
            let (_, g) = resolve_group(group, cap)?;
            write(out, &format!("{}\n", g.order()))?;
            Ok(EXIT_OK)
        }

        Command::Check(Check::PropertyA { group, tuples }) => {
            let (name, g) = resolve_group(group, cap)?;
            let mut report = RunReport::new("check property-a", timed);
            let mut entry = GroupReport::new(&name, &g, timed);
            let pa = entry.timed("property_a", || check_property_a(&g));
            let mut code = if pa.holds { EXIT_OK } else { EXIT_FAIL };
            entry.property_a = Some(pa);
            if let Some(k) = *tuples {
                let tr = entry.timed("property_a_tuples", || check_property_a_tuples(&g, k))?;
                if !tr.holds {
                    code = EXIT_FAIL;
                }
                entry.property_a_tuples = Some(tr);
            }
            report.groups.push(entry);
            write(out, &report.to_json())?;
            Ok(code)
        }

        Command::Check(Check::Nilpotent { group, method }) => {
            let (name, g) = resolve_group(group, cap)?;
            let mut report = RunReport::new("check nilpotent", timed);
            let mut entry = GroupReport::new(&name, &g, timed);
            if matches!(method, Method::Sylow | Method::Both) {
                let r = entry.timed("nilpotent_sylow", || is_nilpotent_sylow(&g))?;
                entry.nilpotency.push(r);
            }
            if matches!(method, Method::Lcs | Method::Both) {
                let r = entry.timed("nilpotent_lcs", || is_nilpotent_lcs(&g));
                entry.nilpotency.push(r);
            }
            let code = if entry.nilpotency.iter().all(|r| r.nilpotent) {
                EXIT_OK
            } else {
                EXIT_FAIL
            };
            report.groups.push(entry);
            write(out, &report.to_json())?;
            Ok(code)
        }

        Command::Sylow { prime, group, all } => {
            let (name, g) = resolve_group(group, cap)?;
            let mut report = RunReport::new("sylow", timed);
            let mut entry = GroupReport::new(&name, &g, timed);
            let listing = |s: &sylowfact_core::Subgroup<'_>| SubgroupListing {
                order: s.order(),
                generators: s.generators(),
            };
            let sylow = entry.timed("sylow", || -> Result<SylowReport, Error> {
                if *all {
                    let subs = all_sylow_subgroups(&g, *prime)?;
                    Ok(SylowReport {
                        prime: *prime,
                        order: subs[0].order(),
                        count: Some(subs.len()),
                        subgroups: subs.iter().map(listing).collect(),
                    })
                } else {
                    let s = sylow_subgroup(&g, *prime)?;
                    Ok(SylowReport {
                        prime: *prime,
                        order: s.order(),
                        count: None,
                        subgroups: vec![listing(&s)],
                    })
                }
            })?;
            entry.sylow = Some(sylow);
            report.groups.push(entry);
            write(out, &report.to_json())?;
            Ok(EXIT_OK)
        }

        Command::Factorize { group, exhaustive } => {
            let (name, g) = resolve_group(group, cap)?;
            let mode = if *exhaustive {
                SearchMode::Exhaustive
            } else {
                SearchMode::FirstHit
            };
            let mut report = RunReport::new("factorize", timed);
            let mut entry = GroupReport::new(&name, &g, timed);
            let result = entry.timed("factorize", || {
                search_sylow_factorization(&g, mode, cli.budget)
            })?;
            let code = if result.found { EXIT_OK } else { EXIT_FAIL };
            entry.factorization = Some(result.summary());
            report.groups.push(entry);
            write(out, &report.to_json())?;
            Ok(code)
        }

        Command::VerifyTheorem { catalog } => {
            let (spec, base) = if catalog == "default" {
                (CatalogSpec::default_catalog(), Path::new(".").to_path_buf())
            } else {
                let path = Path::new(catalog);
                let text = std::fs::read_to_string(path).map_err(|e| Error::Io {
                    path: catalog.clone(),
                    message: e.to_string(),
                })?;
                let base = path.parent().unwrap_or(Path::new(".")).to_path_buf();
                (CatalogSpec::parse(&text)?, base)
            };
            let groups = expand_catalog(&spec, cap, &base)?;
            let entries = groups
                .par_iter()
                .map(|(name, g)| {
                    let mut entry = GroupReport::new(name, g, timed);
                    let verdict = entry.timed("verify_theorem", || verify_theorem(g))?;
                    entry.verdict = Some(verdict);
                    Ok(entry)
                })
                .collect::<Result<Vec<_>, Error>>()?;

            let verdicts = entries
                .iter()
                .filter_map(|e| e.verdict.as_ref().map(|v| (e, v)));
            let mut summary = CatalogSummary {
                groups: entries.len(),
                consistent: 0,
                property_a_holds: 0,
                nilpotent: 0,
                inconsistent: Vec::new(),
                all_consistent: true,
            };
            for (e, v) in verdicts {
                summary.consistent += v.consistent as usize;
                summary.property_a_holds += v.property_a.holds as usize;
                summary.nilpotent += v.nilpotent_sylow.nilpotent as usize;
                if !v.consistent {
                    summary.inconsistent.push(e.name.clone());
                }
            }
            summary.all_consistent = summary.inconsistent.is_empty();
            let code = if summary.all_consistent {
                EXIT_OK
            } else {
                EXIT_FAIL
            };

            let mut report = RunReport::new("verify-theorem", timed);
            report.groups = entries;
            report.summary = Some(summary);
            write(out, &report.to_json())?;
            Ok(code)
        }
    }
}
