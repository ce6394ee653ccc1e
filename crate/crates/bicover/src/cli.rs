//! The `bicover` command line.
//!
//! [`run`] does all the work and returns what would be printed, so tests can
//! drive the front end in-process. Exit codes: 0 success, 1 invalid input,
//! 2 internal inconsistency.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use bicover_core::deformations::{
    manetti_check, natural_deformation_profile, pair_verdict, HomeoStatus, NondefStatus,
};
use bicover_core::invariants::InvariantRecord;
use bicover_core::search::{SearchConfig, SearchReport};
use bicover_core::singularities::{
    link_lens_space, recognize_class_t, smoothing_family, CyclicQuotient, SingularityError,
};
use bicover_core::CoverType;

use crate::config::ConfigFile;
use crate::json::{
    DeformProfileJson, ErrorJson, InvariantRecordJson, ManettiJson, PairVerdictJson,
    SignatureGroupJson, SingularityJson, SummaryJson,
};
use crate::table::{opt, KvTable};
use crate::{Error, THREADS_ENV};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Table,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "bicover",
    version,
    about = "Invariants, comparisons and searches for bidouble covers of P1 x P1"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Invariants of one cover type, e.g. "((5,2),(3,2),(1,2))".
    Invariants { cover: String },
    /// Homeomorphism and non-deformation-equivalence verdict for two types.
    Compare { first: String, second: String },
    /// Enumerate types in a box and group them by signature.
    Search(SearchArgs),
    /// Class T recognition for a cyclic quotient "1/m(1,q)".
    Singularity { quotient: String },
    /// Natural deformation degrees and parameter counts.
    DeformProfile { cover: String },
    /// Check the non-deformation-equivalence hypotheses for (a, b, c, k).
    #[command(allow_negative_numbers = true)]
    Manetti { a: i64, b: i64, c: i64, k: i64 },
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    /// Bound on every n_j.
    #[arg(long)]
    pub max_n: Option<i64>,
    /// Bound on every m_j.
    #[arg(long)]
    pub max_m: Option<i64>,
    /// Keep covers that are not of general type (they are still never grouped).
    #[arg(long)]
    pub no_general_type_filter: bool,
    /// Bucket Z/2 covers too, without a homeomorphism claim.
    #[arg(long)]
    pub no_simply_connected_filter: bool,
    /// Skip the pairwise non-deformation-equivalence check.
    #[arg(long)]
    pub no_certify: bool,
    /// Worker threads (overrides the config file and BICOVER_THREADS).
    #[arg(long)]
    pub threads: Option<usize>,
    /// key=value config file; flags win on conflict.
    #[arg(long)]
    pub config: Option<PathBuf>,
}

/// What a run printed and how it ended.
#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    let mut out = Outcome::default();
    match execute(&cli, &mut out) {
        Ok(()) => out,
        Err(e) => {
            out.code = e.exit_code();
            out.stderr.push_str(&render_error(cli.format, &e));
            out
        }
    }
}

fn render_error(format: Format, e: &Error) -> String {
    match format {
        Format::Json => {
            let j = ErrorJson {
                error: e.kind().to_owned(),
                message: e.to_string(),
            };
            to_json_line(&j)
        }
        Format::Table => format!("error [{}]: {e}\n", e.kind()),
    }
}

fn to_json_line<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string(v).expect("wire types serialize");
    s.push('\n');
    s
}

fn parse_cover(s: &str) -> Result<CoverType, Error> {
    Ok(s.parse::<CoverType>()?)
}

fn execute(cli: &Cli, out: &mut Outcome) -> Result<(), Error> {
    let format = cli.format;
    match &cli.command {
        Command::Invariants { cover } => {
            let t = parse_cover(cover)?;
            let rec = InvariantRecord::compute(&t)?;
            if !rec.satisfies_bmy() {
                let _ = writeln!(
                    out.stderr,
                    "warning: K^2 = {} exceeds 9 chi = {}",
                    rec.k_squared,
                    9 * rec.chi
                );
            }
            out.stdout = match format {
                Format::Json => to_json_line(&InvariantRecordJson::from(&rec)),
                Format::Table => invariants_table(&t, &rec),
            };
        }
        Command::Compare { first, second } => {
            let (t1, t2) = (parse_cover(first)?, parse_cover(second)?);
            let v = pair_verdict(&t1, &t2)?;
            out.stdout = match format {
                Format::Json => to_json_line(&PairVerdictJson::from(&v)),
                Format::Table => {
                    let mut t = KvTable::new();
                    t.row("first", t1).row("second", t2);
                    t.row(
                        "homeomorphic",
                        match v.homeo {
                            HomeoStatus::Yes => "yes (canonical classes matched)",
                            HomeoStatus::Unknown => "unknown",
                        },
                    );
                    t.row("signature", opt(v.signature));
                    t.row(
                        "not deformation equivalent",
                        match v.nondef {
                            NondefStatus::Certified => "certified",
                            NondefStatus::Unknown => "unknown",
                        },
                    );
                    if let Some(c) = &v.certificate {
                        t.row(
                            "certificate (a,b,c,k)",
                            format!("({},{},{},{})", c.a, c.b, c.c, c.k),
                        );
                    }
                    t.render()
                }
            };
        }
        Command::Search(args) => {
            let (cfg, threads) = search_config(args)?;
            let started = Instant::now();
            let report = crate::parallel::run_search(&cfg, threads)?;
            out.stdout = match format {
                Format::Json => search_json(&report),
                Format::Table => search_table(&report),
            };
            let _ = writeln!(
                out.stderr,
                "wall time: {} ms",
                started.elapsed().as_millis()
            );
        }
        Command::Singularity { quotient } => {
            let s: CyclicQuotient = quotient.parse()?;
            let datum = match recognize_class_t(&s) {
                Ok(d) => Some(d),
                Err(SingularityError::NotClassT { .. }) => None,
                Err(e) => return Err(e.into()),
            };
            out.stdout = match format {
                Format::Json => to_json_line(&SingularityJson::new(&s, datum.as_ref())),
                Format::Table => match datum {
                    None => format!("{s}: not class T\n"),
                    Some(d) => {
                        let family = smoothing_family(&d);
                        let (m, q) = link_lens_space(&d);
                        let w = family.action_weights;
                        let mut t = KvTable::new();
                        t.row("singularity", s)
                            .row("class T", "yes")
                            .row("(d,n,a)", format!("({},{},{})", d.d(), d.n(), d.a()))
                            .row("presentation", d.cyclic_quotient())
                            .row("link", format!("L({m},{q})"))
                            .row("smoothing family", family.render_ascii())
                            .row(
                                "group",
                                format!(
                                    "mu_{} acting with weights ({},{},{})",
                                    family.group_order, w[0], w[1], w[2]
                                ),
                            )
                            .row("base dimension", family.parameter_count());
                        t.render()
                    }
                },
            };
        }
        Command::DeformProfile { cover } => {
            let t = parse_cover(cover)?;
            let p = natural_deformation_profile(&t);
            out.stdout = match format {
                Format::Json => to_json_line(&DeformProfileJson::from(&p)),
                Format::Table => {
                    let mut s = String::from("branch  f degree  h0(f)  phi degree  h0(phi)\n");
                    for j in 0..3 {
                        let _ = writeln!(
                            s,
                            "D{:<7}{:<10}{:<7}{:<12}{}",
                            j + 1,
                            p.f_degrees[j].to_string(),
                            p.f_dims[j],
                            p.phi_degrees[j].to_string(),
                            p.phi_dims[j]
                        );
                    }
                    let _ = writeln!(s, "total parameters: {}", p.total_params);
                    s
                }
            };
        }
        Command::Manetti { a, b, c, k } => {
            let cert = manetti_check(*a, *b, *c, *k);
            out.stdout = match format {
                Format::Json => to_json_line(&ManettiJson::from(&cert)),
                Format::Table => {
                    if cert.satisfied {
                        let (s, s2) = cert.types()?;
                        format!("certified: not deformation equivalent\ntypes: {s} and {s2}\n")
                    } else {
                        let names: Vec<_> = cert.violated.iter().map(|v| v.name()).collect();
                        format!("not certified: violated {}\n", names.join(", "))
                    }
                }
            };
        }
    }
    Ok(())
}

fn invariants_table(t: &CoverType, r: &InvariantRecord) -> String {
    let (kx, ky) = r.canonical_bidegree;
    let mut tab = KvTable::new();
    tab.row("type", t)
        .row("canonical form", t.canonicalize())
        .row("class", t.class())
        .row("n", r.n)
        .row("m", r.m)
        .row("chi", r.chi)
        .row("K^2", r.k_squared)
        .row("q", opt(r.q))
        .row("p_g", opt(r.p_g))
        .row("K bidegree", format!("({kx},{ky})"))
        .row("divisibility", opt(r.divisibility.as_ref()))
        .row("pi1", r.pi1)
        .row("general type", if r.general_type { "yes" } else { "no" });
    tab.render()
}

fn search_config(args: &SearchArgs) -> Result<(SearchConfig, Option<usize>), Error> {
    let file = match &args.config {
        Some(path) => ConfigFile::load(path)?,
        None => ConfigFile::default(),
    };
    let defaults = SearchConfig::default();
    let cfg = SearchConfig {
        max_n: args.max_n.or(file.max_n).unwrap_or(defaults.max_n),
        max_m: args.max_m.or(file.max_m).unwrap_or(defaults.max_m),
        require_general_type: !args.no_general_type_filter
            && file.general_type_filter.unwrap_or(true),
        require_simply_connected: !args.no_simply_connected_filter
            && file.simply_connected_filter.unwrap_or(true),
        certify_nondef: !args.no_certify && file.certify.unwrap_or(true),
    };
    if cfg.max_n < 0 || cfg.max_m < 0 {
        return Err(Error::Bounds(format!(
            "bounds must be nonnegative, got ({}, {})",
            cfg.max_n, cfg.max_m
        )));
    }
    let env_threads = match std::env::var(THREADS_ENV) {
        Ok(v) => Some(v.trim().parse::<usize>().map_err(|e| Error::Config {
            line: 0,
            message: format!("{THREADS_ENV}={v:?}: {e}"),
        })?),
        Err(_) => None,
    };
    Ok((cfg, args.threads.or(file.threads).or(env_threads)))
}

fn search_json(report: &SearchReport) -> String {
    let mut s = String::new();
    for g in &report.groups {
        s.push_str(&to_json_line(&SignatureGroupJson::from(g)));
    }
    s.push_str(&to_json_line(&SummaryJson::new(report)));
    s
}

fn search_table(report: &SearchReport) -> String {
    let mut s = String::new();
    for (i, g) in report.groups.iter().enumerate() {
        let _ = writeln!(
            s,
            "group {}  signature {}  members {}{}",
            i + 1,
            g.signature,
            g.members.len(),
            if g.homeomorphism_claim() {
                ""
            } else {
                "  (no homeomorphism claim)"
            }
        );
        for (j, m) in g.members.iter().enumerate() {
            let _ = writeln!(s, "  #{:<3} {m}", j + 1);
        }
        for (a, b, c) in &g.certified_pairs {
            let _ = writeln!(
                s,
                "  certified not deformation equivalent: #{} vs #{}  (a,b,c,k) = ({},{},{},{})",
                a + 1,
                b + 1,
                c.a,
                c.b,
                c.c,
                c.k
            );
        }
    }
    let sum = SummaryJson::new(report).summary;
    let _ = writeln!(s, "types enumerated: {}", sum.enumerated);
    let _ = writeln!(
        s,
        "skipped: {} (not general type {}, not simply connected {}, ambiguous divisibility {}, genus undetermined {})",
        sum.skipped,
        sum.not_general_type,
        sum.not_simply_connected,
        sum.ambiguous_divisibility,
        sum.genus_undetermined
    );
    let _ = writeln!(s, "groups: {}", sum.groups);
    let _ = writeln!(s, "certified pairs: {}", sum.certified_pairs);
    s
}
