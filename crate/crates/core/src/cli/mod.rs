//! Command-line front end.
//!
//! [`parse_and_run`] takes the full argument vector and writes to the given
//! streams, so it can be driven from tests as well as from the binary.
//!
//! Exit status: `0` on success, `1` on a usage or parse error, `2` when a
//! computation is refused or a check fails (cap exceeded, precondition,
//! oracle mismatch, failing identity).

pub mod spec;

use std::io::Write;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Value};

pub use spec::{Cycles, GSetSpec, GroupSpec};

use crate::burnside::BurnsideRing;
use crate::colorings::{
    dihedral_closed_forms, exterior_character_series, necklace_frobenius_identity,
    necklace_product_identity, symmetric_character_series, verify_frobenius_corollary,
    verify_product_identity, ColoringProblem, DegreeSet, DihedralFamily, IdentityReport,
};
use crate::error::Error;
use crate::group::{GroupConfig, Permutation};
use crate::gset::GSet;
use crate::oracle::{oracle_burnside_decompose, oracle_mu_by_degree, OracleConfig};
use crate::series::{cyclotomic_identity_sides, necklace, RationalSeries};

/// Environment variable overriding the group-order cap.
pub const MAX_ORDER_ENV: &str = "BURNSIDE_MAX_ORDER";

#[derive(Parser, Debug)]
#[command(
    name = "burnside",
    version,
    about = "Burnside rings, marks and primitive colorings"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Limit on colorings or points enumerated by the oracle.
    #[arg(long, default_value_t = crate::oracle::DEFAULT_ORACLE_CAP, global = true)]
    oracle_cap: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Table of marks and its inverse over Φ(G).
    Marks {
        #[arg(long)]
        group: GroupSpec,
    },
    /// Decompose a G-set into transitive parts.
    Decompose {
        #[arg(long)]
        group: GroupSpec,
        #[arg(long)]
        gset: GSetSpec,
        /// Also tally orbits by stabilizer directly and compare.
        #[arg(long)]
        oracle: bool,
    },
    /// Orbit-type generating functions for colorings of a G-set.
    Colorings {
        #[arg(long)]
        group: GroupSpec,
        #[arg(long)]
        gset: GSetSpec,
        #[arg(long)]
        colors: u64,
        /// full, zeroone or set:0,1,3
        #[arg(long, default_value = "zeroone", value_parser = parse_degrees)]
        degrees: DegreeSet,
        /// Class index, label, or `all`. Defaults to the trivial subgroup.
        #[arg(long)]
        subgroup_class: Option<String>,
        #[arg(long, conflicts_with = "total")]
        series: bool,
        #[arg(long)]
        total: bool,
        #[arg(long)]
        truncation: Option<usize>,
        /// Enumerate colorings directly and compare degree by degree.
        #[arg(long)]
        oracle: bool,
    },
    /// Symmetric (or exterior) power characters at one group element.
    SymCharacters {
        #[arg(long)]
        group: GroupSpec,
        #[arg(long)]
        gset: GSetSpec,
        /// Group element in cycle notation, e.g. "(0 1)(2 3)".
        #[arg(long)]
        element: String,
        #[arg(long)]
        max_degree: usize,
        #[arg(long)]
        exterior: bool,
    },
    /// Number of primitive necklaces M(k, n).
    Necklace {
        #[arg(long)]
        colors: u64,
        #[arg(long)]
        beads: u64,
    },
    /// Check an identity on both sides.
    Verify {
        #[arg(long, value_enum)]
        identity: Identity,
        #[arg(long)]
        group: Option<GroupSpec>,
        #[arg(long, default_value = "regular")]
        gset: GSetSpec,
        #[arg(long, default_value_t = 2)]
        colors: u64,
        /// Second color count for the product identities.
        #[arg(long, default_value_t = 2)]
        other_colors: u64,
        /// Exponent r for the Frobenius identities.
        #[arg(long, default_value_t = 2)]
        power: u32,
        /// Necklace length for the classic identities.
        #[arg(long, default_value_t = 6)]
        beads: u64,
        /// Series degree for the cyclotomic identity.
        #[arg(long, default_value_t = 12)]
        max_degree: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Identity {
    Genem,
    Genef,
    Cyclotomic,
    Dihedral,
    NecklaceProduct,
    NecklaceFrobenius,
}

fn parse_degrees(s: &str) -> Result<DegreeSet, Error> {
    match s {
        "full" => Ok(DegreeSet::Full),
        "zeroone" => Ok(DegreeSet::ZeroOne),
        _ => {
            let list = s
                .strip_prefix("set:")
                .ok_or_else(|| Error::Parse(format!("bad degree set {s:?}")))?;
            let values = list
                .split(',')
                .map(|v| {
                    v.trim()
                        .parse::<u64>()
                        .map_err(|_| Error::Parse(format!("bad degree {v:?}")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            DegreeSet::explicit(values)
        }
    }
}

enum Failure {
    Usage(String),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) | Error::InvalidPermutation(_) => Failure::Usage(e.to_string()),
            _ => Failure::Check(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Check(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn group_config() -> Result<GroupConfig, Failure> {
    let mut config = GroupConfig::default();
    if let Ok(v) = std::env::var(MAX_ORDER_ENV) {
        config.closure_cap = v.trim().parse().map_err(|_| {
            Failure::Usage(format!(
                "{MAX_ORDER_ENV} must be a positive integer, got {v:?}"
            ))
        })?;
    }
    Ok(config)
}

struct Ctx<'a> {
    format: Format,
    oracle: OracleConfig,
    config: GroupConfig,
    out: &'a mut dyn Write,
}

impl Ctx<'_> {
    fn json(&mut self, value: Value) -> Outcome {
        writeln!(
            self.out,
            "{}",
            serde_json::to_string_pretty(&value).expect("serializable")
        )?;
        Ok(())
    }

    fn ring_and_set(
        &self,
        group: &GroupSpec,
        gset: &GSetSpec,
    ) -> Result<(Arc<BurnsideRing>, GSet), Failure> {
        let ring = Arc::new(group.ring(&self.config)?);
        let x = gset.build(group, ring.group())?;
        Ok((ring, x))
    }
}

fn series_json(s: &RationalSeries) -> Value {
    json!(s.to_json().coeffs)
}

fn matrix_text<T: ToString>(labels: &[String], rows: &[Vec<T>]) -> String {
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|r| r.iter().map(T::to_string).collect())
        .collect();
    let width = labels
        .iter()
        .map(String::len)
        .chain(cells.iter().flatten().map(String::len))
        .max()
        .unwrap_or(1);
    let mut out = format!("{:width$}", "");
    for l in labels {
        out += &format!("  {l:>width$}");
    }
    for (l, row) in labels.iter().zip(&cells) {
        out += &format!("\n{l:width$}");
        for c in row {
            out += &format!("  {c:>width$}");
        }
    }
    out
}

fn marks(ctx: &mut Ctx, group: &GroupSpec) -> Outcome {
    let ring = group.ring(&ctx.config)?;
    let labels = ring.classes().labels();
    let marks = &ring.marks().entries;
    let inverse = &ring.inverse().entries;
    match ctx.format {
        Format::Json => ctx.json(json!({
            "group": group.to_string(),
            "classes": labels,
            "marks": marks,
            "inverse": inverse.iter().map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>()).collect::<Vec<_>>(),
        })),
        Format::Text => {
            writeln!(ctx.out, "marks φ_V(G/W), row V, column W")?;
            writeln!(ctx.out, "{}", matrix_text(&labels, marks))?;
            writeln!(ctx.out, "inverse a_(H,V), row H, column V")?;
            writeln!(ctx.out, "{}", matrix_text(&labels, inverse))?;
            Ok(())
        }
    }
}

fn decompose(ctx: &mut Ctx, group: &GroupSpec, gset: &GSetSpec, oracle: bool) -> Outcome {
    let (ring, x) = ctx.ring_and_set(group, gset)?;
    let element = ring.decompose(&x)?;
    if oracle {
        let direct = oracle_burnside_decompose(&x, ring.classes(), &ctx.oracle)?;
        if direct != element {
            return Err(Failure::Check(format!(
                "oracle mismatch: marks give {element}, orbits give {direct}"
            )));
        }
    }
    match ctx.format {
        Format::Json => ctx.json(json!({
            "group": group.to_string(),
            "gset": gset.to_string(),
            "size": x.size(),
            "classes": ring.classes().labels(),
            "coefficients": element.coeffs.iter().map(ToString::to_string).collect::<Vec<_>>(),
        })),
        Format::Text => {
            writeln!(ctx.out, "{element}")?;
            if oracle {
                writeln!(ctx.out, "oracle: agrees")?;
            }
            Ok(())
        }
    }
}

fn select_classes(ring: &BurnsideRing, choice: Option<&str>) -> Result<Vec<usize>, Failure> {
    let classes = ring.classes();
    match choice {
        None => Ok(vec![classes.trivial_class()]),
        Some("all") => Ok((0..classes.len()).collect()),
        Some(s) => {
            if let Ok(i) = s.parse::<usize>() {
                if i < classes.len() {
                    return Ok(vec![i]);
                }
                return Err(Failure::Usage(format!(
                    "class index {i} out of range 0..{}",
                    classes.len()
                )));
            }
            classes.index_of_label(s).map(|i| vec![i]).ok_or_else(|| {
                Failure::Usage(format!(
                    "no class labelled {s:?}; have {}",
                    classes.labels().join(", ")
                ))
            })
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn colorings(
    ctx: &mut Ctx,
    group: &GroupSpec,
    gset: &GSetSpec,
    colors: u64,
    degrees: DegreeSet,
    subgroup_class: Option<&str>,
    total_only: bool,
    truncation: Option<usize>,
    oracle: bool,
) -> Outcome {
    let (ring, x) = ctx.ring_and_set(group, gset)?;
    let selected = select_classes(&ring, subgroup_class)?;
    if oracle && degrees != DegreeSet::ZeroOne {
        return Err(Failure::Usage("--oracle needs --degrees zeroone".into()));
    }
    let mut problem = ColoringProblem::new(ring.clone(), x.clone(), colors, degrees.clone())?;
    if let Some(t) = truncation {
        problem = problem.with_truncation(t);
    }
    let mut rows = Vec::new();
    for &h in &selected {
        let series = problem.mu_series(h)?;
        let total = (degrees == DegreeSet::ZeroOne).then(|| series.evaluate_at_one().to_integer());
        if oracle {
            let census = oracle_mu_by_degree(&x, colors, ring.classes(), h, &ctx.oracle)?;
            let from_census = RationalSeries::new(
                (0..=problem.truncation())
                    .map(|d| BigRational::from_integer(BigInt::from(census.count(d))))
                    .collect(),
                problem.truncation(),
            );
            if from_census != series {
                return Err(Failure::Check(format!(
                    "oracle mismatch at {}: series {series}, enumeration {from_census}",
                    ring.classes().label(h)
                )));
            }
        }
        rows.push((ring.classes().label(h).to_string(), series, total));
    }
    match ctx.format {
        Format::Json => {
            let items: Vec<Value> = rows
                .iter()
                .map(|(label, series, total)| {
                    let mut v = json!({
                        "class": label,
                        "series": series_json(series),
                        "total": total.as_ref().map(ToString::to_string),
                    });
                    if oracle {
                        v["oracle"] = json!("agrees");
                    }
                    v
                })
                .collect();
            if subgroup_class == Some("all") {
                ctx.json(Value::Array(items))
            } else {
                ctx.json(items.into_iter().next().expect("one class"))
            }
        }
        Format::Text => {
            let labelled = rows.len() > 1;
            for (label, series, total) in &rows {
                if labelled {
                    write!(ctx.out, "{label}: ")?;
                }
                match (total, total_only) {
                    (Some(t), true) => writeln!(ctx.out, "{t}")?,
                    (Some(t), false) => writeln!(ctx.out, "{series} (total {t})")?,
                    (None, _) => writeln!(ctx.out, "{series}")?,
                }
            }
            if oracle {
                writeln!(ctx.out, "oracle: agrees")?;
            }
            Ok(())
        }
    }
}

fn sym_characters(
    ctx: &mut Ctx,
    group: &GroupSpec,
    gset: &GSetSpec,
    element: &str,
    max_degree: usize,
    exterior: bool,
) -> Outcome {
    let (ring, x) = ctx.ring_and_set(group, gset)?;
    let g = ring.group();
    let p = Permutation::parse_cycles(g.degree(), element)?;
    let idx = g
        .index_of(&p)
        .ok_or_else(|| Failure::Usage(format!("{p} is not an element of {group}")))?;
    let series = if exterior {
        exterior_character_series(&x, idx, max_degree)?
    } else {
        symmetric_character_series(&x, idx, max_degree)?
    };
    match ctx.format {
        Format::Json => ctx.json(json!({
            "element": p.to_string(),
            "kind": if exterior { "exterior" } else { "symmetric" },
            "series": series_json(&series),
        })),
        Format::Text => {
            writeln!(ctx.out, "{series}")?;
            Ok(())
        }
    }
}

fn necklace_cmd(ctx: &mut Ctx, colors: u64, beads: u64) -> Outcome {
    let value = necklace(colors, beads)?;
    match ctx.format {
        Format::Json => {
            ctx.json(json!({"colors": colors, "beads": beads, "value": value.to_string()}))
        }
        Format::Text => {
            writeln!(ctx.out, "M({colors},{beads}) = {value}")?;
            Ok(())
        }
    }
}

fn report_json(r: &IdentityReport) -> Value {
    json!({
        "identity": r.identity,
        "holds": r.all_hold(),
        "checks": r.checks.iter().map(|c| json!({
            "label": c.label,
            "lhs": c.lhs.to_string(),
            "rhs": c.rhs.to_string(),
            "holds": c.holds(),
        })).collect::<Vec<_>>(),
    })
}

#[allow(clippy::too_many_arguments)]
fn verify(
    ctx: &mut Ctx,
    identity: Identity,
    group: Option<&GroupSpec>,
    gset: &GSetSpec,
    colors: u64,
    other_colors: u64,
    power: u32,
    beads: u64,
    max_degree: usize,
) -> Outcome {
    let need_group = || group.ok_or_else(|| Failure::Usage("this identity needs --group".into()));
    let report = match identity {
        Identity::Genem => {
            let g = need_group()?;
            let (ring, x) = ctx.ring_and_set(g, gset)?;
            verify_product_identity(&ring, &x, colors, other_colors)?
        }
        Identity::Genef => {
            let g = need_group()?;
            let (ring, x) = ctx.ring_and_set(g, gset)?;
            verify_frobenius_corollary(&ring, &x, colors, power)?
        }
        Identity::NecklaceProduct => IdentityReport {
            identity: "necklace product identity".into(),
            checks: vec![necklace_product_identity(colors, other_colors, beads)?],
        },
        Identity::NecklaceFrobenius => IdentityReport {
            identity: "necklace frobenius identity".into(),
            checks: vec![necklace_frobenius_identity(colors, power, beads)?],
        },
        Identity::Cyclotomic => {
            let (lhs, rhs) = cyclotomic_identity_sides(colors, max_degree)?;
            let holds = lhs == rhs;
            return match ctx.format {
                Format::Json => ctx.json(json!({
                    "identity": "cyclotomic identity",
                    "holds": holds,
                    "lhs": series_json(&lhs),
                    "rhs": series_json(&rhs),
                })),
                Format::Text => {
                    writeln!(
                        ctx.out,
                        "cyclotomic identity, k = {colors}, up to t^{max_degree}"
                    )?;
                    writeln!(ctx.out, "  1/(1 - kt) = {lhs}")?;
                    writeln!(ctx.out, "  product    = {rhs}")?;
                    writeln!(ctx.out, "{}", if holds { "holds" } else { "FAILS" })?;
                    if holds {
                        Ok(())
                    } else {
                        Err(Failure::Check("cyclotomic identity fails".into()))
                    }
                }
            };
        }
        Identity::Dihedral => {
            let n = match need_group()? {
                GroupSpec::Dihedral(n) => *n,
                other => {
                    return Err(Failure::Usage(format!(
                        "dihedral closed forms need dihedral:N, not {other}"
                    )))
                }
            };
            let family = match gset {
                GSetSpec::Prism => DihedralFamily::Prism,
                GSetSpec::NgonDihedral | GSetSpec::Ngon => DihedralFamily::NgonDihedral,
                other => {
                    return Err(Failure::Usage(format!(
                        "dihedral closed forms need prism or ngon-dihedral, not {other}"
                    )))
                }
            };
            let r = dihedral_closed_forms(n, colors, family)?;
            return match ctx.format {
                Format::Json => ctx.json(json!({
                    "identity": "dihedral closed forms",
                    "family": family.to_string(),
                    "n": n,
                    "colors": colors,
                    "case": format!("{:?}", r.case),
                    "series": series_json(&r.series),
                    "total": r.total.to_string(),
                    "class_identities": r.corollary_checks,
                    "holds": true,
                })),
                Format::Text => {
                    writeln!(
                        ctx.out,
                        "{family}, n = {n}, k = {colors}, case {:?}",
                        r.case
                    )?;
                    writeln!(ctx.out, "  series: {} (total {})", r.series, r.total)?;
                    writeln!(ctx.out, "  closed form total: {}", r.total)?;
                    writeln!(
                        ctx.out,
                        "  class identities checked: {}",
                        r.corollary_checks
                    )?;
                    writeln!(ctx.out, "holds")?;
                    Ok(())
                }
            };
        }
    };
    match ctx.format {
        Format::Json => ctx.json(report_json(&report))?,
        Format::Text => {
            write!(ctx.out, "{report}")?;
            writeln!(
                ctx.out,
                "{}",
                if report.all_hold() { "holds" } else { "FAILS" }
            )?;
        }
    }
    if report.all_hold() {
        Ok(())
    } else {
        Err(Failure::Check(format!("{} fails", report.identity)))
    }
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> Outcome {
    let mut ctx = Ctx {
        format: cli.format,
        oracle: OracleConfig {
            cap: cli.oracle_cap,
        },
        config: group_config()?,
        out,
    };
    match cli.command {
        Command::Marks { group } => marks(&mut ctx, &group),
        Command::Decompose {
            group,
            gset,
            oracle,
        } => decompose(&mut ctx, &group, &gset, oracle),
        Command::Colorings {
            group,
            gset,
            colors,
            degrees,
            subgroup_class,
            series: _,
            total,
            truncation,
            oracle,
        } => colorings(
            &mut ctx,
            &group,
            &gset,
            colors,
            degrees,
            subgroup_class.as_deref(),
            total,
            truncation,
            oracle,
        ),
        Command::SymCharacters {
            group,
            gset,
            element,
            max_degree,
            exterior,
        } => sym_characters(&mut ctx, &group, &gset, &element, max_degree, exterior),
        Command::Necklace { colors, beads } => necklace_cmd(&mut ctx, colors, beads),
        Command::Verify {
            identity,
            group,
            gset,
            colors,
            other_colors,
            power,
            beads,
            max_degree,
        } => verify(
            &mut ctx,
            identity,
            group.as_ref(),
            &gset,
            colors,
            other_colors,
            power,
            beads,
            max_degree,
        ),
    }
}

/// Runs the command line `args` (including the program name).
pub fn parse_and_run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{rendered}")
            } else {
                write!(err, "{rendered}")
            };
            return code;
        }
    };
    match dispatch(cli, out) {
        Ok(()) => 0,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}\n\nFor more information, try '--help'.");
            1
        }
        Err(Failure::Check(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}
