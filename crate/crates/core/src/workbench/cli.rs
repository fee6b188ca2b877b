//! The `camina` command line.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::chartab::{character_table_with, exponent, ChartabLimits, SubgroupEmbedding, DEFAULT_CLASS_CAP};
use crate::conditions::{
    equal_order_coset, is_camina_pair, is_equal_order_pair, satisfies_ci, satisfies_f, satisfies_fpm, satisfies_o,
    ConditionVerdict,
};
use crate::error::{Error, Result};
use crate::perm::{ElementSet, GroupTable, DEFAULT_ORDER_CAP};
use crate::structure::{center, commutator_subgroup, is_nilpotent, is_normal, is_solvable, DEFAULT_SUBGROUP_CAP};
use crate::verify::{parse_claims, sweep, GroupContext, Skip, SweepConfig, SweepSummary};
use crate::workbench::cache::{CharTableCache, DEFAULT_CACHE_DIR};
use crate::workbench::catalog::{builtin, CatalogEntry, BUILTIN_LABELS};
use crate::workbench::groupfile::parse_group_file;
use crate::workbench::reports::persist_reports;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VIOLATION: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "camina",
    version,
    about = "Coset-conjugacy conditions on finite permutation groups"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalOpts {
    /// Largest group order that will be generated.
    #[arg(long, global = true, default_value_t = DEFAULT_ORDER_CAP)]
    pub order_cap: usize,
    /// Largest class count for character tables.
    #[arg(long, global = true, default_value_t = DEFAULT_CLASS_CAP)]
    pub class_cap: usize,
    /// Largest subgroup lattice that will be enumerated.
    #[arg(long, global = true, default_value_t = DEFAULT_SUBGROUP_CAP)]
    pub subgroup_cap: usize,
    /// Worker threads.
    #[arg(long, global = true, default_value_t = 1)]
    pub jobs: usize,
    /// Character-table cache directory.
    #[arg(long, global = true, default_value = DEFAULT_CACHE_DIR)]
    pub cache_dir: PathBuf,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Catalog operations.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Basic invariants of a group.
    Info(GroupArg),
    /// Character table of a group.
    Chartab(GroupArg),
    /// Canonical subgroup list.
    Subgroups(GroupArg),
    /// Evaluate a condition on one pair.
    Check(CheckArgs),
    /// List every subgroup satisfying a condition.
    Search(SearchArgs),
    /// Sweep claims over a catalog.
    Verify(VerifyArgs),
}

#[derive(Subcommand, Debug)]
pub enum CatalogAction {
    List,
}

#[derive(Args, Debug)]
pub struct GroupArg {
    /// Builtin label, `file:PATH`, or a path to a group file.
    #[arg(long)]
    pub group: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ConditionArg {
    Camina,
    F,
    Fpm,
    Ci,
    O,
    EqualOrder,
}

#[derive(Args, Debug)]
pub struct CheckArgs {
    #[arg(long)]
    pub group: String,
    #[arg(long, group = "sub", required = true)]
    pub subgroup_order: Option<usize>,
    #[arg(long, group = "sub")]
    pub subgroup_index: Option<usize>,
    /// Group file whose generators generate the subgroup.
    #[arg(long, group = "sub")]
    pub subgroup_file: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub condition: ConditionArg,
}

#[derive(Args, Debug)]
pub struct SearchArgs {
    #[arg(long)]
    pub group: String,
    #[arg(long, value_enum)]
    pub condition: ConditionArg,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// `builtin` or a directory of group files.
    #[arg(long, default_value = "builtin")]
    pub catalog: String,
    #[arg(long, default_value_t = 24)]
    pub max_order: usize,
    /// Comma-separated claim names, `lemmas` or `all`.
    #[arg(long, default_value = "all")]
    pub claims: String,
    /// Character-dependent claims are skipped above this order.
    #[arg(long)]
    pub char_max_order: Option<usize>,
    /// Report file (one JSON object per line).
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Do not read or write the character-table cache.
    #[arg(long)]
    pub no_cache: bool,
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::OrderCapExceeded { .. }
        | Error::SubgroupCapExceeded { .. }
        | Error::CharacterTableLimit { .. }
        | Error::Io(_)
        | Error::Json(_)
        | Error::Internal(_) => EXIT_RESOURCE,
        _ => EXIT_USAGE,
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_cli<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match run(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn limits(g: &GlobalOpts) -> ChartabLimits {
    ChartabLimits {
        order_cap: g.order_cap,
        class_cap: g.class_cap,
    }
}

/// Resolves a `--group` argument to a catalog entry.
pub fn resolve_group(source: &str) -> Result<CatalogEntry> {
    if let Some(path) = source.strip_prefix("file:") {
        return parse_group_file(Path::new(path));
    }
    match builtin(source) {
        Ok(e) => Ok(e),
        Err(e) if Path::new(source).is_file() => parse_group_file(Path::new(source)).map_err(|_| e),
        Err(e) => Err(e),
    }
}

fn context(source: &str, g: &GlobalOpts) -> Result<GroupContext> {
    let entry = resolve_group(source)?;
    let table = entry.table(g.order_cap)?;
    Ok(GroupContext::new(entry.label, table).with_limits(limits(g), g.subgroup_cap))
}

fn subgroup_list(ctx: &GroupContext) -> Result<&[ElementSet]> {
    ctx.subgroups().map_err(|s| match s {
        Skip::Cap(_) => Error::SubgroupCapExceeded { cap: ctx.subgroup_cap },
        Skip::Hard(m) => Error::Internal(m),
    })
}

fn gens_string(g: &GroupTable, h: &ElementSet) -> String {
    let gens = g.generators_of(h);
    if gens.is_empty() {
        return "()".to_string();
    }
    gens.iter()
        .map(|&x| g.element(x).to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn run(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    let g = &cli.global;
    match &cli.command {
        Command::Catalog {
            action: CatalogAction::List,
        } => {
            for label in BUILTIN_LABELS {
                let e = builtin(label)?;
                let order = e
                    .table(g.order_cap)
                    .map(|t| t.order().to_string())
                    .unwrap_or_else(|_| "?".into());
                writeln!(out, "{label}\tdegree {}\torder {order}", e.degree)?;
            }
        }
        Command::Info(a) => {
            let ctx = context(&a.group, g)?;
            let t = &ctx.table;
            writeln!(out, "group {}", ctx.label)?;
            writeln!(out, "degree {}", t.degree())?;
            writeln!(out, "order {}", t.order())?;
            writeln!(out, "generators {}", gens_string(t, &t.whole()))?;
            writeln!(out, "classes {}", ctx.classes.len())?;
            writeln!(out, "exponent {}", exponent(t))?;
            writeln!(out, "abelian {}", t.is_abelian())?;
            writeln!(out, "nilpotent {}", is_nilpotent(t))?;
            writeln!(out, "solvable {}", is_solvable(t))?;
            writeln!(out, "center {}", center(t).len())?;
            writeln!(out, "derived {}", commutator_subgroup(t).len())?;
        }
        Command::Chartab(a) => {
            let ctx = context(&a.group, g)?;
            let t = character_table_with(&ctx.table, &ctx.classes, ctx.limits)?;
            let cl = &ctx.classes;
            writeln!(out, "group {} order {} classes {}", ctx.label, t.order, t.len())?;
            let reps: Vec<String> = (0..cl.len())
                .map(|c| ctx.table.element(cl.rep(c)).to_string())
                .collect();
            writeln!(out, "reps\t{}", reps.join("\t"))?;
            let orders: Vec<String> = (0..cl.len()).map(|c| cl.element_order(c).to_string()).collect();
            writeln!(out, "orders\t{}", orders.join("\t"))?;
            let sizes: Vec<String> = t.class_sizes.iter().map(|s| s.to_string()).collect();
            writeln!(out, "sizes\t{}", sizes.join("\t"))?;
            for (i, chi) in t.irreducibles.iter().enumerate() {
                let vals: Vec<String> = chi.values.iter().map(|v| v.to_string()).collect();
                writeln!(out, "X.{}\t{}", i + 1, vals.join("\t"))?;
            }
            let degrees: Vec<String> = t.degrees().iter().map(|d| d.to_string()).collect();
            writeln!(out, "degrees {}", degrees.join(","))?;
        }
        Command::Subgroups(a) => {
            let ctx = context(&a.group, g)?;
            for (i, h) in subgroup_list(&ctx)?.iter().enumerate() {
                let normal = if is_normal(&ctx.table, h) { "normal" } else { "-" };
                writeln!(out, "{i}\torder {}\t{normal}\t{}", h.len(), gens_string(&ctx.table, h))?;
            }
        }
        Command::Check(a) => {
            let ctx = context(&a.group, g)?;
            let selected: Vec<(usize, ElementSet)> = if let Some(i) = a.subgroup_index {
                let subs = subgroup_list(&ctx)?;
                let h = subs.get(i).ok_or(Error::IndexOutOfRange {
                    index: i,
                    size: subs.len(),
                })?;
                vec![(i, h.clone())]
            } else if let Some(k) = a.subgroup_order {
                let found: Vec<_> = subgroup_list(&ctx)?
                    .iter()
                    .enumerate()
                    .filter(|(_, h)| h.len() == k)
                    .map(|(i, h)| (i, h.clone()))
                    .collect();
                if found.is_empty() {
                    return Err(Error::BadParameter(format!("no subgroup of order {k}")));
                }
                found
            } else {
                let path = a.subgroup_file.as_ref().expect("clap enforces one selector");
                let entry = parse_group_file(path)?;
                if entry.degree != ctx.table.degree() {
                    return Err(Error::DegreeMismatch {
                        left: ctx.table.degree(),
                        right: entry.degree,
                    });
                }
                let h = ctx.table.set_from_permutations(&entry.generators)?;
                let h = ctx.table.closure(&h.iter().collect::<Vec<_>>());
                let i = subgroup_list(&ctx)?.iter().position(|s| *s == h).unwrap_or(usize::MAX);
                vec![(i, h)]
            };
            for (i, h) in selected {
                let v = evaluate(&ctx, &h, a.condition)?;
                print_verdict(out, &ctx, i, &h, &v)?;
            }
        }
        Command::Search(a) => {
            let ctx = context(&a.group, g)?;
            let mut hits = 0;
            for (i, h) in subgroup_list(&ctx)?.iter().enumerate() {
                match evaluate(&ctx, h, a.condition) {
                    Ok(v) if v.holds => {
                        hits += 1;
                        writeln!(out, "{i}\torder {}\t{}", h.len(), gens_string(&ctx.table, h))?;
                    }
                    Ok(_) => {}
                    Err(Error::RejectedSubgroup(_)) | Err(Error::NotNormal) => {}
                    Err(e) => return Err(e),
                }
            }
            writeln!(out, "{hits} subgroups satisfy {:?}", a.condition)?;
        }
        Command::Verify(a) => return run_verify(a, g, out),
    }
    Ok(EXIT_OK)
}

fn evaluate(ctx: &GroupContext, h: &ElementSet, c: ConditionArg) -> Result<ConditionVerdict> {
    let g = &ctx.table;
    match c {
        ConditionArg::Camina => is_camina_pair(g, &ctx.classes, h),
        ConditionArg::F => satisfies_f(g, &ctx.classes, h),
        ConditionArg::Fpm => satisfies_fpm(g, &ctx.classes, h),
        ConditionArg::O => satisfies_o(g, h),
        ConditionArg::EqualOrder => {
            if is_normal(g, h) && !h.is_full() {
                is_equal_order_pair(g, h)
            } else {
                equal_order_coset(g, h)
            }
        }
        ConditionArg::Ci => {
            if h.is_trivial() || h.is_full() {
                return Err(Error::RejectedSubgroup("expected 1 < H < G"));
            }
            let gt = character_table_with(g, &ctx.classes, ctx.limits)?;
            let emb = SubgroupEmbedding::new(g, &ctx.classes, h)?;
            let ht = character_table_with(&emb.table, &emb.classes, ctx.limits)?;
            satisfies_ci(g, &ctx.classes, &gt, &emb, &ht)
        }
    }
}

fn print_verdict(
    out: &mut dyn Write,
    ctx: &GroupContext,
    i: usize,
    h: &ElementSet,
    v: &ConditionVerdict,
) -> Result<()> {
    let index = if i == usize::MAX {
        "-".to_string()
    } else {
        i.to_string()
    };
    writeln!(
        out,
        "{} subgroup {index} order {} [{}]: {} {}",
        ctx.label,
        h.len(),
        gens_string(&ctx.table, h),
        v.condition,
        if v.holds { "holds" } else { "fails" }
    )?;
    if let Some(w) = &v.witness {
        let show = |x: Option<usize>| {
            x.map(|x| ctx.table.element(x).to_string())
                .unwrap_or_else(|| "-".into())
        };
        writeln!(out, "  witness x={} h={} {}", show(w.x), show(w.h), w.detail)?;
    }
    Ok(())
}

fn catalog_entries(source: &str) -> Result<Vec<CatalogEntry>> {
    if source == "builtin" {
        return BUILTIN_LABELS.iter().map(|l| builtin(l)).collect();
    }
    let dir = Path::new(source);
    if !dir.is_dir() {
        return Err(Error::BadParameter(format!(
            "catalog `{source}` is neither `builtin` nor a directory"
        )));
    }
    let mut paths: Vec<PathBuf> = std::fs::read_dir(dir)?
        .map(|e| e.map(|e| e.path()))
        .collect::<std::io::Result<_>>()?;
    paths.retain(|p| p.is_file());
    paths.sort();
    paths.iter().map(|p| parse_group_file(p)).collect()
}

fn run_verify(a: &VerifyArgs, g: &GlobalOpts, out: &mut dyn Write) -> Result<i32> {
    let claims = parse_claims(&a.claims)?;
    let mut contexts = Vec::new();
    for entry in catalog_entries(&a.catalog)? {
        match entry.table(g.order_cap.min(a.max_order)) {
            Ok(t) => contexts.push(GroupContext::new(entry.label, t).with_limits(limits(g), g.subgroup_cap)),
            Err(Error::OrderCapExceeded { .. }) => {}
            Err(e) => return Err(e),
        }
    }
    let char_max = a.char_max_order.unwrap_or(usize::MAX);
    let cache = (!a.no_cache).then(|| CharTableCache::new(&g.cache_dir));
    let wants_chars = claims.iter().any(|c| c.needs_characters());
    if let (Some(cache), true) = (&cache, wants_chars) {
        for ctx in contexts.iter().filter(|c| c.order() <= char_max) {
            if let Some(t) = cache.get(&ctx.table) {
                ctx.set_character_table(t);
            }
        }
    }
    let cfg = SweepConfig {
        max_order: a.max_order,
        claims,
        char_max_order: char_max,
        jobs: g.jobs,
    };
    let reports = sweep(&contexts, &cfg)?;
    if let Some(cache) = &cache {
        for ctx in &contexts {
            if let Some(t) = ctx.computed_character_table() {
                if cache.get(&ctx.table).is_none() {
                    cache.put(&ctx.table, t)?;
                }
            }
        }
    }
    if let Some(path) = &a.out {
        persist_reports(&reports, path)?;
    }
    let summary = SweepSummary::from_reports(&reports);
    write_summary(out, &summary)?;
    Ok(if summary.violations() > 0 {
        EXIT_VIOLATION
    } else {
        EXIT_OK
    })
}

pub fn write_summary(out: &mut dyn Write, s: &SweepSummary) -> Result<()> {
    writeln!(out, "groups {} pairs {}", s.groups, s.pairs)?;
    writeln!(
        out,
        "{:<10} {:>7} {:>7} {:>9} {:>7} {:>7}",
        "claim", "pass", "vacuous", "violation", "skipped", "fired"
    )?;
    for (claim, c) in &s.per_claim {
        writeln!(
            out,
            "{:<10} {:>7} {:>7} {:>9} {:>7} {:>7}",
            claim.name(),
            c.pass,
            c.vacuous,
            c.violation,
            c.skipped,
            c.fired
        )?;
    }
    if !s.non_normal_f_pairs.is_empty() {
        let list: Vec<String> = s.non_normal_f_pairs.iter().map(|(l, i)| format!("{l}#{i}")).collect();
        writeln!(out, "non-normal F pairs: {}", list.join(" "))?;
    } else if s.per_claim.contains_key(&crate::verify::Claim::Theorem1) {
        writeln!(out, "non-normal F pairs: none")?;
    }
    writeln!(out, "violations {}", s.violations())?;
    Ok(())
}
