//! Command-line front end. Exit codes: 0 success, 1 domain error, 2 usage error.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::bijections::{
    delete_max, delete_max_in_block, insert_max, insert_max_in_block, majorize_inject, map_v, map_w, reorder_blocks,
    swap_adjacent_traced, transfer_step_traced, BijectionTrace, MapName, TraceStep,
};
use crate::enumeration::{count_capped, gen_ascending_capped, CountTable, Selector, DEFAULT_SIZE_CAP};
use crate::error::Error;
use crate::perm::{BlockPermutation, Composition, TwoBlockView};
use crate::tableaux::{hook_count, skew_count, Shape, SkewShape};
use crate::verify::{run_suite, Suite};

#[derive(Debug, Parser)]
#[command(name = "blockperm", version, about = "Block-ascending permutations avoiding 12...m")]
struct Cli {
    /// Emit JSON instead of plain text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Count L_{k+2}(comp) (--k) or D_h(comp) (--lis) by enumeration.
    Count(CountArgs),
    /// List ascending permutations of a composition, optionally filtered.
    Enumerate(EnumerateArgs),
    /// Apply one of the bijections or injections to a permutation.
    Map(MapArgs),
    /// Standard Young tableau counts.
    #[command(subcommand)]
    Tableau(TableauCommand),
    /// Run exhaustive verification suites.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
struct Family {
    /// Avoid 12...(k+2), i.e. LIS <= k+1.
    #[arg(long = "k")]
    k: Option<usize>,
    /// LIS exactly H.
    #[arg(long = "lis", conflicts_with = "k")]
    lis: Option<usize>,
}

impl Family {
    fn selector(&self) -> Option<Selector> {
        self.k.map(Selector::K).or(self.lis.map(Selector::Lis))
    }
}

#[derive(Debug, Args)]
struct CountArgs {
    #[command(flatten)]
    family: Family,
    #[arg(long, value_parser = parse_comp)]
    comp: Composition,
    /// Print the whole table (every h, or every k with --k) as CSV.
    #[arg(long)]
    table: bool,
    #[arg(long, default_value_t = DEFAULT_SIZE_CAP)]
    cap: usize,
}

#[derive(Debug, Args)]
struct EnumerateArgs {
    #[command(flatten)]
    family: Family,
    #[arg(long, value_parser = parse_comp)]
    comp: Composition,
    #[arg(long, default_value_t = DEFAULT_SIZE_CAP)]
    cap: usize,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum MapKind {
    W,
    V,
    Swap,
    Sort,
    Transfer,
    Inject,
    InsertMax,
    DeleteMax,
}

#[derive(Debug, Args)]
struct MapArgs {
    kind: MapKind,
    #[arg(long, value_parser = parse_perm)]
    perm: BlockPermutation,
    /// 1-based block index.
    #[arg(long)]
    index: Option<usize>,
    #[arg(long, value_parser = parse_comp)]
    target: Option<Composition>,
    #[arg(long = "k")]
    k: Option<usize>,
    /// Also print the step-by-step trace as JSON.
    #[arg(long)]
    trace: bool,
}

#[derive(Debug, Subcommand)]
enum TableauCommand {
    /// Count standard fillings of outer/inner.
    Count {
        #[arg(long, value_parser = parse_comp)]
        outer: Composition,
        #[arg(long, value_parser = parse_comp, default_value = "")]
        inner: Composition,
        /// Also print the diagram.
        #[arg(long)]
        draw: bool,
    },
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long, default_value = "all", value_parser = |s: &str| s.parse::<Suite>())]
    suite: Suite,
    #[arg(long, default_value_t = 7)]
    max_size: usize,
}

fn parse_comp(s: &str) -> Result<Composition, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_perm(s: &str) -> Result<BlockPermutation, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

enum Failure {
    Usage(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let sink: &mut dyn Write = if code == 0 { out } else { err };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match dispatch(&cli, out) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(Failure::Domain(e)) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<i32, Failure> {
    let text = match &cli.command {
        Command::Count(args) => count(args, cli.json)?,
        Command::Enumerate(args) => enumerate(args, cli.json)?,
        Command::Map(args) => map(args, cli.json)?,
        Command::Tableau(TableauCommand::Count { outer, inner, draw }) => tableau(outer.parts(), inner.parts(), *draw, cli.json)?,
        Command::Verify(args) => {
            let reports = run_suite(args.suite, args.max_size);
            let ok = reports.iter().all(|r| r.passed());
            let text = if cli.json {
                serde_json::to_string(&reports).expect("reports serialize") + "\n"
            } else {
                reports.iter().map(|r| format!("{r}\n")).collect()
            };
            let _ = out.write_all(text.as_bytes());
            return Ok(if ok { 0 } else { 1 });
        }
    };
    let _ = out.write_all(text.as_bytes());
    Ok(0)
}

fn count(args: &CountArgs, json: bool) -> Result<String, Failure> {
    if args.table {
        let table = match args.family.selector() {
            Some(Selector::K(_)) => CountTable::avoidance_table(&args.comp, args.cap)?,
            _ => CountTable::lis_table(&args.comp, args.cap)?,
        };
        return Ok(if json { table.to_json() + "\n" } else { table.to_csv() });
    }
    let selector = args
        .family
        .selector()
        .ok_or_else(|| Failure::Usage("count needs --k or --lis".into()))?;
    let n = count_capped(selector, &args.comp, args.cap)?;
    Ok(if json {
        let mut v = json!({ "comp": args.comp, "count": n.to_string() });
        match selector {
            Selector::K(k) => v["k"] = json!(k),
            Selector::Lis(h) => v["lis"] = json!(h),
        }
        format!("{v}\n")
    } else {
        format!("{n}\n")
    })
}

fn enumerate(args: &EnumerateArgs, json: bool) -> Result<String, Failure> {
    let selector = args.family.selector();
    let perms = gen_ascending_capped(&args.comp, args.cap)?.filter(|pi| match selector {
        None => true,
        Some(Selector::K(k)) => pi.lis_length() <= k + 1,
        Some(Selector::Lis(h)) => pi.lis_length() == h,
    });
    let mut text = String::new();
    for pi in perms {
        if json {
            text.push_str(&serde_json::to_string(&pi).expect("permutation serializes"));
        } else {
            text.push_str(&pi.to_string());
        }
        text.push('\n');
    }
    Ok(text)
}

fn need<T: Copy>(value: Option<T>, flag: &str, kind: MapKind) -> Result<T, Failure> {
    value.ok_or_else(|| Failure::Usage(format!("map {kind:?} needs {flag}").to_lowercase()))
}

fn two_block_step(pi: &BlockPermutation, name: MapName) -> Result<(BlockPermutation, BijectionTrace), Failure> {
    let view = TwoBlockView::try_from(pi)?;
    let image = match name {
        MapName::W => map_w(&view)?,
        _ => map_v(&view)?,
    }
    .to_block_permutation();
    let trace = BijectionTrace {
        steps: vec![TraceStep {
            map: name,
            block: 1,
            before: pi.clone(),
            after: image.clone(),
        }],
    };
    Ok((image, trace))
}

fn single_step(pi: &BlockPermutation, image: BlockPermutation, map: MapName) -> (BlockPermutation, BijectionTrace) {
    let trace = BijectionTrace {
        steps: vec![TraceStep {
            map,
            block: 1,
            before: pi.clone(),
            after: image.clone(),
        }],
    };
    (image, trace)
}

fn map(args: &MapArgs, json: bool) -> Result<String, Failure> {
    let pi = &args.perm;
    let kind = args.kind;
    let (image, trace) = match kind {
        MapKind::W => two_block_step(pi, MapName::W)?,
        MapKind::V => two_block_step(pi, MapName::V)?,
        MapKind::Swap => swap_adjacent_traced(pi, need(args.index, "--index", kind)?)?,
        MapKind::Transfer => transfer_step_traced(pi, need(args.index, "--index", kind)?)?,
        MapKind::Sort => {
            let target = args.target.clone().unwrap_or_else(|| pi.comp().sorted_ascending());
            reorder_blocks(pi, &target)?
        }
        MapKind::Inject => {
            let target = args
                .target
                .as_ref()
                .ok_or_else(|| Failure::Usage("map inject needs --target".into()))?;
            majorize_inject(pi, target)?
        }
        MapKind::InsertMax => {
            let k = need(args.k, "--k", kind)?;
            match args.index {
                None | Some(1) => single_step(pi, insert_max(pi, k)?, MapName::InsertMax),
                Some(index) => insert_max_in_block(pi, index, k)?,
            }
        }
        MapKind::DeleteMax => {
            let k = need(args.k, "--k", kind)?;
            match args.index {
                None | Some(1) => single_step(pi, delete_max(pi, k)?, MapName::DeleteMax),
                Some(index) => delete_max_in_block(pi, index, k)?,
            }
        }
    };
    Ok(if json {
        let mut v = json!({ "perm": image.to_string(), "comp": image.comp(), "values": image.values() });
        if args.trace {
            v["trace"] = serde_json::to_value(&trace).expect("trace serializes");
        }
        format!("{v}\n")
    } else if args.trace {
        format!("{image}\n{}\n", trace.to_json())
    } else {
        format!("{image}\n")
    })
}

fn tableau(outer: &[usize], inner: &[usize], draw: bool, json: bool) -> Result<String, Failure> {
    let shape = SkewShape::new(Shape::new(outer.to_vec())?, Shape::new(inner.to_vec())?)?;
    let n = if inner.is_empty() {
        hook_count(shape.outer())?
    } else {
        skew_count(&shape)?
    };
    Ok(if json {
        let mut v = json!({ "outer": outer, "inner": inner, "count": n.to_string() });
        if draw {
            v["diagram"] = json!(shape.draw());
        }
        format!("{v}\n")
    } else if draw {
        format!("{}{n}\n", shape.draw())
    } else {
        format!("{n}\n")
    })
}
