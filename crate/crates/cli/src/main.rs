use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use sgp_core::render::{
    betti_text, gap_list, monomial_table_by_enumeration, partition_table_by_enumeration,
};
use sgp_core::verify::{self, ArithGrid, SweepConfig};
use sgp_core::{
    monomial_table, partition_table, ArithSemigroup, BettiClassification, Error, Factorization,
    MonomialStyle, Semigroup, TripleSemigroup,
};

#[derive(Parser, Debug)]
#[command(
    name = "sgp",
    version,
    about = "Factorizations, Apery sets and Betti elements of numerical semigroups"
)]
struct Cli {
    /// Comma-separated generators, e.g. 6,9,20
    #[arg(long, global = true, allow_hyphen_values = true, conflicts_with = "a")]
    gens: Option<String>,

    /// Shorthand for the generators a, a+1, a+2
    #[arg(long, global = true, allow_negative_numbers = true)]
    a: Option<i64>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Use closed forms only; fail where they do not apply
    #[arg(long, global = true, conflicts_with = "oracle")]
    fast: bool,

    /// Use brute-force enumeration only
    #[arg(long, global = true)]
    oracle: bool,

    /// Upper end of the Betti element scan for enumeration
    #[arg(long, global = true)]
    betti_bound: Option<i64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Grouping {
    None,
    Length,
    Denumerant,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generators, Frobenius number, Betti elements and ULF size
    Info,
    /// All factorizations of R
    Factorize {
        #[arg(allow_negative_numbers = true)]
        r: i64,
    },
    /// Members s with s - x outside the semigroup for every listed x
    Apery {
        #[arg(required = true, allow_negative_numbers = true)]
        xs: Vec<i64>,
    },
    /// Betti elements, split into balanced and unbalanced
    Betti,
    /// Elements whose factorizations all have the same length
    Ulf {
        #[arg(long, value_enum, default_value_t = Grouping::None)]
        by: Grouping,
        /// Listing window, needed only when every element has one length
        #[arg(long)]
        window: Option<i64>,
    },
    /// Length-by-denumerant grid for <a, a+1, a+2>
    Table {
        /// Show monomial bases instead of (r, iota, c)
        #[arg(long)]
        monomials: bool,
        #[arg(long)]
        max_length: Option<i64>,
        #[arg(long)]
        max_denumerant: Option<i64>,
        /// Unicode superscripts in monomials
        #[arg(long)]
        unicode: bool,
    },
    /// A minimal presentation
    Presentation,
    /// Sweep closed forms against enumeration
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long, default_value_t = 3, allow_negative_numbers = true)]
    a_min: i64,
    #[arg(long, default_value_t = 25, allow_negative_numbers = true)]
    a_max: i64,
    /// Window above the first two-length element (default 3a)
    #[arg(long, allow_negative_numbers = true)]
    r_margin: Option<i64>,
    /// Seed for the random semigroup sample
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 30)]
    samples: usize,
    #[arg(long, default_value_t = 30)]
    max_generator: i64,
    #[arg(long, default_value_t = 5)]
    arith_a_min: i64,
    #[arg(long, default_value_t = 20)]
    arith_a_max: i64,
    #[arg(long, default_value_t = 3)]
    arith_d_max: i64,
    #[arg(long, default_value_t = 4)]
    arith_n_max: i64,
    /// Skip the arithmetic-sequence grid
    #[arg(long)]
    no_arith: bool,
}

enum Failure {
    Usage(String),
    NotMember(String),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NotMember(_) => Failure::NotMember(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

type CliResult<T> = Result<T, Failure>;

#[derive(Clone, Copy, PartialEq, Eq)]
enum Mode {
    Default,
    Fast,
    Oracle,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Method {
    ClosedForm,
    Enumeration,
}

impl Method {
    fn as_str(self) -> &'static str {
        match self {
            Method::ClosedForm => "closed-form",
            Method::Enumeration => "enumeration",
        }
    }
}

enum Family {
    Triple(TripleSemigroup),
    Arith(ArithSemigroup),
    Generic,
}

struct Ctx {
    s: Semigroup,
    family: Family,
    mode: Mode,
    format: Format,
    betti_bound: Option<i64>,
}

impl Ctx {
    fn new(cli: &Cli) -> CliResult<Self> {
        let mode = match (cli.fast, cli.oracle) {
            (true, _) => Mode::Fast,
            (_, true) => Mode::Oracle,
            _ => Mode::Default,
        };
        if let Some(b) = cli.betti_bound {
            if b < 0 {
                return Err(Failure::Usage(format!(
                    "--betti-bound must be >= 0, got {b}"
                )));
            }
        }
        let (s, family) = match (&cli.gens, cli.a) {
            (Some(_), Some(_)) => {
                return Err(Failure::Usage("give exactly one of --gens and --a".into()))
            }
            (None, None) => return Err(Failure::Usage("one of --gens or --a is required".into())),
            (None, Some(a)) => {
                let t = TripleSemigroup::new(a)?;
                (t.semigroup(), Family::Triple(t))
            }
            (Some(list), None) => {
                let gens = parse_gens(list)?;
                let s = Semigroup::new(&gens)?;
                let family = detect_family(s.minimal_generators());
                (s, family)
            }
        };
        Ok(Ctx {
            s,
            family,
            mode,
            format: cli.format,
            betti_bound: cli.betti_bound,
        })
    }

    /// Runs the closed form or the enumeration according to the mode.
    /// `closed` returns `None` when this semigroup has no closed form for
    /// the quantity.
    fn resolve<T>(
        &self,
        what: &str,
        closed: impl FnOnce() -> Option<sgp_core::Result<T>>,
        oracle: impl FnOnce() -> sgp_core::Result<T>,
    ) -> CliResult<(T, Method)> {
        if self.mode == Mode::Oracle {
            return Ok((oracle()?, Method::Enumeration));
        }
        match closed() {
            Some(Ok(v)) => Ok((v, Method::ClosedForm)),
            Some(Err(Error::OutsideClosedForm(reason))) => {
                if self.mode == Mode::Fast {
                    return Err(Failure::Usage(format!("--fast: {reason}")));
                }
                eprintln!("fallback=enumeration what={what} reason=\"{reason}\"");
                Ok((oracle()?, Method::Enumeration))
            }
            Some(Err(e)) => Err(e.into()),
            None if self.mode == Mode::Fast => Err(Failure::Usage(format!(
                "--fast: no closed form for {what} of this semigroup"
            ))),
            None => Ok((oracle()?, Method::Enumeration)),
        }
    }

    fn oracle_betti(&self) -> BettiClassification {
        match self.betti_bound {
            Some(b) => self.s.betti_elements_upto(b),
            None => self.s.betti_elements(),
        }
    }

    fn betti(&self) -> CliResult<(BettiClassification, Method)> {
        self.resolve(
            "betti elements",
            || match &self.family {
                Family::Triple(t) => Some(Ok(t.betti())),
                Family::Arith(ar) => {
                    let unbalanced = ar.unbalanced_betti();
                    let balanced = ar
                        .betti()
                        .into_iter()
                        .filter(|b| !unbalanced.contains(b))
                        .collect();
                    Some(Ok(BettiClassification::from_parts(balanced, unbalanced)))
                }
                Family::Generic => None,
            },
            || Ok(self.oracle_betti()),
        )
    }

    fn triple(&self) -> CliResult<&TripleSemigroup> {
        match &self.family {
            Family::Triple(t) => Ok(t),
            _ => Err(Failure::Usage(
                "this command needs generators of the form a, a+1, a+2 with a >= 3".into(),
            )),
        }
    }
}

fn parse_gens(list: &str) -> CliResult<Vec<i64>> {
    list.split(',')
        .map(|g| {
            g.trim()
                .parse::<i64>()
                .map_err(|_| Failure::Usage(format!("invalid generator {g:?}")))
        })
        .collect()
}

fn detect_family(minimal: &[i64]) -> Family {
    if let [a, b, c] = *minimal {
        if a >= 3 && b == a + 1 && c == a + 2 {
            if let Ok(t) = TripleSemigroup::new(a) {
                return Family::Triple(t);
            }
        }
    }
    if minimal.len() >= 2 {
        let d = minimal[1] - minimal[0];
        if minimal.windows(2).all(|w| w[1] - w[0] == d) {
            if let Ok(ar) = ArithSemigroup::new(minimal[0], d, minimal.len() as i64 - 1) {
                return Family::Arith(ar);
            }
        }
    }
    Family::Generic
}

fn coords_json(f: &Factorization) -> Value {
    json!(f.coords())
}

fn compact(f: &Factorization) -> String {
    let parts: Vec<String> = f.coords().iter().map(i64::to_string).collect();
    format!("[{}]", parts.join(","))
}

fn spaced(values: &[i64]) -> String {
    values
        .iter()
        .map(i64::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn json_out(mut value: Value, method: Method) -> String {
    value["method"] = json!(method.as_str());
    serde_json::to_string_pretty(&value).expect("json values serialize") + "\n"
}

fn cmd_info(ctx: &Ctx) -> CliResult<String> {
    let s = &ctx.s;
    let (betti, method) = ctx.betti()?;
    let ulf_size = if betti.unbalanced.is_empty() {
        None
    } else {
        Some(match &ctx.family {
            Family::Triple(t) if method == Method::ClosedForm => t.ulf().len(),
            _ => s.ulf_from(&betti, None)?.len(),
        })
    };
    let ulf_bound = match &ctx.family {
        Family::Triple(t) => Some(t.ulf_bound()),
        _ => None,
    };
    let min_breaker = betti.unbalanced.first().copied();
    let gens = s.minimal_generators();
    Ok(match ctx.format {
        Format::Json => json_out(
            json!({
                "generators": gens,
                "embedding_dimension": s.embedding_dimension(),
                "multiplicity": s.multiplicity(),
                "frobenius": s.frobenius(),
                "ulf_bound": ulf_bound,
                "betti": betti.betti,
                "balanced": betti.balanced,
                "unbalanced": betti.unbalanced,
                "min_ulf_breaker": min_breaker,
                "ulf_size": ulf_size,
            }),
            method,
        ),
        Format::Csv | Format::Text => {
            let opt = |v: Option<i64>| v.map_or("none".to_string(), |x| x.to_string());
            let rows: Vec<(&str, String)> = vec![
                (
                    "generators",
                    if ctx.format == Format::Csv {
                        spaced(gens)
                    } else {
                        gap_list(gens)
                    },
                ),
                ("embedding-dimension", s.embedding_dimension().to_string()),
                ("multiplicity", s.multiplicity().to_string()),
                ("frobenius", s.frobenius().to_string()),
                ("ulf-bound", opt(ulf_bound)),
                ("betti", list_field(ctx.format, &betti.betti)),
                ("balanced", list_field(ctx.format, &betti.balanced)),
                ("unbalanced", list_field(ctx.format, &betti.unbalanced)),
                ("min-ulf-breaker", opt(min_breaker)),
                (
                    "ulf-size",
                    ulf_size.map_or("infinite".to_string(), |n| n.to_string()),
                ),
                ("method", method.as_str().to_string()),
            ];
            let mut out = String::new();
            if ctx.format == Format::Csv {
                out.push_str("field,value\n");
            }
            for (k, v) in rows {
                match ctx.format {
                    Format::Csv => writeln!(out, "{k},{v}"),
                    _ => writeln!(out, "{k}: {v}"),
                }
                .expect("writing to a string");
            }
            out
        }
    })
}

fn list_field(format: Format, values: &[i64]) -> String {
    match format {
        Format::Csv => spaced(values),
        _ => gap_list(values),
    }
}

fn cmd_factorize(ctx: &Ctx, r: i64) -> CliResult<String> {
    if !ctx.s.contains(r) {
        return Err(Error::NotMember(r).into());
    }
    let (mut facts, method) = ctx.resolve(
        "factorizations",
        || match &ctx.family {
            Family::Triple(t) => Some(t.ulf_factorizations(r)),
            _ => None,
        },
        || Ok(ctx.s.factorizations(r)),
    )?;
    facts.sort_unstable_by(|x, y| y.cmp(x));
    let lengths: Vec<i64> = {
        let mut l: Vec<i64> = facts.iter().map(Factorization::length).collect();
        l.sort_unstable();
        l.dedup();
        l
    };
    Ok(match ctx.format {
        Format::Json => json_out(
            json!({
                "r": r,
                "generators": ctx.s.minimal_generators(),
                "factorizations": facts.iter().map(coords_json).collect::<Vec<_>>(),
                "denumerant": facts.len(),
                "lengths": lengths,
            }),
            method,
        ),
        Format::Csv => {
            let e = ctx.s.embedding_dimension();
            let mut out: Vec<String> = (1..=e).map(|i| format!("e{i}")).collect();
            out.push("length".into());
            let mut text = out.join(",") + "\n";
            for f in &facts {
                let mut row: Vec<String> = f.coords().iter().map(i64::to_string).collect();
                row.push(f.length().to_string());
                text.push_str(&(row.join(",") + "\n"));
            }
            text
        }
        Format::Text => {
            let body: Vec<String> = facts.iter().map(compact).collect();
            format!("[{}]\n", body.join(","))
        }
    })
}

fn cmd_apery(ctx: &Ctx, xs: &[i64]) -> CliResult<String> {
    let (set, method) = ctx.resolve("Apery sets", || None, || ctx.s.apery_multi(xs, None))?;
    Ok(match ctx.format {
        Format::Json => json_out(json!({ "x": xs, "apery": set }), method),
        Format::Csv => numbers_csv("element", &set),
        Format::Text => gap_list(&set) + "\n",
    })
}

fn numbers_csv(header: &str, values: &[i64]) -> String {
    let mut out = format!("{header}\n");
    for v in values {
        writeln!(out, "{v}").expect("writing to a string");
    }
    out
}

fn cmd_betti(ctx: &Ctx) -> CliResult<String> {
    let (betti, method) = ctx.betti()?;
    Ok(match ctx.format {
        Format::Json => json_out(
            json!({
                "betti": betti.betti,
                "balanced": betti.balanced,
                "unbalanced": betti.unbalanced,
            }),
            method,
        ),
        Format::Csv => {
            let mut out = String::from("element,class\n");
            for b in &betti.betti {
                let class = if betti.unbalanced.contains(b) {
                    "unbalanced"
                } else {
                    "balanced"
                };
                writeln!(out, "{b},{class}").expect("writing to a string");
            }
            out
        }
        Format::Text => betti_text(&betti),
    })
}

fn cmd_ulf(ctx: &Ctx, by: Grouping, window: Option<i64>) -> CliResult<String> {
    // (r, length, denumerant)
    let (rows, method) = ctx.resolve(
        "the unique-length set",
        || match &ctx.family {
            Family::Triple(t) => Some(Ok(t
                .ulf()
                .into_iter()
                .map(|e| {
                    let seed = t.seed(e.r);
                    (e.r, seed.ell, seed.kappa + 1)
                })
                .collect::<Vec<_>>())),
            _ => None,
        },
        || {
            let ulf = ctx.s.ulf_from(&ctx.oracle_betti(), window)?;
            Ok(ulf
                .into_iter()
                .map(|r| {
                    let facts = ctx.s.factorizations(r);
                    (r, facts[0].length(), facts.len() as i64)
                })
                .collect())
        },
    )?;
    let members: Vec<i64> = rows.iter().map(|row| row.0).collect();
    let key_name = match by {
        Grouping::None => None,
        Grouping::Length => Some("length"),
        Grouping::Denumerant => Some("denumerant"),
    };
    let Some(key_name) = key_name else {
        return Ok(match ctx.format {
            Format::Json => json_out(json!({ "size": members.len(), "ulf": members }), method),
            Format::Csv => numbers_csv("r", &members),
            Format::Text => gap_list(&members) + "\n",
        });
    };
    let mut groups: std::collections::BTreeMap<i64, Vec<i64>> = Default::default();
    for &(r, len, den) in &rows {
        let key = if by == Grouping::Length { len } else { den };
        groups.entry(key).or_default().push(r);
    }
    Ok(match ctx.format {
        Format::Json => {
            let groups: Vec<Value> = groups
                .iter()
                .map(|(k, v)| json!({ key_name: k, "members": v }))
                .collect();
            json_out(json!({ "by": key_name, "groups": groups }), method)
        }
        Format::Csv => {
            let mut out = format!("{key_name},r\n");
            for (k, v) in &groups {
                for r in v {
                    writeln!(out, "{k},{r}").expect("writing to a string");
                }
            }
            out
        }
        Format::Text => {
            let mut out = String::new();
            for (k, v) in &groups {
                writeln!(out, "{key_name} {k}: {}", gap_list(v)).expect("writing to a string");
            }
            out
        }
    })
}

fn cmd_table(
    ctx: &Ctx,
    monomials: bool,
    max_length: Option<i64>,
    max_denumerant: Option<i64>,
    unicode: bool,
) -> CliResult<String> {
    let t = ctx.triple()?;
    let a = t.a();
    if !monomials {
        if max_length.is_some() || max_denumerant.is_some() || unicode {
            return Err(Failure::Usage(
                "--max-length, --max-denumerant and --unicode apply to --monomials".into(),
            ));
        }
        let (table, method) = ctx.resolve(
            "the partition table",
            || Some(partition_table(a)),
            || partition_table_by_enumeration(a),
        )?;
        return Ok(match ctx.format {
            Format::Json => json_out(
                json!({
                    "a": a,
                    "max_length": table.max_length,
                    "max_denumerant": table.max_denumerant,
                    "cells": table.cells,
                }),
                method,
            ),
            Format::Csv => table.to_csv()?,
            Format::Text => table.to_text(),
        });
    }
    let style = if unicode {
        MonomialStyle::Unicode
    } else {
        MonomialStyle::Ascii
    };
    let rows = max_length.unwrap_or(t.max_table_length());
    let cols = max_denumerant.unwrap_or(t.max_table_denumerant());
    let (table, method) = ctx.resolve(
        "the monomial table",
        || Some(monomial_table(a, rows, cols, style)),
        || monomial_table_by_enumeration(a, rows, cols, style),
    )?;
    Ok(match ctx.format {
        Format::Json => json_out(
            json!({
                "a": a,
                "max_length": table.max_length,
                "max_denumerant": table.max_denumerant,
                "cells": table.cells,
            }),
            method,
        ),
        Format::Csv => {
            let mut out = String::from("ell,d,r,iota,c,basis\n");
            for cell in &table.cells {
                for e in &cell.entries {
                    writeln!(
                        out,
                        "{},{},{},{},{},{}",
                        cell.ell,
                        cell.d,
                        e.r,
                        e.iota,
                        e.c,
                        e.basis.join(" ")
                    )
                    .expect("writing to a string");
                }
            }
            out
        }
        Format::Text => table.to_text(),
    })
}

fn cmd_presentation(ctx: &Ctx) -> CliResult<String> {
    let (presentation, method) = ctx.resolve(
        "a minimal presentation",
        || match &ctx.family {
            Family::Triple(t) => Some(Ok(t.presentation())),
            Family::Arith(ar) => Some(Ok(ar.presentation())),
            Family::Generic => None,
        },
        || ctx.s.minimal_presentation(ctx.betti_bound),
    )?;
    let gens = ctx.s.minimal_generators();
    let mut relations: Vec<(i64, Factorization, Factorization)> = presentation
        .canonical()
        .into_iter()
        .map(|(x, y)| (x.value(gens).expect("validated relator"), x, y))
        .collect();
    relations.sort();
    Ok(match ctx.format {
        Format::Json => {
            let rels: Vec<Value> = relations
                .iter()
                .map(|(v, x, y)| json!({ "value": v, "left": x.coords(), "right": y.coords() }))
                .collect();
            json_out(json!({ "generators": gens, "relations": rels }), method)
        }
        Format::Csv => {
            let mut out = String::from("value,left,right\n");
            for (v, x, y) in &relations {
                writeln!(out, "{v},{},{}", spaced(x.coords()), spaced(y.coords()))
                    .expect("writing to a string");
            }
            out
        }
        Format::Text => {
            let mut out = String::new();
            for (v, x, y) in &relations {
                writeln!(out, "{v}: {x} = {y}").expect("writing to a string");
            }
            out
        }
    })
}

fn cmd_verify(format: Format, args: &VerifyArgs) -> CliResult<String> {
    let config = SweepConfig {
        a_min: args.a_min,
        a_max: args.a_max,
        r_margin: args.r_margin,
        arith: (!args.no_arith).then_some(ArithGrid {
            a_min: args.arith_a_min,
            a_max: args.arith_a_max,
            d_max: args.arith_d_max,
            n_min: 2,
            n_max: args.arith_n_max,
        }),
        random_samples: args.samples,
        random_max_generator: args.max_generator,
        seed: args.seed,
    };
    let report = verify::run(&config)?;
    let out = match format {
        Format::Json => json_out(
            json!({
                "passed": report.passed(),
                "checks": report.checks,
                "boundaries": report.boundaries,
                "mismatches": report.mismatches,
            }),
            Method::Enumeration,
        ),
        Format::Csv => {
            let mut out = String::from("family,case,r,check,expected,actual\n");
            for m in &report.mismatches {
                writeln!(
                    out,
                    "{},{},{},{:?},{:?},{:?}",
                    m.family,
                    spaced(&m.case),
                    m.r.map_or(String::new(), |r| r.to_string()),
                    m.check,
                    m.expected,
                    m.actual
                )
                .expect("writing to a string");
            }
            out
        }
        Format::Text => {
            let mut out = String::new();
            for (a, bound) in &report.boundaries {
                writeln!(out, "a={a}: {bound} is not in ULF").expect("writing to a string");
            }
            out + &report.to_string() + "\n"
        }
    };
    if report.passed() {
        Ok(out)
    } else {
        print!("{out}");
        Err(Failure::Verification)
    }
}

fn run(cli: &Cli) -> CliResult<String> {
    if let Command::Verify(args) = &cli.command {
        if cli.gens.is_some() || cli.a.is_some() {
            return Err(Failure::Usage(
                "verify takes sweep ranges, not --gens or --a".into(),
            ));
        }
        return cmd_verify(cli.format, args);
    }
    let ctx = Ctx::new(cli)?;
    match &cli.command {
        Command::Info => cmd_info(&ctx),
        Command::Factorize { r } => cmd_factorize(&ctx, *r),
        Command::Apery { xs } => cmd_apery(&ctx, xs),
        Command::Betti => cmd_betti(&ctx),
        Command::Ulf { by, window } => cmd_ulf(&ctx, *by, *window),
        Command::Table {
            monomials,
            max_length,
            max_denumerant,
            unicode,
        } => cmd_table(&ctx, *monomials, *max_length, *max_denumerant, *unicode),
        Command::Presentation => cmd_presentation(&ctx),
        Command::Verify(_) => unreachable!("handled above"),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::NotMember(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
