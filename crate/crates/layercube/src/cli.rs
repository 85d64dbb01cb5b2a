//! The `layercube` command line.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use layercube_core::c10::{build_cover, class_sizes, combined_coloring, palette_size, C10Report};
use layercube_core::coloring::find_nice_coloring;
use layercube_core::compression::{default_k_max, e_exact, EValue};
use layercube_core::cube::Vertex;
use layercube_core::embed::{
    check_partite, decide_layered, embed_from_nice, verify_layer_embedding,
};
use layercube_core::fixed_distance::embed_F;
use layercube_core::gallery::by_name;
use layercube_core::graph::{girth, to_dot, Girth, Graph};
use layercube_core::search::{Budget, Outcome};
use layercube_core::subdivision::{
    embed_even_subdivision_bipartite, embed_odd_subdivision_complete,
};
use layercube_core::tables::{even_indicator_block, odd_indicator_block, render_table, table_ks};
use layercube_core::turan::{ex_exact, ExValue, ForbiddenPattern};
use serde_json::{json, Value};

use crate::formats::{load_graph, ColoringFile, EmbeddingFile, GraphFile};
use crate::parallel::{verify_no_mono_c10_par, with_threads};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_VIOLATED: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;
pub const EXIT_USAGE: i32 = 64;

/// Default seed for randomized internals.
pub const DEFAULT_SEED: u64 = 20_240_101;

#[derive(Parser, Debug)]
#[command(
    name = "layercube",
    version,
    about = "Layered and cubical graphs in the hypercube"
)]
pub struct Cli {
    /// Worker threads for parallel checks (0 = all cores).
    #[arg(long, global = true, default_value_t = 0)]
    pub threads: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Graph file checks.
    Graph {
        #[command(subcommand)]
        action: GraphAction,
    },
    /// Explicit layer embeddings.
    Embed {
        #[command(subcommand)]
        action: EmbedAction,
    },
    /// Exact extremal numbers in small cubes.
    Turan {
        #[command(subcommand)]
        action: TuranAction,
    },
    /// Largest edge count of a layer subgraph on t vertices.
    #[command(name = "e-of-t")]
    EOfT {
        #[arg(long)]
        t: u64,
        /// Print every value up to t as TSV instead of JSON.
        #[arg(long)]
        tsv: bool,
    },
    /// Coloring of Q_n without monochromatic 10-cycles.
    C10 {
        #[command(subcommand)]
        action: C10Action,
    },
    /// Fixed-distance maps of Q_n into one or two layers.
    #[command(name = "appendix-b")]
    AppendixB {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        verify: bool,
    },
    /// Named graphs.
    Gallery {
        #[command(subcommand)]
        action: GalleryAction,
    },
    /// Indicator tables of the constructions.
    Tables {
        #[command(subcommand)]
        action: TablesAction,
    },
}

#[derive(Args, Debug, Clone, Default)]
pub struct DotOut {
    /// Also write Graphviz output to this path.
    #[arg(long, value_name = "PATH")]
    pub dot: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum GraphAction {
    /// Check a property of a graph file (`-` reads stdin).
    Check {
        file: PathBuf,
        #[arg(long, value_enum)]
        property: Property,
        #[arg(long, default_value_t = Budget::default().max_nodes)]
        budget: u64,
        #[command(flatten)]
        dot: DotOut,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Property {
    Cubical,
    Layered,
    Girth,
}

#[derive(Subcommand, Debug)]
pub enum EmbedAction {
    Subdivision {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(short = 't')]
        t: usize,
        #[arg(short = 'k')]
        k: usize,
        #[command(flatten)]
        dot: DotOut,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    OddComplete,
    EvenBipartite,
}

#[derive(Subcommand, Debug)]
pub enum TuranAction {
    Ex {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = parse_pattern)]
        forbid: ForbiddenPattern,
        #[arg(long, default_value_t = Budget::default().max_nodes)]
        budget: u64,
    },
}

fn parse_pattern(s: &str) -> Result<ForbiddenPattern, String> {
    match s.to_ascii_uppercase().as_str() {
        "C4" => Ok(ForbiddenPattern::Cycle(4)),
        "C6" => Ok(ForbiddenPattern::Cycle(6)),
        "C6-" => Ok(ForbiddenPattern::C6Minus),
        "C8" => Ok(ForbiddenPattern::Cycle(8)),
        "C10" => Ok(ForbiddenPattern::Cycle(10)),
        _ => Err(format!("unknown pattern `{s}` (C4, C6, C6-, C8, C10)")),
    }
}

#[derive(Subcommand, Debug)]
pub enum C10Action {
    Build {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Enumerate 10-cycles to confirm none is monochromatic.
        #[arg(long)]
        verify: bool,
    },
}

#[derive(Subcommand, Debug)]
pub enum GalleryAction {
    /// Print a graph as JSON: g8, k23, theta:4,4,4, cycle:6, ...
    Get {
        name: String,
        #[command(flatten)]
        dot: DotOut,
    },
}

#[derive(Subcommand, Debug)]
pub enum TablesAction {
    Reproduce {
        #[arg(long)]
        table: u8,
        /// Print aligned text instead of JSON.
        #[arg(long)]
        text: bool,
    },
}

/// What a command produced.
#[derive(Clone, Debug, PartialEq)]
pub struct CommandResult {
    pub command: Vec<String>,
    pub payload: Value,
    /// Replaces the JSON on stdout when set.
    pub text: Option<String>,
    pub exit_code: i32,
}

impl CommandResult {
    fn json(payload: Value, exit_code: i32) -> Self {
        CommandResult {
            command: Vec::new(),
            payload,
            text: None,
            exit_code,
        }
    }

    fn failure(code: i32, message: String) -> Self {
        CommandResult::json(json!({ "error": message }), code)
    }

    /// Text for stdout.
    pub fn stdout(&self) -> String {
        match &self.text {
            Some(t) => t.clone(),
            None => serde_json::to_string_pretty(&self.payload).expect("json") + "\n",
        }
    }
}

/// Parses and runs; `argv[0]` is the program name.
pub fn run<I, S>(argv: I) -> CommandResult
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let argv: Vec<String> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let mut r = CommandResult::json(json!({ "usage": e.render().to_string() }), code);
            r.text = Some(e.render().to_string());
            r.command = argv;
            return r;
        }
    };
    let threads = cli.threads;
    let mut result = with_threads(threads, move || dispatch(cli.command));
    result.command = argv;
    result
}

fn usage(message: impl std::fmt::Display) -> CommandResult {
    CommandResult::failure(EXIT_USAGE, message.to_string())
}

fn write_dot(dot: &DotOut, g: &Graph) -> Result<(), CommandResult> {
    if let Some(path) = &dot.dot {
        std::fs::write(path, to_dot(g))
            .map_err(|e| CommandResult::failure(EXIT_ERROR, format!("{}: {e}", path.display())))?;
    }
    Ok(())
}

fn dispatch(command: Command) -> CommandResult {
    let outcome = match command {
        Command::Graph {
            action:
                GraphAction::Check {
                    file,
                    property,
                    budget,
                    dot,
                },
        } => graph_check(file, property, Budget::nodes(budget), &dot),
        Command::Embed {
            action: EmbedAction::Subdivision { family, t, k, dot },
        } => embed_subdivision(family, t, k, &dot),
        Command::Turan {
            action: TuranAction::Ex { n, forbid, budget },
        } => turan_ex(n, &forbid, Budget::nodes(budget)),
        Command::EOfT { t, tsv } => e_of_t(t, tsv),
        Command::C10 {
            action: C10Action::Build { n, seed, verify },
        } => c10_build(n, seed, verify),
        Command::AppendixB { n, m, verify } => appendix_b(n, m, verify),
        Command::Gallery {
            action: GalleryAction::Get { name, dot },
        } => gallery_get(&name, &dot),
        Command::Tables {
            action: TablesAction::Reproduce { table, text },
        } => tables_reproduce(table, text),
    };
    outcome.unwrap_or_else(|r| r)
}

type Step = Result<CommandResult, CommandResult>;

fn graph_check(file: PathBuf, property: Property, budget: Budget, dot: &DotOut) -> Step {
    let g = load_graph(&file).map_err(|e| CommandResult::failure(EXIT_ERROR, e.to_string()))?;
    write_dot(dot, &g)?;
    let base = json!({ "vertices": g.order(), "edges": g.size() });
    Ok(match property {
        Property::Girth => {
            let value = match girth(&g) {
                Girth::Finite(l) => json!(l),
                Girth::Infinite => Value::Null,
            };
            CommandResult::json(
                json!({ "property": "girth", "graph": base, "girth": value }),
                EXIT_OK,
            )
        }
        Property::Cubical => match find_nice_coloring(&g, g.size(), budget) {
            Outcome::Found(c) => {
                let embedding = if g.is_connected() {
                    embed_from_nice(&g, &c, 0)
                        .ok()
                        .map(|imgs| imgs.iter().map(Vertex::to_string).collect::<Vec<_>>())
                } else {
                    None
                };
                CommandResult::json(
                    json!({
                        "property": "cubical", "graph": base, "holds": true,
                        "coloring": ColoringFile::new(&g, &c), "dimension": c.count(), "images": embedding,
                    }),
                    EXIT_OK,
                )
            }
            Outcome::NoneExists => CommandResult::json(
                json!({ "property": "cubical", "graph": base, "holds": false }),
                EXIT_VIOLATED,
            ),
            Outcome::BudgetExhausted => CommandResult::json(
                json!({ "property": "cubical", "graph": base, "holds": null }),
                EXIT_BUDGET,
            ),
        },
        Property::Layered => match decide_layered(&g, budget) {
            Outcome::Found(emb) => CommandResult::json(
                json!({ "property": "layered", "graph": base, "holds": true, "embedding": EmbeddingFile::new(&emb) }),
                EXIT_OK,
            ),
            Outcome::NoneExists => CommandResult::json(
                json!({ "property": "layered", "graph": base, "holds": false }),
                EXIT_VIOLATED,
            ),
            Outcome::BudgetExhausted => CommandResult::json(
                json!({ "property": "layered", "graph": base, "holds": null }),
                EXIT_BUDGET,
            ),
        },
    })
}

fn embed_subdivision(family: Family, t: usize, k: usize, dot: &DotOut) -> Step {
    let built = match family {
        Family::OddComplete => embed_odd_subdivision_complete(t, k),
        Family::EvenBipartite => embed_even_subdivision_bipartite(t, k),
    }
    .map_err(usage)?;
    write_dot(dot, &built.subdivision.graph)?;
    let verified = verify_layer_embedding(&built.subdivision.graph, &built.embedding);
    let certificate =
        built
            .partition
            .as_ref()
            .map(|parts| match check_partite(&built.embedding, parts) {
                Ok(cert) => json!({ "valid": true, "part_sizes": cert.part_sizes }),
                Err(e) => json!({ "valid": false, "error": format!("{e:?}") }),
            });
    let ok = verified.is_ok()
        && certificate
            .as_ref()
            .is_none_or(|c| c["valid"] == json!(true));
    Ok(CommandResult::json(
        json!({
            "family": match family { Family::OddComplete => "odd-complete", Family::EvenBipartite => "even-bipartite" },
            "t": t, "k": k,
            "graph": GraphFile::from_graph(&built.subdivision.graph),
            "embedding": EmbeddingFile::new(&built.embedding),
            "verified": verified.is_ok(),
            "violation": verified.err().map(|e| e.to_string()),
            "partition": built.partition,
            "certificate": certificate,
        }),
        if ok { EXIT_OK } else { EXIT_VIOLATED },
    ))
}

fn pattern_name(p: &ForbiddenPattern) -> String {
    match p {
        ForbiddenPattern::Cycle(l) => format!("C{l}"),
        ForbiddenPattern::C6Minus => String::from("C6-"),
        ForbiddenPattern::Explicit(_) => String::from("explicit"),
    }
}

fn turan_ex(n: usize, pattern: &ForbiddenPattern, budget: Budget) -> Step {
    let r = ex_exact(n, pattern, budget).map_err(usage)?;
    let witness: Vec<String> = r.witness.star_edges().map(|e| e.to_string()).collect();
    let (value, code) = match r.value {
        ExValue::Exact(v) => (json!({ "exact": v }), EXIT_OK),
        ExValue::Bounded { lower, upper } => {
            (json!({ "lower": lower, "upper": upper }), EXIT_BUDGET)
        }
    };
    Ok(CommandResult::json(
        json!({ "n": n, "forbid": pattern_name(pattern), "value": value, "witness": witness, "nodes": r.nodes }),
        code,
    ))
}

fn e_value_json(v: &EValue) -> Value {
    let w = &v.witness;
    json!({
        "t": v.t, "e": v.edges,
        "witness": { "n": w.n, "k": w.k, "n_a": w.n_a, "n_b": w.n_b },
        "super_compressed": v.super_compressed.map(|(e, s)| json!({ "e": e, "n": s.n, "k": s.k, "n_a": s.n_a, "n_b": s.n_b })),
        "dichotomy_holds": v.dichotomy_holds(),
    })
}

fn e_of_t(t: u64, tsv: bool) -> Step {
    if t == 0 {
        return Err(usage("t must be at least 1"));
    }
    if tsv {
        let mut out = String::from("t\te\tn\tk\tn_a\tn_b\n");
        for s in 1..=t {
            let v = e_exact(s, default_k_max(s));
            let w = &v.witness;
            out.push_str(&format!(
                "{}\t{}\t{}\t{}\t{}\t{}\n",
                s, v.edges, w.n, w.k, w.n_a, w.n_b
            ));
        }
        let mut r = CommandResult::json(json!({ "tsv": out }), EXIT_OK);
        r.text = Some(out);
        return Ok(r);
    }
    Ok(CommandResult::json(
        e_value_json(&e_exact(t, default_k_max(t))),
        EXIT_OK,
    ))
}

fn c10_build(n: usize, seed: u64, verify: bool) -> Step {
    let cover = build_cover(n, seed).map_err(usage)?;
    let perms: Vec<String> = cover
        .permutations()
        .iter()
        .map(|p| {
            p.as_slice()
                .iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect();
    let mut payload = json!({ "n": n, "seed": seed, "cover_size": cover.len(), "cover": perms, "palette": palette_size(&cover) });
    let mut code = EXIT_OK;
    if n <= 16 {
        let codes = combined_coloring(&cover).map_err(usage)?;
        let sizes = class_sizes(&codes);
        payload["colors_used"] = json!(sizes.len());
        payload["largest_class"] = json!(sizes.iter().map(|s| s.1).max().unwrap_or(0));
    }
    if verify {
        if n > 7 {
            return Err(usage("--verify supports n <= 7"));
        }
        let report = verify_no_mono_c10_par(&cover).map_err(usage)?;
        payload["verification"] = report_json(&report);
        if !report.passed() {
            code = EXIT_VIOLATED;
        }
    }
    Ok(CommandResult::json(payload, code))
}

fn report_json(r: &C10Report) -> Value {
    let mono: Vec<Vec<String>> = r
        .monochromatic
        .iter()
        .map(|c| c.iter().map(Vertex::to_string).collect())
        .collect();
    json!({
        "passed": r.passed(),
        "monochromatic": mono,
        "largest_class": r.largest_class,
        "pigeonhole_bound": r.pigeonhole_bound,
        "single_layer": {
            "H1": r.single_layer[0], "H2": r.single_layer[1], "H3": r.single_layer[2],
            "H4": r.single_layer[3], "H5": r.single_layer[4], "unmatched": r.single_layer[5],
        },
        "h1_h3_constant": r.h1_h3_constant,
        "h4_unbroken": r.h4_unbroken,
    })
}

fn appendix_b(n: usize, m: usize, verify: bool) -> Step {
    let emb = embed_F(n, m).map_err(usage)?;
    let low = emb.images.iter().map(Vertex::layer).min().unwrap_or(0);
    let high = emb.images.iter().map(Vertex::layer).max().unwrap_or(0);
    let mut payload = json!({ "n": n, "m": m, "N": emb.target_dim, "construction": format!("{:?}", emb.construction), "layers": [low, high] });
    let mut code = EXIT_OK;
    if verify {
        match emb.verify() {
            Ok(r) => {
                payload["verification"] =
                    json!({ "passed": true, "pairs_checked": r.pairs_checked })
            }
            Err(e) => {
                payload["verification"] = json!({ "passed": false, "violation": e.to_string() });
                code = EXIT_VIOLATED;
            }
        }
    }
    Ok(CommandResult::json(payload, code))
}

fn gallery_get(name: &str, dot: &DotOut) -> Step {
    let g = by_name(name).map_err(usage)?;
    write_dot(dot, &g)?;
    Ok(CommandResult::json(
        serde_json::to_value(GraphFile::from_graph(&g)).expect("json"),
        EXIT_OK,
    ))
}

fn tables_reproduce(table: u8, text: bool) -> Step {
    let rendered = render_table(table).map_err(usage)?;
    let blocks = match table {
        1 | 2 => table_ks(table)
            .map_err(usage)?
            .iter()
            .map(|&k| {
                let b = if table == 1 {
                    odd_indicator_block(k)
                } else {
                    even_indicator_block(k)
                }
                .map_err(usage)?;
                Ok(json!({ "k": k, "headers": b.headers, "labels": b.labels, "rows": b.rows }))
            })
            .collect::<Result<Vec<_>, CommandResult>>()?,
        _ => Vec::new(),
    };
    let mut r = CommandResult::json(
        json!({ "table": table, "text": rendered, "blocks": blocks }),
        EXIT_OK,
    );
    if text {
        r.text = Some(rendered);
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn go(args: &str) -> CommandResult {
        run(std::iter::once("layercube").chain(args.split_whitespace()))
    }

    #[test]
    fn usage_errors() {
        assert_eq!(go("frobnicate").exit_code, EXIT_USAGE);
        assert_eq!(go("turan ex --n 3 --forbid C5").exit_code, EXIT_USAGE);
        assert_eq!(go("tables reproduce --table 9").exit_code, EXIT_USAGE);
        assert_eq!(go("--help").exit_code, EXIT_OK);
    }

    #[test]
    fn turan_value() {
        let r = go("turan ex --n 3 --forbid C6-");
        assert_eq!(r.exit_code, EXIT_OK);
        assert_eq!(r.payload["value"]["exact"], 8);
        let r = go("turan ex --n 4 --forbid C6 --budget 3");
        assert_eq!(r.exit_code, EXIT_BUDGET);
    }

    #[test]
    fn gallery_and_tables() {
        let r = go("gallery get theta:3,3,3");
        assert_eq!(r.payload["vertices"], 8);
        let r = go("tables reproduce --table 1 --text");
        assert!(r.stdout().starts_with("k = 1"));
    }

    #[test]
    fn e_of_t_and_appendix() {
        assert_eq!(go("e-of-t --t 4").payload["e"], 3);
        assert!(go("e-of-t --t 3 --tsv").stdout().starts_with("t\te"));
        let r = go("appendix-b --n 3 --m 5 --verify");
        assert_eq!(r.exit_code, EXIT_OK);
        assert_eq!(r.payload["N"], 9);
    }
}
