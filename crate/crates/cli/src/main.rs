use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use cliquedyn::cliques::{helly_brute, is_clique_helly, maximal_cliques};
use cliquedyn::covers::{
    cover_report, permutation_from_pairs, quotient, universal_cover_ball, CoverReport, GraphHom,
};
use cliquedyn::dynamics::{iterate_collect, kth_clique_graph, Budget, Exhausted, Status};
use cliquedyn::format::{parse_edge_list, parse_pairs, write_dot, write_edge_list, write_pairs};
use cliquedyn::oracle::{generate, Params, FAMILIES};
use cliquedyn::Graph;
use serde_json::json;

const OK: u8 = 0;
const NEGATIVE: u8 = 1;
const USAGE: u8 = 2;
const UNDECIDED: u8 = 3;

#[derive(Parser)]
#[command(
    name = "cliquedyn",
    version,
    about = "Iterated clique graphs and triangular covers"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GraphOut {
    /// Write DOT instead of an edge list.
    #[arg(long)]
    dot: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph from a named family.
    Gen {
        #[arg(long)]
        family: String,
        /// Family parameter as key=value; repeatable.
        #[arg(long = "param", value_name = "KEY=VALUE")]
        params: Vec<String>,
        #[command(flatten)]
        out: GraphOut,
    },
    /// List the maximal cliques, one per line.
    Cliques { file: PathBuf },
    /// The N-th iterated clique graph.
    Kgraph {
        file: PathBuf,
        #[arg(short = 'n', default_value_t = 1)]
        n: usize,
        #[command(flatten)]
        out: GraphOut,
    },
    /// Iterate the clique operator until a repeat or the budget runs out.
    Iterate {
        file: PathBuf,
        #[arg(long)]
        max_steps: usize,
        #[arg(long)]
        max_vertices: usize,
        #[arg(long)]
        json: bool,
        /// Include wall-clock timings in the report.
        #[arg(long)]
        timings: bool,
    },
    /// Decide whether the clique family has the Helly property.
    Helly {
        file: PathBuf,
        /// Check every subfamily directly, refusing above CAP cliques.
        #[arg(long, value_name = "CAP")]
        brute: Option<usize>,
    },
    /// Girth and local structure.
    Stats { file: PathBuf },
    /// Triangular covering maps.
    #[command(subcommand)]
    Cover(CoverCommand),
}

#[derive(Subcommand)]
enum CoverCommand {
    /// Check a vertex map G -> H.
    Verify {
        source: PathBuf,
        target: PathBuf,
        #[arg(long)]
        map: PathBuf,
    },
    /// Quotient by a fixed-point-free automorphism.
    Quotient {
        file: PathBuf,
        #[arg(long)]
        perm: PathBuf,
        /// Also write the projection as `vertex orbit` pairs.
        #[arg(long, value_name = "FILE")]
        projection: Option<PathBuf>,
        #[command(flatten)]
        out: GraphOut,
    },
    /// Ball of the universal triangular cover around a basepoint.
    Universal {
        file: PathBuf,
        #[arg(long)]
        base: String,
        #[arg(long)]
        radius: usize,
        /// Also write the projection as `cover_vertex vertex` pairs.
        #[arg(long, value_name = "FILE")]
        projection: Option<PathBuf>,
        #[command(flatten)]
        out: GraphOut,
    },
}

/// Error that aborts a command with exit status 2.
struct Usage(String);

impl<E: std::fmt::Display> From<E> for Usage {
    fn from(e: E) -> Self {
        Usage(e.to_string())
    }
}

type Run = Result<(String, u8), Usage>;

fn read_text(path: &Path) -> Result<String, Usage> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        return Ok(s);
    }
    std::fs::read_to_string(path).map_err(|e| Usage(format!("{}: {e}", path.display())))
}

fn read_graph(path: &Path) -> Result<Graph, Usage> {
    parse_edge_list(&read_text(path)?).map_err(|e| Usage(format!("{}: {e}", path.display())))
}

fn read_pairs(path: &Path) -> Result<Vec<(String, String)>, Usage> {
    parse_pairs(&read_text(path)?).map_err(|e| Usage(format!("{}: {e}", path.display())))
}

fn render(g: &Graph, out: &GraphOut) -> String {
    if out.dot {
        write_dot(g) + "\n"
    } else {
        write_edge_list(g)
    }
}

fn cover_line(r: &CoverReport) -> (String, u8) {
    if !r.is_hom {
        return ("not a homomorphism\n".into(), NEGATIVE);
    }
    if r.is_triangular_cover {
        return (
            format!(
                "triangular cover, min fiber distance {}\n",
                r.min_fiber_distance
            ),
            OK,
        );
    }
    let at = r.failing_vertex.as_deref().unwrap_or("?");
    (
        format!(
            "not a triangular cover (fails at `{at}`), min fiber distance {}\n",
            r.min_fiber_distance
        ),
        NEGATIVE,
    )
}

fn gen(family: &str, params: &[String], out: &GraphOut) -> Run {
    if !FAMILIES.contains(&family) {
        return Err(Usage(format!(
            "unknown family `{family}` (expected one of {})",
            FAMILIES.join(", ")
        )));
    }
    let p = Params::parse(params.iter().map(String::as_str))?;
    Ok((render(&generate(family, &p)?, out), OK))
}

fn cliques(file: &Path) -> Run {
    let g = read_graph(file)?;
    let mut lines: Vec<Vec<&str>> = maximal_cliques(&g)
        .iter()
        .map(|c| {
            let mut names: Vec<&str> = c.iter().map(|&v| g.name(v)).collect();
            names.sort_unstable();
            names
        })
        .collect();
    lines.sort_unstable();
    Ok((lines.iter().map(|l| l.join(" ") + "\n").collect(), OK))
}

fn iterate(file: &Path, steps: usize, vertices: usize, as_json: bool, timings: bool) -> Run {
    let g = read_graph(file)?;
    let budget = Budget::new(steps, vertices)?;
    let start = Instant::now();
    let (r, _) = iterate_collect(&g, budget);
    let elapsed = start.elapsed();
    let code = if r.status == Status::Converged {
        OK
    } else {
        UNDECIDED
    };
    let status = match r.status {
        Status::Converged => "converged",
        Status::BudgetExceeded => "budget_exceeded",
    };
    let exhausted = r.exhausted.map(|e| match e {
        Exhausted::Steps => "steps",
        Exhausted::Vertices => "vertices",
    });
    if as_json {
        let mut doc = json!({
            "status": status,
            "size_sequence": r.size_sequence,
            "preperiod": r.preperiod,
            "period": r.period,
            "witness": r.witness.map(|(a, b)| [a, b]),
            "exhausted": exhausted,
            "parameters": { "max_steps": steps, "max_vertices": vertices },
        });
        if timings {
            doc["timings"] = json!({ "total_ms": elapsed.as_secs_f64() * 1e3 });
        }
        return Ok((serde_json::to_string_pretty(&doc)? + "\n", code));
    }
    let opt = |x: Option<usize>| x.map_or("none".to_string(), |v| v.to_string());
    let sizes: Vec<String> = r.size_sequence.iter().map(usize::to_string).collect();
    let mut text = format!("status {status}\n");
    if let Some(e) = exhausted {
        text += &format!("exhausted {e}\n");
    }
    text += &format!(
        "sizes {}\npreperiod {}\nperiod {}\n",
        sizes.join(" "),
        opt(r.preperiod),
        opt(r.period)
    );
    if timings {
        text += &format!("time_ms {:.3}\n", elapsed.as_secs_f64() * 1e3);
    }
    Ok((text, code))
}

fn helly(file: &Path, brute: Option<usize>) -> Run {
    let g = read_graph(file)?;
    let yes = match brute {
        None => is_clique_helly(&g),
        Some(cap) => match helly_brute(&g, cap) {
            Ok(b) => b,
            Err(e) => return Ok((format!("undecided: {e}\n"), UNDECIDED)),
        },
    };
    Ok(if yes {
        ("clique-Helly\n".into(), OK)
    } else {
        ("not clique-Helly\n".into(), NEGATIVE)
    })
}

fn stats(file: &Path) -> Run {
    let g = read_graph(file)?;
    let undefined = || "undefined".to_string();
    let local_girth = g
        .local_girth()
        .map_or_else(|_| undefined(), |x| x.to_string());
    let local_min = g
        .local_min_degree()
        .map_or_else(|_| undefined(), |x| x.to_string());
    let text = format!(
        "vertices {}\nedges {}\ngirth {}\nlocal_girth {}\nlocal_min_degree {}\nlocally_cyclic {}\n",
        g.vertex_count(),
        g.edge_count(),
        g.girth(),
        local_girth,
        local_min,
        !g.is_empty() && g.is_locally_cyclic(),
    );
    Ok((text, OK))
}

fn write_projection(path: &Option<PathBuf>, p: &GraphHom) -> Result<(), Usage> {
    if let Some(path) = path {
        let pairs = p
            .source
            .vertices()
            .map(|v| (p.source.name(v), p.image_name(v)));
        std::fs::write(path, write_pairs(pairs))
            .map_err(|e| Usage(format!("{}: {e}", path.display())))?;
    }
    Ok(())
}

fn cover(cmd: &CoverCommand) -> Run {
    match cmd {
        CoverCommand::Verify {
            source,
            target,
            map,
        } => {
            let (g, h) = (read_graph(source)?, read_graph(target)?);
            let pairs = read_pairs(map)?;
            let p =
                GraphHom::from_pairs(g, h, pairs.iter().map(|(a, b)| (a.as_str(), b.as_str())))?;
            Ok(cover_line(&cover_report(&p)))
        }
        CoverCommand::Quotient {
            file,
            perm,
            projection,
            out,
        } => {
            let g = read_graph(file)?;
            let pairs = read_pairs(perm)?;
            let perm =
                permutation_from_pairs(&g, pairs.iter().map(|(a, b)| (a.as_str(), b.as_str())))?;
            let q = quotient(&g, &perm)?;
            write_projection(projection, &q.projection)?;
            let (line, code) = cover_line(&q.report);
            eprint!("{line}");
            Ok((render(&q.graph, out), code))
        }
        CoverCommand::Universal {
            file,
            base,
            radius,
            projection,
            out,
        } => {
            let g = read_graph(file)?;
            let u = universal_cover_ball(&g, base, *radius)?;
            write_projection(projection, &u.projection)?;
            eprintln!(
                "{} vertices, {} on the boundary",
                u.cover.vertex_count(),
                u.boundary.len()
            );
            Ok((render(&u.cover, out), OK))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Gen {
            family,
            params,
            out,
        } => gen(family, params, out),
        Command::Cliques { file } => cliques(file),
        Command::Kgraph { file, n, out } => {
            read_graph(file).map(|g| (render(&kth_clique_graph(&g, *n), out), OK))
        }
        Command::Iterate {
            file,
            max_steps,
            max_vertices,
            json,
            timings,
        } => iterate(file, *max_steps, *max_vertices, *json, *timings),
        Command::Helly { file, brute } => helly(file, *brute),
        Command::Stats { file } => stats(file),
        Command::Cover(cmd) => cover(cmd),
    };
    match result {
        Ok((text, code)) => {
            let mut stdout = io::stdout().lock();
            if stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .is_err()
            {
                return ExitCode::from(USAGE);
            }
            ExitCode::from(code)
        }
        Err(Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(USAGE)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }

    #[test]
    fn value_json_keys_are_sorted() {
        let v: serde_json::Value = json!({"b": 1, "a": 2});
        assert_eq!(v.to_string(), r#"{"a":2,"b":1}"#);
    }
}
