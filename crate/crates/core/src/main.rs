use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use bruhat_core::checks::{
    check_constant_symmetries, check_cyclic_all, check_cyclic_counts, check_disjoint_sweep,
    check_word_maps, run_all, Outcome,
};
use bruhat_core::constants::{
    c_constant, check_disjoint, schubert_coeff, verify_identity, DisjointChecker,
};
use bruhat_core::insertion::insert;
use bruhat_core::korder::{all_chains, cm_chain, dcm_chain, ensure_chain_budget, interval_graph};
use bruhat_core::umonoid::{
    count_reduced_words, mobius, rank_polynomial_bounded, reduced_words, universal_interval,
    universal_length,
};
use bruhat_core::{leq_k, Chain, Error, MarkedInterval, Partition, Permutation, Word, WordOrder};

/// Permutations are comma-separated windows (`2,5,4,1,6,3`), partitions are
/// comma-separated parts (`2,2,1`), and words are products such as
/// `u[3,4] u[1,4]`.
#[derive(Parser)]
#[command(name = "bruhat", version, about = "k-Bruhat order and universal monoid toolkit")]
struct Cli {
    /// Largest n accepted by sweeps over S_n.
    #[arg(long, global = true, default_value_t = 9)]
    max_n: usize,

    /// Largest number of maximal chains an enumeration may visit.
    #[arg(long, global = true, default_value_t = 1_000_000)]
    max_chains: u64,

    /// Worker threads (falls back to BRUHAT_THREADS, then to all cores).
    #[arg(long, global = true, env = "BRUHAT_THREADS")]
    threads: Option<usize>,

    /// How words are written: `paper` (last factor first) or `application`.
    #[arg(long, global = true, default_value = "paper", value_parser = parse_order)]
    order: WordOrder,

    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Comparisons in the k-Bruhat order.
    #[command(subcommand)]
    Order(OrderCmd),
    /// Maximal chains of a marked interval.
    Chain {
        #[arg(value_enum)]
        which: ChainKind,
        #[command(flatten)]
        iv: IntervalArgs,
        /// Print the Hasse diagram of the interval in DOT.
        #[arg(long, conflicts_with = "json")]
        dot: bool,
    },
    /// The universal order and its monoid.
    #[command(subcommand)]
    Universal(UniversalCmd),
    /// Structure constants.
    #[command(subcommand)]
    Const(ConstCmd),
    /// Rank generating polynomial of the universal order on S_n.
    Poly {
        #[arg(short)]
        n: usize,
    },
    /// Rewrites a word of shape (1,n) into shape (n,1), printing each step.
    Insert {
        #[arg(short = 'x')]
        word: String,
    },
    /// Numeric sweeps of the symmetry and product identities.
    #[command(subcommand)]
    Check(CheckCmd),
    /// Runs every published numeric check and prints a pass/fail table.
    VerifyPaper,
}

#[derive(Subcommand)]
enum OrderCmd {
    /// Whether u ≤_k w.
    LeqK(IntervalArgs),
}

#[derive(Args)]
struct IntervalArgs {
    #[arg(short, value_parser = parse_perm)]
    u: Permutation,
    #[arg(short, value_parser = parse_perm)]
    w: Permutation,
    #[arg(short)]
    k: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum ChainKind {
    Cm,
    Dcm,
    All,
}

#[derive(Subcommand)]
enum UniversalCmd {
    /// ℓ_u(ζ).
    Length {
        #[arg(value_parser = parse_perm)]
        z: Permutation,
    },
    /// The Hasse diagram of [1, ζ].
    Interval {
        #[arg(value_parser = parse_perm)]
        z: Permutation,
        #[arg(long, conflicts_with = "json")]
        dot: bool,
    },
    /// Every reduced word of ζ.
    Words {
        #[arg(value_parser = parse_perm)]
        z: Permutation,
    },
    /// μ(1, ζ).
    Mobius {
        #[arg(value_parser = parse_perm)]
        z: Permutation,
    },
}

#[derive(Subcommand)]
enum ConstCmd {
    /// c_λ(ζ).
    C {
        #[arg(short, value_parser = parse_perm)]
        z: Permutation,
        #[arg(short, value_parser = parse_partition)]
        l: Partition,
    },
    /// Every c_λ(ζ) with λ ⊢ ℓ_u(ζ), and the chain-count identity.
    Table {
        #[arg(short, value_parser = parse_perm)]
        z: Permutation,
    },
    /// The coefficient of 𝔖_w in 𝔖_u · s_λ(x_1..x_k).
    Schubert {
        #[arg(short, value_parser = parse_perm)]
        u: Permutation,
        #[arg(short, value_parser = parse_partition)]
        l: Partition,
        #[arg(short)]
        k: usize,
        #[arg(short, value_parser = parse_perm)]
        w: Permutation,
    },
}

#[derive(Subcommand)]
enum CheckCmd {
    /// Inverse, conjugation, shift and word-map symmetries on S_n.
    Symmetries {
        #[arg(short)]
        n: usize,
    },
    /// Invariance of the constants under cyclic conjugation on S_n.
    Cyclic {
        #[arg(short)]
        n: usize,
        /// Compare only chain counts.
        #[arg(long)]
        counts_only: bool,
    },
    /// The product identity for u-disjoint pairs.
    Disjoint {
        /// First factor; with -z checks a single pair.
        #[arg(short, value_parser = parse_perm, requires = "z")]
        e: Option<Permutation>,
        #[arg(short, value_parser = parse_perm, requires = "e")]
        z: Option<Permutation>,
        /// Sweep all pairs in S_n.
        #[arg(short, conflicts_with = "e", required_unless_present = "e")]
        n: Option<usize>,
        /// Largest ℓ_u of a factor in the sweep.
        #[arg(long, default_value_t = 3)]
        max_length: usize,
    },
}

fn parse_perm(s: &str) -> Result<Permutation, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_order(s: &str) -> Result<WordOrder, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Failure of a command, classified by exit code.
enum Failure {
    Domain(String),
    Usage(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_usage() {
            Failure::Usage(e.to_string())
        } else if e.is_internal() {
            Failure::Internal(e.to_string())
        } else {
            Failure::Domain(e.to_string())
        }
    }
}

type CmdResult = Result<String, Failure>;

struct Ctx {
    max_n: usize,
    max_chains: u64,
    order: WordOrder,
    json: bool,
}

impl Ctx {
    fn guard_n(&self, n: usize) -> Result<(), Failure> {
        if n > self.max_n {
            return Err(Error::Resource(format!("n = {n} exceeds --max-n {}", self.max_n)).into());
        }
        Ok(())
    }

    fn guard_words(&self, z: &Permutation) -> Result<(), Failure> {
        let n = count_reduced_words(z);
        if n > self.max_chains {
            return Err(Error::Resource(format!(
                "{z} has {n} reduced words, more than --max-chains {}",
                self.max_chains
            ))
            .into());
        }
        Ok(())
    }

    fn word(&self, x: &Word) -> String {
        x.to_text(self.order)
    }
}

fn json<T: Serialize>(value: &T) -> CmdResult {
    serde_json::to_string(value).map_err(|e| Failure::Internal(e.to_string()))
}

fn interval(args: &IntervalArgs) -> Result<MarkedInterval, Failure> {
    Ok(MarkedInterval::new(args.u.clone(), args.w.clone(), args.k)?)
}

fn chain_line(c: &Chain) -> String {
    c.steps().iter().map(Permutation::compact).collect::<Vec<_>>().join(" < ")
}

fn check_line(outcome: Outcome) -> CmdResult {
    outcome.map_err(Failure::Domain)
}

fn run(cli: Cli) -> CmdResult {
    let ctx = Ctx {
        max_n: cli.max_n,
        max_chains: cli.max_chains,
        order: cli.order,
        json: cli.json,
    };
    match cli.command {
        Command::Order(OrderCmd::LeqK(args)) => {
            let leq = leq_k(&args.u, &args.w, args.k);
            Ok(leq.to_string())
        }
        Command::Chain { which, iv, dot } => {
            let iv = interval(&iv)?;
            if dot {
                return Ok(interval_graph(&iv).to_dot("interval"));
            }
            let chains = match which {
                ChainKind::Cm => vec![cm_chain(&iv)?],
                ChainKind::Dcm => vec![dcm_chain(&iv)?],
                ChainKind::All => {
                    ensure_chain_budget(&iv, ctx.max_chains)?;
                    all_chains(&iv)
                }
            };
            if ctx.json {
                let out: Vec<_> = chains.iter().map(|c| c.to_json(iv.k)).collect();
                match which {
                    ChainKind::All => json(&out),
                    _ => json(&out[0]),
                }
            } else {
                Ok(chains.iter().map(chain_line).collect::<Vec<_>>().join("\n"))
            }
        }
        Command::Universal(cmd) => match cmd {
            UniversalCmd::Length { z } => Ok(universal_length(&z).to_string()),
            UniversalCmd::Interval { z, dot } => {
                ctx.guard_words(&z)?;
                let graph = universal_interval(&z);
                if dot {
                    return Ok(graph.to_dot(&z.compact()));
                }
                if ctx.json {
                    #[derive(Serialize)]
                    struct Edge {
                        from: usize,
                        to: usize,
                        gen: bruhat_core::Generator,
                    }
                    #[derive(Serialize)]
                    struct Graph<'a> {
                        nodes: &'a [Permutation],
                        edges: Vec<Edge>,
                    }
                    let edges = graph.edges().iter().map(|&(from, to, gen)| Edge { from, to, gen }).collect();
                    return json(&Graph { nodes: graph.nodes(), edges });
                }
                let mut lines: Vec<String> = graph.nodes().iter().map(Permutation::compact).collect();
                lines.extend(graph.edges().iter().map(|&(a, b, g)| {
                    format!("{} -> {} {g}", graph.nodes()[a].compact(), graph.nodes()[b].compact())
                }));
                Ok(lines.join("\n"))
            }
            UniversalCmd::Words { z } => {
                ctx.guard_words(&z)?;
                let words = reduced_words(&z);
                if ctx.json {
                    json(&words)
                } else {
                    Ok(words.iter().map(|x| ctx.word(x)).collect::<Vec<_>>().join("\n"))
                }
            }
            UniversalCmd::Mobius { z } => {
                ctx.guard_words(&z)?;
                Ok(mobius(&z).to_string())
            }
        },
        Command::Const(cmd) => match cmd {
            ConstCmd::C { z, l } => {
                ctx.guard_words(&z)?;
                Ok(c_constant(&z, &l)?.to_string())
            }
            ConstCmd::Table { z } => {
                ctx.guard_words(&z)?;
                let report = verify_identity(&z)?;
                if ctx.json {
                    json(&report)
                } else {
                    let mut lines: Vec<String> =
                        report.c.iter().map(|e| format!("({}) {}", e.lambda, e.value)).collect();
                    lines.push(format!("chains {} identity {}", report.chains, report.identity_ok));
                    Ok(lines.join("\n"))
                }
            }
            ConstCmd::Schubert { u, l, k, w } => {
                ctx.guard_words(&u.inverse().compose(&w))?;
                Ok(schubert_coeff(&u, &l, k, &w)?.to_string())
            }
        },
        Command::Poly { n } => {
            let p = rank_polynomial_bounded(n, ctx.max_n)?;
            if ctx.json {
                json(&p)
            } else {
                Ok(p.to_string())
            }
        }
        Command::Insert { word } => {
            let x = Word::parse_text(&word, ctx.order)?;
            let trace = insert(&x)?;
            if ctx.json {
                return json(&trace);
            }
            let mut lines: Vec<String> = trace
                .steps
                .iter()
                .map(|s| {
                    format!(
                        "pos={} rule={} before={} after={}",
                        s.pos,
                        s.rule,
                        ctx.word(&s.before),
                        ctx.word(&s.after)
                    )
                })
                .collect();
            lines.push(ctx.word(&trace.result));
            Ok(lines.join("\n"))
        }
        Command::Check(cmd) => match cmd {
            CheckCmd::Symmetries { n } => {
                ctx.guard_n(n)?;
                let a = check_line(check_constant_symmetries(n))?;
                let b = check_line(check_word_maps(n))?;
                Ok(format!("{a}\n{b}"))
            }
            CheckCmd::Cyclic { n, counts_only } => {
                ctx.guard_n(n)?;
                if counts_only {
                    check_line(check_cyclic_counts(n))
                } else {
                    check_line(check_cyclic_all(n))
                }
            }
            CheckCmd::Disjoint { e, z, n, max_length } => match (e, z, n) {
                (Some(e), Some(z), _) => {
                    if !DisjointChecker::default().is_u_disjoint(&e, &z)? {
                        return Err(Failure::Domain(format!("{e} and {z} are not u-disjoint")));
                    }
                    Ok(check_disjoint(&e, &z)?.to_string())
                }
                (_, _, Some(n)) => {
                    ctx.guard_n(n)?;
                    check_line(check_disjoint_sweep(n, max_length))
                }
                _ => Err(Failure::Usage("give -e and -z, or -n".into())),
            },
        },
        Command::VerifyPaper => {
            let results = run_all();
            let failed = results.iter().filter(|r| !r.passed).count();
            let mut lines = Vec::new();
            for r in &results {
                let status = if r.passed { "PASS" } else { "FAIL" };
                lines.push(format!("{status} {:>2} {:<50} {}", r.id, r.title, r.detail));
            }
            lines.push(format!("{} passed, {failed} failed", results.len() - failed));
            let table = lines.join("\n");
            if failed > 0 {
                println!("{table}");
                return Err(Failure::Domain(format!("{failed} checks failed")));
            }
            Ok(table)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    if let Some(threads) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(3);
        }
    }
    std::panic::set_hook(Box::new(|info| eprintln!("internal error: {info}")));
    let outcome = std::panic::catch_unwind(|| run(cli))
        .unwrap_or_else(|_| Err(Failure::Internal("the engine panicked".into())));
    match outcome {
        Ok(out) => {
            print!("{out}");
            if !out.ends_with('\n') {
                println!();
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(3)
        }
    }
}
