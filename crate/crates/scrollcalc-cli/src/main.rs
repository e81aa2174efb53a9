//! Command-line interface to the scroll classification engine.
//!
//! Exit codes: 0 on success, 1 on domain errors (out-of-range parameters,
//! degenerate setups, failed verification suites), 2 on usage errors
//! (unknown flags, missing or mutually exclusive arguments).

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use scrollcalc::cli_report::{
    cmd_classify, cmd_project, cmd_table, cmd_verify, BKind, ClassifyQuery, CommandOutput, Format,
};

#[derive(Parser)]
#[command(
    name = "scrollcalc",
    version,
    about = "Exact classification calculus for linearly normal special scrolls",
    propagate_version = true
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    /// Human-readable text.
    Text,
    /// Canonical structured JSON document.
    Structured,
}

#[derive(Clone, Copy, ValueEnum)]
enum BKindArg {
    /// A generic effective divisor of the degree the setup requires.
    Generic,
    /// The canonical class (genus 2; the construction degenerates).
    Canonical,
}

#[derive(Subcommand)]
enum Command {
    /// Classify the speciality-one scroll over a generic curve of genus g
    #[command(group(ArgGroup::new("query").required(true).args(["n", "d"])))]
    Classify {
        /// Genus of the base curve (>= 2)
        #[arg(long)]
        g: i64,
        /// Ambient projective dimension N (>= 3)
        #[arg(long = "N", conflicts_with_all = ["d", "i"])]
        n: Option<i64>,
        /// Scroll degree (with --i; N is resolved via d - 2g + 1 + i = N)
        #[arg(long, requires = "i")]
        d: Option<i64>,
        /// Speciality (with --d)
        #[arg(long, requires = "d")]
        i: Option<i64>,
    },
    /// Print the classification table of special scrolls in P3
    Table {
        /// Genus (2 or 3)
        #[arg(long)]
        g: i64,
        /// Restrict to rows over hyperelliptic curves
        #[arg(long)]
        hyperelliptic: bool,
    },
    /// Project a scroll R_b into P3 from assigned centers
    Project {
        /// Genus of the base curve (2 or 3)
        #[arg(long)]
        g: i64,
        /// Degree of the unisecant divisor b (defaults to the analysis value)
        #[arg(long = "deg-b")]
        deg_b: Option<i64>,
        /// Choice of the divisor b
        #[arg(long = "b-kind", value_enum, default_value_t = BKindArg::Generic)]
        b_kind: BKindArg,
        /// Base curve is hyperelliptic (genus 3 only)
        #[arg(long)]
        hyperelliptic: bool,
        /// Comma-separated centers: X0, X1, Yc:<c>, generic, fiber:<label>;
        /// combine constraints with '+', e.g. X1+fiber:A1
        #[arg(long)]
        points: String,
    },
    /// Run a named invariant-sweep verification suite
    Verify {
        /// Suite: rr-closure, transform-oracle, generica-boundaries,
        /// grassmann-enumeration, reduction-identities
        #[arg(long)]
        suite: String,
        /// Upper genus bound for the sweep
        #[arg(long = "g-max")]
        g_max: Option<i64>,
        /// Upper bound on the number of centers (transform-oracle)
        #[arg(long = "k-max")]
        k_max: Option<i64>,
    },
}

fn run(command: Command) -> scrollcalc::Result<CommandOutput> {
    match command {
        Command::Classify { g, n, d, i } => {
            let query = match (n, d, i) {
                (Some(n), None, None) => ClassifyQuery::ByAmbient { n },
                (None, Some(d), Some(i)) => ClassifyQuery::ByDegreeSpeciality { d, i },
                _ => unreachable!("clap enforces the query group"),
            };
            cmd_classify(g, query)
        }
        Command::Table { g, hyperelliptic } => cmd_table(g, hyperelliptic),
        Command::Project {
            g,
            deg_b,
            b_kind,
            hyperelliptic,
            points,
        } => {
            let b_kind = match b_kind {
                BKindArg::Generic => BKind::Generic,
                BKindArg::Canonical => BKind::Canonical,
            };
            cmd_project(g, deg_b, b_kind, hyperelliptic, &points)
        }
        Command::Verify {
            suite,
            g_max,
            k_max,
        } => cmd_verify(&suite, g_max, k_max),
    }
}

fn main() {
    let cli = Cli::parse();
    let format = match cli.format {
        FormatArg::Text => Format::Text,
        FormatArg::Structured => Format::Structured,
    };
    match run(cli.command) {
        Ok(out) => {
            print!("{}", out.render(format));
            if !out.success {
                std::process::exit(1);
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(1);
        }
    }
}
