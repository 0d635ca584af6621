use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use dzeta::rat::rat_to_string;
use dzeta::report::{weight_block, Report};
use dzeta::{dmatrix, rank_law, relations, w_basis, Sign};

#[derive(Parser)]
#[command(name = "dzeta", version, about = "Exact verification of depth-two double zeta relations of odd weight")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum SignArg {
    #[value(alias = "+")]
    Plus,
    #[value(alias = "-")]
    Minus,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Exact,
    Lemmas,
    Numeric,
}

#[derive(Subcommand)]
enum Command {
    /// Dimension table over a range of odd weights
    Dims { min: i64, max: i64 },
    /// Basis of the restricted period polynomial space of even weight h
    Wbasis { sign: SignArg, h: i64 },
    /// Derivation matrix for odd weight N
    Dmatrix { n: i64 },
    /// Normalized relation basis for odd weight N
    Relations { n: i64 },
    /// Run verification suites for odd weight N; exit 0 iff all pass
    Verify {
        n: i64,
        /// comma-separated subset of exact,lemmas,numeric
        #[arg(long, value_delimiter = ',', default_values = ["exact", "lemmas"])]
        suites: Vec<Suite>,
        #[arg(long, default_value_t = 1e-8)]
        eps: f64,
    },
    /// Full report for every odd weight in [5, max-n]
    Sweep {
        #[arg(long = "max-n", default_value_t = 101)]
        max_n: i64,
        #[arg(long)]
        out: Option<std::path::PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;

fn odd_weight_or_usage(n: i64) -> Result<(), ExitCode> {
    if n < 5 || n % 2 == 0 {
        eprintln!("error: weight must be odd and >= 5, got {n}");
        return Err(ExitCode::from(EXIT_USAGE));
    }
    Ok(())
}

fn run() -> Result<(), ExitCode> {
    let cli = Cli::parse();
    match cli.command {
        Command::Dims { min, max } => {
            if min % 2 == 0 || max % 2 == 0 || min < 5 || min > max {
                eprintln!("error: need odd bounds with 5 <= min <= max");
                return Err(ExitCode::from(EXIT_USAGE));
            }
            println!("{:>5} {:>6} {:>7} {:>7} {:>6} {:>10}", "N", "K-1", "dimW+", "dimW-", "rank", "#relations");
            for n in (min..=max).step_by(2) {
                let (rank, _) = rank_law(n).map_err(fail)?;
                let wp = w_basis(n - 1, Sign::Plus).map_err(fail)?.dim();
                let wm = w_basis(n + 1, Sign::Minus).map_err(fail)?.dim();
                let rels = relations(n).map_err(fail)?.len();
                let k1 = ((n - 3) / 2) as usize;
                println!("{n:>5} {k1:>6} {wp:>7} {wm:>7} {rank:>6} {rels:>10}");
            }
        }
        Command::Wbasis { sign, h } => {
            if h < 4 || h % 2 != 0 {
                eprintln!("error: weight must be even and >= 4, got {h}");
                return Err(ExitCode::from(EXIT_USAGE));
            }
            let s = match sign {
                SignArg::Plus => Sign::Plus,
                SignArg::Minus => Sign::Minus,
            };
            let ps = w_basis(h, s).map_err(fail)?;
            let rows: Vec<Vec<String>> = ps
                .basis
                .iter()
                .map(|p| p.coeff_vec((h - 1) as usize).iter().map(rat_to_string).collect())
                .collect();
            println!("{}", serde_json::json!({ "weight": h, "dim": rows.len(), "basis": rows }));
        }
        Command::Dmatrix { n } => {
            odd_weight_or_usage(n)?;
            let m = dmatrix(n).map_err(fail)?;
            let rows: Vec<Vec<String>> = (0..m.rows())
                .map(|i| m.row(i).iter().map(rat_to_string).collect())
                .collect();
            println!("{}", serde_json::json!({ "weight": n, "dmatrix": rows }));
        }
        Command::Relations { n } => {
            odd_weight_or_usage(n)?;
            let rels: Vec<Vec<String>> = relations(n)
                .map_err(fail)?
                .iter()
                .map(|r| dzeta::rels::normalized_relation(r).iter().map(rat_to_string).collect())
                .collect();
            println!("{}", serde_json::json!({ "weight": n, "relations": rels }));
        }
        Command::Verify { n, suites, eps } => {
            odd_weight_or_usage(n)?;
            let with_lemmas = suites.contains(&Suite::Lemmas);
            let with_numeric = suites.contains(&Suite::Numeric);
            let block = weight_block(n, with_lemmas, with_numeric, eps).map_err(fail)?;
            let exact_ok = !suites.contains(&Suite::Exact)
                || (block.rank == block.predicted_rank && block.exactness.all_pass());
            let lemmas_ok = block
                .lemmas
                .as_ref()
                .map(|l| l.lemma_identity && l.dims_match && l.membership)
                .unwrap_or(true);
            let numeric_ok = block
                .numeric
                .as_ref()
                .map(|c| c.iter().all(|x| x.passes))
                .unwrap_or(true);
            println!("{}", Report::new(vec![block]).to_json());
            if !(exact_ok && lemmas_ok && numeric_ok) {
                return Err(ExitCode::from(EXIT_FAIL));
            }
        }
        Command::Sweep { max_n, out, format } => {
            if max_n < 5 || max_n % 2 == 0 {
                eprintln!("error: --max-n must be odd and >= 5, got {max_n}");
                return Err(ExitCode::from(EXIT_USAGE));
            }
            let mut blocks = Vec::new();
            for n in (5..=max_n).step_by(2) {
                blocks.push(weight_block(n, false, false, 1e-8).map_err(fail)?);
            }
            let report = Report::new(blocks);
            let text = match format {
                Format::Json => report.to_json(),
                Format::Csv => report.to_csv(),
            };
            match out {
                Some(path) => {
                    let mut f = std::fs::File::create(&path).map_err(|e| {
                        eprintln!("error: cannot write {}: {e}", path.display());
                        ExitCode::from(EXIT_FAIL)
                    })?;
                    f.write_all(text.as_bytes()).map_err(|e| {
                        eprintln!("error: write failed: {e}");
                        ExitCode::from(EXIT_FAIL)
                    })?;
                }
                None => println!("{text}"),
            }
        }
    }
    Ok(())
}

fn fail(e: dzeta::Error) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(EXIT_FAIL)
}

fn main() -> ExitCode {
    match run() {
        Ok(()) => ExitCode::SUCCESS,
        Err(code) => code,
    }
}
