use std::process::ExitCode;

use anyhow::Result;
use clap::{Parser, Subcommand, ValueEnum};
use hooklab::bijections::{self, BijectionRecord};
use hooklab::oracle::{self, CountTable, Params};
use hooklab::qseries::{self, Series};
use hooklab::verify::{self, Identity, VerifyConfig};
use hooklab::Partition;

#[derive(Parser, Debug)]
#[command(name = "hooklab", version, about = "Fixed first-column hooks in integer partitions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compare generating-function coefficients with brute-force counts.
    Verify {
        /// One of: thm2.1, prop2.2, thm3.2, thm3.3, thm3.4, thm3.5, cor3.6,
        /// thm4.1, thm4.2, thm4.3, pentagonal-truncation, all.
        #[arg(value_parser = parse_identity)]
        identity: Target,
        #[arg(long, allow_hyphen_values = true)]
        h: Option<i64>,
        #[arg(long)]
        k: Option<i64>,
        #[arg(long)]
        a: Option<usize>,
        #[arg(long)]
        b: Option<usize>,
        #[arg(long, default_value_t = 30)]
        nmax: u32,
        #[arg(long, default_value_t = 60)]
        order: i64,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
    },
    /// Print a sequence of counts.
    Seq {
        /// One of: fixed-hooks, parts-eq-mult, h-fixed-by-part, h-fixed-by-hook,
        /// first-column-k-hooks, M (mex-class), generalized-mex, ones-exact,
        /// ones-single-with-length, partition-numbers.
        statistic: String,
        #[arg(long, allow_hyphen_values = true)]
        h: Option<i64>,
        #[arg(long)]
        k: Option<i64>,
        #[arg(long)]
        i: Option<u32>,
        #[arg(long, default_value_t = 30)]
        nmax: u32,
        #[arg(long, value_enum, default_value_t = SeqFormat::Csv)]
        format: SeqFormat,
        /// Index given to the first entry of a b-file.
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        offset: i64,
        /// Count by enumeration or read off the generating function.
        #[arg(long, value_enum, default_value_t = Source::Oracle)]
        source: Source,
    },
    /// Apply F, B or the mex map (or an inverse) and print the result.
    Bijection {
        #[arg(value_enum)]
        name: MapName,
        /// Input partition, or a pair `[[..],[..]]` for F.
        #[arg(long)]
        input: Option<String>,
        #[arg(long)]
        lam: Option<String>,
        #[arg(long)]
        mu: Option<String>,
        #[arg(long)]
        a: Option<usize>,
        #[arg(long)]
        b: Option<usize>,
        #[arg(long)]
        i: Option<u32>,
        #[arg(long)]
        k: Option<u32>,
        #[arg(long, value_enum, default_value_t = Direction::Forward)]
        direction: Direction,
        /// Also print the full JSON record.
        #[arg(long)]
        trace: bool,
    },
}

#[derive(Debug, Clone, Copy)]
enum Target {
    One(Identity),
    All,
}

fn parse_identity(s: &str) -> Result<Target, String> {
    if s == "all" {
        return Ok(Target::All);
    }
    Identity::from_id(s).map(Target::One).ok_or_else(|| {
        let ids: Vec<&str> = Identity::ALL.iter().map(|t| t.id()).collect();
        format!("unknown id '{s}'; expected one of {} or all", ids.join(", "))
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SeqFormat {
    Csv,
    Json,
    Bfile,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Source {
    Oracle,
    Gf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MapName {
    #[value(name = "F")]
    F,
    #[value(name = "B")]
    B,
    #[value(name = "mex")]
    Mex,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Direction {
    Forward,
    Inverse,
}

/// Bad input: reported like a usage error.
#[derive(Debug)]
struct UsageError(String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

fn usage<T>(msg: impl Into<String>) -> Result<T> {
    Err(UsageError(msg.into()).into())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Ok(threads) = std::env::var("HOOKLAB_THREADS") {
        match threads.parse::<usize>() {
            Ok(n) if n > 0 => {
                let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
            }
            _ => {
                eprintln!("error: HOOKLAB_THREADS must be a positive integer, got '{threads}'");
                return ExitCode::from(2);
            }
        }
    }
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.downcast_ref::<UsageError>().is_some() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}

fn run(command: Command) -> Result<ExitCode> {
    match command {
        Command::Verify { identity, h, k, a, b, nmax, order, format } => {
            let config = VerifyConfig { n_max: nmax, order, h, k, a, b };
            let ids = match identity {
                Target::One(t) => vec![t],
                Target::All => Identity::ALL.to_vec(),
            };
            let reports: Vec<_> = ids.iter().map(|&t| verify::verify(t, &config)).collect();
            match format {
                ReportFormat::Text => {
                    for r in &reports {
                        println!("{r}");
                    }
                }
                ReportFormat::Json if reports.len() == 1 => println!("{}", serde_json::to_string_pretty(&reports[0])?),
                ReportFormat::Json => println!("{}", serde_json::to_string_pretty(&reports)?),
            }
            Ok(if reports.iter().all(|r| r.all_match()) { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Seq { statistic, h, k, i, nmax, format, offset, source } => {
            let seq = match source {
                Source::Oracle => Sequence::from(oracle_table(&statistic, h, k, i, nmax)?),
                Source::Gf => gf_sequence(&statistic, h, k, nmax)?,
            };
            print!("{}", seq.render(format, offset));
            Ok(ExitCode::SUCCESS)
        }
        Command::Bijection { name, input, lam, mu, a, b, i, k, direction, trace } => {
            let record = run_bijection(name, direction, input, lam, mu, a, b, i, k)?;
            match (&record.output, record.i_or_k, name, direction) {
                (out, Some(i), MapName::B, Direction::Inverse) => println!("({out},{i})"),
                (out, ..) => println!("{out}"),
            }
            if trace {
                println!("{}", serde_json::to_string(&record)?);
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn need<T>(value: Option<T>, flag: &str, what: &str) -> Result<T> {
    match value {
        Some(v) => Ok(v),
        None => usage(format!("{what} requires --{flag}")),
    }
}

fn parse_partition(text: &str, flag: &str) -> Result<Partition> {
    match text.parse::<Partition>() {
        Ok(p) => Ok(p),
        Err(e) => usage(format!("--{flag}: {e}")),
    }
}

fn parse_pair(text: &str) -> Result<(Partition, Partition)> {
    match serde_json::from_str::<(Partition, Partition)>(text) {
        Ok(pair) => Ok(pair),
        Err(e) => usage(format!("--input: expected a pair of partitions [[..],[..]]: {e}")),
    }
}

#[allow(clippy::too_many_arguments)]
fn run_bijection(
    name: MapName,
    direction: Direction,
    input: Option<String>,
    lam: Option<String>,
    mu: Option<String>,
    a: Option<usize>,
    b: Option<usize>,
    i: Option<u32>,
    k: Option<u32>,
) -> Result<BijectionRecord> {
    let single = |what: &str| -> Result<Partition> {
        let text = need(input.clone(), "input", what)?;
        parse_partition(&text, "input")
    };
    let result = match (name, direction) {
        (MapName::F, dir) => {
            let a = need(a, "a", "F")?;
            let b = need(b, "b", "F")?;
            let (first, second) = match (&input, &lam, &mu) {
                (Some(text), None, None) => parse_pair(text)?,
                (None, Some(l), Some(m)) => (parse_partition(l, "lam")?, parse_partition(m, "mu")?),
                _ => return usage("F takes either --input [[..],[..]] or both --lam and --mu"),
            };
            match dir {
                Direction::Forward => bijections::f_bijection_traced(a, b, &first, &second),
                Direction::Inverse => bijections::f_inverse_traced(a, b, &first, &second),
            }
        }
        (MapName::B, Direction::Forward) => {
            let lam = single("B")?;
            bijections::b_bijection_traced(&lam, need(i, "i", "B")?)
        }
        (MapName::B, Direction::Inverse) => bijections::b_inverse_traced(&single("B inverse")?),
        (MapName::Mex, Direction::Forward) => bijections::mex_map_traced(&single("mex")?),
        (MapName::Mex, Direction::Inverse) => {
            let mu = single("mex inverse")?;
            bijections::mex_map_inverse_traced(&mu, need(k, "k", "mex inverse")?)
        }
    };
    match result {
        Ok(record) => Ok(record),
        Err(e) => usage(format!("precondition failed: {e}")),
    }
}

fn oracle_table(statistic: &str, h: Option<i64>, k: Option<i64>, i: Option<u32>, nmax: u32) -> Result<CountTable> {
    let table = match statistic {
        "fixed-hooks" => oracle::count_fixed_hooks(need(h, "h", statistic)?, nmax),
        "parts-eq-mult" => match i {
            Some(i) => oracle::count_parts_eq_mult_of_size(i, nmax),
            None => oracle::count_parts_eq_mult(nmax),
        },
        "h-fixed-by-part" => oracle::count_h_fixed_by_part(need(h, "h", statistic)?, positive_k(k, statistic)?, nmax),
        "h-fixed-by-hook" => oracle::count_h_fixed_by_hook(need(h, "h", statistic)?, positive_k(k, statistic)?, nmax),
        "first-column-k-hooks" => oracle::count_first_column_k_hooks(positive_k(k, statistic)?, nmax),
        "M" | "mex-class" => oracle::count_mex_class(positive_k(k, statistic)?, nmax),
        "generalized-mex" => oracle::count_generalized_mex(need(h, "h", statistic)?, positive_k(k, statistic)?, nmax),
        "ones-exact" => {
            let h = need(h, "h", statistic)?;
            match oracle::count_ones_exact(h, nmax) {
                Some(t) => t,
                None => return usage(format!("ones-exact needs h >= -1, got {h}")),
            }
        }
        "ones-single-with-length" => oracle::count_ones_single_with_length(need(h, "h", statistic)?, nmax),
        "partition-numbers" => CountTable {
            statistic: "partition-numbers".into(),
            params: Params::none(),
            values: oracle::partition_counts(nmax).into_iter().enumerate().map(|(n, c)| (n as u32, c)).collect(),
        },
        other => return usage(format!("unknown statistic '{other}'")),
    };
    Ok(table)
}

fn positive_k(k: Option<i64>, statistic: &str) -> Result<i64> {
    let k = need(k, "k", statistic)?;
    if k < 1 {
        return usage(format!("--k must be >= 1, got {k}"));
    }
    Ok(k)
}

fn gf_sequence(statistic: &str, h: Option<i64>, k: Option<i64>, nmax: u32) -> Result<Sequence> {
    let order = i64::from(nmax);
    let series: Series = match statistic {
        "fixed-hooks" => match need(h, "h", statistic)? {
            0 => qseries::gf_fixed_hooks(order),
            h => qseries::gf_all_h_fixed(h, order),
        },
        "parts-eq-mult" => qseries::gf_fixed_hooks(order),
        "h-fixed-by-part" => qseries::gf_h_fixed_part_k(need(h, "h", statistic)?, positive_k(k, statistic)?, order)?,
        "h-fixed-by-hook" => {
            let (h, k) = (need(h, "h", statistic)?, positive_k(k, statistic)?);
            if h >= k {
                Series::zero(order)
            } else {
                qseries::gf_h_fixed_hook_k(h, k, order)?
            }
        }
        "first-column-k-hooks" => qseries::gf_first_column_k_hooks(positive_k(k, statistic)?, order)?,
        "M" | "mex-class" => qseries::gf_mex_class(positive_k(k, statistic)?, order)?,
        "generalized-mex" => {
            qseries::gf_generalized_mex_inner(need(h, "h", statistic)?, positive_k(k, statistic)?, order)?
        }
        "ones-exact" => match qseries::gf_ones_exact(need(h, "h", statistic)?, order) {
            Ok(s) => s,
            Err(e) => return usage(e.to_string()),
        },
        "ones-single-with-length" => {
            let h = need(h, "h", statistic)?;
            qseries::gf_ones_shifted(h, order + h).shift(-h)
        }
        "partition-numbers" => {
            let p = qseries::partition_numbers(nmax as usize);
            Series::from_coeffs(0, order, p)
        }
        other => return usage(format!("unknown statistic '{other}'")),
    };
    let values = (0..=order).map(|n| (n as u32, series.coeff(n).to_string())).collect();
    Ok(Sequence { statistic: statistic.to_string(), values, table: None })
}

/// A sequence ready for output; oracle tables keep their own JSON form.
struct Sequence {
    statistic: String,
    values: Vec<(u32, String)>,
    table: Option<CountTable>,
}

impl From<CountTable> for Sequence {
    fn from(t: CountTable) -> Self {
        let values = t.values.iter().map(|(&n, c)| (n, c.to_string())).collect();
        Self { statistic: t.statistic.clone(), values, table: Some(t) }
    }
}

impl Sequence {
    fn render(&self, format: SeqFormat, offset: i64) -> String {
        match (format, &self.table) {
            (SeqFormat::Csv, Some(t)) => t.to_csv(),
            (SeqFormat::Bfile, Some(t)) => t.to_bfile(offset),
            (SeqFormat::Json, Some(t)) => format!("{}\n", t.to_json()),
            (SeqFormat::Csv, None) => {
                let mut out = String::from("n,count\n");
                for (n, c) in &self.values {
                    out.push_str(&format!("{n},{c}\n"));
                }
                out
            }
            (SeqFormat::Bfile, None) => {
                self.values.iter().enumerate().map(|(idx, (_, c))| format!("{} {c}\n", offset + idx as i64)).collect()
            }
            (SeqFormat::Json, None) => {
                let values: serde_json::Map<String, serde_json::Value> =
                    self.values.iter().map(|(n, c)| (n.to_string(), serde_json::Value::String(c.clone()))).collect();
                format!("{}\n", serde_json::json!({ "statistic": self.statistic, "values": values }))
            }
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
    fn identity_parser() {
        assert!(matches!(parse_identity("thm2.1"), Ok(Target::One(Identity::FixedHookCount))));
        assert!(matches!(parse_identity("all"), Ok(Target::All)));
        assert!(parse_identity("thm7").is_err());
    }

    #[test]
    fn gf_and_oracle_sequences_agree() {
        for (stat, h, k) in
            [("fixed-hooks", Some(0), None), ("M", None, Some(2)), ("ones-single-with-length", Some(-2), None)]
        {
            let a = Sequence::from(oracle_table(stat, h, k, None, 20).unwrap());
            let b = gf_sequence(stat, h, k, 20).unwrap();
            assert_eq!(a.values, b.values, "{stat}");
        }
    }
}
