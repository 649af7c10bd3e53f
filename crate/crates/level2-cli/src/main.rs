//! `level2`: regenerate tables, verify closed forms by brute force, induce from S₈.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use level2::brute::{
    count_delta_components, count_fixed_tuples, count_m0n_fixed_with, write_verify_report, BruteError, BruteOptions,
    CycleLayout, ExecMode, Strategy, VerifyRecord,
};
use level2::closedform::{
    decomposition, h3_count, hyperelliptic_cohomology, m08_count, printed_hyperelliptic_cohomology,
    printed_quartic_cohomology, quartic_cohomology, quartic_locus_count, CountPolynomial, FormulaEntry, Group,
};
use level2::gf::PrimePower;
use level2::gysin::{compute_bounds, BoundsTable};
use level2::reptheory::{poincare_polynomial, ClassFunction, CohomologyTable, Partition};
use level2::sp6;
use serde::Serialize;

#[derive(Parser, Debug)]
#[command(name = "level2", version, about = "Point counts and cohomology of level-2 moduli of genus-3 curves")]
struct Cli {
    /// Worker threads for enumeration and induction.
    #[arg(long, global = true, value_parser = clap::value_parser!(u32).range(1..))]
    threads: Option<u32>,
    /// Directory for the Sp(6,F_2) cache (flag, then MODULI_CACHE_DIR, then ./.cache).
    #[arg(long, global = true, env = "MODULI_CACHE_DIR", default_value = ".cache")]
    cache_dir: PathBuf,
    #[arg(long, global = true, value_enum, default_value_t = Format::Markdown)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
    Latex,
    Markdown,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableSpace {
    Q2,
    M08,
    #[value(name = "h3-s8")]
    H3S8,
    #[value(name = "h3-s7")]
    H3S7,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VerifySpace {
    Q2,
    M08,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CohomologySpace {
    Q2,
    H3,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CacheAction {
    Status,
    Build,
    Clear,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a tabulated count polynomial per conjugacy class.
    Tables { space: TableSpace },
    /// Compare brute-force counts with the closed forms.
    Verify {
        space: VerifySpace,
        /// Comma-separated field sizes.
        #[arg(long, value_delimiter = ',', default_value = "3")]
        q: Vec<u64>,
        /// Bracketed partitions, e.g. "[7],[2^2,1^3]"; a bare "7" is one partition.
        #[arg(long)]
        partitions: Option<String>,
        #[arg(long, default_value = "auto")]
        strategy: Strategy,
        /// Compare U, Δ_l, Δ_c and Δ_l∩Δ_c instead of the quotient.
        #[arg(long)]
        components: bool,
        /// Where `verify-<space>-q<q>.json` is written.
        #[arg(long, default_value = ".")]
        report_dir: PathBuf,
    },
    /// Cohomology as S7-representations, from the counts under minimal purity.
    Cohomology {
        space: CohomologySpace,
        /// Print the Poincaré polynomial instead of the table.
        #[arg(long)]
        poincare: bool,
    },
    /// Induce the M_{0,8} counts from S8 to Sp(6,F_2) and restrict to S7.
    Induce {
        /// Rebuild the group enumeration even if a valid cache exists.
        #[arg(long)]
        recompute: bool,
        /// Only print the group order, the image order and the index.
        #[arg(long)]
        check_index: bool,
    },
    /// Bounds on H^*(M_3[2]) from the Gysin sequences.
    Bounds,
    /// Inspect, build or remove the Sp(6,F_2) cache.
    Cache {
        #[arg(value_enum, default_value_t = CacheAction::Status)]
        action: CacheAction,
    },
}

/// Failure classes mapped to exit codes 1 (disagreement) and 2 (configuration).
enum Failure {
    Mismatch(String),
    Config(String),
}

type CmdResult = Result<(), Failure>;

fn config<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Config(e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = configure_threads(n as usize) {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let result = match &cli.command {
        Command::Tables { space } => cmd_tables(*space, cli.format),
        Command::Verify { space, q, partitions, strategy, components, report_dir } => {
            cmd_verify(*space, q, partitions.as_deref(), *strategy, *components, report_dir)
        }
        Command::Cohomology { space, poincare } => cmd_cohomology(*space, *poincare, cli.format),
        Command::Induce { recompute, check_index } => cmd_induce(&cli.cache_dir, *recompute, *check_index, cli.format),
        Command::Bounds => cmd_bounds(cli.format),
        Command::Cache { action } => cmd_cache(&cli.cache_dir, *action),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
        Err(Failure::Config(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

#[cfg(feature = "parallel")]
fn configure_threads(n: usize) -> Result<(), String> {
    rayon::ThreadPoolBuilder::new().num_threads(n).build_global().map_err(|e| e.to_string())
}

#[cfg(not(feature = "parallel"))]
fn configure_threads(_: usize) -> Result<(), String> {
    Ok(())
}

fn exec_mode() -> ExecMode {
    if cfg!(feature = "parallel") {
        ExecMode::Parallel
    } else {
        ExecMode::Sequential
    }
}

/// `2q^{5}+2q^{3}`.
fn latex_poly(p: &CountPolynomial) -> String {
    let plain = p.to_string();
    let mut out = String::new();
    let mut chars = plain.chars().peekable();
    while let Some(c) = chars.next() {
        if c == '^' {
            out.push_str("^{");
            while let Some(d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                out.push(*d);
                chars.next();
            }
            out.push('}');
        } else {
            out.push(c);
        }
    }
    out
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

#[derive(Serialize)]
struct PolyRow<'a> {
    lambda: String,
    coeffs: &'a [i64],
}

fn render_poly_table(rows: &[(Partition, CountPolynomial)], format: Format, caption: &str) -> String {
    let mut out = String::new();
    match format {
        Format::Csv => {
            for (lam, p) in rows {
                out += &format!("{};{}\n", lam.plain(), join(p.coeffs()));
            }
        }
        Format::Json => {
            let json: Vec<PolyRow> = rows.iter().map(|(l, p)| PolyRow { lambda: l.to_string(), coeffs: p.coeffs() }).collect();
            out = serde_json::to_string_pretty(&json).expect("rows serialise") + "\n";
        }
        Format::Latex => {
            out += "\\begin{tabular}{|c|c|}\n\\hline\n\\(\\lambda\\) & count \\\\\n\\hline\n";
            for (lam, p) in rows {
                out += &format!("\\(\\left[{}\\right]\\) & \\({}\\) \\\\\n", lam.compact(), latex_poly(p));
            }
            out += &format!("\\hline\n\\end{{tabular}}\n% {caption}\n");
        }
        Format::Markdown => {
            out += &format!("{caption}\n\n| λ | count |\n|---|---|\n");
            for (lam, p) in rows {
                out += &format!("| {lam} | {p} |\n");
            }
        }
    }
    out
}

fn cmd_tables(space: TableSpace, format: Format) -> CmdResult {
    let (n, caption): (u32, &str) = match space {
        TableSpace::Q2 => (7, "S7-equivariant point count of Q[2]"),
        TableSpace::M08 => (8, "S8-equivariant point count of M_{0,8}"),
        TableSpace::H3S8 => (8, "S8-equivariant point count of H_3[2]"),
        TableSpace::H3S7 => (7, "S7-equivariant point count of H_3[2]"),
    };
    let rows = Partition::all(n)
        .into_iter()
        .map(|lam| {
            let p = match space {
                TableSpace::Q2 => quartic_locus_count(&lam),
                TableSpace::M08 => m08_count(&lam),
                TableSpace::H3S8 => h3_count(&lam, Group::S8),
                TableSpace::H3S7 => h3_count(&lam, Group::S7),
            };
            p.map(|p| (lam, p))
        })
        .collect::<Result<Vec<_>, _>>()
        .map_err(config)?;
    print!("{}", render_poly_table(&rows, format, caption));
    Ok(())
}

/// `"[7],[2^2,1^3]"` or a single bare partition such as `"7"` or `"2,2,1,1,1"`.
fn parse_partitions(s: &str) -> Result<Vec<Partition>, String> {
    if !s.contains('[') {
        return s.parse().map(|p| vec![p]).map_err(|e: level2::reptheory::RepError| e.to_string());
    }
    let mut out = Vec::new();
    let mut rest = s;
    while let Some(start) = rest.find('[') {
        let end = rest[start..].find(']').ok_or_else(|| format!("unbalanced bracket in {s:?}"))? + start;
        out.push(rest[start..=end].parse().map_err(|e: level2::reptheory::RepError| e.to_string())?);
        rest = &rest[end + 1..];
    }
    Ok(out)
}

fn skippable(e: &BruteError) -> bool {
    matches!(e, BruteError::ExtensionTooLarge { .. } | BruteError::TooMuchWork { .. } | BruteError::StrategyNotApplicable { .. })
}

fn cmd_verify(
    space: VerifySpace,
    qs: &[u64],
    partitions: Option<&str>,
    strategy: Strategy,
    components: bool,
    report_dir: &Path,
) -> CmdResult {
    let n = match space {
        VerifySpace::Q2 => 7,
        VerifySpace::M08 => 8,
    };
    let lambdas = match partitions {
        Some(s) => parse_partitions(s).map_err(Failure::Config)?,
        None => Partition::all(n),
    };
    if let Some(bad) = lambdas.iter().find(|l| l.n() != n) {
        return Err(Failure::Config(format!("{bad} is not a partition of {n}")));
    }
    for &q in qs {
        match PrimePower::new(q) {
            Ok(_) => {}
            Err(e) => return Err(Failure::Config(format!("--q {q}: {e}"))),
        }
    }
    if components && space != VerifySpace::Q2 {
        return Err(Failure::Config("--components applies to q2 only".into()));
    }
    let opts = BruteOptions { strategy, exec: exec_mode(), ..Default::default() };
    let (mut agree, mut executed, mut skipped) = (0usize, 0usize, 0usize);
    for &q in qs {
        let mut records = Vec::new();
        for lam in &lambdas {
            let start = Instant::now();
            let outcome: Result<Vec<(String, i128, i128)>, BruteError> = match (space, components) {
                (VerifySpace::M08, _) => count_m0n_fixed_with(lam, q, 3, &opts).map(|r| {
                    vec![(lam.to_string(), m08_count(lam).expect("tabulated").eval(q as i128), r.quotient_count)]
                }),
                (VerifySpace::Q2, false) => count_fixed_tuples(&CycleLayout::canonical(lam), q, &opts).map(|r| {
                    vec![(lam.to_string(), quartic_locus_count(lam).expect("tabulated").eval(q as i128), r.quotient_count)]
                }),
                (VerifySpace::Q2, true) => {
                    let Some(d) = decomposition(lam) else {
                        println!("{lam} q={q} SKIPPED (no transcribed component formulas)");
                        skipped += 1;
                        continue;
                    };
                    count_delta_components(&CycleLayout::canonical(lam), q, d.uspec(), &opts).map(|c| {
                        let ev = |e: &FormulaEntry| e.eval(q as i128).expect("integral at odd q");
                        vec![
                            (format!("{lam} U"), ev(d.ambient), c.u),
                            (format!("{lam} Δ_l"), ev(d.delta_l), c.delta_l),
                            (format!("{lam} Δ_c"), ev(d.delta_c), c.delta_c),
                            (format!("{lam} Δ_l∩Δ_c"), ev(d.intersection), c.both),
                        ]
                    })
                }
            };
            let elapsed = start.elapsed();
            match outcome {
                Ok(rows) => {
                    for (label, closed, brute) in rows {
                        let rec = VerifyRecord {
                            lambda: label.clone(),
                            closed_form_value: closed,
                            brute_value: brute,
                            agree: closed == brute,
                            elapsed_ms: elapsed.as_millis(),
                        };
                        executed += 1;
                        agree += rec.agree as usize;
                        println!(
                            "{label} q={q} closed={closed} brute={brute} {} ({} ms)",
                            if rec.agree { "AGREE" } else { "MISMATCH" },
                            rec.elapsed_ms
                        );
                        records.push(rec);
                    }
                }
                Err(e) if skippable(&e) => {
                    println!("{lam} q={q} SKIPPED ({e})");
                    skipped += 1;
                }
                Err(e) => return Err(Failure::Mismatch(format!("{lam} q={q}: {e}"))),
            }
        }
        let label = match (space, components) {
            (VerifySpace::Q2, false) => "q2",
            (VerifySpace::Q2, true) => "q2-components",
            (VerifySpace::M08, _) => "m08",
        };
        let path = write_verify_report(report_dir, label, q, &records).map_err(config)?;
        println!("report: {}", path.display());
    }
    println!("{agree}/{executed} AGREE, {skipped} SKIPPED");
    if agree == executed {
        Ok(())
    } else {
        Err(Failure::Mismatch(format!("{} comparisons disagree", executed - agree)))
    }
}

fn render_cohomology(t: &CohomologyTable, format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Csv => {
            out += &format!("k;{}\n", t.irreps.iter().map(|p| p.plain()).collect::<Vec<_>>().join(";"));
            for (k, row) in t.rows.iter().enumerate() {
                out += &format!("{k};{}\n", row.iter().map(|m| m.to_string()).collect::<Vec<_>>().join(";"));
            }
        }
        Format::Json => out = serde_json::to_string_pretty(t).expect("table serialises") + "\n",
        Format::Latex => {
            out += &format!("\\begin{{tabular}}{{|c|{}|}}\n\\hline\n", "c".repeat(t.irreps.len()));
            let head: Vec<String> = t.irreps.iter().map(|p| format!("\\(s_{{{}}}\\)", p.compact())).collect();
            out += &format!(" & {} \\\\\n\\hline\n", head.join(" & "));
            for (k, row) in t.rows.iter().enumerate() {
                out += &format!("\\(H^{{{k}}}\\) & {} \\\\\n", join(row).replace(',', " & "));
            }
            out += "\\hline\n\\end{tabular}\n";
        }
        Format::Markdown => {
            let head: Vec<String> = t.irreps.iter().map(|p| format!("s{p}")).collect();
            out += &format!("| | {} |\n|---|{}\n", head.join(" | "), "---|".repeat(head.len()));
            for (k, row) in t.rows.iter().enumerate() {
                out += &format!("| H^{k} | {} |\n", row.iter().map(|m| m.to_string()).collect::<Vec<_>>().join(" | "));
            }
        }
    }
    out
}

fn cmd_cohomology(space: CohomologySpace, poincare: bool, format: Format) -> CmdResult {
    let (computed, printed) = match space {
        CohomologySpace::Q2 => (quartic_cohomology(), printed_quartic_cohomology()),
        CohomologySpace::H3 => (hyperelliptic_cohomology(), printed_hyperelliptic_cohomology()),
    };
    let table = computed.map_err(config)?;
    if poincare {
        println!("{}", poincare_polynomial(&table).display_in("t"));
        return Ok(());
    }
    print!("{}", render_cohomology(&table, format));
    for (k, (a, b)) in table.rows.iter().zip(&printed.rows).enumerate() {
        for ((x, y), irrep) in a.iter().zip(b).zip(&table.irreps) {
            if x != y {
                eprintln!("note: H^{k} s{irrep}: computed {x}, printed {y}");
            }
        }
    }
    Ok(())
}

fn cmd_induce(cache_dir: &Path, recompute: bool, check_index: bool, format: Format) -> CmdResult {
    let start = Instant::now();
    let (group, status) = if recompute {
        let g = sp6::generate_group();
        sp6::write_cache(cache_dir, &g).map_err(config)?;
        (g, sp6::CacheStatus::Built)
    } else {
        sp6::load_or_generate(cache_dir).map_err(config)?
    };
    eprintln!("group: {:?} {} in {:?}", status, sp6::cache_path(cache_dir).display(), start.elapsed());
    let emb = sp6::embed_s8().map_err(|e| Failure::Mismatch(e.to_string()))?;
    if check_index {
        let index = group.len() / emb.image_size();
        println!("{} / {} / {}", group.len(), emb.image_size(), index);
        let ok = group.len() == sp6::GROUP_ORDER && emb.image_size() == sp6::S8_ORDER && emb.image().all(|m| group.contains(m));
        return if ok { Ok(()) } else { Err(Failure::Mismatch("unexpected group or image order".into())) };
    }
    let psi = ClassFunction::try_from_fn(8, m08_count).map_err(config)?;
    let fusion = sp6::fusion(&group, &emb, exec_mode());
    let induced = fusion.induce(&psi).map_err(|e| Failure::Mismatch(e.to_string()))?;
    let restricted = sp6::restrict_induced_to_s7(&induced);
    let mut bad = 0;
    let mut compare = |cf: &ClassFunction<CountPolynomial>, group: Group| -> Vec<(Partition, CountPolynomial)> {
        cf.values
            .iter()
            .map(|(mu, v)| {
                let stored = h3_count(mu, group).expect("tabulated");
                let ok = stored == *v;
                bad += !ok as usize;
                if format == Format::Markdown {
                    eprintln!("{mu} {:?} {}", group, if ok { "AGREE" } else { "DISAGREE" });
                }
                (mu.clone(), v.clone())
            })
            .collect()
    };
    let s8_rows = compare(&induced, Group::S8);
    let s7_rows = compare(&restricted, Group::S7);
    print!("{}", render_poly_table(&s8_rows, format, "Induced to Sp(6,F_2), on S8 classes"));
    print!("{}", render_poly_table(&s7_rows, format, "Restricted to S7"));
    println!("{} rows, {} disagree", s8_rows.len() + s7_rows.len(), bad);
    if bad == 0 {
        Ok(())
    } else {
        Err(Failure::Mismatch(format!("{bad} induced rows disagree with the stored tables")))
    }
}

fn render_bounds(t: &BoundsTable, format: Format) -> String {
    match format {
        Format::Csv => t.to_csv(),
        Format::Json => serde_json::to_string_pretty(t).expect("bounds serialise") + "\n",
        Format::Latex => {
            let mut out = String::from("\\begin{tabular}{|c|c|c|l|}\n\\hline\n\\(k\\) & \\(\\lambda\\) & \\(n^k\\) & bound \\\\\n\\hline\n");
            for e in t.entries.iter().filter(|e| e.n_k != 0) {
                let s = e.statement().unwrap_or_default().replace('≥', "\\geq ");
                out += &format!("{} & \\(s_{{{}}}\\) & {} & \\({}\\) \\\\\n", e.k, e.lambda.compact(), e.n_k, s);
            }
            out + "\\hline\n\\end{tabular}\n"
        }
        Format::Markdown => {
            let mut out = String::from("| k | λ | n^k | bound |\n|---|---|---|---|\n");
            for e in t.entries.iter().filter(|e| e.n_k != 0) {
                out += &format!("| {} | s{} | {} | {} |\n", e.k, e.lambda, e.n_k, e.statement().unwrap_or_default());
            }
            out
        }
    }
}

fn cmd_bounds(format: Format) -> CmdResult {
    let q = quartic_cohomology().map_err(config)?;
    let h = hyperelliptic_cohomology().map_err(config)?;
    let table = compute_bounds(&q, &h).map_err(config)?;
    print!("{}", render_bounds(&table, format));
    Ok(())
}

fn cmd_cache(dir: &Path, action: CacheAction) -> CmdResult {
    let path = sp6::cache_path(dir);
    match action {
        CacheAction::Status => match sp6::read_cache(dir) {
            Ok(g) => println!("{}: valid, {} elements", path.display(), g.len()),
            Err(sp6::Sp6Error::Io { .. }) => println!("{}: absent", path.display()),
            Err(e) => println!("{}: {e}", path.display()),
        },
        CacheAction::Build => {
            let (g, status) = sp6::load_or_generate(dir).map_err(config)?;
            println!("{}: {:?}, {} elements", path.display(), status, g.len());
        }
        CacheAction::Clear => {
            match std::fs::remove_file(&path) {
                Ok(()) => println!("removed {}", path.display()),
                Err(e) if e.kind() == std::io::ErrorKind::NotFound => println!("{}: absent", path.display()),
                Err(e) => return Err(config(e)),
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_lists() {
        let ps = parse_partitions("[7],[2^2,1^3]").unwrap();
        assert_eq!(ps.len(), 2);
        assert_eq!(ps[1].to_string(), "[2^2,1^3]");
        assert_eq!(parse_partitions("7").unwrap()[0].to_string(), "[7]");
        assert!(parse_partitions("[7").is_err());
    }

    #[test]
    fn latex_exponents_are_braced() {
        let p = CountPolynomial::parse("2q^5+2q^3").unwrap();
        assert_eq!(latex_poly(&p), "2q^{5}+2q^{3}");
    }
}
