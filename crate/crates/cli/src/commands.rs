use std::collections::BTreeMap;
use std::path::Path;

use torus2dd::bounds::{known_bounds, BoundInterval};
use torus2dd::constructions::{construct, Family};
use torus2dd::domination::{is_2dd_set, Verdict};
use torus2dd::sequence::{
    ab_block_values, check_lemma1, check_window4, column_sequence, max_zero_run, rotate_to_proper, ColumnCheck,
    ProperForm,
};
use torus2dd::solver::{solve, Budget, Method, SolveReport};
use torus2dd::TorusDims;

use crate::{Certificate, CliError, Command, Format, Out, Outcome};

const TOOL: &str = concat!("torus2dd ", env!("CARGO_PKG_VERSION"));

pub(crate) fn dispatch(cmd: &Command, out: &mut Out, err: &mut Out) -> Result<Outcome, CliError> {
    match cmd {
        Command::Solve { m, n, method, time_limit, node_limit, output } => {
            let budget = Budget { time_limit: *time_limit, node_limit: *node_limit };
            cmd_solve(*m, *n, *method, &budget, output.as_deref(), out)
        }
        Command::Verify { certificate } => cmd_verify(certificate, out),
        Command::Construct { family, m, n, output } => cmd_construct(*family, *m, *n, output.as_deref(), out, err),
        Command::Analyze { certificate } => cmd_analyze(certificate, out),
        Command::Bounds { m, n } => cmd_bounds(*m, *n, out),
        Command::Table { theorem, n_max, format, method, time_limit } => {
            let budget = Budget { time_limit: *time_limit, node_limit: None };
            cmd_table(*theorem, *n_max, *format, *method, &budget, out)
        }
    }
}

fn meta(pairs: &[(&str, String)]) -> BTreeMap<String, String> {
    let mut map: BTreeMap<String, String> = pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect();
    map.insert("tool".into(), TOOL.into());
    map
}

fn cmd_solve(
    m: usize,
    n: usize,
    method: Method,
    budget: &Budget,
    output: Option<&Path>,
    out: &mut Out,
) -> Result<Outcome, CliError> {
    let dims = TorusDims::new(m, n)?;
    let report = solve(dims, method, budget)?;
    let mut line = format!("gamma={} proven={}", report.gamma, report.proven_optimal);
    if !report.proven_optimal {
        line += &format!(" upper={}", report.gamma);
    }
    writeln!(
        out,
        "{line} method={} nodes={} elapsed={:?}",
        report.method, report.nodes_explored, report.elapsed
    )?;
    if let Some(path) = output {
        let cert = Certificate::from_set(
            &report.optimal_set,
            meta(&[
                ("gamma", report.gamma.to_string()),
                ("method", report.method.to_string()),
                ("proven", report.proven_optimal.to_string()),
            ]),
        );
        cert.write(path)?;
    }
    Ok(if report.proven_optimal { Outcome::Success } else { Outcome::BudgetExhausted })
}

fn cmd_verify(path: &Path, out: &mut Out) -> Result<Outcome, CliError> {
    let cert = Certificate::read(path)?;
    let set = cert.to_set();
    match is_2dd_set(set.dims(), &set)? {
        Verdict::Valid => {
            writeln!(out, "valid size={} dims={}", set.len(), set.dims())?;
            Ok(Outcome::Success)
        }
        Verdict::Invalid(w) => {
            writeln!(
                out,
                "invalid witness={} neighbor_hits={} dist2_hits={}",
                w.vertex, w.neighbor_hits, w.dist2_hits
            )?;
            Ok(Outcome::Invalid)
        }
    }
}

fn describe_known(b: &BoundInterval) -> String {
    match b.exact {
        Some(_) => format!("known {b}"),
        None => format!("known bounds {b}"),
    }
}

fn cmd_construct(
    family: Family,
    m: Option<usize>,
    n: usize,
    output: Option<&Path>,
    out: &mut Out,
    err: &mut Out,
) -> Result<Outcome, CliError> {
    let m = match (m, family.fixed_m()) {
        (Some(m), _) => m,
        (None, Some(m)) => m,
        (None, None) => return Err(CliError::Usage(format!("family {family} needs --m"))),
    };
    let set = construct(family, m, n)?;
    let cert = Certificate::from_set(
        &set,
        meta(&[("family", family.to_string()), ("size", set.len().to_string())]),
    );
    let summary = format!(
        "family={family} dims={} size={} {}",
        set.dims(),
        set.len(),
        describe_known(&known_bounds(m, n)?)
    );
    match output {
        Some(path) => {
            cert.write(path)?;
            writeln!(out, "{summary}")?;
        }
        None => {
            out.write_all(cert.to_toml().as_bytes())?;
            writeln!(err, "{summary}")?;
        }
    }
    Ok(Outcome::Success)
}

fn list<T: ToString>(xs: impl IntoIterator<Item = T>) -> String {
    format!("[{}]", xs.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", "))
}

fn cmd_analyze(path: &Path, out: &mut Out) -> Result<Outcome, CliError> {
    let cert = Certificate::read(path)?;
    let set = cert.to_set();
    let dims = set.dims();
    let seq = column_sequence(dims, &set);
    let verdict = is_2dd_set(dims, &set)?;

    writeln!(out, "dims: {dims}")?;
    writeln!(out, "size: {}", set.len())?;
    writeln!(out, "2dd: {}", if verdict.is_valid() { "valid" } else { "invalid" })?;
    writeln!(out, "sequence: {}", list(&seq.counts))?;
    match rotate_to_proper(&seq) {
        Err(_) => writeln!(out, "proper form: all columns empty")?,
        Ok(ProperForm::AllPositive) => writeln!(out, "proper form: AllPositive; no block decomposition")?,
        Ok(ProperForm::Blocks(blocks)) => {
            writeln!(out, "rotation: {}", blocks.rotation)?;
            writeln!(
                out,
                "blocks (p, q): {}",
                blocks.blocks.iter().map(|b| format!("({}, {})", b.positives, b.zeros)).collect::<Vec<_>>().join(" ")
            )?;
            let weights: &[(u32, u32)] = match dims.m() {
                3 => &[(2, 1)],
                8 => &[(1, 1)],
                _ => &[(2, 1), (1, 1)],
            };
            for &(a, b) in weights {
                let v = ab_block_values(&blocks, a, b);
                writeln!(out, "({a},{b})-block values: {} sum={}", list(&v.values), v.total())?;
            }
        }
    }
    match check_lemma1(dims, &seq) {
        Ok(checks) => {
            let bad = checks.iter().filter(|c| !c.holds()).count();
            writeln!(
                out,
                "column inequality lhs: {} (rhs {}) {}",
                list(checks.iter().map(|c| c.lhs)),
                2 * dims.m(),
                if bad == 0 { "all hold".to_string() } else { format!("{bad} fail") }
            )?;
        }
        Err(_) => writeln!(out, "column inequality: not applicable for n < 5")?,
    }
    writeln!(out, "max zero-run: {}", max_zero_run(&seq))?;
    if let Ok(checks) = check_window4(dims, &seq) {
        let bad: Vec<&ColumnCheck> = checks.iter().filter(|c| !c.holds()).collect();
        writeln!(
            out,
            "four-column sums: {} {}",
            list(checks.iter().map(|c| c.lhs)),
            if bad.is_empty() { "all >= 2".to_string() } else { format!("{} below 2", bad.len()) }
        )?;
    }
    Ok(Outcome::Success)
}

fn cmd_bounds(m: usize, n: usize, out: &mut Out) -> Result<Outcome, CliError> {
    let b = known_bounds(m, n)?;
    writeln!(out, "{b}")?;
    Ok(Outcome::Success)
}

struct TableRows {
    m: usize,
    first_n: usize,
    formula: &'static str,
}

fn table_rows(theorem: u8) -> Result<TableRows, CliError> {
    match theorem {
        2 => Ok(TableRows { m: 3, first_n: 3, formula: "gamma(C3 x Cn) = ceil(n/2)" }),
        3 => Ok(TableRows {
            m: 4,
            first_n: 4,
            formula: "gamma(C4 x Cn) = n/2 + 1 if n = 2 mod 4, else ceil(n/2)",
        }),
        4 => Ok(TableRows {
            m: 8,
            first_n: 8,
            formula: "n <= gamma(C8 x Cn) <= n (n = 0 mod 4), n + 2 (n = 2 mod 4), n + 1 (n odd)",
        }),
        _ => Err(CliError::Usage(format!("unknown theorem {theorem} (expected 2, 3 or 4)"))),
    }
}

/// The closed-form interval a table row is checked against.
fn formula_interval(theorem: u8, n: usize) -> (usize, usize) {
    match theorem {
        2 => (n.div_ceil(2), n.div_ceil(2)),
        3 if n % 4 == 2 => (n / 2 + 1, n / 2 + 1),
        3 => (n.div_ceil(2), n.div_ceil(2)),
        _ => match n % 4 {
            0 => (n, n),
            2 => (n, n + 2),
            _ => (n, n + 1),
        },
    }
}

struct Row {
    n: usize,
    formula: String,
    solver: String,
    method: String,
    status: &'static str,
}

fn table_row(theorem: u8, n: usize, report: &SolveReport) -> Row {
    let (lo, hi) = formula_interval(theorem, n);
    let formula = if lo == hi { lo.to_string() } else { format!("{lo}..{hi}") };
    let (solver, status) = if report.proven_optimal {
        let ok = lo <= report.gamma && report.gamma <= hi;
        (report.gamma.to_string(), if ok { "yes" } else { "NO" })
    } else {
        (format!("upper={} (budget)", report.gamma), "budget")
    };
    Row { n, formula, solver, method: report.method.to_string(), status }
}

fn cmd_table(
    theorem: u8,
    n_max: usize,
    format: Format,
    method: Method,
    budget: &Budget,
    out: &mut Out,
) -> Result<Outcome, CliError> {
    let rows_for = table_rows(theorem)?;
    let mut rows = Vec::new();
    for n in rows_for.first_n..=n_max {
        let report = solve(TorusDims::new(rows_for.m, n)?, method, budget)?;
        rows.push(table_row(theorem, n, &report));
    }

    let header = ["n", "formula", "solver", "method", "match"];
    match format {
        Format::Tsv => {
            writeln!(out, "# {TOOL} theorem {theorem}: {}", rows_for.formula)?;
            writeln!(out, "{}", header.join("\t"))?;
            for r in &rows {
                writeln!(out, "{}\t{}\t{}\t{}\t{}", r.n, r.formula, r.solver, r.method, r.status)?;
            }
        }
        Format::Text => {
            writeln!(out, "{TOOL}, theorem {theorem}: {}", rows_for.formula)?;
            let cells: Vec<[String; 5]> = rows
                .iter()
                .map(|r| [r.n.to_string(), r.formula.clone(), r.solver.clone(), r.method.clone(), r.status.to_string()])
                .collect();
            let widths: Vec<usize> = (0..5)
                .map(|k| cells.iter().map(|c| c[k].len()).chain([header[k].len()]).max().unwrap())
                .collect();
            let line = |c: [&str; 5]| {
                c.iter().zip(&widths).map(|(s, &w)| format!("{s:>w$}")).collect::<Vec<_>>().join("  ")
            };
            writeln!(out, "{}", line(header))?;
            for c in &cells {
                writeln!(out, "{}", line([&c[0], &c[1], &c[2], &c[3], &c[4]]))?;
            }
        }
    }

    Ok(if rows.iter().any(|r| r.status == "NO") {
        Outcome::Invalid
    } else if rows.iter().any(|r| r.status == "budget") {
        Outcome::BudgetExhausted
    } else {
        Outcome::Success
    })
}
