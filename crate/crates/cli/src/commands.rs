use std::fmt::Write as _;

use knotcover::homology::{homology, table_cells, HomologyResult};
use knotcover::oracle::cross_check;
use knotcover::sweep::{cross_check_batch, genus1_grid, genus2_grid, map_ordered, Execution};
use knotcover::{AbelianGroup, AlexanderPoly, CrossCheckReport, Error};
use num_bigint::BigInt;

use crate::args::{
    CatalogAction, Cli, Command, ComputeArgs, Format, KnotArgs, TableArgs, VerifyArgs,
};
use crate::catalog::{self, Catalog, CatalogError, CatalogLine};
use crate::record::{self, order_check_str, params, ResultRecord, TableRow};

pub const EXIT_OK: u8 = 0;
pub const EXIT_MISMATCH: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

/// What a command printed and how it ended; `main` does the actual I/O.
#[derive(Debug, Default, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub code: u8,
}

#[derive(Debug)]
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<CatalogError> for Failure {
    fn from(e: CatalogError) -> Self {
        Self::usage(e.to_string())
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        // Broken identities are findings, not input errors.
        let code = match e {
            Error::TheoremViolation { .. } | Error::Invariant(_) => EXIT_MISMATCH,
            _ => EXIT_USAGE,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

pub fn run(cli: Cli) -> Output {
    let result = match cli.command {
        Command::Compute(args) => compute(args),
        Command::Table(args) => table(args),
        Command::Verify(args) => verify(args),
        Command::Catalog(args) => catalog_cmd(args.action),
    };
    result.unwrap_or_else(|f| Output {
        stdout: String::new(),
        stderr: format!("error: {}\n", f.message),
        code: f.code,
    })
}

fn execution(sequential: bool) -> Execution {
    if sequential {
        Execution::Sequential
    } else {
        Execution::Parallel
    }
}

fn resolve(args: &KnotArgs) -> Result<(Option<String>, AlexanderPoly), Failure> {
    if let Some(name) = &args.knot {
        let catalog = Catalog::load(&args.catalog)?;
        return Ok((Some(name.clone()), catalog.get(name)?.poly));
    }
    let b = args
        .b
        .ok_or_else(|| Failure::usage("give --knot NAME, or --b (and --a for genus 2)"))?;
    let poly = match (args.genus, args.a) {
        (Some(1), Some(_)) => return Err(Failure::usage("--a is not a genus-1 parameter")),
        (Some(1), None) | (None, None) => AlexanderPoly::genus1(b)?,
        (Some(_), None) => return Err(Failure::usage("genus 2 needs --a")),
        (_, Some(a)) => AlexanderPoly::genus2(a, b)?,
    };
    Ok((None, poly))
}

fn header(name: Option<&str>, poly: &AlexanderPoly) -> String {
    match name {
        Some(name) => format!("# {name}: {poly}\n"),
        None => format!("# {poly}\n"),
    }
}

fn compute(args: ComputeArgs) -> Result<Output, Failure> {
    if *args.n.start() == 0 {
        return Err(Failure::usage("n must be at least 1"));
    }
    let (name, poly) = resolve(&args.knot)?;
    let levels: Vec<u32> = args.n.clone().collect();
    let verify = args.verify;
    let rows = map_ordered(&levels, execution(args.sequential), |&n| {
        let (group, cert) = homology(&poly, n)?;
        let record = ResultRecord::new(name.as_deref(), &poly, &group, &cert);
        Ok::<_, Error>(if verify {
            record.with_verification(&cross_check(&poly, n)?)
        } else {
            record
        })
    });
    let rows = rows.into_iter().collect::<Result<Vec<_>, _>>()?;

    let mismatch = rows
        .iter()
        .any(|r| r.verification.as_ref().is_some_and(|v| !v.passed));
    let mut out = String::new();
    match args.format {
        Format::Records => {
            for r in &rows {
                writeln!(out, "{}", record::to_line(r)).unwrap();
            }
        }
        Format::Table => {
            out.push_str(&header(name.as_deref(), &poly));
            let width = args.n.end().to_string().len().max(1);
            for r in &rows {
                let group = r.group().expect("torsion was produced from integers");
                write!(out, "{:>width$}  {group}", r.n).unwrap();
                if let Some(v) = &r.verification {
                    out.push_str(if v.passed {
                        "  [verified]"
                    } else {
                        "  [MISMATCH]"
                    });
                }
                out.push('\n');
            }
        }
    }
    Ok(Output {
        stdout: out,
        stderr: String::new(),
        code: if mismatch { EXIT_MISMATCH } else { EXIT_OK },
    })
}

fn table(args: TableArgs) -> Result<Output, Failure> {
    if args.n_max == 0 {
        return Err(Failure::usage("--n-max must be at least 1"));
    }
    let (name, poly) = resolve(&args.knot)?;
    let (genus, a, b) = params(&poly);
    let cells = (1..=args.n_max)
        .map(|n| table_cells(&poly, n))
        .collect::<Result<Vec<_>, _>>()?;

    let mut out = String::new();
    match args.format {
        Format::Records => {
            for (i, (alpha, beta)) in cells.iter().enumerate() {
                let row = TableRow {
                    knot: name.clone(),
                    genus,
                    a,
                    b,
                    n: i as u32 + 1,
                    alpha: alpha.to_string(),
                    beta: beta.to_string(),
                };
                writeln!(out, "{}", record::to_line(&row)).unwrap();
            }
        }
        Format::Table => {
            out.push_str(&header(name.as_deref(), &poly));
            if genus == 1 {
                out.push_str("# genus 1: alpha(n), beta(n) of u(n+2) = u(n+1) - b u(n)\n");
            }
            let n_row: Vec<String> = (1..=args.n_max).map(|n| n.to_string()).collect();
            let alpha_row: Vec<String> = cells.iter().map(|c| c.0.to_string()).collect();
            let beta_row: Vec<String> = cells.iter().map(|c| c.1.to_string()).collect();
            let widths: Vec<usize> = (0..cells.len())
                .map(|i| {
                    n_row[i]
                        .len()
                        .max(alpha_row[i].len())
                        .max(beta_row[i].len())
                })
                .collect();
            for (label, row) in [("n", &n_row), ("alpha", &alpha_row), ("beta", &beta_row)] {
                write!(out, "{label:<5}").unwrap();
                for (cell, w) in row.iter().zip(&widths) {
                    write!(out, "  {cell:>w$}").unwrap();
                }
                out.push('\n');
            }
        }
    }
    Ok(Output {
        stdout: out,
        stderr: String::new(),
        code: EXIT_OK,
    })
}

fn corrupted_closed_form(poly: &AlexanderPoly, n: u32) -> knotcover::Result<HomologyResult> {
    let (group, cert) = homology(poly, n)?;
    let orders = group
        .torsion()
        .iter()
        .cloned()
        .chain(std::iter::repeat_n(BigInt::from(0), group.free_rank()))
        .chain([BigInt::from(2)]);
    Ok((AbelianGroup::canonicalize(orders), cert))
}

fn describe_failure(
    out: &mut String,
    name: Option<&str>,
    poly: &AlexanderPoly,
    n: u32,
    report: &CrossCheckReport,
) {
    let label = name.map(|s| format!(" [{s}]")).unwrap_or_default();
    writeln!(out, "MISMATCH {poly} n={n}{label}").unwrap();
    match &report.closed_form {
        Ok((group, cert)) => {
            let mut values: Vec<String> = cert
                .intermediates
                .iter()
                .map(|(k, v)| format!("{k}={v}"))
                .collect();
            writeln!(out, "  closed form: {group}").unwrap();
            values.insert(0, cert.branch.as_str().to_owned());
            writeln!(out, "  certificate: {}", values.join(" ")).unwrap();
        }
        Err(e) => writeln!(out, "  closed form: error: {e}").unwrap(),
    }
    writeln!(out, "  B(n) SNF:    {}", report.via_bn).unwrap();
    writeln!(out, "  circulant:   {}", report.via_circulant).unwrap();
    let flag = |f: Option<bool>| match f {
        Some(true) => "ok",
        Some(false) => "FAILED",
        None => "n/a",
    };
    writeln!(
        out,
        "  lemma identity: {}, det B(n) = k mu^2: {}, exact-sequence orders: {}",
        flag(report.lemma_identity),
        flag(report.determinant_identity),
        report.exact_sequence.map(order_check_str).unwrap_or("n/a")
    )
    .unwrap();
}

fn verify(args: VerifyArgs) -> Result<Output, Failure> {
    if args.n_max == 0 {
        return Err(Failure::usage("--n-max must be at least 1"));
    }
    let (names, inputs): (Vec<Option<String>>, Vec<(AlexanderPoly, u32)>) = match &args.catalog {
        Some(source) => {
            let catalog = Catalog::load(source)?;
            catalog
                .records()
                .flat_map(|r| (1..=args.n_max).map(move |n| (Some(r.name.clone()), (r.poly, n))))
                .unzip()
        }
        None => {
            let b_range = args.b_range.clone().unwrap_or(-3..=3);
            let grid = if args.genus == 1 {
                if args.a_range.is_some() {
                    return Err(Failure::usage(
                        "--a-range has no meaning for a genus-1 grid",
                    ));
                }
                genus1_grid(b_range, args.n_max)
            } else {
                genus2_grid(args.a_range.clone().unwrap_or(-3..=3), b_range, args.n_max)
            };
            (vec![None; grid.len()], grid)
        }
    };
    if inputs.is_empty() {
        return Err(Failure::usage("nothing to verify: the grid is empty"));
    }

    let closed = if args.corrupt_closed_form {
        corrupted_closed_form
    } else {
        homology
    };
    let exec = execution(args.sequential);
    let reports = cross_check_batch(&inputs, exec, closed);

    let mut out = String::new();
    let mut failed = 0usize;
    for ((name, (poly, n)), report) in names.iter().zip(&inputs).zip(&reports) {
        match report {
            Ok(r) if r.passed() => {}
            Ok(r) => {
                failed += 1;
                describe_failure(&mut out, name.as_deref(), poly, *n, r);
            }
            Err(e) => {
                failed += 1;
                writeln!(out, "ERROR {poly} n={n}: {e}").unwrap();
            }
        }
    }
    let mode = if exec == Execution::Parallel && Execution::is_parallel_available() {
        "parallel"
    } else {
        "sequential"
    };
    writeln!(
        out,
        "verified {} cases ({mode}): {failed} failed",
        inputs.len()
    )
    .unwrap();
    Ok(Output {
        stdout: out,
        stderr: String::new(),
        code: if failed == 0 { EXIT_OK } else { EXIT_MISMATCH },
    })
}

fn catalog_cmd(action: CatalogAction) -> Result<Output, Failure> {
    let mut out = String::new();
    match action {
        CatalogAction::List { catalog, format } => {
            let catalog = Catalog::load(&catalog)?;
            for r in catalog.records() {
                let line = CatalogLine::from_record(r);
                match format {
                    Format::Records => writeln!(out, "{}", line.to_json()).unwrap(),
                    Format::Table => {
                        let extra: Vec<String> = [("slope", &line.slope), ("source", &line.source)]
                            .into_iter()
                            .filter_map(|(k, v)| v.as_ref().map(|v| format!("{k}={v}")))
                            .collect();
                        let extra = if extra.is_empty() {
                            String::new()
                        } else {
                            format!("  {}", extra.join(" "))
                        };
                        writeln!(out, "{:<8} {}{extra}", r.name, r.poly).unwrap();
                    }
                }
            }
        }
        CatalogAction::Validate { catalog } => {
            let parsed = Catalog::load(&catalog)?;
            writeln!(out, "ok: {} records", parsed.len()).unwrap();
        }
        CatalogAction::Add {
            catalog,
            name,
            genus,
            a,
            b,
            slope,
            source,
        } => {
            let entry = CatalogLine {
                name,
                genus,
                a,
                b,
                slope,
                source,
            };
            let record = catalog::append(&catalog, &entry)?;
            writeln!(out, "added {}: {}", record.name, record.poly).unwrap();
        }
    }
    Ok(Output {
        stdout: out,
        stderr: String::new(),
        code: EXIT_OK,
    })
}
