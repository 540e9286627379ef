//! Command implementations. Each writes its report into a string buffer so
//! that partial output survives a failed check.

use std::fmt::Write as _;
use std::fs;

use bicirc_core::arithmetic::{admissible_orders, rows_to_csv, SequenceRow};
use bicirc_core::numeric::{
    asymptotic_constant, asymptotic_constant_integral, convergence_report, forest_count_chebyshev_at,
    START_PRECISION,
};
use bicirc_core::{
    forest_count_oracle, theorem4_constants, verify_square_structure, Ball, BicirculantSpec, ForestCount,
    GammaClass, FAMILIES,
};
use serde_json::json;

use crate::{Cli, CliError, Command, CountCache, Format, OutputArgs, SpecArgs};

/// Largest `2n` for which the determinant oracle runs.
const ORACLE_LIMIT: u64 = 200;
/// Quadrature tolerance for the integral route.
const QUAD_TOLERANCE: f64 = 1e-12;
/// Allowed gap between the two Mahler routes beyond their radii.
const ROUTE_TOLERANCE: f64 = 1e-9;
/// Orders used by the reference-family driver.
const DESK_MAX_ORDER: u64 = 30;

pub fn run(cli: &Cli) -> Result<(), CliError> {
    let mut out = String::new();
    let (result, output) = match &cli.command {
        Command::Count { spec, output, check_oracle, check_cheb } => {
            (count(&mut out, spec, output.format, *check_oracle, *check_cheb), output)
        }
        Command::Verify { spec, output } => (verify(&mut out, spec, output.format), output),
        Command::Sweep { spec, output, check_oracle, check_cheb } => {
            (sweep(&mut out, spec, output.format, *check_oracle, *check_cheb), output)
        }
        Command::Asymptote { spec, output } => (asymptote(&mut out, spec, output.format), output),
        Command::Examples { only, json, output } => {
            let json = *json || output.format == Some(Format::Json);
            (examples(&mut out, *only, json), output)
        }
    };
    emit(&out, output)?;
    result
}

fn emit(text: &str, output: &OutputArgs) -> Result<(), CliError> {
    match &output.out {
        Some(path) => fs::write(path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn core_err(e: impl std::fmt::Display) -> CliError {
    CliError::Core(e.to_string())
}

fn load_spec(args: &SpecArgs) -> Result<BicirculantSpec, CliError> {
    let text = match (&args.spec, &args.spec_file) {
        (Some(s), _) => s.clone(),
        (None, Some(path)) => {
            fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?
        }
        (None, None) => return Err(CliError::Usage("one of --spec or --spec-file is required".into())),
    };
    BicirculantSpec::from_json(&text).map_err(|e| CliError::Spec(e.to_string()))
}

/// Orders requested by `--n` / `--n-range`, defaulting to the spec's own order.
fn requested_orders(spec: &BicirculantSpec, args: &SpecArgs) -> Vec<u64> {
    match (args.n, args.n_range) {
        (Some(n), _) => vec![n],
        (None, Some(r)) => r.orders().collect(),
        (None, None) => vec![spec.n()],
    }
}

fn admissible(spec: &BicirculantSpec, orders: Vec<u64>) -> Vec<u64> {
    orders.into_iter().filter(|&n| n >= 1 && (!spec.class().needs_even_order() || n % 2 == 0)).collect()
}

struct Checked {
    count: ForestCount,
    oracle: Option<&'static str>,
    chebyshev: Option<u32>,
}

fn count_checked(
    cache: &CountCache,
    spec: &BicirculantSpec,
    n: u64,
    check_oracle: bool,
    check_cheb: bool,
    ceiling: u32,
) -> Result<Checked, CliError> {
    let count = cache.count(spec, n)?;
    let mut oracle = None;
    if check_oracle {
        let graph = spec.with_order(n).ok();
        if let (true, Some(graph)) = (2 * n <= ORACLE_LIMIT, &graph) {
            let det = forest_count_oracle(graph);
            if det != count {
                return Err(CliError::Mismatch {
                    what: format!("n = {n}: formula and det(I + L)"),
                    left: count.to_string(),
                    right: det.to_string(),
                });
            }
            oracle = Some("ok");
        } else if graph.is_none() {
            oracle = Some("skipped, no graph of this order");
        } else {
            oracle = Some("skipped, 2n > 200");
        }
    }
    let mut chebyshev = None;
    if check_cheb {
        let (f, bits) = forest_count_chebyshev_at(spec, n, ceiling).map_err(core_err)?;
        if f != count {
            return Err(CliError::Mismatch {
                what: format!("n = {n}: formula and Chebyshev product"),
                left: count.to_string(),
                right: f.to_string(),
            });
        }
        chebyshev = Some(bits);
    }
    Ok(Checked { count, oracle, chebyshev })
}

fn annotate(c: &Checked) -> String {
    let mut notes = Vec::new();
    if let Some(o) = c.oracle {
        notes.push(format!("oracle: {o}"));
    }
    if let Some(bits) = c.chebyshev {
        notes.push(format!("chebyshev: ok at {bits} bits"));
    }
    if notes.is_empty() {
        c.count.to_string()
    } else {
        format!("{} ({})", c.count, notes.join(", "))
    }
}

fn checked_json(n: u64, c: &Checked) -> serde_json::Value {
    json!({
        "n": n,
        "count": c.count.to_string(),
        "oracle": c.oracle,
        "chebyshev_bits": c.chebyshev,
    })
}

fn count(out: &mut String, args: &SpecArgs, format: Option<Format>, oracle: bool, cheb: bool) -> Result<(), CliError> {
    if args.n_range.is_some() {
        return Err(CliError::Usage("count takes a single order; use sweep for ranges".into()));
    }
    let spec = load_spec(args)?;
    let n = args.n.unwrap_or(spec.n());
    let spec = if n == spec.n() { spec } else { spec.with_order(n).map_err(|e| CliError::Spec(e.to_string()))? };
    let cache = CountCache::new(args.cache.clone());
    let c = count_checked(&cache, &spec, n, oracle, cheb, args.precision)?;
    match format {
        None => writeln!(out, "{}", annotate(&c)).unwrap(),
        Some(Format::Csv) => write!(out, "n,f\n{n},{}\n", c.count).unwrap(),
        Some(Format::Json) => {
            let mut v = checked_json(n, &c);
            v["spec"] = serde_json::from_str(&spec.to_json()).expect("valid json");
            writeln!(out, "{}", serde_json::to_string_pretty(&v).unwrap()).unwrap();
        }
    }
    Ok(())
}

fn sweep(out: &mut String, args: &SpecArgs, format: Option<Format>, oracle: bool, cheb: bool) -> Result<(), CliError> {
    let spec = load_spec(args)?;
    let orders = admissible(&spec, requested_orders(&spec, args));
    let cache = CountCache::new(args.cache.clone());
    let mut records = Vec::new();
    if format == Some(Format::Csv) {
        out.push_str("n,f\n");
    }
    for n in orders {
        let c = count_checked(&cache, &spec, n, oracle, cheb, args.precision)?;
        match format {
            None => writeln!(out, "{n}\t{}", annotate(&c)).unwrap(),
            Some(Format::Csv) => writeln!(out, "{n},{}", c.count).unwrap(),
            Some(Format::Json) => records.push(checked_json(n, &c)),
        }
    }
    if format == Some(Format::Json) {
        writeln!(out, "{}", serde_json::to_string_pretty(&records).unwrap()).unwrap();
    }
    Ok(())
}

fn verify_rows(spec: &BicirculantSpec, orders: &[u64], cache: &CountCache) -> (Vec<SequenceRow>, Option<CliError>) {
    let mut rows = Vec::new();
    for &n in orders {
        let f = match cache.count(spec, n) {
            Ok(f) => f,
            Err(e) => return (rows, Some(e)),
        };
        match verify_square_structure(spec, n, &f) {
            Ok((constant, root)) => rows.push(SequenceRow { n, f, constant, root }),
            Err(e) => return (rows, Some(CliError::Falsified(e.to_string()))),
        }
    }
    (rows, None)
}

fn verify(out: &mut String, args: &SpecArgs, format: Option<Format>) -> Result<(), CliError> {
    let spec = load_spec(args)?;
    let orders = admissible(&spec, requested_orders(&spec, args));
    let constants = theorem4_constants(&spec).map_err(|e| CliError::Falsified(e.to_string()))?;
    let cache = CountCache::new(args.cache.clone());
    let (rows, failure) = verify_rows(&spec, &orders, &cache);
    match format {
        Some(Format::Csv) => out.push_str(&rows_to_csv(&rows)),
        Some(Format::Json) => {
            let recs: Vec<_> = rows
                .iter()
                .map(|r| json!({"n": r.n, "f": r.f.to_string(), "constant": r.constant.to_string(), "root": r.root.to_string()}))
                .collect();
            let v = json!({
                "class": spec.class().to_string(),
                "odd_constant": constants.class_constant_odd,
                "even_constant": constants.class_constant_even,
                "rows": recs,
                "verified": failure.is_none(),
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&v).unwrap()).unwrap();
        }
        None => {
            let selector = if spec.class() == GammaClass::G1 { "n" } else { "n/2" };
            writeln!(
                out,
                "class {}: f = {}·a² for odd {selector}, f = {}·b² for even {selector}",
                spec.class(),
                constants.class_constant_odd,
                constants.class_constant_even
            )
            .unwrap();
            for r in &rows {
                writeln!(out, "{}\t{}\t= {} · {}²", r.n, r.f, r.constant, r.root).unwrap();
            }
            if failure.is_none() {
                writeln!(out, "{} rows verified", rows.len()).unwrap();
            }
        }
    }
    match failure {
        Some(e) => Err(e),
        None => Ok(()),
    }
}

fn constant_name(class: GammaClass) -> char {
    match class {
        GammaClass::G1 => 'A',
        GammaClass::G2 => 'B',
        GammaClass::G3 => 'C',
        GammaClass::G4 => 'D',
    }
}

fn ball_json(b: &Ball) -> serde_json::Value {
    json!({"mid": b.mid_decimal(), "rad": b.rad_decimal()})
}

fn asymptote(out: &mut String, args: &SpecArgs, format: Option<Format>) -> Result<(), CliError> {
    let spec = load_spec(args)?;
    let orders = match (args.n, args.n_range) {
        (None, None) => admissible_orders(spec.class(), 10, 30),
        _ => admissible(&spec, requested_orders(&spec, args)),
    };
    let prec = (2 * START_PRECISION).min(args.precision.max(64));
    let by_roots = asymptotic_constant(&spec, prec).map_err(core_err)?;
    let by_quad = asymptotic_constant_integral(&spec, QUAD_TOLERANCE).map_err(core_err)?;
    let agree = by_roots.agrees_with(&by_quad, ROUTE_TOLERANCE);
    let records = convergence_report(&spec, &orders, prec).map_err(core_err)?;
    let name = constant_name(spec.class());
    match format {
        None => {
            writeln!(
                out,
                "{name} ≈ {} ({})",
                by_roots.mid().to_decimal(9),
                if agree { "routes agree" } else { "ROUTES DISAGREE" }
            )
            .unwrap();
            writeln!(out, "  roots:      {by_roots}").unwrap();
            writeln!(out, "  quadrature: {by_quad}").unwrap();
            writeln!(out, "  (decimal midpoints rounded to nearest, radii rounded up)").unwrap();
            if !records.is_empty() {
                let power = if spec.class() == GammaClass::G1 { "n" } else { "(n/2)" };
                writeln!(out, "n\tf(2n) / {name}^{power}").unwrap();
            }
            for r in &records {
                writeln!(out, "{}\t{}", r.n, r.ratio).unwrap();
            }
        }
        Some(Format::Csv) => {
            out.push_str("n,f,ratio_mid,ratio_rad\n");
            for r in &records {
                writeln!(out, "{},{},{},{}", r.n, r.count, r.ratio.mid_decimal(), r.ratio.rad_decimal()).unwrap();
            }
        }
        Some(Format::Json) => {
            let v = json!({
                "name": name.to_string(),
                "roots": ball_json(&by_roots),
                "quadrature": ball_json(&by_quad),
                "routes_agree": agree,
                "records": records.iter().map(|r| r.to_json_value()).collect::<Vec<_>>(),
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&v).unwrap()).unwrap();
        }
    }
    if agree {
        Ok(())
    } else {
        Err(CliError::Mismatch {
            what: format!("Mahler routes for {name}"),
            left: by_roots.to_string(),
            right: by_quad.to_string(),
        })
    }
}

/// All checks for one reference family; the error names the first failure.
fn check_family(fam: &bicirc_core::ReferenceFamily) -> Result<serde_json::Value, String> {
    let cache = CountCache::disabled();
    let orders = fam.orders(DESK_MAX_ORDER);
    let base = fam.spec(fam.min_order).map_err(|e| e.to_string())?;
    for &n in &orders {
        let spec = fam.spec(n).map_err(|e| e.to_string())?;
        count_checked(&cache, &spec, n, true, true, bicirc_core::numeric::MAX_PRECISION).map_err(|e| e.to_string())?;
    }
    let c = theorem4_constants(&base).map_err(|e| e.to_string())?;
    let got = (c.class_constant_odd, c.class_constant_even);
    let want = (fam.odd_constant, fam.even_constant);
    if got != want {
        return Err(format!("square-free constants: expected {want:?}, got {got:?}"));
    }
    let (rows, failure) = verify_rows(&base, &orders, &cache);
    if let Some(e) = failure {
        return Err(e.to_string());
    }
    let prec = 2 * START_PRECISION;
    let by_roots = asymptotic_constant(&base, prec).map_err(|e| e.to_string())?;
    let by_quad = asymptotic_constant_integral(&base, QUAD_TOLERANCE).map_err(|e| e.to_string())?;
    let closed = fam.constant.eval(prec);
    if !by_roots.within(&by_quad, ROUTE_TOLERANCE) {
        return Err(format!("Mahler routes: roots {by_roots} vs quadrature {by_quad}"));
    }
    if !by_roots.within(&closed, ROUTE_TOLERANCE) {
        return Err(format!("growth constant: expected {} = {closed}, got {by_roots}", fam.constant));
    }
    Ok(json!({
        "orders": orders.len(),
        "constants": [got.0, got.1],
        "squares_verified": rows.len(),
        "constant_name": fam.constant_name.to_string(),
        "constant": ball_json(&by_roots),
    }))
}

fn examples(out: &mut String, only: Option<u8>, json_out: bool) -> Result<(), CliError> {
    let selected: Vec<_> = FAMILIES.iter().filter(|f| only.is_none_or(|k| f.id == k)).collect();
    if selected.is_empty() {
        return Err(CliError::Usage(format!("no reference family {}", only.unwrap_or(0))));
    }
    let mut records = Vec::new();
    let mut first_failure = None;
    let mut passed = 0;
    for fam in &selected {
        let result = check_family(fam);
        passed += usize::from(result.is_ok());
        if json_out {
            let mut rec = json!({
                "family": fam.id,
                "graph": fam.description,
                "class": fam.class.to_string(),
                "passed": result.is_ok(),
            });
            match &result {
                Ok(detail) => rec["detail"] = detail.clone(),
                Err(e) => rec["error"] = json!(e),
            }
            records.push(rec);
        } else {
            match &result {
                Ok(d) => writeln!(
                    out,
                    "family {} {}: {} orders checked by three routes, constants ({}, {}), {} ≈ {} ok",
                    fam.id,
                    fam.description,
                    d["orders"],
                    fam.odd_constant,
                    fam.even_constant,
                    fam.constant_name,
                    d["constant"]["mid"].as_str().unwrap_or("?").chars().take(13).collect::<String>()
                )
                .unwrap(),
                Err(e) => writeln!(out, "family {} {}: FAILED: {e}", fam.id, fam.description).unwrap(),
            }
        }
        if let Err(e) = result {
            first_failure = Some(format!("family {}: {e}", fam.id));
            break;
        }
    }
    if json_out {
        let v = json!({"families": records, "passed": passed, "total": selected.len()});
        writeln!(out, "{}", serde_json::to_string_pretty(&v).unwrap()).unwrap();
    } else if first_failure.is_none() {
        writeln!(out, "{}/{} families verified", passed, selected.len()).unwrap();
    }
    match first_failure {
        Some(f) => Err(CliError::Falsified(f)),
        None => Ok(()),
    }
}
