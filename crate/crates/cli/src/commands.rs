use std::fmt::Write as _;

use num_complex::Complex64;
use pvalent::audit::{aouf_falsification_report, reproduce_table1, table1_max_deviation, TABLE1_TOL};
use pvalent::bounds::{bound_report, induction_identity_residual};
use pvalent::extremal::{attainment_report_with, witness_modulus, ExtremalFamily};
use pvalent::verify::{
    default_sweep_grid, member_rng, random_class_params, random_member_sweep, schwarz_from_function, SampleGrid,
    Violation, MEMBERSHIP_TOL, SWEEP_MAX_SPAN,
};
use rand::Rng;
use pvalent::{CaseLabel, ClassParams, Error, ExtremalSpec, TruncatedSeries};
use serde::Serialize;
use serde_json::{json, Value};

use crate::args::{Cli, Command, FamilyArg, OptionalParamArgs, ParamArgs};

/// Widest `n - p` the bound and identity commands evaluate.
pub const MAX_SPAN: u32 = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok,
    Violation,
}

/// A rendered report in every format; `main` picks one.
#[derive(Debug)]
pub struct Outcome {
    pub status: Status,
    pub human: String,
    pub json: Value,
    pub csv: String,
}

/// Invalid input; exits with status 2.
#[derive(Debug)]
pub struct InputError(pub String);

impl From<Error> for InputError {
    fn from(err: Error) -> Self {
        InputError(err.to_string())
    }
}

type CmdResult = Result<Outcome, InputError>;

pub fn run(cli: &Cli) -> CmdResult {
    let tol = cli.tolerance;
    match &cli.command {
        Command::Bound { params, n, n_to } => bound(params, *n, *n_to, tol),
        Command::Extremal {
            params,
            family,
            n,
            terms,
            delta_turns,
        } => extremal(params, *family, *n, *terms, *delta_turns, tol),
        Command::Membership {
            params,
            coeffs,
            family,
            n,
            delta_turns,
            order,
            radii,
            angles,
        } => membership(params, coeffs.as_deref(), *family, *n, *delta_turns, *order, radii.clone(), *angles),
        Command::Sweep {
            params,
            count,
            max_n,
            grid,
        } => sweep(params, *count, *max_n, *grid, cli.seed, tol),
        Command::Audit { table1 } => audit(*table1),
        Command::Falsify { params, n } => falsify(params, *n),
        Command::IdentityCheck { params, m_to, random } => identity_check(params, *m_to, *random, cli.seed, tol),
    }
}

fn class_params(args: &ParamArgs) -> Result<ClassParams, InputError> {
    Ok(ClassParams::new(args.a, args.b, args.beta, args.p)?)
}

fn optional_class_params(args: &OptionalParamArgs) -> Result<Option<ClassParams>, InputError> {
    match (args.a, args.b) {
        (Some(a), Some(b)) => Ok(Some(ClassParams::new(a, b, args.beta, args.p)?)),
        _ => Ok(None),
    }
}

fn check_span(params: &ClassParams, n: u32) -> Result<(), InputError> {
    params.check_index(n)?;
    if n - params.p() > MAX_SPAN {
        return Err(InputError(format!(
            "n - p = {} exceeds the supported window of {MAX_SPAN}",
            n - params.p()
        )));
    }
    Ok(())
}

fn to_csv<T: Serialize>(rows: &[T]) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    for row in rows {
        writer.serialize(row).expect("rows serialize to csv");
    }
    String::from_utf8(writer.into_inner().expect("in-memory writer")).expect("csv is utf-8")
}

fn rel_diff(x: f64, y: f64) -> f64 {
    let scale = x.abs().max(y.abs());
    if scale == 0.0 {
        0.0
    } else {
        (x - y).abs() / scale
    }
}

fn params_line(params: &ClassParams) -> String {
    format!(
        "A = {}, B = {}, beta = {}, p = {}  (M = {}, c = {})",
        params.a(),
        params.b(),
        params.beta(),
        params.p(),
        params.m(),
        params.c()
    )
}

#[derive(Serialize)]
struct BoundJson {
    n: u32,
    case: &'static str,
    theorem1: f64,
    aouf: f64,
    envelope: f64,
    sharp: bool,
    attained: Option<f64>,
    gap: f64,
}

#[derive(Serialize)]
struct BoundCsv {
    n: u32,
    case: &'static str,
    theorem1: f64,
    aouf: f64,
    envelope: f64,
    attained: Option<f64>,
    gap: f64,
}

fn bound(args: &ParamArgs, n: u32, n_to: Option<u32>, tol: f64) -> CmdResult {
    let params = class_params(args)?;
    let last = n_to.unwrap_or(n);
    if last < n {
        return Err(InputError(format!("--n-to {last} is below -n {n}")));
    }
    check_span(&params, n)?;
    check_span(&params, last)?;

    let mut rows = Vec::new();
    let mut status = Status::Ok;
    for k in n..=last {
        let report = bound_report(&params, k)?;
        let attained = witness_modulus(&params, k)?;
        if let Some(value) = attained {
            if report.sharp && rel_diff(value, report.theorem1_bound) > tol {
                status = Status::Violation;
            }
        }
        rows.push(BoundJson {
            n: k,
            case: report.case.as_str(),
            theorem1: report.theorem1_bound,
            aouf: report.aouf_bound,
            envelope: report.envelope_bound,
            sharp: report.sharp,
            attained,
            gap: report.theorem1_bound - report.aouf_bound,
        });
    }

    let csv_rows: Vec<BoundCsv> = rows
        .iter()
        .map(|r| BoundCsv {
            n: r.n,
            case: r.case,
            theorem1: r.theorem1,
            aouf: r.aouf,
            envelope: r.envelope,
            attained: r.attained,
            gap: r.gap,
        })
        .collect();

    let mut human = format!("{}\n", params_line(&params));
    let _ = writeln!(
        human,
        "{:>4}  {:<17} {:>22} {:>22} {:>22} {:>22}  sharp",
        "n", "case", "theorem1", "aouf", "envelope", "attained"
    );
    for r in &rows {
        let attained = r.attained.map_or("-".to_owned(), |v| v.to_string());
        let _ = writeln!(
            human,
            "{:>4}  {:<17} {:>22} {:>22} {:>22} {:>22}  {}",
            r.n, r.case, r.theorem1, r.aouf, r.envelope, attained, r.sharp
        );
    }

    let json = if rows.len() == 1 {
        serde_json::to_value(&rows[0]).unwrap()
    } else {
        json!({ "params": params, "rows": rows })
    };
    Ok(Outcome {
        status,
        human,
        json,
        csv: to_csv(&csv_rows),
    })
}

fn family_of(family: FamilyArg, n: u32) -> ExtremalFamily {
    match family {
        FamilyArg::Global => ExtremalFamily::Global,
        FamilyArg::PerN => ExtremalFamily::PerN { n },
    }
}

#[derive(Serialize)]
struct CoefficientRow {
    power: usize,
    re: f64,
    im: f64,
    modulus: f64,
}

fn coefficient_rows(f: &TruncatedSeries) -> Vec<CoefficientRow> {
    f.coeffs()
        .iter()
        .enumerate()
        .map(|(i, c)| CoefficientRow {
            power: f.offset() + i,
            re: c.re,
            im: c.im,
            modulus: c.norm(),
        })
        .collect()
}

fn extremal(args: &ParamArgs, family: FamilyArg, n: u32, terms: usize, turns: f64, tol: f64) -> CmdResult {
    let params = class_params(args)?;
    check_span(&params, n)?;
    let spec = ExtremalSpec::new(params, family_of(family, n), Complex64::new(1.0, 0.0))?.with_delta_turns(turns);
    let order = (params.p() as usize + terms + 1).max(n as usize + 1);
    let f = spec.expand(order)?;
    let report = attainment_report_with(&spec, n, &SampleGrid::default(), tol)?;
    let rows = coefficient_rows(&f);

    let mut human = format!("{}\n", params_line(&params));
    let _ = writeln!(
        human,
        "family {}, delta = {}",
        spec.family().name(),
        spec.delta()
    );
    for r in &rows {
        let _ = writeln!(human, "  z^{:<3} {:>24} {:>24}  |.| = {}", r.power, r.re, r.im, r.modulus);
    }
    let _ = writeln!(
        human,
        "n = {} ({}): |a_n| = {}, bound = {}, membership max|phi|/|z| = {} -> {}",
        n,
        report.bound.case,
        report.coefficient,
        report.bound.theorem1_bound,
        report.membership.max_ratio,
        if report.attained { "attained" } else { "NOT attained" }
    );
    if report.printed_index_mismatch {
        let _ = writeln!(
            human,
            "note: the z^(n-1) form of this family would place its first coefficient at z^{}",
            report.printed_first_index.unwrap()
        );
    }

    Ok(Outcome {
        status: if report.attained { Status::Ok } else { Status::Violation },
        json: json!({
            "family": spec.family().name(),
            "delta": { "re": spec.delta().re, "im": spec.delta().im },
            "coefficients": rows,
            "attainment": report,
        }),
        csv: to_csv(&rows),
        human,
    })
}

fn parse_coefficient(text: &str) -> Result<Complex64, InputError> {
    let parse = |s: &str| {
        s.trim()
            .parse::<f64>()
            .map_err(|_| InputError(format!("cannot parse coefficient {text:?}")))
    };
    match text.split_once(':') {
        Some((re, im)) => Ok(Complex64::new(parse(re)?, parse(im)?)),
        None => Ok(Complex64::new(parse(text)?, 0.0)),
    }
}

#[allow(clippy::too_many_arguments)]
fn membership(
    args: &ParamArgs,
    coeffs: Option<&[String]>,
    family: Option<FamilyArg>,
    n: Option<u32>,
    turns: f64,
    order: usize,
    radii: Option<Vec<f64>>,
    angles: usize,
) -> CmdResult {
    let params = class_params(args)?;
    let p = params.p() as usize;
    if order < p + 2 {
        return Err(InputError(format!("--order must be at least p + 2 = {}", p + 2)));
    }
    let f = match (coeffs, family) {
        (Some(list), _) => {
            let mut values = vec![Complex64::new(1.0, 0.0)];
            for item in list {
                values.push(parse_coefficient(item)?);
            }
            if values.len() > order - p {
                return Err(InputError("more coefficients than --order allows".into()));
            }
            TruncatedSeries::from_polynomial(p, &values, order)
        }
        (None, Some(family)) => {
            let target = n.unwrap_or(params.p() + 1);
            params.check_index(target)?;
            ExtremalSpec::new(params, family_of(family, target), Complex64::new(1.0, 0.0))?
                .with_delta_turns(turns)
                .expand(order)?
        }
        (None, None) => return Err(InputError("give either --coeffs or --family".into())),
    };
    let mut grid = SampleGrid::default();
    if let Some(radii) = radii {
        if radii.iter().any(|r| !(0.0 < *r && *r < 1.0)) {
            return Err(InputError("radii must lie strictly between 0 and 1".into()));
        }
        grid.radii = radii;
    }
    grid.angles = angles.max(1);

    let report = match schwarz_from_function(&f, &params, &grid, MEMBERSHIP_TOL) {
        Ok(report) => report,
        Err(err @ Error::DegenerateDenominator { .. }) => {
            return Ok(Outcome {
                status: Status::Violation,
                human: format!("not a member: {err}\n"),
                json: json!({ "verdict": false, "error": err.to_string() }),
                csv: format!("verdict,error\nfalse,\"{err}\"\n"),
            })
        }
        Err(err) => return Err(err.into()),
    };

    let mut human = format!("{}\n", params_line(&params));
    let _ = writeln!(
        human,
        "max |phi(z)|/|z| = {} over radii {:?} x {} angles (series order {})",
        report.max_ratio, report.radii_used, report.angles, report.series_order
    );
    for ex in &report.radii_excluded {
        let _ = writeln!(
            human,
            "excluded radius {}: tail estimate {:e}",
            ex.radius, ex.tail_estimate
        );
    }
    let _ = writeln!(
        human,
        "verdict: {}",
        if report.verdict { "consistent with membership" } else { "not a member" }
    );

    #[derive(Serialize)]
    struct Row {
        max_ratio: f64,
        radii_used: String,
        radii_excluded: String,
        angles: usize,
        series_order: usize,
        verdict: bool,
    }
    let join = |v: &[f64]| v.iter().map(f64::to_string).collect::<Vec<_>>().join(";");
    let row = Row {
        max_ratio: report.max_ratio,
        radii_used: join(&report.radii_used),
        radii_excluded: join(&report.radii_excluded.iter().map(|e| e.radius).collect::<Vec<_>>()),
        angles: report.angles,
        series_order: report.series_order,
        verdict: report.verdict,
    };
    Ok(Outcome {
        status: if report.verdict { Status::Ok } else { Status::Violation },
        json: serde_json::to_value(&report).unwrap(),
        csv: to_csv(&[row]),
        human,
    })
}

#[derive(Serialize)]
struct SweepSummary {
    params: ClassParams,
    case_at_max_n: &'static str,
    seed: u64,
    max_n: u32,
    members: usize,
    random_members: usize,
    theorem1_violations: Vec<Violation>,
    aouf_violations: usize,
    aouf_max_ratio: f64,
}

#[derive(Serialize)]
struct SweepCsv {
    #[serde(rename = "A")]
    a: f64,
    #[serde(rename = "B")]
    b: f64,
    beta: f64,
    p: u32,
    case_at_max_n: &'static str,
    members: usize,
    max_n: u32,
    theorem1_violations: usize,
    aouf_violations: usize,
    aouf_max_ratio: f64,
}

fn sweep(
    args: &OptionalParamArgs,
    count: usize,
    max_n: Option<u32>,
    grid: bool,
    seed: u64,
    tol: f64,
) -> CmdResult {
    let points = match (grid, optional_class_params(args)?) {
        (true, _) => default_sweep_grid(),
        (false, Some(params)) => vec![params],
        (false, None) => return Err(InputError("give -A and -B, or --grid".into())),
    };
    let mut summaries = Vec::new();
    for params in points {
        let last = max_n.unwrap_or(params.p() + 10);
        params.check_index(last)?;
        if last - params.p() > SWEEP_MAX_SPAN {
            return Err(InputError(format!("max_n - p must not exceed {SWEEP_MAX_SPAN}")));
        }
        let report = random_member_sweep(&params, count, last, seed, tol)?;
        let aouf_max_ratio = report
            .aouf_violations
            .iter()
            .map(|v| v.modulus / v.bound)
            .fold(0.0, f64::max);
        summaries.push(SweepSummary {
            params,
            case_at_max_n: params.classify_case(last)?.as_str(),
            seed,
            max_n: last,
            members: report.members,
            random_members: report.random_members,
            aouf_violations: report.aouf_violations.len(),
            theorem1_violations: report.theorem1_violations,
            aouf_max_ratio,
        });
    }

    let total: usize = summaries.iter().map(|s| s.theorem1_violations.len()).sum();
    let mut human = String::new();
    for s in &summaries {
        let _ = writeln!(
            human,
            "{}  max_n = {} [{}]: {} members, {} sharp-bound violations, {} product-formula violations",
            params_line(&s.params),
            s.max_n,
            s.case_at_max_n,
            s.members,
            s.theorem1_violations.len(),
            s.aouf_violations
        );
        for v in &s.theorem1_violations {
            let _ = writeln!(human, "  member {} n = {}: {} > {}", v.member, v.n, v.modulus, v.bound);
        }
    }
    let _ = writeln!(human, "total sharp-bound violations: {total}");

    let csv_rows: Vec<SweepCsv> = summaries
        .iter()
        .map(|s| SweepCsv {
            a: s.params.a(),
            b: s.params.b(),
            beta: s.params.beta(),
            p: s.params.p(),
            case_at_max_n: s.case_at_max_n,
            members: s.members,
            max_n: s.max_n,
            theorem1_violations: s.theorem1_violations.len(),
            aouf_violations: s.aouf_violations,
            aouf_max_ratio: s.aouf_max_ratio,
        })
        .collect();
    Ok(Outcome {
        status: if total == 0 { Status::Ok } else { Status::Violation },
        json: json!({ "seed": seed, "total_theorem1_violations": total, "sweeps": summaries }),
        csv: to_csv(&csv_rows),
        human,
    })
}

fn audit(table_only: bool) -> CmdResult {
    let rows = reproduce_table1();
    let deviation = table1_max_deviation();
    let mut status = if deviation <= TABLE1_TOL { Status::Ok } else { Status::Violation };

    let mut human = String::from("  k  p      A      B   beta                      W\n");
    for r in &rows {
        let _ = writeln!(
            human,
            "{:>3} {:>2} {:>6} {:>6} {:>6} {:>22}",
            r.k, r.p, r.a, r.b, r.beta, r.w
        );
    }
    let _ = writeln!(human, "max deviation from published values: {deviation:e}");

    let mut json = json!({ "table1": rows, "max_deviation": deviation });
    if !table_only {
        let params = ClassParams::new(0.8, 0.5, 0.0, 1).expect("admissible");
        let report = aouf_falsification_report(&params, 3)?;
        let _ = writeln!(human, "{}  n = 3: {}", params_line(&params), report.verdict());
        if !report.violated {
            status = Status::Violation;
        }
        json["falsification"] = serde_json::to_value(&report).unwrap();
    }
    Ok(Outcome {
        status,
        json,
        csv: to_csv(&rows),
        human,
    })
}

fn falsify(args: &ParamArgs, n: u32) -> CmdResult {
    let params = class_params(args)?;
    check_span(&params, n)?;
    let report = aouf_falsification_report(&params, n)?;
    let mut human = format!("{}\n", params_line(&params));
    let _ = writeln!(
        human,
        "n = {} [{}]: product formula {}, sharp bound {}, per-n member |a_n| = {}, membership max|phi|/|z| = {} ({})",
        n,
        report.case,
        report.aouf_bound,
        report.theorem1_bound,
        report.member_coefficient,
        report.membership.max_ratio,
        if report.membership.verdict { "member" } else { "not a member" }
    );
    let _ = writeln!(human, "{}", report.verdict());

    #[derive(Serialize)]
    struct Row {
        n: u32,
        case: &'static str,
        aouf: f64,
        theorem1: f64,
        member_coefficient: f64,
        max_ratio: f64,
        violated: bool,
    }
    let row = Row {
        n,
        case: report.case.as_str(),
        aouf: report.aouf_bound,
        theorem1: report.theorem1_bound,
        member_coefficient: report.member_coefficient,
        max_ratio: report.membership.max_ratio,
        violated: report.violated,
    };
    let mut json = serde_json::to_value(&report).unwrap();
    json["verdict"] = Value::String(report.verdict());
    Ok(Outcome {
        status: if report.violated { Status::Ok } else { Status::Violation },
        json,
        csv: to_csv(&[row]),
        human,
    })
}

#[derive(Serialize)]
struct IdentityRow {
    #[serde(rename = "A")]
    a: f64,
    #[serde(rename = "B")]
    b: f64,
    beta: f64,
    p: u32,
    m: u32,
    residual: f64,
}

fn identity_check(
    args: &OptionalParamArgs,
    m_to: Option<u32>,
    random: Option<usize>,
    seed: u64,
    tol: f64,
) -> CmdResult {
    let mut pairs = Vec::new();
    match (random, optional_class_params(args)?) {
        (Some(count), _) => {
            let mut rng = member_rng(seed, 0);
            while pairs.len() < count {
                let params = random_class_params(&mut rng, 6);
                let m = params.p() + rng.random_range(2..=20);
                if params.classify_case(m)? == CaseLabel::PositiveTerms {
                    pairs.push((params, m));
                }
            }
        }
        (None, Some(params)) => {
            let last = m_to.unwrap_or(params.p() + 20);
            check_span(&params, last)?;
            for m in params.p() + 2..=last {
                if params.classify_case(m)? == CaseLabel::PositiveTerms {
                    pairs.push((params, m));
                }
            }
            if pairs.is_empty() {
                return Err(InputError("no index in range lies in the positive-terms regime".into()));
            }
        }
        (None, None) => return Err(InputError("give -A and -B, or --random N".into())),
    }

    let rows: Vec<IdentityRow> = pairs
        .iter()
        .map(|(params, m)| {
            Ok(IdentityRow {
                a: params.a(),
                b: params.b(),
                beta: params.beta(),
                p: params.p(),
                m: *m,
                residual: induction_identity_residual(params, *m)?,
            })
        })
        .collect::<Result<_, InputError>>()?;
    let worst = rows.iter().map(|r| r.residual).fold(0.0, f64::max);
    let mut human = String::new();
    if rows.len() <= 40 {
        for r in &rows {
            let _ = writeln!(
                human,
                "A = {}, B = {}, beta = {}, p = {}, m = {}: residual {:e}",
                r.a, r.b, r.beta, r.p, r.m, r.residual
            );
        }
    }
    let _ = writeln!(human, "{} pairs, max relative residual {worst:e} (tolerance {tol:e})", rows.len());
    Ok(Outcome {
        status: if worst <= tol { Status::Ok } else { Status::Violation },
        json: json!({ "pairs": rows.len(), "max_residual": worst, "rows": rows }),
        csv: to_csv(&rows),
        human,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coefficients_parse_real_and_complex() {
        assert_eq!(parse_coefficient("0.5").unwrap(), Complex64::new(0.5, 0.0));
        assert_eq!(parse_coefficient("-1:2.5").unwrap(), Complex64::new(-1.0, 2.5));
        assert!(parse_coefficient("x").is_err());
    }

    #[test]
    fn span_limit() {
        let params = ClassParams::new(1.0, -1.0, 0.0, 2).unwrap();
        assert!(check_span(&params, 2 + MAX_SPAN).is_ok());
        assert!(check_span(&params, 3 + MAX_SPAN).is_err());
        assert!(check_span(&params, 2).is_err());
    }

    #[test]
    fn csv_rows_render_options_as_empty() {
        let rows = [BoundCsv {
            n: 7,
            case: "MixedTerms",
            theorem1: 3.5,
            aouf: 0.5,
            envelope: 3.5,
            attained: None,
            gap: 3.0,
        }];
        assert_eq!(to_csv(&rows), "n,case,theorem1,aouf,envelope,attained,gap\n7,MixedTerms,3.5,0.5,3.5,,3.0\n");
    }
}
