//! Command-line front end: build invariants, verify the zero-locus
//! checks, decide nonsingular/integral degree questions, classify
//! singularities, tabulate admissible degrees, and emit Molien data.
//!
//! Machine-readable output (`--json`) is deterministic: identical
//! invocations produce byte-identical JSON with stable key order, so
//! timings appear only in the human-readable form.

use std::fmt::Write as _;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::arith::FieldId;
use crate::decisions::{self, DegreeProfile};
use crate::groups::{self, GroupId};
use crate::ideals::{self, Ideal};
use crate::invariants::{self, Coords, InvariantTriple};
use crate::mpoly::MPoly;
use crate::singularity::{self, SingularityType};

/// Exit status: 0 ok, 1 check failure, 2 usage error.
pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Budget used for `--deep` Gröbner attempts when none is given
/// explicitly; bounds the heavy Valentiner checks to minutes.
const DEEP_DEFAULT_BUDGET: u64 = 20_000;

#[derive(Parser)]
#[command(
    name = "invcurve",
    version,
    about = "Exact invariant-curve toolkit for the Valentiner, icosahedral and Klein groups",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Emit machine-readable JSON on stdout.
    #[arg(long, global = true)]
    json: bool,

    /// Reduction budget for Gröbner-based checks
    /// (overrides the INVCURVE_BUDGET environment variable).
    #[arg(long, global = true)]
    budget: Option<u64>,

    /// Worker threads for the Molien average.
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Run the heavy Valentiner Gröbner checks instead of reporting them
    /// inconclusive.
    #[arg(long, global = true)]
    deep: bool,

    /// Treat inconclusive checks as failures for the exit code.
    #[arg(long, global = true)]
    strict: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Construct the four fundamental invariants and emit them as JSON.
    BuildInvariants(BuildArgs),
    /// Run the zero-locus / nonsingularity / transversality checks.
    Verify(VerifyArgs),
    /// Degree decisions.
    Decide {
        #[command(subcommand)]
        what: DecideWhat,
    },
    /// Singularity type of a general invariant curve of one degree.
    Classify(ClassifyArgs),
    /// Tables of admissible degrees.
    Table {
        #[command(subcommand)]
        what: TableWhat,
    },
    /// Group orders and the exact Molien series of the lift.
    Molien(MolienArgs),
}

#[derive(Args)]
struct BuildArgs {
    #[arg(long)]
    group: String,
    #[arg(long, default_value = "standard")]
    coords: String,
    /// Output file; stdout when omitted.
    #[arg(long)]
    out: Option<String>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    group: String,
    /// standard or wiman; defaults to the frame the checks are fastest in
    /// (standard for K, wiman for V and I).
    #[arg(long)]
    coords: Option<String>,
    /// Comma-separated subset of
    /// zero-locus,nonsingular,transversal,jacobian,wiman-coefficients.
    #[arg(long)]
    checks: Option<String>,
}

#[derive(Subcommand)]
enum DecideWhat {
    /// Is there a nonsingular invariant curve of the degree?
    Nonsingular(DegreeArgs),
    /// Is there an integral invariant curve of the degree?
    Integral(DegreeArgs),
}

#[derive(Args)]
struct DegreeArgs {
    #[arg(long)]
    group: String,
    #[arg(long, conflicts_with = "max")]
    degree: Option<u32>,
    /// Sweep 1..=max instead of a single degree.
    #[arg(long)]
    max: Option<u32>,
}

#[derive(Args)]
struct ClassifyArgs {
    #[arg(long)]
    group: String,
    #[arg(long)]
    degree: u32,
}

#[derive(Subcommand)]
enum TableWhat {
    Nonsingular(TableArgs),
    Integral(TableArgs),
}

#[derive(Args)]
struct TableArgs {
    #[arg(long)]
    group: String,
    #[arg(long, default_value_t = 100)]
    max: u32,
}

#[derive(Args)]
struct MolienArgs {
    #[arg(long)]
    group: String,
    #[arg(long, default_value_t = 30)]
    max: u32,
    /// Expand the closed-form Poincaré series instead of averaging over
    /// the group.
    #[arg(long)]
    closed_form: bool,
}

/// Run the CLI on an argument vector; returns the full output and the
/// process exit code. The binary prints the output and exits with the
/// code.
pub fn run<I, S>(argv: I) -> (String, i32)
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let mut args: Vec<String> = vec!["invcurve".into()];
    args.extend(argv.into_iter().map(Into::into));
    let cli = match Cli::try_parse_from(&args) {
        Ok(c) => c,
        Err(e) => {
            let rendered = e.render().to_string();
            let code = match e.kind() {
                clap::error::ErrorKind::DisplayHelp
                | clap::error::ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            return (rendered, code);
        }
    };

    let budget = cli
        .budget
        .or_else(|| {
            std::env::var("INVCURVE_BUDGET")
                .ok()
                .and_then(|v| v.parse().ok())
        })
        .unwrap_or(ideals::DEFAULT_BUDGET);

    let ctx = Ctx {
        json: cli.json,
        budget,
        explicit_budget: cli.budget.is_some(),
        threads: cli.threads.unwrap_or(1),
        deep: cli.deep,
        strict: cli.strict,
    };

    match cli.command {
        Command::BuildInvariants(a) => build_invariants(&ctx, a),
        Command::Verify(a) => verify(&ctx, a),
        Command::Decide { what } => match what {
            DecideWhat::Nonsingular(a) => decide_nonsingular(&ctx, a),
            DecideWhat::Integral(a) => decide_integral(&ctx, a),
        },
        Command::Classify(a) => classify(&ctx, a),
        Command::Table { what } => match what {
            TableWhat::Nonsingular(a) => table(&ctx, a, true),
            TableWhat::Integral(a) => table(&ctx, a, false),
        },
        Command::Molien(a) => molien(&ctx, a),
    }
}

struct Ctx {
    json: bool,
    budget: u64,
    explicit_budget: bool,
    threads: usize,
    deep: bool,
    strict: bool,
}

fn parse_group(s: &str) -> Result<GroupId, (String, i32)> {
    GroupId::parse(s).ok_or_else(|| {
        (
            format!("error: unknown group '{}' (expected V, I or K)\n", s),
            EXIT_USAGE,
        )
    })
}

fn parse_coords(s: &str) -> Result<Coords, (String, i32)> {
    Coords::parse(s).ok_or_else(|| {
        (
            format!("error: unknown coords '{}' (expected standard or wiman)\n", s),
            EXIT_USAGE,
        )
    })
}

fn frame_triple(group: GroupId, coords: Coords) -> Result<&'static InvariantTriple, (String, i32)> {
    match (group, coords) {
        (GroupId::Valentiner, Coords::Standard) => Ok(invariants::build_valentiner()),
        (GroupId::Valentiner, Coords::Wiman) => Ok(invariants::build_wiman_valentiner()),
        (GroupId::Icosahedral, c) => Ok(invariants::build_icosahedral(c)),
        (GroupId::Klein, Coords::Standard) => Ok(invariants::build_klein()),
        (GroupId::Klein, Coords::Wiman) => Err((
            "error: the Klein invariants have no wiman frame\n".into(),
            EXIT_USAGE,
        )),
    }
}

#[derive(Serialize)]
struct InvariantsPayload<'a> {
    group: &'a str,
    coords: &'a str,
    field: &'a str,
    degrees: [u32; 4],
    #[serde(rename = "F")]
    f: &'a MPoly,
    #[serde(rename = "Phi")]
    phi: &'a MPoly,
    #[serde(rename = "Psi")]
    psi: &'a MPoly,
    #[serde(rename = "X")]
    x: &'a MPoly,
}

fn build_invariants(_ctx: &Ctx, a: BuildArgs) -> (String, i32) {
    let group = match parse_group(&a.group) {
        Ok(g) => g,
        Err(e) => return e,
    };
    let coords = match parse_coords(&a.coords) {
        Ok(c) => c,
        Err(e) => return e,
    };
    let triple = match frame_triple(group, coords) {
        Ok(t) => t,
        Err(e) => return e,
    };
    let payload = InvariantsPayload {
        group: group.name(),
        coords: coords.name(),
        field: triple.field().name(),
        degrees: [
            triple.degrees.0,
            triple.degrees.1,
            triple.degrees.2,
            triple.degrees.3,
        ],
        f: &triple.f,
        phi: &triple.phi,
        psi: &triple.psi,
        x: &triple.x,
    };
    let json = serde_json::to_string(&payload).expect("serializable");
    match a.out {
        Some(path) => match std::fs::write(&path, json) {
            Ok(()) => (format!("wrote invariants to {}\n", path), EXIT_OK),
            Err(e) => (format!("error: cannot write {}: {}\n", path, e), EXIT_CHECK_FAILED),
        },
        None => (json + "\n", EXIT_OK),
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
enum CheckStatus {
    Pass,
    Fail,
    Inconclusive,
}

#[derive(Serialize)]
struct CheckReport {
    name: String,
    status: CheckStatus,
    detail: String,
}

#[derive(Serialize)]
struct VerifyReport {
    command: String,
    group: String,
    coords: String,
    checks: Vec<CheckReport>,
}

fn verify(ctx: &Ctx, a: VerifyArgs) -> (String, i32) {
    let group = match parse_group(&a.group) {
        Ok(g) => g,
        Err(e) => return e,
    };
    let coords = match a.coords.as_deref() {
        Some(s) => match parse_coords(s) {
            Ok(c) => c,
            Err(e) => return e,
        },
        None => match group {
            GroupId::Klein => Coords::Standard,
            _ => Coords::Wiman,
        },
    };
    let triple = match frame_triple(group, coords) {
        Ok(t) => t,
        Err(e) => return e,
    };

    let all_checks: Vec<&str> = match (group, coords) {
        (GroupId::Icosahedral, Coords::Wiman) => {
            vec!["zero-locus", "nonsingular", "transversal", "jacobian"]
        }
        (GroupId::Valentiner, Coords::Wiman) => vec![
            "wiman-coefficients",
            "zero-locus",
            "nonsingular",
            "transversal",
        ],
        _ => vec!["zero-locus", "nonsingular", "transversal"],
    };
    let selected: Vec<String> = match &a.checks {
        Some(list) => {
            let req: Vec<String> = list.split(',').map(|s| s.trim().to_string()).collect();
            for r in &req {
                if !all_checks.contains(&r.as_str()) {
                    return (
                        format!(
                            "error: unknown check '{}' for {} in {} coordinates (available: {})\n",
                            r,
                            group,
                            coords.name(),
                            all_checks.join(",")
                        ),
                        EXIT_USAGE,
                    );
                }
            }
            req
        }
        None => all_checks.iter().map(|s| s.to_string()).collect(),
    };

    // The working polynomials: Gröbner checks run over Q whenever the
    // coefficients are rational-valued.
    let polys: Option<(MPoly, MPoly, MPoly)> = triple
        .f
        .transfer(FieldId::Q)
        .and_then(|f| {
            triple.phi.transfer(FieldId::Q).and_then(|phi| {
                triple.psi.transfer(FieldId::Q).map(|psi| (f, phi, psi))
            })
        })
        .ok();
    let (f, phi, psi) = match polys {
        Some(t) => t,
        None => (triple.f.clone(), triple.phi.clone(), triple.psi.clone()),
    };

    // Checks that exceed desk scale unless --deep: the Ψ-involving
    // Valentiner runs, and any standard-coordinate run of V or I (their
    // standard frames carry degree-8 cyclotomic coefficients).
    let gated_frame = coords == Coords::Standard && group != GroupId::Klein;
    let deep_budget = if ctx.explicit_budget {
        ctx.budget
    } else if ctx.deep {
        DEEP_DEFAULT_BUDGET
    } else {
        ctx.budget
    };

    let mut checks: Vec<CheckReport> = Vec::new();
    let mut human = String::new();
    let mut run_check = |name: &str, gated: bool, f: &mut dyn FnMut(u64) -> (CheckStatus, String)| {
        let t0 = Instant::now();
        let (status, detail) = if gated && !ctx.deep {
            (
                CheckStatus::Inconclusive,
                "skipped at desk scale; rerun with --deep".to_string(),
            )
        } else {
            let b = if gated { deep_budget } else { ctx.budget };
            f(b)
        };
        let status_word = match status {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
            CheckStatus::Inconclusive => "inconclusive",
        };
        let _ = writeln!(
            human,
            "{}: {} ({} ms): {}",
            name,
            status_word,
            t0.elapsed().as_millis(),
            detail
        );
        checks.push(CheckReport {
            name: name.to_string(),
            status,
            detail,
        });
    };

    let status_of = |r: Result<bool, ideals::IdealError>, ok_text: &str, fail_text: &str| match r {
        Ok(true) => (CheckStatus::Pass, ok_text.to_string()),
        Ok(false) => (CheckStatus::Fail, fail_text.to_string()),
        Err(e) => (CheckStatus::Inconclusive, e.to_string()),
    };

    for name in &selected {
        match name.as_str() {
            "wiman-coefficients" => run_check("wiman-coefficients", false, &mut |_| {
                let expected = invariants::wiman_sextic(triple.f.field());
                if triple.f == expected {
                    (
                        CheckStatus::Pass,
                        "sextic matches its six reference terms".into(),
                    )
                } else {
                    (CheckStatus::Fail, "sextic differs from the reference form".into())
                }
            }),
            "zero-locus" => {
                let heavy = gated_frame || group == GroupId::Valentiner;
                run_check("zero-locus", heavy, &mut |b| {
                    let ideal = Ideal::new(vec![f.clone(), phi.clone(), psi.clone()])
                        .expect("nonzero generators");
                    status_of(
                        ideals::only_trivial_zero(&ideal, b),
                        "common zero locus of F, Phi, Psi is trivial",
                        "nontrivial common zero found",
                    )
                })
            }
            "nonsingular" => {
                for (label, poly, heavy) in [
                    ("nonsingular-F", &f, gated_frame),
                    ("nonsingular-Phi", &phi, gated_frame),
                    (
                        "nonsingular-Psi",
                        &psi,
                        gated_frame || group == GroupId::Valentiner,
                    ),
                ] {
                    run_check(label, heavy, &mut |b| {
                        status_of(
                            ideals::nonsingular_check(poly, b),
                            "gradient has no projective zero",
                            "singular point exists",
                        )
                    });
                }
            }
            "transversal" => run_check("transversal", gated_frame, &mut |b| {
                status_of(
                    ideals::transversal_check(&f, &phi, b),
                    "V(F) and V(Phi) meet transversally",
                    "tangential intersection found",
                )
            }),
            "jacobian" => run_check("jacobian-at-(1,0,0) = 7290", false, &mut |_| {
                let one = crate::arith::FieldElement::one(triple.field());
                let zero = crate::arith::FieldElement::zero(triple.field());
                let v = triple.x.evaluate(&[one, zero.clone(), zero]);
                if v == crate::arith::FieldElement::from_int(triple.field(), 7290) {
                    (CheckStatus::Pass, "Jacobian reduces to the constant 7290".into())
                } else {
                    (CheckStatus::Fail, format!("Jacobian reduces to {}", v))
                }
            }),
            _ => unreachable!("validated above"),
        }
    }

    let any_fail = checks.iter().any(|c| c.status == CheckStatus::Fail);
    let any_inconclusive = checks.iter().any(|c| c.status == CheckStatus::Inconclusive);
    let code = if any_fail || (ctx.strict && any_inconclusive) {
        EXIT_CHECK_FAILED
    } else {
        EXIT_OK
    };
    if any_inconclusive && !ctx.strict {
        let _ = writeln!(human, "warning: inconclusive checks present (pass --strict to fail on them)");
    }

    if ctx.json {
        let report = VerifyReport {
            command: "verify".into(),
            group: group.name().into(),
            coords: coords.name().into(),
            checks,
        };
        (
            serde_json::to_string(&report).expect("serializable") + "\n",
            code,
        )
    } else {
        (human, code)
    }
}

#[derive(Serialize)]
struct NonsingularPayload {
    #[serde(flatten)]
    decision: decisions::NonsingularDecision,
    basis: Vec<(u32, u32, u32)>,
}

fn decide_nonsingular(ctx: &Ctx, a: DegreeArgs) -> (String, i32) {
    let group = match parse_group(&a.group) {
        Ok(g) => g,
        Err(e) => return e,
    };
    match (a.degree, a.max) {
        (Some(0), None) => ("error: --degree must be at least 1\n".into(), EXIT_USAGE),
        (Some(d), None) => {
            let decision = decisions::decide_nonsingular(group, d);
            let basis = decisions::basis(group, d).triples;
            if ctx.json {
                let payload = NonsingularPayload { decision, basis };
                (serde_json::to_string(&payload).expect("serializable") + "\n", EXIT_OK)
            } else {
                let mut s = format!(
                    "group {} degree {}: {}\n",
                    group,
                    d,
                    if decision.exists {
                        "a nonsingular invariant curve exists"
                    } else {
                        "every invariant curve is singular (or none exists)"
                    }
                );
                if !decision.failed_conditions.is_empty() {
                    let _ = writeln!(s, "failed conditions: {:?}", decision.failed_conditions);
                }
                if let Some(case) = decision.low_degree_case {
                    let _ = writeln!(s, "mechanism: {:?}", case);
                }
                let _ = writeln!(s, "basis exponents (F,Phi,Psi): {:?}", basis);
                (s, EXIT_OK)
            }
        }
        (None, Some(max)) => {
            let rows: Vec<decisions::NonsingularDecision> = (1..=max)
                .map(|d| decisions::decide_nonsingular(group, d))
                .collect();
            if ctx.json {
                (serde_json::to_string(&rows).expect("serializable") + "\n", EXIT_OK)
            } else {
                let mut s = String::new();
                for r in rows.iter().filter(|r| r.exists) {
                    let _ = write!(s, "{} ", r.d);
                }
                let _ = writeln!(
                    s,
                    "\n{} admissible degrees ≤ {}",
                    rows.iter().filter(|r| r.exists).count(),
                    max
                );
                (s, EXIT_OK)
            }
        }
        _ => (
            "error: pass exactly one of --degree or --max\n".into(),
            EXIT_USAGE,
        ),
    }
}

fn decide_integral(ctx: &Ctx, a: DegreeArgs) -> (String, i32) {
    let group = match parse_group(&a.group) {
        Ok(g) => g,
        Err(e) => return e,
    };
    match (a.degree, a.max) {
        (Some(0), None) => ("error: --degree must be at least 1\n".into(), EXIT_USAGE),
        (Some(d), None) => {
            let payload = singularity::report(group, d);
            if ctx.json {
                (serde_json::to_string(&payload).expect("serializable") + "\n", EXIT_OK)
            } else {
                let mut s = format!(
                    "group {} degree {}: {}\n",
                    group,
                    d,
                    if payload.integral {
                        "an integral invariant curve exists"
                    } else {
                        "no integral invariant curve"
                    }
                );
                let _ = writeln!(s, "general member: {}", payload.sing_type.label());
                if let Some(cert) = &payload.certificate {
                    if cert.cusp_unibranch {
                        let _ = writeln!(s, "certificate: all singularities are cusps (unibranch)");
                    } else {
                        let _ = writeln!(
                            s,
                            "certificate: {} candidate splittings refuted",
                            cert.refutations.len()
                        );
                        for (lo, hi) in cert.window_contradictions() {
                            let _ = writeln!(s, "  window contradiction: {} <= {}", lo, hi);
                        }
                    }
                }
                (s, EXIT_OK)
            }
        }
        (None, Some(max)) => {
            let rows: Vec<(u32, bool)> = (1..=max)
                .map(|d| (d, singularity::decide_integral(group, d)))
                .collect();
            if ctx.json {
                (serde_json::to_string(&rows).expect("serializable") + "\n", EXIT_OK)
            } else {
                let mut s = String::new();
                for (d, ok) in rows.iter().filter(|(_, ok)| *ok) {
                    let _ = write!(s, "{} ", d);
                    let _ = ok;
                }
                let _ = writeln!(
                    s,
                    "\n{} integral degrees ≤ {}",
                    rows.iter().filter(|(_, ok)| *ok).count(),
                    max
                );
                (s, EXIT_OK)
            }
        }
        _ => (
            "error: pass exactly one of --degree or --max\n".into(),
            EXIT_USAGE,
        ),
    }
}

#[derive(Serialize)]
struct ClassifyPayload {
    group: String,
    degree: u32,
    #[serde(rename = "type")]
    sing_type: SingularityType,
    m: Option<u32>,
    locus: Option<String>,
    count: Option<u32>,
}

fn classify(ctx: &Ctx, a: ClassifyArgs) -> (String, i32) {
    let group = match parse_group(&a.group) {
        Ok(g) => g,
        Err(e) => return e,
    };
    if a.degree == 0 {
        return ("error: --degree must be at least 1\n".into(), EXIT_USAGE);
    }
    let sing = singularity::classify(group, a.degree);
    let p = DegreeProfile::of(group);
    let singular = !matches!(
        sing,
        SingularityType::Nonsingular | SingularityType::Undefined
    );
    let payload = ClassifyPayload {
        group: group.name().into(),
        degree: a.degree,
        sing_type: sing,
        m: sing.branch_multiplicity(),
        locus: singular.then(|| "V(F)∩V(Phi)".to_string()),
        count: singular.then_some(p.a * p.b),
    };
    if ctx.json {
        (serde_json::to_string(&payload).expect("serializable") + "\n", EXIT_OK)
    } else {
        let mut s = format!(
            "group {} degree {}: general member is {}\n",
            group,
            a.degree,
            sing.label()
        );
        if singular {
            let _ = writeln!(
                s,
                "singular locus: V(F)∩V(Phi), {} points{}",
                p.a * p.b,
                match payload.m {
                    Some(m) => format!(", branch multiplicity {}", m),
                    None => ", unibranch (cusp)".to_string(),
                }
            );
        }
        (s, EXIT_OK)
    }
}

fn table(ctx: &Ctx, a: TableArgs, nonsingular: bool) -> (String, i32) {
    let group = match parse_group(&a.group) {
        Ok(g) => g,
        Err(e) => return e,
    };
    let admissible: Vec<u32> = (1..=a.max)
        .filter(|&d| {
            if nonsingular {
                decisions::closed_form_nonsingular(group, d)
            } else {
                singularity::decide_integral(group, d)
            }
        })
        .collect();
    if ctx.json {
        return (
            serde_json::to_string(&admissible).expect("serializable") + "\n",
            EXIT_OK,
        );
    }
    let what = if nonsingular { "nonsingular" } else { "integral" };
    let mut s = format!(
        "degrees d ≤ {} with a {} curve invariant under {}:\n",
        a.max, what, group
    );
    for chunk in admissible.chunks(15) {
        let row: Vec<String> = chunk.iter().map(|d| format!("{:>4}", d)).collect();
        let _ = writeln!(s, "{}", row.join(" "));
    }
    let _ = writeln!(s, "({} degrees)", admissible.len());
    (s, EXIT_OK)
}

fn molien(ctx: &Ctx, a: MolienArgs) -> (String, i32) {
    let group = match parse_group(&a.group) {
        Ok(g) => g,
        Err(e) => return e,
    };
    if a.closed_form {
        let coeffs = groups::expand_poincare(group, a.max);
        return if ctx.json {
            (serde_json::to_string(&coeffs).expect("serializable") + "\n", EXIT_OK)
        } else {
            (
                format!("closed-form series of {}: {:?}\n", group, coeffs),
                EXIT_OK,
            )
        };
    }
    let gens = groups::generators(group);
    let g = match groups::closure(&gens, groups::DEFAULT_CLOSURE_CAP) {
        Ok(g) => g,
        Err(e) => return (format!("error: {}\n", e), EXIT_CHECK_FAILED),
    };
    let coeffs = match groups::molien_series_threaded(&g, a.max, ctx.threads) {
        Ok(c) => c,
        Err(e) => return (format!("error: {}\n", e), EXIT_CHECK_FAILED),
    };
    if ctx.json {
        (serde_json::to_string(&coeffs).expect("serializable") + "\n", EXIT_OK)
    } else {
        let mut s = format!(
            "group {}: lift order {}, projective order {}\n",
            group,
            g.order(),
            groups::projective_order(&g)
        );
        let _ = writeln!(s, "Molien coefficients t^0..t^{}: {:?}", a.max, coeffs);
        (s, EXIT_OK)
    }
}
