//! Batch command-line surface: every subcommand prints one JSON document on
//! stdout and a short human summary on stderr.
//!
//! Exit codes: 0 success, 1 domain condition (non-finite value set,
//! non-isolated critical locus, periodicity/nilpotence not detected, failed
//! regular-sequence check), 2 input error, 3 budget exceeded.

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};
use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use mfsing::crit::{
    critical_values, relative_critical_values, CriticalData, CrossCheck, Eliminant, RelCritData,
};
use mfsing::lg::LgModel;
use mfsing::matfac::{
    eisenbud_operators, hom_complex, koszul_mf, operator_nilpotence_probe,
    resolution_over_hypersurface, stable_hom_dims, tensor_mf, MatrixFactorization, PMat,
    ResolutionOutcome,
};
use mfsing::milnor::{
    hh_rank, hp_rank, per_value_milnor_numbers, truncated_koszul_homology, HhReport, HpOutcome,
    KoszulTable, MilnorData, MilnorOutcome,
};
use mfsing::poly::{MonomialOrder, PolyRing, Polynomial};
use mfsing::{Budget, Error};

const EXIT_DOMAIN: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser)]
#[command(
    name = "mfsing",
    about = "Exact singularity invariants of affine Landau-Ginzburg models",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Cap on Groebner S-pairs for the whole run.
    #[arg(long, global = true)]
    budget: Option<u64>,
    /// Pretty-print JSON with this indent width (default: compact).
    #[arg(long, global = true)]
    json_indent: Option<usize>,
}

#[derive(Args, Clone)]
struct PolyInput {
    /// Polynomial in the text grammar, e.g. "x^2 + 2*x*y - 1/3".
    #[arg(long)]
    poly: String,
    /// Comma-separated ring variables, e.g. "x1,x2,x3". Inferred from the
    /// polynomial's identifiers (in order of first appearance) when absent.
    #[arg(long)]
    ring: Option<String>,
    /// Monomial order of the ring: grevlex or lex.
    #[arg(long, default_value = "grevlex")]
    order: String,
}

#[derive(Subcommand)]
enum Command {
    /// Append one variable per relation and print W = g + sum f_k x_{n+k}.
    Regularize {
        #[arg(long)]
        model: String,
    },
    /// Critical values of a potential on affine space.
    CritValues {
        #[command(flatten)]
        poly: PolyInput,
    },
    /// Relative critical values of a model.
    Relcrit {
        #[arg(long)]
        model: String,
    },
    /// Codimension check of (f_1, ..., f_m, g).
    CheckRegseq {
        #[arg(long)]
        model: String,
    },
    /// Milnor algebra, total Milnor number, per-value multiplicities.
    Milnor {
        #[command(flatten)]
        poly: PolyInput,
    },
    /// Hochschild rank report of a model.
    Hh {
        #[arg(long)]
        model: String,
        /// Truncation bound for the non-isolated fallback.
        #[arg(long, default_value_t = 4)]
        bound: u32,
    },
    /// Periodic-cyclic rank report of a model.
    Hp {
        #[arg(long)]
        model: String,
    },
    /// Check the factorization identity of a matrix factorization file.
    MfValidate {
        #[arg(long)]
        mf: String,
        #[arg(long)]
        ring: Option<String>,
    },
    /// Koszul factorization of sum a_i b_i.
    MfKoszul {
        /// Comma-separated list of polynomials.
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        #[arg(long)]
        ring: String,
    },
    /// Tensor product of two matrix factorization files.
    MfTensor {
        #[arg(long)]
        mf: String,
        #[arg(long)]
        mf2: String,
        #[arg(long)]
        ring: Option<String>,
    },
    /// Stable hom dimensions of two factorizations of the same potential.
    MfHom {
        #[arg(long)]
        mf: String,
        #[arg(long)]
        mf2: String,
        #[arg(long)]
        ring: Option<String>,
    },
    /// Extract the matrix factorization from a 2-periodic resolution tail.
    MfFromModule {
        /// Module file: {"variables": [...], "potential": "...",
        /// "presentation": [["..."]]}.
        #[arg(long)]
        module: String,
        #[arg(long, default_value_t = 8)]
        steps: usize,
    },
    /// Eisenbud operators over a complete-intersection quotient.
    EisenbudOps {
        /// Module file: {"variables": [...], "relations": ["..."],
        /// "presentation": [["..."]]}.
        #[arg(long)]
        module: String,
        #[arg(long, default_value_t = 8)]
        steps: usize,
        /// Extra relation for the nilpotence probe of its operator.
        #[arg(long)]
        probe_extra: Option<String>,
    },
    /// Full pipeline: regseq, regularize, values, cross-check, Milnor data.
    Report {
        #[arg(long)]
        model: String,
        #[arg(long, default_value_t = 4)]
        bound: u32,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let budget = Budget::new(cli.budget.unwrap_or(mfsing::groebner::DEFAULT_S_PAIR_BUDGET));
    match run(&cli.command, &budget) {
        Ok(outcome) => {
            emit(&outcome.json, cli.json_indent);
            eprintln!("{}", outcome.summary);
            ExitCode::from(outcome.exit)
        }
        Err(err) => {
            let exit = match &err {
                Error::BudgetExceeded { .. } => EXIT_BUDGET,
                _ => EXIT_INPUT,
            };
            emit(&json!({ "error": err.to_string() }), cli.json_indent);
            eprintln!("error: {err}");
            ExitCode::from(exit)
        }
    }
}

struct Outcome {
    json: Value,
    summary: String,
    exit: u8,
}

fn emit(value: &Value, indent: Option<usize>) {
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    let text = match indent {
        None | Some(0) => value.to_string(),
        Some(n) => {
            let indent_bytes = vec![b' '; n];
            let fmt = serde_json::ser::PrettyFormatter::with_indent(&indent_bytes);
            let mut buf = Vec::new();
            let mut ser = serde_json::Serializer::with_formatter(&mut buf, fmt);
            serde::Serialize::serialize(value, &mut ser).expect("JSON serialization");
            String::from_utf8(buf).expect("valid UTF-8")
        }
    };
    writeln!(lock, "{text}").expect("stdout");
}

fn run(cmd: &Command, budget: &Budget) -> Result<Outcome, Error> {
    match cmd {
        Command::Regularize { model } => {
            let (m, hash) = read_model(model)?;
            let reg = m.regularize()?;
            let json = json!({
                "command": "regularize",
                "input_hash": hash,
                "variables": reg.ring().vars(),
                "new_variables": reg.new_vars(),
                "w": reg.w().to_string(),
            });
            Ok(Outcome {
                summary: format!("W = {}", reg.w()),
                json,
                exit: 0,
            })
        }
        Command::CritValues { poly } => {
            let w = parse_poly_input(poly)?;
            let cv = critical_values(&w, budget)?;
            let finite = cv.values.eliminant.is_finite();
            let json = json!({
                "command": "crit-values",
                "potential": w.to_string(),
                "critical_values": cv.values.to_json(),
                "locus_dimension": dim_json(&cv.locus_dimension),
            });
            Ok(Outcome {
                summary: summarize_values("critical values", &cv.values),
                json,
                exit: if finite { 0 } else { EXIT_DOMAIN },
            })
        }
        Command::Relcrit { model } => {
            let (m, hash) = read_model(model)?;
            let rel = relative_critical_values(&m, budget)?;
            let finite = rel.values.eliminant.is_finite();
            let json = json!({
                "command": "relcrit",
                "input_hash": hash,
                "relative_critical_values": rel.values.to_json(),
                "strata": rel.strata.iter().map(|s| json!({
                    "rank": s.rank,
                    "eliminant": eliminant_json(&s.eliminant),
                })).collect::<Vec<_>>(),
            });
            Ok(Outcome {
                summary: summarize_values("relative critical values", &rel.values),
                json,
                exit: if finite { 0 } else { EXIT_DOMAIN },
            })
        }
        Command::CheckRegseq { model } => {
            let (m, hash) = read_model(model)?;
            let report = m.check_regular_sequence(budget)?;
            let json = json!({
                "command": "check-regseq",
                "input_hash": hash,
                "ok": report.ok,
                "dims": report.dims.iter().map(dim_json).collect::<Vec<_>>(),
                "first_failure": report.first_failure,
            });
            Ok(Outcome {
                summary: if report.ok {
                    "regular sequence: ok".into()
                } else {
                    format!(
                        "regular sequence: fails at prefix {}",
                        report.first_failure.unwrap_or(0)
                    )
                },
                json,
                exit: if report.ok { 0 } else { EXIT_DOMAIN },
            })
        }
        Command::Milnor { poly } => {
            let w = parse_poly_input(poly)?;
            match per_value_milnor_numbers(&w, budget)? {
                MilnorOutcome::Isolated(md) => {
                    let json = json!({
                        "command": "milnor",
                        "potential": w.to_string(),
                        "isolated": true,
                        "milnor": milnor_json(&md, w.ring()),
                    });
                    Ok(Outcome {
                        summary: format!("mu = {}", md.mu_total),
                        json,
                        exit: 0,
                    })
                }
                MilnorOutcome::NonIsolated { locus_dimension } => {
                    let json = json!({
                        "command": "milnor",
                        "potential": w.to_string(),
                        "isolated": false,
                        "locus_dimension": dim_json(&locus_dimension),
                    });
                    Ok(Outcome {
                        summary: "non-isolated critical locus".into(),
                        json,
                        exit: EXIT_DOMAIN,
                    })
                }
            }
        }
        Command::Hh { model, bound } => {
            let (m, hash) = read_model(model)?;
            let report = hh_rank(&m, *bound, budget)?;
            let reg_ring = m.regularize()?.ring().clone();
            let exit = if report.regular_case { 0 } else { EXIT_DOMAIN };
            let summary = match report.total_dim {
                Some(d) => format!(
                    "HH dim {} in parity {} (degree {})",
                    d, report.parity, report.concentrated_degree
                ),
                None => "non-isolated: truncated Koszul table attached".into(),
            };
            let json = json!({
                "command": "hh",
                "input_hash": hash,
                "hh": hh_json(&report, &reg_ring),
            });
            Ok(Outcome { json, summary, exit })
        }
        Command::Hp { model } => {
            let (m, hash) = read_model(model)?;
            match hp_rank(&m, budget)? {
                HpOutcome::Ranked(hp) => {
                    let json = json!({
                        "command": "hp",
                        "input_hash": hash,
                        "rank": hp.rank,
                        "per_value": per_value_json(&hp.milnor),
                    });
                    Ok(Outcome {
                        summary: format!("HP rank {}", hp.rank),
                        json,
                        exit: 0,
                    })
                }
                HpOutcome::NonIsolated { locus_dimension } => Ok(Outcome {
                    json: json!({
                        "command": "hp",
                        "input_hash": hash,
                        "non_isolated": true,
                        "locus_dimension": dim_json(&locus_dimension),
                        "hint": "use hh --bound N for the truncated Koszul table",
                    }),
                    summary: "non-isolated: HP rank refused".into(),
                    exit: EXIT_DOMAIN,
                }),
            }
        }
        Command::MfValidate { mf, ring } => {
            let m = read_mf(mf, ring.as_deref())?;
            let v = m.validate();
            let json = json!({
                "command": "mf-validate",
                "ok": v.ok,
                "rank": m.rank(),
                "potential": m.potential().to_string(),
                "residue01": v.residue01.as_ref().map(pmat_json),
                "residue10": v.residue10.as_ref().map(pmat_json),
            });
            Ok(Outcome {
                summary: if v.ok {
                    "matrix factorization: valid".into()
                } else {
                    "matrix factorization: identity violated".into()
                },
                json,
                exit: 0,
            })
        }
        Command::MfKoszul { a, b, ring } => {
            let ring = make_ring(ring, "grevlex")?;
            let parse_list = |s: &str| -> Result<Vec<Polynomial>, Error> {
                s.split(',').map(|p| ring.parse(p.trim())).collect()
            };
            let mf = koszul_mf(&parse_list(a)?, &parse_list(b)?)?;
            Ok(Outcome {
                summary: format!("rank {} factorization of {}", mf.rank(), mf.potential()),
                json: mf.to_json(),
                exit: 0,
            })
        }
        Command::MfTensor { mf, mf2, ring } => {
            let e = read_mf(mf, ring.as_deref())?;
            let f = read_mf(mf2, ring.as_deref())?;
            let t = tensor_mf(&e, &f)?;
            let mut json = t.to_json();
            json["renames"] = json!(t
                .renames()
                .iter()
                .map(|(a, b)| json!([a, b]))
                .collect::<Vec<_>>());
            Ok(Outcome {
                summary: format!("rank {} factorization of {}", t.rank(), t.potential()),
                json,
                exit: 0,
            })
        }
        Command::MfHom { mf, mf2, ring } => {
            let e = read_mf(mf, ring.as_deref())?;
            let f = read_mf(mf2, ring.as_deref())?;
            let hc = hom_complex(&e, &f)?;
            let sh = stable_hom_dims(&e, &f, budget)?;
            let dims = |d: &Option<usize>| match d {
                Some(n) => json!(n),
                None => json!("infinite"),
            };
            let json = json!({
                "command": "mf-hom",
                "flattened_size": hc.even_to_odd.rows,
                "even_dim": dims(&sh.even_dim),
                "odd_dim": dims(&sh.odd_dim),
            });
            Ok(Outcome {
                summary: format!(
                    "stable hom dims: even {}, odd {}",
                    opt_dim(&sh.even_dim),
                    opt_dim(&sh.odd_dim)
                ),
                json,
                exit: 0,
            })
        }
        Command::MfFromModule { module, steps } => {
            let (_ring, w, presentation, hash) = read_module_file(module)?;
            let report = resolution_over_hypersurface(&w, &presentation, *steps, budget)?;
            let betti: Vec<usize> = report.matrices.iter().map(|m| m.rows).collect();
            match report.outcome {
                ResolutionOutcome::Periodic { index, mf } => {
                    let mut json = mf.to_json();
                    json["command"] = json!("mf-from-module");
                    json["input_hash"] = json!(hash);
                    json["periodic_at"] = json!(index);
                    json["betti"] = json!(betti);
                    Ok(Outcome {
                        summary: format!("2-periodic at step {index}; rank {}", mf.rank()),
                        json,
                        exit: 0,
                    })
                }
                ResolutionOutcome::Terminated { steps } => Ok(Outcome {
                    json: json!({
                        "command": "mf-from-module",
                        "input_hash": hash,
                        "terminated_at": steps,
                        "betti": betti,
                        "detected": false,
                    }),
                    summary: format!("resolution terminated after {steps} steps (free module)"),
                    exit: EXIT_DOMAIN,
                }),
                ResolutionOutcome::NotDetected => Ok(Outcome {
                    json: json!({
                        "command": "mf-from-module",
                        "input_hash": hash,
                        "detected": false,
                        "betti": betti,
                    }),
                    summary: "periodicity not detected within the step limit".into(),
                    exit: EXIT_DOMAIN,
                }),
            }
        }
        Command::EisenbudOps {
            module,
            steps,
            probe_extra,
        } => {
            let (ring, relations, presentation, hash) = read_relations_file(module)?;
            let ops = eisenbud_operators(&relations, &presentation, *steps, budget)?;
            let mut probe_json = Value::Null;
            let mut exit = 0u8;
            let mut probe_note = String::new();
            if let Some(extra) = probe_extra {
                let g = ring.parse(extra)?;
                let probe =
                    operator_nilpotence_probe(&relations, &g, &presentation, *steps, budget)?;
                probe_json = json!({
                    "detected": probe.detected,
                    "max_checked": probe.max_checked,
                    "zero_module": probe.zero_module,
                });
                match probe.detected {
                    Some(n) => probe_note = format!("; nilpotence at N = {n}"),
                    None => {
                        probe_note = "; nilpotence not detected".into();
                        exit = EXIT_DOMAIN;
                    }
                }
            }
            let json = json!({
                "command": "eisenbud-ops",
                "input_hash": hash,
                "relations": relations.iter().map(|f| f.to_string()).collect::<Vec<_>>(),
                "betti": ops.differentials.iter().map(|m| m.rows).collect::<Vec<_>>(),
                "certificate_ok": ops.certificate_ok,
                "chain_maps_ok": ops.chain_maps_ok,
                "terminated": ops.terminated,
                "operators": ops.operators.iter().map(|family| {
                    family.iter().map(pmat_json).collect::<Vec<_>>()
                }).collect::<Vec<_>>(),
                "nilpotence_probe": probe_json,
            });
            Ok(Outcome {
                summary: format!(
                    "{} operator families; certificate {}{}",
                    ops.operators.len(),
                    if ops.certificate_ok { "ok" } else { "FAILED" },
                    probe_note
                ),
                json,
                exit,
            })
        }
        Command::Report { model, bound } => report_pipeline(model, *bound, budget),
    }
}

fn opt_dim(d: &Option<usize>) -> String {
    match d {
        Some(n) => n.to_string(),
        None => "infinite".into(),
    }
}

// ---------------------------------------------------------------------------
// consolidated report
// ---------------------------------------------------------------------------

fn report_pipeline(model_path: &str, bound: u32, budget: &Budget) -> Result<Outcome, Error> {
    let start = Instant::now();
    let (model, hash) = read_model(model_path)?;
    let regseq = model.check_regular_sequence(budget)?;

    let reg = model.regularize()?;
    let cv: CriticalData = critical_values(reg.w(), budget)?;
    let rel: RelCritData = relative_critical_values(&model, budget)?;
    let check = if cv.values.eliminant == rel.values.eliminant {
        CrossCheck::Agree
    } else {
        CrossCheck::Disagree
    };
    let milnor_outcome = per_value_milnor_numbers(reg.w(), budget)?;
    let (milnor_value, hh_value, hp_value) = match &milnor_outcome {
        MilnorOutcome::Isolated(md) => {
            let (hh, hp) = if regseq.ok {
                let hh = hh_rank(&model, bound, budget)?;
                let hp = match hp_rank(&model, budget)? {
                    HpOutcome::Ranked(hp) => Some(hp.rank),
                    HpOutcome::NonIsolated { .. } => None,
                };
                (Some(hh), hp)
            } else {
                (None, None)
            };
            (
                json!({"isolated": true, "data": milnor_json(md, reg.ring())}),
                hh.map(|h| hh_json(&h, reg.ring())).unwrap_or(Value::Null),
                json!(hp),
            )
        }
        MilnorOutcome::NonIsolated { locus_dimension } => {
            let table = truncated_koszul_homology(reg.w(), bound)?;
            (
                json!({
                    "isolated": false,
                    "locus_dimension": dim_json(locus_dimension),
                    "truncated_koszul": koszul_json(&table),
                }),
                Value::Null,
                Value::Null,
            )
        }
    };

    let json = json!({
        "command": "report",
        "input_hash": hash,
        "model": model.to_json(),
        "regular_sequence": {
            "ok": regseq.ok,
            "dims": regseq.dims.iter().map(dim_json).collect::<Vec<_>>(),
            "first_failure": regseq.first_failure,
        },
        "regularized": {
            "variables": reg.ring().vars(),
            "w": reg.w().to_string(),
        },
        "critical_values": cv.values.to_json(),
        "relative_critical_values": rel.values.to_json(),
        "cross_check": check,
        "milnor": milnor_value,
        "hh": hh_value,
        "hp": hp_value,
        "timing_ms": start.elapsed().as_millis() as u64,
    });
    let summary = format!(
        "cross-check {check:?}; critical values {}",
        values_short(&cv.values)
    );
    // domain conditions are embedded in the report rather than signalled
    Ok(Outcome {
        json,
        summary,
        exit: 0,
    })
}

// ---------------------------------------------------------------------------
// input helpers
// ---------------------------------------------------------------------------

fn read_file(path: &str) -> Result<(String, String), Error> {
    let src = std::fs::read_to_string(path)
        .map_err(|e| Error::Invalid(format!("cannot read {path}: {e}")))?;
    let mut hasher = DefaultHasher::new();
    src.hash(&mut hasher);
    Ok((src, format!("{:016x}", hasher.finish())))
}

fn read_model(path: &str) -> Result<(LgModel, String), Error> {
    let (src, hash) = read_file(path)?;
    Ok((LgModel::from_json(&src)?, hash))
}

fn read_mf(path: &str, ring: Option<&str>) -> Result<MatrixFactorization, Error> {
    let (src, _) = read_file(path)?;
    let ring = match ring {
        Some(spec) => Some(make_ring(spec, "grevlex")?),
        None => None,
    };
    MatrixFactorization::from_json(&src, ring.as_ref())
}

fn make_ring(spec: &str, order: &str) -> Result<PolyRing, Error> {
    let vars: Vec<String> = spec
        .split(',')
        .map(|s| s.trim().to_string())
        .filter(|s| !s.is_empty())
        .collect();
    let ord = match order {
        "lex" => MonomialOrder::Lex,
        "grevlex" => MonomialOrder::GrevLex,
        other => {
            return Err(Error::Invalid(format!(
                "unknown order `{other}` (use grevlex or lex)"
            )))
        }
    };
    PolyRing::new(vars, ord)
}

/// Identifiers of a polynomial source, in order of first appearance.
fn scan_identifiers(src: &str) -> Vec<String> {
    let bytes = src.as_bytes();
    let mut out: Vec<String> = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        if bytes[i].is_ascii_alphabetic() {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            let name = std::str::from_utf8(&bytes[start..i]).unwrap().to_string();
            if !out.contains(&name) {
                out.push(name);
            }
        } else {
            i += 1;
        }
    }
    out
}

fn parse_poly_input(input: &PolyInput) -> Result<Polynomial, Error> {
    let ring = match &input.ring {
        Some(spec) => make_ring(spec, &input.order)?,
        None => {
            let vars = scan_identifiers(&input.poly);
            let vars = if vars.is_empty() {
                vec!["x".to_string()]
            } else {
                vars
            };
            let ord = match input.order.as_str() {
                "lex" => MonomialOrder::Lex,
                _ => MonomialOrder::GrevLex,
            };
            PolyRing::new(vars, ord)?
        }
    };
    ring.parse(&input.poly)
}

/// Module file `{"variables", "potential", "presentation"}`.
fn read_module_file(path: &str) -> Result<(PolyRing, Polynomial, PMat, String), Error> {
    #[derive(serde::Deserialize)]
    struct Raw {
        variables: Vec<String>,
        potential: String,
        presentation: Vec<Vec<String>>,
    }
    let (src, hash) = read_file(path)?;
    let raw: Raw =
        serde_json::from_str(&src).map_err(|e| Error::Invalid(format!("module JSON: {e}")))?;
    let ring = PolyRing::new(raw.variables, MonomialOrder::GrevLex)?;
    let w = ring.parse(&raw.potential)?;
    let entries = raw
        .presentation
        .iter()
        .map(|row| row.iter().map(|s| ring.parse(s)).collect::<Result<Vec<_>, _>>())
        .collect::<Result<Vec<_>, _>>()?;
    let pres = PMat::new(ring.clone(), entries)?;
    Ok((ring, w, pres, hash))
}

/// Module file `{"variables", "relations", "presentation"}`.
fn read_relations_file(path: &str) -> Result<(PolyRing, Vec<Polynomial>, PMat, String), Error> {
    #[derive(serde::Deserialize)]
    struct Raw {
        variables: Vec<String>,
        relations: Vec<String>,
        presentation: Vec<Vec<String>>,
    }
    let (src, hash) = read_file(path)?;
    let raw: Raw =
        serde_json::from_str(&src).map_err(|e| Error::Invalid(format!("module JSON: {e}")))?;
    let ring = PolyRing::new(raw.variables, MonomialOrder::GrevLex)?;
    let relations = raw
        .relations
        .iter()
        .map(|s| ring.parse(s))
        .collect::<Result<Vec<_>, _>>()?;
    let entries = raw
        .presentation
        .iter()
        .map(|row| row.iter().map(|s| ring.parse(s)).collect::<Result<Vec<_>, _>>())
        .collect::<Result<Vec<_>, _>>()?;
    let pres = PMat::new(ring.clone(), entries)?;
    Ok((ring, relations, pres, hash))
}

// ---------------------------------------------------------------------------
// JSON shaping
// ---------------------------------------------------------------------------

fn dim_json(d: &mfsing::groebner::Dim) -> Value {
    match d {
        mfsing::groebner::Dim::Empty => json!("empty"),
        mfsing::groebner::Dim::Dim(n) => json!(n),
    }
}

fn eliminant_json(e: &Eliminant) -> Value {
    match e {
        Eliminant::Unit => json!("1"),
        Eliminant::Zero => json!("0"),
        Eliminant::Finite(p) => json!(p.to_display_string("t")),
    }
}

fn summarize_values(kind: &str, values: &mfsing::crit::ValueSet) -> String {
    format!("{kind}: {}", values_short(values))
}

fn values_short(values: &mfsing::crit::ValueSet) -> String {
    match &values.eliminant {
        Eliminant::Zero => "not finite".into(),
        Eliminant::Unit => "none".into(),
        Eliminant::Finite(_) => {
            let mut parts: Vec<String> = values
                .rational_values
                .iter()
                .map(|r| r.to_string())
                .collect();
            for f in &values.nonrational_factors {
                parts.push(format!("roots of {}", f.poly.to_display_string("t")));
            }
            format!("{{{}}}", parts.join(", "))
        }
    }
}

fn milnor_json(md: &MilnorData, ring: &PolyRing) -> Value {
    json!({
        "mu_total": md.mu_total,
        "basis": md.basis.iter().map(|m| {
            ring.monomial(m.clone(), mfsing::poly::rat_int(1)).to_string()
        }).collect::<Vec<_>>(),
        "charpoly": md.charpoly.to_display_string("t"),
        "per_value": per_value_json(md),
        "nonrational": md.nonrational.iter().map(|f| json!({
            "factor": f.poly.to_display_string("t"),
            "multiplicity": f.multiplicity,
        })).collect::<Vec<_>>(),
    })
}

fn per_value_json(md: &MilnorData) -> Value {
    let mut entries: Vec<Value> = md
        .per_value
        .iter()
        .map(|(c, m)| json!({"value": c.to_string(), "mu": m}))
        .collect();
    for f in &md.nonrational {
        entries.push(json!({
            "factor": f.poly.to_display_string("t"),
            "mu_per_root": f.multiplicity,
        }));
    }
    json!(entries)
}

fn koszul_json(table: &KoszulTable) -> Value {
    json!({
        "bound": table.bound,
        "shift": table.shift,
        "nothing_certified": table.nothing_certified,
        "rows": table.rows.iter().map(|r| json!({
            "degree": r.homological_degree,
            "window_dim": r.window_dim,
            "certified": r.certified,
        })).collect::<Vec<_>>(),
    })
}

fn hh_json(report: &HhReport, ring: &PolyRing) -> Value {
    json!({
        "regular_case": report.regular_case,
        "parity": report.parity,
        "concentrated_degree": report.concentrated_degree,
        "total_dim": report.total_dim,
        "per_value": report.milnor.as_ref().map(per_value_json),
        "milnor": report.milnor.as_ref().map(|m| milnor_json(m, ring)),
        "truncated_koszul": report.truncated.as_ref().map(koszul_json),
    })
}

fn pmat_json(m: &PMat) -> Value {
    json!((0..m.rows)
        .map(|i| (0..m.cols).map(|j| m.at(i, j).to_string()).collect::<Vec<_>>())
        .collect::<Vec<_>>())
}
