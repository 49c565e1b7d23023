use std::fs;
use std::io::Write;
use std::path::Path;

use circforge_core::bounds::BoundQuery;
use circforge_core::constructions::{double_circulant, four_circulant, random_qc, search_dcsd, search_fcsd};
use circforge_core::rings::artin_primes;
use circforge_core::transforms::{audit_ell2, audit_p1mod4, audit_p3mod4, phi_b, phi_b_position_bound_holds};
use circforge_core::{ExtensionTower, Field, LinearCode, Ring, RingElement, DEFAULT_BUDGET};

use crate::codefile::CodeFile;
use crate::report::{format_real, render};
use crate::{distance, CliError, Command, PipelineArg, SearchKind};

pub const BUDGET_VAR: &str = "CIRCFORGE_BUDGET";

/// `--budget`, else `CIRCFORGE_BUDGET`, else the library default.
fn budget(flag: Option<u128>) -> Result<u128, CliError> {
    if let Some(b) = flag {
        return Ok(b);
    }
    match std::env::var(BUDGET_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("{BUDGET_VAR}={v} is not a number"))),
        Err(_) => Ok(DEFAULT_BUDGET),
    }
}

fn io(path: &Path) -> impl FnOnce(std::io::Error) -> CliError + '_ {
    move |source| CliError::Io {
        path: path.to_path_buf(),
        source,
    }
}

fn write_code(path: &Path, code: &LinearCode) -> Result<(), CliError> {
    fs::write(path, CodeFile::from_code(code).serialize()).map_err(io(path))
}

fn join(values: &[u32]) -> String {
    values.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}

fn parse_poly(ring: &Ring, text: &str, name: &str) -> Result<RingElement, CliError> {
    let coeffs = text
        .split(',')
        .map(|t| t.trim().parse::<u32>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| CliError::Usage(format!("--{name} must be comma-separated encodings, got `{text}`")))?;
    Ok(ring.element(coeffs)?)
}

fn put(out: &mut impl Write, line: impl AsRef<str>) -> Result<(), CliError> {
    writeln!(out, "{}", line.as_ref()).map_err(|source| CliError::Io {
        path: "<stdout>".into(),
        source,
    })
}

pub fn run_command(command: &Command, out: &mut impl Write) -> Result<(), CliError> {
    match command {
        Command::Artin { q, limit } => {
            for m in artin_primes(*q, *limit)? {
                put(out, m.to_string())?;
            }
            Ok(())
        }
        Command::Search {
            kind,
            q,
            m,
            budget: b,
            out: dir,
        } => search(*kind, *q, *m, budget(*b)?, dir.as_deref(), out),
        Command::Pipeline {
            kind,
            q,
            m,
            a,
            b,
            budget: bud,
            out: path,
        } => {
            let field = Field::with_order(*q)?;
            let ring = Ring::new(&field, *m)?;
            let a = parse_poly(&ring, a, "a")?;
            let budget = budget(*bud)?;
            let report = match kind {
                PipelineArg::Ell2 => audit_ell2(&a, budget)?,
                PipelineArg::P1mod4 => audit_p1mod4(&a, budget)?,
                PipelineArg::P3mod4 => {
                    let b = b
                        .as_deref()
                        .ok_or_else(|| CliError::Usage("p3mod4 needs --b".to_string()))?;
                    audit_p3mod4(&a, &parse_poly(&ring, b, "b")?, budget)?
                }
            };
            write!(out, "{}", render(&report)).map_err(io(Path::new("<stdout>")))?;
            if let Some(path) = path {
                write_code(path, &report.output_code)?;
            }
            if report.all_passed() {
                Ok(())
            } else {
                Err(CliError::Failed(format!(
                    "{} pipeline: an assertion failed",
                    report.kind.name()
                )))
            }
        }
        Command::Verify {
            file,
            predicate,
            budget: b,
        } => {
            let text = fs::read_to_string(file).map_err(io(file))?;
            let code = CodeFile::parse(&text)?.to_code()?;
            verify(&code, predicate, budget(*b)?, out)
        }
        Command::Bounds { q, ell } => {
            let t = BoundQuery::new(*q, *ell)?.gv_targets()?;
            put(out, format!("delta_qc={}", format_real(t.delta_qc)))?;
            put(out, format!("delta_add={}", format_real(t.delta_add)))
        }
        Command::SampleQc {
            q,
            m,
            ell,
            count,
            seed,
            budget: b,
        } => sample_qc(*q, *m, *ell, *count, *seed, budget(*b)?, out),
    }
}

fn search(
    kind: SearchKind,
    q: u64,
    m: usize,
    budget: u128,
    dir: Option<&Path>,
    out: &mut impl Write,
) -> Result<(), CliError> {
    let field = Field::with_order(q)?;
    let found: Vec<(String, LinearCode)> = match kind {
        SearchKind::Dcsd => search_dcsd(&field, m, budget)?
            .into_iter()
            .map(|a| (format!("a={}", join(a.coeffs())), double_circulant(&a)))
            .collect(),
        SearchKind::Fcsd => search_fcsd(&field, m, budget)?
            .into_iter()
            .map(|(a, b)| {
                Ok((
                    format!("a={} b={}", join(a.coeffs()), join(b.coeffs())),
                    four_circulant(&a, &b)?,
                ))
            })
            .collect::<Result<_, CliError>>()?,
    };
    let name = match kind {
        SearchKind::Dcsd => "dcsd",
        SearchKind::Fcsd => "fcsd",
    };
    if let Some(dir) = dir {
        fs::create_dir_all(dir).map_err(io(dir))?;
    }
    let mut best: Option<usize> = None;
    for (i, (label, code)) in found.iter().enumerate() {
        let d = distance::min_distance(code, budget)?;
        best = Some(best.map_or(d, |b| b.max(d)));
        put(out, format!("{label} n={} k={} d={d}", code.n(), code.k()))?;
        if let Some(dir) = dir {
            write_code(&dir.join(format!("{name}-q{q}-m{m}-{i}.code")), code)?;
        }
    }
    let best = best.map_or_else(|| "-".to_string(), |d| d.to_string());
    put(out, format!("q={q} m={m} found={} best_d={best}", found.len()))
}

fn verify(code: &LinearCode, predicates: &[String], budget: u128, out: &mut impl Write) -> Result<(), CliError> {
    let mut failed = Vec::new();
    for p in predicates {
        let value = match p.as_str() {
            "cyclic" => Some(code.is_cyclic()),
            "selfdual" => Some(code.is_self_dual()),
            "distance" => {
                let d = distance::min_distance(code, budget)?;
                put(out, format!("distance={d}"))?;
                None
            }
            other => match other.strip_prefix("qc:").map(str::parse::<usize>) {
                Some(Ok(l)) if l >= 1 => Some(code.is_quasi_cyclic(l)?),
                _ => return Err(CliError::Usage(format!("unknown predicate `{other}`"))),
            },
        };
        if let Some(v) = value {
            put(out, format!("{p}={v}"))?;
            if !v {
                failed.push(p.as_str());
            }
        }
    }
    if failed.is_empty() {
        Ok(())
    } else {
        Err(CliError::Failed(format!("predicate false: {}", failed.join(", "))))
    }
}

fn sample_qc(
    q: u64,
    m: usize,
    ell: usize,
    count: u64,
    seed: u64,
    budget: u128,
    out: &mut impl Write,
) -> Result<(), CliError> {
    let field = Field::with_order(q)?;
    let tower = ExtensionTower::new(&field, ell)?;
    let delta_qc = BoundQuery::new(q, ell as u64)?.gv_targets()?.delta_qc;
    let mut failures = 0;
    let mut best = 0.0f64;
    for i in 0..count {
        let s = seed.wrapping_add(i);
        let code = random_qc(&field, m, ell, s)?;
        let image = phi_b(&code, &tower)?;
        let d = distance::min_distance(&code, budget)?;
        let d_phi = distance::additive_min_distance(&image, budget)?;
        let cyclic = image.is_additive_cyclic();
        let size = image.size() == code.size();
        let bound = ell * d_phi >= d && code.basis().iter().all(|g| phi_b_position_bound_holds(g, &tower));
        if !(cyclic && size && bound) {
            failures += 1;
        }
        best = best.max(d as f64 / code.n() as f64);
        put(
            out,
            format!(
                "seed={s} k={} d={d} d_phi={d_phi} additive_cyclic={cyclic} size_preserved={size} bound={bound}",
                code.k()
            ),
        )?;
    }
    put(
        out,
        format!(
            "samples={count} failures={failures} best_relative_distance={} delta_qc={}",
            format_real(best),
            format_real(delta_qc)
        ),
    )?;
    if failures == 0 {
        Ok(())
    } else {
        Err(CliError::Failed(format!("{failures} of {count} samples failed")))
    }
}
