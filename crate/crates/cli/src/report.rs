//! Flat `key=value` rendering of pipeline reports.

use std::fmt::Write as _;

use circforge_core::transforms::{CodeParams, PipelineReport};

/// `x` with 12 significant digits, trailing zeros trimmed.
pub fn format_real(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return if x == 0.0 { "0".to_string() } else { x.to_string() };
    }
    let exp = x.abs().log10().floor() as i32;
    if (-5..12).contains(&exp) {
        let decimals = (11 - exp).max(0) as usize;
        let s = format!("{x:.decimals$}");
        if s.contains('.') {
            s.trim_end_matches('0').trim_end_matches('.').to_string()
        } else {
            s
        }
    } else {
        format!("{x:.11e}")
    }
}

fn params(out: &mut String, prefix: &str, p: &CodeParams) {
    writeln!(out, "{prefix}.n={}", p.n).unwrap();
    writeln!(out, "{prefix}.k={}", p.k).unwrap();
    writeln!(out, "{prefix}.d={}", p.d).unwrap();
}

fn key(name: &str) -> String {
    name.chars()
        .map(|c| {
            if c.is_ascii_alphanumeric() {
                c.to_ascii_lowercase()
            } else {
                '_'
            }
        })
        .collect::<String>()
        .split('_')
        .filter(|s| !s.is_empty())
        .collect::<Vec<_>>()
        .join("_")
}

pub fn render(report: &PipelineReport) -> String {
    let mut out = String::new();
    writeln!(out, "pipeline={}", report.kind.name()).unwrap();
    writeln!(out, "ell={}", report.kind.ell()).unwrap();
    writeln!(out, "m={}", report.m).unwrap();
    writeln!(out, "input.field={}", report.input_field).unwrap();
    params(&mut out, "input", &report.input);
    writeln!(out, "input.self_dual={}", report.input_self_dual).unwrap();
    writeln!(out, "symmetry.{}={}", key(&report.symmetry.0), report.symmetry.1).unwrap();
    for (name, p) in &report.stages {
        params(&mut out, name, p);
    }
    writeln!(out, "output.field={}", report.output_field).unwrap();
    params(&mut out, "output", &report.output);
    writeln!(out, "output.ideal_2d={}", report.is_ideal_2d).unwrap();
    writeln!(out, "output.cyclic={}", report.is_cyclic).unwrap();
    writeln!(out, "output.index={}", report.index).unwrap();
    writeln!(out, "output.weights_preserved={}", report.weights_preserved).unwrap();
    for (name, ok) in &report.distance_checks {
        writeln!(out, "check.{}={}", key(name), ok).unwrap();
    }
    writeln!(out, "rate={}", format_real(report.rate)).unwrap();
    writeln!(out, "relative_distance={}", format_real(report.relative_distance)).unwrap();
    writeln!(out, "gv_relative_distance={}", format_real(report.gv_relative_distance)).unwrap();
    writeln!(out, "passed={}", report.all_passed()).unwrap();
    out
}
