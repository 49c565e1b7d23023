//! Maps out of quasi-cyclic codes and the pipelines built from them.
//!
//! A length-`l m` quasi-cyclic word is read as `l` consecutive blocks
//! `(c_0 | c_1 | ... | c_{l-1})` of length `m`, block `i` holding the
//! polynomial `c_i(x)`.
//!
//! - [`phi_b`] sends it to `sum_i c_i(x) e_i` over `GF(q^l)` (additive cyclic).
//! - [`psi`] sends it to `sum_i c_i(x) y^i` in `F_q[x, y]/(x^m - 1, y^l - 1)`.
//! - [`flatten`] re-indexes a two-dimensional word along the CRT bijection
//!   `(j, i) -> k` with `k = j mod m`, `k = i mod l`.
//! - [`tilde`], [`hat`] and [`prime`] add the sign and extension-field
//!   symmetries needed for `l = 4`.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::arith;
use crate::bounds;
use crate::codes::{AdditiveCode, LinearCode};
use crate::constructions::{double_circulant, four_circulant, is_self_dual_dc, swap_blocks, twist_blocks};
use crate::error::{Error, Result};
use crate::galois::{ExtensionTower, Field};
use crate::rings::RingElement;

fn block_len(code: &LinearCode, l: usize) -> Result<usize> {
    if l == 0 || !code.n().is_multiple_of(l) {
        return Err(Error::NotDivisible { n: code.n(), by: l });
    }
    Ok(code.n() / l)
}

fn require_qc(code: &LinearCode, l: usize) -> Result<usize> {
    let m = block_len(code, l)?;
    if !code.is_quasi_cyclic(l)? {
        return Err(Error::NotQuasiCyclic(l));
    }
    Ok(m)
}

/// `(c_0, ..., c_{l-1}) -> sum_i c_i e_i` position by position, with `e_i`
/// the power basis of the tower.
pub fn phi_b(code: &LinearCode, tower: &ExtensionTower) -> Result<AdditiveCode> {
    if tower.base() != code.field() {
        return Err(Error::FieldMismatch);
    }
    let l = tower.degree();
    let m = require_qc(code, l)?;
    let gens = code
        .basis()
        .iter()
        .map(|g| {
            (0..m)
                .map(|j| tower.combine(&(0..l).map(|i| g[i * m + j]).collect::<Vec<_>>()))
                .collect::<Result<Vec<u32>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    AdditiveCode::new(tower, m, gens)
}

/// Per-position check behind the distance bound of [`phi_b`]:
/// `l * w(z_j) >= sum_i w(c_{ij})` for every position `j` of `z = phi_b(c)`.
pub fn phi_b_position_bound_holds(word: &[u32], tower: &ExtensionTower) -> bool {
    let l = tower.degree();
    let m = word.len() / l;
    (0..m).all(|j| {
        let coords: Vec<u32> = (0..l).map(|i| word[i * m + j]).collect();
        let z_nonzero = coords.iter().any(|&c| c != 0) as usize;
        let inner = coords.iter().filter(|&&c| c != 0).count();
        l * z_nonzero >= inner
    })
}

/// Generators of an `F_q`-subspace of `F_q[x, y]/(x^m - 1, y^l - 1)`, each
/// an `m x l` array with entry `(j, i)` the coefficient of `x^j y^i`.
#[derive(Clone, Debug)]
pub struct TwoDCode {
    m: usize,
    l: usize,
    /// Arrays flattened row-major (`j l + i`).
    code: LinearCode,
}

impl TwoDCode {
    pub fn new(field: &Field, m: usize, l: usize, arrays: Vec<Vec<u32>>) -> Result<TwoDCode> {
        Ok(TwoDCode {
            m,
            l,
            code: LinearCode::new(field, m * l, arrays)?,
        })
    }

    pub fn field(&self) -> &Field {
        self.code.field()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn l(&self) -> usize {
        self.l
    }

    /// Generator arrays, row-major.
    pub fn generators(&self) -> &[Vec<u32>] {
        self.code.generators()
    }

    /// The subspace as a linear code on row-major arrays.
    pub fn as_linear(&self) -> &LinearCode {
        &self.code
    }

    pub fn entry(array: &[u32], l: usize, j: usize, i: usize) -> u32 {
        array[j * l + i]
    }

    /// Multiplication by `x`: `(j, i) -> (j + 1 mod m, i)`.
    pub fn times_x(&self, array: &[u32]) -> Vec<u32> {
        crate::codes::shift(array, self.l as i64)
    }

    /// Multiplication by `y`: `(j, i) -> (j, i + 1 mod l)`.
    pub fn times_y(&self, array: &[u32]) -> Vec<u32> {
        array
            .chunks(self.l)
            .flat_map(|row| crate::codes::shift(row, 1))
            .collect()
    }

    /// Closed under multiplication by `x` and by `y`, i.e. an ideal.
    pub fn is_ideal(&self) -> bool {
        self.code
            .basis()
            .iter()
            .all(|g| self.code.contains(&self.times_x(g)) && self.code.contains(&self.times_y(g)))
    }
}

/// `(c_0(x), ..., c_{l-1}(x)) -> sum_i c_i(x) y^i`; entry `(j, i)` is
/// coordinate `i m + j` of the word.
pub fn psi(code: &LinearCode, l: usize) -> Result<TwoDCode> {
    let m = block_len(code, l)?;
    let arrays = code.generators().iter().map(|g| psi_word(g, m, l)).collect();
    TwoDCode::new(code.field(), m, l, arrays)
}

/// [`psi`] on a single word.
pub fn psi_word(word: &[u32], m: usize, l: usize) -> Vec<u32> {
    let mut out = vec![0; m * l];
    for i in 0..l {
        for j in 0..m {
            out[j * l + i] = word[i * m + j];
        }
    }
    out
}

pub fn is_ideal_2d(code: &TwoDCode) -> bool {
    code.is_ideal()
}

/// CRT bijection `(j, i) -> k` on `Z_m x Z_l`, `gcd(m, l) = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexMap {
    m: usize,
    l: usize,
    table: Vec<usize>,
}

impl IndexMap {
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn get(&self, j: usize, i: usize) -> usize {
        self.table[(j % self.m) * self.l + i % self.l]
    }
}

pub fn crt_map(m: usize, l: usize) -> Result<IndexMap> {
    if m == 0 || l == 0 || arith::gcd(m as u64, l as u64) != 1 {
        return Err(Error::NotCoprime {
            a: m as u64,
            b: l as u64,
        });
    }
    let n = m * l;
    let mut table = vec![0; n];
    for k in 0..n {
        table[(k % m) * l + k % l] = k;
    }
    Ok(IndexMap { m, l, table })
}

/// Sends entry `(j, i)` to position `map(j, i)` of a length-`m l` word.
pub fn flatten(code: &TwoDCode, map: &IndexMap) -> Result<LinearCode> {
    if (code.m, code.l) != (map.m, map.l) {
        return Err(Error::LengthMismatch {
            expected: map.m * map.l,
            found: code.m * code.l,
        });
    }
    let rows = code.generators().iter().map(|a| flatten_word(a, map)).collect();
    LinearCode::new(code.field(), code.m * code.l, rows)
}

pub fn flatten_word(array: &[u32], map: &IndexMap) -> Vec<u32> {
    let mut out = vec![0; map.m * map.l];
    for j in 0..map.m {
        for i in 0..map.l {
            out[map.get(j, i)] = array[j * map.l + i];
        }
    }
    out
}

fn sign_duplicate(code: &LinearCode) -> Result<LinearCode> {
    let m = require_qc(code, 2)?;
    let f = code.field();
    let rows = code
        .generators()
        .iter()
        .map(|g| {
            let mut row = g.clone();
            row.extend(g.iter().map(|&c| f.neg(c)));
            row
        })
        .collect();
    LinearCode::new(f, 4 * m, rows)
}

/// `{(c_0, c_1, -c_0, -c_1)}` for a 2-quasi-cyclic code.
pub fn tilde(code: &LinearCode) -> Result<LinearCode> {
    sign_duplicate(code)
}

/// `{(d_0, d_1, -d_0, -d_1)}` for a 2-quasi-cyclic code over `GF(q^2)`.
pub fn prime(code: &LinearCode) -> Result<LinearCode> {
    sign_duplicate(code)
}

fn check_hat_inputs(code: &LinearCode, tower: &ExtensionTower) -> Result<usize> {
    if tower.degree() != 2 {
        return Err(Error::Precondition(format!(
            "hat needs a quadratic extension, got degree {}",
            tower.degree()
        )));
    }
    if tower.base() != code.field() {
        return Err(Error::FieldMismatch);
    }
    require_qc(code, 4)
}

fn hat_word(word: &[u32], n: usize, tower: &ExtensionTower) -> Vec<u32> {
    let top = tower.top();
    let alpha = tower.z();
    let (c0, c1, c2, c3) = (&word[..n], &word[n..2 * n], &word[2 * n..3 * n], &word[3 * n..]);
    let lift = |a: &[u32], b: &[u32]| -> Vec<u32> {
        a.iter()
            .zip(b)
            .map(|(&x, &y)| top.add(tower.embed(x), top.mul(alpha, tower.embed(y))))
            .collect::<Vec<_>>()
    };
    let mut out = lift(c0, c1);
    out.extend(lift(c2, c3));
    out
}

/// The set `{(c_0 + alpha c_1, c_2 + alpha c_3)}` as an `F_q`-linear code
/// over `GF(q^2)`.
pub fn hat_image(code: &LinearCode, tower: &ExtensionTower) -> Result<AdditiveCode> {
    let n = check_hat_inputs(code, tower)?;
    let gens = code.basis().iter().map(|g| hat_word(g, n, tower)).collect();
    AdditiveCode::new(tower, 2 * n, gens)
}

/// The `GF(q^2)`-span of [`hat_image`].
pub fn hat(code: &LinearCode, tower: &ExtensionTower) -> Result<LinearCode> {
    let n = check_hat_inputs(code, tower)?;
    let rows = code.basis().iter().map(|g| hat_word(g, n, tower)).collect();
    LinearCode::new(tower.top(), 2 * n, rows)
}

/// The same code over a field containing its own field in its presentation
/// chain; base encodings are kept as they are.
pub fn scalar_extension(code: &LinearCode, target: &Field) -> Result<LinearCode> {
    if !target.contains_subfield(code.field()) {
        return Err(Error::NoSubfieldEmbedding);
    }
    LinearCode::new(target, code.n(), code.generators().to_vec())
}

/// `[n, k, d]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CodeParams {
    pub n: usize,
    pub k: usize,
    pub d: usize,
}

impl CodeParams {
    pub fn measure(code: &LinearCode, budget: u128) -> Result<CodeParams> {
        Ok(CodeParams {
            n: code.n(),
            k: code.k(),
            d: code.min_distance(budget)?,
        })
    }

    pub fn rate(&self) -> f64 {
        self.k as f64 / self.n as f64
    }

    pub fn relative_distance(&self) -> f64 {
        self.d as f64 / self.n as f64
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PipelineKind {
    /// Double circulant, `l = 2`.
    Ell2,
    /// Double circulant with sign duplication, `l = 4`, `-1` a square.
    P1Mod4,
    /// Four-circulant through `GF(q^2)`, `l = 4`.
    P3Mod4,
}

impl PipelineKind {
    pub fn name(&self) -> &'static str {
        match self {
            PipelineKind::Ell2 => "ell2",
            PipelineKind::P1Mod4 => "p1mod4",
            PipelineKind::P3Mod4 => "p3mod4",
        }
    }

    pub fn ell(&self) -> usize {
        match self {
            PipelineKind::Ell2 => 2,
            _ => 4,
        }
    }
}

/// Outcome of a pipeline run. Every boolean is a measured predicate.
#[derive(Clone, Debug)]
pub struct PipelineReport {
    pub kind: PipelineKind,
    pub m: usize,
    pub input_field: Field,
    pub output_field: Field,
    pub input: CodeParams,
    pub input_self_dual: bool,
    /// The block symmetry the ideal property rests on, and whether the code
    /// handed to `psi` (or the `hat` code) has it.
    pub symmetry: (String, bool),
    /// Intermediate codes in pipeline order (`tilde`, `hat`, `prime`).
    pub stages: Vec<(String, CodeParams)>,
    pub output: CodeParams,
    pub is_ideal_2d: bool,
    pub is_cyclic: bool,
    pub index: usize,
    /// The output weight distribution equals that of the code fed to `psi`.
    pub weights_preserved: bool,
    /// Named distance relations with their outcome.
    pub distance_checks: Vec<(String, bool)>,
    pub rate: f64,
    pub relative_distance: f64,
    /// `H_Q^{-1}(1 - r)` for the output alphabet `Q` and rate `r`.
    pub gv_relative_distance: f64,
    pub output_code: LinearCode,
}

impl PipelineReport {
    /// The ideal and cyclicity assertions hold.
    pub fn theorem_holds(&self) -> bool {
        self.is_ideal_2d && self.is_cyclic
    }

    /// Every assertion and distance check passed.
    pub fn all_passed(&self) -> bool {
        self.theorem_holds() && self.weights_preserved && self.distance_checks.iter().all(|(_, ok)| *ok)
    }

    /// Turns a failed assertion into [`Error::TheoremViolation`].
    pub fn into_verified(self) -> Result<PipelineReport> {
        if !self.is_ideal_2d {
            return Err(Error::TheoremViolation(format!(
                "{}: psi image is not an ideal ({} = {})",
                self.kind.name(),
                self.symmetry.0,
                self.symmetry.1
            )));
        }
        if !self.is_cyclic {
            return Err(Error::TheoremViolation(format!(
                "{}: flattened code is not cyclic",
                self.kind.name()
            )));
        }
        if let Some((name, _)) = self.distance_checks.iter().find(|(_, ok)| !ok) {
            return Err(Error::TheoremViolation(format!("{}: {name} fails", self.kind.name())));
        }
        if !self.weights_preserved {
            return Err(Error::TheoremViolation(format!(
                "{}: weight distribution changed",
                self.kind.name()
            )));
        }
        Ok(self)
    }
}

fn require_odd(m: usize) -> Result<()> {
    if m.is_multiple_of(2) {
        return Err(Error::Precondition(format!("co-index m = {m} must be odd")));
    }
    Ok(())
}

struct Tail {
    output: LinearCode,
    is_ideal: bool,
    weights_preserved: bool,
    out_params: CodeParams,
}

/// `psi -> ideal check -> CRT flatten`, shared by all pipelines. `source`
/// is the quasi-cyclic code handed to `psi`.
fn flatten_tail(source: &LinearCode, l: usize, budget: u128) -> Result<Tail> {
    let two_d = psi(source, l)?;
    let is_ideal = two_d.is_ideal();
    let map = crt_map(two_d.m(), l)?;
    let output = flatten(&two_d, &map)?;
    let weights_preserved = source.weight_distribution(budget)? == output.weight_distribution(budget)?;
    let out_params = CodeParams::measure(&output, budget)?;
    Ok(Tail {
        output,
        is_ideal,
        weights_preserved,
        out_params,
    })
}

struct Head {
    kind: PipelineKind,
    m: usize,
    input_field: Field,
    input: CodeParams,
    input_self_dual: bool,
    symmetry: (String, bool),
    stages: Vec<(String, CodeParams)>,
    distance_checks: Vec<(String, bool)>,
}

fn finish(head: Head, tail: Tail) -> Result<PipelineReport> {
    let output_field = tail.output.field().clone();
    let rate = tail.out_params.rate();
    let gv = bounds::entropy_inv(output_field.order() as u64, 1.0 - rate, bounds::DEFAULT_TOLERANCE)?;
    Ok(PipelineReport {
        kind: head.kind,
        m: head.m,
        input_field: head.input_field,
        output_field,
        input: head.input,
        input_self_dual: head.input_self_dual,
        symmetry: head.symmetry,
        stages: head.stages,
        output: tail.out_params,
        is_ideal_2d: tail.is_ideal,
        is_cyclic: tail.output.is_cyclic(),
        index: tail.output.index(),
        weights_preserved: tail.weights_preserved,
        distance_checks: head.distance_checks,
        rate,
        relative_distance: tail.out_params.relative_distance(),
        gv_relative_distance: gv,
        output_code: tail.output,
    })
}

fn require_dcsd(a: &RingElement) -> Result<()> {
    if !is_self_dual_dc(a) {
        return Err(Error::Precondition(String::from(
            "a(x) a(1/x) != -1: double circulant is not self-dual",
        )));
    }
    Ok(())
}

/// Runs the `l = 2` pipeline and reports every measured predicate, without
/// failing on a violated assertion.
pub fn audit_ell2(a: &RingElement, budget: u128) -> Result<PipelineReport> {
    let m = a.m();
    require_odd(m)?;
    require_dcsd(a)?;
    let code = double_circulant(a);
    let input = CodeParams::measure(&code, budget)?;
    let tail = flatten_tail(&code, 2, budget)?;
    let head = Head {
        kind: PipelineKind::Ell2,
        m,
        input_field: a.field().clone(),
        input,
        input_self_dual: code.is_self_dual(),
        symmetry: (
            String::from("swap (c0,c1)->(c1,c0)"),
            code.is_invariant_under(swap_blocks),
        ),
        stages: Vec::new(),
        distance_checks: vec![(String::from("d(output) = d(input)"), tail.out_params.d == input.d)],
    };
    finish(head, tail)
}

/// Self-dual double circulant `(I | A)` of odd co-index `m`, read as a
/// two-dimensional cyclic code with `l = 2` and flattened to a cyclic code
/// of length `2m`. Fails with [`Error::TheoremViolation`] when an assertion
/// does not hold.
pub fn pipeline_ell2(a: &RingElement, budget: u128) -> Result<PipelineReport> {
    audit_ell2(a, budget)?.into_verified()
}

/// Runs the sign-duplication pipeline, reporting without failing on a
/// violated assertion.
pub fn audit_p1mod4(a: &RingElement, budget: u128) -> Result<PipelineReport> {
    let m = a.m();
    require_odd(m)?;
    let f = a.field();
    if !f.is_square(f.minus_one()) {
        return Err(Error::Precondition(format!("-1 is not a square in {f}")));
    }
    require_dcsd(a)?;
    let code = double_circulant(a);
    let input = CodeParams::measure(&code, budget)?;
    let tilded = tilde(&code)?;
    let tp = CodeParams::measure(&tilded, budget)?;
    let tail = flatten_tail(&tilded, 4, budget)?;
    let head = Head {
        kind: PipelineKind::P1Mod4,
        m,
        input_field: f.clone(),
        input,
        input_self_dual: code.is_self_dual(),
        symmetry: (
            String::from("twist (c0,c1)->(-c1,c0)"),
            code.is_invariant_under(|w| twist_blocks(f, w)),
        ),
        stages: vec![(String::from("tilde"), tp)],
        distance_checks: vec![
            (String::from("d(tilde) = 2 d(input)"), tp.d == 2 * input.d),
            (String::from("d(output) = d(tilde)"), tail.out_params.d == tp.d),
        ],
    };
    finish(head, tail)
}

/// Self-dual double circulant over a field where `-1` is a square, sign
/// duplicated to a 4-quasi-cyclic code and flattened to length `4m`.
pub fn pipeline_p1mod4(a: &RingElement, budget: u128) -> Result<PipelineReport> {
    audit_p1mod4(a, budget)?.into_verified()
}

/// Runs the four-circulant pipeline, reporting without failing on a
/// violated assertion.
pub fn audit_p3mod4(a: &RingElement, b: &RingElement, budget: u128) -> Result<PipelineReport> {
    let m = a.m();
    require_odd(m)?;
    let code = four_circulant(a, b)?;
    if !code.is_self_dual() {
        return Err(Error::Precondition(String::from(
            "four-circulant code is not self-dual",
        )));
    }
    let input = CodeParams::measure(&code, budget)?;
    let tower = ExtensionTower::new(code.field(), 2)?;
    let image = hat_image(&code, &tower)?;
    let image_d = image.min_distance(budget)?;
    let hatted = hat(&code, &tower)?;
    let hp = CodeParams::measure(&hatted, budget)?;
    let primed = prime(&hatted)?;
    let pp = CodeParams::measure(&primed, budget)?;
    let tail = flatten_tail(&primed, 4, budget)?;
    let top = tower.top();
    let head = Head {
        kind: PipelineKind::P3Mod4,
        m,
        input_field: a.field().clone(),
        input,
        input_self_dual: true,
        symmetry: (
            String::from("hat twist (d0,d1)->(-d1,d0)"),
            hatted.is_invariant_under(|w| twist_blocks(top, w)),
        ),
        stages: vec![(String::from("hat"), hp), (String::from("prime"), pp)],
        distance_checks: vec![
            (String::from("hat image injective"), image.k_q() == code.k()),
            (String::from("hat image GF(q^2)-linear"), 2 * hp.k == code.k()),
            (String::from("2 d(hat image) >= d(input)"), 2 * image_d >= input.d),
            (String::from("2 d(hat) >= d(input)"), 2 * hp.d >= input.d),
            (String::from("d(prime) = 2 d(hat)"), pp.d == 2 * hp.d),
            (String::from("d(prime) >= d(input)"), pp.d >= input.d),
        ],
    };
    finish(head, tail)
}

/// Self-dual four-circulant over `GF(q)`, lifted to `GF(q^2)` by `hat`,
/// sign duplicated by `prime` and flattened to a cyclic code of length `4m`
/// over `GF(q^2)`.
pub fn pipeline_p3mod4(a: &RingElement, b: &RingElement, budget: u128) -> Result<PipelineReport> {
    audit_p3mod4(a, b, budget)?.into_verified()
}
