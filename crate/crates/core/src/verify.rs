//! Exhaustive cross-checks of the counting identities.
//!
//! Each check enumerates the relevant objects for one grid shape, computes
//! the quantity the identity predicts in closed form, and reports both sides
//! plus a pass flag. Checks never assume the identity they test: sums are
//! accumulated object by object, rotation orbits are collected explicitly,
//! and the first violating object is recorded as a counterexample.
//!
//! The six checks:
//!
//! * `theorem1`: sum of anchored path weights equals `C_gen(m, n)`.
//! * `theorem2`: sum of necklace weights equals `C_gen(m, n)`.
//! * `theorem3`: number of marked necklaces equals `C_gen(m, n)`, and each
//!   necklace contributes exactly its weight in marks.
//! * `lemma`: for every Dyck word, the number of cyclic shifts landing on a
//!   Dyck word equals the anchor count.
//! * `orbit`: rotation orbit sizes of all necklaces sum to
//!   `binomial(m + n, n)`, with each orbit counted by explicit rotation.
//! * `qcat`: the q-analogue divides exactly and evaluates to `C_gen(m, n)`
//!   at `q = 1`.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactmath::{binomial, c_gen, q_catalan_normalized, GridShape};
use crate::necklaces::enumerate_necklaces;
use crate::paths::{dyck_rotation_shifts, enumerate_dyck};
use crate::{Int, Rational};

/// Identifier of one verification check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CheckId {
    Theorem1,
    Theorem2,
    Theorem3,
    Lemma,
    Orbit,
    QCat,
}

impl CheckId {
    pub const ALL: [CheckId; 6] = [
        CheckId::Theorem1,
        CheckId::Theorem2,
        CheckId::Theorem3,
        CheckId::Lemma,
        CheckId::Orbit,
        CheckId::QCat,
    ];

    pub fn label(self) -> &'static str {
        match self {
            CheckId::Theorem1 => "theorem1",
            CheckId::Theorem2 => "theorem2",
            CheckId::Theorem3 => "theorem3",
            CheckId::Lemma => "lemma",
            CheckId::Orbit => "orbit",
            CheckId::QCat => "qcat",
        }
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for CheckId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "theorem1" | "1" => Ok(CheckId::Theorem1),
            "theorem2" | "2" => Ok(CheckId::Theorem2),
            "theorem3" | "3" => Ok(CheckId::Theorem3),
            "lemma" => Ok(CheckId::Lemma),
            "orbit" => Ok(CheckId::Orbit),
            "qcat" => Ok(CheckId::QCat),
            other => Err(Error::UnknownCheck(other.to_string())),
        }
    }
}

/// Either side of an identity: an integer or a rational. Comparison promotes
/// integers, so `Int(3)` equals `Ratio(3/1)`.
#[derive(Debug, Clone)]
pub enum ExactValue {
    Int(Int),
    Ratio(Rational),
}

impl ExactValue {
    fn as_ratio(&self) -> Rational {
        match self {
            ExactValue::Int(i) => Rational::from_integer(i.clone()),
            ExactValue::Ratio(r) => r.clone(),
        }
    }
}

impl PartialEq for ExactValue {
    fn eq(&self, other: &Self) -> bool {
        self.as_ratio() == other.as_ratio()
    }
}

impl Eq for ExactValue {}

impl fmt::Display for ExactValue {
    /// Integers in decimal; rationals as `p/q` with an integral value
    /// printing as a plain integer.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExactValue::Int(i) => write!(f, "{i}"),
            ExactValue::Ratio(r) => write!(f, "{r}"),
        }
    }
}

impl From<Int> for ExactValue {
    fn from(i: Int) -> Self {
        ExactValue::Int(i)
    }
}

impl From<Rational> for ExactValue {
    fn from(r: Rational) -> Self {
        ExactValue::Ratio(r)
    }
}

/// Outcome of one check on one shape.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremReport {
    pub shape: GridShape,
    pub check: CheckId,
    pub expected: ExactValue,
    pub observed: ExactValue,
    pub pass: bool,
    pub enumerated_count: u64,
    pub elapsed: Duration,
    pub counterexample: Option<String>,
}

#[derive(Serialize)]
struct ReportRow<'a> {
    m: String,
    n: String,
    check: &'a str,
    expected: String,
    observed: String,
    pass: bool,
    count: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    elapsed_ms: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    counterexample: Option<&'a str>,
}

impl TheoremReport {
    fn finish(
        shape: GridShape,
        check: CheckId,
        expected: ExactValue,
        observed: ExactValue,
        enumerated_count: u64,
        counterexample: Option<String>,
        start: Instant,
    ) -> TheoremReport {
        let pass = expected == observed && counterexample.is_none();
        TheoremReport {
            shape,
            check,
            expected,
            observed,
            pass,
            enumerated_count,
            elapsed: start.elapsed(),
            counterexample,
        }
    }

    /// One JSON object, no trailing newline. All numeric values are decimal
    /// strings so consumers never face precision limits; `pass` stays a
    /// boolean. Timing is opt-in to keep default output byte-reproducible.
    pub fn to_json(&self, include_timing: bool) -> String {
        let row = ReportRow {
            m: self.shape.m().to_string(),
            n: self.shape.n().to_string(),
            check: self.check.label(),
            expected: self.expected.to_string(),
            observed: self.observed.to_string(),
            pass: self.pass,
            count: self.enumerated_count.to_string(),
            elapsed_ms: include_timing.then(|| self.elapsed.as_millis().to_string()),
            counterexample: self.counterexample.as_deref(),
        };
        serde_json::to_string(&row).expect("report rows serialize")
    }
}

/// Sum of anchored weights over all Dyck paths versus `C_gen`.
pub fn check_theorem1(shape: GridShape) -> Result<TheoremReport> {
    let start = Instant::now();
    let expected = c_gen::<Int>(shape)?;
    let mut sum = Rational::from_integer(Int::from(0u8));
    let mut count = 0u64;
    for path in enumerate_dyck(shape) {
        sum += path.anchored_weight();
        count += 1;
    }
    Ok(TheoremReport::finish(
        shape,
        CheckId::Theorem1,
        expected.into(),
        sum.into(),
        count,
        None,
        start,
    ))
}

/// Sum of necklace weights versus `C_gen`.
pub fn check_theorem2(shape: GridShape) -> Result<TheoremReport> {
    let start = Instant::now();
    let expected = c_gen::<Int>(shape)?;
    let mut sum = Int::from(0u8);
    let mut count = 0u64;
    for necklace in enumerate_necklaces(shape) {
        sum += necklace.weight()?;
        count += 1;
    }
    Ok(TheoremReport::finish(
        shape,
        CheckId::Theorem2,
        expected.into(),
        sum.into(),
        count,
        None,
        start,
    ))
}

/// Count of marked necklaces versus `C_gen`, with the per-necklace mark
/// count checked against the necklace weight.
pub fn check_theorem3(shape: GridShape) -> Result<TheoremReport> {
    let start = Instant::now();
    let expected = c_gen::<Int>(shape)?;
    let mut marks = Int::from(0u8);
    let mut count = 0u64;
    let mut counterexample = None;
    for necklace in enumerate_necklaces(shape) {
        let block_marks = necklace.distinguishable_blocks().len() as u64;
        if counterexample.is_none() && Int::from(block_marks) != necklace.weight()? {
            counterexample = Some(necklace.canonical().to_string());
        }
        marks += Int::from(block_marks);
        count += block_marks;
    }
    Ok(TheoremReport::finish(
        shape,
        CheckId::Theorem3,
        expected.into(),
        marks.into(),
        count,
        counterexample,
        start,
    ))
}

/// For every Dyck word, the number of cyclic shifts that land on a Dyck word
/// must equal the anchor count. Observed is the number of conforming paths,
/// expected the number of paths.
pub fn check_lemma(shape: GridShape) -> Result<TheoremReport> {
    let start = Instant::now();
    let mut count = 0u64;
    let mut conforming = 0u64;
    let mut counterexample = None;
    for path in enumerate_dyck(shape) {
        count += 1;
        let shifts = dyck_rotation_shifts(path.word(), shape)?;
        if shifts.len() as u64 == path.anchor_count() {
            conforming += 1;
        } else if counterexample.is_none() {
            counterexample = Some(path.word().to_string());
        }
    }
    Ok(TheoremReport::finish(
        shape,
        CheckId::Lemma,
        Int::from(count).into(),
        Int::from(conforming).into(),
        count,
        counterexample,
        start,
    ))
}

/// Rotation orbit sizes summed over all necklaces versus
/// `binomial(m + n, n)`. Each orbit is counted by materializing every
/// rotation and deduplicating, then compared against the stored period.
pub fn check_orbits(shape: GridShape) -> Result<TheoremReport> {
    let start = Instant::now();
    let expected = binomial::<Int>(shape.total(), shape.n())?;
    let mut sum = Int::from(0u8);
    let mut count = 0u64;
    let mut counterexample = None;
    for necklace in enumerate_necklaces(shape) {
        let word = necklace.canonical();
        let mut rotations = (0..word.len())
            .map(|d| word.rotate(d))
            .collect::<Result<Vec<_>>>()?;
        rotations.sort();
        rotations.dedup();
        if counterexample.is_none() && rotations.len() != necklace.period() {
            counterexample = Some(word.to_string());
        }
        sum += Int::from(rotations.len() as u64);
        count += 1;
    }
    Ok(TheoremReport::finish(
        shape,
        CheckId::Orbit,
        expected.into(),
        sum.into(),
        count,
        counterexample,
        start,
    ))
}

/// The q-analogue evaluated at `q = 1` versus `C_gen`. The polynomial
/// construction itself errors if any division is inexact, which this check
/// propagates.
pub fn check_qcat(shape: GridShape) -> Result<TheoremReport> {
    let start = Instant::now();
    let expected = c_gen::<Int>(shape)?;
    let poly = q_catalan_normalized::<Int>(shape)?;
    let observed = poly.eval_one();
    Ok(TheoremReport::finish(
        shape,
        CheckId::QCat,
        expected.into(),
        observed.into(),
        0,
        None,
        start,
    ))
}

/// Runs one check on one shape.
pub fn run_check(shape: GridShape, check: CheckId) -> Result<TheoremReport> {
    match check {
        CheckId::Theorem1 => check_theorem1(shape),
        CheckId::Theorem2 => check_theorem2(shape),
        CheckId::Theorem3 => check_theorem3(shape),
        CheckId::Lemma => check_lemma(shape),
        CheckId::Orbit => check_orbits(shape),
        CheckId::QCat => check_qcat(shape),
    }
}

/// All shapes with `m, n >= 1` and `m + n <= max_sum`, ordered by
/// `(m + n, m)`.
pub fn shapes_up_to(max_sum: u64) -> Vec<GridShape> {
    let mut shapes = Vec::new();
    for total in 2..=max_sum {
        for m in 1..total {
            shapes.push(GridShape::new(m, total - m).expect("m, n >= 1"));
        }
    }
    shapes
}

/// A full sweep: every requested check on every shape up to the size bound.
#[derive(Debug, Clone)]
pub struct VerificationRun {
    pub max_sum: u64,
    pub checks: Vec<CheckId>,
    pub reports: Vec<TheoremReport>,
    pub all_pass: bool,
}

/// Runs `checks` on every shape with `m + n <= max_sum` (shapes ordered by
/// `(m + n, m)`, checks in the order given). `max_sum` below 2 admits no
/// shape and is rejected.
pub fn run_all(max_sum: u64, checks: &[CheckId]) -> Result<VerificationRun> {
    if max_sum < 2 {
        return Err(Error::VerifyRange { max_sum });
    }
    let mut reports = Vec::new();
    for shape in shapes_up_to(max_sum) {
        for &check in checks {
            reports.push(run_check(shape, check)?);
        }
    }
    let all_pass = reports.iter().all(|r| r.pass);
    Ok(VerificationRun {
        max_sum,
        checks: checks.to_vec(),
        reports,
        all_pass,
    })
}
