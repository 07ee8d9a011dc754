//! The verification harness: every generating-function identity and bijection
//! property, checked exhaustively at small sizes, plus demonstrations that the
//! known-bad variants of some formulas really disagree with enumeration.
//!
//! ```
//! use catpark::verify::{run, Scope, Status, VerifyConfig};
//!
//! let report = run(&VerifyConfig::new(Scope::FunctionalEquation));
//! assert!(report.passed());
//! assert!(report.identities.iter().all(|r| r.status == Status::Pass));
//! ```

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::bijections::{eta, eta_inv, tau};
use crate::caterpillar::{enumerate_caterpillar_pk, is_tree_pk, luck_tree, theta, theta_inv};
use crate::decomposition::{decompose, fixed_points, recompose};
use crate::enumerate::{binomial, canonical_iter, count_u_pk, fuss_catalan};
use crate::error::{Error, Result};
use crate::gf::{
    functional_equation_mismatch, fuss_catalan_series, gamma_poly_brute, gamma_series_closed,
    h_decompose, h_series, h_vector, luck_convolution, luck_counts, luck_h_combination,
    luck_series_with_exponent, multi_stat_poly_brute, multi_stat_series_closed,
    multi_stat_u_poly_brute, multi_stat_u_series_closed, r_poly_brute, r_series_closed, GammaForm,
    JointCountTensor, LuckSeriesForm, ProductForm,
};
use crate::lattice::{from_lattice_path, to_lattice_path};
use crate::poly::{var_list, MultiPoly};
use crate::sequence::{BoundFamily, ParkingSeq};
use crate::series::TruncatedSeries;
use crate::statistics::{check_statistic_compatibility, u_luck, u_omega};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// A known-bad variant was shown to disagree with enumeration, exactly
    /// as documented.
    Erratum,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Erratum => "erratum",
        })
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Params {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub order: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<u32>,
}

impl Params {
    fn m_n(m: u32, n: usize) -> Self {
        Params {
            m: Some(m),
            n: Some(n),
            ..Default::default()
        }
    }

    fn m_order(m: u32, order: usize) -> Self {
        Params {
            m: Some(m),
            order: Some(order),
            ..Default::default()
        }
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = [
            self.m.map(|v| format!("m={v}")),
            self.k.map(|v| format!("k={v}")),
            self.r.map(|v| format!("r={v}")),
            self.n.map(|v| format!("n={v}")),
            self.order.map(|v| format!("order={v}")),
        ]
        .into_iter()
        .flatten()
        .collect();
        f.write_str(&parts.join(" "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub identity: String,
    pub status: Status,
    pub params: Params,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Value>,
    pub millis: u64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tally {
    pub pass: usize,
    pub fail: usize,
    pub erratum: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub passed: bool,
    pub tally: Tally,
    pub identities: Vec<IdentityReport>,
}

impl VerificationReport {
    fn new(identities: Vec<IdentityReport>) -> Self {
        let mut tally = Tally::default();
        for r in &identities {
            match r.status {
                Status::Pass => tally.pass += 1,
                Status::Fail => tally.fail += 1,
                Status::Erratum => tally.erratum += 1,
            }
        }
        VerificationReport {
            passed: tally.fail == 0,
            tally,
            identities,
        }
    }

    /// True iff nothing failed (errata demonstrations count as success).
    pub fn passed(&self) -> bool {
        self.passed
    }

    pub fn find(&self, identity: &str) -> impl Iterator<Item = &IdentityReport> {
        let identity = identity.to_string();
        self.identities
            .iter()
            .filter(move |r| r.identity == identity)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// One line per identity and a closing tally. Never includes timings.
    pub fn summary(&self) -> String {
        let width = self
            .identities
            .iter()
            .map(|r| r.identity.len())
            .max()
            .unwrap_or(0);
        let mut out = String::new();
        for r in &self.identities {
            out.push_str(&format!(
                "{:<7}  {:<width$}  {}\n",
                r.status.to_string(),
                r.identity,
                r.params
            ));
            if let (Status::Fail | Status::Erratum, Some(c)) = (r.status, &r.counterexample) {
                out.push_str(&format!("         {c}\n"));
            }
        }
        out.push_str(&format!(
            "{} checks: {} pass, {} erratum, {} fail\n",
            self.identities.len(),
            self.tally.pass,
            self.tally.erratum,
            self.tally.fail
        ));
        out
    }
}

/// Groups of checks selectable from the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Scope {
    All,
    Counting,
    FunctionalEquation,
    BoundFamily,
    Exchange,
    LuckSeries,
    Gamma,
    HBasis,
    Product,
    Tensor,
    Eta,
    Decomposition,
    Errata,
}

impl Scope {
    pub const ALL: [Scope; 13] = [
        Scope::All,
        Scope::Counting,
        Scope::FunctionalEquation,
        Scope::BoundFamily,
        Scope::Exchange,
        Scope::LuckSeries,
        Scope::Gamma,
        Scope::HBasis,
        Scope::Product,
        Scope::Tensor,
        Scope::Eta,
        Scope::Decomposition,
        Scope::Errata,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Scope::All => "all",
            Scope::Counting => "counting",
            Scope::FunctionalEquation => "funceq",
            Scope::BoundFamily => "bound-family",
            Scope::Exchange => "exchange",
            Scope::LuckSeries => "luck-series",
            Scope::Gamma => "gamma",
            Scope::HBasis => "h-basis",
            Scope::Product => "product",
            Scope::Tensor => "tensor",
            Scope::Eta => "eta",
            Scope::Decomposition => "decomposition",
            Scope::Errata => "errata",
        }
    }
}

impl FromStr for Scope {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Scope::ALL
            .into_iter()
            .find(|sc| sc.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown scope {s:?}")))
    }
}

/// Deliberate defects used to check that the harness notices them.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mutation {
    /// Adds 1 to the `x^3` coefficient of `B_m(x)`.
    FussCatalanCoefficient,
    /// Builds the luck series with exponent `m + 1`.
    LuckExponent,
    /// Compares enumeration against the variant `Γ` argument assignment.
    GammaArguments,
}

impl Mutation {
    pub const ALL: [Mutation; 3] = [
        Mutation::FussCatalanCoefficient,
        Mutation::LuckExponent,
        Mutation::GammaArguments,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Mutation::FussCatalanCoefficient => "fuss-catalan-coefficient",
            Mutation::LuckExponent => "luck-exponent",
            Mutation::GammaArguments => "gamma-arguments",
        }
    }
}

impl FromStr for Mutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Mutation::ALL
            .into_iter()
            .find(|mu| mu.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown mutation {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    pub scope: Scope,
    /// Replaces each check's default list of `m` values.
    pub m_values: Option<Vec<u32>>,
    /// Replaces each series check's default truncation order.
    pub order: Option<usize>,
    /// Replaces each enumeration check's default largest length.
    pub n_max: Option<usize>,
    pub mutation: Option<Mutation>,
    /// Report every timing as 0 so output is byte-stable.
    pub deterministic: bool,
}

impl VerifyConfig {
    pub fn new(scope: Scope) -> Self {
        VerifyConfig {
            scope,
            m_values: None,
            order: None,
            n_max: None,
            mutation: None,
            deterministic: false,
        }
    }

    fn ms(&self, default: &[u32]) -> Vec<u32> {
        self.m_values.clone().unwrap_or_else(|| default.to_vec())
    }

    fn wants(&self, m: u32) -> bool {
        self.m_values.as_ref().map_or(true, |ms| ms.contains(&m))
    }

    fn n_or(&self, default: usize) -> usize {
        self.n_max.unwrap_or(default)
    }

    fn order_or(&self, default: usize) -> usize {
        self.order.unwrap_or(default)
    }
}

enum Outcome {
    Pass,
    Fail(Value),
    Erratum(Value),
}

fn record(
    identity: &str,
    params: Params,
    deterministic: bool,
    check: impl FnOnce() -> Result<Outcome>,
) -> IdentityReport {
    let start = Instant::now();
    let outcome = check().unwrap_or_else(|e| Outcome::Fail(json!({ "error": e.to_string() })));
    let millis = if deterministic {
        0
    } else {
        start.elapsed().as_millis() as u64
    };
    let (status, counterexample) = match outcome {
        Outcome::Pass => (Status::Pass, None),
        Outcome::Fail(v) => (Status::Fail, Some(v)),
        Outcome::Erratum(v) => (Status::Erratum, Some(v)),
    };
    IdentityReport {
        identity: identity.to_string(),
        status,
        params,
        counterexample,
        millis,
    }
}

fn series_mismatch(expected: &[MultiPoly], found: &TruncatedSeries) -> Outcome {
    match (0..expected.len()).find(|&n| found.coeff(n) != expected[n]) {
        None => Outcome::Pass,
        Some(n) => Outcome::Fail(json!({
            "n": n,
            "enumerated": expected[n].to_string(),
            "closed_form": found.coeff(n).to_string(),
        })),
    }
}

fn seq_fail(p: &ParkingSeq, what: &str) -> Outcome {
    Outcome::Fail(json!({ "seq": p.to_csv(), "violated": what }))
}

type Check<'a> = Box<dyn Fn() -> Vec<IdentityReport> + Send + Sync + 'a>;

/// Runs the selected checks (in parallel, reported in a fixed order).
pub fn run(config: &VerifyConfig) -> VerificationReport {
    let groups = checks(config);
    let results: Vec<Vec<IdentityReport>> = std::thread::scope(|s| {
        let handles: Vec<_> = groups.iter().map(|g| s.spawn(g)).collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("check panicked"))
            .collect()
    });
    VerificationReport::new(results.into_iter().flatten().collect())
}

fn checks(config: &VerifyConfig) -> Vec<Check<'_>> {
    let in_scope = |s: Scope| config.scope == Scope::All || config.scope == s;
    let mut out: Vec<Check<'_>> = Vec::new();
    if in_scope(Scope::Counting) {
        out.push(Box::new(|| counting(config)));
    }
    if in_scope(Scope::FunctionalEquation) {
        out.push(Box::new(|| functional_equation(config)));
    }
    if in_scope(Scope::BoundFamily) {
        out.push(Box::new(|| bound_family(config)));
    }
    if in_scope(Scope::Exchange) {
        out.push(Box::new(|| exchange(config)));
    }
    if in_scope(Scope::LuckSeries) {
        out.push(Box::new(|| luck_series(config)));
    }
    if in_scope(Scope::Gamma) {
        out.push(Box::new(|| gamma(config)));
    }
    if in_scope(Scope::HBasis) {
        out.push(Box::new(|| h_basis(config)));
    }
    if in_scope(Scope::Product) {
        out.push(Box::new(|| product(config)));
    }
    if in_scope(Scope::Tensor) {
        out.push(Box::new(|| tensor(config)));
    }
    if in_scope(Scope::Eta) {
        out.push(Box::new(|| eta_checks(config)));
    }
    if in_scope(Scope::Decomposition) {
        out.push(Box::new(|| decomposition(config)));
    }
    if in_scope(Scope::Errata) {
        out.push(Box::new(|| errata(config)));
    }
    out
}

fn counting(cfg: &VerifyConfig) -> Vec<IdentityReport> {
    let det = cfg.deterministic;
    let mut out = Vec::new();
    for m in cfg.ms(&[1, 2, 3, 4]) {
        let n_max = cfg.n_or(8);
        out.push(record(
            "fuss-catalan-count",
            Params::m_n(m, n_max),
            det,
            || {
                let family = BoundFamily::canonical(m)?;
                for n in 0..=n_max {
                    let count = count_u_pk(n, &family);
                    let closed = fuss_catalan(m, n);
                    let listed = canonical_iter(m, n)?.count();
                    if count != closed || BigInt::from(listed) != BigInt::from(closed.clone()) {
                        return Ok(Outcome::Fail(json!({
                            "n": n,
                            "dynamic_programming": count.to_string(),
                            "fuss_catalan": closed.to_string(),
                            "enumerated": listed,
                        })));
                    }
                }
                Ok(Outcome::Pass)
            },
        ));
        let n_max = cfg.n_or(7);
        out.push(record(
            "caterpillar-count",
            Params::m_n(m, n_max),
            det,
            || {
                for n in 1..=n_max {
                    let iter = enumerate_caterpillar_pk(m, n as u32)?;
                    let tree = iter.tree().clone();
                    let mut listed = 0u64;
                    for s in iter {
                        if !is_tree_pk(&tree, &s)? {
                            return Ok(seq_fail(&s, "tree parking condition"));
                        }
                        listed += 1;
                    }
                    if BigInt::from(listed) != BigInt::from(fuss_catalan(m, n)) {
                        return Ok(Outcome::Fail(json!({ "n": n, "enumerated": listed })));
                    }
                }
                Ok(Outcome::Pass)
            },
        ));
    }
    out
}

fn functional_equation(cfg: &VerifyConfig) -> Vec<IdentityReport> {
    cfg.ms(&[1, 2, 3, 4])
        .into_iter()
        .map(|m| {
            let order = cfg.order_or(12);
            record(
                "fuss-catalan-functional-equation",
                Params::m_order(m, order),
                cfg.deterministic,
                || {
                    let mut b = fuss_catalan_series(m, order);
                    if cfg.mutation == Some(Mutation::FussCatalanCoefficient) && order >= 3 {
                        let mut coeffs = b.coeffs().to_vec();
                        coeffs[3] = &coeffs[3] + &MultiPoly::constant_in(Vec::new(), 1);
                        b = TruncatedSeries::new(Vec::new(), order, coeffs)?;
                    }
                    Ok(match functional_equation_mismatch(&b, m) {
                        None => Outcome::Pass,
                        Some(n) => {
                            Outcome::Fail(json!({ "n": n, "coefficient": b.coeff(n).to_string() }))
                        }
                    })
                },
            )
        })
        .collect()
}

fn bound_family(cfg: &VerifyConfig) -> Vec<IdentityReport> {
    let order = cfg.order_or(7);
    let mut out = Vec::new();
    for m in cfg.ms(&[2, 3]) {
        let b = fuss_catalan_series(m, order);
        for k in 1..=3 {
            for r in 0..m {
                let params = Params {
                    m: Some(m),
                    k: Some(k),
                    r: Some(r),
                    order: Some(order),
                    ..Default::default()
                };
                out.push(record(
                    "bound-family-series",
                    params,
                    cfg.deterministic,
                    || {
                        let family = BoundFamily::new(m, k, r)?;
                        let counted = h_series(&family, order);
                        let power = b.pow(family.series_exponent());
                        Ok(series_mismatch(power.coeffs(), &counted))
                    },
                ));
            }
        }
    }
    out
}

fn exchange(cfg: &VerifyConfig) -> Vec<IdentityReport> {
    let det = cfg.deterministic;
    let mut out = Vec::new();
    for m in cfg.ms(&[1, 2, 3]) {
        let n_max = cfg.n_or(7);
        out.push(record(
            "luck-omega-exchange",
            Params::m_n(m, n_max),
            det,
            || {
                for n in 0..=n_max {
                    for p in canonical_iter(m, n)? {
                        let t = tau(&p, m)?;
                        if tau(&t, m)? != p {
                            return Ok(seq_fail(&p, "tau is an involution"));
                        }
                        if u_luck(&p, m) != u_omega(&t, 1) || u_omega(&p, 1) != u_luck(&t, m) {
                            return Ok(seq_fail(&p, "luck(p) = omega_1(tau(p))"));
                        }
                    }
                }
                Ok(Outcome::Pass)
            },
        ));
        let n_max = cfg.n_or(6);
        out.push(record(
            "statistic-splitting",
            Params::m_n(m, n_max),
            det,
            || {
                let luck =
                    check_statistic_compatibility(|p| u_luck(p, m) as i64, m as usize, m, n_max)?;
                let ones = check_statistic_compatibility(|p| u_omega(p, 1) as i64, 0, m, n_max)?;
                for (name, r) in [("luck", &luck), ("omega_1", &ones)] {
                    if r.constant != Some(1) || !r.is_compatible() {
                        return Ok(Outcome::Fail(json!({ "statistic": name, "report": r })));
                    }
                }
                Ok(Outcome::Pass)
            },
        ));
    }
    out
}

const LUCK_TABLE: [(u32, [&str; 5]); 3] = [
    (
        2,
        [
            "1",
            "q",
            "q^2 + 2*q",
            "q^3 + 4*q^2 + 7*q",
            "q^4 + 6*q^3 + 18*q^2 + 30*q",
        ],
    ),
    (
        3,
        [
            "1",
            "q",
            "q^2 + 3*q",
            "q^3 + 6*q^2 + 15*q",
            "q^4 + 9*q^3 + 39*q^2 + 91*q",
        ],
    ),
    (
        4,
        [
            "1",
            "q",
            "q^2 + 4*q",
            "q^3 + 8*q^2 + 26*q",
            "q^4 + 12*q^3 + 68*q^2 + 204*q",
        ],
    ),
];

fn luck_series(cfg: &VerifyConfig) -> Vec<IdentityReport> {
    let det = cfg.deterministic;
    let mut out = Vec::new();
    for (m, rows) in LUCK_TABLE {
        if !cfg.wants(m) {
            continue;
        }
        out.push(record(
            "luck-polynomial-table",
            Params::m_n(m, 4),
            det,
            || {
                for (n, want) in rows.iter().enumerate() {
                    let got = r_poly_brute(m, n)?.to_string();
                    if got != *want {
                        return Ok(Outcome::Fail(
                            json!({ "n": n, "expected": want, "enumerated": got }),
                        ));
                    }
                }
                Ok(Outcome::Pass)
            },
        ));
    }
    for m in cfg.ms(&[1, 2, 3]) {
        let order = cfg.order_or(8);
        out.push(record(
            "luck-series",
            Params::m_order(m, order),
            det,
            || {
                let e = if cfg.mutation == Some(Mutation::LuckExponent) {
                    m + 1
                } else {
                    m
                };
                let closed = luck_series_with_exponent(var_list(&["q"]), "q", m, order, e)?;
                let brute: Vec<MultiPoly> = (0..=order)
                    .map(|n| r_poly_brute(m, n))
                    .collect::<Result<_>>()?;
                Ok(series_mismatch(&brute, &closed))
            },
        ));
    }
    out
}

fn gamma(cfg: &VerifyConfig) -> Vec<IdentityReport> {
    let det = cfg.deterministic;
    let mut out = Vec::new();
    for m in cfg.ms(&[2, 3]) {
        let order = cfg.order_or(if m <= 2 { 7 } else { 6 });
        out.push(record(
            "gamma-series",
            Params::m_order(m, order),
            det,
            || {
                let form = if cfg.mutation == Some(Mutation::GammaArguments) {
                    GammaForm::Literal
                } else {
                    GammaForm::Corrected
                };
                let closed = gamma_series_closed(m, order, form);
                let brute: Vec<MultiPoly> = (0..=order)
                    .map(|n| gamma_poly_brute(m, n))
                    .collect::<Result<_>>()?;
                Ok(series_mismatch(&brute, &closed))
            },
        ));
    }
    for m in cfg.ms(&[1, 2, 3, 4]) {
        let n_max = cfg.n_or(6);
        out.push(record(
            "gamma-qt-symmetry",
            Params::m_n(m, n_max),
            det,
            || {
                for n in 0..=n_max {
                    let g = gamma_poly_brute(m, n)?.specialize(&[("u", 1), ("v", 1)])?;
                    if !g.is_symmetric() {
                        return Ok(Outcome::Fail(
                            json!({ "n": n, "polynomial": g.to_string() }),
                        ));
                    }
                }
                Ok(Outcome::Pass)
            },
        ));
        let order = cfg.order_or(6);
        out.push(record("gamma-specializes-to-luck", Params::m_order(m, order), det, || {
            let g = gamma_series_closed(m, order, GammaForm::Corrected);
            let r = r_series_closed(m, order, LuckSeriesForm::Corrected);
            for n in 0..=order {
                let s = g.coeff(n).specialize(&[("t", 1), ("u", 1), ("v", 1)])?;
                if s != r.coeff(n) {
                    return Ok(Outcome::Fail(json!({ "n": n, "gamma": s.to_string(), "luck": r.coeff(n).to_string() })));
                }
            }
            Ok(Outcome::Pass)
        }));
    }
    out
}

const GAMMA_H_TABLE: [(u32, [&[i64]; 4]); 3] = [
    (2, [&[1], &[1, 1], &[1, 3, 3], &[1, 5, 12, 12]]),
    (3, [&[1], &[1, 2], &[1, 5, 9], &[1, 8, 30, 52]]),
    (4, [&[1], &[1, 3], &[1, 7, 18], &[1, 11, 56, 136]]),
];

const MULTI_STAT_H_TABLE: [&[i64]; 3] = [&[1, 0], &[1, 2, 0], &[1, 4, 7, 0]];

fn gamma_qt(m: u32, n: usize) -> Result<MultiPoly> {
    gamma_poly_brute(m, n)?.specialize(&[("u", 1), ("v", 1)])
}

fn h_basis(cfg: &VerifyConfig) -> Vec<IdentityReport> {
    let det = cfg.deterministic;
    let mut out = Vec::new();
    for (m, rows) in GAMMA_H_TABLE {
        if !cfg.wants(m) {
            continue;
        }
        out.push(record("gamma-h-table", Params::m_n(m, 4), det, || {
            for (i, row) in rows.iter().enumerate() {
                let got = h_vector(&h_decompose(&gamma_qt(m, i + 1)?)?);
                let want: Vec<BigInt> = row.iter().map(|&c| BigInt::from(c)).collect();
                if got != want {
                    return Ok(Outcome::Fail(json!({
                        "n": i + 1,
                        "expected": row,
                        "found": got.iter().map(ToString::to_string).collect::<Vec<_>>(),
                    })));
                }
            }
            Ok(Outcome::Pass)
        }));
    }
    for m in cfg.ms(&[2, 3, 4]) {
        let n_max = cfg.n_or(6);
        out.push(record("gamma-h-coefficients", Params::m_n(m, n_max), det, || {
            let family = BoundFamily::new(m, 1, 1.min(m - 1))?;
            for n in 1..=n_max {
                let got = h_decompose(&gamma_qt(m, n)?)?;
                for k in 0..n {
                    let want: BigInt = (0..n)
                        .map(|r| {
                            let c = luck_counts(m, n - r - 1)?.get(k).cloned().unwrap_or_default();
                            Ok(BigInt::from(count_u_pk(r, &family)) * c)
                        })
                        .sum::<Result<BigInt>>()?;
                    let have = got.get(&(k as u32)).cloned().unwrap_or_default();
                    if have != want {
                        return Ok(Outcome::Fail(json!({ "n": n, "k": k, "expected": want.to_string(), "found": have.to_string() })));
                    }
                }
            }
            Ok(Outcome::Pass)
        }));
    }
    if cfg.wants(2) {
        out.push(record("multi-stat-h-table", Params::m_n(2, 4), det, || {
            for (i, row) in MULTI_STAT_H_TABLE.iter().enumerate() {
                let n = i + 2;
                let got = h_vector(&h_decompose(&multi_stat_poly_brute(2, n)?)?);
                let want: Vec<BigInt> = row.iter().map(|&c| BigInt::from(c)).collect();
                if got != want {
                    return Ok(Outcome::Fail(json!({
                        "n": n,
                        "expected": row,
                        "found": got.iter().map(ToString::to_string).collect::<Vec<_>>(),
                    })));
                }
            }
            Ok(Outcome::Pass)
        }));
    }
    for m in cfg.ms(&[1, 2, 3]) {
        let n_max = cfg.n_or(if m <= 2 { 5 } else { 4 });
        out.push(record(
            "multi-stat-h-expansion",
            Params::m_n(m, n_max),
            det,
            || {
                for n in 2..=n_max {
                    let p = multi_stat_poly_brute(m, n)?;
                    if let Err(e) = h_decompose(&p) {
                        return Ok(Outcome::Fail(json!({ "n": n, "error": e.to_string() })));
                    }
                }
                Ok(Outcome::Pass)
            },
        ));
        let n_max = cfg.n_or(6);
        out.push(record("luck-convolution", Params::m_n(m, n_max), det, || {
            for t in 2..=m as usize + 1 {
                for n in 0..=n_max {
                    let lhs = luck_convolution(m, n, t)?;
                    let rhs = luck_h_combination(m, n, t)?;
                    if lhs != rhs {
                        return Ok(Outcome::Fail(json!({ "n": n, "variables": t, "convolution": lhs.to_string(), "h_combination": rhs.to_string() })));
                    }
                }
            }
            Ok(Outcome::Pass)
        }));
    }
    out
}

fn product(cfg: &VerifyConfig) -> Vec<IdentityReport> {
    let det = cfg.deterministic;
    let mut out = Vec::new();
    for m in cfg.ms(&[1, 2, 3]) {
        let order = cfg.order_or(match m {
            1 => 6,
            2 => 5,
            _ => 4,
        });
        out.push(record(
            "multi-stat-product",
            Params::m_order(m, order),
            det,
            || {
                let closed = multi_stat_series_closed(m, order, ProductForm::Corrected);
                let brute: Vec<MultiPoly> = (0..=order)
                    .map(|n| multi_stat_poly_brute(m, n))
                    .collect::<Result<_>>()?;
                Ok(series_mismatch(&brute, &closed))
            },
        ));
        out.push(record(
            "multi-stat-u-side-product",
            Params::m_order(m, order),
            det,
            || {
                let closed = multi_stat_u_series_closed(m, order);
                let brute: Vec<MultiPoly> = (0..=order)
                    .map(|n| multi_stat_u_poly_brute(m, n))
                    .collect::<Result<_>>()?;
                Ok(series_mismatch(&brute, &closed))
            },
        ));
    }
    out
}

const JOINT_COUNT_TABLE: [[[u32; 4]; 4]; 4] = [
    [[0, 7, 4, 1], [7, 4, 1, 0], [4, 1, 0, 0], [1, 0, 0, 0]],
    [[7, 4, 1, 0], [4, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 0]],
    [[4, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]],
    [[1, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]],
];

fn tensor(cfg: &VerifyConfig) -> Vec<IdentityReport> {
    let det = cfg.deterministic;
    let mut out = Vec::new();
    if cfg.wants(2) && cfg.n_max.map_or(true, |n| n >= 4) {
        out.push(record("joint-count-table", Params::m_n(2, 4), det, || {
            let t = JointCountTensor::new(2, 4)?;
            for (k0, slab) in JOINT_COUNT_TABLE.iter().enumerate() {
                for (k1, row) in slab.iter().enumerate() {
                    for (k2, &want) in row.iter().enumerate() {
                        let idx = [k0 as u32 + 1, k1 as u32 + 1, k2 as u32 + 1];
                        if t.get(&idx) != want.into() {
                            return Ok(Outcome::Fail(json!({ "index": idx, "expected": want, "found": t.get(&idx).to_string() })));
                        }
                    }
                }
            }
            Ok(Outcome::Pass)
        }));
    }
    for m in cfg.ms(&[2, 3]) {
        let n_max = cfg.n_or(if m <= 2 { 5 } else { 4 });
        out.push(record(
            "joint-count-symmetry",
            Params::m_n(m, n_max),
            det,
            || {
                for n in 2..=n_max {
                    let t = JointCountTensor::new(m, n)?;
                    if let Some(v) = t.symmetry_violation() {
                        return Ok(Outcome::Fail(json!({ "n": n, "violation": v })));
                    }
                    if t.total() != fuss_catalan(m, n) || t.mass_outside_grid() != 0u32.into() {
                        return Ok(Outcome::Fail(
                            json!({ "n": n, "total": t.total().to_string() }),
                        ));
                    }
                }
                Ok(Outcome::Pass)
            },
        ));
    }
    out
}

pub(crate) const ETA_TABLE: [(&str, &str); 12] = [
    ("1,1,1", "1,1,1"),
    ("1,1,2", "1,1,4"),
    ("1,1,3", "1,1,5"),
    ("1,1,4", "1,1,2"),
    ("1,1,5", "1,1,3"),
    ("1,2,2", "1,2,2"),
    ("1,2,3", "1,2,4"),
    ("1,2,4", "1,2,5"),
    ("1,2,5", "1,2,3"),
    ("1,3,3", "1,3,3"),
    ("1,3,4", "1,3,4"),
    ("1,3,5", "1,3,5"),
];

fn eta_checks(cfg: &VerifyConfig) -> Vec<IdentityReport> {
    let det = cfg.deterministic;
    let mut out = Vec::new();
    if cfg.wants(2) {
        out.push(record("eta-table", Params::m_n(2, 3), det, || {
            for (p, want) in ETA_TABLE {
                let p: ParkingSeq = p.parse()?;
                let got = eta(&p, 2)?;
                if got.to_csv() != want {
                    return Ok(Outcome::Fail(
                        json!({ "seq": p.to_csv(), "expected": want, "found": got.to_csv() }),
                    ));
                }
            }
            Ok(Outcome::Pass)
        }));
    }
    for m in cfg.ms(&[1, 2, 3]) {
        let n_max = cfg.n_or(6);
        out.push(record("eta-bijection", Params::m_n(m, n_max), det, || {
            for n in 0..=n_max {
                let mut images = std::collections::BTreeSet::new();
                for p in canonical_iter(m, n)? {
                    let e = eta(&p, m)?;
                    if eta_inv(&e, m)? != p {
                        return Ok(seq_fail(&p, "eta_inv(eta(p)) = p"));
                    }
                    if n > 0 {
                        let d = decompose(&p, m)?;
                        if u_omega(&e, 1) != 1 + u_omega(d.component(1), 1) {
                            return Ok(seq_fail(&p, "omega_1(eta(p)) = 1 + omega_1(p_1)"));
                        }
                        for j in 2..=m as usize + 1 {
                            if u_omega(&e, j as u32) != u_omega(d.component(j), 1) {
                                return Ok(seq_fail(&p, "omega_j(eta(p)) = omega_1(p_j)"));
                            }
                        }
                    }
                    images.insert(e);
                }
                if BigInt::from(images.len()) != BigInt::from(fuss_catalan(m, n)) {
                    return Ok(Outcome::Fail(
                        json!({ "n": n, "distinct_images": images.len() }),
                    ));
                }
            }
            Ok(Outcome::Pass)
        }));
    }
    out
}

fn decomposition(cfg: &VerifyConfig) -> Vec<IdentityReport> {
    let det = cfg.deterministic;
    let mut out = Vec::new();
    for m in cfg.ms(&[1, 2, 3]) {
        let n_max = cfg.n_or(7);
        out.push(record(
            "decomposition-roundtrip",
            Params::m_n(m, n_max),
            det,
            || {
                let mu = m as usize;
                for n in 1..=n_max {
                    for p in canonical_iter(m, n)? {
                        let d = decompose(&p, m)?;
                        let idx = fixed_points(&p, m)?;
                        if !idx.is_monotone() {
                            return Ok(seq_fail(&p, "fixed points are monotone"));
                        }
                        if recompose(&d.components, m)? != p {
                            return Ok(seq_fail(&p, "recompose(decompose(p)) = p"));
                        }
                        let i = idx.as_slice();
                        let lemma = (d.components[0].is_empty() || p.get(2) == 1)
                            && (d.components[mu].is_empty()
                                || p.get(i[mu - 1]) as usize == mu * (i[mu - 1] - 1) + 1)
                            && (1..mu).all(|l| {
                                d.components[l].is_empty()
                                    || p.get(i[l - 1]) as usize == mu * (i[l - 1] - 2) + l + 1
                            });
                        if !lemma {
                            return Ok(seq_fail(&p, "block boundary values"));
                        }
                    }
                }
                Ok(Outcome::Pass)
            },
        ));
        let n_max = cfg.n_or(6);
        out.push(record(
            "theta-bijection",
            Params::m_n(m, n_max),
            det,
            || {
                for n in 1..=n_max {
                    let iter = enumerate_caterpillar_pk(m, n as u32)?;
                    let tree = iter.tree().clone();
                    for p in canonical_iter(m, n)? {
                        let s = theta(&p, m)?;
                        if theta_inv(&s, m)? != p || !is_tree_pk(&tree, &s)? {
                            return Ok(seq_fail(&p, "theta_inv(theta(p)) = p"));
                        }
                        if luck_tree(&tree, &s)? != u_luck(&p, m) {
                            return Ok(seq_fail(&p, "luck is preserved by theta"));
                        }
                        // labels 2..=m are leaves once the tree has a second backbone node
                        let shifted = (1..=m).all(|j| {
                            s.multiplicity(j) == p.multiplicity(j) + usize::from(j >= 2 && n >= 2)
                        });
                        if !shifted {
                            return Ok(seq_fail(
                                &p,
                                "omega_j(theta(p)) = omega_j(p) + 1 on leaf labels",
                            ));
                        }
                    }
                }
                Ok(Outcome::Pass)
            },
        ));
        out.push(record(
            "lattice-path-roundtrip",
            Params::m_n(m, n_max),
            det,
            || {
                for n in 0..=n_max {
                    for p in canonical_iter(m, n)? {
                        let w = to_lattice_path(&p, m)?;
                        if from_lattice_path(&w, m)? != p {
                            return Ok(seq_fail(&p, "from_lattice_path(to_lattice_path(p)) = p"));
                        }
                    }
                }
                Ok(Outcome::Pass)
            },
        ));
    }
    out
}

fn errata(cfg: &VerifyConfig) -> Vec<IdentityReport> {
    let det = cfg.deterministic;
    let mut out = Vec::new();
    if cfg.wants(2) {
        out.push(record(
            "parking-count-displayed-formula",
            Params::m_n(2, 3),
            det,
            || {
                let (m, n) = (2u32, 3usize);
                let enumerated = canonical_iter(m, n)?.count();
                let shifted = fuss_catalan(m + 1, n - 1);
                let (mm, nn) = (u64::from(m), n as u64);
                let caterpillar_formula = binomial(mm * nn, nn) / (mm * nn - mm + 1);
                let correct = BigInt::from(fuss_catalan(m, n)) == BigInt::from(enumerated);
                if correct && BigInt::from(enumerated) != BigInt::from(shifted.clone()) {
                    Ok(Outcome::Erratum(json!({
                        "enumerated": enumerated,
                        "fuss_catalan_m_n": fuss_catalan(m, n).to_string(),
                        "fuss_catalan_m_plus_1_n_minus_1": shifted.to_string(),
                        "binomial_mn_n_over_mn_minus_m_plus_1": caterpillar_formula.to_string(),
                    })))
                } else {
                    Ok(Outcome::Fail(json!({ "enumerated": enumerated })))
                }
            },
        ));
        out.push(record("luck-series-literal-exponent", Params::m_n(2, 2), det, || {
            let brute = r_poly_brute(2, 2)?;
            let literal = r_series_closed(2, 2, LuckSeriesForm::Literal).coeff(2);
            let corrected = r_series_closed(2, 2, LuckSeriesForm::Corrected).coeff(2);
            Ok(if corrected == brute && literal != brute {
                Outcome::Erratum(json!({
                    "enumerated": brute.to_string(),
                    "literal": literal.to_string(),
                    "corrected": corrected.to_string(),
                }))
            } else {
                Outcome::Fail(json!({ "literal": literal.to_string(), "corrected": corrected.to_string() }))
            })
        }));
        out.push(record("gamma-literal-arguments", Params::m_n(2, 2), det, || {
            let brute = gamma_poly_brute(2, 2)?;
            let literal = gamma_series_closed(2, 2, GammaForm::Literal).coeff(2);
            let corrected = gamma_series_closed(2, 2, GammaForm::Corrected).coeff(2);
            Ok(if corrected == brute && literal != brute {
                Outcome::Erratum(json!({
                    "enumerated": brute.to_string(),
                    "literal": literal.to_string(),
                    "corrected": corrected.to_string(),
                }))
            } else {
                Outcome::Fail(json!({ "literal": literal.to_string(), "corrected": corrected.to_string() }))
            })
        }));
    }
    for m in cfg.ms(&[2, 3]).into_iter().filter(|&m| m >= 2) {
        out.push(record(
            "multi-stat-uniform-product",
            Params::m_n(m, 1),
            det,
            || {
                let brute = multi_stat_poly_brute(m, 1)?;
                let uniform = multi_stat_series_closed(m, 2, ProductForm::Uniform);
                let corrected = multi_stat_series_closed(m, 2, ProductForm::Corrected);
                let later_agree = uniform.coeff(2) == corrected.coeff(2);
                Ok(
                    if corrected.coeff(1) == brute && uniform.coeff(1) != brute && later_agree {
                        Outcome::Erratum(json!({
                            "enumerated": brute.to_string(),
                            "uniform": uniform.coeff(1).to_string(),
                            "corrected": corrected.coeff(1).to_string(),
                        }))
                    } else {
                        Outcome::Fail(json!({ "uniform": uniform.coeff(1).to_string() }))
                    },
                )
            },
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quick(scope: Scope) -> VerificationReport {
        let mut cfg = VerifyConfig::new(scope);
        cfg.n_max = Some(4);
        cfg.order = Some(4);
        cfg.deterministic = true;
        run(&cfg)
    }

    #[test]
    fn scope_names_roundtrip() {
        for s in Scope::ALL {
            assert_eq!(s.name().parse::<Scope>().unwrap(), s);
        }
        for mu in Mutation::ALL {
            assert_eq!(mu.name().parse::<Mutation>().unwrap(), mu);
        }
        assert!("thm9".parse::<Scope>().is_err());
    }

    #[test]
    fn small_full_run_passes() {
        let r = quick(Scope::All);
        assert!(r.passed(), "{}", r.summary());
        assert_eq!(r.tally.erratum, 5);
        assert!(r.identities.iter().all(|i| i.millis == 0));
    }

    #[test]
    fn errata_carry_exact_mismatch() {
        let r = quick(Scope::Errata);
        let g = r.find("gamma-literal-arguments").next().unwrap();
        assert_eq!(g.status, Status::Erratum);
        let c = g.counterexample.as_ref().unwrap();
        assert_eq!(
            c["enumerated"],
            "q*t^2*u^3*v^3 + q^2*t*u^2*v^2 + q*t*u^2*v^3"
        );
        let l = r.find("luck-series-literal-exponent").next().unwrap();
        assert_eq!(l.counterexample.as_ref().unwrap()["literal"], "q^2 + q");
    }

    #[test]
    fn mutations_are_caught() {
        for (mu, scope) in [
            (Mutation::FussCatalanCoefficient, Scope::FunctionalEquation),
            (Mutation::LuckExponent, Scope::LuckSeries),
            (Mutation::GammaArguments, Scope::Gamma),
        ] {
            let mut cfg = VerifyConfig::new(scope);
            cfg.order = Some(4);
            cfg.n_max = Some(4);
            cfg.mutation = Some(mu);
            let r = run(&cfg);
            assert!(!r.passed(), "{mu:?}");
        }
    }

    #[test]
    fn report_json_shape() {
        let r = quick(Scope::FunctionalEquation);
        let v: Value = serde_json::from_str(&r.to_json()).unwrap();
        let first = &v["identities"][0];
        assert_eq!(first["identity"], "fuss-catalan-functional-equation");
        assert_eq!(first["status"], "pass");
        assert_eq!(first["params"], json!({ "m": 1, "order": 4 }));
        assert_eq!(first["millis"], 0);
        assert!(first.get("counterexample").is_none());
        let back: VerificationReport = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(back, r);
    }
}
