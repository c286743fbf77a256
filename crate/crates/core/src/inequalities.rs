//! Hirzebruch-type inequalities on t-vectors, evaluated exactly.
//!
//! Every check returns an [`InequalityReport`]. A check whose hypotheses do not
//! hold is reported as not applicable with the failing hypothesis as reason;
//! only applicable reports carry `lhs`, `rhs` and `slack = lhs - rhs`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::arrangement::ArrangementClass;
use crate::error::{Error, Result};
use crate::orbifold::{alpha_interval, canonical_alpha, AlphaInterval};
use crate::rational::Rational;

/// Inequality families in canonical order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum InequalityKind {
    LangerLines,
    LineConic,
    LineConicParam,
    EqualDegree,
    EqualDegreeParam,
    HirzebruchClassic,
    HirzebruchImproved,
    PrszLt,
}

impl InequalityKind {
    pub const ALL: [InequalityKind; 8] = [
        Self::LangerLines,
        Self::LineConic,
        Self::LineConicParam,
        Self::EqualDegree,
        Self::EqualDegreeParam,
        Self::HirzebruchClassic,
        Self::HirzebruchImproved,
        Self::PrszLt,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::LangerLines => "LANGER_LINES",
            Self::LineConic => "LINE_CONIC",
            Self::LineConicParam => "LINE_CONIC_PARAM",
            Self::EqualDegree => "EQUAL_DEGREE",
            Self::EqualDegreeParam => "EQUAL_DEGREE_PARAM",
            Self::HirzebruchClassic => "HIRZEBRUCH_CLASSIC",
            Self::HirzebruchImproved => "HIRZEBRUCH_IMPROVED",
            Self::PrszLt => "PRSZ_LT",
        }
    }

    pub fn is_parametric(self) -> bool {
        matches!(self, Self::LineConicParam | Self::EqualDegreeParam)
    }

    /// Evaluates this family on `a`, using the canonical weight `3/D` for the
    /// parametric forms. An empty weight interval makes those not applicable.
    pub fn evaluate(self, a: &ArrangementClass) -> InequalityReport {
        match self {
            Self::LangerLines => check_langer_lines(a),
            Self::LineConic => check_line_conic(a),
            Self::EqualDegree => check_equal_degree(a),
            Self::HirzebruchClassic => check_hirzebruch_classic(a),
            Self::HirzebruchImproved => check_hirzebruch_improved(a),
            Self::PrszLt => check_prsz_lt(a),
            Self::LineConicParam | Self::EqualDegreeParam => {
                let alpha = canonical_alpha(a);
                let id = if self == Self::LineConicParam {
                    InequalityId::LineConicParam(alpha.clone())
                } else {
                    InequalityId::EqualDegreeParam(alpha.clone())
                };
                let res = if self == Self::LineConicParam {
                    check_line_conic_parametric(a, &alpha)
                } else {
                    check_equal_degree_parametric(a, &alpha)
                };
                res.unwrap_or_else(|e| InequalityReport::not_applicable(id, e.to_string()))
            }
        }
    }
}

impl fmt::Display for InequalityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for InequalityKind {
    type Err = Error;

    /// Case-insensitive; `-` and `_` are interchangeable.
    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_uppercase().replace('-', "_");
        Self::ALL
            .into_iter()
            .find(|k| k.name() == key)
            .ok_or_else(|| Error::Format(format!("unknown inequality {s:?}")))
    }
}

/// An inequality, with its weight for the parametric forms.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum InequalityId {
    LangerLines,
    LineConic,
    LineConicParam(Rational),
    EqualDegree,
    EqualDegreeParam(Rational),
    HirzebruchClassic,
    HirzebruchImproved,
    PrszLt,
}

impl InequalityId {
    pub fn kind(&self) -> InequalityKind {
        match self {
            Self::LangerLines => InequalityKind::LangerLines,
            Self::LineConic => InequalityKind::LineConic,
            Self::LineConicParam(_) => InequalityKind::LineConicParam,
            Self::EqualDegree => InequalityKind::EqualDegree,
            Self::EqualDegreeParam(_) => InequalityKind::EqualDegreeParam,
            Self::HirzebruchClassic => InequalityKind::HirzebruchClassic,
            Self::HirzebruchImproved => InequalityKind::HirzebruchImproved,
            Self::PrszLt => InequalityKind::PrszLt,
        }
    }

    pub fn alpha(&self) -> Option<&Rational> {
        match self {
            Self::LineConicParam(a) | Self::EqualDegreeParam(a) => Some(a),
            _ => None,
        }
    }
}

impl fmt::Display for InequalityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.alpha() {
            Some(a) => write!(f, "{}({a})", self.kind()),
            None => write!(f, "{}", self.kind()),
        }
    }
}

impl FromStr for InequalityId {
    type Err = Error;

    /// Parses `LANGER_LINES` or `LINE_CONIC_PARAM(3/4)`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (name, alpha) = match s.split_once('(') {
            Some((name, rest)) => {
                let inner =
                    rest.strip_suffix(')').ok_or_else(|| Error::Format(format!("unterminated inequality id {s:?}")))?;
                (name, Some(inner.parse::<Rational>()?))
            }
            None => (s, None),
        };
        let kind: InequalityKind = name.parse()?;
        match (kind, alpha) {
            (InequalityKind::LineConicParam, Some(a)) => Ok(Self::LineConicParam(a)),
            (InequalityKind::EqualDegreeParam, Some(a)) => Ok(Self::EqualDegreeParam(a)),
            (k, None) if !k.is_parametric() => Ok(match k {
                InequalityKind::LangerLines => Self::LangerLines,
                InequalityKind::LineConic => Self::LineConic,
                InequalityKind::EqualDegree => Self::EqualDegree,
                InequalityKind::HirzebruchClassic => Self::HirzebruchClassic,
                InequalityKind::HirzebruchImproved => Self::HirzebruchImproved,
                InequalityKind::PrszLt => Self::PrszLt,
                _ => unreachable!(),
            }),
            _ => Err(Error::Format(format!("malformed inequality id {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InequalityReport {
    pub id: InequalityId,
    pub applicable: bool,
    pub reason: Option<String>,
    pub lhs: Option<Rational>,
    pub rhs: Option<Rational>,
    pub slack: Option<Rational>,
    pub equality: bool,
}

impl InequalityReport {
    pub fn evaluated(id: InequalityId, lhs: Rational, rhs: Rational) -> Self {
        let slack = &lhs - &rhs;
        Self {
            id,
            applicable: true,
            reason: None,
            equality: slack.is_zero(),
            lhs: Some(lhs),
            rhs: Some(rhs),
            slack: Some(slack),
        }
    }

    pub fn not_applicable(id: InequalityId, reason: impl Into<String>) -> Self {
        Self { id, applicable: false, reason: Some(reason.into()), lhs: None, rhs: None, slack: None, equality: false }
    }

    /// Applicable with `slack >= 0`.
    pub fn satisfied(&self) -> bool {
        self.slack.as_ref().is_some_and(|s| !s.is_negative())
    }

    /// Applicable with `slack < 0`: the class cannot be realized.
    pub fn violated(&self) -> bool {
        self.slack.as_ref().is_some_and(Rational::is_negative)
    }
}

fn t(a: &ArrangementClass, r: u64) -> Rational {
    Rational::from(a.t.get(r))
}

/// `t_2 + 3/4 t_3`.
fn nodes_and_triples(a: &ArrangementClass) -> Rational {
    t(a, 2) + Rational::new(3, 4) * t(a, 3)
}

/// `sum_{r >= 5} coeff(r) t_r`.
fn high_sum(a: &ArrangementClass, coeff: impl Fn(u64) -> Rational) -> Rational {
    a.t.iter().filter(|&(r, _)| r >= 5).map(|(r, n)| coeff(r) * Rational::from(n)).sum()
}

/// `r^2/4 - r`.
pub fn langer_coefficient(r: u64) -> Rational {
    let r = Rational::from(r);
    r.square() / Rational::from(4) - r
}

/// `2r - 9`.
pub fn hirzebruch_improved_coefficient(r: u64) -> Rational {
    Rational::from(BigInt::from(2) * BigInt::from(r) - 9)
}

/// `r - 4`.
pub fn hirzebruch_classic_coefficient(r: u64) -> Rational {
    Rational::from(BigInt::from(r) - 4)
}

/// `t_r = 0 for r > 2D/3`, i.e. `3 r_max <= 2D`.
fn multiplicity_gate(a: &ArrangementClass, bound_text: &str) -> std::result::Result<(), String> {
    match a.t.r_max() {
        Some(r) if 3 * u128::from(r) > 2 * u128::from(a.total_degree()) => {
            Err(format!("t_r = 0 for r > {bound_text} fails: r_max = {r} > {}", Rational::new(2 * a.total_degree(), 3)))
        }
        _ => Ok(()),
    }
}

fn hirzebruch_gate(a: &ArrangementClass) -> std::result::Result<u64, String> {
    if !a.components.is_lines() {
        return Err("not a line arrangement".into());
    }
    let k = a.components.total_count();
    if k < 6 {
        return Err(format!("requires k >= 6 lines, got {k}"));
    }
    for r in [k, k - 1, k - 2] {
        if a.t.get(r) != 0 {
            return Err(format!("requires t_k = t_(k-1) = t_(k-2) = 0, but t_{r} = {}", a.t.get(r)));
        }
    }
    Ok(k)
}

/// `t_2 + 3/4 t_3 >= k + sum_{r>=5} (r^2/4 - r) t_r` for `k` lines with `t_r = 0` for `r > 2k/3`.
pub fn check_langer_lines(a: &ArrangementClass) -> InequalityReport {
    let id = InequalityId::LangerLines;
    if !a.components.is_lines() {
        return InequalityReport::not_applicable(id, "not a line arrangement");
    }
    if let Err(reason) = multiplicity_gate(a, "2k/3") {
        return InequalityReport::not_applicable(id, reason);
    }
    let k = Rational::from(a.components.total_count());
    InequalityReport::evaluated(id, nodes_and_triples(a), k + high_sum(a, langer_coefficient))
}

/// Line count `l` and conic count `k >= 1`, if the arrangement consists of lines and conics.
fn line_conic_counts(a: &ArrangementClass) -> std::result::Result<(u64, u64), String> {
    if !a.components.is_line_conic() {
        return Err("components must be lines and conics".into());
    }
    let k = a.components.count_of_degree(2);
    if k == 0 {
        return Err("requires at least one conic (k >= 1)".into());
    }
    Ok((a.components.count_of_degree(1), k))
}

/// `t_2 + 3/4 t_3 + (4k + 2l - 4)k >= l + sum_{r>=5} (r^2/4 - r) t_r`
/// for `l` lines and `k` conics with `t_r = 0` for `r > 2(l + 2k)/3`.
pub fn check_line_conic(a: &ArrangementClass) -> InequalityReport {
    let id = InequalityId::LineConic;
    let (l, k) = match line_conic_counts(a) {
        Ok(lk) => lk,
        Err(reason) => return InequalityReport::not_applicable(id, reason),
    };
    if let Err(reason) = multiplicity_gate(a, "2(l+2k)/3") {
        return InequalityReport::not_applicable(id, reason);
    }
    let (l, k) = (BigInt::from(l), BigInt::from(k));
    let conic_term = Rational::from((BigInt::from(4) * &k + BigInt::from(2) * &l - 4) * &k);
    let lhs = nodes_and_triples(a) + conic_term;
    let rhs = Rational::from(l) + high_sum(a, langer_coefficient);
    InequalityReport::evaluated(id, lhs, rhs)
}

/// `(6/alpha - 4)k + t_2 + 3/4 t_3 >= l + sum_{r>=5} (r^2/4 - r) t_r`.
///
/// Fails if `alpha` is outside `[3/(l+2k), 2/r_max]`.
pub fn check_line_conic_parametric(a: &ArrangementClass, alpha: &Rational) -> Result<InequalityReport> {
    let id = InequalityId::LineConicParam(alpha.clone());
    let (l, k) = match line_conic_counts(a) {
        Ok(lk) => lk,
        Err(reason) => return Ok(InequalityReport::not_applicable(id, reason)),
    };
    require_alpha(a, alpha)?;
    let six_over_alpha = Rational::from(6) / alpha;
    let lhs = (six_over_alpha - Rational::from(4)) * Rational::from(k) + nodes_and_triples(a);
    let rhs = Rational::from(l) + high_sum(a, langer_coefficient);
    Ok(InequalityReport::evaluated(id, lhs, rhs))
}

fn require_alpha(a: &ArrangementClass, alpha: &Rational) -> Result<AlphaInterval> {
    let interval = alpha_interval(a)?;
    if !interval.contains(alpha) {
        return Err(Error::AlphaOutOfRange { alpha: alpha.clone(), interval: Box::new(interval) });
    }
    Ok(interval)
}

/// `t_2 + 3/4 t_3 + d^2 k (dk - k - 1) >= sum_{r>=5} (r^2/4 - r) t_r`
/// for `k` curves of degree `d` with `t_r = 0` for `r > 2dk/3`.
pub fn check_equal_degree(a: &ArrangementClass) -> InequalityReport {
    let id = InequalityId::EqualDegree;
    let Some(d) = a.components.common_degree() else {
        return InequalityReport::not_applicable(id, "components have different degrees");
    };
    if let Err(reason) = multiplicity_gate(a, "2dk/3") {
        return InequalityReport::not_applicable(id, reason);
    }
    let d = BigInt::from(d);
    let k = BigInt::from(a.components.total_count());
    let degree_term = Rational::from(&d * &d * &k * (&d * &k - &k - 1));
    let lhs = nodes_and_triples(a) + degree_term;
    InequalityReport::evaluated(id, lhs, high_sum(a, langer_coefficient))
}

/// `t_2 + 3/4 t_3 + (3/alpha) dk(d - 1) >= d^2 k + sum_{r>=5} (r^2/4 - r) t_r`.
///
/// Fails if `alpha` is outside `[3/(dk), 2/r_max]`.
pub fn check_equal_degree_parametric(a: &ArrangementClass, alpha: &Rational) -> Result<InequalityReport> {
    let id = InequalityId::EqualDegreeParam(alpha.clone());
    let Some(d) = a.components.common_degree() else {
        return Ok(InequalityReport::not_applicable(id, "components have different degrees"));
    };
    require_alpha(a, alpha)?;
    let d = BigInt::from(d);
    let k = BigInt::from(a.components.total_count());
    let lhs = nodes_and_triples(a) + Rational::from(3) / alpha * Rational::from(&d * &k * (&d - 1));
    let rhs = Rational::from(&d * &d * &k) + high_sum(a, langer_coefficient);
    Ok(InequalityReport::evaluated(id, lhs, rhs))
}

/// `t_2 + t_3 >= k + sum_{r>=5} (r - 4) t_r`.
pub fn check_hirzebruch_classic(a: &ArrangementClass) -> InequalityReport {
    let id = InequalityId::HirzebruchClassic;
    match hirzebruch_gate(a) {
        Ok(k) => InequalityReport::evaluated(
            id,
            t(a, 2) + t(a, 3),
            Rational::from(k) + high_sum(a, hirzebruch_classic_coefficient),
        ),
        Err(reason) => InequalityReport::not_applicable(id, reason),
    }
}

/// `t_2 + 3/4 t_3 >= k + sum_{r>=5} (2r - 9) t_r`.
pub fn check_hirzebruch_improved(a: &ArrangementClass) -> InequalityReport {
    let id = InequalityId::HirzebruchImproved;
    match hirzebruch_gate(a) {
        Ok(k) => InequalityReport::evaluated(
            id,
            nodes_and_triples(a),
            Rational::from(k) + high_sum(a, hirzebruch_improved_coefficient),
        ),
        Err(reason) => InequalityReport::not_applicable(id, reason),
    }
}

/// `(7/2 d^2 - 9/2 d) k + t_2 + t_3 >= sum_{r>=5} (r - 4) t_r` for `k` curves of
/// degree `d >= 2` with `t_k = 0`.
pub fn check_prsz_lt(a: &ArrangementClass) -> InequalityReport {
    let id = InequalityId::PrszLt;
    let d = match a.components.common_degree() {
        Some(d) if d >= 2 => d,
        Some(_) => return InequalityReport::not_applicable(id, "requires degree d >= 2"),
        None => return InequalityReport::not_applicable(id, "components have different degrees"),
    };
    let k = a.components.total_count();
    if a.t.get(k) != 0 {
        return InequalityReport::not_applicable(id, format!("requires t_k = 0, but t_{k} = {}", a.t.get(k)));
    }
    let d = Rational::from(d);
    let coeff = Rational::new(7, 2) * d.square() - Rational::new(9, 2) * d;
    let lhs = coeff * Rational::from(k) + t(a, 2) + t(a, 3);
    InequalityReport::evaluated(id, lhs, high_sum(a, hirzebruch_classic_coefficient))
}

/// Everything known about one class: the pair-count identity, the weight
/// interval and every inequality report in canonical order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Audit {
    pub identity_valid: bool,
    pub incidences: BigInt,
    pub pairs: BigInt,
    pub alpha_interval: std::result::Result<AlphaInterval, Error>,
    pub reports: Vec<InequalityReport>,
}

impl Audit {
    /// True if the identity fails or some applicable inequality is violated.
    pub fn ruled_out(&self) -> bool {
        !self.identity_valid || self.reports.iter().any(InequalityReport::violated)
    }
}

/// Runs every check, the parametric ones at the canonical weight `3/D`.
pub fn audit(a: &ArrangementClass) -> Audit {
    Audit {
        identity_valid: a.validate_identity(),
        incidences: a.t.incidence_pairs(),
        pairs: a.pair_count(),
        alpha_interval: alpha_interval(a),
        reports: InequalityKind::ALL.iter().map(|k| k.evaluate(a)).collect(),
    }
}

/// The parametric checks at a caller-chosen weight.
pub fn parametric_reports(a: &ArrangementClass, alpha: &Rational) -> Result<Vec<InequalityReport>> {
    Ok(vec![check_line_conic_parametric(a, alpha)?, check_equal_degree_parametric(a, alpha)?])
}
