//! Feasibility search over t-vectors.
//!
//! For a fixed composition, every ordinary-singularity arrangement satisfies
//! `sum_r t_r C(r,2) = sum_{i<j} d_i d_j`. The search enumerates all
//! nonnegative solutions of that identity and runs each through a list of
//! inequality filters, keeping the classes no filter rules out.
//!
//! Only numeric solutions are enumerated; incidence constraints such as "two
//! lines share at most one point" are not used, so survivors over-count the
//! classes that could exist.

use std::collections::BTreeMap;
use std::ops::ControlFlow;

use num_traits::ToPrimitive;
use rayon::prelude::*;

use crate::arrangement::{ArrangementClass, ComponentSpec, TVector};
use crate::error::{Error, Result};
use crate::inequalities::InequalityKind;

/// Whether enumeration skips multiplicities whose `C(r,2)` exceeds the remaining budget.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pruning {
    On,
    Off,
}

fn c2(r: u64) -> u64 {
    r * (r - 1) / 2
}

struct Enumerator<'f> {
    pair_total: u64,
    pruning: Pruning,
    stack: Vec<(u64, u64)>,
    visit: &'f mut dyn FnMut(TVector) -> ControlFlow<()>,
}

impl Enumerator<'_> {
    /// Assigns `t_r` for `r` descending to 2; `only` pins the value at the first level.
    fn run(&mut self, r: u64, remaining: i128, only: Option<u64>) -> ControlFlow<()> {
        if r < 2 {
            if remaining == 0 {
                let t = TVector::from_pairs(self.stack.iter().copied()).expect("r >= 2");
                return (self.visit)(t);
            }
            return ControlFlow::Continue(());
        }
        let c = c2(r);
        let max = match self.pruning {
            Pruning::On if remaining < 0 => return ControlFlow::Continue(()),
            Pruning::On => remaining as u64 / c,
            Pruning::Off => self.pair_total / c,
        };
        // with pruning, t_2 is forced to the remaining budget
        let min = if self.pruning == Pruning::On && r == 2 { max } else { 0 };
        let values: Box<dyn Iterator<Item = u64>> = match only {
            Some(v) if v <= max && v >= min => Box::new(std::iter::once(v)),
            Some(_) => Box::new(std::iter::empty()),
            None => Box::new((min..=max).rev()),
        };
        for v in values {
            if v > 0 {
                self.stack.push((r, v));
            }
            let flow = self.run(r - 1, remaining - i128::from(v) * i128::from(c), None);
            if v > 0 {
                self.stack.pop();
            }
            flow?;
        }
        ControlFlow::Continue(())
    }
}

/// Largest multiplicity worth enumerating: `r_cap`, lowered while `C(r,2) > pair_total`.
fn top_multiplicity(pair_total: u64, r_cap: u64, pruning: Pruning) -> u64 {
    let mut r = r_cap;
    if pruning == Pruning::On {
        while r > 2 && c2(r) > pair_total {
            r -= 1;
        }
    }
    r
}

/// Visits every solution of `sum_{2<=r<=r_cap} t_r C(r,2) = pair_total` in
/// lexicographic order on `(t_{r_cap}, ..., t_2)`, largest first. Stops early if
/// `visit` breaks.
pub fn for_each_tvector(
    pair_total: u64,
    r_cap: u64,
    pruning: Pruning,
    mut visit: impl FnMut(TVector) -> ControlFlow<()>,
) -> Result<ControlFlow<()>> {
    if r_cap < 2 {
        return Err(Error::RCap(r_cap));
    }
    let top = top_multiplicity(pair_total, r_cap, pruning);
    let mut e = Enumerator { pair_total, pruning, stack: Vec::new(), visit: &mut visit };
    Ok(e.run(top, i128::from(pair_total), None))
}

/// All solutions, see [`for_each_tvector`].
pub fn enumerate_tvectors(pair_total: u64, r_cap: u64) -> Result<Vec<TVector>> {
    enumerate_tvectors_with(pair_total, r_cap, Pruning::On)
}

pub fn enumerate_tvectors_with(pair_total: u64, r_cap: u64, pruning: Pruning) -> Result<Vec<TVector>> {
    let mut out = Vec::new();
    let _ = for_each_tvector(pair_total, r_cap, pruning, |t| {
        out.push(t);
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchMode {
    Lines { k: u64 },
    EqualDegree { d: u64, k: u64 },
    LineConic { l: u64, k: u64 },
}

impl SearchMode {
    pub fn components(self) -> Result<ComponentSpec> {
        match self {
            Self::Lines { k } => ComponentSpec::lines(k),
            Self::EqualDegree { d, k } => ComponentSpec::equal_degree(d, k),
            Self::LineConic { l, k } => ComponentSpec::line_conic(l, k),
        }
    }
}

/// How a filter whose hypotheses fail treats a candidate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum ApplicabilityPolicy {
    /// An inapplicable filter passes the candidate.
    #[default]
    PassThrough,
    /// Candidates outside any filter's hypotheses are not part of the search space.
    RequireApplicable,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchSpec {
    pub mode: SearchMode,
    pub r_cap: Option<u64>,
    pub filters: Vec<InequalityKind>,
    pub limit: Option<usize>,
    pub policy: ApplicabilityPolicy,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// Outside the search space under [`ApplicabilityPolicy::RequireApplicable`].
    Excluded,
    Eliminated(InequalityKind),
    Survivor,
}

impl SearchSpec {
    pub fn new(mode: SearchMode) -> Self {
        Self { mode, r_cap: None, filters: Vec::new(), limit: None, policy: ApplicabilityPolicy::default() }
    }

    pub fn with_filters(mut self, filters: impl IntoIterator<Item = InequalityKind>) -> Self {
        self.filters = filters.into_iter().collect();
        self
    }

    pub fn with_r_cap(mut self, r_cap: u64) -> Self {
        self.r_cap = Some(r_cap);
        self
    }

    pub fn with_limit(mut self, limit: usize) -> Self {
        self.limit = Some(limit);
        self
    }

    pub fn with_policy(mut self, policy: ApplicabilityPolicy) -> Self {
        self.policy = policy;
        self
    }

    /// Filters deduplicated, in canonical order.
    pub fn canonical_filters(&self) -> Vec<InequalityKind> {
        let mut f = self.filters.clone();
        f.sort();
        f.dedup();
        f
    }

    /// `sum_{i<j} d_i d_j` for the mode's composition.
    pub fn pair_total(&self) -> Result<u64> {
        self.mode
            .components()?
            .pair_count()
            .to_u64()
            .ok_or_else(|| Error::Format("pair count too large to enumerate".into()))
    }

    /// Multiplicity ceiling actually enumerated.
    ///
    /// No point lies on more than `k` components. Under
    /// [`ApplicabilityPolicy::RequireApplicable`] the filters' multiplicity
    /// hypotheses lower it further.
    pub fn effective_r_cap(&self) -> Result<u64> {
        let comps = self.mode.components()?;
        let k = comps.total_count();
        let mut cap = k.max(2);
        if let Some(user) = self.r_cap {
            if user < 2 {
                return Err(Error::RCap(user));
            }
            cap = cap.min(user);
        }
        if self.policy == ApplicabilityPolicy::RequireApplicable {
            let gate_2d3 = (2 * comps.total_degree() / 3).max(2);
            for f in self.canonical_filters() {
                let gate = match f {
                    InequalityKind::HirzebruchClassic | InequalityKind::HirzebruchImproved => k.saturating_sub(3),
                    InequalityKind::PrszLt => k.saturating_sub(1),
                    _ => gate_2d3,
                };
                cap = cap.min(gate.max(2));
            }
        }
        Ok(cap)
    }

    /// Runs the filters on one candidate, stopping at the first violation.
    pub fn classify(&self, class: &ArrangementClass) -> Verdict {
        let filters = self.canonical_filters();
        let reports: Vec<_> = filters.iter().map(|f| f.evaluate(class)).collect();
        if self.policy == ApplicabilityPolicy::RequireApplicable && reports.iter().any(|r| !r.applicable) {
            return Verdict::Excluded;
        }
        match filters.iter().zip(&reports).find(|(_, r)| r.violated()) {
            Some((f, _)) => Verdict::Eliminated(*f),
            None => Verdict::Survivor,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SearchResult {
    pub survivors: Vec<ArrangementClass>,
    /// Candidates in the search space: survivors plus eliminated.
    pub examined: u64,
    pub eliminated_by: BTreeMap<InequalityKind, u64>,
    /// Candidates outside the filters' hypotheses (require-applicable policy only).
    pub excluded: u64,
    /// True if the survivor limit stopped the search before every candidate was seen.
    pub truncated: bool,
}

impl SearchResult {
    pub fn eliminated(&self) -> u64 {
        self.eliminated_by.values().sum()
    }

    fn merge(&mut self, other: SearchResult) {
        self.survivors.extend(other.survivors);
        self.examined += other.examined;
        self.excluded += other.excluded;
        for (k, n) in other.eliminated_by {
            *self.eliminated_by.entry(k).or_insert(0) += n;
        }
    }
}

struct Tally<'s> {
    spec: &'s SearchSpec,
    components: ComponentSpec,
    result: SearchResult,
    survivors: u64,
}

impl Tally<'_> {
    /// Classifies one candidate, handing survivors to `sink`.
    fn consider(&mut self, t: TVector, sink: &mut dyn FnMut(ArrangementClass)) -> ControlFlow<()> {
        if self.spec.limit.is_some_and(|l| self.survivors >= l as u64) {
            self.result.truncated = true;
            return ControlFlow::Break(());
        }
        let class = ArrangementClass::new(self.components.clone(), t);
        debug_assert!(class.validate_identity());
        match self.spec.classify(&class) {
            Verdict::Excluded => self.result.excluded += 1,
            Verdict::Eliminated(k) => {
                self.result.examined += 1;
                *self.result.eliminated_by.entry(k).or_insert(0) += 1;
            }
            Verdict::Survivor => {
                self.result.examined += 1;
                self.survivors += 1;
                sink(class);
            }
        }
        ControlFlow::Continue(())
    }
}

/// Sequential search that hands each survivor to `sink` as it is found.
/// The returned result has an empty survivor list.
pub fn search_stream(spec: &SearchSpec, mut sink: impl FnMut(ArrangementClass)) -> Result<SearchResult> {
    let pair_total = spec.pair_total()?;
    let r_cap = spec.effective_r_cap()?;
    let mut tally = Tally { spec, components: spec.mode.components()?, result: SearchResult::default(), survivors: 0 };
    let _ = for_each_tvector(pair_total, r_cap, Pruning::On, |t| tally.consider(t, &mut sink))?;
    Ok(tally.result)
}

/// Runs the search and collects survivors in enumeration order.
///
/// Without a limit, the top-level branches are searched in parallel and
/// merged back in order, so the result does not depend on scheduling.
pub fn search_feasible(spec: &SearchSpec) -> Result<SearchResult> {
    if spec.limit.is_some() {
        return search_sequential(spec);
    }
    let pair_total = spec.pair_total()?;
    let r_cap = spec.effective_r_cap()?;
    let components = spec.mode.components()?;
    let top = top_multiplicity(pair_total, r_cap, Pruning::On);
    let branches: Vec<u64> = (0..=pair_total / c2(top)).rev().collect();
    let parts: Vec<SearchResult> = branches
        .into_par_iter()
        .map(|v| {
            let mut survivors = Vec::new();
            let mut tally =
                Tally { spec, components: components.clone(), result: SearchResult::default(), survivors: 0 };
            let mut visit = |t| tally.consider(t, &mut |c| survivors.push(c));
            let mut e = Enumerator { pair_total, pruning: Pruning::On, stack: Vec::new(), visit: &mut visit };
            let _ = e.run(top, i128::from(pair_total), Some(v));
            let mut result = tally.result;
            result.survivors = survivors;
            result
        })
        .collect();
    let mut result = SearchResult::default();
    for p in parts {
        result.merge(p);
    }
    Ok(result)
}

/// Single-threaded reference for [`search_feasible`].
pub fn search_sequential(spec: &SearchSpec) -> Result<SearchResult> {
    let mut survivors = Vec::new();
    let mut result = search_stream(spec, |c| survivors.push(c))?;
    result.survivors = survivors;
    Ok(result)
}
