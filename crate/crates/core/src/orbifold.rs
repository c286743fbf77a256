//! Orbifold Euler numbers of `(P^2, alpha*C)` for arrangements with ordinary
//! singularities, and the orbifold Miyaoka-Yau inequality
//! `(K + alpha*C)^2 <= 3 e_orb(P^2, alpha*C)`.
//!
//! Local values come from the closed forms for `n` transversal branches with
//! weights `a_1 <= ... <= a_n`. When `2 a_n < a <= 2` only an upper bound is
//! known; [`LocalEulerValue::exact`] records which case applied so that a
//! failed global check can be read as a certificate of non-existence.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::arrangement::ArrangementClass;
use crate::error::{Error, Result};
use crate::rational::Rational;

/// Branch weights sorted ascending, each in `[0, 1]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightVector {
    weights: Vec<Rational>,
}

impl WeightVector {
    pub fn new(mut weights: Vec<Rational>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::EmptyWeights);
        }
        let one = Rational::one();
        if let Some(w) = weights.iter().find(|w| w.is_negative() || **w > one) {
            return Err(Error::WeightOutOfRange(w.clone()));
        }
        weights.sort();
        Ok(Self { weights })
    }

    /// `n` copies of `alpha`.
    pub fn uniform(alpha: &Rational, n: usize) -> Result<Self> {
        Self::new(vec![alpha.clone(); n])
    }

    pub fn weights(&self) -> &[Rational] {
        &self.weights
    }

    pub fn total(&self) -> Rational {
        self.weights.iter().cloned().sum()
    }

    pub fn max(&self) -> &Rational {
        self.weights.last().expect("nonempty")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalEulerValue {
    pub value: Rational,
    /// False when `value` is only an upper bound.
    pub exact: bool,
}

/// Local orbifold Euler number at the common point of transversal lines
/// through the origin of `C^2` with the given weights.
pub fn local_orbifold_euler(w: &WeightVector) -> LocalEulerValue {
    let one = Rational::one();
    let two = Rational::from(2);
    let a = w.total();
    let a_n = w.max();
    if a > two {
        LocalEulerValue { value: Rational::zero(), exact: true }
    } else if &two * a_n >= a {
        let value = (&one - &a + a_n) * (&one - a_n);
        LocalEulerValue { value, exact: true }
    } else {
        let value = (&one - &a / &two).square();
        LocalEulerValue { value, exact: false }
    }
}

/// Closed interval of rational weights.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlphaInterval {
    pub lo: Rational,
    pub hi: Rational,
}

impl AlphaInterval {
    pub fn contains(&self, alpha: &Rational) -> bool {
        &self.lo <= alpha && alpha <= &self.hi
    }

    fn require(&self, alpha: &Rational) -> Result<()> {
        if self.contains(alpha) {
            Ok(())
        } else {
            Err(Error::AlphaOutOfRange { alpha: alpha.clone(), interval: Box::new(self.clone()) })
        }
    }

    /// `k + 1` evenly spaced points from `lo` to `hi` inclusive.
    pub fn sample(&self, k: u32) -> Vec<Rational> {
        let k = k.max(1);
        let step = (&self.hi - &self.lo) / Rational::from(k);
        (0..=k).map(|i| &self.lo + &step * Rational::from(i)).collect()
    }
}

/// Largest multiplicity, taken as 2 when there are no singular points.
fn effective_r_max(a: &ArrangementClass) -> u64 {
    a.t.r_max().unwrap_or(2)
}

/// Weights for which `(P^2, alpha*C)` is log canonical: `0 <= alpha <= 2/r_max`.
pub fn log_canonical_range(a: &ArrangementClass) -> AlphaInterval {
    AlphaInterval { lo: Rational::zero(), hi: Rational::new(2, effective_r_max(a)) }
}

/// `[3/D, 2/r_max]`: `K + alpha*C` is effective and the pair is log canonical.
pub fn alpha_interval(a: &ArrangementClass) -> Result<AlphaInterval> {
    let lo = Rational::new(3, a.total_degree());
    let hi = Rational::new(2, effective_r_max(a));
    if lo > hi {
        return Err(Error::EmptyAlphaInterval(Box::new(AlphaInterval { lo, hi })));
    }
    Ok(AlphaInterval { lo, hi })
}

/// The weight `3/D` at which `K + alpha*C` is numerically trivial.
pub fn canonical_alpha(a: &ArrangementClass) -> Rational {
    Rational::new(3, a.total_degree())
}

fn big(n: BigInt) -> Rational {
    Rational::from(n)
}

/// `3 alpha f_2 - 3 alpha f_1 - 3/4 alpha^2 f_2`: the lower bound on the singular
/// sum `sum_p 3(alpha(mu_p - 1) + 1 - e_orb(p))` after substituting the local bounds.
pub fn lmy_lhs_bound(a: &ArrangementClass, alpha: &Rational) -> Result<Rational> {
    log_canonical_range(a).require(alpha)?;
    let f1 = big(a.f_number(1));
    let f2 = big(a.f_number(2));
    let three = Rational::from(3);
    Ok(&three * alpha * &f2 - &three * alpha * &f1 - Rational::new(3, 4) * alpha.square() * &f2)
}

/// `(3 alpha - alpha^2) D^2 - 3 alpha D`.
pub fn lmy_rhs(a: &ArrangementClass, alpha: &Rational) -> Rational {
    let d = Rational::from(a.total_degree());
    let three = Rational::from(3);
    (&three * alpha - alpha.square()) * d.square() - three * alpha * d
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GlobalEulerValue {
    pub value: Rational,
    /// False when some local term is only an upper bound (a point of multiplicity >= 3).
    pub exact: bool,
}

/// Global orbifold Euler number of `(P^2, alpha*C)`, or an upper bound for it:
/// `e(P^2) - alpha * sum_i e(C_i \ Sing) + sum_p (e_orb(p) - 1)`.
pub fn global_orbifold_euler_bound(a: &ArrangementClass, alpha: &Rational) -> Result<GlobalEulerValue> {
    a.check_identity()?;
    log_canonical_range(a).require(alpha)?;

    // sum_i e(C_i) for smooth components, e(C_i) = 3d - d^2
    let smooth_euler: BigInt = a
        .components
        .groups()
        .iter()
        .map(|g| {
            let d = BigInt::from(g.degree);
            (BigInt::from(3) * &d - &d * &d) * BigInt::from(g.count)
        })
        .sum();
    // each singular point of multiplicity m is removed from m components
    let punctured = big(smooth_euler - a.f_number(1));

    let mut value = Rational::from(3) - alpha * punctured;
    let mut exact = true;
    for (r, n) in a.t.iter() {
        let local = local_orbifold_euler(&WeightVector::uniform(alpha, r as usize)?);
        exact &= local.exact;
        value += Rational::from(n) * (local.value - Rational::one());
    }
    Ok(GlobalEulerValue { value, exact })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LmyReport {
    pub alpha: Rational,
    /// `(K + alpha*C)^2 = (alpha*D - 3)^2`.
    pub lhs: Rational,
    /// `3 e_orb` (or three times its upper bound when `exact` is false).
    pub rhs: Rational,
    pub satisfied: bool,
    pub exact: bool,
}

/// Evaluates `(K + alpha*C)^2 <= 3 e_orb(P^2, alpha*C)`.
///
/// Since the right side is an upper bound, `satisfied == false` rules the class
/// out regardless of `exact`.
pub fn lmy_global_check(a: &ArrangementClass, alpha: &Rational) -> Result<LmyReport> {
    a.check_identity()?;
    alpha_interval(a)?.require(alpha)?;
    let e = global_orbifold_euler_bound(a, alpha)?;
    let lhs = (alpha * Rational::from(a.total_degree()) - Rational::from(3)).square();
    let rhs = Rational::from(3) * e.value;
    Ok(LmyReport { alpha: alpha.clone(), satisfied: lhs <= rhs, lhs, rhs, exact: e.exact })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::{ComponentSpec, TVector};
    use crate::catalog::catalog;
    use crate::rational::q;

    fn weights(ws: &[(i64, i64)]) -> WeightVector {
        WeightVector::new(ws.iter().map(|&(n, d)| q(n, d)).collect()).unwrap()
    }

    fn lines(k: u64, t: &[(u64, u64)]) -> ArrangementClass {
        ArrangementClass::new(ComponentSpec::lines(k).unwrap(), TVector::from_pairs(t.iter().copied()).unwrap())
    }

    #[test]
    fn local_values() {
        let v = local_orbifold_euler(&weights(&[(1, 1), (1, 1), (1, 1)]));
        assert_eq!(v, LocalEulerValue { value: Rational::zero(), exact: true });
        let v = local_orbifold_euler(&weights(&[(1, 2), (1, 2)]));
        assert_eq!(v, LocalEulerValue { value: q(1, 4), exact: true });
        let v = local_orbifold_euler(&weights(&[(1, 3), (1, 3), (1, 3)]));
        assert_eq!(v, LocalEulerValue { value: q(1, 4), exact: false });
        let v = local_orbifold_euler(&weights(&[(1, 2), (1, 4)]));
        assert_eq!(v, LocalEulerValue { value: q(3, 8), exact: true });
        // single branch: smooth point of a curve with weight a, (1 - a + a)(1 - a)
        let v = local_orbifold_euler(&weights(&[(2, 5)]));
        assert_eq!(v.value, q(3, 5));
    }

    #[test]
    fn weight_validation() {
        assert_eq!(WeightVector::new(vec![]), Err(Error::EmptyWeights));
        assert_eq!(WeightVector::new(vec![q(3, 2)]), Err(Error::WeightOutOfRange(q(3, 2))));
        assert_eq!(WeightVector::new(vec![q(-1, 2)]), Err(Error::WeightOutOfRange(q(-1, 2))));
        let w = WeightVector::new(vec![q(1, 2), q(0, 1), q(1, 3)]).unwrap();
        assert_eq!(w.weights(), &[q(0, 1), q(1, 3), q(1, 2)]);
        assert_eq!(w.max(), &q(1, 2));
    }

    #[test]
    fn intervals() {
        let g6 = catalog("generic_lines", &[6]).unwrap();
        assert_eq!(alpha_interval(&g6).unwrap(), AlphaInterval { lo: q(1, 2), hi: q(1, 1) });
        let klein = catalog("klein", &[]).unwrap();
        assert_eq!(alpha_interval(&klein).unwrap(), AlphaInterval { lo: q(1, 7), hi: q(1, 2) });
        let pencil = catalog("pencil", &[4]).unwrap();
        assert_eq!(
            alpha_interval(&pencil),
            Err(Error::EmptyAlphaInterval(Box::new(AlphaInterval { lo: q(3, 4), hi: q(1, 2) })))
        );
        let conic = ArrangementClass::new(ComponentSpec::equal_degree(2, 2).unwrap(), TVector::new());
        assert_eq!(alpha_interval(&conic).unwrap(), AlphaInterval { lo: q(3, 4), hi: q(1, 1) });
    }

    #[test]
    fn lhs_and_rhs() {
        let g6 = catalog("generic_lines", &[6]).unwrap();
        assert_eq!(lmy_lhs_bound(&g6, &q(1, 2)).unwrap(), q(135, 4));
        assert_eq!(lmy_rhs(&g6, &q(1, 2)), q(36, 1));
        let klein = catalog("klein", &[]).unwrap();
        assert_eq!(lmy_lhs_bound(&klein, &q(1, 7)).unwrap(), q(171, 1));
        assert_eq!(lmy_rhs(&klein, &q(1, 7)), q(171, 1));
        assert_eq!(lmy_lhs_bound(&klein, &Rational::zero()).unwrap(), Rational::zero());
        assert_eq!(lmy_rhs(&klein, &Rational::zero()), Rational::zero());
        assert!(matches!(lmy_lhs_bound(&klein, &q(2, 3)), Err(Error::AlphaOutOfRange { .. })));
    }

    #[test]
    fn global_values() {
        let g6 = catalog("generic_lines", &[6]).unwrap();
        let e = global_orbifold_euler_bound(&g6, &q(1, 2)).unwrap();
        assert_eq!(e, GlobalEulerValue { value: q(3, 4), exact: true });

        let line = catalog("generic_lines", &[1]).unwrap();
        assert_eq!(global_orbifold_euler_bound(&line, &q(1, 1)).unwrap().value, q(1, 1));

        let klein = catalog("klein", &[]).unwrap();
        let e = global_orbifold_euler_bound(&klein, &q(1, 7)).unwrap();
        assert_eq!(e, GlobalEulerValue { value: Rational::zero(), exact: false });

        assert!(matches!(
            global_orbifold_euler_bound(&lines(3, &[(2, 2)]), &q(1, 2)),
            Err(Error::IdentityViolated { .. })
        ));
    }

    #[test]
    fn global_checks() {
        let g6 = catalog("generic_lines", &[6]).unwrap();
        let r = lmy_global_check(&g6, &q(1, 2)).unwrap();
        assert_eq!((r.lhs, r.rhs, r.satisfied, r.exact), (q(0, 1), q(9, 4), true, true));

        let klein = catalog("klein", &[]).unwrap();
        let r = lmy_global_check(&klein, &q(1, 7)).unwrap();
        assert_eq!((r.lhs, r.rhs, r.satisfied), (q(0, 1), q(0, 1), true));

        // 6 lines, one 4-fold point and 9 nodes; at alpha = 1/2 the 4-fold point
        // has a = 2 and local bound (1 - 1)^2 = 0.
        let fab = lines(6, &[(4, 1), (2, 9)]);
        let r = lmy_global_check(&fab, &q(1, 2)).unwrap();
        // e = 3 - 1/2 (12 - 22) + (0 - 1) + 9 (1/4 - 1) = 1/4
        assert_eq!((r.lhs, r.rhs, r.satisfied), (q(0, 1), q(3, 4), true));

        assert!(matches!(lmy_global_check(&klein, &q(1, 8)), Err(Error::AlphaOutOfRange { .. })));
    }
}
