//! Combinatorial data of a curve arrangement with ordinary singularities.
//!
//! An [`ArrangementClass`] is a component list plus a t-vector: `t_r` counts
//! the points where exactly `r` components meet. Nothing here checks that a
//! class is realizable; a class whose incidence count disagrees with the
//! Bézout pair count is still representable and simply reports
//! `validate_identity() == false`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};

/// Sparse map `r -> t_r` with `r >= 2` and `t_r > 0`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TVector {
    counts: BTreeMap<u64, u64>,
}

impl TVector {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds from `(r, t_r)` pairs. Zero counts are dropped; repeated keys add up.
    pub fn from_pairs<I: IntoIterator<Item = (u64, u64)>>(pairs: I) -> Result<Self> {
        let mut t = Self::new();
        for (r, n) in pairs {
            t.add(r, n)?;
        }
        Ok(t)
    }

    /// Adds `n` points of multiplicity `r`.
    pub fn add(&mut self, r: u64, n: u64) -> Result<()> {
        if r < 2 {
            return Err(Error::Multiplicity(r));
        }
        if n > 0 {
            *self.counts.entry(r).or_insert(0) += n;
        }
        Ok(())
    }

    pub fn get(&self, r: u64) -> u64 {
        self.counts.get(&r).copied().unwrap_or(0)
    }

    pub fn r_max(&self) -> Option<u64> {
        self.counts.keys().next_back().copied()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// `(r, t_r)` in ascending `r`.
    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (u64, u64)> + '_ {
        self.counts.iter().map(|(&r, &n)| (r, n))
    }

    /// Number of singular points, `f_0`.
    pub fn point_count(&self) -> BigInt {
        self.f_number(0)
    }

    /// `f_i = sum_r r^i t_r`.
    pub fn f_number(&self, i: u32) -> BigInt {
        self.iter().map(|(r, n)| BigInt::from(r).pow(i) * BigInt::from(n)).sum()
    }

    /// `sum_r t_r * C(r, 2)`: pairs of components meeting at the recorded points.
    pub fn incidence_pairs(&self) -> BigInt {
        self.iter().map(|(r, n)| BigInt::from(r) * BigInt::from(r - 1) / 2 * BigInt::from(n)).sum()
    }
}

impl fmt::Display for TVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("{}");
        }
        f.write_str("{")?;
        for (i, (r, n)) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "t{r}={n}")?;
        }
        f.write_str("}")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ComponentGroup {
    pub degree: u64,
    pub count: u64,
}

/// `count` smooth components of each listed `degree`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ComponentSpec {
    groups: Vec<ComponentGroup>,
    total_degree: u64,
    total_count: u64,
}

impl ComponentSpec {
    pub fn new(groups: Vec<ComponentGroup>) -> Result<Self> {
        if groups.is_empty() {
            return Err(Error::NoComponents);
        }
        let mut total_degree = 0u64;
        let mut total_count = 0u64;
        for g in &groups {
            if g.degree == 0 || g.count == 0 {
                return Err(Error::ComponentGroup { degree: g.degree, count: g.count });
            }
            total_degree =
                g.degree.checked_mul(g.count).and_then(|x| x.checked_add(total_degree)).ok_or(Error::DegreeOverflow)?;
            total_count = total_count.checked_add(g.count).ok_or(Error::DegreeOverflow)?;
        }
        Ok(Self { groups, total_degree, total_count })
    }

    pub fn lines(k: u64) -> Result<Self> {
        Self::new(vec![ComponentGroup { degree: 1, count: k }])
    }

    pub fn equal_degree(d: u64, k: u64) -> Result<Self> {
        Self::new(vec![ComponentGroup { degree: d, count: k }])
    }

    /// `l` lines and `k` conics; either count may be zero but not both.
    pub fn line_conic(l: u64, k: u64) -> Result<Self> {
        let mut groups = Vec::new();
        if l > 0 {
            groups.push(ComponentGroup { degree: 1, count: l });
        }
        if k > 0 {
            groups.push(ComponentGroup { degree: 2, count: k });
        }
        Self::new(groups)
    }

    pub fn groups(&self) -> &[ComponentGroup] {
        &self.groups
    }

    pub fn total_degree(&self) -> u64 {
        self.total_degree
    }

    pub fn total_count(&self) -> u64 {
        self.total_count
    }

    /// Number of components of degree exactly `d`.
    pub fn count_of_degree(&self, d: u64) -> u64 {
        self.groups.iter().filter(|g| g.degree == d).map(|g| g.count).sum()
    }

    pub fn is_lines(&self) -> bool {
        self.groups.iter().all(|g| g.degree == 1)
    }

    /// The common degree if every component has the same one.
    pub fn common_degree(&self) -> Option<u64> {
        let d = self.groups[0].degree;
        self.groups.iter().all(|g| g.degree == d).then_some(d)
    }

    pub fn is_equal_degree(&self, d: u64) -> bool {
        self.common_degree() == Some(d)
    }

    pub fn is_line_conic(&self) -> bool {
        self.groups.iter().all(|g| g.degree <= 2)
    }

    /// `sum_i d_i^2` over individual components.
    pub fn degree_square_sum(&self) -> BigInt {
        self.groups.iter().map(|g| BigInt::from(g.degree).pow(2) * BigInt::from(g.count)).sum()
    }

    /// `sum_{i<j} d_i d_j`, the Bézout count of transversal intersection pairs.
    pub fn pair_count(&self) -> BigInt {
        let d = BigInt::from(self.total_degree);
        (&d * &d - self.degree_square_sum()) / 2
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ArrangementClass {
    pub components: ComponentSpec,
    pub t: TVector,
}

impl ArrangementClass {
    pub fn new(components: ComponentSpec, t: TVector) -> Self {
        Self { components, t }
    }

    pub fn f_number(&self, i: u32) -> BigInt {
        self.t.f_number(i)
    }

    pub fn pair_count(&self) -> BigInt {
        self.components.pair_count()
    }

    pub fn total_degree(&self) -> u64 {
        self.components.total_degree()
    }

    /// True iff `sum_r t_r C(r,2)` equals the Bézout pair count.
    pub fn validate_identity(&self) -> bool {
        self.t.incidence_pairs() == self.pair_count()
    }

    pub fn check_identity(&self) -> Result<()> {
        let incidences = self.t.incidence_pairs();
        let pairs = self.pair_count();
        if incidences == pairs {
            Ok(())
        } else {
            Err(Error::IdentityViolated { incidences: incidences.to_string(), pairs: pairs.to_string() })
        }
    }

    /// Topological Euler number of the union curve: `-D(D-3) + sum_p mu_p`.
    pub fn euler_reduced_curve(&self) -> Result<BigInt> {
        self.check_identity()?;
        let d = BigInt::from(self.total_degree());
        let milnor: BigInt = self.t.iter().map(|(r, n)| milnor_ordinary_unchecked(r) * BigInt::from(n)).sum();
        Ok(-(&d * (&d - BigInt::from(3))) + milnor)
    }
}

/// Milnor number `(m-1)^2` of an ordinary m-fold point.
pub fn milnor_ordinary(m: u64) -> Result<BigInt> {
    if m < 2 {
        return Err(Error::Multiplicity(m));
    }
    Ok(milnor_ordinary_unchecked(m))
}

fn milnor_ordinary_unchecked(m: u64) -> BigInt {
    BigInt::from(m - 1).pow(2)
}

/// `C(n, 2)` as a big integer.
pub fn choose2(n: u64) -> BigInt {
    if n < 2 {
        BigInt::zero()
    } else {
        BigInt::from(n) * BigInt::from(n - 1) / 2
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lines(k: u64, t: &[(u64, u64)]) -> ArrangementClass {
        ArrangementClass::new(ComponentSpec::lines(k).unwrap(), TVector::from_pairs(t.iter().copied()).unwrap())
    }

    #[test]
    fn f_numbers() {
        let klein = lines(21, &[(3, 28), (4, 21)]);
        assert_eq!(klein.f_number(0), BigInt::from(49));
        assert_eq!(klein.f_number(1), BigInt::from(168));
        assert_eq!(klein.f_number(2), BigInt::from(588));
        let wiman = lines(45, &[(3, 120), (4, 45), (5, 36)]);
        assert_eq!(wiman.f_number(1), BigInt::from(720));
        let empty = lines(1, &[]);
        for i in 0..3 {
            assert_eq!(empty.f_number(i), BigInt::zero());
        }
    }

    #[test]
    fn tvector_drops_zero_and_rejects_small_r() {
        let t = TVector::from_pairs([(2, 0), (3, 4)]).unwrap();
        assert_eq!(t.iter().collect::<Vec<_>>(), vec![(3, 4)]);
        assert_eq!(t.r_max(), Some(3));
        assert_eq!(TVector::new().r_max(), None);
        assert_eq!(TVector::from_pairs([(1, 1)]), Err(Error::Multiplicity(1)));
        assert_eq!(t.to_string(), "{t3=4}");
    }

    #[test]
    fn pair_counts() {
        assert_eq!(ComponentSpec::lines(21).unwrap().pair_count(), BigInt::from(210));
        assert_eq!(ComponentSpec::line_conic(1, 1).unwrap().pair_count(), BigInt::from(2));
        assert_eq!(ComponentSpec::equal_degree(2, 2).unwrap().pair_count(), BigInt::from(4));
        // l=2, k=3: C(2,2) + 4 C(3,2) + 2*3*2
        assert_eq!(ComponentSpec::line_conic(2, 3).unwrap().pair_count(), BigInt::from(1 + 12 + 12));
    }

    #[test]
    fn component_spec_validation() {
        assert_eq!(ComponentSpec::new(vec![]), Err(Error::NoComponents));
        assert!(ComponentSpec::equal_degree(0, 3).is_err());
        assert!(ComponentSpec::equal_degree(3, 0).is_err());
        assert!(ComponentSpec::new(vec![ComponentGroup { degree: u64::MAX, count: 2 }]).is_err());
        let lc = ComponentSpec::line_conic(3, 2).unwrap();
        assert!(lc.is_line_conic() && !lc.is_lines());
        assert_eq!(lc.common_degree(), None);
        assert_eq!(lc.total_degree(), 7);
        assert_eq!(lc.total_count(), 5);
        assert!(ComponentSpec::lines(4).unwrap().is_equal_degree(1));
    }

    #[test]
    fn identity() {
        assert!(lines(21, &[(3, 28), (4, 21)]).validate_identity());
        assert!(lines(45, &[(3, 120), (4, 45), (5, 36)]).validate_identity());
        let broken = lines(3, &[(2, 2)]);
        assert!(!broken.validate_identity());
        let err = broken.check_identity().unwrap_err();
        assert!(err.to_string().contains("identity violated: 2 \u{2260} 3"), "{err}");
    }

    #[test]
    fn milnor() {
        assert_eq!(milnor_ordinary(2).unwrap(), BigInt::from(1));
        assert_eq!(milnor_ordinary(3).unwrap(), BigInt::from(4));
        assert_eq!(milnor_ordinary(5).unwrap(), BigInt::from(16));
        assert_eq!(milnor_ordinary(1), Err(Error::Multiplicity(1)));
        assert_eq!(milnor_ordinary(0), Err(Error::Multiplicity(0)));
    }

    #[test]
    fn euler_numbers() {
        let conic = ArrangementClass::new(ComponentSpec::equal_degree(2, 1).unwrap(), TVector::new());
        assert_eq!(conic.euler_reduced_curve().unwrap(), BigInt::from(2));
        // three spheres glued at one point: 3*2 - 2
        assert_eq!(lines(3, &[(3, 1)]).euler_reduced_curve().unwrap(), BigInt::from(4));
        assert_eq!(lines(21, &[(3, 28), (4, 21)]).euler_reduced_curve().unwrap(), BigInt::from(-77));
        assert!(lines(3, &[(2, 2)]).euler_reduced_curve().is_err());
        for k in 2..30u64 {
            let generic = lines(k, &[(2, k * (k - 1) / 2)]);
            let k_big = BigInt::from(k);
            let expected = -(&k_big * (&k_big - BigInt::from(3))) + choose2(k);
            assert_eq!(generic.euler_reduced_curve().unwrap(), expected);
        }
    }

    #[test]
    fn pair_count_permutation_invariant() {
        let a = ComponentSpec::new(vec![
            ComponentGroup { degree: 1, count: 3 },
            ComponentGroup { degree: 2, count: 2 },
            ComponentGroup { degree: 5, count: 1 },
        ])
        .unwrap();
        let b = ComponentSpec::new(vec![
            ComponentGroup { degree: 5, count: 1 },
            ComponentGroup { degree: 1, count: 3 },
            ComponentGroup { degree: 2, count: 2 },
        ])
        .unwrap();
        assert_eq!(a.pair_count(), b.pair_count());
    }
}
