//! Rational line arrangements in the projective plane.
//!
//! Lines and points are primitive integer triples (gcd 1, first nonzero entry
//! positive), so equal projective objects have identical representations and
//! grouping intersection points is exact hashing.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::arrangement::{ArrangementClass, ComponentSpec, TVector};
use crate::error::{Error, Result};
use crate::rational::Rational;

fn canonical_triple(mut v: [BigInt; 3]) -> Result<[BigInt; 3]> {
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if g.is_zero() {
        return Err(Error::ZeroTriple);
    }
    let lead_negative = v.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative());
    for x in &mut v {
        *x /= &g;
        if lead_negative {
            *x = -&*x;
        }
    }
    Ok(v)
}

fn cross(a: &[BigInt; 3], b: &[BigInt; 3]) -> [BigInt; 3] {
    [&a[1] * &b[2] - &a[2] * &b[1], &a[2] * &b[0] - &a[0] * &b[2], &a[0] * &b[1] - &a[1] * &b[0]]
}

fn write_triple(f: &mut fmt::Formatter<'_>, v: &[BigInt; 3], sep: &str) -> fmt::Result {
    write!(f, "[{}{sep}{}{sep}{}]", v[0], v[1], v[2])
}

/// The line `a x + b y + c z = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjectiveLine([BigInt; 3]);

impl ProjectiveLine {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>, c: impl Into<BigInt>) -> Result<Self> {
        Self::from_coefficients([a.into(), b.into(), c.into()])
    }

    pub fn from_coefficients(v: [BigInt; 3]) -> Result<Self> {
        canonical_triple(v).map(Self)
    }

    /// Clears denominators of rational coefficients.
    pub fn from_rationals(v: [Rational; 3]) -> Result<Self> {
        let lcm = v.iter().fold(BigInt::from(1), |l, x| l.lcm(x.denom()));
        let ints = v.map(|x| x.numer() * (&lcm / x.denom()));
        Self::from_coefficients(ints)
    }

    pub fn coefficients(&self) -> &[BigInt; 3] {
        &self.0
    }

    pub fn contains(&self, p: &ProjectivePoint) -> bool {
        let s: BigInt = self.0.iter().zip(&p.0).map(|(a, b)| a * b).sum();
        s.is_zero()
    }
}

impl fmt::Display for ProjectiveLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_triple(f, &self.0, ", ")
    }
}

/// The point `[x : y : z]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjectivePoint([BigInt; 3]);

impl ProjectivePoint {
    pub fn new(x: impl Into<BigInt>, y: impl Into<BigInt>, z: impl Into<BigInt>) -> Result<Self> {
        canonical_triple([x.into(), y.into(), z.into()]).map(Self)
    }

    pub fn coordinates(&self) -> &[BigInt; 3] {
        &self.0
    }
}

impl fmt::Display for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_triple(f, &self.0, ":")
    }
}

/// The unique common point of two distinct lines.
pub fn line_intersection(l1: &ProjectiveLine, l2: &ProjectiveLine) -> Result<ProjectivePoint> {
    if l1 == l2 {
        return Err(Error::IdenticalLines(l1.to_string()));
    }
    canonical_triple(cross(&l1.0, &l2.0)).map(ProjectivePoint)
}

/// An intersection point with the indices of the lines through it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Incidence {
    pub point: ProjectivePoint,
    pub lines: BTreeSet<usize>,
}

/// All intersection points of the arrangement, sorted by point.
pub fn intersection_points(lines: &[ProjectiveLine]) -> Result<Vec<Incidence>> {
    if lines.len() < 2 {
        return Err(Error::TooFewLines(lines.len()));
    }
    let mut seen: HashMap<&ProjectiveLine, usize> = HashMap::new();
    for (i, l) in lines.iter().enumerate() {
        if let Some(&first) = seen.get(l) {
            return Err(Error::DuplicateLine { line: l.to_string(), first, second: i });
        }
        seen.insert(l, i);
    }

    let mut points: HashMap<ProjectivePoint, BTreeSet<usize>> = HashMap::new();
    for i in 0..lines.len() {
        for j in i + 1..lines.len() {
            let p = line_intersection(&lines[i], &lines[j])?;
            let through = points.entry(p).or_default();
            through.insert(i);
            through.insert(j);
        }
    }
    let mut out: Vec<Incidence> = points.into_iter().map(|(point, lines)| Incidence { point, lines }).collect();
    out.sort_by(|a, b| a.point.cmp(&b.point));
    Ok(out)
}

/// Combinatorial class of a line arrangement: `t_r` counts points on exactly `r` lines.
pub fn t_vector_from_lines(lines: &[ProjectiveLine]) -> Result<ArrangementClass> {
    let points = intersection_points(lines)?;
    let mut t = TVector::new();
    for p in &points {
        t.add(p.lines.len() as u64, 1)?;
    }
    let class = ArrangementClass::new(ComponentSpec::lines(lines.len() as u64)?, t);
    debug_assert!(class.validate_identity());
    Ok(class)
}
