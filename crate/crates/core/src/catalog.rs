//! Named arrangements, stored as combinatorial data.
//!
//! The extremal line arrangements below are only defined over fields with
//! roots of unity, so they are recorded by their published t-vectors rather
//! than by coordinates.
//!
//! `fermat(n)` consists of `3n` lines with `n^2` triple points and three
//! `n`-fold points. For `n = 3` both kinds of point are triple points and the
//! counts merge into `t_3 = 12`.

use std::fmt;
use std::str::FromStr;

use crate::arrangement::{ArrangementClass, ComponentSpec, TVector};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CatalogEntry {
    Icosahedron,
    Klein,
    Fermat(u64),
    Hesse,
    ExtendedHesse,
    Wiman,
    GenericLines(u64),
    Pencil(u64),
}

/// Names accepted by [`catalog`], with the number of integer parameters each takes.
pub const CATALOG_NAMES: &[(&str, usize)] = &[
    ("icosahedron", 0),
    ("klein", 0),
    ("fermat", 1),
    ("hesse", 0),
    ("extended_hesse", 0),
    ("wiman", 0),
    ("generic_lines", 1),
    ("pencil", 1),
];

impl CatalogEntry {
    pub fn parse(name: &str, params: &[u64]) -> Result<Self> {
        let key = name.trim().to_ascii_lowercase().replace('-', "_");
        let Some(&(canonical, arity)) = CATALOG_NAMES.iter().find(|(n, _)| *n == key) else {
            return Err(Error::UnknownCatalog(name.to_string()));
        };
        if params.len() != arity {
            return Err(Error::CatalogParams {
                name: canonical,
                reason: format!("takes {arity} parameter(s), got {}", params.len()),
            });
        }
        let entry = match canonical {
            "icosahedron" => Self::Icosahedron,
            "klein" => Self::Klein,
            "fermat" => Self::Fermat(params[0]),
            "hesse" => Self::Hesse,
            "extended_hesse" => Self::ExtendedHesse,
            "wiman" => Self::Wiman,
            "generic_lines" => Self::GenericLines(params[0]),
            "pencil" => Self::Pencil(params[0]),
            _ => unreachable!(),
        };
        entry.check_params()?;
        Ok(entry)
    }

    fn check_params(self) -> Result<()> {
        let (name, ok, reason) = match self {
            Self::Fermat(n) => ("fermat", n >= 3, "requires n >= 3"),
            Self::GenericLines(k) => ("generic_lines", k >= 1, "requires k >= 1"),
            Self::Pencil(k) => ("pencil", k >= 2, "requires k >= 2"),
            _ => return Ok(()),
        };
        if ok {
            Ok(())
        } else {
            Err(Error::CatalogParams { name, reason: reason.to_string() })
        }
    }

    pub fn build(self) -> Result<ArrangementClass> {
        self.check_params()?;
        let (k, t): (u64, Vec<(u64, u64)>) = match self {
            Self::Icosahedron => (15, vec![(2, 15), (3, 10), (5, 6)]),
            Self::Klein => (21, vec![(3, 28), (4, 21)]),
            Self::Fermat(n) => (3 * n, vec![(3, n * n), (n, 3)]),
            Self::Hesse => (12, vec![(2, 12), (4, 9)]),
            Self::ExtendedHesse => (21, vec![(2, 36), (4, 9), (5, 12)]),
            Self::Wiman => (45, vec![(3, 120), (4, 45), (5, 36)]),
            Self::GenericLines(k) => (k, vec![(2, k * (k - 1) / 2)]),
            Self::Pencil(k) => (k, vec![(k, 1)]),
        };
        Ok(ArrangementClass::new(ComponentSpec::lines(k)?, TVector::from_pairs(t)?))
    }

    /// The arrangements attaining equality in the line inequality `t_2 + 3/4 t_3 >= k + ...`,
    /// with Fermat taken over `fermat_range`.
    pub fn equality_list(fermat_range: std::ops::RangeInclusive<u64>) -> Vec<Self> {
        let mut v = vec![Self::Icosahedron, Self::Klein];
        v.extend(fermat_range.map(Self::Fermat));
        v.extend([Self::Hesse, Self::ExtendedHesse, Self::Wiman]);
        v
    }
}

impl fmt::Display for CatalogEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Icosahedron => f.write_str("icosahedron"),
            Self::Klein => f.write_str("klein"),
            Self::Fermat(n) => write!(f, "fermat({n})"),
            Self::Hesse => f.write_str("hesse"),
            Self::ExtendedHesse => f.write_str("extended_hesse"),
            Self::Wiman => f.write_str("wiman"),
            Self::GenericLines(k) => write!(f, "generic_lines({k})"),
            Self::Pencil(k) => write!(f, "pencil({k})"),
        }
    }
}

impl FromStr for CatalogEntry {
    type Err = Error;

    /// Parses `name` or `name(p)`, e.g. `fermat(4)`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s.split_once('(') {
            Some((name, rest)) => {
                let inner = rest.strip_suffix(')').ok_or_else(|| Error::UnknownCatalog(s.to_string()))?;
                let p: u64 = inner.trim().parse().map_err(|_| Error::UnknownCatalog(s.to_string()))?;
                Self::parse(name, &[p])
            }
            None => Self::parse(s, &[]),
        }
    }
}

/// Looks up a named arrangement class.
pub fn catalog(name: &str, params: &[u64]) -> Result<ArrangementClass> {
    CatalogEntry::parse(name, params)?.build()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(class: &ArrangementClass) -> Vec<(u64, u64)> {
        class.t.iter().collect()
    }

    #[test]
    fn published_entries() {
        let klein = catalog("klein", &[]).unwrap();
        assert_eq!(klein.components.total_count(), 21);
        assert_eq!(t(&klein), vec![(3, 28), (4, 21)]);
        let wiman = catalog("wiman", &[]).unwrap();
        assert_eq!(wiman.components.total_count(), 45);
        assert_eq!(t(&wiman), vec![(3, 120), (4, 45), (5, 36)]);
        let f4 = catalog("fermat", &[4]).unwrap();
        assert_eq!(f4.components.total_count(), 12);
        assert_eq!(t(&f4), vec![(3, 16), (4, 3)]);
    }

    #[test]
    fn fermat_three_merges() {
        let f3 = catalog("fermat", &[3]).unwrap();
        assert_eq!(f3.components.total_count(), 9);
        assert_eq!(t(&f3), vec![(3, 12)]);
        assert!(f3.validate_identity());
    }

    #[test]
    fn every_entry_satisfies_identity() {
        for e in CatalogEntry::equality_list(3..=20) {
            assert!(e.build().unwrap().validate_identity(), "{e}");
        }
        for k in 1..40 {
            assert!(CatalogEntry::GenericLines(k).build().unwrap().validate_identity());
        }
        for k in 2..40 {
            assert!(CatalogEntry::Pencil(k).build().unwrap().validate_identity());
        }
    }

    #[test]
    fn errors() {
        assert!(matches!(catalog("dodecahedron", &[]), Err(Error::UnknownCatalog(_))));
        assert!(matches!(catalog("fermat", &[2]), Err(Error::CatalogParams { .. })));
        assert!(matches!(catalog("fermat", &[]), Err(Error::CatalogParams { .. })));
        assert!(matches!(catalog("klein", &[1]), Err(Error::CatalogParams { .. })));
        assert!(matches!(catalog("pencil", &[1]), Err(Error::CatalogParams { .. })));
    }

    #[test]
    fn names_round_trip() {
        for s in ["klein", "fermat(7)", "extended_hesse", "pencil(4)", "generic_lines(6)"] {
            let e: CatalogEntry = s.parse().unwrap();
            assert_eq!(e.to_string(), s);
        }
        assert_eq!("Extended-Hesse".parse::<CatalogEntry>().unwrap(), CatalogEntry::ExtendedHesse);
    }
}
