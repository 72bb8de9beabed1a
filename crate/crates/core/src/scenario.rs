use crate::error::{Error, Result};
use std::fmt;
use std::str::FromStr;

/// Number of binary measurement settings per party, written `mA x mB x mC`.
///
/// The three parties are conventionally called Alice, Bob and Cecil; index
/// order throughout the crate is (Alice, Bob, Cecil) with Alice slowest in
/// any flattened layout.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Scenario {
    m: [usize; 3],
}

impl Scenario {
    pub const MIN_SETTINGS: usize = 2;
    pub const MAX_SETTINGS: usize = 6;

    pub fn new(m_a: usize, m_b: usize, m_c: usize) -> Result<Self> {
        let ok = |m| (Self::MIN_SETTINGS..=Self::MAX_SETTINGS).contains(&m);
        if ok(m_a) && ok(m_b) && ok(m_c) {
            Ok(Self { m: [m_a, m_b, m_c] })
        } else {
            Err(Error::BadScenario(m_a, m_b, m_c))
        }
    }

    pub fn settings(&self) -> [usize; 3] {
        self.m
    }

    /// Dimension of the full-correlation space, `mA * mB * mC`.
    pub fn dim(&self) -> usize {
        self.m[0] * self.m[1] * self.m[2]
    }

    pub fn total_settings(&self) -> usize {
        self.m[0] + self.m[1] + self.m[2]
    }

    /// Number of distinct deterministic correlation vertices,
    /// `2^(mA+mB+mC) / 4` after identifying sign patterns that produce the
    /// same rank-1 tensor.
    pub fn vertex_count(&self) -> usize {
        1usize << (self.total_settings() - 2)
    }

    /// Flat index with Alice slowest and Cecil fastest.
    pub fn flat_index(&self, i: usize, j: usize, k: usize) -> usize {
        debug_assert!(i < self.m[0] && j < self.m[1] && k < self.m[2]);
        (i * self.m[1] + j) * self.m[2] + k
    }

    /// True when all parties have the same number of settings.
    pub fn is_symmetric(&self) -> bool {
        self.m[0] == self.m[1] && self.m[1] == self.m[2]
    }
}

impl fmt::Display for Scenario {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}x{}", self.m[0], self.m[1], self.m[2])
    }
}

impl FromStr for Scenario {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::BadScenario(0, 0, 0);
        let mut parts = s.split(['x', 'X']);
        let mut next = || -> Result<usize> {
            parts
                .next()
                .ok_or_else(bad)?
                .trim()
                .parse()
                .map_err(|_| bad())
        };
        let (a, b, c) = (next()?, next()?, next()?);
        Self::new(a, b, c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display_round_trip() {
        let s: Scenario = "3x4x3".parse().unwrap();
        assert_eq!(s.settings(), [3, 4, 3]);
        assert_eq!(s.to_string(), "3x4x3");
        assert_eq!(s.dim(), 36);
        assert_eq!(s.vertex_count(), 256);
    }

    #[test]
    fn rejects_out_of_range_counts() {
        assert!(Scenario::new(1, 2, 2).is_err());
        assert!(Scenario::new(2, 7, 2).is_err());
        assert!("2x2".parse::<Scenario>().is_err());
        assert!("axbxc".parse::<Scenario>().is_err());
    }

    #[test]
    fn vertex_counts_match_formula() {
        assert_eq!(Scenario::new(2, 2, 2).unwrap().vertex_count(), 16);
        assert_eq!(Scenario::new(5, 5, 5).unwrap().vertex_count(), 8192);
        assert_eq!(Scenario::new(3, 3, 4).unwrap().vertex_count(), 256);
    }
}
