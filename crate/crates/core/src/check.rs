//! Three-valued outcome of a bound check.

use core::fmt;

/// Outcome of `measured ≤ bound` with an uncertainty band of width `tolerance`.
///
/// * `Pass` when `measured ≤ bound`,
/// * `Inconclusive` when `bound < measured ≤ bound + tolerance`,
/// * `Fail` otherwise (including NaN).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CheckStatus {
    Pass,
    Fail,
    Inconclusive,
}

impl CheckStatus {
    pub fn classify(measured: f64, bound: f64, tolerance: f64) -> Self {
        if measured <= bound {
            CheckStatus::Pass
        } else if measured <= bound + tolerance {
            CheckStatus::Inconclusive
        } else {
            CheckStatus::Fail
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
            CheckStatus::Inconclusive => "inconclusive",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "pass" => Some(CheckStatus::Pass),
            "fail" => Some(CheckStatus::Fail),
            "inconclusive" => Some(CheckStatus::Inconclusive),
            _ => None,
        }
    }
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classify_bands() {
        assert_eq!(CheckStatus::classify(1.0, 1.0, 0.0), CheckStatus::Pass);
        assert_eq!(CheckStatus::classify(1.05, 1.0, 0.1), CheckStatus::Inconclusive);
        assert_eq!(CheckStatus::classify(1.2, 1.0, 0.1), CheckStatus::Fail);
        assert_eq!(CheckStatus::classify(f64::NAN, 1.0, 0.1), CheckStatus::Fail);
        for s in [CheckStatus::Pass, CheckStatus::Fail, CheckStatus::Inconclusive] {
            assert_eq!(CheckStatus::parse(s.as_str()), Some(s));
        }
    }
}
