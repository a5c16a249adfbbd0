//! Scalars of the bounded chain `B = {0, 1, ..., top}`.
//!
//! The chain carries two operations: `oplus` (join, i.e. `max`) and `otimes`
//! (meet, i.e. `min`). Both are idempotent and commutative, `0` is neutral
//! for `oplus` and `top` is neutral for `otimes`, and `otimes` distributes
//! over `oplus`, so `(B, oplus, otimes)` is a commutative semiring in which
//! every operation *selects* one of its operands — no new values are ever
//! produced. All comparisons are exact integer comparisons on ticks.
//!
//! A scalar remembers the `top` of the chain it belongs to. Mixing scalars
//! from different chains is a usage bug and is reported as
//! [`Error::ContextMismatch`] instead of being silently coerced.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One element of the chain, stored as a tick count in `0..=top`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
#[serde(try_from = "RawScalar", into = "RawScalar")]
pub struct Scalar {
    ticks: u32,
    top: u32,
}

#[derive(Serialize, Deserialize)]
struct RawScalar {
    ticks: u32,
    top: u32,
}

impl From<Scalar> for RawScalar {
    fn from(s: Scalar) -> Self {
        RawScalar {
            ticks: s.ticks,
            top: s.top,
        }
    }
}

impl TryFrom<RawScalar> for Scalar {
    type Error = Error;
    fn try_from(raw: RawScalar) -> Result<Self> {
        Scalar::new(raw.ticks, raw.top)
    }
}

impl Scalar {
    pub fn new(ticks: u32, top: u32) -> Result<Self> {
        if top == 0 {
            return Err(Error::ZeroTop);
        }
        if ticks > top {
            return Err(Error::TickOutOfRange {
                value: ticks as u64,
                top,
            });
        }
        Ok(Scalar { ticks, top })
    }

    /// Least element of the chain; the `oplus` identity.
    pub fn zero(top: u32) -> Self {
        Scalar { ticks: 0, top }
    }

    /// Greatest element of the chain; the `otimes` identity.
    pub fn one(top: u32) -> Self {
        Scalar { ticks: top, top }
    }

    pub fn ticks(self) -> u32 {
        self.ticks
    }

    pub fn top(self) -> u32 {
        self.top
    }

    pub fn is_zero(self) -> bool {
        self.ticks == 0
    }

    pub fn is_one(self) -> bool {
        self.ticks == self.top
    }

    pub(crate) fn same_context(self, rhs: Self) -> Result<()> {
        if self.top == rhs.top {
            Ok(())
        } else {
            Err(Error::ContextMismatch {
                left: self.top,
                right: rhs.top,
            })
        }
    }

    /// Join: `max` of the two scalars.
    pub fn oplus(self, rhs: Self) -> Result<Self> {
        self.same_context(rhs)?;
        Ok(Scalar {
            ticks: self.ticks.max(rhs.ticks),
            top: self.top,
        })
    }

    /// Meet: `min` of the two scalars.
    pub fn otimes(self, rhs: Self) -> Result<Self> {
        self.same_context(rhs)?;
        Ok(Scalar {
            ticks: self.ticks.min(rhs.ticks),
            top: self.top,
        })
    }

    /// Same chain refined `factor` times: every tick is subdivided, so the
    /// element keeps its position while midpoints of the original ticks
    /// become representable. Used by the enumeration grids.
    pub fn rescale(self, factor: u32) -> Self {
        Scalar {
            ticks: self.ticks * factor,
            top: self.top * factor,
        }
    }
}

impl std::fmt::Display for Scalar {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.ticks)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(t: u32) -> Scalar {
        Scalar::new(t, 10).unwrap()
    }

    #[test]
    fn oplus_is_max_otimes_is_min() {
        assert_eq!(s(3).oplus(s(7)).unwrap(), s(7));
        assert_eq!(s(3).otimes(s(7)).unwrap(), s(3));
        assert_eq!(s(5).oplus(s(5)).unwrap(), s(5));
        assert_eq!(s(5).otimes(s(5)).unwrap(), s(5));
    }

    #[test]
    fn identities() {
        let z = Scalar::zero(10);
        let i = Scalar::one(10);
        for t in 0..=10 {
            assert_eq!(s(t).oplus(z).unwrap(), s(t));
            assert_eq!(s(t).otimes(i).unwrap(), s(t));
            assert_eq!(s(t).otimes(z).unwrap(), z);
            assert_eq!(s(t).oplus(i).unwrap(), i);
        }
    }

    #[test]
    fn selection_property() {
        // No operation ever leaves the set of its operands.
        for a in 0..=10u32 {
            for b in 0..=10u32 {
                let p = s(a).oplus(s(b)).unwrap();
                let t = s(a).otimes(s(b)).unwrap();
                assert!(p == s(a) || p == s(b));
                assert!(t == s(a) || t == s(b));
            }
        }
    }

    #[test]
    fn mixed_contexts_rejected() {
        let a = Scalar::new(3, 10).unwrap();
        let b = Scalar::new(3, 12).unwrap();
        assert_eq!(
            a.oplus(b),
            Err(Error::ContextMismatch {
                left: 10,
                right: 12
            })
        );
        assert_eq!(
            a.otimes(b),
            Err(Error::ContextMismatch {
                left: 10,
                right: 12
            })
        );
    }

    #[test]
    fn construction_checks() {
        assert_eq!(
            Scalar::new(11, 10),
            Err(Error::TickOutOfRange { value: 11, top: 10 })
        );
        assert_eq!(Scalar::new(0, 0), Err(Error::ZeroTop));
    }

    #[test]
    fn rescale_preserves_order_and_endpoints() {
        let a = s(4).rescale(2);
        assert_eq!((a.ticks(), a.top()), (8, 20));
        assert_eq!(Scalar::one(10).rescale(2), Scalar::one(20));
        assert_eq!(Scalar::zero(10).rescale(2), Scalar::zero(20));
    }
}
