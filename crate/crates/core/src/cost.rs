//! Integer path costs.
//!
//! Every search in this crate works on [`Cost`], a non-negative 64-bit
//! integer with a distinguished [`Cost::INFINITY`]. Finite costs are capped at
//! `i64::MAX` so that the sum of two finite costs always fits in a `u64`;
//! exceeding the cap is a hard error rather than a silent wraparound.

use std::fmt;
use std::iter::Sum;
use std::ops::Add;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CostError {
    #[error("cost overflow: {0} + {1} exceeds the 63-bit cost range")]
    Overflow(u64, u64),
    #[error("raw cost {raw} at resolution {resolution} is not representable")]
    Unrepresentable { raw: f64, resolution: u64 },
    #[error("resolution must be positive")]
    ZeroResolution,
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Cost(u64);

impl Cost {
    pub const ZERO: Cost = Cost(0);
    /// Largest finite cost.
    pub const MAX_FINITE: Cost = Cost(i64::MAX as u64);
    /// Strictly greater than every finite cost.
    pub const INFINITY: Cost = Cost(u64::MAX);

    /// Panics if `value` exceeds [`Cost::MAX_FINITE`].
    pub const fn new(value: u64) -> Cost {
        assert!(value <= i64::MAX as u64, "finite cost exceeds the 63-bit range");
        Cost(value)
    }

    pub const fn get(self) -> u64 {
        self.0
    }

    pub const fn is_infinite(self) -> bool {
        self.0 == u64::MAX
    }

    pub const fn is_finite(self) -> bool {
        !self.is_infinite()
    }

    /// Exact addition. `INFINITY + x = INFINITY`.
    pub fn checked_add(self, rhs: Cost) -> Result<Cost, CostError> {
        if self.is_infinite() || rhs.is_infinite() {
            return Ok(Cost::INFINITY);
        }
        let sum = self.0 + rhs.0;
        if sum > Cost::MAX_FINITE.0 {
            Err(CostError::Overflow(self.0, rhs.0))
        } else {
            Ok(Cost(sum))
        }
    }

    /// Finite `self + delta`, used when stepping f-bounds.
    pub fn plus(self, delta: u64) -> Cost {
        self + Cost::new(delta.min(Cost::MAX_FINITE.0))
    }

    /// Arithmetic mean rounded down; both operands must be finite.
    pub fn midpoint(self, other: Cost) -> Cost {
        debug_assert!(self.is_finite() && other.is_finite());
        Cost(self.0 / 2 + other.0 / 2 + (self.0 % 2 + other.0 % 2) / 2)
    }
}

/// Panicking addition: overflow of the finite range is a hard error.
impl Add for Cost {
    type Output = Cost;

    fn add(self, rhs: Cost) -> Cost {
        match self.checked_add(rhs) {
            Ok(c) => c,
            Err(e) => panic!("{e}"),
        }
    }
}

impl Sum for Cost {
    fn sum<I: Iterator<Item = Cost>>(iter: I) -> Cost {
        iter.fold(Cost::ZERO, |a, b| a + b)
    }
}

impl From<u32> for Cost {
    fn from(v: u32) -> Cost {
        Cost(v as u64)
    }
}

impl fmt::Debug for Cost {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_infinite() {
            f.write_str("Cost(inf)")
        } else {
            write!(f, "Cost({})", self.0)
        }
    }
}

impl fmt::Display for Cost {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_infinite() {
            f.write_str("inf")
        } else {
            write!(f, "{}", self.0)
        }
    }
}

/// Converts a real-valued cost into integer units: `round(raw * resolution)`,
/// ties away from zero.
pub fn discretize(raw: f64, resolution: u64) -> Result<Cost, CostError> {
    if resolution == 0 {
        return Err(CostError::ZeroResolution);
    }
    let scaled = (raw * resolution as f64).round();
    if !raw.is_finite() || raw < 0.0 || !(scaled < 9.223_372_036_854_775_807e18) {
        return Err(CostError::Unrepresentable { raw, resolution });
    }
    Ok(Cost(scaled as u64))
}

/// Exact counterpart of [`discretize`] for a rational `num / den`, computed in
/// integer arithmetic so no float rounding enters the domain cost tables.
pub fn discretize_ratio(num: u64, den: u64, resolution: u64) -> Result<Cost, CostError> {
    if resolution == 0 {
        return Err(CostError::ZeroResolution);
    }
    assert!(den > 0, "zero denominator");
    let product = num as u128 * resolution as u128;
    let den = den as u128;
    let rounded = (2 * product + den) / (2 * den);
    if rounded > Cost::MAX_FINITE.0 as u128 {
        return Err(CostError::Unrepresentable {
            raw: num as f64 / den as f64,
            resolution,
        });
    }
    Ok(Cost(rounded as u64))
}
