//! Log-domain nonnegative scalars.
//!
//! Fleet sizes, fleet qubits, and fleet watts reach ~10^76 in the hardest
//! regimes, far past anything worth carrying in linear f64 once intermediate
//! products are involved. [`LogQuantity`] stores `log10` of a positive value
//! (or an explicit zero) and does all multiplicative arithmetic by exponent
//! addition.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::Error;
use crate::Result;

const LOG10_2: f64 = std::f64::consts::LOG10_2;

/// Largest log10 for which a linear `value` field is emitted alongside the
/// exponent during serialization.
pub const LINEAR_EMIT_MAX_LOG10: f64 = 300.0;

/// Exact integer floor/ceil are applied only below this magnitude; above it
/// a ±1 on the integer part is numerically invisible at the log10 reporting
/// granularity used throughout.
pub const EXACT_ROUNDING_MAX_LOG10: f64 = 15.0;

/// A nonnegative scalar carried as `log10(value)`, with zero kept as an
/// explicit flag so that it stays absorbing under multiplication.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogQuantity {
    zero: bool,
    log10: f64,
}

impl LogQuantity {
    pub const ZERO: LogQuantity = LogQuantity {
        zero: true,
        log10: f64::NEG_INFINITY,
    };
    pub const ONE: LogQuantity = LogQuantity {
        zero: false,
        log10: 0.0,
    };

    pub fn from_value(x: f64) -> Result<Self> {
        if !x.is_finite() || x < 0.0 {
            return Err(Error::invalid(format!(
                "LogQuantity requires a finite nonnegative value, got {x}"
            )));
        }
        if x == 0.0 {
            return Ok(Self::ZERO);
        }
        Ok(LogQuantity {
            zero: false,
            log10: x.log10(),
        })
    }

    pub fn from_log10(log10: f64) -> Result<Self> {
        if !log10.is_finite() {
            return Err(Error::invalid(format!(
                "LogQuantity log10 exponent must be finite, got {log10}"
            )));
        }
        Ok(LogQuantity { zero: false, log10 })
    }

    /// The quantity `2^exponent`.
    pub fn from_log2(exponent: f64) -> Result<Self> {
        if !exponent.is_finite() {
            return Err(Error::invalid(format!(
                "LogQuantity log2 exponent must be finite, got {exponent}"
            )));
        }
        Ok(LogQuantity {
            zero: false,
            log10: exponent * LOG10_2,
        })
    }

    pub fn is_zero(&self) -> bool {
        self.zero
    }

    /// `log10` of the value; `None` for zero.
    pub fn log10(&self) -> Option<f64> {
        if self.zero {
            None
        } else {
            Some(self.log10)
        }
    }

    /// `log10` with zero mapped to negative infinity, for ordering and
    /// plotting.
    pub fn log10_or_neg_inf(&self) -> f64 {
        if self.zero {
            f64::NEG_INFINITY
        } else {
            self.log10
        }
    }

    /// Linear value when it fits in f64 range comfortably
    /// (|log10| < [`LINEAR_EMIT_MAX_LOG10`]); `Some(0.0)` for zero.
    pub fn value(&self) -> Option<f64> {
        if self.zero {
            return Some(0.0);
        }
        if self.log10.abs() < LINEAR_EMIT_MAX_LOG10 {
            let v = 10f64.powf(self.log10);
            // Integer quantities (iteration counts, machine counts) round-trip
            // through log10 with ~1e-12 relative noise; snap them back.
            let r = v.round();
            if r >= 1.0 && (v - r).abs() < 1e-9 * v {
                Some(r)
            } else {
                Some(v)
            }
        } else {
            None
        }
    }

    pub fn mul(self, other: LogQuantity) -> LogQuantity {
        if self.zero || other.zero {
            return Self::ZERO;
        }
        LogQuantity {
            zero: false,
            log10: self.log10 + other.log10,
        }
    }

    /// Division; `other` must be nonzero.
    pub fn div(self, other: LogQuantity) -> Result<LogQuantity> {
        if other.zero {
            return Err(Error::invalid("division of LogQuantity by zero"));
        }
        if self.zero {
            return Ok(Self::ZERO);
        }
        Ok(LogQuantity {
            zero: false,
            log10: self.log10 - other.log10,
        })
    }

    /// Addition via log-sum-exp in base 10.
    pub fn add(self, other: LogQuantity) -> LogQuantity {
        match (self.zero, other.zero) {
            (true, true) => Self::ZERO,
            (true, false) => other,
            (false, true) => self,
            (false, false) => {
                let (hi, lo) = if self.log10 >= other.log10 {
                    (self.log10, other.log10)
                } else {
                    (other.log10, self.log10)
                };
                LogQuantity {
                    zero: false,
                    log10: hi + (1.0 + 10f64.powf(lo - hi)).log10(),
                }
            }
        }
    }

    pub fn powi(self, n: i32) -> LogQuantity {
        if self.zero {
            return if n == 0 { Self::ONE } else { Self::ZERO };
        }
        LogQuantity {
            zero: false,
            log10: self.log10 * f64::from(n),
        }
    }

    pub fn sqrt(self) -> LogQuantity {
        if self.zero {
            return Self::ZERO;
        }
        LogQuantity {
            zero: false,
            log10: self.log10 / 2.0,
        }
    }

    /// Integer ceiling, applied exactly while the value is representable as
    /// an integer (log10 < 15); identity above, where a unit shift is
    /// irrelevant at log10 reporting granularity.
    pub fn ceil(self) -> LogQuantity {
        self.round_integer(f64::ceil)
    }

    /// Integer floor under the same exactness regime as [`Self::ceil`].
    pub fn floor(self) -> LogQuantity {
        self.round_integer(f64::floor)
    }

    fn round_integer(self, f: fn(f64) -> f64) -> LogQuantity {
        if self.zero || self.log10 >= EXACT_ROUNDING_MAX_LOG10 {
            return self;
        }
        let v = 10f64.powf(self.log10);
        // Snap values a hair away from an integer before rounding, so that
        // log-domain round-trips cannot push e.g. 614.0 to 613.999999.
        let snapped = if (v - v.round()).abs() < 1e-9 * v.max(1.0) {
            v.round()
        } else {
            v
        };
        let r = f(snapped);
        if r <= 0.0 {
            return Self::ZERO;
        }
        LogQuantity {
            zero: false,
            log10: r.log10(),
        }
    }

    /// Compare two quantities.
    pub fn cmp_value(&self, other: &LogQuantity) -> std::cmp::Ordering {
        self.log10_or_neg_inf()
            .partial_cmp(&other.log10_or_neg_inf())
            .expect("log10 values are never NaN")
    }

    pub fn min(self, other: LogQuantity) -> LogQuantity {
        if self.cmp_value(&other) == std::cmp::Ordering::Greater {
            other
        } else {
            self
        }
    }
}

/// The positive ratio `numerator_ln / denominator_ln` of two logarithms of
/// probabilities in (0,1). Both inputs must be strictly negative; anything
/// else signals a probability outside (0,1) upstream.
pub fn ratio_of_logs(numerator_ln: f64, denominator_ln: f64) -> Result<LogQuantity> {
    if !(numerator_ln < 0.0) || !(denominator_ln < 0.0) {
        return Err(Error::invalid(format!(
            "ratio_of_logs requires strictly negative logs, got {numerator_ln} / {denominator_ln}"
        )));
    }
    LogQuantity::from_log10((-numerator_ln).log10() - (-denominator_ln).log10())
}

impl Serialize for LogQuantity {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("LogQuantity", 3)?;
        s.serialize_field("is_zero", &self.zero)?;
        s.serialize_field("log10", &self.log10())?;
        s.serialize_field("value", &self.value())?;
        s.end()
    }
}

impl std::fmt::Display for LogQuantity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.zero {
            write!(f, "0")
        } else if let Some(v) = self.value() {
            write!(f, "{v:.6e}")
        } else {
            write!(f, "10^{:.4}", self.log10)
        }
    }
}
