use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigUint;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

/// An exact bound value. Powers stay symbolic for display but always
/// compare through their exact integer value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BoundValue {
    Integer(BigUint),
    /// `multiplier * base^exponent`.
    Power {
        multiplier: BigUint,
        base: usize,
        exponent: usize,
    },
}

impl BoundValue {
    pub fn int(v: impl Into<BigUint>) -> Self {
        BoundValue::Integer(v.into())
    }

    pub fn power(multiplier: impl Into<BigUint>, base: usize, exponent: usize) -> Self {
        BoundValue::Power {
            multiplier: multiplier.into(),
            base,
            exponent,
        }
    }

    pub fn to_biguint(&self) -> BigUint {
        match self {
            BoundValue::Integer(v) => v.clone(),
            BoundValue::Power {
                multiplier,
                base,
                exponent,
            } => multiplier * BigUint::from(*base).pow(*exponent as u32),
        }
    }

    /// Multiplies by a list size, keeping the symbolic form.
    pub fn times(self, factor: usize) -> Self {
        match self {
            BoundValue::Integer(v) => BoundValue::Integer(v * factor),
            BoundValue::Power {
                multiplier,
                base,
                exponent,
            } => BoundValue::Power {
                multiplier: multiplier * factor,
                base,
                exponent,
            },
        }
    }
}

impl PartialOrd for BoundValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for BoundValue {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (
                BoundValue::Power { multiplier: m1, base: b1, exponent: e1 },
                BoundValue::Power { multiplier: m2, base: b2, exponent: e2 },
            ) if b1 == b2 && m1 == m2 => e1.cmp(e2),
            _ => self.to_biguint().cmp(&other.to_biguint()),
        }
    }
}

impl fmt::Display for BoundValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundValue::Integer(v) => write!(f, "{v}"),
            BoundValue::Power {
                multiplier,
                base,
                exponent,
            } => match (*multiplier == BigUint::from(1u8), *exponent == 0) {
                (_, true) => write!(f, "{multiplier}"),
                (true, false) => write!(f, "{base}^{exponent}"),
                (false, false) => write!(f, "{multiplier}*{base}^{exponent}"),
            },
        }
    }
}

/// What a bound limits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Quantity {
    /// Number of codewords.
    Size,
    /// Largest admissible length.
    Length,
    /// Largest admissible minimum distance.
    Distance,
    /// Largest admissible dimension.
    Dimension,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundResult {
    pub name: String,
    pub quantity: Quantity,
    pub value: Option<BoundValue>,
    pub applicable: bool,
    /// Why the bound does not apply, or extra detail when it does.
    pub reason: Option<String>,
    pub citation: String,
    pub assumptions: Vec<String>,
    pub tightest: bool,
}

impl BoundResult {
    pub fn ok(name: &str, quantity: Quantity, value: BoundValue, citation: &str) -> Self {
        BoundResult {
            name: name.to_string(),
            quantity,
            value: Some(value),
            applicable: true,
            reason: None,
            citation: citation.to_string(),
            assumptions: Vec::new(),
            tightest: false,
        }
    }

    pub fn inapplicable(name: &str, quantity: Quantity, citation: &str, reason: impl Into<String>) -> Self {
        BoundResult {
            name: name.to_string(),
            quantity,
            value: None,
            applicable: false,
            reason: Some(reason.into()),
            citation: citation.to_string(),
            assumptions: Vec::new(),
            tightest: false,
        }
    }

    pub fn assume(mut self, a: &str) -> Self {
        self.assumptions.push(a.to_string());
        self
    }

    pub fn with_reason(mut self, r: impl Into<String>) -> Self {
        self.reason = Some(r.into());
        self
    }

    /// The value as an exact integer, when applicable.
    pub fn exact(&self) -> Option<BigUint> {
        self.value.as_ref().filter(|_| self.applicable).map(BoundValue::to_biguint)
    }
}

impl Serialize for BoundResult {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("BoundResult", 9)?;
        st.serialize_field("name", &self.name)?;
        st.serialize_field("quantity", &self.quantity)?;
        st.serialize_field("value", &self.value.as_ref().map(|v| v.to_biguint().to_string()))?;
        st.serialize_field("form", &self.value.as_ref().map(|v| v.to_string()))?;
        st.serialize_field("applicable", &self.applicable)?;
        st.serialize_field("reason", &self.reason)?;
        st.serialize_field("citation", &self.citation)?;
        st.serialize_field("assumptions", &self.assumptions)?;
        st.serialize_field("tightest", &self.tightest)?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn power_compares_by_value() {
        let a = BoundValue::power(3u8, 2, 17);
        let b = BoundValue::int(393216u32);
        assert_eq!(a.cmp(&b), Ordering::Equal);
        assert!(BoundValue::power(1u8, 2, 10) < BoundValue::int(1025u32));
        assert_eq!(a.to_string(), "3*2^17");
        assert_eq!(BoundValue::power(1u8, 2, 10).times(4).to_string(), "4*2^10");
    }
}
