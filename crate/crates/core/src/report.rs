//! Machine-readable reports and the documented discrepancies they can carry.

use serde::Serialize;

use crate::params::SuzukiParams;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Discrepancy {
    /// The closed low-range hypersurface count `C(t+4,4) - C(t+2,4)` is off;
    /// the kernel dimension is `C(t+2,4)`.
    KappaLowRangeFormula,
    /// The second degree-`(q0+1)` relation is often written with `x^q y`; pole
    /// orders and point evaluation require `x^q0 y`.
    R3Exponent,
    /// `|(2q + 2q0 + 1) P_inf|` was said to embed into `P^9`; counting gives `P^8`.
    SecondEmbeddingDimension,
}

impl Discrepancy {
    pub fn describe(self) -> &'static str {
        match self {
            Discrepancy::KappaLowRangeFormula => {
                "closed low-range formula C(t+4,4)-C(t+2,4) disagrees with the computed kernel dimension C(t+2,4)"
            }
            Discrepancy::R3Exponent => {
                "relation x^q y = w^q0 - v does not hold on the curve; the identity that holds is x^q0 y = w^q0 + v"
            }
            Discrepancy::SecondEmbeddingDimension => {
                "|(2q+2q0+1)P_inf| does not embed into P^9; the computed projective dimension is reported instead"
            }
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct DiscrepancyFlag {
    pub id: Discrepancy,
    pub detail: String,
}

impl DiscrepancyFlag {
    pub fn new(id: Discrepancy) -> Self {
        DiscrepancyFlag {
            id,
            detail: id.describe().to_string(),
        }
    }
}

/// Output envelope of every command. Field order is fixed.
#[derive(Debug, Clone, Serialize)]
pub struct Report<T: Serialize> {
    pub command: String,
    pub params: SuzukiParams,
    pub result: T,
    pub discrepancies: Vec<DiscrepancyFlag>,
}

impl<T: Serialize> Report<T> {
    pub fn new(command: impl Into<String>, params: SuzukiParams, result: T) -> Self {
        Report {
            command: command.into(),
            params,
            result,
            discrepancies: Vec::new(),
        }
    }

    pub fn flag(&mut self, id: Discrepancy) {
        if !self.discrepancies.iter().any(|d| d.id == id) {
            self.discrepancies.push(DiscrepancyFlag::new(id));
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::make_params;

    #[test]
    fn field_order_and_dedup() {
        let mut r = Report::new("gaps", make_params(1).unwrap(), 14u64);
        r.flag(Discrepancy::R3Exponent);
        r.flag(Discrepancy::R3Exponent);
        let json = r.to_json();
        assert_eq!(r.discrepancies.len(), 1);
        let keys = ["\"command\"", "\"params\"", "\"result\"", "\"discrepancies\""];
        let pos: Vec<usize> = keys.iter().map(|k| json.find(k).unwrap()).collect();
        assert!(pos.windows(2).all(|w| w[0] < w[1]));
        assert!(json.contains("\"r3-exponent\""));
    }
}
