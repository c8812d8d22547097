//! Numeric constants of the Suzuki curve `y^q - y = x^q0 (x^q - x)` with
//! `q0 = 2^n` and `q = 2 q0^2`.

use serde::Serialize;

use crate::error::{Error, Result};

/// Largest supported family index; keeps the field degree `2n + 1` within a `u32`.
pub const MAX_N: u32 = 15;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct SuzukiParams {
    pub n: u32,
    pub q0: u64,
    pub q: u64,
    pub genus: u64,
    /// Degree of the embedding divisor, `q + 2 q0 + 1`.
    pub m_embed: u64,
    /// Generators of the Weierstrass semigroup at the point at infinity.
    pub generators: [u64; 4],
    /// Pole order of the canonical divisor, `2g - 2`.
    pub canonical_pole: u64,
    /// Set for `n = 1`; several closed formulas need `q0 >= 4`.
    pub outside_paper_range: bool,
}

impl SuzukiParams {
    pub fn new(n: u32) -> Result<Self> {
        if n == 0 || n > MAX_N {
            return Err(Error::ParameterDomain(format!(
                "n must lie in 1..={MAX_N}, got {n}"
            )));
        }
        let q0 = 1u64 << n;
        let q = 2 * q0 * q0;
        let genus = q0 * (q - 1);
        let m_embed = q + 2 * q0 + 1;
        Ok(SuzukiParams {
            n,
            q0,
            q,
            genus,
            m_embed,
            generators: [q, q + q0, q + 2 * q0, m_embed],
            canonical_pole: 2 * genus - 2,
            outside_paper_range: n < 2,
        })
    }

    /// Degree of `F_q` over `GF(2)`.
    pub fn field_degree(&self) -> u32 {
        2 * self.n + 1
    }
}

pub fn make_params(n: u32) -> Result<SuzukiParams> {
    SuzukiParams::new(n)
}
