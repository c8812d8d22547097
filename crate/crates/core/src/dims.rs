//! Closed formulas for `dim L(t m_embed P_inf)` and for the number of
//! independent degree-`t` forms vanishing on the embedded curve, each checked
//! against the semigroup count.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::params::SuzukiParams;
use crate::semigroup::SemigroupTable;

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// `C(a, 4)`, zero for `a < 4` (including negative `a`).
pub fn binom4(a: i64) -> u64 {
    if a < 4 {
        0
    } else {
        binomial(a as u64, 4)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CaseLabel {
    T01,
    Low,
    Mid,
    Edge3,
    Edge2,
    High,
    OracleOnly,
}

impl CaseLabel {
    pub fn as_str(self) -> &'static str {
        match self {
            CaseLabel::T01 => "t01",
            CaseLabel::Low => "low",
            CaseLabel::Mid => "mid",
            CaseLabel::Edge3 => "edge3",
            CaseLabel::Edge2 => "edge2",
            CaseLabel::High => "high",
            CaseLabel::OracleOnly => "oracle-only",
        }
    }
}

fn require_closed_range(params: &SuzukiParams) -> Result<()> {
    if params.q0 < 4 {
        return Err(Error::UnsupportedRange { q0: params.q0 });
    }
    Ok(())
}

/// Which of the six closed-formula cases covers `t`.
pub fn case_of(params: &SuzukiParams, t: u64) -> CaseLabel {
    let q0 = params.q0;
    if q0 < 4 {
        CaseLabel::OracleOnly
    } else if t <= 1 {
        CaseLabel::T01
    } else if t < q0 {
        CaseLabel::Low
    } else if t <= 2 * q0 - 4 {
        CaseLabel::Mid
    } else if t == 2 * q0 - 3 {
        CaseLabel::Edge3
    } else if t == 2 * q0 - 2 {
        CaseLabel::Edge2
    } else {
        CaseLabel::High
    }
}

/// `dim L(t m_embed P_inf)` by the six-case closed formula (needs `q0 >= 4`).
pub fn dim_l_closed(params: &SuzukiParams, t: u64) -> Result<u64> {
    require_closed_range(params)?;
    let (ti, q0, g) = (t as i64, params.q0 as i64, params.genus as i64);
    let tm = (t * params.m_embed) as i64;
    let value = match case_of(params, t) {
        CaseLabel::T01 => 4 * ti + 1,
        CaseLabel::Low => (binom4(ti + 4) - binom4(ti + 2)) as i64,
        CaseLabel::Mid => {
            tm + 1 - g + binom4(2 * q0 - ti + 2) as i64 - binom4(2 * q0 - ti) as i64
        }
        CaseLabel::Edge3 => tm + 6 - g,
        CaseLabel::Edge2 => tm + 2 - g,
        CaseLabel::High => tm + 1 - g,
        CaseLabel::OracleOnly => unreachable!("guarded above"),
    };
    Ok(value as u64)
}

/// `dim L(m P_inf)` by counting semigroup elements.
pub fn dim_l_oracle(table: &SemigroupTable, m: u64) -> Result<u64> {
    table.count_up_to(m)
}

#[derive(Debug, Clone, Serialize)]
pub struct DimReport {
    pub t: u64,
    pub m: u64,
    pub dim_closed: Option<u64>,
    pub dim_oracle: u64,
    pub agree: bool,
    pub case_label: &'static str,
}

pub fn dim_report(table: &SemigroupTable, t: u64) -> Result<DimReport> {
    let p = table.params();
    let m = t * p.m_embed;
    let dim_oracle = dim_l_oracle(table, m)?;
    let dim_closed = dim_l_closed(p, t).ok();
    Ok(DimReport {
        t,
        m,
        dim_closed,
        dim_oracle,
        agree: dim_closed.is_none_or(|c| c == dim_oracle),
        case_label: case_of(p, t).as_str(),
    })
}

/// Semigroup table large enough for `dim L(t m_embed)` up to `tmax`.
pub fn table_for(params: SuzukiParams, tmax: u64) -> SemigroupTable {
    let bound = (tmax * params.m_embed).max(2 * params.genus + params.m_embed);
    SemigroupTable::build(params, bound)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "value", rename_all = "kebab-case")]
pub enum KappaClosed {
    Exact(u64),
    /// No closed formula; a certified lower bound, exact only by rank.
    LowerBound(u64),
}

impl KappaClosed {
    pub fn value(self) -> u64 {
        match self {
            KappaClosed::Exact(v) | KappaClosed::LowerBound(v) => v,
        }
    }
}

/// The closed low-range hypersurface-count formula `C(t+4,4) - C(t+2,4)`. Kept only for reporting the inconsistency with
/// the computed kernel dimension.
pub fn printed_low_range_kappa(t: u64) -> u64 {
    binom4(t as i64 + 4) - binom4(t as i64 + 2)
}

/// Closed-form `kappa(t)`: `C(t+2,4)` for `2 <= t <= q0`,
/// `C(t+4,4) - t m_embed - 1 + g` for `t >= 2q0 + 1`, and the lower bound
/// `C(t+4,4) - dim L(t m_embed)` in between.
pub fn kappa_closed(table: &SemigroupTable, t: u64) -> Result<KappaClosed> {
    let p = table.params();
    if t < 2 {
        return Err(Error::Precondition(format!("kappa needs t >= 2, got {t}")));
    }
    require_closed_range(p)?;
    let ti = t as i64;
    if t <= p.q0 {
        Ok(KappaClosed::Exact(binom4(ti + 2)))
    } else if t > 2 * p.q0 {
        Ok(KappaClosed::Exact(binom4(ti + 4) + p.genus - t * p.m_embed - 1))
    } else {
        let dim = dim_l_oracle(table, t * p.m_embed)?;
        Ok(KappaClosed::LowerBound(binom4(ti + 4).saturating_sub(dim)))
    }
}
