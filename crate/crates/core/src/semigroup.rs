//! The Weierstrass semigroup `H = <q, q+q0, q+2q0, q+2q0+1>` at the point at
//! infinity, tabulated by a coin-problem dynamic program.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::params::SuzukiParams;

#[derive(Debug, Clone)]
pub struct SemigroupTable {
    params: SuzukiParams,
    member: Vec<bool>,
}

impl SemigroupTable {
    pub fn build(params: SuzukiParams, bound: u64) -> Self {
        let mut member = vec![false; bound as usize + 1];
        member[0] = true;
        for s in 1..=bound as usize {
            member[s] = params
                .generators
                .iter()
                .any(|&g| g as usize <= s && member[s - g as usize]);
        }
        SemigroupTable { params, member }
    }

    /// Table up to `2g + m_embed`, enough for every query elsewhere in the crate.
    pub fn with_default_bound(params: SuzukiParams) -> Self {
        Self::build(params, 2 * params.genus + params.m_embed)
    }

    pub fn params(&self) -> &SuzukiParams {
        &self.params
    }

    pub fn bound(&self) -> u64 {
        self.member.len() as u64 - 1
    }

    fn check(&self, m: u64) -> Result<()> {
        if m > self.bound() {
            return Err(Error::Range {
                what: "m",
                value: m,
                bound: self.bound(),
            });
        }
        Ok(())
    }

    fn check_complete(&self) -> Result<()> {
        let need = 2 * self.params.genus;
        if self.bound() < need {
            return Err(Error::Range {
                what: "required bound 2g",
                value: need,
                bound: self.bound(),
            });
        }
        Ok(())
    }

    pub fn contains(&self, s: u64) -> Result<bool> {
        self.check(s)?;
        Ok(self.member[s as usize])
    }

    /// Members in `0..=bound`, ascending.
    pub fn members(&self) -> impl Iterator<Item = u64> + '_ {
        self.member
            .iter()
            .enumerate()
            .filter(|(_, &m)| m)
            .map(|(s, _)| s as u64)
    }

    /// `|{s in H : s <= m}|`, which is `dim L(m P_inf)`.
    pub fn count_up_to(&self, m: u64) -> Result<u64> {
        self.check(m)?;
        Ok(self.member[..=m as usize].iter().filter(|&&b| b).count() as u64)
    }

    pub fn gaps(&self) -> Result<Vec<u64>> {
        self.check_complete()?;
        Ok(self
            .member
            .iter()
            .enumerate()
            .filter(|(_, &m)| !m)
            .map(|(s, _)| s as u64)
            .collect())
    }

    /// Largest gap.
    pub fn frobenius(&self) -> Result<u64> {
        Ok(self.gaps()?.last().copied().unwrap_or(0))
    }

    /// `|m P_inf|` is base-point free iff `m` is in `H`.
    pub fn is_spanned(&self, m: u64) -> Result<bool> {
        self.contains(m)
    }

    /// `|m P_inf|` is very ample iff both `m` and `m - 1` lie in `H`.
    pub fn is_very_ample(&self, m: u64) -> Result<bool> {
        if m == 0 {
            return Err(Error::Precondition("very ampleness needs m >= 1".into()));
        }
        Ok(self.contains(m)? && self.contains(m - 1)?)
    }

    /// Smallest very ample `m > after`.
    pub fn next_very_ample(&self, after: u64) -> Result<u64> {
        (after + 1..=self.bound())
            .find(|&m| self.member[m as usize] && self.member[m as usize - 1])
            .ok_or(Error::Range {
                what: "very ample search start",
                value: after,
                bound: self.bound(),
            })
    }

    pub fn smallest_very_ample(&self) -> Result<u64> {
        self.next_very_ample(0)
    }

    /// Projective dimension of the image of the embedding given by `|m P_inf|`.
    pub fn embedding_dimension(&self, m: u64) -> Result<u64> {
        if !self.is_very_ample(m)? {
            return Err(Error::Precondition(format!("|{m} P_inf| is not very ample")));
        }
        Ok(self.count_up_to(m)? - 1)
    }

    pub fn summary(&self) -> Result<GapSummary> {
        let gaps = self.gaps()?;
        Ok(GapSummary {
            genus: self.params.genus,
            gap_count: gaps.len() as u64,
            frobenius: gaps.last().copied().unwrap_or(0),
            gaps,
        })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct GapSummary {
    pub genus: u64,
    pub gap_count: u64,
    pub frobenius: u64,
    pub gaps: Vec<u64>,
}
