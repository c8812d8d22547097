//! Exponent tuples `(a, b, c, d)` indexing monomials `x^a y^b v^c w^d`, their
//! pole orders at infinity, and the unique canonical representative of each
//! pole order.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::params::SuzukiParams;
use crate::semigroup::SemigroupTable;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ExponentTuple {
    pub a: u64,
    pub b: u64,
    pub c: u64,
    pub d: u64,
}

impl ExponentTuple {
    pub const ZERO: ExponentTuple = ExponentTuple::new(0, 0, 0, 0);
    pub const X: ExponentTuple = ExponentTuple::new(1, 0, 0, 0);
    pub const Y: ExponentTuple = ExponentTuple::new(0, 1, 0, 0);
    pub const V: ExponentTuple = ExponentTuple::new(0, 0, 1, 0);
    pub const W: ExponentTuple = ExponentTuple::new(0, 0, 0, 1);

    pub const fn new(a: u64, b: u64, c: u64, d: u64) -> Self {
        ExponentTuple { a, b, c, d }
    }

    pub fn to_array(self) -> [u64; 4] {
        [self.a, self.b, self.c, self.d]
    }

    /// Coordinate sum `a + b + c + d`.
    pub fn weight(self) -> u64 {
        self.a + self.b + self.c + self.d
    }

    /// Pole order at infinity of `x^a y^b v^c w^d`.
    pub fn norm(self, params: &SuzukiParams) -> u64 {
        let g = params.generators;
        self.a * g[0] + self.b * g[1] + self.c * g[2] + self.d * g[3]
    }

    pub fn is_canonical(self, params: &SuzukiParams) -> bool {
        self.b <= 1 && self.c < params.q0 && self.d < params.q0
    }

    pub fn checked_sub(self, o: ExponentTuple) -> Option<ExponentTuple> {
        Some(ExponentTuple::new(
            self.a.checked_sub(o.a)?,
            self.b.checked_sub(o.b)?,
            self.c.checked_sub(o.c)?,
            self.d.checked_sub(o.d)?,
        ))
    }
}

impl std::ops::Add for ExponentTuple {
    type Output = ExponentTuple;

    fn add(self, o: ExponentTuple) -> ExponentTuple {
        ExponentTuple::new(self.a + o.a, self.b + o.b, self.c + o.c, self.d + o.d)
    }
}

impl fmt::Display for ExponentTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.a, self.b, self.c, self.d)
    }
}

impl Serialize for ExponentTuple {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_array().serialize(s)
    }
}

/// A tuple with `b <= 1` and `c, d <= q0 - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct CanonicalTuple(ExponentTuple);

impl CanonicalTuple {
    pub fn new(t: ExponentTuple, params: &SuzukiParams) -> Result<Self> {
        if t.is_canonical(params) {
            Ok(CanonicalTuple(t))
        } else {
            Err(Error::Precondition(format!("{t} is not canonical")))
        }
    }

    pub fn tuple(self) -> ExponentTuple {
        self.0
    }
}

impl fmt::Display for CanonicalTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

pub fn norm(t: ExponentTuple, params: &SuzukiParams) -> u64 {
    t.norm(params)
}

/// The canonical tuple of the same norm. Carries `d` into `(a, b)` using
/// `q0 w ~ q0 x + y`, then `b` into `(a, c)` using `2y ~ x + v`, then `c`
/// into `a` using `q0 v ~ (q0 + 1) x`.
pub fn normalize(t: ExponentTuple, params: &SuzukiParams) -> CanonicalTuple {
    let q0 = params.q0;
    let (delta, d) = (t.d / q0, t.d % q0);
    let b1 = t.b + delta;
    let (beta, b) = (b1 / 2, b1 % 2);
    let c2 = t.c + beta;
    let (gamma, c) = (c2 / q0, c2 % q0);
    let a = t.a + delta * q0 + beta + gamma * (q0 + 1);
    CanonicalTuple(ExponentTuple::new(a, b, c, d))
}

/// Canonical tuples of norm at most `m`, by ascending norm. These index the
/// monomial basis of `L(m P_inf)`.
pub fn basis_tuples(params: &SuzukiParams, m: u64) -> Vec<CanonicalTuple> {
    let mut out = Vec::new();
    for b in 0..=1 {
        for c in 0..params.q0 {
            for d in 0..params.q0 {
                let base = ExponentTuple::new(0, b, c, d);
                let n0 = base.norm(params);
                if n0 > m {
                    continue;
                }
                for a in 0..=(m - n0) / params.q {
                    out.push(CanonicalTuple(ExponentTuple::new(a, b, c, d)));
                }
            }
        }
    }
    out.sort_by_key(|t| t.0.norm(params));
    out
}

/// For `1 <= t <= q0 - 1`, returns `(norm <= t m_embed, weight <= t)`; the two
/// conditions coincide.
pub fn small_t_equiv(params: &SuzukiParams, t: u64, tuple: ExponentTuple) -> Result<(bool, bool)> {
    if t < 1 || t >= params.q0 {
        return Err(Error::Precondition(format!(
            "t = {t} outside 1..={}",
            params.q0 - 1
        )));
    }
    Ok((tuple.norm(params) <= t * params.m_embed, tuple.weight() <= t))
}

/// Splits `tuple` into exactly `t` summands of coordinate sum 0 or 1.
pub fn decompose_unit_sum(tuple: ExponentTuple, t: u64) -> Result<Vec<ExponentTuple>> {
    if tuple.weight() > t {
        return Err(Error::Precondition(format!(
            "{tuple} has coordinate sum above {t}"
        )));
    }
    let units = [
        (tuple.a, ExponentTuple::X),
        (tuple.b, ExponentTuple::Y),
        (tuple.c, ExponentTuple::V),
        (tuple.d, ExponentTuple::W),
    ];
    let mut out: Vec<ExponentTuple> = units
        .iter()
        .flat_map(|&(k, u)| std::iter::repeat_n(u, k as usize))
        .collect();
    out.resize(t as usize, ExponentTuple::ZERO);
    Ok(out)
}

/// Some tuple of norm `s` with `weight <= k`, found by search over `(b, c, d)`.
fn search_tuple(params: &SuzukiParams, s: u64, k: u64) -> Option<ExponentTuple> {
    let g = params.generators;
    for b in 0..=k {
        for c in 0..=k - b {
            for d in 0..=k - b - c {
                let rest = b * g[1] + c * g[2] + d * g[3];
                if rest > s || !(s - rest).is_multiple_of(g[0]) {
                    continue;
                }
                let a = (s - rest) / g[0];
                if a + b + c + d <= k {
                    return Some(ExponentTuple::new(a, b, c, d));
                }
            }
        }
    }
    None
}

/// For `t >= 2q0 + 1` and `s` in `H` with `s <= t m_embed`, a tuple of norm
/// `s` and coordinate sum at most `t`.
pub fn steppp_decompose(table: &SemigroupTable, s: u64, t: u64) -> Result<ExponentTuple> {
    let p = *table.params();
    if t < 2 * p.q0 + 1 {
        return Err(Error::Precondition(format!("t = {t} below 2q0 + 1")));
    }
    if s > t * p.m_embed {
        return Err(Error::Precondition(format!("s = {s} above t m_embed")));
    }
    if !table.contains(s)? {
        return Err(Error::Precondition(format!("s = {s} is a gap")));
    }
    if s <= t * p.q {
        // Any representation has weight <= s / q <= t.
        return search_tuple(&p, s, s / p.q)
            .ok_or_else(|| Error::Precondition(format!("no tuple of norm {s}")));
    }
    let alpha = s.div_ceil(p.m_embed);
    let beta = alpha * p.m_embed - s;
    let e1 = beta / (2 * p.q0 + 1);
    let e2 = (beta - e1 * (2 * p.q0 + 1)) / (p.q0 + 1);
    let e3 = beta - e1 * (2 * p.q0 + 1) - e2 * (p.q0 + 1);
    let out = ExponentTuple::new(e1, e2, e3, alpha - e1 - e2 - e3);
    debug_assert_eq!(out.norm(&p), s);
    Ok(out)
}

/// `|{(a, b, c) >= 0 : a + b + c = h}|`.
pub fn t1_size(h: u64) -> u64 {
    (h + 1) * (h + 2) / 2
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::make_params;

    fn t(a: u64, b: u64, c: u64, d: u64) -> ExponentTuple {
        ExponentTuple::new(a, b, c, d)
    }

    /// All tuples whose norm is at most `limit`.
    fn tuples_up_to(p: &SuzukiParams, limit: u64) -> Vec<ExponentTuple> {
        let k = limit / p.q;
        let mut out = Vec::new();
        for a in 0..=k {
            for b in 0..=k {
                for c in 0..=k {
                    for d in 0..=k {
                        let x = t(a, b, c, d);
                        if x.norm(p) <= limit {
                            out.push(x);
                        }
                    }
                }
            }
        }
        out
    }

    #[test]
    fn norms() {
        let p = make_params(2).unwrap();
        assert_eq!(norm(t(1, 1, 1, 1), &p), 149);
        assert_eq!(norm(t(0, 0, 4, 0), &p), 160);
        assert_eq!(norm(ExponentTuple::ZERO, &p), 0);
    }

    #[test]
    fn normalize_examples() {
        let p = make_params(2).unwrap();
        assert_eq!(normalize(t(0, 0, 4, 0), &p).tuple(), t(5, 0, 0, 0));
        assert_eq!(normalize(t(0, 3, 0, 0), &p).tuple(), t(1, 1, 1, 0));
        assert_eq!(normalize(t(0, 0, 0, 4), &p).tuple(), t(4, 1, 0, 0));
    }

    #[test]
    fn normalize_exhaustive() {
        for n in [1, 2] {
            let p = make_params(n).unwrap();
            let limit = 3 * p.m_embed;
            let all = tuples_up_to(&p, limit);
            let mut by_norm = std::collections::HashMap::new();
            for &x in &all {
                let c = normalize(x, &p);
                assert!(c.tuple().is_canonical(&p));
                assert_eq!(c.tuple().norm(&p), x.norm(&p));
                assert_eq!(normalize(c.tuple(), &p), c);
                let prev = by_norm.insert(x.norm(&p), c);
                assert!(prev.is_none() || prev == Some(c));
            }
            // Injectivity on canonical tuples.
            let canon: Vec<_> = all.iter().filter(|x| x.is_canonical(&p)).collect();
            let mut norms: Vec<u64> = canon.iter().map(|x| x.norm(&p)).collect();
            norms.sort();
            norms.dedup();
            assert_eq!(norms.len(), canon.len());
        }
    }

    #[test]
    fn basis_examples() {
        let p = make_params(2).unwrap();
        let b: Vec<_> = basis_tuples(&p, 41).into_iter().map(|c| c.tuple()).collect();
        assert_eq!(
            b,
            vec![t(0, 0, 0, 0), t(1, 0, 0, 0), t(0, 1, 0, 0), t(0, 0, 1, 0), t(0, 0, 0, 1)]
        );
        assert_eq!(basis_tuples(&p, 82).len(), 14);
        assert_eq!(basis_tuples(&p, 0).len(), 1);
    }

    #[test]
    fn basis_length_matches_semigroup() {
        for n in [1, 2] {
            let p = make_params(n).unwrap();
            let table = SemigroupTable::with_default_bound(p);
            for m in 0..=2 * p.genus {
                assert_eq!(basis_tuples(&p, m).len() as u64, table.count_up_to(m).unwrap());
            }
        }
    }

    #[test]
    fn small_t() {
        let p = make_params(2).unwrap();
        assert_eq!(small_t_equiv(&p, 3, t(1, 1, 1, 0)).unwrap(), (true, true));
        assert_eq!(small_t_equiv(&p, 2, t(3, 0, 0, 0)).unwrap(), (false, false));
        assert!(small_t_equiv(&p, 4, t(0, 0, 0, 0)).is_err());
        assert!(small_t_equiv(&p, 0, t(0, 0, 0, 0)).is_err());
        for tt in 1..p.q0 {
            for a in 0..=5 {
                for b in 0..=5 - a {
                    for c in 0..=5 - a - b {
                        for d in 0..=5 - a - b - c {
                            let (x, y) = small_t_equiv(&p, tt, t(a, b, c, d)).unwrap();
                            assert_eq!(x, y);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn unit_sums() {
        assert_eq!(
            decompose_unit_sum(t(2, 1, 0, 1), 4).unwrap(),
            vec![t(1, 0, 0, 0), t(1, 0, 0, 0), t(0, 1, 0, 0), t(0, 0, 0, 1)]
        );
        assert_eq!(decompose_unit_sum(ExponentTuple::ZERO, 3).unwrap(), vec![ExponentTuple::ZERO; 3]);
        assert_eq!(
            decompose_unit_sum(t(1, 0, 1, 0), 3).unwrap(),
            vec![t(1, 0, 0, 0), t(0, 0, 1, 0), t(0, 0, 0, 0)]
        );
        assert!(decompose_unit_sum(t(3, 0, 0, 0), 2).is_err());
    }

    #[test]
    fn steppp_examples() {
        let p = make_params(2).unwrap();
        let table = SemigroupTable::build(p, 500);
        assert_eq!(steppp_decompose(&table, 365, 9).unwrap(), t(0, 0, 4, 5));
        assert_eq!(steppp_decompose(&table, 0, 9).unwrap(), ExponentTuple::ZERO);
        assert_eq!(steppp_decompose(&table, 32, 9).unwrap(), t(1, 0, 0, 0));
        assert!(steppp_decompose(&table, 33, 9).is_err());
        assert!(steppp_decompose(&table, 370, 9).is_err());
        assert!(steppp_decompose(&table, 32, 8).is_err());
    }

    #[test]
    fn steppp_all_members() {
        for n in [1, 2] {
            let p = make_params(n).unwrap();
            let table = SemigroupTable::build(p, (2 * p.q0 + 3) * p.m_embed);
            for tt in 2 * p.q0 + 1..=2 * p.q0 + 3 {
                for s in table.members().filter(|&s| s <= tt * p.m_embed) {
                    let x = steppp_decompose(&table, s, tt).unwrap();
                    assert_eq!(x.norm(&p), s);
                    assert!(x.weight() <= tt);
                }
            }
        }
    }

    #[test]
    fn t1_sizes() {
        assert_eq!(t1_size(0), 1);
        assert_eq!(t1_size(1), 3);
        let brute = (0..=4u64)
            .flat_map(|a| (0..=4u64).flat_map(move |b| (0..=4u64).map(move |c| (a, b, c))))
            .filter(|(a, b, c)| a + b + c == 4)
            .count() as u64;
        assert_eq!(t1_size(4), 15);
        assert_eq!(brute, 15);
    }
}
