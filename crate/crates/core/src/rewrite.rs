//! Normal forms in the function field `F(x, y, v, w)` of the Suzuki curve.
//!
//! Three rules rewrite any monomial into a combination of canonical monomials
//! (`b <= 1`, `c, d <= q0 - 1`):
//!
//! ```text
//! R1: y^2    -> x v + w
//! R2: v^q0   -> x^(q0+1) + y
//! R3: w^q0   -> x^q0 y + v
//! ```
//!
//! All right-hand sides have 0/1 coefficients, so normal forms of monomials
//! are computed once over `GF(2)` and reused for any coefficient field of
//! characteristic 2. Canonical monomials have pairwise distinct pole orders,
//! so the normal form does not depend on the order in which rules fire.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf::{FieldElement, GfField};
use crate::linalg::{BitMatrix, BitVec};
use crate::params::SuzukiParams;
use crate::semigroup::SemigroupTable;
use crate::tuples::{basis_tuples, ExponentTuple};

pub trait Coeff: Copy + Eq + fmt::Debug {
    const ZERO: Self;
    const ONE: Self;

    fn is_zero(self) -> bool;
    fn add(self, other: Self) -> Self;
    /// The image in `F_q`; the prime field embeds as `{0, 1}`.
    fn to_field(self) -> FieldElement;
}

/// An element of the prime field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Gf2(pub bool);

impl Coeff for Gf2 {
    const ZERO: Self = Gf2(false);
    const ONE: Self = Gf2(true);

    fn is_zero(self) -> bool {
        !self.0
    }

    fn add(self, other: Self) -> Self {
        Gf2(self.0 ^ other.0)
    }

    fn to_field(self) -> FieldElement {
        FieldElement(self.0 as u32)
    }
}

impl Coeff for FieldElement {
    const ZERO: Self = FieldElement::ZERO;
    const ONE: Self = FieldElement::ONE;

    fn is_zero(self) -> bool {
        self.0 == 0
    }

    fn add(self, other: Self) -> Self {
        FieldElement(self.0 ^ other.0)
    }

    fn to_field(self) -> FieldElement {
        self
    }
}

/// Multiplication context for a coefficient type.
pub trait CoeffRing {
    type Coeff: Coeff;

    fn mul(&self, a: Self::Coeff, b: Self::Coeff) -> Self::Coeff;
}

#[derive(Debug, Clone, Copy, Default)]
pub struct Gf2Ring;

impl CoeffRing for Gf2Ring {
    type Coeff = Gf2;

    fn mul(&self, a: Gf2, b: Gf2) -> Gf2 {
        Gf2(a.0 & b.0)
    }
}

impl CoeffRing for GfField {
    type Coeff = FieldElement;

    fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        GfField::mul(self, a, b)
    }
}

/// A finite combination of monomials `x^a y^b v^c w^d`. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FFPoly<C: Coeff = Gf2> {
    terms: BTreeMap<ExponentTuple, C>,
}

impl<C: Coeff> FFPoly<C> {
    pub fn zero() -> Self {
        FFPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(ExponentTuple::ZERO)
    }

    pub fn monomial(t: ExponentTuple) -> Self {
        Self::term(t, C::ONE)
    }

    pub fn term(t: ExponentTuple, c: C) -> Self {
        let mut p = Self::zero();
        p.add_term(t, c);
        p
    }

    /// Sum of the given monomials, each with coefficient one.
    pub fn from_monomials(ts: impl IntoIterator<Item = ExponentTuple>) -> Self {
        let mut p = Self::zero();
        for t in ts {
            p.add_term(t, C::ONE);
        }
        p
    }

    pub fn add_term(&mut self, t: ExponentTuple, c: C) {
        if c.is_zero() {
            return;
        }
        let sum = self.terms.get(&t).map_or(c, |&old| old.add(c));
        if sum.is_zero() {
            self.terms.remove(&t);
        } else {
            self.terms.insert(t, sum);
        }
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (ExponentTuple, C)> + '_ {
        self.terms.iter().map(|(&t, &c)| (t, c))
    }

    pub fn monomials(&self) -> impl Iterator<Item = ExponentTuple> + '_ {
        self.terms.keys().copied()
    }

    pub fn coeff(&self, t: ExponentTuple) -> C {
        self.terms.get(&t).copied().unwrap_or(C::ZERO)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_canonical(&self, params: &SuzukiParams) -> bool {
        self.terms.keys().all(|t| t.is_canonical(params))
    }

    /// Largest pole order over the terms; `None` for the zero polynomial.
    pub fn max_norm(&self, params: &SuzukiParams) -> Option<u64> {
        self.terms.keys().map(|t| t.norm(params)).max()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (t, c) in other.terms() {
            out.add_term(t, c);
        }
        out
    }

    /// Term-by-term product, without rewriting.
    pub fn mul_unreduced<R: CoeffRing<Coeff = C>>(&self, other: &Self, ring: &R) -> Self {
        let mut out = Self::zero();
        for (t1, c1) in self.terms() {
            for (t2, c2) in other.terms() {
                out.add_term(t1 + t2, ring.mul(c1, c2));
            }
        }
        out
    }

    pub fn pow_unreduced<R: CoeffRing<Coeff = C>>(&self, e: u64, ring: &R) -> Self {
        (0..e).fold(Self::one(), |acc, _| acc.mul_unreduced(self, ring))
    }
}

impl FFPoly<Gf2> {
    /// The same polynomial with coefficients read in `F_q`.
    pub fn lift(&self) -> FFPoly<FieldElement> {
        FFPoly::from_monomials(self.monomials())
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, t: ExponentTuple) -> fmt::Result {
    let mut first = true;
    for (var, e) in ["x", "y", "v", "w"].iter().zip(t.to_array()) {
        if e == 0 {
            continue;
        }
        if !first {
            f.write_str(" ")?;
        }
        first = false;
        if e == 1 {
            f.write_str(var)?;
        } else {
            write!(f, "{var}^{e}")?;
        }
    }
    if first {
        f.write_str("1")?;
    }
    Ok(())
}

/// Terms are printed in descending exponent order, e.g. `x v + w`.
impl fmt::Display for FFPoly<Gf2> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (t, _)) in self.terms().rev().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write_monomial(f, t)?;
        }
        Ok(())
    }
}

impl fmt::Display for FFPoly<FieldElement> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (t, c)) in self.terms().rev().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if c != FieldElement::ONE {
                write!(f, "[{c}] ")?;
            }
            write_monomial(f, t)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Rule {
    pub name: &'static str,
    pub lhs: ExponentTuple,
    pub rhs: [ExponentTuple; 2],
}

impl Rule {
    /// `t` with the left-hand side divided out, if it divides.
    pub fn cofactor(&self, t: ExponentTuple) -> Option<ExponentTuple> {
        t.checked_sub(self.lhs)
    }
}

pub fn rules(params: &SuzukiParams) -> [Rule; 3] {
    let q0 = params.q0;
    [
        Rule {
            name: "R1",
            lhs: ExponentTuple::new(0, 2, 0, 0),
            rhs: [ExponentTuple::new(1, 0, 1, 0), ExponentTuple::W],
        },
        Rule {
            name: "R2",
            lhs: ExponentTuple::new(0, 0, q0, 0),
            rhs: [ExponentTuple::new(q0 + 1, 0, 0, 0), ExponentTuple::Y],
        },
        Rule {
            name: "R3",
            lhs: ExponentTuple::new(0, 0, 0, q0),
            rhs: [ExponentTuple::new(q0, 1, 0, 0), ExponentTuple::V],
        },
    ]
}

/// Integer weight strictly decreased by every rule application.
pub fn termination_weight(params: &SuzukiParams, t: ExponentTuple) -> u64 {
    if params.q0 >= 4 {
        10 * t.b + 5 * t.c + 5 * t.d
    } else {
        100 * t.b + 90 * t.c + 96 * t.d
    }
}

/// Inputs above this pole order are refused.
pub fn growth_limit(params: &SuzukiParams) -> u64 {
    4 * params.q * params.m_embed
}

fn check_growth<C: Coeff>(p: &FFPoly<C>, params: &SuzukiParams) -> Result<()> {
    let limit = growth_limit(params);
    match p.max_norm(params) {
        Some(norm) if norm > limit => Err(Error::GrowthLimit { norm, limit }),
        _ => Ok(()),
    }
}

/// Rewriting engine with a cache of monomial normal forms.
///
/// The cache is keyed on `(b, c, d)`: the rules never involve `x` on their
/// left-hand sides, so `x^a` factors through every reduction.
#[derive(Debug, Clone)]
pub struct Reducer {
    params: SuzukiParams,
    rules: [Rule; 3],
    memo: HashMap<(u64, u64, u64), Arc<Vec<ExponentTuple>>>,
    fired: [bool; 3],
}

impl Reducer {
    pub fn new(params: SuzukiParams) -> Self {
        Reducer {
            params,
            rules: rules(&params),
            memo: HashMap::new(),
            fired: [false; 3],
        }
    }

    pub fn params(&self) -> &SuzukiParams {
        &self.params
    }

    /// Which of R1, R2, R3 this reducer has applied so far (cache misses only).
    pub fn rules_fired(&self) -> [bool; 3] {
        self.fired
    }

    fn nf_key(&mut self, b: u64, c: u64, d: u64) -> Arc<Vec<ExponentTuple>> {
        if let Some(hit) = self.memo.get(&(b, c, d)) {
            return hit.clone();
        }
        let t = ExponentTuple::new(0, b, c, d);
        let result = match self.rules.iter().position(|r| r.cofactor(t).is_some()) {
            None => vec![t],
            Some(i) => {
                let rule = self.rules[i];
                self.fired[i] = true;
                let rest = rule.cofactor(t).unwrap();
                let mut acc: BTreeMap<ExponentTuple, ()> = BTreeMap::new();
                for r in rule.rhs {
                    let s = r + rest;
                    debug_assert!(
                        termination_weight(&self.params, s) < termination_weight(&self.params, t)
                    );
                    let shift = ExponentTuple::new(s.a, 0, 0, 0);
                    for &u in self.nf_key(s.b, s.c, s.d).iter() {
                        let u = u + shift;
                        if acc.remove(&u).is_none() {
                            acc.insert(u, ());
                        }
                    }
                }
                acc.into_keys().collect()
            }
        };
        let result = Arc::new(result);
        self.memo.insert((b, c, d), result.clone());
        result
    }

    /// Canonical monomials (coefficient one) summing to `t`.
    pub fn normal_form(&mut self, t: ExponentTuple) -> Vec<ExponentTuple> {
        let shift = ExponentTuple::new(t.a, 0, 0, 0);
        self.nf_key(t.b, t.c, t.d).iter().map(|&u| u + shift).collect()
    }

    pub fn reduce<C: Coeff>(&mut self, p: &FFPoly<C>) -> Result<FFPoly<C>> {
        check_growth(p, &self.params)?;
        let mut out = FFPoly::zero();
        for (t, c) in p.terms() {
            for u in self.normal_form(t) {
                out.add_term(u, c);
            }
        }
        Ok(out)
    }

    pub fn multiply<R: CoeffRing>(
        &mut self,
        p1: &FFPoly<R::Coeff>,
        p2: &FFPoly<R::Coeff>,
        ring: &R,
    ) -> Result<FFPoly<R::Coeff>> {
        self.reduce(&p1.mul_unreduced(p2, ring))
    }
}

pub fn reduce(p: &FFPoly, params: &SuzukiParams) -> Result<FFPoly> {
    Reducer::new(*params).reduce(p)
}

pub fn multiply(p1: &FFPoly, p2: &FFPoly, params: &SuzukiParams) -> Result<FFPoly> {
    Reducer::new(*params).multiply(p1, p2, &Gf2Ring)
}

/// Rewrites one rule application at a time. `choose(k)` picks among the `k`
/// applicable (term, rule) pairs, listed by ascending term then by rule.
pub fn reduce_stepwise<C: Coeff>(
    p: &FFPoly<C>,
    params: &SuzukiParams,
    mut choose: impl FnMut(usize) -> usize,
) -> Result<FFPoly<C>> {
    check_growth(p, params)?;
    let rules = rules(params);
    let mut cur = p.clone();
    loop {
        let candidates: Vec<(ExponentTuple, C, Rule)> = cur
            .terms()
            .flat_map(|(t, c)| {
                rules
                    .iter()
                    .filter(move |r| r.cofactor(t).is_some())
                    .map(move |&r| (t, c, r))
            })
            .collect();
        if candidates.is_empty() {
            return Ok(cur);
        }
        let (t, c, rule) = candidates[choose(candidates.len())];
        let rest = rule.cofactor(t).unwrap();
        cur.add_term(t, c);
        for r in rule.rhs {
            debug_assert!(termination_weight(params, r + rest) < termination_weight(params, t));
            cur.add_term(r + rest, c);
        }
    }
}

/// `y^q + y + x^(q+q0) + x^(q0+1)`, the curve equation in characteristic 2.
pub fn curve_relation(params: &SuzukiParams) -> FFPoly {
    let (q, q0) = (params.q, params.q0);
    FFPoly::from_monomials([
        ExponentTuple::new(0, q, 0, 0),
        ExponentTuple::Y,
        ExponentTuple::new(q + q0, 0, 0, 0),
        ExponentTuple::new(q0 + 1, 0, 0, 0),
    ])
}

/// Whether the curve equation reduces to zero under the three rules.
pub fn verify_curve_identity(params: &SuzukiParams) -> Result<bool> {
    Ok(reduce(&curve_relation(params), params)?.is_zero())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RankPair {
    pub image_dim: usize,
    pub target_dim: usize,
}

impl RankPair {
    pub fn surjective(&self) -> bool {
        self.image_dim == self.target_dim
    }
}

/// Coordinates of reduced monomials in the canonical basis of `L(m P_inf)`.
pub(crate) fn coordinate_columns(
    reducer: &mut Reducer,
    m: u64,
    monomials: impl IntoIterator<Item = ExponentTuple>,
) -> (usize, Vec<BitVec>) {
    let params = *reducer.params();
    let basis = basis_tuples(&params, m);
    let index: HashMap<ExponentTuple, usize> = basis
        .iter()
        .enumerate()
        .map(|(i, c)| (c.tuple(), i))
        .collect();
    let columns = monomials
        .into_iter()
        .map(|t| {
            let nf = reducer.normal_form(t);
            BitVec::from_ones(
                basis.len(),
                nf.iter().map(|u| {
                    *index
                        .get(u)
                        .unwrap_or_else(|| panic!("{u} has pole order above {m}"))
                }),
            )
        })
        .collect();
    (basis.len(), columns)
}

fn rank_of(rows: usize, columns: &[BitVec]) -> usize {
    if columns.is_empty() {
        return 0;
    }
    // Rank is transpose-invariant; columns are already packed as rows.
    BitMatrix::from_rows(rows, columns.to_vec()).rank()
}

/// All exponent tuples of coordinate sum at most `t`.
pub fn tuples_of_weight_at_most(t: u64) -> Vec<ExponentTuple> {
    let mut out = Vec::new();
    for a in 0..=t {
        for b in 0..=t - a {
            for c in 0..=t - a - b {
                for d in 0..=t - a - b - c {
                    out.push(ExponentTuple::new(a, b, c, d));
                }
            }
        }
    }
    out
}

/// Rank of the `t`-fold products of `{1, x, y, v, w}` inside `L(t m_embed P_inf)`,
/// against the dimension of that space.
pub fn sigma_rank(reducer: &mut Reducer, t: u64) -> RankPair {
    let p = *reducer.params();
    let m = t * p.m_embed;
    let (rows, columns) = coordinate_columns(reducer, m, tuples_of_weight_at_most(t));
    let table = SemigroupTable::build(p, m);
    RankPair {
        image_dim: rank_of(rows, &columns),
        target_dim: table.count_up_to(m).expect("bound covers m") as usize,
    }
}

/// Rank of the products `L(alpha m_embed) x L(beta m_embed) -> L((alpha+beta) m_embed)`.
pub fn mu_rank(reducer: &mut Reducer, alpha: u64, beta: u64) -> RankPair {
    let p = *reducer.params();
    let left = basis_tuples(&p, alpha * p.m_embed);
    let right = basis_tuples(&p, beta * p.m_embed);
    let m = (alpha + beta) * p.m_embed;
    let products: Vec<ExponentTuple> = left
        .iter()
        .flat_map(|l| right.iter().map(move |r| l.tuple() + r.tuple()))
        .collect();
    let (rows, columns) = coordinate_columns(reducer, m, products);
    let table = SemigroupTable::build(p, m);
    RankPair {
        image_dim: rank_of(rows, &columns),
        target_dim: table.count_up_to(m).expect("bound covers m") as usize,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::make_params;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn t(a: u64, b: u64, c: u64, d: u64) -> ExponentTuple {
        ExponentTuple::new(a, b, c, d)
    }

    fn mono(a: u64, b: u64, c: u64, d: u64) -> FFPoly {
        FFPoly::monomial(t(a, b, c, d))
    }

    #[test]
    fn rule_pole_orders_balance() {
        for n in 1..=3 {
            let p = make_params(n).unwrap();
            for r in rules(&p) {
                for s in r.rhs {
                    assert!(s.norm(&p) <= r.lhs.norm(&p));
                }
                assert_eq!(r.rhs[0].norm(&p), r.lhs.norm(&p), "{}", r.name);
            }
        }
        let p = make_params(2).unwrap();
        assert_eq!(t(0, 0, 4, 0).norm(&p), 160);
        assert_eq!(t(5, 0, 0, 0).norm(&p), 160);
        assert_eq!(t(0, 0, 0, 4).norm(&p), 164);
        assert_eq!(t(4, 1, 0, 0).norm(&p), 164);
    }

    #[test]
    fn weights_decrease() {
        for n in 1..=3 {
            let p = make_params(n).unwrap();
            for r in rules(&p) {
                for s in r.rhs {
                    assert!(termination_weight(&p, s) < termination_weight(&p, r.lhs));
                }
            }
        }
    }

    #[test]
    fn reduce_examples() {
        let p = make_params(2).unwrap();
        assert_eq!(reduce(&mono(0, 2, 0, 0), &p).unwrap(), mono(1, 0, 1, 0).add(&mono(0, 0, 0, 1)));
        assert_eq!(reduce(&mono(0, 0, 4, 0), &p).unwrap(), mono(5, 0, 0, 0).add(&mono(0, 1, 0, 0)));
        assert_eq!(reduce(&mono(0, 3, 0, 0), &p).unwrap(), mono(1, 1, 1, 0).add(&mono(0, 1, 0, 1)));
        assert_eq!(reduce(&mono(0, 2, 0, 0), &p).unwrap().to_string(), "x v + w");
    }

    #[test]
    fn multiply_examples() {
        let p = make_params(2).unwrap();
        assert_eq!(multiply(&mono(1, 0, 0, 0), &mono(0, 0, 1, 0), &p).unwrap(), mono(1, 0, 1, 0));
        assert_eq!(multiply(&mono(0, 1, 0, 0), &mono(0, 1, 0, 0), &p).unwrap().to_string(), "x v + w");
        assert_eq!(
            multiply(&mono(0, 0, 0, 3), &mono(0, 0, 0, 1), &p).unwrap(),
            mono(4, 1, 0, 0).add(&mono(0, 0, 1, 0))
        );
    }

    #[test]
    fn curve_identity() {
        for n in [1, 2] {
            let p = make_params(n).unwrap();
            assert!(verify_curve_identity(&p).unwrap());
            let mut broken = curve_relation(&p);
            broken.add_term(t(p.q0 + 1, 0, 0, 0), Gf2::ONE);
            assert!(!reduce(&broken, &p).unwrap().is_zero());
        }
    }

    #[test]
    fn growth_guard() {
        let p = make_params(1).unwrap();
        let big = mono(0, 4 * p.q * p.m_embed, 0, 0);
        assert!(matches!(reduce(&big, &p), Err(Error::GrowthLimit { .. })));
    }

    fn random_poly(rng: &mut ChaCha8Rng, max_exp: u64, terms: usize) -> FFPoly {
        let mut p = FFPoly::zero();
        for _ in 0..terms {
            let e = t(
                rng.gen_range(0..=max_exp),
                rng.gen_range(0..=max_exp),
                rng.gen_range(0..=max_exp),
                rng.gen_range(0..=max_exp),
            );
            p.add_term(e, Gf2::ONE);
        }
        p
    }

    #[test]
    fn strategy_independence() {
        let mut rng = ChaCha8Rng::seed_from_u64(2024);
        for n in [1, 2] {
            let p = make_params(n).unwrap();
            let mut reducer = Reducer::new(p);
            for _ in 0..500 {
                let poly = random_poly(&mut rng, 6, 4);
                let left = reduce_stepwise(&poly, &p, |_| 0).unwrap();
                let mut pick = ChaCha8Rng::seed_from_u64(rng.gen());
                let random = reduce_stepwise(&poly, &p, |k| pick.gen_range(0..k)).unwrap();
                let cached = reducer.reduce(&poly).unwrap();
                assert_eq!(left, random);
                assert_eq!(left, cached);
                assert!(left.is_canonical(&p));
                assert!(left.max_norm(&p) <= poly.max_norm(&p));
            }
        }
    }

    #[test]
    fn sigma_examples() {
        let p = make_params(2).unwrap();
        let mut r = Reducer::new(p);
        assert_eq!(sigma_rank(&mut r, 1), RankPair { image_dim: 5, target_dim: 5 });
        assert_eq!(sigma_rank(&mut r, 2), RankPair { image_dim: 14, target_dim: 14 });
        assert_eq!(sigma_rank(&mut r, 9), RankPair { image_dim: 246, target_dim: 246 });
    }

    #[test]
    fn mu_examples() {
        let p = make_params(2).unwrap();
        let mut r = Reducer::new(p);
        assert_eq!(mu_rank(&mut r, 1, 2), RankPair { image_dim: 30, target_dim: 30 });
        assert_eq!(mu_rank(&mut r, 0, 1), RankPair { image_dim: 5, target_dim: 5 });
        assert_eq!(mu_rank(&mut r, 1, 1), RankPair { image_dim: 14, target_dim: 14 });
    }
}
