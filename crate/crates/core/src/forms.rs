//! Degree-`t` forms on `P^4` vanishing on the embedded curve, computed two
//! independent ways:
//!
//! * symbolically, as the kernel of "dehomogenize, then reduce to canonical
//!   monomials" over `GF(2)`;
//! * numerically, as the kernel of evaluation at every rational point over `F_q`.
//!
//! A form of degree `t` not containing the curve meets it in `t m_embed`
//! points counted with multiplicity, so vanishing at more than that many
//! (points plus tangency conditions) forces containment.

use serde::Serialize;

use crate::curve::Curve;
use crate::dims::{binom4, kappa_closed, printed_low_range_kappa, table_for, KappaClosed};
use crate::error::{Error, Result};
use crate::gf::FieldElement;
use crate::linalg::{BitMatrix, BitVec, FqMatrix};
use crate::params::SuzukiParams;
use crate::rewrite::{coordinate_columns, Reducer};
use crate::tuples::ExponentTuple;

/// Exponents of `x1^e1 ... x5^e5`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct MonomialDegT {
    pub e: [u64; 5],
}

impl MonomialDegT {
    pub fn degree(&self) -> u64 {
        self.e.iter().sum()
    }

    /// `x_i / x_5` substituted by `x, y, v, w`.
    pub fn dehomogenize(&self) -> ExponentTuple {
        ExponentTuple::new(self.e[0], self.e[1], self.e[2], self.e[3])
    }

    pub fn times(&self, other: &MonomialDegT) -> MonomialDegT {
        let mut e = self.e;
        for (a, b) in e.iter_mut().zip(other.e) {
            *a += b;
        }
        MonomialDegT { e }
    }
}

impl std::fmt::Display for MonomialDegT {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for (i, &e) in self.e.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            write!(f, "x{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// All `C(t+4, 4)` monomials of degree `t` in graded colex order (compare
/// the exponent of `x5` first, then `x4`, and so on).
pub fn monomials(t: u64) -> Vec<MonomialDegT> {
    let mut out = Vec::new();
    for e1 in 0..=t {
        for e2 in 0..=t - e1 {
            for e3 in 0..=t - e1 - e2 {
                for e4 in 0..=t - e1 - e2 - e3 {
                    out.push(MonomialDegT {
                        e: [e1, e2, e3, e4, t - e1 - e2 - e3 - e4],
                    });
                }
            }
        }
    }
    out.sort_by_key(|m| {
        let mut k = m.e;
        k.reverse();
        k
    });
    out
}

fn index_of(mons: &[MonomialDegT], m: &MonomialDegT) -> usize {
    mons.binary_search_by_key(&colex_key(m), colex_key)
        .expect("monomial of the right degree")
}

fn colex_key(m: &MonomialDegT) -> [u64; 5] {
    let mut k = m.e;
    k.reverse();
    k
}

/// Coefficient vectors over `GF(2)` indexed by `monomials(t)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormKernel {
    pub t: u64,
    pub basis: Vec<BitVec>,
}

impl FormKernel {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Each form as its list of monomials (all coefficients are one).
    pub fn forms(&self) -> Vec<Vec<MonomialDegT>> {
        let mons = monomials(self.t);
        self.basis
            .iter()
            .map(|v| v.ones().map(|i| mons[i]).collect())
            .collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.forms()
                .into_iter()
                .map(|f| {
                    serde_json::Value::Array(
                        f.into_iter()
                            .map(|m| serde_json::json!({ "monomial": m.e, "coeff": "1" }))
                            .collect(),
                    )
                })
                .collect(),
        )
    }
}

/// Columns: `monomials(t)`; rows: canonical basis of `L(t m_embed P_inf)`.
pub fn reduction_matrix(reducer: &mut Reducer, t: u64) -> BitMatrix {
    let m = t * reducer.params().m_embed;
    let mons = monomials(t);
    let (rows, columns) = coordinate_columns(reducer, m, mons.iter().map(|x| x.dehomogenize()));
    BitMatrix::from_columns(rows, &columns)
}

pub fn kernel(reducer: &mut Reducer, t: u64) -> FormKernel {
    FormKernel {
        t,
        basis: reduction_matrix(reducer, t).kernel_basis(),
    }
}

/// `kappa(t)` as `C(t+4, 4)` minus the rank of the reduction matrix.
pub fn kappa_rank(reducer: &mut Reducer, t: u64) -> u64 {
    let rank = reduction_matrix(reducer, t).rank() as u64;
    binom4(t as i64 + 4) - rank
}

/// Number of tangency rows needed on top of the `q^2 + 1` point rows so
/// that the row count exceeds `t m_embed`.
pub fn tangency_rows_needed(params: &SuzukiParams, t: u64) -> Result<u64> {
    let points = params.q * params.q + 1;
    let bound = t * params.m_embed;
    let needed = (bound + 1).saturating_sub(points);
    if needed > params.q * params.q {
        return Err(Error::Precondition(format!(
            "evaluation cannot certify degree {t}: {points} points plus {} tangency rows \
             do not exceed the intersection bound t * deg = {bound}",
            params.q * params.q
        )));
    }
    Ok(needed)
}

/// Evaluation matrix over `F_q`: one row per rational point (infinity last),
/// then tangency rows at the first affine points as needed.
pub fn evaluation_matrix(curve: &Curve, t: u64) -> Result<FqMatrix> {
    let f = curve.field();
    let jets = tangency_rows_needed(curve.params(), t)? as usize;
    let mons = monomials(t);
    let affine = curve.enumerate_points();
    let mut m = FqMatrix::zeros(0, mons.len());
    let powers = |vals: &[FieldElement; 5]| -> Vec<Vec<FieldElement>> {
        vals.iter()
            .map(|&v| {
                let mut p = vec![FieldElement::ONE; t as usize + 1];
                for k in 1..=t as usize {
                    p[k] = f.mul(p[k - 1], v);
                }
                p
            })
            .collect()
    };
    let mut row = vec![FieldElement::ZERO; mons.len()];
    for e in curve.embedded_points() {
        let pw = powers(&e.coords);
        for (j, mon) in mons.iter().enumerate() {
            row[j] = (0..5).fold(FieldElement::ONE, |acc, i| f.mul(acc, pw[i][mon.e[i] as usize]));
        }
        m.push_row(&row);
    }
    for &p in affine.iter().take(jets) {
        let [x, y, v, w] = curve.coordinates(p);
        let vals = [x, y, v, w, FieldElement::ONE];
        let d = curve.tangent(p);
        let pw = powers(&vals);
        for (j, mon) in mons.iter().enumerate() {
            // d/dx of x^e1 y^e2 v^e3 w^e4; only odd exponents survive in characteristic 2.
            let mut acc = FieldElement::ZERO;
            for i in (0..4).filter(|&i| mon.e[i] % 2 == 1) {
                let mut term = d[i];
                for (k, col) in pw.iter().enumerate().take(4) {
                    let e = if k == i { mon.e[k] - 1 } else { mon.e[k] };
                    term = f.mul(term, col[e as usize]);
                }
                acc = f.add(acc, term);
            }
            row[j] = acc;
        }
        m.push_row(&row);
    }
    Ok(m)
}

/// `kappa(t)` as the kernel dimension of the evaluation matrix over `F_q`.
pub fn kappa_eval(curve: &Curve, t: u64) -> Result<u64> {
    let m = evaluation_matrix(curve, t)?;
    Ok((m.ncols() - m.rank(curve.field())) as u64)
}

fn quadric_vector(mons: &[MonomialDegT], factor: &MonomialDegT) -> BitVec {
    let terms = [[0, 2, 0, 0, 0], [1, 0, 1, 0, 0], [0, 0, 0, 1, 1]];
    BitVec::from_ones(
        mons.len(),
        terms
            .iter()
            .map(|&e| index_of(mons, &MonomialDegT { e }.times(factor))),
    )
}

/// The quadric `x2^2 + x1 x3 + x4 x5` as a vector over `monomials(2)`.
pub fn quadric_form() -> BitVec {
    quadric_vector(&monomials(2), &MonomialDegT { e: [0; 5] })
}

/// The degree-2 kernel; must be one-dimensional and spanned by the quadric.
pub fn unique_quadric(reducer: &mut Reducer) -> Result<FormKernel> {
    let k = kernel(reducer, 2);
    if k.dim() != 1 || k.basis[0] != quadric_form() {
        return Err(Error::Defect(format!(
            "degree-2 kernel is {:?}, expected the single quadric x2^2 + x1 x3 + x4 x5",
            k.forms()
        )));
    }
    Ok(k)
}

/// Span of `Q * m` over degree-`(t-2)` monomials `m`, in `monomials(t)` coordinates.
pub fn quadric_multiples(t: u64) -> Result<BitMatrix> {
    if t < 2 {
        return Err(Error::Precondition(format!("quadric multiples need t >= 2, got {t}")));
    }
    let mons = monomials(t);
    let rows = monomials(t - 2)
        .iter()
        .map(|m| quadric_vector(&mons, m))
        .collect();
    Ok(BitMatrix::from_rows(mons.len(), rows))
}

fn form_from(t: u64, terms: &[[u64; 5]]) -> BitVec {
    let mons = monomials(t);
    BitVec::from_ones(mons.len(), terms.iter().map(|&e| index_of(&mons, &MonomialDegT { e })))
}

/// `x1^(q0+1) + x3^q0 x5 + x2 x5^q0` and `x1^q0 x2 + x4^q0 x5 + x3 x5^q0`.
pub fn explicit_extra_forms(params: &SuzukiParams) -> [BitVec; 2] {
    let q0 = params.q0;
    let t = q0 + 1;
    [
        form_from(t, &[[q0 + 1, 0, 0, 0, 0], [0, 0, q0, 0, 1], [0, 1, 0, 0, q0]]),
        form_from(t, &[[q0, 1, 0, 0, 0], [0, 0, 0, q0, 1], [0, 0, 1, 0, q0]]),
    ]
}

#[derive(Debug, Clone, Serialize)]
pub struct ExtraForms {
    pub t: u64,
    pub kernel_dim: u64,
    pub quadric_multiples_dim: u64,
    /// Kernel dimension modulo the quadric multiples.
    pub count: u64,
    pub explicit_in_kernel: [bool; 2],
    pub explicit_outside_quadric_multiples: [bool; 2],
    /// Rank gained by appending both explicit forms to the quadric multiples.
    pub explicit_rank_gain: u64,
}

impl ExtraForms {
    pub fn holds(&self) -> bool {
        self.count >= 4
            && self.explicit_in_kernel.iter().all(|&b| b)
            && self.explicit_outside_quadric_multiples.iter().all(|&b| b)
    }
}

/// Degree-`(q0+1)` forms vanishing on the curve but not multiples of the quadric.
pub fn extra_forms(reducer: &mut Reducer) -> Result<ExtraForms> {
    let p = *reducer.params();
    let t = p.q0 + 1;
    let red = reduction_matrix(reducer, t);
    let kernel_dim = (red.ncols() - red.rank()) as u64;
    let qm = quadric_multiples(t)?;
    let qm_dim = qm.rank() as u64;
    let forms = explicit_extra_forms(&p);
    let in_kernel = [red.mul_vec(&forms[0]).is_zero(), red.mul_vec(&forms[1]).is_zero()];
    let outside = [!qm.row_space_contains(&forms[0]), !qm.row_space_contains(&forms[1])];
    let mut rows = qm.rows().to_vec();
    rows.extend(forms.iter().cloned());
    let gain = BitMatrix::from_rows(qm.ncols(), rows).rank() as u64 - qm_dim;
    let out = ExtraForms {
        t,
        kernel_dim,
        quadric_multiples_dim: qm_dim,
        count: kernel_dim - binom4(p.q0 as i64 + 3),
        explicit_in_kernel: in_kernel,
        explicit_outside_quadric_multiples: outside,
        explicit_rank_gain: gain,
    };
    if !out.holds() {
        return Err(Error::Defect(format!("extra degree-{t} forms check failed: {out:?}")));
    }
    Ok(out)
}

/// One line of the hypersurface-count table.
#[derive(Debug, Clone, Serialize)]
pub struct KappaRow {
    pub t: u64,
    pub kappa_rank: u64,
    pub kappa_eval: Option<u64>,
    pub kappa_closed_or_bound: Option<KappaClosed>,
    pub quadric_multiples_dim: u64,
    pub oracles_agree: Option<bool>,
    /// `C(t+4,4) - C(t+2,4)` where the closed low-range formula applies.
    pub printed_low_range: Option<u64>,
    pub printed_low_range_consistent: Option<bool>,
}

pub fn kappa_row(reducer: &mut Reducer, curve: Option<&Curve>, t: u64) -> Result<KappaRow> {
    if t < 2 {
        return Err(Error::Precondition(format!("kappa needs t >= 2, got {t}")));
    }
    let p = *reducer.params();
    let kr = kappa_rank(reducer, t);
    let ke = match curve {
        Some(c) => Some(kappa_eval(c, t)?),
        None => None,
    };
    let table = table_for(p, t);
    let closed = kappa_closed(&table, t).ok();
    let printed = (p.q0 >= 4 && t <= p.q0).then(|| printed_low_range_kappa(t));
    Ok(KappaRow {
        t,
        kappa_rank: kr,
        kappa_eval: ke,
        kappa_closed_or_bound: closed,
        quadric_multiples_dim: quadric_multiples(t)?.rank() as u64,
        oracles_agree: ke.map(|e| e == kr),
        printed_low_range: printed,
        printed_low_range_consistent: printed.map(|v| v == kr),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::make_params;

    fn reducer(n: u32) -> Reducer {
        Reducer::new(make_params(n).unwrap())
    }

    #[test]
    fn monomial_counts_and_order() {
        assert_eq!(monomials(1).len(), 5);
        assert_eq!(monomials(2).len(), 15);
        assert_eq!(monomials(9).len(), 715);
        let m1: Vec<_> = monomials(1).iter().map(|m| m.to_string()).collect();
        assert_eq!(m1, ["x1", "x2", "x3", "x4", "x5"]);
        assert!(monomials(4).iter().all(|m| m.degree() == 4));
    }

    #[test]
    fn reduction_matrix_columns() {
        let mut r = reducer(2);
        let red = reduction_matrix(&mut r, 2);
        let mons = monomials(2);
        let col = |e: [u64; 5]| {
            let j = index_of(&mons, &MonomialDegT { e });
            (0..red.nrows()).filter(|&i| red.get(i, j)).count()
        };
        assert_eq!(col([0, 2, 0, 0, 0]), 2);
        assert_eq!(col([1, 0, 0, 0, 1]), 1);
        assert_eq!(red.rank(), 14);
    }

    #[test]
    fn kappa_by_rank() {
        let mut r = reducer(2);
        assert_eq!(kappa_rank(&mut r, 2), 1);
        assert_eq!(kappa_rank(&mut r, 4), 15);
        assert_eq!(kappa_rank(&mut r, 9), 469);
    }

    #[test]
    fn kappa_by_evaluation() {
        let c1 = Curve::new(make_params(1).unwrap()).unwrap();
        assert_eq!(kappa_eval(&c1, 2).unwrap(), 1);
        let c2 = Curve::new(make_params(2).unwrap()).unwrap();
        assert_eq!(kappa_eval(&c2, 2).unwrap(), 1);
    }

    #[test]
    fn tangency_rows() {
        let p1 = make_params(1).unwrap();
        assert_eq!(tangency_rows_needed(&p1, 4).unwrap(), 0);
        assert_eq!(tangency_rows_needed(&p1, 5).unwrap(), 1);
        assert_eq!(tangency_rows_needed(&p1, 9).unwrap(), 53);
        assert!(tangency_rows_needed(&p1, 10).is_err());
        let p2 = make_params(2).unwrap();
        assert_eq!(tangency_rows_needed(&p2, 11).unwrap(), 0);
    }

    #[test]
    fn quadric() {
        for n in [1, 2] {
            let k = unique_quadric(&mut reducer(n)).unwrap();
            let support: Vec<String> = k.forms()[0].iter().map(|m| m.to_string()).collect();
            let mut support = support;
            support.sort();
            assert_eq!(support, ["x1 x3", "x2^2", "x4 x5"]);
        }
        // Vanishes at the image of infinity (0:0:0:1:0).
        let q = quadric_form();
        let mons = monomials(2);
        assert!(q.ones().all(|i| mons[i].e != [0, 0, 0, 2, 0]));
    }

    #[test]
    fn quadric_multiples_dims() {
        let mut r = reducer(2);
        for (t, dim) in [(2, 1), (3, 5), (4, 15)] {
            let qm = quadric_multiples(t).unwrap();
            assert_eq!(qm.rank(), dim);
            let red = reduction_matrix(&mut r, t);
            assert!(qm.rows().iter().all(|v| red.mul_vec(v).is_zero()));
        }
        assert!(quadric_multiples(1).is_err());
    }

    #[test]
    fn extra_degree_forms() {
        let e = extra_forms(&mut reducer(2)).unwrap();
        assert_eq!(e.t, 5);
        assert!(e.count >= 4);
        assert_eq!(e.explicit_rank_gain, 2);
        let c = Curve::new(make_params(2).unwrap()).unwrap();
        let ev = evaluation_matrix(&c, 5).unwrap();
        for f in explicit_extra_forms(c.params()) {
            for i in 0..ev.nrows() {
                let s = f.ones().fold(FieldElement::ZERO, |acc, j| c.field().add(acc, ev.get(i, j)));
                assert!(s.is_zero());
            }
        }
    }

    #[test]
    fn gf2_and_fq_kernels_agree() {
        let mut r = reducer(2);
        let field = crate::gf::GfField::for_suzuki(2).unwrap();
        for t in [2, 3, 5] {
            let red = reduction_matrix(&mut r, t);
            let fq = FqMatrix::from_bits(&red);
            assert_eq!(red.kernel_basis().len(), fq.kernel_basis(&field).len());
        }
    }
}
