//! The full invariant suite behind `suzuki verify`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::curve::Curve;
use crate::dims::{dim_report, table_for};
use crate::error::Result;
use crate::forms::{extra_forms, kappa_eval, kappa_rank, kernel, quadric_multiples, unique_quadric};
use crate::gf::FieldElement;
use crate::params::SuzukiParams;
use crate::rewrite::{mu_rank, reduce_stepwise, sigma_rank, verify_curve_identity, FFPoly, Gf2, Coeff, Reducer};
use crate::semigroup::SemigroupTable;
use crate::tuples::{basis_tuples, normalize, ExponentTuple};

/// Seed of every randomized check.
pub const SEED: u64 = 0x5a2;

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: &str, passed: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.to_string(),
            passed,
            detail: detail.into(),
        }
    }

    fn from_result(name: &str, r: Result<(bool, String)>) -> Self {
        match r {
            Ok((passed, detail)) => Check::new(name, passed, detail),
            Err(e) => Check::new(name, false, format!("error: {e}")),
        }
    }
}

/// Largest `t` for the two-oracle comparison at this size.
pub fn oracle_tmax(params: &SuzukiParams) -> u64 {
    match params.n {
        1 | 2 => 2 * params.q0 + 3,
        3 => params.q0 + 1,
        _ => 2,
    }
}

fn random_poly(rng: &mut ChaCha8Rng, max_exp: u64, terms: usize) -> FFPoly {
    let mut p = FFPoly::zero();
    for _ in 0..terms {
        let mut e = || rng.gen_range(0..=max_exp);
        p.add_term(ExponentTuple::new(e(), e(), e(), e()), Gf2::ONE);
    }
    p
}

pub fn run_suite(params: SuzukiParams) -> Result<Vec<Check>> {
    let p = params;
    let mut checks = Vec::new();
    let table = SemigroupTable::with_default_bound(p);
    let curve = Curve::new(p)?;
    let mut reducer = Reducer::new(p);
    let f = curve.field();

    checks.push(Check::new(
        "params-identities",
        p.canonical_pole == 2 * (p.q0 - 1) * p.m_embed && p.q == 1 << p.field_degree(),
        format!("2g-2 = {}", p.canonical_pole),
    ));

    checks.push(Check::from_result("gaps-equal-genus", (|| {
        let s = table.summary()?;
        Ok((
            s.gap_count == p.genus && s.frobenius == 2 * p.genus - 1,
            format!("gaps = {}, frobenius = {}", s.gap_count, s.frobenius),
        ))
    })()));

    checks.push(Check::from_result("very-ample", (|| {
        let m = table.smallest_very_ample()?;
        let dim = table.embedding_dimension(m)?;
        Ok((m == p.m_embed && dim == 4, format!("smallest = {m}, dimension = {dim}")))
    })()));

    checks.push(Check::from_result("basis-length", (|| {
        let limit = if p.n <= 2 { 2 * p.genus } else { 3 * p.m_embed };
        for m in 0..=limit {
            if basis_tuples(&p, m).len() as u64 != table.count_up_to(m)? {
                return Ok((false, format!("mismatch at m = {m}")));
            }
        }
        Ok((true, format!("m in 0..={limit}")))
    })()));

    {
        let limit = 3 * p.m_embed;
        let k = limit / p.q;
        let mut ok = true;
        let mut count = 0;
        for a in 0..=k {
            for b in 0..=k {
                for c in 0..=k {
                    for d in 0..=k {
                        let t = ExponentTuple::new(a, b, c, d);
                        if t.norm(&p) > limit {
                            continue;
                        }
                        count += 1;
                        let n = normalize(t, &p);
                        ok &= n.tuple().norm(&p) == t.norm(&p)
                            && n.tuple().is_canonical(&p)
                            && normalize(n.tuple(), &p) == n;
                    }
                }
            }
        }
        checks.push(Check::new("normalize", ok, format!("{count} tuples of norm <= {limit}")));
    }

    if p.q0 >= 4 {
        let tmax = 2 * p.q0 + 3;
        let t = table_for(p, tmax);
        let bad: Vec<u64> = (0..=tmax)
            .filter(|&i| !dim_report(&t, i).map(|r| r.agree).unwrap_or(false))
            .collect();
        checks.push(Check::new("dim-closed-vs-oracle", bad.is_empty(), format!("t in 0..={tmax}, mismatches {bad:?}")));
    }

    checks.push(Check::from_result("curve-identity", verify_curve_identity(&p).map(|b| (b, String::new()))));

    {
        let rels: Vec<FFPoly> = crate::rewrite::rules(&p)
            .iter()
            .map(|r| FFPoly::from_monomials([r.lhs, r.rhs[0], r.rhs[1]]))
            .collect();
        let pts = curve.enumerate_points();
        let ok = pts.iter().all(|&pt| rels.iter().all(|r| curve.eval_ffpoly(r, pt).is_zero()));
        checks.push(Check::new("rules-vanish-at-points", ok, format!("{} points", pts.len())));

        let emb = curve.embedded_points();
        let on_quadric = emb.iter().all(|e| e.quadric_value(f).is_zero());
        let mut sorted = emb.clone();
        sorted.sort();
        sorted.dedup();
        checks.push(Check::new(
            "embedding-on-quadric-and-injective",
            on_quadric && sorted.len() == emb.len(),
            format!("{} embedded points", emb.len()),
        ));
    }

    checks.push(Check::from_result("unique-quadric", unique_quadric(&mut reducer).map(|k| (true, format!("{:?}", k.forms()[0].iter().map(|m| m.to_string()).collect::<Vec<_>>())))));

    {
        let tmax = oracle_tmax(&p);
        let mut bad = Vec::new();
        for t in 2..=tmax {
            let kr = kappa_rank(&mut reducer, t);
            match kappa_eval(&curve, t) {
                Ok(ke) if ke == kr => {}
                Ok(ke) => bad.push(format!("t={t}: rank {kr} vs eval {ke}")),
                Err(e) => bad.push(format!("t={t}: {e}")),
            }
        }
        checks.push(Check::new("kappa-oracles-agree", bad.is_empty(), format!("t in 2..={tmax} {bad:?}")));
    }

    {
        let tmax = if p.n <= 2 { 2 * p.q0 + 1 } else { 3 };
        let mut bad = Vec::new();
        for t in 2..=tmax {
            let k = kernel(&mut reducer, t);
            let red = crate::forms::reduction_matrix(&mut reducer, t);
            let qm = quadric_multiples(t)?;
            let inside = qm.rows().iter().all(|v| red.mul_vec(v).is_zero());
            let equal = qm.rank() == k.dim();
            let expect_equal = p.q0 >= 4 && t <= p.q0;
            if !inside || (expect_equal && !equal) {
                bad.push(t);
            }
        }
        checks.push(Check::new("quadric-multiples", bad.is_empty(), format!("t in 2..={tmax}, failures {bad:?}")));
    }

    checks.push(Check::from_result("extra-forms", extra_forms(&mut reducer).map(|e| (e.holds(), format!("count = {}", e.count)))));

    if p.n <= 3 {
        let mut ts: Vec<u64> = (1..=p.q0).collect();
        if p.n <= 2 {
            ts.extend([2 * p.q0 + 1, 2 * p.q0 + 2]);
        }
        let bad: Vec<u64> = ts.iter().copied().filter(|&t| !sigma_rank(&mut reducer, t).surjective()).collect();
        checks.push(Check::new("sigma-surjective", bad.is_empty(), format!("t in {ts:?}, failures {bad:?}")));
        let mut bad = Vec::new();
        for a in 0..p.q0 {
            for b in 0..p.q0 - a {
                if !mu_rank(&mut reducer, a, b).surjective() {
                    bad.push((a, b));
                }
            }
        }
        checks.push(Check::new("mu-surjective", bad.is_empty(), format!("alpha + beta <= {}, failures {bad:?}", p.q0 - 1)));
    }

    {
        let mut rng = ChaCha8Rng::seed_from_u64(SEED);
        let mut ok = true;
        let rounds = if p.n <= 2 { 1000 } else { 100 };
        for _ in 0..rounds {
            let poly = random_poly(&mut rng, 2 * p.q0, 4);
            let a = reduce_stepwise(&poly, &p, |_| 0)?;
            let mut pick = ChaCha8Rng::seed_from_u64(rng.gen());
            let b = reduce_stepwise(&poly, &p, |k| pick.gen_range(0..k))?;
            ok &= a == b && a == reducer.reduce(&poly)?;
        }
        checks.push(Check::new("strategy-independence", ok, format!("{rounds} random polynomials")));
    }

    {
        let mut rng = ChaCha8Rng::seed_from_u64(SEED + 1);
        let pts = curve.enumerate_points();
        let mut ok = true;
        let rounds = if p.n <= 2 { 100 } else { 5 };
        for _ in 0..rounds {
            let poly = random_poly(&mut rng, 2 * p.q0, 5);
            let red = reducer.reduce(&poly)?;
            ok &= red.max_norm(&p) <= poly.max_norm(&p);
            ok &= pts.iter().all(|&pt| curve.eval_ffpoly(&poly, pt) == curve.eval_ffpoly(&red, pt));
        }
        checks.push(Check::new("eval-reduce-compatible", ok, format!("{rounds} polynomials at {} points", pts.len())));
    }

    {
        let mut rng = ChaCha8Rng::seed_from_u64(SEED + 2);
        let mut ok = true;
        for _ in 0..10_000 {
            let mut e = || FieldElement(rng.gen_range(0..f.order() as u32));
            let (a, b, c) = (e(), e(), e());
            ok &= f.mul(a, b) == f.mul(b, a)
                && f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))
                && f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))
                && f.add(a, a).is_zero()
                && f.pow(a, f.order()) == a
                && (a.is_zero() || f.mul(a, f.inv(a)?) == FieldElement::ONE);
        }
        checks.push(Check::new("field-axioms", ok, "10000 random triples"));
    }

    Ok(checks)
}
