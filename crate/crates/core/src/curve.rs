//! `F_q`-rational points of the Suzuki curve and their images in `P^4`
//! under `P -> (x : y : v : w : 1)`.

use serde::Serialize;

use crate::error::Result;
use crate::gf::{FieldElement, GfField};
use crate::params::SuzukiParams;
use crate::rewrite::{Coeff, FFPoly};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct AffinePoint {
    pub x: FieldElement,
    pub y: FieldElement,
}

/// Homogeneous coordinates `(x1 : x2 : x3 : x4 : x5)`, scaled so that the
/// last nonzero coordinate is one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct EmbeddedPoint {
    pub coords: [FieldElement; 5],
}

impl EmbeddedPoint {
    pub fn normalized(coords: [FieldElement; 5], field: &GfField) -> Self {
        let last = coords
            .iter()
            .rev()
            .find(|c| !c.is_zero())
            .copied()
            .expect("projective point has a nonzero coordinate");
        let inv = field.inv(last).expect("nonzero");
        EmbeddedPoint {
            coords: coords.map(|c| field.mul(c, inv)),
        }
    }

    /// `x2^2 + x1 x3 + x4 x5`.
    pub fn quadric_value(&self, field: &GfField) -> FieldElement {
        let [x1, x2, x3, x4, x5] = self.coords;
        field.add(
            field.mul(x2, x2),
            field.add(field.mul(x1, x3), field.mul(x4, x5)),
        )
    }
}

#[derive(Debug, Clone)]
pub struct Curve {
    params: SuzukiParams,
    field: GfField,
}

impl Curve {
    pub fn new(params: SuzukiParams) -> Result<Self> {
        Ok(Curve {
            params,
            field: GfField::for_suzuki(params.n)?,
        })
    }

    pub fn params(&self) -> &SuzukiParams {
        &self.params
    }

    pub fn field(&self) -> &GfField {
        &self.field
    }

    /// Whether `(x, y)` satisfies `y^q - y = x^q0 (x^q - x)`.
    pub fn contains(&self, p: AffinePoint) -> bool {
        let f = &self.field;
        let (q, q0) = (self.params.q, self.params.q0);
        let lhs = f.add(f.pow(p.y, q), p.y);
        let rhs = f.mul(f.pow(p.x, q0), f.add(f.pow(p.x, q), p.x));
        lhs == rhs
    }

    /// All affine `F_q`-points, ordered by `(x, y)` bit-patterns. Both sides
    /// of the equation vanish identically on `F_q`, so there are `q^2`.
    pub fn enumerate_points(&self) -> Vec<AffinePoint> {
        let f = &self.field;
        let pts: Vec<AffinePoint> = f
            .enumerate()
            .flat_map(|x| f.enumerate().map(move |y| AffinePoint { x, y }))
            .collect();
        debug_assert!(pts.iter().all(|&p| self.contains(p)));
        pts
    }

    /// `v = y^(2q0) + x^(2q0+1)` and `w = y^(2q0) x + v^(2q0)`.
    pub fn eval_vw(&self, p: AffinePoint) -> (FieldElement, FieldElement) {
        let f = &self.field;
        let q0 = self.params.q0;
        let y2 = f.pow(p.y, 2 * q0);
        let v = f.add(y2, f.pow(p.x, 2 * q0 + 1));
        let w = f.add(f.mul(y2, p.x), f.pow(v, 2 * q0));
        (v, w)
    }

    /// Values of `(x, y, v, w)` at `p`.
    pub fn coordinates(&self, p: AffinePoint) -> [FieldElement; 4] {
        let (v, w) = self.eval_vw(p);
        [p.x, p.y, v, w]
    }

    pub fn embed(&self, p: AffinePoint) -> EmbeddedPoint {
        let [x, y, v, w] = self.coordinates(p);
        EmbeddedPoint {
            coords: [x, y, v, w, FieldElement::ONE],
        }
    }

    /// The image of the point at infinity, where `w` has the largest pole.
    pub fn embed_infinity(&self) -> EmbeddedPoint {
        let z = FieldElement::ZERO;
        EmbeddedPoint {
            coords: [z, z, z, FieldElement::ONE, z],
        }
    }

    /// Images of all `q^2 + 1` rational points; the point at infinity is last.
    pub fn embedded_points(&self) -> Vec<EmbeddedPoint> {
        let mut pts: Vec<_> = self
            .enumerate_points()
            .into_iter()
            .map(|p| self.embed(p))
            .collect();
        pts.push(self.embed_infinity());
        pts
    }

    /// Derivatives of `(x, y, v, w)` with respect to the local parameter
    /// `x - x(p)`: `dy = x^q0 dx`, `dv = x^(2q0) dx`, `dw = y^(2q0) dx`.
    pub fn tangent(&self, p: AffinePoint) -> [FieldElement; 4] {
        let f = &self.field;
        let q0 = self.params.q0;
        [
            FieldElement::ONE,
            f.pow(p.x, q0),
            f.pow(p.x, 2 * q0),
            f.pow(p.y, 2 * q0),
        ]
    }

    pub fn eval_ffpoly<C: Coeff>(&self, poly: &FFPoly<C>, p: AffinePoint) -> FieldElement {
        let f = &self.field;
        let vals = self.coordinates(p);
        poly.terms().fold(FieldElement::ZERO, |acc, (t, c)| {
            let m = t
                .to_array()
                .iter()
                .zip(vals)
                .fold(c.to_field(), |m, (&e, val)| f.mul(m, f.pow(val, e)));
            f.add(acc, m)
        })
    }
}
