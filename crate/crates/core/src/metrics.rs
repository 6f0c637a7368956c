//! Circumsphere, incenter distance and the exact Grace–Danielsson verdict.
//!
//! `d` is measured from the circumcenter to the insphere center `(c₁, c₂, r)`,
//! never to the base tangent point. Only `R²` and `d²` are formed; the
//! inequality `R² − d² − 3r² ≥ 2rR` is decided from squares and signs.

use crate::base::{circumcenter2, Point2};
use crate::error::{Error, Result};
use crate::linalg::Point3;
use crate::scalar::{sign_with_root, Scalar};
use crate::tetra::Tetrahedron;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Metrics {
    /// Circumcenter.
    pub o: Point3,
    /// Squared circumradius.
    pub r2_circ: Scalar,
    /// Squared incenter–circumcenter distance.
    pub d2: Scalar,
    pub r: Scalar,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    /// `(R² − d² − 3r²)² − 4r²R²`.
    pub squared_gap: Scalar,
    /// Sign of `R² − d² − 3r²`.
    pub linear_side_sign: i8,
    pub satisfied: bool,
    pub equality: bool,
    /// The squared gap equals `((R+r)(R−3r) − d²)((R−r)(R+3r) − d²)` with `R` kept symbolic.
    pub factorization_holds: bool,
}

fn project(p: &Point3) -> Point2 {
    Point2 { x1: p.x1.clone(), x2: p.x2.clone() }
}

/// Circumcenter of the tetrahedron. Its projection is the base circumcenter,
/// and the height follows from `‖o − x‖² = ‖o − w‖²`.
pub fn circumcenter3(tet: &Tetrahedron) -> Result<Point3> {
    if tet.w.x3.is_zero() {
        return Err(Error::FlatTetrahedron);
    }
    let (x, y, z) = (project(&tet.x), project(&tet.y), project(&tet.z));
    let o = circumcenter2(&x, &y, &z)?;
    let w = project(&tet.w);
    let o3 = (o.dist2(&w) + tet.w.x3.square() - o.dist2(&x)) / (&tet.w.x3 * Scalar::int(2));
    Ok(Point3::lift(&o, o3))
}

pub fn metrics(tet: &Tetrahedron) -> Result<Metrics> {
    let o = circumcenter3(tet)?;
    Ok(Metrics { r2_circ: o.dist2(&tet.x), d2: o.dist2(&tet.inc), o, r: tet.r.clone() })
}

/// `p + q·R` modulo `R² = R2`.
#[derive(Debug, Clone, PartialEq)]
struct WithRoot {
    p: Scalar,
    q: Scalar,
}

impl WithRoot {
    fn mul(&self, o: &WithRoot, r2: &Scalar) -> WithRoot {
        WithRoot { p: &self.p * &o.p + &self.q * &o.q * r2, q: &self.p * &o.q + &self.q * &o.p }
    }
}

pub fn gd_verdict(m: &Metrics) -> Verdict {
    let r2 = m.r.square();
    let linear = &m.r2_circ - &m.d2 - Scalar::int(3) * &r2;
    let squared_gap = linear.square() - Scalar::int(4) * &r2 * &m.r2_circ;
    let linear_side_sign = linear.sign();
    let satisfied = linear_side_sign >= 0 && squared_gap.sign() >= 0;

    // (R+r)(R−3r) − d² = (R² − 3r² − d²) − 2r·R,  (R−r)(R+3r) − d² = (R² − 3r² − d²) + 2r·R
    let two_r = &m.r + &m.r;
    let lower = WithRoot { p: linear.clone(), q: -&two_r };
    let upper = WithRoot { p: linear, q: two_r };
    let product = lower.mul(&upper, &m.r2_circ);
    let factorization_holds = product.q.is_zero() && product.p == squared_gap;

    Verdict {
        equality: satisfied && squared_gap.is_zero(),
        squared_gap,
        linear_side_sign,
        satisfied,
        factorization_holds,
    }
}

/// `d² + 4r² ≤ (R − r)²`, decided as the sign of `(R² − d² − 3r²) − 2r·√R²`.
pub fn pythagorean_form_holds(m: &Metrics) -> bool {
    let r2 = m.r.square();
    let a = &m.r2_circ + &r2 - &m.d2 - Scalar::int(4) * &r2;
    let b = -(&m.r + &m.r);
    sign_with_root(&a, &b, &m.r2_circ) >= 0
}
