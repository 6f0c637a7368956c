//! Apex construction from the base triangle, tangent point and inradius.
//!
//! The insphere has center `inc = (c₁, c₂, r)` and touches the base at
//! `(c₁, c₂, 0)`. The two tangent planes through a base edge are mirror
//! images in the plane spanned by that edge and `inc`, so each lateral tangent
//! point is the reflection of the base tangent point across that plane. The
//! apex is the common point of the three lateral tangent planes.

use crate::base::{big_a_b, critical_inradius_sq, BaseConfig, Point2};
use crate::error::{Error, Result};
use crate::linalg::{det4, solve3, Plane, Point3};
use crate::scalar::Scalar;

/// Tangent points on the lateral faces; `x` lies on the face opposite vertex `x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TangentPoints {
    pub x: Point3,
    pub y: Point3,
    pub z: Point3,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tetrahedron {
    pub x: Point3,
    pub y: Point3,
    pub z: Point3,
    pub w: Point3,
    /// Insphere center `(c₁, c₂, r)`.
    pub inc: Point3,
    pub r: Scalar,
}

impl Tetrahedron {
    /// Face planes opposite `x`, `y`, `z` and `w`, in that order.
    pub fn face_planes(&self) -> [Plane; 4] {
        [
            Plane::through(&self.y, &self.z, &self.w),
            Plane::through(&self.z, &self.x, &self.w),
            Plane::through(&self.x, &self.y, &self.w),
            Plane::through(&self.x, &self.y, &self.z),
        ]
    }
}

fn base_points(cfg: &BaseConfig) -> (Point3, Point3, Point3) {
    let lift = |p: &Point2| Point3::lift(p, Scalar::zero());
    (lift(&cfg.x), lift(&cfg.y), lift(&cfg.z))
}

fn insphere_center(cfg: &BaseConfig) -> Point3 {
    Point3::lift(&cfg.c, cfg.r.clone())
}

/// Mirror image of `p` in the plane through `a`, `b`, `s`.
fn reflect(p: &Point3, a: &Point3, b: &Point3, s: &Point3) -> Result<Point3> {
    let n = b.sub(a).cross(&s.sub(a));
    let nn = n.norm2();
    if nn.is_zero() {
        return Err(Error::DegenerateEdge);
    }
    let t = (p.sub(a).dot(&n) * Scalar::int(2)) / nn;
    Ok(p.sub(&n.scale(&t)))
}

pub fn tangent_points(cfg: &BaseConfig) -> Result<TangentPoints> {
    let (x, y, z) = base_points(cfg);
    let inc = insphere_center(cfg);
    let foot = Point3::lift(&cfg.c, Scalar::zero());
    Ok(TangentPoints {
        x: reflect(&foot, &y, &z, &inc)?,
        y: reflect(&foot, &z, &x, &inc)?,
        z: reflect(&foot, &x, &y, &inc)?,
    })
}

/// The lateral tangent planes `{x, y, Z}`, `{y, z, X}`, `{z, x, Y}`.
pub fn tangent_planes(cfg: &BaseConfig, tp: &TangentPoints) -> [Plane; 3] {
    let (x, y, z) = base_points(cfg);
    [Plane::through(&x, &y, &tp.z), Plane::through(&y, &z, &tp.x), Plane::through(&z, &x, &tp.y)]
}

/// Apex as the intersection of the three lateral tangent planes.
pub fn apex(cfg: &BaseConfig) -> Result<Point3> {
    let tp = tangent_points(cfg)?;
    let planes = tangent_planes(cfg, &tp);
    let rows = planes.clone().map(|p| [p.normal.x1, p.normal.x2, p.normal.x3]);
    let rhs = planes.map(|p| p.offset);
    let [w1, w2, w3] = solve3(&rows, &rhs).ok_or(Error::Critical)?;
    if !w3.is_positive() {
        return Err(Error::Supercritical);
    }
    Ok(Point3 { x1: w1, x2: w2, x3: w3 })
}

/// Closed-form apex height `2rA / (A − B r²)`, checked against `2r r_c² / (r_c² − r²)`.
pub fn apex_height(cfg: &BaseConfig) -> Result<Scalar> {
    let (a, b) = big_a_b(cfg);
    let r = &cfg.r;
    let r2 = r.square();
    let den = &a - &b * &r2;
    if den.is_zero() {
        return Err(Error::Critical);
    }
    let two_r = r + r;
    let h = &two_r * &a / den;
    let rc2 = critical_inradius_sq(cfg);
    let h_crit = &two_r * &rc2 / (&rc2 - &r2);
    debug_assert_eq!(h, h_crit);
    Ok(h)
}

pub fn construct(cfg: &BaseConfig) -> Result<Tetrahedron> {
    let w = apex(cfg)?;
    let (x, y, z) = base_points(cfg);
    Ok(Tetrahedron { x, y, z, w, inc: insphere_center(cfg), r: cfg.r.clone() })
}

/// Determinant of the rows `(X|1), (Y|1), (Z|1), (inc|1)`; zero exactly at the critical inradius.
pub fn criticality_coplanarity(cfg: &BaseConfig) -> Result<Scalar> {
    let tp = tangent_points(cfg)?;
    let inc = insphere_center(cfg);
    let row = |p: &Point3| [p.x1.clone(), p.x2.clone(), p.x3.clone(), Scalar::one()];
    Ok(det4(&[row(&tp.x), row(&tp.y), row(&tp.z), row(&inc)]))
}

/// Directions of the lateral edges through `x`, `y`, `z` as pairwise plane intersections.
pub fn lateral_edge_directions(cfg: &BaseConfig) -> Result<[Point3; 3]> {
    let tp = tangent_points(cfg)?;
    let [pz, px, py] = tangent_planes(cfg, &tp);
    Ok([pz.normal.cross(&py.normal), pz.normal.cross(&px.normal), px.normal.cross(&py.normal)])
}
