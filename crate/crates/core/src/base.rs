//! Planar quantities of the base triangle.
//!
//! The base triangle `x, y, z` lies in the plane `x₃ = 0`, oriented
//! counterclockwise, with the insphere touching it at the interior point `c`.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Point2 {
    pub x1: Scalar,
    pub x2: Scalar,
}

impl Point2 {
    pub fn new(x1: impl Into<Scalar>, x2: impl Into<Scalar>) -> Self {
        Point2 { x1: x1.into(), x2: x2.into() }
    }

    pub fn ints(x1: i64, x2: i64) -> Self {
        Point2::new(x1, x2)
    }

    pub fn sub(&self, o: &Point2) -> Point2 {
        Point2 { x1: &self.x1 - &o.x1, x2: &self.x2 - &o.x2 }
    }

    pub fn add(&self, o: &Point2) -> Point2 {
        Point2 { x1: &self.x1 + &o.x1, x2: &self.x2 + &o.x2 }
    }

    pub fn scale(&self, s: &Scalar) -> Point2 {
        Point2 { x1: &self.x1 * s, x2: &self.x2 * s }
    }

    pub fn dot(&self, o: &Point2) -> Scalar {
        &self.x1 * &o.x1 + &self.x2 * &o.x2
    }

    pub fn norm2(&self) -> Scalar {
        self.dot(self)
    }

    pub fn dist2(&self, o: &Point2) -> Scalar {
        self.sub(o).norm2()
    }

    pub fn field(&self) -> Result<Field> {
        Ok(self.x1.field().join(self.x2.field())?)
    }
}

impl fmt::Display for Point2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}, {}", self.x1, self.x2)
    }
}

/// Twice the signed area of `(p, q, s)`; positive iff counterclockwise.
pub fn twice_area(p: &Point2, q: &Point2, s: &Point2) -> Scalar {
    &p.x1 * &q.x2 + &q.x1 * &s.x2 + &s.x1 * &p.x2 - &q.x1 * &p.x2 - &s.x1 * &q.x2 - &p.x1 * &s.x2
}

/// Twice the signed areas of `△xyz`, `△cyz`, `△xcz`, `△xyc`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AreaSet {
    pub a0: Scalar,
    pub ax: Scalar,
    pub ay: Scalar,
    pub az: Scalar,
}

/// Input of the construction: base triangle, tangent point and inradius.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BaseConfig {
    pub x: Point2,
    pub y: Point2,
    pub z: Point2,
    pub c: Point2,
    pub r: Scalar,
    field: Field,
}

/// Position of the inradius relative to the critical value `√(A/B)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    Subcritical,
    Critical,
    Supercritical,
}

impl BaseConfig {
    /// Validates orientation, interiority of `c` and `r > 0`.
    pub fn new(x: Point2, y: Point2, z: Point2, c: Point2, r: Scalar) -> Result<Self> {
        Self::in_field(Field::Rational, x, y, z, c, r)
    }

    /// Like [`BaseConfig::new`] but pins the arithmetic context explicitly.
    pub fn in_field(field: Field, x: Point2, y: Point2, z: Point2, c: Point2, r: Scalar) -> Result<Self> {
        let field = [&x, &y, &z, &c]
            .iter()
            .try_fold(field.join(r.field())?, |f, p| -> Result<Field> { Ok(f.join(p.field()?)?) })?;
        let cfg = BaseConfig { x, y, z, c, r, field };
        cfg.validate()?;
        Ok(cfg)
    }

    fn validate(&self) -> Result<()> {
        let areas = area_set(self);
        match areas.a0.sign() {
            0 => return Err(Error::Collinear),
            -1 => return Err(Error::Clockwise),
            _ => {}
        }
        for (name, v) in [("a_x", &areas.ax), ("a_y", &areas.ay), ("a_z", &areas.az)] {
            if !v.is_positive() {
                return Err(Error::NotInterior(name));
            }
        }
        if !self.r.is_positive() {
            return Err(Error::NonPositiveInradius);
        }
        Ok(())
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn with_r(&self, r: Scalar) -> Result<Self> {
        Self::in_field(self.field, self.x.clone(), self.y.clone(), self.z.clone(), self.c.clone(), r)
    }

    pub fn translated(&self, h: &Point2) -> Result<Self> {
        Self::in_field(self.field, self.x.add(h), self.y.add(h), self.z.add(h), self.c.add(h), self.r.clone())
    }

    /// Uniform dilation of all lengths, inradius included.
    pub fn scaled(&self, s: &Scalar) -> Result<Self> {
        Self::in_field(self.field, self.x.scale(s), self.y.scale(s), self.z.scale(s), self.c.scale(s), &self.r * s)
    }

    pub fn regime(&self) -> Regime {
        let (a, b) = big_a_b(self);
        match (a - b * self.r.square()).sign() {
            1 => Regime::Subcritical,
            0 => Regime::Critical,
            _ => Regime::Supercritical,
        }
    }
}

pub fn area_set(cfg: &BaseConfig) -> AreaSet {
    AreaSet {
        a0: twice_area(&cfg.x, &cfg.y, &cfg.z),
        ax: twice_area(&cfg.c, &cfg.y, &cfg.z),
        ay: twice_area(&cfg.x, &cfg.c, &cfg.z),
        az: twice_area(&cfg.x, &cfg.y, &cfg.c),
    }
}

/// `A = a_x a_y a_z` and `B = ‖x‖² a_x + ‖y‖² a_y + ‖z‖² a_z − ‖c‖² a₀`.
pub fn big_a_b(cfg: &BaseConfig) -> (Scalar, Scalar) {
    let s = area_set(cfg);
    let a = &s.ax * &s.ay * &s.az;
    let b = cfg.x.norm2() * &s.ax + cfg.y.norm2() * &s.ay + cfg.z.norm2() * &s.az - cfg.c.norm2() * &s.a0;
    (a, b)
}

/// `A / B`, the square of the critical inradius.
pub fn critical_inradius_sq(cfg: &BaseConfig) -> Scalar {
    let (a, b) = big_a_b(cfg);
    a / b
}

/// Circumcenter of a planar triangle.
pub fn circumcenter2(x: &Point2, y: &Point2, z: &Point2) -> Result<Point2> {
    let a0 = twice_area(x, y, z);
    if a0.is_zero() {
        return Err(Error::Collinear);
    }
    let (nx, ny, nz) = (x.norm2(), y.norm2(), z.norm2());
    let two_a0 = &a0 + &a0;
    let o1 = (&nx * (&y.x2 - &z.x2) + &ny * (&z.x2 - &x.x2) + &nz * (&x.x2 - &y.x2)) / &two_a0;
    let o2 = (&nx * (&z.x1 - &y.x1) + &ny * (&x.x1 - &z.x1) + &nz * (&y.x1 - &x.x1)) / &two_a0;
    Ok(Point2 { x1: o1, x2: o2 })
}

/// Side lengths `(‖y−z‖, ‖z−x‖, ‖x−y‖)` when all are representable in `field`.
pub fn side_lengths(x: &Point2, y: &Point2, z: &Point2, field: Field) -> Result<[Scalar; 3]> {
    let side = |p: &Point2, q: &Point2| -> Result<Scalar> {
        let l2 = p.dist2(q);
        l2.sqrt_in(field)?.ok_or_else(|| Error::NonRepresentableSide(l2.to_string()))
    };
    Ok([side(y, z)?, side(z, x)?, side(x, y)?])
}

/// Incenter as the side-length weighted mean of the vertices.
pub fn incenter2(x: &Point2, y: &Point2, z: &Point2, field: Field) -> Result<Point2> {
    if twice_area(x, y, z).is_zero() {
        return Err(Error::Collinear);
    }
    let [a, b, c] = side_lengths(x, y, z, field)?;
    let per = &a + &b + &c;
    let sum = x.scale(&a).add(&y.scale(&b)).add(&z.scale(&c));
    Ok(Point2 { x1: &sum.x1 / &per, x2: &sum.x2 / &per })
}

/// `(a_x, a_y, a_z) / a₀`: the barycentric coordinates of `c`.
pub fn barycentric_weights(cfg: &BaseConfig) -> (Scalar, Scalar, Scalar) {
    let s = area_set(cfg);
    (&s.ax / &s.a0, &s.ay / &s.a0, &s.az / &s.a0)
}
