//! Small exact determinants and Cramer solves.

use std::fmt;

use crate::base::Point2;
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Point3 {
    pub x1: Scalar,
    pub x2: Scalar,
    pub x3: Scalar,
}

impl Point3 {
    pub fn new(x1: impl Into<Scalar>, x2: impl Into<Scalar>, x3: impl Into<Scalar>) -> Self {
        Point3 { x1: x1.into(), x2: x2.into(), x3: x3.into() }
    }

    /// Lifts a base-plane point to height `h`.
    pub fn lift(p: &Point2, h: Scalar) -> Self {
        Point3 { x1: p.x1.clone(), x2: p.x2.clone(), x3: h }
    }

    pub fn sub(&self, o: &Point3) -> Point3 {
        Point3 { x1: &self.x1 - &o.x1, x2: &self.x2 - &o.x2, x3: &self.x3 - &o.x3 }
    }

    pub fn scale(&self, s: &Scalar) -> Point3 {
        Point3 { x1: &self.x1 * s, x2: &self.x2 * s, x3: &self.x3 * s }
    }

    pub fn dot(&self, o: &Point3) -> Scalar {
        &self.x1 * &o.x1 + &self.x2 * &o.x2 + &self.x3 * &o.x3
    }

    pub fn cross(&self, o: &Point3) -> Point3 {
        Point3 {
            x1: &self.x2 * &o.x3 - &self.x3 * &o.x2,
            x2: &self.x3 * &o.x1 - &self.x1 * &o.x3,
            x3: &self.x1 * &o.x2 - &self.x2 * &o.x1,
        }
    }

    pub fn norm2(&self) -> Scalar {
        self.dot(self)
    }

    pub fn dist2(&self, o: &Point3) -> Scalar {
        self.sub(o).norm2()
    }

    pub fn is_zero(&self) -> bool {
        self.x1.is_zero() && self.x2.is_zero() && self.x3.is_zero()
    }

    /// True when `self` and `o` are scalar multiples of each other.
    pub fn is_parallel(&self, o: &Point3) -> bool {
        self.cross(o).is_zero()
    }
}

impl fmt::Display for Point3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}, {}, {}", self.x1, self.x2, self.x3)
    }
}

/// Plane `normal · p = offset`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Plane {
    pub normal: Point3,
    pub offset: Scalar,
}

impl Plane {
    pub fn through(p: &Point3, q: &Point3, s: &Point3) -> Plane {
        let normal = q.sub(p).cross(&s.sub(p));
        let offset = normal.dot(p);
        Plane { normal, offset }
    }

    pub fn contains(&self, p: &Point3) -> bool {
        self.normal.dot(p) == self.offset
    }

    /// Squared distance of `p` to the plane.
    pub fn dist2(&self, p: &Point3) -> Scalar {
        (self.normal.dot(p) - &self.offset).square() / self.normal.norm2()
    }
}

pub fn det3(m: &[[Scalar; 3]; 3]) -> Scalar {
    &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1]) - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
        + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0])
}

pub fn det4(m: &[[Scalar; 4]; 4]) -> Scalar {
    let mut acc = Scalar::zero();
    for col in 0..4 {
        if m[0][col].is_zero() {
            continue;
        }
        let minor: [[Scalar; 3]; 3] =
            std::array::from_fn(|i| std::array::from_fn(|j| m[i + 1][if j < col { j } else { j + 1 }].clone()));
        let term = &m[0][col] * det3(&minor);
        acc = if col % 2 == 0 { acc + term } else { acc - term };
    }
    acc
}

/// Cramer solve of `rows · v = rhs`; `None` when the system is singular.
pub fn solve3(rows: &[[Scalar; 3]; 3], rhs: &[Scalar; 3]) -> Option<[Scalar; 3]> {
    let d = det3(rows);
    if d.is_zero() {
        return None;
    }
    Some(std::array::from_fn(|j| {
        let mut m = rows.clone();
        for i in 0..3 {
            m[i][j] = rhs[i].clone();
        }
        det3(&m) / &d
    }))
}

/// Cramer solve of a 2×2 system.
pub fn solve2(rows: &[[Scalar; 2]; 2], rhs: &[Scalar; 2]) -> Option<[Scalar; 2]> {
    let d = &rows[0][0] * &rows[1][1] - &rows[0][1] * &rows[1][0];
    if d.is_zero() {
        return None;
    }
    Some([(&rhs[0] * &rows[1][1] - &rows[0][1] * &rhs[1]) / &d, (&rows[0][0] * &rhs[1] - &rhs[0] * &rows[1][0]) / &d])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m3(v: [[i64; 3]; 3]) -> [[Scalar; 3]; 3] {
        v.map(|r| r.map(Scalar::int))
    }

    #[test]
    fn determinants() {
        assert_eq!(det3(&m3([[2, 0, 1], [1, 3, 2], [1, 1, 1]])), Scalar::int(0));
        assert_eq!(det3(&m3([[1, 2, 3], [0, 1, 4], [5, 6, 0]])), Scalar::int(1));
        let m4 = [[1, 0, 2, -1], [3, 0, 0, 5], [2, 1, 4, -3], [1, 0, 5, 0]].map(|r| r.map(Scalar::int));
        assert_eq!(det4(&m4), Scalar::int(30));
    }

    #[test]
    fn cramer() {
        let rows = m3([[1, 2, 3], [0, 1, 4], [5, 6, 0]]);
        let rhs = [Scalar::int(14), Scalar::int(14), Scalar::int(17)];
        let v = solve3(&rows, &rhs).unwrap();
        assert_eq!(v, [Scalar::int(1), Scalar::int(2), Scalar::int(3)]);
        assert!(solve3(&m3([[1, 1, 1], [2, 2, 2], [0, 1, 0]]), &rhs).is_none());
    }

    #[test]
    fn plane_distance() {
        let p = Plane::through(&Point3::new(0, 0, 0), &Point3::new(1, 0, 0), &Point3::new(0, 1, 0));
        assert_eq!(p.dist2(&Point3::new(5, 7, -3)), Scalar::int(9));
        assert!(p.contains(&Point3::new(2, -9, 0)));
    }
}
