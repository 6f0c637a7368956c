//! Closed forms on restricted configurations: tangent point at the
//! circumcenter or incenter, the equilateral face, the planar analogue of
//! the critical inradius, and the Euler/Pech triangle relation.

use std::fmt;

use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::base::{area_set, big_a_b, circumcenter2, incenter2, BaseConfig, Point2, Regime};
use crate::certificate::{appendix_v, v_pair};
use crate::error::{Error, Result};
use crate::linalg::{solve2, Point3};
use crate::metrics::{gd_verdict, Metrics};
use crate::scalar::{square_free_decomposition, Field, Radicand, Rational, Scalar};

/// Cubic factors of `v` when the tangent point is the circumcenter.
pub fn g_polynomials(x: &Point2, y: &Point2, z: &Point2) -> (Scalar, Scalar) {
    let (x1, x2) = (&x.x1, &x.x2);
    let (y1, y2) = (&y.x1, &y.x2);
    let (z1, z2) = (&z.x1, &z.x2);
    let three = Scalar::int(3);
    let two = Scalar::int(2);
    let g1 = (x1.square() + &three * x2.square()) * (z2 - y2)
        + (y1.square() + &three * y2.square()) * (x2 - z2)
        + (z1.square() + &three * z2.square()) * (y2 - x2)
        + &two * x1 * x2 * (z1 - y1)
        + &two * y1 * y2 * (x1 - z1)
        + &two * z1 * z2 * (y1 - x1);
    let g2 = (x2.square() + &three * x1.square()) * (y1 - z1)
        + (y2.square() + &three * y1.square()) * (z1 - x1)
        + (z2.square() + &three * z1.square()) * (x1 - y1)
        + &two * x1 * x2 * (y2 - z2)
        + &two * y1 * y2 * (z2 - x2)
        + &two * z1 * z2 * (x2 - y2);
    (g1, g2)
}

fn require_subcritical(cfg: &BaseConfig) -> Result<()> {
    match cfg.regime() {
        Regime::Subcritical => Ok(()),
        Regime::Critical => Err(Error::Critical),
        Regime::Supercritical => Err(Error::Supercritical),
    }
}

/// Configuration touching the base at its circumcenter.
pub fn circumcenter_config(x: Point2, y: Point2, z: Point2, r: Scalar) -> Result<BaseConfig> {
    let o = circumcenter2(&x, &y, &z)?;
    BaseConfig::new(x, y, z, o, r).map_err(|e| match e {
        Error::NotInterior(_) => Error::CircumcenterNotInterior,
        e => e,
    })
}

/// Configuration touching the base at its incenter; side lengths must lie in `field`.
pub fn incenter_config(x: Point2, y: Point2, z: Point2, r: Scalar, field: Field) -> Result<BaseConfig> {
    let i = incenter2(&x, &y, &z, field)?;
    BaseConfig::in_field(field, x, y, z, i, r)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CircumcenterCase {
    pub g1: Scalar,
    pub g2: Scalar,
    /// `r² ‖x−y‖⁴‖y−z‖⁴‖z−x‖⁴ (g₁² + g₂²) / (64 a₀⁵ (A − Br²))`.
    pub gap: Scalar,
    /// `8a₀² vᵢ = ‖x−y‖²‖y−z‖²‖z−x‖² gᵢ` for both `i`.
    pub factorization_holds: bool,
}

pub fn special_case_a(cfg: &BaseConfig) -> Result<CircumcenterCase> {
    let o = circumcenter2(&cfg.x, &cfg.y, &cfg.z)?;
    if cfg.c != o {
        return Err(Error::NotCircumcenter);
    }
    require_subcritical(cfg)?;
    let (g1, g2) = g_polynomials(&cfg.x, &cfg.y, &cfg.z);
    let a0 = area_set(cfg).a0;
    let (a, b) = big_a_b(cfg);
    let r2 = cfg.r.square();
    let lengths = cfg.x.dist2(&cfg.y) * cfg.y.dist2(&cfg.z) * cfg.z.dist2(&cfg.x);
    let gap = &r2 * lengths.square() * (g1.square() + g2.square()) / (Scalar::int(64) * a0.pow(5) * (a - b * &r2));
    let (v1, v2) = appendix_v(cfg)?;
    let eight_a02 = Scalar::int(8) * a0.square();
    let factorization_holds = &eight_a02 * v1 == &lengths * &g1 && &eight_a02 * v2 == &lengths * &g2;
    Ok(CircumcenterCase { g1, g2, gap, factorization_holds })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncenterCase {
    /// `16 a₀ r⁶ ‖c − o‖² / (A − Br²)`.
    pub gap: Scalar,
    pub v1: Scalar,
    pub v2: Scalar,
}

pub fn special_case_b(cfg: &BaseConfig) -> Result<IncenterCase> {
    let i = incenter2(&cfg.x, &cfg.y, &cfg.z, cfg.field())?;
    if cfg.c != i {
        return Err(Error::NotIncenter);
    }
    require_subcritical(cfg)?;
    let o = circumcenter2(&cfg.x, &cfg.y, &cfg.z)?;
    let a0 = area_set(cfg).a0;
    let (a, b) = big_a_b(cfg);
    let gap = Scalar::int(16) * a0 * cfg.r.pow(6) * cfg.c.dist2(&o) / (a - b * cfg.r.square());
    let (v1, v2) = match v_pair(cfg) {
        Ok(vp) => (vp.v1, vp.v2),
        // equilateral base: incenter and circumcenter coincide
        Err(Error::VanishingAlpha) => appendix_v(cfg)?,
        Err(e) => return Err(e),
    };
    Ok(IncenterCase { gap, v1, v2 })
}

/// Position of `r` relative to the inradius `r_reg` of the regular tetrahedron, `r_reg² = l²/24`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RegularRegime {
    BelowRegular,
    Regular,
    AboveRegular,
}

impl fmt::Display for RegularRegime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RegularRegime::BelowRegular => "r < r_reg",
            RegularRegime::Regular => "r = r_reg",
            RegularRegime::AboveRegular => "r_reg < r < r_crit",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquilateralReport {
    pub w3: Scalar,
    pub r_circ: Scalar,
    pub d2: Scalar,
    /// Signed `R + r − w₃`; `d` is its absolute value.
    pub signed_d: Scalar,
    pub squared_gap: Scalar,
    pub linear_side_sign: i8,
    /// `w₃ − 2r = 12r²w₃/l²`.
    pub rel1: bool,
    /// `w₃(2R − w₃) = l²/3`.
    pub rel2: bool,
    pub regime: RegularRegime,
}

impl EquilateralReport {
    pub fn gap_vanishes(&self) -> bool {
        self.squared_gap.is_zero() && self.linear_side_sign >= 0
    }
}

/// Tetrahedron over an equilateral face of squared side `l2`, touched at its center.
pub fn equilateral_gap(l2: &Scalar, r: &Scalar) -> Result<EquilateralReport> {
    if !l2.is_positive() {
        return Err(Error::Domain("squared side length must be positive".into()));
    }
    if !r.is_positive() {
        return Err(Error::NonPositiveInradius);
    }
    let r2 = r.square();
    let twelve = Scalar::int(12);
    match (l2 - &twelve * &r2).sign() {
        0 => return Err(Error::Critical),
        s if s < 0 => return Err(Error::Supercritical),
        _ => {}
    }
    let two = Scalar::int(2);
    let w3 = &two * l2 * r / (l2 - &twelve * &r2);
    let third = l2 / Scalar::int(3);
    let r_circ = (w3.square() + &third) / (&two * &w3);
    let signed_d = &r_circ + r - &w3;
    let d2 = signed_d.square();
    let rel1 = &w3 - &two * r == &twelve * &r2 * &w3 / l2;
    let rel2 = &w3 * (&two * &r_circ - &w3) == third;

    // apex above the center; circumcenter on the axis at height w₃ − R
    let m = Metrics { o: Point3::new(0, 0, &w3 - &r_circ), r2_circ: r_circ.square(), d2: d2.clone(), r: r.clone() };
    let v = gd_verdict(&m);
    let regime = match (Scalar::int(24) * &r2).partial_cmp(l2) {
        Some(std::cmp::Ordering::Less) => RegularRegime::BelowRegular,
        Some(std::cmp::Ordering::Equal) => RegularRegime::Regular,
        _ => RegularRegime::AboveRegular,
    };
    Ok(EquilateralReport {
        w3,
        r_circ,
        d2,
        signed_d,
        squared_gap: v.squared_gap,
        linear_side_sign: v.linear_side_sign,
        rel1,
        rel2,
        regime,
    })
}

/// `√q` for a nonnegative rational `q`, in `Q` or the quadratic field it generates.
pub fn rational_sqrt(q: &Rational) -> Result<Scalar> {
    if q.is_negative() {
        return Err(Error::Domain(format!("square root of negative value {q}")));
    }
    if q.is_zero() {
        return Ok(Scalar::zero());
    }
    let too_large = || Error::Domain(format!("square root of {q}: operands exceed 64 bits"));
    let n = q.numer().to_u64().ok_or_else(too_large)?;
    let d = q.denom().to_u64().ok_or_else(too_large)?;
    let nd = n.checked_mul(d).ok_or_else(too_large)?;
    let (s, f) = square_free_decomposition(nd);
    let coeff = Rational::new(s.into(), d.into());
    if f == 1 {
        Ok(Scalar::from(coeff))
    } else {
        Ok(Scalar::quad(Rational::zero(), coeff, Radicand::new(f)?))
    }
}

fn check_unit_interior(p: &Rational) -> Result<()> {
    if p.is_positive() && *p < Rational::one() {
        Ok(())
    } else {
        Err(Error::Domain(format!("p = {p} must satisfy 0 < p < 1")))
    }
}

/// Height of the apex over `[0, 1]` when the incircle touches at `p` with radius `r`,
/// from the second tangent lines through `(0, 0)` and `(1, 0)`.
pub fn planar_apex_height(p: &Scalar, r: &Scalar) -> Result<Scalar> {
    let q = p - Scalar::one();
    let two = Scalar::int(2);
    let da = [p.square() - r.square(), &two * p * r];
    let db = [q.square() - r.square(), &two * &q * r];
    let rows = [[da[0].clone(), -&db[0]], [da[1].clone(), -&db[1]]];
    let [s, _] = solve2(&rows, &[Scalar::one(), Scalar::zero()]).ok_or(Error::Critical)?;
    Ok(s * &da[1])
}

/// `2r·p(1−p) / (p(1−p) − r²)`.
pub fn planar_apex_height_closed(p: &Scalar, r: &Scalar) -> Result<Scalar> {
    let k = p * (Scalar::one() - p);
    let den = &k - r.square();
    if den.is_zero() {
        return Err(Error::Critical);
    }
    Ok(Scalar::int(2) * r * k / den)
}

/// Determinant of the two tangent-line directions, `2r(r² − p(1−p))` up to sign.
pub fn planar_tangent_determinant(p: &Scalar, r: &Scalar) -> Scalar {
    let q = p - Scalar::one();
    let two = Scalar::int(2);
    let da = [p.square() - r.square(), &two * p * r];
    let db = [q.square() - r.square(), &two * &q * r];
    &da[0] * &db[1] - &da[1] * &db[0]
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlanarReport {
    pub p: Rational,
    pub r_crit_sq: Rational,
    pub r_crit: Scalar,
    /// The tangent lines are parallel exactly at `r_crit`.
    pub pole_at_crit: bool,
    /// The determinant matches `2r(r² − p(1−p))` at `r_crit / 2`.
    pub determinant_form_holds: bool,
}

pub fn planar_critical(p: &Rational) -> Result<PlanarReport> {
    check_unit_interior(p)?;
    let r_crit_sq = p * (Rational::one() - p);
    let r_crit = rational_sqrt(&r_crit_sq)?;
    let ps = Scalar::from(p.clone());
    let pole_at_crit = planar_tangent_determinant(&ps, &r_crit).is_zero()
        && matches!(planar_apex_height(&ps, &r_crit), Err(Error::Critical));
    let half = &r_crit / Scalar::int(2);
    let expected = Scalar::int(2) * &half * (half.square() - Scalar::from(r_crit_sq.clone()));
    let determinant_form_holds = planar_tangent_determinant(&ps, &half) == expected;
    Ok(PlanarReport { p: p.clone(), r_crit_sq, r_crit, pole_at_crit, determinant_form_holds })
}

/// `a³ − a²b − ab² + b³ − a²c + 3abc − b²c − ac² − bc² + c³`.
pub fn pech_polynomial(a: &Scalar, b: &Scalar, c: &Scalar) -> Scalar {
    a.pow(3) - a.square() * b - a * b.square() + b.pow(3) - a.square() * c + Scalar::int(3) * a * b * c
        - b.square() * c
        - a * c.square()
        - b * c.square()
        + c.pow(3)
}

/// `½[(a+b−c)(a−b)² + (b+c−a)(b−c)² + (c+a−b)(c−a)²]`.
pub fn pech_sos(a: &Scalar, b: &Scalar, c: &Scalar) -> Scalar {
    ((a + b - c) * (a - b).square() + (b + c - a) * (b - c).square() + (c + a - b) * (c - a).square()) / Scalar::int(2)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeronianCheck {
    pub area: Scalar,
    pub inradius: Scalar,
    pub circumradius: Scalar,
    pub d2: Scalar,
    /// `d² = R(R − 2r)` from coordinates.
    pub euler_holds: bool,
    pub circumradius_ge_twice_inradius: bool,
    pub equality: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PechReport {
    pub polynomial: Scalar,
    pub sos: Scalar,
    pub identity_holds: bool,
    /// The polynomial equals `abc − (a+b−c)(a−b+c)(−a+b+c)`.
    pub product_form_holds: bool,
    /// Present when `16K²` is a square in `field`.
    pub heronian: Option<HeronianCheck>,
}

/// `A = (0, 0)`, `B = (c, 0)` and `C` above the axis, with `|BC| = a`, `|CA| = b`.
fn place_triangle(a: &Scalar, b: &Scalar, c: &Scalar, area: &Scalar) -> (Point2, Point2, Point2) {
    let pc = Point2::new((b.square() + c.square() - a.square()) / (Scalar::int(2) * c), Scalar::int(2) * area / c);
    (Point2::ints(0, 0), Point2::new(c.clone(), 0), pc)
}

/// Counterclockwise triangle with sides `a = |yz|`, `b = |zx|`, `c = |xy|`,
/// when its area lies in `field`.
pub fn triangle_from_sides(a: &Scalar, b: &Scalar, c: &Scalar, field: Field) -> Result<(Point2, Point2, Point2)> {
    let (ea, eb, ec) = (b + c - a, c + a - b, a + b - c);
    if !(ea.is_positive() && eb.is_positive() && ec.is_positive()) {
        return Err(Error::Domain("degenerate triangle: strict triangle inequality fails".into()));
    }
    let k16 = (a + b + c) * ea * eb * ec;
    let root = k16.sqrt_in(field)?.ok_or_else(|| Error::Domain(format!("area is not representable in {field}")))?;
    Ok(place_triangle(a, b, c, &(root / Scalar::int(4))))
}

pub fn pech_euler(a: &Scalar, b: &Scalar, c: &Scalar, field: Field) -> Result<PechReport> {
    if !(a.is_positive() && b.is_positive() && c.is_positive()) {
        return Err(Error::Domain("side lengths must be positive".into()));
    }
    let (ea, eb, ec) = (b + c - a, c + a - b, a + b - c);
    if !(ea.is_positive() && eb.is_positive() && ec.is_positive()) {
        return Err(Error::Domain("degenerate triangle: strict triangle inequality fails".into()));
    }
    let polynomial = pech_polynomial(a, b, c);
    let sos = pech_sos(a, b, c);
    let product_form_holds = polynomial == a * b * c - &ea * &eb * &ec;

    let k16 = (a + b + c) * &ea * &eb * &ec;
    let heronian = match k16.sqrt_in(field)? {
        None => None,
        Some(root) => {
            let area = root / Scalar::int(4);
            let inradius = Scalar::int(2) * &area / (a + b + c);
            let circumradius = a * b * c / (Scalar::int(4) * &area);
            let (pa, pb, pc) = place_triangle(a, b, c, &area);
            let o = circumcenter2(&pa, &pb, &pc)?;
            let i = incenter2(&pa, &pb, &pc, field)?;
            let d2 = o.dist2(&i);
            let r_circ_sq = o.dist2(&pa);
            let two_r = &inradius + &inradius;
            Some(HeronianCheck {
                euler_holds: d2 == &circumradius * (&circumradius - &two_r) && r_circ_sq == circumradius.square(),
                circumradius_ge_twice_inradius: circumradius >= two_r,
                equality: circumradius == two_r,
                area,
                inradius,
                circumradius,
                d2,
            })
        }
    };
    Ok(PechReport { identity_holds: polynomial == sos, polynomial, sos, product_form_holds, heronian })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certificate::{certificate, u_pair};

    fn s(t: &str) -> Scalar {
        t.parse().unwrap()
    }

    fn k3() -> Field {
        Field::Quadratic(Radicand::new(3).unwrap())
    }

    fn equilateral_points() -> (Point2, Point2, Point2) {
        (Point2::ints(-1, 0), Point2::ints(1, 0), Point2::new(0, s("sqrt(3)")))
    }

    #[test]
    fn circumcenter_case_matches_pipeline() {
        let cfg = circumcenter_config(Point2::ints(0, 0), Point2::ints(4, 0), Point2::ints(1, 3), Scalar::ratio(1, 5))
            .unwrap();
        let a = special_case_a(&cfg).unwrap();
        assert!(a.factorization_holds);
        assert_eq!(a.gap, certificate(&cfg).unwrap().lhs);
        assert_eq!(u_pair(&cfg).unwrap(), (Scalar::zero(), Scalar::zero()));
    }

    #[test]
    fn circumcenter_case_rejections() {
        let err = circumcenter_config(Point2::ints(0, 0), Point2::ints(4, 0), Point2::ints(5, 1), Scalar::one());
        assert_eq!(err.unwrap_err(), Error::CircumcenterNotInterior);
        let cfg = BaseConfig::new(
            Point2::ints(0, 0),
            Point2::ints(4, 0),
            Point2::ints(1, 3),
            Point2::ints(1, 1),
            Scalar::ratio(1, 5),
        )
        .unwrap();
        assert_eq!(special_case_a(&cfg).unwrap_err(), Error::NotCircumcenter);
        // circumcenter (2, 1) with r = 1 is exactly critical
        let cfg =
            circumcenter_config(Point2::ints(0, 0), Point2::ints(4, 0), Point2::ints(1, 3), Scalar::one()).unwrap();
        assert_eq!(special_case_a(&cfg).unwrap_err(), Error::Critical);
    }

    #[test]
    fn equilateral_g_vanish() {
        let (x, y, z) = equilateral_points();
        assert_eq!(g_polynomials(&x, &y, &z), (Scalar::zero(), Scalar::zero()));
        let cfg = circumcenter_config(x, y, z, Scalar::ratio(1, 2)).unwrap();
        assert_eq!(special_case_a(&cfg).unwrap().gap, Scalar::zero());
    }

    #[test]
    fn incenter_case_matches_pipeline() {
        let cfg = incenter_config(
            Point2::ints(0, 0),
            Point2::ints(154, 0),
            Point2::ints(55, 132),
            Scalar::int(10),
            Field::Rational,
        )
        .unwrap();
        assert_eq!(cfg.c, Point2::ints(66, 44));
        let b = special_case_b(&cfg).unwrap();
        assert_eq!((b.v1.clone(), b.v2.clone()), (Scalar::zero(), Scalar::zero()));
        let cert = certificate(&cfg).unwrap();
        assert_eq!(b.gap, cert.lhs);
        assert_eq!(b.gap, cert.rhs);
    }

    #[test]
    fn incenter_case_rejects_other_points() {
        let cfg = BaseConfig::new(
            Point2::ints(0, 0),
            Point2::ints(154, 0),
            Point2::ints(55, 132),
            Point2::ints(90, 48),
            Scalar::int(10),
        )
        .unwrap();
        assert_eq!(special_case_b(&cfg).unwrap_err(), Error::NotIncenter);
    }

    #[test]
    fn equilateral_incenter_case_is_zero() {
        let (x, y, z) = equilateral_points();
        let cfg = incenter_config(x, y, z, Scalar::ratio(1, 2), k3()).unwrap();
        assert_eq!(special_case_b(&cfg).unwrap().gap, Scalar::zero());
    }

    #[test]
    fn equilateral_examples() {
        let e = equilateral_gap(&Scalar::int(4), &Scalar::ratio(1, 2)).unwrap();
        assert_eq!(
            (e.w3.clone(), e.r_circ.clone(), e.d2.clone()),
            (Scalar::int(4), Scalar::ratio(13, 6), Scalar::ratio(16, 9))
        );
        assert!(e.rel1 && e.rel2 && e.gap_vanishes());
        assert_eq!(e.regime, RegularRegime::AboveRegular);

        let e = equilateral_gap(&Scalar::int(24), &Scalar::one()).unwrap();
        assert_eq!(e.d2, Scalar::zero());
        assert_eq!(e.w3, &e.r_circ + Scalar::one());
        assert_eq!(e.regime, RegularRegime::Regular);
        assert!(e.gap_vanishes());

        let e = equilateral_gap(&Scalar::int(4), &Scalar::ratio(11, 20)).unwrap();
        assert!(e.signed_d.is_negative());
        assert!(e.gap_vanishes() && e.rel1 && e.rel2);

        let e = equilateral_gap(&Scalar::int(4), &Scalar::ratio(1, 4)).unwrap();
        assert!(e.signed_d.is_positive());
        assert_eq!(e.regime, RegularRegime::BelowRegular);
    }

    #[test]
    fn equilateral_errors() {
        assert_eq!(equilateral_gap(&Scalar::int(12), &Scalar::one()).unwrap_err(), Error::Critical);
        assert_eq!(equilateral_gap(&Scalar::int(4), &Scalar::one()).unwrap_err(), Error::Supercritical);
        assert_eq!(equilateral_gap(&Scalar::int(4), &Scalar::zero()).unwrap_err(), Error::NonPositiveInradius);
        assert!(matches!(equilateral_gap(&Scalar::zero(), &Scalar::one()), Err(Error::Domain(_))));
    }

    #[test]
    fn planar_examples() {
        let rep = planar_critical(&Rational::new(2.into(), 5.into())).unwrap();
        assert_eq!(rep.r_crit_sq, Rational::new(6.into(), 25.into()));
        assert_eq!(rep.r_crit, s("1/5*sqrt(6)"));
        assert!(rep.pole_at_crit && rep.determinant_form_holds);

        let rep = planar_critical(&Rational::new(1.into(), 2.into())).unwrap();
        assert_eq!(rep.r_crit, Scalar::ratio(1, 2));
        assert!(rep.pole_at_crit);

        assert!(planar_critical(&Rational::one()).is_err());
        assert!(planar_critical(&Rational::zero()).is_err());
    }

    #[test]
    fn planar_height_matches_closed_form() {
        let p = Scalar::ratio(1, 3);
        for r in [Scalar::ratio(1, 10), Scalar::ratio(2, 5), Scalar::ratio(3, 4)] {
            assert_eq!(planar_apex_height(&p, &r).unwrap(), planar_apex_height_closed(&p, &r).unwrap());
        }
        // isosceles check: p = 1/2, r = 1/4 gives the apex over the midpoint
        assert_eq!(planar_apex_height(&Scalar::ratio(1, 2), &Scalar::ratio(1, 4)).unwrap(), Scalar::ratio(2, 3));
    }

    #[test]
    fn pech_examples() {
        let rep = pech_euler(&Scalar::int(154), &Scalar::int(165), &Scalar::int(143), Field::Rational).unwrap();
        assert!(rep.identity_holds && rep.product_form_holds);
        let h = rep.heronian.unwrap();
        assert_eq!(h.area, Scalar::int(10164));
        assert_eq!(h.inradius, Scalar::int(44));
        assert!(h.euler_holds && h.circumradius_ge_twice_inradius && !h.equality);

        let rep = pech_euler(&Scalar::int(3), &Scalar::int(4), &Scalar::int(5), Field::Rational).unwrap();
        assert_eq!(rep.polynomial, Scalar::int(12));
        assert_eq!(rep.sos, Scalar::int(12));

        let rep = pech_euler(&Scalar::int(2), &Scalar::int(2), &Scalar::int(2), k3()).unwrap();
        assert_eq!(rep.polynomial, Scalar::zero());
        let h = rep.heronian.unwrap();
        assert!(h.equality && h.euler_holds);

        // 16K² = 15·3·5·7 is not a square
        assert!(pech_euler(&Scalar::int(4), &Scalar::int(5), &Scalar::int(6), Field::Rational)
            .unwrap()
            .heronian
            .is_none());
        assert!(pech_euler(&Scalar::int(1), &Scalar::int(2), &Scalar::int(3), Field::Rational).is_err());
    }
}
