//! Two-term sum-of-squares certificate for the Grace–Danielsson gap.
//!
//! ```text
//! (R² − d² − 3r²)² − (2rR)² = r² · ((u₁r² + v₁)² + (u₂r² + v₂)²) / (a₀ (A − B r²))
//! ```
//!
//! The left side comes from the constructed tetrahedron. The right side uses
//! base-triangle data only: `u = 4a₀(c − o)` directly, and `v` recovered from
//! the even quartic `N(r) = α r⁴ + β r² + γ` (the gap numerator), interpolated
//! exactly at three subcritical probe radii. With `dis = √(4αγ − β²)`,
//!
//! ```text
//! v₁ = (u₁β + u₂·dis) / 2α,   v₂ = (u₂β − u₁·dis) / 2α
//! ```
//!
//! where the sign of `dis` is opposite to the McCay cubic `M` of the base
//! triangle evaluated at `c`; `u₁v₂ − u₂v₁ = M / a₀²` identically.

use crate::base::{area_set, big_a_b, circumcenter2, BaseConfig, Regime};
use crate::error::{Error, Result};
use crate::linalg::solve3;
use crate::metrics::{gd_verdict, metrics};
use crate::scalar::Scalar;
use crate::tetra::construct;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VRoute {
    /// Interpolated quartic plus discriminant root.
    Discriminant,
    /// Closed-form polynomials; used when `α = 0` leaves the discriminant route undefined.
    Appendix,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GapCertificate {
    pub r: Scalar,
    pub u1: Scalar,
    pub u2: Scalar,
    pub v1: Scalar,
    pub v2: Scalar,
    pub a0: Scalar,
    pub big_a: Scalar,
    pub big_b: Scalar,
    pub alpha: Scalar,
    pub beta: Scalar,
    pub gamma: Scalar,
    pub dis: Scalar,
    /// `(R² − d² − 3r²)² − 4r²R²` from the constructed tetrahedron.
    pub lhs: Scalar,
    /// `r²((u₁r² + v₁)² + (u₂r² + v₂)²) / (a₀(A − Br²))`.
    pub rhs: Scalar,
    pub v_route: VRoute,
    pub checks: Vec<(&'static str, bool)>,
}

impl GapCertificate {
    pub fn holds(&self) -> bool {
        self.checks.iter().all(|(_, ok)| *ok)
    }

    pub fn failures(&self) -> Vec<&'static str> {
        self.checks.iter().filter(|(_, ok)| !ok).map(|(name, _)| *name).collect()
    }

    pub fn denominator(&self) -> Scalar {
        &self.a0 * (&self.big_a - &self.big_b * self.r.square())
    }
}

/// `u = 4a₀(c − o)` with `o` the base circumcenter.
pub fn u_pair(cfg: &BaseConfig) -> Result<(Scalar, Scalar)> {
    let o = circumcenter2(&cfg.x, &cfg.y, &cfg.z)?;
    let four_a0 = area_set(cfg).a0 * Scalar::int(4);
    Ok((&four_a0 * (&cfg.c.x1 - &o.x1), &four_a0 * (&cfg.c.x2 - &o.x2)))
}

/// Squared gap of the constructed tetrahedron at the configured inradius.
pub fn pipeline_gap(cfg: &BaseConfig) -> Result<Scalar> {
    let tet = construct(cfg)?;
    Ok(gd_verdict(&metrics(&tet)?).squared_gap)
}

/// Gap numerator `gap · a₀(A − Br²) / r²` at inradius `r`.
fn gap_numerator(cfg: &BaseConfig, r: &Scalar) -> Result<Scalar> {
    let at = cfg.with_r(r.clone())?;
    let (a, b) = big_a_b(&at);
    let a0 = area_set(&at).a0;
    let r2 = r.square();
    Ok(pipeline_gap(&at)? * a0 * (a - b * &r2) / r2)
}

/// A power of two `ρ` with `ρ² < A/B`, certified exactly.
pub fn subcritical_scale(cfg: &BaseConfig) -> Result<Scalar> {
    let (a, b) = big_a_b(cfg);
    let below = |rho: &Scalar| (&b * rho.square()) < a;
    let two = Scalar::int(2);
    let mut rho = Scalar::one();
    if below(&rho) {
        for _ in 0..4096 {
            let next = &rho * &two;
            if !below(&next) {
                return Ok(rho);
            }
            rho = next;
        }
    } else {
        for _ in 0..4096 {
            rho = &rho / &two;
            if below(&rho) {
                return Ok(rho);
            }
        }
    }
    Err(Error::NoProbes)
}

/// Probe radii `ρ·k/(k+3)` for `k = 1, 2, 3`, all strictly subcritical.
pub fn default_probes(cfg: &BaseConfig) -> Result<[Scalar; 3]> {
    let rho = subcritical_scale(cfg)?;
    Ok(std::array::from_fn(|i| {
        let k = i as i64 + 1;
        &rho * Scalar::ratio(k, k + 3)
    }))
}

/// A fourth subcritical probe distinct from [`default_probes`].
pub fn check_probe(cfg: &BaseConfig) -> Result<Scalar> {
    Ok(subcritical_scale(cfg)? * Scalar::ratio(4, 7))
}

/// `(α, β, γ)` of the gap numerator, interpolated from the given probe radii.
pub fn quartic_coefficients_with(cfg: &BaseConfig, probes: &[Scalar; 3]) -> Result<(Scalar, Scalar, Scalar)> {
    let mut rows: [[Scalar; 3]; 3] = Default::default();
    let mut rhs: [Scalar; 3] = Default::default();
    for (i, r) in probes.iter().enumerate() {
        if cfg.with_r(r.clone())?.regime() != Regime::Subcritical {
            return Err(Error::NoProbes);
        }
        let s = r.square();
        rows[i] = [s.square(), s.clone(), Scalar::one()];
        rhs[i] = gap_numerator(cfg, r)?;
    }
    let [alpha, beta, gamma] = solve3(&rows, &rhs).ok_or(Error::NoProbes)?;
    Ok((alpha, beta, gamma))
}

pub fn quartic_coefficients(cfg: &BaseConfig) -> Result<(Scalar, Scalar, Scalar)> {
    quartic_coefficients_with(cfg, &default_probes(cfg)?)
}

/// McCay cubic of the base triangle at `c`, in unnormalized barycentrics
/// `(a_x, a_y, a_z)` with squared side lengths.
pub fn mccay_cubic(cfg: &BaseConfig) -> Scalar {
    let s = area_set(cfg);
    let la = cfg.y.dist2(&cfg.z);
    let lb = cfg.z.dist2(&cfg.x);
    let lc = cfg.x.dist2(&cfg.y);
    let sa = &lb + &lc - &la;
    let sb = &lc + &la - &lb;
    let sc = &la + &lb - &lc;
    let (ax2, ay2, az2) = (s.ax.square(), s.ay.square(), s.az.square());
    &la * &sa * &s.ax * (&lc * &ay2 - &lb * &az2)
        + &lb * &sb * &s.ay * (&la * &az2 - &lc * &ax2)
        + &lc * &sc * &s.az * (&lb * &ax2 - &la * &ay2)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VPair {
    pub v1: Scalar,
    pub v2: Scalar,
    /// Nonnegative root of `4αγ − β²`.
    pub dis: Scalar,
}

fn v_from_quartic(
    cfg: &BaseConfig,
    (u1, u2): (&Scalar, &Scalar),
    (alpha, beta, gamma): (&Scalar, &Scalar, &Scalar),
) -> Result<VPair> {
    if alpha.is_zero() {
        return Err(Error::VanishingAlpha);
    }
    let disc = Scalar::int(4) * alpha * gamma - beta.square();
    let dis = disc
        .sqrt_in(cfg.field())
        .map_err(|_| Error::DiscriminantNotSquare(disc.to_string()))?
        .ok_or_else(|| Error::DiscriminantNotSquare(disc.to_string()))?;
    let oriented = if mccay_cubic(cfg).is_positive() { -&dis } else { dis.clone() };
    let two_alpha = alpha + alpha;
    Ok(VPair { v1: (u1 * beta + u2 * &oriented) / &two_alpha, v2: (u2 * beta - u1 * &oriented) / &two_alpha, dis })
}

/// `v` recovered from the interpolated quartic and its discriminant.
pub fn v_pair(cfg: &BaseConfig) -> Result<VPair> {
    let (u1, u2) = u_pair(cfg)?;
    if (u1.square() + u2.square()).is_zero() {
        return Err(Error::VanishingAlpha);
    }
    let (alpha, beta, gamma) = quartic_coefficients(cfg)?;
    v_from_quartic(cfg, (&u1, &u2), (&alpha, &beta, &gamma))
}

/// Closed-form degree-five `v₁, v₂` in the coordinates of `x, y, z, c`.
pub fn appendix_v(cfg: &BaseConfig) -> Result<(Scalar, Scalar)> {
    let (x1, x2) = (&cfg.x.x1, &cfg.x.x2);
    let (y1, y2) = (&cfg.y.x1, &cfg.y.x2);
    let (z1, z2) = (&cfg.z.x1, &cfg.z.x2);
    let (c1, c2) = (&cfg.c.x1, &cfg.c.x2);
    let a0 = area_set(cfg).a0;
    let o = circumcenter2(&cfg.x, &cfg.y, &cfg.z)?;
    let sq = |s: &Scalar| s.square();
    let n = Scalar::int;

    let v1 = c1 * (sq(c1) + sq(c2)) * &a0 - n(2) * sq(c1) * &a0 * &o.x1
        + y1 * z1 * (y2 - z2) * (sq(c1) - sq(x1) - sq(&(c2 - x2)))
        + z1 * x1 * (z2 - x2) * (sq(c1) - sq(y1) - sq(&(c2 - y2)))
        + x1 * y1 * (x2 - y2) * (sq(c1) - sq(z1) - sq(&(c2 - z2)))
        + sq(c1) * (sq(x2) * (z2 - y2) + sq(y2) * (x2 - z2) + sq(z2) * (y2 - x2))
        + sq(c2) * (sq(x1) * (z2 - y2) + sq(y1) * (x2 - z2) + sq(z1) * (y2 - x2))
        + sq(x1) * (y2 - z2) * (c1 * (y1 + z1) + c2 * (y2 + z2) - y2 * z2)
        + sq(y1) * (z2 - x2) * (c1 * (z1 + x1) + c2 * (z2 + x2) - z2 * x2)
        + sq(z1) * (x2 - y2) * (c1 * (x1 + y1) + c2 * (x2 + y2) - x2 * y2)
        + n(2) * c1 * c2 * (x1 * x2 * (y2 - z2) + y1 * y2 * (z2 - x2) + z1 * z2 * (x2 - y2))
        + n(2) * c1 * c2 * (x1 * (sq(z2) - sq(y2)) + y1 * (sq(x2) - sq(z2)) + z1 * (sq(y2) - sq(x2)))
        + c1 * (x1 * x2 * (sq(z2) - sq(y2)) + y1 * y2 * (sq(x2) - sq(z2)) + z1 * z2 * (sq(y2) - sq(x2)))
        + n(3) * c1 * (x1 * y2 * z2 * (y2 - z2) + x2 * y1 * z2 * (z2 - x2) + x2 * y2 * z1 * (x2 - y2));

    let v2 = c2 * (sq(c1) + sq(c2)) * &a0 - n(2) * sq(c2) * &a0 * &o.x2
        + y2 * z2 * (y1 - z1) * (sq(&(c1 - x1)) - sq(c2) + sq(x2))
        + x2 * z2 * (z1 - x1) * (sq(&(c1 - y1)) - sq(c2) + sq(y2))
        + x2 * y2 * (x1 - y1) * (sq(&(c1 - z1)) - sq(c2) + sq(z2))
        + sq(c1) * (sq(x2) * (y1 - z1) + sq(y2) * (z1 - x1) + sq(z2) * (x1 - y1))
        + sq(c2) * (sq(x1) * (y1 - z1) + sq(y1) * (z1 - x1) + sq(z1) * (x1 - y1))
        + sq(x2) * (z1 - y1) * (c1 * (y1 + z1) + c2 * (y2 + z2) - y1 * z1)
        + sq(y2) * (x1 - z1) * (c1 * (z1 + x1) + c2 * (z2 + x2) - z1 * x1)
        + sq(z2) * (y1 - x1) * (c1 * (x1 + y1) + c2 * (x2 + y2) - x1 * y1)
        + n(2) * c1 * c2 * (x1 * x2 * (z1 - y1) + y1 * y2 * (x1 - z1) + z1 * z2 * (y1 - x1))
        + n(2) * c1 * c2 * (x2 * (sq(y1) - sq(z1)) + y2 * (sq(z1) - sq(x1)) + z2 * (sq(x1) - sq(y1)))
        + c2 * (x1 * x2 * (sq(y1) - sq(z1)) + y1 * y2 * (sq(z1) - sq(x1)) + z1 * z2 * (sq(x1) - sq(y1)))
        + n(3) * c2 * (sq(x1) * (y2 * z1 - y1 * z2) + sq(y1) * (x1 * z2 - x2 * z1) + sq(z1) * (x2 * y1 - x1 * y2));

    Ok((v1, v2))
}

/// `r² · ((u₁r² + v₁)² + (u₂r² + v₂)²) / (a₀(A − Br²))`.
pub fn certificate_rhs(
    r: &Scalar,
    u: (&Scalar, &Scalar),
    v: (&Scalar, &Scalar),
    a0: &Scalar,
    a: &Scalar,
    b: &Scalar,
) -> Scalar {
    let r2 = r.square();
    let t1 = u.0 * &r2 + v.0;
    let t2 = u.1 * &r2 + v.1;
    &r2 * (t1.square() + t2.square()) / (a0 * (a - b * &r2))
}

/// Full certificate at the configured (strictly subcritical) inradius.
pub fn certificate(cfg: &BaseConfig) -> Result<GapCertificate> {
    match cfg.regime() {
        Regime::Subcritical => {}
        Regime::Critical => return Err(Error::Critical),
        Regime::Supercritical => return Err(Error::Supercritical),
    }
    let lhs = pipeline_gap(cfg)?;
    let a0 = area_set(cfg).a0;
    let (big_a, big_b) = big_a_b(cfg);
    let (u1, u2) = u_pair(cfg)?;
    let (alpha, beta, gamma) = quartic_coefficients(cfg)?;

    let disc = Scalar::int(4) * &alpha * &gamma - beta.square();
    let (v1, v2, dis, v_route) = if (u1.square() + u2.square()).is_zero() {
        let (v1, v2) = appendix_v(cfg)?;
        let dis = disc.sqrt_in(cfg.field())?.ok_or_else(|| Error::DiscriminantNotSquare(disc.to_string()))?;
        (v1, v2, dis, VRoute::Appendix)
    } else {
        let vp = v_from_quartic(cfg, (&u1, &u2), (&alpha, &beta, &gamma))?;
        (vp.v1, vp.v2, vp.dis, VRoute::Discriminant)
    };

    let rhs = certificate_rhs(&cfg.r, (&u1, &u2), (&v1, &v2), &a0, &big_a, &big_b);

    let probe = check_probe(cfg)?;
    let p2 = probe.square();
    let quartic_at = &alpha * p2.square() + &beta * &p2 + &gamma;
    let squares_at = (&u1 * &p2 + &v1).square() + (&u2 * &p2 + &v2).square();
    let numerator_at = gap_numerator(cfg, &probe)?;
    let cubic = mccay_cubic(cfg);
    let denominator = &a0 * (&big_a - &big_b * cfg.r.square());

    let checks = vec![
        ("lhs = rhs", lhs == rhs),
        ("alpha = u1^2 + u2^2", alpha == u1.square() + u2.square()),
        ("dis^2 = 4*alpha*gamma - beta^2", dis.square() == disc),
        ("dis = 2|M|/a0^2", dis == (Scalar::int(2) * cubic.abs()) / a0.square()),
        ("sum of squares matches quartic at fourth probe", squares_at == quartic_at),
        ("gap numerator matches quartic at fourth probe", numerator_at == quartic_at),
        ("denominator a0*(A - B*r^2) > 0", denominator.is_positive()),
        ("rhs >= 0", rhs.sign() >= 0),
    ];

    Ok(GapCertificate {
        r: cfg.r.clone(),
        u1,
        u2,
        v1,
        v2,
        a0,
        big_a,
        big_b,
        alpha,
        beta,
        gamma,
        dis,
        lhs,
        rhs,
        v_route,
        checks,
    })
}
