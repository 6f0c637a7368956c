//! The three worked examples with their published values, and a
//! field-by-field comparison against freshly computed results.

use crate::base::{area_set, big_a_b, critical_inradius_sq, BaseConfig, Point2};
use crate::certificate::{appendix_v, certificate, u_pair, v_pair};
use crate::error::{Error, Result};
use crate::linalg::Point3;
use crate::metrics::{gd_verdict, metrics};
use crate::scalar::Scalar;
use crate::tetra::{apex, construct, criticality_coplanarity, lateral_edge_directions, tangent_points};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixtureEntry {
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub matches: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixtureReport {
    pub example: u8,
    pub entries: Vec<FixtureEntry>,
}

impl FixtureReport {
    pub fn all_match(&self) -> bool {
        self.entries.iter().all(|e| e.matches)
    }

    pub fn mismatches(&self) -> impl Iterator<Item = &FixtureEntry> {
        self.entries.iter().filter(|e| !e.matches)
    }

    fn scalar(&mut self, name: &str, expected: &str, actual: &Scalar) {
        let want: Scalar = expected.parse().expect("fixture literal");
        self.entries.push(FixtureEntry {
            name: name.to_string(),
            expected: want.to_string(),
            actual: actual.to_string(),
            matches: &want == actual,
        });
    }

    fn point(&mut self, name: &str, expected: [&str; 3], actual: &Point3) {
        let want = Point3::new(
            expected[0].parse::<Scalar>().expect("fixture literal"),
            expected[1].parse::<Scalar>().expect("fixture literal"),
            expected[2].parse::<Scalar>().expect("fixture literal"),
        );
        self.entries.push(FixtureEntry {
            name: name.to_string(),
            expected: want.to_string(),
            actual: actual.to_string(),
            matches: &want == actual,
        });
    }

    fn flag(&mut self, name: &str, expected: bool, actual: bool) {
        self.entries.push(FixtureEntry {
            name: name.to_string(),
            expected: expected.to_string(),
            actual: actual.to_string(),
            matches: expected == actual,
        });
    }
}

fn lit(t: &str) -> Scalar {
    t.parse().expect("fixture literal")
}

pub fn example1_config() -> BaseConfig {
    BaseConfig::new(
        Point2::ints(0, 0),
        Point2::ints(154, 0),
        Point2::ints(55, 132),
        Point2::ints(90, 48),
        Scalar::int(10),
    )
    .expect("example 1 is valid")
}

pub fn example2_config() -> BaseConfig {
    BaseConfig::new(
        Point2::ints(-1, 0),
        Point2::ints(1, 0),
        Point2::new(0, lit("sqrt(3)")),
        Point2::new(0, lit("1/3*sqrt(3)")),
        Scalar::ratio(1, 2),
    )
    .expect("example 2 is valid")
}

/// Example 3's base at inradius `r`; `r = 1/√2` is critical.
pub fn example3_config(r: Scalar) -> Result<BaseConfig> {
    BaseConfig::new(
        Point2::new(lit("-sqrt(2)"), -1),
        Point2::new(lit("sqrt(2)"), -1),
        Point2::ints(0, 1),
        Point2::ints(0, 0),
        r,
    )
}

pub fn example_config(n: u8) -> Result<BaseConfig> {
    match n {
        1 => Ok(example1_config()),
        2 => Ok(example2_config()),
        3 => example3_config(Scalar::ratio(1, 3)),
        _ => Err(Error::Domain(format!("no example {n}: choose 1, 2 or 3"))),
    }
}

fn example1() -> Result<FixtureReport> {
    let cfg = example1_config();
    let mut rep = FixtureReport { example: 1, entries: Vec::new() };
    let tet = construct(&cfg)?;
    let m = metrics(&tet)?;
    let cert = certificate(&cfg)?;
    let areas = area_set(&cfg);
    let (a, b) = big_a_b(&cfg);
    let (u1, u2) = u_pair(&cfg)?;
    let vp = v_pair(&cfg)?;

    rep.point("w", ["215490/2309", "339416/6927", "49280/2309"], &tet.w);
    rep.point("o", ["77", "363/8", "-15818598389/93098880"], &m.o);
    rep.scalar("R^2", "319462309835987155321/8667401457254400", &m.r2_circ);
    rep.scalar("d^2", "282073185661355308921/8667401457254400", &m.d2);
    rep.scalar("gap", "198873308525/145467", &cert.lhs);
    rep.scalar("a_0", "20328", &areas.a0);
    rep.scalar("a_x", "3696", &areas.ax);
    rep.scalar("a_y", "9240", &areas.ay);
    rep.scalar("a_z", "7392", &areas.az);
    rep.scalar("A", "252444487680", &a);
    rep.scalar("B", "158802336", &b);
    rep.scalar("u_1", "1057056", &u1);
    rep.scalar("v_1", "-7868399616", &vp.v1);
    rep.scalar("u_2", "213444", &u2);
    rep.scalar("v_2", "-2363251968", &vp.v2);
    rep.flag("rhs = gap", true, cert.rhs == cert.lhs);
    rep.flag("closed-form v agrees", true, appendix_v(&cfg)? == (vp.v1, vp.v2));
    Ok(rep)
}

fn example2() -> Result<FixtureReport> {
    let cfg = example2_config();
    let mut rep = FixtureReport { example: 2, entries: Vec::new() };
    let tet = construct(&cfg)?;
    let m = metrics(&tet)?;
    let v = gd_verdict(&m);
    let areas = area_set(&cfg);
    let (a, b) = big_a_b(&cfg);
    let root = |s: &Scalar| s.sqrt_in(cfg.field()).ok().flatten().unwrap_or_else(|| s.clone());

    rep.point("w", ["0", "1/3*sqrt(3)", "4"], &tet.w);
    rep.point("o", ["0", "1/3*sqrt(3)", "11/6"], &m.o);
    rep.scalar("a_x", "2/3*sqrt(3)", &areas.ax);
    rep.scalar("a_y", "2/3*sqrt(3)", &areas.ay);
    rep.scalar("a_z", "2/3*sqrt(3)", &areas.az);
    rep.scalar("A", "8/9*sqrt(3)", &a);
    rep.scalar("B", "8/3*sqrt(3)", &b);
    rep.scalar("R", "13/6", &root(&m.r2_circ));
    rep.scalar("d", "4/3", &root(&m.d2));
    rep.scalar("R^2", "169/36", &m.r2_circ);
    rep.scalar("d^2", "16/9", &m.d2);
    rep.scalar("squared gap", "0", &v.squared_gap);
    rep.flag("equality", true, v.equality);
    Ok(rep)
}

fn example3() -> Result<FixtureReport> {
    let crit = example3_config(lit("1/2*sqrt(2)"))?;
    let mut rep = FixtureReport { example: 3, entries: Vec::new() };
    rep.scalar("A/B", "1/2", &critical_inradius_sq(&crit));
    let tp = tangent_points(&crit)?;
    rep.point("X", ["2/5*sqrt(2)", "2/5", "2/5*sqrt(2)"], &tp.x);
    rep.point("Y", ["-2/5*sqrt(2)", "2/5", "2/5*sqrt(2)"], &tp.y);
    rep.point("Z", ["0", "-2/3", "2/3*sqrt(2)"], &tp.z);
    rep.scalar("coplanarity determinant at r_crit", "0", &criticality_coplanarity(&crit)?);
    let common = Point3::new(0, 1, lit("2*sqrt(2)"));
    let parallel = lateral_edge_directions(&crit)?.iter().all(|d| !d.is_zero() && d.is_parallel(&common));
    rep.flag("edge directions parallel to (0, 1, 2*sqrt(2))", true, parallel);
    rep.flag("apex at r_crit is a prism", true, matches!(apex(&crit), Err(Error::Critical)));
    for (n, d) in [(1, 4), (1, 3), (2, 5)] {
        let r = Scalar::ratio(n, d);
        let cfg = example3_config(r.clone())?;
        let expected = r.square() * (Scalar::one() - Scalar::int(2) * r.square());
        let cert = certificate(&cfg)?;
        rep.scalar(&format!("gap at r = {r}"), &expected.to_string(), &cert.lhs);
        rep.flag(&format!("rhs = gap at r = {r}"), true, cert.rhs == cert.lhs);
    }
    Ok(rep)
}

pub fn run_example(n: u8) -> Result<FixtureReport> {
    match n {
        1 => example1(),
        2 => example2(),
        3 => example3(),
        _ => Err(Error::Domain(format!("no example {n}: choose 1, 2 or 3"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_examples_match() {
        for n in 1..=3 {
            let rep = run_example(n).unwrap();
            let bad: Vec<_> = rep.mismatches().collect();
            assert!(bad.is_empty(), "example {n}: {bad:?}");
        }
    }

    #[test]
    fn mismatch_is_reported() {
        let mut rep = FixtureReport { example: 1, entries: Vec::new() };
        rep.scalar("a_0", "20329", &Scalar::int(20328));
        assert!(!rep.all_match());
        assert_eq!(rep.entries[0].actual, "20328");
        assert!(run_example(4).is_err());
    }
}
