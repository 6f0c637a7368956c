//! Config files, reports and subcommand bodies for the `gdgap` binary.
//!
//! Config format, one `key = value` per line, `#` starts a comment:
//!
//! ```text
//! field = quadext 3
//! x = -1, 0
//! y = 1, 0
//! z = 0, sqrt(3)
//! c = 0, 1/3*sqrt(3)
//! r = 1/2
//! ```

use std::fmt;
use std::path::Path;

use gdgap_core::base::{area_set, big_a_b, critical_inradius_sq, BaseConfig, Point2};
use gdgap_core::certificate::{certificate, VRoute};
use gdgap_core::fixtures::run_example;
use gdgap_core::fuzz::{self, heronian_sides, trial_rng, Bounds};
use gdgap_core::metrics::{gd_verdict, metrics, pythagorean_form_holds};
use gdgap_core::special::{equilateral_gap, pech_euler, pech_polynomial, pech_sos, planar_critical};
use gdgap_core::tetra::{construct, tangent_points};
use gdgap_core::{Error as CoreError, Field, Point3, Radicand, Rational, Scalar};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("missing key `{0}`")]
    Missing(&'static str),
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    /// 3 for critical or supercritical inradius, 2 for every other input problem.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(CoreError::Critical | CoreError::Supercritical) => 3,
            _ => 2,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

const KEYS: [&str; 6] = ["field", "x", "y", "z", "c", "r"];

fn parse_scalar(text: &str, line: usize) -> CliResult<Scalar> {
    text.parse().map_err(|e| CliError::Syntax { line, msg: format!("`{}`: {e}", text.trim()) })
}

fn parse_point(text: &str, line: usize) -> CliResult<Point2> {
    let parts: Vec<&str> = text.split(',').collect();
    match parts.as_slice() {
        [a, b] => Ok(Point2::new(parse_scalar(a, line)?, parse_scalar(b, line)?)),
        _ => Err(CliError::Syntax {
            line,
            msg: format!("expected two comma-separated coordinates, got `{}`", text.trim()),
        }),
    }
}

fn parse_field(text: &str, line: usize) -> CliResult<Field> {
    let words: Vec<&str> = text.split_whitespace().collect();
    let bad = |msg: String| CliError::Syntax { line, msg };
    match words.as_slice() {
        ["rational"] => Ok(Field::Rational),
        ["quadext", k] => {
            let k: u64 = k.parse().map_err(|_| bad(format!("radicand `{k}` is not a positive integer")))?;
            Ok(Field::Quadratic(Radicand::new(k).map_err(|e| bad(e.to_string()))?))
        }
        _ => Err(bad(format!("field must be `rational` or `quadext <k>`, got `{}`", text.trim()))),
    }
}

pub fn parse_config(text: &str) -> CliResult<BaseConfig> {
    let mut values: [Option<(usize, String)>; 6] = Default::default();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let (key, value) = body
            .split_once('=')
            .ok_or_else(|| CliError::Syntax { line, msg: format!("expected `key = value`, got `{body}`") })?;
        let key = key.trim();
        let slot = KEYS
            .iter()
            .position(|k| *k == key)
            .ok_or_else(|| CliError::Syntax { line, msg: format!("unknown key `{key}`") })?;
        if values[slot].is_some() {
            return Err(CliError::Syntax { line, msg: format!("duplicate key `{key}`") });
        }
        values[slot] = Some((line, value.trim().to_string()));
    }
    let field = match &values[0] {
        Some((line, v)) => parse_field(v, *line)?,
        None => Field::Rational,
    };
    let get = |slot: usize| values[slot].as_ref().ok_or(CliError::Missing(KEYS[slot]));
    let point = |slot: usize| get(slot).and_then(|(line, v)| parse_point(v, *line));
    let (line, r) = get(5)?;
    let r = parse_scalar(r, *line)?;
    Ok(BaseConfig::in_field(field, point(1)?, point(2)?, point(3)?, point(4)?, r)?)
}

pub fn format_config(cfg: &BaseConfig) -> String {
    format!("field = {}\nx = {}\ny = {}\nz = {}\nc = {}\nr = {}\n", cfg.field(), cfg.x, cfg.y, cfg.z, cfg.c, cfg.r)
}

pub fn read_config(path: &Path) -> CliResult<BaseConfig> {
    let text =
        std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
    parse_config(&text)
}

#[derive(Debug, Clone, PartialEq)]
enum Value {
    Exact(Scalar),
    Point(Vec<Scalar>),
    Text(String),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Exact(s) => write!(f, "{s}"),
            Value::Point(p) => {
                let parts: Vec<String> = p.iter().map(|s| s.to_string()).collect();
                f.write_str(&parts.join(", "))
            }
            Value::Text(t) => f.write_str(t),
        }
    }
}

impl Value {
    fn approx(&self) -> Option<String> {
        match self {
            Value::Exact(s) => Some(s.approx()),
            Value::Point(p) => Some(p.iter().map(|s| s.approx()).collect::<Vec<_>>().join(", ")),
            Value::Text(_) => None,
        }
    }
}

/// Ordered key/value output of a command.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Report {
    entries: Vec<(String, Value)>,
}

impl Report {
    pub fn exact(&mut self, key: impl Into<String>, v: &Scalar) -> &mut Self {
        self.entries.push((key.into(), Value::Exact(v.clone())));
        self
    }

    pub fn point3(&mut self, key: impl Into<String>, p: &Point3) -> &mut Self {
        let coords = vec![p.x1.clone(), p.x2.clone(), p.x3.clone()];
        self.entries.push((key.into(), Value::Point(coords)));
        self
    }

    pub fn point2(&mut self, key: impl Into<String>, p: &Point2) -> &mut Self {
        self.entries.push((key.into(), Value::Point(vec![p.x1.clone(), p.x2.clone()])));
        self
    }

    pub fn text(&mut self, key: impl Into<String>, v: impl fmt::Display) -> &mut Self {
        self.entries.push((key.into(), Value::Text(v.to_string())));
        self
    }

    pub fn get(&self, key: &str) -> Option<String> {
        self.entries.iter().find(|(k, _)| k == key).map(|(_, v)| v.to_string())
    }

    /// `key = value` lines; with `approx`, exact values gain a `# ~…` comment.
    pub fn render_text(&self, approx: bool) -> String {
        let mut out = String::new();
        for (k, v) in &self.entries {
            out.push_str(&format!("{k} = {v}"));
            if let (true, Some(a)) = (approx, v.approx()) {
                out.push_str(&format!("  # {a}"));
            }
            out.push('\n');
        }
        out
    }

    /// Flat JSON object of strings; approximations go under `<key>_approx`.
    pub fn render_json(&self, approx: bool) -> String {
        let mut map = serde_json::Map::new();
        for (k, v) in &self.entries {
            map.insert(k.clone(), serde_json::Value::String(v.to_string()));
            if let (true, Some(a)) = (approx, v.approx()) {
                map.insert(format!("{k}_approx"), serde_json::Value::String(a));
            }
        }
        serde_json::to_string_pretty(&serde_json::Value::Object(map)).expect("string map serializes")
    }

    pub fn render(&self, json: bool, approx: bool) -> String {
        if json {
            self.render_json(approx) + "\n"
        } else {
            self.render_text(approx)
        }
    }
}

/// Reads back `key = value` lines, dropping `#` comments.
pub fn parse_report(text: &str) -> Vec<(String, String)> {
    text.lines()
        .filter_map(|l| {
            let body = l.split('#').next()?.trim();
            let (k, v) = body.split_once(" = ")?;
            Some((k.trim().to_string(), v.trim().to_string()))
        })
        .collect()
}

/// Report plus whether every exact verification passed.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub report: Report,
    pub verified: bool,
    /// Shown on stderr when verification fails.
    pub diagnostics: Vec<String>,
}

impl Outcome {
    fn ok(report: Report) -> Self {
        Outcome { report, verified: true, diagnostics: Vec::new() }
    }

    pub fn exit_code(&self) -> u8 {
        if self.verified {
            0
        } else {
            1
        }
    }
}

fn flag(ok: bool) -> &'static str {
    if ok {
        "true"
    } else {
        "false"
    }
}

pub fn cmd_construct(cfg: &BaseConfig) -> CliResult<Outcome> {
    let tet = construct(cfg)?;
    let tp = tangent_points(cfg)?;
    let (a, b) = big_a_b(cfg);
    let mut rep = Report::default();
    rep.text("field", cfg.field())
        .point3("w", &tet.w)
        .point3("X", &tp.x)
        .point3("Y", &tp.y)
        .point3("Z", &tp.z)
        .point3("insphere center", &tet.inc)
        .exact("r", &cfg.r)
        .exact("a_0", &area_set(cfg).a0)
        .exact("A", &a)
        .exact("B", &b)
        .exact("r_crit^2", &critical_inradius_sq(cfg));
    Ok(Outcome::ok(rep))
}

pub fn cmd_gap(cfg: &BaseConfig) -> CliResult<Outcome> {
    let tet = construct(cfg)?;
    let m = metrics(&tet)?;
    let v = gd_verdict(&m);
    let cert = certificate(cfg)?;
    let mut rep = Report::default();
    rep.text("field", cfg.field())
        .exact("r", &cfg.r)
        .point3("w", &tet.w)
        .point3("o", &m.o)
        .exact("R^2", &m.r2_circ)
        .exact("d^2", &m.d2)
        .exact("gap", &v.squared_gap)
        .text("satisfied", flag(v.satisfied))
        .text("equality", flag(v.equality))
        .exact("a_0", &cert.a0)
        .exact("A", &cert.big_a)
        .exact("B", &cert.big_b)
        .exact("u_1", &cert.u1)
        .exact("u_2", &cert.u2)
        .exact("v_1", &cert.v1)
        .exact("v_2", &cert.v2)
        .exact("alpha", &cert.alpha)
        .exact("beta", &cert.beta)
        .exact("gamma", &cert.gamma)
        .exact("dis", &cert.dis)
        .text(
            "v source",
            match cert.v_route {
                VRoute::Discriminant => "discriminant",
                VRoute::Appendix => "closed form",
            },
        )
        .exact("lhs", &cert.lhs)
        .exact("rhs", &cert.rhs)
        .text("lhs = rhs", flag(cert.lhs == cert.rhs));

    let mut diagnostics: Vec<String> = cert.failures().iter().map(|f| format!("check failed: {f}")).collect();
    if !v.satisfied {
        diagnostics.push("Grace-Danielsson inequality violated".into());
    }
    if !v.factorization_holds {
        diagnostics.push("gap factorization failed".into());
    }
    if pythagorean_form_holds(&m) != v.satisfied {
        diagnostics.push("Pythagorean form disagrees with the verdict".into());
    }
    Ok(Outcome { report: rep, verified: diagnostics.is_empty(), diagnostics })
}

pub fn cmd_example(n: u8) -> CliResult<Outcome> {
    let fixture = run_example(n)?;
    let mut rep = Report::default();
    rep.text("example", n);
    for e in &fixture.entries {
        rep.text(e.name.clone(), &e.actual);
    }
    rep.text("all match", flag(fixture.all_match()));
    let diagnostics = fixture
        .mismatches()
        .map(|e| format!("{}: expected {}, got {}", e.name, e.expected, e.actual))
        .collect::<Vec<_>>();
    Ok(Outcome { report: rep, verified: diagnostics.is_empty(), diagnostics })
}

pub fn cmd_fuzz(trials: u64, seed: u64, bounds: Bounds) -> CliResult<Outcome> {
    let summary = fuzz::run(trials, seed, bounds)?;
    let mut rep = Report::default();
    rep.text("summary", &summary)
        .text("seed", seed)
        .text("coordinate bound", bounds.coordinate)
        .text("denominator bound", bounds.denominator)
        .text("regenerated draws", summary.rejected);
    let diagnostics = summary
        .failures
        .first()
        .map(|f| {
            let mut lines = vec![format!("trial {} failed: {}", f.index, f.failed.join("; "))];
            if let Some(cfg) = &f.cfg {
                lines.push(format!("# replay config for trial {}", f.index));
                lines.extend(format_config(cfg).lines().map(str::to_string));
            }
            lines
        })
        .unwrap_or_default();
    Ok(Outcome { report: rep, verified: summary.all_ok(), diagnostics })
}

pub fn parse_rational(text: &str) -> CliResult<Rational> {
    let s: Scalar = text.parse().map_err(|e| CliError::Usage(format!("`{text}`: {e}")))?;
    s.as_rational().cloned().ok_or_else(|| CliError::Usage(format!("`{text}` must be rational")))
}

pub fn cmd_planar(p: &Rational) -> CliResult<Outcome> {
    let rep_core = planar_critical(p)?;
    let mut rep = Report::default();
    rep.text("p", p)
        .text("r_crit^2", &rep_core.r_crit_sq)
        .exact("r_crit", &rep_core.r_crit)
        .text("pole at r_crit", flag(rep_core.pole_at_crit));
    let verified = rep_core.pole_at_crit && rep_core.determinant_form_holds;
    let diagnostics = if verified { Vec::new() } else { vec!["tangent lines not parallel at r_crit".into()] };
    Ok(Outcome { report: rep, verified, diagnostics })
}

pub fn cmd_pech_sides(sides: [Scalar; 3], field: Field) -> CliResult<Outcome> {
    let [a, b, c] = &sides;
    let p = pech_euler(a, b, c, field)?;
    let mut rep = Report::default();
    rep.exact("P", &p.polynomial).exact("SOS", &p.sos).text("identity", flag(p.identity_holds));
    let mut verified = p.identity_holds && p.product_form_holds;
    match &p.heronian {
        Some(h) => {
            rep.exact("K", &h.area)
                .exact("r", &h.inradius)
                .exact("R", &h.circumradius)
                .exact("d^2", &h.d2)
                .text("R >= 2r", flag(h.circumradius_ge_twice_inradius))
                .text("Euler d^2 = R(R - 2r)", flag(h.euler_holds))
                .text("R = 2r", flag(h.equality));
            verified &= h.circumradius_ge_twice_inradius && h.euler_holds;
        }
        None => {
            rep.text("heronian", "false");
        }
    }
    let diagnostics = if verified { Vec::new() } else { vec!["Pech/Euler check failed".into()] };
    Ok(Outcome { report: rep, verified, diagnostics })
}

pub fn cmd_pech_trials(trials: u64, seed: u64) -> CliResult<Outcome> {
    if trials == 0 {
        return Err(CliError::Usage("--trials must be at least 1".into()));
    }
    let mut rng = trial_rng(seed, 0);
    let mut failures = Vec::new();
    for i in 0..trials {
        let [a, b, c] = heronian_sides(&mut rng, 9).map(Scalar::from);
        let ok = pech_polynomial(&a, &b, &c) == pech_sos(&a, &b, &c)
            && match pech_euler(&a, &b, &c, Field::Rational)?.heronian {
                Some(h) => h.circumradius_ge_twice_inradius && h.euler_holds && !h.equality,
                None => false,
            };
        if !ok {
            failures.push(format!("trial {i}: sides {a}, {b}, {c}"));
        }
    }
    let mut rep = Report::default();
    rep.text("summary", format!("{}/{trials} ok", trials - failures.len() as u64)).text("seed", seed);
    Ok(Outcome { report: rep, verified: failures.is_empty(), diagnostics: failures })
}

pub fn cmd_equilateral(l2: &Scalar, r: &Scalar) -> CliResult<Outcome> {
    let e = equilateral_gap(l2, r)?;
    let mut rep = Report::default();
    let g = if e.gap_vanishes() { "0".to_string() } else { e.squared_gap.to_string() };
    rep.text("G", g)
        .text("regime", e.regime)
        .exact("w_3", &e.w3)
        .exact("R", &e.r_circ)
        .exact("d^2", &e.d2)
        .exact("R + r - w_3", &e.signed_d)
        .text("rel1", flag(e.rel1))
        .text("rel2", flag(e.rel2));
    let verified = e.rel1 && e.rel2 && e.gap_vanishes();
    let diagnostics = if verified { Vec::new() } else { vec!["equilateral relations failed".into()] };
    Ok(Outcome { report: rep, verified, diagnostics })
}
