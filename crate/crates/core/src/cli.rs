//! Command-line front end. `run` is the whole program; the binary only forwards
//! `argv` and the exit status.

use std::collections::BTreeMap;
use std::io::Write;

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};

use crate::acceptance;
use crate::assemble::{compare_vw, monopole_series, surface_preset, Status, Surface, SurfaceData, COMPLETE_THROUGH};
use crate::closedform::{closed_form_series, HorizontalRoutes};
use crate::error::{Error, Result};
use crate::exactnum::{ParamPoly, TruncSeries};
use crate::normalization::NormalizationRecord;
use crate::qseries::euler_char_series;
use crate::surfring::{mixed_s21, vertical_rank_r};
use crate::tautcalc::horizontal_series;

#[derive(Parser, Debug)]
#[command(name = "vwcalc", version, about = "Exact monopole-branch Vafa-Witten series")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Truncation order in q.
    #[arg(long, default_value_t = crate::DEFAULT_ORDER)]
    pub order: usize,
    /// Preset name (quintic, blowup-k3, octic-double) or custom:K2,c2,chi.
    #[arg(long, conflicts_with = "symbolic")]
    pub surface: Option<String>,
    /// Keep g and pg symbolic (the default).
    #[arg(long)]
    pub symbolic: bool,
    /// Emit a JSON record instead of text.
    #[arg(long)]
    pub json: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Horizontal coefficients h_0..h_N.
    Horizontal(Common),
    /// Expansion of the algebraic closed form.
    ClosedForm(Common),
    /// Agreement of the four horizontal routes at an integer genus.
    DiagonalCheck {
        #[command(flatten)]
        common: Common,
        /// Canonical genus; defaults to the surface's, else 6.
        #[arg(long)]
        g: Option<i64>,
    },
    /// Vertical term on S^[1,1], or its rank-r analogue.
    Vertical {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 2)]
        rank: i64,
    },
    /// Mixed term on S^[2,1], over all eight forms of the integrand.
    Mixed(Common),
    /// Monopole series through q^3, horizontal-only beyond.
    Monopole(Common),
    /// Compare with the Vafa-Witten prediction through q^3.
    CompareVw(Common),
    /// Euler characteristics of nested Hilbert schemes.
    EulerSeries {
        #[command(flatten)]
        common: Common,
        /// Topological Euler number; defaults to the surface's c2.
        #[arg(long)]
        euler: Option<i64>,
    },
    /// Run the acceptance suite.
    Selftest {
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormalizationField {
    pub two_exponent: String,
    pub sign_exponent: String,
    pub display: String,
}

impl From<&NormalizationRecord> for NormalizationField {
    fn from(r: &NormalizationRecord) -> Self {
        Self {
            two_exponent: r.exponent_of_two().to_string(),
            sign_exponent: r.exponent_of_minus_one().to_string(),
            display: r.describe(),
        }
    }
}

/// The JSON form of every command's output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub command: String,
    pub parameters: BTreeMap<String, String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub normalization: Option<NormalizationField>,
    pub coefficients: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub status: Option<String>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty", default)]
    pub details: BTreeMap<String, String>,
}

impl OutputRecord {
    fn new(command: &str) -> Self {
        Self {
            command: command.to_string(),
            parameters: BTreeMap::new(),
            normalization: None,
            coefficients: Vec::new(),
            status: None,
            details: BTreeMap::new(),
        }
    }

    fn param(mut self, k: &str, v: impl ToString) -> Self {
        self.parameters.insert(k.to_string(), v.to_string());
        self
    }

    fn detail(mut self, k: &str, v: impl ToString) -> Self {
        self.details.insert(k.to_string(), v.to_string());
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("record serializes")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }

    /// Plain text: normalization, `q^n: value` lines, then status and details.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        if let Some(n) = &self.normalization {
            out += &format!("normalization: {}\n", n.display);
        }
        for (n, c) in self.coefficients.iter().enumerate() {
            out += &format!("q^{n}: {c}\n");
        }
        for (k, v) in &self.details {
            out += &format!("{k}: {v}\n");
        }
        if let Some(s) = &self.status {
            out += &format!("status: {s}\n");
        }
        out
    }
}

fn parse_surface(c: &Common) -> Result<Surface> {
    let Some(name) = &c.surface else {
        return Ok(Surface::Symbolic);
    };
    if name == "symbolic" {
        return Ok(Surface::Symbolic);
    }
    if let Some(spec) = name.strip_prefix("custom:") {
        let parts: Vec<i64> = spec
            .split(',')
            .map(|p| p.trim().parse::<i64>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| Error::InvalidArgument(format!("cannot parse surface '{name}'")))?;
        return match parts.as_slice() {
            [k2, c2, chi] => Ok(Surface::Concrete(SurfaceData::custom(name, *k2, *c2, *chi)?)),
            _ => Err(Error::InvalidArgument("custom surface needs K2,c2,chi".into())),
        };
    }
    Ok(Surface::Concrete(surface_preset(name)?))
}

fn surface_params(rec: OutputRecord, s: &Surface) -> OutputRecord {
    let rec = rec.param("surface", s.name());
    match s {
        Surface::Symbolic => rec,
        Surface::Concrete(d) => rec
            .param("K2", d.k2)
            .param("c2", d.c2)
            .param("chi", d.chi)
            .param("pg", d.pg)
            .param("g", d.g),
    }
}

fn series_strings(s: &TruncSeries<ParamPoly>, surface: &Surface) -> Vec<String> {
    s.coeffs().iter().map(|c| surface.specialize(c).to_string()).collect()
}

/// Exit status of a finished command.
pub struct Outcome {
    pub record: OutputRecord,
    pub code: i32,
}

fn ok(record: OutputRecord) -> Outcome {
    Outcome { record, code: 0 }
}

fn horizontal(c: &Common) -> Result<Outcome> {
    let s = parse_surface(c)?;
    let (series, norm) = horizontal_series(c.order);
    let mut r = surface_params(OutputRecord::new("horizontal"), &s).param("order", c.order);
    r.normalization = Some((&s.specialize_record(&norm)).into());
    r.coefficients = series_strings(&series, &s);
    Ok(ok(r))
}

fn closed_form(c: &Common) -> Result<Outcome> {
    let s = parse_surface(c)?;
    let (series, norm) = closed_form_series(&ParamPoly::g(), c.order);
    let mut r = surface_params(OutputRecord::new("closed-form"), &s).param("order", c.order);
    r.normalization = Some((&s.specialize_record(&norm)).into());
    r.coefficients = series_strings(&series, &s);
    Ok(ok(r))
}

fn diagonal_check(c: &Common, g: Option<i64>) -> Result<Outcome> {
    let s = parse_surface(c)?;
    let g = match (g, &s) {
        (Some(g), _) => g,
        (None, Surface::Concrete(d)) => d.g,
        (None, Surface::Symbolic) => 6,
    };
    if g < 2 {
        return Err(Error::InvalidArgument(format!("diagonal-check needs g >= 2, got {g}")));
    }
    let routes = HorizontalRoutes::compute(g, c.order)?;
    let agree = routes.all_agree();
    let mut r = OutputRecord::new("diagonal-check").param("g", g).param("order", c.order);
    r.coefficients = routes.closed_form.coeffs().iter().map(|x| x.to_string()).collect();
    r.status = Some(if agree { "AGREE" } else { "DISAGREE" }.into());
    if let Some(k) = routes.first_disagreement() {
        r = r.detail("first_disagreement", format!("q^{k}"));
    }
    r = r.detail("routes", "tautological, diagonal, residue, closed form");
    Ok(Outcome {
        record: r,
        code: if agree { 0 } else { 1 },
    })
}

fn vertical(c: &Common, rank: i64) -> Result<Outcome> {
    let s = parse_surface(c)?;
    let (norm, poly) = vertical_rank_r(rank)?;
    let norm = s.specialize_record(&norm);
    let value = s.specialize_chern(&poly);
    let mut r = surface_params(OutputRecord::new("vertical"), &s).param("rank", rank);
    r.normalization = Some((&norm).into());
    r.coefficients = vec![value.to_string()];
    r = r.detail("value", format!("{norm} * ({value})"));
    Ok(ok(r))
}

fn mixed(c: &Common) -> Result<Outcome> {
    let s = parse_surface(c)?;
    let mut r = surface_params(OutputRecord::new("mixed"), &s);
    let mut values = Vec::new();
    for i in 1..=2u8 {
        for j in 1..=2u8 {
            for k in 1..=2u8 {
                let (norm, poly) = mixed_s21(i, j, k)?;
                let v = s.specialize_chern(&poly);
                r = r.detail(&format!("ijk={i}{j}{k}"), &v);
                r.normalization = Some((&s.specialize_record(&norm)).into());
                values.push(v);
            }
        }
    }
    let same = values.windows(2).all(|w| w[0] == w[1]);
    r.coefficients = vec![values[0].to_string()];
    r.status = Some(if same { "INVARIANT" } else { "VARIES" }.into());
    Ok(Outcome {
        record: r,
        code: if same { 0 } else { 1 },
    })
}

fn monopole(c: &Common) -> Result<Outcome> {
    let s = parse_surface(c)?;
    let m = monopole_series(c.order).specialize(&s);
    let mut r = surface_params(OutputRecord::new("monopole"), &s)
        .param("order", c.order)
        .param("complete_through", COMPLETE_THROUGH);
    r.normalization = Some((&m.normalization).into());
    r.coefficients = m.bracket.coeffs().iter().map(|x| x.to_string()).collect();
    for comp in &m.per_component {
        if comp.power <= COMPLETE_THROUGH {
            r = r.detail(&format!("q^{} {}", comp.power, comp.label), &comp.value);
        }
    }
    if c.order > COMPLETE_THROUGH {
        r = r.detail(
            "note",
            format!("q^{}..q^{} are horizontal-only, not the full invariant", COMPLETE_THROUGH + 1, c.order),
        );
    }
    Ok(ok(r))
}

fn compare(c: &Common) -> Result<Outcome> {
    let s = parse_surface(c)?;
    let rep = compare_vw(&s);
    let mut r = surface_params(OutputRecord::new("compare-vw"), &s).param("through", COMPLETE_THROUGH);
    r.normalization = Some((&rep.monopole_normalization).into());
    r.coefficients = rep.bracket().iter().map(|x| x.to_string()).collect();
    r.status = Some(rep.status.to_string());
    for p in &rep.powers {
        r = r.detail(&format!("q^{} prediction", p.power), &p.prediction);
    }
    if let Some(k) = rep.first_mismatch {
        r = r.detail("first_mismatch", format!("q^{k}"));
    }
    r = r
        .detail("prediction_normalization", rep.prediction_normalization.describe())
        .detail("normalizations_equal", rep.normalizations_equal)
        .detail("sign_difference", format!("(-1)^({})", rep.sign_difference))
        .detail("vd_parity", format!("(-1)^({})", rep.vd_parity))
        .detail("sign_matches_vd", rep.sign_matches_vd);
    Ok(Outcome {
        record: r,
        code: if rep.status == Status::Equal { 0 } else { 1 },
    })
}

fn euler_series(c: &Common, euler: Option<i64>) -> Result<Outcome> {
    let s = parse_surface(c)?;
    let e = match (euler, &s) {
        (Some(e), _) => e,
        (None, Surface::Concrete(d)) => d.c2,
        (None, Surface::Symbolic) => {
            return Err(Error::InvalidArgument("euler-series needs --euler or a concrete --surface".into()))
        }
    };
    let series = euler_char_series(e, c.order);
    let mut r = OutputRecord::new("euler-series")
        .param("euler", e)
        .param("order", c.order)
        .param("shift", series.shift());
    r.coefficients = series.coeffs().iter().map(|x| x.to_string()).collect();
    Ok(ok(r))
}

fn selftest() -> Outcome {
    let results = acceptance::run_all();
    let all = results.iter().all(|r| r.passed);
    let mut r = OutputRecord::new("selftest");
    for res in &results {
        let mark = if res.passed { "PASS" } else { "FAIL" };
        r = r.detail(&format!("criterion {:02}", res.id), format!("{mark} {}: {}", res.name, res.detail));
    }
    r.status = Some(if all { "PASS" } else { "FAIL" }.into());
    Outcome {
        record: r,
        code: if all { 0 } else { 1 },
    }
}

fn dispatch(cmd: &Command) -> Result<(Outcome, bool)> {
    Ok(match cmd {
        Command::Horizontal(c) => (horizontal(c)?, c.json),
        Command::ClosedForm(c) => (closed_form(c)?, c.json),
        Command::DiagonalCheck { common, g } => (diagonal_check(common, *g)?, common.json),
        Command::Vertical { common, rank } => (vertical(common, *rank)?, common.json),
        Command::Mixed(c) => (mixed(c)?, c.json),
        Command::Monopole(c) => (monopole(c)?, c.json),
        Command::CompareVw(c) => (compare(c)?, c.json),
        Command::EulerSeries { common, euler } => (euler_series(common, *euler)?, common.json),
        Command::Selftest { json } => (selftest(), *json),
    })
}

/// Run with the given arguments (including the program name). Returns the exit
/// status: 0 on success, 1 when a comparison fails, 2 on a usage error.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{rendered}");
                2
            } else {
                let _ = write!(out, "{rendered}");
                0
            };
        }
    };
    match dispatch(&cli.command) {
        Ok((outcome, json)) => {
            if json {
                let _ = writeln!(out, "{}", outcome.record.to_json());
            } else if let Command::Vertical { .. } = cli.command {
                let v = outcome.record.details.get("value").cloned().unwrap_or_default();
                let _ = writeln!(out, "{v}");
            } else {
                let _ = write!(out, "{}", outcome.record.to_text());
            }
            outcome.code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            let _ = writeln!(err, "{}", <Cli as clap::CommandFactory>::command().render_usage());
            2
        }
    }
}
