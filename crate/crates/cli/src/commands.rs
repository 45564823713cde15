use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};

use serde::Serialize;
use serde_json::json;
use spectra_core::forbidden::{contains_subgraph, parse_patterns, Pattern};
use spectra_core::spectral::{das_bound, max_degree_pressure};
use spectra_core::table::{bounds_table, BoundsRow, FamilyValues};
use spectra_core::verify::{
    verify_claim, verify_degree_bounds, verify_h_graph_max, verify_path_bound, ExtremalClaim,
};
use spectra_core::{graph6, q_max, Family, FamilySpec, Graph};
use thiserror::Error;

use crate::{BoundsArgs, CheckFreeArgs, ConstructArgs, Format, InputArgs, VerifyArgs};

const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] spectra_core::Error),
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error("{0}")]
    Usage(String),
}

type Result<T> = std::result::Result<T, CliError>;

/// How a command that ran to completion ended.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Success,
    VerificationFailed,
    /// Some input lines were rejected; the rest were processed.
    BadInput,
}

impl Status {
    pub fn code(self) -> u8 {
        match self {
            Status::Success => 0,
            Status::VerificationFailed => 1,
            Status::BadInput => 2,
        }
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn require(v: Option<usize>, flag: &str, family: Family) -> Result<usize> {
    v.ok_or_else(|| usage(format!("family {family} needs --{flag}")))
}

fn family_spec(a: &ConstructArgs) -> Result<FamilySpec> {
    let family: Family = a.family.parse()?;
    let params = match family {
        Family::SplitStar | Family::SplitStarPlus | Family::HGraph => {
            vec![require(a.n, "n", family)?, require(a.k, "k", family)?]
        }
        Family::Theta | Family::GeneralizedTheta => {
            if a.lengths.is_empty() {
                return Err(usage(format!("family {family} needs --lengths")));
            }
            a.lengths.clone()
        }
        _ => vec![require(a.n, "n", family)?],
    };
    Ok(FamilySpec::new(family, params))
}

pub fn construct(a: &ConstructArgs) -> Result<Status> {
    let spec = family_spec(a)?;
    let g = spec.build()?;
    let mut out = io::stdout().lock();
    match a.out {
        Format::Graph6 => writeln!(out, "{}", graph6::encode(&g))?,
        Format::Json => {
            let doc = json!({
                "family": spec.family,
                "params": spec.params,
                "n": g.order(),
                "m": g.size(),
                "graph6": graph6::encode(&g),
                "edges": g.edges().collect::<Vec<_>>(),
            });
            writeln!(out, "{doc}")?;
        }
        Format::Csv => return Err(usage("construct writes graph6 or json")),
    }
    Ok(Status::Success)
}

fn open_input(a: &InputArgs) -> Result<Box<dyn BufRead>> {
    Ok(match &a.input {
        Some(path) => Box::new(BufReader::new(File::open(path)?)),
        None => Box::new(BufReader::new(io::stdin())),
    })
}

/// Decodes every nonblank line, handing good graphs to `each` and reporting
/// bad ones on stderr with their 1-based line number.
fn for_each_graph(
    a: &InputArgs,
    mut each: impl FnMut(usize, Graph) -> Result<()>,
) -> Result<Status> {
    let mut status = Status::Success;
    for (i, line) in open_input(a)?.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        match graph6::decode(&line) {
            Ok(g) => each(i + 1, g)?,
            Err(e) => {
                eprintln!("line {}: {e}", i + 1);
                status = Status::BadInput;
            }
        }
    }
    Ok(status)
}

fn header_line(out: &mut impl Write, command: &str, extra: serde_json::Value) -> Result<()> {
    let mut meta = json!({ "tool": "spectra", "version": VERSION, "command": command });
    if let (Some(m), serde_json::Value::Object(e)) = (meta.as_object_mut(), extra) {
        m.extend(e);
    }
    writeln!(out, "{}", json!({ "meta": meta }))?;
    Ok(())
}

#[derive(Serialize)]
struct SpectrumLine {
    line: usize,
    n: usize,
    m: usize,
    q: f64,
    residual: f64,
    /// Maximum degree pressure; absent with isolated vertices.
    bound_lemma24: Option<f64>,
    /// `2m/(n-1) + n - 2`; absent for a single vertex.
    bound_lemma25: Option<f64>,
}

pub fn spectrum(a: &InputArgs, header: bool) -> Result<Status> {
    let mut out = BufWriter::new(io::stdout().lock());
    if header {
        header_line(&mut out, "spectrum", json!({}))?;
    }
    let status = for_each_graph(a, |line, g| {
        let r = q_max(&g);
        let rec = SpectrumLine {
            line,
            n: g.order(),
            m: g.size(),
            q: r.q,
            residual: r.residual,
            bound_lemma24: max_degree_pressure(&g).ok().map(|(_, p)| p),
            bound_lemma25: das_bound(&g).ok(),
        };
        writeln!(out, "{}", serde_json::to_string(&rec)?)?;
        Ok(())
    })?;
    out.flush()?;
    Ok(status)
}

#[derive(Serialize)]
struct Found<'a> {
    pattern: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    embedding: Option<Vec<usize>>,
}

#[derive(Serialize)]
struct FreeLine<'a> {
    line: usize,
    graph6: String,
    free: bool,
    contains: Vec<Found<'a>>,
}

pub fn check_free(a: &CheckFreeArgs, header: bool) -> Result<Status> {
    let patterns: Vec<Pattern> = parse_patterns(&a.free)?;
    if patterns.is_empty() {
        return Err(usage("--free needs at least one pattern"));
    }
    let names: Vec<&str> = patterns.iter().map(Pattern::name).collect();
    let mut out = BufWriter::new(io::stdout().lock());
    if header {
        header_line(&mut out, "check-free", json!({ "free": names }))?;
    }
    let status = for_each_graph(&a.input, |line, g| {
        let contains: Vec<Found<'_>> = patterns
            .iter()
            .filter_map(|p| {
                contains_subgraph(&g, p).map(|e| Found {
                    pattern: p.name(),
                    embedding: a.witness.then_some(e.map),
                })
            })
            .collect();
        let rec = FreeLine {
            line,
            graph6: graph6::encode(&g),
            free: contains.is_empty(),
            contains,
        };
        writeln!(out, "{}", serde_json::to_string(&rec)?)?;
        Ok(())
    })?;
    out.flush()?;
    Ok(status)
}

fn print_json(doc: &impl Serialize) -> Result<()> {
    let mut out = io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, doc)?;
    writeln!(out)?;
    Ok(())
}

fn verdict(pass: bool) -> Status {
    if pass {
        Status::Success
    } else {
        Status::VerificationFailed
    }
}

pub fn verify(a: &VerifyArgs) -> Result<Status> {
    if let Some(t) = &a.theorem {
        let claim = match t.as_str() {
            "1.2" => ExtremalClaim::Theta122,
            "1.3" => ExtremalClaim::Theta123,
            "1.4" => ExtremalClaim::Theta122F5,
            other => {
                return Err(usage(format!(
                    "unknown theorem `{other}` (expected 1.2, 1.3 or 1.4)"
                )))
            }
        };
        let v = verify_claim(claim, a.n)?;
        print_json(&v)?;
        return Ok(verdict(v.pass != Some(false)));
    }
    let lemma = a
        .lemma
        .as_deref()
        .expect("clap requires --theorem or --lemma");
    let k = || a.k.ok_or_else(|| usage(format!("lemma {lemma} needs --k")));
    match lemma {
        "2.3" => {
            let r = verify_path_bound(a.n, k()?)?;
            print_json(&r)?;
            Ok(verdict(r.pass))
        }
        "2.4" => {
            let r = verify_degree_bounds(a.n)?;
            print_json(&r)?;
            Ok(verdict(r.pass))
        }
        "2.6" => {
            let r = verify_h_graph_max(a.n, k()?)?;
            print_json(&r)?;
            Ok(verdict(r.pass))
        }
        other => Err(usage(format!(
            "unknown lemma `{other}` (expected 2.3, 2.4 or 2.6)"
        ))),
    }
}

fn columns() -> Vec<String> {
    let mut cols = vec!["n".to_string()];
    for fam in ["friendship", "split_star2", "split_star_plus1"] {
        for v in ["closed", "q", "pressure", "das", "chain"] {
            cols.push(format!("{fam}_{v}"));
        }
    }
    cols.extend(
        [
            "friendship_sandwich",
            "split_star2_lower",
            "split_star_plus1_bracket",
            "cone_q",
            "cone_closed",
            "cone_below_split_star2",
        ]
        .map(String::from),
    );
    cols
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

fn record(r: &BoundsRow) -> Vec<String> {
    let mut rec = vec![r.n.to_string()];
    let fams: [&FamilyValues; 3] = [&r.friendship, &r.split_star2, &r.split_star_plus1];
    for f in fams {
        rec.extend([
            f.closed.to_string(),
            f.q.to_string(),
            f.pressure.to_string(),
            f.das.to_string(),
            f.chain_holds().to_string(),
        ]);
    }
    rec.extend([
        opt(r.friendship_sandwich),
        r.split_star2_lower.to_string(),
        opt(r.split_star_plus1_bracket),
        opt(r.cone_q),
        opt(r.cone_closed),
        opt(r.cone_below_split_star2),
    ]);
    rec
}

pub fn bounds_report(a: &BoundsArgs, header: bool) -> Result<Status> {
    let rows = bounds_table(a.n_min, a.n_max)?;
    let ok = rows.iter().all(BoundsRow::all_hold);
    let stdout = io::stdout().lock();
    match a.out {
        Format::Csv => {
            let mut out = BufWriter::new(stdout);
            if header {
                writeln!(
                    out,
                    "# spectra {VERSION} bounds-report n={}..={}",
                    a.n_min, a.n_max
                )?;
            }
            let mut w = csv::Writer::from_writer(out);
            w.write_record(columns())?;
            for r in &rows {
                w.write_record(record(r))?;
            }
            w.flush()?;
        }
        Format::Json => print_json(&rows)?,
        Format::Graph6 => return Err(usage("bounds-report writes csv or json")),
    }
    Ok(verdict(ok))
}
