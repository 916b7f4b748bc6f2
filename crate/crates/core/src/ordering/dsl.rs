//! A tiny notation for the displayed inequality chains.
//!
//! A display is a whitespace-separated token list:
//!
//! * a term `[p,q]` whose entries are affine in `n`, e.g. `[(n-6)/2,!(n+6)/2]`;
//!   a leading `!` marks a negative cycle;
//! * a run connector `..(dp,dq)..` between two terms, meaning "step from the
//!   left term by `(dp, dq)` until the right term";
//! * a join `>`, `=` between runs, or `>=` after a single head term (a
//!   dominance: the head against every member of the following run).

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{BicyclicConfig, Sign};

use super::Relation;

/// `(a n + b) / d` with `d > 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Affine {
    a: i64,
    b: i64,
    d: i64,
}

impl Affine {
    pub fn eval(self, n: i64) -> Option<i64> {
        let num = self.a * n + self.b;
        (num % self.d == 0).then_some(num / self.d)
    }

    fn parse(s: &str) -> Option<Self> {
        let (body, d) = match s.rsplit_once('/') {
            Some((body, d)) => (body, d.parse().ok()?),
            None => (s, 1),
        };
        if d <= 0 {
            return None;
        }
        let body = body.strip_prefix('(').map_or(Some(body), |b| b.strip_suffix(')'))?;
        let (mut a, mut b) = (0, 0);
        let mut rest = body;
        let mut sign = 1;
        if let Some(r) = rest.strip_prefix('-') {
            sign = -1;
            rest = r;
        }
        loop {
            let end = rest.find(['+', '-']).unwrap_or(rest.len());
            let piece = &rest[..end];
            if let Some(coef) = piece.strip_suffix('n') {
                a += sign * if coef.is_empty() { 1 } else { coef.parse::<i64>().ok()? };
            } else {
                b += sign * piece.parse::<i64>().ok()?;
            }
            if end == rest.len() {
                break;
            }
            sign = if rest.as_bytes()[end] == b'-' { -1 } else { 1 };
            rest = &rest[end + 1..];
        }
        Some(Self { a, b, d })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TermSpec {
    text: String,
    p: Affine,
    sp: Sign,
    q: Affine,
    sq: Sign,
}

impl TermSpec {
    fn parse(s: &str) -> Option<Self> {
        let inner = s.strip_prefix('[')?.strip_suffix(']')?;
        let (l, r) = inner.split_once(',')?;
        let side = |x: &str| match x.strip_prefix('!') {
            Some(rest) => Affine::parse(rest).map(|a| (a, Sign::Negative)),
            None => Affine::parse(x).map(|a| (a, Sign::Positive)),
        };
        let (p, sp) = side(l)?;
        let (q, sq) = side(r)?;
        Some(Self { text: s.to_string(), p, sp, q, sq })
    }

    fn eval(&self, n: i64) -> Option<(i64, i64)> {
        Some((self.p.eval(n)?, self.q.eval(n)?))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunSpec {
    start: TermSpec,
    /// `(step, end)`; `None` for a single displayed term.
    tail: Option<((i64, i64), TermSpec)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Shape {
    Sequence,
    Dominance,
}

/// A parsed display.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Display {
    pub shape: Shape,
    runs: Vec<RunSpec>,
    joins: Vec<Relation>,
}

fn parse_connector(tok: &str) -> Option<(i64, i64)> {
    let inner = tok.strip_prefix("..(")?.strip_suffix(")..")?;
    let (a, b) = inner.split_once(',')?;
    Some((a.parse().ok()?, b.parse().ok()?))
}

impl Display {
    pub fn parse(text: &str) -> std::result::Result<Self, String> {
        let tokens: Vec<&str> = text.split_whitespace().collect();
        let mut runs = Vec::new();
        let mut joins = Vec::new();
        let mut i = 0;
        let term_at = |i: usize| -> std::result::Result<TermSpec, String> {
            let tok = tokens.get(i).ok_or_else(|| format!("expected a term at token {i}"))?;
            TermSpec::parse(tok).ok_or_else(|| format!("bad term `{tok}`"))
        };
        loop {
            let start = term_at(i)?;
            i += 1;
            let mut tail = None;
            if let Some(step) = tokens.get(i).and_then(|t| parse_connector(t)) {
                tail = Some((step, term_at(i + 1)?));
                i += 2;
            }
            runs.push(RunSpec { start, tail });
            match tokens.get(i) {
                None => break,
                Some(&">") => joins.push(Relation::Greater),
                Some(&"=") => joins.push(Relation::Equal),
                Some(&">=") => joins.push(Relation::AtLeast),
                Some(tok) => return Err(format!("unexpected token `{tok}`")),
            }
            i += 1;
        }
        let dominance = joins.contains(&Relation::AtLeast);
        if dominance && (joins.len() != 1 || runs[0].tail.is_some()) {
            return Err("a dominance is `[head] >= run`".into());
        }
        Ok(Self {
            shape: if dominance { Shape::Dominance } else { Shape::Sequence },
            runs,
            joins,
        })
    }
}

/// A display evaluated at a concrete `n`.
#[derive(Debug, Clone, PartialEq)]
pub struct Materialized {
    pub configs: Vec<BicyclicConfig>,
    pub relations: Vec<Relation>,
    pub notes: Vec<String>,
}

fn inadmissible(n: i64, reason: String) -> Error {
    Error::Inadmissible { chain_id: String::new(), n: n as usize, reason }
}

/// Lattice points of one run, plus a note when the displayed end is off the
/// lattice or the run is empty.
fn expand(run: &RunSpec, n: i64, index: usize, notes: &mut Vec<String>) -> Result<Vec<(i64, i64)>> {
    let start = run
        .start
        .eval(n)
        .ok_or_else(|| inadmissible(n, format!("term {} is not integral", run.start.text)))?;
    let Some(((dp, dq), end_spec)) = &run.tail else {
        return Ok(vec![start]);
    };
    let end = end_spec
        .eval(n)
        .ok_or_else(|| inadmissible(n, format!("term {} is not integral", end_spec.text)))?;
    let (num, den) = if *dp != 0 { (end.0 - start.0, *dp) } else { (end.1 - start.1, *dq) };
    if den == 0 {
        return Err(inadmissible(n, format!("run {index} has a zero step")));
    }
    if num * den.signum() < 0 {
        notes.push(format!(
            "run {index} ({} .. {}) is empty at n = {n}",
            run.start.text, end_spec.text
        ));
        return Ok(Vec::new());
    }
    let steps = if den > 0 { num.div_euclid(den) } else { (-num).div_euclid(-den) };
    let mut points: Vec<(i64, i64)> =
        (0..=steps).map(|k| (start.0 + k * dp, start.1 + k * dq)).collect();
    if *points.last().unwrap() != end {
        let last = *points.last().unwrap();
        notes.push(format!(
            "run {index} end {} = [{},{}] is off the step lattice at n = {n}; expanded to [{},{}] and appended the displayed end",
            end_spec.text, end.0, end.1, last.0, last.1
        ));
        points.push(end);
    }
    Ok(points)
}

fn term_config(n: i64, spec: &TermSpec, (p, q): (i64, i64)) -> Result<BicyclicConfig> {
    if p < 2 || q < 2 || p + q > n {
        return Err(inadmissible(n, format!("term {} evaluates to [{p},{q}]", spec.text)));
    }
    Ok(BicyclicConfig::from_parts(n as usize, p as usize, spec.sp, q as usize, spec.sq)?.odd_sign_canonical())
}

fn run_configs(run: &RunSpec, n: i64, index: usize, notes: &mut Vec<String>) -> Result<Vec<BicyclicConfig>> {
    let points = expand(run, n, index, notes)?;
    let last = points.len().saturating_sub(1);
    points
        .into_iter()
        .enumerate()
        .map(|(k, pt)| {
            // points past the lattice end carry the end term's signs
            let spec = match &run.tail {
                Some((_, end)) if k == last && k > 0 => end,
                _ => &run.start,
            };
            term_config(n, spec, pt)
        })
        .collect()
}

impl Display {
    pub fn materialize(&self, n: usize) -> Result<Materialized> {
        let n = n as i64;
        let mut notes = Vec::new();
        match self.shape {
            Shape::Dominance => {
                let head = run_configs(&self.runs[0], n, 0, &mut notes)?;
                let members = run_configs(&self.runs[1], n, 1, &mut notes)?;
                let relations = vec![Relation::AtLeast; members.len()];
                let mut configs = head;
                configs.extend(members);
                Ok(Materialized { configs, relations, notes })
            }
            Shape::Sequence => {
                let mut configs: Vec<BicyclicConfig> = Vec::new();
                let mut relations = Vec::new();
                let mut pending: Option<Relation> = None;
                for (i, run) in self.runs.iter().enumerate() {
                    if i > 0 && !configs.is_empty() {
                        let join = self.joins[i - 1];
                        pending = Some(match pending {
                            Some(Relation::Greater) => Relation::Greater,
                            _ => join,
                        });
                    }
                    for (k, c) in run_configs(run, n, i, &mut notes)?.into_iter().enumerate() {
                        if !configs.is_empty() {
                            relations.push(if k == 0 {
                                pending.take().unwrap_or(Relation::Greater)
                            } else {
                                Relation::Greater
                            });
                        }
                        configs.push(c);
                    }
                }
                Ok(Materialized { configs, relations, notes })
            }
        }
    }
}

impl fmt::Display for Display {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, run) in self.runs.iter().enumerate() {
            if i > 0 {
                write!(f, " {} ", self.joins[i - 1].symbol())?;
            }
            write!(f, "{}", run.start.text)?;
            if let Some(((dp, dq), end)) = &run.tail {
                write!(f, " ..({dp},{dq}).. {}", end.text)?;
            }
        }
        Ok(())
    }
}
