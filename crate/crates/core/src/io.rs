//! Line-oriented text formats.
//!
//! Points file: header `n t`, then `n` lines `x y c`.
//!
//! Graph file: header `n m t`, then `n` lines holding one vertex color each
//! (omitted entirely when `t = 0`, meaning uncolored), then `m` lines
//! `u v [w]` with 0-based endpoints. A missing weight reads as 1.0; a graph
//! is weighted when at least one edge line carries a weight.
//!
//! Blank lines and lines starting with `#` are skipped. Reals are written
//! with Rust's shortest round-trip formatting, so `parse(serialize(x)) == x`.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{ColoredPoint, ColoredPointSet};
use crate::graph::{SimpleGraph, VertexColoredGraph};
use crate::hardness::Provenance;
use crate::matching::Matching;
use crate::solvers::{ColorSpanningMatching, Objective};

struct Lines<'a> {
    inner: std::iter::Enumerate<std::str::Lines<'a>>,
    last: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        Self {
            inner: text.lines().enumerate(),
            last: 0,
        }
    }

    /// Next meaningful line as (1-based number, whitespace-split fields).
    fn next_fields(&mut self, what: &str) -> Result<(usize, Vec<&'a str>)> {
        for (i, line) in self.inner.by_ref() {
            self.last = i + 1;
            let trimmed = line.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            return Ok((i + 1, trimmed.split_whitespace().collect()));
        }
        Err(Error::Parse {
            line: self.last + 1,
            message: format!("unexpected end of input, expected {what}"),
        })
    }

    fn expect_end(&mut self) -> Result<()> {
        match self.next_fields("") {
            Ok((line, _)) => Err(Error::Parse {
                line,
                message: "unexpected trailing content".into(),
            }),
            Err(_) => Ok(()),
        }
    }
}

fn field<T: FromStr>(line: usize, raw: &str, name: &str) -> Result<T> {
    raw.parse().map_err(|_| Error::Parse {
        line,
        message: format!("cannot parse {name} from {raw:?}"),
    })
}

fn arity(line: usize, fields: &[&str], allowed: &[usize], what: &str) -> Result<()> {
    if allowed.contains(&fields.len()) {
        Ok(())
    } else {
        Err(Error::Parse {
            line,
            message: format!("expected {what}, found {} fields", fields.len()),
        })
    }
}

fn at_line(line: usize, e: Error) -> Error {
    match e {
        Error::InvalidInput(m) | Error::InvalidInstance(m) => Error::Parse { line, message: m },
        other => other,
    }
}

pub fn parse_points(text: &str) -> Result<ColoredPointSet> {
    let mut lines = Lines::new(text);
    let (hl, header) = lines.next_fields("header `n t`")?;
    arity(hl, &header, &[2], "header `n t`")?;
    let n: usize = field(hl, header[0], "n")?;
    let t: usize = field(hl, header[1], "t")?;
    let mut points = Vec::with_capacity(n);
    for _ in 0..n {
        let (l, f) = lines.next_fields("point line `x y c`")?;
        arity(l, &f, &[3], "`x y c`")?;
        let p = ColoredPoint::new(
            field(l, f[0], "x")?,
            field(l, f[1], "y")?,
            field(l, f[2], "color")?,
        );
        if !p.is_finite() {
            return Err(Error::Parse {
                line: l,
                message: "coordinates must be finite".into(),
            });
        }
        if p.color >= t {
            return Err(Error::Parse {
                line: l,
                message: format!("color {} outside 0..{t}", p.color),
            });
        }
        points.push(p);
    }
    lines.expect_end()?;
    ColoredPointSet::new(points, t).map_err(|e| at_line(hl, e))
}

pub fn serialize_points(set: &ColoredPointSet) -> String {
    let mut out = format!("{} {}\n", set.len(), set.num_colors());
    for p in set.points() {
        writeln!(out, "{} {} {}", p.x, p.y, p.color).unwrap();
    }
    out
}

/// Raw contents of a graph file.
#[derive(Debug, Clone, PartialEq)]
pub struct GraphFile {
    pub num_vertices: usize,
    /// `None` for uncolored graphs (`t = 0`).
    pub colors: Option<Vec<usize>>,
    pub num_colors: usize,
    pub edges: Vec<(usize, usize)>,
    pub weights: Option<Vec<f64>>,
}

impl GraphFile {
    pub fn from_colored(g: &VertexColoredGraph) -> Self {
        Self {
            num_vertices: g.num_vertices(),
            colors: Some(g.colors().to_vec()),
            num_colors: g.num_colors(),
            edges: g.edges().to_vec(),
            weights: g.weights().map(<[f64]>::to_vec),
        }
    }

    pub fn from_simple(g: &SimpleGraph) -> Self {
        Self {
            num_vertices: g.num_vertices(),
            colors: None,
            num_colors: 0,
            edges: g.edges().to_vec(),
            weights: None,
        }
    }

    /// The colored graph; fails on uncolored files.
    pub fn to_colored(&self) -> Result<VertexColoredGraph> {
        let colors = self
            .colors
            .clone()
            .ok_or_else(|| Error::InvalidInput("graph file is uncolored (t = 0)".into()))?;
        match &self.weights {
            Some(ws) => VertexColoredGraph::with_weights(
                colors,
                self.num_colors,
                self.edges.iter().zip(ws).map(|(&(u, v), &w)| (u, v, w)),
            ),
            None => VertexColoredGraph::new(colors, self.num_colors, self.edges.iter().copied()),
        }
    }

    /// The underlying simple graph, ignoring colors and weights.
    pub fn to_simple(&self) -> Result<SimpleGraph> {
        SimpleGraph::new(self.num_vertices, self.edges.iter().copied())
    }
}

pub fn parse_graph(text: &str) -> Result<GraphFile> {
    let mut lines = Lines::new(text);
    let (hl, header) = lines.next_fields("header `n m t`")?;
    arity(hl, &header, &[3], "header `n m t`")?;
    let n: usize = field(hl, header[0], "n")?;
    let m: usize = field(hl, header[1], "m")?;
    let t: usize = field(hl, header[2], "t")?;
    let colors = if t == 0 {
        None
    } else {
        let mut colors = Vec::with_capacity(n);
        for _ in 0..n {
            let (l, f) = lines.next_fields("vertex color line")?;
            arity(l, &f, &[1], "a single color")?;
            let c: usize = field(l, f[0], "color")?;
            if c >= t {
                return Err(Error::Parse {
                    line: l,
                    message: format!("color {c} outside 0..{t}"),
                });
            }
            colors.push(c);
        }
        Some(colors)
    };
    let mut edges = Vec::with_capacity(m);
    let mut weights = Vec::with_capacity(m);
    let mut weighted = false;
    let mut seen = std::collections::HashSet::new();
    for _ in 0..m {
        let (l, f) = lines.next_fields("edge line `u v [w]`")?;
        arity(l, &f, &[2, 3], "`u v [w]`")?;
        let u: usize = field(l, f[0], "u")?;
        let v: usize = field(l, f[1], "v")?;
        let w: f64 = match f.get(2) {
            Some(raw) => {
                weighted = true;
                field(l, raw, "weight")?
            }
            None => 1.0,
        };
        let bad = if u == v {
            Some("self-loop".to_string())
        } else if u >= n || v >= n {
            Some(format!("endpoint outside 0..{n}"))
        } else if !seen.insert((u.min(v), u.max(v))) {
            Some("duplicate edge".to_string())
        } else if !w.is_finite() || w < 0.0 {
            Some(format!("weight {w} must be finite and non-negative"))
        } else {
            None
        };
        if let Some(message) = bad {
            return Err(Error::Parse { line: l, message });
        }
        edges.push((u, v));
        weights.push(w);
    }
    lines.expect_end()?;
    Ok(GraphFile {
        num_vertices: n,
        colors,
        num_colors: t,
        edges,
        weights: weighted.then_some(weights),
    })
}

pub fn serialize_graph(file: &GraphFile) -> String {
    let t = if file.colors.is_some() {
        file.num_colors
    } else {
        0
    };
    let mut out = format!("{} {} {}\n", file.num_vertices, file.edges.len(), t);
    if let Some(colors) = &file.colors {
        for c in colors {
            writeln!(out, "{c}").unwrap();
        }
    }
    for (k, &(u, v)) in file.edges.iter().enumerate() {
        match &file.weights {
            Some(ws) => writeln!(out, "{u} {v} {}", ws[k]).unwrap(),
            None => writeln!(out, "{u} {v}").unwrap(),
        }
    }
    out
}

/// Sidecar mapping output vertices of a reduction to their origin, one
/// `out_id src_id tag` line per vertex; gadget vertices have src `-`.
pub fn serialize_provenance(provenance: &[Provenance]) -> String {
    let mut out = String::new();
    for (id, p) in provenance.iter().enumerate() {
        let src = p
            .source()
            .map_or_else(|| "-".to_string(), |s| s.to_string());
        writeln!(out, "{id} {src} {}", p.tag()).unwrap();
    }
    out
}

pub fn parse_provenance(text: &str) -> Result<Vec<Provenance>> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let l = i + 1;
        let f: Vec<&str> = line.split_whitespace().collect();
        if f.is_empty() {
            continue;
        }
        arity(l, &f, &[3], "`out_id src_id tag`")?;
        let id: usize = field(l, f[0], "out_id")?;
        if id != out.len() {
            return Err(Error::Parse {
                line: l,
                message: format!("expected out_id {}, found {id}", out.len()),
            });
        }
        let src = if f[1] == "-" {
            None
        } else {
            Some(field::<usize>(l, f[1], "src_id")?)
        };
        let p = Provenance::from_parts(src, f[2]).ok_or_else(|| Error::Parse {
            line: l,
            message: format!("bad provenance {} {}", f[1], f[2]),
        })?;
        out.push(p);
    }
    Ok(out)
}

/// Outcome of a solve or oracle run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultRecord {
    pub objective: String,
    pub value: f64,
    pub total_weight: f64,
    pub min_edge_weight: f64,
    pub max_edge_weight: f64,
    pub pairs: Vec<(usize, usize)>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub time_ms: Option<f64>,
}

impl ResultRecord {
    pub fn from_spanning(objective: Objective, m: &ColorSpanningMatching) -> Self {
        Self {
            objective: objective.name().into(),
            value: m.value(objective),
            total_weight: m.total_weight,
            min_edge_weight: m.min_edge_weight,
            max_edge_weight: m.max_edge_weight,
            pairs: m.pairs.clone(),
            time_ms: None,
        }
    }

    /// Record for a graph matching; `pairs` holds vertex ids.
    pub fn from_matching(objective: Objective, m: &Matching) -> Self {
        Self {
            objective: objective.name().into(),
            value: objective.value_of(m.total_weight, m.min_edge_weight, m.max_edge_weight),
            total_weight: m.total_weight,
            min_edge_weight: m.min_edge_weight,
            max_edge_weight: m.max_edge_weight,
            pairs: m.edges.clone(),
            time_ms: None,
        }
    }

    /// `key=value` lines; `pairs` is a comma-separated list of `a-b`.
    pub fn to_text(&self) -> String {
        let pairs: Vec<String> = self.pairs.iter().map(|(a, b)| format!("{a}-{b}")).collect();
        let mut out = format!(
            "objective={}\nvalue={}\ntotal_weight={}\nmin_edge_weight={}\nmax_edge_weight={}\npairs={}\n",
            self.objective,
            self.value,
            self.total_weight,
            self.min_edge_weight,
            self.max_edge_weight,
            pairs.join(",")
        );
        if let Some(ms) = self.time_ms {
            writeln!(out, "time_ms={ms}").unwrap();
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("records serialize") + "\n"
    }

    /// Accepts both the key=value and the JSON form.
    pub fn parse(text: &str) -> Result<Self> {
        if text.trim_start().starts_with('{') {
            return serde_json::from_str(text).map_err(|e| Error::Parse {
                line: e.line(),
                message: e.to_string(),
            });
        }
        let mut objective = None;
        let mut nums: [Option<f64>; 4] = [None; 4];
        let mut pairs = None;
        let mut time_ms = None;
        for (i, line) in text.lines().enumerate() {
            let l = i + 1;
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let (key, val) = line.split_once('=').ok_or_else(|| Error::Parse {
                line: l,
                message: "expected key=value".into(),
            })?;
            match key {
                "objective" => objective = Some(val.to_string()),
                "value" => nums[0] = Some(field(l, val, key)?),
                "total_weight" => nums[1] = Some(field(l, val, key)?),
                "min_edge_weight" => nums[2] = Some(field(l, val, key)?),
                "max_edge_weight" => nums[3] = Some(field(l, val, key)?),
                "time_ms" => time_ms = Some(field(l, val, key)?),
                "pairs" => {
                    let mut list = Vec::new();
                    for item in val.split(',').filter(|s| !s.is_empty()) {
                        let (a, b) = item.split_once('-').ok_or_else(|| Error::Parse {
                            line: l,
                            message: format!("bad pair {item:?}"),
                        })?;
                        list.push((field(l, a, "pair endpoint")?, field(l, b, "pair endpoint")?));
                    }
                    pairs = Some(list);
                }
                _ => {}
            }
        }
        let missing = |k: &str| Error::Parse {
            line: 0,
            message: format!("missing key {k}"),
        };
        Ok(Self {
            objective: objective.ok_or_else(|| missing("objective"))?,
            value: nums[0].ok_or_else(|| missing("value"))?,
            total_weight: nums[1].ok_or_else(|| missing("total_weight"))?,
            min_edge_weight: nums[2].ok_or_else(|| missing("min_edge_weight"))?,
            max_edge_weight: nums[3].ok_or_else(|| missing("max_edge_weight"))?,
            pairs: pairs.ok_or_else(|| missing("pairs"))?,
            time_ms,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn points_round_trip() {
        let text = "3 2\n0.1 -2 0\n2.5 3.5 1\n7 7 1\n";
        let set = parse_points(text).unwrap();
        assert_eq!(set.len(), 3);
        assert_eq!(serialize_points(&set), text);
        assert_eq!(parse_points(&serialize_points(&set)).unwrap(), set);
    }

    #[test]
    fn points_errors_carry_line_numbers() {
        let cases = [
            ("2 2\n0 0 0\n1 1 2\n", 3),
            ("2 2\n0 0 0\n# note\n1 NaN 1\n", 4),
            ("2 2\n0 0 0\n", 3),
            ("2 2\n0 0 0\n1 x 1\n", 3),
            ("2 2\n0 0 0\n1 1 1\n5 5 0\n", 4),
        ];
        for (text, line) in cases {
            match parse_points(text) {
                Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?}: {other:?}"),
            }
        }
        // Missing color class: reported against the header.
        assert!(matches!(
            parse_points("2 3\n0 0 0\n1 1 1\n"),
            Err(Error::Parse { line: 1, .. })
        ));
    }

    #[test]
    fn graph_round_trip() {
        let text = "4 3 2\n0\n1\n1\n0\n0 1 2.5\n1 2\n3 2 0\n";
        let file = parse_graph(text).unwrap();
        assert_eq!(file.weights, Some(vec![2.5, 1.0, 0.0]));
        let again = parse_graph(&serialize_graph(&file)).unwrap();
        assert_eq!(again, file);
        let g = file.to_colored().unwrap();
        assert_eq!(g.edges(), &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(
            GraphFile::from_colored(&g).edges,
            vec![(0, 1), (1, 2), (2, 3)]
        );
    }

    #[test]
    fn uncolored_graph() {
        let file = parse_graph("3 2 0\n0 1\n1 2\n").unwrap();
        assert_eq!(file.colors, None);
        assert!(file.to_colored().is_err());
        assert_eq!(file.to_simple().unwrap().num_edges(), 2);
        assert_eq!(serialize_graph(&file), "3 2 0\n0 1\n1 2\n");
    }

    #[test]
    fn graph_errors() {
        for (text, line) in [
            ("2 1 0\n0 0\n", 2),
            ("2 2 0\n0 1\n1 0\n", 3),
            ("2 1 2\n0\n2\n0 1\n", 3),
            ("2 1 0\n0 1 -1\n", 2),
            ("2 1 0\n0 5\n", 2),
        ] {
            match parse_graph(text) {
                Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?}: {other:?}"),
            }
        }
    }

    #[test]
    fn record_round_trips() {
        let r = ResultRecord {
            objective: "minsum".into(),
            value: 1.8,
            total_weight: 1.8,
            min_edge_weight: 0.9,
            max_edge_weight: 0.9,
            pairs: vec![(0, 2), (1, 5)],
            time_ms: None,
        };
        assert!(!r.to_text().contains("time_ms"));
        assert_eq!(ResultRecord::parse(&r.to_text()).unwrap(), r);
        assert_eq!(ResultRecord::parse(&r.to_json()).unwrap(), r);
        let timed = ResultRecord {
            time_ms: Some(0.25),
            ..r
        };
        assert_eq!(ResultRecord::parse(&timed.to_text()).unwrap(), timed);
    }

    #[test]
    fn provenance_round_trip() {
        let p = vec![
            Provenance::Copy { source: 0, copy: 1 },
            Provenance::Original { source: 3 },
            Provenance::Gadget { index: 2 },
        ];
        let text = serialize_provenance(&p);
        assert_eq!(text, "0 0 copy:1\n1 3 orig\n2 - gadget:2\n");
        assert_eq!(parse_provenance(&text).unwrap(), p);
    }
}
