//! SVG drawing of a solved point instance.

use std::fmt::Write as _;

use crate::error::{invalid_input, Result};
use crate::geometry::ColoredPointSet;
use crate::io::ResultRecord;
use crate::solvers::{ColorSpanningMatching, Objective};

pub const PALETTE: [&str; 16] = [
    "#e6194b", "#3cb44b", "#4363d8", "#f58231", "#911eb4", "#42d4f4", "#f032e6", "#bfef45",
    "#fabed4", "#469990", "#dcbeff", "#9a6324", "#800000", "#aaffc3", "#808000", "#000075",
];

const SIZE: f64 = 600.0;
const MARGIN: f64 = 40.0;
const VALUE_TOLERANCE: f64 = 1e-9;

/// Checks that `record` describes a color-spanning matching of `set` whose
/// value recomputes within tolerance.
pub fn check_record(set: &ColoredPointSet, record: &ResultRecord) -> Result<ColorSpanningMatching> {
    if record.pairs.is_empty() {
        return Err(invalid_input("result has no matched pairs"));
    }
    if let Some(&(a, b)) = record
        .pairs
        .iter()
        .find(|&&(a, b)| a >= set.len() || b >= set.len())
    {
        return Err(invalid_input(format!(
            "pair ({a}, {b}) references a missing point"
        )));
    }
    let objective: Objective = record.objective.parse()?;
    let m = ColorSpanningMatching::from_pairs(set, record.pairs.clone());
    m.validate(set)
        .map_err(|e| invalid_input(format!("result does not match the points: {e}")))?;
    let value = m.value(objective);
    if (value - record.value).abs() > VALUE_TOLERANCE {
        return Err(invalid_input(format!(
            "result value {} does not recompute (got {value})",
            record.value
        )));
    }
    Ok(m)
}

/// Points as colored dots (palette cycling every 16 colors), matched pairs
/// as segments, and the objective value as a caption.
pub fn render_svg(set: &ColoredPointSet, record: &ResultRecord) -> Result<String> {
    let m = check_record(set, record)?;
    let (mut x0, mut y0, mut x1, mut y1) = (
        f64::INFINITY,
        f64::INFINITY,
        f64::NEG_INFINITY,
        f64::NEG_INFINITY,
    );
    for p in set.points() {
        x0 = x0.min(p.x);
        y0 = y0.min(p.y);
        x1 = x1.max(p.x);
        y1 = y1.max(p.y);
    }
    let span = (x1 - x0).max(y1 - y0);
    let scale = if span > 0.0 {
        (SIZE - 2.0 * MARGIN) / span
    } else {
        1.0
    };
    // SVG y grows downward.
    let map = |x: f64, y: f64| (MARGIN + (x - x0) * scale, SIZE - MARGIN - (y - y0) * scale);

    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    )
    .unwrap();
    writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#).unwrap();
    for &(a, b) in &m.pairs {
        let (pa, pb) = (set.point(a), set.point(b));
        let (ax, ay) = map(pa.x, pa.y);
        let (bx, by) = map(pb.x, pb.y);
        writeln!(
            out,
            r#"<line x1="{ax:.3}" y1="{ay:.3}" x2="{bx:.3}" y2="{by:.3}" stroke="black" stroke-width="2"/>"#
        )
        .unwrap();
    }
    for p in set.points() {
        let (x, y) = map(p.x, p.y);
        writeln!(
            out,
            r#"<circle cx="{x:.3}" cy="{y:.3}" r="5" fill="{}"/>"#,
            PALETTE[p.color % PALETTE.len()]
        )
        .unwrap();
    }
    writeln!(
        out,
        r#"<text x="{MARGIN}" y="24" font-family="monospace" font-size="16">{} = {}</text>"#,
        record.objective, record.value
    )
    .unwrap();
    out.push_str("</svg>\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::solvers::solve_maxmin;

    fn record_for(set: &ColoredPointSet) -> ResultRecord {
        ResultRecord::from_spanning(Objective::MaxMin, &solve_maxmin(set).unwrap())
    }

    #[test]
    fn figure1_structure() {
        let s = fixtures::figure1();
        let svg = render_svg(&s, &record_for(&s)).unwrap();
        assert_eq!(svg.matches("<line").count(), 2);
        assert_eq!(svg.matches("<circle").count(), 6);
        assert!(svg.contains("maxmin = "));
        assert_eq!(svg, render_svg(&s, &record_for(&s)).unwrap());
    }

    #[test]
    fn rejects_bad_records() {
        let s = fixtures::figure1();
        let good = record_for(&s);
        let empty = ResultRecord {
            pairs: vec![],
            ..good.clone()
        };
        assert!(render_svg(&s, &empty).is_err());
        let wrong_value = ResultRecord {
            value: good.value + 1.0,
            ..good.clone()
        };
        assert!(render_svg(&s, &wrong_value).is_err());
        let repeated_color = ResultRecord {
            pairs: vec![(0, 1), (2, 3)],
            ..good.clone()
        };
        assert!(render_svg(&s, &repeated_color).is_err());
        let out_of_range = ResultRecord {
            pairs: vec![(0, 10), (2, 4)],
            ..good
        };
        assert!(render_svg(&s, &out_of_range).is_err());
    }
}
