#![allow(dead_code)]

use colorspan::geometry::{ColorGraph, ColoredPointSet};

/// Exhaustive extreme pair per color pair, row-major over `i < j`, as
/// `(point_a, point_b, squared distance)`. Ties go to the smallest
/// `(point_a, point_b)`.
pub fn scan_color_graph(set: &ColoredPointSet, farthest: bool) -> Vec<(usize, usize, f64)> {
    let t = set.num_colors();
    let mut best: Vec<Option<(f64, usize, usize)>> = vec![None; t * t];
    let pts = set.points();
    for a in 0..pts.len() {
        for b in 0..pts.len() {
            let (ca, cb) = (pts[a].color, pts[b].color);
            if ca >= cb {
                continue;
            }
            let dx = pts[a].x - pts[b].x;
            let dy = pts[a].y - pts[b].y;
            let sq = dx * dx + dy * dy;
            let slot = &mut best[ca * t + cb];
            let better = match *slot {
                None => true,
                Some((s, pa, pb)) => {
                    let strictly = if farthest { sq > s } else { sq < s };
                    strictly || (sq == s && (a, b) < (pa, pb))
                }
            };
            if better {
                *slot = Some((sq, a, b));
            }
        }
    }
    let mut out = Vec::new();
    for i in 0..t {
        for j in i + 1..t {
            let (sq, a, b) = best[i * t + j].expect("every color is present");
            out.push((a, b, sq));
        }
    }
    out
}

/// Number of disagreements between a color graph and the exhaustive scan,
/// comparing witnesses and weights exactly.
pub fn color_graph_mismatches(set: &ColoredPointSet, cg: &ColorGraph, farthest: bool) -> usize {
    let scan = scan_color_graph(set, farthest);
    cg.edges()
        .iter()
        .zip(&scan)
        .filter(|(w, &(a, b, sq))| w.point_a != a || w.point_b != b || w.distance != sq.sqrt())
        .count()
        + scan.len().abs_diff(cg.edges().len())
}

/// Every perfect pairing of `0..n` (lowest free vertex paired first).
pub fn pairings(n: usize) -> Vec<Vec<(usize, usize)>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for b in 1..n {
        let rest: Vec<usize> = (1..n).filter(|&x| x != b).collect();
        for sub in pairings(rest.len()) {
            let mut p = vec![(0, b)];
            p.extend(sub.iter().map(|&(x, y)| (rest[x], rest[y])));
            out.push(p);
        }
    }
    out
}
