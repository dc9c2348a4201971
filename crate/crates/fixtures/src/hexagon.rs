//! The split Cayley hexagon of order 2, its thin subhexagons, and the
//! Hall–Janko graph built from them.

use std::collections::BTreeSet;

use anyhow::{ensure, Result};

use crate::graph::Graph;

pub const J2_2_ORDER: u64 = 1_209_600;

/// Points and lines of a rank-2 incidence geometry; `lines[l]` lists the
/// points on line `l`.
#[derive(Clone, Debug)]
pub struct Geometry {
    pub points: usize,
    pub lines: Vec<Vec<usize>>,
}

impl Geometry {
    pub fn dual(&self) -> Geometry {
        let mut lines = vec![Vec::new(); self.points];
        for (l, pts) in self.lines.iter().enumerate() {
            for &p in pts {
                lines[p].push(l);
            }
        }
        Geometry {
            points: self.lines.len(),
            lines,
        }
    }

    /// Bipartite incidence graph: points first, then lines.
    pub fn incidence_graph(&self) -> Graph {
        let mut g = Graph::new(self.points + self.lines.len());
        for (l, pts) in self.lines.iter().enumerate() {
            for &p in pts {
                g.add_edge(p, self.points + l);
            }
        }
        g
    }
}

fn singular(x: u32) -> bool {
    let b = |i: u32| x >> i & 1;
    (b(0) & b(4)) ^ (b(1) & b(5)) ^ (b(2) & b(6)) ^ b(3) == 0
}

/// Points: the 63 singular points of `X₀X₄ + X₁X₅ + X₂X₆ = X₃²` in
/// `PG(6,2)`. Lines: the quadric lines whose Grassmann coordinates satisfy
/// `p12=p34, p54=p32, p20=p35, p65=p30, p01=p36, p46=p31`.
pub fn split_cayley_hexagon() -> Result<Geometry> {
    let pts: Vec<u32> = (1..128).filter(|&x| singular(x)).collect();
    ensure!(pts.len() == 63, "{} singular points", pts.len());
    let index = |x: u32| pts.iter().position(|&y| y == x).expect("singular point");
    let pl = |x: u32, y: u32, i: u32, j: u32| (x >> i & y >> j ^ x >> j & y >> i) & 1;
    let mut lines = BTreeSet::new();
    for (a, &x) in pts.iter().enumerate() {
        for &y in &pts[a + 1..] {
            let z = x ^ y;
            if !singular(z) {
                continue;
            }
            let p = |i, j| pl(x, y, i, j);
            if p(1, 2) == p(3, 4)
                && p(5, 4) == p(3, 2)
                && p(2, 0) == p(3, 5)
                && p(6, 5) == p(3, 0)
                && p(0, 1) == p(3, 6)
                && p(4, 6) == p(3, 1)
            {
                let mut l = vec![index(x), index(y), index(z)];
                l.sort_unstable();
                lines.insert(l);
            }
        }
    }
    let geo = Geometry {
        points: 63,
        lines: lines.into_iter().collect(),
    };
    ensure!(is_generalized_hexagon_of_order_2(&geo), "not a generalized hexagon of order 2");
    Ok(geo)
}

/// Every vertex of the incidence graph sees `1, 3, 6, 12, 24, 48, 32`
/// vertices at distances `0..=6`: tree-like growth to distance 5 rules out
/// cycles shorter than 12, and the diameter is 6.
pub fn is_generalized_hexagon_of_order_2(geo: &Geometry) -> bool {
    let g = geo.incidence_graph();
    geo.points == 63
        && geo.lines.len() == 63
        && (0..g.len()).all(|v| {
            let mut counts = [0usize; 7];
            for d in g.distances(v) {
                if d > 6 {
                    return false;
                }
                counts[d] += 1;
            }
            counts == [1, 3, 6, 12, 24, 48, 32]
        })
}

/// Point sets meeting every line in 0 or 2 points, of the given size.
pub fn even_sets(geo: &Geometry, size: usize) -> Vec<Vec<usize>> {
    let mut found = BTreeSet::new();
    for start in 0..geo.points {
        let mut state = vec![None; geo.points];
        state[start] = Some(true);
        extend(geo, &mut state, size, &mut found);
    }
    found.into_iter().collect()
}

fn extend(
    geo: &Geometry,
    state: &mut [Option<bool>],
    size: usize,
    found: &mut BTreeSet<Vec<usize>>,
) {
    // Propagate forced moves; branch on the first line with one chosen point.
    loop {
        let mut changed = false;
        let mut branch = None;
        for pts in &geo.lines {
            let ins = pts.iter().filter(|&&p| state[p] == Some(true)).count();
            let open: Vec<usize> = pts.iter().copied().filter(|&p| state[p].is_none()).collect();
            match (ins, open.len()) {
                (3, _) => return,
                (2, 1) => {
                    state[open[0]] = Some(false);
                    changed = true;
                }
                (1, 0) => return,
                (1, 1) => {
                    state[open[0]] = Some(true);
                    changed = true;
                }
                (1, 2) if branch.is_none() => branch = Some((open[0], open[1])),
                _ => {}
            }
        }
        if state.iter().filter(|s| **s == Some(true)).count() > size {
            return;
        }
        if changed {
            continue;
        }
        match branch {
            None => {
                let set: Vec<usize> = (0..geo.points).filter(|&p| state[p] == Some(true)).collect();
                if set.len() == size {
                    found.insert(set);
                }
                return;
            }
            Some((a, b)) => {
                for (x, y) in [(a, b), (b, a)] {
                    let mut next = state.to_vec();
                    next[x] = Some(true);
                    next[y] = Some(false);
                    extend(geo, &mut next, size, found);
                }
                return;
            }
        }
    }
}

/// Vertex `0` is `∞`, then 36 thin subhexagons, then the 63 elements of the
/// geometry in which the subhexagons are 14-point even sets; `∞` sees the
/// subhexagons, a subhexagon sees the 21 elements it spans (elements of the
/// dual lying on two of its points), two elements are adjacent at distance 4
/// in the incidence graph, and subhexagons are adjacent by the intersection
/// size that makes the graph strongly regular with parameters (36, 14, 12).
pub fn hall_janko_graph() -> Result<Graph> {
    let hex = split_cayley_hexagon()?;
    let mut geo = hex.clone();
    let mut subs = even_sets(&geo, 14);
    if subs.is_empty() {
        geo = hex.dual();
        subs = even_sets(&geo, 14);
    }
    ensure!(subs.len() == 36, "{} thin subhexagons", subs.len());
    // In `geo.dual()`, the points are the lines of `geo`.
    let spanned: Vec<Vec<usize>> = subs
        .iter()
        .map(|s| {
            (0..geo.lines.len())
                .filter(|&l| geo.lines[l].iter().filter(|p| s.contains(p)).count() == 2)
                .collect()
        })
        .collect();
    ensure!(spanned.iter().all(|s| s.len() == 21), "subhexagon without 21 lines");
    let lines_graph = geo.dual().incidence_graph();
    let dist: Vec<Vec<usize>> = (0..geo.lines.len()).map(|l| lines_graph.distances(l)).collect();
    let sizes: BTreeSet<usize> = (0..36)
        .flat_map(|a| {
            let subs = &subs;
            (a + 1..36).map(move |b| subs[a].iter().filter(|p| subs[b].contains(p)).count())
        })
        .collect();
    for k in sizes {
        let mut g = Graph::new(100);
        for a in 0..36 {
            g.add_edge(0, 1 + a);
            for &l in &spanned[a] {
                g.add_edge(1 + a, 37 + l);
            }
            for b in a + 1..36 {
                if subs[a].iter().filter(|p| subs[b].contains(p)).count() == k {
                    g.add_edge(1 + a, 1 + b);
                }
            }
        }
        for (l, d) in dist.iter().enumerate() {
            for (m, _) in d.iter().enumerate().skip(l + 1).filter(|(_, &x)| x == 4) {
                g.add_edge(37 + l, 37 + m);
            }
        }
        if g.srg_parameters() == Some((36, 14, 12)) {
            return Ok(g);
        }
    }
    anyhow::bail!("no intersection rule yields SRG(100,36,14,12)")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hexagon_counts() {
        let h = split_cayley_hexagon().unwrap();
        assert!(h.lines.iter().all(|l| l.len() == 3));
        let mut per_point = vec![0; 63];
        for l in &h.lines {
            for &p in l {
                per_point[p] += 1;
            }
        }
        assert!(per_point.iter().all(|&c| c == 3));
    }

    #[test]
    fn hall_janko_parameters() {
        let g = hall_janko_graph().unwrap();
        assert_eq!(g.srg_parameters(), Some((36, 14, 12)));
    }
}
