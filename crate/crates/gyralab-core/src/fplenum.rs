//! Enumeration of fully-packed-loop configurations on dihedral domains with
//! alternating boundary conditions, together with the combinatorial data
//! attached to a configuration: refinement position, boundary sector, link
//! pattern of the black paths, loop counts, and tile type above the
//! refinement position.

use std::collections::VecDeque;

use crate::domains::{DihedralDomain, Puncture, VertexKind, SLOT_E, SLOT_W};
use crate::linkpat::{Pattern, PatternKind};

/// An edge 2-colouring of a domain; `colors[e]` is true when edge `e` is
/// black. Every internal vertex sees two black and two white edges, every
/// degree-2 vertex one of each, and the boundary colours alternate.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FplConfig {
    pub colors: Vec<bool>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sector {
    /// External edge with label 1 is black.
    Plus,
    /// External edge with label 1 is white.
    Minus,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Tile {
    A,
    B,
    C,
}

impl FplConfig {
    pub fn sector(&self, dom: &DihedralDomain) -> Sector {
        if self.colors[dom.externals[0]] {
            Sector::Plus
        } else {
            Sector::Minus
        }
    }

    /// Global colour swap; a bijection between the two sectors.
    pub fn sigma(&self) -> FplConfig {
        FplConfig {
            colors: self.colors.iter().map(|&c| !c).collect(),
        }
    }
}

fn vertex_needs_black(dom: &DihedralDomain, v: usize, colors: &[Option<bool>]) -> u8 {
    match dom.verts[v].kind {
        VertexKind::Grid => 2,
        VertexKind::Split => 1,
        VertexKind::Leaf => {
            let e = dom.verts[v].slots.iter().flatten().next().copied().unwrap();
            match colors[e] {
                Some(true) => 1,
                _ => 0,
            }
        }
    }
}

struct Search<'a> {
    dom: &'a DihedralDomain,
    colors: Vec<Option<bool>>,
    black: Vec<u8>,
    white: Vec<u8>,
    need_black: Vec<u8>,
    need_white: Vec<u8>,
    out: Vec<FplConfig>,
}

impl<'a> Search<'a> {
    /// Assign `e = c` and run unit propagation. Returns the trail of edges
    /// set (for undo), or None on contradiction (trail still returned for
    /// undo via the Err payload).
    fn assign(&mut self, e0: usize, c0: bool, trail: &mut Vec<usize>) -> bool {
        let mut queue = VecDeque::new();
        queue.push_back((e0, c0));
        while let Some((e, c)) = queue.pop_front() {
            match self.colors[e] {
                Some(x) => {
                    if x != c {
                        return false;
                    }
                    continue;
                }
                None => {}
            }
            self.colors[e] = Some(c);
            trail.push(e);
            let ed = &self.dom.edges[e];
            // count both endpoints before any contradiction exit, so that
            // undo (which always reverses both) stays balanced
            for &v in &[ed.u, ed.v] {
                if c {
                    self.black[v] += 1;
                } else {
                    self.white[v] += 1;
                }
            }
            let (eu, ev) = (ed.u, ed.v);
            for &v in &[eu, ev] {
                if self.black[v] > self.need_black[v] || self.white[v] > self.need_white[v] {
                    return false;
                }
                // saturation forces the remaining edges at v
                let forced = if self.black[v] == self.need_black[v] {
                    Some(false)
                } else if self.white[v] == self.need_white[v] {
                    Some(true)
                } else {
                    None
                };
                if let Some(fc) = forced {
                    for s in 0..4 {
                        if let Some(f) = self.dom.verts[v].slots[s] {
                            if self.colors[f].is_none() {
                                queue.push_back((f, fc));
                            }
                        }
                    }
                }
            }
        }
        true
    }

    fn undo(&mut self, trail: &[usize]) {
        for &e in trail {
            let c = self.colors[e].take().unwrap();
            let ed = &self.dom.edges[e];
            for &v in &[ed.u, ed.v] {
                if c {
                    self.black[v] -= 1;
                } else {
                    self.white[v] -= 1;
                }
            }
        }
    }

    fn dfs(&mut self, from: usize) {
        let ne = self.dom.edges.len();
        let mut e = from;
        while e < ne && self.colors[e].is_some() {
            e += 1;
        }
        if e == ne {
            let colors: Vec<bool> = self.colors.iter().map(|c| c.unwrap()).collect();
            self.out.push(FplConfig { colors });
            return;
        }
        for &c in &[true, false] {
            let mut trail = Vec::new();
            if self.assign(e, c, &mut trail) {
                self.dfs(e + 1);
            }
            self.undo(&trail);
        }
    }
}

/// All configurations in the given boundary sector, in a deterministic order.
pub fn enumerate_sector(dom: &DihedralDomain, sector: Sector) -> Vec<FplConfig> {
    let nv = dom.verts.len();
    let ne = dom.edges.len();
    let mut colors: Vec<Option<bool>> = vec![None; ne];
    for (i, &e) in dom.externals.iter().enumerate() {
        let label = i + 1;
        let black = match sector {
            Sector::Plus => label % 2 == 1,
            Sector::Minus => label % 2 == 0,
        };
        colors[e] = Some(black);
    }
    let need_black: Vec<u8> = (0..nv).map(|v| vertex_needs_black(dom, v, &colors)).collect();
    let need_white: Vec<u8> = (0..nv)
        .map(|v| dom.verts[v].degree() as u8 - need_black[v])
        .collect();
    let mut s = Search {
        dom,
        colors: vec![None; ne],
        black: vec![0; nv],
        white: vec![0; nv],
        need_black,
        need_white,
        out: Vec::new(),
    };
    // seed the fixed boundary colours through the propagating assigner
    let mut trail = Vec::new();
    let mut ok = true;
    for e in 0..ne {
        if let Some(c) = colors[e] {
            if !s.assign(e, c, &mut trail) {
                ok = false;
                break;
            }
        }
    }
    if ok {
        s.dfs(0);
    }
    s.out
}

/// Both sectors, `Plus` block first.
pub fn enumerate_all(dom: &DihedralDomain) -> Vec<FplConfig> {
    let mut v = enumerate_sector(dom, Sector::Plus);
    v.extend(enumerate_sector(dom, Sector::Minus));
    v
}

/// Position (1-based) of the unique straight-line tile on the reference side.
pub fn refinement_position(dom: &DihedralDomain, cfg: &FplConfig) -> usize {
    let mut found = None;
    for (k, &v) in dom.ref_side_vertices.iter().enumerate() {
        let slots = &dom.verts[v].slots;
        let (e, w) = (slots[SLOT_E].unwrap(), slots[SLOT_W].unwrap());
        if cfg.colors[e] == cfg.colors[w] {
            assert!(found.is_none(), "two straight tiles on the reference side");
            found = Some(k + 1);
        }
    }
    found.expect("no straight tile on the reference side")
}

/// True when the external edge at the refinement position is black.
pub fn is_b(dom: &DihedralDomain, cfg: &FplConfig) -> bool {
    let h = refinement_position(dom, cfg);
    cfg.colors[dom.ref_side_externals[h - 1]]
}

/// Tile type at the vertex immediately above the refinement position, when
/// that vertex exists and has degree 4.
pub fn d_tile(dom: &DihedralDomain, cfg: &FplConfig) -> Option<Tile> {
    let h = refinement_position(dom, cfg);
    let v = dom.ref_side_vertices[h - 1];
    let arrive = dom.ref_side_arrive[h - 1];
    let (s_up, s_fw) = ((arrive + 3) % 4, (arrive + 2) % 4);
    let above_edge = dom.verts[v].slots[s_up]?;
    let w = dom.edges[above_edge].other(v);
    if dom.verts[w].kind != VertexKind::Grid || dom.verts[w].degree() != 4 {
        return None;
    }
    let col = |s: usize| cfg.colors[dom.verts[w].slots[s].unwrap()];
    Some(if col(s_fw) == col(arrive) {
        Tile::C
    } else if col(s_fw) == col(s_up) {
        Tile::A
    } else {
        Tile::B
    })
}

/// The open black paths of a configuration: the matched pairs of black
/// external labels, the optional defect label (a path ending at the degree-2
/// vertex), and the edge sets of the open paths.
pub struct BlackPaths {
    /// (label, label) pairs, and the path's edge ids.
    pub pairs: Vec<(usize, usize, Vec<usize>)>,
    /// Black external label whose path ends at the degree-2 vertex.
    pub defect_label: Option<usize>,
    /// Edges of the defect path, when present.
    pub defect_edges: Vec<usize>,
}

fn walk_black(dom: &DihedralDomain, cfg: &FplConfig, start_ext: usize) -> (usize, Vec<usize>) {
    // returns (final vertex, edges traversed); starts along the external edge
    let mut edges = vec![start_ext];
    let mut v = dom.external_anchor(start_ext);
    let mut prev = start_ext;
    loop {
        match dom.verts[v].kind {
            VertexKind::Leaf | VertexKind::Split => return (v, edges),
            VertexKind::Grid => {}
        }
        let next = dom.verts[v]
            .slots
            .iter()
            .flatten()
            .copied()
            .find(|&e| e != prev && cfg.colors[e])
            .expect("black degree 2 at internal vertex");
        edges.push(next);
        v = dom.edges[next].other(v);
        prev = next;
    }
}

pub fn black_paths(dom: &DihedralDomain, cfg: &FplConfig) -> BlackPaths {
    let mut pairs = Vec::new();
    let mut defect_label = None;
    let mut defect_edges = Vec::new();
    let mut done = vec![false; dom.externals.len()];
    for (i, &e) in dom.externals.iter().enumerate() {
        if done[i] || !cfg.colors[e] {
            continue;
        }
        done[i] = true;
        let (end_v, edges) = walk_black(dom, cfg, e);
        match dom.verts[end_v].kind {
            VertexKind::Split => {
                assert!(defect_label.is_none(), "two defect paths");
                defect_label = Some(i + 1);
                defect_edges = edges;
            }
            VertexKind::Leaf => {
                let end_ext = dom.verts[end_v].slots.iter().flatten().next().copied().unwrap();
                let j = dom.label_of_external(end_ext) - 1;
                assert!(!done[j] && j != i, "path endpoints inconsistent");
                done[j] = true;
                pairs.push((i + 1, j + 1, edges));
            }
            VertexKind::Grid => unreachable!(),
        }
    }
    BlackPaths {
        pairs,
        defect_label,
        defect_edges,
    }
}

/// Disjoint-set over face ids.
struct Dsu(Vec<usize>);
impl Dsu {
    fn new(n: usize) -> Self {
        Dsu((0..n).collect())
    }
    fn find(&mut self, x: usize) -> usize {
        if self.0[x] != x {
            let r = self.find(self.0[x]);
            self.0[x] = r;
        }
        self.0[x]
    }
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        self.0[ra] = rb;
    }
}

/// Link pattern of the black paths, with points labelled counter-clockwise
/// starting from the black external edge with label `v_label`.
pub fn link_pattern(dom: &DihedralDomain, cfg: &FplConfig, v_label: usize) -> Pattern {
    let paths = black_paths(dom, cfg);
    let blacks: Vec<usize> = (1..=dom.externals.len())
        .filter(|&l| cfg.colors[dom.external_by_label(l)])
        .collect();
    let m = blacks.len();
    let pos0 = blacks
        .iter()
        .position(|&l| l == v_label)
        .expect("base label is not a black external");
    let point = |label: usize| -> usize {
        let idx = blacks.iter().position(|&l| l == label).unwrap();
        (idx + m - pos0) % m
    };
    let mut pmatch: Vec<usize> = (0..m).collect();
    for &(a, b, _) in &paths.pairs {
        let (pa, pb) = (point(a), point(b));
        pmatch[pa] = pb;
        pmatch[pb] = pa;
    }
    match dom.lp_kind {
        PatternKind::Plain => Pattern::plain(pmatch).expect("traced pattern invalid"),
        PatternKind::PuncturedOdd => {
            let d = point(paths.defect_label.expect("missing defect path"));
            Pattern::punctured_odd(pmatch, d).expect("traced pattern invalid")
        }
        PatternKind::PuncturedEven => {
            let gap = puncture_gap(dom, cfg, &paths, &point);
            Pattern::punctured_even(pmatch, gap).expect("traced pattern invalid")
        }
    }
}

/// The boundary gap (between consecutive black points) of the region
/// containing the puncture face, for an even-punctured domain.
fn puncture_gap(
    dom: &DihedralDomain,
    cfg: &FplConfig,
    paths: &BlackPaths,
    point: &dyn Fn(usize) -> usize,
) -> usize {
    let pf = match dom.puncture {
        Puncture::Face(f) => f,
        _ => panic!("no puncture face"),
    };
    let nf = dom.faces.len();
    let mut blocked = vec![false; dom.edges.len()];
    for (_, _, es) in &paths.pairs {
        for &e in es {
            blocked[e] = true;
        }
    }
    let mut dsu = Dsu::new(nf);
    for e in 0..dom.edges.len() {
        if blocked[e] || dom.edges[e].external {
            continue;
        }
        let [f1, f2] = dom.edge_faces[e];
        if f1 == dom.outer_face || f2 == dom.outer_face {
            continue;
        }
        dsu.union(f1, f2);
    }
    let m = (1..=dom.externals.len())
        .filter(|&l| cfg.colors[dom.external_by_label(l)])
        .count();
    // walk the outer cycle: track the last black spur passed, assign the
    // internal faces across boundary edges to the current gap
    let outer = &dom.faces[dom.outer_face];
    // traversal orientation: collect black spur points in cycle order
    let mut spur_points = Vec::new();
    for &(e, _) in &outer.halfedges {
        if dom.edges[e].external && cfg.colors[e] {
            let p = point(dom.label_of_external(e));
            if spur_points.last() != Some(&p) {
                spur_points.push(p);
            }
        }
    }
    spur_points.dedup();
    if spur_points.first() == spur_points.last() && spur_points.len() > 1 {
        spur_points.pop();
    }
    assert_eq!(spur_points.len(), m);
    // counter-clockwise iff successor of point p in the traversal is p+1
    let i0 = spur_points.iter().position(|&p| p == 0).unwrap();
    let ccw = spur_points[(i0 + 1) % m] == 1 % m;

    // which open path, if any, runs along each edge
    let mut path_of_edge: Vec<Option<usize>> = vec![None; dom.edges.len()];
    for (i, (_, _, es)) in paths.pairs.iter().enumerate() {
        for &e in es {
            path_of_edge[e] = Some(i);
        }
    }
    let mut region_gap: Vec<Option<usize>> = vec![None; nf];
    let mut last_point: Option<usize> = None;
    // two passes so that the stretch before the first spur inherits the
    // wrap-around gap
    for pass in 0..2 {
        for &(e, fwd) in &outer.halfedges {
            if dom.edges[e].external {
                if cfg.colors[e] {
                    last_point = Some(point(dom.label_of_external(e)));
                }
                continue;
            }
            // crossing an open-path edge that runs along the boundary lands
            // just outside that path's arc; crossing a free boundary edge
            // lands in the current gap
            let loc = match last_point {
                Some(p) => {
                    if ccw {
                        p
                    } else {
                        (p + m - 1) % m
                    }
                }
                None => continue,
            };
            let gap = if let Some(pi) = path_of_edge[e] {
                let (a, b, _) = &paths.pairs[pi];
                let (x, y) = (point(*a).min(point(*b)), point(*a).max(point(*b)));
                // crossing the path from outside its arc lands inside, and
                // vice versa
                if x <= loc && loc < y {
                    y
                } else {
                    x
                }
            } else {
                loc
            };
            let [f1, f2] = dom.edge_faces[e];
            let inner = if fwd { f2 } else { f1 };
            let inner = if inner == dom.outer_face {
                if f1 == dom.outer_face {
                    f2
                } else {
                    f1
                }
            } else {
                inner
            };
            let r = dsu.find(inner);
            if region_gap[r].is_none() {
                region_gap[r] = Some(gap);
            }
        }
        if pass == 0 && last_point.is_none() {
            break;
        }
    }
    region_gap[dsu.find(pf)].expect("puncture region not adjacent to any gap")
}

/// Closed-loop counts of a configuration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LoopStats {
    pub black_loops: usize,
    pub white_loops: usize,
    /// Closed loops (of either colour) encircling the puncture.
    pub puncture_loops: usize,
}

fn color_cycles(dom: &DihedralDomain, cfg: &FplConfig, color: bool) -> Vec<Vec<usize>> {
    let mut used = vec![false; dom.edges.len()];
    // mark path components (starting at leaves and the split vertex) as used
    for v in 0..dom.verts.len() {
        if dom.verts[v].kind == VertexKind::Grid {
            continue;
        }
        for e in dom.verts[v].slots.iter().flatten().copied() {
            if cfg.colors[e] == color && !used[e] {
                // walk to the other end
                let mut prev = e;
                let mut x = dom.edges[e].other(v);
                used[e] = true;
                while dom.verts[x].kind == VertexKind::Grid {
                    let next = dom.verts[x]
                        .slots
                        .iter()
                        .flatten()
                        .copied()
                        .find(|&f| f != prev && cfg.colors[f] == color)
                        .unwrap();
                    used[next] = true;
                    x = dom.edges[next].other(x);
                    prev = next;
                }
            }
        }
    }
    let mut cycles = Vec::new();
    for e0 in 0..dom.edges.len() {
        if used[e0] || cfg.colors[e0] != color || dom.edges[e0].external {
            continue;
        }
        let mut cyc = vec![e0];
        used[e0] = true;
        let start = dom.edges[e0].u;
        let mut prev = e0;
        let mut x = dom.edges[e0].v;
        while x != start {
            let next = dom.verts[x]
                .slots
                .iter()
                .flatten()
                .copied()
                .find(|&f| f != prev && cfg.colors[f] == color)
                .unwrap();
            used[next] = true;
            cyc.push(next);
            x = dom.edges[next].other(x);
            prev = next;
        }
        cycles.push(cyc);
    }
    cycles
}

/// True when the loop (an edge set) separates the puncture from the outer
/// face.
fn loop_encircles(dom: &DihedralDomain, loop_edges: &[usize], pface: usize) -> bool {
    let mut in_loop = vec![false; dom.edges.len()];
    for &e in loop_edges {
        in_loop[e] = true;
    }
    let mut seen = vec![false; dom.faces.len()];
    let mut q = VecDeque::new();
    seen[pface] = true;
    q.push_back(pface);
    while let Some(f) = q.pop_front() {
        if f == dom.outer_face {
            return false;
        }
        for &(e, _) in &dom.faces[f].halfedges {
            if in_loop[e] {
                continue;
            }
            let [f1, f2] = dom.edge_faces[e];
            let g = if f1 == f { f2 } else { f1 };
            if !seen[g] {
                seen[g] = true;
                q.push_back(g);
            }
        }
    }
    true
}

pub fn loop_stats(dom: &DihedralDomain, cfg: &FplConfig) -> LoopStats {
    let bl = color_cycles(dom, cfg, true);
    let wl = color_cycles(dom, cfg, false);
    let pface = match dom.puncture {
        Puncture::None => None,
        Puncture::Face(f) => Some(f),
        Puncture::Vertex(v) => {
            // any internal face incident to the degree-2 vertex
            (0..dom.faces.len()).find(|&f| {
                f != dom.outer_face
                    && dom.faces[f]
                        .halfedges
                        .iter()
                        .any(|&(e, _)| dom.edges[e].u == v || dom.edges[e].v == v)
            })
        }
    };
    let mut punctured = 0;
    if let Some(pf) = pface {
        for cyc in bl.iter().chain(wl.iter()) {
            if loop_encircles(dom, cyc, pf) {
                punctured += 1;
            }
        }
    }
    LoopStats {
        black_loops: bl.len(),
        white_loops: wl.len(),
        puncture_loops: punctured,
    }
}

/// Histogram of refinement positions (index k = position k+1) over a set of
/// configurations.
pub fn refinement_histogram(dom: &DihedralDomain, cfgs: &[FplConfig]) -> Vec<u64> {
    let mut h = vec![0u64; dom.l_side];
    for c in cfgs {
        h[refinement_position(dom, c) - 1] += 1;
    }
    h
}

/// Minimal SVG rendering: black edges thick, white edges thin grey.
pub fn config_svg(dom: &DihedralDomain, cfg: &FplConfig) -> String {
    let scale = 30.0;
    let (mut maxx, mut maxy) = (0.0f64, 0.0f64);
    for v in &dom.verts {
        maxx = maxx.max(v.pos.0);
        maxy = maxy.max(v.pos.1);
    }
    let tx = |x: f64| (x + 1.0) * scale;
    let ty = |y: f64| (maxy + 1.0 - y) * scale;
    let mut s = format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\">\n",
        ((maxx + 2.0) * scale) as i64,
        ((maxy + 2.0) * scale) as i64
    );
    for (i, e) in dom.edges.iter().enumerate() {
        let (p, q) = (dom.verts[e.u].pos, dom.verts[e.v].pos);
        let (color, width) = if cfg.colors[i] {
            ("black", 3.0)
        } else {
            ("#bbbbbb", 1.0)
        };
        s.push_str(&format!(
            "<line x1=\"{:.1}\" y1=\"{:.1}\" x2=\"{:.1}\" y2=\"{:.1}\" stroke=\"{}\" stroke-width=\"{}\"/>\n",
            tx(p.0), ty(p.1), tx(q.0), ty(q.1), color, width
        ));
    }
    for v in &dom.verts {
        if v.kind == VertexKind::Grid {
            s.push_str(&format!(
                "<circle cx=\"{:.1}\" cy=\"{:.1}\" r=\"2\" fill=\"#444444\"/>\n",
                tx(v.pos.0),
                ty(v.pos.1)
            ));
        }
    }
    s.push_str("</svg>\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domains::{build_domain, DomainSpec, SLOT_N};

    fn square(n: usize) -> DihedralDomain {
        build_domain(&DomainSpec::first(n, n, [0, 0, 0, 0])).unwrap()
    }

    #[test]
    fn square_counts() {
        let expect = [1usize, 2, 7, 42, 429];
        for n in 1..=5 {
            let dom = square(n);
            let plus = enumerate_sector(&dom, Sector::Plus);
            let minus = enumerate_sector(&dom, Sector::Minus);
            assert_eq!(plus.len(), expect[n - 1], "n = {n}");
            assert_eq!(minus.len(), expect[n - 1], "n = {n}");
            let b = enumerate_all(&dom)
                .iter()
                .filter(|c| is_b(&dom, c))
                .count();
            assert_eq!(b, expect[n - 1], "n = {n} b-sector");
        }
    }

    #[test]
    fn rectangle_has_no_configurations() {
        let dom = build_domain(&DomainSpec::first(4, 3, [0, 0, 0, 0])).unwrap();
        assert_eq!(enumerate_all(&dom).len(), 0);
    }

    #[test]
    fn square_histograms() {
        let dom = square(3);
        let all = enumerate_all(&dom);
        let b: Vec<FplConfig> = all.iter().filter(|c| is_b(&dom, c)).cloned().collect();
        assert_eq!(refinement_histogram(&dom, &b), vec![2, 3, 2]);
        let plus = enumerate_sector(&dom, Sector::Plus);
        assert_eq!(refinement_histogram(&dom, &plus), vec![2, 3, 2]);
        let dom = square(4);
        let all = enumerate_all(&dom);
        let b: Vec<FplConfig> = all.iter().filter(|c| is_b(&dom, c)).cloned().collect();
        assert_eq!(refinement_histogram(&dom, &b), vec![7, 14, 14, 7]);
    }

    #[test]
    fn one_corner_cut_domain_counts() {
        let dom = build_domain(&DomainSpec::first(4, 4, [0, 0, 0, 2])).unwrap();
        let all = enumerate_all(&dom);
        let b = all.iter().filter(|c| is_b(&dom, c)).count();
        assert_eq!(b, 14);
        assert_eq!(all.len() % 2, 0);
    }

    #[test]
    fn link_patterns_are_valid_everywhere() {
        // plain, even-punctured (2-gon face) and odd-punctured (split vertex)
        let specs = [
            DomainSpec::first(3, 3, [0, 0, 0, 0]),
            DomainSpec::first(6, 6, [0, 3, 0, 3]),
            DomainSpec::second(5, 4, [0, 2, 0, 2]),
        ];
        for spec in &specs {
            let dom = build_domain(spec).unwrap();
            for cfg in enumerate_all(&dom) {
                let h = refinement_position(&dom, &cfg);
                assert!((1..=dom.l_side).contains(&h));
                // base the pattern at the first black external
                let v = if cfg.sector(&dom) == Sector::Plus { 1 } else { 2 };
                let p = link_pattern(&dom, &cfg, v);
                assert_eq!(p.kind(), dom.lp_kind);
                assert_eq!(p.n_points(), dom.pattern_points());
                let _ = loop_stats(&dom, &cfg);
            }
        }
    }

    #[test]
    fn tiles_left_and_right_of_c_on_reference_side() {
        // along the reference side, every position right of the straight tile
        // carries an a-tile and every position left of it a b-tile
        let dom = square(4);
        for cfg in enumerate_all(&dom) {
            let h = refinement_position(&dom, &cfg);
            for (k, &v) in dom.ref_side_vertices.iter().enumerate() {
                let col = |s: usize| cfg.colors[dom.verts[v].slots[s].unwrap()];
                let t = if col(SLOT_E) == col(SLOT_W) {
                    Tile::C
                } else if col(SLOT_E) == col(SLOT_N) {
                    Tile::A
                } else {
                    Tile::B
                };
                let expect = match (k + 1).cmp(&h) {
                    std::cmp::Ordering::Less => Tile::B,
                    std::cmp::Ordering::Equal => Tile::C,
                    std::cmp::Ordering::Greater => Tile::A,
                };
                assert_eq!(t, expect);
            }
        }
    }

    #[test]
    fn sigma_swaps_sectors_and_preserves_h() {
        let dom = square(3);
        for cfg in enumerate_sector(&dom, Sector::Plus) {
            let s = cfg.sigma();
            assert_eq!(s.sector(&dom), Sector::Minus);
            assert_eq!(
                refinement_position(&dom, &cfg),
                refinement_position(&dom, &s)
            );
            assert_eq!(is_b(&dom, &cfg), !is_b(&dom, &s));
        }
    }
}
