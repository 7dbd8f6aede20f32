//! Dihedral domains: rectangular grids with square corner cuts whose dangling
//! edges are reconnected in nested pairs, of first kind (possibly with a
//! two-sided face acting as a puncture) or second kind (one internal edge
//! split by a degree-2 vertex). Includes external-edge labeling, the
//! reference-side length, the derived graphs with merged external pairs and
//! their face-based cycle decompositions, and domains for ASM symmetry
//! classes.

use std::collections::{BTreeSet, HashMap, VecDeque};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::linkpat::PatternKind;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DomainKind {
    First,
    Second,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct DomainSpec {
    #[serde(rename = "Lx")]
    pub lx: usize,
    #[serde(rename = "Ly")]
    pub ly: usize,
    pub a: [usize; 4],
    pub kind: DomainKind,
    /// Second kind only: grid coordinates of the two endpoints of the edge to
    /// split. Omitted = pick the smallest eligible edge deterministically.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub split_edge: Option<[[usize; 2]; 2]>,
}

impl DomainSpec {
    pub fn first(lx: usize, ly: usize, a: [usize; 4]) -> Self {
        DomainSpec {
            lx,
            ly,
            a,
            kind: DomainKind::First,
            split_edge: None,
        }
    }

    pub fn second(lx: usize, ly: usize, a: [usize; 4]) -> Self {
        DomainSpec {
            lx,
            ly,
            a,
            kind: DomainKind::Second,
            split_edge: None,
        }
    }

    pub fn name(&self) -> String {
        let k = match self.kind {
            DomainKind::First => "",
            DomainKind::Second => "'",
        };
        format!(
            "Lambda{}({},{};{},{},{},{})",
            k, self.lx, self.ly, self.a[0], self.a[1], self.a[2], self.a[3]
        )
    }

    /// Rotate the spec a quarter turn so that corner 2 becomes the reference
    /// corner.
    pub fn rotate_quarter(&self) -> DomainSpec {
        DomainSpec {
            lx: self.ly,
            ly: self.lx,
            a: [self.a[1], self.a[2], self.a[3], self.a[0]],
            kind: self.kind,
            split_edge: None,
        }
    }

    /// Smallest number of quarter turns bringing a_1 to zero.
    pub fn canonicalize(&self) -> Result<DomainSpec, DomainError> {
        let mut s = self.clone();
        for _ in 0..4 {
            if s.a[0] == 0 {
                return Ok(s);
            }
            s = s.rotate_quarter();
        }
        Err(DomainError::Invalid(
            "no rotation has a_1 = 0 (no corner survives)".into(),
        ))
    }
}

#[derive(Error, Debug)]
pub enum DomainError {
    #[error("invalid domain: {0}")]
    Invalid(String),
    #[error("cycle decomposition failed: {0}")]
    Decomposition(String),
}

/// Slot indices in counter-clockwise order around a vertex.
pub const SLOT_E: usize = 0;
pub const SLOT_N: usize = 1;
pub const SLOT_W: usize = 2;
pub const SLOT_S: usize = 3;

pub const SLOT_OFFSETS: [(f64, f64); 4] = [(1.0, 0.0), (0.0, 1.0), (-1.0, 0.0), (0.0, -1.0)];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VertexKind {
    Grid,
    Leaf,
    Split,
}

#[derive(Clone, Debug)]
pub struct Vertex {
    pub kind: VertexKind,
    pub pos: (f64, f64),
    pub grid: Option<(usize, usize)>,
    pub slots: [Option<usize>; 4],
}

impl Vertex {
    pub fn degree(&self) -> usize {
        self.slots.iter().filter(|s| s.is_some()).count()
    }

    pub fn slot_of(&self, e: usize) -> Option<usize> {
        self.slots.iter().position(|s| *s == Some(e))
    }
}

#[derive(Clone, Debug)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub slot_u: usize,
    pub slot_v: usize,
    pub external: bool,
}

impl Edge {
    pub fn other(&self, x: usize) -> usize {
        if x == self.u {
            self.v
        } else {
            self.u
        }
    }
}

/// A face as a cyclic list of directed half-edges (edge id, forward flag);
/// forward = traversed u -> v.
#[derive(Clone, Debug)]
pub struct Face {
    pub halfedges: Vec<(usize, bool)>,
}

impl Face {
    pub fn len(&self) -> usize {
        self.halfedges.len()
    }

    pub fn edge_set(&self) -> BTreeSet<usize> {
        self.halfedges.iter().map(|&(e, _)| e).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Puncture {
    None,
    Face(usize),
    Vertex(usize),
}

pub struct DihedralDomain {
    pub spec: DomainSpec,
    pub verts: Vec<Vertex>,
    pub edges: Vec<Edge>,
    pub faces: Vec<Face>,
    pub outer_face: usize,
    /// For every edge, the two incident face ids (forward halfedge face,
    /// backward halfedge face).
    pub edge_faces: Vec<[usize; 2]>,
    /// External edge ids in label order (index 0 = label 1).
    pub externals: Vec<usize>,
    /// Reference-side length.
    pub l_side: usize,
    /// Grid vertex on the reference side at position k (index k-1), i.e. the
    /// anchor of the external edge with label k... the walk order of the
    /// reference line.
    pub ref_side_vertices: Vec<usize>,
    /// External edge id perpendicular to the reference side at position k
    /// (index k-1). Its label always equals k.
    pub ref_side_externals: Vec<usize>,
    /// Arrival slot of the reference-side walk at position k (index k-1);
    /// fixes the local frame (inward = arrive+3, forward = arrive+2 mod 4).
    pub ref_side_arrive: Vec<usize>,
    pub puncture: Puncture,
    pub lp_kind: PatternKind,
    grid_index: HashMap<(usize, usize), usize>,
}

fn in_corner_cut(spec: &DomainSpec, x: usize, y: usize) -> bool {
    let (lx, ly) = (spec.lx, spec.ly);
    let a = spec.a;
    (x <= a[0] && y <= a[0])
        || (x > lx - a[1].min(lx) && y <= a[1])
        || (x > lx - a[2].min(lx) && y > ly - a[2].min(ly))
        || (x <= a[3] && y > ly - a[3].min(ly))
}

fn validate_spec(spec: &DomainSpec) -> Result<(), DomainError> {
    let (lx, ly) = (spec.lx, spec.ly);
    if lx == 0 || ly == 0 {
        return Err(DomainError::Invalid("zero side".into()));
    }
    let a = spec.a;
    if a[0] != 0 {
        return Err(DomainError::Invalid(
            "canonical input requires a_1 = 0 (rotate first)".into(),
        ));
    }
    if a.iter().all(|&x| x > 0) {
        return Err(DomainError::Invalid("no corner survives".into()));
    }
    // corner cut squares: interiors pairwise disjoint
    // squares as [x0,x1]x[y0,y1] in grid coordinates
    let rects = [
        (0.0, a[0] as f64, 0.0, a[0] as f64),
        (lx as f64 - a[1] as f64, lx as f64, 0.0, a[1] as f64),
        (
            lx as f64 - a[2] as f64,
            lx as f64,
            ly as f64 - a[2] as f64,
            ly as f64,
        ),
        (0.0, a[3] as f64, ly as f64 - a[3] as f64, ly as f64),
    ];
    for i in 0..4 {
        if a[i] == 0 {
            continue;
        }
        if a[i] >= lx || a[i] >= ly {
            return Err(DomainError::Invalid(format!(
                "cut a_{} = {} swallows a full side",
                i + 1,
                a[i]
            )));
        }
        for j in i + 1..4 {
            if a[j] == 0 {
                continue;
            }
            let (x0, x1, y0, y1) = rects[i];
            let (p0, p1, q0, q1) = rects[j];
            let overlap_x = x1.min(p1) - x0.max(p0);
            let overlap_y = y1.min(q1) - y0.max(q0);
            if overlap_x > 0.0 && overlap_y > 0.0 {
                return Err(DomainError::Invalid(format!(
                    "cuts a_{} and a_{} overlap",
                    i + 1,
                    j + 1
                )));
            }
        }
    }
    Ok(())
}

struct Core {
    verts: Vec<Vertex>,
    edges: Vec<Edge>,
    grid_index: HashMap<(usize, usize), usize>,
}

impl Core {
    fn add_edge(
        &mut self,
        u: usize,
        slot_u: usize,
        v: usize,
        slot_v: usize,
        external: bool,
    ) -> Result<usize, DomainError> {
        let id = self.edges.len();
        for (x, s) in [(u, slot_u), (v, slot_v)] {
            if self.verts[x].slots[s].is_some() {
                return Err(DomainError::Invalid(format!(
                    "slot collision at vertex {:?} slot {s}",
                    self.verts[x].grid
                )));
            }
            self.verts[x].slots[s] = Some(id);
        }
        self.edges.push(Edge {
            u,
            v,
            slot_u,
            slot_v,
            external,
        });
        Ok(id)
    }
}

fn build_core(spec: &DomainSpec) -> Result<Core, DomainError> {
    let (lx, ly) = (spec.lx, spec.ly);
    let mut core = Core {
        verts: Vec::new(),
        edges: Vec::new(),
        grid_index: HashMap::new(),
    };
    for y in 1..=ly {
        for x in 1..=lx {
            if !in_corner_cut(spec, x, y) {
                let id = core.verts.len();
                core.verts.push(Vertex {
                    kind: VertexKind::Grid,
                    pos: (x as f64, y as f64),
                    grid: Some((x, y)),
                    slots: [None; 4],
                });
                core.grid_index.insert((x, y), id);
            }
        }
    }
    if !core.grid_index.contains_key(&(1, 1)) {
        return Err(DomainError::Invalid("reference corner removed".into()));
    }
    // grid edges between retained neighbors
    let ids: Vec<((usize, usize), usize)> = {
        let mut v: Vec<_> = core.grid_index.iter().map(|(&k, &i)| (k, i)).collect();
        v.sort();
        v
    };
    for &((x, y), u) in &ids {
        if let Some(&v) = core.grid_index.get(&(x + 1, y)) {
            core.add_edge(u, SLOT_E, v, SLOT_W, false)?;
        }
        if let Some(&v) = core.grid_index.get(&(x, y + 1)) {
            core.add_edge(u, SLOT_N, v, SLOT_S, false)?;
        }
    }
    // Nested diagonal reconnection. Removed vertices form polyomino
    // components; around each component the dangling stubs of retained
    // neighbors appear as one contiguous run along the component's contour,
    // and are joined in nested pairs (innermost first, i.e. the k-th stub of
    // the run with the (len+1-k)-th).
    let removed: Vec<(usize, usize)> = {
        let mut v = Vec::new();
        for y in 1..=ly {
            for x in 1..=lx {
                if in_corner_cut(spec, x, y) {
                    v.push((x, y));
                }
            }
        }
        v
    };
    let removed_set: std::collections::HashSet<(usize, usize)> =
        removed.iter().copied().collect();
    let mut comp_of: HashMap<(usize, usize), usize> = HashMap::new();
    let mut n_comps = 0;
    for &c in &removed {
        if comp_of.contains_key(&c) {
            continue;
        }
        let cid = n_comps;
        n_comps += 1;
        let mut queue = VecDeque::from([c]);
        comp_of.insert(c, cid);
        while let Some((x, y)) = queue.pop_front() {
            for (dx, dy) in [(1i64, 0i64), (0, 1), (-1, 0), (0, -1)] {
                let nx = x as i64 + dx;
                let ny = y as i64 + dy;
                if nx < 1 || ny < 1 {
                    continue;
                }
                let nb = (nx as usize, ny as usize);
                if removed_set.contains(&nb) && !comp_of.contains_key(&nb) {
                    comp_of.insert(nb, cid);
                    queue.push_back(nb);
                }
            }
        }
    }
    for cid in 0..n_comps {
        let cells: std::collections::HashSet<(usize, usize)> = removed
            .iter()
            .copied()
            .filter(|c| comp_of[c] == cid)
            .collect();
        // contour trace: sides (cell, outward slot) counter-clockwise
        let step = |c: (usize, usize), s: usize| -> Option<(usize, usize)> {
            let (dx, dy) = [(1i64, 0), (0i64, 1), (-1i64, 0), (0i64, -1)][s];
            let nx = c.0 as i64 + dx;
            let ny = c.1 as i64 + dy;
            if nx < 1 || ny < 1 {
                None
            } else {
                Some((nx as usize, ny as usize))
            }
        };
        let in_comp =
            |c: Option<(usize, usize)>| c.map(|p| cells.contains(&p)).unwrap_or(false);
        // starting side: the lexicographically smallest cell's south side
        let start_cell = *cells.iter().min().unwrap();
        debug_assert!(!in_comp(step(start_cell, SLOT_S)));
        let mut sides = Vec::new();
        let (mut c, mut d) = (start_cell, SLOT_S);
        loop {
            sides.push((c, d));
            let t = (d + 1) % 4; // travel direction, ccw around the component
            let c2 = step(c, t);
            if !in_comp(c2) {
                d = t; // convex turn on the same cell
            } else {
                let c2 = c2.unwrap();
                let c3 = step(c2, d);
                if !in_comp(c3) {
                    c = c2; // straight
                } else {
                    c = c3.unwrap(); // concave turn
                    d = (t + 2) % 4;
                }
            }
            if (c, d) == (start_cell, SLOT_S) {
                break;
            }
        }
        // stubs: sides whose outside vertex is retained
        let is_stub = |&(cell, s): &((usize, usize), usize)| {
            step(cell, s)
                .map(|out| core.grid_index.contains_key(&out))
                .unwrap_or(false)
        };
        let first_non_stub = sides
            .iter()
            .position(|sd| !is_stub(sd))
            .ok_or_else(|| DomainError::Invalid("cut component has no free boundary".into()))?;
        sides.rotate_left(first_non_stub);
        let run: Vec<((usize, usize), usize)> =
            sides.iter().copied().filter(|sd| is_stub(sd)).collect();
        // contiguity of the stub run within the rotated side sequence
        {
            let flags: Vec<bool> = sides.iter().map(|sd| is_stub(sd)).collect();
            let transitions = flags
                .windows(2)
                .filter(|w| w[0] != w[1])
                .count();
            if transitions > 2 {
                return Err(DomainError::Invalid(
                    "cut stubs do not form a single contiguous run".into(),
                ));
            }
        }
        if run.len() % 2 != 0 {
            return Err(DomainError::Invalid("odd number of cut stubs".into()));
        }
        for k in 0..run.len() / 2 {
            let (ca, sa) = run[k];
            let (cb, sb) = run[run.len() - 1 - k];
            let pa = step(ca, sa).unwrap();
            let pb = step(cb, sb).unwrap();
            let u = core.grid_index[&pa];
            let v = core.grid_index[&pb];
            // the stub slot at the retained vertex points back at the cell
            core.add_edge(u, (sa + 2) % 4, v, (sb + 2) % 4, false)?;
        }
    }
    // external edges at every remaining empty slot
    for &((x, y), u) in &ids {
        for s in 0..4 {
            if core.verts[u].slots[s].is_some() {
                continue;
            }
            let (dx, dy) = SLOT_OFFSETS[s];
            let leaf = core.verts.len();
            core.verts.push(Vertex {
                kind: VertexKind::Leaf,
                pos: (x as f64 + 0.5 * dx, y as f64 + 0.5 * dy),
                grid: None,
                slots: [None; 4],
            });
            core.add_edge(u, s, leaf, (s + 2) % 4, true)?;
        }
    }
    Ok(core)
}

fn compute_faces(
    verts: &[Vertex],
    edges: &[Edge],
) -> (Vec<Face>, Vec<[usize; 2]>, usize) {
    let ne = edges.len();
    let mut face_of_halfedge = vec![usize::MAX; 2 * ne];
    let mut faces: Vec<Face> = Vec::new();
    let he_id = |e: usize, fwd: bool| 2 * e + usize::from(!fwd);
    for start_e in 0..ne {
        for start_fwd in [true, false] {
            if face_of_halfedge[he_id(start_e, start_fwd)] != usize::MAX {
                continue;
            }
            let fid = faces.len();
            let mut cycle = Vec::new();
            let (mut e, mut fwd) = (start_e, start_fwd);
            loop {
                face_of_halfedge[he_id(e, fwd)] = fid;
                cycle.push((e, fwd));
                // head vertex and arrival slot
                let (head, s) = if fwd {
                    (edges[e].v, edges[e].slot_v)
                } else {
                    (edges[e].u, edges[e].slot_u)
                };
                // next outgoing slot: first occupied slot clockwise from s,
                // arrival slot itself last (bounce at leaves); the departure
                // slot also fixes the orientation of parallel edges
                let (e2, s2) = (1..=4)
                    .filter_map(|d| {
                        let cand = (s + 4 - d % 4) % 4;
                        verts[head].slots[cand].map(|e2| (e2, cand))
                    })
                    .next()
                    .expect("isolated vertex in face traversal");
                fwd = edges[e2].u == head && edges[e2].slot_u == s2;
                e = e2;
                if e == start_e && fwd == start_fwd {
                    break;
                }
            }
            faces.push(Face { halfedges: cycle });
        }
    }
    let mut edge_faces = vec![[usize::MAX; 2]; ne];
    for e in 0..ne {
        edge_faces[e] = [face_of_halfedge[he_id(e, true)], face_of_halfedge[he_id(e, false)]];
    }
    // outer face: most negative signed area
    let mut outer = 0;
    let mut min_area = f64::INFINITY;
    for (fid, f) in faces.iter().enumerate() {
        let mut area = 0.0;
        for &(e, fwd) in &f.halfedges {
            let (t, h) = if fwd {
                (edges[e].u, edges[e].v)
            } else {
                (edges[e].v, edges[e].u)
            };
            let (x1, y1) = verts[t].pos;
            let (x2, y2) = verts[h].pos;
            area += x1 * y2 - x2 * y1;
        }
        if area < min_area {
            min_area = area;
            outer = fid;
        }
    }
    (faces, edge_faces, outer)
}

/// Internal edges whose two adjacent faces both have at most 3 sides,
/// sorted by edge id.
fn eligible_split_edges(
    edges: &[Edge],
    faces: &[Face],
    edge_faces: &[[usize; 2]],
    outer: usize,
) -> Vec<usize> {
    (0..edges.len())
        .filter(|&e| {
            !edges[e].external
                && edge_faces[e]
                    .iter()
                    .all(|&f| f != outer && faces[f].len() <= 3)
        })
        .collect()
}

pub fn build_domain(spec: &DomainSpec) -> Result<DihedralDomain, DomainError> {
    validate_spec(spec)?;
    let mut core = build_core(spec)?;

    // connectivity
    {
        let n = core.verts.len();
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for s in 0..4 {
                if let Some(e) = core.verts[u].slots[s] {
                    let v = core.edges[e].other(u);
                    if !seen[v] {
                        seen[v] = true;
                        count += 1;
                        queue.push_back(v);
                    }
                }
            }
        }
        if count != n {
            return Err(DomainError::Invalid("domain is disconnected".into()));
        }
    }

    let mut split_vertex = None;
    if spec.kind == DomainKind::Second {
        let (faces, edge_faces, outer) = compute_faces(&core.verts, &core.edges);
        let eligible = eligible_split_edges(&core.edges, &faces, &edge_faces, outer);
        let chosen = match &spec.split_edge {
            Some([p, q]) => {
                let want: BTreeSet<(usize, usize)> =
                    [(p[0], p[1]), (q[0], q[1])].into_iter().collect();
                let m = eligible.iter().copied().find(|&e| {
                    let gu = core.verts[core.edges[e].u].grid;
                    let gv = core.verts[core.edges[e].v].grid;
                    match (gu, gv) {
                        (Some(a), Some(b)) => {
                            [a, b].into_iter().collect::<BTreeSet<_>>() == want
                        }
                        _ => false,
                    }
                });
                m.ok_or_else(|| {
                    DomainError::Invalid(format!(
                        "split edge {p:?}-{q:?} is not an eligible internal edge"
                    ))
                })?
            }
            None => *eligible.first().ok_or_else(|| {
                DomainError::Invalid("no internal edge has two faces with <= 3 sides".into())
            })?,
        };
        // split: edge chosen = (u,v) becomes (u,w) and (w,v)
        let Edge {
            u, v, slot_u, slot_v, ..
        } = core.edges[chosen];
        let w = core.verts.len();
        let (ux, uy) = core.verts[u].pos;
        let (vx, vy) = core.verts[v].pos;
        core.verts.push(Vertex {
            kind: VertexKind::Split,
            pos: ((ux + vx) / 2.0, (uy + vy) / 2.0),
            grid: None,
            slots: [None; 4],
        });
        core.edges[chosen] = Edge {
            u,
            v: w,
            slot_u,
            slot_v: (slot_u + 2) % 4,
            external: false,
        };
        core.verts[w].slots[(slot_u + 2) % 4] = Some(chosen);
        let e2 = core.edges.len();
        core.edges.push(Edge {
            u: w,
            v,
            slot_u: (slot_v + 2) % 4,
            slot_v,
            external: false,
        });
        core.verts[w].slots[(slot_v + 2) % 4] = Some(e2);
        core.verts[v].slots[slot_v] = Some(e2);
        split_vertex = Some(w);
    }

    let (faces, edge_faces, outer_face) = compute_faces(&core.verts, &core.edges);

    // degree validation
    for (vid, vx) in core.verts.iter().enumerate() {
        let want = match vx.kind {
            VertexKind::Grid => 4,
            VertexKind::Leaf => 1,
            VertexKind::Split => 2,
        };
        if vx.degree() != want {
            return Err(DomainError::Invalid(format!(
                "vertex {vid} has degree {} (expected {want})",
                vx.degree()
            )));
        }
    }

    // internal face shape validation and puncture detection
    let mut small_faces = Vec::new();
    for (fid, f) in faces.iter().enumerate() {
        if fid == outer_face {
            continue;
        }
        let sides = f.len();
        if sides > 4 {
            return Err(DomainError::Invalid(format!(
                "internal face with {sides} sides"
            )));
        }
        if sides <= 2 {
            small_faces.push(fid);
        }
    }
    if small_faces.len() > 1 {
        return Err(DomainError::Invalid(
            "more than one face with <= 2 sides".into(),
        ));
    }
    let (puncture, lp_kind) = match (spec.kind, split_vertex, small_faces.first()) {
        (DomainKind::Second, Some(w), _) => (Puncture::Vertex(w), PatternKind::PuncturedOdd),
        (DomainKind::First, _, Some(&f)) => (Puncture::Face(f), PatternKind::PuncturedEven),
        _ => (Puncture::None, PatternKind::Plain),
    };

    // external labeling: traverse the outer face, collect leaf edges in order
    let mut ext_order = Vec::new();
    for &(e, fwd) in &faces[outer_face].halfedges {
        if core.edges[e].external && fwd == (core.verts[core.edges[e].v].kind == VertexKind::Leaf)
        {
            // record on the pass heading out to the leaf
            ext_order.push(e);
        }
    }
    let n_ext_expected = 2 * (spec.lx + spec.ly - spec.a.iter().sum::<usize>());
    if ext_order.len() != n_ext_expected {
        return Err(DomainError::Invalid(format!(
            "external edge count {} != {}",
            ext_order.len(),
            n_ext_expected
        )));
    }
    // orient counter-clockwise: shoelace over leaf positions
    {
        let mut area = 0.0;
        for i in 0..ext_order.len() {
            let e1 = ext_order[i];
            let e2 = ext_order[(i + 1) % ext_order.len()];
            let leaf = |e: usize| {
                let ed = &core.edges[e];
                if core.verts[ed.v].kind == VertexKind::Leaf {
                    core.verts[ed.v].pos
                } else {
                    core.verts[ed.u].pos
                }
            };
            let (x1, y1) = leaf(e1);
            let (x2, y2) = leaf(e2);
            area += x1 * y2 - x2 * y1;
        }
        if area < 0.0 {
            ext_order.reverse();
        }
    }
    // rotate so the S external of (1,1) carries label 1
    let a1 = core.grid_index[&(1, 1)];
    let s_ext = core.verts[a1].slots[SLOT_S]
        .filter(|&e| core.edges[e].external)
        .ok_or_else(|| DomainError::Invalid("no S external at the reference corner".into()))?;
    let w_ext = core.verts[a1].slots[SLOT_W]
        .filter(|&e| core.edges[e].external)
        .ok_or_else(|| DomainError::Invalid("no W external at the reference corner".into()))?;
    let start = ext_order
        .iter()
        .position(|&e| e == s_ext)
        .expect("S external missing from outer face");
    ext_order.rotate_left(start);
    if *ext_order.last().unwrap() != w_ext {
        return Err(DomainError::Invalid(
            "labeling does not end at the W external of the reference corner".into(),
        ));
    }

    // corner count: cyclically consecutive external labels anchored at the
    // same vertex (a vertex adjacent to two external edges, counted once per
    // convex right angle so that degenerate thin domains still work out)
    let mut c_corners = 0;
    for i in 0..ext_order.len() {
        let e1 = ext_order[i];
        let e2 = ext_order[(i + 1) % ext_order.len()];
        let anchor = |e: usize| {
            let ed = &core.edges[e];
            if core.verts[ed.u].kind == VertexKind::Leaf {
                ed.v
            } else {
                ed.u
            }
        };
        if anchor(e1) == anchor(e2) {
            c_corners += 1;
        }
    }
    let d_cuts = spec.a.iter().filter(|&&x| x > 0).count();
    if c_corners != 4 - d_cuts {
        return Err(DomainError::Invalid(format!(
            "corner count {c_corners} != 4 - {d_cuts}"
        )));
    }

    // reference-side walk: enter (1,1) from the W external, keep going
    // straight (opposite slot), passing through degree-2 vertices, until
    // leaving through an external edge; L = grid vertices traversed
    let mut l_side = 0;
    let mut ref_side_vertices = Vec::new();
    let mut ref_side_externals = Vec::new();
    let mut ref_side_arrive = Vec::new();
    {
        let mut vtx = a1;
        let mut arrive = SLOT_W;
        loop {
            if core.verts[vtx].kind == VertexKind::Grid {
                l_side += 1;
                ref_side_vertices.push(vtx);
                // the outward edge on the right of the walk direction
                let perp = (arrive + 1) % 4;
                let pe = core.verts[vtx].slots[perp].filter(|&e| core.edges[e].external);
                let pe = pe.ok_or_else(|| {
                    DomainError::Invalid("reference position without external edge".into())
                })?;
                ref_side_externals.push(pe);
                ref_side_arrive.push(arrive);
            }
            let out_slot = if core.verts[vtx].kind == VertexKind::Split {
                let arr_edge = core.verts[vtx].slots[arrive];
                (0..4)
                    .find(|&s| s != arrive && core.verts[vtx].slots[s].is_some()
                        && core.verts[vtx].slots[s] != arr_edge)
                    .unwrap_or((arrive + 2) % 4)
            } else {
                (arrive + 2) % 4
            };
            let e = core.verts[vtx].slots[out_slot]
                .ok_or_else(|| DomainError::Invalid("reference walk fell off".into()))?;
            if core.edges[e].external {
                break;
            }
            let next = core.edges[e].other(vtx);
            arrive = if core.edges[e].u == vtx {
                core.edges[e].slot_v
            } else {
                core.edges[e].slot_u
            };
            vtx = next;
        }
    }
    for (k, &e) in ref_side_externals.iter().enumerate() {
        let label = ext_order.iter().position(|&x| x == e).unwrap() + 1;
        if label != k + 1 {
            return Err(DomainError::Invalid(format!(
                "reference position {} carries external label {}",
                k + 1,
                label
            )));
        }
    }

    Ok(DihedralDomain {
        spec: spec.clone(),
        grid_index: core.grid_index,
        verts: core.verts,
        edges: core.edges,
        faces,
        outer_face,
        edge_faces,
        externals: ext_order,
        l_side,
        ref_side_vertices,
        ref_side_externals,
        ref_side_arrive,
        puncture,
        lp_kind,
    })
}

impl DihedralDomain {
    /// Number of link-pattern points (half the external edges).
    pub fn pattern_points(&self) -> usize {
        self.externals.len() / 2
    }

    pub fn vertex_at(&self, x: usize, y: usize) -> Option<usize> {
        self.grid_index.get(&(x, y)).copied()
    }

    /// External edge id carrying 1-indexed label k.
    pub fn external_by_label(&self, k: usize) -> usize {
        self.externals[(k - 1) % self.externals.len()]
    }

    /// Label of an external edge.
    pub fn label_of_external(&self, e: usize) -> usize {
        self.externals.iter().position(|&x| x == e).unwrap() + 1
    }

    /// The grid anchor vertex of an external edge.
    pub fn external_anchor(&self, e: usize) -> usize {
        let ed = &self.edges[e];
        if self.verts[ed.u].kind == VertexKind::Leaf {
            ed.v
        } else {
            ed.u
        }
    }
}

/// One derived graph with the external leaves merged in adjacent pairs, and
/// its canonical face-class cycle decomposition.
pub struct GyrationGraph {
    /// +1 merges labels (1,2),(3,4),...; -1 merges (2,3),...,(last,1).
    pub sign: i8,
    /// Cycles partitioning the edge set of the underlying domain; edge ids
    /// refer to the domain's edge list.
    pub cycles: Vec<Cycle>,
    /// For each domain edge, the index of its cycle.
    pub cycle_of_edge: Vec<usize>,
    /// Merged vertex members: pairs of external edge labels.
    pub merged_pairs: Vec<(usize, usize)>,
}

#[derive(Clone, Debug)]
pub struct Cycle {
    /// Edge ids in cyclic face order.
    pub edges: Vec<usize>,
    pub has_external: bool,
    /// True when this cycle is the two-sided puncture face of the domain.
    pub is_puncture: bool,
}

fn build_one_gyration_graph(dom: &DihedralDomain, sign: i8) -> Result<GyrationGraph, DomainError> {
    let ne = dom.externals.len();
    let mut verts = dom.verts.clone();
    let mut edges = dom.edges.clone();
    let pairs: Vec<(usize, usize)> = (0..ne / 2)
        .map(|k| {
            if sign > 0 {
                (2 * k + 1, 2 * k + 2)
            } else {
                (2 * k + 2, if 2 * k + 3 > ne { 1 } else { 2 * k + 3 })
            }
        })
        .collect();
    for &(la, lb) in &pairs {
        let (ea, eb) = (dom.external_by_label(la), dom.external_by_label(lb));
        let leaf = |e: usize| {
            let ed = &dom.edges[e];
            if dom.verts[ed.u].kind == VertexKind::Leaf {
                ed.u
            } else {
                ed.v
            }
        };
        let (va, vb) = (leaf(ea), leaf(eb));
        // merge vb into va: position at the midpoint, slots combined
        let (xa, ya) = verts[va].pos;
        let (xb, yb) = verts[vb].pos;
        verts[va].pos = ((xa + xb) / 2.0, (ya + yb) / 2.0);
        let sb = verts[vb].slot_of(eb).unwrap();
        // choose any free slot at va for eb
        let free = (0..4)
            .find(|&s| verts[va].slots[s].is_none())
            .expect("leaf has free slots");
        verts[va].slots[free] = Some(eb);
        verts[vb].slots[sb] = None;
        if edges[eb].u == vb {
            edges[eb].u = va;
            edges[eb].slot_u = free;
        } else {
            edges[eb].v = va;
            edges[eb].slot_v = free;
        }
    }
    let (faces, edge_faces, _) = compute_faces(&verts, &edges);
    // outer face: the face visiting the most merged vertices
    let merged_ids: BTreeSet<usize> = pairs
        .iter()
        .map(|&(la, _)| {
            let e = dom.external_by_label(la);
            let ed = &dom.edges[e];
            if dom.verts[ed.u].kind == VertexKind::Leaf {
                ed.u
            } else {
                ed.v
            }
        })
        .collect();
    let count_merged = |f: &Face| {
        let mut vs = BTreeSet::new();
        for &(e, fwd) in &f.halfedges {
            let head = if fwd { edges[e].v } else { edges[e].u };
            if merged_ids.contains(&head) {
                vs.insert(head);
            }
        }
        vs.len()
    };
    let outer = (0..faces.len())
        .max_by_key(|&f| count_merged(&faces[f]))
        .ok_or_else(|| DomainError::Decomposition("no faces".into()))?;
    // 2-color faces with the outer face unselected
    let mut color = vec![u8::MAX; faces.len()];
    color[outer] = 0;
    let mut queue = VecDeque::from([outer]);
    while let Some(f) = queue.pop_front() {
        for &(e, _) in &faces[f].halfedges {
            let [f1, f2] = edge_faces[e];
            if f1 == f2 {
                return Err(DomainError::Decomposition(format!(
                    "edge {e} borders a single face (bridge)"
                )));
            }
            let g = if f1 == f { f2 } else { f1 };
            if color[g] == u8::MAX {
                color[g] = 1 - color[f];
                queue.push_back(g);
            } else if color[g] == color[f] {
                return Err(DomainError::Decomposition(
                    "face adjacency is not bipartite".into(),
                ));
            }
        }
    }
    let puncture_edges: Option<BTreeSet<usize>> = match dom.puncture {
        Puncture::Face(f) => Some(dom.faces[f].edge_set()),
        _ => None,
    };
    let mut cycles = Vec::new();
    let mut cycle_of_edge = vec![usize::MAX; edges.len()];
    for (fid, f) in faces.iter().enumerate() {
        if color[fid] != 1 {
            continue;
        }
        let es: Vec<usize> = f.halfedges.iter().map(|&(e, _)| e).collect();
        if es.len() > 4 {
            return Err(DomainError::Decomposition(format!(
                "cycle of length {} > 4",
                es.len()
            )));
        }
        let has_external = es.iter().any(|&e| dom.edges[e].external);
        if has_external && es.len() > 3 {
            return Err(DomainError::Decomposition(
                "external edge in a cycle longer than 3".into(),
            ));
        }
        let is_puncture = puncture_edges
            .as_ref()
            .map(|pe| *pe == es.iter().copied().collect::<BTreeSet<_>>())
            .unwrap_or(false);
        let cid = cycles.len();
        for &e in &es {
            if cycle_of_edge[e] != usize::MAX {
                return Err(DomainError::Decomposition(format!(
                    "edge {e} in two cycles"
                )));
            }
            cycle_of_edge[e] = cid;
        }
        cycles.push(Cycle {
            edges: es,
            has_external,
            is_puncture,
        });
    }
    if cycle_of_edge.iter().any(|&c| c == usize::MAX) {
        return Err(DomainError::Decomposition("edge not covered by any cycle".into()));
    }
    Ok(GyrationGraph {
        sign,
        cycles,
        cycle_of_edge,
        merged_pairs: pairs,
    })
}

pub fn build_gyration_graphs(
    dom: &DihedralDomain,
) -> Result<(GyrationGraph, GyrationGraph), DomainError> {
    Ok((
        build_one_gyration_graph(dom, 1)?,
        build_one_gyration_graph(dom, -1)?,
    ))
}

/// The three-bundle domain T(alpha, beta, gamma).
pub fn triangoloid(alpha: usize, beta: usize, gamma: usize) -> Result<DomainSpec, DomainError> {
    if alpha + beta + gamma == 0 {
        return Err(DomainError::Invalid("degenerate triangoloid".into()));
    }
    Ok(DomainSpec::first(
        alpha + 2 * beta + gamma,
        alpha + beta + 2 * gamma,
        [0, 0, 0, beta + gamma],
    ))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SymmetryClass {
    Asm,
    Htasm,
    Qtasm,
    QuasiQtasm,
}

/// Domains whose configurations biject with ASM symmetry classes.
pub fn symmetry_class_domain(
    class: SymmetryClass,
    size: usize,
) -> Result<DomainSpec, DomainError> {
    match class {
        SymmetryClass::Asm => {
            if size == 0 {
                return Err(DomainError::Invalid("size 0".into()));
            }
            Ok(DomainSpec::first(size, size, [0, 0, 0, 0]))
        }
        SymmetryClass::Htasm => {
            if size < 2 {
                return Err(DomainError::Invalid("HTASM size must be >= 2".into()));
            }
            if size % 2 == 0 {
                let n = size / 2;
                Ok(DomainSpec::first(2 * n, 2 * n, [0, n, 0, n]))
            } else {
                let n = (size - 1) / 2;
                Ok(DomainSpec::second(2 * n + 1, 2 * n, [0, n, 0, n]))
            }
        }
        SymmetryClass::Qtasm => {
            if size % 4 != 0 || size == 0 {
                return Err(DomainError::Invalid(
                    "QTASM domains exist only for sizes divisible by 4".into(),
                ));
            }
            let n = size / 4;
            Ok(DomainSpec::first(4 * n, 4 * n, [0, 2 * n, 2 * n, 2 * n]))
        }
        SymmetryClass::QuasiQtasm => {
            if size < 6 || size % 4 != 2 {
                return Err(DomainError::Invalid(
                    "quasi-QTASM domains exist only for sizes 4n+2, n >= 1".into(),
                ));
            }
            let n = (size - 2) / 4;
            Ok(DomainSpec::second(4 * n + 1, 4 * n, [0, 2 * n, 2 * n, 2 * n]))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_domains() {
        for n in 1..=4 {
            let dom = build_domain(&DomainSpec::first(n, n, [0, 0, 0, 0])).unwrap();
            assert_eq!(dom.pattern_points(), 2 * n);
            assert_eq!(dom.l_side, n);
            assert_eq!(dom.lp_kind, PatternKind::Plain);
            assert_eq!(dom.externals.len(), 4 * n);
            // interior faces: (n-1)^2 squares
            assert_eq!(dom.faces.len() - 1, (n - 1) * (n - 1));
        }
    }

    #[test]
    fn figure_examples() {
        let d = build_domain(&DomainSpec::first(15, 9, [0, 0, 6, 4])).unwrap();
        assert_eq!(d.pattern_points(), 14);
        assert_eq!(d.l_side, 15);
        assert_eq!(d.lp_kind, PatternKind::Plain);

        let d = build_domain(&DomainSpec::first(15, 9, [0, 2, 6, 4])).unwrap();
        assert_eq!(d.pattern_points(), 12);
        assert_eq!(d.l_side, 24);

        let d = build_domain(&DomainSpec::first(14, 14, [0, 6, 4, 8])).unwrap();
        assert_eq!(d.pattern_points(), 10);
        assert_eq!(d.l_side, 20);
        assert_eq!(d.lp_kind, PatternKind::PuncturedEven);
        match d.puncture {
            Puncture::Face(f) => assert_eq!(d.faces[f].len(), 2),
            p => panic!("expected face puncture, got {p:?}"),
        }
    }

    #[test]
    fn one_corner_cut() {
        let d = build_domain(&DomainSpec::first(4, 4, [0, 0, 0, 2])).unwrap();
        assert_eq!(d.pattern_points(), 6);
        assert_eq!(d.l_side, 4);
        assert_eq!(d.lp_kind, PatternKind::Plain);
    }

    #[test]
    fn htasm_domains() {
        let d = build_domain(&symmetry_class_domain(SymmetryClass::Htasm, 6).unwrap()).unwrap();
        assert_eq!(d.pattern_points(), 6);
        assert_eq!(d.lp_kind, PatternKind::PuncturedEven);

        let d = build_domain(&symmetry_class_domain(SymmetryClass::Htasm, 5).unwrap()).unwrap();
        assert_eq!(d.pattern_points(), 5);
        assert_eq!(d.lp_kind, PatternKind::PuncturedOdd);
        match d.puncture {
            Puncture::Vertex(w) => assert_eq!(d.verts[w].kind, VertexKind::Split),
            p => panic!("expected vertex puncture, got {p:?}"),
        }
    }

    #[test]
    fn qtasm_domain() {
        let d = build_domain(&symmetry_class_domain(SymmetryClass::Qtasm, 4).unwrap()).unwrap();
        assert_eq!(d.pattern_points(), 2);
        let d = build_domain(&symmetry_class_domain(SymmetryClass::Qtasm, 8).unwrap()).unwrap();
        assert_eq!(d.pattern_points(), 4);
    }

    #[test]
    fn triangoloid_parametrization() {
        assert_eq!(
            triangoloid(1, 1, 1).unwrap(),
            DomainSpec::first(4, 4, [0, 0, 0, 2])
        );
        assert_eq!(
            triangoloid(2, 3, 4).unwrap(),
            DomainSpec::first(12, 13, [0, 0, 0, 7])
        );
        assert_eq!(
            triangoloid(3, 0, 0).unwrap(),
            DomainSpec::first(3, 3, [0, 0, 0, 0])
        );
        // pattern parameter 2n = 2(alpha+beta+gamma)
        let d = build_domain(&triangoloid(2, 3, 4).unwrap()).unwrap();
        assert_eq!(d.pattern_points(), 18);
        let d = build_domain(&triangoloid(1, 1, 1).unwrap()).unwrap();
        assert_eq!(d.pattern_points(), 6);
    }

    #[test]
    fn invalid_specs() {
        assert!(build_domain(&DomainSpec::first(4, 4, [1, 0, 0, 0])).is_err());
        assert!(build_domain(&DomainSpec::first(4, 4, [0, 3, 2, 0])).is_err()); // a2+a3 > Ly would overlap
        assert!(validate_spec(&DomainSpec::first(5, 4, [0, 2, 2, 0])).is_ok());
        // rotation helper
        let s = DomainSpec::first(4, 5, [2, 0, 0, 0]).canonicalize().unwrap();
        assert_eq!(s, DomainSpec::first(5, 4, [0, 0, 0, 2]));
    }

    #[test]
    fn gyration_graph_invariants() {
        for spec in [
            DomainSpec::first(3, 3, [0, 0, 0, 0]),
            DomainSpec::first(4, 4, [0, 0, 0, 2]),
            symmetry_class_domain(SymmetryClass::Htasm, 6).unwrap(),
            symmetry_class_domain(SymmetryClass::Htasm, 5).unwrap(),
        ] {
            let dom = build_domain(&spec).unwrap();
            let (gp, gm) = build_gyration_graphs(&dom).unwrap();
            for g in [&gp, &gm] {
                let total: usize = g.cycles.iter().map(|c| c.edges.len()).sum();
                assert_eq!(total, dom.edges.len(), "{}", spec.name());
                for c in &g.cycles {
                    assert!(c.edges.len() <= 4);
                    if c.has_external {
                        assert!(c.edges.len() <= 3);
                    }
                }
            }
            if dom.lp_kind == PatternKind::PuncturedEven {
                // the 2-gon must appear as a cycle in at least one side
                assert!(
                    gp.cycles.iter().any(|c| c.is_puncture)
                        || gm.cycles.iter().any(|c| c.is_puncture)
                );
            }
        }
    }

    #[test]
    fn labels_follow_boundary() {
        let dom = build_domain(&DomainSpec::first(3, 3, [0, 0, 0, 0])).unwrap();
        // bottom side: labels 1..3 are the S externals of (1,1),(2,1),(3,1)
        for k in 1..=3 {
            let e = dom.external_by_label(k);
            let anchor = dom.external_anchor(e);
            assert_eq!(dom.verts[anchor].grid, Some((k, 1)));
            assert_eq!(dom.edges[e].slot_u.min(dom.edges[e].slot_v) % 4, {
                // anchor-side slot is S
                let ed = &dom.edges[e];
                let s = if ed.u == anchor { ed.slot_u } else { ed.slot_v };
                assert_eq!(s, SLOT_S);
                ed.slot_u.min(ed.slot_v) % 4
            });
        }
        // last label is the W external of (1,1)
        let e = dom.external_by_label(12);
        let anchor = dom.external_anchor(e);
        assert_eq!(dom.verts[anchor].grid, Some((1, 1)));
        // reference side vertices are the bottom row
        assert_eq!(dom.ref_side_vertices.len(), 3);
    }
}
