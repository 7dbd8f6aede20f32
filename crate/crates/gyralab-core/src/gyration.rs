//! Gyration operators on fully-packed-loop configurations: the two
//! face-cycle sweeps, the staggered half-gyration and its orbits, the two
//! local boundary involutions acting like Temperley--Lieb generators, and
//! the map carrying one boundary sector onto the other while preserving the
//! link pattern.


use crate::domains::{build_gyration_graphs, Cycle, DihedralDomain, DomainError, GyrationGraph};
use crate::fplenum::{refinement_position, FplConfig, Sector};
use crate::report::Report;
use std::collections::{HashMap, HashSet};

pub struct Gyration<'a> {
    pub dom: &'a DihedralDomain,
    pub plus: GyrationGraph,
    pub minus: GyrationGraph,
}

fn cycle_alternating(cycle: &Cycle, cfg: &FplConfig) -> bool {
    let k = cycle.edges.len();
    (0..k).all(|i| cfg.colors[cycle.edges[i]] != cfg.colors[cycle.edges[(i + 1) % k]])
}

/// The local involution on one cycle: complement the colours, except that
/// an alternating 4-cycle, or an alternating punctured 2-cycle, is fixed.
fn flip_cycle(cycle: &Cycle, cfg: &mut FplConfig) {
    let k = cycle.edges.len();
    let fixed = cycle_alternating(cycle, cfg) && (k == 4 || (k == 2 && cycle.is_puncture));
    if !fixed {
        for &e in &cycle.edges {
            cfg.colors[e] = !cfg.colors[e];
        }
    }
}

impl<'a> Gyration<'a> {
    pub fn new(dom: &'a DihedralDomain) -> Result<Self, DomainError> {
        let (plus, minus) = build_gyration_graphs(dom)?;
        Ok(Gyration { dom, plus, minus })
    }

    /// The full sweep over one face-cycle decomposition (an involution that
    /// exchanges the two boundary sectors).
    pub fn sweep(&self, cfg: &FplConfig, sign: i8) -> FplConfig {
        let gg = if sign > 0 { &self.plus } else { &self.minus };
        let mut out = cfg.clone();
        for c in &gg.cycles {
            flip_cycle(c, &mut out);
        }
        out
    }

    /// Staggered half-gyration: the plus sweep on the plus sector, the
    /// minus sweep on the minus sector.
    pub fn h(&self, cfg: &FplConfig) -> FplConfig {
        match cfg.sector(self.dom) {
            Sector::Plus => self.sweep(cfg, 1),
            Sector::Minus => self.sweep(cfg, -1),
        }
    }

    pub fn h_inv(&self, cfg: &FplConfig) -> FplConfig {
        match cfg.sector(self.dom) {
            Sector::Plus => self.sweep(cfg, -1),
            Sector::Minus => self.sweep(cfg, 1),
        }
    }

    pub fn h_pow(&self, cfg: &FplConfig, k: i64) -> FplConfig {
        let mut out = cfg.clone();
        if k >= 0 {
            for _ in 0..k {
                out = self.h(&out);
            }
        } else {
            for _ in 0..-k {
                out = self.h_inv(&out);
            }
        }
        out
    }

    /// The full orbit of a configuration under the half-gyration, starting
    /// at `cfg`; its length is the (always even) period.
    pub fn orbit(&self, cfg: &FplConfig) -> Vec<FplConfig> {
        let mut out = vec![cfg.clone()];
        loop {
            let next = self.h(out.last().unwrap());
            if &next == cfg {
                return out;
            }
            out.push(next);
        }
    }

    /// The internal face diagonally above the reference-side vertex at
    /// position h, on the right or left side of its inward edge; right and
    /// left are taken in the local frame of the reference-side walk.
    fn corner_face(&self, h: usize, right: bool) -> Option<usize> {
        let v = self.dom.ref_side_vertices[h - 1];
        let vert = &self.dom.verts[v];
        let arrive = self.dom.ref_side_arrive[h - 1];
        let (s_up, s_fw, s_bw) = ((arrive + 3) % 4, (arrive + 2) % 4, arrive);
        let e_up = vert.slots[s_up]?;
        let cands: Vec<usize> = self.dom.edge_faces[e_up]
            .iter()
            .copied()
            .filter(|&f| f != self.dom.outer_face)
            .collect();
        let same = vert.slots[if right { s_fw } else { s_bw }];
        let opp = vert.slots[if right { s_bw } else { s_fw }];
        let is_internal = |e: Option<usize>| e.is_some_and(|x| !self.dom.edges[x].external);
        cands
            .iter()
            .copied()
            .find(|&f| {
                let es = self.dom.faces[f].edge_set();
                if is_internal(same) {
                    es.contains(&same.unwrap())
                } else {
                    !opp.is_some_and(|oe| es.contains(&oe))
                }
            })
    }

    fn e_tilde(&self, cfg: &FplConfig, first: bool, h: usize) -> FplConfig {
        // the face at the top-right corner for e~_1, at the top-left for
        // e~_N, in both sectors (verified exhaustively on small domains)
        let right = first;
        let mut out = cfg.clone();
        let f = match self.corner_face(h, right) {
            Some(f) => f,
            // at the extremal positions the corner face is missing and the
            // involution is trivial
            None => return out,
        };
        let face = &self.dom.faces[f];
        if face.len() == 4 {
            let cyc = Cycle {
                edges: face.halfedges.iter().map(|&(e, _)| e).collect(),
                has_external: false,
                is_puncture: false,
            };
            if cycle_alternating(&cyc, cfg) {
                for &e in &cyc.edges {
                    out.colors[e] = !out.colors[e];
                }
            }
        }
        out
    }

    /// The local boundary involution acting like the Temperley--Lieb
    /// generator joining points 1 and 2 of the pattern based at h.

    pub fn e_tilde_1(&self, cfg: &FplConfig, h: usize) -> FplConfig {
        self.e_tilde(cfg, true, h)
    }

    /// The companion involution acting like the generator joining points N
    /// and 1.
    pub fn e_tilde_n(&self, cfg: &FplConfig, h: usize) -> FplConfig {
        self.e_tilde(cfg, false, h)
    }

    /// The sector-to-sector bijection: iterate the half-gyration until the
    /// refinement position, measured against the iteration count, reaches 1.
    pub fn theta(&self, cfg: &FplConfig) -> FplConfig {
        assert_eq!(cfg.sector(self.dom), Sector::Plus);
        let mut cur = cfg.clone();
        let mut t: i64 = 0;
        loop {
            let g = refinement_position(self.dom, &cur) as i64 - t;
            if g == 1 {
                return cur;
            }
            assert!(g > 1, "missed the diagonal");
            cur = self.h(&cur);
            t += 1;
        }
    }

    pub fn theta_inv(&self, cfg: &FplConfig) -> FplConfig {
        let h = refinement_position(self.dom, cfg) as i64;
        self.h_pow(cfg, -(h - 1))
    }
}


/// Aggregate verification of the gyration machinery on one domain: sweeps
/// are sector-swapping involutions, a full gyration rotates every link
/// pattern, orbits obey the transition table (slopes, plateau extrema, tile
/// letters, descent on the diagonal sub-sector, equal-height counts,
/// monotone diagonal gap with unique odd values), and the straightening map
/// is a pattern-preserving bijection onto the diagonal sub-sector.
pub fn check_gyration_suite(dom: &DihedralDomain) -> Result<Report, DomainError> {
    use crate::fplenum::{d_tile, enumerate_all, enumerate_sector, is_b, link_pattern, Tile};
    let gy = Gyration::new(dom)?;
    let name = dom.spec.name();
    let all = enumerate_all(dom);
    let mut parts: Vec<Report> = Vec::new();

    let mut ok = true;
    for cfg in &all {
        for sign in [1, -1] {
            let one = gy.sweep(cfg, sign);
            if one.sector(dom) == cfg.sector(dom) || gy.sweep(&one, sign) != *cfg {
                ok = false;
            }
        }
        if gy.h_inv(&gy.h(cfg)) != *cfg {
            ok = false;
        }
    }
    parts.push(if ok {
        Report::pass("half-sweeps are sector-swapping involutions")
    } else {
        Report::fail("half-sweeps are sector-swapping involutions", "counterexample found")
    });

    let ne = dom.externals.len();
    let mut ok = true;
    'rot: for cfg in &all {
        let h2 = gy.h(&gy.h(cfg));
        for v in 1..=ne {
            if !cfg.colors[dom.external_by_label(v)] {
                continue;
            }
            if link_pattern(dom, &h2, v) != link_pattern(dom, cfg, v).rotate_by(1) {
                ok = false;
                break 'rot;
            }
        }
    }
    parts.push(if ok {
        Report::pass("full gyration rotates every link pattern")
    } else {
        Report::fail("full gyration rotates every link pattern", "counterexample found")
    });

    let mut orbit_ok = true;
    let mut heights_ok = true;
    let mut gap_ok = true;
    let mut witness = String::new();
    let mut seen: HashSet<FplConfig> = HashSet::new();
    for cfg in &all {
        if seen.contains(cfg) {
            continue;
        }
        let orbit = gy.orbit(cfg);
        let p = orbit.len();
        seen.extend(orbit.iter().cloned());
        if p % 2 != 0 {
            orbit_ok = false;
            witness = format!("odd period {p}");
            continue;
        }
        let h: Vec<i64> = orbit
            .iter()
            .map(|c| refinement_position(dom, c) as i64)
            .collect();
        let mut counts: HashMap<(i64, bool, bool), usize> = HashMap::new();
        let mut odd_gaps: HashMap<i64, usize> = HashMap::new();
        for t in 0..p {
            let g = h[t] - t as i64;
            let gn = h[(t + 1) % p] - (t as i64 + 1);
            let even_ok = (g % 2 + 2) % 2 == 0 && (gn == g || gn == g - 1);
            let odd_ok = (g % 2 + 2) % 2 == 1 && (gn == g - 1 || gn == g - 2);
            if !(even_ok || odd_ok) {
                gap_ok = false;
                witness = format!("gap step {g} -> {gn} at t={t}");
            }
            if (g % 2 + 2) % 2 == 1 {
                *odd_gaps.entry(g).or_insert(0) += 1;
            }
            let hp = h[(t + 1) % p];
            let hm = h[(t + p - 1) % p];
            let diff = hp - hm;
            let b = is_b(dom, &orbit[t]);
            if !(diff.abs() == 1 || diff.abs() == 2) || (diff < 0) != b {
                orbit_ok = false;
                witness = format!("descent rule at t={t}: diff={diff}, b={b}");
            }
            if let Some(d) = d_tile(dom, &orbit[t]) {
                let expect = if h[t] <= hp && h[t] <= hm {
                    Tile::A
                } else if h[t] >= hp && h[t] >= hm {
                    Tile::B
                } else {
                    Tile::C
                };
                if d != expect {
                    orbit_ok = false;
                    witness = format!("tile letter at t={t}: {d:?} != {expect:?}");
                }
            }
            let plus = orbit[t].sector(dom) == Sector::Plus;
            *counts.entry((h[t], plus, b)).or_insert(0) += 1;
        }
        if odd_gaps.values().any(|&c| c != 1) {
            gap_ok = false;
            witness = "odd gap value with several preimages".into();
        }
        let hs: HashSet<i64> = counts.keys().map(|k| k.0).collect();
        for hv in hs {
            let at = |plus: bool, b: bool| counts.get(&(hv, plus, b)).copied().unwrap_or(0);
            let n_plus = at(true, true) + at(true, false);
            let n_minus = at(false, true) + at(false, false);
            let n_b = at(true, true) + at(false, true);
            let n_w = at(true, false) + at(false, false);
            if !(n_plus == n_minus && n_plus == n_b && n_plus == n_w) {
                heights_ok = false;
                witness = format!("equal-height counts fail at h={hv}");
            }
        }
    }
    for (check, ok) in [
        ("orbit transition table and tile letters", orbit_ok),
        ("equal-height counts per orbit", heights_ok),
        ("diagonal gap monotone with unique odd values", gap_ok),
    ] {
        parts.push(if ok {
            Report::pass(check)
        } else {
            Report::fail(check, witness.clone())
        });
    }

    let mut ok = true;
    let mut images: HashSet<FplConfig> = HashSet::new();
    for cfg in enumerate_sector(dom, Sector::Plus) {
        let th = gy.theta(&cfg);
        let h = refinement_position(dom, &th);
        if !is_b(dom, &th)
            || gy.theta_inv(&th) != cfg
            || link_pattern(dom, &cfg, 1) != link_pattern(dom, &th, h)
        {
            ok = false;
            break;
        }
        images.insert(th);
    }
    let nb = all.iter().filter(|c| is_b(dom, c)).count();
    parts.push(if ok && images.len() == nb {
        Report::pass("straightening map is a pattern-preserving bijection")
    } else {
        Report::fail("straightening map is a pattern-preserving bijection", "counterexample found")
    });

    Ok(Report::combine("gyration suite", parts).with_domain(name))
}
