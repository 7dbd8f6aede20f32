//! Link-pattern state spaces: noncrossing perfect matchings of N cyclically
//! ordered boundary points of a disk, optionally with a marked puncture
//! (inside a face for even N, or as an arc endpoint for odd N), together with
//! rotation R, reflection V, the Temperley-Lieb generators e_i, rainbow
//! patterns and exhaustive enumeration.
//!
//! Points are 0-indexed internally and 1-indexed in all I/O. "Gap" g is the
//! boundary segment between points g and g+1 (mod N); a face of a matching is
//! the equivalence class of gaps not separated by any arc. The punctured-even
//! pattern stores the smallest gap of the face holding the puncture.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PatternKind {
    Plain,
    PuncturedEven,
    PuncturedOdd,
}

impl fmt::Display for PatternKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            PatternKind::Plain => "plain",
            PatternKind::PuncturedEven => "punctured-even",
            PatternKind::PuncturedOdd => "punctured-odd",
        };
        write!(f, "{s}")
    }
}

#[derive(Error, Debug)]
pub enum LinkPatError {
    #[error("point count {0} has the wrong parity for {1}")]
    Parity(usize, PatternKind),
    #[error("invalid pattern: {0}")]
    Invalid(String),
    #[error("index out of range: {0}")]
    Range(String),
}

/// A link pattern of any of the three kinds. `pmatch[i]` is the partner of
/// point i; for punctured-odd the defect point is self-paired in `pmatch`
/// (its actual partner is the puncture).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Pattern {
    kind: PatternKind,
    n: usize,
    pmatch: Vec<usize>,
    /// Punctured-even: canonical (smallest) gap of the puncture's face.
    face_gap: usize,
    /// Punctured-odd: the boundary point paired with the puncture.
    defect: usize,
}

impl fmt::Debug for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, j) in self.arcs() {
            write!(f, "({i},{j})")?;
        }
        match self.kind {
            PatternKind::PuncturedEven => write!(f, "*g{}", self.face_gap + 1)?,
            PatternKind::PuncturedOdd => write!(f, "*d{}", self.defect + 1)?,
            PatternKind::Plain => {}
        }
        Ok(())
    }
}

fn gap_inside_arc(a: usize, b: usize, g: usize) -> bool {
    // arc {a,b} with a < b in the 0..N-1 linear order; gap g is on the side
    // of the points a..b-1
    a <= g && g < b
}

fn same_face(pmatch: &[usize], defect: Option<usize>, g1: usize, g2: usize) -> bool {
    let n = pmatch.len();
    for i in 0..n {
        let j = pmatch[i];
        if Some(i) == defect || j <= i {
            continue;
        }
        if gap_inside_arc(i, j, g1) != gap_inside_arc(i, j, g2) {
            return false;
        }
    }
    true
}

fn canon_gap(pmatch: &[usize], g: usize) -> usize {
    (0..pmatch.len())
        .find(|&g2| same_face(pmatch, None, g2, g))
        .unwrap()
}

fn noncrossing(arcs: &[(usize, usize)]) -> bool {
    for (k, &(i, j)) in arcs.iter().enumerate() {
        for &(p, q) in &arcs[k + 1..] {
            let crossing = (i < p && p < j && j < q) || (p < i && i < q && q < j);
            if crossing {
                return false;
            }
        }
    }
    true
}

impl Pattern {
    pub fn kind(&self) -> PatternKind {
        self.kind
    }

    pub fn n_points(&self) -> usize {
        self.n
    }

    /// 1-indexed arcs (i, j) with i < j, sorted.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        let mut v = Vec::new();
        for i in 0..self.n {
            let j = self.pmatch[i];
            if i < j {
                v.push((i + 1, j + 1));
            }
        }
        v
    }

    /// 0-indexed partner.
    pub fn partner(&self, i: usize) -> usize {
        self.pmatch[i]
    }

    pub fn defect(&self) -> Option<usize> {
        match self.kind {
            PatternKind::PuncturedOdd => Some(self.defect),
            _ => None,
        }
    }

    pub fn face_gap(&self) -> Option<usize> {
        match self.kind {
            PatternKind::PuncturedEven => Some(self.face_gap),
            _ => None,
        }
    }

    pub fn plain(pmatch: Vec<usize>) -> Result<Self, LinkPatError> {
        let p = Pattern {
            kind: PatternKind::Plain,
            n: pmatch.len(),
            pmatch,
            face_gap: 0,
            defect: 0,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn punctured_even(pmatch: Vec<usize>, gap: usize) -> Result<Self, LinkPatError> {
        let fg = canon_gap(&pmatch, gap);
        let p = Pattern {
            kind: PatternKind::PuncturedEven,
            n: pmatch.len(),
            pmatch,
            face_gap: fg,
            defect: 0,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn punctured_odd(mut pmatch: Vec<usize>, defect: usize) -> Result<Self, LinkPatError> {
        if defect < pmatch.len() {
            pmatch[defect] = defect;
        }
        let p = Pattern {
            kind: PatternKind::PuncturedOdd,
            n: pmatch.len(),
            pmatch,
            face_gap: 0,
            defect,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<(), LinkPatError> {
        let n = self.n;
        if self.pmatch.len() != n {
            return Err(LinkPatError::Invalid("match length".into()));
        }
        match self.kind {
            PatternKind::Plain | PatternKind::PuncturedEven => {
                if n % 2 != 0 || n == 0 {
                    return Err(LinkPatError::Parity(n, self.kind));
                }
                for i in 0..n {
                    let j = self.pmatch[i];
                    if j >= n || j == i || self.pmatch[j] != i {
                        return Err(LinkPatError::Invalid(format!(
                            "match is not a fixed-point-free involution at {}",
                            i + 1
                        )));
                    }
                }
                let arcs: Vec<_> = (0..n)
                    .filter(|&i| i < self.pmatch[i])
                    .map(|i| (i, self.pmatch[i]))
                    .collect();
                if !noncrossing(&arcs) {
                    return Err(LinkPatError::Invalid("crossing arcs".into()));
                }
                if self.kind == PatternKind::PuncturedEven {
                    if self.face_gap != canon_gap(&self.pmatch, self.face_gap) {
                        return Err(LinkPatError::Invalid("non-canonical face gap".into()));
                    }
                }
            }
            PatternKind::PuncturedOdd => {
                if n % 2 != 1 {
                    return Err(LinkPatError::Parity(n, self.kind));
                }
                if self.defect >= n || self.pmatch[self.defect] != self.defect {
                    return Err(LinkPatError::Invalid("bad defect".into()));
                }
                for i in 0..n {
                    let j = self.pmatch[i];
                    if i == self.defect {
                        continue;
                    }
                    if j >= n || j == i || self.pmatch[j] != i || j == self.defect {
                        return Err(LinkPatError::Invalid(format!(
                            "match is not an involution avoiding the defect at {}",
                            i + 1
                        )));
                    }
                }
                // noncrossing in the linear order defect+1 .. defect-1
                let lin = |x: usize| (x + n - self.defect - 1) % n;
                let arcs: Vec<_> = (0..n)
                    .filter(|&i| i != self.defect && lin(i) < lin(self.pmatch[i]))
                    .map(|i| (lin(i), lin(self.pmatch[i])))
                    .collect();
                if !noncrossing(&arcs) {
                    return Err(LinkPatError::Invalid("crossing arcs (cut at defect)".into()));
                }
            }
        }
        Ok(())
    }

    /// Rotation R^k: point labels increase by k (arcs {i,j} -> {i+k, j+k}).
    pub fn rotate_by(&self, k: i64) -> Pattern {
        let n = self.n as i64;
        let k = ((k % n) + n) % n;
        let sh = |x: usize| (x + k as usize) % self.n;
        let mut pm = vec![0; self.n];
        for i in 0..self.n {
            pm[sh(i)] = sh(self.pmatch[i]);
        }
        let mut out = Pattern {
            kind: self.kind,
            n: self.n,
            pmatch: pm,
            face_gap: 0,
            defect: 0,
        };
        match self.kind {
            PatternKind::PuncturedEven => {
                out.face_gap = canon_gap(&out.pmatch, sh(self.face_gap));
            }
            PatternKind::PuncturedOdd => {
                out.defect = sh(self.defect);
                out.pmatch[out.defect] = out.defect;
            }
            PatternKind::Plain => {}
        }
        debug_assert!(out.validate().is_ok());
        out
    }

    pub fn rotate(&self, direction: i64) -> Pattern {
        self.rotate_by(direction.signum() as i64)
    }

    /// Reflection V: point i -> N+1-i (1-indexed).
    pub fn reflect(&self) -> Pattern {
        let n = self.n;
        let f = |x: usize| n - 1 - x;
        let mut pm = vec![0; n];
        for i in 0..n {
            pm[f(i)] = f(self.pmatch[i]);
        }
        let mut out = Pattern {
            kind: self.kind,
            n,
            pmatch: pm,
            face_gap: 0,
            defect: 0,
        };
        match self.kind {
            PatternKind::PuncturedEven => {
                // gap g (between g, g+1) maps to the gap between f(g+1), f(g),
                // i.e. gap N-2-g mod N
                let g = (2 * n - 2 - self.face_gap) % n;
                out.face_gap = canon_gap(&out.pmatch, g);
            }
            PatternKind::PuncturedOdd => {
                out.defect = f(self.defect);
                out.pmatch[out.defect] = out.defect;
            }
            PatternKind::Plain => {}
        }
        debug_assert!(out.validate().is_ok());
        out
    }

    /// Diagrammatic action of e_i (1-indexed i, taken mod N): joins points
    /// i, i+1 with a short boundary arc (never covering the puncture), joins
    /// their former partners, and reports dropped loops.
    pub fn apply_e(&self, i: usize) -> (Pattern, usize, usize) {
        let n = self.n;
        let a = (i + n - 1) % n; // 0-indexed point i
        let b = (a + 1) % n; // 0-indexed point i+1
        let gmid = a;
        let gleft = (a + n - 1) % n;
        let gright = b;
        match self.kind {
            PatternKind::Plain => {
                if self.pmatch[a] == b {
                    (self.clone(), 1, 0)
                } else {
                    let mut pm = self.pmatch.clone();
                    let p = pm[a];
                    let q = pm[b];
                    pm[a] = b;
                    pm[b] = a;
                    pm[p] = q;
                    pm[q] = p;
                    let out = Pattern {
                        kind: self.kind,
                        n,
                        pmatch: pm,
                        face_gap: 0,
                        defect: 0,
                    };
                    debug_assert!(out.validate().is_ok());
                    (out, 0, 0)
                }
            }
            PatternKind::PuncturedEven => {
                if self.pmatch[a] == b {
                    // closed loop: old arc {a,b} plus the new short arc
                    if same_face(&self.pmatch, None, self.face_gap, gmid) {
                        // the old short arc covered the puncture; the loop
                        // encircles it and the puncture ends up outside
                        let fg = canon_gap(&self.pmatch, gleft);
                        let out = Pattern {
                            face_gap: fg,
                            ..self.clone()
                        };
                        debug_assert!(out.validate().is_ok());
                        (out, 0, 1)
                    } else {
                        (self.clone(), 1, 0)
                    }
                } else {
                    let mut pm = self.pmatch.clone();
                    let p = pm[a];
                    let q = pm[b];
                    pm[a] = b;
                    pm[b] = a;
                    pm[p] = q;
                    pm[q] = p;
                    // track the puncture's face through the composition
                    let in_class =
                        |g: usize| same_face(&self.pmatch, None, self.face_gap, g);
                    let rep = if in_class(gleft) || in_class(gright) {
                        gleft
                    } else if in_class(gmid) {
                        (0..n)
                            .find(|&g| {
                                g != gleft && g != gmid && g != gright && in_class(g)
                            })
                            .expect("face with only the middle gap must be a short arc")
                    } else {
                        self.face_gap
                    };
                    let fg = canon_gap(&pm, rep);
                    let out = Pattern {
                        kind: self.kind,
                        n,
                        pmatch: pm,
                        face_gap: fg,
                        defect: 0,
                    };
                    debug_assert!(out.validate().is_ok());
                    (out, 0, 0)
                }
            }
            PatternKind::PuncturedOdd => {
                let d = self.defect;
                let mut pm = self.pmatch.clone();
                if a == d {
                    // the defect strand is rerouted through the new arc {a,b}
                    let q = pm[b];
                    pm[a] = b;
                    pm[b] = a;
                    pm[q] = q;
                    let out = Pattern {
                        kind: self.kind,
                        n,
                        pmatch: pm,
                        face_gap: 0,
                        defect: q,
                    };
                    debug_assert!(out.validate().is_ok());
                    (out, 0, 0)
                } else if b == d {
                    let p = pm[a];
                    pm[a] = b;
                    pm[b] = a;
                    pm[p] = p;
                    let out = Pattern {
                        kind: self.kind,
                        n,
                        pmatch: pm,
                        face_gap: 0,
                        defect: p,
                    };
                    debug_assert!(out.validate().is_ok());
                    (out, 0, 0)
                } else if pm[a] == b {
                    (self.clone(), 1, 0)
                } else {
                    let p = pm[a];
                    let q = pm[b];
                    pm[a] = b;
                    pm[b] = a;
                    pm[p] = q;
                    pm[q] = p;
                    let out = Pattern {
                        kind: self.kind,
                        n,
                        pmatch: pm,
                        face_gap: 0,
                        defect: d,
                    };
                    debug_assert!(out.validate().is_ok());
                    (out, 0, 0)
                }
            }
        }
    }

    /// The relation i ~= i+1: true iff the pattern is in the image of e_i.
    pub fn short_arc_image(&self, i: usize) -> bool {
        let n = self.n;
        let a = (i + n - 1) % n;
        let b = (a + 1) % n;
        match self.kind {
            PatternKind::Plain => self.pmatch[a] == b,
            PatternKind::PuncturedEven => {
                self.pmatch[a] == b && !same_face(&self.pmatch, None, self.face_gap, a)
            }
            PatternKind::PuncturedOdd => {
                a != self.defect && b != self.defect && self.pmatch[a] == b
            }
        }
    }

    /// JSON form per the external interface.
    pub fn to_json(&self) -> PatternJson {
        let mut j = PatternJson {
            kind: self.kind,
            n: self.n,
            arcs: self.arcs().iter().map(|&(a, b)| [a, b]).collect(),
            cover: None,
            defect: None,
        };
        match self.kind {
            PatternKind::PuncturedEven => {
                j.cover = Some(match self.cover_arc() {
                    Some((a, b)) => CoverJson::Arc([a, b]),
                    None => CoverJson::Outer,
                });
            }
            PatternKind::PuncturedOdd => j.defect = Some(self.defect + 1),
            PatternKind::Plain => {}
        }
        j
    }

    /// Innermost arc separating the puncture from the base gap (between
    /// points N and 1); None when the puncture face touches the base gap.
    /// 1-indexed endpoints.
    pub fn cover_arc(&self) -> Option<(usize, usize)> {
        assert_eq!(self.kind, PatternKind::PuncturedEven);
        let mut best: Option<(usize, usize)> = None;
        for i in 0..self.n {
            let j = self.pmatch[i];
            if j <= i {
                continue;
            }
            if gap_inside_arc(i, j, self.face_gap_any_inside()) {
                if best.map_or(true, |(bi, _)| i > bi) {
                    best = Some((i, j));
                }
            }
        }
        best.map(|(i, j)| (i + 1, j + 1))
    }

    /// A gap of the puncture's face usable for linear inside tests: any gap in
    /// the face class works because no arc separates gaps of the same face.
    fn face_gap_any_inside(&self) -> usize {
        self.face_gap
    }

    pub fn from_json(j: &PatternJson) -> Result<Pattern, LinkPatError> {
        let n = j.n;
        let mut pm = vec![usize::MAX; n];
        for &[a, b] in &j.arcs {
            if a < 1 || a > n || b < 1 || b > n || a == b {
                return Err(LinkPatError::Invalid(format!("bad arc ({a},{b})")));
            }
            pm[a - 1] = b - 1;
            pm[b - 1] = a - 1;
        }
        match j.kind {
            PatternKind::Plain => {
                if pm.iter().any(|&x| x == usize::MAX) {
                    return Err(LinkPatError::Invalid("unmatched point".into()));
                }
                Pattern::plain(pm)
            }
            PatternKind::PuncturedEven => {
                if pm.iter().any(|&x| x == usize::MAX) {
                    return Err(LinkPatError::Invalid("unmatched point".into()));
                }
                let gap = match &j.cover {
                    Some(CoverJson::Outer) | None => canon_gap(&pm, n - 1),
                    Some(CoverJson::Arc([a, b])) => {
                        let (a, b) = (a.min(b), a.max(b));
                        if *a < 1 || *b > n || pm[a - 1] != b - 1 {
                            return Err(LinkPatError::Invalid("cover names a missing arc".into()));
                        }
                        a - 1
                    }
                };
                Pattern::punctured_even(pm, gap)
            }
            PatternKind::PuncturedOdd => {
                let d = j
                    .defect
                    .ok_or_else(|| LinkPatError::Invalid("missing defect".into()))?;
                if d < 1 || d > n {
                    return Err(LinkPatError::Invalid("defect out of range".into()));
                }
                if pm[d - 1] != usize::MAX {
                    return Err(LinkPatError::Invalid("defect is matched".into()));
                }
                pm[d - 1] = d - 1;
                if pm.iter().any(|&x| x == usize::MAX) {
                    return Err(LinkPatError::Invalid("unmatched point".into()));
                }
                Pattern::punctured_odd(pm, d - 1)
            }
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PatternJson {
    pub kind: PatternKind,
    #[serde(rename = "N")]
    pub n: usize,
    pub arcs: Vec<[usize; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cover: Option<CoverJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub defect: Option<usize>,
}

/// Either the innermost arc covering the puncture, or "outer".
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoverJson {
    Arc([usize; 2]),
    Outer,
}

impl Serialize for CoverJson {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            CoverJson::Arc(a) => a.serialize(s),
            CoverJson::Outer => s.serialize_str("outer"),
        }
    }
}

impl<'de> Deserialize<'de> for CoverJson {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = serde_json::Value::deserialize(d)?;
        match &v {
            serde_json::Value::String(s) if s == "outer" => Ok(CoverJson::Outer),
            serde_json::Value::Array(_) => {
                let a: [usize; 2] = serde_json::from_value(v.clone())
                    .map_err(serde::de::Error::custom)?;
                Ok(CoverJson::Arc(a))
            }
            _ => Err(serde::de::Error::custom("expected [i, j] or \"outer\"")),
        }
    }
}

/// An enumerated pattern space with a canonical order and index lookup.
#[derive(Clone, Debug)]
pub struct PatternSpace {
    pub kind: PatternKind,
    pub n_points: usize,
    pub patterns: Vec<Pattern>,
    index: HashMap<Pattern, usize>,
}

impl PatternSpace {
    pub fn dim(&self) -> usize {
        self.patterns.len()
    }

    pub fn index_of(&self, p: &Pattern) -> usize {
        *self
            .index
            .get(p)
            .unwrap_or_else(|| panic!("pattern {p} not in space"))
    }

    /// Indices of the rainbow patterns in canonical order of j.
    pub fn rainbow_indices(&self) -> Vec<usize> {
        (0..rainbow_count(self.kind, self.n_points))
            .map(|j| self.index_of(&rainbow_pattern(self.kind, self.n_points, j).unwrap()))
            .collect()
    }
}

pub fn catalan(n: usize) -> u128 {
    let mut c: u128 = 1;
    for k in 0..n {
        c = c * 2 * (2 * k as u128 + 1) / (k as u128 + 2);
    }
    c
}

fn plain_matchings(points: &[usize]) -> Vec<Vec<(usize, usize)>> {
    if points.is_empty() {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    let p = points[0];
    for idx in (1..points.len()).step_by(2) {
        let q = points[idx];
        for inner in plain_matchings(&points[1..idx]) {
            for outer in plain_matchings(&points[idx + 1..]) {
                let mut arcs = vec![(p, q)];
                arcs.extend(inner.iter().copied());
                arcs.extend(outer);
                out.push(arcs);
            }
        }
    }
    out
}

fn arcs_to_match(n: usize, arcs: &[(usize, usize)]) -> Vec<usize> {
    let mut pm = vec![usize::MAX; n];
    for &(a, b) in arcs {
        pm[a] = b;
        pm[b] = a;
    }
    pm
}

/// Deterministic, duplicate-free, complete enumeration; canonical order is
/// lexicographic on the (1-indexed) match array, then on the face gap /
/// defect.
pub fn enumerate_patterns(kind: PatternKind, n: usize) -> Result<PatternSpace, LinkPatError> {
    let mut patterns: Vec<Pattern> = Vec::new();
    match kind {
        PatternKind::Plain | PatternKind::PuncturedEven => {
            if n == 0 || n % 2 != 0 {
                return Err(LinkPatError::Parity(n, kind));
            }
            let pts: Vec<usize> = (0..n).collect();
            for arcs in plain_matchings(&pts) {
                let pm = arcs_to_match(n, &arcs);
                if kind == PatternKind::Plain {
                    patterns.push(Pattern::plain(pm)?);
                } else {
                    let mut reps: Vec<usize> =
                        (0..n).map(|g| canon_gap(&pm, g)).collect();
                    reps.sort_unstable();
                    reps.dedup();
                    for g in reps {
                        patterns.push(Pattern::punctured_even(pm.clone(), g)?);
                    }
                }
            }
        }
        PatternKind::PuncturedOdd => {
            if n % 2 != 1 {
                return Err(LinkPatError::Parity(n, kind));
            }
            for d in 0..n {
                let pts: Vec<usize> = (1..n).map(|k| (d + k) % n).collect();
                for arcs in plain_matchings(&pts) {
                    let pm = arcs_to_match(n, &arcs);
                    patterns.push(Pattern::punctured_odd(pm, d)?);
                }
            }
        }
    }
    patterns.sort_by(|a, b| {
        (&a.pmatch, a.face_gap, a.defect).cmp(&(&b.pmatch, b.face_gap, b.defect))
    });
    let index = patterns
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, p)| (p, i))
        .collect();
    let space = PatternSpace {
        kind,
        n_points: n,
        patterns,
        index,
    };
    let expect = expected_dim(kind, n);
    if space.dim() as u128 != expect {
        return Err(LinkPatError::Invalid(format!(
            "enumeration produced {} patterns, expected {}",
            space.dim(),
            expect
        )));
    }
    Ok(space)
}

pub fn expected_dim(kind: PatternKind, n: usize) -> u128 {
    match kind {
        PatternKind::Plain => catalan(n / 2),
        PatternKind::PuncturedEven => (n as u128 / 2 + 1) * catalan(n / 2),
        PatternKind::PuncturedOdd => n as u128 * catalan((n - 1) / 2),
    }
}

pub fn rainbow_count(kind: PatternKind, n: usize) -> usize {
    match kind {
        PatternKind::Plain => n / 2,
        _ => n,
    }
}

/// The j-th rotation of the maximally nested pattern (puncture innermost for
/// the punctured kinds).
pub fn rainbow_pattern(kind: PatternKind, n: usize, j: usize) -> Result<Pattern, LinkPatError> {
    if j >= rainbow_count(kind, n) {
        return Err(LinkPatError::Range(format!(
            "rainbow index {j} out of range for {kind} N={n}"
        )));
    }
    let base = match kind {
        PatternKind::Plain => {
            let pm: Vec<usize> = (0..n).map(|i| n - 1 - i).collect();
            Pattern::plain(pm)?
        }
        PatternKind::PuncturedEven => {
            let pm: Vec<usize> = (0..n).map(|i| n - 1 - i).collect();
            // puncture inside the innermost arc {n/2-1, n/2}
            Pattern::punctured_even(pm, n / 2 - 1)?
        }
        PatternKind::PuncturedOdd => {
            let half = (n - 1) / 2;
            let d = half; // centered defect, arcs {d-k, d+k}
            let mut pm = vec![0; n];
            pm[d] = d;
            for k in 1..=half {
                let i = (d + n - k) % n;
                let l = (d + k) % n;
                pm[i] = l;
                pm[l] = i;
            }
            Pattern::punctured_odd(pm, d)?
        }
    };
    Ok(base.rotate_by(-(j as i64)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn plain4_a() -> Pattern {
        // (12)(34)
        Pattern::plain(vec![1, 0, 3, 2]).unwrap()
    }

    fn plain4_b() -> Pattern {
        // (23)(41)
        Pattern::plain(vec![3, 2, 1, 0]).unwrap()
    }

    #[test]
    fn enumeration_cardinalities() {
        for n in (2..=10).step_by(2) {
            let s = enumerate_patterns(PatternKind::Plain, n).unwrap();
            assert_eq!(s.dim() as u128, catalan(n / 2));
            let s = enumerate_patterns(PatternKind::PuncturedEven, n).unwrap();
            assert_eq!(s.dim() as u128, (n as u128 / 2 + 1) * catalan(n / 2));
        }
        for n in (1..=9).step_by(2) {
            let s = enumerate_patterns(PatternKind::PuncturedOdd, n).unwrap();
            assert_eq!(s.dim() as u128, n as u128 * catalan((n - 1) / 2));
        }
        assert_eq!(enumerate_patterns(PatternKind::Plain, 6).unwrap().dim(), 5);
        assert_eq!(
            enumerate_patterns(PatternKind::PuncturedEven, 6).unwrap().dim(),
            20
        );
        assert_eq!(
            enumerate_patterns(PatternKind::PuncturedOdd, 5).unwrap().dim(),
            10
        );
        assert_eq!(enumerate_patterns(PatternKind::Plain, 2).unwrap().dim(), 1);
        assert!(enumerate_patterns(PatternKind::Plain, 5).is_err());
    }

    #[test]
    fn rotation_examples() {
        assert_eq!(plain4_a().rotate(1), plain4_b());
        for kind in [
            PatternKind::Plain,
            PatternKind::PuncturedEven,
            PatternKind::PuncturedOdd,
        ] {
            let n = if kind == PatternKind::PuncturedOdd { 5 } else { 6 };
            for p in &enumerate_patterns(kind, n).unwrap().patterns {
                assert_eq!(&p.rotate_by(n as i64), p, "R^N != id on {p}");
            }
        }
        // defect shifts
        let s = enumerate_patterns(PatternKind::PuncturedOdd, 5).unwrap();
        for p in &s.patterns {
            let q = p.rotate(1);
            assert_eq!(q.defect().unwrap(), (p.defect().unwrap() + 1) % 5);
        }
    }

    #[test]
    fn reflection_examples() {
        assert_eq!(plain4_a().reflect(), plain4_a());
        for p in &enumerate_patterns(PatternKind::Plain, 6).unwrap().patterns {
            assert_eq!(p.reflect().reflect(), *p);
        }
        // V on rainbows permutes the rainbow set
        for (kind, n) in [
            (PatternKind::Plain, 8),
            (PatternKind::PuncturedEven, 6),
            (PatternKind::PuncturedOdd, 7),
        ] {
            let rb: Vec<_> = (0..rainbow_count(kind, n))
                .map(|j| rainbow_pattern(kind, n, j).unwrap())
                .collect();
            for r in &rb {
                assert!(rb.contains(&r.reflect()), "V(rainbow) not a rainbow");
            }
        }
    }

    #[test]
    fn apply_e_plain_examples() {
        let (q, cl, pl) = plain4_a().apply_e(1);
        assert_eq!(q, plain4_a());
        assert_eq!((cl, pl), (1, 0));
        let (q, cl, pl) = plain4_a().apply_e(2);
        assert_eq!(q, plain4_b());
        assert_eq!((cl, pl), (0, 0));
    }

    #[test]
    fn apply_e_punctured_cover_loop() {
        // LP*(4), arc (12) covering the puncture: puncture in the face inside
        // the arc {1,2}, i.e. gap 1 (0-indexed gap 0)
        let p = Pattern::punctured_even(vec![1, 0, 3, 2], 0).unwrap();
        assert!(!p.short_arc_image(1));
        let (q, cl, pl) = p.apply_e(1);
        assert_eq!((cl, pl), (0, 1));
        // arc (12) no longer covers the puncture
        assert!(q.short_arc_image(1));
        assert_eq!(q.arcs(), p.arcs());
        // and applying e_1 again now drops a contractible loop
        let (r, cl, pl) = q.apply_e(1);
        assert_eq!((cl, pl), (1, 0));
        assert_eq!(r, q);
    }

    #[test]
    fn short_arc_examples() {
        assert!(plain4_a().short_arc_image(1));
        assert!(!plain4_a().short_arc_image(2));
        assert!(plain4_a().short_arc_image(3));
        // wrap-around: (23)(41) has the short arc {4,1}
        assert!(plain4_b().short_arc_image(4));
        assert!(!plain4_b().short_arc_image(1));
    }

    #[test]
    fn rainbow_counts() {
        // LP(4): both patterns are rainbows
        let s = enumerate_patterns(PatternKind::Plain, 4).unwrap();
        assert_eq!(s.rainbow_indices().len(), 2);
        assert_eq!(s.dim(), 2);
        // LP(6): 3 of 5
        let s = enumerate_patterns(PatternKind::Plain, 6).unwrap();
        let rb = s.rainbow_indices();
        assert_eq!(rb.len(), 3);
        let mut uniq = rb.clone();
        uniq.dedup();
        assert_eq!(uniq.len(), 3);
        // LP*(6): 6 distinct rainbows
        let s = enumerate_patterns(PatternKind::PuncturedEven, 6).unwrap();
        let mut rb = s.rainbow_indices();
        rb.sort_unstable();
        rb.dedup();
        assert_eq!(rb.len(), 6);
        // LP*(5): 5 distinct
        let s = enumerate_patterns(PatternKind::PuncturedOdd, 5).unwrap();
        let mut rb = s.rainbow_indices();
        rb.sort_unstable();
        rb.dedup();
        assert_eq!(rb.len(), 5);
    }

    #[test]
    fn json_roundtrip() {
        for (kind, n) in [
            (PatternKind::Plain, 6),
            (PatternKind::PuncturedEven, 6),
            (PatternKind::PuncturedOdd, 5),
        ] {
            for p in &enumerate_patterns(kind, n).unwrap().patterns {
                let j = p.to_json();
                let s = serde_json::to_string(&j).unwrap();
                let j2: PatternJson = serde_json::from_str(&s).unwrap();
                let q = Pattern::from_json(&j2).unwrap();
                assert_eq!(&q, p, "roundtrip failed for {p}: {s}");
            }
        }
    }
}
