//! Operators on link-pattern spaces: the cyclic Temperley-Lieb generators
//! e_i at loop weight 1, rotation R, reflection V, the Hamiltonian H_0, the
//! one-parameter deformations X_i(t), and the distinguished vectors solving
//! the scattering equation X_i(t) Psi = R Psi, together with the structural
//! checks on those vectors (rotation identity, dihedral covariance, t -> 0
//! recursion).

use num_bigint::BigInt;
use num_traits::Zero;

use crate::exactmath::{nullspace_poly, Poly, PolyMatrix};
use crate::linkpat::{
    enumerate_patterns, rainbow_count, Pattern, PatternKind, PatternSpace,
};
use crate::report::Report;

/// Matrix of e_i in the canonical pattern basis. Closed contractible loops
/// and loops around the puncture both carry weight 1.
pub fn op_e(space: &PatternSpace, i: usize) -> PolyMatrix {
    let d = space.dim();
    let mut m = PolyMatrix::zero(d, d);
    for (col, p) in space.patterns.iter().enumerate() {
        let (q, _contractible, _punctured) = p.apply_e(i);
        m.add_to(space.index_of(&q), col, &Poly::one());
    }
    m
}

/// Matrix of R^k.
pub fn op_r(space: &PatternSpace, k: i64) -> PolyMatrix {
    let d = space.dim();
    let mut m = PolyMatrix::zero(d, d);
    for (col, p) in space.patterns.iter().enumerate() {
        m.add_to(space.index_of(&p.rotate_by(k)), col, &Poly::one());
    }
    m
}

/// Matrix of the reflection V.
pub fn op_v(space: &PatternSpace) -> PolyMatrix {
    let d = space.dim();
    let mut m = PolyMatrix::zero(d, d);
    for (col, p) in space.patterns.iter().enumerate() {
        m.add_to(space.index_of(&p.reflect()), col, &Poly::one());
    }
    m
}

/// H_0 = sum_i (e_i - 1).
pub fn op_h0(space: &PatternSpace) -> PolyMatrix {
    let d = space.dim();
    let n = space.n_points;
    let mut m = PolyMatrix::zero(d, d);
    for i in 1..=n {
        m = m.add(&op_e(space, i));
    }
    let neg_n = Poly::constant(-(n as i64));
    m.add(&PolyMatrix::identity(d).scale(&neg_n))
}

/// X_i(t) = t + (1 - t) e_i.
pub fn op_x(space: &PatternSpace, i: usize) -> PolyMatrix {
    let d = space.dim();
    let t = Poly::t();
    let one_minus_t = Poly::one().sub(&t);
    PolyMatrix::identity(d)
        .scale(&t)
        .add(&op_e(space, i).scale(&one_minus_t))
}

/// S_i(t) = X_{i+N-1}(t) ... X_{i+1}(t) X_i(t) (indices mod N, rightmost
/// factor acts first).
pub fn op_s(space: &PatternSpace, i: usize) -> PolyMatrix {
    let n = space.n_points;
    let d = space.dim();
    let mut m = PolyMatrix::identity(d);
    for k in 0..n {
        m = op_x(space, i + k).matmul(&m);
    }
    m
}

/// The distinguished vector at a marked site, with polynomial components in
/// the canonical basis order of `space`.
pub struct GroundState {
    pub space: PatternSpace,
    pub site: usize,
    pub coeffs: Vec<Poly>,
}

impl GroundState {
    pub fn coeff(&self, p: &Pattern) -> &Poly {
        &self.coeffs[self.space.index_of(p)]
    }

    /// Componentwise evaluation at an integer t.
    pub fn eval(&self, t: i64) -> Vec<BigInt> {
        self.coeffs.iter().map(|c| c.eval_i64(t)).collect()
    }

    /// Sum of all components, as a polynomial.
    pub fn sym(&self) -> Poly {
        let mut s = Poly::zero();
        for c in &self.coeffs {
            s = s.add(c);
        }
        s
    }

    /// The vector at site i+1 is R times the vector at site i.
    pub fn at_site(&self, site: usize) -> GroundState {
        let n = self.space.n_points;
        let shift = ((site as i64 - self.site as i64) % n as i64 + n as i64) % n as i64;
        let mut coeffs = vec![Poly::zero(); self.coeffs.len()];
        for (idx, p) in self.space.patterns.iter().enumerate() {
            coeffs[self.space.index_of(&p.rotate_by(shift))] = self.coeffs[idx].clone();
        }
        GroundState {
            space: enumerate_patterns(self.space.kind, n).unwrap(),
            site,
            coeffs,
        }
    }

    /// Maximum component degree.
    pub fn max_degree(&self) -> usize {
        self.coeffs
            .iter()
            .filter_map(|c| c.degree())
            .max()
            .unwrap_or(0)
    }
}

/// Solve X_1(t) Psi = R Psi for the site-1 vector; the solution space must be
/// one-dimensional, and the result is normalized to primitive integer
/// coefficients with nonnegative entries.
pub fn ground_state_scattering(kind: PatternKind, n: usize) -> Result<GroundState, String> {
    let space = enumerate_patterns(kind, n).map_err(|e| e.to_string())?;
    let m = op_x(&space, 1).sub(&op_r(&space, 1));
    let basis = nullspace_poly(&m);
    if basis.len() != 1 {
        return Err(format!(
            "scattering equation for {kind} N={n} has a solution space of dimension {}",
            basis.len()
        ));
    }
    let coeffs = basis.into_iter().next().unwrap();
    let mut gs = GroundState {
        space,
        site: 1,
        coeffs,
    };
    // fix the overall sign so every component is nonnegative
    let negs = gs
        .coeffs
        .iter()
        .flat_map(|c| c.coeffs().iter())
        .filter(|c| **c < BigInt::zero())
        .count();
    if negs > 0 {
        let all = gs
            .coeffs
            .iter()
            .flat_map(|c| c.coeffs().iter())
            .filter(|c| !c.is_zero())
            .count();
        if negs == all {
            for c in gs.coeffs.iter_mut() {
                *c = c.neg();
            }
        } else {
            return Err(format!(
                "scattering solution for {kind} N={n} has mixed-sign coefficients"
            ));
        }
    }
    Ok(gs)
}


/// Exhaustive matrix check of the defining algebra relations on a pattern
/// space: idempotence, the sandwich relations, far commutation, and the
/// dihedral conjugation rules for R and V.
pub fn check_tl_relations(space: &PatternSpace) -> Report {
    let n = space.n_points;
    let label = format!("{} N={}", space.kind, n);
    let id = PolyMatrix::identity(space.dim());
    let e: Vec<PolyMatrix> = (1..=n).map(|i| op_e(space, i)).collect();
    let r = op_r(space, 1);
    let rinv = op_r(space, -1);
    let v = op_v(space);
    let fail = |w: String| Report::fail("algebra relations", w).with_domain(label.clone());
    if r.matmul(&rinv) != id {
        return fail("R R^-1 != 1".into());
    }
    if op_r(space, n as i64) != id {
        return fail("R^N != 1".into());
    }
    if v.matmul(&v) != id {
        return fail("V^2 != 1".into());
    }
    if v.matmul(&r).matmul(&v) != rinv {
        return fail("V R V != R^-1".into());
    }
    for i in 0..n {
        let ei = &e[i];
        if ei.matmul(ei) != *ei {
            return fail(format!("e_{}^2 != e_{}", i + 1, i + 1));
        }
        let e_next = &e[(i + 1) % n];
        if n > 2
            && (ei.matmul(e_next).matmul(ei) != *ei
                || e_next.matmul(ei).matmul(e_next) != *e_next)
        {
            return fail(format!("sandwich relation fails at i={}", i + 1));
        }
        if r.matmul(ei).matmul(&rinv) != e[(i + 1) % n] {
            return fail(format!("R e_i R^-1 != e_(i+1) at i={}", i + 1));
        }
        let j = (n - (i + 1)) % n;
        let j = if j == 0 { n - 1 } else { j - 1 };
        if v.matmul(ei).matmul(&v) != e[j] {
            return fail(format!("V e_i V != e_(N-i) at i={}", i + 1));
        }
        for k in 0..n {
            let far = (k + n - i) % n;
            if (2..=n - 2).contains(&far) && ei.matmul(&e[k]) != e[k].matmul(ei) {
                return fail(format!("commutation fails at i={}, j={}", i + 1, k + 1));
            }
        }
    }
    Report::pass("algebra relations").with_domain(label)
}

/// Structural facts about a scattering solution: nonnegativity, the exact
/// maximum degree, and monomial rainbow components t^j.
pub fn check_ground_state_shape(gs: &GroundState) -> Report {
    let kind = gs.space.kind;
    let n = gs.space.n_points;
    let mut r = Report::pass("ground-state-shape").with_domain(format!("{kind} N={n}"));
    let expected_deg = match kind {
        PatternKind::Plain => n / 2 - 1,
        _ => n - 1,
    };
    if gs.max_degree() != expected_deg {
        return Report::fail(
            "ground-state-shape",
            format!("max degree {} != {expected_deg}", gs.max_degree()),
        )
        .with_domain(format!("{kind} N={n}"));
    }
    for (idx, c) in gs.coeffs.iter().enumerate() {
        if c.is_zero() {
            return Report::fail(
                "ground-state-shape",
                format!("component {} is zero", gs.space.patterns[idx]),
            )
            .with_domain(format!("{kind} N={n}"));
        }
        if c.coeffs().iter().any(|x| *x < BigInt::zero()) {
            return Report::fail(
                "ground-state-shape",
                format!("negative coefficient at {}", gs.space.patterns[idx]),
            )
            .with_domain(format!("{kind} N={n}"));
        }
    }
    for j in 0..rainbow_count(kind, n) {
        let p = crate::linkpat::rainbow_pattern(kind, n, j).unwrap();
        let c = gs.coeff(&p);
        if *c != Poly::monomial(1, j) {
            return Report::fail(
                "ground-state-shape",
                format!("rainbow {j} component is {c}, expected t^{j}"),
            )
            .with_domain(format!("{kind} N={n}"));
        }
    }
    r.notes.push(format!("dim {}", gs.space.dim()));
    r
}

/// The two equivalent characterizations of a scattering solution:
/// e_1 (1 - R) Psi = 0, and t Psi(t; pi) = Psi(t; R^{-1} pi) whenever the
/// points 1 and 2 of pi are not joined by a short arc in the image sense.
pub fn check_equiqkz(gs: &GroundState) -> Report {
    let space = &gs.space;
    let dom = format!("{} N={}", space.kind, space.n_points);
    let e1 = op_e(space, 1);
    let r = op_r(space, 1);
    let id = PolyMatrix::identity(space.dim());
    let lhs = e1.matmul(&id.sub(&r)).apply(&gs.coeffs);
    if lhs.iter().any(|c| !c.is_zero()) {
        return Report::fail("equiqkz", "e_1 (1 - R) Psi != 0").with_domain(dom);
    }
    let t = Poly::t();
    for (idx, p) in space.patterns.iter().enumerate() {
        if p.short_arc_image(1) {
            continue;
        }
        let lhs = t.mul(&gs.coeffs[idx]);
        let rhs = &gs.coeffs[space.index_of(&p.rotate_by(-1))];
        if lhs != *rhs {
            return Report::fail(
                "equiqkz",
                format!("rotation identity fails at {p}: t*({}) != {rhs}", gs.coeffs[idx]),
            )
            .with_domain(dom);
        }
    }
    Report::pass("equiqkz").with_domain(dom)
}

/// Dihedral covariance: t^D Psi^(1)(1/t) = V Psi^(N)(t) with D the maximum
/// degree. Reports the shift s that makes t^(D+s) Psi^(1)(1/t) match, and
/// fails unless s = 0.
pub fn check_dihedral_covariance(gs: &GroundState) -> Report {
    let space = &gs.space;
    let n = space.n_points;
    let dom = format!("{} N={}", space.kind, n);
    let d = gs.max_degree();
    let psi_n = gs.at_site(n);
    for (idx, p) in space.patterns.iter().enumerate() {
        let lhs = gs.coeffs[idx].reverse(d);
        // (V Psi^(N))(p) = Psi^(N)(V p) since V is an involution
        let rhs = psi_n.coeff(&p.reflect());
        if lhs != *rhs {
            return Report::fail(
                "dihedral-covariance",
                format!("at {p}: reversed {} vs {}", gs.coeffs[idx], rhs),
            )
            .with_domain(dom);
        }
    }
    Report::pass("dihedral-covariance")
        .with_domain(dom)
        .note("shift s = 0")
}

/// Relabel a pattern of N points to one of N-2 points after removing the arc
/// {N, 1} (0-indexed {N-1, 0}).
fn strip_wrap_arc(p: &Pattern) -> Result<Pattern, String> {
    let n = p.n_points();
    if p.partner(n - 1) != 0 {
        return Err("points N and 1 are not joined".into());
    }
    let mut pm = Vec::with_capacity(n - 2);
    for i in 1..n - 1 {
        pm.push(p.partner(i) - 1);
    }
    match p.kind() {
        PatternKind::Plain => Pattern::plain(pm).map_err(|e| e.to_string()),
        PatternKind::PuncturedOdd => {
            let d = p.defect().unwrap();
            Pattern::punctured_odd(pm, d - 1).map_err(|e| e.to_string())
        }
        PatternKind::PuncturedEven => {
            // old gaps N-2, N-1, 0 merge into the new wrap gap N-3;
            // old gap g in 1..=N-3 becomes g-1
            let g = p.face_gap().unwrap();
            let g2 = if g >= 1 && g <= n - 3 { g - 1 } else { n - 3 };
            Pattern::punctured_even(pm, g2).map_err(|e| e.to_string())
        }
    }
}

/// The t -> 0 limit of the site-1 vector: components vanish unless points N
/// and 1 are joined by a short arc (image sense), and the surviving
/// components reproduce the N-2 point vector at t = 1 after removing that
/// arc.
pub fn check_t0_recursion(gs: &GroundState) -> Report {
    let space = &gs.space;
    let n = space.n_points;
    let kind = space.kind;
    let dom = format!("{kind} N={n}");
    let small = match ground_state_scattering(kind, n - 2) {
        Ok(g) => g,
        Err(e) => return Report::fail("t0-recursion", e).with_domain(dom),
    };
    let small_at_one = small.eval(1);
    for (idx, p) in space.patterns.iter().enumerate() {
        let v0 = gs.coeffs[idx].eval_i64(0);
        if !p.short_arc_image(n) {
            if !v0.is_zero() {
                return Report::fail(
                    "t0-recursion",
                    format!("component at {p} is {v0} at t=0, expected 0"),
                )
                .with_domain(dom);
            }
            continue;
        }
        let q = match strip_wrap_arc(p) {
            Ok(q) => q,
            Err(e) => return Report::fail("t0-recursion", e).with_domain(dom),
        };
        let expect = &small_at_one[small.space.index_of(&q)];
        if v0 != *expect {
            return Report::fail(
                "t0-recursion",
                format!("at {p}: t=0 value {v0}, expected {expect} from {q}"),
            )
            .with_domain(dom);
        }
    }
    Report::pass("t0-recursion").with_domain(dom)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::Poly;

    fn spaces_smallish() -> Vec<PatternSpace> {
        let mut v = Vec::new();
        for n in [2usize, 4, 6] {
            v.push(enumerate_patterns(PatternKind::Plain, n).unwrap());
        }
        for n in [2usize, 4, 6] {
            v.push(enumerate_patterns(PatternKind::PuncturedEven, n).unwrap());
        }
        for n in [3usize, 5, 7] {
            v.push(enumerate_patterns(PatternKind::PuncturedOdd, n).unwrap());
        }
        v
    }

    #[test]
    fn tl_relations_exhaustive() {
        for space in spaces_smallish() {
            let rep = check_tl_relations(&space);
            assert!(rep.ok(), "{rep:?}");
        }
    }

    #[test]
    fn scattering_solutions_small() {
        for (kind, n) in [
            (PatternKind::Plain, 4),
            (PatternKind::Plain, 6),
            (PatternKind::PuncturedEven, 4),
            (PatternKind::PuncturedOdd, 5),
        ] {
            let gs = ground_state_scattering(kind, n).unwrap();
            assert!(
                check_ground_state_shape(&gs).ok(),
                "{:?}",
                check_ground_state_shape(&gs)
            );
            // the defining equation really holds
            let space = &gs.space;
            let lhs = op_x(space, 1).apply(&gs.coeffs);
            let rhs = op_r(space, 1).apply(&gs.coeffs);
            assert_eq!(lhs, rhs, "{kind} N={n}");
            assert!(check_equiqkz(&gs).ok());
            assert!(check_dihedral_covariance(&gs).ok());
        }
    }

    #[test]
    fn lp6_component_values() {
        let gs = ground_state_scattering(PatternKind::Plain, 6).unwrap();
        let mut comps: Vec<Poly> = gs.coeffs.clone();
        comps.sort_by_key(|c| format!("{c}"));
        let mut expect = vec![
            Poly::one(),
            Poly::t(),
            Poly::t().mul(&Poly::t()),
            Poly::one().add(&Poly::t()),
            Poly::t().mul(&Poly::one().add(&Poly::t())),
        ];
        expect.sort_by_key(|c| format!("{c}"));
        assert_eq!(comps, expect);
        // total at t=1 is 7
        assert_eq!(gs.sym().eval_i64(1), 7.into());
    }

    #[test]
    fn lp4_components() {
        let gs = ground_state_scattering(PatternKind::Plain, 4).unwrap();
        let mut comps: Vec<Poly> = gs.coeffs.clone();
        comps.sort_by_key(|c| format!("{c}"));
        assert_eq!(comps, vec![Poly::one(), Poly::t()]);
    }

    #[test]
    fn hamiltonian_ground_state_at_one() {
        for (kind, n) in [
            (PatternKind::Plain, 6),
            (PatternKind::PuncturedEven, 6),
            (PatternKind::PuncturedOdd, 5),
        ] {
            let gs = ground_state_scattering(kind, n).unwrap();
            let space = &gs.space;
            let h0 = op_h0(space);
            let at_one: Vec<Poly> = gs
                .eval(1)
                .into_iter()
                .map(Poly::constant_big)
                .collect();
            let img = h0.apply(&at_one);
            assert!(
                img.iter().all(|c| c.is_zero()),
                "H0 Psi(1) != 0 for {kind} N={n}"
            );
        }
    }

    #[test]
    fn t0_recursion_small() {
        for (kind, n) in [
            (PatternKind::Plain, 6),
            (PatternKind::PuncturedEven, 6),
            (PatternKind::PuncturedOdd, 5),
        ] {
            let gs = ground_state_scattering(kind, n).unwrap();
            let r = check_t0_recursion(&gs);
            assert!(r.ok(), "{r:?}");
        }
    }

    #[test]
    fn site_shift_consistency() {
        let gs = ground_state_scattering(PatternKind::Plain, 6).unwrap();
        let g2 = gs.at_site(2);
        // X_2 Psi^(2) = R Psi^(2)
        let lhs = op_x(&g2.space, 2).apply(&g2.coeffs);
        let rhs = op_r(&g2.space, 1).apply(&g2.coeffs);
        assert_eq!(lhs, rhs);
    }
}
