//! Exact arithmetic substrate: arbitrary-precision integer polynomials in t,
//! sparse polynomial matrices, and fraction-free nullspace computation.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::de::Error as DeError;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Dense univariate polynomial in t with BigInt coefficients.
/// Canonical form: no trailing zero coefficient; the zero polynomial has an
/// empty coefficient vector (its degree is None).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<BigInt>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Poly::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Poly::from_coeffs(vec![BigInt::from(c)])
    }

    pub fn constant_big(c: BigInt) -> Self {
        Poly::from_coeffs(vec![c])
    }

    /// t^k with coefficient c.
    pub fn monomial(c: i64, k: usize) -> Self {
        let mut v = vec![BigInt::zero(); k + 1];
        v[k] = BigInt::from(c);
        Poly::from_coeffs(v)
    }

    /// The variable t.
    pub fn t() -> Self {
        Poly::monomial(1, 1)
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial ("minus infinity").
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    /// Lowest-index nonzero coefficient (None for zero).
    pub fn trailing(&self) -> Option<&BigInt> {
        self.coeffs.iter().find(|c| !c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// True when the polynomial is c*t^k for a single k.
    pub fn is_monomial(&self) -> bool {
        self.coeffs.iter().filter(|c| !c.is_zero()).count() == 1
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for k in 0..n {
            v.push(self.coeff(k) + other.coeff(k));
        }
        Poly::from_coeffs(v)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for k in 0..n {
            v.push(self.coeff(k) - other.coeff(k));
        }
        Poly::from_coeffs(v)
    }

    pub fn neg(&self) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    v[i + j] += a * b;
                }
            }
        }
        Poly::from_coeffs(v)
    }

    pub fn mul_scalar(&self, c: &BigInt) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn shift(&self, k: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![BigInt::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        Poly::from_coeffs(v)
    }

    /// t^d * p(1/t) for d = max(deg, given degree bound).
    pub fn reverse(&self, d: usize) -> Poly {
        let mut v = vec![BigInt::zero(); d + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            assert!(k <= d, "reverse degree bound too small");
            v[d - k] = c.clone();
        }
        Poly::from_coeffs(v)
    }

    pub fn eval_i64(&self, x: i64) -> BigInt {
        self.eval_int(&BigInt::from(x))
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Coefficient vector evaluated at t=1 (sum of coefficients).
    pub fn eval_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// GCD of the integer coefficients, nonnegative; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Exact division; None if the division leaves a remainder.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(Poly::zero());
        }
        let dd = d.degree().unwrap();
        let nd = self.degree().unwrap();
        if nd < dd {
            return None;
        }
        let mut rem = self.coeffs.clone();
        let mut q = vec![BigInt::zero(); nd - dd + 1];
        let lead = d.leading();
        for k in (0..=nd - dd).rev() {
            let top = rem[k + dd].clone();
            if top.is_zero() {
                continue;
            }
            let (quot, r) = top.div_rem(&lead);
            if !r.is_zero() {
                return None;
            }
            q[k] = quot.clone();
            for (j, c) in d.coeffs.iter().enumerate() {
                rem[k + j] -= &quot * c;
            }
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Poly::from_coeffs(q))
    }

    /// Pseudo-remainder of self by d (fraction-free Euclidean step).
    fn pseudo_rem(&self, d: &Poly) -> Poly {
        let mut r = self.clone();
        let dd = d.degree().unwrap();
        let lead = d.leading();
        while let Some(rd) = r.degree() {
            if rd < dd {
                break;
            }
            let c = r.leading();
            let mut next = r.mul_scalar(&lead);
            let sub = d.mul_scalar(&c).shift(rd - dd);
            next = next.sub(&sub);
            debug_assert!(next.degree().map_or(true, |nd| nd < rd));
            r = next;
        }
        r
    }
}

/// GCD in Z[t], primitive with positive leading coefficient (times the integer
/// content gcd of the inputs).
pub fn poly_gcd(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() {
        return abs_normalize(b.clone());
    }
    if b.is_zero() {
        return abs_normalize(a.clone());
    }
    let content = a.content().gcd(&b.content());
    let mut p = primitive_part(a);
    let mut q = primitive_part(b);
    if p.degree() < q.degree() {
        std::mem::swap(&mut p, &mut q);
    }
    while !q.is_zero() {
        let r = primitive_part(&p.pseudo_rem(&q));
        p = q;
        q = r;
    }
    abs_normalize(primitive_part(&p).mul_scalar(&content))
}

fn primitive_part(p: &Poly) -> Poly {
    if p.is_zero() {
        return Poly::zero();
    }
    let c = p.content();
    p.div_exact(&Poly::constant_big(c)).unwrap()
}

fn abs_normalize(p: Poly) -> Poly {
    if p.leading().is_negative() {
        p.neg()
    } else {
        p
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            first = false;
            let a = c.abs();
            match k {
                0 => write!(f, "{}", a)?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{}*", a)?;
                    }
                    if k == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{}", k)?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({})", self)
    }
}

impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct P {
            coeffs: Vec<String>,
        }
        P {
            coeffs: self.coeffs.iter().map(|c| c.to_string()).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Poly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct P {
            coeffs: Vec<String>,
        }
        let p = P::deserialize(d)?;
        let mut v = Vec::with_capacity(p.coeffs.len());
        for s in &p.coeffs {
            v.push(
                s.parse::<BigInt>()
                    .map_err(|e| D::Error::custom(format!("bad coefficient {s:?}: {e}")))?,
            );
        }
        Ok(Poly::from_coeffs(v))
    }
}

pub fn poly_arith(a: &Poly, b: &Poly, op: &str) -> Poly {
    match op {
        "add" => a.add(b),
        "sub" => a.sub(b),
        "mul" => a.mul(b),
        _ => panic!("unknown op {op:?}"),
    }
}

/// Divide out the common polynomial GCD (including integer content) of a
/// vector of polynomials, then flip the global sign so the lowest-order
/// nonzero coefficient of the first nonzero entry is positive.
/// Returns (normalized vector, removed scale) with v = scale * normalized.
pub fn poly_content_normalize(v: &[Poly]) -> Result<(Vec<Poly>, Poly), String> {
    let mut g = Poly::zero();
    for p in v {
        g = poly_gcd(&g, p);
        if g.is_one() {
            break;
        }
    }
    if g.is_zero() {
        return Err("all-zero vector has no normalization".into());
    }
    let mut out: Vec<Poly> = v.iter().map(|p| p.div_exact(&g).unwrap()).collect();
    let flip = out
        .iter()
        .find(|p| !p.is_zero())
        .and_then(|p| p.trailing())
        .map_or(false, |c| c.is_negative());
    let mut scale = g;
    if flip {
        for p in out.iter_mut() {
            *p = p.neg();
        }
        scale = scale.neg();
    }
    Ok((out, scale))
}

/// Sparse matrix of polynomials keyed by (row, col); zero entries are absent.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyMatrix {
    pub rows: usize,
    pub cols: usize,
    entries: BTreeMap<(usize, usize), Poly>,
}

impl PolyMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        PolyMatrix {
            rows,
            cols,
            entries: BTreeMap::new(),
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = PolyMatrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, Poly::one());
        }
        m
    }

    pub fn set(&mut self, r: usize, c: usize, p: Poly) {
        assert!(r < self.rows && c < self.cols);
        if p.is_zero() {
            self.entries.remove(&(r, c));
        } else {
            self.entries.insert((r, c), p);
        }
    }

    pub fn get(&self, r: usize, c: usize) -> Poly {
        self.entries.get(&(r, c)).cloned().unwrap_or_else(Poly::zero)
    }

    pub fn add_to(&mut self, r: usize, c: usize, p: &Poly) {
        let cur = self.get(r, c);
        self.set(r, c, cur.add(p));
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(usize, usize), &Poly)> {
        self.entries.iter()
    }

    pub fn add(&self, other: &PolyMatrix) -> PolyMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (&(r, c), p) in other.entries.iter() {
            out.add_to(r, c, p);
        }
        out
    }

    pub fn sub(&self, other: &PolyMatrix) -> PolyMatrix {
        self.add(&other.scale(&Poly::constant(-1)))
    }

    pub fn scale(&self, p: &Poly) -> PolyMatrix {
        let mut out = PolyMatrix::zero(self.rows, self.cols);
        for (&(r, c), q) in self.entries.iter() {
            out.set(r, c, q.mul(p));
        }
        out
    }

    pub fn matmul(&self, other: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = PolyMatrix::zero(self.rows, other.cols);
        for (&(r, k), p) in self.entries.iter() {
            for (&(_, c), q) in other.entries.range((k, 0)..(k + 1, 0)) {
                out.add_to(r, c, &p.mul(q));
            }
        }
        out
    }

    pub fn apply(&self, v: &[Poly]) -> Vec<Poly> {
        assert_eq!(self.cols, v.len());
        let mut out = vec![Poly::zero(); self.rows];
        for (&(r, c), p) in self.entries.iter() {
            if !v[c].is_zero() {
                out[r] = out[r].add(&p.mul(&v[c]));
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn transpose(&self) -> PolyMatrix {
        let mut out = PolyMatrix::zero(self.cols, self.rows);
        for (&(r, c), p) in self.entries.iter() {
            out.set(c, r, p.clone());
        }
        out
    }
}

/// Rational function num/den used internally for back-substitution.
#[derive(Clone, Debug)]
struct RatPoly {
    num: Poly,
    den: Poly,
}

impl RatPoly {
    fn zero() -> Self {
        RatPoly {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    fn from_poly(p: Poly) -> Self {
        RatPoly {
            num: p,
            den: Poly::one(),
        }
    }

    fn normalize(mut self) -> Self {
        if self.num.is_zero() {
            return RatPoly::zero();
        }
        let g = poly_gcd(&self.num, &self.den);
        self.num = self.num.div_exact(&g).unwrap();
        self.den = self.den.div_exact(&g).unwrap();
        if self.den.leading().is_negative() {
            self.num = self.num.neg();
            self.den = self.den.neg();
        }
        self
    }

    fn add(&self, o: &RatPoly) -> RatPoly {
        RatPoly {
            num: self.num.mul(&o.den).add(&o.num.mul(&self.den)),
            den: self.den.mul(&o.den),
        }
        .normalize()
    }

    fn mul(&self, o: &RatPoly) -> RatPoly {
        RatPoly {
            num: self.num.mul(&o.num),
            den: self.den.mul(&o.den),
        }
        .normalize()
    }

    fn div(&self, o: &RatPoly) -> RatPoly {
        assert!(!o.num.is_zero());
        RatPoly {
            num: self.num.mul(&o.den),
            den: self.den.mul(&o.num),
        }
        .normalize()
    }

    fn neg(&self) -> RatPoly {
        RatPoly {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
}

/// Basis of the right nullspace of m over Q(t), each vector cleared of
/// denominators and content-normalized. Fraction-free (Bareiss) forward
/// elimination, rational back-substitution.
pub fn nullspace_poly(m: &PolyMatrix) -> Vec<Vec<Poly>> {
    let rows = m.rows;
    let cols = m.cols;
    let mut a: Vec<Vec<Poly>> = (0..rows)
        .map(|r| (0..cols).map(|c| m.get(r, c)).collect())
        .collect();

    // Bareiss elimination with column pivoting bookkeeping.
    let mut pivot_cols: Vec<usize> = Vec::new();
    let mut prev = Poly::one();
    let mut row = 0;
    for col in 0..cols {
        // find pivot in this column at or below `row`
        let Some(pr) = (row..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(row, pr);
        for r in row + 1..rows {
            for c in col + 1..cols {
                let t1 = a[row][col].mul(&a[r][c]);
                let t2 = a[r][col].mul(&a[row][c]);
                a[r][c] = t1.sub(&t2).div_exact(&prev).expect("Bareiss exact division");
            }
            a[r][col] = Poly::zero();
        }
        prev = a[row][col].clone();
        pivot_cols.push(col);
        row += 1;
        if row == rows {
            break;
        }
    }

    let rank = pivot_cols.len();
    let is_pivot: Vec<bool> = {
        let mut v = vec![false; cols];
        for &c in &pivot_cols {
            v[c] = true;
        }
        v
    };

    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !is_pivot[*c]) {
        let mut x: Vec<RatPoly> = (0..cols).map(|_| RatPoly::zero()).collect();
        x[free] = RatPoly::from_poly(Poly::one());
        for i in (0..rank).rev() {
            let pc = pivot_cols[i];
            let mut acc = RatPoly::zero();
            for c in pc + 1..cols {
                if !a[i][c].is_zero() && !x[c].num.is_zero() {
                    acc = acc.add(&RatPoly::from_poly(a[i][c].clone()).mul(&x[c]));
                }
            }
            x[pc] = acc.neg().div(&RatPoly::from_poly(a[i][pc].clone()));
        }
        // clear denominators: multiply by lcm of dens
        let mut lcm = Poly::one();
        for xi in &x {
            if !xi.num.is_zero() {
                let g = poly_gcd(&lcm, &xi.den);
                lcm = lcm.mul(&xi.den.div_exact(&g).unwrap());
            }
        }
        let cleared: Vec<Poly> = x
            .iter()
            .map(|xi| {
                if xi.num.is_zero() {
                    Poly::zero()
                } else {
                    xi.num.mul(&lcm.div_exact(&xi.den).unwrap())
                }
            })
            .collect();
        let (normalized, _) = poly_content_normalize(&cleared).expect("nontrivial vector");
        basis.push(normalized);
    }
    basis
}

/// Exact binomial coefficient; 0 for k < 0 or k > n. Panics on n < 0.
pub fn binomial(n: i64, k: i64) -> BigInt {
    assert!(n >= 0, "binomial: negative n");
    if k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for j in 0..k {
        num *= n - j;
        den *= j + 1;
    }
    num / den
}

/// Superfactorial Delta_n = prod_{k<n} k!.
pub fn superfactorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    let mut fact = BigInt::one();
    for k in 1..n {
        fact *= k;
        acc *= &fact;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> Poly {
        Poly::from_coeffs(cs.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn arith_examples() {
        // (1+t)*(1+t) = 1+2t+t^2
        assert_eq!(p(&[1, 1]).mul(&p(&[1, 1])), p(&[1, 2, 1]));
        // t + (-t) = 0 canonical
        assert_eq!(p(&[0, 1]).add(&p(&[0, -1])), Poly::zero());
        assert!(p(&[0, 1]).add(&p(&[0, -1])).coeffs().is_empty());
        // (1+t)(1+t+t^2) = 1+2t+2t^2+t^3
        assert_eq!(p(&[1, 1]).mul(&p(&[1, 1, 1])), p(&[1, 2, 2, 1]));
    }

    #[test]
    fn degree_sentinel() {
        assert_eq!(Poly::zero().degree(), None);
        assert_eq!(p(&[5]).degree(), Some(0));
        assert_eq!(p(&[0, 0, 3]).degree(), Some(2));
    }

    #[test]
    fn content_normalize_examples() {
        let (v, s) = poly_content_normalize(&[p(&[2, 2]), p(&[0, 4])]).unwrap();
        assert_eq!(v, vec![p(&[1, 1]), p(&[0, 2])]);
        assert_eq!(s, p(&[2]));

        let (v, s) = poly_content_normalize(&[p(&[1, 2, 1]), p(&[0, 1, 1])]).unwrap();
        assert_eq!(v, vec![p(&[1, 1]), p(&[0, 1])]);
        assert_eq!(s, p(&[1, 1]));

        let (v, s) = poly_content_normalize(&[p(&[0, 1]), p(&[1])]).unwrap();
        assert_eq!(v, vec![p(&[0, 1]), p(&[1])]);
        assert_eq!(s, p(&[1]));

        // sign convention
        let (v, s) = poly_content_normalize(&[p(&[-2]), p(&[4])]).unwrap();
        assert_eq!(v, vec![p(&[1]), p(&[-2])]);
        assert_eq!(s, p(&[-2]));
    }

    #[test]
    fn gcd_basics() {
        assert_eq!(poly_gcd(&p(&[1, 2, 1]), &p(&[0, 1, 1])), p(&[1, 1]));
        assert_eq!(poly_gcd(&p(&[6]), &p(&[4])), p(&[2]));
        assert_eq!(poly_gcd(&Poly::zero(), &p(&[0, -3])), p(&[0, 3]));
    }

    #[test]
    fn div_exact_and_rem() {
        assert_eq!(p(&[1, 2, 1]).div_exact(&p(&[1, 1])), Some(p(&[1, 1])));
        assert_eq!(p(&[1, 1, 1]).div_exact(&p(&[1, 1])), None);
        assert_eq!(p(&[2, 2]).div_exact(&p(&[2])), Some(p(&[1, 1])));
        assert_eq!(p(&[1, 1]).div_exact(&p(&[2])), None);
    }

    #[test]
    fn nullspace_trivial_cases() {
        assert!(nullspace_poly(&PolyMatrix::identity(3)).is_empty());
        let z = PolyMatrix::zero(3, 3);
        assert_eq!(nullspace_poly(&z).len(), 3);
    }

    #[test]
    fn nullspace_small_system() {
        // [[t-1, 1], [t, -1]]: solution proportional to (1, 1-t)? check:
        // row1: (t-1)x + y = 0 -> y = (1-t)x; row2: t x - y = 0 -> y = t x.
        // Only consistent if x = 0: rank 2, trivial nullspace.
        let mut m = PolyMatrix::zero(2, 2);
        m.set(0, 0, p(&[-1, 1]));
        m.set(0, 1, p(&[1]));
        m.set(1, 0, p(&[0, 1]));
        m.set(1, 1, p(&[-1]));
        assert!(nullspace_poly(&m).is_empty());

        // Singular: [[t, -t^2], [1, -t]] has nullspace spanned by (t, 1).
        let mut m = PolyMatrix::zero(2, 2);
        m.set(0, 0, p(&[0, 1]));
        m.set(0, 1, p(&[0, 0, -1]));
        m.set(1, 0, p(&[1]));
        m.set(1, 1, p(&[0, -1]));
        let ns = nullspace_poly(&m);
        assert_eq!(ns.len(), 1);
        assert_eq!(ns[0], vec![p(&[0, 1]), p(&[1])]);
    }

    #[test]
    fn nullspace_vectors_annihilate() {
        // pseudo-random small matrices with a planted kernel
        for seed in 0..20u64 {
            let mut state = seed.wrapping_mul(6364136223846793005).wrapping_add(1);
            let mut next = || {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                ((state >> 33) % 5) as i64 - 2
            };
            let n = 4;
            let mut m = PolyMatrix::zero(n, n);
            for r in 0..n - 1 {
                for c in 0..n {
                    m.set(r, c, p(&[next(), next()]));
                }
            }
            // last row = sum of the others, forcing rank deficiency in rows
            for c in 0..n {
                let mut s = Poly::zero();
                for r in 0..n - 1 {
                    s = s.add(&m.get(r, c));
                }
                m.set(n - 1, c, s);
            }
            for v in nullspace_poly(&m) {
                let out = m.apply(&v);
                assert!(out.iter().all(|q| q.is_zero()), "m*v != 0 for seed {seed}");
            }
        }
    }

    #[test]
    fn binomial_superfactorial() {
        assert_eq!(binomial(4, 2), BigInt::from(6));
        assert_eq!(binomial(3, -1), BigInt::zero());
        assert_eq!(binomial(3, 5), BigInt::zero());
        assert_eq!(superfactorial(4), BigInt::from(12));
        assert_eq!(superfactorial(0), BigInt::one());
        assert_eq!(superfactorial(1), BigInt::one());
    }

    #[test]
    fn serde_roundtrip() {
        let q = p(&[1, 0, -3]);
        let s = serde_json::to_string(&q).unwrap();
        assert_eq!(s, r#"{"coeffs":["1","0","-3"]}"#);
        let back: Poly = serde_json::from_str(&s).unwrap();
        assert_eq!(back, q);
    }
}
