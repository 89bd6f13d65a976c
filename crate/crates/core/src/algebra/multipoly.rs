//! Sparse multivariate polynomials over the rationals.
//!
//! Terms are stored in a `BTreeMap` keyed by exponent vectors under
//! graded-lexicographic order (earlier variables are larger, so with
//! variables `["x","y","z"]` we get x > y > z). No zero coefficients are
//! stored; the zero polynomial has an empty term map.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use super::rational::{format_rational, rational_gcd, Rational};

/// Exponent vector with graded-lexicographic ordering.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct Mono(pub Vec<u32>);

impl Mono {
    fn total(&self) -> u32 {
        self.0.iter().sum()
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.total()
            .cmp(&other.total())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Errors from polynomial arithmetic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraError {
    /// Operation received an identically zero input it cannot handle.
    ZeroInput,
    /// `exact_divide` found no exact quotient.
    NotDivisible,
    /// Operands live in different polynomial rings.
    VariableMismatch,
    /// A variable name is not part of the ring.
    UnknownVariable(String),
}

impl fmt::Display for AlgebraError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraError::ZeroInput => write!(f, "polynomial is identically zero"),
            AlgebraError::NotDivisible => write!(f, "no exact polynomial quotient exists"),
            AlgebraError::VariableMismatch => write!(f, "polynomials have different variable sets"),
            AlgebraError::UnknownVariable(v) => write!(f, "unknown variable `{v}`"),
        }
    }
}

impl std::error::Error for AlgebraError {}

/// Sparse multivariate polynomial over the rationals.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MultiPoly {
    vars: Vec<String>,
    terms: BTreeMap<Mono, Rational>,
}

impl MultiPoly {
    /// The zero polynomial in the given ring.
    pub fn zero(vars: &[&str]) -> Self {
        MultiPoly {
            vars: vars.iter().map(|s| s.to_string()).collect(),
            terms: BTreeMap::new(),
        }
    }

    pub fn zero_like(&self) -> Self {
        MultiPoly {
            vars: self.vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &[&str], c: Rational) -> Self {
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(Mono(vec![0; p.vars.len()]), c);
        }
        p
    }

    pub fn one(vars: &[&str]) -> Self {
        Self::constant(vars, Rational::one())
    }

    /// The polynomial consisting of the single variable `name`.
    pub fn var(vars: &[&str], name: &str) -> Result<Self, AlgebraError> {
        let mut p = Self::zero(vars);
        let idx = p
            .vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| AlgebraError::UnknownVariable(name.to_string()))?;
        let mut e = vec![0; p.vars.len()];
        e[idx] = 1;
        p.terms.insert(Mono(e), Rational::one());
        Ok(p)
    }

    /// Builds a polynomial from raw (exponents, coefficient) pairs.
    pub fn from_terms(vars: &[&str], terms: &[(&[u32], Rational)]) -> Self {
        let mut p = Self::zero(vars);
        for (e, c) in terms {
            assert_eq!(e.len(), p.vars.len(), "exponent vector length mismatch");
            p.add_term(Mono(e.to_vec()), c.clone());
        }
        p
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Result<usize, AlgebraError> {
        self.vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| AlgebraError::UnknownVariable(name.to_string()))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.keys().next().unwrap().total() == 0)
    }

    /// Constant value when `is_constant`, otherwise `None`.
    pub fn constant_value(&self) -> Option<Rational> {
        if self.terms.is_empty() {
            return Some(Rational::zero());
        }
        if self.is_constant() {
            return Some(self.terms.values().next().unwrap().clone());
        }
        None
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &Rational)> {
        self.terms.iter()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.total()).max().unwrap_or(0)
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|m| m.0[var]).max().unwrap_or(0)
    }

    /// `Some(d)` when every term has total degree `d` (zero counts as any
    /// degree and reports `Some(0)`).
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys();
        let d = match it.next() {
            None => return Some(0),
            Some(m) => m.total(),
        };
        it.all(|m| m.total() == d).then_some(d)
    }

    fn add_term(&mut self, m: Mono, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().clone() + c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    fn check_ring(&self, other: &Self) -> Result<(), AlgebraError> {
        if self.vars == other.vars {
            Ok(())
        } else {
            Err(AlgebraError::VariableMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_ring(other).expect("ring mismatch in add");
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        let mut out = self.zero_like();
        for (m, c) in &self.terms {
            out.terms.insert(m.clone(), -c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return self.zero_like();
        }
        let mut out = self.zero_like();
        for (m, k) in &self.terms {
            out.terms.insert(m.clone(), k * c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_ring(other).expect("ring mismatch in mul");
        let mut out = self.zero_like();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let e: Vec<u32> = ma.0.iter().zip(&mb.0).map(|(a, b)| a + b).collect();
                out.add_term(Mono(e), ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, mut n: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.vars.iter().map(|s| s.as_str()).collect::<Vec<_>>());
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.vars.len());
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (e, v) in m.0.iter().zip(point) {
                for _ in 0..*e {
                    t *= v;
                }
            }
            acc += t;
        }
        acc
    }

    /// Substitutes a constant for one variable, staying in the same ring.
    pub fn eval_partial(&self, var: usize, value: &Rational) -> Self {
        let mut out = self.zero_like();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for _ in 0..m.0[var] {
                t *= value;
            }
            let mut e = m.0.clone();
            e[var] = 0;
            out.add_term(Mono(e), t);
        }
        out
    }

    pub fn derivative(&self, var: usize) -> Self {
        let mut out = self.zero_like();
        for (m, c) in &self.terms {
            if m.0[var] == 0 {
                continue;
            }
            let mut e = m.0.clone();
            let k = e[var];
            e[var] -= 1;
            out.add_term(Mono(e), c * Rational::from_integer(k.into()));
        }
        out
    }

    /// Exact composition: replaces each bound variable by its image.
    ///
    /// All non-constant images must live in one common ring; unbound
    /// variables pass through and must exist in that ring. When every image
    /// is constant the target ring is the source ring.
    pub fn substitute(
        &self,
        bindings: &BTreeMap<String, MultiPoly>,
    ) -> Result<MultiPoly, AlgebraError> {
        let target_vars: Vec<String> = bindings
            .values()
            .find(|p| !p.is_constant())
            .map(|p| p.vars.clone())
            .unwrap_or_else(|| self.vars.clone());
        let tv: Vec<&str> = target_vars.iter().map(|s| s.as_str()).collect();

        // One image per source variable, in the target ring.
        let mut images: Vec<MultiPoly> = Vec::with_capacity(self.vars.len());
        for v in &self.vars {
            match bindings.get(v) {
                Some(img) => {
                    if img.is_constant() {
                        images.push(MultiPoly::constant(&tv, img.constant_value().unwrap()));
                    } else if img.vars == target_vars {
                        images.push(img.clone());
                    } else {
                        return Err(AlgebraError::VariableMismatch);
                    }
                }
                None => {
                    if self.degree_in(self.var_index(v)?) == 0 {
                        images.push(MultiPoly::zero(&tv));
                    } else {
                        images.push(MultiPoly::var(&tv, v)?);
                    }
                }
            }
        }

        // Cache powers of each image.
        let mut power_cache: Vec<Vec<MultiPoly>> =
            images.iter().map(|img| vec![MultiPoly::one(&tv), img.clone()]).collect();
        let power = |var: usize, e: u32, cache: &mut Vec<Vec<MultiPoly>>| -> MultiPoly {
            while cache[var].len() <= e as usize {
                let last = cache[var].last().unwrap().clone();
                cache[var].push(last.mul(&images[var]));
            }
            cache[var][e as usize].clone()
        };

        let mut acc = MultiPoly::zero(&tv);
        for (m, c) in &self.terms {
            let mut t = MultiPoly::constant(&tv, c.clone());
            for (var, e) in m.0.iter().enumerate() {
                if *e > 0 {
                    t = t.mul(&power(var, *e, &mut power_cache));
                }
            }
            acc = acc.add(&t);
        }
        Ok(acc)
    }

    /// Substitutes `var := var + c` (affine translation).
    pub fn translate(&self, var: usize, c: &Rational) -> Self {
        let tv: Vec<&str> = self.vars.iter().map(|s| s.as_str()).collect();
        let shifted = MultiPoly::var(&tv, &self.vars[var])
            .unwrap()
            .add(&MultiPoly::constant(&tv, c.clone()));
        let mut b = BTreeMap::new();
        b.insert(self.vars[var].clone(), shifted);
        self.substitute(&b).unwrap()
    }

    /// Positive rational `c` such that `self / c` has coprime integer
    /// coefficients; zero for the zero polynomial.
    pub fn content(&self) -> Rational {
        let mut g = Rational::zero();
        for c in self.terms.values() {
            g = rational_gcd(&g, c);
        }
        g
    }

    pub fn leading(&self) -> Option<(&Mono, &Rational)> {
        self.terms.iter().next_back()
    }

    /// Content removed and sign normalized: the graded-lex leading
    /// coefficient is positive.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = self.content();
        if self.leading().unwrap().1.is_negative() {
            c = -c;
        }
        self.scale(&c.recip())
    }

    /// Order of vanishing at the origin: minimal total degree of a term.
    pub fn order_at_origin(&self) -> u32 {
        self.terms.keys().map(|m| m.total()).min().unwrap_or(0)
    }

    /// Exact quotient `self / b`, or `NotDivisible`.
    pub fn exact_divide(&self, b: &Self) -> Result<Self, AlgebraError> {
        self.check_ring(b)?;
        if b.is_zero() {
            return Err(AlgebraError::ZeroInput);
        }
        let mut rem = self.clone();
        let mut quot = self.zero_like();
        let (lb_m, lb_c) = {
            let (m, c) = b.leading().unwrap();
            (m.clone(), c.clone())
        };
        while !rem.is_zero() {
            let (lr_m, lr_c) = {
                let (m, c) = rem.leading().unwrap();
                (m.clone(), c.clone())
            };
            // Leading-term divisibility check.
            let mut e = Vec::with_capacity(lr_m.0.len());
            for (a, b) in lr_m.0.iter().zip(&lb_m.0) {
                if a < b {
                    return Err(AlgebraError::NotDivisible);
                }
                e.push(a - b);
            }
            let cq = lr_c / &lb_c;
            let mono = Mono(e);
            quot.add_term(mono.clone(), cq.clone());
            let mut t = self.zero_like();
            t.terms.insert(mono, cq);
            rem = rem.sub(&t.mul(b));
        }
        Ok(quot)
    }

    /// Divides by `b` as often as possible; returns (residual, exponent).
    pub fn divide_out_all(&self, b: &Self) -> (Self, u32) {
        let mut cur = self.clone();
        let mut n = 0;
        if b.is_constant() {
            return (cur, 0);
        }
        while !cur.is_zero() {
            match cur.exact_divide(b) {
                Ok(q) => {
                    cur = q;
                    n += 1;
                }
                Err(_) => break,
            }
        }
        (cur, n)
    }

    /// Dense coefficient vector with respect to one variable; entries are
    /// polynomials in the same ring with that variable's exponent zeroed.
    pub fn coeffs_wrt(&self, var: usize) -> Vec<MultiPoly> {
        let d = self.degree_in(var) as usize;
        let mut out = vec![self.zero_like(); d + 1];
        for (m, c) in &self.terms {
            let k = m.0[var] as usize;
            let mut e = m.0.clone();
            e[var] = 0;
            out[k].add_term(Mono(e), c.clone());
        }
        out
    }

    pub fn from_coeffs_wrt(&self, var: usize, coeffs: &[MultiPoly]) -> MultiPoly {
        let mut out = self.zero_like();
        for (k, c) in coeffs.iter().enumerate() {
            for (m, coef) in &c.terms {
                let mut e = m.0.clone();
                e[var] += k as u32;
                out.add_term(Mono(e), coef.clone());
            }
        }
        out
    }

    /// Dense rational coefficients when the polynomial involves only `var`.
    pub fn to_univariate(&self, var: usize) -> Option<Vec<Rational>> {
        let mut out = vec![Rational::zero(); self.degree_in(var) as usize + 1];
        for (m, c) in &self.terms {
            for (i, e) in m.0.iter().enumerate() {
                if i != var && *e > 0 {
                    return None;
                }
            }
            out[m.0[var] as usize] = c.clone();
        }
        Some(out)
    }

    /// Content with respect to one variable: gcd of the `coeffs_wrt` entries.
    fn content_wrt(&self, var: usize) -> MultiPoly {
        let mut g = self.zero_like();
        for c in self.coeffs_wrt(var) {
            if !c.is_zero() {
                g = gcd(&g, &c);
            }
            if g.is_constant() && !g.is_zero() {
                break;
            }
        }
        g
    }

    /// Standard pseudo-remainder: lc(b)^(deg a - deg b + 1) · a mod b, in
    /// the variable `var`. Requires deg_var(a) >= deg_var(b) >= 1.
    fn pseudo_rem(&self, b: &Self, var: usize) -> MultiPoly {
        let db = b.degree_in(var);
        let da = self.degree_in(var);
        debug_assert!(da >= db && db >= 1);
        let lb = b.coeffs_wrt(var)[db as usize].clone();
        let tv: Vec<&str> = self.vars.iter().map(|s| s.as_str()).collect();
        let x = MultiPoly::var(&tv, &self.vars[var]).unwrap();
        let mut r = self.clone();
        let mut steps = 0;
        while !r.is_zero() && r.degree_in(var) >= db {
            let dr = r.degree_in(var);
            let lr = r.coeffs_wrt(var)[dr as usize].clone();
            r = r.mul(&lb).sub(&b.mul(&lr).mul(&x.pow(dr - db)));
            steps += 1;
        }
        // Normalize to the exact lc^(da - db + 1) multiple.
        let expected = da - db + 1;
        if steps < expected {
            r = r.mul(&lb.pow(expected - steps));
        }
        r
    }
}

/// Greatest common divisor, primitive and sign-normalized.
///
/// Subresultant polynomial remainder sequences with recursive content
/// extraction on the inputs and the final remainder only. Cheap quick
/// paths handle the common cases where one argument divides the other.
pub fn gcd(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    assert_eq!(a.vars, b.vars, "ring mismatch in gcd");
    if a.is_zero() {
        return b.primitive_part();
    }
    if b.is_zero() {
        return a.primitive_part();
    }
    if a.is_constant() || b.is_constant() {
        let tv: Vec<&str> = a.vars.iter().map(|s| s.as_str()).collect();
        return MultiPoly::one(&tv);
    }
    // Quick paths: one argument dividing the other.
    if a.num_terms() <= b.num_terms() && b.exact_divide(a).is_ok() {
        return a.primitive_part();
    }
    if b.num_terms() <= a.num_terms() && a.exact_divide(b).is_ok() {
        return b.primitive_part();
    }
    // Main variable: first index where both have positive degree.
    let var = (0..a.vars.len()).find(|&v| a.degree_in(v) > 0 && b.degree_in(v) > 0);
    let var = match var {
        Some(v) => v,
        None => {
            // No shared variable: common divisors are constants.
            let tv: Vec<&str> = a.vars.iter().map(|s| s.as_str()).collect();
            return MultiPoly::one(&tv);
        }
    };

    let ca = a.content_wrt(var);
    let cb = b.content_wrt(var);
    let pa = a.exact_divide(&ca).expect("content divides");
    let pb = b.exact_divide(&cb).expect("content divides");
    let cont_gcd = gcd(&ca, &cb);

    let (mut r0, mut r1) = if pa.degree_in(var) >= pb.degree_in(var) {
        (pa, pb)
    } else {
        (pb, pa)
    };
    // Collins' subresultant scaling keeps intermediate coefficients
    // divided down without per-step content extraction.
    let tv: Vec<&str> = a.vars.iter().map(|s| s.as_str()).collect();
    let mut g = MultiPoly::one(&tv);
    let mut h = MultiPoly::one(&tv);
    loop {
        let delta = r0.degree_in(var) - r1.degree_in(var);
        let r = r0.pseudo_rem(&r1, var);
        if r.is_zero() {
            break;
        }
        if r.degree_in(var) == 0 {
            // Coprime in the main variable.
            return cont_gcd.primitive_part();
        }
        let divisor = g.mul(&h.pow(delta));
        let r = r
            .exact_divide(&divisor)
            .expect("subresultant divisor divides");
        g = r1.coeffs_wrt(var)[r1.degree_in(var) as usize].clone();
        h = if delta == 0 {
            h
        } else {
            // h := g^delta / h^(delta - 1), an exact division.
            g.pow(delta)
                .exact_divide(&h.pow(delta - 1))
                .expect("subresultant h update divides")
        };
        r0 = r1;
        r1 = r;
        // Numeric content strip keeps integers small; harmless for the
        // subresultant bookkeeping up to rational factors.
        let c = r1.content();
        if !c.is_zero() && !c.is_one() {
            r1 = r1.scale(&c.recip());
        }
    }
    let prim = r1
        .exact_divide(&r1.content_wrt(var))
        .expect("content divides");
    cont_gcd.mul(&prim).primitive_part()
}

/// Sylvester resultant of `a` and `b` eliminating `var`, computed by
/// fraction-free (Bareiss) elimination on the Sylvester matrix.
pub fn resultant(a: &MultiPoly, b: &MultiPoly, var: usize) -> Result<MultiPoly, AlgebraError> {
    a.check_ring(b)?;
    if a.is_zero() || b.is_zero() {
        return Err(AlgebraError::ZeroInput);
    }
    let m = a.degree_in(var) as usize;
    let n = b.degree_in(var) as usize;
    let tv: Vec<&str> = a.vars.iter().map(|s| s.as_str()).collect();
    if m == 0 && n == 0 {
        return Ok(MultiPoly::one(&tv));
    }
    if m == 0 {
        return Ok(a.pow(n as u32));
    }
    if n == 0 {
        return Ok(b.pow(m as u32));
    }
    let ca = a.coeffs_wrt(var);
    let cb = b.coeffs_wrt(var);
    let size = m + n;
    let zero = a.zero_like();
    let mut mat = vec![vec![zero.clone(); size]; size];
    // n rows of a's coefficients, highest degree first.
    for (row, item) in mat.iter_mut().enumerate().take(n) {
        for k in 0..=m {
            item[row + k] = ca[m - k].clone();
        }
    }
    // m rows of b's coefficients.
    for row in 0..m {
        for k in 0..=n {
            mat[n + row][row + k] = cb[n - k].clone();
        }
    }
    bareiss_determinant(mat, &zero)
}

/// Fraction-free determinant; entries must come from an integral domain with
/// exact division (polynomials qualify).
fn bareiss_determinant(mut m: Vec<Vec<MultiPoly>>, zero: &MultiPoly) -> Result<MultiPoly, AlgebraError> {
    let n = m.len();
    if n == 0 {
        let tv: Vec<&str> = zero.vars().iter().map(|s| s.as_str()).collect();
        return Ok(MultiPoly::one(&tv));
    }
    let tv: Vec<&str> = zero.vars().iter().map(|s| s.as_str()).collect();
    let mut prev = MultiPoly::one(&tv);
    let mut sign = 1i32;
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let swap = (k + 1..n).find(|&i| !m[i][k].is_zero());
            match swap {
                Some(i) => {
                    m.swap(k, i);
                    sign = -sign;
                }
                None => return Ok(zero.clone()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = m[k][k].mul(&m[i][j]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = t.exact_divide(&prev)?;
            }
            m[i][k] = zero.clone();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    Ok(if sign < 0 { det.neg() } else { det })
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if m.total() == 0 || !mag.is_one() {
                factors.push(format_rational(&mag));
            }
            for (i, e) in m.0.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(self.vars[i].clone()),
                    _ => factors.push(format!("{}^{}", self.vars[i], e)),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parser::parse_poly;
    use crate::algebra::rational::rat;

    const XYZ: [&str; 3] = ["x", "y", "z"];

    fn p(s: &str) -> MultiPoly {
        parse_poly(s, &XYZ).unwrap()
    }

    #[test]
    fn gcd_examples() {
        // gcd(x^2 - y^2, x - y) = x - y
        assert_eq!(gcd(&p("x^2 - y^2"), &p("x - y")), p("x - y"));
        // gcd(F, 0) = primitive_part(F)
        let f = p("2*x^2 + 4*y");
        assert_eq!(gcd(&f, &MultiPoly::zero(&XYZ)), p("x^2 + 2*y"));
        // gcd(x^2(xz + 2y^2), x^3 y) = x^2
        assert_eq!(
            gcd(&p("x^2*(x*z + 2*y^2)"), &p("x^3*y")),
            p("x^2")
        );
    }

    #[test]
    fn gcd_divides_both_and_respects_cofactors() {
        let a = p("(x + y)*(x^2 - z)");
        let b = p("(x + y)*(y + z)");
        let g = gcd(&a, &b);
        assert_eq!(g, p("x + y"));
        assert!(a.exact_divide(&g).is_ok());
        assert!(b.exact_divide(&g).is_ok());
        // gcd(a c, b c) = gcd(a, b) * c up to sign for primitive c.
        let c = p("x - 2*z");
        let lhs = gcd(&a.mul(&c), &b.mul(&c));
        assert_eq!(lhs, g.mul(&c).primitive_part());
    }

    #[test]
    fn resultant_examples() {
        let x = 0;
        // res_x(x - y, x + y) = 2y
        assert_eq!(resultant(&p("x - y"), &p("x + y"), x).unwrap(), p("2*y"));
        // res_y(y^2 - x, y) = -x, the sign fixed by the Sylvester determinant.
        let y = 1;
        assert_eq!(resultant(&p("y^2 - x"), &p("y"), y).unwrap(), p("-x"));
        assert!(resultant(&p("x"), &MultiPoly::zero(&XYZ), x).is_err());
    }

    #[test]
    fn resultant_vanishes_iff_common_factor_in_var() {
        let a = p("(x - y)*(x + z)");
        let b = p("(x - y)*(x - 2*z)");
        assert!(resultant(&a, &b, 0).unwrap().is_zero());
        let c = p("x + 3*z");
        assert!(!resultant(&a, &c, 0).unwrap().is_zero());
    }

    #[test]
    fn exact_divide_examples() {
        assert_eq!(p("x^2 - y^2").exact_divide(&p("x - y")).unwrap(), p("x + y"));
        assert_eq!(
            p("x^2 + y^2").exact_divide(&p("x - y")),
            Err(AlgebraError::NotDivisible)
        );
        // For all a, b: (a*b)/b = a.
        let a = p("x^3 - 2*x*y*z + 7*z^3 - 1/2*y");
        let b = p("x*z + y^2");
        assert_eq!(a.mul(&b).exact_divide(&b).unwrap(), a);
    }

    #[test]
    fn substitute_is_composition() {
        // Dehomogenization.
        let f = p("x^2*z - y^3");
        let mut bind = BTreeMap::new();
        bind.insert("z".to_string(), MultiPoly::one(&XYZ));
        assert_eq!(f.substitute(&bind).unwrap(), p("x^2 - y^3"));

        // The first quintic-gallery substitution: z ∘ [x^2 : xy : xz + y^2].
        let mut bind = BTreeMap::new();
        bind.insert("x".to_string(), p("x^2"));
        bind.insert("y".to_string(), p("x*y"));
        bind.insert("z".to_string(), p("x*z + y^2"));
        assert_eq!(p("z").substitute(&bind).unwrap(), p("x*z + y^2"));

        // Ring homomorphism on a sample pair.
        let g = p("x*y - z^2 + 1");
        let sum = f.add(&g).substitute(&bind).unwrap();
        assert_eq!(sum, f.substitute(&bind).unwrap().add(&g.substitute(&bind).unwrap()));
        let prod = f.mul(&g).substitute(&bind).unwrap();
        assert_eq!(prod, f.substitute(&bind).unwrap().mul(&g.substitute(&bind).unwrap()));
    }

    #[test]
    fn blow_up_chart_divisibility() {
        // substitute x -> x*y into x^2 - y^3 and strip y powers, as in
        // blow-up charts.
        let f = p("x^2 - y^3");
        let mut bind = BTreeMap::new();
        bind.insert("x".to_string(), p("x*y"));
        let tot = f.substitute(&bind).unwrap();
        assert_eq!(tot, p("x^2*y^2 - y^3"));
        let (strict, e) = tot.divide_out_all(&p("y"));
        assert_eq!(e, 2);
        assert_eq!(strict, p("x^2 - y"));
    }

    #[test]
    fn primitive_part_sign_normalization() {
        assert_eq!(p("-2*x + 4*y").primitive_part(), p("x - 2*y"));
        assert_eq!(p("3/2*x^2").primitive_part(), p("x^2"));
    }

    #[test]
    fn display_round_trip() {
        let f = p("x^2*z - y^3 + 1/2*x - 7");
        let s = f.to_string();
        assert_eq!(s, "x^2*z - y^3 + 1/2*x - 7");
        assert_eq!(parse_poly(&s, &XYZ).unwrap(), f);
    }
}
