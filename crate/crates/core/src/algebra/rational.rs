//! Rational number helpers: `p/q` parsing and printing, integer utilities,
//! and exact rational root extraction for univariate polynomials.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Exact rational number, always in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

/// Shorthand for a rational from two machine integers.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `"p"`, `"p/q"` or `"-p/q"` into a rational.
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = num
        .parse()
        .map_err(|_| format!("invalid numerator in rational `{s}`"))?;
    let d: BigInt = den
        .parse()
        .map_err(|_| format!("invalid denominator in rational `{s}`"))?;
    if d.is_zero() {
        return Err(format!("zero denominator in rational `{s}`"));
    }
    Ok(Rational::new(n, d))
}

/// Prints a rational as `p` or `p/q` (denominator omitted when 1).
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// gcd of two rationals in the content sense:
/// gcd(a/b, c/d) = gcd(a,c)/lcm(b,d), nonnegative.
pub fn rational_gcd(a: &Rational, b: &Rational) -> Rational {
    if a.is_zero() {
        return b.abs();
    }
    if b.is_zero() {
        return a.abs();
    }
    let num = a.numer().gcd(b.numer());
    let den = a.denom().lcm(b.denom());
    Rational::new(num, den)
}

fn mul_mod(a: u128, b: u128, m: u128) -> u128 {
    // m < 2^64 in all call sites, so the product fits u128.
    (a * b) % m
}

fn pow_mod(mut a: u128, mut e: u128, m: u128) -> u128 {
    let mut acc = 1u128;
    a %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, m);
        }
        a = mul_mod(a, a, m);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for n < 2^64.
fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a as u128, d as u128, n as u128);
        if x == 1 || x == (n - 1) as u128 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mul_mod(x, x, n as u128);
            if x == (n - 1) as u128 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Pollard's rho (Brent variant) for composite n < 2^64.
fn pollard_rho(n: u64) -> u64 {
    if n % 2 == 0 {
        return 2;
    }
    let n128 = n as u128;
    let mut c = 1u128;
    loop {
        let mut x = 2u128;
        let mut y = 2u128;
        let mut d = 1u64;
        while d == 1 {
            x = (mul_mod(x, x, n128) + c) % n128;
            y = (mul_mod(y, y, n128) + c) % n128;
            y = (mul_mod(y, y, n128) + c) % n128;
            let diff = if x > y { x - y } else { y - x };
            d = gcd_u64(diff as u64, n);
        }
        if d != n {
            return d;
        }
        c += 1;
    }
}

fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn factor_u64(n: u64, out: &mut Vec<u64>) {
    if n == 1 {
        return;
    }
    if is_prime_u64(n) {
        out.push(n);
        return;
    }
    let d = pollard_rho(n);
    factor_u64(d, out);
    factor_u64(n / d, out);
}

/// All positive divisors of `n` (|n| is used); `n` must be nonzero.
///
/// Factors fully when |n| fits in u64 pieces; enormous leftovers beyond
/// that are kept as a single block, which bounds the divisor heights the
/// callers can see. Root candidates in this crate are desk-scale.
fn positive_divisors(n: &BigInt) -> Vec<BigInt> {
    let mut n = n.abs();
    assert!(!n.is_zero(), "divisors of zero requested");
    let mut primes: Vec<BigInt> = Vec::new();
    // Strip small primes first so the u64 conversion usually succeeds.
    let mut p = 2u64;
    while p < 100_000 && n > BigInt::one() {
        let pb = BigInt::from(p);
        while (&n % &pb).is_zero() {
            primes.push(pb.clone());
            n = &n / &pb;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > BigInt::one() {
        match u64::try_from(&n) {
            Ok(small) => {
                let mut fs = Vec::new();
                factor_u64(small, &mut fs);
                primes.extend(fs.into_iter().map(BigInt::from));
            }
            Err(_) => {
                // Height bound: treat the unfactored cofactor as atomic.
                primes.push(n.clone());
            }
        }
    }
    let mut divisors = vec![BigInt::one()];
    primes.sort();
    let mut i = 0;
    while i < primes.len() {
        let p = primes[i].clone();
        let mut count = 0;
        while i < primes.len() && primes[i] == p {
            count += 1;
            i += 1;
        }
        let mut next = Vec::with_capacity(divisors.len() * (count + 1));
        for d in &divisors {
            let mut acc = d.clone();
            next.push(acc.clone());
            for _ in 0..count {
                acc = &acc * &p;
                next.push(acc.clone());
            }
        }
        divisors = next;
    }
    divisors.sort();
    divisors.dedup();
    divisors
}

/// Exact rational roots of a univariate polynomial given by dense
/// coefficients `c[0] + c[1] t + ... + c[n] t^n`.
///
/// Returns `(roots with multiplicities, degree of the rootless cofactor)`.
/// A positive cofactor degree means irrational (or complex) roots remain.
pub fn rational_roots(coeffs: &[Rational]) -> (Vec<(Rational, usize)>, usize) {
    // Strip leading zeros.
    let mut c: Vec<Rational> = coeffs.to_vec();
    while c.last().is_some_and(|x| x.is_zero()) {
        c.pop();
    }
    if c.len() <= 1 {
        // Zero or constant polynomial: no roots to report.
        return (Vec::new(), 0);
    }
    // Clear denominators to an integer polynomial.
    let mut den_lcm = BigInt::one();
    for x in &c {
        den_lcm = den_lcm.lcm(x.denom());
    }
    let mut ic: Vec<BigInt> = c.iter().map(|x| x.numer() * (&den_lcm / x.denom())).collect();

    let mut roots: Vec<(Rational, usize)> = Vec::new();

    // Factor out t^k.
    let mut k = 0;
    while ic[0].is_zero() {
        ic.remove(0);
        k += 1;
    }
    if k > 0 {
        roots.push((Rational::zero(), k));
    }
    if ic.len() <= 1 {
        return (roots, 0);
    }

    // Candidate roots p/q with p | ic[0], q | ic[last].
    let mut candidates: Vec<Rational> = Vec::new();
    for p in positive_divisors(&ic[0]) {
        for q in positive_divisors(ic.last().unwrap()) {
            if p.gcd(&q).is_one() {
                candidates.push(Rational::new(p.clone(), q.clone()));
                candidates.push(Rational::new(-p.clone(), q));
            }
        }
    }
    candidates.sort();
    candidates.dedup();

    let eval = |cs: &[BigInt], r: &Rational| -> Rational {
        let mut acc = Rational::zero();
        for c in cs.iter().rev() {
            acc = acc * r + Rational::from(c.clone());
        }
        acc
    };
    // Synthetic division of an integer polynomial by (t - r); exact only when
    // r is a root, so callers must check first.
    let divide_out = |cs: &[BigInt], r: &Rational| -> Vec<BigInt> {
        let rn = Rational::from(BigInt::from(1));
        let _ = rn;
        let mut quot: Vec<Rational> = vec![Rational::zero(); cs.len() - 1];
        let mut carry = Rational::zero();
        for i in (0..cs.len() - 1).rev() {
            let top = Rational::from(cs[i + 1].clone()) + carry;
            quot[i] = top.clone();
            carry = top * r;
        }
        // Re-clear denominators (the quotient is rational in general).
        let mut l = BigInt::one();
        for q in &quot {
            l = l.lcm(q.denom());
        }
        quot.iter().map(|q| q.numer() * (&l / q.denom())).collect()
    };

    for cand in candidates {
        let mut mult = 0;
        while ic.len() > 1 && eval(&ic, &cand).is_zero() {
            ic = divide_out(&ic, &cand);
            mult += 1;
        }
        if mult > 0 {
            roots.push((cand, mult));
        }
    }
    roots.sort_by(|a, b| a.0.cmp(&b.0));
    (roots, ic.len() - 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["3", "-7", "1/2", "-5/3", "0"] {
            let r = parse_rational(s).unwrap();
            assert_eq!(format_rational(&r), s);
        }
        assert_eq!(format_rational(&parse_rational("4/6").unwrap()), "2/3");
        assert!(parse_rational("1/0").is_err());
    }

    #[test]
    fn roots_of_small_polys() {
        // (t - 2)(t + 1/3)·3 = 3t^2 - 5t - 2
        let coeffs = vec![rat(-2, 1), rat(-5, 1), rat(3, 1)];
        let (roots, rest) = rational_roots(&coeffs);
        assert_eq!(rest, 0);
        assert_eq!(roots, vec![(rat(-1, 3), 1), (rat(2, 1), 1)]);

        // t^2 - 2 has no rational roots.
        let (roots, rest) = rational_roots(&[rat(-2, 1), rat(0, 1), rat(1, 1)]);
        assert!(roots.is_empty());
        assert_eq!(rest, 2);

        // t^3: triple root at zero.
        let (roots, rest) =
            rational_roots(&[rat(0, 1), rat(0, 1), rat(0, 1), rat(1, 1)]);
        assert_eq!(roots, vec![(rat(0, 1), 3)]);
        assert_eq!(rest, 0);
    }
}
