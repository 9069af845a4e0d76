//! Independent reference implementations over machine integers, used as
//! oracles by the integration tests. Nothing here calls into the library.

#![allow(dead_code)]

/// Dense polynomial, constant term first, no trailing zeros.
pub type Poly = Vec<i128>;

pub fn trim(mut f: Poly) -> Poly {
    while f.last() == Some(&0) {
        f.pop();
    }
    f
}

pub fn degree(f: &Poly) -> Option<usize> {
    f.len().checked_sub(1)
}

pub fn mul(a: &Poly, b: &Poly) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

pub fn content(f: &Poly) -> i128 {
    f.iter().fold(0, |g, &c| gcd(g, c))
}

/// Divides `f` by a content `c` and fixes the sign so the leading term is positive.
pub fn primitive(f: &Poly) -> Poly {
    let c = content(f);
    let s = if f.last().copied().unwrap_or(1) < 0 { -c } else { c };
    f.iter().map(|x| x / s).collect()
}

/// Exact division in ℤ[x].
pub fn exact_div(f: &Poly, g: &Poly) -> Option<Poly> {
    let dg = degree(g)?;
    let mut r = f.clone();
    if r.len() < g.len() {
        return r.iter().all(|&c| c == 0).then(Vec::new);
    }
    let mut q = vec![0; r.len() - dg];
    for k in (0..q.len()).rev() {
        let top = r[k + dg];
        if top % g[dg] != 0 {
            return None;
        }
        let c = top / g[dg];
        for (i, gi) in g.iter().enumerate() {
            r[k + i] -= c * gi;
        }
        q[k] = c;
    }
    r.iter().all(|&c| c == 0).then(|| trim(q))
}

fn eval(f: &Poly, x: i128) -> i128 {
    f.iter().rev().fold(0, |acc, &c| acc * x + c)
}

fn divisors(n: i128) -> Vec<i128> {
    let n = n.abs();
    (1..=n).filter(|d| n % d == 0).collect()
}

/// A linear divisor `b*x - a` from the rational root test.
fn linear_divisor(f: &Poly) -> Option<Poly> {
    if f[0] == 0 {
        return Some(vec![0, 1]);
    }
    let lc = *f.last()?;
    for b in divisors(lc) {
        for a in divisors(f[0]) {
            for a in [a, -a] {
                if gcd(a, b) == 1
                    && (0..f.len())
                        .map(|i| f[i] * a.pow(i as u32) * b.pow((f.len() - 1 - i) as u32))
                        .sum::<i128>()
                        == 0
                {
                    return Some(vec![-a, b]);
                }
            }
        }
    }
    None
}

/// A quadratic divisor of a polynomial with no rational roots. Every root
/// of such a divisor is a root of `f`, so the Cauchy bound `R` limits the
/// middle coefficient to `2 a R`.
fn quadratic_divisor(f: &Poly) -> Option<Poly> {
    let lc = *f.last()?;
    let r = 1 + f.iter().map(|c| c.abs()).max()? / lc.abs() + 1;
    for a in divisors(lc) {
        for c in divisors(f[0]) {
            for c in [c, -c] {
                for b in -2 * a * r..=2 * a * r {
                    let g = vec![c, b, a];
                    if exact_div(f, &g).is_some() {
                        return Some(g);
                    }
                }
            }
        }
    }
    None
}

/// Irreducible factors (with repetition) of a primitive `f` of degree at most
/// 5, each primitive with positive leading coefficient.
pub fn irreducible_factors(f: &Poly) -> Vec<Poly> {
    let mut f = primitive(f);
    let mut out = Vec::new();
    loop {
        let d = degree(&f).expect("nonzero");
        assert!(d <= 5, "oracle only handles degree <= 5");
        if d == 0 {
            break;
        }
        if d == 1 {
            out.push(f);
            break;
        }
        let g = linear_divisor(&f).or_else(|| (d >= 4).then(|| quadratic_divisor(&f)).flatten());
        match g {
            Some(g) => {
                let g = primitive(&g);
                f = exact_div(&f, &g).expect("divisor divides");
                out.push(g);
            }
            None => {
                out.push(f);
                break;
            }
        }
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

pub fn is_irreducible(f: &Poly) -> bool {
    degree(f).is_some_and(|d| d > 0) && content(f) == 1 && irreducible_factors(f).len() == 1
}

/// Every divisor of `f` of degree `1..deg f`, including multiples by divisors
/// of the content, up to sign.
pub fn proper_divisors(f: &Poly) -> Vec<Poly> {
    let c = content(f);
    let factors = irreducible_factors(f);
    let n = degree(f).unwrap_or(0);
    let mut out = Vec::new();
    for mask in 1u32..(1 << factors.len()) {
        let g = (0..factors.len())
            .filter(|i| mask >> i & 1 == 1)
            .fold(vec![1], |acc, i| mul(&acc, &factors[i]));
        if degree(&g).is_some_and(|d| d < n) {
            for k in divisors(c) {
                out.push(g.iter().map(|x| x * k).collect());
            }
        }
    }
    out
}

/// Polynomials over 𝔽_p as coefficient vectors in `0..p`.
pub mod fp {
    pub type Poly = Vec<i64>;

    pub fn trim(mut f: Poly) -> Poly {
        while f.last() == Some(&0) {
            f.pop();
        }
        f
    }

    pub fn mul(a: &Poly, b: &Poly, p: i64) -> Poly {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0; a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y) % p;
            }
        }
        trim(out)
    }

    /// All monic polynomials of degree `d`.
    pub fn monic(d: usize, p: i64) -> Vec<Poly> {
        let mut out = Vec::new();
        let total = p.pow(d as u32);
        for mut n in 0..total {
            let mut f = Vec::with_capacity(d + 1);
            for _ in 0..d {
                f.push(n % p);
                n /= p;
            }
            f.push(1);
            out.push(f);
        }
        out
    }

    /// The set of reducible monic polynomials of degree `<= max_deg`, found
    /// by multiplying out every pair of monic polynomials of positive degree.
    pub fn reducible_set(max_deg: usize, p: i64) -> std::collections::HashSet<Poly> {
        let mut out = std::collections::HashSet::new();
        for da in 1..max_deg {
            for db in da..=max_deg - da {
                for a in monic(da, p) {
                    for b in monic(db, p) {
                        out.insert(mul(&a, &b, p));
                    }
                }
            }
        }
        out
    }

    pub fn irreducibles(d: usize, p: i64) -> Vec<Poly> {
        let reducible = reducible_set(d, p);
        monic(d, p).into_iter().filter(|f| !reducible.contains(f)).collect()
    }
}
