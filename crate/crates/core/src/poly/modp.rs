//! Polynomials over `F_p` (coefficients ascending, `p` an odd prime below
//! `2^31`) and their factorization into monic irreducibles.

use rand::Rng;

pub(super) type Fp = Vec<u64>;

pub(super) fn trim(mut a: Fp) -> Fp {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

pub(super) fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * a % p;
        }
        a = a * a % p;
        e >>= 1;
    }
    r
}

pub(super) fn inv(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

pub(super) fn monic(a: &Fp, p: u64) -> Fp {
    match a.last() {
        None => vec![],
        Some(&l) => {
            let li = inv(l, p);
            a.iter().map(|c| c * li % p).collect()
        }
    }
}

pub(super) fn divrem(a: &Fp, b: &Fp, p: u64) -> (Fp, Fp) {
    let mut r = a.clone();
    if r.len() < b.len() {
        return (vec![], trim(r));
    }
    let lb = inv(*b.last().expect("nonzero divisor"), p);
    let mut q = vec![0; r.len() - b.len() + 1];
    for i in (0..q.len()).rev() {
        let c = r[i + b.len() - 1] * lb % p;
        q[i] = c;
        if c != 0 {
            for (j, bj) in b.iter().enumerate() {
                r[i + j] = (r[i + j] + p - c * bj % p) % p;
            }
        }
    }
    r.truncate(b.len() - 1);
    (trim(q), trim(r))
}

pub(super) fn rem(a: &Fp, b: &Fp, p: u64) -> Fp {
    divrem(a, b, p).1
}

pub(super) fn mul(a: &Fp, b: &Fp, p: u64) -> Fp {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    trim(out)
}

pub(super) fn sub(a: &Fp, b: &Fp, p: u64) -> Fp {
    let n = a.len().max(b.len());
    trim(
        (0..n)
            .map(|i| (a.get(i).copied().unwrap_or(0) + p - b.get(i).copied().unwrap_or(0)) % p)
            .collect(),
    )
}

/// Monic gcd.
pub(super) fn gcd(a: &Fp, b: &Fp, p: u64) -> Fp {
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_empty() {
        let r = rem(&a, &b, p);
        a = b;
        b = r;
    }
    monic(&a, p)
}

/// `s` with `s a = 1 (mod m)`, for `a` coprime to `m`.
pub(super) fn inverse_mod(a: &Fp, m: &Fp, p: u64) -> Fp {
    // extended Euclid tracking only the coefficient of `a`
    let (mut r0, mut r1) = (m.clone(), rem(a, m, p));
    let (mut s0, mut s1): (Fp, Fp) = (vec![], vec![1]);
    while r1.len() > 1 {
        let (q, r) = divrem(&r0, &r1, p);
        let s = sub(&s0, &mul(&q, &s1, p), p);
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
    }
    let c = inv(*r1.last().expect("coprime inputs"), p);
    rem(&s1.iter().map(|x| x * c % p).collect(), m, p)
}

fn derivative(a: &Fp, p: u64) -> Fp {
    trim(a.iter().enumerate().skip(1).map(|(i, c)| (i as u64 % p) * c % p).collect())
}

/// `base^e mod m`.
fn pow_poly(base: &Fp, mut e: u64, m: &Fp, p: u64) -> Fp {
    let mut r: Fp = vec![1];
    let mut b = rem(base, m, p);
    while e > 0 {
        if e & 1 == 1 {
            r = rem(&mul(&r, &b, p), m, p);
        }
        b = rem(&mul(&b, &b, p), m, p);
        e >>= 1;
    }
    r
}

pub(super) fn is_squarefree(f: &Fp, p: u64) -> bool {
    gcd(f, &derivative(f, p), p).len() == 1
}

/// Products of all irreducible factors of each degree, for a squarefree
/// monic `f`.
fn distinct_degree(f: &Fp, p: u64) -> Vec<(Fp, usize)> {
    let mut f = f.clone();
    let mut out = Vec::new();
    let mut h: Fp = vec![0, 1];
    let mut i = 1;
    while f.len() > 2 * i {
        h = pow_poly(&h, p, &f, p);
        let g = gcd(&f, &sub(&h, &vec![0, 1], p), p);
        if g.len() > 1 {
            f = divrem(&f, &g, p).0;
            h = rem(&h, &f, p);
            out.push((g, i));
        }
        i += 1;
    }
    if f.len() > 1 {
        let d = f.len() - 1;
        out.push((f, d));
    }
    out
}

/// Cantor-Zassenhaus splitting of a product of distinct irreducibles of
/// degree `d`.
fn equal_degree(g: &Fp, d: usize, p: u64, rng: &mut impl Rng) -> Vec<Fp> {
    if g.len() - 1 == d {
        return vec![g.clone()];
    }
    loop {
        let a: Fp = trim((0..g.len() - 1).map(|_| rng.gen_range(0..p)).collect());
        if a.len() < 2 {
            continue;
        }
        // a^((p^d - 1)/2) = (a^(1 + p + ... + p^(d-1)))^((p - 1)/2)
        let mut t = rem(&a, g, p);
        let mut norm = t.clone();
        for _ in 1..d {
            t = pow_poly(&t, p, g, p);
            norm = rem(&mul(&norm, &t, p), g, p);
        }
        let b = pow_poly(&norm, (p - 1) / 2, g, p);
        let h = gcd(g, &sub(&b, &vec![1], p), p);
        if h.len() > 1 && h.len() < g.len() {
            let mut out = equal_degree(&h, d, p, rng);
            out.extend(equal_degree(&divrem(g, &h, p).0, d, p, rng));
            return out;
        }
    }
}

/// Monic irreducible factors of a squarefree monic `f`.
pub(super) fn factor(f: &Fp, p: u64, rng: &mut impl Rng) -> Vec<Fp> {
    distinct_degree(f, p)
        .into_iter()
        .flat_map(|(g, d)| equal_degree(&g, d, p, rng))
        .collect()
}

/// Degrees of the irreducible factors of a squarefree monic `f`.
pub(super) fn factor_degrees(f: &Fp, p: u64) -> Vec<usize> {
    distinct_degree(f, p)
        .into_iter()
        .flat_map(|(g, d)| std::iter::repeat_n(d, (g.len() - 1) / d))
        .collect()
}
