//! Factorization of squarefree integer polynomials: factor modulo a good
//! prime, Hensel-lift, recombine.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::modp::{self, Fp};

/// Good primes compared before picking the one with fewest factors.
const CANDIDATE_PRIMES: usize = 6;

type Zx = Vec<BigInt>;

fn odd_primes() -> impl Iterator<Item = u64> {
    (3u64..).step_by(2).filter(|&n| (3..).step_by(2).take_while(|d| d * d <= n).all(|d| n % d != 0))
}

fn reduce(f: &[BigInt], p: u64) -> Fp {
    let pb = BigInt::from(p);
    modp::trim(f.iter().map(|c| c.mod_floor(&pb).to_u64().expect("reduced")).collect())
}

fn lift_fp(a: &Fp) -> Zx {
    a.iter().map(|&c| BigInt::from(c)).collect()
}

fn mul_z(a: &[BigInt], b: &[BigInt]) -> Zx {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn mod_z(a: &[BigInt], m: &BigInt) -> Zx {
    a.iter().map(|c| c.mod_floor(m)).collect()
}

/// Symmetric residues in `(-m/2, m/2]`.
fn symmetric(a: &[BigInt], m: &BigInt) -> Zx {
    let half = m / 2;
    a.iter()
        .map(|c| {
            let r = c.mod_floor(m);
            if r > half {
                r - m
            } else {
                r
            }
        })
        .collect()
}

fn trim_z(mut a: Zx) -> Zx {
    while a.last().is_some_and(Zero::is_zero) {
        a.pop();
    }
    a
}

fn primitive(a: Zx) -> Zx {
    let g = a.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    let sign = if a.last().is_some_and(Signed::is_negative) { -BigInt::one() } else { BigInt::one() };
    a.into_iter().map(|c| c / &g * &sign).collect()
}

/// Exact quotient `a / b` over `Z`, or `None` if `b` does not divide `a`.
fn exact_div(a: &[BigInt], b: &[BigInt]) -> Option<Zx> {
    let mut r: Zx = a.to_vec();
    let lb = b.last().expect("nonzero divisor");
    if r.len() < b.len() {
        return None;
    }
    let mut q = vec![BigInt::zero(); r.len() - b.len() + 1];
    for i in (0..q.len()).rev() {
        let (c, rest) = r[i + b.len() - 1].div_rem(lb);
        if !rest.is_zero() {
            return None;
        }
        for (j, bj) in b.iter().enumerate() {
            r[i + j] -= &c * bj;
        }
        q[i] = c;
    }
    r.iter().all(Zero::is_zero).then_some(q)
}

/// Smallest power `p^k` exceeding `2 |lc| 2^n ||f||_1`, a bound on the
/// coefficients of `lc` times any monic factor of `f / lc`.
fn lifting_modulus(f: &[BigInt], p: u64) -> (BigInt, u32) {
    let n = f.len() - 1;
    let norm: BigInt = f.iter().map(|c| c.abs()).sum();
    let bound = BigInt::from(2) * f[n].abs() * (BigInt::one() << n) * norm;
    let pb = BigInt::from(p);
    let (mut m, mut k) = (pb.clone(), 1);
    while m <= bound {
        m *= &pb;
        k += 1;
    }
    (m, k)
}

/// Lifts `f = lc * prod(u) (mod p)` to the same identity mod `p^k`, with
/// every `u` monic.
fn hensel_lift(f: &[BigInt], factors: &[Fp], p: u64, k: u32) -> Vec<Zx> {
    let lc = f.last().expect("nonzero").clone();
    let lc_inv = modp::inv(lc.mod_floor(&BigInt::from(p)).to_u64().expect("reduced"), p);
    // a_i prod_{j != i} u_j = 1 (mod p), summed over i
    let cofactors: Vec<Fp> = (0..factors.len())
        .map(|i| {
            let others = factors
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .fold(vec![1], |acc, (_, u)| modp::mul(&acc, u, p));
            modp::inverse_mod(&others, &factors[i], p)
        })
        .collect();
    let mut us: Vec<Zx> = factors.iter().map(lift_fp).collect();
    let pb = BigInt::from(p);
    let mut pk = pb.clone();
    for _ in 1..k {
        let prod = us.iter().fold(vec![lc.clone()], |acc, u| mul_z(&acc, u));
        let diff: Zx = (0..f.len()).map(|i| &f[i] - prod.get(i).cloned().unwrap_or_default()).collect();
        let e: Zx = diff.iter().map(|c| c / &pk).collect();
        let e = modp::trim(reduce(&e, p).iter().map(|c| c * lc_inv % p).collect());
        for (u, (a, fac)) in us.iter_mut().zip(cofactors.iter().zip(factors)) {
            let delta = modp::rem(&modp::mul(&e, a, p), fac, p);
            for (i, d) in delta.iter().enumerate() {
                u[i] += &pk * BigInt::from(*d);
            }
        }
        pk *= &pb;
    }
    us.iter().map(|u| mod_z(u, &pk)).collect()
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        let Some(i) = (0..k).rev().find(|&i| idx[i] != i + n - k) else { return out };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Irreducible factors over `Z` of a squarefree primitive `f` of positive
/// degree with positive leading coefficient.
pub(super) fn factor_squarefree(f: &[BigInt]) -> Vec<Zx> {
    if f.len() <= 2 {
        return vec![f.to_vec()];
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5a55);
    let mut best: Option<(u64, Fp)> = None;
    let mut best_count = usize::MAX;
    let mut tried = 0;
    for p in odd_primes() {
        let fp = reduce(f, p);
        if fp.len() != f.len() || !modp::is_squarefree(&fp, p) {
            continue;
        }
        let fp = modp::monic(&fp, p);
        let count = modp::factor_degrees(&fp, p).len();
        if count == 1 {
            return vec![f.to_vec()];
        }
        if count < best_count {
            best_count = count;
            best = Some((p, fp));
        }
        tried += 1;
        if tried == CANDIDATE_PRIMES {
            break;
        }
    }
    let (p, fp) = best.expect("a squarefree polynomial has good primes");
    let local = modp::factor(&fp, p, &mut rng);
    let (m, k) = lifting_modulus(f, p);
    let mut lifted = hensel_lift(f, &local, p, k);
    let mut f = f.to_vec();
    let mut out = Vec::new();
    let mut size = 1;
    while 2 * size <= lifted.len() {
        let lc = f.last().expect("nonzero").clone();
        let mut found = None;
        for s in subsets(lifted.len(), size) {
            let g = s.iter().fold(vec![lc.clone()], |acc, &i| mul_z(&acc, &lifted[i]));
            let g = primitive(trim_z(symmetric(&g, &m)));
            if let Some(q) = exact_div(&f, &g) {
                found = Some((s, g, q));
                break;
            }
        }
        match found {
            Some((s, g, q)) => {
                out.push(g);
                f = q;
                lifted = lifted.into_iter().enumerate().filter(|(i, _)| !s.contains(i)).map(|(_, u)| u).collect();
            }
            None => size += 1,
        }
    }
    out.push(f);
    out
}
