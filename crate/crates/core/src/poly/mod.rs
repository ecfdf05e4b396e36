//! Univariate polynomials over `Q` and their factorization into monic
//! irreducibles.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

mod modp;
mod zassenhaus;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::{self, Scalar};

/// Largest degree accepted by the factorizer.
pub const MAX_FACTOR_DEGREE: usize = 12;

/// Coefficients in ascending order, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<Scalar>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: vec![] }
    }

    pub fn constant(c: Scalar) -> Self {
        Self::new(vec![c])
    }

    pub fn x() -> Self {
        Self::new(vec![Scalar::zero(), Scalar::one()])
    }

    /// `x - r`
    pub fn linear(root: &Scalar) -> Self {
        Self::new(vec![-root.clone(), Scalar::one()])
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Scalar {
        self.coeffs.last().cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let lc = self.leading();
        Self::new(self.coeffs.iter().map(|c| c / &lc).collect())
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        self.coeffs
            .iter()
            .rev()
            .fold(Scalar::zero(), |acc, c| acc * x + c)
    }

    /// `p(T)` by Horner's rule.
    pub fn eval_matrix(&self, t: &Matrix) -> Matrix {
        let n = t.nrows();
        let mut acc = Matrix::zeros(n, n);
        for c in self.coeffs.iter().rev() {
            acc = &acc * t;
            for i in 0..n {
                acc[(i, i)] += c;
            }
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * scalar::int(i as i64))
                .collect(),
        )
    }

    pub fn pow(&self, k: usize) -> Self {
        (0..k).fold(Self::constant(Scalar::one()), |acc, _| &acc * self)
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    /// Euclidean division. Panics on division by zero.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by zero polynomial");
        let lc = d.leading();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![Scalar::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = &rem[i + dd] / &lc;
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    rem[i + j] -= &c * dc;
                }
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        (Self::new(quot), Self::new(rem))
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn divides(&self, other: &Self) -> bool {
        other.div_rem(self).1.is_zero()
    }

    /// Integer coefficients with content 1 and positive leading
    /// coefficient, proportional to `self`.
    pub fn primitive_integer(&self) -> Vec<BigInt> {
        if self.is_zero() {
            return vec![];
        }
        let lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer())
            .collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        let sign = if ints.last().unwrap().is_negative() {
            -BigInt::one()
        } else {
            BigInt::one()
        };
        ints.into_iter().map(|c| c / &g * &sign).collect()
    }

    /// The rational root of a linear polynomial.
    pub fn linear_root(&self) -> Option<Scalar> {
        (self.degree() == Some(1)).then(|| -&self.coeffs[0] / &self.coeffs[1])
    }

    fn from_ints(c: &[BigInt]) -> Self {
        Self::new(c.iter().cloned().map(BigRational::from_integer).collect())
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let z = Scalar::zero();
        Poly::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&z) + rhs.coeffs.get(i).unwrap_or(&z))
                .collect(),
        )
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let z = Scalar::zero();
        Poly::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&z) - rhs.coeffs.get(i).unwrap_or(&z))
                .collect(),
        )
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Scalar::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let show_coeff = i == 0 || !mag.is_one();
            if show_coeff {
                write!(f, "{}", scalar::format(&mag))?;
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

/// Characteristic polynomial `det(xI - T)`, monic, by the division-free
/// Berkowitz recurrence.
pub fn characteristic_polynomial(t: &Matrix) -> Poly {
    assert!(t.is_square());
    let n = t.nrows();
    if n == 0 {
        return Poly::constant(Scalar::one());
    }
    // coefficient vectors are kept highest degree first
    let mut vect = vec![Scalar::one(), -t[(0, 0)].clone()];
    for r in 1..n {
        let idx: Vec<usize> = (0..r).collect();
        let m = t.select(&idx, &idx);
        let row = t.select(&[r], &idx);
        let col = t.select(&idx, &[r]);
        let a = t[(r, r)].clone();
        // first column of the Toeplitz matrix: 1, -a, -R C, -R M C, ...
        let mut first = vec![Scalar::one(), -a];
        let mut mc = col.clone();
        for _ in 0..r {
            first.push(-(&row * &mc)[(0, 0)].clone());
            mc = &m * &mc;
        }
        let mut next = vec![Scalar::zero(); r + 2];
        for (i, out) in next.iter_mut().enumerate() {
            for (j, v) in vect.iter().enumerate() {
                if i >= j {
                    *out += &first[i - j] * v;
                }
            }
        }
        vect = next;
    }
    vect.reverse();
    Poly::new(vect)
}

/// Minimal polynomial: first linear dependency among `I, T, T^2, ...`.
pub fn minimal_polynomial(t: &Matrix) -> Poly {
    assert!(t.is_square());
    let n = t.nrows();
    let mut powers: Vec<Vec<Scalar>> = vec![Matrix::identity(n).flatten()];
    let mut current = Matrix::identity(n);
    for _ in 1..=n {
        current = &current * t;
        let flat = current.flatten();
        // solve sum_{i<k} c_i T^i = T^k
        let a = Matrix::from_columns(n * n, &powers);
        if let Some(c) = a.solve(&flat) {
            let mut coeffs: Vec<Scalar> = c.into_iter().map(|x| -x).collect();
            coeffs.push(Scalar::one());
            return Poly::new(coeffs);
        }
        powers.push(flat);
    }
    unreachable!("Cayley-Hamilton bounds the minimal polynomial degree by n")
}

/// Square-free decomposition (Yun): returns `(a_i, i)` with `f = lc * prod a_i^i`,
/// every `a_i` monic, square-free and non-constant.
pub fn squarefree_decomposition(f: &Poly) -> Vec<(Poly, usize)> {
    let f = f.monic();
    let mut out = Vec::new();
    if f.degree().unwrap_or(0) == 0 {
        return out;
    }
    let fp = f.derivative();
    let a = f.gcd(&fp);
    let mut b = f.div_rem(&a).0;
    let mut c = fp.div_rem(&a).0;
    let mut d = &c - &b.derivative();
    let mut i = 1;
    loop {
        let ai = b.gcd(&d);
        b = b.div_rem(&ai).0;
        c = d.div_rem(&ai).0;
        if ai.degree().unwrap_or(0) > 0 {
            out.push((ai, i));
        }
        if b.degree().unwrap_or(0) == 0 {
            break;
        }
        d = &c - &b.derivative();
        i += 1;
    }
    out
}

/// Factorization of `f` into monic irreducibles over `Q` with multiplicities,
/// sorted by degree then coefficients.
pub fn factor(f: &Poly) -> Result<Vec<(Poly, usize)>> {
    let deg = f.degree().unwrap_or(0);
    if deg > MAX_FACTOR_DEGREE {
        return Err(Error::IrreducibleFactorizationIncomplete(deg));
    }
    let mut out = Vec::new();
    for (part, mult) in squarefree_decomposition(f) {
        for irr in factor_squarefree(&part) {
            out.push((irr, mult));
        }
    }
    out.sort_by(|(a, _), (b, _)| poly_order(a, b));
    Ok(out)
}

fn poly_order(a: &Poly, b: &Poly) -> std::cmp::Ordering {
    a.degree()
        .cmp(&b.degree())
        .then_with(|| match (a.linear_root(), b.linear_root()) {
            (Some(x), Some(y)) => x.cmp(&y),
            _ => a.coeffs.iter().rev().cmp(b.coeffs.iter().rev()),
        })
}

fn factor_squarefree(f: &Poly) -> Vec<Poly> {
    zassenhaus::factor_squarefree(&f.primitive_integer())
        .iter()
        .map(|g| Poly::from_ints(g).monic())
        .collect()
}
