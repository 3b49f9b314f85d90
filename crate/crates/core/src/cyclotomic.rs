//! Exact arithmetic in the cyclotomic field `Q(zeta_ell)`.
//!
//! The field is represented as `Q[x]/(Phi_ell(x))` where `Phi_ell` is the
//! `ell`-th cyclotomic polynomial. Working modulo `Phi_ell` (rather than
//! `x^ell - 1`) keeps the quotient a field, so zero tests are decidable and
//! Gaussian elimination is possible. Scalars are coordinate vectors of
//! length `phi(ell)` with arbitrary-precision rational entries, always fully
//! reduced, so equality is coordinate-wise equality.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Errors from scalar arithmetic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CycError {
    /// Attempted to invert (or divide by) zero.
    DivisionByZero,
    /// Operands belong to different cyclotomic fields.
    ContextMismatch { expected: u32, found: u32 },
}

impl fmt::Display for CycError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CycError::DivisionByZero => write!(f, "division by zero in Q(zeta)"),
            CycError::ContextMismatch { expected, found } => write!(
                f,
                "cyclotomic context mismatch: expected Q(zeta_{expected}), found Q(zeta_{found})"
            ),
        }
    }
}

impl std::error::Error for CycError {}

/// The `ell`-th cyclotomic polynomial `Phi_ell`, as integer coefficients in
/// increasing degree order (constant term first). Monic, degree `phi(ell)`.
///
/// Computed by the classical recursion: divide `x^ell - 1` exactly by the
/// product of `Phi_d` over the proper divisors `d` of `ell`.
pub fn cyclotomic_polynomial(ell: u32) -> Vec<BigInt> {
    assert!(ell >= 1, "ell must be positive");
    if ell == 1 {
        return vec![BigInt::from(-1), BigInt::from(1)]; // x - 1
    }
    // x^ell - 1
    let mut numerator = vec![BigInt::zero(); ell as usize + 1];
    numerator[0] = BigInt::from(-1);
    numerator[ell as usize] = BigInt::one();

    let mut denominator = vec![BigInt::one()]; // constant 1
    for d in 1..ell {
        if ell.is_multiple_of(d) {
            denominator = poly_mul_int(&denominator, &cyclotomic_polynomial(d));
        }
    }
    poly_div_exact_int(&numerator, &denominator)
}

/// Euler's totient, by trial-division factorization.
pub fn euler_phi(ell: u32) -> u32 {
    let mut n = ell;
    let mut result = ell;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

fn poly_mul_int(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            out[i + j] += ai * bj;
        }
    }
    out
}

/// Exact division of integer polynomials; panics if the division leaves a
/// remainder (which cannot happen for the cyclotomic recursion).
fn poly_div_exact_int(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let dd = den.len() - 1;
    assert!(den[dd].is_one(), "divisor must be monic");
    let mut rem: Vec<BigInt> = num.to_vec();
    let dn = rem.len() - 1;
    assert!(dn >= dd);
    let mut quot = vec![BigInt::zero(); dn - dd + 1];
    for k in (0..=dn - dd).rev() {
        let c = rem[k + dd].clone();
        if !c.is_zero() {
            for (j, dj) in den.iter().enumerate() {
                rem[k + j] -= &c * dj;
            }
        }
        quot[k] = c;
    }
    assert!(rem.iter().all(|c| c.is_zero()), "division was not exact");
    quot
}

/// The cyclotomic field `Q(zeta_ell) = Q[x]/(Phi_ell)`.
///
/// Immutable after construction; shared freely across threads.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycField {
    ell: u32,
    degree: usize,
    /// Coefficients of `Phi_ell`, constant term first, length `degree + 1`.
    phi: Vec<BigInt>,
    /// `reduction[j]` = coordinates of `x^(degree + j) mod Phi_ell`,
    /// for `j` in `0..degree-1` (enough to reduce any product of two
    /// reduced scalars).
    reduction: Vec<Vec<BigRational>>,
}

impl CycField {
    pub fn new(ell: u32) -> CycField {
        let phi = cyclotomic_polynomial(ell);
        let degree = phi.len() - 1;
        debug_assert_eq!(degree as u32, euler_phi(ell));

        // x^degree mod Phi = -(low-degree part of Phi), then multiply by x
        // repeatedly, reducing the top coefficient through the same row.
        let base: Vec<BigRational> = phi[..degree]
            .iter()
            .map(|c| -BigRational::from_integer(c.clone()))
            .collect();
        let mut reduction = Vec::with_capacity(degree.saturating_sub(1).max(1));
        reduction.push(base);
        for _ in 1..degree.max(1) {
            let prev = reduction.last().unwrap();
            let mut next = vec![BigRational::zero(); degree];
            let top = prev[degree - 1].clone();
            next[1..degree].clone_from_slice(&prev[..degree - 1]);
            if !top.is_zero() {
                for (i, r) in reduction[0].iter().enumerate() {
                    next[i] += &top * r;
                }
            }
            reduction.push(next);
        }
        CycField {
            ell,
            degree,
            phi,
            reduction,
        }
    }

    pub fn ell(&self) -> u32 {
        self.ell
    }

    /// Degree of the extension, `phi(ell)`.
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Coefficients of `Phi_ell`, constant term first.
    pub fn modulus(&self) -> &[BigInt] {
        &self.phi
    }

    pub fn zero(&self) -> CycScalar {
        CycScalar {
            ell: self.ell,
            coords: vec![BigRational::zero(); self.degree],
        }
    }

    pub fn one(&self) -> CycScalar {
        self.from_rational(BigRational::one())
    }

    pub fn from_integer(&self, n: i64) -> CycScalar {
        self.from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_rational(&self, q: BigRational) -> CycScalar {
        let mut coords = vec![BigRational::zero(); self.degree];
        coords[0] = q;
        CycScalar {
            ell: self.ell,
            coords,
        }
    }

    /// The canonical representative of `zeta_ell^e`; `e` may be any integer
    /// and is reduced mod `ell`.
    pub fn root_power(&self, e: i64) -> CycScalar {
        let e = e.rem_euclid(self.ell as i64) as usize;
        let mut coords = vec![BigRational::zero(); self.degree];
        if e < self.degree {
            coords[e] = BigRational::one();
            return CycScalar {
                ell: self.ell,
                coords,
            };
        }
        // Start at x^(degree-1) and multiply by x until x^e, reducing the
        // overflow coefficient through the x^degree row each step.
        coords[self.degree - 1] = BigRational::one();
        for _ in (self.degree - 1)..e {
            let top = coords[self.degree - 1].clone();
            for i in (1..self.degree).rev() {
                coords[i] = coords[i - 1].clone();
            }
            coords[0] = BigRational::zero();
            if !top.is_zero() {
                for (i, r) in self.reduction[0].iter().enumerate() {
                    coords[i] += &top * r;
                }
            }
        }
        CycScalar {
            ell: self.ell,
            coords,
        }
    }

    fn check(&self, a: &CycScalar) -> Result<(), CycError> {
        if a.ell != self.ell {
            return Err(CycError::ContextMismatch {
                expected: self.ell,
                found: a.ell,
            });
        }
        Ok(())
    }

    pub fn add(&self, a: &CycScalar, b: &CycScalar) -> Result<CycScalar, CycError> {
        self.check(a)?;
        self.check(b)?;
        let coords = a
            .coords
            .iter()
            .zip(&b.coords)
            .map(|(x, y)| x + y)
            .collect();
        Ok(CycScalar {
            ell: self.ell,
            coords,
        })
    }

    pub fn sub(&self, a: &CycScalar, b: &CycScalar) -> Result<CycScalar, CycError> {
        self.check(a)?;
        self.check(b)?;
        let coords = a
            .coords
            .iter()
            .zip(&b.coords)
            .map(|(x, y)| x - y)
            .collect();
        Ok(CycScalar {
            ell: self.ell,
            coords,
        })
    }

    pub fn neg(&self, a: &CycScalar) -> Result<CycScalar, CycError> {
        self.check(a)?;
        Ok(CycScalar {
            ell: self.ell,
            coords: a.coords.iter().map(|x| -x).collect(),
        })
    }

    pub fn mul(&self, a: &CycScalar, b: &CycScalar) -> Result<CycScalar, CycError> {
        self.check(a)?;
        self.check(b)?;
        let n = self.degree;
        let mut prod = vec![BigRational::zero(); 2 * n - 1];
        for (i, ai) in a.coords.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.coords.iter().enumerate() {
                if !bj.is_zero() {
                    prod[i + j] += ai * bj;
                }
            }
        }
        let mut coords: Vec<BigRational> = prod[..n].to_vec();
        for j in 0..n - 1 {
            let c = &prod[n + j];
            if !c.is_zero() {
                for (i, r) in self.reduction[j].iter().enumerate() {
                    coords[i] += c * r;
                }
            }
        }
        Ok(CycScalar {
            ell: self.ell,
            coords,
        })
    }

    /// Multiplicative inverse, by the extended Euclidean algorithm in `Q[x]`
    /// applied to the coordinate polynomial and `Phi_ell`.
    pub fn inv(&self, a: &CycScalar) -> Result<CycScalar, CycError> {
        self.check(a)?;
        if a.is_zero() {
            return Err(CycError::DivisionByZero);
        }
        // Extended Euclid on (a, Phi): maintain r0 = u0*a mod Phi etc.;
        // v-coefficients are never needed.
        let phi_q: Vec<BigRational> = self
            .phi
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        let mut r0 = trim(a.coords.clone());
        let mut r1 = phi_q;
        let mut u0 = vec![BigRational::one()];
        let mut u1 = vec![BigRational::zero()];
        while !is_zero_poly(&r1) {
            let (q, r) = poly_div_rem(&r0, &r1);
            let u = poly_sub(&u0, &poly_mul(&q, &u1));
            r0 = r1;
            r1 = r;
            u0 = u1;
            u1 = u;
        }
        // r0 = gcd(a, Phi) is a nonzero constant since Phi is irreducible
        // and a != 0 mod Phi.
        debug_assert_eq!(r0.len(), 1);
        let lead = r0[0].clone();
        let mut coords = vec![BigRational::zero(); self.degree];
        for (i, c) in u0.iter().enumerate() {
            // deg(u0) < deg(Phi) holds for the Euclidean Bezout coefficient
            coords[i] = c / &lead;
        }
        Ok(CycScalar {
            ell: self.ell,
            coords,
        })
    }

    /// `a^e` for any integer exponent; negative exponents invert first.
    pub fn pow(&self, a: &CycScalar, e: i64) -> Result<CycScalar, CycError> {
        self.check(a)?;
        if e < 0 {
            let inv = self.inv(a)?;
            return self.pow(&inv, -e);
        }
        let mut result = self.one();
        let mut base = a.clone();
        let mut e = e as u64;
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(&result, &base)?;
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base)?;
            }
        }
        Ok(result)
    }

    /// Evaluate a polynomial with integer coefficients (constant first) at a
    /// scalar. Used e.g. to confirm `Phi_ell(zeta_ell) = 0`.
    pub fn eval_int_poly(&self, poly: &[BigInt], at: &CycScalar) -> Result<CycScalar, CycError> {
        self.check(at)?;
        let mut acc = self.zero();
        for c in poly.iter().rev() {
            acc = self.mul(&acc, at)?;
            let t = self.from_rational(BigRational::from_integer(c.clone()));
            acc = self.add(&acc, &t)?;
        }
        Ok(acc)
    }
}

/// An element of `Q(zeta_ell)` in canonical reduced form: exactly
/// `phi(ell)` rational coordinates in the power basis `1, x, ..., x^(phi-1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycScalar {
    ell: u32,
    coords: Vec<BigRational>,
}

impl CycScalar {
    pub fn ell(&self) -> u32 {
        self.ell
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coords[0].is_one() && self.coords[1..].iter().all(|c| c.is_zero())
    }
}

impl fmt::Display for CycScalar {
    /// Prints as a polynomial in `z` (the chosen primitive root), e.g.
    /// `1/2 - z^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if c.is_negative() {
                ("-", -c)
            } else {
                ("+", c.clone())
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {} ", sign)?;
            }
            let unit_coeff = mag.is_one();
            match (i, unit_coeff) {
                (0, _) => write!(f, "{}", mag)?,
                (1, true) => write!(f, "z")?,
                (1, false) => write!(f, "{}*z", mag)?,
                (_, true) => write!(f, "z^{}", i)?,
                (_, false) => write!(f, "{}*z^{}", mag, i)?,
            }
        }
        Ok(())
    }
}

// ---- rational polynomial helpers (dense, constant term first) ----

fn trim(mut p: Vec<BigRational>) -> Vec<BigRational> {
    while p.len() > 1 && p.last().unwrap().is_zero() {
        p.pop();
    }
    p
}

fn is_zero_poly(p: &[BigRational]) -> bool {
    p.iter().all(|c| c.is_zero())
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if is_zero_poly(a) || is_zero_poly(b) {
        return vec![BigRational::zero()];
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            if !bj.is_zero() {
                out[i + j] += ai * bj;
            }
        }
    }
    trim(out)
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    let mut out = vec![BigRational::zero(); n];
    for (i, ai) in a.iter().enumerate() {
        out[i] += ai;
    }
    for (i, bi) in b.iter().enumerate() {
        out[i] -= bi;
    }
    trim(out)
}

fn poly_div_rem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let b = trim(b.to_vec());
    assert!(!is_zero_poly(&b), "division by the zero polynomial");
    let db = b.len() - 1;
    let lead = b[db].clone();
    let mut rem = trim(a.to_vec());
    if is_zero_poly(&rem) || rem.len() - 1 < db {
        return (vec![BigRational::zero()], rem);
    }
    let dq = rem.len() - 1 - db;
    let mut quot = vec![BigRational::zero(); dq + 1];
    for k in (0..=dq).rev() {
        let c = &rem[k + db] / &lead;
        if !c.is_zero() {
            for (j, bj) in b.iter().enumerate() {
                let t = &c * bj;
                rem[k + j] -= t;
            }
        }
        quot[k] = c;
    }
    (trim(quot), trim(rem))
}
