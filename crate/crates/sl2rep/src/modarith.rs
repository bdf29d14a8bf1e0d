//! Arithmetic in `Z/p^n Z` and the scalar constants that drive the
//! representation actions: roots of unity, Legendre symbols, and the
//! normalizing constant of the Weyl-element action.

use num_complex::Complex64;
use serde::Serialize;
use std::f64::consts::TAU;
use thiserror::Error;

/// Upper bound on the modulus `p^n`. Every product of two reduced residues
/// must stay inside `u64`, and desk-scale experiments never get close.
pub const MAX_MODULUS: u64 = 1 << 26;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ModArithError {
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("exponent n must be >= 1")]
    ZeroExponent,
    #[error("p^n = {p}^{n} exceeds the supported modulus range")]
    ModulusTooLarge { p: u64, n: u32 },
    #[error("{value} is not a unit modulo {modulus}")]
    NonUnit { value: u64, modulus: u64 },
    #[error("invalid action parameters: {0}")]
    InvalidParams(String),
}

/// The modulus `p^n` for an odd prime `p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct PrimePower {
    p: u64,
    n: u32,
    modulus: u64,
}

impl PrimePower {
    pub fn new(p: u64, n: u32) -> Result<Self, ModArithError> {
        if p < 3 || p.is_multiple_of(2) || !is_prime(p) {
            return Err(ModArithError::NotOddPrime(p));
        }
        if n == 0 {
            return Err(ModArithError::ZeroExponent);
        }
        let mut modulus: u64 = 1;
        for _ in 0..n {
            modulus = modulus
                .checked_mul(p)
                .filter(|&m| m <= MAX_MODULUS)
                .ok_or(ModArithError::ModulusTooLarge { p, n })?;
        }
        Ok(Self { p, n, modulus })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// `p^e` for `e <= n`.
    pub fn power(&self, e: u32) -> u64 {
        debug_assert!(e <= self.n);
        self.p.pow(e)
    }

    pub fn reduce(&self, x: i64) -> u64 {
        x.rem_euclid(self.modulus as i64) as u64
    }

    pub fn is_unit(&self, x: u64) -> bool {
        !x.is_multiple_of(self.p)
    }

    pub fn elem(&self, x: i64) -> ModInt {
        ModInt {
            value: self.reduce(x),
            pp: *self,
        }
    }

    /// Units of `Z/p^n Z` in increasing order.
    pub fn units(&self) -> impl Iterator<Item = u64> + '_ {
        (1..self.modulus).filter(move |&a| self.is_unit(a))
    }

    pub fn unit_count(&self) -> u64 {
        self.modulus - self.modulus / self.p
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.modulus {
            s - self.modulus
        } else {
            s
        }
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            self.modulus - b + a
        }
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        debug_assert!(a < self.modulus && b < self.modulus);
        a * b % self.modulus
    }

    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.modulus - a
        }
    }

    pub fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc: u64 = 1;
        base %= self.modulus;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Inverse of a unit, by the extended Euclidean algorithm.
    pub fn inv(&self, a: u64) -> Result<u64, ModArithError> {
        if !self.is_unit(a % self.modulus) || a.is_multiple_of(self.modulus) {
            return Err(ModArithError::NonUnit {
                value: a % self.modulus,
                modulus: self.modulus,
            });
        }
        let (mut r0, mut r1) = (self.modulus as i64, (a % self.modulus) as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        debug_assert_eq!(r0, 1);
        Ok(self.reduce(t0))
    }
}

/// A residue in `Z/p^n Z`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ModInt {
    value: u64,
    pp: PrimePower,
}

impl ModInt {
    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn pp(&self) -> PrimePower {
        self.pp
    }

    pub fn is_unit(&self) -> bool {
        self.pp.is_unit(self.value)
    }

    pub fn inv(&self) -> Result<ModInt, ModArithError> {
        Ok(ModInt {
            value: self.pp.inv(self.value)?,
            pp: self.pp,
        })
    }
}

impl std::ops::Add for ModInt {
    type Output = ModInt;
    fn add(self, rhs: ModInt) -> ModInt {
        debug_assert_eq!(self.pp, rhs.pp);
        ModInt {
            value: self.pp.add(self.value, rhs.value),
            pp: self.pp,
        }
    }
}

impl std::ops::Sub for ModInt {
    type Output = ModInt;
    fn sub(self, rhs: ModInt) -> ModInt {
        debug_assert_eq!(self.pp, rhs.pp);
        ModInt {
            value: self.pp.sub(self.value, rhs.value),
            pp: self.pp,
        }
    }
}

impl std::ops::Mul for ModInt {
    type Output = ModInt;
    fn mul(self, rhs: ModInt) -> ModInt {
        debug_assert_eq!(self.pp, rhs.pp);
        ModInt {
            value: self.pp.mul(self.value, rhs.value),
            pp: self.pp,
        }
    }
}

impl std::ops::Neg for ModInt {
    type Output = ModInt;
    fn neg(self) -> ModInt {
        ModInt {
            value: self.pp.neg(self.value),
            pp: self.pp,
        }
    }
}

impl std::fmt::Display for ModInt {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.value)
    }
}

pub fn is_prime(x: u64) -> bool {
    if x < 2 {
        return false;
    }
    if x.is_multiple_of(2) {
        return x == 2;
    }
    let mut d = 3;
    while d * d <= x {
        if x.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Legendre symbol `(a/p)` by Euler's criterion.
pub fn legendre(a: i64, p: u64) -> i32 {
    debug_assert!(p % 2 == 1 && is_prime(p));
    let r = a.rem_euclid(p as i64) as u64;
    if r == 0 {
        return 0;
    }
    let mut acc: u64 = 1;
    let mut base = r;
    let mut exp = (p - 1) / 2;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    if acc == 1 {
        1
    } else {
        -1
    }
}

pub fn is_square_free(mut x: u64) -> bool {
    if x == 0 {
        return false;
    }
    let mut d = 2;
    while d * d <= x {
        if x.is_multiple_of(d * d) {
            return false;
        }
        while x.is_multiple_of(d) {
            x /= d;
        }
        d += 1;
    }
    true
}

/// `e^{2 pi i sigma / p^n}`.
pub fn root_of_unity(sigma: i64, pp: PrimePower) -> Complex64 {
    unity_power(sigma, 1, pp)
}

/// `zeta_sigma^t = e^{2 pi i sigma t / p^n}`, with the exponent reduced mod
/// `p^n` before the trig call so phases stay exact over long sums.
pub fn unity_power(sigma: i64, t: i64, pp: PrimePower) -> Complex64 {
    let m = pp.modulus();
    let s = sigma.rem_euclid(m as i64) as u64;
    let tt = t.rem_euclid(m as i64) as u64;
    let e = s * tt % m;
    Complex64::from_polar(1.0, TAU * e as f64 / m as f64)
}

/// Reading of the constant `e` in the Weyl action for even `k`. The odd-`k`
/// cases (`1` or `-i` according to `(-1/p)`) are convention-independent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub enum WeylConstantConvention {
    /// Value forced by the Gauss-sum evaluation of the defining relations:
    /// `1` when `p = 1 (mod 4)`, `(-1)^n` when `p = 3 (mod 4)`. Agrees with
    /// the alternating reading at `n = 2`; the only reading that keeps the
    /// action a homomorphism for odd `n` when `p = 1 (mod 4)`.
    #[default]
    GaussSum,
    /// "-1^n" read as `(-1)^n`.
    PaperAlternating,
    /// "-1^n" read as `-(1^n) = -1`.
    PaperMinusOne,
}

/// The fourth-root factor `e` of the Weyl constant.
pub fn weyl_phase(k: u32, pp: PrimePower, conv: WeylConstantConvention) -> Complex64 {
    let p = pp.p();
    let n = pp.n();
    if k % 2 == 1 {
        if legendre(-1, p) == 1 {
            Complex64::new(1.0, 0.0)
        } else {
            Complex64::new(0.0, -1.0)
        }
    } else {
        let sign = match conv {
            WeylConstantConvention::GaussSum => {
                if p % 4 == 3 && n % 2 == 1 {
                    -1.0
                } else {
                    1.0
                }
            }
            WeylConstantConvention::PaperAlternating => {
                if n % 2 == 1 {
                    -1.0
                } else {
                    1.0
                }
            }
            WeylConstantConvention::PaperMinusOne => -1.0,
        };
        Complex64::new(sign, 0.0)
    }
}

/// The constant `c = p^{-n+k/2} (D'/p)^{n-k} (sigma/p)^k e` of the Weyl
/// action on `R_k(Delta, sigma)`.
pub fn action_constant(
    k: u32,
    delta_prime: u64,
    sigma: u64,
    pp: PrimePower,
    conv: WeylConstantConvention,
) -> Result<Complex64, ModArithError> {
    let p = pp.p();
    let n = pp.n();
    if k > n {
        return Err(ModArithError::InvalidParams(format!(
            "k = {k} exceeds n = {n}"
        )));
    }
    if delta_prime.is_multiple_of(p) || !is_square_free(delta_prime) {
        return Err(ModArithError::InvalidParams(format!(
            "delta' = {delta_prime} must be square-free and coprime to p = {p}"
        )));
    }
    if sigma.is_multiple_of(p) {
        return Err(ModArithError::InvalidParams(format!(
            "sigma = {sigma} must be coprime to p = {p}"
        )));
    }
    // p^{-n + k/2}: split into an integer power and a possible sqrt(p).
    let e2 = k as i32 - 2 * n as i32;
    let mut mag = (p as f64).powi(e2.div_euclid(2));
    if e2.rem_euclid(2) == 1 {
        mag *= (p as f64).sqrt();
    }
    let lf = legendre(delta_prime as i64, p).pow(n - k) * legendre(sigma as i64, p).pow(k);
    Ok(weyl_phase(k, pp, conv) * mag * lf as f64)
}

/// Smallest positive square-free `D'` coprime to `p` with `(-D'/p) = -1`
/// (first component) and `(-D'/p) = +1` (second). The first labels the
/// dimension `p^n - p^{n-1}` family, matching the worked `p = 3` choice
/// `D'_1 = 1, D'_2 = 2`.
pub fn canonical_delta_primes(p: u64) -> (u64, u64) {
    let pick = |want: i32| {
        (1..)
            .find(|&d| d % p != 0 && is_square_free(d) && legendre(-(d as i64), p) == want)
            .unwrap()
    };
    (pick(-1), pick(1))
}

/// `sigma_1 = 1` and the smallest quadratic non-residue as `sigma_2`.
pub fn canonical_sigmas(p: u64) -> (u64, u64) {
    let s2 = (2..).find(|&s| legendre(s as i64, p) == -1).unwrap();
    (1, s2)
}
