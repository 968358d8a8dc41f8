//! Exact arithmetic in cyclotomic fields `Q(zeta_n)`.
//!
//! An element is stored in the power basis `1, z, ..., z^(phi(n)-1)` of
//! `Q[z]/Phi_n(z)`. Elements living in different fields are compared and
//! combined after embedding both into `Q(zeta_lcm)`.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Integer coefficients of the cyclotomic polynomial `Phi_n`, lowest degree first.
pub fn cyclotomic_polynomial(n: u32) -> Vec<i64> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Vec<i64>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&n) {
        return p.clone();
    }
    // x^n - 1 divided by Phi_d for every proper divisor d
    let mut poly = vec![0i64; n as usize + 1];
    poly[0] = -1;
    poly[n as usize] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            poly = poly_div_exact(&poly, &cyclotomic_polynomial(d));
        }
    }
    cache.lock().unwrap().insert(n, poly.clone());
    poly
}

fn poly_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let lead = *den.last().unwrap();
    debug_assert_eq!(lead, 1);
    let mut q = vec![0i64; rem.len() - dd];
    for i in (0..q.len()).rev() {
        let c = rem[i + dd];
        q[i] = c;
        for (j, &b) in den.iter().enumerate() {
            rem[i + j] -= c * b;
        }
    }
    debug_assert!(rem.iter().all(|&x| x == 0));
    q
}

pub fn euler_phi(n: u32) -> usize {
    cyclotomic_polynomial(n).len() - 1
}

/// An element of `Q(zeta_n)`.
#[derive(Clone)]
pub struct Cyclo {
    n: u32,
    coeffs: Vec<BigRational>,
}

impl Cyclo {
    pub fn zero() -> Self {
        Cyclo {
            n: 1,
            coeffs: vec![BigRational::zero()],
        }
    }

    pub fn from_rational(q: BigRational) -> Self {
        Cyclo { n: 1, coeffs: vec![q] }
    }

    pub fn from_int(k: i64) -> Self {
        Self::from_rational(BigRational::from_integer(k.into()))
    }

    /// `zeta_n^k`.
    pub fn root_of_unity(n: u32, k: i64) -> Self {
        assert!(n > 0);
        let k = k.mod_floor(&(n as i64)) as usize;
        let mut raw = vec![BigRational::zero(); n as usize];
        raw[k] = BigRational::one();
        Self::from_raw(n, raw)
    }

    /// Builds `sum raw[k] zeta_n^k` for `k < len(raw)` and reduces it.
    pub fn from_raw(n: u32, raw: Vec<BigRational>) -> Self {
        let phi = cyclotomic_polynomial(n);
        let deg = phi.len() - 1;
        let mut c = raw;
        // fold exponents >= n using z^n = 1
        if c.len() > n as usize {
            let mut folded = vec![BigRational::zero(); n as usize];
            for (i, x) in c.into_iter().enumerate() {
                folded[i % n as usize] += x;
            }
            c = folded;
        }
        for i in (deg..c.len()).rev() {
            if c[i].is_zero() {
                continue;
            }
            let f = c[i].clone();
            for (j, &b) in phi.iter().enumerate() {
                if b != 0 {
                    c[i - deg + j] -= &f * BigRational::from_integer(b.into());
                }
            }
        }
        c.resize(deg, BigRational::zero());
        Cyclo { n, coeffs: c }
    }

    pub fn conductor_hint(&self) -> u32 {
        self.n
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// The same number viewed in `Q(zeta_m)`; `n` must divide `m`.
    pub fn embed(&self, m: u32) -> Self {
        if m == self.n {
            return self.clone();
        }
        assert!(m.is_multiple_of(self.n), "cannot embed Q(zeta_{}) into Q(zeta_{m})", self.n);
        let step = (m / self.n) as usize;
        let mut raw = vec![BigRational::zero(); m as usize];
        for (k, c) in self.coeffs.iter().enumerate() {
            raw[k * step] = c.clone();
        }
        Self::from_raw(m, raw)
    }

    fn common(&self, other: &Self) -> (Self, Self) {
        let m = self.n.lcm(&other.n);
        (self.embed(m), other.embed(m))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// The value as a rational number, if it is one.
    pub fn to_rational(&self) -> Option<BigRational> {
        if self.coeffs.iter().skip(1).all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    pub fn to_integer(&self) -> Option<BigInt> {
        self.to_rational().filter(|q| q.is_integer()).map(|q| q.to_integer())
    }

    /// Complex conjugate (`zeta -> zeta^-1`).
    pub fn conj(&self) -> Self {
        let n = self.n as usize;
        let mut raw = vec![BigRational::zero(); n];
        for (k, c) in self.coeffs.iter().enumerate() {
            raw[(n - k) % n] += c;
        }
        Self::from_raw(self.n, raw)
    }

    /// Image under the Galois automorphism `zeta_n -> zeta_n^k`, `gcd(k, n) = 1`.
    pub fn galois(&self, k: i64) -> Self {
        let n = self.n as i64;
        let mut raw = vec![BigRational::zero(); self.n as usize];
        for (e, c) in self.coeffs.iter().enumerate() {
            raw[(e as i64 * k).mod_floor(&n) as usize] += c;
        }
        Self::from_raw(self.n, raw)
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        Cyclo {
            n: self.n,
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }
}

impl PartialEq for Cyclo {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = self.common(other);
        a.coeffs == b.coeffs
    }
}

impl Eq for Cyclo {}

impl Add for &Cyclo {
    type Output = Cyclo;
    fn add(self, rhs: &Cyclo) -> Cyclo {
        let (a, b) = self.common(rhs);
        Cyclo {
            n: a.n,
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect(),
        }
    }
}

impl AddAssign<&Cyclo> for Cyclo {
    fn add_assign(&mut self, rhs: &Cyclo) {
        *self = &*self + rhs;
    }
}

impl Sub for &Cyclo {
    type Output = Cyclo;
    fn sub(self, rhs: &Cyclo) -> Cyclo {
        self + &(-rhs)
    }
}

impl Neg for &Cyclo {
    type Output = Cyclo;
    fn neg(self) -> Cyclo {
        Cyclo {
            n: self.n,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &Cyclo {
    type Output = Cyclo;
    fn mul(self, rhs: &Cyclo) -> Cyclo {
        let (a, b) = self.common(rhs);
        if a.n == 1 {
            return Cyclo::from_rational(&a.coeffs[0] * &b.coeffs[0]);
        }
        let mut raw = vec![BigRational::zero(); a.coeffs.len() + b.coeffs.len()];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    raw[i + j] += x * y;
                }
            }
        }
        Cyclo::from_raw(a.n, raw)
    }
}

impl fmt::Debug for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Cyclo {
    /// Rationals print plainly; anything else prints as a sum of
    /// `c*E(n)^k` terms in the stored field.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(q) = self.to_rational() {
            return write!(f, "{q}");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            first = false;
            if k == 0 {
                write!(f, "{c}")?;
            } else {
                write!(f, "{c}*E({})^{k}", self.n)?;
            }
        }
        Ok(())
    }
}
