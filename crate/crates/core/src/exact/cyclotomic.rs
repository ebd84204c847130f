//! Exact elements of cyclotomic fields.
//!
//! An element of order `n` is stored in the power basis `1, ζₙ, …, ζₙ^{φ(n)-1}`
//! reduced modulo the `n`-th cyclotomic polynomial. Arithmetic between
//! elements of different orders happens at the lcm of the two orders; the
//! result is not shrunk automatically. [`Cyclotomic::reduced`] returns the
//! canonical form at the conductor (the smallest order whose field contains
//! the element), which is what printing and serialization use.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{QmodZ, Rational};
use crate::error::{Error, Result};

/// Euler's totient.
pub fn totient(n: u64) -> u64 {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

pub(crate) fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

fn poly_cache() -> &'static Mutex<HashMap<u64, Arc<Vec<i64>>>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<Vec<i64>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Integer coefficients (constant term first) of the `n`-th cyclotomic polynomial.
pub fn cyclotomic_polynomial(n: u64) -> Arc<Vec<i64>> {
    assert!(n >= 1, "cyclotomic polynomial of order 0");
    if let Some(p) = poly_cache().lock().unwrap().get(&n) {
        return p.clone();
    }
    // x^n - 1 divided by every Φ_d with d | n, d < n.
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in divisors(n) {
        if d == n {
            continue;
        }
        let den = cyclotomic_polynomial(d);
        num = exact_monic_division(&num, &den);
    }
    let p = Arc::new(num);
    poly_cache().lock().unwrap().insert(n, p.clone());
    p
}

fn exact_monic_division(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dn = den.len() - 1;
    let mut rem = num.to_vec();
    let qlen = num.len() - dn;
    let mut quot = vec![0i64; qlen];
    for i in (0..qlen).rev() {
        let c = rem[i + dn];
        quot[i] = c;
        if c != 0 {
            for (j, &dj) in den.iter().enumerate() {
                rem[i + j] = rem[i + j]
                    .checked_sub(c.checked_mul(dj).expect("cyclotomic coefficient overflow"))
                    .expect("cyclotomic coefficient overflow");
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    quot
}

/// Reduce a polynomial in ζₙ (constant term first) modulo Φₙ.
fn reduce_poly(mut poly: Vec<Rational>, n: u64) -> Vec<Rational> {
    let phi = cyclotomic_polynomial(n);
    let deg = phi.len() - 1;
    if poly.len() < deg {
        poly.resize(deg, Rational::zero());
        return poly;
    }
    for top in (deg..poly.len()).rev() {
        if poly[top].is_zero() {
            continue;
        }
        let c = std::mem::replace(&mut poly[top], Rational::zero());
        let base = top - deg;
        for (j, &pj) in phi[..deg].iter().enumerate() {
            if pj != 0 {
                poly[base + j] -= &c * Rational::from_integer(BigInt::from(pj));
            }
        }
    }
    poly.truncate(deg);
    poly
}

/// An exact element of ℚ(ζₙ).
#[derive(Clone, Debug)]
pub struct Cyclotomic {
    order: u64,
    coeffs: Vec<Rational>,
}

impl Cyclotomic {
    /// Builds an element from a polynomial in ζₙ of any degree.
    pub fn from_poly(order: u64, poly: Vec<Rational>) -> Self {
        assert!(order >= 1, "cyclotomic order must be positive");
        Cyclotomic {
            order,
            coeffs: reduce_poly(poly, order),
        }
    }

    /// Builds `Σ cⱼ ζₙʲ` from integer coefficients indexed by exponent.
    pub fn from_int_poly(order: u64, poly: &[i64]) -> Self {
        Self::from_poly(
            order,
            poly.iter().map(|&c| Rational::from_integer(BigInt::from(c))).collect(),
        )
    }

    pub fn zero() -> Self {
        Cyclotomic {
            order: 1,
            coeffs: vec![Rational::zero()],
        }
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_rational(r: Rational) -> Self {
        Cyclotomic {
            order: 1,
            coeffs: vec![r],
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(n)))
    }

    /// ζₙᵏ in canonical form.
    pub fn zeta(n: u64, k: i64) -> Self {
        assert!(n >= 1, "zeta of order 0");
        let e = k.rem_euclid(n as i64) as usize;
        let mut poly = vec![Rational::zero(); e + 1];
        poly[e] = Rational::one();
        Self::from_poly(n, poly)
    }

    /// The order `n` this element is currently stored at.
    pub fn order(&self) -> u64 {
        self.order
    }

    /// Power-basis coefficients at [`Self::order`], length φ(order).
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.is_rational() && self.coeffs[0].is_one()
    }

    /// Re-express at order `m`, which must be a multiple of the current order.
    pub fn embed(&self, m: u64) -> Self {
        assert!(m % self.order == 0, "cannot embed order {} into {}", self.order, m);
        if m == self.order {
            return self.clone();
        }
        let step = (m / self.order) as usize;
        let mut poly = vec![Rational::zero(); (self.coeffs.len() - 1) * step + 1];
        for (j, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                poly[j * step] = c.clone();
            }
        }
        Self::from_poly(m, poly)
    }

    fn lift_pair(&self, other: &Self) -> (Self, Self) {
        let m = self.order.lcm(&other.order);
        (self.embed(m), other.embed(m))
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs[1..].iter().all(Zero::is_zero)
    }

    pub fn as_rational(&self) -> Result<Rational> {
        if self.is_rational() {
            Ok(self.coeffs[0].clone())
        } else {
            Err(Error::NotRational)
        }
    }

    /// The value as a rational integer, if it is one.
    pub fn as_integer(&self) -> Option<BigInt> {
        let r = self.as_rational().ok()?;
        r.is_integer().then(|| r.to_integer())
    }

    /// Image under the Galois automorphism ζ ↦ ζᵃ (gcd(a, order) = 1).
    pub fn galois(&self, a: i64) -> Self {
        let n = self.order;
        let a = a.rem_euclid(n as i64) as u64;
        debug_assert_eq!(a.gcd(&n), 1);
        let mut poly = vec![Rational::zero(); n as usize];
        for (j, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                let e = ((j as u64 * a) % n) as usize;
                poly[e] += c;
            }
        }
        Self::from_poly(n, poly)
    }

    /// Complex conjugation ζ ↦ ζ⁻¹.
    pub fn conjugate(&self) -> Self {
        self.galois(-1)
    }

    /// Multiplicative inverse via the field norm.
    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.order;
        let mut others = Cyclotomic::one();
        for a in 2..n.max(2) {
            if a.gcd(&n) == 1 {
                others = &others * &self.galois(a as i64);
            }
        }
        let norm = (&others * self).as_rational().expect("field norm is rational");
        Some(others.scale(&norm.recip()))
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Cyclotomic::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Canonical form: the smallest order `d` such that the element lies in
    /// ℚ(ζ_d), with power-basis coefficients at that order.
    pub fn reduced(&self) -> Self {
        if self.is_rational() {
            return Cyclotomic::from_rational(self.coeffs[0].clone());
        }
        for d in divisors(self.order) {
            if d == self.order {
                break;
            }
            if let Some(c) = self.try_descend(d) {
                return c;
            }
        }
        self.clone()
    }

    /// Express `self` in the power basis of ℚ(ζ_d), if it lies there.
    fn try_descend(&self, d: u64) -> Option<Self> {
        let m = self.order;
        let phi_d = totient(d) as usize;
        let phi_m = self.coeffs.len();
        // Columns are the images of ζ_d^j in the order-m power basis; augmented
        // with self as the last column.
        let mut rows: Vec<Vec<Rational>> = vec![vec![Rational::zero(); phi_d + 1]; phi_m];
        for j in 0..phi_d {
            let img = Cyclotomic::zeta(d, j as i64).embed(m);
            for (i, c) in img.coeffs.into_iter().enumerate() {
                rows[i][j] = c;
            }
        }
        for (i, c) in self.coeffs.iter().enumerate() {
            rows[i][phi_d] = c.clone();
        }
        let sol = solve_rational(rows, phi_d)?;
        Some(Cyclotomic {
            order: d,
            coeffs: sol,
        })
    }

    /// Total order used for canonical sorting: rationals before irrationals,
    /// then by conductor, then by coefficients with larger values first.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.reduced().cmp_reduced(&other.reduced())
    }

    /// [`Cyclotomic::canonical_cmp`] for operands already in reduced form.
    pub(crate) fn cmp_reduced(&self, other: &Self) -> Ordering {
        let (a, b) = (self, other);
        a.order
            .cmp(&b.order)
            .then_with(|| {
                for (x, y) in a.coeffs.iter().zip(&b.coeffs) {
                    match y.cmp(x) {
                        Ordering::Equal => continue,
                        o => return o,
                    }
                }
                Ordering::Equal
            })
    }

    /// Numeric value, for diagnostics and test oracles only.
    pub fn to_f64_pair(&self) -> (f64, f64) {
        use num_traits::ToPrimitive;
        let n = self.order as f64;
        let mut re = 0.0;
        let mut im = 0.0;
        for (j, c) in self.coeffs.iter().enumerate() {
            let v = c.to_f64().unwrap_or(f64::NAN);
            let t = 2.0 * std::f64::consts::PI * j as f64 / n;
            re += v * t.cos();
            im += v * t.sin();
        }
        (re, im)
    }
}

/// Solves an augmented system (last column is the right-hand side) with
/// `unknowns` unknowns over ℚ; `None` when inconsistent.
fn solve_rational(mut rows: Vec<Vec<Rational>>, unknowns: usize) -> Option<Vec<Rational>> {
    let nrows = rows.len();
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for col in 0..unknowns {
        let Some(p) = (r..nrows).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][col].recip();
        for v in rows[r].iter_mut() {
            *v *= &inv;
        }
        for i in 0..nrows {
            if i != r && !rows[i][col].is_zero() {
                let f = rows[i][col].clone();
                for j in 0..=unknowns {
                    let t = &f * &rows[r][j];
                    rows[i][j] -= t;
                }
            }
        }
        pivot_cols.push(col);
        r += 1;
    }
    if rows[r..].iter().any(|row| !row[unknowns].is_zero()) {
        return None;
    }
    let mut sol = vec![Rational::zero(); unknowns];
    for (i, &c) in pivot_cols.iter().enumerate() {
        sol[c] = rows[i][unknowns].clone();
    }
    Some(sol)
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = self.lift_pair(other);
        a.coeffs == b.coeffs
    }
}

impl Eq for Cyclotomic {}

impl From<&QmodZ> for Cyclotomic {
    fn from(q: &QmodZ) -> Self {
        q.to_cyclotomic()
    }
}

impl<'a> Add<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        if self.order == rhs.order {
            return Cyclotomic {
                order: self.order,
                coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
            };
        }
        let (a, b) = self.lift_pair(rhs);
        &a + &b
    }
}

impl<'a> Sub<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        self + &(-rhs)
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl<'a> Mul<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        if self.order != rhs.order {
            if self.is_rational() {
                return rhs.scale(&self.coeffs[0]);
            }
            if rhs.is_rational() {
                return self.scale(&rhs.coeffs[0]);
            }
            let (a, b) = self.lift_pair(rhs);
            return &a * &b;
        }
        if self.coeffs.len() == 1 {
            return Cyclotomic {
                order: self.order,
                coeffs: vec![&self.coeffs[0] * &rhs.coeffs[0]],
            };
        }
        let n = self.coeffs.len();
        let mut poly = vec![Rational::zero(); 2 * n - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    poly[i + j] += a * b;
                }
            }
        }
        Cyclotomic::from_poly(self.order, poly)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: Cyclotomic) -> Cyclotomic {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

impl AddAssign<&Cyclotomic> for Cyclotomic {
    fn add_assign(&mut self, rhs: &Cyclotomic) {
        *self = &*self + rhs;
    }
}

impl std::iter::Sum for Cyclotomic {
    fn sum<I: Iterator<Item = Cyclotomic>>(iter: I) -> Self {
        iter.fold(Cyclotomic::zero(), |acc, x| &acc + &x)
    }
}

const SUB_DIGITS: [char; 10] = ['₀', '₁', '₂', '₃', '₄', '₅', '₆', '₇', '₈', '₉'];
const SUP_DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];

fn script(n: u64, digits: &[char; 10]) -> String {
    n.to_string()
        .chars()
        .map(|c| digits[c.to_digit(10).unwrap() as usize])
        .collect()
}

fn fmt_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.to_integer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Canonical printer: the reduced form as a sum of terms `c·ζₙʲ`, with `i`
/// used for ζ₄ and rationals printed plainly.
impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = self.reduced();
        if r.order == 1 {
            return write!(f, "{}", fmt_rational(&r.coeffs[0]));
        }
        let mut out = String::new();
        for (j, c) in r.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let unit = match (r.order, j) {
                (_, 0) => String::new(),
                (4, 1) => "i".to_string(),
                (n, 1) => format!("ζ{}", script(n, &SUB_DIGITS)),
                (n, j) => format!("ζ{}{}", script(n, &SUB_DIGITS), script(j as u64, &SUP_DIGITS)),
            };
            let neg = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if unit.is_empty() {
                out.push_str(&fmt_rational(&mag));
            } else if mag.is_one() {
                out.push_str(&unit);
            } else {
                out.push_str(&fmt_rational(&mag));
                out.push_str(&unit);
            }
        }
        write!(f, "{out}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(*cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(*cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(*cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(*cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        for n in 1..40 {
            assert_eq!(cyclotomic_polynomial(n).len() as u64 - 1, totient(n));
        }
    }

    #[test]
    fn zeta_basics() {
        let i = Cyclotomic::zeta(4, 1);
        assert_eq!(i.order(), 4);
        assert_eq!(i.coeffs(), &[q(0, 1), q(1, 1)]);
        assert_eq!(Cyclotomic::zeta(7, 0), Cyclotomic::one());
        assert_eq!(&Cyclotomic::zeta(3, 1) + &Cyclotomic::zeta(3, 2), Cyclotomic::from_int(-1));
        assert_eq!(Cyclotomic::zeta(8, 2), Cyclotomic::zeta(4, 1));
        assert_eq!(&Cyclotomic::zeta(4, 1) * &Cyclotomic::zeta(4, 1), Cyclotomic::from_int(-1));
    }

    #[test]
    fn conjugation_and_products() {
        assert_eq!(Cyclotomic::zeta(4, 1).conjugate(), Cyclotomic::zeta(4, 3));
        assert_eq!(&Cyclotomic::zeta(5, 1) * &Cyclotomic::zeta(5, 4), Cyclotomic::one());
    }

    #[test]
    fn sixth_roots_sum_to_one() {
        let s = &Cyclotomic::zeta(6, 1) + &Cyclotomic::zeta(6, 5);
        // numeric oracle: 2·cos(π/3)
        let (re, im) = s.to_f64_pair();
        assert!((re - 1.0).abs() < 1e-12 && im.abs() < 1e-12);
        assert_eq!(s.as_rational().unwrap(), q(1, 1));
    }

    #[test]
    fn as_rational_rejects_irrational() {
        assert_eq!(Cyclotomic::zeta(3, 1).as_rational(), Err(Error::NotRational));
    }

    #[test]
    fn reduction_finds_conductor() {
        let x = Cyclotomic::zeta(12, 4).embed(24);
        let r = x.reduced();
        assert_eq!(r.order(), 3);
        assert_eq!(r, Cyclotomic::zeta(3, 1));
        // ζ₆ = -ζ₃²
        assert_eq!(Cyclotomic::zeta(6, 1).reduced().order(), 3);
        // i·√2 type element stays at order 8
        let y = &Cyclotomic::zeta(8, 1) + &Cyclotomic::zeta(8, 3);
        assert_eq!(y.reduced().order(), 8);
        assert_eq!(Cyclotomic::from_int(-1).embed(10).reduced().order(), 1);
    }

    #[test]
    fn inverse_round_trip() {
        let x = &Cyclotomic::zeta(5, 1) + &Cyclotomic::from_int(2);
        let inv = x.inverse().unwrap();
        assert!((&x * &inv).is_one());
        assert!(Cyclotomic::zero().inverse().is_none());
    }

    #[test]
    fn printer() {
        assert_eq!(Cyclotomic::from_int(-1).to_string(), "-1");
        assert_eq!(Cyclotomic::zeta(4, 1).to_string(), "i");
        assert_eq!(Cyclotomic::zeta(8, 3).to_string(), "ζ₈³");
        assert_eq!(Cyclotomic::zeta(3, 2).to_string(), "-1 - ζ₃");
        assert_eq!(Cyclotomic::from_rational(q(3, 2)).to_string(), "3/2");
    }

    #[test]
    fn canonical_order_puts_one_first() {
        let one = Cyclotomic::one();
        for v in [Cyclotomic::from_int(-1), Cyclotomic::zeta(4, 1), Cyclotomic::zeta(3, 2)] {
            assert_eq!(one.canonical_cmp(&v), Ordering::Less);
        }
    }
}
