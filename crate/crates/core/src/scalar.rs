//! Exact coefficient ring.
//!
//! A [`Scalar`] is a fraction `N / (q^a · q̄^b · (1+qq̄)^c)` where `N` is an
//! integer polynomial in the commuting indeterminates `q`, `q̄`, `λ`, `ρ`.
//! Only `q`, `q̄` and `σ² = 1+qq̄` are ever inverted.
//!
//! Canonical form: the numerator shares no factor `q` (resp. `q̄`, `1+qq̄`)
//! with a nontrivial denominator power, and zero has all exponents zero.
//! The three are pairwise coprime primes, so canonical forms are unique.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_complex::Complex64;
use thiserror::Error;

const Q: usize = 0;
const QB: usize = 1;
const LAM: usize = 2;
const RHO: usize = 3;

/// Exponent vector over `(q, q̄, λ, ρ)`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Exps(pub [u16; 4]);

impl Exps {
    fn add(self, other: Exps) -> Exps {
        let mut out = self.0;
        for (o, e) in out.iter_mut().zip(other.0) {
            *o = o.checked_add(e).expect("exponent overflow");
        }
        Exps(out)
    }

    fn total(self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }
}

fn checked_add(a: i128, b: i128) -> i128 {
    a.checked_add(b).expect("scalar coefficient overflow")
}

fn checked_mul(a: i128, b: i128) -> i128 {
    a.checked_mul(b).expect("scalar coefficient overflow")
}

/// Sparse integer polynomial in `q, q̄, λ, ρ`. No zero coefficients are stored.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Poly {
    terms: BTreeMap<Exps, i128>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn constant(c: i128) -> Self {
        Poly::monomial(c, Exps::default())
    }

    pub fn monomial(c: i128, e: Exps) -> Self {
        let mut terms = BTreeMap::new();
        if c != 0 {
            terms.insert(e, c);
        }
        Poly { terms }
    }

    fn var(i: usize) -> Self {
        let mut e = [0; 4];
        e[i] = 1;
        Poly::monomial(1, Exps(e))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exps, &i128)> {
        self.terms.iter()
    }

    /// `1 + q q̄`
    fn sigma2() -> Self {
        let mut p = Poly::constant(1);
        p.terms.insert(Exps([1, 1, 0, 0]), 1);
        p
    }

    fn add_term(&mut self, e: Exps, c: i128) {
        if c == 0 {
            return;
        }
        let slot = self.terms.entry(e).or_insert(0);
        *slot = checked_add(*slot, c);
        if *slot == 0 {
            self.terms.remove(&e);
        }
    }

    fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (&e, &c) in &other.terms {
            out.add_term(e, c);
        }
        out
    }

    fn neg(&self) -> Poly {
        Poly { terms: self.terms.iter().map(|(&e, &c)| (e, -c)).collect() }
    }

    fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (&e1, &c1) in &self.terms {
            for (&e2, &c2) in &other.terms {
                out.add_term(e1.add(e2), checked_mul(c1, c2));
            }
        }
        out
    }

    fn shift(&self, var: usize, by: u16) -> Poly {
        if by == 0 {
            return self.clone();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(&e, &c)| {
                    let mut x = e.0;
                    x[var] += by;
                    (Exps(x), c)
                })
                .collect(),
        }
    }

    fn pow(&self, n: u16) -> Poly {
        let mut out = Poly::constant(1);
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    fn divisible_by_var(&self, var: usize) -> bool {
        self.terms.keys().all(|e| e.0[var] > 0)
    }

    fn div_var(&self, var: usize) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(&e, &c)| {
                    let mut x = e.0;
                    x[var] -= 1;
                    (Exps(x), c)
                })
                .collect(),
        }
    }

    /// Exact division by `1 + q q̄`, if possible.
    ///
    /// Multiplication by `1 + t` (`t = q q̄`) preserves the class of a monomial
    /// `q^i q̄^j λ^a ρ^b` given by `(i - j, a, b)`, so divisibility reduces to
    /// univariate synthetic division by `1 + t` within each class.
    fn div_sigma2(&self) -> Option<Poly> {
        if self.is_zero() {
            return Some(Poly::zero());
        }
        let mut classes: BTreeMap<(i32, u16, u16), BTreeMap<u16, i128>> = BTreeMap::new();
        for (&e, &c) in &self.terms {
            let [i, j, a, b] = e.0;
            let m = i.min(j);
            classes.entry((i as i32 - j as i32, a, b)).or_default().insert(m, c);
        }
        let mut out = Poly::zero();
        for ((d, a, b), coeffs) in classes {
            let deg = *coeffs.keys().next_back().unwrap();
            if deg == 0 {
                return None;
            }
            let c = |m: u16| coeffs.get(&m).copied().unwrap_or(0);
            let mut s = vec![0i128; deg as usize];
            s[deg as usize - 1] = c(deg);
            for m in (1..deg).rev() {
                s[m as usize - 1] = c(m) - s[m as usize];
            }
            if c(0) != s[0] {
                return None;
            }
            let (bi, bj) = if d >= 0 { (d as u16, 0) } else { (0, (-d) as u16) };
            for (m, &coef) in s.iter().enumerate() {
                let m = m as u16;
                out.add_term(Exps([bi + m, bj + m, a, b]), coef);
            }
        }
        Some(out)
    }

    fn swap_q(&self) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(&e, &c)| {
                    let [i, j, a, b] = e.0;
                    (Exps([j, i, a, b]), c)
                })
                .collect(),
        }
    }

    fn eval(&self, vals: [Complex64; 4]) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for (e, &c) in &self.terms {
            let mut t = Complex64::new(c as f64, 0.0);
            for (v, &p) in vals.iter().zip(e.0.iter()) {
                t *= v.powu(p as u32);
            }
            acc += t;
        }
        acc
    }

    /// Terms in print order: descending total degree, then descending exponents.
    fn print_order(&self) -> Vec<(Exps, i128)> {
        let mut v: Vec<_> = self.terms.iter().map(|(&e, &c)| (e, c)).collect();
        v.sort_by(|(a, _), (b, _)| b.total().cmp(&a.total()).then(b.cmp(a)));
        v
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ScalarError {
    #[error("sample point q0 = {0} must satisfy 0 < |q0| < 1")]
    BadSamplePoint(Complex64),
    #[error("{0} is not invertible in the coefficient ring")]
    NotInvertible(String),
}

/// Exact element of `Z[q, q̄, λ, ρ]` localized at `q`, `q̄` and `1+qq̄`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Scalar {
    num: Poly,
    den_q: u16,
    den_qbar: u16,
    den_sigma2: u16,
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl Scalar {
    fn from_parts(num: Poly, den_q: u16, den_qbar: u16, den_sigma2: u16) -> Scalar {
        let mut s = Scalar { num, den_q, den_qbar, den_sigma2 };
        s.canonicalize();
        s
    }

    fn canonicalize(&mut self) {
        if self.num.is_zero() {
            self.den_q = 0;
            self.den_qbar = 0;
            self.den_sigma2 = 0;
            return;
        }
        while self.den_q > 0 && self.num.divisible_by_var(Q) {
            self.num = self.num.div_var(Q);
            self.den_q -= 1;
        }
        while self.den_qbar > 0 && self.num.divisible_by_var(QB) {
            self.num = self.num.div_var(QB);
            self.den_qbar -= 1;
        }
        while self.den_sigma2 > 0 {
            match self.num.div_sigma2() {
                Some(p) => {
                    self.num = p;
                    self.den_sigma2 -= 1;
                }
                None => break,
            }
        }
    }

    /// Re-run canonicalization; used by tests to confirm the fixed point.
    pub fn recanonicalized(&self) -> Scalar {
        Scalar::from_parts(self.num.clone(), self.den_q, self.den_qbar, self.den_sigma2)
    }

    pub fn zero() -> Scalar {
        Scalar { num: Poly::zero(), den_q: 0, den_qbar: 0, den_sigma2: 0 }
    }

    pub fn one() -> Scalar {
        Scalar::int(1)
    }

    pub fn int(c: i64) -> Scalar {
        Scalar::from_parts(Poly::constant(c as i128), 0, 0, 0)
    }

    pub fn q() -> Scalar {
        Scalar::from_parts(Poly::var(Q), 0, 0, 0)
    }

    pub fn qbar() -> Scalar {
        Scalar::from_parts(Poly::var(QB), 0, 0, 0)
    }

    pub fn lambda() -> Scalar {
        Scalar::from_parts(Poly::var(LAM), 0, 0, 0)
    }

    pub fn rho() -> Scalar {
        Scalar::from_parts(Poly::var(RHO), 0, 0, 0)
    }

    /// `ζ = q / q̄`
    pub fn zeta() -> Scalar {
        Scalar::from_parts(Poly::var(Q), 0, 1, 0)
    }

    /// `ζ̄ = q̄ / q`
    pub fn zeta_bar() -> Scalar {
        Scalar::from_parts(Poly::var(QB), 1, 0, 0)
    }

    /// `ς = |q|² = q q̄`
    pub fn varsigma() -> Scalar {
        Scalar::from_parts(Poly::monomial(1, Exps([1, 1, 0, 0])), 0, 0, 0)
    }

    /// `σ² = 1 + q q̄`
    pub fn sigma2() -> Scalar {
        Scalar::from_parts(Poly::sigma2(), 0, 0, 0)
    }

    /// `q^a q̄^b` for any integers `a`, `b`.
    pub fn q_power(a: i64, b: i64) -> Scalar {
        let e = |x: i64| u16::try_from(x.unsigned_abs()).expect("exponent overflow");
        let num = Poly::constant(1).shift(Q, if a > 0 { e(a) } else { 0 }).shift(QB, if b > 0 { e(b) } else { 0 });
        Scalar::from_parts(num, if a < 0 { e(a) } else { 0 }, if b < 0 { e(b) } else { 0 }, 0)
    }

    /// `ς^e = (q q̄)^e`.
    pub fn varsigma_pow(e: i64) -> Scalar {
        Scalar::q_power(e, e)
    }

    /// `ζ^n` for any integer `n`.
    pub fn zeta_pow(n: i64) -> Scalar {
        Scalar::q_power(n, -n)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        *self == Scalar::one()
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    /// Denominator exponents `(a, b, c)` of `q^a q̄^b (1+qq̄)^c`.
    pub fn denominator(&self) -> (u16, u16, u16) {
        (self.den_q, self.den_qbar, self.den_sigma2)
    }

    /// True when the scalar does not involve `λ` or `ρ`.
    pub fn is_parameter_free(&self) -> bool {
        self.num.terms.keys().all(|e| e.0[LAM] == 0 && e.0[RHO] == 0)
    }

    pub fn pow(&self, n: u32) -> Scalar {
        let mut out = Scalar::one();
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    /// Integer power; negative exponents require an invertible base.
    pub fn powi(&self, n: i64) -> Result<Scalar, ScalarError> {
        if n >= 0 {
            Ok(self.pow(n as u32))
        } else {
            Ok(self.inv()?.pow((-n) as u32))
        }
    }

    /// Inverse, defined when the numerator is `±q^a q̄^b (1+qq̄)^c`.
    pub fn inv(&self) -> Result<Scalar, ScalarError> {
        let err = || ScalarError::NotInvertible(self.to_string());
        if self.is_zero() {
            return Err(err());
        }
        let mut p = self.num.clone();
        let (mut a, mut b, mut c) = (0u16, 0u16, 0u16);
        while !p.is_zero() && p.divisible_by_var(Q) {
            p = p.div_var(Q);
            a += 1;
        }
        while !p.is_zero() && p.divisible_by_var(QB) {
            p = p.div_var(QB);
            b += 1;
        }
        loop {
            if p.terms.len() == 1 {
                break;
            }
            match p.div_sigma2() {
                Some(r) => {
                    p = r;
                    c += 1;
                }
                None => return Err(err()),
            }
        }
        let (&e, &sign) = p.terms.iter().next().unwrap();
        if e != Exps::default() || sign.abs() != 1 {
            return Err(err());
        }
        let num = Poly::constant(sign)
            .shift(Q, self.den_q)
            .shift(QB, self.den_qbar)
            .mul(&Poly::sigma2().pow(self.den_sigma2));
        Ok(Scalar::from_parts(num, a, b, c))
    }

    /// Complex conjugation: swaps `q ↔ q̄`, fixes the real parameters `λ, ρ`.
    pub fn conj(&self) -> Scalar {
        Scalar::from_parts(self.num.swap_q(), self.den_qbar, self.den_q, self.den_sigma2)
    }

    /// Evaluate at `q = q0`, `q̄ = conj(q0)`, `λ = lam0`, `ρ = rho0`.
    pub fn eval(&self, q0: Complex64, lam0: f64, rho0: f64) -> Result<Complex64, ScalarError> {
        check_sample_point(q0)?;
        Ok(self.eval_unchecked(q0, lam0, rho0))
    }

    pub(crate) fn eval_unchecked(&self, q0: Complex64, lam0: f64, rho0: f64) -> Complex64 {
        let qb0 = q0.conj();
        let vals = [q0, qb0, Complex64::new(lam0, 0.0), Complex64::new(rho0, 0.0)];
        let num = self.num.eval(vals);
        let s2 = 1.0 + q0.norm_sqr();
        let den = q0.powu(self.den_q as u32) * qb0.powu(self.den_qbar as u32) * s2.powi(self.den_sigma2 as i32);
        num / den
    }

    fn common(&self, other: &Scalar) -> (Poly, Poly, u16, u16, u16) {
        let a = self.den_q.max(other.den_q);
        let b = self.den_qbar.max(other.den_qbar);
        let c = self.den_sigma2.max(other.den_sigma2);
        let lift = |s: &Scalar| {
            s.num.shift(Q, a - s.den_q).shift(QB, b - s.den_qbar).mul(&Poly::sigma2().pow(c - s.den_sigma2))
        };
        (lift(self), lift(other), a, b, c)
    }
}

pub fn check_sample_point(q0: Complex64) -> Result<(), ScalarError> {
    let r = q0.norm();
    if !(r > 0.0 && r < 1.0) || !r.is_finite() {
        return Err(ScalarError::BadSamplePoint(q0));
    }
    Ok(())
}

impl Add<&Scalar> for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return rhs.clone();
        }
        let (x, y, a, b, c) = self.common(rhs);
        Scalar::from_parts(x.add(&y), a, b, c)
    }
}

impl Sub<&Scalar> for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Mul<&Scalar> for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        if self.is_zero() || rhs.is_zero() {
            return Scalar::zero();
        }
        Scalar::from_parts(
            self.num.mul(&rhs.num),
            self.den_q + rhs.den_q,
            self.den_qbar + rhs.den_qbar,
            self.den_sigma2 + rhs.den_sigma2,
        )
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { num: self.num.neg(), ..self.clone() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = &*self + rhs;
    }
}

impl From<i64> for Scalar {
    fn from(c: i64) -> Self {
        Scalar::int(c)
    }
}

const NAMES: [&str; 4] = ["q", "qb", "lam", "rho"];

fn fmt_power(f: &mut fmt::Formatter<'_>, name: &str, e: u16) -> fmt::Result {
    if e == 1 {
        write!(f, "{name}")
    } else {
        write!(f, "{name}^{e}")
    }
}

fn fmt_poly(f: &mut fmt::Formatter<'_>, p: &Poly) -> fmt::Result {
    if p.is_zero() {
        return write!(f, "0");
    }
    for (idx, (e, c)) in p.print_order().into_iter().enumerate() {
        let mag = c.unsigned_abs();
        if idx == 0 {
            if c < 0 {
                write!(f, "-")?;
            }
        } else if c < 0 {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        let vars: Vec<(usize, u16)> = e.0.iter().enumerate().filter(|(_, &x)| x > 0).map(|(i, &x)| (i, x)).collect();
        let mut first = true;
        if mag != 1 || vars.is_empty() {
            write!(f, "{mag}")?;
            first = false;
        }
        for (i, x) in vars {
            if !first {
                write!(f, "*")?;
            }
            fmt_power(f, NAMES[i], x)?;
            first = false;
        }
    }
    Ok(())
}

/// Text form: `numerator` or `(numerator) / q^a qb^b s2^c`.
impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den_q == 0 && self.den_qbar == 0 && self.den_sigma2 == 0 {
            return fmt_poly(f, &self.num);
        }
        write!(f, "(")?;
        fmt_poly(f, &self.num)?;
        write!(f, ") /")?;
        for (name, e) in [("q", self.den_q), ("qb", self.den_qbar), ("s2", self.den_sigma2)] {
            if e > 0 {
                write!(f, " ")?;
                fmt_power(f, name, e)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs() -> Scalar {
        Scalar::varsigma()
    }

    #[test]
    fn varsigma_plus_one_is_sigma2() {
        assert_eq!(vs() + Scalar::one(), Scalar::sigma2());
    }

    #[test]
    fn additive_identity() {
        let x = Scalar::zeta() * Scalar::lambda() + Scalar::int(3);
        assert_eq!(&x + &Scalar::zero(), x);
    }

    #[test]
    fn zeta_plus_zeta_bar() {
        // (q² + q̄²) / (q q̄), reduced by hand
        let z = Scalar::zeta() + Scalar::zeta_bar();
        let expected = Scalar::from_parts(
            Poly::monomial(1, Exps([2, 0, 0, 0])).add(&Poly::monomial(1, Exps([0, 2, 0, 0]))),
            1,
            1,
            0,
        );
        assert_eq!(z, expected);
        assert_eq!(z.to_string(), "(q^2 + qb^2) / q qb");
    }

    #[test]
    fn zeta_times_zeta_bar() {
        assert_eq!(Scalar::zeta() * Scalar::zeta_bar(), Scalar::one());
    }

    #[test]
    fn varsigma_inverse() {
        assert_eq!(vs() * vs().inv().unwrap(), Scalar::one());
    }

    #[test]
    fn sigma2_squared() {
        let s4 = Scalar::sigma2() * Scalar::sigma2();
        let expected = Scalar::one() + Scalar::int(2) * vs() + vs() * vs();
        assert_eq!(s4, expected);
    }

    #[test]
    fn sigma2_cancels() {
        let x = Scalar::sigma2() * Scalar::sigma2().inv().unwrap();
        assert!(x.is_one());
        let y = (Scalar::one() + vs()) * Scalar::rho() * Scalar::sigma2().inv().unwrap();
        assert_eq!(y, Scalar::rho());
        assert_eq!(y.denominator(), (0, 0, 0));
    }

    #[test]
    fn non_units_refuse_inversion() {
        assert!(Scalar::lambda().inv().is_err());
        assert!(Scalar::int(2).inv().is_err());
        assert!(Scalar::zero().inv().is_err());
        assert!((Scalar::q() + Scalar::one()).inv().is_err());
    }

    #[test]
    fn conj_examples() {
        assert_eq!(Scalar::zeta().conj(), Scalar::zeta_bar());
        assert_eq!(vs().conj(), vs());
        let x = Scalar::q().pow(2) * Scalar::lambda();
        assert_eq!(x.conj(), Scalar::qbar().pow(2) * Scalar::lambda());
    }

    #[test]
    fn eval_examples() {
        let q0 = Complex64::new(0.3, 0.4);
        let v = vs().eval(q0, 0.0, 0.0).unwrap();
        assert!((v - Complex64::new(0.25, 0.0)).norm() < 1e-15);
        assert_eq!(Scalar::one().eval(q0, 0.0, 0.0).unwrap(), Complex64::new(1.0, 0.0));
        let z = Scalar::zeta().eval(q0, 0.0, 0.0).unwrap();
        assert!((z - q0 / q0.conj()).norm() < 1e-15);
    }

    #[test]
    fn eval_rejects_bad_points() {
        assert!(Scalar::one().eval(Complex64::new(0.0, 0.0), 0.0, 0.0).is_err());
        assert!(Scalar::one().eval(Complex64::new(1.0, 0.0), 0.0, 0.0).is_err());
        assert!(Scalar::one().eval(Complex64::new(0.8, 0.8), 0.0, 0.0).is_err());
    }

    #[test]
    fn zero_is_unique() {
        let x = Scalar::zeta() - Scalar::zeta();
        assert_eq!(x, Scalar::zero());
        assert_eq!(x.denominator(), (0, 0, 0));
        assert_eq!(x.to_string(), "0");
    }

    #[test]
    fn display_forms() {
        assert_eq!(Scalar::sigma2().to_string(), "q*qb + 1");
        assert_eq!((-Scalar::q()).to_string(), "-q");
        assert_eq!(Scalar::sigma2().inv().unwrap().to_string(), "(1) / s2");
        assert_eq!((Scalar::int(-3) * Scalar::lambda() * Scalar::rho().pow(2)).to_string(), "-3*lam*rho^2");
    }
}
