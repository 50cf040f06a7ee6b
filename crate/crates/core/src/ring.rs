//! Minimal ring interface for matrix arithmetic, and a quadratic extension.

use crate::scalar::Scalar;

pub trait Ring: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn scale(&self, s: &Scalar) -> Self;

    fn neg(&self) -> Self {
        self.scale(&Scalar::int(-1))
    }

    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }
}

impl Ring for Scalar {
    fn zero() -> Self {
        Scalar::zero()
    }
    fn one() -> Self {
        Scalar::one()
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn scale(&self, s: &Scalar) -> Self {
        self * s
    }
}

/// `a + b·√s` over a base ring, with `s` a fixed central scalar.
///
/// `s = σ²` gives `σ`, `s = ς` gives `|q|`.
#[derive(Clone, PartialEq, Debug)]
pub struct RootPair<T> {
    pub a: T,
    pub b: T,
    pub s: Scalar,
}

impl<T: Ring> RootPair<T> {
    pub fn new(a: T, b: T, s: Scalar) -> Self {
        RootPair { a, b, s }
    }

    pub fn rational(a: T, s: Scalar) -> Self {
        RootPair { a, b: T::zero(), s }
    }

    /// `√s` itself.
    pub fn root(s: Scalar) -> Self {
        RootPair { a: T::zero(), b: T::one(), s }
    }

    /// `1/√s = √s / s`.
    pub fn inv_root(s: Scalar) -> Self {
        let inv = s.inv().expect("radicand must be a unit");
        RootPair { a: T::zero(), b: T::one().scale(&inv), s }
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn plus(&self, o: &Self) -> Self {
        debug_assert_eq!(self.s, o.s);
        RootPair { a: self.a.add(&o.a), b: self.b.add(&o.b), s: self.s.clone() }
    }

    pub fn times(&self, o: &Self) -> Self {
        debug_assert_eq!(self.s, o.s);
        let a = self.a.mul(&o.a).add(&self.b.mul(&o.b).scale(&self.s));
        let b = self.a.mul(&o.b).add(&self.b.mul(&o.a));
        RootPair { a, b, s: self.s.clone() }
    }

    pub fn scaled(&self, c: &Scalar) -> Self {
        RootPair { a: self.a.scale(c), b: self.b.scale(c), s: self.s.clone() }
    }
}
