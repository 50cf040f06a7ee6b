//! N-leg ζ-twisted braided products of graded algebras.
//!
//! A term is a tuple of leg monomials read as `j₁(m₁) j₂(m₂) ⋯ j_N(m_N)`.
//! Homogeneous elements on legs `s < t` obey
//! `j_t(b) j_s(a) = ζ̄^{deg a · deg b} j_s(a) j_t(b)`.

use std::collections::BTreeMap;
use std::fmt;
use std::marker::PhantomData;

use thiserror::Error;

use crate::algebra::{fmt_sum, Algebra, Element, ElementInterp};
use crate::circle::Circle;
use crate::expr::{eval, parse_expr, Expr, Interp, ParseError};
use crate::scalar::Scalar;
use crate::sphere::{Sphere, SphereMono};
use crate::suq2::{Suq2, Suq2Mono};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum LegKind {
    Suq2,
    Circle,
    Sphere,
}

impl fmt::Display for LegKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LegKind::Suq2 => "suq2",
            LegKind::Circle => "circle",
            LegKind::Sphere => "sphere",
        })
    }
}

impl LegKind {
    fn unit(self) -> LegMono {
        match self {
            LegKind::Suq2 => LegMono::Su(Suq2::unit()),
            LegKind::Circle => LegMono::Circ(0),
            LegKind::Sphere => LegMono::Sph(Sphere::unit()),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum LegMono {
    Su(Suq2Mono),
    Circ(i64),
    Sph(SphereMono),
}

fn lift<A: Algebra>(e: Element<A>) -> Vec<(LegMono, Scalar)> {
    e.terms().map(|(m, c)| (A::to_leg(m), c.clone())).collect()
}

impl LegMono {
    pub fn kind(&self) -> LegKind {
        match self {
            LegMono::Su(_) => LegKind::Suq2,
            LegMono::Circ(_) => LegKind::Circle,
            LegMono::Sph(_) => LegKind::Sphere,
        }
    }

    pub fn degree(&self) -> i64 {
        match self {
            LegMono::Su(m) => Suq2::degree(m),
            LegMono::Circ(m) => Circle::degree(m),
            LegMono::Sph(m) => Sphere::degree(m),
        }
    }

    pub fn is_unit(&self) -> bool {
        *self == self.kind().unit()
    }

    fn mul(&self, o: &LegMono) -> Vec<(LegMono, Scalar)> {
        match (self, o) {
            (LegMono::Su(x), LegMono::Su(y)) => lift(Suq2::mul_mono(x, y)),
            (LegMono::Circ(x), LegMono::Circ(y)) => lift(Circle::mul_mono(x, y)),
            (LegMono::Sph(x), LegMono::Sph(y)) => lift(Sphere::mul_mono(x, y)),
            _ => panic!("leg kind mismatch"),
        }
    }

    fn star(&self) -> Vec<(LegMono, Scalar)> {
        match self {
            LegMono::Su(x) => lift(Suq2::star_mono(x)),
            LegMono::Circ(x) => lift(Circle::star_mono(x)),
            LegMono::Sph(x) => lift(Sphere::star_mono(x)),
        }
    }

    fn fmt_inner(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return write!(f, "1");
        }
        match self {
            LegMono::Su(x) => Suq2::fmt_mono(x, f),
            LegMono::Circ(x) => Circle::fmt_mono(x, f),
            LegMono::Sph(x) => Sphere::fmt_mono(x, f),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum BraidedError {
    #[error("leg signature mismatch: {0:?} vs {1:?}")]
    Signature(Vec<LegKind>, Vec<LegKind>),
    #[error("leg map changes degree of {mono}: {from} -> {to}")]
    Degree { mono: String, from: i64, to: i64 },
}

/// Per-leg morphism for [`BraidedElement::map_legs`].
pub enum LegMorphism<'a> {
    Id,
    Map { target: Vec<LegKind>, f: &'a (dyn Fn(&LegMono) -> BraidedElement + Sync) },
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BraidedElement {
    kinds: Vec<LegKind>,
    terms: BTreeMap<Vec<LegMono>, Scalar>,
}

impl BraidedElement {
    pub fn zero(kinds: &[LegKind]) -> Self {
        BraidedElement { kinds: kinds.to_vec(), terms: BTreeMap::new() }
    }

    pub fn one(kinds: &[LegKind]) -> Self {
        let mut e = Self::zero(kinds);
        e.add_term(kinds.iter().map(|k| k.unit()).collect(), &Scalar::one());
        e
    }

    pub fn scalar(kinds: &[LegKind], c: &Scalar) -> Self {
        Self::one(kinds).scaled(c)
    }

    /// `j_leg(x)` with units on the other legs.
    pub fn embed<A: Algebra>(kinds: &[LegKind], leg: usize, x: &Element<A>) -> Self {
        assert_eq!(kinds[leg], A::KIND, "leg kind mismatch");
        let mut out = Self::zero(kinds);
        for (m, c) in x.terms() {
            let mut t: Vec<LegMono> = kinds.iter().map(|k| k.unit()).collect();
            t[leg] = A::to_leg(m);
            out.add_term(t, c);
        }
        out
    }

    /// `j₁(x) j₂(y)`.
    pub fn pair<A: Algebra, B: Algebra>(x: &Element<A>, y: &Element<B>) -> Self {
        Self::embed(&[A::KIND], 0, x).tensor(&Self::embed(&[B::KIND], 0, y))
    }

    pub fn kinds(&self) -> &[LegKind] {
        &self.kinds
    }

    pub fn legs(&self) -> usize {
        self.kinds.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<LegMono>, &Scalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn coeff(&self, t: &[LegMono]) -> Scalar {
        self.terms.get(t).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, t: Vec<LegMono>, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        debug_assert!(t.iter().zip(&self.kinds).all(|(m, k)| m.kind() == *k));
        match self.terms.get_mut(&t) {
            Some(slot) => {
                *slot = &*slot + c;
                if slot.is_zero() {
                    self.terms.remove(&t);
                }
            }
            None => {
                self.terms.insert(t, c.clone());
            }
        }
    }

    fn check(&self, o: &Self) -> Result<(), BraidedError> {
        if self.kinds != o.kinds {
            return Err(BraidedError::Signature(self.kinds.clone(), o.kinds.clone()));
        }
        Ok(())
    }

    pub fn try_plus(&self, o: &Self) -> Result<Self, BraidedError> {
        self.check(o)?;
        let mut out = self.clone();
        for (t, c) in &o.terms {
            out.add_term(t.clone(), c);
        }
        Ok(out)
    }

    pub fn plus(&self, o: &Self) -> Self {
        self.try_plus(o).unwrap()
    }

    pub fn minus(&self, o: &Self) -> Self {
        self.plus(&o.scaled(&Scalar::int(-1)))
    }

    pub fn scaled(&self, s: &Scalar) -> Self {
        let mut out = Self::zero(&self.kinds);
        if s.is_zero() {
            return out;
        }
        out.terms = self.terms.iter().map(|(t, c)| (t.clone(), c * s)).collect();
        out
    }

    pub fn try_times(&self, o: &Self) -> Result<Self, BraidedError> {
        self.check(o)?;
        let mut out = Self::zero(&self.kinds);
        for (tx, cx) in &self.terms {
            for (ty, cy) in &o.terms {
                // y_s moves left past x_t for every s < t
                let mut e = 0i64;
                for s in 0..ty.len() {
                    let ds = ty[s].degree();
                    if ds == 0 {
                        continue;
                    }
                    for xt in &tx[s + 1..] {
                        e += ds * xt.degree();
                    }
                }
                let c = &(cx * cy) * &Scalar::zeta_pow(-e);
                let mut acc: Vec<(Vec<LegMono>, Scalar)> = vec![(Vec::with_capacity(tx.len()), c)];
                for (a, b) in tx.iter().zip(ty) {
                    let prods = a.mul(b);
                    let mut next = Vec::with_capacity(acc.len() * prods.len());
                    for (t, c) in &acc {
                        for (m, k) in &prods {
                            let mut t = t.clone();
                            t.push(*m);
                            next.push((t, c * k));
                        }
                    }
                    acc = next;
                }
                for (t, c) in acc {
                    out.add_term(t, &c);
                }
            }
        }
        Ok(out)
    }

    pub fn times(&self, o: &Self) -> Self {
        self.try_times(o).unwrap()
    }

    /// Tensor concatenation of legs: `j_{1..N}(self) j_{N+1..N+M}(o)`, no twist.
    pub fn tensor(&self, o: &Self) -> Self {
        let mut kinds = self.kinds.clone();
        kinds.extend(&o.kinds);
        let mut out = Self::zero(&kinds);
        for (tx, cx) in &self.terms {
            for (ty, cy) in &o.terms {
                let mut t = tx.clone();
                t.extend(ty);
                out.add_term(t, &(cx * cy));
            }
        }
        out
    }

    fn single(&self, leg: usize, m: LegMono) -> Self {
        let mut t: Vec<LegMono> = self.kinds.iter().map(|k| k.unit()).collect();
        t[leg] = m;
        let mut e = Self::zero(&self.kinds);
        e.add_term(t, &Scalar::one());
        e
    }

    /// Reverse the legs, star each entry, and re-multiply in canonical order.
    pub fn star(&self) -> Self {
        let mut out = Self::zero(&self.kinds);
        for (t, c) in &self.terms {
            let mut acc = Self::scalar(&self.kinds, &c.conj());
            for (i, m) in t.iter().enumerate().rev() {
                if m.is_unit() {
                    continue;
                }
                let mut leg = Self::zero(&self.kinds);
                for (sm, k) in m.star() {
                    leg = leg.plus(&self.single(i, sm).scaled(&k));
                }
                acc = acc.times(&leg);
            }
            out = out.plus(&acc);
        }
        out
    }

    /// Terms whose monomial on `leg` has degree `d`.
    pub fn leg_project(&self, leg: usize, d: i64) -> Self {
        let mut out = Self::zero(&self.kinds);
        out.terms =
            self.terms.iter().filter(|(t, _)| t[leg].degree() == d).map(|(t, c)| (t.clone(), c.clone())).collect();
        out
    }

    /// Distinct degrees on `leg`, ascending.
    pub fn leg_degrees(&self, leg: usize) -> Vec<i64> {
        let mut d: Vec<i64> = self.terms.keys().map(|t| t[leg].degree()).collect();
        d.sort_unstable();
        d.dedup();
        d
    }

    /// Apply one morphism per leg and concatenate the images.
    pub fn map_legs(&self, maps: &[LegMorphism<'_>]) -> Result<Self, BraidedError> {
        assert_eq!(maps.len(), self.kinds.len(), "one morphism per leg");
        let mut kinds = Vec::new();
        for (map, k) in maps.iter().zip(&self.kinds) {
            match map {
                LegMorphism::Id => kinds.push(*k),
                LegMorphism::Map { target, .. } => kinds.extend(target),
            }
        }
        let mut out = Self::zero(&kinds);
        for (t, c) in &self.terms {
            let mut acc = Self::scalar(&[], c);
            for (m, map) in t.iter().zip(maps) {
                let img = match map {
                    LegMorphism::Id => Self::zero(&[m.kind()]).single(0, *m),
                    LegMorphism::Map { target, f } => {
                        let img = f(m);
                        if img.kinds != *target {
                            return Err(BraidedError::Signature(target.clone(), img.kinds.clone()));
                        }
                        for it in img.terms.keys() {
                            let d: i64 = it.iter().map(|x| x.degree()).sum();
                            if d != m.degree() {
                                return Err(BraidedError::Degree { mono: format!("{m:?}"), from: m.degree(), to: d });
                            }
                        }
                        img
                    }
                };
                acc = acc.tensor(&img);
            }
            out = out.plus(&acc);
        }
        Ok(out)
    }

    pub fn map_coeffs(&self, f: impl Fn(&Scalar) -> Scalar) -> Self {
        let mut out = Self::zero(&self.kinds);
        for (t, c) in &self.terms {
            out.add_term(t.clone(), &f(c));
        }
        out
    }

    pub fn parse(kinds: &[LegKind], src: &str) -> Result<Self, ParseError> {
        eval(&parse_expr(src)?, &BraidedInterp { kinds })
    }
}

impl fmt::Display for BraidedElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_sum(
            f,
            self.terms.iter(),
            |t: &Vec<LegMono>| t.is_empty(),
            |t, f| {
                for (i, m) in t.iter().enumerate() {
                    if i > 0 {
                        write!(f, "*")?;
                    }
                    write!(f, "j{}(", i + 1)?;
                    m.fmt_inner(f)?;
                    write!(f, ")")?;
                }
                Ok(())
            },
        )
    }
}

struct BraidedInterp<'a> {
    kinds: &'a [LegKind],
}

impl Interp for BraidedInterp<'_> {
    type Val = BraidedElement;

    fn scalar(&self, s: Scalar) -> BraidedElement {
        BraidedElement::scalar(self.kinds, &s)
    }

    fn atom(&self, name: &str, _: Option<&[i64]>) -> Result<BraidedElement, ParseError> {
        Err(ParseError::Unknown(name.to_string()))
    }

    fn call(&self, name: &str, arg: &Expr) -> Result<BraidedElement, ParseError> {
        let leg = name
            .strip_prefix('j')
            .and_then(|s| s.parse::<usize>().ok())
            .filter(|&i| i >= 1 && i <= self.kinds.len())
            .ok_or_else(|| ParseError::Unknown(format!("{name}(...)")))?
            - 1;
        Ok(match self.kinds[leg] {
            LegKind::Suq2 => BraidedElement::embed(self.kinds, leg, &eval(arg, &ElementInterp::<Suq2>(PhantomData))?),
            LegKind::Circle => {
                BraidedElement::embed(self.kinds, leg, &eval(arg, &ElementInterp::<Circle>(PhantomData))?)
            }
            LegKind::Sphere => {
                BraidedElement::embed(self.kinds, leg, &eval(arg, &ElementInterp::<Sphere>(PhantomData))?)
            }
        })
    }

    fn add(&self, a: &BraidedElement, b: &BraidedElement) -> BraidedElement {
        a.plus(b)
    }

    fn mul(&self, a: &BraidedElement, b: &BraidedElement) -> BraidedElement {
        a.times(b)
    }

    fn scale(&self, a: &BraidedElement, s: &Scalar) -> BraidedElement {
        a.scaled(s)
    }

    fn as_scalar(&self, v: &BraidedElement) -> Option<Scalar> {
        match v.terms.len() {
            0 => Some(Scalar::zero()),
            1 => {
                let (t, c) = v.terms.iter().next().unwrap();
                t.iter().all(|m| m.is_unit()).then(|| c.clone())
            }
            _ => None,
        }
    }
}
