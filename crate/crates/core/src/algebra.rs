//! Graded *-algebras with a monomial basis, and their sparse elements.

use std::collections::BTreeMap;
use std::fmt;
use std::hash::Hash;
use std::marker::PhantomData;
use std::str::FromStr;

use crate::braided::{LegKind, LegMono};
use crate::expr::{eval, parse_expr, Interp, ParseError};
use crate::ring::Ring;
use crate::scalar::Scalar;

pub trait Algebra: Clone + Copy + PartialEq + Eq + Hash + fmt::Debug + Default + Send + Sync + 'static {
    type Mono: Clone + Copy + Ord + Eq + Hash + fmt::Debug + Send + Sync;

    const KIND: LegKind;

    fn unit() -> Self::Mono;
    fn degree(m: &Self::Mono) -> i64;
    fn mul_mono(a: &Self::Mono, b: &Self::Mono) -> Element<Self>;
    fn star_mono(m: &Self::Mono) -> Element<Self>;
    /// Never called with the unit monomial.
    fn fmt_mono(m: &Self::Mono, f: &mut fmt::Formatter<'_>) -> fmt::Result;
    fn atom(name: &str, index: Option<&[i64]>) -> Option<Element<Self>>;
    fn to_leg(m: &Self::Mono) -> LegMono;
    fn from_leg(l: &LegMono) -> Option<Self::Mono>;
    /// Inverse of a monomial, for algebras where monomials are units.
    fn inv_mono(_m: &Self::Mono) -> Option<Self::Mono> {
        None
    }
}

/// Finite linear combination of basis monomials; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Element<A: Algebra> {
    terms: BTreeMap<A::Mono, Scalar>,
    _alg: PhantomData<A>,
}

impl<A: Algebra> Default for Element<A> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<A: Algebra> Element<A> {
    pub fn zero() -> Self {
        Element { terms: BTreeMap::new(), _alg: PhantomData }
    }

    pub fn one() -> Self {
        Self::mono(A::unit())
    }

    pub fn mono(m: A::Mono) -> Self {
        Self::term(Scalar::one(), m)
    }

    pub fn term(c: Scalar, m: A::Mono) -> Self {
        let mut e = Self::zero();
        e.add_term(m, &c);
        e
    }

    pub fn scalar(c: Scalar) -> Self {
        Self::term(c, A::unit())
    }

    pub fn from_terms(it: impl IntoIterator<Item = (A::Mono, Scalar)>) -> Self {
        let mut e = Self::zero();
        for (m, c) in it {
            e.add_term(m, &c);
        }
        e
    }

    pub fn add_term(&mut self, m: A::Mono, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(slot) => {
                *slot = &*slot + c;
                if slot.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&A::Mono, &Scalar)> {
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

    pub fn coeff(&self, m: &A::Mono) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// The coefficient of the unit, if the element is a scalar multiple of it.
    pub fn as_scalar(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(Scalar::zero()),
            1 => self.terms.get(&A::unit()).cloned(),
            _ => None,
        }
    }

    pub fn plus(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(*m, c);
        }
        out
    }

    pub fn minus(&self, o: &Self) -> Self {
        self.plus(&o.scaled(&Scalar::int(-1)))
    }

    pub fn negated(&self) -> Self {
        self.scaled(&Scalar::int(-1))
    }

    pub fn scaled(&self, s: &Scalar) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        Element { terms: self.terms.iter().map(|(m, c)| (*m, c * s)).collect(), _alg: PhantomData }
    }

    pub fn times(&self, o: &Self) -> Self {
        let mut out = Self::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                let c = c1 * c2;
                for (m, k) in A::mul_mono(m1, m2).terms {
                    out.add_term(m, &(&c * &k));
                }
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = acc.times(self);
        }
        acc
    }

    /// Antilinear involution.
    pub fn star(&self) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let cc = c.conj();
            for (sm, k) in A::star_mono(m).terms {
                out.add_term(sm, &(&cc * &k));
            }
        }
        out
    }

    pub fn grade_component(&self, d: i64) -> Self {
        self.filter(|m| A::degree(m) == d)
    }

    pub fn filter(&self, mut keep: impl FnMut(&A::Mono) -> bool) -> Self {
        Element {
            terms: self.terms.iter().filter(|(m, _)| keep(m)).map(|(m, c)| (*m, c.clone())).collect(),
            _alg: PhantomData,
        }
    }

    /// Degrees present, ascending.
    pub fn degrees(&self) -> Vec<i64> {
        let mut d: Vec<i64> = self.terms.keys().map(A::degree).collect();
        d.sort_unstable();
        d.dedup();
        d
    }

    /// The common degree of all terms; zero counts as homogeneous of every degree.
    pub fn homogeneous_degree(&self) -> Option<i64> {
        match self.degrees().as_slice() {
            [] => Some(0),
            [d] => Some(*d),
            _ => None,
        }
    }

    pub fn map_coeffs(&self, f: impl Fn(&Scalar) -> Scalar) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, c)| (*m, f(c))))
    }
}

impl<A: Algebra> Ring for Element<A> {
    fn zero() -> Self {
        Element::zero()
    }
    fn one() -> Self {
        Element::one()
    }
    fn is_zero(&self) -> bool {
        Element::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self.plus(o)
    }
    fn mul(&self, o: &Self) -> Self {
        self.times(o)
    }
    fn scale(&self, s: &Scalar) -> Self {
        self.scaled(s)
    }
}

/// Leading sign of a coefficient's printed form.
fn is_negative(c: &Scalar) -> bool {
    c.numerator()
        .terms()
        .max_by(|(a, _), (b, _)| {
            let ta: u32 = a.0.iter().map(|&x| x as u32).sum();
            let tb: u32 = b.0.iter().map(|&x| x as u32).sum();
            ta.cmp(&tb).then(a.cmp(b))
        })
        .map(|(_, &v)| v < 0)
        .unwrap_or(false)
}

/// Writes `coef*mono` terms joined by ` + ` / ` - `; `mono` is `None` for the unit.
pub(crate) fn fmt_sum<'a, M: 'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (&'a M, &'a Scalar)>,
    is_unit: impl Fn(&M) -> bool,
    fmt_mono: impl Fn(&M, &mut fmt::Formatter<'_>) -> fmt::Result,
) -> fmt::Result {
    let mut first = true;
    for (m, c) in terms {
        let neg = is_negative(c);
        let mag = if neg { -c } else { c.clone() };
        match (first, neg) {
            (true, true) => write!(f, "-")?,
            (true, false) => {}
            (false, true) => write!(f, " - ")?,
            (false, false) => write!(f, " + ")?,
        }
        first = false;
        let text = mag.to_string();
        let coef = if text.contains(' ') { format!("({text})") } else { text };
        if is_unit(m) {
            write!(f, "{coef}")?;
        } else {
            if !mag.is_one() {
                write!(f, "{coef}*")?;
            }
            fmt_mono(m, f)?;
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl<A: Algebra> fmt::Display for Element<A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let unit = A::unit();
        fmt_sum(f, self.terms.iter(), |m| *m == unit, |m, f| A::fmt_mono(m, f))
    }
}

pub(crate) struct ElementInterp<A>(pub PhantomData<A>);

impl<A: Algebra> Interp for ElementInterp<A> {
    type Val = Element<A>;
    fn scalar(&self, s: Scalar) -> Element<A> {
        Element::scalar(s)
    }
    fn atom(&self, name: &str, index: Option<&[i64]>) -> Result<Element<A>, ParseError> {
        A::atom(name, index).ok_or_else(|| ParseError::Unknown(name.to_string()))
    }
    fn add(&self, a: &Element<A>, b: &Element<A>) -> Element<A> {
        a.plus(b)
    }
    fn mul(&self, a: &Element<A>, b: &Element<A>) -> Element<A> {
        a.times(b)
    }
    fn scale(&self, a: &Element<A>, s: &Scalar) -> Element<A> {
        a.scaled(s)
    }
    fn as_scalar(&self, v: &Element<A>) -> Option<Scalar> {
        v.as_scalar()
    }
    fn inverse(&self, v: &Element<A>) -> Option<Element<A>> {
        let mut it = v.terms();
        let (m, c) = it.next()?;
        if it.next().is_some() {
            return None;
        }
        Some(Element::term(c.inv().ok()?, A::inv_mono(m)?))
    }
}

impl<A: Algebra> FromStr for Element<A> {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, ParseError> {
        eval(&parse_expr(s)?, &ElementInterp::<A>(PhantomData))
    }
}
