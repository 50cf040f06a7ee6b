//! Laurent polynomials in the unitary generator `z` of `C(T)`, trivially graded.

use std::fmt;

use crate::algebra::{Algebra, Element};
use crate::braided::{BraidedElement, LegKind, LegMono};
use crate::scalar::Scalar;
use crate::suq2::Suq2Element;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct Circle;

pub type CircleElement = Element<Circle>;

pub fn z_pow(m: i64) -> CircleElement {
    Element::mono(m)
}

impl Algebra for Circle {
    type Mono = i64;

    const KIND: LegKind = LegKind::Circle;

    fn unit() -> i64 {
        0
    }

    fn degree(_: &i64) -> i64 {
        0
    }

    fn mul_mono(a: &i64, b: &i64) -> CircleElement {
        z_pow(a + b)
    }

    fn star_mono(m: &i64) -> CircleElement {
        z_pow(-m)
    }

    fn fmt_mono(m: &i64, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if *m == 1 {
            write!(f, "z")
        } else {
            write!(f, "z^{m}")
        }
    }

    fn atom(name: &str, index: Option<&[i64]>) -> Option<CircleElement> {
        (name == "z" && index.is_none()).then(|| z_pow(1))
    }

    fn to_leg(m: &i64) -> LegMono {
        LegMono::Circ(*m)
    }

    fn from_leg(l: &LegMono) -> Option<i64> {
        match l {
            LegMono::Circ(m) => Some(*m),
            _ => None,
        }
    }

    fn inv_mono(m: &i64) -> Option<i64> {
        Some(-m)
    }
}

/// The quotient map: `α ↦ z`, `γ ↦ 0`.
pub fn pi(x: &Suq2Element) -> CircleElement {
    Element::from_terms(x.terms().filter(|(m, _)| m.k == 0 && m.l == 0).map(|(m, c)| (m.n, c.clone())))
}

/// `Δ_T(z^m) = j₁(z^m) j₂(z^m)`.
pub fn delta_t(x: &CircleElement) -> BraidedElement {
    let mut out = BraidedElement::zero(&[LegKind::Circle, LegKind::Circle]);
    for (m, c) in x.terms() {
        out.add_term(vec![LegMono::Circ(*m), LegMono::Circ(*m)], c);
    }
    out
}

/// Coefficient of `z^m`.
pub fn coefficient(x: &CircleElement, m: i64) -> Scalar {
    x.coeff(&m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::suq2::{a, alpha, alpha_star, gamma, monomials};

    #[test]
    fn pi_examples() {
        assert_eq!(pi(&alpha().pow(2)), z_pow(2));
        assert!(pi(&a(0, 1, 1)).is_zero());
        assert_eq!(pi(&alpha_star()), z_pow(-1));
        assert!(pi(&gamma()).is_zero());
    }

    #[test]
    fn pi_is_multiplicative_and_star() {
        for x in monomials(3) {
            let x = Suq2Element::mono(x);
            assert_eq!(pi(&x.star()), pi(&x).star());
            for y in monomials(3) {
                let y = Suq2Element::mono(y);
                assert_eq!(pi(&x.times(&y)), pi(&x).times(&pi(&y)));
            }
        }
    }

    #[test]
    fn delta_t_examples() {
        assert_eq!(delta_t(&z_pow(1)).to_string(), "j1(z)*j2(z)");
        assert_eq!(delta_t(&CircleElement::one()).to_string(), "j1(1)*j2(1)");
        assert_eq!(delta_t(&z_pow(-1)).to_string(), "j1(z^-1)*j2(z^-1)");
        let x: CircleElement = "2*z^-3 + z".parse().unwrap();
        assert_eq!(x, z_pow(-3).scaled(&Scalar::int(2)).plus(&z_pow(1)));
        assert!("(1 + z)^-1".parse::<CircleElement>().is_err());
    }

    #[test]
    fn delta_t_is_coassociative() {
        use crate::braided::LegMorphism;
        let x: CircleElement = "z^2 - 3*z^-1 + q".parse().unwrap();
        let d = delta_t(&x);
        let dt = |l: &LegMono| delta_t(&z_pow(Circle::from_leg(l).unwrap()));
        let tt = || LegMorphism::Map { target: vec![LegKind::Circle; 2], f: &dt };
        let left = d.map_legs(&[tt(), LegMorphism::Id]).unwrap();
        let right = d.map_legs(&[LegMorphism::Id, tt()]).unwrap();
        assert_eq!(left, right);
    }
}
