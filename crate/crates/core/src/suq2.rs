//! Polynomial elements of `C(SU_q(2))` in the basis `a_{n,k,l} = α^n γ^k γ*^l`
//! (with `α^n` read as `α*^{-n}` for `n < 0`).
//!
//! Multiplication uses closed forms for commuting letters past each other;
//! [`Suq2Rules`] is the letter-level rewrite system, kept as an independent
//! reference and for normalizing arbitrary words.
//!
//! Rewriting terminates: the `αα*`/`α*α` rules strictly shorten the α-part,
//! and the remaining rules strictly reduce inversions for a fixed letter multiset.

use std::fmt;

use crate::algebra::{Algebra, Element};
use crate::braided::{LegKind, LegMono};
use crate::rewrite::{RewriteSystem, Word};
use crate::scalar::Scalar;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Suq2Mono {
    pub n: i64,
    pub k: u32,
    pub l: u32,
}

impl Suq2Mono {
    pub const fn new(n: i64, k: u32, l: u32) -> Self {
        Suq2Mono { n, k, l }
    }

    pub fn degree(&self) -> i64 {
        self.k as i64 - self.l as i64
    }

    /// Weight under the right circle coaction.
    pub fn weight(&self) -> i64 {
        self.n + self.k as i64 - self.l as i64
    }

    pub fn size(&self) -> u64 {
        self.n.unsigned_abs() + self.k as u64 + self.l as u64
    }

    pub fn word(&self) -> Vec<Letter> {
        let a = if self.n >= 0 { Letter::Alpha } else { Letter::AlphaStar };
        let mut w = vec![a; self.n.unsigned_abs() as usize];
        w.extend(std::iter::repeat_n(Letter::Gamma, self.k as usize));
        w.extend(std::iter::repeat_n(Letter::GammaStar, self.l as usize));
        w
    }
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Letter {
    Alpha,
    AlphaStar,
    Gamma,
    GammaStar,
}

impl Letter {
    pub fn element(self) -> Suq2Element {
        match self {
            Letter::Alpha => alpha(),
            Letter::AlphaStar => alpha_star(),
            Letter::Gamma => gamma(),
            Letter::GammaStar => gamma_star(),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct Suq2;

pub type Suq2Element = Element<Suq2>;

pub fn a(n: i64, k: u32, l: u32) -> Suq2Element {
    Element::mono(Suq2Mono::new(n, k, l))
}

pub fn alpha() -> Suq2Element {
    a(1, 0, 0)
}

pub fn alpha_star() -> Suq2Element {
    a(-1, 0, 0)
}

pub fn gamma() -> Suq2Element {
    a(0, 1, 0)
}

pub fn gamma_star() -> Suq2Element {
    a(0, 0, 1)
}

/// Coefficients of `Π (1 - ς^{e_i} T)` in powers of `T`.
fn t_product(exps: impl Iterator<Item = i64>) -> Vec<Scalar> {
    let mut c = vec![Scalar::one()];
    for e in exps {
        let s = -Scalar::varsigma_pow(e);
        let mut next = c.clone();
        next.push(Scalar::zero());
        for (j, cj) in c.iter().enumerate() {
            next[j + 1] = &next[j + 1] + &(cj * &s);
        }
        c = next;
    }
    c
}

/// `α^{n1} · α^{n2}` as coefficients of `α^{n1+n2} (γγ*)^j`.
fn alpha_block(n1: i64, n2: i64) -> Vec<Scalar> {
    if n1 >= 0 && n2 >= 0 || n1 <= 0 && n2 <= 0 {
        return vec![Scalar::one()];
    }
    if n1 > 0 {
        // α^a α*^b = Π_{i<m} (1 - ς^{b-i} T) · α^{a-m} α*^{b-m}
        let (a, b) = (n1, -n2);
        let m = a.min(b);
        t_product((0..m).map(|i| b - i))
    } else {
        // α*^b α^a = Π_{i<m} (1 - ς^{-(a-1-i)} T) · ...
        let (b, a) = (-n1, n2);
        let m = a.min(b);
        t_product((0..m).map(|i| -(a - 1 - i)))
    }
}

impl Algebra for Suq2 {
    type Mono = Suq2Mono;

    const KIND: LegKind = LegKind::Suq2;

    fn unit() -> Suq2Mono {
        Suq2Mono::default()
    }

    fn degree(m: &Suq2Mono) -> i64 {
        m.degree()
    }

    fn mul_mono(x: &Suq2Mono, y: &Suq2Mono) -> Suq2Element {
        // γ^k γ*^l α^m = q̄^{-km} q^{-lm} α^m γ^k γ*^l, and the conjugate rule for α*
        let m = y.n;
        let (k1, l1) = (x.k as i64, x.l as i64);
        let f = Scalar::q_power(-l1 * m, -k1 * m);
        let block = alpha_block(x.n, y.n);
        Element::from_terms(block.into_iter().enumerate().map(|(j, c)| {
            let j = j as u32;
            (Suq2Mono::new(x.n + y.n, j + x.k + y.k, j + x.l + y.l), &c * &f)
        }))
    }

    fn star_mono(x: &Suq2Mono) -> Suq2Element {
        // (α^n γ^k γ*^l)* = γ^l γ*^k α*^n
        let m = -x.n;
        let f = Scalar::q_power(-(x.k as i64) * m, -(x.l as i64) * m);
        Element::term(f, Suq2Mono::new(-x.n, x.l, x.k))
    }

    fn fmt_mono(m: &Suq2Mono, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a[{},{},{}]", m.n, m.k, m.l)
    }

    fn atom(name: &str, index: Option<&[i64]>) -> Option<Suq2Element> {
        match (name, index) {
            ("alpha", None) => Some(alpha()),
            ("alphastar", None) => Some(alpha_star()),
            ("gamma", None) => Some(gamma()),
            ("gammastar", None) => Some(gamma_star()),
            ("a", Some(&[n, k, l])) if k >= 0 && l >= 0 => Some(a(n, k as u32, l as u32)),
            ("v", Some(&[i, j])) if (-1..=1).contains(&i) && (-1..=1).contains(&j) => {
                Some(crate::repmat::v_entry(i, j))
            }
            _ => None,
        }
    }

    fn to_leg(m: &Suq2Mono) -> LegMono {
        LegMono::Su(*m)
    }

    fn from_leg(l: &LegMono) -> Option<Suq2Mono> {
        match l {
            LegMono::Su(m) => Some(*m),
            _ => None,
        }
    }
}

impl Suq2Element {
    /// Terms of weight 0.
    pub fn cond_expect(&self) -> Suq2Element {
        self.filter(|m| m.weight() == 0)
    }

    pub fn weight_component(&self, w: i64) -> Suq2Element {
        self.filter(|m| m.weight() == w)
    }

    pub fn counit(&self) -> Scalar {
        self.terms().filter(|(m, _)| m.k == 0 && m.l == 0).fold(Scalar::zero(), |acc, (_, c)| &acc + c)
    }
}

/// The defining relations as a letter rewrite system.
pub struct Suq2Rules;

impl RewriteSystem for Suq2Rules {
    type Letter = Letter;

    fn rule(&self, x: &Letter, y: &Letter) -> Option<Vec<(Word<Letter>, Scalar)>> {
        use Letter::*;
        let swap = |c: Scalar| Some(vec![(vec![*y, *x], c)]);
        match (x, y) {
            (GammaStar, Gamma) => swap(Scalar::one()),
            (Gamma, Alpha) => swap(Scalar::qbar().inv().unwrap()),
            (GammaStar, Alpha) => swap(Scalar::q().inv().unwrap()),
            (Gamma, AlphaStar) => swap(Scalar::qbar()),
            (GammaStar, AlphaStar) => swap(Scalar::q()),
            (Alpha, AlphaStar) => Some(vec![(vec![], Scalar::one()), (vec![Gamma, GammaStar], -Scalar::varsigma())]),
            (AlphaStar, Alpha) => Some(vec![(vec![], Scalar::one()), (vec![Gamma, GammaStar], Scalar::int(-1))]),
            _ => None,
        }
    }
}

/// Normal form of an arbitrary letter word, by rewriting.
pub fn from_word(word: &[Letter]) -> Suq2Element {
    Element::from_terms(Suq2Rules.normalize(word).into_iter().map(|(w, c)| {
        let count = |l: Letter| w.iter().filter(|&&x| x == l).count();
        let n = count(Letter::Alpha) as i64 - count(Letter::AlphaStar) as i64;
        (Suq2Mono::new(n, count(Letter::Gamma) as u32, count(Letter::GammaStar) as u32), c)
    }))
}

/// All basis monomials with `|n| + k + l <= size`.
pub fn monomials(size: u32) -> Vec<Suq2Mono> {
    let s = size as i64;
    let mut out = Vec::new();
    for n in -s..=s {
        for k in 0..=(s - n.abs()) {
            for l in 0..=(s - n.abs() - k) {
                out.push(Suq2Mono::new(n, k as u32, l as u32));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn e(s: &str) -> Suq2Element {
        s.parse().unwrap()
    }

    #[test]
    fn gamma_star_alpha() {
        assert_eq!(gamma_star().times(&alpha()), a(1, 0, 1).scaled(&Scalar::q().inv().unwrap()));
    }

    #[test]
    fn alpha_alpha_star() {
        let expected = Suq2Element::one().minus(&a(0, 1, 1).scaled(&Scalar::varsigma()));
        assert_eq!(alpha().times(&alpha_star()), expected);
    }

    #[test]
    fn unit_is_neutral() {
        let x = e("q*a[2,1,0] - lam*a[-1,0,3]");
        assert_eq!(Suq2Element::one().times(&x), x);
        assert_eq!(x.times(&Suq2Element::one()), x);
    }

    #[test]
    fn printed_product_example() {
        // (-σ² α* γ)(γ* α*) = -ς σ² a_{-2,1,1}
        let lhs = e("-s2*alphastar*gamma").times(&e("gammastar*alphastar"));
        assert_eq!(lhs, e("-vs*s2*a[-2,1,1]"));
    }

    #[test]
    fn star_examples() {
        assert_eq!(a(0, 1, 0).star(), a(0, 0, 1));
        assert_eq!(a(1, 0, 1).star(), a(-1, 1, 0).scaled(&Scalar::qbar()));
        for m in monomials(3) {
            let x = Suq2Element::mono(m);
            assert_eq!(x.star().star(), x, "{m:?}");
        }
    }

    #[test]
    fn grading_examples() {
        assert_eq!(e("alpha + gamma").grade_component(1), gamma());
        assert_eq!(a(2, 1, 1).grade_component(0), a(2, 1, 1));
        assert!(gamma_star().grade_component(1).is_zero());
    }

    #[test]
    fn cond_expect_examples() {
        assert_eq!(a(1, 0, 1).cond_expect(), a(1, 0, 1));
        assert!(alpha().cond_expect().is_zero());
        assert_eq!(Suq2Element::one().cond_expect(), Suq2Element::one());
    }

    #[test]
    fn counit_examples() {
        assert!(alpha().pow(3).counit().is_one());
        assert!(e("gammastar*gamma").counit().is_zero());
        assert!(Suq2Element::one().counit().is_one());
    }

    #[test]
    fn relations_hold() {
        let vs = Scalar::varsigma();
        let one = Suq2Element::one();
        let (al, als, ga, gas) = (alpha(), alpha_star(), gamma(), gamma_star());
        assert_eq!(als.times(&al).plus(&gas.times(&ga)), one);
        assert_eq!(al.times(&als).plus(&gas.times(&ga).scaled(&vs)), one);
        assert_eq!(al.times(&ga), ga.times(&al).scaled(&Scalar::qbar()));
        assert_eq!(ga.times(&gas), gas.times(&ga));
        assert_eq!(al.times(&gas), gas.times(&al).scaled(&Scalar::q()));
    }

    #[test]
    fn remark_identities() {
        // γα*αγ* = α*αγγ*,  ς α*γγ*α = γγ*α*α
        assert_eq!(e("gamma*alphastar*alpha*gammastar"), e("alphastar*alpha*gamma*gammastar"));
        assert_eq!(e("vs*alphastar*gamma*gammastar*alpha"), e("gamma*gammastar*alphastar*alpha"));
    }

    #[test]
    fn closed_forms_for_alpha_blocks() {
        // α^n α*^n = Π_{i=1..n} (1 - ς^i γγ*),  α*^n α^n = Π_{i=0..n-1} (1 - ς^{-i} γγ*)
        let t = a(0, 1, 1);
        for n in 1..=4u32 {
            let mut p = Suq2Element::one();
            let mut r = Suq2Element::one();
            for i in 1..=n as i64 {
                p = p.times(&Suq2Element::one().minus(&t.scaled(&Scalar::varsigma_pow(i))));
                r = r.times(&Suq2Element::one().minus(&t.scaled(&Scalar::varsigma_pow(1 - i))));
            }
            assert_eq!(alpha().pow(n).times(&alpha_star().pow(n)), p);
            assert_eq!(alpha_star().pow(n).times(&alpha().pow(n)), r);
        }
    }

    #[test]
    fn closed_form_matches_rewriting() {
        for x in monomials(3) {
            for y in monomials(3) {
                let mut w = x.word();
                w.extend(y.word());
                assert_eq!(Suq2::mul_mono(&x, &y), from_word(&w), "{x:?} {y:?}");
            }
        }
    }

    #[test]
    fn associativity_exhaustive() {
        let ms = monomials(2);
        for x in &ms {
            for y in &ms {
                let xy = Suq2::mul_mono(x, y);
                for z in &ms {
                    let z = Suq2Element::mono(*z);
                    let x = Suq2Element::mono(*x);
                    assert_eq!(xy.times(&z), x.times(&Suq2Element::mono(*y).times(&z)));
                }
            }
        }
    }

    #[test]
    fn text_round_trip() {
        let x = e("(1 + q)^2*a[1,0,1] - zeta*gamma + 3 - lam/s2*alphastar^2");
        let printed = x.to_string();
        assert_eq!(e(&printed), x);
        assert_eq!(e(&printed).to_string(), printed);
        assert_eq!(a(1, 0, 1).to_string(), "a[1,0,1]");
        assert_eq!(Suq2Element::zero().to_string(), "0");
    }

    fn mono_strategy(size: i64) -> impl Strategy<Value = Suq2Mono> {
        (-size..=size, 0..=size, 0..=size)
            .prop_filter("size", move |(n, k, l)| n.abs() + k + l <= size)
            .prop_map(|(n, k, l)| Suq2Mono::new(n, k as u32, l as u32))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn associativity_random(x in mono_strategy(4), y in mono_strategy(4), z in mono_strategy(4)) {
            let (x, y, z) = (Suq2Element::mono(x), Suq2Element::mono(y), Suq2Element::mono(z));
            prop_assert_eq!(x.times(&y).times(&z), x.times(&y.times(&z)));
        }

        #[test]
        fn star_antihomomorphism(x in mono_strategy(4), y in mono_strategy(4)) {
            let (x, y) = (Suq2Element::mono(x), Suq2Element::mono(y));
            prop_assert_eq!(x.times(&y).star(), y.star().times(&x.star()));
        }

        #[test]
        fn degree_and_weight_additive(x in mono_strategy(4), y in mono_strategy(4)) {
            let p = Suq2::mul_mono(&x, &y);
            for (m, _) in p.terms() {
                prop_assert_eq!(m.degree(), x.degree() + y.degree());
                prop_assert_eq!(m.weight(), x.weight() + y.weight());
            }
        }

        #[test]
        fn cond_expect_module_property(x in mono_strategy(3), y in mono_strategy(3), z in mono_strategy(3)) {
            let x0 = Suq2Element::mono(x).cond_expect();
            let y = Suq2Element::mono(y).plus(&Suq2Element::mono(z));
            prop_assert_eq!(x0.times(&y).cond_expect(), x0.times(&y.cond_expect()));
        }
    }
}
