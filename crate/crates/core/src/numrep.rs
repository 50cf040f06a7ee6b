//! The representation `π` of `C(SU_q(2))` on `ℓ²(Z₊×Z)`:
//!
//! - `π(α)e_{n,k} = √(1−|q|^{2n}) e_{n−1,k}`
//! - `π(α*)e_{n,k} = √(1−|q|^{2n+2}) e_{n+1,k}`
//! - `π(γ)e_{n,k} = q̄ⁿ e_{n,k+1}`
//! - `π(γ*)e_{n,k} = qⁿ e_{n,k−1}`
//!
//! plus its twisted tensor powers, numeric rank, and residuals of symbolic identities.

use std::collections::BTreeMap;

use nalgebra::DMatrix;
use num_complex::Complex64;
use thiserror::Error;

use crate::algebra::{Algebra, Element};
use crate::braided::{BraidedElement, LegMono};
use crate::repmat::v_entry;
use crate::scalar::ScalarError;
use crate::suq2::{Letter, Suq2Element, Suq2Mono};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum NumError {
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error("window too small: need {need}, have {have}")]
    WindowTooSmall { need: String, have: String },
}

/// Basis vectors `e_{n,k}` with `0 ≤ n ≤ levels`, `|k| ≤ width`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Window {
    pub levels: usize,
    pub width: usize,
    pub q0: Complex64,
}

impl Window {
    pub fn new(levels: usize, width: usize, q0: Complex64) -> Result<Self, NumError> {
        crate::scalar::check_sample_point(q0)?;
        Ok(Window { levels, width, q0 })
    }

    pub fn dim(&self) -> usize {
        (self.levels + 1) * (2 * self.width + 1)
    }

    pub fn index(&self, n: i64, k: i64) -> Option<usize> {
        let w = self.width as i64;
        (n >= 0 && n <= self.levels as i64 && k.abs() <= w)
            .then(|| n as usize * (2 * self.width + 1) + (k + w) as usize)
    }

    pub fn label(&self, i: usize) -> (i64, i64) {
        let row = 2 * self.width + 1;
        ((i / row) as i64, (i % row) as i64 - self.width as i64)
    }

    /// Basis vectors at distance more than `letters` from the truncation edge.
    pub fn interior(&self, letters: usize) -> Vec<usize> {
        (0..self.dim())
            .filter(|&i| {
                let (n, k) = self.label(i);
                n as usize + letters <= self.levels && k.unsigned_abs() as usize + letters <= self.width
            })
            .collect()
    }
}

type State = BTreeMap<(i64, i64), Complex64>;

fn letter_action(l: Letter, n: i64, k: i64, q0: Complex64) -> Option<(Complex64, (i64, i64))> {
    let s = q0.norm_sqr();
    match l {
        Letter::Alpha => (n > 0).then(|| (Complex64::from((1.0 - s.powi(n as i32)).sqrt()), (n - 1, k))),
        Letter::AlphaStar => Some((Complex64::from((1.0 - s.powi(n as i32 + 1)).sqrt()), (n + 1, k))),
        Letter::Gamma => Some((q0.conj().powi(n as i32), (n, k + 1))),
        Letter::GammaStar => Some((q0.powi(n as i32), (n, k - 1))),
    }
}

fn apply_mono_state(m: &Suq2Mono, v: &State, q0: Complex64) -> State {
    let mut cur = v.clone();
    for l in m.word().into_iter().rev() {
        let mut next = State::new();
        for (&(n, k), c) in &cur {
            if let Some((f, key)) = letter_action(l, n, k, q0) {
                *next.entry(key).or_default() += c * f;
            }
        }
        cur = next;
    }
    cur
}

/// `π(x)v` on a finitely supported vector, without truncation.
pub fn apply(x: &Suq2Element, v: &State, q0: Complex64, lam0: f64, rho0: f64) -> Result<State, NumError> {
    let mut out = State::new();
    for (m, c) in x.terms() {
        let c = c.eval(q0, lam0, rho0)?;
        for (key, z) in apply_mono_state(m, v, q0) {
            *out.entry(key).or_default() += c * z;
        }
    }
    Ok(out)
}

/// Sparse matrix of `π(x)` restricted to a window.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedOperator {
    pub window: Window,
    pub entries: BTreeMap<(usize, usize), Complex64>,
}

impl TruncatedOperator {
    pub fn get(&self, r: usize, c: usize) -> Complex64 {
        self.entries.get(&(r, c)).copied().unwrap_or_default()
    }

    pub fn column(&self, c: usize) -> Vec<(usize, Complex64)> {
        self.entries.iter().filter(|((_, cc), _)| *cc == c).map(|(&(r, _), &z)| (r, z)).collect()
    }

    pub fn adjoint(&self) -> Self {
        TruncatedOperator {
            window: self.window,
            entries: self.entries.iter().map(|(&(r, c), z)| ((c, r), z.conj())).collect(),
        }
    }

    pub fn compose(&self, o: &Self) -> Self {
        let mut by_row: BTreeMap<usize, Vec<(usize, Complex64)>> = BTreeMap::new();
        for (&(r, c), z) in &o.entries {
            by_row.entry(r).or_default().push((c, *z));
        }
        let mut entries: BTreeMap<(usize, usize), Complex64> = BTreeMap::new();
        for (&(r, k), z) in &self.entries {
            if let Some(row) = by_row.get(&k) {
                for (c, w) in row {
                    *entries.entry((r, *c)).or_default() += z * w;
                }
            }
        }
        TruncatedOperator { window: self.window, entries }
    }

    /// Largest entry difference over the given columns.
    pub fn max_diff_on(&self, o: &Self, cols: &[usize]) -> f64 {
        let mut worst: f64 = 0.0;
        for &c in cols {
            for r in 0..self.window.dim() {
                worst = worst.max((self.get(r, c) - o.get(r, c)).norm());
            }
        }
        worst
    }
}

pub fn rep_element(x: &Suq2Element, w: &Window, lam0: f64, rho0: f64) -> Result<TruncatedOperator, NumError> {
    let mut entries = BTreeMap::new();
    for col in 0..w.dim() {
        let v: State = [(w.label(col), Complex64::new(1.0, 0.0))].into();
        for ((n, k), z) in apply(x, &v, w.q0, lam0, rho0)? {
            if let Some(row) = w.index(n, k) {
                if z != Complex64::default() {
                    entries.insert((row, col), z);
                }
            }
        }
    }
    Ok(TruncatedOperator { window: *w, entries })
}

/// Number of generator letters in the longest monomial.
pub fn letter_count(x: &Suq2Element) -> usize {
    x.terms().map(|(m, _)| m.size() as usize).max().unwrap_or(0)
}

/// Max-entry difference of `π(lhs)` and `π(rhs)` on the window interior.
pub fn residual(lhs: &Suq2Element, rhs: &Suq2Element, w: &Window, lam0: f64, rho0: f64) -> Result<f64, NumError> {
    let letters = letter_count(lhs).max(letter_count(rhs));
    let cols = w.interior(letters);
    if cols.is_empty() {
        return Err(NumError::WindowTooSmall {
            need: format!("levels and width >= {letters}"),
            have: format!("levels {}, width {}", w.levels, w.width),
        });
    }
    let (a, b) = (rep_element(lhs, w, lam0, rho0)?, rep_element(rhs, w, lam0, rho0)?);
    Ok(a.max_diff_on(&b, &cols))
}

/// Numerical rank (singular values above `rel_tol` times the largest) and the singular values, descending.
pub fn numeric_rank(cols: &[Vec<Complex64>], rel_tol: f64) -> (usize, Vec<f64>) {
    if cols.is_empty() || cols[0].is_empty() {
        return (0, Vec::new());
    }
    let m = DMatrix::from_fn(cols[0].len(), cols.len(), |r, c| cols[c][r]);
    let mut sv: Vec<f64> = m.singular_values().iter().copied().collect();
    sv.sort_by(|a, b| b.partial_cmp(a).unwrap());
    let top = sv.first().copied().unwrap_or(0.0);
    let rank = if top == 0.0 { 0 } else { sv.iter().filter(|&&s| s / top > rel_tol).count() };
    (rank, sv)
}

/// Rank of `{π(v_{i,j}) e_{2,0}}` and its singular values.
pub fn nine_range_rank(w: &Window) -> Result<(usize, Vec<f64>), NumError> {
    nine_range_rank_of(w, &[(-1, -1), (-1, 0), (-1, 1), (0, -1), (0, 0), (0, 1), (1, -1), (1, 0), (1, 1)])
}

pub fn nine_range_rank_of(w: &Window, entries: &[(i64, i64)]) -> Result<(usize, Vec<f64>), NumError> {
    if w.levels < 6 || w.width < 4 {
        return Err(NumError::WindowTooSmall {
            need: "levels >= 6, width >= 4".into(),
            have: format!("levels {}, width {}", w.levels, w.width),
        });
    }
    let base = w.index(2, 0).unwrap();
    let mut cols = Vec::new();
    for &(i, j) in entries {
        let op = rep_element(&v_entry(i, j), w, 0.0, 0.0)?;
        let mut col = vec![Complex64::default(); w.dim()];
        for (r, z) in op.column(base) {
            col[r] = z;
        }
        cols.push(col);
    }
    Ok(numeric_rank(&cols, 1e-6))
}

/// Multi-leg state: one `(n, k)` slot per leg; circle legs keep `(0, 0)`.
type LegState = BTreeMap<Vec<(i64, i64)>, Complex64>;

/// The twisted tensor representation: `j_t(x)` acts by `π(x)` on leg `t` and by
/// `diag(ζ̄^k)^{deg x}` on every leg `s < t`; `z^m` on a circle leg is evaluated at `e^{iθ}`.
fn apply_braided_term(t: &[LegMono], c: Complex64, v: &LegState, q0: Complex64, theta: f64) -> LegState {
    let zb = (q0.conj() / q0).to_polar().1;
    let mut cur = v.clone();
    for (leg, m) in t.iter().enumerate().rev() {
        let mut next = LegState::new();
        for (key, z) in &cur {
            match m {
                LegMono::Su(sm) => {
                    let d = sm.degree();
                    let phase: f64 = key[..leg].iter().map(|&(_, k)| zb * (d * k) as f64).sum();
                    let rot = Complex64::from_polar(1.0, phase);
                    let single: State = [(key[leg], Complex64::new(1.0, 0.0))].into();
                    for (nk, w) in apply_mono_state(sm, &single, q0) {
                        let mut k2 = key.clone();
                        k2[leg] = nk;
                        *next.entry(k2).or_default() += z * w * rot;
                    }
                }
                LegMono::Circ(p) => {
                    *next.entry(key.clone()).or_default() += z * Complex64::from_polar(1.0, *p as f64 * theta);
                }
                LegMono::Sph(_) => unreachable!("sphere legs have no numeric representation"),
            }
        }
        cur = next;
    }
    cur.values_mut().for_each(|z| *z *= c);
    cur
}

/// Residual of a braided identity at `(q0, λ₀, ρ₀)`.
///
/// Legs in `C(SU_q(2))` and `C(T)` act through the twisted tensor representation on
/// a grid of basis states; when a sphere leg is present the coefficients are
/// compared instead.
pub fn braided_residual(
    lhs: &BraidedElement,
    rhs: &BraidedElement,
    q0: Complex64,
    lam0: f64,
    rho0: f64,
) -> Result<f64, NumError> {
    crate::scalar::check_sample_point(q0)?;
    let diff = lhs.minus(rhs);
    if lhs.kinds().contains(&crate::braided::LegKind::Sphere) {
        let mut worst: f64 = 0.0;
        for (_, c) in diff.terms() {
            worst = worst.max(c.eval(q0, lam0, rho0)?.norm());
        }
        return Ok(worst);
    }
    let legs = lhs.legs();
    let (levels, ks): (i64, &[i64]) = if legs >= 3 { (2, &[0, 1]) } else { (3, &[-1, 0, 2]) };
    let mut starts: Vec<Vec<(i64, i64)>> = vec![Vec::new()];
    for _ in 0..legs {
        let mut next = Vec::new();
        for s in &starts {
            for n in 0..=levels {
                for &k in ks {
                    let mut s2 = s.clone();
                    s2.push((n, k));
                    next.push(s2);
                }
            }
        }
        starts = next;
    }
    let theta = 0.7;
    let mut worst: f64 = 0.0;
    for s in starts {
        let v: LegState = [(s, Complex64::new(1.0, 0.0))].into();
        let mut acc = LegState::new();
        for (t, c) in diff.terms() {
            let c = c.eval(q0, lam0, rho0)?;
            for (key, z) in apply_braided_term(t, c, &v, q0, theta) {
                *acc.entry(key).or_default() += z;
            }
        }
        worst = acc.values().fold(worst, |w, z| w.max(z.norm()));
    }
    Ok(worst)
}

/// Residual of a `C(SU_q(2))` identity on the states `e_{n,k}`, `n ≤ 4`, without truncation.
pub fn suq2_residual(
    lhs: &Suq2Element,
    rhs: &Suq2Element,
    q0: Complex64,
    lam0: f64,
    rho0: f64,
) -> Result<f64, NumError> {
    crate::scalar::check_sample_point(q0)?;
    let diff = lhs.minus(rhs);
    let mut worst: f64 = 0.0;
    for n in 0..=4 {
        for k in [-1, 0, 2] {
            let v: State = [((n, k), Complex64::new(1.0, 0.0))].into();
            worst = apply(&diff, &v, q0, lam0, rho0)?.values().fold(worst, |w, z| w.max(z.norm()));
        }
    }
    Ok(worst)
}

/// Largest coefficient of `lhs − rhs` at `(q0, λ₀, ρ₀)`.
pub fn coeff_residual<A: Algebra>(
    lhs: &Element<A>,
    rhs: &Element<A>,
    q0: Complex64,
    lam0: f64,
    rho0: f64,
) -> Result<f64, NumError> {
    let mut worst: f64 = 0.0;
    for (_, c) in lhs.minus(rhs).terms() {
        worst = worst.max(c.eval(q0, lam0, rho0)?.norm());
    }
    Ok(worst)
}

pub const DEFAULT_Q_SAMPLES: [(f64, f64); 4] = [(0.3, 0.4), (0.5, 0.0), (-0.25, 0.0), (0.1, 0.7)];
pub const DEFAULT_PARAM_SAMPLES: [f64; 3] = [0.0, 1.0, 2.5];

pub fn default_q_samples() -> Vec<Complex64> {
    DEFAULT_Q_SAMPLES.iter().map(|&(re, im)| Complex64::new(re, im)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braided::LegKind;
    use crate::scalar::Scalar;
    use crate::suq2::{alpha, alpha_star, gamma, gamma_star, monomials};

    fn q0() -> Complex64 {
        Complex64::new(0.3, 0.4)
    }

    fn win() -> Window {
        Window::new(10, 8, q0()).unwrap()
    }

    #[test]
    fn alpha_kills_ground_level() {
        let w = win();
        let a = rep_element(&alpha(), &w, 0.0, 0.0).unwrap();
        for k in -8..=8 {
            assert!(a.column(w.index(0, k).unwrap()).is_empty());
        }
    }

    #[test]
    fn v_minus_one_zero_formula() {
        let w = win();
        let op = rep_element(&v_entry(-1, 0), &w, 0.0, 0.0).unwrap();
        let s2 = 1.0 + q0().norm_sqr();
        for n in 1..5i64 {
            for k in -3..=3i64 {
                let want = -s2 * q0().powi(n as i32 - 1) * (1.0 - q0().norm_sqr().powi(n as i32)).sqrt();
                let got = op.get(w.index(n - 1, k - 1).unwrap(), w.index(n, k).unwrap());
                assert!((got - want).norm() < 1e-14);
            }
        }
    }

    #[test]
    fn gamma_star_gamma_is_diagonal() {
        let w = win();
        let op = rep_element(&gamma_star().times(&gamma()), &w, 0.0, 0.0).unwrap();
        for n in 0..5i64 {
            let i = w.index(n, 0).unwrap();
            assert!((op.get(i, i) - q0().norm_sqr().powi(n as i32)).norm() < 1e-14);
        }
    }

    #[test]
    fn v00_eigenvalues() {
        // 1 − σ²|q|^{2n}
        let w = win();
        let op = rep_element(&v_entry(0, 0), &w, 0.0, 0.0).unwrap();
        let s = q0().norm_sqr();
        for n in 0..5i64 {
            let i = w.index(n, 1).unwrap();
            assert!((op.get(i, i) - (1.0 - (1.0 + s) * s.powi(n as i32))).norm() < 1e-14);
        }
    }

    #[test]
    fn adjoint_and_homomorphism_on_interior() {
        let w = Window::new(8, 6, q0()).unwrap();
        let ms = monomials(2);
        for x in &ms {
            let x = Suq2Element::mono(*x);
            let px = rep_element(&x, &w, 0.0, 0.0).unwrap();
            let cols = w.interior(2);
            // compare ⟨e_r, π(x*) e_c⟩ with conj ⟨e_c, π(x) e_r⟩ for interior r, c
            let ps = rep_element(&x.star(), &w, 0.0, 0.0).unwrap();
            let adj = px.adjoint();
            for &r in &cols {
                for &c in &cols {
                    assert!((ps.get(r, c) - adj.get(r, c)).norm() < 1e-12);
                }
            }
            for y in &ms {
                let y = Suq2Element::mono(*y);
                let lhs = rep_element(&x.times(&y), &w, 0.0, 0.0).unwrap();
                let rhs = px.compose(&rep_element(&y, &w, 0.0, 0.0).unwrap());
                assert!(lhs.max_diff_on(&rhs, &w.interior(4)) < 1e-12);
            }
        }
    }

    #[test]
    fn relations_hold_numerically() {
        let w = win();
        let one = Suq2Element::one();
        let lhs = alpha_star().times(&alpha()).plus(&gamma_star().times(&gamma()));
        assert!(residual(&lhs, &one, &w, 0.0, 0.0).unwrap() < 1e-12);
        assert_eq!(residual(&one, &one, &w, 0.0, 0.0).unwrap(), 0.0);
    }

    #[test]
    fn window_growth_keeps_interior_entries() {
        let x = v_entry(1, -1).plus(&v_entry(0, 0));
        let small = rep_element(&x, &Window::new(6, 4, q0()).unwrap(), 0.0, 0.0).unwrap();
        let big_w = Window::new(9, 7, q0()).unwrap();
        let big = rep_element(&x, &big_w, 0.0, 0.0).unwrap();
        let sw = small.window;
        for c in sw.interior(4) {
            for r in 0..sw.dim() {
                let (n, k) = sw.label(r);
                let (cn, ck) = sw.label(c);
                let br = big_w.index(n, k).unwrap();
                let bc = big_w.index(cn, ck).unwrap();
                assert_eq!(small.get(r, c), big.get(br, bc));
            }
        }
    }

    #[test]
    fn nine_dimensional_range() {
        for q in [q0(), Complex64::new(0.5, 0.0)] {
            let (rank, sv) = nine_range_rank(&Window::new(10, 8, q).unwrap()).unwrap();
            assert_eq!(rank, 9);
            assert!(sv[8] / sv[0] > 1e-6);
        }
        let (rank, _) = nine_range_rank_of(&win(), &[(0, 0)]).unwrap();
        assert_eq!(rank, 1);
        assert!(nine_range_rank(&Window::new(3, 3, q0()).unwrap()).is_err());
    }

    #[test]
    fn braided_exchange_numerically() {
        let ss = [LegKind::Suq2, LegKind::Suq2];
        let lhs = BraidedElement::embed(&ss, 1, &gamma()).times(&BraidedElement::embed(&ss, 0, &gamma_star()));
        let rhs = BraidedElement::pair(&gamma_star(), &gamma()).scaled(&Scalar::zeta());
        assert!(braided_residual(&lhs, &rhs, q0(), 0.0, 0.0).unwrap() < 1e-12);
        let wrong = BraidedElement::pair(&gamma_star(), &gamma());
        assert!(braided_residual(&lhs, &wrong, q0(), 0.0, 0.0).unwrap() > 1e-3);
    }
}
