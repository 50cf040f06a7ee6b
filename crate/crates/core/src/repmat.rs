//! Matrices over `C(SU_q(2))`: the fundamental representation `u`, its braided
//! tensor square, the three-dimensional representation `V` (and `W`), and the
//! 9×9 matrix of twisted products of entries of `V`.

use std::fmt;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::braided::BraidedElement;
use crate::coproduct::{delta, SS};
use crate::numrep::numeric_rank;
use crate::report::{expect_eq, ReportRecord};
use crate::ring::RootPair;
use crate::scalar::{Scalar, ScalarError};
use crate::suq2::{alpha, alpha_star, gamma, gamma_star, Suq2Element, Suq2Mono};

/// Rectangular matrix with `C(SU_q(2))` entries and optional carrier degrees.
///
/// For a representation, a nonzero entry `(i, j)` is homogeneous of degree
/// `col_degree(j) − row_degree(i)`.
#[derive(Clone, PartialEq, Debug)]
pub struct AlgMatrix {
    pub rows: usize,
    pub cols: usize,
    entries: Vec<Suq2Element>,
    pub row_degrees: Option<Vec<i64>>,
    pub col_degrees: Option<Vec<i64>>,
}

impl AlgMatrix {
    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> Suq2Element) -> Self {
        let entries = (0..rows * cols).map(|k| f(k / cols, k % cols)).collect();
        AlgMatrix { rows, cols, entries, row_degrees: None, col_degrees: None }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { Suq2Element::one() } else { Suq2Element::zero() })
    }

    pub fn with_degrees(mut self, d: &[i64]) -> Self {
        assert_eq!(d.len(), self.rows);
        assert_eq!(self.rows, self.cols);
        self.row_degrees = Some(d.to_vec());
        self.col_degrees = Some(d.to_vec());
        self
    }

    pub fn get(&self, i: usize, j: usize) -> &Suq2Element {
        &self.entries[i * self.cols + j]
    }

    pub fn times(&self, o: &AlgMatrix) -> AlgMatrix {
        assert_eq!(self.cols, o.rows);
        Self::from_fn(self.rows, o.cols, |i, j| {
            (0..self.cols).fold(Suq2Element::zero(), |acc, k| acc.plus(&self.get(i, k).times(o.get(k, j))))
        })
    }

    /// Conjugate transpose with entrywise star.
    pub fn star(&self) -> AlgMatrix {
        let mut m = Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).star());
        m.row_degrees = self.col_degrees.clone();
        m.col_degrees = self.row_degrees.clone();
        m
    }

    /// `deg(entry(i, j))`, `None` for inhomogeneous entries; zero entries report 0.
    pub fn degrees(&self) -> Vec<Vec<Option<i64>>> {
        (0..self.rows).map(|i| (0..self.cols).map(|j| self.get(i, j).homogeneous_degree()).collect()).collect()
    }
}

impl fmt::Display for AlgMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

fn s(x: &Scalar, e: Suq2Element) -> Suq2Element {
    e.scaled(x)
}

/// `u = [α, −qγ*; γ, α*]`, carrier degrees `(1, 0)`.
pub fn fundamental_u() -> AlgMatrix {
    let q = Scalar::q();
    let e = [alpha(), s(&-&q, gamma_star()), gamma(), alpha_star()];
    AlgMatrix::from_fn(2, 2, |i, j| e[2 * i + j].clone()).with_degrees(&[1, 0])
}

/// The braided tensor square of `u` as a 4×4 matrix, basis index `2a + b`.
///
/// The second factor enters as `diag(ζ̄, 1)^{deg} ⊗ u`.
pub fn tensor_square() -> AlgMatrix {
    let u = fundamental_u();
    let d = u.row_degrees.clone().unwrap();
    let m = AlgMatrix::from_fn(4, 4, |r, c| {
        let (a, b) = (r / 2, r % 2);
        let (cc, dd) = (c / 2, c % 2);
        // D_cc^{d_b − d_d}, D = diag(ζ̄, 1)
        let twist = if cc == 0 { Scalar::zeta_pow(-(d[b] - d[dd])) } else { Scalar::one() };
        u.get(a, cc).times(u.get(b, dd)).scaled(&twist)
    });
    m.with_degrees(&[2, 1, 1, 0])
}

/// `(0, 1, −q̄, 0)ᵀ`.
pub fn invariant_vector() -> Vec<Scalar> {
    vec![Scalar::zero(), Scalar::one(), -Scalar::qbar(), Scalar::zero()]
}

type RootMatrix = Vec<Vec<RootPair<Suq2Element>>>;

fn rp(a: Scalar, b: Scalar) -> RootPair<Suq2Element> {
    RootPair::new(Suq2Element::scalar(a), Suq2Element::scalar(b), Scalar::sigma2())
}

fn rp_mul(x: &RootMatrix, y: &RootMatrix) -> RootMatrix {
    let n = x.len();
    let m = y[0].len();
    (0..n)
        .map(|i| {
            (0..m)
                .map(|j| {
                    (0..y.len()).fold(rp(Scalar::zero(), Scalar::zero()), |acc, k| acc.plus(&x[i][k].times(&y[k][j])))
                })
                .collect()
        })
        .collect()
}

/// Change of basis to `{w/σ, f₂, f₁, f₀}` and back; `Q·R = σ²·1`.
fn basis_change() -> (RootMatrix, RootMatrix) {
    let (z, o) = (Scalar::zero(), Scalar::one());
    let (q, qb) = (Scalar::q(), Scalar::qbar());
    let r = |a: &Scalar| rp(a.clone(), Scalar::zero());
    let sigma = rp(Scalar::zero(), Scalar::one());
    let qm = vec![
        vec![r(&z), r(&o), r(&-&q), r(&z)],
        vec![sigma.clone(), r(&z), r(&z), r(&z)],
        vec![r(&z), r(&qb), r(&o), r(&z)],
        vec![r(&z), r(&z), r(&z), sigma.clone()],
    ];
    let rm = vec![
        vec![r(&z), sigma.clone(), r(&z), r(&z)],
        vec![r(&o), r(&z), r(&q), r(&z)],
        vec![r(&-&qb), r(&z), r(&o), r(&z)],
        vec![r(&z), r(&z), r(&z), sigma],
    ];
    (qm, rm)
}

/// `Q M R / σ²`, which should be `diag(1, W)`.
pub fn block_form() -> RootMatrix {
    let m = tensor_square();
    let mm: RootMatrix =
        (0..4).map(|i| (0..4).map(|j| RootPair::rational(m.get(i, j).clone(), Scalar::sigma2())).collect()).collect();
    let (qm, rm) = basis_change();
    let inv = Scalar::sigma2().inv().unwrap();
    rp_mul(&rp_mul(&qm, &mm), &rm).into_iter().map(|row| row.into_iter().map(|x| x.scaled(&inv)).collect()).collect()
}

/// `W` from the basis-change pipeline; entries are `a + bσ`.
pub fn build_w() -> RootMatrix {
    block_form().into_iter().skip(1).map(|row| row.into_iter().skip(1).collect()).collect()
}

/// `V = diag(q⁻¹, σ⁻¹, −1) W diag(q, σ, −1)` from the pipeline; fails if an odd power of σ survives.
pub fn build_v_pipeline() -> Result<AlgMatrix, String> {
    let z = Scalar::zero();
    let left = [
        rp(Scalar::q().inv().unwrap(), z.clone()),
        RootPair::inv_root(Scalar::sigma2()),
        rp(Scalar::int(-1), z.clone()),
    ];
    let right = [rp(Scalar::q(), z.clone()), rp(z.clone(), Scalar::one()), rp(Scalar::int(-1), z)];
    let w = build_w();
    let mut out = Vec::with_capacity(9);
    for i in 0..3 {
        for j in 0..3 {
            let x = left[i].times(&w[i][j]).times(&right[j]);
            if !x.is_rational() {
                return Err(format!("entry ({}, {}) keeps an odd power of sigma: {}", i as i64 - 1, j as i64 - 1, x.b));
            }
            out.push(x.a);
        }
    }
    Ok(AlgMatrix::from_fn(3, 3, |i, j| out[3 * i + j].clone()).with_degrees(&[1, 0, -1]))
}

/// `v_{i,j}`, `i, j ∈ {−1, 0, 1}`, as displayed.
pub fn v_entry(i: i64, j: i64) -> Suq2Element {
    let q = Scalar::q();
    let s2 = Scalar::sigma2();
    let zeta = Scalar::zeta();
    match (i, j) {
        (-1, -1) => alpha().pow(2),
        (-1, 0) => s(&-&s2, gamma_star().times(&alpha())),
        (-1, 1) => s(&-&q, gamma_star().pow(2)),
        (0, -1) => s(&zeta, alpha().times(&gamma())),
        (0, 0) => Suq2Element::one().minus(&s(&s2, gamma_star().times(&gamma()))),
        (0, 1) => gamma_star().times(&alpha_star()),
        (1, -1) => s(&-&(&q * &zeta), gamma().pow(2)),
        (1, 0) => s(&-&s2, alpha_star().times(&gamma())),
        (1, 1) => alpha_star().pow(2),
        _ => panic!("v index ({i}, {j}) out of range"),
    }
}

/// `V` from its displayed entries, carrier degrees `(1, 0, −1)`.
pub fn build_v() -> AlgMatrix {
    AlgMatrix::from_fn(3, 3, |i, j| v_entry(i as i64 - 1, j as i64 - 1)).with_degrees(&[1, 0, -1])
}

/// `Σ_k j₁(M_{ik}) j₂(M_{kj})`.
pub fn rep_rhs(m: &AlgMatrix, i: usize, j: usize) -> BraidedElement {
    (0..m.cols).fold(BraidedElement::zero(&SS), |acc, k| acc.plus(&BraidedElement::pair(m.get(i, k), m.get(k, j))))
}

/// `Δ(M_{ij}) = Σ_k j₁(M_{ik}) j₂(M_{kj})` for every entry.
pub fn rep_check(name: &str, m: &AlgMatrix, index_offset: i64) -> Vec<ReportRecord> {
    let cells: Vec<(usize, usize)> = (0..m.rows).flat_map(|i| (0..m.cols).map(move |j| (i, j))).collect();
    cells
        .par_iter()
        .map(|&(i, j)| {
            let (ti, tj) = (i as i64 + index_offset, j as i64 + index_offset);
            ReportRecord::run(format!("{name}/rep/({ti},{tj})"), format!("representations/{name}"), || {
                let l = delta(m.get(i, j));
                let r = rep_rhs(m, i, j);
                expect_eq(&l, &r, || l.minus(&r).to_string())
            })
        })
        .collect()
}

/// `M M* = 1` and `M* M = 1`, one record per entry of each product.
pub fn unitarity_check(name: &str, m: &AlgMatrix, index_offset: i64) -> Vec<ReportRecord> {
    let id = AlgMatrix::identity(m.rows);
    let mut out = Vec::new();
    for (tag, p) in [("MM*", m.times(&m.star())), ("M*M", m.star().times(m))] {
        for i in 0..m.rows {
            for j in 0..m.cols {
                let (ti, tj) = (i as i64 + index_offset, j as i64 + index_offset);
                out.push(ReportRecord::run(
                    format!("{name}/unitary/{tag}/({ti},{tj})"),
                    format!("representations/{name}"),
                    || {
                        let (l, r) = (p.get(i, j), id.get(i, j));
                        expect_eq(l, r, || l.minus(r).to_string())
                    },
                ));
            }
        }
    }
    out
}

/// `|d_i|²` for `V = D⁻¹ W D`, `D = diag(q, σ, −1)`: `(ς, σ², 1)`.
pub fn carrier_weights() -> [Scalar; 3] {
    [Scalar::varsigma(), Scalar::sigma2(), Scalar::one()]
}

/// `M* G M = G` and `M G⁻¹ M* = G⁻¹` for `G = diag(g)`, one record per entry of each product.
///
/// For `V` with `g = carrier_weights()` this is equivalent to unitarity of `W`.
pub fn weighted_unitarity_check(name: &str, m: &AlgMatrix, g: &[Scalar], index_offset: i64) -> Vec<ReportRecord> {
    let n = m.rows;
    let diag = |d: Vec<Scalar>| {
        AlgMatrix::from_fn(n, n, |i, j| if i == j { Suq2Element::scalar(d[i].clone()) } else { Suq2Element::zero() })
    };
    let gm = diag(g.to_vec());
    let gi = diag(g.iter().map(|x| x.inv().expect("invertible weight")).collect());
    let mut out = Vec::new();
    for (tag, p, want) in [("M*GM", m.star().times(&gm).times(m), &gm), ("MG^-1M*", m.times(&gi).times(&m.star()), &gi)]
    {
        for i in 0..n {
            for j in 0..n {
                let (ti, tj) = (i as i64 + index_offset, j as i64 + index_offset);
                out.push(ReportRecord::run(
                    format!("{name}/weighted-unitary/{tag}/({ti},{tj})"),
                    format!("representations/{name}"),
                    || {
                        let (l, r) = (p.get(i, j), want.get(i, j));
                        expect_eq(l, r, || l.minus(r).to_string())
                    },
                ));
            }
        }
    }
    out
}

/// Entry degrees against the carrier-degree prediction `col − row`.
pub fn degree_check(name: &str, m: &AlgMatrix) -> Result<String, String> {
    let (rd, cd) = match (&m.row_degrees, &m.col_degrees) {
        (Some(r), Some(c)) => (r, c),
        _ => return Err("no carrier degrees".into()),
    };
    for i in 0..m.rows {
        for j in 0..m.cols {
            let x = m.get(i, j);
            if x.is_zero() {
                continue;
            }
            let want = cd[j] - rd[i];
            if x.homogeneous_degree() != Some(want) {
                return Err(format!("{name} entry ({i}, {j}) = {x} has degrees {:?}, expected {want}", x.degrees()));
            }
        }
    }
    Ok(String::new())
}

/// Row index `3(k+1) + (l+1)` of the 9×9 matrix, for `k, l ∈ {−1, 0, 1}`.
pub fn big_index(k: i64, l: i64) -> usize {
    (3 * (k + 1) + (l + 1)) as usize
}

/// Entry `((k,l),(r,p))` of the 9×9 matrix: `ζ^{r(p−l)} v_{k,r} v_{l,p}`.
pub fn big_v_entry(k: i64, l: i64, r: i64, p: i64) -> Suq2Element {
    v_entry(k, r).times(&v_entry(l, p)).scaled(&Scalar::zeta_pow(r * (p - l)))
}

pub fn build_big_v() -> AlgMatrix {
    let idx = |n: usize| (n as i64 / 3 - 1, n as i64 % 3 - 1);
    AlgMatrix::from_fn(9, 9, |row, col| {
        let ((k, l), (r, p)) = (idx(row), idx(col));
        big_v_entry(k, l, r, p)
    })
}

/// The constants `A … G` of the `P_i` row identities.
pub fn row_constants() -> [Scalar; 7] {
    let vs = Scalar::varsigma();
    let s2 = Scalar::sigma2();
    [s2.clone(), -vs.clone(), -&(&vs * &s2), &Scalar::one() - &vs.pow(2), s2.clone(), vs.clone(), -&(&vs * &s2)]
}

/// Coefficient row of `P_{−1}`, `P_0`, `P_1` in the basis `e_r e_p`.
pub fn p_row(i: i64) -> [Scalar; 9] {
    let [a, b, c, d, e, f, g] = row_constants();
    let z = Scalar::zero;
    match i {
        -1 => [z(), a, z(), c, z(), z(), z(), z(), z()],
        0 => [z(), z(), b, z(), d, z(), f, z(), z()],
        1 => [z(), z(), z(), z(), z(), e, z(), g, z()],
        _ => panic!("row index {i} out of range"),
    }
}

/// `[0 0 1 0 σ² 0 ς 0 0]`.
pub fn p0_row() -> [Scalar; 9] {
    let z = Scalar::zero;
    [z(), z(), Scalar::one(), z(), Scalar::sigma2(), z(), Scalar::varsigma(), z(), z()]
}

pub fn row_times(row: &[Scalar; 9], big: &AlgMatrix, col: usize) -> Suq2Element {
    (0..9).fold(Suq2Element::zero(), |acc, k| acc.plus(&big.get(k, col).scaled(&row[k])))
}

/// Expected `coef(P_i)·𝕍` components: `[0, A v_{i,−1}, B v_{i,0}, C v_{i,−1}, D v_{i,0}, E v_{i,1}, F v_{i,0}, G v_{i,1}, 0]`.
pub fn p_row_expected(i: i64) -> Vec<Suq2Element> {
    let [a, b, c, d, e, f, g] = row_constants();
    let v = |j: i64, k: &Scalar| v_entry(i, j).scaled(k);
    vec![
        Suq2Element::zero(),
        v(-1, &a),
        v(0, &b),
        v(-1, &c),
        v(0, &d),
        v(1, &e),
        v(0, &f),
        v(1, &g),
        Suq2Element::zero(),
    ]
}

/// The `P_0` row identity (9 components) and the three `P_i` rows (27 components).
pub fn row_identities() -> Vec<ReportRecord> {
    let big = build_big_v();
    let name = |n: usize| format!("({},{})", n as i64 / 3 - 1, n as i64 % 3 - 1);
    let mut out = Vec::new();
    let p0 = p0_row();
    for col in 0..9 {
        out.push(ReportRecord::run(format!("big-v/onP0/{}", name(col)), "big-v/row-identities", || {
            let l = row_times(&p0, &big, col);
            let r = Suq2Element::scalar(p0[col].clone());
            expect_eq(&l, &r, || l.minus(&r).to_string())
        }));
    }
    for i in -1..=1 {
        let row = p_row(i);
        let want = p_row_expected(i);
        for col in 0..9 {
            out.push(ReportRecord::run(format!("big-v/onPi/{i}/{}", name(col)), "big-v/row-identities", || {
                let l = row_times(&row, &big, col);
                expect_eq(&l, &want[col], || l.minus(&want[col]).to_string())
            }));
        }
    }
    out
}

/// Dimension of `{A ∈ M₃ : A V = V A}` at `q = q0`, computed from the coefficients of the `v_{i,j}`.
pub fn commutant_dim(q0: Complex64) -> Result<usize, ScalarError> {
    crate::scalar::check_sample_point(q0)?;
    let v = build_v();
    // unknown a_{rs} has column 3r+s; (AV − VA)_{ij} = Σ_s a_{is} v_{sj} − Σ_r v_{ir} a_{rj}
    let mut monos: Vec<Suq2Mono> = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            monos.extend(v.get(i, j).terms().map(|(m, _)| *m));
        }
    }
    monos.sort();
    monos.dedup();
    let pos = |m: &Suq2Mono| monos.binary_search(m).unwrap();
    let rows = 9 * monos.len();
    let mut cols = vec![vec![Complex64::new(0.0, 0.0); rows]; 9];
    for i in 0..3 {
        for j in 0..3 {
            let base = (3 * i + j) * monos.len();
            for s_ in 0..3 {
                for (m, c) in v.get(s_, j).terms() {
                    cols[3 * i + s_][base + pos(m)] += c.eval(q0, 0.0, 0.0)?;
                }
            }
            for r in 0..3 {
                for (m, c) in v.get(i, r).terms() {
                    cols[3 * r + j][base + pos(m)] -= c.eval(q0, 0.0, 0.0)?;
                }
            }
        }
    }
    Ok(9 - numeric_rank(&cols, 1e-9).0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::suq2::a;

    fn e(src: &str) -> Suq2Element {
        src.parse().unwrap()
    }

    fn all_pass(rs: &[ReportRecord]) {
        for r in rs {
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn u_examples() {
        let u = fundamental_u();
        assert_eq!(*u.get(0, 1), e("-q*gammastar"));
        all_pass(&unitarity_check("u", &u, 0));
        all_pass(&rep_check("u", &u, 0));
        assert!(degree_check("u", &u).is_ok());
    }

    #[test]
    fn trivial_rep() {
        let one = AlgMatrix::identity(1).with_degrees(&[0]);
        all_pass(&rep_check("one", &one, 0));
    }

    #[test]
    fn tensor_square_matches_display() {
        let rows = [
            "alpha^2, -qb*alpha*gammastar, -alpha*gammastar, q^2*gammastar^2",
            "zeta*alpha*gamma, alpha*alphastar, -q*gammastar*gamma, -q*gammastar*alphastar",
            "gamma*alpha, -qb*gamma*gammastar, alphastar*alpha, -gammastar*alphastar",
            "zeta*gamma^2, gamma*alphastar, alphastar*gamma, alphastar^2",
        ];
        let m = tensor_square();
        for (i, row) in rows.iter().enumerate() {
            for (j, cell) in row.split(", ").enumerate() {
                assert_eq!(*m.get(i, j), e(cell), "({i}, {j})");
            }
        }
        assert_eq!(*m.get(1, 0), e("q*gamma*alpha"));
        assert!(degree_check("uu", &m).is_ok());
    }

    #[test]
    fn invariant_vector_is_fixed() {
        let m = tensor_square();
        let w = invariant_vector();
        for i in 0..4 {
            let got = (0..4).fold(Suq2Element::zero(), |acc, j| acc.plus(&m.get(i, j).scaled(&w[j])));
            assert_eq!(got, Suq2Element::scalar(w[i].clone()), "row {i}");
        }
    }

    #[test]
    fn basis_change_is_inverse_up_to_sigma2() {
        let (qm, rm) = basis_change();
        let p = rp_mul(&qm, &rm);
        for (i, row) in p.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                let want = if i == j { Scalar::sigma2() } else { Scalar::zero() };
                assert_eq!(x.a, Suq2Element::scalar(want));
                assert!(x.b.is_zero());
            }
        }
    }

    #[test]
    fn w_matches_display() {
        let bf = block_form();
        assert_eq!(bf[0][0].a, Suq2Element::one());
        for k in 1..4 {
            assert!(bf[0][k].a.is_zero() && bf[0][k].b.is_zero());
            assert!(bf[k][0].a.is_zero() && bf[k][0].b.is_zero());
        }
        // (rational part, σ-part)
        let want = [
            ["alpha^2", "0"],
            ["0", "-alpha*gammastar"],
            ["q^2*gammastar^2", "0"],
            ["0", "gamma*alpha"],
            ["1 - s2*gammastar*gamma", "0"],
            ["0", "-gammastar*alphastar"],
            ["zeta*gamma^2", "0"],
            ["0", "alphastar*gamma"],
            ["alphastar^2", "0"],
        ];
        let w = build_w();
        for i in 0..3 {
            for j in 0..3 {
                let [ra, rb] = want[3 * i + j];
                assert_eq!(w[i][j].a, e(ra), "({i}, {j})");
                assert_eq!(w[i][j].b, e(rb), "({i}, {j})");
            }
        }
    }

    #[test]
    fn v_pipeline_equals_display() {
        assert_eq!(build_v_pipeline().unwrap(), build_v());
        assert_eq!(v_entry(-1, 0), e("-s2*gammastar*alpha"));
    }

    #[test]
    fn v_is_unitary_rep_with_degrees() {
        let v = build_v();
        let w = weighted_unitarity_check("V", &v, &carrier_weights(), -1);
        assert_eq!(w.len(), 18);
        all_pass(&w);
        all_pass(&rep_check("V", &v, -1));
        assert!(degree_check("V", &v).is_ok());
        let want = [[0, -1, -2], [1, 0, -1], [2, 1, 0]];
        for (i, row) in v.degrees().iter().enumerate() {
            for (j, d) in row.iter().enumerate() {
                assert_eq!(*d, Some(want[i][j]));
            }
        }
    }

    #[test]
    fn v_is_not_unitary_as_printed() {
        let u = unitarity_check("V", &build_v(), -1);
        assert_eq!(u.len(), 18);
        assert!(u.iter().all(|r| !r.passed()));
        // u itself is unitary
        all_pass(&unitarity_check("u", &fundamental_u(), 0));
    }

    #[test]
    fn v_star_structure() {
        let zb = Scalar::zeta_bar();
        assert_eq!(v_entry(-1, -1).star(), v_entry(1, 1));
        assert_eq!(v_entry(-1, 0).star(), v_entry(1, 0));
        assert_eq!(v_entry(0, 0).star(), v_entry(0, 0));
        assert_eq!(v_entry(0, -1).star(), v_entry(0, 1).scaled(&zb));
        assert_eq!(v_entry(1, -1).star(), v_entry(-1, 1).scaled(&zb.pow(2)));
    }

    #[test]
    fn middle_column_is_weight_zero() {
        for i in -1..=1 {
            assert_eq!(v_entry(i, 0).cond_expect(), v_entry(i, 0));
        }
    }

    #[test]
    fn big_v_examples() {
        let big = build_big_v();
        let zeta = Scalar::zeta();
        // row (−1,−1), column (0,1): v₋₁,₀ v₋₁,₁ = σ² a_{1,0,3}
        assert_eq!(*big.get(big_index(-1, -1), big_index(0, 1)), a(1, 0, 3).scaled(&Scalar::sigma2()));
        // ζ² v₋₁,₁ v₋₁,₁ = ζ² q² a_{0,0,4}
        assert_eq!(
            *big.get(big_index(-1, -1), big_index(1, 1)),
            a(0, 0, 4).scaled(&(&zeta.pow(2) * &Scalar::q().pow(2)))
        );
        assert_eq!(*big.get(8, 8), a(-4, 0, 0));
    }

    #[test]
    fn row_identities_hold() {
        let rs = row_identities();
        assert_eq!(rs.len(), 36);
        all_pass(&rs);
    }

    #[test]
    fn commutant_is_scalars() {
        assert_eq!(commutant_dim(Complex64::new(0.3, 0.4)).unwrap(), 1);
        assert_eq!(commutant_dim(Complex64::new(0.5, 0.0)).unwrap(), 1);
    }
}
