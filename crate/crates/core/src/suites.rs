//! Named verification suites and the numeric cross-check.

use std::path::PathBuf;

use num_complex::Complex64;
use rayon::prelude::*;
use thiserror::Error;

use crate::braided::{BraidedElement, LegKind};
use crate::coproduct::{
    self, coassoc_sides, counit_and_pi_sides, delta, genxq_closed_form, hom_pairs, hom_relation_sides,
    podles_relations, podles_relations_corrected,
};
use crate::numrep::{self, Window};
use crate::oracle::{self, OracleError};
use crate::repmat::{self, build_big_v, build_v, build_v_pipeline, p0_row, p_row, p_row_expected, row_times, v_entry};
use crate::report::{expect_eq, ReportRecord};
use crate::scalar::Scalar;
use crate::sphere::{self, gamma, gamma_generator, relation_sides, SphereElement, RELATION_NAMES, SB};
use crate::suq2::{self, a, Suq2Element};

pub const SUITES: [&str; 12] = [
    "relations",
    "coassoc",
    "appendix-a",
    "appendix-b",
    "v-rep",
    "degrees",
    "big-v",
    "quotient",
    "sphere",
    "theorem7",
    "rank",
    "numeric-crosscheck",
];

#[derive(Debug, Error)]
pub enum SuiteError {
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub max_size: u32,
    pub pairs: usize,
    pub q_samples: Vec<Complex64>,
    pub rank_q: Vec<Complex64>,
    pub lambda: Vec<f64>,
    pub rho: Vec<f64>,
    pub levels: usize,
    pub width: usize,
    pub oracle_dir: PathBuf,
    pub tolerance: f64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            max_size: 3,
            pairs: 100,
            q_samples: numrep::default_q_samples(),
            rank_q: vec![Complex64::new(0.3, 0.4), Complex64::new(0.5, 0.0)],
            lambda: numrep::DEFAULT_PARAM_SAMPLES.to_vec(),
            rho: numrep::DEFAULT_PARAM_SAMPLES.to_vec(),
            levels: 10,
            width: 8,
            oracle_dir: oracle::default_dir(),
            tolerance: 1e-9,
        }
    }
}

impl SuiteConfig {
    pub fn validate(&self) -> Result<(), SuiteError> {
        let bad = |m: String| Err(SuiteError::Config(m));
        for q in self.q_samples.iter().chain(&self.rank_q) {
            if crate::scalar::check_sample_point(*q).is_err() {
                return bad(format!("q sample {q} is outside 0 < |q| < 1"));
            }
        }
        if self.q_samples.is_empty() || self.rank_q.is_empty() {
            return bad("no q samples".into());
        }
        if self.lambda.is_empty() || self.rho.is_empty() {
            return bad("lambda and rho samples must be non-empty".into());
        }
        if self.lambda.iter().chain(&self.rho).any(|x| !x.is_finite()) {
            return bad("lambda and rho samples must be finite".into());
        }
        if self.levels == 0 || self.width == 0 {
            return bad("window levels and width must be positive".into());
        }
        if self.tolerance.is_nan() || self.tolerance <= 0.0 {
            return bad("tolerance must be positive".into());
        }
        Ok(())
    }

    fn param_points(&self) -> Vec<(f64, f64)> {
        self.lambda.iter().flat_map(|&l| self.rho.iter().map(move |&r| (l, r))).collect()
    }
}

/// Runs one suite; records come back in a fixed order.
pub fn run_suite(name: &str, cfg: &SuiteConfig) -> Result<Vec<ReportRecord>, SuiteError> {
    cfg.validate()?;
    Ok(match name {
        "relations" => relations(cfg),
        "coassoc" => coproduct::check_coassoc(cfg.max_size),
        "appendix-a" => oracle::check_products(&oracle::load_products(&cfg.oracle_dir)?),
        "appendix-b" => oracle::check_coproducts(&oracle::load_coproducts(&cfg.oracle_dir)?),
        "v-rep" => v_rep(),
        "degrees" => degrees(),
        "big-v" => repmat::row_identities(),
        "quotient" => coproduct::check_quotient_sphere(),
        "sphere" => sphere_suite(),
        "theorem7" => sphere::verify_theorem7(),
        "rank" => rank(cfg),
        "numeric-crosscheck" => numeric_crosscheck(cfg)?,
        other => return Err(SuiteError::UnknownSuite(other.to_string())),
    })
}

/// Every suite in [`SUITES`] order.
pub fn run_all(cfg: &SuiteConfig) -> Result<Vec<ReportRecord>, SuiteError> {
    let mut out = Vec::new();
    for s in SUITES {
        out.extend(run_suite(s, cfg)?);
    }
    Ok(out)
}

fn relations(cfg: &SuiteConfig) -> Vec<ReportRecord> {
    let mut out = coproduct::check_hom_relations(cfg.pairs);
    out.extend(coproduct::check_counit_and_pi(cfg.max_size));
    out.extend(coproduct::check_star_and_expectation(cfg.max_size));
    out.extend(coproduct::check_right_coaction(cfg.max_size));
    out.extend(suq2_properties());
    out.extend(braided_properties());
    out
}

fn suq2_properties() -> Vec<ReportRecord> {
    let ms = suq2::monomials(2);
    let els: Vec<Suq2Element> = ms.iter().map(|m| Suq2Element::mono(*m)).collect();
    let loc = "properties/suq2";
    vec![
        ReportRecord::run("properties/suq2/associativity", loc, || {
            for x in &els {
                for y in &els {
                    let xy = x.times(y);
                    for z in &els {
                        let (l, r) = (xy.times(z), x.times(&y.times(z)));
                        if l != r {
                            return Err(format!("({x})({y})({z}): {}", l.minus(&r)));
                        }
                    }
                }
            }
            Ok(format!("{} triples", els.len().pow(3)))
        }),
        ReportRecord::run("properties/suq2/star", loc, || {
            for x in &els {
                if x.star().star() != *x {
                    return Err(format!("x** != x at {x}"));
                }
                for y in &els {
                    if x.times(y).star() != y.star().times(&x.star()) {
                        return Err(format!("(xy)* != y*x* at x = {x}, y = {y}"));
                    }
                }
            }
            Ok(format!("{} pairs", els.len().pow(2)))
        }),
        ReportRecord::run("properties/suq2/grading", loc, || {
            for (m, x) in ms.iter().zip(&els) {
                for (n, y) in ms.iter().zip(&els) {
                    let p = x.times(y);
                    if !p.is_zero() && p.homogeneous_degree() != Some(m.degree() + n.degree()) {
                        return Err(format!("deg({x} * {y}) = {:?}", p.degrees()));
                    }
                }
            }
            Ok(String::new())
        }),
    ]
}

fn braided_properties() -> Vec<ReportRecord> {
    let gens = [suq2::alpha(), suq2::alpha_star(), suq2::gamma(), suq2::gamma_star()];
    let loc = "properties/braided";
    let ss = [LegKind::Suq2, LegKind::Suq2];
    let sss = [LegKind::Suq2; 3];
    vec![
        ReportRecord::run("properties/braided/exchange", loc, || {
            for x in &gens {
                for y in &gens {
                    let dx = x.homogeneous_degree().unwrap();
                    let dy = y.homogeneous_degree().unwrap();
                    let l = BraidedElement::embed(&ss, 1, y).times(&BraidedElement::embed(&ss, 0, x));
                    let r = BraidedElement::pair(x, y).scaled(&Scalar::zeta_pow(-dx * dy));
                    if l != r {
                        return Err(format!("j2({y}) j1({x}): {}", l.minus(&r)));
                    }
                }
            }
            Ok("16 generator pairs".into())
        }),
        ReportRecord::run("properties/braided/reassociation", loc, || {
            let els: Vec<BraidedElement> = suq2::monomials(1)
                .iter()
                .enumerate()
                .map(|(i, m)| {
                    let x = Suq2Element::mono(*m);
                    BraidedElement::embed(&sss, i % 3, &x).plus(&BraidedElement::embed(&sss, (i + 1) % 3, &x.star()))
                })
                .collect();
            for x in &els {
                for y in &els {
                    let xy = x.times(y);
                    for z in &els {
                        let (l, r) = (xy.times(z), x.times(&y.times(z)));
                        if l != r {
                            return Err(format!("({x})({y})({z}): {}", l.minus(&r)));
                        }
                    }
                }
            }
            let (x, y, z) = (delta(&suq2::alpha()), delta(&suq2::gamma()), delta(&suq2::gamma_star()));
            let l = x.tensor(&y).tensor(&z);
            let r = x.tensor(&y.tensor(&z));
            expect_eq(&l, &r, || l.minus(&r).to_string())?;
            Ok(format!("{} triples", els.len().pow(3)))
        }),
    ]
}

fn v_rep() -> Vec<ReportRecord> {
    let v = build_v();
    let pipeline = build_v_pipeline();
    let mut out = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            let (ti, tj) = (i as i64 - 1, j as i64 - 1);
            out.push(ReportRecord::run(format!("V/pipeline/({ti},{tj})"), "representations/V", || {
                let p = pipeline.as_ref().map_err(|e| e.clone())?;
                expect_eq(p.get(i, j), v.get(i, j), || p.get(i, j).minus(v.get(i, j)).to_string())
            }));
        }
    }
    out.extend(repmat::unitarity_check("V", &v, -1));
    out.extend(repmat::weighted_unitarity_check("V", &v, &repmat::carrier_weights(), -1));
    out.extend(repmat::rep_check("V", &v, -1));
    let u = repmat::fundamental_u();
    out.extend(repmat::unitarity_check("u", &u, 0));
    out.extend(repmat::rep_check("u", &u, 0));
    let t = repmat::tensor_square();
    out.extend(repmat::unitarity_check("u-tensor-u", &t, 0));
    out.extend(repmat::rep_check("u-tensor-u", &t, 0));
    out
}

fn degrees() -> Vec<ReportRecord> {
    let mut out = vec![
        ReportRecord::run("degrees/u", "representations/u", || repmat::degree_check("u", &repmat::fundamental_u())),
        ReportRecord::run("degrees/u-tensor-u", "representations/u-tensor-u", || {
            repmat::degree_check("u-tensor-u", &repmat::tensor_square())
        }),
        ReportRecord::run("degrees/V", "representations/V", || repmat::degree_check("V", &build_v())),
        ReportRecord::run("degrees/V-pipeline", "representations/V", || {
            repmat::degree_check("V", &build_v_pipeline()?)
        }),
    ];
    out.push(ReportRecord::run("degrees/V-values", "representations/V", || {
        let want = [[0, -1, -2], [1, 0, -1], [2, 1, 0]];
        for i in 0..3 {
            for j in 0..3 {
                let d = v_entry(i as i64 - 1, j as i64 - 1).homogeneous_degree();
                if d != Some(want[i][j]) {
                    return Err(format!("deg v[{},{}] = {d:?}, expected {}", i as i64 - 1, j as i64 - 1, want[i][j]));
                }
            }
        }
        Ok("deg v[i,j] = i - j".into())
    }));
    out
}

fn sphere_suite() -> Vec<ReportRecord> {
    let mut out = vec![ReportRecord::run("sphere/quotient-parameters", "sphere/quotient-parameters", || {
        let (rho_q, lam_q) = sphere::quotient_parameters()?;
        Ok(format!("rho_q = {rho_q}, lambda_q = {lam_q}"))
    })];
    let ms = sphere::monomials(2);
    let els: Vec<SphereElement> = ms.iter().map(|m| SphereElement::mono(*m)).collect();
    let loc = "properties/sphere";
    out.push(ReportRecord::run("properties/sphere/associativity", loc, || {
        for x in &els {
            for y in &els {
                let xy = x.times(y);
                for z in &els {
                    let (l, r) = (xy.times(z), x.times(&y.times(z)));
                    if l != r {
                        return Err(format!("({x})({y})({z}): {}", l.minus(&r)));
                    }
                }
            }
        }
        Ok(format!("{} triples", els.len().pow(3)))
    }));
    out.push(ReportRecord::run("properties/sphere/star", loc, || {
        for x in &els {
            if x.star().star() != *x {
                return Err(format!("x** != x at {x}"));
            }
            for y in &els {
                if x.times(y).star() != y.star().times(&x.star()) {
                    return Err(format!("(xy)* != y*x* at x = {x}, y = {y}"));
                }
            }
        }
        Ok(format!("{} pairs", els.len().pow(2)))
    }));
    out.push(ReportRecord::run("properties/sphere/grading", loc, || {
        for (m, x) in ms.iter().zip(&els) {
            for (n, y) in ms.iter().zip(&els) {
                let p = x.times(y);
                if !p.is_zero() && p.homogeneous_degree() != Some(m.degree() + n.degree()) {
                    return Err(format!("deg({x} * {y}) = {:?}", p.degrees()));
                }
            }
        }
        Ok(String::new())
    }));
    out
}

fn rank(cfg: &SuiteConfig) -> Vec<ReportRecord> {
    let mut out = Vec::new();
    for &q in &cfg.rank_q {
        out.push(rank_record(q, cfg.levels, cfg.width));
        out.push(ReportRecord::run(format!("rank/commutant/q={q}"), "rank/commutant", || {
            let d = repmat::commutant_dim(q).map_err(|e| e.to_string())?;
            if d == 1 {
                Ok("dim = 1".into())
            } else {
                Err(format!("dim = {d}"))
            }
        }));
        out.push(ReportRecord::run(format!("rank/fixedpoint-kernel/q={q}"), "rank/fixedpoint-kernel", || {
            let d = coproduct::fixedpoint_kernel_dim(3, q).map_err(|e| e.to_string())?;
            if d == 1 {
                Ok("dim = 1 at max_kl = 3".into())
            } else {
                Err(format!("dim = {d} at max_kl = 3"))
            }
        }));
    }
    out
}

/// `rank(π(v_{i,j}) e_{2,0}) = 9` with the smallest singular value above `1e−6` of the largest.
pub fn rank_record(q: Complex64, levels: usize, width: usize) -> ReportRecord {
    ReportRecord::run(format!("rank/nine-range/q={q}"), format!("rank/nine-range/N={levels},K={width}"), || {
        let w = Window::new(levels, width, q).map_err(|e| e.to_string())?;
        let (r, sv) = numrep::nine_range_rank(&w).map_err(|e| e.to_string())?;
        let ratio = sv.last().copied().unwrap_or(0.0) / sv.first().copied().unwrap_or(1.0);
        let witness = format!("rank = {r}, smallest/largest = {ratio:.3e}");
        if r == 9 && ratio > 1e-6 {
            Ok(witness)
        } else {
            Err(witness)
        }
    })
}

enum Sides {
    Su(Suq2Element, Suq2Element),
    Br(BraidedElement, BraidedElement),
    Sph(SphereElement, SphereElement),
}

struct NumIdentity {
    id: String,
    sides: Result<Sides, String>,
    params: bool,
}

fn ni(id: impl Into<String>, sides: Result<Sides, String>) -> NumIdentity {
    NumIdentity { id: id.into(), sides, params: false }
}

fn br(lr: (BraidedElement, BraidedElement)) -> Result<Sides, String> {
    Ok(Sides::Br(lr.0, lr.1))
}

fn su(l: Suq2Element, r: Suq2Element) -> Result<Sides, String> {
    Ok(Sides::Su(l, r))
}

/// The symbolic identities behind the exact suites, as explicit side pairs.
fn crosscheck_identities(cfg: &SuiteConfig) -> Result<Vec<NumIdentity>, SuiteError> {
    let mut out = Vec::new();
    for p in oracle::load_products(&cfg.oracle_dir)? {
        out.push(ni(
            format!("appendix-a/({},{}),({},{})", p.k, p.l, p.r, p.p),
            oracle::product_sides(&p).map(|(l, r)| Sides::Su(l, r)),
        ));
    }
    for c in oracle::load_coproducts(&cfg.oracle_dir)? {
        out.push(ni(
            format!("appendix-b/({},{})", c.i, c.j),
            oracle::coproduct_sides(&c).map(|(l, r)| Sides::Br(l, r)),
        ));
    }
    for (id, l, r) in hom_relation_sides() {
        out.push(ni(format!("relations/{id}"), br((l, r))));
    }
    for (i, (x, y)) in hom_pairs(cfg.pairs).into_iter().enumerate() {
        let (x, y) = (Suq2Element::mono(x), Suq2Element::mono(y));
        out.push(ni(format!("relations/product/{i}"), br((delta(&x.times(&y)), delta(&x).times(&delta(&y))))));
    }
    for m in suq2::monomials(cfg.max_size) {
        let tag = format!("a[{},{},{}]", m.n, m.k, m.l);
        out.push(ni(format!("coassoc/{tag}"), coassoc_sides(&m).map(|(l, r)| Sides::Br(l, r))));
        for (name, sides) in counit_and_pi_sides(&m) {
            out.push(ni(format!("{name}/{tag}"), sides.map(|(l, r)| Sides::Br(l, r))));
        }
    }
    let stated = podles_relations().into_iter().filter(|(_, l, r)| l == r);
    for (id, l, r) in stated.chain(podles_relations_corrected()) {
        out.push(ni(format!("quotient/relation/{id}"), su(l, r)));
    }
    for k in 0..=4u32 {
        for l in 0..=4u32 {
            out.push(ni(
                format!("quotient/closed-form/k{k}l{l}"),
                su(a(l as i64 - k as i64, k, l), genxq_closed_form(k, l)),
            ));
        }
    }
    let v = build_v();
    let g = repmat::carrier_weights();
    let gi: Vec<Scalar> = g.iter().map(|x| x.inv().expect("invertible weight")).collect();
    let vs = v.star();
    for i in 0..3 {
        for j in 0..3 {
            let (ti, tj) = (i as i64 - 1, j as i64 - 1);
            let kron = |w: &Scalar| if i == j { Suq2Element::scalar(w.clone()) } else { Suq2Element::zero() };
            let l = (0..3).fold(Suq2Element::zero(), |acc, k| acc.plus(&vs.get(i, k).scaled(&g[k]).times(v.get(k, j))));
            out.push(ni(format!("V/weighted-unitary/M*GM/({ti},{tj})"), su(l, kron(&g[i]))));
            let l =
                (0..3).fold(Suq2Element::zero(), |acc, k| acc.plus(&v.get(i, k).scaled(&gi[k]).times(vs.get(k, j))));
            out.push(ni(format!("V/weighted-unitary/MG^-1M*/({ti},{tj})"), su(l, kron(&gi[i]))));
        }
    }
    let pipeline = build_v_pipeline();
    for i in 0..3 {
        for j in 0..3 {
            let (ti, tj) = (i as i64 - 1, j as i64 - 1);
            out.push(ni(format!("V/rep/({ti},{tj})"), br((delta(v.get(i, j)), repmat::rep_rhs(&v, i, j)))));
            let sides =
                pipeline.as_ref().map_err(|e| e.clone()).map(|p| Sides::Su(p.get(i, j).clone(), v.get(i, j).clone()));
            out.push(ni(format!("V/pipeline/({ti},{tj})"), sides));
        }
    }
    let big = build_big_v();
    let cname = |n: usize| format!("({},{})", n as i64 / 3 - 1, n as i64 % 3 - 1);
    let p0 = p0_row();
    for col in 0..9 {
        out.push(ni(
            format!("big-v/onP0/{}", cname(col)),
            su(row_times(&p0, &big, col), Suq2Element::scalar(p0[col].clone())),
        ));
    }
    for i in -1..=1 {
        let (row, want) = (p_row(i), p_row_expected(i));
        for col in 0..9 {
            out.push(ni(format!("big-v/onPi/{i}/{}", cname(col)), su(row_times(&row, &big, col), want[col].clone())));
        }
    }
    let (rho, lam) = (Scalar::rho(), Scalar::lambda());
    let gens = [sphere::e(-1), sphere::e(0), sphere::e(1)];
    let sides = relation_sides([&gens[0], &gens[1], &gens[2]], &SphereElement::one(), &rho, &lam);
    let pg: Vec<BraidedElement> = (-1..=1).map(gamma_generator).collect();
    let psides = relation_sides([&pg[0], &pg[1], &pg[2]], &BraidedElement::one(&SB), &rho, &lam);
    for (idx, name) in RELATION_NAMES.iter().enumerate() {
        let (l, r) = sides[idx].clone();
        out.push(NumIdentity { id: format!("theorem7/defining/{name}"), sides: Ok(Sides::Sph(l, r)), params: true });
        out.push(NumIdentity { id: format!("theorem7/P/{name}"), sides: br(psides[idx].clone()), params: true });
    }
    for i in -1..=1 {
        out.push(ni(format!("theorem7/P-star/{i}"), br((gamma_generator(i).star(), gamma_generator(-i)))));
        out.push(ni(
            format!("theorem7/gamma-star/{i}"),
            br((gamma(&sphere::e(i).star()), gamma(&sphere::e(i)).star())),
        ));
        out.push(NumIdentity {
            id: format!("theorem7/coassoc/{i}"),
            sides: sphere::gamma_coassoc_sides(i).map(|(l, r)| Sides::Br(l, r)),
            params: true,
        });
        out.push(ni(format!("theorem7/weighted-expansion/{i}"), br(sphere::weighted_expansion_sides(i))));
    }
    let ms = sphere::monomials(1);
    for x in &ms {
        for y in &ms {
            let (x, y) = (SphereElement::mono(*x), SphereElement::mono(*y));
            out.push(NumIdentity {
                id: format!("theorem7/gamma-hom/{x}|{y}"),
                sides: br((gamma(&x.times(&y)), gamma(&x).times(&gamma(&y)))),
                params: true,
            });
        }
    }
    Ok(out)
}

fn residual_at(s: &Sides, q: Complex64, lam: f64, rho: f64) -> Result<f64, numrep::NumError> {
    match s {
        Sides::Su(l, r) => numrep::suq2_residual(l, r, q, lam, rho),
        Sides::Br(l, r) => numrep::braided_residual(l, r, q, lam, rho),
        Sides::Sph(l, r) => numrep::coeff_residual(l, r, q, lam, rho),
    }
}

/// Re-checks the identities of the exact suites at every sample point.
pub fn numeric_crosscheck(cfg: &SuiteConfig) -> Result<Vec<ReportRecord>, SuiteError> {
    let ids = crosscheck_identities(cfg)?;
    let params = cfg.param_points();
    Ok(ids
        .par_iter()
        .map(|it| {
            ReportRecord::run(format!("numeric/{}", it.id), "numeric-crosscheck", || {
                let sides = it.sides.as_ref().map_err(|e| e.clone())?;
                let pts: &[(f64, f64)] = if it.params { &params } else { &[(0.0, 0.0)] };
                let mut worst: f64 = 0.0;
                let mut count = 0;
                for &q in &cfg.q_samples {
                    for &(lam, rho) in pts {
                        worst = worst.max(residual_at(sides, q, lam, rho).map_err(|e| e.to_string())?);
                        count += 1;
                    }
                }
                let w = format!("max residual {worst:.2e} over {count} sample points");
                if worst < cfg.tolerance {
                    Ok(w)
                } else {
                    Err(w)
                }
            })
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_suite_is_an_error() {
        assert!(matches!(run_suite("nope", &SuiteConfig::default()), Err(SuiteError::UnknownSuite(_))));
    }

    #[test]
    fn bad_sample_point_is_rejected() {
        let cfg = SuiteConfig { q_samples: vec![Complex64::new(1.0, 0.0)], ..SuiteConfig::default() };
        assert!(matches!(cfg.validate(), Err(SuiteError::Config(_))));
    }

    #[test]
    fn coassoc_at_size_zero_is_one_record() {
        let cfg = SuiteConfig { max_size: 0, ..SuiteConfig::default() };
        let rs = run_suite("coassoc", &cfg).unwrap();
        assert_eq!(rs.len(), 1);
        assert!(rs[0].passed());
    }

    #[test]
    fn small_suites_are_deterministic() {
        let cfg = SuiteConfig { max_size: 1, pairs: 5, ..SuiteConfig::default() };
        let run = || -> Vec<String> {
            run_suite("relations", &cfg).unwrap().into_iter().map(|r| r.without_timing().to_json_line()).collect()
        };
        assert_eq!(run(), run());
    }
}
