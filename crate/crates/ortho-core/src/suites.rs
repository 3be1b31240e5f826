//! Theorem property suites: seeded, deterministic, exact.
//!
//! Each check replays from `(seed, cases)` alone. Case `k` derives its own
//! generator from `seed + k`, so every suite sees the same instance stream
//! and a reported counterexample can be reproduced in isolation.

use crate::error::Result;
use crate::fixtures::{self, InstanceGen};
use crate::instance::InstanceFile;
use crate::lattice::OrderKind;
use crate::matrix::RatMatrix;
use crate::operator::{
    abs_mult_check, adjoint, check_riesz, classify, phi, restrict_to_quotient, AdjointResult,
    RegularOperator,
};
use crate::product::OrthoProduct;
use crate::report::CheckResult;

/// Shared knobs for every suite.
#[derive(Debug, Clone, Copy)]
pub struct SuiteConfig {
    pub seed: u64,
    pub cases: usize,
    pub max_dim: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 7,
            cases: 200,
            max_dim: 8,
        }
    }
}

fn case_gen(seed: u64, k: usize) -> InstanceGen {
    InstanceGen::new(seed.wrapping_add(k as u64))
}

/// The product drawn for case `k`; exposed so callers can recount
/// distribution statistics against the exact instances the suites saw.
pub fn case_product(seed: u64, k: usize, max_dim: usize) -> OrthoProduct {
    case_gen(seed, k).diag_product(max_dim)
}

// ---------------------------------------------------------------------------
// per-product properties (shared by the builtin and file-driven suites)
// ---------------------------------------------------------------------------

/// `<f, f> = <|f|, |f|> >= 0`
fn prop_vp(p: &OrthoProduct, gen: &mut InstanceGen) -> Result<Option<String>> {
    let f = gen.element(p.domain());
    let square = p.eval(&f, &f)?;
    let abs_square = p.eval(&f.abs(), &f.abs())?;
    if square != abs_square {
        return Ok(Some(format!(
            "<f,f> = {square} but <|f|,|f|> = {abs_square} for f = {f}"
        )));
    }
    if !square.is_positive() {
        return Ok(Some(format!(
            "<f,f> = {square} is not positive for f = {f}"
        )));
    }
    Ok(None)
}

/// Symmetric tensor and symmetric evaluation.
fn prop_steinberg(p: &OrthoProduct, gen: &mut InstanceGen) -> Result<Option<String>> {
    let n = p.domain().dim();
    for i in 0..n {
        for j in (i + 1)..n {
            if p.tensor_entry(i, j) != p.tensor_entry(j, i) {
                return Ok(Some(format!(
                    "tensor asymmetry at ({i}, {j}): {} vs {}",
                    p.tensor_entry(i, j),
                    p.tensor_entry(j, i)
                )));
            }
        }
    }
    let f = gen.element(p.domain());
    let g = gen.element(p.domain());
    let fg = p.eval(&f, &g)?;
    let gf = p.eval(&g, &f)?;
    if fg != gf {
        return Ok(Some(format!(
            "<f,g> = {fg} but <g,f> = {gf} for f = {f}, g = {g}"
        )));
    }
    Ok(None)
}

/// `<f, f> = 0` exactly on the span of the neutral basis, both directions.
fn prop_key(p: &OrthoProduct, gen: &mut InstanceGen) -> Result<Option<String>> {
    let neutral = p.neutral_basis()?;
    let candidates = [gen.element(p.domain()), gen.neutral_element(p)];
    for f in candidates {
        let vanishes = p.eval(&f, &f)?.is_zero();
        let member = neutral.contains(&f)?;
        if vanishes != member {
            return Ok(Some(format!(
                "f = {f}: <f,f> vanishes: {vanishes}, in span of neutral basis: {member}"
            )));
        }
    }
    Ok(None)
}

/// The neutral part is an ideal: closed under absolute value and under
/// domination `0 <= f <= g`. Returns the counterexample and whether the
/// instance had a nontrivial neutral part.
fn prop_neutral_ideal(p: &OrthoProduct, gen: &mut InstanceGen) -> Result<(Option<String>, bool)> {
    let neutral = p.neutral_basis()?;
    if neutral.dim() == 0 {
        return Ok((None, false));
    }
    let h = gen.neutral_element(p);
    let habs = h.abs();
    if !p.eval(&habs, &habs)?.is_zero() || !neutral.contains(&habs)? {
        return Ok((
            Some(format!("|h| leaves the neutral part for h = {h}")),
            true,
        ));
    }
    let dominated = match p.domain().order() {
        OrderKind::Coordinatewise => gen.point_below(&habs),
        // scalar shrinking keeps 0 <= f <= g in any order
        OrderKind::Lexicographic => habs.scale(&crate::rational::rat(1, 2)),
    };
    if !p.eval(&dominated, &dominated)?.is_zero() || !neutral.contains(&dominated)? {
        return Ok((
            Some(format!(
                "dominated element {dominated} below |h| = {habs} leaves the neutral part"
            )),
            true,
        ));
    }
    Ok((None, true))
}

/// Quotient well-definedness and definiteness.
fn prop_quo(p: &OrthoProduct, gen: &mut InstanceGen) -> Result<Option<String>> {
    let f = gen.element(p.domain());
    let g = gen.element(p.domain());
    let h = gen.neutral_element(p);
    let k = gen.neutral_element(p);
    let plain = p.eval(&f, &g)?;
    let shifted = p.eval(&(&f + &h), &(&g + &k))?;
    if plain != shifted {
        return Ok(Some(format!(
            "<f+h, g+k> = {shifted} differs from <f, g> = {plain} for neutral h = {h}, k = {k}"
        )));
    }
    let q = p.quotient()?;
    if !q.induced.is_definite()? {
        return Ok(Some("induced quotient product is not definite".into()));
    }
    let expected = p.domain().dim() - p.neutral_basis()?.dim();
    if q.induced.domain().dim() != expected {
        return Ok(Some(format!(
            "quotient dimension {} differs from {expected}",
            q.induced.domain().dim()
        )));
    }
    Ok(None)
}

/// The four multiplication-operator facts: positivity for positive
/// symbols, the decomposition `Φ_f = Φ_{f⁺} − Φ_{f⁻}`, the kernel
/// characterization, and positivity iff `f⁻` is neutral.
fn prop_tech(p: &OrthoProduct, gen: &mut InstanceGen) -> Result<Option<String>> {
    let neutral = p.neutral_basis()?;

    let fp = gen.positive_element(p.domain());
    if !phi(p, &fp)?.is_positive() {
        return Ok(Some(format!(
            "phi is not positive at the positive f = {fp}"
        )));
    }

    let f = gen.element(p.domain());
    let whole = phi(p, &f)?;
    let split = phi(p, &f.pos_part())?
        .matrix()
        .sub(phi(p, &f.neg_part())?.matrix())?;
    if whole.matrix() != &split {
        return Ok(Some(format!("phi(f) != phi(f+) - phi(f-) for f = {f}")));
    }

    // kernel: phi vanishes exactly on the neutral part
    let h = gen.neutral_element(p);
    for candidate in [&f, &h] {
        let vanishes = phi(p, candidate)?.matrix().is_zero();
        let member = neutral.contains(candidate)?;
        if vanishes != member {
            return Ok(Some(format!(
                "phi vanishes: {vanishes}, neutral membership: {member} for f = {candidate}"
            )));
        }
    }

    // positivity of phi(f) iff the negative part is neutral; the second
    // candidate has its negative part inside the neutral span by design
    let mixed = &gen.positive_element(p.domain()) + &gen.neutral_element(p);
    for candidate in [&f, &mixed] {
        let positive = phi(p, candidate)?.is_positive();
        let neg_neutral = neutral.contains(&candidate.neg_part())?;
        if positive != neg_neutral {
            return Ok(Some(format!(
                "phi positive: {positive}, f- neutral: {neg_neutral} for f = {candidate}"
            )));
        }
    }
    Ok(None)
}

/// `|Φ_f| = Φ_{|f|}` and `ker Φ = L⁰` via two independent assemblies.
fn prop_main(p: &OrthoProduct, gen: &mut InstanceGen) -> Result<Option<String>> {
    let f = gen.element(p.domain());
    if !abs_mult_check(p, &f)? {
        return Ok(Some(format!("rk_abs(phi(f)) != phi(|f|) for f = {f}")));
    }
    // kernel of f -> Φ_f, assembled by flattening phi at each basis vector
    let n = p.domain().dim();
    let m = p.codomain().dim();
    let mut stacked = RatMatrix::zero(n * m, n);
    for i in 0..n {
        let column = phi(p, &p.domain().basis_vector(i))?;
        let mut row_index = 0;
        for r in 0..m {
            for c in 0..n {
                stacked.set(row_index, i, column.matrix().get(r, c).clone());
                row_index += 1;
            }
        }
    }
    let phi_kernel = stacked.kernel_basis();
    let neutral = p.neutral_basis()?;
    let neutral_coords: Vec<Vec<crate::rational::Rational>> =
        neutral.basis.iter().map(|e| e.coords().to_vec()).collect();
    if phi_kernel != neutral_coords {
        return Ok(Some(
            "kernel of the multiplication map differs from the neutral basis".into(),
        ));
    }
    Ok(None)
}

/// Diagonal operators slide across the product: `<f, Dg> = <Df, g>`.
fn prop_orth(p: &OrthoProduct, gen: &mut InstanceGen) -> Result<Option<String>> {
    let d = gen.diagonal_operator(p.domain().dim());
    let f = gen.element(p.domain());
    let g = gen.element(p.domain());
    let lhs = p.eval(&f, &d.apply(&g)?)?;
    let rhs = p.eval(&d.apply(&f)?, &g)?;
    if lhs != rhs {
        return Ok(Some(format!(
            "<f, Dg> = {lhs} but <Df, g> = {rhs} for D = {d}, f = {f}, g = {g}"
        )));
    }
    Ok(None)
}

// ---------------------------------------------------------------------------
// builtin checks
// ---------------------------------------------------------------------------

fn run_product_cases(
    name: &str,
    cfg: &SuiteConfig,
    mut prop: impl FnMut(&OrthoProduct, &mut InstanceGen) -> Result<Option<String>>,
) -> CheckResult {
    for k in 0..cfg.cases {
        let mut gen = case_gen(cfg.seed, k);
        let p = gen.diag_product(cfg.max_dim);
        match prop(&p, &mut gen) {
            Ok(None) => {}
            Ok(Some(witness)) => return CheckResult::fail(name, format!("case {k}: {witness}")),
            Err(e) => return CheckResult::fail(name, format!("case {k}: error: {e}")),
        }
    }
    CheckResult::pass(name, format!("cases={}", cfg.cases))
}

pub fn check_vp(cfg: &SuiteConfig) -> CheckResult {
    run_product_cases("vp", cfg, prop_vp)
}

pub fn check_steinberg(cfg: &SuiteConfig) -> CheckResult {
    run_product_cases("steinberg", cfg, prop_steinberg)
}

pub fn check_key(cfg: &SuiteConfig) -> CheckResult {
    run_product_cases("key", cfg, prop_key)
}

pub fn check_neutral_ideal(cfg: &SuiteConfig) -> CheckResult {
    let mut nontrivial = 0usize;
    for k in 0..cfg.cases {
        let mut gen = case_gen(cfg.seed, k);
        let p = gen.diag_product(cfg.max_dim);
        match prop_neutral_ideal(&p, &mut gen) {
            Ok((None, was_nontrivial)) => nontrivial += usize::from(was_nontrivial),
            Ok((Some(witness), _)) => {
                return CheckResult::fail("neutral-ideal", format!("case {k}: {witness}"))
            }
            Err(e) => return CheckResult::fail("neutral-ideal", format!("case {k}: error: {e}")),
        }
    }
    CheckResult::pass(
        "neutral-ideal",
        format!("cases={}, nontrivial-neutral={nontrivial}", cfg.cases),
    )
}

pub fn check_quo(cfg: &SuiteConfig) -> CheckResult {
    run_product_cases("quo", cfg, prop_quo)
}

pub fn check_tech(cfg: &SuiteConfig) -> CheckResult {
    run_product_cases("tech", cfg, prop_tech)
}

pub fn check_main(cfg: &SuiteConfig) -> CheckResult {
    run_product_cases("main", cfg, prop_main)
}

pub fn check_orth(cfg: &SuiteConfig) -> CheckResult {
    run_product_cases("orth", cfg, prop_orth)
}

/// Positive square matrices under dot products: lattice homomorphism iff
/// `T*T` is an orthomorphism. Runs `5/2 · cases` instances on dims 2–5.
pub fn check_riesz_suite(cfg: &SuiteConfig) -> CheckResult {
    let total = cfg.cases * 5 / 2;
    for k in 0..total {
        let mut gen = case_gen(cfg.seed, k);
        let n = gen.dim_between(2, 5);
        let p = fixtures::euclidean(n);
        let t = match RegularOperator::new(p.domain(), p.domain(), gen.positive_matrix(n, n)) {
            Ok(t) => t,
            Err(e) => return CheckResult::fail("riesz", format!("case {k}: error: {e}")),
        };
        match check_riesz(&p, &p, &t) {
            Ok((hom, orth)) if hom == orth => {}
            Ok((hom, orth)) => {
                return CheckResult::fail(
                    "riesz",
                    format!(
                        "case {k}: lattice-hom = {hom} but T*T orthomorphism = {orth} for T = {t}"
                    ),
                )
            }
            Err(e) => return CheckResult::fail("riesz", format!("case {k}: error: {e}")),
        }
    }
    CheckResult::pass("riesz", format!("cases={total}, dims 2-5"))
}

/// The structural row criterion agrees with the definitional oracle
/// `|Tf| = T|f|` on every ±1 sign vector, exhaustively per dimension.
pub fn check_row_criterion(cfg: &SuiteConfig) -> CheckResult {
    let top = cfg.max_dim.clamp(1, 8);
    let mut gen = InstanceGen::new(cfg.seed);
    let mut tested = 0usize;
    for n in 1..=top {
        let candidates = vec![
            RegularOperator::from_matrix(RatMatrix::identity(n)),
            RegularOperator::from_matrix(gen.signed_matrix(n, n)),
            RegularOperator::from_matrix(gen.positive_matrix(n, n)),
            gen.lattice_hom(n),
        ];
        for t in candidates {
            let structural = t.is_lattice_hom();
            let mut oracle = true;
            let ones = t
                .domain()
                .element(vec![crate::rational::rat_int(1); n])
                .expect("ones vector");
            let t_ones = match t.apply(&ones) {
                Ok(v) => v,
                Err(e) => return CheckResult::fail("row-criterion", format!("error: {e}")),
            };
            for mask in 0u64..(1u64 << n) {
                let coords = (0..n)
                    .map(|i| {
                        if mask >> i & 1 == 1 {
                            crate::rational::rat_int(-1)
                        } else {
                            crate::rational::rat_int(1)
                        }
                    })
                    .collect();
                let s = t.domain().element(coords).expect("sign vector");
                let lhs = match t.apply(&s) {
                    Ok(v) => v.abs(),
                    Err(e) => return CheckResult::fail("row-criterion", format!("error: {e}")),
                };
                if lhs != t_ones {
                    oracle = false;
                    break;
                }
            }
            if structural != oracle {
                return CheckResult::fail(
                    "row-criterion",
                    format!("dim {n}: structural = {structural}, oracle = {oracle} for T = {t}"),
                );
            }
            tested += 1;
        }
    }
    CheckResult::pass("row-criterion", format!("matrices={tested}, dims 1-{top}"))
}

fn corollary_cases(cfg: &SuiteConfig) -> usize {
    cfg.cases / 2
}

/// Adjoints of positive operators are positive (definite products).
pub fn check_pospos(cfg: &SuiteConfig) -> CheckResult {
    let total = corollary_cases(cfg);
    for k in 0..total {
        let mut gen = case_gen(cfg.seed, k);
        let n = gen.dim_between(1, 5);
        let m = gen.dim_between(1, 5);
        let pl = gen.definite_diag_product(n);
        let pm = gen.definite_diag_product(m);
        let t = match RegularOperator::new(pl.domain(), pm.domain(), gen.positive_matrix(m, n)) {
            Ok(t) => t,
            Err(e) => return CheckResult::fail("pospos", format!("case {k}: error: {e}")),
        };
        match adjoint(&pl, &pm, &t) {
            Ok(AdjointResult::Unique(s)) => {
                if !s.is_positive() {
                    return CheckResult::fail(
                        "pospos",
                        format!("case {k}: adjoint {s} of the positive T = {t} is not positive"),
                    );
                }
            }
            Ok(other) => {
                return CheckResult::fail(
                    "pospos",
                    format!(
                        "case {k}: expected a unique adjoint under definite products, got {}",
                        other.kind()
                    ),
                )
            }
            Err(e) => return CheckResult::fail("pospos", format!("case {k}: error: {e}")),
        }
    }
    CheckResult::pass("pospos", format!("cases={total}"))
}

/// Adjoints of surjective lattice homomorphisms are lattice homomorphisms.
pub fn check_surjective_corollary(cfg: &SuiteConfig) -> CheckResult {
    let total = corollary_cases(cfg);
    for k in 0..total {
        let mut gen = case_gen(cfg.seed, k);
        let n = gen.dim_between(1, 5);
        let p = fixtures::euclidean(n);
        let t = gen.surjective_lattice_hom(n);
        match adjoint(&p, &p, &t) {
            Ok(AdjointResult::Unique(s)) => {
                if !s.is_lattice_hom() {
                    return CheckResult::fail(
                        "surjective-corollary",
                        format!("case {k}: adjoint {s} of the surjective hom {t} is not one"),
                    );
                }
            }
            Ok(other) => {
                return CheckResult::fail(
                    "surjective-corollary",
                    format!("case {k}: expected a unique adjoint, got {}", other.kind()),
                )
            }
            Err(e) => {
                return CheckResult::fail("surjective-corollary", format!("case {k}: error: {e}"))
            }
        }
    }
    CheckResult::pass("surjective-corollary", format!("cases={total}"))
}

/// Lattice homomorphisms whose adjoint exists are normal.
pub fn check_normal_corollary(cfg: &SuiteConfig) -> CheckResult {
    let total = corollary_cases(cfg);
    for k in 0..total {
        let mut gen = case_gen(cfg.seed, k);
        let n = gen.dim_between(1, 5);
        let p = fixtures::euclidean(n);
        let t = gen.lattice_hom(n);
        match adjoint(&p, &p, &t) {
            Ok(AdjointResult::Unique(_)) => {
                if !t.is_normal() {
                    return CheckResult::fail(
                        "normal-corollary",
                        format!("case {k}: lattice homomorphism {t} with an adjoint is not normal"),
                    );
                }
            }
            Ok(other) => {
                return CheckResult::fail(
                    "normal-corollary",
                    format!("case {k}: expected a unique adjoint, got {}", other.kind()),
                )
            }
            Err(e) => {
                return CheckResult::fail("normal-corollary", format!("case {k}: error: {e}"))
            }
        }
    }
    CheckResult::pass("normal-corollary", format!("cases={total}"))
}

/// Positive operators with an interval-preserving adjoint are lattice
/// homomorphisms. Mixes generic positive matrices with structured
/// homomorphisms so the hypothesis triggers on a healthy fraction.
pub fn check_interval_preserving_theorem(cfg: &SuiteConfig) -> CheckResult {
    let total = corollary_cases(cfg);
    let mut triggered = 0usize;
    for k in 0..total {
        let mut gen = case_gen(cfg.seed, k);
        let n = gen.dim_between(2, 4);
        let p = fixtures::euclidean(n);
        let t = if k % 2 == 0 {
            match RegularOperator::new(p.domain(), p.domain(), gen.positive_matrix(n, n)) {
                Ok(t) => t,
                Err(e) => {
                    return CheckResult::fail(
                        "interval-preserving",
                        format!("case {k}: error: {e}"),
                    )
                }
            }
        } else {
            gen.lattice_hom(n)
        };
        let star = match adjoint(&p, &p, &t) {
            Ok(AdjointResult::Unique(s)) => s,
            Ok(other) => {
                return CheckResult::fail(
                    "interval-preserving",
                    format!("case {k}: expected a unique adjoint, got {}", other.kind()),
                )
            }
            Err(e) => {
                return CheckResult::fail("interval-preserving", format!("case {k}: error: {e}"))
            }
        };
        match star.is_interval_preserving() {
            Ok(true) => {
                triggered += 1;
                if !t.is_lattice_hom() {
                    return CheckResult::fail(
                        "interval-preserving",
                        format!(
                            "case {k}: T* = {star} is interval preserving but T = {t} is no \
                             lattice homomorphism"
                        ),
                    );
                }
            }
            Ok(false) => {}
            Err(e) => {
                return CheckResult::fail("interval-preserving", format!("case {k}: error: {e}"))
            }
        }
    }
    if total >= 20 && triggered == 0 {
        return CheckResult::fail(
            "interval-preserving",
            format!("hypothesis never triggered over {total} cases"),
        );
    }
    CheckResult::pass(
        "interval-preserving",
        format!("cases={total}, triggered={triggered}"),
    )
}

/// The worked adjoint examples: an inconsistent equation, a family that
/// collapses after quotienting, and the two named matrices.
pub fn check_adjoint_examples() -> CheckResult {
    let name = "adjoint-examples";
    let run = || -> Result<Option<String>> {
        for n in [2, 3] {
            let fx = fixtures::no_adjoint(n)?;
            if adjoint(&fx.pl, &fx.pm, &fx.t)? != AdjointResult::NoAdjoint {
                return Ok(Some(format!(
                    "rank-one fixture in dimension {n} unexpectedly has an adjoint"
                )));
            }
        }
        for n in [2, 4] {
            let fx = fixtures::multi_adjoint(n)?;
            match adjoint(&fx.pl, &fx.pm, &fx.t)? {
                AdjointResult::Family {
                    homogeneous_basis, ..
                } if !homogeneous_basis.is_empty() => {}
                other => {
                    return Ok(Some(format!(
                        "degenerate fixture in dimension {n}: expected a family, got {}",
                        other.kind()
                    )))
                }
            }
            let q = fx.pl.quotient()?;
            let restricted = restrict_to_quotient(&q, &fx.t)?;
            match adjoint(&q.induced, &q.induced, &restricted)? {
                AdjointResult::Unique(_) => {}
                other => {
                    return Ok(Some(format!(
                        "quotient of the degenerate fixture: expected unique, got {}",
                        other.kind()
                    )))
                }
            }
        }
        let p2 = fixtures::euclidean(2);
        let t = fixtures::selfadjoint_2x2();
        let report = classify(&t, Some((&p2, &p2)))?;
        if report.selfadjoint != Some(true) || report.orthomorphism {
            return Ok(Some(
                "2x2 fixture must be selfadjoint and no orthomorphism".into(),
            ));
        }
        let p3 = fixtures::euclidean(3);
        let t = fixtures::latticehom_3x3();
        let star = match adjoint(&p3, &p3, &t)? {
            AdjointResult::Unique(s) => s,
            other => {
                return Ok(Some(format!(
                    "3x3 fixture: expected a unique adjoint, got {}",
                    other.kind()
                )))
            }
        };
        if !t.is_lattice_hom() || star.is_lattice_hom() || !t.is_normal() {
            return Ok(Some(
                "3x3 fixture must be a normal lattice homomorphism with a non-homomorphic \
                 adjoint"
                    .into(),
            ));
        }
        Ok(None)
    };
    match run() {
        Ok(None) => CheckResult::pass(name, "fixtures=6"),
        Ok(Some(witness)) => CheckResult::fail(name, witness),
        Err(e) => CheckResult::fail(name, format!("error: {e}")),
    }
}

/// Every suite, in a fixed order, against generated instances.
pub fn builtin_checks(cfg: &SuiteConfig) -> Vec<CheckResult> {
    vec![
        check_vp(cfg),
        check_steinberg(cfg),
        check_key(cfg),
        check_neutral_ideal(cfg),
        check_quo(cfg),
        check_tech(cfg),
        check_main(cfg),
        check_orth(cfg),
        check_riesz_suite(cfg),
        check_row_criterion(cfg),
        check_pospos(cfg),
        check_surjective_corollary(cfg),
        check_normal_corollary(cfg),
        check_interval_preserving_theorem(cfg),
        check_adjoint_examples(),
    ]
}

// ---------------------------------------------------------------------------
// file-driven checks
// ---------------------------------------------------------------------------

/// Runs the product-level theorem checks against every product in an
/// instance file. Axiom failures are reported with witnesses and suppress
/// the downstream checks for that product; operator-dependent suites run
/// only in builtin mode.
pub fn file_checks(file: &InstanceFile, cfg: &SuiteConfig) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    for (name, def) in &file.products {
        let mut p = def.to_product()?;
        let report = match p.verify() {
            Ok(r) => r,
            Err(e) => {
                out.push(CheckResult::unsupported(
                    format!("{name}.axioms"),
                    e.to_string(),
                ));
                continue;
            }
        };
        let witness_for = |axiom: crate::product::Axiom| {
            report
                .witnesses
                .iter()
                .find(|w| w.axiom == axiom)
                .map(|w| w.to_string())
                .unwrap_or_default()
        };
        out.push(if report.positivity_ok {
            CheckResult::pass(format!("{name}.positivity"), "")
        } else {
            CheckResult::fail(
                format!("{name}.positivity"),
                witness_for(crate::product::Axiom::Positivity),
            )
        });
        out.push(if report.orthosymmetry_ok {
            CheckResult::pass(format!("{name}.orthosymmetry"), "")
        } else {
            CheckResult::fail(
                format!("{name}.orthosymmetry"),
                witness_for(crate::product::Axiom::Orthosymmetry),
            )
        });
        // tensor symmetry: an asymmetric tensor contradicts the symmetry
        // theorem for orthosymmetric products
        out.push(if report.symmetry_ok {
            CheckResult::pass(format!("{name}.steinberg"), "")
        } else {
            let inconsistency = if report.symmetry_inconsistency() {
                " (inconsistent: axioms hold yet the tensor is asymmetric)"
            } else {
                ""
            };
            CheckResult::fail(
                format!("{name}.steinberg"),
                format!(
                    "{}{}",
                    witness_for(crate::product::Axiom::Symmetry),
                    inconsistency
                ),
            )
        });
        if !report.all_ok() {
            continue;
        }

        let coordinatewise = p.domain().order() == OrderKind::Coordinatewise;
        let run = |check: &str,
                   prop: &mut dyn FnMut(
            &OrthoProduct,
            &mut InstanceGen,
        ) -> Result<Option<String>>| {
            for k in 0..cfg.cases {
                let mut gen = case_gen(cfg.seed, k);
                match prop(&p, &mut gen) {
                    Ok(None) => {}
                    Ok(Some(witness)) => {
                        return CheckResult::fail(
                            format!("{name}.{check}"),
                            format!("case {k}: {witness}"),
                        )
                    }
                    Err(e) => {
                        return CheckResult::fail(
                            format!("{name}.{check}"),
                            format!("case {k}: error: {e}"),
                        )
                    }
                }
            }
            CheckResult::pass(format!("{name}.{check}"), format!("cases={}", cfg.cases))
        };
        out.push(run("vp", &mut prop_vp));
        out.push(run("key", &mut prop_key));
        out.push(run("neutral-ideal", &mut |p, gen| {
            prop_neutral_ideal(p, gen).map(|(w, _)| w)
        }));
        out.push(run("quo", &mut prop_quo));
        if coordinatewise {
            out.push(run("tech", &mut prop_tech));
            out.push(run("main", &mut prop_main));
            out.push(run("orth", &mut prop_orth));
        }
    }
    Ok(out)
}
