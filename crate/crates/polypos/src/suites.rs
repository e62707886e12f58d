//! Named verification suites. Each suite is a list of checks with a verdict
//! and, on failure, the offending input as a JSON payload.

use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use polypos_core::corpus;
use polypos_core::families::{
    boros_moll, catalan_gamma_poly, eulerian_a, eulerian_b, eulerian_d, eulerian_d_enumerated, eulerian_d_refined,
    eulerian_d_refined_enumerated, narayana_poly, s_eulerian, s_eulerian_enumerated, s_eulerian_refined,
    stirling1_poly, SVector,
};
use polypos_core::graphs::{
    chromatic_is_log_concave, independence_poly, is_clawfree, matrix_tree_check_points, Graph,
};
use polypos_core::measures::{
    ek_identity_at, ek_identity_check, mv_eulerian_recursion_check, mv_weight, negatively_associated,
    pairwise_neg_corr, sep_stationary, seb_stationary_constant, t_operator_symbol, t_operator_symbol_closed_form,
    SEPModel,
};
use polypos_core::perm::{all_permutations, Permutation};
use polypos_core::permactions::{orbit_identity_holds, phi_set};
use polypos_core::positivity::{gamma_expand, k_fold_log_concave, mode_report, L_operator};
use polypos_core::posets::{p_eulerian, sign_grading};
use polypos_core::random;
use polypos_core::rat::{self, Rat};
use polypos_core::realroot::{
    apply_poly_matrix, build_g_lambda, is_interlacing_seq, is_real_rooted, roots_in_closed,
};
use polypos_core::subdivision::{barycentric_sd, eigenpoly, E_operator};
use polypos_core::{Error, ExactPoly};

use crate::formats::{ComplexJson, GraphJson, PolyJson, PosetJson};
use crate::parallel::pool;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    /// Not decided: a budget ran out, or the result is reported without
    /// being asserted.
    Undetermined,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub verdict: Verdict,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub payload: Option<Value>,
}

impl Check {
    fn pass(name: impl Into<String>) -> Self {
        Check { name: name.into(), verdict: Verdict::Pass, detail: None, payload: None }
    }

    fn fail(name: impl Into<String>, payload: Value) -> Self {
        Check { name: name.into(), verdict: Verdict::Fail, detail: None, payload: Some(payload) }
    }

    fn verdict(name: impl Into<String>, ok: bool, payload: impl FnOnce() -> Value) -> Self {
        if ok {
            Self::pass(name)
        } else {
            Self::fail(name, payload())
        }
    }

    fn from_result(name: impl Into<String>, r: Result<bool, Error>, payload: impl FnOnce() -> Value) -> Self {
        let name = name.into();
        match r {
            Ok(ok) => Self::verdict(name, ok, payload),
            Err(e @ Error::Budget { .. }) => {
                Check { name, verdict: Verdict::Undetermined, detail: Some(e.to_string()), payload: None }
            }
            Err(e) => Check { name, verdict: Verdict::Fail, detail: Some(e.to_string()), payload: Some(payload()) },
        }
    }

    fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub seed: u64,
    pub budget: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_n: Option<usize>,
    pub checks: Vec<Check>,
    /// Kept out of the JSON so that reports are byte-identical across runs.
    #[serde(skip)]
    pub elapsed: Duration,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.verdict != Verdict::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.verdict == Verdict::Fail)
    }

    pub fn count(&self, v: Verdict) -> usize {
        self.checks.iter().filter(|c| c.verdict == v).count()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuiteOptions {
    pub seed: u64,
    pub budget: u64,
    /// Overrides the largest size a suite sweeps.
    pub max_n: Option<usize>,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions { seed: 0, budget: polypos_core::DEFAULT_BUDGET, max_n: None }
    }
}

impl SuiteOptions {
    fn n(&self, default: usize) -> usize {
        self.max_n.unwrap_or(default)
    }
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
#[error("unknown suite {0:?}")]
pub struct UnknownSuite(pub String);

type SuiteFn = fn(&SuiteOptions) -> Vec<Check>;

/// Name, one-line description and body of every suite.
pub const SUITES: &[(&str, &str, SuiteFn)] = &[
    ("type-d-table", "refined type D Eulerian table for n = 2, 3, 4", type_d_table),
    ("type-d-real-rooted", "D_n real-rooted for n <= 8, refined family interlacing for 4 <= n <= 7", type_d_real_rooted),
    ("s-eulerian", "s-Eulerian polynomials on 50 seeded s, with the type A and B anchors", s_eulerian_suite),
    ("orbit-identity", "valley-hopping orbit identity over all of S_n, n <= 7", orbit_identity),
    ("gamma-peaks", "gamma vector of S_n from peaks against the expansion of A_n/x, n <= 8", gamma_peaks),
    ("l-operator", "iterated L on nonpositive-rooted polynomials and Pascal rows", l_operator),
    ("boros-moll", "k-fold log-concavity of the Boros-Moll sequences, m <= 12", boros_moll_suite),
    ("subdivision", "the subdivision operator E, its eigenpolynomials and f(sd) = E(f)", subdivision),
    ("clawfree", "independence polynomials of clawfree graphs", clawfree),
    ("chromatic-log-concave", "chromatic coefficients of connected graphs, n <= 6", chromatic_log_concave),
    ("matrix-tree", "spanning trees against Laplacian minors on 100 seeded graphs", matrix_tree),
    ("sep", "stationary law of the exclusion process against the signed-permutation formula", sep_suite),
    ("mv-eulerian", "multivariate Eulerian recursion for 2 <= n <= 7", mv_eulerian),
    ("identities", "elementary symmetric, Narayana and operator-symbol identities", identities),
    ("g-lambda", "G_lambda on 100 seeded interlacing sequences", g_lambda),
    ("sign-graded", "gamma-nonnegativity of W_P/x on 100 seeded sign-graded posets", sign_graded),
    ("darroch", "mode within one of the mean for real-rooted polynomials", darroch),
];

pub fn suite_names() -> impl Iterator<Item = &'static str> {
    SUITES.iter().map(|(n, _, _)| *n)
}

pub fn run_suite(name: &str, seed: u64, budget: u64) -> Result<SuiteReport, UnknownSuite> {
    run_suite_with(name, &SuiteOptions { seed, budget, max_n: None })
}

pub fn run_suite_with(name: &str, opts: &SuiteOptions) -> Result<SuiteReport, UnknownSuite> {
    let (_, _, body) = SUITES.iter().find(|(n, _, _)| *n == name).ok_or_else(|| UnknownSuite(name.to_string()))?;
    let start = Instant::now();
    let checks = pool().install(|| body(opts));
    Ok(SuiteReport {
        suite: name.to_string(),
        seed: opts.seed,
        budget: opts.budget,
        max_n: opts.max_n,
        checks,
        elapsed: start.elapsed(),
    })
}

/// What a replay file holds: enough to rerun the suite and find one failure.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Replay {
    pub suite: String,
    pub seed: u64,
    pub budget: u64,
    #[serde(default)]
    pub max_n: Option<usize>,
    pub check: Check,
}

/// Writes one replay file per failed check into `dir`.
pub fn write_replays(report: &SuiteReport, dir: &Path) -> std::io::Result<Vec<PathBuf>> {
    let mut out = Vec::new();
    for (i, check) in report.failures().enumerate() {
        std::fs::create_dir_all(dir)?;
        let path = dir.join(format!("{}-seed{}-{}.replay.json", report.suite, report.seed, i));
        let r = Replay {
            suite: report.suite.clone(),
            seed: report.seed,
            budget: report.budget,
            max_n: report.max_n,
            check: check.clone(),
        };
        std::fs::write(&path, serde_json::to_string_pretty(&r).expect("serialisable"))?;
        out.push(path);
    }
    Ok(out)
}

/// Reruns the suite named in a replay and reports whether the recorded
/// failure, payload included, occurs again.
pub fn replay(r: &Replay) -> Result<bool, UnknownSuite> {
    let report = run_suite_with(&r.suite, &SuiteOptions { seed: r.seed, budget: r.budget, max_n: r.max_n })?;
    let again = report.failures().any(|c| c.name == r.check.name && c.payload == r.check.payload);
    Ok(again)
}

fn poly_json(p: &ExactPoly) -> Value {
    serde_json::to_value(PolyJson::from(p)).expect("serialisable")
}

fn polys_json(ps: &[ExactPoly]) -> Value {
    Value::Array(ps.iter().map(poly_json).collect())
}

fn rats_json(a: &[Rat]) -> Value {
    Value::Array(a.iter().map(|q| Value::String(q.to_string())).collect())
}

/// One check per group: pass when `f` holds on every item. Runs on the pool
/// and reports the first failing item by index, so the verdict and payload
/// do not depend on scheduling.
fn sweep<T: Sync>(
    name: impl Into<String>,
    items: &[T],
    f: impl Fn(&T) -> Result<bool, Error> + Sync,
    payload: impl Fn(&T) -> Value,
) -> Check {
    let name = name.into();
    let results: Vec<Result<bool, Error>> = items.par_iter().map(&f).collect();
    let mut undetermined = None;
    for (item, r) in items.iter().zip(results) {
        match r {
            Ok(true) => {}
            Err(e @ Error::Budget { .. }) => undetermined = undetermined.or(Some(e.to_string())),
            other => return Check::from_result(name, other, || payload(item)),
        }
    }
    match undetermined {
        Some(d) => Check { name, verdict: Verdict::Undetermined, detail: Some(d), payload: None },
        None => Check::pass(name).with_detail(format!("{} cases", items.len())),
    }
}

fn type_d_table(_: &SuiteOptions) -> Vec<Check> {
    let mut out = Vec::new();
    let mut enumerated = std::collections::BTreeMap::new();
    for entry in corpus::type_d_table() {
        let name = format!("D[{},{}]", entry.n, entry.k);
        let expect = serde_json::to_string(&PolyJson::from(&entry.poly)).expect("json");
        let rec = eulerian_d_refined(entry.n).map(|f| f.get(entry.k));
        let en = enumerated
            .entry(entry.n)
            .or_insert_with(|| eulerian_d_refined_enumerated(entry.n))
            .clone()
            .map(|f| f.get(entry.k));
        let r = rec.and_then(|rec| {
            let en = en?;
            let a = serde_json::to_string(&PolyJson::from(&rec)).expect("json");
            let b = serde_json::to_string(&PolyJson::from(&en)).expect("json");
            Ok(a == expect && b == expect)
        });
        out.push(Check::from_result(name, r, || json!({"n": entry.n, "k": entry.k, "expected": expect})));
    }
    out
}

fn type_d_real_rooted(opts: &SuiteOptions) -> Vec<Check> {
    let top = opts.n(8);
    let mut out = Vec::new();
    for n in 2..=top {
        out.push(Check::from_result(format!("D_{n} real-rooted"), eulerian_d(n).map(|p| is_real_rooted(&p)), || {
            json!({"n": n})
        }));
    }
    for n in 2..=top.min(6) {
        let r = eulerian_d(n).and_then(|a| Ok(a == eulerian_d_enumerated(n)?));
        out.push(Check::from_result(format!("D_{n} recursion = enumeration"), r, || json!({"n": n})));
    }
    for n in 4..=top.min(7) {
        let r = eulerian_d_refined(n).and_then(|f| is_interlacing_seq(f.polys()));
        out.push(Check::from_result(format!("refined D_{n} interlacing"), r, || json!({"n": n})));
    }
    out
}

fn seeded_svectors(seed: u64, max_n: usize) -> Vec<SVector> {
    let mut rng = random::rng(seed);
    (0..50).map(|_| random::svector(&mut rng, max_n, 6)).collect()
}

fn s_eulerian_suite(opts: &SuiteOptions) -> Vec<Check> {
    let top = opts.n(6);
    let svs = seeded_svectors(opts.seed, top);
    let svjson = |s: &SVector| json!({"s": s.as_slice()});
    let mut out = vec![
        sweep("E_s real-rooted", &svs, |s| Ok(is_real_rooted(&s_eulerian(s))), svjson),
        sweep("refined E_s interlacing", &svs, |s| is_interlacing_seq(s_eulerian_refined(s).polys()), svjson),
        sweep(
            "E_s recursion = enumeration",
            &svs,
            |s| Ok(s_eulerian(s) == s_eulerian_enumerated(s, opts.budget)?),
            svjson,
        ),
    ];
    for n in 1..=top {
        let ones = SVector::new((1..=n as u32).collect()).expect("positive");
        let r = eulerian_a(n).and_then(|a| Ok(a.unshift(1)? == s_eulerian(&ones)));
        out.push(Check::from_result(format!("E_(1..{n}) = A_{n}/x"), r, || json!({"n": n})));
        let evens = SVector::new((1..=n as u32).map(|i| 2 * i).collect()).expect("positive");
        let r = eulerian_b(n).map(|b| b == s_eulerian(&evens));
        out.push(Check::from_result(format!("E_(2,4,..,{}) = B_{n}", 2 * n), r, || json!({"n": n})));
    }
    out
}

fn orbit_identity(opts: &SuiteOptions) -> Vec<Check> {
    let mut out = Vec::new();
    let pi = Permutation::parse("573148926").expect("valid");
    let image = phi_set(&pi, &[2, 3, 7, 8]);
    out.push(Check::verdict("phi_{2,3,7,8}(573148926) = 857134926", image.to_string() == "857134926", || {
        json!({"got": image.to_string()})
    }));
    for n in 1..=opts.n(7) {
        let perms = all_permutations(n);
        out.push(sweep(format!("orbit identity on S_{n}"), &perms, |p| Ok(orbit_identity_holds(p)), |p| {
            json!({"pi": p.to_string()})
        }));
    }
    out
}

fn gamma_peaks(opts: &SuiteOptions) -> Vec<Check> {
    (1..=opts.n(8))
        .map(|n| {
            let perms = all_permutations(n);
            let r = (|| {
                let peaks = polypos_core::permactions::gamma_from_peaks(&perms, n)?;
                let expanded = gamma_expand(&eulerian_a(n)?.unshift(1)?)?;
                Ok(peaks.gammas == expanded.gammas && peaks.is_integral() && peaks.is_nonnegative())
            })();
            Check::from_result(format!("gamma(S_{n})"), r, || json!({"n": n}))
        })
        .collect()
}

fn l_iterates_real_rooted(a: &[Rat], iterations: usize) -> bool {
    let mut cur = a.to_vec();
    for _ in 0..iterations {
        cur = L_operator(&cur);
        if !is_real_rooted(&ExactPoly::new(cur.clone())) {
            return false;
        }
    }
    true
}

fn pascal_row(n: usize) -> Vec<Rat> {
    (0..=n).map(|k| rat::from_big(rat::binomial(n as u64, k as u64))).collect()
}

fn l_operator(opts: &SuiteOptions) -> Vec<Check> {
    let top = opts.n(20);
    let rows: Vec<usize> = (0..=top).collect();
    let mut rng = random::rng(opts.seed);
    let polys: Vec<ExactPoly> = (0..100).map(|_| random::nonpositive_rooted_poly(&mut rng, 15)).collect();
    vec![
        sweep("L^5 on (1+x)^n", &rows, |&n| Ok(l_iterates_real_rooted(&pascal_row(n), 5)), |&n| json!({"n": n})),
        sweep("L^5 on seeded nonpositive-rooted", &polys, |p| Ok(l_iterates_real_rooted(p.coeffs(), 5)), poly_json),
        sweep("Pascal rows 5-fold log-concave", &rows, |&n| Ok(k_fold_log_concave(&pascal_row(n), 5)), |&n| {
            json!({"n": n})
        }),
    ]
}

fn boros_moll_suite(opts: &SuiteOptions) -> Vec<Check> {
    let mut out = Vec::new();
    for m in 0..=opts.n(12) {
        let a = boros_moll(m);
        out.push(Check::verdict(format!("d(m={m}) 3-fold"), k_fold_log_concave(&a, 3), || json!({"m": m})));
        let four = k_fold_log_concave(&a, 4);
        let c = Check {
            name: format!("d(m={m}) 4-fold"),
            verdict: if four { Verdict::Pass } else { Verdict::Undetermined },
            detail: Some(format!("reported only: {}", if four { "holds" } else { "fails" })),
            payload: None,
        };
        out.push(c);
    }
    out
}

fn subdivision(opts: &SuiteOptions) -> Vec<Check> {
    let mut rng = random::rng(opts.seed);
    let inputs: Vec<ExactPoly> = (0..100)
        .map(|_| {
            let d = random::index(&mut rng, 0, opts.n(10));
            random::nonneg_h_poly(&mut rng, d)
        })
        .collect();
    let zeros_ok = |f: &ExactPoly| {
        let e = E_operator(f);
        Ok(e.is_squarefree() && roots_in_closed(&e, &-Rat::one(), &Rat::zero()) == e.deg())
    };
    let mut out = vec![sweep("E(f) zeros real, simple, in [-1,0]", &inputs, zeros_ok, poly_json)];
    let ns: Vec<usize> = (0..=12).collect();
    out.push(sweep(
        "eigenpolynomials",
        &ns,
        |&n| {
            let p = eigenpoly(n);
            let fact = rat::from_big(rat::factorial(n as u64));
            let sign = if n % 2 == 0 { Rat::one() } else { -Rat::one() };
            let reflected = p.affine_substitute(&-Rat::one(), &-Rat::one()).scale(&sign);
            Ok(E_operator(&p) == p.scale(&fact) && reflected == p)
        },
        |&n| json!({"n": n}),
    ));
    let complexes = corpus::complex_fixtures(opts.seed, 20);
    out.push(sweep(
        "f(sd) = E(f) on fixture complexes",
        &complexes,
        |c| Ok(barycentric_sd(c, opts.budget)?.f_poly()? == E_operator(&c.f_poly()?)),
        |c| serde_json::to_value(ComplexJson::from(c)).expect("json"),
    ));
    out
}

fn all_graphs(n: usize) -> Vec<Graph> {
    let m = n * n.saturating_sub(1) / 2;
    (0u64..1 << m).map(|mask| Graph::from_edge_mask(n, mask)).collect()
}

fn graph_json(g: &Graph) -> Value {
    serde_json::to_value(GraphJson::from(g)).expect("json")
}

fn clawfree(opts: &SuiteOptions) -> Vec<Check> {
    let claw = independence_poly(&Graph::star(3)).expect("small");
    let mut out = vec![Check::verdict(
        "claw: 1+4x+3x^2+x^3, not real-rooted",
        claw == ExactPoly::from_ints(&[1, 4, 3, 1]) && !is_real_rooted(&claw),
        || poly_json(&claw),
    )];
    for n in 1..=opts.n(6) {
        let graphs: Vec<Graph> = all_graphs(n).into_iter().filter(is_clawfree).collect();
        out.push(
            sweep(format!("clawfree on {n} vertices"), &graphs, |g| Ok(is_real_rooted(&independence_poly(g)?)), graph_json),
        );
    }
    let mut rng = random::rng(opts.seed);
    let sample: Vec<Graph> = (0..500)
        .map(|i| {
            let n = 1 + i % 12;
            let p = [0.3, 0.6, 0.85][i % 3];
            random::graph(&mut rng, n, p)
        })
        .filter(is_clawfree)
        .collect();
    out.push(sweep("clawfree in a 500-graph sample", &sample, |g| Ok(is_real_rooted(&independence_poly(g)?)), graph_json));
    out
}

fn chromatic_log_concave(opts: &SuiteOptions) -> Vec<Check> {
    (1..=opts.n(6))
        .map(|n| {
            let graphs: Vec<Graph> = all_graphs(n).into_iter().filter(Graph::is_connected).collect();
            sweep(format!("connected graphs on {n} vertices"), &graphs, chromatic_is_log_concave, graph_json)
        })
        .collect()
}

fn matrix_tree(opts: &SuiteOptions) -> Vec<Check> {
    let top = opts.n(8).max(2);
    let mut rng = random::rng(opts.seed);
    let cases: Vec<(Graph, Vec<Vec<Rat>>)> = (0..100)
        .map(|_| {
            let n = 2 + random::index(&mut rng, 0, top - 2);
            let g = random::connected_graph(&mut rng, n);
            let pts = (0..5).map(|_| random::nonzero_point(&mut rng, g.num_edges())).collect();
            (g, pts)
        })
        .collect();
    vec![sweep("matrix-tree at 5 points, every deleted index", &cases, |(g, p)| matrix_tree_check_points(g, p), |(g, _)| {
        graph_json(g)
    })]
}

fn sep_suite(opts: &SuiteOptions) -> Vec<Check> {
    let mut rng = random::rng(opts.seed);
    let params: Vec<(Rat, Rat)> =
        (0..3).map(|_| (random::positive_rat(&mut rng, 9, 4), random::positive_rat(&mut rng, 9, 4))).collect();
    let mut out = Vec::new();
    for n in 1..=opts.n(4) {
        for (a, b) in &params {
            let payload = || json!({"n": n, "alpha": a.to_string(), "beta": b.to_string()});
            let label = format!("n={n} alpha={a} beta={b}");
            out.push(Check::from_result(
                format!("{label}: stationary = c * formula"),
                seb_stationary_constant(n, a, b).map(|c| c.is_some()),
                payload,
            ));
            let mu = SEPModel::corteel_williams(n, a.clone(), b.clone(), Rat::zero(), Rat::zero())
                .and_then(|m| sep_stationary(&m));
            let r = mu.and_then(|mu| {
                Ok(pairwise_neg_corr(&mu) && negatively_associated(&mu, 4)? && is_real_rooted(&mu.diagonal()))
            });
            out.push(Check::from_result(format!("{label}: negative dependence, diagonal real-rooted"), r, payload));
        }
    }
    out
}

fn mv_eulerian(opts: &SuiteOptions) -> Vec<Check> {
    let mut out: Vec<Check> = (2..=opts.n(7))
        .map(|n| Check::from_result(format!("recursion n={n}"), mv_eulerian_recursion_check(n), || json!({"n": n})))
        .collect();
    let w = mv_weight(Permutation::parse("573148926").expect("valid").word());
    let mut expect = vec![0u32; 18];
    for x in [5, 3, 1, 2] {
        expect[x - 1] = 1;
    }
    for y in [5, 1, 4, 8, 2, 6] {
        expect[9 + y - 1] = 1;
    }
    out.push(Check::verdict("w(573148926) = x5 x3 x1 x2 y5 y1 y4 y8 y2 y6", w == expect, || json!({"got": w})));
    out
}

fn identities(opts: &SuiteOptions) -> Vec<Check> {
    let mut out = Vec::new();
    for n in 0..=opts.n(6) {
        out.push(Check::verdict(format!("elementary symmetric identity n={n}"), ek_identity_check(n), || json!({"n": n})));
    }
    let mut rng = random::rng(opts.seed);
    let pts: Vec<Vec<Rat>> = (0..10).map(|_| random::positive_point(&mut rng, 6)).collect();
    out.push(sweep("elementary symmetric identity at points, n=6", &pts, |p| ek_identity_at(p), |p| rats_json(p)));
    for n in 1..=12 {
        let (a, b) = (narayana_poly(n), catalan_gamma_poly(n));
        out.push(Check::verdict(format!("Narayana n={n}"), a == b && is_real_rooted(&a), || {
            json!({"narayana": poly_json(&a), "gamma_form": poly_json(&b)})
        }));
    }
    for n in 1..=8 {
        out.push(Check::verdict(
            format!("symbol of T_{n}"),
            t_operator_symbol(n) == t_operator_symbol_closed_form(n),
            || json!({"n": n}),
        ));
    }
    out
}

fn g_lambda(opts: &SuiteOptions) -> Vec<Check> {
    let top = opts.n(5);
    let mut rng = random::rng(opts.seed);
    let cases: Vec<(Vec<ExactPoly>, Vec<usize>)> = (0..100)
        .map(|_| {
            let n = 1 + random::index(&mut rng, 0, top - 1);
            let m = 1 + random::index(&mut rng, 0, top - 1);
            let seq = random::interlacing_sequence(&mut rng, n, 5);
            let l = random::lambda(&mut rng, m, n);
            (seq, l)
        })
        .collect();
    vec![
        sweep("seeded sequences interlace", &cases, |(s, _)| is_interlacing_seq(s), |(s, _)| polys_json(s)),
        sweep(
            "G_lambda image interlaces",
            &cases,
            |(s, l)| is_interlacing_seq(&apply_poly_matrix(&build_g_lambda(l, s.len())?, s)?),
            |(s, l)| json!({"sequence": polys_json(s), "lambda": l}),
        ),
    ]
}

fn sign_graded(opts: &SuiteOptions) -> Vec<Check> {
    let mut rng = random::rng(opts.seed);
    let posets: Vec<_> = (0..100).map(|_| random::sign_graded_poset(&mut rng, opts.n(8))).collect();
    let nonnatural = posets.iter().filter(|p| !p.is_naturally_labeled()).count();
    vec![
        sweep("generated posets are sign-graded", &posets, |p| Ok(sign_grading(p).is_sign_graded()), |p| {
            serde_json::to_value(PosetJson::from(p)).expect("json")
        }),
        sweep(
            "W_P/x symmetric and gamma-nonnegative",
            &posets,
            |p| {
                let w = p_eulerian(p, opts.budget)?.unshift(1)?;
                Ok(w.is_palindromic_span() && gamma_expand(&w)?.is_nonnegative())
            },
            |p| serde_json::to_value(PosetJson::from(p)).expect("json"),
        )
        .with_detail(format!("100 posets, {nonnatural} not naturally labeled")),
    ]
}

/// Real-rooted polynomials with nonnegative coefficients produced by the
/// first three suites at this seed.
fn suite_polynomials(opts: &SuiteOptions) -> Vec<ExactPoly> {
    let mut out: Vec<ExactPoly> = corpus::type_d_table().into_iter().map(|e| e.poly).collect();
    for n in 2..=8 {
        out.extend(eulerian_d(n).ok());
    }
    for n in 4..=7 {
        if let Ok(f) = eulerian_d_refined(n) {
            out.extend(f.polys().iter().cloned());
        }
    }
    for s in seeded_svectors(opts.seed, 6) {
        out.push(s_eulerian(&s));
        out.extend(s_eulerian_refined(&s).polys().iter().cloned());
    }
    for n in 1..=6 {
        out.extend(eulerian_a(n).ok());
        out.extend(eulerian_b(n).ok());
    }
    out.retain(|p| !p.is_zero() && p.has_nonnegative_coeffs() && is_real_rooted(p));
    out
}

fn darroch(opts: &SuiteOptions) -> Vec<Check> {
    let mut out = Vec::new();
    for n in 1..=opts.n(12) {
        let r = stirling1_poly(n).and_then(|p| {
            let p = p.scale(&rat::from_big(rat::factorial(n as u64)).recip());
            let h: Rat = (1..=n as i64).map(|k| rat::ratio(1, k)).sum();
            let m = mode_report(&p)?;
            Ok(m.mean == h && m.bracket == Some(true))
        });
        out.push(Check::from_result(format!("c(n,k)/n!, n={n}, mean H_n"), r, || json!({"n": n})));
    }
    let polys = suite_polynomials(opts);
    out.push(sweep("suite polynomials", &polys, |p| Ok(mode_report(p)?.bracket == Some(true)), poly_json));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_examples() {
        let r = run_suite("type-d-table", 0, polypos_core::DEFAULT_BUDGET).unwrap();
        assert!(r.passed());
        assert_eq!(r.checks.len(), 24);
        let r = run_suite_with("orbit-identity", &SuiteOptions { seed: 1, max_n: Some(6), ..Default::default() }).unwrap();
        assert!(r.passed());
        assert_eq!(run_suite("nonexistent", 0, 0), Err(UnknownSuite("nonexistent".into())));
    }

    #[test]
    fn reports_are_reproducible() {
        let opts = SuiteOptions { seed: 5, max_n: Some(4), ..Default::default() };
        let a = run_suite_with("g-lambda", &opts).unwrap();
        let b = run_suite_with("g-lambda", &opts).unwrap();
        assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
    }

    #[test]
    fn failures_write_replays() {
        let report = SuiteReport {
            suite: "type-d-table".into(),
            seed: 0,
            budget: 10,
            max_n: None,
            checks: vec![Check::pass("a"), Check::fail("b", json!({"n": 2}))],
            elapsed: Duration::ZERO,
        };
        let dir = tempfile::tempdir().unwrap();
        let files = write_replays(&report, dir.path()).unwrap();
        assert_eq!(files.len(), 1);
        let r: Replay = serde_json::from_str(&std::fs::read_to_string(&files[0]).unwrap()).unwrap();
        assert_eq!(r.check.name, "b");
        // the real suite passes, so the recorded failure does not recur
        assert!(!replay(&r).unwrap());
    }
}
