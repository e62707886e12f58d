//! The `polypos` command line.
//!
//! Exit codes: 0 when the property holds or the command only reports, 1 when
//! a checked property fails, 2 for usage and input errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use polypos_core::families::{self, RefinedFamily, SVector};
use polypos_core::graphs::{
    chromatic_is_log_concave, chromatic_poly_with_budget, independence_poly, is_clawfree, spanning_trees,
};
use polypos_core::measures::{negatively_associated, pairwise_neg_corr, sep_stationary};
use polypos_core::perm::Permutation;
use polypos_core::permactions::{
    canonical_representative, letter_classes, orbit, orbit_closed_form, orbit_des_poly, phi_set, LetterClass,
};
use polypos_core::positivity::{gamma_expand, is_log_concave, is_unimodal, k_fold_log_concave, mode_report};
use polypos_core::posets::{for_each_linear_extension, p_eulerian, sign_grading};
use polypos_core::random;
use polypos_core::realroot::{interleaves, is_real_rooted};
use polypos_core::subdivision::{barycentric_sd, h_from_f, sd_iterate_diagnostic, E_operator};
use polypos_core::{ExactPoly, DEFAULT_BUDGET};

use crate::emit::{emit, Format};
use crate::formats::{
    parse_rats, read_json, ComplexJson, FormatError, GammaJson, GraphJson, PolyJson, PosetJson, SepJson,
};
use crate::suites::{self, suite_names, write_replays, Replay, SuiteOptions};

#[derive(Parser, Debug)]
#[command(name = "polypos", version, about = "Exact positivity checks for polynomials from combinatorics")]
pub struct Cli {
    /// Seed for every randomised input.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Cap on the number of objects an enumeration may visit.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub emit: Format,
    /// Print a note on the method to standard error.
    #[arg(long, global = true)]
    pub explain: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Generate a polynomial family member.
    Gen {
        #[arg(value_enum)]
        family: Family,
        /// Size parameter; the maximal degree for `nonpositive`.
        n: Option<usize>,
        /// Entries of s for `s-eulerian`, comma separated.
        #[arg(long, value_delimiter = ',')]
        s: Vec<u32>,
        /// Emit the refined family instead of its sum.
        #[arg(long)]
        refined: bool,
    },
    /// Decide a property of a polynomial given as `c0,c1,...` or a JSON file.
    Check {
        #[arg(value_enum)]
        property: Property,
        poly: String,
        /// Second polynomial for `interlace`: decides `poly ≪ with`.
        #[arg(long)]
        with: Option<String>,
        /// Number of folds for `k-fold`.
        #[arg(long, default_value_t = 2)]
        k: usize,
    },
    /// Valley-hopping data for a permutation written as a word.
    Perm {
        word: String,
        /// Letters to hop, comma separated.
        #[arg(long, value_delimiter = ',')]
        phi: Vec<u32>,
        /// List the whole orbit.
        #[arg(long)]
        orbit: bool,
    },
    /// Sign grading and P-Eulerian polynomial of a poset file.
    Poset { file: PathBuf },
    /// f- and h-polynomials and barycentric subdivision of a complex file.
    Sd {
        file: PathBuf,
        /// Iterations of E to compare with the limiting polynomial.
        #[arg(long, default_value_t = 0)]
        iterate: usize,
    },
    /// Chromatic, independence and spanning-tree data of a graph file.
    Graph { file: PathBuf },
    /// Stationary law of an exclusion process file and its dependence checks.
    Sep { file: PathBuf },
    /// Run a named verification suite.
    Suite {
        name: Option<String>,
        #[arg(long)]
        list: bool,
        /// Largest size the suite sweeps.
        #[arg(long)]
        max_n: Option<usize>,
        /// Where replay files of failed checks go.
        #[arg(long, default_value = "polypos-replays")]
        replay_dir: PathBuf,
        /// Rerun the suite recorded in a replay file.
        #[arg(long)]
        replay: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    EulerianA,
    EulerianB,
    EulerianD,
    SEulerian,
    Narayana,
    CatalanGamma,
    Stirling1,
    Stirling2,
    Surjection,
    BorosMoll,
    Eigenpoly,
    Nonpositive,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Property {
    RealRooted,
    LogConcave,
    Unimodal,
    KFold,
    Gamma,
    Interlace,
    Mode,
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error(transparent)]
    Core(#[from] polypos_core::Error),
}

type CliResult = Result<(Value, bool), CliError>;

pub fn run() -> i32 {
    run_with(std::env::args_os(), &mut std::io::stdout(), &mut std::io::stderr())
}

/// Parses `args` and runs the command, writing the report to `out` and
/// diagnostics to `err`. Returns the exit code.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if code == 0 { write!(out, "{e}") } else { write!(err, "{e}") };
            return code;
        }
    };
    if cli.explain {
        let _ = writeln!(err, "{}", explanation(&cli.command));
    }
    match dispatch(&cli, err) {
        Ok((value, holds)) => {
            let _ = writeln!(out, "{}", emit(&value, cli.emit));
            if holds {
                0
            } else {
                1
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn explanation(c: &Command) -> &'static str {
    match c {
        Command::Gen { .. } => "Families come from their recursions; the type A, B, D and s-Eulerian generators are cross-checked against enumeration in the test suites.",
        Command::Check { .. } => "Real-rootedness and interlacing are decided with Sturm sequences over the rationals; sequence properties are checked coefficient by coefficient.",
        Command::Perm { .. } => "The orbit is the set of images of the canonical representative under hops of its double ascents.",
        Command::Poset { .. } => "Linear extensions are enumerated within the budget; the sign grading compares the signed length of every maximal chain.",
        Command::Sd { .. } => "E is applied through Stirling numbers of the second kind; the subdivision is built from flags of faces.",
        Command::Graph { .. } => "Chromatic polynomials use deletion-contraction with memoisation; spanning trees are enumerated.",
        Command::Sep { .. } => "The stationary law solves the balance equations exactly; negative association is checked on all pairs of up-sets in complementary coordinates.",
        Command::Suite { .. } => "Each suite is deterministic for a seed; failed checks are written as replay files.",
    }
}

fn read_poly(arg: &str) -> Result<ExactPoly, CliError> {
    if arg.ends_with(".json") {
        let j: PolyJson = read_json(std::path::Path::new(arg))?;
        return Ok(j.to_poly()?);
    }
    let parts: Vec<String> = arg.split(',').filter(|s| !s.trim().is_empty()).map(str::to_string).collect();
    Ok(ExactPoly::new(parse_rats(&parts)?))
}

fn poly_value(p: &ExactPoly) -> Value {
    serde_json::to_value(PolyJson::from(p)).expect("json")
}

fn family_value(f: &RefinedFamily) -> Value {
    json!({"labels": f.labels(), "polys": f.polys().iter().map(poly_value).collect::<Vec<_>>()})
}

fn need_n(n: Option<usize>) -> Result<usize, CliError> {
    n.ok_or_else(|| CliError::Usage("this family needs a size argument n".into()))
}

fn class_name(c: LetterClass) -> &'static str {
    match c {
        LetterClass::Valley => "valley",
        LetterClass::Peak => "peak",
        LetterClass::DoubleAscent => "double ascent",
        LetterClass::DoubleDescent => "double descent",
    }
}

fn dispatch(cli: &Cli, err: &mut dyn Write) -> CliResult {
    match &cli.command {
        Command::Gen { family, n, s, refined } => gen(*family, *n, s, *refined, cli.seed),
        Command::Check { property, poly, with, k } => check(*property, poly, with.as_deref(), *k),
        Command::Perm { word, phi, orbit: list } => perm(word, phi, *list),
        Command::Poset { file } => poset(file, cli.budget),
        Command::Sd { file, iterate } => sd(file, *iterate, cli.budget),
        Command::Graph { file } => graph(file, cli.budget),
        Command::Sep { file } => sep(file),
        Command::Suite { name, list, max_n, replay_dir, replay } => {
            suite(cli, name.as_deref(), *list, *max_n, replay_dir, replay.as_ref(), err)
        }
    }
}

fn gen(family: Family, n: Option<usize>, s: &[u32], refined: bool, seed: u64) -> CliResult {
    let refined_family = |f: Result<RefinedFamily, polypos_core::Error>| -> CliResult { Ok((family_value(&f?), true)) };
    let poly = match (family, refined) {
        (Family::EulerianA, true) => return refined_family(families::eulerian_a_refined(need_n(n)?)),
        (Family::EulerianB, true) => return refined_family(families::eulerian_b_refined(need_n(n)?)),
        (Family::EulerianD, true) => return refined_family(families::eulerian_d_refined(need_n(n)?)),
        (Family::SEulerian, true) => {
            return Ok((family_value(&families::s_eulerian_refined(&SVector::new(s.to_vec())?)), true))
        }
        (_, true) => return Err(CliError::Usage("only the Eulerian families have refinements".into())),
        (Family::EulerianA, _) => families::eulerian_a(need_n(n)?)?,
        (Family::EulerianB, _) => families::eulerian_b(need_n(n)?)?,
        (Family::EulerianD, _) => families::eulerian_d(need_n(n)?)?,
        (Family::SEulerian, _) => families::s_eulerian(&SVector::new(s.to_vec())?),
        (Family::Narayana, _) => families::narayana_poly(need_n(n)?),
        (Family::CatalanGamma, _) => families::catalan_gamma_poly(need_n(n)?),
        (Family::Stirling1, _) => families::stirling1_poly(need_n(n)?)?,
        (Family::Stirling2, _) => families::stirling2_poly(need_n(n)?)?,
        (Family::Surjection, _) => families::surjection_poly(need_n(n)?)?,
        (Family::BorosMoll, _) => ExactPoly::new(families::boros_moll(need_n(n)?)),
        (Family::Eigenpoly, _) => polypos_core::subdivision::eigenpoly(need_n(n)?),
        (Family::Nonpositive, _) => random::nonpositive_rooted_poly(&mut random::rng(seed), need_n(n)?),
    };
    Ok((poly_value(&poly), true))
}

fn check(property: Property, arg: &str, with: Option<&str>, k: usize) -> CliResult {
    let p = read_poly(arg)?;
    let a = p.coeffs();
    let (holds, extra) = match property {
        Property::RealRooted => (is_real_rooted(&p), Value::Null),
        Property::LogConcave => (is_log_concave(a, false), Value::Null),
        Property::Unimodal => (is_unimodal(a), Value::Null),
        Property::KFold => (k_fold_log_concave(a, k), json!({"k": k})),
        Property::Gamma => match gamma_expand(&p) {
            Ok(g) => (g.is_nonnegative(), serde_json::to_value(GammaJson::from(&g)).expect("json")),
            Err(polypos_core::Error::NotSymmetric) => (false, json!({"reason": "not symmetric"})),
            Err(e) => return Err(e.into()),
        },
        Property::Interlace => {
            let g = read_poly(with.ok_or_else(|| CliError::Usage("interlace needs --with".into()))?)?;
            match interleaves(&p, &g) {
                Ok(v) => (v, json!({"with": poly_value(&g)})),
                Err(e) => (false, json!({"with": poly_value(&g), "reason": e.to_string()})),
            }
        }
        Property::Mode => {
            let m = mode_report(&p)?;
            let holds = m.bracket.unwrap_or(false);
            (holds, json!({"modes": m.modes, "mean": m.mean.to_string(), "real_rooted": m.bracket.is_some()}))
        }
    };
    let name = property.to_possible_value().expect("named").get_name().to_string();
    Ok((json!({"property": name, "poly": poly_value(&p), "holds": holds, "data": extra}), holds))
}

fn perm(word: &str, hops: &[u32], list: bool) -> CliResult {
    let pi = if word.contains(',') || word.contains(' ') {
        let w: Result<Vec<u32>, _> = word.split([',', ' ']).filter(|s| !s.is_empty()).map(str::parse).collect();
        Permutation::new(w.map_err(|_| CliError::Usage(format!("cannot read {word:?} as a permutation")))?)?
    } else {
        Permutation::parse(word)?
    };
    if let Some(&x) = hops.iter().find(|&&x| x == 0 || x as usize > pi.len()) {
        return Err(CliError::Usage(format!("letter {x} is not in 1..={}", pi.len())));
    }
    let classes: Vec<&str> = letter_classes(&pi).into_iter().map(class_name).collect();
    let found = orbit_des_poly(&pi);
    let closed = orbit_closed_form(&pi);
    let mut v = json!({
        "pi": pi.to_string(),
        "classes": classes,
        "des": pi.des(),
        "peaks": pi.peak(),
        "canonical": canonical_representative(&pi).to_string(),
        "orbit_des_poly": poly_value(&found),
        "closed_form": poly_value(&closed),
        "identity_holds": found == closed,
    });
    if !hops.is_empty() {
        v["phi"] = Value::String(phi_set(&pi, hops).to_string());
    }
    if list {
        v["orbit"] = orbit(&pi).iter().map(|p| Value::String(p.to_string())).collect();
    }
    Ok((v, found == closed))
}

fn poset(file: &std::path::Path, budget: u64) -> CliResult {
    let p = read_json::<PosetJson>(file)?.to_poset()?;
    let sg = sign_grading(&p);
    let w = p_eulerian(&p, budget)?;
    let count = for_each_linear_extension(&p, budget, |_| {})?;
    let gamma = w.unshift(1).ok().and_then(|q| gamma_expand(&q).ok());
    Ok((
        json!({
            "n": p.n(),
            "sign_graded": sg.is_sign_graded(),
            "rank": sg.rank,
            "vacuous": sg.vacuous,
            "naturally_labeled": p.is_naturally_labeled(),
            "graded": p.is_graded(),
            "linear_extensions": count,
            "W": poly_value(&w),
            "gamma": gamma.as_ref().map(|g| serde_json::to_value(GammaJson::from(g)).expect("json")),
        }),
        true,
    ))
}

fn sd(file: &std::path::Path, iterate: usize, budget: u64) -> CliResult {
    let c = read_json::<ComplexJson>(file)?.to_complex()?;
    let f = c.f_poly()?;
    let e = E_operator(&f);
    let sdc = barycentric_sd(&c, budget)?;
    let mut v = json!({
        "d": c.d(),
        "f": poly_value(&f),
        "h": poly_value(&h_from_f(&f, c.d())?),
        "E_f": poly_value(&e),
        "sd_f": poly_value(&sdc.f_poly()?),
        "sd_facets": sdc.facets().len(),
        "reduced_euler": c.reduced_euler_characteristic()?.to_string(),
    });
    if iterate > 0 {
        let diag = sd_iterate_diagnostic(&c, iterate)?;
        v["iterates"] = diag
            .iterates
            .iter()
            .map(|it| {
                json!({
                    "k": it.k,
                    "distance": it.distance.to_string(),
                    "h_real_simple": it.h_real_simple,
                    "h_nonpositive_simple": it.h_nonpositive_simple,
                    "f_in_unit_interval": it.f_in_unit_interval,
                })
            })
            .collect();
        v["limit"] = poly_value(&diag.limit);
        v["stable_from"] = json!(diag.stable_from);
    }
    Ok((v, true))
}

fn graph(file: &std::path::Path, budget: u64) -> CliResult {
    let g = read_json::<GraphJson>(file)?.to_graph()?;
    let chi = chromatic_poly_with_budget(&g, budget)?;
    let ind = independence_poly(&g)?;
    let trees = if g.is_connected() { Some(spanning_trees(&g, budget)?.len()) } else { None };
    Ok((
        json!({
            "n": g.n(),
            "edges": g.num_edges(),
            "connected": g.is_connected(),
            "chromatic": poly_value(&chi),
            "chromatic_log_concave": chromatic_is_log_concave(&g)?,
            "independence": poly_value(&ind),
            "independence_real_rooted": is_real_rooted(&ind),
            "clawfree": is_clawfree(&g),
            "spanning_trees": trees,
        }),
        true,
    ))
}

fn sep(file: &std::path::Path) -> CliResult {
    let m = read_json::<SepJson>(file)?.to_model()?;
    let mu = sep_stationary(&m)?;
    let states: Vec<Value> = mu
        .probs()
        .iter()
        .enumerate()
        .map(|(mask, p)| {
            let eta: String = (0..m.n).map(|i| if mask >> i & 1 == 1 { '1' } else { '0' }).collect();
            json!({"eta": eta, "p": p.to_string()})
        })
        .collect();
    let na = if m.n <= 6 { Some(negatively_associated(&mu, 6)?) } else { None };
    let diag = mu.diagonal();
    Ok((
        json!({
            "n": m.n,
            "stationary": states,
            "pairwise_neg_corr": pairwise_neg_corr(&mu),
            "negatively_associated": na,
            "diagonal": poly_value(&diag),
            "diagonal_real_rooted": is_real_rooted(&diag),
        }),
        true,
    ))
}

fn suite(
    cli: &Cli,
    name: Option<&str>,
    list: bool,
    max_n: Option<usize>,
    replay_dir: &std::path::Path,
    replay: Option<&PathBuf>,
    err: &mut dyn Write,
) -> CliResult {
    if list {
        let v: Vec<Value> = suites::SUITES.iter().map(|(n, d, _)| json!({"name": n, "about": d})).collect();
        return Ok((Value::Array(v), true));
    }
    if let Some(path) = replay {
        let r: Replay = read_json(path)?;
        let again = suites::replay(&r).map_err(|e| CliError::Usage(e.to_string()))?;
        return Ok((json!({"suite": r.suite, "check": r.check.name, "reproduced": again}), !again));
    }
    let name = name.ok_or_else(|| {
        CliError::Usage(format!("name a suite: {}", suite_names().collect::<Vec<_>>().join(", ")))
    })?;
    let opts = SuiteOptions { seed: cli.seed, budget: cli.budget, max_n };
    let report = suites::run_suite_with(name, &opts).map_err(|e| CliError::Usage(e.to_string()))?;
    if !report.passed() {
        match write_replays(&report, replay_dir) {
            Ok(files) => {
                for f in files {
                    let _ = writeln!(err, "replay written to {}", f.display());
                }
            }
            Err(e) => {
                let _ = writeln!(err, "could not write replay files: {e}");
            }
        }
    }
    let _ = writeln!(err, "{} finished in {:.2}s", report.suite, report.elapsed.as_secs_f64());
    let passed = report.passed();
    Ok((serde_json::to_value(&report).expect("json"), passed))
}
