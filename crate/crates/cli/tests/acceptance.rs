//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Every comparison is exact integer (or exact structural) equality; there
//! are no floating-point tolerances anywhere in the crate.
//!
//! Run with `cargo test -p curvecount-cli --test acceptance`.

use std::panic::{self, AssertUnwindSafe};
use std::process::{Command, ExitCode};

use curvecount::chern::cotangent_of_projective_space;
use curvecount::counts::{ConeComponent, Support};
use curvecount::{ChernPolynomial, ChowClass, ChowContext, Generator, Monomial, MonomialIdeal2};
use curvecount_cli::{bundled, bundled_scenario, parse_scenario, render_scenario, run, run_corpus, RunOptions};
use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};
use serde_json::Value;

const RANDOM_CASES: u32 = 1000;
const EXACT: &str = "exact equality";

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: &[Criterion] = &[
        ("lines on the quintic threefold total 2875", quintic_lines),
        ("genus-4 curve family contributes 2", genus_four),
        ("(4,1) families give 91, 2002, 2002", case_41),
        ("(3,2) hyperplane family gives 46376", case_32_hyperplane),
        (
            "(3,2) twisted cubics: 561 from 36 divisors, 595 from 37",
            case_32_cubics,
        ),
        ("closed form C(r-2, n) for 1<=n<=12, n+2<=r<=40", closed_form),
        ("Euler class of the cotangent bundle of P^n", euler_class),
        ("Whitney product is commutative and associative", whitney_laws),
        ("series inverse round-trips", inverse_round_trips),
        ("integration is linear", integration_linear),
        ("truncation is stable under raising the dimension", truncation_stable),
        (
            "monomial ideal decomposition, exhaustive to degree 6",
            monomial_exhaustive,
        ),
        (
            "crossing ideal (y^2) & (x^2) & (x,y)^5 = (x^3 y^2, x^2 y^3)",
            crossing_ideal,
        ),
        (
            "scenario files round-trip through parse and render",
            scenario_round_trip,
        ),
        ("corpus exits 3 exactly on a golden mismatch", corpus_exit_codes),
        ("--json report has the documented shape", json_shape),
    ];

    println!("acceptance: {} criteria, tolerance: {EXACT}", criteria.len());
    let default_hook = panic::take_hook();
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let outcome = panic::catch_unwind(AssertUnwindSafe(check))
            .unwrap_or_else(|p| Err(format!("panicked: {}", panic_message(&p))));
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {detail}", i + 1);
            }
        }
    }
    panic::set_hook(default_hook);
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn panic_message(p: &Box<dyn std::any::Any + Send>) -> String {
    p.downcast_ref::<String>()
        .cloned()
        .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
        .unwrap_or_else(|| "unknown panic".into())
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn expect_eq<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T) -> Result<(), String> {
    ensure(got == want, || format!("{what}: got {got:?}, expected {want:?}"))
}

fn bundled_total(name: &str) -> Result<curvecount_cli::Report, String> {
    let text = bundled_scenario(name).ok_or_else(|| format!("no bundled scenario {name}"))?;
    let scenario = parse_scenario(text).map_err(|e| e.to_string())?;
    run(&scenario, RunOptions { strict: true }).map_err(|e| e.to_string())
}

/// Independent binomial over the naturals, by the multiplicative formula.
fn nat_binomial(m: u64, k: u64) -> BigUint {
    if k > m {
        return BigUint::zero();
    }
    (0..k).fold(BigUint::one(), |acc, i| {
        acc * BigUint::from(m - i) / BigUint::from(i + 1)
    })
}

/// Coefficient of `h^n` in `(1 - h)^e` as a plain power series.
fn one_minus_h_coeff(e: i64, n: usize) -> BigInt {
    let factor: Vec<BigInt> = if e >= 0 {
        let mut f = vec![BigInt::zero(); n + 1];
        f[0] = BigInt::one();
        if n >= 1 {
            f[1] = BigInt::from(-1);
        }
        f
    } else {
        vec![BigInt::one(); n + 1]
    };
    let mut acc = vec![BigInt::zero(); n + 1];
    acc[0] = BigInt::one();
    for _ in 0..e.unsigned_abs() {
        let mut next = vec![BigInt::zero(); n + 1];
        for (i, x) in acc.iter().enumerate() {
            for (j, y) in factor.iter().enumerate().take(n + 1 - i) {
                next[i + j] += x * y;
            }
        }
        acc = next;
    }
    acc.swap_remove(n)
}

fn hyperplane_log_top(n: u32, r: usize) -> BigInt {
    let ctx = ChowContext::projective_space(n);
    let h = ctx.hyperplane().expect("P^n has a hyperplane");
    cotangent_of_projective_space(&ctx)
        .and_then(|c| c.log_cotangent(&vec![h; r]))
        .expect("log cotangent of P^n")
        .top_chern()
        .integrate()
}

fn quintic_lines() -> Outcome {
    let report = bundled_total("quintic_lines")?;
    let each: Vec<i64> = report
        .components
        .iter()
        .map(|c| i64::try_from(&c.each.0).unwrap())
        .collect();
    let copies: Vec<u64> = report.components.iter().map(|c| c.copies).collect();
    expect_eq("per-copy contributions", each, vec![2 * 10, 5])?;
    expect_eq("copies", copies, vec![50, 375])?;
    expect_eq("total", report.total.0.clone(), BigInt::from(2875))?;
    ensure(report.validation.passed, || "dimension check failed".into())?;
    Ok("50*2*10 + 375*5 = 2875".into())
}

fn genus_four() -> Outcome {
    let report = bundled_total("fermat_sym_cube")?;
    expect_eq("total", report.total.0.clone(), BigInt::from(2))?;

    // directly: on a curve, c_1(Omega) = 2g - 2 = 6 and c_1(K^-1) contributes -4
    let ctx = ChowContext::abstract_variety(
        1,
        vec![Generator::new("pt", 1)],
        [(Monomial::new(vec![1]), BigInt::one())],
    )
    .map_err(|e| e.to_string())?;
    let pt = ctx.generator(0);
    let cot = ChernPolynomial::new(1, ctx.one().add(&pt.scale(&BigInt::from(6))).unwrap()).unwrap();
    let support = Support::with_cotangent(ctx.clone(), cot).map_err(|e| e.to_string())?;
    let c = ConeComponent::new("curve", support, 1)
        .and_then(|c| c.with_canonical_twist(pt.scale(&BigInt::from(4))))
        .map_err(|e| e.to_string())?;
    expect_eq("direct", c.contribution().map_err(|e| e.to_string())?, BigInt::from(2))?;
    Ok("6 - 4 = 2".into())
}

fn case_41() -> Outcome {
    let mut got = Vec::new();
    for (name, n, want) in [
        ("quintic_41_lines", 2, 91u64),
        ("quintic_41_conics", 5, 2002),
        ("quintic_41_cubics", 9, 2002),
    ] {
        let report = bundled_total(name)?;
        expect_eq(name, report.total.0.clone(), BigInt::from(want))?;
        expect_eq(
            &format!("{name} oracle"),
            one_minus_h_coeff(i64::from(n) + 1 - 16, n as usize),
            BigInt::from(want),
        )?;
        ensure(report.validation.passed, || format!("{name}: dimension check failed"))?;
        got.push(format!("P^{n}: {}", report.total.0));
    }
    Ok(got.join(", "))
}

fn case_32_hyperplane() -> Outcome {
    let report = bundled_total("quintic_32_hyperplane")?;
    expect_eq("total", report.total.0.clone(), BigInt::from(46376))?;
    expect_eq("oracle", one_minus_h_coeff(5 - 36, 4), BigInt::from(46376))?;
    Ok("P^4 with 36 divisors: 46376".into())
}

fn case_32_cubics() -> Outcome {
    expect_eq("engine, 36", hyperplane_log_top(2, 36), BigInt::from(561))?;
    expect_eq("engine, 37", hyperplane_log_top(2, 37), BigInt::from(595))?;
    expect_eq("series, 36", one_minus_h_coeff(3 - 36, 2), BigInt::from(561))?;
    expect_eq("series, 37", one_minus_h_coeff(3 - 37, 2), BigInt::from(595))?;

    let report = bundled_total("quintic_32_cubics")?;
    expect_eq("scenario total", report.total.0.clone(), BigInt::from(561))?;
    expect_eq("variant total", report.variants[0].total.0.clone(), BigInt::from(595))?;
    ensure(!report.golden && !report.golden_mismatch(), || {
        "should be informational".into()
    })?;
    Ok("36 divisors give 561, 37 give 595; recorded as informational".into())
}

fn closed_form() -> Outcome {
    let mut cases = 0;
    for n in 1..=12u32 {
        for r in (n as usize + 2)..=40 {
            let want = BigInt::from(nat_binomial(r as u64 - 2, u64::from(n)));
            expect_eq(&format!("n={n} r={r}"), hyperplane_log_top(n, r), want)?;
            cases += 1;
        }
    }
    Ok(format!("{cases} cases"))
}

fn euler_class() -> Outcome {
    for n in 0..=12u32 {
        let ctx = ChowContext::projective_space(n);
        let top = cotangent_of_projective_space(&ctx).unwrap().top_chern().integrate();
        let sign = if n % 2 == 0 { 1 } else { -1 };
        expect_eq(&format!("n={n}"), top, BigInt::from(sign * (i64::from(n) + 1)))?;
    }
    Ok("(-1)^n (n+1) for n = 0..12".into())
}

fn runner() -> TestRunner {
    TestRunner::new_with_rng(
        Config {
            cases: RANDOM_CASES,
            failure_persistence: None,
            ..Config::default()
        },
        TestRng::deterministic_rng(RngAlgorithm::ChaCha),
    )
}

fn surface() -> ChowContext {
    let table = [
        (Monomial::new(vec![2, 0]), BigInt::from(1)),
        (Monomial::new(vec![1, 1]), BigInt::from(3)),
        (Monomial::new(vec![0, 2]), BigInt::from(-2)),
    ];
    ChowContext::abstract_variety(2, vec![Generator::new("a", 1), Generator::new("b", 1)], table).unwrap()
}

/// A class on P^4 or on the test surface from raw coefficients.
fn class_on(ctx: &ChowContext, coeffs: &[i64]) -> ChowClass {
    let monos: Vec<Monomial> = if ctx.generators().len() == 1 {
        (0..=ctx.dim()).map(|k| Monomial::new(vec![k])).collect()
    } else {
        [[0, 0], [1, 0], [0, 1], [2, 0], [1, 1], [0, 2]]
            .iter()
            .map(|e| Monomial::new(e.to_vec()))
            .collect()
    };
    ctx.class_from_terms(monos.into_iter().zip(coeffs.iter().map(|&c| BigInt::from(c))))
        .unwrap()
}

fn contexts() -> [ChowContext; 2] {
    [ChowContext::projective_space(4), surface()]
}

fn coeffs() -> impl Strategy<Value = (usize, Vec<i64>)> {
    (0..2usize, prop::collection::vec(-20i64..=20, 6))
}

fn chern_poly(ctx: &ChowContext, rank: u32, c: &[i64]) -> ChernPolynomial {
    let mut raw = c.to_vec();
    raw[0] = 1;
    ChernPolynomial::new(rank, class_on(ctx, &raw)).unwrap()
}

fn whitney_laws() -> Outcome {
    let ctxs = contexts();
    runner()
        .run(
            &(coeffs(), coeffs(), coeffs(), 0..6u32, 0..6u32, 0..6u32),
            |((w, a), (_, b), (_, c), ra, rb, rc)| {
                let ctx = &ctxs[w];
                let (a, b, c) = (
                    chern_poly(ctx, ra, &a),
                    chern_poly(ctx, rb, &b),
                    chern_poly(ctx, rc, &c),
                );
                prop_assert_eq!(a.whitney_product(&b).unwrap(), b.whitney_product(&a).unwrap());
                let left = a.whitney_product(&b).unwrap().whitney_product(&c).unwrap();
                let right = a.whitney_product(&b.whitney_product(&c).unwrap()).unwrap();
                prop_assert_eq!(left, right);
                Ok(())
            },
        )
        .map_err(|e| e.to_string())?;
    Ok(format!("{RANDOM_CASES} random triples"))
}

fn inverse_round_trips() -> Outcome {
    let ctxs = contexts();
    runner()
        .run(&(coeffs(), prop::bool::ANY), |((w, mut c), negate)| {
            let ctx = &ctxs[w];
            c[0] = if negate { -1 } else { 1 };
            let x = class_on(ctx, &c);
            let inv = x.inverse().unwrap();
            prop_assert_eq!(x.mul(&inv).unwrap(), ctx.one());
            prop_assert_eq!(inv.inverse().unwrap(), x.clone());
            // (1 - n)^-1 = sum of n^k for nilpotent n
            c[0] = 0;
            let n = class_on(ctx, &c);
            let geometric = (0..=ctx.dim()).fold(ctx.zero(), |acc, k| acc.add(&n.pow(k)).unwrap());
            prop_assert_eq!(ctx.one().sub(&n).unwrap().inverse().unwrap(), geometric);
            Ok(())
        })
        .map_err(|e| e.to_string())?;
    Ok(format!("{RANDOM_CASES} random units"))
}

fn integration_linear() -> Outcome {
    let ctxs = contexts();
    runner()
        .run(
            &(coeffs(), coeffs(), -50i64..=50, -50i64..=50),
            |((w, a), (_, b), s, t)| {
                let ctx = &ctxs[w];
                let (x, y) = (class_on(ctx, &a), class_on(ctx, &b));
                let (s, t) = (BigInt::from(s), BigInt::from(t));
                let combo = x.scale(&s).add(&y.scale(&t)).unwrap();
                prop_assert_eq!(combo.integrate(), &s * x.integrate() + &t * y.integrate());
                Ok(())
            },
        )
        .map_err(|e| e.to_string())?;
    Ok(format!("{RANDOM_CASES} random combinations"))
}

fn truncation_stable() -> Outcome {
    let coeffs_of =
        |x: &ChowClass, n: u32| -> Vec<BigInt> { (0..=n).map(|k| x.coefficient(&Monomial::new(vec![k]))).collect() };
    let lift = |ctx: &ChowContext, c: &[i64]| {
        ctx.class_from_terms(
            c.iter()
                .enumerate()
                .map(|(k, &v)| (Monomial::new(vec![k as u32]), BigInt::from(v))),
        )
        .unwrap()
    };
    runner()
        .run(
            &(
                1..=6u32,
                1..=4u32,
                prop::collection::vec(-9i64..=9, 11),
                prop::collection::vec(-9i64..=9, 11),
            ),
            |(n, extra, mut a, b)| {
                let small = ChowContext::projective_space(n);
                let big = ChowContext::projective_space(n + extra);
                a[0] = 1;
                let (xs, ys) = (lift(&small, &a), lift(&small, &b));
                let (xb, yb) = (lift(&big, &a), lift(&big, &b));
                prop_assert_eq!(coeffs_of(&xs.mul(&ys).unwrap(), n), coeffs_of(&xb.mul(&yb).unwrap(), n));
                prop_assert_eq!(
                    coeffs_of(&xs.inverse().unwrap(), n),
                    coeffs_of(&xb.inverse().unwrap(), n)
                );
                Ok(())
            },
        )
        .map_err(|e| e.to_string())?;
    Ok(format!("{RANDOM_CASES} random pairs"))
}

/// Every minimal generating set whose generators have degree at most `d`:
/// staircases with strictly increasing `x` and strictly decreasing `y`
/// exponents.
fn antichains(d: u32) -> Vec<Vec<(u32, u32)>> {
    fn extend(d: u32, current: &mut Vec<(u32, u32)>, out: &mut Vec<Vec<(u32, u32)>>) {
        out.push(current.clone());
        let (min_a, max_b) = current.last().map_or((0, d), |&(a, b)| (a + 1, b.saturating_sub(1)));
        if current.last().is_some_and(|&(_, b)| b == 0) {
            return;
        }
        for a in min_a..=d {
            for b in 0..=max_b.min(d - a) {
                current.push((a, b));
                extend(d, current, out);
                current.pop();
            }
        }
    }
    let mut out = Vec::new();
    extend(d, &mut Vec::new(), &mut out);
    out
}

fn monomial_exhaustive() -> Outcome {
    const BOX: u32 = 14;
    let mut checked = 0;
    for gens in antichains(6) {
        let ideal = MonomialIdeal2::new(gens.iter().copied());
        expect_eq("minimal generators", ideal.generators().to_vec(), gens.clone())?;
        if ideal.is_zero() || ideal.is_unit() {
            continue;
        }
        let parts = ideal.irreducible_decomposition().map_err(|e| e.to_string())?;
        ensure(parts.iter().all(MonomialIdeal2::is_irreducible), || {
            format!("{ideal}: reducible part")
        })?;
        // membership oracle: x^a y^b lies in I iff it lies in every part
        for a in 0..BOX {
            for b in 0..BOX {
                let direct = gens.iter().any(|&(ga, gb)| ga <= a && gb <= b);
                let via_parts = parts
                    .iter()
                    .all(|p| p.generators().iter().any(|&(ga, gb)| ga <= a && gb <= b));
                ensure(direct == via_parts, || {
                    format!("{ideal}: membership of x^{a} y^{b} differs")
                })?;
            }
        }
        // irredundant: dropping any part enlarges the intersection
        for skip in 0..parts.len() {
            let rest = parts
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != skip)
                .fold(MonomialIdeal2::unit(), |acc, (_, p)| acc.intersect(p));
            ensure(rest != ideal, || format!("{ideal}: part {skip} is redundant"))?;
        }
        if let curvecount::Colength::Finite(c) = ideal.colength() {
            let standard = (0..BOX)
                .flat_map(|a| (0..BOX).map(move |b| (a, b)))
                .filter(|&(a, b)| !gens.iter().any(|&(ga, gb)| ga <= a && gb <= b))
                .count();
            expect_eq(&format!("{ideal}: colength"), c, standard as u64)?;
        }
        checked += 1;
    }
    Ok(format!("{checked} ideals"))
}

fn crossing_ideal() -> Outcome {
    let y2 = MonomialIdeal2::new([(0, 2)]);
    let x2 = MonomialIdeal2::new([(2, 0)]);
    let m5 = MonomialIdeal2::power_of_maximal(5);
    let meet = y2.intersect(&x2).intersect(&m5);
    let target = MonomialIdeal2::new([(3, 2), (2, 3)]);
    expect_eq("intersection", meet.clone(), target.clone())?;
    expect_eq("colength of (x,y)^5", m5.colength(), curvecount::Colength::Finite(15))?;
    let parts = target.irreducible_decomposition().map_err(|e| e.to_string())?;
    let rendered: Vec<String> = parts.iter().map(ToString::to_string).collect();
    Ok(format!("{meet} = {}", rendered.join(" & ")))
}

fn scenario_round_trip() -> Outcome {
    for (file, text) in bundled() {
        let scenario = parse_scenario(&text).map_err(|e| format!("{file}: {e}"))?;
        let rendered = render_scenario(scenario.file());
        expect_eq(&format!("{file} is canonical"), rendered.as_str(), text.as_str())?;
        let again = parse_scenario(&rendered).map_err(|e| format!("{file}: {e}"))?;
        expect_eq(&format!("{file} reparses"), again.file(), scenario.file())?;
    }
    Ok(format!("{} bundled scenarios", bundled().len()))
}

fn binary() -> Command {
    Command::new(env!("CARGO_BIN_EXE_curvecount"))
}

fn corpus_exit_codes() -> Outcome {
    let status = binary()
        .args(["corpus", "--quiet", "--strict"])
        .status()
        .map_err(|e| e.to_string())?;
    expect_eq("bundled corpus", status.code(), Some(0))?;
    expect_eq(
        "library exit code",
        run_corpus(bundled(), RunOptions::default()).exit_code() as i32,
        0,
    )?;

    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let write = |name: &str, text: &str| std::fs::write(dir.path().join(name), text).map_err(|e| e.to_string());
    for (file, text) in bundled() {
        write(&file, &text)?;
    }
    let corpus = || -> Result<Option<i32>, String> {
        let status = binary()
            .args(["corpus", "--quiet", "--dir"])
            .arg(dir.path())
            .status()
            .map_err(|e| e.to_string())?;
        Ok(status.code())
    };
    expect_eq("copied corpus", corpus()?, Some(0))?;

    // a non-golden mismatch stays informational
    let cubics = bundled_scenario("quintic_32_cubics")
        .unwrap()
        .replace("\"expected\": 595,\n  \"golden\"", "\"expected\": 1,\n  \"golden\"");
    ensure(cubics.contains("\"expected\": 1"), || {
        "could not edit non-golden expected value".into()
    })?;
    write("quintic_32_cubics.json", &cubics)?;
    expect_eq("non-golden mismatch", corpus()?, Some(0))?;

    let lines = bundled_scenario("quintic_lines").unwrap().replace("2875", "2876");
    write("quintic_lines.json", &lines)?;
    expect_eq("golden mismatch", corpus()?, Some(3))?;
    Ok("0 with all goldens matching or only informational mismatches, 3 with a golden mismatch".into())
}

fn require(v: &Value, key: &str, kind: impl Fn(&Value) -> bool, path: &str) -> Result<(), String> {
    match v.get(key) {
        Some(x) if kind(x) => Ok(()),
        Some(x) => Err(format!("{path}.{key} has the wrong type: {x}")),
        None => Err(format!("{path}.{key} is missing")),
    }
}

fn is_int(v: &Value) -> bool {
    v.is_i64() || v.as_str().is_some_and(|s| s.parse::<BigInt>().is_ok())
}

fn opt(kind: fn(&Value) -> bool) -> impl Fn(&Value) -> bool {
    move |v| v.is_null() || kind(v)
}

fn check_report_shape(r: &Value, path: &str) -> Result<(), String> {
    require(r, "name", Value::is_string, path)?;
    require(r, "description", Value::is_string, path)?;
    require(r, "total", is_int, path)?;
    require(r, "expected", |v| v.is_null() || is_int(v), path)?;
    require(r, "pass", |v| v.is_null() || v.is_boolean(), path)?;
    require(r, "golden", Value::is_boolean, path)?;
    require(r, "components", Value::is_array, path)?;
    require(r, "variants", Value::is_array, path)?;
    require(r, "validation", Value::is_object, path)?;
    for (i, c) in r["components"].as_array().unwrap().iter().enumerate() {
        let p = format!("{path}.components[{i}]");
        require(c, "label", Value::is_string, &p)?;
        for key in ["copies", "multiplicity", "support_dim", "node_divisors"] {
            require(c, key, Value::is_u64, &p)?;
        }
        require(c, "each", is_int, &p)?;
        require(c, "contribution", is_int, &p)?;
    }
    let v = &r["validation"];
    let p = format!("{path}.validation");
    require(v, "rank_v", |x| x.is_null() || x.is_u64(), &p)?;
    require(v, "passed", Value::is_boolean, &p)?;
    require(v, "strict", Value::is_boolean, &p)?;
    require(v, "checks", Value::is_array, &p)?;
    for (i, c) in v["checks"].as_array().unwrap().iter().enumerate() {
        let p = format!("{p}.checks[{i}]");
        require(c, "label", Value::is_string, &p)?;
        require(c, "support_dim", Value::is_u64, &p)?;
        require(c, "fiber_dim", |x| x.is_null() || x.is_u64(), &p)?;
        require(
            c,
            "status",
            |x| matches!(x.as_str(), Some("pass" | "fail" | "unchecked")),
            &p,
        )?;
    }
    for (i, var) in r["variants"].as_array().unwrap().iter().enumerate() {
        let p = format!("{path}.variants[{i}]");
        require(var, "label", Value::is_string, &p)?;
        require(var, "total", is_int, &p)?;
        require(var, "expected", opt(is_int), &p)?;
        require(var, "pass", opt(Value::is_boolean), &p)?;
    }
    Ok(())
}

fn json_shape() -> Outcome {
    let mut checked = 0;
    for (file, _) in bundled() {
        let out = binary()
            .args(["eval", "--json", &file])
            .output()
            .map_err(|e| e.to_string())?;
        expect_eq(&format!("{file} exit"), out.status.code(), Some(0))?;
        let value: Value = serde_json::from_slice(&out.stdout).map_err(|e| format!("{file}: {e}"))?;
        check_report_shape(&value, &file)?;
        checked += 1;
    }
    let out = binary()
        .args(["corpus", "--json"])
        .output()
        .map_err(|e| e.to_string())?;
    let value: Value = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
    let entries = value["entries"].as_array().ok_or("corpus.entries is missing")?;
    for (i, e) in entries.iter().enumerate() {
        require(e, "file", Value::is_string, "corpus")?;
        check_report_shape(&e["report"], &format!("corpus.entries[{i}].report"))?;
    }
    Ok(format!("{checked} eval reports and {} corpus entries", entries.len()))
}
