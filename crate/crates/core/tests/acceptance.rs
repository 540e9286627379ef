//! Acceptance suite: one PASS/FAIL line per criterion.

use std::process::ExitCode;
use std::time::Instant;

use bicirc_core::laurent::{build_p, chebyshev_t_poly, forest_count_formula, forest_count_formula_at};
use bicirc_core::numeric::{
    class_mahler_poly, convergence_report, forest_count_chebyshev_at, mahler_integral,
    mahler_roots, Ball, MAX_PRECISION,
};
use bicirc_core::{
    forest_count_oracle, theorem4_constants, verify_square_structure, BicirculantSpec, ParityProfile,
    FAMILIES,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 0x5eed_f0e5;
const CORPUS_SIZE: usize = 600;

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome { ok, detail: detail.into() }
}

fn random_subset(rng: &mut ChaCha8Rng, pool: &[u64], max: usize) -> Vec<u64> {
    let k = rng.gen_range(0..=max.min(pool.len()));
    let mut v: Vec<u64> = pool.choose_multiple(rng, k).copied().collect();
    v.sort_unstable();
    v
}

/// Random valid specs with `n <= 10`, at most three elements in each of the
/// half-sets and the spoke set, cycling through all four half-flag combinations.
fn corpus() -> Vec<BicirculantSpec> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    (0..CORPUS_SIZE)
        .map(|i| {
            let (hr, ht) = [(false, false), (true, false), (false, true), (true, true)][i % 4];
            let n = if hr || ht { 2 * rng.gen_range(1..=5) } else { rng.gen_range(1..=10) };
            let half: Vec<u64> = (1..n).filter(|x| 2 * x < n).collect();
            let all: Vec<u64> = (0..n).collect();
            let a = random_subset(&mut rng, &half, 3);
            let b = random_subset(&mut rng, &half, 3);
            let s = random_subset(&mut rng, &all, 3);
            BicirculantSpec::from_parts(n, a, b, s, hr, ht).expect("valid by construction")
        })
        .collect()
}

fn ac1(corpus: &[BicirculantSpec]) -> Outcome {
    let mut bad = Vec::new();
    for spec in corpus {
        let exact = forest_count_formula(spec).expect("formula");
        let oracle = forest_count_oracle(spec);
        if exact != oracle {
            bad.push(format!("{spec}: formula {exact} vs oracle {oracle}"));
        }
    }
    let classes: std::collections::BTreeSet<usize> = corpus.iter().map(|s| s.class().index()).collect();
    let ok = bad.is_empty() && corpus.len() >= 500 && classes.len() == 4;
    let mut detail = format!("{}/{} specs agree, classes covered {:?}", corpus.len() - bad.len(), corpus.len(), classes);
    if let Some(first) = bad.first() {
        detail.push_str(&format!("; first mismatch {first}"));
    }
    outcome(ok, detail)
}

fn ac2() -> Outcome {
    let f1 = &FAMILIES[0];
    let f2 = &FAMILIES[1];
    let s3 = f1.spec(3).unwrap();
    let s4 = f1.spec(4).unwrap();
    let two = BigRational::from_integer(2.into());
    let t4 = chebyshev_t_poly(4).eval_rational(&BigRational::new(7.into(), 4.into()));
    let expected4 = ((&two * t4 - &two).abs() * BigRational::from_integer(16.into())).to_integer();
    let checks = [
        ("f(6) of family 1", forest_count_formula(&s3).unwrap().to_bigint(), BigInt::from(243), forest_count_oracle(&s3)),
        ("f(8) of family 1", forest_count_formula(&s4).unwrap().to_bigint(), expected4, forest_count_oracle(&s4)),
        (
            "f(8) of family 2",
            forest_count_formula(&f2.spec(4).unwrap()).unwrap().to_bigint(),
            BigInt::from(3993),
            forest_count_oracle(&f2.spec(4).unwrap()),
        ),
    ];
    let mut detail = Vec::new();
    let mut ok = true;
    for (name, got, want, oracle) in checks {
        let good = got == want && oracle.to_bigint() == want;
        ok &= good;
        detail.push(format!("{name} = {got}{}", if good { "" } else { " (MISMATCH)" }));
    }
    outcome(ok, detail.join(", "))
}

fn ac3() -> Outcome {
    let mut ok = true;
    let mut got = Vec::new();
    for fam in &FAMILIES {
        let c = theorem4_constants(&fam.spec(fam.min_order + 4).unwrap()).unwrap();
        let pair = (c.class_constant_odd, c.class_constant_even);
        ok &= pair == (fam.odd_constant, fam.even_constant);
        got.push(format!("({},{})", pair.0, pair.1));
    }
    outcome(ok, got.join(" "))
}

fn ac4() -> Outcome {
    let mut checked = 0;
    let mut failures = Vec::new();
    for fam in &FAMILIES {
        for n in fam.orders(30) {
            let spec = fam.spec(n).unwrap();
            let f = forest_count_formula(&spec).unwrap();
            match verify_square_structure(&spec, n, &f) {
                Ok((c, r)) if &r * &r * &c == *f.value() => checked += 1,
                Ok(_) => failures.push(format!("family {} n={n}: root mismatch", fam.id)),
                Err(e) => failures.push(format!("family {} n={n}: {e}", fam.id)),
            }
        }
    }
    let mut detail = format!("{checked} (family, n) pairs with n <= 30 verified");
    if let Some(f) = failures.first() {
        detail.push_str(&format!("; first failure {f}"));
    }
    outcome(failures.is_empty(), detail)
}

fn ac5() -> Outcome {
    let mut ok = true;
    let mut detail = Vec::new();
    for fam in &FAMILIES {
        let spec = fam.spec(fam.min_order).unwrap();
        let poly = class_mahler_poly(&spec);
        let by_roots = mahler_roots(&poly, 128).expect("roots route");
        let by_quad = mahler_integral(&poly, 1e-12).expect("quadrature route");
        let closed = fam.constant.eval(128);
        let agree = by_roots.within(&by_quad, 1e-9);
        let matches = by_roots.within(&closed, 1e-9) && by_quad.within(&closed, 1e-9);
        ok &= agree && matches;
        detail.push(format!(
            "{}{}={}{}",
            fam.constant_name,
            fam.id,
            &by_roots.mid_decimal()[..12.min(by_roots.mid_decimal().len())],
            if agree && matches { "" } else { "(FAIL)" }
        ));
    }
    outcome(ok, detail.join(" "))
}

fn deviation(b: &Ball) -> f64 {
    b.sub(&Ball::one(b.prec())).abs().upper().to_f64()
}

fn ac6() -> Outcome {
    let mut ok = true;
    let mut detail = Vec::new();
    let fam1 = &FAMILIES[0];
    let spec = fam1.spec(3).unwrap();
    let orders: Vec<u64> = (15..=80).collect();
    let report = convergence_report(&spec, &orders, 256).unwrap();
    let worst = report.iter().map(|r| deviation(&r.ratio)).fold(0.0, f64::max);
    let at25 = deviation(&report.iter().find(|r| r.n == 25).unwrap().ratio);
    ok &= worst < 1e-6 && at25 < 1e-9;
    detail.push(format!("family 1: max |ratio-1| over n in 15..80 = {worst:.2e}, at n=25 {at25:.2e}"));
    for fam in &FAMILIES[1..] {
        let spec = fam.spec(fam.min_order).unwrap();
        let orders: Vec<u64> = fam.orders(60).into_iter().filter(|&n| n >= 10).collect();
        let devs: Vec<f64> =
            convergence_report(&spec, &orders, 256).unwrap().iter().map(|r| deviation(&r.ratio)).collect();
        let decreasing = devs.windows(2).all(|w| w[1] < w[0]);
        let last = *devs.last().unwrap();
        ok &= decreasing && last < 1e-6;
        detail.push(format!("family {}: {}monotone, |ratio-1| at n=60 {last:.1e}", fam.id, if decreasing { "" } else { "NOT " }));
    }
    outcome(ok, detail.join("; "))
}

fn ac7() -> Outcome {
    let mut checked = 0;
    let mut max_bits = 0;
    let mut failures = Vec::new();
    for fam in &FAMILIES {
        let spec = fam.spec(fam.min_order).unwrap();
        for n in (1..=100).filter(|n| !fam.class.needs_even_order() || n % 2 == 0) {
            let exact = forest_count_formula_at(&spec, n).unwrap();
            match forest_count_chebyshev_at(&spec, n, MAX_PRECISION) {
                Ok((f, bits)) if f == exact && bits < MAX_PRECISION => {
                    checked += 1;
                    max_bits = max_bits.max(bits);
                }
                Ok((f, bits)) => failures.push(format!("family {} n={n}: {f} vs {exact} at {bits} bits", fam.id)),
                Err(e) => failures.push(format!("family {} n={n}: {e}", fam.id)),
            }
        }
    }
    let mut detail = format!("{checked} (family, n) pairs with n <= 100 bit-exact, max precision {max_bits} bits");
    if let Some(f) = failures.first() {
        detail.push_str(&format!("; first failure {f}"));
    }
    outcome(failures.is_empty(), detail)
}

fn ac8(corpus: &[BicirculantSpec]) -> Outcome {
    let mut worst_margin = f64::INFINITY;
    let mut failures = Vec::new();
    let family_specs: Vec<BicirculantSpec> = FAMILIES.iter().map(|f| f.spec(f.min_order + 2).unwrap()).collect();
    for spec in corpus.iter().chain(&family_specs) {
        let p1 = build_p(spec).p(1).clone();
        let floor = ParityProfile::of(spec).p1_at_one();
        let floor: f64 = num_traits::ToPrimitive::to_f64(&floor).unwrap();
        for k in 0..1000 {
            let theta = 2.0 * std::f64::consts::PI * k as f64 / 1000.0;
            let v = p1.eval_on_circle(theta);
            let margin = v.re - (floor - 1e-9);
            worst_margin = worst_margin.min(margin);
            if margin < 0.0 || v.im.abs() > 1e-9 * (1.0 + v.re.abs()) {
                failures.push(format!("{spec} θ={theta}: {v}"));
                break;
            }
        }
    }
    let mut detail = format!(
        "{} specs x 1000 angles, min (P1 - (2s+1)) = {:.3e}",
        corpus.len() + family_specs.len(),
        worst_margin - 1e-9
    );
    if let Some(f) = failures.first() {
        detail.push_str(&format!("; first failure {f}"));
    }
    outcome(failures.is_empty(), detail)
}

type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn main() -> ExitCode {
    let corpus = corpus();
    let criteria: Vec<Criterion<'_>> = vec![
        ("AC1 oracle equivalence", Box::new(|| ac1(&corpus))),
        ("AC2 golden forest counts", Box::new(ac2)),
        ("AC3 square-free class constants", Box::new(ac3)),
        ("AC4 square structure for n <= 30", Box::new(ac4)),
        ("AC5 Mahler routes and closed forms (1e-9)", Box::new(ac5)),
        ("AC6 asymptotic convergence", Box::new(ac6)),
        ("AC7 Chebyshev route bit-exact for n <= 100", Box::new(ac7)),
        ("AC8 positivity on the unit circle", Box::new(|| ac8(&corpus))),
    ];
    let mut failed = 0;
    for (name, run) in &criteria {
        let start = Instant::now();
        let result = run();
        let tag = if result.ok { "PASS" } else { "FAIL" };
        println!("[{tag}] {name}: {} ({:.1}s)", result.detail, start.elapsed().as_secs_f64());
        if !result.ok {
            failed += 1;
        }
    }
    println!("acceptance: {}/{} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

