//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit status
//! if any criterion fails.

use std::panic::{self, AssertUnwindSafe};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use dtrans::oracle::sample::{self, Shape};
use dtrans::oracle::{brute_solve, padded_bound};
use dtrans::ratsolve::residue_candidates;
use dtrans::transcendence::GalMOverL;
use dtrans::{
    decide, parse_ratfun, print, rational_antiderivative, solve_first_order, universal_denominator,
    verify_verdict, FirstOrderOde, Outcome, RatFun, TFrac, TPoly,
};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde_json::Value;

type Check = fn() -> Result<String, String>;

fn rf(s: &str) -> RatFun {
    parse_ratfun(s).unwrap()
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(limit: Duration, elapsed: Duration) -> Result<(), String> {
    ensure(elapsed < limit, || {
        format!("took {elapsed:?}, limit {limit:?}")
    })
}

fn gamma_regression() -> Result<String, String> {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_dtrans"))
        .args(["decide", "(t-1-x)/x", "--format", "json"])
        .output()
        .map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    ensure(out.status.code() == Some(0), || {
        format!("exit status {:?}", out.status)
    })?;
    let v: Value = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
    ensure(v["cond1"]["solvable"] == false, || {
        "cond1 reported solvable".into()
    })?;
    ensure(v["cond2"]["solvable"] == false, || {
        "cond2 reported solvable".into()
    })?;
    ensure(v["outcome"] == "transcendental", || {
        format!("outcome {}", v["outcome"])
    })?;
    ensure(v["group"]["gal_M_over_L"] == "full_additive", || {
        format!("group {}", v["group"])
    })?;
    ensure(v["witness_check"] == true, || "witness_check false".into())?;
    within(Duration::from_secs(1), elapsed)?;
    Ok(format!("{elapsed:?}"))
}

fn proof_fidelity() -> Result<String, String> {
    let p = rf("(t-1-x)/x");
    let cands = residue_candidates(&p);
    ensure(cands.is_empty(), || format!("candidates {cands:?}"))?;
    let cert = universal_denominator(&FirstOrderOde::new(p, RatFun::one()));
    ensure(cert.universal_den.is_one(), || {
        format!("universal_den {:?}", cert.universal_den)
    })?;
    Ok("no residue candidates, universal_den = 1".into())
}

fn derived_witnesses() -> Result<String, String> {
    for (p, expected) in [("t/x", "x/(t+1)"), ("2/x", "x/3")] {
        let p = rf(p);
        let w = decide(&p)
            .cond2
            .witness
            .ok_or_else(|| format!("no witness for {}", print(&p)))?;
        let lhs = &w.d_dx() + &(&p * &w);
        ensure(lhs.is_one(), || {
            format!("w' + p w = {} for p = {}", print(&lhs), print(&p))
        })?;
        ensure(w == rf(expected), || {
            format!("witness {} for p = {}", print(&w), print(&p))
        })?;
    }
    Ok("x/(t + 1) and x/3 substitute exactly".into())
}

fn hermite_completeness_soundness() -> Result<String, String> {
    let mut rng = StdRng::seed_from_u64(4);
    let shape = Shape::new(3, 2);
    for i in 0..200 {
        let h = sample::ratfun(&mut rng, shape);
        let w = rational_antiderivative(&h.d_dx())
            .ok_or_else(|| format!("instance {i}: no antiderivative of d/dx {}", print(&h)))?;
        ensure((&w - &h).as_tfrac().is_some(), || {
            format!(
                "instance {i}: {} and {} differ by a non-constant",
                print(&w),
                print(&h)
            )
        })?;
    }
    for i in 0..200 {
        let h = sample::ratfun(&mut rng, shape);
        let c = loop {
            let c = sample::tpoly(&mut rng, 2, 9);
            if !c.is_zero() {
                break TFrac::new(c, TPoly::from_ints(&[rng.gen_range(1..=9), 1])).unwrap();
            }
        };
        let g = &h.d_dx() + &RatFun::from_tfrac(c).checked_div(&RatFun::x()).unwrap();
        ensure(rational_antiderivative(&g).is_none(), || {
            format!("instance {i}: accepted {}", print(&g))
        })?;
    }
    Ok("200 + 200 instances".into())
}

fn oracle_equivalence() -> Result<String, String> {
    let start = Instant::now();
    let mut rng = StdRng::seed_from_u64(5);
    let shape = Shape::new(3, 2);
    let mut present = 0;
    for i in 0..100 {
        let p = sample::ratfun(&mut rng, shape);
        let q = if i % 2 == 0 {
            let y = sample::ratfun(&mut rng, shape);
            &y.d_dx() + &(&p * &y)
        } else {
            sample::ratfun(&mut rng, shape)
        };
        let ode = FirstOrderOde::new(p, q);
        let main = solve_first_order(&ode);
        let brute = brute_solve(&ode, &padded_bound(&ode));
        ensure(main.is_some() == brute.is_some(), || {
            format!(
                "instance {i}: main {:?}, oracle {:?}",
                main.as_ref().map(print),
                brute.as_ref().map(print)
            )
        })?;
        for w in main.iter().chain(&brute) {
            ensure(ode.is_solution(w), || {
                format!("instance {i}: witness {} fails", print(w))
            })?;
        }
        present += usize::from(main.is_some());
    }
    let elapsed = start.elapsed();
    within(Duration::from_secs(60), elapsed)?;
    Ok(format!(
        "{present} solvable, {} unsolvable, {elapsed:?}",
        100 - present
    ))
}

fn derivation_laws() -> Result<String, String> {
    let mut rng = StdRng::seed_from_u64(6);
    let shape = Shape::new(4, 4);
    for i in 0..500 {
        let f = sample::ratfun(&mut rng, shape);
        let g = sample::ratfun(&mut rng, shape);
        let fg = &f * &g;
        ensure(fg.d_dx() == &(&f.d_dx() * &g) + &(&f * &g.d_dx()), || {
            format!("instance {i}: Leibniz for d/dx")
        })?;
        ensure(fg.d_dt() == &(&f.d_dt() * &g) + &(&f * &g.d_dt()), || {
            format!("instance {i}: Leibniz for d/dt")
        })?;
        ensure(f.d_dx().d_dt() == f.d_dt().d_dx(), || {
            format!("instance {i}: derivations do not commute")
        })?;
    }
    Ok("500 pairs".into())
}

fn parser_round_trip() -> Result<String, String> {
    let mut rng = StdRng::seed_from_u64(7);
    for i in 0..500 {
        let f = sample::ratfun(&mut rng, Shape::new(4, 4));
        let s = print(&f);
        let back = parse_ratfun(&s).map_err(|e| format!("instance {i}: {s:?}: {e}"))?;
        ensure(back == f, || {
            format!("instance {i}: {s:?} re-parses to {}", print(&back))
        })?;
    }
    Ok("500 values".into())
}

fn verdict_self_consistency() -> Result<String, String> {
    let mut corpus: Vec<RatFun> = [
        "0",
        "1",
        "t",
        "x",
        "(t-1-x)/x",
        "2/x",
        "t/x",
        "1/x^2",
        "t*x",
        "1/(x^2+1)",
        "x^3 - 2",
        "t/(x - t)",
        "3/(x - 1) - 2/(x + t)",
        "(x^2 + t)/(x^3 - t*x)",
    ]
    .iter()
    .map(|s| rf(s))
    .collect();
    let mut rng = StdRng::seed_from_u64(8);
    corpus.extend((0..100).map(|_| sample::ratfun(&mut rng, Shape::new(2, 2))));

    for p in &corpus {
        let v = decide(p);
        ensure(verify_verdict(&v), || {
            format!("verdict for {} does not verify", print(p))
        })?;
    }
    let zero = decide(&RatFun::zero());
    ensure(
        zero.outcome == Outcome::NotTranscendentalOverClosure,
        || "p = 0 judged transcendental".into(),
    )?;
    let constant = decide(&rf("1/(x^2+1)"));
    ensure(
        constant.group.diagonal_constant && constant.group.gal_m_over_l != GalMOverL::FullAdditive,
        || "d/dt-constant p without constant diagonal part".into(),
    )?;
    Ok(format!("{} coefficients", corpus.len()))
}

fn main() -> ExitCode {
    let checks: [(&str, Check); 8] = [
        ("gamma regression via CLI", gamma_regression),
        (
            "residue and denominator certificate for the gamma coefficient",
            proof_fidelity,
        ),
        ("derived witnesses for t/x and 2/x", derived_witnesses),
        (
            "hermite completeness and soundness",
            hermite_completeness_soundness,
        ),
        ("oracle equivalence", oracle_equivalence),
        ("derivation laws", derivation_laws),
        ("parser round trip", parser_round_trip),
        ("verdict self-consistency", verdict_self_consistency),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failures = 0;
    for (i, (name, check)) in checks.iter().enumerate() {
        let result = panic::catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|e| {
            Err(e
                .downcast_ref::<String>()
                .cloned()
                .unwrap_or_else(|| "panicked".into()))
        });
        match result {
            Ok(detail) => println!("PASS {}. {name}: {detail}", i + 1),
            Err(why) => {
                failures += 1;
                println!("FAIL {}. {name}: {why}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria passed",
        checks.len() - failures,
        checks.len()
    );
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
