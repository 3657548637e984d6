//! Acceptance suite: every release-gating criterion as one test, printing
//! one pass/fail line each (run with `--nocapture` to see them). The
//! extended n = 3 profile is behind `--ignored`.

use mmcalc::groebner::Config;
use mmcalc::ideal::{intersect_all, Ideal};
use mmcalc::mayr_meyer::*;
use mmcalc::ring::{Field, Polynomial};
use mmcalc::verify::{
    check_substitution, component_radicals_impl, run_full_suite, run_suite, sandbox, CheckCtx,
    CheckStatus,
};
use std::time::{Duration, Instant};

fn criterion<F>(idx: u32, name: &str, limit: Duration, body: F)
where
    F: FnOnce() -> Result<String, String>,
{
    let start = Instant::now();
    let outcome = body();
    let elapsed = start.elapsed();
    match &outcome {
        Ok(detail) => {
            let within = elapsed <= limit;
            println!(
                "acceptance {idx:02} {name}: {} ({:.1?} of {:.0?} allowed) {detail}",
                if within { "PASS" } else { "FAIL (overtime)" },
                elapsed,
                limit
            );
            assert!(
                within,
                "criterion {idx} `{name}` exceeded its time budget: {elapsed:?} > {limit:?}"
            );
        }
        Err(witness) => {
            println!("acceptance {idx:02} {name}: FAIL ({elapsed:.1?}) {witness}");
            panic!("criterion {idx} `{name}` failed: {witness}");
        }
    }
}

fn params(n: u32, d: u32) -> MMParams {
    MMParams::new(n, d, Field::Rationals).unwrap()
}

fn cfg() -> Config {
    Config::default()
}

#[test]
fn criterion_01_generator_counts_and_degrees() {
    criterion(
        1,
        "generator counts and degrees",
        Duration::from_secs(1),
        || {
            for n in 2..=5u32 {
                for d in 2..=4u32 {
                    let p = params(n, d);
                    let j = build_j_labeled(&p);
                    let jl = build_j_long_labeled(&p);
                    // Counts from the level lists: 4 + 8 + 4(n-1) + 4(n-2) + 1
                    // and 4 + 6n + 4(n-2) + 1.
                    if j.len() as u32 != 8 * n + 1 {
                        return Err(format!("J({n},{d}) has {} generators", j.len()));
                    }
                    if jl.len() as u32 != 10 * n - 3 {
                        return Err(format!("J_l({n},{d}) has {} generators", jl.len()));
                    }
                    let jmax = j.iter().filter_map(|(_, g)| g.total_degree()).max().unwrap();
                    if jmax != (d + 2).max(n + 3) {
                        return Err(format!("J({n},{d}) max degree {jmax}"));
                    }
                    let lmax = jl
                        .iter()
                        .filter_map(|(_, g)| g.total_degree())
                        .max()
                        .unwrap();
                    let expect = if n == 2 { d + 2 } else { (d + 2).max(5) };
                    if lmax != expect {
                        return Err(format!("J_l({n},{d}) max degree {lmax}"));
                    }
                }
            }
            // Frozen spot values.
            assert_eq!(build_j_labeled(&params(2, 2)).len(), 17);
            assert_eq!(build_j_long_labeled(&params(2, 2)).len(), 17);
            Ok("n=2..5, d=2..4".into())
        },
    );
}

#[test]
fn criterion_02_substitution() {
    criterion(2, "long-to-short substitution", Duration::from_secs(5), || {
        for n in 2..=4u32 {
            for d in 2..=3u32 {
                let p = params(n, d);
                let ctx = CheckCtx::new(p, cfg()).map_err(|e| e.to_string())?;
                match check_substitution(&ctx).map_err(|e| e.to_string())? {
                    (CheckStatus::Pass, _) => {}
                    (_, w) => return Err(format!("n={n} d={d}: {w}")),
                }
            }
        }
        Ok("n=2..4, d=2..3".into())
    });
}

#[test]
fn criterion_03_witness_membership() {
    criterion(3, "witness membership", Duration::from_secs(180), || {
        for (n, d) in [(2u32, 2u32), (2, 3), (3, 2)] {
            let start = Instant::now();
            let p = params(n, d);
            let j = build_j(&p);
            let w = witness(&p);
            if !j.member(&w, &cfg()).map_err(|e| e.to_string())? {
                return Err(format!("witness not in J({n},{d})"));
            }
            if start.elapsed() > Duration::from_secs(60) {
                return Err(format!("J({n},{d}) membership overtime"));
            }
        }
        Ok("(2,2), (2,3), (3,2); each under 60 s".into())
    });
}

#[test]
fn criterion_04_certificate() {
    criterion(4, "four-term certificate", Duration::from_secs(10), || {
        let p = params(2, 2);
        let w = witness(&p);
        let terms = certificate_terms(&p);
        let mut acc = Polynomial::zero(p.ring());
        for (c, g) in &terms {
            acc = acc.add(&c.mul(g));
        }
        if acc != w {
            return Err("expansion differs from the witness".into());
        }
        let minint = build_min_intersection(&p).map_err(|e| e.to_string())?;
        for (k, (c, g)) in terms.iter().enumerate() {
            if !minint.member(&c.mul(g), &cfg()).map_err(|e| e.to_string())? {
                return Err(format!("term {k} escapes the component intersection"));
            }
        }
        let max = terms
            .iter()
            .map(|(c, g)| c.mul(g).total_degree().unwrap())
            .max()
            .unwrap();
        if max != 7 {
            return Err(format!("max term degree {max}, expected 2d+n+1 = 7"));
        }
        // The general profile on a small grid.
        for (n, d) in [(2u32, 3u32), (3, 2), (4, 3)] {
            let p = params(n, d);
            let max = certificate_terms(&p)
                .iter()
                .map(|(c, g)| c.mul(g).total_degree().unwrap())
                .max()
                .unwrap();
            if max != 2 * d + n + 1 {
                return Err(format!("max term degree {max} at n={n} d={d}"));
            }
        }
        Ok("identity, membership, degree 7 at (2,2)".into())
    });
}

#[test]
fn criterion_05_root_indexed_prime_intersections() {
    criterion(5, "root-indexed prime intersections", Duration::from_secs(300), || {
        let p = params(2, 2);
        let labels = enumerate_labels(&p).map_err(|e| e.to_string())?;
        for r in 1..=2u32 {
            let level: Vec<PrimeLabel> = labels
                .iter()
                .copied()
                .filter(|l| matches!(l, PrimeLabel::Pr { r: rr, .. } if *rr == r))
                .collect();
            if level.len() != 4 {
                return Err(format!("expected 4 level-{r} primes, got {}", level.len()));
            }
            let meet =
                intersect_labeled(&p, &level, false, &cfg()).map_err(|e| e.to_string())?;
            let pr = build_p(r, &p).map_err(|e| e.to_string())?;
            if !meet.equal(&pr, &cfg()).map_err(|e| e.to_string())? {
                return Err(format!("rational case differs at r = {r}"));
            }
        }
        // Cube roots of unity over GF(13).
        let p13 = MMParams::new(2, 3, Field::Prime(13)).unwrap();
        let level: Vec<PrimeLabel> = enumerate_labels(&p13)
            .map_err(|e| e.to_string())?
            .into_iter()
            .filter(|l| matches!(l, PrimeLabel::Pr { r: 1, .. }))
            .collect();
        if level.len() != 9 {
            return Err(format!("expected 9 primes over GF(13), got {}", level.len()));
        }
        let meet = intersect_labeled(&p13, &level, false, &cfg()).map_err(|e| e.to_string())?;
        let p1 = build_p(1, &p13).map_err(|e| e.to_string())?;
        if !meet.equal(&p1, &cfg()).map_err(|e| e.to_string())? {
            return Err("GF(13) case differs at r = 1".into());
        }
        Ok("r=1,2 over the rationals; r=1 over GF(13) with d=3".into())
    });
}

#[test]
fn criterion_06_p_minus4_facts() {
    criterion(6, "p_-4 colon and lambda facts", Duration::from_secs(300), || {
        let p = params(2, 2);
        let p4 = build_p_minus4(&p);
        let c11 = mmcalc::parse_poly("c1_1", p.ring()).unwrap();
        let q1 = p4.quotient(&c11, &cfg()).map_err(|e| e.to_string())?;
        let q2 = p4
            .quotient(&c11.mul(&c11), &cfg())
            .map_err(|e| e.to_string())?;
        if !q1.equal(&q2, &cfg()).map_err(|e| e.to_string())? {
            return Err("colon by c11 and c11^2 differ".into());
        }
        let (colon, added) = p4.split_colon(&c11, &cfg()).map_err(|e| e.to_string())?;
        let back = colon.intersect(&added, &cfg()).map_err(|e| e.to_string())?;
        if !back.equal(&p4, &cfg()).map_err(|e| e.to_string())? {
            return Err("colon split fails to reassemble".into());
        }
        let comps: Vec<Ideal> = (0..16u8)
            .map(|mask| build_component(PrimeLabel::Pm4 { mask }, &p))
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| e.to_string())?;
        let meet = intersect_all(p.ring(), &comps, &cfg()).map_err(|e| e.to_string())?;
        if !meet.equal(&p4, &cfg()).map_err(|e| e.to_string())? {
            return Err("the sixteen lambda components do not intersect to p_-4".into());
        }
        Ok("colon stability, split reassembly, 16-fold intersection".into())
    });
}

#[test]
fn criterion_07_level_intersection_formula() {
    criterion(7, "closed formula for p_1 cap p_2", Duration::from_secs(60), || {
        let p = params(2, 2);
        let p1 = build_p(1, &p).map_err(|e| e.to_string())?;
        let p2 = build_p(2, &p).map_err(|e| e.to_string())?;
        let meet = p1.intersect(&p2, &cfg()).map_err(|e| e.to_string())?;
        let formula = build_pr_intersection_formula(2, &p).map_err(|e| e.to_string())?;
        if !meet.equal(&formula, &cfg()).map_err(|e| e.to_string())? {
            return Err("fold and formula differ at r = 2".into());
        }
        Ok("r = 2 at (2,2); r = 2,3 at n = 3 in the extended profile".into())
    });
}

#[test]
fn criterion_08_minimal_component_intersection() {
    criterion(8, "minimal-component intersection theorem", Duration::from_secs(1800), || {
        let p = params(2, 2);
        let labels = enumerate_labels(&p).map_err(|e| e.to_string())?;
        let meet = intersect_labeled(&p, &labels, true, &cfg()).map_err(|e| e.to_string())?;
        let formula = build_min_intersection(&p).map_err(|e| e.to_string())?;
        if !meet.equal(&formula, &cfg()).map_err(|e| e.to_string())? {
            return Err("28-fold component intersection differs from the formula".into());
        }
        Ok(format!("{} components folded", labels.len()))
    });
}

#[test]
fn criterion_09_heights() {
    criterion(9, "height table", Duration::from_secs(120), || {
        let p = params(2, 2);
        let labels = enumerate_labels(&p).map_err(|e| e.to_string())?;
        if labels.len() != 28 {
            return Err(format!("expected 28 labels, got {}", labels.len()));
        }
        for &label in &labels {
            let prime = build_prime(label, &p).map_err(|e| e.to_string())?;
            let h = prime.height(&cfg()).map_err(|e| e.to_string())?;
            let want = expected_height(label, 2) as usize;
            if h != want {
                return Err(format!("{label}: height {h}, expected {want}"));
            }
        }
        Ok("P0:4, P1ab:11, P2ab:14, Pm1:2, Pm2:6, Pm3:6, Pm4:10; 28 labels".into())
    });
}

#[test]
fn criterion_10_not_radical() {
    criterion(10, "J is not radical", Duration::from_secs(600), || {
        let p = params(2, 2);
        let j = build_j(&p);
        let labels = enumerate_labels(&p).map_err(|e| e.to_string())?;
        let radical = intersect_labeled(&p, &labels, false, &cfg()).map_err(|e| e.to_string())?;
        if !radical.contains(&j, &cfg()).map_err(|e| e.to_string())? {
            return Err("intersection of primes fails to contain J".into());
        }
        if j.equal(&radical, &cfg()).map_err(|e| e.to_string())? {
            return Err("J equals the intersection of its minimal primes".into());
        }
        let witness = radical
            .gens()
            .iter()
            .find(|g| {
                !j.member(g, &cfg()).unwrap_or(true)
            })
            .ok_or("no separating element found")?;
        Ok(format!("separating element: {witness}"))
    });
}

#[test]
fn criterion_11_property_suites() {
    criterion(11, "randomized law suites", Duration::from_secs(300), || {
        let cfg = cfg();
        let mut total = 0;
        for law in sandbox::ALL_LAWS {
            total += sandbox::run_law(law, 200, 0xacce97, &cfg)?;
        }
        Ok(format!("{total} cases across {} laws", sandbox::ALL_LAWS.len()))
    });
}

#[test]
fn criterion_12_mutation_sensitivity() {
    criterion(12, "mutation sensitivity", Duration::from_secs(300), || {
        let p = params(2, 2);
        // Dropping any single generator of the Pm2 component flips the
        // component-radical check with a named witness.
        let full = build_component(PrimeLabel::Pm2, &p).map_err(|e| e.to_string())?;
        for drop in 0..full.gens().len() {
            let mut ctx = CheckCtx::new(p.clone(), cfg()).map_err(|e| e.to_string())?;
            let gens: Vec<Polynomial> = full
                .gens()
                .iter()
                .enumerate()
                .filter(|(k, _)| *k != drop)
                .map(|(_, g)| g.clone())
                .collect();
            let mutated = Ideal::new(p.ring(), gens);
            for (label, comp) in ctx.components.iter_mut() {
                if *label == PrimeLabel::Pm2 {
                    *comp = mutated.clone();
                }
            }
            let (status, witness) = component_radicals_impl(&ctx, &[PrimeLabel::Pm2])
                .map_err(|e| e.to_string())?;
            if status != CheckStatus::Fail {
                return Err(format!(
                    "dropping generator {} of the Pm2 component went unnoticed",
                    full.gens()[drop]
                ));
            }
            if witness.is_null() {
                return Err("mutation failure carries no witness".into());
            }
        }
        // Dropping h1_5 from J flips the substitution check.
        let mut ctx = CheckCtx::new(p.clone(), cfg()).map_err(|e| e.to_string())?;
        ctx.j_labeled.retain(|(l, _)| !(l.r == 1 && l.i == 5));
        ctx.j = Ideal::new(
            p.ring(),
            ctx.j_labeled.iter().map(|(_, g)| g.clone()).collect(),
        );
        let (status, witness) = check_substitution(&ctx).map_err(|e| e.to_string())?;
        if status != CheckStatus::Fail || witness.is_null() {
            return Err("dropping h1_5 went unnoticed".into());
        }
        Ok("6 component drops + 1 generator drop all detected".into())
    });
}

/// The full registry at the default parameters comes back all-pass.
#[test]
fn full_suite_all_pass_at_default_parameters() {
    let ctx = CheckCtx::new(params(2, 2), cfg()).unwrap();
    let report = run_full_suite(&ctx, 1).unwrap();
    assert_eq!(report.results.len(), 16);
    // An empty selection yields an empty report.
    assert!(run_suite(&ctx, &[], 1).unwrap().results.is_empty());
    for r in &report.results {
        assert_eq!(
            r.status,
            CheckStatus::Pass,
            "check {} did not pass: {}",
            r.id,
            r.witness
        );
    }
    assert!(report.all_passed());
}

/// Status and witness payloads are reproducible run to run.
#[test]
fn suite_reports_are_deterministic() {
    let strip = |report: &mmcalc::verify::Report| {
        let mut v = report.to_json();
        for entry in v.as_array_mut().unwrap() {
            entry.as_object_mut().unwrap().remove("elapsed_ms");
        }
        v
    };
    let ctx = CheckCtx::new(params(2, 2), cfg()).unwrap();
    let selection: Vec<String> = ["substitution", "heights", "fact-sandbox", "p4-lambda"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    let a = run_suite(&ctx, &selection, 1).unwrap();
    let ctx2 = CheckCtx::new(params(2, 2), cfg()).unwrap();
    let b = run_suite(&ctx2, &selection, 2).unwrap();
    assert_eq!(strip(&a), strip(&b));
}

// ---- extended profile (minutes of runtime): run with --ignored ----

#[test]
#[ignore = "extended profile: n = 3"]
fn extended_07_level_intersection_formula_n3() {
    criterion(7, "closed formula at n = 3 (extended)", Duration::from_secs(3600), || {
        let p = params(3, 2);
        for r in 2..=3u32 {
            let ps: Vec<Ideal> = (1..=r)
                .map(|i| build_p(i, &p))
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| e.to_string())?;
            let meet = intersect_all(p.ring(), &ps, &cfg()).map_err(|e| e.to_string())?;
            let formula = build_pr_intersection_formula(r, &p).map_err(|e| e.to_string())?;
            if !meet.equal(&formula, &cfg()).map_err(|e| e.to_string())? {
                return Err(format!("fold and formula differ at r = {r}"));
            }
        }
        Ok("r = 2, 3 at (3,2)".into())
    });
}

#[test]
#[ignore = "extended profile: n = 3"]
fn extended_08_minimal_component_intersection_n3() {
    criterion(8, "component intersection at n = 3 (extended)", Duration::from_secs(14400), || {
        let p = params(3, 2);
        let labels = enumerate_labels(&p).map_err(|e| e.to_string())?;
        let meet = intersect_labeled(&p, &labels, true, &cfg()).map_err(|e| e.to_string())?;
        let formula = build_min_intersection(&p).map_err(|e| e.to_string())?;
        if !meet.equal(&formula, &cfg()).map_err(|e| e.to_string())? {
            return Err("32-fold component intersection differs from the formula".into());
        }
        Ok(format!("{} components folded", labels.len()))
    });
}

#[test]
#[ignore = "extended profile: n = 3"]
fn extended_full_suite_n3() {
    let ctx = CheckCtx::new(params(3, 2), cfg()).unwrap();
    let report = run_full_suite(&ctx, 2).unwrap();
    for r in &report.results {
        assert_eq!(
            r.status,
            CheckStatus::Pass,
            "check {} did not pass at n = 3: {}",
            r.id,
            r.witness
        );
    }
}
