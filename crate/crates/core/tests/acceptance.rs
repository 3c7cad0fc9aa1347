//! Acceptance suite: one PASS/FAIL line per criterion. Exits nonzero if
//! any criterion fails.

use std::process::Command;
use std::time::{Duration, Instant};

use affine_phi::loop_group::word_to_loop;
use affine_phi::networks::lindstrom_minor;
use affine_phi::partitions::Partition;
use affine_phi::phi::phi_polynomial;
use affine_phi::shapemod::{build_module, delta_partition_type};
use affine_phi::tableaux::BitString;
use affine_phi::toeplitz::toeplitz_entry;
use affine_phi::verify::{self, is_realizable, Status};
use rand::{Rng, SeedableRng};

const GOLDEN: &str = "a1*a2^2 + 2*a1*a2*a4 + a1*a4^2 + a3*a4^2";

struct Outcome {
    pass: bool,
    detail: String,
}

fn report(id: &str, title: &str, started: Instant, outcome: Outcome) -> bool {
    let secs = started.elapsed().as_secs_f64();
    let tag = if outcome.pass { "PASS" } else { "FAIL" };
    println!("{id} {tag} {title}: {} ({secs:.2}s)", outcome.detail);
    outcome.pass
}

fn within(started: Instant, limit: Duration) -> bool {
    started.elapsed() < limit
}

fn ac1() -> Outcome {
    let started = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_affine-phi"))
        .args([
            "minor", "--word", "1,0,1,0", "--mu", "", "--lambda", "2,1", "--parity", "1",
        ])
        .output()
        .expect("binary runs");
    let stdout = String::from_utf8_lossy(&out.stdout).to_string();
    let word: BitString = "1,0,1,0".parse().unwrap();
    let lambda: Partition = "2,1".parse().unwrap();
    let phi = phi_polynomial(&lambda, 1, &word).unwrap().to_string();
    let paths = lindstrom_minor(&word, &Partition::empty(), &lambda, 1)
        .unwrap()
        .to_string();
    let cli_ok = stdout == format!("{{\"polynomial\":\"{GOLDEN}\"}}\n");
    let fast = within(started, Duration::from_secs(1));
    Outcome {
        pass: cli_ok && phi == GOLDEN && paths == GOLDEN && fast,
        detail: format!(
            "cli={cli_ok} phi={} lindstrom={} under_1s={fast}",
            phi == GOLDEN,
            paths == GOLDEN
        ),
    }
}

fn sweep_outcome(
    summary: affine_phi::Result<verify::SweepSummary>,
    started: Instant,
    limit: Option<Duration>,
) -> Outcome {
    match summary {
        Ok(s) => {
            let in_time = limit.is_none_or(|l| within(started, l));
            Outcome {
                pass: s.failures() == 0 && s.cases() > 0 && in_time,
                detail: format!(
                    "cases={} failures={} in_time={in_time}",
                    s.cases(),
                    s.failures()
                ),
            }
        }
        Err(e) => Outcome {
            pass: false,
            detail: format!("error: {e}"),
        },
    }
}

fn ac6() -> Outcome {
    let mut rng = rand::rngs::StdRng::seed_from_u64(20261016);
    let mut shift_ok = 0;
    for _ in 0..100 {
        let len = rng.gen_range(0..=6);
        let g = word_to_loop(&BitString::alternating(rng.gen_range(0..2), len)).unwrap();
        let (m, n) = (rng.gen_range(-20..=20), rng.gen_range(-20..=20));
        if toeplitz_entry(&g, m, n) == toeplitz_entry(&g, m + 2, n + 2) {
            shift_ok += 1;
        }
    }
    let mut modules = 0;
    let mut relation_failures = 0;
    let mut delta_failures = 0;
    for outer in Partition::all_up_to(6) {
        for parity in 0..2 {
            for inner in outer.subpartitions() {
                modules += 1;
                if build_module(&outer, &inner, parity).is_err() {
                    relation_failures += 1;
                }
            }
            let m = build_module(&outer, &Partition::empty(), parity).unwrap();
            if delta_partition_type(&m).ok().as_ref() != Some(&outer) {
                delta_failures += 1;
            }
        }
    }
    Outcome {
        pass: shift_ok == 100 && relation_failures == 0 && delta_failures == 0,
        detail: format!(
            "block_shift={shift_ok}/100 relation_failures={relation_failures}/{modules} delta_type_failures={delta_failures}"
        ),
    }
}

fn ac7() -> Outcome {
    let started = Instant::now();
    match verify::sweep_conjecture1(5, &[2, 3], None) {
        Ok(s) => {
            let realizable = s
                .reports
                .iter()
                .filter(|r| {
                    let lambda: Partition = r.case["lambda"].as_str().unwrap().parse().unwrap();
                    let parity = r.case["parity"].as_u64().unwrap() as u8;
                    let d: BitString = r.case["d"].as_str().unwrap().parse().unwrap();
                    is_realizable(&lambda, parity, &d).unwrap()
                })
                .count();
            for r in s.reports.iter().filter(|r| r.status == Status::Mismatch) {
                println!("    mismatch {}", r.to_json());
            }
            let in_time = within(started, Duration::from_secs(600));
            Outcome {
                pass: in_time,
                detail: format!(
                    "cases={} realizable={realizable} match={} mismatch={} (report only)",
                    s.cases(),
                    s.count(Status::Match),
                    s.count(Status::Mismatch)
                ),
            }
        }
        Err(e) => Outcome {
            pass: false,
            detail: format!("error: {e}"),
        },
    }
}

fn main() {
    // `cargo test` passes harness flags; listing mode must not run the suite
    if std::env::args().any(|a| a == "--list") {
        return;
    }
    let mut ok = true;

    let t = Instant::now();
    ok &= report("AC1", "golden minor through CLI, phi and paths", t, ac1());

    let t = Instant::now();
    let s = verify::sweep_theorem2(6, 6, Some(1));
    ok &= report(
        "AC2",
        "theorem 2 sweep |λ|<=6, words<=6, single thread",
        t,
        sweep_outcome(s, t, Some(Duration::from_secs(300))),
    );

    let t = Instant::now();
    let s = verify::sweep_prop1(6, 6, None);
    ok &= report(
        "AC3",
        "factorial identity sweep |λ|<=6, words<=6",
        t,
        sweep_outcome(s, t, None),
    );

    let t = Instant::now();
    let s = verify::sweep_pieri(6, 6, None);
    ok &= report(
        "AC4",
        "Pieri determinant equals minor |λ|<=6, words<=6",
        t,
        sweep_outcome(s, t, None),
    );

    let t = Instant::now();
    let s = verify::sweep_lindstrom(5, 5, None);
    ok &= report(
        "AC5",
        "Lindström sum equals Toeplitz minor for all μ⊆λ, |λ|<=5, words<=5",
        t,
        sweep_outcome(s, t, None),
    );

    let t = Instant::now();
    ok &= report(
        "AC6",
        "block shift, preprojective relations, delta type",
        t,
        ac6(),
    );

    let t = Instant::now();
    ok &= report(
        "AC7",
        "F_q flag counts vs ground-state prediction, |λ|<=5, q in {2,3}",
        t,
        ac7(),
    );

    println!("AC8 OUT-OF-SCOPE cluster structure and generalized-minor identification are not checked at this scale");

    if !ok {
        std::process::exit(1);
    }
}
