//! Acceptance run: one line per criterion, nonzero exit if any fails.

mod common;

use std::time::{Duration, Instant};

use common::{q, Kind, Quotient, Q};
use osvg::braid::nbc_count;
use osvg::gc::Ideal;
use osvg::os::p_of;
use osvg::theorems::{
    verify_chain_complex, verify_dimensions, verify_frobenius_consistency, verify_ideal_relations, verify_os_hilbert,
    verify_partial_identities, verify_presentation_iso, verify_presentation_iso_with, verify_vg_presentation,
    verify_vg_presentation_with, VerificationReport,
};
use osvg::vg::elem_z;
use osvg::{Element, Ring};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome, Option<Duration>);

fn all_pass(reports: Vec<VerificationReport>) -> Outcome {
    let count = reports.len();
    match reports.into_iter().find(|r| !r.pass) {
        Some(r) => Err(r.to_string()),
        None => Ok(format!("{count} reports")),
    }
}

fn run(ns: impl Iterator<Item = usize>, f: fn(usize) -> osvg::Result<VerificationReport>) -> Vec<VerificationReport> {
    ns.map(|n| f(n).expect("valid n")).collect()
}

fn os_hilbert() -> Outcome {
    all_pass(run(2..=6, verify_os_hilbert))
}

fn vg_presentation() -> Outcome {
    all_pass(run(2..=7, verify_vg_presentation))
}

fn presentation_iso() -> Outcome {
    all_pass(run(2..=6, verify_presentation_iso))
}

fn ideal_relations() -> Outcome {
    let reports = run(2..=7, verify_ideal_relations);
    let odd = reports.iter().filter(|r| r.n % 2 == 1 && r.actual.get("odd_relation").is_some()).count();
    if odd != 3 {
        return Err(format!("odd relation checked for {odd} of n = 3, 5, 7"));
    }
    all_pass(reports)
}

fn partial_identities() -> Outcome {
    let mut reports = run(2..=6, verify_partial_identities);
    reports.extend(run(2..=6, verify_chain_complex));
    all_pass(reports)
}

fn dimensions() -> Outcome {
    all_pass(run(2..=7, verify_dimensions))
}

fn frobenius() -> Outcome {
    all_pass(run(2..=6, verify_frobenius_consistency))
}

fn oracle() -> Outcome {
    let mut checked = 0usize;
    for (ring, kind) in [(Ring::OS, Kind::Exterior), (Ring::VG, Kind::Polynomial)] {
        for n in 1..=4 {
            for d in 0..=n + 1 {
                let quotient = Quotient::new(kind, n, d);
                if quotient.dim() as u64 != nbc_count(n, d) {
                    return Err(format!("{ring} n={n} d={d}: quotient dimension {}", quotient.dim()));
                }
                for word_idx in &quotient.monomials {
                    let word: Vec<(usize, usize)> = word_idx.iter().map(|&k| quotient.edges[k]).collect();
                    let normal = Element::straighten(ring, n, &word).map_err(|e| e.to_string())?;
                    let terms: Vec<(Vec<(usize, usize)>, Q)> = normal
                        .terms()
                        .map(|(h, c)| {
                            (h.edges().map(|e| (e.i(), e.j())).collect(), Q::new(c.numer().clone(), c.denom().clone()))
                        })
                        .collect();
                    if !quotient.equal(&quotient.vector(&[(word.clone(), q(1))]), &quotient.vector(&terms)) {
                        return Err(format!("{ring} n={n}: {word:?} straightens to {normal}"));
                    }
                    checked += 1;
                }
            }
        }
    }
    Ok(format!("{checked} monomials"))
}

fn negative_controls() -> Outcome {
    for n in 2..=6 {
        let z = elem_z(n).unwrap();
        let dropped = &z - &Element::generator(Ring::VG, n, 1, n + 1).unwrap();
        let r = verify_vg_presentation_with(n, &dropped).unwrap();
        if r.pass || r.witness.is_none() {
            return Err(format!("corrupted z accepted at n={n}: {r}"));
        }
        let r = verify_presentation_iso_with(n, Ideal::with_p(n, p_of(n) + 1).unwrap()).unwrap();
        if r.pass || r.witness.is_none() {
            return Err(format!("ideal with p+1 accepted at n={n}: {r}"));
        }
    }
    Ok("10 corrupted inputs rejected with witnesses".into())
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("OS invariant Hilbert series, n = 2..6", os_hilbert, Some(Duration::from_secs(60))),
        ("VG presentation Q[z]/<z^(n+1)>, n = 2..7", vg_presentation, Some(Duration::from_secs(30))),
        ("presentation isomorphism Q{α,µ,γ}/I_n, n = 2..6", presentation_iso, Some(Duration::from_secs(120))),
        ("ideal relations g^p = 0 and ag^(p-1) = (p-1)mg^(p-1)", ideal_relations, None),
        ("∂-identities, ∂∘∂ = 0 and acyclicity, n = 2..6", partial_identities, None),
        ("dimensions e_d(1..n) and (n+1)!, n = 2..7", dimensions, None),
        ("Frobenius totals against kernel and character counts", frobenius, None),
        ("normal forms against the quotient oracle, n ≤ 4", oracle, None),
        ("negative controls", negative_controls, None),
    ];
    let mut failed = 0;
    for (k, (title, check, budget)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let over = budget.filter(|b| elapsed > *b);
        let (verdict, detail) = match (&outcome, over) {
            (Ok(d), None) => ("PASS", d.clone()),
            (Ok(d), Some(b)) => ("FAIL", format!("{d}; exceeded {b:?}")),
            (Err(e), _) => ("FAIL", e.clone()),
        };
        if verdict == "FAIL" {
            failed += 1;
        }
        println!("criterion {} {verdict} {title} ({detail}; {elapsed:.2?})", k + 1);
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
