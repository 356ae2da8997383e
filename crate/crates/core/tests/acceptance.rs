//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. All comparisons are exact.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_pcg::Pcg64;
use rsg::actions::{minclosed_span, span, Tree};
use rsg::algebra::finite_congruence_closure;
use rsg::chains::saturate_epsilon;
use rsg::cover::build_proper_cover;
use rsg::partial::{check_matches_r, check_mg_identity, check_partial_action, check_perfect, check_prefix_criterion};
use rsg::semidirect::adjoin_identity_new;
use rsg::verify::{self, sample_monoid_actions, sample_partial_actions, SuiteReport, VerifyConfig};
use rsg::words::{AbelianElement, Alphabet, Word};

mod common;
use common::*;

struct Outcome {
    ok: bool,
    detail: String,
}

impl Outcome {
    fn suite(r: SuiteReport) -> Self {
        let mut detail = format!("{} checks, {} failures", r.checked, r.failures);
        for e in &r.examples {
            detail.push_str("\n    ");
            detail.push_str(e);
        }
        Outcome { ok: r.passed(), detail }
    }
}

fn cfg(samples: usize) -> VerifyConfig {
    VerifyConfig {
        seed: 0,
        samples,
        omega: 2,
        bound: 4,
    }
}

fn identities() -> Outcome {
    let mut out = Outcome::suite(verify::identities(&cfg(10_000)).unwrap());
    out.detail = format!("{} (one per algebra; 10000 triples or exhaustive)", out.detail);
    out
}

fn niceness() -> Outcome {
    Outcome::suite(verify::niceness(&cfg(10_000)).unwrap())
}

fn onedir() -> Outcome {
    Outcome::suite(verify::onedir(&cfg(100)).unwrap())
}

fn yuck() -> Outcome {
    Outcome::suite(verify::yuck(&cfg(100)).unwrap())
}

fn chains() -> Outcome {
    let two = verify::two(&cfg(100)).unwrap();
    let main1 = verify::main1(&cfg(1000)).unwrap();
    Outcome {
        ok: main1.passed() && two.passed(),
        detail: format!(
            "{} chains, {} failures; term rewriting {} checks, {} failures",
            main1.checked, main1.failures, two.checked, two.failures
        ),
    }
}

fn vertex_set(t: &Tree) -> BTreeSet<Word> {
    t.vertices().iter().cloned().collect()
}

fn oracles() -> Outcome {
    let mut checked = 0usize;
    let mut bad: Vec<String> = Vec::new();
    let mut check = |ok: bool, what: &dyn Fn() -> String| {
        checked += 1;
        if !ok && bad.len() < 5 {
            bad.push(what());
        }
    };

    // spans and meets of generator sets
    let long = Alphabet::first(2).reduced_words(4);
    let mut sets: Vec<Vec<Word>> = Vec::new();
    for u in &long {
        for v in &long {
            sets.push(vec![u.clone(), v.clone()]);
        }
    }
    for (len, k) in [(1, 5), (2, 3)] {
        subsets_up_to(&Alphabet::first(2).reduced_words(len), k, 0, &mut Vec::new(), &mut sets);
    }
    let mut rng = Pcg64::seed_from_u64(5);
    for _ in 0..3000 {
        let k = rng.gen_range(3..=5);
        sets.push(long.choose_multiple(&mut rng, k).cloned().collect());
    }
    for gens in &sets {
        let t = span(gens.clone()).unwrap();
        check(vertex_set(&t) == span_oracle(gens), &|| format!("span {gens:?}"));
        if gens.len() >= 2 {
            let (a, b) = gens.split_at(gens.len() / 2);
            let m = span(a.to_vec()).unwrap().meet(&span(b.to_vec()).unwrap());
            check(m == t, &|| format!("meet {gens:?}"));
        }
    }

    for (r, k) in [(1, 5), (2, 3)] {
        let mut subsets = Vec::new();
        subsets_up_to(&abelian_box(r), k, 0, &mut Vec::new(), &mut subsets);
        for s in subsets {
            let got: BTreeSet<AbelianElement> = minclosed_span(s.clone()).unwrap().elements().iter().cloned().collect();
            check(got == minclosed_oracle(&s), &|| format!("min-closed span {s:?}"));
        }
    }

    // every set of at most three generating pairs
    for (name, alg) in small_algebras() {
        let n = alg.len();
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| ((a + 1)..n).map(move |b| (a, b))).collect();
        let mut gens = vec![vec![]];
        subsets_up_to(&pairs, 3, 0, &mut Vec::new(), &mut gens);
        for g in gens {
            let got = finite_congruence_closure(&alg, &g);
            let want = congruence_oracle(&alg, &g);
            let same = (0..n).all(|a| (0..n).all(|b| got.related(a, b) == want[a][b]));
            check(same, &|| format!("congruence on {name} from {g:?}"));
        }
    }

    for (al, gens, bound) in epsilon_cases() {
        let eps = saturate_epsilon(&al, &gens, bound).unwrap();
        let (universe, r) = epsilon_oracle(&al, &gens, bound);
        let same = universe
            .iter()
            .enumerate()
            .all(|(i, a)| universe.iter().enumerate().all(|(j, b)| eps.related(a, b) == Some(r[i][j])));
        check(same, &|| format!("epsilon {gens:?} at {bound}"));
    }

    Outcome {
        ok: bad.is_empty(),
        detail: format!("{checked} comparisons{}", bad.iter().map(|b| format!("\n    {b}")).collect::<String>()),
    }
}

fn covers() -> Outcome {
    let mut ok = true;
    let mut detail = Vec::new();
    for (name, s) in [
        ("trivial", rsg::algebra::FinAlgebra::trivial()),
        ("chain2", rsg::algebra::FinAlgebra::chain(2)),
        ("chain3", rsg::algebra::FinAlgebra::chain(3)),
    ] {
        let start = Instant::now();
        let r = build_proper_cover(&s, 4).unwrap();
        let took = start.elapsed();
        let pass = r.all_pass() && took < Duration::from_secs(120);
        ok &= pass;
        detail.push(format!("{name} {} ({:.1}s)", if pass { "ok" } else { "FAILED" }, took.as_secs_f64()));
        if !r.all_pass() {
            detail.push(r.summary());
        }
    }
    Outcome { ok, detail: detail.join(", ") }
}

fn partial_actions() -> Outcome {
    let mut ok = true;
    let mut detail = Vec::new();
    for (name, pa) in sample_partial_actions() {
        let mg = check_mg_identity(&pa, 4).unwrap();
        let prefix = check_prefix_criterion(&pa, 3);
        let matches = check_matches_r(&pa, 3).unwrap();
        let perfect = check_perfect(&pa, 4).unwrap();
        let all = check_partial_action(&pa, 3).unwrap();
        let pass = mg.is_empty() && prefix.all_pass() && matches && perfect && all.all_pass();
        ok &= pass;
        detail.push(format!("{name} {}", if pass { "ok" } else { "FAILED" }));
        if !pass {
            detail.push(format!("{all:?}"));
        }
    }
    let ext = verify::partial(&cfg(0)).unwrap();
    ok &= ext.passed();
    detail.push(format!("congruence extension {} checks, {} failures", ext.checked, ext.failures));
    Outcome { ok, detail: detail.join(", ") }
}

fn factorisability() -> Outcome {
    let mut checked = 0;
    let mut bad = Vec::new();
    for (name, inst) in sample_monoid_actions() {
        let n = inst.semidirect_table().len();
        let mut gens = vec![vec![]];
        gens.extend((0..n).flat_map(|a| ((a + 1)..n).map(move |b| vec![(a, b)])));
        for g in gens {
            let c = adjoin_identity_new(&inst, &g).unwrap();
            let r = c.report();
            checked += 1;
            if !(r.factorisable && c.f.algebra.is_factorisable() && r.image_is_complement_of_units && r.all_pass()) {
                bad.push(format!("{name} with {g:?}: {r:?}"));
            }
        }
    }
    Outcome {
        ok: bad.is_empty(),
        detail: format!("{checked} completions{}", bad.iter().map(|b| format!("\n    {b}")).collect::<String>()),
    }
}

fn main() -> ExitCode {
    type Criterion = (&'static str, fn() -> Outcome, Option<u64>);
    let criteria: [Criterion; 9] = [
        ("restriction identities", identities, Some(30)),
        ("nice factorizations", niceness, Some(60)),
        ("tower closed form", onedir, None),
        ("constructed towers", yuck, None),
        ("chains pulled into R", chains, Some(120)),
        ("brute-force oracles", oracles, None),
        ("proper covers at N = 4", covers, None),
        ("partial actions", partial_actions, None),
        ("factorisable completions", factorisability, None),
    ];
    let mut all = true;
    for (i, (name, run, limit)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let mut out = run();
        let took = start.elapsed();
        if let Some(secs) = limit {
            if took >= Duration::from_secs(secs) {
                out.ok = false;
                out.detail.push_str(&format!("; over the {secs}s limit"));
            }
        }
        all &= out.ok;
        println!(
            "{} criterion {}: {name}: {} [{:.2}s]",
            if out.ok { "PASS" } else { "FAIL" },
            i + 1,
            out.detail,
            took.as_secs_f64()
        );
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
