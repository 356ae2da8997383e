//! Randomized and exhaustive lemma suites shared by the CLI, the examples and
//! the acceptance tests. Every suite is deterministic given its seed.

use std::collections::BTreeMap;
use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_pcg::Pcg64;
use serde::Serialize;

use crate::actions::{
    minclosed_span, trees_in_y, verify_nice_factorization, FreeAbelianAction, FreeGroupAction, OverGroup,
    Tree,
};
use crate::algebra::{check_identities, FinAlgebra, RestrictionAlgebra};
use crate::chains::{random_chain, saturate_epsilon, transform_chain, verify_chain, in_sigma_normalize, ChainShape};
use crate::cover::build_proper_cover;
use crate::error::{Error, Result};
use crate::free_restriction::FreeRestriction;
use crate::partial::{
    chain2_instance, chain3_instance, check_partial_action, diamond_instance, extended_congruence_on_y,
    projection_congruence, same_partition, MAlgebra, PartialAction,
};
use crate::sample::{
    random_abelian, random_mixed_element, random_r_element, random_sd_element, random_tree, random_word, random_y_tree,
};
use crate::semidirect::{adjoin_identity_new, FiniteMonoidAction, SdElement, Semidirect};
use crate::terms::{
    build_term, eval_term, onedir_params, onedir_value, two_transform, yuck_construct, yuck_value, OnedirParams, Term,
    Tower, Unary,
};
use crate::words::{Alphabet, Word};

/// Parameters shared by all suites.
#[derive(Clone, Debug, Serialize)]
pub struct VerifyConfig {
    pub seed: u64,
    pub samples: usize,
    pub omega: usize,
    pub bound: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            seed: 0,
            samples: 100,
            omega: 2,
            bound: 4,
        }
    }
}

impl VerifyConfig {
    fn rng(&self) -> Pcg64 {
        Pcg64::seed_from_u64(self.seed)
    }

    fn alphabet(&self) -> Alphabet {
        Alphabet::first(self.omega)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub name: String,
    pub checked: usize,
    pub failures: usize,
    /// The first few failures.
    pub examples: Vec<String>,
}

impl SuiteReport {
    fn new(name: &str) -> Self {
        SuiteReport {
            name: name.into(),
            checked: 0,
            failures: 0,
            examples: Vec::new(),
        }
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures += 1;
            if self.examples.len() < 5 {
                self.examples.push(what());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0 && self.checked > 0
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{verdict} {} ({} checks, {} failures)", self.name, self.checked, self.failures)?;
        for e in &self.examples {
            write!(f, "\n  {e}")?;
        }
        Ok(())
    }
}

/// The suite names accepted by [`run_suite`].
pub const SUITES: &[&str] = &[
    "identities",
    "niceness",
    "lemma-onedir",
    "lemma-yuck",
    "lemma-two",
    "lemma-main1",
    "lemma-in-sigma",
    "lemma-epsilon",
    "lemma-new",
    "partial",
    "cover",
];

pub fn run_suite(name: &str, cfg: &VerifyConfig) -> Result<SuiteReport> {
    match name {
        "identities" => identities(cfg),
        "niceness" => niceness(cfg),
        "lemma-onedir" | "onedir" => onedir(cfg),
        "lemma-yuck" | "yuck" => yuck(cfg),
        "lemma-two" | "two" => two(cfg),
        "lemma-main1" | "main1" => main1(cfg),
        "lemma-in-sigma" | "in-sigma" => in_sigma(cfg),
        "lemma-epsilon" | "epsilon" => epsilon(cfg),
        "lemma-new" | "factorisable" => lemma_new(cfg),
        "partial" => partial(cfg),
        "cover" => cover(cfg),
        _ => Err(Error::Input(format!("unknown suite `{name}`; expected one of {}", SUITES.join(", ")))),
    }
}

fn random_triples<E, R: Rng>(rng: &mut R, n: usize, mut draw: impl FnMut(&mut R) -> E) -> Vec<(E, E, E)> {
    (0..n).map(|_| (draw(rng), draw(rng), draw(rng))).collect()
}

/// Two small semidirect products `Y ⋊ T` of finite semilattices by groups.
pub fn sample_monoid_actions() -> Vec<(&'static str, FiniteMonoidAction)> {
    let names = |v: &[&str]| v.iter().map(|s| s.to_string()).collect::<Vec<_>>();
    vec![
        (
            "chain2-by-z2",
            FiniteMonoidAction::new(
                names(&["1", "f"]),
                vec![vec![0, 1], vec![1, 1]],
                names(&["1", "g"]),
                vec![vec![0, 1], vec![1, 0]],
                vec![vec![0, 1], vec![0, 1]],
            )
            .expect("valid"),
        ),
        (
            "diamond-by-swap",
            FiniteMonoidAction::new(
                names(&["1", "p", "q", "0"]),
                vec![vec![0, 1, 2, 3], vec![1, 1, 3, 3], vec![2, 3, 2, 3], vec![3, 3, 3, 3]],
                names(&["1", "s"]),
                vec![vec![0, 1], vec![1, 0]],
                vec![vec![0, 1, 2, 3], vec![0, 2, 1, 3]],
            )
            .expect("valid"),
        ),
    ]
}

/// The partial-action instances used by the suites.
pub fn sample_partial_actions() -> Vec<(&'static str, PartialAction)> {
    vec![("chain2", chain2_instance()), ("chain3", chain3_instance()), ("diamond", diamond_instance())]
}

/// All restriction identities on random triples of each infinite algebra and
/// exhaustively on the finite tables.
pub fn identities(cfg: &VerifyConfig) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("identities");
    let mut rng = cfg.rng();
    let al = cfg.alphabet();
    let n = cfg.samples;
    let check = |rep: &mut SuiteReport, name: &str, r: crate::algebra::IdentityReport| {
        rep.record(r.all_pass(), || format!("{name}: {r}"));
    };

    let sd = Semidirect::new(FreeGroupAction::new(al.clone()));
    let t = random_triples(&mut rng, n, |r| random_sd_element(r, &al, 3, 2));
    check(&mut rep, "X⋊Ω*", check_identities(&sd, t));

    let sg = Semidirect::new(OverGroup(FreeGroupAction::new(al.clone())));
    let t = random_triples(&mut rng, n, |r| {
        let root = random_word(r, &al, 3);
        let extra = r.gen_range(0..=2);
        SdElement::new(random_tree(r, &al, &[root], extra), random_word(r, &al, 3))
    });
    check(&mut rep, "X⋊FG(Ω)", check_identities(&sg, t));

    let fr = FreeRestriction::new(al.clone());
    let t = random_triples(&mut rng, n, |r| random_r_element(r, &al, 3, 2));
    check(&mut rep, "FR(Ω)", check_identities(&fr, t));

    let sa = Semidirect::new(FreeAbelianAction);
    let t = random_triples(&mut rng, n, |r| {
        let pts: Vec<_> = (0..r.gen_range(1..=3)).map(|_| random_abelian(r, &al, -2, 2)).collect();
        SdElement::new(minclosed_span(pts).expect("nonempty"), random_abelian(r, &al, 0, 2))
    });
    check(&mut rep, "X⋊ℕ^Ω", check_identities(&sa, t));

    for (name, pa) in sample_partial_actions() {
        let m = MAlgebra::new(&pa);
        let elems = m.elements_up_to(3);
        let t = random_triples(&mut rng, n, |r| elems.choose(r).expect("nonempty").clone());
        check(&mut rep, &format!("M[{name}]"), check_identities(&m, t));
    }

    let mut tables: Vec<(String, FinAlgebra)> = vec![
        ("trivial".into(), FinAlgebra::trivial()),
        ("chain3".into(), FinAlgebra::chain(3)),
    ];
    for (name, inst) in sample_monoid_actions() {
        tables.push((format!("{name} table"), inst.semidirect_table()));
        let c = adjoin_identity_new(&inst, &[])?;
        tables.push((format!("{name} completion"), c.f.algebra));
    }
    for (name, alg) in &tables {
        check(&mut rep, name, alg.check_identities());
    }
    Ok(rep)
}

/// Free group: every reduced word of length at most `10`; free abelian
/// group: `samples` random elements with exponents in `[-5, 5]`.
pub fn niceness(cfg: &VerifyConfig) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("niceness");
    let al = cfg.alphabet();
    let fg = FreeGroupAction::new(al.clone());
    for g in al.reduced_words(10) {
        let ok = verify_nice_factorization(&fg, &g)?;
        rep.record(ok, || format!("free group: {g}"));
    }
    let mut rng = cfg.rng();
    for _ in 0..cfg.samples {
        let g = random_abelian(&mut rng, &al, -5, 5);
        let ok = verify_nice_factorization(&FreeAbelianAction, &g)?;
        rep.record(ok, || format!("free abelian: {g}"));
    }
    Ok(rep)
}

const C_PER_SAMPLE: usize = 50;

/// Towers of depth at most `3` against the closed form `(U ∧ g·C̃ ∧ gc̃·V, 1)`.
pub fn onedir(cfg: &VerifyConfig) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("lemma-onedir");
    let mut rng = cfg.rng();
    let al = cfg.alphabet();
    let sd = Semidirect::new(FreeGroupAction::new(al.clone()));
    for depth in 0..=3 {
        for inner in [Unary::Plus, Unary::Star] {
            let t = build_term(depth, inner);
            for _ in 0..cfg.samples {
                let consts: Vec<_> = (0..t.arity()).map(|_| random_mixed_element(&mut rng, &al, 2, 2)).collect();
                let p = onedir_params(&sd.action, &t, &consts)?;
                for _ in 0..C_PER_SAMPLE {
                    let c = random_r_element(&mut rng, &al, 2, 2);
                    let lhs = eval_term(&sd, &t, &c, &consts)?;
                    let rhs = onedir_value(&sd.action, inner, &p, &c);
                    rep.record(lhs == rhs, || format!("{t} at c = {c}: {lhs} ≠ {rhs}"));
                }
            }
        }
    }
    Ok(rep)
}

/// The constructed tower evaluates to `(𝟏 ∧ U ∧ g·C̃ ∧ gc̃·V, 1)` and its
/// constants lie in `R`.
pub fn yuck(cfg: &VerifyConfig) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("lemma-yuck");
    let mut rng = cfg.rng();
    let al = cfg.alphabet();
    let sd = Semidirect::new(FreeGroupAction::new(al.clone()));
    for _ in 0..cfg.samples {
        let (ru, rv) = (random_word(&mut rng, &al, 2), random_word(&mut rng, &al, 2));
        let u = random_tree(&mut rng, &al, &[ru], 2);
        let v = random_tree(&mut rng, &al, &[rv], 2);
        let g = random_word(&mut rng, &al, 6);
        let variant = if rng.gen_bool(0.5) { Unary::Plus } else { Unary::Star };
        let (t, beta) = yuck_construct(&sd.action, &u, &v, &g, variant)?;
        for b in &beta {
            let ok = sd.in_r(b)?;
            rep.record(ok, || format!("constant {b} of {t} is not in R"));
        }
        let p = OnedirParams { u: u.clone(), v: v.clone(), g: g.clone() };
        for _ in 0..C_PER_SAMPLE {
            let c = random_r_element(&mut rng, &al, 2, 2);
            let lhs = eval_term(&sd, &t, &c, &beta)?;
            let rhs = yuck_value(&sd.action, variant, &p, &c);
            rep.record(lhs == rhs, || format!("U={u} V={v} g={g} {variant}: {lhs} ≠ {rhs}"));
        }
    }
    Ok(rep)
}

fn random_sandwiched<R: Rng>(rng: &mut R, max_depth: usize) -> Term {
    if rng.gen_bool(0.3) {
        Term::Sandwich
    } else {
        let inner = if rng.gen_bool(0.5) { Unary::Plus } else { Unary::Star };
        Term::Around(Tower::new(rng.gen_range(0..=max_depth), inner))
    }
}

/// `t(c, α)↓ = t′(c, β)` for every `c ∈ R`, with `β` in `R`.
pub fn two(cfg: &VerifyConfig) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("lemma-two");
    let mut rng = cfg.rng();
    let al = cfg.alphabet();
    let sd = Semidirect::new(FreeGroupAction::new(al.clone()));
    for _ in 0..cfg.samples {
        let t = random_sandwiched(&mut rng, 2);
        let alpha: Vec<_> = (0..t.arity()).map(|_| random_mixed_element(&mut rng, &al, 2, 2)).collect();
        let (t2, beta) = two_transform(&sd, &t, &alpha)?;
        for b in &beta {
            let ok = sd.in_r(b)?;
            rep.record(ok, || format!("{t}: constant {b} of {t2} is not in R"));
        }
        for _ in 0..C_PER_SAMPLE {
            let c = random_r_element(&mut rng, &al, 2, 2);
            let lhs = sd.down(&eval_term(&sd, &t, &c, &alpha)?)?;
            let rhs = eval_term(&sd, &t2, &c, &beta)?;
            rep.record(lhs == rhs, || format!("{t} → {t2} at c = {c}: {lhs} ≠ {rhs}"));
        }
    }
    Ok(rep)
}

/// Random valid chains with endpoints in `R`, pulled down into `R`.
pub fn main1(cfg: &VerifyConfig) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("lemma-main1");
    let mut rng = cfg.rng();
    let sd = Semidirect::new(FreeGroupAction::new(cfg.alphabet()));
    let shape = ChainShape::default();
    for _ in 0..cfg.samples {
        let ch = random_chain(&mut rng, &sd, &shape);
        let orig = verify_chain(&sd, &ch)?;
        let out = transform_chain(&sd, &ch)?;
        let verdict = verify_chain(&sd, &out)?;
        let in_r = out
            .links
            .iter()
            .flat_map(|l| l.consts.iter().chain([&l.c, &l.d]))
            .map(|x| sd.in_r(x))
            .collect::<Result<Vec<bool>>>()?
            .into_iter()
            .all(|b| b);
        let ok = orig.is_valid()
            && verdict.is_valid()
            && in_r
            && out.s == ch.s
            && out.t == ch.t
            && out.links.len() == ch.links.len();
        rep.record(ok, || format!("chain {} → {}: {verdict}, constants in R: {in_r}", ch.s, ch.t));
    }
    Ok(rep)
}

/// Pairs with equal second components normalize to projection pairs with
/// `(A ∧ B, ā) = (A, 1)(B, ā)`; pairs with different ones are rejected.
pub fn in_sigma(cfg: &VerifyConfig) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("lemma-in-sigma");
    let mut rng = cfg.rng();
    let al = cfg.alphabet();
    let sd = Semidirect::new(FreeGroupAction::new(al.clone()));
    for _ in 0..cfg.samples {
        let x = random_r_element(&mut rng, &al, 3, 2);
        let y = if rng.gen_bool(0.7) {
            let extra = rng.gen_range(0..=2);
            SdElement::new(random_tree(&mut rng, &al, &[Word::identity(), x.second.clone()], extra), x.second.clone())
        } else {
            random_r_element(&mut rng, &al, 3, 2)
        };
        match in_sigma_normalize(&sd, (&x, &y)) {
            None => rep.record(x.second != y.second, || format!("{x}, {y} rejected")),
            Some((p, q)) => {
                let a = &x.second;
                let ok = p == SdElement::new(x.first.clone(), Word::identity())
                    && q == SdElement::new(y.first.clone(), Word::identity())
                    && sd.mul(&p, &y) == SdElement::new(x.first.meet(&y.first), a.clone())
                    && sd.mul(&q, &x) == SdElement::new(y.first.meet(&x.first), a.clone());
                rep.record(ok, || format!("{x}, {y} normalized to {p}, {q}"));
            }
        }
    }
    Ok(rep)
}

/// Saturation on random generators: closure under meets and translations
/// within the bound, independence of generator order.
pub fn epsilon(cfg: &VerifyConfig) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("lemma-epsilon");
    let mut rng = cfg.rng();
    let al = cfg.alphabet();
    let bound = cfg.bound.min(4);
    let universe = trees_in_y(&al, bound);
    for _ in 0..cfg.samples.min(20) {
        let gens: Vec<(Tree, Tree)> = (0..rng.gen_range(0..=2))
            .map(|_| (random_y_tree(&mut rng, &al, bound), random_y_tree(&mut rng, &al, bound)))
            .collect();
        let eps = saturate_epsilon(&al, &gens, bound)?;
        let mut rev = gens.clone();
        rev.reverse();
        let rev: Vec<_> = rev.into_iter().map(|(a, b)| (b, a)).collect();
        let eps2 = saturate_epsilon(&al, &rev, bound)?;
        let same = universe
            .iter()
            .all(|a| universe.iter().all(|b| eps.related(a, b) == eps2.related(a, b)));
        rep.record(same, || format!("{gens:?}: depends on generator order"));
        let mut closed = gens.iter().all(|(a, b)| eps.related(a, b) == Some(true));
        for block in eps.nontrivial_blocks() {
            let (a, rest) = block.split_first().expect("nonempty");
            for b in rest {
                // `None` means one side left the bounded universe
                for c in &universe {
                    closed &= eps.related(&a.meet(c), &b.meet(c)) != Some(false);
                }
                for l in al.letters() {
                    let w = Word::letter(l);
                    closed &= eps.related(&a.act(&w), &b.act(&w)) != Some(false);
                }
            }
        }
        rep.record(closed, || format!("{gens:?}: not closed"));
    }
    Ok(rep)
}

/// Factorisable completions of the sample semidirect products.
pub fn lemma_new(cfg: &VerifyConfig) -> Result<SuiteReport> {
    let _ = cfg;
    let mut rep = SuiteReport::new("lemma-new");
    for (name, inst) in sample_monoid_actions() {
        let nt = inst.t_names.len();
        let pairs_options: Vec<Vec<(usize, usize)>> =
            vec![vec![], vec![(inst.index(1, 0), inst.index(1, nt - 1))], vec![(0, inst.index(1, 0))]];
        for pairs in pairs_options {
            let c = adjoin_identity_new(&inst, &pairs)?;
            let r = c.report();
            rep.record(r.all_pass(), || format!("{name} with {pairs:?}: {r:?}"));
        }
    }
    Ok(rep)
}

/// The partial-action checks on the sample instances, plus congruence
/// extension on the 3-chain.
pub fn partial(cfg: &VerifyConfig) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("partial");
    let max_len = cfg.bound.min(3);
    for (name, pa) in sample_partial_actions() {
        let r = check_partial_action(&pa, max_len)?;
        rep.record(r.all_pass(), || format!("{name}: {r:?}"));
    }
    let pa = chain3_instance();
    let n = pa.y.len();
    for a in 0..n {
        for b in (a + 1)..n {
            let pairs = [(a, b)];
            let ok = same_partition(&projection_congruence(&pa, &pairs), &extended_congruence_on_y(&pa, &pairs, max_len));
            rep.record(ok, || format!("chain3: extension of {pairs:?} restricts differently"));
        }
    }
    Ok(rep)
}

/// Proper covers of the trivial monoid and the 2- and 3-chains.
pub fn cover(cfg: &VerifyConfig) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("cover");
    let algebras = BTreeMap::from([
        ("trivial", FinAlgebra::trivial()),
        ("chain2", FinAlgebra::chain(2)),
        ("chain3", FinAlgebra::chain(3)),
    ]);
    for (name, s) in algebras {
        let r = build_proper_cover(&s, cfg.bound)?;
        rep.record(r.all_pass(), || format!("{name}:\n{}", r.summary()));
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> VerifyConfig {
        VerifyConfig {
            seed: 3,
            samples: 5,
            omega: 2,
            bound: 3,
        }
    }

    #[test]
    fn every_suite_passes_small() {
        for name in SUITES {
            if *name == "niceness" {
                continue;
            }
            let r = run_suite(name, &small()).unwrap();
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn unknown_suite() {
        assert!(matches!(run_suite("nope", &small()), Err(Error::Input(_))));
    }

    #[test]
    fn deterministic() {
        let a = run_suite("lemma-two", &small()).unwrap();
        let b = run_suite("lemma-two", &small()).unwrap();
        assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
    }
}
