//! Chains of term applications witnessing a generated congruence, their
//! pulldown into `R`, and bounded saturation of `ε` on trees.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use petgraph::unionfind::UnionFind;
use rand::Rng;
use serde::Serialize;

use crate::actions::{trees_in_y, FreeGroupAction, NiceAction, Tree};
use crate::algebra::{Congruence, RestrictionAlgebra};
use crate::error::{Error, Result};
use crate::sample::{random_mixed_element, random_r_element};
use crate::semidirect::{Elem, SdElement, Semidirect};
use crate::terms::{eval_term, two_transform, Term, Tower, Unary};
use crate::words::{Alphabet, Word};

/// One step `tᵢ(cᵢ, αᵢ) → tᵢ(dᵢ, αᵢ)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Link<E> {
    pub term: Term,
    pub consts: Vec<E>,
    pub c: E,
    pub d: E,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Chain<E> {
    pub s: E,
    pub t: E,
    pub links: Vec<Link<E>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChainVerdict {
    Valid,
    /// Equality `k` fails: `0` is `s = t₁(c₁)`, `k` for `0 < k < n` joins
    /// links `k` and `k+1`, `n` is `tₙ(dₙ) = t`.
    BrokenAt(usize),
}

impl ChainVerdict {
    pub fn is_valid(self) -> bool {
        self == ChainVerdict::Valid
    }
}

impl fmt::Display for ChainVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChainVerdict::Valid => write!(f, "valid"),
            ChainVerdict::BrokenAt(k) => write!(f, "broken at equality {k}"),
        }
    }
}

pub fn verify_chain<S: RestrictionAlgebra>(alg: &S, ch: &Chain<S::Elem>) -> Result<ChainVerdict> {
    if ch.links.is_empty() {
        return Ok(if ch.s == ch.t { ChainVerdict::Valid } else { ChainVerdict::BrokenAt(0) });
    }
    let mut prev = ch.s.clone();
    for (i, l) in ch.links.iter().enumerate() {
        if eval_term(alg, &l.term, &l.c, &l.consts)? != prev {
            return Ok(ChainVerdict::BrokenAt(i));
        }
        prev = eval_term(alg, &l.term, &l.d, &l.consts)?;
    }
    Ok(if prev == ch.t { ChainVerdict::Valid } else { ChainVerdict::BrokenAt(ch.links.len()) })
}

/// [`verify_chain`] plus membership of every `(cᵢ, dᵢ)` in `related`.
pub fn verify_chain_with<S, F>(alg: &S, ch: &Chain<S::Elem>, related: F) -> Result<ChainVerdict>
where
    S: RestrictionAlgebra,
    F: Fn(&S::Elem, &S::Elem) -> bool,
{
    if let Some(i) = ch.links.iter().position(|l| !related(&l.c, &l.d)) {
        return Ok(ChainVerdict::BrokenAt(i));
    }
    verify_chain(alg, ch)
}

/// Replaces every link by its pulldown from [`two_transform`]. The endpoints
/// and the pairs `(cᵢ, dᵢ)` are kept.
pub fn transform_chain<A: NiceAction>(sd: &Semidirect<A>, ch: &Chain<Elem<A>>) -> Result<Chain<Elem<A>>> {
    for (name, x) in [("s", &ch.s), ("t", &ch.t)] {
        if !sd.in_r(x)? {
            return Err(Error::Domain(format!("endpoint {name} = {x:?} is not in R")));
        }
    }
    let links = ch
        .links
        .iter()
        .map(|l| {
            let (term, consts) = two_transform(sd, &l.term, &l.consts)?;
            Ok(Link {
                term,
                consts,
                c: l.c.clone(),
                d: l.d.clone(),
            })
        })
        .collect::<Result<_>>()?;
    Ok(Chain {
        s: ch.s.clone(),
        t: ch.t.clone(),
        links,
    })
}

/// Parameters for [`random_chain`].
#[derive(Clone, Debug)]
pub struct ChainShape {
    pub max_links: usize,
    pub max_depth: usize,
    pub max_len: usize,
    pub max_extra: usize,
}

impl Default for ChainShape {
    fn default() -> Self {
        ChainShape {
            max_links: 4,
            max_depth: 2,
            max_len: 2,
            max_extra: 2,
        }
    }
}

type FreeElem = SdElement<Tree, Word>;

fn random_term<R: Rng>(rng: &mut R, max_depth: usize) -> Term {
    if rng.gen_bool(0.3) {
        Term::Sandwich
    } else {
        let inner = if rng.gen_bool(0.5) { Unary::Plus } else { Unary::Star };
        Term::Around(Tower::new(rng.gen_range(0..=max_depth), inner))
    }
}

/// Changes the constants of a link without changing its value at `d`:
/// a tower gains a level with a constant `(B, 1)`, `B` a subtree of the
/// tower's value; in a sandwich, `y` becomes `y·(𝟏, 1)` or `z` becomes
/// `(𝟏, 1)·z`.
fn bridge<R: Rng>(rng: &mut R, sd: &Semidirect<FreeGroupAction>, link: &Link<FreeElem>) -> (Term, Vec<FreeElem>) {
    let mut consts = link.consts.clone();
    match link.term {
        Term::Around(tower) => {
            let value = eval_term(sd, &Term::Tower(tower), &link.d, &consts[2..]).expect("arity");
            let vs = value.first.vertices();
            let keep = rng.gen_range(1..=vs.len());
            let b = Tree::span(vs[..keep].iter().cloned()).expect("nonempty");
            consts.push(SdElement::new(b, Word::identity()));
            (Term::Around(Tower::new(tower.depth + 1, tower.innermost)), consts)
        }
        Term::Sandwich => {
            let one = sd.r_identity();
            if rng.gen_bool(0.5) {
                consts[0] = sd.mul(&consts[0], &one);
            } else {
                consts[1] = sd.mul(&one, &consts[1]);
            }
            (Term::Sandwich, consts)
        }
        Term::Tower(_) => (link.term, consts),
    }
}

/// A valid chain in `X ⋊ Ω*` with endpoints and all pairs `(cᵢ, dᵢ)` in
/// `R`, found by rejection on the endpoints.
pub fn random_chain<R: Rng>(rng: &mut R, sd: &Semidirect<FreeGroupAction>, shape: &ChainShape) -> Chain<FreeElem> {
    let al = sd.action.alphabet.clone();
    loop {
        let n = rng.gen_range(1..=shape.max_links);
        let term = random_term(rng, shape.max_depth);
        let consts: Vec<FreeElem> = (0..term.arity())
            .map(|_| random_mixed_element(rng, &al, shape.max_len, shape.max_extra))
            .collect();
        let c = random_r_element(rng, &al, shape.max_len, shape.max_extra);
        let s = eval_term(sd, &term, &c, &consts).expect("arity");
        if !sd.in_r(&s).expect("positive") {
            continue;
        }
        let d = random_r_element(rng, &al, shape.max_len, shape.max_extra);
        let mut links = vec![Link { term, consts, c, d }];
        while links.len() < n {
            let last = links.last().expect("nonempty");
            let (term, consts) = if rng.gen_bool(0.5) {
                bridge(rng, sd, last)
            } else {
                (last.term, last.consts.clone())
            };
            let c = last.d.clone();
            let d = random_r_element(rng, &al, shape.max_len, shape.max_extra);
            links.push(Link { term, consts, c, d });
        }
        let last = links.last().expect("nonempty");
        let t = eval_term(sd, &last.term, &last.d, &last.consts).expect("arity");
        if sd.in_r(&t).expect("positive") {
            return Chain { s, t, links };
        }
    }
}

/// For a pair with equal second components `ā`, the projection pair
/// `((A, 1), (B, 1))`; `None` when the second components differ.
pub fn in_sigma_normalize<A: NiceAction>(sd: &Semidirect<A>, pair: (&Elem<A>, &Elem<A>)) -> Option<(Elem<A>, Elem<A>)> {
    let (x, y) = pair;
    if x.second != y.second {
        return None;
    }
    Some((sd.plus(x), sd.plus(y)))
}

/// An equivalence on the trees of `Y` with at most `bound` vertices.
#[derive(Clone, Debug)]
pub struct BoundedCongruence {
    pub bound: usize,
    pub universe: Vec<Tree>,
    index: HashMap<Tree, usize>,
    pub congruence: Congruence,
    /// Saturating at `bound + 1` and restricting back changes nothing.
    pub stabilized: bool,
}

impl BoundedCongruence {
    pub fn class_of(&self, t: &Tree) -> Option<usize> {
        self.index.get(t).map(|&i| self.congruence.block_of(i))
    }

    pub fn related(&self, a: &Tree, b: &Tree) -> Option<bool> {
        Some(self.class_of(a)? == self.class_of(b)?)
    }

    pub fn blocks(&self) -> Vec<Vec<Tree>> {
        self.congruence
            .blocks()
            .into_iter()
            .map(|b| b.into_iter().map(|i| self.universe[i].clone()).collect())
            .collect()
    }

    pub fn nontrivial_blocks(&self) -> Vec<Vec<Tree>> {
        self.blocks().into_iter().filter(|b| b.len() > 1).collect()
    }
}

fn path_tree(v: &Word) -> Tree {
    Tree::span([Word::identity(), v.clone()]).expect("nonempty")
}

/// Vertices `v ∉ A` for which `A ∧ [ε, v]` has at most `bound` vertices.
fn meet_candidates(alphabet: &Alphabet, a: &Tree, bound: usize, out: &mut BTreeSet<Word>) {
    let room = bound.saturating_sub(a.len());
    let mut frontier: Vec<Word> = Vec::new();
    for u in a.vertices() {
        for l in alphabet.letters() {
            let v = u.push(l);
            if !a.contains(&v) {
                frontier.push(v);
            }
        }
    }
    for step in 1..=room {
        let mut next = Vec::new();
        for v in frontier {
            if step < room {
                for l in alphabet.letters() {
                    if v.last() != Some(l.inv()) {
                        next.push(v.push(l));
                    }
                }
            }
            out.insert(v);
        }
        frontier = next;
    }
}

fn close_within(alphabet: &Alphabet, universe: &[Tree], index: &HashMap<Tree, usize>, pairs: &[(usize, usize)], bound: usize) -> Congruence {
    let n = universe.len();
    let mut uf: UnionFind<usize> = UnionFind::new(n);
    for &(a, b) in pairs {
        uf.union(a, b);
    }
    let letters: Vec<_> = alphabet.letters().collect();
    loop {
        let mut classes: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for i in 0..n {
            classes.entry(uf.find(i)).or_default().push(i);
        }
        let mut changed = false;
        for members in classes.values().filter(|m| m.len() > 1) {
            for &l in &letters {
                let g = Word::letter(l);
                let images: Vec<usize> = members
                    .iter()
                    .filter(|&&i| universe[i].contains(&Word::letter(l.inv())))
                    .map(|&i| index[&universe[i].act(&g)])
                    .collect();
                for w in images.windows(2) {
                    changed |= uf.union(w[0], w[1]);
                }
            }
            let mut cands = BTreeSet::new();
            for &i in members {
                meet_candidates(alphabet, &universe[i], bound, &mut cands);
            }
            for v in &cands {
                let p = path_tree(v);
                let images: Vec<usize> = members
                    .iter()
                    .filter_map(|&i| {
                        let m = universe[i].meet(&p);
                        (m.len() <= bound).then(|| index[&m])
                    })
                    .collect();
                for w in images.windows(2) {
                    changed |= uf.union(w[0], w[1]);
                }
            }
        }
        if !changed {
            return Congruence::from_union_find(&uf, n);
        }
    }
}

fn saturate_at(alphabet: &Alphabet, generators: &[(Tree, Tree)], bound: usize) -> (Vec<Tree>, HashMap<Tree, usize>, Congruence) {
    let universe = trees_in_y(alphabet, bound);
    let index: HashMap<Tree, usize> = universe.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();
    let pairs: Vec<(usize, usize)> = generators.iter().map(|(a, b)| (index[a], index[b])).collect();
    let cong = close_within(alphabet, &universe, &index, &pairs, bound);
    (universe, index, cong)
}

/// The least equivalence on trees of `Y` with at most `bound` vertices that
/// contains `generators` and is closed under meets with trees of `Y` and
/// under translation by letters, whenever both sides stay within the bound.
pub fn saturate_epsilon(alphabet: &Alphabet, generators: &[(Tree, Tree)], bound: usize) -> Result<BoundedCongruence> {
    for (a, b) in generators {
        for t in [a, b] {
            for v in t.vertices() {
                alphabet.check_word(v)?;
            }
            if !t.in_ideal_y() {
                return Err(Error::Domain(format!("generator tree {t} does not contain ε")));
            }
            if t.len() > bound {
                return Err(Error::Domain(format!("generator tree {t} exceeds bound {bound}")));
            }
        }
    }
    let (universe, index, congruence) = saturate_at(alphabet, generators, bound);
    let (_, big_index, big) = saturate_at(alphabet, generators, bound + 1);
    let stabilized = universe.iter().enumerate().all(|(i, a)| {
        universe[..i]
            .iter()
            .enumerate()
            .all(|(j, b)| congruence.related(i, j) == big.related(big_index[a], big_index[b]))
    });
    Ok(BoundedCongruence {
        bound,
        universe,
        index,
        congruence,
        stabilized,
    })
}

/// Summary of a chain for reports.
#[derive(Clone, Debug, Serialize)]
pub struct ChainSummary {
    pub links: usize,
    pub terms: Vec<String>,
    pub verdict: String,
}

impl ChainSummary {
    pub fn new<E>(ch: &Chain<E>, verdict: ChainVerdict) -> Self {
        ChainSummary {
            links: ch.links.len(),
            terms: ch.links.iter().map(|l| l.term.to_string()).collect(),
            verdict: verdict.to_string(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::Alphabet;
    use rand::SeedableRng;
    use rand_pcg::Pcg64;

    fn sd() -> Semidirect<FreeGroupAction> {
        Semidirect::new(FreeGroupAction::new(Alphabet::first(2)))
    }

    fn e(s: &str) -> FreeElem {
        s.parse().unwrap()
    }

    fn t(s: &str) -> Tree {
        s.parse().unwrap()
    }

    #[test]
    fn empty_chain() {
        let s = sd();
        let x = e("({ε,a}, a)");
        let ch = Chain { s: x.clone(), t: x.clone(), links: vec![] };
        assert!(verify_chain(&s, &ch).unwrap().is_valid());
        let ch = Chain { s: x, t: e("({ε}, ε)"), links: vec![] };
        assert_eq!(verify_chain(&s, &ch).unwrap(), ChainVerdict::BrokenAt(0));
    }

    #[test]
    fn single_identity_link() {
        let s = sd();
        let id = s.r_identity();
        let x = e("({ε,b}, b)");
        let link = Link { term: Term::Sandwich, consts: vec![id.clone(), id.clone()], c: x.clone(), d: x.clone() };
        let ch = Chain { s: x.clone(), t: x.clone(), links: vec![link.clone()] };
        assert!(verify_chain(&s, &ch).unwrap().is_valid());
        let ch = Chain { s: x.clone(), t: id, links: vec![link] };
        assert!(!verify_chain(&s, &ch).unwrap().is_valid());
    }

    #[test]
    fn planted_break_is_located() {
        let s = sd();
        let mut rng = Pcg64::seed_from_u64(3);
        let shape = ChainShape { max_links: 4, ..ChainShape::default() };
        let mut ch = random_chain(&mut rng, &s, &shape);
        while ch.links.len() < 3 {
            ch = random_chain(&mut rng, &s, &shape);
        }
        assert!(verify_chain(&s, &ch).unwrap().is_valid());
        ch.links[2].c = e("({ε,a,aa,aaa,aaaa}, aaaa)");
        assert_eq!(verify_chain(&s, &ch).unwrap(), ChainVerdict::BrokenAt(2));
    }

    #[test]
    fn transformed_chains_verify() {
        let s = sd();
        let mut rng = Pcg64::seed_from_u64(11);
        for _ in 0..100 {
            let ch = random_chain(&mut rng, &s, &ChainShape::default());
            assert!(verify_chain(&s, &ch).unwrap().is_valid());
            let tr = transform_chain(&s, &ch).unwrap();
            assert_eq!((tr.s.clone(), tr.t.clone()), (ch.s.clone(), ch.t.clone()));
            assert_eq!(tr.links.len(), ch.links.len());
            assert!(tr.links.iter().all(|l| l.consts.iter().all(|k| s.in_r(k).unwrap())));
            assert!(verify_chain(&s, &tr).unwrap().is_valid());
        }
    }

    #[test]
    fn transform_rejects_endpoints_outside_r() {
        let s = sd();
        let x = e("({a}, ε)");
        let ch = Chain { s: x.clone(), t: x, links: vec![] };
        assert!(matches!(transform_chain(&s, &ch), Err(Error::Domain(_))));
    }

    #[test]
    fn sigma_normalization() {
        let s = sd();
        let (x, y) = (e("({ε,a,b}, a)"), e("({ε,a}, a)"));
        let (px, py) = in_sigma_normalize(&s, (&x, &y)).unwrap();
        assert_eq!((px.clone(), py.clone()), (e("({ε,a,b}, ε)"), e("({ε,a}, ε)")));
        assert!(in_sigma_normalize(&s, (&x, &e("({ε,b}, b)"))).is_none());
        // (A ∧ B, ā) = (A, 1)(B, ā)
        let yb = SdElement::new(y.first.clone(), y.second.clone());
        assert_eq!(s.mul(&px, &yb), SdElement::new(x.first.meet(&y.first), x.second.clone()));
    }

    #[test]
    fn epsilon_trivial_cases() {
        let al = Alphabet::first(1);
        let eq = saturate_epsilon(&al, &[], 3).unwrap();
        assert!(eq.stabilized);
        assert_eq!(eq.congruence.num_blocks(), eq.universe.len());
        let same = saturate_epsilon(&al, &[(t("{ε,a}"), t("{ε,a}"))], 3).unwrap();
        assert_eq!(same.congruence.num_blocks(), same.universe.len());
        assert!(saturate_epsilon(&al, &[(t("{ε}"), t("{ε,a,aa,aaa}"))], 3).is_err());
    }

    #[test]
    fn epsilon_single_letter_generator() {
        let al = Alphabet::first(1);
        let eps = saturate_epsilon(&al, &[(t("{ε}"), t("{ε,a}"))], 3).unwrap();
        assert!(eps.related(&t("{ε}"), &t("{ε,a,aa}")).unwrap());
        assert!(eps.related(&t("{A,ε}"), &t("{A,ε,a}")).unwrap());
        assert!(eps.stabilized);
    }
}
