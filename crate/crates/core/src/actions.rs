//! Semilattices acted on by a monoid sitting inside a group.
//!
//! Two built-in instances: finite subtrees of the Cayley graph of a free
//! group (the Munn-tree semilattice), and min-closed subsets of a free
//! abelian group. Both order their elements by reverse inclusion.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::words::{abelian_normal_form, nice_factorization_free, AbelianElement, Alphabet, Letter, Word};

/// A monoid `T` inside a group `G` acting on a semilattice `X` by
/// automorphisms, with a distinguished element `𝟏` and a factorization
/// routine producing alternating factorizations in `T`.
pub trait NiceAction {
    type Point: Clone + Eq + Hash + Ord + fmt::Debug;
    type Group: Clone + Eq + Hash + Ord + fmt::Debug;

    fn meet(&self, a: &Self::Point, b: &Self::Point) -> Self::Point;

    fn leq(&self, a: &Self::Point, b: &Self::Point) -> bool {
        self.meet(a, b) == *a
    }

    fn one(&self) -> Self::Point;

    fn act(&self, g: &Self::Group, a: &Self::Point) -> Self::Point;

    fn group_mul(&self, g: &Self::Group, h: &Self::Group) -> Self::Group;
    fn group_inv(&self, g: &Self::Group) -> Self::Group;
    fn group_identity(&self) -> Self::Group;

    /// Membership of a group element in the monoid `T`.
    fn in_monoid(&self, g: &Self::Group) -> bool;

    /// Alternating factorization `g = w₁⋯wₙ` with each `wᵢ ∈ T ∪ T⁻¹`.
    fn factorize(&self, g: &Self::Group) -> Result<Vec<Self::Group>>;

    /// `a ∈ Y`, the principal ideal below `𝟏`.
    fn in_ideal(&self, a: &Self::Point) -> bool {
        self.leq(a, &self.one())
    }
}

/// Checks a proposed factorization of `g`: it must multiply to `g`, be
/// alternating in `T`, and satisfy `wᵢ·𝟏 ≥ 𝟏 ∧ wᵢ⋯wₙ·𝟏` for every `i < n`.
pub fn is_nice_factorization<A: NiceAction>(action: &A, g: &A::Group, factors: &[A::Group]) -> Result<bool> {
    let product = factors
        .iter()
        .fold(action.group_identity(), |acc, w| action.group_mul(&acc, w));
    if product != *g {
        return Err(Error::FactorizationIntegrity(format!("{g:?}")));
    }
    let fits = |w: &A::Group, positive: bool| {
        if positive {
            action.in_monoid(w)
        } else {
            action.in_monoid(&action.group_inv(w))
        }
    };
    let alternating = [true, false]
        .iter()
        .any(|&first| factors.iter().enumerate().all(|(i, w)| fits(w, first == (i % 2 == 0))));
    if !alternating {
        return Ok(false);
    }
    let one = action.one();
    // suffix products wᵢ⋯wₙ
    let mut suffix = action.group_identity();
    let mut suffixes = Vec::with_capacity(factors.len());
    for w in factors.iter().rev() {
        suffix = action.group_mul(w, &suffix);
        suffixes.push(suffix.clone());
    }
    suffixes.reverse();
    for i in 0..factors.len().saturating_sub(1) {
        let lower = action.meet(&one, &action.act(&suffixes[i], &one));
        if !action.leq(&lower, &action.act(&factors[i], &one)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Verifies the factorization returned by the action itself.
pub fn verify_nice_factorization<A: NiceAction>(action: &A, g: &A::Group) -> Result<bool> {
    let factors = action.factorize(g)?;
    is_nice_factorization(action, g, &factors)
}

/// A finite connected subgraph of the Cayley graph of FG(Ω), stored as its
/// sorted vertex set.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tree(Vec<Word>);

fn path<'a>(u: &'a Word, v: &'a Word) -> impl Iterator<Item = Word> + 'a {
    let d = u.inverse().mul(v);
    (0..=d.len()).map(move |k| u.mul(&d.prefix(k)))
}

fn sorted(mut v: Vec<Word>) -> Vec<Word> {
    v.sort_unstable();
    v.dedup();
    v
}

impl Tree {
    /// `𝟏 = {ε}`.
    pub fn one() -> Self {
        Tree(vec![Word::identity()])
    }

    /// The smallest subtree containing the given vertices.
    pub fn span<I: IntoIterator<Item = Word>>(vs: I) -> Result<Self> {
        let vs: Vec<Word> = vs.into_iter().collect();
        let root = vs
            .first()
            .ok_or_else(|| Error::Domain("span of an empty vertex set".into()))?
            .clone();
        let mut all: BTreeSet<Word> = BTreeSet::new();
        for v in &vs {
            all.extend(path(&root, v));
        }
        Ok(Tree(all.into_iter().collect()))
    }

    /// Accepts an explicit vertex set only if it is already connected.
    pub fn from_vertices<I: IntoIterator<Item = Word>>(vs: I) -> Result<Self> {
        let v = sorted(vs.into_iter().collect());
        if v.is_empty() {
            return Err(Error::Domain("a tree needs at least one vertex".into()));
        }
        if !is_connected(&v) {
            return Err(Error::Domain("vertex set is not connected in the Cayley graph".into()));
        }
        Ok(Tree(v))
    }

    pub fn vertices(&self) -> &[Word] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.0.binary_search(w).is_ok()
    }

    /// `A ∧ B = (A ∪ B)′`. For two subtrees this is the union plus the
    /// geodesic joining them.
    pub fn meet(&self, other: &Tree) -> Tree {
        let mut v: Vec<Word> = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        v.extend(path(&self.0[0], &other.0[0]));
        Tree(sorted(v))
    }

    /// Left translation `g·A`.
    pub fn act(&self, g: &Word) -> Tree {
        Tree(sorted(self.0.iter().map(|v| g.mul(v)).collect()))
    }

    pub fn in_ideal_y(&self) -> bool {
        self.contains(&Word::identity())
    }

    /// Reverse inclusion: `A ≤ B` iff `A ⊇ B`.
    pub fn leq(&self, other: &Tree) -> bool {
        other.0.iter().all(|w| self.contains(w))
    }

    /// Edges `(u, a, ua)` with `a` a generator, both ends in the tree.
    pub fn edges(&self) -> Vec<(Word, char, Word)> {
        let mut out = Vec::new();
        let gens: BTreeSet<char> = self.0.iter().flat_map(|w| w.letters().iter().map(|l| l.gen)).collect();
        for u in &self.0 {
            for &g in &gens {
                let v = u.push(Letter::pos(g));
                if self.contains(&v) {
                    out.push((u.clone(), g, v));
                }
            }
        }
        out
    }

    /// Graphviz rendering with edges oriented along generators.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph tree {\n  rankdir=LR;\n");
        for (i, v) in self.0.iter().enumerate() {
            let shape = if v.is_identity() { "doublecircle" } else { "circle" };
            s.push_str(&format!("  n{i} [label=\"{}\", shape={shape}];\n", v.pretty()));
        }
        for (u, g, v) in self.edges() {
            let (i, j) = (self.index(&u), self.index(&v));
            s.push_str(&format!("  n{i} -> n{j} [label=\"{g}\"];\n"));
        }
        s.push_str("}\n");
        s
    }

    fn index(&self, w: &Word) -> usize {
        self.0.binary_search(w).expect("vertex present")
    }
}

fn is_connected(sorted_vertices: &[Word]) -> bool {
    let set: HashSet<&Word> = sorted_vertices.iter().collect();
    let mut seen: HashSet<Word> = HashSet::new();
    let gens: BTreeSet<char> = sorted_vertices
        .iter()
        .flat_map(|w| w.letters().iter().map(|l| l.gen))
        .collect();
    let mut queue = VecDeque::from([sorted_vertices[0].clone()]);
    seen.insert(sorted_vertices[0].clone());
    while let Some(u) = queue.pop_front() {
        for &g in &gens {
            for l in [Letter::pos(g), Letter::neg(g)] {
                let v = u.push(l);
                if set.contains(&v) && seen.insert(v.clone()) {
                    queue.push_back(v);
                }
            }
        }
    }
    seen.len() == sorted_vertices.len()
}

pub fn span<I: IntoIterator<Item = Word>>(vs: I) -> Result<Tree> {
    Tree::span(vs)
}

pub fn tree_meet(a: &Tree, b: &Tree) -> Tree {
    a.meet(b)
}

pub fn tree_act(g: &Word, a: &Tree) -> Tree {
    a.act(g)
}

pub fn in_ideal_y(a: &Tree) -> bool {
    a.in_ideal_y()
}

pub fn tree_leq(a: &Tree, b: &Tree) -> bool {
    a.leq(b)
}

/// All trees containing `ε` with at most `max_size` vertices, by size.
pub fn trees_in_y(alphabet: &Alphabet, max_size: usize) -> Vec<Tree> {
    if max_size == 0 {
        return Vec::new();
    }
    let mut out = vec![Tree::one()];
    let mut layer: HashSet<Tree> = HashSet::from([Tree::one()]);
    for _ in 1..max_size {
        let mut next: HashSet<Tree> = HashSet::new();
        for t in &layer {
            for v in &t.0 {
                for l in alphabet.letters() {
                    let w = v.push(l);
                    if !t.contains(&w) {
                        let mut vs = t.0.clone();
                        vs.push(w);
                        next.insert(Tree(sorted(vs)));
                    }
                }
            }
        }
        let mut layer_sorted: Vec<Tree> = next.iter().cloned().collect();
        layer_sorted.sort();
        out.extend(layer_sorted);
        layer = next;
    }
    out
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Splits the inside of `{...}` on commas.
pub(crate) fn set_literal_items(s: &str) -> Result<Vec<&str>> {
    let s = s.trim();
    let inner = s
        .strip_prefix('{')
        .and_then(|r| r.strip_suffix('}'))
        .ok_or_else(|| Error::parse(0, "set literal must be enclosed in braces"))?;
    Ok(inner.split(',').map(str::trim).collect())
}

impl FromStr for Tree {
    type Err = Error;

    /// `{ε,a,ab}`; the vertex set must be connected.
    fn from_str(s: &str) -> Result<Self> {
        let items = set_literal_items(s)?;
        let words = items.into_iter().map(str::parse).collect::<Result<Vec<Word>>>()?;
        Tree::from_vertices(words)
    }
}

/// A nonempty subset of the free abelian group closed under coordinatewise
/// minimum.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MinClosedSet(Vec<AbelianElement>);

/// Closure under pairwise coordinatewise minimum.
pub fn minclosed_span<I: IntoIterator<Item = AbelianElement>>(vs: I) -> Result<MinClosedSet> {
    let mut set: BTreeSet<AbelianElement> = vs.into_iter().collect();
    if set.is_empty() {
        return Err(Error::Domain("min-closure of an empty set".into()));
    }
    loop {
        let items: Vec<&AbelianElement> = set.iter().collect();
        let mut fresh = Vec::new();
        for (i, a) in items.iter().enumerate() {
            for b in &items[i + 1..] {
                let m = a.coord_min(b);
                if !set.contains(&m) {
                    fresh.push(m);
                }
            }
        }
        if fresh.is_empty() {
            break;
        }
        set.extend(fresh);
    }
    Ok(MinClosedSet(set.into_iter().collect()))
}

impl MinClosedSet {
    pub fn one() -> Self {
        MinClosedSet(vec![AbelianElement::identity()])
    }

    pub fn elements(&self) -> &[AbelianElement] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, g: &AbelianElement) -> bool {
        self.0.binary_search(g).is_ok()
    }

    pub fn meet(&self, other: &Self) -> Self {
        minclosed_span(self.0.iter().chain(other.0.iter()).cloned()).expect("nonempty")
    }

    pub fn act(&self, g: &AbelianElement) -> Self {
        let mut v: Vec<AbelianElement> = self.0.iter().map(|a| g.mul(a)).collect();
        v.sort();
        MinClosedSet(v)
    }

    pub fn leq(&self, other: &Self) -> bool {
        other.0.iter().all(|g| self.contains(g))
    }
}

impl fmt::Debug for MinClosedSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// `Ω*` acting on finite subtrees by left translation, inside `FG(Ω)`.
#[derive(Clone, Debug)]
pub struct FreeGroupAction {
    pub alphabet: Alphabet,
}

impl FreeGroupAction {
    pub fn new(alphabet: Alphabet) -> Self {
        FreeGroupAction { alphabet }
    }
}

impl NiceAction for FreeGroupAction {
    type Point = Tree;
    type Group = Word;

    fn meet(&self, a: &Tree, b: &Tree) -> Tree {
        a.meet(b)
    }
    fn leq(&self, a: &Tree, b: &Tree) -> bool {
        a.leq(b)
    }
    fn one(&self) -> Tree {
        Tree::one()
    }
    fn act(&self, g: &Word, a: &Tree) -> Tree {
        a.act(g)
    }
    fn group_mul(&self, g: &Word, h: &Word) -> Word {
        g.mul(h)
    }
    fn group_inv(&self, g: &Word) -> Word {
        g.inverse()
    }
    fn group_identity(&self) -> Word {
        Word::identity()
    }
    fn in_monoid(&self, g: &Word) -> bool {
        g.is_positive()
    }
    fn factorize(&self, g: &Word) -> Result<Vec<Word>> {
        self.alphabet.check_word(g)?;
        Ok(nice_factorization_free(g))
    }
    fn in_ideal(&self, a: &Tree) -> bool {
        a.in_ideal_y()
    }
}

/// The free commutative monoid acting on min-closed sets, inside the free
/// abelian group; factorizations are `g = u⁻¹t`.
#[derive(Clone, Debug, Default)]
pub struct FreeAbelianAction;

impl NiceAction for FreeAbelianAction {
    type Point = MinClosedSet;
    type Group = AbelianElement;

    fn meet(&self, a: &MinClosedSet, b: &MinClosedSet) -> MinClosedSet {
        a.meet(b)
    }
    fn leq(&self, a: &MinClosedSet, b: &MinClosedSet) -> bool {
        a.leq(b)
    }
    fn one(&self) -> MinClosedSet {
        MinClosedSet::one()
    }
    fn act(&self, g: &AbelianElement, a: &MinClosedSet) -> MinClosedSet {
        a.act(g)
    }
    fn group_mul(&self, g: &AbelianElement, h: &AbelianElement) -> AbelianElement {
        g.mul(h)
    }
    fn group_inv(&self, g: &AbelianElement) -> AbelianElement {
        g.inverse()
    }
    fn group_identity(&self) -> AbelianElement {
        AbelianElement::identity()
    }
    fn in_monoid(&self, g: &AbelianElement) -> bool {
        g.is_nonnegative()
    }
    fn factorize(&self, g: &AbelianElement) -> Result<Vec<AbelianElement>> {
        let (u, t) = abelian_normal_form(g);
        Ok([u.inverse(), t].into_iter().filter(|w| !w.is_identity()).collect())
    }
}

/// Wraps an action so that the acting monoid is the whole group. Every
/// element is its own one-factor factorization.
#[derive(Clone, Debug)]
pub struct OverGroup<A>(pub A);

impl<A: NiceAction> NiceAction for OverGroup<A> {
    type Point = A::Point;
    type Group = A::Group;

    fn meet(&self, a: &A::Point, b: &A::Point) -> A::Point {
        self.0.meet(a, b)
    }
    fn leq(&self, a: &A::Point, b: &A::Point) -> bool {
        self.0.leq(a, b)
    }
    fn one(&self) -> A::Point {
        self.0.one()
    }
    fn act(&self, g: &A::Group, a: &A::Point) -> A::Point {
        self.0.act(g, a)
    }
    fn group_mul(&self, g: &A::Group, h: &A::Group) -> A::Group {
        self.0.group_mul(g, h)
    }
    fn group_inv(&self, g: &A::Group) -> A::Group {
        self.0.group_inv(g)
    }
    fn group_identity(&self) -> A::Group {
        self.0.group_identity()
    }
    fn in_monoid(&self, _g: &A::Group) -> bool {
        true
    }
    fn factorize(&self, g: &A::Group) -> Result<Vec<A::Group>> {
        if *g == self.0.group_identity() {
            Ok(Vec::new())
        } else {
            Ok(vec![g.clone()])
        }
    }
    fn in_ideal(&self, a: &A::Point) -> bool {
        self.0.in_ideal(a)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }
    fn t(s: &str) -> Tree {
        s.parse().unwrap()
    }
    fn ab(s: &str) -> AbelianElement {
        s.parse().unwrap()
    }

    #[test]
    fn span_examples() {
        assert_eq!(span([w("ab")]).unwrap(), t("{ab}"));
        assert_eq!(span([w(""), w("ab")]).unwrap(), t("{ε,a,ab}"));
        assert_eq!(span([w("a"), w("B")]).unwrap(), t("{a,ε,B}"));
        assert!(matches!(span(Vec::<Word>::new()), Err(Error::Domain(_))));
    }

    #[test]
    fn meet_examples() {
        assert_eq!(tree_meet(&t("{ε,a}"), &t("{ε,b}")), t("{ε,a,b}"));
        let a = t("{ε,a,ab}");
        assert_eq!(tree_meet(&a, &a), a);
        assert_eq!(tree_meet(&Tree::one(), &t("{ε,a}")), t("{ε,a}"));
        assert_eq!(tree_meet(&t("{ab}"), &t("{B}")), t("{B,ε,a,ab}"));
    }

    #[test]
    fn action_examples() {
        assert_eq!(tree_act(&w("a"), &t("{ε,b}")), t("{a,ab}"));
        let a = t("{ε,a,aB}");
        assert_eq!(tree_act(&Word::identity(), &a), a);
        assert_eq!(tree_act(&w("A"), &tree_act(&w("a"), &a)), a);
    }

    #[test]
    fn ideal_and_order() {
        assert!(in_ideal_y(&t("{ε,a}")));
        assert!(!in_ideal_y(&t("{a}")));
        assert!(tree_leq(&t("{ε,a,b}"), &t("{ε,a}")));
        assert!(!tree_leq(&t("{ε,a}"), &t("{ε,a,b}")));
    }

    #[test]
    fn disconnected_literal_rejected() {
        assert!(matches!("{ε,ab}".parse::<Tree>(), Err(Error::Domain(_))));
    }

    #[test]
    fn nice_factorizations() {
        let fg = FreeGroupAction::new(Alphabet::first(2));
        assert!(verify_nice_factorization(&fg, &w("aBa")).unwrap());
        let og = OverGroup(fg.clone());
        assert!(verify_nice_factorization(&og, &w("aBBab")).unwrap());
        assert!(verify_nice_factorization(&FreeAbelianAction, &ab("x^2y^-3")).unwrap());
    }

    #[test]
    fn non_alternating_and_bad_product() {
        let fg = FreeGroupAction::new(Alphabet::first(2));
        // two positive blocks in a row
        assert!(!is_nice_factorization(&fg, &w("ab"), &[w("a"), w("b")]).unwrap());
        // mixed-sign factor
        assert!(!is_nice_factorization(&fg, &w("aB"), &[w("aB")]).unwrap());
        assert!(matches!(
            is_nice_factorization(&fg, &w("ab"), &[w("a")]),
            Err(Error::FactorizationIntegrity(_))
        ));
    }

    #[test]
    fn a_factorization_that_is_not_nice() {
        // ab = (ab·a)·a⁻¹ is alternating but a·b·a·𝟏 is not above 𝟏 ∧ ab·𝟏.
        let fg = FreeGroupAction::new(Alphabet::first(2));
        assert!(!is_nice_factorization(&fg, &w("ab"), &[w("aba"), w("A")]).unwrap());
    }

    #[test]
    fn minclosed_examples() {
        let s = minclosed_span([ab("x^2"), ab("X")]).unwrap();
        assert_eq!(s.len(), 2);
        assert!(s.contains(&ab("X")) && s.contains(&ab("x^2")));
        let s = minclosed_span([ab("xy"), ab("XY")]).unwrap();
        assert_eq!(s.len(), 2);
        let s = minclosed_span([ab("x"), ab("y")]).unwrap();
        assert_eq!(s.len(), 3);
        assert!(s.contains(&AbelianElement::identity()));
    }

    #[test]
    fn dot_output() {
        let dot = t("{ε,a,aB}").to_dot();
        assert!(dot.contains("label=\"a\""));
        assert!(dot.contains("doublecircle"));
        assert_eq!(dot.matches("->").count(), 2);
    }

    #[test]
    fn enumerate_y() {
        let one = Alphabet::first(1);
        // intervals containing ε: sizes 1,2,3 give 1 + 2 + 3
        assert_eq!(trees_in_y(&one, 3).len(), 6);
        assert!(trees_in_y(&Alphabet::first(2), 4).iter().all(|t| t.in_ideal_y() && t.len() <= 4));
    }
}
