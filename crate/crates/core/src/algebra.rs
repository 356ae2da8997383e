//! The (2,1,1) signature of restriction semigroups, finite table algebras,
//! congruence closure and quotients.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;

use petgraph::unionfind::UnionFind;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An algebra with a binary product and two unary operations `⁺` and `*`.
///
/// Instances are expected to satisfy the restriction identities; use
/// [`check_identities`] to test that contract.
pub trait RestrictionAlgebra {
    type Elem: Clone + PartialEq + fmt::Debug;

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn plus(&self, a: &Self::Elem) -> Self::Elem;
    fn star(&self, a: &Self::Elem) -> Self::Elem;

    fn identity(&self) -> Option<Self::Elem> {
        None
    }

    /// Decides `a σ b`. Infinite instances must override this.
    fn sigma(&self, _a: &Self::Elem, _b: &Self::Elem) -> Result<bool> {
        Err(Error::Undecidable)
    }
}

impl<A: RestrictionAlgebra + ?Sized> RestrictionAlgebra for &A {
    type Elem = A::Elem;

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        (**self).mul(a, b)
    }
    fn plus(&self, a: &Self::Elem) -> Self::Elem {
        (**self).plus(a)
    }
    fn star(&self, a: &Self::Elem) -> Self::Elem {
        (**self).star(a)
    }
    fn identity(&self) -> Option<Self::Elem> {
        (**self).identity()
    }
    fn sigma(&self, a: &Self::Elem, b: &Self::Elem) -> Result<bool> {
        (**self).sigma(a, b)
    }
}

/// `a ≤ b` iff `a = a⁺b`.
pub fn natural_leq<A: RestrictionAlgebra>(alg: &A, a: &A::Elem, b: &A::Elem) -> bool {
    *a == alg.mul(&alg.plus(a), b)
}

/// The ten defining identities plus associativity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Law {
    PlusAbsorbs,
    PlusCommute,
    PlusOfPlusProduct,
    PlusRightAmple,
    StarAbsorbs,
    StarCommute,
    StarOfStarProduct,
    StarLeftAmple,
    PlusThenStar,
    StarThenPlus,
    Associativity,
}

impl Law {
    pub const ALL: [Law; 11] = [
        Law::PlusAbsorbs,
        Law::PlusCommute,
        Law::PlusOfPlusProduct,
        Law::PlusRightAmple,
        Law::StarAbsorbs,
        Law::StarCommute,
        Law::StarOfStarProduct,
        Law::StarLeftAmple,
        Law::PlusThenStar,
        Law::StarThenPlus,
        Law::Associativity,
    ];

    pub fn formula(self) -> &'static str {
        match self {
            Law::PlusAbsorbs => "x⁺x = x",
            Law::PlusCommute => "x⁺y⁺ = y⁺x⁺",
            Law::PlusOfPlusProduct => "(x⁺y)⁺ = x⁺y⁺",
            Law::PlusRightAmple => "xy⁺ = (xy)⁺x",
            Law::StarAbsorbs => "xx* = x",
            Law::StarCommute => "x*y* = y*x*",
            Law::StarOfStarProduct => "(xy*)* = x*y*",
            Law::StarLeftAmple => "x*y = y(xy)*",
            Law::PlusThenStar => "(x⁺)* = x⁺",
            Law::StarThenPlus => "(x*)⁺ = x*",
            Law::Associativity => "(xy)z = x(yz)",
        }
    }

    fn holds<A: RestrictionAlgebra>(self, s: &A, x: &A::Elem, y: &A::Elem, z: &A::Elem) -> bool {
        let (m, p, st) = (|a: &A::Elem, b: &A::Elem| s.mul(a, b), |a| s.plus(a), |a| s.star(a));
        match self {
            Law::PlusAbsorbs => m(&p(x), x) == *x,
            Law::PlusCommute => m(&p(x), &p(y)) == m(&p(y), &p(x)),
            Law::PlusOfPlusProduct => p(&m(&p(x), y)) == m(&p(x), &p(y)),
            Law::PlusRightAmple => m(x, &p(y)) == m(&p(&m(x, y)), x),
            Law::StarAbsorbs => m(x, &st(x)) == *x,
            Law::StarCommute => m(&st(x), &st(y)) == m(&st(y), &st(x)),
            Law::StarOfStarProduct => st(&m(x, &st(y))) == m(&st(x), &st(y)),
            Law::StarLeftAmple => m(&st(x), y) == m(y, &st(&m(x, y))),
            Law::PlusThenStar => st(&p(x)) == p(x),
            Law::StarThenPlus => p(&st(x)) == st(x),
            Law::Associativity => m(&m(x, y), z) == m(x, &m(y, z)),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct LawResult {
    pub law: Law,
    pub formula: &'static str,
    pub checked: usize,
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct IdentityReport {
    pub results: Vec<LawResult>,
}

impl IdentityReport {
    pub fn all_pass(&self) -> bool {
        self.results.iter().all(|r| r.witness.is_none())
    }

    pub fn failures(&self) -> impl Iterator<Item = &LawResult> {
        self.results.iter().filter(|r| r.witness.is_some())
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.results {
            match &r.witness {
                None => writeln!(f, "PASS  {:<16} ({} triples)", r.formula, r.checked)?,
                Some(w) => writeln!(f, "FAIL  {:<16} witness {}", r.formula, w)?,
            }
        }
        Ok(())
    }
}

/// Evaluates every law on the given triples. Failures are reported with
/// the first witness triple, never as errors.
pub fn check_identities<A, I>(alg: &A, triples: I) -> IdentityReport
where
    A: RestrictionAlgebra,
    I: IntoIterator<Item = (A::Elem, A::Elem, A::Elem)>,
{
    let mut results: Vec<LawResult> = Law::ALL
        .iter()
        .map(|&law| LawResult {
            law,
            formula: law.formula(),
            checked: 0,
            witness: None,
        })
        .collect();
    for (x, y, z) in triples {
        for r in results.iter_mut() {
            if r.witness.is_some() {
                continue;
            }
            r.checked += 1;
            if !r.law.holds(alg, &x, &y, &z) {
                r.witness = Some(format!("x={x:?}, y={y:?}, z={z:?}"));
            }
        }
    }
    IdentityReport { results }
}

/// Checks properness on a finite sample: `a⁺ = b⁺` and `a σ b` imply `a = b`,
/// and dually with `*`.
pub fn is_proper_on<A: RestrictionAlgebra>(alg: &A, sample: &[A::Elem]) -> Result<bool> {
    for a in sample {
        for b in sample {
            if a == b || !alg.sigma(a, b)? {
                continue;
            }
            if alg.plus(a) == alg.plus(b) || alg.star(a) == alg.star(b) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Checks that `f` commutes with the product and both unary operations on
/// the given pairs.
pub fn is_morphism_on<S, T, F>(src: &S, dst: &T, f: F, pairs: &[(S::Elem, S::Elem)]) -> bool
where
    S: RestrictionAlgebra,
    T: RestrictionAlgebra,
    F: Fn(&S::Elem) -> T::Elem,
{
    pairs.iter().all(|(x, y)| {
        let (fx, fy) = (f(x), f(y));
        f(&src.mul(x, y)) == dst.mul(&fx, &fy)
            && f(&src.plus(x)) == dst.plus(&fx)
            && f(&src.star(x)) == dst.star(&fx)
    })
}

/// A finite (2,1,1)-algebra given by its tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinAlgebra {
    names: Vec<String>,
    mul: Vec<usize>,
    plus: Vec<usize>,
    star: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum TableJson {
    Nested(Vec<Vec<usize>>),
    Flat(Vec<usize>),
}

/// JSON form: `{names, mul, plus, star}`; `mul` is row-major, either nested
/// rows or one flat array.
#[derive(Serialize, Deserialize)]
struct AlgebraJson {
    names: Vec<String>,
    mul: TableJson,
    plus: Vec<usize>,
    star: Vec<usize>,
}

impl FinAlgebra {
    pub fn new(names: Vec<String>, mul: Vec<Vec<usize>>, plus: Vec<usize>, star: Vec<usize>) -> Result<Self> {
        let n = names.len();
        if mul.len() != n || mul.iter().any(|row| row.len() != n) {
            return Err(Error::Instance(format!("multiplication table must be {n}×{n}")));
        }
        Self::from_flat(names, mul.into_iter().flatten().collect(), plus, star)
    }

    fn from_flat(names: Vec<String>, mul: Vec<usize>, plus: Vec<usize>, star: Vec<usize>) -> Result<Self> {
        let n = names.len();
        if n == 0 {
            return Err(Error::Instance("empty carrier".into()));
        }
        if mul.len() != n * n || plus.len() != n || star.len() != n {
            return Err(Error::Instance("table sizes do not match the carrier".into()));
        }
        if let Some(&bad) = mul.iter().chain(&plus).chain(&star).find(|&&v| v >= n) {
            return Err(Error::Instance(format!("table entry {bad} out of range 0..{n}")));
        }
        let distinct: HashSet<&String> = names.iter().collect();
        if distinct.len() != n {
            return Err(Error::Instance("element names must be distinct".into()));
        }
        Ok(FinAlgebra {
            names,
            mul,
            plus,
            star,
        })
    }

    /// A semilattice with `⁺` and `*` the identity map.
    pub fn semilattice(names: Vec<String>, meet: Vec<Vec<usize>>) -> Result<Self> {
        let n = names.len();
        let id: Vec<usize> = (0..n).collect();
        Self::new(names, meet, id.clone(), id)
    }

    /// A monoid viewed as a reduced restriction monoid.
    pub fn reduced_monoid(names: Vec<String>, mul: Vec<Vec<usize>>) -> Result<Self> {
        let n = names.len();
        let one = (0..n)
            .find(|&e| (0..n).all(|x| mul[e][x] == x && mul[x][e] == x))
            .ok_or_else(|| Error::Instance("monoid table has no identity".into()))?;
        Self::new(names, mul, vec![one; n], vec![one; n])
    }

    /// The chain `1 > e1 > ... > e(n-1)` as a semilattice.
    pub fn chain(n: usize) -> Self {
        let names = (0..n)
            .map(|i| if i == 0 { "1".to_string() } else { format!("e{i}") })
            .collect();
        let meet = (0..n).map(|i| (0..n).map(|j| i.max(j)).collect()).collect();
        Self::semilattice(names, meet).expect("chain tables are valid")
    }

    pub fn trivial() -> Self {
        Self::chain(1)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let j: AlgebraJson = serde_json::from_str(s).map_err(|e| Error::Input(e.to_string()))?;
        match j.mul {
            TableJson::Nested(rows) => Self::new(j.names, rows, j.plus, j.star),
            TableJson::Flat(flat) => Self::from_flat(j.names, flat, j.plus, j.star),
        }
    }

    pub fn to_json(&self) -> String {
        let j = AlgebraJson {
            names: self.names.clone(),
            mul: TableJson::Nested(self.mul.chunks(self.len()).map(|r| r.to_vec()).collect()),
            plus: self.plus.clone(),
            star: self.star.clone(),
        };
        serde_json::to_string_pretty(&j).expect("serializable")
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, a: usize) -> &str {
        &self.names[a]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.len()
    }

    #[inline]
    pub fn product(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.len() + b]
    }

    #[inline]
    pub fn plus_of(&self, a: usize) -> usize {
        self.plus[a]
    }

    #[inline]
    pub fn star_of(&self, a: usize) -> usize {
        self.star[a]
    }

    pub fn identity_element(&self) -> Option<usize> {
        let n = self.len();
        (0..n).find(|&e| (0..n).all(|x| self.product(e, x) == x && self.product(x, e) == x))
    }

    /// Exhaustive identity check over all triples.
    pub fn check_identities(&self) -> IdentityReport {
        let n = self.len();
        let triples = (0..n).flat_map(move |x| (0..n).flat_map(move |y| (0..n).map(move |z| (x, y, z))));
        check_identities(self, triples)
    }

    pub fn projections(&self) -> BTreeSet<usize> {
        self.plus.iter().copied().collect()
    }

    pub fn is_reduced(&self) -> bool {
        self.projections().len() == 1
    }

    pub fn units(&self) -> BTreeSet<usize> {
        match self.identity_element() {
            None => BTreeSet::new(),
            Some(one) => self
                .elements()
                .filter(|&u| self.plus[u] == one && self.star[u] == one)
                .collect(),
        }
    }

    pub fn natural_leq(&self, a: usize, b: usize) -> bool {
        a == self.product(self.plus[a], b)
    }

    pub fn sigma_related(&self, a: usize, b: usize) -> bool {
        self.projections()
            .into_iter()
            .any(|e| self.product(e, a) == self.product(e, b))
    }

    pub fn is_proper(&self) -> bool {
        let all: Vec<usize> = self.elements().collect();
        is_proper_on(self, &all).expect("finite algebras decide sigma")
    }

    /// Whether `P(F)U(F)` and `U(F)P(F)` each cover the carrier.
    pub fn factorisability(&self) -> Factorisability {
        let p = self.projections();
        let u = self.units();
        let pu: BTreeSet<usize> = p.iter().flat_map(|&e| u.iter().map(move |&v| (e, v))).map(|(e, v)| self.product(e, v)).collect();
        let up: BTreeSet<usize> = u.iter().flat_map(|&v| p.iter().map(move |&e| (v, e))).map(|(v, e)| self.product(v, e)).collect();
        Factorisability {
            has_identity: self.identity_element().is_some(),
            pu_covers: pu.len() == self.len(),
            up_covers: up.len() == self.len(),
        }
    }

    /// `F = P(F)U(F)` by literal set product.
    pub fn is_factorisable(&self) -> bool {
        let f = self.factorisability();
        f.has_identity && f.pu_covers
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Factorisability {
    pub has_identity: bool,
    pub pu_covers: bool,
    pub up_covers: bool,
}

impl RestrictionAlgebra for FinAlgebra {
    type Elem = usize;

    fn mul(&self, a: &usize, b: &usize) -> usize {
        self.product(*a, *b)
    }
    fn plus(&self, a: &usize) -> usize {
        self.plus[*a]
    }
    fn star(&self, a: &usize) -> usize {
        self.star[*a]
    }
    fn identity(&self) -> Option<usize> {
        self.identity_element()
    }
    fn sigma(&self, a: &usize, b: &usize) -> Result<bool> {
        Ok(self.sigma_related(*a, *b))
    }
}

/// An equivalence on `0..n`, stored as a block label per element. Blocks are
/// numbered in order of their least element.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Congruence {
    block_of: Vec<usize>,
}

impl Congruence {
    pub fn equality(n: usize) -> Self {
        Congruence {
            block_of: (0..n).collect(),
        }
    }

    pub fn universal(n: usize) -> Self {
        Congruence { block_of: vec![0; n] }
    }

    /// Builds from arbitrary labels, renumbering canonically.
    pub fn from_labels(labels: &[usize]) -> Self {
        let mut map = std::collections::HashMap::new();
        let block_of = labels
            .iter()
            .map(|l| {
                let next = map.len();
                *map.entry(*l).or_insert(next)
            })
            .collect();
        Congruence { block_of }
    }

    pub fn from_union_find(uf: &UnionFind<usize>, n: usize) -> Self {
        let labels: Vec<usize> = (0..n).map(|i| uf.find(i)).collect();
        Self::from_labels(&labels)
    }

    pub fn len(&self) -> usize {
        self.block_of.len()
    }

    pub fn is_empty(&self) -> bool {
        self.block_of.is_empty()
    }

    pub fn block_of(&self, a: usize) -> usize {
        self.block_of[a]
    }

    pub fn related(&self, a: usize, b: usize) -> bool {
        self.block_of[a] == self.block_of[b]
    }

    pub fn num_blocks(&self) -> usize {
        self.block_of.iter().max().map_or(0, |m| m + 1)
    }

    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.num_blocks()];
        for (a, &b) in self.block_of.iter().enumerate() {
            out[b].push(a);
        }
        out
    }

    /// Verifies compatibility with all operations, reporting the first
    /// violating context.
    pub fn check_compatible(&self, alg: &FinAlgebra) -> Result<()> {
        let n = alg.len();
        if n != self.len() {
            return Err(Error::Congruence("carrier size mismatch".into()));
        }
        for a in 0..n {
            for b in (a + 1)..n {
                if !self.related(a, b) {
                    continue;
                }
                let (na, nb) = (alg.name(a), alg.name(b));
                if !self.related(alg.plus_of(a), alg.plus_of(b)) {
                    return Err(Error::Congruence(format!("{na} ~ {nb} but their ⁺ differ")));
                }
                if !self.related(alg.star_of(a), alg.star_of(b)) {
                    return Err(Error::Congruence(format!("{na} ~ {nb} but their * differ")));
                }
                for c in 0..n {
                    if !self.related(alg.product(c, a), alg.product(c, b)) {
                        return Err(Error::Congruence(format!(
                            "{na} ~ {nb} but not after left multiplication by {}",
                            alg.name(c)
                        )));
                    }
                    if !self.related(alg.product(a, c), alg.product(b, c)) {
                        return Err(Error::Congruence(format!(
                            "{na} ~ {nb} but not after right multiplication by {}",
                            alg.name(c)
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Least congruence containing `pairs`.
///
/// Worklist saturation over a union-find: every merge enqueues the merged
/// pair, and every dequeued pair is pushed through all single-step contexts
/// (left and right translation, `⁺`, `*`).
pub fn finite_congruence_closure(alg: &FinAlgebra, pairs: &[(usize, usize)]) -> Congruence {
    let n = alg.len();
    let mut uf = UnionFind::new(n);
    let mut work: VecDeque<(usize, usize)> = VecDeque::new();
    let merge = |uf: &mut UnionFind<usize>, work: &mut VecDeque<_>, a: usize, b: usize| {
        if uf.union(a, b) {
            work.push_back((a, b));
        }
    };
    for &(a, b) in pairs {
        merge(&mut uf, &mut work, a, b);
    }
    while let Some((a, b)) = work.pop_front() {
        merge(&mut uf, &mut work, alg.plus_of(a), alg.plus_of(b));
        merge(&mut uf, &mut work, alg.star_of(a), alg.star_of(b));
        for c in 0..n {
            merge(&mut uf, &mut work, alg.product(c, a), alg.product(c, b));
            merge(&mut uf, &mut work, alg.product(a, c), alg.product(b, c));
        }
    }
    Congruence::from_union_find(&uf, n)
}

/// A quotient algebra together with the canonical projection.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub algebra: FinAlgebra,
    pub projection: Vec<usize>,
}

pub fn quotient_finite(alg: &FinAlgebra, rho: &Congruence) -> Result<Quotient> {
    rho.check_compatible(alg)?;
    let blocks = rho.blocks();
    let names = blocks
        .iter()
        .map(|b| {
            if b.len() == 1 {
                alg.name(b[0]).to_string()
            } else {
                let parts: Vec<&str> = b.iter().map(|&i| alg.name(i)).collect();
                format!("[{}]", parts.join(","))
            }
        })
        .collect();
    let reps: Vec<usize> = blocks.iter().map(|b| b[0]).collect();
    let mul = reps
        .iter()
        .map(|&a| reps.iter().map(|&b| rho.block_of(alg.product(a, b))).collect())
        .collect();
    let plus = reps.iter().map(|&a| rho.block_of(alg.plus_of(a))).collect();
    let star = reps.iter().map(|&a| rho.block_of(alg.star_of(a))).collect();
    Ok(Quotient {
        algebra: FinAlgebra::new(names, mul, plus, star)?,
        projection: (0..alg.len()).map(|a| rho.block_of(a)).collect(),
    })
}
