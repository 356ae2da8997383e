//! Partial actions of a free monoid on a finite semilattice by isomorphisms
//! between principal ideals, the restriction monoid `M(Ω*, Y)`, and the
//! semilattice of classes `[A, g]` on which the free group acts.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use petgraph::unionfind::UnionFind;
use serde::{Deserialize, Serialize};

use crate::actions::NiceAction;
use crate::algebra::{check_identities, is_proper_on, natural_leq, IdentityReport, RestrictionAlgebra};
use crate::error::{Error, Result};
use crate::semidirect::{SdElement, Semidirect};
use crate::words::{nice_factorization_free, Alphabet, Letter, Word};

/// A finite meet semilattice with a greatest element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Semilattice {
    pub names: Vec<String>,
    meet: Vec<Vec<usize>>,
    top: usize,
}

impl Semilattice {
    pub fn new(names: Vec<String>, meet: Vec<Vec<usize>>) -> Result<Self> {
        let n = names.len();
        if n == 0 || meet.len() != n || meet.iter().any(|r| r.len() != n || r.iter().any(|&v| v >= n)) {
            return Err(Error::Instance("meet table must be n×n with entries below n".into()));
        }
        for a in 0..n {
            if meet[a][a] != a {
                return Err(Error::Instance("meet is not idempotent".into()));
            }
            for b in 0..n {
                if meet[a][b] != meet[b][a] {
                    return Err(Error::Instance("meet is not commutative".into()));
                }
                for c in 0..n {
                    if meet[meet[a][b]][c] != meet[a][meet[b][c]] {
                        return Err(Error::Instance("meet is not associative".into()));
                    }
                }
            }
        }
        let top = (0..n)
            .find(|&t| (0..n).all(|a| meet[t][a] == a))
            .ok_or_else(|| Error::Instance("semilattice has no identity element".into()))?;
        Ok(Semilattice { names, meet, top })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a][b]
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.meet[a][b] == a
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::Input(format!("unknown semilattice element `{name}`")))
    }

    pub fn down(&self, a: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(move |&x| self.leq(x, a))
    }
}

/// A partial bijection of `Y`, stored as `Some(image)` on its domain.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PartialIso(pub Vec<Option<usize>>);

impl PartialIso {
    pub fn identity(n: usize) -> Self {
        PartialIso((0..n).map(Some).collect())
    }

    pub fn apply(&self, a: usize) -> Option<usize> {
        self.0[a]
    }

    pub fn inverse(&self) -> Self {
        let mut out = vec![None; self.0.len()];
        for (a, b) in self.0.iter().enumerate() {
            if let Some(b) = b {
                out[*b] = Some(a);
            }
        }
        PartialIso(out)
    }

    /// `self ∘ inner`: apply `inner` first.
    pub fn after(&self, inner: &PartialIso) -> Self {
        PartialIso(inner.0.iter().map(|x| x.and_then(|b| self.0[b])).collect())
    }

    pub fn domain(&self) -> Vec<usize> {
        (0..self.0.len()).filter(|&a| self.0[a].is_some()).collect()
    }

    pub fn range(&self) -> Vec<usize> {
        let mut r: Vec<usize> = self.0.iter().flatten().copied().collect();
        r.sort_unstable();
        r
    }
}

#[derive(Serialize, Deserialize)]
struct YJson {
    names: Vec<String>,
    meet: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct LetterJson {
    domain: String,
    range: String,
    map: BTreeMap<String, String>,
}

#[derive(Serialize, Deserialize)]
struct PartialActionJson {
    y: YJson,
    letters: BTreeMap<char, LetterJson>,
}

/// `a ↦ α_a`, each `α_a` an isomorphism between principal ideals of `Y`,
/// extended to words letter by letter.
#[derive(Clone, Debug)]
pub struct PartialAction {
    pub y: Semilattice,
    pub alphabet: Alphabet,
    letters: BTreeMap<char, PartialIso>,
}

impl PartialAction {
    /// `maps[a] = (domain top, range top, pairs)`.
    pub fn new(y: Semilattice, maps: BTreeMap<char, (usize, usize, Vec<(usize, usize)>)>) -> Result<Self> {
        let gens: String = maps.keys().collect();
        let alphabet = Alphabet::new(&gens)?;
        let n = y.len();
        let mut letters = BTreeMap::new();
        for (c, (dom, ran, pairs)) in maps {
            if dom >= n || ran >= n {
                return Err(Error::Instance(format!("α_{c}: ideal generator out of range")));
            }
            let mut iso = vec![None; n];
            for (a, b) in pairs {
                if a >= n || b >= n || iso[a].replace(b).is_some() {
                    return Err(Error::Instance(format!("α_{c}: malformed map")));
                }
            }
            let iso = PartialIso(iso);
            let want_dom: Vec<usize> = y.down(dom).collect();
            let want_ran: Vec<usize> = y.down(ran).collect();
            if iso.domain() != want_dom || iso.range() != want_ran {
                return Err(Error::Instance(format!("α_{c} must map the ideal below its domain onto the ideal below its range")));
            }
            for &a in &want_dom {
                for &b in &want_dom {
                    if iso.apply(y.meet(a, b)) != Some(y.meet(iso.apply(a).unwrap(), iso.apply(b).unwrap())) {
                        return Err(Error::Instance(format!("α_{c} does not preserve meets")));
                    }
                }
            }
            letters.insert(c, iso);
        }
        Ok(PartialAction { y, alphabet, letters })
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let j: PartialActionJson = serde_json::from_str(s).map_err(|e| Error::Input(e.to_string()))?;
        let y = Semilattice::new(j.y.names, j.y.meet)?;
        let mut maps = BTreeMap::new();
        for (c, l) in j.letters {
            let pairs = l
                .map
                .iter()
                .map(|(a, b)| Ok((y.index_of(a)?, y.index_of(b)?)))
                .collect::<Result<_>>()?;
            maps.insert(c, (y.index_of(&l.domain)?, y.index_of(&l.range)?, pairs));
        }
        Self::new(y, maps)
    }

    pub fn to_json(&self) -> String {
        let n = self.y.len();
        let letters = self
            .letters
            .iter()
            .map(|(&c, iso)| {
                let top = |v: Vec<usize>| *v.iter().find(|&&m| v.iter().all(|&a| self.y.leq(a, m))).expect("principal");
                let map = iso
                    .domain()
                    .into_iter()
                    .map(|a| (self.y.names[a].clone(), self.y.names[iso.apply(a).unwrap()].clone()))
                    .collect();
                let lj = LetterJson {
                    domain: self.y.names[top(iso.domain())].clone(),
                    range: self.y.names[top(iso.range())].clone(),
                    map,
                };
                (c, lj)
            })
            .collect();
        let j = PartialActionJson {
            y: YJson {
                names: self.y.names.clone(),
                meet: (0..n).map(|a| (0..n).map(|b| self.y.meet(a, b)).collect()).collect(),
            },
            letters,
        };
        serde_json::to_string_pretty(&j).expect("serializable")
    }

    pub fn name(&self, a: usize) -> &str {
        &self.y.names[a]
    }

    fn letter_iso(&self, l: Letter) -> PartialIso {
        let iso = &self.letters[&l.gen];
        if l.inverse {
            iso.inverse()
        } else {
            iso.clone()
        }
    }

    /// `α_g = α_{l₁} ∘ ⋯ ∘ α_{lₖ}` with `α_{a⁻¹} = α_a⁻¹`.
    pub fn extend_to_group(&self, g: &Word) -> Result<PartialIso> {
        self.alphabet.check_word(g)?;
        Ok(g
            .letters()
            .iter()
            .rev()
            .fold(PartialIso::identity(self.y.len()), |acc, &l| self.letter_iso(l).after(&acc)))
    }

    /// `g ◇ A`
    pub fn diamond(&self, g: &Word, a: usize) -> Option<usize> {
        g.letters().iter().rev().try_fold(a, |x, &l| self.letter_iso(l).apply(x))
    }

    /// `A ∘ g`
    pub fn circ(&self, a: usize, g: &Word) -> Option<usize> {
        self.diamond(&g.inverse(), a)
    }

    /// `M_g`, the greatest element of the range of `α_g`.
    pub fn m_identity(&self, g: &Word) -> Result<usize> {
        let range = self.extend_to_group(g)?.range();
        range
            .iter()
            .copied()
            .find(|&m| range.iter().all(|&a| self.y.leq(a, m)))
            .ok_or_else(|| Error::NoGreatestElement(g.to_string()))
    }
}

/// `(A, t)` with `A ∘ t` defined.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct MElement {
    pub a: usize,
    pub t: Word,
}

/// `M(Ω*, Y)`.
#[derive(Clone, Debug)]
pub struct MAlgebra<'a> {
    pub pa: &'a PartialAction,
}

impl<'a> MAlgebra<'a> {
    pub fn new(pa: &'a PartialAction) -> Self {
        MAlgebra { pa }
    }

    pub fn element(&self, a: usize, t: Word) -> Result<MElement> {
        if !t.is_positive() {
            return Err(Error::Domain(format!("{t} is not a positive word")));
        }
        if self.pa.circ(a, &t).is_none() {
            return Err(Error::Domain(format!("{} ∘ {t} is undefined", self.pa.name(a))));
        }
        Ok(MElement { a, t })
    }

    /// All elements with `|t| ≤ max_len`.
    pub fn elements_up_to(&self, max_len: usize) -> Vec<MElement> {
        self.pa
            .alphabet
            .positive_words(max_len)
            .into_iter()
            .flat_map(|t| {
                (0..self.pa.y.len())
                    .filter(|&a| self.pa.circ(a, &t).is_some())
                    .map(|a| MElement { a, t: t.clone() })
                    .collect::<Vec<_>>()
            })
            .collect()
    }

    pub fn format(&self, x: &MElement) -> String {
        format!("({}, {})", self.pa.name(x.a), x.t)
    }
}

pub fn m_product(pa: &PartialAction, x: &MElement, y: &MElement) -> MElement {
    let at = pa.circ(x.a, &x.t).expect("valid element");
    let a = pa.diamond(&x.t, pa.y.meet(at, y.a)).expect("ideal below the domain");
    MElement { a, t: x.t.mul(&y.t) }
}

pub fn m_plus(_pa: &PartialAction, x: &MElement) -> MElement {
    MElement { a: x.a, t: Word::identity() }
}

pub fn m_star(pa: &PartialAction, x: &MElement) -> MElement {
    MElement {
        a: pa.circ(x.a, &x.t).expect("valid element"),
        t: Word::identity(),
    }
}

impl RestrictionAlgebra for MAlgebra<'_> {
    type Elem = MElement;

    fn mul(&self, a: &MElement, b: &MElement) -> MElement {
        m_product(self.pa, a, b)
    }

    fn plus(&self, a: &MElement) -> MElement {
        m_plus(self.pa, a)
    }

    fn star(&self, a: &MElement) -> MElement {
        m_star(self.pa, a)
    }

    fn identity(&self) -> Option<MElement> {
        Some(MElement { a: self.pa.y.top(), t: Word::identity() })
    }

    fn sigma(&self, a: &MElement, b: &MElement) -> Result<bool> {
        Ok(a.t == b.t)
    }
}

/// The class `[A, g]`, kept in canonical form: `g` least by length, then
/// lexicographically, among the representatives.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct ChiClass {
    pub a: usize,
    pub g: Word,
}

/// `X` together with the action `h·[A, g] = [A, hg]`.
#[derive(Clone, Debug)]
pub struct ChiAction<'a> {
    pub pa: &'a PartialAction,
}

impl<'a> ChiAction<'a> {
    pub fn new(pa: &'a PartialAction) -> Self {
        ChiAction { pa }
    }

    /// Canonical form of `[A, g]`.
    pub fn class(&self, a: usize, g: &Word) -> ChiClass {
        let gi = g.inverse();
        for len in 0..=g.len() {
            let mut words: Vec<Word> = self.pa.alphabet.reduced_words(len).into_iter().filter(|w| w.len() == len).collect();
            words.sort();
            for h in words {
                if let Some(b) = self.pa.circ(a, &gi.mul(&h)) {
                    return ChiClass { a: b, g: h };
                }
            }
        }
        unreachable!("h = g always represents the class")
    }

    /// `(A, g)` and `(B, h)` are in one class iff `B = A ∘ g⁻¹h`.
    pub fn same_class(&self, (a, g): (usize, &Word), (b, h): (usize, &Word)) -> bool {
        self.pa.circ(a, &g.inverse().mul(h)) == Some(b)
    }

    pub fn embed(&self, a: usize) -> ChiClass {
        ChiClass { a, g: Word::identity() }
    }

    pub fn in_y(&self, x: &ChiClass) -> bool {
        x.g.is_identity()
    }

    /// `[A,g] ∧ [B,h] = [k ◇ ((A ∧ M_k) ∘ k ∧ B), g]` with `k = g⁻¹h`.
    pub fn chi_meet(&self, x: &ChiClass, y: &ChiClass) -> ChiClass {
        let pa = self.pa;
        let k = x.g.inverse().mul(&y.g);
        let mk = pa.m_identity(&k).expect("finite ranges are principal");
        let inner = pa.circ(pa.y.meet(x.a, mk), &k).expect("below M_k");
        let c = pa.diamond(&k, pa.y.meet(inner, y.a)).expect("below the domain of α_k");
        self.class(c, &x.g)
    }

    pub fn format(&self, x: &ChiClass) -> String {
        format!("[{}, {}]", self.pa.name(x.a), x.g)
    }

    /// Classes whose canonical word has length at most `max_len`.
    pub fn classes_up_to(&self, max_len: usize) -> Vec<ChiClass> {
        let mut out: Vec<ChiClass> = self
            .pa
            .alphabet
            .reduced_words(max_len)
            .iter()
            .flat_map(|g| (0..self.pa.y.len()).map(move |a| (a, g.clone())))
            .map(|(a, g)| self.class(a, &g))
            .filter(|c| c.g.len() <= max_len)
            .collect();
        out.sort();
        out.dedup();
        out
    }
}

impl NiceAction for ChiAction<'_> {
    type Point = ChiClass;
    type Group = Word;

    fn meet(&self, a: &ChiClass, b: &ChiClass) -> ChiClass {
        self.chi_meet(a, b)
    }

    fn one(&self) -> ChiClass {
        self.embed(self.pa.y.top())
    }

    fn act(&self, h: &Word, x: &ChiClass) -> ChiClass {
        self.class(x.a, &h.mul(&x.g))
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
        Ok(nice_factorization_free(g))
    }
}

impl fmt::Display for MElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.a, self.t)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PrefixViolation {
    pub g: String,
    pub h: String,
    pub meet: String,
    pub expected: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct PrefixReport {
    pub max_len: usize,
    pub pairs_checked: usize,
    pub violations: Vec<PrefixViolation>,
}

impl PrefixReport {
    pub fn all_pass(&self) -> bool {
        self.violations.is_empty()
    }
}

/// For reduced `g, h` without a common nonempty prefix, checks that
/// `[𝟏,g] ∧ [𝟏,h]` lies in `Y` and equals `[h ◇ M_{h⁻¹g}, 1]`.
pub fn check_prefix_criterion(pa: &PartialAction, max_len: usize) -> PrefixReport {
    let chi = ChiAction::new(pa);
    let words = pa.alphabet.reduced_words(max_len);
    let top = pa.y.top();
    let mut checked = 0;
    let mut violations = Vec::new();
    for g in &words {
        for h in &words {
            if g.common_prefix_len(h) > 0 {
                continue;
            }
            checked += 1;
            let m = chi.chi_meet(&chi.class(top, g), &chi.class(top, h));
            let k = h.inverse().mul(g);
            let expected = pa
                .m_identity(&k)
                .ok()
                .and_then(|mk| pa.diamond(h, mk))
                .map(|a| chi.embed(a));
            if !chi.in_y(&m) || expected.as_ref() != Some(&m) {
                violations.push(PrefixViolation {
                    g: g.to_string(),
                    h: h.to_string(),
                    meet: chi.format(&m),
                    expected: expected.map_or("undefined".into(), |e| chi.format(&e)),
                });
            }
        }
    }
    PrefixReport {
        max_len,
        pairs_checked: checked,
        violations,
    }
}

/// `M_g = g ◇ M_{g⁻¹}` for every reduced `g` with `|g| ≤ max_len`; returns
/// the words where it fails.
pub fn check_mg_identity(pa: &PartialAction, max_len: usize) -> Result<Vec<Word>> {
    let mut bad = Vec::new();
    for g in pa.alphabet.reduced_words(max_len) {
        let lhs = pa.m_identity(&g)?;
        let rhs = pa.diamond(&g, pa.m_identity(&g.inverse())?);
        if rhs != Some(lhs) {
            bad.push(g);
        }
    }
    Ok(bad)
}

#[derive(Clone, Debug, Serialize)]
pub struct PartialActionReport {
    pub max_len: usize,
    pub m_elements: usize,
    pub identities_hold: bool,
    pub proper: bool,
    pub mg_identity_failures: Vec<String>,
    pub every_sigma_class_has_greatest: bool,
    pub matches_r: bool,
    pub chi_meet_representative_independent: bool,
    pub chi_meet_semilattice: bool,
    pub prefix: PrefixReport,
}

impl PartialActionReport {
    pub fn all_pass(&self) -> bool {
        self.identities_hold
            && self.proper
            && self.mg_identity_failures.is_empty()
            && self.every_sigma_class_has_greatest
            && self.matches_r
            && self.chi_meet_representative_independent
            && self.chi_meet_semilattice
            && self.prefix.all_pass()
    }
}

/// Every `σ`-class `{(A, t)}` has greatest element `(M_t, t)`.
pub fn check_perfect(pa: &PartialAction, max_len: usize) -> Result<bool> {
    let m = MAlgebra::new(pa);
    let elems = m.elements_up_to(max_len);
    for t in pa.alphabet.positive_words(max_len) {
        let top = MElement { a: pa.m_identity(&t)?, t: t.clone() };
        if !elems.contains(&top) || elems.iter().filter(|x| x.t == t).any(|x| !natural_leq(&m, x, &top)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `(A, t) ↦ ([A, 1], t)` is a (2,1,1)-morphism into `X ⋊ Ω*` whose image
/// is exactly the part of `R` with `|t| ≤ max_len`.
pub fn check_matches_r(pa: &PartialAction, max_len: usize) -> Result<bool> {
    let m = MAlgebra::new(pa);
    let chi = ChiAction::new(pa);
    let sd = Semidirect::new(chi.clone());
    let iota = |x: &MElement| SdElement::new(chi.embed(x.a), x.t.clone());
    let elems = m.elements_up_to(max_len);
    for t in pa.alphabet.positive_words(max_len) {
        for a in 0..pa.y.len() {
            let in_m = pa.circ(a, &t).is_some();
            if sd.in_r(&SdElement::new(chi.embed(a), t.clone()))? != in_m {
                return Ok(false);
            }
        }
    }
    let short = m.elements_up_to(max_len / 2);
    for x in &elems {
        if iota(&m.plus(x)) != sd.plus(&iota(x)) || iota(&m.star(x)) != sd.star(&iota(x)) {
            return Ok(false);
        }
    }
    for x in &short {
        for y in &short {
            if iota(&m.mul(x, y)) != sd.mul(&iota(x), &iota(y)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// All checks on one instance.
pub fn check_partial_action(pa: &PartialAction, max_len: usize) -> Result<PartialActionReport> {
    let m = MAlgebra::new(pa);
    let elems = m.elements_up_to(max_len);
    let short = m.elements_up_to(max_len.min(2));
    let mut triples = Vec::new();
    for x in &short {
        for y in &short {
            for z in &short {
                triples.push((x.clone(), y.clone(), z.clone()));
            }
        }
    }
    let identities: IdentityReport = check_identities(&m, triples);
    let proper = is_proper_on(&m, &elems)?;
    let mg = check_mg_identity(pa, max_len)?;

    let chi = ChiAction::new(pa);
    let classes = chi.classes_up_to(max_len.min(2));
    let mut independent = true;
    let mut semilattice = true;
    for x in &classes {
        for y in &classes {
            let xy = chi.chi_meet(x, y);
            semilattice &= xy == chi.chi_meet(y, x) && chi.chi_meet(x, x) == *x;
            for z in &classes {
                semilattice &= chi.chi_meet(&xy, z) == chi.chi_meet(x, &chi.chi_meet(y, z));
            }
            // another representative of x: (A ∘ g⁻¹h, h) for h = g·l
            for l in pa.alphabet.letters() {
                let h = x.g.push(l);
                if let Some(b) = pa.circ(x.a, &x.g.inverse().mul(&h)) {
                    let alt = ChiClass { a: b, g: h };
                    independent &= chi.class(alt.a, &alt.g) == *x && chi.chi_meet(&alt, y) == xy;
                }
            }
        }
    }
    Ok(PartialActionReport {
        max_len,
        m_elements: elems.len(),
        identities_hold: identities.all_pass(),
        proper,
        mg_identity_failures: mg.iter().map(|g| g.to_string()).collect(),
        every_sigma_class_has_greatest: check_perfect(pa, max_len)?,
        matches_r: check_matches_r(pa, max_len)?,
        chi_meet_representative_independent: independent,
        chi_meet_semilattice: semilattice,
        prefix: check_prefix_criterion(pa, max_len),
    })
}

/// Congruence on `Y` generated by `pairs` inside `M(Ω*, Y)`: closed under
/// meets and under `A ↦ a ◇ (A ∧ M_{a⁻¹})`, `A ↦ (A ∧ M_a) ∘ a`.
pub fn projection_congruence(pa: &PartialAction, pairs: &[(usize, usize)]) -> Vec<usize> {
    let n = pa.y.len();
    let mut ops: Vec<Vec<usize>> = (0..n).map(|c| (0..n).map(|a| pa.y.meet(a, c)).collect()).collect();
    for l in pa.alphabet.letters() {
        let w = Word::letter(l);
        let m = pa.m_identity(&w.inverse()).expect("principal");
        ops.push((0..n).map(|a| pa.diamond(&w, pa.y.meet(a, m)).expect("below the domain")).collect());
    }
    let mut uf = UnionFind::new(n);
    for &(a, b) in pairs {
        uf.union(a, b);
    }
    loop {
        let mut changed = false;
        for op in &ops {
            for a in 0..n {
                for b in 0..n {
                    if uf.equiv(a, b) {
                        changed |= uf.union(op[a], op[b]);
                    }
                }
            }
        }
        if !changed {
            return (0..n).map(|a| uf.find(a)).collect();
        }
    }
}

/// The congruence on classes `[A, g]` with `|g| ≤ max_len` generated by
/// `([A,1], [B,1])` for the given pairs, closed under meets and letter
/// translations that stay within the bound; restricted back to `Y`.
pub fn extended_congruence_on_y(pa: &PartialAction, pairs: &[(usize, usize)], max_len: usize) -> Vec<usize> {
    let chi = ChiAction::new(pa);
    let classes = chi.classes_up_to(max_len);
    let index: HashMap<&ChiClass, usize> = classes.iter().enumerate().map(|(i, c)| (c, i)).collect();
    let n = classes.len();
    let mut ops: Vec<Vec<Option<usize>>> = classes
        .iter()
        .map(|c| classes.iter().map(|x| index.get(&chi.chi_meet(x, c)).copied()).collect())
        .collect();
    for l in pa.alphabet.letters() {
        let w = Word::letter(l);
        ops.push(classes.iter().map(|x| index.get(&chi.act(&w, x)).copied()).collect());
    }
    let mut uf = UnionFind::new(n);
    for &(a, b) in pairs {
        uf.union(index[&chi.embed(a)], index[&chi.embed(b)]);
    }
    loop {
        let mut changed = false;
        for op in &ops {
            for a in 0..n {
                for b in (a + 1)..n {
                    if let (Some(x), Some(y)) = (op[a], op[b]) {
                        if uf.equiv(a, b) {
                            changed |= uf.union(x, y);
                        }
                    }
                }
            }
        }
        if !changed {
            break;
        }
    }
    (0..pa.y.len()).map(|a| uf.find(index[&chi.embed(a)])).collect()
}

/// Whether two labelings describe the same partition.
pub fn same_partition(a: &[usize], b: &[usize]) -> bool {
    a.len() == b.len() && (0..a.len()).all(|i| (0..a.len()).all(|j| (a[i] == a[j]) == (b[i] == b[j])))
}

/// The instance `Y = {1 > e}`, `α_a` the identity of `{e}`.
pub fn chain2_instance() -> PartialAction {
    let y = Semilattice::new(vec!["1".into(), "e".into()], vec![vec![0, 1], vec![1, 1]]).expect("chain");
    PartialAction::new(y, BTreeMap::from([('a', (1, 1, vec![(1, 1)]))])).expect("valid")
}

/// `Y = {1 > e > f}`, `α_a` the identity of `↓e`, `α_b` the identity of `{f}`.
pub fn chain3_instance() -> PartialAction {
    let y = Semilattice::new(
        vec!["1".into(), "e".into(), "f".into()],
        vec![vec![0, 1, 2], vec![1, 1, 2], vec![2, 2, 2]],
    )
    .expect("chain");
    PartialAction::new(
        y,
        BTreeMap::from([('a', (1, 1, vec![(1, 1), (2, 2)])), ('b', (2, 2, vec![(2, 2)]))]),
    )
    .expect("valid")
}

/// `Y = {1, p, q, 0}` with `p ∧ q = 0`; `α_a: ↓p → ↓q`, `α_b` swaps `p, q`.
pub fn diamond_instance() -> PartialAction {
    let y = Semilattice::new(
        vec!["1".into(), "p".into(), "q".into(), "0".into()],
        vec![vec![0, 1, 2, 3], vec![1, 1, 3, 3], vec![2, 3, 2, 3], vec![3, 3, 3, 3]],
    )
    .expect("diamond");
    PartialAction::new(
        y,
        BTreeMap::from([
            ('a', (1, 2, vec![(1, 2), (3, 3)])),
            ('b', (0, 0, vec![(0, 0), (1, 2), (2, 1), (3, 3)])),
        ]),
    )
    .expect("valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn m_operations_on_chain() {
        let pa = chain2_instance();
        let m = MAlgebra::new(&pa);
        let x = m.element(1, w("a")).unwrap();
        assert_eq!(m.mul(&x, &x), MElement { a: 1, t: w("aa") });
        assert_eq!(m.plus(&x), MElement { a: 1, t: w("") });
        assert_eq!(m.star(&x), MElement { a: 1, t: w("") });
        assert!(m.element(0, w("a")).is_err());
    }

    #[test]
    fn group_extension() {
        let pa = chain3_instance();
        assert_eq!(pa.extend_to_group(&w("")).unwrap(), PartialIso::identity(3));
        assert_eq!(pa.extend_to_group(&w("A")).unwrap(), pa.extend_to_group(&w("a")).unwrap().inverse());
        let ab = pa.extend_to_group(&w("aB")).unwrap();
        assert_eq!(ab.domain(), vec![2]);
        assert_eq!(ab.apply(2), Some(2));
        let d = diamond_instance();
        assert_eq!(d.diamond(&w("a"), 1), Some(2));
        assert_eq!(d.circ(2, &w("a")), Some(1));
        assert_eq!(d.diamond(&w("ba"), 1), Some(1));
    }

    #[test]
    fn mg_values() {
        let pa = chain2_instance();
        assert_eq!(pa.m_identity(&w("")).unwrap(), 0);
        assert_eq!(pa.m_identity(&w("a")).unwrap(), 1);
        for inst in [chain2_instance(), chain3_instance(), diamond_instance()] {
            assert!(check_mg_identity(&inst, 4).unwrap().is_empty());
        }
    }

    #[test]
    fn chi_meet_examples() {
        let pa = chain2_instance();
        let chi = ChiAction::new(&pa);
        let (one, one_a) = (chi.class(0, &w("")), chi.class(0, &w("a")));
        assert_eq!(chi.chi_meet(&one, &one_a), chi.embed(1));
        assert_eq!(chi.chi_meet(&one_a, &one_a), one_a);
        let d = diamond_instance();
        let chi = ChiAction::new(&d);
        assert_eq!(chi.chi_meet(&chi.embed(1), &chi.embed(2)), chi.embed(3));
    }

    #[test]
    fn canonical_classes() {
        let pa = chain2_instance();
        let chi = ChiAction::new(&pa);
        // [e, a] = [e, 1] since e ∘ a = e
        assert_eq!(chi.class(1, &w("a")), chi.embed(1));
        assert!(chi.same_class((1, &w("a")), (1, &w(""))));
        assert_ne!(chi.class(0, &w("a")), chi.embed(0));
    }

    #[test]
    fn prefix_criterion_holds() {
        for inst in [chain2_instance(), chain3_instance(), diamond_instance()] {
            let r = check_prefix_criterion(&inst, 3);
            assert!(r.all_pass(), "{:?}", r.violations);
            assert!(r.pairs_checked > 0);
        }
    }

    #[test]
    fn full_report() {
        for inst in [chain2_instance(), diamond_instance()] {
            let r = check_partial_action(&inst, 3).unwrap();
            assert!(r.all_pass(), "{r:?}");
        }
    }

    #[test]
    fn json_roundtrip() {
        let pa = diamond_instance();
        let back = PartialAction::from_json(&pa.to_json()).unwrap();
        assert_eq!(back.to_json(), pa.to_json());
        let bad = r#"{"y":{"names":["1","e"],"meet":[[0,1],[1,1]]},"letters":{"a":{"domain":"1","range":"e","map":{"1":"e"}}}}"#;
        assert!(matches!(PartialAction::from_json(bad), Err(Error::Instance(_))));
    }

    #[test]
    fn congruence_extends_on_chain() {
        let pa = chain3_instance();
        for pairs in [vec![(0, 1)], vec![(1, 2)], vec![]] {
            let m_side = projection_congruence(&pa, &pairs);
            let x_side = extended_congruence_on_y(&pa, &pairs, 3);
            assert!(same_partition(&m_side, &x_side), "{pairs:?}: {m_side:?} vs {x_side:?}");
        }
    }
}
