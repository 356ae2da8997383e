//! Semidirect products `X ⋊ T` and `X ⋊ G` over a [`NiceAction`], the
//! subalgebra `R`, the pulldown `↓`, and the factorisable completion of a
//! finite semidirect quotient.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::actions::{NiceAction, Tree};
use crate::algebra::{finite_congruence_closure, quotient_finite, Congruence, FinAlgebra, Quotient, RestrictionAlgebra};
use crate::error::{Error, Result};
use crate::words::Word;

/// A pair `(a, t)` of a semilattice element and a group element.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SdElement<P, G> {
    pub first: P,
    pub second: G,
}

impl<P, G> SdElement<P, G> {
    pub fn new(first: P, second: G) -> Self {
        SdElement { first, second }
    }
}

impl<P: fmt::Debug, G: fmt::Debug> fmt::Debug for SdElement<P, G> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}, {:?})", self.first, self.second)
    }
}

impl fmt::Display for SdElement<Tree, Word> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.first, self.second)
    }
}

impl SdElement<Tree, Word> {
    /// The `(t·a, t)` form, with the translated tree first.
    pub fn translated_form(&self) -> String {
        format!("({}, {})", self.first.act(&self.second), self.second)
    }
}

impl FromStr for SdElement<Tree, Word> {
    type Err = Error;

    /// `({ε,a,ab}, ab)`
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let inner = s
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::parse(0, "element literal must be enclosed in parentheses"))?;
        let close = inner
            .find('}')
            .ok_or_else(|| Error::parse(1, "missing tree literal"))?;
        let (tree, rest) = inner.split_at(close + 1);
        let word = rest
            .trim()
            .strip_prefix(',')
            .ok_or_else(|| Error::parse(close + 2, "expected `,` after the tree"))?;
        Ok(SdElement::new(tree.parse()?, word.trim().parse()?))
    }
}

pub type Elem<A> = SdElement<<A as NiceAction>::Point, <A as NiceAction>::Group>;

/// `X ⋊ T` (or `X ⋊ G` when the action is wrapped in
/// [`OverGroup`](crate::actions::OverGroup)), in the `(a, t)` representation.
#[derive(Clone, Debug)]
pub struct Semidirect<A> {
    pub action: A,
}

impl<A: NiceAction> Semidirect<A> {
    pub fn new(action: A) -> Self {
        Semidirect { action }
    }

    /// `(𝟏, 1)`, the identity of `R`.
    pub fn r_identity(&self) -> Elem<A> {
        SdElement::new(self.action.one(), self.action.group_identity())
    }

    pub fn projection(&self, p: A::Point) -> Elem<A> {
        SdElement::new(p, self.action.group_identity())
    }

    fn require_monoid(&self, x: &Elem<A>) -> Result<()> {
        if self.action.in_monoid(&x.second) {
            Ok(())
        } else {
            Err(Error::Domain(format!("second component {:?} is not in the monoid", x.second)))
        }
    }

    /// `x ∈ R` iff `A ∈ Y` and `A ≤ ā·𝟏`.
    pub fn in_r(&self, x: &Elem<A>) -> Result<bool> {
        self.require_monoid(x)?;
        let one = self.action.one();
        Ok(self.action.leq(&x.first, &one) && self.action.leq(&x.first, &self.action.act(&x.second, &one)))
    }

    /// The greatest element of `R` below `x`: `(𝟏 ∧ A ∧ ā·𝟏, ā)`.
    pub fn down(&self, x: &Elem<A>) -> Result<Elem<A>> {
        self.require_monoid(x)?;
        Ok(self.down_unchecked(x))
    }

    pub(crate) fn down_unchecked(&self, x: &Elem<A>) -> Elem<A> {
        let one = self.action.one();
        let a = self.action.meet(&self.action.meet(&one, &x.first), &self.action.act(&x.second, &one));
        SdElement::new(a, x.second.clone())
    }

    /// `(A, a) ≤ (B, b)` iff `A ≤ B` and `a = b`.
    pub fn leq(&self, x: &Elem<A>, y: &Elem<A>) -> bool {
        x.second == y.second && self.action.leq(&x.first, &y.first)
    }
}

impl<A: NiceAction> RestrictionAlgebra for Semidirect<A> {
    type Elem = Elem<A>;

    /// `(a, t)(b, u) = (a ∧ t·b, tu)`
    fn mul(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        let act = &self.action;
        SdElement::new(act.meet(&x.first, &act.act(&x.second, &y.first)), act.group_mul(&x.second, &y.second))
    }

    fn plus(&self, x: &Self::Elem) -> Self::Elem {
        SdElement::new(x.first.clone(), self.action.group_identity())
    }

    /// `(a, t)* = (t⁻¹·a, 1)`
    fn star(&self, x: &Self::Elem) -> Self::Elem {
        let act = &self.action;
        SdElement::new(act.act(&act.group_inv(&x.second), &x.first), act.group_identity())
    }

    /// σ is the kernel of the second projection.
    fn sigma(&self, a: &Self::Elem, b: &Self::Elem) -> Result<bool> {
        Ok(a.second == b.second)
    }
}

pub fn in_r<A: NiceAction>(sd: &Semidirect<A>, x: &Elem<A>) -> Result<bool> {
    sd.in_r(x)
}

pub fn down<A: NiceAction>(sd: &Semidirect<A>, x: &Elem<A>) -> Result<Elem<A>> {
    sd.down(x)
}

/// A finite monoid `T` acting on a finite semilattice `Y` by automorphisms.
#[derive(Clone, Debug)]
pub struct FiniteMonoidAction {
    pub y_names: Vec<String>,
    pub meet: Vec<Vec<usize>>,
    pub t_names: Vec<String>,
    pub t_mul: Vec<Vec<usize>>,
    /// `act[t][y] = t·y`
    pub act: Vec<Vec<usize>>,
}

impl FiniteMonoidAction {
    /// Validates the semilattice, the monoid and the action.
    pub fn new(
        y_names: Vec<String>,
        meet: Vec<Vec<usize>>,
        t_names: Vec<String>,
        t_mul: Vec<Vec<usize>>,
        act: Vec<Vec<usize>>,
    ) -> Result<Self> {
        let inst = FiniteMonoidAction {
            y_names,
            meet,
            t_names,
            t_mul,
            act,
        };
        inst.validate()?;
        Ok(inst)
    }

    fn validate(&self) -> Result<()> {
        let (ny, nt) = (self.y_names.len(), self.t_names.len());
        let sq = |m: &Vec<Vec<usize>>, n: usize| m.len() == n && m.iter().all(|r| r.len() == n && r.iter().all(|&v| v < n));
        if ny == 0 || nt == 0 || !sq(&self.meet, ny) || !sq(&self.t_mul, nt) {
            return Err(Error::Instance("malformed semilattice or monoid table".into()));
        }
        let m = &self.meet;
        for a in 0..ny {
            if m[a][a] != a {
                return Err(Error::Instance("meet is not idempotent".into()));
            }
            for b in 0..ny {
                if m[a][b] != m[b][a] {
                    return Err(Error::Instance("meet is not commutative".into()));
                }
                for c in 0..ny {
                    if m[m[a][b]][c] != m[a][m[b][c]] {
                        return Err(Error::Instance("meet is not associative".into()));
                    }
                }
            }
        }
        let t = &self.t_mul;
        for a in 0..nt {
            for b in 0..nt {
                for c in 0..nt {
                    if t[t[a][b]][c] != t[a][t[b][c]] {
                        return Err(Error::Instance("monoid product is not associative".into()));
                    }
                }
            }
        }
        let one = self.t_identity().ok_or_else(|| Error::Instance("monoid has no identity".into()))?;
        if self.act.len() != nt || self.act.iter().any(|r| r.len() != ny || r.iter().any(|&v| v >= ny)) {
            return Err(Error::Instance("action table must be |T|×|Y|".into()));
        }
        if self.act[one].iter().enumerate().any(|(y, &v)| v != y) {
            return Err(Error::Instance("identity does not act trivially".into()));
        }
        for (ti, row) in self.act.iter().enumerate() {
            let image: BTreeSet<usize> = row.iter().copied().collect();
            if image.len() != ny {
                return Err(Error::Instance(format!("{} does not act bijectively", self.t_names[ti])));
            }
            for a in 0..ny {
                for b in 0..ny {
                    if row[m[a][b]] != m[row[a]][row[b]] {
                        return Err(Error::Instance(format!("{} does not preserve meets", self.t_names[ti])));
                    }
                }
            }
            for u in 0..nt {
                for y in 0..ny {
                    if self.act[t[ti][u]][y] != row[self.act[u][y]] {
                        return Err(Error::Instance("action is not a monoid homomorphism".into()));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn t_identity(&self) -> Option<usize> {
        let n = self.t_names.len();
        (0..n).find(|&e| (0..n).all(|x| self.t_mul[e][x] == x && self.t_mul[x][e] == x))
    }

    fn inverse_act(&self, t: usize, y: usize) -> usize {
        self.act[t].iter().position(|&v| v == y).expect("bijective action")
    }

    pub fn index(&self, y: usize, t: usize) -> usize {
        y * self.t_names.len() + t
    }

    /// `Y ⋊ T` as a table algebra on pairs `(t·a, t)`, indexed `y·|T| + t`.
    pub fn semidirect_table(&self) -> FinAlgebra {
        let (ny, nt) = (self.y_names.len(), self.t_names.len());
        let one = self.t_identity().expect("validated");
        let n = ny * nt;
        let pair = |i: usize| (i / nt, i % nt);
        let names = (0..n)
            .map(|i| {
                let (y, t) = pair(i);
                format!("({},{})", self.y_names[y], self.t_names[t])
            })
            .collect();
        let mul = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let ((x, t), (y, u)) = (pair(i), pair(j));
                        self.index(self.meet[x][self.act[t][y]], self.t_mul[t][u])
                    })
                    .collect()
            })
            .collect();
        let plus = (0..n).map(|i| self.index(pair(i).0, one)).collect();
        let star = (0..n)
            .map(|i| {
                let (x, t) = pair(i);
                self.index(self.inverse_act(t, x), one)
            })
            .collect();
        FinAlgebra::new(names, mul, plus, star).expect("well-formed tables")
    }

    /// `Y^e`: a new top element `e` fixed by every `t`.
    pub fn with_new_identity(&self) -> FiniteMonoidAction {
        let ny = self.y_names.len();
        let e = ny;
        let mut y_names = self.y_names.clone();
        y_names.push("e".to_string());
        let meet = (0..=ny)
            .map(|a| {
                (0..=ny)
                    .map(|b| match (a == e, b == e) {
                        (true, _) => b,
                        (_, true) => a,
                        _ => self.meet[a][b],
                    })
                    .collect()
            })
            .collect();
        let act = self
            .act
            .iter()
            .map(|row| row.iter().copied().chain(std::iter::once(e)).collect())
            .collect();
        FiniteMonoidAction {
            y_names,
            meet,
            t_names: self.t_names.clone(),
            t_mul: self.t_mul.clone(),
            act,
        }
    }
}

/// The factorisable completion `F = (Y^e ⋊ T)/ρ_e` of `F⁻ = (Y ⋊ T)/ρ`.
#[derive(Clone, Debug)]
pub struct Completion {
    pub old: FinAlgebra,
    pub rho: Congruence,
    pub f_minus: Quotient,
    pub extended: FinAlgebra,
    pub rho_e: Congruence,
    pub f: Quotient,
    /// `F⁻ → F`, class to class.
    pub embedding: Vec<usize>,
    /// Classes of the adjoined elements `(e, t)`.
    pub new_classes: BTreeSet<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CompletionReport {
    pub f_minus_size: usize,
    pub f_size: usize,
    pub identities_hold: bool,
    pub factorisable: bool,
    pub units_are_new_classes: bool,
    pub embedding_injective: bool,
    pub embedding_morphism: bool,
    pub image_is_complement_of_units: bool,
}

impl CompletionReport {
    pub fn all_pass(&self) -> bool {
        self.identities_hold
            && self.factorisable
            && self.units_are_new_classes
            && self.embedding_injective
            && self.embedding_morphism
            && self.image_is_complement_of_units
    }
}

/// Adjoins a fresh identity `e` to `Y`, extends `ρ` by equality on the new
/// elements, and builds the quotient together with the embedding of `F⁻`.
///
/// `rho_pairs` index elements of `Y ⋊ T` as in
/// [`FiniteMonoidAction::index`].
pub fn adjoin_identity_new(inst: &FiniteMonoidAction, rho_pairs: &[(usize, usize)]) -> Result<Completion> {
    let old = inst.semidirect_table();
    if let Some(&(a, b)) = rho_pairs.iter().find(|(a, b)| *a >= old.len() || *b >= old.len()) {
        return Err(Error::Input(format!("pair ({a},{b}) outside Y⋊T")));
    }
    let rho = finite_congruence_closure(&old, rho_pairs);
    let f_minus = quotient_finite(&old, &rho)?;

    let ext_inst = inst.with_new_identity();
    let extended = ext_inst.semidirect_table();
    let nt = inst.t_names.len();
    let e = inst.y_names.len();
    // Old pairs keep their index in the extended table.
    let fresh = rho.num_blocks();
    let labels: Vec<usize> = (0..extended.len())
        .map(|i| if i / nt == e { fresh + i % nt } else { rho.block_of(i) })
        .collect();
    let rho_e = Congruence::from_labels(&labels);
    let f = quotient_finite(&extended, &rho_e)?;

    let blocks = rho.blocks();
    let embedding = blocks.iter().map(|b| rho_e.block_of(b[0])).collect();
    let new_classes = (0..nt).map(|t| rho_e.block_of(ext_inst.index(e, t))).collect();
    Ok(Completion {
        old,
        rho,
        f_minus,
        extended,
        rho_e,
        f,
        embedding,
        new_classes,
    })
}

impl Completion {
    pub fn report(&self) -> CompletionReport {
        let fm = &self.f_minus.algebra;
        let f = &self.f.algebra;
        let image: BTreeSet<usize> = self.embedding.iter().copied().collect();
        let units = f.units();
        let complement: BTreeSet<usize> = f.elements().filter(|c| !units.contains(c)).collect();
        let emb = &self.embedding;
        let morphism = fm.elements().all(|x| {
            emb[fm.plus_of(x)] == f.plus_of(emb[x])
                && emb[fm.star_of(x)] == f.star_of(emb[x])
                && fm.elements().all(|y| emb[fm.product(x, y)] == f.product(emb[x], emb[y]))
        });
        CompletionReport {
            f_minus_size: fm.len(),
            f_size: f.len(),
            identities_hold: f.check_identities().all_pass() && fm.check_identities().all_pass(),
            factorisable: f.is_factorisable(),
            units_are_new_classes: units == self.new_classes,
            embedding_injective: image.len() == emb.len(),
            embedding_morphism: morphism,
            image_is_complement_of_units: image == complement,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::actions::FreeGroupAction;
    use crate::algebra::check_identities;
    use crate::words::Alphabet;

    fn sd() -> Semidirect<FreeGroupAction> {
        Semidirect::new(FreeGroupAction::new(Alphabet::first(2)))
    }

    fn e(s: &str) -> SdElement<Tree, Word> {
        s.parse().unwrap()
    }

    #[test]
    fn operations() {
        let s = sd();
        let x = e("({ε,a}, a)");
        assert_eq!(s.mul(&x, &x), e("({ε,a,aa}, aa)"));
        assert_eq!(s.plus(&x), e("({ε,a}, ε)"));
        assert_eq!(s.star(&x), e("({A,ε}, ε)"));
    }

    #[test]
    fn membership_in_r() {
        let s = sd();
        assert!(s.in_r(&e("({ε,a}, a)")).unwrap());
        assert!(!s.in_r(&e("({ε}, a)")).unwrap());
        assert!(s.in_r(&e("({ε}, ε)")).unwrap());
        assert!(matches!(s.in_r(&e("({ε,A}, A)")), Err(Error::Domain(_))));
    }

    #[test]
    fn pulldown() {
        let s = sd();
        assert_eq!(s.down(&e("({a,ab}, b)")).unwrap(), e("({ε,a,ab,b}, b)"));
        assert_eq!(s.down(&e("({ε}, a)")).unwrap(), e("({ε,a}, a)"));
        let r = e("({ε,a,ab,B}, ab)");
        assert_eq!(s.down(&r).unwrap(), r);
    }

    #[test]
    fn natural_order_matches_componentwise() {
        let s = sd();
        let (x, y) = (e("({ε,a,b}, a)"), e("({ε,a}, a)"));
        assert!(crate::algebra::natural_leq(&s, &x, &y));
        assert!(s.leq(&x, &y));
        assert!(!crate::algebra::natural_leq(&s, &y, &x));
    }

    #[test]
    fn literal_roundtrip() {
        let x = e("({ε,a,ab}, ab)");
        assert_eq!(x.to_string().parse::<SdElement<Tree, Word>>().unwrap(), x);
        assert_eq!(x.translated_form(), "({ab,aba,abab}, ab)");
        assert!("{ε}, a".parse::<SdElement<Tree, Word>>().is_err());
    }

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn completion_of_trivial_instance_is_two_chain() {
        let inst = FiniteMonoidAction::new(names(&["y"]), vec![vec![0]], names(&["1"]), vec![vec![0]], vec![vec![0]]).unwrap();
        let c = adjoin_identity_new(&inst, &[]).unwrap();
        assert_eq!(c.f.algebra.len(), 2);
        assert!(c.f.algebra.check_identities().all_pass());
        assert!(c.report().all_pass());
    }

    #[test]
    fn completion_of_chain_by_z2() {
        let inst = FiniteMonoidAction::new(
            names(&["1", "f"]),
            vec![vec![0, 1], vec![1, 1]],
            names(&["1", "g"]),
            vec![vec![0, 1], vec![1, 0]],
            vec![vec![0, 1], vec![0, 1]],
        )
        .unwrap();
        let c = adjoin_identity_new(&inst, &[]).unwrap();
        assert_eq!(c.f.algebra.len(), 6);
        let rep = c.report();
        assert!(rep.factorisable && rep.all_pass(), "{rep:?}");
        // ρ_e coincides with the congruence generated by ρ on Y^e ⋊ T
        assert_eq!(finite_congruence_closure(&c.extended, &[]), c.rho_e);
    }

    #[test]
    fn action_must_be_by_automorphisms() {
        let bad = FiniteMonoidAction::new(
            names(&["1", "f"]),
            vec![vec![0, 1], vec![1, 1]],
            names(&["1", "g"]),
            vec![vec![0, 1], vec![1, 1]],
            vec![vec![0, 1], vec![1, 1]],
        );
        assert!(matches!(bad, Err(Error::Instance(_))));
    }

    #[test]
    fn semidirect_table_is_restriction_semigroup() {
        let inst = FiniteMonoidAction::new(
            names(&["1", "p", "q", "0"]),
            vec![vec![0, 1, 2, 3], vec![1, 1, 3, 3], vec![2, 3, 2, 3], vec![3, 3, 3, 3]],
            names(&["1", "s"]),
            vec![vec![0, 1], vec![1, 0]],
            vec![vec![0, 1, 2, 3], vec![0, 2, 1, 3]],
        )
        .unwrap();
        let t = inst.semidirect_table();
        let rep = t.check_identities();
        assert!(rep.all_pass(), "{rep:?}");
        assert!(t.is_proper());
        let all: Vec<usize> = t.elements().collect();
        let triples = all.iter().map(|&x| (x, x, x));
        assert!(check_identities(&t, triples).all_pass());
    }
}
