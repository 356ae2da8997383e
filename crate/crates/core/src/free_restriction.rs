//! The free restriction monoid `FR(Ω)`: pairs `(A, w)` with `A` a finite
//! subtree containing `ε` and `w` a positive vertex of `A`.

use std::collections::HashMap;
use std::fmt;

use crate::actions::{trees_in_y, FreeGroupAction, Tree};
use crate::algebra::RestrictionAlgebra;
use crate::error::{Error, Result};
use crate::semidirect::{SdElement, Semidirect};
use crate::words::{Alphabet, Letter, Word};

pub type FrElement = SdElement<Tree, Word>;

#[derive(Clone, Debug)]
pub struct FreeRestriction {
    sd: Semidirect<FreeGroupAction>,
}

impl FreeRestriction {
    pub fn new(alphabet: Alphabet) -> Self {
        FreeRestriction {
            sd: Semidirect::new(FreeGroupAction::new(alphabet)),
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.sd.action.alphabet
    }

    pub fn semidirect(&self) -> &Semidirect<FreeGroupAction> {
        &self.sd
    }

    /// `a ↦ ({ε,a}, a)`
    pub fn generator(&self, c: char) -> Result<FrElement> {
        if !self.alphabet().contains(c) {
            return Err(Error::Alphabet(c));
        }
        let a = Word::gen(c);
        Ok(SdElement::new(Tree::span([Word::identity(), a.clone()])?, a))
    }

    pub fn validate(&self, x: &FrElement) -> Result<()> {
        for v in x.first.vertices() {
            self.alphabet().check_word(v)?;
        }
        self.alphabet().check_word(&x.second)?;
        if !x.second.is_positive() {
            return Err(Error::Domain(format!("{} is not a positive word", x.second)));
        }
        if !self.sd.in_r(x)? {
            return Err(Error::Domain(format!("{x} is not in FR: the tree must contain ε and {}", x.second)));
        }
        Ok(())
    }

    pub fn is_element(&self, x: &FrElement) -> bool {
        self.validate(x).is_ok()
    }

    /// Every element whose tree has at most `max_size` vertices.
    pub fn elements_up_to(&self, max_size: usize) -> Vec<FrElement> {
        trees_in_y(self.alphabet(), max_size)
            .into_iter()
            .flat_map(|t| {
                let ends: Vec<Word> = t.vertices().iter().filter(|w| w.is_positive()).cloned().collect();
                ends.into_iter().map(move |w| SdElement::new(t.clone(), w))
            })
            .collect()
    }

    /// A generator term evaluating back to `x`: the projection of the tree
    /// rooted at `ε`, followed by the letters of the second component.
    pub fn decompose(&self, x: &FrElement) -> Result<GenTerm> {
        self.validate(x)?;
        let proj = root_projection(&x.first);
        let path = x
            .second
            .letters()
            .iter()
            .map(|l| GenTerm::Gen(l.gen))
            .fold(GenTerm::One, GenTerm::mul);
        Ok(GenTerm::mul(proj, path))
    }

    /// The image of `x` under the morphism extending `assignment`.
    pub fn evaluate_morphism<T: RestrictionAlgebra>(
        &self,
        x: &FrElement,
        target: &T,
        assignment: &HashMap<char, T::Elem>,
    ) -> Result<T::Elem> {
        if let Some(&c) = self.alphabet().gens().iter().find(|c| !assignment.contains_key(c)) {
            return Err(Error::Input(format!("assignment has no value for `{c}`")));
        }
        self.decompose(x)?.eval(target, assignment)
    }
}

/// Projection term for a tree containing `ε`, rooted there.
fn root_projection(tree: &Tree) -> GenTerm {
    let mut edges: Vec<Letter> = tree
        .vertices()
        .iter()
        .filter(|v| v.len() == 1)
        .map(|v| v.letters()[0])
        .collect();
    edges.sort();
    let mut out = GenTerm::One;
    for l in edges {
        let back = Word::letter(l.inv());
        let sub: Vec<Word> = tree
            .vertices()
            .iter()
            .filter(|v| v.first() == Some(l))
            .map(|v| back.mul(v))
            .chain(std::iter::once(Word::identity()))
            .collect();
        let sub = Tree::from_vertices(sub).expect("a branch of a tree is a tree");
        let inner = root_projection(&sub);
        let gen = GenTerm::Gen(l.gen);
        let factor = if l.is_positive() {
            GenTerm::Plus(Box::new(GenTerm::mul(gen, inner)))
        } else {
            GenTerm::Star(Box::new(GenTerm::mul(inner, gen)))
        };
        out = GenTerm::mul(out, factor);
    }
    out
}

/// A term over generator symbols.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum GenTerm {
    One,
    Gen(char),
    Mul(Box<GenTerm>, Box<GenTerm>),
    Plus(Box<GenTerm>),
    Star(Box<GenTerm>),
}

impl GenTerm {
    /// Product that drops identity factors.
    pub fn mul(a: GenTerm, b: GenTerm) -> GenTerm {
        match (a, b) {
            (GenTerm::One, b) => b,
            (a, GenTerm::One) => a,
            (a, b) => GenTerm::Mul(Box::new(a), Box::new(b)),
        }
    }

    pub fn eval<T: RestrictionAlgebra>(&self, target: &T, assignment: &HashMap<char, T::Elem>) -> Result<T::Elem> {
        Ok(match self {
            GenTerm::One => target
                .identity()
                .ok_or_else(|| Error::Domain("target has no identity element".into()))?,
            GenTerm::Gen(c) => assignment
                .get(c)
                .cloned()
                .ok_or_else(|| Error::Input(format!("assignment has no value for `{c}`")))?,
            GenTerm::Mul(a, b) => target.mul(&a.eval(target, assignment)?, &b.eval(target, assignment)?),
            GenTerm::Plus(a) => target.plus(&a.eval(target, assignment)?),
            GenTerm::Star(a) => target.star(&a.eval(target, assignment)?),
        })
    }

    fn fmt_factor(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenTerm::Mul(..) => write!(f, "({self})"),
            _ => write!(f, "{self}"),
        }
    }
}

impl fmt::Display for GenTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenTerm::One => write!(f, "1"),
            GenTerm::Gen(c) => write!(f, "{c}"),
            GenTerm::Mul(a, b) => {
                a.fmt_factor(f)?;
                write!(f, "·")?;
                b.fmt_factor(f)
            }
            GenTerm::Plus(a) => write!(f, "({a})⁺"),
            GenTerm::Star(a) => write!(f, "({a})*"),
        }
    }
}

/// The reduced restriction monoid `Ω*`: `⁺` and `*` are constantly `ε`.
#[derive(Clone, Copy, Debug, Default)]
pub struct FreeMonoid;

impl RestrictionAlgebra for FreeMonoid {
    type Elem = Word;

    fn mul(&self, a: &Word, b: &Word) -> Word {
        a.mul(b)
    }

    fn plus(&self, _a: &Word) -> Word {
        Word::identity()
    }

    fn star(&self, _a: &Word) -> Word {
        Word::identity()
    }

    fn identity(&self) -> Option<Word> {
        Some(Word::identity())
    }

    fn sigma(&self, a: &Word, b: &Word) -> Result<bool> {
        Ok(a == b)
    }
}

impl RestrictionAlgebra for FreeRestriction {
    type Elem = FrElement;

    fn mul(&self, a: &FrElement, b: &FrElement) -> FrElement {
        self.sd.mul(a, b)
    }

    fn plus(&self, a: &FrElement) -> FrElement {
        self.sd.plus(a)
    }

    fn star(&self, a: &FrElement) -> FrElement {
        self.sd.star(a)
    }

    fn identity(&self) -> Option<FrElement> {
        Some(self.sd.r_identity())
    }

    fn sigma(&self, a: &FrElement, b: &FrElement) -> Result<bool> {
        self.sd.sigma(a, b)
    }
}
