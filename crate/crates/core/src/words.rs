//! Free monoid, free group and free abelian group arithmetic.
//!
//! Wire syntax: a lowercase ASCII letter is a generator, the matching
//! uppercase letter is its inverse, so `aB` is `a b⁻¹`. The identity is
//! written `ε` (the empty string and `1` are accepted on input).

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A generator or the inverse of a generator.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Letter {
    pub gen: char,
    pub inverse: bool,
}

impl Letter {
    pub const fn pos(gen: char) -> Self {
        Letter {
            gen,
            inverse: false,
        }
    }

    pub const fn neg(gen: char) -> Self {
        Letter { gen, inverse: true }
    }

    pub fn inv(self) -> Self {
        Letter {
            gen: self.gen,
            inverse: !self.inverse,
        }
    }

    pub fn is_positive(self) -> bool {
        !self.inverse
    }

    /// Parses a single wire character.
    pub fn from_wire(c: char) -> Option<Self> {
        if c.is_ascii_lowercase() {
            Some(Letter::pos(c))
        } else if c.is_ascii_uppercase() {
            Some(Letter::neg(c.to_ascii_lowercase()))
        } else {
            None
        }
    }

    pub fn wire(self) -> char {
        if self.inverse {
            self.gen.to_ascii_uppercase()
        } else {
            self.gen
        }
    }
}

// Positive letters sort before inverse letters, then alphabetically.
impl Ord for Letter {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.inverse, self.gen).cmp(&(other.inverse, other.gen))
    }
}

impl PartialOrd for Letter {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inverse {
            write!(f, "{}⁻¹", self.gen)
        } else {
            write!(f, "{}", self.gen)
        }
    }
}

/// The finite generating set Ω.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alphabet {
    gens: Vec<char>,
}

impl Alphabet {
    pub fn new(gens: &str) -> Result<Self> {
        let mut v: Vec<char> = Vec::new();
        for (pos, c) in gens.chars().enumerate() {
            if !c.is_ascii_lowercase() {
                return Err(Error::parse(pos, format!("`{c}` is not a lowercase generator")));
            }
            if !v.contains(&c) {
                v.push(c);
            }
        }
        if v.is_empty() {
            return Err(Error::Input("alphabet must be nonempty".into()));
        }
        v.sort_unstable();
        Ok(Alphabet { gens: v })
    }

    /// The alphabet `a, b, c, ...` with `n` generators (`1 <= n <= 26`).
    pub fn first(n: usize) -> Self {
        assert!((1..=26).contains(&n), "alphabet size must be in 1..=26");
        Alphabet {
            gens: (0..n as u8).map(|i| (b'a' + i) as char).collect(),
        }
    }

    pub fn gens(&self) -> &[char] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn contains(&self, c: char) -> bool {
        self.gens.binary_search(&c).is_ok()
    }

    /// All generators followed by all inverses.
    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        self.gens
            .iter()
            .map(|&g| Letter::pos(g))
            .chain(self.gens.iter().map(|&g| Letter::neg(g)))
    }

    pub fn check_word(&self, w: &Word) -> Result<()> {
        match w.letters().iter().find(|l| !self.contains(l.gen)) {
            Some(l) => Err(Error::Alphabet(l.gen)),
            None => Ok(()),
        }
    }

    pub fn parse_word(&self, s: &str) -> Result<Word> {
        let w: Word = s.parse()?;
        self.check_word(&w)?;
        Ok(w)
    }

    /// Every reduced word of length at most `max_len`, shortest first.
    pub fn reduced_words(&self, max_len: usize) -> Vec<Word> {
        let mut out = vec![Word::identity()];
        let mut frontier = vec![Word::identity()];
        for _ in 0..max_len {
            let mut next = Vec::new();
            for w in &frontier {
                for l in self.letters() {
                    if w.last() != Some(l.inv()) {
                        let mut v = w.0.clone();
                        v.push(l);
                        next.push(Word(v));
                    }
                }
            }
            out.extend(next.iter().cloned());
            frontier = next;
        }
        out
    }

    /// Every positive word of length at most `max_len`, shortest first.
    pub fn positive_words(&self, max_len: usize) -> Vec<Word> {
        let mut out = vec![Word::identity()];
        let mut frontier = vec![Word::identity()];
        for _ in 0..max_len {
            let mut next = Vec::new();
            for w in &frontier {
                for &g in &self.gens {
                    let mut v = w.0.clone();
                    v.push(Letter::pos(g));
                    next.push(Word(v));
                }
            }
            out.extend(next.iter().cloned());
            frontier = next;
        }
        out
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for g in &self.gens {
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

/// A reduced word over Ω ∪ Ω⁻¹. Positive words are the elements of Ω*.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(Vec<Letter>);

/// Free group normal form of a raw letter sequence.
pub fn reduce(raw: &[Letter]) -> Word {
    let mut stack: Vec<Letter> = Vec::with_capacity(raw.len());
    for &l in raw {
        if stack.last() == Some(&l.inv()) {
            stack.pop();
        } else {
            stack.push(l);
        }
    }
    Word(stack)
}

pub fn group_mul(g: &Word, h: &Word) -> Word {
    g.mul(h)
}

pub fn invert(g: &Word) -> Word {
    g.inverse()
}

impl Word {
    pub fn identity() -> Self {
        Word(Vec::new())
    }

    pub fn letter(l: Letter) -> Self {
        Word(vec![l])
    }

    pub fn gen(c: char) -> Self {
        Word(vec![Letter::pos(c)])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    pub fn last(&self) -> Option<Letter> {
        self.0.last().copied()
    }

    pub fn first(&self) -> Option<Letter> {
        self.0.first().copied()
    }

    /// True when the word lies in Ω*.
    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|l| l.is_positive())
    }

    /// True when the word lies in (Ω*)⁻¹.
    pub fn is_negative(&self) -> bool {
        self.0.iter().all(|l| l.inverse)
    }

    pub fn mul(&self, other: &Word) -> Word {
        // Cancel at the seam only; both sides are already reduced.
        let mut k = 0;
        let (a, b) = (&self.0, &other.0);
        while k < a.len() && k < b.len() && a[a.len() - 1 - k] == b[k].inv() {
            k += 1;
        }
        let mut v = Vec::with_capacity(a.len() + b.len() - 2 * k);
        v.extend_from_slice(&a[..a.len() - k]);
        v.extend_from_slice(&b[k..]);
        Word(v)
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inv()).collect())
    }

    /// Appends one letter, cancelling if needed.
    pub fn push(&self, l: Letter) -> Word {
        let mut v = self.0.clone();
        if v.last() == Some(&l.inv()) {
            v.pop();
        } else {
            v.push(l);
        }
        Word(v)
    }

    /// Prefix of length `n`.
    pub fn prefix(&self, n: usize) -> Word {
        Word(self.0[..n].to_vec())
    }

    /// Length of the longest common prefix.
    pub fn common_prefix_len(&self, other: &Word) -> usize {
        self.0
            .iter()
            .zip(other.0.iter())
            .take_while(|(x, y)| x == y)
            .count()
    }

    /// Human notation, e.g. `ab⁻¹a`; `ε` for the identity.
    pub fn pretty(&self) -> String {
        if self.0.is_empty() {
            return "ε".to_string();
        }
        self.0.iter().map(|l| l.to_string()).collect()
    }
}

impl From<Letter> for Word {
    fn from(l: Letter) -> Self {
        Word::letter(l)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "ε");
        }
        for l in &self.0 {
            write!(f, "{}", l.wire())?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Parses wire syntax and reduces the result.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "ε" || s == "1" {
            return Ok(Word::identity());
        }
        let mut raw = Vec::with_capacity(s.len());
        for (pos, c) in s.chars().enumerate() {
            match Letter::from_wire(c) {
                Some(l) => raw.push(l),
                None => return Err(Error::parse(pos, format!("unexpected character `{c}`"))),
            }
        }
        Ok(reduce(&raw))
    }
}

/// Splits a reduced word into maximal runs of equal sign.
///
/// Each block is a nonempty element of Ω* or (Ω*)⁻¹ and consecutive blocks
/// have opposite signs. The identity yields no blocks.
pub fn nice_factorization_free(g: &Word) -> Vec<Word> {
    g.0.chunk_by(|x, y| x.inverse == y.inverse)
        .map(|run| Word(run.to_vec()))
        .collect()
}

/// Human notation for a factorization, blocks separated by spaces.
pub fn pretty_factorization(blocks: &[Word]) -> String {
    if blocks.is_empty() {
        return "ε".to_string();
    }
    blocks
        .iter()
        .map(Word::pretty)
        .collect::<Vec<_>>()
        .join(" ")
}

/// An element of the free abelian group on Ω, stored as sparse exponents.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct AbelianElement(BTreeMap<char, i64>);

impl AbelianElement {
    pub fn identity() -> Self {
        AbelianElement(BTreeMap::new())
    }

    pub fn from_exponents<I: IntoIterator<Item = (char, i64)>>(it: I) -> Self {
        let mut m = BTreeMap::new();
        for (c, e) in it {
            *m.entry(c).or_insert(0) += e;
        }
        m.retain(|_, e| *e != 0);
        AbelianElement(m)
    }

    pub fn gen(c: char) -> Self {
        Self::from_exponents([(c, 1)])
    }

    pub fn exponent(&self, c: char) -> i64 {
        self.0.get(&c).copied().unwrap_or(0)
    }

    pub fn exponents(&self) -> &BTreeMap<char, i64> {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    /// True when all exponents are nonnegative, i.e. the element is in T.
    pub fn is_nonnegative(&self) -> bool {
        self.0.values().all(|&e| e > 0)
    }

    pub fn is_nonpositive(&self) -> bool {
        self.0.values().all(|&e| e < 0)
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::from_exponents(self.0.iter().chain(other.0.iter()).map(|(&c, &e)| (c, e)))
    }

    pub fn inverse(&self) -> Self {
        AbelianElement(self.0.iter().map(|(&c, &e)| (c, -e)).collect())
    }

    /// Coordinatewise minimum of exponent vectors.
    pub fn coord_min(&self, other: &Self) -> Self {
        let keys = self.0.keys().chain(other.0.keys());
        Self::from_exponents(
            keys.map(|&c| (c, self.exponent(c).min(other.exponent(c))))
                .collect::<BTreeMap<_, _>>(),
        )
    }

    pub fn support(&self) -> impl Iterator<Item = char> + '_ {
        self.0.keys().copied()
    }
}

/// Splits `g` as `u⁻¹t` with `u, t` nonnegative and of disjoint support.
pub fn abelian_normal_form(g: &AbelianElement) -> (AbelianElement, AbelianElement) {
    let u = AbelianElement::from_exponents(g.0.iter().filter(|(_, &e)| e < 0).map(|(&c, &e)| (c, -e)));
    let t = AbelianElement::from_exponents(g.0.iter().filter(|(_, &e)| e > 0).map(|(&c, &e)| (c, e)));
    (u, t)
}

impl fmt::Display for AbelianElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (c, e) in &self.0 {
            if *e == 1 {
                write!(f, "{c}")?;
            } else {
                write!(f, "{c}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for AbelianElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for AbelianElement {
    type Err = Error;

    /// Accepts `x^2y^-3`, `xxYYY`, or `1`/`ε` for the identity. An uppercase
    /// letter negates its exponent.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "1" || s == "ε" {
            return Ok(Self::identity());
        }
        let chars: Vec<char> = s.chars().collect();
        let mut i = 0;
        let mut parts = Vec::new();
        while i < chars.len() {
            let l = Letter::from_wire(chars[i])
                .ok_or_else(|| Error::parse(i, format!("unexpected character `{}`", chars[i])))?;
            i += 1;
            let mut e: i64 = 1;
            if i < chars.len() && chars[i] == '^' {
                i += 1;
                let start = i;
                if i < chars.len() && chars[i] == '-' {
                    i += 1;
                }
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let num: String = chars[start..i].iter().collect();
                e = num
                    .parse()
                    .map_err(|_| Error::parse(start, "expected an integer exponent"))?;
            }
            parts.push((l.gen, if l.inverse { -e } else { e }));
        }
        Ok(Self::from_exponents(parts))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn reduce_examples() {
        let (a, b) = (Letter::pos('a'), Letter::pos('b'));
        assert_eq!(reduce(&[a, a.inv()]), Word::identity());
        assert_eq!(reduce(&[a, b, b.inv(), a.inv()]), Word::identity());
        assert_eq!(reduce(&[a, b.inv(), b, a]), w("aa"));
    }

    #[test]
    fn group_ops() {
        assert_eq!(group_mul(&w("a"), &w("A")), Word::identity());
        assert_eq!(invert(&w("ab")), w("BA"));
        assert_eq!(group_mul(&w("ab"), &w("Bc")), w("ac"));
    }

    #[test]
    fn nice_factorization_examples() {
        assert_eq!(nice_factorization_free(&w("aBa")), vec![w("a"), w("B"), w("a")]);
        assert!(nice_factorization_free(&Word::identity()).is_empty());
        assert_eq!(nice_factorization_free(&w("aaB")), vec![w("aa"), w("B")]);
        assert_eq!(pretty_factorization(&nice_factorization_free(&w("aBa"))), "a b⁻¹ a");
    }

    #[test]
    fn abelian_examples() {
        let g: AbelianElement = "x^2y^-3".parse().unwrap();
        let (u, t) = abelian_normal_form(&g);
        assert_eq!(u, "y^3".parse().unwrap());
        assert_eq!(t, "x^2".parse().unwrap());
        let (u, t) = abelian_normal_form(&AbelianElement::identity());
        assert!(u.is_identity() && t.is_identity());
        let (u, t) = abelian_normal_form(&"XY".parse().unwrap());
        assert_eq!(u, "xy".parse().unwrap());
        assert!(t.is_identity());
    }

    #[test]
    fn unknown_letter_rejected() {
        let al = Alphabet::new("ab").unwrap();
        assert_eq!(al.parse_word("ac"), Err(Error::Alphabet('c')));
        assert!(matches!("a1b".parse::<Word>(), Err(Error::Parse { pos: 1, .. })));
    }

    #[test]
    fn display_roundtrip() {
        for s in ["ε", "aB", "abAB", "ccc"] {
            assert_eq!(w(s).to_string(), s);
        }
        assert_eq!("x^2Y^3".parse::<AbelianElement>().unwrap().to_string(), "x^2y^-3");
    }

    #[test]
    fn reduced_word_counts() {
        // 1 + 4 + 12 + 36 over two generators
        assert_eq!(Alphabet::first(2).reduced_words(3).len(), 53);
        assert_eq!(Alphabet::first(2).positive_words(3).len(), 15);
    }
}
