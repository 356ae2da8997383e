//! Random words, trees and semidirect elements for randomized checks.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::actions::Tree;
use crate::semidirect::SdElement;
use crate::words::{AbelianElement, Alphabet, Letter, Word};

pub fn random_letter<R: Rng>(rng: &mut R, alphabet: &Alphabet) -> Letter {
    let c = *alphabet.gens().choose(rng).expect("nonempty alphabet");
    if rng.gen_bool(0.5) {
        Letter::pos(c)
    } else {
        Letter::neg(c)
    }
}

/// Reduced word of length uniform in `0..=max_len`.
pub fn random_word<R: Rng>(rng: &mut R, alphabet: &Alphabet, max_len: usize) -> Word {
    let n = rng.gen_range(0..=max_len);
    let mut w = Word::identity();
    while w.len() < n {
        w = w.push(random_letter(rng, alphabet));
    }
    w
}

pub fn random_positive_word<R: Rng>(rng: &mut R, alphabet: &Alphabet, max_len: usize) -> Word {
    let n = rng.gen_range(0..=max_len);
    let mut w = Word::identity();
    for _ in 0..n {
        w = w.push(Letter::pos(*alphabet.gens().choose(rng).expect("nonempty alphabet")));
    }
    w
}

/// Exponents uniform in `lo..=hi` for each generator.
pub fn random_abelian<R: Rng>(rng: &mut R, alphabet: &Alphabet, lo: i64, hi: i64) -> AbelianElement {
    AbelianElement::from_exponents(alphabet.gens().iter().map(|&c| (c, rng.gen_range(lo..=hi))))
}

/// The span of `seeds` grown by `extra` random leaf additions.
pub fn random_tree<R: Rng>(rng: &mut R, alphabet: &Alphabet, seeds: &[Word], extra: usize) -> Tree {
    let mut vs: Vec<Word> = Tree::span(seeds.iter().cloned())
        .expect("nonempty seeds")
        .vertices()
        .to_vec();
    for _ in 0..extra {
        let v = vs.choose(rng).expect("nonempty").push(random_letter(rng, alphabet));
        if !vs.contains(&v) {
            vs.push(v);
        }
    }
    Tree::from_vertices(vs).expect("leaf additions keep the tree connected")
}

/// A tree containing `ε` with at most `max_size` vertices.
pub fn random_y_tree<R: Rng>(rng: &mut R, alphabet: &Alphabet, max_size: usize) -> Tree {
    let extra = rng.gen_range(0..max_size.max(1));
    random_tree(rng, alphabet, &[Word::identity()], extra)
}

/// `(A, w)` with `ε, w ∈ A`.
pub fn random_r_element<R: Rng>(rng: &mut R, alphabet: &Alphabet, max_len: usize, max_extra: usize) -> SdElement<Tree, Word> {
    let w = random_positive_word(rng, alphabet, max_len);
    let extra = rng.gen_range(0..=max_extra);
    SdElement::new(random_tree(rng, alphabet, &[Word::identity(), w.clone()], extra), w)
}

/// `(A, w)` with `w` positive and `A` an arbitrary tree near the origin.
pub fn random_sd_element<R: Rng>(rng: &mut R, alphabet: &Alphabet, max_len: usize, max_extra: usize) -> SdElement<Tree, Word> {
    let w = random_positive_word(rng, alphabet, max_len);
    let root = random_word(rng, alphabet, max_len);
    let extra = rng.gen_range(0..=max_extra);
    SdElement::new(random_tree(rng, alphabet, &[root], extra), w)
}

/// Like [`random_sd_element`], but half of the draws land in `R`.
pub fn random_mixed_element<R: Rng>(rng: &mut R, alphabet: &Alphabet, max_len: usize, max_extra: usize) -> SdElement<Tree, Word> {
    if rng.gen_bool(0.5) {
        random_r_element(rng, alphabet, max_len, max_extra)
    } else {
        random_sd_element(rng, alphabet, max_len, max_extra)
    }
}
