//! Proper covers of finite restriction semigroups, built on a bounded
//! fragment of `(X/ε) ⋊ Ω*`.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use serde::Serialize;

use crate::actions::{trees_in_y, Tree};
use crate::algebra::{FinAlgebra, RestrictionAlgebra};
use crate::chains::{saturate_epsilon, BoundedCongruence};
use crate::error::{Error, Result};
use crate::free_restriction::{FrElement, FreeRestriction};
use crate::words::{Alphabet, Word};

/// `S¹`: `S` itself when it has an identity, else `S` with a new one.
pub fn with_identity(s: &FinAlgebra) -> (FinAlgebra, bool) {
    if s.identity_element().is_some() {
        return (s.clone(), false);
    }
    let n = s.len();
    let mut names = s.names().to_vec();
    let mut fresh = "1".to_string();
    while names.contains(&fresh) {
        fresh.push('\'');
    }
    names.push(fresh);
    let mul = (0..=n)
        .map(|a| {
            (0..=n)
                .map(|b| match (a == n, b == n) {
                    (true, _) => b,
                    (_, true) => a,
                    _ => s.product(a, b),
                })
                .collect()
        })
        .collect();
    let plus = (0..=n).map(|a| if a == n { n } else { s.plus_of(a) }).collect();
    let star = (0..=n).map(|a| if a == n { n } else { s.star_of(a) }).collect();
    (FinAlgebra::new(names, mul, plus, star).expect("extended tables are valid"), true)
}

#[derive(Clone, Debug, Serialize)]
pub struct Generator {
    pub letter: char,
    pub element: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct FragmentEntry {
    pub element: String,
    pub class: usize,
    pub word: String,
    pub image: String,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct CoverChecks {
    /// The cover map `([A], w) ↦ φ(A, w)` does not depend on the representative.
    pub well_defined: bool,
    /// `φ` commutes with the operations, and the operations of the fragment
    /// respect `ε`, wherever results stay within the bound.
    pub morphism: bool,
    pub projection_separating: bool,
    /// Equal `*` and equal second components force equality.
    pub proper: bool,
    pub surjective: bool,
    pub stabilized: bool,
}

impl CoverChecks {
    pub fn all_pass(&self) -> bool {
        self.well_defined && self.morphism && self.projection_separating && self.proper && self.surjective && self.stabilized
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CoverReport {
    pub bound: usize,
    pub source_size: usize,
    pub adjoined_identity: bool,
    pub omega: Vec<Generator>,
    pub rho_p_pairs: Vec<(String, String)>,
    pub epsilon_classes: usize,
    pub epsilon_blocks: Vec<Vec<String>>,
    pub fragment: Vec<FragmentEntry>,
    pub checks: CoverChecks,
}

impl CoverReport {
    pub fn all_pass(&self) -> bool {
        self.checks.all_pass()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn summary(&self) -> String {
        let mut s = String::new();
        let c = &self.checks;
        let _ = writeln!(s, "source size      {}{}", self.source_size, if self.adjoined_identity { " (identity adjoined)" } else { "" });
        let omega: Vec<String> = self.omega.iter().map(|g| format!("{}↦{}", g.letter, g.element)).collect();
        let _ = writeln!(s, "generators       {}", omega.join(" "));
        let _ = writeln!(s, "bound            {}", self.bound);
        let _ = writeln!(s, "projection pairs {}", self.rho_p_pairs.len());
        let _ = writeln!(s, "epsilon classes  {}", self.epsilon_classes);
        let _ = writeln!(s, "fragment size    {}", self.fragment.len());
        for (name, ok) in [
            ("well-defined", c.well_defined),
            ("morphism", c.morphism),
            ("projection-separating", c.projection_separating),
            ("proper", c.proper),
            ("surjective", c.surjective),
            ("stabilized", c.stabilized),
        ] {
            let _ = writeln!(s, "{name:<22} {}", if ok { "yes" } else { "NO" });
        }
        s
    }
}

/// Builds the cover of `s` on trees with at most `bound` vertices.
pub fn build_proper_cover(s: &FinAlgebra, bound: usize) -> Result<CoverReport> {
    let report = s.check_identities();
    if !report.all_pass() {
        return Err(Error::Input(format!("not a restriction semigroup:\n{report}")));
    }
    if s.len() > 26 {
        return Err(Error::Input("at most 26 elements are supported".into()));
    }
    if bound == 0 {
        return Err(Error::Input("bound must be positive".into()));
    }
    let (s1, adjoined) = with_identity(s);
    let letters: String = (0..s.len()).map(|i| (b'a' + i as u8) as char).collect();
    let alphabet = Alphabet::new(&letters)?;
    let fr = FreeRestriction::new(alphabet.clone());
    let assignment: HashMap<char, usize> = letters.chars().zip(0..).collect();
    let phi = |x: &FrElement| fr.evaluate_morphism(x, &s1, &assignment);

    let trees = trees_in_y(&alphabet, bound);
    let mut by_image: BTreeMap<usize, Vec<Tree>> = BTreeMap::new();
    for t in &trees {
        by_image.entry(phi(&FrElement::new(t.clone(), Word::identity()))?).or_default().push(t.clone());
    }
    let pairs: Vec<(Tree, Tree)> = by_image
        .values()
        .flat_map(|ts| ts.windows(2).map(|w| (w[0].clone(), w[1].clone())))
        .collect();
    let eps = saturate_epsilon(&alphabet, &pairs, bound)?;

    let fragment = fr.elements_up_to(bound);
    let images: Vec<usize> = fragment.iter().map(&phi).collect::<Result<_>>()?;
    let class = |x: &FrElement| eps.class_of(&x.first).expect("fragment trees lie in the universe");
    let keys: Vec<(usize, Word)> = fragment.iter().map(|x| (class(x), x.second.clone())).collect();
    let position: HashMap<&FrElement, usize> = fragment.iter().enumerate().map(|(i, x)| (x, i)).collect();

    let mut checks = CoverChecks {
        stabilized: eps.stabilized,
        ..CoverChecks::default()
    };

    let mut image_of_key: HashMap<&(usize, Word), usize> = HashMap::new();
    checks.well_defined = keys
        .iter()
        .zip(&images)
        .all(|(k, &im)| *image_of_key.entry(k).or_insert(im) == im);

    checks.morphism = morphism_check(&fr, &s1, &fragment, &images, &keys, &position);

    checks.projection_separating = by_image.values().all(|ts| {
        let c = eps.class_of(&ts[0]);
        ts.iter().all(|t| eps.class_of(t) == c)
    });

    checks.proper = proper_check(&fr, &fragment, &keys, &eps);

    let hit: std::collections::BTreeSet<usize> = images.iter().copied().collect();
    checks.surjective = s.elements().all(|a| hit.contains(&a));

    let rho_p_pairs = pairs.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect();
    let epsilon_blocks = eps
        .nontrivial_blocks()
        .into_iter()
        .map(|b| b.iter().map(|t| t.to_string()).collect())
        .collect();
    let fragment_out = fragment
        .iter()
        .zip(&keys)
        .zip(&images)
        .map(|((x, k), &im)| FragmentEntry {
            element: x.to_string(),
            class: k.0,
            word: k.1.to_string(),
            image: s1.name(im).to_string(),
        })
        .collect();
    Ok(CoverReport {
        bound,
        source_size: s.len(),
        adjoined_identity: adjoined,
        omega: letters
            .chars()
            .zip(s.names())
            .map(|(letter, e)| Generator {
                letter,
                element: e.clone(),
            })
            .collect(),
        rho_p_pairs,
        epsilon_classes: eps.congruence.num_blocks(),
        epsilon_blocks,
        fragment: fragment_out,
        checks,
    })
}

fn morphism_check(
    fr: &FreeRestriction,
    s1: &FinAlgebra,
    fragment: &[FrElement],
    images: &[usize],
    keys: &[(usize, Word)],
    position: &HashMap<&FrElement, usize>,
) -> bool {
    let mut unary: HashMap<(&(usize, Word), bool), usize> = HashMap::new();
    for (i, x) in fragment.iter().enumerate() {
        for (is_plus, y) in [(true, fr.plus(x)), (false, fr.star(x))] {
            let j = position[&y];
            let expect = if is_plus { s1.plus_of(images[i]) } else { s1.star_of(images[i]) };
            if images[j] != expect || keys[*unary.entry((&keys[i], is_plus)).or_insert(j)] != keys[j] {
                return false;
            }
        }
    }
    let bound = fragment.iter().map(|x| x.first.len()).max().unwrap_or(0);
    let mut binary: HashMap<(&(usize, Word), &(usize, Word)), usize> = HashMap::new();
    for (i, x) in fragment.iter().enumerate() {
        for (j, y) in fragment.iter().enumerate() {
            let p = fr.mul(x, y);
            if p.first.len() > bound {
                continue;
            }
            let k = position[&p];
            if images[k] != s1.product(images[i], images[j]) {
                return false;
            }
            if keys[*binary.entry((&keys[i], &keys[j])).or_insert(k)] != keys[k] {
                return false;
            }
        }
    }
    true
}

fn proper_check(fr: &FreeRestriction, fragment: &[FrElement], keys: &[(usize, Word)], eps: &BoundedCongruence) -> bool {
    let mut seen: HashMap<(usize, &Word), usize> = HashMap::new();
    fragment.iter().zip(keys).all(|(x, k)| {
        let star_class = eps.class_of(&fr.star(x).first).expect("same size as x");
        *seen.entry((star_class, &x.second)).or_insert(k.0) == k.0
    })
}
