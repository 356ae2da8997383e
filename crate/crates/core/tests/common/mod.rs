//! Independent brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeSet;

use rsg::actions::{trees_in_y, Tree};
use rsg::algebra::FinAlgebra;
use rsg::cover::with_identity;
use rsg::semidirect::adjoin_identity_new;
use rsg::verify::sample_monoid_actions;
use rsg::words::{AbelianElement, Alphabet, Word};

/// Vertices of the geodesic from `u` to `v` in the Cayley graph.
pub fn geodesic(u: &Word, v: &Word) -> Vec<Word> {
    let d = u.inverse().mul(v);
    (0..=d.len()).map(|k| u.mul(&d.prefix(k))).collect()
}

/// Adds geodesics between members until nothing changes.
pub fn span_oracle(words: &[Word]) -> BTreeSet<Word> {
    let mut set: BTreeSet<Word> = words.iter().cloned().collect();
    loop {
        let before = set.len();
        let cur: Vec<Word> = set.iter().cloned().collect();
        for u in &cur {
            for v in &cur {
                set.extend(geodesic(u, v));
            }
        }
        if set.len() == before {
            return set;
        }
    }
}

pub fn vertex_set(t: &Tree) -> BTreeSet<Word> {
    t.vertices().iter().cloned().collect()
}

/// Coordinatewise minima of all nonempty subsets.
pub fn minclosed_oracle(vs: &[AbelianElement]) -> BTreeSet<AbelianElement> {
    let n = vs.len();
    (1u32..(1 << n))
        .map(|mask| {
            (0..n)
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| vs[i].clone())
                .reduce(|a, b| a.coord_min(&b))
                .unwrap()
        })
        .collect()
}

pub fn abelian_box(r: i64) -> Vec<AbelianElement> {
    let mut out = Vec::new();
    for x in -r..=r {
        for y in -r..=r {
            out.push(AbelianElement::from_exponents([('a', x), ('b', y)]));
        }
    }
    out
}

pub fn subsets_up_to<T: Clone>(items: &[T], k: usize, start: usize, cur: &mut Vec<T>, out: &mut Vec<Vec<T>>) {
    if !cur.is_empty() {
        out.push(cur.clone());
    }
    if cur.len() == k {
        return;
    }
    for i in start..items.len() {
        cur.push(items[i].clone());
        subsets_up_to(items, k, i + 1, cur, out);
        cur.pop();
    }
}

/// Boolean-matrix fixpoint: reflexive, symmetric, transitive and closed
/// under multiplication on both sides and both unary operations.
pub fn congruence_oracle(alg: &FinAlgebra, pairs: &[(usize, usize)]) -> Vec<Vec<bool>> {
    let n = alg.len();
    let mut r = vec![vec![false; n]; n];
    for (i, row) in r.iter_mut().enumerate() {
        row[i] = true;
    }
    for &(a, b) in pairs {
        r[a][b] = true;
        r[b][a] = true;
    }
    loop {
        let mut changed = false;
        let mut set = |r: &mut Vec<Vec<bool>>, a: usize, b: usize| {
            if !r[a][b] {
                r[a][b] = true;
                changed = true;
            }
        };
        for a in 0..n {
            for b in 0..n {
                if !r[a][b] {
                    continue;
                }
                set(&mut r, b, a);
                set(&mut r, alg.plus_of(a), alg.plus_of(b));
                set(&mut r, alg.star_of(a), alg.star_of(b));
                for c in 0..n {
                    set(&mut r, alg.product(a, c), alg.product(b, c));
                    set(&mut r, alg.product(c, a), alg.product(c, b));
                    if r[b][c] {
                        set(&mut r, a, c);
                    }
                }
            }
        }
        if !changed {
            return r;
        }
    }
}

/// The finite table algebras with at most eight elements available here.
pub fn small_algebras() -> Vec<(String, FinAlgebra)> {
    let mut out: Vec<(String, FinAlgebra)> = (1..=8).map(|n| (format!("chain{n}"), FinAlgebra::chain(n))).collect();
    let z3 = FinAlgebra::reduced_monoid(
        vec!["1".into(), "g".into(), "gg".into()],
        vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]],
    )
    .unwrap();
    out.push(("z3".into(), z3));
    out.push(("monoid3".into(), FinAlgebra::from_json(include_str!("../../examples/data/monoid3.json")).unwrap()));
    let no_one = FinAlgebra::semilattice(
        vec!["e".into(), "f".into(), "0".into()],
        vec![vec![0, 2, 2], vec![2, 1, 2], vec![2, 2, 2]],
    )
    .unwrap();
    out.push(("v-semilattice+1".into(), with_identity(&no_one).0));
    out.push(("v-semilattice".into(), no_one));
    for (name, inst) in sample_monoid_actions() {
        out.push((format!("{name} table"), inst.semidirect_table()));
        let c = adjoin_identity_new(&inst, &[]).unwrap();
        out.push((format!("{name} completion"), c.f.algebra));
    }
    out.retain(|(_, a)| a.len() <= 8);
    out
}

/// Least equivalence on the trees of `Y` with at most `bound` vertices
/// containing `gens` and closed under meets with every tree of the universe
/// and translation by every letter, wherever both sides stay in the universe.
pub fn epsilon_oracle(al: &Alphabet, gens: &[(Tree, Tree)], bound: usize) -> (Vec<Tree>, Vec<Vec<bool>>) {
    let universe = trees_in_y(al, bound);
    let n = universe.len();
    let idx = |t: &Tree| universe.iter().position(|u| u == t);
    let mut r = vec![vec![false; n]; n];
    for (i, row) in r.iter_mut().enumerate() {
        row[i] = true;
    }
    for (a, b) in gens {
        let (i, j) = (idx(a).unwrap(), idx(b).unwrap());
        r[i][j] = true;
        r[j][i] = true;
    }
    let meets: Vec<Vec<Option<usize>>> = (0..n)
        .map(|c| (0..n).map(|a| idx(&universe[a].meet(&universe[c]))).collect())
        .collect();
    let moves: Vec<Vec<Option<usize>>> = al
        .letters()
        .map(|l| {
            let w = Word::letter(l);
            (0..n).map(|a| idx(&universe[a].act(&w))).collect()
        })
        .collect();
    loop {
        let mut changed = false;
        for a in 0..n {
            for b in 0..n {
                if !r[a][b] {
                    continue;
                }
                let mut pairs: Vec<(usize, usize)> = vec![(b, a)];
                for m in meets.iter().chain(&moves) {
                    if let (Some(x), Some(y)) = (m[a], m[b]) {
                        pairs.push((x, y));
                    }
                }
                for c in 0..n {
                    if r[b][c] {
                        pairs.push((a, c));
                    }
                }
                for (x, y) in pairs {
                    if !r[x][y] {
                        r[x][y] = true;
                        changed = true;
                    }
                }
            }
        }
        if !changed {
            return (universe, r);
        }
    }
}

pub fn epsilon_cases() -> Vec<(Alphabet, Vec<(Tree, Tree)>, usize)> {
    let t = |s: &str| s.parse::<Tree>().unwrap();
    let a = Alphabet::first(1);
    let ab = Alphabet::first(2);
    vec![
        (a.clone(), vec![], 3),
        (a.clone(), vec![(t("{ε}"), t("{ε,a}"))], 3),
        (a.clone(), vec![(t("{ε}"), t("{ε,a}"))], 4),
        (a.clone(), vec![(t("{ε,A}"), t("{ε,a}"))], 4),
        (a.clone(), vec![(t("{ε,a,aa}"), t("{ε,a}"))], 4),
        (a, vec![(t("{ε,a}"), t("{ε,a}"))], 4),
        (ab.clone(), vec![(t("{ε}"), t("{ε,a}"))], 3),
        (ab.clone(), vec![(t("{ε,b}"), t("{ε,a}"))], 3),
        (ab.clone(), vec![(t("{ε,a,ab}"), t("{ε,a}")), (t("{ε,B}"), t("{ε}"))], 3),
        (ab, vec![(t("{ε,a}"), t("{ε,A}"))], 4),
    ]
}
