//! Towers of alternating `⁺`/`*` around a sandwiched variable, and the
//! constructions that rewrite them with constants from `R`.
//!
//! Constant order: a tower of depth `d` takes `[y0, z0, c1, …, cd]`, where
//! `ck` is the constant introduced at level `k`; the sandwich `yxz` takes
//! `[y, z]`; a sandwiched tower `y t z` takes `[y, z]` followed by the
//! constants of `t`.

use std::fmt;
use std::str::FromStr;

use crate::actions::{is_nice_factorization, NiceAction};
use crate::algebra::RestrictionAlgebra;
use crate::error::{Error, Result};
use crate::semidirect::{Elem, SdElement, Semidirect};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Unary {
    Plus,
    Star,
}

impl Unary {
    pub fn other(self) -> Unary {
        match self {
            Unary::Plus => Unary::Star,
            Unary::Star => Unary::Plus,
        }
    }

    fn suffix(self) -> &'static str {
        match self {
            Unary::Plus => "^+",
            Unary::Star => "^*",
        }
    }
}

impl fmt::Display for Unary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Unary::Plus => "+",
            Unary::Star => "*",
        })
    }
}

impl FromStr for Unary {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "+" | "plus" | "⁺" => Ok(Unary::Plus),
            "*" | "star" => Ok(Unary::Star),
            other => Err(Error::Input(format!("expected + or *, got `{other}`"))),
        }
    }
}

/// `t⁽ᵈ⁾`: level 0 applies `innermost` to `y0 x z0`; each further level
/// applies the other operation, `(yk t)⁺` or `(t zk)*`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Tower {
    pub depth: usize,
    pub innermost: Unary,
}

impl Tower {
    pub fn new(depth: usize, innermost: Unary) -> Self {
        Tower { depth, innermost }
    }

    pub fn arity(&self) -> usize {
        self.depth + 2
    }

    pub fn level_op(&self, k: usize) -> Unary {
        if k % 2 == 0 {
            self.innermost
        } else {
            self.innermost.other()
        }
    }

    pub fn outermost(&self) -> Unary {
        self.level_op(self.depth)
    }

    /// Membership in the `⁺`-family is fixed by the innermost operation.
    pub fn is_plus_family(&self) -> bool {
        self.innermost == Unary::Plus
    }

    fn write(&self, f: &mut fmt::Formatter<'_>, k: usize) -> fmt::Result {
        if k == 0 {
            return write!(f, "(y0 x z0){}", self.innermost.suffix());
        }
        match self.level_op(k) {
            Unary::Plus => {
                write!(f, "(y{k} ")?;
                self.write(f, k - 1)?;
                write!(f, ")^+")
            }
            Unary::Star => {
                write!(f, "(")?;
                self.write(f, k - 1)?;
                write!(f, " z{k})^*")
            }
        }
    }
}

impl fmt::Display for Tower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write(f, self.depth)
    }
}

pub fn build_term(depth: usize, innermost: Unary) -> Term {
    Term::Tower(Tower::new(depth, innermost))
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Term {
    /// `y x z`
    Sandwich,
    /// `y t z`
    Around(Tower),
    Tower(Tower),
}

impl Term {
    pub fn arity(&self) -> usize {
        match self {
            Term::Sandwich => 2,
            Term::Around(t) => t.arity() + 2,
            Term::Tower(t) => t.arity(),
        }
    }

    /// Sandwiched terms, the family the chain rewriting works with.
    pub fn is_sandwiched(&self) -> bool {
        !matches!(self, Term::Tower(_))
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Sandwich => write!(f, "y x z"),
            Term::Around(t) => write!(f, "y {t} z"),
            Term::Tower(t) => write!(f, "{t}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Open,
    Close,
    Op(Unary),
    Ident(String),
}

fn tokenize(s: &str) -> Result<Vec<(usize, Tok)>> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            _ if c.is_whitespace() => i += 1,
            '(' => {
                out.push((i, Tok::Open));
                i += 1;
            }
            ')' => {
                out.push((i, Tok::Close));
                i += 1;
            }
            '⁺' => {
                out.push((i, Tok::Op(Unary::Plus)));
                i += 1;
            }
            '*' => {
                out.push((i, Tok::Op(Unary::Star)));
                i += 1;
            }
            '^' => match chars.get(i + 1) {
                Some('+') => {
                    out.push((i, Tok::Op(Unary::Plus)));
                    i += 2;
                }
                Some('*') => {
                    out.push((i, Tok::Op(Unary::Star)));
                    i += 2;
                }
                _ => return Err(Error::parse(i, "expected + or * after ^")),
            },
            'x' | 'y' | 'z' => {
                let start = i;
                i += 1;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((start, Tok::Ident(chars[start..i].iter().collect())));
            }
            _ => return Err(Error::parse(i, format!("unexpected character `{c}`"))),
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn here(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |t| t.0)
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.1)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|t| t.1.clone());
        self.pos += 1;
        t
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<()> {
        let at = self.here();
        match self.next() {
            Some(t) if t == want => Ok(()),
            _ => Err(Error::parse(at, format!("expected {what}"))),
        }
    }

    fn ident(&mut self, name: &str) -> Result<()> {
        self.expect(Tok::Ident(name.to_string()), &format!("`{name}`"))
    }

    fn tower(&mut self) -> Result<Tower> {
        let start = self.here();
        self.expect(Tok::Open, "`(`")?;
        let (t, level) = match self.peek() {
            Some(Tok::Ident(s)) if s == "y0" => {
                self.next();
                self.ident("x")?;
                self.ident("z0")?;
                (None, None)
            }
            Some(Tok::Ident(s)) if s.starts_with('y') => {
                let name = s.clone();
                self.next();
                let inner = self.tower()?;
                (Some(inner), Some((Unary::Plus, name)))
            }
            Some(Tok::Open) => {
                let inner = self.tower()?;
                let at = self.here();
                match self.next() {
                    Some(Tok::Ident(s)) if s.starts_with('z') => (Some(inner), Some((Unary::Star, s))),
                    _ => return Err(Error::parse(at, "expected a `z` constant")),
                }
            }
            _ => return Err(Error::parse(self.here(), "expected `y0 x z0`, a `y` constant or a nested tower")),
        };
        self.expect(Tok::Close, "`)`")?;
        let at = self.here();
        let op = match self.next() {
            Some(Tok::Op(op)) => op,
            _ => return Err(Error::parse(at, "expected ^+ or ^*")),
        };
        match (t, level) {
            (None, _) => Ok(Tower::new(0, op)),
            (Some(inner), Some((kind, name))) => {
                let tower = Tower::new(inner.depth + 1, inner.innermost);
                if op != kind || tower.outermost() != op {
                    return Err(Error::parse(start, "levels must alternate, with (y t)^+ and (t z)^*"));
                }
                if name[1..] != tower.depth.to_string() {
                    return Err(Error::parse(start, format!("constant `{name}` at level {}", tower.depth)));
                }
                Ok(tower)
            }
            _ => unreachable!(),
        }
    }
}

impl FromStr for Term {
    type Err = Error;

    /// `y x z`, `((y0 x z0)^+ z1)^*`, `y (y0 x z0)^* z`
    fn from_str(s: &str) -> Result<Self> {
        let mut p = Parser {
            toks: tokenize(s)?,
            pos: 0,
            end: s.chars().count(),
        };
        let term = match p.peek() {
            Some(Tok::Ident(n)) if n == "y" => {
                p.next();
                if p.peek() == Some(&Tok::Ident("x".into())) {
                    p.next();
                    p.ident("z")?;
                    Term::Sandwich
                } else {
                    let t = p.tower()?;
                    p.ident("z")?;
                    Term::Around(t)
                }
            }
            _ => Term::Tower(p.tower()?),
        };
        if p.pos < p.toks.len() {
            return Err(Error::parse(p.here(), "trailing input"));
        }
        Ok(term)
    }
}

fn eval_tower<S: RestrictionAlgebra>(s: &S, t: &Tower, c: &S::Elem, consts: &[S::Elem]) -> S::Elem {
    let inner = s.mul(&s.mul(&consts[0], c), &consts[1]);
    let mut v = match t.innermost {
        Unary::Plus => s.plus(&inner),
        Unary::Star => s.star(&inner),
    };
    for k in 1..=t.depth {
        let ck = &consts[k + 1];
        v = match t.level_op(k) {
            Unary::Plus => s.plus(&s.mul(ck, &v)),
            Unary::Star => s.star(&s.mul(&v, ck)),
        };
    }
    v
}

/// `t(c, α)` in any restriction algebra.
pub fn eval_term<S: RestrictionAlgebra>(s: &S, t: &Term, c: &S::Elem, consts: &[S::Elem]) -> Result<S::Elem> {
    if consts.len() != t.arity() {
        return Err(Error::Arity {
            expected: t.arity(),
            got: consts.len(),
        });
    }
    Ok(match t {
        Term::Sandwich => s.mul(&s.mul(&consts[0], c), &consts[1]),
        Term::Around(tower) => {
            let r = eval_tower(s, tower, c, &consts[2..]);
            s.mul(&s.mul(&consts[0], &r), &consts[1])
        }
        Term::Tower(tower) => eval_tower(s, tower, c, consts),
    })
}

/// `(U, V, g)` with `t(c, α) = (U ∧ g·C̃ ∧ gc̃·V, 1)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OnedirParams<P, G> {
    pub u: P,
    pub v: P,
    pub g: G,
}

/// `(C̃, c̃)`: `(C, c̄)` in the `⁺`-family and `(c̄⁻¹·C, c̄⁻¹)` in the other.
pub fn tilde<A: NiceAction>(action: &A, family: Unary, c: &Elem<A>) -> (A::Point, A::Group) {
    match family {
        Unary::Plus => (c.first.clone(), c.second.clone()),
        Unary::Star => {
            let inv = action.group_inv(&c.second);
            (action.act(&inv, &c.first), inv)
        }
    }
}

/// Computes `(U, V, g)` level by level.
pub fn onedir_params<A: NiceAction>(action: &A, t: &Term, consts: &[Elem<A>]) -> Result<OnedirParams<A::Point, A::Group>> {
    let tower = match t {
        Term::Tower(tower) => tower,
        _ => return Err(Error::Domain(format!("`{t}` is not a tower"))),
    };
    if consts.len() != tower.arity() {
        return Err(Error::Arity {
            expected: tower.arity(),
            got: consts.len(),
        });
    }
    let (y, z) = (&consts[0], &consts[1]);
    let mut p = match tower.innermost {
        Unary::Plus => OnedirParams {
            u: y.first.clone(),
            v: z.first.clone(),
            g: y.second.clone(),
        },
        Unary::Star => {
            let (ai, bi) = (action.group_inv(&y.second), action.group_inv(&z.second));
            OnedirParams {
                u: action.act(&bi, &z.first),
                v: action.act(&ai, &y.first),
                g: bi,
            }
        }
    };
    for k in 1..=tower.depth {
        let ck = &consts[k + 1];
        p = match tower.level_op(k) {
            Unary::Plus => OnedirParams {
                u: action.meet(&ck.first, &action.act(&ck.second, &p.u)),
                v: p.v,
                g: action.group_mul(&ck.second, &p.g),
            },
            Unary::Star => {
                let inv = action.group_inv(&ck.second);
                OnedirParams {
                    u: action.meet(&action.act(&inv, &p.u), &action.act(&inv, &ck.first)),
                    v: p.v,
                    g: action.group_mul(&inv, &p.g),
                }
            }
        };
    }
    Ok(p)
}

/// `(U ∧ g·C̃ ∧ gc̃·V, 1)`
pub fn onedir_value<A: NiceAction>(
    action: &A,
    family: Unary,
    p: &OnedirParams<A::Point, A::Group>,
    c: &Elem<A>,
) -> Elem<A> {
    let (ct, cg) = tilde(action, family, c);
    let gc = action.group_mul(&p.g, &cg);
    let first = action.meet(
        &action.meet(&p.u, &action.act(&p.g, &ct)),
        &action.act(&gc, &p.v),
    );
    SdElement::new(first, action.group_identity())
}

/// `(𝟏 ∧ U ∧ g·C̃ ∧ gc̃·V, 1)`, the target of [`yuck_construct`].
pub fn yuck_value<A: NiceAction>(
    action: &A,
    variant: Unary,
    p: &OnedirParams<A::Point, A::Group>,
    c: &Elem<A>,
) -> Elem<A> {
    let v = onedir_value(action, variant, p, c);
    SdElement::new(action.meet(&action.one(), &v.first), v.second)
}

/// A tower in the family `variant` with constants in `R` evaluating to
/// `(𝟏 ∧ U ∧ g·C̃ ∧ gc̃·V, 1)` at every `c ∈ R`, built from a nice
/// factorisation of `g`.
pub fn yuck_construct<A: NiceAction>(
    action: &A,
    u: &A::Point,
    v: &A::Point,
    g: &A::Group,
    variant: Unary,
) -> Result<(Term, Vec<Elem<A>>)> {
    let mut factors = action.factorize(g)?;
    if !is_nice_factorization(action, g, &factors)? {
        return Err(Error::Niceness(format!("{g:?}")));
    }
    if factors.is_empty() {
        factors.push(action.group_identity());
    }
    let one = action.one();
    let id = action.group_identity();
    let sd = |p: A::Point, g: A::Group| SdElement::new(p, g);
    let meet3 = |a: &A::Point, b: &A::Point, c: &A::Point| action.meet(&action.meet(a, b), c);

    // U_n = (w₁⋯w_{n-1})⁻¹·U
    let n = factors.len();
    let mut un = u.clone();
    for w in &factors[..n - 1] {
        un = action.act(&action.group_inv(w), &un);
    }
    let w = &factors[n - 1];
    let winv = action.group_inv(w);
    let positive = action.in_monoid(w);
    let one_v = action.meet(&one, v);
    let (mut tower, mut consts) = match (variant, positive) {
        (Unary::Plus, true) => (
            Tower::new(0, Unary::Plus),
            vec![sd(meet3(&one, &un, &action.act(w, &one)), w.clone()), sd(one_v, id.clone())],
        ),
        (Unary::Plus, false) => (
            Tower::new(1, Unary::Plus),
            vec![
                sd(one.clone(), id.clone()),
                sd(one_v, id.clone()),
                sd(meet3(&one, &action.act(&winv, &un), &action.act(&winv, &one)), winv.clone()),
            ],
        ),
        (Unary::Star, true) => (
            Tower::new(1, Unary::Star),
            vec![
                sd(one_v, id.clone()),
                sd(one.clone(), id.clone()),
                sd(meet3(&one, &un, &action.act(w, &one)), w.clone()),
            ],
        ),
        (Unary::Star, false) => (
            Tower::new(0, Unary::Star),
            vec![
                sd(one_v, id.clone()),
                sd(meet3(&one, &action.act(&winv, &un), &action.act(&winv, &one)), winv.clone()),
            ],
        ),
    };
    for w in factors[..n - 1].iter().rev() {
        tower.depth += 1;
        let want = if action.in_monoid(w) { Unary::Plus } else { Unary::Star };
        if tower.outermost() != want {
            return Err(Error::Niceness(format!("{g:?}: factors do not alternate")));
        }
        let c = match want {
            Unary::Plus => sd(action.meet(&one, &action.act(w, &one)), w.clone()),
            Unary::Star => {
                let winv = action.group_inv(w);
                sd(action.meet(&one, &action.act(&winv, &one)), winv)
            }
        };
        consts.push(c);
    }
    Ok((Term::Tower(tower), consts))
}

/// Rewrites a sandwiched term so that `t(c, α)↓ = t′(c, β)` for `c ∈ R`,
/// with every constant of `β` in `R`.
pub fn two_transform<A: NiceAction>(sd: &Semidirect<A>, t: &Term, consts: &[Elem<A>]) -> Result<(Term, Vec<Elem<A>>)> {
    if consts.len() != t.arity() {
        return Err(Error::Arity {
            expected: t.arity(),
            got: consts.len(),
        });
    }
    let action = &sd.action;
    match t {
        Term::Sandwich => Ok((*t, vec![sd.down(&consts[0])?, sd.down(&consts[1])?])),
        Term::Around(tower) => {
            let (y, z) = (&consts[0], &consts[1]);
            let p = onedir_params(action, &Term::Tower(*tower), &consts[2..])?;
            let a = &y.second;
            let u2 = action.meet(
                &action.meet(&y.first, &action.act(a, &p.u)),
                &action.act(a, &z.first),
            );
            let g2 = action.group_mul(a, &p.g);
            let (inner, beta_inner) = yuck_construct(action, &u2, &p.v, &g2, tower.innermost)?;
            let inner = match inner {
                Term::Tower(tw) => tw,
                _ => unreachable!(),
            };
            let ab = action.group_mul(a, &z.second);
            let one = action.one();
            let mut beta = vec![
                sd.r_identity(),
                SdElement::new(action.meet(&one, &action.act(&ab, &one)), ab),
            ];
            beta.extend(beta_inner);
            Ok((Term::Around(inner), beta))
        }
        Term::Tower(_) => Err(Error::Domain(format!("`{t}` is not sandwiched"))),
    }
}
