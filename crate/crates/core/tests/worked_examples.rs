//! Small worked values, each checked by direct evaluation.

use rsg::actions::{
    in_ideal_y, is_nice_factorization, verify_nice_factorization, FreeAbelianAction, FreeGroupAction, NiceAction,
    OverGroup, Tree,
};
use rsg::algebra::{is_proper_on, FinAlgebra, RestrictionAlgebra};
use rsg::chains::{in_sigma_normalize, verify_chain, Chain};
use rsg::free_restriction::FrElement;
use rsg::partial::{chain2_instance, chain3_instance, ChiAction, MAlgebra, MElement};
use rsg::semidirect::{adjoin_identity_new, SdElement, Semidirect};
use rsg::terms::{build_term, onedir_params, two_transform, yuck_construct, Term, Unary};
use rsg::verify::sample_monoid_actions;
use rsg::words::{abelian_normal_form, nice_factorization_free, AbelianElement, Alphabet, Word};

fn e(s: &str) -> FrElement {
    s.parse().unwrap()
}

fn t(s: &str) -> Tree {
    s.parse().unwrap()
}

fn w(s: &str) -> Word {
    s.parse().unwrap()
}

fn sd() -> Semidirect<FreeGroupAction> {
    Semidirect::new(FreeGroupAction::new(Alphabet::first(2)))
}

#[test]
fn alternating_factorization_of_a_binv_a() {
    let f = nice_factorization_free(&w("aBa"));
    assert_eq!(f, vec![w("a"), w("B"), w("a")]);
    let fg = FreeGroupAction::new(Alphabet::first(2));
    assert!(is_nice_factorization(&fg, &w("aBa"), &f).unwrap());
}

#[test]
fn abelian_normal_form_of_x2_yinv3() {
    let g = AbelianElement::from_exponents([('x', 2), ('y', -3)]);
    let (u, t) = abelian_normal_form(&g);
    assert_eq!(u, AbelianElement::from_exponents([('y', 3)]));
    assert_eq!(t, AbelianElement::from_exponents([('x', 2)]));
    assert!(verify_nice_factorization(&FreeAbelianAction, &g).unwrap());
}

#[test]
fn group_elements_are_nice_over_the_group() {
    let og = OverGroup(FreeGroupAction::new(Alphabet::first(2)));
    for g in Alphabet::first(2).reduced_words(4) {
        assert!(verify_nice_factorization(&og, &g).unwrap());
    }
}

#[test]
fn semilattices_and_monoids_are_restriction_semigroups() {
    assert!(FinAlgebra::chain(4).check_identities().all_pass());
    let z2 = FinAlgebra::reduced_monoid(vec!["1".into(), "g".into()], vec![vec![0, 1], vec![1, 0]]).unwrap();
    assert!(z2.check_identities().all_pass());
    assert!(z2.is_reduced());
}

#[test]
fn semidirect_unary_operations() {
    let s = sd();
    assert_eq!(s.plus(&e("({ε,a}, a)")), e("({ε,a}, ε)"));
    assert_eq!(s.star(&e("({ε,a}, a)")), e("({A,ε}, ε)"));
    assert!(s.in_r(&e("({ε,a}, a)")).unwrap());
    assert!(s.in_r(&e("({ε}, ε)")).unwrap());
    assert_eq!(s.r_identity(), e("({ε}, ε)"));
    assert!(s.sigma(&e("({ε,a}, a)"), &e("({ε,b,a}, a)")).unwrap());
}

#[test]
fn semidirect_fragment_is_proper() {
    let s = sd();
    let frag: Vec<FrElement> = rsg::actions::trees_in_y(&Alphabet::first(2), 3)
        .into_iter()
        .flat_map(|tr| Alphabet::first(2).positive_words(2).into_iter().map(move |g| SdElement::new(tr.clone(), g)))
        .collect();
    assert!(is_proper_on(&s, &frag).unwrap());
}

#[test]
fn trees_containing_the_origin() {
    assert!(in_ideal_y(&t("{ε,a}")));
    assert!(!in_ideal_y(&t("{a,ab}")));
}

#[test]
fn completions_are_factorisable_with_injective_embedding() {
    for (_, inst) in sample_monoid_actions() {
        let c = adjoin_identity_new(&inst, &[]).unwrap();
        assert!(c.f.algebra.is_factorisable());
        let r = c.report();
        assert!(r.embedding_injective && r.embedding_morphism && r.image_is_complement_of_units);
    }
}

#[test]
fn tower_display() {
    assert_eq!(build_term(1, Unary::Plus).to_string(), "((y0 x z0)^+ z1)^*");
}

#[test]
fn onedir_base_cases() {
    let s = sd();
    let (y, z) = (e("({ε,b}, a)"), e("({a,ab}, b)"));
    let p = onedir_params(&s.action, &build_term(0, Unary::Plus), &[y.clone(), z.clone()]).unwrap();
    assert_eq!((p.u, p.v, p.g), (y.first.clone(), z.first.clone(), w("a")));
    let p = onedir_params(&s.action, &build_term(0, Unary::Star), &[y.clone(), z.clone()]).unwrap();
    assert_eq!(p.u, z.first.act(&w("B")));
    assert_eq!(p.v, y.first.act(&w("A")));
    assert_eq!(p.g, w("B"));
}

#[test]
fn yuck_single_positive_factor() {
    let s = sd();
    let (u, v) = (t("{ε,b}"), t("{ε,B}"));
    let (term, beta) = yuck_construct(&s.action, &u, &v, &w("a"), Unary::Plus).unwrap();
    assert_eq!(term, build_term(0, Unary::Plus));
    let one = Tree::one();
    let first = one.meet(&u).meet(&one.act(&w("a")));
    assert_eq!(beta, vec![SdElement::new(first, w("a")), SdElement::new(one.meet(&v), w(""))]);
}

#[test]
fn two_on_plain_sandwich() {
    let s = sd();
    let (y, z) = (e("({ε,B}, a)"), e("({b}, b)"));
    let (t2, beta) = two_transform(&s, &Term::Sandwich, &[y.clone(), z.clone()]).unwrap();
    assert_eq!(t2, Term::Sandwich);
    let one = Tree::one();
    assert_eq!(beta[0], SdElement::new(one.meet(&y.first).meet(&one.act(&w("a"))), w("a")));
    assert_eq!(beta[1], SdElement::new(one.meet(&z.first).meet(&one.act(&w("b"))), w("b")));
}

#[test]
fn empty_chain_is_valid_iff_endpoints_agree() {
    let s = sd();
    let x = e("({ε,a}, a)");
    let ch = Chain { s: x.clone(), t: x.clone(), links: vec![] };
    assert!(verify_chain(&s, &ch).unwrap().is_valid());
    let ch = Chain { s: x, t: e("({ε}, ε)"), links: vec![] };
    assert!(!verify_chain(&s, &ch).unwrap().is_valid());
}

#[test]
fn in_sigma_normalization() {
    let s = sd();
    let (x, y) = (e("({ε,a,b}, a)"), e("({ε,a,B}, a)"));
    assert_eq!(in_sigma_normalize(&s, (&x, &y)), Some((e("({ε,a,b}, ε)"), e("({ε,a,B}, ε)"))));
    assert_eq!(in_sigma_normalize(&s, (&x, &e("({ε,b}, b)"))), None);
}

#[test]
fn m_operations_on_the_chain() {
    let pa = chain2_instance();
    let m = MAlgebra::new(&pa);
    let ea = MElement { a: 1, t: w("a") };
    assert_eq!(m.mul(&ea, &ea), MElement { a: 1, t: w("aa") });
    assert_eq!(m.plus(&ea), MElement { a: 1, t: w("") });
    assert_eq!(m.star(&ea), MElement { a: 1, t: w("") });
}

#[test]
fn group_extension_and_mg() {
    let pa = chain3_instance();
    let a = pa.extend_to_group(&w("a")).unwrap();
    assert_eq!(pa.extend_to_group(&w("A")).unwrap(), a.inverse());
    assert_eq!(pa.m_identity(&w("")).unwrap(), pa.y.top());
    // α_{ab⁻¹} = α_a ∘ α_b⁻¹, defined only on f
    let ab = pa.extend_to_group(&w("aB")).unwrap();
    assert_eq!(ab, pa.extend_to_group(&w("a")).unwrap().after(&pa.extend_to_group(&w("B")).unwrap()));
    assert_eq!(ab.domain(), vec![pa.y.index_of("f").unwrap()]);
    // α_g α_h = α_{gh} when the concatenation is reduced
    for (g, h) in [("a", "a"), ("a", "B"), ("B", "a"), ("ab", "A")] {
        let (g, h) = (w(g), w(h));
        assert_eq!(pa.extend_to_group(&g).unwrap().after(&pa.extend_to_group(&h).unwrap()), pa.extend_to_group(&g.mul(&h)).unwrap());
    }
}

#[test]
fn chi_meets_on_the_chain() {
    let pa = chain2_instance();
    let chi = ChiAction::new(&pa);
    let one = chi.one();
    let one_a = chi.class(0, &w("a"));
    assert_eq!(chi.chi_meet(&one, &one_a), chi.embed(1));
    assert_eq!(chi.chi_meet(&one_a, &one_a), one_a);
    for a in 0..2 {
        for b in 0..2 {
            assert_eq!(chi.chi_meet(&chi.embed(a), &chi.embed(b)), chi.embed(pa.y.meet(a, b)));
        }
    }
}
