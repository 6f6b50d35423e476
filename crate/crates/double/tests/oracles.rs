use atlas_double::*;
use atlas_freealg::{u_bracket, Bicharacter, FreeElement, Word};
use atlas_nichols::suites::all_descriptors;
use atlas_ring::{LaurentPoly, Monomial};
use atlas_rootdata::{build_rt, cond_pair, enumerate_theta, GenDesc, RootSequence};

fn ctx(n: usize) -> Double {
    Double::new(Bicharacter::one_parameter(n))
}

fn pos(d: &Double, letters: &[usize]) -> TriangularElement {
    d.pos_elem(&FreeElement::from_word(Word::from_letters(letters.iter().copied())))
}

fn neg(d: &Double, letters: &[usize]) -> TriangularElement {
    d.neg_elem(&FreeElement::from_word(Word::from_letters(letters.iter().copied())))
}

fn desc(n: usize, k: usize, m: usize, s: &[usize]) -> GenDesc {
    GenDesc::from_list(n, k, m, s).unwrap()
}

fn words(n: usize, max_len: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    let mut layer = vec![Word::empty()];
    for _ in 0..max_len {
        layer = layer.iter().flat_map(|w| (1..=n).map(move |i| w.concat(&Word::letter(i)))).collect();
        out.extend(layer.iter().cloned());
    }
    out
}

#[test]
fn characters_on_the_h_elements() {
    let d = ctx(4);
    let qinv = Monomial::var_pow(0, -1);
    for k in 2..=4 {
        assert_eq!(d.chi(k, &GroupElement::h(4, k - 1)), qinv);
        assert_eq!(d.chi(k - 1, &GroupElement::h(4, k)), qinv);
    }
    assert_eq!(d.chi(1, &GroupElement::h(4, 3)), Monomial::one());
    assert_eq!(d.chi(2, &GroupElement::g(4, 2)), Monomial::var_pow(0, 1));
    assert_eq!(d.chi(2, &GroupElement::f(4, 1)), *d.bichar().p_mono(1, 2));
}

#[test]
fn letter_relation_by_straightening() {
    for b in [Bicharacter::one_parameter(3), Bicharacter::multiparameter(3)] {
        let d = Double::new(b);
        for i in 1..=3 {
            for j in 1..=3 {
                let mut diff = d.mul(&pos(&d, &[i]), &neg(&d, &[j]));
                diff.add_scaled(&d.mul(&neg(&d, &[j]), &pos(&d, &[i])), &-d.bichar().p(j, i));
                let expected = if i == j { one_minus(GroupElement::h(3, i)) } else { TriangularElement::zero() };
                assert!(d.equal(&diff, &expected), "[x{i}, x{j}-] = {diff}");
            }
        }
    }
}

#[test]
fn one_letter_products_in_both_orders() {
    let d = ctx(2);
    assert_eq!(d.mul(&neg(&d, &[1]), &pos(&d, &[1])).to_string(), "x1- · x1");
    assert_eq!(d.mul(&pos(&d, &[1]), &neg(&d, &[1])).to_string(), "1 - g1f1 + q*x1- · x1");
}

#[test]
fn group_elements_commute_past_letters() {
    let d = ctx(3);
    let g = GroupElement::g(3, 1).mul(&GroupElement::f(3, 2));
    let prod = d.mul(&pos(&d, &[2]), &TriangularElement::group(g.clone()));
    let chi = LaurentPoly::monomial(d.chi(2, &g));
    assert_eq!(prod, TriangularElement::term(Word::empty(), g.clone(), Word::letter(2), chi.clone()));
    let prod = d.mul(&TriangularElement::group(g.clone()), &neg(&d, &[2]));
    assert_eq!(prod, TriangularElement::term(Word::letter(2), g.clone(), Word::empty(), chi));
    let h = GroupElement::h(3, 3);
    assert_eq!(
        d.mul(&TriangularElement::group(g.clone()), &TriangularElement::group(h.clone())),
        TriangularElement::group(g.mul(&h))
    );
    assert_eq!(d.mul(&pos(&d, &[1, 3]), &pos(&d, &[2])), pos(&d, &[1, 3, 2]));
}

#[test]
fn products_are_associative_on_short_words() {
    for b in [Bicharacter::one_parameter(2), Bicharacter::multiparameter(3)] {
        let n = b.n();
        let d = Double::new(b);
        let short = words(n, 2);
        for a in short.iter().filter(|w| w.len() == 2) {
            for x in short.iter().filter(|w| w.len() == 1) {
                for y in &short {
                    let a = d.pos_elem(&FreeElement::from_word(a.clone()));
                    let x = d.neg_elem(&FreeElement::from_word(x.clone()));
                    let yn = d.neg_elem(&FreeElement::from_word(y.clone()));
                    let yp = d.pos_elem(&FreeElement::from_word(y.clone()));
                    assert!(d.equal(&d.mul(&d.mul(&a, &x), &yn), &d.mul(&a, &d.mul(&x, &yn))));
                    assert!(d.equal(&d.mul(&d.mul(&a, &yp), &x), &d.mul(&a, &d.mul(&yp, &x))));
                }
            }
        }
    }
}

#[test]
fn bracket_of_a_letter_with_its_negative() {
    let d = ctx(2);
    let x = Graded::positive(&d, &FreeElement::letter(1)).unwrap();
    let y = Graded::negative(&d, &FreeElement::letter(1)).unwrap();
    let br = tri_bracket(&d, &x, &y);
    assert_eq!(br.elem.to_string(), "1 - g1f1");
    assert_eq!(br.degree, vec![0, 0]);
    assert_eq!(br.group, GroupElement::h(2, 1));
    assert!(Graded::positive(&d, &(&FreeElement::letter(1) + &FreeElement::letter(2))).is_err());
}

#[test]
fn negative_generators() {
    let d = ctx(3);
    for i in 1..=3 {
        assert_eq!(psi_minus(&d, &desc(3, i, i, &[])).unwrap().elem, neg(&d, &[i]));
    }
    let p = psi_minus(&d, &desc(3, 1, 2, &[1])).unwrap();
    assert_eq!(p.elem.to_string(), "-q*x1-x2- + x2-x1-");
    let mut expected = neg(&d, &[2, 1]);
    expected.add_scaled(&neg(&d, &[1, 2]), &-d.neg_bichar().p(2, 1));
    assert_eq!(p.elem, expected);
    assert_eq!(p.degree, vec![-1, -1, 0]);
}

#[test]
fn complementary_bracket_has_an_exact_scalar() {
    let d = ctx(2);
    let (a, b) = sh_scalar(&d, &desc(2, 1, 2, &[])).unwrap().unwrap();
    assert_eq!((a.to_string(), b.to_string()), ("1 - q^-1".to_string(), "1".to_string()));
    let (a, b) = sh_scalar(&d, &desc(2, 1, 1, &[])).unwrap().unwrap();
    assert_eq!((a, b), (LaurentPoly::one(), LaurentPoly::one()));
    assert!(verify_sh(&d, &desc(2, 1, 2, &[1])).unwrap().passed());
    // the same bracket with S instead of its complement is not of that shape
    let br = tri_bracket(&d, &psi_plus(&d, &desc(2, 1, 2, &[])).unwrap(), &psi_minus(&d, &desc(2, 1, 2, &[])).unwrap());
    assert!(d.ratio(&br.elem, &one_minus(GroupElement::h_bar(2, 1, 2))).is_none());
}

#[test]
fn brackets_of_super_letters_with_negative_letters() {
    let d = ctx(4);
    let u = |k, m| Graded::positive(&d, &u_bracket(d.bichar(), k, m).unwrap()).unwrap();
    let xm = |i| Graded::negative(&d, &FreeElement::letter(i)).unwrap();
    assert!(tri_bracket(&d, &u(1, 4), &xm(2)).is_zero(&d));
    assert!(tri_bracket(&d, &u(1, 4), &xm(3)).is_zero(&d));
    let br = tri_bracket(&d, &u(1, 4), &xm(4));
    assert!(d.proportional(&br.elem, &u(1, 3).elem));
    let br = tri_bracket(&d, &u(2, 4), &xm(2));
    assert!(d.proportional(&br.elem, &u(3, 4).times_group(&d, &GroupElement::h(4, 2)).elem));
}

#[test]
fn entrance_cases_leave_the_derivative_span() {
    let d = ctx(3);
    // S = {2} at (1,3): 2 is the only entrance
    let g = desc(3, 1, 3, &[2]);
    let inside = |i: usize| {
        let br = tri_bracket(
            &d,
            &psi_plus(&d, &g).unwrap(),
            &Graded::negative(&d, &FreeElement::letter(i)).unwrap(),
        );
        let mut w = ClosureSpace::new(d.positive(), &atlas_freealg::psi(d.bichar(), &g).unwrap());
        in_triple(&d, &br.elem, &mut Everything, &mut w).unwrap()
    };
    assert!(inside(1));
    assert!(!inside(2));
    assert!(inside(3));
    for i in 1..=3 {
        assert!(verify_derm(&d, &g, i).unwrap().passed());
    }
    assert!(verify_derm(&d, &g, 4).is_err());
}

#[test]
fn separated_brackets_vanish() {
    let d = ctx(3);
    let (a, b) = (desc(3, 1, 1, &[]), desc(3, 3, 3, &[]));
    assert_eq!(cross_case(&a, &b), CrossCase::Zero);
    assert!(cross_bracket(&d, &a, &b).unwrap().is_zero(&d));
    assert!(verify_cross(&d, &a, &b).unwrap().passed());
}

#[test]
fn shared_end_point_without_condition_leaves_the_product_span() {
    let d = ctx(2);
    let (a, b) = (desc(2, 1, 2, &[]), desc(2, 2, 2, &[]));
    assert_eq!(cross_case(&a, &b), CrossCase::Open);
    let br = cross_bracket(&d, &a, &b).unwrap();
    assert_eq!(br.elem.to_string(), "(1 - q^-1)*x1");
    assert!(!cross_inclusion(&d, &a, &b, &br.elem).unwrap());
}

#[test]
fn inequality_case_stays_in_the_product_span() {
    let d = ctx(2);
    // S = {1} at (1,2) against x_2⁻: S•∩T• = {2}, S̄∘∩T̄∘ = ∅
    let (a, b) = (desc(2, 1, 2, &[1]), desc(2, 2, 2, &[]));
    assert_eq!(cross_case(&a, &b), CrossCase::Inequality);
    let br = cross_bracket(&d, &a, &b).unwrap();
    assert!(!br.is_zero(&d));
    assert!(cross_inclusion(&d, &a, &b, &br.elem).unwrap());
    assert!(verify_cross(&d, &a, &b).unwrap().passed());
}

#[test]
fn open_cross_pairs_are_never_included() {
    let d = ctx(3);
    let ds = all_descriptors(3);
    let mut open = 0;
    for a in &ds {
        for b in &ds {
            if cross_case(a, b) == CrossCase::Open {
                open += 1;
                let br = cross_bracket(&d, a, b).unwrap();
                assert!(!cross_inclusion(&d, a, b, &br.elem).unwrap(), "{a} vs {b}");
            }
        }
    }
    assert_eq!(open, 56);
}

#[test]
fn failing_pair_fails_both_ways() {
    let d = ctx(2);
    let a = RootSequence::new(2, vec![1, 0]).unwrap();
    let b = RootSequence::new(2, vec![2, 0]).unwrap();
    assert!(!pair_closure(&d, &a, &b, 6).unwrap());
    assert!(!cond_pair(&build_rt(&a), &build_rt(&b)).unwrap().holds);
}

#[test]
fn accepted_pairs_are_closed_under_mixed_products() {
    let d = ctx(2);
    let thetas: Vec<RootSequence> = enumerate_theta(2).collect();
    let mut tested = 0;
    for a in &thetas {
        for b in &thetas {
            if !pair_closure(&d, a, b, 6).unwrap() {
                continue;
            }
            let gp: Vec<FreeElement> =
                build_rt(a).pbw_generators().iter().map(|g| atlas_freealg::psi(d.bichar(), g).unwrap()).collect();
            let gm: Vec<FreeElement> =
                build_rt(b).pbw_generators().iter().map(|g| atlas_freealg::psi(d.neg_bichar(), g).unwrap()).collect();
            let mut ps = atlas_nichols::SubalgebraSpan::new(d.positive(), &gp, 6).unwrap();
            let mut ns = atlas_nichols::SubalgebraSpan::new(d.negative(), &gm, 6).unwrap();
            for x in &gp {
                for y in &gm {
                    let prod = d.mul(&d.pos_elem(x), &d.neg_elem(y));
                    assert!(in_triple(&d, &prod, &mut ns, &mut ps).unwrap(), "{a} / {b}");
                    tested += 1;
                }
            }
        }
    }
    assert!(tested > 0);
}
