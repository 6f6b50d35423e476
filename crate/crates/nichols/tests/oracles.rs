use atlas_freealg::{psi, skew_bracket, u_bracket, Bicharacter, DegreeVector, FreeElement, Word};
use atlas_nichols::suites::all_descriptors;
use atlas_nichols::*;
use atlas_rootdata::{build_rt, enumerate_theta, GenDesc, RootSequence};

fn ctx(n: usize) -> Nichols {
    Nichols::new(Bicharacter::one_parameter(n))
}

fn theta(v: &[usize]) -> RootSequence {
    RootSequence::new(v.len(), v.to_vec()).unwrap()
}

#[test]
fn deconcat_of_a_letter_and_word_lengths() {
    let c = CanonicalElement::from_raw(FreeElement::letter(2));
    let legs: Vec<(String, String)> = deconcat(&c).iter().map(|(l, r)| (l.to_string(), r.to_string())).collect();
    assert_eq!(legs, vec![("x2".to_string(), "1".to_string()), ("1".to_string(), "x2".to_string())]);
    let w = CanonicalElement::from_raw(FreeElement::from_word(Word::from_letters([3, 1, 2, 2, 1])));
    assert_eq!(deconcat(&w).len(), 6);
}

#[test]
fn pbw_decomposition_of_psi_has_leading_super_letter() {
    for n in 1..=3 {
        let c = ctx(n);
        for g in all_descriptors(n) {
            let coords = c.pbw_decompose(&psi(c.bichar(), &g).unwrap()).unwrap();
            let lead = PbwMonomial::single(SuperLetter::new(g.k, g.m));
            assert!(!coords.numerator(&lead).is_zero(), "{g}");
            for (mono, _) in coords.support() {
                if *mono == lead {
                    continue;
                }
                let top = mono.largest().unwrap();
                assert_eq!(top.k, g.k, "{g}: {mono}");
                assert!(g.cuts().contains(&top.m), "{g}: {mono}");
                assert!(mono.letters().all(|s| s <= top), "{g}: {mono}");
            }
        }
    }
}

#[test]
fn pbw_decomposition_of_products() {
    let c = ctx(3);
    let b = c.bichar().clone();
    let m = PbwMonomial::new([(SuperLetter::new(3, 3), 2), (SuperLetter::new(1, 2), 1)]);
    let e = c.pbw_element(&m).unwrap();
    let coords = c.pbw_decompose(&e).unwrap();
    let sup: Vec<String> = coords.support().map(|(m, _)| m.to_string()).collect();
    assert_eq!(sup, vec!["u[3,3]^2·u[1,2]".to_string()]);
    // x_1 x_2 = u[1,2] + p_12 x_2 x_1 expands over two monomials
    let x12 = FreeElement::from_word(Word::from_letters([1, 2]));
    let coords = c.pbw_decompose(&x12).unwrap();
    assert_eq!(coords.support().count(), 2);
    let rebuilt = coords.support().fold(FreeElement::zero(), |mut acc, (m, x)| {
        acc.add_scaled(&c.pbw_element(m).unwrap(), x);
        acc
    });
    assert!(c.equal(&rebuilt, &x12.scale(&coords.denominator)));
    assert!(c.pbw_decompose(&(&x12 + &FreeElement::letter(1))).is_err());
    let _ = b;
}

#[test]
fn membership_matches_the_root_sets() {
    // Ψ^{T_k}(k,m) ∈ U_θ exactly when m ∈ T_k
    let c = ctx(3);
    for t in enumerate_theta(3) {
        let p = build_rt(&t);
        let gens = profile_generators(&c, &p).unwrap();
        let mut span = SubalgebraSpan::new(&c, &gens, 6).unwrap();
        for k in 1..=3 {
            for m in k..=3 {
                let g = GenDesc::new(3, k, m, p.t(k)).unwrap();
                let inside = span.contains_element(&psi(c.bichar(), &g).unwrap()).unwrap();
                assert_eq!(inside, p.t(k) >> m & 1 == 1, "θ={t}, {g}");
            }
        }
    }
}

#[test]
fn subalgebra_component_dimension() {
    let c = ctx(3);
    let p = build_rt(&theta(&[3, 2, 1]));
    let gens = profile_generators(&c, &p).unwrap();
    let basis = subalgebra_basis(&c, &gens, &DegreeVector(vec![1, 1, 1]), 6).unwrap();
    assert_eq!(basis.len(), 1);
    assert!(basis[0].is_proportional(&c.omega(&u_bracket(c.bichar(), 1, 3).unwrap())));
    assert!(member(&c, &gens[0], &gens, 6).unwrap());
}

#[test]
fn coideal_examples() {
    let c = ctx(2);
    let x12 = FreeElement::from_word(Word::from_letters([1, 2]));
    assert!(!coideal_check(&c, &[x12], 6).unwrap().passed());
    let letters: Vec<FreeElement> = (1..=2).map(FreeElement::letter).collect();
    assert!(coideal_check(&c, &letters, 6).unwrap().passed());
    let u12 = u_bracket(c.bichar(), 1, 2).unwrap();
    assert!(coideal_check(&c, &[u12.clone(), FreeElement::letter(2)], 6).unwrap().passed());
    assert!(!coideal_check(&c, &[u12], 6).unwrap().passed());
}

#[test]
fn differential_closure_examples() {
    let c = ctx(3);
    assert!(differential_closure_check(&c, &build_rt(&theta(&[3, 1, 0])), 6).unwrap().passed());
    let zero = differential_closure_check(&c, &build_rt(&theta(&[0, 0, 0])), 6).unwrap();
    assert!(zero.passed());
    assert_eq!(zero.checked, 0);
}

#[test]
fn derivative_span_examples() {
    let c = ctx(3);
    for (k, m, s) in [(1, 2, vec![]), (1, 3, vec![2]), (2, 2, vec![])] {
        let g = GenDesc::from_list(3, k, m, &s).unwrap();
        assert!(theorem26_span_check(&c, &g).unwrap().passed(), "{g}");
    }
    let w: Vec<String> = w_set(&GenDesc::from_list(3, 1, 3, &[2]).unwrap()).iter().map(|g| g.to_string()).collect();
    // x_3 is not a W-element of Ψ^{2}(1,3): its start 3 follows the cut 2
    assert_eq!(w, vec!["Psi^{}(1,2)", "Psi^{2}(1,3)", "Psi^{}(2,2)", "Psi^{2}(2,3)"]);
}

#[test]
fn right_calculus_closure_differs() {
    // The ∂* closure of u[1,2] loses x_2 and gains x_1: it matches the
    // W-set of the mirrored descriptor, not of the original one.
    let c = ctx(2);
    let g = GenDesc::from_list(2, 1, 2, &[]).unwrap();
    assert!(!dual_span_check(&c, &g).unwrap().passed());
}

#[test]
fn psi_is_recovered_from_itself() {
    for n in 1..=3 {
        let c = ctx(n);
        for g in all_descriptors(n) {
            let u = psi(c.bichar(), &g).unwrap();
            let (h, out) = psi_from_element(&c, &u).unwrap();
            assert_eq!(h.normalized(), g.normalized());
            assert!(c.equal(&out, &u));
        }
    }
}

#[test]
fn psi_from_a_perturbed_super_letter() {
    let c = ctx(3);
    let b = c.bichar();
    let u13 = u_bracket(b, 1, 3).unwrap();
    let extra = &u_bracket(b, 2, 3).unwrap() * &FreeElement::letter(1);
    let e = &u13 + &extra.scale(&"2*q".parse().unwrap());
    let (g, _) = psi_from_element(&c, &e).unwrap();
    assert_eq!(g.cuts(), vec![1]);
    let (g, out) = psi_from_element(&c, &u13).unwrap();
    assert!(g.cuts().is_empty());
    assert!(c.equal(&out, &u13));
    assert!(psi_from_element(&c, &FreeElement::from_word(Word::from_letters([1, 3]))).is_err());
    let x2x1 = skew_bracket(b, &FreeElement::letter(2), &FreeElement::letter(1)).unwrap();
    assert!(psi_from_element(&c, &(&x2x1 - &x2x1)).is_err());
}
