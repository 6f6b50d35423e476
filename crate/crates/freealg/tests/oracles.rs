use atlas_freealg::identities::{residual, Identity};
use atlas_freealg::random::random_homogeneous;
use atlas_freealg::*;
use atlas_ring::LaurentPoly;
use atlas_rootdata::GenDesc;
use rand::SeedableRng;

fn x(i: usize) -> FreeElement {
    FreeElement::letter(i)
}

fn poly(s: &str) -> LaurentPoly {
    s.parse().unwrap()
}

fn desc(n: usize, k: usize, m: usize, s: &[usize]) -> GenDesc {
    GenDesc::from_list(n, k, m, s).unwrap()
}

#[test]
fn bicharacter_values() {
    let b = Bicharacter::one_parameter(4);
    for k in 1..=4 {
        assert_eq!(p_of(&b, &x(k), &x(k)).unwrap(), poly("q"));
        for m in k..=4 {
            let u = u_bracket(&b, k, m).unwrap();
            assert_eq!(p_of(&b, &u, &u).unwrap(), poly("q"), "u[{k},{m}]");
        }
    }
    for b in [Bicharacter::one_parameter(3), Bicharacter::multiparameter(3)] {
        assert!((&p_of(&b, &x(1), &x(3)).unwrap() * &p_of(&b, &x(3), &x(1)).unwrap()).is_one());
    }
}

#[test]
fn skew_bracket_unfolds() {
    let b = Bicharacter::multiparameter(3);
    let br = skew_bracket(&b, &x(1), &x(3)).unwrap();
    let mut want = &x(1) * &x(3);
    want.add_scaled(&(&x(3) * &x(1)), &-b.p(1, 3));
    assert_eq!(br, want);
    assert!(skew_bracket(&b, &x(2), &FreeElement::one()).unwrap().is_zero());
}

#[test]
fn jacobi_on_random_triples() {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(2);
    let b = Bicharacter::multiparameter(4);
    for _ in 0..20 {
        let u = random_homogeneous(&mut rng, 4, 2, 3);
        let v = random_homogeneous(&mut rng, 4, 1, 3);
        let w = random_homogeneous(&mut rng, 4, 2, 3);
        assert!(residual(Identity::Jacobi, &b, &u, &v, &w).unwrap().is_zero());
    }
}

#[test]
fn derivatives_of_letters_and_u_brackets() {
    let b = Bicharacter::one_parameter(4);
    for i in 1..=4 {
        assert_eq!(partial(&b, i, &x(i)), FreeElement::one());
        assert_eq!(partial_star(&b, i, &x(i)), FreeElement::one());
    }
    let one_minus = poly("1 - q^-1");
    for k in 1..4 {
        for m in k + 1..=4 {
            let d = partial(&b, k, &u_bracket(&b, k, m).unwrap());
            assert_eq!(d, u_bracket(&b, k + 1, m).unwrap().scale(&one_minus), "u[{k},{m}]");
        }
    }
}

#[test]
fn d_w_of_the_empty_word_is_the_identity() {
    let b = Bicharacter::one_parameter(3);
    let u = psi(&b, &desc(3, 1, 3, &[2])).unwrap();
    assert_eq!(d_w(&b, &Word::empty(), &u), u);
}

#[test]
fn psi_against_its_piecewise_word_is_a_nonzero_scalar() {
    for n in 1..=4 {
        let b = Bicharacter::one_parameter(n);
        for k in 1..=n {
            for m in k..=n {
                for s in 0..(1u64 << (m - k)) {
                    let g = GenDesc::new(n, k, m, s << k).unwrap();
                    let v = d_w(&b, &u_pw(&g), &psi(&b, &g).unwrap());
                    assert_eq!(v.num_terms(), 1, "{g}");
                    assert!(!scalar_part(&v).is_zero(), "{g}");
                }
            }
        }
    }
}

#[test]
fn u_brackets() {
    let b = Bicharacter::multiparameter(3);
    assert_eq!(u_bracket(&b, 2, 2).unwrap(), x(2));
    let mut want = &x(1) * &x(2);
    want.add_scaled(&(&x(2) * &x(1)), &-b.p(1, 2));
    assert_eq!(u_bracket(&b, 1, 2).unwrap(), want);
    assert!(u_bracket(&b, 2, 1).is_err());
    assert!(u_bracket(&b, 1, 4).is_err());
}

#[test]
fn psi_terms_from_descriptors() {
    let b = Bicharacter::one_parameter(3);
    assert_eq!(psi(&b, &desc(3, 1, 3, &[])).unwrap(), u_bracket(&b, 1, 3).unwrap());
    assert_eq!(psi_term(&desc(3, 1, 3, &[1, 2])).to_string(), "[[x3,x2],x1]");
    assert_eq!(psi_term(&desc(3, 1, 3, &[2])).to_string(), "[x3,[x1,x2]]");
    assert_eq!(u_pw(&desc(3, 1, 3, &[2])), Word::from_letters([3, 1, 2]));
}

#[test]
fn bracket_terms_parse_and_print() {
    for s in ["x1", "[x1,x2]", "[x1,[x2,x3]]", "[[x3,x2],x1]", "[[x2,x3],[x1,x4]]"] {
        let t: BracketTerm = s.parse().unwrap();
        assert_eq!(t.to_string(), s);
    }
    let t: BracketTerm = " [ x1 , [x2,x3] ] ".parse().unwrap();
    assert_eq!(t.word(), Word::from_letters([1, 2, 3]));
    for s in ["", "x", "x0", "[x1]", "[x1,x2", "[x1,x2]]", "[x1;x2]", "y1"] {
        assert!(s.parse::<BracketTerm>().is_err(), "{s:?}");
    }
    let deep = format!("{}x1{}", "[x1,".repeat(MAX_DEPTH + 1), "]".repeat(MAX_DEPTH + 1));
    assert!(deep.parse::<BracketTerm>().is_err());
}

#[test]
fn bracket_term_evaluates_to_the_skew_bracket() {
    let b = Bicharacter::multiparameter(3);
    let t: BracketTerm = "[x3,[x1,x2]]".parse().unwrap();
    let inner = skew_bracket(&b, &x(1), &x(2)).unwrap();
    assert_eq!(t.eval(&b).unwrap(), skew_bracket(&b, &x(3), &inner).unwrap());
    assert!("[x1,x4]".parse::<BracketTerm>().unwrap().eval(&b).is_err());
}
