use atlas_ring::*;
use proptest::prelude::*;

fn p(s: &str) -> LaurentPoly {
    s.parse().unwrap()
}

#[test]
fn square_of_one_minus_q_inverse() {
    let a = p("1 - q^-1");
    assert_eq!(&a * &a, p("1 - 2*q^-1 + q^-2"));
    assert_eq!((&a * &a).to_string(), "1 - 2*q^-1 + q^-2");
}

#[test]
fn unit_and_additive_inverse() {
    let a = p("3*q^2*t1^-1 - 1/2 + q^-1");
    assert_eq!(&a * &LaurentPoly::one(), a);
    let z = p("q - 1") + p("1 - q");
    assert!(z.is_zero());
    assert!(z.terms().is_empty());
    assert_eq!(z, LaurentPoly::zero());
}

#[test]
fn diagonal_system() {
    let m = ExactMatrix::from_rows(vec![vec![p("q"), p("0")], vec![p("0"), p("q^-1")]]).unwrap();
    let out = m.solve(&[p("q"), p("0")]).unwrap();
    assert_eq!(out.rank, 2);
    let s = out.solution.unwrap();
    assert_eq!(s.coordinate(0), Some(LaurentPoly::one()));
    assert_eq!(s.coordinate(1), Some(LaurentPoly::zero()));
}

#[test]
fn proportional_column() {
    let m = ExactMatrix::from_rows(vec![vec![p("1 - q^-1")], vec![p("q - 1")]]).unwrap();
    let out = m.solve(&[p("2 - 2*q^-1"), p("2*q - 2")]).unwrap();
    assert_eq!(out.rank, 1);
    assert_eq!(out.solution.unwrap().coordinate(0), Some(LaurentPoly::from_int(2)));
    let off = m.solve(&[p("1"), p("1")]).unwrap();
    assert!(off.solution.is_none());
}

/// A = [I; C] (6×4) and B = [I | D] (4×6) both have rank 4, so A·B has
/// rank exactly 4.
#[test]
fn planted_rank_four() {
    let entry = |i: usize, j: usize| {
        let e = ((i * 7 + j * 3) % 5) as i32 - 2;
        LaurentPoly::q_pow(e) + LaurentPoly::from_int((i + 2 * j) as i64 % 3 - 1)
    };
    let mut a = ExactMatrix::new(6, 4);
    let mut b = ExactMatrix::new(4, 6);
    for i in 0..4 {
        a.set(i, i, LaurentPoly::one());
        b.set(i, i, LaurentPoly::one());
        for j in 4..6 {
            a.set(j, i, entry(j, i));
            b.set(i, j, entry(i, j) + LaurentPoly::var_pow(1, 1));
        }
    }
    let m = a.mul(&b).unwrap();
    assert_eq!(m.rank(), 4);
    assert_eq!(m.transpose().rank(), 4);
    assert_eq!(m.rank_eval(2, 9, 3), 4);
}

#[test]
fn malformed_text_is_rejected() {
    for s in ["", "q^", "1 +", "q^-", "x", "2**q", "q^1.5"] {
        assert!(s.parse::<LaurentPoly>().is_err(), "{s:?}");
    }
}

fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-3i32..=3, -2i32..=2, -4i64..=4), 0..5).prop_map(|ts| {
        LaurentPoly::from_terms(
            ts.into_iter()
                .map(|(a, b, c)| (Monomial::from_pairs([(0, a), (1, b)]), rat(c, 1))),
        )
    })
}

proptest! {
    #[test]
    fn text_round_trip(a in arb_poly()) {
        prop_assert_eq!(a.to_string().parse::<LaurentPoly>().unwrap(), a);
    }

    #[test]
    fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn exact_division_inverts_multiplication(a in arb_poly(), b in arb_poly()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).div_exact(&b), Some(a));
    }
}
