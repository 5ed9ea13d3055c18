use proptest::prelude::*;
use qkfact::exactq::Scalar;
use qkfact::fock::{diag_fn, dump, make_generator, parse_dump, Agreement, FockOp, FockSpace, Generator, Leg};
use qkfact::linalg::Matrix;

fn q() -> Scalar {
    Scalar::ratio(3, 5)
}

fn g(kind: Generator, leg: usize, s: &FockSpace) -> FockOp {
    make_generator(&kind, leg, s, &q()).unwrap()
}

#[test]
fn generators_on_the_vacuum() {
    let s = FockSpace::fock(6);
    let q2 = &q() * &q();
    assert!(g(Generator::A, 0, &s).apply_basis(0).is_empty());
    assert_eq!(g(Generator::Adag, 0, &s).apply_basis(0), &[(1, Scalar::one() - &q2)]);
    assert_eq!(g(Generator::AbarDag, 0, &s).apply_basis(0), &[(1, Scalar::one() - q2.inv().unwrap())]);
}

#[test]
fn canonical_commutator() {
    let n = 7;
    let s = FockSpace::fock(n);
    let c = FockOp::commutator(&g(Generator::A, 0, &s), &g(Generator::Adag, 0, &s)).unwrap();
    for j in 0..n {
        let want = &q().pow(2 * j as i64).unwrap() - &q().pow(2 * (j as i64 + 1)).unwrap();
        assert!(c.in_window(j));
        assert_eq!(c.apply_basis(j), &[(j, want)]);
    }
    assert!(!c.in_window(n), "the top vector is outside the window of a a†");
}

#[test]
fn flip_is_an_involution() {
    let s = FockSpace::new(4, vec![Leg::Fock, Leg::Two]);
    let x = g(Generator::Adag, 0, &s).add(&g(Generator::A, 0, &s)).unwrap();
    assert_eq!(x.flip_legs().unwrap().flip_legs().unwrap(), x);
}

#[test]
fn block_restrictions() {
    let s = FockSpace::fock_legs(5, 2);
    assert_eq!(FockOp::identity(&s).restrict_to_block(3).unwrap(), Matrix::identity(4));
    let x = g(Generator::A, 0, &s).compose(&g(Generator::AbarDag, 1, &s)).unwrap();
    let b = x.restrict_to_block(1).unwrap();
    let basis = s.block_basis(1);
    let (w01, w10) = (s.index(&[0, 1]).unwrap(), s.index(&[1, 0]).unwrap());
    let (i01, i10) = (basis.iter().position(|&i| i == w01).unwrap(), basis.iter().position(|&i| i == w10).unwrap());
    let want = Scalar::one() - (&q() * &q()).inv().unwrap();
    assert_eq!(b.get(i01, i10), &want);
    assert!(b.get(i10, i01).is_zero() && b.get(i10, i10).is_zero() && b.get(i01, i01).is_zero());
    let s = FockSpace::fock_legs(9, 2);
    let x = g(Generator::A, 0, &s).compose(&g(Generator::AbarDag, 1, &s)).unwrap();
    for m in 0..=4 {
        let mut power = FockOp::identity(&s);
        for _ in 0..=m {
            power = x.compose(&power).unwrap();
        }
        assert!(power.restrict_to_block(m).unwrap().is_zero());
    }
}

#[test]
fn comparison_witness() {
    let s = FockSpace::fock(4);
    let a = g(Generator::A, 0, &s);
    assert!(a.agree_on_window(&a).unwrap().is_equal());
    match a.agree_on_window(&a.scale(&Scalar::from_int(2))).unwrap() {
        Agreement::Differ(w) => assert_eq!((w.input.as_str(), w.charge), ("w1", 1)),
        other => panic!("{other:?}"),
    }
}

#[test]
fn diagonal_shift_relation() {
    let s = FockSpace::fock(6);
    let f = |j: i64| Ok(Scalar::from_int(j * j + 3));
    let fd = diag_fn(&s, 0, f).unwrap();
    let fd1 = diag_fn(&s, 0, |j| f(j + 1)).unwrap();
    let a = g(Generator::A, 0, &s);
    assert!(a.compose(&fd).unwrap().agree_on_window(&fd1.compose(&a).unwrap()).unwrap().is_equal());
}

#[test]
fn block_comparison_refuses_uncertified_inputs() {
    let s = FockSpace::fock(3);
    let ad = g(Generator::Adag, 0, &s);
    assert!(ad.agree_on_blocks(&ad, 3).is_err());
    assert!(ad.agree_on_blocks(&ad, 2).unwrap().is_equal());
}

fn letter() -> impl Strategy<Value = (u8, usize)> {
    (0u8..3, 0usize..2)
}

fn word_op(word: &[(u8, usize)], n: usize) -> FockOp {
    let s = FockSpace::fock_legs(n, 2);
    word.iter().fold(FockOp::identity(&s), |acc, &(k, leg)| {
        let kind = match k {
            0 => Generator::A,
            1 => Generator::Adag,
            _ => Generator::AbarDag,
        };
        g(kind, leg, &s).compose(&acc).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 32, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn dump_round_trip(word in proptest::collection::vec(letter(), 0..5)) {
        let op = word_op(&word, 4);
        prop_assert_eq!(parse_dump(&dump(&op).unwrap()).unwrap(), op);
    }

    #[test]
    fn certified_columns_do_not_depend_on_truncation(word in proptest::collection::vec(letter(), 1..6)) {
        let small = word_op(&word, 5);
        let big = word_op(&word, 9);
        let (ss, sb) = (small.domain().clone(), big.domain().clone());
        for j in small.window_indices() {
            let lifted: Vec<(usize, Scalar)> =
                small.apply_basis(j).iter().map(|(i, c)| (sb.index(&ss.digits(*i)).unwrap(), c.clone())).collect();
            let mut lifted = lifted;
            lifted.sort_by_key(|t| t.0);
            prop_assert_eq!(lifted.as_slice(), big.apply_basis(sb.index(&ss.digits(j)).unwrap()));
        }
    }

    #[test]
    fn embedding_commutes_with_composition(w1 in proptest::collection::vec(letter(), 0..3), w2 in proptest::collection::vec(letter(), 0..3)) {
        let (a, b) = (word_op(&w1, 8), word_op(&w2, 8));
        let t = FockSpace::new(8, vec![Leg::Fock, Leg::Two, Leg::Fock]);
        let lhs = a.compose(&b).unwrap().embed(&t, &[0, 2]).unwrap();
        let rhs = a.embed(&t, &[0, 2]).unwrap().compose(&b.embed(&t, &[0, 2]).unwrap()).unwrap();
        prop_assert!(lhs.agree_on_window(&rhs).unwrap().is_equal());
    }
}
