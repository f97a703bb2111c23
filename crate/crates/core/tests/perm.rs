use proptest::prelude::*;

use schubert_core::Permutation;

fn perm_in(max: usize) -> impl Strategy<Value = Permutation> {
    (1..=max)
        .prop_flat_map(|n| Just((1..=n).collect::<Vec<usize>>()).prop_shuffle())
        .prop_map(|w| Permutation::from_one_line(&w).unwrap())
}

fn increasing_set(n: usize, extra: usize) -> impl Strategy<Value = Vec<usize>> {
    proptest::sample::subsequence((1..=n + extra).collect::<Vec<_>>(), n)
}

proptest! {
    #[test]
    fn one_line_and_cycle_notation_round_trip(w in perm_in(9)) {
        prop_assert_eq!(w.to_string().parse::<Permutation>().unwrap(), w.clone());
        prop_assert_eq!(w.cycle_string().parse::<Permutation>().unwrap(), w);
    }

    #[test]
    fn group_laws(a in perm_in(7), b in perm_in(7), c in perm_in(7)) {
        prop_assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
        prop_assert!(a.compose(&a.inverse()).is_identity());
        prop_assert_eq!(a.compose(&b).inverse(), b.inverse().compose(&a.inverse()));
    }

    #[test]
    fn length_code_and_reduced_word(w in perm_in(8)) {
        let code = w.lehmer_code();
        prop_assert_eq!(code.iter().sum::<usize>(), w.length());
        prop_assert_eq!(Permutation::from_lehmer_code(&code).unwrap(), w.clone());
        let word = w.reduced_word();
        prop_assert_eq!(word.len(), w.length());
        let rebuilt = word
            .iter()
            .fold(Permutation::identity(), |acc, &i| acc.compose(&Permutation::simple(i).unwrap()));
        prop_assert_eq!(rebuilt, w);
    }

    #[test]
    fn phi_restrict_and_shape((w, p_set) in perm_in(6).prop_flat_map(|w| {
        let n = w.degree().max(1);
        (Just(w), (0usize..4).prop_flat_map(move |extra| increasing_set(n, extra)))
    })) {
        let image = w.phi(&p_set).unwrap();
        prop_assert_eq!(image.restrict(&p_set).unwrap(), w.clone());
        prop_assert!(image.shape_equivalent(&w));
        prop_assert_eq!(image.rank_abs(), w.rank_abs());
        prop_assert_eq!(image.shape_canonical().shape_canonical(), image.shape_canonical());
    }

    #[test]
    fn bar_and_cyclic_shift_are_involution_and_order_n(w in perm_in(7)) {
        let n = 7;
        prop_assert_eq!(w.bar(n).unwrap().bar(n).unwrap(), w.clone());
        let mut z = w.clone();
        for _ in 0..n {
            z = z.cyclic_shift(n).unwrap();
        }
        prop_assert_eq!(z, w.clone());
        prop_assert_eq!(w.cyclic_shift(n).unwrap().rank_abs(), w.rank_abs());
    }
}

#[test]
fn disjointness_matches_noncrossing_chords_on_s6() {
    let all = Permutation::all(6);
    let mut checked = 0;
    for z in &all {
        let sz = z.support();
        for e in &all {
            if e.support().iter().any(|x| sz.contains(x)) {
                continue;
            }
            assert_eq!(z.is_disjoint(e), !z.crossing_oracle(e).unwrap(), "{z} and {e}");
            checked += 1;
        }
    }
    assert!(checked > 1000);
}

#[test]
fn crossing_oracle_rejects_shared_support() {
    let z: Permutation = "(12)".parse().unwrap();
    assert!(z.crossing_oracle(&"(23)".parse().unwrap()).is_err());
}

#[test]
fn malformed_input_is_reported_with_position() {
    let err = "41x2".parse::<Permutation>().unwrap_err().to_string();
    assert!(err.contains("position 3"), "{err}");
    assert!(Permutation::from_one_line(&[1, 2, 2]).is_err());
    assert!("(12)(23)".parse::<Permutation>().is_err());
}

#[test]
fn worked_examples() {
    let z: Permutation = "(162)(354)".parse().unwrap();
    let u: Permutation = "312645".parse().unwrap();
    assert_eq!(z.compose(&u).to_string(), "561234");
}
