use proptest::prelude::*;

use schubert_core::polyring::{complete, elementary, Alphabet, IntPolynomial};
use schubert_core::schubert::{self, AscentChoice};
use schubert_core::{Partition, Permutation};

fn p(s: &str) -> Permutation {
    s.parse().unwrap()
}

fn perm_in(n: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|w| Permutation::from_one_line(&w).unwrap())
}

/// Product of `e_m(x_1..x_k)` or `h_m(x_1..x_k)` with `𝔖_u`, expanded.
fn times(u: &Permutation, f: &IntPolynomial) -> schubert::SchubertExpansion {
    schubert::expand(&(&*schubert::schubert_poly(u) * f)).unwrap()
}

proptest! {
    #[test]
    fn construction_is_independent_of_route(w in perm_in(5), extra in 0usize..2) {
        let n = 5 + extra;
        let cached = schubert::schubert_poly(&w);
        for choice in [AscentChoice::First, AscentChoice::Last] {
            prop_assert_eq!(&schubert::schubert_poly_from(&w, n, choice).unwrap(), &*cached);
        }
    }

    #[test]
    fn monk_rule(u in perm_in(5), k in 1usize..5) {
        let x: Vec<IntPolynomial> = (1..=k).map(|i| IntPolynomial::var(Alphabet::X, i)).collect();
        let e1 = x.iter().fold(IntPolynomial::zero(Alphabet::X), |acc, v| &acc + v);
        let got = times(&u, &e1);
        let expected: std::collections::BTreeMap<Permutation, i128> =
            schubert::monk_multiply(&u, k).into_iter().map(|w| (w, 1)).collect();
        prop_assert_eq!(got.terms, expected);
    }

    #[test]
    fn pieri_rules_match_products(u in perm_in(4), k in 1usize..4, m in 0usize..3) {
        let rows: std::collections::BTreeMap<Permutation, i128> =
            schubert::pieri_targets_r(&u, k, m).into_iter().map(|w| (w, 1)).collect();
        let cols: std::collections::BTreeMap<Permutation, i128> =
            schubert::pieri_targets_c(&u, k, m).into_iter().map(|w| (w, 1)).collect();
        prop_assert_eq!(times(&u, &complete(m, k)).terms, rows);
        prop_assert_eq!(times(&u, &elementary(m, k)).terms, cols);
    }

    #[test]
    fn structure_constants_by_divided_differences(u in perm_in(4), v in perm_in(4)) {
        let e = schubert::product_expansion(&u, &v).unwrap();
        for (w, &c) in &e.terms {
            prop_assert_eq!(schubert::structure_constant(&u, &v, w).unwrap(), c);
        }
    }
}

#[test]
fn small_polynomials() {
    let x = |s: &str| IntPolynomial::parse(s, Alphabet::X).unwrap();
    assert_eq!(*schubert::schubert_poly(&p("1")), IntPolynomial::one(Alphabet::X));
    assert_eq!(*schubert::schubert_poly(&p("213")), x("x1"));
    assert_eq!(*schubert::schubert_poly(&p("1432")), x("x1^2*x2 + x1^2*x3 + x1*x2^2 + x1*x2*x3 + x2^2*x3"));
    assert_eq!(*schubert::schubert_poly(&p("321")), x("x1^2*x2"));
}

#[test]
fn grassmannian_schubert_polynomials_are_schur_polynomials() {
    // s_λ(x_1..x_k) = det h_{λ_i - i + j} for two rows
    for (a, b) in [(1, 1), (2, 1), (3, 1), (2, 2), (3, 2)] {
        let lambda = Partition::new(vec![a, b]).unwrap();
        let s = schubert::schur_poly(&lambda, 2).unwrap();
        let det = &(&complete(a, 2) * &complete(b, 2)) - &(&complete(a + 1, 2) * &complete(b - 1, 2));
        assert_eq!(*s, det, "λ = {lambda}");
    }
}

#[test]
fn psi_maps_schubert_polynomials_to_schubert_positive_sums() {
    for w in Permutation::all(5) {
        for p in 1..=5 {
            let e = schubert::psi_p(&w, p).unwrap();
            assert!(e.is_nonnegative());
            let f = schubert::schubert_poly(&w);
            let image = f.substitute(&schubert::psi_p_substitution(p, f.num_vars().max(p))).unwrap();
            assert_eq!(e.to_polynomial().unwrap(), image);
        }
    }
}

#[test]
fn lr_coefficients_of_grassmannian_cycles_are_classical() {
    // ζ = v(λ,k) v(μ,k)⁻¹ carries c^λ_{μν} at ν
    let k = 3;
    for lambda in Partition::in_box(3, 3) {
        for mu in Partition::in_box(3, 3).into_iter().filter(|m| lambda.contains(m)) {
            let zeta = Permutation::grassmannian(&lambda, k)
                .unwrap()
                .compose(&Permutation::grassmannian(&mu, k).unwrap().inverse());
            let v = schubert::lr_vector_perm(&zeta).unwrap();
            for nu in Partition::all_of_size(lambda.size() - mu.size()) {
                let c = schubert_core::tableaux::lrc_classical(&mu, &nu, &lambda).unwrap() as i128;
                assert_eq!(v.get(&nu).copied().unwrap_or(0), c, "λ = {lambda}, μ = {mu}, ν = {nu}");
            }
        }
    }
}

#[test]
fn out_of_range_arguments_are_errors() {
    assert!(schubert::a_p_set(&p("21"), 0).is_err());
    assert!(schubert::schubert_poly_from(&p("4321"), 3, AscentChoice::First).is_err());
}
