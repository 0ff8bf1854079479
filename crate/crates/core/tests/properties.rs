use gsym_core::bisnomial::{bisnomial, gaussian_binomial, q_bisnomial};
use gsym_core::combinatorics::{enum_paths, LatticePath, Model, Tiling};
use gsym_core::multipoly::{MPoly, Monomial, TSeries};
use gsym_core::partitions::{binomial, Partition};
use gsym_core::symfun::{gen_complete, gen_elementary};
use gsym_core::BigInteger;
use proptest::prelude::*;

const N: usize = 3;

fn small_poly() -> impl Strategy<Value = MPoly<BigInteger>> {
    prop::collection::vec((prop::collection::vec(0u32..3, N), -5i64..=5), 0..5).prop_map(|terms| {
        MPoly::from_terms(N, terms.into_iter().map(|(e, c)| (Monomial::new(e), BigInteger::from(c)))).unwrap()
    })
}

proptest! {
    #[test]
    fn mpoly_ring_laws(a in small_poly(), b in small_poly(), c in small_poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&(-&a) + &b, &b - &a);
    }

    #[test]
    fn mpoly_json_roundtrip(a in small_poly()) {
        prop_assert_eq!(MPoly::from_json(&a.to_json()).unwrap(), a);
    }

    #[test]
    fn series_inverse(tail in prop::collection::vec(small_poly(), 4)) {
        let mut coeffs = vec![MPoly::one(N)];
        coeffs.extend(tail);
        let f = TSeries::from_coeffs(N, 5, coeffs).unwrap();
        let g = f.inverse().unwrap();
        let (prod, one) = (f.try_mul(&g).unwrap(), TSeries::one(N, 5));
        prop_assert_eq!(prod.coeffs(), one.coeffs());
    }

    #[test]
    fn partition_text_roundtrip(parts in prop::collection::vec(1u32..6, 0..6)) {
        let p = Partition::from_unsorted(parts);
        prop_assert_eq!(p.to_string().parse::<Partition>().unwrap(), p.clone());
        prop_assert_eq!(p.conjugate().conjugate(), p.clone());
        prop_assert_eq!(p.conjugate().weight(), p.weight());
    }

    #[test]
    fn bisnomial_rows_are_symmetric(n in 1u32..6, s in 1u32..4, k in 0u32..16) {
        prop_assert_eq!(bisnomial(n, k, s), if k <= s * n { bisnomial(n, s * n - k, s) } else { BigInteger::from(0) });
        prop_assert_eq!(q_bisnomial(n, k, s).eval_at_one(), bisnomial(n, k, s));
    }

    #[test]
    fn gaussian_at_one(n in 0u32..9, k in 0u32..9) {
        let expected = if k <= n { binomial(n as u64, k as u64) } else { BigInteger::from(0) };
        prop_assert_eq!(gaussian_binomial(n, k).eval_at_one(), expected);
    }

    #[test]
    fn path_words_roundtrip(n in 1usize..4, k in 0u32..6, s in 1u32..4, h in any::<bool>()) {
        let model = if h { Model::H } else { Model::E };
        for p in enum_paths(n, k, s, model) {
            prop_assert_eq!(p.to_string().parse::<LatticePath>().unwrap(), p.clone());
            let t = p.to_tiling();
            prop_assert_eq!(t.to_string().parse::<Tiling>().unwrap(), t.clone());
            prop_assert_eq!(LatticePath::from_runs(&p.runs()), p.clone());
            prop_assert!(p.is_admissible(model, s));
        }
    }

    #[test]
    fn generators_are_symmetric(n in 1usize..4, k in 0u32..6, s in 1u32..4, i in 0usize..3, j in 0usize..3) {
        let (i, j) = (i % n, j % n);
        let e = gen_elementary(k, s, n);
        let h = gen_complete(k, s, n);
        prop_assert_eq!(e.swap_vars(i, j), e);
        prop_assert_eq!(h.swap_vars(i, j), h);
    }

    #[test]
    fn cyclotomic_power_sums(s in 1u32..8, k in 0u64..40) {
        let v = gsym_core::exactalg::cyc_power_sum(s, k).unwrap();
        let expected = if k % (s as u64 + 1) == 0 { BigInteger::from(s) } else { BigInteger::from(-1) };
        prop_assert_eq!(v.as_integer(), Some(expected));
    }
}
