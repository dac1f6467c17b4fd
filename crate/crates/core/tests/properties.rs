use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use srm_core::bruhat::{bruhat_join, bruhat_leq, bruhat_meet, bruhat_op_sequence, replay_ops};
use srm_core::decompose::{signed_subperm_decomposition, split_pm};
use srm_core::interchange::{eliminate_minus_ones, srm_interchange_path};
use srm_core::io::parse_sign_matrix;
use srm_core::margins::margins;
use srm_core::multichain::{multichain_of, srm_of_multichain};
use srm_core::sample::{random_plus_srm, random_srm};
use srm_core::{inverse_sum_matrix, is_srm, sum_matrix, Srm};

fn srm(max_dim: usize) -> impl Strategy<Value = Srm> {
    (1..=max_dim, 1..=max_dim, any::<u64>()).prop_map(|(m, n, seed)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        random_srm(m, n, 4 * m * n, &mut rng)
    })
}

fn srm_pair(max_dim: usize) -> impl Strategy<Value = (Srm, Srm)> {
    (1..=max_dim, 1..=max_dim, any::<u64>()).prop_map(|(m, n, seed)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (random_srm(m, n, 4 * m * n, &mut rng), random_srm(m, n, 4 * m * n, &mut rng))
    })
}

fn plus_pair(max_dim: usize) -> impl Strategy<Value = (Srm, Srm)> {
    (1..=max_dim, 1..=max_dim, any::<u64>()).prop_map(|(m, n, seed)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (random_plus_srm(m, n, &mut rng), random_plus_srm(m, n, &mut rng))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn sum_matrix_round_trip(a in srm(7)) {
        let s = sum_matrix(&a);
        prop_assert_eq!(inverse_sum_matrix(&s).to_sign().unwrap(), a.matrix().clone());
        for i in 0..a.rows() {
            prop_assert!((0..=1).contains(&s.get(i, 0)));
        }
        for j in 0..a.cols() {
            prop_assert!(s.get(0, j) >= 0);
        }
    }

    #[test]
    fn elimination_keeps_margins(a in srm(6)) {
        let (out, trace) = eliminate_minus_ones(&a);
        prop_assert_eq!(trace.len(), a.count(-1));
        prop_assert!(out.is_plus());
        prop_assert_eq!(margins(&out), margins(&a));
        prop_assert!(trace.replay().unwrap().iter().all(is_srm));
    }

    #[test]
    fn interchange_path_stays_in_class(a in srm(5)) {
        let (b, _) = eliminate_minus_ones(&a);
        let path = srm_interchange_path(&a, &b).unwrap();
        prop_assert_eq!(path.end().unwrap(), b.matrix().clone());
        prop_assert!(path.replay().unwrap().iter().all(is_srm));
    }

    #[test]
    fn decomposition_reconstructs(a in srm(7)) {
        let d = signed_subperm_decomposition(&a).unwrap();
        prop_assert!(d.verify(&a).is_ok());
    }

    #[test]
    fn multichain_round_trip(a in srm(6)) {
        prop_assume!(a.is_plus());
        let c = multichain_of(&a).unwrap();
        prop_assert_eq!(srm_of_multichain(&c), a);
    }

    #[test]
    fn meet_and_join_bound((a, b) in srm_pair(5)) {
        let meet = bruhat_meet(&a, &b).unwrap();
        let join = bruhat_join(&a, &b).unwrap();
        prop_assert!(bruhat_leq(&meet, &a).unwrap() && bruhat_leq(&meet, &b).unwrap());
        prop_assert!(bruhat_leq(&a, &join).unwrap() && bruhat_leq(&b, &join).unwrap());
        prop_assert_eq!(bruhat_leq(&a, &b).unwrap(), meet == a);
    }

    #[test]
    fn op_sequence_iff_below((a, c) in plus_pair(5)) {
        match bruhat_op_sequence(&c, &a) {
            Ok(ops) => {
                prop_assert!(bruhat_leq(&a, &c).unwrap());
                prop_assert_eq!(replay_ops(&c, &ops).unwrap(), a.matrix().clone());
            }
            Err(_) => prop_assert!(!bruhat_leq(&a, &c).unwrap()),
        }
    }

    #[test]
    fn split_recovers_matrix(a in srm(6)) {
        let (p, n) = split_pm(&a);
        prop_assert!(p.is_nonnegative() && n.is_nonnegative());
        let back: Vec<i8> = p.as_slice().iter().zip(n.as_slice()).map(|(x, y)| x - y).collect();
        prop_assert_eq!(&back[..], a.as_slice());
    }

    #[test]
    fn text_round_trip(a in srm(6)) {
        prop_assert_eq!(parse_sign_matrix(&a.to_string()).unwrap(), a.matrix().clone());
    }
}
