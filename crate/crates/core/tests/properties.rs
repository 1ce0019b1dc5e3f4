mod common;

use std::cmp::Ordering;

use hfseq::arith::{
    add, cmp, from_decimal, from_nat, mul, pred, slow_add, sub, succ, to_decimal, to_nat,
};
use hfseq::dyck::{self, decode, encode};
use hfseq::natseq::{cons_nat, hd_nat, hfseq_to_nat, nat_to_hfseq, tl_nat};
use hfseq::system_t::{
    hfseq_to_type, parse_type, print_type, sp_step, succ_t, type_to_hfseq, Direction,
};
use hfseq::{HFSeq, TType};
use num_bigint::BigUint;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn config(cases: u32) -> Config {
    Config {
        cases,
        rng_seed: RngSeed::Fixed(common::SEED),
        failure_persistence: None,
        ..Config::default()
    }
}

fn trees(max_nodes: usize) -> impl Strategy<Value = HFSeq> {
    any::<u64>()
        .prop_map(move |s| common::random_tree(&mut ChaCha8Rng::seed_from_u64(s), max_nodes))
}

fn small_trees(max_nodes: u64) -> impl Strategy<Value = HFSeq> {
    any::<u64>()
        .prop_map(move |s| common::random_small_tree(&mut ChaCha8Rng::seed_from_u64(s), max_nodes))
}

fn convertible_trees() -> impl Strategy<Value = HFSeq> {
    any::<u64>()
        .prop_map(|s| common::random_convertible_tree(&mut ChaCha8Rng::seed_from_u64(s), 4096))
}

fn types(max_leaves: usize) -> impl Strategy<Value = TType> {
    (any::<u64>(), 1..=max_leaves)
        .prop_map(|(s, n)| common::random_type(&mut ChaCha8Rng::seed_from_u64(s), n))
}

fn bigs(max_bits: u64) -> impl Strategy<Value = BigUint> {
    (any::<u64>(), 1..=max_bits)
        .prop_map(|(s, b)| common::random_big(&mut ChaCha8Rng::seed_from_u64(s), b))
}

proptest! {
    #![proptest_config(config(1000))]

    #[test]
    fn cons_splits_back(n in 1u64..) {
        prop_assert_eq!(cons_nat(hd_nat(n).unwrap(), tl_nat(n).unwrap()), Ok(n));
    }

    #[test]
    fn hd_tl_undo_cons(x in 0u64..64, y in 0u64..(1 << 20)) {
        if let Ok(z) = cons_nat(x, y) {
            prop_assert_eq!(hd_nat(z), Ok(x));
            prop_assert_eq!(tl_nat(z), Ok(y));
        }
    }

    #[test]
    fn unrank_after_rank(t in small_trees(32)) {
        let n = hfseq_to_nat(&t).unwrap();
        prop_assert_eq!(nat_to_hfseq(n), t.clone());
        prop_assert_eq!(to_nat(&t), Ok(n));
    }

    #[test]
    fn tree_value_matches_bigint(t in trees(24)) {
        // Only trees whose value fits in memory as a flat integer.
        let shallow = t.children().all(|c| c.value_u64().is_some_and(|v| v < 1 << 16));
        if shallow {
            prop_assert_eq!(common::from_big(&common::big_value(&t)), t);
        }
    }

    #[test]
    fn bigint_homomorphism(a in bigs(4000), b in bigs(4000)) {
        let (x, y) = (common::from_big(&a), common::from_big(&b));
        prop_assert_eq!(common::big_value(&add(&x, &y)), &a + &b);
        prop_assert_eq!(cmp(&x, &y), a.cmp(&b));
        prop_assert_eq!(cmp(&x, &y) == Ordering::Equal, x == y);
        if a >= b {
            prop_assert_eq!(common::big_value(&sub(&x, &y).unwrap()), &a - &b);
        } else {
            prop_assert!(sub(&x, &y).is_err());
        }
    }

    #[test]
    fn succ_pred_on_any_tree(t in trees(128)) {
        let s = succ(&t);
        prop_assert_ne!(&s, &t);
        prop_assert_eq!(pred(&s).unwrap(), t);
    }

    #[test]
    fn codes_round_trip(t in trees(128)) {
        let code = encode(&t);
        prop_assert!(code.is_dyck_prime());
        prop_assert_eq!(code.len() as u64, 2 * t.node_count().unwrap());
        let back = decode(&code).unwrap();
        prop_assert_eq!(encode(&back), code);
        prop_assert_eq!(back, t);
    }

    #[test]
    fn literal_round_trip(t in trees(128)) {
        prop_assert_eq!(t.to_string().parse::<HFSeq>().unwrap(), t);
    }

    #[test]
    fn conversion_is_a_bijection(t in trees(128)) {
        prop_assert_eq!(type_to_hfseq(&hfseq_to_type(&t)), t);
    }

    #[test]
    fn conversion_carries_succ(t in convertible_trees()) {
        prop_assert_eq!(hfseq_to_type(&succ(&t)), succ_t(&hfseq_to_type(&t)));
    }

    #[test]
    fn type_round_trips(t in types(64)) {
        prop_assert_eq!(hfseq_to_type(&type_to_hfseq(&t)), t.clone());
        prop_assert_eq!(parse_type(&print_type(&t)).unwrap(), t);
    }

    #[test]
    fn sp_is_succ_both_ways(t in convertible_trees()) {
        let ty = hfseq_to_type(&t);
        let up = sp_step(Direction::Up, &ty).unwrap();
        prop_assert_eq!(&up, &succ_t(&ty));
        prop_assert_eq!(sp_step(Direction::Down, &up).unwrap(), ty);
    }
}

proptest! {
    #![proptest_config(config(200))]

    #[test]
    fn bigint_products(a in bigs(512), b in bigs(512)) {
        let (x, y) = (common::from_big(&a), common::from_big(&b));
        prop_assert_eq!(common::big_value(&mul(&x, &y)), &a * &b);
    }

    #[test]
    fn decimal_matches_bigint(a in bigs(640)) {
        let t = common::from_big(&a);
        let s = to_decimal(&t);
        prop_assert_eq!(&s, &a.to_string());
        prop_assert_eq!(from_decimal(&s).unwrap(), t);
    }
}

#[test]
fn semiring_on_small_values() {
    let mut rng = common::rng_with(11);
    for _ in 0..300 {
        let [a, b, c] = [0; 3].map(|_| common::random_value(&mut rng, 20));
        let [x, y, z] = [a, b, c].map(from_nat);
        assert_eq!(to_nat(&mul(&add(&x, &y), &z)), Ok((a + b) * c));
        assert_eq!(add(&mul(&x, &z), &mul(&y, &z)), mul(&add(&x, &y), &z));
    }
}

#[test]
fn slow_add_matches_add() {
    for a in 0..=64 {
        for b in 0..=64 {
            let (x, y) = (from_nat(a), from_nat(b));
            assert_eq!(slow_add(&x, &y), add(&x, &y), "{a} + {b}");
        }
    }
}

#[test]
fn cmp_is_a_total_order() {
    let mut rng = common::rng_with(12);
    let mut xs: Vec<HFSeq> = (0..200)
        .map(|_| {
            let bits = rng.gen_range(1..300);
            common::from_big(&common::random_big(&mut rng, bits))
        })
        .collect();
    xs.extend(xs.clone().iter().take(20).cloned());
    xs.sort_by(cmp);
    for w in xs.windows(2) {
        assert_ne!(cmp(&w[0], &w[1]), Ordering::Greater);
        assert_eq!(cmp(&w[1], &w[0]), cmp(&w[0], &w[1]).reverse());
        assert_eq!(cmp(&w[0], &w[1]) == Ordering::Equal, w[0] == w[1]);
        if w[0] != w[1] {
            assert_eq!(sub(&w[0], &w[1]), Err(hfseq::Error::Underflow));
            let d = sub(&w[1], &w[0]).unwrap();
            assert_eq!(add(&d, &w[0]), w[1]);
        }
    }
}

#[test]
fn tower_exponents() {
    let value = |d| HFSeq::tower(d).value_u64();
    assert_eq!(value(0), Some(0));
    assert_eq!(value(1), Some(1));
    for d in 2..=5 {
        assert_eq!(value(d), Some(1u64 << value(d - 1).unwrap()), "T_{d}");
    }
    let t6 = common::big_value(&HFSeq::tower(6));
    assert_eq!(t6, BigUint::from(1u8) << 65536u32);
    for d in [8, 16, 64] {
        let t = HFSeq::tower(d);
        assert_eq!(pred(&succ(&t)), Ok(t.clone()));
        assert_eq!(succ(&pred(&t).unwrap()), t);
    }
}

#[test]
fn kraft_sums_increase_and_stay_below_one() {
    let mut prev = 0.0;
    for m in 1..=1024 {
        let r = dyck::kraft_check(m).unwrap();
        assert!(r.sum > prev && r.holds, "m = {m}");
        prev = r.sum;
    }
    for n in 0..4096 {
        let p = dyck::parsize(n);
        assert!(p >= 2 && p.is_multiple_of(2));
    }
}

#[test]
fn adversarial_codes_do_not_overflow_the_stack() {
    let depth = 1 << 20;
    let mut bits = vec![0u8; depth];
    bits.extend(std::iter::repeat_n(1u8, depth));
    let t = decode(&dyck::DyckCode::from_bits(bits.clone())).unwrap();
    assert_eq!(encode(&t).bits(), &bits[..]);
    let mut rng = common::rng_with(13);
    let noise: Vec<u8> = (0..10_000).map(|_| rng.gen_range(0..2)).collect();
    let _ = decode(&dyck::DyckCode::from_bits(noise));
}
