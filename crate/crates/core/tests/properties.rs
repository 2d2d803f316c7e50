//! Property tests for the arc representation, checked against independent
//! oracles where one exists.

use std::collections::BTreeSet;

use arcdist_core::arc::{
    enumerate_arcs, enumerate_words, intersection, intersection_by_flips, random_arc,
    self_intersection, tighten, transport, transport_back, FlipPath,
};
use arcdist_core::surface::validate;
use arcdist_core::{ArcWord, Corner, Marked, RawWord, Slot, Triangulation};
use proptest::prelude::*;
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

/// Insert a back-and-forth detour after every crossing chosen by `rng`.
fn add_spurs(t: &Triangulation, a: &ArcWord, rng: &mut ChaCha8Rng) -> RawWord {
    let mut raw = a.to_raw();
    let mut out = Vec::new();
    let mut tri = raw.start.triangle();
    for &c in &raw.crossings {
        if rng.next_u32().is_multiple_of(2) {
            let s = Slot::new(tri, (rng.next_u32() % 3) as u8);
            out.push(s);
            out.push(t.twin(s));
        }
        out.push(c);
        tri = t.twin(c).triangle();
    }
    raw.crossings = out;
    raw
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn tighten_is_idempotent_and_removes_spurs(g in 1u32..=3, seed in 0u64..1_000_000, steps in 0usize..30) {
        let t = Triangulation::standard(g).unwrap();
        let a = random_arc(&t, seed, steps).unwrap();
        prop_assert_eq!(tighten(&t, &a.to_raw()).unwrap(), a.clone());
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xabcdef);
        let raw = add_spurs(&t, &a, &mut rng);
        prop_assert_eq!(tighten(&t, &raw).unwrap(), a);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn transport_round_trips(g in 1u32..=3, seed in 0u64..1_000_000, pick in 0usize..64) {
        let t = Triangulation::standard(g).unwrap();
        let a = random_arc(&t, seed, 15).unwrap();
        let edges = t.flippable_edges();
        let e = edges[pick % edges.len()];
        let (after, moved) = transport(&t, &a, e).unwrap();
        let (_, flip) = t.flip(e).unwrap();
        prop_assert_eq!(transport_back(&after, &t, &flip, &moved).unwrap(), a);
    }

    #[test]
    fn intersection_is_independent_of_the_triangulation(seed in 0u64..1_000_000, walk in 1usize..12) {
        let t = Triangulation::standard(1).unwrap();
        let v = random_arc(&t, seed, 15).unwrap();
        let w = random_arc(&t, seed + 1, 15).unwrap();
        let i = intersection(&t, &v, &w).unwrap();
        let mut path = FlipPath::new(&t);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..walk {
            let choices = path.last().flippable_edges();
            path.push(choices[(rng.next_u32() as usize) % choices.len()]).unwrap();
        }
        let (v2, w2) = (path.forward(&v).unwrap(), path.forward(&w).unwrap());
        prop_assert_eq!(intersection(path.last(), &v2, &w2).unwrap(), i);
        prop_assert_eq!(intersection(&t, &w, &v).unwrap(), i);
        prop_assert_eq!(path.backward(&v2).unwrap(), v);
    }
}

#[test]
fn routes_agree_on_seeded_pairs() {
    for g in 1..=3 {
        let t = Triangulation::standard(g).unwrap();
        for seed in 0..300 {
            let v = random_arc(&t, seed, 25).unwrap();
            let w = random_arc(&t, seed + 10_000, 25).unwrap();
            assert_eq!(
                intersection(&t, &v, &w).unwrap(),
                intersection_by_flips(&t, &v, &w).unwrap(),
                "genus {g}, seed {seed}"
            );
        }
    }
}

/// Every locally consistent word with at most `max_len` crossings, tightened.
/// Spurs and corner bigons may occur, so this covers more words than the
/// canonical enumeration visits.
fn brute_force(t: &Triangulation, max_len: usize) -> BTreeSet<ArcWord> {
    let mut out = BTreeSet::new();
    let starts: Vec<Corner> = t.corners().filter(|&c| t.vertex(c) == Marked::P1).collect();
    let mut stack: Vec<(Corner, Vec<Slot>)> = starts.iter().map(|&c| (c, Vec::new())).collect();
    while let Some((start, word)) = stack.pop() {
        let tri = word
            .last()
            .map_or(start.triangle(), |&c| t.twin(c).triangle());
        for k in 0..3u8 {
            let end = Corner::new(tri, k);
            if t.vertex(end) != Marked::P2 {
                continue;
            }
            let raw = RawWord {
                start,
                crossings: word.clone(),
                end,
            };
            let a = tighten(t, &raw).unwrap();
            if a.len() <= max_len && self_intersection(t, &a).unwrap() == 0 {
                out.insert(a);
            }
        }
        if word.len() < max_len {
            for k in 0..3u8 {
                let mut next = word.clone();
                next.push(Slot::new(tri, k));
                stack.push((start, next));
            }
        }
    }
    out
}

#[test]
fn enumeration_matches_brute_force() {
    let t = Triangulation::standard(1).unwrap();
    for max_len in 0..=4 {
        let fast: BTreeSet<ArcWord> = enumerate_arcs(&t, max_len).into_iter().collect();
        assert_eq!(fast, brute_force(&t, max_len), "max_len {max_len}");
    }
    let t = Triangulation::standard(2).unwrap();
    let fast: BTreeSet<ArcWord> = enumerate_arcs(&t, 2).into_iter().collect();
    assert_eq!(fast, brute_force(&t, 2));
}

#[test]
fn enumeration_is_sorted_and_unique() {
    let t = Triangulation::standard(2).unwrap();
    let words = enumerate_arcs(&t, 4);
    for pair in words.windows(2) {
        assert!(pair[0].len() <= pair[1].len());
        assert_ne!(pair[0], pair[1]);
    }
}

#[test]
fn some_words_cross_themselves() {
    let t = Triangulation::standard(1).unwrap();
    let all = enumerate_words(&t, 6, false);
    let crossing: Vec<_> = all
        .iter()
        .filter(|a| self_intersection(&t, a).unwrap() > 0)
        .collect();
    assert!(!crossing.is_empty());
    for a in crossing {
        assert_eq!(a.check(&t), Err(arcdist_core::Error::NotEmbedded));
    }
}

#[test]
fn flip_walks_stay_valid() {
    for g in 1..=3 {
        let mut t = Triangulation::standard(g).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(u64::from(g));
        for _ in 0..50 {
            let choices = t.flippable_edges();
            let e = choices[(rng.next_u32() as usize) % choices.len()];
            t = t.flip(e).unwrap().0;
            assert!(validate(&t.to_table()).is_empty());
            assert_eq!(t.num_vertices(), 2);
            assert_eq!(t.euler_characteristic(), 2 - 2 * i64::from(g));
            assert_eq!(Triangulation::from_table(&t.to_table()).unwrap(), t);
        }
    }
}
