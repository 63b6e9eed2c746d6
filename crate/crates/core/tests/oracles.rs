//! Brute-force oracles, written independently of the library's shortcuts,
//! checked against the library on every small case.

use std::collections::{HashMap, HashSet, VecDeque};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use ncbruhat::bijections::u_map;
use ncbruhat::general::{coxeter_elements, enumerate_nc_general, phi, phi_with_order};
use ncbruhat::noncrossing::{enumerate_nc, enumerate_nc_by_filter, enumerate_nc_recursive};
use ncbruhat::nonnesting::enumerate_ideals;
use ncbruhat::perm::{Permutation, Reflection, SWord};
use ncbruhat::type_b::{BGroup, SignedCycle, SignedPermutation};

/// Breadth-first distances from the identity under right multiplication.
fn bfs_lengths(n: usize, gens: &[Permutation]) -> HashMap<Permutation, usize> {
    let e = Permutation::identity(n);
    let mut dist = HashMap::from([(e.clone(), 0)]);
    let mut queue = VecDeque::from([e]);
    while let Some(w) = queue.pop_front() {
        let d = dist[&w];
        for g in gens {
            let v = &w * g;
            if !dist.contains_key(&v) {
                dist.insert(v.clone(), d + 1);
                queue.push_back(v);
            }
        }
    }
    dist
}

fn simples(n: usize) -> Vec<Permutation> {
    (1..=n)
        .map(|i| Permutation::simple(n, i).unwrap())
        .collect()
}

fn transpositions(n: usize) -> Vec<Permutation> {
    Reflection::all(n)
        .into_iter()
        .map(|t| t.to_permutation(n).unwrap())
        .collect()
}

#[test]
fn lengths_match_breadth_first_search() {
    for n in 1..=5 {
        let by_simple = bfs_lengths(n, &simples(n));
        let by_refl = bfs_lengths(n, &transpositions(n));
        assert_eq!(by_simple.len(), (1..=n + 1).product::<usize>());
        for w in Permutation::all(n) {
            assert_eq!(w.coxeter_length(), by_simple[&w], "{w}");
            assert_eq!(w.reflection_length(), by_refl[&w], "{w}");
        }
    }
}

/// `u ≤ w` iff some subword of a reduced word for `w` evaluates to `u`.
fn subword_below(n: usize, w: &Permutation) -> HashSet<Permutation> {
    let word = w.reduced_word();
    let letters = word.letters();
    let mut out = HashSet::new();
    for mask in 0u32..1 << letters.len() {
        let sub: Vec<usize> = (0..letters.len())
            .filter(|&k| mask >> k & 1 == 1)
            .map(|k| letters[k])
            .collect();
        out.insert(SWord::new(sub).evaluate(n).unwrap());
    }
    out
}

#[test]
fn bruhat_tableau_matches_subword_criterion() {
    let mut pairs = 0;
    for n in 1..=3 {
        let all = Permutation::all(n);
        for w in &all {
            assert!(w.reduced_word().is_reduced(n).unwrap());
            let below = subword_below(n, w);
            for u in &all {
                assert_eq!(u.bruhat_leq(w).unwrap(), below.contains(u), "{u} ≤ {w}");
                pairs += 1;
            }
        }
    }
    assert_eq!(pairs, 4 + 36 + 576);
}

#[test]
fn noncrossing_equals_interval_below_long_cycle() {
    for n in 1..=5 {
        let lt = bfs_lengths(n, &transpositions(n));
        let c = Permutation::long_cycle(n);
        let brute: HashSet<Permutation> = Permutation::all(n)
            .into_iter()
            .filter(|w| lt[w] + lt[&(&w.inverse() * &c)] == lt[&c])
            .collect();
        let listed: HashSet<Permutation> = enumerate_nc(n)
            .iter()
            .map(|x| x.permutation().clone())
            .collect();
        assert_eq!(brute, listed, "n = {n}");
    }
}

#[test]
fn filter_and_recursive_enumerations_agree() {
    for n in 1..=6 {
        assert_eq!(
            enumerate_nc_by_filter(n),
            enumerate_nc_recursive(n),
            "n = {n}"
        );
    }
}

fn contains_231(w: &Permutation) -> bool {
    let a = w.one_line();
    let len = a.len();
    (0..len).any(|i| (i + 1..len).any(|j| (j + 1..len).any(|k| a[k] < a[i] && a[i] < a[j])))
}

#[test]
fn u_map_hits_exactly_the_231_avoiders() {
    for n in 1..=5 {
        let images: Vec<Permutation> = enumerate_ideals(n).iter().map(u_map).collect();
        let set: HashSet<Permutation> = images.iter().cloned().collect();
        assert_eq!(set.len(), images.len());
        let avoiders: HashSet<Permutation> = Permutation::all(n)
            .into_iter()
            .filter(|w| !contains_231(w))
            .collect();
        assert_eq!(set, avoiders, "n = {n}");
        for (p, w) in enumerate_ideals(n).iter().zip(&images) {
            assert_eq!(w.coxeter_length(), p.len());
        }
    }
}

#[test]
fn coxeter_elements_match_all_orderings() {
    for n in 1..=5 {
        let brute: HashSet<Permutation> = Permutation::all(n - 1)
            .iter()
            .map(|order| SWord::new(order.one_line().to_vec()).evaluate(n).unwrap())
            .collect();
        let listed: HashSet<Permutation> = coxeter_elements(n)
            .iter()
            .map(|c| c.permutation().clone())
            .collect();
        assert_eq!(brute, listed, "n = {n}");
        assert_eq!(listed.len(), 1 << (n - 1));
    }
}

#[test]
fn general_intervals_match_reflection_length() {
    for n in 1..=4 {
        let lt = bfs_lengths(n, &transpositions(n));
        for c in coxeter_elements(n) {
            let cp = c.permutation();
            let brute: HashSet<Permutation> = Permutation::all(n)
                .into_iter()
                .filter(|w| lt[w] + lt[&(&w.inverse() * cp)] == lt[cp])
                .collect();
            let listed: HashSet<Permutation> = enumerate_nc_general(&c).into_iter().collect();
            assert_eq!(brute, listed, "c' = {c}");
        }
    }
}

#[test]
fn crossing_resolution_order_does_not_matter() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for n in 1..=5 {
        for c in coxeter_elements(n) {
            for x in enumerate_nc_general(&c) {
                let fixed = phi(&x, &c).unwrap();
                for _ in 0..3 {
                    let random = phi_with_order(&x, &c, |k| rng.gen_range(0..k)).unwrap();
                    assert_eq!(random, fixed, "x = {x}, c' = {c}");
                }
            }
        }
    }
}

/// Length in `B_n` from inversions: reindex so the sign change sits at
/// position 1, then `ℓ = inv + neg + nsp`.
fn b_length_formula(w: &SignedPermutation) -> usize {
    let n = w.rank() as i32;
    let a: Vec<i32> = (1..=n)
        .map(|k| {
            let y = w.apply(n + 1 - k);
            y.signum() * (n + 1 - y.abs())
        })
        .collect();
    let len = a.len();
    let mut total = a.iter().filter(|&&x| x < 0).count();
    for i in 0..len {
        for j in i + 1..len {
            total += usize::from(a[i] > a[j]) + usize::from(a[i] + a[j] < 0);
        }
    }
    total
}

/// `n` minus the number of paired cycles, fixed points included.
fn b_reflection_length_formula(w: &SignedPermutation) -> usize {
    let n = w.rank();
    let moved: usize = w
        .cycles()
        .iter()
        .map(|c| match c {
            SignedCycle::Paired(v) => v.len(),
            SignedCycle::Balanced(v) => v.len() / 2,
        })
        .sum();
    let paired = w
        .cycles()
        .iter()
        .filter(|c| matches!(c, SignedCycle::Paired(_)))
        .count();
    n - (paired + (n - moved))
}

#[test]
fn type_b_lengths_match_formulas() {
    for n in 1..=4 {
        let g = BGroup::new(n);
        assert_eq!(g.len(), (1..=n).product::<usize>() << n);
        for w in g.elements() {
            assert_eq!(g.coxeter_length(w), b_length_formula(w), "{w:?}");
            assert_eq!(
                g.reflection_length(w),
                b_reflection_length_formula(w),
                "{w:?}"
            );
        }
    }
}

fn b_reduced_word(g: &BGroup, w: &SignedPermutation) -> Vec<usize> {
    let n = g.rank();
    let mut w = w.clone();
    let mut word = Vec::new();
    while g.coxeter_length(&w) > 0 {
        let i = (1..=n)
            .find(|&i| {
                let mut v = w.clone();
                v.mul_simple_right(i).unwrap();
                g.coxeter_length(&v) < g.coxeter_length(&w)
            })
            .unwrap();
        w.mul_simple_right(i).unwrap();
        word.push(i);
    }
    word.reverse();
    word
}

#[test]
fn type_b_bruhat_matches_subword_criterion() {
    for n in 1..=3 {
        let g = BGroup::new(n);
        let up = g.bruhat_up_sets();
        for (b, w) in g.elements().iter().enumerate() {
            let word = b_reduced_word(&g, w);
            assert_eq!(&SignedPermutation::from_word(n, &word).unwrap(), w);
            let mut below = HashSet::new();
            for mask in 0u32..1 << word.len() {
                let sub: Vec<usize> = (0..word.len())
                    .filter(|&k| mask >> k & 1 == 1)
                    .map(|k| word[k])
                    .collect();
                below.insert(SignedPermutation::from_word(n, &sub).unwrap());
            }
            for (a, u) in g.elements().iter().enumerate() {
                assert_eq!(up[a].contains(b), below.contains(u), "{u:?} ≤ {w:?}");
            }
        }
    }
}
