//! Worked examples, reproduced exactly.

use std::collections::BTreeSet;

use ncbruhat::bijections::{
    diagonal_map, diagonal_word, dyck_to_nc, nc_to_dyck, vertical_map, vertical_word,
};
use ncbruhat::general::{
    cycle_standard_form, general_vector, parse_coxeter_word, phi, standard_form_general,
    CoxeterElement,
};
use ncbruhat::noncrossing::{du_inverse, DuPair, NoncrossingPartition};
use ncbruhat::nonnesting::{ideal_of_antichain, DyckPath, OrderIdeal, Root};
use ncbruhat::perm::Permutation;
use ncbruhat::vectors::enumerate_vertical_vectors;

fn nc(n: usize, blocks: &[&[usize]]) -> NoncrossingPartition {
    NoncrossingPartition::from_blocks(n, blocks).unwrap()
}

/// The ideal generated by the roots `e_i - e_j` for the given pairs.
fn generated(n: usize, pairs: &[(usize, usize)]) -> OrderIdeal {
    let roots: Vec<Root> = pairs
        .iter()
        .map(|&(i, j)| Root::new(n, i, j).unwrap())
        .collect();
    ideal_of_antichain(n, &roots).unwrap()
}

fn cycles(n: usize, cs: &[&[usize]]) -> Permutation {
    Permutation::from_cycles(n, cs).unwrap()
}

#[test]
fn standard_form_of_two_cycle_partition() {
    let x = nc(5, &[&[1, 6], &[2, 3, 5]]);
    let word = x.standard_form();
    assert_eq!(word.letters(), &[2, 4, 3, 4, 5, 4, 3, 2, 1, 2, 3, 4, 5]);
    assert_eq!(word.to_string(), "s2 s4 s3 s4 s5 s4 s3 s2 s1 s2 s3 s4 s5");
    assert_eq!(x.to_blocks(), vec![vec![2, 3, 5], vec![1, 6]]);
    assert_eq!(x.permutation().coxeter_length(), 13);
    assert_eq!(x.permutation().reflection_length(), 3);
}

#[test]
fn du_pair_of_two_cycle_partition() {
    let x = nc(5, &[&[1, 6], &[2, 3, 5]]);
    assert_eq!(x.du_sets(), DuPair::new(vec![1, 2, 3], vec![3, 5, 6]));
    assert_eq!(
        du_inverse(5, &DuPair::new(vec![1, 2, 3], vec![3, 5, 6])).unwrap(),
        x
    );
}

#[test]
fn vertical_word_of_rank_two_ideal() {
    let p = generated(7, &[(1, 3), (2, 4), (5, 6), (6, 8)]);
    assert_eq!(p.len(), 9);
    assert_eq!(
        vertical_word(7, p.roots()).letters(),
        &[7, 3, 2, 1, 2, 3, 5, 6, 7]
    );
    let x = vertical_map(&p).unwrap();
    assert_eq!(x.permutation(), &cycles(7, &[&[1, 4], &[5, 6, 8]]));
    assert_eq!(x.standard_form().letters(), &[3, 2, 1, 2, 3, 5, 7, 6, 7]);
}

#[test]
fn diagonal_word_of_rank_four_ideal() {
    let p = generated(5, &[(1, 5), (4, 6)]);
    assert_eq!(p.len(), 12);
    let expected = [5, 4, 3, 2, 4, 3, 4, 1, 2, 3, 4, 5];
    assert_eq!(diagonal_word(5, p.roots()).letters(), &expected);
    let x = diagonal_map(&p).unwrap();
    assert_eq!(x.permutation(), &cycles(5, &[&[2, 4], &[1, 6]]));
    assert_eq!(
        x.standard_form().letters(),
        &[3, 2, 3, 5, 4, 3, 2, 1, 2, 3, 4, 5]
    );
}

#[test]
fn vertical_vectors_of_small_rank() {
    let listed = |n| -> BTreeSet<Vec<usize>> {
        enumerate_vertical_vectors(n)
            .iter()
            .map(|v| v.entries().to_vec())
            .collect()
    };
    let rank_two: BTreeSet<Vec<usize>> = [[0, 0], [1, 0], [0, 1], [1, 1], [1, 2]]
        .map(Vec::from)
        .into();
    assert_eq!(listed(2), rank_two);
    let rank_three: BTreeSet<Vec<usize>> = [
        [0, 0, 0],
        [1, 0, 0],
        [0, 1, 0],
        [0, 0, 1],
        [1, 1, 0],
        [1, 0, 1],
        [0, 1, 1],
        [1, 1, 1],
        [1, 2, 0],
        [0, 1, 2],
        [1, 2, 1],
        [1, 1, 2],
        [1, 2, 2],
        [1, 3, 2],
    ]
    .map(Vec::from)
    .into();
    assert_eq!(listed(3), rank_three);
}

#[test]
fn unreduced_standard_form() {
    let c = parse_coxeter_word(3, "2,1,3").unwrap();
    let x = SWordOf(&[2, 1, 3, 2]).eval(3);
    let word = standard_form_general(&x, &c).unwrap();
    assert_eq!(word.letters(), &[2, 1, 2, 3, 2, 3]);
    assert!(!word.is_reduced(3).unwrap());
    assert_eq!(general_vector(&x, &c).unwrap(), vec![1, 3, 2]);
    assert_eq!(
        phi(&x, &c).unwrap().permutation(),
        &SWordOf(&[2, 3, 2, 1, 2, 3]).eval(3)
    );
}

#[test]
fn cycle_form_is_reordered_syllables() {
    let c = CoxeterElement::from_cycle(4, &[1, 3, 5, 4, 2]).unwrap();
    assert_eq!(c.word().letters(), &[4, 2, 1, 3]);
    let word = cycle_standard_form(&[1, 3, 5, 2], &c).unwrap();
    assert_eq!(word.letters(), &[2, 4, 3, 4, 1]);
    assert_eq!(word.letter_counts(4), vec![1, 1, 1, 2]);
    let x = phi(&cycles(4, &[&[1, 3, 5, 2]]), &c).unwrap();
    assert_eq!(x.permutation(), &cycles(4, &[&[1, 2, 3, 5]]));
    assert_eq!(x.standard_form().letters(), &[1, 2, 4, 3, 4]);
}

#[test]
fn crossing_resolution_image() {
    let c = CoxeterElement::from_cycle(5, &[1, 2, 5, 6, 4, 3]).unwrap();
    let x = phi(&cycles(5, &[&[2, 5], &[1, 6, 3]]), &c).unwrap();
    assert_eq!(x.permutation(), &cycles(5, &[&[2, 3, 5], &[1, 6]]));
    assert_eq!(x.to_string(), "(2,3,5)(1,6)");
}

#[test]
fn dyck_path_of_three_block_partition() {
    let x = nc(11, &[&[2, 6, 11, 12], &[3, 4], &[7, 9, 10]]);
    let path = nc_to_dyck(&x);
    assert_eq!(path.to_string(), "uduuuuddudduuuuddudddudd");
    let parsed: DyckPath = "uduuuuddudduuuuddudddudd".parse().unwrap();
    assert_eq!(dyck_to_nc(&parsed).unwrap(), x);
}

struct SWordOf<'a>(&'a [usize]);

impl SWordOf<'_> {
    fn eval(&self, n: usize) -> Permutation {
        ncbruhat::perm::SWord::new(self.0.to_vec())
            .evaluate(n)
            .unwrap()
    }
}
