//! Three bijections from order ideals of the root poset to noncrossing
//! partitions: through Dyck paths, through the vertical labeling, and
//! through the diagonal labeling. They coincide.

use crate::error::Result;
use crate::noncrossing::{du_inverse, DuPair, NoncrossingPartition};
use crate::nonnesting::{enumerate_ideals, ideal_to_dyck, DyckPath, OrderIdeal, Root, Step};
use crate::perm::{Permutation, SWord};

/// A positive root together with both of its labels.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LabeledRoot {
    pub root: Root,
    pub vert_label: usize,
    pub diag_label: usize,
}

impl From<Root> for LabeledRoot {
    fn from(root: Root) -> Self {
        LabeledRoot {
            root,
            vert_label: root.vert_label(),
            diag_label: root.diag_label(),
        }
    }
}

/// Each point contributes two steps: `ud` if no arc touches it, `du` if
/// arcs both enter and leave, `uu` if one only leaves, `dd` if one only
/// enters.
pub fn nc_to_dyck(x: &NoncrossingPartition) -> DyckPath {
    let n = x.rank();
    let du = x.du_sets();
    let mut steps = Vec::with_capacity(2 * n + 2);
    for i in 1..=n + 1 {
        let opens = du.d.binary_search(&i).is_ok();
        let closes = du.u.binary_search(&i).is_ok();
        let pair = match (opens, closes) {
            (false, false) => [Step::Up, Step::Down],
            (true, true) => [Step::Down, Step::Up],
            (true, false) => [Step::Up, Step::Up],
            (false, true) => [Step::Down, Step::Down],
        };
        steps.extend(pair);
    }
    DyckPath::new(steps).expect("step rules always produce a Dyck path")
}

pub fn dyck_to_nc(path: &DyckPath) -> Result<NoncrossingPartition> {
    let n = path.rank();
    let mut pair = DuPair::default();
    for (k, steps) in path.steps().chunks(2).enumerate() {
        let i = k + 1;
        match (steps[0], steps[1]) {
            (Step::Up, Step::Down) => {}
            (Step::Down, Step::Up) => {
                pair.d.push(i);
                pair.u.push(i);
            }
            (Step::Up, Step::Up) => pair.d.push(i),
            (Step::Down, Step::Down) => pair.u.push(i),
        }
    }
    du_inverse(n, &pair)
}

/// The composite ideal → Dyck path → noncrossing partition.
pub fn dyck_map(p: &OrderIdeal) -> NoncrossingPartition {
    dyck_to_nc(&ideal_to_dyck(p)).expect("ideal paths decode to valid pairs")
}

fn roots_by_height(n: usize, roots: &[Root]) -> Vec<Vec<Root>> {
    let mut rows = vec![Vec::new(); n + 1];
    for &r in roots {
        rows[r.height()].push(r);
    }
    for row in rows.iter_mut() {
        row.sort_unstable();
    }
    rows
}

/// Rows from height `n` down to 1. Even rows list their vertical labels in
/// decreasing order, odd rows in increasing order.
pub fn vertical_word(n: usize, roots: &[Root]) -> SWord {
    let rows = roots_by_height(n, roots);
    let mut word = SWord::empty();
    for h in (1..=n).rev() {
        let labels = rows[h].iter().map(|r| r.vert_label());
        if h % 2 == 0 {
            labels.rev().for_each(|l| word.push(l));
        } else {
            labels.for_each(|l| word.push(l));
        }
    }
    word
}

/// `(even rows) (odd rows)⁻¹`, where each group runs through its rows in
/// increasing height and each row lists diagonal labels in decreasing order.
pub fn diagonal_word(n: usize, roots: &[Root]) -> SWord {
    let rows = roots_by_height(n, roots);
    let group = |parity: usize| {
        let mut w = SWord::empty();
        for h in (1..=n).filter(|h| h % 2 == parity) {
            rows[h].iter().rev().for_each(|r| w.push(r.diag_label()));
        }
        w
    };
    group(0).concat(&group(1).inverse())
}

/// All rows in increasing height, each with diagonal labels decreasing.
pub fn u_word(n: usize, roots: &[Root]) -> SWord {
    let rows = roots_by_height(n, roots);
    let mut word = SWord::empty();
    for row in &rows[1..] {
        row.iter().rev().for_each(|r| word.push(r.diag_label()));
    }
    word
}

fn eval(word: &SWord, n: usize) -> Permutation {
    word.evaluate(n).expect("labels lie in 1..=n")
}

pub fn vertical_image(p: &OrderIdeal) -> Permutation {
    eval(&vertical_word(p.rank(), p.roots()), p.rank())
}

pub fn diagonal_image(p: &OrderIdeal) -> Permutation {
    eval(&diagonal_word(p.rank(), p.roots()), p.rank())
}

/// `𝒱`; fails only if the image is not noncrossing.
pub fn vertical_map(p: &OrderIdeal) -> Result<NoncrossingPartition> {
    NoncrossingPartition::from_permutation(&vertical_image(p))
}

/// `𝒟`; fails only if the image is not noncrossing.
pub fn diagonal_map(p: &OrderIdeal) -> Result<NoncrossingPartition> {
    NoncrossingPartition::from_permutation(&diagonal_image(p))
}

/// `𝒰`, whose images are the 231-avoiding permutations.
pub fn u_map(p: &OrderIdeal) -> Permutation {
    eval(&u_word(p.rank(), p.roots()), p.rank())
}

/// `#{odd-height roots} - #{even-height roots}`, the reflection length of
/// the image.
pub fn lt_from_ideal(p: &OrderIdeal) -> usize {
    let odd = p.roots().iter().filter(|r| r.height() % 2 == 1).count();
    odd - (p.len() - odd)
}

/// Ideals on which the three maps do not all agree.
pub fn equivalence_mismatches(n: usize) -> Vec<OrderIdeal> {
    enumerate_ideals(n)
        .into_iter()
        .filter(|p| {
            let d = dyck_map(p);
            d.permutation() != &vertical_image(p) || d.permutation() != &diagonal_image(p)
        })
        .collect()
}

pub fn check_equivalence(n: usize) -> bool {
    equivalence_mismatches(n).is_empty()
}
