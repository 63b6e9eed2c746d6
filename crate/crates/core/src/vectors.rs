//! Vertical and diagonal vectors: per-label root counts of an order ideal.
//!
//! The vertical vector of a noncrossing partition counts each `s_i` in its
//! standard form; it can also be read off the polygons directly, from how
//! often `i` is nested and whether `i` starts an arc.

use crate::noncrossing::NoncrossingPartition;
use crate::nonnesting::OrderIdeal;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VerticalVector(pub Vec<usize>);

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DiagonalVector(pub Vec<usize>);

impl VerticalVector {
    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    /// Componentwise comparison.
    pub fn leq(&self, other: &Self) -> bool {
        componentwise_leq(&self.0, &other.0)
    }
}

impl DiagonalVector {
    pub fn entries(&self) -> &[usize] {
        &self.0
    }
}

pub fn componentwise_leq(a: &[usize], b: &[usize]) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| x <= y)
}

/// Entry `i` counts the roots of `p` with vertical label `i`.
pub fn vertical_vector(p: &OrderIdeal) -> VerticalVector {
    let mut v = vec![0; p.rank()];
    for r in p.roots() {
        v[r.vert_label() - 1] += 1;
    }
    VerticalVector(v)
}

/// Entry `i` is `2 · #{polygons in which i is nested} + [i ∈ D]`, where `i`
/// is nested in a polygon when it lies strictly between two consecutive
/// vertices.
pub fn vertical_vector_of_nc(x: &NoncrossingPartition) -> VerticalVector {
    let n = x.rank();
    let mut v = vec![0; n];
    for (a, b) in x.bumps() {
        v[a - 1] += 1;
        for i in a + 1..b {
            v[i - 1] += 2;
        }
    }
    VerticalVector(v)
}

fn step_allowed(from: usize, to: usize) -> bool {
    let delta = to as isize - from as isize;
    if from.is_multiple_of(2) {
        (-2..=1).contains(&delta)
    } else {
        (-1..=2).contains(&delta)
    }
}

/// Membership in `𝐕_n`: the first nonzero entry is 1, the last nonzero
/// entry is 1 or 2, and consecutive entries move by `{-2, -1, 0, 1}` from an
/// even entry and by `{-1, 0, 1, 2}` from an odd one. The zero vector
/// qualifies.
pub fn is_vertical_vector(w: &[usize]) -> bool {
    let first = w.iter().position(|&x| x != 0);
    let last = w.iter().rposition(|&x| x != 0);
    if let (Some(f), Some(l)) = (first, last) {
        if w[f] != 1 || !(w[l] == 1 || w[l] == 2) {
            return false;
        }
    }
    w.windows(2).all(|p| step_allowed(p[0], p[1]))
}

/// All of `𝐕_n`, lexicographically.
pub fn enumerate_vertical_vectors(n: usize) -> Vec<VerticalVector> {
    fn go(n: usize, cur: &mut Vec<usize>, out: &mut Vec<VerticalVector>) {
        if cur.len() == n {
            if is_vertical_vector(cur) {
                out.push(VerticalVector(cur.clone()));
            }
            return;
        }
        let seen_nonzero = cur.iter().any(|&x| x != 0);
        let candidates: Vec<usize> = match cur.last() {
            None => vec![0, 1],
            Some(_) if !seen_nonzero => vec![0, 1],
            Some(&prev) => (prev.saturating_sub(2)..=prev + 2)
                .filter(|&next| step_allowed(prev, next))
                .collect(),
        };
        for next in candidates {
            cur.push(next);
            go(n, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, &mut Vec::with_capacity(n), &mut out);
    out
}

/// Entry `i` counts the roots `e_a - e_{i+1}` in `p`.
pub fn diagonal_vector(p: &OrderIdeal) -> DiagonalVector {
    let mut v = vec![0; p.rank()];
    for r in p.roots() {
        v[r.diag_label() - 1] += 1;
    }
    DiagonalVector(v)
}

/// `w_i ≤ i` and `1 - w_1 ≤ 2 - w_2 ≤ ... ≤ n - w_n`.
pub fn is_diagonal_vector(w: &[usize]) -> bool {
    let shifted: Vec<isize> = w
        .iter()
        .enumerate()
        .map(|(k, &x)| (k + 1) as isize - x as isize)
        .collect();
    shifted.iter().all(|&s| s >= 0) && shifted.windows(2).all(|p| p[0] <= p[1])
}

pub fn enumerate_diagonal_vectors(n: usize) -> Vec<DiagonalVector> {
    fn go(n: usize, cur: &mut Vec<usize>, out: &mut Vec<DiagonalVector>) {
        let k = cur.len();
        if k == n {
            out.push(DiagonalVector(cur.clone()));
            return;
        }
        for x in 0..=k + 1 {
            cur.push(x);
            if is_diagonal_vector(cur) {
                go(n, cur, out);
            }
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, &mut Vec::with_capacity(n), &mut out);
    out
}

/// Whether `i ∈ U_x`, decided from the vertical vector alone. `i` ranges
/// over `2..=n + 1`.
pub fn u_membership_from_vector(v: &[usize], i: usize) -> bool {
    let n = v.len();
    assert!((2..=n + 1).contains(&i), "i = {i} outside 2..={}", n + 1);
    if i == n + 1 {
        return v[n - 1] > 0;
    }
    let (xi, prev) = (v[i - 1], v[i - 2]);
    if xi % 2 == 1 {
        prev == xi || prev == xi + 1
    } else {
        xi < prev
    }
}

pub fn u_membership(x: &NoncrossingPartition, i: usize) -> bool {
    u_membership_from_vector(vertical_vector_of_nc(x).entries(), i)
}

/// The four transition items on `(v_x, U_x)`: every decrease lands on a
/// point of `U_x`, and increases and decreases respect the parity table.
pub fn transition_items_hold(x: &NoncrossingPartition) -> bool {
    let v = vertical_vector_of_nc(x).0;
    let u = x.du_sets().u;
    v.windows(2).enumerate().all(|(k, w)| {
        let next_in_u = u.binary_search(&(k + 2)).is_ok();
        let (a, b) = (w[0], w[1]);
        match (a % 2 == 0, b.cmp(&a)) {
            (true, std::cmp::Ordering::Greater) => b == a + 1,
            (false, std::cmp::Ordering::Greater) => b == a + 1 || b == a + 2,
            (true, std::cmp::Ordering::Less) => (b + 1 == a || b + 2 == a) && next_in_u,
            (false, std::cmp::Ordering::Less) => b + 1 == a && next_in_u,
            (_, std::cmp::Ordering::Equal) => true,
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn predicate_examples() {
        assert!(is_vertical_vector(&[1, 2]));
        assert!(!is_vertical_vector(&[2, 0]));
        assert!(is_vertical_vector(&[1, 3, 2]));
        assert!(is_vertical_vector(&[0, 0, 0]));
        assert!(!is_vertical_vector(&[1, 3]));
    }

    #[test]
    fn rank_two_vectors() {
        let got: Vec<Vec<usize>> = enumerate_vertical_vectors(2)
            .into_iter()
            .map(|v| v.0)
            .collect();
        assert_eq!(
            got,
            vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1], vec![1, 2]]
        );
        let diag: Vec<Vec<usize>> = enumerate_diagonal_vectors(2)
            .into_iter()
            .map(|v| v.0)
            .collect();
        assert_eq!(
            diag,
            vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1], vec![1, 2]]
        );
    }

    #[test]
    fn nesting_formula() {
        let x = NoncrossingPartition::from_blocks(5, &[vec![1, 6], vec![2, 3, 5]]).unwrap();
        assert_eq!(vertical_vector_of_nc(&x).0, vec![1, 3, 3, 4, 2]);
        assert_eq!(x.standard_form().letter_counts(5), vec![1, 3, 3, 4, 2]);
        assert!(u_membership(&x, 5));
        assert!(!u_membership(&x, 4));
        let y = NoncrossingPartition::from_blocks(7, &[vec![1, 4], vec![5, 6, 8]]).unwrap();
        assert_eq!(vertical_vector_of_nc(&y).0, vec![1, 2, 2, 0, 1, 1, 2]);
        assert_eq!(
            vertical_vector_of_nc(&NoncrossingPartition::full_cycle(4)).0,
            vec![1, 1, 1, 1]
        );
    }

    #[test]
    fn diagonal_of_full_ideal() {
        assert_eq!(diagonal_vector(&OrderIdeal::full(4)).0, vec![1, 2, 3, 4]);
        assert_eq!(diagonal_vector(&OrderIdeal::empty(4)).0, vec![0; 4]);
    }
}
