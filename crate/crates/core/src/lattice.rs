//! Finite posets, lattice checks, and Bruhat order restricted to
//! noncrossing partitions.

use std::collections::HashMap;
use std::fmt::Write as _;

use fixedbitset::FixedBitSet;

use crate::bijections::{diagonal_word, vertical_map};
use crate::error::Result;
use crate::noncrossing::{enumerate_nc, NoncrossingPartition};
use crate::nonnesting::{enumerate_ideals, OrderIdeal, Root};
use crate::perm::{tableau_leq, Permutation};
use crate::vectors::vertical_vector_of_nc;

/// A partial order on `0..len`, stored as up-sets.
#[derive(Clone, Debug)]
pub struct FinitePoset {
    up: Vec<FixedBitSet>,
}

impl FinitePoset {
    /// Builds the relation `a ≤ b` from a predicate. The predicate is not
    /// checked for the partial-order axioms; see [`FinitePoset::is_partial_order`].
    pub fn from_relation(len: usize, mut leq: impl FnMut(usize, usize) -> bool) -> Self {
        let up = (0..len)
            .map(|a| {
                let mut set = FixedBitSet::with_capacity(len);
                for b in 0..len {
                    if leq(a, b) {
                        set.insert(b);
                    }
                }
                set
            })
            .collect();
        FinitePoset { up }
    }

    pub fn len(&self) -> usize {
        self.up.len()
    }

    pub fn is_empty(&self) -> bool {
        self.up.is_empty()
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.up[a].contains(b)
    }

    pub fn is_partial_order(&self) -> bool {
        let m = self.len();
        (0..m).all(|a| self.leq(a, a))
            && (0..m).all(|a| (0..m).all(|b| a == b || !(self.leq(a, b) && self.leq(b, a))))
            && (0..m).all(|a| self.up[a].ones().all(|b| self.up[b].is_subset(&self.up[a])))
    }

    /// Pairs `(a, b)` with `a ⋖ b`, sorted.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.len() {
            for b in self.up[a].ones().filter(|&b| b != a) {
                let between = self.up[a]
                    .ones()
                    .any(|c| c != a && c != b && self.leq(c, b));
                if !between {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&a| self.up[a].count_ones(..) == 1)
            .collect()
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&a| (0..self.len()).all(|b| b == a || !self.leq(b, a)))
            .collect()
    }

    /// `table[a * len + b]` is the join of `a` and `b`, or `None` if some
    /// pair has no least upper bound.
    pub fn join_table(&self) -> Option<Vec<usize>> {
        let m = self.len();
        let sizes: Vec<usize> = self.up.iter().map(|s| s.count_ones(..)).collect();
        let mut table = vec![0; m * m];
        for a in 0..m {
            for b in a..m {
                let mut bounds = self.up[a].clone();
                bounds.intersect_with(&self.up[b]);
                let total = bounds.count_ones(..);
                let join = bounds.ones().find(|&u| sizes[u] == total)?;
                table[a * m + b] = join;
                table[b * m + a] = join;
            }
        }
        Some(table)
    }

    /// The dual poset.
    pub fn dual(&self) -> FinitePoset {
        FinitePoset::from_relation(self.len(), |a, b| self.leq(b, a))
    }

    pub fn meet_table(&self) -> Option<Vec<usize>> {
        self.dual().join_table()
    }

    pub fn is_lattice(&self) -> bool {
        !self.is_empty() && self.join_table().is_some() && self.meet_table().is_some()
    }

    /// Checks `a ∧ (b ∨ c) = (a ∧ b) ∨ (a ∧ c)` over all triples.
    pub fn is_distributive_lattice(&self) -> bool {
        if self.is_empty() {
            return false;
        }
        let (Some(join), Some(meet)) = (self.join_table(), self.meet_table()) else {
            return false;
        };
        let m = self.len();
        for a in 0..m {
            for b in 0..m {
                let ab = meet[a * m + b];
                for c in b + 1..m {
                    let lhs = meet[a * m + join[b * m + c]];
                    let rhs = join[ab * m + meet[a * m + c]];
                    if lhs != rhs {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Every cover raises `rank` by exactly one.
    pub fn is_graded_by(&self, rank: &[usize]) -> bool {
        rank.len() == self.len() && self.covers().iter().all(|&(a, b)| rank[b] == rank[a] + 1)
    }

    /// Same relation on the same index set.
    pub fn same_relation(&self, other: &Self) -> bool {
        self.up == other.up
    }

    /// Hasse diagram in DOT, nodes in index order, edges sorted.
    pub fn to_dot(&self, name: &str, labels: &[String]) -> String {
        let mut out = String::new();
        writeln!(out, "digraph \"{name}\" {{").unwrap();
        writeln!(out, "  rankdir=BT;").unwrap();
        for (k, label) in labels.iter().enumerate() {
            writeln!(out, "  n{k} [label=\"{}\"];", label.replace('"', "\\\"")).unwrap();
        }
        for (a, b) in self.covers() {
            writeln!(out, "  n{a} -> n{b};").unwrap();
        }
        out.push_str("}\n");
        out
    }
}

/// Bruhat order among the given permutations, by the tableau criterion.
pub fn bruhat_poset_on(elements: &[Permutation]) -> FinitePoset {
    let tableaux: Vec<Vec<u8>> = elements.iter().map(|w| w.tableau()).collect();
    FinitePoset::from_relation(elements.len(), |a, b| {
        tableau_leq(&tableaux[a], &tableaux[b])
    })
}

/// `NC(S_{n+1}, c)` in canonical order with the Bruhat order.
pub fn restricted_bruhat_poset(n: usize) -> (Vec<NoncrossingPartition>, FinitePoset) {
    let elements = enumerate_nc(n);
    let perms: Vec<Permutation> = elements.iter().map(|x| x.permutation().clone()).collect();
    let poset = bruhat_poset_on(&perms);
    (elements, poset)
}

/// Order ideals under inclusion.
pub fn ideal_poset(n: usize) -> (Vec<OrderIdeal>, FinitePoset) {
    let ideals = enumerate_ideals(n);
    let poset = FinitePoset::from_relation(ideals.len(), |a, b| ideals[a].is_subset(&ideals[b]));
    (ideals, poset)
}

/// The first pair on which Bruhat order, the componentwise order on
/// vertical vectors, and inclusion of ideals under `𝒱` disagree.
pub fn order_agreement_counterexample(n: usize) -> Option<String> {
    let (elements, bruhat) = restricted_bruhat_poset(n);
    let vectors: Vec<Vec<usize>> = elements
        .iter()
        .map(|x| vertical_vector_of_nc(x).0)
        .collect();
    let index: HashMap<Permutation, usize> = elements
        .iter()
        .enumerate()
        .map(|(k, x)| (x.permutation().clone(), k))
        .collect();
    let mut ideal_of = vec![None; elements.len()];
    for p in enumerate_ideals(n) {
        let Ok(x) = vertical_map(&p) else {
            return Some(format!("𝒱({p}) is not noncrossing"));
        };
        let k = index[x.permutation()];
        if ideal_of[k].is_some() {
            return Some(format!("𝒱 is not injective: {x} has two preimages"));
        }
        ideal_of[k] = Some(p);
    }
    let ideal_of: Vec<OrderIdeal> = ideal_of
        .into_iter()
        .map(|p| p.expect("counts agree"))
        .collect();
    for a in 0..elements.len() {
        for b in 0..elements.len() {
            let by_bruhat = bruhat.leq(a, b);
            let by_vector = vectors[a].iter().zip(&vectors[b]).all(|(x, y)| x <= y);
            let by_ideal = ideal_of[a].is_subset(&ideal_of[b]);
            if by_bruhat != by_vector || by_bruhat != by_ideal {
                return Some(format!(
                    "{} vs {}: bruhat {by_bruhat}, vectors {by_vector}, ideals {by_ideal}",
                    elements[a], elements[b]
                ));
            }
        }
    }
    None
}

pub fn orders_agree(n: usize) -> bool {
    order_agreement_counterexample(n).is_none()
}

/// Elements covered by `y` in Bruhat order restricted to `NC`, obtained by
/// splitting a block between consecutive integers `k, k + 1`, or by
/// inserting a fixed point `k` between consecutive vertices `i < k < i'` of
/// a block when the result stays noncrossing.
pub fn nc_covers(y: &NoncrossingPartition) -> Vec<NoncrossingPartition> {
    let n = y.rank();
    let blocks = y.blocks();
    let fixed: Vec<usize> = (1..=n + 1)
        .filter(|&k| y.permutation().apply(k) == k)
        .collect();
    let mut out = Vec::new();
    for (b, block) in blocks.iter().enumerate() {
        let others = || {
            blocks
                .iter()
                .enumerate()
                .filter(move |&(c, _)| c != b)
                .map(|(_, x)| x.clone())
        };
        for pos in 0..block.len() - 1 {
            let (lo, hi) = (block[pos], block[pos + 1]);
            if hi == lo + 1 {
                let mut parts: Vec<Vec<usize>> = others().collect();
                parts.push(block[..=pos].to_vec());
                parts.push(block[pos + 1..].to_vec());
                out.push(
                    NoncrossingPartition::from_blocks(n, &parts)
                        .expect("splitting keeps noncrossing"),
                );
            }
            for &k in fixed.iter().filter(|&&k| lo < k && k < hi) {
                let mut grown = block.clone();
                grown.insert(pos + 1, k);
                let mut parts: Vec<Vec<usize>> = others().collect();
                parts.push(grown);
                if let Ok(x) = NoncrossingPartition::from_blocks(n, &parts) {
                    out.push(x);
                }
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Outcome of deleting a root from an ideal and evaluating the diagonal
/// word of what remains.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Deletion {
    /// The root was maximal; the remainder is an ideal one step down.
    Cover,
    NotReduced,
    NotNoncrossing,
    /// A non-maximal deletion that still gives a reduced noncrossing word.
    ReducedNoncrossing,
}

pub fn deletion_dichotomy(p: &OrderIdeal, alpha: Root) -> Result<Deletion> {
    let rest = p.without_root(alpha)?;
    if p.is_maximal(alpha) {
        return Ok(Deletion::Cover);
    }
    let n = p.rank();
    let word = diagonal_word(n, &rest);
    let w = word.evaluate(n)?;
    Ok(if w.coxeter_length() != word.len() {
        Deletion::NotReduced
    } else if NoncrossingPartition::from_permutation(&w).is_err() {
        Deletion::NotNoncrossing
    } else {
        Deletion::ReducedNoncrossing
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn boolean_lattice() {
        let p = FinitePoset::from_relation(4, |a, b| a & b == a);
        assert!(p.is_partial_order());
        assert!(p.is_distributive_lattice());
        assert_eq!(p.covers().len(), 4);
        assert_eq!(p.maximal_elements(), vec![3]);
    }

    #[test]
    fn diamond_is_not_distributive() {
        // 0 < 1, 2, 3 < 4
        let p = FinitePoset::from_relation(5, |a, b| a == b || a == 0 || b == 4);
        assert!(p.is_lattice());
        assert!(!p.is_distributive_lattice());
    }

    #[test]
    fn two_maxima_is_not_a_lattice() {
        let p = FinitePoset::from_relation(3, |a, b| a == b || a == 0);
        assert!(!p.is_lattice());
        assert_eq!(p.maximal_elements(), vec![1, 2]);
    }

    #[test]
    fn small_bruhat_posets() {
        let (els, p) = restricted_bruhat_poset(1);
        assert_eq!(els.len(), 2);
        assert_eq!(p.covers(), vec![(0, 1)]);
        let (els, p) = restricted_bruhat_poset(3);
        assert_eq!(els.len(), 14);
        let ranks: Vec<usize> = els
            .iter()
            .map(|x| x.permutation().coxeter_length())
            .collect();
        assert!(p.is_graded_by(&ranks));
        assert_eq!(p.maximal_elements().len(), 1);
        assert!(p.is_distributive_lattice());
        assert!(orders_agree(3));
    }

    #[test]
    fn cover_examples() {
        let nc = |n: usize, b: &[&[usize]]| NoncrossingPartition::from_blocks(n, b).unwrap();
        assert_eq!(
            nc_covers(&nc(1, &[&[1, 2]])),
            vec![NoncrossingPartition::identity(1)]
        );
        let c2 = nc(2, &[&[1, 2, 3]]);
        assert!(nc_covers(&c2).contains(&nc(2, &[&[1, 2]])));
        assert_eq!(nc_covers(&nc(2, &[&[1, 3]])), vec![c2]);
    }

    #[test]
    fn deletion_examples() {
        let p = OrderIdeal::from_pairs(1, &[(1, 2)]).unwrap();
        assert_eq!(deletion_dichotomy(&p, Root::simple(1)), Ok(Deletion::Cover));
        let full = OrderIdeal::full(2);
        let d = deletion_dichotomy(&full, Root::simple(1)).unwrap();
        assert!(matches!(d, Deletion::NotReduced | Deletion::NotNoncrossing));
        assert!(deletion_dichotomy(&p, Root { i: 1, j: 3 }).is_err());
    }
}
