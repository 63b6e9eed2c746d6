//! The type-A positive root poset, its order ideals, Dyck paths, and the
//! Kreweras action on nonnesting partitions.
//!
//! The root `e_i - e_j` is written `(i, j)` with `1 ≤ i < j ≤ n + 1`; its
//! height is `j - i`, so the simple roots `α_i = (i, i + 1)` have height 1.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root {
    pub i: usize,
    pub j: usize,
}

impl Root {
    pub fn new(n: usize, i: usize, j: usize) -> Result<Self> {
        if i == 0 || i >= j || j > n + 1 {
            return Err(Error::Parse(format!(
                "e{i}-e{j} is not a positive root of A{n}"
            )));
        }
        Ok(Root { i, j })
    }

    /// The simple root `α_i`.
    pub fn simple(i: usize) -> Self {
        Root { i, j: i + 1 }
    }

    pub fn height(self) -> usize {
        self.j - self.i
    }

    pub fn is_simple(self) -> bool {
        self.height() == 1
    }

    /// Root order: `self ≤ other` iff `other - self` is a nonnegative
    /// combination of simple roots.
    pub fn leq(self, other: Root) -> bool {
        other.i <= self.i && self.j <= other.j
    }

    /// `vert(e_i - e_j) = ⌈(i + j - 1) / 2⌉`.
    pub fn vert_label(self) -> usize {
        (self.i + self.j) / 2
    }

    /// `diag(e_i - e_j) = j - 1`.
    pub fn diag_label(self) -> usize {
        self.j - 1
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}-e{}", self.i, self.j)
    }
}

/// The positive roots of `A_n`.
#[derive(Clone, Debug)]
pub struct RootPoset {
    n: usize,
    roots: Vec<Root>,
}

pub fn root_poset(n: usize) -> RootPoset {
    let mut roots = Vec::with_capacity(n * (n + 1) / 2);
    for h in 1..=n {
        for i in 1..=n + 1 - h {
            roots.push(Root { i, j: i + h });
        }
    }
    RootPoset { n, roots }
}

impl RootPoset {
    pub fn rank(&self) -> usize {
        self.n
    }

    /// All roots, by height and then by `i`.
    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn highest_root(&self) -> Root {
        Root {
            i: 1,
            j: self.n + 1,
        }
    }

    /// Cover pairs `(lower, upper)`: `(i, j) ⋖ (i - 1, j)` and `(i, j) ⋖ (i, j + 1)`.
    pub fn covers(&self) -> Vec<(Root, Root)> {
        let mut out = Vec::new();
        for &r in &self.roots {
            if r.i > 1 {
                out.push((r, Root { i: r.i - 1, j: r.j }));
            }
            if r.j <= self.n {
                out.push((r, Root { i: r.i, j: r.j + 1 }));
            }
        }
        out
    }
}

/// A downward-closed set of positive roots. Roots are kept sorted.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrderIdeal {
    n: usize,
    roots: Vec<Root>,
}

impl OrderIdeal {
    pub fn empty(n: usize) -> Self {
        OrderIdeal {
            n,
            roots: Vec::new(),
        }
    }

    pub fn full(n: usize) -> Self {
        Self::from_sorted(n, root_poset(n).roots)
    }

    fn from_sorted(n: usize, mut roots: Vec<Root>) -> Self {
        roots.sort_unstable();
        roots.dedup();
        OrderIdeal { n, roots }
    }

    /// Validates downward closure.
    pub fn new(n: usize, roots: Vec<Root>) -> Result<Self> {
        for r in &roots {
            Root::new(n, r.i, r.j)?;
        }
        let ideal = Self::from_sorted(n, roots);
        for &r in &ideal.roots {
            if r.height() > 1 {
                for below in [Root { i: r.i + 1, j: r.j }, Root { i: r.i, j: r.j - 1 }] {
                    if !ideal.contains(below) {
                        return Err(Error::NotAnIdeal(format!(
                            "{r} is present but {below} is not"
                        )));
                    }
                }
            }
        }
        Ok(ideal)
    }

    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        Self::new(n, pairs.iter().map(|&(i, j)| Root { i, j }).collect())
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn contains(&self, r: Root) -> bool {
        self.roots.binary_search(&r).is_ok()
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.roots.iter().all(|&r| other.contains(r))
    }

    pub fn contains_all_simple(&self) -> bool {
        (1..=self.n).all(|i| self.contains(Root::simple(i)))
    }

    /// The largest height present, 0 for the empty ideal.
    pub fn max_height(&self) -> usize {
        self.roots.iter().map(|r| r.height()).max().unwrap_or(0)
    }

    /// Maximal elements; these are the bumps of the nonnesting partition.
    pub fn antichain(&self) -> Vec<Root> {
        self.roots
            .iter()
            .copied()
            .filter(|&r| !self.roots.iter().any(|&s| s != r && r.leq(s)))
            .collect()
    }

    pub fn is_maximal(&self, r: Root) -> bool {
        self.contains(r) && !self.roots.iter().any(|&s| s != r && r.leq(s))
    }

    /// Roots that can be added while keeping the set an ideal.
    pub fn addable(&self) -> Vec<Root> {
        root_poset(self.n)
            .roots
            .into_iter()
            .filter(|&r| {
                !self.contains(r)
                    && (r.is_simple()
                        || (self.contains(Root { i: r.i + 1, j: r.j })
                            && self.contains(Root { i: r.i, j: r.j - 1 })))
            })
            .collect()
    }

    pub fn with_root(&self, r: Root) -> Result<Self> {
        let mut roots = self.roots.clone();
        roots.push(r);
        Self::new(self.n, roots)
    }

    /// The set with `r` removed. The result need not be an ideal, so plain
    /// roots are returned.
    pub fn without_root(&self, r: Root) -> Result<Vec<Root>> {
        if !self.contains(r) {
            return Err(Error::RootNotInIdeal(r.to_string()));
        }
        Ok(self.roots.iter().copied().filter(|&s| s != r).collect())
    }

    /// Blocks of the nonnesting partition whose bumps are the antichain.
    pub fn nonnesting_blocks(&self) -> Vec<Vec<usize>> {
        let mut next = vec![0usize; self.n + 2];
        let mut has_prev = vec![false; self.n + 2];
        for r in self.antichain() {
            next[r.i] = r.j;
            has_prev[r.j] = true;
        }
        let mut blocks = Vec::new();
        for start in 1..=self.n + 1 {
            if has_prev[start] || next[start] == 0 {
                continue;
            }
            let mut block = vec![start];
            let mut k = start;
            while next[k] != 0 {
                k = next[k];
                block.push(k);
            }
            blocks.push(block);
        }
        blocks
    }
}

impl fmt::Debug for OrderIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for OrderIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.roots.iter().map(|r| r.to_string()).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// The smallest ideal containing an antichain.
pub fn ideal_of_antichain(n: usize, antichain: &[Root]) -> Result<OrderIdeal> {
    for (k, &a) in antichain.iter().enumerate() {
        Root::new(n, a.i, a.j)?;
        for &b in &antichain[k + 1..] {
            if a.leq(b) || b.leq(a) {
                return Err(Error::NotAnAntichain(vec![(a.i, a.j), (b.i, b.j)]));
            }
        }
    }
    let roots = root_poset(n)
        .roots
        .into_iter()
        .filter(|&r| antichain.iter().any(|&a| r.leq(a)))
        .collect();
    Ok(OrderIdeal::from_sorted(n, roots))
}

/// The ideal whose maximal elements are the given bumps of a nonnesting
/// partition of `[n + 1]`.
pub fn bumps_to_ideal(n: usize, bumps: &[(usize, usize)]) -> Result<OrderIdeal> {
    let roots: Vec<Root> = bumps
        .iter()
        .map(|&(i, j)| Root::new(n, i, j))
        .collect::<Result<_>>()?;
    for &a in &roots {
        for &b in &roots {
            if a != b && a.leq(b) {
                return Err(Error::NestingBumps(b.i, a.i, a.j, b.j));
            }
        }
    }
    ideal_of_antichain(n, &roots)
}

pub fn ideal_to_bumps(p: &OrderIdeal) -> Vec<(usize, usize)> {
    p.antichain().into_iter().map(|r| (r.i, r.j)).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    Up,
    Down,
}

/// A lattice path of `n + 1` up steps and `n + 1` down steps that never
/// goes below the axis.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DyckPath {
    steps: Vec<Step>,
}

impl DyckPath {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        let mut h: isize = 0;
        for (k, s) in steps.iter().enumerate() {
            h += if *s == Step::Up { 1 } else { -1 };
            if h < 0 {
                return Err(Error::MalformedPath(format!(
                    "goes below the axis at step {}",
                    k + 1
                )));
            }
        }
        if h != 0 {
            return Err(Error::MalformedPath("does not return to the axis".into()));
        }
        if steps.is_empty() {
            return Err(Error::MalformedPath("empty path".into()));
        }
        Ok(DyckPath { steps })
    }

    /// `(ud)^{n+1}`.
    pub fn minimal(n: usize) -> Self {
        let mut steps = Vec::with_capacity(2 * n + 2);
        for _ in 0..=n {
            steps.push(Step::Up);
            steps.push(Step::Down);
        }
        DyckPath { steps }
    }

    /// `u^{n+1} d^{n+1}`.
    pub fn maximal(n: usize) -> Self {
        let mut steps = vec![Step::Up; n + 1];
        steps.extend(vec![Step::Down; n + 1]);
        DyckPath { steps }
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn rank(&self) -> usize {
        self.steps.len() / 2 - 1
    }

    /// Heights after each prefix, starting with 0 and ending with 0.
    pub fn heights(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        let mut h = 0usize;
        out.push(h);
        for s in &self.steps {
            h = if *s == Step::Up { h + 1 } else { h - 1 };
            out.push(h);
        }
        out
    }

    /// All Dyck paths of semilength `n + 1`, lexicographic with `u < d`.
    pub fn all(n: usize) -> Vec<DyckPath> {
        fn go(len: usize, ups: usize, h: usize, cur: &mut Vec<Step>, out: &mut Vec<DyckPath>) {
            if cur.len() == 2 * len {
                out.push(DyckPath { steps: cur.clone() });
                return;
            }
            if ups < len {
                cur.push(Step::Up);
                go(len, ups + 1, h + 1, cur, out);
                cur.pop();
            }
            if h > 0 {
                cur.push(Step::Down);
                go(len, ups, h - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n + 1, 0, 0, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Debug for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            f.write_str(if *s == Step::Up { "u" } else { "d" })?;
        }
        Ok(())
    }
}

impl FromStr for DyckPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let steps = s
            .chars()
            .filter(|ch| !ch.is_whitespace())
            .map(|ch| match ch {
                'u' | 'U' => Ok(Step::Up),
                'd' | 'D' => Ok(Step::Down),
                other => Err(Error::MalformedPath(format!(
                    "unexpected character {other:?}"
                ))),
            })
            .collect::<Result<Vec<_>>>()?;
        DyckPath::new(steps)
    }
}

// The root (i, j) sits in the diamond centred at x = i + j - 1, y = j - i,
// and lies under the path exactly when the path height at x is at least
// j - i + 1.

pub fn ideal_to_dyck(p: &OrderIdeal) -> DyckPath {
    let n = p.n;
    let mut h: Vec<usize> = (0..=2 * n + 2).map(|x| x % 2).collect();
    h[2 * n + 2] = 0;
    for r in &p.roots {
        let x = r.i + r.j - 1;
        h[x] = h[x].max(r.height() + 1);
    }
    let steps = h
        .windows(2)
        .map(|w| if w[1] > w[0] { Step::Up } else { Step::Down })
        .collect();
    DyckPath { steps }
}

pub fn dyck_to_ideal(path: &DyckPath) -> OrderIdeal {
    let n = path.rank();
    let h = path.heights();
    let roots = root_poset(n)
        .roots
        .into_iter()
        .filter(|r| h[r.i + r.j - 1] > r.height())
        .collect();
    OrderIdeal::from_sorted(n, roots)
}

/// All order ideals of the root poset of `A_n`, in the order of their
/// Dyck paths (lexicographic, `u < d`).
pub fn enumerate_ideals(n: usize) -> Vec<OrderIdeal> {
    DyckPath::all(n).iter().map(dyck_to_ideal).collect()
}

/// The Kreweras action on nonnesting partitions.
///
/// With `k` minimal such that `α_{k+1} ∉ p`, the initial part (roots with
/// `j ≤ k + 1`) shifts `(i, j) -> (i, j - 1)`, simple roots there vanish,
/// the final part (roots with `i ≥ k + 2`) shifts `(i, j) -> (i - 1, j)`,
/// and the simple roots `α_{k+1}, ..., α_n` are added.
pub fn krew_nn(p: &OrderIdeal) -> OrderIdeal {
    let n = p.n;
    let k = (0..n)
        .find(|&k| !p.contains(Root::simple(k + 1)))
        .unwrap_or(n);
    let mut roots = Vec::with_capacity(p.len() + n);
    for &r in &p.roots {
        if r.j <= k + 1 {
            if r.j - 1 > r.i {
                roots.push(Root { i: r.i, j: r.j - 1 });
            }
        } else {
            debug_assert!(r.i >= k + 2);
            roots.push(Root { i: r.i - 1, j: r.j });
        }
    }
    roots.extend((k + 1..=n).map(Root::simple));
    OrderIdeal::from_sorted(n, roots)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn poset_shape() {
        assert_eq!(root_poset(1).roots().len(), 1);
        let p3 = root_poset(3);
        assert_eq!(p3.roots().len(), 6);
        assert_eq!(p3.roots().iter().filter(|r| r.is_simple()).count(), 3);
        assert_eq!(p3.highest_root(), Root { i: 1, j: 4 });
        assert_eq!(p3.highest_root().height(), 3);
        assert_eq!(p3.covers().len(), 6);
    }

    #[test]
    fn labels() {
        assert_eq!(Root { i: 1, j: 4 }.vert_label(), 2);
        assert_eq!(Root { i: 2, j: 4 }.vert_label(), 3);
        assert_eq!(Root { i: 3, j: 4 }.vert_label(), 3);
        assert_eq!(Root { i: 2, j: 4 }.diag_label(), 3);
    }

    #[test]
    fn antichain_closure() {
        assert!(ideal_of_antichain(3, &[]).unwrap().is_empty());
        let p = ideal_of_antichain(3, &[Root { i: 1, j: 3 }, Root { i: 2, j: 4 }]).unwrap();
        assert_eq!(
            p,
            OrderIdeal::from_pairs(3, &[(1, 3), (2, 4), (1, 2), (2, 3), (3, 4)]).unwrap()
        );
        assert_eq!(
            ideal_of_antichain(3, &[Root::simple(2)]).unwrap().roots(),
            &[Root::simple(2)]
        );
        assert!(ideal_of_antichain(3, &[Root { i: 1, j: 3 }, Root::simple(1)]).is_err());
    }

    #[test]
    fn ideal_validation() {
        assert!(OrderIdeal::from_pairs(3, &[(1, 3), (1, 2)]).is_err());
        assert!(OrderIdeal::from_pairs(3, &[(1, 5)]).is_err());
    }

    #[test]
    fn counts() {
        assert_eq!(enumerate_ideals(1).len(), 2);
        assert_eq!(enumerate_ideals(2).len(), 5);
        assert_eq!(enumerate_ideals(3).len(), 14);
    }

    #[test]
    fn dyck_examples() {
        assert_eq!(ideal_to_dyck(&OrderIdeal::empty(2)), DyckPath::minimal(2));
        assert_eq!(ideal_to_dyck(&OrderIdeal::full(2)), DyckPath::maximal(2));
        let single = OrderIdeal::from_pairs(2, &[(1, 2)]).unwrap();
        assert_eq!(ideal_to_dyck(&single).to_string(), "uuddud");
        assert_eq!(dyck_to_ideal(&"uuddud".parse().unwrap()), single);
        assert!("udd".parse::<DyckPath>().is_err());
        assert!("du".parse::<DyckPath>().is_err());
    }

    #[test]
    fn bumps() {
        assert!(bumps_to_ideal(3, &[]).unwrap().is_empty());
        let p = bumps_to_ideal(3, &[(1, 3), (2, 4)]).unwrap();
        assert_eq!(ideal_to_bumps(&p), vec![(1, 3), (2, 4)]);
        assert_eq!(p.nonnesting_blocks(), vec![vec![1, 3], vec![2, 4]]);
        assert_eq!(
            bumps_to_ideal(3, &[(1, 4), (2, 3)]),
            Err(Error::NestingBumps(1, 2, 3, 4))
        );
    }

    #[test]
    fn krew_of_empty_adds_simple_roots() {
        let q = krew_nn(&OrderIdeal::empty(3));
        assert_eq!(
            q,
            OrderIdeal::from_pairs(3, &[(1, 2), (2, 3), (3, 4)]).unwrap()
        );
    }
}
