//! Noncrossing partitions for the linear Coxeter element `c = s_1 s_2 ... s_n`.
//!
//! A noncrossing partition is kept both as a list of blocks (singletons are
//! implicit) and as the permutation whose cycles are the blocks read in
//! increasing order. Blocks are sorted by their maximal element, which is the
//! order in which standard forms concatenate their syllables.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::perm::{Permutation, SWord};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NoncrossingPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
    perm: Permutation,
}

/// Initial set `D` (non-terminal block elements) and final set `U`
/// (non-initial block elements).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DuPair {
    pub d: Vec<usize>,
    pub u: Vec<usize>,
}

impl DuPair {
    pub fn new(d: Vec<usize>, u: Vec<usize>) -> Self {
        DuPair { d, u }
    }

    /// Checks `|D| = |U|`, both strictly increasing, `D ⊆ [n]`,
    /// `U ⊆ {2, ..., n + 1}` and `d_i < e_i` elementwise.
    pub fn validate(&self, n: usize) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidDuPair(msg));
        if self.d.len() != self.u.len() {
            return bad(format!("|D| = {} but |U| = {}", self.d.len(), self.u.len()));
        }
        if self.d.windows(2).any(|w| w[0] >= w[1]) || self.u.windows(2).any(|w| w[0] >= w[1]) {
            return bad("sets must be strictly increasing".into());
        }
        if self.d.iter().any(|&x| x == 0 || x > n) {
            return bad(format!("D must lie in 1..={n}"));
        }
        if self.u.iter().any(|&x| x < 2 || x > n + 1) {
            return bad(format!("U must lie in 2..={}", n + 1));
        }
        if let Some(k) = (0..self.d.len()).find(|&k| self.d[k] >= self.u[k]) {
            return bad(format!(
                "d_{0} = {1} is not below e_{0} = {2}",
                k + 1,
                self.d[k],
                self.u[k]
            ));
        }
        Ok(())
    }
}

impl NoncrossingPartition {
    /// Builds a partition of `[n + 1]` from its blocks. Singletons may be
    /// given or omitted; block order and element order are irrelevant.
    pub fn from_blocks<B: AsRef<[usize]>>(n: usize, blocks: &[B]) -> Result<Self> {
        let blocks = normalize_blocks(n, blocks)?;
        if !blocks_noncrossing(&blocks) {
            return Err(Error::Crossing(blocks));
        }
        let perm = Permutation::from_cycles(n, &blocks)?;
        Ok(NoncrossingPartition { n, blocks, perm })
    }

    /// Accepts a permutation whose cycles are increasing and noncrossing,
    /// i.e. an element of the absolute-order interval `[e, c]`.
    pub fn from_permutation(w: &Permutation) -> Result<Self> {
        let n = w.rank();
        let mut blocks = w.cycles();
        for b in blocks.iter_mut() {
            if b.windows(2).any(|p| p[0] > p[1]) {
                return Err(Error::NotBelowCoxeter(w.to_string()));
            }
            b.sort_unstable();
        }
        if !blocks_noncrossing(&blocks) {
            return Err(Error::NotBelowCoxeter(w.to_string()));
        }
        Ok(NoncrossingPartition {
            n,
            blocks,
            perm: w.clone(),
        })
    }

    pub fn identity(n: usize) -> Self {
        NoncrossingPartition {
            n,
            blocks: Vec::new(),
            perm: Permutation::identity(n),
        }
    }

    /// The single block `[n + 1]`, i.e. `c` itself.
    pub fn full_cycle(n: usize) -> Self {
        Self::from_permutation(&Permutation::long_cycle(n)).expect("c lies below itself")
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    /// Non-singleton blocks, each increasing, sorted by maximum.
    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn permutation(&self) -> &Permutation {
        &self.perm
    }

    /// Pairs of consecutive elements within a block.
    pub fn bumps(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = self
            .blocks
            .iter()
            .flat_map(|b| b.windows(2).map(|w| (w[0], w[1])))
            .collect();
        out.sort_unstable();
        out
    }

    /// Concatenation over blocks (ascending maximum) of the syllables
    /// `s_[i1,i2] s_[i2,i3] ...`. This is a reduced word for the partition.
    pub fn standard_form(&self) -> SWord {
        let mut word = SWord::empty();
        for block in &self.blocks {
            for pair in block.windows(2) {
                word.extend(&syllable(pair[0], pair[1]).expect("blocks are increasing"));
            }
        }
        word
    }

    pub fn du_sets(&self) -> DuPair {
        du_sets_of(&self.perm)
    }

    /// Kreweras complement: the partition of `π⁻¹ c`.
    pub fn kreweras(&self) -> Self {
        let w = self
            .perm
            .inverse()
            .compose(&Permutation::long_cycle(self.n))
            .unwrap();
        Self::from_permutation(&w).expect("the Kreweras complement is noncrossing")
    }

    /// Refinement order: every block of `self` lies inside a block of `other`.
    pub fn refines(&self, other: &Self) -> bool {
        let owner = block_owner(other);
        self.blocks.iter().all(|b| {
            let first = owner[b[0] - 1];
            first.is_some() && b.iter().all(|&x| owner[x - 1] == first)
        })
    }

    /// Serializable block list, singletons omitted.
    pub fn to_blocks(&self) -> Vec<Vec<usize>> {
        self.blocks.clone()
    }
}

fn block_owner(p: &NoncrossingPartition) -> Vec<Option<usize>> {
    let mut owner = vec![None; p.n + 1];
    for (k, b) in p.blocks.iter().enumerate() {
        for &x in b {
            owner[x - 1] = Some(k);
        }
    }
    owner
}

impl PartialOrd for NoncrossingPartition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic on one-line notation.
impl Ord for NoncrossingPartition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.perm.cmp(&other.perm)
    }
}

impl fmt::Debug for NoncrossingPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.perm)
    }
}

impl fmt::Display for NoncrossingPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.perm)
    }
}

/// `(D, U)` of any permutation, reading each cycle as a sorted block: `D`
/// collects the non-maximal elements, `U` the non-minimal ones.
pub fn du_sets_of(w: &Permutation) -> DuPair {
    let mut d = Vec::new();
    let mut u = Vec::new();
    for mut block in w.cycles() {
        block.sort_unstable();
        d.extend_from_slice(&block[..block.len() - 1]);
        u.extend_from_slice(&block[1..]);
    }
    d.sort_unstable();
    u.sort_unstable();
    DuPair { d, u }
}

/// Sorts each block, drops singletons, sorts blocks by maximum, and checks
/// range and disjointness.
pub(crate) fn normalize_blocks<B: AsRef<[usize]>>(
    n: usize,
    blocks: &[B],
) -> Result<Vec<Vec<usize>>> {
    let mut used = vec![false; n + 1];
    let mut out = Vec::new();
    for b in blocks {
        let mut b = b.as_ref().to_vec();
        b.sort_unstable();
        for &x in &b {
            if x == 0 || x > n + 1 {
                return Err(Error::IndexOutOfRange {
                    index: x,
                    degree: n + 1,
                });
            }
            if used[x - 1] {
                return Err(Error::OverlappingBlocks(x));
            }
            used[x - 1] = true;
        }
        if b.len() > 1 {
            out.push(b);
        }
    }
    out.sort_by_key(|b| *b.last().unwrap());
    Ok(out)
}

fn blocks_noncrossing(blocks: &[Vec<usize>]) -> bool {
    let bumps: Vec<(usize, usize)> = blocks
        .iter()
        .flat_map(|b| b.windows(2).map(|w| (w[0], w[1])))
        .collect();
    for &(i1, i2) in &bumps {
        for &(j1, j2) in &bumps {
            if i1 < j1 && j1 < i2 && i2 < j2 {
                return false;
            }
        }
    }
    true
}

/// True iff no two bumps `(i1, i2)`, `(j1, j2)` satisfy `i1 < j1 < i2 < j2`.
/// Blocks must be disjoint subsets of `[n + 1]`.
pub fn is_noncrossing<B: AsRef<[usize]>>(n: usize, blocks: &[B]) -> Result<bool> {
    Ok(blocks_noncrossing(&normalize_blocks(n, blocks)?))
}

/// The syllable `s_[j,k] = (s_{k-1} ... s_{j+1}) s_j (s_{j+1} ... s_{k-1})`,
/// a palindromic reduced word for the transposition `(j, k)`.
pub fn syllable(j: usize, k: usize) -> Result<SWord> {
    if j == 0 || j >= k {
        return Err(Error::InvalidSyllable { j, k });
    }
    let mut letters: Vec<usize> = (j..k).rev().collect();
    letters.extend(j + 1..k);
    Ok(SWord::new(letters))
}

/// Inverse of [`NoncrossingPartition::du_sets`].
///
/// Points are scanned left to right with a stack of open blocks: a point of
/// `U` attaches to the most recently opened block, a point of `D` opens (or
/// keeps open) its block.
pub fn du_inverse(n: usize, pair: &DuPair) -> Result<NoncrossingPartition> {
    pair.validate(n)?;
    let mut in_d = vec![false; n + 2];
    let mut in_u = vec![false; n + 2];
    for &x in &pair.d {
        in_d[x] = true;
    }
    for &x in &pair.u {
        in_u[x] = true;
    }
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut open: Vec<usize> = Vec::new();
    for i in 1..=n + 1 {
        let mut current = None;
        if in_u[i] {
            let b = open.pop().expect("validated pairs never underflow");
            blocks[b].push(i);
            current = Some(b);
        }
        if in_d[i] {
            let b = current.unwrap_or_else(|| {
                blocks.push(vec![i]);
                blocks.len() - 1
            });
            open.push(b);
        }
    }
    NoncrossingPartition::from_blocks(n, &blocks)
}

/// The fully commutative element attached to a `(D, U)` pair:
/// `(s_{i1} s_{i1-1} ... s_{j1}) (s_{i2} ... s_{j2}) ...` with
/// `i_m = e_m - 1` and `j_m = d_m`.
pub fn fully_commutative_of_pair(n: usize, pair: &DuPair) -> Result<SWord> {
    pair.validate(n)?;
    let mut word = SWord::empty();
    for (&d, &e) in pair.d.iter().zip(&pair.u) {
        for letter in (d..e).rev() {
            word.push(letter);
        }
    }
    Ok(word)
}

/// `NC(S_{n+1}, c)` in lexicographic order of one-line notation.
///
/// Filters `S_{n+1}` by the absolute order for `n ≤ 6` and generates block
/// structures recursively beyond that.
pub fn enumerate_nc(n: usize) -> Vec<NoncrossingPartition> {
    if n <= 6 {
        enumerate_nc_by_filter(n)
    } else {
        enumerate_nc_recursive(n)
    }
}

/// Every `w ∈ S_{n+1}` with `w ≤_T c`.
pub fn enumerate_nc_by_filter(n: usize) -> Vec<NoncrossingPartition> {
    let c = Permutation::long_cycle(n);
    Permutation::all(n)
        .into_iter()
        .filter(|w| w.absolute_leq(&c).unwrap())
        .map(|w| NoncrossingPartition::from_permutation(&w).expect("below c"))
        .collect()
}

/// Recursive generation on the block containing the leftmost point.
pub fn enumerate_nc_recursive(n: usize) -> Vec<NoncrossingPartition> {
    let mut out: Vec<NoncrossingPartition> = partitions_of_interval(1, n + 1)
        .into_iter()
        .map(|blocks| NoncrossingPartition::from_blocks(n, &blocks).expect("generated noncrossing"))
        .collect();
    out.sort();
    out
}

/// All noncrossing partitions of `lo..=hi`, as lists of blocks.
fn partitions_of_interval(lo: usize, hi: usize) -> Vec<Vec<Vec<usize>>> {
    if lo > hi {
        return vec![Vec::new()];
    }
    rooted_partitions(lo, hi)
        .into_iter()
        .map(|(first, mut rest)| {
            rest.push(first);
            rest
        })
        .collect()
}

/// Noncrossing partitions of `lo..=hi` with the block of `lo` split off.
fn rooted_partitions(lo: usize, hi: usize) -> Vec<(Vec<usize>, Vec<Vec<usize>>)> {
    let mut out = Vec::new();
    for rest in partitions_of_interval(lo + 1, hi) {
        out.push((vec![lo], rest));
    }
    for next in lo + 1..=hi {
        let inner = partitions_of_interval(lo + 1, next - 1);
        for (tail_block, tail_rest) in rooted_partitions(next, hi) {
            for inside in &inner {
                let mut block = vec![lo];
                block.extend_from_slice(&tail_block);
                let mut others = inside.clone();
                others.extend(tail_rest.iter().cloned());
                out.push((block, others));
            }
        }
    }
    out
}
