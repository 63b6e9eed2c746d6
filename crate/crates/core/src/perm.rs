//! Permutations of `[n + 1]`, simple-reflection words, and the three orders
//! used throughout the crate: Coxeter length, reflection (absolute) length,
//! and Bruhat order.
//!
//! # Composition convention
//!
//! Permutations are functions written on the left, so the product `u * v`
//! applies `v` first: `(u * v)(x) = u(v(x))`. A word `s_{i1} s_{i2} ... s_{ik}`
//! evaluates to the product `s_{i1} * s_{i2} * ... * s_{ik}`. Under this
//! convention `s_1 s_2 ... s_n` is the long cycle `(1, 2, ..., n + 1)`.

use std::fmt;
use std::ops::Mul;

use crate::error::{Error, Result};

/// An element of the symmetric group on `n + 1` letters, stored in one-line
/// notation. `images[k - 1]` is the image of `k`.
///
/// The derived ordering is lexicographic on one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// The identity of `S_{n+1}`.
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n + 1).collect(),
        }
    }

    pub fn from_one_line(images: Vec<usize>) -> Result<Self> {
        let degree = images.len();
        if degree == 0 {
            return Err(Error::NotAPermutation { images, degree });
        }
        let mut seen = vec![false; degree];
        for &v in &images {
            if v == 0 || v > degree || seen[v - 1] {
                return Err(Error::NotAPermutation { images, degree });
            }
            seen[v - 1] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation of `[n + 1]` from disjoint cycles. Each cycle
    /// `(a, b, c)` sends `a -> b -> c -> a`.
    pub fn from_cycles<C: AsRef<[usize]>>(n: usize, cycles: &[C]) -> Result<Self> {
        let degree = n + 1;
        let mut images: Vec<usize> = (1..=degree).collect();
        let mut used = vec![false; degree];
        for cycle in cycles {
            let cycle = cycle.as_ref();
            for &a in cycle {
                if a == 0 || a > degree {
                    return Err(Error::IndexOutOfRange { index: a, degree });
                }
                if used[a - 1] {
                    return Err(Error::OverlappingBlocks(a));
                }
                used[a - 1] = true;
            }
            for (k, &a) in cycle.iter().enumerate() {
                images[a - 1] = cycle[(k + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    /// The transposition `(i, j)` in `S_{n+1}`.
    pub fn transposition(n: usize, i: usize, j: usize) -> Result<Self> {
        if i == j {
            return Err(Error::InvalidSyllable { j: i, k: j });
        }
        Self::from_cycles(n, &[[i, j]])
    }

    /// The simple reflection `s_i = (i, i + 1)`.
    pub fn simple(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i > n {
            return Err(Error::LetterOutOfRange { letter: i, rank: n });
        }
        Self::transposition(n, i, i + 1)
    }

    /// The linear Coxeter element `c = s_1 s_2 ... s_n = (1, 2, ..., n + 1)`.
    pub fn long_cycle(n: usize) -> Self {
        let mut images: Vec<usize> = (2..=n + 1).collect();
        images.push(1);
        Permutation { images }
    }

    /// Rank `n`: the permutation acts on `n + 1` points.
    pub fn rank(&self) -> usize {
        self.images.len() - 1
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn one_line(&self) -> &[usize] {
        &self.images
    }

    /// Image of the point `k` (1-based).
    #[inline]
    pub fn apply(&self, k: usize) -> usize {
        self.images[k - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &v)| v == k + 1)
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.images.len()];
        for (k, &v) in self.images.iter().enumerate() {
            images[v - 1] = k + 1;
        }
        Permutation { images }
    }

    /// `self * other`, i.e. apply `other` first.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        self.check_rank(other)?;
        Ok(Permutation {
            images: other.images.iter().map(|&v| self.images[v - 1]).collect(),
        })
    }

    /// Right multiplication by `s_i`: swaps positions `i` and `i + 1` of the
    /// one-line notation.
    pub fn mul_simple_right(&mut self, i: usize) {
        self.images.swap(i - 1, i);
    }

    /// Left multiplication by `s_i`: swaps the values `i` and `i + 1`.
    pub fn mul_simple_left(&mut self, i: usize) {
        for v in self.images.iter_mut() {
            if *v == i {
                *v = i + 1;
            } else if *v == i + 1 {
                *v = i;
            }
        }
    }

    pub(crate) fn check_rank(&self, other: &Self) -> Result<()> {
        if self.images.len() != other.images.len() {
            return Err(Error::RankMismatch {
                left: self.rank(),
                right: other.rank(),
            });
        }
        Ok(())
    }

    /// Coxeter length: the number of inversions.
    pub fn coxeter_length(&self) -> usize {
        let w = &self.images;
        let mut count = 0;
        for a in 0..w.len() {
            for b in a + 1..w.len() {
                if w[a] > w[b] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Number of cycles, fixed points included.
    pub fn cycle_count(&self) -> usize {
        let mut seen = vec![false; self.images.len()];
        let mut count = 0;
        for start in 0..self.images.len() {
            if seen[start] {
                continue;
            }
            count += 1;
            let mut k = start;
            while !seen[k] {
                seen[k] = true;
                k = self.images[k] - 1;
            }
        }
        count
    }

    /// Reflection length: `(n + 1) - #cycles`.
    pub fn reflection_length(&self) -> usize {
        self.degree() - self.cycle_count()
    }

    /// Non-fixed points, ascending.
    pub fn support(&self) -> Vec<usize> {
        (1..=self.degree())
            .filter(|&k| self.apply(k) != k)
            .collect()
    }

    /// Disjoint cycles omitting fixed points. Each cycle starts at its
    /// minimal element and follows the permutation; cycles are listed in
    /// ascending order of their maximal element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 1..=self.degree() {
            if seen[start - 1] || self.apply(start) == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut k = start;
            while !seen[k - 1] {
                seen[k - 1] = true;
                cycle.push(k);
                k = self.apply(k);
            }
            out.push(cycle);
        }
        out.sort_by_key(|c| *c.iter().max().unwrap());
        out
    }

    /// `ℓ_T(u) + ℓ_T(u⁻¹v) = ℓ_T(v)`.
    pub fn absolute_leq(&self, other: &Self) -> Result<bool> {
        self.check_rank(other)?;
        let quotient = self.inverse().compose(other)?;
        Ok(self.reflection_length() + quotient.reflection_length() == other.reflection_length())
    }

    /// `x[i, j] = |{a ≤ i : x(a) ≥ j}|` for `1 ≤ i, j ≤ n + 1`, stored
    /// row-major as `[(i - 1) * (n + 1) + (j - 1)]`.
    pub fn tableau(&self) -> Vec<u8> {
        let d = self.degree();
        let mut t = vec![0u8; d * d];
        for i in 1..=d {
            let v = self.apply(i);
            for j in 1..=d {
                let prev = if i > 1 { t[(i - 2) * d + (j - 1)] } else { 0 };
                t[(i - 1) * d + (j - 1)] = prev + u8::from(v >= j);
            }
        }
        t
    }

    /// Bruhat order via the tableau criterion: `x ≤ y` iff `x[i, j] ≤ y[i, j]`
    /// for all `i, j`.
    pub fn bruhat_leq(&self, other: &Self) -> Result<bool> {
        self.check_rank(other)?;
        Ok(tableau_leq(&self.tableau(), &other.tableau()))
    }

    /// A reduced word, read off by repeatedly stripping right descents.
    pub fn reduced_word(&self) -> SWord {
        let mut w = self.clone();
        let mut rev = Vec::with_capacity(self.coxeter_length());
        'outer: loop {
            for i in 1..w.degree() {
                if w.apply(i) > w.apply(i + 1) {
                    w.mul_simple_right(i);
                    rev.push(i);
                    continue 'outer;
                }
            }
            break;
        }
        rev.reverse();
        SWord::new(rev)
    }

    /// Conjugate `g * self * g⁻¹`.
    pub fn conjugate_by(&self, g: &Self) -> Result<Self> {
        g.compose(self)?.compose(&g.inverse())
    }

    /// All permutations of `[n + 1]` in lexicographic order of one-line
    /// notation.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (1..=n + 1).collect();
        loop {
            out.push(Permutation {
                images: cur.clone(),
            });
            if !next_permutation(&mut cur) {
                break;
            }
        }
        out
    }
}

/// Pointwise comparison of two tableaux from [`Permutation::tableau`].
pub fn tableau_leq(x: &[u8], y: &[u8]) -> bool {
    x.iter().zip(y).all(|(a, b)| a <= b)
}

fn next_permutation(a: &mut [usize]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

impl Mul for &Permutation {
    type Output = Permutation;

    /// Panics on a rank mismatch; use [`Permutation::compose`] to get an error.
    fn mul(self, rhs: &Permutation) -> Permutation {
        self.compose(rhs)
            .expect("rank mismatch in permutation product")
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Cycle notation, e.g. `(2,3,5)(1,6)`; the identity prints as `e`.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "e");
        }
        for c in cycles {
            let body: Vec<String> = c.iter().map(|k| k.to_string()).collect();
            write!(f, "({})", body.join(","))?;
        }
        Ok(())
    }
}

/// A word in the simple reflections `s_1, ..., s_n`, possibly unreduced.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SWord {
    letters: Vec<usize>,
}

impl SWord {
    pub fn new(letters: Vec<usize>) -> Self {
        SWord { letters }
    }

    pub fn empty() -> Self {
        SWord::default()
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn push(&mut self, letter: usize) {
        self.letters.push(letter);
    }

    pub fn extend(&mut self, other: &SWord) {
        self.letters.extend_from_slice(&other.letters);
    }

    /// Concatenation `self other`.
    pub fn concat(&self, other: &SWord) -> SWord {
        let mut w = self.clone();
        w.extend(other);
        w
    }

    /// The reversed word, which evaluates to the inverse.
    pub fn inverse(&self) -> SWord {
        SWord::new(self.letters.iter().rev().copied().collect())
    }

    /// Left-to-right product of the letters in `S_{n+1}`.
    pub fn evaluate(&self, n: usize) -> Result<Permutation> {
        let mut w = Permutation::identity(n);
        for &i in &self.letters {
            if i == 0 || i > n {
                return Err(Error::LetterOutOfRange { letter: i, rank: n });
            }
            w.mul_simple_right(i);
        }
        Ok(w)
    }

    /// Number of occurrences of each `s_i`, `i = 1..=n`.
    pub fn letter_counts(&self, n: usize) -> Vec<usize> {
        let mut counts = vec![0; n];
        for &i in &self.letters {
            if (1..=n).contains(&i) {
                counts[i - 1] += 1;
            }
        }
        counts
    }

    /// True when the word has as many letters as the length of its value.
    pub fn is_reduced(&self, n: usize) -> Result<bool> {
        Ok(self.evaluate(n)?.coxeter_length() == self.len())
    }
}

impl From<Vec<usize>> for SWord {
    fn from(letters: Vec<usize>) -> Self {
        SWord::new(letters)
    }
}

impl fmt::Debug for SWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for SWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "e");
        }
        let parts: Vec<String> = self.letters.iter().map(|i| format!("s{i}")).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// The transposition `(i, j)`, `i < j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Reflection {
    pub i: usize,
    pub j: usize,
}

impl Reflection {
    pub fn new(i: usize, j: usize) -> Result<Self> {
        if i >= j || i == 0 {
            return Err(Error::InvalidSyllable { j: i, k: j });
        }
        Ok(Reflection { i, j })
    }

    pub fn to_permutation(self, n: usize) -> Result<Permutation> {
        Permutation::transposition(n, self.i, self.j)
    }

    /// All `n(n + 1) / 2` reflections of `S_{n+1}`.
    pub fn all(n: usize) -> Vec<Reflection> {
        let mut out = Vec::new();
        for i in 1..=n + 1 {
            for j in i + 1..=n + 1 {
                out.push(Reflection { i, j });
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(n: usize, cycles: &[&[usize]]) -> Permutation {
        Permutation::from_cycles(n, cycles).unwrap()
    }

    #[test]
    fn evaluate_examples() {
        assert_eq!(
            SWord::empty().evaluate(3).unwrap(),
            Permutation::identity(3)
        );
        assert_eq!(
            SWord::new(vec![1, 2, 3]).evaluate(3).unwrap(),
            cyc(3, &[&[1, 2, 3, 4]])
        );
        assert_eq!(
            SWord::new(vec![2, 1, 2]).evaluate(3).unwrap(),
            cyc(3, &[&[1, 3]])
        );
        assert_eq!(
            SWord::new(vec![4]).evaluate(3),
            Err(Error::LetterOutOfRange { letter: 4, rank: 3 })
        );
    }

    #[test]
    fn long_cycle_is_product_of_simples() {
        for n in 1..7 {
            let word = SWord::new((1..=n).collect());
            assert_eq!(word.evaluate(n).unwrap(), Permutation::long_cycle(n));
        }
    }

    #[test]
    fn lengths_of_two_cycle_element() {
        let x = cyc(5, &[&[1, 6], &[2, 3, 5]]);
        assert_eq!(x.coxeter_length(), 13);
        assert_eq!(x.reflection_length(), 3);
        assert_eq!(x.support(), vec![1, 2, 3, 5, 6]);
        assert_eq!(x.cycles(), vec![vec![2, 3, 5], vec![1, 6]]);
        assert_eq!(Permutation::long_cycle(4).coxeter_length(), 4);
        assert_eq!(Permutation::identity(4).coxeter_length(), 0);
    }

    #[test]
    fn cycles_sorted_by_maximum() {
        let x = cyc(11, &[&[2, 6, 11, 12], &[3, 4], &[7, 9, 10]]);
        assert_eq!(
            x.cycles(),
            vec![vec![3, 4], vec![7, 9, 10], vec![2, 6, 11, 12]]
        );
        assert!(Permutation::identity(3).cycles().is_empty());
        assert_eq!(cyc(5, &[&[3, 4]]).support(), vec![3, 4]);
    }

    #[test]
    fn absolute_order_examples() {
        let c = Permutation::long_cycle(3);
        let e = Permutation::identity(3);
        assert!(e.absolute_leq(&c).unwrap());
        assert!(cyc(3, &[&[2, 3]]).absolute_leq(&c).unwrap());
        assert!(cyc(3, &[&[1, 3]]).absolute_leq(&c).unwrap());
        assert!(cyc(3, &[&[1, 2], &[3, 4]]).absolute_leq(&c).unwrap());
        assert!(!cyc(3, &[&[1, 3], &[2, 4]]).absolute_leq(&c).unwrap());
        assert!(e.absolute_leq(&Permutation::identity(4)).is_err());
    }

    #[test]
    fn bruhat_examples() {
        let c = Permutation::long_cycle(2);
        assert!(cyc(2, &[&[2, 3]]).bruhat_leq(&c).unwrap());
        assert!(!cyc(2, &[&[1, 3]]).bruhat_leq(&c).unwrap());
        assert!(c.bruhat_leq(&c).unwrap());
        assert!(Permutation::identity(2).bruhat_leq(&c).unwrap());
    }

    #[test]
    fn reduced_word_round_trips() {
        for w in Permutation::all(4) {
            let word = w.reduced_word();
            assert_eq!(word.len(), w.coxeter_length());
            assert_eq!(word.evaluate(4).unwrap(), w);
        }
    }

    #[test]
    fn from_one_line_rejects_garbage() {
        assert!(Permutation::from_one_line(vec![1, 1, 2]).is_err());
        assert!(Permutation::from_one_line(vec![0, 1]).is_err());
        assert!(Permutation::from_one_line(vec![]).is_err());
        assert!(Permutation::from_cycles(3, &[[1, 2], [2, 3]]).is_err());
    }

    #[test]
    fn display_uses_cycle_notation() {
        assert_eq!(cyc(5, &[&[1, 6], &[2, 3, 5]]).to_string(), "(2,3,5)(1,6)");
        assert_eq!(Permutation::identity(2).to_string(), "e");
        assert_eq!(SWord::new(vec![2, 4, 3]).to_string(), "s2 s4 s3");
    }
}
