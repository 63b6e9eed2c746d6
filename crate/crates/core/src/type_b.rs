//! Type `B_n`: signed permutations, the type-B root poset, the map `𝒟_B`
//! from order ideals onto the elements below `c` in absolute order, and the
//! Kreweras action on type-B nonnesting partitions.
//!
//! Signed permutations act on `[n] ∪ -[n]` with `w(-i) = -w(i)`. The simple
//! reflections are `s_i = ((i, i+1))` for `i < n` and `s_n = (n, -n)`, and
//! `c = s_1 s_2 ⋯ s_n` is the balanced cycle `(1, 2, …, n, -1, -2, …, -n)`.
//! Products follow the same convention as [`crate::perm`]: `(u * v)(x) =
//! u(v(x))`.
//!
//! # Root coordinates
//!
//! Each positive root is placed at a pair `(a, b)` with `1 ≤ a < b ≤ 2n + 1`:
//! `e_i - e_j ↦ (i, j)`, `e_i ↦ (i, n + 1)` and `e_i + e_j ↦ (i, 2n + 2 - j)`.
//! Height is `b - a` and the root order is interval containment, exactly as
//! in type A.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::lattice::FinitePoset;

/// A signed permutation of rank `n`, stored as the signed images of `1..=n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation {
    images: Vec<i32>,
}

impl SignedPermutation {
    pub fn identity(n: usize) -> Self {
        SignedPermutation {
            images: (1..=n as i32).collect(),
        }
    }

    /// `images[k - 1]` is the image of `k`; absolute values must permute `1..=n`.
    pub fn from_images(images: Vec<i32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &x in &images {
            let a = x.unsigned_abs() as usize;
            if a == 0 || a > n || seen[a] {
                return Err(Error::Parse(format!(
                    "not a signed permutation: {images:?}"
                )));
            }
            seen[a] = true;
        }
        Ok(SignedPermutation { images })
    }

    pub fn simple(n: usize, i: usize) -> Result<Self> {
        let mut w = Self::identity(n);
        w.mul_simple_right(i)?;
        Ok(w)
    }

    /// `s_1 s_2 ⋯ s_n`.
    pub fn coxeter(n: usize) -> Self {
        let mut w = Self::identity(n);
        for i in 1..=n {
            w.mul_simple_right(i).expect("index in range");
        }
        w
    }

    /// The reflections of `B_n`: `((i, j))`, `((i, -j))` and `(i, -i)`.
    pub fn reflections(n: usize) -> Vec<Self> {
        let mut out = Vec::with_capacity(n * n);
        for i in 1..=n {
            for j in i + 1..=n {
                for sign in [1, -1] {
                    let mut w = Self::identity(n);
                    w.images[i - 1] = sign * j as i32;
                    w.images[j - 1] = sign * i as i32;
                    out.push(w);
                }
            }
            let mut w = Self::identity(n);
            w.images[i - 1] = -(i as i32);
            out.push(w);
        }
        out
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[i32] {
        &self.images
    }

    pub fn apply(&self, x: i32) -> i32 {
        let y = self.images[x.unsigned_abs() as usize - 1];
        if x > 0 {
            y
        } else {
            -y
        }
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(k, &x)| x == k as i32 + 1)
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.rank()];
        for (k, &y) in self.images.iter().enumerate() {
            let x = k as i32 + 1;
            images[y.unsigned_abs() as usize - 1] = if y > 0 { x } else { -x };
        }
        SignedPermutation { images }
    }

    /// `self * other`, applying `other` first.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.rank() != other.rank() {
            return Err(Error::RankMismatch {
                left: self.rank(),
                right: other.rank(),
            });
        }
        Ok(SignedPermutation {
            images: other.images.iter().map(|&x| self.apply(x)).collect(),
        })
    }

    /// `self ← self * s_i`.
    pub fn mul_simple_right(&mut self, i: usize) -> Result<()> {
        let n = self.rank();
        match i {
            _ if i == 0 || i > n => return Err(Error::LetterOutOfRange { letter: i, rank: n }),
            _ if i == n => self.images[n - 1] = -self.images[n - 1],
            _ => self.images.swap(i - 1, i),
        }
        Ok(())
    }

    /// Evaluates `s_{i1} s_{i2} ⋯ s_{ik}`.
    pub fn from_word(n: usize, word: &[usize]) -> Result<Self> {
        let mut w = Self::identity(n);
        for &i in word {
            w.mul_simple_right(i)?;
        }
        Ok(w)
    }

    /// Every element of `B_n`, in lexicographic order of images.
    pub fn all(n: usize) -> Vec<Self> {
        let mut out: Vec<Self> = BGroup::new(n).elements;
        out.sort();
        out
    }

    /// Orbits on `[n] ∪ -[n]`. A paired cycle `((a, b, …))` stands for the
    /// two cycles `(a, b, …)(-a, -b, …)`; a balanced cycle contains both `x`
    /// and `-x` and is listed in full.
    pub fn cycles(&self) -> Vec<SignedCycle> {
        let n = self.rank() as i32;
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for start in 1..=n {
            if seen.contains(&start) || self.apply(start) == start {
                continue;
            }
            let mut orbit = vec![start];
            let mut x = self.apply(start);
            while x != start {
                orbit.push(x);
                x = self.apply(x);
            }
            let balanced = orbit.contains(&-start);
            for &y in &orbit {
                seen.insert(y.abs());
            }
            if balanced {
                out.push(SignedCycle::Balanced(orbit));
            } else {
                out.push(SignedCycle::Paired(orbit));
            }
        }
        out
    }
}

/// One factor of the cycle notation of a signed permutation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SignedCycle {
    Paired(Vec<i32>),
    Balanced(Vec<i32>),
}

impl fmt::Display for SignedCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[i32]| v.iter().map(i32::to_string).collect::<Vec<_>>().join(",");
        match self {
            SignedCycle::Paired(v) => write!(f, "(({}))", join(v)),
            SignedCycle::Balanced(v) => write!(f, "({})", join(v)),
        }
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "e");
        }
        for c in cycles {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.images)
    }
}

/// Length tables for `B_n`, built by breadth-first search.
#[derive(Clone, Debug)]
pub struct BGroup {
    n: usize,
    elements: Vec<SignedPermutation>,
    index: HashMap<SignedPermutation, usize>,
    simple_len: Vec<usize>,
    refl_len: Vec<usize>,
}

fn bfs(
    elements: &[SignedPermutation],
    index: &HashMap<SignedPermutation, usize>,
    gens: &[SignedPermutation],
) -> Vec<usize> {
    let mut dist = vec![usize::MAX; elements.len()];
    let e = index[&SignedPermutation::identity(gens[0].rank())];
    dist[e] = 0;
    let mut queue = VecDeque::from([e]);
    while let Some(u) = queue.pop_front() {
        for g in gens {
            let v = index[&elements[u].compose(g).expect("same rank")];
            if dist[v] == usize::MAX {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    dist
}

impl BGroup {
    /// Builds the group with its length functions. Sized for `n ≤ 5`.
    pub fn new(n: usize) -> Self {
        assert!(
            (1..=6).contains(&n),
            "B_{n} is outside the supported range 1..=6"
        );
        let gens: Vec<_> = (1..=n)
            .map(|i| SignedPermutation::simple(n, i).unwrap())
            .collect();
        let mut elements = vec![SignedPermutation::identity(n)];
        let mut index = HashMap::from([(elements[0].clone(), 0)]);
        let mut k = 0;
        while k < elements.len() {
            for g in &gens {
                let v = elements[k].compose(g).unwrap();
                if !index.contains_key(&v) {
                    index.insert(v.clone(), elements.len());
                    elements.push(v);
                }
            }
            k += 1;
        }
        let simple_len = bfs(&elements, &index, &gens);
        let refl_len = bfs(&elements, &index, &SignedPermutation::reflections(n));
        BGroup {
            n,
            elements,
            index,
            simple_len,
            refl_len,
        }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[SignedPermutation] {
        &self.elements
    }

    pub fn coxeter_length(&self, w: &SignedPermutation) -> usize {
        self.simple_len[self.index[w]]
    }

    pub fn reflection_length(&self, w: &SignedPermutation) -> usize {
        self.refl_len[self.index[w]]
    }

    /// `u ≤_T w` iff `ℓ_T(u) + ℓ_T(u⁻¹w) = ℓ_T(w)`.
    pub fn absolute_leq(&self, u: &SignedPermutation, w: &SignedPermutation) -> bool {
        let rest = u.inverse().compose(w).expect("same rank");
        self.reflection_length(u) + self.reflection_length(&rest) == self.reflection_length(w)
    }

    /// The elements below `c` in absolute order, sorted by reflection length
    /// and then by images.
    pub fn below_coxeter(&self) -> Vec<SignedPermutation> {
        let c = SignedPermutation::coxeter(self.n);
        let mut out: Vec<_> = self
            .elements
            .iter()
            .filter(|w| self.absolute_leq(w, &c))
            .cloned()
            .collect();
        out.sort_by_key(|w| (self.reflection_length(w), w.clone()));
        out
    }

    /// Bruhat up-sets for the whole group, indexed like [`BGroup::elements`].
    /// Bruhat order is generated by `w < wt` for reflections `t` with
    /// `ℓ_S(wt) > ℓ_S(w)`.
    pub fn bruhat_up_sets(&self) -> Vec<FixedBitSet> {
        let len = self.elements.len();
        let refl = SignedPermutation::reflections(self.n);
        let mut order: Vec<usize> = (0..len).collect();
        order.sort_by_key(|&k| std::cmp::Reverse(self.simple_len[k]));
        let mut up = vec![FixedBitSet::with_capacity(len); len];
        for &k in &order {
            let mut set = FixedBitSet::with_capacity(len);
            set.insert(k);
            for t in &refl {
                let v = self.index[&self.elements[k].compose(t).unwrap()];
                if self.simple_len[v] > self.simple_len[k] {
                    set.union_with(&up[v]);
                }
            }
            up[k] = set;
        }
        up
    }

    /// Bruhat order restricted to `elements`.
    pub fn bruhat_poset_on(&self, elements: &[SignedPermutation]) -> FinitePoset {
        let up = self.bruhat_up_sets();
        let idx: Vec<usize> = elements.iter().map(|w| self.index[w]).collect();
        FinitePoset::from_relation(elements.len(), |a, b| up[idx[a]].contains(idx[b]))
    }
}

pub fn enumerate_pc_b(n: usize) -> Vec<SignedPermutation> {
    BGroup::new(n).below_coxeter()
}

/// A positive root of `B_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RootB {
    /// `e_i - e_j` with `i < j`.
    Minus(usize, usize),
    /// `e_i + e_j` with `i < j`.
    Plus(usize, usize),
    /// `e_i`.
    Short(usize),
}

impl RootB {
    pub fn new_minus(n: usize, i: usize, j: usize) -> Result<Self> {
        if i == 0 || i >= j || j > n {
            return Err(Error::Parse(format!(
                "e{i}-e{j} is not a positive root of B{n}"
            )));
        }
        Ok(RootB::Minus(i, j))
    }

    pub fn new_plus(n: usize, i: usize, j: usize) -> Result<Self> {
        if i == 0 || i >= j || j > n {
            return Err(Error::Parse(format!(
                "e{i}+e{j} is not a positive root of B{n}"
            )));
        }
        Ok(RootB::Plus(i, j))
    }

    pub fn new_short(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i > n {
            return Err(Error::Parse(format!("e{i} is not a positive root of B{n}")));
        }
        Ok(RootB::Short(i))
    }

    /// `α_k`: `e_k - e_{k+1}` for `k < n`, and `e_n` for `k = n`.
    pub fn simple(n: usize, k: usize) -> Self {
        if k < n {
            RootB::Minus(k, k + 1)
        } else {
            RootB::Short(n)
        }
    }

    /// The root at coordinates `(a, b)`.
    pub fn from_coords(n: usize, a: usize, b: usize) -> Self {
        debug_assert!(1 <= a && a < b && b <= 2 * n + 1 - a + 1);
        match b.cmp(&(n + 1)) {
            std::cmp::Ordering::Less => RootB::Minus(a, b),
            std::cmp::Ordering::Equal => RootB::Short(a),
            std::cmp::Ordering::Greater => RootB::Plus(a, 2 * n + 2 - b),
        }
    }

    pub fn coords(self, n: usize) -> (usize, usize) {
        match self {
            RootB::Minus(i, j) => (i, j),
            RootB::Short(i) => (i, n + 1),
            RootB::Plus(i, j) => (i, 2 * n + 2 - j),
        }
    }

    pub fn first(self) -> usize {
        match self {
            RootB::Minus(i, _) | RootB::Plus(i, _) | RootB::Short(i) => i,
        }
    }

    /// `ht(e_i - e_j) = j - i`, `ht(e_i) = n - i + 1`, `ht(e_i + e_j) = 2n - i - j + 2`.
    pub fn height(self, n: usize) -> usize {
        let (a, b) = self.coords(n);
        b - a
    }

    pub fn is_simple(self, n: usize) -> bool {
        self.height(n) == 1
    }

    pub fn leq(self, other: RootB, n: usize) -> bool {
        let (a, b) = self.coords(n);
        let (c, d) = other.coords(n);
        c <= a && b <= d
    }

    pub fn kind_name(self) -> &'static str {
        match self {
            RootB::Minus(..) => "e-e",
            RootB::Plus(..) => "e+e",
            RootB::Short(_) => "e",
        }
    }
}

impl fmt::Display for RootB {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RootB::Minus(i, j) => write!(f, "e{i}-e{j}"),
            RootB::Plus(i, j) => write!(f, "e{i}+e{j}"),
            RootB::Short(i) => write!(f, "e{i}"),
        }
    }
}

/// The `n²` positive roots of `B_n`, by height and then by first index.
pub fn b_root_poset(n: usize) -> Vec<RootB> {
    let mut roots = Vec::with_capacity(n * n);
    for h in 1..2 * n {
        for a in 1..=n {
            let b = a + h;
            if b <= 2 * n + 1 - a {
                roots.push(RootB::from_coords(n, a, b));
            }
        }
    }
    roots
}

/// An order ideal of the `B_n` root poset, i.e. a type-B nonnesting partition.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BIdeal {
    n: usize,
    roots: Vec<RootB>,
}

impl BIdeal {
    pub fn empty(n: usize) -> Self {
        BIdeal {
            n,
            roots: Vec::new(),
        }
    }

    pub fn full(n: usize) -> Self {
        Self::from_sorted(n, b_root_poset(n))
    }

    fn from_sorted(n: usize, mut roots: Vec<RootB>) -> Self {
        roots.sort_unstable();
        roots.dedup();
        BIdeal { n, roots }
    }

    /// Checks that every root is positive for `B_n` and that the set is
    /// closed downward.
    pub fn new(n: usize, roots: Vec<RootB>) -> Result<Self> {
        for &r in &roots {
            let ok = match r {
                RootB::Minus(i, j) | RootB::Plus(i, j) => 1 <= i && i < j && j <= n,
                RootB::Short(i) => 1 <= i && i <= n,
            };
            if !ok {
                return Err(Error::Parse(format!("{r} is not a positive root of B{n}")));
            }
        }
        let p = Self::from_sorted(n, roots);
        for &r in &p.roots {
            for s in b_root_poset(n) {
                if s.leq(r, n) && !p.contains(s) {
                    return Err(Error::NotAnIdeal(format!("{r} is present but {s} is not")));
                }
            }
        }
        Ok(p)
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn roots(&self) -> &[RootB] {
        &self.roots
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn contains(&self, r: RootB) -> bool {
        self.roots.binary_search(&r).is_ok()
    }

    pub fn contains_all_simple(&self) -> bool {
        (1..=self.n).all(|k| self.contains(RootB::simple(self.n, k)))
    }
}

impl fmt::Display for BIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.roots.iter().map(RootB::to_string).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

impl fmt::Debug for BIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B{}{}", self.n, self)
    }
}

/// All order ideals of the `B_n` root poset: `binom(2n, n)` of them.
pub fn enumerate_ideals_b(n: usize) -> Vec<BIdeal> {
    fn go(n: usize, roots: &[RootB], k: usize, cur: &mut Vec<RootB>, out: &mut Vec<BIdeal>) {
        if k == roots.len() {
            out.push(BIdeal::from_sorted(n, cur.clone()));
            return;
        }
        go(n, roots, k + 1, cur, out);
        let r = roots[k];
        let below_present = roots[..k]
            .iter()
            .filter(|s| s.leq(r, n))
            .all(|s| cur.contains(s));
        if below_present {
            cur.push(r);
            go(n, roots, k + 1, cur, out);
            cur.pop();
        }
    }
    let roots = b_root_poset(n);
    let mut out = Vec::new();
    go(n, &roots, 0, &mut Vec::new(), &mut out);
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

/// Label choice for `e_i - e_j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MinusLabel {
    /// `s_i`
    First,
    /// `s_{j-1}`
    LastMinusOne,
}

/// Label choice for `e_i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ShortLabel {
    /// `s_i`
    Single,
    /// `s_i s_{i+1} ⋯ s_n`
    Ascending,
    /// `s_n ⋯ s_{i+1} s_i`
    Descending,
}

/// Label choice for `e_i + e_j` with `j > i + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PlusLabel {
    /// `s_i`
    First,
    /// `s_{j-1}`
    LastMinusOne,
    /// `s_{n-(j-i-1)}`
    Reflected,
    /// `s_j`
    Last,
}

/// Label choice for `e_i + e_{i+1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AdjacentLabel {
    /// `s_i s_{i+1} ⋯ s_n`
    Ascending,
    /// `s_n ⋯ s_{i+1} s_i`
    Descending,
    /// `s_i`
    Single,
    /// `s_{i+1} ⋯ s_n`
    AscendingFromNext,
}

/// Which height-parity block is inverted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BlockOrder {
    /// `(odd heights)(even heights)⁻¹`
    OddThenEvenInverse,
    /// `(even heights)(odd heights)⁻¹`
    EvenThenOddInverse,
}

/// One reading of the type-B labeling and of the product defining `𝒟_B`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LabelScheme {
    pub minus: MinusLabel,
    pub short: ShortLabel,
    pub plus: PlusLabel,
    pub adjacent: AdjacentLabel,
    pub blocks: BlockOrder,
    pub heights_ascending: bool,
    pub rows_ascending: bool,
}

impl LabelScheme {
    /// The labeling the crate uses: `s_i` for every root with first index
    /// `i`, except `e_i + e_{i+1}`, which is labeled `s_i s_{i+1} ⋯ s_n`;
    /// the product is odd heights then inverted even heights, heights
    /// increasing, and within a height by increasing first index.
    pub const RESOLVED: LabelScheme = LabelScheme {
        minus: MinusLabel::First,
        short: ShortLabel::Single,
        plus: PlusLabel::First,
        adjacent: AdjacentLabel::Ascending,
        blocks: BlockOrder::OddThenEvenInverse,
        heights_ascending: true,
        rows_ascending: true,
    };

    /// Every combination of the choices above.
    pub fn all() -> Vec<LabelScheme> {
        use AdjacentLabel as A;
        use PlusLabel as P;
        use ShortLabel as S;
        let mut out = Vec::new();
        for minus in [MinusLabel::First, MinusLabel::LastMinusOne] {
            for short in [S::Single, S::Ascending, S::Descending] {
                for plus in [P::First, P::LastMinusOne, P::Reflected, P::Last] {
                    for adjacent in [A::Ascending, A::Descending, A::Single, A::AscendingFromNext] {
                        for blocks in [
                            BlockOrder::OddThenEvenInverse,
                            BlockOrder::EvenThenOddInverse,
                        ] {
                            for heights_ascending in [true, false] {
                                for rows_ascending in [true, false] {
                                    out.push(LabelScheme {
                                        minus,
                                        short,
                                        plus,
                                        adjacent,
                                        blocks,
                                        heights_ascending,
                                        rows_ascending,
                                    });
                                }
                            }
                        }
                    }
                }
            }
        }
        out
    }

    /// The word labeling `r` in rank `n`.
    pub fn label(&self, n: usize, r: RootB) -> Vec<usize> {
        match r {
            RootB::Minus(i, j) => match self.minus {
                MinusLabel::First => vec![i],
                MinusLabel::LastMinusOne => vec![j - 1],
            },
            RootB::Short(i) => match self.short {
                ShortLabel::Single => vec![i],
                ShortLabel::Ascending => (i..=n).collect(),
                ShortLabel::Descending => (i..=n).rev().collect(),
            },
            RootB::Plus(i, j) if j == i + 1 => match self.adjacent {
                AdjacentLabel::Ascending => (i..=n).collect(),
                AdjacentLabel::Descending => (i..=n).rev().collect(),
                AdjacentLabel::Single => vec![i],
                AdjacentLabel::AscendingFromNext => (i + 1..=n).collect(),
            },
            RootB::Plus(i, j) => match self.plus {
                PlusLabel::First => vec![i],
                PlusLabel::LastMinusOne => vec![j - 1],
                PlusLabel::Reflected => vec![n - (j - i - 1)],
                PlusLabel::Last => vec![j.min(n)],
            },
        }
    }

    /// The word whose product is `𝒟_B(p)` under this scheme.
    pub fn word(&self, p: &BIdeal) -> Vec<usize> {
        let n = p.n;
        let block = |parity: usize| {
            let mut heights: Vec<usize> = (1..2 * n).filter(|h| h % 2 == parity).collect();
            if !self.heights_ascending {
                heights.reverse();
            }
            let mut w = Vec::new();
            for h in heights {
                let mut row: Vec<(usize, RootB)> = p
                    .roots
                    .iter()
                    .filter(|r| r.height(n) == h)
                    .map(|&r| (self.label(n, r)[0], r))
                    .collect();
                row.sort_unstable();
                if !self.rows_ascending {
                    row.reverse();
                }
                for (_, r) in row {
                    w.extend(self.label(n, r));
                }
            }
            w
        };
        let (first, second) = match self.blocks {
            BlockOrder::OddThenEvenInverse => (block(1), block(0)),
            BlockOrder::EvenThenOddInverse => (block(0), block(1)),
        };
        first.into_iter().chain(second.into_iter().rev()).collect()
    }

    pub fn apply(&self, p: &BIdeal) -> SignedPermutation {
        SignedPermutation::from_word(p.n, &self.word(p)).expect("labels lie in 1..=n")
    }
}

impl fmt::Display for LabelScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let minus = match self.minus {
            MinusLabel::First => "s_i",
            MinusLabel::LastMinusOne => "s_{j-1}",
        };
        let short = match self.short {
            ShortLabel::Single => "s_i",
            ShortLabel::Ascending => "s_i..s_n",
            ShortLabel::Descending => "s_n..s_i",
        };
        let plus = match self.plus {
            PlusLabel::First => "s_i",
            PlusLabel::LastMinusOne => "s_{j-1}",
            PlusLabel::Reflected => "s_{n-(j-i-1)}",
            PlusLabel::Last => "s_j",
        };
        let adjacent = match self.adjacent {
            AdjacentLabel::Ascending => "s_i..s_n",
            AdjacentLabel::Descending => "s_n..s_i",
            AdjacentLabel::Single => "s_i",
            AdjacentLabel::AscendingFromNext => "s_{i+1}..s_n",
        };
        let blocks = match self.blocks {
            BlockOrder::OddThenEvenInverse => "odd·even⁻¹",
            BlockOrder::EvenThenOddInverse => "even·odd⁻¹",
        };
        let dir = |asc: bool| if asc { "asc" } else { "desc" };
        write!(
            f,
            "e_i-e_j: {minus}; e_i: {short}; e_i+e_j: {plus}; e_i+e_(i+1): {adjacent}; {blocks}; heights {}; rows {}",
            dir(self.heights_ascending),
            dir(self.rows_ascending)
        )
    }
}

/// `𝒟_B` under the resolved labeling.
pub fn d_b(p: &BIdeal) -> SignedPermutation {
    LabelScheme::RESOLVED.apply(p)
}

pub fn d_b_word(p: &BIdeal) -> Vec<usize> {
    LabelScheme::RESOLVED.word(p)
}

/// How to read the clause "for each root `e_i + e_{i+2}` added,
/// `e_i + e_{i+1}` is also added" in the type-B Kreweras action.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum KrewReading {
    /// Apply the clause to every root produced, from either part.
    Literal,
    /// Apply it only to roots produced by shifting the final part, mirroring
    /// the `e_i + e_{i+1} ↦ {e_i + e_{i+2}, e_{i+1} + e_{i+2}}` rule of the
    /// initial part.
    FinalPart,
}

/// The Kreweras action on type-B nonnesting partitions.
///
/// With `k` minimal such that `α_{k+1} ∉ p` (and `k = n` when every simple
/// root is present), the initial part is `p` itself when `k = n` and the
/// roots `e_i - e_j` with `j ≤ k + 1` otherwise. Initial roots move down
/// one step, final roots move left one step, and `α_{k+1}, …, α_n` are added.
pub fn krew_nn_b(p: &BIdeal) -> BIdeal {
    krew_nn_b_with(p, KrewReading::FinalPart)
}

pub fn krew_nn_b_with(p: &BIdeal, reading: KrewReading) -> BIdeal {
    let n = p.n;
    let k = (0..n)
        .find(|&k| !p.contains(RootB::simple(n, k + 1)))
        .unwrap_or(n);
    // e_a + e_b with b = n + 1 is the short root e_a.
    let plus = |a: usize, b: usize| {
        if b == n + 1 {
            RootB::Short(a)
        } else {
            RootB::Plus(a, b)
        }
    };
    let mut initial = Vec::new();
    let mut fin = Vec::new();
    for &r in &p.roots {
        let in_initial = k == n || matches!(r, RootB::Minus(_, j) if j <= k + 1);
        if in_initial {
            match r {
                RootB::Minus(i, j) => {
                    if j - 1 > i {
                        initial.push(RootB::Minus(i, j - 1));
                    }
                }
                RootB::Short(i) => {
                    if i < n {
                        initial.push(RootB::Minus(i, n));
                    }
                }
                RootB::Plus(i, j) if j == i + 1 => {
                    initial.push(plus(i, i + 2));
                    initial.push(plus(i + 1, i + 2));
                }
                RootB::Plus(i, j) => initial.push(plus(i, j + 1)),
            }
        } else {
            match r {
                RootB::Minus(i, j) => fin.push(RootB::Minus(i - 1, j)),
                RootB::Short(i) => {
                    fin.push(RootB::Short(i - 1));
                    if i == n {
                        fin.push(RootB::Plus(n - 1, n));
                    }
                }
                RootB::Plus(i, j) => fin.push(RootB::Plus(i - 1, j)),
            }
        }
    }
    let source: Vec<RootB> = match reading {
        KrewReading::Literal => initial.iter().chain(&fin).copied().collect(),
        KrewReading::FinalPart => fin.clone(),
    };
    for r in source {
        if let RootB::Plus(i, j) = r {
            if j == i + 2 {
                fin.push(RootB::Plus(i, i + 1));
            }
        }
    }
    let mut roots = initial;
    roots.extend(fin);
    roots.extend((k + 1..=n).map(|m| RootB::simple(n, m)));
    BIdeal::from_sorted(n, roots)
}

/// `#{odd-height roots other than e_{n-1-2i} + e_{n-2i}} - #{even-height roots}`,
/// the reflection length of `𝒟_B(p)`.
pub fn lt_b_from_ideal(p: &BIdeal) -> usize {
    let n = p.n;
    let skipped =
        |r: &RootB| matches!(*r, RootB::Plus(i, j) if j == i + 1 && (n - j).is_multiple_of(2));
    let odd = p
        .roots
        .iter()
        .filter(|r| r.height(n) % 2 == 1 && !skipped(r))
        .count();
    let even = p.roots.iter().filter(|r| r.height(n) % 2 == 0).count();
    odd - even
}

/// Outcome of checking one labeling against the group, rank by rank.
#[derive(Clone, Debug)]
pub struct SchemeOutcome {
    pub scheme: LabelScheme,
    /// Whether the images are exactly the elements below `c`, per rank.
    pub bijective: Vec<bool>,
    /// Ideals containing every simple root on which Kreweras equivariance
    /// fails, per rank; empty when the scheme is not bijective.
    pub equivariance_failures: Vec<usize>,
}

impl SchemeOutcome {
    pub fn consistent(&self) -> bool {
        self.bijective.iter().all(|&b| b) && self.equivariance_failures.iter().all(|&f| f == 0)
    }
}

/// Result of searching the labeling alternatives.
#[derive(Clone, Debug)]
pub struct CalibrationReport {
    pub ranks: Vec<usize>,
    pub tried: usize,
    pub outcomes: Vec<SchemeOutcome>,
    /// Images lost to collisions and equivariance failures of the literal
    /// Kreweras reading under the resolved labeling, per rank.
    pub literal_krew: Vec<(usize, usize, usize)>,
}

impl CalibrationReport {
    pub fn consistent(&self) -> Vec<LabelScheme> {
        self.outcomes
            .iter()
            .filter(|o| o.consistent())
            .map(|o| o.scheme)
            .collect()
    }

    /// The unique consistent scheme, if there is exactly one.
    pub fn resolved(&self) -> Option<LabelScheme> {
        match self.consistent()[..] {
            [s] => Some(s),
            _ => None,
        }
    }
}

impl fmt::Display for CalibrationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "labeling calibration over ranks {:?}: {} schemes tried",
            self.ranks, self.tried
        )?;
        // Every scheme is bijective at rank 1, so only ranks from 2 up are informative.
        let near: Vec<_> = self
            .outcomes
            .iter()
            .filter(|o| o.bijective.iter().skip(1).any(|&b| b))
            .collect();
        writeln!(f, "schemes bijective at some rank above 1: {}", near.len())?;
        for o in near {
            writeln!(
                f,
                "  [{}] {} | bijective {:?} | equivariance failures {:?}",
                if o.consistent() { "ok" } else { "--" },
                o.scheme,
                o.bijective,
                o.equivariance_failures
            )?;
        }
        match self.resolved() {
            Some(s) => writeln!(f, "resolved: {s}")?,
            None => writeln!(
                f,
                "resolved: none ({} consistent schemes)",
                self.consistent().len()
            )?,
        }
        for &(n, lost, bad) in &self.literal_krew {
            writeln!(
                f,
                "literal Kreweras reading at rank {n}: {lost} collisions, {bad} equivariance failures"
            )?;
        }
        Ok(())
    }
}

fn equivariance_failures(
    scheme: &LabelScheme,
    ideals: &[BIdeal],
    c: &SignedPermutation,
    reading: KrewReading,
    all_simple_only: bool,
) -> usize {
    ideals
        .iter()
        .filter(|p| !all_simple_only || p.contains_all_simple())
        .filter(|p| {
            let lhs = scheme.apply(&krew_nn_b_with(p, reading));
            let rhs = scheme.apply(p).inverse().compose(c).unwrap();
            lhs != rhs
        })
        .count()
}

/// Tries every [`LabelScheme`] on ranks `1..=max_rank` and reports which
/// ones make `𝒟_B` a bijection onto the elements below `c` that is
/// Kreweras-equivariant.
pub fn calibrate(max_rank: usize) -> CalibrationReport {
    let ranks: Vec<usize> = (1..=max_rank).collect();
    let data: Vec<_> = ranks
        .iter()
        .map(|&n| {
            let pc: HashSet<SignedPermutation> = enumerate_pc_b(n).into_iter().collect();
            (n, enumerate_ideals_b(n), pc, SignedPermutation::coxeter(n))
        })
        .collect();
    let schemes = LabelScheme::all();
    let tried = schemes.len();
    let outcomes = schemes
        .into_iter()
        .map(|scheme| {
            let mut bijective = Vec::new();
            let mut equivariance = Vec::new();
            for (_, ideals, pc, c) in &data {
                let images: HashSet<_> = ideals.iter().map(|p| scheme.apply(p)).collect();
                let ok = images.len() == ideals.len() && images == *pc;
                bijective.push(ok);
                equivariance.push(if ok {
                    equivariance_failures(&scheme, ideals, c, KrewReading::FinalPart, true)
                } else {
                    0
                });
            }
            SchemeOutcome {
                scheme,
                bijective,
                equivariance_failures: equivariance,
            }
        })
        .collect();
    let literal_krew = data
        .iter()
        .map(|(n, ideals, _, c)| {
            let images: HashSet<_> = ideals
                .iter()
                .map(|p| krew_nn_b_with(p, KrewReading::Literal))
                .collect();
            let bad = equivariance_failures(
                &LabelScheme::RESOLVED,
                ideals,
                c,
                KrewReading::Literal,
                false,
            );
            (*n, ideals.len() - images.len(), bad)
        })
        .collect();
    CalibrationReport {
        ranks,
        tried,
        outcomes,
        literal_krew,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coxeter_element_is_balanced_cycle() {
        assert_eq!(SignedPermutation::coxeter(2).images(), &[2, -1]);
        assert_eq!(
            SignedPermutation::coxeter(3).to_string(),
            "(1,2,3,-1,-2,-3)"
        );
        let t = SignedPermutation::from_images(vec![-2, -1, 3]).unwrap();
        assert_eq!(t.to_string(), "((1,-2))");
    }

    #[test]
    fn root_heights() {
        let n = 3;
        assert_eq!(RootB::Plus(1, 2).height(n), 2 * n - 1);
        assert_eq!(RootB::Short(3).height(n), 1);
        assert_eq!(RootB::Plus(2, 3).height(n), 3);
        assert_eq!(b_root_poset(n).len(), 9);
        for r in b_root_poset(n) {
            let (a, b) = r.coords(n);
            assert_eq!(RootB::from_coords(n, a, b), r);
        }
    }

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_ideals_b(1).len(), 2);
        assert_eq!(enumerate_ideals_b(2).len(), 6);
        assert_eq!(enumerate_pc_b(2).len(), 6);
    }

    #[test]
    fn endpoints() {
        for n in 1..=4 {
            assert!(d_b(&BIdeal::empty(n)).is_identity());
            let all_simple =
                BIdeal::new(n, (1..=n).map(|k| RootB::simple(n, k)).collect()).unwrap();
            assert_eq!(krew_nn_b(&BIdeal::empty(n)), all_simple);
            assert_eq!(d_b(&all_simple), SignedPermutation::coxeter(n));
        }
    }
}
