//! Arbitrary standard Coxeter elements of `S_{n+1}`: recognition, the
//! noncrossing partitions below them, standard forms, and the
//! crossing-resolution bijection `φ_{c',c}` onto `NC(S_{n+1}, c)`.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::lattice::FinitePoset;
use crate::noncrossing::{du_sets_of, enumerate_nc, syllable, NoncrossingPartition};
use crate::perm::{Permutation, SWord};
use crate::vectors::componentwise_leq;

/// A product of the `n` simple reflections, each used once.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CoxeterElement {
    n: usize,
    word: SWord,
    perm: Permutation,
}

impl CoxeterElement {
    /// The linear element `s_1 s_2 ... s_n`.
    pub fn linear(n: usize) -> Self {
        Self::from_word(n, &SWord::new((1..=n).collect())).expect("valid word")
    }

    pub fn from_word(n: usize, word: &SWord) -> Result<Self> {
        let mut counts = word.letter_counts(n);
        if word.len() != n || counts.iter_mut().any(|c| *c != 1) {
            return Err(Error::NotACoxeterElement(format!(
                "{word} does not use each of s_1..s_{n} exactly once"
            )));
        }
        let perm = word.evaluate(n)?;
        Ok(CoxeterElement {
            n,
            word: word.clone(),
            perm,
        })
    }

    /// Recognizes an `(n + 1)`-cycle written from 1 and finds a word for it.
    pub fn from_cycle(n: usize, cycle: &[usize]) -> Result<Self> {
        if !is_coxeter_cycle(n, cycle)? {
            return Err(Error::NotACoxeterElement(format!("{cycle:?}")));
        }
        let perm = Permutation::from_cycles(n, &[cycle])?;
        coxeter_elements(n)
            .into_iter()
            .find(|c| c.perm == perm)
            .ok_or_else(|| Error::NotACoxeterElement(format!("{cycle:?}")))
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn word(&self) -> &SWord {
        &self.word
    }

    pub fn permutation(&self) -> &Permutation {
        &self.perm
    }

    /// `(i_1, ..., i_{n+1})` with `i_1 = 1`.
    pub fn cycle(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.n + 1);
        let mut k = 1;
        loop {
            out.push(k);
            k = self.perm.apply(k);
            if k == 1 {
                return out;
            }
        }
    }

    /// `R = {i_1 < ... < i_k = n + 1}`, the increasing run from 1.
    pub fn right_set(&self) -> Vec<usize> {
        let cycle = self.cycle();
        let top = cycle.iter().position(|&x| x == self.n + 1).unwrap();
        cycle[..=top].to_vec()
    }

    /// `L = {i_k, ..., i_{n+1}, i_1}`, sorted.
    pub fn left_set(&self) -> Vec<usize> {
        let cycle = self.cycle();
        let top = cycle.iter().position(|&x| x == self.n + 1).unwrap();
        let mut out: Vec<usize> = cycle[top..].to_vec();
        out.push(1);
        out.sort_unstable();
        out
    }

    /// Conjugating permutation `g: k -> i_k`, so that `c' = g c g⁻¹`.
    fn relabeling(&self) -> Permutation {
        Permutation::from_one_line(self.cycle()).expect("a cycle through every point")
    }
}

impl fmt::Debug for CoxeterElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.word, self)
    }
}

/// Cycle notation from 1, e.g. `(1,3,4,6,5,2)`.
impl fmt::Display for CoxeterElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.cycle().iter().map(|k| k.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// The shape test: with `i_1 = 1` and `i_k = n + 1`, the entries rise from
/// `i_1` to `i_k` and fall from `i_k` back towards `i_{n+1} > 1`.
pub fn is_coxeter_cycle(n: usize, cycle: &[usize]) -> Result<bool> {
    let mut sorted = cycle.to_vec();
    sorted.sort_unstable();
    if sorted != (1..=n + 1).collect::<Vec<_>>() || cycle[0] != 1 {
        return Err(Error::NotACoxeterElement(format!(
            "{cycle:?} is not an {}-cycle written from 1",
            n + 1
        )));
    }
    let top = cycle.iter().position(|&x| x == n + 1).unwrap();
    Ok(cycle[..=top].windows(2).all(|w| w[0] < w[1])
        && cycle[top..].windows(2).all(|w| w[0] > w[1]))
}

/// All `2^{n-1}` Coxeter elements. Bit `i - 1` of the index says that
/// `s_{i+1}` precedes `s_i`.
pub fn coxeter_elements(n: usize) -> Vec<CoxeterElement> {
    if n == 0 {
        return Vec::new();
    }
    (0..1usize << (n - 1))
        .map(|mask| {
            let mut letters = std::collections::VecDeque::from([1]);
            for i in 2..=n {
                if mask >> (i - 2) & 1 == 1 {
                    letters.push_front(i);
                } else {
                    letters.push_back(i);
                }
            }
            CoxeterElement::from_word(n, &SWord::new(letters.into())).expect("each letter once")
        })
        .collect()
}

/// Parses `2,1,3` as `s_2 s_1 s_3`.
pub fn parse_coxeter_word(n: usize, s: &str) -> Result<CoxeterElement> {
    let letters = s
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad letter {t:?}")))
        })
        .collect::<Result<Vec<_>>>()?;
    CoxeterElement::from_word(n, &SWord::new(letters))
}

/// The interval `[e, c']` in absolute order, lexicographic in one-line
/// notation. Obtained by relabeling `NC(S_{n+1}, c)`.
pub fn enumerate_nc_general(c: &CoxeterElement) -> Vec<Permutation> {
    let g = c.relabeling();
    let mut out: Vec<Permutation> = enumerate_nc(c.n)
        .iter()
        .map(|x| x.permutation().conjugate_by(&g).unwrap())
        .collect();
    out.sort();
    out
}

fn check_below(x: &Permutation, c: &CoxeterElement) -> Result<()> {
    if !x.absolute_leq(&c.perm)? {
        return Err(Error::NotBelowCoxeter(format!("{x} is not below {c}")));
    }
    Ok(())
}

/// Standard form of a single cycle below `c'`.
///
/// Rotate so the two smallest entries `m_1 < m_2` are adjacent. If the cycle
/// steps `m_1 -> m_2`, the form is `s_[m_1,m_2]` followed by the form of the
/// cycle with `m_1` removed; otherwise it is the form of the cycle with
/// `m_1` removed followed by `s_[m_1,m_2]`.
pub fn cycle_standard_form(cycle: &[usize], c: &CoxeterElement) -> Result<SWord> {
    let x = Permutation::from_cycles(c.n, &[cycle])?;
    if cycle.len() < 2 {
        return Ok(SWord::empty());
    }
    check_below(&x, c)?;
    Ok(cycle_form_unchecked(cycle))
}

fn cycle_form_unchecked(cycle: &[usize]) -> SWord {
    if cycle.len() == 2 {
        let (a, b) = (cycle[0].min(cycle[1]), cycle[0].max(cycle[1]));
        return syllable(a, b).expect("distinct entries");
    }
    let len = cycle.len();
    let m1_pos = (0..len).min_by_key(|&p| cycle[p]).unwrap();
    let m1 = cycle[m1_pos];
    let next = cycle[(m1_pos + 1) % len];
    let prev = cycle[(m1_pos + len - 1) % len];
    let m2 = next.min(prev);
    let rest: Vec<usize> = cycle.iter().copied().filter(|&v| v != m1).collect();
    let head = syllable(m1, m2).expect("m1 < m2");
    let tail = cycle_form_unchecked(&rest);
    if next == m2 {
        head.concat(&tail)
    } else {
        tail.concat(&head)
    }
}

/// Concatenation of cycle standard forms, cycles in ascending order of
/// their maximum. The result need not be reduced.
pub fn standard_form_general(x: &Permutation, c: &CoxeterElement) -> Result<SWord> {
    check_below(x, c)?;
    let mut word = SWord::empty();
    for cycle in x.cycles() {
        word.extend(&cycle_form_unchecked(&cycle));
    }
    Ok(word)
}

/// Letter counts of [`standard_form_general`]: the vector `φ_{c'}(x')`.
pub fn general_vector(x: &Permutation, c: &CoxeterElement) -> Result<Vec<usize>> {
    Ok(standard_form_general(x, c)?.letter_counts(c.n))
}

/// Arcs `(a, b)`, `a < b`, on the points `1..=n + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArcDiagram {
    n: usize,
    arcs: Vec<(usize, usize)>,
}

impl ArcDiagram {
    /// Each block, sorted, contributes arcs between consecutive elements.
    pub fn of_permutation(x: &Permutation) -> Self {
        let mut arcs = Vec::new();
        for mut block in x.cycles() {
            block.sort_unstable();
            arcs.extend(block.windows(2).map(|w| (w[0], w[1])));
        }
        arcs.sort_unstable();
        ArcDiagram { n: x.rank(), arcs }
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    /// Crossing pairs as `(i, j, k, l)` with arcs `(i, k)`, `(j, l)` and
    /// `i < j < k < l`, in lexicographic order.
    pub fn crossings(&self) -> Vec<(usize, usize, usize, usize)> {
        let mut out = Vec::new();
        for &(i, k) in &self.arcs {
            for &(j, l) in &self.arcs {
                if i < j && j < k && k < l {
                    out.push((i, j, k, l));
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Replaces `(i, k)`, `(j, l)` by `(i, l)`, `(j, k)`.
    pub fn resolve(&mut self, (i, j, k, l): (usize, usize, usize, usize)) {
        self.arcs.retain(|&a| a != (i, k) && a != (j, l));
        self.arcs.push((i, l));
        self.arcs.push((j, k));
        self.arcs.sort_unstable();
    }

    /// Resolves crossings until none remain, letting `choose` pick which
    /// crossing (by index into [`ArcDiagram::crossings`]) goes next.
    pub fn resolve_all_with(&mut self, mut choose: impl FnMut(usize) -> usize) {
        loop {
            let crossings = self.crossings();
            if crossings.is_empty() {
                return;
            }
            let pick = choose(crossings.len()) % crossings.len();
            self.resolve(crossings[pick]);
        }
    }

    /// Chains of arcs read as blocks.
    pub fn to_permutation(&self) -> Result<Permutation> {
        let mut next = vec![0usize; self.n + 2];
        let mut has_prev = vec![false; self.n + 2];
        for &(a, b) in &self.arcs {
            next[a] = b;
            has_prev[b] = true;
        }
        let mut blocks = Vec::new();
        for start in (1..=self.n + 1).filter(|&s| !has_prev[s] && next[s] != 0) {
            let mut block = vec![start];
            let mut k = start;
            while next[k] != 0 {
                k = next[k];
                block.push(k);
            }
            blocks.push(block);
        }
        Permutation::from_cycles(self.n, &blocks)
    }
}

/// `φ_{c',c}`: draw blocks of `x'` as arcs on a line and resolve crossings,
/// always taking the lexicographically smallest crossing first.
pub fn phi(x: &Permutation, c: &CoxeterElement) -> Result<NoncrossingPartition> {
    phi_with_order(x, c, |_| 0)
}

/// `φ_{c',c}` with a caller-chosen resolution order.
pub fn phi_with_order(
    x: &Permutation,
    c: &CoxeterElement,
    choose: impl FnMut(usize) -> usize,
) -> Result<NoncrossingPartition> {
    check_below(x, c)?;
    let mut diagram = ArcDiagram::of_permutation(x);
    diagram.resolve_all_with(choose);
    NoncrossingPartition::from_permutation(&diagram.to_permutation()?)
}

/// `φ_{c',c}` tabulated in both directions.
#[derive(Clone, Debug)]
pub struct PhiTable {
    coxeter: CoxeterElement,
    forward: HashMap<Permutation, NoncrossingPartition>,
    backward: HashMap<Permutation, Permutation>,
}

impl PhiTable {
    pub fn new(c: &CoxeterElement) -> Result<Self> {
        let mut forward = HashMap::new();
        let mut backward = HashMap::new();
        for x in enumerate_nc_general(c) {
            let y = phi(&x, c)?;
            if let Some(prev) = backward.insert(y.permutation().clone(), x.clone()) {
                return Err(Error::NotBelowCoxeter(format!(
                    "φ sends both {prev} and {x} to {y}"
                )));
            }
            forward.insert(x, y);
        }
        Ok(PhiTable {
            coxeter: c.clone(),
            forward,
            backward,
        })
    }

    pub fn coxeter(&self) -> &CoxeterElement {
        &self.coxeter
    }

    pub fn apply(&self, x: &Permutation) -> Option<&NoncrossingPartition> {
        self.forward.get(x)
    }

    pub fn invert(&self, y: &NoncrossingPartition) -> Option<&Permutation> {
        self.backward.get(y.permutation())
    }

    pub fn len(&self) -> usize {
        self.forward.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forward.is_empty()
    }
}

/// `φ_{c',c''} = φ_{c'',c}⁻¹ ∘ φ_{c',c}`.
pub fn phi_general(x: &Permutation, from: &PhiTable, to: &PhiTable) -> Result<Permutation> {
    let mid = from
        .apply(x)
        .ok_or_else(|| Error::NotBelowCoxeter(format!("{x} is not below {}", from.coxeter)))?;
    to.invert(mid).cloned().ok_or_else(|| {
        Error::NotBelowCoxeter(format!("{mid} has no preimage below {}", to.coxeter))
    })
}

/// `(D, U)` of an element below any Coxeter element.
pub fn du_sets_general(x: &Permutation) -> crate::noncrossing::DuPair {
    du_sets_of(x)
}

/// `NC(S_{n+1}, c')` ordered componentwise by the letter counts of
/// standard forms.
pub fn induced_order(c: &CoxeterElement) -> Result<(Vec<Permutation>, FinitePoset)> {
    let elements = enumerate_nc_general(c);
    let vectors = elements
        .iter()
        .map(|x| general_vector(x, c))
        .collect::<Result<Vec<_>>>()?;
    let poset = FinitePoset::from_relation(elements.len(), |a, b| {
        componentwise_leq(&vectors[a], &vectors[b])
    });
    Ok((elements, poset))
}
