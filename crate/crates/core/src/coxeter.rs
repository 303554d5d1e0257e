//! Finite Weyl groups from integer Cartan matrices, and the weight posets
//! (finite posets with a compatible length function) built on top of them.
//!
//! Group elements are permutations of the finite root system. Elements are
//! indexed by `(length, canonical reduced word)` so indices are stable across
//! runs; canonical words come from stripping left descents, lowest generator
//! first.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoxeterError {
    #[error("invalid Cartan matrix: {0}")]
    InvalidCartan(String),
    #[error("group enumeration exceeded {0} elements; not of finite type")]
    InfiniteGroup(usize),
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("unknown type preset `{0}`")]
    UnknownType(String),
    #[error("invalid poset: {0}")]
    InvalidPoset(String),
}

/// Default bound on the number of enumerated roots and elements.
pub const DEFAULT_ELEMENT_BOUND: usize = 100_000;

/// Labels for simple reflections. `e` is reserved for the identity.
const LETTERS: &[char] = &['s', 't', 'u', 'v', 'w', 'x', 'y', 'z'];

/// Index of an element in its group.
pub type Elem = usize;

#[derive(Clone)]
pub struct WeylGroup {
    cartan: Vec<Vec<i64>>,
    labels: Vec<char>,
    roots: Vec<Vec<i64>>,
    /// `perms[w][r]` is the index of `w(root r)`.
    perms: Vec<Vec<u32>>,
    lengths: Vec<usize>,
    words: Vec<Vec<usize>>,
    left: Vec<Vec<Elem>>,
    right: Vec<Vec<Elem>>,
    leq: Vec<Vec<u64>>,
    by_perm: HashMap<Vec<u32>, Elem>,
}

impl fmt::Debug for WeylGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("WeylGroup")
            .field("rank", &self.rank())
            .field("order", &self.order())
            .finish()
    }
}

/// Cartan matrix of a named finite type, e.g. `A3`, `B2`, `G2`, `D4`.
pub fn cartan_preset(name: &str) -> Result<Vec<Vec<i64>>, CoxeterError> {
    let unknown = || CoxeterError::UnknownType(name.to_string());
    let (kind, rank) = name.split_at(1.min(name.len()));
    let n: usize = rank.parse().map_err(|_| unknown())?;
    let mut c = vec![vec![0i64; n]; n];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    let chain = |c: &mut Vec<Vec<i64>>| {
        for i in 0..n.saturating_sub(1) {
            c[i][i + 1] = -1;
            c[i + 1][i] = -1;
        }
    };
    match (kind.to_ascii_uppercase().as_str(), n) {
        ("A", 1..=8) => chain(&mut c),
        ("B", 2..=8) => {
            chain(&mut c);
            c[n - 2][n - 1] = -2;
        }
        ("C", 2..=8) => {
            chain(&mut c);
            c[n - 1][n - 2] = -2;
        }
        ("D", 4..=8) => {
            chain(&mut c);
            c[n - 2][n - 1] = 0;
            c[n - 1][n - 2] = 0;
            c[n - 3][n - 1] = -1;
            c[n - 1][n - 3] = -1;
        }
        ("G", 2) => {
            c[0][1] = -1;
            c[1][0] = -3;
        }
        ("F", 4) => {
            chain(&mut c);
            c[1][2] = -2;
        }
        _ => return Err(unknown()),
    }
    Ok(c)
}

fn validate_cartan(cartan: &[Vec<i64>]) -> Result<(), CoxeterError> {
    let n = cartan.len();
    if n == 0 {
        return Err(CoxeterError::InvalidCartan("empty matrix".into()));
    }
    if n > LETTERS.len() {
        return Err(CoxeterError::InvalidCartan(format!(
            "rank {n} exceeds the {} available generator labels",
            LETTERS.len()
        )));
    }
    for (i, row) in cartan.iter().enumerate() {
        if row.len() != n {
            return Err(CoxeterError::InvalidCartan("matrix is not square".into()));
        }
        if row[i] != 2 {
            return Err(CoxeterError::InvalidCartan(format!(
                "diagonal entry ({i},{i}) is {}",
                row[i]
            )));
        }
        for (j, &a) in row.iter().enumerate() {
            if i != j && (a > 0 || (a == 0) != (cartan[j][i] == 0)) {
                return Err(CoxeterError::InvalidCartan(format!(
                    "off-diagonal entries ({i},{j}) and ({j},{i}) are inconsistent"
                )));
            }
        }
    }
    Ok(())
}

impl WeylGroup {
    pub fn from_type(name: &str) -> Result<Self, CoxeterError> {
        Self::new(cartan_preset(name)?)
    }

    pub fn new(cartan: Vec<Vec<i64>>) -> Result<Self, CoxeterError> {
        Self::with_bound(cartan, DEFAULT_ELEMENT_BOUND)
    }

    pub fn with_bound(cartan: Vec<Vec<i64>>, bound: usize) -> Result<Self, CoxeterError> {
        validate_cartan(&cartan)?;
        let n = cartan.len();
        let reflect = |i: usize, beta: &[i64]| -> Vec<i64> {
            let pairing: i64 = (0..n).map(|j| cartan[i][j] * beta[j]).sum();
            let mut out = beta.to_vec();
            out[i] -= pairing;
            out
        };

        // positive roots: closure of the simple roots under simple reflections
        let mut positive: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
            .collect();
        let mut seen: BTreeSet<Vec<i64>> = positive.iter().cloned().collect();
        let mut queue: VecDeque<Vec<i64>> = positive.iter().cloned().collect();
        while let Some(beta) = queue.pop_front() {
            for i in 0..n {
                let r = reflect(i, &beta);
                if r.iter().all(|&x| x >= 0) && seen.insert(r.clone()) {
                    if seen.len() > bound {
                        return Err(CoxeterError::InfiniteGroup(bound));
                    }
                    positive.push(r.clone());
                    queue.push_back(r);
                }
            }
        }
        positive.sort_by_key(|r| (r.iter().sum::<i64>(), std::cmp::Reverse(r.clone())));
        let npos = positive.len();
        let mut roots = positive.clone();
        roots.extend(
            positive
                .iter()
                .map(|r| r.iter().map(|x| -x).collect::<Vec<_>>()),
        );
        let root_index: HashMap<Vec<i64>, u32> = roots
            .iter()
            .enumerate()
            .map(|(k, r)| (r.clone(), k as u32))
            .collect();
        let gens: Vec<Vec<u32>> = (0..n)
            .map(|i| roots.iter().map(|r| root_index[&reflect(i, r)]).collect())
            .collect();

        // breadth-first enumeration by left multiplication
        let identity: Vec<u32> = (0..roots.len() as u32).collect();
        let mut perms = vec![identity.clone()];
        let mut by_perm: HashMap<Vec<u32>, Elem> = HashMap::from([(identity, 0)]);
        let mut head = 0;
        while head < perms.len() {
            let w = perms[head].clone();
            head += 1;
            for g in &gens {
                let sw: Vec<u32> = w.iter().map(|&r| g[r as usize]).collect();
                if !by_perm.contains_key(&sw) {
                    if perms.len() >= bound {
                        return Err(CoxeterError::InfiniteGroup(bound));
                    }
                    by_perm.insert(sw.clone(), perms.len());
                    perms.push(sw);
                }
            }
        }
        let length_of =
            |p: &[u32]| -> usize { (0..npos).filter(|&r| p[r] as usize >= npos).count() };

        let order = perms.len();
        let mut raw_left = vec![vec![0; order]; n];
        for (w, p) in perms.iter().enumerate() {
            for (i, g) in gens.iter().enumerate() {
                let sw: Vec<u32> = p.iter().map(|&r| g[r as usize]).collect();
                raw_left[i][w] = by_perm[&sw];
            }
        }
        let raw_len: Vec<usize> = perms.iter().map(|p| length_of(p)).collect();
        let raw_word = |mut w: Elem| -> Vec<usize> {
            let mut word = Vec::new();
            while raw_len[w] > 0 {
                let i = (0..n)
                    .find(|&i| raw_len[raw_left[i][w]] < raw_len[w])
                    .expect("nonidentity element has a left descent");
                word.push(i);
                w = raw_left[i][w];
            }
            word
        };
        let mut keyed: Vec<(usize, Vec<usize>, Elem)> =
            (0..order).map(|w| (raw_len[w], raw_word(w), w)).collect();
        keyed.sort();
        let mut relabel = vec![0; order];
        for (new, (_, _, old)) in keyed.iter().enumerate() {
            relabel[*old] = new;
        }
        let perms: Vec<Vec<u32>> = keyed
            .iter()
            .map(|(_, _, old)| perms[*old].clone())
            .collect();
        let lengths: Vec<usize> = keyed.iter().map(|(l, _, _)| *l).collect();
        let words: Vec<Vec<usize>> = keyed.iter().map(|(_, w, _)| w.clone()).collect();
        let by_perm: HashMap<Vec<u32>, Elem> = perms
            .iter()
            .enumerate()
            .map(|(k, p)| (p.clone(), k))
            .collect();
        let mut left = vec![vec![0; order]; n];
        let mut right = vec![vec![0; order]; n];
        for i in 0..n {
            for (old, &new) in relabel.iter().enumerate() {
                left[i][new] = relabel[raw_left[i][old]];
            }
        }
        // w s = (s w^{-1})^{-1}; compute directly by composing permutations
        for (i, g) in gens.iter().enumerate() {
            for (w, p) in perms.iter().enumerate() {
                let ws: Vec<u32> = g.iter().map(|&r| p[r as usize]).collect();
                right[i][w] = by_perm[&ws];
            }
        }

        let mut group = WeylGroup {
            cartan,
            labels: LETTERS[..n].to_vec(),
            roots,
            perms,
            lengths,
            words,
            left,
            right,
            leq: Vec::new(),
            by_perm,
        };
        group.leq = group.compute_bruhat();
        Ok(group)
    }

    /// Bruhat order via the lifting property: if `s w < w` then
    /// `y <= w` iff `min(y, s y) <= s w`.
    fn compute_bruhat(&self) -> Vec<Vec<u64>> {
        let order = self.order();
        let words = order.div_ceil(64);
        let mut leq = vec![vec![0u64; words]; order];
        for w in 0..order {
            if self.lengths[w] == 0 {
                leq[w][w / 64] |= 1 << (w % 64);
                continue;
            }
            let s = self.words[w][0];
            let sw = self.left[s][w];
            for y in 0..order {
                let sy = self.left[s][y];
                let m = if self.lengths[sy] < self.lengths[y] {
                    sy
                } else {
                    y
                };
                if leq[sw][m / 64] >> (m % 64) & 1 == 1 {
                    leq[w][y / 64] |= 1 << (y % 64);
                }
            }
        }
        leq
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn order(&self) -> usize {
        self.perms.len()
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn labels(&self) -> &[char] {
        &self.labels
    }

    pub fn roots(&self) -> &[Vec<i64>] {
        &self.roots
    }

    pub fn identity(&self) -> Elem {
        0
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.order()
    }

    pub fn longest(&self) -> Elem {
        self.order() - 1
    }

    pub fn length(&self, w: Elem) -> usize {
        self.lengths[w]
    }

    pub fn max_length(&self) -> usize {
        self.lengths[self.longest()]
    }

    /// `s_i w`.
    pub fn left_mul(&self, i: usize, w: Elem) -> Elem {
        self.left[i][w]
    }

    /// `w s_i`.
    pub fn right_mul(&self, w: Elem, i: usize) -> Elem {
        self.right[i][w]
    }

    pub fn multiply(&self, x: Elem, y: Elem) -> Elem {
        self.words[y]
            .iter()
            .fold(x, |acc, &i| self.right_mul(acc, i))
    }

    pub fn inverse(&self, w: Elem) -> Elem {
        self.words[w]
            .iter()
            .fold(self.identity(), |acc, &i| self.left_mul(i, acc))
    }

    /// Canonical reduced word as generator indices.
    pub fn word(&self, w: Elem) -> &[usize] {
        &self.words[w]
    }

    /// Canonical reduced word, `e` for the identity.
    pub fn name(&self, w: Elem) -> String {
        if self.words[w].is_empty() {
            "e".to_string()
        } else {
            self.words[w].iter().map(|&i| self.labels[i]).collect()
        }
    }

    /// Parse a word in the generator letters (not necessarily reduced).
    pub fn parse(&self, word: &str) -> Result<Elem, CoxeterError> {
        let word = word.trim();
        if word == "e" || word.is_empty() {
            return Ok(self.identity());
        }
        word.chars().try_fold(self.identity(), |acc, ch| {
            let i = self
                .labels
                .iter()
                .position(|&l| l == ch)
                .ok_or_else(|| CoxeterError::UnknownElement(word.to_string()))?;
            Ok(self.right_mul(acc, i))
        })
    }

    /// Element acting on roots by the given permutation, if any.
    pub fn from_permutation(&self, perm: &[u32]) -> Option<Elem> {
        self.by_perm.get(perm).copied()
    }

    pub fn permutation(&self, w: Elem) -> &[u32] {
        &self.perms[w]
    }

    pub fn bruhat_leq(&self, y: Elem, w: Elem) -> bool {
        self.leq[w][y / 64] >> (y % 64) & 1 == 1
    }

    /// Elements `y <= w` with `l(y) = l(w) - 1`.
    pub fn covers(&self, w: Elem) -> Vec<Elem> {
        let l = self.lengths[w];
        if l == 0 {
            return Vec::new();
        }
        self.elements()
            .filter(|&y| self.lengths[y] + 1 == l && self.bruhat_leq(y, w))
            .collect()
    }

    /// Generators `s` with `l(s w) < l(w)`.
    pub fn left_descents(&self, w: Elem) -> Vec<usize> {
        (0..self.rank())
            .filter(|&i| self.lengths[self.left[i][w]] < self.lengths[w])
            .collect()
    }

    pub fn right_descents(&self, w: Elem) -> Vec<usize> {
        (0..self.rank())
            .filter(|&i| self.lengths[self.right[i][w]] < self.lengths[w])
            .collect()
    }

    /// Elements `y <= w`.
    pub fn lower_interval(&self, w: Elem) -> Vec<Elem> {
        self.elements().filter(|&y| self.bruhat_leq(y, w)).collect()
    }

    /// The Weyl group as a weight poset with the Coxeter length.
    pub fn weight_poset(&self) -> WeightPoset {
        let names = self.elements().map(|w| self.name(w)).collect();
        let lengths = self.elements().map(|w| self.lengths[w] as i64).collect();
        let leq = self
            .elements()
            .map(|y| self.elements().map(|w| self.bruhat_leq(y, w)).collect())
            .collect();
        WeightPoset::from_relation(names, lengths, leq)
            .expect("Bruhat order with Coxeter length is a valid weight poset")
    }

    /// Restriction to the lower interval of `w`.
    pub fn interval_poset(&self, w: Elem) -> (WeightPoset, Vec<Elem>) {
        let elems = self.lower_interval(w);
        let names = elems.iter().map(|&x| self.name(x)).collect();
        let lengths = elems.iter().map(|&x| self.lengths[x] as i64).collect();
        let leq = elems
            .iter()
            .map(|&a| elems.iter().map(|&b| self.bruhat_leq(a, b)).collect())
            .collect();
        let poset = WeightPoset::from_relation(names, lengths, leq)
            .expect("Bruhat interval is a valid weight poset");
        (poset, elems)
    }
}

/// A finite poset with a compatible length function: `w < y` implies
/// `len(w) < len(y)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightPoset {
    names: Vec<String>,
    lengths: Vec<i64>,
    leq: Vec<Vec<bool>>,
}

impl WeightPoset {
    /// Build from covering pairs `(lower, upper)`; the order is their
    /// reflexive-transitive closure.
    pub fn from_covers(
        names: Vec<String>,
        lengths: Vec<i64>,
        covers: &[(usize, usize)],
    ) -> Result<Self, CoxeterError> {
        let n = names.len();
        let mut leq = vec![vec![false; n]; n];
        for (i, row) in leq.iter_mut().enumerate() {
            row[i] = true;
        }
        for &(a, b) in covers {
            if a >= n || b >= n {
                return Err(CoxeterError::InvalidPoset(format!(
                    "covering pair ({a}, {b}) out of range"
                )));
            }
            leq[a][b] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if leq[i][k] {
                    for j in 0..n {
                        if leq[k][j] {
                            leq[i][j] = true;
                        }
                    }
                }
            }
        }
        Self::from_relation(names, lengths, leq)
    }

    pub fn from_relation(
        names: Vec<String>,
        lengths: Vec<i64>,
        leq: Vec<Vec<bool>>,
    ) -> Result<Self, CoxeterError> {
        let n = names.len();
        if lengths.len() != n || leq.len() != n || leq.iter().any(|r| r.len() != n) {
            return Err(CoxeterError::InvalidPoset("inconsistent sizes".into()));
        }
        if n == 0 {
            return Err(CoxeterError::InvalidPoset("empty poset".into()));
        }
        let distinct: BTreeSet<&String> = names.iter().collect();
        if distinct.len() != n {
            return Err(CoxeterError::InvalidPoset("duplicate element names".into()));
        }
        for i in 0..n {
            if !leq[i][i] {
                return Err(CoxeterError::InvalidPoset(
                    "relation is not reflexive".into(),
                ));
            }
            for j in 0..n {
                if i != j && leq[i][j] {
                    if leq[j][i] {
                        return Err(CoxeterError::InvalidPoset(format!(
                            "{} and {} are mutually comparable",
                            names[i], names[j]
                        )));
                    }
                    if lengths[i] >= lengths[j] {
                        return Err(CoxeterError::InvalidPoset(format!(
                            "length is not compatible with the order: {} < {} but {} >= {}",
                            names[i], names[j], lengths[i], lengths[j]
                        )));
                    }
                    for k in 0..n {
                        if leq[j][k] && !leq[i][k] {
                            return Err(CoxeterError::InvalidPoset(
                                "relation is not transitive".into(),
                            ));
                        }
                    }
                }
            }
        }
        Ok(WeightPoset {
            names,
            lengths,
            leq,
        })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, w: usize) -> &str {
        &self.names[w]
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn length(&self, w: usize) -> i64 {
        self.lengths[w]
    }

    pub fn lengths(&self) -> &[i64] {
        &self.lengths
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a][b]
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq[a][b]
    }

    pub fn max_length(&self) -> i64 {
        *self.lengths.iter().max().expect("nonempty poset")
    }

    pub fn min_length(&self) -> i64 {
        *self.lengths.iter().min().expect("nonempty poset")
    }

    /// Elements of a given length.
    pub fn level(&self, len: i64) -> Vec<usize> {
        (0..self.len())
            .filter(|&w| self.lengths[w] == len)
            .collect()
    }

    /// `y < w` with `len(w) - len(y) = 1`.
    pub fn covers(&self, w: usize) -> Vec<usize> {
        (0..self.len())
            .filter(|&y| self.lt(y, w) && self.lengths[w] - self.lengths[y] == 1)
            .collect()
    }

    /// Elements ordered by `(length, input order)`.
    pub fn by_length(&self) -> Vec<usize> {
        let mut v: Vec<usize> = (0..self.len()).collect();
        v.sort_by_key(|&w| (self.lengths[w], w));
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// All reduced words of `w`, by brute force over words of length l(w).
    fn reduced_words(g: &WeylGroup, w: Elem) -> Vec<Vec<usize>> {
        let l = g.length(w);
        let mut out = Vec::new();
        let mut stack = vec![(g.identity(), Vec::new())];
        while let Some((x, word)) = stack.pop() {
            if word.len() == l {
                if x == w {
                    out.push(word);
                }
                continue;
            }
            for i in 0..g.rank() {
                let y = g.right_mul(x, i);
                if g.length(y) == word.len() + 1 {
                    let mut nw = word.clone();
                    nw.push(i);
                    stack.push((y, nw));
                }
            }
        }
        out
    }

    /// Subword property oracle: y <= w iff some subword of a reduced word of
    /// w multiplies to y.
    fn subword_leq(g: &WeylGroup, y: Elem, w: Elem) -> bool {
        let word = reduced_words(g, w).remove(0);
        let n = word.len();
        (0..1u32 << n).any(|mask| {
            let x = (0..n)
                .filter(|k| mask >> k & 1 == 1)
                .fold(g.identity(), |acc, k| g.right_mul(acc, word[k]));
            x == y
        })
    }

    fn poincare(g: &WeylGroup) -> Vec<usize> {
        let mut counts = vec![0; g.max_length() + 1];
        for w in g.elements() {
            counts[g.length(w)] += 1;
        }
        counts
    }

    #[test]
    fn small_orders() {
        assert_eq!(WeylGroup::from_type("A1").unwrap().order(), 2);
        let a3 = WeylGroup::from_type("A3").unwrap();
        assert_eq!(a3.order(), 24);
        assert_eq!(a3.max_length(), 6);
        assert_eq!(WeylGroup::from_type("B2").unwrap().order(), 8);
        assert_eq!(WeylGroup::from_type("G2").unwrap().order(), 12);
        assert_eq!(WeylGroup::from_type("B3").unwrap().order(), 48);
        assert_eq!(WeylGroup::from_type("D4").unwrap().order(), 192);
    }

    #[test]
    fn a3_poincare_polynomial() {
        // (1)(1+q)(1+q+q^2)(1+q+q^2+q^3)
        let a3 = WeylGroup::from_type("A3").unwrap();
        assert_eq!(poincare(&a3), vec![1, 3, 5, 6, 5, 3, 1]);
    }

    #[test]
    fn affine_cartan_is_rejected() {
        let affine = vec![vec![2, -2], vec![-2, 2]];
        assert_eq!(
            WeylGroup::with_bound(affine, 500).unwrap_err(),
            CoxeterError::InfiniteGroup(500)
        );
        assert!(WeylGroup::new(vec![vec![2, 1], vec![1, 2]]).is_err());
    }

    #[test]
    fn bruhat_matches_subword_oracle() {
        for ty in ["A2", "A3", "B2"] {
            let g = WeylGroup::from_type(ty).unwrap();
            for w in g.elements() {
                for y in g.elements() {
                    assert_eq!(
                        g.bruhat_leq(y, w),
                        subword_leq(&g, y, w),
                        "{ty}: {} <= {}",
                        g.name(y),
                        g.name(w)
                    );
                }
            }
        }
    }

    #[test]
    fn a3_named_comparison() {
        let g = WeylGroup::from_type("A3").unwrap();
        let su = g.parse("su").unwrap();
        let tsut = g.parse("tsut").unwrap();
        assert_eq!(g.bruhat_leq(su, tsut), subword_leq(&g, su, tsut));
        assert!(g.bruhat_leq(su, tsut));
        assert!(g.bruhat_leq(g.identity(), tsut));
        assert!(g.bruhat_leq(tsut, tsut));
    }

    #[test]
    fn covers_and_descents() {
        let g = WeylGroup::from_type("A3").unwrap();
        assert!(g.covers(g.identity()).is_empty());
        assert_eq!(g.covers(g.longest()).len(), 3);
        assert!(g.left_descents(g.identity()).is_empty());
        assert_eq!(g.left_descents(g.longest()), vec![0, 1, 2]);
        let total: usize = g.elements().map(|w| 1 << g.covers(w).len()).sum();
        assert_eq!(total, 155);
        for w in g.elements() {
            for y in g.covers(w) {
                assert!(g.bruhat_leq(y, w));
                assert_eq!(g.length(y) + 1, g.length(w));
            }
            for i in 0..g.rank() {
                let l = g.length(g.left_mul(i, w));
                assert!(l + 1 == g.length(w) || l == g.length(w) + 1);
            }
        }
    }

    #[test]
    fn minimal_coset_representatives() {
        // sum over J of |W^J| = 24+12+12+12+6+4+4+1
        let g = WeylGroup::from_type("A3").unwrap();
        let mut total = 0;
        for mask in 0..8u32 {
            let j: Vec<usize> = (0..3).filter(|i| mask >> i & 1 == 1).collect();
            total += g
                .elements()
                .filter(|&w| j.iter().all(|&s| g.length(g.right_mul(w, s)) > g.length(w)))
                .count();
        }
        assert_eq!(total, 75);
    }

    #[test]
    fn words_round_trip() {
        let g = WeylGroup::from_type("A3").unwrap();
        for w in g.elements() {
            assert_eq!(g.parse(&g.name(w)).unwrap(), w);
            assert_eq!(g.multiply(w, g.inverse(w)), g.identity());
        }
        assert_eq!(g.parse("tsut").unwrap(), g.parse("tust").unwrap());
        assert!(g.parse("tq").is_err());
    }

    #[test]
    fn poset_validation() {
        let names = vec!["a".to_string(), "b".to_string()];
        assert!(WeightPoset::from_covers(names.clone(), vec![0, 1], &[(0, 1)]).is_ok());
        assert!(WeightPoset::from_covers(names.clone(), vec![1, 1], &[(0, 1)]).is_err());
        assert!(WeightPoset::from_covers(names, vec![0, 1], &[(0, 1), (1, 0)]).is_err());
        let g = WeylGroup::from_type("A2").unwrap();
        let p = g.weight_poset();
        assert_eq!(p.len(), 6);
        assert_eq!(p.covers(5).len(), 2);
    }
}
