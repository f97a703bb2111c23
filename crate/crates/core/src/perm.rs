//! Permutations of S_∞ in trimmed one-line form.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::tableaux::Partition;

/// Largest point a permutation may move.
pub const MAX_DEGREE: usize = u8::MAX as usize;

type Images = SmallVec<[u8; 16]>;

/// A permutation fixing all but finitely many positive integers.
///
/// The stored one-line word never ends in a fixed point, so equality and
/// hashing do not depend on the ambient S_n.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    img: Images,
}

/// Statistics read off the cycle structure of ζ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CycleStats {
    /// `{α : α < ζ(α)}`
    pub up: Vec<usize>,
    /// `{β : β > ζ(β)}`
    pub down: Vec<usize>,
    pub support: Vec<usize>,
    /// The rank `|ζ|`, equal to `ℓ(ζu) - ℓ(u)` whenever `u ≤_k ζu`.
    pub rank_abs: i64,
}

impl Permutation {
    pub fn identity() -> Self {
        Self::default()
    }

    fn from_images_unchecked(mut img: Images) -> Self {
        while let Some(&last) = img.last() {
            if last as usize == img.len() {
                img.pop();
            } else {
                break;
            }
        }
        Permutation { img }
    }

    /// Builds a permutation from its one-line word `w(1) … w(n)`.
    pub fn from_one_line(word: &[usize]) -> Result<Self> {
        if word.len() > MAX_DEGREE {
            return Err(Error::InvalidPermutation(format!(
                "degree {} exceeds {MAX_DEGREE}",
                word.len()
            )));
        }
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for (i, &v) in word.iter().enumerate() {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidPermutation(format!(
                    "{word:?}: entry {v} at position {} is out of range or repeated",
                    i + 1
                )));
            }
            seen[v] = true;
        }
        Ok(Self::from_images_unchecked(word.iter().map(|&v| v as u8).collect()))
    }

    /// Builds a permutation from disjoint cycles.
    pub fn from_cycles(cycles: &[Vec<usize>]) -> Result<Self> {
        let n = cycles.iter().flatten().copied().max().unwrap_or(0);
        if n > MAX_DEGREE {
            return Err(Error::InvalidPermutation(format!("degree {n} exceeds {MAX_DEGREE}")));
        }
        let mut img: Vec<usize> = (1..=n).collect();
        let mut seen = vec![false; n + 1];
        for cycle in cycles {
            for (i, &a) in cycle.iter().enumerate() {
                if a == 0 || seen[a] {
                    return Err(Error::InvalidPermutation(format!("cycles {cycles:?}")));
                }
                seen[a] = true;
                img[a - 1] = cycle[(i + 1) % cycle.len()];
            }
        }
        Self::from_one_line(&img)
    }

    /// The transposition exchanging `a` and `b`.
    pub fn transposition(a: usize, b: usize) -> Result<Self> {
        if a == 0 || b == 0 || a == b {
            return Err(Error::arg(format!("transposition ({a},{b})")));
        }
        Self::from_cycles(&[vec![a, b]])
    }

    /// The simple transposition `s_i = (i, i+1)`.
    pub fn simple(i: usize) -> Result<Self> {
        Self::transposition(i, i + 1)
    }

    /// The longest element `n n-1 … 1` of S_n.
    pub fn longest(n: usize) -> Self {
        let word: Vec<usize> = (1..=n).rev().collect();
        Self::from_one_line(&word).expect("valid")
    }

    /// The n-cycle `(1 2 … n)`.
    pub fn long_cycle(n: usize) -> Self {
        let word: Vec<usize> = (1..=n).map(|i| if i == n { 1 } else { i + 1 }).collect();
        Self::from_one_line(&word).expect("valid")
    }

    /// Smallest n with the permutation in S_n.
    pub fn degree(&self) -> usize {
        self.img.len()
    }

    pub fn is_identity(&self) -> bool {
        self.img.is_empty()
    }

    /// `w(i)` for `i ≥ 1`.
    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        if i >= 1 && i <= self.img.len() {
            self.img[i - 1] as usize
        } else {
            i
        }
    }

    /// One-line word padded to length `n` (or the degree if larger).
    pub fn one_line(&self, n: usize) -> Vec<usize> {
        let m = n.max(self.degree());
        (1..=m).map(|i| self.apply(i)).collect()
    }

    /// Trimmed one-line word.
    pub fn word(&self) -> Vec<usize> {
        self.img.iter().map(|&v| v as usize).collect()
    }

    /// The composition `self ∘ other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        let n = self.degree().max(other.degree());
        let img = (1..=n).map(|i| self.apply(other.apply(i)) as u8).collect();
        Self::from_images_unchecked(img)
    }

    pub fn inverse(&self) -> Permutation {
        let mut img: Images = SmallVec::from_elem(0, self.degree());
        for (i, &v) in self.img.iter().enumerate() {
            img[v as usize - 1] = (i + 1) as u8;
        }
        Self::from_images_unchecked(img)
    }

    /// `w·(a,b)`: exchanges the entries in positions `a` and `b`.
    pub fn swap_positions(&self, a: usize, b: usize) -> Permutation {
        let n = self.degree().max(a).max(b);
        let mut img: Images = (1..=n).map(|i| self.apply(i) as u8).collect();
        img.swap(a - 1, b - 1);
        Self::from_images_unchecked(img)
    }

    /// `(α,β)·w`: exchanges the values `α` and `β`.
    pub fn swap_values(&self, alpha: usize, beta: usize) -> Permutation {
        let n = self.degree().max(alpha).max(beta);
        let img = (1..=n)
            .map(|i| {
                let v = self.apply(i);
                (if v == alpha {
                    beta
                } else if v == beta {
                    alpha
                } else {
                    v
                }) as u8
            })
            .collect();
        Self::from_images_unchecked(img)
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.img;
        let mut count = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Lehmer code `c_i = #{j > i : w(j) < w(i)}` without trailing zeros.
    pub fn lehmer_code(&self) -> Vec<usize> {
        let w = &self.img;
        let mut code: Vec<usize> = (0..w.len())
            .map(|i| (i + 1..w.len()).filter(|&j| w[j] < w[i]).count())
            .collect();
        while code.last() == Some(&0) {
            code.pop();
        }
        code
    }

    /// Decodes a Lehmer code. Every finitely supported sequence is the code
    /// of exactly one permutation of S_∞.
    pub fn from_lehmer_code(code: &[usize]) -> Result<Self> {
        let n = code
            .iter()
            .enumerate()
            .map(|(i, &c)| i + 1 + c)
            .max()
            .unwrap_or(0);
        Self::from_lehmer_code_in(code, n)
    }

    /// Decodes a Lehmer code inside S_n, rejecting codes of permutations
    /// outside S_n.
    pub fn from_lehmer_code_in(code: &[usize], n: usize) -> Result<Self> {
        if code.len() > n {
            return Err(Error::arg(format!("code {code:?} is longer than {n}")));
        }
        let mut pool: Vec<usize> = (1..=n).collect();
        let mut word = Vec::with_capacity(n);
        for i in 0..n {
            let c = code.get(i).copied().unwrap_or(0);
            if c >= pool.len() {
                return Err(Error::arg(format!("code {code:?} does not lie in S_{n}")));
            }
            word.push(pool.remove(c));
        }
        Self::from_one_line(&word)
    }

    /// Positions `i` with `w(i) > w(i+1)`.
    pub fn descents(&self) -> Vec<usize> {
        (1..self.degree())
            .filter(|&i| self.apply(i) > self.apply(i + 1))
            .collect()
    }

    pub fn last_descent(&self) -> Option<usize> {
        self.descents().last().copied()
    }

    /// A reduced word `a_1 … a_l` with `w = s_{a_1} ⋯ s_{a_l}`.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut word = Vec::new();
        let mut cur = self.clone();
        while let Some(&i) = cur.descents().first() {
            word.push(i);
            cur = cur.swap_positions(i, i + 1);
        }
        word.reverse();
        word
    }

    /// Points moved by the permutation, increasing.
    pub fn support(&self) -> Vec<usize> {
        (1..=self.degree()).filter(|&i| self.apply(i) != i).collect()
    }

    /// Nontrivial cycles, each listed from its smallest element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n + 1];
        let mut out = Vec::new();
        for start in 1..=n {
            if seen[start] || self.apply(start) == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            out.push(cycle);
        }
        out
    }

    /// Cycle notation such as `(153)(246)`; entries are space separated when
    /// any exceeds 9. The identity is written `e`.
    pub fn cycle_string(&self) -> String {
        if self.is_identity() {
            return "e".to_string();
        }
        let sep = if self.degree() > 9 { " " } else { "" };
        self.cycles()
            .iter()
            .map(|c| format!("({})", c.iter().join(sep)))
            .collect()
    }

    /// `ε_{p,q}(w)`: inserts a new position `p` holding the value `q`,
    /// shifting later positions right and values `≥ q` up.
    pub fn epsilon(&self, p: usize, q: usize) -> Result<Self> {
        if p == 0 || q == 0 {
            return Err(Error::arg("epsilon indices start at 1"));
        }
        let n = self.degree().max(p - 1).max(q - 1);
        let bump = |v: usize| if v < q { v } else { v + 1 };
        let word: Vec<usize> = (1..=n + 1)
            .map(|j| match j.cmp(&p) {
                Ordering::Less => bump(self.apply(j)),
                Ordering::Equal => q,
                Ordering::Greater => bump(self.apply(j - 1)),
            })
            .collect();
        Self::from_one_line(&word)
    }

    /// `w/_p`: removes position `p` and the value `w(p)`, closing both gaps.
    /// Left inverse of [`Permutation::epsilon`].
    pub fn delete(&self, p: usize) -> Result<Self> {
        if p == 0 {
            return Err(Error::arg("delete index starts at 1"));
        }
        let n = self.degree().max(p);
        let vp = self.apply(p);
        let word: Vec<usize> = (1..n)
            .map(|j| {
                let v = if j < p { self.apply(j) } else { self.apply(j + 1) };
                if v < vp {
                    v
                } else {
                    v - 1
                }
            })
            .collect();
        Self::from_one_line(&word)
    }

    /// `φ_P(ξ)`: sends `p_i` to `p_{ξ(i)}` where `P = {p_1 < p_2 < …}`.
    pub fn phi(&self, p_set: &[usize]) -> Result<Self> {
        if p_set.windows(2).any(|w| w[0] >= w[1]) || p_set.first() == Some(&0) {
            return Err(Error::arg(format!("{p_set:?} is not strictly increasing")));
        }
        if p_set.len() < self.degree() {
            return Err(Error::arg(format!(
                "set {p_set:?} has fewer than {} elements",
                self.degree()
            )));
        }
        let n = p_set.last().copied().unwrap_or(0);
        let mut word: Vec<usize> = (1..=n).collect();
        for i in 1..=self.degree() {
            word[p_set[i - 1] - 1] = p_set[self.apply(i) - 1];
        }
        Self::from_one_line(&word)
    }

    /// Inverse of [`Permutation::phi`]: the `ξ` with `φ_P(ξ) = self`, which
    /// exists when `P` is a union of cycles.
    pub fn restrict(&self, p_set: &[usize]) -> Result<Self> {
        if p_set.windows(2).any(|w| w[0] >= w[1]) || p_set.first() == Some(&0) {
            return Err(Error::arg(format!("{p_set:?} is not strictly increasing")));
        }
        if self.support().iter().any(|x| !p_set.contains(x)) {
            return Err(Error::arg(format!("{p_set:?} does not contain the support of {self}")));
        }
        let word: Vec<usize> = p_set
            .iter()
            .map(|&p| p_set.iter().position(|&q| q == self.apply(p)).map(|j| j + 1))
            .collect::<Option<_>>()
            .ok_or_else(|| Error::arg(format!("{p_set:?} is not a union of cycles of {self}")))?;
        Self::from_one_line(&word)
    }

    pub fn cycle_stats(&self) -> CycleStats {
        let support = self.support();
        let up: Vec<usize> = support.iter().copied().filter(|&a| a < self.apply(a)).collect();
        let down: Vec<usize> = support.iter().copied().filter(|&a| a > self.apply(a)).collect();
        let z = |a: usize| self.apply(a);
        let mut rank: i64 = 0;
        for &a in &up {
            for &b in &down {
                if z(a) > z(b) {
                    rank += 1;
                }
                if a > b {
                    rank -= 1;
                }
            }
        }
        for set in [&up, &down] {
            for (i, &a) in set.iter().enumerate() {
                for &b in &set[..i] {
                    // b < a
                    if z(a) < z(b) {
                        rank -= 1;
                    }
                }
            }
        }
        CycleStats {
            up,
            down,
            support,
            rank_abs: rank,
        }
    }

    /// `|ζ|`.
    pub fn rank_abs(&self) -> i64 {
        self.cycle_stats().rank_abs
    }

    /// The permutation of S_m, `m = |supp ζ|`, obtained by restricting to the
    /// support and renumbering it `1..m` in increasing order.
    pub fn shape_canonical(&self) -> Permutation {
        let support = self.support();
        let mut index = vec![0usize; self.degree() + 1];
        for (i, &p) in support.iter().enumerate() {
            index[p] = i + 1;
        }
        let word: Vec<usize> = support.iter().map(|&p| index[self.apply(p)]).collect();
        Self::from_one_line(&word).expect("restriction of a permutation")
    }

    /// True when both are `φ` images of a common permutation.
    pub fn shape_equivalent(&self, other: &Permutation) -> bool {
        self.shape_canonical() == other.shape_canonical()
    }

    /// Conjugate `ζ^{(1 2 … n)}`, requires `ζ ∈ S_n`.
    pub fn cyclic_shift(&self, n: usize) -> Result<Self> {
        if n < self.degree() {
            return Err(Error::arg(format!("{self} does not lie in S_{n}")));
        }
        let sigma = |i: usize| if i == n { 1 } else { i + 1 };
        let mut word = vec![0usize; n];
        for i in 1..=n {
            word[sigma(i) - 1] = sigma(self.apply(i));
        }
        Self::from_one_line(&word)
    }

    /// `w̄ = w_0 w w_0` in S_n.
    pub fn bar(&self, n: usize) -> Result<Self> {
        if n < self.degree() {
            return Err(Error::arg(format!("{self} does not lie in S_{n}")));
        }
        let word: Vec<usize> = (1..=n).map(|i| n + 1 - self.apply(n + 1 - i)).collect();
        Self::from_one_line(&word)
    }

    /// `u × v ∈ S_{n+m}` for `u ∈ S_n`.
    pub fn cross(&self, n: usize, other: &Permutation) -> Result<Self> {
        if n < self.degree() {
            return Err(Error::arg(format!("{self} does not lie in S_{n}")));
        }
        let m = other.degree();
        let word: Vec<usize> = (1..=n)
            .map(|i| self.apply(i))
            .chain((1..=m).map(|i| n + other.apply(i)))
            .collect();
        Self::from_one_line(&word)
    }

    /// `ε_{P,Q}(v,w)`: sends `p_i ↦ q_{v(i)}` and `p^c_j ↦ q^c_{w(j)}`, where
    /// `P, Q ⊆ [total]` have the same size and the complements are taken in
    /// `[total]`.
    pub fn epsilon_sets(
        v: &Permutation,
        w: &Permutation,
        p_set: &[usize],
        q_set: &[usize],
        total: usize,
    ) -> Result<Self> {
        let check = |s: &[usize]| {
            s.windows(2).all(|x| x[0] < x[1]) && s.iter().all(|&x| x >= 1 && x <= total)
        };
        if !check(p_set) || !check(q_set) || p_set.len() != q_set.len() {
            return Err(Error::arg("epsilon_sets needs equal-size increasing subsets"));
        }
        let comp = |s: &[usize]| -> Vec<usize> { (1..=total).filter(|x| !s.contains(x)).collect() };
        let (pc, qc) = (comp(p_set), comp(q_set));
        if v.degree() > p_set.len() || w.degree() > pc.len() {
            return Err(Error::arg("permutation too large for the given sets"));
        }
        let mut word = vec![0usize; total];
        for (i, &p) in p_set.iter().enumerate() {
            word[p - 1] = q_set[v.apply(i + 1) - 1];
        }
        for (j, &p) in pc.iter().enumerate() {
            word[p - 1] = qc[w.apply(j + 1) - 1];
        }
        Self::from_one_line(&word)
    }

    /// Disjoint supports and `|ζη| = |ζ| + |η|`.
    pub fn is_disjoint(&self, other: &Permutation) -> bool {
        let s = self.support();
        if other.support().iter().any(|x| s.contains(x)) {
            return false;
        }
        self.compose(other).rank_abs() == self.rank_abs() + other.rank_abs()
    }

    /// True when some chord `⟨α, ζ(α)⟩` crosses some chord `⟨β, η(β)⟩` on a
    /// convex polygon with vertices numbered in order.
    pub fn crossing_oracle(&self, other: &Permutation) -> Result<bool> {
        let s = self.support();
        if other.support().iter().any(|x| s.contains(x)) {
            return Err(Error::arg("crossing test needs disjoint supports"));
        }
        let chords = |z: &Permutation| -> Vec<(usize, usize)> {
            z.support()
                .into_iter()
                .map(|a| {
                    let b = z.apply(a);
                    (a.min(b), a.max(b))
                })
                .collect()
        };
        let strictly_inside = |x: usize, (a, b): (usize, usize)| a < x && x < b;
        for c in chords(self) {
            for d in chords(other) {
                if strictly_inside(d.0, c) != strictly_inside(d.1, c) {
                    return Ok(true);
                }
            }
        }
        Ok(false)
    }

    /// All of S_n in lexicographic order of one-line words.
    pub fn all(n: usize) -> Vec<Permutation> {
        (1..=n)
            .permutations(n)
            .map(|w| Self::from_one_line(&w).expect("valid"))
            .collect()
    }

    /// A uniformly random element of S_n.
    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Permutation {
        let mut word: Vec<usize> = (1..=n).collect();
        word.shuffle(rng);
        Self::from_one_line(&word).expect("valid")
    }

    /// The Grassmannian permutation `v(λ,k)`: increasing on `1..k` and on
    /// `k+1..`, with `w(j) = j + λ_{k+1-j}` for `j ≤ k`.
    pub fn grassmannian(lambda: &Partition, k: usize) -> Result<Self> {
        if lambda.len() > k {
            return Err(Error::arg(format!("{lambda} has more than {k} parts")));
        }
        let n = k + lambda.part(1);
        let first: Vec<usize> = (1..=k).map(|j| j + lambda.part(k + 1 - j)).collect();
        let rest = (1..=n).filter(|v| !first.contains(v));
        let word: Vec<usize> = first.iter().copied().chain(rest).collect();
        Self::from_one_line(&word)
    }

    /// Inverse of [`Permutation::grassmannian`]: the shape of a permutation
    /// whose only possible descent is at `k`.
    pub fn grassmannian_shape(&self, k: usize) -> Result<Partition> {
        if self.descents().iter().any(|&d| d != k) {
            return Err(Error::domain(format!("{self} is not Grassmannian with descent {k}")));
        }
        let parts: Vec<usize> = (1..=k).rev().map(|j| self.apply(j) - j).collect();
        Partition::new(parts)
    }

    /// Sort key `(length, one-line word)` used for ordered output.
    pub fn sort_key(&self) -> (usize, Vec<usize>) {
        (self.length(), self.one_line(0))
    }
}

impl std::ops::Mul for &Permutation {
    type Output = Permutation;
    fn mul(self, rhs: &Permutation) -> Permutation {
        self.compose(rhs)
    }
}

impl fmt::Display for Permutation {
    /// Compact one-line form for degree at most 9, bracketed otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            write!(f, "1")
        } else if self.degree() <= 9 {
            write!(f, "{}", self.img.iter().join(""))
        } else {
            write!(f, "[{}]", self.img.iter().join(","))
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn parse_int(s: &str) -> Result<usize> {
    s.trim()
        .parse::<usize>()
        .map_err(|_| Error::Parse(format!("bad integer {s:?}")))
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts compact one-line words (`4132`), bracketed words
    /// (`[4,1,3,2]`), cycle notation (`(153)(246)` or `(1 5 3)(2 4 6)`) and
    /// `e` for the identity.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty permutation".into()));
        }
        if s == "e" || s == "id" || s == "()" {
            return Ok(Self::identity());
        }
        if let Some(inner) = s.strip_prefix('[') {
            let inner = inner
                .strip_suffix(']')
                .ok_or_else(|| Error::Parse(format!("unterminated {s:?}")))?;
            if inner.trim().is_empty() {
                return Ok(Self::identity());
            }
            let word = inner.split(',').map(parse_int).collect::<Result<Vec<_>>>()?;
            return Self::from_one_line(&word);
        }
        if s.starts_with('(') {
            let mut cycles = Vec::new();
            let mut rest = s;
            while !rest.is_empty() {
                let body = rest
                    .strip_prefix('(')
                    .ok_or_else(|| Error::Parse(format!("bad cycle notation {s:?}")))?;
                let close = body
                    .find(')')
                    .ok_or_else(|| Error::Parse(format!("unterminated cycle in {s:?}")))?;
                let inner = body[..close].trim();
                let cycle: Vec<usize> = if inner.contains([',', ' ']) {
                    inner
                        .split([',', ' '])
                        .filter(|t| !t.is_empty())
                        .map(parse_int)
                        .collect::<Result<_>>()?
                } else {
                    inner
                        .chars()
                        .map(|c| {
                            c.to_digit(10)
                                .map(|d| d as usize)
                                .ok_or_else(|| Error::Parse(format!("bad cycle entry {c:?}")))
                        })
                        .collect::<Result<_>>()?
                };
                if !cycle.is_empty() {
                    cycles.push(cycle);
                }
                rest = body[close + 1..].trim_start();
            }
            return Self::from_cycles(&cycles);
        }
        let word = s
            .chars()
            .enumerate()
            .map(|(i, c)| {
                c.to_digit(10)
                    .filter(|&d| d > 0)
                    .map(|d| d as usize)
                    .ok_or_else(|| Error::Parse(format!("bad one-line entry {c:?} at position {} in {s:?}", i + 1)))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_one_line(&word)
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn trimming_makes_embeddings_equal() {
        assert_eq!(p("2134"), p("21"));
        assert_eq!(p("12345"), Permutation::identity());
        assert_eq!(p("[2,1,3]").degree(), 2);
    }

    #[test]
    fn parse_formats() {
        assert_eq!(p("(153)(246)"), p("541632"));
        assert_eq!(p("(1 5 3)(2,4,6)"), p("541632"));
        assert_eq!(p("[1,2,3,4,5,6,7,8,9,11,10]").degree(), 11);
        assert_eq!(p("[1,2,3,4,5,6,7,8,9,11,10]").to_string(), "[1,2,3,4,5,6,7,8,9,11,10]");
        assert!("1134".parse::<Permutation>().is_err());
        assert!("2a".parse::<Permutation>().is_err());
        assert!("[1,3]".parse::<Permutation>().is_err());
    }

    #[test]
    fn composition_convention() {
        // (ζu)(i) = ζ(u(i))
        let zeta = p("(162)(354)");
        let u = p("312645");
        assert_eq!(zeta.compose(&u), p("561234"));
        assert_eq!(u.swap_positions(1, 2), p("132645"));
        assert_eq!(u.swap_values(1, 2), p("321645"));
    }

    #[test]
    fn lehmer_examples() {
        assert_eq!(p("4321").lehmer_code(), vec![3, 2, 1]);
        assert!(Permutation::identity().lehmer_code().is_empty());
        assert_eq!(Permutation::from_lehmer_code(&[0, 2]).unwrap(), p("1423"));
        assert!(Permutation::from_lehmer_code_in(&[3, 0], 3).is_err());
    }

    #[test]
    fn epsilon_and_delete_examples() {
        assert_eq!(p("23154").epsilon(3, 3).unwrap(), p("243165"));
        assert_eq!(p("264351").delete(3).unwrap(), p("25341"));
    }

    #[test]
    fn phi_example() {
        assert_eq!(p("(24)(153)").phi(&[1, 3, 4, 5, 7]).unwrap(), p("(35)(174)"));
    }

    #[test]
    fn grassmannian_examples() {
        let g = |parts: &[usize], k| Permutation::grassmannian(&Partition::new(parts.to_vec()).unwrap(), k).unwrap();
        assert_eq!(g(&[1], 2), p("13245"));
        assert_eq!(g(&[2, 2], 2), p("34125"));
        assert_eq!(g(&[3, 2], 2), p("35124"));
        assert_eq!(p("35124").grassmannian_shape(2).unwrap(), Partition::new(vec![3, 2]).unwrap());
        assert!(p("35214").grassmannian_shape(2).is_err());
    }

    #[test]
    fn cyclic_shift_examples() {
        assert_eq!(p("(1243)").cyclic_shift(4).unwrap(), p("(1423)"));
        assert_eq!(p("(15243)").cyclic_shift(5).unwrap(), p("(13542)"));
        assert_eq!(p("(145236)").cyclic_shift(6).unwrap(), p("(125634)"));
        assert!(p("(145236)").cyclic_shift(5).is_err());
    }

    #[test]
    fn reduced_word_multiplies_back() {
        for w in Permutation::all(5) {
            let word = w.reduced_word();
            assert_eq!(word.len(), w.length());
            let mut x = Permutation::identity();
            for &i in &word {
                x = x.swap_positions(i, i + 1);
            }
            assert_eq!(x, w);
        }
    }
}
