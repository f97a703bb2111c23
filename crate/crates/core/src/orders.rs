//! Bruhat order, k-Bruhat order, the order `⪯` on S_∞, labelled
//! intervals, maximal chains and order complexes.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// `u ≤ w` in Bruhat order, by comparing the rank matrices
/// `#{a ≤ i : x(a) ≥ j}`.
pub fn bruhat_leq(u: &Permutation, w: &Permutation) -> bool {
    let n = u.degree().max(w.degree());
    let mut cu = vec![0i32; n + 2];
    let mut cw = vec![0i32; n + 2];
    for i in 1..=n {
        for j in 1..=u.apply(i) {
            cu[j] += 1;
        }
        for j in 1..=w.apply(i) {
            cw[j] += 1;
        }
        if (1..=n).any(|j| cu[j] > cw[j]) {
            return false;
        }
    }
    true
}

/// Bruhat covers `u ⋖ u(a,b)` with `b ≤ n`, as `(w, a, b)`.
pub fn bruhat_covers_up(u: &Permutation, n: usize) -> Vec<(Permutation, usize, usize)> {
    let mut out = Vec::new();
    for a in 1..=n {
        let ua = u.apply(a);
        let mut ceiling = usize::MAX;
        for b in a + 1..=n {
            let ub = u.apply(b);
            if ub > ua && ub < ceiling {
                out.push((u.swap_positions(a, b), a, b));
                ceiling = ub;
            }
        }
    }
    out
}

/// `k`-Bruhat covers `u ⋖_k u(a,b)` with `a ≤ k < b`, paired with the label
/// `u(b)`. No cover has `b > max(deg u, k) + 1`.
pub fn k_covers_up(u: &Permutation, k: usize) -> Vec<(Permutation, usize)> {
    k_covers_up_positions(u, k).into_iter().map(|(w, _, b)| (w, u.apply(b))).collect()
}

fn k_covers_up_positions(u: &Permutation, k: usize) -> Vec<(Permutation, usize, usize)> {
    let n = u.degree().max(k) + 1;
    let mut out = Vec::new();
    for a in 1..=k {
        let ua = u.apply(a);
        let mut ceiling = usize::MAX;
        for c in a + 1..=k {
            let uc = u.apply(c);
            if uc > ua && uc < ceiling {
                ceiling = uc;
            }
        }
        for b in k + 1..=n {
            let ub = u.apply(b);
            if ub > ua && ub < ceiling {
                out.push((u.swap_positions(a, b), a, b));
                ceiling = ub;
            }
        }
    }
    out
}

/// `u ≤_k w`, by the two conditions
/// I: `a ≤ k < b` implies `u(a) ≤ w(a)` and `u(b) ≥ w(b)`;
/// II: `a < b`, `u(a) < u(b)` and `w(a) > w(b)` imply `a ≤ k < b`.
pub fn k_bruhat_leq(u: &Permutation, w: &Permutation, k: usize) -> bool {
    let n = u.degree().max(w.degree());
    for a in 1..=n {
        if a <= k && u.apply(a) > w.apply(a) {
            return false;
        }
        if a > k && u.apply(a) < w.apply(a) {
            return false;
        }
    }
    for a in 1..=n {
        for b in a + 1..=n {
            if u.apply(a) < u.apply(b) && w.apply(a) > w.apply(b) && !(a <= k && k < b) {
                return false;
            }
        }
    }
    true
}

/// `η ⪯ ζ`, by the three conditions
/// 1. `α < η(α)` implies `η(α) ≤ ζ(α)`;
/// 2. `α > η(α)` implies `η(α) ≥ ζ(α)`;
/// 3. `α < β` both in `up_ζ` or both in `down_ζ` with `ζ(α) < ζ(β)`
///    imply `η(α) < η(β)`.
pub fn preceq(eta: &Permutation, zeta: &Permutation) -> bool {
    let n = eta.degree().max(zeta.degree());
    for a in 1..=n {
        let (e, z) = (eta.apply(a), zeta.apply(a));
        if (a < e && e > z) || (a > e && e < z) {
            return false;
        }
    }
    let stats = zeta.cycle_stats();
    for set in [&stats.up, &stats.down] {
        for (i, &a) in set.iter().enumerate() {
            for &b in &set[i + 1..] {
                if zeta.apply(a) < zeta.apply(b) && eta.apply(a) > eta.apply(b) {
                    return false;
                }
            }
        }
    }
    true
}

/// Which automorphism of the k-Bruhat order is applied around the basic
/// chain algorithm.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ChainAlgorithm {
    /// Works down from `w`: pick `a ≤ k` minimising `u(a)` among `u(a) < w(a)`,
    /// then `b > k` maximising `u(b)` among `w(b) < w(a) ≤ u(b)`.
    Direct,
    /// `u ≤_k w ⟺ w_0 w ≤_k w_0 u`.
    LeftReflected,
    /// `u ≤_k w ⟺ w w_0 ≤_{n-k} u w_0`.
    RightReflected,
    /// `u ≤_k w ⟺ w_0 w w_0 ≤_{n-k} w_0 u w_0`.
    Conjugated,
}

impl ChainAlgorithm {
    pub const ALL: [ChainAlgorithm; 4] = [
        ChainAlgorithm::Direct,
        ChainAlgorithm::LeftReflected,
        ChainAlgorithm::RightReflected,
        ChainAlgorithm::Conjugated,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ChainAlgorithm::Direct => "direct",
            ChainAlgorithm::LeftReflected => "left",
            ChainAlgorithm::RightReflected => "right",
            ChainAlgorithm::Conjugated => "conjugate",
        }
    }
}

impl std::str::FromStr for ChainAlgorithm {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        ChainAlgorithm::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown chain algorithm {s:?}")))
    }
}

fn direct_chain(u: &Permutation, w: &Permutation, k: usize) -> Result<Vec<Permutation>> {
    let n = u.degree().max(w.degree());
    let mut cur = w.clone();
    let mut chain = vec![cur.clone()];
    while cur != *u {
        let a = (1..=k.min(n))
            .filter(|&a| u.apply(a) < cur.apply(a))
            .min_by_key(|&a| u.apply(a))
            .ok_or_else(|| Error::domain(format!("{u} ≤_{k} {w} fails")))?;
        let wa = cur.apply(a);
        let b = (k + 1..=n)
            .filter(|&b| cur.apply(b) < wa && wa <= u.apply(b))
            .max_by_key(|&b| u.apply(b))
            .ok_or_else(|| Error::domain(format!("{u} ≤_{k} {w} fails")))?;
        cur = cur.swap_positions(a, b);
        chain.push(cur.clone());
    }
    chain.reverse();
    Ok(chain)
}

/// A saturated chain `u = x_0 ⋖_k x_1 ⋖_k ⋯ ⋖_k x_m = w`.
pub fn chain_algorithm(u: &Permutation, w: &Permutation, k: usize, alg: ChainAlgorithm) -> Result<Vec<Permutation>> {
    if !k_bruhat_leq(u, w, k) {
        return Err(Error::domain(format!("{u} ≤_{k} {w} does not hold")));
    }
    let n = u.degree().max(w.degree()).max(k);
    let w0 = Permutation::longest(n);
    let chain = match alg {
        ChainAlgorithm::Direct => direct_chain(u, w, k)?,
        ChainAlgorithm::LeftReflected => {
            let c = direct_chain(&w0.compose(w), &w0.compose(u), k)?;
            c.iter().rev().map(|x| w0.compose(x)).collect()
        }
        ChainAlgorithm::RightReflected => {
            let c = direct_chain(&w.compose(&w0), &u.compose(&w0), n - k)?;
            c.iter().rev().map(|x| x.compose(&w0)).collect()
        }
        ChainAlgorithm::Conjugated => {
            let conj = |x: &Permutation| w0.compose(x).compose(&w0);
            let c = direct_chain(&conj(u), &conj(w), n - k)?;
            c.iter().map(conj).collect()
        }
    };
    Ok(chain)
}

/// Chain in `[e, ζ]_⪯` from `ζ` down to `e`: take `α` minimal with
/// `α < ζ(α)`, then `β` maximal with `ζ(β) < ζ(α) ≤ β`, and replace `ζ` by
/// `ζ(α,β)`. Returned bottom first.
pub fn zeta_chain(zeta: &Permutation) -> Result<Vec<Permutation>> {
    let n = zeta.degree();
    let mut cur = zeta.clone();
    let mut chain = vec![cur.clone()];
    while !cur.is_identity() {
        let alpha = (1..=n)
            .find(|&a| a < cur.apply(a))
            .ok_or_else(|| Error::Inconsistent(format!("no up point in {cur}")))?;
        let za = cur.apply(alpha);
        let beta = (1..=n)
            .filter(|&b| cur.apply(b) < za && za <= b)
            .max()
            .ok_or_else(|| Error::domain(format!("chain from {zeta} is stuck at {cur}")))?;
        cur = cur.swap_positions(alpha, beta);
        chain.push(cur.clone());
    }
    chain.reverse();
    Ok(chain)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Cover {
    pub from: usize,
    pub to: usize,
    /// The larger of the two exchanged values.
    pub label: usize,
    /// The exchanged positions `a < b` (for `⪯`, the exchanged values).
    pub a: usize,
    pub b: usize,
}

/// Which order an interval was built in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum IntervalKind {
    Bruhat,
    KBruhat(usize),
    Preceq,
}

/// A graded interval with labelled cover relations. Vertices are sorted by
/// rank, then one-line word; vertex 0 is the bottom and the last is the top.
#[derive(Clone, Debug, Serialize)]
pub struct LabeledInterval {
    pub kind: IntervalKind,
    pub vertices: Vec<Permutation>,
    pub rank: Vec<usize>,
    pub covers: Vec<Cover>,
    #[serde(skip)]
    index: HashMap<Permutation, usize>,
}

impl LabeledInterval {
    fn build(
        kind: IntervalKind,
        bottom: &Permutation,
        top: &Permutation,
        up: impl Fn(&Permutation) -> Vec<(Permutation, usize, usize, usize)>,
    ) -> Self {
        let mut layers = vec![vec![bottom.clone()]];
        let mut raw_covers = Vec::new();
        let mut seen: BTreeSet<Permutation> = BTreeSet::new();
        seen.insert(bottom.clone());
        loop {
            let mut next = BTreeSet::new();
            for x in layers.last().expect("nonempty") {
                for (y, label, a, b) in up(x) {
                    raw_covers.push((x.clone(), y.clone(), label, a, b));
                    next.insert(y);
                }
            }
            if next.is_empty() {
                break;
            }
            seen.extend(next.iter().cloned());
            let mut layer: Vec<Permutation> = next.into_iter().collect();
            layer.sort_by_key(|p| p.one_line(0));
            layers.push(layer);
        }
        let mut vertices = Vec::new();
        let mut rank = Vec::new();
        for (r, layer) in layers.into_iter().enumerate() {
            for x in layer {
                vertices.push(x);
                rank.push(r);
            }
        }
        let index: HashMap<Permutation, usize> = vertices.iter().cloned().enumerate().map(|(i, x)| (x, i)).collect();
        let mut covers: Vec<Cover> = raw_covers
            .into_iter()
            .map(|(x, y, label, a, b)| Cover {
                from: index[&x],
                to: index[&y],
                label,
                a,
                b,
            })
            .collect();
        covers.sort_by_key(|c| (c.from, c.to));
        debug_assert_eq!(vertices.last(), Some(top));
        LabeledInterval {
            kind,
            vertices,
            rank,
            covers,
            index,
        }
    }

    pub fn bottom(&self) -> &Permutation {
        &self.vertices[0]
    }

    pub fn top(&self) -> &Permutation {
        self.vertices.last().expect("nonempty interval")
    }

    /// Rank of the top element.
    pub fn height(&self) -> usize {
        *self.rank.last().expect("nonempty interval")
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn index_of(&self, x: &Permutation) -> Option<usize> {
        self.index.get(x).copied()
    }

    /// Outgoing covers of each vertex.
    pub fn up_edges(&self) -> Vec<Vec<&Cover>> {
        let mut out = vec![Vec::new(); self.vertices.len()];
        for c in &self.covers {
            out[c.from].push(c);
        }
        out
    }

    /// Number of maximal chains, by dynamic programming over ranks.
    pub fn count_maximal_chains(&self) -> u128 {
        let mut paths = vec![0u128; self.vertices.len()];
        paths[0] = 1;
        // covers are sorted by source, and sources precede targets
        for c in &self.covers {
            paths[c.to] += paths[c.from];
        }
        paths[self.vertices.len() - 1]
    }

    /// Weighted chain count where each cover contributes `weight(cover)`.
    pub fn weighted_chain_count(&self, weight: impl Fn(&Cover) -> u128) -> u128 {
        let mut paths = vec![0u128; self.vertices.len()];
        paths[0] = 1;
        for c in &self.covers {
            paths[c.to] += paths[c.from] * weight(c);
        }
        paths[self.vertices.len() - 1]
    }

    /// Every maximal chain as a list of vertex indices.
    pub fn maximal_chains(&self) -> Vec<Vec<usize>> {
        let up = self.up_edges();
        let last = self.vertices.len() - 1;
        let mut out = Vec::new();
        let mut stack = vec![0usize];
        fn rec(v: usize, last: usize, up: &[Vec<&Cover>], stack: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if v == last {
                out.push(stack.clone());
                return;
            }
            for c in &up[v] {
                stack.push(c.to);
                rec(c.to, last, up, stack, out);
                stack.pop();
            }
        }
        rec(0, last, &up, &mut stack, &mut out);
        out
    }

    /// Label sequences of all maximal chains, sorted.
    pub fn chain_words(&self) -> Vec<Vec<usize>> {
        let labels: HashMap<(usize, usize), usize> = self.covers.iter().map(|c| ((c.from, c.to), c.label)).collect();
        let mut words: Vec<Vec<usize>> = self
            .maximal_chains()
            .into_iter()
            .map(|ch| ch.windows(2).map(|e| labels[&(e[0], e[1])]).collect())
            .collect();
        words.sort();
        words
    }

    /// Graphviz rendering with vertices ranked bottom to top.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph interval {\n  rankdir=BT;\n");
        for (i, v) in self.vertices.iter().enumerate() {
            let _ = writeln!(s, "  v{i} [label=\"{v}\"];");
        }
        for c in &self.covers {
            let _ = writeln!(s, "  v{} -> v{} [label=\"{}\"];", c.from, c.to, c.label);
        }
        s.push_str("}\n");
        s
    }

    /// Whether `x ↦ f(x)` is a bijection onto `other` carrying covers to
    /// covers in both directions. Labels are compared when `labels` is set.
    pub fn is_isomorphic_via(&self, other: &LabeledInterval, f: impl Fn(&Permutation) -> Permutation, labels: bool) -> bool {
        if self.len() != other.len() || self.covers.len() != other.covers.len() {
            return false;
        }
        let mut image = Vec::with_capacity(self.len());
        for v in &self.vertices {
            match other.index_of(&f(v)) {
                Some(j) => image.push(j),
                None => return false,
            }
        }
        let mut hit = vec![false; other.len()];
        for &j in &image {
            if hit[j] {
                return false;
            }
            hit[j] = true;
        }
        let theirs: HashMap<(usize, usize), usize> = other.covers.iter().map(|c| ((c.from, c.to), c.label)).collect();
        self.covers.iter().all(|c| match theirs.get(&(image[c.from], image[c.to])) {
            Some(&l) => !labels || l == c.label,
            None => false,
        })
    }
}

/// `[u, w]` in Bruhat order.
pub fn interval_bruhat(u: &Permutation, w: &Permutation) -> Result<LabeledInterval> {
    if !bruhat_leq(u, w) {
        return Err(Error::domain(format!("{u} ≤ {w} does not hold")));
    }
    let n = u.degree().max(w.degree());
    Ok(LabeledInterval::build(IntervalKind::Bruhat, u, w, |x| {
        bruhat_covers_up(x, n)
            .into_iter()
            .filter(|(y, _, _)| bruhat_leq(y, w))
            .map(|(y, a, b)| {
                let label = x.apply(b);
                (y, label, a, b)
            })
            .collect()
    }))
}

/// `[u, w]_k` with covers labelled by `u(b)`.
pub fn interval_k(u: &Permutation, w: &Permutation, k: usize) -> Result<LabeledInterval> {
    if !k_bruhat_leq(u, w, k) {
        return Err(Error::domain(format!("{u} ≤_{k} {w} does not hold")));
    }
    Ok(LabeledInterval::build(IntervalKind::KBruhat(k), u, w, |x| {
        k_covers_up_positions(x, k)
            .into_iter()
            .filter(|(y, _, _)| k_bruhat_leq(y, w, k))
            .map(|(y, a, b)| {
                let label = x.apply(b);
                (y, label, a, b)
            })
            .collect()
    }))
}

/// `[e, ζ]_⪯` with covers `η ⋖ (α,β)η` labelled by `β`.
pub fn interval_preceq(zeta: &Permutation) -> Result<LabeledInterval> {
    let n = zeta.degree();
    let e = Permutation::identity();
    Ok(LabeledInterval::build(IntervalKind::Preceq, &e, zeta, |eta| {
        let r = eta.rank_abs();
        let mut out = Vec::new();
        for a in 1..=n {
            for b in a + 1..=n {
                let next = eta.swap_values(a, b);
                if next.rank_abs() == r + 1 && preceq(&next, zeta) && preceq(eta, &next) {
                    out.push((next, b, a, b));
                }
            }
        }
        out
    }))
}

/// `f^w_u(P)`: chains in `[u, w]` where a cover `x ⋖ x(a,b)` may be
/// coloured by any `i ∈ I ∩ [a, b-1]`.
pub fn coloured_chain_count(u: &Permutation, w: &Permutation, colours: &[usize]) -> Result<u128> {
    let interval = interval_bruhat(u, w)?;
    Ok(interval.weighted_chain_count(|c| colours.iter().filter(|&&i| c.a <= i && i < c.b).count() as u128))
}

/// Simplicial complex of chains of an induced subposet.
#[derive(Clone, Debug, Serialize)]
pub struct OrderComplex {
    pub vertices: Vec<Permutation>,
    /// Maximal simplices as sorted vertex index lists.
    pub facets: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FacetIntersection {
    pub first: usize,
    pub second: usize,
    pub shared: usize,
    /// `max(|F|, |G|) - |F ∩ G|`.
    pub codim: usize,
}

impl OrderComplex {
    pub fn dimension(&self) -> Option<usize> {
        self.facets.iter().map(|f| f.len()).max().map(|m| m - 1)
    }

    pub fn is_pure(&self) -> bool {
        self.facets.windows(2).all(|w| w[0].len() == w[1].len())
    }

    /// Pairwise intersections of facets.
    pub fn facet_intersections(&self) -> Vec<FacetIntersection> {
        let mut out = Vec::new();
        for i in 0..self.facets.len() {
            for j in i + 1..self.facets.len() {
                let (f, g) = (&self.facets[i], &self.facets[j]);
                let shared = f.iter().filter(|v| g.contains(v)).count();
                out.push(FacetIntersection {
                    first: i,
                    second: j,
                    shared,
                    codim: f.len().max(g.len()) - shared,
                });
            }
        }
        out
    }

    /// Number of facet pairs meeting in a face of the given codimension.
    pub fn gluings(&self, codim: usize) -> usize {
        self.facet_intersections().iter().filter(|x| x.codim == codim).count()
    }
}

/// Order complex of the subposet of `interval` on the vertices kept by
/// `keep`; the facets are its maximal chains.
pub fn order_complex(interval: &LabeledInterval, keep: impl Fn(&Permutation) -> bool) -> OrderComplex {
    let n = interval.len();
    let up = interval.up_edges();
    // strict upper sets by breadth-first search
    let mut above = vec![vec![false; n]; n];
    for (s, row) in above.iter_mut().enumerate() {
        let mut queue: VecDeque<usize> = up[s].iter().map(|c| c.to).collect();
        while let Some(v) = queue.pop_front() {
            if !row[v] {
                row[v] = true;
                queue.extend(up[v].iter().map(|c| c.to));
            }
        }
    }
    let kept: Vec<usize> = (0..n).filter(|&i| keep(&interval.vertices[i])).collect();
    let less = |a: usize, b: usize| above[a][b];
    let covers: Vec<Vec<usize>> = kept
        .iter()
        .map(|&a| {
            kept.iter()
                .copied()
                .filter(|&b| less(a, b) && !kept.iter().any(|&c| less(a, c) && less(c, b)))
                .collect()
        })
        .collect();
    let pos: HashMap<usize, usize> = kept.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let minimal: Vec<usize> = kept.iter().copied().filter(|&b| !kept.iter().any(|&a| less(a, b))).collect();
    let mut facets = Vec::new();
    fn rec(v: usize, covers: &[Vec<usize>], pos: &HashMap<usize, usize>, stack: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let next = &covers[pos[&v]];
        if next.is_empty() {
            out.push(stack.clone());
            return;
        }
        for &w in next {
            stack.push(w);
            rec(w, covers, pos, stack, out);
            stack.pop();
        }
    }
    for m in minimal {
        let mut stack = vec![m];
        rec(m, &covers, &pos, &mut stack, &mut facets);
    }
    for f in &mut facets {
        f.sort_unstable();
    }
    facets.sort();
    OrderComplex {
        vertices: interval.vertices.clone(),
        facets,
    }
}

/// Order complex of the open interval, bottom and top removed.
pub fn proper_part_complex(interval: &LabeledInterval) -> OrderComplex {
    let (b, t) = (interval.bottom().clone(), interval.top().clone());
    order_complex(interval, |x| *x != b && *x != t)
}
