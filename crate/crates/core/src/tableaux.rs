//! Partitions, skew shapes, tableaux, Schensted insertion and
//! Littlewood-Richardson counting.
//!
//! Diagrams use English conventions: row 1 is on top and the longest.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::schubert;

/// A partition `λ_1 ≥ λ_2 ≥ … > 0`.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Trailing zeros are dropped.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::arg(format!("{parts:?} is not a partition")));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// `(p, 1^{q-1})`.
    pub fn hook(p: usize, q: usize) -> Result<Self> {
        if p == 0 || q == 0 {
            return Err(Error::arg("hook needs positive arm and leg"));
        }
        let mut parts = vec![p];
        parts.extend(std::iter::repeat_n(1, q - 1));
        Self::new(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `λ_i` for `i ≥ 1`, zero past the last part.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.part(1);
        let parts = (1..=cols).map(|c| self.parts.iter().filter(|&&p| p >= c).count()).collect();
        Partition { parts }
    }

    /// Diagram containment `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && (1..=other.len()).all(|i| other.part(i) <= self.part(i))
    }

    pub fn is_hook(&self) -> bool {
        self.parts.iter().skip(1).all(|&p| p == 1)
    }

    /// Cells `(row, col)`, 1-based, row by row.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(r, &p)| (1..=p).map(move |c| (r + 1, c)))
            .collect()
    }

    /// Partitions of `m` in reverse lexicographic order.
    pub fn all_of_size(m: usize) -> Vec<Partition> {
        fn rec(m: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if m == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for p in (1..=m.min(max)).rev() {
                cur.push(p);
                rec(m - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(m, m, &mut Vec::new(), &mut out);
        out
    }

    /// Partitions contained in the `rows × cols` rectangle.
    pub fn in_box(rows: usize, cols: usize) -> Vec<Partition> {
        fn rec(rows: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            out.push(Partition::new(cur.clone()).expect("nonincreasing"));
            if cur.len() == rows {
                return;
            }
            for p in 1..=max {
                cur.push(p);
                rec(rows, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(rows, cols, &mut Vec::new(), &mut out);
        out
    }

    /// Number of standard tableaux, by the hook length formula.
    pub fn f_lambda(&self) -> u128 {
        let conj = self.conjugate();
        let n = self.size();
        let mut exponents: BTreeMap<usize, i64> = BTreeMap::new();
        let mut add = |mut x: usize, sign: i64| {
            let mut d = 2;
            while d * d <= x {
                while x.is_multiple_of(d) {
                    *exponents.entry(d).or_default() += sign;
                    x /= d;
                }
                d += 1;
            }
            if x > 1 {
                *exponents.entry(x).or_default() += sign;
            }
        };
        for i in 2..=n {
            add(i, 1);
        }
        for (r, c) in self.cells() {
            let hook = self.part(r) - c + conj.part(c) - r + 1;
            add(hook, -1);
        }
        exponents.into_iter().fold(1u128, |acc, (p, e)| {
            debug_assert!(e >= 0);
            acc * (p as u128).pow(e as u32)
        })
    }

    /// Partitions `λ ⊇ self` with `λ/self` a horizontal strip of size `m`
    /// and at most `row_bound` rows.
    pub fn horizontal_strips(&self, m: usize, row_bound: usize) -> Vec<Partition> {
        let rows = (self.len() + 1).min(row_bound);
        if self.len() > row_bound {
            return Vec::new();
        }
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(rows);
        fn rec(mu: &Partition, i: usize, rows: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if i > rows {
                if left == 0 {
                    out.push(Partition::new(cur.clone()).expect("strip of a partition"));
                }
                return;
            }
            let lo = mu.part(i);
            let hi = if i == 1 { lo + left } else { mu.part(i - 1).min(lo + left) };
            for p in lo..=hi {
                cur.push(p);
                rec(mu, i + 1, rows, left - (p - lo), cur, out);
                cur.pop();
            }
        }
        rec(self, 1, rows, m, &mut cur, &mut out);
        out
    }

    /// The row-superstandard tableau: row `i` holds the next `λ_i` integers.
    pub fn superstandard(&self) -> Tableau {
        let mut next = 0;
        let rows = self
            .parts
            .iter()
            .map(|&p| {
                let row: Vec<usize> = (next + 1..=next + p).collect();
                next += p;
                row
            })
            .collect();
        Tableau {
            shape: SkewShape::straight(self.clone()),
            rows,
        }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "0");
        }
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Comma separated parts such as `3,2,1`; `0`, `∅` or the empty string
    /// give the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.is_empty() || s == "∅" {
            return Ok(Self::empty());
        }
        let parts = s
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad part {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(deserializer)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

/// A skew diagram `outer / inner`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SkewShape {
    pub outer: Partition,
    pub inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::arg(format!("{inner} is not contained in {outer}")));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(outer: Partition) -> Self {
        SkewShape {
            outer,
            inner: Partition::empty(),
        }
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn rows(&self) -> usize {
        self.outer.len()
    }

    /// Cells `(row, col)` row by row, left to right.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        (1..=self.outer.len())
            .flat_map(|r| (self.inner.part(r) + 1..=self.outer.part(r)).map(move |c| (r, c)))
            .collect()
    }

    pub fn contains_cell(&self, r: usize, c: usize) -> bool {
        c > self.inner.part(r) && c <= self.outer.part(r)
    }

    /// The diagram rotated by 180 degrees.
    pub fn rotate(&self) -> SkewShape {
        let rows = self.outer.len();
        let width = self.outer.part(1);
        let outer = Partition::new((1..=rows).rev().map(|r| width - self.inner.part(r)).collect())
            .expect("rotated outer");
        let inner = Partition::new((1..=rows).rev().map(|r| width - self.outer.part(r)).collect())
            .expect("rotated inner");
        SkewShape { outer, inner }
    }

    /// All skew shapes of size `m` without empty rows or columns, each
    /// listed once.
    pub fn all_of_size(m: usize) -> Vec<SkewShape> {
        // rows are chosen from the bottom up; row r spans (inner_r, outer_r]
        // and meets or touches the row below so no column is empty
        fn rec(left: usize, below: (usize, usize), rows: &mut Vec<(usize, usize)>, out: &mut Vec<SkewShape>) {
            if left == 0 {
                let outer = Partition::new(rows.iter().rev().map(|r| r.1).collect()).expect("outer");
                let inner = Partition::new(rows.iter().rev().map(|r| r.0).collect()).expect("inner");
                out.push(SkewShape { outer, inner });
                return;
            }
            let (inner_below, outer_below) = below;
            for inner in inner_below..=outer_below {
                let lo = outer_below.max(inner + 1);
                for outer in lo..=inner + left {
                    rows.push((inner, outer));
                    rec(left - (outer - inner), (inner, outer), rows, out);
                    rows.pop();
                }
            }
        }
        let mut out = Vec::new();
        for bottom in 1..=m {
            let mut rows = vec![(0, bottom)];
            rec(m - bottom, (0, bottom), &mut rows, &mut out);
        }
        debug_assert!(out.iter().all(|s| s.has_no_empty_lines()));
        out.sort();
        out
    }

    fn has_no_empty_lines(&self) -> bool {
        let rows_ok = (1..=self.outer.len()).all(|r| self.outer.part(r) > self.inner.part(r));
        let (oc, ic) = (self.outer.conjugate(), self.inner.conjugate());
        let cols_ok = (1..=oc.len()).all(|c| oc.part(c) > ic.part(c));
        rows_ok && cols_ok
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.is_empty() {
            write!(f, "{}", self.outer)
        } else {
            write!(f, "{}/{}", self.outer, self.inner)
        }
    }
}

impl fmt::Debug for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for SkewShape {
    type Err = Error;

    /// `outer/inner`, e.g. `4,3,2,1/2,2`, or a plain partition.
    fn from_str(s: &str) -> Result<Self> {
        match s.split_once('/') {
            Some((o, i)) => SkewShape::new(o.parse()?, i.parse()?),
            None => Ok(SkewShape::straight(s.parse()?)),
        }
    }
}

/// A filling of a skew shape; `rows[r]` lists the entries of row `r + 1`
/// from left to right.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Tableau {
    pub shape: SkewShape,
    pub rows: Vec<Vec<usize>>,
}

impl Tableau {
    /// Builds a straight tableau from its rows.
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(|r| r.len()).collect())?;
        Ok(Tableau {
            shape: SkewShape::straight(shape),
            rows,
        })
    }

    pub fn entry(&self, r: usize, c: usize) -> Option<usize> {
        if !self.shape.contains_cell(r, c) {
            return None;
        }
        Some(self.rows[r - 1][c - self.shape.inner.part(r) - 1])
    }

    fn cell_entries(&self) -> Vec<((usize, usize), usize)> {
        self.shape
            .cells()
            .into_iter()
            .map(|(r, c)| ((r, c), self.entry(r, c).expect("cell")))
            .collect()
    }

    /// Rows weakly increase and columns strictly increase.
    pub fn is_semistandard(&self) -> bool {
        self.cell_entries().into_iter().all(|((r, c), v)| {
            self.entry(r, c + 1).is_none_or(|x| v <= x) && self.entry(r + 1, c).is_none_or(|x| v < x)
        })
    }

    /// Semistandard with entries exactly `1..=n`.
    pub fn is_standard(&self) -> bool {
        let mut entries: Vec<usize> = self.rows.iter().flatten().copied().collect();
        entries.sort_unstable();
        entries.iter().enumerate().all(|(i, &v)| v == i + 1) && self.is_semistandard()
    }

    /// Rows from bottom to top, each left to right.
    pub fn row_word(&self) -> Vec<usize> {
        self.rows.iter().rev().flatten().copied().collect()
    }

    /// Columns from left to right, each bottom to top.
    pub fn column_word(&self) -> Vec<usize> {
        let width = self.shape.outer.part(1);
        let mut word = Vec::with_capacity(self.shape.size());
        for c in 1..=width {
            for r in (1..=self.shape.rows()).rev() {
                if let Some(v) = self.entry(r, c) {
                    word.push(v);
                }
            }
        }
        word
    }

    /// Cells read by diagonals of increasing content `col - row`, entries
    /// within a diagonal in increasing order.
    pub fn diagonal_word(&self) -> Vec<usize> {
        let mut cells = self.cell_entries();
        cells.sort_by_key(|&((r, c), v)| (c as isize - r as isize, v));
        cells.into_iter().map(|(_, v)| v).collect()
    }

    /// Same as [`Tableau::diagonal_word`] with the diagonals kept apart.
    pub fn diagonals(&self) -> Vec<Vec<usize>> {
        let mut by_content: BTreeMap<isize, Vec<usize>> = BTreeMap::new();
        for ((r, c), v) in self.cell_entries() {
            by_content.entry(c as isize - r as isize).or_default().push(v);
        }
        by_content
            .into_values()
            .map(|mut d| {
                d.sort_unstable();
                d
            })
            .collect()
    }

    /// Fixed-width text rendering; cells of the inner shape print as `.`.
    pub fn render(&self) -> String {
        let width = self.rows.iter().flatten().map(|v| v.to_string().len()).max().unwrap_or(1);
        let mut out = String::new();
        for r in 1..=self.shape.rows() {
            let mut cells = Vec::new();
            for _ in 0..self.shape.inner.part(r) {
                cells.push(format!("{:>width$}", "."));
            }
            for &v in &self.rows[r - 1] {
                cells.push(format!("{v:>width$}"));
            }
            out.push_str(&cells.join(" "));
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.rows)
    }
}

/// Standard tableaux of a skew shape, built by removing outer corners.
pub fn standard_tableaux(shape: &SkewShape) -> Vec<Tableau> {
    fn rec(outer: &mut Vec<usize>, inner: &Partition, n: usize, fill: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        if n == 0 {
            out.push(fill.clone());
            return;
        }
        for r in 0..outer.len() {
            let len = outer[r];
            let below = outer.get(r + 1).copied().unwrap_or(0);
            if len > inner.part(r + 1) && len > below {
                let c = len - inner.part(r + 1) - 1;
                fill[r][c] = n;
                outer[r] -= 1;
                rec(outer, inner, n - 1, fill, out);
                outer[r] += 1;
            }
        }
    }
    let mut outer = shape.outer.parts().to_vec();
    let mut fill: Vec<Vec<usize>> = (1..=shape.rows())
        .map(|r| vec![0; shape.outer.part(r) - shape.inner.part(r)])
        .collect();
    let mut raw = Vec::new();
    rec(&mut outer, &shape.inner, shape.size(), &mut fill, &mut raw);
    raw.into_iter()
        .map(|rows| Tableau {
            shape: shape.clone(),
            rows,
        })
        .collect()
}

/// Row insertion. Returns the insertion tableau `P` and the standard
/// recording tableau `Q`.
pub fn schensted(word: &[usize]) -> (Tableau, Tableau) {
    let mut p: Vec<Vec<usize>> = Vec::new();
    let mut q: Vec<Vec<usize>> = Vec::new();
    for (step, &x) in word.iter().enumerate() {
        let mut x = x;
        let mut r = 0;
        loop {
            if r == p.len() {
                p.push(vec![x]);
                q.push(vec![step + 1]);
                break;
            }
            match p[r].iter().position(|&y| y > x) {
                Some(i) => {
                    std::mem::swap(&mut p[r][i], &mut x);
                    r += 1;
                }
                None => {
                    p[r].push(x);
                    q[r].push(step + 1);
                    break;
                }
            }
        }
    }
    (
        Tableau::from_rows(p).expect("insertion shape"),
        Tableau::from_rows(q).expect("recording shape"),
    )
}

/// Words with the same insertion tableau.
pub fn knuth_equivalent(a: &[usize], b: &[usize]) -> bool {
    schensted(a).0 == schensted(b).0
}

/// `c^λ_{μν}` as the Schubert structure constant
/// `c^{v(λ,k)}_{v(μ,k), v(ν,k)}` with `k = ℓ(λ)`.
pub fn lrc_classical(mu: &Partition, nu: &Partition, lambda: &Partition) -> Result<u64> {
    if mu.size() + nu.size() != lambda.size() || !lambda.contains(mu) || !lambda.contains(nu) {
        return Ok(0);
    }
    let k = lambda.len();
    let g = |p: &Partition| Permutation::grassmannian(p, k);
    let c = schubert::structure_constant(&g(mu)?, &g(nu)?, &g(lambda)?)?;
    u64::try_from(c).map_err(|_| Error::Inconsistent(format!("negative coefficient {c}")))
}

/// Number of standard tableaux of shape `θ` whose rectification is the
/// superstandard tableau of shape `ν`.
pub fn skew_lrc(theta: &SkewShape, nu: &Partition) -> u64 {
    if theta.size() != nu.size() {
        return 0;
    }
    let target = nu.superstandard();
    standard_tableaux(theta)
        .iter()
        .filter(|t| schensted(&t.column_word()).0 == target)
        .count() as u64
}

/// All nonzero `c^θ_ν`, counted as semistandard fillings of `θ` whose
/// reverse row reading word is a lattice word.
pub fn lr_vector(theta: &SkewShape) -> BTreeMap<Partition, u64> {
    // reading order: rows top to bottom, each right to left
    let cells: Vec<(usize, usize)> = (1..=theta.rows())
        .flat_map(|r| (theta.inner.part(r) + 1..=theta.outer.part(r)).rev().map(move |c| (r, c)))
        .collect();
    let mut fill: HashMap<(usize, usize), usize> = HashMap::new();
    let mut counts = vec![0usize; theta.rows() + 2];
    let mut out: BTreeMap<Partition, u64> = BTreeMap::new();
    fn rec(
        i: usize,
        cells: &[(usize, usize)],
        theta: &SkewShape,
        fill: &mut HashMap<(usize, usize), usize>,
        counts: &mut Vec<usize>,
        out: &mut BTreeMap<Partition, u64>,
    ) {
        if i == cells.len() {
            let parts: Vec<usize> = counts[1..].iter().copied().filter(|&c| c > 0).collect();
            *out.entry(Partition::new(parts).expect("lattice content")).or_default() += 1;
            return;
        }
        let (r, c) = cells[i];
        let max_right = if theta.contains_cell(r, c + 1) { fill[&(r, c + 1)] } else { usize::MAX };
        let min_above = if theta.contains_cell(r - 1, c) && r > 1 { fill[&(r - 1, c)] + 1 } else { 1 };
        let hi = max_right.min(r).min(counts.len() - 2);
        for v in min_above..=hi {
            if v > 1 && counts[v] + 1 > counts[v - 1] {
                continue;
            }
            counts[v] += 1;
            fill.insert((r, c), v);
            rec(i + 1, cells, theta, fill, counts, out);
            fill.remove(&(r, c));
            counts[v] -= 1;
        }
    }
    rec(0, &cells, theta, &mut fill, &mut counts, &mut out);
    out
}
