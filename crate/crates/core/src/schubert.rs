//! Schubert polynomials, expansions in the Schubert basis, structure
//! constants, Pieri chains and the substitution maps `Ψ`.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use itertools::Itertools;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::orders;
use crate::perm::Permutation;
use crate::polyring::{Alphabet, Coeff, IntPolynomial, Substitution, VarImage};
use crate::tableaux::Partition;

type Cache = RwLock<HashMap<Permutation, Arc<IntPolynomial>>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `x_1^{n-1} x_2^{n-2} ⋯ x_{n-1}`.
pub fn staircase(n: usize) -> IntPolynomial {
    let exps: Vec<u8> = (1..n).rev().map(|e| e as u8).collect();
    IntPolynomial::monomial(Alphabet::X, &exps, 1)
}

/// The Schubert polynomial `𝔖_w`, memoised process-wide.
pub fn schubert_poly(w: &Permutation) -> Arc<IntPolynomial> {
    if let Some(p) = cache().read().expect("cache lock").get(w) {
        return p.clone();
    }
    // climb by ascents to the longest element, then descend with ∂_i
    let n = w.degree();
    let mut path = vec![(w.clone(), 0usize)];
    let mut cur = w.clone();
    let top = loop {
        if let Some(p) = cache().read().expect("cache lock").get(&cur) {
            break p.clone();
        }
        if cur == Permutation::longest(n) {
            break Arc::new(staircase(n));
        }
        let i = (1..n).find(|&i| cur.apply(i) < cur.apply(i + 1)).expect("ascent below w0");
        path.last_mut().expect("nonempty").1 = i;
        cur = cur.swap_positions(i, i + 1);
        path.push((cur.clone(), 0));
    };
    let mut poly = top;
    let mut computed = vec![(cur, poly.clone())];
    for (x, i) in path.into_iter().rev().skip(1) {
        poly = Arc::new(poly.divided_difference(i).expect("divided difference"));
        computed.push((x, poly.clone()));
    }
    let mut guard = cache().write().expect("cache lock");
    for (x, p) in computed {
        guard.entry(x).or_insert(p);
    }
    poly
}

/// Which ascent the uncached construction uses at each step.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AscentChoice {
    First,
    Last,
}

/// `𝔖_w` computed without the cache, starting from the longest element of
/// S_n. Different `n` and ascent choices must give the same polynomial.
pub fn schubert_poly_from(w: &Permutation, n: usize, choice: AscentChoice) -> Result<IntPolynomial> {
    if n < w.degree() {
        return Err(Error::arg(format!("{w} does not lie in S_{n}")));
    }
    let mut word = Vec::new();
    let mut cur = w.clone();
    let w0 = Permutation::longest(n);
    while cur != w0 {
        let mut ascents = (1..n).filter(|&i| cur.apply(i) < cur.apply(i + 1));
        let i = match choice {
            AscentChoice::First => ascents.next(),
            AscentChoice::Last => ascents.next_back(),
        }
        .expect("ascent below w0");
        word.push(i);
        cur = cur.swap_positions(i, i + 1);
    }
    let mut poly = staircase(n);
    for &i in word.iter().rev() {
        poly = poly.divided_difference(i)?;
    }
    Ok(poly)
}

/// The Schur polynomial `s_λ(x_1 … x_k) = 𝔖_{v(λ,k)}`.
pub fn schur_poly(lambda: &Partition, k: usize) -> Result<Arc<IntPolynomial>> {
    Ok(schubert_poly(&Permutation::grassmannian(lambda, k)?))
}

/// An integer combination of Schubert polynomials.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct SchubertExpansion {
    pub terms: BTreeMap<Permutation, Coeff>,
}

impl SchubertExpansion {
    pub fn coeff(&self, w: &Permutation) -> Coeff {
        self.terms.get(w).copied().unwrap_or(0)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|&c| c > 0)
    }

    /// Terms ordered by length, then one-line word.
    pub fn sorted(&self) -> Vec<(&Permutation, Coeff)> {
        let mut v: Vec<_> = self.terms.iter().map(|(w, &c)| (w, c)).collect();
        v.sort_by_key(|(w, _)| w.sort_key());
        v
    }

    /// Rebuilds the polynomial `Σ c_w 𝔖_w`.
    pub fn to_polynomial(&self) -> Result<IntPolynomial> {
        let mut f = IntPolynomial::zero(Alphabet::X);
        for (w, &c) in &self.terms {
            f.try_add_scaled(&schubert_poly(w), c)?;
        }
        Ok(f)
    }

    fn from_set(set: impl IntoIterator<Item = Permutation>) -> Self {
        SchubertExpansion {
            terms: set.into_iter().map(|w| (w, 1)).collect(),
        }
    }
}

impl fmt::Display for SchubertExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut parts = self.sorted().into_iter().map(|(w, c)| match c {
            1 => format!("S[{w}]"),
            -1 => format!("-S[{w}]"),
            _ => format!("{c}*S[{w}]"),
        });
        write!(f, "{}", parts.join(" + ").replace("+ -", "- "))
    }
}

impl fmt::Debug for SchubertExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for SchubertExpansion {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let sorted = self.sorted();
        let mut seq = serializer.serialize_seq(Some(sorted.len()))?;
        for (w, c) in sorted {
            seq.serialize_element(&(w.to_string(), c.to_string()))?;
        }
        seq.end()
    }
}

/// Expands `f ∈ Z[x_1, x_2, …]` in the Schubert basis by repeatedly
/// cancelling the lexicographically smallest term (`x_1` heaviest), which
/// for `𝔖_w` is `x^{code(w)}`.
pub fn expand(f: &IntPolynomial) -> Result<SchubertExpansion> {
    if f.alphabet() != Alphabet::X {
        return Err(Error::arg("expansion needs a polynomial in x"));
    }
    let mut rest = f.clone();
    let mut out = SchubertExpansion::default();
    while let Some((m, c)) = rest.trailing_lex() {
        let lead = m.clone();
        let code: Vec<usize> = lead.iter().map(|&e| e as usize).collect();
        let w = Permutation::from_lehmer_code(&code)?;
        rest.try_add_scaled(&schubert_poly(&w), c.checked_neg().ok_or(Error::Overflow)?)?;
        if rest.trailing_lex().is_some_and(|(m2, _)| *m2 <= lead) {
            return Err(Error::Inconsistent(format!("leading term {code:?} did not cancel")));
        }
        out.terms.insert(w, c);
    }
    Ok(out)
}

/// `𝔖_u 𝔖_v` in the Schubert basis.
pub fn product_expansion(u: &Permutation, v: &Permutation) -> Result<SchubertExpansion> {
    expand(&schubert_poly(u).try_mul(&schubert_poly(v))?)
}

/// Applies `∂_w = ∂_{a_1} ⋯ ∂_{a_l}` for a reduced word of `w`.
pub fn apply_divided_differences(f: &IntPolynomial, w: &Permutation) -> Result<IntPolynomial> {
    let mut f = f.clone();
    let mut cur = w.clone();
    while let Some(&i) = cur.descents().first() {
        f = f.divided_difference(i)?;
        if f.is_zero() {
            break;
        }
        cur = cur.swap_positions(i, i + 1);
    }
    Ok(f)
}

/// `c^w_{u,v}`, the coefficient of `𝔖_w` in `𝔖_u 𝔖_v`, computed as the
/// constant `∂_w(𝔖_u 𝔖_v)`.
pub fn structure_constant(u: &Permutation, v: &Permutation, w: &Permutation) -> Result<Coeff> {
    if w.length() != u.length() + v.length() || !orders::bruhat_leq(u, w) || !orders::bruhat_leq(v, w) {
        return Ok(0);
    }
    let f = schubert_poly(u).try_mul(&schubert_poly(v))?;
    apply_divided_differences(&f, w)?
        .as_constant()
        .ok_or_else(|| Error::Inconsistent(format!("∂_{w} of 𝔖_{u}𝔖_{v} is not constant")))
}

/// Monk's rule: the `w` with `𝔖_u · (x_1 + ⋯ + x_k) = Σ 𝔖_w`.
pub fn monk_multiply(u: &Permutation, k: usize) -> Vec<Permutation> {
    orders::k_covers_up(u, k).into_iter().map(|(w, _)| w).collect()
}

/// Whether consecutive labels of a Pieri chain must increase or decrease.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PieriRule {
    /// Decreasing labels; targets are the support of `𝔖_u · e_m(x_1 … x_k)`.
    Column,
    /// Increasing labels; targets are the support of `𝔖_u · h_m(x_1 … x_k)`.
    Row,
}

/// Endpoints of length-`m` chains of `k`-Bruhat covers from `u` whose
/// labels are monotone according to `rule`.
pub fn pieri_targets(u: &Permutation, k: usize, m: usize, rule: PieriRule) -> BTreeSet<Permutation> {
    fn rec(x: &Permutation, k: usize, left: usize, last: Option<usize>, rule: PieriRule, out: &mut BTreeSet<Permutation>) {
        if left == 0 {
            out.insert(x.clone());
            return;
        }
        for (y, beta) in orders::k_covers_up(x, k) {
            let ok = match (last, rule) {
                (None, _) => true,
                (Some(b), PieriRule::Column) => beta < b,
                (Some(b), PieriRule::Row) => beta > b,
            };
            if ok {
                rec(&y, k, left - 1, Some(beta), rule, out);
            }
        }
    }
    let mut out = BTreeSet::new();
    rec(u, k, m, None, rule, &mut out);
    out
}

/// Targets of the column rule, `𝔖_u · e_m(x_1 … x_k)`.
pub fn pieri_targets_c(u: &Permutation, k: usize, m: usize) -> BTreeSet<Permutation> {
    pieri_targets(u, k, m, PieriRule::Column)
}

/// Targets of the row rule, `𝔖_u · h_m(x_1 … x_k)`.
pub fn pieri_targets_r(u: &Permutation, k: usize, m: usize) -> BTreeSet<Permutation> {
    pieri_targets(u, k, m, PieriRule::Row)
}

/// `A_p(x) = {u : x →_{c, p-1, p-1} ε_{p,1}(u)}`.
pub fn a_p_set(x: &Permutation, p: usize) -> Result<BTreeSet<Permutation>> {
    if p == 0 {
        return Err(Error::arg("p starts at 1"));
    }
    pieri_targets_c(x, p - 1, p - 1)
        .into_iter()
        .filter(|w| w.apply(p) == 1)
        .map(|w| w.delete(p))
        .collect()
}

/// `x_j ↦ x_j (j < p)`, `x_p ↦ 0`, `x_j ↦ x_{j-1} (j > p)` on `x_1 … x_n`.
pub fn psi_p_substitution(p: usize, n: usize) -> Substitution {
    let images = (1..=n)
        .map(|j| match j.cmp(&p) {
            std::cmp::Ordering::Less => VarImage::Var(j),
            std::cmp::Ordering::Equal => VarImage::Zero,
            std::cmp::Ordering::Greater => VarImage::Var(j - 1),
        })
        .collect();
    Substitution {
        target: Alphabet::X,
        images,
    }
}

/// `Ψ_p 𝔖_w`, computed by substitution and checked against `A_p(w)`.
pub fn psi_p(w: &Permutation, p: usize) -> Result<SchubertExpansion> {
    let f = schubert_poly(w);
    let direct = expand(&f.substitute(&psi_p_substitution(p, f.num_vars()))?)?;
    let via_chains = SchubertExpansion::from_set(a_p_set(w, p)?);
    if direct != via_chains {
        return Err(Error::Inconsistent(format!(
            "Ψ_{p} 𝔖_{w}: substitution gives {direct}, chains give {via_chains}"
        )));
    }
    Ok(direct)
}

/// Terms `𝔖_u(y) 𝔖_v(z)` with coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TwoAlphabetExpansion {
    pub split: usize,
    pub terms: BTreeMap<(Permutation, Permutation), Coeff>,
}

impl TwoAlphabetExpansion {
    pub fn coeff(&self, u: &Permutation, v: &Permutation) -> Coeff {
        self.terms.get(&(u.clone(), v.clone())).copied().unwrap_or(0)
    }
}

impl Serialize for TwoAlphabetExpansion {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for ((u, v), c) in &self.terms {
            seq.serialize_element(&(u.to_string(), v.to_string(), c.to_string()))?;
        }
        seq.end()
    }
}

impl fmt::Display for TwoAlphabetExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by_key(|((u, w), _)| (std::cmp::Reverse(u.length()), u.one_line(0), w.sort_key()));
        let mut parts = v.into_iter().map(|((u, w), &c)| {
            let body = format!("S[{u}](y)*S[{w}](z)");
            if c == 1 {
                body
            } else {
                format!("{c}*{body}")
            }
        });
        write!(f, "{}", parts.join(" + "))
    }
}

/// `𝔖_u(y)·𝔖_v(z)` in the alphabet with `split` y-variables.
pub fn schubert_yz(u: &Permutation, v: &Permutation, split: usize) -> Result<IntPolynomial> {
    let fu = schubert_poly(u);
    let fv = schubert_poly(v);
    if fu.num_vars() > split {
        return Err(Error::arg(format!("𝔖_{u} needs more than {split} y-variables")));
    }
    let target = Alphabet::YZ { split };
    let y = fu.as_ref().clone().with_alphabet(target);
    let z = fv.substitute(&Substitution {
        target,
        images: (1..=fv.num_vars()).map(|j| VarImage::Var(split + j)).collect(),
    })?;
    y.try_mul(&z)
}

/// `Ψ_P 𝔖_w` where `x_{p_j} ↦ y_j` and `x_{q_j} ↦ z_j` for
/// `P = {p_1 < p_2 < …}` and its complement `{q_1 < q_2 < …}`. Only the
/// elements of `p_set` up to the degree of `w` matter.
pub fn psi_p_set_expand(w: &Permutation, p_set: &[usize]) -> Result<TwoAlphabetExpansion> {
    let f = schubert_poly(w);
    let n = f.num_vars();
    let in_p: Vec<bool> = (1..=n).map(|j| p_set.contains(&j)).collect();
    let split = in_p.iter().filter(|&&b| b).count();
    let (mut yi, mut zi) = (0, 0);
    let images = in_p
        .iter()
        .map(|&b| {
            if b {
                yi += 1;
                VarImage::Var(yi)
            } else {
                zi += 1;
                VarImage::Var(split + zi)
            }
        })
        .collect();
    let target = Alphabet::YZ { split };
    let mut rest = f.substitute(&Substitution { target, images })?;
    let mut out = TwoAlphabetExpansion {
        split,
        terms: BTreeMap::new(),
    };
    while let Some((m, c)) = rest.trailing_lex() {
        let lead = m.clone();
        let exps: Vec<usize> = lead.iter().map(|&e| e as usize).collect();
        let (ya, za) = exps.split_at(exps.len().min(split));
        let u = Permutation::from_lehmer_code(ya)?;
        let v = Permutation::from_lehmer_code(za)?;
        rest.try_add_scaled(&schubert_yz(&u, &v, split)?, c.checked_neg().ok_or(Error::Overflow)?)?;
        if rest.trailing_lex().is_some_and(|(m2, _)| *m2 <= lead) {
            return Err(Error::Inconsistent(format!("leading term {exps:?} did not cancel")));
        }
        out.terms.insert((u, v), c);
    }
    Ok(out)
}

/// The element `π = ε_{P̄,[n]}(e,e) ∈ S_{d+2l}` of `I_P` (for `d = l`),
/// where `P̄ = (P ∩ [d]) ∪ R`. Returns `π`, `P̄` and `n = |P̄|`.
pub fn i_p_element(p_set: &[usize], l: usize, d: usize, r: &[usize]) -> Result<(Permutation, Vec<usize>, usize)> {
    if r.len() != l || r.iter().any(|&x| x <= d || x > d + 2 * l) || r.iter().duplicates().next().is_some() {
        return Err(Error::arg(format!("R = {r:?} must be an {l}-subset of {{{}..{}}}", d + 1, d + 2 * l)));
    }
    let mut bar: Vec<usize> = p_set.iter().copied().filter(|&x| x >= 1 && x <= d).collect();
    bar.extend_from_slice(r);
    bar.sort_unstable();
    bar.dedup();
    let n = bar.len();
    let q: Vec<usize> = (1..=n).collect();
    let e = Permutation::identity();
    let pi = Permutation::epsilon_sets(&e, &e, &bar, &q, d + 2 * l)?;
    Ok((pi, bar, n))
}

/// `c^{(u×v)π}_{π,w}` for `π` from [`i_p_element`]; with `l` above the
/// largest exponent of `𝔖_w` and `d` past the last descent of `w` this is
/// the coefficient of `𝔖_u(y)𝔖_v(z)` in `Ψ_P 𝔖_w`.
pub fn substitution_constant(
    u: &Permutation,
    v: &Permutation,
    w: &Permutation,
    p_set: &[usize],
    l: usize,
    d: usize,
    r: &[usize],
) -> Result<Coeff> {
    let (pi, _, n) = i_p_element(p_set, l, d, r)?;
    if u.degree() > n || v.degree() > d + 2 * l - n {
        return Ok(0);
    }
    let top = u.cross(n, v)?.compose(&pi);
    structure_constant(&pi, w, &top)
}

/// `Ψ_A 𝔖_w` for a ballot sequence `A`: `x_i ↦ 0` if `a_i = 0` and
/// `x_i ↦ x_{a_i}` otherwise.
pub fn psi_ballot(w: &Permutation, a: &[usize]) -> Result<SchubertExpansion> {
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for &x in a {
        *counts.entry(x).or_default() += 1;
        if x > 1 && counts[&x] > counts.get(&(x - 1)).copied().unwrap_or(0) {
            return Err(Error::arg(format!("{a:?} is not a ballot sequence")));
        }
    }
    let images = a
        .iter()
        .map(|&x| if x == 0 { VarImage::Zero } else { VarImage::Var(x) })
        .collect();
    let f = schubert_poly(w).substitute(&Substitution {
        target: Alphabet::X,
        images,
    })?;
    expand(&f)
}

/// A permutation `u` with `u ≤_k ζu` and `ζu` Grassmannian with descent
/// `k`: the first `k` values are `up_ζ` and the smallest fixed points,
/// the rest their complement, each block ordered by `ζ`-image.
pub fn canonical_u_for(zeta: &Permutation, k: usize) -> Result<Permutation> {
    let stats = zeta.cycle_stats();
    if stats.up.len() > k {
        return Err(Error::domain(format!("{zeta} moves {} points up, more than k = {k}", stats.up.len())));
    }
    let n = zeta.degree() + k;
    let mut first = stats.up.clone();
    first.extend((1..=n).filter(|&x| zeta.apply(x) == x).take(k - stats.up.len()));
    let mut rest: Vec<usize> = (1..=n).filter(|x| !first.contains(x)).collect();
    first.sort_by_key(|&x| zeta.apply(x));
    rest.sort_by_key(|&x| zeta.apply(x));
    first.extend(rest);
    Permutation::from_one_line(&first)
}

/// `c^ζ_λ = c^{ζu}_{u, v(λ,k)}` with `k = |up_ζ|` and the canonical `u`.
pub fn lr_coeff_perm(zeta: &Permutation, lambda: &Partition) -> Result<Coeff> {
    let k = zeta.cycle_stats().up.len();
    lr_coeff_perm_with(zeta, lambda, k)
}

/// As [`lr_coeff_perm`] with an explicit `k ≥ |up_ζ|`.
pub fn lr_coeff_perm_with(zeta: &Permutation, lambda: &Partition, k: usize) -> Result<Coeff> {
    if lambda.size() as i64 != zeta.rank_abs() || lambda.len() > k {
        return Ok(0);
    }
    let u = canonical_u_for(zeta, k)?;
    structure_constant(&u, &Permutation::grassmannian(lambda, k)?, &zeta.compose(&u))
}

type LrCache = RwLock<HashMap<Permutation, Arc<BTreeMap<Partition, Coeff>>>>;

/// All nonzero `c^ζ_λ`, memoised process-wide.
pub fn lr_vector_perm(zeta: &Permutation) -> Result<Arc<BTreeMap<Partition, Coeff>>> {
    static CACHE: OnceLock<LrCache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(v) = cache.read().expect("cache lock").get(zeta) {
        return Ok(v.clone());
    }
    let m = zeta.rank_abs();
    if m < 0 {
        return Err(Error::Inconsistent(format!("|{zeta}| = {m}")));
    }
    let mut out = BTreeMap::new();
    for lambda in Partition::all_of_size(m as usize) {
        let c = lr_coeff_perm(zeta, &lambda)?;
        if c != 0 {
            out.insert(lambda, c);
        }
    }
    let out = Arc::new(out);
    cache.write().expect("cache lock").insert(zeta.clone(), out.clone());
    Ok(out)
}
