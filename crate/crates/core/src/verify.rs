//! Exhaustive and sampled checks of the main identities, the skew
//! permutation census and the search for exceptional permutations.
//!
//! Every check returns a [`VerificationReport`]. A computation error inside
//! a case is recorded as a failure of that case, never propagated.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::fmt;
use std::str::FromStr;
use std::sync::{Mutex, OnceLock};

use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::orders::{self, LabeledInterval};
use crate::par::{self, Execution};
use crate::perm::Permutation;
use crate::polyring::Coeff;
use crate::schubert;
use crate::tableaux::{self, Partition, SkewShape};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub inputs: String,
    pub expected: String,
    pub actual: String,
    /// Total degree of the permutations involved, used to rank counterexamples.
    pub size: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub name: String,
    pub statement: String,
    pub universe: String,
    pub cases: u64,
    pub failures: Vec<Failure>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

impl VerificationReport {
    fn new(name: &str, statement: &str, universe: String) -> Self {
        VerificationReport {
            name: name.to_string(),
            statement: statement.to_string(),
            universe,
            cases: 0,
            failures: Vec::new(),
            seed: None,
        }
    }

    fn absorb(&mut self, outcomes: Vec<Vec<Failure>>) {
        self.cases += outcomes.len() as u64;
        self.failures.extend(outcomes.into_iter().flatten());
        self.failures.sort_by(|a, b| (a.size, &a.inputs).cmp(&(b.size, &b.inputs)));
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// The failure with the smallest permutations.
    pub fn minimal_counterexample(&self) -> Option<&Failure> {
        self.failures.first()
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "[{status}] {}: {} ({}; {} cases", self.name, self.statement, self.universe, self.cases)?;
        if let Some(seed) = self.seed {
            write!(f, "; seed {seed}")?;
        }
        write!(f, ")")?;
        if let Some(x) = self.minimal_counterexample() {
            write!(
                f,
                "\n  {} failures; smallest: {}: expected {}, got {}",
                self.failures.len(),
                x.inputs,
                x.expected,
                x.actual
            )?;
        }
        Ok(())
    }
}

fn failure(inputs: String, size: usize, expected: impl fmt::Display, actual: impl fmt::Display) -> Failure {
    Failure {
        inputs,
        expected: expected.to_string(),
        actual: actual.to_string(),
        size,
    }
}

fn check_eq<T: PartialEq + fmt::Debug>(out: &mut Vec<Failure>, inputs: impl FnOnce() -> String, size: usize, expected: T, actual: T) {
    if expected != actual {
        out.push(failure(inputs(), size, format!("{expected:?}"), format!("{actual:?}")));
    }
}

fn record_err(out: &mut Vec<Failure>, inputs: String, size: usize, result: Result<()>) {
    if let Err(e) = result {
        out.push(failure(inputs, size, "no error", e));
    }
}

/// The checks runnable by name.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Check {
    A,
    B,
    C,
    D,
    Sym,
    Chains,
    Prop,
    Subst,
    All,
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.to_ascii_lowercase().as_str() {
            "a" => Check::A,
            "b" => Check::B,
            "c" => Check::C,
            "d" => Check::D,
            "sym" => Check::Sym,
            "chains" => Check::Chains,
            "prop" => Check::Prop,
            "subst" => Check::Subst,
            "all" => Check::All,
            _ => return Err(Error::Parse(format!("unknown check {s:?}"))),
        })
    }
}

/// Runs `check` on `S_n`.
pub fn run(check: Check, n: usize, seed: u64, mode: Execution) -> Vec<VerificationReport> {
    let one = |c: Check| -> Vec<VerificationReport> {
        match c {
            Check::A => vec![theorem_a(n, mode)],
            Check::B => vec![theorem_b(100, n, seed, mode)],
            Check::C => vec![theorem_c(n, mode)],
            Check::D => vec![theorem_d(n, mode)],
            Check::Sym => vec![symmetries(n, mode)],
            Check::Chains => vec![theorem_chains(n, mode)],
            Check::Prop => (1..n.max(2)).map(|k| prop_chains(n, k, mode)).collect(),
            Check::Subst => vec![
                substitution(n, &[1, 2], mode),
                substitution(n, &[1, 3, 5, 7, 9, 11], mode),
                substitution_products(n.min(3), &[1, 3, 5, 7, 9, 11], mode),
            ],
            Check::All => unreachable!(),
        }
    };
    match check {
        Check::All => [
            Check::A,
            Check::B,
            Check::C,
            Check::D,
            Check::Sym,
            Check::Chains,
            Check::Prop,
            Check::Subst,
        ]
        .into_iter()
        .flat_map(one)
        .collect(),
        c => one(c),
    }
}

fn lr_vector(zeta: &Permutation) -> Result<BTreeMap<Partition, Coeff>> {
    schubert::lr_vector_perm(zeta).map(|v| (*v).clone())
}

/// `c^ν_{λμ}` by the tableau rule, memoised.
fn classical_lr(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<Coeff> {
    type Memo = Mutex<HashMap<(Partition, Partition), BTreeMap<Partition, u64>>>;
    static MEMO: OnceLock<Memo> = OnceLock::new();
    if !nu.contains(lambda) || !nu.contains(mu) || nu.size() != lambda.size() + mu.size() {
        return Ok(0);
    }
    let memo = MEMO.get_or_init(Default::default);
    let key = (nu.clone(), lambda.clone());
    if let Some(v) = memo.lock().expect("memo lock").get(&key) {
        return Ok(v.get(mu).copied().unwrap_or(0) as Coeff);
    }
    let v = tableaux::lr_vector(&SkewShape::new(nu.clone(), lambda.clone())?);
    let c = v.get(mu).copied().unwrap_or(0) as Coeff;
    memo.lock().expect("memo lock").insert(key, v);
    Ok(c)
}

/// Distributes `c^{ρ}` and `c^{σ}` over a product: `Σ c^ν_{λμ} a_λ b_μ`.
pub fn lr_convolve(a: &BTreeMap<Partition, Coeff>, b: &BTreeMap<Partition, Coeff>) -> Result<BTreeMap<Partition, Coeff>> {
    let mut out = BTreeMap::new();
    for (lambda, &x) in a {
        for (mu, &y) in b {
            for nu in Partition::all_of_size(lambda.size() + mu.size()) {
                let c = classical_lr(lambda, mu, &nu)?;
                if c != 0 {
                    *out.entry(nu).or_insert(0) += c * x * y;
                }
            }
        }
    }
    out.retain(|_, c| *c != 0);
    Ok(out)
}

fn nonempty_subsets(n: usize) -> Vec<Vec<usize>> {
    (1..=n).flat_map(|r| (1..=n).combinations(r)).collect()
}

/// Part (i)(a): `ε_{p,u(p)}` maps `[u/_p, w/_p]` onto `[u, w]`; part (i)(b):
/// `c^w_{u,v} = Σ_{y ∈ A_p(v)} c^{w/_p}_{u/_p, y}`; part (ii):
/// `Ψ_p 𝔖_v = Σ_{y ∈ A_p(v)} 𝔖_y`.
pub fn theorem_a(n: usize, mode: Execution) -> VerificationReport {
    let mut report = VerificationReport::new(
        "theorem-A",
        "deleting a common fixed point: interval isomorphism, coefficient recursion, Ψ_p by chains",
        format!("u, w ∈ S_{n} with u(p) = w(p) and equal length drop; Ψ_p on S_{n}"),
    );
    let perms = Permutation::all(n);
    let mut triples = Vec::new();
    for u in &perms {
        for w in &perms {
            for p in 1..=n {
                if u.apply(p) == w.apply(p) && u.length() <= w.length() {
                    triples.push((u.clone(), w.clone(), p));
                }
            }
        }
    }
    let outcomes = par::map(mode, &triples, |(u, w, p)| {
        let mut out = Vec::new();
        let inputs = || format!("u = {u}, w = {w}, p = {p}");
        let size = 2 * n;
        let result = (|| -> Result<()> {
            let (up, wp) = (u.delete(*p)?, w.delete(*p)?);
            if w.length() - u.length() != wp.length().wrapping_sub(up.length()) || wp.length() < up.length() {
                return Ok(());
            }
            if orders::bruhat_leq(u, w) {
                let small = orders::interval_bruhat(&up, &wp)?;
                let big = orders::interval_bruhat(u, w)?;
                let q = u.apply(*p);
                let ok = small.is_isomorphic_via(&big, |x| x.epsilon(*p, q).expect("insertion"), false);
                check_eq(&mut out, || format!("{}, interval", inputs()), size, true, ok);
            }
            for v in perms.iter().filter(|v| v.length() == w.length() - u.length()) {
                let lhs = schubert::structure_constant(u, v, w)?;
                let mut rhs = 0;
                for y in schubert::a_p_set(v, *p)? {
                    rhs += schubert::structure_constant(&up, &y, &wp)?;
                }
                check_eq(&mut out, || format!("{}, v = {v}", inputs()), size + n, lhs, rhs);
            }
            Ok(())
        })();
        record_err(&mut out, inputs(), size, result);
        out
    });
    report.absorb(outcomes);
    let pairs: Vec<(Permutation, usize)> = perms.iter().cartesian_product(1..=n + 1).map(|(v, p)| (v.clone(), p)).collect();
    let outcomes = par::map(mode, &pairs, |(v, p)| {
        let mut out = Vec::new();
        record_err(&mut out, format!("Ψ_{p} 𝔖_{v}"), n, schubert::psi_p(v, *p).map(|_| ()));
        out
    });
    report.absorb(outcomes);
    report
}

/// Draws a shape-equivalent pair `ζ, η = φ_Q(ζ|_P)` in `S_n` with `k, l` and
/// witnesses `u ≤_k ζu`, `x ≤_l ηx`.
fn sample_b<R: Rng>(n: usize, rng: &mut R) -> (Permutation, Permutation, usize, usize, Permutation, Permutation) {
    loop {
        let zeta = Permutation::random(n, rng);
        if zeta.is_identity() {
            continue;
        }
        let support = zeta.support();
        let xi = zeta.restrict(&support).expect("support is a union of cycles");
        let mut q: Vec<usize> = (1..=n).collect::<Vec<_>>().choose_multiple(rng, support.len()).copied().collect();
        q.sort_unstable();
        let eta = xi.phi(&q).expect("increasing set");
        let ups = zeta.cycle_stats().up.len();
        let k = rng.gen_range(ups..n.max(ups + 1));
        let l = rng.gen_range(ups..n.max(ups + 1));
        let pick = |z: &Permutation, k: usize, rng: &mut R| -> Permutation {
            let cands: Vec<Permutation> = Permutation::all(n)
                .into_iter()
                .filter(|u| orders::k_bruhat_leq(u, &z.compose(u), k))
                .collect();
            cands
                .choose(rng)
                .cloned()
                .unwrap_or_else(|| schubert::canonical_u_for(z, k).expect("k ≥ |up|"))
        };
        let u = pick(&zeta, k, rng);
        let x = pick(&eta, l, rng);
        return (zeta, eta, k, l, u, x);
    }
}

/// For shape-equivalent `wu^{-1}` and `zx^{-1}`: `[u,w]_k ≅ [x,z]_l` and
/// `c^w_{u,v(λ,k)} = c^z_{x,v(λ,l)}` for all `λ`.
pub fn theorem_b(samples: usize, n: usize, seed: u64, mode: Execution) -> VerificationReport {
    let mut report = VerificationReport::new(
        "theorem-B",
        "shape-equivalent intervals are isomorphic and carry the same coefficients",
        format!("{samples} random shape-equivalent pairs in S_{n}"),
    );
    report.seed = Some(seed);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cases: Vec<_> = (0..samples).map(|_| sample_b(n, &mut rng)).collect();
    let outcomes = par::map(mode, &cases, |(zeta, eta, k, l, u, x)| {
        let mut out = Vec::new();
        let inputs = || format!("ζ = {zeta}, η = {eta}, u = {u}, k = {k}, x = {x}, l = {l}");
        let size = zeta.degree() + eta.degree();
        let result = (|| -> Result<()> {
            let (w, z) = (zeta.compose(u), eta.compose(x));
            let a = orders::interval_k(u, &w, *k)?;
            let b = orders::interval_k(x, &z, *l)?;
            let (p, q) = (zeta.support(), eta.support());
            let uinv = u.inverse();
            let map = |v: &Permutation| -> Permutation {
                v.compose(&uinv)
                    .restrict(&p)
                    .and_then(|t| t.phi(&q))
                    .map(|t| t.compose(x))
                    .unwrap_or_else(|_| Permutation::identity())
            };
            check_eq(&mut out, || format!("{}, interval", inputs()), size, true, a.is_isomorphic_via(&b, map, false));
            let m = zeta.rank_abs().max(0) as usize;
            for lambda in Partition::all_of_size(m) {
                let c1 = coefficient_or_zero(u, &w, &lambda, *k)?;
                let c2 = coefficient_or_zero(x, &z, &lambda, *l)?;
                check_eq(&mut out, || format!("{}, λ = {lambda}", inputs()), size, c1, c2);
            }
            Ok(())
        })();
        record_err(&mut out, inputs(), size, result);
        out
    });
    report.absorb(outcomes);
    report
}

/// `c^w_{u,v(λ,k)}`, zero when `λ` has more than `k` parts.
fn coefficient_or_zero(u: &Permutation, w: &Permutation, lambda: &Partition, k: usize) -> Result<Coeff> {
    if lambda.len() > k {
        return Ok(0);
    }
    schubert::structure_constant(u, &Permutation::grassmannian(lambda, k)?, w)
}

/// Whether `(ξ, χ) ↦ ξχ` is an isomorphism `A × B → C` of graded posets.
pub fn is_product_isomorphism(a: &LabeledInterval, b: &LabeledInterval, c: &LabeledInterval) -> bool {
    if c.len() != a.len() * b.len() || c.covers.len() != a.covers.len() * b.len() + a.len() * b.covers.len() {
        return false;
    }
    let idx = |i: usize, j: usize| c.index_of(&a.vertices[i].compose(&b.vertices[j]));
    let mut image = vec![vec![0usize; b.len()]; a.len()];
    let mut hit = vec![false; c.len()];
    for i in 0..a.len() {
        for j in 0..b.len() {
            match idx(i, j) {
                Some(t) if !hit[t] && c.rank[t] == a.rank[i] + b.rank[j] => {
                    hit[t] = true;
                    image[i][j] = t;
                }
                _ => return false,
            }
        }
    }
    let covers: HashSet<(usize, usize)> = c.covers.iter().map(|e| (e.from, e.to)).collect();
    let via_a = a.covers.iter().all(|e| (0..b.len()).all(|j| covers.contains(&(image[e.from][j], image[e.to][j]))));
    let via_b = b.covers.iter().all(|e| (0..a.len()).all(|i| covers.contains(&(image[i][e.from], image[i][e.to]))));
    via_a && via_b
}

/// All unordered disjoint pairs of non-identity permutations of `S_n`.
pub fn disjoint_pairs(n: usize) -> Vec<(Permutation, Permutation)> {
    let perms: Vec<Permutation> = Permutation::all(n).into_iter().filter(|p| !p.is_identity()).collect();
    let mut out = Vec::new();
    for (i, z) in perms.iter().enumerate() {
        for e in &perms[i + 1..] {
            if z.is_disjoint(e) {
                out.push((z.clone(), e.clone()));
            }
        }
    }
    out
}

/// For disjoint `ζ, η`: `[e,ζ]_⪯ × [e,η]_⪯ ≅ [e,ζη]_⪯` and
/// `c^{ζη}_ν = Σ c^ν_{λμ} c^ζ_λ c^η_μ`.
pub fn theorem_c(n: usize, mode: Execution) -> VerificationReport {
    let mut report = VerificationReport::new(
        "theorem-C",
        "disjoint products: product of intervals and convolution of coefficients",
        format!("disjoint pairs in S_{n}"),
    );
    let pairs = disjoint_pairs(n);
    let outcomes = par::map(mode, &pairs, |(zeta, eta)| {
        let mut out = Vec::new();
        let inputs = || format!("ζ = {}, η = {}", zeta.cycle_string(), eta.cycle_string());
        let result = (|| -> Result<()> {
            let prod = zeta.compose(eta);
            let (a, b, c) = (
                orders::interval_preceq(zeta)?,
                orders::interval_preceq(eta)?,
                orders::interval_preceq(&prod)?,
            );
            check_eq(&mut out, || format!("{}, interval", inputs()), n, true, is_product_isomorphism(&a, &b, &c));
            let expected = lr_convolve(&lr_vector(zeta)?, &lr_vector(eta)?)?;
            check_eq(&mut out, inputs, n, expected, lr_vector(&prod)?);
            Ok(())
        })();
        record_err(&mut out, inputs(), n, result);
        out
    });
    report.absorb(outcomes);
    report
}

/// `c^ζ_λ = c^η_λ` for `η = ζ^{(1 2 … n)}`, and `[e,ζ]_⪯`, `[e,η]_⪯` have
/// equally many maximal chains.
pub fn theorem_d(n: usize, mode: Execution) -> VerificationReport {
    let mut report = VerificationReport::new(
        "theorem-D",
        "cyclic shift preserves coefficients and chain counts",
        format!("all ζ ∈ S_{n}"),
    );
    let perms = Permutation::all(n);
    let outcomes = par::map(mode, &perms, |zeta| {
        let mut out = Vec::new();
        let result = (|| -> Result<()> {
            let eta = zeta.cyclic_shift(n)?;
            let inputs = || format!("ζ = {zeta}, η = {eta}");
            check_eq(&mut out, inputs, n, lr_vector(zeta)?, lr_vector(&eta)?);
            let (a, b) = (orders::interval_preceq(zeta)?, orders::interval_preceq(&eta)?);
            check_eq(
                &mut out,
                || format!("ζ = {zeta}, η = {eta}, chains"),
                n,
                a.count_maximal_chains(),
                b.count_maximal_chains(),
            );
            Ok(())
        })();
        record_err(&mut out, format!("ζ = {zeta}"), n, result);
        out
    });
    report.absorb(outcomes);
    report
}

fn transpose_keys(v: &BTreeMap<Partition, Coeff>) -> BTreeMap<Partition, Coeff> {
    v.iter().map(|(l, &c)| (l.conjugate(), c)).collect()
}

/// `c^ζ_λ = c^{ζ^{-1}}_{λ^t} = c^{ζ̄}_{λ^t} = c^{ζ^{(1 2 … n)}}_λ`.
pub fn symmetries(n: usize, mode: Execution) -> VerificationReport {
    let mut report = VerificationReport::new(
        "symmetries",
        "inverse and bar transpose λ, cyclic shift fixes it",
        format!("all ζ ∈ S_{n}"),
    );
    let perms = Permutation::all(n);
    let outcomes = par::map(mode, &perms, |zeta| {
        let mut out = Vec::new();
        let result = (|| -> Result<()> {
            let base = lr_vector(zeta)?;
            let inv = zeta.inverse();
            let bar = zeta.bar(n)?;
            let cyc = zeta.cyclic_shift(n)?;
            check_eq(&mut out, || format!("ζ = {zeta}, inverse {inv}"), n, base.clone(), transpose_keys(&lr_vector(&inv)?));
            check_eq(&mut out, || format!("ζ = {zeta}, bar {bar}"), n, base.clone(), transpose_keys(&lr_vector(&bar)?));
            check_eq(&mut out, || format!("ζ = {zeta}, shift {cyc}"), n, base, lr_vector(&cyc)?);
            Ok(())
        })();
        record_err(&mut out, format!("ζ = {zeta}"), n, result);
        out
    });
    report.absorb(outcomes);
    report
}

/// Maximal chains of `[u,w]_k` number `Σ_λ f^λ c^w_{u,v(λ,k)}`.
pub fn prop_chains(n: usize, k: usize, mode: Execution) -> VerificationReport {
    let mut report = VerificationReport::new(
        "prop-chains",
        "chains in [u,w]_k are counted by Σ f^λ c^w_{u,v(λ,k)}",
        format!("all u ≤_{k} w in S_{n}"),
    );
    let perms = Permutation::all(n);
    let pairs: Vec<(Permutation, Permutation)> = perms
        .iter()
        .cartesian_product(&perms)
        .filter(|(u, w)| orders::k_bruhat_leq(u, w, k))
        .map(|(u, w)| (u.clone(), w.clone()))
        .collect();
    let outcomes = par::map(mode, &pairs, |(u, w)| {
        let mut out = Vec::new();
        let inputs = || format!("u = {u}, w = {w}, k = {k}");
        let result = (|| -> Result<()> {
            let chains = orders::interval_k(u, w, k)?.count_maximal_chains() as Coeff;
            let mut sum: Coeff = 0;
            for lambda in Partition::all_of_size(w.length() - u.length()) {
                sum += lambda.f_lambda() as Coeff * coefficient_or_zero(u, w, &lambda, k)?;
            }
            check_eq(&mut out, inputs, 2 * n, chains, sum);
            Ok(())
        })();
        record_err(&mut out, inputs(), 2 * n, result);
        out
    });
    report.absorb(outcomes);
    report
}

/// `f^w_u(P) = Σ_v c^w_{u,v} f^v_e(P)` for one instance; returns the report
/// and both sides.
pub fn theorem_chains_instance(u: &Permutation, w: &Permutation, colours: &[usize]) -> (VerificationReport, u128, u128) {
    let mut report = VerificationReport::new(
        "theorem-chains",
        "coloured chains from u to w equal Σ_v c^w_{u,v} f^v_e",
        format!("u = {u}, w = {w}, I = {colours:?}"),
    );
    let mut out = Vec::new();
    let mut sides = (0, 0);
    let result = (|| -> Result<()> {
        let (lhs, rhs) = coloured_sides(u, w, colours)?;
        sides = (lhs, rhs);
        check_eq(&mut out, || format!("u = {u}, w = {w}, I = {colours:?}"), u.degree() + w.degree(), lhs, rhs);
        Ok(())
    })();
    record_err(&mut out, format!("u = {u}, w = {w}"), u.degree() + w.degree(), result);
    report.absorb(vec![out]);
    (report, sides.0, sides.1)
}

fn coloured_sides(u: &Permutation, w: &Permutation, colours: &[usize]) -> Result<(u128, u128)> {
    let lhs = orders::coloured_chain_count(u, w, colours)?;
    let n = w.degree().max(u.degree());
    let d = w.length() - u.length();
    let e = Permutation::identity();
    let mut rhs: u128 = 0;
    for v in Permutation::all(n).into_iter().filter(|v| v.length() == d && orders::bruhat_leq(v, w)) {
        let c = schubert::structure_constant(u, &v, w)?;
        if c != 0 {
            let f = orders::coloured_chain_count(&e, &v, colours)?;
            rhs += u128::try_from(c).map_err(|_| Error::Inconsistent(format!("negative c^{w}_{{{u},{v}}}")))? * f;
        }
    }
    Ok((lhs, rhs))
}

/// [`theorem_chains_instance`] for all `u ≤ w` in `S_n` and all nonempty
/// colour sets `I ⊆ [n-1]`.
pub fn theorem_chains(n: usize, mode: Execution) -> VerificationReport {
    let mut report = VerificationReport::new(
        "theorem-chains",
        "coloured chains from u to w equal Σ_v c^w_{u,v} f^v_e",
        format!("all u ≤ w in S_{n}, all nonempty I ⊆ [{}]", n.saturating_sub(1)),
    );
    let perms = Permutation::all(n);
    let colour_sets = nonempty_subsets(n.saturating_sub(1));
    let pairs: Vec<(Permutation, Permutation)> = perms
        .iter()
        .cartesian_product(&perms)
        .filter(|(u, w)| orders::bruhat_leq(u, w))
        .map(|(u, w)| (u.clone(), w.clone()))
        .collect();
    let outcomes = par::map(mode, &pairs, |(u, w)| {
        let mut out = Vec::new();
        for colours in &colour_sets {
            let inputs = || format!("u = {u}, w = {w}, I = {colours:?}");
            match coloured_sides(u, w, colours) {
                Ok((lhs, rhs)) => check_eq(&mut out, inputs, 2 * n, lhs, rhs),
                Err(e) => out.push(failure(inputs(), 2 * n, "no error", e)),
            }
        }
        out
    });
    report.absorb(outcomes);
    report
}

/// `Ψ_P 𝔖_w` by substitution against `c^{(u×v)π}_{π,w}` for the explicit
/// `π ∈ I_P` from [`schubert::i_p_element`].
pub fn substitution(n: usize, p_set: &[usize], mode: Execution) -> VerificationReport {
    let mut report = VerificationReport::new(
        "substitution",
        "coefficients of Ψ_P 𝔖_w are structure constants c^{(u×v)π}_{π,w}",
        format!("all w ∈ S_{n}, P = {p_set:?}"),
    );
    let perms = Permutation::all(n);
    let outcomes = par::map(mode, &perms, |w| {
        let mut out = Vec::new();
        let result = (|| -> Result<()> {
            let expansion = schubert::psi_p_set_expand(w, p_set)?;
            let (l, d, r) = substitution_parameters(w);
            for ((u, v), &c) in &expansion.terms {
                let via_pi = schubert::substitution_constant(u, v, w, p_set, l, d, &r)?;
                check_eq(&mut out, || format!("w = {w}, u = {u}, v = {v}"), n, c, via_pi);
            }
            Ok(())
        })();
        record_err(&mut out, format!("w = {w}"), n, result);
        out
    });
    report.absorb(outcomes);
    report
}

/// Ψ_P applied to `𝔖_w 𝔖_γ = Σ_ζ c^ζ_{w,γ} 𝔖_ζ`: the coefficient of
/// `𝔖_η(y) 𝔖_ξ(z)` is `Σ_ζ d^{ηξ}_ζ c^ζ_{wγ}` on one side and
/// `Σ d^{uv}_w d^{αβ}_γ c^η_{uα} c^ξ_{vβ}` on the other.
pub fn substitution_products(n: usize, p_set: &[usize], mode: Execution) -> VerificationReport {
    let mut report = VerificationReport::new(
        "substitution-products",
        "Ψ_P is multiplicative on Schubert expansions",
        format!("all w, γ ∈ S_{n}, P = {p_set:?}"),
    );
    let perms = Permutation::all(n);
    let pairs: Vec<(Permutation, Permutation)> = perms.iter().cartesian_product(&perms).map(|(a, b)| (a.clone(), b.clone())).collect();
    type Terms = BTreeMap<(Permutation, Permutation), Coeff>;
    let add = |m: &mut Terms, key: (Permutation, Permutation), c: Coeff| {
        let e = m.entry(key).or_default();
        *e += c;
    };
    let outcomes = par::map(mode, &pairs, |(w, g)| {
        let mut out = Vec::new();
        let result = (|| -> Result<()> {
            let mut lhs = Terms::new();
            for (zeta, &c) in &schubert::product_expansion(w, g)?.terms {
                for (key, &d) in &schubert::psi_p_set_expand(zeta, p_set)?.terms {
                    add(&mut lhs, key.clone(), c * d);
                }
            }
            let mut rhs = Terms::new();
            let (dw, dg) = (schubert::psi_p_set_expand(w, p_set)?, schubert::psi_p_set_expand(g, p_set)?);
            for ((u, v), &d1) in &dw.terms {
                for ((a, b), &d2) in &dg.terms {
                    let (ys, zs) = (schubert::product_expansion(u, a)?, schubert::product_expansion(v, b)?);
                    for (eta, &c1) in &ys.terms {
                        for (xi, &c2) in &zs.terms {
                            add(&mut rhs, (eta.clone(), xi.clone()), d1 * d2 * c1 * c2);
                        }
                    }
                }
            }
            lhs.retain(|_, c| *c != 0);
            rhs.retain(|_, c| *c != 0);
            check_eq(&mut out, || format!("w = {w}, γ = {g}"), n, lhs, rhs);
            Ok(())
        })();
        record_err(&mut out, format!("w = {w}, γ = {g}"), n, result);
        out
    });
    report.absorb(outcomes);
    report
}

/// `l = d` past both the largest exponent of `𝔖_w` and its last descent,
/// and `R = {d+1, …, d+l}`.
pub fn substitution_parameters(w: &Permutation) -> (usize, usize, Vec<usize>) {
    let f = schubert::schubert_poly(w);
    let l = (f.max_var_degree() + 1).max(w.last_descent().unwrap_or(0) + 1).max(1);
    let r: Vec<usize> = (l + 1..=2 * l).collect();
    (l, l, r)
}

/// `c^ζ_ν = c^θ_ν` for all `ν`, and `[e,ζ]_⪯` has as many maximal chains
/// as `θ` has standard tableaux.
pub fn skew_permutation(zeta: &Permutation, theta: &SkewShape) -> VerificationReport {
    let mut report = VerificationReport::new(
        "skew-permutation",
        "a skew permutation has the coefficients and chain count of its shape",
        format!("ζ = {}, θ = {theta}", zeta.cycle_string()),
    );
    let mut out = Vec::new();
    let result = (|| -> Result<()> {
        let expected: BTreeMap<Partition, Coeff> =
            tableaux::lr_vector(theta).into_iter().map(|(l, c)| (l, c as Coeff)).collect();
        check_eq(&mut out, || format!("ζ = {zeta}, coefficients"), zeta.degree(), expected, lr_vector(zeta)?);
        let chains = orders::interval_preceq(zeta)?.count_maximal_chains();
        let syt = tableaux::standard_tableaux(theta).len() as u128;
        check_eq(&mut out, || format!("ζ = {zeta}, chains"), zeta.degree(), syt, chains);
        Ok(())
    })();
    record_err(&mut out, format!("ζ = {zeta}"), zeta.degree(), result);
    report.absorb(vec![out]);
    report
}

/// Counts of the three classes in `S_n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Census {
    pub n: usize,
    pub skew_partitions: usize,
    pub shape_equivalent: usize,
    pub skew_permutations: usize,
}

/// The permutations `v(λ,k) v(μ,k)^{-1}` lying in `S_n`, with `λ, μ` in the
/// `k × (n-k)` box.
pub fn skew_partition_perms(n: usize) -> BTreeSet<Permutation> {
    let mut out = BTreeSet::new();
    for k in 0..=n {
        let shapes = Partition::in_box(k, n - k);
        let grass: Vec<Permutation> = shapes
            .iter()
            .map(|l| Permutation::grassmannian(l, k).expect("fits the box"))
            .collect();
        for a in &grass {
            for b in &grass {
                let z = a.compose(&b.inverse());
                if z.degree() <= n {
                    out.insert(z);
                }
            }
        }
    }
    out
}

/// Whether `ζ` is shape equivalent to some `v(λ,k) v(μ,k)^{-1}`: on the
/// points moved up, and on the points moved down, `ζ` preserves order.
pub fn is_shape_equivalent_to_skew_partition(zeta: &Permutation) -> bool {
    let stats = zeta.cycle_stats();
    [&stats.up, &stats.down]
        .iter()
        .all(|set| set.windows(2).all(|w| zeta.apply(w[0]) < zeta.apply(w[1])))
}

fn shape_class(canon: &Permutation, n: usize) -> Vec<Permutation> {
    (1..=n)
        .combinations(canon.degree())
        .map(|q| canon.phi(&q).expect("increasing set"))
        .collect()
}

/// The smallest subset of `S_n` containing `seed` and closed under shape
/// equivalence, cyclic shifts `ζ ↦ ζ^{(1 … n')}` for `deg ζ ≤ n' ≤ n`, and
/// products of disjoint members.
pub fn skew_closure(seed: &BTreeSet<Permutation>, n: usize, mode: Execution) -> BTreeSet<Permutation> {
    let mut set: BTreeSet<Permutation> = BTreeSet::new();
    let mut queue: Vec<Permutation> = seed.iter().cloned().collect();
    loop {
        let mut fresh = Vec::new();
        while let Some(z) = queue.pop() {
            if !set.insert(z.clone()) {
                continue;
            }
            queue.extend(shape_class(&z.shape_canonical(), n).into_iter().filter(|y| !set.contains(y)));
            for m in z.degree().max(1)..=n {
                let s = z.cyclic_shift(m).expect("degree at most m");
                if !set.contains(&s) {
                    queue.push(s);
                }
            }
            fresh.push(z);
        }
        if fresh.is_empty() {
            return set;
        }
        let members: Vec<Permutation> = set.iter().cloned().collect();
        queue = par::flat_map(mode, &fresh, |z| {
            members
                .iter()
                .filter(|e| z.is_disjoint(e))
                .map(|e| z.compose(e))
                .filter(|p| !set.contains(p))
                .collect()
        });
    }
}

/// The skew permutations of `S_n`.
pub fn skew_permutations(n: usize, mode: Execution) -> BTreeSet<Permutation> {
    skew_closure(&skew_partition_perms(n), n, mode)
}

pub fn skew_census(n: usize, mode: Execution) -> Census {
    let col1 = skew_partition_perms(n);
    let col2 = Permutation::all(n)
        .into_iter()
        .filter(is_shape_equivalent_to_skew_partition)
        .count();
    let col3 = skew_closure(&col1, n, mode).len();
    Census {
        n,
        skew_partitions: col1.len(),
        shape_equivalent: col2,
        skew_permutations: col3,
    }
}

/// Row lengths of `θ`, sorted decreasingly, and column lengths likewise.
fn line_lengths(theta: &SkewShape) -> (Vec<usize>, Vec<usize>) {
    let mut rows: Vec<usize> = (1..=theta.rows())
        .map(|r| theta.outer.part(r) - theta.inner.part(r))
        .filter(|&x| x > 0)
        .collect();
    let (oc, ic) = (theta.outer.conjugate(), theta.inner.conjugate());
    let mut cols: Vec<usize> = (1..=oc.len()).map(|c| oc.part(c) - ic.part(c)).filter(|&x| x > 0).collect();
    rows.sort_unstable_by(|a, b| b.cmp(a));
    cols.sort_unstable_by(|a, b| b.cmp(a));
    (rows, cols)
}

/// Skew shapes `θ` with `c^θ_ν = c^ζ_ν` for every `ν`.
pub fn matching_shapes(zeta: &Permutation) -> Result<Vec<SkewShape>> {
    let target = lr_vector(zeta)?;
    let m = zeta.rank_abs().max(0) as usize;
    // the extreme ν are the sorted row lengths and the conjugate of the
    // sorted column lengths
    let (Some(lowest), Some(highest)) = (target.keys().next(), target.keys().next_back()) else {
        return Ok(Vec::new());
    };
    let (rows, cols) = (lowest.parts().to_vec(), highest.conjugate().parts().to_vec());
    Ok(SkewShape::all_of_size(m)
        .into_iter()
        .filter(|t| line_lengths(t) == (rows.clone(), cols.clone()))
        .filter(|t| {
            let v = tableaux::lr_vector(t);
            v.len() == target.len() && v.iter().all(|(l, &c)| target.get(l) == Some(&(c as Coeff)))
        })
        .collect())
}

/// The non-skew `ζ ∈ S_n` for which no skew shape has the same
/// coefficients.
pub fn exceptional_permutations(n: usize, mode: Execution) -> Result<Vec<Permutation>> {
    let skew = skew_permutations(n, mode);
    let others: Vec<Permutation> = Permutation::all(n).into_iter().filter(|z| !skew.contains(z)).collect();
    let found = par::map(mode, &others, |z| matching_shapes(z).map(|v| v.is_empty()));
    let mut out = Vec::new();
    for (z, none) in others.into_iter().zip(found) {
        if none? {
            out.push(z);
        }
    }
    Ok(out)
}

/// `c^ζ_λ` for every `ζ` given, computed in parallel.
pub fn lr_table(perms: &[Permutation], mode: Execution) -> Result<Vec<(Permutation, BTreeMap<Partition, Coeff>)>> {
    par::map(mode, perms, |z| lr_vector(z).map(|v| (z.clone(), v)))
        .into_iter()
        .collect()
}

/// Picks a random shape-equivalent copy of `ζ` inside `S_n`.
pub fn random_shape_copy<R: Rng>(zeta: &Permutation, n: usize, rng: &mut R) -> Result<Permutation> {
    let canon = zeta.shape_canonical();
    if canon.degree() > n {
        return Err(Error::arg(format!("{zeta} does not fit in S_{n}")));
    }
    let mut q: Vec<usize> = (1..=n).collect::<Vec<_>>().choose_multiple(rng, canon.degree()).copied().collect();
    q.sort_unstable();
    canon.phi(&q)
}
