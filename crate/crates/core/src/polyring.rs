//! Sparse integer polynomials in `x_1, x_2, …` or in two alphabets
//! `y_1 … y_s, z_1, z_2, …`.
//!
//! Terms are keyed by trimmed exponent vectors, so the map order is the
//! lexicographic order with `x_1` heaviest. Coefficient arithmetic is
//! checked: the `try_*` methods return [`Error::Overflow`], the operators
//! panic.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::{Serialize, Serializer};
use smallvec::SmallVec;

use crate::error::{Error, Result};

pub type Coeff = i128;
pub type Monomial = SmallVec<[u8; 12]>;

/// Variable naming. In `YZ { split }` the flat indices `1..=split` are
/// `y_1 … y_split` and index `split + j` is `z_j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Alphabet {
    X,
    YZ { split: usize },
}

impl Alphabet {
    pub fn var_name(self, i: usize) -> String {
        match self {
            Alphabet::X => format!("x{i}"),
            Alphabet::YZ { split } if i <= split => format!("y{i}"),
            Alphabet::YZ { split } => format!("z{}", i - split),
        }
    }

    fn parse_var(self, name: &str) -> Result<usize> {
        let bad = || Error::Parse(format!("unknown variable {name:?}"));
        let (letter, idx) = name.split_at(1);
        let idx: usize = idx.parse().map_err(|_| bad())?;
        if idx == 0 {
            return Err(bad());
        }
        match (self, letter) {
            (Alphabet::X, "x") => Ok(idx),
            (Alphabet::YZ { split }, "y") if idx <= split => Ok(idx),
            (Alphabet::YZ { split }, "z") => Ok(split + idx),
            _ => Err(bad()),
        }
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct IntPolynomial {
    alphabet: Alphabet,
    terms: BTreeMap<Monomial, Coeff>,
}

/// Image of a variable under a substitution.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VarImage {
    Zero,
    /// Flat 1-based index in the target alphabet.
    Var(usize),
}

/// A variable substitution `x_i ↦ images[i-1]`. Variables past the end of
/// `images` are unmapped and make [`IntPolynomial::substitute`] fail.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Substitution {
    pub target: Alphabet,
    pub images: Vec<VarImage>,
}

fn trim(m: &mut Monomial) {
    while m.last() == Some(&0) {
        m.pop();
    }
}

fn add_exponents(a: &Monomial, b: &Monomial) -> Monomial {
    let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let mut m = long.clone();
    for (i, &e) in short.iter().enumerate() {
        m[i] = m[i].checked_add(e).expect("exponent overflow");
    }
    m
}

fn total_degree(m: &Monomial) -> usize {
    m.iter().map(|&e| e as usize).sum()
}

/// Graded reverse lexicographic comparison.
fn grevlex(a: &Monomial, b: &Monomial) -> Ordering {
    total_degree(a).cmp(&total_degree(b)).then_with(|| {
        let n = a.len().max(b.len());
        for i in (0..n).rev() {
            let (x, y) = (a.get(i).copied().unwrap_or(0), b.get(i).copied().unwrap_or(0));
            if x != y {
                return y.cmp(&x);
            }
        }
        Ordering::Equal
    })
}

impl IntPolynomial {
    pub fn zero(alphabet: Alphabet) -> Self {
        IntPolynomial {
            alphabet,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(alphabet: Alphabet, c: Coeff) -> Self {
        let mut p = Self::zero(alphabet);
        if c != 0 {
            p.terms.insert(Monomial::new(), c);
        }
        p
    }

    pub fn one(alphabet: Alphabet) -> Self {
        Self::constant(alphabet, 1)
    }

    /// The variable with flat index `i ≥ 1`.
    pub fn var(alphabet: Alphabet, i: usize) -> Self {
        let mut exps = vec![0u8; i];
        exps[i - 1] = 1;
        Self::monomial(alphabet, &exps, 1)
    }

    pub fn monomial(alphabet: Alphabet, exps: &[u8], c: Coeff) -> Self {
        let mut m: Monomial = exps.iter().copied().collect();
        trim(&mut m);
        let mut p = Self::zero(alphabet);
        if c != 0 {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    /// Reinterprets the flat variable indices in another alphabet.
    pub fn with_alphabet(mut self, alphabet: Alphabet) -> Self {
        self.alphabet = alphabet;
        self
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in increasing lexicographic order of exponent vectors.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, Coeff)> {
        self.terms.iter().map(|(m, &c)| (m, c))
    }

    pub fn coeff(&self, exps: &[u8]) -> Coeff {
        let mut m: Monomial = exps.iter().copied().collect();
        trim(&mut m);
        self.terms.get(&m).copied().unwrap_or(0)
    }

    /// The constant term.
    pub fn constant_term(&self) -> Coeff {
        self.terms.get(&Monomial::new()).copied().unwrap_or(0)
    }

    /// The value if the polynomial is constant.
    pub fn as_constant(&self) -> Option<Coeff> {
        match self.terms.len() {
            0 => Some(0),
            1 => self.terms.get(&Monomial::new()).copied(),
            _ => None,
        }
    }

    /// Term with the lexicographically largest exponent vector.
    pub fn leading_lex(&self) -> Option<(&Monomial, Coeff)> {
        self.terms.iter().next_back().map(|(m, &c)| (m, c))
    }

    /// Term with the lexicographically smallest exponent vector.
    pub fn trailing_lex(&self) -> Option<(&Monomial, Coeff)> {
        self.terms.iter().next().map(|(m, &c)| (m, c))
    }

    /// Largest total degree, `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(total_degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(total_degree);
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|e| e == d),
        }
    }

    /// Largest flat index of a variable that occurs.
    pub fn num_vars(&self) -> usize {
        self.terms.keys().map(|m| m.len()).max().unwrap_or(0)
    }

    /// Largest exponent of any single variable.
    pub fn max_var_degree(&self) -> usize {
        self.terms.keys().flat_map(|m| m.iter()).map(|&e| e as usize).max().unwrap_or(0)
    }

    /// All coefficients are positive.
    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|&c| c > 0)
    }

    fn check_alphabet(&self, other: &Self) -> Result<()> {
        if self.alphabet != other.alphabet {
            return Err(Error::arg(format!(
                "alphabet mismatch {:?} vs {:?}",
                self.alphabet, other.alphabet
            )));
        }
        Ok(())
    }

    fn add_term(&mut self, m: Monomial, c: Coeff) -> Result<()> {
        if c == 0 {
            return Ok(());
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let s = e.get().checked_add(c).ok_or(Error::Overflow)?;
                if s == 0 {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_alphabet(other)?;
        let mut out = self.clone();
        for (m, &c) in &other.terms {
            out.add_term(m.clone(), c)?;
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_alphabet(other)?;
        let mut out = self.clone();
        for (m, &c) in &other.terms {
            out.add_term(m.clone(), c.checked_neg().ok_or(Error::Overflow)?)?;
        }
        Ok(out)
    }

    /// `self += c * other`.
    pub fn try_add_scaled(&mut self, other: &Self, c: Coeff) -> Result<()> {
        self.check_alphabet(other)?;
        for (m, &d) in &other.terms {
            self.add_term(m.clone(), d.checked_mul(c).ok_or(Error::Overflow)?)?;
        }
        Ok(())
    }

    pub fn try_scale(&self, c: Coeff) -> Result<Self> {
        let mut out = Self::zero(self.alphabet);
        if c == 0 {
            return Ok(out);
        }
        for (m, &d) in &self.terms {
            out.terms.insert(m.clone(), d.checked_mul(c).ok_or(Error::Overflow)?);
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_alphabet(other)?;
        let mut out = Self::zero(self.alphabet);
        for (a, &c) in &self.terms {
            for (b, &d) in &other.terms {
                out.add_term(add_exponents(a, b), c.checked_mul(d).ok_or(Error::Overflow)?)?;
            }
        }
        Ok(out)
    }

    pub fn try_pow(&self, e: u32) -> Result<Self> {
        let mut out = Self::one(self.alphabet);
        for _ in 0..e {
            out = out.try_mul(self)?;
        }
        Ok(out)
    }

    /// Exchanges `x_i` and `x_{i+1}`.
    pub fn swap_vars(&self, i: usize) -> Self {
        let mut out = Self::zero(self.alphabet);
        for (m, &c) in &self.terms {
            let mut m2 = m.clone();
            if m2.len() < i + 1 {
                m2.resize(i + 1, 0);
            }
            m2.swap(i - 1, i);
            trim(&mut m2);
            out.terms.insert(m2, c);
        }
        out
    }

    /// `∂_i f = (f - s_i f) / (x_i - x_{i+1})`.
    pub fn divided_difference(&self, i: usize) -> Result<Self> {
        if i == 0 {
            return Err(Error::arg("divided difference index starts at 1"));
        }
        let mut out = Self::zero(self.alphabet);
        for (m, &c) in &self.terms {
            let p = m.get(i - 1).copied().unwrap_or(0);
            let q = m.get(i).copied().unwrap_or(0);
            if p == q {
                continue;
            }
            let (hi, lo, sign) = if p > q { (p, q, c) } else { (q, p, c.checked_neg().ok_or(Error::Overflow)?) };
            let mut base = m.clone();
            if base.len() < i + 1 {
                base.resize(i + 1, 0);
            }
            // x_i^hi x_{i+1}^lo - x_i^lo x_{i+1}^hi over (x_i - x_{i+1})
            for j in 0..hi - lo {
                let mut t = base.clone();
                t[i - 1] = hi - 1 - j;
                t[i] = lo + j;
                trim(&mut t);
                out.add_term(t, sign)?;
            }
        }
        Ok(out)
    }

    pub fn substitute(&self, sub: &Substitution) -> Result<Self> {
        let mut out = Self::zero(sub.target);
        'terms: for (m, &c) in &self.terms {
            let mut t = Monomial::new();
            for (i, &e) in m.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                match sub.images.get(i) {
                    None => {
                        return Err(Error::arg(format!(
                            "variable {} is not mapped by the substitution",
                            self.alphabet.var_name(i + 1)
                        )))
                    }
                    Some(VarImage::Zero) => continue 'terms,
                    Some(&VarImage::Var(j)) => {
                        if t.len() < j {
                            t.resize(j, 0);
                        }
                        t[j - 1] = t[j - 1].checked_add(e).expect("exponent overflow");
                    }
                }
            }
            out.add_term(t, c)?;
        }
        Ok(out)
    }

    /// Terms in decreasing graded reverse lexicographic order.
    pub fn terms_grevlex(&self) -> Vec<(&Monomial, Coeff)> {
        let mut v: Vec<_> = self.terms().collect();
        v.sort_by(|a, b| grevlex(b.0, a.0));
        v
    }

    /// Text form such as `x1^4*x2^3*x3 + 2*x1^3*x2*x3`.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (idx, (m, c)) in self.terms_grevlex().into_iter().enumerate() {
            let factors: Vec<String> = m
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| {
                    let name = self.alphabet.var_name(i + 1);
                    if e == 1 {
                        name
                    } else {
                        format!("{name}^{e}")
                    }
                })
                .collect();
            let sign = if c < 0 { "-" } else { "+" };
            if idx == 0 {
                if c < 0 {
                    out.push('-');
                }
            } else {
                out.push_str(&format!(" {sign} "));
            }
            let a = c.unsigned_abs();
            let body = match (a, factors.is_empty()) {
                (_, true) => a.to_string(),
                (1, false) => factors.join("*"),
                (_, false) => format!("{a}*{}", factors.join("*")),
            };
            out.push_str(&body);
        }
        out
    }

    /// Inverse of [`IntPolynomial::render`]; spaces are optional.
    pub fn parse(s: &str, alphabet: Alphabet) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut out = Self::zero(alphabet);
        let mut terms: Vec<(bool, String)> = Vec::new();
        let mut cur = String::new();
        let mut negative = false;
        for ch in s.chars() {
            if (ch == '+' || ch == '-') && !cur.is_empty() && !cur.ends_with('^') {
                terms.push((negative, std::mem::take(&mut cur)));
                negative = ch == '-';
            } else if (ch == '+' || ch == '-') && cur.is_empty() {
                negative ^= ch == '-';
            } else {
                cur.push(ch);
            }
        }
        if cur.is_empty() {
            return Err(Error::Parse(format!("dangling sign in {s:?}")));
        }
        terms.push((negative, cur));
        for (negative, term) in terms {
            let mut c: Coeff = if negative { -1 } else { 1 };
            let mut m = Monomial::new();
            for factor in term.split('*') {
                if factor.is_empty() {
                    return Err(Error::Parse(format!("empty factor in {term:?}")));
                }
                if factor.chars().next().is_some_and(|ch| ch.is_ascii_digit()) {
                    let v: Coeff = factor.parse().map_err(|_| Error::Parse(format!("bad coefficient {factor:?}")))?;
                    c = c.checked_mul(v).ok_or(Error::Overflow)?;
                    continue;
                }
                let (name, e) = match factor.split_once('^') {
                    Some((n, e)) => (n, e.parse::<u8>().map_err(|_| Error::Parse(format!("bad exponent in {factor:?}")))?),
                    None => (factor, 1),
                };
                let i = alphabet.parse_var(name)?;
                if m.len() < i {
                    m.resize(i, 0);
                }
                m[i - 1] = m[i - 1].checked_add(e).ok_or(Error::Overflow)?;
            }
            trim(&mut m);
            out.add_term(m, c)?;
        }
        Ok(out)
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl std::ops::Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        self.try_add(rhs).expect("polynomial addition")
    }
}

impl std::ops::Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        self.try_sub(rhs).expect("polynomial subtraction")
    }
}

impl std::ops::Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        self.try_mul(rhs).expect("polynomial multiplication")
    }
}

impl std::ops::Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        self.try_scale(-1).expect("polynomial negation")
    }
}

/// Elementary symmetric polynomial `e_m(x_1 … x_k)`.
pub fn elementary(m: usize, k: usize) -> IntPolynomial {
    let mut out = IntPolynomial::zero(Alphabet::X);
    for subset in itertools::Itertools::combinations(0..k, m) {
        let mut exps: Monomial = SmallVec::from_elem(0, k);
        for i in subset {
            exps[i] = 1;
        }
        trim(&mut exps);
        out.add_term(exps, 1).expect("small coefficients");
    }
    out
}

/// Complete homogeneous symmetric polynomial `h_m(x_1 … x_k)`.
pub fn complete(m: usize, k: usize) -> IntPolynomial {
    let mut out = IntPolynomial::zero(Alphabet::X);
    if k == 0 {
        return if m == 0 { IntPolynomial::one(Alphabet::X) } else { out };
    }
    for multiset in itertools::Itertools::combinations_with_replacement(0..k, m) {
        let mut exps: Monomial = SmallVec::from_elem(0, k);
        for i in multiset {
            exps[i] += 1;
        }
        trim(&mut exps);
        out.add_term(exps, 1).expect("small coefficients");
    }
    out
}
