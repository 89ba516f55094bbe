use super::pbw::PbwElement;
use super::UqError;
use crate::field::{Matrix, RatFuncS};
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Matrix coordinates a = rho^1_1, b = rho^1_2, c = rho^2_1, d = rho^2_2 of SU_q(2).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ALetter {
    A,
    B,
    C,
    D,
}

impl ALetter {
    pub const ALL: [ALetter; 4] = [ALetter::A, ALetter::B, ALetter::C, ALetter::D];

    /// Zero-based (row, column) of the matrix coordinate.
    pub fn index(self) -> (usize, usize) {
        match self {
            ALetter::A => (0, 0),
            ALetter::B => (0, 1),
            ALetter::C => (1, 0),
            ALetter::D => (1, 1),
        }
    }

    pub fn from_index(i: usize, j: usize) -> Self {
        ALetter::ALL[2 * i + j]
    }

    pub fn parse(c: char) -> Option<Self> {
        match c {
            'a' => Some(ALetter::A),
            'b' => Some(ALetter::B),
            'c' => Some(ALetter::C),
            'd' => Some(ALetter::D),
            _ => None,
        }
    }

    pub fn as_char(self) -> char {
        ['a', 'b', 'c', 'd'][self as usize]
    }
}

/// Formal combination of words in a, b, c, d. No SU_q(2) relations are
/// imposed; everything is evaluated through the pairing.
#[derive(Clone, PartialEq, Default, Debug)]
pub struct AWord {
    terms: BTreeMap<Vec<ALetter>, RatFuncS>,
}

impl AWord {
    pub fn zero() -> Self {
        AWord::default()
    }

    pub fn one() -> Self {
        AWord::word(&[])
    }

    pub fn word(letters: &[ALetter]) -> Self {
        AWord::from_terms([(letters.to_vec(), RatFuncS::one())])
    }

    pub fn letter(l: ALetter) -> Self {
        AWord::word(&[l])
    }

    /// Parses a string such as "abd"; `None` on a foreign character.
    pub fn parse(s: &str) -> Option<Self> {
        let letters: Option<Vec<ALetter>> = s.chars().map(ALetter::parse).collect();
        letters.map(|l| AWord::word(&l))
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Vec<ALetter>, RatFuncS)>) -> Self {
        let mut out = AWord::zero();
        for (w, c) in terms {
            out.push(w, c);
        }
        out
    }

    fn push(&mut self, w: Vec<ALetter>, c: RatFuncS) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(w.clone()).or_insert_with(RatFuncS::zero);
        *slot = std::mem::replace(slot, RatFuncS::zero()) + c;
        if slot.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<ALetter>, &RatFuncS)> {
        self.terms.iter()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.push(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-RatFuncS::one()))
    }

    pub fn scale(&self, c: &RatFuncS) -> Self {
        AWord::from_terms(self.terms.iter().map(|(w, v)| (w.clone(), v.clone() * c.clone())))
    }

    /// Concatenation product.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = AWord::zero();
        for (u, c) in &self.terms {
            for (v, d) in &other.terms {
                let mut w = u.clone();
                w.extend(v);
                out.push(w, c.clone() * d.clone());
            }
        }
        out
    }

    /// Counit: rho^i_j goes to delta_ij.
    pub fn counit(&self) -> RatFuncS {
        self.terms
            .iter()
            .filter(|(w, _)| w.iter().all(|l| matches!(l, ALetter::A | ALetter::D)))
            .fold(RatFuncS::zero(), |acc, (_, c)| acc + c.clone())
    }

    pub fn max_len(&self) -> usize {
        self.terms.keys().map(|w| w.len()).max().unwrap_or(0)
    }
}

impl fmt::Display for AWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(w, c)| {
                let s: String = w.iter().map(|l| l.as_char()).collect();
                format!("({c})*{}", if s.is_empty() { "1".into() } else { s })
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Matrix of x in the n-fold tensor power of the spin-1/2 representation,
/// rows and columns indexed by bit strings (first tensor leg most
/// significant). For n = 0 this is the 1x1 matrix (counit).
pub fn tensor_rep(x: &PbwElement, n: usize) -> Result<Matrix<RatFuncS>, UqError> {
    if n == 0 {
        return Ok(Matrix::new(1, 1, vec![x.counit()]));
    }
    let dim = 1usize << n;
    let e = raising(n, true);
    let f = raising(n, false);
    let mut out = Matrix::zeros(dim, dim);
    let mut e_pows = vec![Matrix::identity(dim)];
    let mut f_pows = vec![Matrix::identity(dim)];
    for (m, c) in x.terms() {
        if m.k2 % 2 != 0 {
            return Err(UqError::HalfIntegerPairing(m.to_string()));
        }
        while e_pows.len() <= m.e as usize {
            let next = e_pows.last().unwrap().mul(&e)?;
            e_pows.push(next);
        }
        while f_pows.len() <= m.f as usize {
            let next = f_pows.last().unwrap().mul(&f)?;
            f_pows.push(next);
        }
        let k = k_diag(n, m.k2 / 2);
        let mono = f_pows[m.f as usize].mul(&k)?.mul(&e_pows[m.e as usize])?;
        for r in 0..dim {
            for col in 0..dim {
                let v = &mono[(r, col)];
                if !v.is_zero() {
                    out[(r, col)] = std::mem::replace(&mut out[(r, col)], RatFuncS::zero()) + v.clone() * c.clone();
                }
            }
        }
    }
    Ok(out)
}

fn bit(state: usize, n: usize, leg: usize) -> usize {
    (state >> (n - 1 - leg)) & 1
}

/// K^m on n legs: diag(s^m, s^-m) on each.
fn k_diag(n: usize, m: i64) -> Matrix<RatFuncS> {
    let dim = 1usize << n;
    let mut out = Matrix::zeros(dim, dim);
    for st in 0..dim {
        let ups = (0..n).filter(|&l| bit(st, n, l) == 0).count() as i64;
        out[(st, st)] = RatFuncS::s_pow(m * (2 * ups - n as i64));
    }
    out
}

/// Iterated coproduct of E (or F): sum over legs p of K^-1 (x) .. (x) E (x) K (x) .. (x) K.
fn raising(n: usize, is_e: bool) -> Matrix<RatFuncS> {
    let dim = 1usize << n;
    let mut out = Matrix::zeros(dim, dim);
    let (from, to) = if is_e { (1, 0) } else { (0, 1) };
    for col in 0..dim {
        for p in 0..n {
            if bit(col, n, p) != from {
                continue;
            }
            let row = col ^ (1 << (n - 1 - p));
            debug_assert_eq!(bit(row, n, p), to);
            let mut exp = 0i64;
            for t in 0..n {
                if t == p {
                    continue;
                }
                let sign = if bit(col, n, t) == 0 { 1 } else { -1 };
                exp += if t < p { -sign } else { sign };
            }
            out[(row, col)] = std::mem::replace(&mut out[(row, col)], RatFuncS::zero()) + RatFuncS::s_pow(exp);
        }
    }
    out
}

/// Row and column of a word in the tensor representation.
pub fn word_position(word: &[ALetter]) -> (usize, usize) {
    word.iter().fold((0, 0), |(r, c), l| {
        let (i, j) = l.index();
        (2 * r + i, 2 * c + j)
    })
}

/// Pairs x against many words, caching one tensor representation per length.
pub struct WordPairing<'a> {
    x: &'a PbwElement,
    reps: BTreeMap<usize, Matrix<RatFuncS>>,
}

impl<'a> WordPairing<'a> {
    pub fn new(x: &'a PbwElement) -> Self {
        WordPairing { x, reps: BTreeMap::new() }
    }

    pub fn pair_letters(&mut self, word: &[ALetter]) -> Result<RatFuncS, UqError> {
        let n = word.len();
        if !self.reps.contains_key(&n) {
            let m = tensor_rep(self.x, n)?;
            self.reps.insert(n, m);
        }
        let (r, c) = word_position(word);
        Ok(self.reps[&n][(r, c)].clone())
    }

    pub fn pair(&mut self, w: &AWord) -> Result<RatFuncS, UqError> {
        let mut acc = RatFuncS::zero();
        for (letters, c) in w.terms() {
            acc = acc + self.pair_letters(letters)? * c.clone();
        }
        Ok(acc)
    }
}

/// <x, w>: letters pair with spin-1/2 matrix entries, words of length k
/// through the (k-1)-fold coproduct, the empty word through the counit.
pub fn pair_word(x: &PbwElement, w: &AWord) -> Result<RatFuncS, UqError> {
    WordPairing::new(x).pair(w)
}
