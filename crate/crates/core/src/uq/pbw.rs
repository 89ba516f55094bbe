use crate::field::{Field, RatFuncS};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

/// Normal-ordered monomial F^f K^(k2/2) E^e. The K exponent is stored doubled
/// so that half-integer powers stay integral.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Mono {
    pub f: u32,
    pub k2: i64,
    pub e: u32,
}

impl Mono {
    pub const ONE: Mono = Mono { f: 0, k2: 0, e: 0 };

    pub fn new(f: u32, k2: i64, e: u32) -> Self {
        Mono { f, k2, e }
    }
}

impl fmt::Display for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.f {
            0 => {}
            1 => parts.push("F".to_string()),
            n => parts.push(format!("F^{n}")),
        }
        match self.k2 {
            0 => {}
            2 => parts.push("K".to_string()),
            k if k % 2 == 0 => parts.push(format!("K^{}", k / 2)),
            k => parts.push(format!("K^({k}/2)")),
        }
        match self.e {
            0 => {}
            1 => parts.push("E".to_string()),
            n => parts.push(format!("E^{n}")),
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join(" "))
        }
    }
}

/// Letters of free words in the generators; `K(k2)` is K^(k2/2).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Gen {
    E,
    F,
    K(i64),
}

/// Element of U_q(sl2) in PBW normal form, coefficients in Q(s), q = s^2.
#[derive(Clone, PartialEq, Default)]
pub struct PbwElement {
    terms: BTreeMap<Mono, RatFuncS>,
}

fn push(map: &mut BTreeMap<Mono, RatFuncS>, m: Mono, c: RatFuncS) {
    if c.is_zero() {
        return;
    }
    match map.entry(m) {
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut o) => {
            let sum = std::mem::replace(o.get_mut(), RatFuncS::zero()) + c;
            if sum.is_zero() {
                o.remove();
            } else {
                *o.get_mut() = sum;
            }
        }
    }
}

/// (q - q^-1)^-1
fn inv_qdiff() -> RatFuncS {
    (RatFuncS::q() - RatFuncS::q_pow(-1)).inv().expect("q - q^-1 is nonzero")
}

impl PbwElement {
    pub fn zero() -> Self {
        PbwElement::default()
    }

    pub fn one() -> Self {
        PbwElement::mono(Mono::ONE)
    }

    pub fn scalar(c: RatFuncS) -> Self {
        PbwElement::from_terms([(Mono::ONE, c)])
    }

    pub fn mono(m: Mono) -> Self {
        PbwElement::from_terms([(m, RatFuncS::one())])
    }

    pub fn e() -> Self {
        PbwElement::mono(Mono::new(0, 0, 1))
    }

    pub fn f() -> Self {
        PbwElement::mono(Mono::new(1, 0, 0))
    }

    /// K^(k2/2).
    pub fn k_half(k2: i64) -> Self {
        PbwElement::mono(Mono::new(0, k2, 0))
    }

    /// K^n.
    pub fn k_pow(n: i64) -> Self {
        PbwElement::k_half(2 * n)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Mono, RatFuncS)>) -> Self {
        let mut map = BTreeMap::new();
        for (m, c) in terms {
            push(&mut map, m, c);
        }
        PbwElement { terms: map }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &RatFuncS)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Mono) -> RatFuncS {
        self.terms.get(m).cloned().unwrap_or_else(RatFuncS::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.terms.clone();
        for (m, c) in &other.terms {
            push(&mut out, *m, c.clone());
        }
        PbwElement { terms: out }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-RatFuncS::one()))
    }

    pub fn scale(&self, c: &RatFuncS) -> Self {
        PbwElement::from_terms(self.terms.iter().map(|(m, v)| (*m, v.clone() * c.clone())))
    }

    fn left_gen(&self, g: Gen) -> Self {
        let mut out = BTreeMap::new();
        for (m, c) in &self.terms {
            match g {
                Gen::F => push(&mut out, Mono::new(m.f + 1, m.k2, m.e), c.clone()),
                Gen::K(b2) => {
                    // K^b F^a = q^(-ab) F^a K^b
                    let w = RatFuncS::s_pow(-b2 * m.f as i64);
                    push(&mut out, Mono::new(m.f, m.k2 + b2, m.e), c.clone() * w);
                }
                Gen::E => {
                    // E F^a = F^a E + F^(a-1) sum_j (q^-2j K^2 - q^2j K^-2)/(q - q^-1),
                    // and E K^b = q^-b K^b E.
                    push(&mut out, Mono::new(m.f, m.k2, m.e + 1), c.clone() * RatFuncS::s_pow(-m.k2));
                    if m.f > 0 {
                        let d = inv_qdiff();
                        for j in 0..m.f as i64 {
                            let up = c.clone() * RatFuncS::q_pow(-2 * j) * d.clone();
                            let down = -(c.clone() * RatFuncS::q_pow(2 * j) * d.clone());
                            push(&mut out, Mono::new(m.f - 1, m.k2 + 4, m.e), up);
                            push(&mut out, Mono::new(m.f - 1, m.k2 - 4, m.e), down);
                        }
                    }
                }
            }
        }
        PbwElement { terms: out }
    }

    fn left_mono(&self, m: &Mono) -> Self {
        let mut acc = self.clone();
        for _ in 0..m.e {
            acc = acc.left_gen(Gen::E);
        }
        if m.k2 != 0 {
            acc = acc.left_gen(Gen::K(m.k2));
        }
        for _ in 0..m.f {
            acc = acc.left_gen(Gen::F);
        }
        acc
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = PbwElement::zero();
        for (m, c) in &self.terms {
            out = out.add(&other.left_mono(m).scale(c));
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(PbwElement::one(), |acc, _| acc.mul(self))
    }

    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    /// Normal form of a free word, read left to right.
    pub fn normalize(word: &[Gen]) -> Self {
        word.iter().rev().fold(PbwElement::one(), |acc, g| acc.left_gen(*g))
    }

    pub fn counit(&self) -> RatFuncS {
        self.coeff_where(|m| m.f == 0 && m.e == 0)
    }

    fn coeff_where(&self, pred: impl Fn(&Mono) -> bool) -> RatFuncS {
        self.terms.iter().filter(|(m, _)| pred(m)).fold(RatFuncS::zero(), |acc, (_, c)| acc + c.clone())
    }

    pub fn coproduct(&self) -> PbwTensor {
        let mut out = PbwTensor::zero();
        for (m, c) in &self.terms {
            out = out.add(&mono_coproduct(m).scale(c));
        }
        out
    }

    /// Antipode: S(E) = -qE, S(F) = -q^-1 F, S(K) = K^-1, extended as an
    /// antihomomorphism.
    pub fn antipode(&self) -> Self {
        let se = PbwElement::e().scale(&-RatFuncS::q());
        let sf = PbwElement::f().scale(&-RatFuncS::q_pow(-1));
        let mut out = PbwElement::zero();
        for (m, c) in &self.terms {
            let t = se.pow(m.e).mul(&PbwElement::k_half(-m.k2)).mul(&sf.pow(m.f));
            out = out.add(&t.scale(c));
        }
        out
    }

    /// Left adjoint action Ad_x(y) = x_(1) y S(x_(2)).
    pub fn adjoint(&self, y: &Self) -> Self {
        let mut out = PbwElement::zero();
        for ((m1, m2), c) in self.coproduct().terms() {
            let t = PbwElement::mono(*m1).mul(y).mul(&PbwElement::mono(*m2).antipode());
            out = out.add(&t.scale(c));
        }
        out
    }
}

fn mono_coproduct(m: &Mono) -> PbwTensor {
    let de = PbwTensor::from_terms([
        ((Mono::new(0, 0, 1), Mono::new(0, 2, 0)), RatFuncS::one()),
        ((Mono::new(0, -2, 0), Mono::new(0, 0, 1)), RatFuncS::one()),
    ]);
    let df = PbwTensor::from_terms([
        ((Mono::new(1, 0, 0), Mono::new(0, 2, 0)), RatFuncS::one()),
        ((Mono::new(0, -2, 0), Mono::new(1, 0, 0)), RatFuncS::one()),
    ]);
    let dk = PbwTensor::from_terms([((Mono::new(0, m.k2, 0), Mono::new(0, m.k2, 0)), RatFuncS::one())]);
    let mut acc = PbwTensor::one();
    for _ in 0..m.f {
        acc = acc.mul(&df);
    }
    acc = acc.mul(&dk);
    for _ in 0..m.e {
        acc = acc.mul(&de);
    }
    acc
}

impl fmt::Display for PbwElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(m, c)| format!("({c})*{m}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for PbwElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Element of U_q(sl2) (x) U_q(sl2) on pairs of normal-ordered monomials.
#[derive(Clone, PartialEq, Default, Debug)]
pub struct PbwTensor {
    terms: BTreeMap<(Mono, Mono), RatFuncS>,
}

impl PbwTensor {
    pub fn zero() -> Self {
        PbwTensor::default()
    }

    pub fn one() -> Self {
        PbwTensor::from_terms([((Mono::ONE, Mono::ONE), RatFuncS::one())])
    }

    pub fn from_terms(terms: impl IntoIterator<Item = ((Mono, Mono), RatFuncS)>) -> Self {
        let mut out = PbwTensor::zero();
        for (k, c) in terms {
            out.push(k, c);
        }
        out
    }

    pub fn outer(x: &PbwElement, y: &PbwElement) -> Self {
        let mut out = PbwTensor::zero();
        for (a, c) in x.terms() {
            for (b, d) in y.terms() {
                out.push((*a, *b), c.clone() * d.clone());
            }
        }
        out
    }

    fn push(&mut self, k: (Mono, Mono), c: RatFuncS) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(k).or_insert_with(RatFuncS::zero);
        *slot = std::mem::replace(slot, RatFuncS::zero()) + c;
        if slot.is_zero() {
            self.terms.remove(&k);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Mono, Mono), &RatFuncS)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.push(*k, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-RatFuncS::one()))
    }

    pub fn scale(&self, c: &RatFuncS) -> Self {
        PbwTensor::from_terms(self.terms.iter().map(|(k, v)| (*k, v.clone() * c.clone())))
    }

    /// Componentwise product.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = PbwTensor::zero();
        for ((a1, a2), c) in &self.terms {
            for ((b1, b2), d) in &other.terms {
                let left = PbwElement::mono(*a1).mul(&PbwElement::mono(*b1));
                let right = PbwElement::mono(*a2).mul(&PbwElement::mono(*b2));
                let cd = c.clone() * d.clone();
                for (l, lc) in left.terms() {
                    for (r, rc) in right.terms() {
                        out.push((*l, *r), cd.clone() * lc.clone() * rc.clone());
                    }
                }
            }
        }
        out
    }

    /// Applies a linear map to each leg.
    pub fn map_legs(&self, f: impl Fn(&Mono) -> PbwElement, g: impl Fn(&Mono) -> PbwElement) -> Self {
        let mut out = PbwTensor::zero();
        for ((a, b), c) in &self.terms {
            out = out.add(&PbwTensor::outer(&f(a), &g(b)).scale(c));
        }
        out
    }
}
