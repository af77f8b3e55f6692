//! Words in `X^±1, Y^±1, T^±1` with coefficients in ℚ(q, t), the
//! anti-automorphism φ and the τ± automorphisms.
//!
//! No relations are imposed here: an `HElement` is an element of the free
//! algebra, and relations only enter through the operators in `polyrep`.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::exactalg::RatQT;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Gen {
    X,
    Y,
    T,
}

/// A generator raised to a nonzero power.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub gen: Gen,
    pub exp: i64,
}

impl Letter {
    pub fn new(gen: Gen, exp: i64) -> Self {
        assert!(exp != 0, "letter exponent must be nonzero");
        Letter { gen, exp }
    }
}

pub type Word = Vec<Letter>;

/// Appends `l` to `w`, merging with the last letter when the generators agree.
fn push_letter(w: &mut Word, l: Letter) {
    match w.last_mut() {
        Some(last) if last.gen == l.gen => {
            last.exp += l.exp;
            if last.exp == 0 {
                w.pop();
            }
        }
        _ => w.push(l),
    }
}

fn concat(a: &[Letter], b: &[Letter]) -> Word {
    let mut w = a.to_vec();
    for &l in b {
        push_letter(&mut w, l);
    }
    w
}

pub fn word_to_string(w: &[Letter]) -> String {
    if w.is_empty() {
        return "1".to_string();
    }
    w.iter()
        .map(|l| {
            let g = match l.gen {
                Gen::X => "X",
                Gen::Y => "Y",
                Gen::T => "T",
            };
            if l.exp == 1 {
                g.to_string()
            } else {
                format!("{g}^{}", l.exp)
            }
        })
        .collect::<Vec<_>>()
        .join(".")
}

/// Finite linear combination of words.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct HElement {
    terms: BTreeMap<Word, RatQT>,
}

impl HElement {
    pub fn zero() -> Self {
        HElement { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::scalar(RatQT::one())
    }

    pub fn scalar(c: RatQT) -> Self {
        Self::term(c, Vec::new())
    }

    pub fn term(c: RatQT, w: Word) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            let mut norm = Vec::with_capacity(w.len());
            for l in w {
                push_letter(&mut norm, l);
            }
            terms.insert(norm, c);
        }
        HElement { terms }
    }

    pub fn letter(gen: Gen, exp: i64) -> Self {
        if exp == 0 {
            return Self::one();
        }
        Self::term(RatQT::one(), vec![Letter::new(gen, exp)])
    }

    pub fn x(exp: i64) -> Self {
        Self::letter(Gen::X, exp)
    }

    pub fn y(exp: i64) -> Self {
        Self::letter(Gen::Y, exp)
    }

    pub fn t_gen(exp: i64) -> Self {
        Self::letter(Gen::T, exp)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &RatQT)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Longest word length, a growth diagnostic.
    pub fn max_word_len(&self) -> usize {
        self.terms.keys().map(Vec::len).max().unwrap_or(0)
    }

    fn add_term(&mut self, w: Word, c: &RatQT) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(x) => {
                let s = x.add(c);
                if s.is_zero() {
                    self.terms.remove(&w);
                } else {
                    *x = s;
                }
            }
            None => {
                self.terms.insert(w, c.clone());
            }
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (w, c) in &o.terms {
            r.add_term(w.clone(), c);
        }
        r
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&RatQT::from_i64(-1))
    }

    pub fn scale(&self, c: &RatQT) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        HElement { terms: self.terms.iter().map(|(w, x)| (w.clone(), x.mul(c))).collect() }
    }

    /// Free product: concatenation with exponent merging.
    pub fn mul(&self, o: &Self) -> Self {
        let mut r = HElement::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &o.terms {
                r.add_term(concat(a, b), &ca.mul(cb));
            }
        }
        r
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut r = Self::one();
        for _ in 0..n {
            r = r.mul(self);
        }
        r
    }

    /// Anti-automorphism `X ↦ Y⁻¹, Y ↦ X⁻¹, T ↦ T`.
    pub fn phi(&self) -> Self {
        let mut r = HElement::zero();
        for (w, c) in &self.terms {
            let mut img = Vec::with_capacity(w.len());
            for l in w.iter().rev() {
                let nl = match l.gen {
                    Gen::X => Letter::new(Gen::Y, -l.exp),
                    Gen::Y => Letter::new(Gen::X, -l.exp),
                    Gen::T => *l,
                };
                push_letter(&mut img, nl);
            }
            r.add_term(img, c);
        }
        r
    }

    /// Applies one τ generator as an algebra automorphism.
    pub fn tau_apply(&self, g: TauGen) -> Self {
        let mut r = HElement::zero();
        for (w, c) in &self.terms {
            let mut qpow = 0i64;
            let mut img: Word = Vec::new();
            for l in w {
                let (qe, piece) = g.letter_image(l.gen, l.exp.signum());
                for _ in 0..l.exp.unsigned_abs() {
                    qpow += qe;
                    for &pl in &piece {
                        push_letter(&mut img, pl);
                    }
                }
            }
            r.add_term(img, &c.mul_monomial(qpow, 0));
        }
        r
    }

    /// `Σ c_k·(Y^k + Y^-k)` from m-basis coefficients, with `m_0 = 1`.
    pub fn from_m_basis_in_y<'a, I: IntoIterator<Item = (usize, &'a RatQT)>>(coeffs: I) -> Self {
        let mut r = HElement::zero();
        for (k, c) in coeffs {
            if k == 0 {
                r.add_term(Vec::new(), c);
            } else {
                r.add_term(vec![Letter::new(Gen::Y, k as i64)], c);
                r.add_term(vec![Letter::new(Gen::Y, -(k as i64))], c);
            }
        }
        r
    }
}

impl fmt::Display for HElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(w, c)| {
                if c.is_one() {
                    word_to_string(w)
                } else if w.is_empty() {
                    format!("({c})")
                } else if c.len_hint() == 1 {
                    format!("{c}*{}", word_to_string(w))
                } else {
                    format!("({c})*{}", word_to_string(w))
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

impl fmt::Debug for HElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HElement({self})")
    }
}

trait LenHint {
    fn len_hint(&self) -> usize;
}

impl LenHint for RatQT {
    fn len_hint(&self) -> usize {
        if self.is_laurent() {
            self.num().len()
        } else {
            2
        }
    }
}

/// `x = X + X⁻¹`.
pub fn x_word() -> HElement {
    HElement::x(1).add(&HElement::x(-1))
}

/// `y = Y + Y⁻¹`.
pub fn y_word() -> HElement {
    HElement::y(1).add(&HElement::y(-1))
}

/// `z = q⁻¹(X·Y·T⁻² + X⁻¹·Y⁻¹)`.
pub fn z_word() -> HElement {
    let qi = RatQT::monomial(1, -1, 0);
    let a = HElement::term(qi.clone(), vec![Letter::new(Gen::X, 1), Letter::new(Gen::Y, 1), Letter::new(Gen::T, -2)]);
    let b = HElement::term(qi, vec![Letter::new(Gen::X, -1), Letter::new(Gen::Y, -1)]);
    a.add(&b)
}

/// `e_{r,s} = q^(−rs)·X^r·Y^s`.
pub fn e_rs(r: i64, s: i64) -> HElement {
    HElement::x(r).mul(&HElement::y(s)).scale(&RatQT::monomial(1, -r * s, 0))
}

/// Generators of the SL₂(ℤ) action.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TauGen {
    /// τ⁺, matrix `[[1,1],[0,1]]`.
    Plus,
    /// τ⁻, matrix `[[1,0],[1,1]]`.
    Minus,
    /// (τ⁺)⁻¹
    PlusInv,
    /// (τ⁻)⁻¹
    MinusInv,
}

pub type Mat2 = [[i64; 2]; 2];

pub fn mat_mul(a: &Mat2, b: &Mat2) -> Mat2 {
    [
        [a[0][0] * b[0][0] + a[0][1] * b[1][0], a[0][0] * b[0][1] + a[0][1] * b[1][1]],
        [a[1][0] * b[0][0] + a[1][1] * b[1][0], a[1][0] * b[0][1] + a[1][1] * b[1][1]],
    ]
}

const IDENTITY: Mat2 = [[1, 0], [0, 1]];

impl TauGen {
    pub fn matrix(self) -> Mat2 {
        match self {
            TauGen::Plus => [[1, 1], [0, 1]],
            TauGen::Minus => [[1, 0], [1, 1]],
            TauGen::PlusInv => [[1, -1], [0, 1]],
            TauGen::MinusInv => [[1, 0], [-1, 1]],
        }
    }

    pub fn inverse(self) -> Self {
        match self {
            TauGen::Plus => TauGen::PlusInv,
            TauGen::Minus => TauGen::MinusInv,
            TauGen::PlusInv => TauGen::Plus,
            TauGen::MinusInv => TauGen::Minus,
        }
    }

    /// Image of `gen^sign` (sign = ±1) as `q^e · word`.
    fn letter_image(self, gen: Gen, sign: i64) -> (i64, Word) {
        use Gen::*;
        let l = |g, e| Letter::new(g, e);
        match (self, gen, sign) {
            (_, T, s) => (0, vec![l(T, s)]),
            (TauGen::Plus | TauGen::PlusInv, X, s) => (0, vec![l(X, s)]),
            (TauGen::Minus | TauGen::MinusInv, Y, s) => (0, vec![l(Y, s)]),
            (TauGen::Plus, Y, 1) => (-1, vec![l(X, 1), l(Y, 1)]),
            (TauGen::Plus, Y, _) => (1, vec![l(Y, -1), l(X, -1)]),
            (TauGen::PlusInv, Y, 1) => (1, vec![l(X, -1), l(Y, 1)]),
            (TauGen::PlusInv, Y, _) => (-1, vec![l(Y, -1), l(X, 1)]),
            (TauGen::Minus, X, 1) => (1, vec![l(Y, 1), l(X, 1)]),
            (TauGen::Minus, X, _) => (-1, vec![l(X, -1), l(Y, -1)]),
            (TauGen::MinusInv, X, 1) => (-1, vec![l(Y, -1), l(X, 1)]),
            (TauGen::MinusInv, X, _) => (1, vec![l(X, -1), l(Y, 1)]),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            TauGen::Plus => "tau+",
            TauGen::Minus => "tau-",
            TauGen::PlusInv => "tau+^-1",
            TauGen::MinusInv => "tau-^-1",
        }
    }
}

/// A word in the τ generators together with its matrix product.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TauWord {
    gens: Vec<TauGen>,
    matrix: Mat2,
}

impl Default for TauWord {
    fn default() -> Self {
        TauWord { gens: Vec::new(), matrix: IDENTITY }
    }
}

impl TauWord {
    pub fn new(gens: Vec<TauGen>) -> Self {
        let matrix = gens.iter().fold(IDENTITY, |m, g| mat_mul(&m, &g.matrix()));
        TauWord { gens, matrix }
    }

    pub fn gens(&self) -> &[TauGen] {
        &self.gens
    }

    pub fn matrix(&self) -> Mat2 {
        self.matrix
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    /// Appends `g` on the right of the matrix product, so it acts first.
    pub fn push(&mut self, g: TauGen) {
        self.matrix = mat_mul(&self.matrix, &g.matrix());
        self.gens.push(g);
    }

    /// The same `(r, s)` column extended by the stabilizer element τ⁻ of
    /// `(0,1)ᵀ`, applied before the rest of the word.
    pub fn with_stabilizer(&self) -> Self {
        let mut w = self.clone();
        w.push(TauGen::Minus);
        w
    }

    /// The image of `(0, 1)ᵀ`.
    pub fn column(&self) -> (i64, i64) {
        (self.matrix[0][1], self.matrix[1][1])
    }

    /// `γ(a) = g₁(g₂(⋯ g_k(a)))` for the word `g₁⋯g_k`.
    pub fn apply(&self, a: &HElement) -> HElement {
        self.gens.iter().rev().fold(a.clone(), |acc, g| acc.tau_apply(*g))
    }
}

impl fmt::Display for TauWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = self.gens.iter().map(|g| g.name()).collect();
        write!(f, "[{}]", names.join(", "))
    }
}

fn gcd_i64(a: i64, b: i64) -> i64 {
    num_integer::Integer::gcd(&a, &b)
}

fn push_power(w: &mut TauWord, g: TauGen, k: i64) {
    let g = if k < 0 { g.inverse() } else { g };
    for _ in 0..k.unsigned_abs() {
        w.push(g);
    }
}

/// A τ word whose matrix sends `(0, 1)ᵀ` to `(r, s)ᵀ`.
///
/// Continued-fraction reduction of `(r, s)` to `(0, 1)`, recording the
/// elementary matrices used.
pub fn decompose_gamma(r: i64, s: i64) -> Result<TauWord> {
    if gcd_i64(r, s) != 1 {
        return Err(Error::NotCoprime { r, s });
    }
    let mut w = TauWord::default();
    let (mut a, mut b) = (r, s);
    while (a, b) != (0, 1) {
        if a == 0 {
            // (0, -1) = S²·(0, 1) with S = τ⁺⁻¹ τ⁻ τ⁺⁻¹
            for _ in 0..2 {
                w.push(TauGen::PlusInv);
                w.push(TauGen::Minus);
                w.push(TauGen::PlusInv);
            }
            break;
        }
        if b != 0 && a.abs() >= b.abs() {
            let k = a / b;
            a -= k * b;
            push_power(&mut w, TauGen::Plus, k);
        } else {
            let k = if b != 0 { b / a } else { -a };
            b -= k * a;
            push_power(&mut w, TauGen::Minus, k);
        }
    }
    debug_assert_eq!(w.column(), (r, s));
    Ok(w)
}

/// Another valid decomposition, built with floor division instead of
/// truncation; used to test that results do not depend on the word chosen.
pub fn decompose_gamma_floor(r: i64, s: i64) -> Result<TauWord> {
    if gcd_i64(r, s) != 1 {
        return Err(Error::NotCoprime { r, s });
    }
    let mut w = TauWord::default();
    let (mut a, mut b) = (r, s);
    let mut steps = 0;
    while (a, b) != (0, 1) {
        steps += 1;
        if steps > 200 || a == 0 {
            return decompose_gamma(a, b).map(|tail| {
                for g in tail.gens() {
                    w.push(*g);
                }
                w
            });
        }
        if b != 0 && a.abs() >= b.abs() {
            let k = num_integer::Integer::div_floor(&a, &b);
            a -= k * b;
            push_power(&mut w, TauGen::Plus, k);
        } else {
            let k = if b != 0 { num_integer::Integer::div_floor(&b, &a) } else { -a };
            b -= k * a;
            push_power(&mut w, TauGen::Minus, k);
        }
    }
    debug_assert_eq!(w.column(), (r, s));
    Ok(w)
}

/// `γ_{r,s}(a)`.
pub fn gamma_apply(r: i64, s: i64, a: &HElement) -> Result<HElement> {
    Ok(decompose_gamma(r, s)?.apply(a))
}
