//! Torus-knot and iterated-cable polynomials: Cherednik's `P_{n,r,s}`, the
//! sign-representation `J_{n,r,s}`, the iterated cables `J_n(𝐫, 𝐬)` and the
//! Newton-pair polynomials `JD_{n,𝐫,𝐬}`.

use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::exactalg::{minus_q_pow, LaurentX, RatQT};
use crate::hword::{decompose_gamma, decompose_gamma_floor, HElement, TauWord};
use crate::macdonald::{expand_in_macdonald, macdonald_poly, sign_macdonald_poly, SymPoly};
use crate::polyrep::{act, delta_t, eval_sign, RepFlavor};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Convention {
    Topological,
    Newton,
}

impl Convention {
    pub fn name(self) -> &'static str {
        match self {
            Convention::Topological => "topological",
            Convention::Newton => "newton",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Cherednik,
    Sign,
    Iterated,
    Cd,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Cherednik => "cherednik",
            Family::Sign => "sign",
            Family::Iterated => "iterated",
            Family::Cd => "cd",
        }
    }
}

/// A list of coprime pairs, outermost first, with their convention.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CableSpec {
    pairs: Vec<(i64, i64)>,
    convention: Convention,
}

impl CableSpec {
    pub fn new(pairs: Vec<(i64, i64)>, convention: Convention) -> Result<Self> {
        if pairs.is_empty() {
            return Err(Error::InvalidSpec("no pairs given".into()));
        }
        for &(r, s) in &pairs {
            if r.gcd(&s) != 1 {
                return Err(Error::NotCoprime { r, s });
            }
        }
        Ok(CableSpec { pairs, convention })
    }

    pub fn topological(pairs: &[(i64, i64)]) -> Result<Self> {
        Self::new(pairs.to_vec(), Convention::Topological)
    }

    pub fn newton(pairs: &[(i64, i64)]) -> Result<Self> {
        Self::new(pairs.to_vec(), Convention::Newton)
    }

    /// Parses `"2,3;2,5"`.
    pub fn parse(text: &str, convention: Convention) -> Result<Self> {
        let mut pairs = Vec::new();
        for chunk in text.split(';') {
            let parts: Vec<&str> = chunk.split(',').map(str::trim).collect();
            let bad = || Error::InvalidSpec(format!("malformed pair '{chunk}'"));
            if parts.len() != 2 {
                return Err(bad());
            }
            let r: i64 = parts[0].parse().map_err(|_| bad())?;
            let s: i64 = parts[1].parse().map_err(|_| bad())?;
            pairs.push((r, s));
        }
        Self::new(pairs, convention)
    }

    pub fn pairs(&self) -> &[(i64, i64)] {
        &self.pairs
    }

    pub fn convention(&self) -> Convention {
        self.convention
    }

    pub fn rs(&self) -> (Vec<i64>, Vec<i64>) {
        self.pairs.iter().copied().unzip()
    }

    /// The equivalent topological spec; Newton pairs go through
    /// [`newton_to_topological`].
    pub fn to_topological(&self) -> CableSpec {
        match self.convention {
            Convention::Topological => self.clone(),
            Convention::Newton => {
                let a = newton_to_topological(self);
                let pairs = self.pairs.iter().zip(a).map(|(&(r, _), a)| (r, a)).collect();
                CableSpec { pairs, convention: Convention::Topological }
            }
        }
    }
}

impl fmt::Display for CableSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p: Vec<String> = self.pairs.iter().map(|(r, s)| format!("{r},{s}")).collect();
        write!(f, "{} ({})", p.join(";"), self.convention.name())
    }
}

/// A computed polynomial with the parameters that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantResult {
    pub value: RatQT,
    pub family: Family,
    pub n: usize,
    pub spec: CableSpec,
}

/// Which τ word realizes each `γ_{r,s}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum GammaChoice {
    /// [`decompose_gamma`].
    #[default]
    Standard,
    /// [`decompose_gamma`] extended by τ⁻, which fixes `(0,1)ᵀ`.
    WithStabilizer,
    /// [`decompose_gamma_floor`].
    Floor,
}

impl GammaChoice {
    pub fn word(self, r: i64, s: i64) -> Result<TauWord> {
        match self {
            GammaChoice::Standard => decompose_gamma(r, s),
            GammaChoice::WithStabilizer => Ok(decompose_gamma(r, s)?.with_stabilizer()),
            GammaChoice::Floor => decompose_gamma_floor(r, s),
        }
    }
}

/// `a_1 = s_1`, `a_{i+1} = s_{i+1} + r_i·r_{i+1}·a_i`.
pub fn newton_to_topological(spec: &CableSpec) -> Vec<i64> {
    let mut out: Vec<i64> = Vec::with_capacity(spec.pairs.len());
    for (i, &(r, s)) in spec.pairs.iter().enumerate() {
        let a = if i == 0 { s } else { s + spec.pairs[i - 1].0 * r * out[i - 1] };
        out.push(a);
    }
    out
}

/// `W_j = (γ(Y^j) + γ(Y^-j))·v` for `j ≤ kmax` (with `W_0 = v`), acting by
/// the φ-twist of `γ` when `twisted`. Powers are built one factor at a time
/// because `γ(Y^j) = γ(Y)^j` and `φ(w^j) = φ(w)^j`.
fn symmetric_orbit(
    gamma: &TauWord,
    twisted: bool,
    v: &LaurentX,
    flavor: RepFlavor,
    kmax: usize,
) -> Result<Vec<LaurentX>> {
    let img = |e: i64| {
        let g = gamma.apply(&HElement::y(e));
        if twisted {
            g.phi()
        } else {
            g
        }
    };
    let (up, down) = (img(1), img(-1));
    let mut w = vec![v.clone()];
    let (mut a, mut b) = (v.clone(), v.clone());
    for _ in 1..=kmax {
        a = act(&up, &a, flavor)?;
        b = act(&down, &b, flavor)?;
        w.push(a.add(&b));
    }
    Ok(w)
}

fn symmetric(v: &LaurentX, stage: &str) -> Result<SymPoly> {
    SymPoly::from_laurent_x(v).map_err(|_| Error::Internal(format!("{stage}: result left the symmetric part")))
}

/// `ε_c`: substitution `X = t`.
fn eps_c(v: &LaurentX) -> Result<RatQT> {
    v.eval_at(&RatQT::t())
}

fn prefactor(r: i64, s: i64, n: usize) -> RatQT {
    let n = n as i64;
    minus_q_pow(r * s * (n * n - 1))
}

fn check_color(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidSpec("color n must be at least 1".into()));
    }
    Ok(())
}

/// `P_{n,r,s}(q,t) = (−q)^(rs(n²−1))·ε_c(γ_{r,s}(p_{n−1}(Y+Y⁻¹))·1)`.
pub fn cherednik_torus(n: usize, r: i64, s: i64) -> Result<RatQT> {
    cherednik_torus_with(n, r, s, GammaChoice::Standard)
}

pub fn cherednik_torus_with(n: usize, r: i64, s: i64, choice: GammaChoice) -> Result<RatQT> {
    check_color(n)?;
    let gamma = choice.word(r, s)?;
    let p = macdonald_poly(n - 1)?;
    let w = symmetric_orbit(&gamma, false, &LaurentX::one(), RepFlavor::Standard, n - 1)?;
    let mut parts = Vec::new();
    for (k, c) in p.coeffs() {
        symmetric(&w[k], "torus")?;
        parts.push(c.mul(&eps_c(&w[k])?));
    }
    Ok(RatQT::sum(parts.iter()).mul(&prefactor(r, s, n)))
}

/// `J_{n,r,s}(q,t) = (−q)^(rs(n²−1))·ε(γ_{r,s}(p⁻_{n−1}(Y+Y⁻¹))·δ_t)` in the
/// sign representation.
pub fn sign_torus(n: usize, r: i64, s: i64) -> Result<RatQT> {
    sign_torus_with(n, r, s, GammaChoice::Standard)
}

pub fn sign_torus_with(n: usize, r: i64, s: i64, choice: GammaChoice) -> Result<RatQT> {
    check_color(n)?;
    let gamma = choice.word(r, s)?;
    let p = sign_macdonald_poly(n - 1)?;
    let w = symmetric_orbit(&gamma, false, &delta_t(), RepFlavor::Sign, n - 1)?;
    let mut parts = Vec::new();
    for (k, c) in p.coeffs() {
        parts.push(c.mul(&eval_sign(&w[k])?));
    }
    Ok(RatQT::sum(parts.iter()).mul(&prefactor(r, s, n)))
}

/// A cable pair `(w, a)` lists the winding number first, as in the Newton
/// recursion. `γ_{r,s}` sends the longitude to `X^r Y^s`, whose winding
/// number is `s`, so the stage uses `γ_{a,w}`.
pub fn gamma_pair((w, a): (i64, i64)) -> (i64, i64) {
    (a, w)
}

/// One cabling stage `g ↦ 1·γ(ι(g))` on the twisted module, where each
/// component `p_k` carries the weight `(−q)^(rs·k(k+2))` when `weighted`
/// (the topological convention) and `g` is used as a whole otherwise.
fn cable_stage(g: &SymPoly, r: i64, s: i64, weighted: bool, choice: GammaChoice) -> Result<SymPoly> {
    let gamma = choice.word(r, s)?;
    let deg = g.degree().unwrap_or(0);
    let w = symmetric_orbit(&gamma, true, &LaurentX::one(), RepFlavor::Standard, deg)?;
    // coefficient of W_j in the image
    let mut coeff: Vec<Vec<RatQT>> = vec![Vec::new(); deg + 1];
    if weighted {
        for (k, d) in expand_in_macdonald(g)? {
            let dk = d.mul(&minus_q_pow(r * s * (k as i64) * (k as i64 + 2)));
            for (j, c) in macdonald_poly(k)?.coeffs() {
                coeff[j].push(dk.mul(c));
            }
        }
    } else {
        for (j, c) in g.coeffs() {
            coeff[j].push(c.clone());
        }
    }
    let sums: Vec<RatQT> = coeff.iter().map(|v| RatQT::sum(v.iter())).collect();
    let ws: Vec<SymPoly> = w.iter().map(|v| symmetric(v, "cable stage")).collect::<Result<_>>()?;
    Ok(SymPoly::lincomb(sums.iter().zip(&ws)))
}

/// `ε_{q,t}` on the twisted module: the module variable evaluated at `t`.
fn eps_module(g: &SymPoly) -> Result<RatQT> {
    g.eval_at(&RatQT::t())
}

/// `J_n(𝐫, 𝐬; q, t)` for topological pairs, innermost pair last in the list.
pub fn iterated_topological(n: usize, spec: &CableSpec) -> Result<RatQT> {
    iterated_topological_with(n, spec, GammaChoice::Standard)
}

pub fn iterated_topological_with(n: usize, spec: &CableSpec, choice: GammaChoice) -> Result<RatQT> {
    check_color(n)?;
    let spec = spec.to_topological();
    let mut g = macdonald_poly(n - 1)?;
    for &pair in spec.pairs().iter().rev() {
        let (r, s) = gamma_pair(pair);
        g = cable_stage(&g, r, s, true, choice)?;
    }
    eps_module(&g)
}

/// `JD_{n,𝐫,𝐬}(q, t)` for Newton pairs.
pub fn cd_newton(n: usize, spec: &CableSpec) -> Result<RatQT> {
    cd_newton_with(n, spec, GammaChoice::Standard)
}

pub fn cd_newton_with(n: usize, spec: &CableSpec, choice: GammaChoice) -> Result<RatQT> {
    check_color(n)?;
    if spec.convention() != Convention::Newton {
        return Err(Error::InvalidSpec("cd polynomials take Newton pairs".into()));
    }
    let mut g = macdonald_poly(n - 1)?;
    for &pair in spec.pairs().iter().rev() {
        let (r, s) = gamma_pair(pair);
        g = cable_stage(&g, r, s, false, choice)?;
    }
    eps_module(&g)
}

/// Computes the requested family. Torus families use the single pair of `spec`.
pub fn compute(family: Family, n: usize, spec: &CableSpec) -> Result<InvariantResult> {
    let single = || -> Result<(i64, i64)> {
        match spec.pairs() {
            [p] => Ok(*p),
            _ => Err(Error::InvalidSpec("torus families take exactly one pair".into())),
        }
    };
    let value = match family {
        Family::Cherednik => {
            let (r, s) = single()?;
            cherednik_torus(n, r, s)?
        }
        Family::Sign => {
            let (r, s) = single()?;
            sign_torus(n, r, s)?
        }
        Family::Iterated => iterated_topological(n, spec)?,
        Family::Cd => cd_newton(n, spec)?,
    };
    Ok(InvariantResult { value, family, n, spec: spec.clone() })
}

/// `J_n((r,s)) / P_{n,r,s}`, the normalization between the depth-one
/// iterated polynomial and Cherednik's.
pub fn depth_one_ratio(n: usize, r: i64, s: i64) -> Result<RatQT> {
    let it = iterated_topological(n, &CableSpec::topological(&[(r, s)])?)?;
    it.div(&cherednik_torus(n, r, s)?)
}
