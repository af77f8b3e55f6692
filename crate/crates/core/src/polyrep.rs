//! The standard and sign polynomial representations on ℚ(q, t)[X^±1].
//!
//! `X` acts by multiplication, `T` by the Demazure–Lusztig operator
//! `T̂ = u·ŝ + (u − u⁻¹)(X² − 1)⁻¹(ŝ − 1)` and `Y` by `ŷ∘ŝ∘T̂`, where
//! `ŝ f(X) = f(X⁻¹)`, `ŷ f(X) = f(q⁻²X)` and `u` is `t` for the standard
//! flavor and `−t⁻¹` for the sign flavor. Words act right to left.

use crate::error::{Error, Result};
use crate::exactalg::{LaurentX, RatQT};
use crate::hword::{Gen, HElement, Letter};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RepFlavor {
    Standard,
    Sign,
}

impl RepFlavor {
    /// The Hecke parameter `u`: `t` or `−t⁻¹`.
    pub fn effective_t(self) -> RatQT {
        match self {
            RepFlavor::Standard => RatQT::t(),
            RepFlavor::Sign => RatQT::monomial(-1, 0, -1),
        }
    }

    fn effective_t_inv(self) -> RatQT {
        match self {
            RepFlavor::Standard => RatQT::monomial(1, 0, -1),
            RepFlavor::Sign => RatQT::monomial(-1, 0, 1),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            RepFlavor::Standard => "standard",
            RepFlavor::Sign => "sign",
        }
    }
}

/// `t − t⁻¹`, equal to `u − u⁻¹` in both flavors.
fn t_minus_tinv() -> RatQT {
    RatQT::t().sub(&RatQT::monomial(1, 0, -1))
}

/// `δ_t = t·X⁻¹ − t⁻¹·X`.
pub fn delta_t() -> LaurentX {
    LaurentX::from_terms([(-1, RatQT::t()), (1, RatQT::monomial(-1, 0, -1))])
}

/// `T̂ v`.
pub fn t_hat(v: &LaurentX, flavor: RepFlavor) -> Result<LaurentX> {
    let sv = v.s_hat();
    let d = sv.sub(v).div_x2_minus_1().map_err(|e| Error::Internal(format!("T-hat: {e}")))?;
    let u = flavor.effective_t();
    let c = t_minus_tinv();
    Ok(LaurentX::lincomb([(&u, &sv), (&c, &d)]))
}

/// `T̂⁻¹ v = T̂ v + (u⁻¹ − u) v`.
pub fn t_hat_inv(v: &LaurentX, flavor: RepFlavor) -> Result<LaurentX> {
    let tv = t_hat(v, flavor)?;
    let c = flavor.effective_t_inv().sub(&flavor.effective_t());
    Ok(LaurentX::lincomb([(RatQT::one_ref(), &tv), (&c, v)]))
}

/// Action of a single generator power.
pub fn act_letter(l: Letter, v: &LaurentX, flavor: RepFlavor) -> Result<LaurentX> {
    match l.gen {
        Gen::X => Ok(v.shift(l.exp)),
        Gen::T => {
            let mut r = v.clone();
            for _ in 0..l.exp.unsigned_abs() {
                r = if l.exp > 0 { t_hat(&r, flavor)? } else { t_hat_inv(&r, flavor)? };
            }
            Ok(r)
        }
        Gen::Y => {
            let mut r = v.clone();
            for _ in 0..l.exp.unsigned_abs() {
                r = if l.exp > 0 {
                    t_hat(&r, flavor)?.s_hat().y_hat(1)
                } else {
                    t_hat_inv(&r.y_hat(-1).s_hat(), flavor)?
                };
            }
            Ok(r)
        }
    }
}

/// Action of a word, rightmost letter first.
pub fn act_word(w: &[Letter], v: &LaurentX, flavor: RepFlavor) -> Result<LaurentX> {
    let mut r = v.clone();
    for l in w.iter().rev() {
        r = act_letter(*l, &r, flavor)?;
    }
    Ok(r)
}

/// Left action of an element of the algebra.
pub fn act(a: &HElement, v: &LaurentX, flavor: RepFlavor) -> Result<LaurentX> {
    let mut images = Vec::with_capacity(a.len());
    for (w, c) in a.terms() {
        images.push((c.clone(), act_word(w, v, flavor)?));
    }
    Ok(LaurentX::lincomb(images.iter().map(|(c, v)| (c, v))))
}

/// Right action on the φ-twisted module: `v·a = φ(a)·v`.
pub fn right_act(v: &LaurentX, a: &HElement, flavor: RepFlavor) -> Result<LaurentX> {
    act(&a.phi(), v, flavor)
}

/// `𝐞 v = (T̂ + t⁻¹)/(t + t⁻¹) v`.
pub fn idempotent_project(v: &LaurentX, flavor: RepFlavor) -> Result<LaurentX> {
    let tv = t_hat(v, flavor)?;
    let tinv = RatQT::monomial(1, 0, -1);
    let norm = RatQT::t().add(&tinv).inv()?;
    Ok(LaurentX::lincomb([(RatQT::one_ref(), &tv), (&tinv, v)]).scale(&norm))
}

/// Substitutes `X = point`.
pub fn eval_at(v: &LaurentX, point: &RatQT) -> Result<RatQT> {
    v.eval_at(point)
}

/// The evaluation `ε` on `ℂ[x]·δ_t`: `g(x)·δ_t ↦ g(−t·q⁻² − t⁻¹·q²)`.
pub fn eval_sign(v: &LaurentX) -> Result<RatQT> {
    let h = LaurentX::exact_divide(v, &delta_t()).map_err(|e| Error::OutsideSignModule(e.to_string()))?;
    if !h.is_symmetric() {
        return Err(Error::OutsideSignModule(format!("quotient {h} is not symmetric")));
    }
    // X0 = −t·q⁻² satisfies X0 + X0⁻¹ = −t·q⁻² − t⁻¹·q²
    h.eval_at(&RatQT::monomial(-1, -2, 1))
}
