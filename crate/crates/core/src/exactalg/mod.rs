//! Exact arithmetic in ℤ[q^±, t^±], ℚ(q, t), ℚ(q, t)[X^±] and ℚ[q^±].

pub mod gcd;
pub mod json;
pub mod laurent_q;
pub mod laurent_qt;
pub mod laurent_x;
mod modp;
pub mod parse;
pub mod ratqt;

#[cfg(test)]
mod proptests;

pub use gcd::{div_exact, gcd_qt};
pub use laurent_q::{monomial_ratio, LaurentQ};
pub use laurent_qt::LaurentQT;
pub use laurent_x::LaurentX;
pub use parse::{parse_laurent_qt, parse_laurent_x, parse_ratqt};
pub use ratqt::{RatQT, TSubst};

/// `(−q)^e` as a rational function.
pub fn minus_q_pow(e: i64) -> RatQT {
    RatQT::monomial(if e.rem_euclid(2) == 1 { -1 } else { 1 }, e, 0)
}
