//! Structured output documents and their text/LaTeX/CSV renderings.
//!
//! All exact numbers serialize as decimal strings in lowest terms, so the
//! documents are portable and diffable; parsing a JSON document and
//! re-serializing it is byte-identical.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use mom_core::poly::UniPoly;
use mom_core::rational::{rational_string, Int, Rational};
use mom_core::reconstructor::factor_shifted_linear;

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct CoeffEntry {
    pub num: String,
    pub den: String,
}

impl CoeffEntry {
    pub fn from_rational(r: &Rational) -> Self {
        CoeffEntry {
            num: r.numer().to_string(),
            den: r.denom().to_string(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct ValueDocument {
    pub k: u32,
    pub beta: u32,
    pub n: u32,
    pub method: String,
    pub value: String,
    pub elapsed_ms: u128,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct PolyDocument {
    pub k: u32,
    pub beta: u32,
    pub method: String,
    pub degree: u64,
    /// Ordered by ascending power of N.
    pub coefficients: Vec<CoeffEntry>,
    /// Rational prefactor first, then shifted-linear factors, then the
    /// expanded irreducible remainder when it is non-constant.
    pub factors: Vec<String>,
    pub elapsed_ms: u128,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct TableRow {
    pub n: u32,
    pub value: String,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct TableDocument {
    pub k: u32,
    pub beta: u32,
    pub method: String,
    pub rows: Vec<TableRow>,
    pub elapsed_ms: u128,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct VerifyCheck {
    pub name: String,
    pub spec: String,
    pub passed: bool,
    pub expected: String,
    pub actual: String,
    pub elapsed_ms: u128,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct VerifyDocument {
    pub level: String,
    pub all_passed: bool,
    pub checks: Vec<VerifyCheck>,
    pub elapsed_ms: u128,
}

/// The shifted-linear factorization with a rational prefactor chosen so the
/// remaining cofactor is a primitive integer polynomial with positive leading
/// coefficient.
pub struct Factored {
    pub prefactor: Rational,
    pub shifts: Vec<i64>,
    pub cofactor: UniPoly,
}

pub fn factor(p: &UniPoly) -> Factored {
    let (shifts, rest) = factor_shifted_linear(p);
    if rest.is_zero() {
        return Factored {
            prefactor: Rational::zero(),
            shifts,
            cofactor: UniPoly::one(),
        };
    }
    // Content: gcd of numerators over lcm of denominators, signed by the
    // leading coefficient.
    let mut num_gcd = Int::zero();
    let mut den_lcm = Int::one();
    for c in rest.coeffs() {
        num_gcd = num_gcd.gcd(c.numer());
        den_lcm = den_lcm.lcm(c.denom());
    }
    let mut prefactor = Rational::new(num_gcd, den_lcm);
    if rest.leading_coeff().is_some_and(|c| c.is_negative()) {
        prefactor = -prefactor;
    }
    let cofactor = rest.scale(&prefactor.recip());
    Factored {
        prefactor,
        shifts,
        cofactor,
    }
}

impl Factored {
    /// Plain-text rendering, e.g. `1/6 (N+1)(N+2)(N+3)`.
    pub fn text(&self) -> String {
        let mut parts = Vec::new();
        if !self.prefactor.is_one() || (self.shifts.is_empty() && is_unit(&self.cofactor)) {
            parts.push(rational_string(&self.prefactor));
        }
        let mut tail = String::new();
        for s in &self.shifts {
            tail.push_str(&shift_string(*s));
        }
        if !is_unit(&self.cofactor) {
            tail.push_str(&format!("({})", self.cofactor));
        }
        if !tail.is_empty() {
            parts.push(tail);
        }
        parts.join(" ")
    }

    /// Factored LaTeX, e.g. `\frac{1}{6}(N+1)(N+2)(N+3)`.
    pub fn latex(&self) -> String {
        let mut out = String::new();
        if !self.prefactor.is_one() || (self.shifts.is_empty() && is_unit(&self.cofactor)) {
            out.push_str(&latex_rational(&self.prefactor));
        }
        for s in &self.shifts {
            out.push_str(&shift_string(*s));
        }
        if !is_unit(&self.cofactor) {
            out.push_str(&format!(
                "\\left({}\\right)",
                latex_poly_expanded(&self.cofactor)
            ));
        }
        out
    }

    /// Factor list for structured documents.
    pub fn factor_strings(&self) -> Vec<String> {
        let mut out = vec![rational_string(&self.prefactor)];
        out.extend(self.shifts.iter().map(|s| shift_string(*s)));
        if !is_unit(&self.cofactor) {
            out.push(self.cofactor.to_string());
        }
        out
    }
}

fn is_unit(p: &UniPoly) -> bool {
    p.degree() == Some(0) && p.coeff(0).is_one()
}

fn shift_string(s: i64) -> String {
    if s == 0 {
        "(N)".to_string()
    } else if s > 0 {
        format!("(N+{s})")
    } else {
        format!("(N{s})")
    }
}

fn latex_rational(r: &Rational) -> String {
    let sign = if r.is_negative() { "-" } else { "" };
    let a = r.abs();
    if a.denom().is_one() {
        format!("{sign}{}", a.numer())
    } else {
        format!("{sign}\\frac{{{}}}{{{}}}", a.numer(), a.denom())
    }
}

/// Expanded LaTeX polynomial, descending powers.
pub fn latex_poly_expanded(p: &UniPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else if c.is_negative() {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let a = c.abs();
        let power = match i {
            0 => String::new(),
            1 => "N".to_string(),
            e => format!("N^{{{e}}}"),
        };
        if a.is_one() && i > 0 {
            out.push_str(&power);
        } else if power.is_empty() {
            out.push_str(&latex_rational(&a));
        } else {
            out.push_str(&format!("{}{power}", latex_rational(&a)));
        }
    }
    out
}

pub fn poly_csv(k: u32, beta: u32, p: &UniPoly) -> String {
    let mut out = String::from("k,beta,power,numerator,denominator\n");
    for (i, c) in p.coeffs().iter().enumerate() {
        out.push_str(&format!("{k},{beta},{i},{},{}\n", c.numer(), c.denom()));
    }
    out
}
