//! Two-variable Alexander polynomials of axis links `U ∪ β̂` via Morton's
//! formula, and the checks built on them.
//!
//! `x` is the axis variable and `y` the closure variable; the Burau variable
//! `t` is renamed `y`.

use num_traits::{One, Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::laurent::{Laurent2, Var, VarNames};

pub const FLAG_HYPOTHESIS_VIOLATED: &str = "lemma hypothesis necessarily violated (link not exchangeably braided)";
pub const FLAG_SHARPNESS: &str = "sharpness contradiction";
pub const FLAG_TORRES_FAILED: &str = "torres condition failed";

/// `p ≐ y^a + f_1(y) x + ... + f_{l-2}(y) x^{l-2} + x^{l-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxisForm {
    pub l: usize,
    pub a: i32,
    /// `f_1 .. f_{l-2}`, univariate in `y`.
    pub f: Vec<Laurent2>,
}

impl AxisForm {
    pub fn reconstruct(&self) -> Laurent2 {
        let mut p = Laurent2::monomial(1, 0, self.a) + Laurent2::monomial(1, self.l as i32 - 1, 0);
        for (i, fi) in self.f.iter().enumerate() {
            p = p + fi.shift(i as i32 + 1, 0);
        }
        p
    }

    /// Whether every `f_i(1)` equals 1.
    pub fn f_at_one_is_one(&self) -> bool {
        self.f.iter().all(|fi| fi.substitute_unit(Var::Y).is_one())
    }
}

/// `normalize_unit(det(x I - burau(w)))`.
pub fn morton_axis_polynomial(w: &BraidWord) -> Result<Laurent2> {
    if w.strands() < 2 {
        return Err(Error::TooFewStrands);
    }
    let comps = w.closure_component_count();
    if comps != 1 {
        return Err(Error::DisconnectedClosure(comps));
    }
    w.burau()?.characteristic().determinant().normalize_unit()
}

/// Whether `p(x, 1) ≐ 1 + x + ... + x^{l-1}`.
pub fn torres_check(p: &Laurent2, l: usize) -> bool {
    if l == 0 {
        return false;
    }
    let expected = Laurent2::univariate(Var::X, 0, std::iter::repeat_n(1, l));
    p.substitute_unit(Var::Y).doteq(&expected)
}

pub fn axis_form_decompose(p: &Laurent2, l: usize) -> Result<AxisForm> {
    let p = p.normalize_unit()?;
    let (lo, hi) = p.degree_range(Var::X).expect("nonzero after normalization");
    let expected = l as i64 - 1;
    if (hi - lo) as i64 != expected {
        return Err(Error::AxisDegree { expected, found: (hi - lo) as i64 });
    }
    let lead = p.coeff_of(Var::X, hi);
    let (c, e) = unit_monomial(&lead).ok_or_else(|| Error::AxisLeadingNotMonomial(lead.render(VarNames::XY)))?;
    let unit = Laurent2::monomial(c, -lo, -e);
    let q = &p * &unit;
    let constant = q.coeff_of(Var::X, 0);
    let a = match unit_monomial(&constant) {
        Some((1, a)) => a,
        _ => return Err(Error::AxisConstantNotMonomial(constant.render(VarNames::XY))),
    };
    let f = (1..l as i32 - 1).map(|i| q.coeff_of(Var::X, i)).collect();
    Ok(AxisForm { l, a, f })
}

// `±y^e` as `(±1, e)`
fn unit_monomial(p: &Laurent2) -> Option<(i32, i32)> {
    if !p.is_monomial() {
        return None;
    }
    let (ex, ey, c) = p.terms().next()?;
    if ex != 0 || !c.abs().is_one() {
        return None;
    }
    Some((if c.is_positive() { 1 } else { -1 }, ey))
}

/// `abs_coeff_sum((x - 1)(y - 1) p)`.
pub fn lower_bound_stat(p: &Laurent2) -> u64 {
    let factor = (Laurent2::x() - Laurent2::one()) * (Laurent2::y() - Laurent2::one());
    (&factor * p).abs_coeff_sum().to_u64().unwrap_or(u64::MAX)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxisFormJson {
    pub a: i64,
    pub f: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaBoundReport {
    pub braid: String,
    pub strands: usize,
    pub delta: String,
    pub torres: bool,
    pub axis_form: Option<AxisFormJson>,
    pub stat: u64,
    pub flags: Vec<String>,
}

pub fn lemma_bound_report(w: &BraidWord) -> Result<LemmaBoundReport> {
    let p = morton_axis_polynomial(w)?;
    let l = w.strands();
    let stat = lower_bound_stat(&p);
    let torres = torres_check(&p, l);
    let mut flags = Vec::new();
    if !torres {
        flags.push(FLAG_TORRES_FAILED.to_string());
    }
    let axis_form = match axis_form_decompose(&p, l) {
        Ok(form) => Some(AxisFormJson {
            a: form.a as i64,
            f: form.f.iter().map(|fi| fi.render(VarNames::XY)).collect(),
        }),
        Err(e) => {
            flags.push(format!("axis form: {e}"));
            None
        }
    };
    if l >= 3 && stat < 12 {
        flags.push(FLAG_HYPOTHESIS_VIOLATED.to_string());
    }
    if stat == 12 && l != 3 {
        flags.push(FLAG_SHARPNESS.to_string());
    }
    Ok(LemmaBoundReport { braid: w.to_string(), strands: l, delta: p.render(VarNames::XY), torres, axis_form, stat, flags })
}
