//! Integer Laurent polynomials in two variables and square matrices over them.
//!
//! Coefficients are arbitrary precision. Exponents live in `i32`; arithmetic
//! that would leave that range panics with [`Error::ExponentOverflow`]'s message,
//! while parsing reports it as an error.
//!
//! Alexander polynomials are only defined up to multiplication by a unit
//! `±x^a y^b`. [`Laurent2::normalize_unit`] picks one representative per class
//! and [`Laurent2::doteq`] compares classes.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Variable tag.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Var {
    X,
    Y,
}

impl Var {
    pub fn other(self) -> Var {
        match self {
            Var::X => Var::Y,
            Var::Y => Var::X,
        }
    }
}

/// Names used when rendering. `XT` prints the second variable as `t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VarNames {
    XY,
    XT,
}

type Exp = (i32, i32);

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Laurent2 {
    // keyed by (e_x, e_y); no zero coefficient is ever stored
    terms: BTreeMap<Exp, BigInt>,
}

fn add_exp(a: Exp, b: Exp) -> Exp {
    let ex = a.0.checked_add(b.0);
    let ey = a.1.checked_add(b.1);
    match (ex, ey) {
        (Some(ex), Some(ey)) => (ex, ey),
        _ => panic!("{}", Error::ExponentOverflow),
    }
}

impl Laurent2 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0, 0)
    }

    /// `c * x^ex * y^ey`.
    pub fn monomial(c: impl Into<BigInt>, ex: i32, ey: i32) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((ex, ey), c);
        }
        Self { terms }
    }

    pub fn x() -> Self {
        Self::monomial(1, 1, 0)
    }

    pub fn y() -> Self {
        Self::monomial(1, 0, 1)
    }

    pub fn var(v: Var) -> Self {
        match v {
            Var::X => Self::x(),
            Var::Y => Self::y(),
        }
    }

    /// Builds a polynomial from `(e_x, e_y, coefficient)` triples, summing repeats.
    pub fn from_terms<C: Into<BigInt>>(terms: impl IntoIterator<Item = (i32, i32, C)>) -> Self {
        let mut p = Self::zero();
        for (ex, ey, c) in terms {
            p.add_term((ex, ey), c.into());
        }
        p
    }

    /// Univariate polynomial in `v` from coefficients of `v^lowest, v^(lowest+1), ...`.
    pub fn univariate<C: Into<BigInt>>(v: Var, lowest: i32, coeffs: impl IntoIterator<Item = C>) -> Self {
        let mut p = Self::zero();
        for (k, c) in coeffs.into_iter().enumerate() {
            let e = lowest
                .checked_add(k as i32)
                .unwrap_or_else(|| panic!("{}", Error::ExponentOverflow));
            let exp = match v {
                Var::X => (e, 0),
                Var::Y => (0, e),
            };
            p.add_term(exp, c.into());
        }
        p
    }

    fn add_term(&mut self, exp: Exp, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exp) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&(0, 0)).is_some_and(|c| c.is_one())
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending `(e_x, e_y)` order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i32, i32, &BigInt)> + '_ {
        self.terms.iter().map(|(&(ex, ey), c)| (ex, ey, c))
    }

    pub fn coeff(&self, ex: i32, ey: i32) -> BigInt {
        self.terms.get(&(ex, ey)).cloned().unwrap_or_default()
    }

    /// Minimal and maximal exponent of `v`, `None` for the zero polynomial.
    pub fn degree_range(&self, v: Var) -> Option<(i32, i32)> {
        let mut it = self.terms.keys().map(|&(ex, ey)| match v {
            Var::X => ex,
            Var::Y => ey,
        });
        let first = it.next()?;
        Some(it.fold((first, first), |(lo, hi), e| (lo.min(e), hi.max(e))))
    }

    /// Coefficient of `v^e`, as a polynomial in the other variable.
    pub fn coeff_of(&self, v: Var, e: i32) -> Laurent2 {
        let terms = self
            .terms
            .iter()
            .filter(|(&(ex, ey), _)| match v {
                Var::X => ex == e,
                Var::Y => ey == e,
            })
            .map(|(&(ex, ey), c)| {
                let exp = match v {
                    Var::X => (0, ey),
                    Var::Y => (ex, 0),
                };
                (exp, c.clone())
            })
            .collect();
        Laurent2 { terms }
    }

    /// Multiplies by `x^ex y^ey`.
    pub fn shift(&self, ex: i32, ey: i32) -> Laurent2 {
        let terms = self
            .terms
            .iter()
            .map(|(&e, c)| (add_exp(e, (ex, ey)), c.clone()))
            .collect();
        Laurent2 { terms }
    }

    pub fn scale(&self, c: &BigInt) -> Laurent2 {
        if c.is_zero() {
            return Laurent2::zero();
        }
        let terms = self.terms.iter().map(|(&e, k)| (e, k * c)).collect();
        Laurent2 { terms }
    }

    pub fn pow(&self, n: u32) -> Laurent2 {
        let mut acc = Laurent2::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Sets `v = 1`; the result only involves the other variable.
    pub fn substitute_unit(&self, v: Var) -> Laurent2 {
        let mut out = Laurent2::zero();
        for (&(ex, ey), c) in &self.terms {
            let exp = match v {
                Var::X => (0, ey),
                Var::Y => (ex, 0),
            };
            out.add_term(exp, c.clone());
        }
        out
    }

    /// `p(y, x)`.
    pub fn swap_vars(&self) -> Laurent2 {
        let terms = self.terms.iter().map(|(&(ex, ey), c)| ((ey, ex), c.clone())).collect();
        Laurent2 { terms }
    }

    /// `p(x^-1, y^-1)`.
    pub fn invert_vars(&self) -> Laurent2 {
        let neg = |e: i32| e.checked_neg().unwrap_or_else(|| panic!("{}", Error::ExponentOverflow));
        let terms = self
            .terms
            .iter()
            .map(|(&(ex, ey), c)| ((neg(ex), neg(ey)), c.clone()))
            .collect();
        Laurent2 { terms }
    }

    /// Canonical representative of the class of `self` under multiplication
    /// by `±x^a y^b`: minimal exponents shifted to zero, then the sign fixed so
    /// the lexicographically smallest monomial has a positive coefficient.
    pub fn normalize_unit(&self) -> Result<Laurent2> {
        let (xlo, _) = self.degree_range(Var::X).ok_or(Error::ZeroPolynomial)?;
        let (ylo, _) = self.degree_range(Var::Y).ok_or(Error::ZeroPolynomial)?;
        let shifted = self.shift(-xlo, -ylo);
        let (_, _, lead) = shifted.terms().next().expect("nonzero");
        if lead.is_negative() {
            Ok(-shifted)
        } else {
            Ok(shifted)
        }
    }

    /// Equality up to a unit `±x^a y^b`.
    pub fn doteq(&self, other: &Laurent2) -> bool {
        match (self.normalize_unit(), other.normalize_unit()) {
            (Ok(p), Ok(q)) => p == q,
            (Err(_), Err(_)) => true,
            _ => false,
        }
    }

    pub fn abs_coeff_sum(&self) -> BigUint {
        self.terms.values().map(|c| c.magnitude().clone()).sum()
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Laurent2) -> Option<Laurent2> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Laurent2::zero());
        }
        let (&d_lead, d_lc) = d.terms.iter().next_back()?;
        let (&d_low, _) = d.terms.iter().next()?;
        let (&s_low, _) = self.terms.iter().next()?;
        // every quotient monomial m satisfies m + low(d) >= low(self) in lex order
        let floor = (s_low.0 as i64 - d_low.0 as i64, s_low.1 as i64 - d_low.1 as i64);

        let mut rem = self.clone();
        let mut quot = Laurent2::zero();
        while let Some((&r_lead, r_lc)) = rem.terms.iter().next_back() {
            let m = (r_lead.0 as i64 - d_lead.0 as i64, r_lead.1 as i64 - d_lead.1 as i64);
            if m < floor {
                return None;
            }
            let (q, r) = (r_lc / d_lc, r_lc % d_lc);
            if !r.is_zero() {
                return None;
            }
            let m = (i32::try_from(m.0).ok()?, i32::try_from(m.1).ok()?);
            let term = Laurent2::monomial(q, m.0, m.1);
            rem = &rem - &(&term * d);
            quot = &quot + &term;
        }
        Some(quot)
    }

    /// Renders with the chosen variable names, highest monomial first.
    pub fn render(&self, names: VarNames) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let second = match names {
            VarNames::XY => "y",
            VarNames::XT => "t",
        };
        let mut out = String::new();
        for (i, (&(ex, ey), c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push(if neg { '-' } else { '+' });
            }
            let mag = c.magnitude();
            let mut factors: Vec<String> = Vec::new();
            if !mag.is_one() || (ex == 0 && ey == 0) {
                factors.push(mag.to_string());
            }
            for (name, e) in [("x", ex), (second, ey)] {
                match e {
                    0 => {}
                    1 => factors.push(name.to_string()),
                    _ => factors.push(format!("{name}^{e}")),
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }

    /// Parses the rendering grammar. Both `y` and `t` name the second variable.
    pub fn parse(text: &str) -> Result<Laurent2> {
        Parser::new(text).parse()
    }
}

impl fmt::Display for Laurent2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(VarNames::XY))
    }
}

impl fmt::Debug for Laurent2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Laurent2({self})")
    }
}

impl FromStr for Laurent2 {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Laurent2::parse(s)
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Self { src: text.as_bytes(), pos: 0 }
    }

    fn err(&self, msg: &str) -> Error {
        Error::PolyParse(format!("{msg} at byte {}", self.pos))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn digits(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| std::str::from_utf8(&self.src[start..self.pos]).expect("ascii"))
    }

    fn exponent(&mut self) -> Result<i32> {
        let neg = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            Some(b'+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        let d = self.digits().ok_or_else(|| self.err("expected exponent"))?;
        let v: i64 = d.parse().map_err(|_| Error::ExponentOverflow)?;
        let v = if neg { -v } else { v };
        i32::try_from(v).map_err(|_| Error::ExponentOverflow)
    }

    fn parse(mut self) -> Result<Laurent2> {
        let mut out = Laurent2::zero();
        if self.peek().is_none() {
            return Err(self.err("empty input"));
        }
        let mut first = true;
        while self.peek().is_some() {
            let mut sign = 1;
            match self.peek() {
                Some(b'+') => self.pos += 1,
                Some(b'-') => {
                    self.pos += 1;
                    sign = -1;
                }
                _ if first => {}
                _ => return Err(self.err("expected '+' or '-'")),
            }
            first = false;
            let (exp, coeff) = self.term()?;
            out.add_term(exp, coeff * sign);
        }
        Ok(out)
    }

    fn term(&mut self) -> Result<(Exp, BigInt)> {
        let mut coeff = BigInt::one();
        let mut exp: Exp = (0, 0);
        loop {
            match self.peek() {
                Some(c) if c.is_ascii_digit() => {
                    let d = self.digits().expect("digit");
                    coeff *= d.parse::<BigInt>().map_err(|_| self.err("bad coefficient"))?;
                }
                Some(c @ (b'x' | b'X' | b'y' | b'Y' | b't' | b'T')) => {
                    self.pos += 1;
                    let e = if self.peek() == Some(b'^') {
                        self.pos += 1;
                        self.exponent()?
                    } else {
                        1
                    };
                    let add = if c.eq_ignore_ascii_case(&b'x') { (e, 0) } else { (0, e) };
                    exp = (
                        exp.0.checked_add(add.0).ok_or(Error::ExponentOverflow)?,
                        exp.1.checked_add(add.1).ok_or(Error::ExponentOverflow)?,
                    );
                }
                _ => return Err(self.err("expected coefficient or variable")),
            }
            match self.peek() {
                Some(b'*') => self.pos += 1,
                Some(b'x' | b'X' | b'y' | b'Y' | b't' | b'T') => {}
                _ => break,
            }
        }
        Ok((exp, coeff))
    }
}

impl<'a> Add<&'a Laurent2> for &'a Laurent2 {
    type Output = Laurent2;
    fn add(self, rhs: &'a Laurent2) -> Laurent2 {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a Laurent2> for &'a Laurent2 {
    type Output = Laurent2;
    fn sub(self, rhs: &'a Laurent2) -> Laurent2 {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, -c);
        }
        out
    }
}

impl<'a> Mul<&'a Laurent2> for &'a Laurent2 {
    type Output = Laurent2;
    fn mul(self, rhs: &'a Laurent2) -> Laurent2 {
        let mut out = Laurent2::zero();
        for (&a, ca) in &self.terms {
            for (&b, cb) in &rhs.terms {
                out.add_term(add_exp(a, b), ca * cb);
            }
        }
        out
    }
}

impl Neg for &Laurent2 {
    type Output = Laurent2;
    fn neg(self) -> Laurent2 {
        let terms = self.terms.iter().map(|(&e, c)| (e, -c)).collect();
        Laurent2 { terms }
    }
}

impl Neg for Laurent2 {
    type Output = Laurent2;
    fn neg(mut self) -> Laurent2 {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Laurent2> for Laurent2 {
            type Output = Laurent2;
            fn $m(self, rhs: Laurent2) -> Laurent2 {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Laurent2> for Laurent2 {
            type Output = Laurent2;
            fn $m(self, rhs: &'a Laurent2) -> Laurent2 {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// Square matrix of [`Laurent2`] entries.
#[derive(Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    size: usize,
    entries: Vec<Laurent2>,
}

impl PolyMatrix {
    pub fn zero(size: usize) -> Result<Self> {
        if size == 0 {
            return Err(Error::EmptyMatrix);
        }
        Ok(Self { size, entries: vec![Laurent2::zero(); size * size] })
    }

    pub fn identity(size: usize) -> Result<Self> {
        let mut m = Self::zero(size)?;
        for i in 0..size {
            m.set(i, i, Laurent2::one());
        }
        Ok(m)
    }

    pub fn from_rows(rows: Vec<Vec<Laurent2>>) -> Result<Self> {
        let size = rows.len();
        if size == 0 {
            return Err(Error::EmptyMatrix);
        }
        if let Some(bad) = rows.iter().find(|r| r.len() != size) {
            return Err(Error::DimensionMismatch(format!(
                "row of length {} in a {size}x{size} matrix",
                bad.len()
            )));
        }
        Ok(Self { size, entries: rows.into_iter().flatten().collect() })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, r: usize, c: usize) -> &Laurent2 {
        assert!(r < self.size && c < self.size, "index ({r},{c}) out of bounds");
        &self.entries[r * self.size + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Laurent2) {
        assert!(r < self.size && c < self.size, "index ({r},{c}) out of bounds");
        self.entries[r * self.size + c] = v;
    }

    pub fn rows(&self) -> Vec<Vec<Laurent2>> {
        self.entries.chunks(self.size).map(|r| r.to_vec()).collect()
    }

    pub fn is_identity(&self) -> bool {
        (0..self.size).all(|r| {
            (0..self.size).all(|c| {
                let e = self.get(r, c);
                if r == c {
                    e.is_one()
                } else {
                    e.is_zero()
                }
            })
        })
    }

    pub fn mul(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if self.size != other.size {
            return Err(Error::DimensionMismatch(format!("{} vs {}", self.size, other.size)));
        }
        let n = self.size;
        let mut out = PolyMatrix::zero(n)?;
        for r in 0..n {
            for c in 0..n {
                let mut acc = Laurent2::zero();
                for k in 0..n {
                    let a = self.get(r, k);
                    let b = other.get(k, c);
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &(a * b);
                    }
                }
                out.set(r, c, acc);
            }
        }
        Ok(out)
    }

    pub fn sub(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if self.size != other.size {
            return Err(Error::DimensionMismatch(format!("{} vs {}", self.size, other.size)));
        }
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect();
        Ok(PolyMatrix { size: self.size, entries })
    }

    pub fn map(&self, f: impl Fn(&Laurent2) -> Laurent2) -> PolyMatrix {
        PolyMatrix { size: self.size, entries: self.entries.iter().map(f).collect() }
    }

    /// `x*I - self`, the characteristic matrix in the first variable.
    pub fn characteristic(&self) -> PolyMatrix {
        let mut m = self.map(|e| -e);
        for i in 0..self.size {
            let d = &Laurent2::x() + m.get(i, i);
            m.set(i, i, d);
        }
        m
    }

    /// Exact determinant: Laplace expansion up to size 4, fraction-free
    /// elimination above.
    pub fn determinant(&self) -> Laurent2 {
        if self.size <= 4 {
            let rows = self.rows();
            cofactor_det(&rows)
        } else {
            self.bareiss_det()
        }
    }

    pub fn cofactor_determinant(&self) -> Laurent2 {
        cofactor_det(&self.rows())
    }

    pub fn bareiss_det(&self) -> Laurent2 {
        let n = self.size;
        let mut a = self.rows();
        let mut negate = false;
        let mut prev = Laurent2::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                    Some(r) => {
                        a.swap(k, r);
                        negate = !negate;
                    }
                    None => return Laurent2::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                    a[i][j] = num
                        .div_exact(&prev)
                        .expect("fraction-free elimination step divides exactly");
                }
                a[i][k] = Laurent2::zero();
            }
            prev = a[k][k].clone();
        }
        let d = a[n - 1][n - 1].clone();
        if negate {
            -d
        } else {
            d
        }
    }

    pub fn render(&self, names: VarNames) -> String {
        self.rows()
            .iter()
            .map(|r| {
                let cells: Vec<String> = r.iter().map(|e| e.render(names)).collect();
                format!("[{}]", cells.join(", "))
            })
            .collect::<Vec<_>>()
            .join("\n")
    }
}

impl fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyMatrix[\n{}\n]", self.render(VarNames::XY))
    }
}

fn cofactor_det(rows: &[Vec<Laurent2>]) -> Laurent2 {
    let n = rows.len();
    match n {
        0 => Laurent2::one(),
        1 => rows[0][0].clone(),
        2 => &(&rows[0][0] * &rows[1][1]) - &(&rows[0][1] * &rows[1][0]),
        _ => {
            let mut acc = Laurent2::zero();
            for c in 0..n {
                if rows[0][c].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<Laurent2>> = rows[1..]
                    .iter()
                    .map(|r| r.iter().enumerate().filter(|&(j, _)| j != c).map(|(_, e)| e.clone()).collect())
                    .collect();
                let term = &rows[0][c] * &cofactor_det(&minor);
                acc = if c % 2 == 0 { &acc + &term } else { &acc - &term };
            }
            acc
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Laurent2 {
        Laurent2::parse(s).unwrap()
    }

    #[test]
    fn add_examples() {
        assert_eq!(&p("x+y") + &Laurent2::zero(), p("x+y"));
        assert!((&p("x+y") + &p("-x-y")).is_zero());
        assert_eq!(&p("1+x") + &p("1+y"), Laurent2::from_terms([(0, 0, 2), (1, 0, 1), (0, 1, 1)]));
    }

    #[test]
    fn mul_examples() {
        let xm1 = &Laurent2::x() - &Laurent2::one();
        let ym1 = &Laurent2::y() - &Laurent2::one();
        assert_eq!(&p("x+y") * &Laurent2::one(), p("x+y"));
        let prod = &xm1 * &ym1;
        assert_eq!(prod, Laurent2::from_terms([(1, 1, 1), (1, 0, -1), (0, 1, -1), (0, 0, 1)]));
        let prod3 = &prod * &p("x+y");
        let expected = Laurent2::from_terms([
            (2, 1, 1),
            (1, 2, 1),
            (2, 0, -1),
            (1, 1, -2),
            (0, 2, -1),
            (1, 0, 1),
            (0, 1, 1),
        ]);
        assert_eq!(prod3, expected);
    }

    #[test]
    fn substitute_examples() {
        assert_eq!(p("x+y").substitute_unit(Var::Y), p("x+1"));
        assert_eq!(p("x^2+x*y+y^2").substitute_unit(Var::Y), p("x^2+x+1"));
        assert_eq!(p("y^3").substitute_unit(Var::Y), Laurent2::one());
    }

    #[test]
    fn determinant_examples() {
        let m = PolyMatrix::from_rows(vec![vec![p("-y")]]).unwrap();
        assert_eq!(m.determinant(), p("-y"));
        let m = PolyMatrix::from_rows(vec![vec![p("x"), p("t")], vec![p("-t"), p("x+t")]]).unwrap();
        assert_eq!(m.determinant(), p("x^2+x*t+t^2"));
        assert_eq!(PolyMatrix::zero(0).unwrap_err(), Error::EmptyMatrix);
    }

    #[test]
    fn bareiss_handles_zero_pivots() {
        // permutation-like matrix forces row swaps
        let rows = vec![
            vec![p("0"), p("x"), p("0"), p("0"), p("0")],
            vec![p("y"), p("0"), p("0"), p("0"), p("0")],
            vec![p("0"), p("0"), p("0"), p("1"), p("0")],
            vec![p("0"), p("0"), p("x+y"), p("0"), p("0")],
            vec![p("0"), p("0"), p("0"), p("0"), p("2")],
        ];
        let m = PolyMatrix::from_rows(rows).unwrap();
        assert_eq!(m.bareiss_det(), m.cofactor_determinant());
        assert_eq!(m.determinant(), p("2*x^2*y+2*x*y^2"));
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(p("-x^-1-x^-2*y").normalize_unit().unwrap(), p("x+y"));
        assert_eq!(p("x+y").normalize_unit().unwrap(), p("x+y"));
        assert_eq!(p("-1").normalize_unit().unwrap(), p("1"));
        assert_eq!(Laurent2::zero().normalize_unit().unwrap_err(), Error::ZeroPolynomial);
        assert_eq!(
            Error::ZeroPolynomial.to_string(),
            "zero polynomial has no unit normalization"
        );
    }

    #[test]
    fn doteq_examples() {
        assert!(p("x+y").doteq(&p("-x^-1-x^-2*y")));
        assert!(!p("x+y").doteq(&p("x-y")));
        assert!(Laurent2::zero().doteq(&Laurent2::zero()));
        assert!(!Laurent2::zero().doteq(&Laurent2::one()));
    }

    #[test]
    fn abs_coeff_sum_examples() {
        let base = &(&Laurent2::x() - &Laurent2::one()) * &(&Laurent2::y() - &Laurent2::one());
        assert_eq!(Laurent2::zero().abs_coeff_sum(), BigUint::from(0u32));
        assert_eq!((&base * &p("x+y")).abs_coeff_sum(), BigUint::from(8u32));
        let twelve = &base * &p("x^2+x*y+y^2");
        assert_eq!(
            twelve,
            p("x^3*y+x^2*y^2+x*y^3-x^3-2*x^2*y-2*x*y^2-y^3+x^2+x*y+y^2")
        );
        assert_eq!(twelve.abs_coeff_sum(), BigUint::from(12u32));
    }

    #[test]
    fn render_and_parse() {
        assert_eq!(p("x^2+x*y+y^2").to_string(), "x^2+x*y+y^2");
        assert_eq!(p("y+x").to_string(), "x+y");
        assert_eq!(p("-t").render(VarNames::XT), "-t");
        assert_eq!(p("3 - 2*x^-1*y^2").to_string(), "3-2*x^-1*y^2");
        assert_eq!(Laurent2::zero().to_string(), "0");
        assert_eq!(p("2x").to_string(), "2*x");
        assert!(Laurent2::parse("").is_err());
        assert!(Laurent2::parse("x+").is_err());
        assert!(Laurent2::parse("x^").is_err());
        assert!(Laurent2::parse("z").is_err());
        assert_eq!(Laurent2::parse("x^99999999999").unwrap_err(), Error::ExponentOverflow);
    }

    #[test]
    fn div_exact_works() {
        let a = p("x^2+x*y+y^2");
        let b = p("x-y^-1+3");
        let prod = &a * &b;
        assert_eq!(prod.div_exact(&b), Some(a.clone()));
        assert_eq!(prod.div_exact(&a), Some(b));
        assert_eq!(a.div_exact(&p("x+1")), None);
        assert_eq!(p("3*x").div_exact(&p("2")), None);
    }
}
