//! Monomials, homogeneous polynomials over `Q`, Hilbert-function values and
//! the text format for polynomials.
//!
//! Monomials are ordered graded-lexicographically with `x_i < x_{i+1}`: after
//! comparing total degree, the exponent of `x_r` is compared first, then
//! `x_{r-1}`, and so on. This single order is shared by enumeration,
//! serialization and every deterministic tie-break in the crate.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::Rational;

/// A monomial `x_0^{e_0} ⋯ x_r^{e_r}`, equivalently a torus weight in `Z^{r+1}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExponentVector(Vec<u32>);

impl ExponentVector {
    pub fn new(exponents: Vec<u32>) -> Self {
        ExponentVector(exponents)
    }

    /// The monomial `x_index` in `nvars` variables.
    pub fn variable(nvars: usize, index: usize) -> Self {
        let mut e = vec![0; nvars];
        e[index] = 1;
        ExponentVector(e)
    }

    pub fn one(nvars: usize) -> Self {
        ExponentVector(vec![0; nvars])
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn get(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn mul(&self, other: &ExponentVector) -> ExponentVector {
        debug_assert_eq!(self.nvars(), other.nvars());
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other` when `other` divides `self`.
    pub fn checked_div(&self, other: &ExponentVector) -> Option<ExponentVector> {
        self.0.iter().zip(&other.0).map(|(a, b)| a.checked_sub(*b)).collect::<Option<Vec<_>>>().map(ExponentVector)
    }

    /// Lexicographic comparison with `x_r` most significant.
    pub fn lex_cmp(&self, other: &ExponentVector) -> Ordering {
        self.0.iter().rev().cmp(other.0.iter().rev())
    }

    pub fn as_rationals(&self) -> Vec<Rational> {
        self.0.iter().map(|&e| Rational::from_integer(BigInt::from(e))).collect()
    }
}

impl Ord for ExponentVector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.lex_cmp(other))
    }
}

impl PartialOrd for ExponentVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{i}")?;
            } else {
                write!(f, "x{i}^{e}")?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

/// All monomials of degree `degree` in `x_0..x_r`, ascending in the canonical order.
pub fn enumerate_monomials(r: usize, degree: u32) -> Vec<ExponentVector> {
    fn fill(prefix: &mut Vec<u32>, remaining: u32, slots: usize, out: &mut Vec<ExponentVector>) {
        if slots == 1 {
            prefix.push(remaining);
            out.push(ExponentVector(prefix.clone()));
            prefix.pop();
            return;
        }
        for e in 0..=remaining {
            prefix.push(e);
            fill(prefix, remaining - e, slots - 1, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    fill(&mut Vec::with_capacity(r + 1), degree, r + 1, &mut out);
    out.sort();
    out
}

/// `C(r + t, r)`, the number of monomials of degree `t` in `r + 1` variables.
pub fn monomial_count(r: usize, t: u32) -> u128 {
    binomial(r as u128 + t as u128, r as u128)
}

/// Hilbert polynomial data of a degree-`d` hypersurface in `P^r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HilbertData {
    pub r: usize,
    pub d: u32,
}

impl HilbertData {
    pub fn new(r: usize, d: u32) -> Result<Self> {
        if r < 1 || d < 1 {
            return Err(Error::InvalidArgument(format!("need r >= 1 and d >= 1, got r={r}, d={d}")));
        }
        Ok(HilbertData { r, d })
    }

    /// `P(t) = C(r+t, r) - C(r+t-d, r)`, valid for `t >= d`.
    pub fn p(&self, t: u32) -> Result<u128> {
        self.check(t)?;
        Ok(monomial_count(self.r, t) - monomial_count(self.r, t - self.d))
    }

    /// `Q(t) = C(r+t, r) - P(t)`: the dimension of the degree-`t` part of `(f)`.
    pub fn q(&self, t: u32) -> Result<u128> {
        Ok(monomial_count(self.r, t) - self.p(t)?)
    }

    pub fn gotzmann(&self) -> u32 {
        self.d
    }

    fn check(&self, t: u32) -> Result<()> {
        if t < self.d {
            return Err(Error::BelowGotzmann { t, d: self.d });
        }
        Ok(())
    }
}

/// `(P(t), Q(t))` for a degree-`d` hypersurface in `P^r`.
pub fn hilbert_values(r: usize, d: u32, t: u32) -> Result<(u128, u128)> {
    let data = HilbertData::new(r, d)?;
    Ok((data.p(t)?, data.q(t)?))
}

/// A nonzero homogeneous polynomial of positive degree in `x_0..x_r`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct HomogeneousPolynomial {
    nvars: usize,
    degree: u32,
    terms: BTreeMap<ExponentVector, Rational>,
}

impl HomogeneousPolynomial {
    /// Builds a polynomial from terms, merging repeated monomials and
    /// dropping zero coefficients.
    pub fn new<I>(r: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (ExponentVector, Rational)>,
    {
        if r < 1 {
            return Err(Error::InvalidArgument("ambient dimension r must be at least 1".into()));
        }
        let nvars = r + 1;
        let mut map: BTreeMap<ExponentVector, Rational> = BTreeMap::new();
        let mut degree: Option<u32> = None;
        for (m, c) in terms {
            if m.nvars() != nvars {
                return Err(Error::DimensionMismatch { expected: nvars, found: m.nvars() });
            }
            match degree {
                None => degree = Some(m.degree()),
                Some(d) if d != m.degree() => {
                    return Err(Error::NonHomogeneous { first: d, second: m.degree() });
                }
                _ => {}
            }
            *map.entry(m).or_insert_with(Rational::zero) += c;
        }
        map.retain(|_, c| !c.is_zero());
        let Some((first, _)) = map.iter().next() else {
            return Err(Error::ZeroPolynomial);
        };
        let degree = first.degree();
        if degree == 0 {
            return Err(Error::ConstantPolynomial);
        }
        Ok(HomogeneousPolynomial { nvars, degree, terms: map })
    }

    /// The monomial `c * m`.
    pub fn monomial(r: usize, m: ExponentVector, c: Rational) -> Result<Self> {
        Self::new(r, [(m, c)])
    }

    pub fn r(&self) -> usize {
        self.nvars - 1
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Terms in ascending canonical monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&ExponentVector, &Rational)> + '_ {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &ExponentVector> + '_ {
        self.terms.keys()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &ExponentVector) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// `f * m` for a monomial `m`.
    pub fn multiply(&self, m: &ExponentVector) -> Result<Self> {
        if m.nvars() != self.nvars {
            return Err(Error::DimensionMismatch { expected: self.nvars, found: m.nvars() });
        }
        Ok(HomogeneousPolynomial {
            nvars: self.nvars,
            degree: self.degree + m.degree(),
            terms: self.terms.iter().map(|(e, c)| (e.mul(m), c.clone())).collect(),
        })
    }

    pub fn scale(&self, c: &Rational) -> Result<Self> {
        if c.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(HomogeneousPolynomial {
            nvars: self.nvars,
            degree: self.degree,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        })
    }

    pub fn evaluate(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.nvars {
            return Err(Error::DimensionMismatch { expected: self.nvars, found: point.len() });
        }
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (x, &e) in point.iter().zip(m.exponents()) {
                term *= num_traits::pow(x.clone(), e as usize);
            }
            total += term;
        }
        Ok(total)
    }

    /// The largest power of `x_0` appearing in any support monomial.
    pub fn max_x0_power(&self) -> u32 {
        self.terms.keys().map(|m| m.get(0)).max().unwrap_or(0)
    }

    /// Parses the text format `term (("+"|"-") term)*`, where
    /// `term := [sign] [rational "*"] factor ("*" factor)*` and
    /// `factor := "x" index ["^" exponent]`. Whitespace is ignored.
    pub fn parse(text: &str, r: usize) -> Result<Self> {
        Parser::new(text, r).parse()
    }
}

impl fmt::Debug for HomogeneousPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HomogeneousPolynomial(r={}, {})", self.r(), self)
    }
}

/// Canonical text: terms in descending monomial order, unit coefficients
/// elided, rationals written `p/q`.
impl fmt::Display for HomogeneousPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            let magnitude = c.abs();
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if !magnitude.is_one() {
                write!(f, "{magnitude}*")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

struct Parser {
    chars: Vec<(usize, char)>,
    pos: usize,
    r: usize,
    end: usize,
}

impl Parser {
    fn new(text: &str, r: usize) -> Self {
        let chars: Vec<(usize, char)> = text.char_indices().filter(|(_, c)| !c.is_whitespace()).collect();
        Parser { chars, pos: 0, r, end: text.len() }
    }

    fn offset(&self) -> usize {
        self.chars.get(self.pos).map(|(o, _)| *o).unwrap_or(self.end)
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|(_, c)| *c)
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax { position: self.offset(), message: message.into() })
    }

    fn sign(&mut self) -> Option<bool> {
        match self.peek() {
            Some('+') => {
                self.pos += 1;
                Some(false)
            }
            Some('-') | Some('−') => {
                self.pos += 1;
                Some(true)
            }
            _ => None,
        }
    }

    fn digits(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.error("expected digits");
        }
        let s: String = self.chars[start..self.pos].iter().map(|(_, c)| c).collect();
        Ok(s.parse().expect("ascii digits"))
    }

    fn small(&mut self, what: &str) -> Result<u32> {
        let at = self.offset();
        let v = self.digits()?;
        u32::try_from(v).map_err(|_| Error::Syntax { position: at, message: format!("{what} too large") })
    }

    fn rational(&mut self) -> Result<Rational> {
        let num = self.digits()?;
        if self.peek() == Some('/') {
            self.pos += 1;
            let den = self.digits()?;
            if den.is_zero() {
                return self.error("zero denominator");
            }
            return Ok(Rational::new(num, den));
        }
        Ok(Rational::from_integer(num))
    }

    fn factor(&mut self, exps: &mut [u32]) -> Result<()> {
        if self.peek() != Some('x') {
            return self.error("expected variable x<index>");
        }
        self.pos += 1;
        let index = self.small("variable index")? as usize;
        if index > self.r {
            return Err(Error::UnknownVariable { index, r: self.r });
        }
        let exponent = if self.peek() == Some('^') {
            self.pos += 1;
            self.small("exponent")?
        } else {
            1
        };
        exps[index] += exponent;
        Ok(())
    }

    fn term(&mut self, negative: bool) -> Result<(ExponentVector, Rational)> {
        let mut coeff = Rational::one();
        if matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            coeff = self.rational()?;
            if self.peek() != Some('*') {
                return self.error("expected '*' after coefficient");
            }
            self.pos += 1;
        }
        let mut exps = vec![0u32; self.r + 1];
        self.factor(&mut exps)?;
        while self.peek() == Some('*') {
            self.pos += 1;
            self.factor(&mut exps)?;
        }
        if negative {
            coeff = -coeff;
        }
        Ok((ExponentVector(exps), coeff))
    }

    fn parse(mut self) -> Result<HomogeneousPolynomial> {
        if self.r < 1 {
            return Err(Error::InvalidArgument("ambient dimension r must be at least 1".into()));
        }
        if self.chars.is_empty() {
            return self.error("empty polynomial");
        }
        let mut terms = Vec::new();
        let first_negative = self.sign().unwrap_or(false);
        terms.push(self.term(first_negative)?);
        while self.pos < self.chars.len() {
            let Some(negative) = self.sign() else {
                return self.error("expected '+' or '-' between terms");
            };
            terms.push(self.term(negative)?);
        }
        HomogeneousPolynomial::new(self.r, terms)
    }
}


#[cfg(test)]
mod props {
    use super::*;
    use proptest::prelude::*;

    fn poly_strategy() -> impl Strategy<Value = HomogeneousPolynomial> {
        (1usize..=3, 1u32..=4).prop_flat_map(|(r, d)| {
            let monos = enumerate_monomials(r, d);
            let n = monos.len();
            proptest::collection::vec((0..n, -5i64..=5, 1i64..=4), 1..6).prop_filter_map(
                "zero polynomial",
                move |picks| {
                    let terms =
                        picks.into_iter().map(|(i, a, b)| (monos[i].clone(), Rational::new(a.into(), b.into())));
                    HomogeneousPolynomial::new(r, terms).ok()
                },
            )
        })
    }

    proptest! {
        #[test]
        fn parse_serialize_round_trip(f in poly_strategy()) {
            let text = f.to_string();
            let back = HomogeneousPolynomial::parse(&text, f.r()).unwrap();
            prop_assert_eq!(&back, &f);
            prop_assert_eq!(back.to_string(), text);
        }

        #[test]
        fn scalar_multiples_parse_proportionally(f in poly_strategy(), c in 1i64..7) {
            let scaled = f.scale(&Rational::from_integer(c.into())).unwrap();
            let back = HomogeneousPolynomial::parse(&scaled.to_string(), f.r()).unwrap();
            for (m, v) in f.terms() {
                prop_assert_eq!(back.coefficient(m), v * Rational::from_integer(c.into()));
            }
            prop_assert_eq!(back.len(), f.len());
        }

        #[test]
        fn multiply_matches_convolution(f in poly_strategy(), picks in proptest::collection::vec(0u32..3, 4)) {
            let m = ExponentVector::new(picks[..f.nvars()].to_vec());
            let product = f.multiply(&m).unwrap();
            prop_assert_eq!(product.degree(), f.degree() + m.degree());
            // every monomial of the target degree: coefficient is f's coefficient at m' / m
            for target in enumerate_monomials(f.r(), product.degree()) {
                let expected = target.checked_div(&m).map(|q| f.coefficient(&q)).unwrap_or_else(Rational::zero);
                prop_assert_eq!(product.coefficient(&target), expected);
            }
        }
    }
}
