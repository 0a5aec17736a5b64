//! `GL_{r+1}(Q)` acting on polynomials and points, one-parameter subgroups of
//! the diagonal torus, and the weight pairing between them.
//!
//! Convention: points are row vectors and `(g.f)(v) = f(v g)`, so the variable
//! `x_j` is replaced by the linear form in column `j` of `g`. Consequently
//! `act(g, act(h, f)) == act(g * h, f)`, and `p` lies on `V(g.f)` exactly when
//! `p g` lies on `V(f)`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::algebra::{enumerate_monomials, ExponentVector, HomogeneousPolynomial};
use crate::error::{Error, Result};
use crate::linalg;
use crate::Rational;

/// An invertible `(r+1) x (r+1)` rational matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GroupElement {
    rows: Vec<Vec<Rational>>,
}

impl GroupElement {
    pub fn new(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::InvalidArgument("empty matrix".into()));
        }
        if let Some(bad) = rows.iter().find(|row| row.len() != n) {
            return Err(Error::DimensionMismatch { expected: n, found: bad.len() });
        }
        if linalg::determinant(&rows).is_zero() {
            return Err(Error::SingularMatrix);
        }
        Ok(GroupElement { rows })
    }

    pub fn from_integers(rows: &[Vec<i64>]) -> Result<Self> {
        Self::new(rows.iter().map(|row| row.iter().map(|&x| Rational::from_integer(x.into())).collect()).collect())
    }

    pub fn identity(n: usize) -> Self {
        GroupElement {
            rows: (0..n)
                .map(|i| (0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect())
                .collect(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    pub fn entry(&self, i: usize, j: usize) -> &Rational {
        &self.rows[i][j]
    }

    pub fn determinant(&self) -> Rational {
        linalg::determinant(&self.rows)
    }

    /// Matrix product `self * other`.
    pub fn mul(&self, other: &GroupElement) -> GroupElement {
        let n = self.nvars();
        let rows = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..n).fold(Rational::zero(), |acc, k| acc + &self.rows[i][k] * &other.rows[k][j]))
                    .collect()
            })
            .collect();
        GroupElement { rows }
    }

    pub fn inverse(&self) -> GroupElement {
        GroupElement { rows: linalg::inverse(&self.rows).expect("group elements are invertible") }
    }

    pub fn is_lower_triangular(&self) -> bool {
        let n = self.nvars();
        (0..n).all(|i| (i + 1..n).all(|j| self.rows[i][j].is_zero()))
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.nvars())
    }

    /// Number of entries that differ from the identity matrix.
    pub fn distance_from_identity(&self) -> usize {
        let n = self.nvars();
        (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|&(i, j)| {
                let target = if i == j { Rational::one() } else { Rational::zero() };
                self.rows[i][j] != target
            })
            .count()
    }

    /// `rows` joined by `;`, entries by `,`, each entry written `p/q`.
    pub fn canonical_string(&self) -> String {
        self.rows.iter().map(|row| row.iter().map(|x| format!("{}/{}", x.numer(), x.denom())).join(",")).join(";")
    }

    /// Column `j` as a linear form: `sum_i g[i][j] x_i`.
    fn column_form(&self, j: usize) -> BTreeMap<ExponentVector, Rational> {
        let n = self.nvars();
        (0..n)
            .filter(|&i| !self.rows[i][j].is_zero())
            .map(|i| (ExponentVector::variable(n, i), self.rows[i][j].clone()))
            .collect()
    }

    /// `Some(perm, scales)` when every column has exactly one nonzero entry.
    fn as_monomial_matrix(&self) -> Option<Vec<(usize, Rational)>> {
        let n = self.nvars();
        (0..n)
            .map(|j| {
                let nonzero: Vec<usize> = (0..n).filter(|&i| !self.rows[i][j].is_zero()).collect();
                match nonzero.as_slice() {
                    [i] => Some((*i, self.rows[*i][j].clone())),
                    _ => None,
                }
            })
            .collect()
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupElement[{}]", self.canonical_string())
    }
}

/// A permutation `w` of `{0..r}`; `w[k]` is the image of `k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || std::mem::replace(&mut seen[i], true) {
                return Err(Error::InvalidArgument(format!("{images:?} is not a permutation")));
            }
        }
        Ok(Permutation(images))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(a, b);
        Permutation(images)
    }

    /// All `n!` permutations in lexicographic order of their image lists.
    pub fn all(n: usize) -> Vec<Permutation> {
        (0..n).permutations(n).map(Permutation).collect()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Permutation matrix with row `k` equal to `e_{w[k]}`.
    pub fn matrix(&self) -> GroupElement {
        let n = self.len();
        GroupElement {
            rows: self
                .0
                .iter()
                .map(|&wk| (0..n).map(|j| if j == wk { Rational::one() } else { Rational::zero() }).collect())
                .collect(),
        }
    }

    /// The permutation `w` with `weights[w[0]] <= weights[w[1]] <= ...`,
    /// ties kept in index order. Conjugating by it sorts the weights increasing.
    pub fn sorting_increasing(weights: &[BigInt]) -> Self {
        let mut idx: Vec<usize> = (0..weights.len()).collect();
        idx.sort_by(|&a, &b| weights[a].cmp(&weights[b]).then(a.cmp(&b)));
        Permutation(idx)
    }
}

/// A one-parameter subgroup `t ↦ diag(t^{a_0}, ..., t^{a_r})` of the diagonal torus.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OneParamSubgroup(Vec<BigInt>);

impl OneParamSubgroup {
    pub fn new(weights: Vec<BigInt>) -> Result<Self> {
        if weights.iter().all(Zero::is_zero) {
            return Err(Error::ZeroVector);
        }
        Ok(OneParamSubgroup(weights))
    }

    pub fn from_i64(weights: &[i64]) -> Result<Self> {
        Self::new(weights.iter().map(|&w| BigInt::from(w)).collect())
    }

    pub fn weights(&self) -> &[BigInt] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn is_sl_normalized(&self) -> bool {
        self.0.iter().sum::<BigInt>().is_zero()
    }

    pub fn is_indivisible(&self) -> bool {
        self.0.iter().fold(BigInt::zero(), |g, w| g.gcd(w)).is_one()
    }

    pub fn is_weakly_increasing(&self) -> bool {
        self.0.windows(2).all(|w| w[0] <= w[1])
    }

    pub fn min_weight(&self) -> &BigInt {
        self.0.iter().min().expect("nonempty")
    }

    pub fn max_weight(&self) -> &BigInt {
        self.0.iter().max().expect("nonempty")
    }

    pub fn as_rationals(&self) -> Vec<Rational> {
        self.0.iter().map(|w| Rational::from_integer(w.clone())).collect()
    }
}

impl fmt::Debug for OneParamSubgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().join(","))
    }
}

impl fmt::Display for OneParamSubgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// A point of `P^r` with rational coordinates, scaled so the first nonzero
/// coordinate is `1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ProjectivePoint(Vec<Rational>);

impl ProjectivePoint {
    pub fn new(coords: Vec<Rational>) -> Result<Self> {
        let Some(lead) = coords.iter().find(|c| !c.is_zero()).cloned() else {
            return Err(Error::ZeroVector);
        };
        Ok(ProjectivePoint(coords.into_iter().map(|c| c / &lead).collect()))
    }

    pub fn from_i64(coords: &[i64]) -> Result<Self> {
        Self::new(coords.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    /// The coordinate point `e_i`; `e_0 = [1:0:...:0]` is the base point `e`.
    pub fn coordinate(nvars: usize, i: usize) -> Self {
        ProjectivePoint((0..nvars).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect())
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    /// Parses `r + 1` comma-separated rationals, e.g. `1, 2/3, 0`.
    pub fn parse(text: &str, r: usize) -> Result<Self> {
        let coords = text
            .split(',')
            .map(|part| {
                let part = part.trim();
                part.parse::<Rational>().map_err(|_| Error::Syntax {
                    position: 0,
                    message: format!("invalid rational coordinate {part:?}"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        if coords.len() != r + 1 {
            return Err(Error::DimensionMismatch { expected: r + 1, found: coords.len() });
        }
        Self::new(coords)
    }
}

impl fmt::Debug for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.0.iter().join(":"))
    }
}

impl fmt::Display for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

fn mul_sparse(
    a: &BTreeMap<ExponentVector, Rational>,
    b: &BTreeMap<ExponentVector, Rational>,
) -> BTreeMap<ExponentVector, Rational> {
    let mut out: BTreeMap<ExponentVector, Rational> = BTreeMap::new();
    for (ma, ca) in a {
        for (mb, cb) in b {
            *out.entry(ma.mul(mb)).or_insert_with(Rational::zero) += ca * cb;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// `g.f`, defined by `(g.f)(v) = f(v g)`.
pub fn act(g: &GroupElement, f: &HomogeneousPolynomial) -> Result<HomogeneousPolynomial> {
    let n = f.nvars();
    if g.nvars() != n {
        return Err(Error::DimensionMismatch { expected: n, found: g.nvars() });
    }
    if let Some(columns) = g.as_monomial_matrix() {
        // x_j ↦ s_j x_{i_j}: relabel exponents and rescale.
        let terms = f.terms().map(|(m, c)| {
            let mut exps = vec![0u32; n];
            let mut coeff = c.clone();
            for (j, (i, s)) in columns.iter().enumerate() {
                exps[*i] += m.get(j);
                coeff *= num_traits::pow(s.clone(), m.get(j) as usize);
            }
            (ExponentVector::new(exps), coeff)
        });
        return HomogeneousPolynomial::new(f.r(), terms);
    }

    let d = f.degree() as usize;
    // powers[j][k] = (column j form)^k
    let powers: Vec<Vec<BTreeMap<ExponentVector, Rational>>> = (0..n)
        .map(|j| {
            let form = g.column_form(j);
            let mut acc = vec![BTreeMap::from([(ExponentVector::one(n), Rational::one())])];
            for k in 1..=d {
                let next = mul_sparse(&acc[k - 1], &form);
                acc.push(next);
            }
            acc
        })
        .collect();

    let mut total: BTreeMap<ExponentVector, Rational> = BTreeMap::new();
    for (m, c) in f.terms() {
        let mut product = BTreeMap::from([(ExponentVector::one(n), c.clone())]);
        for (j, column_powers) in powers.iter().enumerate() {
            let e = m.get(j) as usize;
            if e > 0 {
                product = mul_sparse(&product, &column_powers[e]);
            }
        }
        for (mono, coeff) in product {
            *total.entry(mono).or_insert_with(Rational::zero) += coeff;
        }
    }
    HomogeneousPolynomial::new(f.r(), total)
}

/// `p g` as a row vector, renormalized.
pub fn act_point(p: &ProjectivePoint, g: &GroupElement) -> Result<ProjectivePoint> {
    let n = p.nvars();
    if g.nvars() != n {
        return Err(Error::DimensionMismatch { expected: n, found: g.nvars() });
    }
    let coords = (0..n).map(|j| (0..n).fold(Rational::zero(), |acc, i| acc + &p.coords()[i] * g.entry(i, j))).collect();
    ProjectivePoint::new(coords)
}

/// `⟨λ, m⟩ = Σ a_i m_i`.
pub fn pairing(lambda: &OneParamSubgroup, m: &ExponentVector) -> Rational {
    debug_assert_eq!(lambda.nvars(), m.nvars());
    let total: BigInt = lambda.weights().iter().zip(m.exponents()).map(|(a, &e)| a * BigInt::from(e)).sum();
    Rational::from_integer(total)
}

/// `⟨λ, v⟩` for a rational vector `v`.
pub fn pairing_vector(lambda: &OneParamSubgroup, v: &[Rational]) -> Rational {
    linalg::dot(&lambda.as_rationals(), v)
}

pub fn norm_squared(lambda: &OneParamSubgroup) -> Rational {
    Rational::from_integer(lambda.weights().iter().map(|a| a * a).sum())
}

/// Hilbert–Mumford weight: the least pairing of `λ` with a support monomial of `f`.
pub fn mu(f: &HomogeneousPolynomial, lambda: &OneParamSubgroup) -> Result<Rational> {
    if lambda.nvars() != f.nvars() {
        return Err(Error::DimensionMismatch { expected: f.nvars(), found: lambda.nvars() });
    }
    Ok(f.support().map(|m| pairing(lambda, m)).min().expect("polynomials are nonzero"))
}

/// The order `<_λ`: weight first, canonical lex (x_r most significant) on ties.
pub fn monomial_cmp(lambda: &OneParamSubgroup, a: &ExponentVector, b: &ExponentVector) -> Ordering {
    pairing(lambda, a).cmp(&pairing(lambda, b)).then_with(|| a.lex_cmp(b))
}

/// Degree-`degree` monomials ascending in `<_λ`.
pub fn enumerate_monomials_by(lambda: &OneParamSubgroup, degree: u32) -> Vec<ExponentVector> {
    let mut all = enumerate_monomials(lambda.nvars() - 1, degree);
    all.sort_by(|a, b| monomial_cmp(lambda, a, b));
    all
}

/// `w ⋆ λ`, compatible with `act`: `mu(act(w, f), w ⋆ λ) == mu(f, λ)`.
pub fn conjugate_by_permutation(w: &Permutation, lambda: &OneParamSubgroup) -> OneParamSubgroup {
    OneParamSubgroup(w.images().iter().map(|&k| lambda.weights()[k].clone()).collect())
}

/// Representative of the permutation-conjugacy class: weights sorted decreasing.
pub fn canonical_class_rep(lambda: &OneParamSubgroup) -> OneParamSubgroup {
    let mut w = lambda.0.clone();
    w.sort_by(|a, b| b.cmp(a));
    OneParamSubgroup(w)
}

/// The indivisible integer vector positively proportional to `v`.
pub fn primitive(v: &[Rational]) -> Result<OneParamSubgroup> {
    if v.iter().all(Zero::is_zero) {
        return Err(Error::ZeroVector);
    }
    let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * Rational::from_integer(lcm.clone())).to_integer()).collect();
    let gcd = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    let gcd = gcd.abs();
    OneParamSubgroup::new(ints.into_iter().map(|x| x / &gcd).collect())
}
