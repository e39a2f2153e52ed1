//! Dense polynomial algebra over GF(q): univariate, bivariate, homogeneous
//! trivariate, and square matrices of univariate polynomials.
//!
//! Arithmetic operators on references panic when the operands live over
//! different fields; the `try_*`/`uni_arith` entry points report
//! [`PolyError::FieldMismatch`] instead.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::ops::{Add, Mul, Neg, Sub};

use thiserror::Error;

use crate::gf::{Elem, Field};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("gcd of two zero polynomials is undefined")]
    BothZero,
    #[error("operation needs a nonzero polynomial")]
    ZeroPolynomial,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("total degree {degree} exceeds homogenization degree {n}")]
    DegreeTooSmall { degree: usize, n: usize },
    #[error("monomial exponents do not sum to {0}")]
    NotHomogeneous(usize),
    #[error("matrix is not square")]
    NotSquare,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UniOp {
    Add,
    Sub,
    Mul,
    /// Multiply `f` by the constant term of `g`.
    Scale,
}

/// Univariate polynomial, constant term first, no trailing zeros.
#[derive(Clone, PartialEq, Eq)]
pub struct UniPoly {
    field: Field,
    coeffs: Vec<Elem>,
}

impl std::fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "UniPoly({})", self.render("x"))
    }
}

impl UniPoly {
    pub fn new(field: &Field, mut coeffs: Vec<Elem>) -> UniPoly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { field: field.clone(), coeffs }
    }

    pub fn zero(field: &Field) -> UniPoly {
        UniPoly { field: field.clone(), coeffs: Vec::new() }
    }

    pub fn constant(field: &Field, c: Elem) -> UniPoly {
        UniPoly::new(field, vec![c])
    }

    pub fn one(field: &Field) -> UniPoly {
        UniPoly::constant(field, Elem::ONE)
    }

    /// `c * x^k`
    pub fn monomial(field: &Field, c: Elem, k: usize) -> UniPoly {
        let mut coeffs = vec![Elem::ZERO; k + 1];
        coeffs[k] = c;
        UniPoly::new(field, coeffs)
    }

    /// `c0 + c1 * x`
    pub fn linear(field: &Field, c0: Elem, c1: Elem) -> UniPoly {
        UniPoly::new(field, vec![c0, c1])
    }

    /// `prod (x - r)` over the given roots.
    pub fn from_roots(field: &Field, roots: &[Elem]) -> UniPoly {
        roots
            .iter()
            .fold(UniPoly::one(field), |acc, &r| &acc * &UniPoly::linear(field, field.neg(r), Elem::ONE))
    }

    /// `x^q - x`
    pub fn field_polynomial(field: &Field) -> UniPoly {
        let q = field.q() as usize;
        &UniPoly::monomial(field, Elem::ONE, q) - &UniPoly::monomial(field, Elem::ONE, 1)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Elem {
        self.coeffs.get(i).copied().unwrap_or(Elem::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Elem {
        self.coeffs.last().copied().unwrap_or(Elem::ZERO)
    }

    fn check(&self, other: &UniPoly) -> Result<(), PolyError> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(PolyError::FieldMismatch)
        }
    }

    pub fn scale(&self, c: Elem) -> UniPoly {
        let f = &self.field;
        UniPoly::new(f, self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    /// Horner evaluation.
    pub fn eval(&self, x: Elem) -> Elem {
        let f = &self.field;
        self.coeffs.iter().rev().fold(Elem::ZERO, |acc, &c| f.add(f.mul(acc, x), c))
    }

    pub fn pow(&self, mut k: u64) -> UniPoly {
        let mut base = self.clone();
        let mut acc = UniPoly::one(&self.field);
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn monic(&self) -> UniPoly {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.field.inv(self.leading()).expect("nonzero leading coefficient");
        self.scale(inv)
    }

    pub fn divrem(&self, divisor: &UniPoly) -> Result<(UniPoly, UniPoly), PolyError> {
        self.check(divisor)?;
        let f = &self.field;
        let dd = divisor.degree().ok_or(PolyError::DivisionByZero)?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((UniPoly::zero(f), self.clone()));
        }
        let lead_inv = f.inv(divisor.leading()).expect("nonzero leading coefficient");
        let mut quo = vec![Elem::ZERO; rem.len() - dd];
        for shift in (0..quo.len()).rev() {
            let top = rem[shift + dd];
            if top.is_zero() {
                continue;
            }
            let factor = f.mul(top, lead_inv);
            quo[shift] = factor;
            for (i, &c) in divisor.coeffs.iter().enumerate() {
                rem[shift + i] = f.sub(rem[shift + i], f.mul(factor, c));
            }
        }
        Ok((UniPoly::new(f, quo), UniPoly::new(f, rem)))
    }

    /// Exact quotient, `None` when the division leaves a remainder.
    pub fn div_exact(&self, divisor: &UniPoly) -> Option<UniPoly> {
        match self.divrem(divisor) {
            Ok((q, r)) if r.is_zero() => Some(q),
            _ => None,
        }
    }

    pub fn render(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, &c)| {
                let mono = match k {
                    0 => String::new(),
                    1 => var.to_string(),
                    _ => format!("{var}^{k}"),
                };
                match (c == Elem::ONE, mono.is_empty()) {
                    (_, true) => c.to_string(),
                    (true, false) => mono,
                    (false, false) => format!("{c}*{mono}"),
                }
            })
            .collect();
        terms.join(" + ")
    }
}

fn add_coeffs(field: &Field, a: &[Elem], b: &[Elem], subtract: bool) -> Vec<Elem> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(Elem::ZERO);
            let y = b.get(i).copied().unwrap_or(Elem::ZERO);
            if subtract {
                field.sub(x, y)
            } else {
                field.add(x, y)
            }
        })
        .collect()
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        self.check(rhs).expect("field mismatch");
        UniPoly::new(&self.field, add_coeffs(&self.field, &self.coeffs, &rhs.coeffs, false))
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        self.check(rhs).expect("field mismatch");
        UniPoly::new(&self.field, add_coeffs(&self.field, &self.coeffs, &rhs.coeffs, true))
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        let f = &self.field;
        UniPoly::new(f, self.coeffs.iter().map(|&c| f.neg(c)).collect())
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        self.check(rhs).expect("field mismatch");
        let f = &self.field;
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero(f);
        }
        let mut out = vec![Elem::ZERO; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        UniPoly::new(f, out)
    }
}

/// Checked binary arithmetic.
pub fn uni_arith(f: &UniPoly, g: &UniPoly, op: UniOp) -> Result<UniPoly, PolyError> {
    f.check(g)?;
    Ok(match op {
        UniOp::Add => f + g,
        UniOp::Sub => f - g,
        UniOp::Mul => f * g,
        UniOp::Scale => f.scale(g.coeff(0)),
    })
}

/// Monic gcd by the Euclidean algorithm; `gcd(f, 0) = monic(f)`.
pub fn uni_gcd(f: &UniPoly, g: &UniPoly) -> Result<UniPoly, PolyError> {
    f.check(g)?;
    if f.is_zero() && g.is_zero() {
        return Err(PolyError::BothZero);
    }
    let (mut a, mut b) = (f.clone(), g.clone());
    while !b.is_zero() {
        let (_, r) = a.divrem(&b)?;
        a = std::mem::replace(&mut b, r);
    }
    Ok(a.monic())
}

/// Roots in GF(q) with multiplicities, in ascending element order.
pub fn roots_with_multiplicity(f: &UniPoly) -> Result<Vec<(Elem, usize)>, PolyError> {
    if f.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    let field = f.field().clone();
    let mut rest = f.clone();
    let mut out = Vec::new();
    for gamma in field.elements() {
        if rest.eval(gamma) != Elem::ZERO {
            continue;
        }
        let lin = UniPoly::linear(&field, field.neg(gamma), Elem::ONE);
        let mut mult = 0;
        while let Some(q) = rest.div_exact(&lin) {
            rest = q;
            mult += 1;
        }
        out.push((gamma, mult));
    }
    Ok(out)
}

/// Bivariate polynomial `sum c[i][j] X^i Y^j`.
///
/// Rows are indexed by the exponent of the first variable. Trailing zero
/// rows and columns are trimmed, so the zero polynomial has no rows.
#[derive(Clone, PartialEq, Eq)]
pub struct BiPoly {
    field: Field,
    grid: Vec<Vec<Elem>>,
}

impl std::fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "BiPoly({})", self.render("X", "Y"))
    }
}

impl BiPoly {
    pub fn new(field: &Field, mut grid: Vec<Vec<Elem>>) -> BiPoly {
        for row in grid.iter_mut() {
            while row.last().is_some_and(|c| c.is_zero()) {
                row.pop();
            }
        }
        while grid.last().is_some_and(|r| r.is_empty()) {
            grid.pop();
        }
        BiPoly { field: field.clone(), grid }
    }

    pub fn zero(field: &Field) -> BiPoly {
        BiPoly { field: field.clone(), grid: Vec::new() }
    }

    pub fn constant(field: &Field, c: Elem) -> BiPoly {
        BiPoly::new(field, vec![vec![c]])
    }

    /// `c X^i Y^j`
    pub fn monomial(field: &Field, c: Elem, i: usize, j: usize) -> BiPoly {
        let mut grid = vec![Vec::new(); i + 1];
        grid[i] = vec![Elem::ZERO; j + 1];
        grid[i][j] = c;
        BiPoly::new(field, grid)
    }

    /// Embeds a polynomial in the first variable.
    pub fn from_first(p: &UniPoly) -> BiPoly {
        BiPoly::new(p.field(), p.coeffs().iter().map(|&c| vec![c]).collect())
    }

    /// Embeds a polynomial in the second variable.
    pub fn from_second(p: &UniPoly) -> BiPoly {
        BiPoly::new(p.field(), vec![p.coeffs().to_vec()])
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeff(&self, i: usize, j: usize) -> Elem {
        self.grid.get(i).and_then(|r| r.get(j)).copied().unwrap_or(Elem::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.grid.is_empty()
    }

    /// Iterates over nonzero terms as `(i, j, coeff)`.
    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, Elem)> + '_ {
        self.grid
            .iter()
            .enumerate()
            .flat_map(|(i, row)| row.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(move |(j, &c)| (i, j, c)))
    }

    pub fn total_degree(&self) -> Option<usize> {
        self.terms().map(|(i, j, _)| i + j).max()
    }

    pub fn degree_first(&self) -> Option<usize> {
        self.grid.len().checked_sub(1)
    }

    pub fn scale(&self, c: Elem) -> BiPoly {
        let f = &self.field;
        BiPoly::new(f, self.grid.iter().map(|r| r.iter().map(|&a| f.mul(a, c)).collect()).collect())
    }

    pub fn pow(&self, mut k: u64) -> BiPoly {
        let mut base = self.clone();
        let mut acc = BiPoly::constant(&self.field, Elem::ONE);
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn eval(&self, x: Elem, y: Elem) -> Elem {
        self.eval_second(y).eval(x)
    }

    /// Substitutes the second variable, giving a polynomial in the first.
    pub fn eval_second(&self, y: Elem) -> UniPoly {
        let f = &self.field;
        let coeffs = self
            .grid
            .iter()
            .map(|row| row.iter().rev().fold(Elem::ZERO, |acc, &c| f.add(f.mul(acc, y), c)))
            .collect();
        UniPoly::new(f, coeffs)
    }

    pub fn render(&self, x: &str, y: &str) -> String {
        let mut terms: Vec<(usize, usize, Elem)> = self.terms().collect();
        if terms.is_empty() {
            return "0".to_string();
        }
        terms.sort_by(|a, b| (b.0 + b.1, b.0).cmp(&(a.0 + a.1, a.0)));
        let parts: Vec<String> =
            terms.into_iter().map(|(i, j, c)| render_term(c, &[(x, i), (y, j)])).collect();
        parts.join(" + ")
    }
}

fn render_term(c: Elem, vars: &[(&str, usize)]) -> String {
    let mut mono = String::new();
    for &(v, e) in vars {
        if e == 0 {
            continue;
        }
        if !mono.is_empty() {
            mono.push('*');
        }
        mono.push_str(v);
        if e > 1 {
            let _ = write!(mono, "^{e}");
        }
    }
    match (c == Elem::ONE, mono.is_empty()) {
        (_, true) => c.to_string(),
        (true, false) => mono,
        (false, false) => format!("{c}*{mono}"),
    }
}

fn combine_grids(field: &Field, a: &[Vec<Elem>], b: &[Vec<Elem>], subtract: bool) -> Vec<Vec<Elem>> {
    let rows = a.len().max(b.len());
    let empty = Vec::new();
    (0..rows)
        .map(|i| add_coeffs(field, a.get(i).unwrap_or(&empty), b.get(i).unwrap_or(&empty), subtract))
        .collect()
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        assert!(self.field == rhs.field, "field mismatch");
        BiPoly::new(&self.field, combine_grids(&self.field, &self.grid, &rhs.grid, false))
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        assert!(self.field == rhs.field, "field mismatch");
        BiPoly::new(&self.field, combine_grids(&self.field, &self.grid, &rhs.grid, true))
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        assert!(self.field == rhs.field, "field mismatch");
        let f = &self.field;
        if self.is_zero() || rhs.is_zero() {
            return BiPoly::zero(f);
        }
        let cols = self.grid.iter().map(Vec::len).max().unwrap_or(0) + rhs.grid.iter().map(Vec::len).max().unwrap_or(0);
        let mut out = vec![vec![Elem::ZERO; cols]; self.grid.len() + rhs.grid.len() - 1];
        for (i1, r1) in self.grid.iter().enumerate() {
            for (j1, &a) in r1.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (i2, r2) in rhs.grid.iter().enumerate() {
                    let row = &mut out[i1 + i2];
                    for (j2, &b) in r2.iter().enumerate() {
                        row[j1 + j2] = f.add(row[j1 + j2], f.mul(a, b));
                    }
                }
            }
        }
        BiPoly::new(f, out)
    }
}

/// Homogeneous polynomial in `U, V, W` of fixed degree `n`.
#[derive(Clone, PartialEq, Eq)]
pub struct TriHomPoly {
    field: Field,
    degree: usize,
    /// (i, j, k) -> coefficient of U^i V^j W^k; zero coefficients are absent.
    terms: BTreeMap<(usize, usize, usize), Elem>,
}

impl std::fmt::Debug for TriHomPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "TriHomPoly[{}]({})", self.degree, self.render())
    }
}

impl TriHomPoly {
    pub fn new(
        field: &Field,
        degree: usize,
        terms: impl IntoIterator<Item = ((usize, usize, usize), Elem)>,
    ) -> Result<TriHomPoly, PolyError> {
        let mut map = BTreeMap::new();
        for ((i, j, k), c) in terms {
            if i + j + k != degree {
                return Err(PolyError::NotHomogeneous(degree));
            }
            let slot = map.entry((i, j, k)).or_insert(Elem::ZERO);
            *slot = field.add(*slot, c);
        }
        map.retain(|_, c| !c.is_zero());
        Ok(TriHomPoly { field: field.clone(), degree, terms: map })
    }

    /// The linear form `a U + b V + c W`.
    pub fn linear(field: &Field, a: Elem, b: Elem, c: Elem) -> TriHomPoly {
        TriHomPoly::new(field, 1, [((1, 0, 0), a), ((0, 1, 0), b), ((0, 0, 1), c)]).expect("degree 1 terms")
    }

    pub fn one(field: &Field) -> TriHomPoly {
        TriHomPoly::new(field, 0, [((0, 0, 0), Elem::ONE)]).expect("constant")
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero monomials `((i, j, k), coeff)` in ascending exponent order.
    pub fn monomials(&self) -> impl DoubleEndedIterator<Item = ((usize, usize, usize), Elem)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn coeff(&self, i: usize, j: usize, k: usize) -> Elem {
        self.terms.get(&(i, j, k)).copied().unwrap_or(Elem::ZERO)
    }

    pub fn eval(&self, u: Elem, v: Elem, w: Elem) -> Elem {
        let f = &self.field;
        self.terms.iter().fold(Elem::ZERO, |acc, (&(i, j, k), &c)| {
            let t = f.mul(c, f.mul(f.pow(u, i as u64), f.mul(f.pow(v, j as u64), f.pow(w, k as u64))));
            f.add(acc, t)
        })
    }

    /// `g(U, v, w)` as a polynomial in `U`.
    pub fn restrict(&self, v: Elem, w: Elem) -> UniPoly {
        let f = &self.field;
        let mut coeffs = vec![Elem::ZERO; self.degree + 1];
        for (&(i, j, k), &c) in &self.terms {
            let t = f.mul(c, f.mul(f.pow(v, j as u64), f.pow(w, k as u64)));
            coeffs[i] = f.add(coeffs[i], t);
        }
        UniPoly::new(f, coeffs)
    }

    /// Sets `W = 1`; the result is a polynomial in `U` (first) and `V` (second).
    pub fn dehomogenize(&self) -> BiPoly {
        self.terms.iter().fold(BiPoly::zero(&self.field), |acc, (&(i, j, _), &c)| {
            &acc + &BiPoly::monomial(&self.field, c, i, j)
        })
    }

    pub fn scale(&self, c: Elem) -> TriHomPoly {
        let f = &self.field;
        TriHomPoly::new(f, self.degree, self.terms.iter().map(|(&e, &a)| (e, f.mul(a, c)))).expect("same exponents")
    }

    pub fn pow(&self, k: u32) -> TriHomPoly {
        (0..k).fold(TriHomPoly::one(&self.field), |acc, _| &acc * self)
    }

    /// Returns `s` with `other = s * self` when the two differ by a nonzero scalar.
    pub fn proportional_to(&self, other: &TriHomPoly) -> Option<Elem> {
        if self.field != other.field || self.degree != other.degree || self.is_zero() || other.is_zero() {
            return None;
        }
        let (&e, &c) = self.terms.iter().next()?;
        let s = self.field.div(other.coeff(e.0, e.1, e.2), c).ok()?;
        (!s.is_zero() && &self.scale(s) == other).then_some(s)
    }

    /// Renders monomials in decreasing lexicographic exponent order, e.g.
    /// `U^2 + 3*U*W + 2*W^2`.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let parts: Vec<String> =
            self.terms.iter().rev().map(|(&(i, j, k), &c)| render_term(c, &[("U", i), ("V", j), ("W", k)])).collect();
        parts.join(" + ")
    }
}

impl Mul for &TriHomPoly {
    type Output = TriHomPoly;
    fn mul(self, rhs: &TriHomPoly) -> TriHomPoly {
        assert!(self.field == rhs.field, "field mismatch");
        let f = &self.field;
        let mut out: BTreeMap<(usize, usize, usize), Elem> = BTreeMap::new();
        for (&(i1, j1, k1), &a) in &self.terms {
            for (&(i2, j2, k2), &b) in &rhs.terms {
                let slot = out.entry((i1 + i2, j1 + j2, k1 + k2)).or_insert(Elem::ZERO);
                *slot = f.add(*slot, f.mul(a, b));
            }
        }
        TriHomPoly::new(f, self.degree + rhs.degree, out).expect("degrees add")
    }
}

/// `W^n f(U/W, V/W)`.
pub fn homogenize(f: &BiPoly, n: usize) -> Result<TriHomPoly, PolyError> {
    let degree = f.total_degree().unwrap_or(0);
    if degree > n {
        return Err(PolyError::DegreeTooSmall { degree, n });
    }
    TriHomPoly::new(f.field(), n, f.terms().map(|(i, j, c)| ((i, j, n - i - j), c)))
}

/// Square matrix of univariate polynomials over one field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    field: Field,
    rows: Vec<Vec<UniPoly>>,
}

impl PolyMatrix {
    pub fn new(field: &Field, rows: Vec<Vec<UniPoly>>) -> Result<PolyMatrix, PolyError> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(PolyError::NotSquare);
        }
        if rows.iter().flatten().any(|p| p.field() != field) {
            return Err(PolyError::FieldMismatch);
        }
        Ok(PolyMatrix { field: field.clone(), rows })
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn entry(&self, r: usize, c: usize) -> &UniPoly {
        &self.rows[r][c]
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    /// Copy with column `col` replaced.
    pub fn with_column(&self, col: usize, column: &[UniPoly]) -> PolyMatrix {
        let mut rows = self.rows.clone();
        for (row, p) in rows.iter_mut().zip(column) {
            row[col] = p.clone();
        }
        PolyMatrix { field: self.field.clone(), rows }
    }

    /// Entrywise evaluation, as a matrix of constants.
    pub fn eval(&self, x: Elem) -> PolyMatrix {
        let rows = self
            .rows
            .iter()
            .map(|r| r.iter().map(|p| UniPoly::constant(&self.field, p.eval(x))).collect())
            .collect();
        PolyMatrix { field: self.field.clone(), rows }
    }
}

/// Exact determinant: cofactor expansion up to 4x4, Bareiss elimination above.
pub fn poly_det(m: &PolyMatrix) -> UniPoly {
    if m.size() <= 4 {
        poly_det_cofactor(m)
    } else {
        poly_det_bareiss(m)
    }
}

/// Laplace expansion along the first row.
pub fn poly_det_cofactor(m: &PolyMatrix) -> UniPoly {
    fn rec(field: &Field, rows: &[Vec<UniPoly>], cols: &[usize]) -> UniPoly {
        if cols.is_empty() {
            return UniPoly::one(field);
        }
        let mut acc = UniPoly::zero(field);
        for (pos, &c) in cols.iter().enumerate() {
            let entry = &rows[0][c];
            if entry.is_zero() {
                continue;
            }
            let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let term = entry * &rec(field, &rows[1..], &rest);
            acc = if pos % 2 == 0 { &acc + &term } else { &acc - &term };
        }
        acc
    }
    let cols: Vec<usize> = (0..m.size()).collect();
    rec(&m.field, &m.rows, &cols)
}

/// Fraction-free Gaussian elimination over GF(q)[x].
pub fn poly_det_bareiss(m: &PolyMatrix) -> UniPoly {
    let field = &m.field;
    let n = m.size();
    if n == 0 {
        return UniPoly::one(field);
    }
    let mut a = m.rows.clone();
    let mut prev = UniPoly::one(field);
    let mut negate = false;
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return UniPoly::zero(field),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if negate {
        -&det
    } else {
        det
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(i: u32) -> Elem {
        Elem::from_index_unchecked(i)
    }

    fn up(f: &Field, c: &[u32]) -> UniPoly {
        UniPoly::new(f, c.iter().map(|&i| e(i)).collect())
    }

    #[test]
    fn square_of_x_plus_one_over_gf2() {
        let f = Field::prime(2).unwrap();
        let a = up(&f, &[1, 1]);
        assert_eq!(&a * &a, up(&f, &[1, 0, 1]));
        assert_eq!(&a + &UniPoly::zero(&f), a);
    }

    #[test]
    fn product_over_gf5() {
        let f = Field::prime(5).unwrap();
        // (x - 2)(x - 3) = x^2 - 5x + 6 = x^2 + 1
        assert_eq!(&up(&f, &[3, 1]) * &up(&f, &[2, 1]), up(&f, &[1, 0, 1]));
        assert_eq!(up(&f, &[1, 0, 1]).eval(e(2)), Elem::ZERO);
        assert_eq!(UniPoly::constant(&f, e(3)).eval(e(4)), e(3));
        assert_eq!(UniPoly::zero(&f).eval(e(4)), Elem::ZERO);
    }

    #[test]
    fn mismatched_fields() {
        let f5 = Field::prime(5).unwrap();
        let f7 = Field::prime(7).unwrap();
        assert_eq!(uni_arith(&up(&f5, &[1]), &up(&f7, &[1]), UniOp::Add), Err(PolyError::FieldMismatch));
        assert_eq!(uni_arith(&up(&f5, &[1, 2]), &up(&f5, &[3]), UniOp::Scale).unwrap(), up(&f5, &[3, 1]));
    }

    #[test]
    fn gcd_cases() {
        let f = Field::prime(7).unwrap();
        let x2m1 = up(&f, &[6, 0, 1]);
        let xm1 = up(&f, &[6, 1]);
        assert_eq!(uni_gcd(&x2m1, &xm1).unwrap(), xm1);
        let g = up(&f, &[2, 4]);
        assert_eq!(uni_gcd(&g, &g).unwrap(), g.monic());
        assert_eq!(uni_gcd(&g, &UniPoly::zero(&f)).unwrap(), g.monic());
        assert_eq!(uni_gcd(&UniPoly::zero(&f), &UniPoly::zero(&f)), Err(PolyError::BothZero));
    }

    #[test]
    fn roots_cases() {
        let f = Field::prime(5).unwrap();
        let p = UniPoly::from_roots(&f, &[e(1), e(1), e(2)]);
        assert_eq!(roots_with_multiplicity(&p).unwrap(), vec![(e(1), 2), (e(2), 1)]);
        let f3 = Field::prime(3).unwrap();
        assert!(roots_with_multiplicity(&up(&f3, &[1, 0, 1])).unwrap().is_empty());
        let f9 = Field::with_order(9).unwrap();
        let all = roots_with_multiplicity(&UniPoly::field_polynomial(&f9)).unwrap();
        assert_eq!(all.len(), 9);
        assert!(all.iter().all(|&(_, m)| m == 1));
        assert_eq!(roots_with_multiplicity(&UniPoly::zero(&f)), Err(PolyError::ZeroPolynomial));
    }

    #[test]
    fn bivariate_substitution_and_homogenize() {
        let f = Field::prime(5).unwrap();
        // U - V at V = 3 is U - 3
        let u_minus_v = &BiPoly::monomial(&f, Elem::ONE, 1, 0) - &BiPoly::monomial(&f, Elem::ONE, 0, 1);
        assert_eq!(u_minus_v.eval_second(e(3)), up(&f, &[2, 1]));
        let only_u = BiPoly::from_first(&up(&f, &[1, 2, 3]));
        assert_eq!(only_u.eval_second(e(4)), up(&f, &[1, 2, 3]));

        let u_minus_3 = BiPoly::from_first(&up(&f, &[2, 1]));
        let g = homogenize(&u_minus_3, 1).unwrap();
        assert_eq!(g.render(), "U + 2*W");
        let u2_plus_v = &BiPoly::monomial(&f, Elem::ONE, 2, 0) + &BiPoly::monomial(&f, Elem::ONE, 0, 1);
        assert_eq!(homogenize(&u2_plus_v, 2).unwrap().render(), "U^2 + V*W");
        assert_eq!(homogenize(&u2_plus_v, 1), Err(PolyError::DegreeTooSmall { degree: 2, n: 1 }));
    }

    #[test]
    fn render_forms() {
        let f = Field::prime(5).unwrap();
        let g = TriHomPoly::new(&f, 2, [((2, 0, 0), e(1)), ((1, 0, 1), e(3)), ((0, 0, 2), e(2))]).unwrap();
        assert_eq!(g.render(), "U^2 + 3*U*W + 2*W^2");
        assert_eq!(up(&f, &[1, 3, 1]).render("x"), "x^2 + 3*x + 1");
        assert!(TriHomPoly::new(&f, 2, [((1, 0, 0), e(1))]).is_err());
    }

    #[test]
    fn determinants_small() {
        let f = Field::prime(7).unwrap();
        let one = UniPoly::one(&f);
        let zero = UniPoly::zero(&f);
        let v = up(&f, &[0, 1]);
        let id = PolyMatrix::new(&f, vec![vec![one.clone(), zero.clone()], vec![zero.clone(), one.clone()]]).unwrap();
        assert_eq!(poly_det(&id), one);
        let m = PolyMatrix::new(&f, vec![vec![v.clone(), one.clone()], vec![zero.clone(), v.clone()]]).unwrap();
        assert_eq!(poly_det(&m), &v * &v);
        assert_eq!(poly_det_bareiss(&m), &v * &v);
        assert_eq!(PolyMatrix::new(&f, vec![vec![one.clone()], vec![]]), Err(PolyError::NotSquare));
    }

    #[test]
    fn bareiss_pivoting() {
        let f = Field::prime(5).unwrap();
        let one = UniPoly::one(&f);
        let zero = UniPoly::zero(&f);
        // permutation matrix with zero leading entry: det = -1
        let m = PolyMatrix::new(&f, vec![vec![zero.clone(), one.clone()], vec![one.clone(), zero.clone()]]).unwrap();
        assert_eq!(poly_det_bareiss(&m), up(&f, &[4]));
        assert_eq!(poly_det_cofactor(&m), up(&f, &[4]));
    }
}
