//! Exact arithmetic in GF(p^e).
//!
//! Elements are stored as their integer index: the residue polynomial
//! `c_0 + c_1 t + ... + c_{e-1} t^{e-1}` is encoded as `c_0 + c_1 p + ... `,
//! so the constant digit is least significant. Index 0 is zero and index 1
//! is one, and the prime subfield occupies indices `0..p`.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

/// Largest supported field order.
pub const MAX_ORDER: u64 = 1 << 16;

/// Above this order no operation tables are cached.
const TABLE_LIMIT: u32 = 256;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("modulus is reducible over GF({0})")]
    ReducibleModulus(u32),
    #[error("modulus must be monic of degree {expected}, got {got:?}")]
    DegreeMismatch { expected: u32, got: Vec<u32> },
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("field order {0} exceeds the supported maximum")]
    TooLarge(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("element {index} does not belong to GF({q})")]
    FieldMismatch { index: u32, q: u32 },
    #[error("malformed field spec {0:?}")]
    BadSpec(String),
}

/// A field element, identified by its base-p index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Elem(u32);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    /// Wraps a raw index without range checking; see [`Field::elem`].
    pub const fn from_index_unchecked(i: u32) -> Elem {
        Elem(i)
    }

    pub const fn index(self) -> u32 {
        self.0
    }

    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
    Neg,
    Inv,
    Pow(u64),
}

struct FieldCtx {
    p: u32,
    e: u32,
    q: u32,
    /// Monic, constant term first, length e + 1.
    modulus: Vec<u32>,
    add_table: Option<Vec<u16>>,
    mul_table: Option<Vec<u16>>,
    inv_table: Vec<u32>,
}

/// Shared handle to an immutable GF(p^e) context.
///
/// Cloning is cheap. Two handles compare equal when they describe the same
/// field with the same modulus.
#[derive(Clone)]
pub struct Field(Arc<FieldCtx>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || (self.0.p == other.0.p && self.0.modulus == other.0.modulus)
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{}; m={:?})", self.0.p, self.0.e, self.0.modulus)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.e == 1 {
            write!(f, "{}", self.0.p)
        } else {
            let m: Vec<String> = self.0.modulus.iter().map(u32::to_string).collect();
            write!(f, "{}^{}:m={}", self.0.p, self.0.e, m.join(","))
        }
    }
}

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

// Dense polynomials over GF(p) on plain u32 digits, constant term first.
// Only used to build and reduce residues.
pub(crate) mod prime_poly {
    pub fn trim(mut v: Vec<u32>) -> Vec<u32> {
        while v.last() == Some(&0) {
            v.pop();
        }
        v
    }

    pub fn inv_mod(a: u32, p: u32) -> u32 {
        // extended Euclid on integers
        let (mut r0, mut r1) = (p as i64, a as i64);
        let (mut s0, mut s1) = (0i64, 1i64);
        while r1 != 0 {
            let quo = r0 / r1;
            (r0, r1) = (r1, r0 - quo * r1);
            (s0, s1) = (s1, s0 - quo * s1);
        }
        debug_assert_eq!(r0, 1);
        s0.rem_euclid(p as i64) as u32
    }

    /// Remainder of `a` modulo `b` (b nonzero).
    pub fn rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
        let (_, r) = divrem(a, b, p);
        r
    }

    pub fn divrem(a: &[u32], b: &[u32], p: u32) -> (Vec<u32>, Vec<u32>) {
        let b = trim(b.to_vec());
        let mut r = trim(a.to_vec());
        if r.len() < b.len() {
            return (Vec::new(), r);
        }
        let lead_inv = inv_mod(*b.last().unwrap(), p) as u64;
        let mut quo = vec![0u32; r.len() - b.len() + 1];
        while r.len() >= b.len() && !r.is_empty() {
            let shift = r.len() - b.len();
            let factor = (*r.last().unwrap() as u64 * lead_inv % p as u64) as u32;
            quo[shift] = factor;
            for (i, &bc) in b.iter().enumerate() {
                let sub = (factor as u64 * bc as u64 % p as u64) as u32;
                r[shift + i] = (r[shift + i] + p - sub) % p;
            }
            r = trim(r);
        }
        (trim(quo), r)
    }

    pub fn mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x as u64 * y as u64) % p as u64;
            }
        }
        trim(out.into_iter().map(|c| c as u32).collect())
    }

    pub fn sub(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
        let n = a.len().max(b.len());
        let out = (0..n)
            .map(|i| {
                let x = a.get(i).copied().unwrap_or(0);
                let y = b.get(i).copied().unwrap_or(0);
                (x + p - y) % p
            })
            .collect();
        trim(out)
    }

    /// Inverse of `a` modulo the irreducible `m`, by extended Euclid.
    pub fn inv_residue(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
        let (mut r0, mut r1) = (trim(m.to_vec()), trim(a.to_vec()));
        let (mut s0, mut s1): (Vec<u32>, Vec<u32>) = (Vec::new(), vec![1]);
        while !r1.is_empty() {
            let (quo, rem) = divrem(&r0, &r1, p);
            let s2 = sub(&s0, &mul(&quo, &s1, p), p);
            r0 = std::mem::replace(&mut r1, rem);
            s0 = std::mem::replace(&mut s1, s2);
        }
        // r0 is a nonzero constant because m is irreducible
        let c = inv_mod(r0[0], p);
        let scaled: Vec<u32> = s0.iter().map(|&x| (x as u64 * c as u64 % p as u64) as u32).collect();
        trim(scaled)
    }

    pub fn is_irreducible(m: &[u32], p: u32) -> bool {
        let deg = m.len() - 1;
        // trial division by every monic polynomial of degree 1..=deg/2
        for d in 1..=deg / 2 {
            let count = (p as u64).pow(d as u32);
            for idx in 0..count {
                let mut cand = Vec::with_capacity(d + 1);
                let mut rest = idx;
                for _ in 0..d {
                    cand.push((rest % p as u64) as u32);
                    rest /= p as u64;
                }
                cand.push(1);
                if rem(m, &cand, p).is_empty() {
                    return false;
                }
            }
        }
        true
    }
}

impl Field {
    /// Builds GF(p^e). Without an explicit modulus the irreducible monic
    /// polynomial of degree `e` with the smallest coefficient index
    /// `c_0 + c_1 p + ... + c_{e-1} p^{e-1}` is used.
    pub fn new(p: u32, e: u32, modulus: Option<&[u32]>) -> Result<Field, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        if e == 0 {
            return Err(FieldError::ZeroDegree);
        }
        let q = (p as u64).checked_pow(e).unwrap_or(u64::MAX);
        if q > MAX_ORDER {
            return Err(FieldError::TooLarge(q));
        }
        let modulus = match modulus {
            Some(m) => {
                if m.len() != e as usize + 1 || m[e as usize] != 1 || m.iter().any(|&c| c >= p) {
                    return Err(FieldError::DegreeMismatch { expected: e, got: m.to_vec() });
                }
                if !prime_poly::is_irreducible(m, p) {
                    return Err(FieldError::ReducibleModulus(p));
                }
                m.to_vec()
            }
            None => Self::default_modulus(p, e),
        };
        Ok(Field(Arc::new(FieldCtx::build(p, e, q as u32, modulus))))
    }

    pub fn prime(p: u32) -> Result<Field, FieldError> {
        Field::new(p, 1, None)
    }

    /// Builds a field from a field order, e.g. 9 -> GF(3^2).
    pub fn with_order(q: u32) -> Result<Field, FieldError> {
        let p = (2..=q).find(|&d| q.is_multiple_of(d)).ok_or(FieldError::NotPrime(q))?;
        let mut e = 0;
        let mut rest = q;
        while rest.is_multiple_of(p) {
            rest /= p;
            e += 1;
        }
        if rest != 1 {
            return Err(FieldError::NotPrime(q));
        }
        Field::new(p, e, None)
    }

    /// Parses `"p"`, `"p^e"` or `"p^e:m=c0,c1,...,ce"`.
    pub fn parse_spec(spec: &str) -> Result<Field, FieldError> {
        let bad = || FieldError::BadSpec(spec.to_string());
        let spec_trim = spec.trim();
        let (head, modulus) = match spec_trim.split_once(':') {
            Some((h, tail)) => {
                let coeffs = tail.trim().strip_prefix("m=").ok_or_else(bad)?;
                let m = coeffs
                    .split(',')
                    .map(|c| c.trim().parse::<u32>().map_err(|_| bad()))
                    .collect::<Result<Vec<_>, _>>()?;
                (h, Some(m))
            }
            None => (spec_trim, None),
        };
        let (p, e) = match head.split_once('^') {
            Some((p, e)) => (
                p.trim().parse::<u32>().map_err(|_| bad())?,
                e.trim().parse::<u32>().map_err(|_| bad())?,
            ),
            None => (head.trim().parse::<u32>().map_err(|_| bad())?, 1),
        };
        Field::new(p, e, modulus.as_deref())
    }

    fn default_modulus(p: u32, e: u32) -> Vec<u32> {
        if e == 1 {
            return vec![0, 1];
        }
        let count = (p as u64).pow(e);
        for idx in 0..count {
            let mut m = Vec::with_capacity(e as usize + 1);
            let mut rest = idx;
            for _ in 0..e {
                m.push((rest % p as u64) as u32);
                rest /= p as u64;
            }
            m.push(1);
            if prime_poly::is_irreducible(&m, p) {
                return m;
            }
        }
        unreachable!("irreducible polynomials exist in every degree")
    }

    pub fn p(&self) -> u32 {
        self.0.p
    }

    pub fn e(&self) -> u32 {
        self.0.e
    }

    pub fn q(&self) -> u32 {
        self.0.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }

    /// Checked conversion from an index.
    pub fn elem(&self, index: u32) -> Result<Elem, FieldError> {
        if index < self.0.q {
            Ok(Elem(index))
        } else {
            Err(FieldError::FieldMismatch { index, q: self.0.q })
        }
    }

    pub fn zero(&self) -> Elem {
        Elem::ZERO
    }

    pub fn one(&self) -> Elem {
        Elem::ONE
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, n: i64) -> Elem {
        Elem(n.rem_euclid(self.0.p as i64) as u32)
    }

    /// All q elements in ascending index order.
    pub fn elements(&self) -> impl Iterator<Item = Elem> + Clone {
        (0..self.0.q).map(Elem)
    }

    /// Base-p digits of an element (length e, constant first).
    pub fn digits(&self, a: Elem) -> Vec<u32> {
        self.0.digits(a.0)
    }

    pub fn from_digits(&self, digits: &[u32]) -> Result<Elem, FieldError> {
        let p = self.0.p;
        if digits.len() > self.0.e as usize || digits.iter().any(|&d| d >= p) {
            return Err(FieldError::DegreeMismatch { expected: self.0.e, got: digits.to_vec() });
        }
        Ok(Elem(digits.iter().rev().fold(0, |acc, &d| acc * p + d)))
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        let ctx = &*self.0;
        if ctx.e == 1 {
            let s = a.0 + b.0;
            return Elem(if s >= ctx.p { s - ctx.p } else { s });
        }
        match &ctx.add_table {
            Some(t) => Elem(t[(a.0 * ctx.q + b.0) as usize] as u32),
            None => Elem(ctx.add_digits(a.0, b.0)),
        }
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        let ctx = &*self.0;
        if ctx.e == 1 {
            return Elem(if a.0 == 0 { 0 } else { ctx.p - a.0 });
        }
        Elem(ctx.neg_digits(a.0))
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        let ctx = &*self.0;
        if ctx.e == 1 {
            return Elem((a.0 as u64 * b.0 as u64 % ctx.p as u64) as u32);
        }
        match &ctx.mul_table {
            Some(t) => Elem(t[(a.0 * ctx.q + b.0) as usize] as u32),
            None => Elem(ctx.mul_digits(a.0, b.0)),
        }
    }

    pub fn inv(&self, a: Elem) -> Result<Elem, FieldError> {
        if a.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        Ok(Elem(self.0.inv_table[a.0 as usize]))
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem, FieldError> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// Square-and-multiply; `pow(0, 0) = 1`.
    pub fn pow(&self, a: Elem, mut k: u64) -> Elem {
        let mut base = a;
        let mut acc = Elem::ONE;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// Checked arithmetic entry point. Unary operations ignore `b`.
    pub fn arith(&self, op: ArithOp, a: Elem, b: Elem) -> Result<Elem, FieldError> {
        self.elem(a.0)?;
        self.elem(b.0)?;
        Ok(match op {
            ArithOp::Add => self.add(a, b),
            ArithOp::Sub => self.sub(a, b),
            ArithOp::Mul => self.mul(a, b),
            ArithOp::Div => self.div(a, b)?,
            ArithOp::Neg => self.neg(a),
            ArithOp::Inv => self.inv(a)?,
            ArithOp::Pow(k) => self.pow(a, k),
        })
    }

    /// Absolute trace to GF(p), returned as an element of the prime subfield.
    pub fn trace(&self, a: Elem) -> Elem {
        let mut acc = Elem::ZERO;
        let mut cur = a;
        for _ in 0..self.0.e {
            acc = self.add(acc, cur);
            cur = self.pow(cur, self.0.p as u64);
        }
        acc
    }

    /// Integer residue mod p of an element of the prime subfield.
    pub fn residue(&self, a: Elem) -> Option<u32> {
        (a.0 < self.0.p).then_some(a.0)
    }
}

impl FieldCtx {
    fn build(p: u32, e: u32, q: u32, modulus: Vec<u32>) -> FieldCtx {
        let mut ctx = FieldCtx { p, e, q, modulus, add_table: None, mul_table: None, inv_table: Vec::new() };
        if e > 1 && q <= TABLE_LIMIT {
            let mut add = vec![0u16; (q * q) as usize];
            let mut mul = vec![0u16; (q * q) as usize];
            for a in 0..q {
                for b in 0..q {
                    add[(a * q + b) as usize] = ctx.add_digits(a, b) as u16;
                    mul[(a * q + b) as usize] = ctx.mul_digits(a, b) as u16;
                }
            }
            ctx.add_table = Some(add);
            ctx.mul_table = Some(mul);
        }
        let mut inv = vec![0u32; q as usize];
        for a in 1..q {
            inv[a as usize] = if e == 1 {
                prime_poly::inv_mod(a, p)
            } else {
                let r = prime_poly::inv_residue(&ctx.digits(a), &ctx.modulus, p);
                ctx.index_of(&r)
            };
        }
        ctx.inv_table = inv;
        ctx
    }

    fn digits(&self, mut a: u32) -> Vec<u32> {
        (0..self.e)
            .map(|_| {
                let d = a % self.p;
                a /= self.p;
                d
            })
            .collect()
    }

    fn index_of(&self, digits: &[u32]) -> u32 {
        digits.iter().rev().fold(0, |acc, &d| acc * self.p + d)
    }

    fn add_digits(&self, a: u32, b: u32) -> u32 {
        let (da, db) = (self.digits(a), self.digits(b));
        let sum: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % self.p).collect();
        self.index_of(&sum)
    }

    fn neg_digits(&self, a: u32) -> u32 {
        let d: Vec<u32> = self.digits(a).iter().map(|&x| (self.p - x) % self.p).collect();
        self.index_of(&d)
    }

    fn mul_digits(&self, a: u32, b: u32) -> u32 {
        let prod = prime_poly::mul(&self.digits(a), &self.digits(b), self.p);
        let r = prime_poly::rem(&prod, &self.modulus, self.p);
        self.index_of(&r)
    }
}
