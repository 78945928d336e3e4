//! Exact arithmetic in the cyclotomic field Q(ζ₂₄), ζ = e^{iπ/12}.
//!
//! This field is the smallest one containing every scalar we need:
//! i = ζ⁶, the primitive cube root of unity ω = ζ⁸, and √2 = ζ³ + ζ²¹.
//! Elements are polynomials in ζ reduced modulo Φ₂₄(x) = x⁸ − x⁴ + 1,
//! so the representation is canonical and equality is coefficient-wise.

use num::bigint::BigInt;
use num::complex::Complex64;
use num::traits::{One, Signed, ToPrimitive, Zero};
use once_cell::sync::Lazy;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

/// Arbitrary-precision rational. `BigRational` keeps lowest terms and a
/// positive denominator, which is exactly the invariant we need.
pub type Rat = num::BigRational;

/// Complex double used by the approximate fast path.
pub type FloatC = Complex64;

/// Default absolute tolerance for float-mode comparisons.
pub const FLOAT_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScalarError {
    #[error("division by zero in Q(zeta_24)")]
    DivisionByZero,
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

fn rat_i64(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// An element of Q(ζ₂₄): coefficients c₀..c₇ of ζ⁰..ζ⁷ mod Φ₂₄.
#[derive(Clone, PartialEq, Eq)]
pub struct CycNum {
    coeffs: [Rat; 8],
}

static ZETA_POWS: Lazy<[CycNum; 24]> = Lazy::new(|| {
    let mut pows: Vec<CycNum> = Vec::with_capacity(24);
    pows.push(CycNum::one());
    for k in 1..24 {
        pows.push(&pows[k - 1] * &CycNum::zeta());
    }
    pows.try_into().unwrap()
});

impl CycNum {
    pub fn zero() -> Self {
        CycNum {
            coeffs: std::array::from_fn(|_| Rat::zero()),
        }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rat(rat_i64(n))
    }

    pub fn from_rat(r: Rat) -> Self {
        let mut c = Self::zero();
        c.coeffs[0] = r;
        c
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_rat(Rat::new(BigInt::from(num), BigInt::from(den)))
    }

    /// ζ itself.
    pub fn zeta() -> Self {
        let mut c = Self::zero();
        c.coeffs[1] = Rat::one();
        c
    }

    /// ζ^k for any integer k (negative allowed).
    pub fn zeta_pow(k: i64) -> Self {
        ZETA_POWS[k.rem_euclid(24) as usize].clone()
    }

    /// i = ζ⁶.
    pub fn i() -> Self {
        Self::zeta_pow(6)
    }

    /// ω = ζ⁸ = e^{2πi/3}.
    pub fn omega() -> Self {
        Self::zeta_pow(8)
    }

    /// ω̄ = ζ¹⁶.
    pub fn omega_bar() -> Self {
        Self::zeta_pow(16)
    }

    /// √2 = ζ³ + ζ²¹.
    pub fn sqrt2() -> Self {
        &Self::zeta_pow(3) + &Self::zeta_pow(21)
    }

    /// √3 = ζ² + ζ²².
    pub fn sqrt3() -> Self {
        &Self::zeta_pow(2) + &Self::zeta_pow(22)
    }

    pub fn coeff(&self, k: usize) -> &Rat {
        &self.coeffs[k]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    /// True when the element lies in Q (only the constant coefficient).
    pub fn as_rational(&self) -> Option<&Rat> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    /// Reduce a degree-<15 polynomial in ζ using ζ⁸ = ζ⁴ − 1.
    fn reduce(work: &mut [Rat; 15]) -> Self {
        for d in (8..15).rev() {
            if work[d].is_zero() {
                continue;
            }
            let c = std::mem::replace(&mut work[d], Rat::zero());
            work[d - 4] += &c;
            work[d - 8] -= c;
        }
        let mut out = Self::zero();
        for k in 0..8 {
            out.coeffs[k] = std::mem::replace(&mut work[k], Rat::zero());
        }
        out
    }

    fn mul_impl(&self, rhs: &CycNum) -> CycNum {
        let mut work: [Rat; 15] = std::array::from_fn(|_| Rat::zero());
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                work[i + j] += a * b;
            }
        }
        Self::reduce(&mut work)
    }

    /// Multiply by a rational scalar.
    pub fn scale(&self, r: &Rat) -> CycNum {
        if r.is_zero() {
            return Self::zero();
        }
        let mut out = self.clone();
        for c in out.coeffs.iter_mut() {
            if !c.is_zero() {
                *c *= r;
            }
        }
        out
    }

    /// Multiplicative inverse. Errors on zero.
    pub fn inv(&self) -> Result<CycNum, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        // Solve (mult-by-self) x = 1 as an 8x8 rational linear system.
        let mut m: Vec<Vec<Rat>> = Vec::with_capacity(8);
        for j in 0..8 {
            let col = self.mul_impl(&ZETA_POWS[j]);
            m.push(col.coeffs.to_vec());
        }
        // m[j][row]: columns of the multiplication matrix.
        let mut aug: Vec<Vec<Rat>> = (0..8)
            .map(|row| {
                let mut r: Vec<Rat> = (0..8).map(|j| m[j][row].clone()).collect();
                r.push(if row == 0 { Rat::one() } else { Rat::zero() });
                r
            })
            .collect();
        let x = solve_rat(&mut aug).expect("multiplication by a nonzero field element is invertible");
        let mut out = Self::zero();
        out.coeffs = x.try_into().unwrap();
        Ok(out)
    }

    /// Field automorphism ζ ↦ ζ^k, k coprime to 24.
    pub fn galois(&self, k: u32) -> CycNum {
        assert!(num::integer::gcd(k, 24) == 1, "not a unit mod 24: {k}");
        let mut out = Self::zero();
        for (j, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                out += &ZETA_POWS[(j as u32 * k % 24) as usize].scale(c);
            }
        }
        out
    }

    /// Complex conjugation, ζ ↦ ζ²³.
    pub fn conj(&self) -> CycNum {
        self.galois(23)
    }

    /// True when the element is fixed by complex conjugation.
    pub fn is_real(&self) -> bool {
        self.conj() == *self
    }

    /// Real part (a + ā)/2, itself an element of the field.
    pub fn real_part(&self) -> CycNum {
        (self + &self.conj()).scale(&Rat::new(BigInt::one(), BigInt::from(2)))
    }

    /// Imaginary part (a − ā)/(2i), itself an element of the field.
    pub fn imag_part(&self) -> CycNum {
        let diff = self - &self.conj();
        let two_i = CycNum::i().scale(&rat_i64(2));
        diff.mul_impl(&two_i.inv().unwrap())
    }

    /// Numerical embedding with ζ = e^{iπ/12}.
    pub fn embed(&self) -> FloatC {
        let mut acc = FloatC::new(0.0, 0.0);
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let angle = std::f64::consts::PI * (k as f64) / 12.0;
            let v = c.to_f64().expect("rational fits in f64");
            acc += FloatC::new(angle.cos(), angle.sin()) * v;
        }
        acc
    }

    /// Exact square root within the field, when one exists.
    ///
    /// Works down the quadratic tower Q ⊂ Q(√2) ⊂ Q(√2,√3) ⊂ Q(ζ₂₄);
    /// every candidate is verified by squaring before it is returned.
    pub fn sqrt(&self) -> Option<CycNum> {
        let cand = sqrt_level3(self)?;
        debug_assert_eq!(&cand * &cand, *self);
        Some(cand)
    }

    /// Parse the scalar-literal grammar; see the module-level CLI docs.
    pub fn parse(text: &str) -> Result<CycNum, ScalarError> {
        Parser::new(text).parse_sum()
    }

    /// Canonical text form: nonzero `c_k*z^k` terms with k ascending
    /// (the k = 0 term is printed as a bare rational).
    pub fn to_canonical_string(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else if c.is_negative() {
                out.push('-');
            } else {
                out.push('+');
            }
            let a = c.abs();
            if k == 0 {
                out.push_str(&a.to_string());
            } else {
                out.push_str(&format!("{a}*z^{k}"));
            }
        }
        out
    }
}

impl fmt::Display for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_canonical_string())
    }
}

impl fmt::Debug for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycNum({})", self.to_canonical_string())
    }
}

impl Default for CycNum {
    fn default() -> Self {
        Self::zero()
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for CycNum {
            type Output = CycNum;
            fn $method(self, rhs: CycNum) -> CycNum {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&CycNum> for CycNum {
            type Output = CycNum;
            fn $method(self, rhs: &CycNum) -> CycNum {
                (&self).$method(rhs)
            }
        }
        impl $trait<CycNum> for &CycNum {
            type Output = CycNum;
            fn $method(self, rhs: CycNum) -> CycNum {
                self.$method(&rhs)
            }
        }
    };
}

impl Add<&CycNum> for &CycNum {
    type Output = CycNum;
    fn add(self, rhs: &CycNum) -> CycNum {
        let mut out = self.clone();
        for (a, b) in out.coeffs.iter_mut().zip(rhs.coeffs.iter()) {
            if !b.is_zero() {
                *a += b;
            }
        }
        out
    }
}
forward_binop!(Add, add);

impl Sub<&CycNum> for &CycNum {
    type Output = CycNum;
    fn sub(self, rhs: &CycNum) -> CycNum {
        let mut out = self.clone();
        for (a, b) in out.coeffs.iter_mut().zip(rhs.coeffs.iter()) {
            if !b.is_zero() {
                *a -= b;
            }
        }
        out
    }
}
forward_binop!(Sub, sub);

impl Mul<&CycNum> for &CycNum {
    type Output = CycNum;
    fn mul(self, rhs: &CycNum) -> CycNum {
        self.mul_impl(rhs)
    }
}
forward_binop!(Mul, mul);

impl Div<&CycNum> for &CycNum {
    type Output = CycNum;
    fn div(self, rhs: &CycNum) -> CycNum {
        self.mul_impl(&rhs.inv().expect("division by zero"))
    }
}
forward_binop!(Div, div);

impl Neg for &CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        let mut out = self.clone();
        for c in out.coeffs.iter_mut() {
            if !c.is_zero() {
                *c = -std::mem::replace(c, Rat::zero());
            }
        }
        out
    }
}

impl Neg for CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        -&self
    }
}

impl AddAssign<&CycNum> for CycNum {
    fn add_assign(&mut self, rhs: &CycNum) {
        for (a, b) in self.coeffs.iter_mut().zip(rhs.coeffs.iter()) {
            if !b.is_zero() {
                *a += b;
            }
        }
    }
}

impl AddAssign for CycNum {
    fn add_assign(&mut self, rhs: CycNum) {
        *self += &rhs;
    }
}

impl SubAssign<&CycNum> for CycNum {
    fn sub_assign(&mut self, rhs: &CycNum) {
        for (a, b) in self.coeffs.iter_mut().zip(rhs.coeffs.iter()) {
            if !b.is_zero() {
                *a -= b;
            }
        }
    }
}

impl SubAssign for CycNum {
    fn sub_assign(&mut self, rhs: CycNum) {
        *self -= &rhs;
    }
}

/// Gaussian elimination over Q on an augmented matrix (n rows, n+1 cols).
fn solve_rat(aug: &mut [Vec<Rat>]) -> Option<Vec<Rat>> {
    let n = aug.len();
    let mut row = 0;
    let mut pivots = Vec::with_capacity(n);
    for col in 0..n {
        let Some(p) = (row..n).find(|&r| !aug[r][col].is_zero()) else {
            continue;
        };
        aug.swap(row, p);
        let inv = aug[row][col].recip();
        for c in col..=n {
            let v = std::mem::replace(&mut aug[row][c], Rat::zero());
            aug[row][c] = v * &inv;
        }
        for r in 0..n {
            if r != row && !aug[r][col].is_zero() {
                let f = std::mem::replace(&mut aug[r][col], Rat::zero());
                for c in (col + 1)..=n {
                    let t = &aug[row][c] * &f;
                    aug[r][c] -= t;
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == n {
            break;
        }
    }
    if row < n && aug[row..].iter().any(|r| !r[n].is_zero()) {
        return None;
    }
    let mut x = vec![Rat::zero(); n];
    for (r, &col) in pivots.iter().enumerate() {
        x[col] = aug[r][n].clone();
    }
    Some(x)
}

// --- exact square roots down the quadratic tower ---------------------------
//
// Levels: K3 = Q(ζ₂₄) = K2(i), K2 = Q(√2,√3) = K1(√3), K1 = Q(√2).
// The Galois maps used to split off components: σ₂₃ flips i, σ₁₇ flips √3,
// σ₁₃ flips √2.

fn half() -> Rat {
    Rat::new(BigInt::one(), BigInt::from(2))
}

fn sqrt_rational(r: &Rat) -> Option<Rat> {
    if r.is_negative() {
        return None;
    }
    let ns = r.numer().sqrt();
    let ds = r.denom().sqrt();
    let cand = Rat::new(ns, ds);
    if &cand * &cand == *r {
        Some(cand)
    } else {
        None
    }
}

fn sqrt_level0(z: &CycNum) -> Option<CycNum> {
    let r = z.as_rational()?;
    sqrt_rational(r).map(CycNum::from_rat)
}

/// sqrt in K(√d) given sqrt in K. `sigma` flips √d, `sqrt_k` solves in K.
fn sqrt_quadratic(
    z: &CycNum,
    root_d: &CycNum,
    d: &CycNum,
    sigma: u32,
    sqrt_k: &dyn Fn(&CycNum) -> Option<CycNum>,
) -> Option<CycNum> {
    let try_in_k = |v: &CycNum| -> Option<CycNum> {
        if let Some(x) = sqrt_k(v) {
            return Some(x);
        }
        // √v may only exist as √(v/d)·√d.
        let x = sqrt_k(&(v / d))?;
        Some(&x * root_d)
    };
    let a = (z + &z.galois(sigma)).scale(&half());
    let b = (z - &z.galois(sigma)).scale(&half()) / root_d;
    if b.is_zero() {
        let cand = try_in_k(&a)?;
        return if &cand * &cand == *z { Some(cand) } else { None };
    }
    let norm = &a * &a - &(&b * &b) * d;
    let s0 = sqrt_k(&norm)?;
    for s in [s0.clone(), -&s0] {
        let h = (&a + &s).scale(&half());
        if h.is_zero() {
            continue;
        }
        if let Some(x) = try_in_k(&h) {
            if x.is_zero() {
                continue;
            }
            let y = &b / &x.scale(&rat_i64(2));
            let cand = &x + &(&y * root_d);
            if &cand * &cand == *z {
                return Some(cand);
            }
        }
    }
    None
}

fn sqrt_level1(z: &CycNum) -> Option<CycNum> {
    sqrt_quadratic(z, &CycNum::sqrt2(), &CycNum::from_int(2), 13, &sqrt_level0)
}

fn sqrt_level2(z: &CycNum) -> Option<CycNum> {
    sqrt_quadratic(z, &CycNum::sqrt3(), &CycNum::from_int(3), 17, &sqrt_level1)
}

fn sqrt_level3(z: &CycNum) -> Option<CycNum> {
    sqrt_quadratic(z, &CycNum::i(), &CycNum::from_int(-1), 23, &sqrt_level2)
}

// --- scalar literal parser --------------------------------------------------
//
// literal := ['+'|'-'] term (('+'|'-') term)*
// term    := factor ('*' factor)*
// factor  := rational | 'i' | 'w' | 'wb' | 'r2' | 'z' ['^' uint]

struct Parser<'a> {
    text: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser {
            text: text.as_bytes(),
            pos: 0,
        }
    }

    fn err<T>(&self, msg: &str) -> Result<T, ScalarError> {
        Err(ScalarError::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.text.len() && self.text[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.text.get(self.pos).copied()
    }

    fn parse_sum(&mut self) -> Result<CycNum, ScalarError> {
        let mut acc = CycNum::zero();
        let mut first = true;
        loop {
            let sign = match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    1
                }
                Some(b'-') => {
                    self.pos += 1;
                    -1
                }
                Some(_) if first => 1,
                Some(_) => return self.err("expected '+' or '-'"),
                None if first => return self.err("empty literal"),
                None => break,
            };
            let term = self.parse_term()?;
            if sign > 0 {
                acc += term;
            } else {
                acc -= term;
            }
            first = false;
            if self.peek().is_none() {
                break;
            }
        }
        Ok(acc)
    }

    fn parse_term(&mut self) -> Result<CycNum, ScalarError> {
        let mut acc = self.parse_factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            acc = &acc * &self.parse_factor()?;
        }
        Ok(acc)
    }

    fn parse_factor(&mut self) -> Result<CycNum, ScalarError> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let num = self.parse_uint()?;
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    let den = self.parse_uint()?;
                    if den.is_zero() {
                        return self.err("zero denominator");
                    }
                    Ok(CycNum::from_rat(Rat::new(num, den)))
                } else {
                    Ok(CycNum::from_rat(Rat::from_integer(num)))
                }
            }
            Some(b'i') => {
                self.pos += 1;
                Ok(CycNum::i())
            }
            Some(b'w') => {
                self.pos += 1;
                if self.text.get(self.pos) == Some(&b'b') {
                    self.pos += 1;
                    Ok(CycNum::omega_bar())
                } else {
                    Ok(CycNum::omega())
                }
            }
            Some(b'r') => {
                self.pos += 1;
                if self.text.get(self.pos) == Some(&b'2') {
                    self.pos += 1;
                    Ok(CycNum::sqrt2())
                } else {
                    self.err("expected 'r2'")
                }
            }
            Some(b'z') => {
                self.pos += 1;
                if self.peek() == Some(b'^') {
                    self.pos += 1;
                    let k = self.parse_uint()?;
                    let k = k
                        .to_i64()
                        .ok_or_else(|| ScalarError::Parse {
                            pos: self.pos,
                            msg: "exponent too large".to_string(),
                        })?;
                    Ok(CycNum::zeta_pow(k))
                } else {
                    Ok(CycNum::zeta())
                }
            }
            Some(_) => self.err("expected rational, 'i', 'w', 'wb', 'r2' or 'z^k'"),
            None => self.err("unexpected end of literal"),
        }
    }

    fn parse_uint(&mut self) -> Result<BigInt, ScalarError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.text.len() && self.text[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected digits");
        }
        let s = std::str::from_utf8(&self.text[start..self.pos]).unwrap();
        Ok(s.parse().unwrap())
    }
}
