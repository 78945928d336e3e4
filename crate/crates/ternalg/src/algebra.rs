//! Finite-dimensional ternary algebras as dense structure tensors, with
//! the brackets and associators built on top of the ternary product.
//!
//! The product tensor P^m_{ijk} stores the coordinates of eᵢ·eⱼ·eₖ. A
//! trilinear algebra extends it C-multilinearly; a conjugate-mid algebra
//! conjugates the coordinates of the middle argument before contracting,
//! which makes every derived bracket R-linear rather than C-linear.

use crate::linalg::CycMatrix;
use crate::scalar::{CycNum, FloatC, Rat};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("shape error: {0}")]
    Shape(String),
    #[error("supplied basis is not a basis (not square or not independent)")]
    Basis,
    #[error("basis-change matrix is singular")]
    Singular,
    #[error("dimension error: {0}")]
    Dimension(String),
    #[error("subspace not closed: bracket of triple ({0}, {1}, {2}) escapes the span")]
    Closure(usize, usize, usize),
    #[error("construction error: {0}")]
    Construction(String),
    #[error("structure constants of a conjugate-mid algebra must be requested in realified form")]
    NeedsRealification,
}

/// Linearity mode of the ternary multiplication.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum Mode {
    #[serde(rename = "trilinear")]
    Trilinear,
    #[serde(rename = "conjugate-mid")]
    ConjugateMid,
}

/// Which ternary bracket to build from the product.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum BracketKind {
    /// The 6-term ω-commutator.
    #[serde(rename = "omega")]
    Omega,
    /// Its ω ↔ ω̄ conjugate.
    #[serde(rename = "conjugate")]
    Conjugate,
    /// The 3-term truncated form for left-commutative algebras.
    #[serde(rename = "reduced")]
    Reduced,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CommutativityType {
    Commutative,
    LeftCommutative,
    CyclicCommutative,
    NonCommutative,
}

/// Coordinate vector over the algebra's basis.
#[derive(Clone, PartialEq, Eq)]
pub struct Element {
    pub coords: Vec<CycNum>,
}

impl Element {
    pub fn zero(dim: usize) -> Self {
        Element {
            coords: vec![CycNum::zero(); dim],
        }
    }

    pub fn basis(dim: usize, k: usize) -> Self {
        let mut e = Self::zero(dim);
        e.coords[k] = CycNum::one();
        e
    }

    pub fn from_coords(coords: Vec<CycNum>) -> Self {
        Element { coords }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(CycNum::is_zero)
    }

    pub fn scale(&self, s: &CycNum) -> Element {
        Element {
            coords: self.coords.iter().map(|c| c * s).collect(),
        }
    }

    pub fn embed(&self) -> Vec<FloatC> {
        self.coords.iter().map(CycNum::embed).collect()
    }

    /// Largest |coordinate| of the numerical embedding.
    pub fn float_norm(&self) -> f64 {
        self.coords
            .iter()
            .map(|c| c.embed().norm())
            .fold(0.0, f64::max)
    }
}

impl std::ops::Add for Element {
    type Output = Element;
    fn add(mut self, rhs: Element) -> Element {
        assert_eq!(self.dim(), rhs.dim());
        for (a, b) in self.coords.iter_mut().zip(rhs.coords) {
            *a += b;
        }
        self
    }
}

impl std::ops::AddAssign<&Element> for Element {
    fn add_assign(&mut self, rhs: &Element) {
        assert_eq!(self.dim(), rhs.dim());
        for (a, b) in self.coords.iter_mut().zip(rhs.coords.iter()) {
            *a += b;
        }
    }
}

impl std::ops::Sub for Element {
    type Output = Element;
    fn sub(mut self, rhs: Element) -> Element {
        assert_eq!(self.dim(), rhs.dim());
        for (a, b) in self.coords.iter_mut().zip(rhs.coords) {
            *a -= b;
        }
        self
    }
}

impl std::ops::Neg for Element {
    type Output = Element;
    fn neg(mut self) -> Element {
        for c in self.coords.iter_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(CycNum::to_canonical_string).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// Rank-4 tensor C^m_{ijk} over Q(ζ₂₄), stored dense.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StructureTensor {
    pub dim: usize,
    data: Vec<CycNum>,
}

impl StructureTensor {
    pub fn zeros(dim: usize) -> Self {
        StructureTensor {
            dim,
            data: vec![CycNum::zero(); dim * dim * dim * dim],
        }
    }

    #[inline]
    fn idx(&self, m: usize, i: usize, j: usize, k: usize) -> usize {
        ((m * self.dim + i) * self.dim + j) * self.dim + k
    }

    pub fn get(&self, m: usize, i: usize, j: usize, k: usize) -> &CycNum {
        &self.data[self.idx(m, i, j, k)]
    }

    pub fn set(&mut self, m: usize, i: usize, j: usize, k: usize, v: CycNum) {
        let idx = self.idx(m, i, j, k);
        self.data[idx] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(CycNum::is_zero)
    }

    /// Value of the bracket on basis triple (i, j, k) as an element.
    pub fn basis_value(&self, i: usize, j: usize, k: usize) -> Element {
        Element::from_coords((0..self.dim).map(|m| self.get(m, i, j, k).clone()).collect())
    }

    /// Contraction with coordinates: Σ xᵢ yⱼ zₖ C^m_{ijk}.
    pub fn contract(&self, x: &[CycNum], y: &[CycNum], z: &[CycNum]) -> Element {
        let n = self.dim;
        let mut out = Element::zero(n);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let xy = xi * yj;
                for (k, zk) in z.iter().enumerate() {
                    if zk.is_zero() {
                        continue;
                    }
                    let coef = &xy * zk;
                    for m in 0..n {
                        let c = self.get(m, i, j, k);
                        if !c.is_zero() {
                            out.coords[m] += &(c * &coef);
                        }
                    }
                }
            }
        }
        out
    }

    /// ω-symmetry of the constants: C^m_{ijk} = ω C^m_{jki} = ω̄ C^m_{kij}.
    pub fn is_omega_symmetric(&self) -> bool {
        let w = CycNum::omega();
        let wb = CycNum::omega_bar();
        let n = self.dim;
        for m in 0..n {
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        let c = self.get(m, i, j, k);
                        if *c != &w * self.get(m, j, k, i) || *c != &wb * self.get(m, k, i, j) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
}

/// Tensor transformation law for a basis change ẽᵢ = A^j_i eⱼ (columns of
/// `a` are the new basis vectors in old coordinates):
/// C̃^m_{ijk} = A^p_i A^r_j A^s_k (A⁻¹)^m_q C^q_{prs}.
pub fn transform_constants(
    c: &StructureTensor,
    a: &CycMatrix,
) -> Result<StructureTensor, AlgebraError> {
    let n = c.dim;
    if a.rows != n || a.cols != n {
        return Err(AlgebraError::Shape(format!(
            "basis change must be {n}x{n}, got {}x{}",
            a.rows, a.cols
        )));
    }
    let a_inv = a.inverse().map_err(|_| AlgebraError::Singular)?;
    let mut out = StructureTensor::zeros(n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                // bracket(ẽ_i, ẽ_j, ẽ_k) in old coordinates...
                let v = c.contract(&a.col(i), &a.col(j), &a.col(k));
                // ...pulled back through A^{-1}.
                let w = a_inv.mul_vec(&v.coords);
                for (m, val) in w.into_iter().enumerate() {
                    out.set(m, i, j, k, val);
                }
            }
        }
    }
    Ok(out)
}

/// A finite-dimensional ternary algebra presented by its product tensor.
#[derive(Clone, Debug)]
pub struct TernaryAlgebra {
    pub dim: usize,
    pub basis_labels: Vec<String>,
    pub mode: Mode,
    product: StructureTensor,
}

impl TernaryAlgebra {
    pub fn new(
        basis_labels: Vec<String>,
        mode: Mode,
        product: StructureTensor,
    ) -> Result<Self, AlgebraError> {
        let dim = product.dim;
        if dim == 0 {
            return Err(AlgebraError::Dimension(
                "dimension-0 algebras are rejected".into(),
            ));
        }
        if basis_labels.len() != dim {
            return Err(AlgebraError::Shape(format!(
                "{} labels for dimension {dim}",
                basis_labels.len()
            )));
        }
        Ok(TernaryAlgebra {
            dim,
            basis_labels,
            mode,
            product,
        })
    }

    pub fn with_default_labels(
        mode: Mode,
        product: StructureTensor,
    ) -> Result<Self, AlgebraError> {
        let labels = (1..=product.dim).map(|i| format!("e{i}")).collect();
        Self::new(labels, mode, product)
    }

    pub fn product_tensor(&self) -> &StructureTensor {
        &self.product
    }

    pub fn zero_element(&self) -> Element {
        Element::zero(self.dim)
    }

    pub fn basis_element(&self, k: usize) -> Element {
        Element::basis(self.dim, k)
    }

    fn check_dims(&self, elems: &[&Element]) -> Result<(), AlgebraError> {
        for e in elems {
            if e.dim() != self.dim {
                return Err(AlgebraError::Shape(format!(
                    "element of length {} in algebra of dimension {}",
                    e.dim(),
                    self.dim
                )));
            }
        }
        Ok(())
    }

    /// x·y·z. In conjugate-mid mode the middle coordinates are conjugated.
    pub fn ternary_product(
        &self,
        x: &Element,
        y: &Element,
        z: &Element,
    ) -> Result<Element, AlgebraError> {
        self.check_dims(&[x, y, z])?;
        let mid: Vec<CycNum> = match self.mode {
            Mode::Trilinear => y.coords.clone(),
            Mode::ConjugateMid => y.coords.iter().map(CycNum::conj).collect(),
        };
        Ok(self.product.contract(&x.coords, &mid, &z.coords))
    }

    /// The 6-term ternary ω-commutator
    /// [s,u,v] = s·u·v + ω u·v·s + ω̄ v·s·u + v·u·s + ω̄ u·s·v + ω s·v·u.
    pub fn omega_commutator(
        &self,
        s: &Element,
        u: &Element,
        v: &Element,
    ) -> Result<Element, AlgebraError> {
        self.six_term(s, u, v, &CycNum::omega(), &CycNum::omega_bar())
    }

    /// The conjugate bracket: ω and ω̄ swapped; equals [v,u,s].
    pub fn conj_commutator(
        &self,
        s: &Element,
        u: &Element,
        v: &Element,
    ) -> Result<Element, AlgebraError> {
        self.six_term(s, u, v, &CycNum::omega_bar(), &CycNum::omega())
    }

    fn six_term(
        &self,
        s: &Element,
        u: &Element,
        v: &Element,
        w: &CycNum,
        wb: &CycNum,
    ) -> Result<Element, AlgebraError> {
        let mut acc = self.ternary_product(s, u, v)?;
        acc += &self.ternary_product(u, v, s)?.scale(w);
        acc += &self.ternary_product(v, s, u)?.scale(wb);
        acc += &self.ternary_product(v, u, s)?;
        acc += &self.ternary_product(u, s, v)?.scale(wb);
        acc += &self.ternary_product(s, v, u)?.scale(w);
        Ok(acc)
    }

    /// Truncated bracket for left-commutative algebras:
    /// [s,u,v] = v·s·u + ω s·u·v + ω̄ u·v·s.
    pub fn reduced_commutator(
        &self,
        s: &Element,
        u: &Element,
        v: &Element,
    ) -> Result<Element, AlgebraError> {
        let mut acc = self.ternary_product(v, s, u)?;
        acc += &self.ternary_product(s, u, v)?.scale(&CycNum::omega());
        acc += &self.ternary_product(u, v, s)?.scale(&CycNum::omega_bar());
        Ok(acc)
    }

    pub fn bracket(
        &self,
        kind: BracketKind,
        s: &Element,
        u: &Element,
        v: &Element,
    ) -> Result<Element, AlgebraError> {
        match kind {
            BracketKind::Omega => self.omega_commutator(s, u, v),
            BracketKind::Conjugate => self.conj_commutator(s, u, v),
            BracketKind::Reduced => self.reduced_commutator(s, u, v),
        }
    }

    /// Quinary ω-associator. `second_kind` selects the reversed middle
    /// placement s·(x·v·u)·y; `bar` swaps ω ↔ ω̄.
    pub fn assoc_q(
        &self,
        second_kind: bool,
        bar: bool,
        s: &Element,
        u: &Element,
        v: &Element,
        x: &Element,
        y: &Element,
    ) -> Result<Element, AlgebraError> {
        let (w, wb) = if bar {
            (CycNum::omega_bar(), CycNum::omega())
        } else {
            (CycNum::omega(), CycNum::omega_bar())
        };
        let suv = self.ternary_product(s, u, v)?;
        let mut acc = self.ternary_product(&suv, x, y)?;
        let middle = if second_kind {
            let xvu = self.ternary_product(x, v, u)?;
            self.ternary_product(s, &xvu, y)?
        } else {
            let uvx = self.ternary_product(u, v, x)?;
            self.ternary_product(s, &uvx, y)?
        };
        acc += &middle.scale(&w);
        let vxy = self.ternary_product(v, x, y)?;
        acc += &self.ternary_product(s, u, &vxy)?.scale(&wb);
        Ok(acc)
    }

    /// Classical ternary associators:
    /// 𝔱₁ = (s·u·v)·x·y − s·(u·v·x)·y, 𝔱₂ = s·(u·v·x)·y − s·u·(v·x·y).
    pub fn assoc_t(
        &self,
        which: u8,
        s: &Element,
        u: &Element,
        v: &Element,
        x: &Element,
        y: &Element,
    ) -> Result<Element, AlgebraError> {
        let uvx = self.ternary_product(u, v, x)?;
        let mid = self.ternary_product(s, &uvx, y)?;
        match which {
            1 => {
                let suv = self.ternary_product(s, u, v)?;
                Ok(self.ternary_product(&suv, x, y)? - mid)
            }
            2 => {
                let vxy = self.ternary_product(v, x, y)?;
                Ok(mid - self.ternary_product(s, u, &vxy)?)
            }
            _ => Err(AlgebraError::Shape("associator index must be 1 or 2".into())),
        }
    }

    /// Basis for expansion purposes: the unit vectors for a trilinear
    /// algebra, the realified family {e₁..e_n, i·e₁..i·e_n} otherwise.
    pub fn expansion_basis(&self) -> Vec<Element> {
        match self.mode {
            Mode::Trilinear => (0..self.dim).map(|k| self.basis_element(k)).collect(),
            Mode::ConjugateMid => {
                let mut out: Vec<Element> =
                    (0..self.dim).map(|k| self.basis_element(k)).collect();
                let i = CycNum::i();
                for k in 0..self.dim {
                    out.push(self.basis_element(k).scale(&i));
                }
                out
            }
        }
    }

    /// Coordinates of an element over `expansion_basis()`; real entries in
    /// the conjugate-mid (realified) case.
    pub fn expansion_coords(&self, e: &Element) -> Vec<CycNum> {
        match self.mode {
            Mode::Trilinear => e.coords.clone(),
            Mode::ConjugateMid => {
                let mut out = Vec::with_capacity(2 * self.dim);
                for c in &e.coords {
                    out.push(c.real_part());
                }
                for c in &e.coords {
                    out.push(c.imag_part());
                }
                out
            }
        }
    }

    /// Classify the product's symmetry by exhaustive checks over the
    /// expansion basis (sufficient by the product's multilinearity over
    /// the scalars used there).
    pub fn commutativity_type(&self) -> CommutativityType {
        let basis = self.expansion_basis();
        let mut left = true;
        let mut cyclic = true;
        'outer: for s in &basis {
            for u in &basis {
                for v in &basis {
                    let suv = self.ternary_product(s, u, v).unwrap();
                    if left && suv != self.ternary_product(u, s, v).unwrap() {
                        left = false;
                    }
                    if cyclic && suv != self.ternary_product(u, v, s).unwrap() {
                        cyclic = false;
                    }
                    if !left && !cyclic {
                        break 'outer;
                    }
                }
            }
        }
        match (left, cyclic) {
            (true, true) => CommutativityType::Commutative,
            (true, false) => CommutativityType::LeftCommutative,
            (false, true) => CommutativityType::CyclicCommutative,
            (false, false) => CommutativityType::NonCommutative,
        }
    }

    /// Structure constants of a bracket relative to a basis (canonical
    /// basis when omitted). Trilinear mode only; conjugate-mid algebras
    /// must use `structure_constants_realified`.
    pub fn structure_constants(
        &self,
        kind: BracketKind,
        basis: Option<&[Element]>,
    ) -> Result<StructureTensor, AlgebraError> {
        if self.mode != Mode::Trilinear {
            return Err(AlgebraError::NeedsRealification);
        }
        let basis_vec: Vec<Element> = match basis {
            None => (0..self.dim).map(|k| self.basis_element(k)).collect(),
            Some(b) => b.to_vec(),
        };
        if basis_vec.len() != self.dim {
            return Err(AlgebraError::Basis);
        }
        self.check_dims(&basis_vec.iter().collect::<Vec<_>>())?;
        let b_mat = CycMatrix::from_cols(
            &basis_vec.iter().map(|e| e.coords.clone()).collect::<Vec<_>>(),
        );
        let b_inv = b_mat.inverse().map_err(|_| AlgebraError::Basis)?;
        let n = self.dim;
        let mut out = StructureTensor::zeros(n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let v = self.bracket(kind, &basis_vec[i], &basis_vec[j], &basis_vec[k])?;
                    let coords = b_inv.mul_vec(&v.coords);
                    for (m, val) in coords.into_iter().enumerate() {
                        out.set(m, i, j, k, val);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Structure constants of an R-linear bracket over the realified basis
    /// {e₁,…,e_n, i·e₁,…,i·e_n}; all entries are conjugation-invariant.
    pub fn structure_constants_realified(
        &self,
        kind: BracketKind,
    ) -> Result<StructureTensor, AlgebraError> {
        let basis = self.expansion_basis();
        let n2 = basis.len();
        let mut out = StructureTensor::zeros(n2);
        for i in 0..n2 {
            for j in 0..n2 {
                for k in 0..n2 {
                    let v = self.bracket(kind, &basis[i], &basis[j], &basis[k])?;
                    let coords = self.expansion_coords(&v);
                    for (m, val) in coords.into_iter().enumerate() {
                        debug_assert!(val.is_real());
                        out.set(m, i, j, k, val);
                    }
                }
            }
        }
        Ok(out)
    }
}

/// ω-weighted average used when recovering 𝔱₁, 𝔱₂ from the ω-associators.
pub fn t1_from_q(q_omega: &Element, q_bar: &Element) -> Element {
    // (Q_ω − ω Q_ω̄)/(1 − ω)
    let num = q_omega.clone() - q_bar.scale(&CycNum::omega());
    let den = (CycNum::one() - CycNum::omega()).inv().unwrap();
    num.scale(&den)
}

pub fn t2_from_q(q_omega: &Element, q_bar: &Element) -> Element {
    // (Q_ω − Q_ω̄)/(ω − ω̄)
    let num = q_omega.clone() - q_bar.clone();
    let den = (CycNum::omega() - CycNum::omega_bar()).inv().unwrap();
    num.scale(&den)
}

/// Convenience: rational-coefficient element literal for tests.
pub fn element_of_rats(rats: &[(i64, i64)]) -> Element {
    Element::from_coords(
        rats.iter()
            .map(|&(n, d)| CycNum::from_rat(Rat::new(n.into(), d.into())))
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::CycNum;

    /// Toy trilinear algebra of dimension 2 with a single nonzero product
    /// e₁·e₂·e₁ = e₂ (indices 0-based in code).
    fn toy() -> TernaryAlgebra {
        let mut p = StructureTensor::zeros(2);
        p.set(1, 0, 1, 0, CycNum::one());
        TernaryAlgebra::with_default_labels(Mode::Trilinear, p).unwrap()
    }

    #[test]
    fn zero_dim_rejected() {
        let p = StructureTensor::zeros(0);
        assert!(TernaryAlgebra::with_default_labels(Mode::Trilinear, p).is_err());
    }

    #[test]
    fn product_additivity_zero_slot() {
        let a = toy();
        let y = Element::basis(2, 1);
        let z = Element::basis(2, 0);
        let r = a.ternary_product(&a.zero_element(), &y, &z).unwrap();
        assert!(r.is_zero());
    }

    #[test]
    fn shape_error() {
        let a = toy();
        let bad = Element::zero(3);
        assert!(matches!(
            a.ternary_product(&bad, &bad, &bad),
            Err(AlgebraError::Shape(_))
        ));
    }

    #[test]
    fn commutator_vanishes_on_equal_arguments() {
        let a = toy();
        let u = Element::from_coords(vec![CycNum::parse("1/3+w").unwrap(), CycNum::sqrt2()]);
        assert!(a.omega_commutator(&u, &u, &u).unwrap().is_zero());
        assert!(a.conj_commutator(&u, &u, &u).unwrap().is_zero());
        assert!(a.reduced_commutator(&u, &u, &u).unwrap().is_zero());
    }

    #[test]
    fn conjugate_bracket_is_reversed_omega_bracket() {
        let a = toy();
        let s = Element::from_coords(vec![CycNum::one(), CycNum::i()]);
        let u = Element::from_coords(vec![CycNum::omega(), CycNum::from_int(2)]);
        let v = Element::from_coords(vec![CycNum::sqrt2(), CycNum::from_ratio(1, 5)]);
        assert_eq!(
            a.conj_commutator(&s, &u, &v).unwrap(),
            a.omega_commutator(&v, &u, &s).unwrap()
        );
        // conjugate symmetry with omega-bar
        let lhs = a.conj_commutator(&s, &u, &v).unwrap();
        let rhs = a.conj_commutator(&u, &v, &s).unwrap().scale(&CycNum::omega_bar());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn omega_symmetry_of_commutator() {
        let a = toy();
        let s = Element::from_coords(vec![CycNum::one(), CycNum::i()]);
        let u = Element::from_coords(vec![CycNum::omega(), CycNum::from_int(2)]);
        let v = Element::from_coords(vec![CycNum::sqrt2(), CycNum::from_ratio(1, 5)]);
        let b = a.omega_commutator(&s, &u, &v).unwrap();
        assert_eq!(
            b,
            a.omega_commutator(&u, &v, &s).unwrap().scale(&CycNum::omega())
        );
        assert_eq!(
            b,
            a.omega_commutator(&v, &s, &u).unwrap().scale(&CycNum::omega_bar())
        );
    }

    #[test]
    fn transform_constants_identity_and_inverse() {
        let a = toy();
        let c = a.structure_constants(BracketKind::Omega, None).unwrap();
        let id = CycMatrix::identity(2);
        assert_eq!(transform_constants(&c, &id).unwrap(), c);
        let m = CycMatrix::from_rows(vec![
            vec![CycNum::from_int(2), CycNum::i()],
            vec![CycNum::zero(), CycNum::from_int(1)],
        ]);
        let forward = transform_constants(&c, &m).unwrap();
        let back = transform_constants(&forward, &m.inverse().unwrap()).unwrap();
        assert_eq!(back, c);
        let sing = CycMatrix::zeros(2, 2);
        assert_eq!(
            transform_constants(&c, &sing),
            Err(AlgebraError::Singular)
        );
    }

    #[test]
    fn constants_omega_symmetric_and_reconstruct() {
        let a = toy();
        let c = a.structure_constants(BracketKind::Omega, None).unwrap();
        assert!(c.is_omega_symmetric());
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    let direct = a
                        .omega_commutator(
                            &a.basis_element(i),
                            &a.basis_element(j),
                            &a.basis_element(k),
                        )
                        .unwrap();
                    assert_eq!(direct, c.basis_value(i, j, k));
                }
            }
        }
    }

    #[test]
    fn conjugate_mid_homogeneity() {
        let mut p = StructureTensor::zeros(2);
        // vector algebra (C^2, h): e_i . e_j . e_k = delta_ij e_k
        for i in 0..2 {
            for k in 0..2 {
                p.set(k, i, i, k, CycNum::one());
            }
        }
        let a = TernaryAlgebra::with_default_labels(Mode::ConjugateMid, p).unwrap();
        let e1 = a.basis_element(0);
        let e2 = a.basis_element(1);
        for alpha in [CycNum::i(), CycNum::omega(), CycNum::one() + CycNum::sqrt2()] {
            let lhs = a
                .ternary_product(&e1.scale(&alpha), &e1, &e2)
                .unwrap();
            assert_eq!(lhs, a.ternary_product(&e1, &e1, &e2).unwrap().scale(&alpha));
            let mid = a
                .ternary_product(&e1, &e1.scale(&alpha), &e2)
                .unwrap();
            assert_eq!(
                mid,
                a.ternary_product(&e1, &e1, &e2).unwrap().scale(&alpha.conj())
            );
        }
    }

    #[test]
    fn toy_is_noncommutative() {
        assert_eq!(toy().commutativity_type(), CommutativityType::NonCommutative);
        let zero = TernaryAlgebra::with_default_labels(Mode::Trilinear, StructureTensor::zeros(2))
            .unwrap();
        assert_eq!(zero.commutativity_type(), CommutativityType::Commutative);
    }
}
