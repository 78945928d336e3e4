//! Concrete ternary algebras: vector algebras, rectangular-matrix
//! algebras, the four cubic-matrix products and their scalar-trace
//! variants, the canonical G-basis of order-2 cubic matrices, the
//! operator-from-pair construction, and finite binary relations.

use crate::algebra::{AlgebraError, Element, Mode, StructureTensor, TernaryAlgebra};
use crate::linalg::{echelonize, reduce_by_echelon, CycMatrix};
use crate::scalar::{CycNum, Rat};
use rand::Rng;
use rand::SeedableRng;
use serde::{Deserialize, Serialize};

/// Cubic matrix of order n: entries X_{ijk}, stored row-major with the
/// first index slowest. Public accessors are 1-based to match the usual
/// index conventions for these objects.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CubicMatrix {
    pub n: usize,
    entries: Vec<CycNum>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TracePair {
    P12,
    P13,
    P23,
}

impl CubicMatrix {
    pub fn zeros(n: usize) -> Self {
        CubicMatrix {
            n,
            entries: vec![CycNum::zero(); n * n * n],
        }
    }

    /// Build from sparse 1-based entries (i, j, k, value).
    pub fn from_entries(n: usize, entries: &[(usize, usize, usize, CycNum)]) -> Self {
        let mut x = Self::zeros(n);
        for (i, j, k, v) in entries {
            x.set(*i, *j, *k, v.clone());
        }
        x
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &CycNum {
        &self.entries[(i - 1) * self.n * self.n + (j - 1) * self.n + (k - 1)]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, v: CycNum) {
        self.entries[(i - 1) * self.n * self.n + (j - 1) * self.n + (k - 1)] = v;
    }

    /// Flattened coordinates in the basis of elementary cubic matrices,
    /// ordered with i slowest.
    pub fn to_element(&self) -> Element {
        Element::from_coords(self.entries.clone())
    }

    pub fn from_element(n: usize, e: &Element) -> Self {
        assert_eq!(e.coords.len(), n * n * n, "coordinate length mismatch");
        CubicMatrix {
            n,
            entries: e.coords.clone(),
        }
    }

    pub fn scale(&self, s: &CycNum) -> CubicMatrix {
        CubicMatrix {
            n: self.n,
            entries: self.entries.iter().map(|v| v * s).collect(),
        }
    }

    /// Partial trace over the named index pair, producing a vector:
    /// Tr₁,₂(X)_k = Σᵢ X_{iik}; Tr₁,₃(X)_j = Σᵢ X_{iji}; Tr₂,₃(X)_i = Σⱼ X_{ijj}.
    pub fn trace(&self, pair: TracePair) -> Vec<CycNum> {
        let n = self.n;
        (1..=n)
            .map(|free| {
                let mut acc = CycNum::zero();
                for d in 1..=n {
                    acc += match pair {
                        TracePair::P12 => self.get(d, d, free),
                        TracePair::P13 => self.get(d, free, d),
                        TracePair::P23 => self.get(free, d, d),
                    };
                }
                acc
            })
            .collect()
    }
}

fn rat(n: i64, d: i64) -> CycNum {
    CycNum::from_rat(Rat::new(n.into(), d.into()))
}

/// The canonical basis G₁…G₈ of order-2 cubic matrices. G₁, G₂ scale the
/// traceless-in-every-pair pair F₁, F₂ by −i√2/4; G₃…G₆ span the rest of
/// the Tr₁,₂ kernel; G₇, G₈ complete the basis.
pub fn canonical_g_basis() -> Vec<CubicMatrix> {
    let one = CycNum::one();
    let i = CycNum::i();
    let f1 = CubicMatrix::from_entries(
        2,
        &[
            (1, 1, 1, one.clone()),
            (2, 2, 1, -one.clone()),
            (1, 2, 2, -one.clone()),
            (2, 1, 2, -one.clone()),
        ],
    );
    let f2 = CubicMatrix::from_entries(
        2,
        &[
            (1, 2, 1, -one.clone()),
            (2, 1, 1, -one.clone()),
            (1, 1, 2, -one.clone()),
            (2, 2, 2, one.clone()),
        ],
    );
    // -(i*sqrt(2)/4)
    let lam = -(&i * &CycNum::sqrt2()).scale(&Rat::new(1.into(), 4.into()));
    let g1 = f1.scale(&lam);
    let g2 = f2.scale(&lam);
    let g3 = CubicMatrix::from_entries(2, &[(1, 2, 1, -i.clone()), (2, 1, 1, -&i * &rat(1, 2))]);
    let g4 = CubicMatrix::from_entries(2, &[(1, 2, 1, -one.clone()), (2, 1, 1, rat(1, 2))]);
    let g5 = CubicMatrix::from_entries(2, &[(1, 2, 2, -i.clone()), (2, 1, 2, -&i * &rat(1, 2))]);
    let g6 = CubicMatrix::from_entries(2, &[(1, 2, 2, -one.clone()), (2, 1, 2, rat(1, 2))]);
    let g7 = CubicMatrix::from_entries(2, &[(1, 1, 1, one.clone())]);
    let g8 = CubicMatrix::from_entries(2, &[(2, 2, 2, one)]);
    vec![g1, g2, g3, g4, g5, g6, g7, g8]
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum VectorForm {
    #[serde(rename = "alpha")]
    Alpha,
    #[serde(rename = "hermitian")]
    Hermitian,
}

/// (Cⁿ, α) or (Cⁿ, h): u·v·w = α(u,v) w with α(eᵢ,eⱼ) = δᵢⱼ. The
/// hermitian variant carries the same tensor in conjugate-mid mode.
pub fn vector_algebra(n: usize, form: VectorForm) -> TernaryAlgebra {
    let mut p = StructureTensor::zeros(n);
    for i in 0..n {
        for k in 0..n {
            p.set(k, i, i, k, CycNum::one());
        }
    }
    let mode = match form {
        VectorForm::Alpha => Mode::Trilinear,
        VectorForm::Hermitian => Mode::ConjugateMid,
    };
    TernaryAlgebra::with_default_labels(mode, p).unwrap()
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum RectForm {
    #[serde(rename = "transpose")]
    Transpose,
    #[serde(rename = "dagger")]
    Dagger,
}

/// m×n rectangular matrices with X·Y·Z = X Yᵀ Z (or X Y† Z). Basis is the
/// matrix units E_{ab}, flattened row-major.
pub fn rect_algebra(m: usize, n: usize, form: RectForm) -> TernaryAlgebra {
    let dim = m * n;
    let idx = |a: usize, b: usize| a * n + b;
    let mut p = StructureTensor::zeros(dim);
    // E_ab (E_cd)^T E_ef = δ_bd δ_ce E_af
    for a in 0..m {
        for b in 0..n {
            for c in 0..m {
                for f in 0..n {
                    p.set(idx(a, f), idx(a, b), idx(c, b), idx(c, f), CycNum::one());
                }
            }
        }
    }
    let labels = (1..=m)
        .flat_map(|a| (1..=n).map(move |b| format!("E{a}{b}")))
        .collect();
    let mode = match form {
        RectForm::Transpose => Mode::Trilinear,
        RectForm::Dagger => Mode::ConjugateMid,
    };
    TernaryAlgebra::new(labels, mode, p).unwrap()
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum CubicPairing {
    A,
    B,
}

fn cubic_labels(n: usize) -> Vec<String> {
    let mut labels = Vec::with_capacity(n * n * n);
    for i in 1..=n {
        for j in 1..=n {
            for k in 1..=n {
                labels.push(format!("E{i}{j}{k}"));
            }
        }
    }
    labels
}

/// Cubic matrices of order n with
/// (X·Y·Z)_{ijk} = Σ X_{ijp} μ(Y_{rsp}) Z_{srk} (pairing A)
/// or Z_{rsk} (pairing B); μ is conjugation when `conj_mid`.
pub fn cubic_algebra(n: usize, pairing: CubicPairing, conj_mid: bool) -> TernaryAlgebra {
    let idx = |i: usize, j: usize, k: usize| (i * n + j) * n + k;
    let mut p = StructureTensor::zeros(n * n * n);
    for i in 0..n {
        for j in 0..n {
            for pp in 0..n {
                for r in 0..n {
                    for s in 0..n {
                        for k in 0..n {
                            let z = match pairing {
                                CubicPairing::A => idx(s, r, k),
                                CubicPairing::B => idx(r, s, k),
                            };
                            p.set(idx(i, j, k), idx(i, j, pp), idx(r, s, pp), z, CycNum::one());
                        }
                    }
                }
            }
        }
    }
    let mode = if conj_mid {
        Mode::ConjugateMid
    } else {
        Mode::Trilinear
    };
    TernaryAlgebra::new(cubic_labels(n), mode, p).unwrap()
}

/// Scalar-trace cubic product: X·Y·Z = X scaled by Σ_p Tr(Y_(p) Z_(p))
/// = Σ_{p,r,s} μ(Y_{rsp}) Z_{srp}.
pub fn cubic_scalar_trace_algebra(n: usize, conj_mid: bool) -> TernaryAlgebra {
    let idx = |i: usize, j: usize, k: usize| (i * n + j) * n + k;
    let mut p = StructureTensor::zeros(n * n * n);
    for x in 0..n * n * n {
        for pp in 0..n {
            for r in 0..n {
                for s in 0..n {
                    p.set(x, x, idx(r, s, pp), idx(s, r, pp), CycNum::one());
                }
            }
        }
    }
    let mode = if conj_mid {
        Mode::ConjugateMid
    } else {
        Mode::Trilinear
    };
    TernaryAlgebra::new(cubic_labels(n), mode, p).unwrap()
}

/// Swap the roles of indices 1 and 2 of an order-2 cubic matrix in all
/// three slots. This is an automorphism of every cubic product above.
pub fn relabel_12(x: &CubicMatrix) -> CubicMatrix {
    assert_eq!(x.n, 2);
    let flip = |i: usize| 3 - i;
    let mut out = CubicMatrix::zeros(2);
    for i in 1..=2 {
        for j in 1..=2 {
            for k in 1..=2 {
                out.set(flip(i), flip(j), flip(k), x.get(i, j, k).clone());
            }
        }
    }
    out
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum Side {
    #[serde(rename = "left")]
    Left,
    #[serde(rename = "right")]
    Right,
}

/// Operator-from-pair construction: a module M with a form valued in an
/// operator space A and an action of A on M. Side `Left` gives
/// u·v·w = φ_{α(u,v)}(w); side `Right` gives u·v·w = u ◁ β(v,w).
#[derive(Clone, Debug)]
pub struct FormSpec {
    pub module_dim: usize,
    pub algebra_dim: usize,
    /// form[q][u][v]: coordinate q (in the action basis) of form(e_u, e_v).
    pub form: Vec<CycNum>,
    /// action[q]: the module_dim × module_dim matrix of the q-th operator.
    pub action: Vec<CycMatrix>,
    pub side: Side,
}

impl FormSpec {
    pub fn form_coord(&self, q: usize, u: usize, v: usize) -> &CycNum {
        &self.form[(q * self.module_dim + u) * self.module_dim + v]
    }

    /// Coordinates (in the action basis) of form(x, y) for module vectors.
    pub fn form_of(&self, x: &[CycNum], y: &[CycNum]) -> Vec<CycNum> {
        (0..self.algebra_dim)
            .map(|q| {
                let mut acc = CycNum::zero();
                for (u, xu) in x.iter().enumerate() {
                    if xu.is_zero() {
                        continue;
                    }
                    for (v, yv) in y.iter().enumerate() {
                        if !yv.is_zero() {
                            let c = self.form_coord(q, u, v);
                            if !c.is_zero() {
                                acc += &(&(xu * yv) * c);
                            }
                        }
                    }
                }
                acc
            })
            .collect()
    }

    /// Operator matrix of an element of A given by action-basis coords.
    pub fn operator(&self, coords: &[CycNum]) -> CycMatrix {
        let mut out = CycMatrix::zeros(self.module_dim, self.module_dim);
        for (q, c) in coords.iter().enumerate() {
            if !c.is_zero() {
                out = out.add(&self.action[q].scale(c));
            }
        }
        out
    }

    /// Apply the operator with the given coords to a module vector,
    /// honoring the side (left: matrix·vector, right: the same matrices
    /// encode the right action).
    pub fn act(&self, op_coords: &[CycNum], w: &[CycNum]) -> Vec<CycNum> {
        self.operator(op_coords).mul_vec(w)
    }
}

/// Build the ternary algebra of a form spec. Requires the action matrices
/// to be linearly independent and their span closed under composition
/// (the operator space must act as an associative matrix algebra).
pub fn make_algebra_from_form(spec: &FormSpec) -> Result<TernaryAlgebra, AlgebraError> {
    let n = spec.module_dim;
    let a = spec.algebra_dim;
    if spec.form.len() != a * n * n || spec.action.len() != a {
        return Err(AlgebraError::Shape("form/action tensor sizes".into()));
    }
    for m in &spec.action {
        if m.rows != n || m.cols != n {
            return Err(AlgebraError::Shape("action matrix shape".into()));
        }
    }
    let flat: Vec<Vec<CycNum>> = spec
        .action
        .iter()
        .map(|m| (0..n).flat_map(|i| m.row(i).to_vec()).collect())
        .collect();
    let (ech, pivots) = echelonize(flat);
    if ech.len() != a {
        return Err(AlgebraError::Construction(
            "action matrices are linearly dependent".into(),
        ));
    }
    for x in &spec.action {
        for y in &spec.action {
            let prod = x.mul(y);
            let v: Vec<CycNum> = (0..n).flat_map(|i| prod.row(i).to_vec()).collect();
            if !reduce_by_echelon(&v, &ech, &pivots).iter().all(CycNum::is_zero) {
                return Err(AlgebraError::Construction(
                    "operator products escape the action span (not a representation)".into(),
                ));
            }
        }
    }
    let mut p = StructureTensor::zeros(n);
    for i in 0..n {
        let ei: Vec<CycNum> = (0..n)
            .map(|t| if t == i { CycNum::one() } else { CycNum::zero() })
            .collect();
        for j in 0..n {
            let ej: Vec<CycNum> = (0..n)
                .map(|t| if t == j { CycNum::one() } else { CycNum::zero() })
                .collect();
            for k in 0..n {
                let ek: Vec<CycNum> = (0..n)
                    .map(|t| if t == k { CycNum::one() } else { CycNum::zero() })
                    .collect();
                let value = match spec.side {
                    Side::Left => {
                        let op = spec.form_of(&ei, &ej);
                        spec.act(&op, &ek)
                    }
                    Side::Right => {
                        let op = spec.form_of(&ej, &ek);
                        spec.act(&op, &ei)
                    }
                };
                for (m, v) in value.into_iter().enumerate() {
                    p.set(m, i, j, k, v);
                }
            }
        }
    }
    TernaryAlgebra::with_default_labels(Mode::Trilinear, p)
}

/// Binary relation between finite sets, as a boolean matrix.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct FiniteRelation {
    pub a: usize,
    pub b: usize,
    /// Bit (i*b + j) set iff (i, j) is in the relation.
    pub bits: u64,
}

impl FiniteRelation {
    pub fn empty(a: usize, b: usize) -> Self {
        assert!(a * b <= 64, "relation too large");
        FiniteRelation { a, b, bits: 0 }
    }

    pub fn from_pairs(a: usize, b: usize, pairs: &[(usize, usize)]) -> Self {
        let mut r = Self::empty(a, b);
        for &(i, j) in pairs {
            assert!(i < a && j < b);
            r.bits |= 1 << (i * b + j);
        }
        r
    }

    pub fn identity(n: usize) -> Self {
        let mut r = Self::empty(n, n);
        for i in 0..n {
            r.bits |= 1 << (i * n + i);
        }
        r
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        self.bits >> (i * self.b + j) & 1 == 1
    }

    pub fn inverse(&self) -> FiniteRelation {
        let mut r = FiniteRelation::empty(self.b, self.a);
        for i in 0..self.a {
            for j in 0..self.b {
                if self.contains(i, j) {
                    r.bits |= 1 << (j * self.a + i);
                }
            }
        }
        r
    }

    pub fn compose(&self, other: &FiniteRelation) -> Result<FiniteRelation, AlgebraError> {
        if self.b != other.a {
            return Err(AlgebraError::Shape(format!(
                "cannot compose relation into {} with relation from {}",
                self.b, other.a
            )));
        }
        let mut r = FiniteRelation::empty(self.a, other.b);
        for i in 0..self.a {
            for j in 0..self.b {
                if self.contains(i, j) {
                    for k in 0..other.b {
                        if other.contains(j, k) {
                            r.bits |= 1 << (i * other.b + k);
                        }
                    }
                }
            }
        }
        Ok(r)
    }

    /// All 2^(a·b) relations between sets of sizes a and b.
    pub fn all(a: usize, b: usize) -> Vec<FiniteRelation> {
        assert!(a * b <= 16, "enumeration too large");
        (0..1u64 << (a * b))
            .map(|bits| FiniteRelation { a, b, bits })
            .collect()
    }
}

/// R·S·T = R ∘ S⁻¹ ∘ T for relations in a common P(A, B).
pub fn relation_ternary(
    r: &FiniteRelation,
    s: &FiniteRelation,
    t: &FiniteRelation,
) -> Result<FiniteRelation, AlgebraError> {
    if (r.a, r.b) != (s.a, s.b) || (r.a, r.b) != (t.a, t.b) {
        return Err(AlgebraError::Shape(
            "relations must share domain and codomain".into(),
        ));
    }
    r.compose(&s.inverse())?.compose(t)
}

/// Algebra descriptor, the JSON exchange format of the CLI.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Descriptor {
    Vector {
        n: usize,
        form: VectorForm,
    },
    Rect {
        m: usize,
        n: usize,
        form: RectForm,
    },
    Cubic {
        n: usize,
        pairing: CubicPairing,
        #[serde(default)]
        conj_mid: bool,
    },
    CubicScalar {
        n: usize,
        #[serde(default)]
        conj_mid: bool,
    },
    Zero {
        dim: usize,
    },
    Custom {
        dim: usize,
        mode: Mode,
        #[serde(default)]
        product: Vec<TensorEntry>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        random_seed: Option<u64>,
    },
}

/// One nonzero tensor entry; indices are 1-based in the JSON form.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TensorEntry {
    pub m: usize,
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub value: String,
}

pub fn tensor_to_entries(t: &StructureTensor) -> Vec<TensorEntry> {
    let n = t.dim;
    let mut out = Vec::new();
    for m in 0..n {
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let v = t.get(m, i, j, k);
                    if !v.is_zero() {
                        out.push(TensorEntry {
                            m: m + 1,
                            i: i + 1,
                            j: j + 1,
                            k: k + 1,
                            value: v.to_canonical_string(),
                        });
                    }
                }
            }
        }
    }
    out
}

pub fn tensor_from_entries(
    dim: usize,
    entries: &[TensorEntry],
) -> Result<StructureTensor, AlgebraError> {
    let mut t = StructureTensor::zeros(dim);
    for e in entries {
        if [e.m, e.i, e.j, e.k].iter().any(|&x| x == 0 || x > dim) {
            return Err(AlgebraError::Shape(format!(
                "tensor index out of range 1..{dim}: ({}, {}, {}, {})",
                e.m, e.i, e.j, e.k
            )));
        }
        let v = CycNum::parse(&e.value)
            .map_err(|err| AlgebraError::Shape(format!("bad scalar {:?}: {err}", e.value)))?;
        t.set(e.m - 1, e.i - 1, e.j - 1, e.k - 1, v);
    }
    Ok(t)
}

/// Deterministic small-rational product tensor for negative controls.
pub fn random_tensor(dim: usize, seed: u64) -> StructureTensor {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut t = StructureTensor::zeros(dim);
    for m in 0..dim {
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    let num: i64 = rng.random_range(-2..=2);
                    if num != 0 {
                        let den: i64 = rng.random_range(1..=3);
                        t.set(m, i, j, k, CycNum::from_ratio(num, den));
                    }
                }
            }
        }
    }
    t
}

impl Descriptor {
    pub fn build(&self) -> Result<TernaryAlgebra, AlgebraError> {
        match self {
            Descriptor::Vector { n, form } => Ok(vector_algebra(*n, *form)),
            Descriptor::Rect { m, n, form } => Ok(rect_algebra(*m, *n, *form)),
            Descriptor::Cubic { n, pairing, conj_mid } => {
                Ok(cubic_algebra(*n, *pairing, *conj_mid))
            }
            Descriptor::CubicScalar { n, conj_mid } => {
                Ok(cubic_scalar_trace_algebra(*n, *conj_mid))
            }
            Descriptor::Zero { dim } => {
                TernaryAlgebra::with_default_labels(Mode::Trilinear, StructureTensor::zeros(*dim))
            }
            Descriptor::Custom {
                dim,
                mode,
                product,
                random_seed,
            } => {
                let tensor = match random_seed {
                    Some(seed) => random_tensor(*dim, *seed),
                    None => tensor_from_entries(*dim, product)?,
                };
                TernaryAlgebra::with_default_labels(*mode, tensor)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::CommutativityType;

    /// Independent index-summation oracle for the cubic products.
    fn cubic_product_oracle(
        x: &CubicMatrix,
        y: &CubicMatrix,
        z: &CubicMatrix,
        pairing: CubicPairing,
        conj_mid: bool,
    ) -> CubicMatrix {
        let n = x.n;
        let mut out = CubicMatrix::zeros(n);
        for i in 1..=n {
            for j in 1..=n {
                for k in 1..=n {
                    let mut acc = CycNum::zero();
                    for p in 1..=n {
                        for r in 1..=n {
                            for s in 1..=n {
                                let ym = if conj_mid {
                                    y.get(r, s, p).conj()
                                } else {
                                    y.get(r, s, p).clone()
                                };
                                let zf = match pairing {
                                    CubicPairing::A => z.get(s, r, k),
                                    CubicPairing::B => z.get(r, s, k),
                                };
                                acc += &(&(x.get(i, j, p) * &ym) * zf);
                            }
                        }
                    }
                    out.set(i, j, k, acc);
                }
            }
        }
        out
    }

    #[test]
    fn cubic_matches_oracle_on_g_basis() {
        let gs = canonical_g_basis();
        for pairing in [CubicPairing::A, CubicPairing::B] {
            for conj_mid in [false, true] {
                let alg = cubic_algebra(2, pairing, conj_mid);
                for x in &gs {
                    for y in &gs {
                        for z in &gs {
                            let via_alg = alg
                                .ternary_product(&x.to_element(), &y.to_element(), &z.to_element())
                                .unwrap();
                            let via_oracle =
                                cubic_product_oracle(x, y, z, pairing, conj_mid).to_element();
                            assert_eq!(via_alg, via_oracle);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn g7_cubed_is_g7() {
        let alg = cubic_algebra(2, CubicPairing::A, false);
        let g7 = canonical_g_basis()[6].to_element();
        assert_eq!(alg.ternary_product(&g7, &g7, &g7).unwrap(), g7);
        let st = cubic_scalar_trace_algebra(2, false);
        assert_eq!(st.ternary_product(&g7, &g7, &g7).unwrap(), g7);
    }

    #[test]
    fn g_basis_traces_and_rank() {
        let gs = canonical_g_basis();
        for g in &gs[..2] {
            for pair in [TracePair::P12, TracePair::P13, TracePair::P23] {
                assert!(g.trace(pair).iter().all(CycNum::is_zero));
            }
        }
        for g in &gs[2..6] {
            assert!(g.trace(TracePair::P12).iter().all(CycNum::is_zero));
            let other_traces_zero = g.trace(TracePair::P13).iter().all(CycNum::is_zero)
                && g.trace(TracePair::P23).iter().all(CycNum::is_zero);
            assert!(!other_traces_zero);
        }
        let rows: Vec<Vec<CycNum>> = gs.iter().map(|g| g.to_element().coords).collect();
        assert_eq!(echelonize(rows).0.len(), 8);
    }

    #[test]
    fn trace_examples() {
        let f1 = CubicMatrix::from_entries(
            2,
            &[
                (1, 1, 1, CycNum::one()),
                (2, 2, 1, -CycNum::one()),
                (1, 2, 2, -CycNum::one()),
                (2, 1, 2, -CycNum::one()),
            ],
        );
        assert!(f1.trace(TracePair::P12).iter().all(CycNum::is_zero));
        let idlike = CubicMatrix::from_entries(
            2,
            &[(1, 1, 1, CycNum::one()), (2, 2, 1, CycNum::one())],
        );
        assert_eq!(
            idlike.trace(TracePair::P12),
            vec![CycNum::from_int(2), CycNum::zero()]
        );
        let g3 = &canonical_g_basis()[2];
        assert_eq!(g3.trace(TracePair::P13), vec![CycNum::zero(), -CycNum::i()]);
    }

    #[test]
    fn vector_algebra_products() {
        let a = vector_algebra(2, VectorForm::Alpha);
        let e1 = a.basis_element(0);
        let e2 = a.basis_element(1);
        assert!(a.ternary_product(&e1, &e2, &e1).unwrap().is_zero());
        assert_eq!(a.ternary_product(&e1, &e1, &e2).unwrap(), e2);
        assert_eq!(a.commutativity_type(), CommutativityType::LeftCommutative);
        // reduced bracket on distinct pairs
        assert_eq!(a.reduced_commutator(&e1, &e2, &e1).unwrap(), e2);
        let a3 = vector_algebra(3, VectorForm::Alpha);
        let (f1, f2, f3) = (
            a3.basis_element(0),
            a3.basis_element(1),
            a3.basis_element(2),
        );
        assert!(a3.reduced_commutator(&f1, &f2, &f3).unwrap().is_zero());
    }

    #[test]
    fn rect_matches_vector_when_one_row() {
        let r = rect_algebra(1, 3, RectForm::Transpose);
        let v = vector_algebra(3, VectorForm::Alpha);
        assert_eq!(r.product_tensor(), v.product_tensor());
    }

    #[test]
    fn rect_matrix_unit_products() {
        // 2x2: E11 . E11 . E12 = E11 (E11)^T E12 = E12
        let r = rect_algebra(2, 2, RectForm::Transpose);
        let e11 = r.basis_element(0);
        let e12 = r.basis_element(1);
        assert_eq!(r.ternary_product(&e11, &e11, &e12).unwrap(), e12);
        assert!(r
            .ternary_product(&r.zero_element(), &e11, &e12)
            .unwrap()
            .is_zero());
    }

    #[test]
    fn cubic_is_noncommutative() {
        assert_eq!(
            cubic_algebra(2, CubicPairing::A, false).commutativity_type(),
            CommutativityType::NonCommutative
        );
    }

    #[test]
    fn relabel_is_cubic_automorphism() {
        let alg = cubic_algebra(2, CubicPairing::A, false);
        let gs = canonical_g_basis();
        for x in &gs {
            for y in &gs {
                for z in &gs {
                    let lhs = CubicMatrix::from_element(
                        2,
                        &alg.ternary_product(&x.to_element(), &y.to_element(), &z.to_element())
                            .unwrap(),
                    );
                    let rhs = alg
                        .ternary_product(
                            &relabel_12(x).to_element(),
                            &relabel_12(y).to_element(),
                            &relabel_12(z).to_element(),
                        )
                        .unwrap();
                    assert_eq!(relabel_12(&lhs).to_element(), rhs);
                }
            }
        }
    }

    #[test]
    fn form_construction_recovers_rect_algebra() {
        // alpha(X, Y) = X Y^T on 2x2 matrices, left action of M_2.
        // Action basis: the four matrix units of M_2 acting on the
        // flattened 2x2 module.
        let n = 4usize;
        let mut action = Vec::new();
        for a in 0..2 {
            for b in 0..2 {
                // E_ab acting on E_cd = delta_bc E_ad
                let mut m = CycMatrix::zeros(n, n);
                for d in 0..2 {
                    *m.at_mut(a * 2 + d, b * 2 + d) = CycNum::one();
                }
                action.push(m);
            }
        }
        // form(E_ab, E_cd) = E_ab (E_cd)^T = delta_bd E_ac
        let mut form = vec![CycNum::zero(); 4 * n * n];
        for a in 0..2 {
            for b in 0..2 {
                for c in 0..2 {
                    let q = a * 2 + c;
                    let u = a * 2 + b;
                    let v = c * 2 + b;
                    form[(q * n + u) * n + v] = CycNum::one();
                }
            }
        }
        let spec = FormSpec {
            module_dim: n,
            algebra_dim: 4,
            form,
            action,
            side: Side::Left,
        };
        let alg = make_algebra_from_form(&spec).unwrap();
        assert_eq!(
            alg.product_tensor(),
            rect_algebra(2, 2, RectForm::Transpose).product_tensor()
        );
    }

    #[test]
    fn form_construction_rejects_non_representation() {
        // A single nilpotent-free candidate whose square escapes its span.
        let mut m = CycMatrix::zeros(2, 2);
        *m.at_mut(0, 1) = CycNum::one();
        *m.at_mut(1, 0) = CycNum::one();
        let spec = FormSpec {
            module_dim: 2,
            algebra_dim: 1,
            form: vec![CycNum::one(); 4],
            action: vec![m],
            side: Side::Left,
        };
        assert!(matches!(
            make_algebra_from_form(&spec),
            Err(AlgebraError::Construction(_))
        ));
    }

    #[test]
    fn zero_form_gives_zero_algebra() {
        let spec = FormSpec {
            module_dim: 2,
            algebra_dim: 1,
            form: vec![CycNum::zero(); 4],
            action: vec![CycMatrix::identity(2)],
            side: Side::Right,
        };
        let alg = make_algebra_from_form(&spec).unwrap();
        assert!(alg.product_tensor().is_zero());
    }

    #[test]
    fn relation_identity_middle() {
        let rels = FiniteRelation::all(2, 2);
        let id = FiniteRelation::identity(2);
        for r in &rels {
            for t in &rels {
                assert_eq!(
                    relation_ternary(r, &id, t).unwrap(),
                    r.compose(t).unwrap()
                );
            }
        }
    }

    #[test]
    fn relation_surjective_function_absorbs() {
        // graph of a bijection f on a 3-element set: R . R . T contains T
        let f = FiniteRelation::from_pairs(3, 3, &[(0, 1), (1, 2), (2, 0)]);
        let rels = [
            FiniteRelation::from_pairs(3, 3, &[(0, 0), (1, 1)]),
            FiniteRelation::from_pairs(3, 3, &[(2, 1)]),
            FiniteRelation::identity(3),
        ];
        for t in &rels {
            let p = relation_ternary(&f, &f, t).unwrap();
            assert_eq!(p.bits & t.bits, t.bits);
        }
    }

    #[test]
    fn relation_shape_mismatch() {
        let r = FiniteRelation::empty(2, 3);
        let s = FiniteRelation::empty(2, 2);
        assert!(relation_ternary(&r, &s, &s).is_err());
    }

    #[test]
    fn descriptor_json_roundtrip() {
        let descriptors = [
            r#"{"kind":"cubic","n":2,"pairing":"A","conj_mid":false}"#,
            r#"{"kind":"vector","n":3,"form":"alpha"}"#,
            r#"{"kind":"rect","m":2,"n":3,"form":"transpose"}"#,
            r#"{"kind":"zero","dim":4}"#,
        ];
        for text in descriptors {
            let d: Descriptor = serde_json::from_str(text).unwrap();
            let alg = d.build().unwrap();
            let text2 = serde_json::to_string(&d).unwrap();
            let d2: Descriptor = serde_json::from_str(&text2).unwrap();
            assert_eq!(alg.dim, d2.build().unwrap().dim);
        }
        let custom = r#"{"kind":"custom","dim":2,"mode":"trilinear",
            "product":[{"m":2,"i":1,"j":2,"k":1,"value":"1/2*w"}]}"#;
        let d: Descriptor = serde_json::from_str(custom).unwrap();
        let alg = d.build().unwrap();
        assert_eq!(
            *alg.product_tensor().get(1, 0, 1, 0),
            CycNum::omega().scale(&Rat::new(1.into(), 2.into()))
        );
    }

    #[test]
    fn custom_tensor_entry_roundtrip() {
        let t = random_tensor(2, 7);
        let entries = tensor_to_entries(&t);
        let t2 = tensor_from_entries(2, &entries).unwrap();
        assert_eq!(t, t2);
    }
}
