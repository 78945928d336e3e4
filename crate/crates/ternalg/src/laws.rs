//! Exhaustive and sampled verification of the defining identities:
//! associativity of both kinds, ω-symmetry of brackets, the affine-group
//! five-point identity, its induced system on structure constants, and
//! the operator-construction conditions.
//!
//! Multilinear identities are certified on basis tuples; the product of a
//! conjugate-mid algebra is R-multilinear over the realified basis, so
//! exhaustive realified checks are sound there too. When the realified
//! tuple space is too large, the checker runs float-exhaustive plus an
//! exact check on seeded random tuples and reports mode "hybrid".

use crate::algebra::{BracketKind, Element, Mode, StructureTensor, TernaryAlgebra};
use crate::perms::{cyclic_sum, Perm5};
use crate::scalar::{CycNum, FloatC};
use crate::zoo::{FormSpec, Side};
use rand::Rng;
use rand::SeedableRng;
use rayon::prelude::*;
use serde::Serialize;

/// Argument positions of the four double-bracket terms: entries 0..2 form
/// the inner triple, 3..4 the outer pair, for the base tuple (u,v,w,x,y):
/// [[u,v,w],x,y], [[u,x,v],y,w], [[u,y,x],w,v], [[u,w,y],v,x].
const PATTERNS: [[usize; 5]; 4] = [
    [0, 1, 2, 3, 4],
    [0, 3, 1, 4, 2],
    [0, 4, 3, 2, 1],
    [0, 2, 4, 1, 3],
];

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum Verdict {
    #[serde(rename = "holds")]
    Holds,
    #[serde(rename = "fails")]
    Fails,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum ReportMode {
    #[serde(rename = "exact")]
    Exact,
    #[serde(rename = "float")]
    Float,
    #[serde(rename = "hybrid")]
    Hybrid,
}

#[derive(Clone, Debug, Serialize)]
pub struct Counterexample {
    /// Coordinate vectors (canonical scalar literals) of the arguments.
    pub args: Vec<Vec<String>>,
    /// Coordinates of the nonzero residual.
    pub residual: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct LawReport {
    pub law: String,
    pub verdict: Verdict,
    pub mode: ReportMode,
    pub tuples_checked: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl LawReport {
    pub fn holds(&self) -> bool {
        self.verdict == Verdict::Holds
    }
}

#[derive(Clone, Copy, PartialEq, Debug)]
pub enum RunMode {
    Exact,
    Float,
}

#[derive(Clone, Copy, Debug)]
pub struct CheckOptions {
    pub mode: RunMode,
    pub tol: f64,
    /// Truncate the tuple space (smoke tests; non-certifying).
    pub limit: Option<u64>,
    /// Largest tuple count still checked exactly and exhaustively before
    /// falling back to the hybrid regime.
    pub exhaustive_cap: u64,
    /// Random exact tuples in the hybrid regime.
    pub exact_samples: u64,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            mode: RunMode::Exact,
            tol: crate::scalar::FLOAT_TOL,
            limit: None,
            exhaustive_cap: 200_000,
            exact_samples: 100,
        }
    }
}

fn decode(mut t: u64, base: usize, arity: usize) -> Vec<usize> {
    let mut idx = vec![0usize; arity];
    for slot in (0..arity).rev() {
        idx[slot] = (t % base as u64) as usize;
        t /= base as u64;
    }
    idx
}

fn coords_strings(e: &Element) -> Vec<String> {
    e.coords.iter().map(CycNum::to_canonical_string).collect()
}

fn basis_args(basis: &[Element], idx: &[usize]) -> Vec<Vec<String>> {
    idx.iter().map(|&i| coords_strings(&basis[i])).collect()
}

/// Bracket (or product) values on the expansion basis, with coordinates
/// over the same basis. Real coordinates in the realified case.
pub fn bracket_table(a: &TernaryAlgebra, kind: BracketKind) -> StructureTensor {
    table_of(a, |s, u, v| a.bracket(kind, s, u, v).unwrap())
}

pub fn product_table(a: &TernaryAlgebra) -> StructureTensor {
    table_of(a, |s, u, v| a.ternary_product(s, u, v).unwrap())
}

fn table_of(
    a: &TernaryAlgebra,
    f: impl Fn(&Element, &Element, &Element) -> Element,
) -> StructureTensor {
    let basis = a.expansion_basis();
    let n = basis.len();
    let mut t = StructureTensor::zeros(n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let v = f(&basis[i], &basis[j], &basis[k]);
                for (m, c) in a.expansion_coords(&v).into_iter().enumerate() {
                    t.set(m, i, j, k, c);
                }
            }
        }
    }
    t
}

fn embed_tensor(t: &StructureTensor) -> Vec<FloatC> {
    let n = t.dim;
    let mut out = Vec::with_capacity(n * n * n * n);
    for m in 0..n {
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    out.push(t.get(m, i, j, k).embed());
                }
            }
        }
    }
    out
}

/// Σ over cyclic shifts and the four patterns of [[·,·,·],·,·], computed
/// by expanding the inner bracket over the table's basis.
fn ga15_residual_table(t: &StructureTensor, idx: &[usize]) -> Element {
    let n = t.dim;
    let mut acc = Element::zero(n);
    let sigma = Perm5::sigma();
    let mut p = Perm5::identity();
    for _ in 0..5 {
        for pat in &PATTERNS {
            let a: [usize; 5] = std::array::from_fn(|s| idx[p.apply(pat[s])]);
            for m in 0..n {
                let c = t.get(m, a[0], a[1], a[2]);
                if !c.is_zero() {
                    for q in 0..n {
                        let outer = t.get(q, m, a[3], a[4]);
                        if !outer.is_zero() {
                            acc.coords[q] += &(c * outer);
                        }
                    }
                }
            }
        }
        p = sigma.compose(&p);
    }
    acc
}

fn ga15_residual_float(ft: &[FloatC], n: usize, idx: &[usize]) -> f64 {
    let at = |m: usize, i: usize, j: usize, k: usize| ft[((m * n + i) * n + j) * n + k];
    let mut acc = vec![FloatC::new(0.0, 0.0); n];
    let sigma = Perm5::sigma();
    let mut p = Perm5::identity();
    for _ in 0..5 {
        for pat in &PATTERNS {
            let a: [usize; 5] = std::array::from_fn(|s| idx[p.apply(pat[s])]);
            for m in 0..n {
                let c = at(m, a[0], a[1], a[2]);
                if c.norm_sqr() > 0.0 {
                    for (q, slot) in acc.iter_mut().enumerate() {
                        *slot += c * at(q, m, a[3], a[4]);
                    }
                }
            }
        }
        p = sigma.compose(&p);
    }
    acc.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// Direct evaluation of the five-point identity on arbitrary elements,
/// with no table expansion. Used for sampled exact checks.
pub fn ga15_residual_direct(
    a: &TernaryAlgebra,
    kind: BracketKind,
    args: [&Element; 5],
) -> Element {
    cyclic_sum(
        |ar: [&Element; 5]| {
            let mut acc = a.zero_element();
            for pat in &PATTERNS {
                let inner = a.bracket(kind, ar[pat[0]], ar[pat[1]], ar[pat[2]]).unwrap();
                acc += &a.bracket(kind, &inner, ar[pat[3]], ar[pat[4]]).unwrap();
            }
            acc
        },
        args,
    )
}

fn min_failing(total: u64, fails: impl Fn(u64) -> bool + Sync) -> Option<u64> {
    (0..total).into_par_iter().filter(|&t| fails(t)).min()
}

fn random_element(rng: &mut impl Rng, dim: usize, complex: bool) -> Element {
    let mut coords = Vec::with_capacity(dim);
    for _ in 0..dim {
        let re = CycNum::from_ratio(rng.random_range(-2..=2), rng.random_range(1..=2));
        let c = if complex {
            let im = CycNum::from_ratio(rng.random_range(-2..=2), rng.random_range(1..=2));
            re + CycNum::i() * im
        } else {
            re
        };
        coords.push(c);
    }
    Element::from_coords(coords)
}

struct Exhaustive<'a> {
    law: String,
    basis: &'a [Element],
    arity: usize,
    opts: &'a CheckOptions,
}

impl<'a> Exhaustive<'a> {
    fn total(&self) -> (u64, Option<String>) {
        let full = (self.basis.len() as u64).pow(self.arity as u32);
        match self.opts.limit {
            Some(l) if l < full => (l, Some(format!("truncated to {l} of {full} tuples (non-certifying)"))),
            _ => (full, None),
        }
    }

    /// Exhaustive exact run with a residual function over basis indices.
    fn run_exact(&self, residual: impl Fn(&[usize]) -> Element + Sync) -> LawReport {
        let (total, note) = self.total();
        let b = self.basis.len();
        let arity = self.arity;
        let first =
            min_failing(total, |t| !residual(&decode(t, b, arity)).is_zero());
        self.report(ReportMode::Exact, total, note, first.map(|t| {
            let idx = decode(t, b, arity);
            Counterexample {
                args: basis_args(self.basis, &idx),
                residual: coords_strings(&residual(&idx)),
            }
        }))
    }

    fn run_float(&self, residual: impl Fn(&[usize]) -> f64 + Sync) -> LawReport {
        let (total, note) = self.total();
        let b = self.basis.len();
        let arity = self.arity;
        let tol = self.opts.tol;
        let first = min_failing(total, |t| residual(&decode(t, b, arity)) > tol);
        self.report(ReportMode::Float, total, note, first.map(|t| {
            let idx = decode(t, b, arity);
            Counterexample {
                args: basis_args(self.basis, &idx),
                residual: vec![format!("{:e}", residual(&idx))],
            }
        }))
    }

    fn report(
        &self,
        mode: ReportMode,
        tuples: u64,
        note: Option<String>,
        counterexample: Option<Counterexample>,
    ) -> LawReport {
        LawReport {
            law: self.law.clone(),
            verdict: if counterexample.is_some() {
                Verdict::Fails
            } else {
                Verdict::Holds
            },
            mode,
            tuples_checked: tuples,
            counterexample,
            note,
        }
    }
}

/// Float-exhaustive over basis tuples plus exact evaluation on seeded
/// random element tuples; used when the exact tuple space is too large.
fn run_hybrid(
    law: &str,
    a: &TernaryAlgebra,
    basis: &[Element],
    opts: &CheckOptions,
    float_residual: impl Fn(&[usize]) -> f64 + Sync,
    exact_residual: impl Fn([&Element; 5]) -> Element + Sync,
) -> LawReport {
    let ex = Exhaustive {
        law: law.to_string(),
        basis,
        arity: 5,
        opts,
    };
    let mut rep = ex.run_float(float_residual);
    rep.mode = ReportMode::Hybrid;
    if rep.verdict == Verdict::Fails {
        return rep;
    }
    let complex = a.mode == Mode::ConjugateMid;
    let samples: Vec<[Element; 5]> = {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x7e72_a1_5);
        (0..opts.exact_samples)
            .map(|_| std::array::from_fn(|_| random_element(&mut rng, a.dim, complex)))
            .collect()
    };
    let bad = samples
        .par_iter()
        .map(|s| exact_residual([&s[0], &s[1], &s[2], &s[3], &s[4]]))
        .find_map_first(|r| if r.is_zero() { None } else { Some(r) });
    rep.tuples_checked += opts.exact_samples;
    let extra = format!(
        "plus {} exact random element tuples",
        opts.exact_samples
    );
    rep.note = Some(match rep.note.take() {
        Some(n) => format!("{n}; {extra}"),
        None => extra,
    });
    if let Some(r) = bad {
        rep.verdict = Verdict::Fails;
        rep.counterexample = Some(Counterexample {
            args: vec![vec!["random-sample".into()]],
            residual: coords_strings(&r),
        });
    }
    rep
}

/// Whether basis-tuple exhaustion is both sound and affordable in exact
/// arithmetic for this algebra and options.
fn exact_feasible(basis_len: usize, arity: u32, opts: &CheckOptions) -> bool {
    (basis_len as u64).pow(arity) <= opts.exhaustive_cap
}

/// ω-symmetry [u,v,w] = ω[v,w,u] (ω̄ for the conjugate bracket) on all
/// basis (realified when needed) triples.
pub fn check_omega_symmetry(
    a: &TernaryAlgebra,
    kind: BracketKind,
    opts: &CheckOptions,
) -> LawReport {
    let factor = match kind {
        BracketKind::Conjugate => CycNum::omega_bar(),
        _ => CycNum::omega(),
    };
    // bracket values as elements of the complex algebra: the ω factor is
    // a complex scale, which is not a componentwise operation on
    // realified coordinates, so the realified table cannot be used here
    let basis = a.expansion_basis();
    let n = basis.len();
    let mut vals: Vec<Element> = Vec::with_capacity(n * n * n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                vals.push(a.bracket(kind, &basis[i], &basis[j], &basis[k]).unwrap());
            }
        }
    }
    let at = |i: usize, j: usize, k: usize| &vals[(i * n + j) * n + k];
    let ex = Exhaustive {
        law: "omega-symmetry".to_string(),
        basis: &basis,
        arity: 3,
        opts,
    };
    let residual =
        |idx: &[usize]| at(idx[0], idx[1], idx[2]).clone() - at(idx[1], idx[2], idx[0]).scale(&factor);
    match opts.mode {
        RunMode::Exact => ex.run_exact(residual),
        RunMode::Float => ex.run_float(|idx| residual(idx).float_norm()),
    }
}

/// Tensor-level symmetry check; also usable on hand-perturbed tables.
pub fn check_omega_symmetry_tensor(
    law: &str,
    table: &StructureTensor,
    factor: &CycNum,
    basis: &[Element],
    opts: &CheckOptions,
) -> LawReport {
    let ex = Exhaustive {
        law: law.to_string(),
        basis,
        arity: 3,
        opts,
    };
    let residual = |idx: &[usize]| {
        table.basis_value(idx[0], idx[1], idx[2])
            - table.basis_value(idx[1], idx[2], idx[0]).scale(factor)
    };
    match opts.mode {
        RunMode::Exact => ex.run_exact(residual),
        RunMode::Float => ex.run_float(|idx| residual(idx).float_norm()),
    }
}

/// The five-point identity of the bracket, over the expansion basis.
pub fn check_ga15_identity(
    a: &TernaryAlgebra,
    kind: BracketKind,
    opts: &CheckOptions,
) -> LawReport {
    let law = "ga15-identity";
    let basis = a.expansion_basis();
    let table = bracket_table(a, kind);
    match opts.mode {
        RunMode::Float => {
            let ft = embed_tensor(&table);
            let n = table.dim;
            Exhaustive {
                law: law.to_string(),
                basis: &basis,
                arity: 5,
                opts,
            }
            .run_float(|idx| ga15_residual_float(&ft, n, idx))
        }
        RunMode::Exact => {
            if exact_feasible(basis.len(), 5, opts) {
                Exhaustive {
                    law: law.to_string(),
                    basis: &basis,
                    arity: 5,
                    opts,
                }
                .run_exact(|idx| ga15_residual_table(&table, idx))
            } else {
                let ft = embed_tensor(&table);
                let n = table.dim;
                run_hybrid(
                    law,
                    a,
                    &basis,
                    opts,
                    |idx| ga15_residual_float(&ft, n, idx),
                    |args| ga15_residual_direct(a, kind, args),
                )
            }
        }
    }
}

/// The induced quadratic system on structure constants: for every index
/// 5-tuple, the cyclic sum of the four double contractions vanishes.
pub fn check_ga15_system(c: &StructureTensor, opts: &CheckOptions) -> LawReport {
    let n = c.dim;
    let basis: Vec<Element> = (0..n).map(|k| Element::basis(n, k)).collect();
    let ex = Exhaustive {
        law: "ga15-system".to_string(),
        basis: &basis,
        arity: 5,
        opts,
    };
    match opts.mode {
        RunMode::Exact => ex.run_exact(|idx| ga15_residual_table(c, idx)),
        RunMode::Float => {
            let ft = embed_tensor(c);
            ex.run_float(move |idx| ga15_residual_float(&ft, n, idx))
        }
    }
}

/// Residuals of the two defining equalities of the kind's associativity,
/// expanded over a product table.
fn assoc_residuals(t: &StructureTensor, kind: u8, idx: &[usize]) -> (Element, Element) {
    let n = t.dim;
    let mut first = Element::zero(n);
    let mut middle = Element::zero(n);
    let mut last = Element::zero(n);
    let (m1, m2, m3) = match kind {
        1 => (idx[1], idx[2], idx[3]),
        _ => (idx[3], idx[2], idx[1]),
    };
    for q in 0..n {
        let c = t.get(q, idx[0], idx[1], idx[2]);
        if !c.is_zero() {
            for out in 0..n {
                let v = t.get(out, q, idx[3], idx[4]);
                if !v.is_zero() {
                    first.coords[out] += &(c * v);
                }
            }
        }
        let c = t.get(q, m1, m2, m3);
        if !c.is_zero() {
            for out in 0..n {
                let v = t.get(out, idx[0], q, idx[4]);
                if !v.is_zero() {
                    middle.coords[out] += &(c * v);
                }
            }
        }
        let c = t.get(q, idx[2], idx[3], idx[4]);
        if !c.is_zero() {
            for out in 0..n {
                let v = t.get(out, idx[0], idx[1], q);
                if !v.is_zero() {
                    last.coords[out] += &(c * v);
                }
            }
        }
    }
    (first - middle.clone(), middle - last)
}

fn assoc_residual_direct(
    a: &TernaryAlgebra,
    kind: u8,
    args: [&Element; 5],
) -> Element {
    let [s, u, v, x, y] = args;
    let suv = a.ternary_product(s, u, v).unwrap();
    let first = a.ternary_product(&suv, x, y).unwrap();
    let inner = if kind == 1 {
        a.ternary_product(u, v, x).unwrap()
    } else {
        a.ternary_product(x, v, u).unwrap()
    };
    let middle = a.ternary_product(s, &inner, y).unwrap();
    let vxy = a.ternary_product(v, x, y).unwrap();
    let last = a.ternary_product(s, u, &vxy).unwrap();
    let r1 = first - middle.clone();
    if !r1.is_zero() {
        return r1;
    }
    middle - last
}

/// Associativity of the first or second kind, over all expansion-basis
/// 5-tuples (both defining equalities).
pub fn check_assoc(a: &TernaryAlgebra, kind: u8, opts: &CheckOptions) -> LawReport {
    assert!(kind == 1 || kind == 2, "kind must be 1 or 2");
    let law = format!("assoc-{kind}");
    let basis = a.expansion_basis();
    let table = product_table(a);
    let pick = |pair: (Element, Element)| {
        if !pair.0.is_zero() {
            pair.0
        } else {
            pair.1
        }
    };
    match opts.mode {
        RunMode::Float => {
            let ex = Exhaustive {
                law,
                basis: &basis,
                arity: 5,
                opts,
            };
            ex.run_float(|idx| {
                let (r1, r2) = assoc_residuals(&table, kind, idx);
                r1.float_norm().max(r2.float_norm())
            })
        }
        RunMode::Exact => {
            if exact_feasible(basis.len(), 5, opts) {
                let ex = Exhaustive {
                    law,
                    basis: &basis,
                    arity: 5,
                    opts,
                };
                ex.run_exact(|idx| pick(assoc_residuals(&table, kind, idx)))
            } else {
                run_hybrid(
                    &law,
                    a,
                    &basis,
                    opts,
                    |idx| {
                        let (r1, r2) = assoc_residuals(&table, kind, idx);
                        r1.float_norm().max(r2.float_norm())
                    },
                    |args| assoc_residual_direct(a, kind, args),
                )
            }
        }
    }
}

/// The operator-construction conditions of the given kind, checked over
/// all module-basis 4-tuples at the operator level.
pub fn check_construction_conditions(
    spec: &FormSpec,
    kind: u8,
    opts: &CheckOptions,
) -> LawReport {
    assert!(kind == 1 || kind == 2, "kind must be 1 or 2");
    let n = spec.module_dim;
    let basis: Vec<Element> = (0..n).map(|k| Element::basis(n, k)).collect();
    let ex = Exhaustive {
        law: format!("construction-conditions-{kind}"),
        basis: &basis,
        arity: 4,
        opts,
    };
    let unit = |i: usize| -> Vec<CycNum> {
        (0..n)
            .map(|t| if t == i { CycNum::one() } else { CycNum::zero() })
            .collect()
    };
    // Operator-level residual: the matrix of the left-hand form minus the
    // composed operators, flattened to an element.
    let residual = |idx: &[usize]| -> Element {
        let (a, b, c, d) = (unit(idx[0]), unit(idx[1]), unit(idx[2]), unit(idx[3]));
        let (lhs1, lhs2, rhs) = match spec.side {
            Side::Left => {
                // tuple (u, v, w, s)
                let fuv = spec.form_of(&a, &b);
                let fws = spec.form_of(&c, &d);
                let rhs = spec.operator(&fuv).mul(&spec.operator(&fws));
                let lhs1 = spec.operator(&spec.form_of(&spec.act(&fuv, &c), &d));
                let inner = if kind == 1 {
                    spec.act(&spec.form_of(&b, &c), &d)
                } else {
                    spec.act(&spec.form_of(&d, &c), &b)
                };
                let lhs2 = spec.operator(&spec.form_of(&a, &inner));
                (lhs1, lhs2, rhs)
            }
            Side::Right => {
                // tuple (v, w, s, t)
                let fvw = spec.form_of(&a, &b);
                let fst = spec.form_of(&c, &d);
                let rhs = spec.operator(&fvw).mul(&spec.operator(&fst));
                let lhs1 = spec.operator(&spec.form_of(&a, &spec.act(&fst, &b)));
                let lhs2 = if kind == 1 {
                    spec.operator(&spec.form_of(&spec.act(&spec.form_of(&b, &c), &a), &d))
                } else {
                    spec.operator(&spec.form_of(&spec.act(&spec.form_of(&b, &a), &c), &d))
                };
                (lhs1, lhs2, rhs)
            }
        };
        let mut coords = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let r1 = lhs1.at(i, j) - rhs.at(i, j);
                if !r1.is_zero() {
                    coords.push(r1);
                } else {
                    coords.push(lhs2.at(i, j) - rhs.at(i, j));
                }
            }
        }
        Element::from_coords(coords)
    };
    match opts.mode {
        RunMode::Exact => ex.run_exact(residual),
        RunMode::Float => ex.run_float(|idx| residual(idx).float_norm()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zoo::{
        cubic_algebra, random_tensor, rect_algebra, vector_algebra, CubicPairing, RectForm,
        VectorForm,
    };
    use crate::TernaryAlgebra;

    fn opts() -> CheckOptions {
        CheckOptions::default()
    }

    #[test]
    fn vector_algebra_assoc_kinds() {
        let a = vector_algebra(2, VectorForm::Alpha);
        assert!(check_assoc(&a, 2, &opts()).holds());
        let k1 = check_assoc(&a, 1, &opts());
        assert_eq!(k1.verdict, Verdict::Fails);
        assert!(k1.counterexample.is_some());
    }

    #[test]
    fn rect_transpose_second_kind() {
        let a = rect_algebra(2, 2, RectForm::Transpose);
        assert!(check_assoc(&a, 2, &opts()).holds());
    }

    #[test]
    fn hermitian_vector_second_kind_exact_realified() {
        let a = vector_algebra(2, VectorForm::Hermitian);
        let rep = check_assoc(&a, 2, &opts());
        assert_eq!(rep.mode, ReportMode::Exact);
        assert!(rep.holds());
    }

    #[test]
    fn omega_symmetry_of_brackets() {
        let a = vector_algebra(2, VectorForm::Alpha);
        for kind in [BracketKind::Omega, BracketKind::Conjugate, BracketKind::Reduced] {
            assert!(check_omega_symmetry(&a, kind, &opts()).holds());
        }
    }

    #[test]
    fn omega_symmetry_on_conjugate_mid_algebras() {
        // the identity is term-by-term, so it must survive realification
        for a in [
            vector_algebra(2, VectorForm::Hermitian),
            rect_algebra(2, 2, RectForm::Dagger),
        ] {
            let rep = check_omega_symmetry(&a, BracketKind::Omega, &opts());
            assert!(rep.holds(), "{rep:?}");
        }
    }

    #[test]
    fn broken_symmetry_detected() {
        let a = vector_algebra(2, VectorForm::Alpha);
        let mut table = bracket_table(&a, BracketKind::Omega);
        let bumped = table.get(0, 0, 1, 0) + &CycNum::one();
        table.set(0, 0, 1, 0, bumped);
        let rep = check_omega_symmetry_tensor(
            "omega-symmetry",
            &table,
            &CycNum::omega(),
            &a.expansion_basis(),
            &opts(),
        );
        assert_eq!(rep.verdict, Verdict::Fails);
        let ce = rep.counterexample.unwrap();
        assert!(!ce.residual.iter().all(|s| s == "0"));
    }

    #[test]
    fn ga15_on_vector_algebras() {
        for n in [1usize, 2, 3] {
            let a = vector_algebra(n, VectorForm::Alpha);
            assert!(check_ga15_identity(&a, BracketKind::Omega, &opts()).holds());
        }
    }

    #[test]
    fn ga15_fails_on_random_tensor() {
        let a =
            TernaryAlgebra::with_default_labels(Mode::Trilinear, random_tensor(3, 7)).unwrap();
        let rep = check_ga15_identity(&a, BracketKind::Omega, &opts());
        assert_eq!(rep.verdict, Verdict::Fails);
        // the found tuple is a stable regression fixture
        let ce = rep.counterexample.unwrap();
        assert_eq!(ce.args.len(), 5);
        // the system-of-constants oracle agrees
        let c = a
            .structure_constants(BracketKind::Omega, None)
            .unwrap();
        assert_eq!(check_ga15_system(&c, &opts()).verdict, Verdict::Fails);
    }

    #[test]
    fn ga15_oracle_agreement_holds_case() {
        let a = vector_algebra(2, VectorForm::Alpha);
        let identity = check_ga15_identity(&a, BracketKind::Omega, &opts());
        let c = a.structure_constants(BracketKind::Omega, None).unwrap();
        let system = check_ga15_system(&c, &opts());
        assert_eq!(identity.verdict, system.verdict);
        assert!(identity.holds());
    }

    #[test]
    fn zero_tensor_system_holds() {
        let rep = check_ga15_system(&StructureTensor::zeros(2), &opts());
        assert!(rep.holds());
        assert_eq!(rep.tuples_checked, 32);
    }

    #[test]
    fn limit_truncates_and_notes() {
        let a = vector_algebra(3, VectorForm::Alpha);
        let o = CheckOptions {
            limit: Some(10),
            ..opts()
        };
        let rep = check_ga15_identity(&a, BracketKind::Omega, &o);
        assert_eq!(rep.tuples_checked, 10);
        assert!(rep.note.unwrap().contains("non-certifying"));
    }

    #[test]
    fn float_mode_ga15() {
        let a = cubic_algebra(2, CubicPairing::A, false);
        let o = CheckOptions {
            mode: RunMode::Float,
            limit: Some(2000),
            ..opts()
        };
        let rep = check_ga15_identity(&a, BracketKind::Omega, &o);
        assert!(rep.holds());
        assert_eq!(rep.mode, ReportMode::Float);
    }

    #[test]
    fn report_serializes() {
        let a = vector_algebra(2, VectorForm::Alpha);
        let rep = check_assoc(&a, 1, &opts());
        let json = serde_json::to_string(&rep).unwrap();
        assert!(json.contains("\"law\":\"assoc-1\""));
        assert!(json.contains("\"verdict\":\"fails\""));
        assert!(json.contains("counterexample"));
    }

    #[test]
    fn direct_ga15_matches_table_path() {
        let a = vector_algebra(2, VectorForm::Alpha);
        let basis = a.expansion_basis();
        let table = bracket_table(&a, BracketKind::Omega);
        for idx in [[0usize, 1, 0, 1, 0], [1, 1, 0, 0, 1]] {
            let via_table = ga15_residual_table(&table, &idx);
            let args: [&Element; 5] = std::array::from_fn(|t| &basis[idx[t]]);
            let direct = ga15_residual_direct(&a, BracketKind::Omega, args);
            assert_eq!(via_table, direct);
        }
    }
}
