//! Permutations of five points and the general affine group GA(1,5),
//! realized as the subgroup of S₅ generated by σ = (1 2 3 4 5) and
//! τ = (2 4 5 3). The cyclic-sum operator acts on argument POSITIONS:
//! position i of the permuted tuple receives the argument at σᵏ(i).

use std::collections::BTreeSet;
use std::fmt;

/// A permutation of {1..5}, stored 0-based: `images[i]` is the image of i.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm5 {
    images: [u8; 5],
}

impl Perm5 {
    pub fn identity() -> Self {
        Perm5 {
            images: [0, 1, 2, 3, 4],
        }
    }

    /// Build from 0-based images; panics unless a bijection.
    pub fn from_images(images: [u8; 5]) -> Self {
        let mut seen = [false; 5];
        for &x in &images {
            assert!((x as usize) < 5 && !seen[x as usize], "not a bijection");
            seen[x as usize] = true;
        }
        Perm5 { images }
    }

    /// Build from disjoint cycles over 1-based points, e.g. `&[&[1,2,3,4,5]]`.
    pub fn from_cycles(cycles: &[&[u8]]) -> Self {
        let mut images = [0u8, 1, 2, 3, 4];
        for cyc in cycles {
            for w in 0..cyc.len() {
                let from = cyc[w] - 1;
                let to = cyc[(w + 1) % cyc.len()] - 1;
                images[from as usize] = to;
            }
        }
        Self::from_images(images)
    }

    /// σ = (1 2 3 4 5).
    pub fn sigma() -> Self {
        Self::from_cycles(&[&[1, 2, 3, 4, 5]])
    }

    /// τ = (2 4 5 3).
    pub fn tau() -> Self {
        Self::from_cycles(&[&[2, 4, 5, 3]])
    }

    /// 0-based application.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    /// Product in left-to-right order: (self · other)(x) = other(self(x)).
    /// Matches the row convention under which τστ⁻¹ = σ² for the two
    /// generating cycles.
    pub fn compose(&self, other: &Perm5) -> Perm5 {
        Perm5 {
            images: std::array::from_fn(|i| other.images[self.images[i] as usize]),
        }
    }

    pub fn inverse(&self) -> Perm5 {
        let mut images = [0u8; 5];
        for (i, &img) in self.images.iter().enumerate() {
            images[img as usize] = i as u8;
        }
        Perm5 { images }
    }

    pub fn pow(&self, k: usize) -> Perm5 {
        let mut out = Perm5::identity();
        for _ in 0..k {
            out = self.compose(&out);
        }
        out
    }

    /// True when the permutation is x ↦ ax + b on {0..4} over F₅.
    pub fn is_affine_mod5(&self) -> bool {
        (1..5).any(|a| {
            (0..5).any(|b| (0..5).all(|x| self.apply(x) == (a * x + b) % 5))
        })
    }

    /// Parse cycle notation, e.g. "(1 2 3 4 5)(…)" or "id".
    pub fn parse(text: &str) -> Result<Perm5, String> {
        let t = text.trim();
        if t == "id" || t == "()" {
            return Ok(Perm5::identity());
        }
        let mut cycles: Vec<Vec<u8>> = Vec::new();
        let mut rest = t;
        while !rest.is_empty() {
            let rest2 = rest.trim_start();
            let Some(stripped) = rest2.strip_prefix('(') else {
                return Err(format!("expected '(' in permutation: {text}"));
            };
            let Some(end) = stripped.find(')') else {
                return Err(format!("unbalanced parentheses in: {text}"));
            };
            let body = &stripped[..end];
            let cyc: Result<Vec<u8>, _> = body
                .split_whitespace()
                .map(|s| s.parse::<u8>().map_err(|e| e.to_string()))
                .collect();
            let cyc = cyc?;
            if cyc.iter().any(|&x| !(1..=5).contains(&x)) {
                return Err(format!("point out of range 1..5 in: {text}"));
            }
            cycles.push(cyc);
            rest = &stripped[end + 1..];
        }
        let refs: Vec<&[u8]> = cycles.iter().map(|c| c.as_slice()).collect();
        Ok(Perm5::from_cycles(&refs))
    }
}

impl fmt::Display for Perm5 {
    /// Cycle notation over 1-based points; identity prints as "id".
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = [false; 5];
        let mut cycles = Vec::new();
        for start in 0..5 {
            if seen[start] || self.apply(start) == start {
                seen[start] = true;
                continue;
            }
            let mut cyc = vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                cyc.push(x);
                x = self.apply(x);
            }
            cycles.push(cyc);
        }
        if cycles.is_empty() {
            return f.write_str("id");
        }
        for cyc in cycles {
            let body: Vec<String> = cyc.iter().map(|&x| (x + 1).to_string()).collect();
            write!(f, "({})", body.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm5 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm5[{self}]")
    }
}

/// Closure of the generated subgroup, ordered lexicographically.
pub fn generate_subgroup(gens: &[Perm5]) -> BTreeSet<Perm5> {
    assert!(!gens.is_empty(), "need at least one generator");
    let mut set: BTreeSet<Perm5> = BTreeSet::new();
    set.insert(Perm5::identity());
    let mut frontier: Vec<Perm5> = vec![Perm5::identity()];
    while let Some(p) = frontier.pop() {
        for g in gens {
            for q in [g.compose(&p), g.inverse().compose(&p)] {
                if set.insert(q) {
                    frontier.push(q);
                }
            }
        }
    }
    set
}

/// Verification report for the GA(1,5) presentation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PresentationReport {
    pub sigma_pow5_is_identity: bool,
    pub tau_pow4_is_identity: bool,
    pub conjugation_gives_sigma_squared: bool,
    pub group_order: usize,
    pub all_elements_affine: bool,
}

impl PresentationReport {
    pub fn holds(&self) -> bool {
        self.sigma_pow5_is_identity
            && self.tau_pow4_is_identity
            && self.conjugation_gives_sigma_squared
            && self.group_order == 20
            && self.all_elements_affine
    }
}

/// Check σ⁵ = e, τ⁴ = e, τστ⁻¹ = σ², |⟨σ,τ⟩| = 20, and that every element
/// is affine over F₅.
pub fn check_presentation() -> PresentationReport {
    let sigma = Perm5::sigma();
    let tau = Perm5::tau();
    let group = generate_subgroup(&[sigma, tau]);
    PresentationReport {
        sigma_pow5_is_identity: sigma.pow(5) == Perm5::identity(),
        tau_pow4_is_identity: tau.pow(4) == Perm5::identity(),
        conjugation_gives_sigma_squared: tau.compose(&sigma).compose(&tau.inverse())
            == sigma.pow(2),
        group_order: group.len(),
        all_elements_affine: group.iter().all(Perm5::is_affine_mod5),
    }
}

/// Σ_{k=0..4} f(args permuted by σᵏ), where position i of the permuted
/// tuple holds the argument at index σᵏ(i).
pub fn cyclic_sum<T, F>(f: F, args: [&T; 5]) -> T
where
    T: Clone + std::ops::Add<Output = T>,
    F: Fn([&T; 5]) -> T,
{
    let sigma = Perm5::sigma();
    let mut acc: Option<T> = None;
    let mut p = Perm5::identity();
    for _ in 0..5 {
        let permuted: [&T; 5] = std::array::from_fn(|i| args[p.apply(i)]);
        let v = f(permuted);
        acc = Some(match acc {
            None => v,
            Some(a) => a + v,
        });
        p = sigma.compose(&p);
    }
    acc.unwrap()
}
