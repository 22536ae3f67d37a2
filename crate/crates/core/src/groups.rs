//! Finite abelian groups in scope: cyclic `C_n`, elementary abelian `(C_p)^s`,
//! and (for the generic cohomology machinery) arbitrary products of cyclic
//! factors. Elements are indexed `0..|G|` in a fixed mixed-radix order.

use crate::error::{Error, Result};
use crate::ffield::FrobAction;
use crate::numutil::{gcd, is_prime};
use serde::{Deserialize, Serialize};

/// Desk-scale cap on group orders for classification work.
pub const GROUP_ORDER_BOUND: u64 = 4096;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum GroupSpec {
    Cyclic { n: u64 },
    Elab { p: u64, s: u32 },
    /// Product of cyclic factors; not first-class in the classifiers but
    /// accepted by the cocycle and cohomology engines.
    Product { factors: Vec<u64> },
}

impl GroupSpec {
    pub fn cyclic(n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParams("cyclic order must be positive".into()));
        }
        Self::check_order(n)?;
        Ok(GroupSpec::Cyclic { n })
    }

    pub fn elab(p: u64, s: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if s == 0 {
            return Err(Error::InvalidParams("rank must be positive".into()));
        }
        let order = (p as u128).pow(s);
        if order > GROUP_ORDER_BOUND as u128 {
            return Err(Error::TooLarge { size: order, bound: GROUP_ORDER_BOUND as u128 });
        }
        Ok(GroupSpec::Elab { p, s })
    }

    pub fn product(factors: Vec<u64>) -> Result<Self> {
        if factors.is_empty() || factors.contains(&0) {
            return Err(Error::InvalidParams("factors must be positive".into()));
        }
        let order = factors.iter().try_fold(1u128, |acc, &f| acc.checked_mul(f as u128));
        match order {
            Some(o) if o <= GROUP_ORDER_BOUND as u128 => Ok(GroupSpec::Product { factors }),
            o => Err(Error::TooLarge {
                size: o.unwrap_or(u128::MAX),
                bound: GROUP_ORDER_BOUND as u128,
            }),
        }
    }

    pub fn factors(&self) -> Vec<u64> {
        match self {
            GroupSpec::Cyclic { n } => vec![*n],
            GroupSpec::Elab { p, s } => vec![*p; *s as usize],
            GroupSpec::Product { factors } => factors.clone(),
        }
    }

    pub fn order(&self) -> u64 {
        self.factors().iter().product()
    }

    pub fn is_cyclic(&self) -> bool {
        matches!(self, GroupSpec::Cyclic { .. })
    }

    fn check_order(order: u64) -> Result<()> {
        if order > GROUP_ORDER_BOUND {
            return Err(Error::TooLarge {
                size: order as u128,
                bound: GROUP_ORDER_BOUND as u128,
            });
        }
        Ok(())
    }
}

/// Element-indexing view of a finite abelian group given by cyclic factors.
/// Index order is lexicographic on coordinate vectors, first factor most
/// significant; the identity is index 0. For `C_n` the index of `sigma^i`
/// is `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianGroup {
    factors: Vec<u64>,
    strides: Vec<u64>,
    order: u64,
}

impl AbelianGroup {
    pub fn new(factors: Vec<u64>) -> Self {
        assert!(!factors.is_empty() && !factors.contains(&0));
        let mut strides = vec![1u64; factors.len()];
        for i in (0..factors.len().saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * factors[i + 1];
        }
        let order = factors.iter().product();
        AbelianGroup { factors, strides, order }
    }

    pub fn from_spec(spec: &GroupSpec) -> Self {
        Self::new(spec.factors())
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn factors(&self) -> &[u64] {
        &self.factors
    }

    pub fn coords(&self, idx: u64) -> Vec<u64> {
        debug_assert!(idx < self.order);
        self.factors
            .iter()
            .zip(&self.strides)
            .map(|(&f, &s)| (idx / s) % f)
            .collect()
    }

    pub fn index(&self, coords: &[u64]) -> u64 {
        debug_assert_eq!(coords.len(), self.factors.len());
        coords
            .iter()
            .zip(self.factors.iter().zip(&self.strides))
            .map(|(&c, (&f, &s))| (c % f) * s)
            .sum()
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        let mut out = 0u64;
        for (&f, &s) in self.factors.iter().zip(&self.strides) {
            let ca = (a / s) % f;
            let cb = (b / s) % f;
            out += ((ca + cb) % f) * s;
        }
        out
    }

    pub fn inv(&self, a: u64) -> u64 {
        let mut out = 0u64;
        for (&f, &s) in self.factors.iter().zip(&self.strides) {
            let c = (a / s) % f;
            out += ((f - c) % f) * s;
        }
        out
    }

    /// Indices of the standard generators, one per cyclic factor.
    pub fn generators(&self) -> Vec<u64> {
        self.strides.clone()
    }

    pub fn elements(&self) -> impl Iterator<Item = u64> {
        0..self.order
    }
}

/// An automorphism compatible with the module action: a unit `j` for `C_n`
/// (`sigma^i -> sigma^(ij)`), or an invertible matrix over `F_p` for
/// `(C_p)^s` acting on coordinate vectors.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum CompatAut {
    Cyclic { n: u64, j: u64 },
    Linear { p: u64, matrix: Vec<Vec<u64>> },
}

impl CompatAut {
    pub fn identity(spec: &GroupSpec) -> Result<Self> {
        match spec {
            GroupSpec::Cyclic { n } => Ok(CompatAut::Cyclic { n: *n, j: 1 % n }),
            GroupSpec::Elab { p, s } => {
                let mut m = vec![vec![0u64; *s as usize]; *s as usize];
                for (i, row) in m.iter_mut().enumerate() {
                    row[i] = 1;
                }
                Ok(CompatAut::Linear { p: *p, matrix: m })
            }
            GroupSpec::Product { .. } => {
                Err(Error::Unsupported("automorphisms of generic products".into()))
            }
        }
    }

    /// Applies the automorphism to an element index.
    pub fn apply(&self, group: &AbelianGroup, idx: u64) -> u64 {
        match self {
            CompatAut::Cyclic { n, j } => {
                debug_assert_eq!(group.factors(), &[*n]);
                if *n == 1 {
                    0
                } else {
                    idx * j % n
                }
            }
            CompatAut::Linear { p, matrix } => {
                let v = group.coords(idx);
                let w: Vec<u64> = matrix
                    .iter()
                    .map(|row| row.iter().zip(&v).map(|(&m, &x)| m * x).sum::<u64>() % p)
                    .collect();
                group.index(&w)
            }
        }
    }

    /// Group composition: `a.compose(b)` applies `b` first, then `a`.
    pub fn compose(&self, other: &CompatAut) -> CompatAut {
        match (self, other) {
            (CompatAut::Cyclic { n, j: j1 }, CompatAut::Cyclic { n: n2, j: j2 }) => {
                assert_eq!(n, n2);
                CompatAut::Cyclic { n: *n, j: if *n == 1 { 0 } else { j1 * j2 % n } }
            }
            (CompatAut::Linear { p, matrix: a }, CompatAut::Linear { p: p2, matrix: b }) => {
                assert_eq!(p, p2);
                let s = a.len();
                let mut out = vec![vec![0u64; s]; s];
                for (i, out_row) in out.iter_mut().enumerate() {
                    for (j, cell) in out_row.iter_mut().enumerate() {
                        *cell = (0..s).map(|k| a[i][k] * b[k][j]).sum::<u64>() % p;
                    }
                }
                CompatAut::Linear { p: *p, matrix: out }
            }
            _ => panic!("composed automorphisms of different kinds"),
        }
    }
}

/// All `eta`-compatible automorphisms of `C_n`: units `j` mod `n` with
/// `j = 1 (mod r/k)`. There are `phi(n)/phi(r/k)` of them.
pub fn aut_eta_cyclic(n: u64, action: &FrobAction) -> Result<Vec<CompatAut>> {
    if action.n != n {
        return Err(Error::InvalidAction { n, r: action.r, k: action.k });
    }
    let rk = u64::from(action.r / action.k);
    let mut out = Vec::new();
    for j in 0..n.max(1) {
        let coprime = if n == 1 { true } else { gcd(j, n) == 1 };
        if coprime && j % rk == 1 % rk {
            out.push(CompatAut::Cyclic { n, j });
        }
    }
    Ok(out)
}

/// All of `GL_s(F_p)` by brute force; `Aut((C_p)^s)` under the trivial action.
pub fn enumerate_gl(p: u64, s: u32) -> Result<Vec<CompatAut>> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let cells = s * s;
    let total = (p as u128).checked_pow(cells).filter(|&t| t <= 1 << 20).ok_or(
        Error::TooLarge { size: (p as u128).saturating_pow(cells), bound: 1 << 20 },
    )?;
    let s = s as usize;
    let mut out = Vec::new();
    for code in 0..total {
        let mut m = vec![vec![0u64; s]; s];
        let mut c = code;
        for row in m.iter_mut() {
            for cell in row.iter_mut() {
                *cell = (c % p as u128) as u64;
                c /= p as u128;
            }
        }
        if crate::linalg::rank_mod_prime(&m, p) == s {
            out.push(CompatAut::Linear { p, matrix: m });
        }
    }
    Ok(out)
}

/// The compatible automorphisms of a group under a Frobenius action. For
/// elementary abelian groups only the trivial action is in scope.
pub fn compat_auts(spec: &GroupSpec, action: &FrobAction) -> Result<Vec<CompatAut>> {
    match spec {
        GroupSpec::Cyclic { n } => aut_eta_cyclic(*n, action),
        GroupSpec::Elab { p, s } => {
            if !action.is_trivial() {
                return Err(Error::Unsupported(
                    "nontrivial actions on elementary abelian groups".into(),
                ));
            }
            enumerate_gl(*p, *s)
        }
        GroupSpec::Product { .. } => {
            Err(Error::Unsupported("automorphisms of generic products".into()))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numutil::euler_phi;

    #[test]
    fn spec_json_shapes() {
        let c = GroupSpec::cyclic(4).unwrap();
        assert_eq!(serde_json::to_string(&c).unwrap(), r#"{"kind":"cyclic","n":4}"#);
        let e = GroupSpec::elab(2, 3).unwrap();
        assert_eq!(serde_json::to_string(&e).unwrap(), r#"{"kind":"elab","p":2,"s":3}"#);
        let back: GroupSpec = serde_json::from_str(r#"{"kind":"elab","p":2,"s":3}"#).unwrap();
        assert_eq!(back, e);
        assert!(GroupSpec::elab(4, 1).is_err());
        assert!(GroupSpec::cyclic(0).is_err());
    }

    #[test]
    fn element_indexing() {
        let g = AbelianGroup::new(vec![2, 3]);
        assert_eq!(g.order(), 6);
        assert_eq!(g.coords(5), vec![1, 2]);
        assert_eq!(g.index(&[1, 2]), 5);
        assert_eq!(g.mul(4, 5), 0); // (1,1) + (1,2) = (0,0)
        assert_eq!(g.mul(4, 1), 5); // (1,1) + (0,1) = (1,2)
        assert_eq!(g.mul(g.inv(5), 5), 0);
        assert_eq!(g.generators(), vec![3, 1]);
        // Elab indexing is lexicographic on vectors.
        let e = AbelianGroup::from_spec(&GroupSpec::elab(2, 2).unwrap());
        assert_eq!(e.coords(2), vec![1, 0]);
    }

    #[test]
    fn aut_eta_cyclic_examples() {
        // Trivial action: all of U_n.
        for n in 1..=12u64 {
            let act = FrobAction::trivial(n, 1);
            let auts = aut_eta_cyclic(n, &act).unwrap();
            assert_eq!(auts.len() as u64, euler_phi(n));
        }
        // n = 4, r/k = 2: {1, 3}.
        let act = FrobAction::new(4, 2, 1).unwrap();
        let js: Vec<u64> = aut_eta_cyclic(4, &act)
            .unwrap()
            .iter()
            .map(|a| match a {
                CompatAut::Cyclic { j, .. } => *j,
                _ => unreachable!(),
            })
            .collect();
        assert_eq!(js, vec![1, 3]);
        // n = 6, r/k = 3: only j = 1.
        let act = FrobAction::new(6, 3, 1).unwrap();
        let auts = aut_eta_cyclic(6, &act).unwrap();
        assert_eq!(auts.len(), 1);
        assert_eq!(auts[0], CompatAut::Cyclic { n: 6, j: 1 });
    }

    #[test]
    fn aut_eta_size_formula_and_closure() {
        for n in 1..=10u64 {
            for r in 1..=4u32 {
                for k in (1..=r).filter(|k| r % k == 0) {
                    if n % u64::from(r / k) != 0 {
                        continue;
                    }
                    let act = FrobAction::new(n, r, k).unwrap();
                    let auts = aut_eta_cyclic(n, &act).unwrap();
                    assert_eq!(
                        auts.len() as u64,
                        euler_phi(n) / euler_phi(u64::from(r / k)),
                        "n={n} r={r} k={k}"
                    );
                    // closed under composition
                    for a in &auts {
                        for b in &auts {
                            assert!(auts.contains(&a.compose(b)));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn apply_examples() {
        let g = AbelianGroup::new(vec![5]);
        let id = CompatAut::Cyclic { n: 5, j: 1 };
        let psi = CompatAut::Cyclic { n: 5, j: 2 };
        assert_eq!(id.apply(&g, 3), 3);
        assert_eq!(psi.apply(&g, 3), 1); // 3*2 mod 5

        let e = AbelianGroup::new(vec![2, 2]);
        let swap = CompatAut::Linear { p: 2, matrix: vec![vec![0, 1], vec![1, 0]] };
        assert_eq!(swap.apply(&e, e.index(&[1, 0])), e.index(&[0, 1]));
    }

    #[test]
    fn automorphisms_are_bijective_homomorphisms() {
        let specs = [
            GroupSpec::cyclic(8).unwrap(),
            GroupSpec::elab(2, 2).unwrap(),
            GroupSpec::elab(3, 2).unwrap(),
        ];
        for spec in &specs {
            let g = AbelianGroup::from_spec(spec);
            let act = FrobAction::trivial(g.order(), 1);
            for aut in compat_auts(spec, &act).unwrap() {
                let mut seen = vec![false; g.order() as usize];
                for x in g.elements() {
                    seen[aut.apply(&g, x) as usize] = true;
                }
                assert!(seen.iter().all(|&s| s));
                for x in g.elements() {
                    for y in g.elements() {
                        assert_eq!(
                            aut.apply(&g, g.mul(x, y)),
                            g.mul(aut.apply(&g, x), aut.apply(&g, y))
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn eta_compatibility_on_the_tower() {
        // For each j in Aut_eta, sigma^i and sigma^(ij) act the same on x0.
        let t = crate::ffield::FieldTower::new(2, 4).unwrap();
        let act = FrobAction::new(8, 4, 2).unwrap(); // r/k = 2 divides 8
        for aut in aut_eta_cyclic(8, &act).unwrap() {
            let CompatAut::Cyclic { j, .. } = aut else { unreachable!() };
            for i in 0..8u64 {
                assert_eq!(
                    t.act(&act, i * j % 8, t.generator()),
                    t.act(&act, i, t.generator()),
                    "j={j} i={i}"
                );
            }
        }
    }

    #[test]
    fn gl_sizes() {
        assert_eq!(enumerate_gl(2, 1).unwrap().len(), 1);
        assert_eq!(enumerate_gl(2, 2).unwrap().len(), 6);
        assert_eq!(enumerate_gl(3, 2).unwrap().len(), 48);
        assert_eq!(enumerate_gl(2, 3).unwrap().len(), 168);
    }

    #[test]
    fn elab_nontrivial_action_unsupported() {
        let spec = GroupSpec::elab(2, 2).unwrap();
        let act = FrobAction::new(4, 2, 1).unwrap();
        assert!(matches!(compat_auts(&spec, &act).unwrap_err(), Error::Unsupported(_)));
    }
}
