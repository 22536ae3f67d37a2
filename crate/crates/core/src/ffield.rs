//! Exact arithmetic in the tower `F_q ⊂ F_{q^k} ⊂ F_{q^r}`.
//!
//! Nonzero elements are stored as discrete logarithms with respect to a fixed
//! generator `x0` of the unit group, so multiplication is exponent addition
//! mod `N = q^r - 1` and the Frobenius `x -> x^q` acts as `e -> q*e`. Addition
//! goes through lookup tables built once per tower (a Zech-logarithm scheme).

use crate::error::{Error, Result};
use crate::numutil::{is_prime, mulmod, powmod, prime_factors};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Default cap on the field order `q^r`.
pub const DEFAULT_FIELD_BOUND: u64 = 1 << 20;

/// An element of `F_{q^r}`: zero, or the exponent `e` meaning `x0^e`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldElem {
    Zero,
    Pow(u64),
}

impl FieldElem {
    pub fn is_zero(&self) -> bool {
        matches!(self, FieldElem::Zero)
    }

    pub fn one() -> Self {
        FieldElem::Pow(0)
    }

    pub fn exponent(&self) -> Option<u64> {
        match self {
            FieldElem::Zero => None,
            FieldElem::Pow(e) => Some(*e),
        }
    }
}

impl Serialize for FieldElem {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            FieldElem::Zero => s.serialize_none(),
            FieldElem::Pow(e) => s.serialize_u64(*e),
        }
    }
}

/// The action of a cyclic group `C_n` on `F_{q^r}` sending the chosen
/// generator to the `k`-th Frobenius power. Valid actions have `k | r` and
/// `(r/k) | n`; `k = r` is the trivial action.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FrobAction {
    pub n: u64,
    pub r: u32,
    pub k: u32,
}

impl FrobAction {
    pub fn new(n: u64, r: u32, k: u32) -> Result<Self> {
        if n == 0 || r == 0 || k == 0 || r % k != 0 || n % u64::from(r / k) != 0 {
            return Err(Error::InvalidAction { n, r, k });
        }
        Ok(FrobAction { n, r, k })
    }

    pub fn trivial(n: u64, r: u32) -> Self {
        FrobAction { n, r, k: r }
    }

    pub fn is_trivial(&self) -> bool {
        self.k == self.r
    }

    /// Order of the kernel of the action, `nk/r`.
    pub fn kernel_order(&self) -> u64 {
        self.n * u64::from(self.k) / u64::from(self.r)
    }
}

/// `F_q ⊂ F_{q^r}` with discrete-log tables over a fixed generator.
#[derive(Debug, Clone)]
pub struct FieldTower {
    q: u64,
    r: u32,
    order: u64,
    units: u64,
    modulus: Vec<u64>,
    generator_enc: u64,
    // dlog[enc] = exponent of the element with that polynomial encoding
    // (dlog[0] is a sentinel); powers[e] = encoding of x0^e.
    dlog: Vec<u64>,
    powers: Vec<u64>,
}

impl PartialEq for FieldTower {
    fn eq(&self, other: &Self) -> bool {
        self.q == other.q
            && self.r == other.r
            && self.modulus == other.modulus
            && self.generator_enc == other.generator_enc
    }
}
impl Eq for FieldTower {}

impl FieldTower {
    pub fn new(q: u64, r: u32) -> Result<Self> {
        Self::with_bound(q, r, DEFAULT_FIELD_BOUND)
    }

    pub fn with_bound(q: u64, r: u32, bound: u64) -> Result<Self> {
        if !is_prime(q) {
            return Err(Error::NotPrime(q));
        }
        if r == 0 {
            return Err(Error::InvalidParams("extension degree must be positive".into()));
        }
        let order = (q as u128)
            .checked_pow(r)
            .filter(|&o| o <= bound as u128)
            .ok_or(Error::TooLarge {
                size: (q as u128).checked_pow(r).unwrap_or(u128::MAX),
                bound: bound as u128,
            })? as u64;
        let modulus = smallest_irreducible(q, r);
        Self::from_parts_inner(q, r, order, modulus, None)
    }

    /// Rebuilds a tower from serialized parts, validating the modulus and the
    /// generator rather than trusting them.
    pub fn from_parts(q: u64, r: u32, modulus: Vec<u64>, generator: Vec<u64>) -> Result<Self> {
        if !is_prime(q) {
            return Err(Error::NotPrime(q));
        }
        if r == 0 || modulus.len() != r as usize + 1 || modulus[r as usize] != 1 {
            return Err(Error::Invalid("modulus must be monic of degree r".into()));
        }
        if modulus.iter().any(|&c| c >= q) || generator.iter().any(|&c| c >= q) {
            return Err(Error::Invalid("coefficients must be reduced mod q".into()));
        }
        let order = (q as u128).pow(r);
        if order > DEFAULT_FIELD_BOUND as u128 {
            return Err(Error::TooLarge { size: order, bound: DEFAULT_FIELD_BOUND as u128 });
        }
        if !is_irreducible(&modulus, q) {
            return Err(Error::Invalid("modulus is not irreducible".into()));
        }
        if generator.len() > r as usize {
            return Err(Error::Invalid("generator degree exceeds r - 1".into()));
        }
        let gen_enc = poly_to_enc(&generator, q);
        Self::from_parts_inner(q, r, order as u64, modulus, Some(gen_enc))
    }

    fn from_parts_inner(
        q: u64,
        r: u32,
        order: u64,
        modulus: Vec<u64>,
        generator: Option<u64>,
    ) -> Result<Self> {
        let units = order - 1;
        let gen_enc = match generator {
            Some(g) => {
                if g == 0 || element_order(g, q, r, &modulus, units) != units.max(1) {
                    return Err(Error::Invalid("generator does not generate the units".into()));
                }
                g
            }
            None => find_generator(q, r, &modulus, units),
        };
        let mut dlog = vec![u64::MAX; order as usize];
        let mut powers = vec![0u64; units.max(1) as usize];
        let mut acc = 1u64;
        for e in 0..units.max(1) {
            powers[e as usize] = acc;
            dlog[acc as usize] = e;
            acc = poly_mulmod_enc(acc, gen_enc, q, r, &modulus);
        }
        Ok(FieldTower { q, r, order, units, modulus, generator_enc: gen_enc, dlog, powers })
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    /// Field order `q^r`.
    pub fn order(&self) -> u64 {
        self.order
    }

    /// `N = q^r - 1`, the order of the unit group.
    pub fn units(&self) -> u64 {
        self.units
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    /// The fixed generator `x0` as a field element (exponent 1).
    pub fn generator(&self) -> FieldElem {
        FieldElem::Pow(if self.units <= 1 { 0 } else { 1 })
    }

    pub fn generator_coeffs(&self) -> Vec<u64> {
        enc_to_poly(self.generator_enc, self.q, self.r)
    }

    fn reduce_exp(&self, e: u64) -> u64 {
        if self.units <= 1 {
            0
        } else {
            e % self.units
        }
    }

    /// `x0^e` with the exponent reduced mod `N`.
    pub fn elem(&self, e: u64) -> FieldElem {
        FieldElem::Pow(self.reduce_exp(e))
    }

    /// All field elements: zero first, then `x0^0, x0^1, ...`.
    pub fn elements(&self) -> impl Iterator<Item = FieldElem> + '_ {
        std::iter::once(FieldElem::Zero).chain(self.units_iter())
    }

    pub fn units_iter(&self) -> impl Iterator<Item = FieldElem> + '_ {
        (0..self.units.max(1)).map(FieldElem::Pow)
    }

    pub fn mul(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        match (a, b) {
            (FieldElem::Zero, _) | (_, FieldElem::Zero) => FieldElem::Zero,
            (FieldElem::Pow(x), FieldElem::Pow(y)) => {
                FieldElem::Pow(if self.units <= 1 { 0 } else { (x + y) % self.units })
            }
        }
    }

    pub fn inv(&self, a: FieldElem) -> Result<FieldElem> {
        match a {
            FieldElem::Zero => Err(Error::ZeroInput),
            FieldElem::Pow(e) => Ok(FieldElem::Pow(if self.units <= 1 {
                0
            } else {
                (self.units - e % self.units) % self.units
            })),
        }
    }

    pub fn add(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        match (a, b) {
            (FieldElem::Zero, x) | (x, FieldElem::Zero) => x,
            (FieldElem::Pow(x), FieldElem::Pow(y)) => {
                let ea = self.powers[self.reduce_exp(x) as usize];
                let eb = self.powers[self.reduce_exp(y) as usize];
                let sum = self.enc_add(ea, eb);
                if sum == 0 {
                    FieldElem::Zero
                } else {
                    FieldElem::Pow(self.dlog[sum as usize])
                }
            }
        }
    }

    pub fn neg(&self, a: FieldElem) -> FieldElem {
        if self.q == 2 {
            return a;
        }
        // -1 = x0^(N/2) in odd characteristic.
        self.mul(a, FieldElem::Pow(self.units / 2))
    }

    pub fn sub(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        self.add(a, self.neg(b))
    }

    pub fn pow(&self, a: FieldElem, e: u64) -> FieldElem {
        match a {
            FieldElem::Zero => {
                if e == 0 {
                    FieldElem::one()
                } else {
                    FieldElem::Zero
                }
            }
            FieldElem::Pow(x) => {
                if self.units <= 1 {
                    FieldElem::Pow(0)
                } else {
                    FieldElem::Pow(mulmod(x % self.units, e % self.units, self.units))
                }
            }
        }
    }

    fn enc_add(&self, mut a: u64, mut b: u64) -> u64 {
        let mut out = 0u64;
        let mut base = 1u64;
        for _ in 0..self.r {
            let d = (a % self.q + b % self.q) % self.q;
            out += d * base;
            base *= self.q;
            a /= self.q;
            b /= self.q;
        }
        out
    }

    /// `a^(q^k)`; fixes exactly the subfield `F_{q^gcd(k,r)}`.
    pub fn frobenius(&self, a: FieldElem, k: u32) -> FieldElem {
        match a {
            FieldElem::Zero => FieldElem::Zero,
            FieldElem::Pow(e) => {
                if self.units <= 1 {
                    return FieldElem::Pow(0);
                }
                let mult = powmod(self.q, u64::from(k % self.r), self.units);
                FieldElem::Pow(mulmod(mult, e % self.units, self.units))
            }
        }
    }

    /// Applies `sigma^i` where the action sends `sigma` to `phi^k`.
    pub fn act(&self, action: &FrobAction, i: u64, a: FieldElem) -> FieldElem {
        let steps = ((i % u64::from(self.r)) * u64::from(action.k)) % u64::from(self.r);
        self.frobenius(a, steps as u32)
    }

    /// `(q^r - 1)/(q^k - 1)`: the exponent of the generator of the subgroup
    /// fixed by the action.
    pub fn fixed_generator_exponent(&self, action: &FrobAction) -> u64 {
        let qk = self.q.pow(action.k);
        if self.units == 0 {
            0
        } else {
            (self.order - 1) / (qk - 1)
        }
    }

    /// Generator exponent and order of the subgroup of units fixed by the
    /// action: `< x0^((q^r-1)/(q^k-1)) >` of order `q^k - 1`.
    pub fn fixed_subgroup(&self, action: &FrobAction) -> Result<(u64, u64)> {
        if action.r != self.r {
            return Err(Error::ActionMismatch);
        }
        if self.units == 0 {
            return Ok((0, 1));
        }
        let qk = self.q.pow(action.k);
        Ok((self.fixed_generator_exponent(action), qk - 1))
    }

    /// The norm `a -> prod_{i<n} sigma^i(a)`. On exponents this is
    /// multiplication by `(nk/r) * (q^r-1)/(q^k-1)`, and the image lands in
    /// the fixed subgroup.
    pub fn norm(&self, action: &FrobAction, a: FieldElem) -> Result<FieldElem> {
        if action.r != self.r {
            return Err(Error::ActionMismatch);
        }
        match a {
            FieldElem::Zero => Err(Error::ZeroInput),
            FieldElem::Pow(e) => {
                if self.units <= 1 {
                    return Ok(FieldElem::Pow(0));
                }
                let factor = mulmod(
                    action.kernel_order() % self.units,
                    self.fixed_generator_exponent(action) % self.units,
                    self.units,
                );
                Ok(FieldElem::Pow(mulmod(e % self.units, factor, self.units)))
            }
        }
    }

    /// The norm computed as the literal `n`-fold product, for cross-checks.
    pub fn norm_by_product(&self, action: &FrobAction, a: FieldElem) -> Result<FieldElem> {
        if a.is_zero() {
            return Err(Error::ZeroInput);
        }
        let mut acc = FieldElem::one();
        for i in 0..action.n {
            acc = self.mul(acc, self.act(action, i, a));
        }
        Ok(acc)
    }

    /// Polynomial coefficients (low to high) of an element.
    pub fn coeffs(&self, a: FieldElem) -> Vec<u64> {
        match a {
            FieldElem::Zero => vec![0; self.r as usize],
            FieldElem::Pow(e) => {
                enc_to_poly(self.powers[self.reduce_exp(e) as usize], self.q, self.r)
            }
        }
    }

    /// Element with the given polynomial coefficients (low to high).
    pub fn from_coeffs(&self, coeffs: &[u64]) -> Result<FieldElem> {
        if coeffs.len() > self.r as usize {
            return Err(Error::Invalid("too many coefficients".into()));
        }
        if coeffs.iter().any(|&c| c >= self.q) {
            return Err(Error::Invalid("coefficients not reduced mod q".into()));
        }
        let enc = poly_to_enc(coeffs, self.q);
        if enc == 0 {
            return Ok(FieldElem::Zero);
        }
        Ok(FieldElem::Pow(self.dlog[enc as usize]))
    }
}

impl Serialize for FieldTower {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            q: u64,
            r: u32,
            modulus: &'a [u64],
            generator: Vec<u64>,
        }
        Repr { q: self.q, r: self.r, modulus: &self.modulus, generator: self.generator_coeffs() }
            .serialize(s)
    }
}

impl<'de> Deserialize<'de> for FieldTower {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            q: u64,
            r: u32,
            modulus: Vec<u64>,
            generator: Vec<u64>,
        }
        let repr = Repr::deserialize(d)?;
        FieldTower::from_parts(repr.q, repr.r, repr.modulus, repr.generator)
            .map_err(D::Error::custom)
    }
}

fn enc_to_poly(mut enc: u64, q: u64, r: u32) -> Vec<u64> {
    let mut out = vec![0u64; r as usize];
    for c in out.iter_mut() {
        *c = enc % q;
        enc /= q;
    }
    out
}

fn poly_to_enc(coeffs: &[u64], q: u64) -> u64 {
    coeffs.iter().rev().fold(0, |acc, &c| acc * q + c)
}

/// Product of two elements given by encodings, reduced by the monic modulus.
fn poly_mulmod_enc(a: u64, b: u64, q: u64, r: u32, modulus: &[u64]) -> u64 {
    let pa = enc_to_poly(a, q, r);
    let pb = enc_to_poly(b, q, r);
    let mut prod = vec![0u64; 2 * r as usize];
    for (i, &ca) in pa.iter().enumerate() {
        if ca == 0 {
            continue;
        }
        for (j, &cb) in pb.iter().enumerate() {
            prod[i + j] = (prod[i + j] + ca * cb) % q;
        }
    }
    // x^r = -(low part of the modulus).
    for d in (r as usize..prod.len()).rev() {
        let c = prod[d];
        if c == 0 {
            continue;
        }
        prod[d] = 0;
        for (j, &mc) in modulus.iter().enumerate().take(r as usize) {
            let idx = d - r as usize + j;
            prod[idx] = (prod[idx] + c * ((q - mc) % q)) % q;
        }
    }
    poly_to_enc(&prod[..r as usize], q)
}

fn poly_degree(p: &[u64]) -> Option<usize> {
    p.iter().rposition(|&c| c != 0)
}

/// Remainder of `a mod b` over `F_q`, both low-to-high coefficient vectors.
fn poly_rem(a: &[u64], b: &[u64], q: u64) -> Vec<u64> {
    let mut rem = a.to_vec();
    let db = poly_degree(b).expect("nonzero divisor");
    let lead_inv = crate::numutil::invmod(b[db], q).expect("q prime, leading coeff nonzero");
    while let Some(da) = poly_degree(&rem) {
        if da < db {
            break;
        }
        let f = mulmod(rem[da], lead_inv, q);
        for (j, &bc) in b.iter().enumerate().take(db + 1) {
            let idx = da - db + j;
            rem[idx] = (rem[idx] + q - mulmod(f, bc, q)) % q;
        }
    }
    rem
}

/// Irreducibility by trial division over all monic divisors of degree at most
/// `deg/2`. Fine at desk scale.
fn is_irreducible(modulus: &[u64], q: u64) -> bool {
    let deg = match poly_degree(modulus) {
        Some(d) if d >= 1 => d,
        _ => return false,
    };
    if deg == 1 {
        return true;
    }
    for d in 1..=deg / 2 {
        for enc in 0..q.pow(d as u32) {
            let mut div = enc_to_poly(enc, q, d as u32);
            div.push(1);
            let rem = poly_rem(modulus, &div, q);
            if poly_degree(&rem).is_none() {
                return false;
            }
        }
    }
    true
}

/// Smallest monic irreducible of degree `r`, comparing coefficients from the
/// leading term down (equivalently, by base-`q` integer encoding).
fn smallest_irreducible(q: u64, r: u32) -> Vec<u64> {
    for enc in 0..q.pow(r) {
        let mut p = enc_to_poly(enc, q, r);
        p.push(1);
        if is_irreducible(&p, q) {
            return p;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

fn element_order(enc: u64, q: u64, r: u32, modulus: &[u64], units: u64) -> u64 {
    if units <= 1 {
        return 1;
    }
    let mut ord = units;
    for (p, _) in prime_factors(units) {
        while ord % p == 0 && poly_powmod_enc(enc, ord / p, q, r, modulus) == 1 {
            ord /= p;
        }
    }
    ord
}

fn poly_powmod_enc(mut base: u64, mut e: u64, q: u64, r: u32, modulus: &[u64]) -> u64 {
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = poly_mulmod_enc(acc, base, q, r, modulus);
        }
        base = poly_mulmod_enc(base, base, q, r, modulus);
        e >>= 1;
    }
    acc
}

/// Smallest element (in encoding order) of multiplicative order `q^r - 1`.
fn find_generator(q: u64, r: u32, modulus: &[u64], units: u64) -> u64 {
    if units <= 1 {
        return 1;
    }
    for enc in 1..=units {
        if element_order(enc, q, r, modulus, units) == units {
            return enc;
        }
    }
    unreachable!("unit groups of finite fields are cyclic")
}
