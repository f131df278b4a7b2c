//! Prime fields F_p and extension fields F_{p^k} = F_p[x]/(f).
//!
//! Orders are capped at 2^16, so residues fit in `u16` and every product
//! fits in `u32`. Extension elements are stored as fixed-width coefficient
//! arrays `[c0, c1, ..., c_{k-1}]` (low degree first), unused slots zero.

use crate::error::{Error, Result};

/// Largest supported field order.
pub const MAX_ORDER: u64 = 1 << 16;

/// Largest supported extension degree (2^16 = 2^16).
pub const MAX_DEGREE: usize = 16;

pub(crate) type Coeffs = [u16; MAX_DEGREE];

/// Fixed irreducible moduli for the small extension fields, as
/// `(p, k, [c0, ..., c_{k-1}])` for the monic `x^k + c_{k-1} x^{k-1} + ... + c0`.
const MODULUS_TABLE: &[(u16, u8, &[u16])] = &[
    // F_4: x^2 + x + 1
    (2, 2, &[1, 1]),
    // F_8: x^3 + x + 1
    (2, 3, &[1, 1, 0]),
    // F_9: x^2 + 1
    (3, 2, &[1, 0]),
];

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u16,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidFieldSpec {
                spec: format!("F:{p}"),
                reason: format!("{p} is not prime"),
            });
        }
        if p >= MAX_ORDER {
            return Err(Error::InvalidFieldSpec {
                spec: format!("F:{p}"),
                reason: "field order exceeds 2^16".into(),
            });
        }
        Ok(Self { p: p as u16 })
    }

    pub fn modulus(&self) -> u16 {
        self.p
    }

    pub fn reduce(&self, v: i64) -> u16 {
        v.rem_euclid(self.p as i64) as u16
    }

    pub fn add(&self, a: u16, b: u16) -> u16 {
        ((a as u32 + b as u32) % self.p as u32) as u16
    }

    pub fn neg(&self, a: u16) -> u16 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    pub fn mul(&self, a: u16, b: u16) -> u16 {
        ((a as u32 * b as u32) % self.p as u32) as u16
    }

    pub fn pow(&self, a: u16, mut e: u64) -> u16 {
        let mut base = a;
        let mut acc = 1 % self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: u16) -> Result<u16> {
        if a == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow(a, self.p as u64 - 2))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ExtensionField {
    base: PrimeField,
    degree: u8,
    /// Low coefficients of the monic modulus; the leading 1 is implicit.
    modulus: Coeffs,
}

impl ExtensionField {
    /// F_{p^k} with the tabulated modulus when one exists, otherwise the
    /// lexicographically smallest monic irreducible of degree `k`.
    pub fn new(p: u64, k: u32) -> Result<Self> {
        let spec = format!("F:{p}^{k}");
        let base = PrimeField::new(p).map_err(|_| Error::InvalidFieldSpec {
            spec: spec.clone(),
            reason: format!("{p} is not a prime below 2^16"),
        })?;
        if k < 2 {
            return Err(Error::InvalidFieldSpec {
                spec,
                reason: "extension degree must be at least 2".into(),
            });
        }
        let order = (p as u128).checked_pow(k).unwrap_or(u128::MAX);
        if order > MAX_ORDER as u128 {
            return Err(Error::InvalidFieldSpec {
                spec,
                reason: "field order exceeds 2^16".into(),
            });
        }
        let modulus = MODULUS_TABLE
            .iter()
            .find(|(tp, tk, _)| *tp as u64 == p && *tk as u32 == k)
            .map(|(_, _, c)| {
                let mut m = [0u16; MAX_DEGREE];
                m[..c.len()].copy_from_slice(c);
                m
            })
            .unwrap_or_else(|| smallest_irreducible(base, k as usize));
        Ok(Self {
            base,
            degree: k as u8,
            modulus,
        })
    }

    pub fn with_modulus(p: u64, low_coeffs: &[u16]) -> Result<Self> {
        let base = PrimeField::new(p)?;
        let k = low_coeffs.len();
        if !(2..=MAX_DEGREE).contains(&k) {
            return Err(Error::InvalidFieldSpec {
                spec: format!("F:{p}^{k}"),
                reason: "unsupported extension degree".into(),
            });
        }
        let mut modulus = [0u16; MAX_DEGREE];
        for (slot, &c) in modulus.iter_mut().zip(low_coeffs) {
            *slot = c % base.p;
        }
        let mut full = modulus[..k].to_vec();
        full.push(1);
        if !is_irreducible(base, &full) {
            return Err(Error::InvalidFieldSpec {
                spec: format!("F:{p}^{k}"),
                reason: "modulus is reducible".into(),
            });
        }
        Ok(Self {
            base,
            degree: k as u8,
            modulus,
        })
    }

    pub fn base(&self) -> PrimeField {
        self.base
    }

    pub fn characteristic(&self) -> u16 {
        self.base.p
    }

    pub fn degree(&self) -> usize {
        self.degree as usize
    }

    pub fn order(&self) -> u64 {
        (self.base.p as u64).pow(self.degree as u32)
    }

    /// Full modulus coefficients, low degree first, including the leading 1.
    pub fn modulus(&self) -> Vec<u16> {
        let mut m = self.modulus[..self.degree()].to_vec();
        m.push(1);
        m
    }

    pub(crate) fn constant(&self, c: u16) -> Coeffs {
        let mut v = [0u16; MAX_DEGREE];
        v[0] = c % self.base.p;
        v
    }

    pub(crate) fn add(&self, a: &Coeffs, b: &Coeffs) -> Coeffs {
        let mut out = [0u16; MAX_DEGREE];
        for i in 0..self.degree() {
            out[i] = self.base.add(a[i], b[i]);
        }
        out
    }

    pub(crate) fn neg(&self, a: &Coeffs) -> Coeffs {
        let mut out = [0u16; MAX_DEGREE];
        for i in 0..self.degree() {
            out[i] = self.base.neg(a[i]);
        }
        out
    }

    pub(crate) fn mul(&self, a: &Coeffs, b: &Coeffs) -> Coeffs {
        let k = self.degree();
        let p = self.base.p as u64;
        let mut prod = [0u64; 2 * MAX_DEGREE];
        for i in 0..k {
            if a[i] == 0 {
                continue;
            }
            for j in 0..k {
                prod[i + j] += a[i] as u64 * b[j] as u64;
            }
        }
        for c in prod.iter_mut() {
            *c %= p;
        }
        // x^k = -(c0 + c1 x + ... + c_{k-1} x^{k-1})
        for d in (k..2 * k - 1).rev() {
            let lead = prod[d];
            if lead == 0 {
                continue;
            }
            prod[d] = 0;
            for i in 0..k {
                let sub = lead * self.modulus[i] as u64 % p;
                prod[d - k + i] = (prod[d - k + i] + p - sub) % p;
            }
        }
        let mut out = [0u16; MAX_DEGREE];
        for i in 0..k {
            out[i] = prod[i] as u16;
        }
        out
    }

    pub(crate) fn is_zero(a: &Coeffs) -> bool {
        a.iter().all(|&c| c == 0)
    }

    pub(crate) fn inv(&self, a: &Coeffs) -> Result<Coeffs> {
        if Self::is_zero(a) {
            return Err(Error::DivisionByZero);
        }
        // a^(q-2) in the multiplicative group of order q-1
        let mut e = self.order() - 2;
        let mut base = *a;
        let mut acc = self.constant(1);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        Ok(acc)
    }

    /// The element whose base-p digits are `index`.
    pub(crate) fn element_at(&self, mut index: u64) -> Coeffs {
        let mut out = [0u16; MAX_DEGREE];
        for slot in out.iter_mut().take(self.degree()) {
            *slot = (index % self.base.p as u64) as u16;
            index /= self.base.p as u64;
        }
        out
    }
}

/// Remainder of `num` modulo `den` over F_p; both low-degree-first, `den`
/// with nonzero leading coefficient.
fn poly_rem(f: PrimeField, num: &[u16], den: &[u16]) -> Vec<u16> {
    let mut r = num.to_vec();
    let dd = den.len() - 1;
    let lead_inv = f.inv(den[dd]).expect("nonzero leading coefficient");
    while r.len() > dd {
        let top = *r.last().unwrap();
        if top != 0 {
            let q = f.mul(top, lead_inv);
            let shift = r.len() - 1 - dd;
            for (i, &c) in den.iter().enumerate() {
                r[shift + i] = f.add(r[shift + i], f.neg(f.mul(q, c)));
            }
        }
        r.pop();
    }
    r
}

/// Trial division by every monic polynomial of degree 1..=deg/2.
pub(crate) fn is_irreducible(f: PrimeField, poly: &[u16]) -> bool {
    let deg = poly.len() - 1;
    let p = f.p as u64;
    for d in 1..=deg / 2 {
        for idx in 0..p.pow(d as u32) {
            let mut g = Vec::with_capacity(d + 1);
            let mut i = idx;
            for _ in 0..d {
                g.push((i % p) as u16);
                i /= p;
            }
            g.push(1);
            if poly_rem(f, poly, &g).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

fn smallest_irreducible(f: PrimeField, k: usize) -> Coeffs {
    let p = f.p as u64;
    for idx in 0..p.pow(k as u32) {
        let mut low = [0u16; MAX_DEGREE];
        let mut i = idx;
        for slot in low.iter_mut().take(k) {
            *slot = (i % p) as u16;
            i /= p;
        }
        let mut full = low[..k].to_vec();
        full.push(1);
        if is_irreducible(f, &full) {
            return low;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}
