//! Text forms of field specs and scalars.
//!
//! Field specs: `Q`, `F:<p>`, `F:<p>^<k>`, `HQ`.
//!
//! Scalars:
//! * rationals: `n` or `n/d`
//! * prime fields: a residue `m` (any integer, reduced mod p)
//! * extension fields: `[c0,c1,...]` (low degree first) or an integer `m`
//!   for the prime subfield
//! * quaternions: `a+bi+cj+dk` with rational coefficients; zero terms and
//!   unit coefficients may be omitted (`-k`, `3+2i`, `1/2j`)
//!
//! `Display` always emits the canonical form, and parsing it back yields
//! the same value.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{FieldSpec, Quaternion, Scalar};
use crate::error::{Error, Result};

impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |reason: &str| Error::InvalidFieldSpec {
            spec: s.to_string(),
            reason: reason.to_string(),
        };
        match s.trim() {
            "Q" => Ok(FieldSpec::Rationals),
            "HQ" => Ok(FieldSpec::Quaternions),
            t => {
                let rest = t
                    .strip_prefix("F:")
                    .ok_or_else(|| bad("expected Q, HQ, F:<p> or F:<p>^<k>"))?;
                let (p, k) = match rest.split_once('^') {
                    Some((p, k)) => (p, Some(k)),
                    None => (rest, None),
                };
                let p: u64 = p.parse().map_err(|_| bad("characteristic is not an integer"))?;
                match k {
                    None => FieldSpec::prime(p),
                    Some(k) => {
                        let k: u32 = k.parse().map_err(|_| bad("degree is not an integer"))?;
                        if k == 0 {
                            return Err(bad("degree must be positive"));
                        }
                        FieldSpec::extension(p, k)
                    }
                }
            }
        }
    }
}

fn parse_int(s: &str) -> Option<BigInt> {
    let digits = s.strip_prefix(['+', '-']).unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

fn parse_rational(s: &str) -> Option<BigRational> {
    match s.split_once('/') {
        None => parse_int(s).map(BigRational::from_integer),
        Some((n, d)) => {
            let n = parse_int(n)?;
            // sign lives on the numerator only
            if d.starts_with(['+', '-']) {
                return None;
            }
            let d = parse_int(d)?;
            if d.is_zero() {
                return None;
            }
            Some(BigRational::new(n, d))
        }
    }
}

fn parse_quaternion(s: &str) -> Option<Quaternion> {
    let mut comps: [Option<BigRational>; 4] = Default::default();
    let bytes = s.as_bytes();
    let mut start = 0;
    let mut terms = Vec::new();
    for i in 1..=bytes.len() {
        if i == bytes.len() || ((bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'/') {
            terms.push(&s[start..i]);
            start = i;
        }
    }
    for term in terms {
        let (slot, coeff) = match term.as_bytes().last()? {
            b'i' => (1, &term[..term.len() - 1]),
            b'j' => (2, &term[..term.len() - 1]),
            b'k' => (3, &term[..term.len() - 1]),
            _ => (0, term),
        };
        let value = match (slot, coeff) {
            (1..=3, "" | "+") => BigRational::one(),
            (1..=3, "-") => -BigRational::one(),
            _ => parse_rational(coeff)?,
        };
        if comps[slot].replace(value).is_some() {
            return None;
        }
    }
    let [a, b, c, d] = comps.map(|c| c.unwrap_or_else(BigRational::zero));
    Some(Quaternion::new(a, b, c, d))
}

impl FieldSpec {
    pub fn parse_scalar(&self, s: &str) -> Result<Scalar> {
        let bad = || Error::InvalidLiteral {
            literal: s.to_string(),
            field: self.to_string(),
        };
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() {
            return Err(bad());
        }
        match self {
            FieldSpec::Rationals => parse_rational(&t).map(Scalar::Rational).ok_or_else(bad),
            FieldSpec::Prime(f) => {
                let n = parse_int(&t).ok_or_else(bad)?;
                let r = n.mod_floor_u16(f.modulus());
                Ok(Scalar::Residue(*f, r))
            }
            FieldSpec::Extension(f) => {
                let p = f.characteristic();
                if let Some(inner) = t.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
                    let parts: Vec<&str> = if inner.is_empty() { vec![] } else { inner.split(',').collect() };
                    if parts.len() > f.degree() {
                        return Err(bad());
                    }
                    let mut coeffs = f.constant(0);
                    for (slot, part) in coeffs.iter_mut().zip(parts) {
                        *slot = parse_int(part).ok_or_else(bad)?.mod_floor_u16(p);
                    }
                    Ok(Scalar::Poly(*f, coeffs))
                } else {
                    let n = parse_int(&t).ok_or_else(bad)?;
                    Ok(Scalar::Poly(*f, f.constant(n.mod_floor_u16(p))))
                }
            }
            FieldSpec::Quaternions => parse_quaternion(&t).map(|q| Scalar::Quaternion(Box::new(q))).ok_or_else(bad),
        }
    }
}

trait ModFloorU16 {
    fn mod_floor_u16(&self, m: u16) -> u16;
}

impl ModFloorU16 for BigInt {
    fn mod_floor_u16(&self, m: u16) -> u16 {
        use num_integer::Integer;
        let r = self.mod_floor(&BigInt::from(m));
        u16::try_from(&r).expect("residue below modulus")
    }
}

fn write_quaternion(q: &Quaternion, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let mut wrote = false;
    for (c, unit) in q.components().into_iter().zip(["", "i", "j", "k"]) {
        if c.is_zero() {
            continue;
        }
        if wrote && !c.is_negative() {
            f.write_str("+")?;
        }
        if unit.is_empty() {
            write!(f, "{c}")?;
        } else if c.is_one() {
            f.write_str(unit)?;
        } else if (-c).is_one() {
            write!(f, "-{unit}")?;
        } else {
            write!(f, "{c}{unit}")?;
        }
        wrote = true;
    }
    if !wrote {
        f.write_str("0")?;
    }
    Ok(())
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => write!(f, "{r}"),
            Scalar::Residue(_, v) => write!(f, "{v}"),
            Scalar::Poly(field, c) => {
                let parts: Vec<String> = c[..field.degree()].iter().map(u16::to_string).collect();
                write!(f, "[{}]", parts.join(","))
            }
            Scalar::Quaternion(q) => write_quaternion(q, f),
        }
    }
}
