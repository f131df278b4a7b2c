use std::ops::{Add, Mul, Neg};

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Rational quaternion `a + b·i + c·j + d·k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quaternion {
    pub a: BigRational,
    pub b: BigRational,
    pub c: BigRational,
    pub d: BigRational,
}

impl Quaternion {
    pub fn new(a: BigRational, b: BigRational, c: BigRational, d: BigRational) -> Self {
        Self { a, b, c, d }
    }

    pub fn from_ints(a: i64, b: i64, c: i64, d: i64) -> Self {
        let r = |v: i64| BigRational::from_integer(v.into());
        Self::new(r(a), r(b), r(c), r(d))
    }

    pub fn zero() -> Self {
        Self::from_ints(0, 0, 0, 0)
    }

    pub fn one() -> Self {
        Self::from_ints(1, 0, 0, 0)
    }

    pub fn components(&self) -> [&BigRational; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn is_zero(&self) -> bool {
        self.components().iter().all(|c| c.is_zero())
    }

    pub fn conjugate(&self) -> Self {
        Self::new(self.a.clone(), -&self.b, -&self.c, -&self.d)
    }

    /// a² + b² + c² + d²
    pub fn norm(&self) -> BigRational {
        self.components().iter().map(|&c| c * c).sum()
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm();
        let q = self.conjugate();
        Ok(Self::new(q.a / &n, q.b / &n, q.c / &n, q.d / &n))
    }

    pub fn is_real(&self) -> bool {
        self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    pub(crate) fn is_unit_one(&self) -> bool {
        self.a.is_one() && self.is_real()
    }

}

impl Add for &Quaternion {
    type Output = Quaternion;

    fn add(self, rhs: &Quaternion) -> Quaternion {
        Quaternion::new(
            &self.a + &rhs.a,
            &self.b + &rhs.b,
            &self.c + &rhs.c,
            &self.d + &rhs.d,
        )
    }
}

impl Neg for &Quaternion {
    type Output = Quaternion;

    fn neg(self) -> Quaternion {
        Quaternion::new(-&self.a, -&self.b, -&self.c, -&self.d)
    }
}

// Hamilton product: i² = j² = k² = ijk = -1.
impl Mul for &Quaternion {
    type Output = Quaternion;

    fn mul(self, rhs: &Quaternion) -> Quaternion {
        let (a1, b1, c1, d1) = (&self.a, &self.b, &self.c, &self.d);
        let (a2, b2, c2, d2) = (&rhs.a, &rhs.b, &rhs.c, &rhs.d);
        Quaternion::new(
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        )
    }
}
