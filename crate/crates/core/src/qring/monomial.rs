use std::fmt;
use std::ops::Mul;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{CycloRational, Unit};

/// `unit · q^q_exp · z^z_exp`, the shape of every specialized argument.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
pub struct Monomial {
    pub unit: Unit,
    #[serde(rename = "q")]
    pub q_exp: i64,
    #[serde(rename = "z")]
    pub z_exp: i64,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { unit: Unit::ONE, q_exp: 0, z_exp: 0 };

    pub fn new(unit: Unit, q_exp: i64, z_exp: i64) -> Self {
        Self { unit, q_exp, z_exp }
    }

    /// `±q^a·z^b`.
    pub fn signed(negative: bool, q_exp: i64, z_exp: i64) -> Self {
        Self::new(Unit::sign(negative), q_exp, z_exp)
    }

    pub fn q(a: i64) -> Self {
        Self::new(Unit::ONE, a, 0)
    }

    pub fn z() -> Self {
        Self::new(Unit::ONE, 0, 1)
    }

    pub fn is_one(&self) -> bool {
        *self == Self::ONE
    }

    pub fn neg(self) -> Self {
        Self { unit: self.unit.neg(), ..self }
    }

    pub fn inv(self) -> Self {
        Self { unit: self.unit.inv(), q_exp: -self.q_exp, z_exp: -self.z_exp }
    }

    pub fn pow(self, e: i64) -> Self {
        Self { unit: self.unit.pow(e), q_exp: self.q_exp * e, z_exp: self.z_exp * e }
    }

    /// The coefficient as an element of Q(ω).
    pub fn coeff(&self) -> Result<CycloRational> {
        self.unit
            .to_cyclo()
            .ok_or_else(|| Error::Unsupported(format!("coefficient {} is not in Q(ω)", self.unit)))
    }

    pub fn eval(&self, q: Complex64, z: Complex64) -> Complex64 {
        let mut v = self.unit.to_complex();
        if self.q_exp != 0 {
            v *= q.powi(self.q_exp as i32);
        }
        if self.z_exp != 0 {
            v *= z.powi(self.z_exp as i32);
        }
        v
    }
}

impl Mul for Monomial {
    type Output = Monomial;
    fn mul(self, rhs: Monomial) -> Monomial {
        Monomial {
            unit: self.unit * rhs.unit,
            q_exp: self.q_exp + rhs.q_exp,
            z_exp: self.z_exp + rhs.z_exp,
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if !self.unit.is_one() || (self.q_exp == 0 && self.z_exp == 0) {
            parts.push(self.unit.to_string());
        }
        match self.q_exp {
            0 => {}
            1 => parts.push("q".into()),
            a => parts.push(format!("q^{a}")),
        }
        match self.z_exp {
            0 => {}
            1 => parts.push("z".into()),
            b => parts.push(format!("z^{b}")),
        }
        write!(f, "{}", parts.join("*"))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multiplication_adds_exponents_and_multiplies_signs() {
        let a = Monomial::signed(true, 3, 2);
        let b = Monomial::signed(true, -1, 1);
        assert_eq!(a * b, Monomial::signed(false, 2, 3));
        assert_eq!(a * a.inv(), Monomial::ONE);
        assert_eq!(a.pow(3), Monomial::signed(true, 9, 6));
    }

    #[test]
    fn display() {
        assert_eq!(Monomial::signed(true, 3, -2).to_string(), "-1*q^3*z^-2");
        assert_eq!(Monomial::ONE.to_string(), "1");
    }
}
