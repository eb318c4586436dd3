use std::fmt;
use std::ops::Mul;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::CycloRational;

/// A twelfth root of unity `exp(2πi·k/12)`, stored as `k mod 12`.
///
/// Signs are `±1`, the cube roots are `ω = Unit(4)` and `ω² = Unit(8)`, and
/// `i = Unit(3)`. Only even powers (sixth roots) live in Q(ω).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Unit(u8);

impl Unit {
    pub const ONE: Unit = Unit(0);
    pub const I: Unit = Unit(3);
    pub const OMEGA: Unit = Unit(4);
    pub const MINUS_ONE: Unit = Unit(6);
    pub const OMEGA_SQ: Unit = Unit(8);

    pub fn new(k: i64) -> Self {
        Unit(k.rem_euclid(12) as u8)
    }

    pub fn sign(negative: bool) -> Self {
        if negative {
            Self::MINUS_ONE
        } else {
            Self::ONE
        }
    }

    pub fn index(self) -> u8 {
        self.0
    }

    pub fn is_one(self) -> bool {
        self.0 == 0
    }

    pub fn pow(self, e: i64) -> Self {
        Unit::new(self.0 as i64 * e.rem_euclid(12))
    }

    pub fn inv(self) -> Self {
        Unit::new(-(self.0 as i64))
    }

    pub fn neg(self) -> Self {
        self * Self::MINUS_ONE
    }

    /// The value in Q(ω), when this is a sixth root of unity.
    pub fn to_cyclo(self) -> Option<CycloRational> {
        let v = match self.0 {
            0 => CycloRational::one(),
            2 => CycloRational::new(1.into(), 1.into()),
            4 => CycloRational::omega(),
            6 => CycloRational::from_int(-1),
            8 => CycloRational::omega_sq(),
            10 => CycloRational::new(0.into(), (-1).into()),
            _ => return None,
        };
        Some(v)
    }

    pub fn to_complex(self) -> Complex64 {
        match self.0 {
            0 => Complex64::new(1.0, 0.0),
            3 => Complex64::new(0.0, 1.0),
            6 => Complex64::new(-1.0, 0.0),
            9 => Complex64::new(0.0, -1.0),
            k => Complex64::from_polar(1.0, std::f64::consts::PI * k as f64 / 6.0),
        }
    }
}

impl Mul for Unit {
    type Output = Unit;
    fn mul(self, rhs: Unit) -> Unit {
        Unit::new(self.0 as i64 + rhs.0 as i64)
    }
}

impl fmt::Display for Unit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            0 => write!(f, "1"),
            6 => write!(f, "-1"),
            4 => write!(f, "ω"),
            8 => write!(f, "ω²"),
            3 => write!(f, "i"),
            9 => write!(f, "-i"),
            k => write!(f, "ζ₁₂^{k}"),
        }
    }
}

impl fmt::Debug for Unit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
