use std::fmt;
use std::iter::Sum;
use std::ops::Add;

/// A code length in bits.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Default)]
pub struct Codelength(f64);

impl Codelength {
    pub const ZERO: Codelength = Codelength(0.0);

    pub fn from_bits(bits: f64) -> Self {
        Codelength(bits)
    }

    pub fn bits(self) -> f64 {
        self.0
    }

    pub fn is_finite(self) -> bool {
        self.0.is_finite()
    }
}

impl Add for Codelength {
    type Output = Codelength;

    fn add(self, rhs: Codelength) -> Codelength {
        Codelength(self.0 + rhs.0)
    }
}

impl Sum for Codelength {
    fn sum<I: Iterator<Item = Codelength>>(iter: I) -> Codelength {
        Codelength(iter.map(|c| c.0).sum())
    }
}

impl fmt::Display for Codelength {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:.6}", self.0)
    }
}
