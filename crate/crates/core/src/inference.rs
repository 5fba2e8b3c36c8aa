use std::fmt;
use std::str::FromStr;

use crate::codelength::Codelength;
use crate::complexity::Scorer;
use crate::error::{Error, Result};
use crate::sample::DiscreteSample;

/// Score differences within this many bits count as a tie.
pub const TIE_EPSILON: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    XtoY,
    YtoX,
    Undecided,
}

impl Direction {
    pub fn reversed(self) -> Direction {
        match self {
            Direction::XtoY => Direction::YtoX,
            Direction::YtoX => Direction::XtoY,
            Direction::Undecided => Direction::Undecided,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Direction::XtoY => "XtoY",
            Direction::YtoX => "YtoX",
            Direction::Undecided => "Undecided",
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Direction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "XtoY" | "x->y" | "X->Y" => Ok(Direction::XtoY),
            "YtoX" | "y->x" | "Y->X" => Ok(Direction::YtoX),
            "Undecided" | "undecided" => Ok(Direction::Undecided),
            other => Err(Error::UnknownDirection(other.to_string())),
        }
    }
}

/// Outcome of comparing the two factorizations of a pair.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CausalVerdict {
    /// `S(X) + S(Y | X)`
    pub s_x_to_y: Codelength,
    /// `S(Y) + S(X | Y)`
    pub s_y_to_x: Codelength,
    /// `s_x_to_y - s_y_to_x` in bits.
    pub delta: f64,
    pub direction: Direction,
    /// `|delta|`
    pub confidence: f64,
}

impl CausalVerdict {
    pub fn from_scores(s_x_to_y: Codelength, s_y_to_x: Codelength) -> Self {
        let delta = s_x_to_y.bits() - s_y_to_x.bits();
        let direction = if delta < -TIE_EPSILON {
            Direction::XtoY
        } else if delta > TIE_EPSILON {
            Direction::YtoX
        } else {
            Direction::Undecided
        };
        CausalVerdict {
            s_x_to_y,
            s_y_to_x,
            delta,
            direction,
            confidence: delta.abs(),
        }
    }
}

impl Scorer {
    /// `(S(X) + S(Y | X), S(Y) + S(X | Y))`.
    pub fn directed_scores(
        &self,
        x: &DiscreteSample,
        y: &DiscreteSample,
    ) -> Result<(Codelength, Codelength)> {
        if x.len() != y.len() {
            return Err(Error::LengthMismatch(x.len(), y.len()));
        }
        let forward =
            self.stochastic_complexity(x) + self.conditional_stochastic_complexity(y, x)?;
        let backward =
            self.stochastic_complexity(y) + self.conditional_stochastic_complexity(x, y)?;
        for (score, label) in [(forward, "S(X->Y)"), (backward, "S(Y->X)")] {
            if !score.is_finite() {
                return Err(Error::NonFinite(format!("{label} = {}", score.bits())));
            }
        }
        Ok((forward, backward))
    }

    pub fn infer(&self, x: &DiscreteSample, y: &DiscreteSample) -> Result<CausalVerdict> {
        let (forward, backward) = self.directed_scores(x, y)?;
        Ok(CausalVerdict::from_scores(forward, backward))
    }
}

/// Directed scores with the default precision.
pub fn directed_scores(x: &DiscreteSample, y: &DiscreteSample) -> Result<(Codelength, Codelength)> {
    Scorer::default().directed_scores(x, y)
}

/// Infers the causal direction between `x` and `y` with the default precision.
pub fn infer(x: &DiscreteSample, y: &DiscreteSample) -> Result<CausalVerdict> {
    Scorer::default().infer(x, y)
}
