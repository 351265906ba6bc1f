//! Float-native scalar primitives together with their derivative tables.

use std::fmt;
use std::str::FromStr;

/// A transcendental primitive available on the Float backend only.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Primitive {
    Exp,
    Sin,
    Cos,
    Log,
}

impl Primitive {
    pub const ALL: [Primitive; 4] = [Primitive::Exp, Primitive::Sin, Primitive::Cos, Primitive::Log];

    pub fn name(self) -> &'static str {
        match self {
            Primitive::Exp => "exp",
            Primitive::Sin => "sin",
            Primitive::Cos => "cos",
            Primitive::Log => "log",
        }
    }

    pub fn eval(self, x: f64) -> f64 {
        self.derivative(0, x)
    }

    /// `k`-th derivative at `x`.
    pub fn derivative(self, k: u32, x: f64) -> f64 {
        match self {
            Primitive::Exp => x.exp(),
            Primitive::Sin => match k % 4 {
                0 => x.sin(),
                1 => x.cos(),
                2 => -x.sin(),
                _ => -x.cos(),
            },
            Primitive::Cos => match k % 4 {
                0 => x.cos(),
                1 => -x.sin(),
                2 => -x.cos(),
                _ => x.sin(),
            },
            Primitive::Log => {
                if k == 0 {
                    x.ln()
                } else {
                    // (-1)^(k-1) (k-1)! / x^k
                    let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
                    let fact: f64 = (1..k).map(f64::from).product();
                    sign * fact / x.powi(k as i32)
                }
            }
        }
    }
}

impl fmt::Display for Primitive {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Primitive {
    type Err = ();

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Primitive::ALL.into_iter().find(|p| p.name() == s).ok_or(())
    }
}
