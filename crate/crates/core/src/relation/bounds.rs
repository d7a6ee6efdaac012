use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// Size limits on enumerated expressions: `t` summands, `m` bracket leaves
/// per summand, `p` terms per coefficient sum and `q` factors per
/// coefficient product.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExpressionBounds {
    pub t: u8,
    pub m: u8,
    pub p: u8,
    pub q: u8,
}

impl ExpressionBounds {
    pub const DEFAULT: Self = Self { t: 2, m: 2, p: 1, q: 1 };
    pub const CAP: Self = Self { t: 4, m: 4, p: 3, q: 3 };

    pub fn new(t: u8, m: u8, p: u8, q: u8) -> Result<Self> {
        let b = Self { t, m, p, q };
        b.validate()?;
        Ok(b)
    }

    pub fn from_array(a: [u8; 4]) -> Result<Self> {
        Self::new(a[0], a[1], a[2], a[3])
    }

    pub fn as_array(&self) -> [u8; 4] {
        [self.t, self.m, self.p, self.q]
    }

    /// All components at least 1 and within [`ExpressionBounds::CAP`].
    pub fn validate(&self) -> Result<()> {
        if self.as_array().contains(&0) {
            return Err(Error::InvalidParameter("expression bounds must be at least 1".into()));
        }
        if !self.le(&Self::CAP) {
            return Err(Error::BoundsExceeded { requested: self.as_array(), cap: Self::CAP.as_array() });
        }
        Ok(())
    }

    /// Componentwise `≤`.
    pub fn le(&self, other: &Self) -> bool {
        self.as_array().iter().zip(other.as_array()).all(|(a, b)| *a <= b)
    }

    /// Escalation steps from `self` to `cap`: one component is raised per
    /// step, cycling `t, m, p, q` and skipping components already at the cap.
    /// The first entry is `self`.
    pub fn ladder(&self, cap: &Self) -> Result<Vec<Self>> {
        self.validate()?;
        cap.validate()?;
        if !self.le(cap) {
            return Err(Error::BoundsExceeded { requested: self.as_array(), cap: cap.as_array() });
        }
        let cap = cap.as_array();
        let mut cur = self.as_array();
        let mut out = alloc::vec![*self];
        let mut next = 0;
        while cur != cap {
            let k = (0..4).map(|d| (next + d) % 4).find(|&k| cur[k] < cap[k]).unwrap();
            cur[k] += 1;
            next = k + 1;
            out.push(Self { t: cur[0], m: cur[1], p: cur[2], q: cur[3] });
        }
        Ok(out)
    }
}

impl Default for ExpressionBounds {
    fn default() -> Self {
        Self::DEFAULT
    }
}

impl fmt::Display for ExpressionBounds {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.t, self.m, self.p, self.q)
    }
}
