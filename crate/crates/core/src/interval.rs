//! Closed and open hyperbolic intervals.

use crate::error::{Error, Result};
use crate::hyp::Hyp;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IntervalKind {
    Closed,
    Open,
}

/// Shape of an interval as seen through its length `hi - lo`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Degeneracy {
    /// `hi == lo`.
    Point,
    /// Exactly one component of the length is zero, the other positive:
    /// the interval is a segment inside a zero-divisor line.
    Degenerate,
    /// Both components of the length are positive.
    Nondegenerate,
}

/// An order interval `{ z : lo <= z <= hi }` (componentwise), closed or open.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DInterval {
    lo: Hyp,
    hi: Hyp,
    kind: IntervalKind,
}

impl DInterval {
    pub fn closed(lo: Hyp, hi: Hyp) -> Result<DInterval> {
        if !lo.leq(hi) {
            return Err(Error::IntervalOrder {
                lo,
                hi,
                strict: false,
            });
        }
        Ok(DInterval {
            lo,
            hi,
            kind: IntervalKind::Closed,
        })
    }

    pub fn open(lo: Hyp, hi: Hyp) -> Result<DInterval> {
        if !lo.strict_lt(hi) {
            return Err(Error::IntervalOrder {
                lo,
                hi,
                strict: true,
            });
        }
        Ok(DInterval {
            lo,
            hi,
            kind: IntervalKind::Open,
        })
    }

    pub fn lo(&self) -> Hyp {
        self.lo
    }

    pub fn hi(&self) -> Hyp {
        self.hi
    }

    pub fn kind(&self) -> IntervalKind {
        self.kind
    }

    pub fn contains(&self, z: Hyp) -> bool {
        match self.kind {
            IntervalKind::Closed => self.lo.leq(z) && z.leq(self.hi),
            IntervalKind::Open => self.lo.strict_lt(z) && z.strict_lt(self.hi),
        }
    }

    /// The hyperbolic length `hi - lo`.
    pub fn length(&self) -> Hyp {
        self.hi - self.lo
    }

    pub fn degeneracy(&self) -> Degeneracy {
        let l = self.length();
        match (l.u() == 0.0, l.v() == 0.0) {
            (true, true) => Degeneracy::Point,
            (true, false) | (false, true) => Degeneracy::Degenerate,
            (false, false) => Degeneracy::Nondegenerate,
        }
    }
}
