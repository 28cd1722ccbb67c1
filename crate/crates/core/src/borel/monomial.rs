use core::cmp::Ordering;

use crate::MAX_LEGS;

/// Momentum part of one tensor leg: `P^p Q^q`.
///
/// `P` carries one power of `1/κ`; the transverse probe `Q` carries none.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LegMonomial {
    pub p: u32,
    pub q: u32,
}

impl LegMonomial {
    pub const ONE: LegMonomial = LegMonomial { p: 0, q: 0 };

    pub fn new(p: u32, q: u32) -> Self {
        LegMonomial { p, q }
    }

    pub fn is_one(&self) -> bool {
        self.p == 0 && self.q == 0
    }

    /// Total momentum degree; the shift a dilatation polynomial picks up when
    /// moved across this monomial.
    pub fn degree(&self) -> u32 {
        self.p + self.q
    }
}

/// Momentum monomials of all legs of a tensor term.
///
/// Ordered by κ-grade first, then lexicographically by leg.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial {
    legs: [LegMonomial; MAX_LEGS],
}

impl Monomial {
    pub const ONE: Monomial = Monomial {
        legs: [LegMonomial::ONE; MAX_LEGS],
    };

    /// Unused trailing legs are filled with `1`.
    pub fn new(legs: &[LegMonomial]) -> Self {
        assert!(legs.len() <= MAX_LEGS);
        let mut m = Monomial::ONE;
        m.legs[..legs.len()].copy_from_slice(legs);
        m
    }

    pub fn leg(&self, i: usize) -> LegMonomial {
        self.legs[i]
    }

    pub(crate) fn set_leg(&mut self, i: usize, leg: LegMonomial) {
        self.legs[i] = leg;
    }

    pub fn as_slice(&self, legs: usize) -> &[LegMonomial] {
        &self.legs[..legs]
    }

    /// Power of `1/κ` carried by this monomial.
    pub fn grade(&self) -> u32 {
        self.legs.iter().map(|l| l.p).sum()
    }

    pub fn is_one(&self) -> bool {
        self.legs.iter().all(LegMonomial::is_one)
    }

    pub(crate) fn mul(&self, rhs: &Monomial) -> Monomial {
        let mut out = *self;
        for (a, b) in out.legs.iter_mut().zip(&rhs.legs) {
            a.p += b.p;
            a.q += b.q;
        }
        out
    }

    /// Offsets `-(p_i + q_i)` per leg: `q(D) P^a Q^b = P^a Q^b q(D - a - b)`.
    pub(crate) fn reorder_shift(&self, legs: usize) -> [i64; MAX_LEGS] {
        let mut s = [0i64; MAX_LEGS];
        for (i, l) in self.legs.iter().enumerate().take(legs) {
            s[i] = -(l.degree() as i64);
        }
        s
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.grade()
            .cmp(&other.grade())
            .then_with(|| self.legs.cmp(&other.legs))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grade_first_ordering() {
        let a = Monomial::new(&[LegMonomial::new(0, 3), LegMonomial::ONE]);
        let b = Monomial::new(&[LegMonomial::ONE, LegMonomial::new(1, 0)]);
        let c = Monomial::new(&[LegMonomial::new(1, 0), LegMonomial::ONE]);
        assert!(a < b);
        assert!(b < c);
        assert_eq!(a.grade(), 0);
        assert_eq!(c.mul(&b).grade(), 2);
    }
}
