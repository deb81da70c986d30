//! Signs and sign vectors over a finite ground set.

use std::fmt;
use std::ops::{Mul, Neg};

/// An element of `{+, -, 0}`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
#[repr(i8)]
pub enum Sign {
    Minus = -1,
    Zero = 0,
    Plus = 1,
}

impl Sign {
    pub fn of_i64(v: i64) -> Sign {
        match v.cmp(&0) {
            std::cmp::Ordering::Less => Sign::Minus,
            std::cmp::Ordering::Equal => Sign::Zero,
            std::cmp::Ordering::Greater => Sign::Plus,
        }
    }

    pub fn is_zero(self) -> bool {
        self == Sign::Zero
    }

    pub fn as_char(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
            Sign::Zero => '0',
        }
    }

    pub fn from_char(c: char) -> Option<Sign> {
        match c {
            '+' => Some(Sign::Plus),
            '-' => Some(Sign::Minus),
            '0' => Some(Sign::Zero),
            _ => None,
        }
    }

    /// Negate when `odd` is true; used for permutation parities.
    pub fn flip_if(self, odd: bool) -> Sign {
        if odd {
            -self
        } else {
            self
        }
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
            Sign::Zero => Sign::Zero,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        match (self, rhs) {
            (Sign::Zero, _) | (_, Sign::Zero) => Sign::Zero,
            (a, b) if a == b => Sign::Plus,
            _ => Sign::Minus,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// A dense sign vector over the ground set `{0, .., n-1}`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct SignVector {
    signs: Vec<Sign>,
}

impl SignVector {
    pub fn new(signs: Vec<Sign>) -> SignVector {
        SignVector { signs }
    }

    pub fn zero(len: usize) -> SignVector {
        SignVector {
            signs: vec![Sign::Zero; len],
        }
    }

    pub fn len(&self) -> usize {
        self.signs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.signs.is_empty()
    }

    pub fn get(&self, e: usize) -> Sign {
        self.signs[e]
    }

    pub fn set(&mut self, e: usize, s: Sign) {
        self.signs[e] = s;
    }

    pub fn iter(&self) -> impl Iterator<Item = Sign> + '_ {
        self.signs.iter().copied()
    }

    /// Composition: `(X ∘ Y)_e = X_e` unless `X_e = 0`, in which case `Y_e`.
    pub fn compose(&self, other: &SignVector) -> SignVector {
        assert_eq!(self.len(), other.len(), "sign vector length mismatch");
        SignVector {
            signs: self
                .signs
                .iter()
                .zip(&other.signs)
                .map(|(&x, &y)| if x.is_zero() { y } else { x })
                .collect(),
        }
    }

    /// Separation set: elements where the two vectors take opposite nonzero signs.
    pub fn separation(&self, other: &SignVector) -> Vec<usize> {
        assert_eq!(self.len(), other.len(), "sign vector length mismatch");
        (0..self.len())
            .filter(|&e| !self.signs[e].is_zero() && self.signs[e] == -other.signs[e])
            .collect()
    }

    /// Negate the entries on `a`, leaving the rest unchanged.
    pub fn reorient(&self, a: &[usize]) -> SignVector {
        let mut out = self.clone();
        for &e in a {
            assert!(e < out.len(), "reorientation element outside ground set");
            out.signs[e] = -out.signs[e];
        }
        out
    }

    pub fn negate(&self) -> SignVector {
        SignVector {
            signs: self.signs.iter().map(|&s| -s).collect(),
        }
    }

    /// Zero set `Z(X)` as a sorted list.
    pub fn zero_set(&self) -> Vec<usize> {
        (0..self.len()).filter(|&e| self.signs[e].is_zero()).collect()
    }

    /// Zero set as a bit mask (ground sets here never exceed 32 elements).
    pub fn zero_mask(&self) -> u32 {
        let mut m = 0u32;
        for e in 0..self.len() {
            if self.signs[e].is_zero() {
                m |= 1 << e;
            }
        }
        m
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.len()).filter(|&e| !self.signs[e].is_zero()).collect()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.signs.iter().all(|&s| s != Sign::Minus)
    }

    pub fn is_nonpositive(&self) -> bool {
        self.signs.iter().all(|&s| s != Sign::Plus)
    }

    pub fn is_zero_vector(&self) -> bool {
        self.signs.iter().all(|&s| s.is_zero())
    }
}

impl fmt::Display for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.signs {
            write!(f, "{}", s.as_char())?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sv(s: &str) -> SignVector {
        SignVector::new(s.chars().map(|c| Sign::from_char(c).unwrap()).collect())
    }

    #[test]
    fn compose_follows_definition() {
        assert_eq!(sv("+0-").compose(&sv("0++")), sv("++-"));
        let x = sv("+-0+");
        assert_eq!(x.compose(&x), x);
        assert_eq!(sv("00").compose(&sv("-+")), sv("-+"));
    }

    #[test]
    fn separation_set() {
        assert_eq!(sv("+-0").separation(&sv("--+")), vec![0]);
        let x = sv("+-0-");
        assert!(x.separation(&x).is_empty());
        assert_eq!(x.separation(&x.negate()), x.support());
    }

    #[test]
    fn reorientation_is_involution() {
        let x = sv("+-0");
        assert_eq!(x.reorient(&[0, 1]), sv("-+0"));
        assert_eq!(x.reorient(&[]), x);
        assert_eq!(x.reorient(&[0, 2]).reorient(&[0, 2]), x);
    }

    #[test]
    #[should_panic(expected = "length mismatch")]
    fn compose_rejects_length_mismatch() {
        let _ = sv("+").compose(&sv("++"));
    }
}
