//! Permutations of `{0..n-1}` stored as image vectors.
//!
//! The ordering derived from the image vector (lexicographic) is the
//! canonical element order used everywhere groups are materialized, so
//! reports and element listings are reproducible across runs.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::Error;

/// A bijection on `{0..n-1}`. `images[i]` is the image of `i`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn identity(degree: usize) -> Perm {
        Perm {
            images: (0..degree).collect(),
        }
    }

    /// Builds a permutation from its image vector, checking bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Perm, Error> {
        if !is_bijection(&images) {
            return Err(Error::NotAPermutation);
        }
        Ok(Perm { images })
    }

    /// Builds a permutation from disjoint cycles over `{0..degree-1}`.
    ///
    /// Intended for fixtures and tests; panics on overlapping or
    /// out-of-range cycles.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Perm {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut seen = vec![false; degree];
        for cycle in cycles {
            for (i, &a) in cycle.iter().enumerate() {
                assert!(a < degree, "cycle entry {a} out of range");
                assert!(!seen[a], "cycles are not disjoint at {a}");
                seen[a] = true;
                images[a] = cycle[(i + 1) % cycle.len()];
            }
        }
        Perm { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v] = i;
        }
        Perm { images }
    }

    /// `self ∘ other`: applies `other` first, then `self`.
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.degree(), other.degree());
        Perm {
            images: other.images.iter().map(|&v| self.images[v]).collect(),
        }
    }

    /// The commutator `self⁻¹ other⁻¹ self other`.
    pub fn commutator(&self, other: &Perm) -> Perm {
        self.inverse()
            .compose(&other.inverse())
            .compose(self)
            .compose(other)
    }

    pub fn commutes_with(&self, other: &Perm) -> bool {
        self.compose(other) == other.compose(self)
    }

    /// Nontrivial cycles, each starting at its smallest point, ordered by
    /// that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.images[start] == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut cur = self.images[start];
            while cur != start {
                seen[cur] = true;
                cycle.push(cur);
                cur = self.images[cur];
            }
            out.push(cycle);
        }
        out
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for cycle in cycles {
            f.write_str("(")?;
            for (i, a) in cycle.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{a}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

fn is_bijection(images: &[usize]) -> bool {
    let n = images.len();
    let mut seen = vec![false; n];
    for &v in images {
        if v >= n || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    true
}

/// All permutations of `{0..n-1}` in lexicographic order of image vectors.
pub fn all_perms(n: usize) -> Vec<Perm> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    loop {
        out.push(Perm {
            images: current.clone(),
        });
        if !next_lex(&mut current) {
            break;
        }
    }
    out
}

// Standard in-place next-permutation; false once the last one is reached.
fn next_lex(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_applies_right_factor_first() {
        // self ∘ other on 3 points: other = (0 1), self = (1 2).
        let other = Perm::from_cycles(3, &[&[0, 1]]);
        let this = Perm::from_cycles(3, &[&[1, 2]]);
        let composed = this.compose(&other);
        // 0 → 1 → 2 under "other then self"; the result is (0 2 1).
        assert_eq!(composed.apply(0), 2);
        assert_eq!(composed.apply(1), 0);
        assert_eq!(composed.apply(2), 1);
    }

    #[test]
    fn inverse_round_trip() {
        let p = Perm::from_images(vec![2, 0, 3, 1]).unwrap();
        assert!(p.compose(&p.inverse()).is_identity());
        assert!(p.inverse().compose(&p).is_identity());
    }

    #[test]
    fn from_images_rejects_non_bijections() {
        assert_eq!(
            Perm::from_images(vec![0, 0, 2]),
            Err(Error::NotAPermutation)
        );
        assert_eq!(Perm::from_images(vec![0, 3]), Err(Error::NotAPermutation));
    }

    #[test]
    fn cycle_notation_round_trip() {
        let p = Perm::from_cycles(6, &[&[2, 4, 3, 5]]);
        assert_eq!(p.images(), &[0, 1, 4, 5, 3, 2]);
        assert_eq!(p.cycles(), vec![vec![2, 4, 3, 5]]);
        assert_eq!(alloc::format!("{p}"), "(2 4 3 5)");
        assert_eq!(alloc::format!("{}", Perm::identity(4)), "()");
    }

    #[test]
    fn all_perms_is_lexicographic_and_complete() {
        let perms = all_perms(3);
        assert_eq!(perms.len(), 6);
        assert!(perms.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(perms[0], Perm::identity(3));
        assert_eq!(perms[5].images(), &[2, 1, 0]);
    }
}
