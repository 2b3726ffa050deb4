//! The set-theoretic solution view: a pair of tables `σ`, `τ` defining
//! `r(x,y) = (σ_x(y), τ_y(x))` on `X²`, with the braid-relation oracle.
//!
//! The bridge to biracks fixes `σ_x = L_x` and `τ_y = R_y`, i.e.
//! `r(x,y) = (x∘y, x•y)`. Under that identification a table pair with
//! bijective `σ` rows and `τ` rows passes birack validation exactly when
//! `r` satisfies the braid relation, so the two checks are independent
//! oracles for one another and the census suites compare them
//! exhaustively.

use alloc::vec;
use alloc::vec::Vec;

use crate::birack::Birack;
use crate::error::Error;
use crate::group::{PermGroup, DEFAULT_GROUP_CAP};
use crate::perm::Perm;
use crate::retract;

/// `sigma[x][y] = σ_x(y)` and `tau[y][x] = τ_y(x)`, both row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    n: usize,
    sigma: Vec<usize>,
    tau: Vec<usize>,
}

impl Solution {
    /// Wraps raw tables. Only shape is enforced here: degeneracy and the
    /// braid relation are separate queries, so arbitrary table pairs can
    /// be inspected.
    pub fn new(n: usize, sigma: Vec<usize>, tau: Vec<usize>) -> Result<Solution, Error> {
        if n == 0 {
            return Err(Error::BadTable {
                reason: "carrier must be nonempty",
            });
        }
        if sigma.len() != n * n || tau.len() != n * n {
            return Err(Error::BadTable {
                reason: "tables must be n×n",
            });
        }
        if sigma.iter().chain(tau.iter()).any(|&v| v >= n) {
            return Err(Error::BadTable {
                reason: "entries must lie in 0..n",
            });
        }
        Ok(Solution { n, sigma, tau })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn sigma(&self, x: usize, y: usize) -> usize {
        self.sigma[x * self.n + y]
    }

    #[inline]
    pub fn tau(&self, y: usize, x: usize) -> usize {
        self.tau[y * self.n + x]
    }

    pub fn sigma_table(&self) -> &[usize] {
        &self.sigma
    }

    pub fn tau_table(&self) -> &[usize] {
        &self.tau
    }

    /// `r(x,y) = (σ_x(y), τ_y(x))`
    #[inline]
    pub fn r(&self, x: usize, y: usize) -> (usize, usize) {
        (self.sigma(x, y), self.tau(y, x))
    }

    /// The solution of a birack: `r(x,y) = (x∘y, x•y)`.
    pub fn from_birack(b: &Birack) -> Solution {
        let n = b.n();
        let mut sigma = vec![0; n * n];
        let mut tau = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                sigma[x * n + y] = b.circ(x, y);
                tau[y * n + x] = b.bullet(x, y);
            }
        }
        Solution { n, sigma, tau }
    }

    /// Inverts [`Self::from_birack`]: requires non-degeneracy and the
    /// braid relation, which together are exactly the birack axioms.
    pub fn to_birack(&self) -> Result<Birack, Error> {
        if !self.is_nondegenerate() {
            return Err(Error::Degenerate);
        }
        let n = self.n;
        let mut bullet = vec![0; n * n];
        for y in 0..n {
            for x in 0..n {
                bullet[x * n + y] = self.tau(y, x);
            }
        }
        Birack::validate(n, self.sigma.clone(), bullet).map_err(|e| match e {
            Error::AxiomViolation { witness, .. } => Error::BraidViolation { witness },
            Error::NotLeftQuasigroup { .. } | Error::NotRightQuasigroup { .. } => Error::Degenerate,
            other => other,
        })
    }

    /// Every `σ_x` and every `τ_y` is a bijection.
    pub fn is_nondegenerate(&self) -> bool {
        let row_bijective = |t: &[usize]| {
            t.chunks(self.n).all(|row| {
                let mut seen = vec![false; self.n];
                row.iter().all(|&v| !core::mem::replace(&mut seen[v], true))
            })
        };
        row_bijective(&self.sigma) && row_bijective(&self.tau)
    }

    /// Direct evaluation of the braid relation
    /// `(id×r)(r×id)(id×r) = (r×id)(id×r)(r×id)` on all of `X³`.
    pub fn braid_check(&self) -> bool {
        let n = self.n;
        let r12 = |(x, y, z): (usize, usize, usize)| {
            let (a, b) = self.r(x, y);
            (a, b, z)
        };
        let r23 = |(x, y, z): (usize, usize, usize)| {
            let (a, b) = self.r(y, z);
            (x, a, b)
        };
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let lhs = r23(r12(r23((x, y, z))));
                    let rhs = r12(r23(r12((x, y, z))));
                    if lhs != rhs {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// `r² = id` on `X²`.
    pub fn is_involutive(&self) -> bool {
        let n = self.n;
        (0..n).all(|x| {
            (0..n).all(|y| {
                let (a, b) = self.r(x, y);
                self.r(a, b) == (x, y)
            })
        })
    }

    /// `r(x,x) = (x,x)` for every `x`.
    pub fn is_square_free(&self) -> bool {
        (0..self.n).all(|x| self.r(x, x) == (x, x))
    }

    /// All `σ_x` are the identity.
    pub fn all_sigma_identity(&self) -> bool {
        let n = self.n;
        (0..n).all(|x| (0..n).all(|y| self.sigma(x, y) == y))
    }

    /// All `τ_y` are the identity.
    pub fn all_tau_identity(&self) -> bool {
        let n = self.n;
        (0..n).all(|y| (0..n).all(|x| self.tau(y, x) == x))
    }

    /// Derived solutions: one translation family is trivial.
    pub fn is_derived(&self) -> bool {
        self.all_sigma_identity() || self.all_tau_identity()
    }

    /// Distributivity: `η σ_x = σ_{η(x)} η` and `η τ_x = τ_{η(x)} η` for
    /// every `η` in the Yang-Baxter group. Checking the generators
    /// `σ_y, τ_y` suffices because the property is preserved under
    /// composition and inversion.
    pub fn is_distributive(&self) -> Result<bool, Error> {
        if !self.is_nondegenerate() {
            return Err(Error::Degenerate);
        }
        let sigmas: Vec<Perm> = (0..self.n)
            .map(|x| Perm::from_images(self.sigma[x * self.n..(x + 1) * self.n].to_vec()))
            .collect::<Result<_, _>>()?;
        let taus: Vec<Perm> = (0..self.n)
            .map(|y| Perm::from_images(self.tau[y * self.n..(y + 1) * self.n].to_vec()))
            .collect::<Result<_, _>>()?;
        let intertwines = |eta: &Perm| {
            (0..self.n).all(|x| {
                eta.compose(&sigmas[x]) == sigmas[eta.apply(x)].compose(eta)
                    && eta.compose(&taus[x]) == taus[eta.apply(x)].compose(eta)
            })
        };
        Ok(sigmas.iter().chain(taus.iter()).all(intertwines))
    }

    pub fn yang_baxter_group(&self) -> Result<PermGroup, Error> {
        self.yang_baxter_group_capped(DEFAULT_GROUP_CAP)
    }

    /// The group generated by all `σ_x` and `τ_y`.
    pub fn yang_baxter_group_capped(&self, cap: usize) -> Result<PermGroup, Error> {
        if !self.is_nondegenerate() {
            return Err(Error::Degenerate);
        }
        let mut gens: Vec<Perm> = Vec::with_capacity(2 * self.n);
        for x in 0..self.n {
            gens.push(Perm::from_images(
                self.sigma[x * self.n..(x + 1) * self.n].to_vec(),
            )?);
            gens.push(Perm::from_images(
                self.tau[x * self.n..(x + 1) * self.n].to_vec(),
            )?);
        }
        PermGroup::generated(self.n, &gens, cap)
    }

    /// One retraction step, through the birack bridge.
    pub fn retract(&self) -> Result<Solution, Error> {
        Ok(Solution::from_birack(&retract::ret(&self.to_birack()?)?))
    }

    /// Multipermutation level of the solution.
    pub fn multipermutation_level(&self) -> Result<Option<usize>, Error> {
        retract::multipermutation_level(&self.to_birack()?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct;
    use crate::group;

    fn swap(n: usize) -> Solution {
        Solution::from_birack(&construct::projection(n))
    }

    #[test]
    fn projection_gives_the_swap_map() {
        let s = swap(3);
        for x in 0..3 {
            for y in 0..3 {
                assert_eq!(s.r(x, y), (y, x));
            }
        }
        assert!(s.braid_check());
        assert!(s.is_involutive());
        assert!(s.is_square_free());
        assert!(s.is_distributive().unwrap());
        assert!(s.yang_baxter_group().unwrap().is_trivial());
        assert_eq!(s.multipermutation_level().unwrap(), Some(1));
    }

    #[test]
    fn one_point_solution_has_level_zero() {
        assert_eq!(swap(1).multipermutation_level().unwrap(), Some(0));
    }

    #[test]
    fn round_trip_through_birack() {
        for b in [
            construct::example6(),
            construct::projection(2),
            construct::wada(&construct::quaternion8()),
        ] {
            assert_eq!(Solution::from_birack(&b).to_birack().unwrap(), b);
        }
    }

    #[test]
    fn fixture_solution_fingerprints() {
        let b = construct::example6();
        let s = Solution::from_birack(&b);
        assert!(s.braid_check());
        assert!(!s.is_square_free());
        assert_ne!(s.r(2, 2), (2, 2));
        assert!(s.is_distributive().unwrap());
        let ybg = s.yang_baxter_group().unwrap();
        assert_eq!(ybg.order(), 8);
        assert_eq!(group::nilpotency_class(&ybg), Some(2));
        assert_eq!(ybg, b.mlt().unwrap());
        assert_eq!(s.multipermutation_level().unwrap(), Some(3));
    }

    #[test]
    fn degenerate_tables_are_rejected() {
        // Constant σ rows: braid may hold but the solution is degenerate.
        let s = Solution::new(2, vec![0, 0, 1, 1], vec![0, 1, 0, 1]).unwrap();
        assert!(!s.is_nondegenerate());
        assert_eq!(s.to_birack(), Err(Error::Degenerate));
        assert_eq!(s.is_distributive(), Err(Error::Degenerate));
        assert_eq!(s.yang_baxter_group(), Err(Error::Degenerate));
    }

    #[test]
    fn braid_violation_carries_a_witness() {
        // Bijective rows both ways but the exchange axioms fail.
        let s = Solution::new(2, vec![0, 1, 0, 1], vec![1, 0, 0, 1]).unwrap();
        assert!(s.is_nondegenerate());
        assert!(!s.braid_check());
        assert!(matches!(s.to_birack(), Err(Error::BraidViolation { .. })));
    }

    #[test]
    fn involutivity_and_square_freeness_transfer() {
        for b in [
            construct::projection(3),
            construct::example6(),
            construct::wada(&construct::elementary_abelian(3).unwrap()),
            construct::wada(&construct::cyclic(4).unwrap()),
        ] {
            let s = Solution::from_birack(&b);
            assert_eq!(s.is_involutive(), b.is_involutive());
            assert_eq!(s.is_square_free(), b.is_idempotent());
            assert_eq!(s.is_distributive().unwrap(), b.is_distributive().unwrap());
        }
    }

    #[test]
    fn wada_cyclic8_solution_is_not_distributive() {
        let s = Solution::from_birack(&construct::wada(&construct::cyclic(8).unwrap()));
        assert!(!s.is_distributive().unwrap());
    }

    #[test]
    fn retraction_shrinks_the_fixture_stepwise() {
        let s = Solution::from_birack(&construct::example6());
        let r1 = s.retract().unwrap();
        assert_eq!(r1.n(), 4);
        let r2 = r1.retract().unwrap();
        assert_eq!(r2.n(), 2);
        assert_eq!(r2.multipermutation_level().unwrap(), Some(1));
    }

    #[test]
    fn wada_z4_group_is_small_abelian() {
        let s = Solution::from_birack(&construct::wada(&construct::cyclic(4).unwrap()));
        let g = s.yang_baxter_group().unwrap();
        assert_eq!(g.order(), 4);
        assert!(g.is_abelian());
    }

    #[test]
    fn derived_flags() {
        let op: Vec<usize> = (0..3)
            .flat_map(|x| (0..3).map(move |y| (2 * x + 3 - y) % 3))
            .collect();
        let rack = crate::construct::Rack::left_from_table(3, op).unwrap();
        let left = Solution::from_birack(&construct::left_derived(&rack).unwrap());
        assert!(left.all_tau_identity());
        assert!(!left.all_sigma_identity());
        assert!(left.is_derived());
        assert!(!Solution::from_birack(&construct::example6()).is_derived());
    }
}
