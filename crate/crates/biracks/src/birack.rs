//! The birack type: two Cayley tables with derived division tables,
//! validated against the left/right quasigroup laws and the three mixed
//! exchange axioms.
//!
//! Conventions, fixed once for the whole crate:
//! `circ[x][y] = x∘y` (row `x` is the left translation `L_x`) and
//! `bullet[x][y] = x•y` (column `y` is the right translation `R_y`).
//! Division tables are always derived from `circ` and `bullet`, never
//! supplied, so they cannot disagree with them.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Axiom, Error};
use crate::group::{self, PermGroup, DEFAULT_GROUP_CAP};
use crate::perm::Perm;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Birack {
    n: usize,
    circ: Vec<usize>,
    circ_div: Vec<usize>,
    bullet: Vec<usize>,
    bullet_div: Vec<usize>,
}

impl Birack {
    /// Validates a `(∘, •)` table pair and derives the division tables.
    ///
    /// Checks, in order: table shape, bijectivity of `circ` rows and
    /// `bullet` columns, then the three exchange axioms over all triples.
    /// The reported axiom witness is the lexicographically smallest
    /// failing `(x,y,z)`.
    pub fn validate(n: usize, circ: Vec<usize>, bullet: Vec<usize>) -> Result<Birack, Error> {
        if n == 0 {
            return Err(Error::BadTable {
                reason: "carrier must be nonempty",
            });
        }
        if circ.len() != n * n || bullet.len() != n * n {
            return Err(Error::BadTable {
                reason: "tables must be n×n",
            });
        }
        if circ.iter().chain(bullet.iter()).any(|&v| v >= n) {
            return Err(Error::BadTable {
                reason: "entries must lie in 0..n",
            });
        }

        let mut circ_div = vec![0; n * n];
        for x in 0..n {
            let row = &circ[x * n..(x + 1) * n];
            if !is_bijective(row) {
                return Err(Error::NotLeftQuasigroup { row: x });
            }
            for (y, &v) in row.iter().enumerate() {
                circ_div[x * n + v] = y;
            }
        }

        let mut bullet_div = vec![0; n * n];
        for y in 0..n {
            let mut seen = vec![false; n];
            for x in 0..n {
                let v = bullet[x * n + y];
                if seen[v] {
                    return Err(Error::NotRightQuasigroup { col: y });
                }
                seen[v] = true;
                bullet_div[v * n + y] = x;
            }
        }

        let b = Birack {
            n,
            circ,
            circ_div,
            bullet,
            bullet_div,
        };
        b.check_axioms()?;
        Ok(b)
    }

    /// Convenience wrapper taking row-per-entry tables.
    pub fn from_rows(circ: &[Vec<usize>], bullet: &[Vec<usize>]) -> Result<Birack, Error> {
        let n = circ.len();
        if bullet.len() != n
            || circ.iter().any(|r| r.len() != n)
            || bullet.iter().any(|r| r.len() != n)
        {
            return Err(Error::BadTable {
                reason: "tables must be n×n",
            });
        }
        let flat = |t: &[Vec<usize>]| t.iter().flatten().copied().collect();
        Birack::validate(n, flat(circ), flat(bullet))
    }

    fn check_axioms(&self) -> Result<(), Error> {
        let n = self.n;
        for x in 0..n {
            for y in 0..n {
                let xy_c = self.circ(x, y);
                let xy_b = self.bullet(x, y);
                for z in 0..n {
                    if self.circ(x, self.circ(y, z)) != self.circ(xy_c, self.circ(xy_b, z)) {
                        return Err(Error::AxiomViolation {
                            axiom: Axiom::CircExchange,
                            witness: [x, y, z],
                        });
                    }
                    let lhs = self.bullet(xy_c, self.circ(xy_b, z));
                    let rhs = self.circ(self.bullet(x, self.circ(y, z)), self.bullet(y, z));
                    if lhs != rhs {
                        return Err(Error::AxiomViolation {
                            axiom: Axiom::MixedExchange,
                            witness: [x, y, z],
                        });
                    }
                    let lhs = self.bullet(xy_b, z);
                    let rhs = self.bullet(self.bullet(x, self.circ(y, z)), self.bullet(y, z));
                    if lhs != rhs {
                        return Err(Error::AxiomViolation {
                            axiom: Axiom::BulletExchange,
                            witness: [x, y, z],
                        });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `x∘y`
    #[inline]
    pub fn circ(&self, x: usize, y: usize) -> usize {
        self.circ[x * self.n + y]
    }

    /// `x\∘y`, the unique `u` with `x∘u = y`
    #[inline]
    pub fn circ_div(&self, x: usize, y: usize) -> usize {
        self.circ_div[x * self.n + y]
    }

    /// `x•y`
    #[inline]
    pub fn bullet(&self, x: usize, y: usize) -> usize {
        self.bullet[x * self.n + y]
    }

    /// `x/•y`, the unique `u` with `u•y = x`
    #[inline]
    pub fn bullet_div(&self, x: usize, y: usize) -> usize {
        self.bullet_div[x * self.n + y]
    }

    pub fn circ_table(&self) -> &[usize] {
        &self.circ
    }

    pub fn bullet_table(&self) -> &[usize] {
        &self.bullet
    }

    /// `L_x : a ↦ x∘a`
    pub fn left_translation(&self, x: usize) -> Perm {
        Perm::from_images(self.circ[x * self.n..(x + 1) * self.n].to_vec())
            .expect("validated rows are bijections")
    }

    /// `R_x : a ↦ a•x`
    pub fn right_translation(&self, x: usize) -> Perm {
        Perm::from_images((0..self.n).map(|a| self.bullet(a, x)).collect())
            .expect("validated columns are bijections")
    }

    pub fn left_translations(&self) -> Vec<Perm> {
        (0..self.n).map(|x| self.left_translation(x)).collect()
    }

    pub fn right_translations(&self) -> Vec<Perm> {
        (0..self.n).map(|x| self.right_translation(x)).collect()
    }

    pub fn lmlt(&self) -> Result<PermGroup, Error> {
        self.lmlt_capped(DEFAULT_GROUP_CAP)
    }

    pub fn lmlt_capped(&self, cap: usize) -> Result<PermGroup, Error> {
        PermGroup::generated(self.n, &self.left_translations(), cap)
    }

    pub fn rmlt(&self) -> Result<PermGroup, Error> {
        self.rmlt_capped(DEFAULT_GROUP_CAP)
    }

    pub fn rmlt_capped(&self, cap: usize) -> Result<PermGroup, Error> {
        PermGroup::generated(self.n, &self.right_translations(), cap)
    }

    pub fn mlt(&self) -> Result<PermGroup, Error> {
        self.mlt_capped(DEFAULT_GROUP_CAP)
    }

    pub fn mlt_capped(&self, cap: usize) -> Result<PermGroup, Error> {
        let mut gens = self.left_translations();
        gens.extend(self.right_translations());
        PermGroup::generated(self.n, &gens, cap)
    }

    /// Left self-distributivity, decided by three independent routes that
    /// must agree: the raw identity `x∘(y∘z) = (x∘y)∘(x∘z)`, the
    /// translation criterion `L_x = L_{x•y}`, and constancy of left
    /// translations on the orbits of the right translation group.
    pub fn is_left_distributive(&self) -> Result<bool, Error> {
        let n = self.n;
        let raw = (0..n).all(|x| {
            (0..n).all(|y| {
                (0..n).all(|z| {
                    self.circ(x, self.circ(y, z)) == self.circ(self.circ(x, y), self.circ(x, z))
                })
            })
        });
        let criterion =
            (0..n).all(|x| (0..n).all(|y| self.row_circ(x) == self.row_circ(self.bullet(x, y))));
        let by_orbits = group::orbits_of(n, &self.right_translations())
            .iter()
            .all(|block| {
                block
                    .iter()
                    .all(|&x| self.row_circ(x) == self.row_circ(block[0]))
            });
        if raw != criterion || criterion != by_orbits {
            return Err(Error::SelfCheckMismatch {
                check: "left distributivity routes disagree",
            });
        }
        Ok(raw)
    }

    /// Right self-distributivity; dual of [`Self::is_left_distributive`].
    pub fn is_right_distributive(&self) -> Result<bool, Error> {
        let n = self.n;
        let raw = (0..n).all(|x| {
            (0..n).all(|y| {
                (0..n).all(|z| {
                    self.bullet(self.bullet(y, z), x)
                        == self.bullet(self.bullet(y, x), self.bullet(z, x))
                })
            })
        });
        let criterion =
            (0..n).all(|x| (0..n).all(|y| self.col_bullet(x) == self.col_bullet(self.circ(y, x))));
        let by_orbits = group::orbits_of(n, &self.left_translations())
            .iter()
            .all(|block| {
                block
                    .iter()
                    .all(|&x| self.col_bullet(x) == self.col_bullet(block[0]))
            });
        if raw != criterion || criterion != by_orbits {
            return Err(Error::SelfCheckMismatch {
                check: "right distributivity routes disagree",
            });
        }
        Ok(raw)
    }

    pub fn is_distributive(&self) -> Result<bool, Error> {
        Ok(self.is_left_distributive()? && self.is_right_distributive()?)
    }

    /// Alternative characterization of distributivity: `(X,∘)` a left rack,
    /// `(X,•)` a right rack, plus the three pointwise identities
    /// `(x•y)∘z = x∘z`, `x•(y∘z) = x•z` and `x∘(y•z) = (x∘y)•z`.
    pub fn is_distributive_alt(&self) -> bool {
        let n = self.n;
        let left_rack = (0..n).all(|x| {
            (0..n).all(|y| {
                (0..n).all(|z| {
                    self.circ(x, self.circ(y, z)) == self.circ(self.circ(x, y), self.circ(x, z))
                })
            })
        });
        let right_rack = (0..n).all(|x| {
            (0..n).all(|y| {
                (0..n).all(|z| {
                    self.bullet(self.bullet(y, z), x)
                        == self.bullet(self.bullet(y, x), self.bullet(z, x))
                })
            })
        });
        let pointwise = (0..n).all(|x| {
            (0..n).all(|y| {
                (0..n).all(|z| {
                    self.circ(self.bullet(x, y), z) == self.circ(x, z)
                        && self.bullet(x, self.circ(y, z)) == self.bullet(x, z)
                        && self.circ(x, self.bullet(y, z)) == self.bullet(self.circ(x, y), z)
                })
            })
        });
        left_rack && right_rack && pointwise
    }

    /// `(x∘y)∘(x•y) = x` and `(x∘y)•(x•y) = y` for all pairs.
    pub fn is_involutive(&self) -> bool {
        let n = self.n;
        (0..n).all(|x| {
            (0..n).all(|y| {
                let c = self.circ(x, y);
                let b = self.bullet(x, y);
                self.circ(c, b) == x && self.bullet(c, b) == y
            })
        })
    }

    /// `x∘x = x = x•x` for all `x`.
    pub fn is_idempotent(&self) -> bool {
        (0..self.n).all(|x| self.circ(x, x) == x && self.bullet(x, x) == x)
    }

    /// All left translations equal and all right translations equal.
    pub fn is_permutational(&self) -> bool {
        let n = self.n;
        (1..n).all(|x| self.row_circ(x) == self.row_circ(0))
            && (1..n).all(|y| self.col_bullet(y) == self.col_bullet(0))
    }

    /// `x∘y = y` and `x•y = x` everywhere.
    pub fn is_projection(&self) -> bool {
        let n = self.n;
        (0..n).all(|x| (0..n).all(|y| self.circ(x, y) == y && self.bullet(x, y) == x))
    }

    /// All right translations are the identity (`x•y = x`).
    pub fn is_left_derived(&self) -> bool {
        let n = self.n;
        (0..n).all(|x| (0..n).all(|y| self.bullet(x, y) == x))
    }

    /// All left translations are the identity (`x∘y = y`).
    pub fn is_right_derived(&self) -> bool {
        let n = self.n;
        (0..n).all(|x| (0..n).all(|y| self.circ(x, y) == y))
    }

    /// True iff every `L_x` and every `R_x` preserves all four operations.
    /// Distributive biracks always satisfy this.
    pub fn translations_are_automorphisms(&self) -> bool {
        let n = self.n;
        let mut maps = self.left_translations();
        maps.extend(self.right_translations());
        maps.iter().all(|p| {
            (0..n).all(|a| {
                (0..n).all(|b| {
                    let (pa, pb) = (p.apply(a), p.apply(b));
                    p.apply(self.circ(a, b)) == self.circ(pa, pb)
                        && p.apply(self.circ_div(a, b)) == self.circ_div(pa, pb)
                        && p.apply(self.bullet(a, b)) == self.bullet(pa, pb)
                        && p.apply(self.bullet_div(a, b)) == self.bullet_div(pa, pb)
                })
            })
        })
    }

    pub fn classify(&self) -> Result<PropertyReport, Error> {
        self.classify_capped(DEFAULT_GROUP_CAP)
    }

    /// Aggregates all structural predicates plus group fingerprints.
    pub fn classify_capped(&self, cap: usize) -> Result<PropertyReport, Error> {
        let left_distributive = self.is_left_distributive()?;
        let right_distributive = self.is_right_distributive()?;
        let idempotent = self.is_idempotent();
        Ok(PropertyReport {
            involutive: self.is_involutive(),
            idempotent,
            square_free: idempotent,
            left_distributive,
            right_distributive,
            distributive: left_distributive && right_distributive,
            permutational: self.is_permutational(),
            projection: self.is_projection(),
            left_derived: self.is_left_derived(),
            right_derived: self.is_right_derived(),
            lmlt: GroupFingerprint::of(&self.lmlt_capped(cap)?),
            rmlt: GroupFingerprint::of(&self.rmlt_capped(cap)?),
            mlt: GroupFingerprint::of(&self.mlt_capped(cap)?),
        })
    }

    /// Lexicographically least `(circ, bullet)` pair over all relabelings
    /// of the carrier. Cost is `n!` relabelings; intended for the small
    /// census sizes only.
    pub fn canonical_form(&self) -> Birack {
        let n = self.n;
        let mut best: Option<(Vec<usize>, Vec<usize>)> = None;
        for p in crate::perm::all_perms(n) {
            let mut circ = vec![0; n * n];
            let mut bullet = vec![0; n * n];
            for x in 0..n {
                for y in 0..n {
                    circ[p.apply(x) * n + p.apply(y)] = p.apply(self.circ(x, y));
                    bullet[p.apply(x) * n + p.apply(y)] = p.apply(self.bullet(x, y));
                }
            }
            let candidate = (circ, bullet);
            if best.as_ref().is_none_or(|b| candidate < *b) {
                best = Some(candidate);
            }
        }
        let (circ, bullet) = best.expect("at least the identity relabeling exists");
        Birack::validate(n, circ, bullet).expect("relabeling preserves the axioms")
    }

    #[inline]
    fn row_circ(&self, x: usize) -> &[usize] {
        &self.circ[x * self.n..(x + 1) * self.n]
    }

    fn col_bullet(&self, y: usize) -> Vec<usize> {
        (0..self.n).map(|x| self.bullet(x, y)).collect()
    }
}

fn is_bijective(row: &[usize]) -> bool {
    let mut seen = vec![false; row.len()];
    for &v in row {
        if seen[v] {
            return false;
        }
        seen[v] = true;
    }
    true
}

/// Order, abelianness and nilpotency class of a multiplication group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupFingerprint {
    pub order: usize,
    pub abelian: bool,
    pub nilpotency_class: Option<usize>,
}

impl GroupFingerprint {
    pub fn of(g: &PermGroup) -> GroupFingerprint {
        GroupFingerprint {
            order: g.order(),
            abelian: g.is_abelian(),
            nilpotency_class: group::nilpotency_class(g),
        }
    }
}

/// Structural flags of a birack together with its group fingerprints.
///
/// `square_free` is the solution-level name for the same condition as
/// `idempotent` and always mirrors it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyReport {
    pub involutive: bool,
    pub idempotent: bool,
    pub square_free: bool,
    pub left_distributive: bool,
    pub right_distributive: bool,
    pub distributive: bool,
    pub permutational: bool,
    pub projection: bool,
    pub left_derived: bool,
    pub right_derived: bool,
    pub lmlt: GroupFingerprint,
    pub rmlt: GroupFingerprint,
    pub mlt: GroupFingerprint,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct;

    #[test]
    fn one_element_birack_is_valid() {
        let b = Birack::validate(1, vec![0], vec![0]).unwrap();
        assert!(b.is_projection());
        assert!(b.is_involutive());
        assert!(b.is_distributive().unwrap());
    }

    #[test]
    fn repeated_column_entry_is_rejected() {
        // Identity rows for ∘, but column 1 of • repeats an entry.
        let circ = vec![vec![0, 1], vec![0, 1]];
        let bullet = vec![vec![0, 0], vec![1, 0]];
        assert_eq!(
            Birack::from_rows(&circ, &bullet),
            Err(Error::NotRightQuasigroup { col: 1 })
        );
    }

    #[test]
    fn repeated_row_entry_is_rejected() {
        let circ = vec![vec![0, 0], vec![0, 1]];
        let bullet = vec![vec![0, 0], vec![1, 1]];
        assert_eq!(
            Birack::from_rows(&circ, &bullet),
            Err(Error::NotLeftQuasigroup { row: 0 })
        );
    }

    #[test]
    fn axiom_violation_reports_smallest_witness() {
        // Projection ∘ paired with a • whose columns are id and the swap:
        // the bullet exchange axiom first fails at (0,0,1).
        let circ = vec![vec![0, 1], vec![0, 1]];
        let bullet = vec![vec![0, 1], vec![1, 0]];
        assert_eq!(
            Birack::from_rows(&circ, &bullet),
            Err(Error::AxiomViolation {
                axiom: Axiom::BulletExchange,
                witness: [0, 0, 1],
            })
        );
    }

    #[test]
    fn out_of_range_entries_are_rejected() {
        assert!(matches!(
            Birack::validate(2, vec![0, 1, 0, 7], vec![0, 0, 1, 1]),
            Err(Error::BadTable { .. })
        ));
    }

    #[test]
    fn fixture_translations_match_listing() {
        let b = construct::example6();
        assert_eq!(
            b.left_translation(0),
            Perm::from_cycles(6, &[&[2, 4, 3, 5]])
        );
        assert_eq!(
            b.left_translation(2),
            Perm::from_cycles(6, &[&[0, 1], &[4, 5]])
        );
        assert_eq!(b.left_translation(2), b.left_translation(3));
        assert!(b.right_translation(0).is_identity());
        assert!(b.right_translation(1).is_identity());
        assert_eq!(
            b.right_translation(4),
            Perm::from_cycles(6, &[&[2, 3], &[4, 5]])
        );
    }

    #[test]
    fn fixture_group_fingerprints() {
        let b = construct::example6();
        let lmlt = b.lmlt().unwrap();
        let rmlt = b.rmlt().unwrap();
        let mlt = b.mlt().unwrap();
        assert_eq!(lmlt.order(), 8);
        assert!(!lmlt.is_abelian());
        assert_eq!(rmlt.order(), 2);
        assert_eq!(mlt, lmlt);
    }

    #[test]
    fn fixture_classification() {
        let report = construct::example6().classify().unwrap();
        assert!(report.distributive);
        assert!(!report.involutive);
        assert!(!report.idempotent);
        assert!(!report.permutational);
        assert!(!report.left_derived);
        assert_eq!(report.mlt.nilpotency_class, Some(2));
    }

    #[test]
    fn fixture_translations_are_automorphisms() {
        assert!(construct::example6().translations_are_automorphisms());
    }

    #[test]
    fn wada_distributivity_by_group_shape() {
        // Cyclic of order 8: exponent 8, so not right distributive, while
        // any abelian group gives left distributivity.
        let z8 = construct::wada(&construct::cyclic(8).unwrap());
        assert!(z8.is_left_distributive().unwrap());
        assert!(!z8.is_right_distributive().unwrap());
        assert!(!z8.is_distributive_alt());

        let q8 = construct::wada(&construct::quaternion8());
        assert!(q8.is_distributive().unwrap());
        assert!(q8.is_distributive_alt());
        assert!(!q8.is_involutive());
    }

    #[test]
    fn wada_involutivity() {
        let e8 = construct::wada(&construct::elementary_abelian(3).unwrap());
        assert!(e8.is_involutive());
        assert!(e8.is_projection());
        let z4 = construct::wada(&construct::cyclic(4).unwrap());
        assert!(!z4.is_involutive());
        assert!(z4.is_distributive().unwrap());
    }

    #[test]
    fn canonical_form_is_relabeling_invariant() {
        let b = construct::wada(&construct::cyclic(4).unwrap());
        let n = b.n();
        // Relabel by the 4-cycle and compare canonical forms.
        let p = Perm::from_cycles(n, &[&[0, 1, 2, 3]]);
        let mut circ = vec![0; n * n];
        let mut bullet = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                circ[p.apply(x) * n + p.apply(y)] = p.apply(b.circ(x, y));
                bullet[p.apply(x) * n + p.apply(y)] = p.apply(b.bullet(x, y));
            }
        }
        let relabeled = Birack::validate(n, circ, bullet).unwrap();
        assert_eq!(b.canonical_form(), relabeled.canonical_form());
    }
}
