//! Congruences of a birack: partitions of the carrier compatible with
//! all four operations, and the quotient construction.
//!
//! The three relations of interest identify elements with equal left
//! translations ([`sim`]), equal right translations ([`bsim`]), or both
//! ([`approx`]). Their blocks are always recorded sorted and ordered by
//! least element; quotients label classes by least representative and
//! renumber densely, so all derived structures are reproducible.

use alloc::vec;
use alloc::vec::Vec;

use crate::birack::Birack;
use crate::error::Error;
use crate::group::UnionFind;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CongruenceKind {
    /// equal left translations
    Sim,
    /// equal right translations
    Bsim,
    /// equal left and right translations
    Approx,
    /// join of two congruences
    Join,
    Custom,
}

/// A partition of `{0..base_size-1}`, tagged with how it arose.
#[derive(Debug, Clone, Eq)]
pub struct Congruence {
    base_size: usize,
    kind: CongruenceKind,
    blocks: Vec<Vec<usize>>,
    class_of: Vec<usize>,
}

/// Congruences compare as partitions; the kind tag is provenance only.
impl PartialEq for Congruence {
    fn eq(&self, other: &Self) -> bool {
        self.base_size == other.base_size && self.blocks == other.blocks
    }
}

impl Congruence {
    /// Wraps caller-supplied blocks, verifying they partition the carrier.
    pub fn custom(base_size: usize, blocks: Vec<Vec<usize>>) -> Result<Congruence, Error> {
        let mut seen = vec![false; base_size];
        for block in &blocks {
            if block.is_empty() {
                return Err(Error::InvalidPartition);
            }
            for &x in block {
                if x >= base_size || seen[x] {
                    return Err(Error::InvalidPartition);
                }
                seen[x] = true;
            }
        }
        if !seen.iter().all(|&s| s) {
            return Err(Error::InvalidPartition);
        }
        let mut class_of = vec![0; base_size];
        let mut sorted_blocks: Vec<Vec<usize>> = blocks
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b
            })
            .collect();
        sorted_blocks.sort_unstable();
        for (i, block) in sorted_blocks.iter().enumerate() {
            for &x in block {
                class_of[x] = i;
            }
        }
        Ok(Congruence {
            base_size,
            kind: CongruenceKind::Custom,
            blocks: sorted_blocks,
            class_of,
        })
    }

    fn from_class_keys<K: Ord>(kind: CongruenceKind, keys: Vec<K>) -> Congruence {
        let base_size = keys.len();
        let mut order: Vec<usize> = (0..base_size).collect();
        order.sort_by(|&a, &b| keys[a].cmp(&keys[b]).then(a.cmp(&b)));
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for &x in &order {
            match blocks.last_mut() {
                Some(last) if keys[last[0]] == keys[x] => last.push(x),
                _ => blocks.push(vec![x]),
            }
        }
        blocks.sort_unstable();
        let mut class_of = vec![0; base_size];
        for (i, block) in blocks.iter().enumerate() {
            for &x in block {
                class_of[x] = i;
            }
        }
        Congruence {
            base_size,
            kind,
            blocks,
            class_of,
        }
    }

    pub fn base_size(&self) -> usize {
        self.base_size
    }

    pub fn kind(&self) -> CongruenceKind {
        self.kind
    }

    /// Blocks, sorted internally and ordered by least element.
    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn class_count(&self) -> usize {
        self.blocks.len()
    }

    /// Index of the block containing `x`.
    pub fn class_of(&self, x: usize) -> usize {
        self.class_of[x]
    }

    pub fn is_identity_partition(&self) -> bool {
        self.blocks.len() == self.base_size
    }
}

/// `a ∼ b ⇔ L_a = L_b`
pub fn sim(b: &Birack) -> Congruence {
    let keys: Vec<Vec<usize>> = (0..b.n())
        .map(|x| (0..b.n()).map(|y| b.circ(x, y)).collect())
        .collect();
    Congruence::from_class_keys(CongruenceKind::Sim, keys)
}

/// `a ∽ b ⇔ R_a = R_b`
pub fn bsim(b: &Birack) -> Congruence {
    let keys: Vec<Vec<usize>> = (0..b.n())
        .map(|x| (0..b.n()).map(|y| b.bullet(y, x)).collect())
        .collect();
    Congruence::from_class_keys(CongruenceKind::Bsim, keys)
}

/// `a ≈ b ⇔ L_a = L_b and R_a = R_b`; the common refinement of [`sim`]
/// and [`bsim`]. A congruence of every birack.
pub fn approx(b: &Birack) -> Congruence {
    let keys: Vec<(Vec<usize>, Vec<usize>)> = (0..b.n())
        .map(|x| {
            (
                (0..b.n()).map(|y| b.circ(x, y)).collect(),
                (0..b.n()).map(|y| b.bullet(y, x)).collect(),
            )
        })
        .collect();
    Congruence::from_class_keys(CongruenceKind::Approx, keys)
}

/// Exhaustive compatibility check of a partition against all four
/// operations.
pub fn is_congruence(b: &Birack, c: &Congruence) -> bool {
    if c.base_size() != b.n() {
        return false;
    }
    let n = b.n();
    let rep = |i: usize| c.blocks()[i][0];
    for x in 0..n {
        for y in 0..n {
            let (rx, ry) = (rep(c.class_of(x)), rep(c.class_of(y)));
            if c.class_of(b.circ(x, y)) != c.class_of(b.circ(rx, ry))
                || c.class_of(b.circ_div(x, y)) != c.class_of(b.circ_div(rx, ry))
                || c.class_of(b.bullet(x, y)) != c.class_of(b.bullet(rx, ry))
                || c.class_of(b.bullet_div(x, y)) != c.class_of(b.bullet_div(rx, ry))
            {
                return false;
            }
        }
    }
    true
}

/// Join of two congruences: the transitive closure of the union of
/// their partitions, verified compatible.
pub fn join(b: &Birack, c1: &Congruence, c2: &Congruence) -> Result<Congruence, Error> {
    if c1.base_size() != b.n() || c2.base_size() != b.n() {
        return Err(Error::InvalidPartition);
    }
    let mut uf = UnionFind::new(b.n());
    for c in [c1, c2] {
        for block in c.blocks() {
            for &x in &block[1..] {
                uf.union(block[0], x);
            }
        }
    }
    let blocks = uf.blocks();
    let mut joined = Congruence::custom(b.n(), blocks)?;
    joined.kind = CongruenceKind::Join;
    if !is_congruence(b, &joined) {
        return Err(Error::NotACongruence);
    }
    Ok(joined)
}

/// Quotient birack on the classes of a congruence, with operations
/// induced by least representatives.
pub fn quotient(b: &Birack, c: &Congruence) -> Result<Birack, Error> {
    if c.base_size() != b.n() {
        return Err(Error::InvalidPartition);
    }
    if !is_congruence(b, c) {
        return Err(Error::NotACongruence);
    }
    let k = c.class_count();
    let rep = |i: usize| c.blocks()[i][0];
    let mut circ = vec![0; k * k];
    let mut bullet = vec![0; k * k];
    for i in 0..k {
        for j in 0..k {
            circ[i * k + j] = c.class_of(b.circ(rep(i), rep(j)));
            bullet[i * k + j] = c.class_of(b.bullet(rep(i), rep(j)));
        }
    }
    Ok(Birack::validate(k, circ, bullet).expect("quotients by congruences satisfy the axioms"))
}
