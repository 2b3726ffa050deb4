//! Retracts and retract towers.
//!
//! The full retract quotients by the both-translations kernel `≈` and is
//! defined for every birack. The left (right) retract quotients a left
//! (right) distributive birack by `∼` (`∽`); the quotient is then the
//! derived birack of the quotient rack, which keeps each tower inside
//! its distributivity class. Iterating a retract either collapses to a
//! point (the stage index of the first singleton is the multipermutation
//! level) or the size stabilizes and no level exists.
//!
//! Also here: the iterated-translation identities. `m`-reductivity says
//! an `m`-fold translation chain forgets its seed element and equals the
//! chain started one element later; `m`-permutationality only says the
//! seed is forgotten. Checks are exhaustive over all `n^(m+1)` tuples.

use alloc::vec;
use alloc::vec::Vec;

use crate::birack::Birack;
use crate::congruence;
use crate::error::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RetractKind {
    Left,
    Right,
    Full,
}

/// Iterated retracts of a birack: `stages[0]` is the input and each
/// later stage is the retract of its predecessor. `level` is present
/// exactly when the tower reaches a one-element birack, and then equals
/// the index of the first singleton stage. A stabilized tower records
/// the repeated stage for diagnostics.
#[derive(Debug, Clone)]
pub struct RetractTower {
    pub kind: RetractKind,
    pub stages: Vec<Birack>,
    pub level: Option<usize>,
}

impl RetractTower {
    pub fn sizes(&self) -> Vec<usize> {
        self.stages.iter().map(|b| b.n()).collect()
    }
}

/// Left retract: the left derived birack on the quotient of `∼`.
/// Requires left distributivity, which makes `∼` a congruence.
pub fn lret(b: &Birack) -> Result<Birack, Error> {
    if !b.is_left_distributive()? {
        return Err(Error::NotLeftDistributive);
    }
    let c = congruence::sim(b);
    if !congruence::is_congruence(b, &c) {
        return Err(Error::NotACongruence);
    }
    let q = congruence::quotient(b, &c)?;
    // On the quotient of ∼ every right translation is the identity, so
    // the full quotient and the left derived construction coincide.
    if !q.is_left_derived() {
        return Err(Error::SelfCheckMismatch {
            check: "quotient by the left-translation kernel is not left derived",
        });
    }
    Ok(q)
}

/// Right retract: dual of [`lret`], quotienting by `∽`.
pub fn rret(b: &Birack) -> Result<Birack, Error> {
    if !b.is_right_distributive()? {
        return Err(Error::NotRightDistributive);
    }
    let c = congruence::bsim(b);
    if !congruence::is_congruence(b, &c) {
        return Err(Error::NotACongruence);
    }
    let q = congruence::quotient(b, &c)?;
    if !q.is_right_derived() {
        return Err(Error::SelfCheckMismatch {
            check: "quotient by the right-translation kernel is not right derived",
        });
    }
    Ok(q)
}

/// Full retract: quotient by `≈`, defined for every birack.
pub fn ret(b: &Birack) -> Result<Birack, Error> {
    let c = congruence::approx(b);
    if !congruence::is_congruence(b, &c) {
        return Err(Error::NotACongruence);
    }
    congruence::quotient(b, &c)
}

pub fn tower(b: &Birack, kind: RetractKind) -> Result<RetractTower, Error> {
    let step = match kind {
        RetractKind::Left => lret,
        RetractKind::Right => rret,
        RetractKind::Full => ret,
    };
    let mut stages = vec![b.clone()];
    let level = loop {
        let last = stages.last().expect("tower has at least the input stage");
        if last.n() == 1 {
            break Some(stages.len() - 1);
        }
        let next = step(last)?;
        let stabilized = next.n() == last.n();
        stages.push(next);
        if stabilized {
            break None;
        }
    };
    Ok(RetractTower {
        kind,
        stages,
        level,
    })
}

/// The smallest `k` with `|Ret^k(X)| = 1`, or `None` for
/// non-multipermutation biracks. A one-element birack has level 0.
pub fn multipermutation_level(b: &Birack) -> Result<Option<usize>, Error> {
    Ok(tower(b, RetractKind::Full)?.level)
}

// ((v_0 ∘ v_1) ∘ v_2) ∘ ... ∘ v_last
fn fold_circ(b: &Birack, seed: usize, rest: &[usize]) -> usize {
    rest.iter().fold(seed, |acc, &x| b.circ(acc, x))
}

// v_first • (... • (v_penultimate • (v_last))); the seed sits innermost.
fn fold_bullet(b: &Birack, outer: &[usize], seed: usize) -> usize {
    outer.iter().rev().fold(seed, |acc, &x| b.bullet(x, acc))
}

pub(crate) fn for_each_tuple(n: usize, len: usize, mut f: impl FnMut(&[usize]) -> bool) -> bool {
    let mut tuple = vec![0usize; len];
    loop {
        if !f(&tuple) {
            return false;
        }
        let mut i = len;
        loop {
            if i == 0 {
                return true;
            }
            i -= 1;
            tuple[i] += 1;
            if tuple[i] < n {
                break;
            }
            tuple[i] = 0;
        }
    }
}

/// `(..((x_0∘x_1)∘x_2)..)∘x_m = (..((x_1∘x_2)∘x_3)..)∘x_m` for all
/// tuples; with `m = 1` this says `x∘y = y`.
pub fn is_left_m_reductive(b: &Birack, m: usize) -> bool {
    assert!(m >= 1);
    let n = b.n();
    for_each_tuple(n, m, |tail| {
        let rhs = fold_circ(b, tail[0], &tail[1..]);
        (0..n).all(|seed| fold_circ(b, seed, tail) == rhs)
    })
}

/// Mirror dual of [`is_left_m_reductive`]: the last element of an
/// `m`-fold `•` chain is forgotten; with `m = 1` this says `x•y = x`.
pub fn is_right_m_reductive(b: &Birack, m: usize) -> bool {
    assert!(m >= 1);
    let n = b.n();
    for_each_tuple(n, m, |head| {
        let rhs = fold_bullet(b, &head[..m - 1], head[m - 1]);
        (0..n).all(|last| fold_bullet(b, head, last) == rhs)
    })
}

/// The result of an `m`-fold `∘` chain does not depend on the seed:
/// `(..((x∘x_1)∘x_2)..)∘x_m = (..((y∘x_1)∘x_2)..)∘x_m`.
pub fn is_left_m_permutational(b: &Birack, m: usize) -> bool {
    assert!(m >= 1);
    let n = b.n();
    for_each_tuple(n, m, |tail| {
        let first = fold_circ(b, 0, tail);
        (1..n).all(|seed| fold_circ(b, seed, tail) == first)
    })
}

/// The innermost element of an `m`-fold `•` chain is forgotten:
/// `x_0•(..(x_{m-1}•x)..) = x_0•(..(x_{m-1}•y)..)`.
pub fn is_right_m_permutational(b: &Birack, m: usize) -> bool {
    assert!(m >= 1);
    let n = b.n();
    for_each_tuple(n, m, |outer| {
        let first = fold_bullet(b, outer, 0);
        (1..n).all(|seed| fold_bullet(b, outer, seed) == first)
    })
}
