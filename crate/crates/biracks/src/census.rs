//! Exhaustive censuses of small biracks.
//!
//! The full census walks every table pair with bijective `∘` rows and
//! bijective `•` columns and keeps the pairs passing validation; that
//! is `(n!)^(2n)` candidates, feasible for `n ≤ 3`. The distributive census
//! reaches `n = 4` by factoring through translation families: a
//! distributive birack is exactly a left rack and a right rack glued by
//! three pointwise compatibility identities, so candidates are pairs of
//! self-distributive translation assignments instead of raw tables.
//!
//! Enumeration order is deterministic (odometer over lexicographically
//! sorted row/column permutations), so censuses are reproducible and
//! their sizes are frozen as regression constants in the tests.

use alloc::vec;
use alloc::vec::Vec;

use crate::birack::{Birack, PropertyReport};
use crate::construct::Rack;
use crate::error::Error;
use crate::perm::{all_perms, Perm};
use crate::retract;

/// Largest carrier for the full census.
pub const MAX_FULL_CENSUS: usize = 3;
/// Largest carrier for the distributive census and rack enumeration.
pub const MAX_DISTRIBUTIVE_CENSUS: usize = 4;

/// A census member with its classification and multipermutation level.
#[derive(Debug, Clone)]
pub struct CensusEntry {
    pub birack: Birack,
    pub report: PropertyReport,
    pub mpl: Option<usize>,
}

impl CensusEntry {
    pub fn new(birack: Birack) -> Result<CensusEntry, Error> {
        let report = birack.classify()?;
        let mpl = retract::multipermutation_level(&birack)?;
        Ok(CensusEntry {
            birack,
            report,
            mpl,
        })
    }
}

/// Calls `f` with every `(circ, bullet)` candidate pair on `n` points:
/// all choices of bijective rows for `circ` crossed with all choices of
/// bijective columns for `bullet`, in odometer order.
pub fn for_each_table_pair(n: usize, mut f: impl FnMut(&[usize], &[usize])) -> Result<(), Error> {
    if n == 0 || n > MAX_FULL_CENSUS {
        return Err(Error::SizeTooLarge {
            n,
            max: MAX_FULL_CENSUS,
        });
    }
    let perms = all_perms(n);
    let mut circ_choice = vec![0usize; n];
    let mut circ = vec![0usize; n * n];
    loop {
        for x in 0..n {
            circ[x * n..(x + 1) * n].copy_from_slice(perms[circ_choice[x]].images());
        }
        let mut bullet_choice = vec![0usize; n];
        let mut bullet = vec![0usize; n * n];
        loop {
            for y in 0..n {
                for x in 0..n {
                    bullet[x * n + y] = perms[bullet_choice[y]].apply(x);
                }
            }
            f(&circ, &bullet);
            if !advance(&mut bullet_choice, perms.len()) {
                break;
            }
        }
        if !advance(&mut circ_choice, perms.len()) {
            break;
        }
    }
    Ok(())
}

fn advance(odometer: &mut [usize], base: usize) -> bool {
    for digit in odometer.iter_mut().rev() {
        *digit += 1;
        if *digit < base {
            return true;
        }
        *digit = 0;
    }
    false
}

/// Every valid birack on `n ≤ 3` points, classified, in enumeration
/// order.
pub fn enumerate_biracks(n: usize) -> Result<Vec<CensusEntry>, Error> {
    let mut tables = Vec::new();
    for_each_table_pair(n, |circ, bullet| {
        if let Ok(b) = Birack::validate(n, circ.to_vec(), bullet.to_vec()) {
            tables.push(b);
        }
    })?;
    tables.into_iter().map(CensusEntry::new).collect()
}

// All assignments x ↦ t_x of permutations satisfying the
// self-distributivity constraint t_{t_x(y)} = t_x t_y t_x⁻¹, as index
// vectors into `perms`. Searched depth-first with incremental pruning.
fn translation_families(n: usize, perms: &[Perm]) -> Vec<Vec<usize>> {
    let p = perms.len();
    // comp[i][j] = index of perms[i]∘perms[j]; inv[i] = index of inverse.
    let index_of = |q: &Perm| perms.binary_search(q).expect("all_perms is complete");
    let mut comp = vec![0usize; p * p];
    let mut inv = vec![0usize; p];
    for i in 0..p {
        inv[i] = index_of(&perms[i].inverse());
        for j in 0..p {
            comp[i * p + j] = index_of(&perms[i].compose(&perms[j]));
        }
    }

    let mut families = Vec::new();
    let mut chosen: Vec<usize> = Vec::with_capacity(n);
    search_families(n, perms, &comp, &inv, &mut chosen, &mut families);
    families
}

fn search_families(
    n: usize,
    perms: &[Perm],
    comp: &[usize],
    inv: &[usize],
    chosen: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    let p = perms.len();
    if chosen.len() == n {
        out.push(chosen.clone());
        return;
    }
    for candidate in 0..p {
        chosen.push(candidate);
        if partial_family_ok(perms, comp, inv, chosen) {
            search_families(n, perms, comp, inv, chosen, out);
        }
        chosen.pop();
    }
}

// Checks every constraint pair whose three participants are assigned
// and which involves the newest index.
fn partial_family_ok(perms: &[Perm], comp: &[usize], inv: &[usize], chosen: &[usize]) -> bool {
    let len = chosen.len();
    let newest = len - 1;
    let p = perms.len();
    let conjugate = |x: usize, y: usize| comp[comp[chosen[x] * p + chosen[y]] * p + inv[chosen[x]]];
    for x in 0..len {
        for y in 0..len {
            let target = perms[chosen[x]].apply(y);
            if target >= len {
                continue;
            }
            if x != newest && y != newest && target != newest {
                continue;
            }
            if chosen[target] != conjugate(x, y) {
                return false;
            }
        }
    }
    true
}

/// All left racks on `n ≤ 4` points, in deterministic order.
pub fn enumerate_left_racks(n: usize) -> Result<Vec<Rack>, Error> {
    check_distributive_size(n)?;
    let perms = all_perms(n);
    Ok(translation_families(n, &perms)
        .into_iter()
        .map(|family| {
            let mut op = vec![0; n * n];
            for x in 0..n {
                op[x * n..(x + 1) * n].copy_from_slice(perms[family[x]].images());
            }
            Rack::left_from_table(n, op).expect("translation families are left racks")
        })
        .collect())
}

/// All right racks on `n ≤ 4` points, in deterministic order.
pub fn enumerate_right_racks(n: usize) -> Result<Vec<Rack>, Error> {
    check_distributive_size(n)?;
    let perms = all_perms(n);
    Ok(translation_families(n, &perms)
        .into_iter()
        .map(|family| {
            let mut op = vec![0; n * n];
            for y in 0..n {
                for x in 0..n {
                    op[x * n + y] = perms[family[y]].apply(x);
                }
            }
            Rack::right_from_table(n, op).expect("translation families are right racks")
        })
        .collect())
}

/// Exactly the distributive biracks on `n ≤ 4` points: pairs of a left
/// rack and a right rack satisfying `(x•y)∘z = x∘z`, `x•(y∘z) = x•z`
/// and `x∘(y•z) = (x∘y)•z`.
pub fn enumerate_distributive(n: usize) -> Result<Vec<CensusEntry>, Error> {
    check_distributive_size(n)?;
    let left = enumerate_left_racks(n)?;
    let right = enumerate_right_racks(n)?;
    let mut entries = Vec::new();
    for lrack in &left {
        let circ = lrack.op_table();
        for rrack in &right {
            let bullet = rrack.op_table();
            if glue_identities_hold(n, circ, bullet) {
                let b = Birack::validate(n, circ.to_vec(), bullet.to_vec())
                    .expect("glued rack pairs satisfy the birack axioms");
                entries.push(CensusEntry::new(b)?);
            }
        }
    }
    Ok(entries)
}

fn glue_identities_hold(n: usize, circ: &[usize], bullet: &[usize]) -> bool {
    let c = |x: usize, y: usize| circ[x * n + y];
    let bu = |x: usize, y: usize| bullet[x * n + y];
    // (x•y)∘z = x∘z: left translations constant on •-steps.
    for x in 0..n {
        for y in 0..n {
            let t = bu(x, y);
            if t != x && circ[t * n..(t + 1) * n] != circ[x * n..(x + 1) * n] {
                return false;
            }
        }
    }
    // x•(y∘z) = x•z: right translations constant on ∘-steps.
    for y in 0..n {
        for z in 0..n {
            let t = c(y, z);
            if t != z && (0..n).any(|x| bu(x, t) != bu(x, z)) {
                return false;
            }
        }
    }
    // x∘(y•z) = (x∘y)•z: left and right translations commute pointwise.
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if c(x, bu(y, z)) != bu(c(x, y), z) {
                    return false;
                }
            }
        }
    }
    true
}

fn check_distributive_size(n: usize) -> Result<(), Error> {
    if n == 0 || n > MAX_DISTRIBUTIVE_CENSUS {
        return Err(Error::SizeTooLarge {
            n,
            max: MAX_DISTRIBUTIVE_CENSUS,
        });
    }
    Ok(())
}
