//! Finite permutation groups, fully materialized.
//!
//! Everything here works on groups small enough to hold all elements in
//! memory (the closure cap defaults to [`DEFAULT_GROUP_CAP`]). There are
//! no stabilizer chains: orders, centers, commutator subgroups and the
//! lower central series are computed by direct element arithmetic, which
//! is exact and cheap at the carrier sizes this crate targets.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::perm::Perm;

/// Default cap on the number of materialized elements (8!/2).
pub const DEFAULT_GROUP_CAP: usize = 20160;

/// A permutation group given by generators, with its element set
/// materialized in lexicographic order.
#[derive(Debug, Clone, Eq)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Perm>,
    elements: BTreeSet<Perm>,
}

/// Two groups are the same subgroup of Sym(n) iff their element sets
/// agree; the generating sets are presentation data, not identity.
impl PartialEq for PermGroup {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.elements == other.elements
    }
}

impl PermGroup {
    pub fn trivial(degree: usize) -> PermGroup {
        PermGroup {
            degree,
            generators: Vec::new(),
            elements: [Perm::identity(degree)].into_iter().collect(),
        }
    }

    /// Closes `generators` under composition, materializing the smallest
    /// permutation group containing them.
    pub fn generated(degree: usize, generators: &[Perm], cap: usize) -> Result<PermGroup, Error> {
        for g in generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        let gens: Vec<Perm> = generators
            .iter()
            .cloned()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();

        let mut elements = BTreeSet::new();
        elements.insert(Perm::identity(degree));
        let mut frontier: Vec<Perm> = vec![Perm::identity(degree)];
        while let Some(p) = frontier.pop() {
            for g in &gens {
                let q = p.compose(g);
                if elements.insert(q.clone()) {
                    if elements.len() > cap {
                        return Err(Error::CapExceeded { cap });
                    }
                    frontier.push(q);
                }
            }
        }
        Ok(PermGroup {
            degree,
            generators: gens,
            elements,
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.elements.contains(p)
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    /// Elements in lexicographic order of image vectors.
    pub fn elements(&self) -> impl Iterator<Item = &Perm> {
        self.elements.iter()
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.elements.is_subset(&other.elements)
    }

    pub fn is_abelian(&self) -> bool {
        let gens = &self.generators;
        gens.iter()
            .enumerate()
            .all(|(i, a)| gens[i + 1..].iter().all(|b| a.commutes_with(b)))
    }
}

/// `⟨[h,g] : h ∈ H, g ∈ G⟩`, computed from all pairs of materialized
/// elements so no normal-closure step is needed.
pub fn commutator_subgroup(h: &PermGroup, g: &PermGroup) -> Result<PermGroup, Error> {
    if h.degree() != g.degree() {
        return Err(Error::DegreeMismatch {
            expected: g.degree(),
            found: h.degree(),
        });
    }
    if !h.is_subgroup_of(g) {
        return Err(Error::NotSubgroup);
    }
    let mut commutators = BTreeSet::new();
    for a in h.elements() {
        for b in g.elements() {
            let c = a.commutator(b);
            if !c.is_identity() {
                commutators.insert(c);
            }
        }
    }
    let gens: Vec<Perm> = commutators.into_iter().collect();
    // The result is a subgroup of g, so its order bounds the closure.
    PermGroup::generated(g.degree(), &gens, g.order())
}

/// The descending chain `γ_0 = G`, `γ_{i+1} = [γ_i, G]`, truncated at the
/// first repetition. Errors with `CapExceeded` if the chain is still
/// strictly descending after `cap_steps` stages.
pub fn lower_central_series(g: &PermGroup, cap_steps: usize) -> Result<Vec<PermGroup>, Error> {
    let mut series = vec![g.clone()];
    loop {
        let last = series.last().expect("series is nonempty");
        let next = commutator_subgroup(last, g)?;
        if &next == last {
            return Ok(series);
        }
        if series.len() >= cap_steps {
            return Err(Error::CapExceeded { cap: cap_steps });
        }
        series.push(next);
    }
}

/// The smallest `k` with `γ_k(G)` trivial, or `None` when the series
/// stabilizes above the trivial group.
pub fn nilpotency_class(g: &PermGroup) -> Option<usize> {
    // A strictly descending subgroup chain at least halves the order each
    // step, so 64 stages is unreachable for any materializable group.
    let series = lower_central_series(g, 64).expect("lower central series cannot run 64 stages");
    let last = series.last().expect("series is nonempty");
    if last.is_trivial() {
        Some(series.len() - 1)
    } else {
        None
    }
}

/// The subgroup of elements commuting with everything in `g`.
pub fn center(g: &PermGroup) -> PermGroup {
    // Commuting with every generator suffices.
    let central: BTreeSet<Perm> = g
        .elements()
        .filter(|p| g.generators().iter().all(|q| p.commutes_with(q)))
        .cloned()
        .collect();
    let gens: Vec<Perm> = central
        .iter()
        .filter(|p| !p.is_identity())
        .cloned()
        .collect();
    PermGroup {
        degree: g.degree(),
        generators: gens,
        elements: central,
    }
}

/// Orbit partition of the natural action on `{0..degree-1}`; blocks are
/// sorted and ordered by least element.
pub fn orbits(g: &PermGroup) -> Vec<Vec<usize>> {
    orbits_of(g.degree(), g.generators())
}

/// Orbits of the group generated by `perms` (materialization not needed:
/// the orbits of a group equal the orbits of any generating set).
pub fn orbits_of(degree: usize, perms: &[Perm]) -> Vec<Vec<usize>> {
    let mut uf = UnionFind::new(degree);
    for p in perms {
        for i in 0..degree {
            uf.union(i, p.apply(i));
        }
    }
    uf.blocks()
}

/// True iff every element of `h1` commutes with every element of `h2`
/// (checked on generators, which generate the full commutation).
pub fn groups_commute(h1: &PermGroup, h2: &PermGroup) -> Result<bool, Error> {
    if h1.degree() != h2.degree() {
        return Err(Error::DegreeMismatch {
            expected: h1.degree(),
            found: h2.degree(),
        });
    }
    Ok(h1
        .generators()
        .iter()
        .all(|a| h2.generators().iter().all(|b| a.commutes_with(b))))
}

// Minimal union-find, shared by orbit and congruence computations.
pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> UnionFind {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = x;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            // Attach the larger root under the smaller so block labels
            // stay anchored at least elements.
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }

    /// Blocks sorted internally and ordered by least element.
    pub(crate) fn blocks(&mut self) -> Vec<Vec<usize>> {
        let n = self.parent.len();
        let mut by_root: Vec<Vec<usize>> = vec![Vec::new(); n];
        for i in 0..n {
            let r = self.find(i);
            by_root[r].push(i);
        }
        by_root.into_iter().filter(|b| !b.is_empty()).collect()
    }
}
