//! Constructions: a small catalog of finite groups (given by
//! multiplication tables), racks, and every birack construction used by
//! the test suites: permutational, projection, derived, products, Wada
//! switches and a six-element distributive fixture.
//!
//! Catalog groups index their elements `0..order-1` with the identity at
//! index 0; the dihedral and quaternion presentations are fixed by the
//! tables below so that derived fingerprints are stable across runs.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::birack::Birack;
use crate::error::Error;
use crate::perm::Perm;

const MAX_CATALOG_ORDER: usize = 64;

/// A finite group as a multiplication table over `{0..order-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    name: String,
    order: usize,
    identity: usize,
    mul: Vec<usize>,
    inv: Vec<usize>,
}

impl FiniteGroup {
    /// Validates a multiplication table: locates the identity, checks
    /// associativity over all triples, and computes two-sided inverses.
    pub fn from_table(name: &str, order: usize, mul: Vec<usize>) -> Result<FiniteGroup, Error> {
        if order == 0 || mul.len() != order * order {
            return Err(Error::BadTable {
                reason: "multiplication table must be order×order",
            });
        }
        if mul.iter().any(|&v| v >= order) {
            return Err(Error::BadTable {
                reason: "entries must lie in 0..order",
            });
        }
        let at = |a: usize, b: usize| mul[a * order + b];
        let identity = (0..order)
            .find(|&e| (0..order).all(|x| at(e, x) == x && at(x, e) == x))
            .ok_or(Error::BadParameter {
                what: "table has no identity element",
            })?;
        for a in 0..order {
            for b in 0..order {
                for c in 0..order {
                    if at(at(a, b), c) != at(a, at(b, c)) {
                        return Err(Error::BadParameter {
                            what: "table is not associative",
                        });
                    }
                }
            }
        }
        let inv = (0..order)
            .map(|a| {
                (0..order)
                    .find(|&b| at(a, b) == identity && at(b, a) == identity)
                    .ok_or(Error::BadParameter {
                        what: "element without a two-sided inverse",
                    })
            })
            .collect::<Result<Vec<usize>, Error>>()?;
        Ok(FiniteGroup {
            name: name.into(),
            order,
            identity,
            mul,
            inv,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a + 1..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn center_indices(&self) -> Vec<usize> {
        (0..self.order)
            .filter(|&a| (0..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
            .collect()
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut acc = a;
        let mut k = 1;
        while acc != self.identity {
            acc = self.mul(acc, a);
            k += 1;
        }
        k
    }

    pub fn exponent(&self) -> usize {
        (0..self.order).fold(1, |e, a| lcm(e, self.element_order(a)))
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Cyclic group of order `n`, written additively.
pub fn cyclic(n: usize) -> Result<FiniteGroup, Error> {
    check_order(n)?;
    let mul = (0..n)
        .flat_map(|a| (0..n).map(move |b| (a + b) % n))
        .collect();
    FiniteGroup::from_table(&format!("Z{n}"), n, mul)
}

/// Elementary abelian 2-group of rank `k` (order `2^k`); elements are
/// bit masks combined by xor.
pub fn elementary_abelian(k: u32) -> Result<FiniteGroup, Error> {
    let n = 1usize << k;
    check_order(n)?;
    let mul = (0..n).flat_map(|a| (0..n).map(move |b| a ^ b)).collect();
    FiniteGroup::from_table(&format!("E{n}"), n, mul)
}

/// Dihedral group of order `2m`. Elements `0..m` are the rotations
/// `r^i`, elements `m..2m` are the reflections `r^i s`, with `s r s = r⁻¹`.
pub fn dihedral(order: usize) -> Result<FiniteGroup, Error> {
    if order == 0 || !order.is_multiple_of(2) {
        return Err(Error::BadParameter {
            what: "dihedral order must be even and positive",
        });
    }
    check_order(order)?;
    let m = order / 2;
    let mut mul = vec![0; order * order];
    for a in 0..m {
        for b in 0..m {
            mul[a * order + b] = (a + b) % m;
            mul[a * order + (m + b)] = m + (a + b) % m;
            mul[(m + a) * order + b] = m + (a + m - b) % m;
            mul[(m + a) * order + (m + b)] = (a + m - b) % m;
        }
    }
    FiniteGroup::from_table(&format!("D{order}"), order, mul)
}

/// The quaternion group of order 8. Index `2a + s` encodes `±u` for the
/// unit `u ∈ {1, i, j, k}` (axis `a`) with sign bit `s`.
pub fn quaternion8() -> FiniteGroup {
    let mut mul = vec![0; 64];
    for a in 0..4usize {
        for sa in 0..2usize {
            for b in 0..4usize {
                for sb in 0..2usize {
                    let (axis, neg) = match (a, b) {
                        (0, _) => (b, 0),
                        (_, 0) => (a, 0),
                        _ if a == b => (0, 1),
                        _ => {
                            let axis = 6 - a - b;
                            let cyclic = matches!((a, b), (1, 2) | (2, 3) | (3, 1));
                            (axis, usize::from(!cyclic))
                        }
                    };
                    let sign = sa ^ sb ^ neg;
                    mul[(2 * a + sa) * 8 + (2 * b + sb)] = 2 * axis + sign;
                }
            }
        }
    }
    FiniteGroup::from_table("Q8", 8, mul).expect("quaternion table is a group")
}

/// Direct product with elements indexed `(a, b) ↦ a·|G2| + b`.
pub fn direct_product(g1: &FiniteGroup, g2: &FiniteGroup) -> Result<FiniteGroup, Error> {
    let order = g1.order() * g2.order();
    check_order(order)?;
    let o2 = g2.order();
    let mut mul = vec![0; order * order];
    for a1 in 0..g1.order() {
        for a2 in 0..o2 {
            for b1 in 0..g1.order() {
                for b2 in 0..o2 {
                    mul[(a1 * o2 + a2) * order + (b1 * o2 + b2)] =
                        g1.mul(a1, b1) * o2 + g2.mul(a2, b2);
                }
            }
        }
    }
    FiniteGroup::from_table(&format!("{}x{}", g1.name(), g2.name()), order, mul)
}

fn check_order(n: usize) -> Result<(), Error> {
    if n == 0 {
        return Err(Error::BadParameter {
            what: "group order must be positive",
        });
    }
    if n > MAX_CATALOG_ORDER {
        return Err(Error::BadParameter {
            what: "catalog groups are limited to order 64",
        });
    }
    Ok(())
}

/// A one-sided self-distributive quasigroup given by its table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RackSide {
    Left,
    Right,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rack {
    n: usize,
    side: RackSide,
    op: Vec<usize>,
    div: Vec<usize>,
}

impl Rack {
    /// Left rack: every row of `op` bijective and
    /// `x∘(y∘z) = (x∘y)∘(x∘z)`.
    pub fn left_from_table(n: usize, op: Vec<usize>) -> Result<Rack, Error> {
        if n == 0 || op.len() != n * n || op.iter().any(|&v| v >= n) {
            return Err(Error::BadTable {
                reason: "rack table must be n×n over 0..n",
            });
        }
        let at = |x: usize, y: usize| op[x * n + y];
        let mut div = vec![0; n * n];
        for x in 0..n {
            let mut seen = vec![false; n];
            for y in 0..n {
                let v = at(x, y);
                if seen[v] {
                    return Err(Error::NotARack);
                }
                seen[v] = true;
                div[x * n + v] = y;
            }
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if at(x, at(y, z)) != at(at(x, y), at(x, z)) {
                        return Err(Error::NotARack);
                    }
                }
            }
        }
        Ok(Rack {
            n,
            side: RackSide::Left,
            op,
            div,
        })
    }

    /// Right rack: every column of `op` bijective and
    /// `(y•z)•x = (y•x)•(z•x)`.
    pub fn right_from_table(n: usize, op: Vec<usize>) -> Result<Rack, Error> {
        if n == 0 || op.len() != n * n || op.iter().any(|&v| v >= n) {
            return Err(Error::BadTable {
                reason: "rack table must be n×n over 0..n",
            });
        }
        let at = |x: usize, y: usize| op[x * n + y];
        let mut div = vec![0; n * n];
        for y in 0..n {
            let mut seen = vec![false; n];
            for x in 0..n {
                let v = at(x, y);
                if seen[v] {
                    return Err(Error::NotARack);
                }
                seen[v] = true;
                div[v * n + y] = x;
            }
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if at(at(y, z), x) != at(at(y, x), at(z, x)) {
                        return Err(Error::NotARack);
                    }
                }
            }
        }
        Ok(Rack {
            n,
            side: RackSide::Right,
            op,
            div,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn side(&self) -> RackSide {
        self.side
    }

    #[inline]
    pub fn op(&self, x: usize, y: usize) -> usize {
        self.op[x * self.n + y]
    }

    #[inline]
    pub fn div(&self, x: usize, y: usize) -> usize {
        self.div[x * self.n + y]
    }

    pub fn op_table(&self) -> &[usize] {
        &self.op
    }

    /// Row translations of a left rack (or column translations of a
    /// right rack), as permutations.
    pub fn translations(&self) -> Vec<Perm> {
        match self.side {
            RackSide::Left => (0..self.n)
                .map(|x| {
                    Perm::from_images(self.op[x * self.n..(x + 1) * self.n].to_vec())
                        .expect("rack rows are bijections")
                })
                .collect(),
            RackSide::Right => (0..self.n)
                .map(|y| {
                    Perm::from_images((0..self.n).map(|x| self.op(x, y)).collect())
                        .expect("rack columns are bijections")
                })
                .collect(),
        }
    }
}

/// The permutational birack `x∘y = f(y)`, `x•y = g(x)` for commuting
/// bijections `f, g`.
pub fn permutational(n: usize, f: &Perm, g: &Perm) -> Result<Birack, Error> {
    if f.degree() != n {
        return Err(Error::DegreeMismatch {
            expected: n,
            found: f.degree(),
        });
    }
    if g.degree() != n {
        return Err(Error::DegreeMismatch {
            expected: n,
            found: g.degree(),
        });
    }
    if !f.commutes_with(g) {
        return Err(Error::NonCommuting);
    }
    let circ = (0..n).flat_map(|_| f.images().to_vec()).collect();
    let bullet = (0..n).flat_map(|x| vec![g.apply(x); n]).collect();
    Ok(Birack::validate(n, circ, bullet).expect("commuting bijections give a birack"))
}

/// The projection birack `x∘y = y`, `x•y = x`.
pub fn projection(n: usize) -> Birack {
    let id = Perm::identity(n);
    permutational(n, &id, &id).expect("identity maps commute")
}

/// Pairs a left rack with the trivial right structure `x•y = x`.
pub fn left_derived(rack: &Rack) -> Result<Birack, Error> {
    if rack.side() != RackSide::Left {
        return Err(Error::NotARack);
    }
    let n = rack.n();
    let bullet = (0..n).flat_map(|x| vec![x; n]).collect();
    Ok(Birack::validate(n, rack.op_table().to_vec(), bullet)
        .expect("a left rack paired with x•y = x satisfies the axioms"))
}

/// Pairs a right rack with the trivial left structure `x∘y = y`.
pub fn right_derived(rack: &Rack) -> Result<Birack, Error> {
    if rack.side() != RackSide::Right {
        return Err(Error::NotARack);
    }
    let n = rack.n();
    let circ = (0..n).flat_map(|_| (0..n).collect::<Vec<_>>()).collect();
    Ok(Birack::validate(n, circ, rack.op_table().to_vec())
        .expect("a right rack paired with x∘y = y satisfies the axioms"))
}

/// Componentwise product on the carrier `{0..n1·n2-1}`, pair `(a, b)`
/// encoded as `a·n2 + b`.
pub fn product(b1: &Birack, b2: &Birack) -> Birack {
    let (n1, n2) = (b1.n(), b2.n());
    let n = n1 * n2;
    let mut circ = vec![0; n * n];
    let mut bullet = vec![0; n * n];
    for a1 in 0..n1 {
        for a2 in 0..n2 {
            for c1 in 0..n1 {
                for c2 in 0..n2 {
                    let x = a1 * n2 + a2;
                    let y = c1 * n2 + c2;
                    circ[x * n + y] = b1.circ(a1, c1) * n2 + b2.circ(a2, c2);
                    bullet[x * n + y] = b1.bullet(a1, c1) * n2 + b2.bullet(a2, c2);
                }
            }
        }
    }
    Birack::validate(n, circ, bullet).expect("products of biracks satisfy the axioms")
}

/// The Wada switch on a group: `x∘y = xy⁻¹x⁻¹`, `x•y = xy²`.
pub fn wada(g: &FiniteGroup) -> Birack {
    let n = g.order();
    let mut circ = vec![0; n * n];
    let mut bullet = vec![0; n * n];
    for x in 0..n {
        for y in 0..n {
            circ[x * n + y] = g.mul(g.mul(x, g.inv(y)), g.inv(x));
            bullet[x * n + y] = g.mul(x, g.mul(y, y));
        }
    }
    Birack::validate(n, circ, bullet).expect("the Wada switch is a birack on every group")
}

/// A six-element distributive birack that is neither derived nor
/// involutive, given by its translation lists. The translations are
/// recorded in 1-indexed cycle notation and shifted to 0-indexing here;
/// no six-element group has exponent 4, so this is not a Wada switch.
pub fn example6() -> Birack {
    let n = 6;
    let l1 = perm_1indexed(n, &[&[3, 5, 4, 6]]);
    let l2 = perm_1indexed(n, &[&[6, 4, 5, 3]]);
    let l34 = perm_1indexed(n, &[&[1, 2], &[5, 6]]);
    let l56 = perm_1indexed(n, &[&[1, 2], &[3, 4]]);
    let r12 = Perm::identity(n);
    let r3456 = perm_1indexed(n, &[&[3, 4], &[5, 6]]);

    let left = [&l1, &l2, &l34, &l34, &l56, &l56];
    let right = [&r12, &r12, &r3456, &r3456, &r3456, &r3456];
    let mut circ = vec![0; n * n];
    let mut bullet = vec![0; n * n];
    for x in 0..n {
        for y in 0..n {
            circ[x * n + y] = left[x].apply(y);
            bullet[x * n + y] = right[y].apply(x);
        }
    }
    Birack::validate(n, circ, bullet).expect("the six-element fixture is a birack")
}

// 1-indexed cycles, as used in translation listings; the shift to
// 0-indexing happens only here.
fn perm_1indexed(degree: usize, cycles: &[&[usize]]) -> Perm {
    let shifted: Vec<Vec<usize>> = cycles
        .iter()
        .map(|c| c.iter().map(|&a| a - 1).collect())
        .collect();
    let refs: Vec<&[usize]> = shifted.iter().map(|c| c.as_slice()).collect();
    Perm::from_cycles(degree, &refs)
}
