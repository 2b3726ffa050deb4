use core::fmt;

/// The three mixed birack axioms relating `∘` and `•`.
///
/// `CircExchange`:   x∘(y∘z) = (x∘y)∘((x•y)∘z)
/// `MixedExchange`:  (x∘y)•((x•y)∘z) = (x•(y∘z))∘(y•z)
/// `BulletExchange`: (x•y)•z = (x•(y∘z))•(y•z)
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axiom {
    CircExchange,
    MixedExchange,
    BulletExchange,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Axiom::CircExchange => "x∘(y∘z) = (x∘y)∘((x•y)∘z)",
            Axiom::MixedExchange => "(x∘y)•((x•y)∘z) = (x•(y∘z))∘(y•z)",
            Axiom::BulletExchange => "(x•y)•z = (x•(y∘z))•(y•z)",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A permutation image vector was not a bijection on {0..n-1}.
    NotAPermutation,
    /// Permutations of different degrees were mixed.
    DegreeMismatch {
        expected: usize,
        found: usize,
    },
    /// Group closure (or an iterated series) grew past the configured cap.
    CapExceeded {
        cap: usize,
    },
    /// The claimed subgroup is not contained in the ambient group.
    NotSubgroup,
    /// Some row of the `∘` table is not a bijection.
    NotLeftQuasigroup {
        row: usize,
    },
    /// Some column of the `•` table is not a bijection.
    NotRightQuasigroup {
        col: usize,
    },
    /// A mixed birack axiom failed; `witness` is the smallest failing triple.
    AxiomViolation {
        axiom: Axiom,
        witness: [usize; 3],
    },
    /// Two supposedly equivalent computation routes disagreed. Always a bug.
    SelfCheckMismatch {
        check: &'static str,
    },
    /// The two bijections of a permutational birack must commute.
    NonCommuting,
    /// The given table is not a rack of the requested side.
    NotARack,
    /// The partition is not compatible with all four operations.
    NotACongruence,
    /// Blocks do not form a partition of the carrier.
    InvalidPartition,
    NotLeftDistributive,
    NotRightDistributive,
    NotDistributive,
    /// The map r(x,y) fails the braid relation; `witness` is a failing triple.
    BraidViolation {
        witness: [usize; 3],
    },
    /// Some σ_x or τ_y is not a bijection.
    Degenerate,
    /// Exhaustive enumeration is not supported at this carrier size.
    SizeTooLarge {
        n: usize,
        max: usize,
    },
    /// A table is malformed (wrong shape or out-of-range entries).
    BadTable {
        reason: &'static str,
    },
    /// A constructor was given an unusable parameter.
    BadParameter {
        what: &'static str,
    },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotAPermutation => write!(f, "image vector is not a bijection"),
            Error::DegreeMismatch { expected, found } => {
                write!(f, "degree mismatch: expected {expected}, found {found}")
            }
            Error::CapExceeded { cap } => write!(f, "closure exceeded cap of {cap}"),
            Error::NotSubgroup => write!(f, "not a subgroup of the ambient group"),
            Error::NotLeftQuasigroup { row } => {
                write!(f, "row {row} of the ∘ table is not a bijection")
            }
            Error::NotRightQuasigroup { col } => {
                write!(f, "column {col} of the • table is not a bijection")
            }
            Error::AxiomViolation { axiom, witness } => write!(
                f,
                "axiom `{axiom}` fails at (x,y,z)=({},{},{})",
                witness[0], witness[1], witness[2]
            ),
            Error::SelfCheckMismatch { check } => {
                write!(f, "internal self-check failed: {check}")
            }
            Error::NonCommuting => write!(f, "the bijections f and g do not commute"),
            Error::NotARack => write!(f, "table is not a rack of the requested side"),
            Error::NotACongruence => write!(f, "partition is not a congruence"),
            Error::InvalidPartition => write!(f, "blocks do not partition the carrier"),
            Error::NotLeftDistributive => write!(f, "birack is not left distributive"),
            Error::NotRightDistributive => write!(f, "birack is not right distributive"),
            Error::NotDistributive => write!(f, "birack is not distributive"),
            Error::BraidViolation { witness } => write!(
                f,
                "braid relation fails at (x,y,z)=({},{},{})",
                witness[0], witness[1], witness[2]
            ),
            Error::Degenerate => write!(f, "solution is degenerate"),
            Error::SizeTooLarge { n, max } => {
                write!(f, "carrier size {n} exceeds enumeration limit {max}")
            }
            Error::BadTable { reason } => write!(f, "malformed table: {reason}"),
            Error::BadParameter { what } => write!(f, "bad parameter: {what}"),
        }
    }
}

impl core::error::Error for Error {}
