//! Names for the circle actions that appear as lattice generators.

use serde::Serialize;
use std::fmt;

/// Sorted subset of the blow-up indices {1,2,3,4}, as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct CutSet(pub u8);

impl CutSet {
    pub const EMPTY: CutSet = CutSet(0);
    pub const ALL: CutSet = CutSet(0b1111);

    pub fn from_indices(idx: &[usize]) -> Self {
        let mut m = 0u8;
        for &i in idx {
            assert!((1..=4).contains(&i));
            m |= 1 << (i - 1);
        }
        CutSet(m)
    }

    pub fn contains(&self, i: usize) -> bool {
        (1..=4).contains(&i) && self.0 & (1 << (i - 1)) != 0
    }

    pub fn insert(&self, i: usize) -> Self {
        assert!((1..=4).contains(&i));
        CutSet(self.0 | (1 << (i - 1)))
    }

    pub fn complement(&self) -> Self {
        CutSet(!self.0 & 0b1111)
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    /// Ascending members.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (1..=4).filter(move |&i| self.contains(i))
    }

    pub fn indices(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// All 16 subsets, by size then lexicographic.
    pub fn all() -> Vec<CutSet> {
        let mut v: Vec<CutSet> = (0u8..16).map(CutSet).collect();
        v.sort_by_key(|s| (s.len(), s.indices()));
        v
    }

    /// Image under a permutation of {1,2,3,4} (old index -> new index).
    pub fn permute(&self, sigma: &[usize; 4]) -> Self {
        let mut m = 0u8;
        for i in self.iter() {
            m |= 1 << (sigma[i - 1] - 1);
        }
        CutSet(m)
    }
}

impl fmt::Debug for CutSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for i in self.iter() {
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for CutSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in self.iter() {
            write!(f, "{i}")?;
        }
        Ok(())
    }
}

/// A permutation of the blow-up indices, applied to a whole certificate chain.
pub type Sigma = [usize; 4];

pub const SIGMA_ID: Sigma = [1, 2, 3, 4];
pub const SIGMA_SWAP13: Sigma = [3, 2, 1, 4];
pub const SIGMA_SWAP23: Sigma = [1, 3, 2, 4];

fn sigma_suffix(sigma: &Sigma) -> String {
    if *sigma == SIGMA_ID {
        String::new()
    } else {
        format!(
            "^({}{}{}{})",
            sigma[0], sigma[1], sigma[2], sigma[3]
        )
    }
}

/// Named circle actions. `Z`, `W`, `Y0` are the toric-model projections of
/// the T_{k,S} family; the rest are the auxiliary actions of the appendix
/// chains and the §4.3 Seidel detour.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum ActionName {
    /// z_k (empty cut) and z_{k,S}
    Z { k: i64, cut: CutSet },
    /// w_k and w_{k,S} (second projection of T_{k,S}, k ≥ 1)
    W { k: i64, cut: CutSet },
    /// y₀ and y_{0,S} (second projection of T_{0,S})
    Y0 { cut: CutSet },
    /// s_{1,4} and t_{1,4} of the non-NEF detour
    S14,
    T14,
    /// aux1 chain actions (x_n, y_n), n = 1..6, under an index permutation
    Aux1X { n: u8, sigma: Sigma },
    Aux1Y { n: u8, sigma: Sigma },
    /// aux2 chain actions (s_n, t_n)
    Aux2S { n: u8, sigma: Sigma },
    Aux2T { n: u8, sigma: Sigma },
    /// generalized appendix-chain actions: the b and c projections of the
    /// (base, j) chain; side r carries the extra cut on the right, side l on
    /// the left. (base=∅, j=4) is the paper's (b₁, b_{1,4}, c₁, c_{1,4}).
    GcB { base: CutSet, j: usize, left: bool },
    GcC { base: CutSet, j: usize, left: bool },
}

impl ActionName {
    pub fn z(k: i64, idx: &[usize]) -> Self {
        ActionName::Z {
            k,
            cut: CutSet::from_indices(idx),
        }
    }

    pub fn z0() -> Self {
        ActionName::z(0, &[])
    }

    pub fn z1() -> Self {
        ActionName::z(1, &[])
    }

    pub fn z14() -> Self {
        ActionName::z(1, &[4])
    }
}

impl fmt::Display for ActionName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ActionName::Z { k, cut } => {
                if cut.is_empty() {
                    write!(f, "z_{k}")
                } else {
                    write!(f, "z_{{{k},{cut}}}")
                }
            }
            ActionName::W { k, cut } => {
                if cut.is_empty() {
                    write!(f, "w_{k}")
                } else {
                    write!(f, "w_{{{k},{cut}}}")
                }
            }
            ActionName::Y0 { cut } => {
                if cut.is_empty() {
                    write!(f, "y_0")
                } else {
                    write!(f, "y_{{0,{cut}}}")
                }
            }
            ActionName::S14 => write!(f, "s_{{1,4}}"),
            ActionName::T14 => write!(f, "t_{{1,4}}"),
            ActionName::Aux1X { n, sigma } => write!(f, "x_{n}{}", sigma_suffix(sigma)),
            ActionName::Aux1Y { n, sigma } => write!(f, "y_{n}{}", sigma_suffix(sigma)),
            ActionName::Aux2S { n, sigma } => write!(f, "s_{n}{}", sigma_suffix(sigma)),
            ActionName::Aux2T { n, sigma } => write!(f, "t_{n}{}", sigma_suffix(sigma)),
            ActionName::GcB { base, j, left } => {
                if base.is_empty() && *j == 4 {
                    // the paper's names
                    write!(f, "b_{{1{}}}", if *left { ",4" } else { "" })
                } else {
                    write!(
                        f,
                        "b[{}|{}{}]",
                        base,
                        j,
                        if *left { "l" } else { "r" }
                    )
                }
            }
            ActionName::GcC { base, j, left } => {
                if base.is_empty() && *j == 4 {
                    write!(f, "c_{{1{}}}", if *left { ",4" } else { "" })
                } else {
                    write!(
                        f,
                        "c[{}|{}{}]",
                        base,
                        j,
                        if *left { "l" } else { "r" }
                    )
                }
            }
        }
    }
}

impl Serialize for ActionName {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}
