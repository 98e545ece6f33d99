//! Parabolic subalgebras containing the fixed Cartan subalgebra.
//!
//! A defining vector `λ0` splits the roots by the sign of `(λ0, α)`:
//! zero gives the Levi factor, positive gives `u`, negative gives `ū`.
//! The parabolic itself is `q = l + ū`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootsys::{Root, RootSystem, Weight};

/// A set of 1-based simple-root indices.
///
/// Orders by size first, then lexicographically, so sweeps list `{1}`,
/// `{2}`, ..., `{1,2}`, ... .
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct NodeSet(BTreeSet<usize>);

impl NodeSet {
    pub fn new(nodes: impl IntoIterator<Item = usize>) -> Self {
        NodeSet(nodes.into_iter().collect())
    }

    pub fn empty() -> Self {
        NodeSet::default()
    }

    pub fn all(rank: usize) -> Self {
        NodeSet::new(1..=rank)
    }

    /// All nonempty subsets of `{1..rank}` in [`NodeSet`] order.
    pub fn nonempty_subsets(rank: usize) -> Vec<NodeSet> {
        let mut out: Vec<NodeSet> = (1u32..(1 << rank))
            .map(|mask| NodeSet::new((0..rank).filter(|i| mask & (1 << i) != 0).map(|i| i + 1)))
            .collect();
        out.sort();
        out
    }

    pub fn contains(&self, node: usize) -> bool {
        self.0.contains(&node)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn is_subset(&self, other: &NodeSet) -> bool {
        self.0.is_subset(&other.0)
    }

    /// `Σ_{j ∈ self} λ_j`.
    pub fn weight(&self, rank: usize) -> Weight {
        let mut coords = vec![0; rank];
        for j in self.iter() {
            coords[j - 1] = 1;
        }
        Weight::new(coords)
    }
}

impl Ord for NodeSet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.iter().cmp(other.0.iter()))
    }
}

impl PartialOrd for NodeSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for NodeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, j) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{j}")?;
        }
        write!(f, "}}")
    }
}

impl FromStr for NodeSet {
    type Err = std::num::ParseIntError;

    /// Parses `"1,3"`; braces and blanks are ignored and `""` is empty.
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let s = s.trim().trim_start_matches('{').trim_end_matches('}');
        s.split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(str::parse)
            .collect::<std::result::Result<BTreeSet<usize>, _>>()
            .map(NodeSet)
    }
}

impl FromIterator<usize> for NodeSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        NodeSet::new(iter)
    }
}

#[derive(Debug, Clone)]
pub struct Parabolic<'a> {
    rs: &'a RootSystem,
    lambda0: Weight,
    nodes: NodeSet,
    levi: BTreeSet<Root>,
    u: BTreeSet<Root>,
    ubar: BTreeSet<Root>,
}

impl<'a> Parabolic<'a> {
    fn partition(rs: &'a RootSystem, lambda0: Weight, nodes: NodeSet) -> Self {
        let mut levi = BTreeSet::new();
        let mut u = BTreeSet::new();
        let mut ubar = BTreeSet::new();
        for r in rs.roots() {
            match rs.form(&lambda0, r).signum() {
                0 => levi.insert(r.clone()),
                1 => u.insert(r.clone()),
                _ => ubar.insert(r.clone()),
            };
        }
        Parabolic {
            rs,
            lambda0,
            nodes,
            levi,
            u,
            ubar,
        }
    }

    pub fn root_system(&self) -> &'a RootSystem {
        self.rs
    }

    /// The defining vector `λ0` as supplied.
    pub fn lambda0(&self) -> &Weight {
        &self.lambda0
    }

    /// Support of the dominant conjugate of `λ0`.
    pub fn nodes(&self) -> &NodeSet {
        &self.nodes
    }

    pub fn levi_roots(&self) -> &BTreeSet<Root> {
        &self.levi
    }

    /// Roots with `(λ0, α) > 0`.
    pub fn u_roots(&self) -> &BTreeSet<Root> {
        &self.u
    }

    /// Roots with `(λ0, α) < 0`.
    pub fn ubar_roots(&self) -> &BTreeSet<Root> {
        &self.ubar
    }

    pub fn is_borel(&self) -> bool {
        self.levi.is_empty()
    }

    /// `dim_C Z = |Δ(u)|`.
    pub fn flag_dimension(&self) -> usize {
        self.u.len()
    }

    /// The standard-position parabolic with the same node set.
    pub fn canonical(&self) -> Parabolic<'a> {
        parabolic_from_nodes(self.rs, &self.nodes).expect("canonical node sets are in range")
    }
}

pub fn parabolic_from_nodes<'a>(rs: &'a RootSystem, phi: &NodeSet) -> Result<Parabolic<'a>> {
    let rank = rs.rank();
    if let Some(bad) = phi.iter().find(|&j| j == 0 || j > rank) {
        return Err(Error::NodeOutOfRange { node: bad, rank });
    }
    Ok(Parabolic::partition(rs, phi.weight(rank), phi.clone()))
}

pub fn parabolic_from_vector<'a>(rs: &'a RootSystem, v: &Weight) -> Result<Parabolic<'a>> {
    rs.check_weight(v)?;
    let dominant = rs.dominant_conjugate(v);
    let nodes = dominant
        .coords()
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(i, _)| i + 1)
        .collect();
    Ok(Parabolic::partition(rs, v.clone(), nodes))
}
