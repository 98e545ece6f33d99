//! Root chains from the dominant short root.
//!
//! A chain `β_1, ..., β_m` of positive roots such that every partial
//! difference `γ_s - Σ_{j≤k} β_j` is a root and the final one is a long root
//! in `u` shows that `Hom_q(E_{γ_s}, g/q) = 0`. The search below is a
//! breadth-first search over the whole (finite) root set, so a `None` answer
//! proves that no chain exists. It does not prove that the Hom space is
//! nonzero.

use std::collections::{HashMap, VecDeque};

use serde::Serialize;

use crate::error::Result;
use crate::parabolic::{parabolic_from_nodes, NodeSet, Parabolic};
use crate::rootsys::{dominant_root, LengthClass, Root, RootSystem};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChainCertificate {
    pub betas: Vec<Root>,
    pub endpoint: Root,
}

impl ChainCertificate {
    /// `γ_s` minus the first `k` betas.
    pub fn partial(&self, start: &Root, k: usize) -> Root {
        self.betas[..k]
            .iter()
            .fold(start.clone(), |acc, b| acc.sub(b))
    }
}

/// Shortest chain certificate for `p`, searched on its canonical
/// (standard-position) form. Among shortest chains the one whose beta
/// sequence is lexicographically first in root-list order is returned.
pub fn find_killing_chain(p: &Parabolic<'_>) -> Result<Option<ChainCertificate>> {
    let rs = p.root_system();
    let gamma = dominant_root(rs, LengthClass::Short)?;
    let canonical = parabolic_from_nodes(rs, p.nodes())?;
    let is_target = |r: &Root| rs.is_long(r) && canonical.u_roots().contains(r);

    // parent[root] = (previous root, index of beta in positives)
    let mut parent: HashMap<Root, (Root, usize)> = HashMap::new();
    let mut queue = VecDeque::from([gamma.clone()]);
    parent.insert(gamma.clone(), (gamma.clone(), usize::MAX));
    while let Some(nu) = queue.pop_front() {
        if is_target(&nu) {
            let mut betas = Vec::new();
            let mut cur = nu.clone();
            while cur != gamma {
                let (prev, bi) = parent[&cur].clone();
                betas.push(rs.positives()[bi].clone());
                cur = prev;
            }
            betas.reverse();
            return Ok(Some(ChainCertificate {
                betas,
                endpoint: nu,
            }));
        }
        for (bi, beta) in rs.positives().iter().enumerate() {
            let next = nu.sub(beta);
            if rs.contains(&next) && !parent.contains_key(&next) {
                debug_assert!(gamma.sub(&next).coeffs().iter().all(|&c| c >= 0));
                parent.insert(next.clone(), (nu.clone(), bi));
                queue.push_back(next);
            }
        }
    }
    Ok(None)
}

/// Checks a certificate against `p` without searching: positive betas,
/// every partial difference a root, endpoint long and in `u`.
pub fn verify_certificate(p: &Parabolic<'_>, cert: &ChainCertificate) -> bool {
    let rs = p.root_system();
    let Ok(gamma) = dominant_root(rs, LengthClass::Short) else {
        return false;
    };
    let Ok(canonical) = parabolic_from_nodes(rs, p.nodes()) else {
        return false;
    };
    if cert.betas.is_empty() || !cert.betas.iter().all(|b| b.is_positive() && rs.contains(b)) {
        return false;
    }
    let partials_ok = (1..=cert.betas.len()).all(|k| rs.contains(&cert.partial(&gamma, k)));
    partials_ok
        && cert.partial(&gamma, cert.betas.len()) == cert.endpoint
        && rs.is_long(&cert.endpoint)
        && canonical.u_roots().contains(&cert.endpoint)
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepEntry {
    pub nodes: NodeSet,
    pub certificate: Option<ChainCertificate>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepReport {
    pub entries: Vec<SweepEntry>,
    pub exceptions: Vec<NodeSet>,
    pub note: Option<String>,
}

/// Runs [`find_killing_chain`] on every nonempty node set and collects the
/// node sets without a chain. Simply-laced systems have no short root, so
/// the report is empty with a note instead.
pub fn sweep_exceptions(rs: &RootSystem) -> SweepReport {
    if !rs.has_two_lengths() {
        return SweepReport {
            entries: Vec::new(),
            exceptions: Vec::new(),
            note: Some(format!(
                "{} has a single root length; the simply-laced rule (thm_2_9) applies",
                rs.simple_type()
            )),
        };
    }
    let entries: Vec<SweepEntry> = NodeSet::nonempty_subsets(rs.rank())
        .into_iter()
        .map(|nodes| {
            let p = parabolic_from_nodes(rs, &nodes).expect("subsets are in range");
            let certificate = find_killing_chain(&p).expect("two root lengths");
            SweepEntry { nodes, certificate }
        })
        .collect();
    let exceptions = entries
        .iter()
        .filter(|e| e.certificate.is_none())
        .map(|e| e.nodes.clone())
        .collect();
    SweepReport {
        entries,
        exceptions,
        note: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::rootsys::{build_root_system, Family, SimpleType};

    fn rs(f: Family, n: usize) -> RootSystem {
        build_root_system(SimpleType::new(f, n).unwrap())
    }

    fn chain(s: &RootSystem, nodes: &[usize]) -> Option<ChainCertificate> {
        let p = parabolic_from_nodes(s, &NodeSet::new(nodes.iter().copied())).unwrap();
        let c = find_killing_chain(&p).unwrap();
        if let Some(c) = &c {
            assert!(verify_certificate(&p, c));
        }
        c
    }

    #[test]
    fn b3_first_node() {
        let c = chain(&rs(Family::B, 3), &[1]).unwrap();
        assert_eq!(c.betas, vec![Root::new(vec![0, 0, 1])]);
        assert_eq!(c.endpoint, Root::new(vec![1, 1, 0]));
    }

    #[test]
    fn c3_first_node_has_no_chain() {
        assert!(chain(&rs(Family::C, 3), &[1]).is_none());
    }

    #[test]
    fn g2_second_node() {
        let c = chain(&rs(Family::G, 2), &[2]).unwrap();
        assert_eq!(c.betas, vec![Root::new(vec![1, 0]), Root::new(vec![1, 0])]);
        assert_eq!(c.endpoint, Root::new(vec![0, 1]));
    }

    #[test]
    fn f4_every_node_set() {
        let f4 = rs(Family::F, 4);
        for nodes in NodeSet::nonempty_subsets(4) {
            let p = parabolic_from_nodes(&f4, &nodes).unwrap();
            let c = find_killing_chain(&p).unwrap().unwrap();
            assert_eq!(c.betas, vec![Root::new(vec![0, 1, 0, 0])], "{nodes}");
        }
    }

    #[test]
    fn simply_laced_rejected() {
        let a3 = rs(Family::A, 3);
        let p = parabolic_from_nodes(&a3, &NodeSet::new([1])).unwrap();
        assert!(matches!(
            find_killing_chain(&p),
            Err(Error::SingleRootLength(_))
        ));
        let report = sweep_exceptions(&a3);
        assert!(report.exceptions.is_empty() && report.note.is_some());
    }

    #[test]
    fn sweeps() {
        let b4 = sweep_exceptions(&rs(Family::B, 4));
        assert_eq!(b4.exceptions, vec![NodeSet::new([4])]);
        assert_eq!(b4.entries.len(), 15);
        assert_eq!(
            sweep_exceptions(&rs(Family::C, 4)).exceptions,
            vec![NodeSet::new([1])]
        );
        assert!(sweep_exceptions(&rs(Family::F, 4)).exceptions.is_empty());
        assert_eq!(
            sweep_exceptions(&rs(Family::G, 2)).exceptions,
            vec![NodeSet::new([1])]
        );
    }

    #[test]
    fn vector_input_uses_canonical_nodes() {
        let b3 = rs(Family::B, 3);
        let v = crate::rootsys::Weight::new(vec![-1, 0, 0]);
        let p = crate::parabolic::parabolic_from_vector(&b3, &v).unwrap();
        assert_eq!(p.nodes(), &NodeSet::new([1]));
        assert_eq!(find_killing_chain(&p).unwrap(), chain(&b3, &[1]));
    }

    #[test]
    fn tampered_certificate_fails() {
        let b3 = rs(Family::B, 3);
        let p = parabolic_from_nodes(&b3, &NodeSet::new([1])).unwrap();
        let mut c = find_killing_chain(&p).unwrap().unwrap();
        c.endpoint = Root::new(vec![0, 1, 1]);
        assert!(!verify_certificate(&p, &c));
        let q = parabolic_from_nodes(&b3, &NodeSet::new([3])).unwrap();
        let good = find_killing_chain(&p).unwrap().unwrap();
        assert!(!verify_certificate(&q, &good));
    }
}
