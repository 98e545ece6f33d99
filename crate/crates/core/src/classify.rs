//! The decision procedure for `Hol(D)`.
//!
//! Rules are tried in a fixed order: trivial flag manifold, compact form,
//! measurability, hermitian fibration, single root length, root chain, and
//! finally the table of exceptional enlargements. Each verdict records the
//! rule that produced it.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::homcheck::{find_killing_chain, ChainCertificate};
use crate::parabolic::{NodeSet, Parabolic};
use crate::realform::{measurability_status, pplus_roots, Measurability, RealForm, RealFormKind};
use crate::rootsys::{Family, Root};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum HolKind {
    InfiniteDimensional,
    Finite,
    Undetermined,
    Trivial,
}

/// The rule behind a verdict. Serialised names are part of the report
/// format.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Source {
    /// `ū` properly contains `p+` or `p-`: holomorphically trivial fibration
    /// over the hermitian symmetric space.
    #[serde(rename = "prop_2_3")]
    HermitianFibration,
    /// `D` is the hermitian symmetric space itself.
    #[serde(rename = "prop_2_2_hermitian")]
    HermitianSymmetric,
    #[serde(rename = "thm_2_9")]
    SimplyLaced,
    #[serde(rename = "thm_3_2_chain")]
    RootChain,
    #[serde(rename = "table_1_1")]
    ExceptionTable,
    #[serde(rename = "prop_3_11")]
    ProductRule,
    #[serde(rename = "measurability_gate")]
    MeasurabilityGate,
}

impl Source {
    pub fn id(self) -> &'static str {
        match self {
            Source::HermitianFibration => "prop_2_3",
            Source::HermitianSymmetric => "prop_2_2_hermitian",
            Source::SimplyLaced => "thm_2_9",
            Source::RootChain => "thm_3_2_chain",
            Source::ExceptionTable => "table_1_1",
            Source::ProductRule => "prop_3_11",
            Source::MeasurabilityGate => "measurability_gate",
        }
    }
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl fmt::Display for HolKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            HolKind::InfiniteDimensional => "infinite_dimensional",
            HolKind::Finite => "finite",
            HolKind::Undetermined => "undetermined",
            HolKind::Trivial => "trivial",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HolResult {
    pub kind: HolKind,
    pub group: Option<String>,
    pub source: Option<Source>,
    pub certificate: Option<ChainCertificate>,
    pub notes: Vec<String>,
}

impl HolResult {
    fn finite(group: impl Into<String>, source: Source) -> Self {
        HolResult {
            kind: HolKind::Finite,
            group: Some(group.into()),
            source: Some(source),
            certificate: None,
            notes: Vec::new(),
        }
    }

    fn of_kind(kind: HolKind, source: Option<Source>) -> Self {
        HolResult {
            kind,
            group: None,
            source,
            certificate: None,
            notes: Vec::new(),
        }
    }

    fn note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    fn with_certificate(mut self, cert: ChainCertificate) -> Self {
        self.certificate = Some(cert);
        self
    }

    pub fn is_determinate(&self) -> bool {
        self.kind != HolKind::Undetermined
    }
}

/// Node-set shape of a registry key.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum NodePattern {
    First,
    Last,
}

impl NodePattern {
    pub fn nodes(self, rank: usize) -> NodeSet {
        match self {
            NodePattern::First => NodeSet::new([1]),
            NodePattern::Last => NodeSet::new([rank]),
        }
    }
}

/// Real-form shape of a registry key.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FormPattern {
    /// `so(2p, 2q+1)` with `p >= 1`.
    OddOrthogonal,
    SymplecticReal,
    /// `sp(p,q)` with `pq != 0`.
    SymplecticIndefinite,
    G2Split,
    Compact,
}

impl FormPattern {
    fn matches(self, kind: RealFormKind) -> bool {
        match (self, kind) {
            (FormPattern::OddOrthogonal, RealFormKind::Orthogonal { p, q }) => p >= 2 && q % 2 == 1,
            (FormPattern::SymplecticReal, RealFormKind::SymplecticReal { .. }) => true,
            (FormPattern::SymplecticIndefinite, RealFormKind::SymplecticIndefinite { p, q }) => {
                p * q != 0
            }
            (FormPattern::G2Split, RealFormKind::G2Split) => true,
            (FormPattern::Compact, RealFormKind::Compact) => true,
            _ => false,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct RegistryEntry {
    pub family: Family,
    pub nodes: NodePattern,
    pub form: FormPattern,
    /// Descriptor template with the parameters of the real form.
    pub template: &'static str,
}

impl RegistryEntry {
    /// Instantiates the template for a matching real form of rank `n`.
    fn render(&self, kind: RealFormKind, n: usize) -> String {
        match (self.family, kind) {
            (Family::B, RealFormKind::Orthogonal { p, q }) => format!("SO_e({p},{})/Z2", q + 1),
            (Family::B, RealFormKind::Compact) => format!("SO({},C)/Z2", 2 * n + 2),
            (Family::C, RealFormKind::SymplecticReal { n }) => format!("SU({n},{n})/Z_{}", 2 * n),
            (Family::C, RealFormKind::SymplecticIndefinite { p, q }) => {
                format!("SU({},{})/Z_{}", 2 * p, 2 * q, 2 * p + 2 * q)
            }
            (Family::C, RealFormKind::Compact) => format!("SL({},C)/Z_{}", 2 * n, 2 * n),
            (Family::G, RealFormKind::G2Split) => "SO_e(3,4)".to_string(),
            (Family::G, RealFormKind::Compact) => "SO(7,C)".to_string(),
            _ => unreachable!("registry entry does not match {kind:?}"),
        }
    }
}

/// Flag manifolds and real forms where the automorphism group is an
/// enlargement of `G0` (or of `G` in the compact case).
#[derive(Debug, Clone, Serialize)]
pub struct ExceptionRegistry {
    entries: Vec<RegistryEntry>,
}

impl Default for ExceptionRegistry {
    fn default() -> Self {
        Self::standard()
    }
}

impl ExceptionRegistry {
    pub fn standard() -> Self {
        use FormPattern::*;
        use NodePattern::*;
        let e = |family, nodes, form, template| RegistryEntry {
            family,
            nodes,
            form,
            template,
        };
        ExceptionRegistry {
            entries: vec![
                e(Family::B, Last, OddOrthogonal, "SO_e(2p,2q+2)/Z2"),
                e(Family::B, Last, Compact, "SO(2n+2,C)/Z2"),
                e(Family::C, First, SymplecticReal, "SU(n,n)/Z_2n"),
                e(
                    Family::C,
                    First,
                    SymplecticIndefinite,
                    "SU(2p,2q)/Z_(2p+2q)",
                ),
                e(Family::C, First, Compact, "SL(2n,C)/Z_2n"),
                e(Family::G, First, G2Split, "SO_e(3,4)"),
                e(Family::G, First, Compact, "SO(7,C)"),
            ],
        }
    }

    pub fn entries(&self) -> &[RegistryEntry] {
        &self.entries
    }

    pub fn lookup(&self, rf: &RealForm, nodes: &NodeSet) -> Option<String> {
        let t = rf.complex_type();
        self.entries
            .iter()
            .find(|e| {
                e.family == t.family()
                    && &e.nodes.nodes(t.rank()) == nodes
                    && e.form.matches(rf.kind())
            })
            .map(|e| e.render(rf.kind(), t.rank()))
    }

    /// Node sets that appear as keys for `family` at the given rank.
    pub fn node_patterns(&self, family: Family, rank: usize) -> BTreeSet<NodeSet> {
        self.entries
            .iter()
            .filter(|e| e.family == family)
            .map(|e| e.nodes.nodes(rank))
            .collect()
    }

    /// Checks that each compact-form descriptor is the complexification of
    /// the matching noncompact descriptors for every real form of the given
    /// rank (`SO_e(a,b) -> SO(a+b,C)`, `SU(a,b) -> SL(a+b,C)`,
    /// `SO_e(3,4) -> SO(7,C)`).
    pub fn self_check(&self, rank: usize) -> std::result::Result<(), String> {
        for family in [Family::B, Family::C, Family::G] {
            let n = if family == Family::G { 2 } else { rank };
            let compact = self
                .entries
                .iter()
                .find(|e| e.family == family && e.form == FormPattern::Compact)
                .ok_or(format!("no compact row for {family}"))?
                .render(RealFormKind::Compact, n);
            let kinds: Vec<RealFormKind> = match family {
                Family::B => (1..=n)
                    .map(|p| RealFormKind::Orthogonal {
                        p: 2 * p,
                        q: 2 * (n - p) + 1,
                    })
                    .collect(),
                Family::C => std::iter::once(RealFormKind::SymplecticReal { n })
                    .chain((1..n).map(|p| RealFormKind::SymplecticIndefinite { p, q: n - p }))
                    .collect(),
                _ => vec![RealFormKind::G2Split],
            };
            for kind in kinds {
                let entry = self
                    .entries
                    .iter()
                    .find(|e| e.family == family && e.form.matches(kind))
                    .ok_or(format!("no row for {kind:?}"))?;
                let noncompact = entry.render(kind, n);
                let complexified =
                    complexify(&noncompact).ok_or(format!("cannot parse {noncompact}"))?;
                if complexified != strip_quotient(&compact) {
                    return Err(format!(
                        "{noncompact} complexifies to {complexified}, expected {compact}"
                    ));
                }
            }
        }
        Ok(())
    }
}

fn strip_quotient(s: &str) -> &str {
    s.split('/').next().unwrap_or(s)
}

fn complexify(descriptor: &str) -> Option<String> {
    let head = strip_quotient(descriptor);
    let (group, args) = head.split_once('(')?;
    let (a, b) = args.strip_suffix(')')?.split_once(',')?;
    let total = a.parse::<usize>().ok()? + b.parse::<usize>().ok()?;
    let complex = match group {
        "SO_e" => "SO",
        "SU" => "SL",
        _ => return None,
    };
    Some(format!("{complex}({total},C)"))
}

const HERMITIAN_SYMMETRIC_NOTE: &str = "D is the hermitian symmetric space G0/K0; only finite-dimensionality is \
                                        guaranteed, G0 (adjoint) is reported from bounded-domain automorphism theory";
const FIBRATION_NOTE: &str = "D ≅ B × K₀·z₀";

fn complex_group(rf: &RealForm) -> String {
    format!("G = {}(C) (mod center)", rf.complex_type())
}

fn strict_subset(a: &BTreeSet<Root>, b: &BTreeSet<Root>) -> bool {
    a.len() < b.len() && a.is_subset(b)
}

/// Classifies `Hol(D)` for the open orbit of `rf` determined by `p`.
pub fn classify_hol(rf: &RealForm, p: &Parabolic<'_>) -> Result<HolResult> {
    let rs = p.root_system();
    let measurability = measurability_status(rf, p)?;
    let nodes = p.nodes();
    let registry = ExceptionRegistry::standard();

    if nodes.is_empty() {
        return Ok(HolResult::of_kind(HolKind::Trivial, None).note("Q = G, so Z is a point"));
    }

    if rf.is_compact() {
        if let Some(group) = registry.lookup(rf, nodes) {
            return Ok(HolResult::finite(group, Source::ExceptionTable).note("D = Z"));
        }
        if !rs.has_two_lengths() {
            return Ok(HolResult::finite(complex_group(rf), Source::SimplyLaced).note("D = Z"));
        }
        return Ok(match find_killing_chain(p)? {
            Some(cert) => HolResult::finite(complex_group(rf), Source::RootChain)
                .with_certificate(cert)
                .note("D = Z"),
            None => HolResult::of_kind(HolKind::Undetermined, Some(Source::ExceptionTable)).note(
                format!(
                    "no root chain for {} {} and no registry entry",
                    rf.complex_type(),
                    nodes
                ),
            ),
        });
    }

    if measurability == Measurability::Unknown {
        return Ok(
            HolResult::of_kind(HolKind::Undetermined, Some(Source::MeasurabilityGate)).note(
                format!(
                    "{} has no compact Cartan subgroup and Z is not the full flag manifold; \
                 measurability of the open orbit is not decided",
                    rf.name()
                ),
            ),
        );
    }

    if rf.is_hermitian() {
        let pplus = pplus_roots(rf, rs)?;
        if &pplus == p.u_roots() || &pplus == p.ubar_roots() {
            return Ok(
                HolResult::finite("G₀ (adjoint)", Source::HermitianSymmetric)
                    .note(HERMITIAN_SYMMETRIC_NOTE),
            );
        }
        if strict_subset(&pplus, p.u_roots()) || strict_subset(&pplus, p.ubar_roots()) {
            return Ok(HolResult::of_kind(
                HolKind::InfiniteDimensional,
                Some(Source::HermitianFibration),
            )
            .note(FIBRATION_NOTE));
        }
    }

    let mut result = if !rs.has_two_lengths() {
        HolResult::finite(rf.name(), Source::SimplyLaced)
    } else if let Some(cert) = find_killing_chain(p)? {
        HolResult::finite(rf.name(), Source::RootChain).with_certificate(cert)
    } else if let Some(group) = registry.lookup(rf, nodes) {
        HolResult::finite(group, Source::ExceptionTable)
    } else {
        HolResult::of_kind(HolKind::Undetermined, Some(Source::ExceptionTable)).note(format!(
            "no root chain for {} {} and {} is not in the exception registry",
            rf.complex_type(),
            nodes,
            rf.name()
        ))
    };
    if measurability == Measurability::GuaranteedFullFlag {
        result
            .notes
            .push("Z is the full flag manifold, so every open orbit is measurable".into());
    }
    Ok(result)
}

const PRODUCT_HERMITIAN_NOTE: &str = "Prop 3.11 hypothesis excludes hermitian symmetric factors";

/// Classifies a product of simple factors.
pub fn classify_product(factors: &[(RealForm, Parabolic<'_>)]) -> Result<HolResult> {
    match factors {
        [] => Err(Error::EmptyProduct),
        [(rf, p)] => classify_hol(rf, p),
        _ => {
            let results = factors
                .iter()
                .map(|(rf, p)| classify_hol(rf, p))
                .collect::<Result<Vec<_>>>()?;
            let factor_notes: Vec<String> = results
                .iter()
                .enumerate()
                .map(|(i, r)| {
                    let source = r.source.map(|s| s.id()).unwrap_or("none");
                    match &r.group {
                        Some(g) => format!("factor {}: {} {g} ({source})", i + 1, r.kind),
                        None => format!("factor {}: {} ({source})", i + 1, r.kind),
                    }
                })
                .collect();
            let mut out = if results
                .iter()
                .any(|r| r.kind == HolKind::InfiniteDimensional)
            {
                HolResult::of_kind(
                    HolKind::InfiniteDimensional,
                    Some(Source::HermitianFibration),
                )
            } else if results
                .iter()
                .any(|r| r.source == Some(Source::HermitianSymmetric))
            {
                HolResult::of_kind(HolKind::Undetermined, Some(Source::ProductRule))
                    .note(PRODUCT_HERMITIAN_NOTE)
            } else if results.iter().any(|r| r.kind == HolKind::Undetermined) {
                HolResult::of_kind(HolKind::Undetermined, Some(Source::ProductRule))
            } else {
                let groups: Vec<&str> = results.iter().filter_map(|r| r.group.as_deref()).collect();
                if groups.is_empty() {
                    HolResult::of_kind(HolKind::Trivial, None)
                } else {
                    HolResult::finite(groups.join(" × "), Source::ProductRule)
                }
            };
            out.notes.extend(factor_notes);
            Ok(out)
        }
    }
}
