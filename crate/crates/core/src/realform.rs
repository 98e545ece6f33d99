//! Registry of real forms.
//!
//! Inner forms are encoded by a Vogan painting: a set of painted simple
//! roots. A root `α` is compact iff the sum of its coefficients over the
//! painted nodes is even. Every form that matters for the exception table
//! is inner with one painted node; `sl(n,R)` for `n >= 3` is carried as an
//! outer form without painting so the measurability gate has something to
//! refuse.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::parabolic::{NodeSet, Parabolic};
use crate::rootsys::{Family, Root, RootSystem, SimpleType};

pub const GRAMMAR: &str =
    "so(p,q) (one argument even) | so(n) | sp(n,R) | sp(p,q) | sp(n) | su(p,q) | su(n) \
                           | sl(n,R) | g2-split | g2-compact | compact(<type><rank>)";

/// Which classical or exceptional family a real form belongs to, with its
/// normalised parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RealFormKind {
    Compact,
    /// `so(p,q)` with `p` even and `p >= 2`.
    Orthogonal {
        p: usize,
        q: usize,
    },
    /// `sp(n,R)`.
    SymplecticReal {
        n: usize,
    },
    /// `sp(p,q)` with `1 <= p <= q`.
    SymplecticIndefinite {
        p: usize,
        q: usize,
    },
    /// `su(p,q)` with `1 <= p <= q`.
    Unitary {
        p: usize,
        q: usize,
    },
    /// `sl(n,R)`.
    SpecialLinearReal {
        n: usize,
    },
    G2Split,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RealForm {
    name: String,
    kind: RealFormKind,
    complex_type: SimpleType,
    painted: NodeSet,
    is_compact: bool,
    is_hermitian: bool,
    hermitian_node: Option<usize>,
    has_compact_cartan: bool,
    inner: bool,
}

impl RealForm {
    fn inner_form(
        name: String,
        kind: RealFormKind,
        complex_type: SimpleType,
        painted: NodeSet,
    ) -> Self {
        let is_compact = painted.is_empty();
        RealForm {
            name,
            kind,
            complex_type,
            painted,
            is_compact,
            is_hermitian: false,
            hermitian_node: None,
            has_compact_cartan: true,
            inner: true,
        }
    }

    fn compact(name: String, complex_type: SimpleType) -> Self {
        Self::inner_form(name, RealFormKind::Compact, complex_type, NodeSet::empty())
    }

    fn hermitian(mut self, node: usize) -> Self {
        self.is_hermitian = true;
        self.hermitian_node = Some(node);
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn kind(&self) -> RealFormKind {
        self.kind
    }

    pub fn complex_type(&self) -> SimpleType {
        self.complex_type
    }

    pub fn painted(&self) -> &NodeSet {
        &self.painted
    }

    pub fn is_compact(&self) -> bool {
        self.is_compact
    }

    pub fn is_hermitian(&self) -> bool {
        self.is_hermitian
    }

    pub fn hermitian_node(&self) -> Option<usize> {
        self.hermitian_node
    }

    pub fn has_compact_cartan(&self) -> bool {
        self.has_compact_cartan
    }

    pub fn is_inner(&self) -> bool {
        self.inner
    }

    pub(crate) fn check_type(&self, t: SimpleType) -> Result<()> {
        if self.complex_type == t {
            Ok(())
        } else {
            Err(Error::TypeMismatch {
                real_form: format!("{} ({})", self.name, self.complex_type),
                parabolic: t.to_string(),
            })
        }
    }
}

fn reject(name: &str, reason: impl Into<String>) -> Error {
    Error::UnknownRealForm {
        name: name.to_string(),
        reason: reason.into(),
        grammar: GRAMMAR,
    }
}

fn ty(name: &str, family: Family, rank: usize) -> Result<SimpleType> {
    SimpleType::new(family, rank).map_err(|e| reject(name, e.to_string()))
}

fn parse_args<'s>(s: &'s str, head: &str) -> Option<Vec<&'s str>> {
    let inner = s.strip_prefix(head)?.strip_prefix('(')?.strip_suffix(')')?;
    Some(inner.split(',').map(str::trim).collect())
}

fn num(name: &str, s: &str) -> Result<usize> {
    s.parse()
        .map_err(|_| reject(name, format!("{s:?} is not a non-negative integer")))
}

fn is_real_field(s: &str) -> bool {
    s == "R" || s == "r"
}

/// Looks up a real form by name.
///
/// Names are normalised: `so(3,2)` becomes `so(2,3)`, `su(2,1)` becomes
/// `su(1,2)`, and a zero signature parameter gives the compact name
/// (`sp(0,3)` is `sp(3)`).
pub fn lookup_real_form(name: &str) -> Result<RealForm> {
    let s: String = name.chars().filter(|c| !c.is_whitespace()).collect();
    let s = s.as_str();

    match s {
        "g2-split" => {
            let t = ty(name, Family::G, 2)?;
            return Ok(RealForm::inner_form(
                s.into(),
                RealFormKind::G2Split,
                t,
                NodeSet::new([1]),
            ));
        }
        "g2-compact" => return Ok(RealForm::compact(s.into(), ty(name, Family::G, 2)?)),
        _ => {}
    }

    if let Some(inner) = s.strip_prefix("compact(").and_then(|r| r.strip_suffix(')')) {
        let t: SimpleType = inner
            .parse()
            .map_err(|e: Error| reject(name, e.to_string()))?;
        return Ok(RealForm::compact(format!("compact({t})"), t));
    }

    if let Some(args) = parse_args(s, "so") {
        return match args[..] {
            [n] => compact_so(name, num(name, n)?),
            [a, b] => {
                let (mut p, mut q) = (num(name, a)?, num(name, b)?);
                if p % 2 == 1 && q % 2 == 1 {
                    return Err(reject(name, "one argument of so(p,q) must be even"));
                }
                if p % 2 == 1 || (q % 2 == 0 && q < p) {
                    std::mem::swap(&mut p, &mut q);
                }
                if p == 0 {
                    return compact_so(name, q);
                }
                let half = p / 2;
                let t = if q % 2 == 1 {
                    ty(name, Family::B, (p + q - 1) / 2)?
                } else {
                    ty(name, Family::D, (p + q) / 2)?
                };
                let rf = RealForm::inner_form(
                    format!("so({p},{q})"),
                    RealFormKind::Orthogonal { p, q },
                    t,
                    NodeSet::new([half]),
                );
                Ok(if half == 1 { rf.hermitian(1) } else { rf })
            }
            _ => Err(reject(name, "so takes one or two arguments")),
        };
    }

    if let Some(args) = parse_args(s, "sp") {
        return match args[..] {
            [n, f] if is_real_field(f) => {
                let n = num(name, n)?;
                let t = if n == 1 {
                    ty(name, Family::A, 1)?
                } else {
                    ty(name, Family::C, n)?
                };
                Ok(RealForm::inner_form(
                    format!("sp({n},R)"),
                    RealFormKind::SymplecticReal { n },
                    t,
                    NodeSet::new([n]),
                )
                .hermitian(n))
            }
            [n] => compact_sp(name, num(name, n)?),
            [a, b] => {
                let (p, q) = sorted(num(name, a)?, num(name, b)?);
                if p == 0 {
                    return compact_sp(name, q);
                }
                Ok(RealForm::inner_form(
                    format!("sp({p},{q})"),
                    RealFormKind::SymplecticIndefinite { p, q },
                    ty(name, Family::C, p + q)?,
                    NodeSet::new([p]),
                ))
            }
            _ => Err(reject(name, "sp takes one or two arguments")),
        };
    }

    if let Some(args) = parse_args(s, "su") {
        return match args[..] {
            [n] => compact_su(name, num(name, n)?),
            [a, b] => {
                let (p, q) = sorted(num(name, a)?, num(name, b)?);
                if p == 0 {
                    return compact_su(name, q);
                }
                Ok(RealForm::inner_form(
                    format!("su({p},{q})"),
                    RealFormKind::Unitary { p, q },
                    ty(name, Family::A, p + q - 1)?,
                    NodeSet::new([p]),
                )
                .hermitian(p))
            }
            _ => Err(reject(name, "su takes one or two arguments")),
        };
    }

    if let Some(args) = parse_args(s, "sl") {
        return match args[..] {
            [n, f] if is_real_field(f) => {
                let n = num(name, n)?;
                let t = ty(name, Family::A, n.saturating_sub(1))?;
                let kind = RealFormKind::SpecialLinearReal { n };
                let name = format!("sl({n},R)");
                if n == 2 {
                    // sl(2,R) = su(1,1)
                    Ok(RealForm::inner_form(name, kind, t, NodeSet::new([1])).hermitian(1))
                } else {
                    Ok(RealForm {
                        name,
                        kind,
                        complex_type: t,
                        painted: NodeSet::empty(),
                        is_compact: false,
                        is_hermitian: false,
                        hermitian_node: None,
                        has_compact_cartan: false,
                        inner: false,
                    })
                }
            }
            _ => Err(reject(name, "expected sl(n,R)")),
        };
    }

    Err(reject(name, "unrecognised name"))
}

fn sorted(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

fn compact_so(name: &str, n: usize) -> Result<RealForm> {
    let t = if n % 2 == 1 {
        ty(name, Family::B, n.saturating_sub(1) / 2)?
    } else {
        ty(name, Family::D, n / 2)?
    };
    Ok(RealForm::compact(format!("so({n})"), t))
}

fn compact_sp(name: &str, n: usize) -> Result<RealForm> {
    let t = if n == 1 {
        ty(name, Family::A, 1)?
    } else {
        ty(name, Family::C, n)?
    };
    Ok(RealForm::compact(format!("sp({n})"), t))
}

fn compact_su(name: &str, n: usize) -> Result<RealForm> {
    Ok(RealForm::compact(
        format!("su({n})"),
        ty(name, Family::A, n.saturating_sub(1))?,
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Measurability {
    GuaranteedCompactCartan,
    GuaranteedFullFlag,
    Unknown,
}

/// Sufficient conditions for every open orbit to be measurable: a compact
/// Cartan subgroup, or `Z` the full flag manifold. Otherwise the answer
/// needs the conjugation action on roots, which is not modelled.
pub fn measurability_status(rf: &RealForm, p: &Parabolic<'_>) -> Result<Measurability> {
    rf.check_type(p.root_system().simple_type())?;
    Ok(if rf.has_compact_cartan {
        Measurability::GuaranteedCompactCartan
    } else if p.is_borel() {
        Measurability::GuaranteedFullFlag
    } else {
        Measurability::Unknown
    })
}

/// `Δ(p+)`: roots whose coefficient at the hermitian node is `+1`.
pub fn pplus_roots(rf: &RealForm, rs: &RootSystem) -> Result<BTreeSet<Root>> {
    rf.check_type(rs.simple_type())?;
    let h = rf
        .hermitian_node
        .ok_or_else(|| Error::NotHermitian(rf.name.clone()))?;
    Ok(rs
        .roots()
        .iter()
        .filter(|r| r.coeff(h) == 1)
        .cloned()
        .collect())
}

/// Roots that are compact for the inner form `rf`.
pub fn compact_roots(rf: &RealForm, rs: &RootSystem) -> Result<BTreeSet<Root>> {
    rf.check_type(rs.simple_type())?;
    if !rf.inner {
        return Err(Error::NotInner(rf.name.clone()));
    }
    Ok(rs
        .roots()
        .iter()
        .filter(|r| rf.painted.iter().map(|j| r.coeff(j)).sum::<i64>() % 2 == 0)
        .cloned()
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parabolic::parabolic_from_nodes;
    use crate::rootsys::build_root_system;

    fn roots(v: &[&[i64]]) -> BTreeSet<Root> {
        v.iter().map(|c| Root::new(c.to_vec())).collect()
    }

    #[test]
    fn so_2_3() {
        let rf = lookup_real_form("so(2,3)").unwrap();
        assert_eq!(rf.complex_type().to_string(), "B2");
        assert_eq!(rf.painted(), &NodeSet::new([1]));
        assert_eq!(rf.hermitian_node(), Some(1));
        assert!(rf.has_compact_cartan() && !rf.is_compact());
        assert_eq!(lookup_real_form("so(3, 2)").unwrap(), rf);
    }

    #[test]
    fn sp_2_r() {
        let rf = lookup_real_form("sp(2,R)").unwrap();
        assert_eq!(rf.complex_type().to_string(), "C2");
        assert_eq!(rf.painted(), &NodeSet::new([2]));
        assert_eq!(rf.hermitian_node(), Some(2));
    }

    #[test]
    fn compact_and_outer() {
        let su3 = lookup_real_form("su(3)").unwrap();
        assert!(su3.is_compact() && su3.painted().is_empty());

        let sl3 = lookup_real_form("sl(3,R)").unwrap();
        assert!(!sl3.is_inner() && !sl3.has_compact_cartan() && !sl3.is_hermitian());
    }

    #[test]
    fn normalisation() {
        for (given, want) in [
            ("su(2,1)", "su(1,2)"),
            ("sp(2,1)", "sp(1,2)"),
            ("sp(0,3)", "sp(3)"),
            ("so(0,7)", "so(7)"),
            ("so(7,0)", "so(7)"),
            ("so(6,2)", "so(2,6)"),
            ("so(5,4)", "so(4,5)"),
            ("compact(e8)", "compact(E8)"),
            ("sp(3,r)", "sp(3,R)"),
        ] {
            assert_eq!(lookup_real_form(given).unwrap().name(), want, "{given}");
        }
    }

    #[test]
    fn rejections() {
        for bad in [
            "so(3,5)",
            "so(2,1)",
            "so(2,2)",
            "sp(1)x",
            "su(1)",
            "foo",
            "sl(3)",
            "compact(D3)",
            "so()",
        ] {
            let err = lookup_real_form(bad).unwrap_err();
            assert!(err.to_string().contains("grammar"), "{bad}: {err}");
        }
    }

    #[test]
    fn measurability() {
        let b2 = build_root_system(SimpleType::new(Family::B, 2).unwrap());
        let so23 = lookup_real_form("so(2,3)").unwrap();
        let p = parabolic_from_nodes(&b2, &NodeSet::new([2])).unwrap();
        assert_eq!(
            measurability_status(&so23, &p).unwrap(),
            Measurability::GuaranteedCompactCartan
        );

        let a2 = build_root_system(SimpleType::new(Family::A, 2).unwrap());
        let sl3 = lookup_real_form("sl(3,R)").unwrap();
        let borel = parabolic_from_nodes(&a2, &NodeSet::all(2)).unwrap();
        assert_eq!(
            measurability_status(&sl3, &borel).unwrap(),
            Measurability::GuaranteedFullFlag
        );
        let p1 = parabolic_from_nodes(&a2, &NodeSet::new([1])).unwrap();
        assert_eq!(
            measurability_status(&sl3, &p1).unwrap(),
            Measurability::Unknown
        );

        assert!(matches!(
            measurability_status(&so23, &p1),
            Err(Error::TypeMismatch { .. })
        ));
    }

    #[test]
    fn pplus() {
        let c2 = build_root_system(SimpleType::new(Family::C, 2).unwrap());
        let sp2 = lookup_real_form("sp(2,R)").unwrap();
        assert_eq!(
            pplus_roots(&sp2, &c2).unwrap(),
            roots(&[&[0, 1], &[1, 1], &[2, 1]])
        );

        let b2 = build_root_system(SimpleType::new(Family::B, 2).unwrap());
        let so23 = lookup_real_form("so(2,3)").unwrap();
        assert_eq!(
            pplus_roots(&so23, &b2).unwrap(),
            roots(&[&[1, 0], &[1, 1], &[1, 2]])
        );

        let a3 = build_root_system(SimpleType::new(Family::A, 3).unwrap());
        let su22 = lookup_real_form("su(2,2)").unwrap();
        let pp = pplus_roots(&su22, &a3).unwrap();
        assert_eq!(pp.len(), 4);
        assert!(pp.iter().all(|r| r.coeff(2) == 1));

        let sp12 = lookup_real_form("sp(1,2)").unwrap();
        let c3 = build_root_system(SimpleType::new(Family::C, 3).unwrap());
        assert!(matches!(
            pplus_roots(&sp12, &c3),
            Err(Error::NotHermitian(_))
        ));
    }

    #[test]
    fn compact_root_parity() {
        let a1 = build_root_system(SimpleType::new(Family::A, 1).unwrap());
        let su2 = lookup_real_form("su(2)").unwrap();
        assert_eq!(compact_roots(&su2, &a1).unwrap().len(), 2);
        let sp1r = lookup_real_form("sp(1,R)").unwrap();
        assert!(compact_roots(&sp1r, &a1).unwrap().is_empty());

        let b2 = build_root_system(SimpleType::new(Family::B, 2).unwrap());
        let so23 = lookup_real_form("so(2,3)").unwrap();
        assert_eq!(
            compact_roots(&so23, &b2).unwrap(),
            roots(&[&[0, 1], &[0, -1]])
        );

        let a2 = build_root_system(SimpleType::new(Family::A, 2).unwrap());
        let sl3 = lookup_real_form("sl(3,R)").unwrap();
        assert!(matches!(compact_roots(&sl3, &a2), Err(Error::NotInner(_))));
    }

    #[test]
    fn split_g2_has_six_dimensional_k() {
        let g2 = build_root_system(SimpleType::new(Family::G, 2).unwrap());
        let rf = lookup_real_form("g2-split").unwrap();
        assert_eq!(compact_roots(&rf, &g2).unwrap().len() + 2, 6);
    }
}
