//! Representation-theoretic bookkeeping on open orbits: the vanishing range
//! for line-bundle cohomology, the degree `s = dim_C(K0·z0)`, and
//! dimension-level checks of the enlargements `g ⊂ g¹`.

use std::fmt;

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::parabolic::Parabolic;
use crate::realform::{compact_roots, pplus_roots, RealForm};
use crate::rootsys::{
    build_root_system, dominant_root, weyl_dim, Family, LengthClass, SimpleType, Weight,
};

/// `(χ + ρ, β) < 0` for every `β ∈ Δ(u)`.
pub fn vanishing_condition(p: &Parabolic<'_>, chi: &Weight) -> Result<bool> {
    let rs = p.root_system();
    let shifted = chi.add(&Weight::rho(rs.rank()));
    rs.check_weight(chi)?;
    Ok(p.u_roots().iter().all(|b| rs.form(&shifted, b) < 0))
}

/// `s = |Δ(u) ∩ Δ(k)|`, the complex dimension of `K0·z0`.
pub fn s_dimension(rf: &RealForm, p: &Parabolic<'_>) -> Result<usize> {
    let compact = compact_roots(rf, p.root_system())?;
    Ok(p.u_roots().intersection(&compact).count())
}

/// Complex dimension of the hermitian symmetric space `G0/K0`.
pub fn hermitian_dim(rf: &RealForm) -> Result<usize> {
    let rs = build_root_system(rf.complex_type());
    Ok(pplus_roots(rf, &rs)?
        .iter()
        .filter(|r| r.is_positive())
        .count())
}

/// A simple Lie algebra with two root lengths and the larger algebra
/// `g¹ ≅ g ⊕ E_{γ_s}` containing it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EnlargementPair {
    /// `B_n ⊂ D_{n+1}`.
    BD(usize),
    /// `C_n ⊂ A_{2n-1}`.
    CA(usize),
    G2B3,
    F4E6,
}

impl EnlargementPair {
    pub fn new(base: SimpleType) -> Result<Self> {
        let n = base.rank();
        match base.family() {
            Family::B => Ok(EnlargementPair::BD(n)),
            Family::C => Ok(EnlargementPair::CA(n)),
            Family::G => Ok(EnlargementPair::G2B3),
            Family::F => Ok(EnlargementPair::F4E6),
            _ => Err(Error::NotInRegistry(base.to_string())),
        }
    }

    /// Every pair with base rank at most `max_rank`.
    pub fn all(max_rank: usize) -> Vec<Self> {
        let mut out: Vec<_> = (2..=max_rank).map(EnlargementPair::BD).collect();
        out.extend((2..=max_rank).map(EnlargementPair::CA));
        out.push(EnlargementPair::G2B3);
        if max_rank >= 4 {
            out.push(EnlargementPair::F4E6);
        }
        out
    }

    pub fn base(self) -> SimpleType {
        let (f, n) = match self {
            EnlargementPair::BD(n) => (Family::B, n),
            EnlargementPair::CA(n) => (Family::C, n),
            EnlargementPair::G2B3 => (Family::G, 2),
            EnlargementPair::F4E6 => (Family::F, 4),
        };
        SimpleType::new(f, n).expect("registry types are admissible")
    }

    /// The larger algebra. `D_3` is realised as `A_3`.
    pub fn enlarged(self) -> SimpleType {
        let (f, n) = match self {
            EnlargementPair::BD(2) => (Family::A, 3),
            EnlargementPair::BD(n) => (Family::D, n + 1),
            EnlargementPair::CA(n) => (Family::A, 2 * n - 1),
            EnlargementPair::G2B3 => (Family::B, 3),
            EnlargementPair::F4E6 => (Family::E, 6),
        };
        SimpleType::new(f, n).expect("registry types are admissible")
    }

    /// Matching fundamental weights `(base node, enlarged node)` whose
    /// multiples restrict irreducibly, if the pair has such a row.
    pub fn hw_map(self) -> Option<(usize, usize)> {
        match self {
            // Half-spin node of D_3 is an end node of A_3.
            EnlargementPair::BD(2) => Some((2, 3)),
            EnlargementPair::BD(n) => Some((n, n + 1)),
            EnlargementPair::CA(_) => Some((1, 1)),
            EnlargementPair::G2B3 => Some((1, 1)),
            EnlargementPair::F4E6 => None,
        }
    }

    fn validate(self) -> Result<Self> {
        let ok = match self {
            EnlargementPair::BD(n) | EnlargementPair::CA(n) => n >= 2,
            _ => true,
        };
        if ok {
            Ok(self)
        } else {
            Err(Error::NotInRegistry(self.to_string()))
        }
    }
}

impl fmt::Display for EnlargementPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EnlargementPair::BD(n) if *n < 2 => write!(f, "B{n}->D{}", n + 1),
            EnlargementPair::CA(n) if *n < 2 => write!(f, "C{n}->A{}", (2 * n).saturating_sub(1)),
            _ => write!(f, "{}->{}", self.base(), self.enlarged()),
        }
    }
}

// Dimensions can exceed u64, so they go out as decimal strings.
fn as_decimal<S: serde::Serializer>(n: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(n)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EnlargementReport {
    pub pair: String,
    pub dim_base: usize,
    pub dim_enlarged: usize,
    #[serde(serialize_with = "as_decimal")]
    pub dim_e_gamma_s: BigInt,
    pub ok: bool,
}

/// Checks `dim g¹ = dim g + dim E_{γ_s}`.
pub fn verify_enlargement(pair: EnlargementPair) -> Result<EnlargementReport> {
    let pair = pair.validate()?;
    let base = build_root_system(pair.base());
    let enlarged = build_root_system(pair.enlarged());
    let gamma = dominant_root(&base, LengthClass::Short)?;
    let dim_e = weyl_dim(&base, &base.root_to_weight(&gamma))?;
    let ok = BigInt::from(enlarged.dimension()) == BigInt::from(base.dimension()) + &dim_e;
    Ok(EnlargementReport {
        pair: pair.to_string(),
        dim_base: base.dimension(),
        dim_enlarged: enlarged.dimension(),
        dim_e_gamma_s: dim_e,
        ok,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BranchingReport {
    pub pair: String,
    pub a: u32,
    #[serde(serialize_with = "as_decimal")]
    pub dim_base_rep: BigInt,
    #[serde(serialize_with = "as_decimal")]
    pub dim_enlarged_rep: BigInt,
    pub equal: bool,
}

/// Compares `dim V(a·λ)` on both sides of the pair; equality is necessary
/// for the enlarged representation to stay irreducible on restriction.
pub fn verify_branching(pair: EnlargementPair, a: u32) -> Result<BranchingReport> {
    let pair = pair.validate()?;
    let (i, j) = pair
        .hw_map()
        .ok_or_else(|| Error::NoBranchingRow(pair.to_string()))?;
    let base = build_root_system(pair.base());
    let enlarged = build_root_system(pair.enlarged());
    let hw_base = Weight::fundamental(base.rank(), i).scale(a as i64);
    let hw_enl = Weight::fundamental(enlarged.rank(), j).scale(a as i64);
    let dim_base_rep = weyl_dim(&base, &hw_base)?;
    let dim_enlarged_rep = weyl_dim(&enlarged, &hw_enl)?;
    Ok(BranchingReport {
        pair: pair.to_string(),
        a,
        equal: dim_base_rep == dim_enlarged_rep,
        dim_base_rep,
        dim_enlarged_rep,
    })
}
