//! Dimensions and weight multiplicities of irreducible representations.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};

use super::{Root, RootSystem, Weight};
use crate::error::{Error, Result};

/// Weyl dimension formula `Π (hw+ρ, α) / Π (ρ, α)` over positive roots, in
/// arbitrary-size integers.
pub fn weyl_dim(rs: &RootSystem, hw: &Weight) -> Result<BigInt> {
    rs.check_weight(hw)?;
    if !hw.is_dominant() {
        return Err(Error::NotDominant(hw.coords().to_vec()));
    }
    let rho = Weight::rho(rs.rank());
    let shifted = hw.add(&rho);
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for a in rs.positives() {
        num *= rs.form(&shifted, a);
        den *= rs.form(&rho, a);
    }
    debug_assert!((&num % &den) == BigInt::from(0));
    Ok(num / den)
}

/// The full weight diagram of an irreducible representation, computed with
/// Freudenthal's recursion.
///
/// Weights are generated level by level below the highest weight: every
/// weight other than the highest one has a simple root taking it up to
/// another weight, so expanding only from nonzero multiplicities reaches the
/// whole support.
#[derive(Debug, Clone)]
pub struct Character {
    highest: Weight,
    mults: BTreeMap<Weight, u64>,
}

impl Character {
    pub fn new(rs: &RootSystem, hw: &Weight) -> Result<Self> {
        rs.check_weight(hw)?;
        if !hw.is_dominant() {
            return Err(Error::NotDominant(hw.coords().to_vec()));
        }
        let n = rs.rank();
        let rho = Weight::rho(n);
        let top = hw.add(&rho);
        let pos: Vec<(&Root, Weight, i64)> = rs
            .positives()
            .iter()
            .map(|a| (a, rs.root_to_weight(a), rs.inner(a, a)))
            .collect();
        let simple_wts: Vec<Weight> = (0..n)
            .map(|i| rs.root_to_weight(&Root::simple(n, i)))
            .collect();

        let mut mults: BTreeMap<Weight, u64> = BTreeMap::from([(hw.clone(), 1)]);
        // Each entry carries its depth `hw - mu` in root coordinates.
        let mut layer: BTreeMap<Weight, Root> =
            BTreeMap::from([(hw.clone(), Root::new(vec![0; n]))]);
        while !layer.is_empty() {
            let mut candidates: BTreeMap<Weight, Root> = BTreeMap::new();
            for (mu, depth) in &layer {
                for (i, w) in simple_wts.iter().enumerate() {
                    let mut d = depth.clone();
                    d.coeffs[i] += 1;
                    candidates.entry(mu.sub(w)).or_insert(d);
                }
            }
            let mut next = BTreeMap::new();
            for (mu, depth) in candidates {
                // (hw+ρ)^2 - (mu+ρ)^2 = 2(hw+ρ, β) - (β, β) with β = hw - mu.
                let denom = 2 * rs.form(&top, &depth) - rs.inner(&depth, &depth);
                let mut rhs: i128 = 0;
                for (alpha, alpha_wt, alpha_sq) in &pos {
                    let base = rs.form(&mu, alpha) as i128;
                    let mut up = mu.clone();
                    let mut d = depth.clone();
                    let mut k = 1i128;
                    loop {
                        for (dj, aj) in d.coeffs.iter_mut().zip(alpha.coeffs()) {
                            *dj -= aj;
                        }
                        if d.coeffs.iter().any(|&c| c < 0) {
                            break;
                        }
                        up = up.add(alpha_wt);
                        if let Some(&m) = mults.get(&up) {
                            rhs += (base + k * *alpha_sq as i128) * m as i128;
                        }
                        k += 1;
                    }
                }
                rhs *= 2;
                if denom <= 0 {
                    debug_assert_eq!(rhs, 0);
                    continue;
                }
                let denom = denom as i128;
                debug_assert_eq!(rhs % denom, 0, "Freudenthal quotient not integral");
                let m = rhs / denom;
                if m > 0 {
                    mults.insert(mu.clone(), m.to_u64().expect("multiplicity overflow"));
                    next.insert(mu, depth);
                }
            }
            layer = next;
        }
        Ok(Character {
            highest: hw.clone(),
            mults,
        })
    }

    pub fn highest_weight(&self) -> &Weight {
        &self.highest
    }

    pub fn multiplicity(&self, mu: &Weight) -> u64 {
        self.mults.get(mu).copied().unwrap_or(0)
    }

    /// Weights with nonzero multiplicity, in ascending order.
    pub fn weights(&self) -> impl Iterator<Item = (&Weight, u64)> {
        self.mults.iter().map(|(w, &m)| (w, m))
    }

    pub fn dimension(&self) -> u64 {
        self.mults.values().sum()
    }
}

/// Multiplicity of `mu` in the irreducible representation of highest weight
/// `hw`; zero when `mu` is not a weight.
pub fn weight_multiplicity(rs: &RootSystem, hw: &Weight, mu: &Weight) -> Result<u64> {
    rs.check_weight(mu)?;
    Ok(Character::new(rs, hw)?.multiplicity(mu))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::{build_root_system, Family, SimpleType};

    fn rs(f: Family, n: usize) -> RootSystem {
        build_root_system(SimpleType::new(f, n).unwrap())
    }

    #[test]
    fn rank_one_dimensions() {
        let a1 = rs(Family::A, 1);
        for a in 0..10 {
            assert_eq!(
                weyl_dim(&a1, &Weight::new(vec![a])).unwrap(),
                BigInt::from(a + 1)
            );
        }
    }

    #[test]
    fn small_dimensions() {
        let g2 = rs(Family::G, 2);
        assert_eq!(
            weyl_dim(&g2, &Weight::fundamental(2, 1)).unwrap(),
            BigInt::from(7)
        );
        let b3 = rs(Family::B, 3);
        assert_eq!(
            weyl_dim(&b3, &Weight::fundamental(3, 3)).unwrap(),
            BigInt::from(8)
        );
        let e8 = rs(Family::E, 8);
        assert_eq!(
            weyl_dim(&e8, &Weight::fundamental(8, 8)).unwrap(),
            BigInt::from(248)
        );
        let big = weyl_dim(&e8, &Weight::new(vec![5; 8])).unwrap();
        assert!(big > BigInt::from(u64::MAX));
    }

    #[test]
    fn non_dominant_rejected() {
        let a2 = rs(Family::A, 2);
        assert!(matches!(
            weyl_dim(&a2, &Weight::new(vec![1, -1])),
            Err(Error::NotDominant(_))
        ));
        assert!(Character::new(&a2, &Weight::new(vec![-1, 0])).is_err());
    }

    #[test]
    fn multiplicities() {
        let a2 = rs(Family::A, 2);
        let adj = Weight::rho(2);
        assert_eq!(weight_multiplicity(&a2, &adj, &adj).unwrap(), 1);
        assert_eq!(weight_multiplicity(&a2, &adj, &Weight::zero(2)).unwrap(), 2);
        assert_eq!(
            weight_multiplicity(&a2, &adj, &Weight::new(vec![3, 3])).unwrap(),
            0
        );

        let b2 = rs(Family::B, 2);
        let l1 = Weight::fundamental(2, 1);
        assert_eq!(weight_multiplicity(&b2, &l1, &Weight::zero(2)).unwrap(), 1);
        assert_eq!(Character::new(&b2, &l1).unwrap().dimension(), 5);
    }

    #[test]
    fn adjoint_zero_weight_is_rank() {
        for t in SimpleType::all_up_to_rank(4) {
            let s = build_root_system(t);
            let theta =
                crate::rootsys::dominant_root(&s, crate::rootsys::LengthClass::Long).unwrap();
            let ch = Character::new(&s, &s.root_to_weight(&theta)).unwrap();
            assert_eq!(
                ch.multiplicity(&Weight::zero(t.rank())),
                t.rank() as u64,
                "{t}"
            );
            assert_eq!(ch.dimension() as usize, s.dimension(), "{t}");
        }
    }
}
