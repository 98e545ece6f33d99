//! Simple root systems in exact integer coordinates.
//!
//! Roots are stored in the simple-root basis and weights in the
//! fundamental-weight basis. The invariant bilinear form is normalised so
//! that short roots have squared length 2; with `d_i = (α_i, α_i) / 2` we
//! have `(λ_i, α_j) = δ_ij d_j`, so every pairing used by the classifier is
//! an integer.

mod cartan;
mod character;

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use character::{weight_multiplicity, weyl_dim, Character};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::A,
        Family::B,
        Family::C,
        Family::D,
        Family::E,
        Family::F,
        Family::G,
    ];

    fn admissible(self) -> &'static str {
        match self {
            Family::A => "n >= 1",
            Family::B | Family::C => "n >= 2",
            Family::D => "n >= 4",
            Family::E => "n in {6, 7, 8}",
            Family::F => "n = 4",
            Family::G => "n = 2",
        }
    }

    fn admits(self, n: usize) -> bool {
        match self {
            Family::A => n >= 1,
            Family::B | Family::C => n >= 2,
            Family::D => n >= 4,
            Family::E => (6..=8).contains(&n),
            Family::F => n == 4,
            Family::G => n == 2,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(Family::A),
            "B" | "b" => Ok(Family::B),
            "C" | "c" => Ok(Family::C),
            "D" | "d" => Ok(Family::D),
            "E" | "e" => Ok(Family::E),
            "F" | "f" => Ok(Family::F),
            "G" | "g" => Ok(Family::G),
            other => Err(Error::UnknownFamily(other.to_string())),
        }
    }
}

/// A Cartan–Killing type such as `B3` or `E8`.
///
/// Low-rank coincidences (`B2` vs `C2`, `A3` vs `D3`) are kept apart; `D3`
/// itself is not admissible.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SimpleType {
    family: Family,
    rank: usize,
}

impl SimpleType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        if family.admits(rank) {
            Ok(SimpleType { family, rank })
        } else {
            Err(Error::InadmissibleRank {
                family,
                rank,
                admissible: family.admissible(),
            })
        }
    }

    pub fn family(self) -> Family {
        self.family
    }

    pub fn rank(self) -> usize {
        self.rank
    }

    /// Every admissible type of rank at most `max_rank`, ordered by family
    /// then rank.
    pub fn all_up_to_rank(max_rank: usize) -> Vec<SimpleType> {
        Family::ALL
            .iter()
            .flat_map(|&f| (1..=max_rank).filter_map(move |n| SimpleType::new(f, n).ok()))
            .collect()
    }

    /// `|Δ|` from the classical formulas.
    pub fn classical_root_count(self) -> usize {
        let n = self.rank;
        match (self.family, n) {
            (Family::A, _) => n * (n + 1),
            (Family::B | Family::C, _) => 2 * n * n,
            (Family::D, _) => 2 * n * (n - 1),
            (Family::E, 6) => 72,
            (Family::E, 7) => 126,
            (Family::E, _) => 240,
            (Family::F, _) => 48,
            (Family::G, _) => 12,
        }
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl FromStr for SimpleType {
    type Err = Error;

    /// Parses `"B3"`, `"e8"` and the like.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let family: Family = s.get(..1).unwrap_or_default().parse()?;
        let rank = s[1..]
            .parse::<usize>()
            .map_err(|_| Error::UnknownFamily(s.to_string()))?;
        SimpleType::new(family, rank)
    }
}

/// A root, as coefficients in the simple-root basis.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Root {
    coeffs: Vec<i64>,
}

impl Root {
    pub fn new(coeffs: Vec<i64>) -> Self {
        Root { coeffs }
    }

    pub fn simple(rank: usize, i: usize) -> Self {
        let mut coeffs = vec![0; rank];
        coeffs[i] = 1;
        Root { coeffs }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn height(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.coeffs.iter().all(|&c| c >= 0) && self.coeffs.iter().any(|&c| c > 0)
    }

    /// Coefficient of `α_node`, with `node` 1-based.
    pub fn coeff(&self, node: usize) -> i64 {
        self.coeffs[node - 1]
    }

    pub fn neg(&self) -> Root {
        Root::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn sub(&self, other: &Root) -> Root {
        Root::new(
            self.coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    pub fn add(&self, other: &Root) -> Root {
        Root::new(
            self.coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 {
                "-"
            } else if first {
                ""
            } else {
                "+"
            };
            let mag = c.abs();
            if mag == 1 {
                write!(f, "{sign}a{}", i + 1)?;
            } else {
                write!(f, "{sign}{mag}a{}", i + 1)?;
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// An integral weight, as coordinates in the fundamental-weight basis.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight {
    coords: Vec<i64>,
}

impl Weight {
    pub fn new(coords: Vec<i64>) -> Self {
        Weight { coords }
    }

    pub fn zero(rank: usize) -> Self {
        Weight::new(vec![0; rank])
    }

    /// `ρ`, the half sum of positive roots.
    pub fn rho(rank: usize) -> Self {
        Weight::new(vec![1; rank])
    }

    /// `λ_node`, with `node` 1-based.
    pub fn fundamental(rank: usize, node: usize) -> Self {
        let mut coords = vec![0; rank];
        coords[node - 1] = 1;
        Weight::new(coords)
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn is_dominant(&self) -> bool {
        self.coords.iter().all(|&c| c >= 0)
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    pub fn scale(&self, k: i64) -> Weight {
        Weight::new(self.coords.iter().map(|a| a * k).collect())
    }

    pub fn neg(&self) -> Weight {
        self.scale(-1)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LengthClass {
    Long,
    Short,
}

/// A complete simple root system.
///
/// `roots` lists the positive roots by increasing height (ties broken by
/// descending lexicographic order of coefficients, so `α_1` precedes
/// `α_2`), followed by their negatives in the same order.
#[derive(Debug, Clone)]
pub struct RootSystem {
    simple_type: SimpleType,
    cartan: Vec<Vec<i64>>,
    gram: Vec<Vec<i64>>,
    root_lengths: Vec<i64>,
    roots: Vec<Root>,
    n_positive: usize,
    index: HashMap<Root, usize>,
}

/// Builds the root system of `t` by height-ascending closure from the
/// simple roots, using root strings: for a positive root `r` and simple
/// `α_i`, `r + α_i` is a root iff `p - <r, α_i^∨> > 0` where `p` is the
/// length of the downward `α_i`-string through `r`.
pub fn build_root_system(t: SimpleType) -> RootSystem {
    let n = t.rank();
    let (d, bonds) = cartan::dynkin(t);
    let gram = cartan::gram(&d, &bonds);
    let cartan = cartan::cartan(&d, &gram);

    let mut positives: Vec<Root> = (0..n).map(|i| Root::simple(n, i)).collect();
    let mut known: HashSet<Root> = positives.iter().cloned().collect();
    let mut layer = positives.clone();
    while !layer.is_empty() {
        let mut next = Vec::new();
        for r in &layer {
            for (i, row) in cartan.iter().enumerate() {
                if r.height() == 1 && r.coeffs[i] == 1 {
                    continue;
                }
                let pairing: i64 = row.iter().zip(&r.coeffs).map(|(a, c)| a * c).sum();
                let mut p = 0;
                let mut down = r.clone();
                loop {
                    down.coeffs[i] -= 1;
                    if known.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                if p - pairing > 0 {
                    let mut up = r.clone();
                    up.coeffs[i] += 1;
                    if known.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        next.sort_by(|a, b| b.cmp(a));
        positives.extend(next.iter().cloned());
        layer = next;
    }

    let n_positive = positives.len();
    let mut roots = positives;
    let negatives: Vec<Root> = roots.iter().map(Root::neg).collect();
    roots.extend(negatives);
    let index = roots
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, r)| (r, i))
        .collect();

    RootSystem {
        simple_type: t,
        cartan,
        gram,
        root_lengths: d,
        roots,
        n_positive,
        index,
    }
}

impl RootSystem {
    pub fn simple_type(&self) -> SimpleType {
        self.simple_type
    }

    pub fn rank(&self) -> usize {
        self.simple_type.rank()
    }

    /// `cartan()[i][j] = <α_j, α_i^∨>`.
    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Squared-length scales `d_i` of the simple roots (short = 1).
    pub fn root_lengths(&self) -> &[i64] {
        &self.root_lengths
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn positives(&self) -> &[Root] {
        &self.roots[..self.n_positive]
    }

    pub fn negatives(&self) -> &[Root] {
        &self.roots[self.n_positive..]
    }

    pub fn contains(&self, r: &Root) -> bool {
        self.index.contains_key(r)
    }

    /// Position of `r` in [`RootSystem::roots`].
    pub fn index_of(&self, r: &Root) -> Option<usize> {
        self.index.get(r).copied()
    }

    pub fn dimension(&self) -> usize {
        self.roots.len() + self.rank()
    }

    pub fn has_two_lengths(&self) -> bool {
        self.root_lengths.iter().any(|&d| d != self.root_lengths[0])
    }

    fn check_len(&self, len: usize) -> Result<()> {
        if len == self.rank() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.rank(),
                actual: len,
            })
        }
    }

    pub(crate) fn check_weight(&self, w: &Weight) -> Result<()> {
        self.check_len(w.coords.len())
    }

    pub(crate) fn check_root(&self, r: &Root) -> Result<()> {
        self.check_len(r.coeffs.len())?;
        if self.contains(r) {
            Ok(())
        } else {
            Err(Error::NotARoot(r.coeffs.clone()))
        }
    }

    /// `(x, y)` for two root-lattice vectors.
    pub fn inner(&self, x: &Root, y: &Root) -> i64 {
        let n = self.rank();
        let mut s = 0;
        for i in 0..n {
            if x.coeffs[i] == 0 {
                continue;
            }
            for j in 0..n {
                s += x.coeffs[i] * self.gram[i][j] * y.coeffs[j];
            }
        }
        s
    }

    /// `(r, r) / 2`, which is 1 for short roots.
    pub fn length_scale(&self, r: &Root) -> i64 {
        self.inner(r, r) / 2
    }

    pub fn length_class(&self, r: &Root) -> LengthClass {
        let max = *self.root_lengths.iter().max().unwrap();
        if self.length_scale(r) == max {
            LengthClass::Long
        } else {
            LengthClass::Short
        }
    }

    pub fn is_long(&self, r: &Root) -> bool {
        self.length_class(r) == LengthClass::Long
    }

    /// `(w, x) = Σ w_i d_i x_i` for a weight and a root-lattice vector.
    pub fn form(&self, w: &Weight, x: &Root) -> i64 {
        w.coords
            .iter()
            .zip(&self.root_lengths)
            .zip(&x.coeffs)
            .map(|((a, d), c)| a * d * c)
            .sum()
    }

    /// Fundamental-weight coordinates of a root-lattice vector.
    pub fn root_to_weight(&self, r: &Root) -> Weight {
        Weight::new(
            self.cartan
                .iter()
                .map(|row| row.iter().zip(&r.coeffs).map(|(a, c)| a * c).sum())
                .collect(),
        )
    }

    /// `<r, α_i^∨>` for the 0-based simple index `i`.
    fn simple_pairing(&self, r: &Root, i: usize) -> i64 {
        self.cartan[i]
            .iter()
            .zip(&r.coeffs)
            .map(|(a, c)| a * c)
            .sum()
    }

    /// Simple reflection `s_i` (0-based) applied to a root-lattice vector.
    pub fn reflect_root(&self, r: &Root, i: usize) -> Root {
        let mut out = r.clone();
        out.coeffs[i] -= self.simple_pairing(r, i);
        out
    }

    /// Simple reflection `s_i` (0-based) applied to a weight.
    pub fn reflect_weight(&self, w: &Weight, i: usize) -> Weight {
        let k = w.coords[i];
        Weight::new(
            w.coords
                .iter()
                .enumerate()
                .map(|(j, &c)| c - k * self.cartan[j][i])
                .collect(),
        )
    }

    /// The dominant Weyl conjugate of `w`, reached by reflecting at the
    /// first negative coordinate until none remain.
    pub fn dominant_conjugate(&self, w: &Weight) -> Weight {
        let mut w = w.clone();
        while let Some(i) = w.coords.iter().position(|&c| c < 0) {
            w = self.reflect_weight(&w, i);
        }
        w
    }
}

/// Returns `(<w, r^∨>, (w, r))`.
pub fn pair(rs: &RootSystem, w: &Weight, r: &Root) -> Result<(i64, i64)> {
    rs.check_weight(w)?;
    rs.check_root(r)?;
    let form = rs.form(w, r);
    let scale = rs.length_scale(r);
    debug_assert_eq!(form % scale, 0);
    Ok((form / scale, form))
}

/// The unique dominant root of the given length class.
pub fn dominant_root(rs: &RootSystem, cls: LengthClass) -> Result<Root> {
    if cls == LengthClass::Short && !rs.has_two_lengths() {
        return Err(Error::SingleRootLength(rs.simple_type().to_string()));
    }
    let n = rs.rank();
    rs.positives()
        .iter()
        .find(|r| rs.length_class(r) == cls && (0..n).all(|i| rs.simple_pairing(r, i) >= 0))
        .cloned()
        .ok_or_else(|| unreachable!("every length class has a dominant root"))
}

/// Closure of `{r}` under the simple reflections.
pub fn weyl_orbit(rs: &RootSystem, r: &Root) -> Result<BTreeSet<Root>> {
    rs.check_root(r)?;
    let mut seen = BTreeSet::from([r.clone()]);
    let mut queue = VecDeque::from([r.clone()]);
    while let Some(x) = queue.pop_front() {
        for i in 0..rs.rank() {
            let y = rs.reflect_root(&x, i);
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    Ok(seen)
}
