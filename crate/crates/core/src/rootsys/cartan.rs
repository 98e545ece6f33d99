//! Dynkin data for the simple types.
//!
//! Numbering conventions:
//!
//! * `B_n`: `α_n` is the short simple root.
//! * `C_n`: `α_n` is the long simple root.
//! * `D_n`, `E_n`: Bourbaki numbering (`D_n` branches at `n-2`; `E_n` has
//!   `α_2` attached to `α_4`).
//! * `F_4`: `α_1`, `α_2` short and `α_3`, `α_4` long. This is Bourbaki
//!   numbering reversed, so the highest short root is `2α_1+3α_2+2α_3+α_4`.
//! * `G_2`: `α_1` short, `α_2` long.

use super::{Family, SimpleType};

/// Squared-length scales `d_i` (short = 1) and the bonds of the Dynkin
/// diagram as 0-based index pairs.
pub(crate) fn dynkin(t: SimpleType) -> (Vec<i64>, Vec<(usize, usize)>) {
    let n = t.rank();
    let chain = |len: usize| (1..len).map(|i| (i - 1, i)).collect::<Vec<_>>();
    match t.family() {
        Family::A => (vec![1; n], chain(n)),
        Family::B => {
            let mut d = vec![2; n];
            d[n - 1] = 1;
            (d, chain(n))
        }
        Family::C => {
            let mut d = vec![1; n];
            d[n - 1] = 2;
            (d, chain(n))
        }
        Family::D => {
            let mut bonds = chain(n - 1);
            bonds.push((n - 3, n - 1));
            (vec![1; n], bonds)
        }
        Family::E => {
            // 1-3-4-5-6-7-8 with 2 hanging off 4.
            let mut bonds = vec![(0, 2), (1, 3)];
            bonds.extend((2..n - 1).map(|i| (i, i + 1)));
            (vec![1; n], bonds)
        }
        Family::F => (vec![1, 1, 2, 2], chain(4)),
        Family::G => (vec![1, 3], chain(2)),
    }
}

/// Gram matrix `(α_i, α_j)` normalised so short roots have squared length 2.
pub(crate) fn gram(d: &[i64], bonds: &[(usize, usize)]) -> Vec<Vec<i64>> {
    let n = d.len();
    let mut g = vec![vec![0; n]; n];
    for i in 0..n {
        g[i][i] = 2 * d[i];
    }
    for &(i, j) in bonds {
        let v = -d[i].max(d[j]);
        g[i][j] = v;
        g[j][i] = v;
    }
    g
}

/// Cartan matrix with `cartan[i][j] = <α_j, α_i^∨>`.
pub(crate) fn cartan(d: &[i64], gram: &[Vec<i64>]) -> Vec<Vec<i64>> {
    gram.iter()
        .zip(d)
        .map(|(row, &di)| row.iter().map(|&g| g / di).collect())
        .collect()
}
