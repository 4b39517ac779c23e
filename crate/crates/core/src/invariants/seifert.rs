//! Seifert matrices of braid closures and the invariants read from them.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::braid::{vogel_braid, BraidWord};
use crate::error::{KnotError, Result};
use crate::pd::PDDiagram;
use crate::poly::LaurentPoly;

/// Orientation of the signature: `+1` would report the positive `T(2,7)` as
/// `-6`; with `-1` it is `+6`.
pub const SIGNATURE_CONVENTION: i64 = -1;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeifertMatrix {
    pub entries: Vec<Vec<i64>>,
}

impl SeifertMatrix {
    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn symmetrized(&self) -> Vec<Vec<i64>> {
        let n = self.size();
        (0..n).map(|i| (0..n).map(|j| self.entries[i][j] + self.entries[j][i]).collect()).collect()
    }

    /// `det(V - t V^T)` at an integer `t`.
    fn alexander_at(&self, t: i64) -> BigInt {
        let n = self.size();
        let m: Vec<Vec<BigInt>> = (0..n)
            .map(|i| (0..n).map(|j| BigInt::from(self.entries[i][j] - t * self.entries[j][i])).collect())
            .collect();
        det_bareiss(m)
    }
}

/// One generator per pair of consecutive occurrences of the same
/// generator index: the loop through the two bands.
struct Loop {
    index: u32,
    first: usize,
    second: usize,
}

/// Seifert matrix of the canonical surface of a braid closure.
pub fn braid_seifert_matrix(w: &BraidWord) -> SeifertMatrix {
    let letters = w.letters();
    let sign = |p: usize| letters[p].signum() as i64;
    let mut loops = Vec::new();
    for i in 1..w.strand_count() as u32 {
        let occ: Vec<usize> = (0..letters.len()).filter(|&p| letters[p].unsigned_abs() == i).collect();
        loops.extend(occ.windows(2).map(|p| Loop { index: i, first: p[0], second: p[1] }));
    }
    let n = loops.len();
    let mut v = vec![vec![0i64; n]; n];
    for (x, a) in loops.iter().enumerate() {
        v[x][x] = -(sign(a.first) + sign(a.second)) / 2;
        for (y, b) in loops.iter().enumerate() {
            if b.index == a.index && a.second == b.first {
                let e = sign(a.second);
                v[x][y] = (e + 1) / 2;
                v[y][x] = (e - 1) / 2;
            } else if b.index == a.index + 1 {
                if a.first < b.first && b.first < a.second && a.second < b.second {
                    v[x][y] = -1;
                } else if b.first < a.first && a.first < b.second && b.second < a.second {
                    v[x][y] = 1;
                }
            }
        }
    }
    SeifertMatrix { entries: v }
}

/// Seifert matrix of the surface built on the braided form of `d`.
pub fn seifert_matrix(d: &PDDiagram) -> Result<SeifertMatrix> {
    if !d.is_knot() {
        return Err(KnotError::Unsupported("Seifert matrix of a multi-component diagram".into()));
    }
    if d.crossings.is_empty() {
        return Ok(SeifertMatrix { entries: Vec::new() });
    }
    Ok(braid_seifert_matrix(&vogel_braid(d)?))
}

/// Fraction-free Gaussian elimination.
pub(crate) fn det_bareiss(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !m[r][k].is_zero()) else {
            return BigInt::zero();
        };
        if p != k {
            m.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    if n == 0 {
        return BigInt::one();
    }
    sign * &m[n - 1][n - 1]
}

/// Polynomial through `(x, y)` points with integer coefficients.
fn interpolate(points: &[(i64, BigInt)]) -> Result<Vec<i64>> {
    let n = points.len();
    let mut coeffs = vec![BigRational::zero(); n];
    for (i, (xi, yi)) in points.iter().enumerate() {
        // basis polynomial prod_{j != i} (x - xj) / (xi - xj)
        let mut basis = vec![BigRational::one()];
        let mut denom = BigRational::one();
        for (j, (xj, _)) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            let mut next = vec![BigRational::zero(); basis.len() + 1];
            for (k, c) in basis.iter().enumerate() {
                next[k + 1] += c;
                next[k] -= c * BigRational::from_integer(BigInt::from(*xj));
            }
            basis = next;
            denom *= BigRational::from_integer(BigInt::from(xi - xj));
        }
        let scale = BigRational::from_integer(yi.clone()) / denom;
        for (k, c) in basis.iter().enumerate() {
            coeffs[k] += c * &scale;
        }
    }
    coeffs
        .iter()
        .map(|c| {
            if !c.is_integer() {
                return Err(KnotError::Validity("non-integral Alexander coefficient".into()));
            }
            c.to_integer().to_i64().ok_or(KnotError::Overflow("Alexander coefficient"))
        })
        .collect()
}

/// `det(V - t V^T)` normalized to be symmetric with value 1 at `t = 1`.
pub fn alexander_from_seifert(v: &SeifertMatrix) -> Result<LaurentPoly> {
    let n = v.size();
    if n == 0 {
        return Ok(LaurentPoly::one());
    }
    let points: Vec<(i64, BigInt)> = (0..=n as i64).map(|t| (t, v.alexander_at(t))).collect();
    let raw = LaurentPoly::from_dense(0, interpolate(&points)?);
    normalize_alexander(&raw)
}

pub(crate) fn normalize_alexander(raw: &LaurentPoly) -> Result<LaurentPoly> {
    let (lo, hi) = match (raw.min_exp(), raw.max_exp()) {
        (Some(lo), Some(hi)) => (lo, hi),
        _ => return Err(KnotError::Validity("Alexander polynomial vanishes".into())),
    };
    if (lo + hi) % 2 != 0 {
        return Err(KnotError::Validity("Alexander polynomial has odd span".into()));
    }
    let centered = raw.shift(-(lo + hi) / 2);
    let at_one = centered.eval_unit(1);
    match at_one {
        1 => Ok(centered),
        -1 => Ok(centered.scale(-1)),
        _ => Err(KnotError::Validity(format!("Alexander polynomial has value {at_one} at 1"))),
    }
}

/// Signature of a symmetric integer matrix by congruence diagonalization.
pub fn symmetric_signature(m: &[Vec<i64>]) -> i64 {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> =
        m.iter().map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect()).collect();
    let mut sig = 0;
    let mut k = 0;
    while k < n {
        if a[k][k].is_zero() {
            if let Some(p) = (k + 1..n).find(|&r| !a[r][r].is_zero()) {
                a.swap(k, p);
                for row in a.iter_mut() {
                    row.swap(k, p);
                }
            } else if let Some(p) = (k + 1..n).find(|&r| !a[k][r].is_zero()) {
                // row/column k += row/column p makes the pivot 2 a[k][p]
                for j in 0..n {
                    let v = a[p][j].clone();
                    a[k][j] += v;
                }
                for i in 0..n {
                    let v = a[i][p].clone();
                    a[i][k] += v;
                }
            } else {
                k += 1;
                continue;
            }
        }
        let pivot = a[k][k].clone();
        sig += if pivot.is_positive() { 1 } else { -1 };
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let f = &a[i][k] / &pivot;
            for j in k..n {
                let v = &f * &a[k][j];
                a[i][j] -= v;
            }
            for r in a.iter_mut() {
                let v = &f * &r[k];
                r[i] -= v;
            }
        }
        k += 1;
    }
    sig
}

pub fn alexander(d: &PDDiagram) -> Result<LaurentPoly> {
    alexander_from_seifert(&seifert_matrix(d)?)
}

pub fn signature(d: &PDDiagram) -> Result<i64> {
    let v = seifert_matrix(d)?;
    Ok(SIGNATURE_CONVENTION * symmetric_signature(&v.symmetrized()))
}

pub fn determinant(d: &PDDiagram) -> Result<u64> {
    Ok(alexander(d)?.eval_unit(-1).unsigned_abs())
}

/// `ceil(|signature| / 2)`, a lower bound on the unknotting number.
pub fn murasugi_bound(d: &PDDiagram) -> Result<u64> {
    Ok(signature(d)?.unsigned_abs().div_ceil(2))
}
