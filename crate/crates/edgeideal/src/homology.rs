//! Exact reduced simplicial homology ranks.
//!
//! Boundary matrices are built per dimension on sorted face lists with the
//! ascending-vertex orientation. Ranks are computed exactly: fraction-free
//! Gaussian elimination over the integers (Bareiss) for characteristic 0,
//! modular elimination for GF(p).

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::vset::VertexSet;

const FACE_BUDGET: usize = 1 << 20;

/// Coefficient field: the rationals (characteristic 0) or GF(p).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FieldChar {
    Zero,
    Prime(u32),
}

impl FieldChar {
    pub fn new(c: u32) -> Result<FieldChar> {
        match c {
            0 => Ok(FieldChar::Zero),
            p if is_prime(p) => Ok(FieldChar::Prime(p)),
            c => Err(Error::InvalidInput(format!(
                "field characteristic must be 0 or a prime < 2^31, got {c}"
            ))),
        }
    }

    pub fn as_u32(self) -> u32 {
        match self {
            FieldChar::Zero => 0,
            FieldChar::Prime(p) => p,
        }
    }
}

impl std::fmt::Display for FieldChar {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.as_u32())
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 || p >= 1 << 31 {
        return false;
    }
    let mut d = 2u64;
    let p = p as u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// A small dense integer matrix; entries here are always 0 or ±1 before
/// elimination starts.
struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<i8>,
}

impl Matrix {
    fn zero(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            entries: vec![0; rows * cols],
        }
    }

    fn set(&mut self, r: usize, c: usize, v: i8) {
        self.entries[r * self.cols + c] = v;
    }

    fn rank(&self, field: FieldChar) -> usize {
        match field {
            FieldChar::Zero => self.rank_bareiss(),
            FieldChar::Prime(p) => self.rank_mod_p(p as u64),
        }
    }

    /// Fraction-free elimination; every division is exact.
    fn rank_bareiss(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        let mut m: Vec<Vec<BigInt>> = (0..self.rows)
            .map(|r| {
                (0..self.cols)
                    .map(|c| BigInt::from(self.entries[r * self.cols + c]))
                    .collect()
            })
            .collect();
        let mut prev = BigInt::one();
        let mut rank = 0;
        let mut row = 0;
        for col in 0..self.cols {
            let Some(pivot) = (row..self.rows).find(|&r| !m[r][col].is_zero()) else {
                continue;
            };
            m.swap(row, pivot);
            for r in row + 1..self.rows {
                for c in col + 1..self.cols {
                    let num = &m[row][col] * &m[r][c] - &m[r][col] * &m[row][c];
                    m[r][c] = num / &prev;
                }
                m[r][col] = BigInt::zero();
            }
            prev = m[row][col].clone();
            rank += 1;
            row += 1;
            if row == self.rows {
                break;
            }
        }
        rank
    }

    fn rank_mod_p(&self, p: u64) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        let mut m: Vec<Vec<u64>> = (0..self.rows)
            .map(|r| {
                (0..self.cols)
                    .map(|c| {
                        let v = self.entries[r * self.cols + c];
                        ((v as i64).rem_euclid(p as i64)) as u64
                    })
                    .collect()
            })
            .collect();
        let mut rank = 0;
        let mut row = 0;
        for col in 0..self.cols {
            let Some(pivot) = (row..self.rows).find(|&r| m[r][col] != 0) else {
                continue;
            };
            m.swap(row, pivot);
            let inv = mod_inverse(m[row][col], p);
            for r in row + 1..self.rows {
                if m[r][col] == 0 {
                    continue;
                }
                let factor = mulmod(m[r][col], inv, p);
                for c in col..self.cols {
                    let sub = mulmod(factor, m[row][c], p);
                    m[r][c] = (m[r][c] + p - sub) % p;
                }
            }
            rank += 1;
            row += 1;
            if row == self.rows {
                break;
            }
        }
        rank
    }
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // Fermat: a^(p-2) mod p
    let mut base = a % p;
    let mut exp = p - 2;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base, p);
        }
        base = mulmod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Boundary map ranks for each dimension d = 0..=dim, where `∂_d` maps
/// d-chains to (d-1)-chains (the empty face spans dimension -1).
fn boundary_ranks(faces: &[Vec<VertexSet>], field: FieldChar) -> Vec<usize> {
    let mut ranks = Vec::with_capacity(faces.len());
    for d in 0..faces.len() {
        let cols = faces[d].len();
        if d == 0 {
            // ∂_0 sends every vertex to the empty face
            ranks.push(if cols > 0 { 1 } else { 0 });
            continue;
        }
        let rows = faces[d - 1].len();
        let index: HashMap<u64, usize> = faces[d - 1]
            .iter()
            .enumerate()
            .map(|(i, f)| (f.bits(), i))
            .collect();
        let mut m = Matrix::zero(rows, cols);
        for (c, &face) in faces[d].iter().enumerate() {
            for (pos, v) in face.iter().enumerate() {
                let sub = face.without(v);
                let r = index[&sub.bits()];
                m.set(r, c, if pos % 2 == 0 { 1 } else { -1 });
            }
        }
        ranks.push(m.rank(field));
    }
    ranks
}

/// Ranks of the reduced homology groups, `dim -> rank`, for
/// d = -1 ..= dim(c). Zero ranks are included; the void complex yields an
/// empty map.
pub fn reduced_homology_ranks(
    c: &SimplicialComplex,
    field: FieldChar,
) -> Result<BTreeMap<i64, usize>> {
    if c.is_void() {
        return Ok(BTreeMap::new());
    }
    if c.face_count() > FACE_BUDGET {
        return Err(Error::Resource(format!(
            "complex has {} faces, budget is {FACE_BUDGET}",
            c.face_count()
        )));
    }
    let faces = c.faces_by_dim();
    let ranks = boundary_ranks(&faces, field);
    let mut out = BTreeMap::new();
    // rank-nullity per dimension: f_d = rank(∂_d) + nullity(∂_d)
    let f = |d: i64| -> usize {
        if d == -1 {
            1
        } else {
            faces.get(d as usize).map_or(0, |b| b.len())
        }
    };
    let r = |d: i64| -> usize {
        if d < 0 {
            0
        } else {
            ranks.get(d as usize).copied().unwrap_or(0)
        }
    };
    let top = faces.len() as i64 - 1;
    for d in -1..=top {
        let nullity = f(d) - r(d);
        out.insert(d, nullity - r(d + 1));
    }
    Ok(out)
}
