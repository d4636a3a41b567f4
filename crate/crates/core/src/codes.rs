//! Linear codes over GF(2^e).

use std::collections::HashSet;
use std::fmt;

use thiserror::Error;

use crate::gf::{FieldElement, FieldSpec, GfError};

/// Maximum number of codewords any enumeration may produce.
pub const ENUMERATION_CAP: u64 = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodeError {
    #[error(transparent)]
    Field(#[from] GfError),
    #[error("length mismatch: got {got}, expected {expected}")]
    LengthMismatch { got: usize, expected: usize },
    #[error("enumeration of {count} codewords exceeds the cap of {ENUMERATION_CAP}")]
    EnumerationCap { count: u64 },
    #[error("zero code has no minimum distance")]
    ZeroCode,
    #[error("generator matrix has rank {rank} but {rows} rows")]
    RankDeficient { rank: usize, rows: usize },
    #[error("m must be at least 2, got {0}")]
    InvalidM(usize),
    #[error("message ordering must list each of the {expected} messages exactly once")]
    BadOrdering { expected: u64 },
}

/// Parameters `[n, k, d]` of a linear code.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CodeParams {
    pub n: usize,
    pub k: usize,
    pub d_min: usize,
}

impl fmt::Display for CodeParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{},{}]", self.n, self.k, self.d_min)
    }
}

/// A `k`-dimensional subspace of GF(q)^n given by a full-rank generator matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearCode {
    field: FieldSpec,
    n: usize,
    rows: Vec<Vec<u32>>,
}

/// Reduced row echelon form in place; returns the pivot columns.
fn rref(field: &FieldSpec, m: &mut [Vec<u32>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == m.len() {
            break;
        }
        let Some(p) = (r..m.len()).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, p);
        let inv = field.inv_raw(m[r][c]).expect("pivot is nonzero");
        for x in m[r].iter_mut() {
            *x = field.mul_raw(*x, inv);
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && row[c] != 0 {
                let f = row[c];
                for (x, &p) in row.iter_mut().zip(&pivot_row).take(ncols) {
                    *x = field.add_raw(*x, field.mul_raw(f, p));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Hamming weight: number of nonzero coordinates.
pub fn weight(word: &[u32]) -> usize {
    word.iter().filter(|&&x| x != 0).count()
}

impl LinearCode {
    /// Builds a code from generator rows; the rows must be linearly independent.
    pub fn new(field: FieldSpec, n: usize, gen: Vec<Vec<FieldElement>>) -> Result<Self, CodeError> {
        let mut rows = Vec::with_capacity(gen.len());
        for row in &gen {
            if row.len() != n {
                return Err(CodeError::LengthMismatch {
                    got: row.len(),
                    expected: n,
                });
            }
            if row.iter().any(|x| x.spec() != field) {
                return Err(GfError::FieldMismatch.into());
            }
            rows.push(row.iter().map(|x| x.value()).collect());
        }
        Self::from_raw(field, n, rows)
    }

    /// Builds a code from packed generator entries.
    pub fn from_raw(field: FieldSpec, n: usize, rows: Vec<Vec<u32>>) -> Result<Self, CodeError> {
        for row in &rows {
            if row.len() != n {
                return Err(CodeError::LengthMismatch {
                    got: row.len(),
                    expected: n,
                });
            }
            if let Some(&bad) = row.iter().find(|&&x| x >= field.order()) {
                return Err(GfError::OutOfRange(bad, field.order()).into());
            }
        }
        let mut scratch = rows.clone();
        let rank = rref(&field, &mut scratch, n).len();
        if rank != rows.len() {
            return Err(CodeError::RankDeficient {
                rank,
                rows: rows.len(),
            });
        }
        Ok(Self { field, n, rows })
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn dimension(&self) -> usize {
        self.rows.len()
    }

    /// `q^k`, saturating at `u64::MAX`.
    pub fn codeword_count(&self) -> u64 {
        (self.field.order() as u64)
            .checked_pow(self.rows.len() as u32)
            .unwrap_or(u64::MAX)
    }

    /// True when enumerating every codeword would exceed [`ENUMERATION_CAP`].
    pub fn exceeds_enumeration_cap(&self) -> bool {
        self.codeword_count() > ENUMERATION_CAP
    }

    pub fn generator(&self) -> Vec<Vec<FieldElement>> {
        self.rows
            .iter()
            .map(|r| r.iter().map(|&v| self.field.element(v).unwrap()).collect())
            .collect()
    }

    pub fn generator_raw(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn encode(&self, message: &[FieldElement]) -> Result<Vec<FieldElement>, CodeError> {
        if message.iter().any(|x| x.spec() != self.field) {
            return Err(GfError::FieldMismatch.into());
        }
        let raw: Vec<u32> = message.iter().map(|x| x.value()).collect();
        let word = self.encode_raw(&raw)?;
        Ok(word
            .into_iter()
            .map(|v| self.field.element(v).unwrap())
            .collect())
    }

    pub fn encode_raw(&self, message: &[u32]) -> Result<Vec<u32>, CodeError> {
        if message.len() != self.rows.len() {
            return Err(CodeError::LengthMismatch {
                got: message.len(),
                expected: self.rows.len(),
            });
        }
        let mut word = vec![0u32; self.n];
        for (&coef, row) in message.iter().zip(&self.rows) {
            if coef == 0 {
                continue;
            }
            for (w, &g) in word.iter_mut().zip(row) {
                *w ^= self.field.mul_raw(coef, g);
            }
        }
        Ok(word)
    }

    fn check_cap(&self) -> Result<u64, CodeError> {
        let count = self.codeword_count();
        if count > ENUMERATION_CAP {
            return Err(CodeError::EnumerationCap { count });
        }
        Ok(count)
    }

    /// Message number `index` in lexicographic order (first coordinate most significant).
    fn lex_message(&self, mut index: u64) -> Vec<u32> {
        let q = self.field.order() as u64;
        let mut msg = vec![0u32; self.rows.len()];
        for slot in msg.iter_mut().rev() {
            *slot = (index % q) as u32;
            index /= q;
        }
        msg
    }

    /// All `q^k` codewords, messages in lexicographic order.
    pub fn enumerate_codewords(&self) -> Result<Vec<Vec<u32>>, CodeError> {
        let count = self.check_cap()?;
        (0..count)
            .map(|i| self.encode_raw(&self.lex_message(i)))
            .collect()
    }

    /// All `q^k` codewords, in the order of the supplied message list, which
    /// must contain every message exactly once.
    pub fn enumerate_codewords_ordered(&self, messages: &[Vec<u32>]) -> Result<Vec<Vec<u32>>, CodeError> {
        let count = self.check_cap()?;
        let distinct: HashSet<&Vec<u32>> = messages.iter().collect();
        if messages.len() as u64 != count || distinct.len() != messages.len() {
            return Err(CodeError::BadOrdering { expected: count });
        }
        messages.iter().map(|m| self.encode_raw(m)).collect()
    }

    /// The dual code under the plain bilinear form `x · y = Σ x_i y_i`.
    pub fn dual_code(&self) -> LinearCode {
        let mut m = self.rows.clone();
        let pivots = rref(&self.field, &mut m, self.n);
        let free: Vec<usize> = (0..self.n).filter(|c| !pivots.contains(c)).collect();
        let rows = free
            .iter()
            .map(|&f| {
                let mut v = vec![0u32; self.n];
                v[f] = 1;
                for (i, &p) in pivots.iter().enumerate() {
                    // characteristic 2: -x = x
                    v[p] = m[i][f];
                }
                v
            })
            .collect();
        LinearCode {
            field: self.field,
            n: self.n,
            rows,
        }
    }

    /// Minimum weight of a nonzero codeword, by exhaustive search.
    ///
    /// Codes with at most [`ENUMERATION_CAP`] codewords are enumerated in
    /// full. Larger codes are searched the other way round: every vector of
    /// weight 1, 2, … is tested against the parity checks until a codeword
    /// turns up, with the number of tested vectors held to the same cap.
    pub fn min_distance(&self) -> Result<usize, CodeError> {
        if self.rows.is_empty() {
            return Err(CodeError::ZeroCode);
        }
        if !self.exceeds_enumeration_cap() {
            let mut best = self.n;
            for i in 1..self.codeword_count() {
                let w = weight(&self.encode_raw(&self.lex_message(i))?);
                best = best.min(w);
            }
            return Ok(best);
        }
        self.min_distance_by_weight()
    }

    fn min_distance_by_weight(&self) -> Result<usize, CodeError> {
        let checks = self.dual_code();
        let q = self.field.order();
        let mut tested: u64 = 0;
        for w in 1..=self.n {
            let mut support: Vec<usize> = (0..w).collect();
            loop {
                // every nonzero assignment on this support
                let mut values = vec![1u32; w];
                loop {
                    tested += 1;
                    if tested > ENUMERATION_CAP {
                        return Err(CodeError::EnumerationCap { count: tested });
                    }
                    let in_code = checks.rows.iter().all(|h| {
                        support.iter().zip(&values).fold(0, |acc, (&i, &v)| {
                            self.field.add_raw(acc, self.field.mul_raw(h[i], v))
                        }) == 0
                    });
                    if in_code {
                        return Ok(w);
                    }
                    let Some(pos) = values.iter().rposition(|&v| v + 1 < q) else {
                        break;
                    };
                    values[pos] += 1;
                    values[pos + 1..].fill(1);
                }
                let Some(i) = (0..w).rev().find(|&i| support[i] < self.n - w + i) else {
                    break;
                };
                support[i] += 1;
                for j in i + 1..w {
                    support[j] = support[j - 1] + 1;
                }
            }
        }
        unreachable!("a nonzero code has a codeword of weight at most n")
    }

    pub fn params(&self) -> Result<CodeParams, CodeError> {
        Ok(CodeParams {
            n: self.n,
            k: self.rows.len(),
            d_min: self.min_distance()?,
        })
    }

    /// Renders the generator matrix one row per line, entries space-separated.
    pub fn render_generator(&self) -> String {
        self.rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|&v| self.field.render(v))
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect::<Vec<_>>()
            .join("\n")
    }
}

/// Plain bilinear inner product over the field.
pub fn inner_product(field: &FieldSpec, x: &[u32], y: &[u32]) -> u32 {
    x.iter()
        .zip(y)
        .fold(0, |acc, (&a, &b)| field.add_raw(acc, field.mul_raw(a, b)))
}

/// One representative per projective point of GF(q)^m: vectors whose first
/// nonzero entry is 1, in lexicographic order.
fn projective_points(field: &FieldSpec, m: usize) -> Vec<Vec<u32>> {
    let q = field.order() as u64;
    let total = q.pow(m as u32);
    let mut pts = Vec::new();
    for idx in 1..total {
        let mut v = vec![0u32; m];
        let mut rest = idx;
        for slot in v.iter_mut().rev() {
            *slot = (rest % q) as u32;
            rest /= q;
        }
        if v.iter().find(|&&x| x != 0) == Some(&1) {
            pts.push(v);
        }
    }
    pts
}

/// The simplex code: its generator is the Hamming parity-check matrix, an
/// `[(q^m-1)/(q-1), m, q^(m-1)]_q` code.
pub fn simplex_code(q: u32, m: usize) -> Result<LinearCode, CodeError> {
    let field = FieldSpec::with_order(q)?;
    if m < 2 {
        return Err(CodeError::InvalidM(m));
    }
    let cols = projective_points(&field, m);
    let n = cols.len();
    let rows = (0..m)
        .map(|i| cols.iter().map(|c| c[i]).collect())
        .collect();
    LinearCode::from_raw(field, n, rows)
}

/// The Hamming code `[(q^m-1)/(q-1), n-m, 3]_q`, the dual of [`simplex_code`].
pub fn hamming_code(q: u32, m: usize) -> Result<LinearCode, CodeError> {
    Ok(simplex_code(q, m)?.dual_code())
}

/// The `[5,2,4]` quadratic-residue code over GF(4) with generator
/// `[[1,0,1,ω̄,ω̄],[0,1,ω̄,ω̄,1]]`.
pub fn qr5_code() -> LinearCode {
    const W: u32 = 3; // ω̄
    LinearCode::from_raw(
        FieldSpec::gf4(),
        5,
        vec![vec![1, 0, 1, W, W], vec![0, 1, W, W, 1]],
    )
    .expect("qr5 generator has full rank")
}
