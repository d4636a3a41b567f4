//! Orthogonal arrays built from linear codes, and an exhaustive strength check.
//!
//! An array is stored factor-major: `rows[i][j]` is the symbol of factor
//! (node) `i` in run (time slot) `j`.

use std::fmt;

use thiserror::Error;

use crate::codes::{CodeError, LinearCode};

/// Default budget for [`verify_strength`], in elementary tuple updates.
pub const STRENGTH_COST_CAP: u64 = 100_000_000;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum DesignError {
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error("code has dimension 0")]
    ZeroDimension,
    #[error("dual code is the zero code; strength is undefined")]
    DualIsZero,
    #[error("dual distance 1 gives strength 0")]
    DualDistanceOne,
    #[error("strength {t} out of range 1..={n}")]
    StrengthOutOfRange { t: usize, n: usize },
    #[error("strength check would cost {cost} updates, above the cap of {cap}")]
    CostCap { cost: u64, cap: u64 },
    #[error("symbol map is not a bijection onto 0..{0}")]
    BadSymbolMap(u32),
    #[error("rows have unequal lengths")]
    RaggedRows,
    #[error("entry {value} at ({row}, {col}) is not below s = {s}")]
    EntryOutOfRange { row: usize, col: usize, value: u32, s: u32 },
    #[error("array fails strength {t}: {witness}")]
    StrengthFailed { t: usize, witness: StrengthWitness },
}

/// A plain `n × N` matrix over the symbols `0..s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolArray {
    s: u32,
    rows: Vec<Vec<u32>>,
}

impl SymbolArray {
    pub fn new(s: u32, rows: Vec<Vec<u32>>) -> Result<Self, DesignError> {
        let runs = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != runs) {
            return Err(DesignError::RaggedRows);
        }
        for (i, row) in rows.iter().enumerate() {
            if let Some((j, &v)) = row.iter().enumerate().find(|(_, &v)| v >= s) {
                return Err(DesignError::EntryOutOfRange { row: i, col: j, value: v, s });
            }
        }
        Ok(Self { s, rows })
    }

    /// Builds an array whose columns are the given words.
    pub fn from_columns(s: u32, columns: &[Vec<u32>]) -> Result<Self, DesignError> {
        let n = columns.first().map_or(0, Vec::len);
        if columns.iter().any(|c| c.len() != n) {
            return Err(DesignError::RaggedRows);
        }
        let rows = (0..n).map(|i| columns.iter().map(|c| c[i]).collect()).collect();
        Self::new(s, rows)
    }

    pub fn symbols(&self) -> u32 {
        self.s
    }

    pub fn factors(&self) -> usize {
        self.rows.len()
    }

    pub fn runs(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn column(&self, j: usize) -> Vec<u32> {
        self.rows.iter().map(|r| r[j]).collect()
    }

    /// Reorders runs: column `j` of the result is column `order[j]` of `self`.
    pub fn permute_columns(&self, order: &[usize]) -> SymbolArray {
        SymbolArray {
            s: self.s,
            rows: self
                .rows
                .iter()
                .map(|r| order.iter().map(|&j| r[j]).collect())
                .collect(),
        }
    }

    /// Keeps the first `n` factors.
    pub fn truncate_rows(&self, n: usize) -> SymbolArray {
        SymbolArray {
            s: self.s,
            rows: self.rows.iter().take(n).cloned().collect(),
        }
    }
}

/// Offending row subset and tuple from a failed strength check.
#[derive(Debug, Clone, PartialEq)]
pub struct StrengthWitness {
    pub rows: Vec<usize>,
    pub tuple: Vec<u32>,
    pub count: u64,
    /// `N / s^t`, which may be fractional when `s^t` does not divide `N`.
    pub expected: f64,
}

impl fmt::Display for StrengthWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "rows {:?} show tuple {:?} {} times (expected {})",
            self.rows, self.tuple, self.count, self.expected
        )
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum StrengthCheck {
    Pass { lambda: u64 },
    Fail(StrengthWitness),
}

impl StrengthCheck {
    pub fn passed(&self) -> bool {
        matches!(self, StrengthCheck::Pass { .. })
    }
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

/// Advances `idx` to the next `t`-subset of `0..n` in lexicographic order.
fn next_subset(idx: &mut [usize], n: usize) -> bool {
    let t = idx.len();
    for i in (0..t).rev() {
        if idx[i] < n - t + i {
            idx[i] += 1;
            for j in i + 1..t {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Exhaustive strength check with the default cost cap.
pub fn verify_strength(array: &SymbolArray, t: usize) -> Result<StrengthCheck, DesignError> {
    verify_strength_with_cap(array, t, Some(STRENGTH_COST_CAP))
}

/// Counts every `s^t` tuple in every `t`-row subset. Passes iff each count
/// equals `N / s^t`; otherwise reports the lexicographically least failing
/// subset and, within it, the least tuple with the wrong count.
pub fn verify_strength_with_cap(
    array: &SymbolArray,
    t: usize,
    cap: Option<u64>,
) -> Result<StrengthCheck, DesignError> {
    let n = array.factors();
    if t == 0 || t > n {
        return Err(DesignError::StrengthOutOfRange { t, n });
    }
    let runs = array.runs() as u64;
    let s = array.s as u64;
    let tuples = s
        .checked_pow(t as u32)
        .filter(|&x| x <= 1 << 32)
        .ok_or(DesignError::CostCap { cost: u64::MAX, cap: cap.unwrap_or(u64::MAX) })?;
    let cost = binomial(n as u64, t as u64).saturating_mul(runs + tuples);
    if let Some(cap) = cap {
        if cost > cap {
            return Err(DesignError::CostCap { cost, cap });
        }
    }
    let expected = runs as f64 / tuples as f64;
    let lambda = runs.is_multiple_of(tuples).then_some(runs / tuples);

    let mut counts = vec![0u64; tuples as usize];
    let mut subset: Vec<usize> = (0..t).collect();
    loop {
        counts.iter_mut().for_each(|c| *c = 0);
        for j in 0..runs as usize {
            let code = subset
                .iter()
                .fold(0u64, |acc, &r| acc * s + array.rows[r][j] as u64);
            counts[code as usize] += 1;
        }
        if let Some(code) = counts.iter().position(|&c| Some(c) != lambda) {
            let mut tuple = vec![0u32; t];
            let mut rest = code as u64;
            for slot in tuple.iter_mut().rev() {
                *slot = (rest % s) as u32;
                rest /= s;
            }
            return Ok(StrengthCheck::Fail(StrengthWitness {
                rows: subset,
                tuple,
                count: counts[code],
                expected,
            }));
        }
        if !next_subset(&mut subset, n) {
            break;
        }
    }
    Ok(StrengthCheck::Pass {
        lambda: lambda.expect("all counts equal lambda"),
    })
}

/// An array verified to have strength `t` and index `lambda = N / s^t`.
#[derive(Debug, Clone, PartialEq)]
pub struct OrthogonalArray {
    array: SymbolArray,
    t: usize,
    lambda: u64,
}

impl OrthogonalArray {
    /// Verifies `array` at strength `t` within [`STRENGTH_COST_CAP`].
    pub fn new(array: SymbolArray, t: usize) -> Result<Self, DesignError> {
        Self::with_cap(array, t, Some(STRENGTH_COST_CAP))
    }

    /// Verifies `array` at strength `t`; `None` lifts the cost cap.
    pub fn with_cap(array: SymbolArray, t: usize, cap: Option<u64>) -> Result<Self, DesignError> {
        match verify_strength_with_cap(&array, t, cap)? {
            StrengthCheck::Pass { lambda } => Ok(Self { array, t, lambda }),
            StrengthCheck::Fail(witness) => Err(DesignError::StrengthFailed { t, witness }),
        }
    }

    pub fn array(&self) -> &SymbolArray {
        &self.array
    }

    pub fn runs(&self) -> usize {
        self.array.runs()
    }

    pub fn factors(&self) -> usize {
        self.array.factors()
    }

    pub fn symbols(&self) -> u32 {
        self.array.symbols()
    }

    pub fn strength(&self) -> usize {
        self.t
    }

    pub fn lambda(&self) -> u64 {
        self.lambda
    }

    /// Plain-text export: `OA N n s t lambda`, then one line per factor.
    pub fn to_text(&self) -> String {
        let mut out = format!(
            "OA {} {} {} {} {}\n",
            self.runs(),
            self.factors(),
            self.symbols(),
            self.t,
            self.lambda
        );
        for row in self.array.rows() {
            let line: Vec<String> = row.iter().map(u32::to_string).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }
}

/// Validates a symbol map indexed by packed field value.
fn check_symbol_map(q: u32, map: &[u32]) -> Result<(), DesignError> {
    let mut seen = vec![false; q as usize];
    if map.len() != q as usize {
        return Err(DesignError::BadSymbolMap(q));
    }
    for &v in map {
        if v >= q || std::mem::replace(&mut seen[v as usize], true) {
            return Err(DesignError::BadSymbolMap(q));
        }
    }
    Ok(())
}

/// Strength `d⊥ - 1` promised for the codeword array of `code`.
pub fn code_strength(code: &LinearCode) -> Result<usize, DesignError> {
    if code.dimension() == 0 {
        return Err(DesignError::ZeroDimension);
    }
    let dual = code.dual_code();
    if dual.dimension() == 0 {
        return Err(DesignError::DualIsZero);
    }
    let d_perp = dual.min_distance()?;
    if d_perp < 2 {
        return Err(DesignError::DualDistanceOne);
    }
    Ok(d_perp - 1)
}

/// Codewords as columns, default order and identity symbol map.
pub fn oa_from_code(code: &LinearCode) -> Result<OrthogonalArray, DesignError> {
    let q = code.field().order();
    let identity: Vec<u32> = (0..q).collect();
    oa_from_code_with(code, &identity, None, Some(STRENGTH_COST_CAP))
}

/// Codewords as columns with an explicit symbol map (indexed by packed field
/// value) and optional message ordering. Strength is taken from the dual
/// distance and then checked exhaustively within `cap`.
pub fn oa_from_code_with(
    code: &LinearCode,
    symbol_map: &[u32],
    messages: Option<&[Vec<u32>]>,
    cap: Option<u64>,
) -> Result<OrthogonalArray, DesignError> {
    let q = code.field().order();
    check_symbol_map(q, symbol_map)?;
    let t = code_strength(code)?;
    let words = match messages {
        Some(m) => code.enumerate_codewords_ordered(m)?,
        None => code.enumerate_codewords()?,
    };
    let mapped: Vec<Vec<u32>> = words
        .iter()
        .map(|w| w.iter().map(|&x| symbol_map[x as usize]).collect())
        .collect();
    OrthogonalArray::with_cap(SymbolArray::from_columns(q, &mapped)?, t, cap)
}
