//! Hamilton cycles in the directed Cayley graph of Z_d^k whose generators are
//! the `k` forward unit vectors.
//!
//! A cycle is a [`StepList`]: starting from the zero vector, step `i` adds
//! `+1 (mod d)` to coordinate `steps[i]`. For `d = 2` the construction is the
//! binary reflected Gray code, coordinate 0 being the bit that flips most often.

use std::fmt;

use thiserror::Error;

/// Largest group order a cycle may cover.
pub const CYCLE_CAP: u64 = 1 << 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CycleError {
    #[error("modulus d = {0} must be at least 2")]
    BadModulus(u32),
    #[error("coordinate count k must be at least 1")]
    BadRank,
    #[error("group order {d}^{k} exceeds the cap of {CYCLE_CAP}")]
    Cap { d: u32, k: usize },
    #[error("step {index} uses generator {generator}, but only {k} exist")]
    BadGenerator { index: usize, generator: usize, k: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CycleSpec {
    d: u32,
    k: usize,
}

impl CycleSpec {
    pub fn new(d: u32, k: usize) -> Result<Self, CycleError> {
        if d < 2 {
            return Err(CycleError::BadModulus(d));
        }
        if k == 0 {
            return Err(CycleError::BadRank);
        }
        match (d as u64).checked_pow(k as u32) {
            Some(order) if order <= CYCLE_CAP => Ok(Self { d, k }),
            _ => Err(CycleError::Cap { d, k }),
        }
    }

    pub fn modulus(&self) -> u32 {
        self.d
    }

    pub fn rank(&self) -> usize {
        self.k
    }

    /// `d^k`.
    pub fn order(&self) -> usize {
        (self.d as usize).pow(self.k as u32)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StepList {
    spec: CycleSpec,
    steps: Vec<usize>,
}

impl StepList {
    /// Wraps an arbitrary step sequence; only generator indices are checked.
    pub fn new(spec: CycleSpec, steps: Vec<usize>) -> Result<Self, CycleError> {
        if let Some((index, &generator)) = steps.iter().enumerate().find(|(_, &g)| g >= spec.k) {
            return Err(CycleError::BadGenerator { index, generator, k: spec.k });
        }
        Ok(Self { spec, steps })
    }

    pub fn spec(&self) -> CycleSpec {
        self.spec
    }

    pub fn steps(&self) -> &[usize] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Visited vertices, starting at zero; one per step (the vertex reached
    /// by the final step is not repeated).
    pub fn vertices(&self) -> Vec<Vec<u32>> {
        let mut v = vec![0u32; self.spec.k];
        let mut out = Vec::with_capacity(self.steps.len());
        for &g in &self.steps {
            out.push(v.clone());
            v[g] = (v[g] + 1) % self.spec.d;
        }
        out
    }

    /// Number of times each generator is used.
    pub fn generator_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.spec.k];
        for &g in &self.steps {
            counts[g] += 1;
        }
        counts
    }

    /// Comma-separated generator indices.
    pub fn to_csv(&self) -> String {
        self.steps
            .iter()
            .map(usize::to_string)
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// Forward-generator Hamilton cycle of Z_d^k.
///
/// For `k = 1` the cycle is `d` steps of generator 0. Otherwise, for every
/// step of the cycle on coordinates `1..k` take `d - 1` steps of generator 0
/// followed by that step.
pub fn hamilton_cycle(spec: CycleSpec) -> StepList {
    let d = spec.d as usize;
    let mut steps = vec![0usize; d];
    for _ in 1..spec.k {
        let mut next = Vec::with_capacity(steps.len() * d);
        for &g in &steps {
            next.extend(std::iter::repeat_n(0, d - 1));
            next.push(g + 1);
        }
        steps = next;
    }
    StepList { spec, steps }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HamiltonFailure {
    WrongLength { got: usize, expected: usize },
    /// `step` is the index of the step that reached an already-visited vertex.
    Repeat { step: usize, vertex: Vec<u32> },
    NonzeroEndpoint { endpoint: Vec<u32> },
}

impl fmt::Display for HamiltonFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HamiltonFailure::WrongLength { got, expected } => {
                write!(f, "{got} steps, expected {expected}")
            }
            HamiltonFailure::Repeat { step, vertex } => {
                write!(f, "step {step} revisits {vertex:?}")
            }
            HamiltonFailure::NonzeroEndpoint { endpoint } => {
                write!(f, "walk ends at {endpoint:?}, not at zero")
            }
        }
    }
}

/// Exhaustive visit-once and closure check.
pub fn verify_hamilton(sl: &StepList) -> Result<(), HamiltonFailure> {
    let spec = sl.spec;
    let d = spec.d as usize;
    let index = |v: &[u32]| v.iter().rev().fold(0usize, |acc, &x| acc * d + x as usize);
    let mut seen = vec![false; spec.order()];
    let mut v = vec![0u32; spec.k];
    seen[0] = true;
    for (i, &g) in sl.steps.iter().enumerate() {
        v[g] = (v[g] + 1) % spec.d;
        let last = i + 1 == sl.steps.len();
        if last {
            break;
        }
        if std::mem::replace(&mut seen[index(&v)], true) {
            return Err(HamiltonFailure::Repeat { step: i, vertex: v });
        }
    }
    if v.iter().any(|&x| x != 0) && !sl.steps.is_empty() {
        return Err(HamiltonFailure::NonzeroEndpoint { endpoint: v });
    }
    if sl.steps.len() != spec.order() {
        return Err(HamiltonFailure::WrongLength {
            got: sl.steps.len(),
            expected: spec.order(),
        });
    }
    Ok(())
}
