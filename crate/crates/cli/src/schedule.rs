//! JSON schedule files.
//!
//! Files are written with a fixed key order and `serde_json`'s number
//! formatting, so the same schedule always serializes to the same bytes.

use std::collections::HashMap;

use decouple_core::compiler::{CompileError, PulseSchedule, Scenario};
use decouple_core::pauli::{NodeSpec, PauliLabel};
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub const FORMAT_VERSION: &str = "1";

#[derive(Debug, Error)]
pub enum FileError {
    #[error("malformed schedule file: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unsupported schedule version {0:?}, expected \"1\"")]
    Version(String),
    #[error("unknown scenario {0:?}")]
    Scenario(String),
    #[error("sequence has {got} entries but N = {expected}")]
    SequenceLength { got: usize, expected: usize },
    #[error("pulse id {0} appears more than once")]
    DuplicateId(u64),
    #[error("sequence entry {index} refers to unknown pulse id {id}")]
    UnknownId { index: usize, id: u64 },
    #[error("{what} has {got} labels, expected {expected}")]
    LabelCount { what: String, got: usize, expected: usize },
    #[error("{what} has label [{a}, {b}] not reduced mod {d}")]
    Unreduced { what: String, a: u32, b: u32, d: u32 },
    #[error("times list has {got} entries, expected {expected}")]
    TimesLength { got: usize, expected: usize },
    #[error("times must be positive and finite")]
    BadTime,
    #[error("alpha {alpha} does not divide n = {n}")]
    Alpha { alpha: u32, n: usize },
    #[error(transparent)]
    Schedule(CompileError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TimesTag {
    Uniform,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Times {
    Named(TimesTag),
    Explicit(Vec<f64>),
}

impl Default for Times {
    fn default() -> Self {
        Times::Named(TimesTag::Uniform)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PulseEntry {
    pub id: u64,
    pub labels: Vec<[u32; 2]>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScheduleFile {
    pub version: String,
    pub scenario: String,
    pub n: usize,
    pub d: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<u32>,
    #[serde(rename = "N")]
    pub steps: usize,
    pub pulses: Vec<PulseEntry>,
    pub sequence: Vec<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub frames: Option<Vec<Vec<[u32; 2]>>>,
    #[serde(default)]
    pub times: Times,
}

/// A checked file: the schedule data plus anything the file claims that
/// still has to be compared against it.
#[derive(Debug, Clone)]
pub struct LoadedFile {
    pub scenario: Scenario,
    pub spec: NodeSpec,
    pub block: usize,
    pub pulses: Vec<PauliLabel>,
    pub sequence: Vec<usize>,
    pub frames: Option<Vec<PauliLabel>>,
    pub times: Option<Vec<f64>>,
}

fn to_pairs(label: &PauliLabel) -> Vec<[u32; 2]> {
    label.nodes().iter().map(|&(a, b)| [a, b]).collect()
}

impl ScheduleFile {
    pub fn from_schedule(schedule: &PulseSchedule, emit_frames: bool) -> Self {
        let spec = schedule.spec();
        let alpha = (schedule.scenario() == Scenario::QuditNetwork).then_some(schedule.block() as u32);
        Self {
            version: FORMAT_VERSION.to_string(),
            scenario: schedule.scenario().name().to_string(),
            n: spec.nodes(),
            d: spec.dim(),
            alpha,
            steps: schedule.num_steps(),
            pulses: schedule
                .pulses()
                .iter()
                .enumerate()
                .map(|(id, p)| PulseEntry {
                    id: id as u64,
                    labels: to_pairs(p),
                })
                .collect(),
            sequence: schedule.sequence().iter().map(|&s| s as u64).collect(),
            frames: emit_frames.then(|| schedule.frames().iter().map(to_pairs).collect()),
            times: Times::default(),
        }
    }

    pub fn parse(text: &str) -> Result<Self, FileError> {
        Ok(serde_json::from_str(text)?)
    }

    /// Canonical JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        crate::json::to_canonical(self)
    }

    /// Checks the file's invariants without composing the sequence.
    pub fn load(&self) -> Result<LoadedFile, FileError> {
        if self.version != FORMAT_VERSION {
            return Err(FileError::Version(self.version.clone()));
        }
        let scenario =
            Scenario::from_name(&self.scenario).ok_or_else(|| FileError::Scenario(self.scenario.clone()))?;
        let spec = NodeSpec::new(self.n, self.d).map_err(|e| FileError::Schedule(e.into()))?;
        let block = match self.alpha {
            Some(alpha) if alpha == 0 || !self.n.is_multiple_of(alpha as usize) => {
                return Err(FileError::Alpha { alpha, n: self.n })
            }
            Some(alpha) => alpha as usize,
            None => 1,
        };
        if self.sequence.len() != self.steps {
            return Err(FileError::SequenceLength {
                got: self.sequence.len(),
                expected: self.steps,
            });
        }

        let label = |what: String, pairs: &[[u32; 2]]| -> Result<PauliLabel, FileError> {
            if pairs.len() != self.n {
                return Err(FileError::LabelCount {
                    what,
                    got: pairs.len(),
                    expected: self.n,
                });
            }
            if let Some(&[a, b]) = pairs.iter().find(|[a, b]| *a >= self.d || *b >= self.d) {
                return Err(FileError::Unreduced { what, a, b, d: self.d });
            }
            Ok(PauliLabel::new(self.d, pairs.iter().map(|&[a, b]| (a, b))))
        };

        let mut index_of = HashMap::new();
        let mut pulses = Vec::with_capacity(self.pulses.len());
        for entry in &self.pulses {
            if index_of.insert(entry.id, pulses.len()).is_some() {
                return Err(FileError::DuplicateId(entry.id));
            }
            pulses.push(label(format!("pulse {}", entry.id), &entry.labels)?);
        }
        let sequence = self
            .sequence
            .iter()
            .enumerate()
            .map(|(index, id)| {
                index_of
                    .get(id)
                    .copied()
                    .ok_or(FileError::UnknownId { index, id: *id })
            })
            .collect::<Result<Vec<_>, _>>()?;
        let frames = match &self.frames {
            None => None,
            Some(list) => Some(
                list.iter()
                    .enumerate()
                    .map(|(i, f)| label(format!("frame {i}"), f))
                    .collect::<Result<Vec<_>, _>>()?,
            ),
        };
        let times = match &self.times {
            Times::Named(TimesTag::Uniform) => None,
            Times::Explicit(taus) => {
                if taus.len() != self.steps {
                    return Err(FileError::TimesLength {
                        got: taus.len(),
                        expected: self.steps,
                    });
                }
                if taus.iter().any(|t| !(t.is_finite() && *t > 0.0)) {
                    return Err(FileError::BadTime);
                }
                Some(taus.clone())
            }
        };
        Ok(LoadedFile {
            scenario,
            spec,
            block,
            pulses,
            sequence,
            frames,
            times,
        })
    }
}

impl LoadedFile {
    /// Composes the sequence. Fails with [`CompileError::NotClosed`] when
    /// the pulses do not multiply to the identity.
    pub fn schedule(&self) -> Result<PulseSchedule, CompileError> {
        PulseSchedule::new(
            self.scenario,
            self.spec,
            self.block,
            self.pulses.clone(),
            self.sequence.clone(),
        )
    }
}
