//! Pulse schedules with few distinct pulses.
//!
//! A schedule lists toggling frames `U_0 = I, U_1, …, U_{N-1}` and the pulse
//! applied after each interval: pulse `sequence[i]` carries frame `i` to frame
//! `i + 1` (cyclically, so the last pulse returns to the identity frame).
//! Frames walk a Hamilton cycle of a label group, so each pulse is one of the
//! cycle's few generators.
//!
//! Network schedules take the codewords of a linear code over GF(4^α) as
//! frames. Codewords are visited along the binary Gray cycle on the `2αm`
//! message bits, so the distinct pulses are the `2αm` codewords of the unit
//! message bits. Every GF(4^α) symbol becomes α qubit labels: bit pair
//! `(c_{2j}, c_{2j+1})` of its packed value gives qubit `j` the label
//! `X^{c_{2j} ⊕ c_{2j+1}} Z^{c_{2j+1}}`. At α = 1 this is
//! 0 ↦ I, 1 ↦ X, ω ↦ Y, ω̄ ↦ Z.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::codes::{qr5_code, simplex_code, CodeError, LinearCode};
use crate::cycles::{hamilton_cycle, CycleError, CycleSpec};
use crate::gf::{FieldSpec, GfError};
use crate::pauli::{NodeSpec, PauliError, PauliLabel};

/// Largest number of steps a compiled schedule may have.
pub const SCHEDULE_CAP: usize = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CompileError {
    #[error(transparent)]
    Cycle(#[from] CycleError),
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error(transparent)]
    Field(#[from] GfError),
    #[error(transparent)]
    Pauli(#[from] PauliError),
    #[error("network needs at least 2 nodes, got {0}")]
    TooFewNodes(usize),
    #[error("alpha must be in 1..=8, got {0}")]
    BadAlpha(u32),
    #[error("schedule would have {steps} steps, above the cap of {SCHEDULE_CAP}")]
    Cap { steps: u128 },
    #[error("sequence entry {index} refers to pulse {id}, but only {count} pulses exist")]
    BadPulseId { index: usize, id: usize, count: usize },
    #[error("pulse {0} does not match the node spec")]
    PulseShape(usize),
    #[error("pulse sequence composes to {0}, not the identity")]
    NotClosed(String),
    #[error("schedule has no steps")]
    Empty,
    #[error("frame index {index} out of range for {len} frames")]
    FrameIndex { index: usize, len: usize },
    #[error("block size {block} does not divide {nodes} label sites")]
    BadBlock { block: usize, nodes: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Scenario {
    Single,
    Bipartite,
    QubitNetwork,
    QuditNetwork,
}

impl Scenario {
    pub fn name(&self) -> &'static str {
        match self {
            Scenario::Single => "single",
            Scenario::Bipartite => "bipartite",
            Scenario::QubitNetwork => "qubit-network",
            Scenario::QuditNetwork => "qudit-network",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        match s {
            "single" => Some(Scenario::Single),
            "bipartite" => Some(Scenario::Bipartite),
            "qubit-network" => Some(Scenario::QubitNetwork),
            "qudit-network" => Some(Scenario::QuditNetwork),
            _ => None,
        }
    }
}

impl fmt::Display for Scenario {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PulseSchedule {
    scenario: Scenario,
    spec: NodeSpec,
    block: usize,
    pulses: Vec<PauliLabel>,
    sequence: Vec<usize>,
    frames: Vec<PauliLabel>,
}

impl PulseSchedule {
    /// Builds a schedule from pulses and a sequence of pulse ids, deriving
    /// the frames. `block` is the number of label sites per physical node
    /// (α for qudit networks, otherwise 1). Fails unless the sequence
    /// composes to the identity label.
    pub fn new(
        scenario: Scenario,
        spec: NodeSpec,
        block: usize,
        pulses: Vec<PauliLabel>,
        sequence: Vec<usize>,
    ) -> Result<Self, CompileError> {
        if block == 0 || !spec.nodes().is_multiple_of(block) {
            return Err(CompileError::BadBlock { block, nodes: spec.nodes() });
        }
        if sequence.is_empty() {
            return Err(CompileError::Empty);
        }
        if let Some(i) = pulses.iter().position(|p| !p.matches(spec)) {
            return Err(CompileError::PulseShape(i));
        }
        let mut frames = Vec::with_capacity(sequence.len());
        let mut frame = spec.identity();
        for (index, &id) in sequence.iter().enumerate() {
            let pulse = pulses.get(id).ok_or(CompileError::BadPulseId {
                index,
                id,
                count: pulses.len(),
            })?;
            let next = frame.try_add(pulse)?;
            frames.push(std::mem::replace(&mut frame, next));
        }
        if !frame.is_identity() {
            return Err(CompileError::NotClosed(frame.to_string()));
        }
        Ok(Self {
            scenario,
            spec,
            block,
            pulses,
            sequence,
            frames,
        })
    }

    /// Builds a schedule from the label of every step; pulses are the
    /// distinct labels in order of first use.
    pub fn from_step_labels(
        scenario: Scenario,
        spec: NodeSpec,
        block: usize,
        steps: &[PauliLabel],
    ) -> Result<Self, CompileError> {
        let mut pulses: Vec<PauliLabel> = Vec::new();
        let mut ids: HashMap<&PauliLabel, usize> = HashMap::new();
        let mut sequence = Vec::with_capacity(steps.len());
        for label in steps {
            let id = *ids.entry(label).or_insert_with(|| {
                pulses.push(label.clone());
                pulses.len() - 1
            });
            sequence.push(id);
        }
        Self::new(scenario, spec, block, pulses, sequence)
    }

    pub fn scenario(&self) -> Scenario {
        self.scenario
    }

    pub fn spec(&self) -> NodeSpec {
        self.spec
    }

    /// Label sites per physical node.
    pub fn block(&self) -> usize {
        self.block
    }

    /// Number of physical nodes (`label sites / block`).
    pub fn physical_nodes(&self) -> usize {
        self.spec.nodes() / self.block
    }

    pub fn num_steps(&self) -> usize {
        self.sequence.len()
    }

    pub fn pulses(&self) -> &[PauliLabel] {
        &self.pulses
    }

    pub fn sequence(&self) -> &[usize] {
        &self.sequence
    }

    pub fn frames(&self) -> &[PauliLabel] {
        &self.frames
    }

    /// Number of distinct pulses.
    pub fn distinct_pulse_count(&self) -> usize {
        self.pulses.len()
    }

    /// How often each distinct frame occurs; `Some(λ)` when all agree.
    pub fn frame_multiplicity(&self) -> Option<usize> {
        let mut counts: HashMap<&PauliLabel, usize> = HashMap::new();
        for f in &self.frames {
            *counts.entry(f).or_default() += 1;
        }
        let first = *counts.values().next()?;
        counts.values().all(|&c| c == first).then_some(first)
    }

    /// Frame table as symbols: entry `(node, step)` is the physical node's
    /// label packed as a base-`d²` number over its block, in `0..d^(2·block)`.
    pub fn frame_symbols(&self) -> Vec<Vec<u32>> {
        let d2 = self.spec.dim() * self.spec.dim();
        (0..self.physical_nodes())
            .map(|node| {
                self.frames
                    .iter()
                    .map(|f| {
                        (node * self.block..(node + 1) * self.block)
                            .fold(0u32, |acc, site| acc * d2 + f.node_index(site))
                    })
                    .collect()
            })
            .collect()
    }

    /// Symbols per physical node: `d^(2·block)`.
    pub fn node_symbols(&self) -> u32 {
        (self.spec.dim() * self.spec.dim()).pow(self.block as u32)
    }

    /// Drops frame `index` by merging the pulses on either side of it into
    /// their product. Dropping frame 0 re-bases the remaining frames so the
    /// first is the identity (a fixed relabelling that conjugates every
    /// frame by the same label).
    pub fn with_frame_removed(&self, index: usize) -> Result<PulseSchedule, CompileError> {
        let n = self.sequence.len();
        if index >= n {
            return Err(CompileError::FrameIndex { index, len: n });
        }
        if n == 1 {
            return Err(CompileError::Empty);
        }
        let step: Vec<PauliLabel> = self.sequence.iter().map(|&i| self.pulses[i].clone()).collect();
        // step[i] carries frame i to frame i + 1; frame `index` is entered by
        // step[index - 1] and left by step[index].
        let before = (index + n - 1) % n;
        let merged = step[before].try_add(&step[index])?;
        let mut labels = Vec::with_capacity(n - 1);
        if index == 0 {
            labels.extend(step[1..n - 1].iter().cloned());
            labels.push(merged);
        } else {
            labels.extend(step[..before].iter().cloned());
            labels.push(merged);
            labels.extend(step[index + 1..].iter().cloned());
        }
        Self::from_step_labels(self.scenario, self.spec, self.block, &labels)
    }
}

/// Two pulses `X` and `Z` walking the Hamilton cycle of Z_d².
pub fn compile_single_node(d: u32) -> Result<PulseSchedule, CompileError> {
    let spec = NodeSpec::new(1, d)?;
    let cycle = hamilton_cycle(CycleSpec::new(d, 2)?);
    check_steps(cycle.len() as u128)?;
    let pulses = vec![PauliLabel::single(spec, 0, 1, 0), PauliLabel::single(spec, 0, 0, 1)];
    PulseSchedule::new(Scenario::Single, spec, 1, pulses, cycle.steps().to_vec())
}

/// Four pulses `X⁽¹⁾, Z⁽¹⁾, X⁽²⁾, Z⁽²⁾` walking the Hamilton cycle of Z_d⁴.
pub fn compile_bipartite(d: u32) -> Result<PulseSchedule, CompileError> {
    let spec = NodeSpec::new(2, d)?;
    let cycle = CycleSpec::new(d, 4)?;
    check_steps(cycle.order() as u128)?;
    let cycle = hamilton_cycle(cycle);
    let pulses = vec![
        PauliLabel::single(spec, 0, 1, 0),
        PauliLabel::single(spec, 0, 0, 1),
        PauliLabel::single(spec, 1, 1, 0),
        PauliLabel::single(spec, 1, 0, 1),
    ];
    PulseSchedule::new(Scenario::Bipartite, spec, 1, pulses, cycle.steps().to_vec())
}

fn check_steps(steps: u128) -> Result<(), CompileError> {
    if steps > SCHEDULE_CAP as u128 {
        return Err(CompileError::Cap { steps });
    }
    Ok(())
}

/// Smallest `m ≥ 2` with `(q^m - 1)/(q - 1) ≥ n0`.
pub fn network_m(q: u64, n0: usize) -> usize {
    let mut m = 2;
    while (q.pow(m as u32) - 1) / (q - 1) < n0 as u64 {
        m += 1;
    }
    m
}

/// Code-length for `q` and `m`: `(q^m - 1)/(q - 1)`.
pub fn projective_length(q: u64, m: usize) -> u64 {
    (q.pow(m as u32) - 1) / (q - 1)
}

/// Network of `n0` qubits; `m` is the least with `n0 ≤ (4^m-1)/3 ≤ 4·n0`.
/// Uses the length-5 quadratic-residue code when `n0 = 5`, otherwise the
/// simplex code over GF(4).
pub fn compile_qubit_network(n0: usize) -> Result<PulseSchedule, CompileError> {
    if n0 < 2 {
        return Err(CompileError::TooFewNodes(n0));
    }
    let m = network_m(4, n0);
    check_steps(4u128.pow(m as u32))?;
    let code = if n0 == 5 { qr5_code() } else { simplex_code(4, m)? };
    compile_code_network(&code, n0, 1, Scenario::QubitNetwork)
}

/// Network of `n0` nodes of dimension `2^α`, realized as `α·n0` qubits.
/// `α = 1` is the qubit network.
pub fn compile_qudit_network(n0: usize, alpha: u32) -> Result<PulseSchedule, CompileError> {
    if !(1..=8).contains(&alpha) {
        return Err(CompileError::BadAlpha(alpha));
    }
    if n0 < 2 {
        return Err(CompileError::TooFewNodes(n0));
    }
    if alpha == 1 {
        let s = compile_qubit_network(n0)?;
        return Ok(PulseSchedule {
            scenario: Scenario::QuditNetwork,
            ..s
        });
    }
    let q = 1u64 << (2 * alpha);
    let m = network_m(q, n0);
    check_steps((q as u128).pow(m as u32))?;
    let code = simplex_code(q as u32, m)?;
    compile_code_network(&code, n0, alpha as usize, Scenario::QuditNetwork)
}

/// Message of a Gray vertex: coordinate `i` reads Gray-table rows
/// `e·i + 1 ..= e·(i+1)` (row 1 is cycle coordinate `K - 1`) as its
/// top-first bit vector.
fn vertex_message(field: &FieldSpec, vertex: &[u32], m: usize) -> Result<Vec<u32>, GfError> {
    let e = field.degree() as usize;
    let k = e * m;
    (0..m)
        .map(|i| {
            let bits: Vec<u8> = (0..e).map(|t| vertex[k - 1 - (e * i + t)] as u8).collect();
            field.from_bits(&bits).map(|x| x.value())
        })
        .collect()
}

/// Qubit labels of a GF(4^α) codeword truncated to `n0` symbols.
fn word_labels(word: &[u32], n0: usize, alpha: usize) -> PauliLabel {
    PauliLabel::new(
        2,
        word[..n0].iter().flat_map(|&c| {
            (0..alpha).map(move |j| {
                let lo = (c >> (2 * j)) & 1;
                let hi = (c >> (2 * j + 1)) & 1;
                (lo ^ hi, hi)
            })
        }),
    )
}

fn compile_code_network(
    code: &LinearCode,
    n0: usize,
    alpha: usize,
    scenario: Scenario,
) -> Result<PulseSchedule, CompileError> {
    let field = code.field();
    debug_assert_eq!(field.degree() as usize, 2 * alpha);
    let m = code.dimension();
    let k = field.degree() as usize * m;
    let spec = NodeSpec::new(n0 * alpha, 2)?;
    let cycle = hamilton_cycle(CycleSpec::new(2, k)?);
    let pulses = (0..k)
        .map(|g| {
            let mut unit = vec![0u32; k];
            unit[g] = 1;
            let msg = vertex_message(&field, &unit, m)?;
            Ok(word_labels(&code.encode_raw(&msg)?, n0, alpha))
        })
        .collect::<Result<Vec<_>, CompileError>>()?;
    PulseSchedule::new(scenario, spec, alpha, pulses, cycle.steps().to_vec())
}

/// Frames computed directly from the code (no prefix sums): the labels of
/// the codeword of every Gray vertex, in cycle order.
pub fn network_frames_direct(
    code: &LinearCode,
    n0: usize,
    alpha: usize,
) -> Result<Vec<PauliLabel>, CompileError> {
    let field = code.field();
    let m = code.dimension();
    let cycle = hamilton_cycle(CycleSpec::new(2, field.degree() as usize * m)?);
    cycle
        .vertices()
        .iter()
        .map(|v| {
            let msg = vertex_message(&field, v, m)?;
            Ok(word_labels(&code.encode_raw(&msg)?, n0, alpha))
        })
        .collect()
}
