//! Checks that a schedule switches off a pair-interaction Hamiltonian.
//!
//! Two independent routes are provided. The dense route builds the
//! Hamiltonian as a `d^n × d^n` matrix and averages it over the toggling
//! frames. The pairwise route counts frame labels on every node and every
//! node pair, and scales to networks far beyond dense reach.

use std::fmt;

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::compiler::PulseSchedule;
use crate::pauli::{dense_cap, label_monomial, CMatrix, Monomial, NodeSpec, PauliError, PauliLabel};

/// Default relative residual tolerance for [`verify_decoupling`].
pub const DEFAULT_TOL: f64 = 1e-10;

/// Frobenius-distance tolerance for [`sequence_equivalence`].
pub const EQUIVALENCE_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum VerifyError {
    #[error(transparent)]
    Pauli(#[from] PauliError),
    #[error("schedule and Hamiltonian live on different node specs")]
    SpecMismatch,
    #[error("{got} interval times for {expected} steps")]
    TimesLength { got: usize, expected: usize },
    #[error("interval times must be positive and finite")]
    NonPositiveTime,
}

/// A Hermitian term `c·(L + L†)/2 + c'·i(L − L†)/2` for a non-identity label
/// `L` acting on one or two nodes.
#[derive(Debug, Clone, PartialEq)]
pub struct Term {
    pub label: PauliLabel,
    pub c: f64,
    pub c_prime: f64,
}

/// Local terms on single nodes plus two-node couplings.
#[derive(Debug, Clone, PartialEq)]
pub struct PairHamiltonian {
    spec: NodeSpec,
    local: Vec<Term>,
    coupling: Vec<Term>,
}

fn nonidentity_node_labels(d: u32) -> impl Iterator<Item = (u32, u32)> {
    (0..d).flat_map(move |a| (0..d).map(move |b| (a, b))).skip(1)
}

impl PairHamiltonian {
    pub fn new(spec: NodeSpec, local: Vec<Term>, coupling: Vec<Term>) -> Result<Self, VerifyError> {
        if local.iter().chain(&coupling).any(|t| !t.label.matches(spec)) {
            return Err(VerifyError::SpecMismatch);
        }
        Ok(Self { spec, local, coupling })
    }

    pub fn zero(spec: NodeSpec) -> Self {
        Self { spec, local: vec![], coupling: vec![] }
    }

    pub fn spec(&self) -> NodeSpec {
        self.spec
    }

    pub fn local_terms(&self) -> &[Term] {
        &self.local
    }

    pub fn coupling_terms(&self) -> &[Term] {
        &self.coupling
    }

    /// The same Hamiltonian with every coupling removed.
    pub fn without_couplings(&self) -> Self {
        Self {
            spec: self.spec,
            local: self.local.clone(),
            coupling: vec![],
        }
    }
}

/// Every local and coupling coefficient drawn i.i.d. uniform in `[-1, 1]`
/// from a ChaCha8 stream seeded with `seed`.
pub fn random_pair_hamiltonian(spec: NodeSpec, seed: u64) -> PairHamiltonian {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let d = spec.dim();
    let mut draw = || rng.random_range(-1.0..=1.0);
    let mut local = Vec::new();
    for k in 0..spec.nodes() {
        for (a, b) in nonidentity_node_labels(d) {
            local.push(Term {
                label: PauliLabel::single(spec, k, a, b),
                c: draw(),
                c_prime: draw(),
            });
        }
    }
    let mut coupling = Vec::new();
    for k in 0..spec.nodes() {
        for l in k + 1..spec.nodes() {
            for alpha in nonidentity_node_labels(d) {
                for beta in nonidentity_node_labels(d) {
                    let mut nodes = vec![(0, 0); spec.nodes()];
                    nodes[k] = alpha;
                    nodes[l] = beta;
                    coupling.push(Term {
                        label: PauliLabel::new(d, nodes),
                        c: draw(),
                        c_prime: draw(),
                    });
                }
            }
        }
    }
    PairHamiltonian { spec, local, coupling }
}

/// Dense Hermitian matrix of `h`.
pub fn hamiltonian_matrix(h: &PairHamiltonian) -> Result<CMatrix, VerifyError> {
    let dim = h.spec.dense_dim(dense_cap())?;
    let mut m = CMatrix::zeros(dim, dim);
    let half = Complex64::new(0.5, 0.0);
    let half_i = Complex64::new(0.0, 0.5);
    for t in h.local.iter().chain(&h.coupling) {
        let l = label_monomial(h.spec, &t.label, dense_cap())?.to_dense();
        let ld = l.adjoint();
        m += (&l + &ld) * (half * t.c) + (&l - &ld) * (half_i * t.c_prime);
    }
    Ok(m)
}

/// Sum in a balanced binary tree whose shape depends only on the count.
fn tree_sum(mut items: Vec<CMatrix>) -> Option<CMatrix> {
    while items.len() > 1 {
        let mut next = Vec::with_capacity(items.len().div_ceil(2));
        let mut it = items.into_iter();
        while let Some(a) = it.next() {
            match it.next() {
                Some(b) => next.push(a + b),
                None => next.push(a),
            }
        }
        items = next;
    }
    items.pop()
}

fn frame_monomials(schedule: &PulseSchedule) -> Result<Vec<Monomial>, VerifyError> {
    let cap = dense_cap();
    schedule
        .frames()
        .iter()
        .map(|f| label_monomial(schedule.spec(), f, cap).map_err(VerifyError::from))
        .collect()
}

/// `(1/N) Σ_i U_i† M U_i` for a precomputed dense `M`.
pub fn average_matrix(schedule: &PulseSchedule, m: &CMatrix) -> Result<CMatrix, VerifyError> {
    let frames = frame_monomials(schedule)?;
    let n = frames.len() as f64;
    let terms = frames.iter().map(|u| u.conjugate(m)).collect();
    Ok(tree_sum(terms).expect("schedules are nonempty") / Complex64::new(n, 0.0))
}

/// First-order average Hamiltonian of `h` under `schedule`.
pub fn average_hamiltonian(schedule: &PulseSchedule, h: &PairHamiltonian) -> Result<CMatrix, VerifyError> {
    if schedule.spec() != h.spec {
        return Err(VerifyError::SpecMismatch);
    }
    average_matrix(schedule, &hamiltonian_matrix(h)?)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DecouplingReport {
    /// `‖H̄‖_F / ‖H‖_F`, or 0 when `H = 0`.
    pub residual: f64,
    pub pass: bool,
}

pub fn verify_decoupling(
    schedule: &PulseSchedule,
    h: &PairHamiltonian,
    tol: f64,
) -> Result<DecouplingReport, VerifyError> {
    if schedule.spec() != h.spec {
        return Err(VerifyError::SpecMismatch);
    }
    let m = hamiltonian_matrix(h)?;
    let norm = m.norm();
    let residual = if norm == 0.0 {
        0.0
    } else {
        average_matrix(schedule, &m)?.norm() / norm
    };
    Ok(DecouplingReport {
        residual,
        pass: residual <= tol,
    })
}

/// A node or node pair whose frame labels are not uniformly distributed.
#[derive(Debug, Clone, PartialEq)]
pub struct PairwiseWitness {
    /// One node, or two nodes in increasing order.
    pub nodes: Vec<usize>,
    /// Packed node symbols (see [`PulseSchedule::frame_symbols`]).
    pub symbols: Vec<u32>,
    pub count: usize,
    pub expected: f64,
}

impl fmt::Display for PairwiseWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "nodes {:?} see symbols {:?} {} times (expected {})",
            self.nodes, self.symbols, self.count, self.expected
        )
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PairwiseReport {
    pub nodes: usize,
    pub pairs_checked: usize,
    /// Occurrences of each label pair on each node pair, when uniform.
    pub pair_lambda: Option<usize>,
    /// Occurrences of each label on each node, when uniform.
    pub single_lambda: Option<usize>,
    pub witness: Option<PairwiseWitness>,
    pub pass: bool,
}

/// Counts physical-node labels across the frames: every node must see all
/// `s` labels equally often and every node pair all `s²` label pairs
/// equally often. Singles are checked before pairs, each in lexicographic
/// node order; the first failure becomes the witness.
pub fn pairwise_verify(schedule: &PulseSchedule) -> PairwiseReport {
    let table = schedule.frame_symbols();
    let s = schedule.node_symbols() as usize;
    let runs = schedule.num_steps();
    let nodes = table.len();
    let single_lambda = runs.is_multiple_of(s).then_some(runs / s);
    let pair_lambda = runs.is_multiple_of(s * s).then_some(runs / (s * s));
    let mut report = PairwiseReport {
        nodes,
        pairs_checked: 0,
        pair_lambda: if nodes > 1 { pair_lambda } else { None },
        single_lambda,
        witness: None,
        pass: true,
    };

    let mut counts = vec![0usize; s];
    for (node, row) in table.iter().enumerate() {
        counts.iter_mut().for_each(|c| *c = 0);
        for &x in row {
            counts[x as usize] += 1;
        }
        if let Some(sym) = counts.iter().position(|&c| Some(c) != single_lambda) {
            report.witness = Some(PairwiseWitness {
                nodes: vec![node],
                symbols: vec![sym as u32],
                count: counts[sym],
                expected: runs as f64 / s as f64,
            });
            report.pass = false;
            return report;
        }
    }

    let mut counts = vec![0usize; s * s];
    for i in 0..nodes {
        for j in i + 1..nodes {
            counts.iter_mut().for_each(|c| *c = 0);
            for (&x, &y) in table[i].iter().zip(&table[j]) {
                counts[x as usize * s + y as usize] += 1;
            }
            report.pairs_checked += 1;
            if let Some(code) = counts.iter().position(|&c| Some(c) != pair_lambda) {
                report.witness = Some(PairwiseWitness {
                    nodes: vec![i, j],
                    symbols: vec![(code / s) as u32, (code % s) as u32],
                    count: counts[code],
                    expected: runs as f64 / (s * s) as f64,
                });
                report.pass = false;
                return report;
            }
        }
    }
    report
}

/// Positive interval lengths `τ_i`.
#[derive(Debug, Clone, PartialEq)]
pub struct SequenceTimes {
    taus: Vec<f64>,
}

impl SequenceTimes {
    pub fn new(taus: Vec<f64>) -> Result<Self, VerifyError> {
        if taus.iter().any(|&t| !(t > 0.0 && t.is_finite())) {
            return Err(VerifyError::NonPositiveTime);
        }
        Ok(Self { taus })
    }

    /// `n` intervals of length `total / n`.
    pub fn uniform(n: usize, total: f64) -> Self {
        Self {
            taus: vec![total / n as f64; n],
        }
    }

    /// `n` intervals drawn uniformly from `(0, max]`.
    pub fn random(n: usize, max: f64, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        Self {
            taus: (0..n).map(|_| max * (1.0 - rng.random::<f64>())).collect(),
        }
    }

    pub fn taus(&self) -> &[f64] {
        &self.taus
    }

    pub fn len(&self) -> usize {
        self.taus.len()
    }

    pub fn is_empty(&self) -> bool {
        self.taus.is_empty()
    }
}

/// `exp(-iτH)` for every `τ`, from one Hermitian eigendecomposition of `H`.
pub fn evolution_operators(h: &CMatrix, taus: &[f64]) -> Vec<CMatrix> {
    let eig = h.clone().symmetric_eigen();
    let v = &eig.eigenvectors;
    let vd = v.adjoint();
    taus.iter()
        .map(|&tau| {
            let phases = eig
                .eigenvalues
                .map(|lambda| Complex64::from_polar(1.0, -tau * lambda));
            let mut scaled = v.clone();
            for (j, &ph) in phases.iter().enumerate() {
                scaled.column_mut(j).iter_mut().for_each(|x| *x *= ph);
            }
            scaled * &vd
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EquivalenceReport {
    /// `min_φ ‖e^{iφ} A − B‖_F` between the pulse-form and frame-form unitaries.
    pub distance: f64,
    pub pass: bool,
}

/// Frobenius distance after multiplying `a` by the unimodular scalar that
/// maximizes `Re tr((za)† b)`.
pub fn phase_aligned_distance(a: &CMatrix, b: &CMatrix) -> f64 {
    let overlap = a.dotc(b);
    let z = if overlap.norm() > 0.0 {
        overlap / overlap.norm()
    } else {
        Complex64::new(1.0, 0.0)
    };
    (a * z - b).norm()
}

/// Compares the pulse form `P_{s_{N-1}} E_N ⋯ P_{s_0} E_1` with the
/// toggling-frame form `∏_i U_{i}† E_{i+1} U_{i}` (later factors to the
/// left), where `E_i = exp(-iτ_i H)`, `P` are the pulse matrices with their
/// label phases and `U_i` the frame matrices.
pub fn sequence_equivalence(
    schedule: &PulseSchedule,
    h: &PairHamiltonian,
    times: &SequenceTimes,
) -> Result<EquivalenceReport, VerifyError> {
    if schedule.spec() != h.spec {
        return Err(VerifyError::SpecMismatch);
    }
    if times.len() != schedule.num_steps() {
        return Err(VerifyError::TimesLength {
            got: times.len(),
            expected: schedule.num_steps(),
        });
    }
    let cap = dense_cap();
    let spec = schedule.spec();
    let hm = hamiltonian_matrix(h)?;
    let dim = hm.nrows();
    let evolutions = evolution_operators(&hm, times.taus());
    let pulses: Vec<CMatrix> = schedule
        .pulses()
        .iter()
        .map(|p| label_monomial(spec, p, cap).map(|m| m.to_dense()))
        .collect::<Result<_, _>>()?;
    let frames = frame_monomials(schedule)?;

    let mut pulse_form = DMatrix::identity(dim, dim);
    let mut frame_form = DMatrix::identity(dim, dim);
    for (i, e) in evolutions.iter().enumerate() {
        pulse_form = &pulses[schedule.sequence()[i]] * (e * pulse_form);
        frame_form = frames[i].conjugate(e) * frame_form;
    }
    let distance = phase_aligned_distance(&pulse_form, &frame_form);
    Ok(EquivalenceReport {
        distance,
        pass: distance <= EQUIVALENCE_TOL,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::compiler::{compile_bipartite, compile_qubit_network, compile_single_node, Scenario};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    /// Independent construction: single-node `X^a Z^b` from explicit shift and
    /// clock matrices, then Kronecker products node by node.
    fn oracle_node(d: usize, a: u32, b: u32) -> CMatrix {
        let w = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / d as f64);
        let shift = CMatrix::from_fn(d, d, |i, j| if j == (i + 1) % d { c(1., 0.) } else { c(0., 0.) });
        let clock = CMatrix::from_fn(d, d, |i, j| if i == j { w.powu(i as u32) } else { c(0., 0.) });
        let mut m = CMatrix::identity(d, d);
        for _ in 0..a {
            m = &m * &shift;
        }
        for _ in 0..b {
            m = &m * &clock;
        }
        m
    }

    fn oracle_hamiltonian(h: &PairHamiltonian) -> CMatrix {
        let d = h.spec().dim() as usize;
        let dim = d.pow(h.spec().nodes() as u32);
        let mut total = CMatrix::zeros(dim, dim);
        for t in h.local_terms().iter().chain(h.coupling_terms()) {
            let mut l = CMatrix::identity(1, 1);
            for &(a, b) in t.label.nodes() {
                l = l.kronecker(&oracle_node(d, a, b));
            }
            let herm = (&l + l.adjoint()) * c(t.c / 2.0, 0.0);
            let anti = (&l - l.adjoint()) * c(0.0, t.c_prime / 2.0);
            total += herm + anti;
        }
        total
    }

    fn qubit(a: u32, b: u32) -> PauliLabel {
        PauliLabel::new(2, [(a, b)])
    }

    #[test]
    fn random_hamiltonian_contract() {
        let spec = NodeSpec::new(3, 2).unwrap();
        let h1 = random_pair_hamiltonian(spec, 11);
        let h2 = random_pair_hamiltonian(spec, 11);
        assert_eq!(h1, h2);
        assert_ne!(h1, random_pair_hamiltonian(spec, 12));
        assert_eq!(h1.local_terms().len(), 9);
        assert_eq!(h1.coupling_terms().len(), 27);
        let m = hamiltonian_matrix(&h1).unwrap();
        assert!((&m - m.adjoint()).norm() < 1e-12);
        assert!(m.trace().norm() < 1e-12);
        let single = random_pair_hamiltonian(NodeSpec::new(1, 3).unwrap(), 0);
        assert!(single.coupling_terms().is_empty());
        assert!(h1.local_terms().iter().chain(h1.coupling_terms()).all(|t| (-1.0..=1.0).contains(&t.c)));
    }

    #[test]
    fn hamiltonian_examples() {
        let spec = NodeSpec::new(2, 3).unwrap();
        let zero = hamiltonian_matrix(&PairHamiltonian::zero(spec)).unwrap();
        assert_eq!(zero.norm(), 0.0);
        let spec1 = NodeSpec::new(1, 2).unwrap();
        let hx = PairHamiltonian::new(
            spec1,
            vec![Term { label: qubit(1, 0), c: 1.0, c_prime: 0.0 }],
            vec![],
        )
        .unwrap();
        let m = hamiltonian_matrix(&hx).unwrap();
        assert!((m - oracle_node(2, 1, 0)).norm() < 1e-15);
    }

    #[test]
    fn hamiltonian_matches_kronecker_oracle() {
        for (n, d, seed) in [(3, 2, 1), (2, 3, 2), (2, 4, 3), (1, 6, 4), (4, 2, 5)] {
            let h = random_pair_hamiltonian(NodeSpec::new(n, d).unwrap(), seed);
            let got = hamiltonian_matrix(&h).unwrap();
            assert!((got - oracle_hamiltonian(&h)).norm() < 1e-12, "n={n} d={d}");
        }
    }

    #[test]
    fn average_examples() {
        let s = compile_single_node(2).unwrap();
        let spec = s.spec();
        let z = PairHamiltonian::new(spec, vec![Term { label: qubit(0, 1), c: 1.0, c_prime: 0.0 }], vec![]).unwrap();
        assert!(average_hamiltonian(&s, &z).unwrap().norm() < 1e-12);

        let trivial = PulseSchedule::new(Scenario::Single, spec, 1, vec![spec.identity()], vec![0]).unwrap();
        let h = random_pair_hamiltonian(spec, 3);
        let avg = average_hamiltonian(&trivial, &h).unwrap();
        assert!((avg - hamiltonian_matrix(&h).unwrap()).norm() < 1e-15);
    }

    #[test]
    fn average_matches_dense_conjugation() {
        let s = compile_qubit_network(3).unwrap();
        let h = random_pair_hamiltonian(s.spec(), 8);
        let m = hamiltonian_matrix(&h).unwrap();
        let mut dense = CMatrix::zeros(m.nrows(), m.ncols());
        for f in s.frames() {
            let mut u = CMatrix::identity(1, 1);
            for &(a, b) in f.nodes() {
                u = u.kronecker(&oracle_node(2, a, b));
            }
            dense += u.adjoint() * &m * &u;
        }
        dense /= c(s.num_steps() as f64, 0.0);
        assert!((average_hamiltonian(&s, &h).unwrap() - dense).norm() < 1e-12);
    }

    #[test]
    fn five_qubit_residual() {
        let s = compile_qubit_network(5).unwrap();
        let h = random_pair_hamiltonian(s.spec(), 2024);
        let r = verify_decoupling(&s, &h, DEFAULT_TOL).unwrap();
        assert!(r.pass && r.residual <= 1e-10, "{r:?}");
    }

    #[test]
    fn zero_hamiltonian_passes() {
        let s = compile_bipartite(2).unwrap();
        let r = verify_decoupling(&s, &PairHamiltonian::zero(s.spec()), DEFAULT_TOL).unwrap();
        assert_eq!(r, DecouplingReport { residual: 0.0, pass: true });
    }

    #[test]
    fn deleted_frame_fails() {
        let s = compile_qubit_network(5).unwrap();
        let h = random_pair_hamiltonian(s.spec(), 1);
        let broken = s.with_frame_removed(6).unwrap();
        let r = verify_decoupling(&broken, &h, DEFAULT_TOL).unwrap();
        assert!(!r.pass && r.residual > 1e-3);
        let p = pairwise_verify(&broken);
        assert!(!p.pass && p.witness.is_some());
    }

    #[test]
    fn spec_mismatch() {
        let s = compile_single_node(2).unwrap();
        let h = random_pair_hamiltonian(NodeSpec::new(1, 3).unwrap(), 0);
        assert_eq!(verify_decoupling(&s, &h, 1e-10), Err(VerifyError::SpecMismatch));
    }

    #[test]
    fn pairwise_examples() {
        let r = pairwise_verify(&compile_bipartite(3).unwrap());
        assert!(r.pass);
        assert_eq!((r.pairs_checked, r.pair_lambda), (1, Some(1)));

        let r = pairwise_verify(&compile_qubit_network(21).unwrap());
        assert!(r.pass);
        assert_eq!((r.pairs_checked, r.pair_lambda, r.single_lambda), (210, Some(4), Some(16)));

        let r = pairwise_verify(&compile_single_node(4).unwrap());
        assert!(r.pass);
        assert_eq!((r.pairs_checked, r.pair_lambda, r.single_lambda), (0, None, Some(1)));
    }

    #[test]
    fn pairwise_detects_repeated_column() {
        // Frames I, X, I, X on one qubit: closure holds but Z, Y never occur.
        let spec = NodeSpec::new(1, 2).unwrap();
        let s = PulseSchedule::new(Scenario::Single, spec, 1, vec![qubit(1, 0)], vec![0, 0, 0, 0]).unwrap();
        let r = pairwise_verify(&s);
        assert!(!r.pass);
        let w = r.witness.unwrap();
        assert_eq!((w.nodes, w.symbols, w.count), (vec![0], vec![0], 2));
    }

    #[test]
    fn evolution_matches_pade_exponential() {
        let h = hamiltonian_matrix(&random_pair_hamiltonian(NodeSpec::new(2, 2).unwrap(), 5)).unwrap();
        for tau in [0.1, 0.7, 2.3] {
            let ours = &evolution_operators(&h, &[tau])[0];
            let pade = (&h * c(0.0, -tau)).exp();
            assert!((ours - pade).norm() < 1e-12, "tau={tau}");
        }
    }

    #[test]
    fn sequence_forms_agree() {
        for s in [compile_single_node(2).unwrap(), compile_single_node(3).unwrap()] {
            let h = random_pair_hamiltonian(s.spec(), 42);
            let t = SequenceTimes::random(s.num_steps(), 1.0, 9);
            let r = sequence_equivalence(&s, &h, &t).unwrap();
            assert!(r.pass, "{r:?}");
        }
        let s = compile_qubit_network(5).unwrap();
        let h = random_pair_hamiltonian(s.spec(), 7);
        let r = sequence_equivalence(&s, &h, &SequenceTimes::uniform(16, 1.0)).unwrap();
        assert!(r.pass, "{r:?}");
    }

    #[test]
    fn sequence_with_zero_hamiltonian_is_pulse_product() {
        let s = compile_bipartite(2).unwrap();
        let h = PairHamiltonian::zero(s.spec());
        let r = sequence_equivalence(&s, &h, &SequenceTimes::uniform(16, 1.0)).unwrap();
        assert!(r.pass);
        // and the pulse product is the identity up to phase
        let mut p = CMatrix::identity(4, 4);
        for &i in s.sequence() {
            p = label_monomial(s.spec(), &s.pulses()[i], 64).unwrap().to_dense() * p;
        }
        assert!(phase_aligned_distance(&p, &CMatrix::identity(4, 4)) < 1e-12);
    }

    #[test]
    fn sequence_input_errors() {
        let s = compile_single_node(2).unwrap();
        let h = random_pair_hamiltonian(s.spec(), 1);
        assert!(matches!(
            sequence_equivalence(&s, &h, &SequenceTimes::uniform(3, 1.0)),
            Err(VerifyError::TimesLength { got: 3, expected: 4 })
        ));
        assert_eq!(SequenceTimes::new(vec![1.0, 0.0]), Err(VerifyError::NonPositiveTime));
        assert!(SequenceTimes::new(vec![1.0, f64::NAN]).is_err());
    }
}
