//! Phase-free generalized Pauli labels on networks of `d`-dimensional nodes.
//!
//! A node label `(a, b)` stands for `X^a Z^b` with the shift
//! `X = Σ_i |i⟩⟨i+1|` and clock `Z = Σ_i ω^i |i⟩⟨i|`, `ω = exp(2πi/d)`.
//! Labels form the group Z_d^{2n}; adding labels multiplies operators up to
//! a global phase, which conjugation ignores.

use std::f64::consts::PI;
use std::fmt;

use nalgebra::DMatrix;
use num_complex::Complex64;
use thiserror::Error;

/// Default bound on the Hilbert-space dimension of dense matrices.
pub const DENSE_DIM_CAP: usize = 8192;

/// Environment variable overriding [`DENSE_DIM_CAP`].
pub const DENSE_CAP_ENV: &str = "DECOUPLE_CAP_DENSE";

pub type CMatrix = DMatrix<Complex64>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PauliError {
    #[error("node dimension d = {0} must be at least 2")]
    BadDimension(u32),
    #[error("node count must be at least 1")]
    NoNodes,
    #[error("dense dimension {dim} exceeds the cap of {cap}")]
    DenseCap { dim: u128, cap: usize },
    #[error("label shape mismatch: {0}")]
    Shape(String),
    #[error("matrix is {rows}x{cols}, expected {dim}x{dim}")]
    MatrixDim { rows: usize, cols: usize, dim: usize },
}

/// The dense-dimension cap, honouring [`DENSE_CAP_ENV`] when it parses.
pub fn dense_cap() -> usize {
    std::env::var(DENSE_CAP_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DENSE_DIM_CAP)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct NodeSpec {
    n: usize,
    d: u32,
}

impl NodeSpec {
    pub fn new(n: usize, d: u32) -> Result<Self, PauliError> {
        if d < 2 {
            return Err(PauliError::BadDimension(d));
        }
        if n == 0 {
            return Err(PauliError::NoNodes);
        }
        Ok(Self { n, d })
    }

    pub fn nodes(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> u32 {
        self.d
    }

    /// `d^n`, unbounded.
    pub fn hilbert_dim(&self) -> u128 {
        (self.d as u128).checked_pow(self.n as u32).unwrap_or(u128::MAX)
    }

    /// `d^n` when it is within `cap`.
    pub fn dense_dim(&self, cap: usize) -> Result<usize, PauliError> {
        let dim = self.hilbert_dim();
        if dim > cap as u128 {
            return Err(PauliError::DenseCap { dim, cap });
        }
        Ok(dim as usize)
    }

    pub fn identity(&self) -> PauliLabel {
        PauliLabel {
            d: self.d,
            nodes: vec![(0, 0); self.n],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PauliLabel {
    d: u32,
    nodes: Vec<(u32, u32)>,
}

impl PauliLabel {
    /// Builds a label, reducing every exponent mod `d`.
    pub fn new(d: u32, nodes: impl IntoIterator<Item = (u32, u32)>) -> Self {
        Self {
            d,
            nodes: nodes.into_iter().map(|(a, b)| (a % d, b % d)).collect(),
        }
    }

    /// `X^a Z^b` on `node`, identity elsewhere.
    pub fn single(spec: NodeSpec, node: usize, a: u32, b: u32) -> Self {
        let mut l = spec.identity();
        l.nodes[node] = (a % spec.d, b % spec.d);
        l
    }

    pub fn dim(&self) -> u32 {
        self.d
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[(u32, u32)] {
        &self.nodes
    }

    pub fn is_identity(&self) -> bool {
        self.nodes.iter().all(|&p| p == (0, 0))
    }

    /// Index `a·d + b` of node `i`, in `0..d²`.
    pub fn node_index(&self, i: usize) -> u32 {
        let (a, b) = self.nodes[i];
        a * self.d + b
    }

    pub fn matches(&self, spec: NodeSpec) -> bool {
        self.d == spec.d && self.nodes.len() == spec.n
    }

    /// Product up to phase: componentwise addition mod `d`.
    pub fn try_add(&self, other: &PauliLabel) -> Result<PauliLabel, PauliError> {
        if self.d != other.d || self.nodes.len() != other.nodes.len() {
            return Err(PauliError::Shape(format!(
                "{} nodes (d={}) vs {} nodes (d={})",
                self.nodes.len(),
                self.d,
                other.nodes.len(),
                other.d
            )));
        }
        Ok(PauliLabel {
            d: self.d,
            nodes: self
                .nodes
                .iter()
                .zip(&other.nodes)
                .map(|(&(a, b), &(c, e))| ((a + c) % self.d, (b + e) % self.d))
                .collect(),
        })
    }

    /// The inverse label (negation mod `d`).
    pub fn inverse(&self) -> PauliLabel {
        PauliLabel {
            d: self.d,
            nodes: self
                .nodes
                .iter()
                .map(|&(a, b)| ((self.d - a) % self.d, (self.d - b) % self.d))
                .collect(),
        }
    }
}

impl fmt::Display for PauliLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .nodes
            .iter()
            .map(|&(a, b)| {
                if self.d == 2 {
                    ["I", "Z", "X", "Y"][(2 * a + b) as usize].to_string()
                } else {
                    match (a, b) {
                        (0, 0) => "I".to_string(),
                        (a, 0) => format!("X^{a}"),
                        (0, b) => format!("Z^{b}"),
                        (a, b) => format!("X^{a} Z^{b}"),
                    }
                }
            })
            .collect();
        f.write_str(&parts.join(" ⊗ "))
    }
}

fn root_of_unity(d: u32, power: u64) -> Complex64 {
    let p = power % d as u64;
    Complex64::from_polar(1.0, 2.0 * PI * p as f64 / d as f64)
}

/// A matrix with exactly one nonzero entry per column: column `j` holds
/// `phases[j]` in row `rows[j]`. Every label matrix has this form.
#[derive(Debug, Clone, PartialEq)]
pub struct Monomial {
    rows: Vec<usize>,
    phases: Vec<Complex64>,
}

impl Monomial {
    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn to_dense(&self) -> CMatrix {
        let dim = self.dim();
        let mut m = CMatrix::zeros(dim, dim);
        for (col, (&row, &ph)) in self.rows.iter().zip(&self.phases).enumerate() {
            m[(row, col)] = ph;
        }
        m
    }

    /// `U† M U` in `O(dim²)`: entry `(i, j)` is `conj(φ_i) M[r_i, r_j] φ_j`.
    pub fn conjugate(&self, m: &CMatrix) -> CMatrix {
        let dim = self.dim();
        CMatrix::from_fn(dim, dim, |i, j| {
            self.phases[i].conj() * m[(self.rows[i], self.rows[j])] * self.phases[j]
        })
    }
}

/// Monomial form of a label matrix, node 0 leftmost in the tensor product.
pub fn label_monomial(spec: NodeSpec, label: &PauliLabel, cap: usize) -> Result<Monomial, PauliError> {
    if !label.matches(spec) {
        return Err(PauliError::Shape(format!(
            "label has {} nodes (d={}), spec has {} (d={})",
            label.len(),
            label.d,
            spec.n,
            spec.d
        )));
    }
    let dim = spec.dense_dim(cap)?;
    let d = spec.d as usize;
    let mut rows = Vec::with_capacity(dim);
    let mut phases = Vec::with_capacity(dim);
    // Column j = multi-index (j_0, ..., j_{n-1}), node 0 most significant.
    // X^a Z^b |j⟩ = ω^{b j} |j - a⟩.
    for col in 0..dim {
        let mut rest = col;
        let mut row = 0usize;
        let mut place = 1usize;
        let mut phase_power = 0u64;
        for &(a, b) in label.nodes.iter().rev() {
            let j = rest % d;
            rest /= d;
            let i = (j + d - a as usize) % d;
            row += i * place;
            place *= d;
            phase_power += b as u64 * j as u64;
        }
        rows.push(row);
        phases.push(root_of_unity(spec.d, phase_power));
    }
    Ok(Monomial { rows, phases })
}

/// Dense matrix of a label: tensor product of `X^a Z^b`, node 0 leftmost.
pub fn label_matrix(spec: NodeSpec, label: &PauliLabel) -> Result<CMatrix, PauliError> {
    label_matrix_with_cap(spec, label, dense_cap())
}

pub fn label_matrix_with_cap(
    spec: NodeSpec,
    label: &PauliLabel,
    cap: usize,
) -> Result<CMatrix, PauliError> {
    label_monomial(spec, label, cap).map(|m| m.to_dense())
}

/// All `d²` single-node labels `(i, j)`, row-major.
pub fn operator_basis(d: u32) -> Vec<PauliLabel> {
    (0..d)
        .flat_map(|i| (0..d).map(move |j| PauliLabel::new(d, [(i, j)])))
        .collect()
}

/// `(1/d²) Σ_U U† M U` over the single-node Pauli basis.
pub fn basis_average(d: u32, m: &CMatrix) -> Result<CMatrix, PauliError> {
    let spec = NodeSpec::new(1, d)?;
    let dim = d as usize;
    if m.nrows() != dim || m.ncols() != dim {
        return Err(PauliError::MatrixDim {
            rows: m.nrows(),
            cols: m.ncols(),
            dim,
        });
    }
    let mut acc = CMatrix::zeros(dim, dim);
    for label in operator_basis(d) {
        let u = label_matrix(spec, &label)?;
        acc += u.adjoint() * m * &u;
    }
    Ok(acc / Complex64::new((dim * dim) as f64, 0.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn one_qubit(a: u32, b: u32) -> CMatrix {
        label_matrix(NodeSpec::new(1, 2).unwrap(), &PauliLabel::new(2, [(a, b)])).unwrap()
    }

    #[test]
    fn qubit_matrices() {
        let x = CMatrix::from_row_slice(2, 2, &[c(0., 0.), c(1., 0.), c(1., 0.), c(0., 0.)]);
        assert_eq!(one_qubit(1, 0), x);
        let xz = CMatrix::from_row_slice(2, 2, &[c(0., 0.), c(-1., 0.), c(1., 0.), c(0., 0.)]);
        assert!((one_qubit(1, 1) - xz).norm() < 1e-15);
    }

    #[test]
    fn clock_d3() {
        let z = label_matrix(NodeSpec::new(1, 3).unwrap(), &PauliLabel::new(3, [(0, 1)])).unwrap();
        let w = Complex64::from_polar(1.0, 2.0 * PI / 3.0);
        let want = CMatrix::from_diagonal(&nalgebra::DVector::from_vec(vec![c(1., 0.), w, w * w]));
        assert!((z - want).norm() < 1e-15);
    }

    #[test]
    fn shift_convention() {
        // X = Σ |i⟩⟨i+1|: entry (i, i+1) is 1.
        let x = label_matrix(NodeSpec::new(1, 4).unwrap(), &PauliLabel::new(4, [(1, 0)])).unwrap();
        for i in 0..4 {
            assert_eq!(x[(i, (i + 1) % 4)], c(1., 0.));
        }
    }

    #[test]
    fn tensor_order() {
        // X ⊗ I on two qubits flips the most significant index.
        let spec = NodeSpec::new(2, 2).unwrap();
        let m = label_matrix(spec, &PauliLabel::single(spec, 0, 1, 0)).unwrap();
        assert_eq!(m[(2, 0)], c(1., 0.));
        assert_eq!(m[(0, 2)], c(1., 0.));
    }

    #[test]
    fn label_arithmetic() {
        let spec = NodeSpec::new(3, 2).unwrap();
        let x = PauliLabel::new(2, [(1, 0), (1, 1), (0, 1)]);
        assert_eq!(x.try_add(&spec.identity()).unwrap(), x);
        assert!(x.try_add(&x).unwrap().is_identity());
        assert!(x.try_add(&PauliLabel::new(2, [(1, 0)])).is_err());
        assert!(x.try_add(&PauliLabel::new(3, [(1, 0), (0, 0), (0, 0)])).is_err());
        let y = PauliLabel::new(5, [(2, 3)]);
        assert!(y.try_add(&y.inverse()).unwrap().is_identity());
    }

    #[test]
    fn rendering() {
        let l = PauliLabel::new(2, [(0, 0), (1, 0), (0, 1), (1, 1)]);
        assert_eq!(l.to_string(), "I ⊗ X ⊗ Z ⊗ Y");
        let q = PauliLabel::new(3, [(0, 0), (1, 0), (0, 2), (1, 2)]);
        assert_eq!(q.to_string(), "I ⊗ X^1 ⊗ Z^2 ⊗ X^1 Z^2");
    }

    #[test]
    fn basis_enumeration() {
        let b = operator_basis(2);
        let pairs: Vec<_> = b.iter().map(|l| l.nodes()[0]).collect();
        assert_eq!(pairs, vec![(0, 0), (0, 1), (1, 0), (1, 1)]);
        assert_eq!(operator_basis(3).len(), 9);
    }

    #[test]
    fn basis_linear_independence() {
        for d in 2..=6u32 {
            let spec = NodeSpec::new(1, d).unwrap();
            let vecs: Vec<CMatrix> = operator_basis(d)
                .iter()
                .map(|l| label_matrix(spec, l).unwrap())
                .collect();
            let k = vecs.len();
            let gram = CMatrix::from_fn(k, k, |i, j| vecs[i].dotc(&vecs[j]));
            // Hilbert-Schmidt orthogonality: gram = d·I; check nonsingularity via rank.
            assert_eq!(gram.rank(1e-9), k, "d={d}");
        }
    }

    #[test]
    fn basis_average_examples() {
        let z = one_qubit(0, 1);
        assert!(basis_average(2, &z).unwrap().norm() < 1e-15);
        let id = CMatrix::identity(2, 2);
        assert!((basis_average(2, &id).unwrap() - &id).norm() < 1e-15);
        assert!(matches!(
            basis_average(2, &CMatrix::identity(3, 3)),
            Err(PauliError::MatrixDim { .. })
        ));
    }

    fn random_matrix(dim: usize, seed: u64) -> CMatrix {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        CMatrix::from_fn(dim, dim, |_, _| c(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
    }

    #[test]
    fn depolarizing_identity() {
        for d in [2u32, 3, 4, 6] {
            for seed in 0..20 {
                let m = random_matrix(d as usize, seed);
                let tr = m.trace() / Complex64::new(d as f64, 0.0);
                let want = CMatrix::identity(d as usize, d as usize) * tr;
                let got = basis_average(d, &m).unwrap();
                assert!((got - want).norm() <= 1e-10 * m.norm(), "d={d} seed={seed}");
            }
        }
        // Hermitian d=3 case against (tr/3)·I at 1e-12
        let a = random_matrix(3, 99);
        let h = (&a + a.adjoint()) * c(0.5, 0.);
        let want = CMatrix::identity(3, 3) * (h.trace() / c(3., 0.));
        assert!((basis_average(3, &h).unwrap() - want).norm() < 1e-12);
    }

    #[test]
    fn dense_cap_enforced() {
        let spec = NodeSpec::new(14, 2).unwrap();
        assert!(matches!(
            label_matrix_with_cap(spec, &spec.identity(), DENSE_DIM_CAP),
            Err(PauliError::DenseCap { dim: 16384, cap: 8192 })
        ));
        assert!(NodeSpec::new(2, 1).is_err());
        assert!(NodeSpec::new(0, 2).is_err());
    }

    #[test]
    fn monomial_conjugation_matches_dense() {
        let spec = NodeSpec::new(2, 3).unwrap();
        let m = random_matrix(9, 4);
        for label in [PauliLabel::new(3, [(1, 2), (0, 1)]), PauliLabel::new(3, [(2, 0), (1, 1)])] {
            let mono = label_monomial(spec, &label, DENSE_DIM_CAP).unwrap();
            let u = mono.to_dense();
            let dense = u.adjoint() * &m * &u;
            assert!((mono.conjugate(&m) - dense).norm() < 1e-13);
        }
    }

    type LabelPair = (u32, Vec<(u32, u32)>, Vec<(u32, u32)>);

    fn arb_label_pair() -> impl Strategy<Value = LabelPair> {
        (2u32..=5, 1usize..=3).prop_flat_map(|(d, n)| {
            let node = (0..d, 0..d);
            (
                Just(d),
                proptest::collection::vec(node.clone(), n),
                proptest::collection::vec(node, n),
            )
        })
    }

    proptest! {
        #[test]
        fn unitary_and_homomorphic_up_to_phase((d, x, y) in arb_label_pair()) {
            let spec = NodeSpec::new(x.len(), d).unwrap();
            let (x, y) = (PauliLabel::new(d, x), PauliLabel::new(d, y));
            let mx = label_matrix(spec, &x).unwrap();
            let my = label_matrix(spec, &y).unwrap();
            let dim = mx.nrows();
            let id = CMatrix::identity(dim, dim);
            prop_assert!((mx.adjoint() * &mx - &id).norm() <= 1e-12);
            let sum = label_matrix(spec, &x.try_add(&y).unwrap()).unwrap();
            let prod = &mx * &my;
            // prod = phase · sum with |phase| = 1
            let phase = sum.dotc(&prod) / Complex64::new(dim as f64, 0.0);
            prop_assert!((phase.norm() - 1.0).abs() <= 1e-10);
            prop_assert!((prod - sum * phase).norm() <= 1e-10);
        }
    }
}
