//! Dimension-2 pseudotensor values and the contraction-diagram evaluator
//! behind every named invariant object.

mod basis;
mod diagram;
mod objects;

pub use basis::{transform_components, transform_form, BasisChange};
pub use diagram::{diagram_table, evaluate_diagram, Bond, ContractionDiagram, SlotRef};
pub use objects::{named_object, NamedObject, NAMED_OBJECTS};

use crate::algebra::Ring;
use std::fmt;

/// Index variance of one tensor slot.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Variance {
    Lower,
    Upper,
}

/// Errors from the tensor engine.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TensorError {
    /// A diagram node references an input that was not supplied.
    MissingInput(String),
    /// A diagram node's slot usage does not match the input tensor's rank.
    SlotArityMismatch {
        node: usize,
        expected: usize,
        found: usize,
    },
    /// A slot is used more than once or not at all.
    MalformedDiagram(String),
    /// Basis-change matrix is singular.
    SingularMatrix,
    /// Unknown named object.
    UnknownName(String),
}

impl fmt::Display for TensorError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TensorError::MissingInput(name) => write!(f, "missing diagram input '{name}'"),
            TensorError::SlotArityMismatch {
                node,
                expected,
                found,
            } => write!(
                f,
                "node {node}: diagram uses {found} slots but the input tensor has rank {expected}"
            ),
            TensorError::MalformedDiagram(msg) => write!(f, "malformed diagram: {msg}"),
            TensorError::SingularMatrix => write!(f, "singular basis-change matrix"),
            TensorError::UnknownName(name) => write!(f, "unknown named object '{name}'"),
        }
    }
}

impl std::error::Error for TensorError {}

/// Dense dimension-2 pseudotensor: 2^rank components indexed row-major with
/// index values {1,2} mapped to bits {0,1}, slot 1 most significant, plus a
/// variance per slot and an integer weight.
#[derive(Clone, PartialEq, Debug)]
pub struct Pseudotensor<R: Ring> {
    rank: usize,
    variances: Vec<Variance>,
    weight: i32,
    components: Vec<R>,
}

impl<R: Ring> Pseudotensor<R> {
    pub fn new(variances: Vec<Variance>, weight: i32, components: Vec<R>) -> Self {
        let rank = variances.len();
        assert_eq!(components.len(), 1usize << rank, "need 2^rank components");
        Pseudotensor {
            rank,
            variances,
            weight,
            components,
        }
    }

    /// Rank-0 tensor holding one scalar.
    pub fn scalar(value: R, weight: i32) -> Self {
        Pseudotensor {
            rank: 0,
            variances: Vec::new(),
            weight,
            components: vec![value],
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn weight(&self) -> i32 {
        self.weight
    }

    pub fn variances(&self) -> &[Variance] {
        &self.variances
    }

    pub fn components(&self) -> &[R] {
        &self.components
    }

    /// Flat component position of an index tuple (values 1 or 2).
    pub fn position(&self, indices: &[u8]) -> usize {
        assert_eq!(indices.len(), self.rank, "index arity mismatch");
        indices.iter().fold(0usize, |acc, &v| {
            debug_assert!(v == 1 || v == 2);
            (acc << 1) | usize::from(v - 1)
        })
    }

    pub fn component(&self, indices: &[u8]) -> &R {
        &self.components[self.position(indices)]
    }

    /// The scalar value of a rank-0 tensor.
    pub fn scalar_value(&self) -> &R {
        assert_eq!(self.rank, 0, "scalar_value on a tensor of positive rank");
        &self.components[0]
    }

    /// The fundamental skew-symmetric object with both indices lower,
    /// weight -1: components ((0, 1), (-1, 0)).
    pub fn fundamental_lower() -> Self {
        Pseudotensor::new(
            vec![Variance::Lower, Variance::Lower],
            -1,
            vec![R::zero(), R::one(), -R::one(), R::zero()],
        )
    }

    /// Its dual with both indices upper, weight +1, same matrix.
    pub fn fundamental_upper() -> Self {
        Pseudotensor::new(
            vec![Variance::Upper, Variance::Upper],
            1,
            vec![R::zero(), R::one(), -R::one(), R::zero()],
        )
    }
}

/// The symmetric rank-4, weight-0 coefficient tensor of a quartic form,
/// built from the five independent component values
/// (a1111, a1112, a1122, a1222, a2222): the component at an index tuple is
/// the value whose index multiset matches.
pub fn symmetric_form_tensor<R: Ring>(g: &[R; 5]) -> Pseudotensor<R> {
    let mut components = Vec::with_capacity(16);
    for idx in 0..16u32 {
        // number of 2s among the four indices picks the generator
        components.push(g[idx.count_ones() as usize].clone());
    }
    Pseudotensor::new(vec![Variance::Lower; 4], 0, components)
}
