//! Contraction diagrams: networks of tensor nodes joined by bonds, each bond
//! one factor of the upper-index fundamental pseudotensor. Diagrams are data;
//! a single generic evaluator computes them over any exact ring.

use super::{Pseudotensor, TensorError};
use crate::algebra::Ring;
use std::sync::OnceLock;

/// One slot of one node, slots numbered from 1.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SlotRef {
    pub node: usize,
    pub slot: usize,
}

impl SlotRef {
    pub const fn new(node: usize, slot: usize) -> Self {
        SlotRef { node, slot }
    }
}

/// A bond contracts two slots through one factor of the fundamental
/// upper-index pseudotensor: the assignment (k, j) = (1, 2) contributes +1
/// and (2, 1) contributes -1, where `k` is the first endpoint.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Bond {
    pub k: SlotRef,
    pub j: SlotRef,
}

/// A contraction diagram: an ordered list of nodes (each naming its input
/// tensor), the bonds, and the ordered free slots defining the output index
/// order. Every slot of every node must appear in exactly one bond endpoint
/// or exactly once among the free slots.
#[derive(Clone, PartialEq, Debug)]
pub struct ContractionDiagram {
    pub name: &'static str,
    pub nodes: Vec<&'static str>,
    pub bonds: Vec<Bond>,
    pub free: Vec<SlotRef>,
    /// Declared weight, auditable against the computed one.
    pub weight: i32,
}

impl ContractionDiagram {
    fn from_def(def: &DiagramDef) -> Self {
        ContractionDiagram {
            name: def.name,
            nodes: def.nodes.to_vec(),
            bonds: def
                .bonds
                .iter()
                .map(|&((kn, ks), (jn, js))| Bond {
                    k: SlotRef::new(kn, ks),
                    j: SlotRef::new(jn, js),
                })
                .collect(),
            free: def.free.iter().map(|&(n, s)| SlotRef::new(n, s)).collect(),
            weight: def.weight,
        }
    }
}

/// Bond endpoints in the constant table: ((k node, k slot), (j node, j slot)).
type BondDef = ((usize, usize), (usize, usize));

struct DiagramDef {
    name: &'static str,
    nodes: &'static [&'static str],
    bonds: &'static [BondDef],
    free: &'static [(usize, usize)],
    weight: i32,
}

/// Chain bonds shared by the 2-, 3-, 4- and 6-node cyclic diagrams: node m
/// binds its fourth slot to the third slot of node m+1, wrapping around.
const fn chain(n: usize, m: usize) -> BondDef {
    ((m, 4), ((m + 1) % n, 3))
}

const B_BONDS: [BondDef; 2] = [chain(2, 0), chain(2, 1)];
const C_BONDS: [BondDef; 3] = [chain(3, 0), chain(3, 1), chain(3, 2)];
const D_BONDS: [BondDef; 4] = [chain(4, 0), chain(4, 1), chain(4, 2), chain(4, 3)];
const E_BONDS: [BondDef; 6] = [
    chain(6, 0),
    chain(6, 1),
    chain(6, 2),
    chain(6, 3),
    chain(6, 4),
    chain(6, 5),
];
const EPS0_E_BONDS: [BondDef; 12] = [
    chain(6, 0),
    chain(6, 1),
    chain(6, 2),
    chain(6, 3),
    chain(6, 4),
    chain(6, 5),
    // outer ring pairing the would-be free slots of the chain
    ((0, 2), (1, 1)),
    ((1, 2), (2, 1)),
    ((2, 2), (3, 1)),
    ((3, 2), (4, 1)),
    ((4, 2), (5, 1)),
    ((0, 1), (5, 2)),
];

const DEFS: [DiagramDef; 22] = [
    DiagramDef {
        name: "B",
        nodes: &["A", "A"],
        bonds: &B_BONDS,
        free: &[(0, 1), (0, 2), (1, 1), (1, 2)],
        weight: 2,
    },
    DiagramDef {
        name: "Bhat",
        nodes: &["B"],
        bonds: &[((0, 2), (0, 4))],
        free: &[(0, 1), (0, 3)],
        weight: 3,
    },
    DiagramDef {
        name: "beta",
        nodes: &["B"],
        bonds: &[((0, 1), (0, 3)), ((0, 2), (0, 4))],
        free: &[],
        weight: 4,
    },
    DiagramDef {
        name: "C",
        nodes: &["A", "A", "A"],
        bonds: &C_BONDS,
        free: &[(0, 1), (0, 2), (1, 1), (1, 2), (2, 1), (2, 2)],
        weight: 3,
    },
    DiagramDef {
        name: "Chat",
        nodes: &["B", "A"],
        bonds: &[((0, 4), (1, 4))],
        free: &[(0, 1), (0, 2), (0, 3), (1, 1), (1, 2), (1, 3)],
        weight: 3,
    },
    DiagramDef {
        name: "Ccheck",
        nodes: &["C"],
        bonds: &[((0, 4), (0, 2))],
        free: &[(0, 1), (0, 3), (0, 5), (0, 6)],
        weight: 4,
    },
    DiagramDef {
        name: "gamma",
        nodes: &["C"],
        bonds: &[((0, 2), (0, 3)), ((0, 4), (0, 5)), ((0, 6), (0, 1))],
        free: &[],
        weight: 6,
    },
    DiagramDef {
        name: "D",
        nodes: &["A", "A", "A", "A"],
        bonds: &D_BONDS,
        free: &[
            (0, 1),
            (0, 2),
            (1, 1),
            (1, 2),
            (2, 1),
            (2, 2),
            (3, 1),
            (3, 2),
        ],
        weight: 4,
    },
    DiagramDef {
        name: "delta",
        nodes: &["D"],
        bonds: &[
            ((0, 2), (0, 3)),
            ((0, 4), (0, 5)),
            ((0, 6), (0, 7)),
            ((0, 8), (0, 1)),
        ],
        free: &[],
        weight: 8,
    },
    DiagramDef {
        name: "E",
        nodes: &["A", "A", "A", "A", "A", "A"],
        bonds: &E_BONDS,
        free: &[
            (0, 1),
            (0, 2),
            (1, 1),
            (1, 2),
            (2, 1),
            (2, 2),
            (3, 1),
            (3, 2),
            (4, 1),
            (4, 2),
            (5, 1),
            (5, 2),
        ],
        weight: 6,
    },
    DiagramDef {
        name: "eps0_via_E",
        nodes: &["A", "A", "A", "A", "A", "A"],
        bonds: &EPS0_E_BONDS,
        free: &[],
        weight: 12,
    },
    DiagramDef {
        name: "eps0_via_B",
        nodes: &["B", "B", "B"],
        bonds: &[
            ((0, 3), (1, 1)),
            ((0, 4), (1, 2)),
            ((1, 3), (2, 1)),
            ((1, 4), (2, 2)),
            ((2, 3), (0, 1)),
            ((2, 4), (0, 2)),
        ],
        free: &[],
        weight: 12,
    },
    DiagramDef {
        name: "eps1",
        nodes: &["C", "C"],
        bonds: &[
            ((1, 1), (0, 1)),
            ((1, 2), (0, 3)),
            ((1, 3), (0, 4)),
            ((1, 4), (0, 5)),
            ((1, 5), (0, 6)),
            ((1, 6), (0, 2)),
        ],
        free: &[],
        weight: 12,
    },
    DiagramDef {
        name: "eps2",
        nodes: &["Chat", "C"],
        bonds: &[
            ((1, 1), (0, 1)),
            ((1, 2), (0, 4)),
            ((1, 3), (0, 3)),
            ((1, 4), (0, 5)),
            ((1, 5), (0, 6)),
            ((1, 6), (0, 2)),
        ],
        free: &[],
        weight: 12,
    },
    DiagramDef {
        name: "eps3",
        nodes: &["Chat", "Chat"],
        bonds: &[
            ((0, 6), (0, 1)),
            ((1, 6), (0, 2)),
            ((1, 5), (0, 3)),
            ((1, 3), (0, 4)),
            ((1, 2), (0, 5)),
            ((1, 1), (1, 4)),
        ],
        free: &[],
        weight: 12,
    },
    DiagramDef {
        name: "eps4",
        nodes: &["Chat", "Chat"],
        bonds: &[
            ((0, 6), (0, 1)),
            ((1, 5), (0, 2)),
            ((1, 3), (0, 3)),
            ((1, 1), (0, 4)),
            ((1, 6), (0, 5)),
            ((1, 2), (1, 4)),
        ],
        free: &[],
        weight: 12,
    },
    DiagramDef {
        name: "eps5",
        nodes: &["Chat", "Chat"],
        bonds: &[
            ((0, 6), (0, 1)),
            ((1, 6), (1, 3)),
            ((1, 1), (0, 2)),
            ((1, 2), (0, 5)),
            ((1, 4), (0, 3)),
            ((1, 5), (0, 4)),
        ],
        free: &[],
        weight: 12,
    },
    DiagramDef {
        name: "eps6",
        nodes: &["Chat", "Chat"],
        bonds: &[
            ((0, 6), (0, 3)),
            ((1, 6), (1, 3)),
            ((1, 1), (0, 1)),
            ((1, 4), (0, 2)),
            ((1, 2), (0, 4)),
            ((1, 5), (0, 5)),
        ],
        free: &[],
        weight: 12,
    },
    DiagramDef {
        name: "eps7",
        nodes: &["Chat", "Chat"],
        bonds: &[
            ((0, 6), (0, 1)),
            ((1, 6), (1, 1)),
            ((1, 4), (0, 3)),
            ((1, 3), (0, 4)),
            ((1, 5), (0, 5)),
            ((1, 2), (0, 2)),
        ],
        free: &[],
        weight: 12,
    },
    DiagramDef {
        name: "eps8",
        nodes: &["Chat", "Chat"],
        bonds: &[
            ((0, 6), (0, 1)),
            ((1, 6), (1, 1)),
            ((1, 2), (0, 2)),
            ((1, 3), (0, 3)),
            ((1, 4), (0, 4)),
            ((1, 5), (0, 5)),
        ],
        free: &[],
        weight: 12,
    },
    DiagramDef {
        name: "eps9",
        nodes: &["Chat", "Chat"],
        bonds: &[
            ((0, 6), (0, 1)),
            ((1, 3), (1, 6)),
            ((1, 1), (0, 2)),
            ((1, 2), (0, 3)),
            ((1, 4), (0, 4)),
            ((1, 5), (0, 5)),
        ],
        free: &[],
        weight: 12,
    },
    DiagramDef {
        name: "eps10",
        nodes: &["Chat", "Chat"],
        bonds: &[
            ((1, 1), (0, 1)),
            ((1, 4), (0, 2)),
            ((1, 3), (0, 3)),
            ((1, 5), (0, 4)),
            ((1, 6), (0, 5)),
            ((1, 2), (0, 6)),
        ],
        free: &[],
        weight: 12,
    },
];

/// The full diagram table, one entry per named contraction.
pub fn diagram_table() -> &'static [ContractionDiagram] {
    static TABLE: OnceLock<Vec<ContractionDiagram>> = OnceLock::new();
    TABLE.get_or_init(|| DEFS.iter().map(ContractionDiagram::from_def).collect())
}

/// Looks up one diagram by name.
pub fn diagram(name: &str) -> Option<&'static ContractionDiagram> {
    diagram_table().iter().find(|d| d.name == name)
}

/// Where one merged slot's index bit comes from during a node merge.
#[derive(Clone, Copy)]
enum BitSource {
    /// Free in the merged result: bit position in the output index.
    Out(usize),
    /// First endpoint of a contracted bond: 0 for the (1,2) assignment.
    BondK(usize),
    /// Second endpoint: the complement bit of the same bond.
    BondJ(usize),
}

/// Evaluates a diagram on named input tensors. The output has one slot per
/// free slot (in the diagram's order), weight equal to the sum of the input
/// weights plus one per bond, and components given by the exact multiple sum
/// over all bond index assignments.
pub fn evaluate_diagram<R: Ring>(
    diagram: &ContractionDiagram,
    inputs: &[(&str, &Pseudotensor<R>)],
) -> Result<Pseudotensor<R>, TensorError> {
    let lookup = |name: &str| -> Result<&Pseudotensor<R>, TensorError> {
        inputs
            .iter()
            .find(|(n, _)| *n == name)
            .map(|(_, t)| *t)
            .ok_or_else(|| TensorError::MissingInput(name.to_string()))
    };
    let tensors: Vec<&Pseudotensor<R>> = diagram
        .nodes
        .iter()
        .map(|n| lookup(n))
        .collect::<Result<_, _>>()?;

    validate(diagram, &tensors)?;

    // Fold nodes in one at a time, contracting every bond as soon as both of
    // its endpoints are present. Equivalent by distributivity to the direct
    // sum over all bond assignments, but never materializes more than the
    // widest contracted intermediate tensor.
    let mut open: Vec<SlotRef> = Vec::new();
    let mut comps: Vec<R> = vec![R::one()];
    let mut done = vec![false; diagram.bonds.len()];
    for (n, t) in tensors.iter().enumerate() {
        (open, comps) = merge_node(diagram, &mut done, open, comps, n, t);
    }

    // reorder the surviving slots into the declared free order
    if open.len() != diagram.free.len() {
        return Err(TensorError::MalformedDiagram(format!(
            "{} slots remain open but {} are declared free",
            open.len(),
            diagram.free.len()
        )));
    }
    let l = open.len();
    let mut perm = Vec::with_capacity(l);
    for f in &diagram.free {
        let p = open
            .iter()
            .position(|s| s == f)
            .ok_or_else(|| TensorError::MalformedDiagram(format!("free slot {f:?} not open")))?;
        perm.push(p);
    }
    let mut out = Vec::with_capacity(comps.len());
    for idx in 0..comps.len() {
        let mut old = 0usize;
        for (i, &p) in perm.iter().enumerate() {
            let bit = (idx >> (l - 1 - i)) & 1;
            old |= bit << (l - 1 - p);
        }
        out.push(comps[old].clone());
    }

    let weight = tensors.iter().map(|t| t.weight()).sum::<i32>() + diagram.bonds.len() as i32;
    let variances = diagram
        .free
        .iter()
        .map(|f| tensors[f.node].variances()[f.slot - 1])
        .collect();
    Ok(Pseudotensor::new(variances, weight, out))
}

/// Merges node `n` into the partial tensor, contracting in the same pass
/// every not-yet-done bond whose endpoints are all available afterwards.
/// Returns the new open-slot list and components.
fn merge_node<R: Ring>(
    diagram: &ContractionDiagram,
    done: &mut [bool],
    open: Vec<SlotRef>,
    comps: Vec<R>,
    n: usize,
    t: &Pseudotensor<R>,
) -> (Vec<SlotRef>, Vec<R>) {
    let rank_n = t.rank();
    let merged: Vec<SlotRef> = open
        .iter()
        .copied()
        .chain((1..=rank_n).map(|s| SlotRef::new(n, s)))
        .collect();
    let ready: Vec<usize> = diagram
        .bonds
        .iter()
        .enumerate()
        .filter(|(b, bond)| !done[*b] && merged.contains(&bond.k) && merged.contains(&bond.j))
        .map(|(b, _)| b)
        .collect();
    for &b in &ready {
        done[b] = true;
    }
    let is_bound = |s: &SlotRef| {
        ready
            .iter()
            .any(|&b| diagram.bonds[b].k == *s || diagram.bonds[b].j == *s)
    };
    let out_open: Vec<SlotRef> = merged.iter().copied().filter(|s| !is_bound(s)).collect();

    // per merged slot: where its bit comes from, and whether it indexes the
    // old partial tensor or the incoming node
    let out_len = out_open.len();
    let sources: Vec<BitSource> = merged
        .iter()
        .map(|s| {
            if let Some(pos) = ready.iter().position(|&b| diagram.bonds[b].k == *s) {
                BitSource::BondK(pos)
            } else if let Some(pos) = ready.iter().position(|&b| diagram.bonds[b].j == *s) {
                BitSource::BondJ(pos)
            } else {
                BitSource::Out(out_open.iter().position(|o| o == s).expect("free slot"))
            }
        })
        .collect();
    let old_len = open.len();

    let mut next = vec![R::zero(); 1usize << out_len];
    for (out_idx, slot_value) in next.iter_mut().enumerate() {
        for bond_assign in 0..1usize << ready.len() {
            let mut old_idx = 0usize;
            let mut node_idx = 0usize;
            for (pos, src) in sources.iter().enumerate() {
                let bit = match *src {
                    BitSource::Out(p) => (out_idx >> (out_len - 1 - p)) & 1,
                    // bond bit 0 means the (k, j) = (1, 2) assignment
                    BitSource::BondK(b) => (bond_assign >> b) & 1,
                    BitSource::BondJ(b) => 1 - ((bond_assign >> b) & 1),
                };
                if pos < old_len {
                    old_idx |= bit << (old_len - 1 - pos);
                } else {
                    node_idx |= bit << (rank_n - 1 - (pos - old_len));
                }
            }
            let base = &comps[old_idx];
            let factor = &t.components()[node_idx];
            if base.is_zero() || factor.is_zero() {
                continue;
            }
            let product = base.clone() * factor.clone();
            // each (2, 1) assignment contributes a factor of -1
            if (bond_assign.count_ones() & 1) == 1 {
                *slot_value = slot_value.clone() - product;
            } else {
                *slot_value = slot_value.clone() + product;
            }
        }
    }
    (out_open, next)
}

/// Structural validation: ranks match and every slot is used exactly once.
fn validate<R: Ring>(
    diagram: &ContractionDiagram,
    tensors: &[&Pseudotensor<R>],
) -> Result<(), TensorError> {
    let mut seen: Vec<Vec<u32>> = tensors.iter().map(|t| vec![0; t.rank()]).collect();
    let mut mark = |s: &SlotRef| -> Result<(), TensorError> {
        let node_slots = seen.get_mut(s.node).ok_or_else(|| {
            TensorError::MalformedDiagram(format!("node {} out of range", s.node))
        })?;
        if s.slot == 0 || s.slot > node_slots.len() {
            return Err(TensorError::SlotArityMismatch {
                node: s.node,
                expected: node_slots.len(),
                found: s.slot,
            });
        }
        node_slots[s.slot - 1] += 1;
        Ok(())
    };
    for bond in &diagram.bonds {
        mark(&bond.k)?;
        mark(&bond.j)?;
    }
    for f in &diagram.free {
        mark(f)?;
    }
    for (n, slots) in seen.iter().enumerate() {
        for (s, &count) in slots.iter().enumerate() {
            if count != 1 {
                return Err(TensorError::MalformedDiagram(format!(
                    "node {n} slot {} used {count} times",
                    s + 1
                )));
            }
        }
    }
    Ok(())
}
