//! The named invariant objects, each produced by a fixed contraction diagram
//! over the symmetric coefficient tensor (directly, or through the
//! intermediate pair/triple/quadruple contractions it is defined from).

use super::diagram::{diagram, evaluate_diagram};
use super::{Pseudotensor, TensorError};
use crate::algebra::Ring;

/// Every named contraction of the coefficient tensor.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum NamedObject {
    B,
    Bhat,
    C,
    Chat,
    Ccheck,
    D,
    E,
    Beta,
    Gamma,
    Delta,
    Eps0ViaE,
    Eps0ViaB,
    Eps1,
    Eps2,
    Eps3,
    Eps4,
    Eps5,
    Eps6,
    Eps7,
    Eps8,
    Eps9,
    Eps10,
}

/// All named objects in a fixed presentation order.
pub const NAMED_OBJECTS: [NamedObject; 22] = [
    NamedObject::B,
    NamedObject::Bhat,
    NamedObject::C,
    NamedObject::Chat,
    NamedObject::Ccheck,
    NamedObject::D,
    NamedObject::E,
    NamedObject::Beta,
    NamedObject::Gamma,
    NamedObject::Delta,
    NamedObject::Eps0ViaE,
    NamedObject::Eps0ViaB,
    NamedObject::Eps1,
    NamedObject::Eps2,
    NamedObject::Eps3,
    NamedObject::Eps4,
    NamedObject::Eps5,
    NamedObject::Eps6,
    NamedObject::Eps7,
    NamedObject::Eps8,
    NamedObject::Eps9,
    NamedObject::Eps10,
];

impl NamedObject {
    /// The diagram-table name of the final contraction.
    pub fn diagram_name(self) -> &'static str {
        match self {
            NamedObject::B => "B",
            NamedObject::Bhat => "Bhat",
            NamedObject::C => "C",
            NamedObject::Chat => "Chat",
            NamedObject::Ccheck => "Ccheck",
            NamedObject::D => "D",
            NamedObject::E => "E",
            NamedObject::Beta => "beta",
            NamedObject::Gamma => "gamma",
            NamedObject::Delta => "delta",
            NamedObject::Eps0ViaE => "eps0_via_E",
            NamedObject::Eps0ViaB => "eps0_via_B",
            NamedObject::Eps1 => "eps1",
            NamedObject::Eps2 => "eps2",
            NamedObject::Eps3 => "eps3",
            NamedObject::Eps4 => "eps4",
            NamedObject::Eps5 => "eps5",
            NamedObject::Eps6 => "eps6",
            NamedObject::Eps7 => "eps7",
            NamedObject::Eps8 => "eps8",
            NamedObject::Eps9 => "eps9",
            NamedObject::Eps10 => "eps10",
        }
    }

    pub fn parse(name: &str) -> Option<NamedObject> {
        NAMED_OBJECTS
            .iter()
            .copied()
            .find(|o| o.diagram_name() == name)
    }
}

/// Evaluates a named object on the rank-4 symmetric weight-0 tensor,
/// computing whatever intermediate contractions the defining diagram needs.
pub fn named_object<R: Ring>(
    which: NamedObject,
    a: &Pseudotensor<R>,
) -> Result<Pseudotensor<R>, TensorError> {
    if a.rank() != 4 || a.weight() != 0 {
        return Err(TensorError::SlotArityMismatch {
            node: 0,
            expected: 4,
            found: a.rank(),
        });
    }
    let get = |name: &'static str| diagram(name).expect("diagram table is complete");
    let eval_on_a = |name: &'static str| evaluate_diagram(get(name), &[("A", a)]);
    let out = match which {
        NamedObject::B
        | NamedObject::C
        | NamedObject::D
        | NamedObject::E
        | NamedObject::Eps0ViaE => eval_on_a(which.diagram_name())?,
        NamedObject::Bhat | NamedObject::Beta | NamedObject::Eps0ViaB => {
            let b = eval_on_a("B")?;
            evaluate_diagram(get(which.diagram_name()), &[("B", &b)])?
        }
        NamedObject::Chat => {
            let b = eval_on_a("B")?;
            evaluate_diagram(get("Chat"), &[("B", &b), ("A", a)])?
        }
        NamedObject::Ccheck | NamedObject::Gamma | NamedObject::Eps1 => {
            let c = eval_on_a("C")?;
            evaluate_diagram(get(which.diagram_name()), &[("C", &c)])?
        }
        NamedObject::Delta => {
            let d = eval_on_a("D")?;
            evaluate_diagram(get("delta"), &[("D", &d)])?
        }
        NamedObject::Eps2 => {
            let b = eval_on_a("B")?;
            let chat = evaluate_diagram(get("Chat"), &[("B", &b), ("A", a)])?;
            let c = eval_on_a("C")?;
            evaluate_diagram(get("eps2"), &[("Chat", &chat), ("C", &c)])?
        }
        NamedObject::Eps3
        | NamedObject::Eps4
        | NamedObject::Eps5
        | NamedObject::Eps6
        | NamedObject::Eps7
        | NamedObject::Eps8
        | NamedObject::Eps9
        | NamedObject::Eps10 => {
            let b = eval_on_a("B")?;
            let chat = evaluate_diagram(get("Chat"), &[("B", &b), ("A", a)])?;
            evaluate_diagram(get(which.diagram_name()), &[("Chat", &chat)])?
        }
    };
    debug_assert_eq!(out.weight(), get(which.diagram_name()).weight);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, rat_int, MultiPoly, Rational};
    use crate::tensor::symmetric_form_tensor;

    fn a_tensor(v: [(i64, i64); 5]) -> Pseudotensor<Rational> {
        symmetric_form_tensor(&v.map(|(n, d)| rat(n, d)))
    }

    fn scalar(which: NamedObject, a: &Pseudotensor<Rational>) -> Rational {
        named_object(which, a).unwrap().scalar_value().clone()
    }

    #[test]
    fn pseudoscalars_on_simple_forms() {
        let quartic_sum = a_tensor([(1, 1), (0, 1), (0, 1), (0, 1), (1, 1)]);
        assert_eq!(scalar(NamedObject::Beta, &quartic_sum), rat_int(-2));
        assert_eq!(scalar(NamedObject::Delta, &quartic_sum), rat_int(2));
        assert_eq!(scalar(NamedObject::Eps0ViaB, &quartic_sum), rat_int(-2));
        assert_eq!(scalar(NamedObject::Eps0ViaE, &quartic_sum), rat_int(-2));

        let circle_sq = a_tensor([(1, 1), (0, 1), (1, 3), (0, 1), (1, 1)]);
        assert_eq!(scalar(NamedObject::Gamma, &circle_sq), rat(16, 9));
        let d = named_object(NamedObject::D, &circle_sq).unwrap();
        assert_eq!(d.component(&[1; 8]), &rat(2, 9));
    }

    #[test]
    fn frozen_values_on_asymmetric_form() {
        let a = a_tensor([(1, 1), (1, 2), (1, 3), (1, 4), (2, 1)]);
        assert_eq!(scalar(NamedObject::Beta, &a), rat(-11, 3));
        assert_eq!(scalar(NamedObject::Gamma, &a), rat(65, 72));
        assert_eq!(scalar(NamedObject::Delta, &a), rat(121, 18));
        assert_eq!(scalar(NamedObject::Eps0ViaB, &a), rat(-195889, 15552));
        assert_eq!(scalar(NamedObject::Eps0ViaE, &a), rat(-195889, 15552));
        assert_eq!(scalar(NamedObject::Eps5, &a), rat(-4225, 31104));
        let chat = named_object(NamedObject::Chat, &a).unwrap();
        assert_eq!(chat.component(&[1; 6]), &rat_int(0));
        let d = named_object(NamedObject::D, &a).unwrap();
        assert_eq!(d.component(&[1; 8]), &rat(1, 72));
        assert_eq!(d.component(&[2; 8]), &rat(841, 1152));
        let e = named_object(NamedObject::E, &a).unwrap();
        assert_eq!(e.component(&[1; 12]), &rat(-1, 864));
    }

    #[test]
    fn symbolic_pair_contraction_is_pair_symmetric() {
        let a = symmetric_form_tensor(&MultiPoly::generators());
        let b = named_object(NamedObject::B, &a).unwrap();
        for i in 0u16..16 {
            let idx: Vec<u8> = (0..4).map(|s| ((i >> (3 - s)) & 1) as u8 + 1).collect();
            let swapped_first = [idx[1], idx[0], idx[2], idx[3]];
            let swapped_second = [idx[0], idx[1], idx[3], idx[2]];
            assert_eq!(b.component(&idx), b.component(&swapped_first));
            assert_eq!(b.component(&idx), b.component(&swapped_second));
        }
    }

    #[test]
    fn rejects_wrong_input_shape() {
        let d: Pseudotensor<Rational> = Pseudotensor::fundamental_upper();
        assert!(named_object(NamedObject::B, &d).is_err());
        assert_eq!(NamedObject::parse("eps7"), Some(NamedObject::Eps7));
        assert_eq!(NamedObject::parse("nope"), None);
    }
}
