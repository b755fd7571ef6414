//! The classification of connected graphs with λ₂ < −2929/5000: purely
//! structural recognition (complete graph, or an apex joined to 2–4
//! cliques whose sizes satisfy the characterization's conditions) next to
//! the certified spectral decision, with an agreement record.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::family::{self, CliqueJoinSpec};
use crate::graph::Graph;
use crate::rational::lambda2_threshold;
use crate::spectra::{EigenContext, RationalInterval, ThresholdPosition};

/// Structural shape of a connected graph, as far as the classification
/// cares.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StructuralForm {
    Complete(usize),
    /// Universal apex over 2–4 cliques with these sorted sizes.
    ApexCliques(Vec<u64>),
    Other,
}

/// Which branch of the characterization fired.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Condition {
    /// Complete graph on ≥ 2 vertices.
    Complete,
    /// Apex over two cliques: always in.
    TwoCliques,
    /// Apex over three cliques: always in.
    ThreeCliques,
    /// n₁ = n₂ = 1 and n₃ ≤ 873.
    I,
    /// n₁ = n₂ = 1, n₃ ≥ 874, and r(−0.5858) < 0.
    II,
    /// n₁ = 1, n₂ = 2 branch.
    III,
    /// n₁ = 1, n₂ = 3 branch.
    IV,
    /// n₁ = n₂ = n₃ = 2 and n₄ ≤ 5.
    V,
}

impl Condition {
    pub fn label(&self) -> &'static str {
        match self {
            Condition::Complete => "complete",
            Condition::TwoCliques => "r=2",
            Condition::ThreeCliques => "r=3",
            Condition::I => "(i)",
            Condition::II => "(ii)",
            Condition::III => "(iii)",
            Condition::IV => "(iv)",
            Condition::V => "(v)",
        }
    }
}

impl Serialize for Condition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.label())
    }
}

/// Outcome of the size-tuple test for 4-part families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConditionCheck {
    pub satisfied: bool,
    pub condition: Option<Condition>,
}

/// Decides whether the sorted clique sizes put the apex–clique graph in
/// the family with λ₂ below the threshold, reporting which branch fired.
/// Two- and three-part tuples are always in; four-part tuples go through
/// conditions (i)–(v), with (ii) decided by the exact sign of r at
/// −2929/5000.
pub fn theorem_condition(sizes: &[u64]) -> Result<ConditionCheck> {
    if !(2..=4).contains(&sizes.len()) {
        return Err(Error::InvalidParameter(format!(
            "expected 2 to 4 clique sizes, got {}",
            sizes.len()
        )));
    }
    if sizes.contains(&0) {
        return Err(Error::InvalidParameter("clique sizes must be positive".into()));
    }
    if sizes.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::InvalidParameter("sizes must be sorted non-decreasing".into()));
    }
    let fired = |c: Condition| ConditionCheck {
        satisfied: true,
        condition: Some(c),
    };
    let missed = ConditionCheck {
        satisfied: false,
        condition: None,
    };
    Ok(match sizes.len() {
        2 => fired(Condition::TwoCliques),
        3 => fired(Condition::ThreeCliques),
        _ => {
            let (n1, n2, n3, n4) = (sizes[0], sizes[1], sizes[2], sizes[3]);
            if n1 == 1 && n2 == 1 {
                if n3 <= 873 {
                    fired(Condition::I)
                } else if family::eval_at(&family::poly_r(n3, n4), &lambda2_threshold())
                    .is_negative()
                {
                    fired(Condition::II)
                } else {
                    missed
                }
            } else if n1 == 1 && n2 == 2 {
                let ok = n3 == 2
                    || (n3 == 3 && n4 <= 870)
                    || (n3 == 4 && n4 <= 14)
                    || (n3 == 5 && n4 <= 8)
                    || (n3 == 6 && n4 == 6);
                if ok {
                    fired(Condition::III)
                } else {
                    missed
                }
            } else if n1 == 1 && n2 == 3 {
                let ok = (n3 == 3 && n4 <= 7) || (n3 == 4 && n4 == 4);
                if ok {
                    fired(Condition::IV)
                } else {
                    missed
                }
            } else if n1 == 2 && n2 == 2 && n3 == 2 && n4 <= 5 {
                fired(Condition::V)
            } else {
                missed
            }
        }
    })
}

/// For n₃ ≥ 874, the largest n₄ with r(−0.5858) < 0, i.e. the exact extent
/// of condition (ii) at this n₃. None for n₃ ≤ 873, where the sign is
/// negative for every n₄.
pub fn max_n4_for_condition_ii(n3: u64) -> Option<BigInt> {
    let t = lambda2_threshold();
    // r(t) is linear in n₄: slope·n₄ + offset
    let at1 = family::eval_at(&family::poly_r(n3, 1), &t);
    let at2 = family::eval_at(&family::poly_r(n3, 2), &t);
    let slope = &at2 - &at1;
    let offset = at1 - &slope;
    if !slope.is_positive() {
        return None;
    }
    // largest integer strictly below −offset/slope
    let bound = -offset / slope;
    let floor = bound.floor().to_integer();
    if BigRational::from_integer(floor.clone()) == bound {
        Some(floor - BigInt::one())
    } else {
        Some(floor)
    }
}

/// Recognizes complete graphs and apex–clique joins. Every universal vertex
/// is tried as the apex; a graph qualifies if any choice leaves a disjoint
/// union of 2–4 cliques.
pub fn recognize_structure(g: &Graph) -> Result<StructuralForm> {
    if g.order() < 2 {
        return Err(Error::BelowTheoremScope);
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.is_complete() {
        return Ok(StructuralForm::Complete(g.order()));
    }
    for apex in g.universal_vertices() {
        let rest: Vec<usize> = (0..g.order()).filter(|&v| v != apex).collect();
        let h = g.induced_subgraph(&rest)?;
        if let Some(sizes) = h.is_union_of_cliques() {
            if (2..=4).contains(&sizes.len()) {
                return Ok(StructuralForm::ApexCliques(
                    sizes.into_iter().map(|s| s as u64).collect(),
                ));
            }
        }
    }
    Ok(StructuralForm::Other)
}

/// The structural side of the characterization alone.
pub fn classify_structural(g: &Graph) -> Result<bool> {
    Ok(structural_verdict(g)?.0)
}

fn structural_verdict(g: &Graph) -> Result<(bool, Option<Condition>, String)> {
    Ok(match recognize_structure(g)? {
        StructuralForm::Complete(n) => (
            true,
            Some(Condition::Complete),
            format!("complete graph on {n} vertices"),
        ),
        StructuralForm::ApexCliques(sizes) => {
            let check = theorem_condition(&sizes)?;
            let witness = match check.condition {
                Some(c) => format!("apex over cliques {sizes:?} via {}", c.label()),
                None => format!("apex over cliques {sizes:?} fails every condition"),
            };
            (check.satisfied, check.condition, witness)
        }
        StructuralForm::Other => (false, None, "no apex-clique decomposition".into()),
    })
}

/// Joint classification record: the structural answer, the certified
/// spectral answer, and whether they agree (the computational content of
/// the characterization).
#[derive(Debug, Clone, Serialize)]
pub struct Verdict {
    pub structural: bool,
    pub spectral: ThresholdPosition,
    pub agree: bool,
    pub condition: Option<Condition>,
    pub lambda2_enclosure: RationalInterval,
    #[serde(skip)]
    pub witness: String,
}

fn default_width() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(10u64).pow(10))
}

fn make_verdict(
    structural: bool,
    condition: Option<Condition>,
    witness: String,
    spectral: ThresholdPosition,
    lambda2: RationalInterval,
) -> Verdict {
    Verdict {
        structural,
        spectral,
        agree: structural == (spectral == ThresholdPosition::Below),
        condition,
        lambda2_enclosure: lambda2,
        witness,
    }
}

/// Runs both decision paths on an explicit graph. Requires a connected
/// graph on at least two vertices.
pub fn classify(g: &Graph) -> Result<Verdict> {
    let (structural, condition, witness) = structural_verdict(g)?;
    let ctx = EigenContext::for_matrix(&g.distance_matrix()?);
    let spectral = ctx.lambda2_position(&lambda2_threshold());
    let lambda2 = ctx.lambda_k(2, &default_width())?;
    Ok(make_verdict(structural, condition, witness, spectral, lambda2))
}

/// Classifies a clique-join family symbolically through its closed-form
/// polynomial. Works for arbitrarily large sizes: the graph is never built.
///
/// The distance spectrum of the family graph is the family polynomial's
/// roots plus −1 with multiplicity n−r−1, so λ₂ = max(ρ₂, −1) where ρ₂ is
/// the polynomial's second-largest root; since −1 is below the threshold,
/// the threshold decision reduces to the polynomial's root count.
pub fn classify_spec(spec: &CliqueJoinSpec) -> Result<Verdict> {
    let check = theorem_condition(spec.sizes())?;
    let witness = match check.condition {
        Some(c) => format!("clique-join {:?} via {}", spec.sizes(), c.label()),
        None => format!("clique-join {:?} fails every condition", spec.sizes()),
    };
    let fam = family::family_polynomial(spec);
    let bound = BigInt::from(2 * spec.order() + 1);
    let ctx = EigenContext::from_poly(fam.poly, bound);
    let t = lambda2_threshold();
    let spectral = ctx.lambda2_position(&t);
    let minus_one = BigRational::from_integer(BigInt::from(-1));
    let lambda2 = if spec.one_power() >= 1 && ctx.count_greater(&minus_one) < 2 {
        // the polynomial's second root sits at or below −1, so the repeated
        // −1 eigenvalue is λ₂ exactly
        RationalInterval {
            lo: minus_one.clone(),
            hi: minus_one,
        }
    } else {
        ctx.lambda_k(2, &default_width())?
    };
    Ok(make_verdict(
        check.satisfied,
        check.condition,
        witness,
        spectral,
        lambda2,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::build_graph;

    fn spec(sizes: &[u64]) -> CliqueJoinSpec {
        CliqueJoinSpec::new(sizes).unwrap()
    }

    fn cond(sizes: &[u64]) -> (bool, Option<Condition>) {
        let c = theorem_condition(sizes).unwrap();
        (c.satisfied, c.condition)
    }

    #[test]
    fn recognition_of_named_shapes() {
        let k7 = Graph::complete(7).unwrap();
        assert_eq!(recognize_structure(&k7).unwrap(), StructuralForm::Complete(7));

        let g = build_graph(&spec(&[1, 2, 4, 14])).unwrap();
        assert_eq!(
            recognize_structure(&g).unwrap(),
            StructuralForm::ApexCliques(vec![1, 2, 4, 14])
        );

        let p4 = Graph::path(4).unwrap();
        assert_eq!(recognize_structure(&p4).unwrap(), StructuralForm::Other);

        // K4 − e: two universal vertices but no clique decomposition
        let k4e = Graph::complete(4).unwrap().delete_edge(0, 1).unwrap();
        assert_eq!(recognize_structure(&k4e).unwrap(), StructuralForm::Other);

        // apex over five cliques: universal vertex exists, but r = 5
        let k1 = Graph::complete(1).unwrap();
        let five = Graph::scalar_union(5, &k1).unwrap();
        let s6 = k1.join(&five).unwrap();
        assert_eq!(recognize_structure(&s6).unwrap(), StructuralForm::Other);

        assert!(recognize_structure(&k1).is_err());
        let two_k2 = Graph::scalar_union(2, &Graph::complete(2).unwrap()).unwrap();
        assert!(recognize_structure(&two_k2).is_err());
    }

    #[test]
    fn conditions_small_arity() {
        assert_eq!(cond(&[3, 5]), (true, Some(Condition::TwoCliques)));
        assert_eq!(cond(&[1, 1, 99]), (true, Some(Condition::ThreeCliques)));
        assert!(theorem_condition(&[1]).is_err());
        assert!(theorem_condition(&[1, 2, 3, 4, 5]).is_err());
        assert!(theorem_condition(&[2, 1, 3, 4]).is_err());
        assert!(theorem_condition(&[0, 1]).is_err());
    }

    #[test]
    fn condition_i_and_ii() {
        assert_eq!(cond(&[1, 1, 873, 1_000_000]), (true, Some(Condition::I)));
        assert_eq!(cond(&[1, 1, 1, 3]), (true, Some(Condition::I)));
        // n3 = 874 moves to the exact sign test; small n4 still passes
        let (ok, c) = cond(&[1, 1, 874, 1000]);
        assert!(ok);
        assert_eq!(c, Some(Condition::II));
        // far beyond the (ii) bound the sign flips
        let (ok, c) = cond(&[1, 1, 874, 1_000_000_000]);
        assert!(!ok);
        assert_eq!(c, None);
    }

    #[test]
    fn condition_ii_exact_bound() {
        assert_eq!(max_n4_for_condition_ii(873), None);
        assert_eq!(max_n4_for_condition_ii(1), None);
        let bound = max_n4_for_condition_ii(874).expect("positive slope at 874");
        // the bound is consistent with the condition itself
        let b: u64 = bound.to_string().parse().unwrap();
        assert!(b >= 874, "bound {b} must cover sorted tuples");
        assert!(cond(&[1, 1, 874, b]).0);
        assert!(!cond(&[1, 1, 874, b + 1]).0);
    }

    #[test]
    fn condition_iii_boundaries() {
        assert_eq!(cond(&[1, 2, 2, 1_000_000]), (true, Some(Condition::III)));
        assert!(cond(&[1, 2, 3, 870]).0);
        assert!(!cond(&[1, 2, 3, 871]).0);
        assert!(cond(&[1, 2, 4, 14]).0);
        assert!(!cond(&[1, 2, 4, 15]).0);
        assert!(cond(&[1, 2, 5, 8]).0);
        assert!(!cond(&[1, 2, 5, 9]).0);
        assert!(cond(&[1, 2, 6, 6]).0);
        assert!(!cond(&[1, 2, 6, 7]).0);
        assert!(!cond(&[1, 2, 7, 7]).0);
    }

    #[test]
    fn monotone_boundary_ranges() {
        // the structural verdict is true exactly on the printed n4 ranges
        let ranges: [([u64; 3], u64, u64); 4] = [
            ([1, 2, 4], 4, 14),
            ([1, 2, 5], 5, 8),
            ([1, 3, 3], 3, 7),
            ([2, 2, 2], 2, 5),
        ];
        for (base, first, last) in ranges {
            for n4 in base[2]..=last + 5 {
                let sizes = [base[0], base[1], base[2], n4];
                let expected = (first..=last).contains(&n4);
                assert_eq!(
                    theorem_condition(&sizes).unwrap().satisfied,
                    expected,
                    "{sizes:?}"
                );
            }
        }
    }

    #[test]
    fn condition_iv_and_v_boundaries() {
        assert!(cond(&[1, 3, 3, 7]).0);
        assert!(!cond(&[1, 3, 3, 8]).0);
        assert!(cond(&[1, 3, 4, 4]).0);
        assert!(!cond(&[1, 3, 4, 5]).0);
        assert_eq!(cond(&[2, 2, 2, 5]), (true, Some(Condition::V)));
        assert!(!cond(&[2, 2, 2, 6]).0);
        assert!(!cond(&[2, 2, 3, 3]).0);
        assert!(!cond(&[1, 4, 4, 4]).0);
        assert!(!cond(&[3, 3, 3, 3]).0);
    }

    #[test]
    fn classify_named_graphs() {
        let k2 = Graph::complete(2).unwrap();
        let v = classify(&k2).unwrap();
        assert!(v.structural);
        assert_eq!(v.spectral, ThresholdPosition::Below);
        assert!(v.agree);
        assert_eq!(v.condition, Some(Condition::Complete));

        let g_in = build_graph(&spec(&[1, 2, 4, 14])).unwrap();
        let v = classify(&g_in).unwrap();
        assert!(v.structural && v.agree);
        assert_eq!(v.spectral, ThresholdPosition::Below);
        assert_eq!(v.condition, Some(Condition::III));

        let g_out = build_graph(&spec(&[1, 2, 4, 15])).unwrap();
        let v = classify(&g_out).unwrap();
        assert!(!v.structural && v.agree);
        assert_eq!(v.spectral, ThresholdPosition::Above);

        assert!(classify(&Graph::complete(1).unwrap()).is_err());
    }

    #[test]
    fn classify_spec_agrees_with_graph_path() {
        for sizes in [&[1u64, 1][..], &[2, 3], &[1, 2, 2], &[1, 2, 4, 14], &[1, 2, 4, 15], &[2, 2, 2, 6]] {
            let sp = spec(sizes);
            let by_spec = classify_spec(&sp).unwrap();
            let by_graph = classify(&build_graph(&sp).unwrap()).unwrap();
            assert_eq!(by_spec.structural, by_graph.structural, "{sizes:?}");
            assert_eq!(by_spec.spectral, by_graph.spectral, "{sizes:?}");
            assert_eq!(by_spec.condition, by_graph.condition, "{sizes:?}");
            assert!(by_spec.agree && by_graph.agree, "{sizes:?}");
        }
        // symbolic path handles sizes far beyond any explicit graph
        let huge = spec(&[1, 1, 873, 1_000_000_000]);
        let v = classify_spec(&huge).unwrap();
        assert!(v.structural && v.agree);
        assert_eq!(v.spectral, ThresholdPosition::Below);
    }

    #[test]
    fn round_trip_recognition_over_specs() {
        for sizes in [&[1u64, 1][..], &[2, 5], &[1, 1, 1], &[3, 3, 4], &[1, 2, 3, 4]] {
            let sp = spec(sizes);
            let g = build_graph(&sp).unwrap();
            assert_eq!(
                recognize_structure(&g).unwrap(),
                StructuralForm::ApexCliques(sp.sizes().to_vec()),
                "{sizes:?}"
            );
        }
    }
}
