//! Class-level limit maps on group compactifications.
//!
//! Acting by the one-parameter subgroup of a fundamental coweight
//! `ω_{i₀}` degenerates curves on an orbit closure `X_I` into the
//! boundary stratum `X_{I ∪ {i₀}}`. At the level of curve classes the
//! effect is pure bookkeeping: coefficients on surviving colors and on
//! old Schubert divisors are preserved, the coefficient of the removed
//! color moves wholly onto the second-factor Schubert divisor `D_{i₀}⁻`,
//! and the first-factor side `D_{i₀}⁺` receives zero. Composing the
//! steps down to the closed orbit gives the full degeneration chain.
//!
//! Only group-compactification chains are accepted: the coefficient
//! formula is not established beyond them.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::lattice::{color_pullback, is_movable, pair, CurveClass, DivisorClass};
use crate::spherical::{subvariety_datum, BasisElem, DatumKind, SphericalDatum};

/// Pairings of the fundamental coweight `ω_{i₀}` (first factor) against
/// all spherical roots. For a group datum this is the Kronecker vector
/// at `i₀`, and the function verifies as much.
pub fn adapted_pairings(datum: &SphericalDatum, i0: usize) -> Result<Vec<i64>> {
    if *datum.kind() != DatumKind::GroupCompactification {
        return Err(Error::NotGroupKind);
    }
    let r = datum.colors().len();
    if i0 >= r {
        return Err(Error::IndexOutOfRange {
            index: i0,
            limit: r,
        });
    }
    let rs = datum.root_system();
    let coweight = rs.fundamental_coweight(i0)?;
    let pairings: Vec<i64> = datum
        .spherical_roots()
        .iter()
        .map(|g| rs.coweight_root_pairing(&coweight, &g.coeffs))
        .collect::<Result<_>>()?;
    for (i, &v) in pairings.iter().enumerate() {
        let expect = i64::from(i == i0);
        if v != expect {
            return Err(Error::ConsistencyFailure(format!(
                "adapted pairing with spherical root {} is {}, expected {}",
                i + 1,
                v,
                expect
            )));
        }
    }
    Ok(pairings)
}

/// One degeneration step `X_I ⇝ X_{I ∪ {i₀}}` with the transported curve
/// class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LimitStep {
    pub source: Arc<SphericalDatum>,
    pub target: Arc<SphericalDatum>,
    /// Top-level boundary index removed by this step.
    pub i0: usize,
    pub input_class: CurveClass,
    pub output_class: CurveClass,
}

/// Pushforward of a curve class along the boundary inclusion
/// `X_{I'} → X_I` (coefficient bookkeeping dual to [`color_pullback`]):
/// both Schubert curve classes of the step's index map onto the dual
/// curve of the reinstated color, everything else onto its namesake.
pub fn boundary_pushforward(
    class: &CurveClass,
    parent: &Arc<SphericalDatum>,
) -> Result<CurveClass> {
    let child = class.datum();
    if !child.kind().is_group_chain() || !parent.kind().is_group_chain() {
        return Err(Error::NotGroupKind);
    }
    let removed_new: Vec<usize> = child
        .kind()
        .removed()
        .difference(&parent.kind().removed())
        .copied()
        .collect();
    let [i0] = removed_new[..] else {
        return Err(Error::DatumMismatch);
    };
    let local = parent
        .local_boundary_index(i0)
        .ok_or(Error::DatumMismatch)?;
    let reinstated = parent
        .colors()
        .iter()
        .find(|c| child.color_by_id(c.id).is_none())
        .ok_or(Error::DatumMismatch)?;
    let support = parent.spherical_roots()[local].support_outside(parent.s_p());

    let mut out = vec![0i64; parent.basis_len()];
    for (k, elem) in child.basis().iter().enumerate() {
        let c = class.coeffs()[k];
        if c == 0 {
            continue;
        }
        let target_elem = match elem {
            BasisElem::Extra(root) if support.contains(root) => BasisElem::Color(reinstated.id),
            other => *other,
        };
        let idx = parent
            .basis_index(&target_elem)
            .ok_or(Error::DatumMismatch)?;
        out[idx] += c;
    }
    CurveClass::new(parent.clone(), out)
}

/// Transports a movable class into the boundary stratum of local index
/// `i0`, validating the projection formula and the pushforward identity
/// before returning.
pub fn limit_pushforward(eta: &CurveClass, i0_local: usize) -> Result<LimitStep> {
    let source = eta.datum().clone();
    if !source.kind().is_group_chain() {
        return Err(Error::NotGroupKind);
    }
    if i0_local >= source.boundary_count() {
        return Err(Error::IndexOutOfRange {
            index: i0_local,
            limit: source.boundary_count(),
        });
    }
    if !is_movable(eta) {
        return Err(Error::NotMovable);
    }
    let i0 = source.spherical_roots()[i0_local].origin;
    let support = source.spherical_roots()[i0_local].support_outside(source.s_p());
    let [alpha, beta] = support[..] else {
        return Err(Error::ConsistencyFailure(
            "group-chain spherical roots have two supporting simple roots".into(),
        ));
    };
    let removed_color = source
        .colors()
        .iter()
        .find(|c| c.moved_by.contains(&alpha))
        .ok_or_else(|| Error::ConsistencyFailure("removed root moves no color".into()))?;
    let c_i0 = eta
        .coeff(&BasisElem::Color(removed_color.id))
        .expect("color present on source");

    let target = Arc::new(subvariety_datum(
        &source,
        &[i0_local].into_iter().collect(),
    )?);
    let out: Vec<i64> = target
        .basis()
        .iter()
        .map(|elem| match elem {
            BasisElem::Extra(root) if *root == alpha => 0,
            BasisElem::Extra(root) if *root == beta => c_i0,
            other => eta.coeff(other).expect("shared basis element"),
        })
        .collect();
    let output_class = CurveClass::new(target.clone(), out)?;

    // Pushforward must recover the input exactly.
    let back = boundary_pushforward(&output_class, &source)?;
    if back != *eta {
        return Err(Error::ConsistencyFailure(
            "pushforward of the limit class differs from the input class".into(),
        ));
    }
    // Projection formula over the whole Picard basis of the source.
    for elem in source.basis() {
        let d = DivisorClass::basis_divisor(source.clone(), &elem)?;
        let lhs = pair(&color_pullback(&d, &target)?, &output_class)?;
        let rhs = pair(&d, eta)?;
        if lhs != rhs {
            return Err(Error::ConsistencyFailure(format!(
                "projection formula fails on {}",
                source.basis_label(&elem)
            )));
        }
    }

    Ok(LimitStep {
        source,
        target,
        i0,
        input_class: eta.clone(),
        output_class,
    })
}

/// A full degeneration chain down to the closed orbit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegenerationChain {
    pub steps: Vec<LimitStep>,
}

impl DegenerationChain {
    pub fn terminal_class(&self) -> &CurveClass {
        &self
            .steps
            .last()
            .expect("chains have rank ≥ 1 steps")
            .output_class
    }

    pub fn terminal_datum(&self) -> &Arc<SphericalDatum> {
        &self
            .steps
            .last()
            .expect("chains have rank ≥ 1 steps")
            .target
    }
}

/// Composes limit steps along `order` (top-level boundary indices;
/// defaults to rank, rank-1, …, 1) from the compactification down to
/// the closed orbit.
pub fn degeneration_chain(
    datum: &Arc<SphericalDatum>,
    eta: &CurveClass,
    order: Option<&[usize]>,
) -> Result<DegenerationChain> {
    if *datum.kind() != DatumKind::GroupCompactification {
        return Err(Error::NotGroupKind);
    }
    let r = datum.boundary_count();
    let default_order: Vec<usize> = (0..r).rev().collect();
    let order = order.unwrap_or(&default_order);
    if order.len() != r {
        return Err(Error::ArityMismatch {
            expected: r,
            got: order.len(),
        });
    }
    let mut seen = vec![false; r];
    for &i in order {
        if i >= r {
            return Err(Error::IndexOutOfRange { index: i, limit: r });
        }
        if seen[i] {
            return Err(Error::Parse("order must be a permutation".into()));
        }
        seen[i] = true;
    }

    let mut steps = Vec::with_capacity(r);
    let mut current = eta.clone();
    for &top in order {
        let local = current
            .datum()
            .local_boundary_index(top)
            .expect("order is a permutation of surviving indices");
        let step = limit_pushforward(&current, local)?;
        current = step.output_class.clone();
        steps.push(step);
    }

    let terminal = steps.last().expect("rank ≥ 1").target.clone();
    if terminal.boundary_count() != 0 || terminal.basis_len() != 2 * r {
        return Err(Error::ConsistencyFailure(
            "terminal datum is not the closed orbit".into(),
        ));
    }
    Ok(DegenerationChain { steps })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::{build_root_system, DynkinType, Series};
    use crate::spherical::{group_datum, simple_group_datum};

    fn group(series: Series, rank: usize) -> Arc<SphericalDatum> {
        Arc::new(simple_group_datum(series, rank).unwrap())
    }

    fn curve(d: &Arc<SphericalDatum>, c: &[i64]) -> CurveClass {
        CurveClass::new(d.clone(), c.to_vec()).unwrap()
    }

    #[test]
    fn adapted_pairings_are_kronecker() {
        let d = group(Series::A, 3);
        assert_eq!(adapted_pairings(&d, 1).unwrap(), vec![0, 1, 0]);
        // Stacked over all i₀ this is the identity.
        for i0 in 0..3 {
            let row = adapted_pairings(&d, i0).unwrap();
            for (i, &v) in row.iter().enumerate() {
                assert_eq!(v, i64::from(i == i0));
            }
        }
        assert!(matches!(
            adapted_pairings(&d, 3),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn adapted_pairings_product_factor() {
        let dt = DynkinType::parse("G2xA1").unwrap();
        let d = Arc::new(group_datum(&build_root_system(dt)));
        // i₀ = 2 lies in the A₁ factor.
        assert_eq!(adapted_pairings(&d, 2).unwrap(), vec![0, 0, 1]);
        assert_eq!(adapted_pairings(&d, 0).unwrap(), vec![1, 0, 0]);
    }

    #[test]
    fn single_step_moves_coefficient_to_minus_side() {
        let d = group(Series::A, 3);
        let eta = curve(&d, &[1, 1, 1]);
        let step = limit_pushforward(&eta, 1).unwrap();
        assert_eq!(step.i0, 1);
        // Target basis: D1, D3, D2+, D2-.
        assert_eq!(step.output_class.coeffs(), &[1, 1, 0, 1]);
    }

    #[test]
    fn zero_class_stays_zero() {
        let d = group(Series::A, 3);
        let zero = CurveClass::zero(d.clone());
        let step = limit_pushforward(&zero, 0).unwrap();
        assert!(step.output_class.is_zero());
    }

    #[test]
    fn chain_a3_terminal_class() {
        let d = group(Series::A, 3);
        let eta = curve(&d, &[1, 1, 1]);
        let chain = degeneration_chain(&d, &eta, None).unwrap();
        assert_eq!(chain.steps.len(), 3);
        let terminal = chain.terminal_class();
        let datum = chain.terminal_datum();
        // All mass on the minus extras, zero on the plus extras.
        for e in datum.extras() {
            let c = terminal.coeff(&BasisElem::Extra(e.root)).unwrap();
            if e.root < 3 {
                assert_eq!(c, 0, "alpha side of {}", e.label());
            } else {
                assert_eq!(c, 1, "beta side of {}", e.label());
            }
        }
    }

    #[test]
    fn chain_rank_one() {
        let d = group(Series::A, 1);
        let eta = curve(&d, &[1]);
        let chain = degeneration_chain(&d, &eta, None).unwrap();
        assert_eq!(chain.steps.len(), 1);
        assert_eq!(chain.terminal_datum().basis_len(), 2);
    }

    #[test]
    fn chain_of_zero_class_is_zero() {
        let d = group(Series::A, 3);
        let zero = CurveClass::zero(d.clone());
        let chain = degeneration_chain(&d, &zero, None).unwrap();
        assert!(chain.steps.iter().all(|s| s.output_class.is_zero()));
    }

    #[test]
    fn step_orders_commute_on_shared_basis() {
        let d = group(Series::A, 3);
        let eta = curve(&d, &[2, 3, 4]);
        let one_two = {
            let s1 = limit_pushforward(&eta, 0).unwrap();
            let local = s1.target.local_boundary_index(1).unwrap();
            limit_pushforward(&s1.output_class, local).unwrap()
        };
        let two_one = {
            let s1 = limit_pushforward(&eta, 1).unwrap();
            let local = s1.target.local_boundary_index(0).unwrap();
            limit_pushforward(&s1.output_class, local).unwrap()
        };
        assert_eq!(one_two.target, two_one.target);
        assert_eq!(one_two.output_class, two_one.output_class);
    }

    #[test]
    fn chain_with_custom_order() {
        let d = group(Series::A, 3);
        let eta = curve(&d, &[1, 2, 1]);
        let forward = degeneration_chain(&d, &eta, Some(&[0, 1, 2])).unwrap();
        let backward = degeneration_chain(&d, &eta, Some(&[2, 1, 0])).unwrap();
        assert_eq!(
            forward.terminal_class().coeffs(),
            backward.terminal_class().coeffs()
        );
        assert!(matches!(
            degeneration_chain(&d, &eta, Some(&[0, 0, 1])),
            Err(Error::Parse(_))
        ));
        assert!(matches!(
            degeneration_chain(&d, &eta, Some(&[0, 1])),
            Err(Error::ArityMismatch { .. })
        ));
    }

    #[test]
    fn coefficients_conserved_down_the_chain() {
        let d = group(Series::B, 3);
        let eta = curve(&d, &[1, 2, 1]);
        assert!(is_movable(&eta));
        let chain = degeneration_chain(&d, &eta, None).unwrap();
        let terminal = chain.terminal_class();
        let datum = chain.terminal_datum();
        for e in datum.extras() {
            let c = terminal.coeff(&BasisElem::Extra(e.root)).unwrap();
            if e.root < 3 {
                assert_eq!(c, 0);
            } else {
                assert_eq!(c, eta.coeffs()[e.root - 3]);
            }
        }
    }

    #[test]
    fn requires_movable_and_group() {
        let d = group(Series::A, 3);
        let eta = curve(&d, &[0, 1, 0]);
        assert!(matches!(limit_pushforward(&eta, 0), Err(Error::NotMovable)));
    }
}
