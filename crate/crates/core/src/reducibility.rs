//! Decision procedures for reducibility of stable-map moduli spaces.
//!
//! A decomposition `η = η₁ + η₂` into nontrivial effective classes with
//! some boundary divisor pairing at most −2 against `η₂` certifies that
//! the moduli space of genus-0 stable maps of class `η` is reducible,
//! provided the open locus of irreducible curves through the open orbit
//! is known to be nonempty. [`check_certificate`] validates all of that,
//! [`reducibility_gap`] evaluates the dimension-count bound
//! `1 + |I₁| + |I₂| + Σ_{I₁}⟨Xᵢ,η₁⟩ + Σ_{I₂}⟨Xᵢ,η₂⟩` underlying it, and
//! [`find_certificate`] searches for a decomposition: constructively at a
//! nonextremal Dynkin node on group compactifications, exhaustively over
//! the coefficient box otherwise.

use std::collections::BTreeSet;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::lattice::{boundary_pairing_matrix, is_effective_curve, is_movable, CurveClass, Rat};
use crate::spherical::DatumKind;

/// How nonemptiness of the open moduli locus was discharged.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NonemptinessMode {
    /// Group compactifications (and their orbit closures): movable
    /// classes are represented by irreducible curves through the open
    /// orbit directly.
    GroupDirect,
    /// The class is twice a movable class, which suffices on any
    /// wonderful symmetric variety.
    DoubledClass,
    /// Asserted by the caller.
    Assumed,
}

impl NonemptinessMode {
    pub fn as_str(self) -> &'static str {
        match self {
            NonemptinessMode::GroupDirect => "group_direct",
            NonemptinessMode::DoubledClass => "doubled_class",
            NonemptinessMode::Assumed => "assumed",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Nonemptiness {
    Yes(NonemptinessMode),
    Unknown,
}

fn nonemptiness_of(eta: &CurveClass) -> Option<NonemptinessMode> {
    if eta.is_zero() || !is_movable(eta) {
        return None;
    }
    if eta.datum().kind().is_group_chain() {
        return Some(NonemptinessMode::GroupDirect);
    }
    match eta.halved() {
        Some(half) if is_movable(&half) => Some(NonemptinessMode::DoubledClass),
        _ => None,
    }
}

/// Is the open locus `M°` of irreducible curves through the open orbit
/// nonempty for this class?
///
/// Requires `η` movable and nonzero.
pub fn m_circ_nonempty(eta: &CurveClass) -> Result<Nonemptiness> {
    if eta.is_zero() || !is_movable(eta) {
        return Err(Error::NotMovable);
    }
    Ok(match nonemptiness_of(eta) {
        Some(mode) => Nonemptiness::Yes(mode),
        None => Nonemptiness::Unknown,
    })
}

/// Integer boundary-pairing matrix of a validated datum.
fn integral_boundary_matrix(eta: &CurveClass) -> Result<Vec<Vec<i64>>> {
    let m = boundary_pairing_matrix(eta.datum())?;
    m.into_iter()
        .map(|row| {
            row.into_iter()
                .map(|v| {
                    if v.is_integer() {
                        Ok(v.to_integer())
                    } else {
                        Err(Error::ConsistencyFailure(
                            "boundary expansion is not integral".into(),
                        ))
                    }
                })
                .collect()
        })
        .collect()
}

fn apply(matrix: &[Vec<i64>], coeffs: &[i64]) -> Vec<i64> {
    matrix
        .iter()
        .map(|row| row.iter().zip(coeffs).map(|(a, b)| a * b).sum())
        .collect()
}

/// The dimension-count upper bound from the reducibility argument.
///
/// Preconditions: both classes effective and nonzero, and their sum
/// nonnegative on every boundary divisor. A result `≤ 0` certifies that
/// the reducible curves form a separate component.
pub fn reducibility_gap(eta1: &CurveClass, eta2: &CurveClass) -> Result<i64> {
    let eta = eta1.add(eta2)?;
    if eta1.is_zero() || !is_effective_curve(eta1) {
        return Err(Error::NotEffective(
            "first class must be effective and nonzero".into(),
        ));
    }
    if eta2.is_zero() || !is_effective_curve(eta2) {
        return Err(Error::NotEffective(
            "second class must be effective and nonzero".into(),
        ));
    }
    let matrix = integral_boundary_matrix(&eta)?;
    let pe = apply(&matrix, eta.coeffs());
    if pe.iter().any(|&v| v < 0) {
        return Err(Error::NotEffective(
            "the combined class must be nonnegative on boundary divisors".into(),
        ));
    }
    let p1 = apply(&matrix, eta1.coeffs());
    let p2 = apply(&matrix, eta2.coeffs());
    Ok(gap_from_pairings(&p1, &p2))
}

fn gap_from_pairings(p1: &[i64], p2: &[i64]) -> i64 {
    let neg1: i64 = p1.iter().filter(|&&v| v < 0).sum();
    let neg2: i64 = p2.iter().filter(|&&v| v < 0).sum();
    let n1 = p1.iter().filter(|&&v| v < 0).count() as i64;
    let n2 = p2.iter().filter(|&&v| v < 0).count() as i64;
    1 + n1 + n2 + neg1 + neg2
}

/// A validated (or refuted) reducibility certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub eta: CurveClass,
    pub eta1: CurveClass,
    pub eta2: CurveClass,
    /// Local boundary index with `⟨Xᵢ, η₂⟩ ≤ -2` (smallest on ties).
    pub witness_boundary: Option<usize>,
    pub gap: Option<i64>,
    pub nonemptiness_mode: Option<NonemptinessMode>,
    pub violations: Vec<String>,
}

impl Certificate {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Validates every certificate condition, reporting failures instead of
/// erroring. `assume_nonempty` discharges the nonemptiness hypothesis on
/// the caller's authority when the datum gives no criterion.
pub fn check_certificate(
    eta: &CurveClass,
    eta1: &CurveClass,
    eta2: &CurveClass,
    assume_nonempty: bool,
) -> Certificate {
    let matrix = integral_boundary_matrix(eta);
    let mode = nonemptiness_of(eta);
    check_certificate_with(&matrix, mode, eta, eta1, eta2, assume_nonempty)
}

/// Certificate check against a precomputed boundary matrix and
/// nonemptiness mode (both depend only on `eta`), so searches can avoid
/// recomputing them per candidate split.
fn check_certificate_with(
    matrix: &Result<Vec<Vec<i64>>>,
    precomputed_mode: Option<NonemptinessMode>,
    eta: &CurveClass,
    eta1: &CurveClass,
    eta2: &CurveClass,
    assume_nonempty: bool,
) -> Certificate {
    let mut cert = Certificate {
        eta: eta.clone(),
        eta1: eta1.clone(),
        eta2: eta2.clone(),
        witness_boundary: None,
        gap: None,
        nonemptiness_mode: None,
        violations: Vec::new(),
    };

    let sum = match eta1.add(eta2) {
        Ok(sum) => sum,
        Err(_) => {
            cert.violations
                .push("classes live on different data".into());
            return cert;
        }
    };
    if sum != *eta {
        if eta.datum() != eta1.datum() {
            cert.violations
                .push("classes live on different data".into());
            return cert;
        }
        cert.violations.push("eta1 + eta2 differs from eta".into());
    }
    if eta1.is_zero() {
        cert.violations.push("eta1 is zero".into());
    } else if !is_effective_curve(eta1) {
        cert.violations.push("eta1 is not effective".into());
    }
    if eta2.is_zero() {
        cert.violations.push("eta2 is zero".into());
    } else if !is_effective_curve(eta2) {
        cert.violations.push("eta2 is not effective".into());
    }

    let matrix = match matrix {
        Ok(m) => m,
        Err(e) => {
            cert.violations.push(e.to_string());
            return cert;
        }
    };
    let pe = apply(matrix, eta.coeffs());
    for (i, &v) in pe.iter().enumerate() {
        if v < 0 {
            cert.violations
                .push(format!("eta is negative on boundary divisor X{}", i + 1));
        }
    }
    let p1 = apply(matrix, eta1.coeffs());
    let p2 = apply(matrix, eta2.coeffs());
    let i1: BTreeSet<usize> = negatives(&p1);
    let i2: BTreeSet<usize> = negatives(&p2);
    if let Some(&i) = i1.intersection(&i2).next() {
        cert.violations.push(format!(
            "negative-pairing index sets intersect at X{}",
            i + 1
        ));
    }
    cert.gap = Some(gap_from_pairings(&p1, &p2));
    cert.witness_boundary = p2.iter().position(|&v| v <= -2);
    if cert.witness_boundary.is_none() {
        cert.violations
            .push("no boundary divisor pairs at most -2 against eta2".into());
    }

    cert.nonemptiness_mode = precomputed_mode.or(if assume_nonempty {
        Some(NonemptinessMode::Assumed)
    } else {
        None
    });
    if cert.nonemptiness_mode.is_none() {
        cert.violations
            .push("nonemptiness of the open moduli locus is not established".into());
    }

    cert
}

fn negatives(p: &[i64]) -> BTreeSet<usize> {
    p.iter()
        .enumerate()
        .filter(|(_, &v)| v < 0)
        .map(|(i, _)| i)
        .collect()
}

/// Constructive search on group compactifications: in every simple
/// factor of rank at least 3, pick a nonextremal node with positive
/// coefficient (directly, or as the nonextremal neighbour of a positive
/// extremal coefficient), split its coefficient off as `η₁` and
/// validate.
pub fn find_certificate_constructive(
    eta: &CurveClass,
    assume_nonempty: bool,
) -> Result<Option<Certificate>> {
    if eta.is_zero() || !is_movable(eta) {
        return Err(Error::NotMovable);
    }
    let datum = eta.datum();
    if *datum.kind() != DatumKind::GroupCompactification {
        return Ok(None);
    }
    let rs = datum.root_system();
    let ranges = rs.factor_ranges();
    let g_factors = ranges.len() / 2;
    let r = datum.colors().len();
    let matrix = integral_boundary_matrix(eta);
    let mode = nonemptiness_of(eta);
    for range in ranges.into_iter().take(g_factors) {
        if range.len() < 3 {
            continue;
        }
        let nonextremal_positive = range
            .clone()
            .find(|&i| rs.degree(i).unwrap_or(0) >= 2 && eta.coeffs()[i] > 0);
        let i0 = nonextremal_positive.or_else(|| {
            let j = range.clone().find(|&j| eta.coeffs()[j] > 0)?;
            range
                .clone()
                .find(|&i| rs.adjacency()[j][i] && rs.degree(i).unwrap_or(0) >= 2)
        });
        let Some(i0) = i0 else { continue };
        let mut split = vec![0i64; r];
        split[i0] = eta.coeffs()[i0];
        let eta1 = CurveClass::new(datum.clone(), split)?;
        let eta2 = eta.sub(&eta1)?;
        let cert = check_certificate_with(&matrix, mode, eta, &eta1, &eta2, assume_nonempty);
        if cert.is_valid() {
            return Ok(Some(cert));
        }
    }
    Ok(None)
}

/// Exhaustive fallback: `η₁` runs over the whole coefficient box
/// `0 ≤ η₁ ≤ η` in lexicographic order; the first valid certificate
/// wins. Cost is `∏(cᵢ + 1)`.
pub fn find_certificate_exhaustive(
    eta: &CurveClass,
    assume_nonempty: bool,
) -> Result<Option<Certificate>> {
    if eta.is_zero() || !is_movable(eta) {
        return Err(Error::NotMovable);
    }
    let n = eta.coeffs().len();
    let bounds = eta.coeffs().to_vec();
    let matrix = integral_boundary_matrix(eta);
    let mode = nonemptiness_of(eta);
    let mut cur = vec![0i64; n];
    loop {
        let eta1 = CurveClass::new(eta.datum().clone(), cur.clone())?;
        let eta2 = eta.sub(&eta1)?;
        let cert = check_certificate_with(&matrix, mode, eta, &eta1, &eta2, assume_nonempty);
        if cert.is_valid() {
            return Ok(Some(cert));
        }
        // odometer, rightmost digit fastest
        let mut k = n;
        loop {
            if k == 0 {
                return Ok(None);
            }
            k -= 1;
            if cur[k] < bounds[k] {
                cur[k] += 1;
                break;
            }
            cur[k] = 0;
        }
    }
}

/// Certificate search: the constructive stage on group data, then the
/// exhaustive stage on anything.
pub fn find_certificate(eta: &CurveClass, assume_nonempty: bool) -> Result<Option<Certificate>> {
    if let Some(cert) = find_certificate_constructive(eta, assume_nonempty)? {
        return Ok(Some(cert));
    }
    find_certificate_exhaustive(eta, assume_nonempty)
}

/// Expected-dimension bookkeeping for the moduli space.
///
/// `dim X` and the anticanonical color coefficients are geometric inputs
/// the datum does not determine; parts of the report degrade to
/// unavailable without them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimensionReport {
    pub dim_x: Option<i64>,
    /// `⟨-K_X, η⟩ = Σᵢ ⟨Xᵢ, η⟩ + Σ_D a_D c_D`.
    pub pairing_minus_kx: Option<Rat>,
    pub n: u32,
    /// `dim X + ⟨-K_X, η⟩ + n - 3`, the lower bound for every component.
    pub expected_dim: Option<i64>,
    /// Exact dimension of the open locus; numerically the same value.
    pub m_circ_dim: Option<i64>,
}

pub fn expected_dimension(
    eta: &CurveClass,
    n: u32,
    dim_x: Option<i64>,
    anticanonical_color_coeffs: Option<&[i64]>,
) -> Result<DimensionReport> {
    let datum = eta.datum();
    let pairing = match anticanonical_color_coeffs {
        None => None,
        Some(a) => {
            if a.len() != datum.basis_len() {
                return Err(Error::ArityMismatch {
                    expected: datum.basis_len(),
                    got: a.len(),
                });
            }
            if let Some((index, &value)) = a.iter().enumerate().find(|(_, &v)| v < 0) {
                return Err(Error::NegativeAnticanonicalCoeff { index, value });
            }
            let mut total = Rat::zero();
            for i in 0..datum.boundary_count() {
                total += crate::lattice::boundary_pairing(eta.datum(), i, eta)?;
            }
            for (k, &ak) in a.iter().enumerate() {
                total += Rat::from_integer(ak * eta.coeffs()[k]);
            }
            Some(total)
        }
    };
    let expected_dim = match (dim_x, &pairing) {
        (Some(d), Some(p)) if p.is_integer() => Some(d + p.to_integer() + i64::from(n) - 3),
        _ => None,
    };
    Ok(DimensionReport {
        dim_x,
        pairing_minus_kx: pairing,
        n,
        expected_dim,
        m_circ_dim: expected_dim,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;
    use crate::rootsys::Series;
    use crate::spherical::{
        simple_group_datum, validate_datum, RawColor, RawDatum, RawKind, SphericalDatum,
    };
    use std::sync::Arc;

    fn group(series: Series, rank: usize) -> Arc<SphericalDatum> {
        Arc::new(simple_group_datum(series, rank).unwrap())
    }

    fn curve(d: &Arc<SphericalDatum>, c: &[i64]) -> CurveClass {
        CurveClass::new(d.clone(), c.to_vec()).unwrap()
    }

    fn aprime_rank1() -> Arc<SphericalDatum> {
        let raw = RawDatum {
            dynkin: vec![(Series::A, 1)],
            kind: RawKind::GenericSymmetric,
            s_p: vec![],
            spherical_roots: vec![vec![2]],
            colors: vec![RawColor {
                id: "D1".into(),
                moved_by: vec![1],
            }],
        };
        Arc::new(validate_datum(&raw).unwrap())
    }

    #[test]
    fn pgl4_certificate() {
        let d = group(Series::A, 3);
        let eta = curve(&d, &[1, 1, 1]);
        let cert = find_certificate(&eta, false).unwrap().unwrap();
        assert!(cert.is_valid());
        assert_eq!(cert.eta1.coeffs(), &[0, 1, 0]);
        assert_eq!(cert.eta2.coeffs(), &[1, 0, 1]);
        assert_eq!(cert.witness_boundary, Some(1));
        assert_eq!(cert.gap, Some(0));
        assert_eq!(cert.nonemptiness_mode, Some(NonemptinessMode::GroupDirect));
    }

    #[test]
    fn pgl4_gap_value() {
        let d = group(Series::A, 3);
        let eta1 = curve(&d, &[0, 1, 0]);
        let eta2 = curve(&d, &[1, 0, 1]);
        assert_eq!(reducibility_gap(&eta1, &eta2).unwrap(), 0);
    }

    #[test]
    fn gap_with_no_negative_pairings_is_one() {
        let d = group(Series::A, 3);
        // Both wholly nonnegative on the boundary: movable pieces.
        let eta1 = curve(&d, &[1, 1, 1]);
        let eta2 = curve(&d, &[2, 2, 2]);
        assert_eq!(reducibility_gap(&eta1, &eta2).unwrap(), 1);
    }

    #[test]
    fn gap_a4_against_fixture_oracle() {
        // Independent route: evaluate the gap formula on the fixture
        // Cartan table for A₄ with η = (1,1,1,1), η₁ = (0,1,0,0).
        let cartan = oracle::cartan_fixture(Series::A, 4).unwrap();
        let pair_with = |c: &[i64], i: usize| -> i64 { (0..4).map(|j| c[j] * cartan[j][i]).sum() };
        let eta1_c = [0i64, 1, 0, 0];
        let eta2_c = [1i64, 0, 1, 1];
        let p1: Vec<i64> = (0..4).map(|i| pair_with(&eta1_c, i)).collect();
        let p2: Vec<i64> = (0..4).map(|i| pair_with(&eta2_c, i)).collect();
        let neg = |p: &[i64]| {
            (
                p.iter().filter(|&&v| v < 0).count() as i64,
                p.iter().filter(|&&v| v < 0).sum::<i64>(),
            )
        };
        let (n1, s1) = neg(&p1);
        let (n2, s2) = neg(&p2);
        let oracle_gap = 1 + n1 + n2 + s1 + s2;

        let d = group(Series::A, 4);
        let eta1 = curve(&d, &eta1_c);
        let eta2 = curve(&d, &eta2_c);
        assert_eq!(reducibility_gap(&eta1, &eta2).unwrap(), oracle_gap);
        assert_eq!(oracle_gap, 0);
    }

    #[test]
    fn gap_preconditions() {
        let d = group(Series::A, 3);
        let zero = CurveClass::zero(d.clone());
        let eta2 = curve(&d, &[1, 0, 1]);
        assert!(matches!(
            reducibility_gap(&zero, &eta2),
            Err(Error::NotEffective(_))
        ));
        // Sum negative on the boundary: (0,1,0)+(0,1,0) pairs -2 with X₁.
        let e = curve(&d, &[0, 1, 0]);
        assert!(matches!(
            reducibility_gap(&e, &e),
            Err(Error::NotEffective(_))
        ));
    }

    #[test]
    fn certificate_rejects_zero_eta2() {
        let d = group(Series::A, 3);
        let eta = curve(&d, &[1, 1, 1]);
        let zero = CurveClass::zero(d.clone());
        let cert = check_certificate(&eta, &eta, &zero, false);
        assert!(!cert.is_valid());
        assert!(cert.violations.iter().any(|v| v.contains("eta2 is zero")));
    }

    #[test]
    fn certificate_example_decomposition_a3() {
        // η = (1,1,1), η₁ = (1,0,0), η₂ = (0,1,1): pairings of η₂ against
        // the boundary are (-1, 1, 1) by the Cartan table, so no witness.
        let d = group(Series::A, 3);
        let eta = curve(&d, &[1, 1, 1]);
        let eta1 = curve(&d, &[1, 0, 0]);
        let eta2 = curve(&d, &[0, 1, 1]);
        let cert = check_certificate(&eta, &eta1, &eta2, false);
        assert!(!cert.is_valid());
        assert!(cert.violations.iter().any(|v| v.contains("at most -2")));
    }

    #[test]
    fn rank_one_group_has_no_certificate() {
        let d = group(Series::A, 1);
        let eta = curve(&d, &[1]);
        assert!(find_certificate(&eta, false).unwrap().is_none());
        let eta3 = curve(&d, &[3]);
        assert!(find_certificate(&eta3, false).unwrap().is_none());
    }

    #[test]
    fn d4_certificate_at_central_node() {
        let d = group(Series::D, 4);
        // (1,1,1,1) pairs -1 with the central boundary divisor, so it is
        // not movable and the search refuses it.
        let not_movable = curve(&d, &[1, 1, 1, 1]);
        assert!(matches!(
            find_certificate(&not_movable, false),
            Err(Error::NotMovable)
        ));
        // Doubling the central coefficient restores movability; the
        // constructive stage splits at the centre with ⟨X₂, η₂⟩ = -3.
        let eta = curve(&d, &[1, 2, 1, 1]);
        let cert = find_certificate_constructive(&eta, false).unwrap().unwrap();
        assert!(cert.is_valid());
        assert_eq!(cert.eta1.coeffs(), &[0, 2, 0, 0]);
        assert_eq!(cert.witness_boundary, Some(1));
        let exhaustive = find_certificate_exhaustive(&eta, false).unwrap().unwrap();
        assert!(exhaustive.is_valid());
    }

    #[test]
    fn not_movable_is_an_error() {
        let d = group(Series::A, 3);
        let eta = curve(&d, &[0, 1, 0]);
        assert!(matches!(
            find_certificate(&eta, false),
            Err(Error::NotMovable)
        ));
        assert!(matches!(
            m_circ_nonempty(&CurveClass::zero(d.clone())),
            Err(Error::NotMovable)
        ));
    }

    #[test]
    fn nonemptiness_modes() {
        let d = group(Series::A, 3);
        let eta = curve(&d, &[1, 1, 1]);
        assert_eq!(
            m_circ_nonempty(&eta).unwrap(),
            Nonemptiness::Yes(NonemptinessMode::GroupDirect)
        );
        let s = aprime_rank1();
        let even = curve(&s, &[2]);
        assert_eq!(
            m_circ_nonempty(&even).unwrap(),
            Nonemptiness::Yes(NonemptinessMode::DoubledClass)
        );
        let odd = curve(&s, &[1]);
        assert_eq!(m_circ_nonempty(&odd).unwrap(), Nonemptiness::Unknown);
    }

    #[test]
    fn assumed_mode_only_when_needed() {
        let s = aprime_rank1();
        let odd = curve(&s, &[1]);
        let cert = check_certificate(&odd, &odd, &CurveClass::zero(s.clone()), true);
        assert_eq!(cert.nonemptiness_mode, Some(NonemptinessMode::Assumed));
        let d = group(Series::A, 3);
        let eta = curve(&d, &[1, 1, 1]);
        let eta1 = curve(&d, &[0, 1, 0]);
        let eta2 = curve(&d, &[1, 0, 1]);
        let cert = check_certificate(&eta, &eta1, &eta2, true);
        assert_eq!(cert.nonemptiness_mode, Some(NonemptinessMode::GroupDirect));
    }

    #[test]
    fn dimension_report() {
        let d = group(Series::A, 3);
        let eta = curve(&d, &[1, 1, 1]);
        // Boundary pairings sum to 1 + 0 + 1 = 2; with a_D = (1,1,1) the
        // anticanonical pairing is 2 + 3 = 5.
        let a = [1i64, 1, 1];
        let rep = expected_dimension(&eta, 0, Some(15), Some(&a)).unwrap();
        assert_eq!(rep.pairing_minus_kx, Some(Rat::from_integer(5)));
        assert_eq!(rep.expected_dim, Some(15 + 5 - 3));
        assert_eq!(rep.m_circ_dim, rep.expected_dim);
        // Each marked point adds one.
        for n in 1..4 {
            let r = expected_dimension(&eta, n, Some(15), Some(&a)).unwrap();
            assert_eq!(r.expected_dim, Some(15 + 5 + i64::from(n) - 3));
        }
        // η = 0, n = 3 degenerates to dim X.
        let zero = CurveClass::zero(d.clone());
        let r = expected_dimension(&zero, 3, Some(15), Some(&a)).unwrap();
        assert_eq!(r.expected_dim, Some(15));
        // Without the anticanonical input only dim X survives.
        let r = expected_dimension(&eta, 0, Some(15), None).unwrap();
        assert_eq!(r.pairing_minus_kx, None);
        assert_eq!(r.expected_dim, None);
        // Negative coefficients are rejected.
        let bad = [1i64, -1, 1];
        assert!(matches!(
            expected_dimension(&eta, 0, Some(15), Some(&bad)),
            Err(Error::NegativeAnticanonicalCoeff {
                index: 1,
                value: -1
            })
        ));
    }

    #[test]
    fn dimension_report_brute_force_oracle() {
        // Recompute the A₃ report from the fixture table.
        let cartan = oracle::cartan_fixture(Series::A, 3).unwrap();
        let eta_c = [1i64, 1, 1];
        let a = [2i64, 0, 2];
        let boundary_sum: i64 = (0..3)
            .map(|i| (0..3).map(|j| eta_c[j] * cartan[j][i]).sum::<i64>())
            .sum();
        let color_sum: i64 = (0..3).map(|k| a[k] * eta_c[k]).sum();
        let dim_x = 15i64;
        let n = 2u32;
        let expected = dim_x + boundary_sum + color_sum + i64::from(n) - 3;

        let d = group(Series::A, 3);
        let eta = curve(&d, &eta_c);
        let rep = expected_dimension(&eta, n, Some(dim_x), Some(&a)).unwrap();
        assert_eq!(rep.expected_dim, Some(expected));
    }
}
