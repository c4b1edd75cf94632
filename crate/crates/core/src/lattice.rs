//! Divisor and curve lattices on a spherical datum.
//!
//! `Pic(X)` is free on the basis returned by [`SphericalDatum::basis`]
//! (colors, then pulled-back Schubert divisors); `N₁(X)` carries the dual
//! basis of curve classes, so the intersection pairing of classes in dual
//! coordinates is a plain dot product. The content lives in the ρ-values:
//! the pairing of a basis divisor with a spherical root, computed from
//! Cartan pairings by color type, through which boundary divisors expand
//! in the basis.
//!
//! All arithmetic is exact; coefficients are integers except where a
//! type-(a') ρ-value contributes a half.

use std::sync::Arc;

use num_rational::Ratio;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::spherical::{BasisElem, ColorType, SphericalDatum};

/// Exact rational scalar (denominators are 1 or 2 in practice).
pub type Rat = Ratio<i64>;

fn rat(n: i64) -> Rat {
    Rat::from_integer(n)
}

fn same_datum(a: &Arc<SphericalDatum>, b: &Arc<SphericalDatum>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

/// An element of `Pic(X) ⊗ ℚ` in basis coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorClass {
    datum: Arc<SphericalDatum>,
    coeffs: Vec<Rat>,
}

impl DivisorClass {
    pub fn new(datum: Arc<SphericalDatum>, coeffs: Vec<Rat>) -> Result<Self> {
        if coeffs.len() != datum.basis_len() {
            return Err(Error::ArityMismatch {
                expected: datum.basis_len(),
                got: coeffs.len(),
            });
        }
        Ok(DivisorClass { datum, coeffs })
    }

    pub fn from_integers(datum: Arc<SphericalDatum>, coeffs: &[i64]) -> Result<Self> {
        DivisorClass::new(datum, coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn zero(datum: Arc<SphericalDatum>) -> Self {
        let n = datum.basis_len();
        DivisorClass {
            datum,
            coeffs: vec![Rat::zero(); n],
        }
    }

    /// The basis divisor itself.
    pub fn basis_divisor(datum: Arc<SphericalDatum>, elem: &BasisElem) -> Result<Self> {
        let idx = datum.basis_index(elem).ok_or(Error::DatumMismatch)?;
        let mut coeffs = vec![Rat::zero(); datum.basis_len()];
        coeffs[idx] = rat(1);
        Ok(DivisorClass { datum, coeffs })
    }

    pub fn datum(&self) -> &Arc<SphericalDatum> {
        &self.datum
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, elem: &BasisElem) -> Option<Rat> {
        self.datum.basis_index(elem).map(|i| self.coeffs[i])
    }

    pub fn add(&self, other: &DivisorClass) -> Result<DivisorClass> {
        if !same_datum(&self.datum, &other.datum) {
            return Err(Error::DatumMismatch);
        }
        Ok(DivisorClass {
            datum: self.datum.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn scaled(&self, k: i64) -> DivisorClass {
        DivisorClass {
            datum: self.datum.clone(),
            coeffs: self.coeffs.iter().map(|c| c * rat(k)).collect(),
        }
    }
}

/// An element of `N₁(X)` in dual-basis coordinates (integral).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveClass {
    datum: Arc<SphericalDatum>,
    coeffs: Vec<i64>,
}

impl CurveClass {
    pub fn new(datum: Arc<SphericalDatum>, coeffs: Vec<i64>) -> Result<Self> {
        if coeffs.len() != datum.basis_len() {
            return Err(Error::ArityMismatch {
                expected: datum.basis_len(),
                got: coeffs.len(),
            });
        }
        Ok(CurveClass { datum, coeffs })
    }

    pub fn zero(datum: Arc<SphericalDatum>) -> Self {
        let n = datum.basis_len();
        CurveClass {
            datum,
            coeffs: vec![0; n],
        }
    }

    /// The dual curve class of a basis divisor.
    pub fn dual_basis_curve(datum: Arc<SphericalDatum>, elem: &BasisElem) -> Result<Self> {
        let idx = datum.basis_index(elem).ok_or(Error::DatumMismatch)?;
        let mut coeffs = vec![0; datum.basis_len()];
        coeffs[idx] = 1;
        Ok(CurveClass { datum, coeffs })
    }

    pub fn datum(&self) -> &Arc<SphericalDatum> {
        &self.datum
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coeff(&self, elem: &BasisElem) -> Option<i64> {
        self.datum.basis_index(elem).map(|i| self.coeffs[i])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn add(&self, other: &CurveClass) -> Result<CurveClass> {
        if !same_datum(&self.datum, &other.datum) {
            return Err(Error::DatumMismatch);
        }
        Ok(CurveClass {
            datum: self.datum.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &CurveClass) -> Result<CurveClass> {
        if !same_datum(&self.datum, &other.datum) {
            return Err(Error::DatumMismatch);
        }
        Ok(CurveClass {
            datum: self.datum.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn scaled(&self, k: i64) -> CurveClass {
        CurveClass {
            datum: self.datum.clone(),
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    /// Halves the class when every coefficient is even.
    pub fn halved(&self) -> Option<CurveClass> {
        if self.coeffs.iter().all(|c| c % 2 == 0) {
            Some(CurveClass {
                datum: self.datum.clone(),
                coeffs: self.coeffs.iter().map(|c| c / 2).collect(),
            })
        } else {
            None
        }
    }
}

/// A curve class on the closed orbit `G/P⁻`, expanded in Schubert curve
/// classes indexed by all simple roots (entries on `s_p` roots must
/// vanish — those Schubert curves do not exist on `G/P⁻`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchubertClass(pub Vec<i64>);

impl SchubertClass {
    pub fn is_effective(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }
}

/// ρ-value of a basis divisor against the datum's `i`-th spherical root:
/// `½·α∨(γ)` when `2α` is a spherical root, `α∨(γ)` otherwise. For a
/// color moved by two roots the two candidate values must agree.
pub fn rho_value(datum: &SphericalDatum, elem: &BasisElem, gamma: usize) -> Result<Rat> {
    if gamma >= datum.boundary_count() {
        return Err(Error::IndexOutOfRange {
            index: gamma,
            limit: datum.boundary_count(),
        });
    }
    let coeffs = &datum.spherical_roots()[gamma].coeffs;
    let movers: Vec<usize> = match elem {
        BasisElem::Color(id) => datum
            .color_by_id(*id)
            .ok_or(Error::IndexOutOfRange {
                index: *id,
                limit: datum.colors().len(),
            })?
            .moved_by
            .clone(),
        BasisElem::Extra(root) => {
            datum.extra_by_root(*root).ok_or(Error::IndexOutOfRange {
                index: *root,
                limit: datum.root_system().rank(),
            })?;
            vec![*root]
        }
    };
    let mut values = Vec::with_capacity(2);
    for alpha in movers {
        let p = datum.root_system().pairing_with_weight(alpha, coeffs)?;
        let v = if datum.has_doubled_root(alpha) {
            Rat::new(p, 2)
        } else {
            rat(p)
        };
        values.push(v);
    }
    if let [a, b] = values[..] {
        if a != b {
            return Err(Error::RhoInconsistent {
                first: a.to_string(),
                second: b.to_string(),
            });
        }
    }
    Ok(values[0])
}

/// A boundary divisor with its expansion in the Picard basis:
/// `Xᵢ = Σ_D ⟨ρ(D), γᵢ⟩ D`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryDivisor {
    pub index: usize,
    pub origin: usize,
    pub expansion: DivisorClass,
}

pub fn boundary_divisor(datum: &Arc<SphericalDatum>, i: usize) -> Result<BoundaryDivisor> {
    if i >= datum.boundary_count() {
        return Err(Error::IndexOutOfRange {
            index: i,
            limit: datum.boundary_count(),
        });
    }
    let coeffs = datum
        .basis()
        .iter()
        .map(|elem| rho_value(datum, elem, i))
        .collect::<Result<Vec<Rat>>>()?;
    Ok(BoundaryDivisor {
        index: i,
        origin: datum.spherical_roots()[i].origin,
        expansion: DivisorClass::new(datum.clone(), coeffs)?,
    })
}

/// Intersection pairing of classes in dual bases.
pub fn pair(d: &DivisorClass, c: &CurveClass) -> Result<Rat> {
    if !same_datum(d.datum(), c.datum()) {
        return Err(Error::DatumMismatch);
    }
    Ok(d.coeffs()
        .iter()
        .zip(c.coeffs())
        .map(|(a, &b)| a * rat(b))
        .sum())
}

/// `⟨Xᵢ, η⟩`.
pub fn boundary_pairing(datum: &Arc<SphericalDatum>, i: usize, c: &CurveClass) -> Result<Rat> {
    pair(&boundary_divisor(datum, i)?.expansion, c)
}

/// Matrix `M[i][k] = ⟨Xᵢ, basis curve k⟩` (rows: boundary divisors,
/// columns: the dual curve basis).
pub fn boundary_pairing_matrix(datum: &Arc<SphericalDatum>) -> Result<Vec<Vec<Rat>>> {
    (0..datum.boundary_count())
        .map(|i| Ok(boundary_divisor(datum, i)?.expansion.coeffs().to_vec()))
        .collect()
}

/// Nef test: nonnegative on the dual curve basis, i.e. all basis
/// coordinates nonnegative.
pub fn is_nef(d: &DivisorClass) -> bool {
    d.coeffs().iter().all(|c| *c >= Rat::zero())
}

/// Sufficient effectivity test for curve classes: nonnegative
/// coordinates in the dual basis (nonnegative combinations of the `C_D`).
pub fn is_effective_curve(c: &CurveClass) -> bool {
    c.coeffs().iter().all(|&x| x >= 0)
}

/// Movability: nonnegative against every generator of the effective
/// divisor cone, i.e. every basis divisor and every boundary divisor.
pub fn is_movable(c: &CurveClass) -> bool {
    if !is_effective_curve(c) {
        return false;
    }
    (0..c.datum().boundary_count()).all(|i| {
        boundary_pairing(c.datum(), i, c)
            .map(|v| v >= Rat::zero())
            .unwrap_or(false)
    })
}

/// Pushforward along the closed-orbit inclusion: a Schubert curve class
/// `[C_α]` maps to `[C_D]` for the unique basis divisor `D` moved by
/// `α`, doubled when `2α` is a spherical root.
pub fn closed_orbit_pushforward(
    datum: &Arc<SphericalDatum>,
    sc: &SchubertClass,
) -> Result<CurveClass> {
    let rank = datum.root_system().rank();
    if sc.0.len() != rank {
        return Err(Error::ArityMismatch {
            expected: rank,
            got: sc.0.len(),
        });
    }
    let mut out = vec![0i64; datum.basis_len()];
    for (alpha, &c) in sc.0.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let moved = datum.moved_elems(alpha);
        if moved.is_empty() {
            return Err(Error::RootMovesNoColor { root: alpha });
        }
        // Validated data: exactly one basis divisor per moving root.
        let elem = moved[0];
        let k = if datum.has_doubled_root(alpha) { 2 } else { 1 };
        let idx = datum.basis_index(&elem).expect("basis element exists");
        out[idx] += k * c;
    }
    CurveClass::new(datum.clone(), out)
}

/// Finds an effective Schubert class `η_Y` with pushforward `m·η`.
///
/// With no type-(a') colors (in particular on group chains) `m = 1`:
/// two-root colors put the whole coefficient on their lower moving root,
/// single-root divisors take it directly. Otherwise `m = 2`: doubled
/// spherical roots contribute the factor themselves, single (b)-movers
/// take `2c_D`, and two-root colors split `c_D` over both movers.
pub fn lift_to_closed_orbit(eta: &CurveClass) -> Result<(SchubertClass, i64)> {
    if !is_movable(eta) {
        return Err(Error::NotMovable);
    }
    let datum = eta.datum();
    let rank = datum.root_system().rank();
    let mut coeffs = vec![0i64; rank];
    let has_aprime = datum.colors().iter().any(|c| c.kind == ColorType::APrime);
    let m = if has_aprime { 2 } else { 1 };
    for (k, elem) in datum.basis().iter().enumerate() {
        let c = eta.coeffs()[k];
        if c == 0 {
            continue;
        }
        match elem {
            BasisElem::Color(id) => {
                let color = datum.color_by_id(*id).expect("basis color");
                match (m, &color.moved_by[..]) {
                    (1, [a]) => coeffs[*a] += c,
                    (1, [a, _b]) => coeffs[*a] += c,
                    (2, [a]) => {
                        if color.kind == ColorType::APrime {
                            coeffs[*a] += c;
                        } else {
                            coeffs[*a] += 2 * c;
                        }
                    }
                    (2, [a, b]) => {
                        coeffs[*a] += c;
                        coeffs[*b] += c;
                    }
                    _ => unreachable!("moved_by has one or two roots"),
                }
            }
            BasisElem::Extra(root) => {
                coeffs[*root] += m * c;
            }
        }
    }
    Ok((SchubertClass(coeffs), m))
}

/// Pullback of a divisor class along the inclusion of a boundary divisor
/// in a group-compactification chain. `child` must be the one-step
/// subvariety datum of the class's datum: the removed color splits into
/// its two Schubert divisors, everything else maps to its namesake.
pub fn color_pullback(class: &DivisorClass, child: &Arc<SphericalDatum>) -> Result<DivisorClass> {
    let source = class.datum();
    if !source.kind().is_group_chain() || !child.kind().is_group_chain() {
        return Err(Error::NotGroupKind);
    }
    let removed_new: Vec<usize> = child
        .kind()
        .removed()
        .difference(&source.kind().removed())
        .copied()
        .collect();
    let [i0] = removed_new[..] else {
        return Err(Error::DatumMismatch);
    };
    let local = source
        .local_boundary_index(i0)
        .ok_or(Error::DatumMismatch)?;
    let expected = crate::spherical::subvariety_datum(source, &[local].into_iter().collect())?;
    if expected != **child {
        return Err(Error::DatumMismatch);
    }

    // Roots of the two Schubert divisors replacing the removed color.
    let support = source.spherical_roots()[local].support_outside(source.s_p());
    let mut out = vec![Rat::zero(); child.basis_len()];
    for (k, elem) in source.basis().iter().enumerate() {
        let c = class.coeffs()[k];
        if c.is_zero() {
            continue;
        }
        match elem {
            BasisElem::Color(id) if child.color_by_id(*id).is_none() => {
                // The color associated with the removed root.
                for &root in &support {
                    let idx = child
                        .basis_index(&BasisElem::Extra(root))
                        .expect("new extras exist on the child");
                    out[idx] += c;
                }
            }
            elem => {
                let idx = child.basis_index(elem).ok_or(Error::DatumMismatch)?;
                out[idx] += c;
            }
        }
    }
    DivisorClass::new(child.clone(), out)
}
