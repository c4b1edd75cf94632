//! Spherical data of wonderful varieties.
//!
//! A [`SphericalDatum`] is the combinatorial shadow of a wonderful
//! symmetric variety: the ambient root system, the parabolic set `S^p`,
//! the spherical roots, and the colors with the simple roots moving them.
//! Three construction paths exist:
//!
//! * [`group_datum`] — the wonderful compactification of an adjoint
//!   semisimple group `G`, living on the doubled root system of `G × G`
//!   with the sign convention `σ(αᵢ) = -βᵢ`, so the spherical roots are
//!   `ᾱᵢ = αᵢ + βᵢ`;
//! * [`load_datum`] / [`validate_datum`] — declaratively supplied
//!   symmetric-variety data from a JSON file;
//! * [`subvariety_datum`] — the induced datum of a closed orbit closure
//!   `X_I`, where removed spherical roots trade their colors for
//!   pulled-back Schubert divisors.
//!
//! Colors of type (a) (a simple root that is itself a spherical root)
//! are rejected everywhere: symmetric varieties never produce them and
//! their ρ-values are underdetermined per color.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result, Violation};
use crate::rootsys::{build_root_system, DynkinType, RootSystem, Series};

/// The four color cases attached to a simple root.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ColorType {
    /// Moves no color.
    P,
    /// The root is itself a spherical root (two colors). Unsupported.
    A,
    /// `2α` is a spherical root.
    APrime,
    /// Moves exactly one color, `2α` not a spherical root.
    B,
}

impl fmt::Display for ColorType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ColorType::P => "p",
            ColorType::A => "a",
            ColorType::APrime => "a'",
            ColorType::B => "b",
        };
        write!(f, "{s}")
    }
}

/// Sign tag distinguishing the two pulled-back Schubert divisors of a
/// removed boundary index (`+` = lower moving root, `-` = higher).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ExtraSign {
    Plus,
    Minus,
}

impl ExtraSign {
    pub fn symbol(self) -> char {
        match self {
            ExtraSign::Plus => '+',
            ExtraSign::Minus => '-',
        }
    }
}

/// A color: a B-stable, non-G-stable prime divisor, remembered through
/// the simple roots moving it and its associated B⁻-weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Color {
    /// Stable identity: position in the top-level datum's color list.
    pub id: usize,
    pub label: String,
    /// One or two simple-root indices (0-based, sorted).
    pub moved_by: Vec<usize>,
    pub kind: ColorType,
    /// Weight of the pulled-back line bundle in fundamental-weight
    /// coordinates (`2ω_α`, `ω_α`, or `ω_α + ω_α'`).
    pub weight: Vec<i64>,
}

/// A pulled-back Schubert divisor on a subvariety datum, moved by a
/// single simple root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchubertExtra {
    /// The simple root moving this divisor (unique over the datum).
    pub root: usize,
    /// Top-level boundary index whose removal created it.
    pub origin: usize,
    pub sign: ExtraSign,
}

impl SchubertExtra {
    pub fn label(&self) -> String {
        format!("D{}{}", self.origin + 1, self.sign.symbol())
    }
}

/// A spherical root: integer vector in simple-root coordinates, plus the
/// boundary index it had in the top-level datum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SphericalRoot {
    pub origin: usize,
    pub coeffs: Vec<i64>,
}

impl SphericalRoot {
    /// Simple roots with nonzero coefficient, excluding `s_p`.
    pub fn support_outside(&self, s_p: &BTreeSet<usize>) -> Vec<usize> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|&(i, &c)| c != 0 && !s_p.contains(&i))
            .map(|(i, _)| i)
            .collect()
    }
}

/// What a subvariety datum was cut out of.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BaseKind {
    Group,
    Symmetric,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DatumKind {
    GroupCompactification,
    GenericSymmetric,
    Subvariety {
        base: BaseKind,
        /// Top-level boundary indices intersected away.
        removed: BTreeSet<usize>,
    },
}

impl DatumKind {
    pub fn base(&self) -> BaseKind {
        match self {
            DatumKind::GroupCompactification => BaseKind::Group,
            DatumKind::GenericSymmetric => BaseKind::Symmetric,
            DatumKind::Subvariety { base, .. } => *base,
        }
    }

    /// True for the compactification itself and its orbit closures.
    pub fn is_group_chain(&self) -> bool {
        self.base() == BaseKind::Group
    }

    pub fn removed(&self) -> BTreeSet<usize> {
        match self {
            DatumKind::Subvariety { removed, .. } => removed.clone(),
            _ => BTreeSet::new(),
        }
    }
}

impl fmt::Display for DatumKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DatumKind::GroupCompactification => write!(f, "group compactification"),
            DatumKind::GenericSymmetric => write!(f, "generic symmetric"),
            DatumKind::Subvariety { base, removed } => {
                let b = match base {
                    BaseKind::Group => "group compactification",
                    BaseKind::Symmetric => "generic symmetric",
                };
                let idx: Vec<String> = removed.iter().map(|i| (i + 1).to_string()).collect();
                write!(f, "subvariety of {} (I = {{{}}})", b, idx.join(","))
            }
        }
    }
}

/// One element of the Picard basis: a surviving color (by id) or a
/// pulled-back Schubert divisor (by the root moving it). The dual curve
/// basis is indexed identically.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BasisElem {
    Color(usize),
    Extra(usize),
}

/// Validated spherical datum. Immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SphericalDatum {
    root_system: RootSystem,
    s_p: BTreeSet<usize>,
    spherical_roots: Vec<SphericalRoot>,
    colors: Vec<Color>,
    extras: Vec<SchubertExtra>,
    /// Colors moved by simple roots that are themselves spherical roots.
    /// Always empty: type (a) data are rejected at validation.
    a_gx: Vec<usize>,
    kind: DatumKind,
}

impl SphericalDatum {
    pub fn root_system(&self) -> &RootSystem {
        &self.root_system
    }

    pub fn s_p(&self) -> &BTreeSet<usize> {
        &self.s_p
    }

    pub fn spherical_roots(&self) -> &[SphericalRoot] {
        &self.spherical_roots
    }

    /// Number of boundary divisors (= number of spherical roots).
    pub fn boundary_count(&self) -> usize {
        self.spherical_roots.len()
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn extras(&self) -> &[SchubertExtra] {
        &self.extras
    }

    pub fn a_gx(&self) -> &[usize] {
        &self.a_gx
    }

    pub fn kind(&self) -> &DatumKind {
        &self.kind
    }

    /// Picard basis: colors in list order, then Schubert extras.
    pub fn basis(&self) -> Vec<BasisElem> {
        self.colors
            .iter()
            .map(|c| BasisElem::Color(c.id))
            .chain(self.extras.iter().map(|e| BasisElem::Extra(e.root)))
            .collect()
    }

    pub fn basis_len(&self) -> usize {
        self.colors.len() + self.extras.len()
    }

    pub fn basis_index(&self, elem: &BasisElem) -> Option<usize> {
        match elem {
            BasisElem::Color(id) => self.colors.iter().position(|c| c.id == *id),
            BasisElem::Extra(root) => self
                .extras
                .iter()
                .position(|e| e.root == *root)
                .map(|k| self.colors.len() + k),
        }
    }

    pub fn basis_label(&self, elem: &BasisElem) -> String {
        match elem {
            BasisElem::Color(id) => self
                .colors
                .iter()
                .find(|c| c.id == *id)
                .map(|c| c.label.clone())
                .unwrap_or_else(|| format!("D?{id}")),
            BasisElem::Extra(root) => self
                .extras
                .iter()
                .find(|e| e.root == *root)
                .map(SchubertExtra::label)
                .unwrap_or_else(|| format!("E?{root}")),
        }
    }

    pub fn color_by_id(&self, id: usize) -> Option<&Color> {
        self.colors.iter().find(|c| c.id == id)
    }

    pub fn extra_by_root(&self, root: usize) -> Option<&SchubertExtra> {
        self.extras.iter().find(|e| e.root == root)
    }

    /// Basis divisors moved by a simple root.
    pub fn moved_elems(&self, root: usize) -> Vec<BasisElem> {
        let mut out = Vec::new();
        for c in &self.colors {
            if c.moved_by.contains(&root) {
                out.push(BasisElem::Color(c.id));
            }
        }
        for e in &self.extras {
            if e.root == root {
                out.push(BasisElem::Extra(e.root));
            }
        }
        out
    }

    /// Whether `2α` is a spherical root of this datum.
    pub fn has_doubled_root(&self, alpha: usize) -> bool {
        self.spherical_roots.iter().any(|g| {
            g.coeffs
                .iter()
                .enumerate()
                .all(|(j, &c)| c == if j == alpha { 2 } else { 0 })
        })
    }

    /// Whether `α` itself is a spherical root (the rejected type-(a) case).
    pub fn has_simple_spherical_root(&self) -> Option<usize> {
        for g in &self.spherical_roots {
            let support: Vec<usize> = g
                .coeffs
                .iter()
                .enumerate()
                .filter(|(_, &c)| c != 0)
                .map(|(i, _)| i)
                .collect();
            if support.len() == 1 && g.coeffs[support[0]] == 1 {
                return Some(support[0]);
            }
        }
        None
    }

    /// The simple roots of the Levi of the fibration `X_I → G/P⁻`:
    /// supports of the surviving spherical roots together with `s_p`.
    pub fn levi_roots(&self) -> BTreeSet<usize> {
        let mut s = self.s_p.clone();
        for g in &self.spherical_roots {
            for r in g.support_outside(&self.s_p) {
                s.insert(r);
            }
        }
        s
    }

    /// Local boundary index of a top-level boundary index, if it survives.
    pub fn local_boundary_index(&self, origin: usize) -> Option<usize> {
        self.spherical_roots.iter().position(|g| g.origin == origin)
    }
}

/// Picard rank: the number of free generators of `Pic`, i.e. surviving
/// colors plus pulled-back Schubert divisors.
pub fn picard_rank(datum: &SphericalDatum) -> usize {
    datum.basis_len()
}

/// The datum of the wonderful compactification of the adjoint semisimple
/// group with root system `rs_g`, sitting inside `G × G`.
///
/// First-factor simple roots are indexed `0..r`, second-factor roots
/// `r..2r`. With `σ(αᵢ) = -βᵢ` the spherical roots are `ᾱᵢ = αᵢ + βᵢ`;
/// the color `Dᵢ` is moved by `{αᵢ, βᵢ}`, has type (b) and weight
/// `ωᵢ + ζᵢ`.
pub fn group_datum(rs_g: &RootSystem) -> SphericalDatum {
    let r = rs_g.rank();
    let doubled = build_root_system(rs_g.dynkin().doubled());
    let total = 2 * r;
    let spherical_roots = (0..r)
        .map(|i| {
            let mut coeffs = vec![0i64; total];
            coeffs[i] = 1;
            coeffs[r + i] = 1;
            SphericalRoot { origin: i, coeffs }
        })
        .collect();
    let colors = (0..r)
        .map(|i| {
            let mut weight = vec![0i64; total];
            weight[i] = 1;
            weight[r + i] = 1;
            Color {
                id: i,
                label: format!("D{}", i + 1),
                moved_by: vec![i, r + i],
                kind: ColorType::B,
                weight,
            }
        })
        .collect();
    SphericalDatum {
        root_system: doubled,
        s_p: BTreeSet::new(),
        spherical_roots,
        colors,
        extras: Vec::new(),
        a_gx: Vec::new(),
        kind: DatumKind::GroupCompactification,
    }
}

/// Convenience: the group datum of a simple type.
pub fn simple_group_datum(series: Series, rank: usize) -> Result<SphericalDatum> {
    Ok(group_datum(&crate::rootsys::RootSystem::simple(
        series, rank,
    )?))
}

/// Classifies every simple root into the four color cases.
///
/// Rejects type (a): a simple root that is itself a spherical root.
pub fn classify_color_types(datum: &SphericalDatum) -> Result<BTreeMap<usize, ColorType>> {
    if let Some(root) = datum.has_simple_spherical_root() {
        return Err(Error::TypeAColorUnsupported { root });
    }
    let mut map = BTreeMap::new();
    for root in 0..datum.root_system().rank() {
        let t = if datum.moved_elems(root).is_empty() {
            ColorType::P
        } else if datum.has_doubled_root(root) {
            ColorType::APrime
        } else {
            ColorType::B
        };
        map.insert(root, t);
    }
    Ok(map)
}

/// The induced datum of the closed G-stable subvariety `X_I`.
///
/// `I` contains local boundary indices of `datum`. Spherical roots in
/// `I` disappear together with their associated colors; each removed
/// root leaves one pulled-back Schubert divisor per simple root in its
/// support outside `s_p` (two for group data: `Dᵢ⁺` for `αᵢ`, `Dᵢ⁻`
/// for `βᵢ`). `s_p` is unchanged.
pub fn subvariety_datum(
    datum: &SphericalDatum,
    indices: &BTreeSet<usize>,
) -> Result<SphericalDatum> {
    for &i in indices {
        if i >= datum.boundary_count() {
            return Err(Error::IndexOutOfRange {
                index: i,
                limit: datum.boundary_count(),
            });
        }
    }
    if indices.is_empty() {
        return Ok(datum.clone());
    }

    let mut removed_origins: BTreeSet<usize> = datum.kind.removed();
    let mut dying_supports: Vec<(usize, Vec<usize>)> = Vec::new();
    for &i in indices {
        let root = &datum.spherical_roots[i];
        removed_origins.insert(root.origin);
        dying_supports.push((root.origin, root.support_outside(&datum.s_p)));
    }

    let dying_roots: BTreeSet<usize> = dying_supports
        .iter()
        .flat_map(|(_, s)| s.iter().copied())
        .collect();

    let spherical_roots = datum
        .spherical_roots
        .iter()
        .enumerate()
        .filter(|(i, _)| !indices.contains(i))
        .map(|(_, g)| g.clone())
        .collect();

    let colors = datum
        .colors
        .iter()
        .filter(|c| c.moved_by.iter().all(|r| !dying_roots.contains(r)))
        .cloned()
        .collect();

    let mut extras = datum.extras.clone();
    for (origin, support) in dying_supports {
        for (k, &root) in support.iter().enumerate() {
            let sign = if k == 0 {
                ExtraSign::Plus
            } else {
                ExtraSign::Minus
            };
            extras.push(SchubertExtra { root, origin, sign });
        }
    }
    extras.sort_by_key(|e| (e.origin, e.sign));

    Ok(SphericalDatum {
        root_system: datum.root_system.clone(),
        s_p: datum.s_p.clone(),
        spherical_roots,
        colors,
        extras,
        a_gx: Vec::new(),
        kind: DatumKind::Subvariety {
            base: datum.kind.base(),
            removed: removed_origins,
        },
    })
}

/// Closed-orbit datum: every boundary index removed.
pub fn closed_orbit_datum(datum: &SphericalDatum) -> Result<SphericalDatum> {
    subvariety_datum(datum, &(0..datum.boundary_count()).collect())
}

// ---------------------------------------------------------------------
// Datum files
// ---------------------------------------------------------------------

/// Kind tag in datum files. Optional; defaults to generic symmetric.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RawKind {
    GroupCompactification,
    #[default]
    GenericSymmetric,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RawColor {
    pub id: String,
    /// 1-based simple-root indices.
    pub moved_by: Vec<usize>,
}

/// On-disk shape of a datum file (see `docs/datum-format.md`).
/// Indices are 1-based in files; the crate is 0-based internally.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RawDatum {
    pub dynkin: Vec<(Series, usize)>,
    #[serde(default, skip_serializing_if = "is_default_kind")]
    pub kind: RawKind,
    #[serde(default)]
    pub s_p: Vec<usize>,
    pub spherical_roots: Vec<Vec<i64>>,
    pub colors: Vec<RawColor>,
}

fn is_default_kind(k: &RawKind) -> bool {
    *k == RawKind::GenericSymmetric
}

fn is_unit_vector(v: &[i64]) -> Option<usize> {
    let mut hit = None;
    for (i, &c) in v.iter().enumerate() {
        match (c, hit) {
            (0, _) => {}
            (1, None) => hit = Some(i),
            _ => return None,
        }
    }
    hit
}

/// Structurally validates a raw datum, reporting every violation with a
/// JSON-pointer-style path, and assembles the validated [`SphericalDatum`].
pub fn validate_datum(raw: &RawDatum) -> Result<SphericalDatum> {
    let mut violations = Vec::new();

    for (k, &(series, rank)) in raw.dynkin.iter().enumerate() {
        if !series.rank_valid(rank) {
            violations.push(Violation::new(
                format!("/dynkin/{k}"),
                format!("invalid rank {rank} for series {series}"),
            ));
        }
    }
    if raw.dynkin.is_empty() {
        violations.push(Violation::new("/dynkin", "empty Dynkin type"));
    }
    if !violations.is_empty() {
        return Err(Error::Validation(violations));
    }

    let dynkin = DynkinType::new(raw.dynkin.clone()).expect("ranks checked above");
    let rs = build_root_system(dynkin);
    let rank = rs.rank();

    let mut s_p = BTreeSet::new();
    for (k, &i) in raw.s_p.iter().enumerate() {
        if i == 0 || i > rank {
            violations.push(Violation::new(
                format!("/s_p/{k}"),
                format!("simple-root index {i} out of range 1..={rank}"),
            ));
        } else if !s_p.insert(i - 1) {
            violations.push(Violation::new(
                format!("/s_p/{k}"),
                format!("duplicate index {i}"),
            ));
        }
    }

    // Spherical roots: right length, nonnegative, nonzero, no type (a),
    // supports outside s_p of size at most two and pairwise disjoint.
    let mut support_owner: BTreeMap<usize, usize> = BTreeMap::new();
    for (i, v) in raw.spherical_roots.iter().enumerate() {
        let path = format!("/spherical_roots/{i}");
        if v.len() != rank {
            violations.push(Violation::new(
                path,
                format!("expected {rank} coefficients, got {}", v.len()),
            ));
            continue;
        }
        if v.iter().any(|&c| c < 0) {
            violations.push(Violation::new(
                path.clone(),
                "spherical roots are nonnegative combinations of simple roots",
            ));
        }
        if v.iter().all(|&c| c == 0) {
            violations.push(Violation::new(path.clone(), "zero vector"));
            continue;
        }
        if let Some(a) = is_unit_vector(v) {
            violations.push(Violation::new(
                path.clone(),
                format!(
                    "simple root {} is itself a spherical root; type (a) colors are unsupported",
                    a + 1
                ),
            ));
        }
        let sr = SphericalRoot {
            origin: i,
            coeffs: v.clone(),
        };
        let support = sr.support_outside(&s_p);
        if support.is_empty() {
            violations.push(Violation::new(
                path.clone(),
                "support lies entirely inside s_p",
            ));
        }
        if support.len() > 2 {
            violations.push(Violation::new(
                path.clone(),
                "a spherical root involves at most two simple roots outside s_p",
            ));
        }
        for r in support {
            if let Some(&other) = support_owner.get(&r) {
                violations.push(Violation::new(
                    path.clone(),
                    format!(
                        "simple root {} already occurs in spherical root {} (supports outside s_p must be disjoint)",
                        r + 1,
                        other + 1
                    ),
                ));
            } else {
                support_owner.insert(r, i);
            }
        }
    }

    // Colors: sane moved_by sets, orthogonality for pairs, unique ids.
    let mut ids = BTreeSet::new();
    let mut movers: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (c, color) in raw.colors.iter().enumerate() {
        if !ids.insert(color.id.clone()) {
            violations.push(Violation::new(
                format!("/colors/{c}/id"),
                format!("duplicate color id `{}`", color.id),
            ));
        }
        let path = format!("/colors/{c}/moved_by");
        if color.moved_by.is_empty() || color.moved_by.len() > 2 {
            violations.push(Violation::new(
                path.clone(),
                "a color is moved by one or two simple roots",
            ));
            continue;
        }
        let mut moved = Vec::new();
        for &i in &color.moved_by {
            if i == 0 || i > rank {
                violations.push(Violation::new(
                    path.clone(),
                    format!("simple-root index {i} out of range 1..={rank}"),
                ));
            } else {
                moved.push(i - 1);
            }
        }
        moved.sort_unstable();
        moved.dedup();
        if moved.len() != color.moved_by.len() {
            violations.push(Violation::new(path.clone(), "duplicate moving root"));
            continue;
        }
        for &r in &moved {
            if s_p.contains(&r) {
                violations.push(Violation::new(
                    path.clone(),
                    format!("simple root {} lies in s_p and moves no color", r + 1),
                ));
            }
            movers.entry(r).or_default().push(c);
        }
        if let [a, b] = moved[..] {
            if rs.pairing(a, b).unwrap_or(0) != 0 {
                violations.push(Violation::new(
                    path.clone(),
                    format!("moving roots {} and {} are not orthogonal", a + 1, b + 1),
                ));
            }
            // Both movers must belong to the same spherical root.
            let oa = support_owner.get(&a);
            let ob = support_owner.get(&b);
            if oa.is_some() && ob.is_some() && oa != ob {
                violations.push(Violation::new(
                    path.clone(),
                    "the two moving roots lie in supports of different spherical roots",
                ));
            }
        }
    }

    // Every simple root outside s_p moves exactly one color.
    for r in 0..rank {
        let n = movers.get(&r).map_or(0, Vec::len);
        if s_p.contains(&r) {
            continue; // per-color check already flags s_p movers
        }
        if n != 1 {
            violations.push(Violation::new(
                "/colors",
                format!(
                    "simple root {} moves {} colors, expected exactly 1",
                    r + 1,
                    n
                ),
            ));
        }
    }

    if !violations.is_empty() {
        return Err(Error::Validation(violations));
    }

    // Assemble colors with kinds and weights, then run the ρ checks that
    // need them (consistency of two-root values, integrality on Σ).
    let spherical_roots: Vec<SphericalRoot> = raw
        .spherical_roots
        .iter()
        .enumerate()
        .map(|(i, v)| SphericalRoot {
            origin: i,
            coeffs: v.clone(),
        })
        .collect();
    let doubled = |alpha: usize| {
        spherical_roots.iter().any(|g| {
            g.coeffs
                .iter()
                .enumerate()
                .all(|(j, &c)| c == if j == alpha { 2 } else { 0 })
        })
    };

    let mut colors = Vec::new();
    for (c, raw_color) in raw.colors.iter().enumerate() {
        let mut moved: Vec<usize> = raw_color.moved_by.iter().map(|&i| i - 1).collect();
        moved.sort_unstable();
        let kind = match moved[..] {
            [a] => {
                if doubled(a) {
                    ColorType::APrime
                } else {
                    ColorType::B
                }
            }
            [a, b] => {
                if doubled(a) || doubled(b) {
                    violations.push(Violation::new(
                        format!("/colors/{c}"),
                        "a color moved by two roots cannot have a doubled spherical root",
                    ));
                }
                let _ = (a, b);
                ColorType::B
            }
            _ => unreachable!("length checked"),
        };
        let mut weight = vec![0i64; rank];
        match (kind, &moved[..]) {
            (ColorType::APrime, [a]) => weight[*a] = 2,
            (_, [a]) => weight[*a] = 1,
            (_, [a, b]) => {
                weight[*a] = 1;
                weight[*b] = 1;
            }
            _ => unreachable!(),
        }
        for g in &spherical_roots {
            let mut values = Vec::new();
            for &a in &moved {
                let pairing = rs
                    .pairing_with_weight(a, &g.coeffs)
                    .expect("length checked");
                if doubled(a) {
                    if pairing % 2 != 0 {
                        violations.push(Violation::new(
                            format!("/colors/{c}"),
                            format!(
                                "rho value against spherical root {} is not an integer (boundary expansions must be integral)",
                                g.origin + 1
                            ),
                        ));
                    }
                    values.push(pairing); // doubled value; compared doubled below
                } else {
                    values.push(2 * pairing);
                }
            }
            if let [x, y] = values[..] {
                if x != y {
                    violations.push(Violation::new(
                        format!("/colors/{c}"),
                        format!(
                            "rho values of the two moving roots disagree on spherical root {}",
                            g.origin + 1
                        ),
                    ));
                }
            }
        }
        colors.push(Color {
            id: c,
            label: raw_color.id.clone(),
            moved_by: moved,
            kind,
            weight,
        });
    }

    let kind = match raw.kind {
        RawKind::GroupCompactification => DatumKind::GroupCompactification,
        RawKind::GenericSymmetric => DatumKind::GenericSymmetric,
    };
    if kind == DatumKind::GroupCompactification {
        // The canonical group shape: doubled type, Σ = {αᵢ + βᵢ},
        // Dᵢ moved by {αᵢ, βᵢ}, empty s_p.
        let reference = {
            let factors = raw.dynkin.clone();
            let half = factors.len() / 2;
            if !factors.len().is_multiple_of(2) || factors[..half] != factors[half..] {
                violations.push(Violation::new(
                    "/kind",
                    "group compactification requires a doubled Dynkin type",
                ));
                None
            } else {
                DynkinType::new(factors[..half].to_vec())
                    .ok()
                    .map(|dt| group_datum(&build_root_system(dt)))
            }
        };
        if let Some(reference) = reference {
            let same = reference.s_p == s_p
                && reference
                    .spherical_roots
                    .iter()
                    .map(|g| &g.coeffs)
                    .eq(raw.spherical_roots.iter())
                && reference.colors.len() == colors.len()
                && reference
                    .colors
                    .iter()
                    .zip(&colors)
                    .all(|(a, b)| a.moved_by == b.moved_by);
            if !same {
                violations.push(Violation::new(
                    "/kind",
                    "datum does not have the canonical group-compactification shape",
                ));
            }
        }
    }

    if !violations.is_empty() {
        return Err(Error::Validation(violations));
    }

    Ok(SphericalDatum {
        root_system: rs,
        s_p,
        spherical_roots,
        colors,
        extras: Vec::new(),
        a_gx: Vec::new(),
        kind,
    })
}

/// Serializes a top-level datum back to the file shape. Subvariety data
/// carry Schubert extras the format cannot express.
pub fn to_raw(datum: &SphericalDatum) -> Result<RawDatum> {
    let kind = match datum.kind {
        DatumKind::GroupCompactification => RawKind::GroupCompactification,
        DatumKind::GenericSymmetric => RawKind::GenericSymmetric,
        DatumKind::Subvariety { .. } => {
            return Err(Error::Parse(
                "subvariety data cannot be written to a datum file".into(),
            ))
        }
    };
    Ok(RawDatum {
        dynkin: datum.root_system.dynkin().factors().to_vec(),
        kind,
        s_p: datum.s_p.iter().map(|&i| i + 1).collect(),
        spherical_roots: datum
            .spherical_roots
            .iter()
            .map(|g| g.coeffs.clone())
            .collect(),
        colors: datum
            .colors
            .iter()
            .map(|c| RawColor {
                id: c.label.clone(),
                moved_by: c.moved_by.iter().map(|&i| i + 1).collect(),
            })
            .collect(),
    })
}

/// Loads and validates a datum file.
pub fn load_datum(path: impl AsRef<Path>) -> Result<SphericalDatum> {
    let text = std::fs::read_to_string(path.as_ref())?;
    let raw: RawDatum = serde_json::from_str(&text).map_err(|e| Error::Parse(e.to_string()))?;
    validate_datum(&raw)
}

/// Writes a datum file (canonical pretty JSON with a trailing newline).
pub fn save_datum(datum: &SphericalDatum, path: impl AsRef<Path>) -> Result<()> {
    let raw = to_raw(datum)?;
    let mut text = serde_json::to_string_pretty(&raw).map_err(|e| Error::Parse(e.to_string()))?;
    text.push('\n');
    std::fs::write(path.as_ref(), text)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a3_group() -> SphericalDatum {
        simple_group_datum(Series::A, 3).unwrap()
    }

    #[test]
    fn group_a3_shape() {
        let d = a3_group();
        assert_eq!(d.boundary_count(), 3);
        assert_eq!(d.colors().len(), 3);
        assert!(d.s_p().is_empty());
        assert!(d.extras().is_empty());
        assert_eq!(picard_rank(&d), 3);
        // ᾱ₂ = α₂ + β₂
        assert_eq!(d.spherical_roots()[1].coeffs, vec![0, 1, 0, 0, 1, 0]);
        assert_eq!(d.colors()[1].moved_by, vec![1, 4]);
        assert_eq!(d.colors()[1].kind, ColorType::B);
    }

    #[test]
    fn group_rank_one() {
        let d = simple_group_datum(Series::A, 1).unwrap();
        assert_eq!(d.boundary_count(), 1);
        assert_eq!(d.colors().len(), 1);
        assert!(d.s_p().is_empty());
    }

    #[test]
    fn group_a2_color_weights() {
        // Two-root colors carry ωᵢ + ζᵢ, recomputed here from the moved-by
        // sets alone.
        let d = simple_group_datum(Series::A, 2).unwrap();
        for (i, c) in d.colors().iter().enumerate() {
            let mut expect = vec![0i64; 4];
            for &r in &c.moved_by {
                expect[r] += 1;
            }
            assert_eq!(c.weight, expect, "color {i}");
        }
        assert_eq!(d.colors()[0].weight, vec![1, 0, 1, 0]);
        assert_eq!(d.colors()[1].weight, vec![0, 1, 0, 1]);
    }

    #[test]
    fn classify_group_roots_as_b() {
        let d = a3_group();
        let map = classify_color_types(&d).unwrap();
        for root in 0..6 {
            assert_eq!(map[&root], ColorType::B);
        }
    }

    #[test]
    fn subvariety_empty_is_identity() {
        let d = a3_group();
        let s = subvariety_datum(&d, &BTreeSet::new()).unwrap();
        assert_eq!(d, s);
    }

    #[test]
    fn subvariety_middle_index() {
        let d = a3_group();
        let s = subvariety_datum(&d, &[1].into_iter().collect()).unwrap();
        assert_eq!(s.boundary_count(), 2);
        assert_eq!(s.spherical_roots()[0].origin, 0);
        assert_eq!(s.spherical_roots()[1].origin, 2);
        assert_eq!(s.colors().len(), 2);
        assert_eq!(s.extras().len(), 2);
        assert_eq!(picard_rank(&s), 4);
        assert_eq!(s.extras()[0].label(), "D2+");
        assert_eq!(s.extras()[1].label(), "D2-");
        assert_eq!(s.extras()[0].root, 1);
        assert_eq!(s.extras()[1].root, 4);
        assert!(s.kind().is_group_chain());
    }

    #[test]
    fn closed_orbit_picard_rank() {
        let d = a3_group();
        let y = closed_orbit_datum(&d).unwrap();
        assert_eq!(y.boundary_count(), 0);
        assert_eq!(y.colors().len(), 0);
        assert_eq!(y.extras().len(), 6);
        assert_eq!(picard_rank(&y), 6);
    }

    #[test]
    fn subvariety_composition() {
        let d = a3_group();
        let one = subvariety_datum(&d, &[0].into_iter().collect()).unwrap();
        // local index 1 of `one` is origin 2
        let two_steps = subvariety_datum(&one, &[1].into_iter().collect()).unwrap();
        let direct = subvariety_datum(&d, &[0, 2].into_iter().collect()).unwrap();
        assert_eq!(two_steps, direct);
    }

    #[test]
    fn levi_roots_of_subvariety() {
        let d = a3_group();
        let s = subvariety_datum(&d, &[1].into_iter().collect()).unwrap();
        let levi: Vec<usize> = s.levi_roots().into_iter().collect();
        assert_eq!(levi, vec![0, 2, 3, 5]);
    }

    fn aprime_rank1_raw() -> RawDatum {
        RawDatum {
            dynkin: vec![(Series::A, 1)],
            kind: RawKind::GenericSymmetric,
            s_p: vec![],
            spherical_roots: vec![vec![2]],
            colors: vec![RawColor {
                id: "D1".into(),
                moved_by: vec![1],
            }],
        }
    }

    #[test]
    fn aprime_datum_classifies() {
        let d = validate_datum(&aprime_rank1_raw()).unwrap();
        assert_eq!(d.colors()[0].kind, ColorType::APrime);
        assert_eq!(d.colors()[0].weight, vec![2]);
        let map = classify_color_types(&d).unwrap();
        assert_eq!(map[&0], ColorType::APrime);
    }

    #[test]
    fn type_a_rejected() {
        let mut raw = aprime_rank1_raw();
        raw.spherical_roots = vec![vec![1]];
        let err = validate_datum(&raw).unwrap_err();
        assert!(err
            .violations()
            .iter()
            .any(|v| v.message.contains("type (a)")));
    }

    #[test]
    fn root_moving_two_colors_rejected() {
        let raw = RawDatum {
            dynkin: vec![(Series::A, 2)],
            kind: RawKind::GenericSymmetric,
            s_p: vec![],
            spherical_roots: vec![vec![1, 1]],
            colors: vec![
                RawColor {
                    id: "D1".into(),
                    moved_by: vec![1],
                },
                RawColor {
                    id: "D2".into(),
                    moved_by: vec![1],
                },
            ],
        };
        let err = validate_datum(&raw).unwrap_err();
        assert!(err
            .violations()
            .iter()
            .any(|v| v.path == "/colors" && v.message.contains("moves 2 colors")));
    }

    #[test]
    fn nonorthogonal_pair_rejected() {
        let raw = RawDatum {
            dynkin: vec![(Series::A, 2)],
            kind: RawKind::GenericSymmetric,
            s_p: vec![],
            spherical_roots: vec![vec![1, 1]],
            colors: vec![RawColor {
                id: "D1".into(),
                moved_by: vec![1, 2],
            }],
        };
        let err = validate_datum(&raw).unwrap_err();
        assert!(err
            .violations()
            .iter()
            .any(|v| v.message.contains("not orthogonal")));
    }

    #[test]
    fn exceptional_pair_has_rank_l_plus_one() {
        // One spherical root moved through two nonorthogonal simple roots
        // carried by two distinct colors: Pic rank l + 1.
        let raw = RawDatum {
            dynkin: vec![(Series::A, 2)],
            kind: RawKind::GenericSymmetric,
            s_p: vec![],
            spherical_roots: vec![vec![1, 1]],
            colors: vec![
                RawColor {
                    id: "D1".into(),
                    moved_by: vec![1],
                },
                RawColor {
                    id: "D2".into(),
                    moved_by: vec![2],
                },
            ],
        };
        let d = validate_datum(&raw).unwrap();
        assert_eq!(picard_rank(&d), 2);
        assert_eq!(d.boundary_count(), 1);
    }

    #[test]
    fn group_file_kind_round_trip() {
        let d = a3_group();
        let raw = to_raw(&d).unwrap();
        let d2 = validate_datum(&raw).unwrap();
        assert_eq!(d, d2);
        assert_eq!(*d2.kind(), DatumKind::GroupCompactification);
    }

    #[test]
    fn save_load_bit_identical() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("a3.json");
        let d = a3_group();
        save_datum(&d, &path).unwrap();
        let bytes1 = std::fs::read(&path).unwrap();
        let d2 = load_datum(&path).unwrap();
        assert_eq!(d, d2);
        save_datum(&d2, &path).unwrap();
        let bytes2 = std::fs::read(&path).unwrap();
        assert_eq!(bytes1, bytes2);
    }
}
