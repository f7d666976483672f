//! Points of `B^n`, the Boolean metric, convex combinations, hulls and
//! orthogonal complements over a finite atomic algebra.
//!
//! Everything here works atom by atom. On a single atom `e`, a point `x` is
//! described by its *pattern*: the bit vector `(x_1 ∧ e, …, x_n ∧ e)`. Two
//! points are at distance containing `e` exactly when their patterns on `e`
//! differ, and a convex combination picks, on each atom, the pattern of one
//! of the combined points. The convex hull of `S` is therefore the product,
//! over the atoms, of the sets of patterns that `S` realizes.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use itertools::Itertools;

use crate::algebra::{BooleanElement, Bits};
use crate::error::{Error, Result};

/// Hard ceiling on the size of a materialized hull.
pub const HULL_POINT_LIMIT: usize = 1_000_000;

/// A point of `B^n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    coords: Vec<Bits>,
}

/// The coordinates of a point restricted to one atom, bit `i` holding
/// coordinate `i`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Pattern(u64);

impl Pattern {
    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn coordinate(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }
}

// Same order as points: coordinate 0 first, a set bit sorts after a clear one.
impl Ord for Pattern {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0.reverse_bits().cmp(&other.0.reverse_bits())
    }
}

impl PartialOrd for Pattern {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Point {
    pub const MAX_DIM: usize = 64;

    pub fn new(coords: Vec<Bits>) -> Result<Self> {
        let first = coords.first().ok_or(Error::DimensionMismatch { expected: 1, found: 0 })?;
        if coords.len() > Self::MAX_DIM {
            return Err(Error::DimensionMismatch { expected: Self::MAX_DIM, found: coords.len() });
        }
        let atoms = first.atom_count();
        if let Some(bad) = coords.iter().find(|c| c.atom_count() != atoms) {
            return Err(Error::MixedAlgebra {
                left: format!("finite k={atoms}"),
                right: format!("finite k={}", bad.atom_count()),
            });
        }
        Ok(Point { coords })
    }

    /// Parses a point from element literals, one per coordinate.
    pub fn parse<S: AsRef<str>>(literals: &[S]) -> Result<Self> {
        let coords = literals
            .iter()
            .map(|s| s.as_ref().parse())
            .collect::<Result<Vec<Bits>>>()?;
        Point::new(coords)
    }

    pub fn zero(atoms: usize, dim: usize) -> Self {
        Point { coords: vec![Bits::zero(atoms); dim] }
    }

    pub fn coords(&self) -> &[Bits] {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn atoms(&self) -> usize {
        self.coords[0].atom_count()
    }

    pub fn pattern(&self, atom: usize) -> Pattern {
        Pattern(
            self.coords
                .iter()
                .enumerate()
                .fold(0, |acc, (i, c)| acc | (c.has_atom(atom) as u64) << i),
        )
    }

    /// Reassembles a point from one pattern per atom.
    pub fn from_patterns(patterns: &[Pattern], dim: usize) -> Self {
        let atoms = patterns.len();
        let coords = (0..dim)
            .map(|i| {
                let mask = patterns
                    .iter()
                    .enumerate()
                    .fold(0u64, |acc, (e, p)| acc | (p.coordinate(i) as u64) << e);
                Bits::new(mask, atoms)
            })
            .collect();
        Point { coords }
    }

    fn compatible(&self, other: &Point) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: other.dim() });
        }
        if self.atoms() != other.atoms() {
            return Err(Error::MixedAlgebra {
                left: format!("finite k={}", self.atoms()),
                right: format!("finite k={}", other.atoms()),
            });
        }
        Ok(())
    }

    /// Coordinatewise symmetric difference.
    pub fn translate(&self, by: &Point) -> Result<Point> {
        self.compatible(by)?;
        Ok(Point {
            coords: self
                .coords
                .iter()
                .zip(&by.coords)
                .map(|(a, b)| a.symmetric_difference(b))
                .collect(),
        })
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.coords.iter().join(","))
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `d(x, y) = ⋁ (x_i △ y_i)`.
pub fn distance(x: &Point, y: &Point) -> Result<Bits> {
    x.compatible(y)?;
    Ok(dist(x, y))
}

#[inline]
pub(crate) fn dist(x: &Point, y: &Point) -> Bits {
    debug_assert_eq!(x.dim(), y.dim());
    x.coords
        .iter()
        .zip(&y.coords)
        .fold(Bits::zero(x.atoms()), |acc, (a, b)| acc.join(&a.symmetric_difference(b)))
}

/// Distance in the product space: `d(x, x') ∨ d(y, y')`.
pub fn product_distance(a: (&Point, &Point), b: (&Point, &Point)) -> Result<Bits> {
    Ok(distance(a.0, b.0)?.join(&distance(a.1, b.1)?))
}

/// An explicit finite subset of `B^n`, kept sorted and deduplicated.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FiniteSpace {
    atoms: usize,
    dim: usize,
    points: Vec<Point>,
    basepoint: Option<usize>,
}

impl FiniteSpace {
    pub fn new(points: impl IntoIterator<Item = Point>) -> Result<Self> {
        let mut points: Vec<Point> = points.into_iter().collect();
        let first = points.first().ok_or(Error::EmptySpace)?.clone();
        for p in &points {
            first.compatible(p)?;
        }
        points.sort();
        points.dedup();
        Ok(FiniteSpace { atoms: first.atoms(), dim: first.dim(), points, basepoint: None })
    }

    pub(crate) fn from_sorted(atoms: usize, dim: usize, points: Vec<Point>) -> Self {
        debug_assert!(points.windows(2).all(|w| w[0] < w[1]));
        FiniteSpace { atoms, dim, points, basepoint: None }
    }

    /// Sets the basepoint; it must be a member.
    pub fn with_basepoint(mut self, zero: &Point) -> Result<Self> {
        let idx = self.index_of(zero).ok_or_else(|| Error::NotInSpace { point: zero.clone() })?;
        self.basepoint = Some(idx);
        Ok(self)
    }

    pub fn with_basepoint_index(mut self, index: usize) -> Result<Self> {
        if index >= self.points.len() {
            return Err(Error::CoefficientArity { index, len: self.points.len() });
        }
        self.basepoint = Some(index);
        Ok(self)
    }

    pub fn atoms(&self) -> usize {
        self.atoms
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn basepoint(&self) -> Option<&Point> {
        self.basepoint.map(|i| &self.points[i])
    }

    pub fn basepoint_index(&self) -> Option<usize> {
        self.basepoint
    }

    /// The basepoint, or the canonically first point when none is set.
    pub fn anchor(&self) -> &Point {
        self.basepoint().unwrap_or(&self.points[0])
    }

    pub fn index_of(&self, p: &Point) -> Option<usize> {
        self.points.binary_search(p).ok()
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.index_of(p).is_some()
    }

    pub fn is_subset_of(&self, other: &FiniteSpace) -> bool {
        self.points.iter().all(|p| other.contains(p))
    }

    /// |x| = d(x, 0).
    pub fn norm(&self, x: &Point) -> Result<Bits> {
        let zero = self.basepoint().ok_or(Error::MissingBasepoint)?;
        distance(x, zero)
    }

    /// Distinct patterns on each atom, in canonical order.
    pub fn patterns(&self) -> Vec<Vec<Pattern>> {
        atom_patterns(&self.points, self.atoms)
    }

    /// Number of points of the hull, saturating.
    pub fn hull_size(&self) -> usize {
        self.patterns()
            .iter()
            .fold(1usize, |acc, p| acc.saturating_mul(p.len()))
    }

    /// A finite space is convex iff it is the full product of its per-atom
    /// pattern sets.
    pub fn is_convex(&self) -> bool {
        self.hull_size() == self.len()
    }

    pub(crate) fn require_convex(&self) -> Result<()> {
        if self.is_convex() {
            Ok(())
        } else {
            Err(Error::NotConvex)
        }
    }

    /// Checks the metric axioms on every triple.
    pub fn check_metric(&self) -> std::result::Result<(), (Point, Point, Point)> {
        for x in &self.points {
            for y in &self.points {
                let dxy = dist(x, y);
                if (dxy.is_zero()) != (x == y) || dxy != dist(y, x) {
                    return Err((x.clone(), y.clone(), y.clone()));
                }
                for z in &self.points {
                    if !dist(x, z).is_below(&dxy.join(&dist(y, z))) {
                        return Err((x.clone(), y.clone(), z.clone()));
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for FiniteSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteSpace")
            .field("points", &self.points)
            .field("basepoint", &self.basepoint())
            .finish()
    }
}

pub(crate) fn atom_patterns(points: &[Point], atoms: usize) -> Vec<Vec<Pattern>> {
    (0..atoms)
        .map(|e| {
            let set: BTreeSet<Pattern> = points.iter().map(|p| p.pattern(e)).collect();
            set.into_iter().collect()
        })
        .collect()
}

/// Coefficients of a convex combination: for each atom, the index of the
/// combined point whose pattern is copied there. The induced elements
/// `a_i = ⋁ {e : selection[e] = i}` form a partition of unity.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ConvexCoefficients {
    selection: Vec<usize>,
    arity: usize,
}

impl ConvexCoefficients {
    pub fn new(selection: Vec<usize>, arity: usize) -> Result<Self> {
        if let Some(&index) = selection.iter().find(|&&i| i >= arity) {
            return Err(Error::CoefficientArity { index, len: arity });
        }
        if selection.is_empty() {
            return Err(Error::InvalidAtomCount(0));
        }
        Ok(ConvexCoefficients { selection, arity })
    }

    /// Builds coefficients from a partition `a_0, …, a_m` of unity.
    pub fn from_partition(weights: &[Bits]) -> Result<Self> {
        let atoms = weights.first().ok_or(Error::NotAPartition)?.atom_count();
        let mut selection = Vec::with_capacity(atoms);
        for e in 0..atoms {
            let mut owners = weights.iter().positions(|w| w.has_atom(e));
            match (owners.next(), owners.next()) {
                (Some(i), None) => selection.push(i),
                _ => return Err(Error::NotAPartition),
            }
        }
        Ok(ConvexCoefficients { selection, arity: weights.len() })
    }

    /// All weight on generator `index`.
    pub fn unit(index: usize, arity: usize, atoms: usize) -> Result<Self> {
        Self::new(vec![index; atoms], arity)
    }

    pub fn selection(&self) -> &[usize] {
        &self.selection
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn atoms(&self) -> usize {
        self.selection.len()
    }

    /// The partition `a_0, …, a_m`.
    pub fn weights(&self) -> Vec<Bits> {
        let atoms = self.atoms();
        let mut masks = vec![0u64; self.arity];
        for (e, &i) in self.selection.iter().enumerate() {
            masks[i] |= 1 << e;
        }
        masks.into_iter().map(|m| Bits::new(m, atoms)).collect()
    }
}

/// The point `x` with `a_i ∧ d(x, x_i) = 0` for every `i`.
pub fn convex_combine(coeffs: &ConvexCoefficients, points: &[Point]) -> Result<Point> {
    if coeffs.arity() != points.len() {
        return Err(Error::CoefficientArity { index: coeffs.arity(), len: points.len() });
    }
    let first = points.first().ok_or(Error::EmptySpace)?;
    for p in points {
        first.compatible(p)?;
    }
    if first.atoms() != coeffs.atoms() {
        return Err(Error::MixedAlgebra {
            left: format!("finite k={}", first.atoms()),
            right: format!("finite k={}", coeffs.atoms()),
        });
    }
    let patterns: Vec<Pattern> = coeffs
        .selection()
        .iter()
        .enumerate()
        .map(|(e, &i)| points[i].pattern(e))
        .collect();
    Ok(Point::from_patterns(&patterns, first.dim()))
}

/// Whether `x` satisfies the defining equations of the combination.
pub fn satisfies_combination(x: &Point, coeffs: &ConvexCoefficients, points: &[Point]) -> bool {
    coeffs
        .weights()
        .iter()
        .zip(points)
        .all(|(a, p)| a.meet(&dist(x, p)).is_zero())
}

/// Convex hull with the default size ceiling.
pub fn conv_hull(s: &FiniteSpace) -> Result<FiniteSpace> {
    conv_hull_capped(s, HULL_POINT_LIMIT)
}

/// Convex hull, refusing to materialize more than `cap` points (and never
/// more than [`HULL_POINT_LIMIT`]).
pub fn conv_hull_capped(s: &FiniteSpace, cap: usize) -> Result<FiniteSpace> {
    let cap = cap.min(HULL_POINT_LIMIT);
    let patterns = s.patterns();
    let size = s.hull_size();
    if size > cap {
        return Err(Error::CapExceeded { size, cap });
    }
    let mut points: Vec<Point> = patterns
        .iter()
        .map(|ps| ps.iter().copied())
        .multi_cartesian_product()
        .map(|choice| Point::from_patterns(&choice, s.dim))
        .collect();
    if points.is_empty() {
        // multi_cartesian_product of zero atoms never happens; atoms >= 1
        unreachable!("algebra without atoms");
    }
    points.sort();
    let mut hull = FiniteSpace::from_sorted(s.atoms, s.dim, points);
    if let Some(zero) = s.basepoint() {
        hull = hull.with_basepoint(zero)?;
    }
    Ok(hull)
}

/// Hull membership: every atom admits a generator with the same pattern.
pub fn in_hull(x: &Point, s: &FiniteSpace) -> bool {
    x.dim() == s.dim()
        && x.atoms() == s.atoms()
        && (0..s.atoms).all(|e| {
            let pe = x.pattern(e);
            s.points.iter().any(|g| g.pattern(e) == pe)
        })
}

/// Which generator to pick on an atom when several match.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TieBreak {
    First,
    Last,
}

/// Canonical coefficients of `x` over `s`: on each atom, the smallest index
/// of a generator with the same pattern.
pub fn decompose(x: &Point, s: &FiniteSpace) -> Result<ConvexCoefficients> {
    decompose_over(x, s.points(), TieBreak::First)
}

/// Decomposes `x` over an arbitrary generator list (duplicates allowed).
pub fn decompose_over(x: &Point, generators: &[Point], tie: TieBreak) -> Result<ConvexCoefficients> {
    let first = generators.first().ok_or(Error::EmptySpace)?;
    first.compatible(x)?;
    let mut selection = Vec::with_capacity(x.atoms());
    for e in 0..x.atoms() {
        let pe = x.pattern(e);
        let mut matching = generators.iter().positions(|g| g.pattern(e) == pe);
        let pick = match tie {
            TieBreak::First => matching.next(),
            TieBreak::Last => matching.last(),
        };
        match pick {
            Some(i) => selection.push(i),
            None => return Err(Error::NotInHull { point: x.clone(), atom: e }),
        }
    }
    ConvexCoefficients::new(selection, generators.len())
}

/// `x ⊥ y` in a space pointed at `zero`: `d(x, y) = |x| ∨ |y|`.
pub fn orthogonal(x: &Point, y: &Point, zero: &Point) -> bool {
    dist(x, y) == dist(x, zero).join(&dist(y, zero))
}

/// `U^⊥ = {y ∈ X : x ⊥ y for all x ∈ U}`, pointed at the basepoint of `X`.
pub fn orthogonal_complement(u: &FiniteSpace, x: &FiniteSpace) -> Result<FiniteSpace> {
    let zero = x.basepoint().ok_or(Error::MissingBasepoint)?;
    if u.dim() != x.dim() {
        return Err(Error::DimensionMismatch { expected: x.dim(), found: u.dim() });
    }
    if !u.contains(zero) {
        return Err(Error::NotInSpace { point: zero.clone() });
    }
    if let Some(p) = u.points().iter().find(|p| !x.contains(p)) {
        return Err(Error::NotInSpace { point: p.clone() });
    }
    let points: Vec<Point> = x
        .points()
        .iter()
        .filter(|y| u.points().iter().all(|p| orthogonal(p, y, zero)))
        .cloned()
        .collect();
    FiniteSpace::from_sorted(x.atoms, x.dim, points).with_basepoint(zero)
}

/// Whether a map is claimed to be contractive or an isometry.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MapKind {
    Contractive,
    Isometric,
}

/// A map given by its graph, a finite list of `(source, target)` pairs
/// ordered by source.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PartialMap {
    graph: BTreeMap<Point, Point>,
    kind: MapKind,
}

impl PartialMap {
    pub fn new(pairs: impl IntoIterator<Item = (Point, Point)>, kind: MapKind) -> Result<Self> {
        let mut graph = BTreeMap::new();
        let mut shape: Option<(Point, Point)> = None;
        for (s, t) in pairs {
            match &shape {
                Some((s0, t0)) => {
                    s0.compatible(&s)?;
                    t0.compatible(&t)?;
                }
                None => shape = Some((s.clone(), t.clone())),
            }
            if let Some(prev) = graph.get(&s) {
                if *prev != t {
                    return Err(Error::NotAFunction { point: s });
                }
            }
            graph.insert(s, t);
        }
        Ok(PartialMap { graph, kind })
    }

    pub fn identity(space: &FiniteSpace) -> Self {
        PartialMap {
            graph: space.points().iter().map(|p| (p.clone(), p.clone())).collect(),
            kind: MapKind::Isometric,
        }
    }

    pub fn constant(domain: &FiniteSpace, value: &Point) -> Self {
        PartialMap {
            graph: domain.points().iter().map(|p| (p.clone(), value.clone())).collect(),
            kind: MapKind::Contractive,
        }
    }

    pub fn kind(&self) -> MapKind {
        self.kind
    }

    pub fn with_kind(mut self, kind: MapKind) -> Self {
        self.kind = kind;
        self
    }

    pub fn len(&self) -> usize {
        self.graph.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graph.is_empty()
    }

    pub fn pairs(&self) -> impl Iterator<Item = (&Point, &Point)> {
        self.graph.iter()
    }

    pub fn get(&self, x: &Point) -> Option<&Point> {
        self.graph.get(x)
    }

    pub fn apply(&self, x: &Point) -> Result<&Point> {
        self.get(x).ok_or_else(|| Error::Undefined { point: x.clone() })
    }

    pub fn domain(&self) -> Result<FiniteSpace> {
        FiniteSpace::new(self.graph.keys().cloned())
    }

    pub fn image(&self) -> Result<FiniteSpace> {
        FiniteSpace::new(self.graph.values().cloned())
    }

    /// `self ∘ inner`: first `inner`, then `self`.
    pub fn after(&self, inner: &PartialMap) -> Result<PartialMap> {
        let kind = if self.kind == MapKind::Isometric && inner.kind == MapKind::Isometric {
            MapKind::Isometric
        } else {
            MapKind::Contractive
        };
        let graph = inner
            .graph
            .iter()
            .map(|(s, t)| Ok((s.clone(), self.apply(t)?.clone())))
            .collect::<Result<_>>()?;
        Ok(PartialMap { graph, kind })
    }

    /// Inverse of an injective map.
    pub fn inverse(&self) -> Result<PartialMap> {
        PartialMap::new(self.graph.iter().map(|(s, t)| (t.clone(), s.clone())), self.kind)
    }

    pub fn restrict(&self, domain: &FiniteSpace) -> Result<PartialMap> {
        let graph = domain
            .points()
            .iter()
            .map(|p| Ok((p.clone(), self.apply(p)?.clone())))
            .collect::<Result<_>>()?;
        Ok(PartialMap { graph, kind: self.kind })
    }

    /// Whether `self` agrees with `other` on every point of `other`'s domain.
    pub fn extends(&self, other: &PartialMap) -> bool {
        other.graph.iter().all(|(s, t)| self.graph.get(s) == Some(t))
    }
}

impl fmt::Debug for PartialMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PartialMap")
            .field("kind", &self.kind)
            .field("graph", &self.graph)
            .finish()
    }
}

/// Outcome of [`check_map`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MapVerdict {
    /// Every distance is preserved.
    Isometric,
    /// Distances never grow, some shrink.
    Contractive,
    /// The first pair, in canonical order, that breaks the claim.
    Violation(Point, Point),
}

impl MapVerdict {
    pub fn is_ok(&self) -> bool {
        !matches!(self, MapVerdict::Violation(..))
    }
}

/// Checks `d(F(x), F(y)) <= d(x, y)` for every pair, and equality when the
/// map claims to be an isometry.
pub fn check_map(f: &PartialMap) -> MapVerdict {
    let pairs: Vec<_> = f.graph.iter().collect();
    let mut isometric = true;
    let mut first_strict: Option<(Point, Point)> = None;
    for (i, (x, fx)) in pairs.iter().enumerate() {
        for (y, fy) in &pairs[i + 1..] {
            let before = dist(x, y);
            let after = dist(fx, fy);
            if !after.is_below(&before) {
                return MapVerdict::Violation((*x).clone(), (*y).clone());
            }
            if after != before && isometric {
                isometric = false;
                first_strict = Some(((*x).clone(), (*y).clone()));
            }
        }
    }
    match (isometric, f.kind, first_strict) {
        (true, _, _) => MapVerdict::Isometric,
        (false, MapKind::Isometric, Some((x, y))) => MapVerdict::Violation(x, y),
        _ => MapVerdict::Contractive,
    }
}

/// Checks a map's claim and converts a violation into the matching error.
pub fn certify(f: &PartialMap) -> Result<MapVerdict> {
    match check_map(f) {
        MapVerdict::Violation(x, y) => {
            let before = dist(&x, &y);
            let after = dist(f.apply(&x)?, f.apply(&y)?);
            if after.is_below(&before) {
                Err(Error::NotIsometric { x, y })
            } else {
                Err(Error::NotContractive { x, y })
            }
        }
        v => Ok(v),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(lits: &[&str]) -> Point {
        Point::parse(lits).unwrap()
    }

    fn space(points: &[&[&str]]) -> FiniteSpace {
        FiniteSpace::new(points.iter().map(|p| pt(p))).unwrap()
    }

    #[test]
    fn distance_examples() {
        let x = pt(&["10", "01"]);
        assert_eq!(distance(&x, &x).unwrap(), "00".parse().unwrap());
        assert_eq!(distance(&pt(&["11"]), &pt(&["01"])).unwrap(), "10".parse().unwrap());
        assert_eq!(
            distance(&pt(&["10", "01"]), &pt(&["01", "01"])).unwrap(),
            "11".parse().unwrap()
        );
        assert!(matches!(
            distance(&pt(&["10"]), &pt(&["10", "01"])),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn product_distance_joins_factors() {
        let d = product_distance(
            (&pt(&["100"]), &pt(&["000", "000"])),
            (&pt(&["000"]), &pt(&["001", "000"])),
        )
        .unwrap();
        assert_eq!(d, "101".parse().unwrap());
    }

    #[test]
    fn convex_combine_on_the_line() {
        let zero = pt(&["00"]);
        let one = pt(&["11"]);
        let coeffs = ConvexCoefficients::from_partition(&["10".parse().unwrap(), "01".parse().unwrap()])
            .unwrap();
        // a_0 = e1 forces x ∧ e1 = 0, a_1 = e2 forces x ∧ e2 = e2
        let x = convex_combine(&coeffs, &[zero.clone(), one.clone()]).unwrap();
        assert_eq!(x, pt(&["01"]));
        assert!(satisfies_combination(&x, &coeffs, &[zero, one]));
    }

    #[test]
    fn convex_combine_two_dimensional() {
        let gens = [pt(&["10", "00"]), pt(&["01", "01"])];
        let coeffs = ConvexCoefficients::new(vec![0, 1], 2).unwrap();
        let x = convex_combine(&coeffs, &gens).unwrap();
        assert_eq!(x, pt(&["11", "01"]));
        assert!(satisfies_combination(&x, &coeffs, &gens));
    }

    #[test]
    fn unit_weight_returns_the_generator() {
        let gens = [pt(&["10", "00"]), pt(&["01", "01"]), pt(&["11", "10"])];
        for j in 0..3 {
            let c = ConvexCoefficients::unit(j, 3, 2).unwrap();
            assert_eq!(convex_combine(&c, &gens).unwrap(), gens[j]);
        }
        let bad = ConvexCoefficients::unit(0, 2, 2).unwrap();
        assert!(convex_combine(&bad, &gens).is_err());
    }

    #[test]
    fn partition_must_cover_each_atom_once() {
        assert_eq!(
            ConvexCoefficients::from_partition(&["10".parse().unwrap(), "10".parse().unwrap()]),
            Err(Error::NotAPartition)
        );
        assert_eq!(
            ConvexCoefficients::from_partition(&["10".parse().unwrap(), "00".parse().unwrap()]),
            Err(Error::NotAPartition)
        );
    }

    #[test]
    fn hull_of_zero_and_one_is_the_whole_line() {
        for k in 1..=4 {
            let s = FiniteSpace::new([Point::zero(k, 1), Point::new(vec![Bits::one(k)]).unwrap()])
                .unwrap();
            let hull = conv_hull(&s).unwrap();
            assert_eq!(hull.len(), 1 << k);
            assert!(hull.is_convex());
        }
    }

    #[test]
    fn hull_of_singleton() {
        let s = space(&[&["10", "01"]]);
        assert_eq!(conv_hull(&s).unwrap(), s);
    }

    #[test]
    fn hull_counts_distinct_patterns_not_generators() {
        // on each atom two of the three generators share a pattern
        let s = space(&[&["00", "00"], &["10", "00"], &["01", "01"]]);
        let hull = conv_hull(&s).unwrap();
        let expected = space(&[&["00", "00"], &["10", "00"], &["01", "01"], &["11", "01"]]);
        assert_eq!(hull, expected);
    }

    #[test]
    fn hull_cap_is_enforced() {
        let s = FiniteSpace::new([Point::zero(4, 1), Point::new(vec![Bits::one(4)]).unwrap()]).unwrap();
        assert_eq!(conv_hull_capped(&s, 8), Err(Error::CapExceeded { size: 16, cap: 8 }));
    }

    #[test]
    fn decompose_on_the_line() {
        let s = space(&[&["00"], &["11"]]);
        let c = decompose(&pt(&["01"]), &s).unwrap();
        assert_eq!(c.selection(), &[0, 1]);
        assert_eq!(convex_combine(&c, s.points()).unwrap(), pt(&["01"]));
    }

    #[test]
    fn decompose_outside_hull_reports_atom() {
        let s = space(&[&["00", "00"], &["10", "10"]]);
        let err = decompose(&pt(&["10", "00"]), &s).unwrap_err();
        assert!(matches!(err, Error::NotInHull { atom: 0, .. }));
        assert!(!in_hull(&pt(&["10", "00"]), &s));
    }

    #[test]
    fn complement_of_basepoint_is_everything() {
        let x = conv_hull(&space(&[&["00", "00"], &["11", "00"], &["00", "11"]]))
            .unwrap()
            .with_basepoint(&pt(&["00", "00"]))
            .unwrap();
        let u = FiniteSpace::new([pt(&["00", "00"])]).unwrap();
        assert_eq!(orthogonal_complement(&u, &x).unwrap().points(), x.points());
    }

    #[test]
    fn complement_of_whole_line_is_basepoint() {
        let x = conv_hull(&space(&[&["00"], &["11"]])).unwrap().with_basepoint(&pt(&["00"])).unwrap();
        let perp = orthogonal_complement(&x, &x).unwrap();
        assert_eq!(perp.points(), &[pt(&["00"])]);
    }

    #[test]
    fn complement_in_the_plane_is_the_other_axis() {
        let zero = pt(&["00", "00"]);
        let x = conv_hull(&space(&[&["00", "00"], &["11", "00"], &["00", "11"]]))
            .unwrap()
            .with_basepoint(&zero)
            .unwrap();
        let u = conv_hull(&space(&[&["00", "00"], &["11", "00"]])).unwrap();
        let expected = conv_hull(&space(&[&["00", "00"], &["00", "11"]])).unwrap();
        let perp = orthogonal_complement(&u, &x).unwrap();
        assert_eq!(perp.points(), expected.points());
        assert_eq!(perp.basepoint(), Some(&zero));
    }

    #[test]
    fn complement_needs_basepoint() {
        let x = space(&[&["00"], &["11"]]);
        assert_eq!(orthogonal_complement(&x, &x), Err(Error::MissingBasepoint));
    }

    #[test]
    fn check_map_verdicts() {
        let x = conv_hull(&space(&[&["00"], &["11"]])).unwrap();
        assert_eq!(check_map(&PartialMap::identity(&x)), MapVerdict::Isometric);
        assert_eq!(check_map(&PartialMap::constant(&x, &pt(&["10"]))), MapVerdict::Contractive);
        let claimed = PartialMap::constant(&x, &pt(&["10"])).with_kind(MapKind::Isometric);
        assert!(matches!(check_map(&claimed), MapVerdict::Violation(..)));

        let a = pt(&["10"]);
        let shift = PartialMap::new(
            x.points().iter().map(|p| (p.clone(), p.translate(&a).unwrap())),
            MapKind::Isometric,
        )
        .unwrap();
        assert_eq!(check_map(&shift), MapVerdict::Isometric);

        // expanding: 00 -> 00, 10 -> 11
        let expand = PartialMap::new(
            [(pt(&["00"]), pt(&["00"])), (pt(&["10"]), pt(&["11"]))],
            MapKind::Contractive,
        )
        .unwrap();
        assert_eq!(check_map(&expand), MapVerdict::Violation(pt(&["00"]), pt(&["10"])));
    }

    #[test]
    fn conflicting_pairs_are_rejected() {
        let r = PartialMap::new(
            [(pt(&["00"]), pt(&["00"])), (pt(&["00"]), pt(&["11"]))],
            MapKind::Contractive,
        );
        assert!(matches!(r, Err(Error::NotAFunction { .. })));
    }
}
