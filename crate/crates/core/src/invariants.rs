//! Isometry invariants of finite spaces.
//!
//! `α_k(X)` is the supremum, over all `(k+1)`-tuples of points, of the meet
//! of their pairwise distances. On a single atom `e` the meet of pairwise
//! distances of a tuple contains `e` exactly when the tuple has pairwise
//! distinct patterns on `e`, so `α_k ∧ e = e` iff the space realizes at
//! least `k + 1` patterns on `e`. [`alpha_profile`] uses that count;
//! [`alpha_by_definition`] enumerates tuples and serves as its oracle.
//!
//! For convex spaces the profile is a complete invariant, and the atom-wise
//! view also gives bases and homogeneity maps directly.

use itertools::Itertools;

use crate::algebra::{BooleanElement, Bits};
use crate::error::{Error, Result};
use crate::metric::{
    certify, conv_hull, convex_combine, decompose_over, dist, orthogonal, ConvexCoefficients,
    FiniteSpace, MapKind, MapVerdict, PartialMap, Pattern, Point, TieBreak,
};

/// Largest space the backtracking isometry oracle accepts by default.
pub const DEFAULT_ORACLE_CAP: usize = 12;

/// The decreasing sequence `α_1 ≥ α_2 ≥ … ≥ α_rank > 0`; `α_0 = 1` and
/// `α_k = 0` beyond the rank are implicit.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct AlphaProfile {
    atoms: usize,
    values: Vec<Bits>,
}

impl AlphaProfile {
    /// Builds a profile from `α_1, α_2, …`; trailing zeros are dropped.
    pub fn new(atoms: usize, mut values: Vec<Bits>) -> Self {
        while values.last().is_some_and(Bits::is_zero) {
            values.pop();
        }
        AlphaProfile { atoms, values }
    }

    pub fn atoms(&self) -> usize {
        self.atoms
    }

    /// Greatest `k` with `α_k > 0`.
    pub fn rank(&self) -> usize {
        self.values.len()
    }

    /// `α_k`, with `α_0 = 1`.
    pub fn get(&self, k: usize) -> Bits {
        match k {
            0 => Bits::one(self.atoms),
            k if k <= self.values.len() => self.values[k - 1],
            _ => Bits::zero(self.atoms),
        }
    }

    /// `α_1, …, α_rank`.
    pub fn values(&self) -> &[Bits] {
        &self.values
    }

    pub fn is_decreasing(&self) -> bool {
        (0..=self.rank()).all(|k| self.get(k + 1).is_below(&self.get(k)))
    }

    /// On atom `e`, the greatest `k` with `e ≤ α_k`.
    pub fn level(&self, atom: usize) -> usize {
        (1..=self.rank()).rev().find(|&k| self.get(k).has_atom(atom)).unwrap_or(0)
    }
}

/// The α-profile of a finite set of points. For a generator set this equals
/// the profile of its hull.
pub fn alpha_profile(space: &FiniteSpace) -> AlphaProfile {
    profile_from_counts(
        space.atoms(),
        &space.patterns().iter().map(Vec::len).collect::<Vec<_>>(),
    )
}

pub(crate) fn profile_from_counts(atoms: usize, counts: &[usize]) -> AlphaProfile {
    let rank = counts.iter().copied().max().unwrap_or(1).saturating_sub(1);
    let values = (1..=rank)
        .map(|k| {
            let mask = counts
                .iter()
                .enumerate()
                .filter(|&(_, &c)| c > k)
                .fold(0u64, |m, (e, _)| m | 1 << e);
            Bits::new(mask, atoms)
        })
        .collect();
    AlphaProfile::new(atoms, values)
}

/// `α_k` straight from the definition: the join over all `(k+1)`-subsets of
/// the meet of pairwise distances. Exponential; for small inputs only.
pub fn alpha_by_definition(points: &[Point]) -> AlphaProfile {
    let atoms = points.first().map(Point::atoms).unwrap_or(1);
    let n = points.len();
    let d: Vec<Vec<Bits>> = points
        .iter()
        .map(|x| points.iter().map(|y| dist(x, y)).collect())
        .collect();
    let values = (1..n)
        .map(|k| {
            (0..n).combinations(k + 1).fold(Bits::zero(atoms), |acc, subset| {
                let meet = subset
                    .iter()
                    .tuple_combinations()
                    .fold(Bits::one(atoms), |m, (&i, &j)| m.meet(&d[i][j]));
                acc.join(&meet)
            })
        })
        .collect();
    AlphaProfile::new(atoms, values)
}

/// A base of a pointed convex space: `X = conv(0, x_1, …, x_n)`, the `x_i`
/// pairwise orthogonal, and `|x_i| = α_i(X) > 0`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Base {
    pub zero: Point,
    pub points: Vec<Point>,
}

impl Base {
    /// `0, x_1, …, x_n`.
    pub fn generators(&self) -> Vec<Point> {
        std::iter::once(self.zero.clone()).chain(self.points.iter().cloned()).collect()
    }
}

/// Which defining condition of a base failed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BaseViolation {
    DoesNotGenerate,
    NotOrthogonal(usize, usize),
    WrongNorm(usize),
}

/// Builds a base atom by atom: on atom `e` the distinct patterns of `X` are
/// listed as `p_0 = 0|_e, p_1, p_2, …` and `x_i|_e = p_i` (or `0|_e` when
/// there are fewer patterns).
pub fn build_base(x: &FiniteSpace) -> Result<Base> {
    let zero = x.basepoint().ok_or(Error::MissingBasepoint)?.clone();
    x.require_convex()?;
    let lists: Vec<Vec<Pattern>> = x
        .patterns()
        .into_iter()
        .enumerate()
        .map(|(e, ps)| {
            let z = zero.pattern(e);
            std::iter::once(z).chain(ps.into_iter().filter(|&p| p != z)).collect()
        })
        .collect();
    let rank = lists.iter().map(Vec::len).max().unwrap_or(1) - 1;
    let points = (1..=rank)
        .map(|i| {
            let per_atom: Vec<Pattern> = lists
                .iter()
                .map(|ps| ps.get(i).copied().unwrap_or(ps[0]))
                .collect();
            Point::from_patterns(&per_atom, x.dim())
        })
        .collect();
    let base = Base { zero, points };
    verify_base(x, &base)
        .map_err(|v| Error::Internal(format!("base construction violated {v:?}")))?;
    Ok(base)
}

/// Checks the three base conditions against the definitions.
pub fn verify_base(x: &FiniteSpace, base: &Base) -> std::result::Result<(), BaseViolation> {
    let generated = FiniteSpace::new(base.generators())
        .and_then(|g| conv_hull(&g))
        .map_err(|_| BaseViolation::DoesNotGenerate)?;
    if generated.points() != x.points() {
        return Err(BaseViolation::DoesNotGenerate);
    }
    for (i, j) in (0..base.points.len()).tuple_combinations() {
        if !orthogonal(&base.points[i], &base.points[j], &base.zero) {
            return Err(BaseViolation::NotOrthogonal(i + 1, j + 1));
        }
    }
    let profile = alpha_profile(x);
    for (i, p) in base.points.iter().enumerate() {
        let norm = dist(p, &base.zero);
        if norm.is_zero() || norm != profile.get(i + 1) {
            return Err(BaseViolation::WrongNorm(i + 1));
        }
    }
    if base.points.len() != profile.rank() {
        return Err(BaseViolation::WrongNorm(profile.rank()));
    }
    Ok(())
}

/// Two convex spaces are isometric iff their α-profiles agree.
pub fn decide_isometric(x: &FiniteSpace, y: &FiniteSpace) -> bool {
    x.atoms() == y.atoms() && alpha_profile(x) == alpha_profile(y)
}

/// An isometry `X → Y` sending base to base, basepoint to basepoint.
/// Spaces without a basepoint are pointed at their first point.
pub fn construct_isometry(x: &FiniteSpace, y: &FiniteSpace) -> Result<PartialMap> {
    if !decide_isometric(x, y) {
        return Err(Error::Infeasible("α-profiles differ".into()));
    }
    let pointed = |s: &FiniteSpace| s.clone().with_basepoint(s.anchor());
    let bx = build_base(&pointed(x)?)?;
    let by = build_base(&pointed(y)?)?;
    let gx = bx.generators();
    let gy = by.generators();
    let pairs = x
        .points()
        .iter()
        .map(|p| {
            let c = decompose_over(p, &gx, TieBreak::First)?;
            Ok((p.clone(), convex_combine(&c, &gy)?))
        })
        .collect::<Result<Vec<_>>>()?;
    let map = PartialMap::new(pairs, MapKind::Isometric)?;
    certify_onto(&map, y)?;
    Ok(map)
}

/// A map given as `F: X → Y` must be an isometry with image exactly `Y`.
fn certify_onto(map: &PartialMap, y: &FiniteSpace) -> Result<()> {
    if certify(map)? != MapVerdict::Isometric {
        return Err(Error::Internal("constructed map is not an isometry".into()));
    }
    let image = map.image()?;
    if image.points() != y.points() {
        return Err(Error::Internal("constructed map is not onto".into()));
    }
    Ok(())
}

/// An involutive self-isometry `φ` of a convex space with `φ(x) = y`.
///
/// On each atom the patterns of `x` and `y` are swapped and every other
/// pattern is fixed. As a convex combination,
/// `φ(z) = ¬d(z,x)·y + (¬d(z,y) ∖ ¬d(z,x))·x + rest·z`.
pub fn homogeneity_isometry(space: &FiniteSpace, x: &Point, y: &Point) -> Result<PartialMap> {
    for p in [x, y] {
        if !space.contains(p) {
            return Err(Error::NotInSpace { point: p.clone() });
        }
    }
    space.require_convex()?;
    let pairs = space
        .points()
        .iter()
        .map(|z| {
            let at_x = dist(z, x).complement();
            let at_y = dist(z, y).complement().difference(&at_x);
            let rest = at_x.join(&at_y).complement();
            let c = ConvexCoefficients::from_partition(&[at_x, at_y, rest])?;
            Ok((z.clone(), convex_combine(&c, &[y.clone(), x.clone(), z.clone()])?))
        })
        .collect::<Result<Vec<_>>>()?;
    let phi = PartialMap::new(pairs, MapKind::Isometric)?;
    certify_onto(&phi, space)?;
    if phi.apply(x)? != y || phi.apply(y)? != x {
        return Err(Error::Internal("homogeneity map does not swap x and y".into()));
    }
    if phi.after(&phi)? != PartialMap::identity(space) {
        return Err(Error::Internal("homogeneity map is not an involution".into()));
    }
    Ok(phi)
}

/// Backtracking search for a distance-preserving bijection `X → Y`.
///
/// Points of `X` are assigned in canonical order; a candidate image must
/// have the same sorted distance row and agree on distances to every point
/// already assigned.
pub fn brute_force_isometry(
    x: &FiniteSpace,
    y: &FiniteSpace,
    cap: usize,
) -> Result<Option<PartialMap>> {
    let size = x.len().max(y.len());
    if size > cap {
        return Err(Error::CapExceeded { size, cap });
    }
    if x.len() != y.len() || x.atoms() != y.atoms() {
        return Ok(None);
    }
    let matrix = |s: &FiniteSpace| -> Vec<Vec<Bits>> {
        s.points().iter().map(|a| s.points().iter().map(|b| dist(a, b)).collect()).collect()
    };
    let dx = matrix(x);
    let dy = matrix(y);
    let signature = |row: &[Bits]| -> Vec<u64> { row.iter().map(Bits::mask).sorted().collect() };
    let sx: Vec<_> = dx.iter().map(|r| signature(r)).collect();
    let sy: Vec<_> = dy.iter().map(|r| signature(r)).collect();
    if sx.iter().sorted().ne(sy.iter().sorted()) {
        return Ok(None);
    }

    struct Search<'a> {
        dx: &'a [Vec<Bits>],
        dy: &'a [Vec<Bits>],
        sx: &'a [Vec<u64>],
        sy: &'a [Vec<u64>],
        assignment: Vec<usize>,
        used: Vec<bool>,
    }

    impl Search<'_> {
        fn run(&mut self) -> bool {
            let i = self.assignment.len();
            if i == self.dx.len() {
                return true;
            }
            for j in 0..self.dy.len() {
                if self.used[j] || self.sx[i] != self.sy[j] {
                    continue;
                }
                let consistent = self
                    .assignment
                    .iter()
                    .enumerate()
                    .all(|(pi, &pj)| self.dx[i][pi] == self.dy[j][pj]);
                if !consistent {
                    continue;
                }
                self.assignment.push(j);
                self.used[j] = true;
                if self.run() {
                    return true;
                }
                self.used[j] = false;
                self.assignment.pop();
            }
            false
        }
    }

    let mut search = Search {
        dx: &dx,
        dy: &dy,
        sx: &sx,
        sy: &sy,
        assignment: Vec::with_capacity(x.len()),
        used: vec![false; y.len()],
    };
    if !search.run() {
        return Ok(None);
    }
    let map = PartialMap::new(
        search
            .assignment
            .iter()
            .enumerate()
            .map(|(i, &j)| (x.points()[i].clone(), y.points()[j].clone())),
        MapKind::Isometric,
    )?;
    certify_onto(&map, y)?;
    Ok(Some(map))
}
