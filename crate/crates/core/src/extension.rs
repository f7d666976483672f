//! Extending maps between subsets of a convex space.
//!
//! The pieces, bottom up:
//!
//! * [`conv_extend`] extends a contractive map from `U` to `conv(U)`. Each
//!   coordinate of the extension is the pointwise supremum of
//!   `g_u(x) = f(u) ∖ d(u, x)` over `u ∈ U`.
//! * [`orthogonal_join`] glues maps on `U` and on `U^⊥` into a map on the
//!   whole space, using `X = conv(U ∪ U^⊥)`.
//! * [`witt_solve`] computes the α-profile of `U^⊥` from those of `U` and
//!   `X` by solving the monotone system
//!   `⋁_{i=0..n} a_{n-i} ∧ x_i = b_n` for `n = 1..=d+1`.
//! * [`extend_isometry`] and [`extend_contraction`] chain these into the
//!   full extension of a map `U → V` to a self-map of `W`.
//!
//! Every map returned here has been re-checked against the definitions.

use itertools::Itertools;

use crate::algebra::{BooleanElement, Bits};
use crate::error::{Error, Result};
use crate::invariants::{alpha_profile, construct_isometry, homogeneity_isometry, AlphaProfile};
use crate::metric::{
    certify, conv_hull, convex_combine, decompose_over, dist, orthogonal_complement,
    ConvexCoefficients, FiniteSpace, MapKind, PartialMap, Point, TieBreak,
};

/// `G(x) = ⋁_{u} f(u) ∖ d(u, x)` for a scalar map given by its graph.
pub fn scalar_extension(samples: &[(Point, Bits)], x: &Point) -> Bits {
    let atoms = x.atoms();
    samples
        .iter()
        .fold(Bits::zero(atoms), |acc, (u, fu)| acc.join(&fu.difference(&dist(u, x))))
}

/// The unique contractive extension of `f` to the hull of its domain.
///
/// Vector-valued maps are extended coordinate by coordinate. When `f` is an
/// isometry the extension is an isometry onto the hull of the image.
pub fn conv_extend(f: &PartialMap) -> Result<PartialMap> {
    // contractivity, plus distance preservation when f claims it
    certify(f)?;
    let kind = f.kind();
    let domain = f.domain()?;
    let hull = conv_hull(&domain)?;
    let target_dim = f.pairs().next().map(|(_, t)| t.dim()).ok_or(Error::EmptySpace)?;
    let columns: Vec<Vec<(Point, Bits)>> = (0..target_dim)
        .map(|j| f.pairs().map(|(u, fu)| (u.clone(), fu.coords()[j])).collect())
        .collect();
    let pairs = hull
        .points()
        .iter()
        .map(|x| {
            let coords = columns.iter().map(|col| scalar_extension(col, x)).collect();
            Ok((x.clone(), Point::new(coords)?))
        })
        .collect::<Result<Vec<_>>>()?;
    let ext = PartialMap::new(pairs, kind)?;

    if !ext.extends(f) {
        return Err(Error::Internal("Conv(f) does not extend f".into()));
    }
    certify(&ext).map_err(|e| Error::Internal(format!("Conv(f) failed certification: {e}")))?;
    let target_hull = conv_hull(&f.image()?)?;
    if let Some((_, t)) = ext.pairs().find(|(_, t)| !target_hull.contains(t)) {
        return Err(Error::Internal(format!("Conv(f) leaves conv(V) at {t}")));
    }
    Ok(ext)
}

/// `f ⊥ g`: the map on `X` extending `f` on `U` and `g` on `U^⊥`.
///
/// `X` must be pointed and convex, `U` a convex subspace containing the
/// basepoint, and `f(0) = g(0)`. The result is an isometry when both inputs
/// are.
pub fn orthogonal_join(
    x: &FiniteSpace,
    u: &FiniteSpace,
    f: &PartialMap,
    g: &PartialMap,
) -> Result<PartialMap> {
    orthogonal_join_with(x, u, f, g, TieBreak::First)
}

/// [`orthogonal_join`] with an explicit choice of decomposition.
pub fn orthogonal_join_with(
    x: &FiniteSpace,
    u: &FiniteSpace,
    f: &PartialMap,
    g: &PartialMap,
    tie: TieBreak,
) -> Result<PartialMap> {
    let zero = x.basepoint().ok_or(Error::MissingBasepoint)?;
    x.require_convex()?;
    u.require_convex()?;
    let perp = orthogonal_complement(u, x)?;
    if f.apply(zero)? != g.apply(zero)? {
        return Err(Error::Infeasible("f and g disagree at the basepoint".into()));
    }
    let generators: Vec<Point> = u.points().iter().chain(perp.points()).cloned().collect();
    let images = u
        .points()
        .iter()
        .map(|p| f.apply(p))
        .chain(perp.points().iter().map(|p| g.apply(p)))
        .map(|r| r.cloned())
        .collect::<Result<Vec<_>>>()?;
    let pairs = x
        .points()
        .iter()
        .map(|p| {
            let c = decompose_over(p, &generators, tie).map_err(|e| {
                Error::Internal(format!("X is not generated by U and its complement: {e}"))
            })?;
            Ok((p.clone(), convex_combine(&c, &images)?))
        })
        .collect::<Result<Vec<_>>>()?;
    let kind = if f.kind() == MapKind::Isometric && g.kind() == MapKind::Isometric {
        MapKind::Isometric
    } else {
        MapKind::Contractive
    };
    let joined = PartialMap::new(pairs, kind)?;
    certify(&joined).map_err(|e| Error::Internal(format!("f ⊥ g failed certification: {e}")))?;
    if !joined.extends(&f.restrict(u)?) || !joined.extends(&g.restrict(&perp)?) {
        return Err(Error::Internal("f ⊥ g does not extend both maps".into()));
    }
    Ok(joined)
}

/// A decreasing tuple `c_1 ≥ c_2 ≥ … ≥ c_d`, a point of the monotone cube.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MonotoneTuple {
    entries: Vec<Bits>,
}

impl MonotoneTuple {
    pub fn new(entries: Vec<Bits>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::DimensionMismatch { expected: 1, found: 0 });
        }
        if entries.windows(2).any(|w| !w[1].is_below(&w[0])) {
            return Err(Error::Infeasible("tuple is not decreasing".into()));
        }
        Ok(MonotoneTuple { entries })
    }

    pub fn entries(&self) -> &[Bits] {
        &self.entries
    }

    pub fn to_point(&self) -> Point {
        Point::new(self.entries.clone()).expect("nonempty, single algebra")
    }
}

/// The generators `y_0 = (0,…,0), y_1 = (1,0,…,0), …, y_d = (1,…,1)` of the
/// monotone cube in `B^d`.
pub fn cube_generators(d: usize, atoms: usize) -> Vec<Point> {
    (0..=d)
        .map(|j| {
            let coords = (1..=d)
                .map(|i| if i <= j { Bits::one(atoms) } else { Bits::zero(atoms) })
                .collect();
            Point::new(coords).expect("d >= 1")
        })
        .collect()
}

/// The monotone cube `{x ∈ B^d : x_1 ≥ … ≥ x_d}`.
pub fn monotone_cube(d: usize, atoms: usize) -> Result<FiniteSpace> {
    conv_hull(&FiniteSpace::new(cube_generators(d, atoms))?)
}

/// Weights of `c` on `y_0, …, y_d`:
/// `¬c_1, c_1 ∖ c_2, …, c_{d-1} ∖ c_d, c_d`.
pub fn monotone_decompose(c: &MonotoneTuple) -> Result<ConvexCoefficients> {
    let e = c.entries();
    let d = e.len();
    let mut weights = Vec::with_capacity(d + 1);
    weights.push(e[0].complement());
    for j in 0..d - 1 {
        weights.push(e[j].difference(&e[j + 1]));
    }
    weights.push(e[d - 1]);
    ConvexCoefficients::from_partition(&weights)
}

/// The Witt system relating the profiles `a` of `U` and `b` of `X`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WittInstance {
    pub a: AlphaProfile,
    pub b: AlphaProfile,
    d: usize,
}

impl WittInstance {
    pub fn new(a: AlphaProfile, b: AlphaProfile) -> Result<Self> {
        if a.atoms() != b.atoms() {
            return Err(Error::MixedAlgebra {
                left: format!("finite k={}", a.atoms()),
                right: format!("finite k={}", b.atoms()),
            });
        }
        let d = b.rank();
        Ok(WittInstance { a, b, d })
    }

    /// The system with `d` unknowns, for `d` at least the rank of `b`. The
    /// trailing entries of `b` are then zero.
    pub fn with_rank(a: AlphaProfile, b: AlphaProfile, d: usize) -> Result<Self> {
        let mut inst = Self::new(a, b)?;
        if d < inst.d {
            return Err(Error::DimensionMismatch { expected: inst.d, found: d });
        }
        inst.d = d;
        Ok(inst)
    }

    /// `d`, the rank of `X` unless set explicitly.
    pub fn rank(&self) -> usize {
        self.d
    }

    pub fn atoms(&self) -> usize {
        self.b.atoms()
    }

    /// Both profiles decreasing and `a_i ≤ b_i` for every `i`.
    pub fn is_valid(&self) -> bool {
        self.a.is_decreasing()
            && self.b.is_decreasing()
            && (1..=self.rank().max(self.a.rank())).all(|i| self.a.get(i).is_below(&self.b.get(i)))
    }

    /// `⋁_{i=0..n} a_{n-i} ∧ x_i` with `x_0 = 1` and `x_i = 0` beyond `x`.
    pub fn lhs(&self, x: &[Bits], n: usize) -> Bits {
        let atoms = self.atoms();
        (0..=n).fold(Bits::zero(atoms), |acc, i| {
            let xi = match i {
                0 => Bits::one(atoms),
                i => x.get(i - 1).copied().unwrap_or(Bits::zero(atoms)),
            };
            acc.join(&self.a.get(n - i).meet(&xi))
        })
    }

    /// The first `n` in `1..=d+1` whose equation fails, if any.
    pub fn first_failure(&self, x: &[Bits]) -> Option<usize> {
        (1..=self.rank() + 1).find(|&n| self.lhs(x, n) != self.b.get(n))
    }

    /// `f(x) = ⋁_{n=1..d+1} b_n △ (⋁_{i=0..n} a_{n-i} ∧ x_i)`, zero exactly on
    /// the solutions.
    pub fn residual(&self, x: &[Bits]) -> Bits {
        (1..=self.rank() + 1).fold(Bits::zero(self.atoms()), |acc, n| {
            acc.join(&self.b.get(n).symmetric_difference(&self.lhs(x, n)))
        })
    }
}

/// Solves the Witt system atom by atom: with `p` the level of `a` and `q`
/// the level of `b` on an atom, `x_i` contains the atom iff `q − p ≥ i`.
pub fn witt_solve(inst: &WittInstance) -> Result<AlphaProfile> {
    let atoms = inst.atoms();
    let d = inst.rank();
    let gaps: Vec<Option<usize>> = (0..atoms)
        .map(|e| inst.b.level(e).checked_sub(inst.a.level(e)))
        .collect();
    let x: Vec<Bits> = (1..=d)
        .map(|i| {
            let mask = gaps
                .iter()
                .enumerate()
                .filter(|(_, g)| g.is_some_and(|g| g >= i))
                .fold(0u64, |m, (e, _)| m | 1 << e);
            Bits::new(mask, atoms)
        })
        .collect();
    if let Some(n) = inst.first_failure(&x) {
        return Err(Error::Infeasible(format!("Witt equation n={n} has no solution")));
    }
    Ok(AlphaProfile::new(atoms, x))
}

/// Every solution of the Witt system, by exhaustive search over the
/// monotone cube. Exponential in the atom count.
pub fn witt_solve_by_search(inst: &WittInstance) -> Vec<Vec<Bits>> {
    let atoms = inst.atoms();
    let d = inst.rank();
    if d == 0 {
        return vec![Vec::new()];
    }
    // on each atom a monotone tuple is a prefix of ones of length 0..=d
    (0..atoms)
        .map(|_| 0..=d)
        .multi_cartesian_product()
        .map(|levels| {
            (1..=d)
                .map(|i| {
                    let mask = levels
                        .iter()
                        .enumerate()
                        .filter(|&(_, &t)| t >= i)
                        .fold(0u64, |m, (e, _)| m | 1 << e);
                    Bits::new(mask, atoms)
                })
                .collect::<Vec<_>>()
        })
        .filter(|x| inst.first_failure(x).is_none())
        .collect()
}

/// Why a uniqueness certificate could not be issued.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum UniquenessFailure {
    /// `d(y_i, y_j) ≠ 1`.
    DistanceNotOne(usize, usize),
    /// `f(y_i) ∨ f(y_j) ≠ 1`.
    ValuesNotCovering(usize, usize),
    /// `f` is not contractive on the hull.
    NotContractive(Point, Point),
    /// More than one zero; would contradict the lemma.
    MultipleZeros(Vec<Point>),
}

/// Checks the hypotheses of the uniqueness lemma for `f` on
/// `conv(generators)`, then scans the hull for zeros of `f`. Returns the
/// zero if there is one.
pub fn uniqueness_certify(
    generators: &[Point],
    f: &dyn Fn(&Point) -> Bits,
) -> Result<std::result::Result<Option<Point>, UniquenessFailure>> {
    let first = generators.first().ok_or(Error::EmptySpace)?;
    let atoms = first.atoms();
    for (i, j) in (0..generators.len()).tuple_combinations() {
        if !dist(&generators[i], &generators[j]).is_one() {
            return Ok(Err(UniquenessFailure::DistanceNotOne(i, j)));
        }
        if !f(&generators[i]).join(&f(&generators[j])).is_one() {
            return Ok(Err(UniquenessFailure::ValuesNotCovering(i, j)));
        }
    }
    let hull = conv_hull(&FiniteSpace::new(generators.iter().cloned())?)?;
    let values: Vec<Bits> = hull.points().iter().map(f).collect();
    debug_assert!(values.iter().all(|v| v.atom_count() == atoms));
    for (i, j) in (0..hull.len()).tuple_combinations() {
        let p = &hull.points()[i];
        let q = &hull.points()[j];
        if !values[i].symmetric_difference(&values[j]).is_below(&dist(p, q)) {
            return Ok(Err(UniquenessFailure::NotContractive(p.clone(), q.clone())));
        }
    }
    let zeros: Vec<Point> = hull
        .points()
        .iter()
        .zip(&values)
        .filter(|(_, v)| v.is_zero())
        .map(|(p, _)| p.clone())
        .collect();
    Ok(match zeros.len() {
        0 => Ok(None),
        1 => Ok(zeros.into_iter().next()),
        _ => Err(UniquenessFailure::MultipleZeros(zeros)),
    })
}

fn domain_and_image(f: &PartialMap, w: &FiniteSpace) -> Result<()> {
    w.require_convex()?;
    if f.is_empty() {
        return Err(Error::EmptySpace);
    }
    for (s, t) in f.pairs() {
        for p in [s, t] {
            if !w.contains(p) {
                return Err(Error::NotInSpace { point: p.clone() });
            }
        }
    }
    Ok(())
}

fn certify_self_map(result: &PartialMap, w: &FiniteSpace, f: &PartialMap) -> Result<()> {
    if result.len() != w.len() || !w.points().iter().all(|p| result.get(p).is_some()) {
        return Err(Error::Internal("extension is not total on W".into()));
    }
    if let Some((_, t)) = result.pairs().find(|(_, t)| !w.contains(t)) {
        return Err(Error::Internal(format!("extension leaves W at {t}")));
    }
    certify(result).map_err(|e| Error::Internal(format!("extension failed certification: {e}")))?;
    if !result.extends(f) {
        return Err(Error::Internal("extension does not restrict to F".into()));
    }
    Ok(())
}

/// Extends an isometry `F: U → V` between subsets of a convex space `W` to
/// a self-isometry `F'` of `W`.
///
/// With `0` the first point of `U`: `Conv(F)` is built on `conv(U)`, `φ` is
/// the homogeneity map of `W` exchanging `F(0)` and `0`, `g` is an isometry
/// between `conv(U)^⊥` and `φ(Conv(F)(conv(U)))^⊥`, and
/// `F' = φ^{-1} ∘ ((φ ∘ Conv(F)) ⊥ g)`.
pub fn extend_isometry(f: &PartialMap, w: &FiniteSpace) -> Result<PartialMap> {
    domain_and_image(f, w)?;
    let f = f.clone().with_kind(MapKind::Isometric);
    match certify(&f) {
        Ok(_) => {}
        Err(Error::NotContractive { x, y }) | Err(Error::NotIsometric { x, y }) => {
            return Err(Error::NotIsometric { x, y })
        }
        Err(e) => return Err(e),
    }
    let conv_f = conv_extend(&f)?;
    let zero = f.pairs().next().map(|(s, _)| s.clone()).expect("nonempty");
    let w0 = w.clone().with_basepoint(&zero)?;
    let phi = homogeneity_isometry(w, f.apply(&zero)?, &zero)?;

    let u1 = conv_f.domain()?.with_basepoint(&zero)?;
    let moved = phi.after(&conv_f)?;
    let u2 = moved.image()?.with_basepoint(&zero)?;
    let perp1 = orthogonal_complement(&u1, &w0)?;
    let perp2 = orthogonal_complement(&u2, &w0)?;
    if alpha_profile(&perp1) != alpha_profile(&perp2) {
        return Err(Error::Internal("complements of isometric subspaces differ".into()));
    }
    let g = construct_isometry(&perp1, &perp2)?;
    let joined = orthogonal_join(&w0, &u1, &moved, &g)?;
    let result = phi.inverse()?.after(&joined)?;
    if result.kind() != MapKind::Isometric {
        return Err(Error::Internal("extension lost the isometry property".into()));
    }
    certify_self_map(&result, w, &f)?;
    Ok(result)
}

/// Extends a contractive map `F: U → V` between subsets of a convex space
/// `W` to a contractive self-map of `W`: `Conv(F)` on `conv(U)`, joined with
/// the constant map `F(0)` on `conv(U)^⊥`.
pub fn extend_contraction(f: &PartialMap, w: &FiniteSpace) -> Result<PartialMap> {
    domain_and_image(f, w)?;
    let f = f.clone().with_kind(MapKind::Contractive);
    certify(&f)?;
    let conv_f = conv_extend(&f)?;
    let zero = f.pairs().next().map(|(s, _)| s.clone()).expect("nonempty");
    let w0 = w.clone().with_basepoint(&zero)?;
    let u = conv_f.domain()?.with_basepoint(&zero)?;
    let perp = orthogonal_complement(&u, &w0)?;
    let g = PartialMap::constant(&perp, f.apply(&zero)?);
    let result = orthogonal_join(&w0, &u, &conv_f, &g)?.with_kind(MapKind::Contractive);
    certify_self_map(&result, w, &f)?;
    Ok(result)
}
