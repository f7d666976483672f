//! Seeded random instances. Every instance draws from its own ChaCha stream,
//! so instance `i` of a run is the same whatever the instance count.

use rand::seq::{IndexedRandom, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Bits, FinCof};
use crate::error::{Error, Result};
use crate::metric::{conv_hull_capped, FiniteSpace, MapKind, PartialMap, Pattern, Point};

/// The generator for instance `index` of a run seeded with `seed`.
pub fn instance_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

pub fn random_element(rng: &mut impl Rng, atoms: usize) -> Bits {
    Bits::new(rng.random::<u64>(), atoms)
}

pub fn random_point(rng: &mut impl Rng, atoms: usize, dim: usize) -> Point {
    Point::new((0..dim).map(|_| random_element(rng, atoms)).collect()).expect("dim >= 1")
}

/// A finite or cofinite set with support inside `{0, …, max_support}`.
pub fn random_fincof(rng: &mut impl Rng, max_support: u64) -> FinCof {
    let support: Vec<u64> = (0..=max_support).filter(|_| rng.random_bool(0.3)).collect();
    if rng.random_bool(0.5) {
        FinCof::fin(support)
    } else {
        FinCof::cof(support)
    }
}

/// Shape limits for random convex spaces.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Shape {
    pub atoms: usize,
    pub dim: usize,
    pub generators: usize,
    pub max_points: usize,
}

/// The hull of between 2 (fewer only if the shape allows fewer) and
/// `shape.generators` random points. Atom count and dimension are each the
/// shape's limit or one less, since smaller shapes rarely give spaces worth
/// testing. Hulls over `max_points` are redrawn; after 100 attempts the
/// error is returned.
pub fn random_convex_space(rng: &mut impl Rng, shape: Shape) -> Result<FiniteSpace> {
    let mut last = Error::EmptySpace;
    for _ in 0..100 {
        let atoms = rng.random_range(shape.atoms.saturating_sub(1).max(1)..=shape.atoms);
        let dim = rng.random_range(shape.dim.saturating_sub(1).max(1)..=shape.dim);
        let count = rng.random_range(shape.generators.min(2)..=shape.generators);
        let gens = FiniteSpace::new((0..count).map(|_| random_point(rng, atoms, dim)))?;
        match conv_hull_capped(&gens, shape.max_points) {
            Ok(hull) => return Ok(hull),
            Err(e) => last = e,
        }
    }
    Err(last)
}

/// A nonempty subset of `space` with at most `max` points.
pub fn random_subset(rng: &mut impl Rng, space: &FiniteSpace, max: usize) -> FiniteSpace {
    let size = rng.random_range(1..=max.clamp(1, space.len()));
    let chosen = space.points().choose_multiple(rng, size).cloned();
    FiniteSpace::new(chosen).expect("nonempty subset")
}

/// Applies one map of patterns per atom to every point of `space`.
fn patternwise(
    space: &FiniteSpace,
    mut per_atom: impl FnMut(usize, &[Pattern]) -> Vec<Pattern>,
    kind: MapKind,
) -> PartialMap {
    let patterns = space.patterns();
    let images: Vec<Vec<Pattern>> =
        patterns.iter().enumerate().map(|(e, ps)| per_atom(e, ps)).collect();
    let pairs = space.points().iter().map(|p| {
        let target: Vec<Pattern> = (0..space.atoms())
            .map(|e| {
                let at = patterns[e].binary_search(&p.pattern(e)).expect("pattern of a point");
                images[e][at]
            })
            .collect();
        (p.clone(), Point::from_patterns(&target, space.dim()))
    });
    PartialMap::new(pairs, kind).expect("pointwise map is a function")
}

/// A random self-isometry of a convex space: an independent permutation of
/// the patterns on each atom.
pub fn random_self_isometry(rng: &mut impl Rng, space: &FiniteSpace) -> Result<PartialMap> {
    space.require_convex()?;
    Ok(patternwise(
        space,
        |_, ps| {
            let mut shuffled = ps.to_vec();
            shuffled.shuffle(rng);
            shuffled
        },
        MapKind::Isometric,
    ))
}

/// A random self-isometry fixing `fixed`.
pub fn random_pointed_isometry(
    rng: &mut impl Rng,
    space: &FiniteSpace,
    fixed: &Point,
) -> Result<PartialMap> {
    space.require_convex()?;
    if !space.contains(fixed) {
        return Err(Error::NotInSpace { point: fixed.clone() });
    }
    Ok(patternwise(
        space,
        |e, ps| {
            let keep = fixed.pattern(e);
            let mut others: Vec<Pattern> = ps.iter().copied().filter(|&p| p != keep).collect();
            others.shuffle(rng);
            let mut others = others.into_iter();
            ps.iter().map(|&p| if p == keep { keep } else { others.next().unwrap() }).collect()
        },
        MapKind::Isometric,
    ))
}

/// A random contractive self-map of a convex space: an arbitrary function
/// of the patterns on each atom.
pub fn random_self_contraction(rng: &mut impl Rng, space: &FiniteSpace) -> Result<PartialMap> {
    space.require_convex()?;
    Ok(patternwise(
        space,
        |_, ps| ps.iter().map(|_| *ps.choose(rng).expect("nonempty")).collect(),
        MapKind::Contractive,
    ))
}

/// A random isometry of the ambient `B^n`: a translation followed by a
/// permutation of coordinates, applied to every point of `space`.
pub fn random_ambient_copy(rng: &mut impl Rng, space: &FiniteSpace) -> FiniteSpace {
    let shift = random_point(rng, space.atoms(), space.dim());
    let mut order: Vec<usize> = (0..space.dim()).collect();
    order.shuffle(rng);
    let moved = space.points().iter().map(|p| {
        let t = p.translate(&shift).expect("same shape");
        Point::new(order.iter().map(|&i| t.coords()[i]).collect()).expect("dim >= 1")
    });
    FiniteSpace::new(moved).expect("nonempty")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metric::{check_map, MapVerdict};

    const SHAPE: Shape = Shape { atoms: 3, dim: 3, generators: 4, max_points: 64 };

    #[test]
    fn streams_are_reproducible() {
        let a = random_convex_space(&mut instance_rng(7, 3), SHAPE).unwrap();
        let b = random_convex_space(&mut instance_rng(7, 3), SHAPE).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn generated_spaces_are_convex_and_maps_certify() {
        for i in 0..40 {
            let mut rng = instance_rng(11, i);
            let w = random_convex_space(&mut rng, SHAPE).unwrap();
            assert!(w.is_convex());
            assert!(w.len() <= SHAPE.max_points);
            let iso = random_self_isometry(&mut rng, &w).unwrap();
            assert_eq!(check_map(&iso), MapVerdict::Isometric);
            assert_eq!(iso.image().unwrap(), w);
            let c = random_self_contraction(&mut rng, &w).unwrap();
            assert!(check_map(&c).is_ok());
            let fixed = &w.points()[rng.random_range(0..w.len())];
            let pinned = random_pointed_isometry(&mut rng, &w, fixed).unwrap();
            assert_eq!(pinned.get(fixed), Some(fixed));
            assert_eq!(check_map(&pinned), MapVerdict::Isometric);
        }
    }

    #[test]
    fn ambient_copies_stay_convex() {
        let mut rng = instance_rng(5, 0);
        let w = random_convex_space(&mut rng, SHAPE).unwrap();
        let copy = random_ambient_copy(&mut rng, &w);
        assert_eq!(copy.len(), w.len());
        assert!(copy.is_convex());
    }
}
