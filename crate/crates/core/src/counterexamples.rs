//! Extensions that fail over the finite-cofinite algebra.
//!
//! Fix an infinite, co-infinite set `M ⊂ ℕ` given by a predicate. In the
//! algebra of finite and cofinite subsets of `ℕ`, the ideal `I` of finite
//! subsets of `M` has no supremum. Two maps then have no contractive
//! extension:
//!
//! * in `X = {(x, y) : x ∧ y = 0}`, the inverse of `g(x, y) = (x △ y, 0)`
//!   from `V = I × J` onto `U = (I + J) × {0}`;
//! * on `B` itself, `x ↦ M ∩ x` on the finite sets.
//!
//! Any would-be value of the extension is a finite object, so for each
//! candidate we exhibit a finite point at which the contraction inequality
//! fails. Extensions of isometries on the line `B` itself always exist and
//! are translations, see [`line_extension`].

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::algebra::{BooleanElement, Bits, FinCof};
use crate::error::{Error, Result};
use crate::metric::{check_map, MapKind, MapVerdict, PartialMap, Point};

/// The set `M`, described by a residue class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Predicate {
    Evens,
    Odds,
    /// `n ≡ r (mod m)` with `2 ≤ m ≤ 8`.
    Residue { r: u64, m: u64 },
}

impl FromStr for Predicate {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidLiteral(s.to_string());
        match s {
            "evens" => Ok(Predicate::Evens),
            "odds" => Ok(Predicate::Odds),
            _ => {
                let (r, m) = s
                    .strip_prefix("mod:")
                    .and_then(|rest| rest.split_once(','))
                    .ok_or_else(bad)?;
                let r: u64 = r.parse().map_err(|_| bad())?;
                let m: u64 = m.parse().map_err(|_| bad())?;
                IdealDescriptor::new(Predicate::Residue { r, m }).map(|d| d.predicate)
            }
        }
    }
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Predicate::Evens => f.write_str("evens"),
            Predicate::Odds => f.write_str("odds"),
            Predicate::Residue { r, m } => write!(f, "mod:{r},{m}"),
        }
    }
}

/// `M` together with the derived ideal `I = {fin T : T ⊆ M}` and its
/// orthogonal `J = {a : a ∧ x = 0 for all x ∈ I}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct IdealDescriptor {
    predicate: Predicate,
}

impl IdealDescriptor {
    pub fn new(predicate: Predicate) -> Result<Self> {
        if let Predicate::Residue { r, m } = predicate {
            // m = 1 would make M all of ℕ, which is cofinite
            if !(2..=8).contains(&m) || r >= m {
                return Err(Error::InvalidLiteral(predicate.to_string()));
            }
        }
        Ok(IdealDescriptor { predicate })
    }

    pub fn predicate(&self) -> Predicate {
        self.predicate
    }

    fn modulus(&self) -> u64 {
        match self.predicate {
            Predicate::Evens | Predicate::Odds => 2,
            Predicate::Residue { m, .. } => m,
        }
    }

    pub fn in_m(&self, n: u64) -> bool {
        match self.predicate {
            Predicate::Evens => n % 2 == 0,
            Predicate::Odds => n % 2 == 1,
            Predicate::Residue { r, m } => n % m == r,
        }
    }

    /// `M ∩ x` for a finite `x`.
    pub fn restrict(&self, x: &FinCof) -> Result<FinCof> {
        match x {
            FinCof::Fin(s) => Ok(FinCof::Fin(s.iter().copied().filter(|&n| self.in_m(n)).collect())),
            FinCof::Cof(_) => Err(Error::Unsupported("M ∩ x for cofinite x")),
        }
    }

    /// `a ∈ I`: a finite subset of `M`.
    pub fn in_ideal(&self, a: &FinCof) -> bool {
        matches!(a, FinCof::Fin(s) if s.iter().all(|&n| self.in_m(n)))
    }

    /// `a ∈ J`. Every cofinite set meets the infinite `M`, so only finite
    /// sets disjoint from `M` qualify.
    pub fn in_orthogonal(&self, a: &FinCof) -> bool {
        match a {
            FinCof::Fin(s) => s.iter().all(|&n| !self.in_m(n)),
            // cof C ∈ J iff M ⊆ C, impossible for finite C
            FinCof::Cof(_) => false,
        }
    }

    /// `a ∈ I + J`: every finite set splits as `(T ∩ M) △ (T ∖ M)`.
    pub fn in_sum(&self, a: &FinCof) -> bool {
        a.is_finite()
    }

    /// An index past which every residue class has been visited at least
    /// twice beyond the support of every given element.
    fn search_bound(&self, elements: &[&FinCof]) -> u64 {
        let top = elements.iter().filter_map(|e| e.max_support()).max().map_or(0, |m| m + 1);
        top + 2 * self.modulus() + 1
    }
}

/// The two-dimensional space of the isometry counterexample.
#[derive(Clone, Copy, Debug)]
pub struct TwoDimExample {
    pub ideal: IdealDescriptor,
}

impl TwoDimExample {
    pub fn new(ideal: IdealDescriptor) -> Self {
        TwoDimExample { ideal }
    }

    pub fn in_x(&self, (x, y): (&FinCof, &FinCof)) -> bool {
        x.meet(y).is_zero()
    }

    pub fn in_v(&self, (x, y): (&FinCof, &FinCof)) -> bool {
        self.in_x((x, y)) && self.ideal.in_ideal(x) && self.ideal.in_orthogonal(y)
    }

    pub fn in_u(&self, (z, w): (&FinCof, &FinCof)) -> bool {
        w.is_zero() && self.ideal.in_sum(z)
    }

    /// `g(x, y) = (x △ y, 0)`.
    pub fn g(&self, (x, y): (&FinCof, &FinCof)) -> (FinCof, FinCof) {
        (x.symmetric_difference(y), FinCof::zero())
    }

    /// `f = g^{-1}` on `U`: `(z, 0) ↦ (M ∩ z, z ∖ M)`.
    pub fn f(&self, z: &FinCof) -> Result<(FinCof, FinCof)> {
        let inside = self.ideal.restrict(z)?;
        let outside = z.difference(&inside);
        Ok((inside, outside))
    }

    pub fn distance(a: (&FinCof, &FinCof), b: (&FinCof, &FinCof)) -> FinCof {
        a.0.symmetric_difference(b.0).join(&a.1.symmetric_difference(b.1))
    }

    /// Checks `d(g(v), g(v')) = d(v, v')` for every pair of samples, returning
    /// the first failing pair.
    pub fn check_g(&self, samples: &[(FinCof, FinCof)]) -> std::result::Result<(), (usize, usize)> {
        for (i, v) in samples.iter().enumerate() {
            let gv = self.g((&v.0, &v.1));
            for (j, w) in samples.iter().enumerate().skip(i + 1) {
                let gw = self.g((&w.0, &w.1));
                let before = Self::distance((&v.0, &v.1), (&w.0, &w.1));
                let after = Self::distance((&gv.0, &gv.1), (&gw.0, &gw.1));
                if before != after {
                    return Err((i, j));
                }
            }
        }
        Ok(())
    }
}

/// A finite point at which a candidate value `F(1, 0) = (a, b)` breaks the
/// contraction inequality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IsometryWitness {
    /// `x ∈ I` with `d((x,0), (a,b)) = (x △ a) ∨ b ≰ x̄ = d((x,0), (1,0))`.
    Ideal { x: FinCof },
    /// `y ∈ J` with `d((0,y), (a,b)) = (y △ b) ∨ a ≰ ȳ = d((y,0), (1,0))`.
    Orthogonal { y: FinCof },
}

impl IsometryWitness {
    /// Recomputes the violated inequality with lattice operations.
    pub fn recheck(&self, a: &FinCof, b: &FinCof, ideal: &IdealDescriptor) -> bool {
        match self {
            IsometryWitness::Ideal { x } => {
                ideal.in_ideal(x)
                    && !x.symmetric_difference(a).join(b).is_below(&x.complement())
            }
            IsometryWitness::Orthogonal { y } => {
                ideal.in_orthogonal(y)
                    && !y.symmetric_difference(b).join(a).is_below(&y.complement())
            }
        }
    }
}

impl fmt::Display for IsometryWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IsometryWitness::Ideal { x } => write!(f, "ideal x={x}"),
            IsometryWitness::Orthogonal { y } => write!(f, "orthogonal y={y}"),
        }
    }
}

/// Refutes `F(1, 0) = (a, b)` for any contractive `F: X → X` extending
/// `g^{-1}`.
///
/// Such an `F` forces `I ≤ a`, so a point of `M` missing from `a` gives an
/// ideal witness. Otherwise `a` is cofinite and contains `M`, hence also
/// some point outside `M`, which gives a witness in `J`.
pub fn isometry_obstruction_witness(
    a: &FinCof,
    b: &FinCof,
    ideal: &IdealDescriptor,
) -> IsometryWitness {
    let bound = ideal.search_bound(&[a, b]);
    if let Some(m) = (0..bound).find(|&n| ideal.in_m(n) && !a.contains(n)) {
        return IsometryWitness::Ideal { x: FinCof::fin([m]) };
    }
    let n = (0..bound)
        .find(|&n| !ideal.in_m(n) && a.contains(n))
        .expect("a cofinite set containing M also meets its complement");
    IsometryWitness::Orthogonal { y: FinCof::fin([n]) }
}

/// Refutes `F(1) = v` for any contractive `F: B → B` extending
/// `x ↦ M ∩ x` on finite sets: returns a finite `x` with `v ∩ x ≠ M ∩ x`.
pub fn contraction_obstruction_witness(v: &FinCof, ideal: &IdealDescriptor) -> FinCof {
    let bound = ideal.search_bound(&[v]);
    let n = (0..bound)
        .find(|&n| v.contains(n) != ideal.in_m(n))
        .expect("M is neither finite nor cofinite");
    FinCof::fin([n])
}

/// Re-checks `d(F(x), F(1)) = v △ (M ∩ x) ≰ x̄ = d(x, 1)`.
pub fn recheck_contraction(v: &FinCof, x: &FinCof, ideal: &IdealDescriptor) -> bool {
    match ideal.restrict(x) {
        Ok(mx) => !v.symmetric_difference(&mx).is_below(&x.complement()),
        Err(_) => false,
    }
}

/// Every `fin S` and `cof S` with `S ⊆ {0, …, max_support}`.
pub fn bounded_family(max_support: u64) -> impl Iterator<Item = FinCof> {
    assert!(max_support < 32, "family of 2^{} elements", max_support + 2);
    let n = max_support + 1;
    (0..1u64 << n).flat_map(move |mask| {
        let set: BTreeSet<u64> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        [FinCof::Fin(set.clone()), FinCof::Cof(set)]
    })
}

/// Candidate values `(a, b)` for the two-dimensional example: every bounded
/// `a`, paired with `0` and with `ā` (once when `ā = 0`).
pub fn two_dim_candidates(max_support: u64) -> impl Iterator<Item = (FinCof, FinCof)> {
    bounded_family(max_support).flat_map(|a| {
        let complement = a.complement();
        let mut bs = vec![FinCof::zero()];
        if !complement.is_zero() {
            bs.push(complement);
        }
        bs.into_iter().map(move |b| (a.clone(), b))
    })
}

/// The translation `x ↦ x △ shift`, an isometry of `B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Translation<E> {
    pub shift: E,
}

impl<E: BooleanElement> Translation<E> {
    pub fn apply(&self, x: &E) -> E {
        x.symmetric_difference(&self.shift)
    }
}

impl Translation<Bits> {
    /// The translation as a map on all of `B`.
    pub fn to_map(&self) -> PartialMap {
        let atoms = self.shift.atom_count();
        let pairs = Bits::all(atoms).map(|x| {
            let p = Point::new(vec![x]).expect("one coordinate");
            let q = Point::new(vec![self.apply(&x)]).expect("one coordinate");
            (p, q)
        });
        PartialMap::new(pairs, MapKind::Isometric).expect("a translation is a function")
    }
}

/// Extends an isometry between subsets of `B` (any algebra) to all of `B`:
/// `x △ f(x)` is constant, and the translation by it extends `f`.
pub fn line_extension<E: BooleanElement>(pairs: &[(E, E)]) -> Result<Translation<E>> {
    let (x0, y0) = pairs.first().ok_or(Error::EmptySpace)?;
    let shift = x0.symmetric_difference(y0);
    if let Some((x, y)) = pairs.iter().find(|(x, y)| x.symmetric_difference(y) != shift) {
        return Err(Error::Infeasible(format!(
            "x △ f(x) is not constant: {x0} ↦ {y0} but {x} ↦ {y}"
        )));
    }
    Ok(Translation { shift })
}

/// Certifies a finite-algebra line extension: isometric on all of `B` and
/// extending the input.
pub fn certify_line_extension(t: &Translation<Bits>, pairs: &[(Bits, Bits)]) -> bool {
    let map = t.to_map();
    check_map(&map) == MapVerdict::Isometric
        && pairs.iter().all(|(x, y)| {
            let p = Point::new(vec![*x]).expect("one coordinate");
            map.get(&p).map(|q| q.coords()[0]) == Some(*y)
        })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fc(s: &str) -> FinCof {
        s.parse().unwrap()
    }

    fn evens() -> IdealDescriptor {
        IdealDescriptor::new(Predicate::Evens).unwrap()
    }

    #[test]
    fn predicates_parse() {
        assert_eq!("evens".parse::<Predicate>().unwrap(), Predicate::Evens);
        assert_eq!("mod:1,3".parse::<Predicate>().unwrap(), Predicate::Residue { r: 1, m: 3 });
        for bad in ["mod:3,3", "mod:0,1", "mod:0,9", "primes", "mod:1"] {
            assert!(bad.parse::<Predicate>().is_err(), "{bad}");
        }
    }

    #[test]
    fn ideal_membership() {
        let d = evens();
        assert!(d.in_ideal(&fc("fin{0,2,8}")));
        assert!(!d.in_ideal(&fc("fin{0,3}")));
        assert!(!d.in_ideal(&fc("cof{}")));
        assert!(d.in_orthogonal(&fc("fin{1,5}")));
        assert!(d.in_orthogonal(&fc("fin{}")));
        assert!(!d.in_orthogonal(&fc("cof{0,2,4}")));
        assert!(d.in_sum(&fc("fin{1,2}")));
        assert!(!d.in_sum(&fc("cof{1,2}")));
    }

    #[test]
    fn contraction_witness_examples() {
        let d = evens();
        assert_eq!(contraction_obstruction_witness(&fc("fin{2}"), &d), fc("fin{0}"));
        assert_eq!(contraction_obstruction_witness(&fc("cof{}"), &d), fc("fin{1}"));
        assert_eq!(contraction_obstruction_witness(&fc("fin{}"), &d), fc("fin{0}"));
        for v in ["fin{2}", "cof{}", "fin{}", "cof{1,3,5}"] {
            let v = fc(v);
            let x = contraction_obstruction_witness(&v, &d);
            assert!(recheck_contraction(&v, &x, &d), "{v}");
        }
    }

    #[test]
    fn isometry_witness_for_finite_candidate() {
        let d = evens();
        let a = fc("fin{0,2,3}");
        let w = isometry_obstruction_witness(&a, &FinCof::zero(), &d);
        assert_eq!(w, IsometryWitness::Ideal { x: fc("fin{4}") });
        assert!(w.recheck(&a, &FinCof::zero(), &d));
    }

    #[test]
    fn isometry_witness_for_cofinite_candidate_missing_m() {
        let d = evens();
        let a = fc("cof{1,6}");
        let w = isometry_obstruction_witness(&a, &FinCof::zero(), &d);
        assert_eq!(w, IsometryWitness::Ideal { x: fc("fin{6}") });
        assert!(w.recheck(&a, &FinCof::zero(), &d));
    }

    #[test]
    fn isometry_witness_for_cofinite_candidate_containing_m() {
        let d = evens();
        let a = fc("cof{1,3}");
        let b = a.complement();
        let w = isometry_obstruction_witness(&a, &b, &d);
        assert_eq!(w, IsometryWitness::Orthogonal { y: fc("fin{5}") });
        assert!(w.recheck(&a, &b, &d));
    }

    #[test]
    fn g_preserves_distances_on_v() {
        let ex = TwoDimExample::new(evens());
        let samples: Vec<(FinCof, FinCof)> = [
            ("fin{}", "fin{}"),
            ("fin{0,2}", "fin{1}"),
            ("fin{4}", "fin{3,5}"),
            ("fin{0,4,6}", "fin{}"),
        ]
        .iter()
        .map(|(x, y)| (fc(x), fc(y)))
        .collect();
        assert!(samples.iter().all(|(x, y)| ex.in_v((x, y))));
        assert_eq!(ex.check_g(&samples), Ok(()));
        for (x, y) in &samples {
            let (z, w) = ex.g((x, y));
            assert!(ex.in_u((&z, &w)));
            assert_eq!(ex.f(&z).unwrap(), (x.clone(), y.clone()));
        }
    }

    #[test]
    fn line_extension_of_identity() {
        let pairs = [(Bits::zero(2), Bits::zero(2)), (Bits::atom(0, 2), Bits::atom(0, 2))];
        let t = line_extension(&pairs).unwrap();
        assert!(t.shift.is_zero());
        assert!(certify_line_extension(&t, &pairs));
    }

    #[test]
    fn line_extension_over_cofinite_algebra() {
        let shift = fc("fin{3}");
        let pairs: Vec<_> = ["fin{}", "fin{1,3}", "fin{7}"]
            .iter()
            .map(|s| {
                let x = fc(s);
                let y = x.symmetric_difference(&shift);
                (x, y)
            })
            .collect();
        let t = line_extension(&pairs).unwrap();
        assert_eq!(t.shift, shift);
        assert_eq!(t.apply(&fc("cof{3}")), fc("cof{}"));
    }

    #[test]
    fn line_extension_rejects_non_isometries() {
        let pairs = [(fc("fin{}"), fc("fin{}")), (fc("fin{1}"), fc("fin{}"))];
        assert!(matches!(line_extension(&pairs), Err(Error::Infeasible(_))));
    }

    #[test]
    fn bounded_family_size() {
        assert_eq!(bounded_family(2).count(), 16);
        assert!(bounded_family(2).any(|e| e == fc("cof{0,2}")));
        // every candidate gets two partners except cof{}, whose complement is 0
        assert_eq!(two_dim_candidates(2).count(), 31);
    }
}
