//! Boolean algebra arithmetic.
//!
//! Two concrete algebras are provided. [`Bits`] is the finite atomic algebra
//! with `k` atoms, stored as a bit mask where bit `i` is atom `e_i`.
//! [`FinCof`] is the algebra of finite and cofinite subsets of the naturals;
//! it is not complete, and its elements are kept as a tag plus a finite
//! support so no infinite set is ever materialized.
//!
//! [`Element`] wraps both for callers that only learn the algebra at run
//! time (parsing, the command line); its operations reject mixed operands.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Lattice and ring operations shared by every concrete algebra.
pub trait BooleanElement: Clone + Eq + fmt::Debug + fmt::Display {
    fn meet(&self, other: &Self) -> Self;
    fn join(&self, other: &Self) -> Self;
    fn complement(&self) -> Self;
    fn is_zero(&self) -> bool;

    fn difference(&self, other: &Self) -> Self {
        self.meet(&other.complement())
    }

    fn symmetric_difference(&self, other: &Self) -> Self {
        self.difference(other).join(&other.difference(self))
    }

    fn is_one(&self) -> bool {
        self.complement().is_zero()
    }

    /// Lattice order: `a <= b` iff `a ∧ b = a`.
    fn is_below(&self, other: &Self) -> bool {
        self.meet(other) == *self
    }
}

/// Which Boolean algebra an element lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algebra {
    FiniteAtomic { atoms: usize },
    FiniteCofinite,
}

impl Algebra {
    pub fn finite(atoms: usize) -> Result<Self> {
        if atoms == 0 || atoms > Bits::MAX_ATOMS {
            return Err(Error::InvalidAtomCount(atoms));
        }
        Ok(Algebra::FiniteAtomic { atoms })
    }

    pub fn zero(&self) -> Element {
        match *self {
            Algebra::FiniteAtomic { atoms } => Element::Bits(Bits::zero(atoms)),
            Algebra::FiniteCofinite => Element::FinCof(FinCof::zero()),
        }
    }

    pub fn one(&self) -> Element {
        match *self {
            Algebra::FiniteAtomic { atoms } => Element::Bits(Bits::one(atoms)),
            Algebra::FiniteCofinite => Element::FinCof(FinCof::one()),
        }
    }

    /// The atoms of a finite algebra, in increasing index order.
    pub fn atoms(&self) -> Result<Vec<Element>> {
        match *self {
            Algebra::FiniteAtomic { atoms } => {
                Ok(Bits::all_atoms(atoms).map(Element::Bits).collect())
            }
            Algebra::FiniteCofinite => Err(Error::Unsupported("atoms")),
        }
    }

    /// Supremum of a finite family. The empty family has supremum 0.
    pub fn sup_family(&self, elements: &[Element]) -> Result<Element> {
        elements
            .iter()
            .try_fold(self.zero(), |acc, e| acc.join(e))
    }

    /// Parses an element literal of this algebra.
    pub fn parse_element(&self, text: &str) -> Result<Element> {
        match *self {
            Algebra::FiniteAtomic { atoms } => {
                let bits: Bits = text.parse()?;
                if bits.atom_count() != atoms {
                    return Err(Error::InvalidLiteral(text.to_string()));
                }
                Ok(Element::Bits(bits))
            }
            Algebra::FiniteCofinite => text.parse().map(Element::FinCof),
        }
    }
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Algebra::FiniteAtomic { atoms } => write!(f, "finite k={atoms}"),
            Algebra::FiniteCofinite => write!(f, "cofinite"),
        }
    }
}

/// An element of the finite atomic algebra with `atoms` atoms.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Bits {
    mask: u64,
    atoms: u8,
}

impl Bits {
    pub const MAX_ATOMS: usize = 64;

    fn full_mask(atoms: usize) -> u64 {
        if atoms == 64 {
            u64::MAX
        } else {
            (1u64 << atoms) - 1
        }
    }

    /// Builds an element from a raw mask; bits above `atoms` are dropped.
    pub fn new(mask: u64, atoms: usize) -> Self {
        assert!(
            (1..=Self::MAX_ATOMS).contains(&atoms),
            "atom count out of range: {atoms}"
        );
        Bits {
            mask: mask & Self::full_mask(atoms),
            atoms: atoms as u8,
        }
    }

    pub fn zero(atoms: usize) -> Self {
        Self::new(0, atoms)
    }

    pub fn one(atoms: usize) -> Self {
        Self::new(u64::MAX, atoms)
    }

    /// The atom `e_index`.
    pub fn atom(index: usize, atoms: usize) -> Self {
        assert!(index < atoms);
        Self::new(1 << index, atoms)
    }

    pub fn all_atoms(atoms: usize) -> impl Iterator<Item = Bits> + Clone {
        (0..atoms).map(move |i| Bits::atom(i, atoms))
    }

    /// Every element of the algebra, in mask order.
    pub fn all(atoms: usize) -> impl Iterator<Item = Bits> + Clone {
        assert!(atoms < 64, "cannot enumerate 2^{atoms} elements");
        (0..(1u64 << atoms)).map(move |m| Bits::new(m, atoms))
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn atom_count(&self) -> usize {
        self.atoms as usize
    }

    /// Whether atom `index` lies below this element.
    pub fn has_atom(&self, index: usize) -> bool {
        self.mask >> index & 1 == 1
    }

    /// Indices of the atoms below this element, increasing.
    pub fn atom_indices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.atom_count()).filter(move |&i| self.has_atom(i))
    }

    pub fn count_atoms(&self) -> u32 {
        self.mask.count_ones()
    }

    pub fn sup<'a>(atoms: usize, elements: impl IntoIterator<Item = &'a Bits>) -> Bits {
        elements
            .into_iter()
            .fold(Bits::zero(atoms), |acc, e| acc.join(e))
    }

    pub fn inf<'a>(atoms: usize, elements: impl IntoIterator<Item = &'a Bits>) -> Bits {
        elements
            .into_iter()
            .fold(Bits::one(atoms), |acc, e| acc.meet(e))
    }

    #[inline]
    fn check(&self, other: &Bits) {
        debug_assert_eq!(self.atoms, other.atoms, "mixed atom counts");
    }
}

impl BooleanElement for Bits {
    #[inline]
    fn meet(&self, other: &Self) -> Self {
        self.check(other);
        Bits { mask: self.mask & other.mask, atoms: self.atoms }
    }

    #[inline]
    fn join(&self, other: &Self) -> Self {
        self.check(other);
        Bits { mask: self.mask | other.mask, atoms: self.atoms }
    }

    #[inline]
    fn complement(&self) -> Self {
        Bits {
            mask: !self.mask & Self::full_mask(self.atom_count()),
            atoms: self.atoms,
        }
    }

    #[inline]
    fn is_zero(&self) -> bool {
        self.mask == 0
    }

    #[inline]
    fn difference(&self, other: &Self) -> Self {
        self.check(other);
        Bits { mask: self.mask & !other.mask, atoms: self.atoms }
    }

    #[inline]
    fn symmetric_difference(&self, other: &Self) -> Self {
        self.check(other);
        Bits { mask: self.mask ^ other.mask, atoms: self.atoms }
    }

    #[inline]
    fn is_below(&self, other: &Self) -> bool {
        self.check(other);
        self.mask & !other.mask == 0
    }
}

// Ordered as literals: atom 0 is the leftmost (most significant) character.
impl Ord for Bits {
    fn cmp(&self, other: &Self) -> Ordering {
        self.atoms
            .cmp(&other.atoms)
            .then_with(|| self.mask.reverse_bits().cmp(&other.mask.reverse_bits()))
    }
}

impl PartialOrd for Bits {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Bits {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.atom_count() {
            f.write_str(if self.has_atom(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Bits {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Bits({self})")
    }
}

impl FromStr for Bits {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.is_empty() || s.len() > Self::MAX_ATOMS {
            return Err(Error::InvalidLiteral(s.to_string()));
        }
        let mut mask = 0u64;
        for (i, c) in s.chars().enumerate() {
            match c {
                '0' => {}
                '1' => mask |= 1 << i,
                _ => return Err(Error::InvalidLiteral(s.to_string())),
            }
        }
        Ok(Bits::new(mask, s.len()))
    }
}

/// An element of the finite-cofinite algebra over the naturals.
///
/// `Fin(S)` is the finite set `S`; `Cof(S)` is the complement of `S`. The
/// representation is canonical: two elements are equal iff tag and support
/// agree.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FinCof {
    Fin(BTreeSet<u64>),
    Cof(BTreeSet<u64>),
}

impl FinCof {
    pub fn zero() -> Self {
        FinCof::Fin(BTreeSet::new())
    }

    pub fn one() -> Self {
        FinCof::Cof(BTreeSet::new())
    }

    pub fn fin(items: impl IntoIterator<Item = u64>) -> Self {
        FinCof::Fin(items.into_iter().collect())
    }

    pub fn cof(items: impl IntoIterator<Item = u64>) -> Self {
        FinCof::Cof(items.into_iter().collect())
    }

    pub fn contains(&self, n: u64) -> bool {
        match self {
            FinCof::Fin(s) => s.contains(&n),
            FinCof::Cof(s) => !s.contains(&n),
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, FinCof::Fin(_))
    }

    pub fn support(&self) -> &BTreeSet<u64> {
        match self {
            FinCof::Fin(s) | FinCof::Cof(s) => s,
        }
    }

    /// Largest natural mentioned by the support, if any.
    pub fn max_support(&self) -> Option<u64> {
        self.support().last().copied()
    }
}

impl BooleanElement for FinCof {
    fn meet(&self, other: &Self) -> Self {
        use FinCof::*;
        match (self, other) {
            (Fin(a), Fin(b)) => Fin(a.intersection(b).copied().collect()),
            (Fin(a), Cof(b)) | (Cof(b), Fin(a)) => Fin(a.difference(b).copied().collect()),
            (Cof(a), Cof(b)) => Cof(a.union(b).copied().collect()),
        }
    }

    fn join(&self, other: &Self) -> Self {
        use FinCof::*;
        match (self, other) {
            (Fin(a), Fin(b)) => Fin(a.union(b).copied().collect()),
            (Fin(a), Cof(b)) | (Cof(b), Fin(a)) => Cof(b.difference(a).copied().collect()),
            (Cof(a), Cof(b)) => Cof(a.intersection(b).copied().collect()),
        }
    }

    fn complement(&self) -> Self {
        match self {
            FinCof::Fin(s) => FinCof::Cof(s.clone()),
            FinCof::Cof(s) => FinCof::Fin(s.clone()),
        }
    }

    fn is_zero(&self) -> bool {
        matches!(self, FinCof::Fin(s) if s.is_empty())
    }

    fn symmetric_difference(&self, other: &Self) -> Self {
        use FinCof::*;
        // the support of a△b is always the symmetric difference of supports
        let support = self
            .support()
            .symmetric_difference(other.support())
            .copied()
            .collect();
        match (self, other) {
            (Fin(_), Fin(_)) | (Cof(_), Cof(_)) => Fin(support),
            _ => Cof(support),
        }
    }
}

impl fmt::Display for FinCof {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (tag, set) = match self {
            FinCof::Fin(s) => ("fin", s),
            FinCof::Cof(s) => ("cof", s),
        };
        write!(f, "{tag}{{")?;
        for (i, n) in set.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{n}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for FinCof {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for FinCof {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidLiteral(s.to_string());
        let (tag, rest) = s.split_at_checked(3).ok_or_else(bad)?;
        let body = rest
            .strip_prefix('{')
            .and_then(|r| r.strip_suffix('}'))
            .ok_or_else(bad)?;
        let mut set = BTreeSet::new();
        if !body.is_empty() {
            let mut prev: Option<u64> = None;
            for part in body.split(',') {
                if part.is_empty() || !part.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(bad());
                }
                let n: u64 = part.parse().map_err(|_| bad())?;
                if prev.is_some_and(|p| p >= n) {
                    return Err(bad());
                }
                prev = Some(n);
                set.insert(n);
            }
        }
        match tag {
            "fin" => Ok(FinCof::Fin(set)),
            "cof" => Ok(FinCof::Cof(set)),
            _ => Err(bad()),
        }
    }
}

/// An element of either algebra, for run-time dispatch.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Element {
    Bits(Bits),
    FinCof(FinCof),
}

impl Element {
    pub fn algebra(&self) -> Algebra {
        match self {
            Element::Bits(b) => Algebra::FiniteAtomic { atoms: b.atom_count() },
            Element::FinCof(_) => Algebra::FiniteCofinite,
        }
    }

    fn binary(
        &self,
        other: &Self,
        bits: impl Fn(&Bits, &Bits) -> Bits,
        fincof: impl Fn(&FinCof, &FinCof) -> FinCof,
    ) -> Result<Element> {
        match (self, other) {
            (Element::Bits(a), Element::Bits(b)) if a.atom_count() == b.atom_count() => {
                Ok(Element::Bits(bits(a, b)))
            }
            (Element::FinCof(a), Element::FinCof(b)) => Ok(Element::FinCof(fincof(a, b))),
            _ => Err(Error::MixedAlgebra {
                left: self.algebra().to_string(),
                right: other.algebra().to_string(),
            }),
        }
    }

    pub fn meet(&self, other: &Self) -> Result<Element> {
        self.binary(other, Bits::meet, FinCof::meet)
    }

    pub fn join(&self, other: &Self) -> Result<Element> {
        self.binary(other, Bits::join, FinCof::join)
    }

    pub fn difference(&self, other: &Self) -> Result<Element> {
        self.binary(other, Bits::difference, FinCof::difference)
    }

    pub fn symmetric_difference(&self, other: &Self) -> Result<Element> {
        self.binary(other, Bits::symmetric_difference, FinCof::symmetric_difference)
    }

    pub fn complement(&self) -> Element {
        match self {
            Element::Bits(b) => Element::Bits(b.complement()),
            Element::FinCof(s) => Element::FinCof(s.complement()),
        }
    }

    pub fn is_below(&self, other: &Self) -> Result<bool> {
        Ok(self.meet(other)? == *self)
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Element::Bits(b) => b.is_zero(),
            Element::FinCof(s) => s.is_zero(),
        }
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Bits(b) => b.fmt(f),
            Element::FinCof(s) => s.fmt(f),
        }
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<Bits> for Element {
    fn from(b: Bits) -> Self {
        Element::Bits(b)
    }
}

impl From<FinCof> for Element {
    fn from(s: FinCof) -> Self {
        Element::FinCof(s)
    }
}
