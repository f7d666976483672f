//! Seeded and exhaustive property suites. Each suite checks library output
//! against an independent computation and reports every failing instance.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use rand::Rng;

use crate::algebra::{BooleanElement, Bits, FinCof};
use crate::counterexamples::{
    bounded_family, certify_line_extension, contraction_obstruction_witness,
    isometry_obstruction_witness, line_extension, recheck_contraction, two_dim_candidates,
    IdealDescriptor, Predicate, TwoDimExample,
};
use crate::error::{Error, Result};
use crate::extension::{
    conv_extend, cube_generators, extend_contraction, extend_isometry, uniqueness_certify,
    witt_solve, witt_solve_by_search, WittInstance,
};
use crate::generate::{
    instance_rng, random_ambient_copy, random_convex_space, random_element, random_fincof,
    random_point, random_pointed_isometry, random_self_contraction, random_self_isometry,
    random_subset, Shape,
};
use crate::invariants::{
    alpha_by_definition, alpha_profile, brute_force_isometry, build_base, decide_isometric,
    verify_base, AlphaProfile, DEFAULT_ORACLE_CAP,
};
use crate::metric::{
    check_map, conv_hull, dist, orthogonal_complement, FiniteSpace, MapKind, MapVerdict,
    PartialMap, Point,
};

/// Largest `d` in the hypothesis battery.
pub const HYPOTHESIS_MAX_RANK: usize = 4;

/// Largest hull in the uniqueness suite.
pub const CONV_UNIQUE_MAX_HULL: usize = 8;

/// Largest definitional α computation the suites attempt.
const DEFINITION_LIMIT: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    SumLaw,
    IsometryOracle,
    Witt,
    Hypothesis,
    ExtendIsometry,
    ExtendContraction,
    ConvUnique,
    Counterexamples,
    Structural,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::SumLaw,
        Suite::IsometryOracle,
        Suite::Witt,
        Suite::Hypothesis,
        Suite::ExtendIsometry,
        Suite::ExtendContraction,
        Suite::ConvUnique,
        Suite::Counterexamples,
        Suite::Structural,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::SumLaw => "sum-law",
            Suite::IsometryOracle => "isometry-oracle",
            Suite::Witt => "witt",
            Suite::Hypothesis => "hypothesis",
            Suite::ExtendIsometry => "extend-isometry",
            Suite::ExtendContraction => "extend-contraction",
            Suite::ConvUnique => "conv-unique",
            Suite::Counterexamples => "counterexamples",
            Suite::Structural => "structural",
        }
    }

    /// Instance count used when none is given. Exhaustive suites ignore it
    /// except where noted.
    pub fn default_instances(self) -> usize {
        match self {
            Suite::SumLaw => 200,
            Suite::IsometryOracle | Suite::Witt => 100,
            Suite::ExtendIsometry | Suite::ExtendContraction => 100,
            // counterexamples: seeded line-extension inputs
            Suite::ConvUnique | Suite::Counterexamples => 50,
            Suite::Hypothesis | Suite::Structural => 0,
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::InvalidLiteral(s.to_string()))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    pub seed: u64,
    pub instances: usize,
    /// Upper bound on the atom count of generated instances.
    pub atoms: usize,
    /// Upper bound on the dimension of generated instances.
    pub dim: usize,
    pub max_points: usize,
    pub predicate: Predicate,
    pub max_support: u64,
}

impl SuiteConfig {
    pub fn for_suite(suite: Suite, seed: u64) -> Self {
        SuiteConfig {
            seed,
            instances: suite.default_instances(),
            atoms: 3,
            dim: 3,
            max_points: 256,
            predicate: Predicate::Evens,
            max_support: 16,
        }
    }

    fn shape(&self, generators: usize) -> Shape {
        Shape { atoms: self.atoms, dim: self.dim, generators, max_points: self.max_points }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub instance: usize,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub instances: usize,
    pub passed: usize,
    pub failures: Vec<Failure>,
}

impl SuiteReport {
    fn new(suite: Suite) -> Self {
        SuiteReport { suite, instances: 0, passed: 0, failures: Vec::new() }
    }

    fn record(&mut self, outcome: std::result::Result<(), String>) {
        let instance = self.instances;
        self.instances += 1;
        match outcome {
            Ok(()) => self.passed += 1,
            Err(detail) => self.failures.push(Failure { instance, detail }),
        }
    }

    pub fn is_exact(&self) -> bool {
        self.failures.is_empty() && self.passed == self.instances
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{} exact", self.passed, self.instances)
    }
}

/// Turns a library error into a failure message.
fn lib<T>(r: Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

pub fn run_suite(suite: Suite, cfg: &SuiteConfig) -> SuiteReport {
    match suite {
        Suite::SumLaw => seeded(suite, cfg, sum_law_instance),
        Suite::IsometryOracle => seeded(suite, cfg, isometry_oracle_instance),
        Suite::Witt => seeded(suite, cfg, witt_instance),
        Suite::Hypothesis => hypothesis_battery(cfg.atoms, HYPOTHESIS_MAX_RANK),
        Suite::ExtendIsometry => seeded(suite, cfg, extend_isometry_instance),
        Suite::ExtendContraction => seeded(suite, cfg, extend_contraction_instance),
        Suite::ConvUnique => seeded(suite, cfg, conv_unique_instance),
        Suite::Counterexamples => counterexample_suite(cfg),
        Suite::Structural => structural_suite(cfg.atoms),
    }
}

type Instance = fn(&mut rand_chacha::ChaCha8Rng, &SuiteConfig) -> std::result::Result<(), String>;

fn seeded(suite: Suite, cfg: &SuiteConfig, check: Instance) -> SuiteReport {
    let mut report = SuiteReport::new(suite);
    for i in 0..cfg.instances {
        let mut rng = instance_rng(cfg.seed, i as u64);
        report.record(check(&mut rng, cfg));
    }
    report
}

/// A convex space `X`, a convex `U ⊆ X` through a random basepoint, and the
/// pointed copy of `X`.
fn pointed_pair(
    rng: &mut impl Rng,
    cfg: &SuiteConfig,
) -> std::result::Result<(FiniteSpace, FiniteSpace), String> {
    let x = lib(random_convex_space(rng, cfg.shape(5)))?;
    let zero = x.points()[rng.random_range(0..x.len())].clone();
    let extra = random_subset(rng, &x, 2);
    let gens = lib(FiniteSpace::new(extra.points().iter().cloned().chain([zero.clone()])))?;
    let u = lib(conv_hull(&gens).and_then(|u| u.with_basepoint(&zero)))?;
    let x = lib(x.with_basepoint(&zero))?;
    Ok((x, u))
}

fn check_against_definition(space: &FiniteSpace, what: &str) -> std::result::Result<(), String> {
    if space.len() <= DEFINITION_LIMIT {
        let fast = alpha_profile(space);
        let slow = alpha_by_definition(space.points());
        ensure(fast == slow, || format!("alpha({what}) by patterns {fast:?} vs definition {slow:?}"))?;
    }
    Ok(())
}

fn sum_law_instance(
    rng: &mut rand_chacha::ChaCha8Rng,
    cfg: &SuiteConfig,
) -> std::result::Result<(), String> {
    let (x, u) = pointed_pair(rng, cfg)?;
    let perp = lib(orthogonal_complement(&u, &x))?;
    ensure(perp.is_convex(), || "U^⊥ is not convex".into())?;
    for (space, name) in [(&x, "X"), (&u, "U"), (&perp, "U^⊥")] {
        check_against_definition(space, name)?;
    }
    let (ax, au, ap) = (alpha_profile(&x), alpha_profile(&u), alpha_profile(&perp));
    for n in 0..=ax.rank() + 1 {
        let rhs = (0..=n).fold(Bits::zero(x.atoms()), |acc, i| {
            acc.join(&au.get(i).meet(&ap.get(n - i)))
        });
        ensure(ax.get(n) == rhs, || {
            format!("n={n}: alpha_n(X) = {} but the sum gives {rhs}", ax.get(n))
        })?;
    }
    Ok(())
}

fn isometry_oracle_instance(
    rng: &mut rand_chacha::ChaCha8Rng,
    cfg: &SuiteConfig,
) -> std::result::Result<(), String> {
    let small = Shape { max_points: DEFAULT_ORACLE_CAP, ..cfg.shape(4) };
    let x = lib(random_convex_space(rng, small))?;
    let y = if rng.random_bool(0.5) {
        random_ambient_copy(rng, &x)
    } else {
        // a same-sized space when one turns up quickly, else any small one
        let mut candidate = lib(random_convex_space(rng, small))?;
        for _ in 0..50 {
            if candidate.len() == x.len() {
                break;
            }
            candidate = lib(random_convex_space(rng, small))?;
        }
        candidate
    };
    let decided = decide_isometric(&x, &y);
    let found = lib(brute_force_isometry(&x, &y, DEFAULT_ORACLE_CAP))?;
    ensure(decided == found.is_some(), || {
        format!("profiles say {decided}, search says {} for |X|={} |Y|={}", found.is_some(), x.len(), y.len())
    })?;
    if let Some(map) = found {
        ensure(check_map(&map) == MapVerdict::Isometric, || "oracle map is not isometric".into())?;
    }
    Ok(())
}

/// The first `d` entries of a profile, zero padded.
fn padded(p: &AlphaProfile, d: usize) -> Vec<Bits> {
    (1..=d).map(|i| p.get(i)).collect()
}

fn witt_instance(
    rng: &mut rand_chacha::ChaCha8Rng,
    cfg: &SuiteConfig,
) -> std::result::Result<(), String> {
    let (x, u) = pointed_pair(rng, cfg)?;
    let zero = x.basepoint().expect("pointed").clone();
    let psi = lib(random_pointed_isometry(rng, &x, &zero))?;
    let u2 = lib(psi.restrict(&u).and_then(|m| m.image()).and_then(|s| s.with_basepoint(&zero)))?;
    let perp = lib(orthogonal_complement(&u, &x))?;
    let perp2 = lib(orthogonal_complement(&u2, &x))?;

    let inst = lib(WittInstance::new(alpha_profile(&u), alpha_profile(&x)))?;
    ensure(inst.is_valid(), || "profiles of U and X are not a valid instance".into())?;
    let solved = lib(witt_solve(&inst))?;
    for (target, name) in [(&perp, "U^⊥"), (&perp2, "ψ(U)^⊥")] {
        let expected = alpha_profile(target);
        ensure(solved == expected, || format!("solver gives {solved:?}, alpha({name}) is {expected:?}"))?;
    }
    let d = inst.rank();
    let x_sol = padded(&solved, d);
    ensure(inst.first_failure(&x_sol).is_none(), || "solution fails an equation".into())?;
    ensure(inst.residual(&x_sol).is_zero(), || "residual is nonzero at the solution".into())?;

    let all = witt_solve_by_search(&inst);
    ensure(all == vec![x_sol.clone()], || format!("cube search found {} solutions", all.len()))?;
    if d >= 1 {
        let gens = cube_generators(d, inst.atoms());
        let residual = |p: &Point| inst.residual(p.coords());
        match lib(uniqueness_certify(&gens, &residual))? {
            Ok(Some(p)) => ensure(p.coords() == x_sol.as_slice(), || format!("certified zero {p}"))?,
            Ok(None) => return Err("certificate found no zero".into()),
            Err(why) => return Err(format!("uniqueness hypotheses fail: {why:?}")),
        }
    }
    Ok(())
}

/// `f(y_j)` from the closed-form table:
/// `f(y_0) = ⋁_{n=1..d+1} a_n △ b_n` and, for `j ≥ 1`,
/// `f(y_j) = b̄_j ∨ ⋁_{i=1..d-j} (a_i △ b_{i+j}) ∨ a_{d-j+1}`.
pub fn residual_table(inst: &WittInstance, j: usize) -> Bits {
    let (a, b, d) = (&inst.a, &inst.b, inst.rank());
    let zero = Bits::zero(inst.atoms());
    if j == 0 {
        return (1..=d + 1).fold(zero, |acc, n| acc.join(&a.get(n).symmetric_difference(&b.get(n))));
    }
    let middle = (1..=d - j).fold(zero, |acc, i| acc.join(&a.get(i).symmetric_difference(&b.get(i + j))));
    b.get(j).complement().join(&middle).join(&a.get(d - j + 1))
}

/// The cube generator `y_j = (1, …, 1, 0, …, 0)` with `j` ones.
fn y(j: usize, d: usize, atoms: usize) -> Vec<Bits> {
    (1..=d).map(|i| if i <= j { Bits::one(atoms) } else { Bits::zero(atoms) }).collect()
}

/// Exhaustive check of the covering hypothesis on every pair of decreasing
/// profiles (a superset of the valid pairs `a ≤ b`).
pub fn hypothesis_battery(max_atoms: usize, max_rank: usize) -> SuiteReport {
    let mut report = SuiteReport::new(Suite::Hypothesis);
    for atoms in 1..=max_atoms {
        for d in 1..=max_rank {
            let profile = |levels: &[usize]| -> AlphaProfile {
                let values = (1..=d)
                    .map(|i| {
                        let mask = levels.iter().enumerate().filter(|&(_, &l)| l >= i).fold(0, |m, (e, _)| m | 1 << e);
                        Bits::new(mask, atoms)
                    })
                    .collect();
                AlphaProfile::new(atoms, values)
            };
            for levels in (0..2 * atoms).map(|_| 0..=d).multi_cartesian_product() {
                let a = profile(&levels[..atoms]);
                let b = profile(&levels[atoms..]);
                let outcome = lib(WittInstance::with_rank(a, b, d)).and_then(|inst| {
                    let values: Vec<Bits> = (0..=d).map(|j| inst.residual(&y(j, d, atoms))).collect();
                    for (j, v) in values.iter().enumerate() {
                        let table = residual_table(&inst, j);
                        ensure(*v == table, || format!("k={atoms} d={d} {levels:?}: f(y_{j}) = {v}, table {table}"))?;
                    }
                    for (i, j) in (0..=d).tuple_combinations() {
                        ensure(values[i].join(&values[j]).is_one(), || {
                            format!("k={atoms} d={d} {levels:?}: f(y_{i}) ∨ f(y_{j}) ≠ 1")
                        })?;
                    }
                    let last = inst.b.get(d).complement().join(&inst.a.get(1));
                    ensure(values[d] == last, || format!("k={atoms} d={d} {levels:?}: f(y_d) ≠ b̄_d ∨ a_1"))
                });
                report.record(outcome);
            }
        }
    }
    report
}

fn extend_isometry_instance(
    rng: &mut rand_chacha::ChaCha8Rng,
    cfg: &SuiteConfig,
) -> std::result::Result<(), String> {
    let w = lib(random_convex_space(rng, cfg.shape(5)))?;
    let u = random_subset(rng, &w, 4);
    let psi = lib(random_self_isometry(rng, &w))?;
    let f = lib(psi.restrict(&u))?;
    let ext = lib(extend_isometry(&f, &w))?;
    ensure(ext.extends(&f), || "F' does not extend F".into())?;
    ensure(check_map(&ext) == MapVerdict::Isometric, || "F' is not isometric".into())?;
    ensure(lib(ext.domain())? == w && lib(ext.image())? == w, || "F' is not a bijection of W".into())
}

fn extend_contraction_instance(
    rng: &mut rand_chacha::ChaCha8Rng,
    cfg: &SuiteConfig,
) -> std::result::Result<(), String> {
    let w = lib(random_convex_space(rng, cfg.shape(5)))?;
    let u = random_subset(rng, &w, 4);
    let c = lib(random_self_contraction(rng, &w))?;
    let f = lib(c.restrict(&u))?;
    let ext = lib(extend_contraction(&f, &w))?;
    ensure(ext.extends(&f), || "F' does not extend F".into())?;
    ensure(check_map(&ext).is_ok(), || "F' is not contractive".into())?;
    ensure(lib(ext.domain())? == w, || "F' is not defined on all of W".into())?;
    ensure(lib(ext.image())?.is_subset_of(&w), || "F' leaves W".into())
}

/// Every contractive map `hull → B^m` extending `fixed`, by backtracking.
fn all_contractive_extensions(
    hull: &FiniteSpace,
    fixed: &PartialMap,
    codomain: &[Point],
) -> Vec<Vec<Point>> {
    fn go(
        hull: &[Point],
        fixed: &PartialMap,
        codomain: &[Point],
        chosen: &mut Vec<Point>,
        out: &mut Vec<Vec<Point>>,
    ) {
        let i = chosen.len();
        if i == hull.len() {
            out.push(chosen.clone());
            return;
        }
        let options: Vec<&Point> = match fixed.get(&hull[i]) {
            Some(v) => vec![v],
            None => codomain.iter().collect(),
        };
        for v in options {
            let ok = chosen
                .iter()
                .enumerate()
                .all(|(j, w)| dist(v, w).is_below(&dist(&hull[i], &hull[j])));
            if ok {
                chosen.push(v.clone());
                go(hull, fixed, codomain, chosen, out);
                chosen.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(hull.points(), fixed, codomain, &mut Vec::new(), &mut out);
    out
}

fn conv_unique_instance(
    rng: &mut rand_chacha::ChaCha8Rng,
    cfg: &SuiteConfig,
) -> std::result::Result<(), String> {
    let atoms = rng.random_range(1..=cfg.atoms.clamp(1, 2));
    let n = rng.random_range(1..=cfg.dim.clamp(1, 2));
    let m = rng.random_range(1..=2);
    let (u, hull) = loop {
        let count = rng.random_range(1..=3);
        let u = lib(FiniteSpace::new((0..count).map(|_| random_point(rng, atoms, n))))?;
        let hull = lib(conv_hull(&u))?;
        if hull.len() <= CONV_UNIQUE_MAX_HULL {
            break (u, hull);
        }
    };
    // contractive by construction: the image on each atom depends only on
    // the pattern there
    let patterns = u.patterns();
    let images: Vec<Vec<u64>> = patterns
        .iter()
        .map(|ps| ps.iter().map(|_| rng.random_range(0..1u64 << m)).collect())
        .collect();
    let pairs = u.points().iter().map(|p| {
        let target: Vec<Bits> = (0..m)
            .map(|c| {
                let mask = (0..atoms).fold(0u64, |acc, e| {
                    let at = patterns[e].binary_search(&p.pattern(e)).expect("own pattern");
                    acc | (images[e][at] >> c & 1) << e
                });
                Bits::new(mask, atoms)
            })
            .collect();
        (p.clone(), Point::new(target).expect("m >= 1"))
    });
    let f = lib(PartialMap::new(pairs, MapKind::Contractive))?;
    let conv_f = lib(conv_extend(&f))?;
    ensure(lib(conv_f.domain())? == hull, || "Conv(f) is not defined on conv(U)".into())?;

    let codomain: Vec<Point> = (0..m)
        .map(|_| Bits::all(atoms))
        .multi_cartesian_product()
        .map(|c| Point::new(c).expect("m >= 1"))
        .collect();
    let found = all_contractive_extensions(&hull, &f, &codomain);
    ensure(!found.is_empty(), || "search found no contractive extension".into())?;
    for values in &found {
        for (p, v) in hull.points().iter().zip(values) {
            ensure(conv_f.get(p) == Some(v), || {
                format!("{} extensions; one sends {p} to {v}, Conv(f) does not", found.len())
            })?;
        }
    }
    Ok(())
}

/// Runs the finite-cofinite sweep: both witnesses for every bounded
/// candidate, the disjointness identity behind `g`, and seeded line
/// extensions over both algebras.
pub fn counterexample_suite(cfg: &SuiteConfig) -> SuiteReport {
    let mut report = SuiteReport::new(Suite::Counterexamples);
    let ideal = match IdealDescriptor::new(cfg.predicate) {
        Ok(d) => d,
        Err(e) => {
            report.record(Err(e.to_string()));
            return report;
        }
    };
    for (a, b) in two_dim_candidates(cfg.max_support) {
        let w = isometry_obstruction_witness(&a, &b, &ideal);
        report.record(ensure(w.recheck(&a, &b, &ideal), || format!("({a},{b}): {w} does not recheck")));
    }
    for a in bounded_family(cfg.max_support) {
        let x = contraction_obstruction_witness(&a, &ideal);
        report.record(ensure(recheck_contraction(&a, &x, &ideal), || format!("{a}: x={x} does not recheck")));
    }
    report.record(two_dim_identity(cfg, &ideal));
    for i in 0..cfg.instances {
        let mut rng = instance_rng(cfg.seed, i as u64);
        report.record(line_instance(&mut rng, i).map(|_| ()));
    }
    report
}

fn two_dim_identity(cfg: &SuiteConfig, ideal: &IdealDescriptor) -> std::result::Result<(), String> {
    let ex = TwoDimExample::new(*ideal);
    let mut rng = instance_rng(cfg.seed, u64::MAX);
    let samples: Vec<(FinCof, FinCof)> = (0..40)
        .map(|_| {
            let t: Vec<u64> = (0..=cfg.max_support).filter(|_| rng.random_bool(0.4)).collect();
            let inside = FinCof::fin(t.iter().copied().filter(|&n| ideal.in_m(n)));
            let outside = FinCof::fin(t.iter().copied().filter(|&n| !ideal.in_m(n)));
            let outside = if rng.random_bool(0.5) { outside } else { FinCof::zero() };
            (inside, outside)
        })
        .collect();
    ensure(samples.iter().all(|(x, y)| ex.in_v((x, y))), || "sample outside V".into())?;
    ex.check_g(&samples).map_err(|(i, j)| format!("g changes d(v_{i}, v_{j})"))
}

/// Seeded line-extension input `i`: even instances over a finite algebra,
/// odd ones over the finite-cofinite algebra. Returns a description of the
/// certified translation.
pub fn line_instance(rng: &mut rand_chacha::ChaCha8Rng, i: usize) -> std::result::Result<String, String> {
    let count = rng.random_range(1..=4);
    if i % 2 == 0 {
        let atoms = rng.random_range(1..=3);
        let shift = random_element(rng, atoms);
        let pairs: Vec<(Bits, Bits)> = (0..count)
            .map(|_| random_element(rng, atoms))
            .map(|x| (x, x.symmetric_difference(&shift)))
            .collect();
        let t = lib(line_extension(&pairs))?;
        ensure(certify_line_extension(&t, &pairs), || format!("translation by {} fails", t.shift))?;
        Ok(format!("finite k={atoms}, {} pairs, shift={}", pairs.len(), t.shift))
    } else {
        let shift = random_fincof(rng, 16);
        let pairs: Vec<(FinCof, FinCof)> = (0..count)
            .map(|_| random_fincof(rng, 16))
            .map(|x| {
                let y = x.symmetric_difference(&shift);
                (x, y)
            })
            .collect();
        let t = lib(line_extension(&pairs))?;
        ensure(pairs.iter().all(|(x, y)| t.apply(x) == *y), || "translation does not extend f".into())?;
        let probes: Vec<FinCof> = (0..8).map(|_| random_fincof(rng, 20)).collect();
        for (p, q) in probes.iter().tuple_combinations() {
            let before = p.symmetric_difference(q);
            let after = t.apply(p).symmetric_difference(&t.apply(q));
            ensure(before == after, || format!("translation moves d({p}, {q})"))?;
        }
        Ok(format!("cofinite, {} pairs, shift={}", pairs.len(), t.shift))
    }
}

/// Exhaustive small-scale checks: lattice laws, the metric axioms, hull
/// closure, α by definition, and base verification.
pub fn structural_suite(max_atoms: usize) -> SuiteReport {
    let mut report = SuiteReport::new(Suite::Structural);
    let max_atoms = max_atoms.clamp(1, 3);
    for k in 1..=max_atoms {
        let all: Vec<Bits> = Bits::all(k).collect();
        for (a, b, c) in all.iter().cartesian_product(&all).cartesian_product(&all).map(|((a, b), c)| (a, b, c)) {
            report.record(lattice_laws(a, b, c));
        }
        // complete distributivity over every family
        for family in (0..1u64 << all.len()).map(|m| all.iter().enumerate().filter(move |(i, _)| m >> i & 1 == 1).map(|(_, x)| *x).collect_vec()) {
            let outcome = all.iter().try_for_each(|x| {
                let lhs = x.meet(&Bits::sup(k, &family));
                let rhs = Bits::sup(k, family.iter().map(|y| x.meet(y)).collect_vec().iter());
                ensure(lhs == rhs, || format!("{x} ∧ sup {family:?}"))
            });
            report.record(outcome);
        }
    }
    let fc: Vec<FinCof> = bounded_family(2).collect();
    for ((a, b), c) in fc.iter().cartesian_product(&fc).cartesian_product(&fc) {
        report.record(lattice_laws(a, b, c));
    }

    for (k, n) in [(1, 1), (2, 1), (3, 1), (1, 2), (2, 2), (3, 2), (1, 3)] {
        let whole = full_space(k, n);
        report.record(whole.check_metric().map_err(|(x, y, z)| format!("triangle fails at {x} {y} {z}")));
    }

    let mut families: Vec<Vec<Point>> = Vec::new();
    for (k, n, max_size) in [(1, 1, 2), (2, 1, 4), (3, 1, 8), (1, 3, 8), (2, 2, 3)] {
        if k > max_atoms {
            continue;
        }
        let points = full_space(k, n).points().to_vec();
        for size in 1..=max_size {
            families.extend(points.iter().cloned().combinations(size));
        }
    }
    for s in families {
        report.record(hull_and_base_checks(s));
    }
    report
}

fn full_space(k: usize, n: usize) -> FiniteSpace {
    let points = (0..n)
        .map(|_| Bits::all(k))
        .multi_cartesian_product()
        .map(|c| Point::new(c).expect("n >= 1"));
    FiniteSpace::new(points).expect("nonempty")
}

fn lattice_laws<E: BooleanElement>(a: &E, b: &E, c: &E) -> std::result::Result<(), String> {
    let laws = [
        ("meet distributes", a.meet(&b.join(c)) == a.meet(b).join(&a.meet(c))),
        ("join distributes", a.join(&b.meet(c)) == a.join(b).meet(&a.join(c))),
        ("de Morgan", a.meet(b).complement() == a.complement().join(&b.complement())),
        ("absorption", a.join(&a.meet(b)) == *a && a.meet(&a.join(b)) == *a),
        ("complement", a.meet(&a.complement()).is_zero() && a.join(&a.complement()).is_one()),
        (
            "symmetric difference associates",
            a.symmetric_difference(b).symmetric_difference(c)
                == a.symmetric_difference(&b.symmetric_difference(c)),
        ),
        ("order", a.is_below(b) == (a.meet(b) == *a)),
    ];
    match laws.iter().find(|(_, holds)| !holds) {
        Some((name, _)) => Err(format!("{name} fails at {a}, {b}, {c}")),
        None => Ok(()),
    }
}

fn hull_and_base_checks(s: Vec<Point>) -> std::result::Result<(), String> {
    let gens = lib(FiniteSpace::new(s))?;
    let hull = lib(conv_hull(&gens))?;
    ensure(gens.is_subset_of(&hull), || "S is not inside conv(S)".into())?;
    ensure(hull.is_convex(), || "conv(S) is not convex".into())?;
    ensure(lib(conv_hull(&hull))? == hull, || "conv is not idempotent".into())?;
    let by_gens = alpha_by_definition(gens.points());
    let by_hull = alpha_by_definition(hull.points());
    ensure(by_gens == by_hull, || format!("alpha(S) {by_gens:?} ≠ alpha(conv S) {by_hull:?}"))?;
    ensure(alpha_profile(&hull) == by_hull, || "pattern count disagrees with definition".into())?;
    for i in 0..hull.len() {
        let pointed = lib(hull.clone().with_basepoint_index(i))?;
        let base = lib(build_base(&pointed))?;
        verify_base(&pointed, &base).map_err(|v| format!("base at basepoint {i}: {v:?}"))?;
    }
    Ok(())
}
