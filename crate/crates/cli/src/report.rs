//! Command reports. Each report is one serializable value; the text form is
//! rendered from the same fields so the JSON form mirrors it exactly.

use std::fmt::Write;

use serde::Serialize;

use crate::input::render_map;
use boolspace::FiniteSpace;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpaceBlock {
    pub name: String,
    pub dim: usize,
    pub points: Vec<Vec<String>>,
    pub basepoint: Option<usize>,
}

impl SpaceBlock {
    pub fn new(name: &str, space: &FiniteSpace) -> Self {
        SpaceBlock {
            name: name.to_string(),
            dim: space.dim(),
            points: space
                .points()
                .iter()
                .map(|p| p.coords().iter().map(ToString::to_string).collect())
                .collect(),
            basepoint: space.basepoint_index(),
        }
    }

    fn render(&self) -> String {
        let mut out = format!("space {} dim={}\n", self.name, self.dim);
        for p in &self.points {
            let _ = writeln!(out, "point {}", p.join(" "));
        }
        if let Some(i) = self.basepoint {
            let _ = writeln!(out, "basepoint {i}");
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MapBlock {
    pub name: String,
    pub from: String,
    pub to: String,
    pub pairs: Vec<(usize, usize)>,
}

impl MapBlock {
    fn render(&self) -> String {
        render_map(&self.name, &self.from, &self.to, &self.pairs)
    }
}

/// `alpha[k] = literal` for `k = 1..=rank`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Profile {
    pub space: String,
    pub rank: usize,
    pub alpha: Vec<String>,
}

impl Profile {
    fn render(&self, out: &mut String) {
        let _ = writeln!(out, "profile {} rank={}", self.space, self.rank);
        for (k, a) in self.alpha.iter().enumerate() {
            let _ = writeln!(out, "alpha[{}] = {a}", k + 1);
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteLine {
    pub suite: String,
    pub instances: usize,
    pub passed: usize,
    pub exact: bool,
    pub failures: Vec<FailureLine>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FailureLine {
    pub instance: usize,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CandidateLine {
    pub candidate: String,
    pub witness: String,
    pub recheck: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "command", rename_all = "kebab-case")]
pub enum Report {
    Alpha {
        profiles: Vec<Profile>,
    },
    Base {
        space: String,
        basepoint: String,
        norms: Vec<String>,
        base: SpaceBlock,
    },
    Conv {
        space: String,
        hull: SpaceBlock,
    },
    Isometric {
        left: Profile,
        right: Profile,
        isometric: bool,
        method: String,
        map: Option<MapBlock>,
    },
    Extend {
        input: String,
        ambient: String,
        map: MapBlock,
        verdict: String,
    },
    Verify {
        seed: u64,
        suites: Vec<SuiteLine>,
    },
    Counterexample {
        which: String,
        predicate: String,
        max_support: u64,
        candidates: Vec<CandidateLine>,
        checked: usize,
        rechecked: usize,
    },
}

impl Report {
    /// Whether the report records a property violation.
    pub fn violation(&self) -> bool {
        match self {
            Report::Verify { suites, .. } => suites.iter().any(|s| !s.exact),
            Report::Counterexample { checked, rechecked, .. } => checked != rechecked,
            _ => false,
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        match self {
            Report::Alpha { profiles } => profiles.iter().for_each(|p| p.render(&mut out)),
            Report::Base { space, basepoint, norms, base } => {
                let _ = writeln!(out, "base of {space} at {basepoint}");
                for (i, n) in norms.iter().enumerate() {
                    let _ = writeln!(out, "norm[{}] = {n}", i + 1);
                }
                out.push_str(&base.render());
            }
            Report::Conv { space, hull } => {
                let _ = writeln!(out, "hull of {space}: {} points", hull.points.len());
                out.push_str(&hull.render());
            }
            Report::Isometric { left, right, isometric, method, map } => {
                left.render(&mut out);
                right.render(&mut out);
                let _ = writeln!(out, "isometric: {} ({method})", if *isometric { "yes" } else { "no" });
                if let Some(m) = map {
                    out.push_str(&m.render());
                }
            }
            Report::Extend { input, ambient, map, verdict } => {
                let _ = writeln!(out, "extension of {input} to {ambient}");
                out.push_str(&map.render());
                let _ = writeln!(out, "{verdict}");
            }
            Report::Verify { seed, suites } => {
                let _ = writeln!(out, "seed {seed}");
                for s in suites {
                    let _ = writeln!(out, "{}: {}/{} exact", s.suite, s.passed, s.instances);
                    for f in &s.failures {
                        let _ = writeln!(out, "  failure instance {}: {}", f.instance, f.detail);
                    }
                }
            }
            Report::Counterexample { which, predicate, max_support, candidates, checked, rechecked } => {
                let _ = writeln!(out, "counterexample {which} predicate={predicate} max-support={max_support}");
                for c in candidates {
                    let verdict = if c.recheck { "recheck ok" } else { "recheck FAILED" };
                    let _ = writeln!(out, "{} -> {} : {verdict}", c.candidate, c.witness);
                }
                let _ = writeln!(out, "{rechecked}/{checked} re-check");
            }
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize") + "\n"
    }
}
