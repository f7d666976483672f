//! The block grammar for spaces and maps.
//!
//! ```text
//! algebra finite k=2
//! space W dim=1
//! point 00
//! point 11
//! basepoint 0
//! map F from=U to=V
//! pair 0 -> 1
//! ```
//!
//! Indices in `basepoint` and `pair` lines refer to the canonical (sorted,
//! deduplicated) point order of the space. `#` starts a comment.

use std::fmt;

use boolspace::{Algebra, Bits, Error as CoreError, FiniteSpace, MapKind, PartialMap, Point};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax,
    Semantic,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind {
            ParseErrorKind::Syntax => "syntax error",
            ParseErrorKind::Semantic => "semantic error",
        };
        write!(f, "line {}: {kind}: {}", self.line, self.message)
    }
}

impl std::error::Error for ParseError {}

fn syntax(line: usize, message: impl Into<String>) -> ParseError {
    ParseError { line, kind: ParseErrorKind::Syntax, message: message.into() }
}

fn semantic(line: usize, message: impl Into<String>) -> ParseError {
    ParseError { line, kind: ParseErrorKind::Semantic, message: message.into() }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedSpace {
    pub name: String,
    pub space: FiniteSpace,
}

/// A map block: its pair list as written, and the map on points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedMap {
    pub name: String,
    pub from: String,
    pub to: String,
    pub pairs: Vec<(usize, usize)>,
    pub map: PartialMap,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Document {
    pub algebra: Algebra,
    pub spaces: Vec<NamedSpace>,
    pub maps: Vec<NamedMap>,
}

impl Document {
    pub fn space(&self, name: &str) -> Option<&FiniteSpace> {
        self.spaces.iter().find(|s| s.name == name).map(|s| &s.space)
    }

    pub fn map(&self, name: &str) -> Option<&NamedMap> {
        self.maps.iter().find(|m| m.name == name)
    }
}

struct OpenSpace {
    name: String,
    line: usize,
    dim: usize,
    points: Vec<Point>,
    basepoint: Option<(usize, usize)>,
}

struct OpenMap {
    name: String,
    from: String,
    to: String,
    pairs: Vec<(usize, usize, usize)>,
}

fn valid_name(name: &str) -> bool {
    !name.is_empty()
        && name.chars().all(|c| c.is_ascii_alphanumeric() || matches!(c, '_' | '-' | '.'))
}

fn keyed<'a>(token: Option<&'a str>, key: &str, line: usize) -> Result<&'a str, ParseError> {
    token
        .and_then(|t| t.strip_prefix(key)?.strip_prefix('='))
        .ok_or_else(|| syntax(line, format!("expected {key}=<value>")))
}

fn number(text: &str, line: usize, what: &str) -> Result<usize, ParseError> {
    text.parse().map_err(|_| syntax(line, format!("{what} must be a non-negative integer, got {text:?}")))
}

pub fn parse_input(text: &str) -> Result<Document, ParseError> {
    let mut algebra: Option<Algebra> = None;
    let mut spaces: Vec<NamedSpace> = Vec::new();
    let mut maps: Vec<NamedMap> = Vec::new();
    let mut open_space: Option<OpenSpace> = None;
    let mut open_map: Option<OpenMap> = None;

    for (index, raw) in text.lines().enumerate() {
        let line = index + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let mut tokens = content.split_whitespace();
        let keyword = tokens.next().expect("nonempty line");
        match keyword {
            "algebra" => {
                if algebra.is_some() {
                    return Err(semantic(line, "algebra declared twice"));
                }
                algebra = Some(match tokens.next() {
                    Some("finite") => {
                        let k = number(keyed(tokens.next(), "k", line)?, line, "k")?;
                        Algebra::finite(k).map_err(|e| semantic(line, e.to_string()))?
                    }
                    Some("cofinite") => {
                        return Err(semantic(line, "spaces over the finite-cofinite algebra are not supported in input files"))
                    }
                    _ => return Err(syntax(line, "expected `algebra finite k=<n>`")),
                });
            }
            "space" => {
                close_space(&mut open_space, &mut spaces)?;
                close_map(&mut open_map, &spaces, &mut maps)?;
                if algebra.is_none() {
                    return Err(semantic(line, "space declared before the algebra"));
                }
                let name = tokens.next().filter(|n| valid_name(n)).ok_or_else(|| syntax(line, "expected a space name"))?;
                let dim = number(keyed(tokens.next(), "dim", line)?, line, "dim")?;
                if dim == 0 {
                    return Err(semantic(line, "dim must be at least 1"));
                }
                if spaces.iter().any(|s| s.name == name) {
                    return Err(semantic(line, format!("space {name} declared twice")));
                }
                open_space = Some(OpenSpace { name: name.to_string(), line, dim, points: Vec::new(), basepoint: None });
            }
            "point" => {
                let space = open_space.as_mut().ok_or_else(|| syntax(line, "point outside a space block"))?;
                let k = match algebra {
                    Some(Algebra::FiniteAtomic { atoms }) => atoms,
                    _ => unreachable!("spaces require a finite algebra"),
                };
                let coords = tokens
                    .map(|t| {
                        let b: Bits = t.parse().map_err(|_| syntax(line, format!("malformed element literal {t:?}")))?;
                        if b.atom_count() != k {
                            return Err(semantic(line, format!("element {t} is outside the algebra with k={k}")));
                        }
                        Ok(b)
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                if coords.len() != space.dim {
                    return Err(semantic(line, format!("point has {} coordinates, space {} has dim={}", coords.len(), space.name, space.dim)));
                }
                space.points.push(Point::new(coords).expect("dim >= 1"));
            }
            "basepoint" => {
                let space = open_space.as_mut().ok_or_else(|| syntax(line, "basepoint outside a space block"))?;
                let i = number(tokens.next().ok_or_else(|| syntax(line, "expected an index"))?, line, "index")?;
                space.basepoint = Some((i, line));
            }
            "map" => {
                close_space(&mut open_space, &mut spaces)?;
                close_map(&mut open_map, &spaces, &mut maps)?;
                let name = tokens.next().filter(|n| valid_name(n)).ok_or_else(|| syntax(line, "expected a map name"))?;
                let from = keyed(tokens.next(), "from", line)?;
                let to = keyed(tokens.next(), "to", line)?;
                for s in [from, to] {
                    if !spaces.iter().any(|sp| sp.name == s) {
                        return Err(semantic(line, format!("map {name} refers to undeclared space {s}")));
                    }
                }
                if maps.iter().any(|m| m.name == name) {
                    return Err(semantic(line, format!("map {name} declared twice")));
                }
                open_map = Some(OpenMap { name: name.into(), from: from.into(), to: to.into(), pairs: Vec::new() });
            }
            "pair" => {
                let map = open_map.as_mut().ok_or_else(|| syntax(line, "pair outside a map block"))?;
                let (i, arrow, j) = (tokens.next(), tokens.next(), tokens.next());
                let (Some(i), Some("->"), Some(j)) = (i, arrow, j) else {
                    return Err(syntax(line, "expected `pair <i> -> <j>`"));
                };
                map.pairs.push((number(i, line, "index")?, number(j, line, "index")?, line));
            }
            other => return Err(syntax(line, format!("unknown directive {other:?}"))),
        }
        if let Some(extra) = leftover(content, keyword) {
            return Err(syntax(line, format!("unexpected token {extra:?}")));
        }
    }
    close_space(&mut open_space, &mut spaces)?;
    close_map(&mut open_map, &spaces, &mut maps)?;
    let algebra = algebra.ok_or_else(|| semantic(1, "no algebra declared"))?;
    Ok(Document { algebra, spaces, maps })
}

/// Tokens beyond what each directive consumes.
fn leftover<'a>(content: &'a str, keyword: &str) -> Option<&'a str> {
    let expected = match keyword {
        "algebra" => 3,
        "space" => 3,
        "basepoint" => 2,
        "map" => 4,
        "pair" => 4,
        _ => return None,
    };
    content.split_whitespace().nth(expected)
}

fn close_space(open: &mut Option<OpenSpace>, spaces: &mut Vec<NamedSpace>) -> Result<(), ParseError> {
    let Some(s) = open.take() else { return Ok(()) };
    if s.points.is_empty() {
        return Err(semantic(s.line, format!("space {} has no points", s.name)));
    }
    let mut space = FiniteSpace::new(s.points).map_err(|e| semantic(s.line, e.to_string()))?;
    if let Some((i, line)) = s.basepoint {
        let len = space.len();
        space = space
            .with_basepoint_index(i)
            .map_err(|_| semantic(line, format!("basepoint index {i} out of range for {} points", len)))?;
    }
    spaces.push(NamedSpace { name: s.name, space });
    Ok(())
}

fn close_map(open: &mut Option<OpenMap>, spaces: &[NamedSpace], maps: &mut Vec<NamedMap>) -> Result<(), ParseError> {
    let Some(m) = open.take() else { return Ok(()) };
    let find = |n: &str| spaces.iter().find(|s| s.name == n).map(|s| &s.space).expect("checked on declaration");
    let (from, to) = (find(&m.from), find(&m.to));
    let mut points = Vec::with_capacity(m.pairs.len());
    for &(i, j, line) in &m.pairs {
        let p = from.points().get(i).ok_or_else(|| semantic(line, format!("index {i} out of range for {} ({} points)", m.from, from.len())))?;
        let q = to.points().get(j).ok_or_else(|| semantic(line, format!("index {j} out of range for {} ({} points)", m.to, to.len())))?;
        if let Some((_, prev)) = points.iter().find(|(x, y): &&(Point, Point)| x == p && y != q) {
            return Err(semantic(line, format!("{p} is already sent to {prev}")));
        }
        points.push((p.clone(), q.clone()));
    }
    let map = PartialMap::new(points, MapKind::Contractive).map_err(|e| match e {
        CoreError::NotAFunction { point } => semantic(0, format!("{point} has two images")),
        e => semantic(0, e.to_string()),
    })?;
    let pairs = m.pairs.iter().map(|&(i, j, _)| (i, j)).collect();
    maps.push(NamedMap { name: m.name, from: m.from, to: m.to, pairs, map });
    Ok(())
}

/// Renders a space block; points come out in canonical order so that
/// indices survive a round trip.
pub fn render_space(name: &str, space: &FiniteSpace) -> String {
    let mut out = format!("space {name} dim={}\n", space.dim());
    for p in space.points() {
        out.push_str(&point_line(p));
        out.push('\n');
    }
    if let Some(i) = space.basepoint_index() {
        out.push_str(&format!("basepoint {i}\n"));
    }
    out
}

pub fn point_line(p: &Point) -> String {
    let coords: Vec<String> = p.coords().iter().map(ToString::to_string).collect();
    format!("point {}", coords.join(" "))
}

/// Index pairs of `map` relative to the canonical orders of `from` and `to`.
pub fn map_pairs(map: &PartialMap, from: &FiniteSpace, to: &FiniteSpace) -> Option<Vec<(usize, usize)>> {
    map.pairs().map(|(p, q)| Some((from.index_of(p)?, to.index_of(q)?))).collect()
}

pub fn render_map(name: &str, from: &str, to: &str, pairs: &[(usize, usize)]) -> String {
    let mut out = format!("map {name} from={from} to={to}\n");
    for (i, j) in pairs {
        out.push_str(&format!("pair {i} -> {j}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_point_space() {
        let doc = parse_input("algebra finite k=2\nspace A dim=1\npoint 00\npoint 11").unwrap();
        assert_eq!(doc.space("A").unwrap().len(), 2);
    }

    #[test]
    fn malformed_literal_reports_its_line() {
        let err = parse_input("algebra finite k=2\nspace A dim=1\npoint 00\npoint 10x").unwrap_err();
        assert_eq!(err.line, 4);
        assert_eq!(err.kind, ParseErrorKind::Syntax);
    }

    #[test]
    fn wrong_width_is_semantic() {
        let err = parse_input("algebra finite k=2\nspace A dim=1\npoint 000").unwrap_err();
        assert_eq!((err.line, err.kind), (3, ParseErrorKind::Semantic));
    }

    #[test]
    fn dangling_indices() {
        let base = "algebra finite k=1\nspace A dim=1\npoint 0\npoint 1\n";
        let err = parse_input(&format!("{base}basepoint 2\n")).unwrap_err();
        assert_eq!((err.line, err.kind), (5, ParseErrorKind::Semantic));
        let err = parse_input(&format!("{base}map F from=A to=A\npair 0 -> 5\n")).unwrap_err();
        assert_eq!((err.line, err.kind), (6, ParseErrorKind::Semantic));
        let err = parse_input(&format!("{base}map F from=A to=B\n")).unwrap_err();
        assert_eq!(err.line, 5);
    }

    #[test]
    fn conflicting_pairs_are_rejected() {
        let text = "algebra finite k=1\nspace A dim=1\npoint 0\npoint 1\nmap F from=A to=A\npair 0 -> 0\npair 0 -> 1\n";
        let err = parse_input(text).unwrap_err();
        assert_eq!(err.line, 7);
    }

    #[test]
    fn indices_are_canonical() {
        let doc = parse_input("algebra finite k=1\nspace A dim=1\npoint 1\npoint 0\nbasepoint 1\n").unwrap();
        let a = doc.space("A").unwrap();
        assert_eq!(a.basepoint().unwrap().to_string(), "(1)");
    }

    #[test]
    fn blocks_round_trip() {
        let text = "algebra finite k=2 # comment\n\nspace A dim=2\npoint 11 00\npoint 01 10\nbasepoint 1\nmap F from=A to=A\npair 0 -> 1\npair 1 -> 0\n";
        let doc = parse_input(text).unwrap();
        let a = doc.space("A").unwrap();
        let f = doc.map("F").unwrap();
        let again = format!(
            "algebra finite k=2\n{}{}",
            render_space("A", a),
            render_map("F", "A", "A", &map_pairs(&f.map, a, a).unwrap())
        );
        assert_eq!(parse_input(&again).unwrap(), doc);
    }
}
