//! The built-in group corpus and the plain-text group file format.
//!
//! ```text
//! # comments run to end of line
//! name: S4
//! degree: 4
//! gens: (1 2), (1 2 3 4)
//! order: 24
//! ```
//!
//! `gens:` holds comma-separated cycle products with 1-based points and may
//! be empty (trivial group). `order:` is optional; when present the closure
//! must match it.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::Path;

use crate::construct::{
    alternating, cyclic, dicyclic, dihedral, direct_product, elementary_abelian, psl2_7, symmetric,
};
use crate::error::{Error, Result};
use crate::group::Group;
use crate::harness::build_example42;
use crate::perm::{parse_cycles, Perm};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupSpecFile {
    pub name: String,
    pub degree: usize,
    pub gens: Vec<String>,
    pub expected_order: Option<usize>,
}

fn parse_err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Splits on commas that are not inside parentheses; returns each piece with
/// its 0-based character offset.
fn split_gens(s: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth <= 0 => {
                out.push((start, &s[start..i]));
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push((start, &s[start..]));
    out
}

impl GroupSpecFile {
    pub fn parse(text: &str) -> Result<GroupSpecFile> {
        let mut name = None;
        let mut degree = None;
        let mut gens: Option<Vec<(usize, usize, String)>> = None;
        let mut expected_order = None;
        for (ln, raw) in text.lines().enumerate() {
            let line_no = ln + 1;
            let line = raw.split('#').next().unwrap();
            if line.trim().is_empty() {
                continue;
            }
            let Some(colon) = line.find(':') else {
                return Err(parse_err(line_no, 1, "expected `key: value`"));
            };
            let key = line[..colon].trim();
            let value_col = colon + 2;
            let value = &line[colon + 1..];
            let dup = |seen: bool| {
                if seen {
                    Err(parse_err(line_no, 1, format!("duplicate `{key}:` line")))
                } else {
                    Ok(())
                }
            };
            match key {
                "name" => {
                    dup(name.is_some())?;
                    let v = value.trim();
                    if v.is_empty() {
                        return Err(parse_err(line_no, value_col, "empty name"));
                    }
                    name = Some(v.to_string());
                }
                "degree" => {
                    dup(degree.is_some())?;
                    let d: usize = value
                        .trim()
                        .parse()
                        .map_err(|_| parse_err(line_no, value_col, "degree must be a positive integer"))?;
                    if d == 0 {
                        return Err(parse_err(line_no, value_col, "degree must be positive"));
                    }
                    degree = Some(d);
                }
                "order" => {
                    dup(expected_order.is_some())?;
                    let o: usize = value
                        .trim()
                        .parse()
                        .map_err(|_| parse_err(line_no, value_col, "order must be an integer"))?;
                    expected_order = Some(o);
                }
                "gens" => {
                    dup(gens.is_some())?;
                    let list = if value.trim().is_empty() {
                        Vec::new()
                    } else {
                        split_gens(value)
                            .into_iter()
                            .map(|(off, g)| {
                                let lead = g.len() - g.trim_start().len();
                                (line_no, value_col + off + lead, g.trim().to_string())
                            })
                            .collect()
                    };
                    gens = Some(list);
                }
                other => return Err(parse_err(line_no, 1, format!("unknown key `{other}`"))),
            }
        }
        let last = text.lines().count().max(1);
        let name = name.ok_or_else(|| parse_err(last, 1, "missing `name:` line"))?;
        let degree = degree.ok_or_else(|| parse_err(last, 1, "missing `degree:` line"))?;
        let gens = gens.ok_or_else(|| parse_err(last, 1, "missing `gens:` line"))?;
        for (line, col, g) in &gens {
            if g.is_empty() {
                return Err(parse_err(*line, *col, "empty generator"));
            }
            parse_cycles(g, degree).map_err(|(c, m)| parse_err(*line, col + c - 1, m))?;
        }
        Ok(GroupSpecFile {
            name,
            degree,
            gens: gens.into_iter().map(|(_, _, g)| g).collect(),
            expected_order,
        })
    }

    pub fn from_group(name: &str, g: &Group) -> GroupSpecFile {
        GroupSpecFile {
            name: name.to_string(),
            degree: g.degree(),
            gens: g.generators().iter().map(|p| p.to_string()).collect(),
            expected_order: Some(g.order()),
        }
    }

    pub fn serialize(&self) -> String {
        let mut s = String::new();
        writeln!(s, "name: {}", self.name).unwrap();
        writeln!(s, "degree: {}", self.degree).unwrap();
        writeln!(s, "gens: {}", self.gens.join(", ")).unwrap();
        if let Some(o) = self.expected_order {
            writeln!(s, "order: {o}").unwrap();
        }
        s
    }
}

pub fn parse_group_file(path: &Path) -> Result<GroupSpecFile> {
    GroupSpecFile::parse(&std::fs::read_to_string(path)?)
}

pub fn load_group(spec: &GroupSpecFile) -> Result<Group> {
    let gens: Vec<Perm> = spec
        .gens
        .iter()
        .map(|g| parse_cycles(g, spec.degree).map_err(|(c, m)| parse_err(1, c, m)))
        .collect::<Result<_>>()?;
    let g = Group::generate(spec.degree, gens)?;
    if let Some(expected) = spec.expected_order {
        if expected != g.order() {
            return Err(Error::OrderMismatch {
                expected,
                actual: g.order(),
            });
        }
    }
    Ok(g)
}

/// Every file in `dir`, in file-name order.
pub fn load_dir(dir: &Path) -> Result<Vec<(String, Group)>> {
    let mut paths: Vec<_> = std::fs::read_dir(dir)?
        .map(|e| e.map(|e| e.path()))
        .collect::<std::io::Result<_>>()?;
    paths.retain(|p| p.is_file());
    paths.sort();
    paths
        .iter()
        .map(|p| {
            let spec = parse_group_file(p)?;
            let g = load_group(&spec)?;
            Ok((spec.name, g))
        })
        .collect()
}

/// Factors of the direct products in the corpus.
fn product_factors() -> Vec<(&'static str, Group)> {
    vec![
        ("C2", cyclic(2)),
        ("C3", cyclic(3)),
        ("C4", cyclic(4)),
        ("C5", cyclic(5)),
        ("C2 x C2", elementary_abelian(2, 2)),
        ("S3", symmetric(3)),
        ("D8", dihedral(8)),
        ("Q8", dicyclic(8)),
        ("A4", alternating(4)),
        ("C3 ⋊ C4", dicyclic(12)),
        ("D10", dihedral(10)),
        ("S4", symmetric(4)),
    ]
}

/// The verification population, in a fixed order.
pub fn builtin_corpus() -> Vec<(String, Group)> {
    let mut out: Vec<(String, Group)> = Vec::new();
    for n in 2..=24 {
        out.push((format!("C{n}"), cyclic(n)));
    }
    for n in (6..=24).step_by(2) {
        out.push((format!("D{n}"), dihedral(n)));
    }
    out.push(("Q8".into(), dicyclic(8)));
    out.push(("Q16".into(), dicyclic(16)));
    out.push(("C2^3".into(), elementary_abelian(2, 3)));
    out.push(("C3^3".into(), elementary_abelian(3, 3)));
    out.push(("S3".into(), symmetric(3)));
    out.push(("S4".into(), symmetric(4)));
    out.push(("A4".into(), alternating(4)));
    out.push(("A5".into(), alternating(5)));
    out.push(("A6".into(), alternating(6)));
    out.push(("PSL(2,7)".into(), psl2_7()));
    let prod = |a: &Group, b: &Group| direct_product(a, b).expect("within cap");
    out.push(("D8 x C3".into(), prod(&dihedral(8), &cyclic(3))));
    out.push(("Q8 x C3".into(), prod(&dicyclic(8), &cyclic(3))));
    out.push(("S3 x S3".into(), prod(&symmetric(3), &symmetric(3))));
    out.push(("C3 ⋊ C4".into(), dicyclic(12)));
    let (b, g, _) = build_example42().expect("example reconstruction");
    out.push(("S3 wr C3".into(), b));
    out.push(("O^2(S3 wr C3)".into(), g));

    let mut seen: BTreeSet<String> = out.iter().map(|(n, _)| n.clone()).collect();
    let factors = product_factors();
    for (i, (na, a)) in factors.iter().enumerate() {
        for (nb, b) in &factors[i..] {
            if a.order() * b.order() >= 200 {
                continue;
            }
            let coprime_cyclic = na.starts_with('C')
                && nb.starts_with('C')
                && !na.contains(' ')
                && !nb.contains(' ')
                && crate::arith::gcd(a.order(), b.order()) == 1;
            if coprime_cyclic {
                continue;
            }
            let wrap = |n: &str| if n.contains(' ') { format!("({n})") } else { n.to_string() };
            let name = format!("{} x {}", wrap(na), wrap(nb));
            let swapped = format!("{} x {}", wrap(nb), wrap(na));
            if seen.contains(&name) || seen.contains(&swapped) {
                continue;
            }
            seen.insert(name.clone());
            out.push((name, prod(a, b)));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s4_from_text() {
        let spec = GroupSpecFile::parse("name: S4\ndegree: 4\ngens: (1 2), (1 2 3 4)\n").unwrap();
        assert_eq!(load_group(&spec).unwrap().order(), 24);
    }

    #[test]
    fn empty_gens_is_trivial() {
        let spec = GroupSpecFile::parse("name: one\ndegree: 3\ngens:\n").unwrap();
        assert_eq!(load_group(&spec).unwrap().order(), 1);
    }

    #[test]
    fn point_out_of_range_is_reported_with_position() {
        let err = GroupSpecFile::parse("# header\nname: bad\ndegree: 4\ngens: (1 2), (1 5)\n").unwrap_err();
        match err {
            Error::Parse { line, column, .. } => {
                assert_eq!(line, 4);
                assert_eq!(column, 17);
            }
            e => panic!("unexpected {e}"),
        }
    }

    #[test]
    fn order_mismatch() {
        let spec = GroupSpecFile::parse("name: S3\ndegree: 3\ngens: (1 2), (1 2 3)\norder: 5\n").unwrap();
        assert!(matches!(load_group(&spec), Err(Error::OrderMismatch { expected: 5, actual: 6 })));
    }

    #[test]
    fn comments_and_whitespace() {
        let spec = GroupSpecFile::parse("name:  V4 # Klein\n\n degree :4\ngens: ( 1 2 )( 3 4 ) , (1 3)(2 4)\n").unwrap();
        assert_eq!(spec.gens.len(), 2);
        assert_eq!(load_group(&spec).unwrap().order(), 4);
    }

    #[test]
    fn corpus_shape() {
        let c = builtin_corpus();
        assert!(c.len() >= 50);
        assert!(c.iter().any(|(_, g)| g.order() == 324));
        let psl = c.iter().find(|(n, _)| n == "PSL(2,7)").unwrap();
        assert_eq!(psl.1.order(), 168);
        let names: BTreeSet<_> = c.iter().map(|(n, _)| n).collect();
        assert_eq!(names.len(), c.len());
    }
}
