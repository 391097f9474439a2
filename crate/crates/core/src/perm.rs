//! Permutations of `{1..n}`, stored 0-based.
//!
//! Products are read left to right: `p.compose(&q)` maps `x` to `q(p(x))`.

use std::fmt;

use crate::arith::lcm;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<u32>,
}

impl Perm {
    pub fn identity(degree: usize) -> Perm {
        Perm {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from 0-based images, checking bijectivity.
    pub fn from_images(images: Vec<u32>) -> Result<Perm> {
        if images.is_empty() {
            return Err(Error::InvalidPerm("degree must be at least 1".into()));
        }
        let mut seen = vec![false; images.len()];
        for &x in &images {
            let x = x as usize;
            if x >= images.len() || seen[x] {
                return Err(Error::InvalidPerm(format!("{images:?} is not a bijection")));
            }
            seen[x] = true;
        }
        Ok(Perm { images })
    }

    /// Builds a permutation from 1-based images.
    pub fn from_one_based(images: &[usize]) -> Result<Perm> {
        let imgs = images
            .iter()
            .map(|&x| {
                x.checked_sub(1)
                    .map(|v| v as u32)
                    .ok_or_else(|| Error::InvalidPerm("point 0 in 1-based image list".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Perm::from_images(imgs)
    }

    pub(crate) fn from_images_unchecked(images: Vec<u32>) -> Perm {
        debug_assert!(Perm::from_images(images.clone()).is_ok());
        Perm { images }
    }

    /// Builds a permutation from disjoint-or-not cycles of 1-based points,
    /// multiplied left to right.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Perm> {
        let mut acc = Perm::identity(degree.max(1));
        for cycle in cycles {
            let mut imgs: Vec<u32> = (0..degree.max(1) as u32).collect();
            let mut seen = vec![false; degree.max(1)];
            for (i, &pt) in cycle.iter().enumerate() {
                if pt == 0 || pt > degree {
                    return Err(Error::InvalidPerm(format!(
                        "point {pt} outside 1..={degree}"
                    )));
                }
                if seen[pt - 1] {
                    return Err(Error::InvalidPerm(format!("point {pt} repeated in cycle")));
                }
                seen[pt - 1] = true;
                let next = cycle[(i + 1) % cycle.len()];
                imgs[pt - 1] = (next - 1) as u32;
            }
            acc = acc.compose(&Perm { images: imgs })?;
        }
        Ok(acc)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// 0-based images.
    pub fn images(&self) -> &[u32] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// `self` then `other`.
    pub fn compose(&self, other: &Perm) -> Result<Perm> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(self.then(other))
    }

    pub(crate) fn then(&self, other: &Perm) -> Perm {
        Perm {
            images: self
                .images
                .iter()
                .map(|&x| other.images[x as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u32; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Perm { images: inv }
    }

    /// Cycles of length > 1, as 0-based points, each starting at its least point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    /// Least k >= 1 with `self^k` the identity.
    pub fn order(&self) -> usize {
        self.cycles().iter().fold(1, |acc, c| lcm(acc, c.len()))
    }

    /// Same permutation acting on `offset + 1 ..= offset + degree` inside a
    /// larger point set.
    pub fn shifted(&self, offset: usize, total_degree: usize) -> Perm {
        let mut images: Vec<u32> = (0..total_degree as u32).collect();
        for (i, &x) in self.images.iter().enumerate() {
            images[offset + i] = offset as u32 + x;
        }
        Perm { images }
    }
}

/// Cycle notation with 1-based points, `()` for the identity.
impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            write!(f, "(")?;
            for (i, x) in c.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", x + 1)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{}", self)
    }
}

/// Parses a product of cycles such as `(1 2)(3 4 5)` or `()`.
///
/// Errors carry the 1-based column within `text`.
pub fn parse_cycles(text: &str, degree: usize) -> std::result::Result<Perm, (usize, String)> {
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    let mut current: Option<Vec<usize>> = None;
    while i < chars.len() {
        let c = chars[i];
        match c {
            '(' => {
                if current.is_some() {
                    return Err((i + 1, "nested '('".into()));
                }
                current = Some(Vec::new());
                i += 1;
            }
            ')' => {
                let cyc = current.take().ok_or((i + 1, "unmatched ')'".to_string()))?;
                cycles.push(cyc);
                i += 1;
            }
            c if c.is_whitespace() || c == ',' => i += 1,
            c if c.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                let pt: usize = s.parse().map_err(|_| (start + 1, format!("bad number `{s}`")))?;
                let cyc = current
                    .as_mut()
                    .ok_or((start + 1, "point outside parentheses".to_string()))?;
                if pt == 0 || pt > degree {
                    return Err((start + 1, format!("point {pt} outside 1..={degree}")));
                }
                if cyc.contains(&pt) {
                    return Err((start + 1, format!("point {pt} repeated in cycle")));
                }
                cyc.push(pt);
            }
            other => return Err((i + 1, format!("unexpected character `{other}`"))),
        }
    }
    if current.is_some() {
        return Err((chars.len() + 1, "unterminated cycle".into()));
    }
    let refs: Vec<&[usize]> = cycles.iter().map(|c| c.as_slice()).collect();
    Perm::from_cycles(degree, &refs).map_err(|e| (1, e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(degree: usize, cycles: &[&[usize]]) -> Perm {
        Perm::from_cycles(degree, cycles).unwrap()
    }

    #[test]
    fn transposition_squared_is_identity() {
        let t = cyc(3, &[&[1, 2]]);
        assert!(t.compose(&t).unwrap().is_identity());
    }

    #[test]
    fn product_of_transpositions_left_to_right() {
        // (1 2) then (2 3): 1 -> 2 -> 3, 3 -> 3 -> 2, 2 -> 1 -> 1
        let p = cyc(3, &[&[1, 2]]).compose(&cyc(3, &[&[2, 3]])).unwrap();
        assert_eq!(p, cyc(3, &[&[1, 3, 2]]));
        assert_eq!(p.apply(0), 2);
        assert_eq!(p.apply(2), 1);
        assert_eq!(p.apply(1), 0);
    }

    #[test]
    fn identity_law_and_degree_mismatch() {
        let p = cyc(4, &[&[1, 3, 4]]);
        assert_eq!(p.compose(&Perm::identity(4)).unwrap(), p);
        assert_eq!(
            p.compose(&Perm::identity(3)),
            Err(Error::DegreeMismatch(4, 3))
        );
    }

    #[test]
    fn element_orders() {
        assert_eq!(Perm::identity(5).order(), 1);
        assert_eq!(cyc(4, &[&[1, 2], &[3, 4]]).order(), 2);
        assert_eq!(cyc(5, &[&[1, 2, 3], &[4, 5]]).order(), 6);
    }

    #[test]
    fn parse_and_display() {
        let p = parse_cycles("(1 2)(3 4 5)", 5).unwrap();
        assert_eq!(p.to_string(), "(1 2)(3 4 5)");
        assert_eq!(parse_cycles("()", 3).unwrap(), Perm::identity(3));
        assert!(parse_cycles("(1 5)", 4).is_err());
        let err = parse_cycles("(1 2) x", 4).unwrap_err();
        assert_eq!(err.0, 7);
    }

    #[test]
    fn rejects_non_bijection() {
        assert!(Perm::from_images(vec![0, 0, 1]).is_err());
        assert!(Perm::from_one_based(&[2, 1, 3]).is_ok());
    }
}
