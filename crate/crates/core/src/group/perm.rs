use std::fmt;

use crate::error::{Error, Result};

/// A permutation of `{0, …, degree-1}`, stored as its image vector.
///
/// Products compose right to left: `(a * b)(p) = a(b(p))`, so the natural
/// action on points is a left action.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<u32>);

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation((0..degree as u32).collect())
    }

    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            let i = i as usize;
            if i >= images.len() || seen[i] {
                return Err(Error::InvalidInput(format!("{:?} is not a permutation", images)));
            }
            seen[i] = true;
        }
        Ok(Permutation(images))
    }

    /// Parses 1-based cycle notation such as `(1 2 3)(4 5)`; `()` is the identity.
    pub fn parse_cycles(s: &str, degree: usize) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut used = vec![false; degree];
        let mut rest = s.trim();
        while !rest.is_empty() {
            let Some(body) = rest.strip_prefix('(') else {
                return Err(Error::InvalidInput(format!("expected '(' in cycle notation {:?}", s)));
            };
            let Some(close) = body.find(')') else {
                return Err(Error::InvalidInput(format!("unterminated cycle in {:?}", s)));
            };
            let points = body[..close]
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| {
                    let p: usize = t
                        .parse()
                        .map_err(|_| Error::InvalidInput(format!("bad point {:?} in {:?}", t, s)))?;
                    if p == 0 || p > degree {
                        return Err(Error::InvalidInput(format!(
                            "point {} out of range 1..={} in {:?}",
                            p, degree, s
                        )));
                    }
                    Ok(p - 1)
                })
                .collect::<Result<Vec<_>>>()?;
            for (i, &p) in points.iter().enumerate() {
                if used[p] {
                    return Err(Error::InvalidInput(format!(
                        "point {} repeated in {:?}",
                        p + 1,
                        s
                    )));
                }
                used[p] = true;
                images[p] = points[(i + 1) % points.len()] as u32;
            }
            rest = body[close + 1..].trim_start();
        }
        Ok(Permutation(images))
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.0
    }

    pub fn apply(&self, p: usize) -> usize {
        self.0[p] as usize
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation(other.0.iter().map(|&p| self.0[p as usize]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (i, &p) in self.0.iter().enumerate() {
            inv[p as usize] = i as u32;
        }
        Permutation(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &p)| i as u32 == p)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = vec![false; self.0.len()];
        let mut wrote = false;
        for start in 0..self.0.len() {
            if seen[start] || self.0[start] as usize == start {
                continue;
            }
            write!(f, "(")?;
            let mut p = start;
            let mut first = true;
            while !seen[p] {
                seen[p] = true;
                if !first {
                    write!(f, " ")?;
                }
                first = false;
                write!(f, "{}", p + 1)?;
                p = self.0[p] as usize;
            }
            write!(f, ")")?;
            wrote = true;
        }
        if !wrote {
            write!(f, "()")?;
        }
        Ok(())
    }
}
