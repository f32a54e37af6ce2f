//! Integer partitions: conjugation, rectangle complements, containment and
//! enumeration inside a rectangle.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers. Trailing zeros are
/// trimmed on construction so equality is structural.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotAPartition(parts.iter().map(|&p| p as u64).collect()));
        }
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The rectangle `(width^height)`: `height` copies of `width`.
    pub fn rectangle(width: usize, height: usize) -> Self {
        if width == 0 {
            return Self::empty();
        }
        Partition {
            parts: vec![width; height],
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of cells, `|lambda|`.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Zero-padded part access.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Transpose of the Young diagram.
    pub fn conjugate(&self) -> Self {
        let width = self.part(0);
        let parts = (1..=width)
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    /// `(r^l) \ self`: parts `r - self[l-1-i]`, the complement of the diagram
    /// inside the `r x l` box rotated by 180 degrees.
    pub fn complement(&self, r: usize, l: usize) -> Result<Self> {
        if !Partition::rectangle(r, l).contains(self) {
            return Err(Error::InvalidRectangle {
                partition: self.to_string(),
                width: r,
                height: l,
            });
        }
        Partition::new((0..l).map(|i| r - self.part(l - 1 - i)).collect())
    }

    /// True iff `inner[i] <= self[i]` for all `i`.
    pub fn contains(&self, inner: &Partition) -> bool {
        inner.len() <= self.len() && inner.parts.iter().zip(&self.parts).all(|(i, o)| i <= o)
    }

    /// Every partition inside `(r^l)`, once each, in descending lexicographic
    /// order of the zero-padded part sequences.
    pub fn enumerate_in_rectangle(r: usize, l: usize) -> Vec<Partition> {
        fn go(r: usize, l: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if prefix.len() == l {
                out.push(Partition::new(prefix.clone()).expect("decreasing by construction"));
                return;
            }
            let cap = prefix.last().copied().unwrap_or(r);
            for p in (0..=cap).rev() {
                prefix.push(p);
                go(r, l, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        go(r, l, &mut Vec::with_capacity(l), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `[3,1]`, `[]`, and the bracketless `3,1`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let inner = s
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .unwrap_or(s)
            .trim();
        if inner.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("invalid partition {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}
