//! Origamis as pairs of permutations of the squares.
//!
//! Squares are labelled `1..=n`. `right` sends a square to its right
//! neighbour and `up` to the one above. Products are read left to right:
//! `a.then(b)` applies `a` first. With that convention the local monodromy
//! around the branch point is `right^-1 up^-1 right up`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A bijection of `{1, ..., n}`, stored zero-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n).collect() }
    }

    /// From one-based images: `images[i - 1]` is the image of `i`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in images {
            if v == 0 || v > n || std::mem::replace(&mut seen[v - 1], true) {
                return Err(Error::InvalidPermutation(format!("{images:?} is not a bijection of 1..={n}")));
            }
        }
        Ok(Permutation { images: images.iter().map(|v| v - 1).collect() })
    }

    /// From disjoint cycles of one-based labels.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut used = BTreeSet::new();
        for cycle in cycles {
            for &v in cycle {
                if v == 0 || v > n {
                    return Err(Error::InvalidPermutation(format!("label {v} outside 1..={n}")));
                }
                if !used.insert(v) {
                    return Err(Error::InvalidPermutation(format!("label {v} repeated")));
                }
            }
            for (i, &v) in cycle.iter().enumerate() {
                images[v - 1] = cycle[(i + 1) % cycle.len()] - 1;
            }
        }
        Ok(Permutation { images })
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    /// Image of the one-based label `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1] + 1
    }

    /// One-based images.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|v| v + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.len()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v] = i;
        }
        Permutation { images: inv }
    }

    /// Apply `self`, then `other`.
    pub fn then(&self, other: &Self) -> Self {
        assert_eq!(self.len(), other.len(), "permutations of different degrees");
        Permutation { images: self.images.iter().map(|&v| other.images[v]).collect() }
    }

    /// `sigma^-1 self sigma`, i.e. `self` after relabelling by `sigma`.
    pub fn conjugate_by(&self, sigma: &Self) -> Self {
        sigma.inverse().then(self).then(sigma)
    }

    /// Disjoint cycles (one-based), each starting at its smallest label,
    /// ordered by that label; fixed points included.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i + 1);
                i = self.images[i];
            }
            out.push(cycle);
        }
        out
    }

    /// Cycle lengths, sorted descending, fixed points included.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut t: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        t.sort_unstable_by(|a, b| b.cmp(a));
        t
    }
}

/// Disjoint-cycle notation without fixed points, e.g. `(1 3 2)`; `()` for the identity.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let nontrivial: Vec<_> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if nontrivial.is_empty() {
            return write!(f, "()");
        }
        for c in nontrivial {
            let body: Vec<String> = c.iter().map(usize::to_string).collect();
            write!(f, "({})", body.join(" "))?;
        }
        Ok(())
    }
}

fn parse_cycles(src: &str, n: usize) -> Result<Permutation> {
    let bad = |m: String| Error::InvalidPermutation(m);
    let mut cycles = Vec::new();
    let mut rest = src.trim();
    while !rest.is_empty() {
        let Some(body) = rest.strip_prefix('(') else {
            return Err(bad(format!("expected '(' in {src:?}")));
        };
        let Some(close) = body.find(')') else {
            return Err(bad(format!("unclosed cycle in {src:?}")));
        };
        let labels = body[..close]
            .split_whitespace()
            .map(|w| w.parse::<usize>().map_err(|_| bad(format!("bad label {w:?}"))))
            .collect::<Result<Vec<_>>>()?;
        if !labels.is_empty() {
            cycles.push(labels);
        }
        rest = body[close + 1..].trim_start();
    }
    Permutation::from_cycles(n, &cycles)
}

/// `n` unit squares glued by `right` and `up`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrigamiDiagram {
    right: Permutation,
    up: Permutation,
}

impl OrigamiDiagram {
    /// Does not require connectivity; see [`OrigamiDiagram::is_connected`].
    pub fn new(right: Permutation, up: Permutation) -> Result<Self> {
        if right.len() != up.len() {
            return Err(Error::InvalidPermutation(format!(
                "right acts on {} squares but up on {}",
                right.len(),
                up.len()
            )));
        }
        if right.is_empty() {
            return Err(Error::InvalidPermutation("an origami needs at least one square".into()));
        }
        Ok(OrigamiDiagram { right, up })
    }

    pub fn n(&self) -> usize {
        self.right.len()
    }

    pub fn right(&self) -> &Permutation {
        &self.right
    }

    pub fn up(&self) -> &Permutation {
        &self.up
    }

    /// The monodromy `right^-1 up^-1 right up` around the branch point.
    pub fn commutator(&self) -> Permutation {
        self.right
            .inverse()
            .then(&self.up.inverse())
            .then(&self.right)
            .then(&self.up)
    }

    pub fn monodromy_cycle_type(&self) -> Vec<usize> {
        self.commutator().cycle_type()
    }

    /// Number of vertex classes after gluing: one per cycle of the commutator.
    pub fn vertex_count(&self) -> usize {
        self.commutator().cycles().len()
    }

    /// Whether `<right, up>` acts transitively on the squares.
    pub fn is_connected(&self) -> bool {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut stack = vec![1usize];
        seen[0] = true;
        while let Some(i) = stack.pop() {
            for j in [self.right.apply(i), self.up.apply(i)] {
                if !seen[j - 1] {
                    seen[j - 1] = true;
                    stack.push(j);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Euler characteristic `V - 2n + n = 2 - 2g`.
    pub fn genus(&self) -> Result<usize> {
        if !self.is_connected() {
            return Err(Error::NotConnected);
        }
        let twice = 2 + self.n() as i64 - self.vertex_count() as i64;
        assert!(twice >= 0 && twice % 2 == 0, "Euler characteristic must be even");
        Ok((twice / 2) as usize)
    }

    /// Relabels the squares by `sigma`.
    pub fn relabel(&self, sigma: &Permutation) -> Self {
        OrigamiDiagram {
            right: self.right.conjugate_by(sigma),
            up: self.up.conjugate_by(sigma),
        }
    }
}

/// The staircase with `2g - 1` squares: square 1 at the top left, then
/// alternately down and right, so `up = (1 2)(3 4)...` and
/// `right = (2 3)(4 5)...`.
pub fn staircase(g: i64) -> Result<OrigamiDiagram> {
    if g < 1 {
        return Err(Error::InvalidGenus(g));
    }
    let n = 2 * g as usize - 1;
    let right: Vec<Vec<usize>> = (2..n).step_by(2).map(|i| vec![i, i + 1]).collect();
    let up: Vec<Vec<usize>> = (1..n).step_by(2).map(|i| vec![i, i + 1]).collect();
    OrigamiDiagram::new(Permutation::from_cycles(n, &right)?, Permutation::from_cycles(n, &up)?)
}

/// `n; right=cycles; up=cycles`
impl fmt::Display for OrigamiDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}; right={}; up={}", self.n(), self.right, self.up)
    }
}

impl FromStr for OrigamiDiagram {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |m: &str| Error::InvalidPermutation(format!("{m} in {s:?}"));
        let parts: Vec<&str> = s.split(';').map(str::trim).collect();
        let [n, right, up] = parts[..] else {
            return Err(bad("expected `n; right=...; up=...`"));
        };
        let n: usize = n.parse().map_err(|_| bad("bad square count"))?;
        let right = right.strip_prefix("right=").ok_or_else(|| bad("missing `right=`"))?;
        let up = up.strip_prefix("up=").ok_or_else(|| bad("missing `up=`"))?;
        OrigamiDiagram::new(parse_cycles(right, n)?, parse_cycles(up, n)?)
    }
}
