use std::fmt;

use super::TlError;

/// Noncrossing perfect matching on 2n boundary points: bottom points
/// 0..n-1 left to right, then top points n..2n-1 left to right.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PlanarDiagram {
    n: usize,
    partner: Vec<usize>,
}

/// Position of a point when walking the rectangle boundary counterclockwise:
/// along the bottom, then back along the top.
fn circular_position(n: usize, point: usize) -> usize {
    if point < n {
        point
    } else {
        3 * n - 1 - point
    }
}

impl PlanarDiagram {
    /// Checks that `pairs` matches every point exactly once without
    /// crossings.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self, TlError> {
        let mut partner = vec![usize::MAX; 2 * n];
        for &(a, b) in pairs {
            if a >= 2 * n || b >= 2 * n || a == b {
                return Err(TlError::InvalidPairing(format!("bad pair ({a},{b}) for {n} strands")));
            }
            if partner[a] != usize::MAX || partner[b] != usize::MAX {
                return Err(TlError::InvalidPairing(format!("point matched twice in ({a},{b})")));
            }
            partner[a] = b;
            partner[b] = a;
        }
        if let Some(p) = partner.iter().position(|&q| q == usize::MAX) {
            return Err(TlError::InvalidPairing(format!("point {p} unmatched")));
        }
        let d = Self { n, partner };
        if !d.is_planar() {
            return Err(TlError::InvalidPairing("pairs cross".into()));
        }
        Ok(d)
    }

    pub fn identity(n: usize) -> Self {
        let partner = (0..2 * n).map(|p| if p < n { p + n } else { p - n }).collect();
        Self { n, partner }
    }

    /// Cup-cap at strands i-1, i (1-based i in 1..n-1); all other strands
    /// pass straight through.
    pub fn cup_cap(n: usize, i: usize) -> Result<Self, TlError> {
        if i == 0 || i >= n {
            return Err(TlError::IndexOutOfRange { i, n });
        }
        let mut d = Self::identity(n);
        let (a, b) = (i - 1, i);
        d.partner[a] = b;
        d.partner[b] = a;
        d.partner[n + a] = n + b;
        d.partner[n + b] = n + a;
        Ok(d)
    }

    /// All Catalan(n) diagrams on n strands, sorted.
    pub fn enumerate(n: usize) -> Vec<Self> {
        fn matchings(slots: &[usize]) -> Vec<Vec<(usize, usize)>> {
            let Some((&first, tail)) = slots.split_first() else {
                return vec![Vec::new()];
            };
            let mut out = Vec::new();
            for k in (0..tail.len()).step_by(2) {
                let outside = matchings(&tail[k + 1..]);
                for inner in matchings(&tail[..k]) {
                    for outer in &outside {
                        let mut m = Vec::with_capacity(slots.len() / 2);
                        m.push((first, tail[k]));
                        m.extend_from_slice(&inner);
                        m.extend_from_slice(outer);
                        out.push(m);
                    }
                }
            }
            out
        }
        let mut point_at = vec![0; 2 * n];
        for p in 0..2 * n {
            point_at[circular_position(n, p)] = p;
        }
        let positions: Vec<usize> = (0..2 * n).collect();
        let mut out: Vec<Self> = matchings(&positions)
            .into_iter()
            .map(|m| {
                let mut partner = vec![0; 2 * n];
                for (x, y) in m {
                    partner[point_at[x]] = point_at[y];
                    partner[point_at[y]] = point_at[x];
                }
                Self { n, partner }
            })
            .collect();
        out.sort();
        out
    }

    pub fn strands(&self) -> usize {
        self.n
    }

    pub fn partner(&self, point: usize) -> usize {
        self.partner[point]
    }

    /// Pairs `(a, b)` with `a < b`, sorted.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        (0..2 * self.n).filter(|&a| a < self.partner[a]).map(|a| (a, self.partner[a])).collect()
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.n)
    }

    pub fn is_planar(&self) -> bool {
        let chords: Vec<(usize, usize)> = self
            .pairs()
            .into_iter()
            .map(|(a, b)| {
                let (x, y) = (circular_position(self.n, a), circular_position(self.n, b));
                (x.min(y), x.max(y))
            })
            .collect();
        chords.iter().enumerate().all(|(i, &(a, b))| {
            chords[i + 1..].iter().all(|&(c, d)| !((a < c && c < b && b < d) || (c < a && a < d && d < b)))
        })
    }

    /// Number of strands joining bottom to top.
    pub fn through_strands(&self) -> usize {
        (0..self.n).filter(|&p| self.partner[p] >= self.n).count()
    }

    /// `self` stacked on top of `below`: returns the composite and the
    /// number of closed loops formed in the middle.
    pub fn compose(&self, below: &Self) -> Result<(Self, usize), TlError> {
        let n = self.n;
        if below.n != n {
            return Err(TlError::StrandMismatch { left: n, right: below.n });
        }
        let mut partner = vec![usize::MAX; 2 * n];
        let mut seen_middle = vec![false; n];
        // enter `below` at point p, follow until leaving at the outer boundary
        let from_below = |mut p: usize, seen: &mut [bool]| -> usize {
            loop {
                let q = below.partner[p];
                if q < n {
                    return q;
                }
                let m = q - n;
                seen[m] = true;
                let r = self.partner[m];
                if r >= n {
                    return r;
                }
                seen[r] = true;
                p = n + r;
            }
        };
        let from_above = |mut p: usize, seen: &mut [bool]| -> usize {
            loop {
                let q = self.partner[p];
                if q >= n {
                    return q;
                }
                seen[q] = true;
                let r = below.partner[n + q];
                if r < n {
                    return r;
                }
                seen[r - n] = true;
                p = r - n;
            }
        };
        for p in 0..n {
            if partner[p] == usize::MAX {
                let q = from_below(p, &mut seen_middle);
                partner[p] = q;
                partner[q] = p;
            }
        }
        for p in n..2 * n {
            if partner[p] == usize::MAX {
                let q = from_above(p, &mut seen_middle);
                partner[p] = q;
                partner[q] = p;
            }
        }
        let mut loops = 0;
        for start in 0..n {
            if seen_middle[start] {
                continue;
            }
            loops += 1;
            let mut m = start;
            loop {
                seen_middle[m] = true;
                let up = self.partner[m];
                seen_middle[up] = true;
                m = below.partner[n + up] - n;
                if m == start {
                    break;
                }
            }
        }
        Ok((Self { n, partner }, loops))
    }

    /// Loops in the closure that joins top j to bottom j.
    pub fn closure_loops(&self) -> usize {
        let n = self.n;
        let mut seen = vec![false; 2 * n];
        let mut loops = 0;
        for start in 0..2 * n {
            if seen[start] {
                continue;
            }
            loops += 1;
            let mut p = start;
            loop {
                seen[p] = true;
                let q = self.partner[p];
                seen[q] = true;
                p = if q < n { q + n } else { q - n };
                if p == start {
                    break;
                }
            }
        }
        loops
    }

    /// The diagram on n+1 strands with a through-strand added on the right.
    pub fn include(&self) -> Self {
        let n = self.n;
        let shift = |p: usize| if p < n { p } else { p + 1 };
        let mut partner = vec![0; 2 * n + 2];
        for p in 0..2 * n {
            partner[shift(p)] = shift(self.partner[p]);
        }
        partner[n] = 2 * n + 1;
        partner[2 * n + 1] = n;
        Self { n: n + 1, partner }
    }
}

impl fmt::Display for PlanarDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "1");
        }
        write!(f, "D[")?;
        for (k, (a, b)) in self.pairs().into_iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{a}-{b}")?;
        }
        write!(f, "]")
    }
}
