//! Exhaustive generation of the finite lattices `𝓔ₙ` and a few combinatorial
//! measurements on them.

use crate::antichain::Antichain;
use crate::error::{LatticeError, Result};
use crate::interval::Interval;
use crate::ops::leq;
use crate::rank::rank;

/// Largest `n` accepted by [`level_profile`] (`|𝓔₁₁| = 208013`).
pub const LEVEL_PROFILE_MAX_N: usize = 11;
/// Largest `n` accepted by [`width`] (`|𝓔₈| = 4863`).
pub const WIDTH_MAX_N: usize = 8;

/// One element produced by [`Enumerator::next_borrowed`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Emitted<'a> {
    Proper(&'a [Interval]),
    Top,
}

#[derive(Debug, Clone)]
struct Frame {
    // Lower bound for j in this frame; the recursion's `r` parameter.
    r: usize,
    i: usize,
    j: usize,
}

/// Constant-amortized-time enumeration of every element of `𝓔ₙ`.
///
/// Runs the recursive procedure `enumerate(A, ℓ, r)` (emit `A`, then for every
/// `ℓ ≤ i < n` and `max(i, r) ≤ j < n` recurse on `A ∪ {[i..j]}, i+1, j+1`)
/// from `enumerate(∅, 0, 0)` with an explicit stack, and finally emits `{∅}`.
/// Elements come out in exactly that recursion order.
#[derive(Debug, Clone)]
pub struct Enumerator {
    n: usize,
    stack: Vec<Frame>,
    current: Vec<Interval>,
    pending_root: bool,
    top_done: bool,
}

impl Enumerator {
    pub fn new(n: usize) -> Self {
        Enumerator {
            n,
            stack: vec![Frame { r: 0, i: 0, j: 0 }],
            current: Vec::new(),
            pending_root: true,
            top_done: false,
        }
    }

    /// Advances without allocating; the slice borrows an internal buffer.
    pub fn next_borrowed(&mut self) -> Option<Emitted<'_>> {
        if self.pending_root {
            self.pending_root = false;
            return Some(Emitted::Proper(&self.current));
        }
        let n = self.n;
        loop {
            let Some(frame) = self.stack.last_mut() else {
                if self.top_done {
                    return None;
                }
                self.top_done = true;
                return Some(Emitted::Top);
            };
            if frame.i >= n {
                self.stack.pop();
                self.current.pop();
                continue;
            }
            if frame.j >= n {
                frame.i += 1;
                frame.j = frame.i.max(frame.r);
                continue;
            }
            let (i, j) = (frame.i, frame.j);
            frame.j += 1;
            self.current.push(Interval::new_unchecked(i as i64, j as i64));
            self.stack.push(Frame { r: j + 1, i: i + 1, j: j + 1 });
            return Some(Emitted::Proper(&self.current));
        }
    }
}

impl Iterator for Enumerator {
    type Item = Antichain;

    fn next(&mut self) -> Option<Antichain> {
        self.next_borrowed().map(|e| match e {
            Emitted::Proper(v) => Antichain::from_normalized_unchecked(v.to_vec()),
            Emitted::Top => Antichain::top(),
        })
    }
}

/// Every element of `𝓔ₙ`, bottom first and top last.
pub fn enumerate_all(n: usize) -> Enumerator {
    Enumerator::new(n)
}

/// `|𝓔ₙ| = C(n+1) + 1`, with `C(k)` the k-th Catalan number.
pub fn cardinality(n: u64) -> Result<u64> {
    let k = n.checked_add(1).ok_or(LatticeError::Overflow("cardinality"))?;
    // C(m+1) = C(m) * 2(2m+1) / (m+2); the division is exact.
    let mut c: u128 = 1;
    for m in 0..k {
        let m = u128::from(m);
        c = c
            .checked_mul(2 * (2 * m + 1))
            .ok_or(LatticeError::Overflow("cardinality"))?
            / (m + 2);
    }
    u64::try_from(c)
        .ok()
        .and_then(|c| c.checked_add(1))
        .ok_or(LatticeError::Overflow("cardinality"))
}

/// Number of elements of each rank in `𝓔ₙ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelProfile {
    pub n: usize,
    pub counts_by_rank: Vec<u64>,
}

impl LevelProfile {
    pub fn max_level(&self) -> u64 {
        self.counts_by_rank.iter().copied().max().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.counts_by_rank.iter().sum()
    }
}

pub fn level_profile(n: usize) -> Result<LevelProfile> {
    if n > LEVEL_PROFILE_MAX_N {
        return Err(LatticeError::TooLarge { what: "level_profile", n, limit: LEVEL_PROFILE_MAX_N });
    }
    if n == 0 {
        return Ok(LevelProfile { n, counts_by_rank: vec![1, 1] });
    }
    let size = n as i64;
    let mut counts = vec![0u64; 2 + n * (n + 1) / 2];
    let mut it = Enumerator::new(n);
    while let Some(e) = it.next_borrowed() {
        let r = match e {
            Emitted::Top => rank(&Antichain::top(), size)?,
            Emitted::Proper(v) => proper_rank(v, size),
        };
        counts[r as usize] += 1;
    }
    Ok(LevelProfile { n, counts_by_rank: counts })
}

// Same telescoping sum as `rank`, without building an Antichain per element.
fn proper_rank(v: &[Interval], n: i64) -> u64 {
    let mut prev = -1;
    let mut total = 0;
    for iv in v {
        total += ((iv.left() - prev) * (n - iv.right())) as u64;
        prev = iv.left();
    }
    total
}

/// Size of a maximum antichain of the poset `𝓔ₙ` itself.
///
/// Computed exactly by Dilworth's theorem: the width equals the number of
/// elements minus a maximum matching in the bipartite graph of strict
/// comparabilities (the order is already transitive).
pub fn width(n: usize) -> Result<usize> {
    if n > WIDTH_MAX_N {
        return Err(LatticeError::TooLarge { what: "width", n, limit: WIDTH_MAX_N });
    }
    let elems: Vec<Antichain> = enumerate_all(n).collect();
    let adj: Vec<Vec<usize>> = elems
        .iter()
        .enumerate()
        .map(|(i, x)| {
            elems
                .iter()
                .enumerate()
                .filter(|&(j, y)| i != j && leq(x, y))
                .map(|(j, _)| j)
                .collect()
        })
        .collect();
    Ok(elems.len() - max_bipartite_matching(&adj, elems.len()))
}

/// Hopcroft–Karp maximum matching; `adj[u]` lists right vertices adjacent to left vertex `u`.
fn max_bipartite_matching(adj: &[Vec<usize>], right_len: usize) -> usize {
    const FREE: usize = usize::MAX;
    let left_len = adj.len();
    let mut match_left = vec![FREE; left_len];
    let mut match_right = vec![FREE; right_len];
    let mut dist = vec![0u32; left_len];
    let mut matched = 0;

    loop {
        // BFS layering from free left vertices.
        let mut queue: Vec<usize> = (0..left_len).filter(|&u| match_left[u] == FREE).collect();
        for u in 0..left_len {
            dist[u] = if match_left[u] == FREE { 0 } else { u32::MAX };
        }
        let mut found = false;
        let mut head = 0;
        while head < queue.len() {
            let u = queue[head];
            head += 1;
            for &v in &adj[u] {
                let w = match_right[v];
                if w == FREE {
                    found = true;
                } else if dist[w] == u32::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push(w);
                }
            }
        }
        if !found {
            return matched;
        }
        // DFS along the layers, iteratively, with per-vertex edge cursors.
        let mut cursor = vec![0usize; left_len];
        for root in 0..left_len {
            if match_left[root] != FREE {
                continue;
            }
            let mut path = vec![root];
            while let Some(&u) = path.last() {
                if cursor[u] == adj[u].len() {
                    dist[u] = u32::MAX;
                    path.pop();
                    continue;
                }
                let v = adj[u][cursor[u]];
                cursor[u] += 1;
                let w = match_right[v];
                if w == FREE {
                    // Augment along the path: each left vertex takes the edge it last advanced over.
                    for &p in path.iter().rev() {
                        let v = adj[p][cursor[p] - 1];
                        match_left[p] = v;
                        match_right[v] = p;
                    }
                    matched += 1;
                    break;
                } else if dist[w] == dist[u] + 1 {
                    path.push(w);
                }
            }
        }
    }
}
