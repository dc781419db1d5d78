//! Partitions, Gelfand-Tsetlin patterns, and partition paths.
//!
//! These three label families index the Schur basis: a partition λ names a
//! sector, a Gelfand-Tsetlin pattern names a basis vector of the unitary-group
//! irrep space Q_λ, and a partition path (equivalently a standard Young
//! tableau) names a basis vector of the symmetric-group irrep space P_λ.
//!
//! All enumeration orders are fixed once here and relied on everywhere else:
//!
//! - partitions: decreasing lexicographic, so (n) comes first;
//! - GT patterns: decreasing lexicographic on the flattened rows (top row
//!   first), so the highest-weight pattern comes first;
//! - paths: lexicographic on the chain, comparing partitions in the order
//!   above, so the fully symmetric path comes first.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// A partition of n: weakly decreasing positive parts, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition, rejecting zero parts or increasing sequences.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        for i in 0..parts.len() {
            if parts[i] == 0 {
                return Err(Error::invalid("partition parts must be positive"));
            }
            if i + 1 < parts.len() && parts[i] < parts[i + 1] {
                return Err(Error::invalid("partition parts must be weakly decreasing"));
            }
        }
        Ok(Partition { parts })
    }

    /// Single-row partition (n).
    pub fn row(n: u32) -> Self {
        Partition { parts: vec![n] }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of boxes, Σ parts.
    pub fn size(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part at `row`, or 0 past the last row.
    pub fn part(&self, row: usize) -> u32 {
        self.parts.get(row).copied().unwrap_or(0)
    }

    /// Parts padded with zeros to length `d`.
    pub fn padded(&self, d: usize) -> Vec<u32> {
        let mut v = self.parts.clone();
        v.resize(d.max(v.len()), 0);
        v
    }

    /// Conjugate (transposed) partition.
    pub fn conjugate(&self) -> Partition {
        let cols = self.part(0) as usize;
        let parts = (0..cols)
            .map(|c| self.parts.iter().filter(|&&p| p as usize > c).count() as u32)
            .collect();
        Partition { parts }
    }

    /// Parses "3,1" into a partition.
    pub fn parse(s: &str) -> Result<Self> {
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::invalid(format!("bad partition part {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strs: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", strs.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical sector order: decreasing lexicographic, (n) first among
/// partitions of the same n.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.parts.cmp(&other.parts).reverse()
    }
}

/// All partitions of n with at most d parts, in canonical order.
pub fn enumerate_partitions(n: usize, d: usize) -> Result<Vec<Partition>> {
    if n == 0 || d == 0 {
        return Err(Error::invalid("n and d must be positive"));
    }
    let mut out = Vec::new();
    let mut current: Vec<u32> = Vec::new();
    fn rec(remaining: usize, max_part: usize, slots: usize, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: current.clone() });
            return;
        }
        if slots == 0 {
            return;
        }
        // Largest first part yields decreasing lexicographic order.
        let hi = remaining.min(max_part);
        let lo = remaining.div_ceil(slots);
        for p in (lo..=hi).rev() {
            current.push(p as u32);
            rec(remaining - p, p, slots - 1, current, out);
            current.pop();
        }
    }
    rec(n, n, d, &mut current, &mut out);
    Ok(out)
}

/// Partitions reachable from λ by adding one box, keeping at most d rows,
/// in canonical order.
pub fn add_box(lambda: &Partition, d: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    for row in 0..=lambda.len() {
        if row >= d {
            break;
        }
        let here = lambda.part(row);
        let above = if row == 0 { u32::MAX } else { lambda.part(row - 1) };
        if here < above {
            let mut parts = lambda.parts.clone();
            if row == parts.len() {
                parts.push(1);
            } else {
                parts[row] += 1;
            }
            out.push(Partition { parts });
        }
    }
    // Adding to an earlier row gives the lexicographically larger result, so
    // generation order is already canonical.
    out
}

/// dim Q_λ for U(d): the Weyl dimension formula,
/// Π_{i<j} (λ_i − λ_j + j − i)/(j − i), which equals the number of GT
/// patterns with top row λ padded to d.
pub fn dim_q(lambda: &Partition, d: usize) -> Result<u64> {
    if lambda.len() > d {
        return Err(Error::invalid(format!(
            "partition {lambda} has more than d={d} parts"
        )));
    }
    let padded = lambda.padded(d);
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..d {
        for j in (i + 1)..d {
            let diff = padded[i] as i64 - padded[j] as i64 + (j as i64 - i as i64);
            num *= diff as u128;
            den *= (j - i) as u128;
            let g = gcd(num, den);
            num /= g;
            den /= g;
        }
    }
    debug_assert_eq!(den, 1);
    Ok((num / den) as u64)
}

/// dim P_λ for S_n: hook length formula n! / Π hooks.
pub fn dim_p(lambda: &Partition) -> u64 {
    let n = lambda.size();
    let conj = lambda.conjugate();
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 1..=n {
        num *= i as u128;
    }
    for (i, &row_len) in lambda.parts().iter().enumerate() {
        for j in 0..row_len as usize {
            let arm = row_len as u128 - 1 - j as u128;
            let leg = conj.part(j) as u128 - 1 - i as u128;
            den *= arm + leg + 1;
            let g = gcd(num, den);
            num /= g;
            den /= g;
        }
    }
    debug_assert_eq!(den, 1);
    num as u64
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a.max(1)
}

/// A Gelfand-Tsetlin pattern: `rows[0]` is the top row of length d (λ padded
/// with zeros), each following row is one entry shorter, and adjacent rows
/// interleave: `rows[k][i] ≥ rows[k+1][i] ≥ rows[k][i+1]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GtPattern {
    rows: Vec<Vec<u32>>,
}

impl GtPattern {
    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Local dimension d (length of the top row).
    pub fn d(&self) -> usize {
        self.rows[0].len()
    }

    /// Row with `len` entries (len in 1..=d).
    pub fn row_of_len(&self, len: usize) -> &[u32] {
        &self.rows[self.d() - len]
    }

    /// Entry (level, idx) where level counts rows of that length.
    pub fn entry(&self, len: usize, idx: usize) -> u32 {
        self.row_of_len(len)[idx]
    }

    /// The weight (μ_1, …, μ_d): μ_k = Σ row_k − Σ row_{k−1}.
    pub fn weight(&self) -> Vec<i64> {
        let d = self.d();
        let mut w = Vec::with_capacity(d);
        let mut prev = 0i64;
        for len in 1..=d {
            let s: i64 = self.row_of_len(len).iter().map(|&x| x as i64).sum();
            w.push(s - prev);
            prev = s;
        }
        w
    }

    /// Replaces entry (len, idx) by value, without validity checks.
    pub(crate) fn with_entry(&self, len: usize, idx: usize, value: u32) -> GtPattern {
        let mut rows = self.rows.clone();
        let d = self.d();
        rows[d - len][idx] = value;
        GtPattern { rows }
    }

    /// Checks the interleaving constraints.
    pub fn is_valid(&self) -> bool {
        let d = self.d();
        for len in (1..d).rev() {
            let upper = self.row_of_len(len + 1);
            let lower = self.row_of_len(len);
            for i in 0..len {
                if !(upper[i] >= lower[i] && lower[i] >= upper[i + 1]) {
                    return false;
                }
            }
        }
        true
    }
}

impl fmt::Debug for GtPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GT{:?}", self.rows)
    }
}

/// All GT patterns with top row λ (padded to d), in decreasing lexicographic
/// order of the flattened rows. The first pattern is the highest-weight one.
pub fn enumerate_gt(lambda: &Partition, d: usize) -> Result<Vec<GtPattern>> {
    if lambda.len() > d {
        return Err(Error::invalid(format!(
            "partition {lambda} has more than d={d} parts"
        )));
    }
    let top = lambda.padded(d);
    let mut out = Vec::new();
    let mut rows: Vec<Vec<u32>> = vec![top];
    fn rec(rows: &mut Vec<Vec<u32>>, out: &mut Vec<GtPattern>) {
        let prev = rows.last().unwrap().clone();
        if prev.len() == 1 {
            out.push(GtPattern { rows: rows.clone() });
            return;
        }
        let len = prev.len() - 1;
        let mut row = vec![0u32; len];
        fn fill(
            i: usize,
            len: usize,
            prev: &[u32],
            row: &mut Vec<u32>,
            rows: &mut Vec<Vec<u32>>,
            out: &mut Vec<GtPattern>,
        ) {
            if i == len {
                rows.push(row.clone());
                rec(rows, out);
                rows.pop();
                return;
            }
            // Descending choice keeps the flattened order decreasing-lex.
            for v in (prev[i + 1]..=prev[i]).rev() {
                row[i] = v;
                fill(i + 1, len, prev, row, rows, out);
            }
        }
        fill(0, len, &prev, &mut row, rows, out);
    }
    rec(&mut rows, &mut out);
    Ok(out)
}

/// A chain (1) = λ⁽¹⁾ ⊂ λ⁽²⁾ ⊂ … ⊂ λ⁽ⁿ⁾ adding one box per step; the basis
/// label for P_λ, equivalent to a standard Young tableau.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PartitionPath {
    chain: Vec<Partition>,
}

impl PartitionPath {
    pub fn chain(&self) -> &[Partition] {
        &self.chain
    }

    pub fn len(&self) -> usize {
        self.chain.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chain.is_empty()
    }

    /// Final partition (the sector this path belongs to).
    pub fn last(&self) -> &Partition {
        self.chain.last().unwrap()
    }

    /// The (row, col) of the box added at step `t` (1-based label t of the
    /// corresponding standard Young tableau).
    pub fn box_added_at(&self, t: usize) -> (usize, usize) {
        let cur = &self.chain[t - 1];
        if t == 1 {
            return (0, 0);
        }
        let prev = &self.chain[t - 2];
        for row in 0..cur.len() {
            if cur.part(row) != prev.part(row) {
                return (row, cur.part(row) as usize - 1);
            }
        }
        unreachable!("consecutive path entries must differ");
    }

    /// Axial distance used by Young's orthogonal form: content of the box
    /// holding t+1 minus content of the box holding t, content = col − row.
    pub fn axial_distance(&self, t: usize) -> i64 {
        let (r1, c1) = self.box_added_at(t);
        let (r2, c2) = self.box_added_at(t + 1);
        (c2 as i64 - r2 as i64) - (c1 as i64 - r1 as i64)
    }

    /// The path with labels t and t+1 swapped, if it is still a valid chain
    /// (i.e. the two boxes are neither in the same row nor the same column).
    pub fn swap_labels(&self, t: usize) -> Option<PartitionPath> {
        let (r1, c1) = self.box_added_at(t);
        let (r2, c2) = self.box_added_at(t + 1);
        if r1 == r2 || c1 == c2 {
            return None;
        }
        // Swapping the order the two boxes are added only changes λ⁽ᵗ⁾.
        let mut chain = self.chain.clone();
        let mut parts = chain[t - 1].parts.clone();
        // Remove the step-t box, add the step-(t+1) box.
        if c1 == 0 && parts[r1] == 1 {
            parts.pop();
        } else {
            parts[r1] -= 1;
        }
        if r2 == parts.len() {
            parts.push(1);
        } else {
            parts[r2] += 1;
        }
        chain[t - 1] = Partition { parts };
        Some(PartitionPath { chain })
    }
}

impl fmt::Debug for PartitionPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strs: Vec<String> = self.chain.iter().map(|p| p.to_string()).collect();
        write!(f, "Path[{}]", strs.join(" -> "))
    }
}

impl PartialOrd for PartitionPath {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Chain-lexicographic order under the canonical partition order; the fully
/// symmetric path sorts first.
impl Ord for PartitionPath {
    fn cmp(&self, other: &Self) -> Ordering {
        for (a, b) in self.chain.iter().zip(other.chain.iter()) {
            match a.cmp(b) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        self.chain.len().cmp(&other.chain.len())
    }
}

/// All length-n paths with at most d rows, grouped by endpoint: returns, for
/// each λ in canonical order, the paths ending at λ in canonical path order.
pub fn enumerate_paths(n: usize, d: usize) -> Result<Vec<(Partition, Vec<PartitionPath>)>> {
    if n == 0 || d == 0 {
        return Err(Error::invalid("n and d must be positive"));
    }
    let sectors = enumerate_partitions(n, d)?;
    let mut by_sector: Vec<(Partition, Vec<PartitionPath>)> =
        sectors.into_iter().map(|s| (s, Vec::new())).collect();
    let mut chain = vec![Partition::row(1)];
    // Depth-first branching in add_box order generates paths in canonical
    // (chain-lexicographic) order.
    fn rec(
        chain: &mut Vec<Partition>,
        n: usize,
        d: usize,
        by_sector: &mut Vec<(Partition, Vec<PartitionPath>)>,
    ) {
        if chain.len() == n {
            let last = chain.last().unwrap();
            let slot = by_sector
                .iter_mut()
                .find(|(s, _)| s == last)
                .expect("endpoint must be an enumerated sector");
            slot.1.push(PartitionPath { chain: chain.clone() });
            return;
        }
        for next in add_box(chain.last().unwrap(), d) {
            chain.push(next);
            rec(chain, n, d, by_sector);
            chain.pop();
        }
    }
    rec(&mut chain, n, d, &mut by_sector);
    Ok(by_sector)
}

/// Paths ending at λ (with rows bounded by the length of λ being ≤ d), in
/// canonical order. `d` bounds intermediate shapes as well.
pub fn paths_to(lambda: &Partition, d: usize) -> Result<Vec<PartitionPath>> {
    let n = lambda.size();
    let grouped = enumerate_paths(n, d)?;
    grouped
        .into_iter()
        .find(|(s, _)| s == lambda)
        .map(|(_, p)| p)
        .ok_or_else(|| Error::invalid(format!("{lambda} has more than d={d} parts")))
}
