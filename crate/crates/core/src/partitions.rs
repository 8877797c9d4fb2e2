//! Integer partitions, set partitions of `[n]`, and the noncrossing and
//! interval sublattices of the refinement order.

use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{check_bounds, Error, Result};
use crate::rational::{factorial, falling_factorial, from_bigint, int, Rational};

/// Largest ground set for which `set_partitions` enumerates all of `Π_n`.
pub const MAX_SET_PARTITION_N: usize = 12;
/// Largest ground set for interval-partition enumeration.
pub const MAX_INTERVAL_N: usize = 16;

/// A partition `λ ⊢ n`, parts stored nonincreasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntegerPartition {
    parts: Vec<usize>,
}

impl IntegerPartition {
    /// Sorts the parts nonincreasing and drops zeros.
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        IntegerPartition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `n = Σ λ_i`.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `ℓ(λ)`, the number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `m(λ)_i` for `i = 1..=n` (index 0 unused and always 0).
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.size() + 1];
        for &p in &self.parts {
            m[p] += 1;
        }
        m
    }

    /// `m(λ)! = Π m(λ)_i!`.
    pub fn multiplicity_factorial(&self) -> BigInt {
        self.multiplicities()
            .iter()
            .fold(BigInt::one(), |acc, &m| acc * factorial(m))
    }

    /// `λ! = Π λ_i!`.
    pub fn parts_factorial(&self) -> BigInt {
        self.parts
            .iter()
            .fold(BigInt::one(), |acc, &p| acc * factorial(p))
    }

    /// `d_λ = n! / (λ! m(λ)!)`: set partitions of `[n]` with shape `λ`.
    pub fn set_partition_count(&self) -> BigInt {
        factorial(self.size()) / (self.parts_factorial() * self.multiplicity_factorial())
    }

    /// `(n)_{ℓ-1} / m(λ)!`: noncrossing partitions of shape `λ`.
    pub fn noncrossing_count(&self) -> Rational {
        if self.is_empty() {
            return int(1);
        }
        falling_factorial(&int(self.size() as i64), self.len() - 1)
            / from_bigint(self.multiplicity_factorial())
    }

    /// `ℓ! / m(λ)!`: interval partitions of shape `λ`.
    pub fn interval_count(&self) -> Rational {
        Rational::new(factorial(self.len()), self.multiplicity_factorial())
    }
}

impl fmt::Display for IntegerPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// All partitions of `n` in reverse-lexicographic order, `(n)` first.
pub fn integer_partitions(n: usize) -> Vec<IntegerPartition> {
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<IntegerPartition>) {
        if rest == 0 {
            out.push(IntegerPartition { parts: cur.clone() });
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// A set partition of `[n] = {1, ..., n}`, in canonical form: each block
/// sorted, blocks ordered by their minimum.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "SetPartitionJson", into = "SetPartitionJson")]
pub struct SetPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct SetPartitionJson {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl TryFrom<SetPartitionJson> for SetPartition {
    type Error = Error;

    fn try_from(raw: SetPartitionJson) -> Result<Self> {
        SetPartition::new(raw.n, raw.blocks)
    }
}

impl From<SetPartition> for SetPartitionJson {
    fn from(p: SetPartition) -> Self {
        SetPartitionJson {
            n: p.n,
            blocks: p.blocks,
        }
    }
}

impl SetPartition {
    /// Validates and canonicalizes: blocks must be nonempty, disjoint, and
    /// cover `[n]` exactly.
    pub fn new(n: usize, mut blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; n + 1];
        for block in &mut blocks {
            if block.is_empty() {
                return Err(Error::InvalidPartition("empty block".into()));
            }
            block.sort_unstable();
            for &x in block.iter() {
                if x == 0 || x > n {
                    return Err(Error::InvalidPartition(format!(
                        "element {x} outside [1, {n}]"
                    )));
                }
                if seen[x] {
                    return Err(Error::InvalidPartition(format!("element {x} repeated")));
                }
                seen[x] = true;
            }
        }
        if let Some(x) = (1..=n).find(|&x| !seen[x]) {
            return Err(Error::InvalidPartition(format!("element {x} missing")));
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        Ok(SetPartition { n, blocks })
    }

    /// From a restricted-growth string `r` (0-based labels, `r[0] = 0`).
    pub fn from_rgs(rgs: &[usize]) -> Self {
        let k = rgs.iter().copied().max().map_or(0, |m| m + 1);
        let mut blocks = vec![Vec::new(); k];
        for (i, &label) in rgs.iter().enumerate() {
            blocks[label].push(i + 1);
        }
        SetPartition {
            n: rgs.len(),
            blocks,
        }
    }

    /// `0_n`, all singletons.
    pub fn finest(n: usize) -> Self {
        SetPartition {
            n,
            blocks: (1..=n).map(|i| vec![i]).collect(),
        }
    }

    /// `1_n`, a single block.
    pub fn coarsest(n: usize) -> Self {
        SetPartition {
            n,
            blocks: if n == 0 {
                vec![]
            } else {
                vec![(1..=n).collect()]
            },
        }
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// `ℓ(π)`, the number of blocks.
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Block index of each element; `labels()[x - 1]` for element `x`.
    pub fn labels(&self) -> Vec<usize> {
        let mut labels = vec![0; self.n];
        for (b, block) in self.blocks.iter().enumerate() {
            for &x in block {
                labels[x - 1] = b;
            }
        }
        labels
    }

    /// Block sizes, nonincreasing.
    pub fn shape(&self) -> IntegerPartition {
        IntegerPartition::new(self.blocks.iter().map(Vec::len).collect())
    }

    pub fn is_noncrossing(&self) -> bool {
        blocks_noncrossing(&self.blocks)
    }

    /// Every block is a run of consecutive integers.
    pub fn is_interval(&self) -> bool {
        self.blocks
            .iter()
            .all(|b| b[b.len() - 1] - b[0] + 1 == b.len())
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let blocks: Vec<String> = self
            .blocks
            .iter()
            .map(|b| {
                b.iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect();
        write!(f, "{{{}}}", blocks.join("|"))
    }
}

/// True iff no two blocks interleave. Each block is split into arcs between
/// consecutive elements; two arcs `(a, b)`, `(c, d)` from different blocks
/// cross iff `a < c < b < d`. Blocks must be sorted.
fn blocks_noncrossing(blocks: &[Vec<usize>]) -> bool {
    let mut arcs: Vec<(usize, usize, usize)> = Vec::new();
    for (id, block) in blocks.iter().enumerate() {
        for w in block.windows(2) {
            arcs.push((w[0], w[1], id));
        }
    }
    for (i, &(a, b, p)) in arcs.iter().enumerate() {
        for &(c, d, q) in &arcs[i + 1..] {
            if p != q && ((a < c && c < b && b < d) || (c < a && a < d && d < b)) {
                return false;
            }
        }
    }
    true
}

/// All of `Π_n` in restricted-growth-string order.
pub fn set_partitions(n: usize) -> Result<Vec<SetPartition>> {
    check_bounds("set_partitions", n, 1, MAX_SET_PARTITION_N)?;
    Ok(all_rgs(n)
        .iter()
        .map(|r| SetPartition::from_rgs(r))
        .collect())
}

fn all_rgs(n: usize) -> Vec<Vec<usize>> {
    fn rec(i: usize, n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == n {
            out.push(cur.clone());
            return;
        }
        for label in 0..=max + 1 {
            cur.push(label);
            rec(i + 1, n, max.max(label), cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        return vec![vec![]];
    }
    let mut cur = vec![0];
    rec(1, n, 0, &mut cur, &mut out);
    out
}

/// `NC_n`, filtered from `Π_n` in the same order.
pub fn noncrossing_partitions(n: usize) -> Result<Vec<SetPartition>> {
    Ok(set_partitions(n)?
        .into_iter()
        .filter(SetPartition::is_noncrossing)
        .collect())
}

/// `I_n`, one partition per composition of `n`. Ordered to agree with the
/// restricted-growth-string order of `Π_n`.
pub fn interval_partitions(n: usize) -> Result<Vec<SetPartition>> {
    check_bounds("interval_partitions", n, 1, MAX_INTERVAL_N)?;
    // bit i of the mask set => a block ends after element i+1
    let mut out: Vec<SetPartition> = (0u32..1 << (n - 1))
        .map(|mask| {
            let mut blocks = Vec::new();
            let mut cur = Vec::new();
            for x in 1..=n {
                cur.push(x);
                if x == n || mask & (1 << (x - 1)) != 0 {
                    blocks.push(std::mem::take(&mut cur));
                }
            }
            SetPartition { n, blocks }
        })
        .collect();
    out.sort_by_cached_key(|p| p.labels());
    Ok(out)
}

/// Refinement order: every block of `sigma` lies inside a block of `pi`.
pub fn leq_refinement(sigma: &SetPartition, pi: &SetPartition) -> Result<bool> {
    if sigma.n != pi.n {
        return Err(Error::GroundSetMismatch {
            left: sigma.n,
            right: pi.n,
        });
    }
    Ok(refines(sigma, &pi.labels()))
}

fn refines(sigma: &SetPartition, pi_labels: &[usize]) -> bool {
    sigma
        .blocks
        .iter()
        .all(|b| b.iter().all(|&x| pi_labels[x - 1] == pi_labels[b[0] - 1]))
}

/// The type `(k_1, ..., k_n)` of an interval `[σ, π]`: `k_i` counts the
/// blocks of `π` that are unions of exactly `i` blocks of `σ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntervalType {
    k: Vec<usize>,
}

impl IntervalType {
    pub fn counts(&self) -> &[usize] {
        &self.k
    }

    /// `Σ i k_i`, which equals `ℓ(σ)`.
    pub fn weighted_sum(&self) -> usize {
        self.k.iter().enumerate().map(|(i, &k)| (i + 1) * k).sum()
    }

    /// `Σ k_i`, which equals `ℓ(π)`.
    pub fn total(&self) -> usize {
        self.k.iter().sum()
    }
}

pub fn interval_type(sigma: &SetPartition, pi: &SetPartition) -> Result<IntervalType> {
    if !leq_refinement(sigma, pi)? {
        return Err(Error::NotRefinement);
    }
    let labels = pi.labels();
    let mut per_block = vec![0usize; pi.len()];
    for b in &sigma.blocks {
        per_block[labels[b[0] - 1]] += 1;
    }
    let mut k = vec![0; sigma.n];
    for c in per_block {
        k[c - 1] += 1;
    }
    Ok(IntervalType { k })
}

pub fn shape(pi: &SetPartition) -> IntegerPartition {
    pi.shape()
}

pub fn is_noncrossing(pi: &SetPartition) -> bool {
    pi.is_noncrossing()
}

pub fn is_interval(pi: &SetPartition) -> bool {
    pi.is_interval()
}

/// Kreweras complement of a noncrossing partition.
///
/// Place `1, 1̄, 2, 2̄, ..., n, n̄` around a circle. Among all partitions of
/// the barred points, keep those that stay noncrossing together with `pi`,
/// and return the coarsest one (on ground set `[n]`). Results are memoized
/// per `n`.
pub fn kreweras_complement(pi: &SetPartition) -> Result<SetPartition> {
    if !pi.is_noncrossing() {
        return Err(Error::Crossing);
    }
    let table = kreweras_table(pi.n)?;
    Ok(table[pi].clone())
}

static KREWERAS_TABLES: [OnceLock<HashMap<SetPartition, SetPartition>>; MAX_SET_PARTITION_N + 1] =
    [const { OnceLock::new() }; MAX_SET_PARTITION_N + 1];

fn kreweras_table(n: usize) -> Result<&'static HashMap<SetPartition, SetPartition>> {
    check_bounds("kreweras_complement", n, 1, MAX_SET_PARTITION_N)?;
    Ok(KREWERAS_TABLES[n].get_or_init(|| {
        let all = set_partitions(n).expect("n within bounds");
        all.iter()
            .filter(|p| p.is_noncrossing())
            .map(|p| {
                let k = kreweras_bruteforce(p, &all)
                    .expect("a noncrossing partition has a unique coarsest complement");
                (p.clone(), k)
            })
            .collect()
    }))
}

/// Barred partitions compatible with `pi` on the interleaved `2n` points.
pub fn kreweras_candidates<'a>(
    pi: &SetPartition,
    barred: &'a [SetPartition],
) -> Vec<&'a SetPartition> {
    barred
        .iter()
        .filter(|q| interleaved_noncrossing(pi, q))
        .collect()
}

/// The unique coarsest compatible candidate, or `None` if the candidates
/// have no maximum.
fn kreweras_bruteforce(pi: &SetPartition, barred: &[SetPartition]) -> Option<SetPartition> {
    let candidates = kreweras_candidates(pi, barred);
    let best = candidates.iter().min_by_key(|q| q.len())?;
    let best_labels = best.labels();
    candidates
        .iter()
        .all(|q| refines(q, &best_labels))
        .then(|| (*best).clone())
}

fn interleaved_noncrossing(pi: &SetPartition, barred: &SetPartition) -> bool {
    let mut blocks: Vec<Vec<usize>> = pi
        .blocks
        .iter()
        .map(|b| b.iter().map(|&x| 2 * x - 1).collect())
        .collect();
    blocks.extend(
        barred
            .blocks
            .iter()
            .map(|b| b.iter().map(|&x| 2 * x).collect()),
    );
    blocks_noncrossing(&blocks)
}

/// The three lattices of set partitions used throughout.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Lattice {
    All,
    NonCrossing,
    Interval,
}

impl Lattice {
    pub fn name(self) -> &'static str {
        match self {
            Lattice::All => "ALL",
            Lattice::NonCrossing => "NC",
            Lattice::Interval => "INTERVAL",
        }
    }

    pub fn contains(self, pi: &SetPartition) -> bool {
        match self {
            Lattice::All => true,
            Lattice::NonCrossing => pi.is_noncrossing(),
            Lattice::Interval => pi.is_interval(),
        }
    }

    pub fn elements(self, n: usize) -> Result<Vec<SetPartition>> {
        match self {
            Lattice::All => set_partitions(n),
            Lattice::NonCrossing => noncrossing_partitions(n),
            Lattice::Interval => interval_partitions(n),
        }
    }
}

/// Closed-form number of partitions of shape `λ` in the given lattice.
pub fn count_by_shape(lambda: &IntegerPartition, lattice: Lattice) -> Rational {
    match lattice {
        Lattice::All => from_bigint(lambda.set_partition_count()),
        Lattice::NonCrossing => lambda.noncrossing_count(),
        Lattice::Interval => lambda.interval_count(),
    }
}
