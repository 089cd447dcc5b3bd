//! Block-ascending permutations and their basic statistics.
//!
//! A [`BlockPermutation`] is a permutation of `1..=N` cut into consecutive
//! blocks whose lengths are given by a [`Composition`]; every block is
//! strictly increasing, so all descents sit on block boundaries.
//!
//! Block indices and positions are 1-based throughout the public API.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Ordered block lengths `(a_1, ..., a_n)`. Zero parts are allowed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Self {
        Composition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of blocks `n`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `N = a_1 + ... + a_n`.
    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn max_part(&self) -> usize {
        self.0.iter().copied().max().unwrap_or(0)
    }

    /// 1-based block access.
    pub fn part(&self, index: usize) -> Option<usize> {
        index.checked_sub(1).and_then(|i| self.0.get(i).copied())
    }

    /// The set `{a_1, a_1 + a_2, ..., a_1 + ... + a_{n-1}}` of allowed descent positions.
    pub fn boundaries(&self) -> BTreeSet<usize> {
        let mut acc = 0;
        let mut out = BTreeSet::new();
        for &a in self.0.iter().take(self.0.len().saturating_sub(1)) {
            acc += a;
            out.insert(acc);
        }
        out
    }

    pub fn sorted_ascending(&self) -> Composition {
        let mut parts = self.0.clone();
        parts.sort_unstable();
        Composition(parts)
    }

    pub fn sorted_descending(&self) -> Composition {
        let mut parts = self.0.clone();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Composition(parts)
    }

    /// True when both compositions hold the same multiset of parts.
    pub fn is_rearrangement_of(&self, other: &Composition) -> bool {
        self.sorted_ascending() == other.sorted_ascending()
    }

    /// Checks that the descending sort of `self` majorizes that of `other`.
    ///
    /// On failure returns the first 1-based prefix length whose sum is too
    /// small; a length or total mismatch is reported at index `n`.
    pub fn majorizes(&self, other: &Composition) -> std::result::Result<(), usize> {
        if self.len() != other.len() {
            return Err(self.len().min(other.len()));
        }
        let a = self.sorted_descending();
        let b = other.sorted_descending();
        let (mut sa, mut sb) = (0, 0);
        for (i, (x, y)) in a.0.iter().zip(&b.0).enumerate() {
            sa += x;
            sb += y;
            if sa < sb {
                return Err(i + 1);
            }
        }
        if sa != sb {
            return Err(self.len());
        }
        Ok(())
    }

    pub(crate) fn with_part(&self, index: usize, value: usize) -> Composition {
        let mut parts = self.0.clone();
        parts[index - 1] = value;
        Composition(parts)
    }
}

impl From<Vec<usize>> for Composition {
    fn from(parts: Vec<usize>) -> Self {
        Composition(parts)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|a| a.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for Composition {
    type Err = Error;

    /// Accepts `3,5`, `(3,5)` or the empty string.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if s.is_empty() {
            return Ok(Composition::default());
        }
        s.split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Malformed(format!("bad composition part {t:?}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Composition)
    }
}

/// A permutation of `1..=N` whose blocks (given by `comp`) ascend.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawPermutation")]
pub struct BlockPermutation {
    comp: Composition,
    values: Vec<u32>,
}

#[derive(Deserialize)]
struct RawPermutation {
    comp: Vec<usize>,
    values: Vec<u32>,
}

impl TryFrom<RawPermutation> for BlockPermutation {
    type Error = Error;

    fn try_from(raw: RawPermutation) -> Result<Self> {
        BlockPermutation::new(Composition(raw.comp), raw.values)
    }
}

impl BlockPermutation {
    /// Validates that `values` is a permutation of `1..=N` ascending within each block.
    pub fn new(comp: Composition, values: Vec<u32>) -> Result<Self> {
        if comp.total() != values.len() {
            return Err(Error::LengthMismatch {
                comp_total: comp.total(),
                values: values.len(),
            });
        }
        check_permutation(&values)?;
        let pi = BlockPermutation { comp, values };
        for (b, block) in pi.blocks().enumerate() {
            if let Some(w) = block.windows(2).find(|w| w[0] >= w[1]) {
                return Err(Error::DescentInBlock {
                    block: b + 1,
                    left: w[0],
                    right: w[1],
                });
            }
        }
        Ok(pi)
    }

    pub fn from_blocks<B: AsRef<[u32]>>(blocks: &[B]) -> Result<Self> {
        let comp = Composition(blocks.iter().map(|b| b.as_ref().len()).collect());
        let values = blocks.iter().flat_map(|b| b.as_ref().iter().copied()).collect();
        BlockPermutation::new(comp, values)
    }

    /// Caller guarantees the invariants.
    pub(crate) fn from_parts_unchecked(comp: Composition, values: Vec<u32>) -> Self {
        debug_assert!(BlockPermutation::new(comp.clone(), values.clone()).is_ok());
        BlockPermutation { comp, values }
    }

    pub fn identity(n: usize) -> Self {
        BlockPermutation {
            comp: Composition(vec![n]),
            values: (1..=n as u32).collect(),
        }
    }

    pub fn comp(&self) -> &Composition {
        &self.comp
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    /// `N`.
    pub fn size(&self) -> usize {
        self.values.len()
    }

    pub fn block_count(&self) -> usize {
        self.comp.len()
    }

    pub fn blocks(&self) -> impl DoubleEndedIterator<Item = &[u32]> + ExactSizeIterator + '_ {
        let mut start = 0;
        let bounds: Vec<(usize, usize)> = self
            .comp
            .0
            .iter()
            .map(|&a| {
                start += a;
                (start - a, start)
            })
            .collect();
        bounds.into_iter().map(move |(s, e)| &self.values[s..e])
    }

    /// 1-based block access.
    pub fn block(&self, index: usize) -> Result<&[u32]> {
        if index == 0 || index > self.block_count() {
            return Err(Error::BlockIndexOutOfRange {
                index,
                blocks: self.block_count(),
            });
        }
        let start: usize = self.comp.0[..index - 1].iter().sum();
        Ok(&self.values[start..start + self.comp.0[index - 1]])
    }

    pub fn lis_length(&self) -> usize {
        lis_length(&self.values)
    }

    /// [`Self::with_adjacent_blocks`] for callers that already guarantee the result is valid.
    pub(crate) fn with_adjacent_blocks_unchecked(&self, index: usize, first: &[u32], second: &[u32]) -> Self {
        let start: usize = self.comp.0[..index - 1].iter().sum();
        let end = start + self.comp.0[index - 1] + self.comp.0[index];
        let mut values = self.values.clone();
        values.splice(start..end, first.iter().chain(second).copied());
        let mut comp = self.comp.clone();
        comp.0[index - 1] = first.len();
        comp.0[index] = second.len();
        BlockPermutation { comp, values }
    }

    /// Replaces blocks `index` and `index + 1` with `first` and `second`,
    /// which must hold exactly the same values.
    pub fn with_adjacent_blocks(&self, index: usize, first: &[u32], second: &[u32]) -> Result<Self> {
        check_adjacent(self, index)?;
        let start: usize = self.comp.0[..index - 1].iter().sum();
        let end = start + self.comp.0[index - 1] + self.comp.0[index];
        let mut old = self.values[start..end].to_vec();
        let mut new: Vec<u32> = first.iter().chain(second).copied().collect();
        old.sort_unstable();
        new.sort_unstable();
        if old != new {
            return Err(Error::MapDomainMismatch(
                "replacement blocks carry different values".into(),
            ));
        }
        for (offset, block) in [(0, first), (first.len(), second)] {
            if let Some(w) = block.windows(2).find(|w| w[0] >= w[1]) {
                return Err(Error::DescentInBlock {
                    block: index + usize::from(offset > 0),
                    left: w[0],
                    right: w[1],
                });
            }
        }
        let mut values = self.values.clone();
        values.splice(start..end, first.iter().chain(second).copied());
        let mut comp = self.comp.clone();
        comp.0[index - 1] = first.len();
        comp.0[index] = second.len();
        Ok(BlockPermutation { comp, values })
    }
}

fn check_permutation(values: &[u32]) -> Result<()> {
    let n = values.len();
    let mut seen = vec![false; n + 1];
    for &v in values {
        if v == 0 || v as usize > n {
            return Err(Error::NotAPermutation { expected: n, found: v });
        }
        if std::mem::replace(&mut seen[v as usize], true) {
            return Err(Error::DuplicateValue(v));
        }
    }
    Ok(())
}

pub(crate) fn check_adjacent(pi: &BlockPermutation, index: usize) -> Result<()> {
    if index == 0 || index >= pi.block_count() {
        return Err(Error::BlockIndexOutOfRange {
            index,
            blocks: pi.block_count(),
        });
    }
    Ok(())
}

impl fmt::Display for BlockPermutation {
    /// Compact digits when `N <= 9` (`236|14578`), comma-separated otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.size() <= 9 { "" } else { "," };
        let blocks: Vec<String> = self
            .blocks()
            .map(|b| b.iter().map(u32::to_string).collect::<Vec<_>>().join(sep))
            .collect();
        f.write_str(&blocks.join("|"))
    }
}

impl FromStr for BlockPermutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse(s)
    }
}

/// Parses `236|14578` or `2,3,6|1,4,5,7,8`.
///
/// Text without commas and with at most nine digits is read one digit per
/// value; anything else is read as comma-separated integers, where a block
/// without commas holds a single value. The empty string is the empty
/// composition.
pub fn parse(text: &str) -> Result<BlockPermutation> {
    let text = text.trim();
    if text.is_empty() {
        return BlockPermutation::new(Composition::default(), Vec::new());
    }
    if let Some(c) = text.chars().find(|c| !(c.is_ascii_digit() || matches!(c, '|' | ',' | ' '))) {
        return Err(Error::Malformed(format!("unexpected character {c:?}")));
    }
    let digit_count = text.chars().filter(char::is_ascii_digit).count();
    let digit_mode = !text.contains(',') && digit_count <= 9;
    let mut blocks = Vec::new();
    for raw in text.split('|') {
        let raw = raw.trim();
        let block: Vec<u32> = if raw.is_empty() {
            Vec::new()
        } else if digit_mode {
            if raw.contains(' ') {
                return Err(Error::Malformed(format!("space inside block {raw:?}")));
            }
            raw.chars().map(|c| c.to_digit(10).expect("checked digit")).collect()
        } else {
            raw.split(',')
                .map(|t| {
                    let t = t.trim();
                    t.parse::<u32>()
                        .map_err(|_| Error::Malformed(format!("bad value {t:?}")))
                })
                .collect::<Result<_>>()?
        };
        blocks.push(block);
    }
    BlockPermutation::from_blocks(&blocks)
}

/// Length of the longest strictly increasing subsequence (patience sorting).
pub fn lis_length(values: &[u32]) -> usize {
    let mut tops: Vec<u32> = Vec::with_capacity(values.len());
    for &v in values {
        let at = tops.partition_point(|&t| t < v);
        if at == tops.len() {
            tops.push(v);
        } else {
            tops[at] = v;
        }
    }
    tops.len()
}

/// Longest increasing subsequence using only values in `lo..=hi`.
pub fn interval_lis_length(values: &[u32], lo: u32, hi: u32) -> usize {
    let restricted: Vec<u32> = values.iter().copied().filter(|v| (lo..=hi).contains(v)).collect();
    lis_length(&restricted)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Avoidance {
    Avoids,
    Contains,
}

/// Whether `pi` avoids `12...(k+2)`, i.e. lies in `L_{k+2}(comp)`.
pub fn classify(pi: &BlockPermutation, k: usize) -> Avoidance {
    if pi.lis_length() <= k + 1 {
        Avoidance::Avoids
    } else {
        Avoidance::Contains
    }
}

/// 1-based positions `i` with `value_i > value_{i+1}`.
pub fn descent_set(pi: &BlockPermutation) -> BTreeSet<usize> {
    pi.values
        .windows(2)
        .enumerate()
        .filter(|(_, w)| w[0] > w[1])
        .map(|(i, _)| i + 1)
        .collect()
}

/// Order-preserving map from ranks `1..=m` back to original values.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ValueMap {
    images: Vec<u32>,
}

impl ValueMap {
    /// `images[r - 1]` is the value carrying rank `r`; must be strictly increasing.
    pub fn new(images: Vec<u32>) -> Result<Self> {
        if images.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::MapDomainMismatch("images must increase".into()));
        }
        Ok(ValueMap { images })
    }

    pub fn identity(m: usize) -> Self {
        ValueMap {
            images: (1..=m as u32).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn apply(&self, rank: u32) -> Option<u32> {
        rank.checked_sub(1).and_then(|r| self.images.get(r as usize).copied())
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().zip(1..).all(|(&v, r)| v == r)
    }
}

/// Extracts blocks `index` and `index + 1` and replaces their values by ranks.
pub fn standardize(pi: &BlockPermutation, index: usize) -> Result<(BlockPermutation, ValueMap)> {
    check_adjacent(pi, index)?;
    let first = pi.block(index)?;
    let second = pi.block(index + 1)?;
    let mut images: Vec<u32> = first.iter().chain(second).copied().collect();
    images.sort_unstable();
    let rank = |v: &u32| images.binary_search(v).expect("value present") as u32 + 1;
    let pattern = BlockPermutation::from_parts_unchecked(
        Composition(vec![first.len(), second.len()]),
        first.iter().chain(second).map(rank).collect(),
    );
    Ok((pattern, ValueMap { images }))
}

/// Replaces each rank in `pattern` by its image; the inverse of [`standardize`].
///
/// The result keeps the block structure but is generally not a permutation
/// of `1..=m`, so it is returned as raw blocks.
pub fn substitute(pattern: &BlockPermutation, map: &ValueMap) -> Result<Vec<Vec<u32>>> {
    if pattern.size() != map.len() {
        return Err(Error::MapDomainMismatch(format!(
            "pattern has {} values, map has {}",
            pattern.size(),
            map.len()
        )));
    }
    Ok(pattern
        .blocks()
        .map(|b| b.iter().map(|&r| map.images[r as usize - 1]).collect())
        .collect())
}

/// A two-block permutation `x_1 ... x_p | y_q ... y_1`.
///
/// The second block is stored left to right, so `y_1` is its largest
/// (rightmost) element and `y_q` its smallest.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TwoBlockView {
    first: Vec<u32>,
    second: Vec<u32>,
}

impl TwoBlockView {
    pub fn new(first: Vec<u32>, second: Vec<u32>) -> Result<Self> {
        let pi = BlockPermutation::from_blocks(&[&first, &second])?;
        Ok(Self::from_checked(&pi))
    }

    fn from_checked(pi: &BlockPermutation) -> Self {
        let p = pi.comp.0[0];
        TwoBlockView {
            first: pi.values[..p].to_vec(),
            second: pi.values[p..].to_vec(),
        }
    }

    pub(crate) fn blocks_mut(&mut self) -> (&mut Vec<u32>, &mut Vec<u32>) {
        (&mut self.first, &mut self.second)
    }

    pub fn p(&self) -> usize {
        self.first.len()
    }

    pub fn q(&self) -> usize {
        self.second.len()
    }

    /// `x_i`, 1-based.
    pub fn x(&self, i: usize) -> u32 {
        self.first[i - 1]
    }

    /// `y_i`, 1-based and counted from the right end of the second block.
    pub fn y(&self, i: usize) -> u32 {
        self.second[self.q() - i]
    }

    pub fn first(&self) -> &[u32] {
        &self.first
    }

    pub fn second(&self) -> &[u32] {
        &self.second
    }

    pub fn lis_length(&self) -> usize {
        let values: Vec<u32> = self.first.iter().chain(&self.second).copied().collect();
        lis_length(&values)
    }

    pub fn to_block_permutation(&self) -> BlockPermutation {
        BlockPermutation::from_parts_unchecked(
            Composition(vec![self.p(), self.q()]),
            self.first.iter().chain(&self.second).copied().collect(),
        )
    }
}

impl TryFrom<&BlockPermutation> for TwoBlockView {
    type Error = Error;

    fn try_from(pi: &BlockPermutation) -> Result<Self> {
        if pi.block_count() != 2 {
            return Err(Error::Domain(format!(
                "expected two blocks, found {}",
                pi.block_count()
            )));
        }
        Ok(Self::from_checked(pi))
    }
}

impl fmt::Display for TwoBlockView {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_block_permutation().fmt(f)
    }
}
