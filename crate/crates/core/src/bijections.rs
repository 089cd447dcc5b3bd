//! Explicit bijections and injections between sets of block-ascending
//! permutations with a fixed longest increasing subsequence.
//!
//! The two primitive moves act on a two-block permutation
//! `x_1 ... x_p | y_q ... y_1` whose LIS has length `h`:
//!
//! * [`map_w`] moves `y_{h-j}` into the first block right after `x_j`, where
//!   `j` is the largest ridge index;
//! * [`map_v`] moves `x_j` back into the second block, where `j` is the
//!   smallest ridge index.
//!
//! They are mutually inverse. Everything else here lifts them to adjacent
//! blocks of a longer permutation by standardizing the two blocks first.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::{check_adjacent, standardize, BlockPermutation, Composition, TwoBlockView};

/// Smallest (`nu`) and largest (`omega`) ridge index of a two-block permutation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RidgePair {
    pub nu: usize,
    pub omega: usize,
    pub h: usize,
}

/// Name of an elementary step recorded in a [`BijectionTrace`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum MapName {
    W,
    V,
    #[serde(rename = "delete_max")]
    DeleteMax,
    #[serde(rename = "insert_max")]
    InsertMax,
}

impl fmt::Display for MapName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MapName::W => "W",
            MapName::V => "V",
            MapName::DeleteMax => "delete_max",
            MapName::InsertMax => "insert_max",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceStep {
    pub map: MapName,
    /// 1-based block the step acted on (the left block for W and V).
    pub block: usize,
    #[serde(serialize_with = "as_text")]
    pub before: BlockPermutation,
    #[serde(serialize_with = "as_text")]
    pub after: BlockPermutation,
}

fn as_text<S: serde::Serializer>(pi: &BlockPermutation, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(pi)
}

/// Ordered record of the elementary steps making up a composite map.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct BijectionTrace {
    pub steps: Vec<TraceStep>,
}

impl BijectionTrace {
    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    fn extend(&mut self, other: BijectionTrace) {
        self.steps.extend(other.steps);
    }

    /// Every step starts where the previous one ended.
    pub fn is_connected(&self) -> bool {
        self.steps.windows(2).all(|w| w[0].after == w[1].before)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("trace serializes")
    }
}

/// Ridge indices of `pi`, which must have LIS exactly `h`.
///
/// `j` is a ridge index when `x_1 < ... < x_j < y_{h-j} < ... < y_1`; both
/// chains ascend already, so only the junction `x_j < y_{h-j}` needs checking.
pub fn ridge_indices(pi: &TwoBlockView, h: usize) -> Result<RidgePair> {
    let actual = pi.lis_length();
    if actual != h {
        return Err(Error::Domain(format!("permutation {pi} has LIS {actual}, not {h}")));
    }
    ridges_given_lis(pi, h)
}

fn ridges_given_lis(pi: &TwoBlockView, h: usize) -> Result<RidgePair> {
    let (p, q) = (pi.p(), pi.q());
    let lo = h.saturating_sub(q);
    let hi = p.min(h);
    let is_ridge = |j: usize| j == 0 || j == h || pi.x(j) < pi.y(h - j);
    let mut ridges = (lo..=hi).filter(|&j| is_ridge(j));
    let nu = ridges
        .next()
        .ok_or_else(|| Error::Internal(format!("no ridge index for {pi} at h = {h}")))?;
    let omega = ridges.next_back().unwrap_or(nu);
    Ok(RidgePair { nu, omega, h })
}

/// `D_h(p, q) -> D_h(p + 1, q - 1)`; requires `p < h` and `q >= 1`.
pub fn map_w(pi: &TwoBlockView) -> Result<TwoBlockView> {
    let mut out = pi.clone();
    w_in_place(&mut out, pi.lis_length())?;
    Ok(out)
}

/// `D_h(p, q) -> D_h(p - 1, q + 1)`; requires `p >= 1` and `q < h`.
pub fn map_v(pi: &TwoBlockView) -> Result<TwoBlockView> {
    let mut out = pi.clone();
    v_in_place(&mut out, pi.lis_length())?;
    Ok(out)
}

/// W on a view whose LIS is known to be `h`.
fn w_in_place(pi: &mut TwoBlockView, h: usize) -> Result<()> {
    let (p, q) = (pi.p(), pi.q());
    if p >= h || q == 0 {
        return Err(Error::Domain(format!("W needs p < h and q >= 1, got p = {p}, q = {q}, h = {h}")));
    }
    let j = ridges_given_lis(pi, h)?.omega;
    // y_{h-j} sits at left-to-right offset q - (h - j) of the second block.
    let (first, second) = pi.blocks_mut();
    let moved = second.remove(q - (h - j));
    first.insert(j, moved);
    Ok(())
}

/// V on a view whose LIS is known to be `h`.
fn v_in_place(pi: &mut TwoBlockView, h: usize) -> Result<()> {
    let (p, q) = (pi.p(), pi.q());
    if p == 0 || q >= h {
        return Err(Error::Domain(format!("V needs p >= 1 and q < h, got p = {p}, q = {q}, h = {h}")));
    }
    // j >= h - q >= 1 here, so x_j exists.
    let j = ridges_given_lis(pi, h)?.nu;
    let (first, second) = pi.blocks_mut();
    let moved = first.remove(j - 1);
    second.insert(q + j - h, moved);
    Ok(())
}

fn apply_on_blocks(
    pi: &BlockPermutation,
    index: usize,
    map: MapName,
    times: usize,
    mut trace: Option<&mut BijectionTrace>,
) -> Result<BlockPermutation> {
    let (pattern, values) = standardize(pi, index)?;
    let mut view = TwoBlockView::try_from(&pattern)?;
    let h = view.lis_length();
    let mut current = pi.clone();
    let restore = |blocks: &[u32]| -> Vec<u32> { blocks.iter().map(|&r| values.apply(r).expect("rank in range")).collect() };
    for step in 0..times {
        match map {
            MapName::W => w_in_place(&mut view, h)?,
            MapName::V => v_in_place(&mut view, h)?,
            _ => unreachable!("only W and V act on block pairs"),
        }
        // Without a trace only the final image needs its values restored.
        if trace.is_none() && step + 1 < times {
            continue;
        }
        let next = current.with_adjacent_blocks_unchecked(index, &restore(view.first()), &restore(view.second()));
        match trace.as_deref_mut() {
            Some(t) => t.steps.push(TraceStep {
                map,
                block: index,
                before: std::mem::replace(&mut current, next.clone()),
                after: next,
            }),
            None => current = next,
        }
    }
    Ok(current)
}

fn swap_impl(pi: &BlockPermutation, index: usize, trace: Option<&mut BijectionTrace>) -> Result<BlockPermutation> {
    check_adjacent(pi, index)?;
    let left = pi.comp().parts()[index - 1];
    let right = pi.comp().parts()[index];
    if left < right {
        apply_on_blocks(pi, index, MapName::W, right - left, trace)
    } else {
        apply_on_blocks(pi, index, MapName::V, left - right, trace)
    }
}

/// Exchanges the lengths of blocks `index` and `index + 1`, keeping the LIS.
pub fn swap_adjacent(pi: &BlockPermutation, index: usize) -> Result<BlockPermutation> {
    swap_impl(pi, index, None)
}

/// [`swap_adjacent`] together with one trace step per application of W or V.
///
/// W is applied `a_{l+1} - a_l` times when the right block is longer, V
/// `a_l - a_{l+1}` times when it is shorter, each within `D_r` where `r` is
/// the LIS of the two blocks alone.
pub fn swap_adjacent_traced(pi: &BlockPermutation, index: usize) -> Result<(BlockPermutation, BijectionTrace)> {
    let mut trace = BijectionTrace::default();
    let out = swap_impl(pi, index, Some(&mut trace))?;
    Ok((out, trace))
}

/// Rearranges the block lengths into `target` by adjacent swaps.
///
/// Schedule: for each position from the left, the nearest block to its
/// right with the wanted length is bubbled into place.
pub fn reorder_blocks(pi: &BlockPermutation, target: &Composition) -> Result<(BlockPermutation, BijectionTrace)> {
    let mut trace = BijectionTrace::default();
    let out = reorder_impl(pi, target, Some(&mut trace))?;
    Ok((out, trace))
}

/// [`reorder_blocks`] without recording a trace.
pub fn reorder_blocks_untraced(pi: &BlockPermutation, target: &Composition) -> Result<BlockPermutation> {
    reorder_impl(pi, target, None)
}

fn reorder_impl(
    pi: &BlockPermutation,
    target: &Composition,
    mut trace: Option<&mut BijectionTrace>,
) -> Result<BlockPermutation> {
    if !pi.comp().is_rearrangement_of(target) {
        return Err(Error::NotRearrangement {
            source_comp: pi.comp().to_string(),
            target: target.to_string(),
        });
    }
    let mut current = pi.clone();
    for pos in 0..target.len() {
        let want = target.parts()[pos];
        if current.comp().parts()[pos] == want {
            continue;
        }
        let from = (pos + 1..target.len())
            .find(|&i| current.comp().parts()[i] == want)
            .expect("rearrangement contains the part");
        // Bubble block `from` (0-based) leftwards to `pos`.
        for i in (pos..from).rev() {
            current = swap_impl(&current, i + 1, trace.as_deref_mut())?;
        }
    }
    debug_assert_eq!(current.comp(), target);
    Ok(current)
}

/// One W step on blocks `index`, `index + 1`; requires `a_{l+1} >= a_l + 2`.
///
/// Injective into the composition with `(a_l + 1, a_{l+1} - 1)` at those
/// positions, but not onto it.
pub fn transfer_step(pi: &BlockPermutation, index: usize) -> Result<BlockPermutation> {
    transfer_impl(pi, index, None)
}

pub fn transfer_step_traced(pi: &BlockPermutation, index: usize) -> Result<(BlockPermutation, BijectionTrace)> {
    let mut trace = BijectionTrace::default();
    let out = transfer_impl(pi, index, Some(&mut trace))?;
    Ok((out, trace))
}

fn transfer_impl(pi: &BlockPermutation, index: usize, trace: Option<&mut BijectionTrace>) -> Result<BlockPermutation> {
    check_adjacent(pi, index)?;
    let left = pi.comp().parts()[index - 1];
    let right = pi.comp().parts()[index];
    if right < left + 2 {
        return Err(Error::Domain(format!(
            "transfer needs a_{} >= a_{} + 2, got {right} and {left}",
            index + 1,
            index
        )));
    }
    apply_on_blocks(pi, index, MapName::W, 1, trace)
}

/// Picks the next unit transfer for a descending sequence `a` that strictly
/// majorizes `b`: returns `(i, j)`, 0-based, so that moving one unit from
/// `a[i]` to `a[j]` keeps `a` descending and still majorizing `b`.
fn next_transfer(a: &[usize], b: &[usize]) -> Option<(usize, usize)> {
    let i0 = a.iter().zip(b).position(|(x, y)| x != y)?;
    let j0 = (i0 + 1..a.len()).find(|&j| a[j] < b[j])?;
    let i = (i0..a.len()).take_while(|&i| a[i] == a[i0]).last()?;
    let j = (0..=j0).rev().take_while(|&j| a[j] == a[j0]).last()?;
    Some((i, j))
}

/// Injection `D_h(comp) -> D_h(target)` whenever `comp` majorizes `target`.
///
/// Blocks are sorted ascending, then single-unit transfers are applied one
/// at a time (each between the smallest block of the larger value class
/// and the largest block of the smaller value class that are still off
/// target), re-sorting after each, and finally the blocks are arranged in
/// `target`'s order.
pub fn majorize_inject(pi: &BlockPermutation, target: &Composition) -> Result<(BlockPermutation, BijectionTrace)> {
    let mut trace = BijectionTrace::default();
    let out = inject_impl(pi, target, Some(&mut trace))?;
    Ok((out, trace))
}

/// [`majorize_inject`] without recording a trace.
pub fn majorize_inject_untraced(pi: &BlockPermutation, target: &Composition) -> Result<BlockPermutation> {
    inject_impl(pi, target, None)
}

fn inject_impl(
    pi: &BlockPermutation,
    target: &Composition,
    mut trace: Option<&mut BijectionTrace>,
) -> Result<BlockPermutation> {
    pi.comp().majorizes(target).map_err(|index| Error::NotMajorized {
        source_comp: pi.comp().to_string(),
        target: target.to_string(),
        index,
    })?;
    let n = target.len();
    let wanted: Vec<usize> = target.sorted_descending().parts().to_vec();
    let mut current = reorder_impl(pi, &pi.comp().sorted_ascending(), trace.as_deref_mut())?;
    loop {
        let ascending = current.comp().parts().to_vec();
        let descending: Vec<usize> = ascending.iter().rev().copied().collect();
        let Some((i, j)) = next_transfer(&descending, &wanted) else {
            break;
        };
        let from = n - 1 - i;
        let to = n - 1 - j;
        // Park the donor block right after the receiver.
        let mut arranged = ascending.clone();
        let donor = arranged.remove(from);
        arranged.insert(to + 1, donor);
        let next = reorder_impl(&current, &Composition::new(arranged), trace.as_deref_mut())?;
        let next = transfer_impl(&next, to + 1, trace.as_deref_mut())?;
        current = reorder_impl(&next, &next.comp().sorted_ascending(), trace.as_deref_mut())?;
    }
    if current.comp().sorted_descending().parts() != wanted.as_slice() {
        return Err(Error::Internal(format!(
            "transfer schedule stopped at {} instead of {}",
            current.comp(),
            target
        )));
    }
    reorder_impl(&current, target, trace)
}

/// `L_{k+2}(k+1, a_2, ...) -> L_{k+2}(k, a_2, ...)`: drops the maximum from the end of block 1.
pub fn delete_max(pi: &BlockPermutation, k: usize) -> Result<BlockPermutation> {
    let first = pi.comp().part(1).unwrap_or(0);
    if pi.block_count() == 0 || first != k + 1 {
        return Err(Error::Domain(format!(
            "delete_max needs a first block of length {}, got {}",
            k + 1,
            pi.comp()
        )));
    }
    let lis = pi.lis_length();
    if lis > k + 1 {
        return Err(Error::Domain(format!("{pi} contains 12...{}", k + 2)));
    }
    let n = pi.size() as u32;
    let mut values = pi.values().to_vec();
    if values[k] != n {
        return Err(Error::Internal(format!(
            "position {} of block 1 holds {}, not the maximum {n}",
            k + 1,
            values[k]
        )));
    }
    values.remove(k);
    BlockPermutation::new(pi.comp().with_part(1, k), values)
}

/// Inverse of [`delete_max`]: appends `N + 1` to a first block of length `k`.
pub fn insert_max(pi: &BlockPermutation, k: usize) -> Result<BlockPermutation> {
    let first = pi.comp().part(1).unwrap_or(0);
    if pi.block_count() == 0 || first != k {
        return Err(Error::Domain(format!(
            "insert_max needs a first block of length {k}, got {}",
            pi.comp()
        )));
    }
    if pi.lis_length() > k + 1 {
        return Err(Error::Domain(format!("{pi} contains 12...{}", k + 2)));
    }
    let mut values = pi.values().to_vec();
    values.insert(k, pi.size() as u32 + 1);
    BlockPermutation::new(pi.comp().with_part(1, k + 1), values)
}

fn bring_to_front(comp: &Composition, index: usize) -> Composition {
    let mut parts = comp.parts().to_vec();
    let part = parts.remove(index - 1);
    parts.insert(0, part);
    Composition::new(parts)
}

/// [`delete_max`] on block `index` instead of block 1.
///
/// Derived, not primitive: the block is moved to the front with
/// [`reorder_blocks`], shortened, and moved back.
pub fn delete_max_in_block(pi: &BlockPermutation, index: usize, k: usize) -> Result<(BlockPermutation, BijectionTrace)> {
    edit_block(pi, index, k, MapName::DeleteMax)
}

/// [`insert_max`] on block `index`; see [`delete_max_in_block`].
pub fn insert_max_in_block(pi: &BlockPermutation, index: usize, k: usize) -> Result<(BlockPermutation, BijectionTrace)> {
    edit_block(pi, index, k, MapName::InsertMax)
}

fn edit_block(pi: &BlockPermutation, index: usize, k: usize, map: MapName) -> Result<(BlockPermutation, BijectionTrace)> {
    if index == 0 || index > pi.block_count() {
        return Err(Error::BlockIndexOutOfRange {
            index,
            blocks: pi.block_count(),
        });
    }
    let (front, mut trace) = reorder_blocks(pi, &bring_to_front(pi.comp(), index))?;
    let (edited, new_len) = match map {
        MapName::DeleteMax => (delete_max(&front, k)?, k),
        MapName::InsertMax => (insert_max(&front, k)?, k + 1),
        _ => unreachable!("only max edits change block lengths"),
    };
    trace.steps.push(TraceStep {
        map,
        block: 1,
        before: front,
        after: edited.clone(),
    });
    let (out, steps) = reorder_blocks(&edited, &pi.comp().with_part(index, new_len))?;
    trace.extend(steps);
    Ok((out, trace))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bp(s: &str) -> BlockPermutation {
        s.parse().unwrap()
    }

    fn view(s: &str) -> TwoBlockView {
        TwoBlockView::try_from(&bp(s)).unwrap()
    }

    #[test]
    fn ridge_examples() {
        assert_eq!(ridge_indices(&view("1368|2457"), 5).unwrap(), RidgePair { nu: 1, omega: 2, h: 5 });
        assert_eq!(ridge_indices(&view("236|14578"), 6).unwrap().omega, 2);
        let r = ridge_indices(&view("123|45"), 5).unwrap();
        assert_eq!((r.nu, r.omega), (3, 3));
        assert!(ridge_indices(&view("236|14578"), 5).is_err());
    }

    #[test]
    fn w_examples() {
        assert_eq!(map_w(&view("236|14578")).unwrap(), view("2346|1578"));
        assert_eq!(map_w(&view("25|1346")).unwrap(), view("235|146"));
        assert_eq!(map_w(&view("235|146")).unwrap(), view("2356|14"));
    }

    #[test]
    fn v_examples() {
        assert_eq!(map_v(&view("2346|1578")).unwrap(), view("236|14578"));
        assert_eq!(ridge_indices(&view("2356|14"), 4).unwrap().nu, 4);
        assert_eq!(map_v(&view("2356|14")).unwrap(), view("235|146"));
        assert_eq!(map_v(&view("235|146")).unwrap(), view("25|1346"));
    }

    #[test]
    fn w_v_domains() {
        // p = h
        assert!(map_w(&view("123|")).is_err());
        assert!(map_w(&view("12|")).is_err());
        assert_eq!(map_w(&view("12|3")).unwrap(), view("123|"));
        // q = h
        assert!(map_v(&view("|123")).is_err());
        assert!(map_v(&view("3|12")).is_err());
        assert!(map_v(&view("13|2")).is_ok());
    }

    #[test]
    fn swap_example_and_trace() {
        let (out, trace) = swap_adjacent_traced(&bp("1|37|2458|6"), 2).unwrap();
        assert_eq!(out, bp("1|3478|25|6"));
        assert_eq!(trace.len(), 2);
        assert_eq!(trace.steps[0].after, bp("1|347|258|6"));
        assert!(trace.is_connected());
        assert_eq!(swap_adjacent(&out, 2).unwrap(), bp("1|37|2458|6"));
        assert_eq!(
            trace.to_json(),
            r#"[{"map":"W","block":2,"before":"1|37|2458|6","after":"1|347|258|6"},{"map":"W","block":2,"before":"1|347|258|6","after":"1|3478|25|6"}]"#
        );
    }

    #[test]
    fn swap_equal_parts_is_identity() {
        let pi = bp("14|23");
        assert_eq!(swap_adjacent(&pi, 1).unwrap(), pi);
        assert!(swap_adjacent(&pi, 2).is_err());
    }

    #[test]
    fn swap_with_empty_block() {
        let pi = bp("|123|4");
        let out = swap_adjacent(&pi, 1).unwrap();
        assert_eq!(out.comp().parts(), &[3, 0, 1]);
        assert_eq!(out, bp("123||4"));
        assert_eq!(swap_adjacent(&out, 1).unwrap(), pi);
    }

    #[test]
    fn reorder_examples() {
        let (out, trace) = reorder_blocks(&bp("1|37|2458|6"), &Composition::new(vec![1, 4, 2, 1])).unwrap();
        assert_eq!(out, bp("1|3478|25|6"));
        assert_eq!(trace.len(), 2);

        let pi = bp("13|24");
        let (out, trace) = reorder_blocks(&pi, pi.comp()).unwrap();
        assert_eq!(out, pi);
        assert!(trace.is_empty());

        let (out, trace) = reorder_blocks(&bp("236|14578"), &Composition::new(vec![5, 3])).unwrap();
        assert_eq!(out.comp().parts(), &[5, 3]);
        assert_eq!(out.lis_length(), 6);
        assert_eq!(trace.len(), 2);
        let twice = map_w(&map_w(&view("236|14578")).unwrap()).unwrap();
        assert_eq!(out, twice.to_block_permutation());

        assert!(matches!(
            reorder_blocks(&pi, &Composition::new(vec![3, 1])),
            Err(Error::NotRearrangement { .. })
        ));
    }

    #[test]
    fn transfer_examples() {
        assert_eq!(transfer_step(&bp("236|14578"), 1).unwrap(), bp("2346|1578"));
        let out = transfer_step(&bp("2|134"), 1).unwrap();
        assert_eq!(out, bp("23|14"));
        assert_eq!(out.lis_length(), 3);
        assert!(transfer_step(&bp("12|345"), 1).is_err());
    }

    #[test]
    fn majorize_examples() {
        let pi = bp("1234|5");
        let (out, _) = majorize_inject(&pi, &Composition::new(vec![3, 2])).unwrap();
        assert_eq!(out.comp().parts(), &[3, 2]);
        assert_eq!(out.lis_length(), pi.lis_length());

        let pi = bp("13|24");
        let (out, trace) = majorize_inject(&pi, pi.comp()).unwrap();
        assert_eq!(out, pi);
        assert!(trace.is_empty());

        let err = majorize_inject(&bp("12|34"), &Composition::new(vec![3, 1])).unwrap_err();
        assert!(matches!(err, Error::NotMajorized { index: 1, .. }));
    }

    #[test]
    fn next_transfer_keeps_order() {
        assert_eq!(next_transfer(&[4, 1], &[3, 2]), Some((0, 1)));
        assert_eq!(next_transfer(&[3, 3, 0], &[2, 2, 2]), Some((1, 2)));
        assert_eq!(next_transfer(&[2, 2], &[2, 2]), None);
    }

    #[test]
    fn max_examples() {
        assert_eq!(delete_max(&bp("12"), 1).unwrap(), bp("1"));
        assert_eq!(delete_max(&bp("24|13"), 1).unwrap(), bp("2|13"));
        assert_eq!(insert_max(&bp("2|13"), 1).unwrap(), bp("24|13"));
        assert_eq!(insert_max(&bp("1"), 1).unwrap(), bp("12"));

        assert!(delete_max(&bp("2|13"), 1).is_err());
        assert!(delete_max(&bp("12|34"), 1).is_err());
        assert_eq!(delete_max(&bp("34|12"), 1).unwrap(), bp("3|12"));
        assert!(insert_max(&bp("12|3"), 1).is_err());
    }

    #[test]
    fn max_in_other_block() {
        let pi = bp("2|14|3");
        let (out, trace) = insert_max_in_block(&pi, 3, 1).unwrap();
        assert_eq!(out.comp().parts(), &[1, 2, 2]);
        assert!(out.lis_length() <= 2);
        assert!(trace.is_connected());
        let (back, _) = delete_max_in_block(&out, 3, 1).unwrap();
        assert_eq!(back, pi);
    }
}
