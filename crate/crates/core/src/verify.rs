//! Exhaustive verification suites. Each check enumerates every case up to a
//! size bound and reports the number of cases examined, or the first
//! counterexample found.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;

use crate::bijections::{
    delete_max, delete_max_in_block, insert_max, majorize_inject, majorize_inject_untraced, map_v, map_w,
    reorder_blocks, reorder_blocks_untraced, ridge_indices, swap_adjacent, transfer_step,
};
use crate::enumeration::{
    catalan_triangle, catalan_triangle_factorial, count_d_two, gen_ascending_capped, gen_l_capped,
    lis_distribution_capped,
};
use crate::error::Error;
use crate::perm::{interval_lis_length, BlockPermutation, Composition, TwoBlockView};
use crate::tableaux::{
    hook_count, lift_to_rectangular, lift_to_skew, perm_to_skew_tableau, perm_to_tableau, skew_count, Shape,
    SkewShape,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    All,
    WV,
    Swap,
    Concavity,
    Catalan,
    Tableaux,
}

impl Suite {
    pub const EACH: [Suite; 5] = [Suite::WV, Suite::Swap, Suite::Concavity, Suite::Catalan, Suite::Tableaux];

    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::WV => "w-v",
            Suite::Swap => "swap",
            Suite::Concavity => "concavity",
            Suite::Catalan => "catalan",
            Suite::Tableaux => "tableaux",
        }
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        std::iter::once(Suite::All)
            .chain(Suite::EACH)
            .find(|suite| suite.name() == s)
            .ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub suite: &'static str,
    pub check: &'static str,
    pub cases: u64,
    pub counterexample: Option<String>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.counterexample {
            None => write!(f, "PASS {}/{}: {} cases", self.suite, self.check, self.cases),
            Some(c) => write!(f, "FAIL {}/{}: {c}", self.suite, self.check),
        }
    }
}

type Outcome = Result<u64, String>;

fn run_check<I: Sync, F>(suite: &'static str, check: &'static str, items: &[I], f: F) -> CheckReport
where
    F: Fn(&I) -> Outcome + Send + Sync,
{
    let outcomes: Vec<Outcome> = items.par_iter().map(f).collect();
    let mut cases = 0;
    for o in outcomes {
        match o {
            Ok(n) => cases += n,
            Err(c) => {
                return CheckReport {
                    suite,
                    check,
                    cases,
                    counterexample: Some(c),
                }
            }
        }
    }
    CheckReport {
        suite,
        check,
        cases,
        counterexample: None,
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: Error) -> String {
    e.to_string()
}

/// Enumeration bound used by the suites; large enough for every size they visit.
const CAP: usize = 14;

fn ascending(comp: &Composition) -> Vec<BlockPermutation> {
    gen_ascending_capped(comp, CAP.max(comp.total())).expect("within cap").collect()
}

/// Compositions of `total` with positive parts at most `max_part`.
pub fn compositions(total: usize, max_part: usize) -> Vec<Composition> {
    fn go(rest: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if rest == 0 {
            out.push(Composition::new(prefix.clone()));
            return;
        }
        for a in 1..=rest.min(max_part) {
            prefix.push(a);
            go(rest - a, max_part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(total, max_part, &mut Vec::new(), &mut out);
    out
}

/// Compositions of `total` into exactly `len` nonnegative parts.
pub fn weak_compositions(total: usize, len: usize) -> Vec<Composition> {
    fn go(rest: usize, slots: usize, prefix: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if slots == 0 {
            if rest == 0 {
                out.push(Composition::new(prefix.clone()));
            }
            return;
        }
        for a in 0..=rest {
            prefix.push(a);
            go(rest - a, slots - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(total, len, &mut Vec::new(), &mut out);
    out
}

/// Weakly decreasing sequences of `len` nonnegative parts summing to `total`.
pub fn padded_partitions(total: usize, len: usize) -> Vec<Composition> {
    fn go(rest: usize, slots: usize, bound: usize, prefix: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if slots == 0 {
            if rest == 0 {
                out.push(Composition::new(prefix.clone()));
            }
            return;
        }
        for a in (0..=rest.min(bound)).rev() {
            prefix.push(a);
            go(rest - a, slots - 1, a, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(total, len, total, &mut Vec::new(), &mut out);
    out
}

/// Distinct rearrangements of `comp`.
pub fn rearrangements(comp: &Composition) -> Vec<Composition> {
    let mut parts = comp.sorted_ascending().parts().to_vec();
    let mut out = vec![Composition::new(parts.clone())];
    // Lexicographic next-permutation over the multiset.
    loop {
        let Some(i) = (1..parts.len()).rev().find(|&i| parts[i - 1] < parts[i]) else {
            return out;
        };
        let j = (i..parts.len()).rev().find(|&j| parts[j] > parts[i - 1]).expect("pivot exists");
        parts.swap(i - 1, j);
        parts[i..].reverse();
        out.push(Composition::new(parts.clone()));
    }
}

fn two_block_cases(max_total: usize) -> Vec<Composition> {
    (0..=max_total)
        .flat_map(|n| (0..=n).map(move |p| Composition::new(vec![p, n - p])))
        .collect()
}

fn interval_profile(values: &[u32]) -> Vec<usize> {
    let n = values.len() as u32;
    let mut out = Vec::new();
    for lo in 1..=n {
        for hi in lo..=n {
            out.push(interval_lis_length(values, lo, hi));
        }
    }
    out
}

fn check_w_v_case(comp: &Composition, max_h: usize) -> Outcome {
    let mut cases = 0;
    for pi in ascending(comp) {
        let view = TwoBlockView::try_from(&pi).map_err(err)?;
        let h = pi.lis_length();
        if h > max_h {
            continue;
        }
        cases += 1;
        if view.p() < h && view.q() >= 1 {
            let w = map_w(&view).map_err(err)?;
            let back = map_v(&w).map_err(err)?;
            ensure(back == view, || format!("V(W({pi})) = {back}"))?;
        }
        if view.p() >= 1 && view.q() < h {
            let v = map_v(&view).map_err(err)?;
            let back = map_w(&v).map_err(err)?;
            ensure(back == view, || format!("W(V({pi})) = {back}"))?;
        }
    }
    Ok(cases)
}

fn check_w_structure(comp: &Composition) -> Outcome {
    let mut cases = 0;
    for pi in ascending(comp) {
        let view = TwoBlockView::try_from(&pi).map_err(err)?;
        let h = pi.lis_length();
        if view.p() >= h || view.q() == 0 {
            continue;
        }
        cases += 1;
        let ridge = ridge_indices(&view, h).map_err(err)?;
        let w = map_w(&view).map_err(err)?;
        ensure(w.lis_length() == h, || format!("W({pi}) = {w} changes the LIS"))?;
        let j = ridge.omega;
        let moved = view.y(h - j);
        let expected = if j == 0 { 1 } else { view.x(j) + 1 };
        ensure(moved == expected, || format!("{pi}: moved element {moved} != {expected}"))?;
        let after = ridge_indices(&w, h).map_err(err)?;
        ensure(after.nu == j + 1, || format!("nu(W({pi})) = {} != omega + 1 = {}", after.nu, j + 1))?;
        let wp = w.to_block_permutation();
        ensure(interval_profile(pi.values()) == interval_profile(wp.values()), || {
            format!("interval LIS differs between {pi} and {w}")
        })?;
    }
    Ok(cases)
}

/// `V(W(pi)) = pi` and `W(V(pi)) = pi` for two-block `pi` with `p + q <= max_total`, LIS `<= max_h`.
pub fn w_v_inverse(max_total: usize, max_h: usize) -> CheckReport {
    run_check("w-v", "inverse", &two_block_cases(max_total), |c| check_w_v_case(c, max_h))
}

/// W keeps the LIS, every interval-restricted LIS and moves the expected element.
pub fn w_structure(max_total: usize) -> CheckReport {
    run_check("w-v", "structure", &two_block_cases(max_total), check_w_structure)
}

/// Inverse property and LIS/ridge/interval structure of W and V.
pub fn suite_w_v(max_size: usize) -> Vec<CheckReport> {
    vec![w_v_inverse(max_size, usize::MAX), w_structure(max_size)]
}

fn symmetric_cases(max_size: usize) -> Vec<Composition> {
    let mut comps: Vec<Composition> = (0..=max_size).flat_map(|n| compositions(n, 6)).collect();
    // A few shapes with empty blocks.
    for n in 0..=max_size.min(6) {
        for len in 2..=3 {
            comps.extend(weak_compositions(n, len).into_iter().filter(|c| c.parts().contains(&0)));
        }
    }
    comps
}

fn check_swap_involution(comp: &Composition) -> Outcome {
    let mut cases = 0;
    for pi in ascending(comp) {
        for l in 1..comp.len() {
            let once = swap_adjacent(&pi, l).map_err(err)?;
            ensure(once.lis_length() == pi.lis_length(), || format!("swap {l} of {pi} changes the LIS"))?;
            let twice = swap_adjacent(&once, l).map_err(err)?;
            ensure(twice == pi, || format!("swap {l} twice maps {pi} to {twice}"))?;
            cases += 1;
        }
    }
    Ok(cases)
}

fn check_reorder_bijective(comp: &Composition, target: &Composition) -> Outcome {
    let source = ascending(comp);
    let mut image = HashSet::with_capacity(source.len());
    for (idx, pi) in source.iter().enumerate() {
        let out = reorder_blocks_untraced(pi, target).map_err(err)?;
        if idx == 0 {
            let (traced, trace) = reorder_blocks(pi, target).map_err(err)?;
            ensure(traced == out && trace.is_connected(), || format!("traced reorder of {pi} disagrees"))?;
        }
        ensure(out.comp() == target, || format!("{pi} reordered to {out}"))?;
        ensure(out.lis_length() == pi.lis_length(), || format!("reorder of {pi} changes the LIS"))?;
        ensure(image.insert(out.clone()), || format!("collision at {out} from {pi}"))?;
    }
    let expected: HashSet<BlockPermutation> = ascending(target).into_iter().collect();
    ensure(image == expected, || format!("image of {comp} is not all of {target}"))?;
    Ok(source.len() as u64)
}

fn check_symmetric_counts(comp: &Composition) -> Outcome {
    let base = lis_distribution_capped(comp, CAP).map_err(err)?;
    let others = rearrangements(comp);
    for other in &others {
        let hist = lis_distribution_capped(other, CAP).map_err(err)?;
        ensure(hist == base, || format!("#D_h{comp} = {base:?} but #D_h{other} = {hist:?}"))?;
    }
    Ok(others.len() as u64)
}

fn max_cases(max_size: usize) -> Vec<(usize, Composition)> {
    let mut out = Vec::new();
    for k in 0..=3 {
        for n in k + 1..=max_size {
            for tail in compositions(n - (k + 1), k + 1) {
                let mut parts = vec![k + 1];
                parts.extend_from_slice(tail.parts());
                out.push((k, Composition::new(parts)));
            }
        }
    }
    out
}

fn check_max_bijection(k: usize, comp: &Composition) -> Outcome {
    let mut image = BTreeSet::new();
    for pi in gen_l_capped(k, comp, CAP).map_err(err)? {
        let down = delete_max(&pi, k).map_err(err)?;
        let up = insert_max(&down, k).map_err(err)?;
        ensure(up == pi, || format!("insert_max(delete_max({pi})) = {up}"))?;
        image.insert(down);
    }
    let smaller = comp.with_part(1, k);
    let expected: BTreeSet<_> = gen_l_capped(k, &smaller, CAP).map_err(err)?.collect();
    ensure(image == expected, || format!("delete_max is not onto L_{}{smaller}", k + 2))?;
    Ok(image.len() as u64)
}

fn equivalence_cases(max_k: usize, max_n: usize) -> Vec<(usize, Composition)> {
    let mut out = Vec::new();
    for k in 0..=max_k {
        for n in 1..=max_n {
            for mask in 0..(1u32 << n) {
                let parts = (0..n).map(|i| k + ((mask >> i) & 1) as usize).collect();
                out.push((k, Composition::new(parts)));
            }
        }
    }
    out
}

/// The constructive map `L_{k+2}(comp) -> L_{k+2}(k, ..., k)` deleting a
/// maximum from every block of length `k + 1`.
pub fn flatten_to_k(pi: &BlockPermutation, k: usize) -> crate::error::Result<BlockPermutation> {
    let mut current = pi.clone();
    for index in 1..=pi.block_count() {
        if current.comp().parts()[index - 1] == k + 1 {
            current = delete_max_in_block(&current, index, k)?.0;
        }
    }
    Ok(current)
}

fn check_equivalence(k: usize, comp: &Composition) -> Outcome {
    let flat = Composition::new(vec![k; comp.len()]);
    let mut image = BTreeSet::new();
    for pi in gen_l_capped(k, comp, CAP).map_err(err)? {
        let out = flatten_to_k(&pi, k).map_err(err)?;
        ensure(out.lis_length() <= k + 1, || format!("{pi} maps outside L_{}", k + 2))?;
        ensure(image.insert(out.clone()), || format!("collision at {out}"))?;
    }
    let expected: BTreeSet<_> = gen_l_capped(k, &flat, CAP).map_err(err)?.collect();
    ensure(image == expected, || format!("L_{}{comp} does not map onto L_{}{flat}", k + 2, k + 2))?;
    Ok(image.len() as u64)
}

/// Adjacent swaps, reordering, symmetry of counts, the max-element bijection
/// and the `{k, k+1}` equivalence.
pub fn suite_swap(max_size: usize) -> Vec<CheckReport> {
    vec![
        swap_involution(max_size),
        reorder_bijective(max_size),
        symmetric_counts(max_size),
        max_bijection(max_size),
        k_equivalence(2, 3),
    ]
}

/// Every adjacent swap is an LIS-preserving involution, over compositions of
/// `N <= max_size` with parts at most 6.
pub fn swap_involution(max_size: usize) -> CheckReport {
    run_check("swap", "involution", &symmetric_cases(max_size), check_swap_involution)
}

/// `reorder_blocks` maps each composition onto its sorted rearrangements
/// bijectively, compared as image sets.
pub fn reorder_bijective(max_size: usize) -> CheckReport {
    let reorder: Vec<(Composition, Composition)> = symmetric_cases(max_size)
        .iter()
        .flat_map(|c| [(c.clone(), c.sorted_ascending()), (c.clone(), c.sorted_descending())])
        .collect();
    run_check("swap", "reorder-bijective", &reorder, |(c, t)| check_reorder_bijective(c, t))
}

/// The LIS distribution is the same for every rearrangement of a composition.
pub fn symmetric_counts(max_size: usize) -> CheckReport {
    let representatives: Vec<Composition> = symmetric_cases(max_size)
        .into_iter()
        .filter(|c| c.sorted_ascending() == *c)
        .collect();
    run_check("swap", "symmetric-counts", &representatives, check_symmetric_counts)
}

/// `delete_max` is a bijection `L_{k+2}(k+1, ...) -> L_{k+2}(k, ...)` with inverse `insert_max`.
pub fn max_bijection(max_size: usize) -> CheckReport {
    run_check("swap", "max-bijection", &max_cases(max_size), |(k, c)| check_max_bijection(*k, c))
}

/// Compositions with parts in `{k, k+1}` all map bijectively onto `L_{k+2}(k, ..., k)`.
pub fn k_equivalence(max_k: usize, max_n: usize) -> CheckReport {
    run_check("swap", "k-equivalence", &equivalence_cases(max_k, max_n), |(k, c)| check_equivalence(*k, c))
}

/// Pairs `(a, b)` of distinct weakly decreasing sequences with `a` majorizing `b`.
pub fn majorization_pairs(max_size: usize) -> Vec<(Composition, Composition)> {
    let mut out = Vec::new();
    for total in 1..=max_size {
        for len in 2..=total {
            let parts = padded_partitions(total, len);
            for a in &parts {
                for b in &parts {
                    if a != b && a.majorizes(b).is_ok() {
                        out.push((a.clone(), b.clone()));
                    }
                }
            }
        }
    }
    out
}

fn check_concave_counts(a: &Composition, b: &Composition, hists: &HashMap<Composition, Vec<u64>>) -> Outcome {
    let (ha, hb) = (&hists[a], &hists[b]);
    for (h, (x, y)) in ha.iter().zip(hb).enumerate() {
        ensure(x <= y, || format!("#D_{h}{a} = {x} > #D_{h}{b} = {y}"))?;
    }
    Ok(1)
}

/// LIS distributions of every composition appearing in `pairs`, computed once each.
fn distributions(pairs: &[(Composition, Composition)]) -> Result<HashMap<Composition, Vec<u64>>, String> {
    let distinct: BTreeSet<&Composition> = pairs.iter().flat_map(|(a, b)| [a, b]).collect();
    distinct
        .into_par_iter()
        .map(|c| lis_distribution_capped(c, CAP).map(|h| (c.clone(), h)).map_err(err))
        .collect()
}

fn check_majorize_inject(a: &Composition, b: &Composition) -> Outcome {
    let source = ascending(a);
    let mut image = HashSet::with_capacity(source.len());
    for (idx, pi) in source.iter().enumerate() {
        let out = majorize_inject_untraced(pi, b).map_err(err)?;
        if idx == 0 {
            let (traced, trace) = majorize_inject(pi, b).map_err(err)?;
            ensure(traced == out && trace.is_connected(), || format!("traced injection of {pi} disagrees"))?;
        }
        ensure(out.comp() == b, || format!("{pi} injected to {out}, not onto {b}"))?;
        ensure(out.lis_length() == pi.lis_length(), || format!("injection of {pi} changes the LIS"))?;
        ensure(image.insert(out.clone()), || format!("collision at {out} from {pi}"))?;
    }
    Ok(source.len() as u64)
}

fn check_transfer_inject(comp: &Composition) -> Outcome {
    let mut image = HashSet::new();
    let mut cases = 0;
    for pi in ascending(comp) {
        let out = transfer_step(&pi, 1).map_err(err)?;
        ensure(out.lis_length() == pi.lis_length(), || format!("transfer of {pi} changes the LIS"))?;
        ensure(image.insert(out.clone()), || format!("collision at {out} from {pi}"))?;
        cases += 1;
    }
    Ok(cases)
}

/// Schur-concavity of the counts and injectivity of the transfer maps.
pub fn suite_concavity(max_size: usize) -> Vec<CheckReport> {
    vec![concave_counts(max_size), transfer_injective(max_size), majorize_injective(max_size)]
}

/// `#D_h(a) <= #D_h(b)` for every `h` whenever `a` majorizes `b`, `N <= max_size`.
pub fn concave_counts(max_size: usize) -> CheckReport {
    let pairs = majorization_pairs(max_size);
    match distributions(&pairs) {
        Ok(hists) => run_check("concavity", "counts", &pairs, |(a, b)| check_concave_counts(a, b, &hists)),
        Err(c) => CheckReport {
            suite: "concavity",
            check: "counts",
            cases: 0,
            counterexample: Some(c),
        },
    }
}

/// A single transfer step on `(p, q)` with `q >= p + 2` is injective and keeps the LIS.
pub fn transfer_injective(max_size: usize) -> CheckReport {
    let transfers: Vec<Composition> = two_block_cases(max_size)
        .into_iter()
        .filter(|c| c.parts()[1] >= c.parts()[0] + 2)
        .collect();
    run_check("concavity", "transfer-injective", &transfers, check_transfer_inject)
}

/// `majorize_inject` is collision-free and LIS-preserving on every comparable pair.
pub fn majorize_injective(max_size: usize) -> CheckReport {
    let pairs = majorization_pairs(max_size);
    run_check("concavity", "majorize-injective", &pairs, |(a, b)| check_majorize_inject(a, b))
}

fn check_catalan_cell(h: usize, p: usize, q: usize) -> Outcome {
    let brute = lis_distribution_capped(&Composition::new(vec![p, q]), CAP).map_err(err)?;
    let got = BigUint::from(brute.get(h).copied().unwrap_or(0));
    let formula = count_d_two(h, p, q).map_err(err)?;
    ensure(got == formula, || format!("#D_{h}({p},{q}) = {got}, formula gives {formula}"))?;
    Ok(1)
}

fn brute_d(h: usize, parts: [usize; 2]) -> Result<u64, String> {
    let hist = lis_distribution_capped(&Composition::new(parts.to_vec()), CAP).map_err(err)?;
    Ok(hist.get(h).copied().unwrap_or(0))
}

fn check_recurrence(h: usize, m: usize) -> Outcome {
    let lhs = brute_d(h, [h, m])?;
    let mut rhs = brute_d(h, [h - 1, m])?;
    if m < h {
        rhs += brute_d(h - 1, [h - 1, m])?;
    }
    ensure(lhs == rhs, || format!("#D_{h}({h},{m}) = {lhs} but the recurrence gives {rhs}"))?;
    let lower = catalan_triangle(h as u64, m as u64 - 1).map_err(err)?;
    let upper = if m < h {
        catalan_triangle(h as u64 - 1, m as u64).map_err(err)?
    } else {
        BigUint::default()
    };
    ensure(BigUint::from(lhs) == lower + upper, || format!("#D_{h}({h},{m}) = {lhs} != C({h},{}) + C({},{m})", m - 1, h - 1))?;
    Ok(1)
}

/// Catalan numbers `1, 1, 2, 5, 14, ...` by the recurrence `C_{n+1} = sum C_i C_{n-i}`.
pub fn catalan_numbers(n: usize) -> Vec<BigUint> {
    let mut c = vec![BigUint::from(1u32)];
    for m in 0..n {
        let next = (0..=m).map(|i| &c[i] * &c[m - i]).sum();
        c.push(next);
    }
    c
}

fn check_catalan_numbers(n: usize) -> Outcome {
    let got = BigUint::from(gen_l_capped(1, &Composition::new(vec![1; n]), CAP).map_err(err)?.count());
    let expected = &catalan_numbers(n)[n];
    ensure(&got == expected, || format!("#L_3(1^{n}) = {got}, Catalan number is {expected}"))?;
    Ok(1)
}

fn check_closed_forms(n: u64) -> Outcome {
    for k in 0..=n {
        let a = catalan_triangle(n, k).map_err(err)?;
        let b = catalan_triangle_factorial(n, k).map_err(err)?;
        ensure(a == b, || format!("C({n},{k}): {a} vs {b}"))?;
    }
    Ok(n + 1)
}

/// Two-block counts against the Catalan triangle, its recurrence, and the
/// Catalan numbers.
pub fn suite_catalan(max_size: usize) -> Vec<CheckReport> {
    let max_h = max_size.min(7);
    vec![
        catalan_cells(max_h),
        catalan_recurrence(max_h),
        catalan_sequence(max_size.min(CAP)),
        closed_forms(30),
    ]
}

/// Brute-force `#D_h(p, q)` against the closed form for `1 <= p <= q <= h <= max_h`.
pub fn catalan_cells(max_h: usize) -> CheckReport {
    let cells: Vec<(usize, usize, usize)> = (1..=max_h)
        .flat_map(|h| (1..=h).flat_map(move |q| (1..=q).map(move |p| (h, p, q))))
        .collect();
    run_check("catalan", "triangle", &cells, |&(h, p, q)| check_catalan_cell(h, p, q))
}

/// `#D_h(h, m) = #D_h(h-1, m) + #D_{h-1}(h-1, m)` for `1 <= m <= h <= max_h`.
pub fn catalan_recurrence(max_h: usize) -> CheckReport {
    let rec: Vec<(usize, usize)> = (1..=max_h).flat_map(|h| (1..=h).map(move |m| (h, m))).collect();
    run_check("catalan", "recurrence", &rec, |&(h, m)| check_recurrence(h, m))
}

/// `#L_3(1^n)` is the `n`th Catalan number for `1 <= n <= max_n`.
pub fn catalan_sequence(max_n: usize) -> CheckReport {
    let ns: Vec<usize> = (1..=max_n).collect();
    run_check("catalan", "catalan-numbers", &ns, |&n| check_catalan_numbers(n))
}

/// Both closed forms of the Catalan triangle agree for `n <= max_n`.
pub fn closed_forms(max_n: u64) -> CheckReport {
    let forms: Vec<u64> = (0..=max_n).collect();
    run_check("catalan", "closed-forms", &forms, |&n| check_closed_forms(n))
}

/// Counts standard fillings by placing values cell by cell in row-major order.
pub fn count_fillings_backtracking(shape: &SkewShape) -> u64 {
    let rows = shape.outer().rows().len();
    let cells: Vec<(usize, usize)> = (0..rows)
        .flat_map(|i| {
            let (s, e) = shape.row_span(i);
            (s..e).map(move |c| (i, c))
        })
        .collect();
    let width = shape.outer().row(0);
    let mut grid = vec![vec![0u32; width]; rows];
    let mut used = vec![false; cells.len() + 1];

    fn go(at: usize, cells: &[(usize, usize)], shape: &SkewShape, grid: &mut [Vec<u32>], used: &mut [bool]) -> u64 {
        let Some(&(i, c)) = cells.get(at) else {
            return 1;
        };
        let left = if c > shape.row_span(i).0 { grid[i][c - 1] } else { 0 };
        let up = if i > 0 && c >= shape.row_span(i - 1).0 && c < shape.row_span(i - 1).1 {
            grid[i - 1][c]
        } else {
            0
        };
        let floor = left.max(up);
        let mut total = 0;
        for v in floor + 1..used.len() as u32 {
            if !used[v as usize] {
                used[v as usize] = true;
                grid[i][c] = v;
                total += go(at + 1, cells, shape, grid, used);
                used[v as usize] = false;
            }
        }
        grid[i][c] = 0;
        total
    }

    go(0, &cells, shape, &mut grid, &mut used)
}

/// All partitions with at most `max_cells` cells.
pub fn shapes_up_to(max_cells: usize) -> Vec<Shape> {
    let mut out = Vec::new();
    for total in 0..=max_cells {
        for len in 0..=total {
            for p in padded_partitions(total, len) {
                if !p.parts().contains(&0) {
                    out.push(Shape::new(p.parts().to_vec()).expect("partition"));
                }
            }
        }
    }
    out
}

fn skew_shapes_up_to(max_cells: usize) -> Vec<SkewShape> {
    let mut out = Vec::new();
    for outer in shapes_up_to(max_cells + 3) {
        for inner in shapes_up_to(outer.cells()) {
            if let Ok(s) = SkewShape::new(outer.clone(), inner) {
                if s.cells() <= max_cells && s.cells() + s.inner().cells() <= max_cells + 3 {
                    out.push(s);
                }
            }
        }
    }
    out
}

fn check_hook(shape: &Shape, backtrack_cells: usize) -> Outcome {
    let straight = SkewShape::straight(shape.clone());
    let hook = hook_count(shape).map_err(err)?;
    let dp = skew_count(&straight).map_err(err)?;
    ensure(hook == dp, || format!("{shape}: hook length {hook}, profile DP {dp}"))?;
    if shape.cells() <= backtrack_cells {
        let bt = BigUint::from(count_fillings_backtracking(&straight));
        ensure(hook == bt, || format!("{shape}: hook length {hook}, backtracking {bt}"))?;
    }
    Ok(1)
}

fn check_skew_backtracking(shape: &SkewShape) -> Outcome {
    let dp = skew_count(shape).map_err(err)?;
    let bt = BigUint::from(count_fillings_backtracking(shape));
    ensure(dp == bt, || format!("{shape}: profile DP {dp}, backtracking {bt}"))?;
    Ok(1)
}

/// `(k, n, p)` with `(k+1)(n-1) + p <= max_cells`, `k <= 3`, `n <= 4`, `p <= k`.
fn rectangular_cases(max_cells: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for k in 1..=3 {
        for n in 1..=4 {
            for p in 0..=k {
                if (k + 1) * (n - 1) + p <= max_cells {
                    out.push((k, n, p));
                }
            }
        }
    }
    out
}

fn check_rectangular(k: usize, n: usize, p: usize) -> Outcome {
    let mut parts = vec![p];
    parts.extend(std::iter::repeat_n(k, n - 1));
    let comp = Composition::new(parts);
    let shape = Shape::trimmed({
        let mut rows = vec![k + 1; n - 1];
        rows.push(p);
        rows
    })
    .map_err(err)?;
    let expected = hook_count(&shape).map_err(err)?;
    let mut tableaux = HashSet::new();
    for pi in gen_l_capped(k, &comp, CAP).map_err(err)? {
        let lifted = lift_to_rectangular(&pi, k).map_err(err)?;
        let t = perm_to_tableau(&lifted, k).map_err(err)?;
        ensure(t.shape().outer() == &shape, || format!("{pi} arranged on {}", t.shape()))?;
        ensure(tableaux.insert(t.rows().to_vec()), || format!("tableau collision from {pi}"))?;
    }
    let got = BigUint::from(tableaux.len());
    ensure(got == expected, || format!("#L_{}{comp} = {got}, SYT{shape} = {expected}", k + 2))?;
    Ok(1)
}

fn skew_cases(max_cells: usize) -> Vec<(usize, usize, usize, usize)> {
    let mut out = Vec::new();
    for k in 1..=3 {
        for n in 2..=4 {
            for q in 1..=k {
                for p in 1..=q {
                    if (k + 1) * (n - 2) + p + q <= max_cells {
                        out.push((k, n, p, q));
                    }
                }
            }
        }
    }
    out
}

fn check_skew(k: usize, n: usize, p: usize, q: usize) -> Outcome {
    let mut parts = vec![p, q];
    parts.extend(std::iter::repeat_n(k, n - 2));
    let comp = Composition::new(parts);
    let mut outer = vec![k + 1; n - 1];
    outer.push(p);
    let shape = SkewShape::new(Shape::new(outer).map_err(err)?, Shape::new(vec![k + 1 - q]).map_err(err)?)
        .map_err(err)?;
    let expected = skew_count(&shape).map_err(err)?;
    let mut tableaux = HashSet::new();
    for pi in gen_l_capped(k, &comp, CAP).map_err(err)? {
        let lifted = lift_to_skew(&pi, k).map_err(err)?;
        let t = perm_to_skew_tableau(&lifted, k).map_err(err)?;
        ensure(t.shape() == &shape, || format!("{pi} arranged on {}", t.shape()))?;
        ensure(tableaux.insert(t.rows().to_vec()), || format!("tableau collision from {pi}"))?;
    }
    let got = BigUint::from(tableaux.len());
    ensure(got == expected, || format!("#L_{}{comp} = {got}, SYT{shape} = {expected}", k + 2))?;
    Ok(1)
}

/// Standardness of the arranged tableau coincides with pattern avoidance
/// over every ascending permutation in the `(p, k+1, ..., k+1)` layout.
fn check_avoidance_criterion(k: usize, n: usize, p: usize) -> Outcome {
    let mut parts = vec![p];
    parts.extend(std::iter::repeat_n(k + 1, n - 1));
    let comp = Composition::new(parts);
    let mut cases = 0;
    for pi in ascending(&comp) {
        let avoids = pi.lis_length() <= k + 1;
        let standard = perm_to_tableau(&pi, k).is_ok();
        ensure(avoids == standard, || format!("{pi}: avoids = {avoids}, standard = {standard}"))?;
        cases += 1;
    }
    Ok(cases)
}

/// Hook-length and skew counts against backtracking, and the tableau
/// counting identities for all parameters with at most `max_cells` cells.
pub fn suite_tableaux(max_cells: usize) -> Vec<CheckReport> {
    vec![
        hook_vs_dp(max_cells, 10),
        skew_vs_backtracking(max_cells.min(10)),
        rectangular(max_cells),
        skew(max_cells),
        avoidance_criterion(max_cells.min(CAP)),
    ]
}

/// Hook-length formula against the profile DP on every shape with at most
/// `max_cells` cells, and against backtracking up to `backtrack_cells`.
pub fn hook_vs_dp(max_cells: usize, backtrack_cells: usize) -> CheckReport {
    run_check("tableaux", "hook-vs-dp", &shapes_up_to(max_cells), |s| check_hook(s, backtrack_cells))
}

/// Profile DP against backtracking on every skew shape with at most `max_cells` cells.
pub fn skew_vs_backtracking(max_cells: usize) -> CheckReport {
    run_check("tableaux", "skew-vs-backtracking", &skew_shapes_up_to(max_cells), check_skew_backtracking)
}

/// `#L_{k+2}(p, k^(n-1)) = SYT<(k+1)^(n-1), p>` through the lifted tableau construction.
pub fn rectangular(max_cells: usize) -> CheckReport {
    run_check("tableaux", "rectangular", &rectangular_cases(max_cells), |&(k, n, p)| check_rectangular(k, n, p))
}

/// `#L_{k+2}(p, q, k^(n-2)) = SYT(<(k+1)^(n-1), p> / <k+1-q>)` through the skew construction.
pub fn skew(max_cells: usize) -> CheckReport {
    run_check("tableaux", "skew", &skew_cases(max_cells), |&(k, n, p, q)| check_skew(k, n, p, q))
}

/// The arranged tableau is standard exactly when the permutation avoids `12...(k+2)`.
pub fn avoidance_criterion(max_cells: usize) -> CheckReport {
    run_check("tableaux", "avoidance-criterion", &rectangular_cases(max_cells), |&(k, n, p)| {
        check_avoidance_criterion(k, n, p)
    })
}

pub fn run_suite(suite: Suite, max_size: usize) -> Vec<CheckReport> {
    match suite {
        Suite::All => Suite::EACH.iter().flat_map(|&s| run_suite(s, max_size)).collect(),
        Suite::WV => suite_w_v(max_size),
        Suite::Swap => suite_swap(max_size),
        Suite::Concavity => suite_concavity(max_size),
        Suite::Catalan => suite_catalan(max_size),
        Suite::Tableaux => suite_tableaux(max_size + 3),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators() {
        assert_eq!(compositions(4, 6).len(), 8);
        assert_eq!(compositions(4, 2).len(), 5);
        assert_eq!(weak_compositions(2, 2).len(), 3);
        assert_eq!(padded_partitions(4, 2).len(), 3);
        assert_eq!(rearrangements(&Composition::new(vec![2, 1, 1])).len(), 3);
        assert_eq!(shapes_up_to(4).len(), 1 + 1 + 2 + 3 + 5);
    }

    #[test]
    fn catalan_sequence() {
        let c: Vec<u64> = catalan_numbers(6).iter().map(|x| x.try_into().unwrap()).collect();
        assert_eq!(c, [1, 1, 2, 5, 14, 42, 132]);
    }

    #[test]
    fn backtracking_small() {
        let s = SkewShape::new(Shape::new(vec![2, 1]).unwrap(), Shape::new(vec![1]).unwrap()).unwrap();
        assert_eq!(count_fillings_backtracking(&s), 2);
        assert_eq!(count_fillings_backtracking(&SkewShape::straight(Shape::new(vec![2, 2]).unwrap())), 2);
    }

    #[test]
    fn small_suites_pass() {
        for report in run_suite(Suite::All, 5) {
            assert!(report.passed(), "{report}");
        }
    }
}
