//! Exhaustive generation of block-ascending permutations and brute-force
//! counts, plus the Catalan-triangle closed form for two blocks.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::{lis_length, BlockPermutation, Composition};

/// Largest `N` enumerated unless a caller overrides it.
pub const DEFAULT_SIZE_CAP: usize = 14;

fn check_cap(comp: &Composition, cap: usize) -> Result<()> {
    if comp.total() > cap {
        return Err(Error::SizeCap {
            size: comp.total(),
            cap,
        });
    }
    Ok(())
}

/// Lexicographic stream of all ascending permutations of a composition.
///
/// Each block is a combination drawn from the values the earlier blocks left
/// over; advancing works like an odometer whose last digit is the deepest
/// block that still has a next combination.
pub struct AscendingIter {
    parts: Vec<usize>,
    /// `chosen[b]` indexes into `pools[b]`.
    chosen: Vec<Vec<usize>>,
    pools: Vec<Vec<u32>>,
    pending: bool,
}

impl AscendingIter {
    fn new(comp: &Composition) -> Self {
        let parts = comp.parts().to_vec();
        let n = comp.total();
        let mut it = AscendingIter {
            chosen: parts.iter().map(|&a| (0..a).collect()).collect(),
            pools: vec![Vec::new(); parts.len()],
            parts,
            pending: true,
        };
        if let Some(first) = it.pools.first_mut() {
            *first = (1..=n as u32).collect();
        }
        it.rebuild_pools(0);
        it
    }

    /// Recomputes `pools[b + 1..]` from `pools[b]` and the choices.
    fn rebuild_pools(&mut self, from: usize) {
        for b in from..self.parts.len().saturating_sub(1) {
            let pool = &self.pools[b];
            let chosen = &self.chosen[b];
            let mut next = Vec::with_capacity(pool.len() - chosen.len());
            let mut c = chosen.iter().peekable();
            for (i, &v) in pool.iter().enumerate() {
                if c.peek() == Some(&&i) {
                    c.next();
                } else {
                    next.push(v);
                }
            }
            self.pools[b + 1] = next;
        }
    }

    fn current(&self) -> BlockPermutation {
        let values = self
            .chosen
            .iter()
            .zip(&self.pools)
            .flat_map(|(c, pool)| c.iter().map(move |&i| pool[i]))
            .collect();
        BlockPermutation::from_parts_unchecked(Composition::new(self.parts.clone()), values)
    }

    fn advance(&mut self) -> bool {
        for b in (0..self.parts.len()).rev() {
            let m = self.pools[b].len();
            if next_combination(&mut self.chosen[b], m) {
                for later in &mut self.chosen[b + 1..] {
                    for (i, c) in later.iter_mut().enumerate() {
                        *c = i;
                    }
                }
                self.rebuild_pools(b);
                return true;
            }
        }
        false
    }
}

/// Advances `c` to the next `c.len()`-subset of `0..m` in lexicographic order.
fn next_combination(c: &mut [usize], m: usize) -> bool {
    let r = c.len();
    let Some(i) = (0..r).rev().find(|&i| c[i] < m - r + i) else {
        return false;
    };
    c[i] += 1;
    for t in i + 1..r {
        c[t] = c[t - 1] + 1;
    }
    true
}

impl Iterator for AscendingIter {
    type Item = BlockPermutation;

    fn next(&mut self) -> Option<BlockPermutation> {
        if self.pending {
            self.pending = false;
            return Some(self.current());
        }
        if self.advance() {
            Some(self.current())
        } else {
            None
        }
    }
}

/// Every ascending permutation of `comp`, once each, in lexicographic order.
pub fn gen_ascending(comp: &Composition) -> Result<AscendingIter> {
    gen_ascending_capped(comp, DEFAULT_SIZE_CAP)
}

pub fn gen_ascending_capped(comp: &Composition, cap: usize) -> Result<AscendingIter> {
    check_cap(comp, cap)?;
    Ok(AscendingIter::new(comp))
}

/// Elements of `L_{k+2}(comp)`: LIS at most `k + 1`.
pub fn gen_l(k: usize, comp: &Composition) -> Result<impl Iterator<Item = BlockPermutation>> {
    gen_l_capped(k, comp, DEFAULT_SIZE_CAP)
}

pub fn gen_l_capped(k: usize, comp: &Composition, cap: usize) -> Result<impl Iterator<Item = BlockPermutation>> {
    let all = gen_ascending_capped(comp, cap)?;
    let possible = comp.max_part() < k + 2;
    Ok(all.take_while(move |_| possible).filter(move |pi| pi.lis_length() <= k + 1))
}

/// Elements of `D_h(comp)`: LIS exactly `h`.
pub fn gen_d(h: usize, comp: &Composition) -> Result<impl Iterator<Item = BlockPermutation>> {
    gen_d_capped(h, comp, DEFAULT_SIZE_CAP)
}

pub fn gen_d_capped(h: usize, comp: &Composition, cap: usize) -> Result<impl Iterator<Item = BlockPermutation>> {
    let all = gen_ascending_capped(comp, cap)?;
    let possible = h >= comp.max_part() && h <= comp.total();
    Ok(all.take_while(move |_| possible).filter(move |pi| pi.lis_length() == h))
}

/// `hist[h] = #D_h(comp)` for `h = 0..=N`, from one pass over the ascending permutations.
pub fn lis_distribution(comp: &Composition) -> Result<Vec<u64>> {
    lis_distribution_capped(comp, DEFAULT_SIZE_CAP)
}

pub fn lis_distribution_capped(comp: &Composition, cap: usize) -> Result<Vec<u64>> {
    let mut hist = vec![0u64; comp.total() + 1];
    for pi in gen_ascending_capped(comp, cap)? {
        hist[lis_length(pi.values())] += 1;
    }
    Ok(hist)
}

/// Which family a count refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Selector {
    /// `L_{k+2}`: avoids `12...(k+2)`.
    K(usize),
    /// `D_h`: LIS exactly `h`.
    Lis(usize),
}

impl fmt::Display for Selector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Selector::K(k) => write!(f, "k={k}"),
            Selector::Lis(h) => write!(f, "h={h}"),
        }
    }
}

/// Brute-force cardinality of `L_{k+2}(comp)` or `D_h(comp)`.
pub fn count(selector: Selector, comp: &Composition) -> Result<BigUint> {
    count_capped(selector, comp, DEFAULT_SIZE_CAP)
}

pub fn count_capped(selector: Selector, comp: &Composition, cap: usize) -> Result<BigUint> {
    let n = match selector {
        Selector::K(k) => gen_l_capped(k, comp, cap)?.count(),
        Selector::Lis(h) => gen_d_capped(h, comp, cap)?.count(),
    };
    Ok(BigUint::from(n))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CountRow {
    pub comp: Composition,
    pub selector: Selector,
    #[serde(serialize_with = "as_decimal")]
    pub count: BigUint,
}

fn as_decimal<S: serde::Serializer>(n: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(n)
}

/// Counts keyed by composition and family.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct CountTable {
    pub rows: Vec<CountRow>,
}

impl CountTable {
    /// Rows `D_h(comp)` for every `h` in `0..=N`, one enumeration pass.
    pub fn lis_table(comp: &Composition, cap: usize) -> Result<CountTable> {
        let hist = lis_distribution_capped(comp, cap)?;
        Ok(CountTable {
            rows: hist
                .into_iter()
                .enumerate()
                .map(|(h, c)| CountRow {
                    comp: comp.clone(),
                    selector: Selector::Lis(h),
                    count: BigUint::from(c),
                })
                .collect(),
        })
    }

    /// Cumulative rows `L_{k+2}(comp)` for `k + 1` in `0..=N`.
    pub fn avoidance_table(comp: &Composition, cap: usize) -> Result<CountTable> {
        let hist = lis_distribution_capped(comp, cap)?;
        let mut acc = 0u64;
        let mut rows = Vec::new();
        for (h, c) in hist.into_iter().enumerate() {
            acc += c;
            if let Some(k) = h.checked_sub(1) {
                rows.push(CountRow {
                    comp: comp.clone(),
                    selector: Selector::K(k),
                    count: BigUint::from(acc),
                });
            }
        }
        Ok(CountTable { rows })
    }

    pub fn get(&self, selector: Selector, comp: &Composition) -> Option<&BigUint> {
        self.rows
            .iter()
            .find(|r| r.selector == selector && &r.comp == comp)
            .map(|r| &r.count)
    }

    /// `comp,selector,count` with the composition quoted.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("comp,selector,count\n");
        for r in &self.rows {
            let parts: Vec<String> = r.comp.parts().iter().map(usize::to_string).collect();
            out.push_str(&format!("\"{}\",{},{}\n", parts.join(","), r.selector, r.count));
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("table serializes")
    }
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

pub fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * i)
}

fn check_triangle(n: u64, k: u64) -> Result<()> {
    if k > n {
        return Err(Error::Domain(format!("Catalan triangle entry needs k <= n, got C({n}, {k})")));
    }
    Ok(())
}

/// `C(n, k) = binom(n + k, k) - binom(n + k, k - 1)`.
pub fn catalan_triangle(n: u64, k: u64) -> Result<BigUint> {
    check_triangle(n, k)?;
    let lower = if k == 0 { BigUint::zero() } else { binomial(n + k, k - 1) };
    Ok(binomial(n + k, k) - lower)
}

/// `C(n, k) = (n + k)! (n - k + 1) / (k! (n + 1)!)`.
pub fn catalan_triangle_factorial(n: u64, k: u64) -> Result<BigUint> {
    check_triangle(n, k)?;
    Ok(factorial(n + k) * (n - k + 1) / (factorial(k) * factorial(n + 1)))
}

/// `#D_h(p, q)` from the Catalan triangle; zero when `p + q < h` or a part exceeds `h`.
pub fn count_d_two(h: usize, p: usize, q: usize) -> Result<BigUint> {
    if p == 0 || q == 0 {
        return Err(Error::Domain(format!("count_d_two needs positive parts, got ({p},{q})")));
    }
    if p > h || q > h || p + q < h {
        return Ok(BigUint::zero());
    }
    catalan_triangle(h as u64, (p + q - h) as u64)
}
