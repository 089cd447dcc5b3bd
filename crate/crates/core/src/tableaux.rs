//! Young diagrams, (skew) standard tableau counts, and the arrangement of
//! block permutations as tableaux.
//!
//! Shapes are stored in English orientation: row 1 is the top row and the
//! longest. A permutation with blocks `pi_1 | ... | pi_n` is laid out with
//! block `n` in the top row and block 1 in the bottom row, which is the
//! orientation in which "no `12...(k+2)` pattern" reads as "columns increase
//! downward".

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::bijections::{insert_max_in_block, reorder_blocks};
use crate::enumeration::factorial;
use crate::error::{Error, Result};
use crate::perm::{BlockPermutation, Composition};

/// Largest diagram accepted by [`hook_count`].
pub const HOOK_CELL_CAP: usize = 64;
/// Largest number of frontier profiles [`skew_count`] will keep.
pub const SKEW_STATE_BUDGET: usize = 10_000_000;

/// A partition `lambda_1 >= lambda_2 >= ... > 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Shape(Vec<usize>);

impl Shape {
    pub fn new(rows: Vec<usize>) -> Result<Self> {
        if rows.contains(&0) {
            return Err(Error::InvalidShape(format!("{rows:?} has an empty row")));
        }
        if rows.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidShape(format!("{rows:?} is not weakly decreasing")));
        }
        Ok(Shape(rows))
    }

    /// Like [`Shape::new`] but drops trailing zero rows first.
    pub fn trimmed(mut rows: Vec<usize>) -> Result<Self> {
        while rows.last() == Some(&0) {
            rows.pop();
        }
        Shape::new(rows)
    }

    pub fn rows(&self) -> &[usize] {
        &self.0
    }

    pub fn cells(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn row(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Length of column `c` (0-based).
    pub fn column(&self, c: usize) -> usize {
        self.0.iter().take_while(|&&r| r > c).count()
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "<{}>", rows.join(","))
    }
}

/// `outer / inner`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SkewShape {
    outer: Shape,
    inner: Shape,
}

impl SkewShape {
    pub fn new(outer: Shape, inner: Shape) -> Result<Self> {
        if inner.rows().len() > outer.rows().len() || inner.rows().iter().zip(outer.rows()).any(|(i, o)| i > o) {
            return Err(Error::InvalidShape(format!("{inner} does not fit inside {outer}")));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(outer: Shape) -> Self {
        SkewShape {
            outer,
            inner: Shape::default(),
        }
    }

    pub fn outer(&self) -> &Shape {
        &self.outer
    }

    pub fn inner(&self) -> &Shape {
        &self.inner
    }

    pub fn cells(&self) -> usize {
        self.outer.cells() - self.inner.cells()
    }

    /// Half-open column range `[start, end)` of row `i`.
    pub fn row_span(&self, i: usize) -> (usize, usize) {
        (self.inner.row(i), self.outer.row(i))
    }

    /// ASCII diagram: `#` for cells, `.` for removed inner cells.
    pub fn draw(&self) -> String {
        let mut out = String::new();
        for i in 0..self.outer.rows().len() {
            let (start, end) = self.row_span(i);
            out.push_str(&".".repeat(start));
            out.push_str(&"#".repeat(end - start));
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.rows().is_empty() {
            self.outer.fmt(f)
        } else {
            write!(f, "{}/{}", self.outer, self.inner)
        }
    }
}

/// Number of standard Young tableaux of `shape`: `N! / prod(hooks)`.
pub fn hook_count(shape: &Shape) -> Result<BigUint> {
    let cells = shape.cells();
    if cells > HOOK_CELL_CAP {
        return Err(Error::SizeCap {
            size: cells,
            cap: HOOK_CELL_CAP,
        });
    }
    let mut hooks = BigUint::one();
    for (i, &len) in shape.rows().iter().enumerate() {
        for c in 0..len {
            let arm = len - c - 1;
            let leg = shape.column(c) - i - 1;
            hooks *= (arm + leg + 1) as u64;
        }
    }
    Ok(factorial(cells as u64) / hooks)
}

/// Number of standard fillings of a skew shape.
///
/// Counts chains of partitions from `inner` to `outer` adding one cell at a
/// time, level by level over frontier profiles.
pub fn skew_count(shape: &SkewShape) -> Result<BigUint> {
    let rows = shape.outer.rows().len();
    let outer = shape.outer.rows();
    let start: Vec<u8> = (0..rows).map(|i| shape.inner.row(i) as u8).collect();
    if outer.iter().any(|&r| r > u8::MAX as usize) {
        return Err(Error::InvalidShape("rows longer than 255 cells".into()));
    }
    let mut level: HashMap<Vec<u8>, BigUint> = HashMap::from([(start, BigUint::one())]);
    for _ in 0..shape.cells() {
        let mut next: HashMap<Vec<u8>, BigUint> = HashMap::new();
        for (profile, ways) in &level {
            for i in 0..rows {
                let len = profile[i] as usize;
                let fits_outer = len < outer[i];
                let fits_above = i == 0 || (profile[i - 1] as usize) > len;
                if fits_outer && fits_above {
                    let mut grown = profile.clone();
                    grown[i] += 1;
                    *next.entry(grown).or_insert_with(BigUint::zero) += ways;
                }
            }
        }
        if next.len() > SKEW_STATE_BUDGET {
            return Err(Error::SizeCap {
                size: next.len(),
                cap: SKEW_STATE_BUDGET,
            });
        }
        level = next;
    }
    Ok(level.into_values().next().unwrap_or_else(BigUint::zero))
}

/// A filling of a (possibly skew) shape; `rows[i]` lists row `i`'s cells left to right.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tableau {
    shape: SkewShape,
    rows: Vec<Vec<u32>>,
    /// Set when the arranged permutation had an empty first block, which has no row.
    empty_bottom_block: bool,
}

impl Tableau {
    pub fn new(shape: SkewShape, rows: Vec<Vec<u32>>) -> Result<Self> {
        let fits = rows.len() == shape.outer.rows().len()
            && rows.iter().enumerate().all(|(i, r)| {
                let (s, e) = shape.row_span(i);
                r.len() == e - s
            });
        if !fits {
            return Err(Error::InvalidShape(format!("filling does not match {shape}")));
        }
        Ok(Tableau {
            shape,
            rows,
            empty_bottom_block: false,
        })
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Value in row `i`, absolute column `c`.
    pub fn get(&self, i: usize, c: usize) -> Option<u32> {
        let (s, e) = self.shape.row_span(i);
        (s..e).contains(&c).then(|| self.rows[i][c - s])
    }

    /// Rows increase rightward, columns increase downward, values are `1..=cells`.
    pub fn is_standard(&self) -> bool {
        let mut seen: Vec<u32> = self.rows.iter().flatten().copied().collect();
        seen.sort_unstable();
        if !seen.iter().copied().eq(1..=self.shape.cells() as u32) {
            return false;
        }
        if self.rows.iter().any(|r| r.windows(2).any(|w| w[0] >= w[1])) {
            return false;
        }
        for i in 1..self.rows.len() {
            let (s, e) = self.shape.row_span(i);
            for c in s..e {
                if let (Some(above), Some(here)) = (self.get(i - 1, c), self.get(i, c)) {
                    if above >= here {
                        return false;
                    }
                }
            }
        }
        true
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.shape.cells().to_string().len();
        for (i, row) in self.rows.iter().enumerate() {
            let (start, _) = self.shape.row_span(i);
            let mut cells: Vec<String> = vec![format!("{:>width$}", "."); start];
            cells.extend(row.iter().map(|v| format!("{v:>width$}")));
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Checks that `comp` is `(p, (k+1)^(n-2), last)` with `n >= 1`.
fn check_layout(comp: &Composition, k: usize, last: Option<usize>) -> Result<()> {
    let parts = comp.parts();
    let ok = match (parts, last) {
        ([], _) => false,
        ([p], None) => *p <= k + 1,
        ([p, mid @ .., tail], None) => *p <= k + 1 && mid.iter().chain([tail]).all(|&a| a == k + 1),
        ([p, mid @ .., tail], Some(q)) if parts.len() >= 2 => {
            *p <= q && *tail == q && q <= k + 1 && mid.iter().all(|&a| a == k + 1)
        }
        _ => false,
    };
    if !ok {
        return Err(Error::Domain(format!("composition {comp} does not have the tableau layout for k = {k}")));
    }
    Ok(())
}

fn skew_shape_for(comp: &Composition, k: usize) -> Result<SkewShape> {
    let parts = comp.parts();
    let n = parts.len();
    // Rows top to bottom are blocks n..1; all but the bottom have width k + 1.
    let mut outer = vec![k + 1; n - 1];
    outer.push(parts[0]);
    let outer = Shape::trimmed(outer)?;
    let inner = if n >= 2 && parts[n - 1] < k + 1 {
        Shape::new(vec![k + 1 - parts[n - 1]])?
    } else {
        Shape::default()
    };
    SkewShape::new(outer, inner)
}

fn arrange(pi: &BlockPermutation, k: usize) -> Result<Tableau> {
    let shape = skew_shape_for(pi.comp(), k)?;
    let mut rows: Vec<Vec<u32>> = pi.blocks().rev().map(<[u32]>::to_vec).collect();
    let empty_bottom_block = shape.outer.rows().len() < rows.len();
    if empty_bottom_block {
        rows.pop();
    }
    let mut t = Tableau::new(shape, rows)?;
    t.empty_bottom_block = empty_bottom_block;
    Ok(t)
}

/// Arranges `pi` in `(p, k+1, ..., k+1)` layout (block 1 of length `p <= k + 1`)
/// as a tableau of shape `<(k+1)^(n-1), p>`, without checking standardness.
pub fn arrange_tableau(pi: &BlockPermutation, k: usize) -> Result<Tableau> {
    check_layout(pi.comp(), k, None)?;
    arrange(pi, k)
}

/// [`arrange_tableau`], rejecting permutations whose tableau is not standard.
pub fn perm_to_tableau(pi: &BlockPermutation, k: usize) -> Result<Tableau> {
    let t = arrange_tableau(pi, k)?;
    if !t.is_standard() {
        return Err(Error::Domain(format!("{pi} contains 12...{}: columns do not increase", k + 2)));
    }
    Ok(t)
}

/// Arranges `pi` in `(p, (k+1)^(n-2), q)` layout, `p <= q`, on
/// `<(k+1)^(n-1), p> / <k+1-q>` with the last block right-aligned in the top row.
pub fn arrange_skew_tableau(pi: &BlockPermutation, k: usize) -> Result<Tableau> {
    let q = pi.comp().parts().last().copied().unwrap_or(0);
    check_layout(pi.comp(), k, Some(q))?;
    arrange(pi, k)
}

pub fn perm_to_skew_tableau(pi: &BlockPermutation, k: usize) -> Result<Tableau> {
    let t = arrange_skew_tableau(pi, k)?;
    if !t.is_standard() {
        return Err(Error::Domain(format!("{pi} contains 12...{}: columns do not increase", k + 2)));
    }
    Ok(t)
}

/// Reads the rows bottom to top back into blocks; inverse of both arrangements.
pub fn tableau_to_perm(t: &Tableau) -> Result<BlockPermutation> {
    let mut blocks: Vec<&[u32]> = t.rows.iter().rev().map(Vec::as_slice).collect();
    if t.empty_bottom_block {
        blocks.insert(0, &[]);
    }
    BlockPermutation::from_blocks(&blocks)
}

/// Lifts `L_{k+2}(p, k^(n-1))` into `L_{k+2}(p, (k+1)^(n-1))` by inserting a
/// maximum into every block after the first.
pub fn lift_to_rectangular(pi: &BlockPermutation, k: usize) -> Result<BlockPermutation> {
    let mut current = pi.clone();
    for index in 2..=pi.block_count() {
        current = insert_max_in_block(&current, index, k)?.0;
    }
    Ok(current)
}

/// Lifts `L_{k+2}(p, q, k^(n-2))` into `L_{k+2}(p, (k+1)^(n-2), q)`: block 2
/// is moved to the end, then the middle blocks each gain a maximum.
pub fn lift_to_skew(pi: &BlockPermutation, k: usize) -> Result<BlockPermutation> {
    let parts = pi.comp().parts();
    if parts.len() < 2 {
        return Err(Error::Domain(format!("skew lifting needs two or more blocks, got {}", pi.comp())));
    }
    let mut target = vec![parts[0]];
    target.extend_from_slice(&parts[2..]);
    target.push(parts[1]);
    let (mut current, _) = reorder_blocks(pi, &Composition::new(target))?;
    for index in 2..pi.block_count() {
        current = insert_max_in_block(&current, index, k)?.0;
    }
    Ok(current)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(rows: &[usize]) -> Shape {
        Shape::new(rows.to_vec()).unwrap()
    }

    fn bp(s: &str) -> BlockPermutation {
        s.parse().unwrap()
    }

    #[test]
    fn shape_validation() {
        assert!(Shape::new(vec![1, 2]).is_err());
        assert!(Shape::new(vec![2, 0]).is_err());
        assert_eq!(Shape::trimmed(vec![2, 0]).unwrap(), shape(&[2]));
        assert!(SkewShape::new(shape(&[2]), shape(&[1, 1])).is_err());
        assert!(SkewShape::new(shape(&[2, 1]), shape(&[3])).is_err());
    }

    #[test]
    fn hook_examples() {
        assert_eq!(hook_count(&shape(&[2, 2])).unwrap(), BigUint::from(2u32));
        assert_eq!(hook_count(&shape(&[6])).unwrap(), BigUint::one());
        assert_eq!(hook_count(&shape(&[3, 2])).unwrap(), BigUint::from(5u32));
        assert_eq!(hook_count(&Shape::default()).unwrap(), BigUint::one());
        assert!(matches!(hook_count(&shape(&[65])), Err(Error::SizeCap { .. })));
    }

    #[test]
    fn skew_examples() {
        let s = SkewShape::new(shape(&[2, 1]), shape(&[1])).unwrap();
        assert_eq!(skew_count(&s).unwrap(), BigUint::from(2u32));
        let full = SkewShape::new(shape(&[3, 2]), shape(&[3, 2])).unwrap();
        assert_eq!(skew_count(&full).unwrap(), BigUint::one());
        assert_eq!(skew_count(&SkewShape::straight(shape(&[3, 3, 2]))).unwrap(), BigUint::from(42u32));
    }

    #[test]
    fn draw_skew() {
        let s = SkewShape::new(shape(&[3, 3, 1]), shape(&[1])).unwrap();
        assert_eq!(s.draw(), ".##\n###\n#\n");
        assert_eq!(s.to_string(), "<3,3,1>/<1>");
    }

    #[test]
    fn tableau_orientation() {
        // k = 1: top row is block 2.
        let t = perm_to_tableau(&bp("3|12"), 1).unwrap();
        assert_eq!(t.rows(), &[vec![1, 2], vec![3]]);
        assert!(perm_to_tableau(&bp("1|23"), 1).is_err());
        assert!(!arrange_tableau(&bp("1|23"), 1).unwrap().is_standard());
        assert_eq!(tableau_to_perm(&t).unwrap(), bp("3|12"));
    }

    #[test]
    fn skew_orientation() {
        // L_3(1,1) -> <2,1>/<1>
        let t = perm_to_skew_tableau(&bp("2|1"), 1).unwrap();
        assert_eq!(t.get(0, 1), Some(1));
        assert_eq!(t.get(1, 0), Some(2));
        assert_eq!(tableau_to_perm(&t).unwrap(), bp("2|1"));
        let t = perm_to_skew_tableau(&bp("1|2"), 1).unwrap();
        assert_eq!(tableau_to_perm(&t).unwrap(), bp("1|2"));
        assert!(arrange_skew_tableau(&bp("12|3"), 1).is_err());
    }

    #[test]
    fn layout_errors() {
        assert!(arrange_tableau(&bp("1|2|345"), 2).is_err());
        assert!(arrange_tableau(&bp("1234|5"), 2).is_err());
        assert!(arrange_tableau(&bp(""), 2).is_err());
    }

    #[test]
    fn empty_first_block() {
        let pi = bp("|12");
        let t = perm_to_tableau(&pi, 1).unwrap();
        assert_eq!(t.shape().outer(), &shape(&[2]));
        assert_eq!(tableau_to_perm(&t).unwrap(), pi);
    }

    #[test]
    fn lifting() {
        let up = lift_to_rectangular(&bp("3|1|2"), 1).unwrap();
        assert_eq!(up.comp().parts(), &[1, 2, 2]);
        assert!(up.lis_length() <= 2);
        let up = lift_to_skew(&bp("4|13|2"), 1).unwrap();
        assert_eq!(up.comp().parts(), &[1, 2, 2]);
    }
}
