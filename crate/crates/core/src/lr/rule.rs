//! Backtracking over Littlewood–Richardson tableaux of a skew shape.
//!
//! Cells are filled in reading order (rows top to bottom, each row right to
//! left) so that the lattice condition can be checked on every prefix and the
//! row/column constraints only look at cells already filled.

use rustc_hash::FxHashMap;

use crate::partition::Partition;

/// Bits per content entry in the packed leaf key.
const KEY_BITS: u32 = 5;

pub(crate) struct LrSearch<'a> {
    /// Row of each cell (0-based), in reading order.
    row: Vec<u8>,
    /// Reading-order index of the cell directly above, if it is in the shape.
    above: Vec<Option<u16>>,
    /// Reading-order index of the cell directly to the right, if in the shape.
    right: Vec<Option<u16>>,
    fill: Vec<u8>,
    /// `cnt[v]` is the number of v's placed so far; `cnt[0]` is a sentinel.
    cnt: Vec<u32>,
    /// Optional content target; `bound[v]` is the number of v's allowed.
    bound: Option<&'a [u32]>,
    packed: bool,
}

impl<'a> LrSearch<'a> {
    /// Returns `None` when μ ⊄ λ.
    pub(crate) fn new(lambda: &Partition, mu: &Partition, bound: Option<&'a [u32]>) -> Option<Self> {
        if !mu.is_contained_in(lambda) {
            return None;
        }
        let rows = lambda.len();
        let mut index = vec![Vec::new(); rows];
        let mut row = Vec::new();
        for (i, cells) in index.iter_mut().enumerate() {
            let (lo, hi) = (mu.part(i) as usize, lambda.part(i) as usize);
            *cells = vec![None; hi];
            for j in (lo..hi).rev() {
                cells[j] = Some(row.len() as u16);
                row.push(i as u8);
            }
        }
        let mut above = Vec::with_capacity(row.len());
        let mut right = Vec::with_capacity(row.len());
        for i in 0..rows {
            let (lo, hi) = (mu.part(i) as usize, lambda.part(i) as usize);
            for j in (lo..hi).rev() {
                above.push(if i > 0 { index[i - 1].get(j).copied().flatten() } else { None });
                right.push(index[i].get(j + 1).copied().flatten());
            }
        }
        let size = row.len();
        let packed = size < (1 << KEY_BITS) && rows as u32 * KEY_BITS <= 128;
        Some(LrSearch {
            fill: vec![0; size],
            cnt: {
                let mut c = vec![0; rows + 2];
                c[0] = u32::MAX;
                c
            },
            row,
            above,
            right,
            bound,
            packed,
        })
    }

    fn walk<F: FnMut(u128, &[u32])>(&mut self, k: usize, key: u128, leaf: &mut F) {
        if k == self.row.len() {
            leaf(key, &self.cnt);
            return;
        }
        let lo = self.above[k].map_or(1, |a| self.fill[a as usize] + 1);
        let mut hi = self.row[k] + 1;
        if let Some(r) = self.right[k] {
            hi = hi.min(self.fill[r as usize]);
        }
        for v in lo..=hi {
            let vi = v as usize;
            if self.cnt[vi] >= self.cnt[vi - 1] {
                continue;
            }
            if let Some(b) = self.bound {
                if self.cnt[vi] >= b.get(vi - 1).copied().unwrap_or(0) {
                    continue;
                }
            }
            self.fill[k] = v;
            self.cnt[vi] += 1;
            let next = if self.packed { key + (1u128 << (KEY_BITS * (v as u32 - 1))) } else { 0 };
            self.walk(k + 1, next, leaf);
            self.cnt[vi] -= 1;
        }
    }

    /// Number of LR tableaux (respecting the content bound if any).
    pub(crate) fn count(&mut self) -> u64 {
        let mut total = 0u64;
        self.walk(0, 0, &mut |_, _| total += 1);
        total
    }

    /// All contents with their multiplicities, unsorted.
    pub(crate) fn expand(&mut self) -> Vec<(Partition, u64)> {
        if self.packed {
            let mut by_key: FxHashMap<u128, u64> = FxHashMap::default();
            self.walk(0, 0, &mut |key, _| *by_key.entry(key).or_insert(0) += 1);
            by_key.into_iter().map(|(key, c)| (unpack(key), c)).collect()
        } else {
            let mut by_content: FxHashMap<Vec<u32>, u64> = FxHashMap::default();
            self.walk(0, 0, &mut |_, cnt| {
                *by_content.entry(cnt[1..].to_vec()).or_insert(0) += 1;
            });
            by_content
                .into_iter()
                .map(|(cnt, c)| (Partition::from_sorted(cnt), c))
                .collect()
        }
    }
}

fn unpack(mut key: u128) -> Partition {
    let mask = (1u128 << KEY_BITS) - 1;
    let mut parts = Vec::new();
    while key != 0 {
        parts.push((key & mask) as u32);
        key >>= KEY_BITS;
    }
    Partition::from_sorted(parts)
}
