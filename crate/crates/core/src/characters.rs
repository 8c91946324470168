//! Irreducible characters of S_n by the Murnaghan–Nakayama rule.
//!
//! Rim hooks are removed on the beta-set (first-column hook lengths) of the
//! shape: removing a hook of length r moves one bead from β to β − r, and the
//! leg length is the number of beads jumped over. The largest class part is
//! peeled first so that the memo on `(shape, class index)` is shared by every
//! λ evaluated against the same class.

use std::collections::HashMap;
use std::fs;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{check_cap, Error, Result};
use crate::partition::{enumerate_partitions, Partition};

/// Default cap on n for full character tables.
pub const DEFAULT_TABLE_CAP: usize = 20;

const CACHE_HEADER: &str = "CHARTABLE v1";

/// Full character table of S_n; rows are irreducibles λ, columns classes α,
/// both in canonical (descending lexicographic) order.
#[derive(Debug, Clone, PartialEq)]
pub struct CharTable {
    n: usize,
    partitions: Vec<Partition>,
    index: HashMap<Partition, usize>,
    values: Vec<Vec<BigInt>>,
}

impl CharTable {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Partitions of n in canonical order; indexes rows and columns.
    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn index_of(&self, lambda: &Partition) -> Option<usize> {
        self.index.get(lambda).copied()
    }

    /// χ^λ(α) by row/column index.
    pub fn at(&self, lambda: usize, alpha: usize) -> &BigInt {
        &self.values[lambda][alpha]
    }

    /// χ^λ(α); `None` when either partition is not of size n.
    pub fn value(&self, lambda: &Partition, alpha: &Partition) -> Option<&BigInt> {
        Some(self.at(self.index_of(lambda)?, self.index_of(alpha)?))
    }

    pub fn row(&self, lambda: usize) -> &[BigInt] {
        &self.values[lambda]
    }

    fn compute(n: usize) -> CharTable {
        let partitions = enumerate_partitions(n);
        let index: HashMap<Partition, usize> =
            partitions.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let columns: Vec<Vec<BigInt>> = partitions
            .par_iter()
            .map(|alpha| {
                let mut memo = HashMap::new();
                partitions
                    .iter()
                    .map(|lambda| mn_value(lambda, alpha.parts(), 0, &mut memo))
                    .collect()
            })
            .collect();
        let p = partitions.len();
        let values = (0..p)
            .map(|l| (0..p).map(|a| columns[a][l].clone()).collect())
            .collect();
        CharTable {
            n,
            partitions,
            index,
            values,
        }
    }

    /// Writes the line-oriented cache format.
    pub fn write_to(&self, out: &mut impl Write) -> std::io::Result<()> {
        writeln!(out, "{CACHE_HEADER} n={}", self.n)?;
        for (l, lambda) in self.partitions.iter().enumerate() {
            for (a, alpha) in self.partitions.iter().enumerate() {
                writeln!(out, "{lambda}\t{alpha}\t{}", self.values[l][a])?;
            }
        }
        Ok(())
    }

    /// Reads the cache format; `Ok(None)` when the header or contents do not
    /// match this version or this n.
    pub fn read_from(n: usize, input: impl BufRead) -> Result<Option<CharTable>> {
        let mut lines = input.lines();
        let header = match lines.next() {
            Some(line) => line?,
            None => return Ok(None),
        };
        if header.trim_end() != format!("{CACHE_HEADER} n={n}") {
            return Ok(None);
        }
        let partitions = enumerate_partitions(n);
        let index: HashMap<Partition, usize> =
            partitions.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let p = partitions.len();
        let mut values = vec![vec![None; p]; p];
        let mut seen = 0usize;
        for line in lines {
            let line = line?;
            if line.is_empty() {
                continue;
            }
            let mut fields = line.split('\t');
            let (Some(l), Some(a), Some(v), None) = (fields.next(), fields.next(), fields.next(), fields.next())
            else {
                return Ok(None);
            };
            let (Ok(l), Ok(a)) = (l.parse::<Partition>(), a.parse::<Partition>()) else {
                return Ok(None);
            };
            let (Some(&li), Some(&ai)) = (index.get(&l), index.get(&a)) else {
                return Ok(None);
            };
            let Ok(v) = v.parse::<BigInt>() else {
                return Ok(None);
            };
            if values[li][ai].replace(v).is_none() {
                seen += 1;
            }
        }
        if seen != p * p {
            return Ok(None);
        }
        let values = values
            .into_iter()
            .map(|row| row.into_iter().map(|v| v.expect("all entries seen")).collect())
            .collect();
        Ok(Some(CharTable {
            n,
            partitions,
            index,
            values,
        }))
    }
}

/// Murnaghan–Nakayama recursion on `(shape, index into class parts)`.
fn mn_value(
    shape: &Partition,
    class: &[u32],
    idx: usize,
    memo: &mut HashMap<(Partition, usize), BigInt>,
) -> BigInt {
    if idx == class.len() {
        return if shape.is_empty() { BigInt::one() } else { BigInt::zero() };
    }
    if let Some(v) = memo.get(&(shape.clone(), idx)) {
        return v.clone();
    }
    let r = class[idx];
    let mut total = BigInt::zero();
    for (next, height) in remove_rim_hooks(shape, r) {
        let v = mn_value(&next, class, idx + 1, memo);
        if height % 2 == 0 {
            total += v;
        } else {
            total -= v;
        }
    }
    memo.insert((shape.clone(), idx), total.clone());
    total
}

/// All shapes obtained by removing a rim hook of length `r`, with leg lengths.
pub(crate) fn remove_rim_hooks(shape: &Partition, r: u32) -> Vec<(Partition, usize)> {
    let len = shape.len();
    let beta: Vec<u32> = (0..len).map(|i| shape.part(i) + (len - 1 - i) as u32).collect();
    let mut out = Vec::new();
    for (i, &b) in beta.iter().enumerate() {
        if b < r {
            continue;
        }
        let target = b - r;
        if beta.contains(&target) {
            continue;
        }
        let height = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut next = beta.clone();
        next[i] = target;
        next.sort_unstable_by(|x, y| y.cmp(x));
        let parts = next
            .iter()
            .enumerate()
            .map(|(j, &x)| x - (len - 1 - j) as u32)
            .collect();
        out.push((Partition::from_sorted(parts), height));
    }
    out
}

/// χ^λ(α) for a single pair.
pub fn character_value(lambda: &Partition, alpha: &Partition) -> Result<BigInt> {
    if lambda.size() != alpha.size() {
        return Err(Error::argument(format!(
            "character χ^{lambda:?}({alpha:?}): sizes {} and {} differ",
            lambda.size(),
            alpha.size()
        )));
    }
    Ok(mn_value(lambda, alpha.parts(), 0, &mut HashMap::new()))
}

type Slot = Arc<OnceLock<Arc<CharTable>>>;

static TABLES: Mutex<Option<HashMap<usize, Slot>>> = Mutex::new(None);

fn slot(n: usize) -> Slot {
    let mut guard = TABLES.lock().unwrap_or_else(|e| e.into_inner());
    guard.get_or_insert_with(HashMap::new).entry(n).or_default().clone()
}

/// Character table of S_n with the default cap, memoized in process.
pub fn character_table(n: usize) -> Result<Arc<CharTable>> {
    character_table_with(n, DEFAULT_TABLE_CAP, None)
}

/// Character table of S_n; reuses `cache_dir/chartable_n<n>.tsv` when present
/// and compatible, and writes it otherwise.
pub fn character_table_with(n: usize, cap: usize, cache_dir: Option<&Path>) -> Result<Arc<CharTable>> {
    check_cap("character table", n, cap)?;
    let slot = slot(n);
    let mut loaded = None;
    if let Some(dir) = cache_dir {
        let path = cache_path(dir, n);
        if let Ok(file) = fs::File::open(&path) {
            loaded = CharTable::read_from(n, BufReader::new(file))?;
        }
    }
    let from_disk = loaded.is_some();
    let table = match slot.get() {
        Some(t) => t.clone(),
        None => slot
            .get_or_init(|| Arc::new(loaded.unwrap_or_else(|| CharTable::compute(n))))
            .clone(),
    };
    if let (Some(dir), false) = (cache_dir, from_disk) {
        fs::create_dir_all(dir)?;
        let path = cache_path(dir, n);
        let tmp = path.with_extension("tsv.tmp");
        {
            let mut out = BufWriter::new(fs::File::create(&tmp)?);
            table.write_to(&mut out)?;
            out.flush()?;
        }
        fs::rename(&tmp, &path)?;
    }
    Ok(table)
}

pub fn cache_path(dir: &Path, n: usize) -> PathBuf {
    dir.join(format!("chartable_n{n}.tsv"))
}
