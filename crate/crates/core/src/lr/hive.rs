//! Knutson–Tao hive counting.
//!
//! A hive of size ℓ is an integer array on the vertices (i, j), 0 ≤ j ≤ i ≤ ℓ,
//! of a triangle. On every rhombus made of two adjacent unit triangles the sum
//! at the obtuse vertices is at least the sum at the acute ones. With boundary
//! h(i,0) = λ₁+…+λᵢ, h(i,i) = μ₁+…+μᵢ and h(ℓ,ℓ−j) = |μ| + ν₁+…+νⱼ the number
//! of hives is c^λ_{μν}.

use crate::partition::Partition;

/// Vertex (i, j) as a flat index.
fn at(i: usize, j: usize) -> usize {
    i * (i + 1) / 2 + j
}

/// `a + b ≥ c + d` over vertex indices.
#[derive(Clone, Copy, Debug)]
struct Rhombus {
    obtuse: [usize; 2],
    acute: [usize; 2],
}

fn rhombi(size: usize) -> Vec<Rhombus> {
    let mut out = Vec::new();
    for i in 0..size {
        for j in 0..=i {
            // shared edge (i,j)–(i+1,j+1)
            if j < i {
                out.push(Rhombus {
                    obtuse: [at(i, j), at(i + 1, j + 1)],
                    acute: [at(i + 1, j), at(i, j + 1)],
                });
            }
            // shared edge (i,j)–(i+1,j)
            if j >= 1 {
                out.push(Rhombus {
                    obtuse: [at(i, j), at(i + 1, j)],
                    acute: [at(i, j - 1), at(i + 1, j + 1)],
                });
            }
        }
    }
    // shared edge (i,j)–(i,j+1)
    for i in 1..size {
        for j in 0..i {
            out.push(Rhombus {
                obtuse: [at(i, j), at(i, j + 1)],
                acute: [at(i - 1, j), at(i + 1, j + 1)],
            });
        }
    }
    out
}

/// A linear constraint `sign·h[target] ≥ rhs(known)` attached to the last
/// interior vertex of a rhombus.
struct Bound {
    upper: bool,
    rhombus: Rhombus,
    target: usize,
}

pub(crate) fn count_hives(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    let size = lambda.len().max(mu.len()).max(nu.len());
    if size == 0 {
        return 1;
    }
    let verts = at(size, size) + 1;
    let mut h = vec![0i64; verts];
    let mut known = vec![false; verts];
    let partial = |p: &Partition, i: usize| -> i64 { (0..i).map(|r| p.part(r) as i64).sum() };
    for i in 0..=size {
        h[at(i, 0)] = partial(lambda, i);
        known[at(i, 0)] = true;
        h[at(i, i)] = partial(mu, i);
        known[at(i, i)] = true;
    }
    let mu_size = mu.size() as i64;
    for j in 0..=size {
        let v = at(size, size - j);
        let value = mu_size + partial(nu, j);
        if known[v] && h[v] != value {
            return 0;
        }
        h[v] = value;
        known[v] = true;
    }

    // interior vertices in row-major order; position of each vertex in it
    let mut order = Vec::new();
    let mut pos = vec![usize::MAX; verts];
    for i in 0..=size {
        for j in 0..=i {
            if !known[at(i, j)] {
                pos[at(i, j)] = order.len();
                order.push(at(i, j));
            }
        }
    }

    let mut bounds: Vec<Vec<Bound>> = (0..order.len()).map(|_| Vec::new()).collect();
    for r in rhombi(size) {
        let vs = [r.obtuse[0], r.obtuse[1], r.acute[0], r.acute[1]];
        let last = vs.iter().filter(|&&v| pos[v] != usize::MAX).max_by_key(|&&v| pos[v]);
        match last {
            None => {
                if h[r.obtuse[0]] + h[r.obtuse[1]] < h[r.acute[0]] + h[r.acute[1]] {
                    return 0;
                }
            }
            Some(&v) => bounds[pos[v]].push(Bound {
                upper: r.acute.contains(&v),
                rhombus: r,
                target: v,
            }),
        }
    }

    fn walk(k: usize, order: &[usize], bounds: &[Vec<Bound>], h: &mut [i64]) -> u64 {
        if k == order.len() {
            return 1;
        }
        let mut lo = i64::MIN;
        let mut hi = i64::MAX;
        for b in &bounds[k] {
            let r = &b.rhombus;
            let sum_other = |pair: [usize; 2]| -> i64 {
                pair.iter().filter(|&&v| v != b.target).map(|&v| h[v]).sum()
            };
            if b.upper {
                hi = hi.min(h[r.obtuse[0]] + h[r.obtuse[1]] - sum_other(r.acute));
            } else {
                lo = lo.max(h[r.acute[0]] + h[r.acute[1]] - sum_other(r.obtuse));
            }
        }
        assert!(lo > i64::MIN && hi < i64::MAX, "hive interval unbounded");
        let mut total = 0;
        for value in lo..=hi {
            h[order[k]] = value;
            total += walk(k + 1, order, bounds, h);
        }
        total
    }
    walk(0, &order, &bounds, &mut h)
}
