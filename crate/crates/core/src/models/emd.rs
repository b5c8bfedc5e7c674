//! Earth-mover distance between equal-weight point clouds, computed exactly
//! as a minimum-cost assignment via shortest augmenting paths with dual
//! potentials (O(n^3)).

use crate::error::Error;

/// Minimum average Euclidean transport cost between two clouds of equal
/// cardinality: `(1/n) min over permutations of sum ||a_i - b_pi(i)||`.
pub fn emd(a: &[[f64; 2]], b: &[[f64; 2]]) -> Result<f64, Error> {
    if a.len() != b.len() {
        return Err(Error::UnequalCloudSizes(a.len(), b.len()));
    }
    let n = a.len();
    if n == 0 {
        return Ok(0.0);
    }
    let mut cost = vec![0.0; n * n];
    for (i, p) in a.iter().enumerate() {
        for (j, q) in b.iter().enumerate() {
            cost[i * n + j] = ((p[0] - q[0]).powi(2) + (p[1] - q[1]).powi(2)).sqrt();
        }
    }
    let assignment = solve_assignment(&cost, n);
    let total: f64 = assignment
        .iter()
        .enumerate()
        .map(|(i, &j)| cost[i * n + j])
        .sum();
    Ok(total / n as f64)
}

/// Dense square linear assignment: returns, per row, the assigned column of
/// a minimum-total-cost perfect matching.
pub(crate) fn solve_assignment(cost: &[f64], n: usize) -> Vec<usize> {
    let mut u = vec![0.0f64; n];
    let mut v = vec![0.0f64; n];
    let mut shortest = vec![f64::INFINITY; n];
    let mut path = vec![usize::MAX; n];
    let mut col4row = vec![usize::MAX; n];
    let mut row4col = vec![usize::MAX; n];
    let mut scanned_rows = vec![false; n];
    let mut scanned_cols = vec![false; n];
    let mut remaining = vec![0usize; n];

    for cur_row in 0..n {
        scanned_rows.iter_mut().for_each(|x| *x = false);
        scanned_cols.iter_mut().for_each(|x| *x = false);
        shortest.iter_mut().for_each(|x| *x = f64::INFINITY);
        for (it, r) in remaining.iter_mut().enumerate() {
            *r = n - it - 1;
        }
        let mut num_remaining = n;

        let mut min_val = 0.0;
        let mut i = cur_row;
        let sink;
        loop {
            scanned_rows[i] = true;
            let mut lowest = f64::INFINITY;
            let mut index = usize::MAX;
            for it in 0..num_remaining {
                let j = remaining[it];
                let r = min_val + cost[i * n + j] - u[i] - v[j];
                if r < shortest[j] {
                    path[j] = i;
                    shortest[j] = r;
                }
                // On ties, prefer an unassigned column: it terminates the
                // path immediately.
                if shortest[j] < lowest || (shortest[j] == lowest && row4col[j] == usize::MAX) {
                    lowest = shortest[j];
                    index = it;
                }
            }
            min_val = lowest;
            debug_assert!(min_val.is_finite(), "infeasible assignment instance");

            let j = remaining[index];
            scanned_cols[j] = true;
            remaining[index] = remaining[num_remaining - 1];
            num_remaining -= 1;

            if row4col[j] == usize::MAX {
                sink = j;
                break;
            }
            i = row4col[j];
        }

        u[cur_row] += min_val;
        for r in 0..n {
            if scanned_rows[r] && r != cur_row {
                u[r] += min_val - shortest[col4row[r]];
            }
        }
        for c in 0..n {
            if scanned_cols[c] {
                v[c] -= min_val - shortest[c];
            }
        }

        let mut j = sink;
        loop {
            let i = path[j];
            row4col[j] = i;
            std::mem::swap(&mut col4row[i], &mut j);
            if i == cur_row {
                break;
            }
        }
    }
    col4row
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lds::fresh_uniform_stream;

    fn brute_force_emd(a: &[[f64; 2]], b: &[[f64; 2]]) -> f64 {
        let n = a.len();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut best = f64::INFINITY;
        permute(&mut perm, 0, &mut |p| {
            let total: f64 = p
                .iter()
                .enumerate()
                .map(|(i, &j)| {
                    ((a[i][0] - b[j][0]).powi(2) + (a[i][1] - b[j][1]).powi(2)).sqrt()
                })
                .sum();
            best = best.min(total);
        });
        best / n as f64
    }

    fn permute(items: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
        if k == items.len() {
            visit(items);
            return;
        }
        for i in k..items.len() {
            items.swap(k, i);
            permute(items, k + 1, visit);
            items.swap(k, i);
        }
    }

    fn random_cloud(stream: &mut crate::lds::RandomStream, n: usize) -> Vec<[f64; 2]> {
        (0..n)
            .map(|_| [stream.next_f64() * 10.0 - 5.0, stream.next_f64() * 10.0 - 5.0])
            .collect()
    }

    #[test]
    fn identical_clouds_have_distance_zero() {
        let a = vec![[0.0, 0.0], [1.0, 2.0], [3.0, -1.0]];
        assert_eq!(emd(&a, &a).unwrap(), 0.0);
    }

    #[test]
    fn single_pair_is_euclidean() {
        assert_eq!(emd(&[[0.0, 0.0]], &[[3.0, 4.0]]).unwrap(), 5.0);
    }

    #[test]
    fn unequal_sizes_rejected() {
        assert!(emd(&[[0.0, 0.0]], &[[1.0, 1.0], [2.0, 2.0]]).is_err());
    }

    #[test]
    fn matches_brute_force_on_six_point_clouds() {
        let mut stream = fresh_uniform_stream(17, 0);
        for case in 0..30 {
            let a = random_cloud(&mut stream, 6);
            let b = random_cloud(&mut stream, 6);
            let fast = emd(&a, &b).unwrap();
            let slow = brute_force_emd(&a, &b);
            assert!((fast - slow).abs() < 1e-12, "case {case}: {fast} vs {slow}");
        }
    }

    #[test]
    fn metric_properties_on_random_triples() {
        let mut stream = fresh_uniform_stream(18, 0);
        for _ in 0..40 {
            let a = random_cloud(&mut stream, 5);
            let b = random_cloud(&mut stream, 5);
            let c = random_cloud(&mut stream, 5);
            let dab = emd(&a, &b).unwrap();
            let dba = emd(&b, &a).unwrap();
            let dac = emd(&a, &c).unwrap();
            let dcb = emd(&c, &b).unwrap();
            assert!(dab >= 0.0);
            assert!((dab - dba).abs() < 1e-12, "symmetry: {dab} vs {dba}");
            assert!(dab <= dac + dcb + 1e-12, "triangle: {dab} > {dac} + {dcb}");
        }
    }

    #[test]
    fn zero_iff_equal_multisets() {
        let a = vec![[1.0, 1.0], [2.0, 2.0]];
        let b = vec![[2.0, 2.0], [1.0, 1.0]]; // same multiset, different order
        assert_eq!(emd(&a, &b).unwrap(), 0.0);
        let c = vec![[1.0, 1.0], [2.0, 2.1]];
        assert!(emd(&a, &c).unwrap() > 0.0);
    }
}
