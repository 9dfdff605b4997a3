use super::{chordal_distance, OracleError, SpherePoint};

/// Minimum-cost perfect matching on a square cost matrix (Hungarian method,
/// potentials form). Returns `assign[row] = column`.
pub fn min_cost_assignment(cost: &[Vec<f64>]) -> Vec<usize> {
    let n = cost.len();
    let (mut u, mut v) = (vec![0.0; n + 1], vec![0.0; n + 1]);
    // p[col] = row matched to col, 1-based; 0 means free.
    let mut p = vec![0usize; n + 1];
    let mut way = vec![0usize; n + 1];
    for i in 1..=n {
        p[0] = i;
        let mut j0 = 0;
        let mut minv = vec![f64::INFINITY; n + 1];
        let mut used = vec![false; n + 1];
        loop {
            used[j0] = true;
            let i0 = p[j0];
            let mut delta = f64::INFINITY;
            let mut j1 = 0;
            for j in 1..=n {
                if used[j] {
                    continue;
                }
                let cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
                if cur < minv[j] {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if minv[j] < delta {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for j in 0..=n {
                if used[j] {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
            if p[j0] == 0 {
                break;
            }
        }
        loop {
            let j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
            if j0 == 0 {
                break;
            }
        }
    }
    let mut assign = vec![0; n];
    for j in 1..=n {
        if p[j] > 0 {
            assign[p[j] - 1] = j - 1;
        }
    }
    assign
}

/// Optimal chordal matching of two multisets; `(all pairs ≤ tol, worst pair)`.
pub fn multiset_match(a: &[SpherePoint], b: &[SpherePoint], tol: f64) -> Result<(bool, f64), OracleError> {
    if a.len() != b.len() {
        return Err(OracleError::LengthMismatch { left: a.len(), right: b.len() });
    }
    let cost: Vec<Vec<f64>> = a.iter().map(|p| b.iter().map(|q| chordal_distance(p, q)).collect()).collect();
    let worst = min_cost_assignment(&cost).iter().enumerate().map(|(i, &j)| cost[i][j]).fold(0.0, f64::max);
    Ok((worst <= tol, worst))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(re: f64) -> SpherePoint {
        SpherePoint::Finite { re, im: 0.0 }
    }

    #[test]
    fn beats_greedy() {
        // Greedy row-by-row takes (0,0)=1 then (1,1)=10; optimal is 2 + 3.
        let cost = vec![vec![1.0, 2.0], vec![3.0, 10.0]];
        assert_eq!(min_cost_assignment(&cost), vec![1, 0]);
    }

    #[test]
    fn agrees_with_brute_force() {
        let cost: Vec<Vec<f64>> =
            (0..5).map(|i| (0..5).map(|j| ((i * 7 + j * 13) % 11) as f64 + 0.1 * (i * j) as f64).collect()).collect();
        let total = |a: &[usize]| a.iter().enumerate().map(|(i, &j)| cost[i][j]).sum::<f64>();
        let mut best = f64::INFINITY;
        let mut perm: Vec<usize> = (0..5).collect();
        permute(&mut perm, 0, &mut |p| best = best.min(total(p)));
        assert!((total(&min_cost_assignment(&cost)) - best).abs() < 1e-12);
    }

    fn permute(p: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
        if k == p.len() {
            f(p);
            return;
        }
        for i in k..p.len() {
            p.swap(k, i);
            permute(p, k + 1, f);
            p.swap(k, i);
        }
    }

    #[test]
    fn matching_examples() {
        let tol = 1e-6;
        assert_eq!(multiset_match(&[pt(0.0), pt(1.0)], &[pt(0.0), pt(1.0)], tol).unwrap(), (true, 0.0));
        assert_eq!(multiset_match(&[pt(0.0), pt(1.0)], &[pt(1.0), pt(0.0)], tol).unwrap(), (true, 0.0));
        let (ok, worst) = multiset_match(&[pt(0.0), pt(1.0)], &[pt(0.0), pt(1.0 + 2.0 * tol)], tol).unwrap();
        assert!(!ok);
        // chordal factor at 1 is 2 / (1 + 1) = 1
        assert!((worst - 2.0 * tol).abs() < 1e-9);
        assert_eq!(multiset_match(&[pt(0.0)], &[], tol), Err(OracleError::LengthMismatch { left: 1, right: 0 }));
    }
}
