//! Dissections of a convex polygon, counted by number of diagonals.
//!
//! Trees on a ground set of size `n` with `k` nodes are equinumerous with
//! dissections of an `(n + 2)`-gon by `k - 1` pairwise non-crossing
//! diagonals, independently of the signature.

/// Entry `d` counts the sets of `d` pairwise non-crossing diagonals of the
/// `(n + 2)`-gon, for `d` up to `n - 1`.
pub fn dissection_counts(n: usize) -> Vec<u64> {
    if n == 0 {
        return vec![1];
    }
    let vertices = n + 2;
    let mut diagonals = Vec::new();
    for a in 0..vertices {
        for b in a + 2..vertices {
            if !(a == 0 && b == vertices - 1) {
                diagonals.push((a, b));
            }
        }
    }
    let crossing = |&(a, b): &(usize, usize), &(c, d): &(usize, usize)| {
        (a < c && c < b && b < d) || (c < a && a < d && d < b)
    };
    let mut counts = vec![0u64; n];
    let mut chosen: Vec<(usize, usize)> = Vec::new();
    fn descend(
        diagonals: &[(usize, usize)],
        from: usize,
        chosen: &mut Vec<(usize, usize)>,
        counts: &mut [u64],
        crossing: &impl Fn(&(usize, usize), &(usize, usize)) -> bool,
    ) {
        counts[chosen.len()] += 1;
        for i in from..diagonals.len() {
            if chosen.iter().all(|d| !crossing(d, &diagonals[i])) {
                chosen.push(diagonals[i]);
                descend(diagonals, i + 1, chosen, counts, crossing);
                chosen.pop();
            }
        }
    }
    descend(&diagonals, 0, &mut chosen, &mut counts, &crossing);
    counts
}

/// Total number of dissections: the small Schröder number.
pub fn small_schroder_number(n: usize) -> u64 {
    dissection_counts(n).iter().sum()
}

/// Closed form for dissections with `k` cells, so `k - 1` diagonals:
/// binomial(n - 1, k - 1) * binomial(n + k, k - 1) / k.
pub fn dissection_cells_formula(n: usize, k: usize) -> u64 {
    assert!((1..=n).contains(&k));
    let value = binomial(n - 1, k - 1) * binomial(n + k, k - 1);
    assert_eq!(value % k as u128, 0, "cell count is integral");
    (value / k as u128) as u64
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let mut out: u128 = 1;
    for i in 0..k.min(n - k) {
        out = out * (n - i) as u128 / (i + 1) as u128;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pentagon_counts() {
        assert_eq!(dissection_counts(3), vec![1, 5, 5]);
        assert_eq!(dissection_counts(2), vec![1, 2]);
    }

    #[test]
    fn totals_follow_the_small_schroder_sequence() {
        let totals: Vec<u64> = (0..=7).map(small_schroder_number).collect();
        assert_eq!(totals, vec![1, 1, 3, 11, 45, 197, 903, 4279]);
    }

    #[test]
    fn closed_form_matches_enumeration() {
        for n in 1..=8 {
            let counts = dissection_counts(n);
            for k in 1..=n {
                assert_eq!(counts[k - 1], dissection_cells_formula(n, k), "n={n} k={k}");
            }
        }
    }
}
