//! Seeded random SRMs: a random (0,1)-SRM followed by random interchanges
//! that keep the SRM conditions, which introduces -1 entries.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::interchange::{apply_interchange, InterchangeStep, Sign};
use crate::matrix::SignMatrix;
use crate::srm::{is_srm, Srm};

/// Each column independently zero or `e_r` for a uniform row `r`.
pub fn random_plus_srm(m: usize, n: usize, rng: &mut impl Rng) -> Srm {
    let mut a = SignMatrix::zeros_unchecked(m, n);
    for j in 0..n {
        let r = rng.random_range(0..=m);
        if r < m {
            a.set_unchecked(r, j, 1);
        }
    }
    Srm::new_unchecked(a)
}

/// `attempts` random interchanges proposed on a random (0,1)-SRM; those that
/// would break the SRM conditions are skipped.
pub fn random_srm(m: usize, n: usize, attempts: usize, rng: &mut impl Rng) -> Srm {
    let mut a = random_plus_srm(m, n, rng).into_matrix();
    if m < 2 || n < 2 {
        return Srm::new_unchecked(a);
    }
    for _ in 0..attempts {
        let (i, k) = distinct_pair(m, rng);
        let (j, l) = distinct_pair(n, rng);
        let sign = if rng.random_bool(0.5) { Sign::Plus } else { Sign::Minus };
        let step = InterchangeStep::new((i + 1, k + 1), (j + 1, l + 1), sign).expect("distinct indices");
        if let Ok(b) = apply_interchange(&a, &step) {
            if is_srm(&b) {
                a = b;
            }
        }
    }
    Srm::new_unchecked(a)
}

fn distinct_pair(n: usize, rng: &mut impl Rng) -> (usize, usize) {
    let a = rng.random_range(0..n);
    let mut b = rng.random_range(0..n - 1);
    if b >= a {
        b += 1;
    }
    (a.min(b), a.max(b))
}

/// `count` random SRMs with shapes drawn from `min_dim..=max_dim`.
pub fn sample_srms(seed: u64, count: usize, min_dim: usize, max_dim: usize) -> Vec<Srm> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let m = rng.random_range(min_dim..=max_dim);
            let n = rng.random_range(min_dim..=max_dim);
            let attempts = 4 * m * n;
            random_srm(m, n, attempts, &mut rng)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn samples_are_srms_with_negatives() {
        let xs = sample_srms(7, 200, 3, 6);
        assert!(xs.iter().all(|a| is_srm(a)));
        assert!(xs.iter().filter(|a| !a.is_plus()).count() > 50);
        assert_eq!(sample_srms(7, 5, 3, 6), sample_srms(7, 5, 3, 6));
    }
}
