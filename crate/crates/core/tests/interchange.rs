use srm_core::interchange::{apply_interchange, InterchangeStep, Sign};
use srm_core::margins::margins;
use srm_core::SignMatrix;

fn sm<R: AsRef<[i8]>>(rows: &[R]) -> SignMatrix {
    SignMatrix::from_rows(rows).unwrap()
}

fn all_steps(n: usize) -> Vec<InterchangeStep> {
    let mut out = Vec::new();
    for i in 1..=n {
        for k in i + 1..=n {
            for j in 1..=n {
                for l in j + 1..=n {
                    for sign in [Sign::Plus, Sign::Minus] {
                        out.push(InterchangeStep::new((i, k), (j, l), sign).unwrap());
                    }
                }
            }
        }
    }
    out
}

/// Fewest interchanges from `a` to `b` through (0,±1)-matrices, up to `limit`.
fn distance(a: &SignMatrix, b: &SignMatrix, steps: &[InterchangeStep], limit: usize) -> Option<usize> {
    fn reach(a: &SignMatrix, b: &SignMatrix, steps: &[InterchangeStep], depth: usize) -> bool {
        if a == b {
            return true;
        }
        // each step changes at most four entries
        let gap = a.as_slice().iter().zip(b.as_slice()).filter(|(x, y)| x != y).count();
        if depth == 0 || gap > 4 * depth {
            return false;
        }
        steps
            .iter()
            .filter_map(|s| apply_interchange(a, s).ok())
            .any(|next| reach(&next, b, steps, depth - 1))
    }
    (0..=limit).find(|&d| reach(a, b, steps, d))
}

#[test]
fn five_by_five_walk_is_single_interchanges() {
    let walk = [
        sm(&[[1, 0, -1, 1, 0], [-1, 1, 1, 0, 0], [-1, 1, 1, -1, 1], [1, 0, -1, 1, 0], [1, -1, 1, 0, 0]]),
        sm(&[[1, 0, 0, 0, 0], [-1, 1, 0, 1, 0], [-1, 1, 1, -1, 1], [1, 0, -1, 1, 0], [1, -1, 1, 0, 0]]),
        sm(&[[1, 0, 0, 0, 0], [-1, 1, 0, 1, 0], [-1, 1, 1, 0, 0], [1, 0, -1, 0, 1], [1, -1, 1, 0, 0]]),
        sm(&[[1, 0, 0, 0, 0], [-1, 1, 0, 1, 0], [0, 1, 0, 0, 0], [0, 0, 0, 0, 1], [1, -1, 1, 0, 0]]),
        sm(&[[1, 0, 0, 0, 0], [0, 0, 0, 1, 0], [0, 1, 0, 0, 0], [0, 0, 0, 0, 1], [0, 0, 1, 0, 0]]),
    ];
    let ones = margins(&walk[4]);
    assert_eq!(ones.row_sums, vec![1; 5]);
    assert_eq!(ones.col_sums, vec![1; 5]);
    let steps = all_steps(5);
    let mut lengths = Vec::new();
    for pair in walk.windows(2) {
        assert_eq!(margins(&pair[0]), ones);
        lengths.push(distance(&pair[0], &pair[1], &steps, 3).expect("arrow within three interchanges"));
    }
    assert_eq!(lengths, [1, 1, 1, 1]);
}
