use srm_core::enumerate::{count_srms, enumerate_srms, ClassFilter};
use srm_core::{is_srm, SignMatrix};

/// Every matrix in {-1,0,1}^(m x n), tested directly.
fn brute_count(m: usize, n: usize) -> u64 {
    let cells = m * n;
    let mut count = 0;
    for code in 0..3u32.pow(cells as u32) {
        let mut c = code;
        let data: Vec<i64> = (0..cells)
            .map(|_| {
                let v = (c % 3) as i64 - 1;
                c /= 3;
                v
            })
            .collect();
        if is_srm(&SignMatrix::from_i64(m, n, &data).unwrap()) {
            count += 1;
        }
    }
    count
}

#[test]
fn counts_match_brute_force() {
    for (m, n) in [(1, 1), (1, 3), (2, 2), (2, 3), (3, 2), (3, 3)] {
        assert_eq!(count_srms(m, n, &ClassFilter::all()).unwrap(), brute_count(m, n), "{m}x{n}");
    }
}

#[test]
fn enumeration_is_sorted_and_distinct() {
    let keys: Vec<Vec<i8>> = enumerate_srms(3, 3, &ClassFilter::all())
        .unwrap()
        .map(|a| a.column_major_key())
        .collect();
    assert!(keys.windows(2).all(|w| w[0] < w[1]));
}
