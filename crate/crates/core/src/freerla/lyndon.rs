//! Lyndon words over the alphabet `0..r`, ordered by letter value.

/// Strictly smaller than each of its proper suffixes (equivalently, than
/// each proper rotation).
pub fn is_lyndon(w: &[usize]) -> bool {
    !w.is_empty() && (1..w.len()).all(|i| w < &w[i..])
}

/// All Lyndon words of length at most `max_len` over `r` letters, in
/// lexicographic order (Duval's algorithm).
pub fn lyndon_words(r: usize, max_len: usize) -> LyndonWords {
    LyndonWords { r, max_len, next: (r > 0 && max_len > 0).then(|| vec![0]) }
}

pub struct LyndonWords {
    r: usize,
    max_len: usize,
    next: Option<Vec<usize>>,
}

impl Iterator for LyndonWords {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let current = self.next.take()?;
        let mut w = current.clone();
        let m = w.len();
        while w.len() < self.max_len {
            w.push(w[w.len() - m]);
        }
        while w.last() == Some(&(self.r - 1)) {
            w.pop();
        }
        if let Some(last) = w.last_mut() {
            *last += 1;
            self.next = Some(w);
        }
        Some(current)
    }
}

/// Counts Lyndon words by length without materialising them: entry `m` is
/// the number of Lyndon words of length `m`.
pub fn count_by_length(r: usize, max_len: usize) -> Vec<u64> {
    let mut counts = vec![0u64; max_len + 1];
    for w in lyndon_words(r, max_len) {
        counts[w.len()] += 1;
    }
    counts
}

/// Standard factorisation `w = u v` with `v` the longest proper Lyndon
/// suffix. Both factors are Lyndon. Requires `|w| >= 2`.
pub fn standard_factorization(w: &[usize]) -> (&[usize], &[usize]) {
    debug_assert!(w.len() >= 2 && is_lyndon(w));
    let i = (1..w.len()).find(|&i| is_lyndon(&w[i..])).expect("last letter is Lyndon");
    (&w[..i], &w[i..])
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn small_alphabet() {
        let words: Vec<Vec<usize>> = lyndon_words(2, 4).collect();
        let expected: Vec<Vec<usize>> = vec![
            vec![0],
            vec![0, 0, 0, 1],
            vec![0, 0, 1],
            vec![0, 0, 1, 1],
            vec![0, 1],
            vec![0, 1, 1],
            vec![0, 1, 1, 1],
            vec![1],
        ];
        assert_eq!(words, expected);
        assert_eq!(lyndon_words(0, 3).count(), 0);
        assert_eq!(lyndon_words(3, 0).count(), 0);
    }

    #[test]
    fn factorization() {
        assert_eq!(standard_factorization(&[0, 0, 1]), (&[0][..], &[0, 1][..]));
        assert_eq!(standard_factorization(&[0, 1, 1]), (&[0, 1][..], &[1][..]));
        assert_eq!(standard_factorization(&[0, 0, 1, 0, 1]), (&[0, 0, 1][..], &[0, 1][..]));
    }

    fn brute_force(r: usize, len: usize) -> u64 {
        let total = r.pow(len as u32);
        (0..total)
            .filter(|&code| {
                let mut c = code;
                let mut w = vec![0; len];
                for slot in w.iter_mut().rev() {
                    *slot = c % r;
                    c /= r;
                }
                is_lyndon(&w)
            })
            .count() as u64
    }

    #[test]
    fn counts_match_brute_force() {
        for r in 1..=3 {
            let c = count_by_length(r, 7);
            for len in 1..=7 {
                assert_eq!(c[len], brute_force(r, len), "r={r} len={len}");
            }
        }
    }

    proptest! {
        #[test]
        fn generated_words_are_lyndon_and_sorted(r in 1usize..4, n in 1usize..7) {
            let words: Vec<_> = lyndon_words(r, n).collect();
            for w in &words {
                prop_assert!(is_lyndon(w));
                if w.len() >= 2 {
                    let (u, v) = standard_factorization(w);
                    prop_assert!(is_lyndon(u) && is_lyndon(v) && u < v);
                }
            }
            prop_assert!(words.windows(2).all(|p| p[0] < p[1]));
        }
    }
}
