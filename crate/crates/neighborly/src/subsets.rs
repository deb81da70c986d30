//! Lexicographic indexing of sorted m-subsets of `{0, .., n-1}`.
//!
//! All chirotope storage and the catalog file format depend on this order, so
//! it is fixed once here: subsets are compared as sorted tuples, smallest
//! first (`{0,1,2} < {0,1,3} < .. < {n-3,n-2,n-1}`).

pub const MAX_GROUND: usize = 24;

const BINOM: [[u64; MAX_GROUND + 1]; MAX_GROUND + 1] = build_binom();

const fn build_binom() -> [[u64; MAX_GROUND + 1]; MAX_GROUND + 1] {
    let mut t = [[0u64; MAX_GROUND + 1]; MAX_GROUND + 1];
    let mut n = 0;
    while n <= MAX_GROUND {
        t[n][0] = 1;
        let mut k = 1;
        while k <= n {
            t[n][k] = t[n - 1][k - 1] + if k <= n - 1 { t[n - 1][k] } else { 0 };
            k += 1;
        }
        n += 1;
    }
    t
}

pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    assert!(n <= MAX_GROUND, "ground set too large");
    BINOM[n][k]
}

/// Bijection between sorted m-subsets of `{0,..,n-1}` and `0..C(n,m)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SubsetIndex {
    pub n: usize,
    pub m: usize,
}

impl SubsetIndex {
    pub fn new(n: usize, m: usize) -> SubsetIndex {
        assert!(m <= n && n <= MAX_GROUND);
        SubsetIndex { n, m }
    }

    pub fn count(&self) -> usize {
        binomial(self.n, self.m) as usize
    }

    /// Lexicographic rank of a sorted subset.
    pub fn rank(&self, subset: &[usize]) -> usize {
        debug_assert_eq!(subset.len(), self.m);
        let mut r = 0u64;
        let mut prev = 0usize;
        for (i, &c) in subset.iter().enumerate() {
            debug_assert!(c < self.n && (i == 0 || c > subset[i - 1]));
            for j in prev..c {
                r += BINOM[self.n - 1 - j][self.m - 1 - i];
            }
            prev = c + 1;
        }
        r as usize
    }

    /// Inverse of `rank`; writes the subset into `out`.
    pub fn unrank(&self, mut idx: usize, out: &mut Vec<usize>) {
        out.clear();
        let mut c = 0usize;
        for i in 0..self.m {
            loop {
                let block = BINOM[self.n - 1 - c][self.m - 1 - i] as usize;
                if idx < block {
                    break;
                }
                idx -= block;
                c += 1;
            }
            out.push(c);
            c += 1;
        }
    }

    pub fn subset(&self, idx: usize) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.m);
        self.unrank(idx, &mut out);
        out
    }

    pub fn iter(&self) -> SubsetIter {
        SubsetIter {
            n: self.n,
            current: (0..self.m).collect(),
            done: self.m > self.n,
            fresh: true,
        }
    }
}

/// Iterates sorted m-subsets of `{0,..,n-1}` in lexicographic order.
pub struct SubsetIter {
    n: usize,
    current: Vec<usize>,
    done: bool,
    fresh: bool,
}

impl Iterator for SubsetIter {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        if self.fresh {
            self.fresh = false;
            return Some(self.current.clone());
        }
        let m = self.current.len();
        if m == 0 {
            self.done = true;
            return None;
        }
        // Advance the rightmost element that still has room.
        let mut i = m;
        loop {
            if i == 0 {
                self.done = true;
                return None;
            }
            i -= 1;
            if self.current[i] + 1 <= self.n - (m - i) {
                self.current[i] += 1;
                for j in i + 1..m {
                    self.current[j] = self.current[j - 1] + 1;
                }
                return Some(self.current.clone());
            }
        }
    }
}

/// Parity of the permutation sorting `seq`, as a boolean (`true` = odd).
/// Panics if `seq` contains a repeated element.
pub fn sort_parity(seq: &mut [usize]) -> bool {
    let mut odd = false;
    for i in 1..seq.len() {
        let mut j = i;
        while j > 0 && seq[j - 1] > seq[j] {
            seq.swap(j - 1, j);
            odd = !odd;
            j -= 1;
        }
        assert!(j == 0 || seq[j - 1] != seq[j], "repeated element in basis sequence");
    }
    odd
}
