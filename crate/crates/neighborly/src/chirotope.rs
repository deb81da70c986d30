//! Uniform chirotopes: alternating sign maps on r-subsets of the ground set.

use crate::error::OmError;
use crate::matrixint::det_exact;
use crate::sign::{Sign, SignVector};
use crate::subsets::{binomial, sort_parity, SubsetIndex, MAX_GROUND};

use num_traits::Zero;

/// Two-bit packed sign storage, indexed lexicographically by r-subset.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PackedSigns {
    len: usize,
    words: Vec<u64>,
}

const PLUS_BITS: u64 = 0b01;
const MINUS_BITS: u64 = 0b10;

impl PackedSigns {
    pub fn zeros(len: usize) -> PackedSigns {
        PackedSigns {
            len,
            words: vec![0; len.div_ceil(32)],
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> Sign {
        debug_assert!(i < self.len);
        match (self.words[i >> 5] >> ((i & 31) << 1)) & 0b11 {
            PLUS_BITS => Sign::Plus,
            MINUS_BITS => Sign::Minus,
            _ => Sign::Zero,
        }
    }

    #[inline]
    pub fn set(&mut self, i: usize, s: Sign) {
        debug_assert!(i < self.len);
        let shift = (i & 31) << 1;
        let w = &mut self.words[i >> 5];
        *w &= !(0b11 << shift);
        *w |= match s {
            Sign::Plus => PLUS_BITS << shift,
            Sign::Minus => MINUS_BITS << shift,
            Sign::Zero => 0,
        };
    }

    pub fn iter(&self) -> impl Iterator<Item = Sign> + '_ {
        (0..self.len).map(move |i| self.get(i))
    }
}

/// A rank-r uniform oriented matroid on `{0,..,n-1}`, stored as the signs of
/// all sorted r-subsets in lexicographic order.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Chirotope {
    rank: usize,
    n: usize,
    signs: PackedSigns,
}

impl Chirotope {
    pub fn new(
        rank: usize,
        n: usize,
        signs: impl IntoIterator<Item = Sign>,
    ) -> Result<Chirotope, OmError> {
        assert!(rank >= 1 && n >= rank && n <= MAX_GROUND);
        let expected = binomial(n, rank) as usize;
        let mut packed = PackedSigns::zeros(expected);
        let mut got = 0usize;
        for (i, s) in signs.into_iter().enumerate() {
            if i >= expected {
                got = i + 1;
                continue;
            }
            if s.is_zero() {
                return Err(OmError::ZeroSign { index: i });
            }
            packed.set(i, s);
            got = i + 1;
        }
        if got != expected {
            return Err(OmError::SignCount {
                rank,
                n,
                expected,
                got,
            });
        }
        Ok(Chirotope {
            rank,
            n,
            signs: packed,
        })
    }

    /// The rank-r simplex: all basis orientations positive, n = r.
    pub fn simplex(rank: usize) -> Chirotope {
        Chirotope::new(rank, rank, std::iter::once(Sign::Plus)).unwrap()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn basis_index(&self) -> SubsetIndex {
        SubsetIndex::new(self.n, self.rank)
    }

    pub fn num_bases(&self) -> usize {
        self.signs.len()
    }

    /// Sign at a sorted r-subset.
    #[inline]
    pub fn eval_sorted(&self, subset: &[usize]) -> Sign {
        self.signs.get(self.basis_index().rank(subset))
    }

    /// Order-sensitive evaluation: the stored sign times the parity of the
    /// permutation sorting `seq`. Panics on repeated elements.
    pub fn eval_seq(&self, seq: &[usize]) -> Sign {
        assert_eq!(seq.len(), self.rank, "basis sequence has wrong length");
        let mut buf = [0usize; MAX_GROUND];
        buf[..seq.len()].copy_from_slice(seq);
        let odd = sort_parity(&mut buf[..seq.len()]);
        self.eval_sorted(&buf[..seq.len()]).flip_if(odd)
    }

    /// The normalized cocircuit representative `C^H`: zero on the
    /// (r-1)-subset `H`, and `eval_seq(H ++ [g])` at every other `g`.
    pub fn cocircuit(&self, h: &[usize]) -> Result<SignVector, OmError> {
        if h.len() + 1 != self.rank {
            return Err(OmError::SubsetSize {
                expected: self.rank - 1,
                got: h.len(),
            });
        }
        let mut out = SignVector::zero(self.n);
        let mut merged = [0usize; MAX_GROUND];
        for g in 0..self.n {
            if h.contains(&g) {
                continue;
            }
            // Parity of appending g and sorting = #elements of h above g.
            let mut above = 0usize;
            let mut k = 0;
            for &t in h {
                if t > g {
                    above += 1;
                }
                merged[k] = t;
                k += 1;
            }
            merged[k] = g;
            let m = &mut merged[..k + 1];
            m.sort_unstable();
            out.set(g, self.eval_sorted(m).flip_if(above % 2 == 1));
        }
        Ok(out)
    }

    /// The circuit supported on the (r+1)-subset `L`: the entry at the i-th
    /// smallest element is `(-1)^i * chi(L minus that element)`.
    pub fn circuit(&self, l: &[usize]) -> Result<SignVector, OmError> {
        if l.len() != self.rank + 1 {
            return Err(OmError::SubsetSize {
                expected: self.rank + 1,
                got: l.len(),
            });
        }
        let mut sorted = l.to_vec();
        sorted.sort_unstable();
        let mut out = SignVector::zero(self.n);
        let mut sub = Vec::with_capacity(self.rank);
        for (i, &a) in sorted.iter().enumerate() {
            sub.clear();
            sub.extend(sorted.iter().copied().filter(|&x| x != a));
            out.set(a, self.eval_sorted(&sub).flip_if(i % 2 == 1));
        }
        Ok(out)
    }

    /// Deletion of a single element; the ground set is relabeled
    /// order-preservingly onto `{0,..,n-2}`.
    pub fn delete(&self, e: usize) -> Result<Chirotope, OmError> {
        assert!(e < self.n);
        if self.n - 1 < self.rank {
            return Err(OmError::RankDeficient {
                rank: self.rank,
                n: self.n,
            });
        }
        let ix = SubsetIndex::new(self.n - 1, self.rank);
        let mut out = PackedSigns::zeros(ix.count());
        let mut mapped = Vec::with_capacity(self.rank);
        for (i, sub) in ix.iter().enumerate() {
            mapped.clear();
            mapped.extend(sub.iter().map(|&x| if x < e { x } else { x + 1 }));
            out.set(i, self.eval_sorted(&mapped));
        }
        Ok(Chirotope {
            rank: self.rank,
            n: self.n - 1,
            signs: out,
        })
    }

    /// Contraction by `f` (sorted, |f| < rank); the remaining elements are
    /// relabeled order-preservingly.
    pub fn contract(&self, f: &[usize]) -> Result<Chirotope, OmError> {
        if f.len() >= self.rank {
            return Err(OmError::ContractTooLarge {
                rank: self.rank,
                size: f.len(),
            });
        }
        let mut fs = f.to_vec();
        fs.sort_unstable();
        let keep: Vec<usize> = (0..self.n).filter(|x| !fs.contains(x)).collect();
        let new_rank = self.rank - fs.len();
        let new_n = keep.len();
        let ix = SubsetIndex::new(new_n, new_rank);
        let mut out = PackedSigns::zeros(ix.count());
        let mut seq = Vec::with_capacity(self.rank);
        for (i, sub) in ix.iter().enumerate() {
            seq.clear();
            seq.extend_from_slice(&fs);
            seq.extend(sub.iter().map(|&x| keep[x]));
            out.set(i, self.eval_seq(&seq));
        }
        Ok(Chirotope {
            rank: new_rank,
            n: new_n,
            signs: out,
        })
    }

    /// The dual chirotope of rank n-r: the value at a complement subset is
    /// the original value times the parity of the shuffle `(subset, complement)`.
    pub fn dual(&self) -> Chirotope {
        let dual_rank = self.n - self.rank;
        let ix = SubsetIndex::new(self.n, dual_rank);
        let primal = self.basis_index();
        let mut out = PackedSigns::zeros(ix.count());
        let mut comp = Vec::with_capacity(self.rank);
        for (i, sub) in ix.iter().enumerate() {
            comp.clear();
            comp.extend((0..self.n).filter(|x| !sub.contains(x)));
            // Inversions between the blocks (comp, sub) of the concatenation.
            let inversions: usize = comp
                .iter()
                .map(|&x| sub.iter().filter(|&&y| y < x).count())
                .sum();
            let v = self.signs.get(primal.rank(&comp)).flip_if(inversions % 2 == 1);
            out.set(i, v);
        }
        Chirotope {
            rank: dual_rank,
            n: self.n,
            signs: out,
        }
    }

    /// Relabeling along the permutation `perm` (element e becomes `perm[e]`).
    pub fn relabel(&self, perm: &[usize]) -> Chirotope {
        assert_eq!(perm.len(), self.n);
        let mut inv = vec![0usize; self.n];
        for (e, &img) in perm.iter().enumerate() {
            inv[img] = e;
        }
        let ix = self.basis_index();
        let mut out = PackedSigns::zeros(ix.count());
        let mut seq = Vec::with_capacity(self.rank);
        for (i, sub) in ix.iter().enumerate() {
            seq.clear();
            seq.extend(sub.iter().map(|&x| inv[x]));
            out.set(i, self.eval_seq(&seq));
        }
        Chirotope {
            rank: self.rank,
            n: self.n,
            signs: out,
        }
    }

    /// Reorientation by a subset: each basis sign flips by `(-1)^{|basis ∩ a|}`.
    pub fn reorient(&self, a: &[usize]) -> Chirotope {
        let mut mask = 0u32;
        for &e in a {
            assert!(e < self.n);
            mask |= 1 << e;
        }
        let ix = self.basis_index();
        let mut out = PackedSigns::zeros(ix.count());
        for (i, sub) in ix.iter().enumerate() {
            let hits = sub.iter().filter(|&&x| mask & (1 << x) != 0).count();
            out.set(i, self.signs.get(i).flip_if(hits % 2 == 1));
        }
        Chirotope {
            rank: self.rank,
            n: self.n,
            signs: out,
        }
    }

    /// Global sign flip. Represents the same oriented matroid.
    pub fn negate(&self) -> Chirotope {
        let mut out = PackedSigns::zeros(self.signs.len());
        for i in 0..self.signs.len() {
            out.set(i, -self.signs.get(i));
        }
        Chirotope {
            rank: self.rank,
            n: self.n,
            signs: out,
        }
    }

    /// The lexicographically smaller of the two global signings; catalog
    /// entries are stored in this form.
    pub fn normalize_global_sign(&self) -> Chirotope {
        if self.signs.get(0) == Sign::Plus {
            self.clone()
        } else {
            self.negate()
        }
    }

    /// Checks every 3-term Grassmann-Plücker sign condition: for each
    /// (r-2)-subset tau and a<b<c<d disjoint from it, the triple
    /// `(ev(tau,a,b)ev(tau,c,d), -ev(tau,a,c)ev(tau,b,d), ev(tau,a,d)ev(tau,b,c))`
    /// must not be all-equal.
    pub fn is_gp_consistent(&self) -> bool {
        if self.rank < 2 || self.n < self.rank + 2 {
            return true;
        }
        let tau_ix = SubsetIndex::new(self.n, self.rank - 2);
        let mut rest = Vec::with_capacity(self.n);
        for tau in tau_ix.iter() {
            rest.clear();
            rest.extend((0..self.n).filter(|x| !tau.contains(x)));
            let m = rest.len();
            for ia in 0..m {
                for ib in ia + 1..m {
                    for ic in ib + 1..m {
                        for id in ic + 1..m {
                            let (a, b, c, d) = (rest[ia], rest[ib], rest[ic], rest[id]);
                            // Products of sorted-subset values: the common
                            // parity factor cancels inside each product pair.
                            let t1 = self.sorted_pair(&tau, a, b) * self.sorted_pair(&tau, c, d);
                            let t2 = self.sorted_pair(&tau, a, c) * self.sorted_pair(&tau, b, d);
                            let t3 = self.sorted_pair(&tau, a, d) * self.sorted_pair(&tau, b, c);
                            if t1 == -t2 && -t2 == t3 {
                                return false;
                            }
                        }
                    }
                }
            }
        }
        true
    }

    /// Stored sign at the sorted union `tau ∪ {x, y}` (no appended-order parity).
    pub fn sorted_pair(&self, tau: &[usize], x: usize, y: usize) -> Sign {
        let mut buf = [0usize; MAX_GROUND];
        buf[..tau.len()].copy_from_slice(tau);
        buf[tau.len()] = x;
        buf[tau.len() + 1] = y;
        let merged = &mut buf[..tau.len() + 2];
        merged.sort_unstable();
        self.eval_sorted(merged)
    }

    /// Exact chirotope of a homogenized integer point configuration
    /// (rank d+1 for d-dimensional points). Any vanishing determinant is a
    /// degeneracy error naming the offending subset (1-based).
    pub fn from_points(points: &[Vec<i64>]) -> Result<Chirotope, OmError> {
        let rows: Vec<Vec<i64>> = points
            .iter()
            .map(|p| {
                let mut row = p.clone();
                row.push(1);
                row
            })
            .collect();
        Chirotope::from_vectors(&rows)
    }

    /// Exact chirotope of an integer vector configuration (rank = dimension).
    pub fn from_vectors(vectors: &[Vec<i64>]) -> Result<Chirotope, OmError> {
        let n = vectors.len();
        assert!(n > 0, "empty configuration");
        let rank = vectors[0].len();
        assert!(
            vectors.iter().all(|v| v.len() == rank),
            "vectors of mixed dimension"
        );
        assert!(n >= rank && n <= MAX_GROUND);
        let ix = SubsetIndex::new(n, rank);
        let mut out = PackedSigns::zeros(ix.count());
        for (i, sub) in ix.iter().enumerate() {
            let mat: Vec<Vec<i64>> = sub.iter().map(|&p| vectors[p].clone()).collect();
            let det = det_exact(&mat)?;
            if det.is_zero() {
                return Err(OmError::Degenerate {
                    subset: sub.iter().map(|&x| x + 1).collect(),
                });
            }
            let s = if det.sign() == num_bigint::Sign::Plus {
                Sign::Plus
            } else {
                Sign::Minus
            };
            out.set(i, s);
        }
        Ok(Chirotope {
            rank,
            n,
            signs: out,
        })
    }

    pub fn signs_string(&self) -> String {
        self.signs.iter().map(|s| s.as_char()).collect()
    }

    pub fn from_signs_str(rank: usize, n: usize, s: &str) -> Result<Chirotope, OmError> {
        let signs: Option<Vec<Sign>> = s.chars().map(Sign::from_char).collect();
        let signs = signs.ok_or_else(|| OmError::CatalogParse {
            line: 0,
            msg: format!("invalid sign character in '{s}'"),
        })?;
        Chirotope::new(rank, n, signs)
    }
}
