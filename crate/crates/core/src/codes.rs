//! Linear codes given by generator rows, additive codes over an extension
//! alphabet, and exhaustive minimum-distance enumeration.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::galois::{ExtensionTower, Field};

/// Default cap on the number of information vectors visited by exhaustive
/// distance computations.
pub const DEFAULT_BUDGET: u128 = 1 << 24;

/// `T^steps`: `T(c) = (c_{n-1}, c_0, ..., c_{n-2})`. Negative steps shift
/// the other way.
pub fn shift<T: Clone>(v: &[T], steps: i64) -> Vec<T> {
    let mut out = v.to_vec();
    if !out.is_empty() {
        let s = steps.rem_euclid(out.len() as i64) as usize;
        out.rotate_right(s);
    }
    out
}

/// The quasi-cyclic shift in block layout: the word is cut into `l` blocks
/// of length `n / l` and each block is shifted by `T`. Reading the word
/// interleaved (`c_{i,j}` at `j l + i`) this is exactly `T^l`.
pub fn block_shift<T: Clone>(v: &[T], l: usize) -> Vec<T> {
    let m = v.len() / l;
    v.chunks(m.max(1)).flat_map(|b| shift(b, 1)).collect()
}

/// Hamming weight of a vector of encodings.
pub fn weight(v: &[u32]) -> usize {
    v.iter().filter(|&&c| c != 0).count()
}

/// Row-reduced echelon form; returns the nonzero rows and their pivot columns.
fn row_reduce(field: &Field, rows: &[Vec<u32>], n: usize) -> (Vec<Vec<u32>>, Vec<usize>) {
    let mut m: Vec<Vec<u32>> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..n {
        let Some(sel) = (r..m.len()).find(|&i| m[i][col] != 0) else {
            continue;
        };
        m.swap(r, sel);
        let inv = field.inv(m[r][col]).expect("nonzero pivot");
        for x in m[r].iter_mut() {
            *x = field.mul(*x, inv);
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[col] == 0 {
                continue;
            }
            let c = row[col];
            for (x, &y) in row.iter_mut().zip(&pivot_row) {
                *x = field.sub(*x, field.mul(c, y));
            }
        }
        pivots.push(col);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    m.truncate(r);
    (m, pivots)
}

/// A linear `[n, k]` code over a [`Field`].
#[derive(Clone, Debug)]
pub struct LinearCode {
    field: Field,
    n: usize,
    gens: Vec<Vec<u32>>,
    rref: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

impl LinearCode {
    /// Code spanned by `gens`; every row must have length `n` and contain
    /// valid encodings. An empty list gives the zero code.
    pub fn new(field: &Field, n: usize, gens: Vec<Vec<u32>>) -> Result<LinearCode> {
        for row in &gens {
            if row.len() != n {
                return Err(Error::LengthMismatch {
                    expected: n,
                    found: row.len(),
                });
            }
            for &c in row {
                field.check(c as u64)?;
            }
        }
        let (rref, pivots) = row_reduce(field, &gens, n);
        Ok(LinearCode {
            field: field.clone(),
            n,
            gens,
            rref,
            pivots,
        })
    }

    /// The whole space `F_q^n`.
    pub fn whole_space(field: &Field, n: usize) -> LinearCode {
        let rows = (0..n)
            .map(|i| {
                let mut r = vec![0; n];
                r[i] = 1;
                r
            })
            .collect();
        LinearCode::new(field, n, rows).expect("identity rows are valid")
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Dimension.
    pub fn k(&self) -> usize {
        self.rref.len()
    }

    /// Generator rows as supplied.
    pub fn generators(&self) -> &[Vec<u32>] {
        &self.gens
    }

    /// Basis rows in reduced echelon form.
    pub fn basis(&self) -> &[Vec<u32>] {
        &self.rref
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn rate(&self) -> f64 {
        self.k() as f64 / self.n as f64
    }

    /// Number of codewords, `q^k`, saturating.
    pub fn size(&self) -> u128 {
        (self.field.order() as u128).saturating_pow(self.k() as u32)
    }

    fn reduce(&self, v: &[u32]) -> Vec<u32> {
        let f = &self.field;
        let mut w = v.to_vec();
        for (row, &p) in self.rref.iter().zip(&self.pivots) {
            let c = w[p];
            if c != 0 {
                for (x, &y) in w.iter_mut().zip(row) {
                    *x = f.sub(*x, f.mul(c, y));
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        v.len() == self.n && self.reduce(v).iter().all(|&c| c == 0)
    }

    /// `info * basis`.
    pub fn encode(&self, info: &[u32]) -> Result<Vec<u32>> {
        if info.len() != self.k() {
            return Err(Error::LengthMismatch {
                expected: self.k(),
                found: info.len(),
            });
        }
        let f = &self.field;
        let mut out = vec![0; self.n];
        for (&c, row) in info.iter().zip(&self.rref) {
            if c == 0 {
                continue;
            }
            for (x, &y) in out.iter_mut().zip(row) {
                *x = f.add(*x, f.mul(c, y));
            }
        }
        Ok(out)
    }

    /// Same row space.
    pub fn same_code(&self, other: &LinearCode) -> bool {
        self.field == other.field && self.n == other.n && self.rref == other.rref
    }

    /// `l`-quasi-cyclic in block layout: invariant under [`block_shift`].
    /// `l` must divide `n`; `l = 1` is plain cyclicity.
    pub fn is_quasi_cyclic(&self, l: usize) -> Result<bool> {
        if l == 0 || !self.n.is_multiple_of(l) {
            return Err(Error::NotDivisible { n: self.n, by: l });
        }
        Ok(self.rref.iter().all(|g| self.contains(&block_shift(g, l))))
    }

    pub fn is_cyclic(&self) -> bool {
        self.is_quasi_cyclic(1).unwrap_or(false)
    }

    /// Smallest divisor `l` of `n` for which the code is `l`-quasi-cyclic.
    pub fn index(&self) -> usize {
        if self.n == 0 {
            return 1;
        }
        (1..=self.n)
            .filter(|l| self.n.is_multiple_of(*l))
            .find(|&l| self.is_quasi_cyclic(l).unwrap_or(false))
            .unwrap_or(self.n)
    }

    /// Whether `map` sends every codeword back into the code. `map` must be
    /// `F_q`-linear; only basis rows are checked.
    pub fn is_invariant_under(&self, map: impl Fn(&[u32]) -> Vec<u32>) -> bool {
        self.rref.iter().all(|g| self.contains(&map(g)))
    }

    /// Null space under the standard inner product.
    pub fn dual(&self) -> LinearCode {
        let f = &self.field;
        let mut rows = Vec::with_capacity(self.n - self.k());
        for col in (0..self.n).filter(|c| !self.pivots.contains(c)) {
            let mut w = vec![0; self.n];
            w[col] = 1;
            for (row, &p) in self.rref.iter().zip(&self.pivots) {
                w[p] = f.neg(row[col]);
            }
            rows.push(w);
        }
        LinearCode::new(f, self.n, rows).expect("rows built from a valid code")
    }

    pub fn inner(&self, a: &[u32], b: &[u32]) -> u32 {
        let f = &self.field;
        a.iter().zip(b).fold(0, |acc, (&x, &y)| f.add(acc, f.mul(x, y)))
    }

    /// `k = n/2` and `G G^t = 0`.
    pub fn is_self_dual(&self) -> bool {
        if 2 * self.k() != self.n {
            return false;
        }
        self.rref
            .iter()
            .enumerate()
            .all(|(i, a)| self.rref[i..].iter().all(|b| self.inner(a, b) == 0))
    }

    /// Code with coordinates reordered: output position `i` takes input
    /// coordinate `perm[i]`.
    pub fn permute_columns(&self, perm: &[usize]) -> Result<LinearCode> {
        if perm.len() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                found: perm.len(),
            });
        }
        let rows = self.gens.iter().map(|g| perm.iter().map(|&p| g[p]).collect()).collect();
        LinearCode::new(&self.field, self.n, rows)
    }

    pub fn enumerator(&self, budget: u128) -> Result<Enumerator> {
        Enumerator::new(&self.field, self.rref.clone(), 1, budget)
    }

    /// Exact minimum distance by exhaustive enumeration of the `q^k`
    /// information vectors (up to scalar multiples).
    pub fn min_distance(&self, budget: u128) -> Result<usize> {
        self.enumerator(budget)?.min_weight()
    }

    /// `A_w` for `w = 0..=n`.
    pub fn weight_distribution(&self, budget: u128) -> Result<Vec<u128>> {
        Ok(self.enumerator(budget)?.weight_distribution())
    }
}

/// Exhaustive walk over a code's nonzero codewords, one per scalar class.
///
/// Information vectors are normalized so their first nonzero coordinate is 1;
/// scaling preserves weight, so this loses nothing for minimum weight and
/// weight counts. The walk splits into blocks keyed by a fixed prefix of the
/// information vector; distinct prefixes cover disjoint sets and any prefix
/// length covers everything exactly once.
pub struct Enumerator {
    field: Field,
    n: usize,
    symbol: usize,
    /// `multiples[i][c]` is `c` times basis row `i`.
    multiples: Vec<Vec<Vec<u32>>>,
}

impl Enumerator {
    /// `symbol` groups consecutive coordinates into one alphabet symbol for
    /// weight purposes (1 for ordinary codes).
    pub(crate) fn new(field: &Field, basis: Vec<Vec<u32>>, symbol: usize, budget: u128) -> Result<Enumerator> {
        let k = basis.len();
        if k == 0 {
            return Err(Error::EmptyCode);
        }
        let needed = (field.order() as u128).saturating_pow(k as u32);
        if needed > budget {
            return Err(Error::BudgetExceeded { needed, budget });
        }
        let n = basis[0].len();
        let multiples = basis
            .iter()
            .map(|row| {
                (0..field.order())
                    .map(|c| row.iter().map(|&x| field.mul(c, x)).collect())
                    .collect()
            })
            .collect();
        Ok(Enumerator {
            field: field.clone(),
            n,
            symbol,
            multiples,
        })
    }

    pub fn dimension(&self) -> usize {
        self.multiples.len()
    }

    /// Number of weight classes: `n / symbol`.
    pub fn length(&self) -> usize {
        self.n / self.symbol
    }

    /// All normalized prefixes of the given length (clamped to `k`), in
    /// lexicographic order. Together they partition the walk.
    pub fn blocks(&self, prefix_len: usize) -> Vec<Vec<u32>> {
        let t = prefix_len.min(self.dimension());
        let q = self.field.order();
        let mut out = Vec::new();
        let mut cur = vec![0u32; t];
        loop {
            if cur.iter().find(|&&c| c != 0).is_none_or(|&c| c == 1) {
                out.push(cur.clone());
            }
            // Odometer, last position fastest.
            let mut i = t;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                cur[i] += 1;
                if cur[i] < q {
                    break;
                }
                cur[i] = 0;
            }
        }
    }

    fn weight(&self, v: &[u32]) -> usize {
        if self.symbol == 1 {
            weight(v)
        } else {
            v.chunks(self.symbol).filter(|s| s.iter().any(|&c| c != 0)).count()
        }
    }

    /// Calls `visit` with the weight of every normalized nonzero codeword
    /// whose information vector starts with `prefix`.
    pub fn walk_block(&self, prefix: &[u32], mut visit: impl FnMut(usize)) {
        let f = &self.field;
        let k = self.dimension();
        let mut partial = vec![vec![0u32; self.n]; k + 1];
        let mut seen = false;
        for (i, &c) in prefix.iter().enumerate().take(k) {
            if !seen && c != 0 && c != 1 {
                return;
            }
            seen |= c != 0;
            let (lo, hi) = partial.split_at_mut(i + 1);
            for ((o, &a), &b) in hi[0].iter_mut().zip(&lo[i]).zip(&self.multiples[i][c as usize]) {
                *o = f.add(a, b);
            }
        }
        self.descend(prefix.len().min(k), seen, &mut partial, &mut visit);
    }

    fn descend(&self, level: usize, seen: bool, partial: &mut [Vec<u32>], visit: &mut impl FnMut(usize)) {
        let k = self.dimension();
        if level == k {
            if seen {
                visit(self.weight(&partial[k]));
            }
            return;
        }
        let f = &self.field;
        let top = if seen { self.field.order() } else { 2 };
        for c in 0..top {
            let (lo, hi) = partial.split_at_mut(level + 1);
            for ((o, &a), &b) in hi[0].iter_mut().zip(&lo[level]).zip(&self.multiples[level][c as usize]) {
                *o = f.add(a, b);
            }
            self.descend(level + 1, seen || c != 0, partial, visit);
        }
    }

    /// Minimum weight within one block, `None` when the block is empty.
    pub fn block_min_weight(&self, prefix: &[u32]) -> Option<usize> {
        let mut best: Option<usize> = None;
        self.walk_block(prefix, |w| best = Some(best.map_or(w, |b| b.min(w))));
        best
    }

    /// Per-weight counts of normalized codewords within one block.
    pub fn block_weight_counts(&self, prefix: &[u32]) -> Vec<u128> {
        let mut counts = vec![0u128; self.length() + 1];
        self.walk_block(prefix, |w| counts[w] += 1);
        counts
    }

    pub fn min_weight(&self) -> Result<usize> {
        self.block_min_weight(&[]).ok_or(Error::EmptyCode)
    }

    /// Turns merged normalized counts into the full weight distribution.
    pub fn scale_counts(&self, mut counts: Vec<u128>) -> Vec<u128> {
        let units = (self.field.order() - 1) as u128;
        for c in counts.iter_mut() {
            *c *= units;
        }
        counts[0] = 1;
        counts
    }

    pub fn weight_distribution(&self) -> Vec<u128> {
        self.scale_counts(self.block_weight_counts(&[]))
    }
}

/// An `F_q`-linear code of length `m` over `GF(q^l)`.
///
/// Stored as generators in the top field plus their expansion into an
/// `F_q`-linear code of length `m l` (position `j`, coordinate `i` at column
/// `j l + i`), on which all predicates reduce to rank computations.
#[derive(Clone, Debug)]
pub struct AdditiveCode {
    tower: ExtensionTower,
    m: usize,
    gens: Vec<Vec<u32>>,
    expanded: LinearCode,
}

impl AdditiveCode {
    pub fn new(tower: &ExtensionTower, m: usize, gens: Vec<Vec<u32>>) -> Result<AdditiveCode> {
        let top = tower.top();
        for g in &gens {
            if g.len() != m {
                return Err(Error::LengthMismatch {
                    expected: m,
                    found: g.len(),
                });
            }
            for &c in g {
                top.check(c as u64)?;
            }
        }
        let rows = gens.iter().map(|g| Self::expand_word(tower, g)).collect();
        let expanded = LinearCode::new(tower.base(), m * tower.degree(), rows)?;
        Ok(AdditiveCode {
            tower: tower.clone(),
            m,
            gens,
            expanded,
        })
    }

    fn expand_word(tower: &ExtensionTower, word: &[u32]) -> Vec<u32> {
        word.iter().flat_map(|&c| tower.expand(c)).collect()
    }

    pub fn tower(&self) -> &ExtensionTower {
        &self.tower
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn generators(&self) -> &[Vec<u32>] {
        &self.gens
    }

    /// The `F_q` image of the code, length `m l`.
    pub fn expanded(&self) -> &LinearCode {
        &self.expanded
    }

    /// Dimension over `F_q`.
    pub fn k_q(&self) -> usize {
        self.expanded.k()
    }

    /// `q^{k_q}`, saturating.
    pub fn size(&self) -> u128 {
        self.expanded.size()
    }

    pub fn contains(&self, word: &[u32]) -> bool {
        word.len() == self.m && self.expanded.contains(&Self::expand_word(&self.tower, word))
    }

    /// `T(g)` lies in the `F_q`-span for every generator `g`.
    pub fn is_additive_cyclic(&self) -> bool {
        self.gens.iter().all(|g| self.contains(&shift(g, 1)))
    }

    /// Closed under multiplication by `z`, i.e. `GF(q^l)`-linear.
    pub fn is_extension_linear(&self) -> bool {
        if !self.k_q().is_multiple_of(self.tower.degree()) {
            return false;
        }
        let top = self.tower.top();
        let z = self.tower.z();
        self.gens.iter().all(|g| {
            let zg: Vec<u32> = g.iter().map(|&c| top.mul(z, c)).collect();
            self.contains(&zg)
        })
    }

    pub fn enumerator(&self, budget: u128) -> Result<Enumerator> {
        Enumerator::new(
            self.tower.base(),
            self.expanded.basis().to_vec(),
            self.tower.degree(),
            budget,
        )
    }

    /// Minimum Hamming weight over `GF(q^l)` of a nonzero codeword.
    pub fn min_distance(&self, budget: u128) -> Result<usize> {
        self.enumerator(budget)?.min_weight()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(q: u64) -> Field {
        Field::with_order(q).unwrap()
    }

    fn repetition(f: &Field, n: usize) -> LinearCode {
        LinearCode::new(f, n, vec![vec![1; n]]).unwrap()
    }

    #[test]
    fn shift_examples() {
        assert_eq!(shift(&[0, 1, 2], 1), vec![2, 0, 1]);
        assert_eq!(shift(&[0, 1, 2], 3), vec![0, 1, 2]);
        assert_eq!(shift(&[0, 1, 2], 0), vec![0, 1, 2]);
        assert_eq!(shift(&[0, 1, 2], -1), vec![1, 2, 0]);
        assert_eq!(block_shift(&[0, 1, 2, 3, 4, 5], 2), vec![2, 0, 1, 5, 3, 4]);
        assert_eq!(block_shift(&[0, 1, 2, 3], 4), vec![0, 1, 2, 3]);
        assert_eq!(block_shift(&[0, 1, 2, 3], 1), shift(&[0, 1, 2, 3], 1));
        assert_eq!(weight(&[0, 0, 0]), 0);
        assert_eq!(weight(&[1, 0, 1]), 2);
    }

    #[test]
    fn repetition_and_whole_space() {
        let f = gf(3);
        let rep = repetition(&f, 5);
        assert_eq!(rep.k(), 1);
        assert_eq!(rep.index(), 1);
        assert_eq!(rep.min_distance(DEFAULT_BUDGET).unwrap(), 5);
        let all = LinearCode::whole_space(&f, 4);
        assert_eq!(all.min_distance(DEFAULT_BUDGET).unwrap(), 1);
        assert!(all.is_quasi_cyclic(2).unwrap());
        assert!(all.is_cyclic());
        assert!(!all.is_self_dual());
        assert!(matches!(all.is_quasi_cyclic(3), Err(Error::NotDivisible { .. })));
    }

    #[test]
    fn self_dual_small() {
        let f = gf(2);
        assert!(repetition(&f, 2).is_self_dual());
        // (I | 2I) over GF(5): 1 + 4 = 0.
        let f5 = gf(5);
        let c = LinearCode::new(&f5, 4, vec![vec![1, 0, 2, 0], vec![0, 1, 0, 2]]).unwrap();
        assert!(c.is_self_dual());
    }

    #[test]
    fn dual_properties() {
        let f = gf(3);
        let c = LinearCode::new(
            &f,
            6,
            vec![vec![1, 2, 0, 1, 1, 0], vec![0, 1, 1, 2, 0, 1], vec![1, 0, 2, 0, 2, 2]],
        )
        .unwrap();
        let d = c.dual();
        assert_eq!(c.k() + d.k(), 6);
        assert!(d.dual().same_code(&c));
        for a in c.basis() {
            for b in d.basis() {
                assert_eq!(c.inner(a, b), 0);
            }
        }
        let zero = LinearCode::new(&f, 3, vec![]).unwrap();
        assert_eq!(zero.dual().k(), 3);
        assert_eq!(zero.min_distance(DEFAULT_BUDGET), Err(Error::EmptyCode));
    }

    #[test]
    fn budget_is_enforced() {
        let c = LinearCode::whole_space(&gf(2), 10);
        assert!(matches!(
            c.min_distance(512),
            Err(Error::BudgetExceeded {
                needed: 1024,
                budget: 512
            })
        ));
        assert_eq!(c.min_distance(1024).unwrap(), 1);
    }

    #[test]
    fn weight_distribution_matches_brute_force() {
        let f = gf(4);
        let c = LinearCode::new(&f, 5, vec![vec![1, 2, 3, 0, 1], vec![0, 1, 1, 2, 3]]).unwrap();
        let mut brute = vec![0u128; 6];
        for a in 0..4 {
            for b in 0..4 {
                brute[weight(&c.encode(&[a, b]).unwrap())] += 1;
            }
        }
        assert_eq!(c.weight_distribution(DEFAULT_BUDGET).unwrap(), brute);
    }

    #[test]
    fn blocks_partition_the_walk() {
        let f = gf(3);
        let c = LinearCode::new(
            &f,
            6,
            vec![vec![1, 1, 0, 2, 0, 1], vec![0, 2, 1, 1, 0, 0], vec![2, 0, 0, 1, 1, 1]],
        )
        .unwrap();
        let e = c.enumerator(DEFAULT_BUDGET).unwrap();
        let whole = e.block_weight_counts(&[]);
        for t in 0..=4 {
            let mut merged = vec![0u128; 7];
            let mut best = usize::MAX;
            for b in e.blocks(t) {
                for (m, x) in merged.iter_mut().zip(e.block_weight_counts(&b)) {
                    *m += x;
                }
                if let Some(w) = e.block_min_weight(&b) {
                    best = best.min(w);
                }
            }
            assert_eq!(merged, whole);
            assert_eq!(best, e.min_weight().unwrap());
        }
    }

    #[test]
    fn index_of_a_two_qc_code() {
        // (I | P) with P the 3-cycle: invariant under T^2 but not T.
        let f = gf(2);
        let c = LinearCode::new(
            &f,
            6,
            vec![vec![1, 0, 0, 0, 1, 0], vec![0, 1, 0, 0, 0, 1], vec![0, 0, 1, 1, 0, 0]],
        )
        .unwrap();
        assert_eq!(c.k(), 3);
        assert_eq!(c.min_distance(DEFAULT_BUDGET).unwrap(), 2);
        assert!(c.is_quasi_cyclic(6).unwrap());
        assert!(!c.is_cyclic());
        assert_eq!(c.index(), 2);
    }

    #[test]
    fn additive_examples() {
        let gf2 = gf(2);
        let t = ExtensionTower::new(&gf2, 2).unwrap();
        let zero = AdditiveCode::new(&t, 3, vec![]).unwrap();
        assert!(zero.is_additive_cyclic());
        assert!(zero.is_extension_linear());
        let single = AdditiveCode::new(&t, 3, vec![vec![1, 0, 0]]).unwrap();
        assert_eq!(single.k_q(), 1);
        assert!(!single.is_additive_cyclic());
        assert!(!single.is_extension_linear());
        // GF(4)-linear cyclic code: the repetition code over GF(4) as F_2-span.
        let z = t.z();
        let rep = AdditiveCode::new(&t, 3, vec![vec![1, 1, 1], vec![z, z, z]]).unwrap();
        assert!(rep.is_additive_cyclic());
        assert!(rep.is_extension_linear());
        assert_eq!(rep.min_distance(DEFAULT_BUDGET).unwrap(), 3);
        assert_eq!(rep.size(), 4);
    }
}
