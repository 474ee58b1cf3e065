//! Based reduced root data, the finite Weyl group, and chamber combinatorics.
//!
//! Roots are integer covectors on the cocharacter lattice, coroots integer
//! vectors in it; everything is exact.

use std::collections::HashMap;

use crate::error::{Error, Result};

/// Integer vector in the cocharacter lattice X_*(S).
pub type CoVec = Vec<i64>;
/// Integer covector (a root, seen as a linear form on X_*(S)).
pub type RootVec = Vec<i64>;

pub fn pair(root: &RootVec, v: &[i64]) -> i64 {
    root.iter().zip(v).map(|(a, b)| a * b).sum()
}

const W0_BOUND: usize = 100_000;

/// Based reduced root datum of a split group.
#[derive(Clone, Debug)]
pub struct RootDatum {
    pub rank_ss: usize,
    pub lattice_rank: usize,
    pub simple_roots: Vec<RootVec>,
    pub simple_coroots: Vec<CoVec>,
    pub cartan: Vec<Vec<i64>>,
    /// All positive roots, simple roots first, then by height.
    pub positive_roots: Vec<RootVec>,
    /// Coroot of positive_roots[i].
    pub positive_coroots: Vec<CoVec>,
    /// Partition of simple-root indices into irreducible components.
    pub components: Vec<Vec<usize>>,
    /// Index into positive_roots of the highest root of each component.
    pub highest_roots: Vec<usize>,
    weyl: WeylGroup,
    /// Interior point of the base alcove: `alcove_point / alcove_den`.
    pub alcove_point: Vec<i64>,
    pub alcove_den: i64,
}

/// Element of the finite Weyl group, stored by index into the enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElt(pub usize);

#[derive(Clone, Debug)]
struct WeylGroup {
    /// matrices[i] acts on X_*(S) (column convention: m * v).
    matrices: Vec<Vec<Vec<i64>>>,
    words: Vec<Vec<usize>>,
    lengths: Vec<usize>,
    /// right_mul[w][s] = index of w * s_s.
    right_mul: Vec<Vec<usize>>,
    left_mul: Vec<Vec<usize>>,
    inverse: Vec<usize>,
    by_matrix: HashMap<Vec<Vec<i64>>, usize>,
    longest: usize,
}

fn mat_apply(m: &[Vec<i64>], v: &[i64]) -> Vec<i64> {
    (0..m.len()).map(|i| pair(&m[i], v)).collect()
}

fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    let mut out = vec![vec![0i64; n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k] == 0 {
                continue;
            }
            for j in 0..n {
                out[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    out
}

impl RootDatum {
    pub fn new(simple_roots: Vec<RootVec>, simple_coroots: Vec<CoVec>) -> Result<Self> {
        let rank_ss = simple_roots.len();
        if rank_ss == 0 || simple_coroots.len() != rank_ss {
            return Err(Error::InvalidRootDatum(
                "need matching nonempty simple roots and coroots".into(),
            ));
        }
        let lattice_rank = simple_coroots[0].len();
        if simple_roots.iter().any(|r| r.len() != lattice_rank)
            || simple_coroots.iter().any(|c| c.len() != lattice_rank)
        {
            return Err(Error::InvalidRootDatum("inconsistent lattice rank".into()));
        }
        let mut cartan = vec![vec![0i64; rank_ss]; rank_ss];
        for i in 0..rank_ss {
            for j in 0..rank_ss {
                cartan[i][j] = pair(&simple_roots[j], &simple_coroots[i]);
            }
        }
        for i in 0..rank_ss {
            if cartan[i][i] != 2 {
                return Err(Error::InvalidRootDatum(format!(
                    "cartan[{i}][{i}] = {} but the diagonal must be 2",
                    cartan[i][i]
                )));
            }
            for j in 0..rank_ss {
                if i != j && cartan[i][j] > 0 {
                    return Err(Error::InvalidRootDatum(format!(
                        "cartan[{i}][{j}] = {} must be <= 0 off the diagonal",
                        cartan[i][j]
                    )));
                }
                if i != j && (cartan[i][j] == 0) != (cartan[j][i] == 0) {
                    return Err(Error::InvalidRootDatum(format!(
                        "cartan[{i}][{j}] and cartan[{j}][{i}] must vanish together"
                    )));
                }
            }
        }

        // Close the simple roots under simple reflections.
        let reflect_root = |i: usize, root: &RootVec, coroot: &CoVec| -> (RootVec, CoVec) {
            // s_i(beta) = beta - <alpha_i^vee, beta> alpha_i
            let c = pair(root, &simple_coroots[i]);
            let new_root: RootVec = root
                .iter()
                .zip(&simple_roots[i])
                .map(|(&b, &a)| b - c * a)
                .collect();
            let c2 = pair(&simple_roots[i], coroot);
            let new_coroot: CoVec = coroot
                .iter()
                .zip(&simple_coroots[i])
                .map(|(&b, &a)| b - c2 * a)
                .collect();
            (new_root, new_coroot)
        };
        let mut roots: Vec<(RootVec, CoVec)> = simple_roots
            .iter()
            .cloned()
            .zip(simple_coroots.iter().cloned())
            .collect();
        let mut seen: HashMap<RootVec, usize> = roots
            .iter()
            .enumerate()
            .map(|(k, (r, _))| (r.clone(), k))
            .collect();
        let mut head = 0;
        while head < roots.len() {
            let (r, c) = roots[head].clone();
            head += 1;
            for i in 0..rank_ss {
                let (nr, nc) = reflect_root(i, &r, &c);
                if !seen.contains_key(&nr) {
                    seen.insert(nr.clone(), roots.len());
                    roots.push((nr, nc));
                    if roots.len() > 10_000 {
                        return Err(Error::InvalidRootDatum(
                            "root closure does not terminate; not finite type".into(),
                        ));
                    }
                }
            }
        }
        // Split into positives (nonnegative coordinates against the simple basis
        // is awkward on a general lattice; positivity = first nonzero pairing
        // pattern: a root is positive iff it is a nonnegative combination of the
        // simple roots, detected via expressing in the simple-root span).
        let mut positive_roots = Vec::new();
        let mut positive_coroots = Vec::new();
        for (r, c) in &roots {
            match root_sign(r, &simple_roots) {
                Some(true) => {
                    positive_roots.push(r.clone());
                    positive_coroots.push(c.clone());
                }
                Some(false) => {}
                None => {
                    return Err(Error::InvalidRootDatum(format!(
                        "root {r:?} is neither positive nor negative"
                    )))
                }
            }
        }
        if 2 * positive_roots.len() != roots.len() {
            return Err(Error::InvalidRootDatum(
                "closure is not symmetric under negation".into(),
            ));
        }
        // sort by height (sum of simple coefficients), simples first
        let mut order: Vec<usize> = (0..positive_roots.len()).collect();
        let heights: Vec<i64> = positive_roots
            .iter()
            .map(|r| simple_coeffs(r, &simple_roots).unwrap().iter().sum())
            .collect();
        order.sort_by_key(|&k| (heights[k], positive_roots[k].clone()));
        let positive_roots: Vec<RootVec> = order.iter().map(|&k| positive_roots[k].clone()).collect();
        let positive_coroots: Vec<CoVec> = order.iter().map(|&k| positive_coroots[k].clone()).collect();

        // components of the Dynkin diagram
        let mut comp_id = vec![usize::MAX; rank_ss];
        let mut components: Vec<Vec<usize>> = Vec::new();
        for i in 0..rank_ss {
            if comp_id[i] != usize::MAX {
                continue;
            }
            let id = components.len();
            let mut stack = vec![i];
            let mut comp = Vec::new();
            comp_id[i] = id;
            while let Some(x) = stack.pop() {
                comp.push(x);
                for j in 0..rank_ss {
                    if comp_id[j] == usize::MAX && cartan[x][j] != 0 {
                        comp_id[j] = id;
                        stack.push(j);
                    }
                }
            }
            comp.sort_unstable();
            components.push(comp);
        }
        // highest root per component: the unique positive root with maximal height
        // supported on that component
        let mut highest_roots = Vec::new();
        for comp in &components {
            let mut best: Option<(i64, usize)> = None;
            for (k, r) in positive_roots.iter().enumerate() {
                let coeffs = simple_coeffs(r, &simple_roots).unwrap();
                if comp.iter().any(|&i| coeffs[i] != 0)
                    && (0..rank_ss).all(|i| coeffs[i] == 0 || comp.contains(&i))
                {
                    let h: i64 = coeffs.iter().sum();
                    if best.map_or(true, |(bh, _)| h > bh) {
                        best = Some((h, k));
                    }
                }
            }
            highest_roots.push(best.unwrap().1);
        }

        let weyl = WeylGroup::enumerate(&simple_roots, &simple_coroots, lattice_rank)?;

        // Interior point of the base alcove: v with <v, alpha_i> = 1 scaled by
        // 1/(h+1), h the maximal pairing over positive roots. Solve over the
        // rationals by least squares on the simple-root system; integrality is
        // arranged by scaling with the common denominator.
        let (alcove_point, alcove_den) =
            alcove_interior_point(&simple_roots, &positive_roots, lattice_rank)?;

        Ok(RootDatum {
            rank_ss,
            lattice_rank,
            simple_roots,
            simple_coroots,
            cartan,
            positive_roots,
            positive_coroots,
            components,
            highest_roots,
            weyl,
            alcove_point,
            alcove_den,
        })
    }

    pub fn w0_order(&self) -> usize {
        self.weyl.matrices.len()
    }

    pub fn w0_elements(&self) -> impl Iterator<Item = WeylElt> {
        (0..self.w0_order()).map(WeylElt)
    }

    pub fn identity(&self) -> WeylElt {
        WeylElt(0)
    }

    pub fn simple_reflection(&self, i: usize) -> WeylElt {
        WeylElt(self.weyl.right_mul[0][i])
    }

    pub fn word(&self, w: WeylElt) -> &[usize] {
        &self.weyl.words[w.0]
    }

    pub fn length(&self, w: WeylElt) -> usize {
        self.weyl.lengths[w.0]
    }

    pub fn matrix(&self, w: WeylElt) -> &Vec<Vec<i64>> {
        &self.weyl.matrices[w.0]
    }

    pub fn apply(&self, w: WeylElt, v: &[i64]) -> Vec<i64> {
        mat_apply(&self.weyl.matrices[w.0], v)
    }

    pub fn mul_w0(&self, a: WeylElt, b: WeylElt) -> WeylElt {
        // multiply through b's reduced word
        let mut cur = a.0;
        for &s in &self.weyl.words[b.0] {
            cur = self.weyl.right_mul[cur][s];
        }
        WeylElt(cur)
    }

    pub fn right_mul_s(&self, w: WeylElt, s: usize) -> WeylElt {
        WeylElt(self.weyl.right_mul[w.0][s])
    }

    pub fn left_mul_s(&self, s: usize, w: WeylElt) -> WeylElt {
        WeylElt(self.weyl.left_mul[w.0][s])
    }

    pub fn inverse_w0(&self, w: WeylElt) -> WeylElt {
        WeylElt(self.weyl.inverse[w.0])
    }

    pub fn longest_w0(&self) -> WeylElt {
        WeylElt(self.weyl.longest)
    }

    pub fn element_by_matrix(&self, m: &Vec<Vec<i64>>) -> Option<WeylElt> {
        self.weyl.by_matrix.get(m).copied().map(WeylElt)
    }

    /// Product of simple reflections along a word.
    pub fn element_by_word(&self, word: &[usize]) -> WeylElt {
        let mut cur = 0;
        for &s in word {
            cur = self.weyl.right_mul[cur][s];
        }
        WeylElt(cur)
    }

    pub fn is_dominant(&self, v: &[i64]) -> bool {
        self.positive_roots.iter().all(|r| pair(r, v) >= 0)
    }

    pub fn is_antidominant(&self, v: &[i64]) -> bool {
        self.positive_roots.iter().all(|r| pair(r, v) <= 0)
    }

    pub fn is_regular(&self, v: &[i64]) -> bool {
        self.positive_roots.iter().all(|r| pair(r, v) != 0)
    }

    /// Rational variants: v is given as `num / den`.
    pub fn is_dominant_rat(&self, num: &[i64], den: i64) -> bool {
        assert!(den > 0);
        self.is_dominant(num)
    }

    /// All w with w^{-1}(v) dominant.
    pub fn chamber_of(&self, v: &[i64]) -> Vec<WeylElt> {
        self.w0_elements()
            .filter(|&w| {
                let wi = self.inverse_w0(w);
                self.is_dominant(&self.apply(wi, v))
            })
            .collect()
    }

    /// Some w with w^{-1}(v) dominant (the one with least index).
    pub fn chamber_rep(&self, v: &[i64]) -> WeylElt {
        self.chamber_of(v)
            .into_iter()
            .next()
            .expect("every vector lies in some closed chamber")
    }

    /// Do v1 and v2 lie in a common closed Weyl chamber?
    pub fn same_closed_chamber(&self, v1: &[i64], v2: &[i64]) -> bool {
        // shared chamber iff no positive root strictly separates them and the
        // witness chamber test passes; checking via chamber sets is exact.
        self.w0_elements().any(|w| {
            let wi = self.inverse_w0(w);
            self.is_dominant(&self.apply(wi, v1)) && self.is_dominant(&self.apply(wi, v2))
        })
    }

    /// The set { alpha in Delta : w(alpha) > 0 }, as simple-root indices.
    pub fn delta_w(&self, w: WeylElt) -> Vec<usize> {
        (0..self.rank_ss)
            .filter(|&i| {
                let img = self.apply_root(w, &self.simple_roots[i]);
                root_sign(&img, &self.simple_roots) == Some(true)
            })
            .collect()
    }

    /// Action of w on a root (covector): (w . beta)(v) = beta(w^{-1} v).
    pub fn apply_root(&self, w: WeylElt, beta: &RootVec) -> RootVec {
        let mi = &self.weyl.matrices[self.weyl.inverse[w.0]];
        // beta . m_inv as a row vector
        (0..self.lattice_rank)
            .map(|j| (0..self.lattice_rank).map(|i| beta[i] * mi[i][j]).sum())
            .collect()
    }

    /// Longest element of the standard parabolic W_{0,J}.
    pub fn longest_element(&self, j_set: &[usize]) -> WeylElt {
        // Greedy: repeatedly apply a simple reflection in J that increases length.
        let mut cur = WeylElt(0);
        loop {
            let mut advanced = false;
            for &i in j_set {
                let next = self.right_mul_s(cur, i);
                if self.length(next) > self.length(cur) {
                    // ensure we stay in W_{0,J}: products of J-reflections always do
                    cur = next;
                    advanced = true;
                }
            }
            if !advanced {
                return cur;
            }
        }
    }

    /// Positive roots lying in the span of the simple roots indexed by J.
    pub fn positive_roots_of(&self, j_set: &[usize]) -> Vec<usize> {
        (0..self.positive_roots.len())
            .filter(|&k| {
                let coeffs = simple_coeffs(&self.positive_roots[k], &self.simple_roots).unwrap();
                (0..self.rank_ss).all(|i| coeffs[i] == 0 || j_set.contains(&i))
            })
            .collect()
    }

    /// Inversion count of w: |{ alpha > 0 : w(alpha) < 0 }|.
    pub fn inversions(&self, w: WeylElt) -> usize {
        self.positive_roots
            .iter()
            .filter(|r| root_sign(&self.apply_root(w, r), &self.simple_roots) == Some(false))
            .count()
    }

    /// Elements of the parabolic subgroup W_{0,J}.
    pub fn parabolic_elements(&self, j_set: &[usize]) -> Vec<WeylElt> {
        self.w0_elements()
            .filter(|&w| self.word(w).iter().all(|s| j_set.contains(s)) || {
                // words are reduced but may use letters outside J for
                // non-canonical reduced expressions; test properly via descent
                self.in_parabolic(w, j_set)
            })
            .collect()
    }

    fn in_parabolic(&self, w: WeylElt, j_set: &[usize]) -> bool {
        // peel descents within J; w is in W_{0,J} iff it reduces to e
        let mut cur = w;
        'outer: while self.length(cur) > 0 {
            for &i in j_set {
                let next = self.right_mul_s(cur, i);
                if self.length(next) < self.length(cur) {
                    cur = next;
                    continue 'outer;
                }
            }
            return false;
        }
        true
    }
}

/// Coefficients of a root against the simple roots, if integral.
pub fn simple_coeffs(root: &RootVec, simples: &[RootVec]) -> Option<Vec<i64>> {
    // Solve sum c_i alpha_i = root exactly over the rationals by Gaussian
    // elimination with i128 fractions; inputs are tiny.
    let n = simples.len();
    let dim = root.len();
    // Build augmented matrix (dim x (n+1)) over Q represented as i128 pairs.
    let mut rows: Vec<Vec<(i128, i128)>> = (0..dim)
        .map(|d| {
            let mut row: Vec<(i128, i128)> = (0..n).map(|i| (simples[i][d] as i128, 1)).collect();
            row.push((root[d] as i128, 1));
            row
        })
        .collect();
    let norm = |x: (i128, i128)| -> (i128, i128) {
        let (mut a, mut b) = x;
        if b < 0 {
            a = -a;
            b = -b;
        }
        if a == 0 {
            return (0, 1);
        }
        let g = gcd128(a.abs(), b);
        (a / g, b / g)
    };
    let sub = |x: (i128, i128), y: (i128, i128), f: (i128, i128)| -> (i128, i128) {
        // x - y * f
        norm((x.0 * y.1 * f.1 - y.0 * f.0 * x.1, x.1 * y.1 * f.1))
    };
    let mut r = 0;
    let mut pivots = Vec::new();
    for c in 0..n {
        let Some(pr) = (r..dim).find(|&i| rows[i][c].0 != 0) else {
            continue;
        };
        rows.swap(r, pr);
        let pv = rows[r][c];
        for i in 0..dim {
            if i != r && rows[i][c].0 != 0 {
                let f = norm((rows[i][c].0 * pv.1, rows[i][c].1 * pv.0));
                for cc in 0..=n {
                    rows[i][cc] = sub(rows[i][cc], rows[r][cc], f);
                }
            }
        }
        pivots.push((r, c));
        r += 1;
        if r == dim {
            break;
        }
    }
    // consistency
    for i in r..dim {
        if rows[i][n].0 != 0 {
            return None;
        }
    }
    let mut coeffs = vec![0i64; n];
    for (pr, pc) in pivots {
        let pv = rows[pr][pc];
        let rhs = rows[pr][n];
        // coeff = rhs / pv
        let num = rhs.0 * pv.1;
        let den = rhs.1 * pv.0;
        if den == 0 || num % den != 0 {
            return None;
        }
        coeffs[pc] = (num / den) as i64;
    }
    Some(coeffs)
}

fn gcd128(a: i128, b: i128) -> i128 {
    if b == 0 {
        a
    } else {
        gcd128(b, a % b)
    }
}

/// Positive if all simple-root coefficients >= 0, negative if all <= 0.
pub fn root_sign(root: &RootVec, simples: &[RootVec]) -> Option<bool> {
    let coeffs = simple_coeffs(root, simples)?;
    if coeffs.iter().all(|&c| c >= 0) && coeffs.iter().any(|&c| c > 0) {
        Some(true)
    } else if coeffs.iter().all(|&c| c <= 0) && coeffs.iter().any(|&c| c < 0) {
        Some(false)
    } else {
        None
    }
}

fn alcove_interior_point(
    simples: &[RootVec],
    positives: &[RootVec],
    dim: usize,
) -> Result<(Vec<i64>, i64)> {
    // Find rational v with <v, alpha_i> = 1 for all simple alpha_i.
    // Scale a solution of the integer system; use a simple search over a
    // lattice basis completion: solve S v = 1 where S has the simple roots as
    // rows. Use fraction-free Gaussian elimination.
    let n = simples.len();
    let mut aug: Vec<Vec<i128>> = (0..n)
        .map(|i| {
            let mut row: Vec<i128> = simples[i].iter().map(|&x| x as i128).collect();
            row.push(1);
            row
        })
        .collect();
    // eliminate to row echelon, tracking a common denominator
    let mut den: i128 = 1;
    let mut r = 0;
    let mut pivot_cols = Vec::new();
    for c in 0..dim {
        let Some(pr) = (r..n).find(|&i| aug[i][c] != 0) else {
            continue;
        };
        aug.swap(r, pr);
        for i in 0..n {
            if i != r && aug[i][c] != 0 {
                let (a, b) = (aug[r][c], aug[i][c]);
                for cc in 0..=dim {
                    aug[i][cc] = aug[i][cc] * a - aug[r][cc] * b;
                }
            }
        }
        pivot_cols.push((r, c));
        r += 1;
        if r == n {
            break;
        }
    }
    if r < n {
        return Err(Error::InvalidRootDatum(
            "simple roots are linearly dependent".into(),
        ));
    }
    for &(pr, pc) in &pivot_cols {
        den = lcm128(den, aug[pr][pc].abs());
    }
    let mut v = vec![0i128; dim];
    for &(pr, pc) in &pivot_cols {
        v[pc] = aug[pr][dim] * (den / aug[pr][pc]);
    }
    // v/den now satisfies <v, alpha_i> = den/den = 1. Scale by 1/(h+1).
    let h = positives
        .iter()
        .map(|rt| rt.iter().zip(&v).map(|(&a, &b)| a as i128 * b).sum::<i128>())
        .max()
        .unwrap_or(den);
    let total_den = den * (h / den + 2);
    let point: Vec<i64> = v.iter().map(|&x| x as i64).collect();
    Ok((point, total_den as i64))
}

fn lcm128(a: i128, b: i128) -> i128 {
    a / gcd128(a, b) * b
}

impl WeylGroup {
    fn enumerate(simples: &[RootVec], cosimples: &[CoVec], dim: usize) -> Result<Self> {
        let n = simples.len();
        let id: Vec<Vec<i64>> = (0..dim)
            .map(|i| (0..dim).map(|j| i64::from(i == j)).collect())
            .collect();
        // reflection matrices: s_i(v) = v - <v, alpha_i> alpha_i^vee
        let refl: Vec<Vec<Vec<i64>>> = (0..n)
            .map(|i| {
                (0..dim)
                    .map(|r| {
                        (0..dim)
                            .map(|c| i64::from(r == c) - cosimples[i][r] * simples[i][c])
                            .collect()
                    })
                    .collect()
            })
            .collect();
        let mut matrices = vec![id.clone()];
        let mut words: Vec<Vec<usize>> = vec![vec![]];
        let mut by_matrix = HashMap::new();
        by_matrix.insert(id, 0usize);
        let mut right_mul: Vec<Vec<usize>> = vec![vec![usize::MAX; n]];
        let mut head = 0;
        while head < matrices.len() {
            for s in 0..n {
                if right_mul[head][s] != usize::MAX {
                    continue;
                }
                let m = mat_mul(&matrices[head], &refl[s]);
                let idx = match by_matrix.get(&m) {
                    Some(&i) => i,
                    None => {
                        let i = matrices.len();
                        if i >= W0_BOUND {
                            return Err(Error::EnumerationBound(W0_BOUND));
                        }
                        let mut w = words[head].clone();
                        w.push(s);
                        matrices.push(m.clone());
                        words.push(w);
                        right_mul.push(vec![usize::MAX; n]);
                        by_matrix.insert(m, i);
                        i
                    }
                };
                right_mul[head][s] = idx;
            }
            head += 1;
        }
        let lengths: Vec<usize> = words.iter().map(|w| w.len()).collect();
        // BFS guarantees words are geodesic, hence reduced.
        let mut left_mul = vec![vec![0usize; n]; matrices.len()];
        for (w, mat) in matrices.iter().enumerate() {
            for s in 0..n {
                let m = mat_mul(&refl[s], mat);
                left_mul[w][s] = *by_matrix.get(&m).unwrap();
            }
        }
        let mut inverse = vec![0usize; matrices.len()];
        for w in 0..matrices.len() {
            let mut cur = 0;
            for &s in words[w].iter().rev() {
                cur = right_mul[cur][s];
            }
            inverse[w] = cur;
        }
        let longest = (0..matrices.len()).max_by_key(|&w| lengths[w]).unwrap();
        Ok(WeylGroup {
            matrices,
            words,
            lengths,
            right_mul,
            left_mul,
            inverse,
            by_matrix,
            longest,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presets::{gl2, sl2, sl3, sp4};

    #[test]
    fn weyl_group_orders() {
        assert_eq!(sl2().w0_order(), 2);
        assert_eq!(sl3().w0_order(), 6);
        assert_eq!(gl2().w0_order(), 2);
        // hyperoctahedral group of rank 2: 2^2 * 2! = 8
        assert_eq!(sp4().w0_order(), 8);
    }

    #[test]
    fn word_length_equals_inversions() {
        for rd in [sl2(), gl2(), sl3(), sp4()] {
            for w in rd.w0_elements() {
                assert_eq!(rd.length(w), rd.inversions(w), "at {w:?}");
            }
        }
    }

    #[test]
    fn dominance_examples() {
        let rd = sl2();
        assert!(rd.is_dominant(&[1])); // alpha^vee
        assert!(!rd.is_dominant(&[-1]));
        assert!(rd.is_regular(&[1]));
        assert!(!rd.is_regular(&[0]));
        let rd3 = sl3();
        // interior point: alpha_1^vee + alpha_2^vee pairs to (1,1)
        assert!(rd3.is_dominant(&[1, 1]));
        assert!(rd3.is_regular(&[1, 1]));
        // wall vector: <v, alpha_1> = 0
        let wall = vec![1, 2]; // pairings (0, 3)
        assert_eq!(pair(&rd3.simple_roots[0], &wall), 0);
        assert!(!rd3.is_regular(&wall));
        assert!(rd3.is_dominant(&wall));
    }

    #[test]
    fn chamber_of_examples() {
        let rd = sl2();
        assert_eq!(rd.chamber_of(&[1]), vec![rd.identity()]);
        assert_eq!(rd.chamber_of(&[0]).len(), 2);
        let rd3 = sl3();
        let wall = vec![1, 2];
        assert_eq!(rd3.chamber_of(&wall).len(), 2); // coset of the wall stabilizer
        // regular vectors: chambers partition them
        assert_eq!(rd3.chamber_of(&[1, 1]).len(), 1);
    }

    #[test]
    fn delta_w_examples() {
        for rd in [sl2(), sl3(), sp4()] {
            let all: Vec<usize> = (0..rd.rank_ss).collect();
            assert_eq!(rd.delta_w(rd.identity()), all);
            assert!(rd.delta_w(rd.longest_w0()).is_empty());
        }
        let rd3 = sl3();
        let s1 = rd3.simple_reflection(0);
        assert_eq!(rd3.delta_w(s1), vec![1]); // s_1(alpha_2) = alpha_1 + alpha_2 > 0
    }

    #[test]
    fn delta_w_longest_identity() {
        // Delta_{w wD} = Delta \ (-wD(Delta_w)) for all w, at rank <= 2
        for rd in [sl2(), gl2(), sl3(), sp4()] {
            let wd = rd.longest_w0();
            for w in rd.w0_elements() {
                let lhs = rd.delta_w(rd.mul_w0(w, wd));
                let dw = rd.delta_w(w);
                let mut rhs: Vec<usize> = (0..rd.rank_ss)
                    .filter(|&i| {
                        // i in rhs iff alpha_i not in -wD(Delta_w)
                        !dw.iter().any(|&j| {
                            let img = rd.apply_root(wd, &rd.simple_roots[j]);
                            let neg: Vec<i64> = img.iter().map(|x| -x).collect();
                            neg == rd.simple_roots[i]
                        })
                    })
                    .collect();
                rhs.sort_unstable();
                assert_eq!(lhs, rhs, "w = {w:?}");
            }
        }
    }

    #[test]
    fn longest_element_examples() {
        let rd = sl3();
        assert_eq!(rd.longest_element(&[]), rd.identity());
        assert_eq!(rd.length(rd.longest_element(&[0, 1])), 3);
        assert_eq!(rd.length(rd.longest_element(&[0])), 1);
        let rd2 = sl2();
        assert_eq!(rd2.longest_element(&[0]), rd2.simple_reflection(0));
        // l(w_J) = |Sigma_J^+|
        let rd4 = sp4();
        for j_set in [vec![], vec![0], vec![1], vec![0, 1]] {
            let wj = rd4.longest_element(&j_set);
            assert_eq!(rd4.length(wj), rd4.positive_roots_of(&j_set).len());
        }
    }

    #[test]
    fn alcove_point_is_interior() {
        for rd in [sl2(), gl2(), sl3(), sp4()] {
            for r in &rd.positive_roots {
                let val = pair(r, &rd.alcove_point);
                assert!(val > 0 && val < rd.alcove_den, "0 < {val} < {}", rd.alcove_den);
            }
        }
    }
}
