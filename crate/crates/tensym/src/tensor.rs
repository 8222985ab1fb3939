//! Sparse order-`m` dimension-`n` tensors with exact rational entries, the
//! eigenvalue-equation primitives, structural predicates and diagonal
//! similarity.
//!
//! Text format (`.tns`): first non-comment line `m n`, then one entry per
//! line as `i1 i2 ... im value` with `value` an exact rational like `1`,
//! `-3/2`. `#` starts a comment.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::frac_mod_one;
use crate::hypergraph::Hypergraph;

#[derive(Debug, Error)]
pub enum TensorError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("index tuple {0:?} has wrong length (expected {1})")]
    TupleLength(Vec<usize>, usize),
    #[error("index {0} out of range 1..={1}")]
    IndexRange(usize, usize),
    #[error("duplicate entry for index tuple {0:?}")]
    DuplicateEntry(Vec<usize>),
    #[error("tensor is not symmetric: entries at {0:?} and {1:?} differ")]
    NotSymmetric(Vec<usize>, Vec<usize>),
    #[error("vector length {0} does not match dimension {1}")]
    DimensionMismatch(usize, usize),
    #[error("irreducibility check is exhaustive and gated at n <= {limit}, got n = {n}")]
    IrreducibilityGate { n: usize, limit: usize },
}

/// A magnitude-and-phase scalar `magnitude * e^{2*pi*i*angle}` with
/// rational magnitude > 0 and rational angle in `[0, 1)`. This is the exact
/// representation for entries of diagonally rotated rational tensors.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Polar {
    magnitude: BigRational,
    angle: BigRational,
}

impl Polar {
    /// `None` for the zero value, which is represented by entry absence.
    pub fn from_rational(r: &BigRational) -> Option<Self> {
        if r.is_zero() {
            None
        } else if r.is_positive() {
            Some(Self { magnitude: r.clone(), angle: BigRational::zero() })
        } else {
            Some(Self { magnitude: -r, angle: BigRational::new(BigInt::one(), BigInt::from(2)) })
        }
    }

    pub fn magnitude(&self) -> &BigRational {
        &self.magnitude
    }

    pub fn angle(&self) -> &BigRational {
        &self.angle
    }

    /// Rotate by `e^{2*pi*i*turns}`.
    pub fn rotated(&self, turns: &BigRational) -> Self {
        Self { magnitude: self.magnitude.clone(), angle: frac_mod_one(&(&self.angle + turns)) }
    }

    /// Exact rational value when the phase is 0 or 1/2.
    pub fn to_rational(&self) -> Option<BigRational> {
        if self.angle.is_zero() {
            Some(self.magnitude.clone())
        } else if self.angle == BigRational::new(BigInt::one(), BigInt::from(2)) {
            Some(-self.magnitude.clone())
        } else {
            None
        }
    }

    pub fn to_complex(&self) -> Complex64 {
        let mag = self.magnitude.to_f64().unwrap_or(f64::NAN);
        let theta = std::f64::consts::TAU * self.angle.to_f64().unwrap_or(f64::NAN);
        Complex64::from_polar(mag, theta)
    }
}

/// Sparse tensor; absent index tuples are zero, stored values are nonzero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseTensor {
    order: usize,
    dim: usize,
    entries: BTreeMap<Vec<usize>, BigRational>,
}

impl SparseTensor {
    pub fn zero(order: usize, dim: usize) -> Self {
        assert!(order >= 2 && dim >= 1);
        Self { order, dim, entries: BTreeMap::new() }
    }

    pub fn from_entries<I>(order: usize, dim: usize, entries: I) -> Result<Self, TensorError>
    where
        I: IntoIterator<Item = (Vec<usize>, BigRational)>,
    {
        let mut t = Self::zero(order, dim);
        for (idx, value) in entries {
            if idx.len() != order {
                return Err(TensorError::TupleLength(idx, order));
            }
            if let Some(&bad) = idx.iter().find(|&&i| i < 1 || i > dim) {
                return Err(TensorError::IndexRange(bad, dim));
            }
            if value.is_zero() {
                continue;
            }
            if t.entries.insert(idx.clone(), value).is_some() {
                return Err(TensorError::DuplicateEntry(idx));
            }
        }
        Ok(t)
    }

    /// Order `m` of the tensor.
    pub fn order(&self) -> usize {
        self.order
    }

    /// Dimension `n` of the tensor.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &BTreeMap<Vec<usize>, BigRational> {
        &self.entries
    }

    pub fn get(&self, idx: &[usize]) -> BigRational {
        self.entries.get(idx).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.entries.values().all(|v| v.is_positive())
    }

    /// Entry values invariant under every permutation of their indices.
    pub fn is_symmetric(&self) -> bool {
        self.entries.iter().all(|(idx, value)| {
            let mut sorted = idx.clone();
            sorted.sort_unstable();
            // Comparing against the sorted representative suffices: if all
            // tuples agree with their representative, any two permutations
            // of each other agree as well.
            self.get(&sorted) == *value
        })
    }

    /// The adjacency tensor of an `m`-uniform hypergraph: value
    /// `1/(m-1)!` on every permutation of every edge.
    pub fn adjacency(g: &Hypergraph) -> Self {
        use itertools::Itertools;
        let m = g.edge_size();
        let weight = BigRational::new(BigInt::one(), factorial(m - 1));
        let mut entries = BTreeMap::new();
        for e in g.edges() {
            for perm in e.iter().copied().permutations(m) {
                entries.insert(perm, weight.clone());
            }
        }
        Self { order: m, dim: g.vertex_count(), entries }
    }

    fn degree_diagonal(g: &Hypergraph) -> BTreeMap<Vec<usize>, BigRational> {
        let mut entries = BTreeMap::new();
        for v in 1..=g.vertex_count() {
            let d = g.degree(v);
            if d > 0 {
                entries.insert(vec![v; g.edge_size()], BigRational::from(BigInt::from(d)));
            }
        }
        entries
    }

    /// Laplacian tensor `D(G) - A(G)`.
    pub fn laplacian(g: &Hypergraph) -> Self {
        let mut t = Self::adjacency(g);
        for (_, v) in t.entries.iter_mut() {
            *v = -v.clone();
        }
        t.entries.extend(Self::degree_diagonal(g));
        t
    }

    /// Signless Laplacian tensor `D(G) + A(G)`.
    pub fn signless_laplacian(g: &Hypergraph) -> Self {
        let mut t = Self::adjacency(g);
        t.entries.extend(Self::degree_diagonal(g));
        t
    }

    /// `A x^{m-1}` over the rationals, exact.
    pub fn apply_rational(&self, x: &[BigRational]) -> Result<Vec<BigRational>, TensorError> {
        if x.len() != self.dim {
            return Err(TensorError::DimensionMismatch(x.len(), self.dim));
        }
        let mut out = vec![BigRational::zero(); self.dim];
        for (idx, value) in &self.entries {
            let mut term = value.clone();
            for &i in &idx[1..] {
                term *= &x[i - 1];
            }
            out[idx[0] - 1] += term;
        }
        Ok(out)
    }

    /// `A x^{m-1}` in double-precision complex arithmetic.
    pub fn apply_complex(&self, x: &[Complex64]) -> Result<Vec<Complex64>, TensorError> {
        if x.len() != self.dim {
            return Err(TensorError::DimensionMismatch(x.len(), self.dim));
        }
        let mut out = vec![Complex64::new(0.0, 0.0); self.dim];
        for (idx, value) in &self.entries {
            let mut term = Complex64::new(value.to_f64().unwrap_or(f64::NAN), 0.0);
            for &i in &idx[1..] {
                term *= x[i - 1];
            }
            out[idx[0] - 1] += term;
        }
        Ok(out)
    }

    /// The directed graph `D(A)`: arc `(i, j)` iff some nonzero entry with
    /// primary index `i` has `j` among its secondary indices.
    pub fn associated_digraph(&self) -> Vec<BTreeSet<usize>> {
        let mut arcs: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); self.dim];
        for idx in self.entries.keys() {
            for &j in &idx[1..] {
                arcs[idx[0] - 1].insert(j - 1);
            }
        }
        arcs
    }

    /// Weak irreducibility: `D(A)` is strongly connected. Also returns the
    /// strongly connected components (0-based vertex lists).
    pub fn is_weakly_irreducible(&self) -> (bool, Vec<Vec<usize>>) {
        let comps = strongly_connected_components(&self.associated_digraph());
        (comps.len() == 1, comps)
    }

    /// Irreducibility per the subset-quantified definition: no nonempty
    /// proper `I` has all entries zero for `i1 ∈ I`, secondaries outside `I`.
    /// Exhaustive over subsets; gated at `n <= 20`.
    pub fn is_irreducible(&self) -> Result<bool, TensorError> {
        const LIMIT: usize = 20;
        let n = self.dim;
        if n > LIMIT {
            return Err(TensorError::IrreducibilityGate { n, limit: LIMIT });
        }
        if n < 2 {
            return Ok(true);
        }
        let patterns: Vec<(usize, u32)> = self
            .entries
            .keys()
            .map(|idx| {
                let mut mask = 0u32;
                for &j in &idx[1..] {
                    mask |= 1 << (j - 1);
                }
                (idx[0] - 1, mask)
            })
            .collect();
        for subset in 1..((1u32 << n) - 1) {
            let escapes = patterns
                .iter()
                .any(|&(i, mask)| subset & (1 << i) != 0 && mask & subset == 0);
            if !escapes {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Restriction to `S_1 x ... x S_m`; dimensions unchanged, entries
    /// outside the product dropped.
    pub fn subtensor(&self, sets: &[BTreeSet<usize>]) -> Self {
        assert_eq!(sets.len(), self.order, "one index set per tensor slot");
        let entries = self
            .entries
            .iter()
            .filter(|(idx, _)| idx.iter().zip(sets).all(|(i, s)| s.contains(i)))
            .map(|(idx, v)| (idx.clone(), v.clone()))
            .collect();
        Self { order: self.order, dim: self.dim, entries }
    }

    /// `e^{-2*pi*i*phase} * D^{-(m-1)} A D` with exact polar entries.
    pub fn diagonal_similarity(&self, d: &UnimodularDiagonal, phase: &BigRational) -> PolarTensor {
        assert_eq!(d.angles.len(), self.dim, "diagonal dimension mismatch");
        let m1 = BigInt::from(self.order as i64 - 1);
        let entries = self
            .entries
            .iter()
            .map(|(idx, value)| {
                let mut turns = -phase - BigRational::from(m1.clone()) * &d.angles[idx[0] - 1];
                for &i in &idx[1..] {
                    turns += &d.angles[i - 1];
                }
                let polar = Polar::from_rational(value)
                    .expect("stored entries are nonzero")
                    .rotated(&turns);
                (idx.clone(), polar)
            })
            .collect();
        PolarTensor { order: self.order, dim: self.dim, entries }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} {}", self.order, self.dim);
        for (idx, value) in &self.entries {
            let labels: Vec<String> = idx.iter().map(|v| v.to_string()).collect();
            let _ = writeln!(out, "{} {}", labels.join(" "), value);
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self, TensorError> {
        let mut header: Option<(usize, usize)> = None;
        let mut entries = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            if header.is_none() {
                if fields.len() != 2 {
                    return Err(TensorError::Parse {
                        line: line_no,
                        msg: format!("expected header `m n`, got `{line}`"),
                    });
                }
                let m = parse_field(fields[0], line_no)?;
                let n = parse_field(fields[1], line_no)?;
                if m < 2 || n == 0 {
                    return Err(TensorError::Parse {
                        line: line_no,
                        msg: format!("invalid header: m={m}, n={n}"),
                    });
                }
                header = Some((m, n));
                continue;
            }
            let (m, n) = header.unwrap();
            if fields.len() != m + 1 {
                return Err(TensorError::Parse {
                    line: line_no,
                    msg: format!("expected {m} indices and a value, got {} fields", fields.len()),
                });
            }
            let tuple: Result<Vec<usize>, _> =
                fields[..m].iter().map(|f| parse_field(f, line_no)).collect();
            let tuple = tuple?;
            if let Some(&bad) = tuple.iter().find(|&&i| i < 1 || i > n) {
                return Err(TensorError::Parse {
                    line: line_no,
                    msg: format!("index {bad} out of range 1..={n}"),
                });
            }
            let value: BigRational = fields[m].parse().map_err(|_| TensorError::Parse {
                line: line_no,
                msg: format!("expected an exact rational, got `{}`", fields[m]),
            })?;
            entries.push((line_no, tuple, value));
        }
        let Some((m, n)) = header else {
            return Err(TensorError::Parse {
                line: 1,
                msg: "empty input: missing `m n` header".into(),
            });
        };
        let mut seen = BTreeSet::new();
        for (line_no, tuple, _) in &entries {
            if !seen.insert(tuple.clone()) {
                return Err(TensorError::Parse {
                    line: *line_no,
                    msg: format!("duplicate entry for index tuple {tuple:?}"),
                });
            }
        }
        Self::from_entries(m, n, entries.into_iter().map(|(_, t, v)| (t, v)))
    }
}

fn parse_field(field: &str, line: usize) -> Result<usize, TensorError> {
    field.parse().map_err(|_| TensorError::Parse {
        line,
        msg: format!("expected a positive integer, got `{field}`"),
    })
}

pub(crate) fn factorial(k: usize) -> BigInt {
    (1..=k as u64).map(BigInt::from).product()
}

/// Componentwise `k`-th power of a complex vector.
pub fn entrywise_power_complex(x: &[Complex64], k: u32) -> Vec<Complex64> {
    x.iter().map(|v| v.powu(k)).collect()
}

/// Componentwise `k`-th power of a rational vector.
pub fn entrywise_power_rational(x: &[BigRational], k: u32) -> Vec<BigRational> {
    use num_traits::Pow;
    x.iter().map(|v| Pow::pow(v, k as u64)).collect()
}

/// Iterative Tarjan strongly-connected-components over adjacency sets;
/// 0-based, components in reverse topological order.
pub fn strongly_connected_components(adj: &[BTreeSet<usize>]) -> Vec<Vec<usize>> {
    let n = adj.len();
    let mut index = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut comps = Vec::new();
    let mut next_index = 0usize;

    for start in 0..n {
        if index[start] != usize::MAX {
            continue;
        }
        // Explicit DFS stack: (vertex, neighbor iterator position).
        let mut call: Vec<(usize, std::collections::btree_set::Iter<usize>)> =
            vec![(start, adj[start].iter())];
        index[start] = next_index;
        low[start] = next_index;
        next_index += 1;
        stack.push(start);
        on_stack[start] = true;
        while let Some((v, it)) = call.last_mut() {
            let v = *v;
            if let Some(&w) = it.next() {
                if index[w] == usize::MAX {
                    index[w] = next_index;
                    low[w] = next_index;
                    next_index += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, adj[w].iter()));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
            } else {
                call.pop();
                if let Some((parent, _)) = call.last() {
                    low[*parent] = low[*parent].min(low[v]);
                }
                if low[v] == index[v] {
                    let mut comp = Vec::new();
                    while let Some(w) = stack.pop() {
                        on_stack[w] = false;
                        comp.push(w);
                        if w == v {
                            break;
                        }
                    }
                    comp.sort_unstable();
                    comps.push(comp);
                }
            }
        }
    }
    comps
}

/// A normalized unimodular diagonal matrix, stored as rational angles:
/// `d_ii = e^{2*pi*i*angles[i-1]}` with `angles[0] = 0` and every angle in
/// `[0, 1)`. Multiplication is angle addition; the order is the lcm of the
/// angle denominators.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct UnimodularDiagonal {
    angles: Vec<BigRational>,
}

impl UnimodularDiagonal {
    pub fn new(angles: Vec<BigRational>) -> Self {
        assert!(!angles.is_empty());
        let angles: Vec<BigRational> = angles.iter().map(frac_mod_one).collect();
        assert!(angles[0].is_zero(), "first diagonal entry must be 1");
        Self { angles }
    }

    pub fn identity(n: usize) -> Self {
        Self { angles: vec![BigRational::zero(); n] }
    }

    pub fn angles(&self) -> &[BigRational] {
        &self.angles
    }

    pub fn is_identity(&self) -> bool {
        self.angles.iter().all(|a| a.is_zero())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.angles.len(), other.angles.len());
        Self {
            angles: self
                .angles
                .iter()
                .zip(&other.angles)
                .map(|(a, b)| frac_mod_one(&(a + b)))
                .collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        Self { angles: self.angles.iter().map(|a| frac_mod_one(&-a)).collect() }
    }

    /// Multiplicative order: the lcm of the reduced angle denominators.
    pub fn multiplicative_order(&self) -> BigInt {
        self.angles
            .iter()
            .fold(BigInt::one(), |acc, a| acc.lcm(a.denom()))
    }

    /// Entries as complex numbers.
    pub fn to_complex(&self) -> Vec<Complex64> {
        self.angles
            .iter()
            .map(|a| {
                Complex64::from_polar(1.0, std::f64::consts::TAU * a.to_f64().unwrap_or(f64::NAN))
            })
            .collect()
    }
}

/// Tensor with exact polar entries, the closed form for
/// `e^{-2*pi*i*t} D^{-(m-1)} A D` applied to a rational tensor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolarTensor {
    order: usize,
    dim: usize,
    entries: BTreeMap<Vec<usize>, Polar>,
}

impl PolarTensor {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &BTreeMap<Vec<usize>, Polar> {
        &self.entries
    }

    /// Exact equality with a rational tensor.
    pub fn equals_rational(&self, other: &SparseTensor) -> bool {
        self.order == other.order
            && self.dim == other.dim
            && self.entries.len() == other.entries.len()
            && self.entries.iter().all(|(idx, polar)| {
                polar
                    .to_rational()
                    .is_some_and(|r| other.entries.get(idx) == Some(&r))
            })
    }

    /// Exact rational form when every phase is 0 or 1/2.
    pub fn to_rational(&self) -> Option<SparseTensor> {
        let mut entries = BTreeMap::new();
        for (idx, polar) in &self.entries {
            entries.insert(idx.clone(), polar.to_rational()?);
        }
        Some(SparseTensor { order: self.order, dim: self.dim, entries })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratio;

    fn single_edge3() -> Hypergraph {
        Hypergraph::new(3, 3, vec![vec![1, 2, 3]]).unwrap()
    }

    fn hexagon_triples() -> Hypergraph {
        Hypergraph::new(
            6,
            3,
            vec![
                vec![1, 2, 3],
                vec![2, 3, 4],
                vec![3, 4, 5],
                vec![4, 5, 6],
                vec![5, 6, 1],
                vec![6, 1, 2],
            ],
        )
        .unwrap()
    }

    /// The order-3, dimension-6 tensor with ones on the cyclically shifted
    /// triples (1,2,3), (2,3,4), ..., (6,1,2).
    pub(crate) fn shifted_triples_tensor() -> SparseTensor {
        let one = BigRational::one();
        SparseTensor::from_entries(
            3,
            6,
            (0..6usize).map(|i| {
                (
                    vec![i + 1, (i + 1) % 6 + 1, (i + 2) % 6 + 1],
                    one.clone(),
                )
            }),
        )
        .unwrap()
    }

    #[test]
    fn adjacency_single_edge() {
        let a = SparseTensor::adjacency(&single_edge3());
        assert_eq!(a.entries().len(), 6);
        assert!(a.entries().values().all(|v| *v == ratio(1, 2)));
        assert!(a.is_symmetric());
        assert!(a.is_nonnegative());
    }

    #[test]
    fn adjacency_hexagon_has_36_entries() {
        let a = SparseTensor::adjacency(&hexagon_triples());
        assert_eq!(a.entries().len(), 36);
        assert!(a.is_symmetric());
    }

    #[test]
    fn adjacency_empty_hypergraph_is_zero() {
        let g = Hypergraph::new(4, 3, vec![]).unwrap();
        assert!(SparseTensor::adjacency(&g).entries().is_empty());
        assert!(SparseTensor::laplacian(&g).entries().is_empty());
    }

    #[test]
    fn laplacian_single_edge() {
        let l = SparseTensor::laplacian(&single_edge3());
        for v in 1..=3 {
            assert_eq!(l.get(&[v, v, v]), BigRational::one());
        }
        assert_eq!(l.get(&[1, 2, 3]), ratio(-1, 2));
        let q = SparseTensor::signless_laplacian(&single_edge3());
        assert_eq!(q.get(&[1, 2, 3]), ratio(1, 2));
        assert_eq!(q.get(&[2, 2, 2]), BigRational::one());
    }

    #[test]
    fn laplacian_hexagon_diagonal_is_regular_degree() {
        let l = SparseTensor::laplacian(&hexagon_triples());
        for v in 1..=6 {
            assert_eq!(l.get(&[v, v, v]), BigRational::from(BigInt::from(3)));
        }
    }

    #[test]
    fn apply_matches_hand_computation() {
        let a = SparseTensor::adjacency(&single_edge3());
        let x = vec![ratio(1, 1), ratio(2, 1), ratio(3, 1)];
        let y = a.apply_rational(&x).unwrap();
        assert_eq!(y, vec![ratio(6, 1), ratio(3, 1), ratio(2, 1)]);

        let zero = vec![BigRational::zero(); 3];
        assert_eq!(a.apply_rational(&zero).unwrap(), zero);
    }

    #[test]
    fn apply_all_ones_on_shifted_triples() {
        let t = shifted_triples_tensor();
        let ones = vec![BigRational::one(); 6];
        assert_eq!(t.apply_rational(&ones).unwrap(), ones);
    }

    #[test]
    fn apply_m2_is_matrix_vector_product() {
        let a = SparseTensor::from_entries(
            2,
            2,
            vec![
                (vec![1, 1], ratio(1, 1)),
                (vec![1, 2], ratio(2, 1)),
                (vec![2, 1], ratio(3, 1)),
            ],
        )
        .unwrap();
        let x = vec![ratio(5, 1), ratio(7, 1)];
        assert_eq!(a.apply_rational(&x).unwrap(), vec![ratio(19, 1), ratio(15, 1)]);
    }

    #[test]
    fn entrywise_powers() {
        let x = vec![ratio(1, 1), ratio(-1, 1), ratio(1, 1)];
        assert_eq!(
            entrywise_power_rational(&x, 2),
            vec![ratio(1, 1), ratio(1, 1), ratio(1, 1)]
        );
        let omega = Complex64::from_polar(1.0, std::f64::consts::TAU / 3.0);
        let z = vec![Complex64::new(1.0, 0.0), omega, omega * omega];
        for v in entrywise_power_complex(&z, 3) {
            assert!((v - Complex64::new(1.0, 0.0)).norm() < 1e-12);
        }
    }

    #[test]
    fn weak_irreducibility_tracks_connectivity() {
        let connected = SparseTensor::adjacency(&hexagon_triples());
        assert!(connected.is_weakly_irreducible().0);

        let disconnected = SparseTensor::adjacency(
            &Hypergraph::new(6, 3, vec![vec![1, 2, 3], vec![4, 5, 6]]).unwrap(),
        );
        let (irr, comps) = disconnected.is_weakly_irreducible();
        assert!(!irr);
        assert_eq!(comps.len(), 2);

        assert!(shifted_triples_tensor().is_weakly_irreducible().0);
    }

    #[test]
    fn irreducibility_examples() {
        // Adjacency tensors of m >= 3 hypergraphs are always reducible.
        assert!(!SparseTensor::adjacency(&single_edge3()).is_irreducible().unwrap());
        assert!(!SparseTensor::adjacency(&hexagon_triples()).is_irreducible().unwrap());
        // A directed cycle matrix is irreducible.
        let cycle = SparseTensor::from_entries(
            2,
            3,
            vec![
                (vec![1, 2], ratio(1, 1)),
                (vec![2, 3], ratio(1, 1)),
                (vec![3, 1], ratio(1, 1)),
            ],
        )
        .unwrap();
        assert!(cycle.is_irreducible().unwrap());
    }

    #[test]
    fn subtensor_restriction() {
        let a = SparseTensor::adjacency(&hexagon_triples());
        let full: BTreeSet<usize> = (1..=6).collect();
        assert_eq!(a.subtensor(&[full.clone(), full.clone(), full.clone()]), a);

        // No edge contains both 1 and 4, so this block is zero.
        let s14: BTreeSet<usize> = [1, 4].into();
        let restricted = a.subtensor(&[s14.clone(), s14, full]);
        assert!(restricted.entries().is_empty());

        let empty = BTreeSet::new();
        let none = a.subtensor(&[empty, (1..=6).collect(), (1..=6).collect()]);
        assert!(none.entries().is_empty());
    }

    #[test]
    fn diagonal_similarity_identity_fixes_tensor() {
        let a = SparseTensor::adjacency(&hexagon_triples());
        let d = UnimodularDiagonal::identity(6);
        let b = a.diagonal_similarity(&d, &BigRational::zero());
        assert!(b.equals_rational(&a));
        assert_eq!(b.to_rational().unwrap(), a);
    }

    #[test]
    fn diagonal_similarity_hexagon_eigenvector_angles() {
        let a = SparseTensor::adjacency(&hexagon_triples());
        // Angles of (1, w, w^2, 1, w, w^2), w = e^{2 pi i/3}: fixes A at phase 0.
        let d = UnimodularDiagonal::new(vec![
            ratio(0, 1),
            ratio(1, 3),
            ratio(2, 3),
            ratio(0, 1),
            ratio(1, 3),
            ratio(2, 3),
        ]);
        assert!(a.diagonal_similarity(&d, &BigRational::zero()).equals_rational(&a));

        // Angles of (1, w, 1, 1, w, 1) fix A at phase 1/3.
        let d = UnimodularDiagonal::new(vec![
            ratio(0, 1),
            ratio(1, 3),
            ratio(0, 1),
            ratio(0, 1),
            ratio(1, 3),
            ratio(0, 1),
        ]);
        assert!(a.diagonal_similarity(&d, &ratio(1, 3)).equals_rational(&a));
        // A wrong phase does not fix the tensor.
        assert!(!a.diagonal_similarity(&d, &BigRational::zero()).equals_rational(&a));
    }

    #[test]
    fn parse_round_trip_and_errors() {
        let t = shifted_triples_tensor();
        let text = t.to_text();
        assert_eq!(SparseTensor::parse(&text).unwrap(), t);

        let parsed = SparseTensor::parse("# c\n3 2\n1 2 2 1/2\n2 1 1 -3\n").unwrap();
        assert_eq!(parsed.get(&[1, 2, 2]), ratio(1, 2));
        assert_eq!(parsed.get(&[2, 1, 1]), ratio(-3, 1));

        assert!(matches!(
            SparseTensor::parse("3 2\n1 2 2 x\n"),
            Err(TensorError::Parse { line: 2, .. })
        ));
        assert!(matches!(
            SparseTensor::parse("3 2\n1 2 2 1\n1 2 2 1\n"),
            Err(TensorError::Parse { line: 3, .. })
        ));
    }

    #[test]
    fn polar_scalar_arithmetic() {
        let p = Polar::from_rational(&ratio(-3, 2)).unwrap();
        assert_eq!(p.magnitude(), &ratio(3, 2));
        assert_eq!(p.angle(), &ratio(1, 2));
        assert_eq!(p.to_rational().unwrap(), ratio(-3, 2));
        let q = p.rotated(&ratio(1, 2));
        assert_eq!(q.to_rational().unwrap(), ratio(3, 2));
        assert!(p.rotated(&ratio(1, 3)).to_rational().is_none());
    }

    #[test]
    fn diagonal_order_and_group_ops() {
        let d = UnimodularDiagonal::new(vec![ratio(0, 1), ratio(1, 3), ratio(5, 6)]);
        assert_eq!(d.multiplicative_order(), BigInt::from(6));
        assert!(d.mul(&d.inverse()).is_identity());
    }
}
