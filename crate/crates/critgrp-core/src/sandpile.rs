//! Divisor theory on multigraphs: principal divisors, linear equivalence,
//! Dhar's burning algorithm, and reduction to the unique q-reduced
//! representative of each divisor class.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::graph::Multigraph;
use crate::group::AbelianGroup;

/// Integer vector indexed by the vertices of a fixed multigraph.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Divisor {
    values: Vec<BigInt>,
}

/// How many times each vertex topples; negative entries topple in reverse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiringScript {
    counts: Vec<BigInt>,
}

/// Outcome of one run of Dhar's burning algorithm.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BurnOutcome {
    /// Per-vertex burnt flags at the fixed point.
    pub burnt: Vec<bool>,
    /// Whether the whole graph burnt, certifying q-reducedness together
    /// with nonnegativity away from the base.
    pub all_burnt: bool,
    /// Vertices burnt in each propagation round; round 0 is the base.
    pub rounds: Vec<Vec<usize>>,
}

impl Divisor {
    pub fn new(values: Vec<BigInt>) -> Self {
        Divisor { values }
    }

    pub fn zero(n: usize) -> Self {
        Divisor {
            values: vec![BigInt::zero(); n],
        }
    }

    pub fn from_i64s(values: &[i64]) -> Self {
        Divisor {
            values: values.iter().map(|&v| BigInt::from(v)).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[BigInt] {
        &self.values
    }

    pub fn get(&self, v: usize) -> &BigInt {
        &self.values[v]
    }

    /// Sum of all entries.
    pub fn degree(&self) -> BigInt {
        self.values.iter().fold(BigInt::zero(), |acc, v| acc + v)
    }

    pub fn add(&self, other: &Divisor) -> Divisor {
        assert_eq!(self.values.len(), other.values.len());
        Divisor {
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Divisor) -> Divisor {
        assert_eq!(self.values.len(), other.values.len());
        Divisor {
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    fn check_len(&self, g: &Multigraph) -> Result<(), Error> {
        if self.values.len() != g.vertex_count() {
            return Err(Error::LengthMismatch {
                expected: g.vertex_count(),
                got: self.values.len(),
            });
        }
        Ok(())
    }
}

impl FiringScript {
    pub fn new(counts: Vec<BigInt>) -> Self {
        FiringScript { counts }
    }

    pub fn from_i64s(counts: &[i64]) -> Self {
        FiringScript {
            counts: counts.iter().map(|&v| BigInt::from(v)).collect(),
        }
    }

    pub fn counts(&self) -> &[BigInt] {
        &self.counts
    }
}

/// The divisor obtained by toppling vertex `v` a total of `f(v)` times,
/// starting from the zero divisor; equals the Laplacian applied to `f`.
/// Always has degree zero.
pub fn principal_divisor(g: &Multigraph, f: &FiringScript) -> Result<Divisor, Error> {
    if f.counts.len() != g.vertex_count() {
        return Err(Error::LengthMismatch {
            expected: g.vertex_count(),
            got: f.counts.len(),
        });
    }
    Ok(Divisor {
        values: g.laplacian().mul_vec(&f.counts),
    })
}

/// Dhar's burning algorithm from base vertex `q`.
///
/// The base burns first; afterwards a vertex burns as soon as its value is
/// strictly less than its number of edges to already-burnt vertices. The
/// whole graph burns iff the divisor is q-reduced (given nonnegativity away
/// from `q`, which is required).
pub fn dhar_burn(g: &Multigraph, d: &Divisor, q: usize) -> Result<BurnOutcome, Error> {
    d.check_len(g)?;
    let n = g.vertex_count();
    if q >= n {
        return Err(Error::VertexOutOfRange {
            vertex: q,
            vertex_count: n,
        });
    }
    for v in 0..n {
        if v != q && d.values[v].is_negative() {
            return Err(Error::NegativeOutsideBase { vertex: v });
        }
    }

    let mut burnt = vec![false; n];
    burnt[q] = true;
    let mut rounds = vec![vec![q]];
    loop {
        let mut next = Vec::new();
        for v in 0..n {
            if burnt[v] {
                continue;
            }
            let to_burnt = g
                .edges()
                .iter()
                .filter(|&&(a, b)| (a == v && burnt[b]) || (b == v && burnt[a]))
                .count();
            if d.values[v] < BigInt::from(to_burnt) {
                next.push(v);
            }
        }
        if next.is_empty() {
            break;
        }
        for &v in &next {
            burnt[v] = true;
        }
        rounds.push(next);
    }
    let all_burnt = burnt.iter().all(|&b| b);
    Ok(BurnOutcome {
        burnt,
        all_burnt,
        rounds,
    })
}

/// The unique q-reduced divisor linearly equivalent to `d`.
///
/// Phase one clears debt away from the base: any vertex `v != q` with a
/// negative value topples in reverse (borrowing from its neighbours) enough
/// times to become nonnegative. This is the mirror image of sandpile
/// stabilization with sink `q`, so it terminates on connected graphs. Phase
/// two repeatedly set-fires the unburnt vertices left by Dhar's algorithm
/// until the whole graph burns.
pub fn q_reduce(g: &Multigraph, d: &Divisor, q: usize) -> Result<Divisor, Error> {
    d.check_len(g)?;
    let n = g.vertex_count();
    if q >= n {
        return Err(Error::VertexOutOfRange {
            vertex: q,
            vertex_count: n,
        });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }

    let mut vals = d.values.clone();

    // Phase 1: make vals[v] >= 0 for all v != q.
    while let Some(v) = (0..n).find(|&v| v != q && vals[v].is_negative()) {
        let deg = BigInt::from(g.degree(v));
        // ceil(-vals[v] / deg) reverse topplings at once.
        let debt = -vals[v].clone();
        let times = (&debt + &deg - BigInt::one()) / &deg;
        vals[v] += &times * &deg;
        for &(a, b) in g.edges() {
            if a == v {
                vals[b] -= &times;
            } else if b == v {
                vals[a] -= &times;
            }
        }
    }

    // Phase 2: fire the unburnt set until everything burns.
    loop {
        let outcome = dhar_burn(
            g,
            &Divisor {
                values: vals.clone(),
            },
            q,
        )?;
        if outcome.all_burnt {
            break;
        }
        for v in 0..n {
            if outcome.burnt[v] {
                continue;
            }
            // Each unburnt vertex fires once: it loses one grain along every
            // edge leaving the unburnt set, which lands on the burnt side.
            for &(a, b) in g.edges() {
                let (inside, outside) = if a == v && outcome.burnt[b] {
                    (v, b)
                } else if b == v && outcome.burnt[a] {
                    (v, a)
                } else {
                    continue;
                };
                vals[inside] -= BigInt::one();
                vals[outside] += BigInt::one();
            }
        }
    }

    Ok(Divisor { values: vals })
}

/// Linear equivalence: true iff the q-reduced forms at base vertex 0 agree,
/// equivalently iff the difference is principal. Divisors of different
/// degrees are never equivalent, so that case short-circuits to false.
pub fn are_equivalent(g: &Multigraph, d1: &Divisor, d2: &Divisor) -> Result<bool, Error> {
    d1.check_len(g)?;
    d2.check_len(g)?;
    if d1.degree() != d2.degree() {
        return Ok(false);
    }
    Ok(q_reduce(g, d1, 0)? == q_reduce(g, d2, 0)?)
}

/// All degree-zero q-reduced divisors of a connected graph, found by
/// scanning the box `0 <= d(v) < deg(v)` away from `q` (forced by the
/// reducedness conditions) and keeping the divisors Dhar certifies.
pub fn degree_zero_reduced_divisors(g: &Multigraph, q: usize) -> Result<Vec<Divisor>, Error> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.vertex_count();
    if q >= n {
        return Err(Error::VertexOutOfRange {
            vertex: q,
            vertex_count: n,
        });
    }
    let others: Vec<usize> = (0..n).filter(|&v| v != q).collect();
    let mut found = Vec::new();
    let mut current = vec![0u64; others.len()];
    loop {
        let mut vals = vec![BigInt::zero(); n];
        let mut total = BigInt::zero();
        for (i, &v) in others.iter().enumerate() {
            vals[v] = BigInt::from(current[i]);
            total += &vals[v];
        }
        vals[q] = -total;
        let d = Divisor { values: vals };
        if dhar_burn(g, &d, q)?.all_burnt {
            found.push(d);
        }
        // Odometer over the box.
        let mut i = 0;
        loop {
            if i == others.len() {
                return Ok(found);
            }
            current[i] += 1;
            if current[i] < g.degree(others[i]) as u64 {
                break;
            }
            current[i] = 0;
            i += 1;
        }
    }
}

/// The Jacobian computed from first principles: enumerate the degree-zero
/// q-reduced divisors, build the addition table via reduction, and read off
/// the invariant factors. Only usable below the group-order cap.
pub fn jacobian_by_reduced_divisors(
    g: &Multigraph,
    q: usize,
    group_order_cap: usize,
) -> Result<AbelianGroup, Error> {
    let order = g.spanning_tree_count()?;
    if order > BigInt::from(group_order_cap as u64) {
        let needed = usize::try_from(&order).unwrap_or(usize::MAX);
        return Err(Error::CapExceeded {
            what: "reduced-divisor group order",
            cap: group_order_cap,
            needed,
        });
    }

    let elements = degree_zero_reduced_divisors(g, q)?;
    let index: BTreeMap<&Divisor, usize> =
        elements.iter().enumerate().map(|(i, d)| (d, i)).collect();
    let identity = index[&q_reduce(g, &Divisor::zero(g.vertex_count()), q)?];
    let mut table = vec![vec![0usize; elements.len()]; elements.len()];
    for (i, a) in elements.iter().enumerate() {
        for (j, b) in elements.iter().enumerate() {
            let sum = q_reduce(g, &a.add(b), q)?;
            table[i][j] = index[&sum];
        }
    }
    Ok(AbelianGroup::from_addition_table(&table, identity))
}

/// Witnesses for the lower bound `exponent >= max degree`: the divisors
/// `i(v) - i(q)` for `i = 0 .. deg(v) - 1` at a vertex `v` of maximal
/// degree, checked with Dhar's algorithm. `all_reduced` records whether
/// every witness was certified q-reduced, which is what makes the bound on
/// the order of the second witness's class sound. The certification holds
/// for biconnected graphs; a cut vertex can break it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeBoundWitness {
    pub bound: usize,
    pub vertex: usize,
    pub base: usize,
    pub witnesses: Vec<Divisor>,
    pub all_reduced: bool,
}

pub fn exponent_lower_bound_witness(g: &Multigraph) -> Result<DegreeBoundWitness, Error> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.vertex_count();
    if n < 2 {
        return Err(Error::InsufficientVertices { needed: 2, got: n });
    }
    let bound = g.max_degree();
    let vertex = (0..n).find(|&v| g.degree(v) == bound).unwrap();
    let base = (0..n).find(|&v| v != vertex).unwrap();

    let mut witnesses = Vec::with_capacity(bound);
    let mut all_reduced = true;
    for i in 0..bound {
        let mut vals = vec![BigInt::zero(); n];
        vals[vertex] = BigInt::from(i as u64);
        vals[base] = -BigInt::from(i as u64);
        let d = Divisor { values: vals };
        all_reduced &= dhar_burn(g, &d, base)?.all_burnt;
        witnesses.push(d);
    }
    Ok(DegreeBoundWitness {
        bound,
        vertex,
        base,
        witnesses,
        all_reduced,
    })
}
