//! Exhaustive and analytic verifiers for check sets.
//!
//! Two faults are distinguishable when their observed syndromes differ or
//! their data parts differ by a stabilizer element (same effect on the
//! encoded state). All checks compare data parts through the canonical coset
//! key of [`StabilizerCode::coset_key`].

use std::collections::HashMap;
use std::fmt;
use std::ops::ControlFlow;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;

use crate::code::{pure_distance, CheckSet, Fault, StabilizerCode, WeightBound};
use crate::enumerate::{binomial_u128, count_errors, for_each_error, for_each_subset};
use crate::error::{check_len, Error, Result};
use crate::symplectic::{BitVec, Pauli, PauliString};

/// Default cap on the number of faults a global check will enumerate.
pub const DEFAULT_FAULT_CAP: u128 = 100_000_000;

/// Which joint faults a check set is required to tell apart.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum FaultBudget {
    /// `data_weight + flip_weight ≤ t`.
    Symmetric(usize),
    /// `data_weight ≤ data` and `flip_weight ≤ flips`.
    Asymmetric { data: usize, flips: usize },
}

impl FaultBudget {
    pub fn admits(&self, data_weight: usize, flip_weight: usize) -> bool {
        match *self {
            FaultBudget::Symmetric(t) => data_weight + flip_weight <= t,
            FaultBudget::Asymmetric { data, flips } => data_weight <= data && flip_weight <= flips,
        }
    }

    pub fn max_data(&self) -> usize {
        match *self {
            FaultBudget::Symmetric(t) => t,
            FaultBudget::Asymmetric { data, .. } => data,
        }
    }

    pub fn max_flips(&self) -> usize {
        match *self {
            FaultBudget::Symmetric(t) => t,
            FaultBudget::Asymmetric { flips, .. } => flips,
        }
    }

    pub fn max_total(&self) -> usize {
        match *self {
            FaultBudget::Symmetric(t) => t,
            FaultBudget::Asymmetric { data, flips } => data + flips,
        }
    }

    /// `(data_weight, flip_weight)` strata in enumeration order: increasing
    /// combined weight, and within it decreasing data weight.
    pub fn strata(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for c in 0..=self.max_total() {
            for a in (0..=c.min(self.max_data())).rev() {
                if self.admits(a, c - a) {
                    out.push((a, c - a));
                }
            }
        }
        out
    }

    /// Whether every fault admitted by `self` is admitted by `other`.
    pub fn is_within(&self, other: &FaultBudget) -> bool {
        self.strata().iter().all(|&(a, b)| other.admits(a, b))
    }
}

impl fmt::Display for FaultBudget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FaultBudget::Symmetric(t) => write!(f, "sym:{t}"),
            FaultBudget::Asymmetric { data, flips } => write!(f, "asym:{data},{flips}"),
        }
    }
}

impl FromStr for FaultBudget {
    type Err = Error;

    /// `sym:t` or `asym:a,b`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Domain(format!("budget {s:?} is not sym:t or asym:a,b"));
        let (kind, rest) = s.split_once(':').ok_or_else(bad)?;
        match kind {
            "sym" => Ok(FaultBudget::Symmetric(
                rest.trim().parse().map_err(|_| bad())?,
            )),
            "asym" => {
                let (a, b) = rest.split_once(',').ok_or_else(bad)?;
                Ok(FaultBudget::Asymmetric {
                    data: a.trim().parse().map_err(|_| bad())?,
                    flips: b.trim().parse().map_err(|_| bad())?,
                })
            }
            _ => Err(bad()),
        }
    }
}

/// Number of faults admitted by `budget` on `n` qubits and `m` syndrome bits.
pub fn count_faults(n: usize, m: usize, budget: &FaultBudget) -> u128 {
    budget
        .strata()
        .into_iter()
        .map(|(a, b)| count_errors(n, a).saturating_mul(binomial_u128(m, b)))
        .fold(0u128, u128::saturating_add)
}

/// Streams every fault in `budget`, in enumeration order, together with its
/// observed syndrome.
pub fn for_each_fault<B>(
    checks: &CheckSet,
    budget: &FaultBudget,
    mut f: impl FnMut(&Fault, &BitVec) -> ControlFlow<B>,
) -> ControlFlow<B> {
    let (n, m) = (checks.n(), checks.m());
    let mut fault = Fault::none(n, m);
    let mut observed = BitVec::zeros(m);
    for (a, b) in budget.strata() {
        for_each_error(n, a, |e| {
            let s = checks.syndrome_unchecked(e);
            fault.data = e.clone();
            for_each_subset(m, b, |bits| {
                fault.flips.clear();
                observed.clone_from(&s);
                for &i in bits {
                    fault.flips.set(i, true);
                    observed.toggle(i);
                }
                f(&fault, &observed)
            })
        })?;
    }
    ControlFlow::Continue(())
}

/// Every fault in `budget`, in enumeration order.
pub fn faults(checks: &CheckSet, budget: &FaultBudget) -> Vec<Fault> {
    let mut out = Vec::new();
    let _ = for_each_fault::<()>(checks, budget, |f, _| {
        out.push(f.clone());
        ControlFlow::Continue(())
    });
    out
}

/// Two faults with the same observed syndrome whose data parts act
/// differently on the encoded state.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Collision {
    pub first: Fault,
    pub second: Fault,
    pub syndrome: BitVec,
}

impl fmt::Display for Collision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} vs {}, shared syndrome ({})",
            self.first,
            self.second,
            self.syndrome.to_tuple_string()
        )
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CollisionReport {
    pub ok: bool,
    /// Lexicographically least colliding pair `(i, j)`, `i < j`, by
    /// enumeration index.
    pub witness: Option<Collision>,
    /// One collision per colliding syndrome: the first fault with that
    /// syndrome against the first fault inequivalent to it. Sorted by the
    /// first fault's enumeration index, so `collisions[0]` is the witness.
    pub collisions: Vec<Collision>,
}

impl CollisionReport {
    fn from_collisions(collisions: Vec<Collision>) -> Self {
        CollisionReport {
            ok: collisions.is_empty(),
            witness: collisions.first().cloned(),
            collisions,
        }
    }
}

/// True iff `e1 + e2` is a stabilizer element.
pub fn equivalent_data(code: &StabilizerCode, e1: &BitVec, e2: &BitVec) -> Result<bool> {
    check_len(2 * code.n(), e1.len())?;
    check_len(2 * code.n(), e2.len())?;
    Ok(code.echelon().contains(&e1.xor(e2)))
}

fn guard(checks: &CheckSet, budget: &FaultBudget, cap: u128) -> Result<()> {
    let faults = count_faults(checks.n(), checks.m(), budget);
    if faults > cap {
        return Err(Error::TooLarge { faults, cap });
    }
    Ok(())
}

/// Global distinguishability of all faults within `budget`, by hashing
/// observed syndromes into buckets.
pub fn check_global(checks: &CheckSet, budget: &FaultBudget) -> Result<CollisionReport> {
    check_global_capped(checks, budget, DEFAULT_FAULT_CAP)
}

pub fn check_global_capped(
    checks: &CheckSet,
    budget: &FaultBudget,
    cap: u128,
) -> Result<CollisionReport> {
    guard(checks, budget, cap)?;
    struct Bucket {
        first_index: usize,
        first: Fault,
        key: BitVec,
        second: Option<Fault>,
    }
    let code = checks.code();
    let mut buckets: HashMap<BitVec, Bucket> = HashMap::new();
    let mut index = 0usize;
    let _ = for_each_fault::<()>(checks, budget, |fault, observed| {
        match buckets.get_mut(observed) {
            None => {
                buckets.insert(
                    observed.clone(),
                    Bucket {
                        first_index: index,
                        first: fault.clone(),
                        key: code.coset_key(&fault.data),
                        second: None,
                    },
                );
            }
            Some(b) => {
                if b.second.is_none() && code.coset_key(&fault.data) != b.key {
                    b.second = Some(fault.clone());
                }
            }
        }
        index += 1;
        ControlFlow::Continue(())
    });
    let mut hits: Vec<(usize, Collision)> = buckets
        .into_iter()
        .filter_map(|(syndrome, b)| {
            b.second.map(|second| {
                (
                    b.first_index,
                    Collision {
                        first: b.first,
                        second,
                        syndrome,
                    },
                )
            })
        })
        .collect();
    hits.sort_by_key(|(i, _)| *i);
    Ok(CollisionReport::from_collisions(
        hits.into_iter().map(|(_, c)| c).collect(),
    ))
}

/// Quadratic all-pairs version of [`check_global`], kept as an independent
/// reference implementation.
pub fn check_global_pairwise(checks: &CheckSet, budget: &FaultBudget) -> Result<CollisionReport> {
    guard(checks, budget, 1_000_000)?;
    let mut all: Vec<(Fault, BitVec)> = Vec::new();
    let _ = for_each_fault::<()>(checks, budget, |f, s| {
        all.push((f.clone(), s.clone()));
        ControlFlow::Continue(())
    });
    let code = checks.code();
    let mut collisions = Vec::new();
    for i in 0..all.len() {
        if all[..i].iter().any(|(_, s)| *s == all[i].1) {
            continue;
        }
        let hit = all[i + 1..].iter().find(|(f, s)| {
            *s == all[i].1 && !equivalent_data(code, &all[i].0.data, &f.data).unwrap_or(false)
        });
        if let Some((f, s)) = hit {
            collisions.push(Collision {
                first: all[i].0.clone(),
                second: f.clone(),
                syndrome: s.clone(),
            });
        }
    }
    Ok(CollisionReport::from_collisions(collisions))
}

/// Distinguishability of every fault in `left` from every fault in `right`
/// (e.g. `⌊d/2⌋` against `⌊(d-1)/2⌋` faults). Only the first collision in
/// `left` order is reported.
pub fn check_cross(
    checks: &CheckSet,
    left: &FaultBudget,
    right: &FaultBudget,
) -> Result<CollisionReport> {
    guard(checks, left, DEFAULT_FAULT_CAP)?;
    guard(checks, right, DEFAULT_FAULT_CAP)?;
    let code = checks.code();
    let mut classes: HashMap<BitVec, Vec<(BitVec, Fault)>> = HashMap::new();
    let _ = for_each_fault::<()>(checks, right, |f, s| {
        let key = code.coset_key(&f.data);
        let bucket = classes.entry(s.clone()).or_default();
        if !bucket.iter().any(|(k, _)| *k == key) {
            bucket.push((key, f.clone()));
        }
        ControlFlow::Continue(())
    });
    let hit = for_each_fault(checks, left, |f, s| {
        if let Some(bucket) = classes.get(s) {
            let key = code.coset_key(&f.data);
            if let Some((_, other)) = bucket.iter().find(|(k, _)| *k != key) {
                return ControlFlow::Break(Collision {
                    first: f.clone(),
                    second: other.clone(),
                    syndrome: s.clone(),
                });
            }
        }
        ControlFlow::Continue(())
    });
    Ok(CollisionReport::from_collisions(match hit {
        ControlFlow::Break(c) => vec![c],
        ControlFlow::Continue(()) => Vec::new(),
    }))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Lemma1Failure {
    /// Nonzero syndrome lighter than `d - t`.
    ShortSyndrome { required: usize },
    /// Zero syndrome on an operator outside the stabilizer: a logical
    /// operator lighter than `d`.
    UndetectedLogical,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Lemma1Violation {
    pub error: PauliString,
    pub syndrome: BitVec,
    pub failure: Lemma1Failure,
}

impl fmt::Display for Lemma1Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t = self.error.weight();
        match self.failure {
            Lemma1Failure::ShortSyndrome { required } => write!(
                f,
                "{} (t={t}) has syndrome ({}) of weight {} < {required}",
                self.error,
                self.syndrome.to_tuple_string(),
                self.syndrome.weight()
            ),
            Lemma1Failure::UndetectedLogical => write!(
                f,
                "{} (t={t}) has zero syndrome but is not a stabilizer element",
                self.error
            ),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Lemma1Report {
    pub ok: bool,
    pub violation: Option<Lemma1Violation>,
}

/// Sufficient condition for distinguishing all faults of combined weight
/// `≤ ⌊(d-1)/2⌋`: every nonzero error `e` on `t ≤ d-1` qubits has
/// `wt(C eᵀ) ≥ d - t`, or `C eᵀ = 0` with `e` in the stabilizer.
pub fn lemma1_check(checks: &CheckSet, d: usize) -> Result<Lemma1Report> {
    if d == 0 {
        return Err(Error::Precondition("d must be at least 1".into()));
    }
    let n = checks.n();
    let code = checks.code();
    for t in 1..d.min(n + 1) {
        let required = d - t;
        let hit = for_each_error(n, t, |e| {
            let w = checks.syndrome_weight(e);
            if w == 0 {
                if !code.echelon().contains(e) {
                    return ControlFlow::Break((e.clone(), Lemma1Failure::UndetectedLogical));
                }
            } else if w < required {
                return ControlFlow::Break((e.clone(), Lemma1Failure::ShortSyndrome { required }));
            }
            ControlFlow::Continue(())
        });
        if let ControlFlow::Break((e, failure)) = hit {
            return Ok(Lemma1Report {
                ok: false,
                violation: Some(Lemma1Violation {
                    syndrome: checks.syndrome_unchecked(&e),
                    error: PauliString::from_error_vector(&e)?,
                    failure,
                }),
            });
        }
    }
    Ok(Lemma1Report {
        ok: true,
        violation: None,
    })
}

fn local_index(p: Pauli) -> usize {
    match p {
        Pauli::I => 0,
        Pauli::X => 1,
        Pauli::Y => 2,
        Pauli::Z => 3,
    }
}

/// Orthogonal-array property of the stabilizer: for every set `L` of `l`
/// qubits, each of the `4^l` local patterns on `L` is the restriction of
/// exactly `2^(n-k) / 4^l` stabilizer elements. Requires `l` below the pure
/// distance.
pub fn oa_check(code: &StabilizerCode, l: usize) -> Result<bool> {
    let n = code.n();
    if l > n {
        return Err(Error::Precondition(format!("l={l} exceeds n={n}")));
    }
    if let WeightBound::Exact(dp) = pure_distance(code, l)? {
        return Err(Error::Precondition(format!(
            "l={l} is not below the pure distance {dp}"
        )));
    }
    let r = code.num_generators();
    if 2 * l > r {
        // 2^r / 4^l is not an integer
        return Ok(false);
    }
    let expected = 1usize << (r - 2 * l);
    let elements: Vec<PauliString> = code
        .elements()
        .iter()
        .map(|e| PauliString::from_error_vector(e).expect("even length"))
        .collect();
    let mut counts = vec![0usize; 1 << (2 * l)];
    let flow = for_each_subset(n, l, |qubits| {
        counts.iter_mut().for_each(|c| *c = 0);
        for s in &elements {
            let idx = qubits
                .iter()
                .fold(0usize, |acc, &q| acc * 4 + local_index(s.get(q)));
            counts[idx] += 1;
        }
        if counts.iter().all(|&c| c == expected) {
            ControlFlow::Continue(())
        } else {
            ControlFlow::Break(())
        }
    });
    Ok(flow.is_continue())
}

/// Evaluated packing or existence inequality `lhs ≤ rhs`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BoundReport {
    pub lhs: BigUint,
    pub rhs: BigUint,
    pub satisfied: bool,
}

impl BoundReport {
    pub fn new(lhs: BigUint, rhs: BigUint) -> Self {
        let satisfied = lhs <= rhs;
        BoundReport {
            lhs,
            rhs,
            satisfied,
        }
    }
}

impl fmt::Display for BoundReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let op = if self.satisfied { "<=" } else { ">" };
        write!(f, "{} {op} {}", self.lhs, self.rhs)
    }
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::default();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= BigUint::from(n - i);
        acc /= BigUint::from(i + 1);
    }
    acc
}

fn pow3(i: usize) -> BigUint {
    BigUint::from(3u32).pow(i as u32)
}

/// Hybrid Hamming bound for `n_q` qubits and `n_c` bits read through `s`
/// syndrome bits: `Σ_{i≤t_q} Σ_{j≤t_c} 3^i C(n_q,i) C(n_c,j) ≤ 2^s`.
pub fn hybrid_hamming(n_q: usize, n_c: usize, t_q: usize, t_c: usize, s: usize) -> BoundReport {
    let quantum: BigUint = (0..=t_q).map(|i| pow3(i) * binomial(n_q, i)).sum();
    let classical: BigUint = (0..=t_c).map(|j| binomial(n_c, j)).sum();
    BoundReport::new(quantum * classical, BigUint::one() << s)
}

/// Symmetric form for an `[[n,k]]` code with `r` redundant operators: all
/// faults with `data_weight + flip_weight ≤ t` against `2^(n-k+r)`.
pub fn symmetric_hamming(n: usize, k: usize, r: usize, t: usize) -> BoundReport {
    let s = n - k + r;
    let mut lhs = BigUint::default();
    for j in 0..=t {
        for i in 0..=t - j {
            lhs += pow3(i) * binomial(n, i) * binomial(s, j);
        }
    }
    BoundReport::new(lhs, BigUint::one() << s)
}
