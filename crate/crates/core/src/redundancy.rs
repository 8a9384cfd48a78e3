//! Constructions that turn a code's generators into a check set able to
//! correct syndrome-bit flips as well as data errors.

use std::ops::ControlFlow;

use rand::Rng;
use rayon::prelude::*;

use crate::code::{distance, distances, singleton_check, CheckSet, StabilizerCode, WeightBound};
use crate::enumerate::for_each_error;
use crate::error::{Error, Result};
use crate::rng::stream_rng;
use crate::scalar::Real;
use crate::symplectic::{BitMatrix, BitVec, PauliString};
use crate::verify::{check_global, FaultBudget};

/// Attempts evaluated per parallel batch in the randomized searches.
const BATCH: usize = 64;

fn product(ops: &[PauliString], n: usize) -> PauliString {
    ops.iter().fold(PauliString::identity(n), |acc, g| {
        acc.multiply(g).expect("same length")
    })
}

/// The generators followed by their product. The extra syndrome bit is the
/// parity of the others, so no data error has a weight-one syndrome and
/// single flips are told apart from single data errors.
pub fn parity_augment(code: &StabilizerCode) -> CheckSet {
    let mut ops = code.generators().to_vec();
    ops.push(product(code.generators(), code.n()));
    CheckSet::new(code.clone(), ops).expect("products of generators are stabilizer elements")
}

/// CSS-preserving variant of [`parity_augment`]: appends the product of all
/// X-type generators and the product of all Z-type generators.
pub fn css_parity_pair(code: &StabilizerCode) -> Result<CheckSet> {
    let mut xs = Vec::new();
    let mut zs = Vec::new();
    for (index, g) in code.generators().iter().enumerate() {
        if g.is_x_type() {
            xs.push(g.clone());
        } else if g.is_z_type() {
            zs.push(g.clone());
        } else {
            return Err(Error::NotCss { index });
        }
    }
    let mut ops = code.generators().to_vec();
    ops.push(product(&xs, code.n()));
    ops.push(product(&zs, code.n()));
    CheckSet::new(code.clone(), ops)
}

/// A binary `m × w` matrix in which every pair of columns differs in at
/// least one row, i.e. a PHF(m; w, 2, 2).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PhfMatrix {
    entries: BitMatrix,
}

impl PhfMatrix {
    pub fn m(&self) -> usize {
        self.entries.nrows()
    }

    pub fn w(&self) -> usize {
        self.entries.ncols()
    }

    pub fn entries(&self) -> &BitMatrix {
        &self.entries
    }

    pub fn entry(&self, row: usize, col: usize) -> bool {
        self.entries.get(row, col)
    }

    /// Checks the defining property pair by pair.
    pub fn is_perfect(&self) -> bool {
        (0..self.w()).all(|a| {
            (a + 1..self.w()).all(|b| (0..self.m()).any(|i| self.entry(i, a) != self.entry(i, b)))
        })
    }
}

/// `⌈log₂ w⌉` for `w ≥ 1`.
pub fn ceil_log2(w: usize) -> usize {
    assert!(w >= 1);
    (usize::BITS - (w - 1).leading_zeros()) as usize
}

/// The first `w` distinct `⌈log₂ w⌉`-bit columns in increasing binary order,
/// row 0 holding the most significant bit.
pub fn phf_matrix(w: usize) -> Result<PhfMatrix> {
    if w < 2 {
        return Err(Error::Domain(format!(
            "a perfect hash family needs w >= 2, got {w}"
        )));
    }
    let m = ceil_log2(w);
    let mut entries = BitMatrix::zeros(m, w);
    for col in 0..w {
        for row in 0..m {
            if (col >> (m - 1 - row)) & 1 == 1 {
                entries.set(row, col, true);
            }
        }
    }
    Ok(PhfMatrix { entries })
}

/// Number of rows produced by [`double_construction`].
pub fn double_construction_rows(num_generators: usize) -> usize {
    num_generators + 3 + 2 * ceil_log2(num_generators)
}

/// Check set `[H; A; N; N]` for a distance-5 code: the generators `H`,
/// three identical copies of their product (`A`), and two copies of `N`,
/// whose row `i` sums the generators selected by row `i` of
/// `phf_matrix(n - k)`.
pub fn double_construction(code: &StabilizerCode) -> Result<CheckSet> {
    let (n, k, r) = (code.n(), code.k(), code.num_generators());
    if r < 2 {
        return Err(Error::Precondition(format!(
            "need n - k >= 2 for a perfect hash family, got {r}"
        )));
    }
    // any error on t <= 4 qubits touches |W| <= 2t <= n - k coordinates
    if !singleton_check(n, k, 5) {
        return Err(Error::Precondition(format!(
            "[[{n},{k}]] violates n - k >= 8, so no distance-5 code exists"
        )));
    }
    if let WeightBound::Exact(d) = distance(code, 4)? {
        return Err(Error::Precondition(format!(
            "code distance is {d}, need at least 5"
        )));
    }
    let phf = phf_matrix(r)?;
    let h = code.generators();
    let mut ops = h.to_vec();
    let all = product(h, n);
    ops.extend(std::iter::repeat_n(all, 3));
    let nrows: Vec<PauliString> = (0..phf.m())
        .map(|i| {
            let picked: Vec<PauliString> = (0..r)
                .filter(|&j| phf.entry(i, j))
                .map(|j| h[j].clone())
                .collect();
            product(&picked, n)
        })
        .collect();
    ops.extend(nrows.iter().cloned());
    ops.extend(nrows);
    debug_assert_eq!(ops.len(), double_construction_rows(r));
    CheckSet::new(code.clone(), ops)
}

/// `H₂(x) = -x log₂ x - (1-x) log₂(1-x)` on the open interval `(0, 1)`.
pub fn binary_entropy<F: Real>(x: F) -> Result<F> {
    if !(x > F::zero() && x < F::one()) {
        return Err(Error::Domain(format!(
            "binary entropy needs 0 < x < 1, got {x}"
        )));
    }
    let y = F::one() - x;
    Ok(-(x * x.log2()) - y * y.log2())
}

#[derive(Clone, Copy, PartialEq, Debug)]
pub struct RandomSearchConfig {
    pub delta: f64,
    pub seed: u64,
    pub max_attempts: usize,
}

impl RandomSearchConfig {
    pub fn new(delta: f64, seed: u64, max_attempts: usize) -> Result<Self> {
        if !(delta > 0.0 && delta < 0.5) {
            return Err(Error::Domain(format!(
                "delta must lie in (0, 1/2), got {delta}"
            )));
        }
        Ok(RandomSearchConfig {
            delta,
            seed,
            max_attempts,
        })
    }
}

/// `m = ⌈(n-k) / (1 - H₂(δ))⌉` and `t = ⌈δ m⌉`.
pub fn random_augment_size(num_generators: usize, delta: f64) -> Result<(usize, usize)> {
    if !(delta > 0.0 && delta < 0.5) {
        return Err(Error::Domain(format!(
            "delta must lie in (0, 1/2), got {delta}"
        )));
    }
    let m = (num_generators as f64 / (1.0 - binary_entropy(delta)?)).ceil() as usize;
    let t = (delta * m as f64).ceil() as usize;
    Ok((m, t))
}

/// Minimum syndrome weight over all nonzero errors on `1..=max_weight`
/// qubits, with the first error attaining it.
pub fn syndrome_weight_floor(checks: &CheckSet, max_weight: usize) -> Option<(usize, BitVec)> {
    let mut best: Option<(usize, BitVec)> = None;
    for w in 1..=max_weight.min(checks.n()) {
        let _ = for_each_error::<()>(checks.n(), w, |e| {
            let sw = checks.syndrome_weight(e);
            if best.as_ref().is_none_or(|(b, _)| sw < *b) {
                best = Some((sw, e.clone()));
            }
            ControlFlow::Continue(())
        });
    }
    best
}

#[derive(Clone, Debug)]
pub struct RandomAugmentation {
    pub checks: CheckSet,
    pub m: usize,
    pub t: usize,
    pub pure_distance: usize,
    /// Zero-based index of the accepted attempt.
    pub attempt: usize,
}

enum Outcome<T> {
    Accepted(T),
    RankDeficient,
    Rejected(usize),
}

/// Runs `attempt(i)` for `i` in `0..attempts`, in parallel batches, and
/// returns the accepted result with the smallest index plus the outcomes of
/// every attempt evaluated before it.
fn first_success<T: Send>(
    attempts: usize,
    attempt: impl Fn(usize) -> Outcome<T> + Sync,
) -> (Option<(usize, T)>, Vec<Outcome<T>>) {
    let mut seen = Vec::new();
    let mut start = 0;
    while start < attempts {
        let end = (start + BATCH).min(attempts);
        let batch: Vec<Outcome<T>> = (start..end).into_par_iter().map(&attempt).collect();
        for (offset, o) in batch.into_iter().enumerate() {
            if let Outcome::Accepted(v) = o {
                return (Some((start + offset, v)), seen);
            }
            seen.push(o);
        }
        start = end;
    }
    (None, seen)
}

/// Samples `m` uniform stabilizer elements (uniform generator masks,
/// repetition and the identity allowed) until every nonzero error on fewer
/// than `d_p` qubits has syndrome weight at least `t = ⌈δm⌉`. The code must
/// be nondegenerate.
pub fn random_augment(
    code: &StabilizerCode,
    cfg: &RandomSearchConfig,
) -> Result<RandomAugmentation> {
    let cfg = RandomSearchConfig::new(cfg.delta, cfg.seed, cfg.max_attempts)?;
    let d = distances(code, code.n())?;
    let dp = d.pure.exact().ok_or_else(|| {
        Error::Precondition("the stabilizer has no nontrivial commuting operator".into())
    })?;
    if d.distance != d.pure {
        return Err(Error::Precondition(format!(
            "code is degenerate (d = {}, d_p = {dp})",
            d.distance
        )));
    }
    let (m, t) = random_augment_size(code.num_generators(), cfg.delta)?;
    let r = code.num_generators();
    let attempt = |i: usize| {
        let mut rng = stream_rng(cfg.seed, i as u64);
        let ops: Vec<PauliString> = (0..m)
            .map(|_| {
                let mask = BitVec::from_fn(r, |_| rng.gen());
                code.element(&mask).expect("mask has one bit per generator")
            })
            .collect();
        let Ok(checks) = CheckSet::new(code.clone(), ops) else {
            return Outcome::RankDeficient;
        };
        match syndrome_weight_floor(&checks, dp - 1) {
            Some((w, _)) if w < t => Outcome::Rejected(w),
            _ => Outcome::Accepted(checks),
        }
    };
    match first_success(cfg.max_attempts, attempt) {
        (Some((attempt, checks)), _) => Ok(RandomAugmentation {
            checks,
            m,
            t,
            pure_distance: dp,
            attempt,
        }),
        (None, seen) => {
            let rank = seen
                .iter()
                .filter(|o| matches!(o, Outcome::RankDeficient))
                .count();
            let best = seen
                .iter()
                .filter_map(|o| match o {
                    Outcome::Rejected(w) => Some(*w),
                    _ => None,
                })
                .max();
            Err(Error::SearchFailed {
                attempts: cfg.max_attempts,
                detail: format!(
                    "m={m} t={t}: {rank} rank-deficient samples, best minimum syndrome weight {}",
                    best.map_or("n/a".to_string(), |w| w.to_string())
                ),
            })
        }
    }
}

/// Check set whose operators are the rows of `transform · H`.
pub fn transform_generators(code: &StabilizerCode, transform: &BitMatrix) -> Result<CheckSet> {
    let rows = transform.mul(code.matrix())?;
    let ops = rows
        .rows()
        .iter()
        .map(PauliString::from_error_vector)
        .collect::<Result<Vec<_>>>()?;
    CheckSet::new(code.clone(), ops)
}

/// Uniform element of GL(r, 2) by rejection sampling.
pub fn random_invertible(r: usize, rng: &mut impl Rng) -> BitMatrix {
    loop {
        let rows = (0..r).map(|_| BitVec::from_fn(r, |_| rng.gen())).collect();
        let t = BitMatrix::from_rows(r, rows).expect("square");
        if t.rank() == r {
            return t;
        }
    }
}

#[derive(Clone, Debug)]
pub struct Resynthesis {
    pub checks: CheckSet,
    pub transform: BitMatrix,
    pub attempt: usize,
}

/// Searches random invertible transforms `T` for an alternative set of
/// `n - k` generators `T·H` that is globally correcting at `budget` with no
/// redundant operators.
pub fn generator_resynthesis(
    code: &StabilizerCode,
    budget: &FaultBudget,
    attempts: usize,
    seed: u64,
) -> Result<Resynthesis> {
    let r = code.num_generators();
    let attempt = |i: usize| {
        let mut rng = stream_rng(seed, i as u64);
        let transform = random_invertible(r, &mut rng);
        let checks = transform_generators(code, &transform).expect("invertible transform");
        match check_global(&checks, budget) {
            Ok(report) if report.ok => Outcome::Accepted((checks, transform)),
            _ => Outcome::Rejected(0),
        }
    };
    match first_success(attempts, attempt) {
        (Some((attempt, (checks, transform))), _) => Ok(Resynthesis {
            checks,
            transform,
            attempt,
        }),
        (None, _) => Err(Error::SearchFailed {
            attempts,
            detail: format!("no generator set of size {r} is globally correcting at {budget}"),
        }),
    }
}
