//! Decoders for joint (data error, syndrome flip) faults and a Monte Carlo
//! harness for independent depolarizing data noise and syndrome flips.

use std::collections::HashMap;
use std::ops::ControlFlow;

use rand::Rng;
use rayon::prelude::*;

use crate::code::CheckSet;
use crate::code::Fault;
use crate::enumerate::for_each_error;
use crate::error::{check_len, Error, Result};
use crate::rng::stream_rng;
use crate::scalar::Real;
use crate::symplectic::{BitVec, Pauli, PauliString};
use crate::verify::{check_global, for_each_fault, FaultBudget};

/// Exact-lookup decoder over every fault admitted by a budget.
#[derive(Clone, Debug)]
pub struct SyndromeTable {
    checks: CheckSet,
    budget: FaultBudget,
    entries: HashMap<BitVec, Fault>,
    // syndromes in the order their entries were first written
    order: Vec<BitVec>,
}

impl SyndromeTable {
    pub fn checks(&self) -> &CheckSet {
        &self.checks
    }

    pub fn budget(&self) -> FaultBudget {
        self.budget
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, observed: &BitVec) -> Option<&Fault> {
        self.entries.get(observed)
    }

    /// Entries in enumeration order of their stored faults.
    pub fn iter(&self) -> impl Iterator<Item = (&BitVec, &Fault)> + '_ {
        self.order.iter().map(move |s| (s, &self.entries[s]))
    }
}

/// Builds the lookup table, refusing when two in-budget faults with
/// inequivalent data parts share an observed syndrome.
///
/// Faults are enumerated by increasing combined weight, so the first fault
/// written for each syndrome has minimal weight.
pub fn build_table(checks: &CheckSet, budget: &FaultBudget) -> Result<SyndromeTable> {
    let report = check_global(checks, budget)?;
    if let Some(witness) = report.witness {
        return Err(Error::Collision(Box::new(witness)));
    }
    let mut entries = HashMap::new();
    let mut order = Vec::new();
    let _ = for_each_fault::<()>(checks, budget, |fault, observed| {
        if !entries.contains_key(observed) {
            entries.insert(observed.clone(), fault.clone());
            order.push(observed.clone());
        }
        ControlFlow::Continue(())
    });
    Ok(SyndromeTable {
        checks: checks.clone(),
        budget: *budget,
        entries,
        order,
    })
}

/// Table lookup. `None` means the syndrome is outside the table, which is
/// reported as detected but uncorrectable.
pub fn decode(table: &SyndromeTable, observed: &BitVec) -> Result<Option<Fault>> {
    check_len(table.checks.m(), observed.len())?;
    Ok(table.entries.get(observed).cloned())
}

pub trait Decoder: Sync {
    fn checks(&self) -> &CheckSet;

    /// Estimated fault for a syndrome of length `m`, or `None` when the
    /// decoder flags the syndrome as uncorrectable.
    fn decode(&self, observed: &BitVec) -> Option<Fault>;
}

impl Decoder for SyndromeTable {
    fn checks(&self) -> &CheckSet {
        &self.checks
    }

    fn decode(&self, observed: &BitVec) -> Option<Fault> {
        self.entries.get(observed).cloned()
    }
}

/// Independent depolarizing data noise (X, Y, Z each with probability
/// `p/3`) and independent flips of each extracted bit with probability `q`.
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct NoiseModel<F: Real> {
    pub p: F,
    pub q: F,
    pub seed: u64,
}

impl<F: Real> NoiseModel<F> {
    pub fn new(p: F, q: F, seed: u64) -> Result<Self> {
        for (name, v) in [("p", p), ("q", q)] {
            if !(v >= F::zero() && v <= F::one()) {
                return Err(Error::Domain(format!("{name} must lie in [0, 1], got {v}")));
            }
        }
        Ok(NoiseModel { p, q, seed })
    }

    /// Probability of one specific fault with `a` nontrivial data positions
    /// and `b` flipped bits.
    pub fn fault_probability(&self, n: usize, m: usize, a: usize, b: usize) -> F {
        let three = F::from_usize_lossy(3);
        let pow = |x: F, k: usize| x.powi(k as i32);
        pow(self.p / three, a)
            * pow(F::one() - self.p, n - a)
            * pow(self.q, b)
            * pow(F::one() - self.q, m - b)
    }
}

/// Coset maximum-likelihood decoding over all faults of combined weight at
/// most `cap` consistent with `observed`.
///
/// Probabilities of faults whose data parts differ by a stabilizer element
/// are summed. The most probable class wins, and within it the most
/// probable fault is returned. Ties go to the class, or fault, met first in
/// enumeration order.
pub fn ml_decode<F: Real>(
    checks: &CheckSet,
    observed: &BitVec,
    model: &NoiseModel<F>,
    cap: usize,
) -> Result<Option<Fault>> {
    let (n, m) = (checks.n(), checks.m());
    check_len(m, observed.len())?;
    for (name, v) in [("p", model.p), ("q", model.q)] {
        if !(v > F::zero() && v < F::one()) {
            return Err(Error::Domain(format!("{name} must lie in (0, 1), got {v}")));
        }
    }
    struct Class<F> {
        total: F,
        best: Fault,
        best_prob: F,
    }
    let mut classes: Vec<Class<F>> = Vec::new();
    let mut index: HashMap<BitVec, usize> = HashMap::new();
    let mut flips = BitVec::zeros(m);
    for a in 0..=cap.min(n) {
        let _ = for_each_error::<()>(n, a, |e| {
            checks.syndrome_into(e, &mut flips);
            flips.xor_assign(observed);
            let b = flips.weight();
            if a + b > cap {
                return ControlFlow::Continue(());
            }
            let prob = model.fault_probability(n, m, a, b);
            let key = checks.code().coset_key(e);
            let fault = || Fault {
                data: e.clone(),
                flips: flips.clone(),
            };
            match index.get(&key) {
                Some(&i) => {
                    let c = &mut classes[i];
                    c.total = c.total + prob;
                    if prob > c.best_prob {
                        c.best = fault();
                        c.best_prob = prob;
                    }
                }
                None => {
                    index.insert(key, classes.len());
                    classes.push(Class {
                        total: prob,
                        best: fault(),
                        best_prob: prob,
                    });
                }
            }
            ControlFlow::Continue(())
        });
    }
    let mut winner: Option<&Class<F>> = None;
    for c in &classes {
        if winner.is_none_or(|w| c.total > w.total) {
            winner = Some(c);
        }
    }
    Ok(winner.map(|c| c.best.clone()))
}

/// Coset maximum-likelihood decoder with fixed noise parameters.
#[derive(Clone, Debug)]
pub struct MlDecoder<F: Real> {
    checks: CheckSet,
    model: NoiseModel<F>,
    cap: usize,
}

impl<F: Real> MlDecoder<F> {
    pub fn new(checks: CheckSet, model: NoiseModel<F>, cap: usize) -> Result<Self> {
        // validates p, q and the cap once so decode can stay infallible
        ml_decode(&checks, &BitVec::zeros(checks.m()), &model, cap)?;
        Ok(MlDecoder { checks, model, cap })
    }

    pub fn model(&self) -> &NoiseModel<F> {
        &self.model
    }

    pub fn cap(&self) -> usize {
        self.cap
    }
}

impl<F: Real> Decoder for MlDecoder<F> {
    fn checks(&self) -> &CheckSet {
        &self.checks
    }

    fn decode(&self, observed: &BitVec) -> Option<Fault> {
        ml_decode(&self.checks, observed, &self.model, self.cap)
            .expect("inputs validated at construction")
    }
}

/// Draws one fault. Every qubit consumes two uniform draws and every bit
/// one, whatever the rates, so runs at different rates with the same seed
/// use common random numbers.
pub fn sample_fault<F: Real>(
    model: &NoiseModel<F>,
    n: usize,
    m: usize,
    rng: &mut impl Rng,
) -> Fault {
    let p = model.p.to_f64_lossy();
    let q = model.q.to_f64_lossy();
    let mut data = PauliString::identity(n);
    for qubit in 0..n {
        let u: f64 = rng.gen();
        let kind = rng.gen_range(0..3);
        if u < p {
            data.set(qubit, Pauli::NONTRIVIAL[kind]);
        }
    }
    let flips = BitVec::from_fn(m, |_| rng.gen::<f64>() < q);
    Fault {
        data: data.error_vector(),
        flips,
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct TrialStats {
    pub trials: u64,
    /// Logical errors plus flagged syndromes.
    pub decoding_failures: u64,
    /// Trials whose data correction is inequivalent to the sampled error.
    pub logical_errors: u64,
    /// Trials whose syndrome the decoder refused to correct.
    pub flagged_uncorrectable: u64,
}

impl TrialStats {
    pub fn logical_rate(&self) -> f64 {
        self.logical_errors as f64 / self.trials as f64
    }

    pub fn failure_rate(&self) -> f64 {
        self.decoding_failures as f64 / self.trials as f64
    }

    fn merge(self, other: TrialStats) -> TrialStats {
        TrialStats {
            trials: self.trials + other.trials,
            decoding_failures: self.decoding_failures + other.decoding_failures,
            logical_errors: self.logical_errors + other.logical_errors,
            flagged_uncorrectable: self.flagged_uncorrectable + other.flagged_uncorrectable,
        }
    }
}

/// Outcome of decoding one fault.
pub fn judge(decoder: &impl Decoder, fault: &Fault) -> TrialStats {
    let checks = decoder.checks();
    let mut observed = checks.syndrome_unchecked(&fault.data);
    observed.xor_assign(&fault.flips);
    let mut stats = TrialStats {
        trials: 1,
        ..TrialStats::default()
    };
    match decoder.decode(&observed) {
        None => stats.flagged_uncorrectable = 1,
        Some(estimate) => {
            let residual = estimate.data.xor(&fault.data);
            if !checks.code().echelon().contains(&residual) {
                stats.logical_errors = 1;
            }
        }
    }
    stats.decoding_failures = stats.logical_errors + stats.flagged_uncorrectable;
    stats
}

/// Runs `trials` independent trials; trial `i` draws from stream `i` of the
/// model's seed, so the result does not depend on thread scheduling.
pub fn run_trials<F: Real>(
    decoder: &impl Decoder,
    model: &NoiseModel<F>,
    trials: u64,
) -> Result<TrialStats> {
    if trials == 0 {
        return Err(Error::Precondition("trials must be at least 1".into()));
    }
    let (n, m) = (decoder.checks().n(), decoder.checks().m());
    Ok((0..trials)
        .into_par_iter()
        .map(|i| {
            let mut rng = stream_rng(model.seed, i);
            judge(decoder, &sample_fault(model, n, m, &mut rng))
        })
        .reduce(TrialStats::default, TrialStats::merge))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::{five_qubit, steane_alternative, steane_css};
    use crate::redundancy::parity_augment;
    use crate::verify::faults;

    fn bits(s: &str) -> BitVec {
        s.parse().unwrap()
    }

    fn table2() -> SyndromeTable {
        build_table(&parity_augment(&five_qubit()), &FaultBudget::Symmetric(1)).unwrap()
    }

    #[test]
    fn table_sizes() {
        assert_eq!(table2().len(), 21);
        let alt = CheckSet::from_generators(&steane_alternative());
        assert_eq!(
            build_table(&alt, &FaultBudget::Symmetric(1)).unwrap().len(),
            28
        );
        let bare = CheckSet::from_generators(&five_qubit());
        assert!(matches!(
            build_table(&bare, &FaultBudget::Symmetric(1)),
            Err(Error::Collision(_))
        ));
        // the data-only table of a perfect code uses every syndrome
        assert_eq!(
            build_table(&bare, &FaultBudget::Asymmetric { data: 1, flips: 0 })
                .unwrap()
                .len(),
            16
        );
    }

    #[test]
    fn lookups() {
        let t = table2();
        let x0 = decode(&t, &bits("00011")).unwrap().unwrap();
        assert_eq!(x0.data_pauli().to_string(), "XIIII");
        assert!(x0.flips.is_zero());
        assert!(decode(&t, &bits("00000")).unwrap().unwrap().is_none());
        assert_eq!(decode(&t, &bits("11010")).unwrap(), None);
        assert!(decode(&t, &bits("0001")).is_err());
    }

    #[test]
    fn unlisted_syndrome_is_outside_the_listed_rows() {
        // oracle: syndromes of the 21 single faults computed independently
        let c = parity_augment(&five_qubit());
        let listed: Vec<BitVec> = faults(&c, &FaultBudget::Symmetric(1))
            .iter()
            .map(|f| c.observed_syndrome(f).unwrap())
            .collect();
        assert_eq!(listed.len(), 21);
        assert!(!listed.contains(&bits("11010")));
        let t = table2();
        for s in &listed {
            assert!(t.get(s).is_some());
        }
    }

    #[test]
    fn every_single_fault_decodes_to_an_equivalent_correction() {
        for c in [
            parity_augment(&five_qubit()),
            parity_augment(&steane_css()),
            CheckSet::from_generators(&steane_alternative()),
        ] {
            let t = build_table(&c, &FaultBudget::Symmetric(1)).unwrap();
            for f in faults(&c, &FaultBudget::Symmetric(1)) {
                let got = decode(&t, &c.observed_syndrome(&f).unwrap())
                    .unwrap()
                    .unwrap();
                assert!(c.code().contains(&got.data.xor(&f.data)).unwrap());
            }
        }
    }

    fn likelihood(p: f64, q: f64, n: usize, m: usize, a: usize, b: usize) -> f64 {
        (p / 3.0).powi(a as i32)
            * (1.0 - p).powi((n - a) as i32)
            * q.powi(b as i32)
            * (1.0 - q).powi((m - b) as i32)
    }

    #[test]
    fn ml_prefers_the_likelier_explanation() {
        let c = parity_augment(&five_qubit());
        let observed = bits("00011");
        let m1 = NoiseModel::new(1e-2, 1e-3, 0).unwrap();
        assert!(likelihood(1e-2, 1e-3, 5, 5, 1, 0) > likelihood(1e-2, 1e-3, 5, 5, 0, 2));
        let f = ml_decode(&c, &observed, &m1, 2).unwrap().unwrap();
        assert_eq!(f.data_pauli().to_string(), "XIIII");
        assert!(f.flips.is_zero());

        let m2 = NoiseModel::new(1e-4, 1e-1, 0).unwrap();
        assert!(likelihood(1e-4, 1e-1, 5, 5, 1, 0) < likelihood(1e-4, 1e-1, 5, 5, 0, 2));
        let f = ml_decode(&c, &observed, &m2, 2).unwrap().unwrap();
        assert!(f.data.is_zero());
        assert_eq!(f.flips, bits("00011"));
    }

    #[test]
    fn ml_zero_syndrome_and_domain() {
        let c = parity_augment(&five_qubit());
        let m = NoiseModel::new(0.2, 0.3, 0).unwrap();
        assert!(ml_decode(&c, &BitVec::zeros(5), &m, 2)
            .unwrap()
            .unwrap()
            .is_none());
        let zero = NoiseModel::new(0.0, 0.1, 0).unwrap();
        assert!(ml_decode(&c, &BitVec::zeros(5), &zero, 2).is_err());
        assert!(NoiseModel::new(1.5f64, 0.1, 0).is_err());
        assert!(NoiseModel::new(0.1f32, f32::NAN, 0).is_err());
        // nothing of weight <= 1 explains a weight-3 pattern with no data match
        assert_eq!(ml_decode(&c, &bits("11010"), &m, 1).unwrap(), None);
    }

    #[test]
    fn ml_matches_table_classes() {
        for c in [
            parity_augment(&five_qubit()),
            CheckSet::from_generators(&steane_alternative()),
        ] {
            let t = build_table(&c, &FaultBudget::Symmetric(1)).unwrap();
            let model = NoiseModel::new(1e-4, 1e-4, 0).unwrap();
            for (s, entry) in t.iter() {
                let f = ml_decode(&c, s, &model, 1).unwrap().unwrap();
                assert!(c.code().contains(&f.data.xor(&entry.data)).unwrap());
            }
        }
    }

    #[test]
    fn ml_f32_agrees_with_f64() {
        let c = parity_augment(&five_qubit());
        let m64 = NoiseModel::new(1e-2f64, 1e-3, 0).unwrap();
        let m32 = NoiseModel::new(1e-2f32, 1e-3, 0).unwrap();
        for s in 0..32u64 {
            let obs = BitVec::from_mask(5, s);
            assert_eq!(
                ml_decode(&c, &obs, &m64, 2).unwrap(),
                ml_decode(&c, &obs, &m32, 2).unwrap()
            );
        }
    }

    #[test]
    fn noiseless_trials_never_fail() {
        let t = table2();
        let model = NoiseModel::new(0.0, 0.0, 5).unwrap();
        let s = run_trials(&t, &model, 2000).unwrap();
        assert_eq!(
            s,
            TrialStats {
                trials: 2000,
                ..TrialStats::default()
            }
        );
        assert!(run_trials(&t, &model, 0).is_err());
    }

    #[test]
    fn trials_are_reproducible() {
        let t = table2();
        let model = NoiseModel::new(0.05, 0.05, 42).unwrap();
        let a = run_trials(&t, &model, 5000).unwrap();
        let b = run_trials(&t, &model, 5000).unwrap();
        assert_eq!(a, b);
        assert_eq!(
            a.decoding_failures,
            a.logical_errors + a.flagged_uncorrectable
        );
        assert!(a.decoding_failures > 0);
    }

    #[test]
    fn failures_grow_with_noise() {
        let t = table2();
        let low = run_trials(&t, &NoiseModel::new(0.01, 0.01, 9).unwrap(), 20_000).unwrap();
        let high = run_trials(&t, &NoiseModel::new(0.05, 0.03, 9).unwrap(), 20_000).unwrap();
        assert!(low.failure_rate() <= high.failure_rate());
        assert!(low.logical_rate() <= high.logical_rate());
    }

    #[test]
    fn bare_data_only_decoder_suffers_from_flips() {
        let bare = CheckSet::from_generators(&five_qubit());
        let t = build_table(&bare, &FaultBudget::Asymmetric { data: 1, flips: 0 }).unwrap();
        let s = run_trials(&t, &NoiseModel::new(0.01, 0.05, 3).unwrap(), 100_000).unwrap();
        assert!(s.logical_errors > 0);
        assert_eq!(s.flagged_uncorrectable, 0);
    }

    #[test]
    fn ml_decoder_as_trait_object() {
        let c = parity_augment(&five_qubit());
        let d = MlDecoder::new(c, NoiseModel::new(0.01, 0.01, 1).unwrap(), 2).unwrap();
        let s = run_trials(&d, d.model(), 500).unwrap();
        assert_eq!(s.trials, 500);
        assert!(MlDecoder::new(
            parity_augment(&five_qubit()),
            NoiseModel::new(0.0, 0.01, 1).unwrap(),
            2
        )
        .is_err());
    }
}
