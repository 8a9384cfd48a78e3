//! Stabilizer codes, check sets and joint data/syndrome faults.

use std::fmt;
use std::fs;
use std::ops::ControlFlow;
use std::path::Path;

use rayon::prelude::*;

use crate::enumerate::{for_each_error, for_each_error_with_types, type_tuple, type_tuple_count};
use crate::error::{check_len, Error, Result};
use crate::symplectic::{swap_halves, BitMatrix, BitVec, Echelon, PauliString};
use crate::verify::{binomial, BoundReport};

/// An `[[n, k]]` stabilizer code given by `n - k` independent, pairwise
/// commuting generators.
#[derive(Clone, Debug)]
pub struct StabilizerCode {
    n: usize,
    generators: Vec<PauliString>,
    matrix: BitMatrix,
    echelon: Echelon,
}

impl PartialEq for StabilizerCode {
    fn eq(&self, other: &Self) -> bool {
        self.generators == other.generators
    }
}

impl Eq for StabilizerCode {}

impl StabilizerCode {
    pub fn new(generators: Vec<PauliString>) -> Result<Self> {
        let n = generators.first().map(PauliString::n).ok_or_else(|| {
            Error::Precondition("a stabilizer code needs at least one generator".into())
        })?;
        for g in &generators {
            check_len(n, g.n())?;
        }
        check_commuting(&generators)?;
        let mut matrix = BitMatrix::new(2 * n);
        for (row, g) in generators.iter().enumerate() {
            matrix.push_row(g.error_vector())?;
            if matrix.rank() != row + 1 {
                return Err(Error::Dependent { row });
            }
        }
        if generators.len() > n {
            return Err(Error::Dependent { row: n });
        }
        let echelon = matrix.echelon();
        Ok(StabilizerCode {
            n,
            generators,
            matrix,
            echelon,
        })
    }

    pub fn from_strings(generators: &[&str]) -> Result<Self> {
        Self::new(
            generators
                .iter()
                .map(|g| g.parse())
                .collect::<Result<Vec<_>>>()?,
        )
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.n - self.generators.len()
    }

    /// `n - k`, the number of independent generators.
    pub fn num_generators(&self) -> usize {
        self.generators.len()
    }

    pub fn generators(&self) -> &[PauliString] {
        &self.generators
    }

    /// The `(n - k) × 2n` matrix of generator error vectors.
    pub fn matrix(&self) -> &BitMatrix {
        &self.matrix
    }

    pub fn echelon(&self) -> &Echelon {
        &self.echelon
    }

    /// True iff `e` is the error vector of a stabilizer element.
    pub fn contains(&self, e: &BitVec) -> Result<bool> {
        check_len(2 * self.n, e.len())?;
        Ok(self.echelon.contains(e))
    }

    /// Canonical representative of the class of errors equivalent to `e`.
    pub fn coset_key(&self, e: &BitVec) -> BitVec {
        self.echelon.reduce(e)
    }

    /// The stabilizer element selected by `coeffs` over the generators.
    pub fn element(&self, coeffs: &BitVec) -> Result<PauliString> {
        PauliString::from_error_vector(&self.matrix.combine_rows(coeffs)?)
    }

    /// All `2^(n-k)` stabilizer error vectors, in Gray-code order starting
    /// from the identity.
    pub fn elements(&self) -> Vec<BitVec> {
        let r = self.generators.len();
        assert!(r < 40, "stabilizer too large to enumerate");
        let mut out = Vec::with_capacity(1 << r);
        let mut cur = BitVec::zeros(2 * self.n);
        out.push(cur.clone());
        for i in 1u64..(1u64 << r) {
            let flip = i.trailing_zeros() as usize;
            cur.xor_assign(self.matrix.row(flip));
            out.push(cur.clone());
        }
        out
    }

    /// True iff every generator is X-type or Z-type.
    pub fn is_css(&self) -> bool {
        self.generators
            .iter()
            .all(|g| g.is_x_type() || g.is_z_type())
    }
}

fn check_commuting(ops: &[PauliString]) -> Result<()> {
    for i in 0..ops.len() {
        for j in i + 1..ops.len() {
            if ops[i].symplectic_product(&ops[j])? {
                return Err(Error::NonCommuting {
                    first: i,
                    second: j,
                });
            }
        }
    }
    Ok(())
}

/// An ordered list of `m ≥ n - k` stabilizer elements measured to extract
/// a syndrome, with its `m × 2n` quantum parity-check matrix.
#[derive(Clone, Debug)]
pub struct CheckSet {
    code: StabilizerCode,
    operators: Vec<PauliString>,
    matrix: BitMatrix,
    // rows with X and Z halves swapped: syndrome bits become plain dot products
    swapped: Vec<BitVec>,
}

impl PartialEq for CheckSet {
    fn eq(&self, other: &Self) -> bool {
        self.code == other.code && self.operators == other.operators
    }
}

impl CheckSet {
    /// Validates that every operator is a stabilizer element and that the
    /// operators generate the whole stabilizer.
    pub fn new(code: StabilizerCode, operators: Vec<PauliString>) -> Result<Self> {
        let n = code.n();
        let mut matrix = BitMatrix::new(2 * n);
        for (row, op) in operators.iter().enumerate() {
            check_len(n, op.n())?;
            let v = op.error_vector();
            if !code.echelon().contains(&v) {
                return Err(Error::NotStabilizer { row });
            }
            matrix.push_row(v)?;
        }
        let rank = matrix.rank();
        if rank != code.num_generators() {
            return Err(Error::RankDeficient {
                rank,
                expected: code.num_generators(),
            });
        }
        let swapped = matrix.rows().iter().map(swap_halves).collect();
        Ok(CheckSet {
            code,
            operators,
            matrix,
            swapped,
        })
    }

    /// The check set made of the code's generators alone.
    pub fn from_generators(code: &StabilizerCode) -> Self {
        Self::new(code.clone(), code.generators().to_vec())
            .expect("generators always form a valid check set")
    }

    /// Builds a check set from a list of commuting operators that may
    /// contain redundant rows; the code is generated by the first maximal
    /// independent subsequence.
    pub fn from_operators(operators: Vec<PauliString>) -> Result<Self> {
        let n = operators
            .first()
            .map(PauliString::n)
            .ok_or_else(|| Error::Precondition("a check set needs at least one operator".into()))?;
        for op in &operators {
            check_len(n, op.n())?;
        }
        check_commuting(&operators)?;
        let mut basis = BitMatrix::new(2 * n);
        let mut gens = Vec::new();
        for op in &operators {
            let v = op.error_vector();
            if !basis.echelon().contains(&v) {
                basis.push_row(v)?;
                gens.push(op.clone());
            }
        }
        let code = StabilizerCode::new(gens)?;
        Self::new(code, operators)
    }

    pub fn code(&self) -> &StabilizerCode {
        &self.code
    }

    pub fn operators(&self) -> &[PauliString] {
        &self.operators
    }

    pub fn matrix(&self) -> &BitMatrix {
        &self.matrix
    }

    pub fn n(&self) -> usize {
        self.code.n()
    }

    /// Number of extracted syndrome bits.
    pub fn m(&self) -> usize {
        self.operators.len()
    }

    /// Number of operators beyond the `n - k` needed to generate the stabilizer.
    pub fn redundancy(&self) -> usize {
        self.m() - self.code.num_generators()
    }

    pub fn syndrome(&self, e: &BitVec) -> Result<BitVec> {
        check_len(2 * self.n(), e.len())?;
        Ok(self.syndrome_unchecked(e))
    }

    /// Syndrome of an error vector whose length is known to be `2n`.
    #[inline]
    pub fn syndrome_unchecked(&self, e: &BitVec) -> BitVec {
        let mut s = BitVec::zeros(self.m());
        self.syndrome_into(e, &mut s);
        s
    }

    #[inline]
    pub(crate) fn syndrome_into(&self, e: &BitVec, out: &mut BitVec) {
        out.clear();
        for (i, row) in self.swapped.iter().enumerate() {
            if row.dot(e) {
                out.set(i, true);
            }
        }
    }

    #[inline]
    pub(crate) fn syndrome_weight(&self, e: &BitVec) -> usize {
        self.swapped.iter().filter(|row| row.dot(e)).count()
    }

    pub fn observed_syndrome(&self, fault: &Fault) -> Result<BitVec> {
        check_len(self.m(), fault.flips.len())?;
        let mut s = self.syndrome(&fault.data)?;
        s.xor_assign(&fault.flips);
        Ok(s)
    }
}

/// A joint fault: a data error vector `e ∈ F₂^{2n}` and a syndrome flip
/// vector `f ∈ F₂^m`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Fault {
    pub data: BitVec,
    pub flips: BitVec,
}

impl Fault {
    pub fn new(data: BitVec, flips: BitVec) -> Result<Self> {
        if !data.len().is_multiple_of(2) {
            return Err(Error::Dimension {
                expected: data.len() + 1,
                found: data.len(),
            });
        }
        Ok(Fault { data, flips })
    }

    pub fn none(n: usize, m: usize) -> Self {
        Fault {
            data: BitVec::zeros(2 * n),
            flips: BitVec::zeros(m),
        }
    }

    pub fn data_only(error: &PauliString, m: usize) -> Self {
        Fault {
            data: error.error_vector(),
            flips: BitVec::zeros(m),
        }
    }

    pub fn flip(n: usize, m: usize, bit: usize) -> Self {
        Fault {
            data: BitVec::zeros(2 * n),
            flips: BitVec::unit(m, bit),
        }
    }

    pub fn n(&self) -> usize {
        self.data.len() / 2
    }

    pub fn data_pauli(&self) -> PauliString {
        PauliString::from_error_vector(&self.data).expect("data vector has even length")
    }

    pub fn data_weight(&self) -> usize {
        self.data_pauli().weight()
    }

    pub fn flip_weight(&self) -> usize {
        self.flips.weight()
    }

    pub fn weight(&self) -> usize {
        self.data_weight() + self.flip_weight()
    }

    pub fn is_none(&self) -> bool {
        self.data.is_zero() && self.flips.is_zero()
    }
}

impl fmt::Display for Fault {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_none() {
            return f.write_str("no error");
        }
        let mut parts = Vec::new();
        if !self.data.is_zero() {
            parts.push(format!("data {}", self.data_pauli()));
        }
        if !self.flips.is_zero() {
            let bits: Vec<String> = self.flips.iter_ones().map(|i| format!("s{i}")).collect();
            let label = if bits.len() == 1 { "flip" } else { "flips" };
            parts.push(format!("{label} {}", bits.join(",")));
        }
        f.write_str(&parts.join(" + "))
    }
}

pub fn syndrome(checks: &CheckSet, e: &BitVec) -> Result<BitVec> {
    checks.syndrome(e)
}

pub fn observed_syndrome(checks: &CheckSet, fault: &Fault) -> Result<BitVec> {
    checks.observed_syndrome(fault)
}

/// Result of a capped weight search.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum WeightBound {
    Exact(usize),
    /// Nothing found up to and including the cutoff.
    Above(usize),
}

impl WeightBound {
    pub fn exact(self) -> Option<usize> {
        match self {
            WeightBound::Exact(w) => Some(w),
            WeightBound::Above(_) => None,
        }
    }
}

impl fmt::Display for WeightBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WeightBound::Exact(w) => write!(f, "{w}"),
            WeightBound::Above(c) => write!(f, ">{c}"),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Distances {
    /// Minimum weight of a logical operator (commutes with the stabilizer,
    /// not in it).
    pub distance: WeightBound,
    /// Minimum weight of any nontrivial operator commuting with the stabilizer.
    pub pure: WeightBound,
}

impl fmt::Display for Distances {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |w: WeightBound| match w {
            WeightBound::Exact(w) => format!("={w}"),
            WeightBound::Above(c) => format!(">{c}"),
        };
        write!(f, "d{} d_pure{}", show(self.distance), show(self.pure))
    }
}

/// Exhaustive distance and pure distance search over all Pauli strings of
/// weight `1..=cutoff`. Weight layers are scanned in parallel; the search
/// stops at the first layer containing a logical operator.
pub fn distances(code: &StabilizerCode, cutoff: usize) -> Result<Distances> {
    let n = code.n();
    if cutoff > n {
        return Err(Error::Precondition(format!(
            "cutoff {cutoff} exceeds the qubit count {n}"
        )));
    }
    let swapped: Vec<BitVec> = code.matrix().rows().iter().map(swap_halves).collect();
    let echelon = code.echelon();
    let mut pure = None;
    for w in 1..=cutoff {
        // (found a nontrivial commuting operator, found a logical operator)
        let (commuting, logical) = (0..type_tuple_count(w))
            .into_par_iter()
            .map(|t| {
                let mut commuting = false;
                let flow = for_each_error_with_types(n, &type_tuple(w, t), |e| {
                    if swapped.iter().all(|row| !row.dot(e)) {
                        commuting = true;
                        if !echelon.contains(e) {
                            return ControlFlow::Break(());
                        }
                    }
                    ControlFlow::Continue(())
                });
                (commuting, flow.is_break())
            })
            .reduce(|| (false, false), |a, b| (a.0 || b.0, a.1 || b.1));
        if commuting && pure.is_none() {
            pure = Some(w);
        }
        if logical {
            return Ok(Distances {
                distance: WeightBound::Exact(w),
                pure: WeightBound::Exact(pure.unwrap_or(w)),
            });
        }
    }
    Ok(Distances {
        distance: WeightBound::Above(cutoff),
        pure: pure.map_or(WeightBound::Above(cutoff), WeightBound::Exact),
    })
}

pub fn distance(code: &StabilizerCode, cutoff: usize) -> Result<WeightBound> {
    Ok(distances(code, cutoff)?.distance)
}

/// Pure distance only; scans layers until a nontrivial commuting operator
/// appears, without waiting for a logical one.
pub fn pure_distance(code: &StabilizerCode, cutoff: usize) -> Result<WeightBound> {
    let n = code.n();
    if cutoff > n {
        return Err(Error::Precondition(format!(
            "cutoff {cutoff} exceeds the qubit count {n}"
        )));
    }
    let swapped: Vec<BitVec> = code.matrix().rows().iter().map(swap_halves).collect();
    for w in 1..=cutoff {
        let found = for_each_error(n, w, |e| {
            if swapped.iter().all(|row| !row.dot(e)) {
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        });
        if found.is_break() {
            return Ok(WeightBound::Exact(w));
        }
    }
    Ok(WeightBound::Above(cutoff))
}

/// Quantum Singleton bound `n - k ≥ 2(d - 1)`.
pub fn singleton_check(n: usize, k: usize, d: usize) -> bool {
    n >= k && n - k >= 2 * d.saturating_sub(1)
}

/// Quantum Gilbert-Varshamov condition `Σ_{i=1}^{d-1} 3^i C(n,i) ≤ 2^{n-k}`.
pub fn gv_check(n: usize, k: usize, d: usize) -> BoundReport {
    use num_bigint::BigUint;
    use num_traits::One;
    let mut lhs = BigUint::default();
    for i in 1..d {
        lhs += BigUint::from(3u32).pow(i as u32) * binomial(n, i);
    }
    let rhs = BigUint::one() << n.saturating_sub(k);
    BoundReport::new(lhs, rhs)
}

/// The perfect `[[5,1,3]]` code.
pub fn five_qubit() -> StabilizerCode {
    StabilizerCode::from_strings(&["XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"]).expect("valid fixture")
}

/// The `[[7,1,3]]` Steane code with its CSS generators.
pub fn steane_css() -> StabilizerCode {
    StabilizerCode::from_strings(&[
        "XIIXIXX", "IXIXXIX", "IIXIXXX", "ZIIZIZZ", "IZIZZIZ", "IIZIZZZ",
    ])
    .expect("valid fixture")
}

/// The Steane code with alternative generators `S'_i` whose syndromes alone
/// separate every single data error from every single flip.
pub fn steane_alternative() -> StabilizerCode {
    StabilizerCode::from_strings(&[
        "YIIYIYY", "ZXIYXZY", "ZIXZXYY", "XYYZIZX", "YXYZZIX", "YYXIZZX",
    ])
    .expect("valid fixture")
}

/// Built-in fixtures by name: `five_qubit`, `steane_css`, `steane_alt`.
pub fn fixture(name: &str) -> Option<StabilizerCode> {
    match name {
        "five_qubit" => Some(five_qubit()),
        "steane_css" => Some(steane_css()),
        "steane_alt" | "steane_alternative" => Some(steane_alternative()),
        _ => None,
    }
}

struct ParsedFile {
    header: Option<(usize, usize, usize)>,
    operators: Vec<PauliString>,
}

fn parse_lines(text: &str) -> Result<ParsedFile> {
    let mut header = None;
    let mut operators: Vec<PauliString> = Vec::new();
    let mut width = None;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        if operators.is_empty() && header.is_none() && tokens.len() == 2 {
            let parsed: Option<Vec<usize>> = tokens.iter().map(|t| t.parse().ok()).collect();
            if let Some(v) = parsed {
                header = Some((v[0], v[1], line));
                continue;
            }
        }
        if tokens.len() != 1 {
            return Err(Error::Format {
                line,
                message: format!("expected a single Pauli string, found {content:?}"),
            });
        }
        let op: PauliString = content
            .parse::<PauliString>()
            .map_err(|e: Error| Error::Format {
                line,
                message: e.to_string(),
            })?;
        match width {
            None => width = Some(op.n()),
            Some(w) if w != op.n() => {
                return Err(Error::Format {
                    line,
                    message: format!("expected {w} qubits, found {}", op.n()),
                })
            }
            _ => {}
        }
        operators.push(op);
    }
    if operators.is_empty() {
        return Err(Error::Format {
            line: text.lines().count().max(1),
            message: "no operators".into(),
        });
    }
    Ok(ParsedFile { header, operators })
}

fn check_header(header: Option<(usize, usize, usize)>, n: usize, k: usize) -> Result<()> {
    if let Some((hn, hk, line)) = header {
        if (hn, hk) != (n, k) {
            return Err(Error::Format {
                line,
                message: format!("header says n={hn} k={hk}, generators give n={n} k={k}"),
            });
        }
    }
    Ok(())
}

/// Parses the code file format: one Pauli string per line, `#` comments,
/// and an optional `n k` header line before the first string.
pub fn parse_code(text: &str) -> Result<StabilizerCode> {
    let parsed = parse_lines(text)?;
    let code = StabilizerCode::new(parsed.operators)?;
    check_header(parsed.header, code.n(), code.k())?;
    Ok(code)
}

pub fn format_code(code: &StabilizerCode) -> String {
    let mut out = format!("{} {}\n", code.n(), code.k());
    for g in code.generators() {
        out.push_str(&g.to_string());
        out.push('\n');
    }
    out
}

pub fn load_code(path: impl AsRef<Path>) -> Result<StabilizerCode> {
    parse_code(&fs::read_to_string(path)?)
}

pub fn save_code(code: &StabilizerCode, path: impl AsRef<Path>) -> Result<()> {
    fs::write(path, format_code(code))?;
    Ok(())
}

/// Same line format as a code file, but redundant operators are allowed.
pub fn parse_checkset(text: &str) -> Result<CheckSet> {
    let parsed = parse_lines(text)?;
    let checks = CheckSet::from_operators(parsed.operators)?;
    check_header(parsed.header, checks.n(), checks.code().k())?;
    Ok(checks)
}

/// Renders a check set, preceded by one `#` comment line per entry of
/// `provenance`.
pub fn format_checkset(checks: &CheckSet, provenance: &[String]) -> String {
    let mut out = String::new();
    for p in provenance {
        out.push_str("# ");
        out.push_str(p);
        out.push('\n');
    }
    out.push_str(&format!("{} {}\n", checks.n(), checks.code().k()));
    for op in checks.operators() {
        out.push_str(&op.to_string());
        out.push('\n');
    }
    out
}

pub fn load_checkset(path: impl AsRef<Path>) -> Result<CheckSet> {
    parse_checkset(&fs::read_to_string(path)?)
}

pub fn save_checkset(checks: &CheckSet, path: impl AsRef<Path>) -> Result<()> {
    fs::write(path, format_checkset(checks, &[]))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> PauliString {
        s.parse().unwrap()
    }

    fn bits(s: &str) -> BitVec {
        s.parse().unwrap()
    }

    #[test]
    fn five_qubit_syndromes() {
        let c = CheckSet::from_generators(&five_qubit());
        assert_eq!(
            c.syndrome(&p("XIIII").error_vector()).unwrap(),
            bits("0001")
        );
        assert!(c.syndrome(&BitVec::zeros(10)).unwrap().is_zero());
        assert!(c.syndrome(&BitVec::zeros(8)).is_err());

        let mut ops = five_qubit().generators().to_vec();
        let s4 = ops
            .iter()
            .skip(1)
            .fold(ops[0].clone(), |a, b| a.multiply(b).unwrap());
        ops.push(s4);
        let c5 = CheckSet::new(five_qubit(), ops).unwrap();
        assert_eq!(
            c5.syndrome(&p("IIZII").error_vector()).unwrap(),
            bits("00101")
        );
    }

    #[test]
    fn observed_syndrome_examples() {
        let c = CheckSet::from_generators(&five_qubit());
        let f = Fault::flip(5, 4, 3);
        assert_eq!(c.observed_syndrome(&f).unwrap(), bits("0001"));
        let e = p("YIZII").error_vector();
        assert_eq!(
            c.observed_syndrome(&Fault::new(e.clone(), BitVec::zeros(4)).unwrap())
                .unwrap(),
            c.syndrome(&e).unwrap()
        );
        let bad = Fault::new(e, BitVec::zeros(5)).unwrap();
        assert!(c.observed_syndrome(&bad).is_err());
    }

    #[test]
    fn five_qubit_distance() {
        let d = distances(&five_qubit(), 5).unwrap();
        assert_eq!(d.distance, WeightBound::Exact(3));
        assert_eq!(d.pure, WeightBound::Exact(3));
        assert_eq!(d.to_string(), "d=3 d_pure=3");
        assert_eq!(
            pure_distance(&five_qubit(), 5).unwrap(),
            WeightBound::Exact(3)
        );
        assert_eq!(distance(&five_qubit(), 2).unwrap(), WeightBound::Above(2));
        assert!(distances(&five_qubit(), 6).is_err());
    }

    #[test]
    fn steane_distance() {
        assert_eq!(distance(&steane_css(), 7).unwrap(), WeightBound::Exact(3));
        assert_eq!(
            distance(&steane_alternative(), 7).unwrap(),
            WeightBound::Exact(3)
        );
    }

    #[test]
    fn zz_code_pure_distance_matches_brute_force() {
        let code = StabilizerCode::from_strings(&["ZZ"]).unwrap();
        // brute force over the 15 nontrivial two-qubit Paulis
        let zz = p("ZZ");
        let labels = ['I', 'X', 'Y', 'Z'];
        let mut best_pure = usize::MAX;
        let mut best_logical = usize::MAX;
        for a in 0..4 {
            for b in 0..4 {
                if a == 0 && b == 0 {
                    continue;
                }
                let s: String = [labels[a], labels[b]].iter().collect();
                let op = p(&s);
                if op.commutes_with(&zz).unwrap() {
                    best_pure = best_pure.min(op.weight());
                    if s != "ZZ" {
                        best_logical = best_logical.min(op.weight());
                    }
                }
            }
        }
        let d = distances(&code, 2).unwrap();
        assert_eq!(d.pure, WeightBound::Exact(best_pure));
        assert_eq!(d.distance, WeightBound::Exact(best_logical));
        assert_eq!(best_pure, 1);
    }

    #[test]
    fn singleton_examples() {
        assert!(singleton_check(5, 1, 3));
        assert!(!singleton_check(4, 1, 3));
        assert!(singleton_check(11, 1, 5));
    }

    #[test]
    fn gv_examples() {
        let r = gv_check(5, 1, 3);
        assert_eq!(r.lhs, 105u32.into());
        assert_eq!(r.rhs, 16u32.into());
        assert!(!r.satisfied);
        let r = gv_check(9, 2, 1);
        assert_eq!(r.lhs, 0u32.into());
        assert!(r.satisfied);
        let r = gv_check(11, 1, 3);
        assert_eq!(r.lhs, 528u32.into());
        assert_eq!(r.rhs, 1024u32.into());
        assert!(r.satisfied);
    }

    #[test]
    fn fixtures_match_listings() {
        let names: Vec<String> = five_qubit()
            .generators()
            .iter()
            .map(|g| g.to_string())
            .collect();
        assert_eq!(names, ["XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"]);
        let names: Vec<String> = steane_css()
            .generators()
            .iter()
            .map(|g| g.to_string())
            .collect();
        assert_eq!(
            names,
            ["XIIXIXX", "IXIXXIX", "IIXIXXX", "ZIIZIZZ", "IZIZZIZ", "IIZIZZZ"]
        );
        let s = steane_css();
        let g = s.generators();
        assert_eq!(
            g[0].multiply(&g[3]).unwrap(),
            steane_alternative().generators()[0]
        );
        assert!(s.is_css());
        assert!(!five_qubit().is_css());
        assert_eq!(five_qubit().k(), 1);
        assert_eq!(steane_css().k(), 1);
    }

    #[test]
    fn file_round_trip_and_errors() {
        let text = "# perfect code\nXZZXI\nIXZZX\nXIXZZ\nZXIXZ\n";
        assert_eq!(parse_code(text).unwrap(), five_qubit());
        let with_header = format_code(&five_qubit());
        assert!(with_header.starts_with("5 1\n"));
        assert_eq!(parse_code(&with_header).unwrap(), five_qubit());

        assert_eq!(
            parse_code("XX\nZI\n"),
            Err(Error::NonCommuting {
                first: 0,
                second: 1
            })
        );
        assert_eq!(parse_code("XX\nXX\n"), Err(Error::Dependent { row: 1 }));
        assert!(matches!(
            parse_code("XX\n# ok\nZQ\n"),
            Err(Error::Format { line: 3, .. })
        ));
        assert!(matches!(
            parse_code("5 2\nXZZXI\nIXZZX\nXIXZZ\nZXIXZ\n"),
            Err(Error::Format { line: 1, .. })
        ));
        assert!(matches!(
            parse_code("XX\nZZZ\n"),
            Err(Error::Format { line: 2, .. })
        ));

        let dir = std::env::temp_dir().join(format!("dsqec-code-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("steane.txt");
        save_code(&steane_css(), &path).unwrap();
        assert_eq!(load_code(&path).unwrap(), steane_css());
        std::fs::remove_dir_all(&dir).unwrap();
    }

    #[test]
    fn checkset_validation() {
        let code = five_qubit();
        assert_eq!(
            CheckSet::new(code.clone(), vec![p("XIIII")]),
            Err(Error::NotStabilizer { row: 0 })
        );
        assert_eq!(
            CheckSet::new(code.clone(), code.generators()[..3].to_vec()),
            Err(Error::RankDeficient {
                rank: 3,
                expected: 4
            })
        );
        let mut ops = code.generators().to_vec();
        ops.push(ops[0].clone());
        let c = CheckSet::from_operators(ops).unwrap();
        assert_eq!(c.m(), 5);
        assert_eq!(c.redundancy(), 1);
        assert_eq!(c.code(), &code);
        let round = parse_checkset(&format_checkset(&c, &["note".into()])).unwrap();
        assert_eq!(round, c);
    }

    #[test]
    fn fault_display() {
        assert_eq!(Fault::none(5, 4).to_string(), "no error");
        assert_eq!(Fault::flip(5, 4, 3).to_string(), "flip s3");
        let f = Fault::new(p("XIIII").error_vector(), bits("1001")).unwrap();
        assert_eq!(f.to_string(), "data XIIII + flips s0,s3");
        assert_eq!(f.data_weight(), 1);
        assert_eq!(f.flip_weight(), 2);
    }

    #[test]
    fn stabilizer_elements_have_zero_syndrome() {
        for code in [five_qubit(), steane_css()] {
            let c = CheckSet::from_generators(&code);
            let elems = code.elements();
            assert_eq!(elems.len(), 1 << code.num_generators());
            for e in elems {
                assert!(c.syndrome(&e).unwrap().is_zero());
                assert!(code.contains(&e).unwrap());
            }
        }
    }
}
