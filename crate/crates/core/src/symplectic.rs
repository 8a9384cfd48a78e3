//! Bit-packed GF(2) vectors and matrices, and phase-free Pauli strings in
//! the binary symplectic representation.
//!
//! An n-qubit Pauli string is stored as its error vector `(x | z)` of
//! length `2n`: bit `i` is set when qubit `i` carries X or Y, bit `n + i`
//! when it carries Y or Z. Overall phases are never represented.

use std::fmt;
use std::str::FromStr;

use crate::error::{check_len, Error, Result};

const WORD: usize = 64;

fn words_for(len: usize) -> usize {
    len.div_ceil(WORD)
}

/// A vector over GF(2), packed into 64-bit words.
///
/// Bits at positions `>= len` in the last word are always zero, so equality
/// and hashing can work on the raw words.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BitVec {
    len: usize,
    words: Vec<u64>,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        BitVec {
            len,
            words: vec![0; words_for(len)],
        }
    }

    /// The weight-one vector with bit `index` set.
    pub fn unit(len: usize, index: usize) -> Self {
        let mut v = Self::zeros(len);
        v.set(index, true);
        v
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b {
                v.set(i, true);
            }
        }
        v
    }

    pub fn from_fn(len: usize, mut f: impl FnMut(usize) -> bool) -> Self {
        let mut v = Self::zeros(len);
        for i in 0..len {
            if f(i) {
                v.set(i, true);
            }
        }
        v
    }

    /// Builds a vector from the low `len` bits of `mask` (bit `i` of the
    /// mask becomes entry `i`).
    pub fn from_mask(len: usize, mask: u64) -> Self {
        assert!(len <= WORD, "mask vectors hold at most 64 bits");
        let mut v = Self::zeros(len);
        if len > 0 {
            let keep = if len == WORD {
                u64::MAX
            } else {
                (1u64 << len) - 1
            };
            v.words[0] = mask & keep;
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit index {i} out of range {}", self.len);
        (self.words[i / WORD] >> (i % WORD)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit index {i} out of range {}", self.len);
        let bit = 1u64 << (i % WORD);
        if value {
            self.words[i / WORD] |= bit;
        } else {
            self.words[i / WORD] &= !bit;
        }
    }

    #[inline]
    pub fn toggle(&mut self, i: usize) {
        assert!(i < self.len, "bit index {i} out of range {}", self.len);
        self.words[i / WORD] ^= 1u64 << (i % WORD);
    }

    /// Hamming weight.
    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn clear(&mut self) {
        self.words.iter_mut().for_each(|w| *w = 0);
    }

    /// `self += other` over GF(2). Panics on a length mismatch.
    #[inline]
    pub fn xor_assign(&mut self, other: &BitVec) {
        assert_eq!(self.len, other.len, "xor of vectors with different lengths");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn xor(&self, other: &BitVec) -> BitVec {
        let mut out = self.clone();
        out.xor_assign(other);
        out
    }

    /// Standard inner product over GF(2). Panics on a length mismatch.
    #[inline]
    pub fn dot(&self, other: &BitVec) -> bool {
        assert_eq!(self.len, other.len, "dot of vectors with different lengths");
        let ones: u32 = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones())
            .sum();
        ones & 1 == 1
    }

    /// Indices of the set bits, ascending.
    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    None
                } else {
                    let tz = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    Some(wi * WORD + tz)
                }
            })
        })
    }

    pub fn to_bools(&self) -> Vec<bool> {
        (0..self.len).map(|i| self.get(i)).collect()
    }

    /// `(self | other)` as a vector of length `self.len() + other.len()`.
    pub fn concat(&self, other: &BitVec) -> BitVec {
        let mut out = BitVec::zeros(self.len + other.len);
        for i in self.iter_ones() {
            out.set(i, true);
        }
        for i in other.iter_ones() {
            out.set(self.len + i, true);
        }
        out
    }

    /// Entries `start..start + len`.
    pub fn slice(&self, start: usize, len: usize) -> BitVec {
        assert!(start + len <= self.len, "slice out of range");
        BitVec::from_fn(len, |i| self.get(start + i))
    }

    /// Comma-joined tuple rendering, e.g. `0,0,0,1`.
    pub fn to_tuple_string(&self) -> String {
        (0..self.len)
            .map(|i| if self.get(i) { "1" } else { "0" })
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl fmt::Display for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVec({self})")
    }
}

impl FromStr for BitVec {
    type Err = Error;

    /// Parses an unspaced `0`/`1` string; commas are ignored so the tuple
    /// rendering round-trips too.
    fn from_str(s: &str) -> Result<Self> {
        let mut bits = Vec::with_capacity(s.len());
        for (position, c) in s.chars().enumerate() {
            match c {
                '0' => bits.push(false),
                '1' => bits.push(true),
                ',' => {}
                found => return Err(Error::Parse { position, found }),
            }
        }
        Ok(BitVec::from_bools(&bits))
    }
}

/// A dense GF(2) matrix stored as packed rows.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BitMatrix {
    ncols: usize,
    rows: Vec<BitVec>,
}

impl BitMatrix {
    pub fn new(ncols: usize) -> Self {
        BitMatrix {
            ncols,
            rows: Vec::new(),
        }
    }

    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        BitMatrix {
            ncols,
            rows: vec![BitVec::zeros(ncols); nrows],
        }
    }

    pub fn identity(size: usize) -> Self {
        BitMatrix {
            ncols: size,
            rows: (0..size).map(|i| BitVec::unit(size, i)).collect(),
        }
    }

    pub fn from_rows(ncols: usize, rows: Vec<BitVec>) -> Result<Self> {
        for r in &rows {
            check_len(ncols, r.len())?;
        }
        Ok(BitMatrix { ncols, rows })
    }

    pub fn push_row(&mut self, row: BitVec) -> Result<()> {
        check_len(self.ncols, row.len())?;
        self.rows.push(row);
        Ok(())
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn row(&self, i: usize) -> &BitVec {
        &self.rows[i]
    }

    pub fn rows(&self) -> &[BitVec] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i].get(j)
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        self.rows[i].set(j, value)
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        self.rows.swap(a, b);
    }

    /// `row[dst] += row[src]`.
    pub fn add_row(&mut self, src: usize, dst: usize) {
        let r = self.rows[src].clone();
        self.rows[dst].xor_assign(&r);
    }

    /// `M vᵀ`: bit `i` is the inner product of row `i` with `v`.
    pub fn mul_vec(&self, v: &BitVec) -> Result<BitVec> {
        check_len(self.ncols, v.len())?;
        Ok(BitVec::from_fn(self.rows.len(), |i| self.rows[i].dot(v)))
    }

    /// Sum of the rows selected by `coeffs`.
    pub fn combine_rows(&self, coeffs: &BitVec) -> Result<BitVec> {
        check_len(self.rows.len(), coeffs.len())?;
        let mut out = BitVec::zeros(self.ncols);
        for i in coeffs.iter_ones() {
            out.xor_assign(&self.rows[i]);
        }
        Ok(out)
    }

    /// Matrix product `self · rhs`.
    pub fn mul(&self, rhs: &BitMatrix) -> Result<BitMatrix> {
        check_len(self.ncols, rhs.nrows())?;
        let rows = self
            .rows
            .iter()
            .map(|r| rhs.combine_rows(r))
            .collect::<Result<Vec<_>>>()?;
        BitMatrix::from_rows(rhs.ncols, rows)
    }

    pub fn echelon(&self) -> Echelon {
        Echelon::new(self)
    }

    /// GF(2) row rank.
    pub fn rank(&self) -> usize {
        self.echelon().rank()
    }

    /// True iff `v` is a GF(2) combination of the rows.
    pub fn in_row_space(&self, v: &BitVec) -> Result<bool> {
        check_len(self.ncols, v.len())?;
        Ok(self.echelon().contains(v))
    }
}

impl fmt::Display for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.rows {
            writeln!(f, "{r}")?;
        }
        Ok(())
    }
}

/// Reduced row echelon basis of a row space, remembering for every basis
/// row which original rows were summed to make it.
#[derive(Clone, Debug)]
pub struct Echelon {
    ncols: usize,
    source_rows: usize,
    basis: Vec<BitVec>,
    pivots: Vec<usize>,
    origin: Vec<BitVec>,
}

impl Echelon {
    pub fn new(m: &BitMatrix) -> Self {
        let n = m.nrows();
        let mut rows: Vec<BitVec> = m.rows().to_vec();
        let mut origin: Vec<BitVec> = (0..n).map(|i| BitVec::unit(n, i)).collect();
        let mut pivots = Vec::new();
        let mut top = 0;
        for col in 0..m.ncols() {
            if top == n {
                break;
            }
            let Some(p) = (top..n).find(|&r| rows[r].get(col)) else {
                continue;
            };
            rows.swap(top, p);
            origin.swap(top, p);
            let (pr, po) = (rows[top].clone(), origin[top].clone());
            for r in 0..n {
                if r != top && rows[r].get(col) {
                    rows[r].xor_assign(&pr);
                    origin[r].xor_assign(&po);
                }
            }
            pivots.push(col);
            top += 1;
        }
        rows.truncate(top);
        origin.truncate(top);
        Echelon {
            ncols: m.ncols(),
            source_rows: n,
            basis: rows,
            pivots,
            origin,
        }
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[BitVec] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Canonical representative of the coset `v + rowspace`: `v` with every
    /// pivot column cleared. Two vectors reduce to the same result iff their
    /// difference lies in the row space.
    pub fn reduce(&self, v: &BitVec) -> BitVec {
        assert_eq!(v.len(), self.ncols, "vector length does not match matrix");
        let mut r = v.clone();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if r.get(p) {
                r.xor_assign(row);
            }
        }
        r
    }

    pub fn contains(&self, v: &BitVec) -> bool {
        self.reduce(v).is_zero()
    }

    /// Coefficients over the original rows that sum to `v`, if any.
    pub fn solve(&self, v: &BitVec) -> Option<BitVec> {
        assert_eq!(v.len(), self.ncols, "vector length does not match matrix");
        let mut r = v.clone();
        let mut coeffs = BitVec::zeros(self.source_rows);
        for ((row, &p), o) in self.basis.iter().zip(&self.pivots).zip(&self.origin) {
            if r.get(p) {
                r.xor_assign(row);
                coeffs.xor_assign(o);
            }
        }
        r.is_zero().then_some(coeffs)
    }
}

/// Single-qubit Pauli label.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Pauli {
    I,
    X,
    Y,
    Z,
}

impl Pauli {
    /// The three non-identity Paulis in enumeration order.
    pub const NONTRIVIAL: [Pauli; 3] = [Pauli::X, Pauli::Y, Pauli::Z];

    pub fn from_bits(x: bool, z: bool) -> Self {
        match (x, z) {
            (false, false) => Pauli::I,
            (true, false) => Pauli::X,
            (true, true) => Pauli::Y,
            (false, true) => Pauli::Z,
        }
    }

    pub fn bits(self) -> (bool, bool) {
        match self {
            Pauli::I => (false, false),
            Pauli::X => (true, false),
            Pauli::Y => (true, true),
            Pauli::Z => (false, true),
        }
    }

    pub fn to_char(self) -> char {
        match self {
            Pauli::I => 'I',
            Pauli::X => 'X',
            Pauli::Y => 'Y',
            Pauli::Z => 'Z',
        }
    }

    pub fn from_char(c: char) -> Option<Self> {
        match c {
            'I' => Some(Pauli::I),
            'X' => Some(Pauli::X),
            'Y' => Some(Pauli::Y),
            'Z' => Some(Pauli::Z),
            _ => None,
        }
    }
}

/// Phase-free n-qubit Pauli operator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PauliString {
    x: BitVec,
    z: BitVec,
}

impl PauliString {
    pub fn identity(n: usize) -> Self {
        PauliString {
            x: BitVec::zeros(n),
            z: BitVec::zeros(n),
        }
    }

    pub fn single(n: usize, qubit: usize, p: Pauli) -> Self {
        let mut s = Self::identity(n);
        s.set(qubit, p);
        s
    }

    pub fn from_parts(x: BitVec, z: BitVec) -> Result<Self> {
        check_len(x.len(), z.len())?;
        Ok(PauliString { x, z })
    }

    /// Inverse of [`PauliString::error_vector`].
    pub fn from_error_vector(v: &BitVec) -> Result<Self> {
        if !v.len().is_multiple_of(2) {
            return Err(Error::Dimension {
                expected: v.len() + 1,
                found: v.len(),
            });
        }
        let n = v.len() / 2;
        Ok(PauliString {
            x: v.slice(0, n),
            z: v.slice(n, n),
        })
    }

    pub fn n(&self) -> usize {
        self.x.len()
    }

    pub fn x_part(&self) -> &BitVec {
        &self.x
    }

    pub fn z_part(&self) -> &BitVec {
        &self.z
    }

    pub fn get(&self, qubit: usize) -> Pauli {
        Pauli::from_bits(self.x.get(qubit), self.z.get(qubit))
    }

    pub fn set(&mut self, qubit: usize, p: Pauli) {
        let (x, z) = p.bits();
        self.x.set(qubit, x);
        self.z.set(qubit, z);
    }

    /// Number of qubits acted on nontrivially.
    pub fn weight(&self) -> usize {
        self.x
            .words()
            .iter()
            .zip(self.z.words())
            .map(|(a, b)| (a | b).count_ones() as usize)
            .sum()
    }

    pub fn is_identity(&self) -> bool {
        self.x.is_zero() && self.z.is_zero()
    }

    /// `(x | z)`, length `2n`.
    pub fn error_vector(&self) -> BitVec {
        self.x.concat(&self.z)
    }

    /// 1 iff the operators anticommute.
    pub fn symplectic_product(&self, other: &PauliString) -> Result<bool> {
        check_len(self.n(), other.n())?;
        Ok(self.x.dot(&other.z) ^ self.z.dot(&other.x))
    }

    pub fn commutes_with(&self, other: &PauliString) -> Result<bool> {
        Ok(!self.symplectic_product(other)?)
    }

    /// Phase-free product.
    pub fn multiply(&self, other: &PauliString) -> Result<PauliString> {
        check_len(self.n(), other.n())?;
        Ok(PauliString {
            x: self.x.xor(&other.x),
            z: self.z.xor(&other.z),
        })
    }

    pub fn is_x_type(&self) -> bool {
        self.z.is_zero()
    }

    pub fn is_z_type(&self) -> bool {
        self.x.is_zero()
    }
}

impl FromStr for PauliString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.is_empty() {
            return Err(Error::EmptyPauli);
        }
        let n = s.chars().count();
        let mut p = PauliString::identity(n);
        for (position, c) in s.chars().enumerate() {
            let op = Pauli::from_char(c).ok_or(Error::Parse { position, found: c })?;
            p.set(position, op);
        }
        Ok(p)
    }
}

impl fmt::Display for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for q in 0..self.n() {
            write!(f, "{}", self.get(q).to_char())?;
        }
        Ok(())
    }
}

impl fmt::Debug for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PauliString({self})")
    }
}

pub fn parse_pauli(text: &str) -> Result<PauliString> {
    text.parse()
}

pub fn format_pauli(p: &PauliString) -> String {
    p.to_string()
}

pub fn symplectic_product(a: &PauliString, b: &PauliString) -> Result<bool> {
    a.symplectic_product(b)
}

pub fn multiply(a: &PauliString, b: &PauliString) -> Result<PauliString> {
    a.multiply(b)
}

/// Swaps the X and Z halves of an error vector, so that the symplectic
/// product with `v` becomes the ordinary inner product with `swap_halves(v)`.
pub fn swap_halves(v: &BitVec) -> BitVec {
    let n = v.len() / 2;
    v.slice(n, n).concat(&v.slice(0, n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> PauliString {
        s.parse().unwrap()
    }

    fn bits(s: &str) -> BitVec {
        s.parse().unwrap()
    }

    /// Unpacked Gaussian elimination used as an independent rank oracle.
    fn naive_rank(rows: &[Vec<u8>]) -> usize {
        let mut a: Vec<Vec<u8>> = rows.to_vec();
        let ncols = a.first().map_or(0, |r| r.len());
        let mut rank = 0;
        for c in 0..ncols {
            if let Some(p) = (rank..a.len()).find(|&r| a[r][c] == 1) {
                a.swap(rank, p);
                for r in 0..a.len() {
                    if r != rank && a[r][c] == 1 {
                        let pivot = a[rank].clone();
                        for (x, y) in a[r].iter_mut().zip(pivot) {
                            *x ^= y;
                        }
                    }
                }
                rank += 1;
            }
        }
        rank
    }

    #[test]
    fn parse_examples() {
        let s0 = p("XZZXI");
        assert_eq!(s0.x_part(), &bits("10010"));
        assert_eq!(s0.z_part(), &bits("01100"));
        let id = p("IIIII");
        assert!(id.x_part().is_zero() && id.z_part().is_zero());
        let y = p("YIIII");
        assert_eq!(y.x_part(), &bits("10000"));
        assert_eq!(y.z_part(), &bits("10000"));
        assert_eq!(s0.error_vector(), bits("1001001100"));
    }

    #[test]
    fn parse_errors_name_position() {
        assert_eq!(
            "XZQ".parse::<PauliString>(),
            Err(Error::Parse {
                position: 2,
                found: 'Q'
            })
        );
        assert_eq!("".parse::<PauliString>(), Err(Error::EmptyPauli));
        assert!("xz".parse::<PauliString>().is_err());
    }

    #[test]
    fn symplectic_product_examples() {
        assert!(p("X").symplectic_product(&p("Z")).unwrap());
        assert!(!p("XIIII").symplectic_product(&p("XZZXI")).unwrap());
        assert!(p("XIIII").symplectic_product(&p("ZXIXZ")).unwrap());
        assert_eq!(
            p("XI").symplectic_product(&p("XII")),
            Err(Error::Dimension {
                expected: 2,
                found: 3
            })
        );
    }

    #[test]
    fn multiply_examples() {
        let a = p("XZZXI");
        assert!(a.multiply(&a).unwrap().is_identity());
        assert_eq!(p("XIIXIXX").multiply(&p("ZIIZIZZ")).unwrap(), p("YIIYIYY"));
        assert!(p("X").multiply(&p("XX")).is_err());
    }

    #[test]
    fn rank_examples() {
        assert_eq!(BitMatrix::zeros(3, 7).rank(), 0);
        assert_eq!(BitMatrix::identity(9).rank(), 9);
        let gens = ["XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"];
        let m =
            BitMatrix::from_rows(10, gens.iter().map(|g| p(g).error_vector()).collect()).unwrap();
        let unpacked: Vec<Vec<u8>> = m
            .rows()
            .iter()
            .map(|r| r.to_bools().into_iter().map(u8::from).collect())
            .collect();
        assert_eq!(naive_rank(&unpacked), 4);
        assert_eq!(m.rank(), 4);
    }

    #[test]
    fn row_space_membership() {
        let gens = ["XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"];
        let m =
            BitMatrix::from_rows(10, gens.iter().map(|g| p(g).error_vector()).collect()).unwrap();
        assert!(m.in_row_space(&BitVec::zeros(10)).unwrap());
        let s0s2 = p(gens[0]).multiply(&p(gens[2])).unwrap();
        assert!(m.in_row_space(&s0s2.error_vector()).unwrap());
        assert!(!m.in_row_space(&p("XIIII").error_vector()).unwrap());
        assert!(m.in_row_space(&BitVec::zeros(9)).is_err());

        let coeffs = m.echelon().solve(&s0s2.error_vector()).unwrap();
        assert_eq!(coeffs, bits("1010"));
    }

    #[test]
    fn bitvec_basics() {
        let v = bits("0101100");
        assert_eq!(v.weight(), 3);
        assert_eq!(v.iter_ones().collect::<Vec<_>>(), vec![1, 3, 4]);
        assert_eq!(v.to_string(), "0101100");
        assert_eq!(v.to_tuple_string(), "0,1,0,1,1,0,0");
        assert!(v.xor(&v).is_zero());
        let long = BitVec::unit(130, 129);
        assert_eq!(long.iter_ones().collect::<Vec<_>>(), vec![129]);
        assert_eq!(BitVec::from_mask(4, 0b1001), bits("1001"));
    }

    fn pauli_strategy(n: usize) -> impl Strategy<Value = PauliString> {
        proptest::collection::vec(0u8..4, n).prop_map(|v| {
            let s: String = v
                .iter()
                .map(|&i| ['I', 'X', 'Y', 'Z'][i as usize])
                .collect();
            s.parse().unwrap()
        })
    }

    #[test]
    fn parse_format_round_trip_exhaustive() {
        for n in 1..=5usize {
            for code in 0..4usize.pow(n as u32) {
                let s: String = (0..n)
                    .map(|i| ['I', 'X', 'Y', 'Z'][(code / 4usize.pow(i as u32)) % 4])
                    .collect();
                assert_eq!(format_pauli(&parse_pauli(&s).unwrap()), s);
            }
        }
    }

    proptest! {
        #[test]
        fn symplectic_product_is_biadditive(
            a in pauli_strategy(7), b in pauli_strategy(7), c in pauli_strategy(7)
        ) {
            let bc = b.multiply(&c).unwrap();
            prop_assert_eq!(
                a.symplectic_product(&bc).unwrap(),
                a.symplectic_product(&b).unwrap() ^ a.symplectic_product(&c).unwrap()
            );
            prop_assert_eq!(a.symplectic_product(&b).unwrap(), b.symplectic_product(&a).unwrap());
        }

        #[test]
        fn weight_is_subadditive(a in pauli_strategy(9), b in pauli_strategy(9)) {
            prop_assert!(a.multiply(&b).unwrap().weight() <= a.weight() + b.weight());
        }

        #[test]
        fn error_vector_round_trip(a in pauli_strategy(70)) {
            prop_assert_eq!(PauliString::from_error_vector(&a.error_vector()).unwrap(), a);
        }

        #[test]
        fn rank_invariant_under_row_operations(
            rows in proptest::collection::vec(proptest::collection::vec(any::<bool>(), 12), 1..9),
            ops in proptest::collection::vec((0usize..16, 0usize..16, any::<bool>()), 0..20)
        ) {
            let mut m = BitMatrix::from_rows(12, rows.iter().map(|r| BitVec::from_bools(r)).collect()).unwrap();
            let before = m.rank();
            let unpacked: Vec<Vec<u8>> = rows.iter().map(|r| r.iter().map(|&b| u8::from(b)).collect()).collect();
            prop_assert_eq!(before, naive_rank(&unpacked));
            let n = m.nrows();
            for (a, b, swap) in ops {
                let (a, b) = (a % n, b % n);
                if swap {
                    m.swap_rows(a, b);
                } else if a != b {
                    m.add_row(a, b);
                }
            }
            prop_assert_eq!(m.rank(), before);
        }

        #[test]
        fn reduce_is_a_coset_invariant(
            rows in proptest::collection::vec(proptest::collection::vec(any::<bool>(), 10), 1..6),
            v in proptest::collection::vec(any::<bool>(), 10),
            pick in proptest::collection::vec(any::<bool>(), 6)
        ) {
            let m = BitMatrix::from_rows(10, rows.iter().map(|r| BitVec::from_bools(r)).collect()).unwrap();
            let e = m.echelon();
            let v = BitVec::from_bools(&v);
            let mut shifted = v.clone();
            for (i, r) in m.rows().iter().enumerate() {
                if pick[i] {
                    shifted.xor_assign(r);
                }
            }
            prop_assert_eq!(e.reduce(&v), e.reduce(&shifted));
        }
    }
}
