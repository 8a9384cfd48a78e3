//! Enumeration of low-weight Pauli errors and bit subsets.
//!
//! Errors of Pauli weight `w` come out in type-major order: the outer loop
//! runs over the `3^w` type tuples (lexicographic with X < Y < Z), the inner
//! loop over the `w`-subsets of qubits in lexicographic order. At `w = 1`
//! this is X on every qubit, then Y, then Z, the layout of the syndrome
//! tables.

use std::ops::ControlFlow;

use crate::symplectic::{BitVec, Pauli};

/// Calls `f` on every `w`-subset of `0..len`, in lexicographic order.
pub fn for_each_subset<B>(
    len: usize,
    w: usize,
    mut f: impl FnMut(&[usize]) -> ControlFlow<B>,
) -> ControlFlow<B> {
    if w > len {
        return ControlFlow::Continue(());
    }
    let mut idx: Vec<usize> = (0..w).collect();
    loop {
        f(&idx)?;
        // advance to the next combination
        let mut i = w;
        loop {
            if i == 0 {
                return ControlFlow::Continue(());
            }
            i -= 1;
            if idx[i] < len - w + i {
                idx[i] += 1;
                for j in i + 1..w {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// The `index`-th tuple of `w` nontrivial Paulis, position 0 most significant.
pub fn type_tuple(w: usize, mut index: usize) -> Vec<Pauli> {
    let mut out = vec![Pauli::X; w];
    for slot in out.iter_mut().rev() {
        *slot = Pauli::NONTRIVIAL[index % 3];
        index /= 3;
    }
    out
}

pub fn type_tuple_count(w: usize) -> usize {
    3usize.pow(w as u32)
}

/// Calls `f` on the error vector of every Pauli string on `n` qubits whose
/// nontrivial factors are `types`, placed on each `types.len()`-subset.
pub fn for_each_error_with_types<B>(
    n: usize,
    types: &[Pauli],
    mut f: impl FnMut(&BitVec) -> ControlFlow<B>,
) -> ControlFlow<B> {
    let mut v = BitVec::zeros(2 * n);
    for_each_subset(n, types.len(), |qubits| {
        v.clear();
        for (&q, &p) in qubits.iter().zip(types) {
            let (x, z) = p.bits();
            if x {
                v.set(q, true);
            }
            if z {
                v.set(n + q, true);
            }
        }
        f(&v)
    })
}

/// Calls `f` on the error vector of every Pauli string of weight exactly `w`.
pub fn for_each_error<B>(
    n: usize,
    w: usize,
    mut f: impl FnMut(&BitVec) -> ControlFlow<B>,
) -> ControlFlow<B> {
    for t in 0..type_tuple_count(w) {
        for_each_error_with_types(n, &type_tuple(w, t), &mut f)?;
    }
    ControlFlow::Continue(())
}

pub fn binomial_u128(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// `3^w · C(n, w)`.
pub fn count_errors(n: usize, w: usize) -> u128 {
    3u128.pow(w as u32) * binomial_u128(n, w)
}
