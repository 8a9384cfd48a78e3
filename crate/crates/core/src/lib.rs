//! Stabilizer codes that correct errors on data qubits and on the extracted
//! syndrome bits at the same time.
//!
//! The crate covers the binary symplectic representation of Pauli
//! operators, stabilizer codes and redundant check sets, exhaustive
//! verifiers for joint (data error, syndrome flip) faults, constructions of
//! redundant check sets, packing bounds, and lookup and maximum-likelihood
//! decoders with a Monte Carlo harness.
//!
//! The real-valued parts (entropy, noise models, ML likelihoods) are generic
//! over [`Real`], implemented for `f32` and `f64`; the `*64` and `*32`
//! aliases fix the scalar.
//!
//! ```
//! use dsqec::{check_global, five_qubit, parity_augment, FaultBudget};
//!
//! let checks = parity_augment(&five_qubit());
//! assert_eq!(checks.m(), 5);
//! assert!(check_global(&checks, &FaultBudget::Symmetric(1)).unwrap().ok);
//! ```

pub mod code;
pub mod decode;
pub mod enumerate;
pub mod error;
pub mod redundancy;
pub mod rng;
pub mod scalar;
pub mod search;
pub mod symplectic;
pub mod tables;
pub mod verify;

pub use code::{
    distance, distances, five_qubit, fixture, format_checkset, format_code, gv_check,
    load_checkset, load_code, observed_syndrome, parse_checkset, parse_code, pure_distance,
    save_checkset, save_code, singleton_check, steane_alternative, steane_css, syndrome, CheckSet,
    Distances, Fault, StabilizerCode, WeightBound,
};
pub use decode::{
    build_table, decode, ml_decode, run_trials, sample_fault, Decoder, MlDecoder, NoiseModel,
    SyndromeTable, TrialStats,
};
pub use error::{Error, Result};
pub use redundancy::{
    binary_entropy, css_parity_pair, double_construction, generator_resynthesis, parity_augment,
    phf_matrix, random_augment, random_augment_size, PhfMatrix, RandomAugmentation,
    RandomSearchConfig, Resynthesis,
};
pub use scalar::Real;
pub use search::{search_code, GraphSearchConfig};
pub use symplectic::{
    format_pauli, multiply, parse_pauli, symplectic_product, BitMatrix, BitVec, Echelon, Pauli,
    PauliString,
};
pub use tables::{render_table, TableId};
pub use verify::{
    check_cross, check_global, check_global_pairwise, count_faults, equivalent_data,
    hybrid_hamming, lemma1_check, oa_check, symmetric_hamming, BoundReport, Collision,
    CollisionReport, FaultBudget, Lemma1Report,
};

pub type NoiseModel64 = NoiseModel<f64>;
pub type NoiseModel32 = NoiseModel<f32>;
pub type MlDecoder64 = MlDecoder<f64>;
pub type MlDecoder32 = MlDecoder<f32>;
