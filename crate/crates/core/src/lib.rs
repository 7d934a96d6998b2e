//! Socle filtrations of mixed and pure tensor representations of the
//! infinite-rank Lie algebras gl, sl, sp and so, together with an exact
//! finite-rank checker that rebuilds the predicted layers from scratch.
//!
//! The infinite-rank side is pure combinatorics: partitions,
//! Littlewood-Richardson coefficients and the layer formulas in [`socle`].
//! The [`finite`] module builds `V^{⊗p} ⊗ V_*^{⊗q}` at a concrete rank `n`
//! and measures the same layers with rational linear algebra.
//!
//! ```
//! use socle_lab::{part, socle_layers, AlgebraKind, Partition};
//! use socle_lab::finite::verify_layer_multiplicities;
//!
//! let d = socle_layers(AlgebraKind::Gl, &part![2], &part![2])?;
//! assert_eq!(d.loewy_length(), 3);
//!
//! let report = verify_layer_multiplicities(AlgebraKind::Sp, 3, &part![1, 1], &Partition::zero())?;
//! assert!(report.pass);
//! # Ok::<(), socle_lab::Error>(())
//! ```

pub mod error;
pub mod finite;
pub mod lr;
pub mod partitions;
pub mod render;
pub mod socle;

pub use error::{Error, Result};
pub use lr::{lr_coefficient, schur_product_expand, SchurExpansion};
pub use partitions::{partitions_of, sym_group_irrep_dim, Partition};
pub use render::{render_structure, render_tower, BoxStyle, RenderedTower};
pub use socle::{
    decompose_tensor, gl_socle_layers, loewy_bound, loewy_length, so_socle_layers, socle_layers,
    sp_socle_layers, total_multiplicity, AlgebraKind, Decomposition, IrrepLabel, Layer,
    SocleDiagram, TensorStructure, Tower,
};
