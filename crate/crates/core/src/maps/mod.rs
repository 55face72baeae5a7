//! The concrete Yang-Baxter maps: Adler's map on `CP^1`, the matrix soliton
//! interaction on rank-one projectors, and the geometric crystal map on
//! `C^n`.

pub mod adler;
pub mod crystal;
pub mod soliton;

pub use adler::{adler_apply, adler_lax, adler_lax_homogeneous, AdlerMap};
pub use crystal::{
    crystal_apply, crystal_embed, crystal_lax_a_adjugate, crystal_lax_a_inv, crystal_lax_b_inv, crystal_p,
    crystal_projective_form_check, CrystalMap, CrystalVector,
};
pub use soliton::{soliton_apply, soliton_lax, RankOnePair, SolitonMap};
