//! Periodic chains of `(field, parameter)` sites.
//!
//! The monodromy `A(x₁,λ₁;ζ)⋯A(x_n,λ_n;ζ)` is left unchanged by exchanging
//! two neighbouring sites with the map, because that is exactly the Lax
//! relation. The transfer step sweeps an exchange through the whole chain
//! and then rotates the sites left by one, which conjugates the monodromy by
//! a single Lax factor; the spectral invariants of the monodromy are
//! therefore conserved.
//!
//! The sweep-then-rotate step is this crate's concrete choice of transfer
//! dynamics; reports label it as such.

use serde_json::{json, Value};

use crate::algebra::{spectral_invariants, Scalar, SpectralInvariants, SquareMatrix};
use crate::error::ChainError;
use crate::ybcore::{FieldValue, YangBaxterMap};

/// Label attached to reports of chain runs.
pub const TRANSFER_DYNAMICS: &str = "sweep-then-rotate-left";

#[derive(Clone, Debug, PartialEq)]
pub struct Site<F, X> {
    pub field: X,
    pub param: F,
}

#[derive(Clone, Debug)]
pub struct ChainState<F: Scalar, M: YangBaxterMap<F>> {
    map: M,
    sites: Vec<Site<F, M::Field>>,
}

impl<F: Scalar, M: YangBaxterMap<F>> ChainState<F, M> {
    pub fn new(map: M, sites: Vec<Site<F, M::Field>>) -> Result<Self, ChainError> {
        if sites.is_empty() {
            return Err(ChainError::Empty);
        }
        Ok(Self { map, sites })
    }

    pub fn from_pairs(map: M, pairs: Vec<(M::Field, F)>) -> Result<Self, ChainError> {
        Self::new(map, pairs.into_iter().map(|(field, param)| Site { field, param }).collect())
    }

    pub fn map(&self) -> &M {
        &self.map
    }

    pub fn sites(&self) -> &[Site<F, M::Field>] {
        &self.sites
    }

    pub fn len(&self) -> usize {
        self.sites.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sites.is_empty()
    }

    pub fn params(&self) -> Vec<F> {
        self.sites.iter().map(|s| s.param.clone()).collect()
    }

    /// Lax matrix of one site at spectral parameter `ζ`.
    pub fn site_lax(&self, index: usize, zeta: &F) -> Result<SquareMatrix<F>, ChainError> {
        let site = self.sites.get(index).ok_or(ChainError::SiteIndex { index, len: self.sites.len() })?;
        self.map.lax_a(&site.field, &site.param, zeta).map_err(|source| ChainError::Site { site: index, source })
    }

    /// Ordered product of the site Lax matrices, first site leftmost.
    pub fn monodromy(&self, zeta: &F) -> Result<SquareMatrix<F>, ChainError> {
        let mut acc = self.site_lax(0, zeta)?;
        for i in 1..self.sites.len() {
            acc = acc.try_mul(&self.site_lax(i, zeta)?)?;
        }
        Ok(acc)
    }

    /// A nonzero multiple of the monodromy, built from the maps' scaled Lax
    /// matrices; cheaper in the exact backend and equally good for anything
    /// scale-free.
    pub fn monodromy_up_to_scale(&self, zeta: &F) -> Result<SquareMatrix<F>, ChainError> {
        let factor = |i: usize| {
            let site = &self.sites[i];
            self.map.lax_a_scaled(&site.field, &site.param, zeta).map_err(|source| ChainError::Site { site: i, source })
        };
        let mut acc = factor(0)?;
        for i in 1..self.sites.len() {
            acc = acc.try_mul(&factor(i)?)?;
        }
        Ok(acc)
    }

    /// Exchanges sites `i` and `i + 1` (0-based): with
    /// `(x̃, ỹ) = R(λ_i, λ_{i+1})(x_i, x_{i+1})`, site `i` becomes
    /// `(ỹ, λ_{i+1})` and site `i + 1` becomes `(x̃, λ_i)`.
    pub fn apply_adjacent(&self, i: usize) -> Result<Self, ChainError> {
        let n = self.sites.len();
        if i + 1 >= n {
            return Err(ChainError::SiteIndex { index: i, len: n });
        }
        let mut next = self.clone();
        next.exchange_in_place(i).map_err(|source| ChainError::Site { site: i, source })?;
        Ok(next)
    }

    fn exchange_in_place(&mut self, i: usize) -> Result<(), crate::error::MapError> {
        let (a, b) = (&self.sites[i], &self.sites[i + 1]);
        let (xt, yt) = self.map.apply(&a.param, &b.param, &a.field, &b.field)?;
        let (la, lb) = (a.param.clone(), b.param.clone());
        self.sites[i] = Site { field: yt.canonical(), param: lb };
        self.sites[i + 1] = Site { field: xt.canonical(), param: la };
        Ok(())
    }

    /// Cyclic left rotation by `k` sites.
    pub fn rotated(&self, k: usize) -> Self {
        let mut next = self.clone();
        let n = next.sites.len();
        next.sites.rotate_left(k % n);
        next
    }

    /// One sweep of exchanges at positions `0, 1, …, n−2`, then a left
    /// rotation by one site.
    pub fn transfer_step(&self) -> Result<Self, ChainError> {
        self.transfer_step_visiting(|_, _| {})
    }

    /// [`Self::transfer_step`], handing each pair of sites to `visit` just
    /// before they are exchanged.
    pub fn transfer_step_visiting(
        &self,
        mut visit: impl FnMut(&Site<F, M::Field>, &Site<F, M::Field>),
    ) -> Result<Self, ChainError> {
        let mut next = self.clone();
        for i in 0..next.sites.len().saturating_sub(1) {
            visit(&next.sites[i], &next.sites[i + 1]);
            if let Err(source) = next.exchange_in_place(i) {
                return Err(ChainError::AbortedStep { exchange: i, source, partial: next.to_json() });
            }
        }
        next.sites.rotate_left(1);
        Ok(next)
    }

    /// Transfer step with the sweep anchored at site `anchor` instead of 0.
    pub fn transfer_step_from(&self, anchor: usize) -> Result<Self, ChainError> {
        let n = self.sites.len();
        let k = anchor % n;
        Ok(self.rotated(k).transfer_step()?.rotated(n - k))
    }

    /// Spectral invariants of the monodromy at each sample, with per-sample
    /// failures kept in place. The invariants are scale-free, so they are
    /// computed from [`Self::monodromy_up_to_scale`].
    pub fn integrals(&self, zetas: &[F]) -> Vec<Result<SpectralInvariants<F>, ChainError>> {
        zetas.iter().map(|z| Ok(spectral_invariants(&self.monodromy_up_to_scale(z)?)?)).collect()
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.sites.iter().map(|s| json!({"field": s.field.to_json(), "param": s.param.render()})).collect(),
        )
    }
}
