//! Yang-Baxter map from geometric crystals on `C^n × C^n`:
//!
//! ```text
//! x̃_j = x_j P_j / P_{j−1},    ỹ_j = y_j P_{j−1} / P_j,
//! P_j = Σ_{a=1}^{n} (Π_{k=1}^{a−1} x_{j+k}) (Π_{k=a+1}^{n} y_{j+k})
//! ```
//!
//! Indices are cyclic with representatives in `1..=n`, so `P_0 = P_n`. The
//! map preserves the level sets `X_λ = {Π x_k = λ}`; on `X_λ × X_μ` it is
//! written through the projective action of `GL_n` after the embedding
//! `z = (1 : x₁ : x₁x₂ : …)`, `w = (… : y_{n−1}y_n : y_n : 1)`, with inverse
//! Lax matrices that are cyclic two-diagonal.

use serde_json::Value;

use crate::algebra::{projective_apply, relative_difference, ProjectivePoint, Scalar, SquareMatrix};
use crate::error::{AlgebraError, MapError};
use crate::ybcore::{
    check_map_form, scalars_from_json, scalars_to_json, CaseParseError, CheckReport, FieldValue, LaxMode, YangBaxterMap,
};

/// Product labels in float mode are compared with this relative tolerance.
pub const LABEL_TOLERANCE: f64 = 1e-9;

/// A point of `C^n` with all components nonzero.
#[derive(Clone, Debug, PartialEq)]
pub struct CrystalVector<F> {
    comps: Vec<F>,
}

impl<F: Scalar> CrystalVector<F> {
    pub fn new(comps: Vec<F>) -> Result<Self, MapError> {
        if comps.is_empty() {
            return Err(MapError::InvalidState("crystal vector must have n ≥ 1 components".into()));
        }
        if comps.iter().any(|c| c.is_negligible()) {
            return Err(MapError::InvalidState("crystal vector has a zero component".into()));
        }
        Ok(Self { comps })
    }

    pub fn from_ints(v: &[i64]) -> Result<Self, MapError> {
        Self::new(v.iter().map(|&c| F::from_int(c)).collect())
    }

    pub fn dim(&self) -> usize {
        self.comps.len()
    }

    pub fn comps(&self) -> &[F] {
        &self.comps
    }

    /// The level-set label `Π x_k`.
    pub fn product(&self) -> F {
        self.comps.iter().fold(F::one(), |acc, c| acc * c.clone())
    }

    /// Component with a 1-based cyclic index.
    fn cyc(&self, idx: usize) -> &F {
        let n = self.comps.len();
        &self.comps[(idx + n - 1) % n]
    }
}

impl<F: Scalar> FieldValue<F> for CrystalVector<F> {
    const KIND: &'static str = "crystal-vector";

    fn residual(&self, other: &Self) -> Result<F::Real, AlgebraError> {
        if self.dim() != other.dim() {
            return Err(AlgebraError::Shape { expected: self.dim(), got: other.dim() });
        }
        Ok(self
            .comps
            .iter()
            .zip(&other.comps)
            .fold(F::real_zero(), |acc, (a, b)| crate::algebra::real_max::<F>(acc, relative_difference(a, b))))
    }

    fn to_json(&self) -> Value {
        scalars_to_json(&self.comps)
    }

    fn from_json(v: &Value) -> Result<Self, CaseParseError> {
        CrystalVector::new(scalars_from_json(v)?).map_err(|e| CaseParseError(e.to_string()))
    }
}

fn same_dim<F: Scalar>(x: &CrystalVector<F>, y: &CrystalVector<F>) -> Result<(), MapError> {
    if x.dim() == y.dim() {
        Ok(())
    } else {
        Err(AlgebraError::Shape { expected: x.dim(), got: y.dim() }.into())
    }
}

/// `P_j` for `j` in `1..=n`; `j = 0` is read as `n`.
pub fn crystal_p<F: Scalar>(j: usize, x: &CrystalVector<F>, y: &CrystalVector<F>) -> Result<F, MapError> {
    same_dim(x, y)?;
    let n = x.dim();
    if j > n {
        return Err(AlgebraError::Shape { expected: n, got: j }.into());
    }
    let mut sum = F::zero();
    for a in 1..=n {
        let mut term = F::one();
        for k in 1..a {
            term = term * x.cyc(j + k).clone();
        }
        for k in a + 1..=n {
            term = term * y.cyc(j + k).clone();
        }
        sum = sum + term;
    }
    Ok(sum)
}

fn check_label<F: Scalar>(name: &str, label: &F, v: &CrystalVector<F>) -> Result<(), MapError> {
    let prod = v.product();
    let ok = match F::BACKEND {
        crate::algebra::Backend::ExactRational => prod == *label,
        crate::algebra::Backend::ComplexFloat => F::residual_ok(&relative_difference(&prod, label), LABEL_TOLERANCE),
    };
    if ok {
        Ok(())
    } else {
        Err(MapError::InvalidState(format!(
            "label {name} = {} does not match the component product {}",
            label.render(),
            prod.render()
        )))
    }
}

/// The map restricted to `X_λ × X_μ`; `λ`, `μ` must equal `Π x`, `Π y`.
pub fn crystal_apply<F: Scalar>(
    lambda: &F,
    mu: &F,
    x: &CrystalVector<F>,
    y: &CrystalVector<F>,
) -> Result<(CrystalVector<F>, CrystalVector<F>), MapError> {
    same_dim(x, y)?;
    check_label("λ", lambda, x)?;
    check_label("μ", mu, y)?;
    let n = x.dim();
    let p = (1..=n).map(|j| crystal_p(j, x, y)).collect::<Result<Vec<F>, _>>()?;
    if let Some(j) = p.iter().position(|v| v.is_negligible()) {
        return Err(MapError::SingularInput(format!("P_{} = 0", j + 1)));
    }
    // p[j - 1] = P_j and P_0 = P_n
    let prev = |j: usize| p[(j + n - 1) % n].clone();
    let xt = (0..n).map(|j| x.comps[j].clone() * p[j].clone() / prev(j)).collect();
    let yt = (0..n).map(|j| y.comps[j].clone() * prev(j) / p[j].clone()).collect();
    let xt = CrystalVector::new(xt).map_err(|e| MapError::SingularOutput(e.to_string()))?;
    let yt = CrystalVector::new(yt).map_err(|e| MapError::SingularOutput(e.to_string()))?;
    Ok((xt, yt))
}

/// Projective coordinates `z(x) = (1 : z₁ : … : z_{n−1})` with
/// `z_j = Π_{k≤j} x_k`, and `w(y) = (w₁ : … : w_{n−1} : 1)` with
/// `w_j = Π_{k>j} y_k`.
pub fn crystal_embed<F: Scalar>(
    x: &CrystalVector<F>,
    y: &CrystalVector<F>,
) -> Result<(ProjectivePoint<F>, ProjectivePoint<F>), MapError> {
    same_dim(x, y)?;
    let n = x.dim();
    let mut z = Vec::with_capacity(n);
    let mut acc = F::one();
    z.push(acc.clone());
    for xk in &x.comps[..n - 1] {
        acc = acc * xk.clone();
        z.push(acc.clone());
    }
    let mut w = vec![F::one(); n];
    for j in (0..n - 1).rev() {
        w[j] = w[j + 1].clone() * y.comps[j + 1].clone();
    }
    Ok((ProjectivePoint::new(z)?, ProjectivePoint::new(w)?))
}

/// `A⁻¹(x; ζ)`: diagonal `x₁…x_n`, subdiagonal `−1`, corner `−ζ` at `(1, n)`.
pub fn crystal_lax_a_inv<F: Scalar>(x: &CrystalVector<F>, spectral: &F) -> SquareMatrix<F> {
    let n = x.dim();
    let mut m = SquareMatrix::diagonal(&x.comps);
    for i in 1..n {
        m.set(i, i - 1, -F::one());
    }
    let corner = m.get(0, n - 1).clone() - spectral.clone();
    m.set(0, n - 1, corner);
    m
}

/// `B⁻¹(y; ζ)`: diagonal `y₁…y_n`, superdiagonal `−1`, corner `−ζ` at `(n, 1)`.
pub fn crystal_lax_b_inv<F: Scalar>(y: &CrystalVector<F>, spectral: &F) -> SquareMatrix<F> {
    let n = y.dim();
    let mut m = SquareMatrix::diagonal(&y.comps);
    for i in 0..n - 1 {
        m.set(i, i + 1, -F::one());
    }
    let corner = m.get(n - 1, 0).clone() - spectral.clone();
    m.set(n - 1, 0, corner);
    m
}

/// `adj(A⁻¹(x; ζ)) = (Π x − ζ) A(x; ζ)`, entrywise products without
/// division (0-based indices):
///
/// ```text
/// j ≤ i:  Π x_k over k ∈ {0, …, j−1} ∪ {i+1, …, n−1}
/// j > i:  ζ · Π x_k over k ∈ {i+1, …, j−1}
/// ```
pub fn crystal_lax_a_adjugate<F: Scalar>(x: &CrystalVector<F>, spectral: &F) -> SquareMatrix<F> {
    let n = x.dim();
    let prod = |range: std::ops::Range<usize>| x.comps[range].iter().fold(F::one(), |acc, v| acc * v.clone());
    let mut m = SquareMatrix::zeros(n);
    for i in 0..n {
        for j in 0..n {
            let v = if j <= i { prod(0..j) * prod(i + 1..n) } else { spectral.clone() * prod(i + 1..j) };
            m.set(i, j, v);
        }
    }
    m
}

#[derive(Debug, Clone, Copy, Default)]
pub struct CrystalMap;

impl<F: Scalar> YangBaxterMap<F> for CrystalMap {
    type Field = CrystalVector<F>;

    fn name(&self) -> &'static str {
        "crystal"
    }

    fn apply(
        &self,
        lambda: &F,
        mu: &F,
        x: &CrystalVector<F>,
        y: &CrystalVector<F>,
    ) -> Result<(CrystalVector<F>, CrystalVector<F>), MapError> {
        crystal_apply(lambda, mu, x, y)
    }

    /// The inverse of [`crystal_lax_a_inv`]; the own parameter does not enter.
    fn lax_a(&self, x: &CrystalVector<F>, _param: &F, spectral: &F) -> Result<SquareMatrix<F>, MapError> {
        Ok(crystal_lax_a_inv(x, spectral).inverse()?)
    }

    /// The adjugate of [`crystal_lax_a_inv`], i.e. `(Π x − ζ) A`.
    fn lax_a_scaled(&self, x: &CrystalVector<F>, _param: &F, spectral: &F) -> Result<SquareMatrix<F>, MapError> {
        if (x.product() - spectral.clone()).is_negligible() {
            return Err(MapError::SpectralSingularity("Π x = ζ".into()));
        }
        Ok(crystal_lax_a_adjugate(x, spectral))
    }

    fn lax_b(&self, x: &CrystalVector<F>, _param: &F, spectral: &F) -> Result<SquareMatrix<F>, MapError> {
        Ok(crystal_lax_b_inv(x, spectral).inverse()?)
    }

    fn lax_mode(&self) -> LaxMode {
        LaxMode::Exact
    }

    /// `z(x̃) = B(y, μ, λ)[z(x)]` and `w(ỹ) = A(x, λ, μ)[w(y)]`.
    fn map_form_residual(
        &self,
        lambda: &F,
        mu: &F,
        x: &CrystalVector<F>,
        y: &CrystalVector<F>,
    ) -> Result<F::Real, MapError> {
        let (xt, yt) = crystal_apply(lambda, mu, x, y)?;
        let (z, w) = crystal_embed(x, y)?;
        let (zt, wt) = crystal_embed(&xt, &yt)?;
        let b = crystal_lax_b_inv(y, lambda).inverse()?;
        let a = crystal_lax_a_inv(x, mu).inverse()?;
        let rz = zt.residual(&projective_apply(&b, &z)?)?;
        let rw = wt.residual(&projective_apply(&a, &w)?)?;
        Ok(if rw > rz { rw } else { rz })
    }

    fn has_map_form(&self) -> bool {
        true
    }
}

/// Map-form check with the labels `λ = Π x`, `μ = Π y`.
pub fn crystal_projective_form_check<F: Scalar>(
    lambda: &F,
    mu: &F,
    x: &CrystalVector<F>,
    y: &CrystalVector<F>,
    tol: f64,
) -> CheckReport<F> {
    check_map_form(&CrystalMap, lambda, mu, x, y, tol)
}
