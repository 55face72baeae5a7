//! An exact reference implementation written directly from the defining
//! formulas, sharing no code with the library: plain `BigRational`
//! arithmetic, cofactor determinants and principal-minor characteristic
//! polynomials. Library values are compared to it through their exact
//! string forms.

#![allow(dead_code)]

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use yb_maps::algebra::{ProjectivePoint, Rational, Scalar, SquareMatrix};

pub type Q = BigRational;
pub type M = Vec<Vec<Q>>;

pub fn q(n: i64, d: i64) -> Q {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn qi(n: i64) -> Q {
    q(n, 1)
}

pub fn m(rows: &[&[i64]]) -> M {
    rows.iter().map(|r| r.iter().map(|&v| qi(v)).collect()).collect()
}

pub fn to_lib(v: &Q) -> Rational {
    Rational::from_str(&v.to_string()).expect("oracle value is a rational literal")
}

pub fn from_lib(v: &Rational) -> Q {
    BigRational::from_str(&v.to_string()).expect("library value is a rational literal")
}

pub fn matrix_from_lib(a: &SquareMatrix<Rational>) -> M {
    a.rows().map(|r| r.iter().map(from_lib).collect()).collect()
}

pub fn matrix_to_lib(a: &M) -> SquareMatrix<Rational> {
    SquareMatrix::from_rows(a.iter().map(|r| r.iter().map(to_lib).collect()).collect()).unwrap()
}

/// Affine value of a library point on `CP^1`; `None` at infinity.
pub fn affine(p: &ProjectivePoint<Rational>) -> Option<Q> {
    let c = p.coords();
    if c[1].is_zero() {
        None
    } else {
        Some(from_lib(&c[0]) / from_lib(&c[1]))
    }
}

/// Whether two homogeneous vectors span the same line.
pub fn same_line(a: &[Q], b: &[Q]) -> bool {
    a.len() == b.len()
        && (0..a.len()).all(|i| (0..a.len()).all(|j| &a[i] * &b[j] == &a[j] * &b[i]))
        && a.iter().any(|v| !v.is_zero())
        && b.iter().any(|v| !v.is_zero())
}

pub fn mat_mul(a: &M, b: &M) -> M {
    let n = a.len();
    (0..n).map(|i| (0..n).map(|j| (0..n).fold(Q::zero(), |acc, k| acc + &a[i][k] * &b[k][j])).collect()).collect()
}

pub fn mat_vec(a: &M, v: &[Q]) -> Vec<Q> {
    a.iter().map(|r| r.iter().zip(v).fold(Q::zero(), |acc, (x, y)| acc + x * y)).collect()
}

/// Laplace expansion along the first row.
pub fn det(a: &M) -> Q {
    let n = a.len();
    if n == 0 {
        return Q::one();
    }
    (0..n).fold(Q::zero(), |acc, j| {
        let minor: M = a[1..]
            .iter()
            .map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, v)| v.clone()).collect())
            .collect();
        let term = &a[0][j] * det(&minor);
        if j % 2 == 0 {
            acc + term
        } else {
            acc - term
        }
    })
}

/// Inverse through the adjugate.
pub fn inverse(a: &M) -> Option<M> {
    let n = a.len();
    let d = det(a);
    if d.is_zero() {
        return None;
    }
    let cofactor = |i: usize, j: usize| {
        let minor: M =
            (0..n).filter(|&r| r != i).map(|r| (0..n).filter(|&c| c != j).map(|c| a[r][c].clone()).collect()).collect();
        let c = det(&minor);
        if (i + j).is_multiple_of(2) {
            c
        } else {
            -c
        }
    };
    Some((0..n).map(|i| (0..n).map(|j| cofactor(j, i) / &d).collect()).collect())
}

/// `c_1, …, c_n` of `det(tI − a)`: `c_k = (−1)^k` times the sum of the
/// principal `k × k` minors.
pub fn char_poly(a: &M) -> Vec<Q> {
    let n = a.len();
    (1..=n)
        .map(|k| {
            let mut sum = Q::zero();
            for mask in 0u32..(1 << n) {
                if mask.count_ones() as usize != k {
                    continue;
                }
                let idx: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
                let minor: M = idx.iter().map(|&i| idx.iter().map(|&j| a[i][j].clone()).collect()).collect();
                sum += det(&minor);
            }
            if k % 2 == 0 {
                sum
            } else {
                -sum
            }
        })
        .collect()
}

/// `I_k = c_k^n / c_n^k` for `k = 1..n−1`.
pub fn invariants(a: &M) -> Vec<Q> {
    let c = char_poly(a);
    let n = a.len();
    let cn = c[n - 1].clone();
    (1..n).map(|k| pow(&c[k - 1], n) / pow(&cn, k)).collect()
}

pub fn pow(v: &Q, e: usize) -> Q {
    (0..e).fold(Q::one(), |acc, _| acc * v)
}

/// `x̃ = y − (λ−μ)/(x+y)`, `ỹ = x − (μ−λ)/(x+y)`.
pub fn adler(lambda: &Q, mu: &Q, x: &Q, y: &Q) -> Option<(Q, Q)> {
    let s = x + y;
    if s.is_zero() {
        return None;
    }
    Some((y - (lambda - mu) / &s, x - (mu - lambda) / &s))
}

pub fn adler_lax(x: &Q, lambda: &Q, zeta: &Q) -> M {
    vec![vec![x.clone(), x * x + lambda - zeta], vec![Q::one(), x.clone()]]
}

pub fn mobius(a: &M, y: &Q) -> Option<Q> {
    let den = &a[1][0] * y + &a[1][1];
    if den.is_zero() {
        None
    } else {
        Some((&a[0][0] * y + &a[0][1]) / den)
    }
}

fn dot(a: &[Q], b: &[Q]) -> Q {
    a.iter().zip(b).fold(Q::zero(), |acc, (x, y)| acc + x * y)
}

fn axpy(v: &[Q], c: &Q, w: &[Q]) -> Vec<Q> {
    v.iter().zip(w).map(|(a, b)| a + c * b).collect()
}

pub type Pair = (Vec<Q>, Vec<Q>);

/// The four polarization update formulas, term by term.
pub fn soliton(l1: &Q, l2: &Q, (xi1, eta1): &Pair, (xi2, eta2): &Pair) -> Option<(Pair, Pair)> {
    let (p11, p22) = (dot(xi1, eta1), dot(xi2, eta2));
    if l1 == l2 || p11.is_zero() || p22.is_zero() {
        return None;
    }
    let (p12, p21) = (dot(xi1, eta2), dot(xi2, eta1));
    let two = qi(2);
    let d1 = (l1 - l2) * &p22;
    let d2 = (l2 - l1) * &p11;
    let xi1t = axpy(xi1, &(&two * l2 * &p12 / &d1), xi2);
    let eta1t = axpy(eta1, &(&two * l2 * &p21 / &d1), eta2);
    let xi2t = axpy(xi2, &(&two * l1 * &p21 / &d2), xi1);
    let eta2t = axpy(eta2, &(&two * l1 * &p12 / &d2), eta1);
    Some(((xi1t, eta1t), (xi2t, eta2t)))
}

pub fn projector((xi, eta): &Pair) -> M {
    let p = dot(xi, eta);
    xi.iter().map(|a| eta.iter().map(|b| a * b / &p).collect()).collect()
}

/// `I + 2λ/(ζ−λ) P`.
pub fn soliton_lax(pair: &Pair, lambda: &Q, zeta: &Q) -> M {
    let p = projector(pair);
    let c = qi(2) * lambda / (zeta - lambda);
    (0..p.len())
        .map(|i| (0..p.len()).map(|j| if i == j { Q::one() } else { Q::zero() } + &c * &p[i][j]).collect())
        .collect()
}

/// `P_j = Σ_a Π_{k<a} x_{j+k} Π_{k>a} y_{j+k}`, 1-based with indices
/// reduced into `1..=n`.
pub fn crystal_p(j: usize, x: &[Q], y: &[Q]) -> Q {
    let n = x.len();
    let at = |v: &[Q], i: usize| v[(i - 1) % n].clone();
    (1..=n).fold(Q::zero(), |acc, a| {
        let xs = (1..a).fold(Q::one(), |t, k| t * at(x, j + k));
        let ys = (a + 1..=n).fold(Q::one(), |t, k| t * at(y, j + k));
        acc + xs * ys
    })
}

/// `x̃_j = x_j P_j / P_{j−1}`, `ỹ_j = y_j P_{j−1} / P_j` with `P_0 = P_n`.
pub fn crystal(x: &[Q], y: &[Q]) -> Option<(Vec<Q>, Vec<Q>)> {
    let n = x.len();
    let p: Vec<Q> = (1..=n).map(|j| crystal_p(j, x, y)).collect();
    if p.iter().any(Zero::is_zero) {
        return None;
    }
    let prev = |j: usize| p[(j + n - 1) % n].clone();
    let xt = (0..n).map(|j| &x[j] * &p[j] / prev(j)).collect();
    let yt = (0..n).map(|j| &y[j] * prev(j) / &p[j]).collect();
    Some((xt, yt))
}

/// Diagonal `x`, subdiagonal −1, `−ζ` added at `(1, n)`.
pub fn crystal_a_inv(x: &[Q], zeta: &Q) -> M {
    let n = x.len();
    let mut a: M = (0..n).map(|i| (0..n).map(|j| if i == j { x[i].clone() } else { Q::zero() }).collect()).collect();
    for i in 1..n {
        a[i][i - 1] = -Q::one();
    }
    a[0][n - 1] = &a[0][n - 1] - zeta;
    a
}

/// Diagonal `y`, superdiagonal −1, `−ζ` added at `(n, 1)`.
pub fn crystal_b_inv(y: &[Q], zeta: &Q) -> M {
    let n = y.len();
    let mut b: M = (0..n).map(|i| (0..n).map(|j| if i == j { y[i].clone() } else { Q::zero() }).collect()).collect();
    for i in 0..n - 1 {
        b[i][i + 1] = -Q::one();
    }
    b[n - 1][0] = &b[n - 1][0] - zeta;
    b
}

/// `z = (1 : x₁ : x₁x₂ : …)`, `w = (… : y_{n−1}y_n : y_n : 1)`.
pub fn crystal_embed(x: &[Q], y: &[Q]) -> (Vec<Q>, Vec<Q>) {
    let n = x.len();
    let z = (0..n).map(|j| x[..j].iter().fold(Q::one(), |t, v| t * v)).collect();
    let w = (0..n).map(|j| y[j + 1..].iter().fold(Q::one(), |t, v| t * v)).collect();
    (z, w)
}

pub fn is_zero_matrix(a: &M) -> bool {
    a.iter().flatten().all(Zero::is_zero)
}

pub fn abs(v: &Q) -> Q {
    v.abs()
}

pub fn lib_vec(v: &[Rational]) -> Vec<Q> {
    v.iter().map(from_lib).collect()
}

pub fn lib_q(n: i64, d: i64) -> Rational {
    Rational::from_ratio(n, d)
}
