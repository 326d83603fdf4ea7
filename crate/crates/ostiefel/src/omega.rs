//! The triple spaces Ω_{l,m}: unit vectors a, b, c in R^l that are pairwise
//! orthogonal and Clifford-orthogonal (⟨a, E_i b⟩ = 0 and cyclic). They cut out
//! V_3 over R, C, H, O as special cases and are the zero set of 3m+3 quadratic
//! constraints whose gradients are assembled here.
//!
//! Includes the regularity Gram test, emptiness/dimension classification with
//! deterministic witnesses, seeded float sampling, the W_{l,m}/M_+ layer with
//! degeneracy certificates, the l=8 indefinite circle analysis, deformation
//! curves, and the last-row projection π with its lift and rank obstruction.

use crate::clifford::{CliffordSystem, Family};
use crate::frames::OctFrame;
use crate::linalg::{add_vec, dot, norm2, scale_vec, sub_vec, LinAlgError, Mat, MatScalar};
use crate::octonion::{from_reals, left_mul_vec, to_reals, Octonion};
use crate::scalar::{Scalar, Tol};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum OmegaError {
    #[error("vector lengths do not match l = {expected}")]
    DimensionMismatch { expected: usize },
    #[error("point does not satisfy the membership constraints")]
    NotAMember,
    #[error("pair does not lie in W_(l,m)")]
    NotInW,
    #[error("sampling failed after 100 retries")]
    SamplingFailed,
    #[error("base point violates the curve hypotheses: {0}")]
    BadBasePoint(String),
    #[error("bad dimension: {0}")]
    BadDimension(String),
    #[error("exact normalization leaves Q(√2): {0}")]
    Unrepresentable(String),
    #[error("pointwise identity failed: {0}")]
    IdentityFailed(String),
    #[error(transparent)]
    LinAlg(#[from] LinAlgError),
}

/// Candidate point (a, b, c) ∈ R^l × R^l × R^l.
#[derive(Clone, PartialEq, Serialize, Deserialize)]
pub struct OmegaPoint<S> {
    pub a: Vec<S>,
    pub b: Vec<S>,
    pub c: Vec<S>,
}

impl<S: Scalar> OmegaPoint<S> {
    pub fn new(a: Vec<S>, b: Vec<S>, c: Vec<S>) -> Self {
        assert!(a.len() == b.len() && b.len() == c.len());
        OmegaPoint { a, b, c }
    }

    pub fn l(&self) -> usize {
        self.a.len()
    }

    /// The 3l coordinates (a, b, c) concatenated.
    pub fn concat(&self) -> Vec<S> {
        let mut v = Vec::with_capacity(3 * self.l());
        v.extend(self.a.iter().cloned());
        v.extend(self.b.iter().cloned());
        v.extend(self.c.iter().cloned());
        v
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> OmegaPoint<T> {
        OmegaPoint {
            a: self.a.iter().map(&f).collect(),
            b: self.b.iter().map(&f).collect(),
            c: self.c.iter().map(&f).collect(),
        }
    }

    pub fn to_f64(&self) -> OmegaPoint<f64> {
        self.map(S::to_f64)
    }

    /// Mixes the rows by a real 3×3 matrix, (a,b,c) ↦ R·(a,b,c).
    /// For orthogonal R this preserves membership.
    pub fn rotate(&self, r: &Mat<S>) -> OmegaPoint<S> {
        assert_eq!((r.rows(), r.cols()), (3, 3));
        let mix = |i: usize| -> Vec<S> {
            let sa = scale_vec(&self.a, &r[(i, 0)]);
            let sb = scale_vec(&self.b, &r[(i, 1)]);
            let sc = scale_vec(&self.c, &r[(i, 2)]);
            add_vec(&add_vec(&sa, &sb), &sc)
        };
        OmegaPoint {
            a: mix(0),
            b: mix(1),
            c: mix(2),
        }
    }
}

/// The 3m+3 constraint values at a candidate point, in the canonical order
/// ω1, ω2, ω3, f_0..f_{m−1}, g_0..g_{m−1}, h_0..h_{m−1}.
#[derive(Clone, Debug, Serialize)]
pub struct ConstraintVector<S> {
    pub omega: [S; 3],
    pub f: Vec<S>,
    pub g: Vec<S>,
    pub h: Vec<S>,
}

impl<S: Scalar> ConstraintVector<S> {
    pub fn flat(&self) -> Vec<S> {
        let mut v = Vec::with_capacity(3 + self.f.len() * 3);
        v.extend(self.omega.iter().cloned());
        v.extend(self.f.iter().cloned());
        v.extend(self.g.iter().cloned());
        v.extend(self.h.iter().cloned());
        v
    }

    pub fn all_within(&self, eps: f64) -> bool {
        self.flat().iter().all(|x| x.within(eps))
    }
}

fn check_lengths<S: Scalar>(sys: &CliffordSystem<S>, p: &OmegaPoint<S>) -> Result<(), OmegaError> {
    if p.a.len() != sys.l || p.b.len() != sys.l || p.c.len() != sys.l {
        Err(OmegaError::DimensionMismatch { expected: sys.l })
    } else {
        Ok(())
    }
}

/// Exact evaluation of the 3m+3 defining functions.
pub fn constraints<S: Scalar>(
    sys: &CliffordSystem<S>,
    p: &OmegaPoint<S>,
) -> Result<ConstraintVector<S>, OmegaError> {
    check_lengths(sys, p)?;
    let one = S::one();
    let omega = [norm2(&p.a) - &one, norm2(&p.b) - &one, norm2(&p.c) - &one];
    let mut f = vec![dot(&p.a, &p.b)];
    let mut g = vec![dot(&p.b, &p.c)];
    let mut h = vec![dot(&p.c, &p.a)];
    for i in 1..sys.m {
        f.push(dot(&p.a, &sys.apply(i, &p.b)));
        g.push(dot(&p.b, &sys.apply(i, &p.c)));
        h.push(dot(&p.c, &sys.apply(i, &p.a)));
    }
    Ok(ConstraintVector { omega, f, g, h })
}

pub fn is_member<S: Scalar>(
    sys: &CliffordSystem<S>,
    p: &OmegaPoint<S>,
    tol: Tol,
) -> Result<bool, OmegaError> {
    Ok(constraints(sys, p)?.all_within(tol.residual))
}

/// Euclidean gradients of the 3m+3 constraints, each a vector in R^{3l},
/// in the same canonical order as [`constraints`].
pub fn gradients<S: Scalar>(
    sys: &CliffordSystem<S>,
    p: &OmegaPoint<S>,
) -> Result<Vec<Vec<S>>, OmegaError> {
    check_lengths(sys, p)?;
    let l = sys.l;
    let zero = vec![S::zero(); l];
    let two = S::from_int(2);
    let triple = |x: &[S], y: &[S], z: &[S]| -> Vec<S> {
        let mut v = Vec::with_capacity(3 * l);
        v.extend_from_slice(x);
        v.extend_from_slice(y);
        v.extend_from_slice(z);
        v
    };
    let mut grads = Vec::with_capacity(3 * sys.m + 3);
    grads.push(triple(&scale_vec(&p.a, &two), &zero, &zero));
    grads.push(triple(&zero, &scale_vec(&p.b, &two), &zero));
    grads.push(triple(&zero, &zero, &scale_vec(&p.c, &two)));
    // f block: ∇f_0 = (b, a, 0), ∇f_i = (E_i b, −E_i a, 0)
    grads.push(triple(&p.b, &p.a, &zero));
    for i in 1..sys.m {
        let eb = sys.apply(i, &p.b);
        let ea: Vec<S> = sys.apply(i, &p.a).into_iter().map(|x| -x).collect();
        grads.push(triple(&eb, &ea, &zero));
    }
    // g block: ∇g_0 = (0, c, b), ∇g_j = (0, E_j c, −E_j b)
    grads.push(triple(&zero, &p.c, &p.b));
    for j in 1..sys.m {
        let ec = sys.apply(j, &p.c);
        let eb: Vec<S> = sys.apply(j, &p.b).into_iter().map(|x| -x).collect();
        grads.push(triple(&zero, &ec, &eb));
    }
    // h block: ∇h_0 = (c, 0, a), ∇h_k = (−E_k c, 0, E_k a)
    grads.push(triple(&p.c, &zero, &p.a));
    for k in 1..sys.m {
        let ec: Vec<S> = sys.apply(k, &p.c).into_iter().map(|x| -x).collect();
        let ea = sys.apply(k, &p.a);
        grads.push(triple(&ec, &zero, &ea));
    }
    Ok(grads)
}

/// The (3m+3) × 3l Jacobian of the defining map, rows in canonical order.
pub fn jacobian<S: Scalar>(
    sys: &CliffordSystem<S>,
    p: &OmegaPoint<S>,
) -> Result<Mat<S>, OmegaError> {
    Ok(Mat::from_rows(gradients(sys, p)?))
}

/// Φ_uv with entries ⟨E_i u, E_j v⟩, i, j = 1..m−1.
pub fn phi_matrix<S: Scalar>(sys: &CliffordSystem<S>, u: &[S], v: &[S]) -> Mat<S> {
    let eu: Vec<Vec<S>> = (1..sys.m).map(|i| sys.apply(i, u)).collect();
    let ev: Vec<Vec<S>> = (1..sys.m).map(|j| sys.apply(j, v)).collect();
    Mat::from_fn(sys.m - 1, sys.m - 1, |i, j| dot(&eu[i], &ev[j]))
}

/// Gram matrix of the 3m−3 nontrivial gradients {∇f_i, ∇g_j, ∇h_k} (i,j,k ≥ 1)
/// and its positive-definiteness verdict. The verdict is true at every member.
pub fn regularity_gram<S: Scalar + MatScalar>(
    sys: &CliffordSystem<S>,
    p: &OmegaPoint<S>,
    tol: Tol,
) -> Result<(Mat<S>, bool), OmegaError> {
    if !is_member(sys, p, tol)? {
        return Err(OmegaError::NotAMember);
    }
    let grads = gradients(sys, p)?;
    let m = sys.m;
    // Indices of ∇f_1.., ∇g_1.., ∇h_1.. within the canonical ordering
    // (each of the f, g, h blocks holds m entries starting at offset 3).
    let picked: Vec<&Vec<S>> = (0..3)
        .flat_map(|blk| (1..m).map(move |i| 3 + blk * m + i))
        .map(|idx| &grads[idx])
        .collect();
    let g = Mat::from_fn(picked.len(), picked.len(), |i, j| dot(picked[i], picked[j]));
    let verdict = if g.rows() == 0 {
        true
    } else {
        g.is_positive_definite(tol)?
    };
    Ok((g, verdict))
}

/// Gram matrix of {E_i c, E_i a, E_i b} (i = 1..m−1); the regularity Gram
/// equals I + this matrix entrywise at every member.
pub fn clifford_gram<S: Scalar>(sys: &CliffordSystem<S>, p: &OmegaPoint<S>) -> Mat<S> {
    let vecs: Vec<Vec<S>> = [&p.c, &p.a, &p.b]
        .into_iter()
        .flat_map(|v| (1..sys.m).map(move |i| sys.apply(i, v)))
        .collect();
    Mat::from_fn(vecs.len(), vecs.len(), |i, j| dot(&vecs[i], &vecs[j]))
}

/// Classification of Ω_{l,m} for a given system.
#[derive(Clone, Serialize)]
pub struct SpaceClassification<S> {
    /// 3(l − m − 1), the manifold dimension whenever the space is nonempty.
    pub dim: i64,
    pub status: SpaceStatus<S>,
}

#[derive(Clone, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SpaceStatus<S> {
    Empty,
    NonEmpty(OmegaPoint<S>),
    /// (l, m) = (3, 1): the space coincides with O(3).
    SpecialO3,
    /// Parameter range the general arguments do not settle.
    Unclassified,
}

impl<S> SpaceStatus<S> {
    pub fn name(&self) -> &'static str {
        match self {
            SpaceStatus::Empty => "empty",
            SpaceStatus::NonEmpty(_) => "nonempty",
            SpaceStatus::SpecialO3 => "special-o3",
            SpaceStatus::Unclassified => "unclassified",
        }
    }
}

/// Case analysis: empty for l−m−1 ≤ 0; at l−m−1 = 1 the three sporadic spaces
/// (O(3) for (3,1), empty for (4,2) and (8,6)); nonempty with a constructed
/// witness once l−m−1 ≥ m; unclassified in between.
pub fn dimension_and_emptiness<S: Scalar>(sys: &CliffordSystem<S>) -> SpaceClassification<S> {
    let l = sys.l as i64;
    let m = sys.m as i64;
    let s = l - m - 1;
    let dim = 3 * s;
    let status = if s <= 0 {
        SpaceStatus::Empty
    } else if (sys.l, sys.m) == (3, 1) {
        SpaceStatus::SpecialO3
    } else if (sys.l, sys.m) == (4, 2) || (sys.l, sys.m) == (8, 6) {
        SpaceStatus::Empty
    } else if s >= m {
        let w = witness(sys).expect("witness construction failed in the nonempty range");
        SpaceStatus::NonEmpty(w)
    } else {
        SpaceStatus::Unclassified
    };
    SpaceClassification { dim, status }
}

/// Deterministic witness: a = e_0; b = the first standard basis vector
/// orthogonal to {a, E_i a}; c = the first one orthogonal to the 2m-span.
/// Works for every built-in system because the generators permute signed
/// basis vectors, so no normalization is ever needed.
pub fn witness<S: Scalar>(sys: &CliffordSystem<S>) -> Option<OmegaPoint<S>> {
    let l = sys.l;
    let basis = |j: usize| -> Vec<S> {
        let mut v = vec![S::zero(); l];
        v[j] = S::one();
        v
    };
    let a = basis(0);
    let mut span: Vec<Vec<S>> = vec![a.clone()];
    for i in 1..sys.m {
        span.push(sys.apply(i, &a));
    }
    let orthogonal_to = |span: &[Vec<S>], v: &[S]| span.iter().all(|u| dot(u, v).is_zero());
    let b = (0..l).map(basis).find(|v| orthogonal_to(&span, v))?;
    span.push(b.clone());
    for i in 1..sys.m {
        span.push(sys.apply(i, &b));
    }
    let c = (0..l).map(basis).find(|v| orthogonal_to(&span, v))?;
    let p = OmegaPoint { a, b, c };
    debug_assert!(constraints(sys, &p)
        .map(|c| c.all_within(0.0))
        .unwrap_or(false));
    Some(p)
}

/// Seeded sampler; deterministic for a fixed seed. Requires a nonempty
/// classification, except for the l = 8, m = 4 indefinite space, which gets
/// the dedicated circle construction.
pub fn sample(
    sys: &CliffordSystem<f64>,
    seed: u64,
    tol: Tol,
) -> Result<OmegaPoint<f64>, OmegaError> {
    if sys.m == 4 && sys.l == 8 {
        if let Family::Indefinite(q) = sys.family {
            if q == 1 {
                return sample_omega84(sys, seed, tol);
            }
        }
    }
    let l = sys.l;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _attempt in 0..100 {
        let a = match random_unit(&mut rng, l) {
            Some(v) => v,
            None => continue,
        };
        // b: random vector projected off the orthonormal set {a, E_i a}.
        let mut span = vec![a.clone()];
        for i in 1..sys.m {
            span.push(sys.apply(i, &a));
        }
        let Some(b) = project_unit(&mut rng, &span) else {
            continue;
        };
        // c: any unit kernel vector of the 2m-row span matrix.
        for i in 1..sys.m {
            span.push(sys.apply(i, &b));
        }
        span.push(b.clone());
        let kernel = Mat::from_rows(span.clone()).kernel_basis(tol);
        if kernel.is_empty() {
            continue;
        }
        let mix: Vec<f64> = (0..kernel.len())
            .map(|_| rng.gen_range(-1.0..1.0))
            .collect();
        let mut c = vec![0.0; l];
        for (w, v) in mix.iter().zip(&kernel) {
            for (ci, vi) in c.iter_mut().zip(v) {
                *ci += w * vi;
            }
        }
        let norm = norm2(&c).sqrt();
        if norm < 1e-6 {
            continue;
        }
        let c: Vec<f64> = c.into_iter().map(|x| x / norm).collect();
        let p = OmegaPoint { a, b, c };
        if is_member(sys, &p, tol)? {
            return Ok(p);
        }
    }
    Err(OmegaError::SamplingFailed)
}

/// Circle-bundle sampler for the l = 8, m = 4 indefinite space: both halves of
/// a have modulus 1/√2, b = −ξ·a for a unit imaginary quaternion ξ, and c spans
/// the 2-dimensional orthogonal complement of the degenerate 6-span.
fn sample_omega84(
    sys: &CliffordSystem<f64>,
    seed: u64,
    tol: Tol,
) -> Result<OmegaPoint<f64>, OmegaError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let h = std::f64::consts::FRAC_1_SQRT_2;
    for _attempt in 0..100 {
        let (Some(u1), Some(u2), Some(im)) = (
            random_unit(&mut rng, 4),
            random_unit(&mut rng, 4),
            random_unit(&mut rng, 3),
        ) else {
            continue;
        };
        let a: Vec<f64> = u1.iter().chain(&u2).map(|x| x * h).collect();
        let xi = quat(&[0.0, im[0], im[1], im[2]]);
        let b_q1 = -(&xi * &quat(&a[0..4]));
        let b_q2 = -(&xi * &quat(&a[4..8]));
        let b: Vec<f64> = b_q1.coeffs()[..4]
            .iter()
            .chain(&b_q2.coeffs()[..4])
            .cloned()
            .collect();
        let mut span = vec![a.clone(), b.clone()];
        for i in 1..4 {
            span.push(sys.apply(i, &a));
            span.push(sys.apply(i, &b));
        }
        let Some(c) = project_unit(&mut rng, &span) else {
            continue;
        };
        let p = OmegaPoint { a, b, c };
        if is_member(sys, &p, tol)? {
            return Ok(p);
        }
    }
    Err(OmegaError::SamplingFailed)
}

fn random_unit(rng: &mut ChaCha8Rng, dim: usize) -> Option<Vec<f64>> {
    // Box-Muller pairs give a rotation-invariant draw.
    let mut v = Vec::with_capacity(dim);
    while v.len() < dim {
        let u1: f64 = rng.gen_range(f64::EPSILON..1.0);
        let u2: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
        let r = (-2.0 * u1.ln()).sqrt();
        v.push(r * u2.cos());
        if v.len() < dim {
            v.push(r * u2.sin());
        }
    }
    let norm = norm2(&v).sqrt();
    (norm > 1e-6).then(|| v.into_iter().map(|x| x / norm).collect())
}

/// Random unit vector orthogonal to the given (not necessarily orthonormal)
/// span, via one Gram-Schmidt sweep against an orthonormalized copy.
fn project_unit(rng: &mut ChaCha8Rng, span: &[Vec<f64>]) -> Option<Vec<f64>> {
    let dim = span[0].len();
    let mut ortho: Vec<Vec<f64>> = Vec::new();
    for v in span {
        let mut w = v.clone();
        for u in &ortho {
            let c = dot(&w, u);
            w = sub_vec(&w, &scale_vec(u, &c));
        }
        let norm = norm2(&w).sqrt();
        if norm > 1e-9 {
            w = w.into_iter().map(|x| x / norm).collect();
            ortho.push(w);
        }
    }
    for _ in 0..100 {
        let mut v = random_unit(rng, dim)?;
        for u in &ortho {
            let c = dot(&v, u);
            v = sub_vec(&v, &scale_vec(u, &c));
        }
        let norm = norm2(&v).sqrt();
        if norm > 1e-6 {
            return Some(v.into_iter().map(|x| x / norm).collect());
        }
    }
    None
}

fn quat<S: Scalar>(v: &[S]) -> Octonion<S> {
    assert!(v.len() == 4);
    let mut c: [S; 8] = std::array::from_fn(|_| S::zero());
    for (i, x) in v.iter().enumerate() {
        c[i] = x.clone();
    }
    Octonion::new(c)
}

/// Which norm convention a pair check uses: W_{l,m} (unit) or the focal
/// variety M_+ (norms 1/2). Scaling by √2 maps one onto the other.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairNorm {
    Unit,
    Half,
}

pub fn w_member<S: Scalar>(
    sys: &CliffordSystem<S>,
    a: &[S],
    b: &[S],
    norm: PairNorm,
    tol: Tol,
) -> bool {
    if a.len() != sys.l || b.len() != sys.l {
        return false;
    }
    let target = match norm {
        PairNorm::Unit => S::one(),
        PairNorm::Half => S::from_int(2).recip().unwrap(),
    };
    if !(norm2(a) - &target).within(tol.residual) || !(norm2(b) - &target).within(tol.residual) {
        return false;
    }
    if !dot(a, b).within(tol.residual) {
        return false;
    }
    (1..sys.m).all(|i| dot(a, &sys.apply(i, b)).within(tol.residual))
}

/// Certificate that a pair is degenerate: unit λ, μ, c with
/// a = (Σ λ_i E_i)c and b = (Σ μ_i E_i)c.
#[derive(Clone, Serialize)]
pub struct DegeneracyCertificate<S> {
    pub lambda: Vec<S>,
    pub mu: Vec<S>,
    pub c: Vec<S>,
}

#[derive(Clone, Serialize)]
pub struct DegeneracyReport<S> {
    pub det: S,
    pub certificate: Option<DegeneracyCertificate<S>>,
}

/// Applies Σ coeffs_i · E_i to v.
pub fn clifford_combination<S: Scalar>(sys: &CliffordSystem<S>, coeffs: &[S], v: &[S]) -> Vec<S> {
    assert_eq!(coeffs.len(), sys.m - 1);
    let mut acc = vec![S::zero(); sys.l];
    for (i, w) in coeffs.iter().enumerate() {
        acc = add_vec(&acc, &scale_vec(&sys.apply(i + 1, v), w));
    }
    acc
}

/// Determinant of the 2m×2m Gram matrix of {a, E_i a, b, E_i b}; when it
/// vanishes, reconstructs the lemma certificate (λ, μ, c) and verifies it.
pub fn degeneracy<S: Scalar + MatScalar>(
    sys: &CliffordSystem<S>,
    a: &[S],
    b: &[S],
    tol: Tol,
) -> Result<DegeneracyReport<S>, OmegaError> {
    if !w_member(sys, a, b, PairNorm::Unit, tol) {
        return Err(OmegaError::NotInW);
    }
    let mut vecs: Vec<Vec<S>> = vec![a.to_vec()];
    for i in 1..sys.m {
        vecs.push(sys.apply(i, a));
    }
    vecs.push(b.to_vec());
    for i in 1..sys.m {
        vecs.push(sys.apply(i, b));
    }
    let gram = Mat::from_fn(vecs.len(), vecs.len(), |i, j| dot(&vecs[i], &vecs[j]));
    let det = gram.det()?;
    if !det.within(tol.residual) || sys.m == 1 {
        return Ok(DegeneracyReport {
            det,
            certificate: None,
        });
    }
    // Singular Gram: the E-vectors are dependent. Solve Σξ_i E_i a + Ση_i E_i b = 0.
    let cols: Vec<Vec<S>> = vecs[1..sys.m]
        .iter()
        .chain(&vecs[sys.m + 1..])
        .cloned()
        .collect();
    let system = Mat::from_fn(sys.l, 2 * (sys.m - 1), |r, c| cols[c][r].clone());
    let kernel = system.kernel_basis(tol);
    let Some(v) = kernel.into_iter().next() else {
        // Points near (but not on) the degenerate locus can push a float
        // determinant under the residual while the rank stays full. Exact
        // zeros always produce a kernel vector.
        return if S::EXACT {
            Err(OmegaError::IdentityFailed(
                "singular Gram without dependent E-vectors".into(),
            ))
        } else {
            Ok(DegeneracyReport {
                det,
                certificate: None,
            })
        };
    };
    let xi = &v[..sys.m - 1];
    let eta = &v[sys.m - 1..];
    let nxi = norm2(xi);
    let neta = norm2(eta);
    if !(nxi.clone() - &neta).within(tol.residual) {
        return Err(OmegaError::IdentityFailed(
            "dependency coefficients have unequal norms".into(),
        ));
    }
    let s = nxi
        .sqrt()
        .ok_or_else(|| OmegaError::Unrepresentable(format!("√({nxi}) for |ξ|")))?;
    let inv = s
        .recip()
        .ok_or(OmegaError::IdentityFailed("zero dependency".into()))?;
    let lambda: Vec<S> = xi.iter().map(|x| -(x.clone() * &inv)).collect();
    let mu: Vec<S> = eta.iter().map(|x| x.clone() * &inv).collect();
    let c = scale_vec(&clifford_combination(sys, xi, a), &inv);
    // The lemma's reconstruction must hold before we hand the certificate out.
    let ra = clifford_combination(sys, &lambda, &c);
    let rb = clifford_combination(sys, &mu, &c);
    let ok = sub_vec(&ra, a).iter().all(|x| x.within(tol.residual))
        && sub_vec(&rb, b).iter().all(|x| x.within(tol.residual))
        && (norm2(&c) - &S::one()).within(tol.residual);
    if !ok {
        return Err(OmegaError::IdentityFailed(
            "certificate reconstruction failed".into(),
        ));
    }
    Ok(DegeneracyReport {
        det,
        certificate: Some(DegeneracyCertificate { lambda, mu, c }),
    })
}

/// Pointwise data of the circle-bundle analysis on the l = 8, m = 4
/// indefinite space: the quaternion halves of a and ξ = 2·a_1·conj(b_1),
/// which is unit, imaginary, and satisfies a = ξ·b.
#[derive(Clone, Serialize)]
pub struct Omega84Analysis<S> {
    pub a1: [S; 4],
    pub a2: [S; 4],
    pub xi: [S; 4],
}

pub fn omega84_analysis<S: Scalar>(
    sys: &CliffordSystem<S>,
    p: &OmegaPoint<S>,
    tol: Tol,
) -> Result<Omega84Analysis<S>, OmegaError> {
    if sys.m != 4 || sys.l != 8 || !matches!(sys.family, Family::Indefinite(1)) {
        return Err(OmegaError::BadDimension(
            "analysis applies to the l=8, m=4 indefinite system".into(),
        ));
    }
    if !is_member(sys, p, tol)? {
        return Err(OmegaError::NotAMember);
    }
    let halves = |v: &[S]| (quat(&v[0..4]), quat(&v[4..8]));
    let (a1, a2) = halves(&p.a);
    let (b1, b2) = halves(&p.b);
    let (c1, c2) = halves(&p.c);
    let half = S::from_int(2).recip().unwrap();
    for (name, q) in [
        ("a1", &a1),
        ("a2", &a2),
        ("b1", &b1),
        ("b2", &b2),
        ("c1", &c1),
        ("c2", &c2),
    ] {
        if !(q.norm2() - &half).within(tol.residual) {
            return Err(OmegaError::IdentityFailed(format!("|{name}|² ≠ 1/2")));
        }
    }
    let xi = (&a1 * &b1.conj()).scale(&S::from_int(2));
    if !xi.re().within(tol.residual) {
        return Err(OmegaError::IdentityFailed("Re ξ ≠ 0".into()));
    }
    if !(xi.norm2() - &S::one()).within(tol.residual) {
        return Err(OmegaError::IdentityFailed("|ξ| ≠ 1".into()));
    }
    for (name, (ai, bi)) in [("a1", (&a1, &b1)), ("a2", (&a2, &b2))] {
        let diff = ai.clone() - (&xi * bi);
        if !diff.within(tol.residual) {
            return Err(OmegaError::IdentityFailed(format!("{name} ≠ ξ·b half")));
        }
    }
    let take4 = |o: &Octonion<S>| -> [S; 4] { std::array::from_fn(|i| o.coeff(i).clone()) };
    Ok(Omega84Analysis {
        a1: take4(&a1),
        a2: take4(&a2),
        xi: take4(&xi),
    })
}

/// The three named entries of Φ_ab on the l=8 indefinite space:
/// x = ⟨E_1 a, E_2 b⟩, y = ⟨E_1 a, E_3 b⟩, z = ⟨E_2 a, E_3 b⟩.
pub fn omega84_xyz<S: Scalar>(sys: &CliffordSystem<S>, p: &OmegaPoint<S>) -> (S, S, S) {
    let phi = phi_matrix(sys, &p.a, &p.b);
    (
        phi[(0, 1)].clone(),
        phi[(0, 2)].clone(),
        phi[(1, 2)].clone(),
    )
}

// ---------------------------------------------------------------------------
// Deformation curves
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CurveKind {
    /// Deforms a W pair whose first-block norm x lies in (0, 1).
    PairInterior,
    /// Deforms a W pair concentrated in the first block (x = 1).
    PairBoundary,
    /// Degenerate Ω point; moves (a, b) and replaces c by a c̃ supported away
    /// from the first block.
    PathStep,
}

#[derive(Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CurveBase {
    // Triple first: an (a, b, c) file must not fall into the pair variant.
    Triple(OmegaPoint<f64>),
    Pair { a: Vec<f64>, b: Vec<f64> },
}

#[derive(Clone, Serialize)]
#[serde(untagged)]
pub enum CurvePoint {
    Pair { a: Vec<f64>, b: Vec<f64> },
    Triple(OmegaPoint<f64>),
}

/// Evaluates the displayed deformation curves at parameter t. Values involve
/// nested square roots, so evaluation is numeric; membership along the curve
/// is checked by the caller against the usual tolerances.
pub fn deformation_curve(
    sys: &CliffordSystem<f64>,
    kind: CurveKind,
    base: &CurveBase,
    t: f64,
) -> Result<CurvePoint, OmegaError> {
    let d = sys.l / sys.n;
    let (ct, st) = (t.cos(), t.sin());
    match (kind, base) {
        (CurveKind::PairInterior, CurveBase::Pair { a, b }) => {
            check_pair_len(sys, a, b)?;
            let x2 = norm2(&a[..d]);
            let bx2 = norm2(&b[..d]);
            if (x2 - bx2).abs() > 1e-6 {
                return Err(OmegaError::BadBasePoint("|a_1| ≠ |b_1|".into()));
            }
            if !(1e-9..=1.0 - 1e-9).contains(&x2) {
                return Err(OmegaError::BadBasePoint("needs x ∈ (0, 1)".into()));
            }
            let na = (ct * ct + st * st * x2).sqrt();
            let nb = (ct * ct + st * st * (1.0 - x2)).sqrt();
            let mut at = a.clone();
            let mut bt = b.clone();
            for j in 0..sys.l {
                if j >= d {
                    at[j] *= ct;
                } else {
                    bt[j] *= ct;
                }
                at[j] /= na;
                bt[j] /= nb;
            }
            Ok(CurvePoint::Pair { a: at, b: bt })
        }
        (CurveKind::PairBoundary, CurveBase::Pair { a, b }) => {
            check_pair_len(sys, a, b)?;
            if sys.n < 2 {
                return Err(OmegaError::BadBasePoint("needs n ≥ 2".into()));
            }
            let x2 = norm2(&a[..d]);
            if (x2 - 1.0).abs() > 1e-9 || (norm2(&b[..d]) - 1.0).abs() > 1e-9 {
                return Err(OmegaError::BadBasePoint("needs |a_1| = |b_1| = 1".into()));
            }
            let na = (ct * ct + ct * ct * st * st).sqrt();
            let nb = (ct.powi(4) + st * st).sqrt();
            let mut at = vec![0.0; sys.l];
            let mut bt = vec![0.0; sys.l];
            for j in 0..d {
                at[j] = ct * a[j] / na;
                at[d + j] = ct * st * a[j] / na;
                bt[j] = ct * ct * b[j] / nb;
                bt[d + j] = st * b[j] / nb;
            }
            Ok(CurvePoint::Pair { a: at, b: bt })
        }
        (CurveKind::PathStep, CurveBase::Triple(p)) => {
            if p.l() != sys.l {
                return Err(OmegaError::DimensionMismatch { expected: sys.l });
            }
            if sys.n < 3 {
                return Err(OmegaError::BadBasePoint("needs n ≥ 3".into()));
            }
            let x2 = norm2(&p.a[..d]);
            if (x2 - norm2(&p.b[..d])).abs() > 1e-6 {
                return Err(OmegaError::BadBasePoint("|a_1| ≠ |b_1|".into()));
            }
            if !(1e-9..=1.0 - 1e-9).contains(&x2) {
                return Err(OmegaError::BadBasePoint("needs x ∈ (0, 1)".into()));
            }
            // ã, b̃ zero out the first block; c̃ lives in their orthogonal
            // complement with zero first block, so c̃ works for every t.
            let mut a_t = p.a.clone();
            let mut b_t = p.b.clone();
            for j in 0..d {
                a_t[j] = 0.0;
                b_t[j] = 0.0;
            }
            let mut span = vec![a_t.clone(), b_t.clone()];
            for i in 1..sys.m {
                span.push(sys.apply(i, &a_t));
                span.push(sys.apply(i, &b_t));
            }
            let reduced = Mat::from_fn(span.len(), sys.l - d, |r, c| span[r][d + c]);
            let kernel = reduced.kernel_basis(Tol::default());
            let kv = kernel
                .into_iter()
                .next()
                .ok_or(OmegaError::BadBasePoint("no room for c̃".into()))?;
            let mut c_tilde = vec![0.0; sys.l];
            let norm = norm2(&kv).sqrt();
            for (j, v) in kv.iter().enumerate() {
                c_tilde[d + j] = v / norm;
            }
            let na = (ct * ct + st * st * x2).sqrt();
            let nb = (ct * ct + st * st * (1.0 - x2)).sqrt();
            let mut at = p.a.clone();
            let mut bt = p.b.clone();
            for j in 0..sys.l {
                if j >= d {
                    at[j] *= ct;
                } else {
                    bt[j] *= ct;
                }
                at[j] /= na;
                bt[j] /= nb;
            }
            Ok(CurvePoint::Triple(OmegaPoint {
                a: at,
                b: bt,
                c: c_tilde,
            }))
        }
        _ => Err(OmegaError::BadBasePoint(
            "curve kind does not match the base point shape".into(),
        )),
    }
}

fn check_pair_len(sys: &CliffordSystem<f64>, a: &[f64], b: &[f64]) -> Result<(), OmegaError> {
    if a.len() != sys.l || b.len() != sys.l {
        Err(OmegaError::DimensionMismatch { expected: sys.l })
    } else {
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// The projection π(a, b, c) = c on Ω_{8n,8} ≅ V_3(O^n) and its lift
// ---------------------------------------------------------------------------

/// Converts a 3×n frame into the corresponding (a, b, c) triple in R^{8n}.
pub fn frame_to_point<S: Scalar>(frame: &OctFrame<S>) -> OmegaPoint<S> {
    assert_eq!(frame.k, 3, "the triple identification needs exactly 3 rows");
    OmegaPoint {
        a: to_reals(frame.row(0)),
        b: to_reals(frame.row(1)),
        c: to_reals(frame.row(2)),
    }
}

/// Inverse of [`frame_to_point`]; l must be divisible by 8.
pub fn point_to_frame<S: Scalar>(p: &OmegaPoint<S>) -> Result<OctFrame<S>, OmegaError> {
    if p.l() % 8 != 0 {
        return Err(OmegaError::BadDimension("l must be a multiple of 8".into()));
    }
    Ok(OctFrame::from_rows(vec![
        from_reals(&p.a),
        from_reals(&p.b),
        from_reals(&p.c),
    ]))
}

/// π(a, b, c) = c, gated on membership.
pub fn pi_project<S: Scalar>(
    sys: &CliffordSystem<S>,
    p: &OmegaPoint<S>,
    tol: Tol,
) -> Result<Vec<S>, OmegaError> {
    if !is_member(sys, p, tol)? {
        return Err(OmegaError::NotAMember);
    }
    Ok(p.c.clone())
}

/// Lifts a unit vector c ∈ O^n (n ≥ 3) to a frame (a, b, c) ∈ V_3(O^n), by the
/// case split on cos²θ = |c_1|² + … + |c_{n−1}|².
pub fn pi_lift<S: Scalar + MatScalar>(
    c: &[Octonion<S>],
    tol: Tol,
) -> Result<OctFrame<S>, OmegaError> {
    let n = c.len();
    if n < 3 {
        return Err(OmegaError::BadDimension("lift needs n ≥ 3".into()));
    }
    let total: S = c.iter().map(Octonion::norm2).sum();
    if !(total - &S::one()).within(tol.residual) {
        return Err(OmegaError::BadBasePoint("|c| must be 1".into()));
    }
    let cos2: S = c[..n - 1].iter().map(Octonion::norm2).sum();
    let sin2 = c[n - 1].norm2();
    let zero_row = |len: usize| vec![Octonion::<S>::zero(); len];
    let basis_row = |len: usize, at: usize| {
        let mut r = zero_row(len);
        r[at] = Octonion::one();
        r
    };
    let rows: Vec<Vec<Octonion<S>>> = if cos2.within(tol.residual) {
        // c = (0, …, 0, c_n): any 2-frame of the first n−1 slots works.
        vec![basis_row(n, 0), basis_row(n, 1), c.to_vec()]
    } else if sin2.within(tol.residual) {
        // c = (c_1, …, c_{n−1}, 0): one inner lift plus the freed last slot.
        let head = c[..n - 1].to_vec();
        let mut a = inner_v2_lift(&head, tol)?;
        a.push(Octonion::zero());
        vec![a, basis_row(n, n - 1), c.to_vec()]
    } else {
        let cos = cos2
            .sqrt()
            .ok_or_else(|| OmegaError::Unrepresentable(format!("cos θ = √({cos2})")))?;
        let sin = sin2
            .sqrt()
            .ok_or_else(|| OmegaError::Unrepresentable(format!("sin θ = √({sin2})")))?;
        let inv_cos = cos.recip().expect("cos θ ≠ 0");
        let inv_sin = sin.recip().expect("sin θ ≠ 0");
        let head_unit: Vec<Octonion<S>> = c[..n - 1].iter().map(|o| o.scale(&inv_cos)).collect();
        let mut a = inner_v2_lift(&head_unit, tol)?;
        a.push(Octonion::zero());
        let lambda = -(sin.clone() * &inv_cos);
        let mu = cos.clone() * &inv_sin;
        let mut b: Vec<Octonion<S>> = c[..n - 1].iter().map(|o| o.scale(&lambda)).collect();
        b.push(c[n - 1].scale(&mu));
        vec![a, b, c.to_vec()]
    };
    let frame = OctFrame::from_rows(rows);
    if !frame.is_frame(tol) {
        return Err(OmegaError::IdentityFailed("lift is not a frame".into()));
    }
    Ok(frame)
}

/// Unit vector octonion-orthogonal to a given unit vector in O^k: the first
/// kernel vector of the 8×8k real orthogonality system, normalized.
fn inner_v2_lift<S: Scalar + MatScalar>(
    c: &[Octonion<S>],
    tol: Tol,
) -> Result<Vec<Octonion<S>>, OmegaError> {
    let rows: Vec<Vec<S>> = (0..8)
        .map(|t| to_reals(&left_mul_vec(&Octonion::basis(t), c)))
        .collect();
    let kernel = Mat::from_rows(rows).kernel_basis(tol);
    let v = kernel
        .into_iter()
        .next()
        .ok_or(OmegaError::BadDimension("no orthogonal direction".into()))?;
    let n2 = norm2(&v);
    let norm = n2
        .sqrt()
        .ok_or_else(|| OmegaError::Unrepresentable(format!("√({n2}) in the inner lift")))?;
    let inv = norm.recip().expect("nonzero kernel vector");
    Ok(from_reals(&scale_vec(&v, &inv)))
}

/// Rank of dπ restricted to the tangent space at a member: the c-component
/// projection of ker(dF). Equals 8n−1 exactly at submersive points.
pub fn pi_differential_rank<S: Scalar + MatScalar>(
    sys: &CliffordSystem<S>,
    p: &OmegaPoint<S>,
    tol: Tol,
) -> Result<usize, OmegaError> {
    if !is_member(sys, p, tol)? {
        return Err(OmegaError::NotAMember);
    }
    let jac = jacobian(sys, p)?;
    let kernel = jac.kernel_basis(tol);
    let l = sys.l;
    let image = Mat::from_fn(kernel.len(), l, |r, c| kernel[r][2 * l + c].clone());
    Ok(image.rank(tol))
}

/// Random member of W_{l,m}: a unit vector and a unit vector orthogonal to its
/// Clifford orbit. Deterministic per seed.
pub fn sample_w(sys: &CliffordSystem<f64>, seed: u64) -> Result<(Vec<f64>, Vec<f64>), OmegaError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..100 {
        let Some(a) = random_unit(&mut rng, sys.l) else {
            continue;
        };
        let mut span = vec![a.clone()];
        for i in 1..sys.m {
            span.push(sys.apply(i, &a));
        }
        if let Some(b) = project_unit(&mut rng, &span) {
            if w_member(sys, &a, &b, PairNorm::Unit, Tol::default()) {
                return Ok((a, b));
            }
        }
    }
    Err(OmegaError::SamplingFailed)
}
