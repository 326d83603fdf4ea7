//! Clifford systems: skew generators E_1, …, E_{m−1} on R^l with
//! E_iE_j + E_jE_i = −2δ_ij·Id, their symmetric counterparts P_0, …, P_m on R^{2l},
//! and the degree-4 polynomial of the associated isoparametric family.
//!
//! Generators are assembled blockwise from left-multiplication matrices of the
//! division algebras C, H, O; for m ≡ 0 (mod 4) the definite and indefinite
//! families differ by the sign pattern of the irreducible blocks.

use crate::linalg::{dot, Mat};
use crate::octonion::Octonion;
use crate::scalar::{Scalar, Tol};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CliffordError {
    #[error("no built-in construction for m = {0} (supported: 1..=8)")]
    UnsupportedM(usize),
    #[error("family {family} is inconsistent with m = {m}")]
    BadFamily { m: usize, family: Family },
    #[error("bad dimension: {0}")]
    BadDimension(String),
}

/// Definite vs indefinite representation families; meaningful only when
/// m ≡ 0 (mod 4). `Indefinite(q)` negates the generators on the last n−q blocks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Definite,
    Indefinite(usize),
    #[serde(rename = "none")]
    NotApplicable,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Definite => write!(f, "definite"),
            Family::Indefinite(q) => write!(f, "indefinite:{q}"),
            Family::NotApplicable => write!(f, "none"),
        }
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim().to_lowercase();
        match t.as_str() {
            "definite" => Ok(Family::Definite),
            "none" | "n/a" => Ok(Family::NotApplicable),
            _ => {
                if let Some(q) = t
                    .strip_prefix("indefinite:")
                    .or(t.strip_prefix("indefinite("))
                {
                    let q = q.trim_end_matches(')');
                    q.parse()
                        .map(Family::Indefinite)
                        .map_err(|_| format!("bad indefinite parameter in `{s}`"))
                } else {
                    Err(format!(
                        "unknown family `{s}` (expected definite | indefinite:q | none)"
                    ))
                }
            }
        }
    }
}

/// Dimension δ(m) of the irreducible Clifford module, with δ(m+8) = 16·δ(m).
pub fn delta(m: usize) -> u128 {
    assert!(m >= 1, "delta requires m >= 1");
    const TABLE: [u128; 8] = [1, 2, 4, 4, 8, 8, 8, 8];
    let mut v = TABLE[(m - 1) % 8];
    for _ in 0..(m - 1) / 8 {
        v = v.checked_mul(16).expect("delta overflow");
    }
    v
}

/// A represented Clifford system: m−1 skew generators on R^l, l = n·δ(m).
#[derive(Clone, Serialize)]
pub struct CliffordSystem<S> {
    pub m: usize,
    pub n: usize,
    pub l: usize,
    pub family: Family,
    #[serde(rename = "E")]
    gens: Vec<Mat<S>>,
}

/// Compact constructor descriptor, enough to rebuild any built-in system.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct SystemDescriptor {
    pub m: usize,
    pub n: usize,
    pub family: Family,
}

/// The irreducible generator blocks f_1, …, f_{m−1} of size δ(m), realized as
/// left multiplications inside C, H or O.
fn irreducible_blocks<S: Scalar>(m: usize) -> Vec<Mat<S>> {
    let d = delta(m) as usize;
    (1..m)
        .map(|i| {
            let full = Octonion::<S>::basis(i).left_mult_matrix();
            full.submatrix(0, 0, d, d)
        })
        .collect()
}

/// Builds the standard system for 1 ≤ m ≤ 8 on R^{n·δ(m)}.
pub fn build_system<S: Scalar>(
    m: usize,
    n: usize,
    family: Family,
) -> Result<CliffordSystem<S>, CliffordError> {
    if m == 0 || m > 8 {
        return Err(CliffordError::UnsupportedM(m));
    }
    if n == 0 {
        return Err(CliffordError::BadDimension("n must be >= 1".into()));
    }
    let split = match (m % 4 == 0, family) {
        (false, Family::NotApplicable) => n,
        (true, Family::Definite) => n,
        (true, Family::Indefinite(q)) if q <= n => q,
        _ => return Err(CliffordError::BadFamily { m, family }),
    };
    let d = delta(m) as usize;
    let l = n * d;
    let blocks = irreducible_blocks::<S>(m);
    let gens = blocks
        .iter()
        .map(|f| {
            let mut e = Mat::zeros(l, l);
            let neg = f.neg();
            for blk in 0..n {
                e.paste(blk * d, blk * d, if blk < split { f } else { &neg });
            }
            e
        })
        .collect();
    Ok(CliffordSystem {
        m,
        n,
        l,
        family,
        gens,
    })
}

impl<S: Scalar> CliffordSystem<S> {
    pub fn generators(&self) -> &[Mat<S>] {
        &self.gens
    }

    pub fn generator(&self, i: usize) -> &Mat<S> {
        &self.gens[i]
    }

    /// E_i acting on a vector; i is 1-based like the subscript.
    pub fn apply(&self, i: usize, v: &[S]) -> Vec<S> {
        assert!(i >= 1 && i < self.m, "generator index out of range");
        self.gens[i - 1].mul_vec(v)
    }

    pub fn descriptor(&self) -> SystemDescriptor {
        SystemDescriptor {
            m: self.m,
            n: self.n,
            family: self.family,
        }
    }

    /// Replaces one generator; meant for building broken systems in tests.
    pub fn with_generator(mut self, i: usize, g: Mat<S>) -> Self {
        self.gens[i - 1] = g;
        self
    }

    pub fn to_f64(&self) -> CliffordSystem<f64> {
        CliffordSystem {
            m: self.m,
            n: self.n,
            l: self.l,
            family: self.family,
            gens: self.gens.iter().map(|g| g.map(S::to_f64)).collect(),
        }
    }
}

/// Checks skewness and the anticommutation relations E_iE_j + E_jE_i = −2δ_ij·Id.
pub fn verify_clifford<S: Scalar>(sys: &CliffordSystem<S>, tol: Tol) -> bool {
    let l = sys.l;
    if sys.gens.len() + 1 != sys.m {
        return false;
    }
    for e in &sys.gens {
        if e.rows() != l || e.cols() != l {
            return false;
        }
        let skew_defect = e.transpose().add(e);
        if !skew_defect.entries().iter().all(|x| x.within(tol.residual)) {
            return false;
        }
    }
    let id = Mat::<S>::identity(l);
    for i in 0..sys.gens.len() {
        for j in i..sys.gens.len() {
            let anti = sys.gens[i]
                .matmul(&sys.gens[j])
                .add(&sys.gens[j].matmul(&sys.gens[i]));
            let expected = if i == j {
                id.scale(&S::from_int(-2))
            } else {
                Mat::zeros(l, l)
            };
            let defect = anti.sub(&expected);
            if !defect.entries().iter().all(|x| x.within(tol.residual)) {
                return false;
            }
        }
    }
    true
}

/// The symmetric system P_0, …, P_m on R^{2l} associated to a Clifford system.
#[derive(Clone, Serialize)]
pub struct SymmetricSystem<S> {
    pub m: usize,
    pub dim: usize,
    mats: Vec<Mat<S>>,
}

impl<S: Scalar> SymmetricSystem<S> {
    pub fn matrices(&self) -> &[Mat<S>] {
        &self.mats
    }
}

/// P_0 = diag(I, −I), P_1 = antidiag(I, I), P_{i+1} = [[0, E_i], [−E_i, 0]].
pub fn symmetric_system<S: Scalar>(sys: &CliffordSystem<S>) -> SymmetricSystem<S> {
    let l = sys.l;
    let id = Mat::<S>::identity(l);
    let zero = Mat::<S>::zeros(l, l);
    let mut mats = Vec::with_capacity(sys.m + 1);
    mats.push(Mat::from_blocks(&[
        vec![&id, &zero],
        vec![&zero, &id.neg()],
    ]));
    mats.push(Mat::from_blocks(&[vec![&zero, &id], vec![&id, &zero]]));
    for e in &sys.gens {
        let neg = e.neg();
        mats.push(Mat::from_blocks(&[vec![&zero, e], vec![&neg, &zero]]));
    }
    SymmetricSystem {
        m: sys.m,
        dim: 2 * l,
        mats,
    }
}

/// Checks symmetry and P_iP_j + P_jP_i = 2δ_ij·Id.
pub fn verify_symmetric<S: Scalar>(sys: &SymmetricSystem<S>, tol: Tol) -> bool {
    let d = sys.dim;
    let id = Mat::<S>::identity(d);
    for p in &sys.mats {
        let defect = p.transpose().sub(p);
        if !defect.entries().iter().all(|x| x.within(tol.residual)) {
            return false;
        }
    }
    for i in 0..sys.mats.len() {
        for j in i..sys.mats.len() {
            let anti = sys.mats[i]
                .matmul(&sys.mats[j])
                .add(&sys.mats[j].matmul(&sys.mats[i]));
            let expected = if i == j {
                id.scale(&S::from_int(2))
            } else {
                Mat::zeros(d, d)
            };
            let defect = anti.sub(&expected);
            if !defect.entries().iter().all(|x| x.within(tol.residual)) {
                return false;
            }
        }
    }
    true
}

/// Trace of P_0·P_1⋯P_m; ±2l exactly for the definite family when m ≡ 0 (mod 4),
/// strictly smaller in absolute value for the proper indefinite ones.
pub fn product_trace<S: Scalar>(sym: &SymmetricSystem<S>) -> S {
    let mut prod = Mat::<S>::identity(sym.dim);
    for p in &sym.mats {
        prod = prod.matmul(p);
    }
    prod.trace()
}

/// The degree-4 polynomial P(x) = |x|⁴ − 2·Σ⟨P_i x, x⟩² on R^{2l}.
pub fn fkm_polynomial<S: Scalar>(sys: &CliffordSystem<S>, x: &[S]) -> S {
    let sym = symmetric_system(sys);
    assert_eq!(x.len(), sym.dim, "point must live in R^(2l)");
    let n2 = dot(x, x);
    let mut acc = n2.clone() * &n2;
    for p in &sym.mats {
        let px = p.mul_vec(x);
        let form = dot(&px, x);
        acc = acc - (form.clone() * &form) * &S::from_int(2);
    }
    acc
}

/// Membership in the focal variety M_+ (unit sphere, all ⟨P_i x, x⟩ = 0).
pub fn mplus_member<S: Scalar>(sys: &CliffordSystem<S>, x: &[S], tol: Tol) -> bool {
    let sym = symmetric_system(sys);
    if x.len() != sym.dim {
        return false;
    }
    if !(dot(x, x) - S::one()).within(tol.residual) {
        return false;
    }
    sym.mats
        .iter()
        .all(|p| dot(&p.mul_vec(x), x).within(tol.residual))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, QSqrt2};

    fn build(m: usize, n: usize, family: Family) -> CliffordSystem<QSqrt2> {
        build_system(m, n, family).unwrap()
    }

    #[test]
    fn delta_table() {
        assert_eq!(
            (1..=8).map(delta).collect::<Vec<_>>(),
            vec![1, 2, 4, 4, 8, 8, 8, 8]
        );
        assert_eq!(delta(9), 16);
        assert_eq!(delta(12), 64);
        assert_eq!(delta(16), 128);
        assert_eq!(delta(17), 256);
    }

    #[test]
    fn built_systems_verify() {
        let tol = Tol::default();
        for m in 1..=8usize {
            for n in 1..=2usize {
                let families: Vec<Family> = if m % 4 == 0 {
                    (0..=n)
                        .map(Family::Indefinite)
                        .chain([Family::Definite])
                        .collect()
                } else {
                    vec![Family::NotApplicable]
                };
                for fam in families {
                    let sys = build(m, n, fam);
                    assert_eq!(sys.l, n * delta(m) as usize);
                    assert!(verify_clifford(&sys, tol), "m={m} n={n} {fam}");
                }
            }
        }
    }

    #[test]
    fn family_validation() {
        assert!(matches!(
            build_system::<QSqrt2>(9, 1, Family::NotApplicable),
            Err(CliffordError::UnsupportedM(9))
        ));
        assert!(matches!(
            build_system::<QSqrt2>(4, 1, Family::NotApplicable),
            Err(CliffordError::BadFamily { .. })
        ));
        assert!(matches!(
            build_system::<QSqrt2>(3, 1, Family::Definite),
            Err(CliffordError::BadFamily { .. })
        ));
        assert!(matches!(
            build_system::<QSqrt2>(4, 2, Family::Indefinite(3)),
            Err(CliffordError::BadFamily { .. })
        ));
    }

    #[test]
    fn broken_systems_fail_verification() {
        let tol = Tol::default();
        let sys = build(4, 1, Family::Definite);
        // Transposing a generator only negates it, which stays a valid system.
        let negated = sys.clone().with_generator(1, sys.generator(0).transpose());
        assert!(verify_clifford(&negated, tol));
        // A one-entry perturbation breaks skewness.
        let mut bent = sys.generator(0).clone();
        bent[(0, 1)] = bent[(0, 1)].clone() + QSqrt2::one();
        let broken = sys.clone().with_generator(1, bent);
        assert!(!verify_clifford(&broken, tol), "skewness break undetected");
        let duplicated = sys.clone().with_generator(2, sys.generator(0).clone());
        assert!(
            !verify_clifford(&duplicated, tol),
            "anticommutation break undetected"
        );
    }

    /// The m=4 definite generators on H are the transposed row-convention
    /// blocks D_1, D_2, D_3 (left multiplication by i, j, k acting on rows).
    #[test]
    fn quaternion_blocks_match_display() {
        let sys = build(4, 1, Family::Definite);
        let d1 = Mat::<QSqrt2>::from_int_rows(&[
            &[0, 1, 0, 0],
            &[-1, 0, 0, 0],
            &[0, 0, 0, 1],
            &[0, 0, -1, 0],
        ]);
        let d2 = Mat::<QSqrt2>::from_int_rows(&[
            &[0, 0, 1, 0],
            &[0, 0, 0, -1],
            &[-1, 0, 0, 0],
            &[0, 1, 0, 0],
        ]);
        let d3 = Mat::<QSqrt2>::from_int_rows(&[
            &[0, 0, 0, 1],
            &[0, 0, 1, 0],
            &[0, -1, 0, 0],
            &[-1, 0, 0, 0],
        ]);
        assert_eq!(sys.generator(0), &d1.transpose());
        assert_eq!(sys.generator(1), &d2.transpose());
        assert_eq!(sys.generator(2), &d3.transpose());
    }

    #[test]
    fn indefinite_acts_with_flipped_sign() {
        // E_1(a_1, a_2) = (i·a_1, −i·a_2) for the m=4, n=2, q=1 system.
        let sys = build(4, 2, Family::Indefinite(1));
        let mut v = vec![QSqrt2::zero(); 8];
        v[0] = QSqrt2::one(); // a_1 = 1
        v[4] = QSqrt2::one(); // a_2 = 1
        let e1v = sys.apply(1, &v);
        let mut expected = vec![QSqrt2::zero(); 8];
        expected[1] = QSqrt2::one(); // i·1 = i
        expected[5] = -QSqrt2::one(); // −i·1 = −i
        assert_eq!(e1v, expected);
    }

    #[test]
    fn m2_is_complex_rotation() {
        let sys = build(2, 2, Family::NotApplicable);
        let e1 = sys.generator(0);
        assert_eq!(
            e1.matmul(e1),
            Mat::<QSqrt2>::identity(4).scale(&QSqrt2::from_int(-1))
        );
    }

    #[test]
    fn symmetric_system_small_display() {
        let sys = build(1, 1, Family::NotApplicable);
        let sym = symmetric_system(&sys);
        assert_eq!(sym.mats.len(), 2);
        assert_eq!(sym.mats[0], Mat::from_int_rows(&[&[1, 0], &[0, -1]]));
        assert_eq!(sym.mats[1], Mat::from_int_rows(&[&[0, 1], &[1, 0]]));
        assert!(verify_symmetric(&sym, Tol::default()));
    }

    #[test]
    fn symmetric_systems_verify() {
        for (m, n, fam) in [
            (2, 2, Family::NotApplicable),
            (3, 1, Family::NotApplicable),
            (4, 2, Family::Definite),
            (4, 2, Family::Indefinite(1)),
            (8, 1, Family::Definite),
        ] {
            let sym = symmetric_system(&build(m, n, fam));
            assert!(verify_symmetric(&sym, Tol::default()), "m={m} n={n}");
        }
    }

    #[test]
    fn definite_product_is_plus_minus_identity() {
        for (m, n) in [(4usize, 1usize), (4, 2), (8, 1)] {
            let sys = build(m, n, Family::Definite);
            let sym = symmetric_system(&sys);
            let mut prod = Mat::<QSqrt2>::identity(sym.dim);
            for p in sym.matrices() {
                prod = prod.matmul(p);
            }
            let id = Mat::<QSqrt2>::identity(sym.dim);
            assert!(prod == id || prod == id.neg(), "m = {m}, n = {n}");
            let tr = product_trace(&sym).to_f64().abs() as usize;
            assert_eq!(tr, sym.dim);
        }
    }

    #[test]
    fn trace_separates_families() {
        let n = 3;
        let sym_def = symmetric_system(&build(4, n, Family::Definite));
        let two_l = QSqrt2::from_int(2 * 4 * n as i64);
        let t_def = product_trace(&sym_def).abs();
        assert_eq!(t_def, two_l);
        let mut seen = Vec::new();
        for q in 1..n {
            let sym = symmetric_system(&build(4, n, Family::Indefinite(q)));
            let t = product_trace(&sym);
            assert!(t.abs() < two_l, "indefinite q={q} trace not smaller");
            assert!(!seen.contains(&t), "trace fails to distinguish q");
            seen.push(t);
        }
    }

    #[test]
    fn clifford_orbit_is_orthonormal() {
        // For unit a, the vectors {a, E_1 a, …, E_{m−1} a} are orthonormal.
        for (m, n, fam) in [
            (4, 2, Family::Definite),
            (4, 2, Family::Indefinite(1)),
            (8, 1, Family::Definite),
        ] {
            let sys = build(m, n, fam);
            let h = QSqrt2::inv_sqrt2();
            let mut a = vec![QSqrt2::zero(); sys.l];
            a[0] = h.clone();
            a[sys.l - 1] = h.clone();
            let mut orbit = vec![a.clone()];
            for i in 1..m {
                orbit.push(sys.apply(i, &a));
            }
            for (i, u) in orbit.iter().enumerate() {
                for (j, v) in orbit.iter().enumerate() {
                    let expected = if i == j {
                        QSqrt2::one()
                    } else {
                        QSqrt2::zero()
                    };
                    assert_eq!(dot(u, v), expected, "m={m} i={i} j={j}");
                }
            }
        }
    }

    #[test]
    fn generator_products_skew_traceless() {
        for (m, n, fam) in [
            (3usize, 2usize, Family::NotApplicable),
            (4, 2, Family::Indefinite(1)),
            (8, 1, Family::Definite),
        ] {
            let sys = build(m, n, fam);
            for i in 0..sys.generators().len() {
                for j in 0..sys.generators().len() {
                    if i == j {
                        continue;
                    }
                    let prod = sys.generator(i).matmul(sys.generator(j));
                    assert_eq!(prod.transpose(), prod.neg(), "m={m} ({i},{j})");
                    assert_eq!(prod.trace(), QSqrt2::zero(), "m={m} ({i},{j})");
                }
            }
        }
    }

    #[test]
    fn symmetric_images_are_orthonormal() {
        // ⟨P_i x, P_j x⟩ = δ_ij·|x|² for arbitrary x.
        let sym = symmetric_system(&build(4, 1, Family::Definite));
        let x: Vec<QSqrt2> = (0..sym.dim)
            .map(|i| QSqrt2::new(rat(i as i64 % 5 - 2, 3), rat((i as i64 * 7) % 3 - 1, 2)))
            .collect();
        let n2 = dot(&x, &x);
        let images: Vec<Vec<QSqrt2>> = sym.matrices().iter().map(|p| p.mul_vec(&x)).collect();
        for (i, u) in images.iter().enumerate() {
            for (j, v) in images.iter().enumerate() {
                let expected = if i == j { n2.clone() } else { QSqrt2::zero() };
                assert_eq!(dot(u, v), expected, "({i},{j})");
            }
        }
    }

    #[test]
    fn fkm_polynomial_values() {
        let sys = build(4, 2, Family::Definite);
        let sym = symmetric_system(&sys);
        let zero = vec![QSqrt2::zero(); sym.dim];
        assert_eq!(fkm_polynomial(&sys, &zero), QSqrt2::zero());
        // Unit eigenvector of P_0: P(x) = 1 − 2 = −1.
        let mut x = vec![QSqrt2::zero(); sym.dim];
        x[0] = QSqrt2::one();
        assert_eq!(fkm_polynomial(&sys, &x), QSqrt2::from_int(-1));
        // A point of M_+: (a, b)/√2 with a, b unit, Clifford-orthogonal.
        let h = QSqrt2::inv_sqrt2();
        let mut y = vec![QSqrt2::zero(); sym.dim];
        y[0] = h.clone(); // a = (1, 0, …)/√2 in the first H-block
        y[sys.l + 4] = h.clone(); // b supported on the second H-block
        assert!(mplus_member(&sys, &y, Tol::default()));
        assert_eq!(fkm_polynomial(&sys, &y), QSqrt2::one());
    }
}
