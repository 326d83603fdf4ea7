//! Octonion algebra over the scalar tower.
//!
//! The product comes from the Cayley-Dickson doubling (a,b)(c,d) = (ac − d̄b, da + bc̄)
//! applied to R → C → H → O, with the basis fixed in H ⊕ H as
//! 1=(1,0), e1=(i,0), e2=(j,0), e3=(k,0), e4=(0,1), e5=(0,i), e6=(0,j), e7=(0,k).
//! Products run through an 8×8 structure-constant table; the recursion is the
//! ground truth and the table is checked against it when first built.

use crate::linalg::Mat;
use crate::scalar::{QSqrt2, Scalar};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::OnceLock;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OctError {
    #[error("octonion vectors have different lengths ({0} vs {1})")]
    LengthMismatch(usize, usize),
}

/// Cayley-Dickson product on coefficient slices of length 1, 2, 4 or 8.
///
/// This recursion is the definition; everything else is checked against it.
pub fn cayley_dickson_mul<S: Scalar>(x: &[S], y: &[S]) -> Vec<S> {
    assert_eq!(x.len(), y.len());
    let n = x.len();
    if n == 1 {
        return vec![x[0].clone() * &y[0]];
    }
    let h = n / 2;
    let (a, b) = x.split_at(h);
    let (c, d) = y.split_at(h);
    let conj = |z: &[S]| -> Vec<S> {
        let mut out = z.to_vec();
        for v in out.iter_mut().skip(1) {
            *v = -v.clone();
        }
        out
    };
    // (a,b)(c,d) = (ac − d̄b, da + bc̄)
    let ac = cayley_dickson_mul(a, c);
    let db = cayley_dickson_mul(&conj(d), b);
    let da = cayley_dickson_mul(d, a);
    let bc = cayley_dickson_mul(b, &conj(c));
    let mut out = Vec::with_capacity(n);
    for i in 0..h {
        out.push(ac[i].clone() - &db[i]);
    }
    for i in 0..h {
        out.push(da[i].clone() + &bc[i]);
    }
    out
}

struct MulTable {
    idx: [[usize; 8]; 8],
    sgn: [[i8; 8]; 8],
}

fn mul_table() -> &'static MulTable {
    static TABLE: OnceLock<MulTable> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut idx = [[0usize; 8]; 8];
        let mut sgn = [[0i8; 8]; 8];
        for i in 0..8 {
            for j in 0..8 {
                let mut x = vec![QSqrt2::zero(); 8];
                let mut y = vec![QSqrt2::zero(); 8];
                x[i] = QSqrt2::one();
                y[j] = QSqrt2::one();
                let p = cayley_dickson_mul(&x, &y);
                let nonzero: Vec<usize> = (0..8).filter(|&t| !p[t].is_zero()).collect();
                assert_eq!(
                    nonzero.len(),
                    1,
                    "basis product is not a signed basis element"
                );
                let t = nonzero[0];
                let s = p[t].sign();
                assert!(s == 1 || s == -1);
                assert!(
                    p[t].clone() * &p[t] == QSqrt2::one(),
                    "non-unit structure constant"
                );
                idx[i][j] = t;
                sgn[i][j] = s as i8;
            }
        }
        MulTable { idx, sgn }
    })
}

/// Octonion with coefficients (c0, …, c7) in the basis {1, e1, …, e7}.
#[derive(Clone, PartialEq)]
pub struct Octonion<S> {
    c: [S; 8],
}

impl<S: Scalar> Octonion<S> {
    pub fn new(c: [S; 8]) -> Self {
        Octonion { c }
    }

    pub fn zero() -> Self {
        Octonion {
            c: std::array::from_fn(|_| S::zero()),
        }
    }

    pub fn one() -> Self {
        Self::basis(0)
    }

    /// e_i for i in 0..8, with e_0 = 1.
    pub fn basis(i: usize) -> Self {
        assert!(i < 8);
        let mut o = Self::zero();
        o.c[i] = S::one();
        o
    }

    pub fn from_scalar(s: S) -> Self {
        let mut o = Self::zero();
        o.c[0] = s;
        o
    }

    pub fn coeffs(&self) -> &[S; 8] {
        &self.c
    }

    pub fn coeff(&self, i: usize) -> &S {
        &self.c[i]
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(S::is_zero)
    }

    pub fn within(&self, eps: f64) -> bool {
        self.c.iter().all(|x| x.within(eps))
    }

    pub fn conj(&self) -> Self {
        let mut c = self.c.clone();
        for v in c.iter_mut().skip(1) {
            *v = -v.clone();
        }
        Octonion { c }
    }

    pub fn re(&self) -> S {
        self.c[0].clone()
    }

    pub fn imag_part(&self) -> Self {
        let mut c = self.c.clone();
        c[0] = S::zero();
        Octonion { c }
    }

    pub fn norm2(&self) -> S {
        self.c.iter().map(|x| x.clone() * x).sum()
    }

    pub fn scale(&self, s: &S) -> Self {
        Octonion {
            c: std::array::from_fn(|i| self.c[i].clone() * s),
        }
    }

    /// 8×8 real matrix of z ↦ self·z in the basis {1, e1, …, e7}.
    pub fn left_mult_matrix(&self) -> Mat<S> {
        let t = mul_table();
        let mut m = Mat::<S>::zeros(8, 8);
        for j in 0..8 {
            for i in 0..8 {
                if self.c[i].is_zero() {
                    continue;
                }
                let k = t.idx[i][j];
                let term = if t.sgn[i][j] > 0 {
                    self.c[i].clone()
                } else {
                    -self.c[i].clone()
                };
                m[(k, j)] = m[(k, j)].clone() + term;
            }
        }
        m
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Octonion<T> {
        Octonion {
            c: std::array::from_fn(|i| f(&self.c[i])),
        }
    }

    pub fn to_f64(&self) -> Octonion<f64> {
        self.map(S::to_f64)
    }
}

fn mul_impl<S: Scalar>(x: &Octonion<S>, y: &Octonion<S>) -> Octonion<S> {
    let t = mul_table();
    let mut out = Octonion::<S>::zero();
    for i in 0..8 {
        if x.c[i].is_zero() {
            continue;
        }
        for j in 0..8 {
            if y.c[j].is_zero() {
                continue;
            }
            let term = x.c[i].clone() * &y.c[j];
            let k = t.idx[i][j];
            if t.sgn[i][j] > 0 {
                out.c[k] = out.c[k].clone() + term;
            } else {
                out.c[k] = out.c[k].clone() - term;
            }
        }
    }
    out
}

macro_rules! oct_binop {
    ($trait:ident, $method:ident, $imp:expr) => {
        impl<S: Scalar> $trait for Octonion<S> {
            type Output = Octonion<S>;
            fn $method(self, rhs: Octonion<S>) -> Octonion<S> {
                $imp(&self, &rhs)
            }
        }
        impl<'a, S: Scalar> $trait<&'a Octonion<S>> for Octonion<S> {
            type Output = Octonion<S>;
            fn $method(self, rhs: &'a Octonion<S>) -> Octonion<S> {
                $imp(&self, rhs)
            }
        }
        impl<'a, 'b, S: Scalar> $trait<&'b Octonion<S>> for &'a Octonion<S> {
            type Output = Octonion<S>;
            fn $method(self, rhs: &'b Octonion<S>) -> Octonion<S> {
                $imp(self, rhs)
            }
        }
    };
}

oct_binop!(Add, add, |x: &Octonion<S>, y: &Octonion<S>| Octonion {
    c: std::array::from_fn(|i| x.c[i].clone() + &y.c[i]),
});
oct_binop!(Sub, sub, |x: &Octonion<S>, y: &Octonion<S>| Octonion {
    c: std::array::from_fn(|i| x.c[i].clone() - &y.c[i]),
});
oct_binop!(Mul, mul, |x: &Octonion<S>, y: &Octonion<S>| mul_impl(x, y));

impl<S: Scalar> Neg for Octonion<S> {
    type Output = Octonion<S>;
    fn neg(self) -> Octonion<S> {
        Octonion {
            c: std::array::from_fn(|i| -self.c[i].clone()),
        }
    }
}

impl<S: Scalar> Neg for &Octonion<S> {
    type Output = Octonion<S>;
    fn neg(self) -> Octonion<S> {
        -self.clone()
    }
}

fn fmt_octonion<S: Scalar>(o: &Octonion<S>, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let mut first = true;
    for (i, v) in o.c.iter().enumerate() {
        if v.is_zero() {
            continue;
        }
        if !first {
            write!(f, " + ")?;
        }
        if i == 0 {
            write!(f, "({})", v)?;
        } else {
            write!(f, "({})e{}", v, i)?;
        }
        first = false;
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl<S: fmt::Debug> fmt::Debug for Octonion<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Oct{:?}", self.c)
    }
}

impl<S: Scalar> fmt::Display for Octonion<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_octonion(self, f)
    }
}

impl<S: Serialize> Serialize for Octonion<S> {
    fn serialize<Se: Serializer>(&self, serializer: Se) -> Result<Se::Ok, Se::Error> {
        self.c.as_slice().serialize(serializer)
    }
}

impl<'de, S: Deserialize<'de>> Deserialize<'de> for Octonion<S> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let v = Vec::<S>::deserialize(deserializer)?;
        let c: [S; 8] = v
            .try_into()
            .map_err(|_| serde::de::Error::custom("octonion needs exactly 8 coefficients"))?;
        Ok(Octonion { c })
    }
}

/// Octonionic inner product ⟨u, v⟩ = Σ u_j · conj(v_j).
pub fn oct_inner<S: Scalar>(u: &[Octonion<S>], v: &[Octonion<S>]) -> Result<Octonion<S>, OctError> {
    if u.len() != v.len() {
        return Err(OctError::LengthMismatch(u.len(), v.len()));
    }
    let mut acc = Octonion::zero();
    for (x, y) in u.iter().zip(v) {
        acc = acc + (x * &y.conj());
    }
    Ok(acc)
}

/// Componentwise left multiplication x·v on an octonion vector.
pub fn left_mul_vec<S: Scalar>(x: &Octonion<S>, v: &[Octonion<S>]) -> Vec<Octonion<S>> {
    v.iter().map(|z| x * z).collect()
}

/// Flattens an octonion vector to its 8n real coordinates, block by block.
pub fn to_reals<S: Scalar>(v: &[Octonion<S>]) -> Vec<S> {
    v.iter().flat_map(|o| o.coeffs().iter().cloned()).collect()
}

/// Inverse of [`to_reals`]; the length must be a multiple of 8.
pub fn from_reals<S: Scalar>(v: &[S]) -> Vec<Octonion<S>> {
    assert_eq!(v.len() % 8, 0, "coordinate length must be a multiple of 8");
    v.chunks(8)
        .map(|c| Octonion::new(std::array::from_fn(|i| c[i].clone())))
        .collect()
}

/// Coefficientwise real inner product of two octonion vectors.
pub fn real_inner<S: Scalar>(u: &[Octonion<S>], v: &[Octonion<S>]) -> S {
    assert_eq!(u.len(), v.len());
    u.iter()
        .zip(v)
        .flat_map(|(x, y)| x.coeffs().iter().zip(y.coeffs()))
        .map(|(a, b)| a.clone() * b)
        .sum()
}
