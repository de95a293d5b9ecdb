//! The algebra `T_n`: a free module of rank `n^2 + 1` with basis
//! `{1} ∪ {f_{i,j}}` and multiplication `f_{i,j} f_{k,l} = c_{j,k} f_{i,l}`.
//!
//! Elements are dense coefficient vectors in the basis order
//! `1, f_{1,1}, ..., f_{1,n}, f_{2,1}, ..., f_{n,n}`.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::Error;
use crate::exact::Scalar;
use crate::matrix::Matrix;

/// Parameter mode: free `c_{i,j}`, `alpha_i`, `beta_i`, or the constrained
/// one-parameter family (all beta equal, all c equal, alpha recursion).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParamMode {
    Generic,
    Canonical,
}

/// The parameters `n`, `c_{i,j}`, `alpha_i`, `beta_i`. All indexing on the
/// accessors is 1-based to match the generator labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamSet {
    pub n: usize,
    c: Vec<Vec<Scalar>>,
    alpha: Vec<Scalar>,
    beta: Vec<Scalar>,
    pub mode: ParamMode,
    pub symmetric: bool,
}

impl ParamSet {
    /// Generic parameters. Validates the invertibility requirements:
    /// every `c_{i,j}` and `alpha_i` nonzero, and
    /// `beta_i (alpha_i c_{i,i} + beta_i)` nonzero (needed to invert `Y_i`).
    pub fn generic(
        n: usize,
        c: Vec<Vec<Scalar>>,
        alpha: Vec<Scalar>,
        beta: Vec<Scalar>,
        symmetric: bool,
    ) -> Result<Self, Error> {
        if n == 0 {
            return Err(Error::InvalidParameter("n must be positive".into()));
        }
        if c.len() != n || c.iter().any(|row| row.len() != n) {
            return Err(Error::InvalidParameter(format!("c must be {n}x{n}")));
        }
        if alpha.len() != n || beta.len() != n {
            return Err(Error::InvalidParameter(format!(
                "alpha and beta must have length {n}"
            )));
        }
        let p = ParamSet {
            n,
            c,
            alpha,
            beta,
            mode: ParamMode::Generic,
            symmetric,
        };
        p.validate()?;
        Ok(p)
    }

    pub(crate) fn with_mode(mut self, mode: ParamMode) -> Self {
        self.mode = mode;
        self
    }

    fn validate(&self) -> Result<(), Error> {
        let n = self.n;
        for i in 1..=n {
            for j in 1..=n {
                if self.c(i, j).is_zero() {
                    return Err(Error::DegenerateParameter(format!("c_{{{i},{j}}}")));
                }
            }
        }
        if self.symmetric {
            for i in 1..=n {
                for j in i + 1..=n {
                    if self.c(i, j) != self.c(j, i) {
                        return Err(Error::InvalidParameter(format!(
                            "c_{{{i},{j}}} != c_{{{j},{i}}} with symmetry requested"
                        )));
                    }
                }
            }
        }
        for i in 1..=n {
            if self.alpha(i).is_zero() {
                return Err(Error::DegenerateParameter(format!("alpha_{i}")));
            }
            if self.beta(i).is_zero() {
                return Err(Error::DegenerateParameter(format!("beta_{i}")));
            }
            if self.y_discriminant(i).is_zero() {
                return Err(Error::DegenerateParameter(format!(
                    "alpha_{i}*c_{{{i},{i}}} + beta_{i}"
                )));
            }
        }
        Ok(())
    }

    pub fn c(&self, i: usize, j: usize) -> &Scalar {
        &self.c[i - 1][j - 1]
    }

    pub fn alpha(&self, i: usize) -> &Scalar {
        &self.alpha[i - 1]
    }

    pub fn beta(&self, i: usize) -> &Scalar {
        &self.beta[i - 1]
    }

    /// `alpha_i c_{i,i} + beta_i`, the quantity (together with `beta_i`) that
    /// must not vanish for `Y_i` to be invertible.
    pub fn y_discriminant(&self, i: usize) -> Scalar {
        &(self.alpha(i) * self.c(i, i)) + self.beta(i)
    }

    /// Whether C1 (equal beta), C2 (alpha recursion) and C3 (equal c) hold.
    pub fn satisfies_constraints(&self) -> bool {
        let n = self.n;
        for i in 2..=n {
            if self.beta(i) != self.beta(1) {
                return false;
            }
            // C2: alpha_i = c_{i-1,i-1} alpha_{i-1} / c_{i,i}
            let lhs = self.alpha(i) * self.c(i, i);
            let rhs = self.c(i - 1, i - 1) * self.alpha(i - 1);
            if lhs != rhs {
                return false;
            }
        }
        for i in 1..=n {
            for j in 1..=n {
                if self.c(i, j) != self.c(1, 1) {
                    return false;
                }
            }
        }
        true
    }
}

/// Basis labels for `T_n`: the unit, or a generator `f_{i,j}` (1-based).
///
/// Total order: unit first, then `(i, j)` row-major, matching the basis
/// `1, f_{1,1}, ..., f_{1,n}, f_{2,1}, ..., f_{n,n}` the matrices use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum BasisIndex {
    Unit,
    Pair(usize, usize),
}

impl BasisIndex {
    pub fn offset(&self, n: usize) -> usize {
        match *self {
            BasisIndex::Unit => 0,
            BasisIndex::Pair(i, j) => {
                debug_assert!((1..=n).contains(&i) && (1..=n).contains(&j));
                1 + (i - 1) * n + (j - 1)
            }
        }
    }

    pub fn from_offset(n: usize, k: usize) -> Self {
        if k == 0 {
            BasisIndex::Unit
        } else {
            let k = k - 1;
            BasisIndex::Pair(k / n + 1, k % n + 1)
        }
    }

    /// All `n^2 + 1` basis labels in basis order.
    pub fn all(n: usize) -> impl Iterator<Item = BasisIndex> {
        (0..dim(n)).map(move |k| BasisIndex::from_offset(n, k))
    }
}

impl fmt::Display for BasisIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisIndex::Unit => write!(f, "1"),
            BasisIndex::Pair(i, j) => write!(f, "f_{{{i},{j}}}"),
        }
    }
}

/// Rank of `T_n` as a free module.
pub fn dim(n: usize) -> usize {
    n * n + 1
}

/// Element of `T_n` as a dense coefficient vector of length `n^2 + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TnElement {
    n: usize,
    coeffs: Vec<Scalar>,
}

impl TnElement {
    pub fn zero(n: usize) -> Self {
        TnElement {
            n,
            coeffs: vec![Scalar::zero(); dim(n)],
        }
    }

    pub fn unit(n: usize) -> Self {
        TnElement::basis(n, BasisIndex::Unit)
    }

    pub fn basis(n: usize, idx: BasisIndex) -> Self {
        let mut e = TnElement::zero(n);
        e.coeffs[idx.offset(n)] = Scalar::one();
        e
    }

    pub fn from_coeffs(n: usize, coeffs: Vec<Scalar>) -> Self {
        assert_eq!(coeffs.len(), dim(n));
        TnElement { n, coeffs }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coeff(&self, idx: BasisIndex) -> &Scalar {
        &self.coeffs[idx.offset(self.n)]
    }

    pub fn set_coeff(&mut self, idx: BasisIndex, v: Scalar) {
        let k = idx.offset(self.n);
        self.coeffs[k] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }

    pub fn add(&self, rhs: &TnElement) -> TnElement {
        assert_eq!(self.n, rhs.n);
        TnElement {
            n: self.n,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &TnElement) -> TnElement {
        assert_eq!(self.n, rhs.n);
        TnElement {
            n: self.n,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> TnElement {
        TnElement {
            n: self.n,
            coeffs: self.coeffs.iter().map(|a| a * s).collect(),
        }
    }

    /// Product in `T_n`, bilinear extension of [`mul_basis`].
    pub fn mul(&self, rhs: &TnElement, p: &ParamSet) -> TnElement {
        assert_eq!(self.n, rhs.n);
        assert_eq!(self.n, p.n);
        let n = self.n;
        let mut out = TnElement::zero(n);
        for (ka, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let ia = BasisIndex::from_offset(n, ka);
            for (kb, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ib = BasisIndex::from_offset(n, kb);
                let (target, structure) = basis_product(ia, ib, p);
                let term = &(a * b) * &structure;
                let k = target.offset(n);
                out.coeffs[k] = &out.coeffs[k] + &term;
            }
        }
        out
    }

    /// Write the pretty form, e.g. `alpha*f_{1,1} + beta`.
    pub fn display(&self) -> String {
        let mut parts: Vec<String> = Vec::new();
        for idx in BasisIndex::all(self.n) {
            let c = self.coeff(idx);
            if c.is_zero() {
                continue;
            }
            match idx {
                BasisIndex::Unit => parts.push(format!("({c})")),
                _ => parts.push(format!("({c})*{idx}")),
            }
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

/// Structure constants: `f_{i,j} f_{k,l} = c_{j,k} f_{i,l}`, unit acts as
/// identity. Returns the target basis element and the coefficient.
fn basis_product(a: BasisIndex, b: BasisIndex, p: &ParamSet) -> (BasisIndex, Scalar) {
    match (a, b) {
        (BasisIndex::Unit, x) | (x, BasisIndex::Unit) => (x, Scalar::one()),
        (BasisIndex::Pair(i, j), BasisIndex::Pair(k, l)) => {
            (BasisIndex::Pair(i, l), p.c(j, k).clone())
        }
    }
}

/// Product of two basis elements as a `TnElement`.
pub fn mul_basis(a: BasisIndex, b: BasisIndex, p: &ParamSet) -> TnElement {
    let (target, structure) = basis_product(a, b, p);
    let mut out = TnElement::zero(p.n);
    out.set_coeff(target, structure);
    out
}

/// `Y_i = alpha_i f_{i,i} + beta_i`, the braid generator surrounding axis `i`.
pub fn y_element(i: usize, p: &ParamSet) -> TnElement {
    assert!((1..=p.n).contains(&i));
    let mut y = TnElement::zero(p.n);
    y.set_coeff(BasisIndex::Pair(i, i), p.alpha(i).clone());
    y.set_coeff(BasisIndex::Unit, p.beta(i).clone());
    y
}

/// Matrix of left multiplication by `x` (columns are `x * e_b`).
pub fn left_mul_matrix(x: &TnElement, p: &ParamSet) -> Matrix {
    let n = x.n();
    let d = dim(n);
    let mut m = Matrix::zeros(d);
    for (col, idx) in BasisIndex::all(n).enumerate() {
        let img = x.mul(&TnElement::basis(n, idx), p);
        for (row, v) in img.coeffs().iter().enumerate() {
            if !v.is_zero() {
                m.set(row, col, v.clone());
            }
        }
    }
    m
}

/// Two-sided inverse of `x`, by solving `x * z = 1` in the module and
/// verifying `z * x = 1`. `Ok(None)` means not invertible.
pub fn invert(x: &TnElement, p: &ParamSet) -> Result<Option<TnElement>, Error> {
    let n = x.n();
    let lm = left_mul_matrix(x, p);
    let rhs: Vec<Scalar> = TnElement::unit(n).coeffs().to_vec();
    let Some(z) = lm.solve(&rhs)? else {
        return Ok(None);
    };
    let z = TnElement::from_coeffs(n, z);
    // in a finite-dimensional unital associative algebra a one-sided inverse
    // is two-sided; a mismatch here is a bug in the structure constants
    if z.mul(x, p) != TnElement::unit(n) {
        return Err(Error::Internal(
            "one-sided inverse failed the two-sided check".into(),
        ));
    }
    Ok(Some(z))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn simple_params(n: usize) -> ParamSet {
        // distinct small values, symmetric c
        let c: Vec<Vec<Scalar>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| Scalar::from_i64(1 + (i + j) as i64))
                    .collect()
            })
            .collect();
        let alpha = (0..n).map(|i| Scalar::from_i64(i as i64 + 2)).collect();
        let beta = (0..n).map(|i| Scalar::from_i64(i as i64 + 1)).collect();
        ParamSet::generic(n, c, alpha, beta, true).unwrap()
    }

    #[test]
    fn basis_products() {
        let p = simple_params(3);
        // f_{1,2} f_{2,3} = c_{2,2} f_{1,3}
        let prod = mul_basis(BasisIndex::Pair(1, 2), BasisIndex::Pair(2, 3), &p);
        assert_eq!(prod.coeff(BasisIndex::Pair(1, 3)), p.c(2, 2));
        // 1 * f_{2,2} = f_{2,2}
        let prod = mul_basis(BasisIndex::Unit, BasisIndex::Pair(2, 2), &p);
        assert_eq!(prod, TnElement::basis(3, BasisIndex::Pair(2, 2)));
        // f_{1,1}^2 = c_{1,1} f_{1,1}
        let prod = mul_basis(BasisIndex::Pair(1, 1), BasisIndex::Pair(1, 1), &p);
        assert_eq!(prod.coeff(BasisIndex::Pair(1, 1)), p.c(1, 1));
    }

    #[test]
    fn bilinear_expansion() {
        let p = simple_params(2);
        // (f_{1,1} + 1)(f_{1,1} - 1) = c_{1,1} f_{1,1} - 1
        let f11 = TnElement::basis(2, BasisIndex::Pair(1, 1));
        let one = TnElement::unit(2);
        let prod = f11.add(&one).mul(&f11.sub(&one), &p);
        let mut expect = TnElement::zero(2);
        expect.set_coeff(BasisIndex::Pair(1, 1), p.c(1, 1).clone());
        expect.set_coeff(BasisIndex::Unit, Scalar::from_i64(-1));
        assert_eq!(prod, expect);
    }

    #[test]
    fn y_product_expansion() {
        let p = simple_params(3);
        // Y_1 Y_2 = a1 a2 c_{1,2} f_{1,2} + a1 b2 f_{1,1} + a2 b1 f_{2,2} + b1 b2
        let y1 = y_element(1, &p);
        let y2 = y_element(2, &p);
        let prod = y1.mul(&y2, &p);
        let mut expect = TnElement::zero(3);
        expect.set_coeff(
            BasisIndex::Pair(1, 2),
            &(p.alpha(1) * p.alpha(2)) * p.c(1, 2),
        );
        expect.set_coeff(BasisIndex::Pair(1, 1), p.alpha(1) * p.beta(2));
        expect.set_coeff(BasisIndex::Pair(2, 2), p.alpha(2) * p.beta(1));
        expect.set_coeff(BasisIndex::Unit, p.beta(1) * p.beta(2));
        assert_eq!(prod, expect);
    }

    #[test]
    fn associativity_exhaustive_small_n() {
        for n in 1..=3 {
            let p = simple_params(n);
            let idxs: Vec<_> = BasisIndex::all(n).collect();
            for &a in &idxs {
                for &b in &idxs {
                    for &c in &idxs {
                        let ea = TnElement::basis(n, a);
                        let eb = TnElement::basis(n, b);
                        let ec = TnElement::basis(n, c);
                        let left = ea.mul(&eb, &p).mul(&ec, &p);
                        let right = ea.mul(&eb.mul(&ec, &p), &p);
                        assert_eq!(left, right, "associativity at ({a}, {b}, {c})");
                    }
                }
            }
        }
    }

    #[test]
    fn y_quadratic_relation() {
        let p = simple_params(4);
        for i in 1..=4 {
            let y = y_element(i, &p);
            let lhs = y.mul(&y, &p);
            // Y_i^2 = (a c + 2b) Y_i - b(a c + b) 1
            let acb = p.y_discriminant(i);
            let coef = &acb + p.beta(i);
            let konst = p.beta(i) * &acb;
            let rhs = y
                .scale(&coef)
                .sub(&TnElement::unit(4).scale(&konst));
            assert_eq!(lhs, rhs, "quadratic relation for Y_{i}");
        }
    }

    #[test]
    fn invert_unit_and_y() {
        let p = simple_params(3);
        assert_eq!(
            invert(&TnElement::unit(3), &p).unwrap().unwrap(),
            TnElement::unit(3)
        );
        for i in 1..=3 {
            let y = y_element(i, &p);
            let z = invert(&y, &p).unwrap().expect("Y_i invertible");
            assert_eq!(y.mul(&z, &p), TnElement::unit(3));
            assert_eq!(z.mul(&y, &p), TnElement::unit(3));
            // closed form ((a c + 2b) - Y_i) / (b (a c + b))
            let acb = p.y_discriminant(i);
            let num = TnElement::unit(3)
                .scale(&(&acb + p.beta(i)))
                .sub(&y);
            let den = p.beta(i) * &acb;
            assert_eq!(z, num.scale(&den.inv().unwrap()));
        }
    }

    #[test]
    fn f11_not_invertible() {
        let p = simple_params(2);
        let f11 = TnElement::basis(2, BasisIndex::Pair(1, 1));
        assert_eq!(invert(&f11, &p).unwrap(), None);
    }

    #[test]
    fn degenerate_parameters_rejected() {
        // beta = 0
        let err = ParamSet::generic(
            1,
            vec![vec![Scalar::one()]],
            vec![Scalar::one()],
            vec![Scalar::zero()],
            true,
        )
        .unwrap_err();
        assert_eq!(err, Error::DegenerateParameter("beta_1".into()));
        // alpha c + beta = 0: alpha=1, c=1, beta=-1
        let err = ParamSet::generic(
            1,
            vec![vec![Scalar::one()]],
            vec![Scalar::one()],
            vec![Scalar::from_i64(-1)],
            true,
        )
        .unwrap_err();
        assert!(matches!(err, Error::DegenerateParameter(_)));
    }
}
