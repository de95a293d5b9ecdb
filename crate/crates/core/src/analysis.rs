//! Exact spectral and dimensional analysis of the representation matrices:
//! characteristic polynomials (with the conjectured factorization treated as
//! a hypothesis under test), determinants, generated-algebra dimension,
//! centralizer/center dimensions and the trace-form semisimplicity probe.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::braid::{canonical_params, phi_generator, subspace_matrix, MuValue};
use crate::error::Error;
use crate::exact::{lagrange_interpolate, Poly, RatFn, Rational, Scalar};
use crate::matrix::{nullspace, rank_of, Matrix};
use crate::tn::dim as tn_dim;

/// Which matrix family an analysis targets.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BasisTag {
    /// The `(n^2+1) x (n^2+1)` matrices on all of `T_n`.
    Full,
    /// The `n^2 x n^2` restriction to the span of the `f_{i,j}`.
    Subspace,
}

impl BasisTag {
    pub fn dim(&self, n: usize) -> usize {
        match self {
            BasisTag::Full => tn_dim(n),
            BasisTag::Subspace => n * n,
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            BasisTag::Full => "full",
            BasisTag::Subspace => "subspace",
        }
    }
}

/// Polynomial in the eigenvalue variable `lambda` with [`Scalar`]
/// coefficients (lowest degree first, trimmed).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScalarPoly {
    coeffs: Vec<Scalar>,
}

impl ScalarPoly {
    pub fn new(mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        ScalarPoly { coeffs }
    }

    pub fn zero() -> Self {
        ScalarPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        ScalarPoly::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        ScalarPoly::new(vec![c])
    }

    /// `lambda - r`.
    pub fn lambda_minus(r: &Scalar) -> Self {
        ScalarPoly::new(vec![-r, Scalar::one()])
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Scalar {
        self.coeffs.get(k).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn add(&self, rhs: &ScalarPoly) -> ScalarPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        ScalarPoly::new((0..n).map(|k| &self.coeff(k) + &rhs.coeff(k)).collect())
    }

    pub fn sub(&self, rhs: &ScalarPoly) -> ScalarPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        ScalarPoly::new((0..n).map(|k| &self.coeff(k) - &rhs.coeff(k)).collect())
    }

    pub fn neg(&self) -> ScalarPoly {
        ScalarPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, rhs: &ScalarPoly) -> ScalarPoly {
        if self.is_zero() || rhs.is_zero() {
            return ScalarPoly::zero();
        }
        let mut out = vec![Scalar::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        ScalarPoly::new(out)
    }

    /// Exact division; errors if `rhs` is zero or does not divide `self`.
    pub fn div_exact(&self, rhs: &ScalarPoly) -> Result<ScalarPoly, Error> {
        let Some(dd) = rhs.degree() else {
            return Err(Error::DivisionByZero);
        };
        if self.is_zero() {
            return Ok(ScalarPoly::zero());
        }
        let sd = self.degree().unwrap();
        if sd < dd {
            return Err(Error::Internal("inexact polynomial division".into()));
        }
        let lead_inv = rhs.coeffs[dd].inv()?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Scalar::zero(); sd - dd + 1];
        for k in (0..quot.len()).rev() {
            let lead = rem[k + dd].clone();
            if lead.is_zero() {
                continue;
            }
            let q = &lead * &lead_inv;
            for (idx, dc) in rhs.coeffs.iter().enumerate() {
                rem[k + idx] = &rem[k + idx] - &(&q * dc);
            }
            quot[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::Internal("inexact polynomial division".into()));
        }
        Ok(ScalarPoly::new(quot))
    }

    pub fn pow(&self, exp: usize) -> ScalarPoly {
        let mut acc = ScalarPoly::one();
        for _ in 0..exp {
            acc = acc.mul(self);
        }
        acc
    }

    /// Evaluate at a scalar value of `lambda`.
    pub fn eval(&self, x: &Scalar) -> Scalar {
        let mut acc = Scalar::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    /// Substitute a rational value for `mu` in every coefficient.
    pub fn eval_mu(&self, x: &Rational) -> Result<ScalarPoly, Error> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.eval_mu(x).map(Scalar::Rat))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(ScalarPoly::new(coeffs))
    }

    /// Human-readable form, e.g. `lambda^2 - (mu)*lambda + 1`.
    pub fn display(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for k in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[k];
            if c.is_zero() {
                continue;
            }
            let term = match k {
                0 => format!("({c})"),
                1 => format!("({c})*lambda"),
                _ => format!("({c})*lambda^{k}"),
            };
            parts.push(term);
        }
        parts.join(" + ")
    }
}

/// Characteristic polynomial `det(lambda*I - m)` by fraction-free Bareiss
/// elimination over the polynomial ring in `lambda`.
pub fn char_poly(m: &Matrix) -> Result<ScalarPoly, Error> {
    let d = m.dim();
    if d == 0 {
        return Ok(ScalarPoly::one());
    }
    // entries of lambda*I - m
    let mut a: Vec<Vec<ScalarPoly>> = (0..d)
        .map(|r| {
            (0..d)
                .map(|c| {
                    let low = -m.get(r, c);
                    if r == c {
                        ScalarPoly::new(vec![low, Scalar::one()])
                    } else {
                        ScalarPoly::constant(low)
                    }
                })
                .collect()
        })
        .collect();
    let mut sign = false;
    let mut prev = ScalarPoly::one();
    for k in 0..d - 1 {
        if a[k][k].is_zero() {
            let Some(r) = (k + 1..d).find(|&r| !a[r][k].is_zero()) else {
                return Ok(ScalarPoly::zero());
            };
            a.swap(k, r);
            sign = !sign;
        }
        for r in k + 1..d {
            for c in k + 1..d {
                let num = a[k][k].mul(&a[r][c]).sub(&a[r][k].mul(&a[k][c]));
                a[r][c] = num.div_exact(&prev)?;
            }
            a[r][k] = ScalarPoly::zero();
        }
        prev = a[k][k].clone();
    }
    let det = a[d - 1][d - 1].clone();
    Ok(if sign { det.neg() } else { det })
}

/// Sign convention of the conjectured factors.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Convention {
    /// Factors exactly as printed: `(lambda + 1 + mu)` and
    /// `(lambda + (1+mu)^{-1})`.
    AsStated,
    /// Factors matching the stated eigenvalue list `1, 1+mu, (1+mu)^{-1}`:
    /// `(lambda - (1+mu))` and `(lambda - (1+mu)^{-1})`.
    SignFlipped,
}

impl Convention {
    pub fn as_str(&self) -> &'static str {
        match self {
            Convention::AsStated => "as-stated",
            Convention::SignFlipped => "sign-flipped",
        }
    }
}

/// The conjectured factorization for the given basis form. The `(lambda-1)`
/// exponent is `2 + (n-1)^2` on the full basis; the restriction drops the
/// fixed unit vector, so the subspace form uses `1 + (n-1)^2`.
pub fn conjectured_poly(
    n: usize,
    basis: BasisTag,
    convention: Convention,
    mu: &Scalar,
) -> Result<ScalarPoly, Error> {
    let one_plus_mu = &Scalar::one() + mu;
    let inv = one_plus_mu.inv().map_err(|_| {
        Error::DegenerateParameter("1 + mu".into())
    })?;
    let e1 = match basis {
        BasisTag::Full => 2 + (n - 1) * (n - 1),
        BasisTag::Subspace => 1 + (n - 1) * (n - 1),
    };
    let (r1, r2) = match convention {
        Convention::AsStated => (-&one_plus_mu, -&inv),
        Convention::SignFlipped => (one_plus_mu.clone(), inv.clone()),
    };
    let poly = ScalarPoly::lambda_minus(&Scalar::one())
        .pow(e1)
        .mul(&ScalarPoly::lambda_minus(&r1).pow(n - 1))
        .mul(&ScalarPoly::lambda_minus(&r2).pow(n - 1));
    Ok(poly)
}

/// How a characteristic polynomial was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CharPolyMethod {
    Symbolic,
    Interpolated,
}

impl CharPolyMethod {
    pub fn as_str(&self) -> &'static str {
        match self {
            CharPolyMethod::Symbolic => "symbolic",
            CharPolyMethod::Interpolated => "interpolated",
        }
    }
}

/// Verdict of the conjecture comparison for one generator and basis form.
#[derive(Clone, Debug)]
pub struct CharPolyReport {
    pub n: usize,
    pub generator: usize,
    pub basis: BasisTag,
    pub method: CharPolyMethod,
    /// `det(lambda*I - B(i))`, monic.
    pub char_poly: ScalarPoly,
    pub determinant: Scalar,
    pub conjectured_as_stated: ScalarPoly,
    pub conjectured_flipped: ScalarPoly,
    pub matches_as_stated: bool,
    pub matches_flipped: bool,
    /// First differing `lambda`-coefficient per convention, when it differs.
    pub certificate_as_stated: Option<String>,
    pub certificate_flipped: Option<String>,
}

fn first_coeff_difference(a: &ScalarPoly, b: &ScalarPoly) -> Option<String> {
    let top = a.coeffs().len().max(b.coeffs().len());
    (0..top).find_map(|k| {
        let (ca, cb) = (a.coeff(k), b.coeff(k));
        (ca != cb).then(|| format!("lambda^{k}: computed {ca}, conjectured {cb}"))
    })
}

/// Matrix of generator `i` at canonical parameters, in the requested basis.
pub fn canonical_matrix(
    n: usize,
    i: usize,
    basis: BasisTag,
    mu: &MuValue,
) -> Result<Matrix, Error> {
    let p = canonical_params(n, mu)?;
    let full = phi_generator(i, 1, &p)?;
    match basis {
        BasisTag::Full => Ok(full),
        BasisTag::Subspace => subspace_matrix(&full, n),
    }
}

/// Characteristic polynomial of the canonical `B(i)` recovered from rational
/// `mu` samples: every matrix entry lies in `Q[mu, (1+mu)^{-1}]`, so each
/// `lambda`-coefficient times `(1+mu)^dim` is a polynomial in `mu` of degree
/// at most `2*dim`, which Lagrange interpolation recovers exactly. Two spare
/// sample points cross-check the interpolants.
pub fn char_poly_interpolated(n: usize, i: usize, basis: BasisTag) -> Result<ScalarPoly, Error> {
    let d = basis.dim(n);
    let degree_bound = 2 * d;
    let npoints = degree_bound + 1;
    let nspare = 2;
    // mu = 1, 2, 3, ... avoids 0 and -1
    let samples: Vec<Rational> = (1..=(npoints + nspare) as i64)
        .map(crate::exact::int)
        .collect();
    let mut per_sample: Vec<(Rational, ScalarPoly)> = Vec::with_capacity(samples.len());
    for mu in &samples {
        let m = canonical_matrix(n, i, basis, &MuValue::Numeric(mu.clone()))?;
        per_sample.push((mu.clone(), char_poly(&m)?));
    }
    let one_plus = |mu: &Rational| mu + Rational::from_integer(1.into());
    let clear = |mu: &Rational| {
        let mut acc = Rational::from_integer(1.into());
        let f = one_plus(mu);
        for _ in 0..d {
            acc *= &f;
        }
        acc
    };
    let denominator = Poly::from_i64(&[1, 1]); // 1 + mu
    let mut den_pow = Poly::one();
    for _ in 0..d {
        den_pow = &den_pow * &denominator;
    }
    let mut coeffs = Vec::with_capacity(d + 1);
    for k in 0..=d {
        let points: Vec<(Rational, Rational)> = per_sample[..npoints]
            .iter()
            .map(|(mu, cp)| {
                let val = cp
                    .coeff(k)
                    .as_rat()
                    .expect("numeric char poly has rational coefficients");
                (mu.clone(), clear(mu) * val)
            })
            .collect();
        let q = lagrange_interpolate(&points);
        // cross-check on the spare points
        for (mu, cp) in &per_sample[npoints..] {
            let expect = clear(mu)
                * cp.coeff(k)
                    .as_rat()
                    .expect("numeric char poly has rational coefficients");
            if q.eval(mu) != expect {
                return Err(Error::Internal(format!(
                    "interpolation cross-check failed for lambda^{k} at mu = {mu}"
                )));
            }
        }
        coeffs.push(Scalar::Fun(RatFn::new(q, den_pow.clone())?));
    }
    Ok(ScalarPoly::new(coeffs))
}

/// Compare `det(lambda*I - B(i))` against both sign conventions of the
/// conjectured factorization, for one generator and basis form.
pub fn conjecture_check(
    n: usize,
    generator: usize,
    basis: BasisTag,
    method: CharPolyMethod,
) -> Result<CharPolyReport, Error> {
    let mu = Scalar::mu();
    let (cp, determinant) = match method {
        CharPolyMethod::Symbolic => {
            let m = canonical_matrix(n, generator, basis, &MuValue::Symbolic)?;
            (char_poly(&m)?, m.det())
        }
        CharPolyMethod::Interpolated => {
            let cp = char_poly_interpolated(n, generator, basis)?;
            // det(m) = (-1)^dim * charpoly(0)
            let c0 = cp.coeff(0);
            let det = if basis.dim(n) % 2 == 0 { c0 } else { -&c0 };
            (cp, det)
        }
    };
    let conjectured_as_stated = conjectured_poly(n, basis, Convention::AsStated, &mu)?;
    let conjectured_flipped = conjectured_poly(n, basis, Convention::SignFlipped, &mu)?;
    let certificate_as_stated = first_coeff_difference(&cp, &conjectured_as_stated);
    let certificate_flipped = first_coeff_difference(&cp, &conjectured_flipped);
    Ok(CharPolyReport {
        n,
        generator,
        basis,
        method,
        matches_as_stated: certificate_as_stated.is_none(),
        matches_flipped: certificate_flipped.is_none(),
        char_poly: cp,
        determinant,
        conjectured_as_stated,
        conjectured_flipped,
        certificate_as_stated,
        certificate_flipped,
    })
}

/// Incremental echelon basis over the scalar field, used for closures.
struct EchelonBasis {
    ncols: usize,
    /// rows in echelon form, each normalized to a unit pivot
    rows: Vec<(usize, Vec<Scalar>)>,
}

impl EchelonBasis {
    fn new(ncols: usize) -> Self {
        EchelonBasis {
            ncols,
            rows: Vec::new(),
        }
    }

    fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Reduce and insert; returns true if the vector was independent.
    fn insert(&mut self, mut v: Vec<Scalar>) -> bool {
        assert_eq!(v.len(), self.ncols);
        for (pivot, row) in &self.rows {
            if v[*pivot].is_zero() {
                continue;
            }
            let factor = v[*pivot].clone();
            for c in 0..self.ncols {
                v[c] = &v[c] - &(&factor * &row[c]);
            }
        }
        let Some(pivot) = (0..self.ncols).find(|&c| !v[c].is_zero()) else {
            return false;
        };
        let inv = v[pivot].inv().expect("pivot nonzero");
        for c in 0..self.ncols {
            v[c] = &v[c] * &inv;
        }
        self.rows.push((pivot, v));
        true
    }
}

fn vectorize(m: &Matrix) -> Vec<Scalar> {
    m.entries().to_vec()
}

/// Dimension (and an explicit matrix basis) of the unital algebra generated
/// by the given matrices and their inverses. Breadth-first closure with
/// echelon reduction after every insertion; hard-capped at `dim^2` rounds.
pub fn span_closure(gens: &[Matrix]) -> Result<(usize, Vec<Matrix>), Error> {
    if gens.is_empty() {
        return Ok((1, vec![]));
    }
    let d = gens[0].dim();
    let mut multipliers: Vec<Matrix> = gens.to_vec();
    for g in gens {
        let inv = g
            .inverse()
            .ok_or_else(|| Error::InvalidParameter("generator is not invertible".into()))?;
        multipliers.push(inv);
    }
    let mut ech = EchelonBasis::new(d * d);
    let mut basis: Vec<Matrix> = Vec::new();
    let mut frontier: Vec<Matrix> = Vec::new();
    for seed in core::iter::once(Matrix::identity(d)).chain(multipliers.iter().cloned()) {
        if ech.insert(vectorize(&seed)) {
            basis.push(seed.clone());
            frontier.push(seed);
        }
    }
    let cap = d * d;
    let mut rounds = 0;
    while !frontier.is_empty() {
        rounds += 1;
        if rounds > cap {
            return Err(Error::Internal(
                "span closure failed to stabilize within dim^2 rounds".into(),
            ));
        }
        let mut next = Vec::new();
        for b in &frontier {
            for g in &multipliers {
                let prod = b.mul(g);
                if ech.insert(vectorize(&prod)) {
                    basis.push(prod.clone());
                    next.push(prod);
                }
            }
        }
        frontier = next;
    }
    Ok((ech.dim(), basis))
}

/// Rows of the linear system `M g = g M` for all `g`, in the `d^2` unknowns
/// `M_{u,v}` (row-major).
fn commutant_rows(gens: &[Matrix], d: usize) -> Vec<Vec<Scalar>> {
    let mut rows = Vec::new();
    for g in gens {
        for r in 0..d {
            for c in 0..d {
                // (M g - g M)_{r,c} = sum_v M_{r,v} g_{v,c} - sum_u g_{r,u} M_{u,c}
                let mut row = vec![Scalar::zero(); d * d];
                for v in 0..d {
                    row[r * d + v] = &row[r * d + v] + g.get(v, c);
                }
                for u in 0..d {
                    row[u * d + c] = &row[u * d + c] - g.get(r, u);
                }
                rows.push(row);
            }
        }
    }
    rows
}

/// Dimension of `{M : M g = g M for all g}`.
pub fn centralizer_dim(gens: &[Matrix], d: usize) -> usize {
    if gens.is_empty() {
        return d * d;
    }
    d * d - rank_of(&commutant_rows(gens, d))
}

/// An explicit matrix basis of the centralizer.
pub fn centralizer_basis(gens: &[Matrix], d: usize) -> Vec<Matrix> {
    let rows = commutant_rows(gens, d);
    nullspace(&rows, d * d)
        .into_iter()
        .map(|v| {
            let mut m = Matrix::zeros(d);
            for r in 0..d {
                for c in 0..d {
                    m.set(r, c, v[r * d + c].clone());
                }
            }
            m
        })
        .collect()
}

/// Dimension of the center: elements of the span of `algebra_basis` that
/// commute with every generator (equivalently, with the whole algebra).
pub fn center_dim(algebra_basis: &[Matrix], gens: &[Matrix], d: usize) -> usize {
    if algebra_basis.is_empty() {
        return 0;
    }
    let nvars = algebra_basis.len();
    let mut rows = Vec::new();
    for g in gens {
        // commutators of each basis element with g
        let comms: Vec<Matrix> = algebra_basis
            .iter()
            .map(|a| {
                let ag = a.mul(g);
                let ga = g.mul(a);
                let mut m = Matrix::zeros(d);
                for r in 0..d {
                    for c in 0..d {
                        m.set(r, c, ag.get(r, c) - ga.get(r, c));
                    }
                }
                m
            })
            .collect();
        for r in 0..d {
            for c in 0..d {
                let row: Vec<Scalar> = comms.iter().map(|m| m.get(r, c).clone()).collect();
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    if rows.is_empty() {
        return nvars;
    }
    nvars - rank_of(&rows)
}

fn trace(m: &Matrix) -> Scalar {
    let mut acc = Scalar::zero();
    for k in 0..m.dim() {
        acc = &acc + m.get(k, k);
    }
    acc
}

/// Rank of the trace form `(a, b) -> trace(a b)` on the given basis. Full
/// rank certifies a zero radical (semisimplicity) in characteristic zero.
pub fn trace_form_rank(algebra_basis: &[Matrix]) -> usize {
    let n = algebra_basis.len();
    let mut gram: Vec<Vec<Scalar>> = Vec::with_capacity(n);
    for a in algebra_basis {
        let row: Vec<Scalar> = algebra_basis.iter().map(|b| trace(&a.mul(b))).collect();
        gram.push(row);
    }
    rank_of(&gram)
}

/// Per-sample dimensional invariants of the generated matrix algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SampleDimensions {
    pub algebra_dim: usize,
    pub centralizer_dim: usize,
    pub center_dim: usize,
    pub trace_form_rank: usize,
    pub double_centralizer_dim: usize,
}

/// Dimensional analysis of the canonical representation at several generic
/// rational `mu` samples, with a stability check across samples.
#[derive(Clone, Debug)]
pub struct DimensionReport {
    pub n: usize,
    pub basis: BasisTag,
    pub mu_samples: Vec<Rational>,
    pub dims: SampleDimensions,
    pub stable: bool,
    /// Per-sample raw values; equal to `dims` everywhere when `stable`.
    pub per_sample: Vec<SampleDimensions>,
    pub block_consistency: String,
}

/// Compute the dimensional invariants at one `mu` sample.
pub fn sample_dimensions(n: usize, basis: BasisTag, mu: &Rational) -> Result<SampleDimensions, Error> {
    let gens: Vec<Matrix> = (1..n)
        .map(|i| canonical_matrix(n, i, basis, &MuValue::Numeric(mu.clone())))
        .collect::<Result<_, _>>()?;
    let d = basis.dim(n);
    let (algebra_dim, algebra_basis) = span_closure(&gens)?;
    let centralizer = centralizer_dim(&gens, d);
    let center = center_dim(&algebra_basis, &gens, d);
    let tf_rank = trace_form_rank(&algebra_basis);
    let cent_basis = centralizer_basis(&gens, d);
    let double_centralizer = centralizer_dim(&cent_basis, d);
    Ok(SampleDimensions {
        algebra_dim,
        centralizer_dim: centralizer,
        center_dim: center,
        trace_form_rank: tf_rank,
        double_centralizer_dim: double_centralizer,
    })
}

/// Search for block dimensions `d_i` (count = `blocks`) and multiplicities
/// `m_i >= 1` with `sum d_i^2 = algebra_dim`, `sum m_i^2 = centralizer_dim`
/// and `sum d_i m_i = rep_dim`. Returns one witness if any exists.
fn block_search(
    blocks: usize,
    algebra_dim: usize,
    centralizer_dim: usize,
    rep_dim: usize,
) -> Option<(Vec<usize>, Vec<usize>)> {
    fn rec(
        blocks: usize,
        min_d: usize,
        rem_a: usize,
        rem_c: usize,
        rem_r: usize,
        ds: &mut Vec<usize>,
        out: &mut Option<(Vec<usize>, Vec<usize>)>,
    ) {
        if out.is_some() {
            return;
        }
        if blocks == 0 {
            if rem_a != 0 {
                return;
            }
            // solve for multiplicities: sum m_i^2 = rem_c, sum d_i m_i = rem_r
            fn rec_m(
                ds: &[usize],
                rem_c: usize,
                rem_r: usize,
                ms: &mut Vec<usize>,
                out: &mut Option<Vec<usize>>,
            ) {
                if out.is_some() {
                    return;
                }
                let Some((&d, rest)) = ds.split_first() else {
                    if rem_c == 0 && rem_r == 0 {
                        *out = Some(ms.clone());
                    }
                    return;
                };
                let mut m = 1;
                while m * m <= rem_c && d * m <= rem_r {
                    ms.push(m);
                    rec_m(rest, rem_c - m * m, rem_r - d * m, ms, out);
                    ms.pop();
                    m += 1;
                }
            }
            let mut found = None;
            rec_m(ds, rem_c, rem_r, &mut Vec::new(), &mut found);
            if let Some(ms) = found {
                *out = Some((ds.clone(), ms));
            }
            return;
        }
        let mut d = min_d;
        while d * d * blocks <= rem_a {
            if d * d <= rem_a {
                ds.push(d);
                rec(blocks - 1, d, rem_a - d * d, rem_c, rem_r, ds, out);
                ds.pop();
            }
            d += 1;
        }
    }
    let mut out = None;
    rec(
        blocks,
        1,
        algebra_dim,
        centralizer_dim,
        rep_dim,
        &mut Vec::new(),
        &mut out,
    );
    out
}

fn block_consistency_text(n: usize, basis: BasisTag, dims: &SampleDimensions) -> String {
    let rep_dim = basis.dim(n);
    let mut text = String::new();
    let semisimple = dims.trace_form_rank == dims.algebra_dim;
    text.push_str(&format!(
        "trace form rank {} of {}: {}. ",
        dims.trace_form_rank,
        dims.algebra_dim,
        if semisimple {
            "nondegenerate, algebra is semisimple at the sampled mu"
        } else {
            "degenerate, nonzero radical at the sampled mu"
        }
    ));
    text.push_str(&format!(
        "double centralizer dimension {} vs algebra dimension {}: {}. ",
        dims.double_centralizer_dim,
        dims.algebra_dim,
        if dims.double_centralizer_dim == dims.algebra_dim {
            "consistent"
        } else {
            "inconsistent"
        }
    ));
    match block_search(dims.center_dim, dims.algebra_dim, dims.centralizer_dim, rep_dim) {
        Some((ds, ms)) => text.push_str(&format!(
            "block structure: {} blocks with dimensions {ds:?} and multiplicities {ms:?} satisfy sum d_i^2 = {}, sum m_i^2 = {}, sum d_i m_i = {rep_dim}.",
            dims.center_dim, dims.algebra_dim, dims.centralizer_dim
        )),
        None => text.push_str(&format!(
            "no block dimensions/multiplicities with {} blocks satisfy sum d_i^2 = {}, sum m_i^2 = {} and sum d_i m_i = {rep_dim} simultaneously; the dimension triple over-determines the decomposition.",
            dims.center_dim, dims.algebra_dim, dims.centralizer_dim
        )),
    }
    text
}

/// Run the dimensional analysis across the given samples; values must agree
/// at every sample or the report is flagged unstable (never averaged).
pub fn dimension_report(
    n: usize,
    basis: BasisTag,
    mu_samples: &[Rational],
) -> Result<DimensionReport, Error> {
    if mu_samples.is_empty() {
        return Err(Error::InvalidParameter("need at least one mu sample".into()));
    }
    let per_sample: Vec<SampleDimensions> = mu_samples
        .iter()
        .map(|mu| sample_dimensions(n, basis, mu))
        .collect::<Result<_, _>>()?;
    let stable = per_sample.iter().all(|s| s == &per_sample[0]);
    let dims = per_sample[0].clone();
    let block_consistency = if stable {
        block_consistency_text(n, basis, &dims)
    } else {
        "UNSTABLE: dimensional invariants differ across samples; see per-sample values".into()
    };
    Ok(DimensionReport {
        n,
        basis,
        mu_samples: mu_samples.to_vec(),
        dims,
        stable,
        per_sample,
        block_consistency,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};

    #[test]
    fn char_poly_identity() {
        let cp = char_poly(&Matrix::identity(3)).unwrap();
        let expect = ScalarPoly::lambda_minus(&Scalar::one()).pow(3);
        assert_eq!(cp, expect);
    }

    #[test]
    fn char_poly_companion() {
        // companion matrix of lambda^2 - 3 lambda + 2
        let m = Matrix::from_rows(vec![
            vec![Scalar::zero(), Scalar::from_i64(-2)],
            vec![Scalar::one(), Scalar::from_i64(3)],
        ]);
        let cp = char_poly(&m).unwrap();
        assert_eq!(
            cp,
            ScalarPoly::new(vec![Scalar::from_i64(2), Scalar::from_i64(-3), Scalar::one()])
        );
    }

    #[test]
    fn char_poly_conjugation_invariant() {
        let m = Matrix::from_rows(vec![
            vec![Scalar::from_i64(1), Scalar::from_i64(2), Scalar::zero()],
            vec![Scalar::from_i64(-1), Scalar::from_i64(4), Scalar::from_i64(5)],
            vec![Scalar::zero(), Scalar::from_i64(1), Scalar::from_i64(-2)],
        ]);
        let s = Matrix::from_rows(vec![
            vec![Scalar::from_i64(1), Scalar::from_i64(1), Scalar::zero()],
            vec![Scalar::zero(), Scalar::from_i64(1), Scalar::from_i64(2)],
            vec![Scalar::from_i64(1), Scalar::zero(), Scalar::from_i64(1)],
        ]);
        let conj = s.mul(&m).mul(&s.inverse().unwrap());
        assert_eq!(char_poly(&m).unwrap(), char_poly(&conj).unwrap());
    }

    #[test]
    fn closure_of_e12_e21() {
        let e12 = Matrix::from_rows(vec![
            vec![Scalar::zero(), Scalar::one()],
            vec![Scalar::zero(), Scalar::zero()],
        ]);
        // E12 is not invertible, so use the invertible pair X = E12+E21, D = diag(1,2):
        // together they generate the full 2x2 matrix algebra
        let x = Matrix::from_rows(vec![
            vec![Scalar::zero(), Scalar::one()],
            vec![Scalar::one(), Scalar::zero()],
        ]);
        let dmat = Matrix::from_rows(vec![
            vec![Scalar::one(), Scalar::zero()],
            vec![Scalar::zero(), Scalar::from_i64(2)],
        ]);
        let (dim, basis) = span_closure(&[x.clone(), dmat.clone()]).unwrap();
        assert_eq!(dim, 4);
        assert_eq!(basis.len(), 4);
        // empty generator list: just the identity span
        assert_eq!(span_closure(&[]).unwrap().0, 1);
        // centralizer of the full matrix algebra is the scalars
        assert_eq!(centralizer_dim(&[x, dmat], 2), 1);
        assert_eq!(centralizer_dim(&[], 2), 4);
        let _ = e12;
    }

    #[test]
    fn center_and_trace_form_small_cases() {
        // full 2x2 matrix algebra
        let e = |r: usize, c: usize| {
            let mut m = Matrix::zeros(2);
            m.set(r, c, Scalar::one());
            m
        };
        let full = vec![e(0, 0), e(0, 1), e(1, 0), e(1, 1)];
        let gens = vec![
            Matrix::from_rows(vec![
                vec![Scalar::zero(), Scalar::one()],
                vec![Scalar::one(), Scalar::zero()],
            ]),
            Matrix::from_rows(vec![
                vec![Scalar::one(), Scalar::zero()],
                vec![Scalar::zero(), Scalar::from_i64(2)],
            ]),
        ];
        assert_eq!(center_dim(&full, &gens, 2), 1);
        assert_eq!(trace_form_rank(&full), 4);
        // diagonal 2x2 matrices: commutative, center = whole algebra
        let diag = vec![e(0, 0), e(1, 1)];
        let dgens = vec![Matrix::from_rows(vec![
            vec![Scalar::one(), Scalar::zero()],
            vec![Scalar::zero(), Scalar::from_i64(2)],
        ])];
        assert_eq!(center_dim(&diag, &dgens, 2), 2);
        // {I, E12}: trace form has rank 1
        let basis = vec![Matrix::identity(2), e(0, 1)];
        assert_eq!(trace_form_rank(&basis), 1);
    }

    #[test]
    fn conjecture_degree_bookkeeping() {
        // 2 + (n-1)^2 + 2(n-1) = n^2 + 1
        for n in 2..=6 {
            assert_eq!(2 + (n - 1) * (n - 1) + 2 * (n - 1), n * n + 1);
        }
        let mu = Scalar::mu();
        let p = conjectured_poly(3, BasisTag::Full, Convention::AsStated, &mu).unwrap();
        assert_eq!(p.degree(), Some(10));
        let p = conjectured_poly(3, BasisTag::Subspace, Convention::AsStated, &mu).unwrap();
        assert_eq!(p.degree(), Some(9));
    }

    #[test]
    fn conjecture_n2_subspace() {
        let report = conjecture_check(2, 1, BasisTag::Subspace, CharPolyMethod::Symbolic).unwrap();
        assert_eq!(report.char_poly.degree(), Some(4));
        assert!(report.determinant.is_one());
        // exactly one convention matches
        assert!(report.matches_as_stated ^ report.matches_flipped);
    }

    #[test]
    fn full_vs_subspace_unit_multiplicity() {
        // full-basis char poly = (lambda - 1) * subspace char poly
        let full = conjecture_check(3, 1, BasisTag::Full, CharPolyMethod::Symbolic).unwrap();
        let sub = conjecture_check(3, 1, BasisTag::Subspace, CharPolyMethod::Symbolic).unwrap();
        let lifted = sub
            .char_poly
            .mul(&ScalarPoly::lambda_minus(&Scalar::one()));
        assert_eq!(full.char_poly, lifted);
    }

    #[test]
    fn interpolated_matches_symbolic_n2() {
        let sym = conjecture_check(2, 1, BasisTag::Subspace, CharPolyMethod::Symbolic).unwrap();
        let itp = conjecture_check(2, 1, BasisTag::Subspace, CharPolyMethod::Interpolated).unwrap();
        assert_eq!(sym.char_poly, itp.char_poly);
        assert_eq!(sym.matches_as_stated, itp.matches_as_stated);
    }

    #[test]
    fn dimension_report_n2() {
        let samples = vec![int(2), rat(5, 3)];
        let report = dimension_report(2, BasisTag::Subspace, &samples).unwrap();
        assert!(report.stable);
        assert!(report.dims.algebra_dim <= 16);
        assert!(report.dims.centralizer_dim >= 1);
    }
}
