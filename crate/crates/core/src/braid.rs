//! The braid group action on `T_n`: generator matrices, their inverses, the
//! parameter-constraint machinery (obstruction coefficient, C1-C3), the
//! canonical one-parameter family, braid-word evaluation and relation
//! verification.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::exact::{Rational, Scalar};
use crate::matrix::Matrix;
use crate::report::Report;
use crate::tn::{self, dim, invert, y_element, BasisIndex, ParamMode, ParamSet, TnElement};

/// Signed braid word in `B_n`: letters `(i, sign)` with `1 <= i <= n-1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraidWord {
    pub n: usize,
    pub letters: Vec<(usize, i8)>,
}

impl BraidWord {
    pub fn new(n: usize, letters: Vec<(usize, i8)>) -> Result<Self, Error> {
        for &(i, sign) in &letters {
            if i == 0 || i >= n {
                return Err(Error::InvalidParameter(format!(
                    "generator index {i} out of range for B_{n}"
                )));
            }
            if sign != 1 && sign != -1 {
                return Err(Error::InvalidParameter("sign must be +1 or -1".into()));
            }
        }
        Ok(BraidWord { n, letters })
    }

    pub fn identity(n: usize) -> Self {
        BraidWord {
            n,
            letters: Vec::new(),
        }
    }
}

/// The value of `mu` for the canonical family: a rational sample or the
/// symbolic indeterminate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MuValue {
    Symbolic,
    Numeric(Rational),
}

impl MuValue {
    pub fn to_scalar(&self) -> Scalar {
        match self {
            MuValue::Symbolic => Scalar::mu(),
            MuValue::Numeric(r) => Scalar::Rat(r.clone()),
        }
    }
}

/// Canonical one-parameter family: all `c_{i,j} = 1`, all `beta_i = 1`, all
/// `alpha_i = mu`. C1-C3 hold by construction, and with `c = 1` the stated
/// parameter `c^2 alpha_1 / beta` and the matrix-effective ratio
/// `c alpha_1 / beta` coincide, both equal to `mu` (see
/// [`effective_mu_candidates`]).
pub fn canonical_params(n: usize, mu: &MuValue) -> Result<ParamSet, Error> {
    if n < 2 {
        return Err(Error::InvalidParameter(
            "canonical parameters need n >= 2".into(),
        ));
    }
    if let MuValue::Numeric(r) = mu {
        use num_traits::Zero;
        if r.is_zero() {
            return Err(Error::DegenerateParameter("mu (alpha would vanish)".into()));
        }
        if (r + Rational::from_integer(1.into())).is_zero() {
            return Err(Error::DegenerateParameter("1 + mu".into()));
        }
    }
    let m = mu.to_scalar();
    let c = vec![vec![Scalar::one(); n]; n];
    let alpha = vec![m; n];
    let beta = vec![Scalar::one(); n];
    Ok(ParamSet::generic(n, c, alpha, beta, true)?.with_mode(ParamMode::Canonical))
}

/// The two candidate formulas for the single effective parameter of a
/// constrained (C1-C3) parameter set: `c^2 alpha_1 / beta` as stated, and the
/// ratio `c alpha_1 / beta` that actually drives the matrix entries. They
/// agree exactly when `c = 1`.
pub fn effective_mu_candidates(p: &ParamSet) -> Result<(Scalar, Scalar), Error> {
    let c = p.c(1, 1);
    let a = p.alpha(1);
    let b = p.beta(1);
    let stated = &(&(c * c) * a).div(b)?;
    let effective = &(c * a).div(b)?;
    Ok((stated.clone(), effective.clone()))
}

/// Image of the diagonal generators under `phi(X_i^{sign})`, as elements of
/// `T_n`. Index 0 of the returned vector is unused padding; entry `j` is the
/// image of `f_{j,j}`.
fn diagonal_images(i: usize, sign: i8, p: &ParamSet) -> Result<Vec<TnElement>, Error> {
    let n = p.n;
    let mut images: Vec<TnElement> = (0..=n)
        .map(|j| {
            if j == 0 {
                TnElement::zero(n)
            } else {
                TnElement::basis(n, BasisIndex::Pair(j, j))
            }
        })
        .collect();
    let yi = y_element(i, p);
    let yi1 = y_element(i + 1, p);
    let alpha_inv = p.alpha(i).inv().map_err(|_| {
        Error::DegenerateParameter(format!("alpha_{i}"))
    })?;
    let beta_unit = TnElement::unit(n).scale(p.beta(i));
    match sign {
        1 => {
            // f_{i+1,i+1} -> f_{i,i};  f_{i,i} -> alpha_i^{-1} (Y_i Y_{i+1} Y_i^{-1} - beta_i)
            images[i + 1] = TnElement::basis(n, BasisIndex::Pair(i, i));
            let yi_inv = invert(&yi, p)?.ok_or_else(|| {
                Error::DegenerateParameter(format!("beta_{i}*(alpha_{i}*c_{{{i},{i}}}+beta_{i})"))
            })?;
            let conj = yi.mul(&yi1, p).mul(&yi_inv, p);
            images[i] = conj.sub(&beta_unit).scale(&alpha_inv);
        }
        -1 => {
            // f_{i,i} -> f_{i+1,i+1};  f_{i+1,i+1} -> alpha_i^{-1} (Y_{i+1}^{-1} Y_i Y_{i+1} - beta_i)
            images[i] = TnElement::basis(n, BasisIndex::Pair(i + 1, i + 1));
            let yi1_inv = invert(&yi1, p)?.ok_or_else(|| {
                let k = i + 1;
                Error::DegenerateParameter(format!("beta_{k}*(alpha_{k}*c_{{{k},{k}}}+beta_{k})"))
            })?;
            let conj = yi1_inv.mul(&yi, p).mul(&yi1, p);
            images[i + 1] = conj.sub(&beta_unit).scale(&alpha_inv);
        }
        _ => return Err(Error::InvalidParameter("sign must be +1 or -1".into())),
    }
    Ok(images)
}

/// Full-basis matrix of `phi(X_i)` (`sign = +1`) or `phi(X_i^{-1})`
/// (`sign = -1`). Columns are images of basis vectors in the order
/// `1, f_{1,1}, ..., f_{n,n}`.
///
/// Off-diagonal images use the general reading
/// `phi(f_{k,l}) = phi(f_{k,k}) phi(f_{l,l}) c_{k,l}^{-1}` for all `k != l`,
/// consistent with `f_{k,k} f_{l,l} = c_{k,l} f_{k,l}`.
pub fn phi_generator(i: usize, sign: i8, p: &ParamSet) -> Result<Matrix, Error> {
    let n = p.n;
    if i == 0 || i >= n {
        return Err(Error::InvalidParameter(format!(
            "generator index {i} out of range for B_{n}"
        )));
    }
    let diag = diagonal_images(i, sign, p)?;
    let d = dim(n);
    let mut m = Matrix::zeros(d);
    // unit column
    m.set(0, 0, Scalar::one());
    for k in 1..=n {
        for l in 1..=n {
            let img = if k == l {
                diag[k].clone()
            } else {
                let c_inv = p.c(k, l).inv().map_err(|_| {
                    Error::DegenerateParameter(format!("c_{{{k},{l}}}"))
                })?;
                diag[k].mul(&diag[l], p).scale(&c_inv)
            };
            let col = BasisIndex::Pair(k, l).offset(n);
            for (row, v) in img.coeffs().iter().enumerate() {
                if !v.is_zero() {
                    m.set(row, col, v.clone());
                }
            }
        }
    }
    Ok(m)
}

/// Restriction of a full-basis matrix to the span of the `f_{i,j}`.
/// Errors if the subspace is not invariant or the unit is not fixed.
pub fn subspace_matrix(full: &Matrix, n: usize) -> Result<Matrix, Error> {
    let d = dim(n);
    assert_eq!(full.dim(), d);
    if !full.get(0, 0).is_one() {
        return Err(Error::Internal("unit is not fixed".into()));
    }
    for c in 1..d {
        if !full.get(0, c).is_zero() {
            return Err(Error::Internal(format!(
                "f-span is not invariant: unit row entry at column {c} is {}",
                full.get(0, c)
            )));
        }
    }
    let mut m = Matrix::zeros(d - 1);
    for r in 1..d {
        for c in 1..d {
            m.set(r - 1, c - 1, full.get(r, c).clone());
        }
    }
    Ok(m)
}

/// Evaluate a braid word: the product of generator matrices in word order
/// (letters left to right become matrix factors left to right).
pub fn act_word(w: &BraidWord, p: &ParamSet) -> Result<Matrix, Error> {
    assert_eq!(w.n, p.n);
    let mut acc = Matrix::identity(dim(p.n));
    for &(i, sign) in &w.letters {
        acc = acc.mul(&phi_generator(i, sign, p)?);
    }
    Ok(acc)
}

/// Expansion of `phi(X_i)(f_{i,i})^2 - c_{i,i} phi(X_i)(f_{i,i})` in the
/// basis — the defect of the quadratic relation under the action.
fn quadratic_defect(i: usize, p: &ParamSet) -> Result<TnElement, Error> {
    let diag = diagonal_images(i, 1, p)?;
    let img = &diag[i];
    Ok(img.mul(img, p).sub(&img.scale(p.c(i, i))))
}

/// Unit coefficient of the quadratic-relation defect, by direct expansion.
pub fn obstruction_unit_coeff(i: usize, p: &ParamSet) -> Result<Scalar, Error> {
    Ok(quadratic_defect(i, p)?.coeff(BasisIndex::Unit).clone())
}

/// The closed form `alpha_i^{-2} (beta_i - beta_{i+1})
/// (c_{i,i} alpha_i + beta_i - beta_{i+1})` for the unit coefficient.
pub fn obstruction_closed_form(i: usize, p: &ParamSet) -> Result<Scalar, Error> {
    let a_inv2 = p.alpha(i).inv()?.pow(2);
    let db = p.beta(i) - p.beta(i + 1);
    let second = &(p.c(i, i) * p.alpha(i)) + &db;
    Ok(&(&a_inv2 * &db) * &second)
}

/// `f_{i,i}` coefficient of the quadratic-relation defect. With C1 imposed it
/// vanishes exactly when `alpha_{i+1} = c_{i,i} alpha_i / c_{i+1,i+1}` (C2).
pub fn fjj_coefficient_probe(i: usize, p: &ParamSet) -> Result<Scalar, Error> {
    Ok(quadratic_defect(i, p)?
        .coeff(BasisIndex::Pair(i, i))
        .clone())
}

fn relation_entry(report: &mut Report, check: &str, instance: String, lhs: &Matrix, rhs: &Matrix) {
    match lhs.first_difference(rhs) {
        None => report.pass(check, instance),
        Some((r, c, a, b)) => report.fail(
            check,
            instance,
            format!("entry ({r},{c}): lhs = {a}, rhs = {b}"),
        ),
    }
}

/// Check both braid relation families on the generator matrices. Failures
/// carry the first differing entry as an exact certificate.
pub fn verify_braid_relations(p: &ParamSet) -> Result<Report, Error> {
    let n = p.n;
    let mut report = Report::new();
    let gens: Vec<Matrix> = (1..n)
        .map(|i| phi_generator(i, 1, p))
        .collect::<Result<_, _>>()?;
    for i in 1..n {
        for j in i + 1..n {
            let (gi, gj) = (&gens[i - 1], &gens[j - 1]);
            if j == i + 1 {
                let lhs = gi.mul(gj).mul(gi);
                let rhs = gj.mul(gi).mul(gj);
                relation_entry(
                    &mut report,
                    "braid_relation",
                    format!("X_{i} X_{j} X_{i} = X_{j} X_{i} X_{j}"),
                    &lhs,
                    &rhs,
                );
            } else {
                let lhs = gi.mul(gj);
                let rhs = gj.mul(gi);
                relation_entry(
                    &mut report,
                    "commuting_relation",
                    format!("X_{i} X_{j} = X_{j} X_{i}"),
                    &lhs,
                    &rhs,
                );
            }
        }
    }
    Ok(report)
}

/// Check `phi(X_i) phi(X_i^{-1}) = 1` for every generator.
pub fn verify_inverses(p: &ParamSet) -> Result<Report, Error> {
    let n = p.n;
    let mut report = Report::new();
    let id = Matrix::identity(dim(n));
    for i in 1..n {
        let fwd = phi_generator(i, 1, p)?;
        let bwd = phi_generator(i, -1, p)?;
        relation_entry(
            &mut report,
            "inverse",
            format!("phi(X_{i}) phi(X_{i}^-1) = 1"),
            &fwd.mul(&bwd),
            &id,
        );
        relation_entry(
            &mut report,
            "inverse",
            format!("phi(X_{i}^-1) phi(X_{i}) = 1"),
            &bwd.mul(&fwd),
            &id,
        );
    }
    Ok(report)
}

/// Check that the unit row and column of every full-basis generator matrix
/// are the unit vector: `1` is fixed and the `f`-span is invariant.
pub fn verify_subspace_preservation(p: &ParamSet) -> Result<Report, Error> {
    let n = p.n;
    let d = dim(n);
    let mut report = Report::new();
    for i in 1..n {
        for sign in [1i8, -1] {
            let m = phi_generator(i, sign, p)?;
            let mut bad = None;
            if !m.get(0, 0).is_one() {
                bad = Some(format!("entry (0,0) = {}", m.get(0, 0)));
            }
            for k in 1..d {
                if !m.get(0, k).is_zero() {
                    bad = Some(format!("unit row entry (0,{k}) = {}", m.get(0, k)));
                    break;
                }
                if !m.get(k, 0).is_zero() {
                    bad = Some(format!("unit column entry ({k},0) = {}", m.get(k, 0)));
                    break;
                }
            }
            let instance = format!("phi(X_{i}^{sign})");
            match bad {
                None => report.pass("subspace_preservation", instance),
                Some(cert) => report.fail("subspace_preservation", instance, cert),
            }
        }
    }
    Ok(report)
}

/// For every pair of basis elements `(a, b)`, compare `phi(a b)` with
/// `phi(a) phi(b)` — whether the module map is also an algebra map.
pub fn endomorphism_diagnostic(i: usize, p: &ParamSet) -> Result<Report, Error> {
    let n = p.n;
    let m = phi_generator(i, 1, p)?;
    let mut report = Report::new();
    // cache images of basis vectors
    let images: Vec<TnElement> = BasisIndex::all(n)
        .map(|idx| {
            TnElement::from_coeffs(n, m.mul_vec(TnElement::basis(n, idx).coeffs()))
        })
        .collect();
    for (ka, a) in BasisIndex::all(n).enumerate() {
        for (kb, b) in BasisIndex::all(n).enumerate() {
            let prod = tn::mul_basis(a, b, p);
            let lhs = TnElement::from_coeffs(n, m.mul_vec(prod.coeffs()));
            let rhs = images[ka].mul(&images[kb], p);
            let instance = format!("phi(X_{i}): ({a}, {b})");
            if lhs == rhs {
                report.pass("endomorphism", instance);
            } else {
                report.fail(
                    "endomorphism",
                    instance,
                    format!("phi(a*b) = {}, phi(a)*phi(b) = {}", lhs.display(), rhs.display()),
                );
            }
        }
    }
    Ok(report)
}

/// Verify the obstruction identities on the given parameter set: the direct
/// expansion of the unit coefficient against the closed form, and (under
/// C1-C3) the vanishing of both probes.
pub fn verify_obstructions(p: &ParamSet) -> Result<Report, Error> {
    let mut report = Report::new();
    for i in 1..p.n {
        let direct = obstruction_unit_coeff(i, p)?;
        let closed = obstruction_closed_form(i, p)?;
        let instance = format!("i = {i}");
        if direct == closed {
            report.pass("obstruction_closed_form", instance.clone());
        } else {
            report.fail(
                "obstruction_closed_form",
                instance.clone(),
                format!("expansion = {direct}, closed form = {closed}"),
            );
        }
        if p.satisfies_constraints() {
            if direct.is_zero() {
                report.pass("obstruction_vanishes_under_C1", instance.clone());
            } else {
                report.fail(
                    "obstruction_vanishes_under_C1",
                    instance.clone(),
                    format!("unit coefficient = {direct}"),
                );
            }
            let probe = fjj_coefficient_probe(i, p)?;
            if probe.is_zero() {
                report.pass("fjj_probe_vanishes_under_C2", instance);
            } else {
                report.fail(
                    "fjj_probe_vanishes_under_C2",
                    instance,
                    format!("f_{{i,i}} coefficient = {probe}"),
                );
            }
        }
    }
    Ok(report)
}

/// String form of a signed braid letter, e.g. `X_2` or `X_2^-1`.
pub fn letter_display(letter: (usize, i8)) -> String {
    let (i, sign) = letter;
    if sign >= 0 {
        format!("X_{i}")
    } else {
        format!("X_{i}^-1")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn canonical(n: usize) -> ParamSet {
        canonical_params(n, &MuValue::Symbolic).unwrap()
    }

    #[test]
    fn fip1_maps_to_fii() {
        let p = canonical(3);
        let m = phi_generator(1, 1, &p).unwrap();
        // column of f_{2,2} is the unit vector at f_{1,1}
        let col = BasisIndex::Pair(2, 2).offset(3);
        let row = BasisIndex::Pair(1, 1).offset(3);
        for r in 0..dim(3) {
            let expect = if r == row { Scalar::one() } else { Scalar::zero() };
            assert_eq!(m.get(r, col), &expect);
        }
    }

    #[test]
    fn b1_first_column_matches_mu_pattern() {
        let p = canonical(3);
        let full = phi_generator(1, 1, &p).unwrap();
        let m = subspace_matrix(&full, 3).unwrap();
        let mu = Scalar::mu();
        let one_plus = &Scalar::one() + &mu;
        // column f_{1,1}: -mu^2/(1+mu), mu, 0, -mu/(1+mu), 1, 0, 0, 0, 0
        let expect = [
            (&(&mu * &mu).div(&one_plus).unwrap()).clone(),
            mu.clone(),
            Scalar::zero(),
            mu.div(&one_plus).unwrap(),
            Scalar::one(),
        ];
        assert_eq!(m.get(0, 0), &-&expect[0]);
        assert_eq!(m.get(1, 0), &expect[1]);
        assert_eq!(m.get(2, 0), &expect[2]);
        assert_eq!(m.get(3, 0), &-&expect[3]);
        assert_eq!(m.get(4, 0), &expect[4]);
    }

    #[test]
    fn generator_times_inverse_is_identity() {
        for n in 2..=4 {
            let p = canonical(n);
            for i in 1..n {
                let fwd = phi_generator(i, 1, &p).unwrap();
                let bwd = phi_generator(i, -1, &p).unwrap();
                assert!(fwd.mul(&bwd).is_identity(), "n={n} i={i}");
                assert!(bwd.mul(&fwd).is_identity(), "n={n} i={i}");
            }
        }
    }

    #[test]
    fn braid_relations_symbolic_small() {
        for n in 2..=4 {
            let p = canonical(n);
            let report = verify_braid_relations(&p).unwrap();
            assert!(report.all_pass(), "failures: {:?}", report.failures().collect::<Vec<_>>());
        }
    }

    #[test]
    fn braid_relation_as_words() {
        let p = canonical(3);
        let w1 = BraidWord::new(3, vec![(1, 1), (2, 1), (1, 1)]).unwrap();
        let w2 = BraidWord::new(3, vec![(2, 1), (1, 1), (2, 1)]).unwrap();
        assert_eq!(act_word(&w1, &p).unwrap(), act_word(&w2, &p).unwrap());
        // empty word and X1 X1^-1 give the identity
        let id = act_word(&BraidWord::identity(3), &p).unwrap();
        assert!(id.is_identity());
        let w = BraidWord::new(3, vec![(1, 1), (1, -1)]).unwrap();
        assert!(act_word(&w, &p).unwrap().is_identity());
    }

    #[test]
    fn obstruction_hand_computed_example() {
        // alpha_1=1, alpha_2=2, beta_1=1, beta_2=2, c_{1,1}=3 -> -2
        let c = vec![
            vec![Scalar::from_i64(3), Scalar::from_i64(5)],
            vec![Scalar::from_i64(5), Scalar::from_i64(7)],
        ];
        let p = ParamSet::generic(
            2,
            c,
            vec![Scalar::one(), Scalar::from_i64(2)],
            vec![Scalar::one(), Scalar::from_i64(2)],
            true,
        )
        .unwrap();
        let direct = obstruction_unit_coeff(1, &p).unwrap();
        assert_eq!(direct, Scalar::from_i64(-2));
        assert_eq!(obstruction_closed_form(1, &p).unwrap(), Scalar::from_i64(-2));
    }

    #[test]
    fn obstruction_vanishes_with_equal_beta() {
        let c = vec![
            vec![Scalar::from_i64(2), Scalar::from_i64(3)],
            vec![Scalar::from_i64(3), Scalar::from_i64(5)],
        ];
        let p = ParamSet::generic(
            2,
            c,
            vec![Scalar::from_i64(4), Scalar::from_i64(7)],
            vec![Scalar::from_i64(6), Scalar::from_i64(6)],
            true,
        )
        .unwrap();
        assert!(obstruction_unit_coeff(1, &p).unwrap().is_zero());
    }

    #[test]
    fn fjj_probe_detects_c2() {
        // C1 imposed, C2 satisfied: alpha_2 = c_{1,1} alpha_1 / c_{2,2}
        let c = vec![
            vec![Scalar::from_i64(2), Scalar::from_i64(3)],
            vec![Scalar::from_i64(3), Scalar::from_i64(5)],
        ];
        let beta = vec![Scalar::from_i64(4), Scalar::from_i64(4)];
        // C2 reads alpha_2 = c_{1,1} alpha_1 / c_{2,2} = 2*5/5 = 2
        let alpha_ok = vec![Scalar::from_i64(5), Scalar::from_i64(2)];
        let p_ok = ParamSet::generic(2, c.clone(), alpha_ok, beta.clone(), true).unwrap();
        assert!(fjj_coefficient_probe(1, &p_ok).unwrap().is_zero());
        // perturb alpha_2 off C2
        let alpha_bad = vec![Scalar::from_i64(5), Scalar::from_i64(3)];
        let p_bad = ParamSet::generic(2, c, alpha_bad, beta, true).unwrap();
        assert!(!fjj_coefficient_probe(1, &p_bad).unwrap().is_zero());
    }

    #[test]
    fn canonical_mu_guards() {
        assert!(matches!(
            canonical_params(3, &MuValue::Numeric(rat(0, 1))),
            Err(Error::DegenerateParameter(_))
        ));
        assert!(matches!(
            canonical_params(3, &MuValue::Numeric(rat(-1, 1))),
            Err(Error::DegenerateParameter(_))
        ));
        assert!(canonical_params(3, &MuValue::Numeric(rat(1, 2))).is_ok());
    }

    #[test]
    fn effective_mu_agrees_at_c_one() {
        let p = canonical(3);
        let (stated, effective) = effective_mu_candidates(&p).unwrap();
        assert_eq!(stated, Scalar::mu());
        assert_eq!(effective, Scalar::mu());
    }

    #[test]
    fn endomorphism_sweep_canonical_n3() {
        let p = canonical(3);
        for i in 1..3 {
            let report = endomorphism_diagnostic(i, &p).unwrap();
            assert!(
                report.all_pass(),
                "mismatches: {:?}",
                report.failures().collect::<Vec<_>>()
            );
        }
    }
}
