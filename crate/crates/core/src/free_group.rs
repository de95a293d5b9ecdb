//! Reduced words in the free group `F_n` and the Artin action of `B_n` on it:
//! `t_j -> t_j` for `j` outside `{i, i+1}`, `t_{i+1} -> t_i`,
//! `t_i -> t_i t_{i+1} t_i^{-1}`. This is the independent oracle against
//! which the algebra-level action is checked.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::braid::BraidWord;
use crate::error::Error;
use crate::report::Report;
use crate::tn::{invert, y_element, ParamSet, TnElement};

/// Freely reduced word in `F_n`: letters `(generator index, exponent sign)`,
/// no adjacent cancelling pair. The empty word is the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeWord {
    letters: Vec<(usize, i8)>,
}

impl FreeWord {
    pub fn identity() -> Self {
        FreeWord { letters: Vec::new() }
    }

    /// The generator `t_i`.
    pub fn generator(i: usize) -> Self {
        FreeWord {
            letters: alloc::vec![(i, 1)],
        }
    }

    /// Free reduction (confluent, so the result is canonical).
    pub fn reduce(letters: impl IntoIterator<Item = (usize, i8)>) -> Self {
        let mut out: Vec<(usize, i8)> = Vec::new();
        for (t, s) in letters {
            match out.last() {
                Some(&(lt, ls)) if lt == t && ls == -s => {
                    out.pop();
                }
                _ => out.push((t, s)),
            }
        }
        FreeWord { letters: out }
    }

    pub fn letters(&self) -> &[(usize, i8)] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord {
            letters: self.letters.iter().rev().map(|&(t, s)| (t, -s)).collect(),
        }
    }

    pub fn concat(&self, rhs: &FreeWord) -> FreeWord {
        FreeWord::reduce(self.letters.iter().chain(rhs.letters.iter()).copied())
    }

    /// `"t1 t2 t1^-1"`; the empty word renders as `"e"`.
    pub fn display(&self) -> String {
        if self.letters.is_empty() {
            return "e".into();
        }
        let parts: Vec<String> = self
            .letters
            .iter()
            .map(|&(t, s)| {
                if s >= 0 {
                    format!("t{t}")
                } else {
                    format!("t{t}^-1")
                }
            })
            .collect();
        parts.join(" ")
    }
}

/// Image of a single free generator under `phi(X_i^{sign})`.
fn generator_image(i: usize, sign: i8, t: usize) -> FreeWord {
    if sign >= 0 {
        if t == i + 1 {
            FreeWord::generator(i)
        } else if t == i {
            // t_i -> t_i t_{i+1} t_i^{-1}
            FreeWord::reduce([(i, 1), (i + 1, 1), (i, -1)])
        } else {
            FreeWord::generator(t)
        }
    } else {
        // inverse automorphism: t_i -> t_{i+1}, t_{i+1} -> t_{i+1}^{-1} t_i t_{i+1}
        if t == i {
            FreeWord::generator(i + 1)
        } else if t == i + 1 {
            FreeWord::reduce([(i + 1, -1), (i, 1), (i + 1, 1)])
        } else {
            FreeWord::generator(t)
        }
    }
}

/// Apply `phi(X_i^{sign})` to a word, letter by letter, then reduce.
pub fn artin_apply(i: usize, sign: i8, w: &FreeWord) -> FreeWord {
    let mut out = FreeWord::identity();
    for &(t, s) in w.letters() {
        let img = generator_image(i, sign, t);
        let img = if s >= 0 { img } else { img.inverse() };
        out = out.concat(&img);
    }
    out
}

/// Apply a braid word (letters left to right, same convention as the matrix
/// side: the first letter acts last on nothing — it is the leftmost factor of
/// the composite automorphism).
pub fn artin_word(w: &BraidWord, v: &FreeWord) -> FreeWord {
    // matrix convention: act_word(g1 g2) = M(g1) M(g2), i.e. g1 applied to the
    // image under g2
    let mut out = v.clone();
    for &(i, sign) in w.letters.iter().rev() {
        out = artin_apply(i, sign, &out);
    }
    out
}

/// Evaluate a free word under the substitution `t_k -> Y_k` in `T_n`.
pub fn eval_in_tn(w: &FreeWord, p: &ParamSet) -> Result<TnElement, Error> {
    let mut acc = TnElement::unit(p.n);
    for &(t, s) in w.letters() {
        if t == 0 || t > p.n {
            return Err(Error::InvalidParameter(format!(
                "generator t{t} out of range for F_{}",
                p.n
            )));
        }
        let y = y_element(t, p);
        let factor = if s >= 0 {
            y
        } else {
            invert(&y, p)?.ok_or_else(|| {
                Error::DegenerateParameter(format!(
                    "beta_{t}*(alpha_{t}*c_{{{t},{t}}}+beta_{t})"
                ))
            })?
        };
        acc = acc.mul(&factor, p);
    }
    Ok(acc)
}

/// Bridge check between the free-group action and the algebra action: for
/// each generator `X_i` and each `j`, `phi(X_i)` applied to `Y_j` (matrix
/// side) must equal the Artin image of `t_j` evaluated under `t_k -> Y_k`.
pub fn compatibility_check(p: &ParamSet) -> Result<Report, Error> {
    let n = p.n;
    let mut report = Report::new();
    for i in 1..n {
        let m = crate::braid::phi_generator(i, 1, p)?;
        for j in 1..=n {
            let yj = y_element(j, p);
            let algebra_side = TnElement::from_coeffs(n, m.mul_vec(yj.coeffs()));
            let word_image = artin_apply(i, 1, &FreeWord::generator(j));
            let word_side = eval_in_tn(&word_image, p)?;
            let instance = format!("(i, j) = ({i}, {j})");
            if algebra_side == word_side {
                report.pass("artin_compatibility", instance);
            } else {
                report.fail(
                    "artin_compatibility",
                    instance,
                    format!(
                        "matrix side = {}, word side = {}",
                        algebra_side.display(),
                        word_side.display()
                    ),
                );
            }
        }
    }
    Ok(report)
}

/// Artin braid relations in `Aut(F_n)`, checked on every generator image.
pub fn verify_artin_relations(n: usize) -> Report {
    let mut report = Report::new();
    let apply_word = |letters: &[(usize, i8)], t: usize| {
        let mut w = FreeWord::generator(t);
        for &(i, sign) in letters.iter().rev() {
            w = artin_apply(i, sign, &w);
        }
        w
    };
    for i in 1..n {
        for j in i + 1..n {
            let (lhs, rhs, name): (Vec<(usize, i8)>, Vec<(usize, i8)>, String) = if j == i + 1 {
                (
                    alloc::vec![(i, 1), (j, 1), (i, 1)],
                    alloc::vec![(j, 1), (i, 1), (j, 1)],
                    format!("X_{i} X_{j} X_{i} = X_{j} X_{i} X_{j}"),
                )
            } else {
                (
                    alloc::vec![(i, 1), (j, 1)],
                    alloc::vec![(j, 1), (i, 1)],
                    format!("X_{i} X_{j} = X_{j} X_{i}"),
                )
            };
            let mut bad = None;
            for t in 1..=n {
                let a = apply_word(&lhs, t);
                let b = apply_word(&rhs, t);
                if a != b {
                    bad = Some(format!("t{t}: {} vs {}", a.display(), b.display()));
                    break;
                }
            }
            match bad {
                None => report.pass("artin_braid_relation", name),
                Some(cert) => report.fail("artin_braid_relation", name, cert),
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::{canonical_params, MuValue};

    #[test]
    fn reduction_examples() {
        // t1 t2 t2^-1 t3 -> t1 t3
        let w = FreeWord::reduce([(1, 1), (2, 1), (2, -1), (3, 1)]);
        assert_eq!(w.letters(), &[(1, 1), (3, 1)]);
        assert!(FreeWord::reduce([(1, 1), (1, -1)]).is_empty());
        let reduced = FreeWord::reduce([(1, 1), (2, -1), (1, 1)]);
        assert_eq!(reduced.letters(), &[(1, 1), (2, -1), (1, 1)]);
    }

    #[test]
    fn artin_generator_images() {
        // (i=1,+1): t1 -> t1 t2 t1^-1, t2 -> t1, t3 -> t3
        let t1 = artin_apply(1, 1, &FreeWord::generator(1));
        assert_eq!(t1.letters(), &[(1, 1), (2, 1), (1, -1)]);
        let t2 = artin_apply(1, 1, &FreeWord::generator(2));
        assert_eq!(t2, FreeWord::generator(1));
        let t3 = artin_apply(1, 1, &FreeWord::generator(3));
        assert_eq!(t3, FreeWord::generator(3));
        // (i=1,-1): t1 -> t2, t2 -> t2^-1 t1 t2
        let t1 = artin_apply(1, -1, &FreeWord::generator(1));
        assert_eq!(t1, FreeWord::generator(2));
        let t2 = artin_apply(1, -1, &FreeWord::generator(2));
        assert_eq!(t2.letters(), &[(2, -1), (1, 1), (2, 1)]);
    }

    #[test]
    fn artin_inverse_roundtrip() {
        let w = FreeWord::reduce([(1, 1), (3, -1), (2, 1), (2, 1), (1, -1)]);
        for i in 1..=2 {
            assert_eq!(artin_apply(i, -1, &artin_apply(i, 1, &w)), w);
            assert_eq!(artin_apply(i, 1, &artin_apply(i, -1, &w)), w);
        }
    }

    #[test]
    fn artin_relations_small_n() {
        for n in 2..=6 {
            let report = verify_artin_relations(n);
            assert!(report.all_pass(), "n = {n}");
        }
    }

    #[test]
    fn braid_words_agree_on_generators() {
        // X1 X2 X1 and X2 X1 X2 agree on t1, t2, t3
        let w1 = BraidWord::new(3, alloc::vec![(1, 1), (2, 1), (1, 1)]).unwrap();
        let w2 = BraidWord::new(3, alloc::vec![(2, 1), (1, 1), (2, 1)]).unwrap();
        for t in 1..=3 {
            let v = FreeWord::generator(t);
            assert_eq!(artin_word(&w1, &v), artin_word(&w2, &v));
        }
        // X1 X3 and X3 X1 agree (n = 4)
        let w1 = BraidWord::new(4, alloc::vec![(1, 1), (3, 1)]).unwrap();
        let w2 = BraidWord::new(4, alloc::vec![(3, 1), (1, 1)]).unwrap();
        for t in 1..=4 {
            let v = FreeWord::generator(t);
            assert_eq!(artin_word(&w1, &v), artin_word(&w2, &v));
        }
    }

    #[test]
    fn compatibility_on_canonical_params() {
        for n in 2..=4 {
            let p = canonical_params(n, &MuValue::Symbolic).unwrap();
            let report = compatibility_check(&p).unwrap();
            assert!(
                report.all_pass(),
                "n = {n}, failures: {:?}",
                report.failures().collect::<Vec<_>>()
            );
        }
    }
}
