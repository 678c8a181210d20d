//! Newform classes: eigenvalue data ingestion and the exact arithmetic on
//! it — norms, splitting of small primes in the coefficient ring, residue
//! maps modulo primes above l, Eisenstein detection and field-generation
//! tests.
//!
//! Eigenvalues are not computed here; they are ingested from JSON files
//! (see [`load_newforms`] for the schema) exported from a modular-forms
//! database. Residue maps read the splitting of l off the factorization
//! of the generator's minimal polynomial mod l, which is valid exactly
//! because the data file asserts l does not divide the index of
//! Z[generator] in the full coefficient ring.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Deserialize;

use crate::arith::hensel::hensel_lift_root;
use crate::arith::modular::{inv_mod, mul_mod, sub_mod, Residue};
use crate::arith::modpoly::{factor_mod_l, ModPoly};
use crate::arith::poly::{resultant, IntPoly};
use crate::arith::primes::is_prime;
use crate::error::{Error, Result};

/// A newform class: a Galois-conjugacy class of weight-2 newforms of the
/// given level, carried as one object with coefficients in the number
/// field generated by `min_poly`.
#[derive(Debug, Clone)]
pub struct NewformClass {
    level: u64,
    degree: usize,
    label: Option<String>,
    min_poly: IntPoly,
    index_coprime_to: Vec<u64>,
    /// prime -> eigenvalue as a polynomial in the generator, ascending
    /// rational coefficients
    eigenvalues: BTreeMap<u64, Vec<BigRational>>,
}

/// A prime of the coefficient ring above l, read off the factorization of
/// the generator's minimal polynomial mod l.
#[derive(Debug, Clone)]
pub struct PrimeAboveL {
    pub l: u64,
    pub inertia_degree: usize,
    pub ramified: bool,
    pub multiplicity: u32,
    pub local_factor: ModPoly,
    /// for inertia degree 1: the root of the linear factor mod l
    pub residue_root: Option<u64>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawLevelFile {
    level: u64,
    classes: Vec<RawClass>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawClass {
    #[serde(default)]
    label: Option<String>,
    degree: usize,
    min_poly: Vec<i64>,
    index_coprime_to: Vec<u64>,
    eigenvalues: BTreeMap<String, Vec<(i64, i64)>>,
}

/// Parses and validates one level's worth of newform classes from the
/// JSON interchange format:
///
/// ```json
/// { "level": 71,
///   "classes": [ { "label": "71.2.a.a", "degree": 3,
///                  "min_poly": [25, -2, -5, 1],
///                  "index_coprime_to": [3],
///                  "eigenvalues": { "5": [[0,1],[1,1]] } } ] }
/// ```
///
/// Validation is strict: unknown keys, non-monic minimal polynomials,
/// degree mismatches, non-prime eigenvalue keys, zero denominators,
/// denominators clashing with `index_coprime_to`, and duplicate
/// (level, label) pairs are all rejected.
pub fn load_newforms(bytes: &[u8]) -> Result<Vec<NewformClass>> {
    let raw: RawLevelFile = serde_json::from_slice(bytes)?;
    let mut seen_labels: BTreeSet<String> = BTreeSet::new();
    let mut out = Vec::with_capacity(raw.classes.len());
    for rc in raw.classes {
        if let Some(label) = &rc.label {
            if !seen_labels.insert(label.clone()) {
                return Err(Error::Data(format!(
                    "duplicate class label {label} at level {}",
                    raw.level
                )));
            }
        }
        let min_poly = IntPoly::from_i64(&rc.min_poly);
        if !min_poly.is_monic() {
            return Err(Error::NotMonic);
        }
        let degree = min_poly.degree().unwrap_or(0);
        if degree != rc.degree || degree == 0 {
            return Err(Error::Data(format!(
                "declared degree {} does not match min_poly degree {degree}",
                rc.degree
            )));
        }
        if !min_poly.is_squarefree() {
            return Err(Error::Data("min_poly is not squarefree over Q".into()));
        }
        let mut eigenvalues = BTreeMap::new();
        for (key, pairs) in rc.eigenvalues {
            let p: u64 = key
                .parse()
                .map_err(|_| Error::Data(format!("eigenvalue key {key} is not an integer")))?;
            if !is_prime(p) {
                return Err(Error::Data(format!("eigenvalue key {p} is not prime")));
            }
            if pairs.len() > degree {
                return Err(Error::Data(format!(
                    "eigenvalue a_{p} has more coefficients than the field degree"
                )));
            }
            let mut coeffs = Vec::with_capacity(pairs.len());
            for (num, den) in pairs {
                if den == 0 {
                    return Err(Error::Data(format!("zero denominator in a_{p}")));
                }
                for &l in &rc.index_coprime_to {
                    if den.unsigned_abs() % l == 0 {
                        return Err(Error::Data(format!(
                            "denominator {den} of a_{p} clashes with index_coprime_to {l}"
                        )));
                    }
                }
                coeffs.push(BigRational::new(BigInt::from(num), BigInt::from(den)));
            }
            eigenvalues.insert(p, coeffs);
        }
        out.push(NewformClass {
            level: raw.level,
            degree,
            label: rc.label,
            min_poly,
            index_coprime_to: rc.index_coprime_to,
            eigenvalues,
        });
    }
    Ok(out)
}

impl NewformClass {
    /// Constructs a class directly; used for built-in fixtures and tests.
    pub fn from_parts(
        level: u64,
        label: Option<&str>,
        min_poly: IntPoly,
        index_coprime_to: &[u64],
        eigenvalues: &[(u64, Vec<(i64, i64)>)],
    ) -> Result<Self> {
        if !min_poly.is_monic() {
            return Err(Error::NotMonic);
        }
        let degree = min_poly.degree().unwrap();
        let mut map = BTreeMap::new();
        for (p, pairs) in eigenvalues {
            let coeffs = pairs
                .iter()
                .map(|&(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
                .collect();
            map.insert(*p, coeffs);
        }
        Ok(NewformClass {
            level,
            degree,
            label: label.map(str::to_owned),
            min_poly,
            index_coprime_to: index_coprime_to.to_vec(),
            eigenvalues: map,
        })
    }

    pub fn level(&self) -> u64 {
        self.level
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn min_poly(&self) -> &IntPoly {
        &self.min_poly
    }

    pub fn has_eigenvalue(&self, p: u64) -> bool {
        self.eigenvalues.contains_key(&p)
    }

    pub fn eigenvalue_primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.eigenvalues.keys().copied()
    }

    fn display_label(&self) -> String {
        self.label
            .clone()
            .unwrap_or_else(|| format!("degree-{} class", self.degree))
    }

    fn eigenvalue(&self, p: u64) -> Result<&Vec<BigRational>> {
        self.eigenvalues.get(&p).ok_or_else(|| Error::MissingEigenvalue {
            level: self.level,
            label: self.display_label(),
            p,
        })
    }

    /// trace of a_2 over the conjugates; the disambiguator used when two
    /// classes of a level share a degree.
    pub fn trace_a2(&self) -> Result<BigRational> {
        let h = self.eigenvalue(2)?;
        self.trace_of_poly(h)
    }

    /// Trace of h(generator): sum over the roots of min_poly, computed
    /// from Newton power sums of the minimal polynomial.
    fn trace_of_poly(&self, h: &[BigRational]) -> Result<BigRational> {
        let d = self.degree;
        // power sums s_k = sum theta_i^k via Newton's identities
        let mut power_sums: Vec<BigRational> = vec![BigRational::from(BigInt::from(d as i64))];
        let e = |i: usize| -> BigRational {
            // elementary symmetric e_i with sign from coefficients:
            // min_poly = x^d + c_{d-1} x^{d-1} + ... ; e_i = (-1)^i c_{d-i}
            let c = BigRational::from(self.min_poly.coeff(d - i));
            if i % 2 == 1 {
                -c
            } else {
                c
            }
        };
        for k in 1..d {
            // s_k = e_1 s_{k-1} - e_2 s_{k-2} + ... + (-1)^(k-1) k e_k
            let mut s = BigRational::zero();
            for i in 1..k {
                let term = e(i) * &power_sums[k - i];
                if i % 2 == 1 {
                    s += term;
                } else {
                    s -= term;
                }
            }
            let last = BigRational::from(BigInt::from(k as i64)) * e(k);
            if k % 2 == 1 {
                s += last;
            } else {
                s -= last;
            }
            power_sums.push(s);
        }
        let mut tr = BigRational::zero();
        for (i, c) in h.iter().enumerate() {
            tr += c * &power_sums[i];
        }
        Ok(tr)
    }

    /// The primes of the coefficient ring above l, one per distinct
    /// irreducible factor of min_poly mod l. Requires the data file to
    /// assert l coprime to the index.
    pub fn primes_above(&self, l: u64) -> Result<Vec<PrimeAboveL>> {
        if !self.index_coprime_to.contains(&l) {
            return Err(Error::IndexNotAsserted { l });
        }
        let reduced = self.min_poly.reduce_mod(l)?;
        let factors = factor_mod_l(&reduced)?;
        let mut out = Vec::with_capacity(factors.len());
        let mut degree_sum = 0usize;
        for (g, mult) in factors {
            let inertia_degree = g.degree().unwrap();
            degree_sum += inertia_degree * mult as usize;
            let residue_root = if inertia_degree == 1 {
                // monic linear t + c has root -c
                Some(sub_mod(0, g.coeff(0), l))
            } else {
                None
            };
            out.push(PrimeAboveL {
                l,
                inertia_degree,
                ramified: mult > 1,
                multiplicity: mult,
                local_factor: g,
                residue_root,
            });
        }
        debug_assert_eq!(degree_sum, self.degree, "splitting degree bookkeeping");
        Ok(out)
    }

    /// Field norm of (a - a_p), computed as a resultant against min_poly
    /// with denominators cleared.
    pub fn eigen_norm(&self, p: u64, a: i64) -> Result<BigInt> {
        let h = self.eigenvalue(p)?;
        // G(t) = D * (a - h(t)) with D the lcm of the denominators
        let mut den_lcm = BigInt::one();
        for c in h {
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mut coeffs: Vec<BigInt> = vec![BigInt::zero(); h.len().max(1)];
        coeffs[0] = BigInt::from(a) * &den_lcm;
        for (i, c) in h.iter().enumerate() {
            let scaled = c * BigRational::from(den_lcm.clone());
            debug_assert!(scaled.denom().is_one());
            coeffs[i] -= scaled.numer();
        }
        let g = IntPoly::new(coeffs);
        if g.is_zero() {
            return Ok(BigInt::zero());
        }
        let res = resultant(&self.min_poly, &g)?;
        let den_pow = den_lcm.pow(self.degree as u32);
        let (q, r) = res.div_rem(&den_pow);
        debug_assert!(r.is_zero(), "norm of an algebraic integer is integral");
        Ok(q)
    }

    /// a_p(f) mod lambda for a degree-one prime lambda.
    pub fn eigen_mod_lambda(&self, p: u64, lambda: &PrimeAboveL) -> Result<u64> {
        if lambda.inertia_degree != 1 {
            return Err(Error::InertiaDegreeTooLarge(lambda.inertia_degree));
        }
        let root = lambda.residue_root.expect("degree-one prime has a root");
        self.eval_eigenvalue_mod(p, root, lambda.l)
    }

    /// a_p(f) mod lambda^k for an unramified degree-one prime lambda,
    /// evaluated at the Hensel lift of the residue root mod l^k.
    pub fn eigen_mod_lambda_pow(&self, p: u64, lambda: &PrimeAboveL, k: u32) -> Result<Residue> {
        if lambda.inertia_degree != 1 {
            return Err(Error::InertiaDegreeTooLarge(lambda.inertia_degree));
        }
        if lambda.ramified {
            return Err(Error::RamifiedPrime);
        }
        let root = lambda.residue_root.expect("degree-one prime has a root");
        let lifted = hensel_lift_root(&self.min_poly, root, lambda.l, k)?;
        let value = self.eval_eigenvalue_mod(p, lifted.value, lifted.modulus)?;
        Ok(Residue::new(value, lifted.modulus))
    }

    /// a_p(f) mod lambda^2; the congruence target of the mod-9 step.
    pub fn eigen_mod_lambda_sq(&self, p: u64, lambda: &PrimeAboveL) -> Result<Residue> {
        self.eigen_mod_lambda_pow(p, lambda, 2)
    }

    fn eval_eigenvalue_mod(&self, p: u64, at: u64, modulus: u64) -> Result<u64> {
        let h = self.eigenvalue(p)?;
        let mb = BigInt::from(modulus);
        let mut acc = 0u64;
        for c in h.iter().rev() {
            let num = c.numer().mod_floor(&mb);
            let num: u64 = num.try_into().expect("fits u64");
            let den = c.denom().mod_floor(&mb);
            let den: u64 = den.try_into().expect("fits u64");
            let den_inv = inv_mod(den, modulus).ok_or_else(|| Error::DenominatorNotInvertible {
                den: c.denom().to_string(),
                modulus,
            })?;
            let coeff = mul_mod(num, den_inv, modulus);
            acc = (mul_mod(acc, at, modulus) + coeff) % modulus;
        }
        Ok(acc)
    }

    /// Whether f mod lambda looks Eisenstein: a_q = 1 + q mod lambda for
    /// every prime q <= bound with q coprime to l and the level. An empty
    /// check range yields a vacuous true, visible via `primes_checked`.
    pub fn is_eisenstein_mod_lambda(
        &self,
        lambda: &PrimeAboveL,
        bound: u64,
    ) -> Result<EisensteinVerdict> {
        if lambda.inertia_degree != 1 {
            return Err(Error::InertiaDegreeTooLarge(lambda.inertia_degree));
        }
        let mut primes_checked = Vec::new();
        for q in crate::arith::primes::primes_up_to(bound) {
            if lambda.l % q == 0 || self.level % q == 0 {
                continue;
            }
            if !self.has_eigenvalue(q) {
                return Err(Error::InsufficientData(format!(
                    "Eisenstein check needs a_{q} for {} at level {}",
                    self.display_label(),
                    self.level
                )));
            }
            let residue = self.eigen_mod_lambda(q, lambda)?;
            if residue != (1 + q) % lambda.l {
                return Ok(EisensteinVerdict {
                    eisenstein: false,
                    primes_checked,
                    first_violation: Some(q),
                });
            }
            primes_checked.push(q);
        }
        Ok(EisensteinVerdict {
            eisenstein: true,
            primes_checked,
            first_violation: None,
        })
    }

    /// Characteristic polynomial of a_p(f) over Q: interpolated from
    /// Norm(j - a_p) at the integers j = 0..degree (a resultant per
    /// point).
    pub fn char_poly_of_eigenvalue(&self, p: u64) -> Result<IntPoly> {
        let d = self.degree;
        let points: Vec<(BigRational, BigRational)> = (0..=d as i64)
            .map(|j| {
                self.eigen_norm(p, j).map(|norm| {
                    (
                        BigRational::from(BigInt::from(j)),
                        BigRational::from(norm),
                    )
                })
            })
            .collect::<Result<_>>()?;
        let interpolated = lagrange_interpolate(&points);
        let mut coeffs = Vec::with_capacity(interpolated.len());
        for c in interpolated {
            if !c.denom().is_one() {
                return Err(Error::Data(
                    "characteristic polynomial of an eigenvalue must be integral".into(),
                ));
            }
            coeffs.push(c.numer().clone());
        }
        Ok(IntPoly::new(coeffs))
    }

    /// Q(a_p(f)) = K_f, operationalized as squarefreeness of the
    /// characteristic polynomial of a_p.
    pub fn eigen_generates_field(&self, p: u64) -> Result<bool> {
        if self.degree == 1 {
            // make sure the datum exists, then the answer is immediate
            self.eigenvalue(p)?;
            return Ok(true);
        }
        Ok(self.char_poly_of_eigenvalue(p)?.is_squarefree())
    }
}

#[derive(Debug, Clone)]
pub struct EisensteinVerdict {
    pub eisenstein: bool,
    pub primes_checked: Vec<u64>,
    pub first_violation: Option<u64>,
}

impl EisensteinVerdict {
    pub fn is_vacuous(&self) -> bool {
        self.eisenstein && self.primes_checked.is_empty()
    }
}

fn lagrange_interpolate(points: &[(BigRational, BigRational)]) -> Vec<BigRational> {
    let n = points.len();
    let mut acc = vec![BigRational::zero(); n];
    for (i, (xi, yi)) in points.iter().enumerate() {
        // basis polynomial prod_{j != i} (x - x_j) / (x_i - x_j)
        let mut basis = vec![BigRational::one()];
        let mut denom = BigRational::one();
        for (j, (xj, _)) in points.iter().enumerate() {
            if j == i {
                continue;
            }
            let mut next = vec![BigRational::zero(); basis.len() + 1];
            for (k, b) in basis.iter().enumerate() {
                next[k + 1] += b;
                next[k] -= xj * b;
            }
            basis = next;
            denom *= xi - xj;
        }
        let scale = yi / denom;
        for (k, b) in basis.iter().enumerate() {
            acc[k] += b * &scale;
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    pub fn level71_fixture_json() -> &'static str {
        r#"{
          "level": 71,
          "classes": [
            { "label": "71a", "degree": 3,
              "min_poly": [25, -2, -5, 1],
              "index_coprime_to": [3],
              "eigenvalues": { "5": [[0,1],[1,1]] } },
            { "label": "71b", "degree": 3,
              "min_poly": [-7, -2, 3, 1],
              "index_coprime_to": [3],
              "eigenvalues": { "5": [[0,1],[1,1]] } }
          ]
        }"#
    }

    #[test]
    fn loads_level71_fixture() {
        let classes = load_newforms(level71_fixture_json().as_bytes()).unwrap();
        assert_eq!(classes.len(), 2);
        assert_eq!(classes[0].level(), 71);
        assert_eq!(classes[0].degree(), 3);
    }

    #[test]
    fn rejects_bad_files() {
        // non-monic
        let bad = r#"{"level": 5, "classes": [{"degree": 1, "min_poly": [1, 2],
            "index_coprime_to": [], "eigenvalues": {}}]}"#;
        assert!(load_newforms(bad.as_bytes()).is_err());
        // denominator clash
        let clash = r#"{"level": 5, "classes": [{"degree": 2, "min_poly": [1, 1, 1],
            "index_coprime_to": [3], "eigenvalues": {"2": [[1,3]]}}]}"#;
        assert!(load_newforms(clash.as_bytes()).is_err());
        // duplicate labels
        let dup = r#"{"level": 5, "classes": [
            {"label": "x", "degree": 1, "min_poly": [-1, 1], "index_coprime_to": [], "eigenvalues": {}},
            {"label": "x", "degree": 1, "min_poly": [-2, 1], "index_coprime_to": [], "eigenvalues": {}}]}"#;
        assert!(load_newforms(dup.as_bytes()).is_err());
        // unknown key
        let unknown = r#"{"level": 5, "extra": 1, "classes": []}"#;
        assert!(load_newforms(unknown.as_bytes()).is_err());
    }

    #[test]
    fn splitting_of_3_at_level_71() {
        let classes = load_newforms(level71_fixture_json().as_bytes()).unwrap();
        let above = classes[0].primes_above(3).unwrap();
        // (t+1)(t^2+1): one unramified degree-1 prime, one degree-2 prime
        assert_eq!(above.len(), 2);
        assert_eq!(above[0].inertia_degree, 1);
        assert!(!above[0].ramified);
        assert_eq!(above[0].residue_root, Some(2));
        assert_eq!(above[1].inertia_degree, 2);
        assert!(matches!(
            classes[0].primes_above(5),
            Err(Error::IndexNotAsserted { l: 5 })
        ));
    }

    #[test]
    fn residues_of_a5_at_level_71() {
        let classes = load_newforms(level71_fixture_json().as_bytes()).unwrap();
        let mut residues_mod9 = Vec::new();
        let mut residues_mod27 = Vec::new();
        for class in &classes {
            let above = class.primes_above(3).unwrap();
            let lambda = above.iter().find(|l| l.inertia_degree == 1).unwrap();
            residues_mod9.push(class.eigen_mod_lambda_sq(5, lambda).unwrap().value);
            residues_mod27.push(class.eigen_mod_lambda_pow(5, lambda, 3).unwrap().value);
            // degree-2 prime is rejected for residue maps
            let deg2 = above.iter().find(|l| l.inertia_degree == 2).unwrap();
            assert!(class.eigen_mod_lambda(5, deg2).is_err());
        }
        assert_eq!(residues_mod9, vec![2, 2]);
        residues_mod27.sort_unstable();
        assert_eq!(residues_mod27, vec![11, 20]);
    }

    #[test]
    fn norm_of_degree_one_class_is_difference() {
        let f = NewformClass::from_parts(
            11,
            Some("11a"),
            IntPoly::from_i64(&[-1, 1]),
            &[3],
            &[(2, vec![(-2, 1)])],
        )
        .unwrap();
        assert_eq!(f.eigen_norm(2, 5).unwrap(), BigInt::from(7));
        assert_eq!(f.eigen_norm(2, -2).unwrap(), BigInt::zero());
        assert!(f.eigen_generates_field(2).unwrap());
        assert!(matches!(
            f.eigen_norm(3, 0),
            Err(Error::MissingEigenvalue { p: 3, .. })
        ));
    }

    #[test]
    fn cubic_norm_matches_root_product() {
        // norm of (a - t) on Z[t]/(t^3 - 5t^2 - 2t + 25) equals
        // min_poly(a) by direct evaluation
        let classes = load_newforms(level71_fixture_json().as_bytes()).unwrap();
        let f = &classes[0];
        for a in -6..=6i64 {
            let norm = f.eigen_norm(5, a).unwrap();
            let expect = f.min_poly().eval(&BigInt::from(a));
            assert_eq!(norm, expect, "a={a}");
        }
    }

    #[test]
    fn rational_eigenvalue_on_cubic_does_not_generate() {
        let f = NewformClass::from_parts(
            71,
            None,
            IntPoly::from_i64(&[25, -2, -5, 1]),
            &[3],
            &[(7, vec![(2, 1)]), (5, vec![(0, 1), (1, 1)])],
        )
        .unwrap();
        // a_7 = 2 is rational: char poly (x-2)^3 is not squarefree
        assert!(!f.eigen_generates_field(7).unwrap());
        // a_5 = t generates by definition
        assert!(f.eigen_generates_field(5).unwrap());
    }

    #[test]
    fn eisenstein_detection() {
        // fabricate a degree-1 class with a_q = 1 + q for q <= 13
        let eigen: Vec<(u64, Vec<(i64, i64)>)> = [2u64, 3, 7, 11, 13]
            .iter()
            .map(|&q| (q, vec![((1 + q) as i64, 1)]))
            .collect();
        let f = NewformClass::from_parts(
            5,
            Some("eis"),
            IntPoly::from_i64(&[-1, 1]),
            &[3],
            &eigen,
        )
        .unwrap();
        let lambda = &f.primes_above(3).unwrap()[0];
        let v = f.is_eisenstein_mod_lambda(lambda, 13).unwrap();
        assert!(v.eisenstein);
        assert_eq!(v.primes_checked, vec![2, 7, 11, 13]);

        // single violation flips the verdict: 1 + 17 = 0 mod 3, so a_17 = 1
        // breaks the congruence
        let mut eigen2 = eigen.clone();
        eigen2.push((17, vec![(1, 1)]));
        let g = NewformClass::from_parts(
            5,
            Some("not-eis"),
            IntPoly::from_i64(&[-1, 1]),
            &[3],
            &eigen2,
        )
        .unwrap();
        let lambda = &g.primes_above(3).unwrap()[0];
        let v = g.is_eisenstein_mod_lambda(lambda, 17).unwrap();
        assert!(!v.eisenstein);
        assert_eq!(v.first_violation, Some(17));

        // bound below every admissible q: vacuous but visible
        let v = f.is_eisenstein_mod_lambda(&f.primes_above(3).unwrap()[0], 1).unwrap();
        assert!(v.is_vacuous());

        // missing data is an error, not a silent pass
        assert!(f
            .is_eisenstein_mod_lambda(&f.primes_above(3).unwrap()[0], 50)
            .is_err());
    }

    #[test]
    fn lambda_sq_reduces_to_lambda() {
        let classes = load_newforms(level71_fixture_json().as_bytes()).unwrap();
        for class in &classes {
            let above = class.primes_above(3).unwrap();
            let lambda = above.iter().find(|l| l.inertia_degree == 1).unwrap();
            let mod3 = class.eigen_mod_lambda(5, lambda).unwrap();
            let mod9 = class.eigen_mod_lambda_sq(5, lambda).unwrap();
            assert_eq!(mod9.value % 3, mod3);
        }
    }

    #[test]
    fn trace_a2_of_rational_class() {
        let f = NewformClass::from_parts(
            11,
            None,
            IntPoly::from_i64(&[-3, 1]),
            &[],
            &[(2, vec![(-2, 1)])],
        )
        .unwrap();
        assert_eq!(f.trace_a2().unwrap(), BigRational::from(BigInt::from(-2)));
        // trace of t on t^3 - 5t^2 - 2t + 25 is 5
        let g = NewformClass::from_parts(
            71,
            None,
            IntPoly::from_i64(&[25, -2, -5, 1]),
            &[3],
            &[(2, vec![(0, 1), (1, 1)])],
        )
        .unwrap();
        assert_eq!(g.trace_a2().unwrap(), BigRational::from(BigInt::from(5)));
    }
}
