//! Generating functions: brute-force statistic polynomials, their closed-form
//! series, and expansion in the complete homogeneous basis.
//!
//! Every closed form comes with a brute-force counterpart so the two can be
//! compared coefficient by coefficient. Where a closed form has a commonly
//! quoted variant that disagrees with enumeration, both are available through
//! a form selector ([`LuckSeriesForm`], [`GammaForm`], [`ProductForm`]).

use std::collections::{BTreeMap, HashMap};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::caterpillar::{enumerate_caterpillar_pk, simulate};
use crate::decomposition::fixed_point_raw;
use crate::enumerate::{canonical_iter, count_u_pk, fuss_catalan};
use crate::error::{Error, Result};
use crate::poly::{complete_homogeneous_in, var_list, Monomial, MultiPoly};
use crate::sequence::BoundFamily;
use crate::series::TruncatedSeries;
use crate::statistics::{u_luck, u_omega};

pub const GAMMA_VARS: [&str; 4] = ["q", "t", "u", "v"];

/// `q_0, …, q_m`.
pub fn multi_stat_vars(m: u32) -> Vec<String> {
    (0..=m).map(|i| format!("q_{i}")).collect()
}

fn poly_from_counts(vars: Vec<String>, counts: HashMap<Vec<u32>, u64>) -> MultiPoly {
    let mut p = MultiPoly::zero_in(vars);
    for (e, c) in counts {
        p.add_term(Monomial::new(e), BigInt::from(c));
    }
    p
}

fn var_in(vars: &[String], name: &str) -> Result<MultiPoly> {
    let names: Vec<&str> = vars.iter().map(String::as_str).collect();
    MultiPoly::var(&names, name)
}

/// `B_m(x) = Σ C_n^{(m)} x^n` over the given ring.
pub fn fuss_catalan_series_in(vars: Vec<String>, m: u32, order: usize) -> TruncatedSeries {
    TruncatedSeries::from_integers(
        vars,
        order,
        (0..=order).map(|n| BigInt::from(fuss_catalan(m, n))),
    )
}

pub fn fuss_catalan_series(m: u32, order: usize) -> TruncatedSeries {
    fuss_catalan_series_in(Vec::new(), m, order)
}

/// First index where `B ≠ 1 + x·B^{m+1}`, if any.
pub fn functional_equation_mismatch(b: &TruncatedSeries, m: u32) -> Option<usize> {
    let one = TruncatedSeries::one(b.variables().to_vec(), b.order());
    let rhs = one.add(&b.pow(m + 1).shift()).expect("same ring");
    b.first_difference(&rhs)
}

/// `R_n(q) = Σ q^{luck(p)}` over canonical u-parking distributions of length `n`.
pub fn r_poly_brute(m: u32, n: usize) -> Result<MultiPoly> {
    let mut counts: HashMap<Vec<u32>, u64> = HashMap::new();
    for p in canonical_iter(m, n)? {
        *counts.entry(vec![u_luck(&p, m) as u32]).or_default() += 1;
    }
    Ok(poly_from_counts(var_list(&["q"]), counts))
}

/// The number of length-`n` sequences with `k` lucky positions, `C_{n,k}`,
/// read off `R_n`.
pub fn luck_counts(m: u32, n: usize) -> Result<Vec<BigInt>> {
    let r = r_poly_brute(m, n)?;
    Ok((0..=n as u32).map(|k| r.coefficient(&[k])).collect())
}

/// Which closed form of the luck series `B_m(x;q)` to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LuckSeriesForm {
    /// `1 / (1 - q·x·B_m(x)^m)`, which matches enumeration.
    Corrected,
    /// `1 / (1 - q·x·B_m(x))`, the variant without the exponent.
    Literal,
}

/// `B_m(x; var)` over the ring `vars`, with `var` one of its variables.
pub fn r_series_in(
    vars: Vec<String>,
    var: &str,
    m: u32,
    order: usize,
    form: LuckSeriesForm,
) -> Result<TruncatedSeries> {
    let e = match form {
        LuckSeriesForm::Corrected => m,
        LuckSeriesForm::Literal => 1,
    };
    luck_series_with_exponent(vars, var, m, order, e)
}

/// `1 / (1 - var·x·B_m(x)^e)`.
pub(crate) fn luck_series_with_exponent(
    vars: Vec<String>,
    var: &str,
    m: u32,
    order: usize,
    e: u32,
) -> Result<TruncatedSeries> {
    let q = var_in(&vars, var)?;
    let b = fuss_catalan_series_in(vars.clone(), m, order);
    let one = TruncatedSeries::one(vars, order);
    one.sub(&b.pow(e).shift().scale(&q)?)?.reciprocal()
}

/// `B_m(x; q) = Σ R_n(q) x^n` in closed form.
pub fn r_series_closed(m: u32, order: usize, form: LuckSeriesForm) -> TruncatedSeries {
    r_series_in(var_list(&["q"]), "q", m, order, form).expect("q is in the ring")
}

/// `γ_n(q,t,u,v) = Σ q^{luck} t^{ω_1} u^{f} v^{g}`, with `γ_0 = 1`.
pub fn gamma_poly_brute(m: u32, n: usize) -> Result<MultiPoly> {
    let vars = var_list(&GAMMA_VARS);
    if n == 0 {
        return Ok(MultiPoly::constant_in(vars, 1));
    }
    let mut counts: HashMap<Vec<u32>, u64> = HashMap::new();
    for p in canonical_iter(m, n)? {
        let e = vec![
            u_luck(&p, m) as u32,
            u_omega(&p, 1) as u32,
            fixed_point_raw(p.values(), m, 1) as u32,
            fixed_point_raw(p.values(), m, m) as u32,
        ];
        *counts.entry(e).or_default() += 1;
    }
    Ok(poly_from_counts(vars, counts))
}

/// Which closed form of `Γ_m(x; q, t, u, v)` to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GammaForm {
    /// `1 + x·qt(uv)²·B_m(x;q)·B_m^{m-1}(vx)·B_m(uvx;t)`.
    Corrected,
    /// `1 + x·qt(uv)²·B_m^{m-1}(x)·B_m(vx;q)·B_m(uvx;t)`.
    Literal,
}

pub fn gamma_series_closed(m: u32, order: usize, form: GammaForm) -> TruncatedSeries {
    let vars = var_list(&GAMMA_VARS);
    let var = |name: &str| var_in(&vars, name).expect("gamma variable");
    let (q, t, u, v) = (var("q"), var("t"), var("u"), var("v"));
    let uv = &u * &v;
    let b = fuss_catalan_series_in(vars.clone(), m, order);
    let luck = |name: &str| {
        r_series_in(vars.clone(), name, m, order, LuckSeriesForm::Corrected)
            .expect("gamma variable")
    };
    let (bq, bt) = (luck("q"), luck("t"));
    let bt_uv = bt.scale_arg(&uv).expect("monomial");
    let product = match form {
        GammaForm::Corrected => bq
            .mul(&b.pow(m - 1).scale_arg(&v).expect("monomial"))
            .and_then(|s| s.mul(&bt_uv)),
        GammaForm::Literal => b
            .pow(m - 1)
            .mul(&bq.scale_arg(&v).expect("monomial"))
            .and_then(|s| s.mul(&bt_uv)),
    }
    .expect("same ring");
    let prefactor = &(&q * &t) * &uv.pow(2);
    TruncatedSeries::one(vars, order)
        .add(&product.scale(&prefactor).expect("same ring").shift())
        .expect("same ring")
}

/// `H_m(x; k, r) = Σ h_{n,k,r} x^n`, from the counting recurrence.
pub fn h_series(family: &BoundFamily, order: usize) -> TruncatedSeries {
    TruncatedSeries::from_integers(
        Vec::new(),
        order,
        (0..=order).map(|n| BigInt::from(count_u_pk(n, family))),
    )
}

/// Writes `poly` as `Σ c_d h_d` in its own variables. The coefficient of
/// `h_d` is the coefficient of the pure power `x_1^d`, since no other `h`
/// contains that monomial; the remainder after subtracting must vanish.
pub fn h_expand(poly: &MultiPoly) -> Result<BTreeMap<u32, BigInt>> {
    let arity = poly.arity();
    if arity == 0 {
        return Err(Error::ArityMismatch {
            expected: 1,
            found: 0,
        });
    }
    let mut residual = poly.clone();
    let mut out = BTreeMap::new();
    for d in (0..=poly.total_degree().unwrap_or(0)).rev() {
        let mut pure = vec![0; arity];
        pure[0] = d;
        let c = residual.coefficient(&pure);
        if c.is_zero() {
            continue;
        }
        residual = &residual - &complete_homogeneous_in(poly.variables().to_vec(), d).scale(&c);
        out.insert(d, c);
    }
    if !residual.is_zero() {
        return Err(Error::NotHomogeneousCombination {
            residual: residual.to_string(),
        });
    }
    Ok(out)
}

/// Divides by the product of all variables, then expands in the `h` basis.
pub fn h_decompose(poly: &MultiPoly) -> Result<BTreeMap<u32, BigInt>> {
    let all = Monomial::new(vec![1; poly.arity()]);
    let quotient = poly.div_monomial(&all).ok_or(Error::NotDivisible)?;
    h_expand(&quotient)
}

/// Coefficients `c_0, …, c_top` of an `h` expansion, highest degree first.
pub fn h_vector(expansion: &BTreeMap<u32, BigInt>) -> Vec<BigInt> {
    let top = expansion.keys().next_back().copied().unwrap_or(0);
    (0..=top)
        .rev()
        .map(|d| expansion.get(&d).cloned().unwrap_or_default())
        .collect()
}

/// Renders `Σ c_d h_d(vars)` with the largest degree first.
pub fn render_h_expansion(expansion: &BTreeMap<u32, BigInt>, vars: &[String]) -> String {
    if expansion.is_empty() {
        return "0".into();
    }
    let args = vars.join(", ");
    expansion
        .iter()
        .rev()
        .map(|(d, c)| {
            if c.is_one() {
                format!("h_{d}({args})")
            } else {
                format!("{c}*h_{d}({args})")
            }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

/// `Σ q_0^{luck} q_1^{ω_1} ⋯ q_m^{ω_m}` over parking distributions on the
/// caterpillar, computed by running the parking process on each.
pub fn multi_stat_poly_brute(m: u32, n: usize) -> Result<MultiPoly> {
    let vars = multi_stat_vars(m);
    if n == 0 {
        return Ok(MultiPoly::constant_in(vars, 1));
    }
    let iter = enumerate_caterpillar_pk(m, n as u32)?;
    let tree = iter.tree().clone();
    let mut counts: HashMap<Vec<u32>, u64> = HashMap::new();
    for s in iter {
        let outcome = simulate(&tree, &s)?;
        debug_assert!(outcome.all_parked());
        let mut e = Vec::with_capacity(m as usize + 1);
        e.push(outcome.luck() as u32);
        e.extend((1..=m).map(|j| s.multiplicity(j) as u32));
        *counts.entry(e).or_default() += 1;
    }
    Ok(poly_from_counts(vars, counts))
}

/// The same statistics read on the u-parking side, without the leaf shift:
/// `Σ q_0^{luck} q_1^{ω_1} ⋯ q_m^{ω_m}` over canonical u-parking distributions.
pub fn multi_stat_u_poly_brute(m: u32, n: usize) -> Result<MultiPoly> {
    let vars = multi_stat_vars(m);
    let mut counts: HashMap<Vec<u32>, u64> = HashMap::new();
    for p in canonical_iter(m, n)? {
        let mut e = Vec::with_capacity(m as usize + 1);
        e.push(u_luck(&p, m) as u32);
        e.extend((1..=m).map(|j| p.multiplicity(j) as u32));
        *counts.entry(e).or_default() += 1;
    }
    Ok(poly_from_counts(vars, counts))
}

/// Which closed form of the multi-statistic series to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ProductForm {
    /// `1 + x·q_0q_1 + x·Πq_i·(ΠB_m(x;q_i) - 1)`: the one-node tree has no
    /// leaves, so only `q_0q_1` appears at `x^1`.
    Corrected,
    /// `1 + x·Π_{i=0}^{m} q_i·B_m(x;q_i)`.
    Uniform,
}

fn luck_series_product(vars: &[String], m: u32, order: usize) -> TruncatedSeries {
    vars.iter()
        .fold(TruncatedSeries::one(vars.to_vec(), order), |acc, name| {
            let b = r_series_in(vars.to_vec(), name, m, order, LuckSeriesForm::Corrected)
                .expect("variable in ring");
            acc.mul(&b).expect("same ring")
        })
}

pub fn multi_stat_series_closed(m: u32, order: usize, form: ProductForm) -> TruncatedSeries {
    let vars = multi_stat_vars(m);
    let all = MultiPoly::monomial_in(vars.clone(), vec![1; vars.len()], 1);
    let one = TruncatedSeries::one(vars.clone(), order);
    let product = luck_series_product(&vars, m, order);
    // the factor multiplied by x
    let tail = match form {
        ProductForm::Uniform => product.scale(&all),
        ProductForm::Corrected => product
            .sub(&one)
            .and_then(|s| s.scale(&all))
            .and_then(|s| s.add(&one.scale(&first_two(&vars))?)),
    }
    .expect("same ring");
    one.add(&tail.shift()).expect("same ring")
}

/// `q_0·q_1` over the multi-statistic ring.
fn first_two(vars: &[String]) -> MultiPoly {
    let mut e = vec![0; vars.len()];
    e[0] = 1;
    e[1] = 1;
    MultiPoly::monomial_in(vars.to_vec(), e, 1)
}

/// `1 + x·q_0q_1·Π_{i=0}^{m} B_m(x;q_i)`, the series of [`multi_stat_u_poly_brute`].
pub fn multi_stat_u_series_closed(m: u32, order: usize) -> TruncatedSeries {
    let vars = multi_stat_vars(m);
    let q0q1 = first_two(&vars);
    let product = luck_series_product(&vars, m, order);
    TruncatedSeries::one(vars, order)
        .add(&product.scale(&q0q1).expect("same ring").shift())
        .expect("same ring")
}

/// `P_{n,t} = Σ R_{a_1}(q_0)⋯R_{a_t}(q_{t-1})` over weak compositions of `n`
/// into `t` parts, expanded by brute force.
pub fn luck_convolution(m: u32, n: usize, t: usize) -> Result<MultiPoly> {
    let vars: Vec<String> = (0..t).map(|i| format!("q_{i}")).collect();
    let rs: Vec<MultiPoly> = (0..=n).map(|k| r_poly_brute(m, k)).collect::<Result<_>>()?;
    // table[j][s]: sum over compositions of s into the first j parts
    let mut table = vec![MultiPoly::zero_in(vars.clone()); n + 1];
    table[0] = MultiPoly::constant_in(vars.clone(), 1);
    for (i, name) in vars.iter().enumerate() {
        let lifted: Vec<MultiPoly> = rs
            .iter()
            .map(|r| {
                let mut e = vec![0; t];
                r.terms()
                    .fold(MultiPoly::zero_in(vars.clone()), |mut acc, (mono, c)| {
                        e[i] = mono.exponents()[0];
                        acc.add_term(Monomial::new(e.clone()), c.clone());
                        acc
                    })
            })
            .collect();
        debug_assert_eq!(&vars[i], name);
        let next: Vec<MultiPoly> = (0..=n)
            .map(|s| {
                (0..=s).fold(MultiPoly::zero_in(vars.clone()), |acc, k| {
                    &acc + &(&table[s - k] * &lifted[k])
                })
            })
            .collect();
        table = next;
    }
    Ok(table.swap_remove(n))
}

/// `Σ_k C_{n,k} h_k(q_0, …, q_{t-1})`.
pub fn luck_h_combination(m: u32, n: usize, t: usize) -> Result<MultiPoly> {
    let vars: Vec<String> = (0..t).map(|i| format!("q_{i}")).collect();
    let counts = luck_counts(m, n)?;
    Ok(counts
        .iter()
        .enumerate()
        .fold(MultiPoly::zero_in(vars.clone()), |acc, (k, c)| {
            &acc + &complete_homogeneous_in(vars.clone(), k as u32).scale(c)
        }))
}

/// `B_m(n, k_0, …, k_m)`: caterpillar parking distributions with `k_0` lucky
/// cars and `k_j` cars preferring node `j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JointCountTensor {
    pub m: u32,
    pub n: usize,
    pub entries: BTreeMap<Vec<u32>, BigUint>,
}

/// Two index vectors with equal coordinate sums and different counts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymmetryViolation {
    pub left: Vec<u32>,
    pub right: Vec<u32>,
    pub left_count: BigUint,
    pub right_count: BigUint,
}

impl JointCountTensor {
    pub fn new(m: u32, n: usize) -> Result<Self> {
        let poly = multi_stat_poly_brute(m, n)?;
        let entries = poly
            .terms()
            .map(|(mono, c)| {
                let c = c.to_biguint().expect("counts are nonnegative");
                (mono.exponents().to_vec(), c)
            })
            .collect();
        Ok(JointCountTensor { m, n, entries })
    }

    pub fn get(&self, index: &[u32]) -> BigUint {
        self.entries.get(index).cloned().unwrap_or_default()
    }

    pub fn total(&self) -> BigUint {
        self.entries.values().sum()
    }

    /// All index vectors in `[1, n]^{m+1}`, in lexicographic order.
    pub fn positive_grid(&self) -> Vec<Vec<u32>> {
        let dim = self.m as usize + 1;
        let n = self.n.max(1) as u32;
        let mut out = Vec::new();
        let mut idx = vec![1u32; dim];
        loop {
            out.push(idx.clone());
            let Some(pos) = (0..dim).rev().find(|&i| idx[i] < n) else {
                return out;
            };
            idx[pos] += 1;
            for x in &mut idx[pos + 1..] {
                *x = 1;
            }
        }
    }

    /// Checks that entries depend only on the coordinate sum, over the
    /// positive grid `[1, n]^{m+1}`. Vectors with a zero coordinate are
    /// excluded: for `n >= 2` every statistic is at least 1, so they carry
    /// no mass while sharing sums with vectors that do.
    pub fn symmetry_violation(&self) -> Option<SymmetryViolation> {
        let mut by_sum: BTreeMap<u32, (Vec<u32>, BigUint)> = BTreeMap::new();
        for idx in self.positive_grid() {
            let count = self.get(&idx);
            let sum: u32 = idx.iter().sum();
            match by_sum.get(&sum) {
                None => {
                    by_sum.insert(sum, (idx, count));
                }
                Some((first, first_count)) if *first_count != count => {
                    return Some(SymmetryViolation {
                        left: first.clone(),
                        right: idx,
                        left_count: first_count.clone(),
                        right_count: count,
                    });
                }
                Some(_) => {}
            }
        }
        None
    }

    /// Entries lying outside the positive grid.
    pub fn mass_outside_grid(&self) -> BigUint {
        let n = self.n.max(1) as u32;
        self.entries
            .iter()
            .filter(|(k, _)| k.iter().any(|&x| x == 0 || x > n))
            .map(|(_, c)| c)
            .sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q_poly(coeffs_high_to_low: &[(u32, i64)]) -> MultiPoly {
        MultiPoly::from_terms(
            &["q"],
            coeffs_high_to_low.iter().map(|&(e, c)| (vec![e], c)),
        )
    }

    fn hmap(pairs: &[(u32, i64)]) -> BTreeMap<u32, BigInt> {
        pairs.iter().map(|&(d, c)| (d, BigInt::from(c))).collect()
    }

    #[test]
    fn fuss_catalan_prefixes() {
        let ints = |m, order| -> Vec<BigInt> {
            fuss_catalan_series(m, order)
                .coeffs()
                .iter()
                .map(|c| c.eval(&[]).unwrap())
                .collect()
        };
        assert_eq!(ints(2, 4), [1, 1, 3, 12, 55].map(BigInt::from));
        assert_eq!(ints(3, 4), [1, 1, 4, 22, 140].map(BigInt::from));
        assert_eq!(ints(4, 2), [1, 1, 5].map(BigInt::from));
        for m in 1..=4 {
            assert_eq!(
                functional_equation_mismatch(&fuss_catalan_series(m, 12), m),
                None
            );
        }
    }

    #[test]
    fn perturbed_series_fails_at_the_perturbation() {
        let vals: Vec<BigInt> = (0..=8)
            .map(|n| BigInt::from(fuss_catalan(2, n)) + BigInt::from(u8::from(n == 5)))
            .collect();
        let b = TruncatedSeries::from_integers(Vec::new(), 8, vals);
        assert_eq!(functional_equation_mismatch(&b, 2), Some(5));
    }

    #[test]
    fn luck_polynomials() {
        assert_eq!(
            r_poly_brute(2, 3).unwrap(),
            q_poly(&[(3, 1), (2, 4), (1, 7)])
        );
        assert_eq!(
            r_poly_brute(3, 4).unwrap().to_string(),
            "q^4 + 9*q^3 + 39*q^2 + 91*q"
        );
        assert_eq!(r_poly_brute(4, 2).unwrap().to_string(), "q^2 + 4*q");
        assert_eq!(r_poly_brute(2, 0).unwrap().to_string(), "1");
    }

    #[test]
    fn luck_series_forms() {
        let c = r_series_closed(2, 2, LuckSeriesForm::Corrected);
        assert_eq!(c.coeff(2).to_string(), "q^2 + 2*q");
        let l = r_series_closed(2, 2, LuckSeriesForm::Literal);
        assert_eq!(l.coeff(2).to_string(), "q^2 + q");
        for m in 1..=3 {
            let s = r_series_closed(m, 6, LuckSeriesForm::Corrected);
            for n in 0..=6 {
                assert_eq!(s.coeff(n), r_poly_brute(m, n).unwrap(), "m={m} n={n}");
            }
        }
        // at m = 1 the two forms coincide
        assert_eq!(
            r_series_closed(1, 6, LuckSeriesForm::Literal),
            r_series_closed(1, 6, LuckSeriesForm::Corrected)
        );
    }

    #[test]
    fn gamma_small_cases() {
        for m in 1..=4 {
            assert_eq!(gamma_poly_brute(m, 1).unwrap().to_string(), "q*t*u^2*v^2");
        }
        let g = gamma_poly_brute(2, 2).unwrap();
        assert_eq!(g.to_string(), "q*t^2*u^3*v^3 + q^2*t*u^2*v^2 + q*t*u^2*v^3");
        let corrected = gamma_series_closed(2, 3, GammaForm::Corrected);
        assert_eq!(corrected.coeff(2), g);
        let literal = gamma_series_closed(2, 3, GammaForm::Literal);
        assert_eq!(
            literal.coeff(2).to_string(),
            "q*t^2*u^3*v^3 + q^2*t*u^2*v^3 + q*t*u^2*v^2"
        );
        for n in 0..=3 {
            assert_eq!(corrected.coeff(n), gamma_poly_brute(2, n).unwrap());
        }
    }

    #[test]
    fn gamma_specializes_to_luck_series() {
        let g = gamma_series_closed(3, 5, GammaForm::Corrected);
        let r = r_series_closed(3, 5, LuckSeriesForm::Corrected);
        for n in 0..=5 {
            let s = g
                .coeff(n)
                .specialize(&[("t", 1), ("u", 1), ("v", 1)])
                .unwrap();
            assert_eq!(s, r.coeff(n));
        }
    }

    #[test]
    fn gamma_h_vectors_and_symmetry() {
        let expected: [(u32, [&[i64]; 4]); 3] = [
            (2, [&[1], &[1, 1], &[1, 3, 3], &[1, 5, 12, 12]]),
            (3, [&[1], &[1, 2], &[1, 5, 9], &[1, 8, 30, 52]]),
            (4, [&[1], &[1, 3], &[1, 7, 18], &[1, 11, 56, 136]]),
        ];
        for (m, rows) in expected {
            for (i, row) in rows.iter().enumerate() {
                let g = gamma_poly_brute(m, i + 1).unwrap();
                let qt = g.specialize(&[("u", 1), ("v", 1)]).unwrap();
                assert_eq!(qt, qt.swap_variables(0, 1));
                let v = h_vector(&h_decompose(&qt).unwrap());
                assert_eq!(v, row.iter().map(|&c| BigInt::from(c)).collect::<Vec<_>>());
            }
        }
    }

    /// The h-coefficients of `γ_n(q,t,1,1)/qt` are `Σ_r h_{r,1,1} C_{n-r-1,k}`.
    #[test]
    fn gamma_h_coefficients_from_counts() {
        for m in 2..=3 {
            let fam = BoundFamily::new(m, 1, 1).unwrap();
            for n in 1..=5usize {
                let g = gamma_poly_brute(m, n).unwrap();
                let qt = g.specialize(&[("u", 1), ("v", 1)]).unwrap();
                let got = h_decompose(&qt).unwrap();
                for k in 0..n {
                    let want: BigInt = (0..n)
                        .map(|r| {
                            let c = luck_counts(m, n - r - 1).unwrap().get(k).cloned();
                            BigInt::from(count_u_pk(r, &fam)) * c.unwrap_or_default()
                        })
                        .sum();
                    assert_eq!(got.get(&(k as u32)).cloned().unwrap_or_default(), want);
                }
            }
        }
    }

    #[test]
    fn h_expansion_rejects_non_members() {
        let p = MultiPoly::from_terms(&["q", "t"], [(vec![2, 0], 1), (vec![0, 2], 1)]);
        assert!(matches!(
            h_expand(&p),
            Err(Error::NotHomogeneousCombination { .. })
        ));
        let p = MultiPoly::from_terms(&["q", "t"], [(vec![1, 0], 1)]);
        assert!(matches!(h_decompose(&p), Err(Error::NotDivisible)));
        assert_eq!(
            render_h_expansion(&hmap(&[(2, 1), (1, 3), (0, 3)]), &var_list(&["q", "t"])),
            "h_2(q, t) + 3*h_1(q, t) + 3*h_0(q, t)"
        );
    }

    #[test]
    fn multi_stat_rows() {
        let expect = [
            (1usize, None),
            (2, Some(hmap(&[(1, 1)]))),
            (3, Some(hmap(&[(2, 1), (1, 2)]))),
            (4, Some(hmap(&[(3, 1), (2, 4), (1, 7)]))),
        ];
        for (n, h) in expect {
            let p = multi_stat_poly_brute(2, n).unwrap();
            match h {
                None => assert_eq!(p.to_string(), "q_0*q_1"),
                Some(h) => assert_eq!(h_decompose(&p).unwrap(), h),
            }
        }
    }

    #[test]
    fn multi_stat_series() {
        for m in 1..=3u32 {
            let order = if m == 3 { 4 } else { 5 };
            let corrected = multi_stat_series_closed(m, order, ProductForm::Corrected);
            let uniform = multi_stat_series_closed(m, order, ProductForm::Uniform);
            let u_side = multi_stat_u_series_closed(m, order);
            for n in 0..=order {
                assert_eq!(
                    corrected.coeff(n),
                    multi_stat_poly_brute(m, n).unwrap(),
                    "m={m} n={n}"
                );
                assert_eq!(
                    u_side.coeff(n),
                    multi_stat_u_poly_brute(m, n).unwrap(),
                    "m={m} n={n}"
                );
                if n != 1 || m == 1 {
                    assert_eq!(uniform.coeff(n), corrected.coeff(n));
                }
            }
            if m >= 2 {
                assert_ne!(uniform.coeff(1), corrected.coeff(1));
            }
        }
    }

    #[test]
    fn convolution_identity() {
        for m in 1..=3 {
            for t in 2..=m as usize + 1 {
                for n in 0..=4 {
                    assert_eq!(
                        luck_convolution(m, n, t).unwrap(),
                        luck_h_combination(m, n, t).unwrap()
                    );
                }
            }
        }
        let two = luck_convolution(2, 3, 2).unwrap();
        assert_eq!(h_expand(&two).unwrap(), hmap(&[(3, 1), (2, 4), (1, 7)]));
        let three = luck_convolution(2, 2, 3).unwrap();
        assert_eq!(h_expand(&three).unwrap(), hmap(&[(2, 1), (1, 2)]));
        assert_eq!(luck_convolution(2, 0, 2).unwrap().to_string(), "1");
    }

    #[test]
    fn tensor_m2_n4() {
        let t = JointCountTensor::new(2, 4).unwrap();
        for (idx, c) in [
            ([1, 1, 2], 7u32),
            ([2, 1, 1], 7),
            ([3, 1, 1], 4),
            ([1, 1, 4], 1),
            ([1, 1, 1], 0),
        ] {
            assert_eq!(t.get(&idx), BigUint::from(c), "{idx:?}");
        }
        assert_eq!(t.total(), fuss_catalan(2, 4));
        assert_eq!(t.symmetry_violation(), None);
        assert!(t.mass_outside_grid().is_zero());
        assert_eq!(t.positive_grid().len(), 64);
    }

    #[test]
    fn theorem_one_series() {
        for m in 2..=3 {
            let b = fuss_catalan_series(m, 6);
            for k in 1..=3 {
                for r in 0..m {
                    let fam = BoundFamily::new(m, k, r).unwrap();
                    assert_eq!(h_series(&fam, 6), b.pow(fam.series_exponent()));
                }
            }
        }
    }
}
