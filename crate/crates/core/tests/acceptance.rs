//! Acceptance suite. Each criterion runs against its own time limit and
//! prints a single pass/fail line; the process exits nonzero if any fails.

use std::panic::{self, AssertUnwindSafe};
use std::time::{Duration, Instant};

use catpark::gf::{h_vector, multi_stat_vars};
use catpark::verify::{self, Scope, Status, VerifyConfig};
use catpark::{
    count_u_pk, decompose, enumerate_u_pk, eta, eta_inv, fuss_catalan, fuss_catalan_series,
    gamma_poly_brute, gamma_series_closed, h_decompose, h_series, multi_stat_poly_brute,
    multi_stat_series_closed, r_poly_brute, r_series_closed, table, tau, u_luck, u_omega,
    BoundFamily, GammaForm, JointCountTensor, LuckSeriesForm, MultiPoly, ParkingSeq, ProductForm,
};
use num_bigint::{BigInt, BigUint};

type Check = fn() -> Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// `binom(mn + n, n) / (mn + 1)` by exact rational products.
fn fuss_catalan_oracle(m: u64, n: u64) -> BigUint {
    let mut num = BigUint::from(1u32);
    let mut den = BigUint::from(1u32);
    for i in 0..n {
        num *= m * n + n - i;
        den *= i + 1;
    }
    num / den / (m * n + 1)
}

fn canonical(m: u32) -> BoundFamily {
    BoundFamily::canonical(m).unwrap()
}

fn counting() -> Result<(), String> {
    for m in 1..=4u32 {
        for n in 0..=8usize {
            let dp = count_u_pk(n, &canonical(m));
            let closed = fuss_catalan(m, n);
            let listed = enumerate_u_pk(n, &canonical(m)).unwrap().count();
            let oracle = fuss_catalan_oracle(m.into(), n as u64);
            ensure(
                dp == closed && closed == oracle && BigUint::from(listed) == oracle,
                || {
                    format!(
                        "m={m} n={n}: dp {dp}, closed {closed}, listed {listed}, oracle {oracle}"
                    )
                },
            )?;
        }
    }
    Ok(())
}

const THETA_GOLDEN: &str = "\
p | theta(p)
(1, 1, 1) | (1, 1, 1, 2, 4)
(1, 1, 2) | (1, 1, 2, 2, 4)
(1, 1, 3) | (1, 1, 2, 3, 4)
(1, 1, 4) | (1, 1, 2, 4, 4)
(1, 1, 5) | (1, 1, 2, 4, 5)
(1, 2, 2) | (1, 2, 2, 2, 4)
(1, 2, 3) | (1, 2, 2, 3, 4)
(1, 2, 4) | (1, 2, 2, 4, 4)
(1, 2, 5) | (1, 2, 2, 4, 5)
(1, 3, 3) | (1, 2, 3, 3, 4)
(1, 3, 4) | (1, 2, 3, 4, 4)
(1, 3, 5) | (1, 2, 3, 4, 5)
";

fn theta_table() -> Result<(), String> {
    let text = table("theta").map_err(|e| e.to_string())?.render_text();
    let body: String = text.lines().skip(1).map(|l| format!("{l}\n")).collect();
    ensure(body == THETA_GOLDEN, || format!("rendered:\n{body}"))?;
    let left: Vec<ParkingSeq> = enumerate_u_pk(3, &canonical(2)).unwrap().collect();
    ensure(left.windows(2).all(|w| w[0] < w[1]), || {
        "not lexicographic".into()
    })
}

const LUCK_GOLDEN: [(u32, [&str; 5]); 3] = [
    (
        2,
        [
            "1",
            "q",
            "q^2 + 2*q",
            "q^3 + 4*q^2 + 7*q",
            "q^4 + 6*q^3 + 18*q^2 + 30*q",
        ],
    ),
    (
        3,
        [
            "1",
            "q",
            "q^2 + 3*q",
            "q^3 + 6*q^2 + 15*q",
            "q^4 + 9*q^3 + 39*q^2 + 91*q",
        ],
    ),
    (
        4,
        [
            "1",
            "q",
            "q^2 + 4*q",
            "q^3 + 8*q^2 + 26*q",
            "q^4 + 12*q^3 + 68*q^2 + 204*q",
        ],
    ),
];

fn luck_polynomials() -> Result<(), String> {
    for (m, rows) in LUCK_GOLDEN {
        for (n, want) in rows.iter().enumerate() {
            let got = r_poly_brute(m, n).unwrap().to_string();
            ensure(got == *want, || format!("m={m} n={n}: {got} vs {want}"))?;
        }
    }
    for m in 1..=3 {
        let closed = r_series_closed(m, 8, LuckSeriesForm::Corrected);
        for n in 0..=8 {
            let brute = r_poly_brute(m, n).unwrap();
            ensure(closed.coeff(n) == brute, || {
                format!("m={m} n={n}: {} vs {brute}", closed.coeff(n))
            })?;
        }
    }
    Ok(())
}

fn exchange() -> Result<(), String> {
    let mut seen = 0usize;
    for m in 1..=3u32 {
        for n in 0..=7 {
            for p in enumerate_u_pk(n, &canonical(m)).unwrap() {
                let t = tau(&p, m).unwrap();
                ensure(tau(&t, m).unwrap() == p, || {
                    format!("m={m}: tau not an involution at {p}")
                })?;
                ensure(u_luck(&p, m) == u_omega(&t, 1), || {
                    format!("m={m}: exchange fails at {p}")
                })?;
                seen += 1;
            }
        }
    }
    let expected: BigUint = (1..=3u64)
        .flat_map(|m| (0..=7u64).map(move |n| fuss_catalan_oracle(m, n)))
        .sum();
    ensure(BigUint::from(seen) == expected, || {
        format!("visited {seen}, expected {expected}")
    })
}

const H_GOLDEN: [(u32, [&[i64]; 4]); 3] = [
    (2, [&[1], &[1, 1], &[1, 3, 3], &[1, 5, 12, 12]]),
    (3, [&[1], &[1, 2], &[1, 5, 9], &[1, 8, 30, 52]]),
    (4, [&[1], &[1, 3], &[1, 7, 18], &[1, 11, 56, 136]]),
];

fn h_vectors() -> Result<(), String> {
    for (m, rows) in H_GOLDEN {
        for (i, row) in rows.iter().enumerate() {
            let g = gamma_poly_brute(m, i + 1).unwrap();
            let qt = g.specialize(&[("u", 1), ("v", 1)]).unwrap();
            let h = h_decompose(&qt).map_err(|e| format!("m={m} n={}: {e}", i + 1))?;
            let got = h_vector(&h);
            let want: Vec<BigInt> = row.iter().map(|&c| BigInt::from(c)).collect();
            ensure(got == want, || format!("m={m} n={}: {got:?}", i + 1))?;
        }
    }
    Ok(())
}

/// `q t (uv)^2 · (sum of the given (q, t, u, v) monomials)`, built by hand.
fn qt_uv2_times(terms: &[[u32; 4]]) -> MultiPoly {
    let vars = ["q", "t", "u", "v"];
    let prefactor = MultiPoly::from_terms(&vars, [(vec![1, 1, 2, 2], 1)]);
    let inner = MultiPoly::from_terms(&vars, terms.iter().map(|e| (e.to_vec(), 1)));
    &prefactor * &inner
}

fn gamma_series() -> Result<(), String> {
    for (m, order) in [(2u32, 7usize), (3, 6)] {
        let closed = gamma_series_closed(m, order, GammaForm::Corrected);
        for n in 0..=order {
            let brute = gamma_poly_brute(m, n).unwrap();
            ensure(closed.coeff(n) == brute, || format!("m={m} n={n}"))?;
        }
    }
    let brute = gamma_poly_brute(2, 2).unwrap();
    let literal = gamma_series_closed(2, 2, GammaForm::Literal).coeff(2);
    // q + v + tuv
    let corrected_shape = qt_uv2_times(&[[1, 0, 0, 0], [0, 0, 0, 1], [0, 1, 1, 1]]);
    // 1 + qv + tuv
    let literal_shape = qt_uv2_times(&[[0, 0, 0, 0], [1, 0, 0, 1], [0, 1, 1, 1]]);
    ensure(brute == corrected_shape, || format!("brute {brute}"))?;
    ensure(literal == literal_shape, || format!("literal {literal}"))?;
    ensure(literal != brute, || {
        "literal form unexpectedly agrees".into()
    })
}

fn bound_families() -> Result<(), String> {
    for m in 2..=3u32 {
        let b = fuss_catalan_series(m, 7);
        for k in 1..=3 {
            for r in 0..m {
                let fam = BoundFamily::new(m, k, r).unwrap();
                let h = h_series(&fam, 7);
                ensure(h == b.pow(m * k - r), || format!("m={m} k={k} r={r}"))?;
                // direct enumeration for the short lengths
                for n in 0..=4 {
                    let listed = enumerate_u_pk(n, &fam).unwrap().count();
                    let coeff = h.coeff(n).eval(&[]).unwrap();
                    ensure(coeff == BigInt::from(listed), || {
                        format!("m={m} k={k} r={r} n={n}")
                    })?;
                }
            }
        }
    }
    Ok(())
}

fn tensor() -> Result<(), String> {
    let t = JointCountTensor::new(2, 4).unwrap();
    for k0 in 1..=4u32 {
        for k1 in 1..=4u32 {
            for k2 in 1..=4u32 {
                let want: u32 = match k0 + k1 + k2 {
                    4 => 7,
                    5 => 4,
                    6 => 1,
                    _ => 0,
                };
                let got = t.get(&[k0, k1, k2]);
                ensure(got == want.into(), || format!("({k0},{k1},{k2}) = {got}"))?;
            }
        }
    }
    for (m, n_max) in [(2u32, 5usize), (3, 4)] {
        for n in 2..=n_max {
            let t = JointCountTensor::new(m, n).unwrap();
            ensure(t.symmetry_violation().is_none(), || {
                format!("m={m} n={n}: {:?}", t.symmetry_violation())
            })?;
            ensure(t.total() == fuss_catalan(m, n), || {
                format!("m={m} n={n} total")
            })?;
        }
    }
    Ok(())
}

const ETA_GOLDEN: [(&str, &str); 12] = [
    ("1,1,1", "1,1,1"),
    ("1,1,2", "1,1,4"),
    ("1,1,3", "1,1,5"),
    ("1,1,4", "1,1,2"),
    ("1,1,5", "1,1,3"),
    ("1,2,2", "1,2,2"),
    ("1,2,3", "1,2,4"),
    ("1,2,4", "1,2,5"),
    ("1,2,5", "1,2,3"),
    ("1,3,3", "1,3,3"),
    ("1,3,4", "1,3,4"),
    ("1,3,5", "1,3,5"),
];

fn eta_checks() -> Result<(), String> {
    for (p, want) in ETA_GOLDEN {
        let p: ParkingSeq = p.parse().unwrap();
        let got = eta(&p, 2).unwrap().to_csv();
        ensure(got == want, || format!("eta({p}) = {got}"))?;
    }
    for m in 1..=3u32 {
        for n in 1..=6 {
            for p in enumerate_u_pk(n, &canonical(m)).unwrap() {
                let e = eta(&p, m).unwrap();
                ensure(eta_inv(&e, m).unwrap() == p, || {
                    format!("m={m}: eta_inv fails at {p}")
                })?;
                let d = decompose(&p, m).unwrap();
                ensure(u_omega(&e, 1) == 1 + u_omega(d.component(1), 1), || {
                    format!("omega_1 at {p}")
                })?;
                for j in 2..=m as usize + 1 {
                    ensure(u_omega(&e, j as u32) == u_omega(d.component(j), 1), || {
                        format!("omega_{j} at {p}")
                    })?;
                }
            }
        }
    }
    Ok(())
}

fn product_formula() -> Result<(), String> {
    for (m, order) in [(2u32, 5usize), (3, 4)] {
        let closed = multi_stat_series_closed(m, order, ProductForm::Corrected);
        for n in 0..=order {
            // built from the parking process on Cat_m(n)
            let brute = multi_stat_poly_brute(m, n).unwrap();
            ensure(closed.coeff(n) == brute, || format!("m={m} n={n}"))?;
        }
        ensure(closed.variables() == multi_stat_vars(m).as_slice(), || {
            "variables".into()
        })?;
    }
    Ok(())
}

fn functional_equation() -> Result<(), String> {
    for m in 1..=4u32 {
        let b = fuss_catalan_series(m, 12);
        let one = catpark::TruncatedSeries::one(Vec::new(), 12);
        let rhs = one.add(&b.pow(m + 1).shift()).unwrap();
        ensure(b == rhs, || format!("m={m}"))?;
        for n in 0..=12 {
            let c = b.coeff(n).eval(&[]).unwrap();
            ensure(
                c == BigInt::from(fuss_catalan_oracle(m.into(), n as u64)),
                || format!("m={m} n={n}"),
            )?;
        }
    }
    Ok(())
}

fn errata() -> Result<(), String> {
    let mut cfg = VerifyConfig::new(Scope::Errata);
    cfg.deterministic = true;
    let report = verify::run(&cfg);
    ensure(report.passed(), || report.summary())?;
    let luck = report
        .find("luck-series-literal-exponent")
        .next()
        .ok_or("missing luck erratum")?;
    ensure(luck.status == Status::Erratum, || "luck status".into())?;
    let c = luck.counterexample.as_ref().unwrap();
    ensure(
        c["literal"] == "q^2 + q" && c["enumerated"] == "q^2 + 2*q",
        || c.to_string(),
    )?;
    let count = report
        .find("parking-count-displayed-formula")
        .next()
        .ok_or("missing count erratum")?;
    ensure(count.status == Status::Erratum, || "count status".into())?;
    let c = count.counterexample.as_ref().unwrap();
    ensure(
        c["enumerated"] == 12 && c["fuss_catalan_m_plus_1_n_minus_1"] == "4",
        || c.to_string(),
    )?;
    // the corrected luck series passes where the literal one fails
    let corrected = r_series_closed(2, 2, LuckSeriesForm::Corrected).coeff(2);
    ensure(corrected == r_poly_brute(2, 2).unwrap(), || {
        corrected.to_string()
    })
}

const CRITERIA: [(&str, u64, Check); 12] = [
    (
        "counting: DP = Fuss-Catalan = enumeration, m<=4, n<=8",
        60,
        counting,
    ),
    ("theta table byte-exact", 1, theta_table),
    (
        "luck polynomials as printed; closed form to n=8",
        30,
        luck_polynomials,
    ),
    (
        "tau involution and luck/omega_1 exchange, m<=3, n<=7",
        60,
        exchange,
    ),
    ("gamma h-vectors for m=2,3,4", 10, h_vectors),
    (
        "gamma closed form (corrected) and literal mismatch",
        60,
        gamma_series,
    ),
    ("bound-family series are powers of B_m", 30, bound_families),
    ("joint-count tensor B_2(4,.) and symmetry", 60, tensor),
    (
        "eta table, bijectivity and frequency relations",
        60,
        eta_checks,
    ),
    (
        "multi-statistic product formula via simulation",
        120,
        product_formula,
    ),
    (
        "Fuss-Catalan functional equation to order 12",
        5,
        functional_equation,
    ),
    (
        "errata: literal luck exponent and displayed count",
        10,
        errata,
    ),
];

fn main() {
    let mut failures = 0;
    for (i, (name, limit, check)) in CRITERIA.iter().enumerate() {
        let start = Instant::now();
        let result =
            panic::catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let within = elapsed <= Duration::from_secs(*limit);
        let verdict = match (&result, within) {
            (Ok(()), true) => "PASS".to_string(),
            (Ok(()), false) => format!("FAIL (over the {limit}s limit)"),
            (Err(e), _) => format!("FAIL ({e})"),
        };
        if !verdict.starts_with("PASS") {
            failures += 1;
        }
        println!(
            "criterion {:>2}: {verdict} [{:.2}s / {limit}s] {name}",
            i + 1,
            elapsed.as_secs_f64()
        );
    }
    println!(
        "acceptance: {} of {} criteria passed",
        CRITERIA.len() - failures,
        CRITERIA.len()
    );
    if failures > 0 {
        std::process::exit(1);
    }
}
