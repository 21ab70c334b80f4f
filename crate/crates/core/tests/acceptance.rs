//! Acceptance gate. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::f64::consts::PI;
use std::process::Command;
use std::time::Instant;

use logzeta::arithmetic::{build_mangoldt, compensating_integral, lambda_weighted_sum, MangoldtTable};
use logzeta::combinatorics::{binomial, factorial};
use logzeta::li::{
    gamma_term_closed_form, gamma_term_value, li_sum_arithmetic_side, li_sum_derivative_side, li_sum_factorized,
    mellin_consistency, p_polynomial, p_polynomial_laguerre, p_tilde, p_tilde_laguerre, pole_term_oracle,
    pole_term_value,
};
use logzeta::logderiv::{eta_coefficient, line_one_oscillation, residual_report};
use logzeta::special::quadrature::integrate_to_infinity;
use logzeta::special::{
    cauchy_log_derivative, digamma, hurwitz_zeta, log_gamma, log_zeta_derivatives, zeta, zeta_with_derivatives,
};
use logzeta::{BoundParameters, PrecisionConfig};
use num_complex::Complex64;

const MILLION: usize = 1_000_000;
const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn re(x: f64) -> Complex64 {
    c(x, 0.0)
}

struct Verdict {
    pass: bool,
    notes: Vec<String>,
}

impl Verdict {
    fn new() -> Self {
        Verdict {
            pass: true,
            notes: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, note: String) {
        if !ok {
            self.pass = false;
            self.notes.push(format!("FAILED {note}"));
        }
    }

    fn note(&mut self, note: String) {
        self.notes.push(note);
    }
}

type Outcome = Result<Verdict, logzeta::Error>;
type Criterion<'a> = (u32, &'static str, Box<dyn Fn() -> Outcome + 'a>);

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let mut v = Verdict::new();
    let table = build_mangoldt(MILLION)?;
    let bp = BoundParameters::default();
    let cfg = PrecisionConfig::default();
    let b55 = bp.bound(1, re(0.55), MILLION);
    let b95 = bp.bound(1, re(0.95), MILLION);
    v.check((b55 - 10f64.powf(-0.3)).abs() <= 1e-12, format!("bound(0.55) = {b55}"));
    v.check((b95 - 10f64.powf(-2.7)).abs() <= 1e-12, format!("bound(0.95) = {b95}"));
    let r95 = residual_report(&table, 1, re(0.95), MILLION, &bp, &cfg)?;
    let r55 = residual_report(&table, 1, re(0.55), MILLION, &bp, &cfg)?;
    v.check(r95.ratio <= 10.0, format!("ratio(0.95) = {}", r95.ratio));
    v.check(
        (0.01..=10.0).contains(&r55.ratio),
        format!("ratio(0.55) = {}", r55.ratio),
    );
    let elapsed = start.elapsed().as_secs_f64();
    v.check(elapsed <= 60.0, format!("runtime {elapsed:.1} s"));
    v.note(format!(
        "bounds {b55:.6} / {b95:.6}, residuals {:.3e} / {:.3e}, ratios {:.3} / {:.3}, {elapsed:.2} s",
        r55.residual_abs, r95.residual_abs, r55.ratio, r95.ratio
    ));
    Ok(v)
}

fn criterion_2(table: &MangoldtTable) -> Outcome {
    let start = Instant::now();
    let mut v = Verdict::new();
    let bp = BoundParameters::default();
    let cfg = PrecisionConfig::default();
    let ln_n = (MILLION as f64).ln();
    let mut worst = 0.0f64;
    for a in [0.6, 0.75, 0.9] {
        for n in 1..=2u32 {
            let r = residual_report(table, n, re(a), MILLION, &bp, &cfg)?;
            let limit = 10.0 * (MILLION as f64).powf(0.5 - a) * ln_n.powi(n as i32 - 1);
            v.check(
                r.residual_abs <= limit,
                format!("a = {a}, n = {n}: {:.3e} > {limit:.3e}", r.residual_abs),
            );
            worst = worst.max(r.residual_abs / limit);
        }
    }
    let elapsed = start.elapsed().as_secs_f64();
    v.check(elapsed <= 120.0, format!("runtime {elapsed:.1} s"));
    v.note(format!("largest residual / tolerance = {worst:.3}, {elapsed:.2} s"));
    Ok(v)
}

fn criterion_3(table: &MangoldtTable) -> Outcome {
    let mut v = Verdict::new();
    let cfg = PrecisionConfig::default();
    let ln_n = (MILLION as f64).ln();
    let mut single = 0usize;
    let mut scaled = 0usize;
    let mut tally = |arith: Complex64, factorized: Complex64, n: u32, tol: f64| {
        if n >= 2 {
            if (arith - factorized).norm() <= tol {
                single += 1;
            }
            if (arith - factorized * n as f64).norm() <= tol {
                scaled += 1;
            }
        }
    };
    let a = re(3.0);
    for n in 1..=4u32 {
        let arith = li_sum_arithmetic_side(table, n, a, MILLION, &cfg)?;
        let deriv = li_sum_derivative_side(n, a, &cfg)?;
        let gap = (arith - deriv).norm();
        v.check(gap <= 1e-6, format!("a = 3, n = {n}: gap {gap:.3e}"));
        tally(arith, li_sum_factorized(n, a, &cfg)?, n, 1e-6);
    }
    let a = re(0.75);
    for n in 1..=3u32 {
        let arith = li_sum_arithmetic_side(table, n, a, MILLION, &cfg)?;
        let deriv = li_sum_derivative_side(n, a, &cfg)?;
        let gap = (arith - deriv).norm();
        let tol = 10.0 * (MILLION as f64).powf(-0.25) * ln_n.powi(n as i32 - 1);
        v.check(gap <= tol, format!("a = 0.75, n = {n}: gap {gap:.3e} > {tol:.3e}"));
    }
    v.note(format!(
        "convergent-regime cases n = 2..4 matching the xi-chain with prefactor (2a-1)/(n-1)!: {single} of 3; with n(2a-1)/(n-1)!: {scaled} of 3"
    ));
    Ok(v)
}

/// `(-1)^k Σ Λ(m) ln^(k-1)m / m^s` from a 10⁷ table, with the remainder
/// `∫_N^∞ f - f(N)(ψ(N) - N)` for `f(x) = ln^(k-1)x / x^s`.
fn dirichlet_log_derivative(
    table: &MangoldtTable,
    s: f64,
    k: u32,
    cfg: &PrecisionConfig,
) -> Result<f64, logzeta::Error> {
    let big_n = table.limit();
    let nf = big_n as f64;
    let f = |x: f64| x.ln().powi(k as i32 - 1) * x.powf(-s);
    let head = lambda_weighted_sum(table, re(s), k, big_n)?.re;
    // x = N e^v
    let tail = integrate_to_infinity(
        |v| {
            let x = nf * v.exp();
            if x.is_finite() {
                re(f(x) * x)
            } else {
                re(0.0)
            }
        },
        0.0,
        cfg.quad_rel_tol,
        0.0,
    )?
    .value
    .re;
    let boundary = f(nf) * (table.chebyshev_psi(big_n)? - nf);
    let sign = if k.is_multiple_of(2) { 1.0 } else { -1.0 };
    Ok(sign * (head + tail - boundary))
}

fn criterion_4() -> Outcome {
    let mut v = Verdict::new();
    let cfg = PrecisionConfig::default();
    let mut classical = |label: &str, got: f64, want: f64| {
        v.check((got - want).abs() <= 1e-10, format!("{label}: {got} vs {want}"));
    };
    classical("ζ(2)", zeta(re(2.0), &cfg)?.re, PI * PI / 6.0);
    let at_zero = zeta_with_derivatives(re(0.0), 1, &cfg)?;
    classical("ζ(0)", at_zero[0].re, -0.5);
    classical("ζ'(0)", at_zero[1].re, -0.5 * (2.0 * PI).ln());
    classical("ψ(1)", digamma(re(1.0), &cfg)?.re, -EULER_GAMMA);
    classical("ψ(1/2)", digamma(re(0.5), &cfg)?.re, -EULER_GAMMA - 2.0 * 2f64.ln());
    classical("ln Γ(1/2)", log_gamma(re(0.5), &cfg)?.re, 0.5 * PI.ln());
    classical("ζ(2, 1/2)", hurwitz_zeta(2, re(0.5), &cfg)?.re, PI * PI / 2.0);

    let table = build_mangoldt(10_000_000)?;
    let mut worst = 0.0f64;
    for s in [2.0, 3.0, 4.0] {
        let derivs = log_zeta_derivatives(re(s), 4, &cfg)?;
        for k in 1..=4u32 {
            let oracle = dirichlet_log_derivative(&table, s, k, &cfg)?;
            let gap = (derivs[k as usize - 1] - re(oracle)).norm();
            worst = worst.max(gap);
            v.check(gap <= 1e-8, format!("s = {s}, k = {k}: gap {gap:.3e}"));
        }
    }
    v.note(format!("largest Dirichlet-series gap {worst:.3e}"));
    Ok(v)
}

/// The compensating integral with the sign pattern `(-1)^(l+j)` in place of `(-1)^(l-1)`.
fn alternate_sign_integral(a: Complex64, j: u32, big_n: f64) -> Complex64 {
    let one_minus_a = re(1.0) - a;
    let ln_n = big_n.ln();
    let mut acc = re(0.0);
    for l in 1..=j {
        let sign = if (l + j).is_multiple_of(2) { 1.0 } else { -1.0 };
        let weight = sign * factorial(j - 1) / factorial(j - l) * ln_n.powi((j - l) as i32);
        acc += one_minus_a.powi(-(l as i32)) * weight;
    }
    acc * (one_minus_a * ln_n).exp()
}

fn criterion_5() -> Outcome {
    let mut v = Verdict::new();
    let mut worst = 0.0f64;
    let mut alternate_j2 = f64::INFINITY;
    for j in 1..=6u32 {
        for a in [re(0.2), re(0.55), c(0.75, 0.5)] {
            for big_n in [10.0, 1e3, 1e6] {
                let closed = compensating_integral(a, j, big_n)?;
                let ln_n = big_n.ln();
                let rate = re(1.0) - a;
                // x = N e^(-u)
                let quad =
                    integrate_to_infinity(|u| (-rate * u).exp() * (ln_n - u).powi(j as i32 - 1), 0.0, 1e-14, 0.0)?
                        .value
                        * (rate * ln_n).exp();
                let rel = (closed - quad).norm() / quad.norm();
                worst = worst.max(rel);
                v.check(
                    rel <= 1e-10,
                    format!("j = {j}, a = {a}, N = {big_n}: relative error {rel:.3e}"),
                );
                if j == 2 {
                    let alt = alternate_sign_integral(a, j, big_n);
                    alternate_j2 = alternate_j2.min((alt - quad).norm() / quad.norm());
                }
            }
        }
    }
    v.check(
        alternate_j2 > 1e-3,
        format!("(-1)^(l+j) sign pattern unexpectedly matches at j = 2 ({alternate_j2:.3e})"),
    );
    v.note(format!(
        "largest relative error {worst:.3e}; the (-1)^(l+j) sign pattern at j = 2 is off by at least {alternate_j2:.3} relative"
    ));
    Ok(v)
}

/// Gamma-term series form `(1/(n(2a-1))) Σ_k (1 - (1+x_k)ⁿ + n x_k) + ψ(a/2)/2 + 1/a`,
/// `x_k = (2a-1)/(-2k-a)`. With `- n x_k` instead the summand is `O(1/k)`
/// and the series diverges.
fn series_gamma_term(n: u32, a: f64, cfg: &PrecisionConfig) -> Result<f64, logzeta::Error> {
    let cc = 2.0 * a - 1.0;
    let terms = 200_000u32;
    let mut acc = 0.0;
    for k in (1..=terms).rev() {
        let x = cc / (-2.0 * k as f64 - a);
        acc += 1.0 - (1.0 + x).powi(n as i32) + n as f64 * x;
    }
    acc -= binomial(n, 2) * cc * cc / (4.0 * terms as f64);
    Ok(acc / (n as f64 * cc) + 0.5 * digamma(re(a * 0.5), cfg)?.re + 1.0 / a)
}

fn criterion_6() -> Outcome {
    let mut v = Verdict::new();
    let cfg = PrecisionConfig::default();
    let mut worst = 0.0f64;
    let mut series_gamma_gap = f64::INFINITY;
    let mut scaled_pole_gap = f64::INFINITY;
    for n in 1..=5u32 {
        for a in [0.7, 0.9, 2.0] {
            let z = re(a);
            let gamma_closed = gamma_term_closed_form(n, z, &cfg)?;
            let gamma_oracle = gamma_term_value(n, z, &cfg)?;
            let pole_closed = pole_term_value(n, z)?;
            let pole_oracle = pole_term_oracle(n, z, &cfg)?;
            let g_gap = (gamma_closed - gamma_oracle).norm();
            let p_gap = (pole_closed - pole_oracle).norm();
            worst = worst.max(g_gap).max(p_gap);
            v.check(g_gap <= 1e-8, format!("gamma term n = {n}, a = {a}: gap {g_gap:.3e}"));
            v.check(p_gap <= 1e-8, format!("pole term n = {n}, a = {a}: gap {p_gap:.3e}"));
            if n == 1 {
                let special = 1.0 / a + 0.5 * digamma(re(a * 0.5), &cfg)?.re;
                v.check(
                    (gamma_closed.re - special).abs() <= 1e-10,
                    format!("gamma term n = 1, a = {a}"),
                );
                v.check(
                    (gamma_oracle.re - special).abs() <= 1e-10,
                    format!("gamma oracle n = 1, a = {a}"),
                );
                let special = 1.0 / (a - 1.0);
                v.check(
                    (pole_closed.re - special).abs() <= 1e-10,
                    format!("pole term n = 1, a = {a}"),
                );
                v.check(
                    (pole_oracle.re - special).abs() <= 1e-10,
                    format!("pole oracle n = 1, a = {a}"),
                );
            } else {
                let series = series_gamma_term(n, a, &cfg)?;
                series_gamma_gap = series_gamma_gap.min((series - gamma_oracle.re).abs());
            }
            let scaled_pole = (1.0 - (1.0 + 1.0 / (1.0 - a)).powi(n as i32)) / (n as f64 * (2.0 * a - 1.0));
            scaled_pole_gap = scaled_pole_gap.min((scaled_pole - pole_oracle.re).abs());
        }
    }
    v.note(format!(
        "largest closed-form gap {worst:.3e}; series form of the gamma term misses by >= {series_gamma_gap:.3e} for n >= 2; (1 - (1 + 1/(1-a))ⁿ)/(n(2a-1)) misses the pole term by >= {scaled_pole_gap:.3e}"
    ));
    Ok(v)
}

fn criterion_7() -> Outcome {
    let mut v = Verdict::new();
    let cfg = PrecisionConfig::default();
    let grid_a = [re(0.6), re(0.75), re(2.0), c(1.5, 1.0)];
    let mut worst_p = 0.0f64;
    for n in 1..=8u32 {
        for &a in &grid_a {
            for x in [0.1, 0.5, 0.9] {
                let p = p_polynomial(n, a, x)?;
                let rel = (p - p_polynomial_laguerre(n, a, x)?).norm() / p.norm();
                let t = p_tilde(n, a, x)?;
                let rel_t = (t - p_tilde_laguerre(n, a, x)?).norm() / t.norm();
                worst_p = worst_p.max(rel).max(rel_t);
                v.check(
                    rel <= 1e-12 && rel_t <= 1e-12,
                    format!("n = {n}, a = {a}, x = {x}: {rel:.3e} / {rel_t:.3e}"),
                );
            }
        }
    }
    let mut worst_m = 0.0f64;
    for n in 1..=8u32 {
        for &a in &grid_a {
            for s in [re(2.0), c(1.5, 3.0), c(0.8, -2.0), c(4.0, 10.0)] {
                let (kernel, quad) = mellin_consistency(n, a, s, &cfg)?;
                let gap = (kernel - quad).norm();
                worst_m = worst_m.max(gap);
                v.check(gap <= 1e-8, format!("Mellin n = {n}, a = {a}, s = {s}: gap {gap:.3e}"));
            }
        }
    }
    v.note(format!(
        "largest P/Laguerre relative gap {worst_p:.3e}; largest Mellin gap {worst_m:.3e}"
    ));
    Ok(v)
}

fn criterion_8(table: &MangoldtTable) -> Outcome {
    let mut v = Verdict::new();
    let cfg = PrecisionConfig::default();
    let eta1 = eta_coefficient(table, 1, MILLION)?;
    let eta2 = eta_coefficient(table, 2, MILLION)?;
    let one = re(1.0);
    let regular = |s: Complex64| {
        if s == one {
            Ok(one)
        } else {
            Ok(zeta(s, &cfg)? * (s - 1.0))
        }
    };
    let oracle = cauchy_log_derivative(regular, one, 2, &cfg)?;
    v.check((eta1 - EULER_GAMMA).abs() <= 0.02, format!("η₁ = {eta1}"));
    v.check((eta2 - oracle.re).abs() <= 0.1, format!("η₂ = {eta2} vs {}", oracle.re));
    v.note(format!(
        "η₁ = {eta1:.6}, η₂ = {eta2:.6}, Cauchy second derivative {:.6}",
        oracle.re
    ));
    Ok(v)
}

fn median(values: &mut [f64]) -> f64 {
    values.sort_by(f64::total_cmp);
    values[values.len() / 2]
}

fn criterion_9(table: &MangoldtTable) -> Outcome {
    let mut v = Verdict::new();
    let cfg = PrecisionConfig::default();
    for t in [1.0, 2.0] {
        let mags: Vec<f64> = (1..=6)
            .map(|e| line_one_oscillation(table, t, 10usize.pow(e), &cfg).map(|z| z.norm()))
            .collect::<Result<_, _>>()?;
        let early = median(&mut mags[..3].to_vec());
        let late = median(&mut mags[3..].to_vec());
        v.check(
            late < early,
            format!("t = {t}: median {late:.3e} not below {early:.3e}"),
        );
        v.note(format!(
            "t = {t}: |value| at N = 10..10⁶: {}",
            mags.iter().map(|m| format!("{m:.3e}")).collect::<Vec<_>>().join(" ")
        ));

        let s = c(1.0, t);
        let prime_powers: [(f64, f64); 7] = [
            (2.0, 2f64.ln()),
            (3.0, 3f64.ln()),
            (4.0, 2f64.ln()),
            (5.0, 5f64.ln()),
            (7.0, 7f64.ln()),
            (8.0, 2f64.ln()),
            (9.0, 3f64.ln()),
        ];
        let sum: Complex64 = prime_powers.iter().map(|&(m, l)| (-s * m.ln()).exp() * l).sum();
        let hand = sum + log_zeta_derivatives(s, 1, &cfg)?[0] - Complex64::i() * c(0.0, -t * 10f64.ln()).exp() / t;
        let got = line_one_oscillation(table, t, 10, &cfg)?;
        v.check(
            (got - hand).norm() <= 1e-10,
            format!("t = {t}: N = 10 value {got} vs hand {hand}"),
        );
    }
    Ok(v)
}

fn criterion_10() -> Outcome {
    let mut v = Verdict::new();
    let dir = std::env::temp_dir().join(format!("logzeta-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).map_err(|e| logzeta::Error::Domain(e.to_string()))?;
    let runs: [(&str, &[&str]); 8] = [
        ("mangoldt", &["mangoldt", "--nmax", "1000"]),
        ("approx", &["approx", "--n", "1", "--a", "2", "--N", "10000"]),
        (
            "scan-a",
            &[
                "scan-a",
                "--n",
                "1",
                "--N",
                "1000000",
                "--grid",
                "0.5005:0.75:100",
                "--delta",
                "0",
            ],
        ),
        (
            "scan-n",
            &["scan-n", "--n", "1", "--a", "0.55", "--grid-log", "100:1000000:50"],
        ),
        ("li", &["li", "--n", "3", "--a", "0.75", "--N", "100000"]),
        ("identities", &["identities", "--n", "5", "--a", "0.7"]),
        ("eta", &["eta", "--n", "2", "--N", "100000"]),
        ("oscillation", &["oscillation", "--t", "2", "--N", "100000"]),
    ];
    for (name, args) in runs {
        let mut outputs = Vec::new();
        for round in 0..2 {
            let path = dir.join(format!("{name}-{round}.csv"));
            let status = Command::new(env!("CARGO_BIN_EXE_logzeta"))
                .args(args)
                .arg("--out")
                .arg(&path)
                .output()
                .map_err(|e| logzeta::Error::Domain(e.to_string()))?;
            v.check(status.status.success(), format!("{name} exited with {}", status.status));
            outputs.push(std::fs::read(&path).unwrap_or_default());
        }
        v.check(
            !outputs[0].is_empty() && outputs[0] == outputs[1],
            format!("{name}: outputs differ"),
        );
    }
    let _ = std::fs::remove_dir_all(&dir);
    v.note("8 subcommands, two runs each".into());
    Ok(v)
}

fn main() {
    let table = build_mangoldt(MILLION).expect("sieve to 10⁶");
    let criteria: Vec<Criterion> = vec![
        (
            1,
            "bound magnitudes and residual ratios at N = 10⁶",
            Box::new(criterion_1),
        ),
        (
            2,
            "first-order and second-order residuals in the strip",
            Box::new(|| criterion_2(&table)),
        ),
        (
            3,
            "arithmetic side against derivative side of the Li sums",
            Box::new(|| criterion_3(&table)),
        ),
        (4, "special-function oracles", Box::new(criterion_4)),
        (5, "compensating integral against quadrature", Box::new(criterion_5)),
        (
            6,
            "gamma-term and pole-term identities against Cauchy oracles",
            Box::new(criterion_6),
        ),
        (
            7,
            "P/Laguerre equivalence and Mellin consistency",
            Box::new(criterion_7),
        ),
        (8, "η-type coefficients", Box::new(|| criterion_8(&table))),
        (9, "oscillation on Re s = 1", Box::new(|| criterion_9(&table))),
        (10, "CLI determinism", Box::new(criterion_10)),
    ];
    let mut failures = 0;
    for (k, title, run) in &criteria {
        let start = Instant::now();
        let (pass, notes) = match run() {
            Ok(v) => (v.pass, v.notes),
            Err(e) => (false, vec![format!("error: {e}")]),
        };
        if !pass {
            failures += 1;
        }
        let status = if pass { "PASS" } else { "FAIL" };
        println!(
            "{status} criterion {k}: {title} ({:.2} s)",
            start.elapsed().as_secs_f64()
        );
        for note in notes {
            println!("    {note}");
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures > 0 {
        std::process::exit(1);
    }
}
