//! Property tests for the library invariants.

use num::complex::Complex64;
use proptest::prelude::*;
use std::f64::consts::PI;

use umbra::cli::{parse_param_list, RangeSpec, RunConfig};
use umbra::solutions::{oscillator_energy, oscillator_evolve, OscillatorState, TodaParams};
use umbra::specfun::{
    gauss_2f1_connection, gauss_2f1_pfaff, gauss_2f1_series, lerch_nonpos, ln_gamma, pfq_eval, tricomi_u, EvalMode,
    HyperSpec,
};
use umbra::umbral_core::{falling_factorial, forward_difference, umbral_exp, umbral_trig};
use umbra::umbral_map::{
    fourier_umbral_transform, hyper_map_basic, hyper_map_exponential, hyper_map_power_argument, umbral_hyper_map,
    umbral_series_transform, LemmaInput, Spectrum, UmbralSeries,
};
use umbra::{GridFunction, Lattice, Number};

fn rational() -> impl Strategy<Value = Number> {
    (-24i64..=24, 1i64..=8).prop_map(|(p, q)| Number::ratio(p, q))
}

fn positive_rational() -> impl Strategy<Value = Number> {
    (1i64..=16, 1i64..=8).prop_map(|(p, q)| Number::ratio(p, q))
}

fn nonzero_rational() -> impl Strategy<Value = Number> {
    rational().prop_filter("nonzero", |v| !v.is_zero())
}

fn lattice_grid(a: &Number, len: usize, f: impl FnMut(&Number) -> umbra::Result<Number>) -> GridFunction {
    GridFunction::sample(Lattice::new(a.clone()).unwrap(), Number::zero(), len, f).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn basic_polynomials_multiply(t in rational(), a in nonzero_rational(), n in 0u32..=12, m_frac in 0.0f64..=1.0) {
        let m = ((n as f64) * m_frac).floor() as u32;
        let am = &a * &Number::int(m as i64);
        let lhs = &falling_factorial(&t, &a, m) * &falling_factorial(&(&t - &am), &a, n - m);
        prop_assert_eq!(lhs, falling_factorial(&t, &a, n));
    }

    #[test]
    fn basic_polynomials_vanish_below_degree(a in nonzero_rational(), n in 1u32..=12, m_frac in 0.0f64..1.0) {
        let m = ((n as f64) * m_frac).floor() as i64;
        prop_assert!(falling_factorial(&(&a * &Number::int(m)), &a, n).is_zero());
    }

    #[test]
    fn umbral_exp_is_difference_eigenfunction(lambda in rational(), a in positive_rational(), len in 2usize..=10) {
        prop_assume!(!(&Number::one() + &(&lambda * &a)).is_zero());
        let g = lattice_grid(&a, len, |t| umbral_exp(&lambda, t, &a));
        let d = forward_difference(&g, 1).unwrap();
        for (j, v) in d.samples().iter().enumerate() {
            prop_assert_eq!(v.clone(), &lambda * &g.samples()[j]);
        }
    }

    #[test]
    fn umbral_exp_generates_basic_polynomials(t in -4.0f64..4.0, a in 0.1f64..2.0, n in 0u32..=4) {
        let f = |l: f64| (1.0 + l * a).powf(t / a);
        let stencil = |h: f64| {
            let mut s = 0.0;
            let mut c = 1.0;
            for k in 0..=n {
                s += c * f((n as f64 / 2.0 - k as f64) * h);
                c *= -((n - k) as f64) / (k + 1) as f64;
            }
            s / h.powi(n as i32)
        };
        // step scaled to the width of (1+λa)^{t/a}, two Richardson levels
        let scale = t.abs() + n as f64 * a + 1.0;
        let h = 0.1 / scale;
        let r1 = |h: f64| (4.0 * stencil(h / 2.0) - stencil(h)) / 3.0;
        let deriv = (16.0 * r1(h / 2.0) - r1(h)) / 15.0;
        let expect = falling_factorial(&Number::real(t), &Number::real(a), n).to_f64();
        // relative to the size of [t]^n over the window, since it has zeros
        prop_assert!((deriv - expect).abs() <= 1e-6 * scale.powi(n as i32), "{} vs {}", deriv, expect);
    }

    #[test]
    fn umbral_trig_differences_rotate(a in positive_rational(), len in 2usize..=12) {
        let sin = lattice_grid(&a, len, |t| umbral_trig(t, &a).map(|p| p.0));
        let cos = lattice_grid(&a, len, |t| umbral_trig(t, &a).map(|p| p.1));
        let ds = forward_difference(&sin, 1).unwrap();
        let dc = forward_difference(&cos, 1).unwrap();
        for j in 0..ds.len() {
            prop_assert_eq!(ds.samples()[j].clone(), cos.samples()[j].clone());
            prop_assert_eq!(dc.samples()[j].clone(), -&sin.samples()[j]);
        }
    }

    #[test]
    fn log_gamma_reflection(x in 0.01f64..0.99, y in -2.0f64..2.0, on_line in any::<bool>()) {
        let z = if on_line { Complex64::new(1.0, y) } else { Complex64::new(x, 0.0) };
        prop_assume!(z.norm() > 1e-3 && (z - 1.0).norm() > 1e-3);
        let v = (ln_gamma(z).unwrap() + ln_gamma(1.0 - z).unwrap()).exp() * (z * PI).sin() / PI;
        prop_assert!((v - 1.0).norm() < 1e-11, "{}", v);
    }

    #[test]
    fn terminating_series_exact_matches_float(
        n in 0i64..=20,
        num in prop::collection::vec(positive_rational(), 0..=2),
        den in prop::collection::vec(positive_rational(), 0..=2),
        c in positive_rational(),
    ) {
        let mut numerator = vec![Number::int(-n)];
        numerator.extend(num);
        let spec = HyperSpec::new(numerator, den, -&c).unwrap();
        let exact = pfq_eval(&spec, EvalMode::Exact, 0.0).unwrap();
        let float = pfq_eval(&spec, EvalMode::Float, 1e-16).unwrap().to_f64();
        prop_assert!(exact.is_exact());
        let e = exact.to_f64();
        prop_assert!((e - float).abs() <= 1e-13 * e.abs(), "{} vs {}", e, float);
    }

    #[test]
    fn gauss_methods_meet_at_boundaries(a in 0.1f64..2.0, b in 0.1f64..2.0, c in 0.6f64..3.0) {
        prop_assume!(((a - b) - (a - b).round()).abs() > 0.05);
        let s = gauss_2f1_series(a, b, c, -0.9).unwrap();
        let p = gauss_2f1_pfaff(a, b, c, -0.9).unwrap();
        prop_assert!((s - p).abs() <= 1e-8 * s.abs().max(1.0), "{} vs {}", s, p);
        let p = gauss_2f1_pfaff(a, b, c, -5.0).unwrap();
        let k = gauss_2f1_connection(a, b, c, -5.0).unwrap();
        prop_assert!((k - p).abs() <= 1e-8 * p.abs().max(1.0), "{} vs {}", k, p);
    }

    #[test]
    fn lerch_matches_defining_series(z in -0.7f64..=0.7, j in 1u32..=6) {
        let closed = lerch_nonpos(&Number::real(z), j).unwrap().to_f64();
        let mut sum = 0.0;
        for k in 0usize.. {
            let t = z.powi(k as i32) * (k as f64).powi(j as i32 - 1);
            sum += if k == 0 && j == 1 { 1.0 } else { t };
            if k > 0 && z.abs().powi(k as i32) * (k as f64).powi(j as i32 - 1) < 1e-18 {
                break;
            }
        }
        prop_assert!((closed - sum).abs() <= 1e-12 * sum.abs().max(1.0), "{} vs {}", closed, sum);
    }

    #[test]
    fn mapped_series_equals_direct_umbral_sum(alpha in rational(), beta in positive_rational(), c in rational(), a in positive_rational(), n in 0i64..=40) {
        let f = HyperSpec::new(vec![alpha], vec![beta], c).unwrap();
        let x = &a * &Number::int(n);
        let mapped = hyper_map_basic(&LemmaInput::plain(f.clone(), a.clone(), x.clone())).unwrap();
        let lhs = pfq_eval(&mapped, EvalMode::Exact, 0.0).unwrap();
        let rhs = umbral_series_transform(&UmbralSeries::from_hyper(&f), &x, &a, 0.0).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn difference_intertwines_with_derivative(lambda in rational(), a in positive_rational(), len in 2usize..=10) {
        let f = UmbralSeries::exp(lambda);
        let df = f.derivative();
        let g = lattice_grid(&a, len, |x| umbral_series_transform(&f, x, &a, 0.0));
        let dg = lattice_grid(&a, len - 1, |x| umbral_series_transform(&df, x, &a, 0.0));
        let d = forward_difference(&g, 1).unwrap();
        prop_assert_eq!(d.samples(), dg.samples());
    }

    #[test]
    fn general_map_reduces_to_special_cases(
        num in prop::collection::vec(rational(), 0..=2),
        den in prop::collection::vec(positive_rational(), 0..=2),
        c in nonzero_rational(),
        a in positive_rational(),
        x in rational(),
        k in 1u32..=4,
        lambda in positive_rational(),
    ) {
        let base = LemmaInput::plain(HyperSpec::new(num, den, c).unwrap(), a, x);
        let with_k = base.clone().with_power_argument(k);
        let with_l = with_k.clone().with_exponential(lambda);
        prop_assert_eq!(umbral_hyper_map(&with_l).unwrap(), hyper_map_exponential(&with_l).unwrap());
        prop_assert_eq!(umbral_hyper_map(&with_k).unwrap(), hyper_map_power_argument(&with_k).unwrap());
        prop_assert_eq!(hyper_map_exponential(&with_k).unwrap(), hyper_map_power_argument(&with_k).unwrap());
        prop_assert_eq!(umbral_hyper_map(&base).unwrap(), hyper_map_basic(&base).unwrap());
    }

    #[test]
    fn oscillator_energy_is_invariant(x0 in rational(), p0 in rational(), a in positive_rational(), j in 1i64..=30) {
        let s0 = OscillatorState::new(x0, p0, a.clone());
        let s = oscillator_evolve(&s0, &(&a * &Number::int(j))).unwrap();
        prop_assert_eq!(oscillator_energy(&s).unwrap(), oscillator_energy(&s0).unwrap());
    }

    #[test]
    fn toda_gamma_is_structural(beta in -3.0f64..3.0, branch in prop::sample::select(vec![1i8, -1])) {
        prop_assume!(beta.abs() > 1e-3);
        let p = TodaParams::new(0.0, 1.0, beta, branch).unwrap();
        prop_assert_eq!(p.gamma(), branch as f64 * 2.0 * (beta / 2.0).sinh());
    }

    #[test]
    fn ranges_round_trip(start in rational(), span in positive_rational(), count in prop::option::of(1usize..50)) {
        let r = RangeSpec { start: start.clone(), stop: &start + &span, count };
        let back: RangeSpec = r.to_string().parse().unwrap();
        prop_assert_eq!(back, r);
    }

    #[test]
    fn param_lists_round_trip(values in prop::collection::vec(rational(), 0..6)) {
        let text: Vec<String> = values.iter().map(Number::to_string).collect();
        prop_assert_eq!(parse_param_list(&text.join(", ")).unwrap(), values.clone());
        prop_assert_eq!(parse_param_list(&format!("[{}]", text.join(" "))).unwrap(), values);
    }

    #[test]
    fn run_config_round_trips(a in prop::option::of(rational()), kappa in prop::option::of(rational()), steps in prop::option::of(0usize..100), alpha in prop::option::of(0.1f64..5.0)) {
        let cfg = RunConfig { a, kappa, steps, alpha, ..Default::default() };
        let text = cfg.to_toml().unwrap();
        prop_assert_eq!(RunConfig::from_toml(&text).unwrap(), cfg);
    }
}

#[test]
fn tricomi_u_decays_like_power() {
    let v = tricomi_u(1.0, 1.0 / 3.0, 50.0).unwrap() * 50.0;
    assert!((v - 0.968325022729520537698856364801).abs() < 1e-12, "{v}");
    let v = tricomi_u(1.0, 1.0 / 3.0, 2000.0).unwrap() * 2000.0;
    assert!((v - 1.0).abs() < 1e-3, "{v}");
}

#[test]
fn plane_wave_transform_is_umbral_exponential() {
    for omega in [0.5, 1.0, 2.0] {
        for a in [0.25, 1.0] {
            for x in [0.0, 0.7, 2.0, 3.5] {
                let v = fourier_umbral_transform(&Spectrum::PlaneWave { omega }, x, a, Default::default()).unwrap();
                let expect = umbral_exp(&Number::complex(0.0, omega), &Number::real(x), &Number::real(a))
                    .unwrap()
                    .to_complex();
                assert!((v - expect).norm() < 1e-12);
            }
        }
    }
}
