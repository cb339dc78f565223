use std::fs;

use proptest::prelude::*;
use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use zeta_lab::BrutePolicy;
use zeta_lab_cli::commands::{diag_rows, sweep_rows};
use zeta_lab_cli::report::{read_rows, render, Format};
use zeta_lab_cli::verify::{summarize, Bound, Check, Suite};
use zeta_lab_cli::{run, CliError, EvalRow, SweepConfig, SweepRow, VerifyRow, EXIT_DOMAIN, EXIT_IO, EXIT_OK, EXIT_USAGE, EXIT_VERIFY};

fn run_args(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("zeta-lab").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn finite() -> impl Strategy<Value = f64> {
    prop_oneof![
        any::<f64>().prop_filter("finite", |x| x.is_finite()),
        -1e3..1e3f64,
        Just(f64::MIN_POSITIVE),
        Just(5e-324),
        Just(f64::MAX),
    ]
}

proptest! {
    #[test]
    fn eval_rows_round_trip(re in finite(), im in finite(), abs in finite(), err in proptest::option::of(finite()), n in any::<u64>()) {
        let rows = vec![EvalRow {
            experiment_id: "eval-zeta".into(),
            sigma: re,
            t: im,
            what: "zeta".into(),
            re,
            im,
            abs,
            n_terms: n,
            method: "cvz".into(),
            error_estimate: err,
            wall_time_ms: 0,
        }];
        for format in [Format::Csv, Format::Json] {
            let bytes = render(&rows, format).unwrap();
            let back: Vec<EvalRow> = read_rows(std::str::from_utf8(&bytes).unwrap(), format).unwrap();
            prop_assert_eq!(back[0].re.to_bits(), re.to_bits());
            prop_assert_eq!(back[0].abs.to_bits(), abs.to_bits());
            prop_assert_eq!(back[0].error_estimate.map(f64::to_bits), err.map(f64::to_bits));
            prop_assert_eq!(&back, &rows);
        }
    }
}

#[test]
fn exit_codes() {
    assert_eq!(run_args(&["eval", "--s", "2", "--what", "zeta"]).0, EXIT_OK);
    assert_eq!(run_args(&["--help"]).0, EXIT_OK);
    assert_eq!(run_args(&[]).0, EXIT_USAGE);
    assert_eq!(run_args(&["eval", "--s", "2+", "--what", "zeta"]).0, EXIT_USAGE);
    assert_eq!(run_args(&["zeros", "20", "10"]).0, EXIT_USAGE);
    assert_eq!(run_args(&["eval", "--s", "0.5+500i", "--what", "eta"]).0, EXIT_USAGE);
    assert_eq!(run_args(&["sweep-u", "--t", "14", "--n", "100", "--grid", "0,0.5"]).0, EXIT_USAGE);
    assert_eq!(run_args(&["eval", "--s", "1", "--what", "zeta"]).0, EXIT_DOMAIN);
    assert_eq!(run_args(&["eval", "--s", "-2", "--what", "gamma"]).0, EXIT_DOMAIN);
    assert_eq!(run_args(&["zeros", "10", "20", "--out", "/nonexistent/dir/x.csv"]).0, EXIT_IO);
    assert_eq!(CliError::Verify("x".into()).exit_code(), EXIT_VERIFY);
}

#[test]
fn failing_check_fails_the_summary() {
    let row = VerifyRow {
        experiment_id: "verify-functional".into(),
        check: "functional-residual".into(),
        sigma: Some(0.5),
        t: Some(2.0),
        n: None,
        residual: 1.0,
        limit: 1e-6,
        passed: false,
        wall_time_ms: 0,
    };
    let (text, ok) = summarize(Suite::Functional, &[Check { suite: "functional", bound: Bound::Upper, row }]);
    assert!(!ok);
    assert!(text.ends_with("verify functional: FAIL (1 of 1 checks failed)\n"), "{text}");
}

#[test]
fn eval_appends_and_rejects_corrupt_files() {
    let dir = tempfile::tempdir().unwrap();
    for ext in ["csv", "json"] {
        let path = dir.path().join(format!("eval.{ext}"));
        let p = path.to_str().unwrap();
        assert_eq!(run_args(&["eval", "--s", "2", "--what", "zeta", "--out", p]).0, EXIT_OK);
        assert_eq!(run_args(&["eval", "--s", "0.5-3i", "--what", "eta", "--out", p]).0, EXIT_OK);
        let format = Format::from_path(&path).unwrap();
        let rows: Vec<EvalRow> = read_rows(&fs::read_to_string(&path).unwrap(), format).unwrap();
        assert_eq!(rows.len(), 2);
        assert!((rows[0].re - std::f64::consts::PI.powi(2) / 6.0).abs() < 1e-12);
        assert_eq!(rows[1].t, -3.0);

        fs::write(&path, "not a table{").unwrap();
        assert_eq!(run_args(&["eval", "--s", "2", "--what", "zeta", "--out", p]).0, EXIT_IO);
    }
}

#[test]
fn outputs_are_deterministic() {
    let args = ["diag", "--sigma-grid", "0.3,0.7", "--t", "5,-12.5", "--n-list", "10,100,1e3"];
    let (code, first, _) = run_args(&args);
    assert_eq!(code, EXIT_OK);
    assert_eq!(run_args(&args).1, first);
    let (code, first, _) = run_args(&["verify", "identity", "--seed", "7"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(run_args(&["verify", "identity", "--seed", "7"]).1, first);
    assert_ne!(run_args(&["verify", "identity", "--seed", "8"]).1, first);
}

#[test]
fn presets_show_their_regimes() {
    let dir = tempfile::tempdir().unwrap();
    let read = |preset: &str| {
        let path = dir.path().join(format!("{preset}.json"));
        let (code, _, err) = run_args(&["diag", "--preset", preset, "--out", path.to_str().unwrap()]);
        assert_eq!(code, EXIT_OK, "{err}");
        read_rows::<zeta_lab_cli::DiagRow>(&fs::read_to_string(&path).unwrap(), Format::Json).unwrap()
    };
    let lower = read("case-lower");
    assert!(lower.windows(2).all(|w| w[1].p_n > 2.0 * w[0].p_n));
    let critical = read("case-critical");
    assert_eq!(critical.len(), 5);
    for (r, w) in critical.iter().zip(critical.iter().skip(1)) {
        assert!(w.extra < r.extra);
    }
    let upper = read("case-upper");
    assert!(upper.iter().all(|r| (r.sigma - 0.7).abs() < 1e-15));
}

#[test]
fn sweep_matches_diag_and_refines() {
    let t = 14.134725;
    let config = SweepConfig {
        sigma_grid: vec![0.25, 0.5],
        t_values: vec![t],
        n_list: vec![500],
        output_path: None,
        format: Format::Csv,
        seed: 42,
    };
    let diag = diag_rows("diag", &config, BrutePolicy::Always, false).unwrap();
    let sweep = sweep_rows(t, &[500], &[0.25, 0.5], false).unwrap();
    for (d, s) in diag.iter().zip(&sweep) {
        assert!((d.t_n - s.f_n).abs() <= 1e-9 * d.t_n.abs().max(1.0));
    }

    let grid = |h: f64| -> Vec<f64> { (0..=4).map(|i| 0.4 + h * i as f64).collect() };
    let coarse: Vec<SweepRow> = sweep_rows(t, &[500], &grid(0.02), false).unwrap();
    let fine: Vec<SweepRow> = sweep_rows(t, &[500], &grid(0.01), false).unwrap();
    let ratio = fine[1].delta_f.unwrap() / coarse[1].delta_f.unwrap();
    assert!((ratio - 0.5).abs() < 0.05, "ratio {ratio}");
    assert!(coarse[0].delta_f.is_none());
}

#[test]
fn random_argument_lists_never_panic() {
    let dir = tempfile::tempdir().unwrap();
    let tokens = [
        "eval", "diag", "zeros", "sweep-u", "verify", "--s", "--what", "eta", "zeta", "gamma",
        "functional-residual", "--preset", "case-lower", "case-critical", "--sigma-grid", "--t",
        "--n-list", "--n", "--grid", "--format", "csv", "json", "--timing", "--seed", "--step",
        "--t-lo", "--t-hi", "functional", "identity", "0", "1", "-1", "0.5", "1e3", "1e9", "2+3i",
        "0.5+14.1i", "nan", "inf", "-inf", "0.1:0.9:0.2", "0.9:0.1:0.1", "10", "12", "1e-300",
        "", "x", ",,", "0.5,0.5", "100,10", "--no-brute", "--help", "--version",
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for case in 0..1000 {
        let len = rng.random_range(0..7);
        let mut args: Vec<String> = Vec::new();
        for _ in 0..len {
            if rng.random_bool(0.05) {
                args.push("--out".into());
                let target = if rng.random_bool(0.7) {
                    dir.path().join(format!("f{case}.{}", ["csv", "json", "txt"].choose(&mut rng).unwrap()))
                } else {
                    dir.path().join("missing").join("f.csv")
                };
                args.push(target.to_string_lossy().into_owned());
            } else {
                args.push(tokens.choose(&mut rng).unwrap().to_string());
            }
        }
        // skip the slow configurations
        if args.iter().any(|a| a == "1e9" || a == "--preset" || a == "verify") && args.iter().any(|a| a == "diag" || a == "verify") {
            continue;
        }
        let refs: Vec<&str> = args.iter().map(String::as_str).collect();
        let (code, _, _) = run_args(&refs);
        assert!((0..=4).contains(&code), "{args:?} -> {code}");
    }
}
