//! End-to-end acceptance checks. Runs without the libtest harness so that
//! every criterion prints its own line; exits non-zero if any fails.

use std::process::ExitCode;

use binterp::catalog::{
    catalan, catalan_even_sum, catalan_odd_sum, verify_identity, wz_certificate_failure, NamedSequence,
};
use binterp::decimation::{decimate_prefix, decimated_recurrence, decimation_operator};
use binterp::fixed_points::{
    alternating_sum_identity, charpoly_power_preservation, degree2_fixed_test, geometric_fixed_sequence,
};
use binterp::hankel::{hankel_scaling_check, hankel_transform};
use binterp::{
    apply, binomial, compose, epsilon, inverse, is_fixed_prefix, q, right_shift, transform_recurrence,
    variant_sequence, z, BinomialOperator, Degree2Spec, LinearRecurrence, MonicPolynomial, Rational,
    SequencePrefix,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn rat(rng: &mut ChaCha8Rng) -> Rational {
    q(rng.gen_range(-12..=12), rng.gen_range(1..=6))
}

fn nonzero(rng: &mut ChaCha8Rng) -> Rational {
    loop {
        let r = rat(rng);
        if !r.is_zero() {
            return r;
        }
    }
}

fn maybe_zero(rng: &mut ChaCha8Rng) -> Rational {
    if rng.gen_ratio(1, 4) {
        Rational::zero()
    } else {
        rat(rng)
    }
}

fn prefix(rng: &mut ChaCha8Rng, len: usize) -> SequencePrefix {
    SequencePrefix::new((0..len).map(|_| rat(rng)).collect()).unwrap()
}

fn ints(v: &[i64]) -> SequencePrefix {
    SequencePrefix::from_ints(v.iter().copied()).unwrap()
}

fn named(key: NamedSequence, n: usize) -> SequencePrefix {
    key.prefix(n).unwrap()
}

fn expect_pass(key: &str, n_max: usize) -> Check {
    let case = verify_identity(key, n_max).map_err(|e| e.to_string())?;
    ensure(case.passed, || format!("{case}"))
}

fn spivey_steil() -> Check {
    let op = BinomialOperator::new(q(1, 2), q(1, 2));
    let source: LinearRecurrence = "t^2-6t+1;1,5".parse().unwrap();
    let target: LinearRecurrence = "t^2-4t+2;1,3".parse().unwrap();
    let image = transform_recurrence(&op, &source).map_err(|e| e.to_string())?;
    ensure(image == target, || format!("transform gave {image}"))?;
    ensure(image.charpoly().to_string() == "t^2-4t+2", || "charpoly".into())?;
    let a = named(NamedSequence::A001653, 25);
    let b = named(NamedSequence::A007052, 25);
    ensure(apply(&op, &a) == b, || "termwise image differs from A007052".into())?;
    ensure(target.generate(25).unwrap() == b, || "A007052 catalog".into())
}

fn lucas_fixed() -> Check {
    let lucas = named(NamedSequence::Lucas, 50);
    ensure(is_fixed_prefix(&BinomialOperator::new(-1, 1), &lucas), || "Lucas".into())?;
    let pell = named(NamedSequence::A001333, 50);
    ensure(is_fixed_prefix(&BinomialOperator::new(-1, 2), &pell), || "A001333".into())
}

fn catalan_theorem() -> Check {
    let shifted = SequencePrefix::new((1..=30).map(catalan).collect()).unwrap();
    ensure(is_fixed_prefix(&BinomialOperator::new(-1, 4), &shifted), || "sigma C not fixed".into())?;
    for n in 0..=28u64 {
        let lhs = Rational::from(2 * (2 * n + 3)) * catalan(n + 1);
        let rhs = Rational::from(n + 3) * catalan(n + 2);
        ensure(lhs == rhs, || format!("recurrence at n={n}"))?;
    }
    for n in (2..=30u64).step_by(2) {
        ensure(catalan_even_sum(n) == catalan(n), || format!("even split at n={n}"))?;
        // the odd formula at n-1 lands on the same Catalan number
        ensure(catalan_odd_sum(n - 1) == catalan(n), || format!("odd split at n={}", n - 1))?;
    }
    ensure(wz_certificate_failure(20).is_none(), || format!("{:?}", wz_certificate_failure(20)))?;
    for key in ["catalan_fixed", "catalan_recurrence", "catalan_even", "catalan_odd", "catalan_holonomic"] {
        expect_pass(key, 30)?;
    }
    expect_pass("catalan_wz", 20)
}

fn group_structure(rng: &mut ChaCha8Rng) -> Check {
    for trial in 0..200 {
        let outer = BinomialOperator::new(maybe_zero(rng), maybe_zero(rng));
        let inner = BinomialOperator::new(maybe_zero(rng), maybe_zero(rng));
        let a = prefix(rng, 12);
        ensure(apply(&outer, &apply(&inner, &a)) == apply(&compose(&outer, &inner), &a), || {
            format!("composition, trial {trial}: {outer:?} {inner:?}")
        })?;

        let ops: Vec<BinomialOperator> = (0..3).map(|_| BinomialOperator::new(nonzero(rng), rat(rng))).collect();
        let id = BinomialOperator::identity();
        let inv = inverse(&ops[0]).map_err(|e| e.to_string())?;
        ensure(compose(&ops[0], &id) == ops[0] && compose(&id, &ops[0]) == ops[0], || "identity".into())?;
        ensure(compose(&ops[0], &inv) == id && compose(&inv, &ops[0]) == id, || "inverse".into())?;
        ensure(
            compose(&compose(&ops[0], &ops[1]), &ops[2]) == compose(&ops[0], &compose(&ops[1], &ops[2])),
            || format!("associativity, trial {trial}"),
        )?;
    }
    Ok(())
}

fn theorem_four(rng: &mut ChaCha8Rng) -> Check {
    for trial in 0..50 {
        let r = rng.gen_range(1..=4);
        let f = MonicPolynomial::new((0..r).map(|_| rat(rng)).collect());
        let rec = LinearRecurrence::new(f.clone(), (0..r).map(|_| rat(rng)).collect()).unwrap();
        let (h, y) = (nonzero(rng), rat(rng));
        let op = BinomialOperator::new(h.clone(), y.clone());
        let image = transform_recurrence(&op, &rec).map_err(|e| e.to_string())?;
        let terms = apply(&op, &rec.generate(30).unwrap());
        ensure(image.first_violation(&terms).is_none(), || format!("trial {trial}: {rec} under {op}"))?;
        let by_substitution = f.shift_scale(&h, &y).unwrap();
        ensure(MonicPolynomial::from_sigmas(&f.symmetric_coeffs(&h, &y)) == by_substitution, || {
            format!("coefficients, trial {trial}")
        })?;
    }
    Ok(())
}

fn fixed_point_suite(rng: &mut ChaCha8Rng) -> Check {
    for trial in 0..100 {
        let h = loop {
            let h = rat(rng);
            if !h.is_one() {
                break h;
            }
        };
        let y = rat(rng);
        let g = geometric_fixed_sequence(&h, &y, &nonzero(rng), 20).unwrap();
        ensure(is_fixed_prefix(&BinomialOperator::new(h, y), &g), || format!("geometric, trial {trial}"))?;
    }

    for trial in 0..50 {
        let (delta, p, qq) = (nonzero(rng), nonzero(rng), rat(rng));
        let gamma = &p * &delta / &z(2);
        let good = Degree2Spec::new(delta.clone(), gamma.clone(), p.clone(), qq.clone());
        let mirror = BinomialOperator::new(-1, p.clone());
        ensure(degree2_fixed_test(&good).contains(&mirror), || format!("characterization, trial {trial}"))?;
        ensure(is_fixed_prefix(&mirror, &good.generate(20).unwrap()), || format!("fixed, trial {trial}"))?;

        let bad = Degree2Spec::new(delta, gamma + nonzero(rng), p, qq);
        ensure(degree2_fixed_test(&bad) == vec![BinomialOperator::identity()], || {
            format!("perturbed characterization, trial {trial}")
        })?;
        ensure(!is_fixed_prefix(&mirror, &bad.generate(20).unwrap()), || format!("perturbed, trial {trial}"))?;
    }

    let lucas = Degree2Spec::new(2, 1, 1, -1);
    let pell = Degree2Spec::new(1, 1, 2, -1);
    for spec in [&lucas, &pell] {
        let a = spec.generate(41).unwrap();
        for n in 1..=40 {
            let s = alternating_sum_identity(spec, n).map_err(|e| e.to_string())?;
            let want = if n % 2 == 0 { Rational::zero() } else { &z(2) * &a[n] };
            ensure(s == want, || format!("parity sum at n={n} for {:?}", spec))?;
        }
    }

    for trial in 0..30 {
        let m = rng.gen_range(1..=3u32);
        let (p, qq) = (rat(rng), rat(rng));
        let initial: Vec<Rational> = (0..2 * m).map(|_| rat(rng)).collect();
        let ok = charpoly_power_preservation(&p, &qq, m, &initial, 25).map_err(|e| e.to_string())?;
        ensure(ok, || format!("charpoly power, trial {trial}"))?;
    }
    Ok(())
}

fn fibonacci(n: usize) -> Vec<Rational> {
    let mut f = vec![z(0), z(1)];
    while f.len() < n {
        let next = &f[f.len() - 1] + &f[f.len() - 2];
        f.push(next);
    }
    f
}

fn decimation(rng: &mut ChaCha8Rng) -> Check {
    for trial in 0..20 {
        let (p, qq) = (rat(rng), rat(rng));
        let spec = Degree2Spec::new(rat(rng), rat(rng), p.clone(), qq.clone());
        let k = rng.gen_range(1..=6);
        let a = spec.generate(11 * k + 1).unwrap();
        let picked = decimate_prefix(&a, k).unwrap();
        let by_operator = apply(&decimation_operator(&p, &qq, k).unwrap(), &a.truncate(12).unwrap());
        let by_recurrence = decimated_recurrence(&spec, k).unwrap().generate(12).unwrap();
        ensure(picked.len() == 12 && picked == by_operator && picked == by_recurrence, || {
            format!("trial {trial}, k={k}")
        })?;
    }

    let f = fibonacci(6 * 12 + 2);
    let mut l = vec![z(2), z(1)];
    while l.len() < f.len() {
        let next = &l[l.len() - 1] + &l[l.len() - 2];
        l.push(next);
    }
    for k in 1..=6 {
        for n in 0..=12 {
            let row = |x: &[Rational]| -> Rational {
                (0..=n)
                    .map(|i| {
                        Rational::from(binomial(n as u64, i as u64))
                            * f[k].pow(i as u32)
                            * f[k - 1].pow((n - i) as u32)
                            * &x[i]
                    })
                    .sum()
            };
            ensure(row(&f) == f[k * n], || format!("F at k={k}, n={n}"))?;
            ensure(row(&l) == l[k * n], || format!("l at k={k}, n={n}"))?;
        }
    }
    expect_pass("fibonacci_decimation", 12)?;
    expect_pass("lucas_decimation", 12)
}

fn hankel(rng: &mut ChaCha8Rng) -> Check {
    for trial in 0..100 {
        let a = prefix(rng, 9);
        let (h, y, y2) = (maybe_zero(rng), rat(rng), rat(rng));
        ensure(hankel_scaling_check(&a, &h, &y), || format!("scaling, trial {trial}"))?;
        let one = hankel_transform(&apply(&BinomialOperator::new(h.clone(), y), &a));
        let two = hankel_transform(&apply(&BinomialOperator::new(h, y2), &a));
        ensure(one == two, || format!("y-independence, trial {trial}"))?;
    }
    for _ in 0..10 {
        let c = nonzero(rng);
        let constant = SequencePrefix::new(vec![c.clone(); 9]).unwrap();
        let mut want = vec![Rational::zero(); 5];
        want[0] = c;
        let image = apply(&BinomialOperator::new(nonzero(rng), rat(rng)), &constant);
        ensure(hankel_transform(&constant).determinants == want, || "constant".into())?;
        ensure(hankel_transform(&image).determinants == want, || "constant image".into())?;
    }
    Ok(())
}

fn variants(rng: &mut ChaCha8Rng) -> Check {
    let run = |h: i64, y: i64, n: usize| variant_sequence(&z(h), &z(y), &z(1), n).unwrap();
    let bell = ints(&[1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975, 678570]);
    ensure(run(1, 1, 12) == bell, || format!("Bell: {}", run(1, 1, 12)))?;
    ensure(named(NamedSequence::Bell, 12) == bell, || "Bell catalog".into())?;
    let a010892 = ints(&[1, 1, 0, -1, -1, 0, 1, 1, 0, -1, -1, 0]);
    ensure(run(-1, 1, 12) == a010892, || format!("A010892: {}", run(-1, 1, 12)))?;
    let a000587 = ints(&[1, -1, 0, 1, 1, -2, -9, -9, 50, 267, 413, -2180]);
    ensure(epsilon(&run(1, -1, 12)) == a000587, || format!("A000587: {}", run(1, -1, 12)))?;
    ensure(named(NamedSequence::UppuluriCarpenter, 12) == a000587, || "A000587 catalog".into())?;

    for trial in 0..20 {
        let (h, y) = (rat(rng), rat(rng));
        let a = variant_sequence(&h, &y, &nonzero(rng), 16).unwrap();
        let image = apply(&BinomialOperator::new(h, y), &a.truncate(15).unwrap());
        ensure(image == right_shift(&a).unwrap(), || format!("shift, trial {trial}"))?;
    }
    Ok(())
}

fn misprint_handling() -> Check {
    expect_pass("triangular_fixed", 30)?;
    let printed = verify_identity("triangular_printed", 30).map_err(|e| e.to_string())?;
    ensure(!printed.passed && printed.first_mismatch == Some(1), || format!("{printed}"))?;
    ensure(printed.as_expected(), || format!("{printed}"))?;
    expect_pass("choose4", 30)?;
    expect_pass("choose4_recurrence", 30)?;
    let all = binterp::cli::run(["binterp", "verify", "all"], &mut std::io::empty());
    ensure(all.exit_code == 0, || all.stdout.clone())
}

fn main() -> ExitCode {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_b1a0);
    let results: Vec<(&str, Check)> = vec![
        ("A001653 maps to A007052", spivey_steil()),
        ("Lucas and A001333 fixed points", lucas_fixed()),
        ("Catalan fixed point and identities", catalan_theorem()),
        ("operator group laws", group_structure(&mut rng)),
        ("transformed recurrences", theorem_four(&mut rng)),
        ("fixed-point suite", fixed_point_suite(&mut rng)),
        ("decimation", decimation(&mut rng)),
        ("Hankel scaling", hankel(&mut rng)),
        ("variant sequences", variants(&mut rng)),
        ("triangular and choose4 identities", misprint_handling()),
    ];
    let mut failed = 0;
    for (i, (name, result)) in results.iter().enumerate() {
        match result {
            Ok(()) => println!("criterion {:>2} {name} ... PASS", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} {name} ... FAIL ({why})", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", results.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
