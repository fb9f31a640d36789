//! Property suites shared by the `properties` test target and the
//! acceptance harness. Each suite runs a fixed number of random cases and
//! reports the first counterexample as an error string.

#![allow(dead_code)]

use num_integer::Integer;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestCaseError, TestRng, TestRunner};

use stpalg::equivalence::{
    bd, class_gcd, class_lcm, equivalent, pr, root_of, Shape, Side,
};
use stpalg::invariant::{
    a_sequence, a_sequence_dims, annihilator_apply, min_annihilator, next_dim, SequenceStatus,
};
use stpalg::kernel::funcs::{mat_cos, mat_exp, mat_sin};
use stpalg::kernel::scalar::{c, qr, Complex, Rational};
use stpalg::kernel::stp::{sta_left, sta_right, stp_blockwise, stp_left, stp_right, sts_left, swap_matrix};
use stpalg::kernel::Mat;
use stpalg::lie::{bracket, killing_form, killing_form_at};
use stpalg::quotient::{
    char_poly_matrix, class_add, class_of, dist, dt, norm, tr_mod, weighted_ip,
};
use stpalg::vectors::{vadd, vec_equivalent, vprod};

pub type Q = Mat<Rational>;

pub const CASES: u32 = 200;

pub type Suite = fn(&mut TestRunner) -> Result<(), String>;

pub fn runner(deterministic: bool) -> TestRunner {
    let config = Config {
        cases: CASES,
        failure_persistence: None,
        ..Config::default()
    };
    if deterministic {
        TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha))
    } else {
        TestRunner::new(config)
    }
}

fn entry() -> impl Strategy<Value = Rational> {
    prop_oneof![
        4 => (-3i64..=3).prop_map(|n| qr(n, 1)),
        1 => (-4i64..=4, 1i64..=3).prop_map(|(n, d)| qr(n, d)),
    ]
}

pub fn mat(rows: usize, cols: usize) -> BoxedStrategy<Q> {
    proptest::collection::vec(entry(), rows * cols)
        .prop_map(move |d| Mat::new(rows, cols, d).unwrap())
        .boxed()
}

pub fn any_mat(max: usize) -> BoxedStrategy<Q> {
    (1..=max, 1..=max).prop_flat_map(|(r, c)| mat(r, c)).boxed()
}

pub fn square(max: usize) -> BoxedStrategy<Q> {
    (1..=max).prop_flat_map(|n| mat(n, n)).boxed()
}

/// Two matrices with a common row/column ratio and independent leaves.
pub fn same_ratio() -> BoxedStrategy<(Q, Q)> {
    (1usize..=3, 1usize..=3, 1usize..=3, 1usize..=3)
        .prop_filter("coprime ratio", |(y, x, _, _)| y.gcd(x) == 1)
        .prop_flat_map(|(y, x, l1, l2)| (mat(y * l1, x * l1), mat(y * l2, x * l2)))
        .boxed()
}

pub fn column(max: usize) -> BoxedStrategy<Q> {
    (1..=max).prop_flat_map(|n| mat(n, 1)).boxed()
}

fn real_square(max: usize) -> BoxedStrategy<Mat<Complex>> {
    (2..=max)
        .prop_flat_map(|n| {
            proptest::collection::vec(-1.5f64..1.5, n * n)
                .prop_map(move |d| Mat::new(n, n, d.into_iter().map(|x| c(x, 0.0)).collect()).unwrap())
        })
        .boxed()
}

fn fail(msg: impl Into<String>) -> TestCaseError {
    TestCaseError::fail(msg.into())
}

fn ok_or<T, E: std::fmt::Debug>(r: Result<T, E>) -> Result<T, TestCaseError> {
    r.map_err(|e| fail(format!("unexpected error {e:?}")))
}

fn finish<E: std::fmt::Display>(name: &str, r: Result<(), E>) -> Result<(), String> {
    r.map_err(|e| format!("{name}: {e}"))
}

pub fn stp_associative(r: &mut TestRunner) -> Result<(), String> {
    let s = (any_mat(3), any_mat(3), any_mat(3));
    finish("stp associativity", r.run(&s, |(a, b, cc)| {
        prop_assert_eq!(stp_left(&stp_left(&a, &b), &cc), stp_left(&a, &stp_left(&b, &cc)));
        prop_assert_eq!(stp_right(&stp_right(&a, &b), &cc), stp_right(&a, &stp_right(&b, &cc)));
        Ok(())
    }))
}

pub fn stp_transpose(r: &mut TestRunner) -> Result<(), String> {
    let s = (any_mat(4), any_mat(4));
    finish("transpose law", r.run(&s, |(a, b)| {
        prop_assert_eq!(stp_left(&a, &b).transpose(), stp_left(&b.transpose(), &a.transpose()));
        Ok(())
    }))
}

pub fn swap_laws(r: &mut TestRunner) -> Result<(), String> {
    let s = (column(4), column(4), any_mat(3), any_mat(3));
    finish("swap matrix", r.run(&s, |(x, y, a, b)| {
        let w: Q = swap_matrix(x.rows(), y.rows());
        prop_assert_eq!(ok_or(w.matmul(&x.kron(&y)))?, y.kron(&x));
        let (m, n) = a.shape();
        let (p, q) = b.shape();
        let left: Q = swap_matrix(m, p);
        let right: Q = swap_matrix(q, n);
        let lhs = ok_or(ok_or(left.matmul(&a.kron(&b)))?.matmul(&right))?;
        prop_assert_eq!(lhs, b.kron(&a));
        Ok(())
    }))
}

pub fn blockwise_agrees(r: &mut TestRunner) -> Result<(), String> {
    let s = (1usize..=3, 1usize..=3, 1usize..=3, 1usize..=3, any::<bool>()).prop_flat_map(
        |(m, p, k, q, wide)| {
            let (n, rows_b) = if wide { (p * k, p) } else { (p, p * k) };
            (mat(m, n), mat(rows_b, q))
        },
    );
    finish("blockwise stp", r.run(&s, |(a, b)| {
        prop_assert_eq!(ok_or(stp_blockwise(&a, &b))?, stp_left(&a, &b));
        Ok(())
    }))
}

pub fn sta_congruence(r: &mut TestRunner) -> Result<(), String> {
    let s = (same_ratio(), 1usize..=3, 1usize..=3);
    finish("sta congruence", r.run(&s, |((a, b), j, l)| {
        let sum = ok_or(sta_left(&a, &b))?;
        let lifted = ok_or(sta_left(&bd(&a, j), &bd(&b, l)))?;
        prop_assert!(equivalent(&sum, &lifted, Side::Left));
        let sum = ok_or(sta_right(&a, &b))?;
        let lifted = ok_or(sta_right(&a.identity_kron(j), &b.identity_kron(l)))?;
        prop_assert!(equivalent(&sum, &lifted, Side::Right));
        Ok(())
    }))
}

pub fn root_lattice(r: &mut TestRunner) -> Result<(), String> {
    let s = (any_mat(3), 1usize..=6, 1usize..=6);
    finish("root and lattice", r.run(&s, |(a, i, j)| {
        for side in [Side::Left, Side::Right] {
            let root = root_of(&a, side).into_root();
            prop_assert_eq!(root_of(&root, side).into_root(), root.clone());
            let lift = |k: usize| match side {
                Side::Left => root.kron_identity(k),
                Side::Right => root.identity_kron(k),
            };
            prop_assert_eq!(root_of(&lift(i), side).into_root(), root.clone());
            let (x, y) = (lift(i), lift(j));
            let g = ok_or(class_gcd(&x, &y, side))?;
            let l = ok_or(class_lcm(&x, &y, side))?;
            prop_assert_eq!(&g, &lift(i.gcd(&j)));
            prop_assert_eq!(&l, &lift(i.lcm(&j)));
            prop_assert_eq!(ok_or(class_gcd(&x, &l, side))?, x.clone());
            prop_assert_eq!(ok_or(class_lcm(&x, &g, side))?, x);
        }
        Ok(())
    }))
}

pub fn pr_bd_identity(r: &mut TestRunner) -> Result<(), String> {
    let s = (any_mat(3), 1usize..=4);
    finish("pr after bd", r.run(&s, |(a, k)| {
        prop_assert_eq!(ok_or(pr(&bd(&a, k), k))?, a);
        Ok(())
    }))
}

pub fn weighted_ip_independent(r: &mut TestRunner) -> Result<(), String> {
    let s = (same_ratio(), 1usize..=3, 1usize..=3);
    finish("weighted ip representatives", r.run(&s, |((a, b), j, l)| {
        prop_assert_eq!(ok_or(weighted_ip(&bd(&a, j), &bd(&b, l)))?, ok_or(weighted_ip(&a, &b))?);
        Ok(())
    }))
}

pub fn metric_laws(r: &mut TestRunner) -> Result<(), String> {
    let s = (1usize..=2, 1usize..=2, 1usize..=3, 1usize..=3, 1usize..=3).prop_flat_map(
        |(y, x, l1, l2, l3)| (mat(y * l1, x * l1), mat(y * l2, x * l2), mat(y * l3, x * l3)),
    );
    finish("metric laws", r.run(&s, |(a, b, cc)| {
        let tol = 1e-9;
        let ip = stpalg::kernel::scalar::rational_to_f64(&ok_or(weighted_ip(&a, &b))?);
        prop_assert!(ip.abs() <= norm(&a) * norm(&b) + tol, "Schwarz");
        let ab = ok_or(dist(&a, &b))?;
        let bc = ok_or(dist(&b, &cc))?;
        let ac = ok_or(dist(&a, &cc))?;
        prop_assert!(ac <= ab + bc + tol, "triangle");
        let plus = norm(&ok_or(sta_left(&a, &b))?).powi(2);
        let minus = norm(&ok_or(sts_left(&a, &b))?).powi(2);
        let rhs = 2.0 * norm(&a).powi(2) + 2.0 * norm(&b).powi(2);
        prop_assert!((plus + minus - rhs).abs() <= tol * (1.0 + rhs), "parallelogram");
        Ok(())
    }))
}

pub fn cayley_hamilton(r: &mut TestRunner) -> Result<(), String> {
    let s = (2usize..=3).prop_flat_map(|n| mat(n, n));
    finish("Cayley-Hamilton", r.run(&s, |a| {
        let root = root_of(&a, Side::Left).into_root();
        let p = ok_or(char_poly_matrix(&root))?;
        prop_assert!(p.eval_matrix(&root, |c| c.clone()).is_zero());
        Ok(())
    }))
}

pub fn lie_laws(r: &mut TestRunner) -> Result<(), String> {
    let s = (square(3), square(3), square(3), 1usize..=3);
    finish("Lie laws", r.run(&s, |(a, b, cc, k)| {
        let (a, b, cc) = (class_of(&a, Side::Left), class_of(&b, Side::Left), class_of(&cc, Side::Left));
        let br = |x: &_, y: &_| ok_or(bracket(x, y));
        let t1 = br(&a, &br(&b, &cc)?)?;
        let t2 = br(&b, &br(&cc, &a)?)?;
        let t3 = br(&cc, &br(&a, &b)?)?;
        let sum = ok_or(class_add(&ok_or(class_add(&t1, &t2))?, &t3))?;
        prop_assert!(sum.root().is_zero(), "Jacobi");
        let kf = |x: &_, y: &_| ok_or(killing_form(x, y));
        prop_assert_eq!(kf(&br(&a, &b)?, &cc)?, kf(&a, &br(&b, &cc)?)?, "invariance");
        prop_assert_eq!(kf(&a, &b)?, kf(&b, &a)?, "symmetry");
        let t = a.leaf().lcm(&b.leaf());
        prop_assert_eq!(
            ok_or(killing_form_at(&a, &b, t))?,
            ok_or(killing_form_at(&a, &b, t * k))?,
            "leaf independence"
        );
        Ok(())
    }))
}

pub fn vprod_consistency(r: &mut TestRunner) -> Result<(), String> {
    let s = (any_mat(3), column(4), 1usize..=3, 1usize..=3);
    finish("vprod consistency", r.run(&s, |(a, x, k, j)| {
        let base = ok_or(vprod(&a, &x))?;
        let lifted = ok_or(vprod(&bd(&a, k), &x.kron_ones(j)))?;
        prop_assert!(ok_or(vec_equivalent(&base, &lifted, Side::Left))?);
        Ok(())
    }))
}

pub fn vprod_distributive(r: &mut TestRunner) -> Result<(), String> {
    let s = (same_ratio(), column(4), column(4), -2i64..=2, -2i64..=2, any_mat(3));
    finish("vprod distributivity", r.run(&s, |((a, b), x, y, p, q, m)| {
        let (p, q) = (qr(p, 1), qr(q, 1));
        let lhs = ok_or(vprod(&ok_or(sta_left(&a.scale(&p), &b.scale(&q)))?, &x))?;
        let rhs = ok_or(vadd(&ok_or(vprod(&a, &x))?.scale(&p), &ok_or(vprod(&b, &x))?.scale(&q)))?;
        prop_assert!(ok_or(vec_equivalent(&lhs, &rhs, Side::Left))?);
        let lhs = ok_or(vprod(&m, &ok_or(vadd(&x.scale(&p), &y.scale(&q)))?))?;
        let rhs = ok_or(vadd(&ok_or(vprod(&m, &x))?.scale(&p), &ok_or(vprod(&m, &y))?.scale(&q)))?;
        prop_assert!(ok_or(vec_equivalent(&lhs, &rhs, Side::Left))?);
        Ok(())
    }))
}

fn exponent(mut n: usize, f: usize) -> usize {
    let mut e = 0;
    while n % f == 0 {
        n /= f;
        e += 1;
    }
    e
}

/// Steps until every prime exponent of the dimension is stable, for a
/// bounded operator with `rows` rows and column ratio `mu_x` started at `p`.
/// Per prime with exponent `a` in `rows` and `b` in `mu_x`, one step maps
/// `e` to `max(a + b, e) - b`.
fn entry_bound(rows: usize, mu_x: usize, p: usize) -> usize {
    let all = rows * mu_x * p;
    (2..=all)
        .filter(|f| all % f == 0 && (2..*f).all(|d| f % d != 0))
        .map(|f| {
            let (a, b, e) = (exponent(rows, f), exponent(mu_x, f), exponent(p, f));
            let stable = if b == 0 { e >= a } else { e == a };
            match (stable, b) {
                (true, _) => 0,
                (false, 0) => 1,
                (false, b) => 1.max(Integer::div_ceil(&e.saturating_sub(a), &b)),
            }
        })
        .max()
        .unwrap_or(0)
}

pub fn sequence_laws(r: &mut TestRunner) -> Result<(), String> {
    let s = (1usize..=3, 1usize..=4, 1usize..=3, 1usize..=12)
        .prop_flat_map(|(m, mu_x, y, p)| (mat(m * y, m * mu_x), mat(p, 1)));
    finish("sequence laws", r.run(&s, |(a, x)| {
        let shape = Shape::of(&a);
        let p = x.rows();
        let lcm = a.cols().lcm(&p);
        let expected = lcm / shape.mu_x * shape.mu_y;
        prop_assert_eq!(next_dim(shape, p), Some(expected));
        prop_assert_eq!(ok_or(vprod(&a, &x))?.rows(), expected);
        let seq = ok_or(a_sequence_dims(&a, &x, 200))?;
        if shape.mu_y == 1 {
            match seq.status {
                SequenceStatus::Entered { t, k } => {
                    prop_assert!(k <= entry_bound(a.rows(), shape.mu_x, p), "entry after {k} steps");
                    prop_assert_eq!(next_dim(shape, t), Some(t), "loop collapse");
                    let xs = ok_or(a_sequence(&a, &x, k + 3))?;
                    prop_assert!(xs[k..].iter().all(|v| v.rows() == t));
                }
                other => return Err(fail(format!("bounded operator did not enter: {other:?}"))),
            }
        } else {
            let entered = matches!(seq.status, SequenceStatus::Entered { .. });
            prop_assert!(!entered, "unbounded operator entered");
        }
        Ok(())
    }))
}

pub fn annihilator_annihilates(r: &mut TestRunner) -> Result<(), String> {
    let s = (1usize..=2, 1usize..=3, 1usize..=6).prop_flat_map(|(m, mu_x, p)| (mat(m, m * mu_x), mat(p, 1)));
    finish("annihilator", r.run(&s, |(a, x)| {
        let ann = ok_or(min_annihilator(&a, &x, 200))?;
        prop_assert!(ann.poly.is_monic());
        prop_assert!(ok_or(annihilator_apply(&ann.poly, &a, &x))?.is_zero());
        Ok(())
    }))
}

pub fn all_properties(deterministic: bool) -> Vec<(&'static str, Result<(), String>)> {
    let suites: [(&'static str, Suite); 15] = [
        ("stp associativity", stp_associative),
        ("transpose law", stp_transpose),
        ("swap matrix laws", swap_laws),
        ("blockwise stp oracle", blockwise_agrees),
        ("sta congruence", sta_congruence),
        ("root uniqueness and lattice", root_lattice),
        ("pr after bd", pr_bd_identity),
        ("weighted ip independence", weighted_ip_independent),
        ("Schwarz, triangle, parallelogram", metric_laws),
        ("Cayley-Hamilton", cayley_hamilton),
        ("Jacobi and Killing form", lie_laws),
        ("vprod consistency", vprod_consistency),
        ("vprod distributivity", vprod_distributive),
        ("dimension law and loop collapse", sequence_laws),
        ("annihilator annihilates", annihilator_annihilates),
    ];
    suites
        .into_iter()
        .map(|(name, f)| (name, f(&mut runner(deterministic))))
        .collect()
}

pub fn exp_kron(r: &mut TestRunner) -> Result<(), String> {
    finish("exp of a lift", r.run(&real_square(3), |a| {
        let lhs = ok_or(mat_exp(&a.kron_identity(3)))?;
        let rhs = ok_or(mat_exp(&a))?.kron_identity(3);
        prop_assert!(lhs.near(&rhs, 1e-10));
        Ok(())
    }))
}

pub fn exp_trace_det(r: &mut TestRunner) -> Result<(), String> {
    finish("exp(Tr) = Dt(exp)", r.run(&real_square(3), |a| {
        let lhs = ok_or(tr_mod(&a))?.exp();
        let rhs = ok_or(dt(&ok_or(mat_exp(&a))?))?;
        prop_assert!((lhs - rhs).norm() <= 1e-9, "{lhs} vs {rhs}");
        Ok(())
    }))
}

pub fn euler(r: &mut TestRunner) -> Result<(), String> {
    finish("Euler formula", r.run(&real_square(3), |a| {
        let i = c(0.0, 1.0);
        let lhs = ok_or(mat_exp(&a.scale(&i)))?;
        let rhs = ok_or(ok_or(mat_cos(&a))?.add(&ok_or(mat_sin(&a))?.scale(&i)))?;
        prop_assert!(lhs.near(&rhs, 1e-9));
        Ok(())
    }))
}

pub fn function_identities(deterministic: bool) -> Vec<(&'static str, Result<(), String>)> {
    let suites: [(&'static str, Suite); 3] = [
        ("exp of a lift", exp_kron),
        ("exp(Tr) = Dt(exp)", exp_trace_det),
        ("Euler formula", euler),
    ];
    suites
        .into_iter()
        .map(|(name, f)| (name, f(&mut runner(deterministic))))
        .collect()
}
