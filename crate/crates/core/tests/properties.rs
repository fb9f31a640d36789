mod common;
use common::runner;

#[test]
fn stp_associative() {
    common::stp_associative(&mut runner(false)).unwrap();
}

#[test]
fn stp_transpose() {
    common::stp_transpose(&mut runner(false)).unwrap();
}

#[test]
fn swap_laws() {
    common::swap_laws(&mut runner(false)).unwrap();
}

#[test]
fn blockwise_agrees() {
    common::blockwise_agrees(&mut runner(false)).unwrap();
}

#[test]
fn sta_congruence() {
    common::sta_congruence(&mut runner(false)).unwrap();
}

#[test]
fn root_lattice() {
    common::root_lattice(&mut runner(false)).unwrap();
}

#[test]
fn pr_bd_identity() {
    common::pr_bd_identity(&mut runner(false)).unwrap();
}

#[test]
fn weighted_ip_independent() {
    common::weighted_ip_independent(&mut runner(false)).unwrap();
}

#[test]
fn metric_laws() {
    common::metric_laws(&mut runner(false)).unwrap();
}

#[test]
fn cayley_hamilton() {
    common::cayley_hamilton(&mut runner(false)).unwrap();
}

#[test]
fn lie_laws() {
    common::lie_laws(&mut runner(false)).unwrap();
}

#[test]
fn vprod_consistency() {
    common::vprod_consistency(&mut runner(false)).unwrap();
}

#[test]
fn vprod_distributive() {
    common::vprod_distributive(&mut runner(false)).unwrap();
}

#[test]
fn sequence_laws() {
    common::sequence_laws(&mut runner(false)).unwrap();
}

#[test]
fn annihilator_annihilates() {
    common::annihilator_annihilates(&mut runner(false)).unwrap();
}

#[test]
fn exp_kron() {
    common::exp_kron(&mut runner(false)).unwrap();
}

#[test]
fn exp_trace_det() {
    common::exp_trace_det(&mut runner(false)).unwrap();
}

#[test]
fn euler() {
    common::euler(&mut runner(false)).unwrap();
}
