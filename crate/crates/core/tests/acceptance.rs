use repring::criteria::run;

fn check(id: usize) {
    let r = run(id);
    println!("{}", r.line());
    assert!(r.passed, "{}", r.line());
}

#[test]
fn criterion_01_d8_golden() {
    check(1);
}

#[test]
fn criterion_02_odd_adams_preserved() {
    check(2);
}

#[test]
fn criterion_03_d8_q8_separation() {
    check(3);
}

#[test]
fn criterion_04_klein_symmetry() {
    check(4);
}

#[test]
fn criterion_05_order_exponent_recovery() {
    check(5);
}

#[test]
fn criterion_06_lambda_ring_laws() {
    check(6);
}

#[test]
fn criterion_07_trace_identity() {
    check(7);
}

#[test]
fn criterion_08_hom_trace() {
    check(8);
}

#[test]
fn criterion_09_twisted_characters() {
    check(9);
}

#[test]
fn criterion_10_table_integrity() {
    check(10);
}
