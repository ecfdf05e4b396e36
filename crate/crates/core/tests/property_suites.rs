mod common;

#[test]
fn j_identity_on_split_algebras() {
    let algs = common::split_algebras();
    assert!(algs.len() >= 5);
    for (k, (name, s)) in algs.iter().enumerate() {
        let n = common::j_identity_suite(s, 100 + k as u64).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert!(n >= 100);
    }
}

#[test]
fn connection_on_every_algebra() {
    for (k, (name, a)) in common::all_algebras().iter().enumerate() {
        let n = common::connection_suite(a, 200 + k as u64).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert!(n >= 100);
    }
}

#[test]
fn ricci_symmetric_and_block_diagonal() {
    for (k, (name, s)) in common::split_algebras().iter().enumerate() {
        let n = common::ricci_suite(s, 300 + k as u64).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert!(n >= 100);
    }
}
