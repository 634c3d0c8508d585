use parabolic_seeds::essential::certify_construction;
use parabolic_seeds::fixtures::builtin_fixtures;
use parabolic_seeds::kostant::ChainComplex;

#[test]
fn every_fixture_meets_its_expectation() {
    for f in builtin_fixtures() {
        let g = f.grading().unwrap();
        let cx = ChainComplex::new(&g).unwrap();
        let seed = f.seed.build(&cx).unwrap();
        let cert = certify_construction(&cx, &seed);
        let pass = cert.pass();
        assert_eq!(pass, f.expect.verdict.as_deref() == Some("PASS"), "{}", f.name);
        if let Some(reason) = &f.expect.failure {
            assert_eq!(cert.failure.as_deref(), Some(reason.as_str()), "{}", f.name);
        }
    }
}
