use centrality_core::axioms::{axiom_matrix, expected_verdicts, AxiomConfig, Verdict};
use centrality_core::Measure;

#[test]
fn naive_measures_satisfy_every_axiom() {
    let rows = axiom_matrix(&Measure::NAIVE, &AxiomConfig::default()).unwrap();
    for row in rows {
        assert_eq!(row.verdicts(), [Verdict::Yes; 3], "{}", row.measure.id());
        assert_eq!(row.verdicts(), expected_verdicts(row.measure));
    }
}

#[test]
fn beta_measure_fails_only_the_size_axiom() {
    let rows = axiom_matrix(&[Measure::Beta], &AxiomConfig::default()).unwrap();
    assert_eq!(rows[0].verdicts(), [Verdict::No, Verdict::Yes, Verdict::Yes]);
}
