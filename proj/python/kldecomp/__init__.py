from ._core import (
    Alphabet,
    DecompositionReport,
    Error,
    JointPmf,
    MarginalPmf,
    PopulationSpec,
    ReferenceSpec,
    __version__,
    check_lemma_identity,
    decompose,
    joint_from_population,
    kl_divergence,
    kl_joint_vs_product,
    marginalize,
    product_reference_pmf,
    reference_from_population,
    run_validation_cases,
    sequence_probability,
    subset_entropies,
    subset_interactions,
    total_correlation,
)

__all__ = [
    "Alphabet",
    "DecompositionReport",
    "Error",
    "JointPmf",
    "MarginalPmf",
    "PopulationSpec",
    "ReferenceSpec",
    "__version__",
    "check_lemma_identity",
    "decompose",
    "joint_from_population",
    "kl_divergence",
    "kl_joint_vs_product",
    "marginalize",
    "product_reference_pmf",
    "reference_from_population",
    "run_validation_cases",
    "sequence_probability",
    "subset_entropies",
    "subset_interactions",
    "total_correlation",
]
