"""optprune: compile-time specialization of run-time configuration options.

The pipeline models a target's removable run-time options, verifies the
guard annotations in its sources, builds baseline and specialized
variants, validates behavioral equivalence and option rejection, measures
binary size, code-reuse gadget counts, and performance, and tests the
improvement hypotheses with one-sided Wilcoxon signed-rank tests.
"""

from .errors import OptPruneError
from .manifest import load_catalog, load_manifest
from .model import (
    OptionCatalog,
    SpecializationPlan,
    available_presets,
    enumerate_scenarios,
    plan_for_preset,
    plan_single_option,
)
from .stats import percent_change, wilcoxon_signed_rank

__version__ = "0.1.0"

__all__ = [
    "OptPruneError",
    "OptionCatalog",
    "SpecializationPlan",
    "available_presets",
    "enumerate_scenarios",
    "load_catalog",
    "load_manifest",
    "percent_change",
    "plan_for_preset",
    "plan_single_option",
    "wilcoxon_signed_rank",
    "__version__",
]
