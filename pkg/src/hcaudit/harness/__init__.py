from hcaudit.harness.bench import BenchResult, BenchRow, bench_scaling
from hcaudit.harness.campaign import CampaignReport, fuzz_campaign, revalidate
from hcaudit.harness.compare import (
    ComparisonRecord,
    Limits,
    NotADiscrepancy,
    SoundnessViolation,
    compact,
    compare_one,
    is_discrepant,
    shrink,
    shrink_trace,
)
from hcaudit.harness.generators import GenSpec, generate, prism, trial_seed

__all__ = [
    "BenchResult",
    "BenchRow",
    "CampaignReport",
    "ComparisonRecord",
    "GenSpec",
    "Limits",
    "NotADiscrepancy",
    "SoundnessViolation",
    "bench_scaling",
    "compact",
    "compare_one",
    "fuzz_campaign",
    "generate",
    "is_discrepant",
    "prism",
    "revalidate",
    "shrink",
    "shrink_trace",
    "trial_seed",
]
