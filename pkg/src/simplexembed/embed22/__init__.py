"""Decision procedure for EMBED(2,2)."""

from simplexembed.embed22.decider import (
    decide_embed22,
    homological_cycle_scan,
    is_planar,
    link_condition,
)
from simplexembed.embed22.formatters import Embed22TextFormatter
from simplexembed.embed22.models import Embed22Error, Embed22Report, LinkWitness

__all__ = [
    "Embed22Error",
    "Embed22Report",
    "Embed22TextFormatter",
    "LinkWitness",
    "decide_embed22",
    "homological_cycle_scan",
    "is_planar",
    "link_condition",
]
