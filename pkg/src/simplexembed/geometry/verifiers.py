"""Checks tying the geometric o_f to the combinatorial obstruction system."""

from typing import Optional

import numpy as np

from simplexembed.complex.models import SimplicialComplex
from simplexembed.geometry.intersections import (
    compute_o_f,
    gale_alternation,
    intersection_number,
    moment_map,
    random_generic_map,
    total_intersection_count,
)
from simplexembed.geometry.models import ParityReport, VerificationReport
from simplexembed.global_models import Parity
from simplexembed.linalg.smith import has_integer_solution
from simplexembed.vankampen.models import ObstructionSystem
from simplexembed.vankampen.obstruction import build_obstruction_system


def intersection_sign(k: int) -> int:
    """(-1)^{k(k-1)/2}: f(σ)·f(τ) = this times (o_γ)_{σ,τ} under the moment map."""
    return (-1) ** (k * (k - 1) // 2)


def moment_sign(k: int) -> int:
    """(-1)^{k(k+1)/2}: o_f = this times o_γ under the moment map."""
    return (-1) ** (k * (k + 1) // 2)


def verify_moment_lemma(
    K: SimplicialComplex, k: int, system: Optional[ObstructionSystem] = None
) -> VerificationReport:
    """
    Compare moment-map intersection numbers with o_γ on every pair of P.

    Each pair must satisfy f(σ)·f(τ) = (-1)^{k(k-1)/2} (o_γ)_{σ,τ}, which
    makes o_f = (-1)^{k(k+1)/2} o_γ, and must cross iff its labels alternate.
    """
    if system is None:
        system = build_obstruction_system(K, k)
    f = moment_map(K, k)
    expected_sign = intersection_sign(k)
    for position, (sigma, tau) in enumerate(system.index):
        value = intersection_number(f, sigma, tau).value
        expected = expected_sign * system.o_gamma[position]
        if value != expected or (value != 0) != gale_alternation(sigma, tau):
            return VerificationReport(
                check="moment-lemma",
                k=k,
                passed=False,
                checked=position + 1,
                sign=moment_sign(k),
                counterexample=(list(sigma), list(tau)),
                expected=expected,
                actual=value,
            )
    return VerificationReport(
        check="moment-lemma",
        k=k,
        passed=True,
        checked=system.pair_count,
        sign=moment_sign(k),
    )


def verify_coset(
    K: SimplicialComplex,
    k: int,
    trials: int = 20,
    seed: int = 0,
    bound: int = 50,
    max_attempts: int = 100,
    system: Optional[ObstructionSystem] = None,
) -> VerificationReport:
    """
    Check o_f - s·o_γ ∈ span_Z(Φ) for random generic integer maps f.

    s is the moment-map sign, so o_f lies in the obstruction coset exactly
    when this difference is an integer combination of finger moves.

    Raises:
        GenericMapExhaustedError: If some trial finds no generic map.
    """
    if system is None:
        system = build_obstruction_system(K, k)
    rng = np.random.default_rng(seed)
    s = moment_sign(k)
    for trial in range(trials):
        f = random_generic_map(K, k, rng, bound=bound, max_attempts=max_attempts)
        o_f = compute_o_f(K, k, f, system.index)
        target = [a - s * b for a, b in zip(o_f, system.o_gamma)]
        if not has_integer_solution(system.phi, target, want_witness=False):
            return VerificationReport(
                check="coset",
                k=k,
                passed=False,
                checked=trial + 1,
                seed=seed,
                sign=s,
                trial=trial,
            )
    return VerificationReport(
        check="coset", k=k, passed=True, checked=trials, seed=seed, sign=s
    )


def moment_parity(K: SimplicialComplex, k: int) -> ParityReport:
    """Total intersection count of the moment map and its parity."""
    if K.dimension != k:
        raise ValueError(f"Parity requires dim K = k, got dim {K.dimension} and k = {k}")
    total = total_intersection_count(K, k, moment_map(K, k))
    return ParityReport(k=k, total=total, parity=Parity.of(total))
