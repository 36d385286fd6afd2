"""Construction and vanishing test of the Van Kampen obstruction.

For a complex K of dimension at most k, P is the set of ordered pairs of
vertex-disjoint k-simplices and Q the ordered disjoint pairs of one
(k-1)-simplex and one k-simplex. The obstruction vanishes iff o_γ is an
integer combination of the finger-move vectors φ^{ω,ν}, (ω,ν) ∈ Q.
"""

from typing import Dict, List, Optional, Tuple

from simplexembed.complex.models import Simplex, SimplicialComplex
from simplexembed.complex.operations import disjoint_pairs
from simplexembed.global_models import Verdict
from simplexembed.linalg.gf2 import solve_mod2
from simplexembed.linalg.matrices import IntMatrix, IntVector
from simplexembed.linalg.smith import has_integer_solution
from simplexembed.vankampen.models import (
    ObstructionError,
    ObstructionSymmetryError,
    ObstructionSystem,
    PairIndex,
    SimplexPair,
    VanKampenReport,
)


def _validate(K: SimplicialComplex, k: int) -> None:
    if k < 1:
        raise ObstructionError(f"k must be at least 1, got {k}")
    if K.dimension > k:
        raise ObstructionError(
            f"Complex of dimension {K.dimension} exceeds k = {k}"
        )


def alternation(sigma: Simplex, tau: Simplex) -> int:
    """
    Classify how the vertices of two disjoint simplices interleave.

    Returns:
        +1 if v_0 < w_0 < v_1 < w_1 < ..., -1 if w_0 < v_0 < w_1 < v_1 < ...,
        and 0 when the labels do not strictly alternate.
    """
    if len(sigma) != len(tau):
        return 0
    if sigma[0] < tau[0]:
        first, second, sign = sigma, tau, 1
    else:
        first, second, sign = tau, sigma, -1
    for i in range(len(first)):
        if not first[i] < second[i]:
            return 0
        if i + 1 < len(first) and not second[i] < first[i + 1]:
            return 0
    return sign


def pair_index(K: SimplicialComplex, k: int) -> PairIndex:
    """P for (K, k) in lexicographic order."""
    return PairIndex(disjoint_pairs(K, (k, k)))


def o_gamma(
    K: SimplicialComplex, k: int, index: Optional[PairIndex] = None
) -> IntVector:
    """
    The vector o_γ over P.

    Entry (σ, τ) is +1 when the vertices alternate starting with σ, (-1)^k
    when they alternate starting with τ, and 0 otherwise.

    Raises:
        ObstructionError: If k < 1 or dim K > k.
    """
    _validate(K, k)
    if index is None:
        index = pair_index(K, k)
    tau_first = (-1) ** k
    values = []
    for sigma, tau in index:
        kind = alternation(sigma, tau)
        values.append(1 if kind == 1 else tau_first if kind == -1 else 0)
    return tuple(values)


def _cofaces(K: SimplicialComplex, k: int) -> Dict[Simplex, List[Tuple[Simplex, int]]]:
    """Map each (k-1)-simplex to its k-cofaces and the omitted vertex position."""
    cofaces: Dict[Simplex, List[Tuple[Simplex, int]]] = {}
    for simplex in K.simplices_of_dim(k):
        for i in range(len(simplex)):
            face = simplex[:i] + simplex[i + 1 :]
            cofaces.setdefault(face, []).append((simplex, i))
    return cofaces


def finger_move_columns(
    K: SimplicialComplex, k: int, index: Optional[PairIndex] = None
) -> Tuple[Tuple[SimplexPair, ...], IntMatrix]:
    """
    Build Q and the finger-move matrix Φ.

    For (ω, ν) ∈ Q and ∂_i the face omitting vertex i, the nonzero entries of
    φ^{ω,ν} are

    - at (σ, ν) with ω = ∂_iσ: (-1)^i
    - at (ω, τ) with ν = ∂_iτ: (-1)^(i+k)
    - at (σ, ω) with ν = ∂_iσ: (-1)^i
    - at (ν, τ) with ω = ∂_iτ: (-1)^(i+k)

    which are the coboundaries of the symmetric (k, k-1) cochains of the
    deleted product. Every column then obeys the same (-1)^k symmetry as o_γ.

    Returns:
        Tuple of (Q in lexicographic order, Φ with one column per element).
    """
    _validate(K, k)
    if index is None:
        index = pair_index(K, k)
    columns_q = sorted(disjoint_pairs(K, (k - 1, k)) + disjoint_pairs(K, (k, k - 1)))
    cofaces = _cofaces(K, k)
    columns: List[Dict[int, int]] = []
    for omega, nu in columns_q:
        column: Dict[int, int] = {}
        omega_is_facet = len(omega) == k
        low, high = (omega, nu) if omega_is_facet else (nu, omega)
        high_vertices = set(high)
        for simplex, i in cofaces.get(low, ()):
            if not high_vertices.isdisjoint(simplex):
                continue
            if omega_is_facet:
                # ω is the facet: (σ, ν) and (ν, τ)
                entries = (((simplex, high), (-1) ** i), ((high, simplex), (-1) ** (i + k)))
            else:
                # ν is the facet: (ω, τ) and (σ, ω)
                entries = (((high, simplex), (-1) ** (i + k)), ((simplex, high), (-1) ** i))
            for pair, value in entries:
                position = index.position(pair)
                column[position] = column.get(position, 0) + value
        columns.append({p: v for p, v in column.items() if v})
    return tuple(columns_q), IntMatrix(len(index), len(columns), columns)


def finger_move_matrix(K: SimplicialComplex, k: int) -> IntMatrix:
    """Φ for (K, k); see ``finger_move_columns``."""
    return finger_move_columns(K, k)[1]


def check_symmetry(system: ObstructionSystem) -> None:
    """
    Assert (v)_{τ,σ} = (-1)^k (v)_{σ,τ} for o_γ and every Φ column.

    Raises:
        ObstructionSymmetryError: Naming the first violating vector and pair.
    """
    sign = (-1) ** system.k
    index = system.index
    for p, value in enumerate(system.o_gamma):
        if system.o_gamma[index.swapped(p)] != sign * value:
            raise ObstructionSymmetryError(f"o_gamma violates symmetry at {index[p]}")
    for (omega, nu), column in zip(system.columns, system.phi.iter_columns()):
        for p, value in column.items():
            if column.get(index.swapped(p), 0) != sign * value:
                raise ObstructionSymmetryError(
                    f"Finger move ({list(omega)}, {list(nu)}) violates symmetry at {index[p]}"
                )


def build_obstruction_system(K: SimplicialComplex, k: int) -> ObstructionSystem:
    """
    Build and self-check the obstruction system of (K, k).

    Raises:
        ObstructionError: If k < 1 or dim K > k.
        ObstructionSymmetryError: If the construction breaks symmetry.
    """
    _validate(K, k)
    index = pair_index(K, k)
    columns, phi = finger_move_columns(K, k, index)
    system = ObstructionSystem(
        k=k,
        index=index,
        o_gamma=o_gamma(K, k, index),
        phi=phi,
        columns=columns,
    )
    check_symmetry(system)
    return system


def _verdict(k: int, vanishes: bool) -> Verdict:
    if not vanishes:
        return Verdict.NOT_EMBEDDABLE
    return Verdict.INCONCLUSIVE_VANISHING if k == 2 else Verdict.EMBEDDABLE


def analyze(
    K: SimplicialComplex,
    k: int,
    mod2: bool = False,
    system: Optional[ObstructionSystem] = None,
) -> VanKampenReport:
    """
    Run the Van Kampen test and report the verdict with system statistics.

    Over GF(2) vanishing is only necessary for k >= 2, so a mod-2 run can
    prove non-embeddability but reports vanishing as inconclusive unless k = 1.
    """
    if system is None:
        system = build_obstruction_system(K, k)
    eliminated, core = 0, (0, 0)
    if mod2:
        vanishes = solve_mod2(system.phi, system.o_gamma) is not None
        verdict = _verdict(k, vanishes)
        if vanishes and k > 1:
            verdict = Verdict.INCONCLUSIVE_VANISHING
    else:
        solution = has_integer_solution(system.phi, system.o_gamma, want_witness=False)
        vanishes = solution.solvable
        eliminated, core = solution.eliminated, solution.core_shape
        verdict = _verdict(k, vanishes)
    return VanKampenReport(
        k=k,
        verdict=verdict,
        vanishes=vanishes,
        mod2=mod2,
        pair_count=system.pair_count,
        column_count=system.column_count,
        eliminated_pivots=eliminated,
        core_rows=core[0],
        core_columns=core[1],
    )


def obstruction_vanishes(K: SimplicialComplex, k: int) -> bool:
    """True iff o_γ ∈ span_Z(Φ), i.e. the obstruction coset contains 0."""
    return analyze(K, k).vanishes


def obstruction_vanishes_mod2(K: SimplicialComplex, k: int) -> bool:
    """
    GF(2) version of ``obstruction_vanishes``.

    Equivalent to the integral test only for k = 1; for k >= 2 it is a
    necessary condition for vanishing.
    """
    return analyze(K, k, mod2=True).vanishes


def decide_embed_k_2k(K: SimplicialComplex, k: int) -> Verdict:
    """
    Decide PL embeddability of K into R^{2k}.

    Non-vanishing rules out embeddings for every k; vanishing proves
    embeddability for k != 2 and is inconclusive for k = 2.

    Raises:
        ObstructionError: If k < 1 or dim K > k.
    """
    return analyze(K, k).verdict
