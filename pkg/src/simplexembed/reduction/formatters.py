"""Summaries of generated gadget complexes."""

from simplexembed.complex.operations import euler_characteristic
from simplexembed.reduction.models import GadgetComplex


class GadgetTextFormatter:
    """Line-oriented summary of a gadget complex."""

    @staticmethod
    def format(gadget: GadgetComplex) -> str:
        """
        Format the counts, openings and conflicts of a gadget.

        Args:
            gadget: Generated or assembled gadget complex.

        Returns:
            One ``key: value`` line per statistic.
        """
        K = gadget.complex
        f_vector = K.f_vector
        lines = [
            f"vertices: {f_vector[0] if f_vector else 0}",
            f"edges: {f_vector[1] if len(f_vector) > 1 else 0}",
            f"triangles: {f_vector[2] if len(f_vector) > 2 else 0}",
            f"euler_characteristic: {euler_characteristic(K)}",
            f"openings: {len(gadget.openings)}",
            f"conflicts: {len(gadget.conflicts)}",
        ]
        for key in sorted(gadget.openings):
            opening = gadget.openings[key]
            lines.append(f"{key}: removed {' '.join(map(str, opening.removed))}")
        return "\n".join(lines)
