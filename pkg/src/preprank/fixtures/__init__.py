"""Shipped quiver files and the two small counterexamples.

Names: ``a2`` / ``a2_rev``; ``a3_XY`` with ``X``, ``Y`` in ``r`` (arrow
towards the higher vertex) or ``l``; ``d4_XYZ`` with center vertex 1 and
``o`` / ``i`` for arrows out of / into the center; ``kronecker``; ``point``.
"""

from __future__ import annotations

from importlib import resources

from ..exactlinalg import FieldSpec, Matrix
from ..maxrank import INTO_U, TensorSumMap
from ..quiver import Quiver, Weights, parse_quiver


def fixture_names() -> list[str]:
    files = resources.files(__package__).iterdir()
    return sorted(p.name[:-len(".quiver")] for p in files if p.name.endswith(".quiver"))


def fixture_text(name: str) -> str:
    path = resources.files(__package__) / f"{name}.quiver"
    if not path.is_file():
        raise KeyError(f"no fixture named {name!r}")
    return path.read_text(encoding="utf-8")


def load_fixture(name: str) -> tuple[Quiver, Weights]:
    return parse_quiver(fixture_text(name))


def family(prefix: str) -> list[str]:
    return [n for n in fixture_names() if n == prefix or n.startswith(prefix + "_")]


def quotient_counterexample(field: FieldSpec) -> TensorSumMap:
    """``V⊗W -> (V⊗W)/span{v1⊗w1, v2⊗w1}`` with ``dim V = 3``, ``dim W = 2``.

    Right general but not left general: ``V'`` of dimension 2 always meets
    ``span{v1, v2}``.  ``U`` keeps the coordinates of ``v1⊗w2, v2⊗w2, v3⊗w1, v3⊗w2``.
    """
    keep = [1, 3, 4, 5]
    rows = [[field.one if j == k else field.zero for j in range(6)] for k in keep]
    return TensorSumMap([(3, 2)], INTO_U, Matrix(field, 4, 6, rows))
