"""Combinatorial Heegaard diagrams.

A diagram stores two transverse systems of oriented curves on a closed
oriented surface purely combinatorially: each curve is the cyclic sequence
of crossing ids met along its orientation, and every crossing carries the
intersection sign of the X curve with the Y curve there.  No embedding is
stored; when a surface is needed (genus verification) it is recovered from
the rotation system the signs force at each crossing.

Positive diagrams admit the classical encoding by a pair of permutations
of the crossings: flow along X (respectively Y) from one crossing to the
next.  ``montesinos_encode`` / ``montesinos_decode`` implement that codec;
for diagrams whose curve union is disconnected the encoding simply acts
per component.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import Disconnected, IsolatedCurve, NotPositive
from .exactalg import SnfResult
from .presentation import Presentation, abelianization


@dataclass(frozen=True)
class Diagram:
    """Oriented curve systems as cyclic crossing sequences plus signs.

    ``signs`` is kept as a tuple of ``(crossing_id, sign)`` pairs sorted by
    id so that equal diagrams compare equal and serialize identically.
    """

    declared_genus: int
    x_curves: tuple[tuple[int, ...], ...]
    y_curves: tuple[tuple[int, ...], ...]
    signs: tuple[tuple[int, int], ...]

    @classmethod
    def build(cls, declared_genus, x_curves, y_curves, signs: Mapping[int, int]) -> "Diagram":
        return cls(
            declared_genus,
            tuple(tuple(c) for c in x_curves),
            tuple(tuple(c) for c in y_curves),
            tuple(sorted((int(k), int(v)) for k, v in signs.items())),
        )

    @property
    def sign_map(self) -> dict[int, int]:
        return dict(self.signs)

    @property
    def crossing_count(self) -> int:
        return len(self.signs)

    def to_json(self) -> dict:
        return {
            "genus": self.declared_genus,
            "x_curves": [list(c) for c in self.x_curves],
            "y_curves": [list(c) for c in self.y_curves],
            "signs": {str(k): v for k, v in self.signs},
        }

    @classmethod
    def from_json(cls, data: dict) -> "Diagram":
        return cls.build(
            int(data["genus"]),
            [[int(c) for c in curve] for curve in data["x_curves"]],
            [[int(c) for c in curve] for curve in data["y_curves"]],
            {int(k): int(v) for k, v in data["signs"].items()},
        )


@dataclass(frozen=True)
class DiagramViolation:
    """One structural defect found by :func:`validate`."""

    code: str
    message: str


def validate(dg: Diagram) -> list[DiagramViolation]:
    """Check the structural invariants exhaustively; empty list means ok.

    Every crossing id must occur exactly once across the X curves and once
    across the Y curves, and the sign map must cover exactly those ids
    with values +-1.
    """
    out: list[DiagramViolation] = []
    if dg.declared_genus < 0:
        out.append(DiagramViolation("NegativeGenus", "declared genus is negative"))
    if not dg.x_curves:
        out.append(DiagramViolation("EmptySide", "no X curves"))
    if not dg.y_curves:
        out.append(DiagramViolation("EmptySide", "no Y curves"))

    def side_ids(curves, dup_code):
        seen: dict[int, int] = {}
        for curve in curves:
            for c in curve:
                seen[c] = seen.get(c, 0) + 1
        for c, count in sorted(seen.items()):
            if count > 1:
                out.append(DiagramViolation(dup_code, f"crossing {c} appears {count} times"))
        return set(seen)

    on_x = side_ids(dg.x_curves, "DuplicateOnX")
    on_y = side_ids(dg.y_curves, "DuplicateOnY")
    for c in sorted(on_x - on_y):
        out.append(DiagramViolation("MissingFromY", f"crossing {c} is only on an X curve"))
    for c in sorted(on_y - on_x):
        out.append(DiagramViolation("MissingFromX", f"crossing {c} is only on a Y curve"))
    signed = {k for k, _ in dg.signs}
    for c in sorted((on_x | on_y) - signed):
        out.append(DiagramViolation("MissingSign", f"crossing {c} has no sign"))
    for c in sorted(signed - (on_x | on_y)):
        out.append(DiagramViolation("ExtraSign", f"sign for unknown crossing {c}"))
    for c, v in dg.signs:
        if v not in (1, -1):
            out.append(DiagramViolation("BadSign", f"crossing {c} has sign {v}"))
    return out


def _require_valid(dg: Diagram) -> None:
    problems = validate(dg)
    if problems:
        first = problems[0]
        raise ValueError(f"invalid diagram: {first.code}: {first.message}")


def is_positive_diagram(dg: Diagram) -> bool:
    """True iff every crossing sign is +1 (vacuously true with none)."""
    _require_valid(dg)
    return all(v == 1 for _, v in dg.signs)


def _successors(curves) -> tuple[dict[int, int], dict[int, int]]:
    nxt: dict[int, int] = {}
    prv: dict[int, int] = {}
    for curve in curves:
        k = len(curve)
        for i, c in enumerate(curve):
            nxt[c] = curve[(i + 1) % k]
            prv[c] = curve[(i - 1) % k]
    return nxt, prv


def _components(dg: Diagram) -> list[set[int]]:
    parent: dict[int, int] = {}

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    for k, _ in dg.signs:
        parent[k] = k
    for curve in list(dg.x_curves) + list(dg.y_curves):
        for i in range(1, len(curve)):
            union(curve[0], curve[i])
    groups: dict[int, set[int]] = {}
    for k, _ in dg.signs:
        groups.setdefault(find(k), set()).add(k)
    return list(groups.values())


# dart slots at a crossing: X-out, Y-out, X-in, Y-in
_XO, _YO, _XI, _YI = 0, 1, 2, 3
# counterclockwise successor of each slot, by crossing sign
_CCW = {1: {_XO: _YO, _YO: _XI, _XI: _YI, _YI: _XO},
        -1: {_XO: _YI, _YI: _XI, _XI: _YO, _YO: _XO}}


def _face_count(crossings: Iterable[int], dg: Diagram) -> int:
    """Number of faces traced by the forced rotation system on a crossing set."""
    nxt_x, prv_x = _successors(dg.x_curves)
    nxt_y, prv_y = _successors(dg.y_curves)
    sign = dg.sign_map
    crossings = set(crossings)

    def alpha(dart):
        c, slot = dart
        if slot == _XO:
            return (nxt_x[c], _XI)
        if slot == _XI:
            return (prv_x[c], _XO)
        if slot == _YO:
            return (nxt_y[c], _YI)
        return (prv_y[c], _YO)

    def face_next(dart):
        c, slot = alpha(dart)
        return (c, _CCW[sign[c]][slot])

    todo = {(c, slot) for c in crossings for slot in (_XO, _YO, _XI, _YI)}
    faces = 0
    while todo:
        start = todo.pop()
        faces += 1
        dart = face_next(start)
        while dart != start:
            todo.remove(dart)
            dart = face_next(dart)
    return faces


def _genus_sum(dg: Diagram) -> int:
    """Sum of the forced genera over the components of the curve union."""
    total = 0
    for comp in _components(dg):
        v = len(comp)
        e = 2 * v
        f = _face_count(comp, dg)
        chi = v - e + f
        assert (2 - chi) % 2 == 0
        total += (2 - chi) // 2
    return total


def rotation_genus(dg: Diagram) -> int:
    """Genus of the closed oriented surface forced by the crossing signs.

    The 4-valent graph X union Y gets the counterclockwise half-edge order
    (X-out, Y-out, X-in, Y-in) at a +1 crossing and
    (X-out, Y-in, X-in, Y-out) at a -1 crossing; faces are traced from
    that rotation system and the genus is ``(2 - (V - E + F)) / 2`` with
    ``V = d`` crossings and ``E = 2d`` edges.

    Requires every curve to carry a crossing (:class:`IsolatedCurve`) and
    the graph to be connected (:class:`Disconnected`).
    """
    _require_valid(dg)
    for curve in list(dg.x_curves) + list(dg.y_curves):
        if not curve:
            raise IsolatedCurve("a curve without crossings has no rotation data")
    comps = _components(dg)
    if len(comps) != 1:
        raise Disconnected(f"curve union has {len(comps)} components")
    return _genus_sum(dg)


def diagram_presentation(dg: Diagram) -> Presentation:
    """Group presentation read off the diagram.

    One generator per X curve; each Y curve contributes the relator that
    lists, along its orientation, the crossed X curve with the crossing
    sign as exponent.  No free reduction is applied, so each relator's
    length equals that Y curve's crossing count.
    """
    _require_valid(dg)
    x_index: dict[int, int] = {}
    for idx, curve in enumerate(dg.x_curves, start=1):
        for c in curve:
            x_index[c] = idx
    sign = dg.sign_map
    relators = tuple(
        tuple(sign[c] * x_index[c] for c in curve) for curve in dg.y_curves
    )
    return Presentation(len(dg.x_curves), relators)


def diagram_homology(dg: Diagram) -> SnfResult:
    """Smith data of the algebraic intersection matrix (Y rows, X columns)."""
    return abelianization(diagram_presentation(dg))


@dataclass(frozen=True)
class PermutationPair:
    """Successor permutations along X and along Y on crossings 1..d."""

    degree: int
    sigma_x: tuple[int, ...]
    sigma_y: tuple[int, ...]

    def __post_init__(self):
        for name, sigma in (("sigma_x", self.sigma_x), ("sigma_y", self.sigma_y)):
            if len(sigma) != self.degree or sorted(sigma) != list(range(1, self.degree + 1)):
                raise ValueError(f"{name} is not a permutation of 1..{self.degree}")

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "sigma_x": list(self.sigma_x),
            "sigma_y": list(self.sigma_y),
        }

    @classmethod
    def from_json(cls, data: dict) -> "PermutationPair":
        sx = tuple(int(v) for v in data["sigma_x"])
        sy = tuple(int(v) for v in data["sigma_y"])
        degree = int(data.get("degree", len(sx)))
        return cls(degree, sx, sy)


def montesinos_encode(dg: Diagram) -> PermutationPair:
    """Encode a positive diagram by its along-X and along-Y successor maps.

    Crossing ids are ranked into 1..d in increasing order, so diagrams
    differing only by id relabeling encode identically.
    """
    _require_valid(dg)
    if not is_positive_diagram(dg):
        raise NotPositive("the permutation encoding needs an all-positive diagram")
    ids = sorted(k for k, _ in dg.signs)
    rank = {c: i + 1 for i, c in enumerate(ids)}
    d = len(ids)
    nxt_x, _ = _successors(dg.x_curves)
    nxt_y, _ = _successors(dg.y_curves)
    sx = [0] * d
    sy = [0] * d
    for c in ids:
        sx[rank[c] - 1] = rank[nxt_x[c]]
        sy[rank[c] - 1] = rank[nxt_y[c]]
    return PermutationPair(d, tuple(sx), tuple(sy))


def _cycles(sigma: tuple[int, ...]) -> list[tuple[int, ...]]:
    seen = set()
    cycles = []
    for start in range(1, len(sigma) + 1):
        if start in seen:
            continue
        cycle = [start]
        seen.add(start)
        c = sigma[start - 1]
        while c != start:
            cycle.append(c)
            seen.add(c)
            c = sigma[c - 1]
        cycles.append(tuple(cycle))
    return cycles


def montesinos_decode(p: PermutationPair) -> Diagram:
    """Rebuild the positive diagram with the given successor permutations.

    Curves are the permutation cycles (listed from their smallest
    crossing), all signs are +1, and the declared genus is the forced
    rotation genus, summed over components when the pair is intransitive.
    """
    x_curves = _cycles(p.sigma_x)
    y_curves = _cycles(p.sigma_y)
    signs = {c: 1 for c in range(1, p.degree + 1)}
    dg = Diagram.build(0, x_curves, y_curves, signs)
    genus = _genus_sum(dg) if p.degree else 0
    return Diagram.build(genus, x_curves, y_curves, signs)


def to_dot(dg: Diagram) -> str:
    """Diagnostic DOT rendering of the 4-valent graph with colored curve edges."""
    lines = ["graph diagram {"]
    for idx, curve in enumerate(dg.x_curves, start=1):
        for i, c in enumerate(curve):
            nxt = curve[(i + 1) % len(curve)]
            lines.append(f'  "{c}" -- "{nxt}" [color=red, label="x{idx}"];')
    for idx, curve in enumerate(dg.y_curves, start=1):
        for i, c in enumerate(curve):
            nxt = curve[(i + 1) % len(curve)]
            lines.append(f'  "{c}" -- "{nxt}" [color=blue, label="y{idx}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
