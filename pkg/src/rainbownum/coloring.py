"""Exact colorings of Z_n, rainbow detection, palettes, and projections."""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import gcd
from typing import Iterable

from . import modring
from .equation import Equation, Triple
from .errors import (
    BadPartitionError,
    ModulusMismatchError,
    NotDivisorError,
    NotProjectableError,
)


@dataclass(frozen=True)
class Coloring:
    """An exact r-coloring of Z_n stored densely: assign[x] is the color of x.

    Colors are contiguous ints 0..r-1 and every color occurs (exactness);
    the constructor rejects anything else.  Class views are derived on
    demand, never stored: the assignment array is the single source of
    truth.
    """

    assign: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "assign", tuple(self.assign))
        n = len(self.assign)
        if n < 2:
            raise BadPartitionError(f"need a modulus >= 2, got {n} entries")
        used = set(self.assign)
        if used != set(range(len(used))):
            raise BadPartitionError(
                f"colors must be contiguous from 0 and all used, got {sorted(used)}"
            )

    @property
    def n(self) -> int:
        return len(self.assign)

    @property
    def r(self) -> int:
        return max(self.assign) + 1

    @classmethod
    def from_classes(cls, n: int, classes: Iterable[Iterable[int]]) -> Coloring:
        """Coloring in which the k-th class receives color k."""
        assign = [-1] * n
        for k, block in enumerate(classes):
            block = set(block)
            if not block:
                raise BadPartitionError(f"class {k} is empty")
            for x in block:
                if not 0 <= x < n:
                    raise BadPartitionError(f"residue {x} outside [0, {n})")
                if assign[x] != -1:
                    raise BadPartitionError(f"residue {x} appears in two classes")
                assign[x] = k
        if -1 in assign:
            raise BadPartitionError(f"residue {assign.index(-1)} is not covered")
        return cls(tuple(assign))

    def color_classes(self) -> list[frozenset[int]]:
        out: list[set[int]] = [set() for _ in range(self.r)]
        for x, c in enumerate(self.assign):
            out[c].add(x)
        return [frozenset(s) for s in out]

    def translate(self, k: int) -> Coloring:
        """The coloring x -> c(x + k); exactness is preserved."""
        n = self.n
        return Coloring(tuple(self.assign[(x + k) % n] for x in range(n)))

    def dilate(self, d: int) -> Coloring:
        """The coloring whose classes are d*A for each class A of this one,
        i.e. x -> c(d^(-1) * x).  d must be a unit."""
        dinv = modring.try_inverse(d, self.n)
        n = self.n
        return Coloring(tuple(self.assign[dinv * x % n] for x in range(n)))

    def to_json_dict(self) -> dict:
        return {"n": self.n, "colors": list(self.assign)}

    @classmethod
    def from_json_dict(cls, obj: object) -> Coloring:
        if not isinstance(obj, dict):
            raise BadPartitionError("coloring document must be a JSON object")
        n = obj.get("n")
        colors = obj.get("colors")
        if not isinstance(n, int) or isinstance(n, bool):
            raise BadPartitionError("field 'n' must be an integer")
        if not isinstance(colors, list):
            raise BadPartitionError("field 'colors' must be a list")
        if len(colors) != n:
            raise BadPartitionError(f"'colors' has {len(colors)} entries but n = {n}")
        if not all(isinstance(c, int) and not isinstance(c, bool) for c in colors):
            raise BadPartitionError("'colors' entries must be integers")
        return cls(tuple(colors))


def save_coloring(coloring: Coloring, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(coloring.to_json_dict(), fh)
        fh.write("\n")


def load_coloring(path) -> Coloring:
    with open(path, "r", encoding="utf-8") as fh:
        return Coloring.from_json_dict(json.load(fh))


@dataclass(frozen=True)
class RainbowReport:
    """Outcome of rainbow detection: a witness ordered solution whose three
    entries carry three distinct colors, or None for rainbow-free."""

    witness: Triple | None

    @property
    def rainbow_free(self) -> bool:
        return self.witness is None


def find_rainbow(coloring: Coloring, eq: Equation) -> RainbowReport:
    """Search for a solution of eq whose entries get three distinct colors.

    When some coefficient is a unit, the two free coordinates are scanned
    lexicographically (n^2 pairs) and the pivot entry is solved for; the
    pivot is the first unit coefficient in slot order 3, 1, 2.  Without a
    unit coefficient all n^3 ordered triples are enumerated.  The witness
    is the first hit in scan order, hence deterministic.  Three distinct
    colors force three distinct elements, so no distinctness filter is
    needed beyond the color test.
    """
    if coloring.n != eq.n:
        raise ModulusMismatchError(
            f"coloring is mod {coloring.n} but equation is mod {eq.n}"
        )
    n = eq.n
    col = coloring.assign
    a1, a2, a3, b = eq.a1, eq.a2, eq.a3, eq.b

    pivot = None
    for pos in (3, 1, 2):
        if gcd(eq.coeffs[pos - 1], n) == 1:
            pivot = pos
            break
    if pivot is None:
        for s1 in range(n):
            for s2 in range(n):
                if col[s1] == col[s2]:
                    continue
                for s3 in range(n):
                    if (a1 * s1 + a2 * s2 + a3 * s3 - b) % n == 0:
                        if col[s3] != col[s1] and col[s3] != col[s2]:
                            return RainbowReport((s1, s2, s3))
        return RainbowReport(None)

    ainv = modring.try_inverse(eq.coeffs[pivot - 1], n)
    for u in range(n):
        for v in range(n):
            if pivot == 3:
                t = (u, v, ainv * (b - a1 * u - a2 * v) % n)
            elif pivot == 1:
                t = (ainv * (b - a2 * u - a3 * v) % n, u, v)
            else:
                t = (u, ainv * (b - a1 * u - a3 * v) % n, v)
            c1, c2, c3 = col[t[0]], col[t[1]], col[t[2]]
            if c1 != c2 and c1 != c3 and c2 != c3:
                return RainbowReport(t)
    return RainbowReport(None)


@dataclass(frozen=True)
class PaletteView:
    """Residue classes R_i = {x : x = i mod u} and the set of colors seen
    on each (its palette)."""

    u: int
    classes: tuple[frozenset[int], ...]
    palettes: tuple[frozenset[int], ...]


def palette_view(coloring: Coloring, u: int) -> PaletteView:
    """Classes and palettes of the coloring relative to a divisor u >= 2."""
    n = coloring.n
    if u < 2 or n % u != 0:
        raise NotDivisorError(f"{u} is not a divisor >= 2 of {n}")
    classes = [frozenset(range(i, n, u)) for i in range(u)]
    palettes = [frozenset(coloring.assign[x] for x in block) for block in classes]
    return PaletteView(u, tuple(classes), tuple(palettes))


def project_palette_coloring(coloring: Coloring, u: int, j: int) -> Coloring:
    """Collapse a coloring of Z_n onto Z_u through palettes relative to class j.

    Class i maps to a fresh color ("yellow") when its palette sits inside
    class j's palette, and otherwise to the unique extra color; if any
    palette has two extra colors the projection is undefined
    (NotProjectableError).  Colors are compacted to a contiguous range with
    yellow highest, so the result is again an exact coloring.
    """
    view = palette_view(coloring, u)
    if not 0 <= j < u:
        raise ValueError(f"class index {j} outside [0, {u})")
    pj = view.palettes[j]
    raw: list[int | None] = []
    for i, pi in enumerate(view.palettes):
        extra = pi - pj
        if len(extra) > 1:
            raise NotProjectableError(
                f"palette {i} exceeds palette {j} by {len(extra)} colors"
            )
        raw.append(next(iter(extra)) if extra else None)
    kept = sorted({c for c in raw if c is not None})
    remap = {c: k for k, c in enumerate(kept)}
    yellow = len(kept)
    return Coloring(tuple(yellow if c is None else remap[c] for c in raw))
