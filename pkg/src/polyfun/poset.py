"""Finite posets used as index shapes for diagrams."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ShapeError


@dataclass(frozen=True)
class FinPoset:
    """A finite poset: an ordered tuple of element ids and the full leq relation.

    `leq` must be reflexive, transitive and antisymmetric; this is checked at
    construction.  The one-element poset models plain finite sets.
    """

    elements: tuple
    leq: frozenset

    def __init__(self, elements, leq):
        object.__setattr__(self, "elements", tuple(elements))
        object.__setattr__(self, "leq", frozenset((a, b) for a, b in leq))
        self._validate()
        object.__setattr__(self, "_topo", self._toposort())
        object.__setattr__(self, "_pos", {e: i for i, e in enumerate(self.elements)})

    def _validate(self) -> None:
        elems = set(self.elements)
        if len(elems) != len(self.elements):
            raise ShapeError("duplicate poset elements")
        for a, b in self.leq:
            if a not in elems or b not in elems:
                raise ShapeError(f"leq pair ({a!r},{b!r}) mentions unknown element")
        for e in self.elements:
            if (e, e) not in self.leq:
                raise ShapeError(f"leq is not reflexive at {e!r}")
        for a, b in self.leq:
            for c, d in self.leq:
                if b == c and (a, d) not in self.leq:
                    raise ShapeError(f"leq is not transitive: {a!r}<={b!r}<={d!r}")
        for a, b in self.leq:
            if a != b and (b, a) in self.leq:
                raise ShapeError(f"leq is not antisymmetric on {a!r},{b!r}")

    def _toposort(self) -> tuple:
        remaining = list(self.elements)
        out = []
        while remaining:
            for e in remaining:
                if all((o, e) not in self.leq for o in remaining if o != e):
                    out.append(e)
                    remaining.remove(e)
                    break
            else:  # pragma: no cover - excluded by antisymmetry
                raise ShapeError("cycle in leq")
        return tuple(out)

    # -- queries ----------------------------------------------------------

    def le(self, a, b) -> bool:
        return (a, b) in self.leq

    def lt(self, a, b) -> bool:
        return a != b and (a, b) in self.leq

    @property
    def topo(self) -> tuple:
        """Elements in a deterministic linear extension of leq."""
        return self._topo

    def up(self, j) -> tuple:
        """All k with j <= k, in topo order (j itself first among them)."""
        return tuple(k for k in self._topo if self.le(j, k))

    def strict_pairs(self) -> tuple:
        """All (j, k) with j < k, ordered by topo positions."""
        order = {e: i for i, e in enumerate(self._topo)}
        pairs = [(a, b) for (a, b) in self.leq if a != b]
        pairs.sort(key=lambda p: (order[p[0]], order[p[1]]))
        return tuple(pairs)

    def covers(self) -> tuple:
        """Covering pairs j < k with nothing strictly between."""
        out = []
        for a, b in self.strict_pairs():
            if not any(self.lt(a, m) and self.lt(m, b) for m in self.elements):
                out.append((a, b))
        return tuple(out)

    def maximal(self) -> tuple:
        return tuple(e for e in self.elements
                     if all(not self.lt(e, o) for o in self.elements))

    # -- stock shapes ------------------------------------------------------

    @classmethod
    def point(cls) -> "FinPoset":
        return cls(("*",), {("*", "*")})

    @classmethod
    def sierpinski(cls) -> "FinPoset":
        return cls(("0", "1"), {("0", "0"), ("1", "1"), ("0", "1")})

    @classmethod
    def chain(cls, n: int) -> "FinPoset":
        elems = tuple(str(i) for i in range(n))
        leq = {(str(i), str(j)) for i in range(n) for j in range(i, n)}
        return cls(elems, leq)
