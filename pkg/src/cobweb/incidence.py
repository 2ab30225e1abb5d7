"""The incidence algebra over an explicit finite cobweb poset.

Functions live on comparable pairs, take exact integer or Fraction values,
and multiply by convolution over segments:

    (f * g)(x, y) = sum of f(x, z) * g(z, y) over all z with x <= z <= y.

Inverses come from the triangular recursion, so every value stays exact.
Counting conventions used throughout: a chain of length k has k edges and
k+1 elements; at x == y the inverses of the chain generators count the
empty chain, so their diagonal is 1.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Callable, Mapping, Union

from .poset import FinitePoset, Pair, Vertex

Value = Union[int, Fraction]

FULL_NAMES = ("delta", "zeta", "eta", "chi", "C", "M")


def _exact(v: Value) -> Value:
    """Collapse denominator-1 fractions to plain int."""
    if isinstance(v, Fraction) and v.denominator == 1:
        return int(v)
    return v


class IncidenceFunction:
    """Exact-valued function on the comparable pairs of one poset.

    The table is total: every comparable pair has an entry (missing input
    entries are filled with 0), and pairs that are not comparable are
    implicitly 0 and cannot hold a value.
    """

    def __init__(self, poset: FinitePoset, values: Mapping[Pair, Value]):
        for x, y in values:
            if not poset.leq(x, y):
                raise ValueError(
                    f"value on non-comparable pair ({x}, {y}); "
                    "incidence functions vanish off the order relation"
                )
        self.poset = poset
        self.values: dict[Pair, Value] = {
            pair: _exact(values.get(pair, 0)) for pair in poset.comparable_pairs()
        }

    @classmethod
    def _raw(cls, poset: FinitePoset, table: dict[Pair, Value]) -> "IncidenceFunction":
        # internal fast path: table already total and exact
        f = cls.__new__(cls)
        f.poset = poset
        f.values = table
        return f

    @classmethod
    def from_callable(
        cls, poset: FinitePoset, fn: Callable[[Vertex, Vertex], Value]
    ) -> "IncidenceFunction":
        return cls._raw(
            poset, {(x, y): _exact(fn(x, y)) for x, y in poset.comparable_pairs()}
        )

    def value(self, x: Vertex, y: Vertex) -> Value:
        """f(x, y); 0 whenever x <= y fails."""
        self.poset._require(x)
        self.poset._require(y)
        return self.values.get((x, y), 0)

    __call__ = value

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IncidenceFunction):
            return NotImplemented
        return self.poset.same_shape(other.poset) and self.values == other.values

    def _check_compatible(self, other: "IncidenceFunction") -> None:
        if self.poset is not other.poset and not self.poset.same_shape(other.poset):
            raise ValueError("poset mismatch: operands live on different posets")

    def convolve(self, other: "IncidenceFunction") -> "IncidenceFunction":
        """Segment convolution; associative, with the diagonal function as identity."""
        self._check_compatible(other)
        fv, gv = self.values, other.values
        out: dict[Pair, Value] = {}
        for key, terms in self.poset.convolution_plan():
            acc: Value = 0
            for a, b in terms:
                acc += fv[a] * gv[b]
            out[key] = acc if type(acc) is int else _exact(acc)
        return IncidenceFunction._raw(self.poset, out)

    def __mul__(self, other: object):
        if not isinstance(other, IncidenceFunction):
            return NotImplemented
        return self.convolve(other)

    def power(self, k: int) -> "IncidenceFunction":
        """k-fold convolution; k = 0 gives the identity (diagonal) function."""
        if k < 0:
            raise ValueError(f"power must be >= 0, got {k}")
        if k == 0:
            return standard_full("delta", self.poset)
        out = self
        for _ in range(k - 1):
            out = out.convolve(self)
        return out

    def invert(self) -> "IncidenceFunction":
        """Two-sided convolution inverse.

        Requires a nonzero value at every (x, x); computed bottom-up from
        inv(x,x) = 1/f(x,x) and
        inv(x,y) = -(1/f(y,y)) * sum of inv(x,z) f(z,y) over x <= z < y.
        """
        p = self.poset
        fv = self.values
        for v in p.vertices:
            if fv[(v, v)] == 0:
                raise ValueError(f"not invertible: value at ({v}, {v}) is zero")
        pairs = sorted(p.comparable_pairs(), key=lambda pair: pair[1].s - pair[0].s)
        inv: dict[Pair, Value] = {}
        for x, y in pairs:
            if x == y:
                inv[(x, y)] = _exact(Fraction(1) / Fraction(fv[(x, y)]))
            else:
                acc: Value = 0
                for z in p.segment(x, y):
                    if z != y:
                        acc += inv[(x, z)] * fv[(z, y)]
                inv[(x, y)] = _exact(-Fraction(acc) / Fraction(fv[(y, y)]))
        return IncidenceFunction._raw(p, inv)

    # -- serialization ------------------------------------------------------

    def to_csv(self) -> str:
        """CSV rows ``x_j,x_s,y_j,y_s,value`` ascending by (x.s, x.j, y.s, y.j)."""
        lines = ["x_j,x_s,y_j,y_s,value"]
        for x, y in self.poset.comparable_pairs():
            lines.append(f"{x.j},{x.s},{y.j},{y.s},{self.values[(x, y)]}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        """JSON array of [x_j, x_s, y_j, y_s, value] rows; fractions as "p/q" strings."""
        rows = []
        for x, y in self.poset.comparable_pairs():
            v = self.values[(x, y)]
            rows.append([x.j, x.s, y.j, y.s, v if isinstance(v, int) else str(v)])
        return json.dumps(rows, indent=2) + "\n"


def standard_full(name: str, poset: FinitePoset) -> IncidenceFunction:
    """One of the named algebra elements on ``poset``.

    delta  identity: 1 exactly on the diagonal.
    zeta   characteristic function of the order; zeta^k counts multichains.
    eta    zeta - delta; eta^k counts strict chains with k edges.
    chi    1 exactly on covering pairs; chi^k counts saturated chains.
    C      delta - eta; its inverse counts all strict chains (diagonal 1,
           the empty chain).
    M      delta - chi; its inverse counts all saturated chains (diagonal 1).
    """
    key = name.strip()
    if key.lower() in ("c", "m"):
        key = key.upper()
    if key == "delta":
        fn = lambda x, y: 1 if x == y else 0
    elif key == "zeta":
        fn = lambda x, y: 1
    elif key == "eta":
        fn = lambda x, y: 0 if x == y else 1
    elif key == "chi":
        fn = lambda x, y: 1 if y.s == x.s + 1 else 0
    elif key == "C":
        fn = lambda x, y: 1 if x == y else -1
    elif key == "M":
        fn = lambda x, y: 1 if x == y else (-1 if y.s == x.s + 1 else 0)
    else:
        raise ValueError(f"unknown function name {name!r}; expected one of {FULL_NAMES}")
    return IncidenceFunction.from_callable(poset, fn)


def mobius_closed_form(poset: FinitePoset) -> IncidenceFunction:
    """Mobius function built directly from the rank product formula.

    Value 1 on the diagonal, -1 on covering pairs, and otherwise
    (-1)^(gap) times the product of (F_i - 1) over the levels strictly
    between the endpoints.  Must agree pointwise with
    ``standard_full("zeta", p).invert()`` and with the deletion recursion.
    """
    seq = poset.seq

    def mu(x: Vertex, y: Vertex) -> int:
        gap = y.s - x.s
        if gap == 0:
            return 1
        prod = 1
        for i in range(x.s + 1, y.s):
            prod *= seq.value_at(i) - 1
        return prod if gap % 2 == 0 else -prod

    return IncidenceFunction.from_callable(poset, mu)
