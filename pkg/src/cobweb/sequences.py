"""Level-size sequences that designate cobweb posets."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class FSequence:
    """Finite tuple of level sizes F_0..F_N for a layered poset.

    F_0 is 0 or 1: the bottom level is a single root, or (exceptionally)
    empty, in which case ranks effectively start at 1.  Every level above
    the root must be nonempty.
    """

    values: tuple[int, ...]
    name: str = "custom"

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", tuple(self.values))
        if len(self.values) == 0:
            raise ValueError("sequence needs at least the level-0 size")
        for n, v in enumerate(self.values):
            if not isinstance(v, int):
                raise ValueError(f"level size at n={n} must be an integer, got {v!r}")
            if v < 0:
                raise ValueError(f"negative level size {v} at n={n}")
        if self.values[0] not in (0, 1):
            raise ValueError(f"F_0 must be 0 or 1, got {self.values[0]}")
        for n, v in enumerate(self.values[1:], start=1):
            if v == 0:
                raise ValueError(f"zero level size at n={n}; only F_0 may be 0")

    def __len__(self) -> int:
        return len(self.values)

    @property
    def max_index(self) -> int:
        return len(self.values) - 1

    @property
    def min_rank(self) -> int:
        """Index of the first nonempty level: 1 when the root level is empty, else 0."""
        return 1 if self.values[0] == 0 else 0

    def value_at(self, n: int) -> int:
        """Level size F_n; raises IndexError outside the stored range."""
        if not 0 <= n <= self.max_index:
            raise IndexError(f"level {n} outside stored range 0..{self.max_index}")
        return self.values[n]

    def prefix(self, n: int) -> tuple[int, ...]:
        """Sizes F_0..F_n, used for shape-compatibility checks."""
        if n > self.max_index:
            raise IndexError(f"level {n} outside stored range 0..{self.max_index}")
        return self.values[: n + 1]


def _parse_int(token: str, spec: str) -> int:
    try:
        return int(token.strip())
    except ValueError:
        raise ValueError(f"malformed sequence spec {spec!r}: {token!r} is not an integer") from None


def make_sequence(spec: str, n_max: int) -> FSequence:
    """Build the level-size sequence described by ``spec``, up to index ``n_max``.

    Grammar: ``fibonacci | naturals | constant:<int> | custom:<int>(,<int>)*``.
    The generators all put a single root at level 0; an empty root level is
    only reachable through ``custom:0,...``.
    """
    if n_max < 0:
        raise ValueError(f"max level must be >= 0, got {n_max}")
    spec = spec.strip()
    if spec == "fibonacci":
        vals = [1, 1]
        while len(vals) < n_max + 1:
            vals.append(vals[-1] + vals[-2])
        return FSequence(tuple(vals[: n_max + 1]), name="fibonacci")
    if spec == "naturals":
        return FSequence((1, *range(1, n_max + 1)), name="naturals")
    if spec.startswith("constant:"):
        c = _parse_int(spec[len("constant:"):], spec)
        if c < 1:
            raise ValueError(f"constant level size must be >= 1, got {c}")
        return FSequence((1,) + (c,) * n_max, name=spec)
    if spec.startswith("custom:"):
        items = [_parse_int(tok, spec) for tok in spec[len("custom:"):].split(",")]
        if len(items) < n_max + 1:
            raise ValueError(
                f"custom sequence lists {len(items)} sizes but max level {n_max} needs {n_max + 1}"
            )
        return FSequence(tuple(items[: n_max + 1]), name=spec)
    raise ValueError(
        f"unrecognized sequence spec {spec!r}; "
        "expected fibonacci, naturals, constant:<c> or custom:<a0,a1,...>"
    )
