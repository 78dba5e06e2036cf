"""Defining sequences {j_n} and the closed-form combinatorics of Laakso spaces.

A Laakso space is determined by a sequence of integers j_n >= 2: level n of
the approximating graph F_n is obtained from level n-1 by subdividing every
cell into j_n equal pieces, duplicating the graph, and identifying the two
copies of each newly inserted node.  Everything countable about the space
(cell scale I_n, cell count N_n, node count, shape census, dimensions) is a
closed-form function of the j_i and is computed here exactly, in
arbitrary-precision integer arithmetic where the quantity is an integer.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

from .errors import DimensionUndefinedError, LevelRangeError, ValidationError

CONSTANT = "constant"
PERIODIC = "periodic"
EXPLICIT = "explicit"


@dataclass(frozen=True)
class JSequence:
    """The sequence {j_n} defining a Laakso space.

    kind is one of "constant", "periodic", "explicit".  values holds the
    constant (length 1), the repeating pattern, or the finite prefix.
    Indexing is 1-based to match the construction: j(1) is used to build F_1.
    """

    kind: str
    values: tuple[int, ...]

    def __post_init__(self):
        if self.kind not in (CONSTANT, PERIODIC, EXPLICIT):
            raise ValidationError(f"unknown sequence kind {self.kind!r}")
        if not self.values:
            raise ValidationError("sequence needs at least one value")
        if self.kind == CONSTANT and len(self.values) != 1:
            raise ValidationError("constant sequence takes exactly one value")
        for v in self.values:
            if not isinstance(v, int) or isinstance(v, bool):
                raise ValidationError(f"entry {v!r} is not an integer")
            if v < 2:
                raise ValidationError(f"entry {v} < 2")

    def j(self, n: int) -> int:
        """j_n for n >= 1.  Raises beyond the prefix of an explicit sequence."""
        if n < 1:
            raise ValidationError(f"level index {n} < 1")
        if self.kind == CONSTANT:
            return self.values[0]
        if self.kind == PERIODIC:
            return self.values[(n - 1) % len(self.values)]
        if n > len(self.values):
            raise LevelRangeError(
                f"j_{n} requested but explicit sequence has only "
                f"{len(self.values)} entries"
            )
        return self.values[n - 1]

    def scale(self, n: int) -> int:
        """I_n = j_1 * ... * j_n (exact integer; cell diameter is 1/I_n)."""
        if n < 0:
            raise ValidationError(f"level index {n} < 0")
        out = 1
        for i in range(1, n + 1):
            out *= self.j(i)
        return out

    @property
    def period(self) -> int:
        """Length of the repeating block (1 for constant sequences)."""
        if self.kind == CONSTANT:
            return 1
        if self.kind == PERIODIC:
            return len(self.values)
        raise DimensionUndefinedError("explicit sequence has no period")

    @property
    def max_level(self) -> int | None:
        """Largest usable level, or None when every level is defined."""
        return len(self.values) if self.kind == EXPLICIT else None

    @property
    def has_contraction_limit(self) -> bool:
        return self.kind in (CONSTANT, PERIODIC)

    def contraction_limit(self) -> float:
        """r = lim I_n^(1/n); exact for constant and periodic sequences."""
        if not self.has_contraction_limit:
            raise DimensionUndefinedError(
                "r = lim I_n^(1/n) is undefined for an explicit prefix; "
                "re-parse it as periodic if the prefix is the repeating block"
            )
        if self.kind == CONSTANT:
            return float(self.values[0])
        return math.prod(self.values) ** (1.0 / len(self.values))

    def levels(self) -> Iterator[int]:
        """Yield usable level indices 1, 2, ... (finite for explicit)."""
        n = 1
        while self.max_level is None or n <= self.max_level:
            yield n
            n += 1

    def spec_string(self) -> str:
        """Round-trippable text form (the parse_sequence grammar)."""
        body = ",".join(str(v) for v in self.values)
        if self.kind == EXPLICIT:
            return f"seq:{body}"
        return body

    def __str__(self) -> str:
        return self.spec_string()


@dataclass(frozen=True)
class LevelInfo:
    """Exact counts for the level-n graph F_n."""

    n: int
    scale: int  # I_n; cells have diameter 1/I_n
    cells: int  # N_n = 2^n * I_n edges
    nodes: int  # 2^(n-1) * (I_n + 3), which is 2 at n = 0


@dataclass(frozen=True)
class ShapeCensus:
    """How many of each spectral motif the level-n graph contains."""

    n: int
    scale: int  # I_n
    v_count: int
    loop_count: int
    cross_count: int

    @property
    def degree_one_nodes(self) -> int:
        # every V contributes its two tips; nothing else has degree 1
        return 2 * self.v_count

    @property
    def degree_four_nodes(self) -> int:
        return (1 << (self.n - 1)) * (self.scale - 1)


@dataclass(frozen=True)
class DimensionReport:
    """Hausdorff, spectral, and walk dimensions of the limit space."""

    r: float  # contraction-limit value, lim I_n^(1/n)
    hausdorff: float  # Q = 1 + log 2 / log r
    spectral: float  # d_s = log(2r) / log r, equal to Q here
    walk: float = 2.0


def parse_sequence(spec: str) -> JSequence:
    """Parse the sequence grammar.

    "k"         -> constant j_n = k
    "a,b,..."   -> periodic with pattern (a, b, ...)
    "seq:a,b,..." -> explicit finite prefix
    """
    text = spec.strip()
    explicit = False
    if text.startswith("seq:"):
        explicit = True
        text = text[len("seq:"):]
    if not text:
        raise ValidationError(f"empty sequence spec {spec!r}")
    parts = [p.strip() for p in text.split(",")]
    values = []
    for part in parts:
        if not part:
            raise ValidationError(f"empty entry in sequence spec {spec!r}")
        try:
            v = int(part)
        except ValueError:
            raise ValidationError(f"entry {part!r} is not an integer") from None
        if v < 2:
            raise ValidationError(f"entry {v} < 2")
        values.append(v)
    if explicit:
        kind = EXPLICIT
    elif len(values) == 1:
        kind = CONSTANT
    else:
        kind = PERIODIC
    return JSequence(kind=kind, values=tuple(values))


def level_info(seq: JSequence, n: int) -> LevelInfo:
    """Exact I_n, N_n, and node count of F_n."""
    if n < 0:
        raise ValidationError(f"level index {n} < 0")
    scale = seq.scale(n)  # raises LevelRangeError beyond an explicit prefix
    cells = (1 << n) * scale
    if n == 0:
        nodes = 2
    else:
        nodes = (1 << (n - 1)) * (scale + 3)
    return LevelInfo(n=n, scale=scale, cells=cells, nodes=nodes)


def shape_census(seq: JSequence, n: int) -> ShapeCensus:
    """Counts of V's, loops, and crosses in F_n (n >= 1).

    V count doubles each level; loops appear j_n - 2 per parent cell; a cross
    appears wherever the parent graph had a degree-4 node, so none exist at
    n = 1 and F_0 (a single interval) has no shapes at all.
    """
    if n < 1:
        raise ValidationError("no shapes exist on the unit interval (n = 0)")
    scale_prev = seq.scale(n - 1)
    jn = seq.j(n)
    v_count = 1 << n
    loop_count = (1 << (n - 1)) * (jn - 2) * scale_prev
    cross_count = 0 if n == 1 else (1 << (n - 2)) * (scale_prev - 1)
    return ShapeCensus(
        n=n,
        scale=scale_prev * jn,
        v_count=v_count,
        loop_count=loop_count,
        cross_count=cross_count,
    )


def dimensions(seq: JSequence, *, assume_periodic: bool = False) -> DimensionReport:
    """Dimension report for a sequence with a well-defined contraction limit.

    Explicit prefixes are refused unless assume_periodic is set, in which
    case the prefix is treated as the repeating block.
    """
    if seq.kind == EXPLICIT:
        if not assume_periodic:
            raise DimensionUndefinedError(
                "dimensions need r = lim I_n^(1/n); pass assume_periodic=True "
                "to treat the explicit prefix as a repeating pattern"
            )
        seq = JSequence(
            kind=CONSTANT if len(seq.values) == 1 else PERIODIC,
            values=seq.values,
        )
    p = seq.period
    log_r = math.log(math.prod(seq.values)) / p
    r = seq.contraction_limit()
    q = 1.0 + math.log(2.0) / log_r
    return DimensionReport(r=r, hausdorff=q, spectral=q, walk=2.0)
