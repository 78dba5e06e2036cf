"""Exact Laplacian spectrum of a Laakso space, with multiplicities.

Every eigenvalue of the Laplacian on the limit space is of the form
lambda = (m/2)^2 * pi^2 for a nonnegative integer m, coming from five
families of one-dimensional eigenproblems:

    line          m = 2k,           k >= 0, once          (the unit interval)
    V             m = (2k+1) I_n,   k >= 0, 2^n per level n >= 1
    loop          m = 2k I_n,       k >= 1, one per loop, n >= 1
    cross-full    m = 2k I_n,       k >= 1, two per cross, n >= 2
    cross-quarter m = k I_n,        k >= 1, one per cross, n >= 2

Aggregation of coincident eigenvalues across families is exact integer
comparison on m, so multiplicities merge without floating-point ties.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass

from .errors import ValidationError
from .sequences import EXPLICIT, JSequence, shape_census

LINE = "line"
V = "V"
LOOP = "loop"
CROSS_FULL = "cross-full"
CROSS_QUARTER = "cross-quarter"

SHAPES = (LINE, V, LOOP, CROSS_FULL, CROSS_QUARTER)

_QUARTER_PI_SQ = math.pi * math.pi / 4.0


def eigenvalue_of_key(m: int) -> float:
    """lambda = (m/2)^2 pi^2 as a float (exact key is the integer m)."""
    return (m * m) * _QUARTER_PI_SQ


@dataclass(frozen=True)
class Contribution:
    """One family's donation to an eigenvalue: which shape, where, and how many."""

    shape: str
    level: int
    k: int
    count: int


@dataclass(frozen=True)
class SpectrumEntry:
    m: int  # eigenvalue key; lambda = (m/2)^2 pi^2
    multiplicity: int
    contributions: tuple[Contribution, ...]

    @property
    def value(self) -> float:
        return eigenvalue_of_key(self.m)


@dataclass(frozen=True)
class SpectrumTable:
    """Sorted distinct eigenvalues with exact aggregated multiplicities."""

    sequence: JSequence
    entries: tuple[SpectrumEntry, ...]
    lambda_max: float
    level_cap: int | None  # None means every level below lambda_max is present

    def multiplicity_list(self) -> list[int]:
        return [e.multiplicity for e in self.entries]

    def values(self) -> list[float]:
        return [e.value for e in self.entries]

    def to_json(self) -> str:
        payload = {
            "sequence": self.sequence.spec_string(),
            "lambda_max": self.lambda_max,
            "levels_included": "all" if self.level_cap is None else self.level_cap,
            "entries": [
                {
                    "m": str(e.m),
                    "lambda": e.value,
                    "multiplicity": e.multiplicity,
                    "contributions": [
                        {
                            "shape": c.shape,
                            "level": c.level,
                            "k": c.k,
                            "count": c.count,
                        }
                        for c in e.contributions
                    ],
                }
                for e in self.entries
            ],
        }
        return json.dumps(payload, indent=2)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["lambda", "multiplicity"])
        for e in self.entries:
            writer.writerow([repr(e.value), e.multiplicity])
        return buf.getvalue()


def _check_shape_level(shape: str, n: int) -> None:
    if shape not in SHAPES:
        raise ValidationError(f"unknown shape {shape!r}; expected one of {SHAPES}")
    if shape == LINE and n != 0:
        raise ValidationError("the line family lives at level 0 only")
    if shape in (V, LOOP) and n < 1:
        raise ValidationError(f"{shape} families exist for levels n >= 1")
    if shape in (CROSS_FULL, CROSS_QUARTER) and n < 2:
        raise ValidationError("cross families exist for levels n >= 2")


def _family_modes(
    shape: str, seq: JSequence, n: int, lambda_max: float
) -> list[tuple[int, int, int]]:
    """(key m, mode index k, multiplicity) triples for one family at one level."""
    _check_shape_level(shape, n)
    if lambda_max < 0:
        return []

    if shape == LINE:
        out = []
        k = 0
        while eigenvalue_of_key(2 * k) <= lambda_max:
            out.append((2 * k, k, 1))
            k += 1
        return out

    census = shape_census(seq, n)
    scale = census.scale
    if shape == V:
        count, first_k, key_of = census.v_count, 0, lambda k: (2 * k + 1) * scale
    elif shape == LOOP:
        count, first_k, key_of = census.loop_count, 1, lambda k: 2 * k * scale
    elif shape == CROSS_FULL:
        count, first_k, key_of = 2 * census.cross_count, 1, lambda k: 2 * k * scale
    else:  # CROSS_QUARTER
        count, first_k, key_of = census.cross_count, 1, lambda k: k * scale
    if count == 0:
        return []

    out = []
    k = first_k
    while True:
        m = key_of(k)
        if eigenvalue_of_key(m) > lambda_max:
            break
        out.append((m, k, count))
        k += 1
    return out


def shape_spectrum(
    shape: str, seq: JSequence, n: int, lambda_max: float
) -> list[tuple[int, int]]:
    """All (key m, multiplicity) pairs of one shape family at one level.

    Only eigenvalues with (m/2)^2 pi^2 <= lambda_max are produced; the list
    is empty when the shape count at that level is zero (e.g. loops with
    j_n = 2).
    """
    return [(m, count) for m, _, count in _family_modes(shape, seq, n, lambda_max)]


def _families_at_level(n: int) -> tuple[str, ...]:
    if n == 0:
        return (LINE,)
    if n == 1:
        return (V, LOOP)
    return (V, LOOP, CROSS_FULL, CROSS_QUARTER)


def _generate(seq: JSequence, lambda_max: float, level_cap: int | None) -> SpectrumTable:
    if lambda_max < 0:
        raise ValidationError(f"lambda_max {lambda_max} < 0")
    collected: dict[int, list[Contribution]] = {}

    def add(shape: str, level: int):
        for m, k, count in _family_modes(shape, seq, level, lambda_max):
            collected.setdefault(m, []).append(
                Contribution(shape=shape, level=level, k=k, count=count)
            )

    add(LINE, 0)

    truncated_at = None
    n = 1
    while True:
        if level_cap is not None and n > level_cap:
            break
        if seq.max_level is not None and n > seq.max_level:
            truncated_at = seq.max_level
            break
        scale = seq.scale(n)
        # smallest positive eigenvalue of any level-n family is (I_n/2)^2 pi^2
        if eigenvalue_of_key(scale) > lambda_max:
            break
        for shape in _families_at_level(n):
            add(shape, n)
        n += 1

    entries = tuple(
        SpectrumEntry(
            m=m,
            multiplicity=sum(c.count for c in contribs),
            contributions=tuple(contribs),
        )
        for m, contribs in sorted(collected.items())
    )
    cap = level_cap
    if cap is None and truncated_at is not None:
        cap = truncated_at
    return SpectrumTable(
        sequence=seq, entries=entries, lambda_max=lambda_max, level_cap=cap
    )


def full_spectrum(seq: JSequence, lambda_max: float) -> SpectrumTable:
    """Merged spectrum over every level whose families reach lambda_max.

    For an explicit prefix the level loop stops at the prefix end and the
    table records that cap.
    """
    return _generate(seq, lambda_max, None)


def level_spectrum(seq: JSequence, n_max: int, lambda_max: float) -> SpectrumTable:
    """Spectrum truncated to families of level <= n_max.

    This is what the finite graph F_{n_max} carries, hence the comparison
    target for the mesh eigensolver.
    """
    if n_max < 0:
        raise ValidationError(f"n_max {n_max} < 0")
    if seq.kind == EXPLICIT and seq.max_level is not None and n_max > seq.max_level:
        raise ValidationError(
            f"n_max {n_max} exceeds the {seq.max_level}-entry explicit prefix"
        )
    return _generate(seq, lambda_max, n_max)


def counting_function(table: SpectrumTable, lam: float) -> int:
    """Number of eigenvalues (with multiplicity) <= lam in the table."""
    if lam > table.lambda_max:
        raise ValidationError(
            f"lambda {lam} exceeds the table range {table.lambda_max}"
        )
    total = 0
    for e in table.entries:
        if e.value > lam:
            break
        total += e.multiplicity
    return total


def first_distinct(seq: JSequence, count: int) -> SpectrumTable:
    """Table holding exactly the first `count` distinct eigenvalues."""
    if count < 1:
        raise ValidationError(f"count {count} < 1")
    # the line family alone guarantees >= count distinct values below (count pi)^2
    lam = eigenvalue_of_key(2 * (count - 1)) + 1.0
    table = full_spectrum(seq, lam)
    while len(table.entries) < count:
        lam *= 2.0
        table = full_spectrum(seq, lam)
    entries = table.entries[:count]
    return SpectrumTable(
        sequence=seq,
        entries=entries,
        lambda_max=entries[-1].value,
        level_cap=table.level_cap,
    )
