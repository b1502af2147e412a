"""Finite permutation systems with a commuting involution, built literally.

A behavior decomposition turns into an explicit point set: each surviving
orbit is an n-cycle fixed pointwise by the involution, each glued pair is
two n-cycles swapped coordinatewise, and each halving orbit is a 2n-cycle
on which the involution rotates by half a turn.  One surviving fixed
point is distinguished (the accumulation point of the compactified
picture, written here as the 'infinity' kind) and anchors the metric.

Everything downstream of construction re-derives structure from the maps
alone: orbit counting is cycle decomposition, classification inspects how
the involution moves each cycle, and the quotient is built from the
actual equivalence classes.  That independence is what makes this module
usable as the ground-truth oracle for the counting formulas.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .arith import CountSequence
from .combinatorics import BehaviorDecomposition, RawBehaviorCounts
from .errors import (
    BadArgument,
    EmptyFixedPoint,
    IllDefined,
    InvalidSystem,
    InvariantBreach,
    ParseError,
)

__all__ = [
    "Point",
    "FiniteSystem",
    "QuotientSystem",
    "build_system",
    "count_orbits",
    "classify_orbits",
    "quotient",
    "double_system",
    "cycle_decomposition",
    "dump_system",
    "parse_system",
]

INFINITY = "infinity"
SURVIVING = "surviving"
GLUED = "glued"
HALVING = "halving"
_KIND_ORDER = {INFINITY: 0, SURVIVING: 1, GLUED: 2, HALVING: 3}


@dataclass(frozen=True)
class Point:
    """A structural point label: block kind, orbit length, copy, phase.

    Glued points additionally carry which member of the swapped pair they
    sit on (group_element 0 or 1); no other kind carries one.  The
    distinguished fixed point has its own kind and is unique per system.
    """

    kind: str
    length: int
    copy: int
    phase: int
    group_element: int | None = None

    def __post_init__(self) -> None:
        if self.kind not in _KIND_ORDER:
            raise BadArgument(f"unknown point kind {self.kind!r}")
        if self.length < 1 or self.copy < 1 or not 0 <= self.phase < self.length:
            raise BadArgument(
                f"bad block coordinates: length={self.length} "
                f"copy={self.copy} phase={self.phase}"
            )
        if self.kind == GLUED:
            if self.group_element not in (0, 1):
                raise BadArgument("glued points carry group element 0 or 1")
        elif self.group_element is not None:
            raise BadArgument(f"{self.kind} points carry no group element")
        if self.kind == HALVING and self.length % 2 != 0:
            raise BadArgument("halving orbits have even length")
        if self.kind == INFINITY and (self.length != 1 or self.phase != 0):
            raise BadArgument("the infinity point is a fixed point")

    def sort_key(self) -> tuple[int, int, int, int, int]:
        return (
            _KIND_ORDER[self.kind],
            self.length,
            self.copy,
            self.group_element or 0,
            self.phase,
        )


def cycle_decomposition(elements: Iterable, mapping: Mapping) -> list[tuple]:
    """Cycles of a permutation, in first-encounter order of `elements`."""
    seen = set()
    cycles = []
    for start in elements:
        if start in seen:
            continue
        cycle = [start]
        seen.add(start)
        current = mapping[start]
        while current != start:
            cycle.append(current)
            seen.add(current)
            current = mapping[current]
        cycles.append(tuple(cycle))
    return cycles


class FiniteSystem:
    """A finite point set with a permutation `step` and involution `fold`.

    `step` advances one tick of the dynamics; `fold` is the involution,
    which must commute with `step`.  Instances are immutable after
    construction and all queries are read-only.
    """

    def __init__(self, points, step, fold, validate: bool = True):
        self.points: tuple[Point, ...] = tuple(sorted(points, key=Point.sort_key))
        self.step: dict[Point, Point] = dict(step)
        self.fold: dict[Point, Point] = dict(fold)
        self._point_set = frozenset(self.points)
        if validate:
            self.validate()
        self.horizon = max(
            (len(c) for c in cycle_decomposition(self.points, self.step)),
            default=0,
        )

    @property
    def elements(self) -> tuple:
        return self.points

    def validate(self) -> None:
        """Check permutation, involution, and commutation structure."""
        pts = self._point_set
        if len(self.points) != len(pts):
            raise InvalidSystem("duplicate points")
        for name, mapping in (("step", self.step), ("fold", self.fold)):
            if set(mapping) != pts or set(mapping.values()) != pts:
                raise InvalidSystem(f"{name} is not a bijection on the point set")
        for x in self.points:
            if self.fold[self.fold[x]] != x:
                raise InvalidSystem(f"fold is not an involution at {x}")
            if self.step[self.fold[x]] != self.fold[self.step[x]]:
                raise InvalidSystem(f"fold does not commute with step at {x}")
        infinities = [p for p in self.points if p.kind == INFINITY]
        if len(infinities) > 1:
            raise InvalidSystem("more than one infinity point")
        if infinities and self.step[infinities[0]] != infinities[0]:
            raise InvalidSystem("the infinity point must be fixed by step")

    def distance(self, x: Point, y: Point) -> Fraction:
        """The exact metric: 1/length to infinity, else 1/min(lengths).

        Both `step` and `fold` preserve block lengths and the infinity
        point, so they are isometries for this metric.
        """
        if x not in self._point_set or y not in self._point_set:
            raise BadArgument("both points must belong to this system")
        if x == y:
            return Fraction(0)
        if y.kind == INFINITY:
            return Fraction(1, x.length)
        if x.kind == INFINITY:
            return Fraction(1, y.length)
        return Fraction(1, min(x.length, y.length))


class QuotientSystem:
    """The fold of a finite system: classes {x, fold(x)} with the induced map."""

    def __init__(self, classes, step, projection):
        self.classes: tuple[frozenset, ...] = tuple(classes)
        self.step: dict[frozenset, frozenset] = dict(step)
        self.projection: dict[Point, frozenset] = dict(projection)
        self.horizon = max(
            (len(c) for c in cycle_decomposition(self.classes, self.step)),
            default=0,
        )

    @property
    def elements(self) -> tuple:
        return self.classes


def _add_cycle_block(step, fold, points_out, kind, length, copy, fold_rule):
    """Install one n-cycle block and its involution action.

    fold_rule is 'identity' (surviving), 'half-turn' (halving, length is
    the full even length), or None for glued blocks, which are handled
    pairwise by the caller.
    """
    block = [Point(kind, length, copy, phase) for phase in range(length)]
    for phase, point in enumerate(block):
        step[point] = block[(phase + 1) % length]
        if fold_rule == "identity":
            fold[point] = point
        else:
            fold[point] = block[(phase + length // 2) % length]
    points_out.extend(block)
    return block


def _add_glued_pair(step, fold, points_out, length, copy):
    sides = []
    for element in (0, 1):
        side = [
            Point(GLUED, length, copy, phase, group_element=element)
            for phase in range(length)
        ]
        for phase, point in enumerate(side):
            step[point] = side[(phase + 1) % length]
        sides.append(side)
        points_out.extend(side)
    for a, b in zip(*sides):
        fold[a] = b
        fold[b] = a


def build_system(dec: BehaviorDecomposition) -> FiniteSystem:
    """Realize a behavior decomposition as an explicit finite system.

    The point count is sum(n * (s_n + 2*g_n)) + sum(2n * h_n).  The
    distinguished infinity point is the first surviving fixed point.
    """
    if dec.surviving.horizon < 1 or dec.surviving[1] < 1:
        raise EmptyFixedPoint("construction needs a surviving fixed point")
    step: dict[Point, Point] = {}
    fold: dict[Point, Point] = {}
    points: list[Point] = []
    for n in range(1, dec.horizon + 1):
        for copy in range(1, dec.surviving[n] + 1):
            if n == 1 and copy == 1:
                # the distinguished fixed point, stored under its own kind
                block = [Point(INFINITY, 1, 1, 0)]
                step[block[0]] = block[0]
                fold[block[0]] = block[0]
                points.extend(block)
            else:
                _add_cycle_block(step, fold, points, SURVIVING, n, copy, "identity")
        for copy in range(1, dec.glued_pairs[n] + 1):
            _add_glued_pair(step, fold, points, n, copy)
        for copy in range(1, dec.halving[n] + 1):
            _add_cycle_block(step, fold, points, HALVING, 2 * n, copy, "half-turn")
    return FiniteSystem(points, step, fold)


def count_orbits(system) -> CountSequence:
    """Closed-orbit counts by length, straight from cycle decomposition."""
    lengths = [len(c) for c in cycle_decomposition(system.elements, system.step)]
    horizon = max(lengths, default=0)
    out = [0] * horizon
    for n in lengths:
        out[n - 1] += 1
    return CountSequence(tuple(out))


def classify_orbits(system: FiniteSystem) -> RawBehaviorCounts:
    """Classify every orbit by how the involution moves it.

    The classification re-derives behavior from the maps alone, so it
    works on any valid system, not just freshly built ones: an orbit
    survives when the involution fixes it pointwise, halves when the
    involution preserves it as a set (necessarily acting as the half
    rotation), and glues when it lands on a different orbit.  Returned
    glued counts are raw (orbits, not pairs).
    """
    cycles = cycle_decomposition(system.points, system.step)
    cycle_index: dict[Point, int] = {}
    for i, cycle in enumerate(cycles):
        for p in cycle:
            cycle_index[p] = i
    horizon = max((len(c) for c in cycles), default=0)
    surviving = [0] * horizon
    glued = [0] * horizon
    halving = [0] * horizon
    for i, cycle in enumerate(cycles):
        n = len(cycle)
        first = cycle[0]
        image = system.fold[first]
        if image == first:
            if any(system.fold[p] != p for p in cycle):
                raise InvariantBreach(f"involution fixes {first} but not its orbit")
            surviving[n - 1] += 1
        elif cycle_index[image] == i:
            if n % 2 != 0:
                raise InvariantBreach(f"odd orbit of {first} preserved but moved")
            half = cycle[n // 2]
            if image != half or any(
                system.fold[cycle[k]] != cycle[(k + n // 2) % n] for k in range(n)
            ):
                raise InvariantBreach(
                    f"involution on the orbit of {first} is not the half turn"
                )
            halving[n - 1] += 1
        else:
            partner = cycles[cycle_index[image]]
            if len(partner) != n or any(
                cycle_index[system.fold[p]] != cycle_index[image] for p in cycle
            ):
                raise InvariantBreach(
                    f"orbit of {first} glues inconsistently"
                )
            glued[n - 1] += 1
    return RawBehaviorCounts(
        CountSequence(tuple(surviving)),
        CountSequence(tuple(glued)),
        CountSequence(tuple(halving)),
    )


def quotient(system: FiniteSystem) -> QuotientSystem:
    """Fold the system: classes {x, fold(x)} with the induced step map.

    Well-definedness of the induced map is verified pointwise while it
    is assembled; a failure would mean the involution did not commute
    with the step map and is reported as an internal breach.
    """
    projection: dict[Point, frozenset] = {}
    classes: list[frozenset] = []
    for x in system.points:
        if x not in projection:
            cls = frozenset((x, system.fold[x]))
            projection[x] = cls
            projection[system.fold[x]] = cls
            classes.append(cls)
    step_bar: dict[frozenset, frozenset] = {}
    for x in system.points:
        source = projection[x]
        target = projection[system.step[x]]
        if source in step_bar:
            if step_bar[source] != target:
                raise IllDefined(
                    f"induced map inconsistent on class of {min(source, key=Point.sort_key)}"
                )
        else:
            step_bar[source] = target
    return QuotientSystem(classes, step_bar, projection)


def double_system(system) -> FiniteSystem:
    """Cross the system with a two-element set and swap the sheets.

    On the doubled space the step map advances the base point and flips
    the sheet, and the involution flips the sheet alone.  An input orbit
    of odd length n becomes a single halving orbit of length 2n (sheet
    parity only closes up after two laps); an input orbit of even length
    n becomes a glued pair of length-n orbits.  The points are labeled
    in those structural terms directly.  Folding the result recovers the
    input's orbit counts; the doubled system itself has no fixed points.

    Accepts a FiniteSystem or a QuotientSystem; only the cycle structure
    of the input matters.
    """
    cycles = cycle_decomposition(system.elements, system.step)
    step: dict[Point, Point] = {}
    fold: dict[Point, Point] = {}
    points: list[Point] = []
    copies: dict[tuple[str, int], int] = {}
    for cycle in sorted(cycles, key=len):
        n = len(cycle)
        if n % 2 == 1:
            copy = copies[HALVING, 2 * n] = copies.get((HALVING, 2 * n), 0) + 1
            _add_cycle_block(step, fold, points, HALVING, 2 * n, copy, "half-turn")
        else:
            copy = copies[GLUED, n] = copies.get((GLUED, n), 0) + 1
            _add_glued_pair(step, fold, points, n, copy)
    return FiniteSystem(points, step, fold)


def dump_system(system: FiniteSystem) -> str:
    """Line-oriented text dump: points, then both maps as index pairs."""
    index = {p: i for i, p in enumerate(system.points)}
    lines = [
        "orbitfold-system 1",
        f"horizon {system.horizon}",
        f"points {len(system.points)}",
    ]
    for p in system.points:
        group = "-" if p.group_element is None else ("e", "i")[p.group_element]
        lines.append(f"{p.kind} {p.length} {p.copy} {group} {p.phase}")
    for name, mapping in (("step", system.step), ("fold", system.fold)):
        lines.append(f"map {name}")
        for p in system.points:
            lines.append(f"{index[p]} {index[mapping[p]]}")
    lines.append("end")
    return "\n".join(lines) + "\n"


def _parse_point(fields: list[str], lineno: int) -> Point:
    if len(fields) != 5:
        raise ParseError(f"line {lineno}: expected 5 point fields")
    kind, length, copy, group, phase = fields
    try:
        element = {"-": None, "e": 0, "i": 1}[group]
    except KeyError:
        raise ParseError(f"line {lineno}: bad group element {group!r}") from None
    try:
        return Point(kind, int(length), int(copy), int(phase), element)
    except (ValueError, BadArgument) as exc:
        raise ParseError(f"line {lineno}: {exc}") from None


def parse_system(text: str) -> FiniteSystem:
    """Parse `dump_system` output back into a validated system."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    pos = 0

    def take(prefix: str) -> list[str]:
        nonlocal pos
        if pos >= len(lines):
            raise ParseError(f"unexpected end of input, wanted {prefix!r}")
        fields = lines[pos].split()
        if fields[: len(prefix.split())] != prefix.split():
            raise ParseError(f"line {pos + 1}: expected {prefix!r}")
        pos += 1
        return fields

    take("orbitfold-system 1")
    take("horizon")
    count = int(take("points")[1])
    points = []
    for _ in range(count):
        if pos >= len(lines):
            raise ParseError("point list ends early")
        points.append(_parse_point(lines[pos].split(), pos + 1))
        pos += 1
    maps = {}
    for name in ("step", "fold"):
        take(f"map {name}")
        mapping = {}
        for _ in range(count):
            if pos >= len(lines):
                raise ParseError(f"map {name} ends early")
            fields = lines[pos].split()
            try:
                i, j = int(fields[0]), int(fields[1])
                mapping[points[i]] = points[j]
            except (IndexError, ValueError) as exc:
                raise ParseError(f"line {pos + 1}: {exc}") from None
            pos += 1
        maps[name] = mapping
    take("end")
    # malformed text is a ParseError; well-formed text describing a bad
    # system surfaces as InvalidSystem from validation
    return FiniteSystem(points, maps["step"], maps["fold"])
