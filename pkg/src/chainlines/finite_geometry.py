"""Brute-force projective geometry over a prime field.

This is the cross-checking engine: given explicit homogeneous polynomials
over F_p it enumerates the points of the variety, finds the lines through a
point that lie on it, searches for chains of lines between points, and
reports connectivity statistics.  Everything is exhaustive and exact.

Caveat, stated once here and repeated where it matters: the symbolic theory
lives over the complex numbers.  Counts and reachability over F_p are
evidence, not proof -- a chain can exist over C without any F_p-rational
witness, and F_p-reachability sets can differ from the characteristic-zero
chain loci (which are defined through general points and Zariski closures).
The bundled test varieties (split quadric, coordinate hyperplane, Fermat
cubic surface) are ones where the discrepancy does not bite.

Line containment is decided symbolically: G restricted to a parametrized
line is a binary form of degree d, and the line lies on the variety iff all
d+1 coefficients vanish in F_p.  Checking values at the q+1 rational points
of the line would be wrong for p <= d, where a nonzero form can vanish
everywhere.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

ENUMERATION_BUDGET = 10**8  # hard cap on p**N per enumeration

Point = tuple[int, ...]


class BudgetExceededError(ValueError):
    """Raised when an enumeration would exceed the p**N budget."""


class VarietyParseError(ValueError):
    """Malformed variety file; the message carries the line number."""

    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class PrimeField:
    """F_p for a prime p below 2^31; primality is checked at construction."""

    p: int

    def __post_init__(self):
        if not 2 <= self.p < 2**31:
            raise ValueError(f"field characteristic out of range [2, 2^31): {self.p}")
        if not _is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    def inv(self, a: int) -> int:
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("cannot invert 0")
        return pow(a, self.p - 2, self.p)


@dataclass(frozen=True)
class HomogPoly:
    """A homogeneous polynomial as (coefficient, exponent-tuple) terms."""

    degree: int
    terms: tuple[tuple[int, Point], ...]

    def __post_init__(self):
        if self.degree < 1:
            raise ValueError(f"degree must be >= 1: {self.degree}")
        if not self.terms:
            raise ValueError("a polynomial needs at least one term")
        seen = set()
        for coeff, exps in self.terms:
            if coeff == 0:
                raise ValueError("zero coefficients must not be stored")
            if any(e < 0 for e in exps):
                raise ValueError(f"negative exponent in {exps}")
            if sum(exps) != self.degree:
                raise ValueError(
                    f"term {exps} has degree {sum(exps)}, expected {self.degree}"
                )
            if exps in seen:
                raise ValueError(f"duplicate monomial {exps}")
            seen.add(exps)

    @property
    def nvars(self) -> int:
        return len(self.terms[0][1])


@dataclass(frozen=True)
class VarietySpec:
    """Explicit defining polynomials of a variety in P^N over F_p."""

    field: PrimeField
    ambient: int
    polys: tuple[HomogPoly, ...]

    def __post_init__(self):
        if self.ambient < 2:
            raise ValueError(f"ambient dimension must be >= 2: {self.ambient}")
        if not self.polys:
            raise ValueError("at least one defining polynomial is required")
        for poly in self.polys:
            if poly.nvars != self.ambient + 1:
                raise ValueError(
                    f"polynomial has {poly.nvars} variables, expected {self.ambient + 1}"
                )
            for coeff, _ in poly.terms:
                if not 1 <= coeff < self.field.p:
                    raise ValueError(
                        f"coefficient {coeff} not reduced mod {self.field.p}"
                    )


@dataclass(frozen=True)
class Line:
    """A projective line as its reduced-row-echelon basis; canonical.

    Two Line values are equal iff they are the same projective line.
    """

    basis: tuple[Point, Point]


@dataclass(frozen=True)
class Chain:
    """A concrete chain witness: points q^0..q^l and the l joining lines."""

    points: tuple[Point, ...]
    lines: tuple[Line, ...]

    def __post_init__(self):
        if len(self.points) != len(self.lines) + 1:
            raise ValueError("a chain of l lines passes through l+1 points")
        for a, b in zip(self.points, self.points[1:]):
            if a == b:
                raise ValueError("consecutive chain points must be distinct")

    @property
    def length(self) -> int:
        return len(self.lines)


# -- points ----------------------------------------------------------------

def normalize_point(coords, field: PrimeField) -> Point:
    """Canonical homogeneous coordinates: first nonzero entry scaled to 1."""
    p = field.p
    reduced = [c % p for c in coords]
    for c in reduced:
        if c:
            inv = field.inv(c)
            return tuple((x * inv) % p for x in reduced)
    raise ValueError("the zero vector is not a projective point")


def format_point(pt: Point) -> str:
    return ":".join(str(c) for c in pt)


def parse_point(text: str, field: PrimeField) -> Point:
    """Parse ``a0:a1:...:aN`` (entries reduced mod p, then normalized)."""
    try:
        coords = [int(tok) for tok in text.split(":")]
    except ValueError:
        raise ValueError(f"malformed point {text!r}; expected a0:a1:...:aN") from None
    return normalize_point(coords, field)


def eval_poly(poly: HomogPoly, pt: Point, field: PrimeField) -> int:
    """Value of the polynomial at the point, in F_p."""
    if len(pt) != poly.nvars:
        raise ValueError(
            f"point has {len(pt)} coordinates, polynomial has {poly.nvars} variables"
        )
    p = field.p
    total = 0
    for coeff, exps in poly.terms:
        term = coeff
        for x, e in zip(pt, exps):
            if e:
                term = term * pow(x, e, p) % p
        total = (total + term) % p
    return total


def on_variety(spec: VarietySpec, pt: Point) -> bool:
    return all(eval_poly(poly, pt, spec.field) == 0 for poly in spec.polys)


def _check_budget(field: PrimeField, n: int) -> None:
    if field.p**n > ENUMERATION_BUDGET:
        raise BudgetExceededError(
            f"enumerating P^{n}(F_{field.p}) exceeds the {ENUMERATION_BUDGET} budget"
        )


def _projective_reps(field: PrimeField, n: int):
    """All canonical points of P^n(F_p): lead coordinate 1, zeros before it."""
    p = field.p
    for lead in range(n + 1):
        for tail in itertools.product(range(p), repeat=n - lead):
            yield (0,) * lead + (1,) + tail


def enumerate_points(spec: VarietySpec) -> set[Point]:
    """All F_p-points of the variety, canonical and deduplicated."""
    _check_budget(spec.field, spec.ambient)
    return {
        pt for pt in _projective_reps(spec.field, spec.ambient) if on_variety(spec, pt)
    }


# -- lines -------------------------------------------------------------------

def line_through(a: Point, b: Point, field: PrimeField) -> Line:
    """The line spanned by two distinct points, in canonical RREF form."""
    if a == b:
        raise ValueError("two distinct points are needed to span a line")
    p = field.p
    rows = [list(a), list(b)]
    rank = 0
    for col in range(len(a)):
        pivot = next((i for i in range(rank, 2) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = field.inv(rows[rank][col])
        rows[rank] = [x * inv % p for x in rows[rank]]
        for i in range(2):
            if i != rank and rows[i][col]:
                f = rows[i][col]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[rank])]
        rank += 1
        if rank == 2:
            break
    if rank < 2:
        raise ValueError("points do not span a line")
    return Line((tuple(rows[0]), tuple(rows[1])))


def line_points(line: Line, field: PrimeField) -> list[Point]:
    """The q+1 rational points of the line, canonical."""
    p = field.p
    a, b = line.basis
    pts = [normalize_point(b, field)]
    for t in range(p):
        pts.append(normalize_point([(x + t * y) % p for x, y in zip(a, b)], field))
    return pts


def _mul_linear(coeffs: list[int], ai: int, bi: int, p: int) -> list[int]:
    # multiply a binary form (coefficients of u^(k-j) v^j) by (ai*u + bi*v)
    out = [0] * (len(coeffs) + 1)
    for j, c in enumerate(coeffs):
        if c:
            out[j] = (out[j] + c * ai) % p
            out[j + 1] = (out[j + 1] + c * bi) % p
    return out


def line_in_variety(spec: VarietySpec, line: Line) -> bool:
    """Scheme-theoretic containment, by symbolic restriction to the line.

    Substitutes the parametrization u*a + v*b into each polynomial and checks
    that all d+1 coefficients of the resulting binary form vanish.  Never
    decided by sampling points: for p <= d that would accept lines that only
    look contained.
    """
    p = spec.field.p
    a, b = line.basis
    for poly in spec.polys:
        coeffs = [0] * (poly.degree + 1)
        for c, exps in poly.terms:
            form = [c]
            for ai, bi, e in zip(a, b, exps):
                for _ in range(e):
                    form = _mul_linear(form, ai, bi, p)
            for j, v in enumerate(form):
                coeffs[j] = (coeffs[j] + v) % p
        if any(coeffs):
            return False
    return True


def lines_through(spec: VarietySpec, x: Point) -> set[Line]:
    """All lines through x that lie on the variety (over F_p).

    Works by sweeping every point of P^N(F_p), canonicalizing the joining
    line, deduplicating, and keeping the contained ones.
    """
    _check_budget(spec.field, spec.ambient)
    if not on_variety(spec, x):
        raise ValueError(f"point {format_point(x)} is not on the variety")
    found: set[Line] = set()
    seen: set[Line] = set()
    for y in _projective_reps(spec.field, spec.ambient):
        if y == x:
            continue
        line = line_through(x, y, spec.field)
        if line in seen:
            continue
        seen.add(line)
        if line_in_variety(spec, line):
            found.add(line)
    return found


# -- chains of lines ---------------------------------------------------------

class ChainGraph:
    """Reachability graph on the F_p-points of a variety.

    Vertices are the points of X(F_p); two distinct points are adjacent iff
    their joining line lies on X.  Neighbor lists and line-containment
    results are cached; results are deterministic (points kept sorted) and
    identical to uncached recomputation.  The caches are not synchronized:
    concurrent workers should each hold their own instance.
    """

    def __init__(self, spec: VarietySpec):
        self.spec = spec
        self.points: list[Point] = sorted(enumerate_points(spec))
        self._neighbors: dict[Point, list[Point]] = {}
        self._contained: dict[Line, bool] = {}

    def line_ok(self, line: Line) -> bool:
        cached = self._contained.get(line)
        if cached is None:
            cached = self._contained[line] = line_in_variety(self.spec, line)
        return cached

    def neighbors(self, a: Point) -> list[Point]:
        cached = self._neighbors.get(a)
        if cached is None:
            field = self.spec.field
            cached = [
                b
                for b in self.points
                if b != a and self.line_ok(line_through(a, b, field))
            ]
            self._neighbors[a] = cached
        return cached

    def contained_lines_through(self, a: Point) -> set[Line]:
        field = self.spec.field
        return {line_through(a, b, field) for b in self.neighbors(a)}

    def distances(self, start: Point, max_depth: int | None = None) -> dict[Point, int]:
        """BFS distance map from start, capped at max_depth if given."""
        dist = {start: 0}
        frontier = [start]
        depth = 0
        while frontier and (max_depth is None or depth < max_depth):
            depth += 1
            nxt = []
            for a in frontier:
                for b in self.neighbors(a):
                    if b not in dist:
                        dist[b] = depth
                        nxt.append(b)
            frontier = nxt
        return dist

    def shortest_chain(self, x: Point, y: Point, max_length: int) -> Chain | None:
        if x == y:
            return Chain((x,), ())
        parent: dict[Point, Point] = {x: x}
        frontier = [x]
        depth = 0
        while frontier and depth < max_length:
            depth += 1
            nxt = []
            for a in frontier:
                for b in self.neighbors(a):
                    if b not in parent:
                        parent[b] = a
                        if b == y:
                            return self._backtrack(parent, x, y)
                        nxt.append(b)
            frontier = nxt
        return None

    def _backtrack(self, parent: dict[Point, Point], x: Point, y: Point) -> Chain:
        path = [y]
        while path[-1] != x:
            path.append(parent[path[-1]])
        path.reverse()
        field = self.spec.field
        lines = tuple(line_through(a, b, field) for a, b in zip(path, path[1:]))
        return Chain(tuple(path), lines)


def chain_search(
    spec: VarietySpec, x: Point, y: Point, max_length: int
) -> Chain | None:
    """Shortest chain of at most max_length lines on X from x to y, if any.

    x == y yields the empty chain.  Returning None means no F_p-rational
    chain of that length exists; it does not refute existence over C.
    """
    if max_length < 1:
        raise ValueError(f"max_length must be >= 1: {max_length}")
    for pt in (x, y):
        if not on_variety(spec, pt):
            raise ValueError(f"point {format_point(pt)} is not on the variety")
    if x == y:
        return Chain((x,), ())
    return ChainGraph(spec).shortest_chain(x, y, max_length)


def locus(spec: VarietySpec, x: Point, length: int) -> set[Point]:
    """F_p-points reachable from x by at most `length` line-steps.

    Finite-field stand-in for the chain locus: full graph reachability
    rather than the characteristic-zero definition through general points
    and closures, so it can under- or over-shoot the true locus.
    """
    if length < 1:
        raise ValueError(f"length must be >= 1: {length}")
    if not on_variety(spec, x):
        raise ValueError(f"point {format_point(x)} is not on the variety")
    return set(ChainGraph(spec).distances(x, max_depth=length))


@dataclass(frozen=True)
class ConnectivityReport:
    """Connectivity statistics of the chain graph of a variety."""

    points: int
    # fraction of ordered point pairs joined by a chain of length <= l
    fractions: dict[int, Fraction]
    # histogram: number of contained lines through a point -> point count
    line_counts: dict[int, int]


def connectivity_report(spec: VarietySpec, max_length: int) -> ConnectivityReport:
    """Pair-connectivity fractions for l = 1..max_length plus a line census."""
    if max_length < 1:
        raise ValueError(f"max_length must be >= 1: {max_length}")
    graph = ChainGraph(spec)
    n = len(graph.points)
    reachable = {l: 0 for l in range(1, max_length + 1)}
    line_counts: dict[int, int] = {}
    for x in graph.points:
        dist = graph.distances(x, max_depth=max_length)
        for l in range(1, max_length + 1):
            reachable[l] += sum(1 for d in dist.values() if d <= l)
        k = len(graph.contained_lines_through(x))
        line_counts[k] = line_counts.get(k, 0) + 1
    fractions = (
        {l: Fraction(reachable[l], n * n) for l in reachable} if n else {}
    )
    return ConnectivityReport(points=n, fractions=fractions, line_counts=line_counts)


# -- variety files -------------------------------------------------------------

def parse_variety(text: str) -> VarietySpec:
    """Parse the line-oriented variety format.

    ::

        field <p>
        ambient <N>
        poly <d> : <c> <e0> ... <eN> ; <c> <e0> ... <eN> ; ...

    Lines starting with ``#`` are comments; blank lines are skipped.
    """
    lines = [
        (no, stripped)
        for no, raw in enumerate(text.splitlines(), start=1)
        if (stripped := raw.strip()) and not stripped.startswith("#")
    ]
    if len(lines) < 3:
        lineno = lines[-1][0] if lines else 1
        raise VarietyParseError(lineno, "expected field, ambient and poly lines")

    def _keyword_int(entry, keyword):
        no, content = entry
        tokens = content.split()
        if len(tokens) != 2 or tokens[0] != keyword:
            raise VarietyParseError(no, f"expected '{keyword} <int>', got {content!r}")
        try:
            return int(tokens[1])
        except ValueError:
            raise VarietyParseError(no, f"{keyword} value {tokens[1]!r} is not an integer") from None

    p = _keyword_int(lines[0], "field")
    try:
        field = PrimeField(p)
    except ValueError as exc:
        raise VarietyParseError(lines[0][0], str(exc)) from None
    ambient = _keyword_int(lines[1], "ambient")
    if ambient < 2:
        raise VarietyParseError(lines[1][0], f"ambient dimension must be >= 2: {ambient}")

    polys = []
    for no, content in lines[2:]:
        head, sep, rest = content.partition(":")
        tokens = head.split()
        if not sep or len(tokens) != 2 or tokens[0] != "poly":
            raise VarietyParseError(no, f"expected 'poly <d> : ...', got {content!r}")
        try:
            degree = int(tokens[1])
        except ValueError:
            raise VarietyParseError(no, f"degree {tokens[1]!r} is not an integer") from None
        if degree < 1:
            raise VarietyParseError(no, f"degree must be >= 1: {degree}")
        terms = []
        seen = set()
        for group in rest.split(";"):
            try:
                numbers = [int(tok) for tok in group.split()]
            except ValueError:
                raise VarietyParseError(no, f"non-integer token in term {group!r}") from None
            if not numbers:
                raise VarietyParseError(no, "empty term")
            if len(numbers) != ambient + 2:
                raise VarietyParseError(
                    no,
                    f"term needs a coefficient and {ambient + 1} exponents, "
                    f"got {len(numbers)} numbers",
                )
            coeff, exps = numbers[0] % p, tuple(numbers[1:])
            if any(e < 0 for e in exps):
                raise VarietyParseError(no, f"negative exponent in term {group!r}")
            if sum(exps) != degree:
                raise VarietyParseError(
                    no, f"term {group.strip()!r} has degree {sum(exps)}, declared {degree}"
                )
            if exps in seen:
                raise VarietyParseError(no, f"duplicate monomial {exps}")
            seen.add(exps)
            if coeff:
                terms.append((coeff, exps))
        if not terms:
            raise VarietyParseError(no, f"polynomial vanishes modulo {p}")
        polys.append(HomogPoly(degree, tuple(terms)))
    return VarietySpec(field, ambient, tuple(polys))


def format_variety(spec: VarietySpec) -> str:
    """Render a spec in the file format; parse_variety gives it back verbatim."""
    out = [f"field {spec.field.p}", f"ambient {spec.ambient}"]
    for poly in spec.polys:
        groups = [
            f"{coeff} " + " ".join(str(e) for e in exps) for coeff, exps in poly.terms
        ]
        out.append(f"poly {poly.degree} : " + " ; ".join(groups))
    return "\n".join(out) + "\n"


def load_variety(path) -> VarietySpec:
    return parse_variety(Path(path).read_text())


# -- stock varieties -----------------------------------------------------------

def split_quadric(p: int) -> VarietySpec:
    """x0*x3 - x1*x2 = 0 in P^3: doubly ruled, (q+1)^2 rational points."""
    field = PrimeField(p)
    poly = HomogPoly(2, ((1, (1, 0, 0, 1)), (p - 1, (0, 1, 1, 0))))
    return VarietySpec(field, 3, (poly,))


def fermat_cubic(p: int) -> VarietySpec:
    """x0^3 + x1^3 + x2^3 + x3^3 = 0 in P^3: a cubic surface."""
    field = PrimeField(p)
    exps = [(3, 0, 0, 0), (0, 3, 0, 0), (0, 0, 3, 0), (0, 0, 0, 3)]
    poly = HomogPoly(3, tuple((1, e) for e in exps))
    return VarietySpec(field, 3, (poly,))


def coordinate_hyperplane(p: int, ambient: int = 3) -> VarietySpec:
    """x0 = 0 in P^ambient: a projective subspace, line-connected."""
    field = PrimeField(p)
    exps = tuple(1 if i == 0 else 0 for i in range(ambient + 1))
    return VarietySpec(field, ambient, (HomogPoly(1, ((1, exps),)),))
