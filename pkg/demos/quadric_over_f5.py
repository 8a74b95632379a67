"""The split quadric surface over F_5, exhaustively.

The quadric x0*x3 = x1*x2 in P^3 is doubly ruled: through every point pass
exactly two lines lying on it.  Two general points are joined by a chain of
two lines, through either of the two points where their rulings cross --
matching the symbolic count for degrees (2,) in P^3 at length 2.
"""

from chainlines import (
    ChainProblem,
    DefiningData,
    chain_count,
    chain_search,
    connectivity_report,
    enumerate_points,
    format_point,
    format_variety,
    line_points,
    lines_through,
    locus,
    split_quadric,
)

spec = split_quadric(5)
print("variety file:")
print(format_variety(spec))

points = sorted(enumerate_points(spec))
print(f"|X(F_5)| = {len(points)}  (split quadrics have (q+1)^2 points)")
print()

x, y = (1, 0, 0, 0), (0, 0, 0, 1)
print(f"lines on X through {format_point(x)}:")
for line in sorted(lines_through(spec, x), key=lambda ln: ln.basis):
    pts = ", ".join(format_point(p) for p in sorted(line_points(line, spec.field)))
    print(f"  span({format_point(line.basis[0])}, {format_point(line.basis[1])})"
          f" = {{{pts}}}")
print()

chain = chain_search(spec, x, y, 3)
print(f"shortest chain {format_point(x)} -> {format_point(y)}: "
      f"length {chain.length} via "
      + " -> ".join(format_point(p) for p in chain.points))
print()

print("reachable point counts:", {l: len(locus(spec, x, l)) for l in (1, 2, 3)})
print()

report = connectivity_report(spec, 2)
print("fraction of ordered pairs joined, by chain length:",
      {l: str(f) for l, f in report.fractions.items()})
print("lines through a point (histogram):", report.line_counts)
print()

symbolic = chain_count(ChainProblem(DefiningData((2,), 3), 2))
print(f"symbolic count of length-2 chains on a quadric surface: {symbolic}")
print("(the two middle points are the two crossings of opposite rulings)")
