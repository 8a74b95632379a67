"""Counting chains of lines on a cubic threefold: the number 180.

At the boundary of the criterion the expected dimension of the chain system
is zero, so the conditions cut out finitely many chains and their number is
an intersection number.  For the cubic threefold in P^4 and length 3 the
conditions are: three classes h1, 2h1, 3h1 carving the cone of lines
through x, three classes h2, 2h2, 3h2 for the cone through y, and two mixed
classes 2h1+h2, h1+2h2 tying the intermediate points together.
"""

from chainlines import (
    ChainProblem,
    DefiningData,
    chain_count,
    condition_tally,
    counting_class,
    counting_factors,
    existence_class,
    expected_dimension,
    one,
    witness_exponents,
    witness_monomial,
)

problem = ChainProblem(DefiningData((3,), 4), 3)
print("cubic threefold in P^4, chains of length 3")
print("working space:", problem.space)
print("expected dimension:", expected_dimension(problem))
print()

tally = condition_tally(problem)
print(f"conditions: {tally.endpoint_x} on p^1, {tally.endpoint_y} on p^2, "
      f"{tally.mixed_per_pair} mixed; total {tally.total()}")

blocks = counting_factors(problem)
pure = one(problem.space)
for f in blocks.x_side + blocks.y_side:
    pure = pure * f
mixed = one(problem.space)
for f in blocks.mixed:
    mixed = mixed * f
print("pure endpoint block: ", pure)
print("mixed block:         ", mixed)
print("full counting class: ", counting_class(problem))
print("chains through two general points:", chain_count(problem))
print()

print("the coefficient-free existence class already certifies a chain:")
print("  ", existence_class(problem), "(nonzero)")
w = witness_monomial(problem)
print("  witness exponents", witness_exponents(problem),
      "-> surviving monomial", w.exponents, "fits:", w.fits)
print()

print("two more boundary cases:")
for degrees, n, l in (((2,), 3, 2), ((3,), 5, 2)):
    p = ChainProblem(DefiningData(degrees, n), l)
    print(f"  degrees={degrees} in P^{n}, length {l}: "
          f"class {counting_class(p)}, count {chain_count(p)}")
print()
print("note: counts are intersection numbers; chains are counted with")
print("multiplicity and assume generic defining polynomials.")
