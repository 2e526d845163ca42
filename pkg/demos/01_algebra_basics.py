#!/usr/bin/env python3
# Tour of the algebra core: the six generators, products, grades,
# involutions, and series exponentials.

import numpy as np

from cl33 import (
    GENERATORS,
    Multivector,
    embed_covector,
    embed_vector,
    exponential,
    grade_involution,
    grade_project,
    outer_product,
    reversion,
    vector_contract,
)

ep1, ep2, ep3, em1, em2, em3 = GENERATORS

# The three plus generators square to +1, the three minus generators to -1,
# and distinct generators anticommute.
print("ep1 * ep1 =", ep1 * ep1)
print("em1 * em1 =", em1 * em1)
print("ep1*ep2 + ep2*ep1 =", ep1 * ep2 + ep2 * ep1)

# Euclidean 3-vectors embed as the half-sum of their two sector copies.
# Embedded vectors are null: their square vanishes identically.
v = embed_vector([3.0, -2.0, 5.0])
print("\nv =", v)
print("v * v =", v * v)

# The covector partner uses the half-difference; together they carry the
# metric: v v* + v* v = |v|^2.
vs = embed_covector([3.0, -2.0, 5.0])
print("v v* + v* v =", v * vs + vs * v, " (|v|^2 =", 3.0**2 + 2.0**2 + 5.0**2, ")")

# Grade projection slices a multivector into its k-vector parts.
a = 1.0 + 2.0 * ep1 + ep1 * ep2
for k in (0, 1, 2):
    print(f"grade {k} of (1 + 2 e1p + e1p e2p):", grade_project(a, k))

# Reversion flips the factor order of each blade; it reverses products.
b = ep1 * em2
print("\nreversion(e1p e2m) =", reversion(b))
print("grade involution(e1p) =", grade_involution(ep1))

# Contraction lowers grade by one; with the half-sum embedding the basis
# covector pairs with its vector at one half.
e1 = embed_vector([1, 0, 0])
e1s = embed_covector([1, 0, 0])
print("\ne1* . e1 =", vector_contract(e1s, e1))
print("e1p . (e1p ^ e2p) =", vector_contract(ep1, outer_product(ep1, ep2)))

# The exponential series recovers closed forms: a null generator terminates
# after the linear term, a unipotent one sums to cosh/sinh.
t = 0.8
d = exponential((t / 2.0) * (em1 * ep1))
print("\nexp(t e1m e1p / 2) =", d)
print("cosh(t/2) =", np.cosh(t / 2), " sinh(t/2) =", np.sinh(t / 2))
print("exp of a null vector:", exponential(0.5 * v), "= 1 + v/2")

# Immutable values: every operation returns a fresh multivector.
zero = Multivector()
print("\nzero multivector:", zero)
