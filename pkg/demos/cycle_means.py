"""
Eigenvalues as maximum cycle means
==================================

In max-plus algebra an irreducible matrix has exactly one eigenvalue: the
largest average weight of a cycle.  Integer input keeps the whole computation
exact, so ``A V = lambda V`` can be checked with ``==``.
"""
from fractions import Fraction

from idempotent import MAX_PLUS, Matrix, eigenvalue, scc_blocks, spectral_radius
from idempotent.matrix import scalar_mul

ninf = float("-inf")
A = Matrix(MAX_PLUS, [
    [ninf, 3, ninf, 1],
    [ninf, ninf, 4, ninf],
    [-2, ninf, ninf, 2],
    [0, ninf, ninf, ninf],
])

res = eigenvalue(A)
# cycles: 0-1-2-0 has mean 5/3, 0-3-0 has mean 1/2, 0-1-2-3-0 has mean 9/4
print("lambda =", res.eigenvalue)
print("eigenvector:", [str(x) for x in res.eigenvector.col(0)])
assert A @ res.eigenvector == scalar_mul(res.eigenvalue, res.eigenvector)
assert res.eigenvalue == Fraction(9, 4)

# %%
# A reducible matrix splits into strongly connected blocks.  The spectral
# radius is the largest eigenvalue among them.
R = Matrix(MAX_PLUS, [
    [1, 5, ninf],
    [ninf, -1, 2],
    [ninf, 0, ninf],
])
print("blocks:", scc_blocks(R).blocks)
print("spectral radius:", spectral_radius(R))
