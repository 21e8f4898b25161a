"""Exact inertia of symmetric matrices: congruence and Kronecker's method."""

from lagmat.exactlin import congruence_diagonalize, kronecker_index, leading_minors, matrix, regular_arrangement

for rows in ([[0, 1], [1, 0]], [[1, 1, 1]] * 3, [[-1, -1, -1], [-1, 0, 0], [-1, 0, 0]], [["1/2", 3], [3, "-2/7"]]):
    s = matrix(rows)
    perm = regular_arrangement(s)
    p = congruence_diagonalize(s)
    print(s.tolist())
    print("  arrangement", perm, "leading minors", [str(x) for x in leading_minors(s.permuted(perm), p.rank)])
    print("  rank", p.rank, "index", p.index, "signature", p.signature,
          "| kronecker agrees:", kronecker_index(s) == p)
