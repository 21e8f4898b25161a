"""The index along increasing paths, checked against the quadratic form."""

import random

from lagmat.acceptance import random_symmetric
from lagmat.index import crosscheck_quadratic, index_relative, path_sign_changes
from lagmat.matfile import figure
from lagmat.polytope import compute_edges
from lagmat.represent import Representation, extract_bases, representation_sign_table

r = figure("fig3_right")
m = extract_bases(r)
st = representation_sign_table(r)
for f in m.sorted_bases():
    rep = index_relative(m, st, f)
    print(f, "index", rep.index, "of max height", rep.max_height, "path", " -> ".join(rep.path_used.labels),
          "| all paths give", sorted(path_sign_changes(m, st, f)))

rng = random.Random(7)
s = random_symmetric(rng, 4)
r = Representation.symmetric(s)
m = extract_bases(r)
sk = compute_edges(m)
print("\nS =", s.tolist())
for f in m.sorted_bases()[:5]:
    c = crosscheck_quadratic(r, f, sk, m)
    print(f"  F={c['fundamental']}: matroid {c['matroid_index']}, kronecker {c['kronecker_index']}, "
          f"congruence {c['oracle_index']}, rank {c['rank']} = max height {c['max_height']}")
