"""Polytope skeletons, face types, oriented short edges and exports."""

import json

from lagmat.matfile import figure
from lagmat.polytope import check_balance, hull_edges, orient_skeleton, polytope, to_dict, to_dot
from lagmat.represent import extract_bases, representation_sign_table

for name in ("fig1", "fig2_gf2", "lsquare"):
    m = extract_bases(figure(name))
    sk = polytope(m)
    print(name, len(sk.vertices), "vertices,", len(sk.edges), "edges, faces:", [f.kind for f in sk.faces])
    lp = {frozenset(p) for p in hull_edges(list(m.bases))}
    print("  edges agree with the LP hull:", lp == {frozenset((e.a, e.b)) for e in sk.edges})

r = figure("fig3_right")
m = extract_bases(r)
st = representation_sign_table(r)
os = orient_skeleton(m, st)
print("balanced:", check_balance(os) == [])
print(json.dumps(to_dict(os.base, os, st.row(m.sorted_bases()[2])), indent=1)[:400], "...")
print(to_dot(os.base, os))
