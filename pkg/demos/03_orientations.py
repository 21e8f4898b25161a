"""Orientations: the two oriented versions of one matroid, and an even matroid."""

from lagmat.ground import parse_transversal
from lagmat.matfile import figure
from lagmat.orient import are_isomorphic, canonical_even_orientation, enumerate_orientations
from lagmat.represent import extract_bases, representation_sign_table

left, right = figure("fig3_left"), figure("fig3_right")
m = extract_bases(left)
f = parse_transversal("123", 3)

tables = enumerate_orientations(m)
print(len(tables), "orientations of", m.labels)
for name, r in (("left", left), ("right", right)):
    st = representation_sign_table(r)
    print(f"{name}: signs relative to 123:", st.row(f).to_dict()["signs"], "| enumerated:", st in tables)

sl, sr = representation_sign_table(left), representation_sign_table(right)
print("isomorphic unoriented:", are_isomorphic(m, None, m, None) is not None)
print("isomorphic oriented:  ", are_isomorphic(m, sl, m, sr) is not None)

m2 = extract_bases(figure("fig2_gf2"))
only = enumerate_orientations(m2)
print("even matroid", m2.labels, "has", len(only), "orientation; height rule:",
      only == [canonical_even_orientation(m2)])
