"""Bases of a represented Lagrangian matroid and the Maximality Property."""

from lagmat.ground import AdmissibleOrdering, parse_transversal
from lagmat.matfile import figure
from lagmat.matroid import BasisSystem, check_maximality, height, is_even, maximal_basis
from lagmat.represent import extract_bases

# symmetric left block, identity right block
r = figure("fig1")
m = extract_bases(r)
print("bases:", m.labels)
print("even:", is_even(m))

# one admissible ordering and its maximal basis
w = AdmissibleOrdering((2, 1, 3), (False, True, False))
print("ordering", w, "-> max basis", maximal_basis(m, w))
print("maximality over all 48 orderings:", check_maximality(m).holds)

# two antipodal vertices never form a matroid
bad = BasisSystem.from_labels(["123", "1*2*3*"], 3)
rep = check_maximality(bad)
print("antipodal pair:", rep.holds, "first failing ordering:", rep.witness)

f = parse_transversal("1*2*3*", 3)
for b in m.sorted_bases():
    print(f"  h({b}) = {height(b, f)}")
