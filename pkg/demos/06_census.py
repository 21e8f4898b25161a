"""Small-case census: every Lagrangian matroid up to n = 3, with structure checks."""

from lagmat.census import check_axioms_vs_balance, check_index_paths, check_round_trips, census

for n in (1, 2, 3):
    print(census(n))

for check in (check_axioms_vs_balance, check_round_trips, check_index_paths):
    res = check(3)
    print(("ok  " if res.passed else "FAIL"), res.name, "-", res.summary())
