# Count semirings of small order, then classify every congruence-simple one
# with an absorbing element and no nilpotents.
import time

from finsemiring import conjecture_scan, enumerate_semirings
from finsemiring.enumeration import SearchConstraints

for n in (1, 2, 3, 4):
    t = time.perf_counter()
    total = len(enumerate_semirings(n))
    absorbing = len(enumerate_semirings(n, SearchConstraints(require_mult_absorbing=True)))
    print(f"order {n}: {total} semirings, {absorbing} with an absorbing element ({time.perf_counter() - t:.2f}s)")

scan = conjecture_scan(4)
for n, items in scan.instances.items():
    for S, v in items:
        print(n, v.conjecture_status, list(v.case_labels))
print("counterexamples:", len(scan.counterexamples))
