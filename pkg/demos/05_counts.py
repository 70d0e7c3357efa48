# Count every family in every tier and check they agree.

from fishburn.enumeration import count_table
from fishburn.oracle import verify_sweep

table = count_table(7)
print(table.to_text())
print("consistent across families:", table.consistent())

for tier in ("classical", "R", "C"):
    print(tier, [table.get(n, "Asc", tier) for n in range(1, 8)])

# the exhaustive sweep behind the acceptance suite, for one size
report = verify_sweep(5)
print(report.to_text())
