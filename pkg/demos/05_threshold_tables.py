"""
Outcome tables for threshold graphs
===================================

K_n^{i} is a clique on u_1..u_n plus one attachment vertex adjacent to
u_1..u_i; a second superscript adds a second attachment.  The outcome
tables know who wins for the proven cells; the rest stay open and the
engine fills in small instances.
"""

from graphchomp import engine, families
from graphchomp.closedforms import threshold_outcome
from graphchomp.engine import Outcome
from graphchomp.families import ThresholdSpec

print("single attachment, table vs engine   (. = no table entry)")
print("  n\\i " + "".join(f"{i:>4}" for i in range(7)))
for n in range(1, 7):
    cells = []
    for i in range(n + 1):
        spec = ThresholdSpec(n, (i,))
        table = threshold_outcome(spec)
        got = Outcome.B if engine.grundy(
            families.threshold_graph(spec).state()) == 0 else Outcome.A
        mark = table.value if table is not Outcome.UNKNOWN else "."
        cells.append(f"{mark}/{got.value}")
        if table is not Outcome.UNKNOWN:
            assert table is got, (n, i)
    print(f"  {n}   " + "".join(f"{c:>4}" for c in cells))

# two attachments: the i <= j cells for small n
print("\ntwo attachments on K_3:")
for i in range(4):
    for j in range(i, 4):
        spec = ThresholdSpec(3, (i, j))
        table = threshold_outcome(spec)
        got = Outcome.B if engine.grundy(
            families.threshold_graph(spec).state()) == 0 else Outcome.A
        entry = table.value if table is not Outcome.UNKNOWN else "open"
        print(f"  K_3^({i},{j}): table {entry:>4}, engine {got.value}")
