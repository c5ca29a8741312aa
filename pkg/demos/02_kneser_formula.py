"""
The product formula for generalized Kneser graphs
=================================================

KG(n,k,l) has the k-subsets of an n-set as vertices and edges between
subsets meeting in at most l elements.  Its chomp value factors into a
binomial parity times a binomial residue mod 3, so positions far past
any search are solved instantly.
"""

from graphchomp import engine, families
from graphchomp.closedforms import kneser_nim
from graphchomp.families import KneserParams

# the Petersen graph is KG(5,2,0)
p = KneserParams(5, 2, 0)
petersen = families.kneser_graph(p)
print("Petersen:", petersen.vertex_count, "vertices,",
      len(petersen.edges()), "edges")
formula = kneser_nim(p)
searched = engine.grundy(petersen.state())
print("formula:", formula.nim, f"({formula.provenance})")
print("engine :", searched)
assert formula.nim == searched == 2

# formula vs engine over a small sweep
print("\n n  k  l   formula engine")
for n in range(5):
    for k in range(1, n + 1):
        for l in range(k):
            q = KneserParams(n, k, l)
            f = kneser_nim(q).nim
            e = engine.grundy(families.kneser_graph(q).state())
            mark = "" if f == e else "  <-- MISMATCH"
            print(f" {n}  {k}  {l}      {f}      {e}{mark}")
            assert f == e

# no search ever happens for the formula: this graph has 184756 vertices
big = KneserParams(20, 10, 3)
print("\nKG(20,10,3):", kneser_nim(big).nim,
      f"({kneser_nim(big).provenance})")
