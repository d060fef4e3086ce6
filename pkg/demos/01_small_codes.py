"""
Codes on small graphs
=====================

Build a few graphs, look at I-sets, validate hand-picked codes and let the
exact solver find optimal ones.
"""
#############################################################################
# A code is just a set of vertices.  The I-set of a vertex is the part of the
# code inside its closed neighbourhood.

from idcodes import CodeKind, is_valid, iset, minimum_code, violation_witness
from idcodes.families import a_k, cycle, path, star

C6 = cycle(6)
code = [0, 1, 2, 3]
for v in range(C6.n):
    print(v, iset(C6, code, v).to_list())

#############################################################################
# All six I-sets differ and every vertex has a codeword neighbour, so this is
# a total dominating identifying code.  The similar-looking {0,1,3,4} is not
# one, and the witness says which pair collides.

print(is_valid(C6, CodeKind.TID, code))
print(violation_witness(C6, CodeKind.TID, [0, 1, 3, 4]))

#############################################################################
# The solver returns a minimum code and a witness.  P_3 is the one connected
# graph where every vertex is needed.

for name, G in [("P3", path(3)), ("P4", path(4)), ("K1,4", star(5)), ("A3", a_k(3)), ("C8", cycle(8))]:
    result = minimum_code(G, CodeKind.TID)
    print(f"{name:5s} n={G.n}  TID={result.size}  witness={result.witness.to_list()}")

#############################################################################
# Infeasibility is an answer too: two closed twins can never be separated.

print(minimum_code(path(2), CodeKind.TID).to_dict())

#############################################################################
# One graph, every kind of code.  The sizes follow the implication lattice:
# a stronger code is never smaller.

G = cycle(7)
for kind in CodeKind:
    print(f"{kind.value:4s}", minimum_code(G, kind).size)
