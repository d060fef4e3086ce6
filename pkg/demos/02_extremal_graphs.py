"""
Graphs that need almost every vertex
====================================

Which connected graphs need n-1 codewords for total dominating
identification?  We enumerate every connected graph up to 7 vertices and
compare with the two explicit families.
"""
#############################################################################
from collections import Counter

from idcodes import CodeKind, enumerate_connected, is_extremal_member, parameter, write_graph6
from idcodes.families import extremal_tid, family_A
from idcodes.graph import is_identifiable

#############################################################################
# Joins of A_k graphs, with or without a universal vertex, form the first
# family.  Their separating and TID numbers are both n-1.

for parts in [(2,), (1, 1), (3,), (2, 1)]:
    for universal in (False, True):
        G = family_A(parts, universal)
        print(parts, universal, G.n, parameter(G, CodeKind.SEP), parameter(G, CodeKind.TID))

#############################################################################
# The second family hangs a leaf on every vertex of a clique joined to a
# member of the first.  m = 2 with a single universal vertex is the bull.

bull = extremal_tid((), True, 2)
print(write_graph6(bull), parameter(bull, CodeKind.TID), is_extremal_member(bull))

#############################################################################
# Now the exhaustive check: count graphs needing at least n-1 codewords and
# see that each one is recognised as a family member.

tally = Counter()
for n in range(3, 8):
    for G in enumerate_connected(n):
        if not is_identifiable(G):
            continue
        t = parameter(G, CodeKind.TID)
        member, case = is_extremal_member(G)
        tally[n, t >= n - 1, member] += 1
        assert (t >= n - 1) == member
for key in sorted(tally):
    print(key, tally[key])
