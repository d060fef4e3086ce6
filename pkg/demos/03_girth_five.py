"""
Twin-free graphs of girth at least five
=======================================

Trees without twins need at most 3n/4 codewords, and the trees that need
exactly that many are 3-coronas.  We check this on all trees up to 12
vertices and then look for tight graphs that are not trees.
"""
#############################################################################
from idcodes import CodeKind, GraphStream, canonical_key, enumerate_trees, parameter
from idcodes.families import corona, cycle
from idcodes.graph import is_twin_free
from idcodes.harness import search_girth5_tight

#############################################################################
# Ratio TID/n over twin-free trees, per order.

for n in range(4, 13):
    ratios = [parameter(T, CodeKind.TID) / n for T in enumerate_trees(n) if is_twin_free(T)]
    print(n, len(ratios), max(ratios))

#############################################################################
# At n = 12 the single tight tree is the 3-corona of P_3.

tight = [T for T in enumerate_trees(12) if is_twin_free(T) and 4 * parameter(T, CodeKind.TID) == 36]
coronas = {canonical_key(corona(H, 3)) for H in enumerate_trees(3)}
print(len(tight), {canonical_key(T) for T in tight} == coronas)

#############################################################################
# Beyond trees, C_8 is tight as well.  Searching all connected girth >= 5
# graphs up to 9 vertices finds nothing else apart from 3-coronas.

stream = GraphStream.connected(range(1, 10), min_girth=5).filtered(twin_free=True)
report = search_girth5_tight(9, stream)
for g6, detail in report.findings:
    print(g6, detail)
print(parameter(cycle(8), CodeKind.TID))
