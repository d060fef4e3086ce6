"""
How far apart can the parameters be?
====================================

Total dominating identification is sandwiched by location-domination and
usual identification.  The gadgets below show that some of the bounds are
reached and that self-identifying and error-correcting codes can be much
larger.
"""
#############################################################################
from idcodes import CodeKind, parameter
from idcodes.families import complete, complete_minus_matching, corona, eid_gap, ld_gap, sid_gap, subdivided_star
from idcodes.graph import induced_delete

K = CodeKind

#############################################################################
# TID <= 2 ID - 2, with equality on a 1-corona of K_4 with one leaf removed.

G = induced_delete(corona(complete(4), 1), [7])
print("ID", parameter(G, K.ID), "TID", parameter(G, K.TID))

#############################################################################
# TID <= 2 TLD: odd complete graphs minus a maximal matching.

G = complete_minus_matching(7)
print("TLD", parameter(G, K.TLD), "TID", parameter(G, K.TID))

#############################################################################
# TLD <= 2 LD - 1: spiders with pendant paths.

for k in (1, 2, 3):
    T = subdivided_star(k)
    print(k, "LD", parameter(T, K.LD), "TLD", parameter(T, K.TLD))

#############################################################################
# Location-domination versus TID, on the subset gadget.  The k = 3 instance
# has 22 vertices and forced-vertex propagation closes it immediately.

for k in (2, 3):
    G = ld_gap(k)
    print(k, G.n, "LD", parameter(G, K.LD), "TID", parameter(G, K.TID))

#############################################################################
# TID stays at k while the self-identifying and error-correcting numbers
# need every vertex.

S, E = sid_gap(4), eid_gap(4)
print("sid_gap", S.n, parameter(S, K.TID), parameter(S, K.SID))
print("eid_gap", E.n, parameter(E, K.TID), parameter(E, K.EID))
