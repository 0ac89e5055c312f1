"""
Which triples of elliptic curves are quotients?
===============================================

For ordinary curves with invariants (j_i, sgn_i): a hyperelliptic cover exists
iff ``1/j1 + 1/j2 + 1/j3 = 0``, and a plane-quartic cover exists iff ``T_a`` or
``T_b`` has the trace of ``sgn1 + sgn2 + sgn3``.
"""

import itertools
from collections import Counter

from ascover import covers, make_field
from ascover.quotients import verify_isogeny

k = make_field(3)
pairs = [(j, s) for j in k.nonzero() for s in (0, k.r0)]

tally = Counter()
for combo in itertools.product(pairs, repeat=3):
    t = covers.TripleInvariants(k, tuple(p[0] for p in combo),
                                tuple(p[1] for p in combo))
    h = covers.exists_hyp_cover(t)
    q = covers.exists_nonhyp_cover(t)
    tally[(h is not None, q is not None)] += 1
print("ordered triples over F_8 by (hyperelliptic, quartic):", dict(tally))

# One explicit witness, fed back through the point-count audit.
t = covers.TripleInvariants(k, (1, 2, 3), (0, 0, 0))
w = covers.exists_nonhyp_cover(t)
print("Ta =", k.hex(t.Ta), " Tb =", k.hex(t.Tb), " witness:", w.to_dict())
print(verify_isogeny(w.curve).to_json())

# Supersingular triples: search the SS family directly.
k7 = make_field(7)
w = covers.exists_ss_cover(k7, (-16, 0, 16))
print("SS witness over F_128:", w.to_dict(), verify_isogeny(w.curve).ok)
