"""
Curves of genus 3 with many points
==================================

Three copies of an ordinary curve of trace -m (or -m + 1), glued by a plane
quartic, meet the Serre-Weil bound q + 1 + 3m (or miss it by 3).
"""

from ascover import maximal

for n in range(1, 14, 2):
    rep = maximal.nq3(n)
    print("n=%2d q=%5d m=%3d m mod 8=%d  %-16s N_q(3)=%s  witness=%s"
          % (n, rep.q, rep.m, rep.m_mod8, rep.status, rep.nq3,
             rep.to_dict()["witness"]))

# Whether a defect-3 curve is optimal depends on the fractional part of
# 2 sqrt(q) against 1 - 4 cos^2(3 pi / 7), decided with exact brackets.
lo, hi = maximal.threshold_bracket()
print("threshold in (%.7f, %.7f)" % (float(lo), float(hi)))
print("q = 128 below threshold:", maximal.frac_below_threshold(128))
