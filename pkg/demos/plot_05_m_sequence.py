"""
The sequence m_n = floor(2^n sqrt 2)
====================================

``m_n`` is ``floor(2 sqrt q)`` for ``q = 2^(2n-1)``.  It doubles at each step,
plus one when the fractional part passed 1/2, so all residues mod 4 keep
coming back.
"""

from ascover import maximal

seq = maximal.m_sequence(64)
print([e.m_n for e in seq[:10]])
print("residues mod 4 for n <= 64:", maximal.residue_tallies(seq))

# The first few degrees where each residue class of m mod 8 occurs.
for r in range(8):
    ns = [n for n in range(1, 60, 2) if maximal.m_of(n) % 8 == r][:5]
    print("m = %d mod 8 at n =" % r, ns)
