"""
Building simple-minded systems from non-crossing partitions
============================================================

Walks through the two family types over a symmetric algebra, then pulls
them back to a non-symmetric one.
"""

from nakayama_sms import AlgebraParams, build_family, is_sms, parse_partition
from nakayama_sms.algebra import format_symbol
from nakayama_sms.families import extract_partition, multiplicity_indices

# A_2^6: two simples, projectives of Loewy length 7, d = 3
A = AlgebraParams(2, 6)
print(A, "symmetric:", A.is_symmetric, "d =", A.d)

# Every non-crossing partition p of {1,2} and vertex k gives a long family
# and a short family.  Members are written as M^i_{j,k}: top i, socle j,
# top multiplicity k+1.
for text in ("{1|2}", "{1,2}"):
    p = parse_partition(text, 2)
    for kind in ("L", "S"):
        for k in (1, 2):
            fam = build_family(A, kind, p, k)
            members = ", ".join(format_symbol(A, M) for M in fam)
            print(f"  {kind}[{text}, k={k}] = {{{members}}}")

# The tops run once over the simples, and so do the socles; reading the
# socle of each top back gives the partition again.
fam = build_family(A, "S", parse_partition("{1,2}", 2), 1)
p, cycles = extract_partition(A, fam)
print("\nrecovered partition:", p, "cycles:", cycles)
print("multiplicity indices:", multiplicity_indices(A, fam))

# A_4^6 is not symmetric (gcd 2).  Families are built over A_2^6 and every
# member is replaced by its Nakayama orbit.
B = AlgebraParams(4, 6)
lifted = build_family(B, "L", parse_partition("{1|2}", 2), 1)
print(f"\n{B}: e = {B.e}")
for M in lifted:
    print("  ", M)
print("is_sms:", is_sms(B, lifted))
