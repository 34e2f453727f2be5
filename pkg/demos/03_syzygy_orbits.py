"""
Syzygy orbits of sms's
======================

Omega sends sms's to sms's.  On labels it acts through the permutation m1
of non-crossing partitions, alternating between the long and short types.
"""

from nakayama_sms import AlgebraParams, build_family, parse_partition
from nakayama_sms.families import FamilyLabel, omega_power_family, syzygy_family, syzygy_label
from nakayama_sms.noncrossing import m1, m2

p = parse_partition("{1,6,4|2,3|5}", 6)
print("p      =", p)
print("m1(p)  =", m1(p))
print("m2(p)  =", m2(p))
print("round trips:", m2(m1(p)) == p, m1(m2(p)) == p)

# Follow one label under Omega until it comes back, checking each step
# against the actual syzygies of the modules.
A = AlgebraParams(6, 12)
label = FamilyLabel("S", p, 2)
fam = build_family(A, *label)
orbit = [label]
while True:
    nxt = syzygy_label(orbit[-1])
    fam = syzygy_family(A, fam)
    assert fam == build_family(A, *nxt)
    if nxt == label:
        break
    orbit.append(nxt)
print(f"\nOmega-orbit of {label} over {A} has length {len(orbit)}")
for lab in orbit:
    print("  ", lab)

# Negative powers go through cosyzygies
start = build_family(A, *label)
back = omega_power_family(A, omega_power_family(A, start, 7), -7)
print("\nOmega^-7 Omega^7 is the identity:", back == start)
