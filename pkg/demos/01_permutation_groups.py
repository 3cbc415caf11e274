"""Permutations, stabilizer chains and a few classic groups of degree 11.

Points are written 1-based in cycle notation; products act left to right.
"""

from scg.perm import (
    PermGroup,
    diagonal_isomorphic,
    intersect,
    is_primitive,
    parse_cycles,
)

N = 11
cycle = parse_cycles("(1,2,3,4,5,6,7,8,9,10,11)", N)

# the Mathieu group M11 from its two standard generators
m11 = PermGroup([cycle, parse_cycles("(3,7,11,8)(4,10,5,6)", N)])
print("M11 order:", m11.order)
print("base orbit lengths:", [len(o) for o in m11.base_orbits()])

a11 = PermGroup([cycle, parse_cycles("(1,2,3)", N)])
print("A11 order:", a11.order, "primitive:", is_primitive(a11)[0])

p = parse_cycles("(1,2)(3,4)", N)
print(p, "in M11:", p in m11, " in A11:", p in a11)

# intersections are found by a pruned search of the smaller group
inter = intersect(m11, a11)
print("|M11 ∩ A11| =", inter.order)

# a dihedral group on a square keeps the diagonals together
d4 = PermGroup([parse_cycles("(1,2,3,4)", 4), parse_cycles("(1,3)", 4)])
ok, blocks = is_primitive(d4)
print("D4 primitive:", ok, "blocks:", [sorted(x + 1 for x in b) for b in blocks])

# two generator tuples define isomorphic groups when the pairing extends
s3 = (parse_cycles("(1,2)", 3), parse_cycles("(2,3)", 3))
print("S3 tuple isomorphic to its reverse:", diagonal_isomorphic(s3, tuple(reversed(s3))))
