"""Multiplying one generator by an involution on two new points."""

from scg.perm import parse_cycles
from scg.sggi import check_ip_full, sesqui_extension, validate_sggi

simplex = validate_sggi(tuple(parse_cycles(c, 4) for c in ("(1,2)", "(2,3)", "(3,4)")))
for k in range(simplex.rank):
    e = sesqui_extension(simplex, k)
    grew = "doubled" if e.order == 2 * simplex.order else "same order"
    print(f"k={k}: {' '.join(map(str, e.rho))}  order {e.order} ({grew}), IP {check_ip_full(e).status}")

# an even tuple extended at its only odd generator keeps the group order
square = validate_sggi(tuple(parse_cycles(c, 4) for c in ("(1,2)(3,4)", "(2,3)")))
e = sesqui_extension(square, 1)
print("dihedral:", square.order, "->", e.order)
