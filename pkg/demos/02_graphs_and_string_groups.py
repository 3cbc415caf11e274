"""From a labelled graph to an sggi, its type and the intersection property."""

from scg.corpus import corpus_dir
from scg.prgraph import PRGraph, find_motifs, to_generators
from scg.sggi import (
    check_ip_full,
    check_ip_recursive,
    independence,
    schlafli_type,
    validate_sggi,
)

g = PRGraph.read(corpus_dir() / "A1.graph")
print(g.to_text())

rho = to_generators(g)
for i, r in enumerate(rho):
    print(f"rho{i} = {r}")

for m in find_motifs(g):
    print(m.kind, sorted(m.labels), [v + 1 for v in m.vertices])

s = validate_sggi(rho)
print("order", s.order, "even", s.is_even, "transitive", s.is_transitive)
print("type", schlafli_type(s), "independent", independence(s))

# the recursive test only compares G_0 ∩ G_{r-1} with G_{0,r-1} after the subtuples pass
v = check_ip_recursive(s)
print("recursive:", v.status, v.witness.to_json() if v.witness else "")
print("full:", check_ip_full(s).status)

# words over the generators
a = s.word("r1 r2 r3")
alpha = s.word("a^7 (a^7)^r1", {"a": a})
print("a =", a, " alpha =", alpha)

cell = validate_sggi(to_generators(PRGraph.read(corpus_dir() / "ELEVEN_CELL.graph")))
print("eleven-cell:", cell.order, schlafli_type(cell), check_ip_full(cell).status)
