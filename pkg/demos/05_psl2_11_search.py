"""String C-group representations of PSL(2,11) on 11 points, and M11's rank 3 check.

Conjugacy reduction searches one first generator per class and expands the
hits by conjugation; it returns the same tuples much faster.
"""

from scg.search import (
    SearchSpec,
    enumerate_tuples,
    graph_classes_up_to_duality,
    m11_rank3_check,
    named_group,
)

G = named_group("psl2_11")
tuples = []
for rank in (3, 4, 5):
    res = enumerate_tuples(SearchSpec(G, rank, conjugacy_reduction=True))
    tuples += res.tuples
    print(f"rank {rank}: {len(res.tuples)} tuples, {len(res)} classes up to isomorphism and duality")
    for rep in res:
        types = [(rep[i - 1] * rep[i]).order() for i in range(1, len(rep))]
        print("   ", " ".join(map(str, rep)), "type", types)

print("graphs up to duality:", graph_classes_up_to_duality(tuples))
print("M11 generating triples with commuting ends:", m11_rank3_check())
