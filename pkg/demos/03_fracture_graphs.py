"""Crossing edges, splits and 2-fracture graphs."""

from scg.corpus import load
from scg.fracture import analyze, check_double_edge_split, check_split_path_property
from scg.prgraph import to_generators
from scg.sggi import validate_sggi

for entry_id in ["A1", "E11", "F1", "PSL1", "NOPSL_A"]:
    g = load(entry_id).graph
    s = validate_sggi(to_generators(g))
    r = analyze(s, g)
    crossing = [len(c) for c in r.crossing]
    print(f"{entry_id}: crossing edges per label {crossing}")
    if not r.has_fracture:
        print("   some G_i is transitive, so there is no fracture graph")
        continue
    for label, (u, v) in r.splits:
        ok = check_split_path_property(g, (label, (u, v)))
        print(f"   {label}-split {{{u + 1},{v + 1}}}, path property {ok}")
    print("   2-fracture graph:", r.has_two_fracture, " double-edge check:", check_double_edge_split(s, g, r))
