"""Count the congruence classes of nontrivial proper orbits per dimension."""

from crorbits import moduli_space

for n in range(2, 7):
    comps = moduli_space(n)
    discrete = 0
    families = 0
    for comp in comps:
        count = 1 if comp.index_set is None else len(comp.index_set.elements())
        if comp.half_lines == 0:
            discrete += count
        else:
            families += count
    print(f"n={n}: {discrete} isolated classes, {families} continuous families")
    for comp in comps:
        idx = "-" if comp.index_set is None else comp.index_set.to_json()["type"]
        size = 1 if comp.index_set is None else len(comp.index_set.elements())
        print(f"   kind {comp.kind:>3}  index {idx:>5} ({size:3d} entries)  x [0,inf)^{comp.half_lines}")
