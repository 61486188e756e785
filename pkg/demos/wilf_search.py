"""
Classifying all 2024 triples of 4-letter patterns
=================================================

There are C(24,3) = 2024 ways to pick three distinct 4-letter patterns.
Up to the eight symmetries (reverse, complement, inverse and their
compositions) they fall into 317 orbits.  Scanning every orbit's counting
sequence shows exactly five orbits match the weak sorting numbers -- the
five triples this package is about, and no others.
"""
from weaksort import wilf_search
from weaksort.perms import TRIPLES, canonical_form, format_perm
from weaksort.counting import triple_orbits

orbits = triple_orbits()
sizes = {}
for size in orbits.values():
    sizes[size] = sizes.get(size, 0) + 1
print(f"{sum(orbits.values())} triples fall into {len(orbits)} symmetry orbits")
print(f"orbit sizes: " + ", ".join(f"{c} of size {s}" for s, c in sorted(sizes.items())))
print()

target = (1, 1, 2, 6, 21, 79, 309, 1237, 5026)
print(f"searching for counting sequence {target} ...")
report = wilf_search(8, target)
print(f"matching orbits: {len(report.matches)}")
for rep in report.matches:
    names = [nm for nm, T in TRIPLES.items() if canonical_form(T) == rep]
    label = names[0] if names else "?"
    print(f"  {label}: " + "; ".join(format_perm(t) for t in rep))
