"""Tour of the formal group law catalog.

Builds each law to a small truncation order, prints the leading
coefficients, and runs the axiom checker.
"""

from genusforge.fgl import CATALOG, catalog, check_axioms, logarithm

ORDER = 6

for name in CATALOG:
    law = catalog(name, ORDER)
    print(f"== {name} (order {ORDER}, {law.construction})")
    for (i, j), c in law.F.items():
        if i + j <= 3:
            print(f"   z0^{i} z1^{j}: {c}")
    report = check_axioms(law)
    print(f"   axioms: {report.to_obj()}")
    log = logarithm(law)
    print(f"   log: {log!r}")
    print()

print("A broken law, for contrast:")
law = catalog("broken_demo", ORDER)
print(f"   axioms: {check_axioms(law).to_obj()}")
