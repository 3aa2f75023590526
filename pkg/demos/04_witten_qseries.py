"""The Witten q-deformation of the A-hat series.

The product is even in x, restricts to the A-hat series at q = 0,
and its logarithm packages Eisenstein-type divisor sums: the normalized
G_2k(q) are 2 zeta~(2k) + (4k/(2k)!) sum sigma_{2k-1}(n) q^n.
"""

from genusforge.genus import witten_series

w = witten_series(10, 8)

print("evenness:", w.evenness_check().status)
print("q = 0 slice is the A-hat series:", w.q0_check().status)
print()

print("x^2 row of log H (q-expansion):")
for m in range(5):
    print(f"   q^{m}: {w.log_coefficient(2, m)}")
print()

for k in (1, 2, 3):
    print(f"G_{2 * k}(q) = {w.eisenstein_coefficient(k)}")
    print(f"   divisor-sum formula: {w.divisor_check(k).status}")
