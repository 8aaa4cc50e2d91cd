"""A short tour of the exact spectra.

The perfect matching derangement graph lives on the perfect matchings of
K_{2n} (adjacent iff edge-disjoint); the permutation derangement graph lives
on S_n (adjacent iff differing in every position).  Both have integer
spectra indexed by the partitions of n.  This script prints the small
tables, shows the sign pattern, and demonstrates the two independent
recurrence paths agreeing on a nontrivial partition.
"""

from pmspec import Partition, enumerate_partitions, eta, eta_alt, pm_spectrum_table, sym_spectrum_table
from pmspec.exact import odd_double_factorial, pm_degree

for n in (2, 3, 4):
    print(pm_spectrum_table(n).to_text())
    print(sym_spectrum_table(n).to_text())

# the top eigenvalue is the degree, and multiplicities exhaust the vertex set
n = 6
table = pm_spectrum_table(n)
print(f"n={n}: degree d_n = {pm_degree(n)}, top eigenvalue = {table.eigenvalues()[0]}")
print(f"vertices (2n-1)!! = {odd_double_factorial(n)}, sum of multiplicities = {table.multiplicity_total()}")

# sign pattern: eta has sign (-1)^(n - first part)
for lam in enumerate_partitions(5):
    v = eta(lam)
    print(f"  eta({lam.to_text()}) = {v.eta:>6}   normalized f = {v.f}")

# dual recurrence paths, computed through disjoint caches
lam = Partition((4, 3, 2, 1))
print(f"\neta({lam.to_text()}): strip-recurrence {eta(lam).eta}, lowering-recurrence {eta_alt(lam)}")
