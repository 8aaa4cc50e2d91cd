"""Certify the predicted tables against the literal graphs.

The oracle builds each graph vertex by vertex, takes a dense numeric
eigendecomposition, and greedily matches the numeric spectrum to the
predicted integers; trace identities are checked separately in exact
integers, so the float step can only confirm, never contaminate."""

import io

from pmspec import oracle, pm_spectrum_table, sym_spectrum_table

for n in (2, 3, 4, 5):
    report = oracle.certify(pm_spectrum_table(n), oracle.build_pm_graph(n))
    print(report.to_text())

for n in (2, 3, 4, 5, 6):
    report = oracle.certify(sym_spectrum_table(n), oracle.build_derangement_graph(n))
    print(report.to_text())

# edge-list dump of the smallest nontrivial case: the triangle on the three
# perfect matchings of K_4
buf = io.StringIO()
oracle.write_edge_list(oracle.build_pm_graph(2), buf)
print("matching graph of K_4 as an edge list:")
print(buf.getvalue())
