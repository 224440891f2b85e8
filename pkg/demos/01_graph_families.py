"""
Building the graph families
===========================

Every graph the engine plays on comes from a named family with a fixed
vertex layout, so strategies can address vertices by role.
"""

from graceful_game import FamilySpec, build_family, automorphisms, to_dot

# A wheel: ring vertices first, hub last.
w4 = build_family(FamilySpec("wheel", (4,)))
print(f"W4 has {w4.n_vertices} vertices and {w4.m} edges")
print("vertex roles:", w4.names)

# A web: hub, pendants, then the concentric rings from the outside in.
web = build_family(FamilySpec("web", (2, 4)))
print(f"\nW(2,4) has {web.n_vertices} vertices and {web.m} edges")
print("pendant 1 hangs off outer-ring vertex 5:", web.has_edge(1, 5))
print("inner-ring vertex 9 touches the hub:", web.has_edge(9, 0))

# Symmetries are computed exactly by backtracking (vertex cap 16).
print("\n|Aut(W4)| =", len(automorphisms(w4)))
q3 = build_family(FamilySpec("hypercube", (3,)))
print("|Aut(Q3)| =", len(automorphisms(q3)))

# DOT export for a quick look with graphviz.
print("\nDOT for the triangular prism:")
print(to_dot(build_family(FamilySpec("prism", (3,)))))
