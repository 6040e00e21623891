"""Exact verification of tetrahedron and Yang-Baxter solutions from Leibniz 2-algebras and linear 2-racks."""
