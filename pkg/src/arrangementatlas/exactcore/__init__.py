"""
Exact arithmetic kernels.

Everything downstream (cone feasibility, circuits, relation spaces, graded eliminations)
goes through these helpers so no floating point ever reaches a verdict.
"""
