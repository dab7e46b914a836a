"""
Checking the nesting axioms
===========================

A finite system is a table indexed by ``(A, alpha, B, beta, C)``.  The
axioms say the three ways of nesting two applications agree.  Here we check
a few reference systems and look at a failure.
"""

from tgs import check_all, modular_product_model, projection_model

# Z6 with the product of all five arguments: every nesting is the same product.
z6 = modular_product_model(6)
print(z6)
for report in check_all(z6):
    print(" ", report.axiom, "holds" if report else "fails")

# The whole table is a numpy array of shape (n, m, n, m, n).
print("table shape:", z6.table.shape, "dtype:", z6.table.dtype)
print("[1, g2, 1, g1, 1] =", z6(1, 2, 1, 1, 1))

# Returning the middle argument breaks T1 on any system with two states.
mid = projection_model(2, 1, "middle")
t1 = check_all(mid, cap=3)[0]
print("T1 on middle projection:", t1.violations, "violations")
for cx in t1.counterexamples:
    print("  args", cx.args, "lhs", cx.lhs, "rhs", cx.rhs)

# Counting violations is just a vectorised comparison; the density of
# failures tells how far a table is from a model.
print("fraction failing T1: %.3f" % (t1.violations / (mid.n ** 5 * mid.m ** 4)))
