"""Permutations, patterns, and substitution decomposition trees.

Walks through the value types everything else builds on: containment,
intervals and simplicity, substitution, and the canonical decomposition
tree of a permutation.
"""

from permspec import (
    Perm,
    contains,
    decompose,
    gen_substitute,
    indecomposability,
    is_simple,
    rebuild,
    substitute,
    tree_text,
)

sigma = Perm.from_text("3 1 6 4 5 2")
print(f"sigma = {sigma}")
print(f"  contains 2 4 3 1? {contains(sigma, Perm.from_text('2 4 3 1'))}"
      "   (e.g. the subsequence 3 6 4 2)")
print(f"  contains 2 4 1 3? {contains(sigma, Perm.from_text('2 4 1 3'))}")

print()
print("Simplicity means no interval of positions carries an interval of values:")
for text in ("3 1 4 2", "2 1", "1 3 2", "2 5 3 1 4"):
    p = Perm.from_text(text)
    print(f"  {text:12} simple? {is_simple(p)}")

print()
print("Substitution inflates each position by a block:")
inflated = substitute(Perm.from_text("1 3 2"),
                      [Perm.from_text("2 1"), Perm.from_text("1 3 2"),
                       Perm.from_text("1")])
print(f"  1 3 2 [21, 132, 1] = {inflated}")
print("Generalized substitution may leave slots empty, and then the result")
print("can avoid the skeleton entirely:")
shrunk = gen_substitute(Perm.from_text("1 3 2"),
                        [Perm.from_text("2 1"), None, Perm.from_text("1")])
print(f"  1 3 2 {{21, 0, 1}} = {shrunk}"
      f"   (avoids 132: {not contains(shrunk, Perm.from_text('1 3 2'))})")

print()
big = Perm.from_text("8 9 5 11 7 6 10 17 2 1 3 4 14 16 13 15 12")
tree = decompose(big)
print(f"Decomposition tree of {big}:")
print(f"  {tree_text(tree)}")
print(f"  rebuild returns the original: {rebuild(tree) == big}")

print()
print("Indecomposability flags (not 12[x,y], not 21[x,y]):")
for text in ("1", "1 2 3", "3 1 4 2"):
    flags = indecomposability(Perm.from_text(text))
    print(f"  {text:8} -> sum-indecomposable={flags[0]}, "
          f"skew-indecomposable={flags[1]}")
