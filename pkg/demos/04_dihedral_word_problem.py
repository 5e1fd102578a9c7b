"""
The word problem in dihedral Artin groups
=========================================

For a single edge with label n the Artin group is generated by a, b
with the alternating relation of length n. Rewriting in the defining
generators of the decomposition (x, y) gives a normal form that solves
the word problem exactly.
"""

from artin import (
    Word,
    alternating,
    as_defining_generators,
    delta_conjugates_generators,
    garside,
    is_central,
    membership_a_z,
    normal_form,
    root_bound_search,
    words_equal,
)

W = Word.from_text

# The defining relation itself reduces to the identity.
n = 3
relator = alternating("a", "b", n) * alternating("b", "a", n).inverse()
print(f"label {n}: normal form of the relator:", normal_form(n, relator))

# Some classics: the braid relation makes aba and bab the same element.
print("aba = bab?", words_equal(3, W("a b a"), W("b a b")))
print("ab = ba?", words_equal(3, W("a b"), W("b a")))

# Normal forms are words in x, y with a central power out front.
for text in ("a", "b", "a b", "a b a b^-1"):
    print(f"nf({text!r}) = {normal_form(3, W(text))}")

# They convert back to the defining generators faithfully.
nf = normal_form(3, W("a b a b^-1"))
back = as_defining_generators(nf)
print("back in a, b:", back.to_text(),
      "| equal to original:", words_equal(3, back, W("a b a b^-1")))

# The Garside element and the centre. Delta is central exactly when the
# label is even; for odd labels Delta swaps the generators.
for n in (3, 4, 5, 6):
    data = garside(n)
    print(f"label {n}: Delta = {data.delta.to_text()},",
          f"z = {data.z.to_text()},",
          f"Delta central: {is_central(n, data.delta)}")
print("Delta conjugation swaps a and b for n=5:", delta_conjugates_generators(5))

# For even labels the subgroup <a, z> is where roots live. Membership
# is decidable from the normal form.
print("membership of a^2 z in <a, z> (n=4):",
      membership_a_z(4, W("a^2") * garside(4).z))
print("membership of ab (n=4):", membership_a_z(4, W("a b")))

# r = ab is a root of z of degree m = n/2, and the bound says primitive
# elements of <a, z> admit no roots of degree larger than m. A brute
# force search over short words confirms there are no counterexamples.
print("r^2 = z for n=4:", membership_a_z(4, W("a b") ** 2))
print("counterexamples up to length 5, degrees to 4:",
      root_bound_search(4, 5, 4))
