# Turning a poset upside down, seen in each of the other three families.

from fishburn import bijections as bij
from fishburn import duality as dual
from fishburn.core import format_poset
from fishburn.families import is_rasc
from fishburn.enumeration import gen_rgf

a = (0, 0, 0, 1, 1, 0, 2, 2, 2, 2, 0, 3, 1, 1)
M = bij.asc_to_matrix(a)

# on matrices: reflect through the antidiagonal
F = dual.matrix_flip(M)
for left, right in zip(M, F):
    print("   ", *left, "   |   ", *right)

# on ascent sequences: the panorama, which needs no matrix at all
print("a    =", a)
print("a*   =", tuple(dual.asc_dual(a)))
print("pan  =", tuple(dual.panorama(a)))
print("views of a:", dual.views(a))

# on permutations: inverse of complement of reverse
perm = bij.asc_to_perm(a)
print("pi   =", tuple(perm))
print("pi*  =", tuple(dual.perm_dual(perm)))

# on posets it is just the dual order
P = bij.asc_to_poset((0, 0, 1, 2, 0))
print(format_poset(P), "->", format_poset(dual.poset_dual(P)))

# the panorama of any list of numbers is a restricted growth function
print(tuple(dual.panorama([3.5, -1, 2, 2, 7, 0])))

# but panoramas of restricted growth functions are not always self-modified,
# the first failure is at length 7
for n in range(1, 9):
    bad = [r for r in gen_rgf(n) if not is_rasc(dual.panorama(r))]
    print(n, len(bad), bad[:1])

# pan twice returns the input exactly on the self-modified sequences
r = (0, 1, 0, 2, 0, 1, 2)
print(r, "->", tuple(dual.panorama(r)), "->", tuple(dual.panorama(dual.panorama(r))))
