# The Catalan corner: 101-avoiding ascent sequences, series-parallel
# interval orders, SE-free matrices and 231-avoiding permutations.

from math import comb

from fishburn import bijections as bij
from fishburn import families as fam
from fishburn.enumeration import gen_asc
from fishburn.patterns import contains_231, is_rgf, seq_contains

for n in range(1, 9):
    casc = [a for a in gen_asc(n) if fam.is_casc(a)]
    print(n, len(casc), comb(2 * n, n) // (n + 1))

# avoiding 101 is the same as avoiding 0101, or 0101 and 1010, or both and
# being an RGF; length 4 shows the lone exception
for a in gen_asc(4):
    if not fam.is_casc(a):
        print(tuple(a), seq_contains(a, (0, 1, 0, 1)), is_rgf(a))

a = (0, 1, 2, 2, 0)
P = bij.asc_to_poset(a)
print("series-parallel:", fam.is_series_parallel(P))
print("SE-free:", fam.is_se_free(bij.asc_to_matrix(a)))
print("231-avoiding:", not contains_231(bij.asc_to_perm(a)))

# an SE pair, written 1-based
print(fam.se_pairs(((1, 1, 0), (0, 1, 1), (0, 0, 1))))
