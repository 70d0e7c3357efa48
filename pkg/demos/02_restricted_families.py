# The restricted ("R") families: ascent sequences whose ascents always jump
# to a new maximum, matrices with positive diagonal, posets with a chain
# through every level and permutations avoiding 3-1bar-5-2-4bar.

from fishburn import bijections as bij
from fishburn import families as fam
from fishburn.enumeration import gen_asc, gen_matrices, gen_perms, gen_posets

n = 6
rasc = [a for a in gen_asc(n) if fam.is_rasc(a)]
print(f"{len(rasc)} self-modified ascent sequences of length {n}")

# the bijections carry one restricted family exactly onto the next
rmat = {M for M in gen_matrices(n) if fam.is_rmatrix(M)}
rperm = {p for p in gen_perms(n) if fam.is_rperm(p)}
print("matrices:", {bij.asc_to_matrix(a) for a in rasc} == rmat)
print("perms:   ", {bij.asc_to_perm(a) for a in rasc} == rperm)
print("posets:  ", sum(fam.is_rposet(P) for P in gen_posets(n)) == len(rasc))

# on this family the matrix can be written down column by column
a = (0, 0, 0, 1, 1, 0, 2, 2, 2, 2, 0, 3, 1, 1)
M = bij.asc_to_matrix(a)
for row in M:
    print("   ", *row)
print("direct reading:", bij.rmatrix_to_asc_direct(M) == a)
print("direct permutation:", tuple(bij.rasc_to_perm_direct(a)))

# outside the family the matrix picks up a zero on the diagonal exactly when
# some ascent stops short of the ascent count
for a in [(0, 1, 0, 1), (0, 1, 0, 2), (0, 0, 1, 2, 0, 1)]:
    d = bij.asc_to_matrix(a).diagonal
    print(a, "diagonal", d, "restricted" if fam.is_rasc(a) else "")
