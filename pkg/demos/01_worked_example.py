# One object, four disguises: an ascent sequence, its Fishburn matrix,
# its (2+2)-free poset and its pattern-avoiding permutation.

from fishburn import bijections as bij
from fishburn.cli import render_poset_dot
from fishburn.core import format_poset, poset_structure, render_active_sites

a = (0, 0, 1, 2, 0, 1)

# build the matrix one entry at a time and watch each step
trace = bij.BijectionTrace()
M = bij.asc_to_matrix(a, trace)
for step in trace.steps:
    print(f"step {step.k} ({step.case}):")
    for row in step.snapshot:
        print("   ", *row)

# the same sequence grows a poset; the case labels line up with the matrix ones
ptrace = bij.BijectionTrace()
P = bij.asc_to_poset(a, ptrace)
print("matrix cases:", trace.cases)
print("poset cases: ", ptrace.cases)
print("poset:", format_poset(P))

st = poset_structure(P)
print("levels:", [sorted(x + 1 for x in L) for L in st.levels])
print("ell =", st.ell, " ell* =", st.ell_star)

# the matrix can be read straight off the poset: levels by blocks
print("poset -> matrix agrees:", bij.poset_to_matrix(P) == M)

# permutations grow by inserting the next largest value at an active site
perm = bij.asc_to_perm(a)
print("permutation:", "".join(map(str, perm)))
print("active sites:", render_active_sites(perm))

# and everything comes back
assert bij.matrix_to_asc(M) == a
assert bij.poset_to_asc(P) == a
assert bij.perm_to_asc(perm) == a

print()
print(render_poset_dot(P))
