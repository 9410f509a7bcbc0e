"""Walk through the cover construction on hand-picked colorings.

Every 2-edge-coloring of a cocktail party graph (complete graph on an
even vertex set minus a perfect matching; partner of v is v ^ 1) admits
a cover of V by two sets, each monochromatic-2-reachable: any two of its
vertices are joined by an edge of the set's color or by a 2-path of that
color whose middle may sit anywhere.  The solver is constructive and
certifies which structural branch produced the cover; this script shows
one coloring per kind of branch.

Run:  python3 demos/01_solve_walkthrough.py
"""

from partycover import (
    check_cover,
    format_cover,
    from_compact,
    solve,
    branch_key,
    to_compact,
    vertex_list,
)
from partycover.extremal import build_sharp_example
from partycover.graphs import all_red


def show(g, note):
    cov = solve(g)
    print(f"--- {to_compact(g)}  ({note})")
    print(f"branch: {branch_key(cov.certificate)}")
    print(format_cover(cov), end="")
    reason = check_cover(g, cov)
    print(f"re-verified: {'ok' if reason is None else reason}")
    print()


# branch 1: one color already has diameter <= 2 on all of V
show(all_red(6), "every edge red; red alone covers everything")

# branch 2: a partner pair with no common red neighbor -> its two blue
# stars cover V (each other vertex is blue-adjacent to one of the pair)
show(build_sharp_example(8), "evens/odds split; pair (0,1) critical in red")

# branch 3 needs n >= 8: a red-critical edge and a blue-critical edge
# sharing a vertex.  (A c-critical pair has color-c distance > 2; when it
# is an edge, the edge carries the other color.)  The first colorings
# reaching the single-star cases and the 5-part case:
for compact, case in [
    ("8:6f0300", "shared-vertex case i: red star + blue star"),
    ("8:6b2310", "shared-vertex case iii: two blue stars"),
    ("8:1b5310", "shared-vertex rich case: two cyclic 5-part sets"),
]:
    show(from_compact(compact), case)

# branch 4: the red-critical and blue-critical edges touch disjoint
# vertex sets; dropping each set from V leaves two valid parts
show(from_compact("6:743"), "critical edges of the two colors are disjoint")

# the 5-part certificate in detail: consecutive parts completely joined
g = from_compact("8:1b5310")
cert = solve(g).certificate
print("5-part certificate of 8:1b5310")
for label, parts in (("A", cert.parts_a), ("B", cert.parts_b)):
    pretty = " | ".join(str(vertex_list(p)) for p in parts)
    print(f"  {label} parts (cyclic): {pretty}")
print(f"  pivot vertices: x={cert.witness.x}, y={cert.witness.y}, "
      f"x'={cert.witness.x_prime}, y'={cert.witness.y_prime}")
