"""Certified covers of the vertex set by two monochromatic 2-reachable parts.

``solve`` always succeeds: every 2-edge-coloring of a cocktail party
graph admits a cover of V by sets A and B, each 2-reachable in a single
color, and the construction emits a certificate naming which structural
branch produced it.  ``check_cover``/``verify_cover`` re-validate a cover
from scratch, sharing only the reachability primitives with the solver.

Branches, tried in order:

1.  one color alone already has diameter <= 2 on all of V;
2.  some partner pair is critical in a color: its two stars in the
    other color cover V;
3.  a critical edge of color 1 and one of color 2 share a vertex: a
    local case analysis around the shared vertex yields two stars or,
    in the richest case, two cyclically-joined 5-part sets;
4.  otherwise the critical edges of the two colors touch disjoint
    vertex sets, and the two complements cover V.

Internal assertions that the mathematics guarantees (branch 3's endpoint
claim, the vertex partition, the two neighborhood observations, branch
4's disjointness) raise InternalInconsistencyError carrying the compact
form of the offending coloring instead of failing silently.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .graphs import (
    BLUE,
    COLORS,
    RED,
    ColoredCocktail,
    GraphFormatError,
    flip,
    to_compact,
    vertex_list,
    vertex_mask,
)
from .reach import (
    critical_pairs,
    is_2reachable_set,
    is_diam2_subset,
    iter_critical_edges,
    mono_diam_le2,
    star,
)


class InternalInconsistencyError(RuntimeError):
    """A step the construction's correctness argument guarantees has failed.

    Carries the compact form of the coloring so the failure can be
    replayed verbatim.
    """

    def __init__(self, message: str, g: ColoredCocktail):
        self.graph_compact = to_compact(g)
        super().__init__(f"{message} [coloring {self.graph_compact}]")


@dataclass(frozen=True)
class WholeVertexSet:
    """V itself has diameter <= 2 in this color; the second part is empty."""

    color: int


@dataclass(frozen=True)
class TwoStars:
    """Stars of a partner pair that is critical in the other color."""

    color: int
    center1: int
    center2: int


@dataclass(frozen=True)
class LemmaWitness:
    """The vertices the shared-vertex case analysis revolves around.

    x is the shared vertex of the two critical edges, y the far end of
    the color-1-critical one, q the far end of the color-2-critical one;
    q is forced to equal y_prime, the partner of y.
    """

    x: int
    y: int
    x_prime: int
    y_prime: int
    q: int


@dataclass(frozen=True)
class LemmaStars:
    """Branch-3 outcome where both parts are single stars (cases i-vi)."""

    case: str
    color_a: int
    center_a: int
    color_b: int
    center_b: int
    witness: LemmaWitness


@dataclass(frozen=True)
class LemmaC5Plus:
    """Branch-3 outcome with two 5-part cyclic blowup sets.

    Each part tuple lists vertex masks in cyclic order; consecutive
    parts are completely joined in the part set's color, every part is
    nonempty, so the whole set has diameter <= 2 in that color.
    """

    parts_a: tuple[int, ...]
    parts_b: tuple[int, ...]
    witness: LemmaWitness


@dataclass(frozen=True)
class CriticalComplement:
    """A = V minus the color-1-critical edge ends, B likewise for color 2."""

    p: int
    q: int


@dataclass(frozen=True)
class Diam2Witness:
    """A cover whose parts satisfy the stronger in-set diameter-2 property."""

    a: int
    b: int


Certificate = Union[WholeVertexSet, TwoStars, LemmaStars, LemmaC5Plus,
                    CriticalComplement, Diam2Witness]


@dataclass(frozen=True)
class Cover:
    """Two vertex masks with colors; a.union(b) is claimed to be V."""

    n: int
    a: int
    color_a: int
    b: int
    color_b: int
    certificate: Certificate | None = None


#: Every branch the solver can take, in trial order; census keys.
BRANCH_KEYS = (
    "whole-1",
    "whole-2",
    "two-stars-1",
    "two-stars-2",
    "lemma-i",
    "lemma-ii",
    "lemma-iii",
    "lemma-iv",
    "lemma-v",
    "lemma-vi",
    "lemma-c5plus",
    "critical-complement",
)


def branch_key(cert: Certificate) -> str:
    """Census key of the solver branch that produced a certificate."""
    if isinstance(cert, WholeVertexSet):
        return f"whole-{cert.color}"
    if isinstance(cert, TwoStars):
        return f"two-stars-{cert.color}"
    if isinstance(cert, LemmaStars):
        return f"lemma-{cert.case}"
    if isinstance(cert, LemmaC5Plus):
        return "lemma-c5plus"
    if isinstance(cert, CriticalComplement):
        return "critical-complement"
    raise ValueError(f"not a solver certificate: {cert!r}")


def solve(g: ColoredCocktail) -> Cover:
    """Cover V by two monochromatic 2-reachable sets, with certificate."""
    n = g.n
    full = (1 << n) - 1

    for c in COLORS:
        if mono_diam_le2(g, c):
            return Cover(n, full, c, 0, c, WholeVertexSet(c))

    # A partner pair with no common c-neighbor is critical in c; every
    # other vertex then meets one of the pair in the other color.
    for c in COLORS:
        adj = g.adj(c)
        for u in range(0, n, 2):
            if not adj[u] & adj[u + 1]:
                sc = flip(c)
                return Cover(n, star(g, sc, u), sc, star(g, sc, u + 1), sc,
                             TwoStars(sc, u, u + 1))

    blue_crit = list(iter_critical_edges(g, BLUE))
    if blue_crit:
        for e in iter_critical_edges(g, RED):
            for f in blue_crit:
                if e[0] in f or e[1] in f:
                    return _shared_vertex_cover(g, e, f)

    p = 0
    for u, v in iter_critical_edges(g, RED):
        p |= (1 << u) | (1 << v)
    q = 0
    for u, v in iter_critical_edges(g, BLUE):
        q |= (1 << u) | (1 << v)
    if p & q:
        raise InternalInconsistencyError(
            "critical edge vertex sets of the two colors must be disjoint "
            "when no pair of critical edges shares a vertex", g)
    return Cover(n, full & ~p, RED, full & ~q, BLUE, CriticalComplement(p, q))


def apply_lemma(g: ColoredCocktail, e: "CriticalPair",
                f: "CriticalPair") -> Cover:
    """Shared-vertex case analysis on a color-1-critical edge e and a
    color-2-critical edge f.  Validates the preconditions; solve calls
    the internal fast path directly."""
    from .reach import CriticalPair, dist_le2  # local: avoid cycle at import

    for name, cp, want in (("e", e, RED), ("f", f, BLUE)):
        if not isinstance(cp, CriticalPair):
            raise ValueError(f"{name} must be a CriticalPair, got {cp!r}")
        if cp.color != want:
            raise ValueError(f"{name} must be critical in color {want}")
        if not cp.is_edge:
            raise ValueError(f"{name} must be an edge, got partner pair "
                             f"({cp.u}, {cp.v})")
        if dist_le2(g, cp.color, cp.u, cp.v):
            raise ValueError(f"{name} is not critical in color {cp.color} "
                             f"for this coloring")
        if g.color_of(cp.u, cp.v) != flip(cp.color):
            raise ValueError(f"{name} does not carry color {flip(cp.color)}")
    shared = {e.u, e.v} & {f.u, f.v}
    if len(shared) != 1:
        raise ValueError(f"e and f must share exactly one vertex, "
                         f"share {sorted(shared)}")
    return _shared_vertex_cover(g, (e.u, e.v), (f.u, f.v))


def _shared_vertex_cover(g: ColoredCocktail, e: tuple[int, int],
                         f: tuple[int, int]) -> Cover:
    """Branch 3: e is color-1-critical, f color-2-critical, sharing a vertex."""
    n = g.n
    full = (1 << n) - 1
    x, y = e if e[0] in f else (e[1], e[0])
    q = f[0] + f[1] - x
    # col(x,y)=2 and col(x,q)=1 leave the partner of y as the only
    # placement for the far end of f: any other vertex would close a
    # 2-path killing one of the criticalities.
    if q != (y ^ 1):
        raise InternalInconsistencyError(
            "a color-2-critical edge through the shared vertex must end at "
            "the partner of the color-1-critical edge's far end", g)
    xp, yp = x ^ 1, y ^ 1
    named = (1 << x) | (1 << xp) | (1 << y) | (1 << yp)
    wit = LemmaWitness(x, y, xp, yp, q)

    x_set = g.blue[x] & ~(1 << y)
    y_set = g.blue[y] & ~(g.blue[x] | (1 << x) | (1 << xp))
    if (x_set | y_set | named) != full or (x_set | y_set) & named or x_set & y_set:
        raise InternalInconsistencyError(
            "the four named vertices, X, and Y must partition V", g)
    if g.red[x] != (y_set | (1 << yp)):
        raise InternalInconsistencyError(
            "the red neighborhood of the shared vertex must be exactly "
            "Y plus the partner of y", g)
    if x_set & ~g.red[yp]:
        raise InternalInconsistencyError(
            "X must lie inside the red neighborhood of the partner of y", g)

    # (i)/(ii): one red star at y' picks up X, one blue star at y the rest.
    if (g.blue[xp] >> y) & 1:
        return Cover(n, star(g, RED, yp), RED, star(g, BLUE, y), BLUE,
                     LemmaStars("i", RED, yp, BLUE, y, wit))
    if (g.red[xp] >> yp) & 1:
        return Cover(n, star(g, RED, yp), RED, star(g, BLUE, y), BLUE,
                     LemmaStars("ii", RED, yp, BLUE, y, wit))

    # Now col(x',y)=1 and col(x',y')=2; split X and Y by their color to x'.
    x1, x2 = x_set & g.red[xp], x_set & g.blue[xp]
    y1, y2 = y_set & g.red[xp], y_set & g.blue[xp]
    if not x1:
        return Cover(n, star(g, BLUE, xp), BLUE, star(g, BLUE, y), BLUE,
                     LemmaStars("iii", BLUE, xp, BLUE, y, wit))
    if not y1:
        return Cover(n, star(g, BLUE, xp), BLUE, star(g, BLUE, x), BLUE,
                     LemmaStars("iv", BLUE, xp, BLUE, x, wit))
    if not x2:
        return Cover(n, star(g, RED, xp), RED, star(g, RED, x), RED,
                     LemmaStars("v", RED, xp, RED, x, wit))
    if not y2:
        return Cover(n, star(g, RED, xp), RED, star(g, RED, yp), RED,
                     LemmaStars("vi", RED, xp, RED, yp, wit))

    # All four pieces nonempty: two 5-part cyclic blowups, one per color.
    parts_a = (1 << x, 1 << y, y2, 1 << xp, x2)
    parts_b = (1 << x, 1 << yp, x1, 1 << xp, y1)
    a = (1 << x) | (1 << y) | y2 | (1 << xp) | x2
    b = (1 << x) | (1 << yp) | x1 | (1 << xp) | y1
    return Cover(n, a, BLUE, b, RED, LemmaC5Plus(parts_a, parts_b, wit))


def check_cover(g: ColoredCocktail, cover: Cover,
                require_diam2: bool = False) -> str | None:
    """Re-validate a cover from scratch; None if good, else a reason code.

    Reason codes: "bad shape", "not a cover", "A not 2-reachable",
    "B not 2-reachable", "A not diameter-2", "B not diameter-2",
    "certificate mismatch".
    """
    n = g.n
    full = (1 << n) - 1
    if cover.n != n or (cover.a | cover.b) & ~full:
        return "bad shape"
    if cover.color_a not in COLORS or cover.color_b not in COLORS:
        return "bad shape"
    if (cover.a | cover.b) != full:
        return "not a cover"
    if require_diam2 or isinstance(cover.certificate, Diam2Witness):
        if not is_diam2_subset(g, cover.color_a, cover.a):
            return "A not diameter-2"
        if not is_diam2_subset(g, cover.color_b, cover.b):
            return "B not diameter-2"
    if not is_2reachable_set(g, cover.color_a, cover.a):
        return "A not 2-reachable"
    if not is_2reachable_set(g, cover.color_b, cover.b):
        return "B not 2-reachable"
    if cover.certificate is not None and not _certificate_matches(g, cover):
        return "certificate mismatch"
    return None


def verify_cover(g: ColoredCocktail, cover: Cover,
                 require_diam2: bool = False) -> bool:
    """True when check_cover finds nothing wrong."""
    return check_cover(g, cover, require_diam2=require_diam2) is None


def _certificate_matches(g: ColoredCocktail, cover: Cover) -> bool:
    cert = cover.certificate
    n = g.n
    full = (1 << n) - 1

    if isinstance(cert, WholeVertexSet):
        return (cover.a == full and cover.b == 0
                and cover.color_a == cert.color == cover.color_b
                and is_diam2_subset(g, cert.color, full))

    if isinstance(cert, TwoStars):
        if cover.color_a != cert.color or cover.color_b != cert.color:
            return False
        if cert.center2 != (cert.center1 ^ 1):
            return False
        # the partner pair must really be critical in the other color
        if g.adj(flip(cert.color))[cert.center1] & g.adj(flip(cert.color))[cert.center2]:
            return False
        return (cover.a == star(g, cert.color, cert.center1)
                and cover.b == star(g, cert.color, cert.center2))

    if isinstance(cert, LemmaStars):
        if not _witness_ok(g, cert.witness):
            return False
        return (cover.a == star(g, cert.color_a, cert.center_a)
                and cover.color_a == cert.color_a
                and cover.b == star(g, cert.color_b, cert.center_b)
                and cover.color_b == cert.color_b)

    if isinstance(cert, LemmaC5Plus):
        if not _witness_ok(g, cert.witness):
            return False
        return (_c5plus_ok(g, cover.color_a, cert.parts_a, cover.a)
                and _c5plus_ok(g, cover.color_b, cert.parts_b, cover.b))

    if isinstance(cert, CriticalComplement):
        if cert.p & cert.q:
            return False
        if cover.a != full & ~cert.p or cover.b != full & ~cert.q:
            return False
        if cover.color_a != RED or cover.color_b != BLUE:
            return False
        p = 0
        for cp in critical_pairs(g, RED):
            if cp.is_edge:
                p |= (1 << cp.u) | (1 << cp.v)
        q = 0
        for cp in critical_pairs(g, BLUE):
            if cp.is_edge:
                q |= (1 << cp.u) | (1 << cp.v)
        return cert.p == p and cert.q == q

    if isinstance(cert, Diam2Witness):
        return cover.a == cert.a and cover.b == cert.b

    return False


def _witness_ok(g: ColoredCocktail, wit: LemmaWitness) -> bool:
    x, y, xp, yp = wit.x, wit.y, wit.x_prime, wit.y_prime
    if xp != (x ^ 1) or yp != (y ^ 1) or wit.q != yp:
        return False
    if (1 << y) & ((1 << x) | (1 << xp)):
        return False
    # the two critical edges carry the opposite colors
    return g.color_of(x, y) == BLUE and g.color_of(x, yp) == RED


def _c5plus_ok(g: ColoredCocktail, color: int, parts: tuple[int, ...],
               members: int) -> bool:
    """Nonempty pairwise-disjoint parts, uniting to the set, consecutive
    parts completely joined in the color (cyclically)."""
    if len(parts) < 5:
        return False
    union = 0
    for part in parts:
        if not part or union & part:
            return False
        union |= part
    if union != members:
        return False
    adj = g.adj(color)
    k = len(parts)
    for i in range(k):
        left, right = parts[i], parts[(i + 1) % k]
        m = left
        while m:
            low = m & -m
            u = low.bit_length() - 1
            m ^= low
            if right & ~adj[u]:
                return False
    return True


def format_cover(cover: Cover) -> str:
    """Two-line text form: 'A <color>: v v ...' then the same for B."""
    a = " ".join(str(v) for v in vertex_list(cover.a))
    b = " ".join(str(v) for v in vertex_list(cover.b))
    return (f"A {cover.color_a}:{' ' + a if a else ''}\n"
            f"B {cover.color_b}:{' ' + b if b else ''}\n")


def parse_cover(text: str, n: int) -> Cover:
    """Parse the two-line cover form (certificate-less)."""
    fields: dict[str, tuple[int, int]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        head, sep, rest = line.partition(":")
        parts = head.split()
        if not sep or len(parts) != 2 or parts[0] not in ("A", "B"):
            raise GraphFormatError(
                f"expected 'A <color>: vertices...' or 'B <color>: ...', got {line!r}",
                line=lineno)
        label = parts[0]
        if label in fields:
            raise GraphFormatError(f"duplicate part {label}", line=lineno)
        try:
            color = int(parts[1])
        except ValueError:
            raise GraphFormatError(f"bad color {parts[1]!r}", line=lineno) from None
        if color not in COLORS:
            raise GraphFormatError(f"color must be 1 or 2, got {color}", line=lineno)
        try:
            verts = [int(tok) for tok in rest.split()]
        except ValueError:
            raise GraphFormatError(f"bad vertex list {rest!r}", line=lineno) from None
        for v in verts:
            if not 0 <= v < n:
                raise GraphFormatError(f"vertex {v} out of range for n={n}",
                                       line=lineno)
        fields[label] = (vertex_mask(verts), color)
    if "A" not in fields or "B" not in fields:
        raise GraphFormatError("cover needs both an A line and a B line")
    (a, ca), (b, cb) = fields["A"], fields["B"]
    return Cover(n, a, ca, b, cb)
