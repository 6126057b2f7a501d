"""Independent oracles and deterministic generators used by the tests.

Everything here recomputes expectations from first principles (polynomial
expansion, literal definitions, product enumeration) so the library is
checked against a second route, not against itself.
"""

import itertools
from math import comb

import hypothesis.strategies as st

from extenders import build_complex


def poly_h(f):
    """h-vector by expanding sum_j f_(j-1) (x-1)^(d+1-j) and reading the
    coefficient of x^(d+1-i)."""
    d = len(f) - 2
    coeffs = [0] * (d + 2)
    for j, fj in enumerate(f):
        n = d + 1 - j
        for m in range(n + 1):
            coeffs[m] += fj * comb(n, m) * (-1) ** (n - m)
    return tuple(coeffs[d + 1 - i] for i in range(d + 2))


def link_by_definition(c, s):
    """Literal link: faces disjoint from s whose union with s is a face."""
    s = frozenset(s)
    return {t for t in c.faces if not (t & s) and (t | s) in c.faces}


def cube(bottom, top):
    gap = sorted(top - bottom)
    return {bottom | frozenset(sel)
            for r in range(len(gap) + 1)
            for sel in itertools.combinations(gap, r)}


def naive_find_partitioning(members):
    """Plain product enumeration over one candidate interval per maximal
    member; exponential but exhaustive, for cross-checking verdicts."""
    members = frozenset(frozenset(m) for m in members)
    if not members:
        return []
    tops = [m for m in members if not any(m < other for other in members)]
    options = []
    for top in tops:
        choices = []
        for r in range(len(top) + 1):
            for sel in itertools.combinations(sorted(top), r):
                bottom = frozenset(sel)
                block = cube(bottom, top)
                if block <= members:
                    choices.append((bottom, top, frozenset(block)))
        options.append(choices)
    for combo in itertools.product(*options):
        covered = set()
        ok = True
        for _, _, block in combo:
            if covered & block:
                ok = False
                break
            covered |= block
        if ok and covered == members:
            return [(b, t) for b, t, _ in combo]
    return None


def euler_from_f(f):
    """Reduced Euler characteristic: alternating sum of the face counts."""
    return sum((-1) ** (size - 1) * f[size] for size in range(len(f)))


def euler_from_betti(betti):
    return sum((-1) ** (idx - 1) * b for idx, b in enumerate(betti))


def random_pure_complex(rng, max_dim=2, max_faces=12, labels=6):
    while True:
        d = rng.randint(0, max_dim)
        n_facets = rng.randint(1, 4)
        facets = [frozenset(rng.sample(range(1, labels + 1), d + 1))
                  for _ in range(n_facets)]
        c = build_complex(facets)
        if 0 < len(c.faces) <= max_faces:
            return c


def random_nonpure_complex(rng, max_faces=12, labels=6):
    while True:
        n_facets = rng.randint(2, 4)
        facets = [frozenset(rng.sample(range(1, labels + 1), rng.randint(1, 3)))
                  for _ in range(n_facets)]
        c = build_complex(facets)
        if 0 < len(c.faces) <= max_faces and not c.is_pure:
            return c


@st.composite
def pure_complexes(draw, max_dim=2, max_facets=3, labels=6):
    d = draw(st.integers(0, max_dim))
    facet = st.frozensets(st.integers(1, labels), min_size=d + 1, max_size=d + 1)
    return build_complex(draw(st.lists(facet, min_size=1, max_size=max_facets)))


@st.composite
def small_complexes(draw, labels=5, max_facets=4, max_size=3, min_facets=0):
    facet = st.frozensets(st.integers(1, labels), min_size=1, max_size=max_size)
    return build_complex(draw(st.lists(facet, min_size=min_facets,
                                       max_size=max_facets)))
