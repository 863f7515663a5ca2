"""Root-system catalog, induced lattices and stars, and recognition.

Every catalog type is realized in simple-root coordinates (Bourbaki numbering):
the ambient form has Gram M_ij = <a_i, a_j>, the symmetrized Cartan matrix
normalized so long roots have norm 2, and positive roots are small non-negative
integer tuples.  The dual Coxeter number h is computed from the defining
identity sum_{r>0} <r, z>^2 = h <z, z>, never from a table.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction as Q
from functools import lru_cache
from itertools import permutations
from typing import Sequence

from .lattice import InputError, Lattice
from .linalg import Mat, Vec, invert, qvec, rank
from .star import EutacticStar

_LABEL_RE = re.compile(r"^([A-G])([1-9][0-9]*)$")
_MIN_RANK = {"A": 1, "B": 2, "C": 3, "D": 4, "E": 6, "F": 4, "G": 2}
_MAX_RANK = {"A": 8, "B": 8, "C": 8, "D": 8, "E": 8, "F": 4, "G": 2}
MAX_CATALOG_RANK = 8


def parse_label(label: str) -> tuple[str, int]:
    m = _LABEL_RE.match(label.strip()) if isinstance(label, str) else None
    if not m:
        raise InputError(f"bad root system label {label!r}")
    family, n = m.group(1), int(m.group(2))
    if not _MIN_RANK[family] <= n <= _MAX_RANK[family]:
        raise InputError(f"unsupported root system {label!r}")
    return family, n


def catalog_labels(max_rank: int = MAX_CATALOG_RANK) -> list[str]:
    """All irreducible type labels up to max_rank, deterministic order."""
    out = []
    for family in "ABCDEFG":
        for n in range(_MIN_RANK[family], min(_MAX_RANK[family], max_rank) + 1):
            out.append(f"{family}{n}")
    return out


def cartan_matrix_for(family: str, n: int) -> tuple[tuple[int, ...], ...]:
    """Cartan matrix A_ij = 2<a_i, a_j>/<a_j, a_j>, Bourbaki numbering."""
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def edge(i, j, aij=-1, aji=-1):
        a[i][j] = aij
        a[j][i] = aji

    if family in "ABC":
        for i in range(n - 1):
            edge(i, i + 1)
        if family == "B":
            edge(n - 2, n - 1, -2, -1)  # a_n is the short root
        elif family == "C":
            edge(n - 2, n - 1, -1, -2)  # a_n is the long root
    elif family == "D":
        for i in range(n - 2):
            edge(i, i + 1)
        edge(n - 3, n - 1)
    elif family == "E":
        chain = [0, 2, 3, 4, 5, 6, 7][: n - 1]
        for i, j in zip(chain, chain[1:]):
            edge(i, j)
        edge(1, 3)
    elif family == "F":
        edge(0, 1)
        edge(1, 2, -2, -1)  # a_3, a_4 short
        edge(2, 3)
    elif family == "G":
        edge(0, 1, -1, -3)  # a_1 short
    return tuple(tuple(row) for row in a)


def _norms(family: str, n: int) -> tuple[Q, ...]:
    """Squared lengths of the simple roots, long roots normalized to 2."""
    if family in "ADE":
        return tuple(Q(2) for _ in range(n))
    if family == "B":
        return tuple(Q(2) if i < n - 1 else Q(1) for i in range(n))
    if family == "C":
        return tuple(Q(1) if i < n - 1 else Q(2) for i in range(n))
    if family == "F":
        return (Q(2), Q(2), Q(1), Q(1))
    return (Q(2, 3), Q(2))  # G2


@dataclass(frozen=True)
class RootSystemDescriptor:
    label: str
    rank: int
    cartan: tuple[tuple[int, ...], ...]
    norm_gram: Mat  # Gram of <,> on the simple-root basis
    positive_roots: tuple[tuple[int, ...], ...]  # simple-root coordinates
    dual_coxeter: int


def _close_under_reflections(cartan, n: int) -> set[tuple[int, ...]]:
    simple = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    roots = set(simple)
    frontier = list(simple)
    while frontier:
        r = frontier.pop()
        for i in range(n):
            pairing = sum(r[j] * cartan[j][i] for j in range(n))
            img = tuple(r[j] - (pairing if j == i else 0) for j in range(n))
            if img not in roots:
                roots.add(img)
                frontier.append(img)
    return roots


@lru_cache(maxsize=None)
def catalog(label: str) -> RootSystemDescriptor:
    """Descriptor for an irreducible type: roots, form, dual Coxeter number."""
    family, n = parse_label(label)
    cartan = cartan_matrix_for(family, n)
    norms = _norms(family, n)
    # M_ij = <a_i, a_j> = A_ij * <a_j, a_j> / 2; symmetry is a consistency check.
    gram = tuple(tuple(Q(cartan[i][j]) * norms[j] / 2 for j in range(n)) for i in range(n))
    assert all(gram[i][j] == gram[j][i] for i in range(n) for j in range(n))
    roots = _close_under_reflections(cartan, n)
    assert all(all(c >= 0 for c in r) or all(c <= 0 for c in r) for r in roots)
    positive = sorted((r for r in roots if all(c >= 0 for c in r)),
                      key=lambda r: (sum(r), r))
    # Dual Coxeter number via (sum_{r>0} r r^T) M = h I.
    s = [[sum(r[i] * r[j] for r in positive) for j in range(n)] for i in range(n)]
    c = [[sum(Q(s[i][k]) * gram[k][j] for k in range(n)) for j in range(n)]
         for i in range(n)]
    h = c[0][0]
    assert all(c[i][j] == (h if i == j else 0) for i in range(n) for j in range(n)), \
        f"{label}: sum of root squares is not a multiple of the form"
    assert h.denominator == 1 and h > 0
    return RootSystemDescriptor(label=f"{family}{n}", rank=n, cartan=cartan,
                                norm_gram=gram, positive_roots=tuple(positive),
                                dual_coxeter=int(h))


def build_P_lattice(desc: RootSystemDescriptor) -> Lattice:
    """The lattice P = {x : <x, r> in Z for all roots r} with form h<,>.

    On the basis dual to the simple roots the Gram matrix is h M^{-1}, which
    equals sum_{r>0} r r^T and is therefore integral.
    """
    n = desc.rank
    pgram = [[sum(r[i] * r[j] for r in desc.positive_roots) for j in range(n)]
             for i in range(n)]
    minv = invert(desc.norm_gram)
    assert minv is not None
    assert all(Q(pgram[i][j]) == desc.dual_coxeter * minv[i][j]
               for i in range(n) for j in range(n))
    return Lattice(pgram)


def build_star(desc: RootSystemDescriptor) -> EutacticStar:
    """The star {r/h : r positive} on P; its pairing vectors are the roots."""
    lat = build_P_lattice(desc)
    h = desc.dual_coxeter
    vectors = []
    for r in desc.positive_roots:
        mr = tuple(sum(desc.norm_gram[i][j] * r[j] for j in range(desc.rank)) / h
                   for i in range(desc.rank))
        vectors.append(mr)
    star = EutacticStar(lat, vectors)
    assert star.pairings == desc.positive_roots
    return star


def cartan_matrix(vectors: Sequence[Sequence], lattice: Lattice) -> tuple[tuple[Q, ...], ...]:
    """A_ij = 2(v_i, v_j)/(v_j, v_j) for the given vectors, exact."""
    vs = [qvec(v) for v in vectors]
    inner = [[lattice.inner(x, y) for y in vs] for x in vs]
    for i, x in enumerate(vs):
        if inner[i][i] == 0:
            raise InputError(f"cartan_matrix: vector {i} is isotropic or zero")
    return tuple(tuple(2 * inner[i][j] / inner[j][j] for j in range(len(vs)))
                 for i in range(len(vs)))


@dataclass
class RecognitionReport:
    ok: bool
    label: str | None  # e.g. "A2" or "A1 x A1"
    components: list[dict]
    failure: dict | None  # {"axiom": ..., "witness": ...} when not ok

    def __bool__(self) -> bool:
        return self.ok


def _fail(axiom: str, witness) -> RecognitionReport:
    return RecognitionReport(ok=False, label=None, components=[],
                             failure={"axiom": axiom, "witness": witness})


def recognize(S: Sequence[Sequence], lattice: Lattice) -> RecognitionReport:
    """Decide whether S is a root system for the lattice's form, and which one.

    Checks, in order: no proper integer multiples, mutual distinctness,
    closure under the reflections x -> x - (2(v, x)/(v, v)) v, and integrality
    of all ratios 2(x, y)/(x, x).  A passing S is decomposed into orthogonal
    components and each component is matched against the catalog by Dynkin
    diagram isomorphism, so the verdict is invariant under rescaling S.
    """
    if len(S) == 0:
        raise InputError("recognize: S is empty")
    orig = [qvec(v) for v in S]
    for j, v in enumerate(orig):
        if all(x == 0 for x in v):
            raise InputError(f"recognize: vector {j} is zero")
    oset = set(orig)
    for v in orig:
        if tuple(-x for x in v) not in oset:
            raise InputError(f"recognize: S is not symmetric under negation "
                             f"(missing -{[str(x) for x in v]})")

    # Clear denominators once; every later check is ratio-based, so a common
    # integer rescaling changes nothing and keeps the arithmetic in int.
    denom = 1
    for v in orig:
        for x in v:
            denom = denom * x.denominator // math.gcd(denom, x.denominator)
    scaled = [tuple(int(x * denom) for x in v) for v in orig]
    back = {s: o for s, o in zip(scaled, orig)}
    n = len(scaled)
    g = [[int(x) for x in row] for row in lattice.gram]
    l = lattice.rank

    def inner(a, b):
        return sum(a[i] * g[i][j] * b[j] for i in range(l) for j in range(l))

    pair = [[inner(scaled[i], scaled[j]) for j in range(n)] for i in range(n)]

    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            x, y = scaled[i], scaled[j]
            if all(x[a] * y[b] == x[b] * y[a] for a in range(l) for b in range(a)):
                k = next(a for a in range(l) if x[a] != 0)
                if y[k] % x[k] == 0 and abs(y[k] // x[k]) >= 2 \
                        and all(y[a] == (y[k] // x[k]) * x[a] for a in range(l)):
                    return _fail("integer-multiple", (S[i], S[j]))
    seen: dict[tuple, int] = {}
    for i, v in enumerate(scaled):
        if v in seen:
            return _fail("distinct", (S[seen[v]], S[i]))
        seen[v] = i
    sset = set(scaled)
    for i in range(n):
        nii = pair[i][i]
        for j in range(n):
            c = Q(2 * pair[i][j], nii)
            img = tuple(Q(scaled[j][a]) - c * scaled[i][a] for a in range(l))
            if any(x.denominator != 1 for x in img) or \
                    tuple(int(x) for x in img) not in sset:
                return _fail("reflection-closure", (S[i], S[j]))
    for i in range(n):
        for j in range(n):
            if (2 * pair[i][j]) % pair[i][i] != 0:
                return _fail("cartan-integrality", (S[i], S[j]))

    # Orthogonal components.
    comp = list(range(n))

    def find(a):
        while comp[a] != a:
            comp[a] = comp[comp[a]]
            a = comp[a]
        return a

    for i in range(n):
        for j in range(i):
            if pair[i][j] != 0:
                comp[find(i)] = find(j)
    groups: dict[int, list[int]] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)

    # Positive system from a generic linear functional (1, t, t^2, ...).
    t = 1
    while True:
        if all(sum(v[a] * t ** a for a in range(l)) != 0 for v in scaled):
            break
        t += 1
    positive = [i for i in range(n) if sum(scaled[i][a] * t ** a for a in range(l)) > 0]
    pos_set = {scaled[i] for i in positive}
    sums = set()
    for a in pos_set:
        for b in pos_set:
            sums.add(tuple(a[k] + b[k] for k in range(l)))
    simple = [i for i in positive if scaled[i] not in sums]

    components = []
    for root_ids in groups.values():
        simp = [i for i in simple if i in set(root_ids)]
        r = len(simp)
        span_rank = rank([qvec(scaled[i]) for i in root_ids])
        if r != span_rank or rank([qvec(scaled[i]) for i in simp]) != r:
            return _fail("simple-system", tuple(S[i] for i in simp))
        a = [[2 * pair[x][y] // pair[y][y] for y in simp] for x in simp]
        if any(a[p][q] > 0 for p in range(r) for q in range(r) if p != q):
            return _fail("simple-system", tuple(S[i] for i in simp))
        label = _match_type(a, len(root_ids))
        if label is None:
            return _fail("unrecognized-component", tuple(S[i] for i in simp))
        components.append({
            "label": label,
            "simple_roots": sorted(back[scaled[i]] for i in simp),
            "cartan": tuple(tuple(row) for row in a),
        })
    components.sort(key=lambda c: (c["label"], c["simple_roots"]))
    label = " x ".join(c["label"] for c in components)
    return RecognitionReport(ok=True, label=label, components=components, failure=None)


def _match_type(a: list[list[int]], n_roots: int) -> str | None:
    """Match a simple-root Cartan matrix against the catalog diagrams."""
    r = len(a)
    for lab in catalog_labels():
        family, rk = parse_label(lab)
        if rk != r:
            continue
        desc = catalog(lab)
        if 2 * len(desc.positive_roots) != n_roots:
            continue
        ref = desc.cartan
        prof = sorted(sorted((a[i][j], a[j][i]) for j in range(r) if j != i and a[i][j])
                      for i in range(r))
        ref_prof = sorted(sorted((ref[i][j], ref[j][i]) for j in range(r)
                                 if j != i and ref[i][j]) for i in range(r))
        if prof != ref_prof:
            continue
        for perm in permutations(range(r)):
            if all(a[perm[i]][perm[j]] == ref[i][j] for i in range(r) for j in range(r)):
                return lab
    return None
