"""Exact truncated Fourier expansions of theta blocks.

A series is a finite map (n24, w) -> coefficient.  The q-exponent is n24/24
with n24 an integer; the z-exponent is stored in pairing (dual-basis)
coordinates: the integer vector w with denominator z_den encodes the dual
vector l whose pairing with a lattice point x is (w . x)/z_den, so the norm
(l, l) is w^T dual_gram w / z_den^2.  A series is exact for all n24 up to
n24_max: terms above the cap are unknown, absent terms at or below it are zero.
Products track the cap as min(a.cap + b.min, b.cap + a.min), which is where
truncation error can first appear.

The theta factor of a star vector s_j is the odd Jacobi theta series in the
variable (s_j, z): sum over k of (-1)^k q^{(2k+1)^2/8} zeta^{(2k+1) s_j / 2},
stored with n24 = 3(2k+1)^2 and w = (2k+1) u_j over z_den 2.  Dedekind eta
powers supply the q-only factor; a theta block is eta^(eta_exponent - N) times
the product of the N theta factors.

Observed on the repeated-vector star over the rank-one even lattice, and left
here as an unproven remark: the worst holomorphy deficit 2n - (l, l) of the
block equals twice the gap between the star's minimum deficiency and its
extremality threshold.  Nothing in the package relies on this.
"""

from __future__ import annotations

import math
import sys
from fractions import Fraction as Q
from typing import Sequence

from .lattice import InputError, Lattice, format_rational
from .linalg import qvec
from .star import EutacticStar, is_eutactic

DEFAULT_ORDER = 480


def _norm_coeff(c):
    if isinstance(c, Q) and c.denominator == 1:
        return int(c)
    return c


class FourierSeries:
    """Truncated series with exact integer (or, after heat, rational) terms."""

    def __init__(self, lattice: Lattice | None, z_den: int,
                 terms: dict, n24_max: int, character_d: int | None = None):
        if z_den < 1:
            raise InputError("z_den must be positive")
        self.lattice = lattice
        width = lattice.rank if lattice is not None else 0
        clean = {}
        for (n24, w), c in terms.items():
            c = _norm_coeff(c)
            if c == 0:
                continue
            if n24 > n24_max:
                continue
            if len(w) != width:
                raise InputError(f"z-exponent {w} has wrong length (want {width})")
            if character_d is not None and (n24 - character_d) % 24 != 0:
                raise InputError(f"term n24={n24} violates character {character_d}")
            clean[(n24, tuple(w))] = c
        # Canonical z_den: divide out the common content of all exponents.
        g = z_den
        for (_, w) in clean:
            for x in w:
                g = math.gcd(g, abs(x))
        if clean and g > 1:
            clean = {(n, tuple(x // g for x in w)): c for (n, w), c in clean.items()}
            z_den //= g
        elif not clean:
            z_den = 1
        self.z_den = z_den
        self.terms = clean
        self.n24_max = n24_max
        self.character_d = character_d

    @property
    def min_n24(self) -> int:
        return min((n for n, _ in self.terms), default=self.n24_max + 1)

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self) -> int:
        return len(self.terms)

    def __mul__(self, other) -> "FourierSeries":
        return multiply(self, other)

    def __repr__(self) -> str:
        return (f"FourierSeries({len(self.terms)} terms, n24_max={self.n24_max}, "
                f"z_den={self.z_den}, character={self.character_d})")

    def norm_of(self, w: Sequence[int]) -> Q:
        """(l, l) for the stored exponent w: w^T dual_gram w / z_den^2."""
        if self.lattice is None:
            return Q(0)
        dg = self.lattice.dual_gram()
        n = len(w)
        return sum(Q(w[i]) * dg[i][j] * w[j] for i in range(n) for j in range(n)) \
            / (self.z_den ** 2)

    def trimmed(self, n24_max: int) -> "FourierSeries":
        if n24_max > self.n24_max:
            raise InputError("cannot extend a truncated series")
        return FourierSeries(self.lattice, self.z_den,
                             {k: c for k, c in self.terms.items() if k[0] <= n24_max},
                             n24_max, self.character_d)


def theta_factor(star: EutacticStar, j: int, n24_max: int = DEFAULT_ORDER) -> FourierSeries:
    """The odd theta series attached to star vector j (sum side)."""
    if not 0 <= j < star.size:
        raise InputError(f"theta_factor: no vector {j} in a star of size {star.size}")
    u = star.pairings[j]
    terms = {}
    k = 0
    while 3 * (2 * k + 1) ** 2 <= n24_max:
        for odd in (2 * k + 1, -(2 * k + 1)):
            # (-1)^k for odd = 2k+1; oddness of the index pairs +odd with -odd
            # at the opposite sign, keeping the series odd in z.
            sign = (1 if k % 2 == 0 else -1) * (1 if odd > 0 else -1)
            terms[(3 * odd * odd, tuple(odd * c for c in u))] = sign
        k += 1
    return FourierSeries(star.lattice, 2, terms, n24_max, character_d=3 % 24)


def _euler_coeffs(order: int) -> list[int]:
    """Coefficients of prod_{n>=1} (1 - q^n) up to q^order (pentagonal numbers)."""
    e = [0] * (order + 1)
    e[0] = 1
    j = 1
    while True:
        g1 = j * (3 * j - 1) // 2
        g2 = j * (3 * j + 1) // 2
        if g1 > order and g2 > order:
            break
        s = 1 if j % 2 == 0 else -1
        if g1 <= order:
            e[g1] = s
        if g2 <= order:
            e[g2] = s
        j += 1
    return e


def _poly_mul(a: list[int], b: list[int], order: int) -> list[int]:
    out = [0] * (order + 1)
    for i, ai in enumerate(a):
        if ai == 0 or i > order:
            continue
        for k, bk in enumerate(b):
            if k + i > order:
                break
            if bk:
                out[i + k] += ai * bk
    return out


def _poly_inv(a: list[int], order: int) -> list[int]:
    assert a[0] == 1
    inv = [0] * (order + 1)
    inv[0] = 1
    for n in range(1, order + 1):
        inv[n] = -sum(a[i] * inv[n - i] for i in range(1, min(n, len(a) - 1) + 1))
    return inv


def eta_power(k: int, n24_max: int = DEFAULT_ORDER) -> FourierSeries:
    """eta^k = q^{k/24} prod (1-q^n)^k as a q-only series (lattice-free)."""
    order = (n24_max - k) // 24
    if order < 0:
        return FourierSeries(None, 1, {}, n24_max, character_d=k % 24)
    e = _euler_coeffs(order)
    p = [1] + [0] * order
    base = e if k >= 0 else _poly_inv(e, order)
    for _ in range(abs(k)):
        p = _poly_mul(p, base, order)
    terms = {(k + 24 * j, ()): c for j, c in enumerate(p) if c}
    return FourierSeries(None, 1, terms, n24_max, character_d=k % 24)


def _join_lattice(a: FourierSeries, b: FourierSeries) -> Lattice | None:
    if a.lattice is None:
        return b.lattice
    if b.lattice is None:
        return a.lattice
    if a.lattice != b.lattice:
        raise InputError("series live on different lattices")
    return a.lattice


def _widen(w: tuple, scale: int, width: int) -> tuple:
    if not w:
        return (0,) * width
    return tuple(x * scale for x in w)


def multiply(a: FourierSeries, b: FourierSeries) -> FourierSeries:
    """Exact truncated product; cap = min(a.cap + b.min, b.cap + a.min)."""
    lat = _join_lattice(a, b)
    width = lat.rank if lat is not None else 0
    d = a.z_den * b.z_den // math.gcd(a.z_den, b.z_den)
    sa, sb = d // a.z_den, d // b.z_den
    cap = min(a.n24_max + b.min_n24, b.n24_max + a.min_n24)
    char = None
    if a.character_d is not None and b.character_d is not None:
        char = (a.character_d + b.character_d) % 24
    out: dict = {}
    bitems = [((n, _widen(w, sb, width)), c) for (n, w), c in b.terms.items()]
    for (n1, w1), c1 in a.terms.items():
        w1 = _widen(w1, sa, width)
        for (n2, w2), c2 in bitems:
            n = n1 + n2
            if n > cap:
                continue
            key = (n, tuple(x + y for x, y in zip(w1, w2)))
            v = out.get(key, 0) + c1 * c2
            if v:
                out[key] = v
            elif key in out:
                del out[key]
    return FourierSeries(lat, d, out, cap, character_d=char)


def add(a: FourierSeries, b: FourierSeries) -> FourierSeries:
    lat = _join_lattice(a, b)
    width = lat.rank if lat is not None else 0
    d = a.z_den * b.z_den // math.gcd(a.z_den, b.z_den)
    sa, sb = d // a.z_den, d // b.z_den
    cap = min(a.n24_max, b.n24_max)
    char = a.character_d if a.character_d == b.character_d else None
    out: dict = {}
    for series, s in ((a, sa), (b, sb)):
        for (n, w), c in series.terms.items():
            if n > cap:
                continue
            key = (n, _widen(w, s, width))
            v = out.get(key, 0) + c
            if v:
                out[key] = v
            elif key in out:
                del out[key]
    return FourierSeries(lat, d, out, cap, character_d=char)


def theta_block(star: EutacticStar, eta_exponent: int | None = None,
                n24_max: int = DEFAULT_ORDER) -> FourierSeries:
    """eta^(eta_exponent - N) times the product of all N theta factors.

    Default eta_exponent is the lattice rank.  Works for any star; eutaxy is
    what makes the result interesting, so its absence only triggers a warning.
    """
    if eta_exponent is None:
        eta_exponent = star.lattice.rank
    if not is_eutactic(star):
        print("warning: theta_block of a non-eutactic star", file=sys.stderr)
    n = star.size
    mins = [3] * n + [eta_exponent - n]
    total_min = sum(mins)
    series = eta_power(eta_exponent - n, n24_max - (total_min - mins[-1]))
    running_min = mins[-1]
    remaining = 3 * n
    for j in range(n):
        remaining -= 3
        factor = theta_factor(star, j, n24_max - (running_min + remaining))
        series = multiply(series, factor)
        running_min += 3
    assert series.n24_max >= n24_max
    out = series.trimmed(n24_max)
    want = (3 * n + (eta_exponent - n)) % 24
    assert out.character_d == want
    return out


def heat_apply(s: FourierSeries) -> FourierSeries:
    """Multiply each term by n - (l, l)/2; coefficients become exact rationals."""
    out = {}
    for (n24, w), c in s.terms.items():
        factor = Q(n24, 24) - s.norm_of(w) / 2
        out[(n24, w)] = factor * c
    return FourierSeries(s.lattice, s.z_den, out, s.n24_max, s.character_d)


def check_holomorphic(s: FourierSeries) -> list[tuple[int, tuple, Q]]:
    """Terms violating 2n >= (l, l), as (n24, w, deficit) sorted; empty if none."""
    bad = []
    for (n24, w), _ in s.terms.items():
        deficit = Q(n24, 12) - s.norm_of(w)
        if deficit < 0:
            bad.append((n24, w, deficit))
    return sorted(bad)


def check_singular_support(s: FourierSeries) -> bool:
    """True iff every stored term sits on the singular shell 2n = (l, l)."""
    return all(Q(n24, 12) == s.norm_of(w) for (n24, w), _ in s.terms.items())


def reflect_series(s: FourierSeries, v: Sequence) -> FourierSeries:
    """Pull the series back along the reflection through v's orthogonal wall."""
    if s.lattice is None:
        raise InputError("reflect_series needs a lattice-bearing series")
    v = qvec(v)
    vv = s.lattice.inner(v, v)
    if vv == 0:
        raise InputError("reflect_series: v must be nonzero")
    gv = s.lattice.pairings(v)
    new = {}
    den = s.z_den
    images = {}
    for (n24, w), c in s.terms.items():
        c_v = 2 * sum(Q(a) * b for a, b in zip(v, w)) / vv  # 2 (v, l) z_den / (v, v)
        img = tuple(Q(w[i]) - c_v * gv[i] for i in range(len(w)))
        images[(n24, w)] = img
        for x in img:
            den = den * x.denominator // math.gcd(den, x.denominator)
    scale = den // s.z_den
    for (n24, w), c in s.terms.items():
        img = images[(n24, w)]
        key = (n24, tuple(int(x * scale) for x in img))
        new[key] = new.get(key, 0) + c
    return FourierSeries(s.lattice, den, new, s.n24_max, s.character_d)


def check_antisymmetry(s: FourierSeries, v: Sequence) -> bool:
    """True iff the series is odd under the reflection through v's wall."""
    return add(reflect_series(s, v), s).is_zero()


def dump_series(s: FourierSeries) -> str:
    """One line per term: 'n24 w1,...,wl/z_den coeff', sorted by (n24, w)."""
    if s.lattice is None:
        raise InputError("dump_series needs a lattice-bearing series")
    lines = []
    for (n24, w) in sorted(s.terms):
        c = s.terms[(n24, w)]
        wtxt = ",".join(str(x) for x in w)
        lines.append(f"{n24} {wtxt}/{s.z_den} {format_rational(Q(c))}")
    return "\n".join(lines)
