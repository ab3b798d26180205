"""Newton-Puiseux expansion of a plane curve germ at the origin.

Coefficients of the input are exact (Q or Q(i)); the expansion itself runs in
mpmath at a working precision that is doubled on any numerical ambiguity.
Exponents are exact ``Fraction`` objects throughout, so the combinatorial
output (branch count, ramification indices, contact orders, delta) is exact
once the numerical zero tests are correct.  Callers cross-check delta against
the exact Milnor number.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, lcm

import mpmath

from ..arith import BivariatePolynomial, GaussianRational
from .local import general_shear, shear


class PuiseuxError(ValueError):
    pass


class DegenerateGermError(PuiseuxError):
    """Repeated factor through the point (non-reduced germ)."""


class ExtensionUnsupportedError(PuiseuxError):
    """Precision/truncation budget exhausted before branches separated."""


class _Retry(Exception):
    def __init__(self, what):
        self.what = what


@dataclass
class PuiseuxBranch:
    ramification_index: int
    terms: list  # [(Fraction exponent, complex coefficient)] in sheared coordinates
    multiplicity: int
    tangent: tuple  # (dx, dy) direction in the original coordinates, unit length
    delta: int = 0
    roots: list = field(default_factory=list, repr=False)

    @property
    def smooth(self) -> bool:
        return self.multiplicity == 1

    @property
    def kind(self) -> str:
        if self.multiplicity == 1:
            return "smooth"
        return "cuspidal"

    def tangent_label(self, tol: float = 1e-9) -> str:
        dx, dy = self.tangent
        if abs(dx) < tol:
            return "vertical"
        if abs(dy) < tol:
            return "horizontal"
        return f"slope {dy / dx:.6g}"

    def to_dict(self) -> dict:
        def cfmt(c):
            c = complex(c)
            return [round(c.real, 12), round(c.imag, 12)]

        return {
            "ramification_index": self.ramification_index,
            "multiplicity": self.multiplicity,
            "kind": self.kind,
            "tangent": self.tangent_label(),
            "delta": self.delta,
            "terms": [[str(e), cfmt(c)] for e, c in self.terms],
        }


@dataclass
class _Leaf:
    path: list  # [(Fraction cumulative exponent or None for exact end, mpc coefficient, node id)]
    sep_len: int  # prefix length at which this root became isolated
    exact: bool = False

    @property
    def ramification(self) -> int:
        n = 1
        for e, _, _ in self.path:
            if e is not None:
                n = lcm(n, e.denominator)
        return n


@dataclass
class GermExpansion:
    shear: int
    multiplicity: int
    branches: list
    intersections: dict  # (i, j) -> int, i < j
    delta: int
    precision: int
    truncation: Fraction

    @property
    def r(self) -> int:
        return len(self.branches)

    @property
    def milnor_from_delta(self) -> int:
        return 2 * self.delta - self.r + 1

    def profile(self) -> dict:
        counts: dict[str, int] = {}
        for b in self.branches:
            counts[b.kind] = counts.get(b.kind, 0) + 1
        return counts


# -- conversion ---------------------------------------------------------------------


def _mp(c):
    if isinstance(c, GaussianRational):
        return mpmath.mpc(_mpf(c.re), _mpf(c.im))
    return mpmath.mpc(_mpf(c), 0)


def _mpf(c):
    f = Fraction(c)
    return mpmath.mpf(f.numerator) / f.denominator


# -- the expansion ------------------------------------------------------------------


class _Expander:
    def __init__(self, dps: int, extra_terms: int):
        self.dps = dps
        self.zero_tol = mpmath.mpf(10) ** (-int(dps * 0.6))
        self.extra_terms = extra_terms
        self.ids = itertools.count()
        self.leaves: list[_Leaf] = []

    def is_zero(self, a, scale) -> bool:
        return abs(a) <= self.zero_tol * scale

    def clean(self, H: dict, reliable: Fraction) -> tuple[dict, bool]:
        """Drop numerically zero terms and terms beyond the reliable x-exponent.

        Returns the cleaned dict and whether anything was truncated.
        """
        if not H:
            return H, False
        scale = max(abs(a) for a in H.values())
        out = {}
        dropped = False
        for m, a in H.items():
            if self.is_zero(a, scale):
                continue
            if m[0] > reliable:
                dropped = True
                continue
            out[m] = a
        return out, dropped

    def run(self, H: dict, k: int, reliable: Fraction, lossy: bool, path: list):
        """Expand the k roots of H (a germ with H(0, y) of order k)."""
        if k == 1:
            self._finish_single(H, reliable, path, len(path))
            return
        self._split(H, k, reliable, lossy, path)

    def _hull(self, H: dict, k: int):
        mins: dict[int, Fraction] = {}
        for (q, j) in H:
            if j <= k and (j not in mins or q < mins[j]):
                mins[j] = q
        if mins.get(k) != 0:
            raise PuiseuxError("internal: germ order mismatch")
        low = min(mins)
        edges = []
        jc, qc = k, mins[k]
        while jc > low:
            best = None
            for j in range(jc - 1, low - 1, -1):
                if j not in mins:
                    continue
                s = (mins[j] - qc) / (jc - j)
                if best is None or s < best[0] or (s == best[0] and j < best[1]):
                    best = (s, j)
            s, jn = best
            edges.append((jc, jn, s, qc + s * jc))
            jc, qc = jn, mins[jn]
        return low, edges

    def _split(self, H, k, reliable, lossy, path):
        low, edges = self._hull(H, k)
        if low > 0:
            if lossy:
                raise _Retry("truncation")
            if low > 1:
                raise DegenerateGermError("repeated factor through the point")
            self.leaves.append(_Leaf(path + [(None, mpmath.mpc(0), next(self.ids))], len(path) + 1, exact=True))
        for jc, jn, gamma, e0 in edges:
            coeffs = [H.get((e0 - gamma * j, j), 0) for j in range(jn, jc + 1)]
            roots = self._roots(coeffs)
            base = path[-1][0] if path else Fraction(0)
            for c, mult in roots:
                node = next(self.ids)
                child = self._shift(H, gamma, c, e0)
                child_rel = reliable - e0
                child, dropped = self.clean(child, child_rel)
                new_path = path + [(base + gamma, c, node)]
                if mult == 1:
                    self._finish_single(child, child_rel, new_path, len(new_path))
                else:
                    self._check_order(child, mult)
                    self._split(child, mult, child_rel, lossy or dropped, new_path)

    def _check_order(self, H, k):
        zero_col = [j for (q, j) in H if q == 0]
        if not zero_col or min(zero_col) != k:
            raise _Retry("precision")

    def _finish_single(self, H, reliable, path, sep_len):
        """Extend an isolated root by a few more terms (display only)."""
        cur = H
        rel = reliable
        full = list(path)
        for _ in range(self.extra_terms):
            if not cur:
                break
            col0 = [q for (q, j) in cur if j == 0]
            if not col0:
                break
            q0 = min(col0)
            a0 = cur[(q0, 0)]
            a1 = cur.get((Fraction(0), 1))
            if a1 is None or q0 <= 0:
                break
            c = -a0 / a1
            base = full[-1][0] if full else Fraction(0)
            full.append((base + q0, c, -1))
            cur = self._shift(cur, q0, c, q0)
            rel = rel - q0
            cur, _ = self.clean(cur, rel)
        self.leaves.append(_Leaf(full, sep_len))

    def _shift(self, H, gamma, c, e0):
        """H(x, x^gamma (c + y)) / x^e0."""
        out: dict = {}
        for (q, j), a in H.items():
            qq = q + gamma * j - e0
            # sum_i binom(j, i) c^(j-i) y^i
            pw = [mpmath.mpc(1)]
            for _ in range(j):
                pw.append(pw[-1] * c)
            for i in range(j + 1):
                key = (qq, i)
                out[key] = out.get(key, 0) + a * comb(j, i) * pw[j - i]
        return out

    def _roots(self, coeffs):
        """Distinct nonzero roots with multiplicities of sum coeffs[i] c^i."""
        deg = len(coeffs) - 1
        while deg > 0 and coeffs[deg] == 0:
            deg -= 1
        poly = [mpmath.mpc(c) for c in coeffs[: deg + 1]]
        if deg == 0:
            return []
        if deg == 1:
            return [(-poly[0] / poly[1], 1)]
        tol_exp = max(self.dps // (2 * deg), 4)
        try:
            raw = mpmath.polyroots(list(reversed(poly)), maxsteps=400, extraprec=4 * self.dps)
        except mpmath.libmp.NoConvergence:
            # multiple roots slow Durand-Kerner down to linear convergence
            with mpmath.extradps(4 * self.dps):
                raw = self._aberth(poly, tol_exp)
        scale = max(abs(r) for r in raw)
        tol = mpmath.mpf(10) ** (-tol_exp) * max(scale, 1)
        clusters: list[list] = []
        for r in raw:
            for cl in clusters:
                if abs(cl[0] - r) < tol:
                    cl.append(r)
                    break
            else:
                clusters.append([r])
        # clusters must be well separated relative to tol
        centers = [sum(cl) / len(cl) for cl in clusters]
        for a, b in itertools.combinations(centers, 2):
            if abs(a - b) < 100 * tol:
                raise _Retry("precision")
        out = []
        for cl, cen in zip(clusters, centers):
            m = len(cl)
            c = self._polish(poly, cen, m)
            out.append((c, m))
        return out

    def _aberth(self, poly, tol_exp, maxsteps=5000):
        """Simultaneous Aberth iteration; good enough to locate clusters."""
        deg = len(poly) - 1
        lead = poly[-1]
        mono = [c / lead for c in poly]
        radius = 1 + max(abs(c) for c in mono[:-1])
        z = [radius * mpmath.expj(2 * mpmath.pi * (i + 0.25) / deg) for i in range(deg)]
        dmono = [i * mono[i] for i in range(1, deg + 1)]
        target = mpmath.mpf(10) ** (-2 * tol_exp)
        for _ in range(maxsteps):
            worst = 0
            for i in range(deg):
                f = mpmath.polyval(mono[::-1], z[i])
                fp = mpmath.polyval(dmono[::-1], z[i])
                if f == 0:
                    continue
                ratio = f / fp if fp != 0 else mpmath.mpf(10) ** -tol_exp
                s = sum(1 / (z[i] - z[j]) for j in range(deg) if j != i and z[i] != z[j])
                w = ratio / (1 - ratio * s)
                z[i] -= w
                worst = max(worst, abs(w) / max(abs(z[i]), 1))
            if worst < target:
                return z
        raise _Retry("precision")

    def _polish(self, poly, c, m):
        """Newton on the (m-1)-th derivative, where an m-fold root is simple."""
        d = list(poly)
        for _ in range(m - 1):
            d = [i * d[i] for i in range(1, len(d))]
        dd = [i * d[i] for i in range(1, len(d))]
        for _ in range(60):
            f = mpmath.polyval(list(reversed(d)), c)
            fp = mpmath.polyval(list(reversed(dd)), c)
            if fp == 0:
                break
            step = f / fp
            c -= step
            if abs(step) <= abs(c) * mpmath.mpf(10) ** (-self.dps):
                break
        return c


def _germ_dict(F: BivariatePolynomial) -> dict:
    return {(Fraction(i), j): _mp(c) for (i, j), c in F.terms.items()}


def _contact(a: _Leaf, b: _Leaf) -> Fraction:
    for (ea, _, ia), (eb, _, ib) in zip(a.path, b.path):
        if ia != ib:
            if ea is None:
                return eb
            if eb is None:
                return ea
            return min(ea, eb)
    raise PuiseuxError("internal: roots never separated")


def expand_germ(
    F: BivariatePolynomial,
    dps: int = 50,
    max_dps: int = 800,
    truncation: Fraction | None = None,
    extra_terms: int = 3,
) -> GermExpansion:
    """Complete set of Puiseux branches of F at the origin."""
    if F.constant_term() != 0:
        raise PuiseuxError("origin is not on the curve")
    if not F:
        raise DegenerateGermError("zero polynomial")
    m = F.order()
    k = general_shear(F)
    G = shear(F, k)
    d = max(F.degree, 1)
    trunc = Fraction(truncation) if truncation is not None else Fraction(2 * d)
    bezout = Fraction(d * d)
    while True:
        with mpmath.workdps(dps):
            ex = _Expander(dps, extra_terms)
            H, lossy = ex.clean(_germ_dict(G), trunc)
            try:
                col = [j for (q, j) in H if q == 0]
                if min(col) != m:
                    raise _Retry("precision")
                ex.run(H, m, trunc, lossy, [])
                result = _assemble(ex.leaves, m, k, dps, trunc)
            except _Retry as r:
                if r.what == "truncation":
                    if trunc >= bezout:
                        raise ExtensionUnsupportedError("truncation exceeded the Bezout bound")
                    trunc = min(trunc * 2, bezout)
                else:
                    if dps >= max_dps:
                        raise ExtensionUnsupportedError("working precision exhausted")
                    dps *= 2
                continue
        return result


def _assemble(leaves: list[_Leaf], m: int, k: int, dps: int, trunc) -> GermExpansion:
    if len(leaves) != m:
        raise _Retry("precision")
    n = len(leaves)
    contact = {}
    for i, j in itertools.combinations(range(n), 2):
        contact[(i, j)] = contact[(j, i)] = _contact(leaves[i], leaves[j])
    # group conjugate roots into branches
    tol = mpmath.mpf(10) ** (-int(dps * 0.3))
    unassigned = set(range(n))
    groups = []
    for i in range(n):
        if i not in unassigned:
            continue
        leaf = leaves[i]
        e = leaf.ramification
        members = []
        for t in range(e):
            w = mpmath.expj(2 * mpmath.pi * t / e)
            target = [
                (ex, c * (w ** int(ex * e)) if ex is not None else c) for ex, c, _ in leaf.path[: leaf.sep_len]
            ]
            found = None
            for j in unassigned:
                other = leaves[j]
                if other.sep_len != leaf.sep_len:
                    continue
                ok = True
                for (ea, ca), (eb, cb, _) in zip(target, other.path[: other.sep_len]):
                    if ea != eb or abs(ca - cb) > tol * max(1, abs(ca)):
                        ok = False
                        break
                if ok:
                    found = j
                    break
            if found is None or found in members:
                raise _Retry("precision")
            members.append(found)
        for j in members:
            unassigned.discard(j)
        groups.append(members)

    branches = []
    for members in groups:
        leaf = leaves[members[0]]
        e = len(members)
        s = sum(contact[(a, b)] for a in members for b in members if a != b)
        twice_delta = s - e + 1
        if twice_delta.denominator != 1 or twice_delta.numerator % 2:
            raise _Retry("precision")
        terms = [(ex, complex(c)) for ex, c, _ in leaf.path if ex is not None]
        branches.append(
            PuiseuxBranch(
                ramification_index=leaf.ramification,
                terms=terms,
                multiplicity=e,
                tangent=_tangent(terms, k),
                delta=int(twice_delta) // 2,
                roots=members,
            )
        )
    inter = {}
    for (bi, A), (bj, B) in itertools.combinations(enumerate(branches), 2):
        s = sum(contact[(a, b)] for a in A.roots for b in B.roots)
        if s.denominator != 1:
            raise _Retry("precision")
        inter[(bi, bj)] = int(s)
    delta = sum(b.delta for b in branches) + sum(inter.values())
    return GermExpansion(k, m, branches, inter, delta, dps, trunc)


def _tangent(terms, k):
    """Tangent direction in the unsheared coordinates (x_orig = x + k*y)."""
    if terms and terms[0][0] == 1:
        c = terms[0][1]
        dx, dy = 1 + k * c, c
    else:
        dx, dy = 1, 0
    dx, dy = complex(dx), complex(dy)
    norm = (abs(dx) ** 2 + abs(dy) ** 2) ** 0.5
    dx, dy = dx / norm, dy / norm
    if abs(dx.imag) < 1e-12 and abs(dy.imag) < 1e-12:
        return (dx.real, dy.real)
    return (dx, dy)


def newton_puiseux(F: BivariatePolynomial, point=(0, 0), **kw) -> list[PuiseuxBranch]:
    """Branches of F at ``point`` (exact coordinates)."""
    x0, y0 = point
    G = F if (x0 == 0 and y0 == 0) else F.translate(x0, y0)
    if G.constant_term() != 0:
        raise PuiseuxError("point is not on the curve")
    return expand_germ(G, **kw).branches
