"""gcd, squarefree decomposition and subresultant resultants."""

from __future__ import annotations

from .upoly import UPoly


def gcd_field(p: UPoly, q: UPoly) -> UPoly:
    """Monic gcd of univariate polynomials over a field (Q or Q(i))."""
    a, b = p, q
    while b:
        a, b = b, a % b
    return a.monic() if a else UPoly()


def squarefree_part(p: UPoly) -> UPoly:
    """p / gcd(p, p'), made monic."""
    if p.degree <= 0:
        return p.monic() if p else p
    g = gcd_field(p, p.derivative())
    return (p // g).monic()


def is_squarefree(p: UPoly) -> bool:
    return gcd_field(p, p.derivative()).degree <= 0


def squarefree_decomposition(p: UPoly) -> list[tuple[UPoly, int]]:
    """Yun's algorithm: p = lc * prod a_i^i, returns [(a_i, i)] with deg a_i > 0."""
    out = []
    if p.degree <= 0:
        return out
    dp = p.derivative()
    a = gcd_field(p, dp)
    b = p // a
    c = dp // a
    d = c - b.derivative()
    i = 1
    while b.degree > 0:
        a = gcd_field(b, d)
        b = b // a
        c = d // a
        if a.degree > 0:
            out.append((a.monic(), i))
        d = c - b.derivative()
        i += 1
    return out


def resultant(A: UPoly, B: UPoly):
    """Resultant over an integral domain via the subresultant PRS.

    Convention: Res(A, B) = lc(A)^deg B * prod B(roots of A); swapping the
    arguments multiplies by (-1)^(deg A * deg B).
    """
    if not A or not B:
        raise ValueError("resultant of zero polynomial")
    s = 1
    if A.degree < B.degree:
        A, B = B, A
        if A.degree % 2 == 1 and B.degree % 2 == 1:
            s = -s
    if B.degree == 0:
        return s * B.lc() ** A.degree
    g = 1
    h = 1
    while True:
        delta = A.degree - B.degree
        if A.degree % 2 == 1 and B.degree % 2 == 1:
            s = -s
        R = A.prem(B)
        if not R:
            return 0
        A = B
        B = _exquo(R, g * h ** delta)
        g = A.lc()
        h = _exquo_scalar(g ** delta, h ** (delta - 1)) if delta >= 1 else h
        if B.degree == 0:
            dA = A.degree
            h = _exquo_scalar(B.lc() ** dA, h ** (dA - 1)) if dA >= 1 else h
            return s * h


def _exquo(R: UPoly, d):
    return R.cdiv(d)


def _exquo_scalar(a, b):
    from .upoly import _cdiv

    if isinstance(a, UPoly) and isinstance(b, UPoly):
        return a.exquo(b)
    return _cdiv(a, b)


def primitive_prs_gcd(p: UPoly, q: UPoly, content_gcd, content_of):
    """gcd over D[y] for a gcd domain D, given content helpers for D."""
    if not p:
        return q
    if not q:
        return p
    cp = content_of(p)
    cq = content_of(q)
    c = content_gcd(cp, cq)
    a = p.cdiv(cp)
    b = q.cdiv(cq)
    if a.degree < b.degree:
        a, b = b, a
    while b.degree > 0:
        r = a.prem(b)
        if not r:
            break
        a, b = b, r.cdiv(content_of(r))
    if b.degree == 0:
        return UPoly([c])
    return b.cdiv(content_of(b)).scale(c)
