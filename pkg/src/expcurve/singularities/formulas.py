"""Closed-form genera of the curves C_ab, with the table they are checked against.

Two variants are kept.  ``corrected`` matches every entry of the genus table
for a, b <= 5.  ``printed`` follows the case conditions as they were
published, which cannot produce the table (see the README).
"""

from __future__ import annotations

from fractions import Fraction

# (a, b) -> genus, a, b <= 5, a + b >= 2
GENUS_TABLE: dict[tuple[int, int], int] = {
    (0, 2): 0, (0, 3): 1, (0, 4): 4, (0, 5): 7,
    (1, 1): 0, (1, 2): 3, (1, 3): 6, (1, 4): 13, (1, 5): 18,
    (2, 0): 0, (2, 1): 3, (2, 2): 10, (2, 3): 15, (2, 4): 26, (2, 5): 33,
    (3, 0): 2, (3, 1): 7, (3, 2): 18, (3, 3): 25, (3, 4): 40, (3, 5): 49,
    (4, 0): 7, (4, 1): 14, (4, 2): 29, (4, 3): 38, (4, 4): 57, (4, 5): 68,
    (5, 0): 13, (5, 1): 22, (5, 2): 41, (5, 3): 52, (5, 4): 75, (5, 5): 88,
}


def _check(a: int, b: int) -> None:
    if a < 0 or b < 0 or a + b < 2:
        raise ValueError(f"no curve for (a, b) = ({a}, {b})")


def _quadratic_part(a: int, b: int) -> Fraction:
    F = Fraction
    if b % 2 == 0:
        return F(9, 8) * a * a + 3 * a * b + F(3, 4) * b * b - F(13, 4) * a - F(5, 2) * b
    return F(a * a) + 3 * a * b + F(3, 4) * b * b - F(7, 2) * a - 3 * b


def _odd_b_constant(a: int) -> Fraction:
    if a % 2 == 1:
        return Fraction(7, 4)
    return Fraction(13, 4) if a == 0 else Fraction(9, 4)


def genus_formula(a: int, b: int, variant: str = "corrected") -> int | None:
    """Genus of C_ab from the closed form.

    ``variant="printed"`` reads the published b-even cases literally (first
    matching condition wins) and returns None when no case applies.
    """
    _check(a, b)
    if variant not in ("corrected", "printed"):
        raise ValueError(f"unknown variant {variant!r}")
    q = _quadratic_part(a, b)
    if b % 2 == 1:
        const = _odd_b_constant(a)
    elif variant == "corrected":
        if a % 2 == 0:
            const = Fraction(2)
        else:
            const = Fraction(9, 8) if a % 4 == 1 else Fraction(13, 8)
    else:
        if a % 2 != 0:
            return None
        const = Fraction(2)
    g = q + const
    if g.denominator != 1:
        raise ArithmeticError(f"genus formula gave non-integer {g} at ({a}, {b})")
    return int(g)


def genus_cn(n: int, variant: str = "corrected") -> int:
    """Genus of C_n = C_{0,n}.

    For odd n the published closed form is (3n^2+1)/4; the corrected one is
    (3n^2-12n+13)/4, which agrees with the odd-b formula at a = 0.
    """
    if n < 2:
        raise ValueError("no curve C_n for n < 2")
    if n % 2 == 0:
        return (n - 2) * (3 * n - 4) // 4
    if variant == "printed":
        return (3 * n * n + 1) // 4
    return (3 * n * n - 12 * n + 13) // 4


def formula_discrepancies(a: int, b: int) -> list[dict]:
    """Cases where a published closed form disagrees with the corrected one."""
    out = []
    good = genus_formula(a, b)
    printed = genus_formula(a, b, "printed")
    if printed != good:
        out.append({"formula": "mixed", "printed": printed, "corrected": good})
    if a == 0:
        p = genus_cn(b, "printed")
        if p != good:
            out.append({"formula": "C_n", "printed": p, "corrected": good})
    return out
