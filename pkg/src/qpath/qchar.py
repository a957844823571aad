"""q-characters of fundamental modules as sums over admissible paths.

Each admissible path contributes one monomial, read off its corners: upper
corners give positive Y-factors, lower corners inverse factors, with the
level pushed up by 2 in the right half of the diagram (strictly right of
column n for upper corners, from column n on for lower ones).  The
character is the coefficient-1 sum of these monomials.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cartan import CartanC, a_variable
from .laurent import LaurentMonomial, LaurentPoly, YIndex
from .paths import (
    UPPER,
    Path,
    PathContext,
    apply_lower,
    bar,
    can_lower,
    corners,
    enumerate_admissible,
    is_admissible,
)


def monomial_of_path(p: Path) -> LaurentMonomial:
    """The Y-monomial attached to a path by its corner data."""
    n = p.ctx.n
    factors = []
    for c in corners(p):
        if c.kind == UPPER:
            factors.append((YIndex(bar(c.r, n), c.ell + 2 * (c.r > n)), 1))
        else:
            factors.append((YIndex(bar(c.r, n), c.ell + 2 * (c.r >= n)), -1))
    return LaurentMonomial(factors)


@dataclass(frozen=True)
class QCharacter:
    """A fundamental-module character together with its path witnesses.

    pairs records (path, monomial) in enumeration order; poly is the sum
    of the monomials with coefficient 1 each.  Keeping the bijection makes
    thinness, component checks and diagram rendering one lookup away.
    """

    ctx: PathContext
    poly: LaurentPoly
    pairs: tuple[tuple[Path, LaurentMonomial], ...]

    def monomials(self) -> list[LaurentMonomial]:
        return [m for _, m in self.pairs]

    def as_dict(self) -> dict[Path, LaurentMonomial]:
        return dict(self.pairs)


def q_character(ctx: PathContext) -> QCharacter:
    """Sum the path monomials over all admissible paths of the context."""
    pairs = tuple((p, monomial_of_path(p)) for p in enumerate_admissible(ctx))
    poly = LaurentPoly.from_monomials(m for _, m in pairs)
    return QCharacter(ctx, poly, pairs)


def verify_thin(ctx: PathContext) -> bool:
    """True iff distinct admissible paths carry distinct monomials."""
    ms = [monomial_of_path(p) for p in enumerate_admissible(ctx)]
    return len(set(ms)) == len(ms)


def dominant_monomials(poly: LaurentPoly) -> list[LaurentMonomial]:
    """All dominant monomials of a polynomial, found by scanning every term."""
    return [m for m in poly.monomials() if m.is_dominant()]


def antidominant_monomials(poly: LaurentPoly) -> list[LaurentMonomial]:
    return [m for m in poly.monomials() if m.is_antidominant()]


def move_level(j: int, ell: int, n: int) -> int:
    """Level of the A-variable exchanged by a lowering move at (j, ell).

    The shift is ell + 1 at the middle column j = n (where the long root
    doubles the A-spacing) and ell + 2 strictly right of it; calibrated
    exhaustively against the rank-2..4 move sweeps.
    """
    return ell + (j == n) + 2 * (j > n)


def move_ratio_check(p: Path, j: int, ell: int) -> bool:
    """Check m(lowered path) = m(p) * A[bar(j), move_level]^-1 exactly.

    Both p and its lowering must be admissible; violating either
    precondition raises.
    """
    if not can_lower(p, j, ell):
        raise ValueError(f"path cannot be lowered at (j={j}, ell={ell})")
    q = apply_lower(p, j, ell)
    if not (is_admissible(p) and is_admissible(q)):
        raise ValueError("move ratio is defined between admissible paths")
    n = p.ctx.n
    c = CartanC(n)
    expected = monomial_of_path(p) * a_variable(c, bar(j, n), move_level(j, ell, n)).inverse()
    return monomial_of_path(q) == expected


def to_json_dict(qc: QCharacter) -> dict:
    """JSON-ready view of a character, one entry per path in enumeration order."""
    return {
        "type": "C",
        "n": qc.ctx.n,
        "i": qc.ctx.i,
        "k": qc.ctx.k,
        "monomials": [
            {"coeff": 1, "factors": m.to_obj(), "path": list(p.heights)}
            for p, m in qc.pairs
        ],
    }


def from_json_dict(obj: dict, check: bool = True) -> QCharacter:
    """Rebuild a QCharacter from its JSON form, revalidating the witnesses."""
    if obj.get("type") != "C":
        raise ValueError(f"unsupported type tag {obj.get('type')!r}")
    ctx = PathContext(obj["n"], obj["i"], obj["k"])
    pairs = []
    for entry in obj["monomials"]:
        if entry["coeff"] != 1:
            raise ValueError("character coefficients must be 1")
        p = Path(ctx, tuple(entry["path"]))
        m = LaurentMonomial.from_obj(entry["factors"])
        if check and monomial_of_path(p) != m:
            raise ValueError(f"stored monomial {m} does not match path {p.heights}")
        pairs.append((p, m))
    poly = LaurentPoly.from_monomials(m for _, m in pairs)
    return QCharacter(ctx, poly, tuple(pairs))
