"""Exact integer Laurent arithmetic in the doubly indexed variable family Y[i,k].

Monomials are finite products of Y[i,k]^e with integer exponents, stored
sparsely; polynomials are finite integer combinations of monomials.  The
variable family is unbounded in both the node index i and the level k, so
computations at different ranks can share these types.  Everything here is
immutable and pure.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping, NamedTuple


class YIndex(NamedTuple):
    """Index of a single variable: Dynkin node and integer spectral level."""

    node: int
    level: int


FactorList = tuple[tuple[YIndex, int], ...]


def _accumulate(pairs: Iterable[tuple[YIndex, int]]) -> dict[YIndex, int]:
    exps: dict[YIndex, int] = {}
    for idx, e in pairs:
        idx = YIndex(*idx)
        new = exps.get(idx, 0) + e
        if new:
            exps[idx] = new
        else:
            exps.pop(idx, None)
    return exps


class LaurentMonomial:
    """A product of Y[i,k]^e factors in canonical sparse form.

    The canonical form stores only nonzero exponents, sorted by (node,
    level); two monomials are equal iff their factor tuples are equal.
    The empty product is the monomial 1.
    """

    __slots__ = ("_factors",)

    def __init__(self, exps: Mapping[YIndex, int] | Iterable[tuple[YIndex, int]] = ()):
        items = exps.items() if isinstance(exps, Mapping) else exps
        acc = _accumulate(items)
        object.__setattr__(self, "_factors", tuple(sorted(acc.items())))

    @property
    def factors(self) -> FactorList:
        return self._factors

    def exponent(self, node: int, level: int) -> int:
        for idx, e in self._factors:
            if idx == (node, level):
                return e
        return 0

    def is_one(self) -> bool:
        return not self._factors

    def is_dominant(self) -> bool:
        return all(e >= 0 for _, e in self._factors)

    def is_antidominant(self) -> bool:
        return all(e <= 0 for _, e in self._factors)

    def shift(self, t: int) -> "LaurentMonomial":
        """Relabel every Y[i,k] as Y[i,k+t]."""
        return LaurentMonomial(
            [(YIndex(idx.node, idx.level + t), e) for idx, e in self._factors]
        )

    def inverse(self) -> "LaurentMonomial":
        return LaurentMonomial([(idx, -e) for idx, e in self._factors])

    def __mul__(self, other: "LaurentMonomial") -> "LaurentMonomial":
        if not isinstance(other, LaurentMonomial):
            return NotImplemented
        return LaurentMonomial(self._factors + other._factors)

    def __pow__(self, e: int) -> "LaurentMonomial":
        return LaurentMonomial([(idx, u * e) for idx, u in self._factors])

    def sort_key(self) -> tuple[tuple[int, int, int], ...]:
        return tuple((idx.node, idx.level, e) for idx, e in self._factors)

    def __lt__(self, other: "LaurentMonomial") -> bool:
        return self.sort_key() < other.sort_key()

    def __eq__(self, other: object) -> bool:
        return isinstance(other, LaurentMonomial) and self._factors == other._factors

    def __hash__(self) -> int:
        return hash(self._factors)

    def __str__(self) -> str:
        if not self._factors:
            return "1"
        # display convention: positive powers first, then negative, each
        # block sorted by (node, level)
        parts = []
        for idx, e in self.render_factors():
            head = f"Y[{idx.node},{idx.level}]"
            parts.append(head if e == 1 else f"{head}^{e}")
        return "*".join(parts)

    def render_factors(self) -> FactorList:
        pos = [(idx, e) for idx, e in self._factors if e > 0]
        neg = [(idx, e) for idx, e in self._factors if e < 0]
        return tuple(pos + neg)

    def __repr__(self) -> str:
        return f"LaurentMonomial({str(self)!r})"

    def to_obj(self) -> list[list[int]]:
        """JSON-ready factor list [[node, level, exponent], ...]."""
        return [[idx.node, idx.level, e] for idx, e in self.render_factors()]

    @classmethod
    def from_obj(cls, obj: Iterable[Iterable[int]]) -> "LaurentMonomial":
        return cls([(YIndex(i, k), e) for i, k, e in obj])


def Y(node: int, level: int, exp: int = 1) -> LaurentMonomial:
    """The single-variable monomial Y[node, level]^exp."""
    return LaurentMonomial([(YIndex(node, level), exp)])


ONE = LaurentMonomial()


class LaurentPoly:
    """A finite integer combination of monomials, in canonical sparse form."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[LaurentMonomial, int] | Iterable[tuple[LaurentMonomial, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[LaurentMonomial, int] = {}
        for m, c in items:
            new = acc.get(m, 0) + c
            if new:
                acc[m] = new
            else:
                acc.pop(m, None)
        object.__setattr__(self, "_terms", acc)

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def from_monomials(cls, monomials: Iterable[LaurentMonomial]) -> "LaurentPoly":
        return cls([(m, 1) for m in monomials])

    def is_zero(self) -> bool:
        return not self._terms

    def coeff(self, m: LaurentMonomial) -> int:
        return self._terms.get(m, 0)

    def monomials(self) -> list[LaurentMonomial]:
        return sorted(self._terms, key=LaurentMonomial.sort_key)

    def items(self) -> Iterator[tuple[LaurentMonomial, int]]:
        return iter(sorted(self._terms.items(), key=lambda t: t[0].sort_key()))

    def __len__(self) -> int:
        return len(self._terms)

    def __contains__(self, m: LaurentMonomial) -> bool:
        return m in self._terms

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        acc = dict(self._terms)
        for m, c in other._terms.items():
            new = acc.get(m, 0) + c
            if new:
                acc[m] = new
            else:
                acc.pop(m, None)
        return LaurentPoly(acc)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({m: -c for m, c in self._terms.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly | LaurentMonomial | int") -> "LaurentPoly":
        if isinstance(other, int):
            return LaurentPoly({m: c * other for m, c in self._terms.items()})
        if isinstance(other, LaurentMonomial):
            return LaurentPoly({m * other: c for m, c in self._terms.items()})
        if isinstance(other, LaurentPoly):
            acc: dict[LaurentMonomial, int] = {}
            for m1, c1 in self._terms.items():
                for m2, c2 in other._terms.items():
                    m = m1 * m2
                    new = acc.get(m, 0) + c1 * c2
                    if new:
                        acc[m] = new
                    else:
                        acc.pop(m, None)
            return LaurentPoly(acc)
        return NotImplemented

    __rmul__ = __mul__

    def shift_levels(self, t: int) -> "LaurentPoly":
        """Relabel every Y[i,k] as Y[i,k+t] in every term."""
        return LaurentPoly({m.shift(t): c for m, c in self._terms.items()})

    def __eq__(self, other: object) -> bool:
        return isinstance(other, LaurentPoly) and self._terms == other._terms

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for m, c in self.items():
            if c == 1:
                term = str(m)
            elif c == -1:
                term = f"-{m}"
            else:
                term = f"{c}*{m}"
            parts.append(term)
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly({str(self)!r})"

    def to_obj(self) -> list[list]:
        """JSON-ready term list [[coeff, factors], ...] in canonical order."""
        return [[c, m.to_obj()] for m, c in self.items()]

    @classmethod
    def from_obj(cls, obj: Iterable) -> "LaurentPoly":
        return cls([(LaurentMonomial.from_obj(factors), c) for c, factors in obj])
