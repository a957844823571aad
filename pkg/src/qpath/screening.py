"""Screening operators with a canonical normal form, as a kernel oracle.

The i-th screening operator is the derivation sending Y[i,l] to
Y[i,l]*S[i,l] and every other variable to zero, with values in the free
module on generators S[i,l] (integer levels only) modulo the rewriting
rule S[i, l + 2*d_i] = A[i, l + d_i] * S[i, l].  Rewriting every generator
down to the least level of its residue class mod 2*d_i is forced at each
step, so the normal form is canonical, and membership in ker S_i is
decidable as "normal form = 0".  This gives an independent certificate
for path-model characters: they must lie in every kernel.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable

from .cartan import CartanC, a_variable
from .laurent import ONE, LaurentPoly
from .paths import Path, PathContext, j_components
from .qchar import monomial_of_path


@dataclass(frozen=True)
class ScreeningElement:
    """A finite sum of P_l * S[node, l] terms with polynomial coefficients."""

    node: int
    terms: tuple[tuple[int, LaurentPoly], ...]

    def __post_init__(self) -> None:
        levels = [l for l, _ in self.terms]
        if len(set(levels)) != len(levels):
            raise ValueError("duplicate generator levels")
        if any(p.is_zero() for _, p in self.terms):
            raise ValueError("zero coefficients must be dropped")
        object.__setattr__(self, "terms", tuple(sorted(self.terms)))

    @classmethod
    def build(cls, node: int, coeffs: dict[int, LaurentPoly]) -> "ScreeningElement":
        return cls(node, tuple((l, p) for l, p in coeffs.items() if not p.is_zero()))

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, level: int) -> LaurentPoly:
        for l, p in self.terms:
            if l == level:
                return p
        return LaurentPoly.zero()

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"({p})*S[{self.node},{l}]" for l, p in self.terms)


def screening_apply(c: CartanC, i: int, p: LaurentPoly) -> ScreeningElement:
    """Image of a polynomial under the i-th derivation, before rewriting.

    A monomial with exponent u on Y[i,l] contributes u * monomial to the
    coefficient of S[i,l]; that is the Leibniz rule collapsed onto powers.
    """
    c._check_node(i)
    coeffs: dict[int, LaurentPoly] = {}
    for m, cm in p.items():
        for idx, u in m.factors:
            if idx.node != i:
                continue
            prev = coeffs.get(idx.level, LaurentPoly.zero())
            coeffs[idx.level] = prev + LaurentPoly({m: cm * u})
    return ScreeningElement.build(i, coeffs)


def reduce(e: ScreeningElement, c: CartanC) -> ScreeningElement:
    """Canonical normal form: one generator per residue class mod 2*d_i.

    Every S[i,l] rewrites downward to the least level present in its
    class, picking up one A[i, l - d_i] factor per step of size 2*d_i.
    Each step is forced, so the result does not depend on the order.
    """
    i = e.node
    step = 2 * c.d(i)
    classes: dict[int, list[tuple[int, LaurentPoly]]] = {}
    for l, p in e.terms:
        classes.setdefault(l % step, []).append((l, p))
    coeffs: dict[int, LaurentPoly] = {}
    for group in classes.values():
        group.sort()
        k_min = group[0][0]
        total = LaurentPoly.zero()
        ladder = LaurentPoly({})  # running product of A-factors from k_min up
        from .laurent import ONE

        ladder_mono = ONE
        level = k_min
        for l, p in group:
            while level < l:
                ladder_mono = ladder_mono * a_variable(c, i, level + c.d(i))
                level += step
            total = total + p * ladder_mono
        if not total.is_zero():
            coeffs[k_min] = total
    return ScreeningElement.build(i, coeffs)


def in_kernel(c: CartanC, i: int, p: LaurentPoly) -> bool:
    """True iff p maps to zero in the quotient module of the i-th operator."""
    return reduce(screening_apply(c, i, p), c).is_zero()


@dataclass(frozen=True)
class ComponentCheck:
    """One move-connectivity block with its kernel verdict."""

    paths: tuple[Path, ...]
    total: LaurentPoly
    passed: bool
    residue: ScreeningElement | None

    @property
    def size(self) -> int:
        return len(self.paths)


@dataclass(frozen=True)
class KernelCertificate:
    """Per-node certificate: every j-block's monomial sum is in ker S_j."""

    ctx: PathContext
    j: int
    checks: tuple[ComponentCheck, ...]

    @property
    def passed(self) -> bool:
        return all(ch.passed for ch in self.checks)

    @property
    def size_histogram(self) -> dict[int, int]:
        return dict(sorted(Counter(ch.size for ch in self.checks).items()))

    @property
    def failures(self) -> tuple[ComponentCheck, ...]:
        return tuple(ch for ch in self.checks if not ch.passed)

    def to_json_dict(self) -> dict:
        return {
            "n": self.ctx.n,
            "i": self.ctx.i,
            "k": self.ctx.k,
            "j": self.j,
            "components": len(self.checks),
            "size_histogram": {str(s): c for s, c in self.size_histogram.items()},
            "passed": self.passed,
            "failures": [
                {
                    "paths": [list(p.heights) for p in ch.paths],
                    "sum": ch.total.to_obj(),
                    "residue": None if ch.residue is None else str(ch.residue),
                }
                for ch in self.failures
            ],
        }


def component_kernel_certificate(ctx: PathContext, j: int) -> KernelCertificate:
    """Check every j-component's monomial sum against the j-th kernel."""
    c = CartanC(ctx.n)
    checks = []
    for block in j_components(ctx, j):
        total = LaurentPoly.from_monomials(monomial_of_path(p) for p in block)
        residue = reduce(screening_apply(c, j, total), c)
        ok = residue.is_zero()
        checks.append(
            ComponentCheck(block, total, ok, None if ok else residue)
        )
    return KernelCertificate(ctx, j, tuple(checks))
