"""Bi-monomial symbols sum c * z^a zbar^b w^c wbar^d on C^2.

This class carries the operator symbols, the holomorphic payload polynomials,
and every intermediate product appearing in the exact Gram computations.
"""
from __future__ import annotations

from dataclasses import dataclass

QuadTerm = tuple[complex, int, int, int, int]  # (coeff, a, b, c, d)


def _normalize(terms) -> tuple[QuadTerm, ...]:
    acc: dict[tuple[int, int, int, int], complex] = {}
    for coeff, a, b, c, d in terms:
        if min(a, b, c, d) < 0:
            raise ValueError(f"negative exponent in term {(coeff, a, b, c, d)}")
        key = (int(a), int(b), int(c), int(d))
        acc[key] = acc.get(key, 0.0 + 0.0j) + complex(coeff)
    kept = [(v, *k) for k, v in acc.items() if v != 0]
    kept.sort(key=lambda t: (t[1] + t[2] + t[3] + t[4], t[1:]))
    return tuple(kept)


@dataclass(frozen=True)
class MonomialSymbol:
    terms: tuple[QuadTerm, ...]

    @classmethod
    def from_terms(cls, terms) -> "MonomialSymbol":
        return cls(_normalize(terms))

    @classmethod
    def monomial(cls, coeff: complex, a: int = 0, b: int = 0, c: int = 0, d: int = 0):
        return cls.from_terms([(coeff, a, b, c, d)])

    @classmethod
    def zero(cls) -> "MonomialSymbol":
        return cls(())

    def conj(self) -> "MonomialSymbol":
        return MonomialSymbol.from_terms(
            [(v.conjugate(), b, a, d, c) for v, a, b, c, d in self.terms]
        )

    def __add__(self, other: "MonomialSymbol") -> "MonomialSymbol":
        return MonomialSymbol.from_terms(self.terms + other.terms)

    def __sub__(self, other: "MonomialSymbol") -> "MonomialSymbol":
        return self + (-1.0) * other

    def __mul__(self, other):
        if isinstance(other, MonomialSymbol):
            prod = [
                (v1 * v2, a1 + a2, b1 + b2, c1 + c2, d1 + d2)
                for v1, a1, b1, c1, d1 in self.terms
                for v2, a2, b2, c2, d2 in other.terms
            ]
            return MonomialSymbol.from_terms(prod)
        return MonomialSymbol.from_terms(
            [(v * other, a, b, c, d) for v, a, b, c, d in self.terms]
        )

    __rmul__ = __mul__

    @property
    def is_holomorphic(self) -> bool:
        return all(b == 0 and d == 0 for _, _, b, _, d in self.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def z_shift_bound(self) -> int:
        return max((abs(a - b) for _, a, b, _, _ in self.terms), default=0)

    def w_shift_bound(self) -> int:
        return max((abs(c - d) for _, _, _, c, d in self.terms), default=0)

    def restrict_horizontal(self, w0: complex) -> tuple[tuple[complex, int, int], ...]:
        """Substitute w = w0: one-variable terms (coeff, a, b) in z, aggregated."""
        acc: dict[tuple[int, int], complex] = {}
        w0 = complex(w0)
        for v, a, b, c, d in self.terms:
            val = v * w0**c * w0.conjugate() ** d
            acc[(a, b)] = acc.get((a, b), 0.0 + 0.0j) + val
        return tuple((v, a, b) for (a, b), v in acc.items() if v != 0)

    def restrict_vertical(self, z0: complex) -> tuple[tuple[complex, int, int], ...]:
        """Substitute z = z0: one-variable terms (coeff, c, d) in w, aggregated."""
        acc: dict[tuple[int, int], complex] = {}
        z0 = complex(z0)
        for v, a, b, c, d in self.terms:
            val = v * z0**a * z0.conjugate() ** b
            acc[(c, d)] = acc.get((c, d), 0.0 + 0.0j) + val
        return tuple((v, c, d) for (c, d), v in acc.items() if v != 0)

    def rotate_w(self, lam: complex) -> "MonomialSymbol":
        """Substitute w -> lam * w for |lam| = 1 (coordinate rotation)."""
        lam = complex(lam)
        return MonomialSymbol.from_terms(
            [
                (v * lam**c * lam.conjugate() ** d, a, b, c, d)
                for v, a, b, c, d in self.terms
            ]
        )

    def describe(self) -> list[dict]:
        return [
            {
                "coeff_re": v.real,
                "coeff_im": v.imag,
                "a": a,
                "b": b,
                "c": c,
                "d": d,
            }
            for v, a, b, c, d in self.terms
        ]


# Shortcut names accepted by the CLI and the experiment configs.
SYMBOL_SHORTCUTS: dict[str, MonomialSymbol] = {
    "0": MonomialSymbol.zero(),
    "1": MonomialSymbol.monomial(1.0),
    "z": MonomialSymbol.monomial(1.0, a=1),
    "zbar": MonomialSymbol.monomial(1.0, b=1),
    "w": MonomialSymbol.monomial(1.0, c=1),
    "wbar": MonomialSymbol.monomial(1.0, d=1),
    "zw": MonomialSymbol.monomial(1.0, a=1, c=1),
    "zwbar": MonomialSymbol.monomial(1.0, a=1, d=1),
    "zbarw": MonomialSymbol.monomial(1.0, b=1, c=1),
    "zbarwbar": MonomialSymbol.monomial(1.0, b=1, d=1),
    "zzbar": MonomialSymbol.monomial(1.0, a=1, b=1),
    "wwbar": MonomialSymbol.monomial(1.0, c=1, d=1),
    "z+zbar": MonomialSymbol.monomial(1.0, a=1) + MonomialSymbol.monomial(1.0, b=1),
    "w+wbar": MonomialSymbol.monomial(1.0, c=1) + MonomialSymbol.monomial(1.0, d=1),
    "zbar+wbar": MonomialSymbol.monomial(1.0, b=1) + MonomialSymbol.monomial(1.0, d=1),
}


def parse_symbol(spec) -> MonomialSymbol:
    """Build a MonomialSymbol from a shortcut name or a list of term mappings."""
    if isinstance(spec, MonomialSymbol):
        return spec
    if isinstance(spec, str):
        if spec in SYMBOL_SHORTCUTS:
            return SYMBOL_SHORTCUTS[spec]
        raise ValueError(f"unknown symbol shortcut {spec!r}")
    terms = []
    for entry in spec:
        coeff = complex(entry.get("coeff_re", 0.0), entry.get("coeff_im", 0.0))
        terms.append(
            (
                coeff,
                int(entry.get("a", 0)),
                int(entry.get("b", 0)),
                int(entry.get("c", 0)),
                int(entry.get("d", 0)),
            )
        )
    return MonomialSymbol.from_terms(terms)
