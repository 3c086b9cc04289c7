"""Exact sparse Laurent polynomials in one variable q, plus shift/twist classes.

Coefficients are Python ints, so arithmetic is arbitrary precision by
construction.  A polynomial is stored as an exponent -> coefficient map with
no zero entries; the canonical form is unique, and equality is dict equality.
"""

from __future__ import annotations

from typing import Iterable, Mapping


class LaurentPoly:
    """Integer Laurent polynomial in q, canonical (zero-free) sparse form."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, int] | None = None):
        self._terms: dict[int, int] = {}
        if terms:
            for e, c in terms.items():
                if c:
                    self._terms[int(e)] = int(c)

    @staticmethod
    def zero() -> "LaurentPoly":
        return LaurentPoly()

    @staticmethod
    def one() -> "LaurentPoly":
        return LaurentPoly({0: 1})

    @staticmethod
    def constant(c: int) -> "LaurentPoly":
        return LaurentPoly({0: c})

    @staticmethod
    def q_power(exponent: int, coefficient: int = 1) -> "LaurentPoly":
        return LaurentPoly({exponent: coefficient})

    # -- ring structure -------------------------------------------------

    @staticmethod
    def _coerce(x: "LaurentPoly | int") -> "LaurentPoly":
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, int):
            return LaurentPoly.constant(x)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            elif e in out:
                del out[e]
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: int) -> "LaurentPoly":
        return LaurentPoly.constant(other) - self

    def __mul__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                elif e in out:
                    del out[e]
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            raise ValueError("negative powers of a polynomial are not defined here")
        result = LaurentPoly.one()
        for _ in range(n):
            result = result * self
        return result

    # -- queries ---------------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def coefficient(self, exponent: int) -> int:
        return self._terms.get(exponent, 0)

    def eval_at_one(self) -> int:
        """Sum of all coefficients (the specialization q = 1)."""
        return sum(self._terms.values())

    def support(self) -> tuple[int, ...]:
        return tuple(sorted(self._terms))

    def min_exponent(self) -> int:
        if not self._terms:
            raise ValueError("the zero polynomial has no exponents")
        return min(self._terms)

    def max_exponent(self) -> int:
        if not self._terms:
            raise ValueError("the zero polynomial has no exponents")
        return max(self._terms)

    # -- wire format -----------------------------------------------------

    def to_pairs(self) -> list[list[int]]:
        """JSON form: [exponent, coefficient] pairs sorted by exponent."""
        return [[e, self._terms[e]] for e in sorted(self._terms)]

    @staticmethod
    def from_pairs(pairs: Iterable[Iterable[int]]) -> "LaurentPoly":
        out: dict[int, int] = {}
        for pair in pairs:
            e, c = pair
            out[int(e)] = out.get(int(e), 0) + int(c)
        return LaurentPoly(out)

    # -- rendering ---------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces: list[str] = []
        for e in sorted(self._terms):
            c = self._terms[e]
            mag = abs(c)
            if e == 0:
                body = str(mag)
            elif e == 1:
                body = "q" if mag == 1 else f"{mag}q"
            else:
                body = f"q^{e}" if mag == 1 else f"{mag}q^{e}"
            if not pieces:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"LaurentPoly({self._terms!r})"


class GrothendieckClass:
    """Formal sum of shift/twist tokens [n](m) with integer multiplicities.

    The Frobenius-trace specialization sends [n](m) to (-1)^n * q^(-m);
    tensoring classes adds the (shift, twist) pairs.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None):
        self._terms: dict[tuple[int, int], int] = {}
        if terms:
            for key, mult in terms.items():
                if mult:
                    shift, twist = key
                    self._terms[(int(shift), int(twist))] = int(mult)

    @staticmethod
    def unit() -> "GrothendieckClass":
        return GrothendieckClass({(0, 0): 1})

    @staticmethod
    def single(shift: int, twist: int, multiplicity: int = 1) -> "GrothendieckClass":
        return GrothendieckClass({(shift, twist): multiplicity})

    def __add__(self, other: "GrothendieckClass") -> "GrothendieckClass":
        if not isinstance(other, GrothendieckClass):
            return NotImplemented
        out = dict(self._terms)
        for key, mult in other._terms.items():
            s = out.get(key, 0) + mult
            if s:
                out[key] = s
            elif key in out:
                del out[key]
        return GrothendieckClass(out)

    def tensor(self, other: "GrothendieckClass") -> "GrothendieckClass":
        out: dict[tuple[int, int], int] = {}
        for (n1, m1), c1 in self._terms.items():
            for (n2, m2), c2 in other._terms.items():
                key = (n1 + n2, m1 + m2)
                s = out.get(key, 0) + c1 * c2
                if s:
                    out[key] = s
                elif key in out:
                    del out[key]
        return GrothendieckClass(out)

    def trace(self) -> LaurentPoly:
        """Frobenius trace: each [n](m) contributes (-1)^n q^(-m) times its multiplicity."""
        out: dict[int, int] = {}
        for (shift, twist), mult in self._terms.items():
            sign = -1 if shift % 2 else 1
            e = -twist
            s = out.get(e, 0) + sign * mult
            if s:
                out[e] = s
            elif e in out:
                del out[e]
        return LaurentPoly(out)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GrothendieckClass):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def to_pairs(self) -> list[list[int]]:
        """JSON form: [shift, twist, multiplicity] triples sorted by (shift, twist)."""
        return [[n, m, self._terms[(n, m)]] for n, m in sorted(self._terms)]

    def __repr__(self) -> str:
        return f"GrothendieckClass({self._terms!r})"
