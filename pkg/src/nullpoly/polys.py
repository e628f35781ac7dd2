"""Exact integer polynomial arithmetic and coefficient-wise modular reduction.

Polynomials are immutable and carry arbitrary-precision integer coefficients
stored ascending by degree; the zero polynomial is the empty coefficient
tuple and reports degree ``None`` (a nonzero constant has degree 0, which is
a different thing and must stay distinguishable for the counting code).
"""
from __future__ import annotations

import re
from typing import Iterable, Iterator


class ParseError(ValueError):
    """Raised when a polynomial text form cannot be parsed."""


def _normalize(coeffs: Iterable[int]) -> tuple[int, ...]:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


class Polynomial:
    """An integer polynomial, ``coeffs[k]`` being the coefficient of x**k."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        object.__setattr__(self, "coeffs", _normalize(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls(())

    @classmethod
    def constant(cls, c: int) -> "Polynomial":
        return cls((c,))

    @classmethod
    def x(cls) -> "Polynomial":
        return cls((0, 1))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "Polynomial":
        """c * x**k"""
        if k < 0:
            raise ValueError("exponent must be nonnegative")
        return cls((0,) * k + (c,))

    @property
    def degree(self) -> int | None:
        """Degree over the integers; None for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        return isinstance(other, Polynomial) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out)

    def __neg__(self) -> "Polynomial":
        return Polynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, int):
            return Polynomial(tuple(c * other for c in self.coeffs))
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial(())
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return Polynomial(out)

    def __rmul__(self, other) -> "Polynomial":
        return self.__mul__(other)

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValueError("negative power")
        result = Polynomial((1,))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def shift(self, k: int) -> "Polynomial":
        """Multiply by x**k."""
        if not self.coeffs:
            return self
        return Polynomial((0,) * k + self.coeffs)

    def __call__(self, x: int) -> int:
        """Exact evaluation by Horner's scheme."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_mod(self, x: int, m: int) -> int:
        """self(x) mod m, keeping all intermediates below m**2."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % m
        return acc

    def __repr__(self) -> str:
        return f"Polynomial({list(self.coeffs)!r})"

    def __str__(self) -> str:
        return format_human(self)


def reduce_coeffs(f: Polynomial, m: int) -> Polynomial:
    """Canonical representative of f's coefficient-congruence class mod m.

    Every coefficient lands in [0, m); m = 1 collapses everything to 0.
    """
    if m < 1:
        raise ValueError("modulus must be >= 1")
    return Polynomial(tuple(c % m for c in f.coeffs))


def poly_congruent(f: Polynomial, g: Polynomial, m: int) -> bool:
    """Coefficient-wise congruence mod m (not the same as equal functions)."""
    if m < 1:
        raise ValueError("modulus must be >= 1")
    a, b = f.coeffs, g.coeffs
    if len(a) < len(b):
        a, b = b, a
    return all((a[i] - (b[i] if i < len(b) else 0)) % m == 0 for i in range(len(a)))


def deg_mod(f: Polynomial, m: int) -> int | None:
    """Largest k with coeffs[k] not ≡ 0 (mod m); None if f ≡ 0 mod m."""
    if m < 1:
        raise ValueError("modulus must be >= 1")
    for k in range(len(f.coeffs) - 1, -1, -1):
        if f.coeffs[k] % m != 0:
            return k
    return None


def is_monic_mod(f: Polynomial, m: int) -> bool:
    d = deg_mod(f, m)
    return d is not None and f.coeffs[d] % m == 1 % m


def divmod_monic(f: Polynomial, g: Polynomial, m: int) -> tuple[Polynomial, Polynomial]:
    """Long division of f by a g that is monic mod m, all arithmetic mod m.

    Returns (q, r) with f ≡ g*q + r coefficient-wise mod m and
    deg_mod(r, m) < deg_mod(g, m). Valid only because g's leading
    coefficient is a unit (≡ 1); raises ValueError otherwise.
    """
    if m < 1:
        raise ValueError("modulus must be >= 1")
    dg = deg_mod(g, m)
    if dg is None:
        raise ValueError("division by a polynomial that is zero mod m")
    if g.coeffs[dg] % m != 1 % m:
        raise ValueError("divisor is not monic mod m")
    gred = [c % m for c in g.coeffs[: dg + 1]]
    rem = [c % m for c in f.coeffs]
    if len(rem) <= dg:
        return Polynomial(()), Polynomial(rem)
    quot = [0] * (len(rem) - dg)
    for k in range(len(rem) - 1, dg - 1, -1):
        c = rem[k]
        if c:
            quot[k - dg] = c
            for i in range(dg + 1):
                rem[k - dg + i] = (rem[k - dg + i] - c * gred[i]) % m
    return Polynomial(quot), Polynomial(rem[:dg])


_TERM_RE = re.compile(
    r"\s*(?P<sign>[+-]?)\s*(?:"
    r"(?P<coeff>\d+)\s*\*?\s*(?P<var1>x)(?:\s*\^\s*(?P<exp1>\d+))?"
    r"|(?P<var2>x)(?:\s*\^\s*(?P<exp2>\d+))?"
    r"|(?P<const>\d+)"
    r")\s*"
)


def parse_polynomial(text: str) -> Polynomial:
    """Parse either text form: CSV coefficients ascending degree, or human.

    "0,-2,3,-2,1" and "x^4-2x^3+3x^2-2x" denote the same polynomial.
    A bare integer is a constant in both forms.
    """
    s = text.strip()
    if not s:
        raise ParseError("empty polynomial text")
    if "," in s:
        try:
            return Polynomial(tuple(int(p.strip()) for p in s.split(",")))
        except ValueError as e:
            raise ParseError(f"bad coefficient list: {text!r}") from e
    if "x" not in s:
        try:
            return Polynomial((int(s),))
        except ValueError as e:
            raise ParseError(f"bad constant: {text!r}") from e
    pos = 0
    terms: dict[int, int] = {}
    first = True
    while pos < len(s):
        match = _TERM_RE.match(s, pos)
        if not match or match.end() == pos:
            raise ParseError(f"bad polynomial text at {s[pos:]!r}")
        sign = match.group("sign")
        if not sign and not first:
            raise ParseError(f"missing +/- before {s[match.start():]!r}")
        mult = -1 if sign == "-" else 1
        if match.group("const") is not None:
            k, c = 0, int(match.group("const"))
        elif match.group("coeff") is not None:
            c = int(match.group("coeff"))
            k = int(match.group("exp1")) if match.group("exp1") else 1
        else:
            c = 1
            k = int(match.group("exp2")) if match.group("exp2") else 1
        terms[k] = terms.get(k, 0) + mult * c
        pos = match.end()
        first = False
    size = max(terms) + 1
    coeffs = [0] * size
    for k, c in terms.items():
        coeffs[k] = c
    return Polynomial(coeffs)


def format_csv(f: Polynomial) -> str:
    if not f.coeffs:
        return "0"
    return ",".join(str(c) for c in f.coeffs)


def format_human(f: Polynomial) -> str:
    if not f.coeffs:
        return "0"
    parts: list[str] = []
    for k in range(len(f.coeffs) - 1, -1, -1):
        c = f.coeffs[k]
        if c == 0:
            continue
        sign = "-" if c < 0 else ("+" if parts else "")
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            var = "x" if k == 1 else f"x^{k}"
            body = var if mag == 1 else f"{mag}{var}"
        parts.append(sign + body)
    return "".join(parts)


def all_polynomials(m: int, max_degree: int) -> Iterator[Polynomial]:
    """Every reduced polynomial of degree <= max_degree mod m, one per class."""
    if m < 1:
        raise ValueError("modulus must be >= 1")
    coeffs = [0] * (max_degree + 1)
    while True:
        yield Polynomial(coeffs)
        i = 0
        while i <= max_degree:
            coeffs[i] += 1
            if coeffs[i] < m:
                break
            coeffs[i] = 0
            i += 1
        else:
            return
