"""Exact sparse polynomials in x, y, b and the Tamari counting machinery.

The three variables have fixed meanings throughout the package: y grades by
size (number of nodes / poset vertices), x by the left-border statistic of
the lower tree, and b by its number of nodes with a non-empty right subtree.
Coefficients are exact Python integers; zero coefficients are never stored.

Rendering lists terms by ascending (y-degree, x-degree, b-degree); each term
prints as ``c*x^a*y^b*b^c`` with unit coefficients and exponents elided, and
the output parses back with :func:`parse_polynomial`.
"""

from __future__ import annotations

from math import factorial

from .trees import BinaryTree

Key = tuple[int, int, int]  # (x-degree, y-degree, b-degree)


class Polynomial:
    """Immutable sparse polynomial in x, y, b with integer coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: dict[Key, int] | None = None):
        clean = {}
        if terms:
            for key, coeff in terms.items():
                if coeff:
                    ex, ey, eb = key
                    if ex < 0 or ey < 0 or eb < 0:
                        raise ValueError(f"negative exponent in {key}")
                    clean[key] = coeff
        self._terms = clean

    @staticmethod
    def monomial(coeff: int, ex: int = 0, ey: int = 0, eb: int = 0) -> Polynomial:
        return Polynomial({(ex, ey, eb): coeff})

    def terms(self) -> list[tuple[Key, int]]:
        """Term list in canonical order (ascending y, x, b degrees)."""
        return sorted(self._terms.items(),
                      key=lambda item: (item[0][1], item[0][0], item[0][2]))

    def coefficient(self, ex: int = 0, ey: int = 0, eb: int = 0) -> int:
        return self._terms.get((ex, ey, eb), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = Polynomial.monomial(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other) -> Polynomial:
        if isinstance(other, int):
            other = Polynomial.monomial(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        terms = dict(self._terms)
        for key, coeff in other._terms.items():
            terms[key] = terms.get(key, 0) + coeff
        return Polynomial(terms)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial({key: -c for key, c in self._terms.items()})

    def __sub__(self, other) -> Polynomial:
        return self + (-other if isinstance(other, Polynomial)
                       else Polynomial.monomial(-other))

    def __rsub__(self, other) -> Polynomial:
        return Polynomial.monomial(other) - self

    def __mul__(self, other) -> Polynomial:
        if isinstance(other, int):
            if other == 0:
                return ZERO
            return Polynomial({k: c * other for k, c in self._terms.items()})
        if not isinstance(other, Polynomial):
            return NotImplemented
        terms: dict[Key, int] = {}
        for (x1, y1, b1), c1 in self._terms.items():
            for (x2, y2, b2), c2 in other._terms.items():
                key = (x1 + x2, y1 + y2, b1 + b2)
                terms[key] = terms.get(key, 0) + c1 * c2
        return Polynomial(terms)

    __rmul__ = __mul__

    def subs(self, x: int | None = None, y: int | None = None,
             b: int | None = None) -> Polynomial:
        """Substitute integer values for any of the variables."""
        terms: dict[Key, int] = {}
        for (ex, ey, eb), coeff in self._terms.items():
            if x is not None:
                coeff *= x ** ex
                ex = 0
            if y is not None:
                coeff *= y ** ey
                ey = 0
            if b is not None:
                coeff *= b ** eb
                eb = 0
            key = (ex, ey, eb)
            terms[key] = terms.get(key, 0) + coeff
        return Polynomial(terms)

    def constant(self) -> int:
        """The value of a constant polynomial."""
        extra = [k for k in self._terms if k != (0, 0, 0)]
        if extra:
            raise ValueError(f"polynomial is not constant: {self}")
        return self._terms.get((0, 0, 0), 0)

    def truncate_y(self, max_degree: int) -> Polynomial:
        """Drop terms of y-degree greater than ``max_degree``."""
        return Polynomial({k: c for k, c in self._terms.items()
                           if k[1] <= max_degree})

    def y_coefficient(self, degree: int) -> Polynomial:
        """The coefficient of y^degree, as a polynomial in x and b."""
        return Polynomial({(ex, 0, eb): c
                           for (ex, ey, eb), c in self._terms.items()
                           if ey == degree})

    def max_x_degree(self) -> int:
        if not self._terms:
            raise ValueError("the zero polynomial has no degree")
        return max(ex for ex, _, _ in self._terms)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        rendered = []
        for (ex, ey, eb), coeff in self.terms():
            parts = []
            for name, exp in (("x", ex), ("y", ey), ("b", eb)):
                if exp == 1:
                    parts.append(name)
                elif exp > 1:
                    parts.append(f"{name}^{exp}")
            magnitude = abs(coeff)
            if magnitude != 1 or not parts:
                parts.insert(0, str(magnitude))
            rendered.append((coeff < 0, "*".join(parts)))
        first_neg, first = rendered[0]
        pieces = [("-" if first_neg else "") + first]
        for negative, text in rendered[1:]:
            pieces.append(("- " if negative else "+ ") + text)
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"Polynomial({self})"


ZERO = Polynomial()
ONE = Polynomial.monomial(1)
X = Polynomial.monomial(1, ex=1)
Y = Polynomial.monomial(1, ey=1)
B = Polynomial.monomial(1, eb=1)


def parse_polynomial(text: str) -> Polynomial:
    """Inverse of ``str(polynomial)``; accepts any +/- separated term list."""
    s = text.replace("-", "+-").replace(" ", "")
    terms: dict[Key, int] = {}
    for chunk in s.split("+"):
        if not chunk:
            continue
        sign = 1
        if chunk.startswith("-"):
            sign = -1
            chunk = chunk[1:]
        coeff, ex, ey, eb = 1, 0, 0, 0
        for factor in chunk.split("*"):
            if factor.isdigit():
                coeff *= int(factor)
                continue
            name, _, exp = factor.partition("^")
            if name not in ("x", "y", "b") or (exp and not exp.isdigit()):
                raise ValueError(f"cannot parse polynomial factor {factor!r}")
            power = int(exp) if exp else 1
            if name == "x":
                ex += power
            elif name == "y":
                ey += power
            else:
                eb += power
        key = (ex, ey, eb)
        terms[key] = terms.get(key, 0) + sign * coeff
    return Polynomial(terms)


def delta(g: Polynomial) -> Polynomial:
    """The slope operator (g - g|x=1) / (x - 1), exact on polynomials.

    Acts on x only: a term x^k maps to 1 + x + ... + x^(k-1); y and b ride
    along as coefficients.
    """
    terms: dict[Key, int] = {}
    for (ex, ey, eb), coeff in g._terms.items():
        for i in range(ex):
            key = (i, ey, eb)
            terms[key] = terms.get(key, 0) + coeff
    return Polynomial(terms)


def bilinear_B(f: Polynomial, g: Polynomial) -> Polynomial:
    """The interval-composition form xy * f * (x*g - g|x=1) / (x - 1)."""
    return X * Y * f * (g + delta(g))


def bilinear_B_bivar(f: Polynomial, g: Polynomial) -> Polynomial:
    """The b-refined form y*(xb*f*(x*g - g|x=1)/(x-1) - bxfg + xfg).

    Algebraically equal to y * x * f * (g + b*delta(g)); at b=1 it collapses
    to :func:`bilinear_B`.
    """
    return Y * X * f * (g + B * delta(g))


def tamari_poly(tree: BinaryTree) -> Polynomial:
    """Polynomial in x counting the trees below ``tree`` by left border.

    Recursion: the empty tree gives 1, and a node with subtree polynomials
    L and R gives x * L * (x*R - R(1)) / (x - 1).
    """
    if not tree:
        return ONE
    left = tamari_poly(tree.left)
    right = tamari_poly(tree.right)
    return X * left * (right + delta(right))


def tamari_poly_mirror(tree: BinaryTree) -> Polynomial:
    """Left/right-swapped recursion: counts trees above by right border."""
    if not tree:
        return ONE
    left = tamari_poly_mirror(tree.left)
    right = tamari_poly_mirror(tree.right)
    return X * right * (left + delta(left))


def tamari_poly_bivar(tree: BinaryTree) -> Polynomial:
    """Two-variable refinement in x and b; b marks lower-tree nodes that
    carry a right subtree.  Setting b=1 recovers :func:`tamari_poly`."""
    if not tree:
        return ONE
    left = tamari_poly_bivar(tree.left)
    right = tamari_poly_bivar(tree.right)
    return X * left * (right + B * delta(right))


def phi_series(max_degree: int) -> Polynomial:
    """The interval generating function Phi(x, y) through y^max_degree.

    Solves Phi = B(Phi, Phi) + 1 by fixed-point iteration; each application
    of B raises the y-degree, so max_degree + 1 rounds suffice.
    """
    if max_degree < 0:
        raise ValueError("series order must be non-negative")
    phi = ONE
    for _ in range(max_degree + 1):
        phi = (bilinear_B(phi, phi) + ONE).truncate_y(max_degree)
    return phi


def chapoton_count(n: int) -> int:
    """Closed-form interval count 2*(4n+1)! / ((n+1)!*(3n+2)!)."""
    if n < 0:
        raise ValueError("size must be non-negative")
    return 2 * factorial(4 * n + 1) // (factorial(n + 1) * factorial(3 * n + 2))
