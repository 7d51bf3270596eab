"""Sparse Laurent polynomials with exact rational (or complex) coefficients.

A :class:`SparsePoly` maps integer exponent tuples to nonzero coefficients.
Coefficients are :class:`fractions.Fraction` when exact and ``complex``
otherwise; exact inputs stay exact under ring operations.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from numbers import Number, Rational
from typing import Iterable, Mapping, Sequence

from .errors import DimensionMismatch, PolySyntaxError

Exponent = tuple


def _coerce(c):
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (bool,)):
        return Fraction(int(c))
    if isinstance(c, Rational):
        return Fraction(c)
    if isinstance(c, str):
        return Fraction(c)
    if isinstance(c, (float, complex)):
        return complex(c)
    if isinstance(c, Number):
        return complex(c)
    raise TypeError(f"unsupported coefficient type {type(c).__name__}")


def format_coefficient(c) -> str:
    """Render a coefficient so that :func:`Fraction` (or ``complex``) can read it back."""
    if isinstance(c, Fraction):
        return str(c)
    return repr(complex(c))


class SparsePoly:
    """Immutable sparse Laurent polynomial in ``nvars`` variables.

    Terms are kept sorted by exponent (lexicographically) so iteration order,
    and hence every matrix layout built from it, is deterministic.
    """

    __slots__ = ("nvars", "_terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping | Iterable = ()):
        if nvars < 0:
            raise ValueError("nvars must be nonnegative")
        acc: dict = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for e, c in items:
            e = tuple(int(x) for x in e)
            if len(e) != nvars:
                raise DimensionMismatch(f"exponent {e} has length {len(e)}, expected {nvars}")
            c = _coerce(c)
            acc[e] = acc.get(e, 0) + c
        self.nvars = nvars
        self._terms = {e: acc[e] for e in sorted(acc) if acc[e] != 0}
        self._hash = None

    # constructors -----------------------------------------------------
    @classmethod
    def zero(cls, nvars: int) -> "SparsePoly":
        return cls(nvars)

    @classmethod
    def constant(cls, nvars: int, c) -> "SparsePoly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def monomial(cls, exp: Sequence[int], c=1) -> "SparsePoly":
        return cls(len(exp), {tuple(exp): c})

    @classmethod
    def variable(cls, nvars: int, i: int) -> "SparsePoly":
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, {tuple(e): 1})

    # container protocol ------------------------------------------------
    def items(self):
        return self._terms.items()

    def coeff(self, exp) -> Fraction | complex:
        return self._terms.get(tuple(exp), Fraction(0))

    def __len__(self):
        return len(self._terms)

    def __iter__(self):
        return iter(self._terms)

    def __contains__(self, exp):
        return tuple(exp) in self._terms

    def is_zero(self) -> bool:
        return not self._terms

    @property
    def is_exact(self) -> bool:
        return all(isinstance(c, Fraction) for c in self._terms.values())

    def support(self) -> frozenset:
        """Exponents carrying a nonzero coefficient."""
        return frozenset(self._terms)

    def total_degree(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return max(sum(e) for e in self._terms)

    def has_negative_exponents(self) -> bool:
        return any(x < 0 for e in self._terms for x in e)

    # arithmetic ------------------------------------------------------
    def _check(self, other: "SparsePoly"):
        if other.nvars != self.nvars:
            raise DimensionMismatch(f"{self.nvars} vs {other.nvars} variables")

    def __add__(self, other):
        if not isinstance(other, SparsePoly):
            other = SparsePoly.constant(self.nvars, other)
        self._check(other)
        acc = dict(self._terms)
        for e, c in other._terms.items():
            acc[e] = acc.get(e, 0) + c
        return SparsePoly(self.nvars, acc)

    __radd__ = __add__

    def __neg__(self):
        return SparsePoly(self.nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, SparsePoly):
            other = SparsePoly.constant(self.nvars, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, SparsePoly):
            c = _coerce(other)
            return SparsePoly(self.nvars, {e: v * c for e, v in self._terms.items()})
        self._check(other)
        acc: dict = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                acc[e] = acc.get(e, 0) + c1 * c2
        return SparsePoly(self.nvars, acc)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers only exist for monomials; use shift()")
        out = SparsePoly.constant(self.nvars, 1)
        for _ in range(k):
            out = out * self
        return out

    def shift(self, beta: Sequence[int]) -> "SparsePoly":
        """Multiply by the monomial ``x**beta``."""
        beta = tuple(beta)
        if len(beta) != self.nvars:
            raise DimensionMismatch("shift has wrong length")
        return SparsePoly(
            self.nvars, {tuple(a + b for a, b in zip(e, beta)): c for e, c in self._terms.items()}
        )

    def map_exponents(self, fn, nvars: int | None = None) -> "SparsePoly":
        nv = self.nvars if nvars is None else nvars
        return SparsePoly(nv, [(fn(e), c) for e, c in self._terms.items()])

    def __eq__(self, other):
        if isinstance(other, SparsePoly):
            return self.nvars == other.nvars and self._terms == other._terms
        if isinstance(other, Number):
            return self == SparsePoly.constant(self.nvars, other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, tuple(self._terms.items())))
        return self._hash

    # evaluation ------------------------------------------------------
    def evaluate(self, point: Sequence) -> complex:
        """Evaluate at ``point``, coercing exact coefficients to floating point.

        Raises ``ZeroDivisionError`` for a negative exponent at a zero coordinate.
        """
        if len(point) != self.nvars:
            raise DimensionMismatch(f"point has {len(point)} coordinates, expected {self.nvars}")
        total = 0j
        for e, c in self._terms.items():
            m = complex(c)
            for x, k in zip(point, e):
                if k < 0 and x == 0:
                    raise ZeroDivisionError("negative exponent at a zero coordinate")
                if k:
                    m *= complex(x) ** k
            total += m
        return total

    def evaluate_exact(self, point: Sequence) -> Fraction:
        """Exact evaluation at a rational point."""
        total = Fraction(0)
        for e, c in self._terms.items():
            m = Fraction(c)
            for x, k in zip(point, e):
                m *= Fraction(x) ** k
            total += m
        return total

    # printing ----------------------------------------------------------
    def to_text(self, names: Sequence[str] | None = None, key=None) -> str:
        """Readable form, largest term first (graded by default, or by ``key``)."""
        if names is None:
            names = default_names(self.nvars)
        if not self._terms:
            return "0"
        order = sorted(self._terms, key=key or (lambda e: (sum(e), e)), reverse=True)
        parts = []
        for e in order:
            c = self._terms[e]
            mono = "*".join(
                n if k == 1 else f"{n}^{k}" for n, k in zip(names, e) if k != 0
            )
            if isinstance(c, Fraction):
                neg = c < 0
                a = -c if neg else c
                if mono and a == 1:
                    body = mono
                else:
                    body = str(a) + ("*" + mono if mono else "")
            else:
                neg = False
                body = f"({format_coefficient(c)})" + ("*" + mono if mono else "")
            if not parts:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append((" - " if neg else " + ") + body)
        return "".join(parts)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"SparsePoly({self.nvars}, {self.to_text()!r})"

    def to_json(self) -> list:
        return [{"c": format_coefficient(c), "e": list(e)} for e, c in self._terms.items()]


def default_names(n: int) -> list[str]:
    if n <= 3:
        return ["x", "y", "z"][:n]
    return [f"x{i + 1}" for i in range(n)]


# --------------------------------------------------------------------------
# text parser

_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<num>(?:\d+\.\d*|\.\d+|\d+)(?:[eE][+-]?\d+)?)
  | (?P<name>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<pow>\*\*|\^)
  | (?P<op>[-+*/()])
    """,
    re.VERBOSE,
)


def _tokenize(text: str):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise PolySyntaxError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        if kind != "ws":
            out.append((kind, m.group(), pos))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


class _Parser:
    def __init__(self, text, names):
        self.toks = _tokenize(text)
        self.i = 0
        self.index = {n: k for k, n in enumerate(names)}
        self.n = len(names)

    def peek(self):
        return self.toks[self.i]

    def take(self, kind=None, value=None):
        tok = self.toks[self.i]
        if (kind and tok[0] != kind) or (value and tok[1] != value):
            want = value or kind
            got = tok[1] or "end of input"
            raise PolySyntaxError(f"expected {want}, got {got!r}", tok[2])
        self.i += 1
        return tok

    def parse(self) -> SparsePoly:
        acc: dict = {}
        sign = 1
        tok = self.peek()
        if tok[0] == "op" and tok[1] in "+-":
            sign = -1 if tok[1] == "-" else 1
            self.take()
        while True:
            c, e = self.term()
            acc[e] = acc.get(e, 0) + sign * c
            tok = self.peek()
            if tok[0] == "end":
                break
            if tok[0] == "op" and tok[1] in "+-":
                sign = -1 if tok[1] == "-" else 1
                self.take()
                continue
            raise PolySyntaxError(f"expected '+' or '-', got {tok[1]!r}", tok[2])
        return SparsePoly(self.n, acc)

    def term(self):
        coeff = Fraction(1)
        exp = [0] * self.n
        while True:
            tok = self.peek()
            if tok[0] == "num":
                coeff *= self.number()
            elif tok[0] == "name":
                self.take()
                if tok[1] not in self.index:
                    raise PolySyntaxError(f"unknown variable {tok[1]!r}", tok[2])
                k = 1
                if self.peek()[0] == "pow":
                    self.take()
                    k = self.integer()
                exp[self.index[tok[1]]] += k
            else:
                raise PolySyntaxError(f"expected a coefficient or variable, got {tok[1] or 'end of input'!r}", tok[2])
            if self.peek()[0] == "op" and self.peek()[1] == "*":
                self.take()
                continue
            return coeff, tuple(exp)

    def number(self) -> Fraction:
        tok = self.take("num")
        value = Fraction(tok[1])
        if self.peek()[0] == "op" and self.peek()[1] == "/":
            self.take()
            den = self.take("num")
            if Fraction(den[1]) == 0:
                raise PolySyntaxError("division by zero", den[2])
            value /= Fraction(den[1])
        return value

    def integer(self) -> int:
        paren = False
        if self.peek()[1] == "(":
            self.take()
            paren = True
        sign = 1
        if self.peek()[0] == "op" and self.peek()[1] in "+-":
            sign = -1 if self.take()[1] == "-" else 1
        tok = self.take("num")
        if not tok[1].isdigit():
            raise PolySyntaxError("exponents must be integers", tok[2])
        if paren:
            self.take("op", ")")
        return sign * int(tok[1])


def parse_polynomial(text: str, names: Sequence[str]) -> SparsePoly:
    """Parse ``text`` such as ``"1 + 3*l + 2*w + 4*l*w"`` over variables ``names``.

    Coefficients may be integers, ``p/q`` rationals or decimals (read exactly);
    exponents follow ``^`` or ``**`` and may be negative.
    """
    if len(set(names)) != len(names):
        raise ValueError("duplicate variable names")
    return _Parser(text, list(names)).parse()


def support(f: SparsePoly) -> frozenset:
    return f.support()


def evaluate(f: SparsePoly, point: Sequence) -> complex:
    return f.evaluate(point)


# --------------------------------------------------------------------------
# systems


@dataclass(frozen=True)
class PolySystem:
    """An ordered, nonempty list of polynomials sharing variables."""

    names: tuple
    polys: tuple

    def __post_init__(self):
        object.__setattr__(self, "names", tuple(self.names))
        object.__setattr__(self, "polys", tuple(self.polys))
        if not self.polys:
            raise ValueError("a polynomial system needs at least one polynomial")
        for f in self.polys:
            if f.nvars != len(self.names):
                raise DimensionMismatch(
                    f"polynomial in {f.nvars} variables, system declares {len(self.names)}"
                )

    @property
    def nvars(self) -> int:
        return len(self.names)

    def __len__(self):
        return len(self.polys)

    def __iter__(self):
        return iter(self.polys)

    def __getitem__(self, i):
        return self.polys[i]

    @property
    def is_square(self) -> bool:
        return len(self.polys) == self.nvars

    @classmethod
    def from_strings(cls, polys: Sequence[str], names: Sequence[str]) -> "PolySystem":
        return cls(tuple(names), tuple(parse_polynomial(p, names) for p in polys))

    def to_json(self) -> dict:
        return {"vars": list(self.names), "polys": [f.to_json() for f in self.polys]}

    @classmethod
    def from_json(cls, data: dict) -> "PolySystem":
        try:
            names = data["vars"]
            raw = data["polys"]
        except (KeyError, TypeError) as exc:
            raise PolySyntaxError(f"system JSON needs 'vars' and 'polys' ({exc})") from None
        polys = []
        for p in raw:
            if isinstance(p, str):
                polys.append(parse_polynomial(p, names))
                continue
            terms = []
            for t in p:
                try:
                    c = Fraction(str(t["c"]))
                except (KeyError, ValueError, ZeroDivisionError) as exc:
                    raise PolySyntaxError(f"bad coefficient in term {t!r}: {exc}") from None
                if len(t["e"]) != len(names):
                    raise DimensionMismatch(f"exponent {t['e']} does not match {len(names)} variables")
                terms.append((tuple(t["e"]), c))
            polys.append(SparsePoly(len(names), terms))
        return cls(tuple(names), tuple(polys))

    @classmethod
    def loads(cls, text: str) -> "PolySystem":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise PolySyntaxError(f"invalid JSON: {exc.msg}", exc.pos) from None
        return cls.from_json(data)

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)
