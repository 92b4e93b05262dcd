"""Exact truncated formal Dirichlet series over pluggable degree keys.

A series is a finitely supported integer combination ``sum_d c_d * t^d`` whose
exponents ("degree keys") come in one of two exact kinds:

* ``KeyKind.RATIONAL``: nonnegative ``Fraction`` exponents, combined by
  addition.  Floats never enter a key.
* ``KeyKind.MULTINT``: integers ``n >= 1`` standing for the exponent
  ``log n``, combined by integer multiplication.  With ``t = exp(-s)`` the
  monomial ``t^(log n)`` reads ``n^(-s)``, so series of this kind are
  classical Dirichlet series truncated at a largest index.

Every series carries its truncation cutoff as part of the value: two series
are equal only if kinds, cutoffs and term maps all agree, and arithmetic
refuses to mix kinds or cutoffs.  Coefficients are arbitrary-precision
integers throughout; zero coefficients are never stored.

Series values are immutable once built and safe to share between threads.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Mapping

from .errors import (
    CutoffMismatchError,
    DomainError,
    KeyKindMismatchError,
    MalformedKeyError,
    NonUnitConstantTermError,
)


class KeyKind(enum.Enum):
    RATIONAL = "rational"
    MULTINT = "multint"


# ---------------------------------------------------------------- key arithmetic

def key_zero(kind: KeyKind):
    """The degree of the unit element: 0 for rational keys, 1 for
    multiplicative-integer keys."""
    return Fraction(0) if kind is KeyKind.RATIONAL else 1


def coerce_key(kind: KeyKind, value):
    """Validate *value* as a key of *kind* and return it in canonical form."""
    if kind is KeyKind.RATIONAL:
        if isinstance(value, float):
            raise MalformedKeyError("floating point is forbidden in degree keys")
        try:
            key = Fraction(value)
        except (TypeError, ValueError) as exc:
            raise MalformedKeyError(f"not a rational key: {value!r}") from exc
        if key < 0:
            raise MalformedKeyError(f"rational keys must be >= 0, got {key}")
        return key
    if isinstance(value, bool) or not isinstance(value, int):
        raise MalformedKeyError(f"multiplicative keys must be int, got {value!r}")
    if value < 1:
        raise MalformedKeyError(f"multiplicative keys must be >= 1, got {value}")
    return value


def key_add(kind: KeyKind, a, b):
    return a + b if kind is KeyKind.RATIONAL else a * b


def key_sub(kind: KeyKind, a, b):
    """Inverse of :func:`key_add` where defined, else ``None``.

    For rational keys this is ``a - b`` when nonnegative; for multiplicative
    keys it is exact division ``a // b`` when ``b`` divides ``a``.
    """
    if kind is KeyKind.RATIONAL:
        d = a - b
        return d if d >= 0 else None
    q, r = divmod(a, b)
    return q if r == 0 else None


def key_repeat(kind: KeyKind, key, times: int):
    """*key* combined with itself *times* times (0 gives the zero key)."""
    if kind is KeyKind.RATIONAL:
        return key * times
    return key ** times


def render_key(kind: KeyKind, key) -> str:
    if kind is KeyKind.MULTINT:
        return str(key)
    if key.denominator == 1:
        return str(key.numerator)
    return f"{key.numerator}/{key.denominator}"


def parse_key(kind: KeyKind, text: str):
    text = text.strip()
    if kind is KeyKind.MULTINT:
        try:
            return coerce_key(kind, int(text))
        except ValueError as exc:
            raise MalformedKeyError(f"bad multiplicative key {text!r}") from exc
    if "/" in text:
        num, _, den = text.partition("/")
        try:
            return coerce_key(kind, Fraction(int(num), int(den)))
        except (ValueError, ZeroDivisionError) as exc:
            raise MalformedKeyError(f"bad rational key {text!r}") from exc
    try:
        return coerce_key(kind, Fraction(int(text)))
    except ValueError as exc:
        raise MalformedKeyError(f"bad rational key {text!r}") from exc


# ---------------------------------------------------------------- series values

@dataclass(frozen=True)
class Series:
    """A truncated series: kind, cutoff, and a map key -> nonzero int.

    Build values with :meth:`Series.build`; the raw constructor trusts its
    arguments.  ``terms`` is owned by the instance and must not be mutated.
    """

    kind: KeyKind
    cutoff: object
    terms: dict = field(default_factory=dict)

    @classmethod
    def build(cls, kind: KeyKind, cutoff, terms: Mapping | Iterable = ()) -> "Series":
        cutoff = coerce_key(kind, cutoff)
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict = {}
        for raw_key, raw_coeff in items:
            key = coerce_key(kind, raw_key)
            coeff = int(raw_coeff)
            if key > cutoff:
                raise MalformedKeyError(
                    f"term key {render_key(kind, key)} exceeds cutoff {render_key(kind, cutoff)}"
                )
            if coeff:
                clean[key] = clean.get(key, 0) + coeff
                if not clean[key]:
                    del clean[key]
        return cls(kind, cutoff, dict(sorted(clean.items())))

    def coefficient(self, key) -> int:
        return self.terms.get(coerce_key(self.kind, key), 0)

    def items(self) -> Iterator:
        """Terms in increasing key order."""
        return iter(sorted(self.terms.items()))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for key, coeff in self.items():
            bits.append(f"{'+' if coeff >= 0 else '-'} {abs(coeff)}*t^{render_key(self.kind, key)}")
        out = " ".join(bits)
        return out[2:] if out.startswith("+ ") else out


def series_one(kind: KeyKind, cutoff) -> Series:
    return Series.build(kind, cutoff, {key_zero(kind): 1})


def _check_compatible(f: Series, g: Series) -> None:
    if f.kind is not g.kind:
        raise KeyKindMismatchError(f"cannot combine {f.kind.value} with {g.kind.value} keys")
    if f.cutoff != g.cutoff:
        raise CutoffMismatchError(
            f"cutoffs differ: {render_key(f.kind, f.cutoff)} vs {render_key(g.kind, g.cutoff)}"
        )


def series_add(f: Series, g: Series) -> Series:
    _check_compatible(f, g)
    terms = dict(f.terms)
    for key, coeff in g.terms.items():
        new = terms.get(key, 0) + coeff
        if new:
            terms[key] = new
        else:
            terms.pop(key, None)
    return Series(f.kind, f.cutoff, dict(sorted(terms.items())))


def series_neg(f: Series) -> Series:
    return Series(f.kind, f.cutoff, {k: -c for k, c in f.terms.items()})


def series_mul(f: Series, g: Series) -> Series:
    """Truncated convolution; terms past the shared cutoff are dropped."""
    _check_compatible(f, g)
    kind, cutoff = f.kind, f.cutoff
    acc: dict = {}
    for ka, ca in f.terms.items():
        for kb, cb in g.terms.items():
            key = key_add(kind, ka, kb)
            if key > cutoff:
                continue
            new = acc.get(key, 0) + ca * cb
            if new:
                acc[key] = new
            else:
                del acc[key]
    return Series(kind, cutoff, dict(sorted(acc.items())))


def _support_closure(kind: KeyKind, base, cutoff) -> list:
    """All nonzero keys reachable as combinations of *base* keys, <= cutoff,
    in increasing order.  The inverse of a series is supported inside the
    closure of its support, so the triangular solve only visits these keys."""
    zero = key_zero(kind)
    seen = {zero}
    frontier = [zero]
    while frontier:
        cur = frontier.pop()
        for b in base:
            nxt = key_add(kind, cur, b)
            if nxt <= cutoff and nxt not in seen:
                seen.add(nxt)
                frontier.append(nxt)
    seen.discard(zero)
    return sorted(seen)


def series_invert(f: Series) -> Series:
    """The truncated multiplicative inverse of *f*.

    Requires the constant term (at the zero key) to be 1 or -1; the solve is
    triangular in increasing key order and exact over the integers.
    """
    kind, cutoff = f.kind, f.cutoff
    zero = key_zero(kind)
    unit = f.terms.get(zero, 0)
    if unit not in (1, -1):
        raise NonUnitConstantTermError(
            f"cannot invert: constant term is {unit}, need 1 or -1"
        )
    positive = [k for k in f.terms if k != zero]
    inv: dict = {zero: unit}  # 1/unit == unit for unit in {1,-1}
    for key in _support_closure(kind, positive, cutoff):
        total = 0
        for base in positive:
            rest = key_sub(kind, key, base)
            if rest is None:
                continue
            coeff = inv.get(rest)
            if coeff:
                total += f.terms[base] * coeff
        if total:
            inv[key] = -unit * total
    return Series(kind, cutoff, dict(sorted(inv.items())))


def growth_series(table) -> Series:
    """Element counts of an enumerated table, as a series over its key kind."""
    terms = {
        degree: len(table.elements_of_degree(degree))
        for degree in table.realized_degrees()
    }
    return Series.build(table.key_kind, table.cutoff, terms)


def evaluate_partial(f: Series, t0=None, s0=None) -> float:
    """Numerically evaluate the truncated series at a point.

    Rational-key series take ``t0`` in the open interval (0, 1) and return
    ``sum c_d * t0**d``.  Multiplicative-key series take ``s0 > 0`` and
    return the partial Dirichlet sum ``sum c_n * n**(-s0)``.
    """
    if f.kind is KeyKind.RATIONAL:
        if t0 is None:
            raise DomainError("rational-key series need an evaluation point t0")
        t0 = float(t0)
        if not 0.0 < t0 < 1.0:
            raise DomainError(f"t0 must lie in (0, 1), got {t0}")
        return float(sum(coeff * t0 ** float(key) for key, coeff in f.items()))
    if s0 is None:
        raise DomainError("multiplicative-key series need an exponent s0")
    s0 = float(s0)
    if s0 <= 0.0:
        raise DomainError(f"s0 must be positive, got {s0}")
    return float(sum(coeff * float(key) ** (-s0) for key, coeff in f.items()))


# ---------------------------------------------------------------- JSON form

def series_to_json(f: Series) -> dict:
    """Schema: key_kind, cutoff, and [key, coefficient] pairs in key order.
    Rational keys render as "p/q" strings; coefficients are decimal strings
    so arbitrary precision survives any JSON reader."""
    def render(key):
        return render_key(f.kind, key) if f.kind is KeyKind.RATIONAL else key

    return {
        "key_kind": f.kind.value,
        "cutoff": render(f.cutoff),
        "terms": [[render(key), str(coeff)] for key, coeff in f.items()],
    }


def series_from_json(obj: Mapping) -> Series:
    kind = KeyKind(obj["key_kind"])

    def read(key):
        return parse_key(kind, key) if isinstance(key, str) else coerce_key(kind, key)

    return Series.build(
        kind,
        read(obj["cutoff"]),
        [(read(key), int(coeff)) for key, coeff in obj["terms"]],
    )
