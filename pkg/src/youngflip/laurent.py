"""Sparse Laurent polynomials with integer coefficients and exact division.

Variables are plain nonnegative integers.  Cluster variables ``x_i`` use
the even index ``2i`` and coefficient symbols ``c_j`` the odd index
``2j + 1``, so both families are unbounded and never collide.  Use
:func:`x` and :func:`c` rather than raw indices.

A monomial is a tuple of ``(var, exponent)`` pairs sorted by ``var`` with
nonzero exponents; a polynomial is a mapping monomial -> nonzero ``int``.
Values are immutable and hashable, and equal polynomials have identical
internal tuples, so ``==`` is structural.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Union

from .errors import NotDivisible, ParseError, PreconditionError

Monomial = tuple[tuple[int, int], ...]
Number = Union[int, Fraction]

ONE_MONO: Monomial = ()


def x_index(i: int) -> int:
    return 2 * i


def c_index(j: int) -> int:
    return 2 * j + 1


def is_coefficient_var(v: int) -> bool:
    return v % 2 == 1


def var_name(v: int) -> str:
    return f"c{(v - 1) // 2}" if v % 2 else f"x{v // 2}"


def _canon(pairs) -> Monomial:
    d: dict[int, int] = {}
    for v, e in pairs:
        d[int(v)] = d.get(int(v), 0) + int(e)
    return tuple(sorted((v, e) for v, e in d.items() if e))


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    out: dict[int, int] = dict(a)
    for v, e in b:
        s = out.get(v, 0) + e
        if s:
            out[v] = s
        else:
            del out[v]
    return tuple(sorted(out.items()))


def _mono_inv(a: Monomial) -> Monomial:
    return tuple((v, -e) for v, e in a)


def _mono_pow(a: Monomial, k: int) -> Monomial:
    if k == 0:
        return ()
    return tuple((v, e * k) for v, e in a)


def _degree(m: Monomial) -> int:
    return sum(e for _, e in m)


class LaurentPoly:
    """Immutable integer Laurent polynomial."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, int] | Iterable[tuple[Monomial, int]] = ()):
        acc: dict[Monomial, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for mono, coef in items:
            if coef:
                mono = _canon(mono)
                acc[mono] = acc.get(mono, 0) + int(coef)
        self._terms: tuple[tuple[Monomial, int], ...] = tuple(sorted((m, k) for m, k in acc.items() if k))
        self._hash = hash(self._terms)

    @classmethod
    def _raw(cls, acc: dict[Monomial, int]) -> "LaurentPoly":
        # acc already holds canonical monomials
        obj = cls.__new__(cls)
        obj._terms = tuple(sorted((m, k) for m, k in acc.items() if k))
        obj._hash = hash(obj._terms)
        return obj

    # -- constructors -----------------------------------------------------

    @classmethod
    def const(cls, k: int) -> "LaurentPoly":
        return cls._raw({(): int(k)})

    @classmethod
    def monomial(cls, exps: Mapping[int, int] | Monomial, coef: int = 1) -> "LaurentPoly":
        items = exps.items() if isinstance(exps, Mapping) else exps
        return cls._raw({_canon(items): int(coef)})

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> tuple[tuple[Monomial, int], ...]:
        return self._terms

    def __iter__(self):
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def variables(self) -> set[int]:
        return {v for m, _ in self._terms for v, _ in m}

    def min_exponent(self, v: int) -> int:
        """Smallest exponent of ``v`` over all terms (0 if absent from a term)."""
        if not self._terms:
            return 0
        return min(dict(m).get(v, 0) for m, _ in self._terms)

    def max_exponent(self, v: int) -> int:
        if not self._terms:
            return 0
        return max(dict(m).get(v, 0) for m, _ in self._terms)

    def coefficients(self) -> list[int]:
        return [k for _, k in self._terms]

    def has_positive_coefficients(self) -> bool:
        return all(k > 0 for _, k in self._terms)

    def denominator(self) -> Monomial:
        """Smallest monomial ``m`` with ``self * m`` a polynomial."""
        vs = sorted(self.variables())
        return tuple((v, -lo) for v in vs if (lo := self.min_exponent(v)) < 0)

    def numerator(self) -> "LaurentPoly":
        return self * LaurentPoly.monomial(self.denominator())

    # -- arithmetic -------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return self._hash

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._raw({m: -k for m, k in self._terms})

    def __add__(self, other) -> "LaurentPoly":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        acc = dict(self._terms)
        for m, k in other._terms:
            acc[m] = acc.get(m, 0) + k
        return LaurentPoly._raw(acc)

    __radd__ = __add__

    def __sub__(self, other) -> "LaurentPoly":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPoly":
        return (-self) + other

    def __mul__(self, other) -> "LaurentPoly":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        acc: dict[Monomial, int] = {}
        for m1, k1 in self._terms:
            for m2, k2 in other._terms:
                m = _mono_mul(m1, m2)
                acc[m] = acc.get(m, 0) + k1 * k2
        return LaurentPoly._raw(acc)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            if not self.is_monomial() or abs(self._terms[0][1]) != 1:
                raise NotDivisible("only unit monomials have Laurent inverses")
            m, coef = self._terms[0]
            return LaurentPoly._raw({_mono_pow(m, k): coef ** (-k)})
        out = LaurentPoly.const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __truediv__(self, other) -> "LaurentPoly":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return div_exact(self, other)

    def __rtruediv__(self, other) -> "LaurentPoly":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return div_exact(other, self)

    # -- text -------------------------------------------------------------

    def __str__(self) -> str:
        return format_laurent(self)

    def __repr__(self) -> str:
        return f"LaurentPoly({format_laurent(self)!r})"


def _coerce(v) -> LaurentPoly | None:
    if isinstance(v, LaurentPoly):
        return v
    if isinstance(v, int):
        return LaurentPoly.const(v)
    return None


ZERO = LaurentPoly()
ONE = LaurentPoly.const(1)


def x(i: int) -> LaurentPoly:
    return LaurentPoly.monomial({x_index(i): 1})


def c(j: int) -> LaurentPoly:
    return LaurentPoly.monomial({c_index(j): 1})


def monomial_product(factors: Iterable[tuple[LaurentPoly, int]]) -> LaurentPoly:
    """``prod p**e``; the empty product is 1."""
    out = ONE
    for p, e in factors:
        out = out * p**e
    return out


# ---------------------------------------------------------------------------
# division


def _shift(p: LaurentPoly, mono: Monomial) -> LaurentPoly:
    return LaurentPoly._raw({_mono_mul(m, mono): k for m, k in p.terms})


def _grlex_key(mono: Monomial, order: list[int]) -> tuple:
    d = dict(mono)
    # graded, then lexicographic with smaller variable index more significant
    return (_degree(mono), tuple(d.get(v, 0) for v in order))


def div_exact(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Quotient ``q`` with ``q * b == a``; :class:`NotDivisible` if none exists.

    Both sides are first shifted by monomials so that neither is divisible
    by any variable; ``b`` divides ``a`` in the Laurent ring exactly when the
    shifted ``b`` divides the shifted ``a`` as ordinary polynomials, which is
    then decided by leading-term elimination in graded lex order.
    """
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    if not a:
        return ZERO
    da, db = a.denominator(), b.denominator()
    a0 = _shift(a, da)
    b0 = _shift(b, db)
    # strip common variable powers so that b0 has no monomial factor
    fa = tuple((v, lo) for v in sorted(a0.variables()) if (lo := a0.min_exponent(v)) > 0)
    fb = tuple((v, lo) for v in sorted(b0.variables()) if (lo := b0.min_exponent(v)) > 0)
    a0 = _shift(a0, _mono_inv(fa))
    b0 = _shift(b0, _mono_inv(fb))
    q0 = _poly_div(a0, b0)
    # a = a0 * fa / da, b = b0 * fb / db
    unit = _mono_mul(_mono_mul(fa, _mono_inv(da)), _mono_mul(_mono_inv(fb), db))
    return _shift(q0, unit)


def _poly_div(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    order = sorted(a.variables() | b.variables())
    key = lambda m: _grlex_key(m, order)  # noqa: E731
    lead_b, lc_b = max(b.terms, key=lambda t: key(t[0]))
    lead_b_d = dict(lead_b)
    rest = dict(a.terms)
    quot: dict[Monomial, int] = {}
    while rest:
        lead = max(rest, key=key)
        coef = rest[lead]
        ld = dict(lead)
        if any(ld.get(v, 0) < e for v, e in lead_b_d.items()) or coef % lc_b:
            raise NotDivisible(f"{format_laurent(b)} does not divide {format_laurent(a)}")
        t_mono = _mono_mul(lead, _mono_inv(lead_b))
        t_coef = coef // lc_b
        quot[t_mono] = quot.get(t_mono, 0) + t_coef
        for m, k in b.terms:
            mm = _mono_mul(m, t_mono)
            s = rest.get(mm, 0) - k * t_coef
            if s:
                rest[mm] = s
            else:
                rest.pop(mm, None)
    return LaurentPoly._raw(quot)


# ---------------------------------------------------------------------------
# evaluation and specialization


def evaluate(p: LaurentPoly, assignment: Mapping[int, Number]) -> Fraction:
    """Exact value of ``p`` with variable index ``v`` set to ``assignment[v]``."""
    total = Fraction(0)
    for mono, coef in p.terms:
        val = Fraction(coef)
        for v, e in mono:
            a = Fraction(assignment[v])
            if a == 0 and e < 0:
                raise PreconditionError(f"{var_name(v)} = 0 appears with a negative exponent")
            val *= a**e
        total += val
    return total


def specialize(p: LaurentPoly, keep: Callable[[int], bool]) -> LaurentPoly:
    """Set every variable ``v`` with ``not keep(v)`` to 1."""
    acc: dict[Monomial, int] = {}
    for mono, coef in p.terms:
        m = tuple((v, e) for v, e in mono if keep(v))
        acc[m] = acc.get(m, 0) + coef
    return LaurentPoly._raw(acc)


def forget_coefficients(p: LaurentPoly) -> LaurentPoly:
    """Specialize every coefficient symbol ``c_j`` to 1."""
    return specialize(p, lambda v: not is_coefficient_var(v))


def rename(p: LaurentPoly, mapping: Mapping[int, int]) -> LaurentPoly:
    """Substitute variable ``v -> mapping.get(v, v)`` (an injective relabeling)."""
    acc: dict[Monomial, int] = {}
    for mono, coef in p.terms:
        m = tuple(sorted((mapping.get(v, v), e) for v, e in mono))
        acc[m] = acc.get(m, 0) + coef
    return LaurentPoly._raw(acc)


# ---------------------------------------------------------------------------
# text form


def _display_key(term: tuple[Monomial, int]):
    mono = term[0]
    return (_degree(mono), mono)


def _format_mono(mono: Monomial, sep: str) -> str:
    parts = []
    for v, e in mono:
        parts.append(var_name(v) if e == 1 else f"{var_name(v)}^{e}")
    return sep.join(parts)


def format_laurent(p: LaurentPoly, sep: str = "·") -> str:
    """Canonical text: terms by total degree, then by monomial."""
    if not p:
        return "0"
    out = []
    for i, (mono, coef) in enumerate(sorted(p.terms, key=_display_key)):
        sign = "-" if coef < 0 else "+"
        mag = abs(coef)
        body = _format_mono(mono, sep)
        if not body:
            body = str(mag)
        elif mag != 1:
            body = f"{mag}{sep}{body}"
        if i == 0:
            out.append(body if sign == "+" else f"-{body}")
        else:
            out.append(f" {sign} {body}")
    return "".join(out)


def format_fraction(p: LaurentPoly, sep: str = "·") -> str:
    """``numerator/denominator`` form, e.g. ``(1 + x1 + x2)/(x1·x2)``."""
    den = p.denominator()
    num = format_laurent(p.numerator(), sep)
    if not den:
        return num
    if len(p) > 1:
        num = f"({num})"
    d = _format_mono(den, sep)
    if len(den) > 1 or den[0][1] != 1:
        d = f"({d})"
    return f"{num}/{d}"


_FACTOR_RE = re.compile(r"^(?:(\d+)|([xc])(\d+)(?:\^\(?(-?\d+)\)?)?)$")


def _split_terms(text: str) -> list[tuple[str, str]]:
    # split on +/- that are not part of an exponent
    terms = []
    sign = "+"
    buf = []
    i = 0
    s = text.strip()
    while i < len(s):
        ch = s[i]
        if ch in "+-" and not (buf and buf[-1] in "^(") and "".join(buf).strip():
            terms.append((sign, "".join(buf)))
            sign, buf = ch, []
        elif ch in "+-" and not "".join(buf).strip():
            sign = "-" if (ch == "-") != (sign == "-") else "+"
        else:
            buf.append(ch)
        i += 1
    if "".join(buf).strip():
        terms.append((sign, "".join(buf)))
    return terms


def parse_laurent(text: str) -> LaurentPoly:
    """Inverse of :func:`format_laurent`; accepts ``·`` or ``*`` between factors."""
    if text.strip() == "0":
        return ZERO
    total: dict[Monomial, int] = {}
    terms = _split_terms(text)
    if not terms:
        raise ParseError(f"empty polynomial text {text!r}")
    for sign, body in terms:
        coef = 1
        acc = {}
        for tok in re.split(r"[·*]", body):
            tok = tok.strip()
            m = _FACTOR_RE.match(tok)
            if m is None:
                raise ParseError(f"bad factor {tok!r} in {text!r}")
            if m.group(1):
                coef *= int(m.group(1))
                continue
            idx = int(m.group(3))
            v = x_index(idx) if m.group(2) == "x" else c_index(idx)
            acc[v] = acc.get(v, 0) + int(m.group(4) or 1)
        mono = tuple(sorted((v, e) for v, e in acc.items() if e))
        total[mono] = total.get(mono, 0) + (-coef if sign == "-" else coef)
    return LaurentPoly._raw(total)
