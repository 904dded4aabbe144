"""Exact rational functions in the indeterminates (q, t, u, v).

Numerators and denominators are multivariate integer polynomials backed by
FLINT's ``fmpz_mpoly`` (graded-lexicographic term order).  Every
:class:`RatFunc` is kept in lowest terms with a positive leading
denominator coefficient, so structural equality is mathematical equality.

Two evaluation modes support fast probabilistic verification: substitution
of exact rationals (``rational-point``) and reduction modulo a fixed 62-bit
prime (``prime-field``), whose elements are :class:`ModP` values.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Union

import flint

VARIABLES = ("q", "t", "u", "v")
CTX = flint.fmpz_mpoly_ctx.get(VARIABLES, "deglex")
_GENS = dict(zip(VARIABLES, CTX.gens()))
_ZERO = CTX.from_dict({})
_ONE = CTX.from_dict({(0, 0, 0, 0): 1})

#: Largest prime below 2**62.
PRIME = 4611686018427387847

MultiPoly = flint.fmpz_mpoly


class PoleError(ZeroDivisionError):
    """A denominator vanished under evaluation or in a limit."""


def _lead_sign(p: MultiPoly) -> int:
    return 1 if p.leading_coefficient() > 0 else -1


class RatFunc:
    """A canonical quotient ``num/den`` of integer polynomials in q, t, u, v."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den=None, *, _canonical: bool = False):
        if not isinstance(num, flint.fmpz_mpoly):
            num = CTX.constant(int(num))
        if den is None:
            den = _ONE
            _canonical = True
        elif not isinstance(den, flint.fmpz_mpoly):
            den = CTX.constant(int(den))
        if not _canonical:
            if den.is_zero():
                raise ZeroDivisionError("rational function with zero denominator")
            if num.is_zero():
                den = _ONE
            elif not den.is_one():
                g = num.gcd(den)
                if not g.is_one():
                    num = num / g
                    den = den / g
                if _lead_sign(den) < 0:
                    num = -num
                    den = -den
        self.num = num
        self.den = den
        self._hash = None

    # construction -------------------------------------------------------
    @classmethod
    def var(cls, name: str) -> "RatFunc":
        return cls(_GENS[name], _ONE, _canonical=True)

    @classmethod
    def const(cls, value) -> "RatFunc":
        if isinstance(value, RatFunc):
            return value
        if isinstance(value, Fraction):
            return cls(CTX.constant(value.numerator), CTX.constant(value.denominator))
        return cls(CTX.constant(int(value)), _ONE, _canonical=True)

    # predicates ---------------------------------------------------------
    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.num.is_one() and self.den.is_one()

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_constant()

    def to_fraction(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        return Fraction(int(self.num.leading_coefficient()) if not self.num.is_zero() else 0,
                        int(self.den.leading_coefficient()))

    # arithmetic ---------------------------------------------------------
    @staticmethod
    def _coerce(other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, (int, Fraction)):
            return RatFunc.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other.num.is_zero():
            return self
        if self.num.is_zero():
            return other
        a, b, c, d = self.num, self.den, other.num, other.den
        if b == d:
            if b.is_one():
                return RatFunc(a + c, _ONE, _canonical=True)
            return RatFunc(a + c, b)
        if b.is_one():
            return RatFunc(a * d + c, d, _canonical=True)
        if d.is_one():
            return RatFunc(a + c * b, b, _canonical=True)
        g = b.gcd(d)
        if g.is_one():
            return RatFunc(a * d + c * b, b * d)
        b1 = b / g
        d1 = d / g
        n = a * d1 + c * b1
        if n.is_zero():
            return RatFunc(_ZERO, _ONE, _canonical=True)
        return RatFunc(n, b1 * d)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den, _canonical=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.num.is_zero() or other.num.is_zero():
            return RatFunc(_ZERO, _ONE, _canonical=True)
        a, b, c, d = self.num, self.den, other.num, other.den
        if b.is_one() and d.is_one():
            return RatFunc(a * c, _ONE, _canonical=True)
        g1 = a.gcd(d)
        g2 = c.gcd(b)
        if not g1.is_one():
            a = a / g1
            d = d / g1
        if not g2.is_one():
            c = c / g2
            b = b / g2
        n, m = a * c, b * d
        if _lead_sign(m) < 0:
            n, m = -n, -m
        return RatFunc(n, m, _canonical=True)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if self.num.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        n, d = self.den, self.num
        if _lead_sign(d) < 0:
            n, d = -n, -d
        return RatFunc(n, d, _canonical=True)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        return RatFunc(self.num ** n, self.den ** n, _canonical=True)

    def __eq__(self, other):
        if not isinstance(other, RatFunc):
            other = self._coerce(other)
            if other is NotImplemented:
                return False
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((tuple(self.num.terms()), tuple(self.den.terms())))
        return self._hash

    def __repr__(self):
        if self.den.is_one():
            return f"RatFunc({self.num})"
        return f"RatFunc(({self.num})/({self.den}))"

    def __str__(self):
        if self.den.is_one():
            return str(self.num)
        return f"({self.num})/({self.den})"

    # substitution -------------------------------------------------------
    def variables(self) -> set[str]:
        used = set()
        for p in (self.num, self.den):
            for i, d in enumerate(p.degrees()):
                if d:
                    used.add(VARIABLES[i])
        return used

    def subs(self, values: Mapping[str, object]) -> "RatFunc":
        """Substitute exact rationals or rational functions for variables."""
        vals = {k: RatFunc.const(v) if isinstance(v, (int, Fraction)) else v
                for k, v in values.items()}
        num = _eval_poly(self.num, vals, RatFunc.const(1))
        den = _eval_poly(self.den, vals, RatFunc.const(1))
        if den.is_zero():
            raise PoleError(f"denominator vanishes at {_fmt_point(values)}")
        return num / den

    def derivative(self, name: str) -> "RatFunc":
        i = VARIABLES.index(name)
        n, d = self.num, self.den
        return RatFunc(n.derivative(i) * d - n * d.derivative(i), d * d)

    # serialization ------------------------------------------------------
    def to_json(self) -> dict:
        return {"num": _poly_to_json(self.num), "den": _poly_to_json(self.den)}

    @classmethod
    def from_json(cls, obj) -> "RatFunc":
        if isinstance(obj, int):
            return cls.const(obj)
        return cls(_poly_from_json(obj["num"]), _poly_from_json(obj["den"]))


def _poly_to_json(p: MultiPoly) -> list:
    return [[str(int(c)), [int(e) for e in m]] for m, c in p.terms()]


def _poly_from_json(terms) -> MultiPoly:
    return CTX.from_dict({tuple(m): int(c) for c, m in terms})


def _fmt_point(values: Mapping[str, object]) -> str:
    return ", ".join(f"{k}={v}" for k, v in sorted(values.items()))


def _eval_poly(p: MultiPoly, values: Mapping[str, object], one):
    """Evaluate ``p`` with variables in ``values`` replaced; others kept symbolic."""
    idx = [VARIABLES.index(k) for k in values]
    vals = [values[k] for k in values]
    # Group terms by the exponents of the substituted variables.
    groups: dict[tuple, dict] = {}
    for mono, c in p.terms():
        mono = tuple(int(e) for e in mono)
        key = tuple(mono[i] for i in idx)
        rest = list(mono)
        for i in idx:
            rest[i] = 0
        groups.setdefault(key, {})[tuple(rest)] = int(c)
    powers = [dict() for _ in vals]
    total = None
    for key, rest in groups.items():
        coeff = RatFunc(CTX.from_dict(rest), _ONE, _canonical=True) if isinstance(one, RatFunc) \
            else _modp_poly_const(rest)
        term = coeff
        for j, e in enumerate(key):
            if e:
                pw = powers[j].get(e)
                if pw is None:
                    pw = vals[j] ** e
                    powers[j][e] = pw
                term = term * pw
        total = term if total is None else total + term
    return one * 0 if total is None else total


def _modp_poly_const(rest: dict):
    if any(any(m) for m in rest):
        raise ValueError("prime-field evaluation requires every variable to be assigned")
    return ModP(sum(rest.values()))


class ModP:
    """Element of the prime field GF(PRIME)."""

    __slots__ = ("v",)

    def __init__(self, v):
        if isinstance(v, Fraction):
            v = v.numerator * pow(v.denominator, -1, PRIME)
        self.v = int(v) % PRIME

    @staticmethod
    def _c(o):
        if isinstance(o, ModP):
            return o.v
        if isinstance(o, int):
            return o % PRIME
        if isinstance(o, Fraction):
            return ModP(o).v
        return None

    def __add__(self, o):
        c = self._c(o)
        return NotImplemented if c is None else ModP(self.v + c)

    __radd__ = __add__

    def __sub__(self, o):
        c = self._c(o)
        return NotImplemented if c is None else ModP(self.v - c)

    def __rsub__(self, o):
        c = self._c(o)
        return NotImplemented if c is None else ModP(c - self.v)

    def __mul__(self, o):
        c = self._c(o)
        return NotImplemented if c is None else ModP(self.v * c)

    __rmul__ = __mul__

    def __neg__(self):
        return ModP(-self.v)

    def inverse(self):
        if self.v == 0:
            raise ZeroDivisionError("division by zero in GF(p)")
        return ModP(pow(self.v, -1, PRIME))

    def __truediv__(self, o):
        c = self._c(o)
        if c is None:
            return NotImplemented
        return self * ModP(c).inverse()

    def __rtruediv__(self, o):
        c = self._c(o)
        if c is None:
            return NotImplemented
        return ModP(c) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return ModP(pow(self.v, n, PRIME))

    def __eq__(self, o):
        c = self._c(o)
        return c is not None and c == self.v

    def __hash__(self):
        return hash(self.v)

    def is_zero(self) -> bool:
        return self.v == 0

    def is_one(self) -> bool:
        return self.v == 1

    def __repr__(self):
        return f"ModP({self.v})"

    def to_json(self):
        return {"modp": str(self.v), "prime": str(PRIME)}


Scalar = Union[RatFunc, ModP]

SYMBOLIC, RATIONAL_POINT, PRIME_FIELD = "symbolic", "rational-point", "prime-field"


@dataclass
class EvalContext:
    """How scalars are specialised before or during a computation."""

    mode: str = SYMBOLIC
    assignments: dict = field(default_factory=dict)
    prime: int = PRIME
    seed: int = 0

    def __post_init__(self):
        if self.mode not in (SYMBOLIC, RATIONAL_POINT, PRIME_FIELD):
            raise ValueError(f"unknown evaluation mode {self.mode!r}")
        if self.prime != PRIME:
            raise ValueError(f"only the fixed prime {PRIME} is supported")
        self.assignments = {k: (v if isinstance(v, (ModP, RatFunc)) else Fraction(v))
                            for k, v in self.assignments.items()}

    @classmethod
    def random(cls, mode: str, seed: int, variables=("q", "t"), bound: int = 97) -> "EvalContext":
        """Draw a seeded random point; rationals have numerator/denominator in [1, bound]."""
        rng = random.Random(seed)
        assign = {}
        for name in variables:
            if mode == PRIME_FIELD:
                assign[name] = Fraction(rng.randrange(2, PRIME - 1))
            else:
                num = rng.randint(1, bound) * rng.choice((1, -1))
                assign[name] = Fraction(num, rng.randint(1, bound))
        return cls(mode, assign, seed=seed)

    def value(self, name: str):
        """The scalar standing for variable ``name`` in this context."""
        if self.mode == SYMBOLIC or name not in self.assignments:
            if self.mode == PRIME_FIELD:
                raise ValueError(f"prime-field mode needs an assignment for {name!r}")
            return RatFunc.var(name)
        v = self.assignments[name]
        if self.mode == PRIME_FIELD:
            return ModP(v)
        return RatFunc.const(v)

    def key(self) -> tuple:
        return (self.mode, tuple(sorted((k, str(v)) for k, v in self.assignments.items())))


def scalar_from_json(obj):
    """Inverse of ``to_json`` for either scalar type."""
    if isinstance(obj, dict) and "modp" in obj:
        if int(obj["prime"]) != PRIME:
            raise ValueError(f"prime mismatch: expected {PRIME}, found {obj['prime']}")
        return ModP(int(obj["modp"]))
    return RatFunc.from_json(obj)


def rf_eval(a: RatFunc, ctx: EvalContext):
    """Homomorphic image of ``a`` under ``ctx``."""
    if ctx.mode == SYMBOLIC:
        return a
    if ctx.mode == RATIONAL_POINT:
        return a.subs(ctx.assignments)
    vals = {k: ModP(v) for k, v in ctx.assignments.items()}
    num = _eval_poly(a.num, vals, ModP(1))
    den = _eval_poly(a.den, vals, ModP(1))
    if den.is_zero():
        raise PoleError(f"denominator vanishes mod p at {_fmt_point(ctx.assignments)}")
    return num / den


def rf_arith(a, b, op: str):
    """Dispatch a named field operation; ``eq`` returns a bool."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    if op == "neg":
        return -a
    if op == "eq":
        return a == b
    raise ValueError(f"unknown operation {op!r}")


def rf_limit_t0(a: RatFunc) -> RatFunc:
    """Value at t = 0 after cancelling the common power of t."""
    ti = VARIABLES.index("t")

    def t_valuation(p):
        return min(m[ti] for m in p.monoms())

    num_val = t_valuation(a.num) if not a.is_zero() else None
    den_val = t_valuation(a.den)
    if den_val > 0:
        raise PoleError("pole at t = 0")
    if num_val is None or num_val > 0:
        return RatFunc.const(0)
    return RatFunc(a.num.subs({"t": 0}), a.den.subs({"t": 0}))


def is_zero(x) -> bool:
    return x.is_zero() if hasattr(x, "is_zero") else x == 0


q = RatFunc.var("q")
t = RatFunc.var("t")
u = RatFunc.var("u")
v = RatFunc.var("v")
