"""Parameter conventions shared by the symmetric-function and toroidal layers.

The primitive scalars are ``q`` and ``t``; everything else is derived:

    q1 = 1/(q t),  q2 = q^2,  q3 = t/q          (so q1 q2 q3 = 1)
    Macdonald (q, t) pair:  sq = q/t = 1/q3,  st = 1/(q t) = q1
    kappa_r = (1 - q1^r)(1 - q2^r)(1 - q3^r),  s = (1 - q1)(1 - q3)

Scalars may be symbolic :class:`RatFunc` values, rational constants, or
:class:`ModP` residues, depending on the evaluation context used to build the
parameters.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .ratfunc import EvalContext, ModP, RatFunc, SYMBOLIC


@dataclass(frozen=True, eq=False)
class ToroidalParams:
    q: object
    t: object
    u: object
    key: tuple = field(default=("symbolic",))

    def __post_init__(self):
        one = self.q ** 0
        object.__setattr__(self, "one", one)
        object.__setattr__(self, "q1", one / (self.q * self.t))
        object.__setattr__(self, "q2", self.q ** 2)
        object.__setattr__(self, "q3", self.t / self.q)
        object.__setattr__(self, "sq", self.q / self.t)
        object.__setattr__(self, "st", one / (self.q * self.t))
        object.__setattr__(self, "s", (1 - self.q1) * (1 - self.q3))
        object.__setattr__(self, "_kappa", {})

    def kappa(self, r: int):
        k = self._kappa.get(r)
        if k is None:
            k = (1 - self.q1 ** r) * (1 - self.q2 ** r) * (1 - self.q3 ** r)
            self._kappa[r] = k
        return k

    @property
    def qt_key(self) -> tuple:
        """Cache key for objects that depend on (q, t) only."""
        return self.key[:2]

    def with_u(self, u, tag) -> "ToroidalParams":
        return ToroidalParams(self.q, self.t, u, key=self.key[:2] + (tag,))

    def scalar(self, x):
        """Lift an int or Fraction into this parameter field."""
        return self.one * x

    @property
    def is_symbolic(self) -> bool:
        return self.key[0] == SYMBOLIC and isinstance(self.q, RatFunc) and not self.q.is_constant()


@lru_cache(maxsize=None)
def symbolic_params() -> ToroidalParams:
    return ToroidalParams(RatFunc.var("q"), RatFunc.var("t"), RatFunc.var("u"),
                          key=(SYMBOLIC, (), "u"))


def params_from_context(ctx: EvalContext) -> ToroidalParams:
    """Parameters specialised at ``ctx`` (u stays symbolic unless assigned)."""
    if ctx.mode == SYMBOLIC:
        return symbolic_params()
    mode_key = ctx.key()
    qt = tuple(kv for kv in mode_key[1] if kv[0] in ("q", "t"))
    u_tag = dict(mode_key[1]).get("u", "u")
    return ToroidalParams(ctx.value("q"), ctx.value("t"), ctx.value("u"),
                          key=(ctx.mode, qt, u_tag))


def epsilon(lam, u, v):
    """(1/v - 1) * sum_i (u^lam_i - 1) v^i."""
    one = u ** 0
    total = one * 0
    for i, part in enumerate(lam, start=1):
        total = total + (u ** part - 1) * v ** i
    return (one / v - 1) * total


def eps(lam, params: ToroidalParams):
    return epsilon(lam, params.one / params.sq, params.st)


def epsbar(lam, params: ToroidalParams):
    return epsilon(lam, params.sq, params.one / params.st)


__all__ = ["ToroidalParams", "symbolic_params", "params_from_context",
           "epsilon", "eps", "epsbar", "ModP"]
