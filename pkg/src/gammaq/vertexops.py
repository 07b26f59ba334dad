"""Executable vertex operators on the odd-power-sum ring.

Each operator is a product (creation exponential) * (annihilation
exponential) of series in odd power sums and their derivatives, with a mode
expansion in a formal variable z.  A mode is extracted exactly:

  * the annihilation exponential is expanded on the argument first -- every
    d/dp_n strictly lowers degree, so only finitely many terms act, bounding
    z-exponents below by -deg(f);
  * the creation exponential is then truncated at exactly the z-degree the
    requested mode needs.

No series-order parameter is exposed; results are exact.

Specs provided here:

  Q_SPEC      creation 2/n,            annihilation -1        (modes ~ z^n)
  G_SPEC      creation 2/n,            annihilation t^n - 1   (modes ~ z^n)
  GSTAR_SPEC  creation 2(t^n - 1)/n,   annihilation +1        (modes ~ z^-n)
  QSTAR_SPEC  no creation part,        annihilation +1        (modes ~ z^-n)

Applying Q-modes of a strict partition to the vacuum yields the Schur
Q-function vectors; G-modes yield the Q-Hall-Littlewood vectors.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial, prod
from typing import Callable, Sequence

from .gamma import GammaElement, d_dp, one, pair
from .partitions import (
    Partition,
    check_partition,
    check_strict,
    enumerate_odd,
    enumerate_strict,
    multiplicities,
    remove_part,
)
from .tpoly import ONE, TPoly


@dataclass(frozen=True)
class OperatorSpec:
    """Creation/annihilation coefficient rules for one vertex operator.

    creation(n) multiplies p_n z^n in the creation exponential and
    annihilation(n) multiplies d/dp_n z^{-n} in the annihilation
    exponential, for each odd n >= 1.  star selects the z^{-n} mode
    grading used by adjoint series.
    """

    key: str
    creation: Callable[[int], TPoly] = field(compare=False)
    annihilation: Callable[[int], TPoly] = field(compare=False)
    star: bool = False


def _tp(*coeffs) -> TPoly:
    return TPoly(coeffs)


def _tn_minus_1(n: int) -> TPoly:
    return TPoly((-1,) + (0,) * (n - 1) + (1,))


Q_SPEC = OperatorSpec(
    "Q",
    creation=lambda n: _tp(Fraction(2, n)),
    annihilation=lambda n: _tp(-1),
)

G_SPEC = OperatorSpec(
    "G",
    creation=lambda n: _tp(Fraction(2, n)),
    annihilation=_tn_minus_1,
)

GSTAR_SPEC = OperatorSpec(
    "G*",
    creation=lambda n: _tn_minus_1(n) * Fraction(2, n),
    annihilation=lambda n: ONE,
    star=True,
)

QSTAR_SPEC = OperatorSpec(
    "q*",
    creation=lambda n: TPoly(),
    annihilation=lambda n: ONE,
    star=True,
)

_creation_memo: dict[tuple[str, int], GammaElement] = {}
_vacuum_memo: dict[tuple[str, tuple[int, ...]], GammaElement] = {}


def clear_memos() -> None:
    _creation_memo.clear()
    _vacuum_memo.clear()


def _aut(p: Partition) -> int:
    return prod(factorial(m) for m in multiplicities(p).values())


def _creation_term(spec: OperatorSpec, r: int) -> GammaElement:
    """Coefficient of z^r in the creation exponential, as a ring element."""
    key = (spec.key, r)
    cached = _creation_memo.get(key)
    if cached is not None:
        return cached
    terms: dict[Partition, TPoly] = {}
    for rho in enumerate_odd(r):
        w = ONE
        for part in rho:
            w = w * spec.creation(part)
        w = w * Fraction(1, _aut(rho))
        if not w.is_zero:
            terms[rho] = w
    result = GammaElement._from_raw(terms)
    _creation_memo[key] = result
    return result


def _annihilation_expansion(spec: OperatorSpec, f: GammaElement) -> dict[int, GammaElement]:
    """Map s -> coefficient of z^{-s} in (annihilation exponential) f."""
    if f.is_zero:
        return {}
    out = {0: f}
    for s in range(1, f.max_weight() + 1):
        acc = GammaElement()
        for rho in enumerate_odd(s):
            g = f
            for part in rho:
                g = d_dp(part, g)
                if g.is_zero:
                    break
            if g.is_zero:
                continue
            w = ONE
            for part in rho:
                w = w * spec.annihilation(part)
            acc = acc + g * (w * Fraction(1, _aut(rho)))
        if not acc.is_zero:
            out[s] = acc
    return out


def apply_component(spec: OperatorSpec, m: int, f: GammaElement) -> GammaElement:
    """Apply the mode of index m (coefficient of z^m, or z^{-m} for starred specs)."""
    result = GammaElement()
    for s, g in _annihilation_expansion(spec, f).items():
        r = (s - m) if spec.star else (m + s)
        if r < 0:
            continue
        result = result + _creation_term(spec, r) * g
    return result


def compose_modes(spec: OperatorSpec, modes: Sequence[int], f: GammaElement) -> GammaElement:
    """Apply modes right to left: modes[0] acts last."""
    for m in reversed(modes):
        f = apply_component(spec, m, f)
    return f


def _modes_on_vacuum(spec: OperatorSpec, modes: tuple[int, ...]) -> GammaElement:
    """Memoized compose_modes on the vacuum; shared across common suffixes."""
    if not modes:
        return one()
    key = (spec.key, modes)
    cached = _vacuum_memo.get(key)
    if cached is not None:
        return cached
    result = apply_component(spec, modes[0], _modes_on_vacuum(spec, modes[1:]))
    _vacuum_memo[key] = result
    return result


def schur_q(lam: Partition) -> GammaElement:
    """The Schur Q-function vector of a strict partition."""
    return _modes_on_vacuum(Q_SPEC, check_strict(lam))


def qhl(lam: Partition) -> GammaElement:
    """The Q-Hall-Littlewood vector of a strict partition."""
    return _modes_on_vacuum(G_SPEC, check_strict(lam))


def g_modes_on_vacuum(modes: Sequence[int]) -> GammaElement:
    """G-mode composition on the vacuum for arbitrary integer sequences."""
    return _modes_on_vacuum(G_SPEC, tuple(int(m) for m in modes))


def q_row(n: int) -> GammaElement:
    """The one-row Schur Q-function q_n; q_0 = 1."""
    if n < 0:
        raise ValueError("q_n undefined for negative n")
    return _creation_term(Q_SPEC, n)


def q_or_zero(n: int) -> GammaElement:
    """q_n, extended by zero to negative indices."""
    return q_row(n) if n >= 0 else GammaElement()


def q_prod(lam: Partition) -> GammaElement:
    """Product of one-row Schur Q-functions over the parts of lam."""
    result = one()
    for part in check_partition(lam):
        result = result * q_row(part)
    return result


def gstar_on_schur(k: int, lam: Partition) -> GammaElement:
    """Closed form for the k-th starred G-mode on a Schur Q-vector:

        sum_i (-1)^{i-1} 2 t^{lam_i - k} q_{lam_i - k} Q_{lam^(i)} . 1

    Terms with lam_i < k vanish since q_n = 0 for n < 0.
    """
    if k < 1:
        raise ValueError("mode index must be positive")
    lam = check_strict(lam)
    result = GammaElement()
    for i, part in enumerate(lam):
        r = part - k
        if r < 0:
            continue
        term = q_row(r) * schur_q(remove_part(lam, i + 1))
        result = result + term * TPoly.term(2 * (-1) ** i, r)
    return result


def expand_in_schur_q(f: GammaElement) -> dict[Partition, TPoly]:
    """Expansion of a homogeneous element in the Schur Q-basis.

    Uses orthogonality: the coefficient at a strict lam is
    2^{-l(lam)} <f, Q_lam . 1>.
    """
    if f.is_zero:
        return {}
    out: dict[Partition, TPoly] = {}
    for lam in enumerate_strict(f.degree()):
        c = pair(f, schur_q(lam)) * Fraction(1, 2 ** len(lam))
        if not c.is_zero:
            out[lam] = c
    return out
