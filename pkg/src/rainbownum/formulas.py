"""Closed-form rainbow numbers with exact applicability guards.

Each rule either returns an RbResult or raises NotCoveredError naming the
failed condition; nothing here ever falls back to the search oracle
silently (the Z_9 instance of x1 + x2 + x3 = 0 shows the composite formula
is genuinely partial).  A witness coloring attached to a result is
re-verified rainbow-free with exactly value - 1 colors before return.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from . import modring
from .coloring import Coloring, find_rainbow
from .constructions import symmetric_interval_coloring, two_power_coloring
from .equation import Equation, every_3coloring_rainbow, normalize_b_to_zero
from .errors import ConsistencyError, NotCoveredError

PROV_CONVENTION_Z2 = "convention-z2"
PROV_Z3 = "z3-cases"
PROV_ZP_DICHOTOMY = "zp-dichotomy"
PROV_EQUAL_COEFFS = "equal-coefficients"
PROV_TWO_POWER = "two-power"
PROV_ZN_PRODUCT = "zn-product"
PROV_BRUTE = "brute-force"


@dataclass(frozen=True)
class RbResult:
    """A rainbow number plus where it came from.

    value lies in [3, n+1].  witness, when attached, is a rainbow-free
    exact coloring with exactly value - 1 colors: a lower-bound
    certificate.
    """

    value: int
    provenance: str
    witness: Coloring | None = None


def _with_witness(value: int, provenance: str, witness: Coloring, eq: Equation) -> RbResult:
    if witness.r != value - 1:
        raise ConsistencyError(
            f"witness has {witness.r} colors but value is {value}"
        )
    if not find_rainbow(witness, eq).rainbow_free:
        raise ConsistencyError(f"witness for {eq} is not rainbow-free")
    return RbResult(value, provenance, witness)


def rb_z3(eq: Equation) -> RbResult:
    """rb(Z_3, eq) for arbitrary coefficients, including zeros.

    3 when (b = 0 with a repeated coefficient) or (b != 0 with an unequal
    pair); otherwise 4, the convention value: the single exact 3-coloring
    of Z_3 is then rainbow-free.
    """
    if eq.n != 3:
        raise ValueError(f"modulus must be 3, got {eq.n}")
    a1, a2, a3, b = eq.a1, eq.a2, eq.a3, eq.b
    some_equal = a1 == a2 or a1 == a3 or a2 == a3
    all_equal = a1 == a2 == a3
    if (b == 0 and some_equal) or (b != 0 and not all_equal):
        return RbResult(3, PROV_Z3)
    return RbResult(4, PROV_Z3)


def rb_zp(p: int, eq: Equation) -> RbResult:
    """rb(Z_p, eq) for prime p.

    p = 2 is 3 by convention and p = 3 delegates to rb_z3.  For p >= 5 the
    coefficients must all be units (NotCoveredError otherwise); equal
    coefficients give 4, and unequal ones give 3 exactly when the dilation
    values generate Z_p^* or a1+a2+a3 = 0 != b, else 4.  The
    symmetric-interval witness is attached in the equal-coefficient b = 0
    case.
    """
    if eq.n != p:
        raise ValueError(f"equation is mod {eq.n}, not mod {p}")
    if not modring.is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p == 2:
        return RbResult(3, PROV_CONVENTION_Z2)
    if p == 3:
        return rb_z3(eq)
    if any(a == 0 for a in eq.coeffs):
        raise NotCoveredError(
            f"coefficients {eq.coeffs} mod {p} are not all units; only the "
            "search oracle applies"
        )
    if eq.a1 == eq.a2 == eq.a3:
        if eq.b == 0:
            return _with_witness(4, PROV_EQUAL_COEFFS, symmetric_interval_coloring(p), eq)
        return RbResult(4, PROV_EQUAL_COEFFS)
    value = 3 if every_3coloring_rainbow(eq) else 4
    return RbResult(value, PROV_ZP_DICHOTOMY)


def rb_two_power(alpha: int, eq: Equation) -> RbResult:
    """rb(Z_{2^alpha}, eq) = alpha + 2 when all coefficients are odd.

    The recursive even/odd witness is attached (translated when b != 0;
    the coefficient sum of three odds is odd, hence a unit, so the
    translation to right side 0 always exists).
    """
    if alpha < 1:
        raise ValueError(f"alpha must be >= 1, got {alpha}")
    n = 2 ** alpha
    if eq.n != n:
        raise ValueError(f"equation is mod {eq.n}, not mod {n}")
    if any(a % 2 == 0 for a in eq.coeffs):
        raise NotCoveredError(
            f"coefficients {eq.coeffs} mod {n} include an even one; only the "
            "search oracle applies"
        )
    witness = two_power_coloring(alpha)
    if eq.b != 0:
        _, offset = normalize_b_to_zero(eq)
        witness = witness.translate(-offset % n)
    return _with_witness(alpha + 2, PROV_TWO_POWER, witness, eq)


def rb_zn(n: int, eq: Equation) -> RbResult:
    """Composite formula: 2 + sum over p^a exactly dividing n of
    a * (rb(Z_p, eq mod p) - 2).

    Covered exactly when a1*a2*a3 is a unit mod n and one of
      1) b != 0 and a1+a2+a3 a unit mod n,
      2) b = 0 and 3 does not divide n,
      3) b = 0, 3 | n, and a1+a2+a3 not divisible by 3,
    holds; the first failing condition is reported in NotCoveredError.
    When b != 0 the equation is translated to right side 0 over Z_n first
    (legitimate under condition 1) and only then reduced mod each prime.
    """
    if eq.n != n:
        raise ValueError(f"equation is mod {eq.n}, not mod {n}")
    if gcd(eq.a1 * eq.a2 * eq.a3, n) != 1:
        raise NotCoveredError(f"a1*a2*a3 is not a unit mod {n}")
    if eq.b != 0:
        if gcd(eq.a_sum, n) != 1:
            raise NotCoveredError(
                f"b != 0 and a1+a2+a3 = {eq.a_sum} is not a unit mod {n} (condition 1)"
            )
        eq0, _ = normalize_b_to_zero(eq)
    else:
        if n % 3 == 0 and eq.a_sum % 3 == 0:
            raise NotCoveredError(
                "b = 0, 3 | n, and a1+a2+a3 is divisible by 3 (condition 3); "
                "Z_9 shows the formula fails here"
            )
        eq0 = eq
    value = 2
    for p, a in modring.factorize(n):
        value += a * (rb_zp(p, eq0.reduce_mod(p)).value - 2)
    return RbResult(value, PROV_ZN_PRODUCT)


def rb_formula(eq: Equation) -> RbResult:
    """Dispatch to the sharpest covering closed form.

    Primes go through rb_zp (which also covers a1+a2+a3 = 0 with b != 0,
    unreachable for rb_zn), powers of two through rb_two_power (witness
    attached), everything else through rb_zn.
    """
    n = eq.n
    if modring.is_prime(n):
        return rb_zp(n, eq)
    fact = modring.factorize(n)
    if len(fact) == 1 and fact[0][0] == 2:
        return rb_two_power(fact[0][1], eq)
    return rb_zn(n, eq)
