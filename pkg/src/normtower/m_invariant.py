"""The norm invariant m for each concrete tower construction.

For a cyclic extension K/F of degree p^n with intermediate fields K_s of
degree p^s, m(K/F) is one less than the least s such that the p-th root of
unity is a norm from K to K_s, or -infinity when it is already a norm to F.
Each supported construction reduces this to exact arithmetic: root-of-unity
content for the Kummer-type towers, residue computations for the local
ones, and Hilbert symbols for the quartic family over Q.
"""

import math
from dataclasses import dataclass

from . import galois_module, padic, ufd_norm
from .errors import (
    CrossCheckMismatch,
    InadmissibleSpec,
    InternalCheckError,
    MissingRootOfUnity,
    NotFoundBelowLimit,
)
from .mvalue import NEG_INF, UNDETERMINED, UNDETERMINED_LE0, format_m
from .numtheory import factorize, is_prime
from .roots import RootOfUnityContent

# ---------------------------------------------------------------------------
# tower constructions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BrauerRowenSpec:
    """Fixed field of a cyclotomic function field chosen so that exactly
    the p^(n-t)-th roots of unity survive."""

    p: int
    n: int
    t: int

    @property
    def variant(self):
        return "brauer_rowen"


@dataclass(frozen=True)
class FunctionFieldSpec:
    """Kummer tower over a rational function field with prescribed
    root-of-unity content in the constant field."""

    p: int
    n: int
    base: RootOfUnityContent

    @property
    def variant(self):
        return "function_field"


@dataclass(frozen=True)
class LocalCyclotomicSpec:
    """Degree-p^n subfield of the q-th cyclotomic extension of Q_q,
    for q a prime congruent to 1 + p^n mod p^(n+1)."""

    p: int
    n: int
    q: int

    @property
    def variant(self):
        return "local_cyclotomic"


@dataclass(frozen=True)
class LocalKummerSpec:
    """K = F(a^(1/p^n)) over F = Q_l(xi_{p^(n+1)})."""

    p: int
    n: int
    l: int

    @property
    def variant(self):
        return "local_kummer"


@dataclass(frozen=True)
class BiquadraticSpec:
    """The cyclic quartic tower Q(sqrt(d(a + sqrt(a)))) over Q,
    with a = 1 + c^2, c a nonzero multiple of 4, d = +-1."""

    a: int
    d: int

    @property
    def p(self):
        return 2

    @property
    def n(self):
        return 2

    @property
    def variant(self):
        return "biquadratic"


@dataclass(frozen=True)
class MResult:
    m: object
    evidence: tuple

    @property
    def m_text(self):
        return format_m(self.m)


def compute_m(spec, precision=None):
    return explain_m(spec, precision=precision).m


def explain_m(spec, precision=None):
    if isinstance(spec, BrauerRowenSpec):
        return _m_brauer_rowen(spec)
    if isinstance(spec, FunctionFieldSpec):
        return _m_function_field(spec)
    if isinstance(spec, LocalCyclotomicSpec):
        return _m_local_cyclotomic(spec)
    if isinstance(spec, LocalKummerSpec):
        return _m_local_kummer(spec)
    if isinstance(spec, BiquadraticSpec):
        return _m_biquadratic(spec, precision or padic.DEFAULT_PRECISION)
    raise ValueError(f"unknown tower spec {spec!r}")


def _require(cond, message):
    if not cond:
        raise InadmissibleSpec(message)


def _m_brauer_rowen(spec):
    p, n, t = spec.p, spec.n, spec.t
    _require(is_prime(p), f"{p} is not prime")
    _require(n >= 1, "n must be >= 1")
    _require(0 <= t <= n - 1, f"t must lie in 0..n-1, got {t}")
    base = RootOfUnityContent.cyclotomic(p ** (n - t))
    s = base.max_power(p)
    if s != n - t:
        raise InternalCheckError(f"conductor p^{n - t} carries content {s}")
    m = ufd_norm.m_from_root_content(base, p, n)
    if m != t:
        raise InternalCheckError(f"chain gave m = {m}, parameterization says {t}")
    return MResult(
        m,
        (
            f"base field contains xi_{p ** (n - t)} but not xi_{p ** (n - t + 1)}",
            f"xi_{p} is a norm to level s exactly for s in {t + 1}..{n}",
            f"m = {t}",
        ),
    )


def _m_function_field(spec):
    p, n = spec.p, spec.n
    _require(is_prime(p), f"{p} is not prime")
    _require(n >= 1, "n must be >= 1")
    try:
        m = ufd_norm.m_from_root_content(spec.base, p, n)
    except MissingRootOfUnity as err:
        raise InadmissibleSpec(str(err)) from None
    s = spec.base.max_power(p)
    evidence = [
        f"largest p-power root of unity in {spec.base.describe()}: xi_{p ** s}",
    ]
    if m == NEG_INF:
        evidence.append(
            f"xi_{p ** (n + 1)} present, so xi_{p} is a norm from the full tower"
        )
    else:
        evidence.append(
            f"xi_{p} is a norm to level s exactly for s in {m + 1}..{n} (upward closed)"
        )
        evidence.append(f"m = n - {s} = {m}")
    return MResult(m, tuple(evidence))


def _m_local_cyclotomic(spec):
    p, n, q = spec.p, spec.n, spec.q
    _require(is_prime(p), f"{p} is not prime")
    _require(n >= 1, "n must be >= 1")
    member = residue_norm_test(p, n, q)
    if member:
        return MResult(
            NEG_INF, (f"some element of order {p} is a p^n-th power mod {q}",)
        )
    cofactor = (q - 1) // p**n
    return MResult(
        0,
        (
            f"q = {q} is congruent to 1 + {p}^{n} mod {p}^{n + 1}",
            f"(q-1)/p^n = {cofactor} is coprime to {p}, so the p^n-th powers "
            f"in F_{q}^x contain no element of order {p}",
            "xi_p is not a norm to the base, and the degree-p subextension "
            "already absorbs it: m = 0",
        ),
    )


def _m_local_kummer(spec):
    p, n, l = spec.p, spec.n, spec.l
    _require(is_prime(p), f"{p} is not prime")
    _require(is_prime(l), f"{l} is not prime")
    _require(n >= 1, "n must be >= 1")
    return MResult(
        NEG_INF,
        (
            f"xi_{p ** (n + 1)} lies in the base field and is fixed by the "
            f"Galois group of the Kummer extension",
            f"its norm is its p^{n}-th power, which is xi_{p}",
            "so xi_p is a norm from the full extension: m = -inf",
        ),
    )


def _m_biquadratic(spec, precision):
    a, d = spec.a, spec.d
    _require(d in (1, -1), f"d must be +1 or -1, got {d}")
    _require(a > 1, "a must exceed 1")
    c = math.isqrt(a - 1)
    _require(c * c == a - 1, f"a = {a} is not of the form 1 + c^2")
    _require(c != 0 and c % 4 == 0, f"c = {c} must be a nonzero multiple of 4")
    evidence = [f"a = {a} = 1 + {c}^2 with 4 | {c}; 8 divides a - 1 = {a - 1}"]
    certified = False

    # real places: d(a + sqrt(a)) and d(a - sqrt(a)) both carry the sign of
    # d, because 0 < sqrt(a) < a; a negative entry makes the completion of
    # the quartic field C over R, and -1 is not a norm from C to R
    if d < 0:
        evidence.append(
            "both real embeddings of d(a +- sqrt(a)) are negative, so the "
            "quartic completes to C over R and -1 is not a local norm there"
        )
        certified = True
    else:
        evidence.append("d(a +- sqrt(a)) > 0 at the real places; no verdict there")

    root = padic.hensel_sqrt(padic.PadicNumber.from_fraction(2, a, precision))
    if root is None:
        raise InternalCheckError("a = 1 mod 8 must be a 2-adic square")
    evidence.append(
        f"sqrt({a}) exists in Q_2 (unit 1 mod 8); both completions over 2 are Q_2"
    )
    a2 = padic.PadicNumber.from_fraction(2, a, precision)
    for sign, label in ((1, "a + sqrt(a)"), (-1, "a - sqrt(a)")):
        branch = padic.padic_add(a2, root if sign > 0 else padic.padic_neg(root))
        value = padic.padic_mul(padic.PadicNumber.from_fraction(2, d, precision), branch)
        is_sum = padic.sum_of_two_squares_Q2(value)
        if is_sum != padic.two_squares_class_oracle(value):
            raise InternalCheckError(
                f"symbol and square-class oracle disagree on d({label})"
            )
        unit8 = value.residue_unit(3)
        evidence.append(
            f"d({label}) has valuation {value.valuation} and unit {unit8} mod 8: "
            + ("a sum of two squares in Q_2" if is_sum else "not a sum of two squares in Q_2")
        )
        if not is_sum:
            certified = True
    if certified:
        evidence.append(
            "-1 fails to be a norm in some completion of the quartic over "
            "its quadratic subfield, so it is not a global norm: m = 1"
        )
        return MResult(1, tuple(evidence))
    evidence.append(
        "-1 is a local norm at every tested place; m <= 0 but the global "
        "norm question is not decided here"
    )
    return MResult(UNDETERMINED_LE0, tuple(evidence))


# ---------------------------------------------------------------------------
# arithmetic helpers named in the construction
# ---------------------------------------------------------------------------


def find_dirichlet_prime(p, n, limit=10**6):
    """Smallest prime q with q = 1 + p^n mod p^(n+1)."""
    if not is_prime(p) or n < 1:
        raise ValueError("p must be prime and n >= 1")
    start = 1 + p**n
    if limit < start:
        raise ValueError(f"limit {limit} is below 1 + p^n = {start}")
    step = p ** (n + 1)
    q = start
    while q <= limit:
        if is_prime(q):
            return q
        q += step
    raise NotFoundBelowLimit(
        f"no prime = 1 + {p}^{n} mod {p}^{n + 1} up to {limit}"
    )


def residue_norm_test(p, n, q, exhaustive_bound=200000):
    """Whether some element of order p in F_q^x is a p^n-th power.

    Small q: exhaust the group. Large q: the p^n-th powers form the
    subgroup of order (q-1)/p^n, which contains an order-p element iff p
    divides that cofactor.
    """
    _require(is_prime(q), f"q = {q} is not prime")
    _require(
        q % p ** (n + 1) == (1 + p**n) % p ** (n + 1),
        f"q = {q} is not 1 + {p}^{n} mod {p}^{n + 1}",
    )
    if q <= exhaustive_bound:
        powers = {pow(x, p**n, q) for x in range(1, q)}
        order_p = {x for x in range(2, q) if pow(x, p, q) == 1}
        return bool(order_p & powers)
    return (q - 1) // p**n % p == 0


def index_bound_check(m, ind, p=None):
    """Whether ind <= p^(m+1), reading p^(-inf + 1) as 1.

    p is inferred from ind when not given; ind = 1 passes for every m.
    """
    if ind < 1:
        raise ValueError("index must be a positive integer")
    if m != NEG_INF and (not isinstance(m, int) or m < 0):
        raise ValueError(f"m must be -inf or a non-negative integer, got {m!r}")
    if ind == 1:
        return True
    _, fac = factorize(ind)
    if len(fac) != 1:
        raise ValueError(f"index {ind} is not a prime power")
    (base, k), = fac.items()
    if p is not None and base != p:
        raise ValueError(f"index {ind} is not a power of {p}")
    if m == NEG_INF:
        return False
    return k <= m + 1


# ---------------------------------------------------------------------------
# cross-checking a module fixture against a tower spec
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CrossCheckVerdict:
    spec_m: object
    shape_m: object
    note: str


def cross_check_profile(spec, module, precision=None):
    """Compare the m forced by a module's shape with the tower's m.

    A shape without an exceptional summand determines no m; that is
    consistent with m = -inf, with an undecided m <= 0, and, at p = 2,
    with m = 0, whose would-be exceptional summand of dimension 2 is
    itself a free block of rank one and must appear as such.
    """
    spec_m = compute_m(spec, precision=precision)
    if (module.p, module.n) != (spec.p, spec.n):
        raise ValueError(
            f"module is over (p={module.p}, n={module.n}), "
            f"spec wants (p={spec.p}, n={spec.n})"
        )
    profile = galois_module.jordan_profile(module)
    shape = galois_module.classify_profile(profile, module.p, module.n)
    shape_m = galois_module.m_from_shape(shape)
    if shape_m is UNDETERMINED:
        if spec_m == NEG_INF or spec_m is UNDETERMINED_LE0:
            return CrossCheckVerdict(
                spec_m, shape_m, "no exceptional summand; consistent with m <= 0"
            )
        if spec_m == 0 and module.p == 2 and shape.free_ranks[1] > 0:
            return CrossCheckVerdict(
                spec_m,
                shape_m,
                "p = 2, m = 0: the dimension-2 summand is a free block of "
                "size 2, which the shape carries",
            )
        raise CrossCheckMismatch(format_m(spec_m), format_m(shape_m))
    if spec_m == shape_m or (spec_m is UNDETERMINED_LE0 and shape_m == 0):
        return CrossCheckVerdict(spec_m, shape_m, "exceptional summand matches m")
    raise CrossCheckMismatch(format_m(spec_m), format_m(shape_m))


# ---------------------------------------------------------------------------
# JSON form used by the CLI
# ---------------------------------------------------------------------------


def spec_to_json(spec):
    if isinstance(spec, BrauerRowenSpec):
        return {"variant": "brauer_rowen", "p": spec.p, "n": spec.n, "t": spec.t}
    if isinstance(spec, FunctionFieldSpec):
        return {
            "variant": "function_field",
            "p": spec.p,
            "n": spec.n,
            "base": spec.base.to_json(),
        }
    if isinstance(spec, LocalCyclotomicSpec):
        return {"variant": "local_cyclotomic", "p": spec.p, "n": spec.n, "q": spec.q}
    if isinstance(spec, LocalKummerSpec):
        return {"variant": "local_kummer", "p": spec.p, "n": spec.n, "l": spec.l}
    if isinstance(spec, BiquadraticSpec):
        return {"variant": "biquadratic", "a": spec.a, "d": spec.d}
    raise ValueError(f"unknown tower spec {spec!r}")


def spec_from_json(data):
    try:
        variant = data["variant"]
        if variant == "brauer_rowen":
            return BrauerRowenSpec(data["p"], data["n"], data["t"])
        if variant == "function_field":
            return FunctionFieldSpec(
                data["p"], data["n"], RootOfUnityContent.from_json(data["base"])
            )
        if variant == "local_cyclotomic":
            return LocalCyclotomicSpec(data["p"], data["n"], data["q"])
        if variant == "local_kummer":
            return LocalKummerSpec(data["p"], data["n"], data["l"])
        if variant == "biquadratic":
            return BiquadraticSpec(data["a"], data["d"])
    except KeyError as err:
        raise ValueError(f"tower spec JSON lacks key {err}") from None
    raise ValueError(f"unknown tower variant {data.get('variant')!r}")
