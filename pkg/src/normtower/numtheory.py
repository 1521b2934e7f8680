"""Elementary number theory helpers: primality, factorization, square roots mod p."""

from fractions import Fraction

from .errors import FactorizationError

# Strong-pseudoprime bases giving a deterministic test below 3.3 * 10^24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_TRIAL_BOUND = 10**6


def is_prime(n):
    """Miller-Rabin, deterministic for every n this package ever sees."""
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n == q:
            return True
        if n % q == 0:
            return False
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def valuation(n, p):
    """Largest k with p^k dividing n; n must be a nonzero integer."""
    if n == 0:
        raise ValueError("valuation of 0 is undefined")
    n = abs(n)
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


def factorize(n):
    """Factor a nonzero rational into {prime: exponent} plus a sign.

    Returns (sign, factors). Denominator primes get negative exponents.
    Raises FactorizationError when a composite cofactor survives trial
    division up to 10^6 and is not provably prime.
    """
    n = Fraction(n)
    if n == 0:
        raise ValueError("cannot factor 0")
    sign = 1 if n > 0 else -1
    factors = {}
    for value, unit in ((n.numerator, 1), (n.denominator, -1)):
        value = abs(value)
        for p in _small_primes(value):
            k = valuation(value, p)
            value //= p**k
            factors[p] = factors.get(p, 0) + unit * k
            if value == 1:
                break
        if value > 1:
            if is_prime(value):
                factors[value] = factors.get(value, 0) + unit
            else:
                raise FactorizationError(
                    f"composite cofactor {value} exceeds trial bound"
                )
    return sign, {p: e for p, e in sorted(factors.items()) if e}


def _small_primes(value):
    if value % 2 == 0:
        yield 2
    d = 3
    while d * d <= value and d <= _TRIAL_BOUND:
        if value % d == 0:
            yield d
        d += 2


def legendre(a, p):
    """Legendre symbol (a/p) for odd prime p, in {-1, 0, 1}."""
    a %= p
    if a == 0:
        return 0
    r = pow(a, (p - 1) // 2, p)
    return 1 if r == 1 else -1


def sqrt_mod_prime(a, p):
    """A square root of a modulo an odd prime p, or None. Tonelli-Shanks."""
    a %= p
    if a == 0:
        return 0
    if legendre(a, p) != 1:
        return None
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    # write p-1 = q * 2^s with q odd
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while legendre(z, p) != -1:
        z += 1
    m, c = s, pow(z, q, p)
    t, r = pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return r
