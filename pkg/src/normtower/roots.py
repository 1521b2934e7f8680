"""Root-of-unity content of a base field.

Records, for each prime p, the largest k with a primitive p^k-th root of
unity present. Two encodings: a cyclotomic field by its conductor
(normalized odd or divisible by 4), or a finite field by its order.
"""

from dataclasses import dataclass

from .numtheory import factorize, valuation


@dataclass(frozen=True)
class RootOfUnityContent:
    kind: str  # "cyclotomic" | "finite_field"
    value: int  # conductor N, or field order l

    def __post_init__(self):
        if self.kind == "cyclotomic":
            if self.value < 1:
                raise ValueError("conductor must be positive")
            if self.value % 2 == 0 and self.value % 4 != 0:
                raise ValueError(
                    "conductor must be odd or divisible by 4 "
                    "(Q(xi_2m) = Q(xi_m) for odd m)"
                )
        elif self.kind == "finite_field":
            if self.value < 2:
                raise ValueError("field order must be >= 2")
            _, fac = factorize(self.value)
            if len(fac) != 1:
                raise ValueError(f"{self.value} is not a prime power")
        else:
            raise ValueError(f"unknown kind {self.kind!r}")

    @classmethod
    def cyclotomic(cls, conductor):
        if conductor % 2 == 0 and conductor % 4 != 0:
            conductor //= 2
        return cls("cyclotomic", conductor)

    @classmethod
    def finite_field(cls, order):
        return cls("finite_field", order)

    def max_power(self, p):
        """Largest k with a primitive p^k-th root of unity, 0 if none.

        Cyclotomic: xi_{p^k} in Q(xi_N) iff p^k | N, except that -1 is
        always present. Finite field: iff p^k | l - 1 (so 0 whenever p is
        the characteristic).
        """
        if self.kind == "cyclotomic":
            k = valuation(self.value, p) if self.value > 1 else 0
            if p == 2:
                k = max(k, 1)
            return k
        return valuation(self.value - 1, p) if (self.value - 1) % p == 0 else 0

    def has_root(self, p, k):
        return k <= self.max_power(p)

    def describe(self):
        if self.kind == "cyclotomic":
            return f"Q(xi_{self.value})" if self.value > 1 else "Q"
        return f"F_{self.value}"

    def to_json(self):
        if self.kind == "cyclotomic":
            return {"kind": "cyclotomic", "conductor": self.value}
        return {"kind": "finite_field", "order": self.value}

    @classmethod
    def from_json(cls, data):
        if data.get("kind") == "cyclotomic":
            return cls.cyclotomic(data["conductor"])
        if data.get("kind") == "finite_field":
            return cls.finite_field(data["order"])
        raise ValueError(f"unknown root content {data!r}")
