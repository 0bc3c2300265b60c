"""Character quadruples attached to a degree-m Fermat surface.

A character vector is (a0, a1, a2, a3) with every coordinate nonzero mod m
and coordinate sum divisible by m. Its weight (the representative sum in
(0, m) divided by m) lies in {1, 2, 3} and fixes the Hodge type of the
two-form eigenspace the vector indexes. Tables elsewhere abbreviate a
vector by [a1, a2, a3]; a0 is recovered from the sum condition.
"""

from dataclasses import dataclass
from math import gcd


@dataclass(frozen=True)
class CharacterVector:
    m: int
    a: tuple

    def __post_init__(self):
        m = self.m
        if m < 2:
            raise ValueError("degree must be at least 2")
        a = tuple(self.a)
        if len(a) != 4:
            raise ValueError(f"need four coordinates, got {len(a)}")
        norm = tuple(x % m for x in a)
        if any(x == 0 for x in norm):
            raise ValueError(f"coordinates must be nonzero mod {m}: {a}")
        if sum(norm) % m != 0:
            raise ValueError(f"coordinate sum must vanish mod {m}: {a}")
        object.__setattr__(self, "a", norm)

    @classmethod
    def from_triple(cls, m, triple):
        a1, a2, a3 = triple
        a0 = -(a1 + a2 + a3) % m
        return cls(m, (a0, a1, a2, a3))

    @property
    def triple(self):
        return self.a[1:]

    def scaled(self, u):
        """Coordinatewise multiple u * alpha for a unit u mod m."""
        if gcd(u, self.m) != 1:
            raise ValueError(f"{u} is not a unit mod {self.m}")
        return CharacterVector(self.m, tuple(u * x % self.m for x in self.a))

    def __repr__(self):
        return f"CharacterVector(m={self.m}, a={self.a})"


def units_mod(m):
    return [u for u in range(1, m) if gcd(u, m) == 1]


def enumerate_A(m):
    """All character vectors of degree m, lexicographic on (a1, a2, a3)."""
    if m < 2:
        raise ValueError("degree must be at least 2")
    out = []
    for a1 in range(1, m):
        for a2 in range(1, m):
            for a3 in range(1, m):
                a0 = -(a1 + a2 + a3) % m
                if a0 != 0:
                    out.append(CharacterVector(m, (a0, a1, a2, a3)))
    return out


def alpha_norm(alpha):
    """Weight of alpha: representative sum over m, always 1, 2 or 3."""
    return sum(alpha.a) // alpha.m


def is_algebraic(alpha):
    """True when every unit multiple of alpha has weight 2."""
    return all(alpha_norm(alpha.scaled(u)) == 2 for u in units_mod(alpha.m))


def galois_orbit(alpha):
    """The set of unit multiples u * alpha."""
    return {alpha.scaled(u) for u in units_mod(alpha.m)}


def hodge_type(alpha):
    n = alpha_norm(alpha)
    return (n - 1, 3 - n)
