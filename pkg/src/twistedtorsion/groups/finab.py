"""Finite abelian groups Z/q1 + ... + Z/qr and epimorphisms Z^n -> G."""
from dataclasses import dataclass
from itertools import product
from math import lcm, prod
from typing import Tuple

from ..errors import ValidationError
from ..scalars.linalg import smith_normal_form

__all__ = ["FinAbGroup", "EpiToG"]


@dataclass(frozen=True)
class FinAbGroup:
    invariant_factors: Tuple[int, ...] = ()

    def __post_init__(self):
        factors = tuple(int(q) for q in self.invariant_factors)
        if any(q < 2 for q in factors):
            raise ValidationError("cyclic factors of G must have order >= 2")
        object.__setattr__(self, "invariant_factors", factors)

    @property
    def rank(self):
        return len(self.invariant_factors)

    @property
    def order(self):
        return prod(self.invariant_factors)

    @property
    def exponent(self):
        return lcm(1, *self.invariant_factors)

    def elements(self):
        """All elements, in lexicographic order."""
        return list(product(*(range(q) for q in self.invariant_factors)))

    def reduce(self, v):
        return tuple(x % q for x, q in zip(v, self.invariant_factors))

    def add(self, u, v):
        return tuple((x + y) % q for x, y, q in zip(u, v, self.invariant_factors))

    def zero(self):
        return (0,) * self.rank

    def __str__(self):
        if not self.invariant_factors:
            return "1"
        return " x ".join(f"Z/{q}" for q in self.invariant_factors)


@dataclass(frozen=True)
class EpiToG:
    """Homomorphism Z^n -> G; column i of ``matrix`` is the image of t_i."""

    group: FinAbGroup
    matrix: Tuple[Tuple[int, ...], ...]
    nvars: int

    def __post_init__(self):
        mat = tuple(tuple(int(x) for x in row) for row in self.matrix)
        if len(mat) != self.group.rank:
            raise ValidationError(
                f"pi_bar must have one row per cyclic factor of G ({self.group.rank}), got {len(mat)}"
            )
        if any(len(row) != self.nvars for row in mat):
            raise ValidationError(f"pi_bar rows must have {self.nvars} entries")
        object.__setattr__(self, "matrix", mat)

    @classmethod
    def trivial(cls, nvars):
        return cls(FinAbGroup(()), (), nvars)

    def image(self, v):
        """Image of an exponent vector v in Z^n, reduced in G."""
        return self.group.reduce(tuple(sum(a * b for a, b in zip(row, v)) for row in self.matrix))

    def column(self, i):
        return tuple(row[i] for row in self.matrix)

    def is_surjective(self):
        """Surjective iff the SNF of [pi_bar | diag(q)] has all invariant factors 1."""
        r = self.group.rank
        if r == 0:
            return True
        stacked = [list(self.matrix[i]) + [self.group.invariant_factors[i] if j == i else 0
                                            for j in range(r)] for i in range(r)]
        _, D, _ = smith_normal_form(stacked)
        return all(D[i][i] == 1 for i in range(r))

    def validate(self):
        if not self.is_surjective():
            raise ValidationError(f"pi_bar is not surjective onto {self.group}")
        return self
