"""Finite presentations and their abelianization."""
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from ..errors import UnsupportedPresentationError, ValidationError
from ..scalars.linalg import smith_normal_form
from .words import exponent_sums, parse_word, reduce_word, render_word

__all__ = ["Presentation", "Abelianization", "abelianization"]

Word = Tuple[int, ...]


@dataclass(frozen=True)
class Presentation:
    generator_names: Tuple[str, ...]
    relators: Tuple[Word, ...]
    meridian_indices: Optional[Tuple[int, ...]] = None

    def __post_init__(self):
        k = len(self.generator_names)
        if len(set(self.generator_names)) != k:
            raise ValidationError("generator names must be distinct")
        for r in self.relators:
            for x in r:
                if x == 0 or abs(x) > k:
                    raise ValidationError(f"relator letter {x} references no generator")
        object.__setattr__(self, "relators", tuple(reduce_word(r) for r in self.relators))
        if self.meridian_indices is not None:
            if any(not 0 <= i < k for i in self.meridian_indices):
                raise ValidationError("meridian index out of range")
            object.__setattr__(self, "meridian_indices", tuple(self.meridian_indices))

    @classmethod
    def from_strings(cls, generators: Sequence[str], relators: Sequence[str], meridians=None):
        names = tuple(str(g) for g in generators)
        rels = tuple(parse_word(r, names) for r in relators)
        mer = None
        if meridians is not None:
            mer = tuple(names.index(m) if isinstance(m, str) else int(m) for m in meridians)
        return cls(names, rels, mer)

    @property
    def num_generators(self) -> int:
        return len(self.generator_names)

    @property
    def deficiency(self) -> int:
        return len(self.generator_names) - len(self.relators)

    def require_deficiency_one(self):
        if self.deficiency != 1:
            raise UnsupportedPresentationError(
                f"presentation has {self.num_generators} generators and {len(self.relators)} "
                f"relators; deficiency one is required"
            )

    def relator_strings(self) -> List[str]:
        return [render_word(r, self.generator_names) for r in self.relators]

    def to_json(self):
        out = {"generators": list(self.generator_names), "relators": self.relator_strings()}
        if self.meridian_indices is not None:
            out["meridians"] = [self.generator_names[i] for i in self.meridian_indices]
        return out

    def __str__(self):
        rels = ", ".join(self.relator_strings())
        return f"< {', '.join(self.generator_names)} | {rels} >"


@dataclass
class Abelianization:
    """H_1 of a presentation: Z^rank + torsion, and the projection onto the free part."""

    rank: int
    torsion: List[int]
    phi_matrix: List[List[int]] = field(repr=False)  # rank x num_generators

    def image(self, gen):
        return tuple(row[gen] for row in self.phi_matrix)


def relation_matrix(p: Presentation):
    return [exponent_sums(r, p.num_generators) for r in p.relators]


def abelianization(p: Presentation, require_free=True) -> Abelianization:
    """Smith normal form of the abelianized relator matrix.

    The free-part projection is normalized so that marked meridians map to
    the standard basis whenever their images form one, and otherwise so that
    the first generator with nonzero image maps to a positive vector when
    the rank is one.
    """
    k = p.num_generators
    R = relation_matrix(p)
    if R:
        _, D, V = smith_normal_form(R)
        diag = [D[i][i] for i in range(min(len(D), k))]
    else:
        V = [[int(i == j) for j in range(k)] for i in range(k)]
        diag = []
    r = len([d for d in diag if d])
    torsion = [d for d in diag if d > 1]
    n = k - r
    if n == 0 and require_free:
        raise ValidationError("no free abelianization; phi undefined")
    # generator j maps to row j of V; the free coordinates are columns r..k-1
    phi = [[V[j][r + i] for j in range(k)] for i in range(n)]
    phi = _normalize_phi(phi, p)
    return Abelianization(n, torsion, phi)


def _normalize_phi(phi, p):
    n = len(phi)
    if n == 0:
        return phi
    mer = p.meridian_indices
    if mer is not None and len(mer) == n:
        M = [[phi[i][j] for j in mer] for i in range(n)]
        inv = _unimodular_inverse(M)
        if inv is not None:
            return [[sum(inv[i][l] * phi[l][j] for l in range(n)) for j in range(len(phi[0]))]
                    for i in range(n)]
    if n == 1:
        first = next((x for x in phi[0] if x), 0)
        if first < 0:
            return [[-x for x in phi[0]]]
    return phi


def _unimodular_inverse(M):
    """Integer inverse of a square integer matrix with determinant +-1, else None."""
    from fractions import Fraction

    n = len(M)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(M)]
    for c in range(n):
        p = next((i for i in range(c, n) if a[i][c]), None)
        if p is None:
            return None
        a[c], a[p] = a[p], a[c]
        inv = 1 / a[c][c]
        a[c] = [x * inv for x in a[c]]
        for i in range(n):
            if i != c and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    out = [row[n:] for row in a]
    if any(x.denominator != 1 for row in out for x in row):
        return None
    return [[int(x) for x in row] for row in out]
