"""Fox free differential calculus and evaluation of group-ring elements."""
from .groups.words import concat, letter_generator, reduce_word
from .scalars.laurent import LaurentPoly

__all__ = ["GroupRingElem", "fox_derivative", "evaluate", "fox_jacobian"]


class GroupRingElem:
    """Element of Z[F]: a finite map from reduced words to nonzero integers."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for w, c in (terms or {}).items():
            w = reduce_word(w)
            c = clean.get(w, 0) + c
            if c:
                clean[w] = c
            else:
                clean.pop(w, None)
        self.terms = clean

    @classmethod
    def from_word(cls, word, coeff=1):
        return cls({tuple(word): coeff})

    @classmethod
    def one(cls):
        return cls({(): 1})

    def __add__(self, other):
        terms = dict(self.terms)
        for w, c in other.terms.items():
            terms[w] = terms.get(w, 0) + c
        return GroupRingElem(terms)

    def __neg__(self):
        return GroupRingElem({w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return GroupRingElem({w: c * other for w, c in self.terms.items()})
        terms = {}
        for u, a in self.terms.items():
            for v, b in other.terms.items():
                w = concat(u, v)
                terms[w] = terms.get(w, 0) + a * b
        return GroupRingElem(terms)

    __rmul__ = __mul__

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, GroupRingElem):
            return NotImplemented
        return self.terms == other.terms

    def __repr__(self):
        return f"GroupRingElem({self.terms})"


def fox_derivative(word, gen):
    """d(word)/d(x_gen) in Z[F]."""
    terms = {}
    prefix = []
    for x in word:
        j, s = letter_generator(x)
        if s < 0:
            prefix.append(x)
        if j == gen:
            w = tuple(prefix)
            terms[w] = terms.get(w, 0) + s
        if s > 0:
            prefix.append(x)
    return GroupRingElem(terms)


def _accumulate(acc, exp, mat, sign):
    m = len(mat)
    for u in range(m):
        row = mat[u]
        for v in range(m):
            c = row[v]
            if c:
                cell = acc[u][v]
                old = cell.get(exp)
                cell[exp] = c * sign if old is None else old + c * sign


def _to_matrix(acc, field, nvars):
    return [[LaurentPoly(field, nvars, {e: c for e, c in cell.items() if not c.is_zero()})
             for cell in row] for row in acc]


def evaluate(elem, rep):
    """Image of a group-ring element under the tensor representation ``rep``.

    Returns an m x m matrix (list of lists) of :class:`LaurentPoly`.
    """
    m = rep.dim
    acc = [[{} for _ in range(m)] for _ in range(m)]
    for w, c in elem.terms.items():
        exp, mat = rep.word_image(w)
        _accumulate(acc, exp, mat, c)
    return _to_matrix(acc, rep.field, rep.nvars)


def fox_jacobian(relators, num_generators, rep):
    """Evaluated Fox Jacobian as a block matrix.

    Row block i / column block j holds rep(d r_i / d x_j); the result is a
    (len(relators) * m) x (num_generators * m) list of lists of LaurentPoly.
    Prefix images are accumulated once per relator instead of expanding each
    derivative separately.
    """
    m = rep.dim
    field, nvars = rep.field, rep.nvars
    rows = []
    for r in relators:
        blocks = [[[{} for _ in range(m)] for _ in range(m)] for _ in range(num_generators)]
        exp, mat = rep.identity_image()
        for x in r:
            j, s = letter_generator(x)
            if s > 0:
                _accumulate(blocks[j], exp, mat, 1)
                exp, mat = rep.multiply(exp, mat, x)
            else:
                exp, mat = rep.multiply(exp, mat, x)
                _accumulate(blocks[j], exp, mat, -1)
        mats = [_to_matrix(b, field, nvars) for b in blocks]
        for u in range(m):
            rows.append([mats[j][u][v] for j in range(num_generators) for v in range(m)])
    return rows
