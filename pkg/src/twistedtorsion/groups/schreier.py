"""Reidemeister-Schreier presentations of kernels of maps onto finite abelian groups."""
from collections import deque
from dataclasses import dataclass
from typing import Tuple

from ..errors import DeficiencyError, ValidationError
from .finab import EpiToG
from .presentation import Presentation
from .words import concat, cyclic_reduce, inverse, letter, letter_generator, reduce_word

__all__ = ["SubgroupData", "reidemeister_schreier", "tietze_simplify"]


@dataclass(frozen=True)
class SubgroupData:
    """Presentation of ker(pi_bar o phi) together with its embedding in the parent.

    ``inclusion[i]`` is the parent word of subgroup generator ``i``;
    ``coset_reps[c]`` is the Schreier representative of coset ``cosets[c]``.
    """

    presentation: Presentation
    inclusion: Tuple[Tuple[int, ...], ...]
    coset_reps: Tuple[Tuple[int, ...], ...]
    cosets: Tuple[Tuple[int, ...], ...]

    @property
    def index(self):
        return len(self.coset_reps)


def _coset_action(p, phi_matrix, pi_bar):
    k = p.num_generators
    return [pi_bar.image([row[j] for row in phi_matrix]) for j in range(k)]


def _enumerate_cosets(p, moves, group):
    """Breadth-first Schreier transversal: positive letters first, then inverses."""
    k = p.num_generators
    start = group.zero()
    reps = {start: ()}
    order = [start]
    queue = deque([start])
    neg = [tuple((-x) % q for x, q in zip(m, group.invariant_factors)) for m in moves]
    while queue:
        c = queue.popleft()
        for sign in (1, -1):
            for j in range(k):
                d = group.add(c, moves[j] if sign > 0 else neg[j])
                if d not in reps:
                    reps[d] = reps[c] + (letter(j, sign),)
                    order.append(d)
                    queue.append(d)
    return order, reps


def reidemeister_schreier(p: Presentation, phi_matrix, pi_bar: EpiToG, simplify=True) -> SubgroupData:
    """Presentation of the kernel of ``pi_bar o phi`` on pi_1 given by ``p``.

    Schreier generators ``s(c, x) = rep(c) x rep(c x)^-1`` that freely reduce
    to the empty word are dropped; every parent relator is rewritten from
    every coset.  With ``simplify`` the result is Tietze-reduced (free and
    cyclic reduction, removal of generators occurring exactly once in a
    relator).
    """
    group = pi_bar.group
    if group.order == 1:
        k = p.num_generators
        return SubgroupData(p, tuple((letter(j),) for j in range(k)), ((),), (group.zero(),))
    if p.deficiency != 1:
        raise DeficiencyError(
            f"parent presentation has deficiency {p.deficiency}; cannot certify deficiency-1 cover"
        )
    moves = _coset_action(p, phi_matrix, pi_bar)
    order, reps = _enumerate_cosets(p, moves, group)
    if len(order) != group.order:
        raise ValidationError(
            f"pi_bar o phi reaches {len(order)} of {group.order} elements of {group}; not surjective"
        )
    coset_index = {c: i for i, c in enumerate(order)}
    k = p.num_generators

    gen_id = {}
    names, inclusion = [], []
    for ci, c in enumerate(order):
        for j in range(k):
            d = group.add(c, moves[j])
            w = concat(reps[c], (letter(j),), inverse(reps[d]))
            if w:
                gen_id[(ci, j)] = len(names)
                names.append(f"{p.generator_names[j]}_{ci}")
                inclusion.append(w)

    def rewrite(r, ci):
        cur = order[ci]
        out = []
        for x in r:
            j, s = letter_generator(x)
            if s > 0:
                g = gen_id.get((coset_index[cur], j))
                if g is not None:
                    out.append(letter(g))
                cur = group.add(cur, moves[j])
            else:
                cur = group.add(cur, tuple((-m) % q for m, q in zip(moves[j], group.invariant_factors)))
                g = gen_id.get((coset_index[cur], j))
                if g is not None:
                    out.append(letter(g, -1))
        if cur != order[ci]:
            raise ValidationError("relator does not lie in the kernel of pi_bar o phi")
        return reduce_word(out)

    relators = [rewrite(r, ci) for ci in range(len(order)) for r in p.relators]
    sub = Presentation(tuple(names), tuple(relators))
    inclusion = tuple(inclusion)
    if simplify:
        sub, keep = tietze_simplify(sub)
        inclusion = tuple(inclusion[i] for i in keep)
    if sub.deficiency != 1:
        raise DeficiencyError(
            f"rewritten presentation has deficiency {sub.deficiency}; cannot certify deficiency 1"
        )
    for w in inclusion:
        img = [0] * len(phi_matrix)
        for x in w:
            j, s = letter_generator(x)
            for i, row in enumerate(phi_matrix):
                img[i] += s * row[j]
        if any(pi_bar.image(img)):
            raise ValidationError("subgroup generator escapes ker(pi_bar o phi)")
    return SubgroupData(sub, inclusion, tuple(reps[c] for c in order), tuple(order))


def _substitute(word, gen, replacement):
    inv = inverse(replacement)
    out = []
    for x in word:
        j, s = letter_generator(x)
        if j == gen:
            out.extend(replacement if s > 0 else inv)
        else:
            out.append(x)
    return cyclic_reduce(out)


def tietze_simplify(p: Presentation, growth=4):
    """Eliminate generators that occur exactly once in some relator.

    Returns ``(presentation, kept)`` where ``kept`` lists the original
    indices of the surviving generators.  Empty relators are removed;
    elimination stops once the total relator length would exceed ``growth``
    times its starting value (plus a small allowance).
    """
    rels = [cyclic_reduce(r) for r in p.relators]
    rels = [r for r in rels if r]
    alive = list(range(p.num_generators))  # alive[i] = original index of current generator i
    budget = growth * sum(len(r) for r in rels) + 64
    while True:
        best = None
        for ri, r in enumerate(rels):
            counts = {}
            for x in r:
                g = abs(x) - 1
                counts[g] = counts.get(g, 0) + 1
            for g in sorted(counts):
                if counts[g] != 1:
                    continue
                cost = sum(len(o) for o in rels) + sum(
                    (len(r) - 2) * sum(1 for x in o if abs(x) - 1 == g) for o in rels) - len(r)
                key = (cost, len(r), g)
                if best is None or key < best[0]:
                    best = (key, ri, g)
        if best is None or best[0][0] > budget:
            break
        _, ri, g = best
        r = rels[ri]
        pos = next(i for i, x in enumerate(r) if abs(x) - 1 == g)
        rotated = r[pos:] + r[:pos]
        rest = rotated[1:]
        # x w = 1 gives x = w^-1;  x^-1 w = 1 gives x = w
        replacement = inverse(rest) if rotated[0] > 0 else tuple(rest)
        new_rels = []
        for i, o in enumerate(rels):
            if i == ri:
                continue
            o = _substitute(o, g, replacement)
            if o:
                new_rels.append(o)
        # renumber generators above g
        rels = [tuple(x - 1 if abs(x) - 1 > g and x > 0 else (x + 1 if abs(x) - 1 > g else x) for x in o)
                for o in new_rels]
        del alive[g]
    names = tuple(p.generator_names[i] for i in alive)
    return Presentation(names, tuple(rels)), alive
