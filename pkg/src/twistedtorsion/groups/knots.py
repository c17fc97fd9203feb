"""Knot and link group presentations from planar diagrams and braids.

PD convention
-------------
A crossing ``X(a, b, c, d)`` lists the four edge labels counterclockwise,
starting from the incoming under-edge ``a``; ``c`` is the outgoing
under-edge and ``b``, ``d`` are the two halves of the over-strand.  The
over-strand's direction is recovered from edge orientations (every edge
enters exactly one crossing and leaves exactly one).  Wirtinger arcs are the
classes of edges glued along over-strands; with ``x`` the over-arc
generator the relator of a crossing is

* ``x_c^-1 x x_a x^-1`` when the over-strand runs from ``b`` to ``d``,
* ``x_c^-1 x^-1 x_a x`` when it runs from ``d`` to ``b``.

The last crossing's relator is dropped to reach deficiency one.  An empty
PD code is the unknot, ``< x1 | >``.

Braid convention
----------------
Letters ``i`` / ``-i`` are sigma_i^(+-1) on strands ``1..n``; sigma_i acts on
the free group by ``x_i -> x_i x_(i+1) x_i^-1``, ``x_(i+1) -> x_i``.  The
closure has relators ``beta(x_i) x_i^-1`` for ``i < n`` (the last one is
redundant and dropped).
"""
from ..errors import ValidationError
from .presentation import Presentation
from .words import concat, inverse, letter

__all__ = ["wirtinger_from_pd", "presentation_from_braid", "UNKNOT"]

UNKNOT = Presentation(("x1",), (), (0,))


class _UnionFind:
    def __init__(self):
        self.parent = {}

    def find(self, x):
        self.parent.setdefault(x, x)
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def _over_directions(crossings):
    """For every crossing decide whether the over-strand runs b -> d.

    Each edge occurs at exactly two crossing slots: one where it ends (head)
    and one where it starts (tail).  Under-slots are known (a is a head, c a
    tail); over-slots come in pairs whose roles are tied together, and the
    two occurrences of an edge must have opposite roles.  Propagate by BFS;
    components never passing under anything default to b -> d.
    """
    slots = {}
    for ci, (a, b, c, d) in enumerate(crossings):
        for pos, e in enumerate((a, b, c, d)):
            slots.setdefault(e, []).append((ci, pos))
    for e, occ in slots.items():
        if len(occ) != 2:
            raise ValidationError(f"PD edge label {e} occurs {len(occ)} times (expected 2)")

    # role[(ci, pos)] = True if the edge ends (enters) at this slot
    role = {}
    for ci in range(len(crossings)):
        role[(ci, 0)] = True
        role[(ci, 2)] = False
    direction = {}

    def assign(ci, b_to_d):
        direction[ci] = b_to_d
        role[(ci, 1)] = b_to_d      # b enters when the strand runs b -> d
        role[(ci, 3)] = not b_to_d

    def other_slot(ci, pos):
        e = crossings[ci][pos]
        first, second = slots[e]
        return second if first == (ci, pos) else first

    queue = [slot for slot in role]
    for ci in range(len(crossings) + 1):
        while queue:
            slot = queue.pop()
            other = other_slot(*slot)
            want = not role[slot]
            if other in role:
                if role[other] != want:
                    raise ValidationError(f"inconsistent orientation of PD edge {crossings[slot[0]][slot[1]]}")
                continue
            oci, opos = other
            assign(oci, want if opos == 1 else not want)
            queue.extend([(oci, 1), (oci, 3)])
        pending = [i for i in range(len(crossings)) if i not in direction]
        if not pending:
            break
        assign(pending[0], True)
        queue.extend([(pending[0], 1), (pending[0], 3)])
    return direction


def wirtinger_from_pd(pd):
    """Wirtinger presentation of the link exterior described by a PD code.

    Generators are named ``x1, x2, ...`` in order of the smallest edge label
    on each arc.  ``meridian_indices`` marks the first arc of every link
    component, components being ordered by their smallest edge label.
    """
    crossings = [tuple(int(v) for v in x) for x in pd]
    if not crossings:
        return UNKNOT
    for x in crossings:
        if len(x) != 4:
            raise ValidationError(f"PD crossing {x} does not have four labels")
    direction = _over_directions(crossings)

    arcs = _UnionFind()
    for a, b, c, d in crossings:
        arcs.find(a)
        arcs.find(c)
        arcs.union(b, d)
    edges = sorted({e for x in crossings for e in x})
    roots = sorted({arcs.find(e) for e in edges}, key=lambda r: min(e for e in edges if arcs.find(e) == r))
    gen_of_root = {r: i for i, r in enumerate(roots)}

    def gen(e):
        return gen_of_root[arcs.find(e)]

    relators = []
    for ci, (a, b, c, d) in enumerate(crossings):
        xa, xc, xo = letter(gen(a)), letter(gen(c)), letter(gen(b))
        if direction[ci]:
            rel = (-xc, xo, xa, -xo)
        else:
            rel = (-xc, -xo, xa, xo)
        relators.append(concat(rel))
    relators = relators[:-1]

    # components: edges linked along strands (a -> c under, b <-> d over)
    comps = _UnionFind()
    for a, b, c, d in crossings:
        comps.union(a, c)
        comps.union(b, d)
    comp_roots = sorted({comps.find(e) for e in edges},
                        key=lambda r: min(e for e in edges if comps.find(e) == r))
    meridians = []
    for r in comp_roots:
        first_edge = min(e for e in edges if comps.find(e) == r)
        meridians.append(gen(first_edge))
    names = tuple(f"x{i + 1}" for i in range(len(roots)))
    return Presentation(names, tuple(relators), tuple(meridians))


def _artin_images(word, strands):
    images = [(letter(i),) for i in range(strands)]
    for s in word:
        i = abs(s) - 1
        if not 0 <= i < strands - 1:
            raise ValidationError(f"braid letter {s} invalid on {strands} strands")
        xi, xj = images[i], images[i + 1]
        if s > 0:
            images[i] = concat(xi, xj, inverse(xi))
            images[i + 1] = xi
        else:
            images[i] = xj
            images[i + 1] = concat(inverse(xj), xi, xj)
    return images


def presentation_from_braid(word, strands):
    """Presentation of the group of the braid closure's exterior."""
    strands = int(strands)
    word = [int(s) for s in word]
    if strands < 2:
        raise ValidationError("a braid needs at least two strands")
    if any(s == 0 for s in word):
        raise ValidationError("braid letters are nonzero integers")
    images = _artin_images(word, strands)
    relators = [concat(images[i], (-letter(i),)) for i in range(strands - 1)]

    # components are the cycles of the braid permutation
    perm = list(range(strands))
    for s in word:
        i = abs(s) - 1
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
    seen, meridians = set(), []
    for start in range(strands):
        if start in seen:
            continue
        meridians.append(start)
        j = start
        while j not in seen:
            seen.add(j)
            j = perm[j]
    names = tuple(f"x{i + 1}" for i in range(strands))
    return Presentation(names, tuple(relators), tuple(meridians))
