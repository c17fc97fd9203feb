"""Words in a free group.

A word is a tuple of nonzero ints: generator ``i`` (0-based) is the letter
``i + 1`` and its inverse is ``-(i + 1)``.  Words produced by this module
are always freely reduced.
"""
import re

from ..errors import ParseError

__all__ = [
    "letter",
    "letter_generator",
    "reduce_word",
    "cyclic_reduce",
    "inverse",
    "concat",
    "parse_word",
    "render_word",
    "exponent_sums",
]


def letter(gen, sign=1):
    return (gen + 1) if sign > 0 else -(gen + 1)


def letter_generator(x):
    """(0-based generator index, sign) of a letter."""
    return (x - 1, 1) if x > 0 else (-x - 1, -1)


def reduce_word(letters):
    out = []
    for x in letters:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def cyclic_reduce(word):
    word = reduce_word(word)
    i, j = 0, len(word) - 1
    while i < j and word[i] == -word[j]:
        i += 1
        j -= 1
    return word[i:j + 1]


def inverse(word):
    return tuple(-x for x in reversed(word))


def concat(*words):
    out = []
    for w in words:
        out.extend(w)
    return reduce_word(out)


def exponent_sums(word, ngens):
    sums = [0] * ngens
    for x in word:
        g, s = letter_generator(x)
        sums[g] += s
    return sums


_TOKEN = re.compile(r"([A-Za-z_][A-Za-z0-9_]*)(?:\^(\(?-?\d+\)?))?")


def _lookup(name, names):
    """Letter for a single token name, honoring the upper-case inverse convention."""
    index = {n: i for i, n in enumerate(names)}
    if name in index:
        return letter(index[name])
    if name.lower() in index and name != name.lower() and name.swapcase() in index:
        return letter(index[name.swapcase()], -1)
    return None


def parse_word(text, names):
    """Parse a word such as ``"a b A"``, ``"a b a^-1"`` or ``"abaBAB"``.

    Tokens are generator names, optionally followed by ``^k``; an upper-case
    name stands for the inverse of its lower-case generator.  When every name
    is a single character, tokens may be written without separators.
    """
    names = list(names)
    letters = []
    pos = 0
    text = str(text)
    single = all(len(n) == 1 for n in names)
    while pos < len(text):
        if text[pos].isspace() or text[pos] in "*.":
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r} in word {text!r}", pos)
        name, power = m.group(1), m.group(2)
        x = _lookup(name, names)
        if x is None and single and power is None:
            # run of single-character generators written without spaces
            run = []
            for k, ch in enumerate(name):
                y = _lookup(ch, names)
                if y is None:
                    raise ParseError(f"unknown generator {ch!r} in word {text!r}", pos + k)
                run.append(y)
            letters.extend(run)
            pos = m.end()
            continue
        if x is None and single and power is not None and len(name) > 1:
            # "abA^-1": only the last character carries the power
            for k, ch in enumerate(name[:-1]):
                y = _lookup(ch, names)
                if y is None:
                    raise ParseError(f"unknown generator {ch!r} in word {text!r}", pos + k)
                letters.append(y)
            x = _lookup(name[-1], names)
        if x is None:
            raise ParseError(f"unknown generator {name!r} in word {text!r}", pos)
        k = int(power.strip("()")) if power else 1
        letters.extend([x] * k if k > 0 else [-x] * (-k))
        pos = m.end()
    return reduce_word(letters)


def render_word(word, names):
    """Space separated tokens, inverses written ``name^-1``; ``1`` for the empty word."""
    if not word:
        return "1"
    parts = []
    for x in word:
        g, s = letter_generator(x)
        parts.append(names[g] if s > 0 else f"{names[g]}^-1")
    return " ".join(parts)
