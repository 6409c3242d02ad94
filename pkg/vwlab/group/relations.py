"""Relation words over generator labels

Grammar: products with ``*``, powers ``^k`` (``k`` may be negative),
commutators ``[u, v]`` of arbitrary words, parentheses, the identity ``1``,
and an optional right-hand side: ``u = v`` stands for ``u * v^-1``.
Commutators are expanded into plain factors when the word is parsed, so a
word is fixed to one commutator convention. Powers stay as exponents: a
factor is a label or a nested word, raised to an integer.
"""

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from logging import getLogger
from pathlib import Path

from lark import Lark, Transformer
from lark.exceptions import LarkError, UnexpectedInput
import numpy as np

from vwlab.errors import RelationSyntaxError, UnknownLabelError
from vwlab.group.commutators import Convention
from vwlab.group.matrix_group import MatrixGroup

logger = getLogger(__name__)

# (label, k) or (nested factors, k)
Factor = tuple[str | tuple, int]

GRAMMAR = r"""
start: word ("=" word)?
word: factor ("*" factor)*
factor: _atom ("^" exponent)?
exponent: SIGNED_INT
_atom: label | commutator | "(" word ")" | one
label: LABEL
one: "1"
commutator: "[" word "," word "]"

LABEL: /[A-Za-z_][A-Za-z_0-9']*/

%import common.SIGNED_INT
%import common.WS
%ignore WS
"""

_PARSER = Lark(GRAMMAR, parser='lalr')


def _reduce(factors: Iterable[Factor]) -> tuple[Factor, ...]:
    """Merge adjacent equal bases and drop zero exponents
    """
    out: list[Factor] = []
    for label, k in factors:
        if out and out[-1][0] == label:
            k += out.pop()[1]
        if k:
            out.append((label, k))
    return tuple(out)


def _invert(factors: Sequence[Factor]) -> list[Factor]:
    return [(label, -k) for label, k in reversed(factors)]


class _WordBuilder(Transformer):
    """Turns a parse tree into a flat list of factors
    """

    def __init__(self, convention: Convention):
        super().__init__()
        self.convention = convention

    def start(self, children):
        if len(children) == 2:
            return list(children[0]) + _invert(children[1])
        return list(children[0])

    def word(self, children):
        return [f for child in children for f in child]

    def factor(self, children):
        base = children[0]
        if len(children) == 1:
            return base
        k = children[1]
        base = _reduce(base)
        if not base or k == 0:
            return []
        if len(base) == 1:
            item, j = base[0]
            return [(item, j * k)]
        if k == 1:
            return list(base)
        if k == -1:
            return _invert(base)
        return [(base, k)]

    def exponent(self, children):
        return int(children[0])

    def label(self, children):
        return [(str(children[0]), 1)]

    def one(self, _children):
        return []

    def commutator(self, children):
        u, v = children
        if self.convention == Convention.INVERSE_FIRST:
            return _invert(u) + _invert(v) + u + v
        return u + v + _invert(u) + _invert(v)


@dataclass(frozen=True)
class RelationWord:
    """A parsed relation: the text it came from and its expanded factors
    """
    text: str
    factors: tuple[Factor, ...]
    convention: Convention = Convention.INVERSE_FIRST

    @property
    def labels(self) -> frozenset[str]:
        return frozenset(_labels(self.factors))


def _labels(factors: Iterable[Factor]) -> Iterable[str]:
    for item, _ in factors:
        if isinstance(item, str):
            yield item
        else:
            yield from _labels(item)


def _evaluate(group: MatrixGroup, factors: Iterable[Factor]) -> np.ndarray:
    result = group.identity()
    for item, k in factors:
        base = group.generator(item) if isinstance(item, str) else _evaluate(group, item)
        result = group.multiply(result, group.power(base, k))
    return result


def parse_relation(text: str, convention: Convention | str = Convention.INVERSE_FIRST) -> RelationWord:
    """Parse a relation such as ``[x,a]*b``, ``x^5`` or ``[x,a] = b^-1``

    Raises
    ------
    RelationSyntaxError
        The text does not follow the word grammar
    """
    convention = Convention(convention)
    try:
        tree = _PARSER.parse(text)
    except UnexpectedInput as e:
        raise RelationSyntaxError(f"Cannot parse relation {text!r} at column {e.column}") from e
    except LarkError as e:
        raise RelationSyntaxError(f"Cannot parse relation {text!r}: {e}") from e
    factors = _reduce(_WordBuilder(convention).transform(tree))
    return RelationWord(text=text.strip(), factors=factors, convention=convention)


def evaluate_word(group: MatrixGroup, word: RelationWord | str) -> np.ndarray:
    """The matrix a word evaluates to in the group

    Raises
    ------
    UnknownLabelError
        The word uses a label the group does not have
    """
    if isinstance(word, str):
        word = parse_relation(word)
    if missing := sorted(word.labels - set(group.labels)):
        raise UnknownLabelError(f"Relation {word.text!r} uses unknown generators {missing}")
    return _evaluate(group, word.factors)


def evaluate_relation(group: MatrixGroup, word: RelationWord | str) -> bool:
    """True iff the word evaluates to the identity matrix
    """
    return bool(np.array_equal(evaluate_word(group, word), group.identity()))


def read_relation_lines(source: str | Path) -> list[str]:
    """Relations from a text file, one per line; ``#`` starts a comment
    """
    lines = []
    for raw in Path(source).read_text(encoding='utf-8').splitlines():
        line = raw.split('#', 1)[0].strip()
        if line:
            lines.append(line)
    return lines


def load_relations(source: str | Path, convention: Convention | str = Convention.INVERSE_FIRST) -> list[RelationWord]:
    """Parse every relation of a relations file
    """
    words = [parse_relation(line, convention) for line in read_relation_lines(source)]
    logger.debug("Read %s relations from %s", len(words), source)
    return words


def relation_convention_report(group: MatrixGroup, texts: Iterable[str]) -> dict[str, dict[str, bool]]:
    """Which relations hold under each commutator convention

    Returns
    -------
    dict[str, dict[str, bool]]
        Convention name to ``{relation text: holds}``
    """
    texts = list(texts)
    return {str(convention): {text: evaluate_relation(group, parse_relation(text, convention)) for text in texts}
            for convention in Convention}


def conventions_satisfied(report: dict[str, dict[str, bool]]) -> list[str]:
    """Conventions under which every relation of a report holds
    """
    return [name for name, results in report.items() if all(results.values())]
