"""Exceptions raised across vwlab

Input-shaped problems subclass ValueError so callers that only know the
builtin hierarchy still catch them. The CLI maps these classes onto exit codes.
"""


class VwlabError(Exception):
    """Base class of every error raised on purpose by vwlab
    """


class FieldError(VwlabError, ValueError):
    """A field could not be built (bad modulus) or two fields were mixed
    """


class DimensionError(VwlabError, ValueError):
    """Vectors, matrices or subspaces of incompatible sizes were combined
    """


class NotALieAlgebraError(VwlabError, ValueError):
    """A structure-constant table failed antisymmetry or the Jacobi identity
    """


class NotAHomomorphismError(VwlabError, ValueError):
    """A linear map was expected to preserve brackets, but does not
    """


class NotASubalgebraError(VwlabError, ValueError):
    """A subspace expected to be closed under the bracket is not
    """


class NotAnIdealError(VwlabError, ValueError):
    """A subspace expected to be an ideal is not
    """


class CharacteristicError(VwlabError, ValueError):
    """A construction was requested over a field of unsupported characteristic
    """


class NonInvertibleGeneratorError(VwlabError, ValueError):
    """A matrix group generator has zero determinant
    """


class UnknownLabelError(VwlabError, ValueError):
    """A relation word refers to a generator label that does not exist
    """


class RelationSyntaxError(VwlabError, ValueError):
    """A relation word could not be parsed
    """


class NotInGroupError(VwlabError, ValueError):
    """An element was expected to lie in an enumerated group, but does not
    """


class EnumerationCapError(VwlabError, RuntimeError):
    """Enumerating a group would exceed the configured element cap
    """


class SchemaError(VwlabError, ValueError):
    """An input file does not follow its expected JSON layout

    Parameters
    ----------
    message : str
        What went wrong
    path : str, optional
        JSON path of the offending field, e.g. ``brackets/2/i``
    line : int | None, optional
        Line of the input text, when known
    """
    def __init__(self, message: str, path: str = "", line: int | None = None):
        self.path = path
        self.line = line
        location = []
        if line is not None:
            location.append(f"line {line}")
        if path:
            location.append(f"field '{path}'")
        prefix = f"[{', '.join(location)}] " if location else ""
        super().__init__(prefix + message)
