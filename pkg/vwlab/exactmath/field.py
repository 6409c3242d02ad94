"""Exact scalars over the rationals and over prime fields GF(p)

A field is described by a ``FieldSpec``; its elements are ``Scalar`` values.
Rationals are kept as ``fractions.Fraction`` (always in lowest terms with a
positive denominator); prime-field elements are kept as canonical residues
in ``[0, p)``.
"""

from dataclasses import dataclass
from enum import StrEnum
from fractions import Fraction
from numbers import Integral
import re

from vwlab.errors import FieldError

_FIELD_PATTERN = re.compile(r"^\s*(?:(?P<q>Q)|GF\(\s*(?P<p>\d+)\s*\))\s*$")
_SCALAR_PATTERN = re.compile(r"^\s*[+-]?\d+(\s*/\s*\d+)?\s*$")


def is_prime(n: int) -> bool:
    """Check primality by trial division

    Parameters
    ----------
    n : int
        The integer to test

    Returns
    -------
    bool
        True if n is a prime number
    """
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    divisor = 3
    while divisor * divisor <= n:
        if n % divisor == 0:
            return False
        divisor += 2
    return True


class FieldKind(StrEnum):
    """The two kinds of ground field supported
    """
    RATIONALS = 'rationals'
    PRIME = 'prime-field'


@dataclass(frozen=True)
class FieldSpec:
    """Description of a ground field: Q, or GF(p) for a prime p

    Parameters
    ----------
    kind : FieldKind
        Rationals or prime field
    modulus : int | None
        The prime p for a prime field; None for the rationals

    Raises
    ------
    FieldError
        The modulus is missing, given for Q, or not a prime
    """
    kind: FieldKind
    modulus: int | None = None

    def __post_init__(self):
        if self.kind == FieldKind.RATIONALS:
            if self.modulus is not None:
                raise FieldError(f"The rationals take no modulus. Modulus given: {self.modulus}")
            return
        if not isinstance(self.modulus, Integral) or isinstance(self.modulus, bool):
            raise FieldError(f"A prime field needs an integer modulus. Type given: {type(self.modulus)}")
        if not is_prime(int(self.modulus)):
            raise FieldError(f"The modulus of a prime field must be prime. Modulus given: {self.modulus}")

    @classmethod
    def rationals(cls) -> "FieldSpec":
        """The field Q of rational numbers
        """
        return cls(FieldKind.RATIONALS)

    @classmethod
    def prime(cls, p: int) -> "FieldSpec":
        """The prime field GF(p)
        """
        return cls(FieldKind.PRIME, p)

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        """Read a field from its text form, ``"Q"`` or ``"GF(p)"``

        Parameters
        ----------
        text : str
            The field as written in files and on the command line

        Returns
        -------
        FieldSpec
            The field described

        Raises
        ------
        FieldError
            The text is not a recognized field, or p is not prime
        """
        if not isinstance(text, str):
            raise TypeError(f"Field must be given as a string. Type given: {type(text)}")
        match = _FIELD_PATTERN.match(text)
        if match is None:
            raise FieldError(f"Unrecognized field {text!r}. Expected 'Q' or 'GF(p)' with p prime")
        if match.group('q'):
            return cls.rationals()
        return cls.prime(int(match.group('p')))

    @property
    def characteristic(self) -> int:
        """0 for Q, p for GF(p)
        """
        return 0 if self.kind == FieldKind.RATIONALS else int(self.modulus)

    @property
    def zero(self) -> "Scalar":
        return Scalar(self, 0)

    @property
    def one(self) -> "Scalar":
        return Scalar(self, 1)

    def __call__(self, value: "int | Fraction | Scalar") -> "Scalar":
        """Coerce a value into this field
        """
        if isinstance(value, Scalar):
            if value.field != self:
                raise FieldError(f"Cannot coerce an element of {value.field} into {self}")
            return value
        return Scalar(self, value)

    def parse_scalar(self, text: str) -> "Scalar":
        """Read a scalar from its text form, e.g. ``"-3/4"`` or ``"7"``

        Raises
        ------
        ValueError
            The text is not an integer or a fraction of integers
        ZeroDivisionError
            The denominator is zero in this field
        """
        if isinstance(text, Integral) and not isinstance(text, bool):
            return Scalar(self, int(text))
        if not isinstance(text, str) or not _SCALAR_PATTERN.match(text):
            raise ValueError(f"Scalar {text!r} is not of the form 'n' or 'n/d'")
        return Scalar(self, Fraction(text.replace(' ', '')))

    def __str__(self) -> str:
        if self.kind == FieldKind.RATIONALS:
            return "Q"
        return f"GF({self.modulus})"


class Scalar:
    """An immutable element of a ``FieldSpec``

    Scalars of the same field combine with ``+ - * /`` and with plain integers
    on either side. Mixing two different fields raises ``FieldError``.

    Parameters
    ----------
    field : FieldSpec
        The field the element belongs to
    value : int | Fraction
        Any integer or fraction; it is reduced to canonical form
    """
    __slots__ = ('field', 'value')

    def __init__(self, field: FieldSpec, value: int | Fraction):
        if isinstance(value, (float, complex)):
            raise TypeError(f"Scalars are exact; floating-point value {value!r} refused")
        if field.kind == FieldKind.RATIONALS:
            canonical = Fraction(value)
        else:
            p = field.modulus
            if isinstance(value, Fraction):
                if value.denominator % p == 0:
                    raise ZeroDivisionError(f"Denominator {value.denominator} vanishes in {field}")
                canonical = value.numerator * pow(value.denominator, -1, p) % p
            else:
                canonical = int(value) % p
        object.__setattr__(self, 'field', field)
        object.__setattr__(self, 'value', canonical)

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    def _other_value(self, other):
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise FieldError(f"Field mismatch: {self.field} and {other.field}")
            return other.value
        if isinstance(other, (Integral, Fraction)) and not isinstance(other, bool):
            return Scalar(self.field, other).value
        return NotImplemented

    def _make(self, value) -> "Scalar":
        return Scalar(self.field, value)

    def __add__(self, other):
        value = self._other_value(other)
        if value is NotImplemented:
            return NotImplemented
        return self._make(self.value + value)

    __radd__ = __add__

    def __sub__(self, other):
        value = self._other_value(other)
        if value is NotImplemented:
            return NotImplemented
        return self._make(self.value - value)

    def __rsub__(self, other):
        value = self._other_value(other)
        if value is NotImplemented:
            return NotImplemented
        return self._make(value - self.value)

    def __mul__(self, other):
        value = self._other_value(other)
        if value is NotImplemented:
            return NotImplemented
        return self._make(self.value * value)

    __rmul__ = __mul__

    def __truediv__(self, other):
        value = self._other_value(other)
        if value is NotImplemented:
            return NotImplemented
        return self * self._make(value).inverse()

    def __rtruediv__(self, other):
        value = self._other_value(other)
        if value is NotImplemented:
            return NotImplemented
        return self._make(value) * self.inverse()

    def __neg__(self) -> "Scalar":
        return self._make(-self.value)

    def __pow__(self, exponent: int) -> "Scalar":
        if not isinstance(exponent, Integral):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        if self.field.kind == FieldKind.RATIONALS:
            return self._make(self.value ** exponent)
        return self._make(pow(self.value, exponent, self.field.modulus))

    def inverse(self) -> "Scalar":
        """Multiplicative inverse

        Raises
        ------
        ZeroDivisionError
            The scalar is zero
        """
        if self.value == 0:
            raise ZeroDivisionError(f"Zero has no inverse in {self.field}")
        if self.field.kind == FieldKind.RATIONALS:
            return self._make(1 / self.value)
        return self._make(pow(self.value, -1, self.field.modulus))

    def is_zero(self) -> bool:
        return self.value == 0

    def __bool__(self) -> bool:
        return self.value != 0

    def __eq__(self, other) -> bool:
        if isinstance(other, Scalar):
            return self.field == other.field and self.value == other.value
        if isinstance(other, (Integral, Fraction)) and not isinstance(other, bool):
            try:
                return self.value == Scalar(self.field, other).value
            except ZeroDivisionError:
                return False
        return NotImplemented

    def __hash__(self) -> int:
        # agrees with int and Fraction hashes, so Q(1) and 1 are one dict key
        return hash(self.value)

    def __str__(self) -> str:
        return str(self.value)

    def __repr__(self) -> str:
        return f"Scalar({self.field}, {self.value})"


class ArithOp(StrEnum):
    """Field operations accepted by ``scalar_arith``
    """
    ADD = 'add'
    SUB = 'sub'
    MUL = 'mul'
    DIV = 'div'


def scalar_arith(a: Scalar, b: Scalar, op: ArithOp | str) -> Scalar:
    """Apply one field operation to two scalars of the same field

    Parameters
    ----------
    a : Scalar
        Left operand
    b : Scalar
        Right operand
    op : ArithOp | str
        One of add, sub, mul, div

    Returns
    -------
    Scalar
        The exact result in canonical form

    Raises
    ------
    FieldError
        The operands belong to different fields
    ZeroDivisionError
        Division by zero was requested
    """
    if not isinstance(a, Scalar) or not isinstance(b, Scalar):
        raise TypeError(f"Both operands must be Scalars. Types given: {type(a)}, {type(b)}")
    op = ArithOp(op)
    if op == ArithOp.ADD:
        return a + b
    if op == ArithOp.SUB:
        return a - b
    if op == ArithOp.MUL:
        return a * b
    return a / b
