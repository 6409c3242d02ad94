"""Finite matrix groups over GF(p) and their enumerated element sets

Elements are numpy int64 arrays of residues in [0, p). Set membership uses
the row-major bytes of the residues as the canonical key.
"""

from collections.abc import Iterable, Iterator, Mapping, Sequence
from logging import getLogger
import math

import numpy as np
from tqdm import tqdm

from vwlab.config import DEFAULT_ENUMERATION_CAP
from vwlab.errors import (DimensionError, EnumerationCapError, FieldError, NonInvertibleGeneratorError,
                          NotInGroupError, UnknownLabelError)
from vwlab.exactmath import ExactMatrix, FieldSpec, is_prime

logger = getLogger(__name__)

# entries of a product of two reduced matrices, before reduction, must fit in int64
INT64_BOUND = 2 ** 63


def check_modulus(p: int, n: int):
    """Refuse moduli for which n x n products of residues overflow int64

    Raises
    ------
    FieldError
        n (p - 1)^2 does not fit below 2^63
    """
    if n * (p - 1) ** 2 >= INT64_BOUND:
        raise FieldError(f"Modulus {p} is too large for {n} x {n} matrices: n(p-1)^2 must be below 2^63")


def element_key(g: np.ndarray) -> bytes:
    """Canonical form of a group element for hashing and equality
    """
    return np.ascontiguousarray(g, dtype=np.int64).tobytes()


def identity(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.int64)


def to_exact(g: np.ndarray, p: int) -> ExactMatrix:
    return ExactMatrix.from_rows(FieldSpec.prime(p), g.tolist())


def from_exact(m: ExactMatrix) -> np.ndarray:
    return np.array([[v.value for v in row] for row in m.row_vectors()], dtype=np.int64)


def matrix_inverse(g: np.ndarray, p: int) -> np.ndarray:
    """Inverse of an invertible matrix over GF(p)

    Raises
    ------
    NonInvertibleGeneratorError
        The matrix is singular mod p
    """
    try:
        return from_exact(to_exact(g, p).inverse())
    except ValueError as e:
        raise NonInvertibleGeneratorError(f"Matrix is singular mod {p}: {g.tolist()}") from e


def matrix_power(g: np.ndarray, k: int, p: int) -> np.ndarray:
    """g^k mod p by repeated squaring; negative k uses the inverse
    """
    if k < 0:
        g, k = matrix_inverse(g, p), -k
    result = identity(g.shape[0])
    base = g % p
    while k:
        if k & 1:
            result = result @ base % p
        base = base @ base % p
        k >>= 1
    return result


def multiply(*factors: np.ndarray, p: int) -> np.ndarray:
    """Product of matrices mod p, left to right
    """
    result = factors[0] % p
    for f in factors[1:]:
        result = result @ f % p
    return result


class MatrixGroup:
    """The subgroup of GL(n, p) generated by labeled matrices

    Parameters
    ----------
    p : int
        A prime
    n : int
        Matrix size
    generators : Mapping[str, array-like]
        Label to n x n integer matrix; entries are reduced mod p

    Raises
    ------
    FieldError
        p is not a prime, or is too large for int64 products of n x n matrices
    DimensionError
        A generator is not n x n
    NonInvertibleGeneratorError
        A generator has determinant 0 mod p
    """

    def __init__(self, p: int, n: int, generators: Mapping[str, Sequence | np.ndarray]):
        if not is_prime(p):
            raise FieldError(f"The modulus must be prime. Modulus given: {p}")
        if n < 1:
            raise DimensionError(f"Matrix size must be positive. Size given: {n}")
        check_modulus(p, n)
        self.p = p
        self.n = n
        self.labels: tuple[str, ...] = tuple(generators)
        mats = []
        for label, raw in generators.items():
            g = np.asarray(raw, dtype=np.int64) % p
            if g.shape != (n, n):
                raise DimensionError(f"Generator {label} has shape {g.shape}, expected {(n, n)}")
            if to_exact(g, p).determinant() == 0:
                raise NonInvertibleGeneratorError(f"Generator {label} has determinant 0 mod {p}")
            g.flags.writeable = False
            mats.append(g)
        self.matrices: tuple[np.ndarray, ...] = tuple(mats)

    @property
    def field(self) -> FieldSpec:
        return FieldSpec.prime(self.p)

    def identity(self) -> np.ndarray:
        return identity(self.n)

    def generator(self, label: str) -> np.ndarray:
        try:
            return self.matrices[self.labels.index(label)]
        except ValueError as e:
            raise UnknownLabelError(f"No generator labeled {label!r}; labels are {list(self.labels)}") from e

    def generator_array(self) -> np.ndarray:
        """Generators stacked as an array of shape (k, n, n)
        """
        if not self.matrices:
            return np.zeros((0, self.n, self.n), dtype=np.int64)
        return np.stack(self.matrices)

    def multiply(self, *factors: np.ndarray) -> np.ndarray:
        return multiply(*factors, p=self.p)

    def inverse(self, g: np.ndarray) -> np.ndarray:
        return matrix_inverse(g, self.p)

    def power(self, g: np.ndarray, k: int) -> np.ndarray:
        return matrix_power(g, k, self.p)

    def with_generators(self, generators: Mapping[str, Sequence | np.ndarray]) -> "MatrixGroup":
        """Another group of the same size and modulus
        """
        return MatrixGroup(self.p, self.n, generators)

    def __repr__(self) -> str:
        return f"MatrixGroup(p={self.p}, n={self.n}, generators={list(self.labels)})"


class ElementSet:
    """The elements of an enumerated matrix group

    Parameters
    ----------
    p : int
        The modulus
    n : int
        Matrix size
    elements : np.ndarray
        Array of shape (order, n, n), identity first, in discovery order
    generators : np.ndarray
        Array of shape (k, n, n) of matrices generating the set
    """

    __slots__ = ('p', 'n', '_elements', '_generators', '_index')

    def __init__(self, p: int, n: int, elements: np.ndarray, generators: np.ndarray):
        self.p = p
        self.n = n
        self._elements = np.ascontiguousarray(elements, dtype=np.int64)
        self._elements.flags.writeable = False
        self._generators = np.ascontiguousarray(generators, dtype=np.int64).reshape(-1, n, n)
        self._generators.flags.writeable = False
        self._index = {element_key(g): ii for ii, g in enumerate(self._elements)}

    @property
    def order(self) -> int:
        return len(self._elements)

    @property
    def elements(self) -> np.ndarray:
        return self._elements

    @property
    def generators(self) -> np.ndarray:
        return self._generators

    def is_trivial(self) -> bool:
        return self.order == 1

    def contains(self, g: np.ndarray) -> bool:
        g = np.asarray(g, dtype=np.int64)
        if g.shape != (self.n, self.n):
            return False
        return element_key(g % self.p) in self._index

    def __contains__(self, g) -> bool:
        return self.contains(g)

    def __len__(self) -> int:
        return self.order

    def __iter__(self) -> Iterator[np.ndarray]:
        return iter(self._elements)

    def keys(self) -> frozenset[bytes]:
        return frozenset(self._index)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ElementSet):
            return NotImplemented
        return self.p == other.p and self.n == other.n and self._index.keys() == other._index.keys()

    def __hash__(self) -> int:
        return hash((self.p, self.n, self.keys()))

    def __repr__(self) -> str:
        return f"ElementSet(p={self.p}, n={self.n}, order={self.order})"


def closure(p: int,
            n: int,
            generators: np.ndarray | Sequence[np.ndarray],
            cap: int = DEFAULT_ENUMERATION_CAP,
            progress: bool = False,
            desc: str = "Enumerating group") -> ElementSet:
    """Breadth-first closure of invertible generators under multiplication

    Every frontier is multiplied on the right by all generators at once; new
    products become the next frontier. In a finite group the monoid generated
    is the whole group, so inverses need not be added.

    Raises
    ------
    EnumerationCapError
        More than ``cap`` elements were found
    """
    if cap < 1:
        raise ValueError(f"Enumeration cap must be at least 1. Cap given: {cap}")
    check_modulus(p, n)
    gens = np.asarray(generators, dtype=np.int64).reshape(-1, n, n) % p
    start = identity(n)
    found = [start]
    seen = {element_key(start)}
    frontier = start[None]
    with tqdm(desc=desc, unit='elem', disable=not progress) as pbar:
        pbar.update(1)
        while len(frontier) and len(gens):
            products = np.matmul(frontier[:, None], gens[None]).reshape(-1, n, n) % p
            fresh = []
            for g in products:
                key = element_key(g)
                if key not in seen:
                    seen.add(key)
                    fresh.append(g)
            if len(seen) > cap:
                raise EnumerationCapError(f"Group has more than {cap} elements")
            found.extend(fresh)
            pbar.update(len(fresh))
            frontier = np.array(fresh, dtype=np.int64).reshape(-1, n, n)
    logger.debug("Closure of %s generators has order %s", len(gens), len(found))
    return ElementSet(p, n, np.stack(found), gens)


def enumerate_group(group: MatrixGroup, cap: int = DEFAULT_ENUMERATION_CAP, progress: bool = False) -> ElementSet:
    """All elements of a matrix group

    Parameters
    ----------
    group : MatrixGroup
        The generated group
    cap : int, optional
        Largest order allowed, by default 10^6
    progress : bool, optional
        Show a progress bar, by default False

    Returns
    -------
    ElementSet
        The closure, generated by the group's generators

    Raises
    ------
    EnumerationCapError
        The group has more than ``cap`` elements
    """
    elements = closure(group.p, group.n, group.generator_array(), cap=cap, progress=progress)
    logger.info("Enumerated %s: order %s", group, elements.order)
    return elements


def generate(p: int,
             n: int,
             candidates: Iterable[np.ndarray],
             cap: int = DEFAULT_ENUMERATION_CAP) -> ElementSet:
    """Subgroup generated by candidates, keeping only those that enlarge it

    Each kept candidate at least doubles the order, so few closures are run.
    """
    current = closure(p, n, [], cap=cap)
    kept = []
    for g in candidates:
        if g in current:
            continue
        kept.append(np.asarray(g, dtype=np.int64) % p)
        current = closure(p, n, kept, cap=cap)
    return current


def contains(elements: ElementSet, g: np.ndarray) -> bool:
    return elements.contains(g)


def require_members(elements: ElementSet, gs: Iterable[np.ndarray]):
    """Raise NotInGroupError unless every g lies in the element set
    """
    for g in gs:
        if g not in elements:
            raise NotInGroupError(f"Element {np.asarray(g).tolist()} is not in the group")


def element_orders(elements: np.ndarray, p: int) -> np.ndarray:
    """Orders of a stack of invertible matrices, computed together

    Raises
    ------
    NonInvertibleGeneratorError
        Some matrix never reaches the identity within |GL(n, p)| steps
    """
    elements = np.asarray(elements, dtype=np.int64).reshape(-1, *np.shape(elements)[-2:]) % p
    count, n = len(elements), elements.shape[-1]
    check_modulus(p, n)
    orders = np.zeros(count, dtype=np.int64)
    if count == 0:
        return orders
    bound = math.prod(p ** n - p ** i for i in range(n))
    eye = identity(n)
    current = elements.copy()
    k = 1
    while True:
        hit = (orders == 0) & np.all(current == eye, axis=(1, 2))
        orders[hit] = k
        if np.all(orders):
            return orders
        if k >= bound:
            raise NonInvertibleGeneratorError("A matrix without finite order was given")
        current = np.matmul(current, elements) % p
        k += 1


def batch_inverses(elements: np.ndarray, p: int) -> np.ndarray:
    """Inverses of a stack of invertible matrices, as g^(order - 1)
    """
    elements = np.asarray(elements, dtype=np.int64) % p
    orders = element_orders(elements, p)
    result = np.empty_like(elements)
    power = np.broadcast_to(identity(elements.shape[-1]), elements.shape).copy()
    for k in range(1, int(orders.max(initial=0)) + 1):
        hit = orders == k
        result[hit] = power[hit]
        power = np.matmul(power, elements) % p
    return result


def element_order(g: np.ndarray, p: int) -> int:
    """Least k >= 1 with g^k = I
    """
    return int(element_orders(np.asarray(g)[None], p)[0])


def group_exponent(elements: ElementSet) -> int:
    """Least common multiple of all element orders
    """
    return math.lcm(*(int(k) for k in np.unique(element_orders(elements.elements, elements.p))))


def is_subgroup_of(sub: ElementSet, parent: ElementSet) -> bool:
    return sub.keys() <= parent.keys()


def is_normal_in(sub: ElementSet, conjugators: Iterable[np.ndarray], p: int) -> bool:
    """Check c^-1 h c stays in the subgroup for every generator h and conjugator c

    Conjugators generating the parent group suffice for normality in it.
    """
    for c in conjugators:
        c_inv = matrix_inverse(c, p)
        for h in sub.generators:
            if multiply(c_inv, h, c, p=p) not in sub:
                return False
    return True
