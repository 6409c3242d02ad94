"""The concrete groups, algebras and maps of both counterexamples
"""

from dataclasses import dataclass

import numpy as np

from vwlab.exactmath import FieldSpec
from vwlab.group import MatrixGroup
from vwlab.lie import (HeisenbergVariant, LieAlgebra, LinearMap, abelian, derivations, gl, gl_index,
                       heisenberg3, identity_map)

GROUP_PRIME = 5
GROUP_DIM = 3

# actions on Z_5^3
PSI_X = ((1, 1, 0), (0, 1, 0), (0, 0, 1))
PSI_PRIME_Y = ((1, 0, 0), (1, 1, 0), (0, 0, 1))
PSI_A = ((1, 0, 0), (0, 1, 1), (0, 0, 1))
PSI_B = ((1, 0, 4), (0, 1, 0), (0, 0, 1))

B_RELATIONS = ("[x,a]*b", "[x,b]", "x^5", "a^5", "b^5")
B_PRIME_RELATIONS = ("[y,b]*a", "[y,a]", "y^5", "a^5", "b^5")
S_RELATIONS = ("[a,b]", "a^5", "b^5")


@dataclass(frozen=True)
class GroupWitness:
    """B, B′ and S as matrix groups, with the matrices of ψ and ψ′
    """
    b: MatrixGroup
    b_prime: MatrixGroup
    s: MatrixGroup
    x_dim: int
    psi: dict[str, np.ndarray]
    psi_prime: dict[str, np.ndarray]

    def relations(self) -> dict[str, tuple[MatrixGroup, tuple[str, ...]]]:
        return {"B": (self.b, B_RELATIONS), "B'": (self.b_prime, B_PRIME_RELATIONS), "S": (self.s, S_RELATIONS)}


def build_group_witness() -> GroupWitness:
    """ψ: B → Aut(Z_5^3) and ψ′: B′ → Aut(Z_5^3), realized as GF(5) matrices

    B = ⟨x, a, b⟩ and B′ = ⟨y, a, b⟩ are the images; S = ⟨a, b⟩.
    """
    psi = {"x": np.array(PSI_X), "a": np.array(PSI_A), "b": np.array(PSI_B)}
    psi_prime = {"y": np.array(PSI_PRIME_Y), "a": np.array(PSI_A), "b": np.array(PSI_B)}
    return GroupWitness(
        b=MatrixGroup(GROUP_PRIME, GROUP_DIM, psi),
        b_prime=MatrixGroup(GROUP_PRIME, GROUP_DIM, psi_prime),
        s=MatrixGroup(GROUP_PRIME, GROUP_DIM, {"a": psi["a"], "b": psi["b"]}),
        x_dim=GROUP_DIM,
        psi=psi,
        psi_prime=psi_prime,
    )


@dataclass(frozen=True)
class LieWitness:
    """Algebras and maps of the Lie counterexample

    Attributes
    ----------
    s, b, b_prime, x : LieAlgebra
        abelian(2) on {a, b}, the two Heisenberg presentations, abelian(3)
    gl3 : LieAlgebra
        gl(3, F) on e11, ..., e33
    der : LieAlgebra
        Der(X) as computed from X
    psi, psi_prime : LinearMap
        B → gl(3, F) and B′ → gl(3, F)
    v : LinearMap
        gl(3, F) → Der(X), the identity on coordinates
    m, m_prime : LinearMap
        The inclusions S → B and S → B′
    """
    field: FieldSpec
    s: LieAlgebra
    b: LieAlgebra
    b_prime: LieAlgebra
    x: LieAlgebra
    gl3: LieAlgebra
    der: LieAlgebra
    psi: LinearMap
    psi_prime: LinearMap
    v: LinearMap
    m: LinearMap
    m_prime: LinearMap


def _unit(field: FieldSpec, i: int, j: int, c: int = 1) -> list:
    vec = [field.zero] * 9
    vec[gl_index(3, i, j)] = field(c)
    return vec


def build_lie_witness(field: FieldSpec) -> LieWitness:
    """ψ(x) = -e23, ψ(a) = e12, ψ(b) = e13 and ψ′(y) = -e32, ψ′(a) = e12, ψ′(b) = e13
    """
    s = abelian(2, field, labels=['a', 'b'])
    b = heisenberg3(field, HeisenbergVariant.XAB)
    b_prime = heisenberg3(field, HeisenbergVariant.YAB)
    x = abelian(3, field)
    gl3 = gl(3, field)
    der, _ = derivations(x)

    psi = LinearMap.from_images(b, gl3, [_unit(field, 2, 3, -1), _unit(field, 1, 2), _unit(field, 1, 3)])
    psi_prime = LinearMap.from_images(b_prime, gl3, [_unit(field, 3, 2, -1), _unit(field, 1, 2), _unit(field, 1, 3)])
    v = LinearMap(gl3, der, identity_map(gl3).matrix)
    m = LinearMap.from_images(s, b, [b.vector({'a': 1}), b.vector({'b': 1})])
    m_prime = LinearMap.from_images(s, b_prime, [b_prime.vector({'a': 1}), b_prime.vector({'b': 1})])
    return LieWitness(field=field, s=s, b=b, b_prime=b_prime, x=x, gl3=gl3, der=der,
                      psi=psi, psi_prime=psi_prime, v=v, m=m, m_prime=m_prime)
