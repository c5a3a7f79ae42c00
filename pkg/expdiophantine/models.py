from enum import Enum
from math import prod
from typing import Any, Dict, List, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator


class Frozen(BaseModel):
    model_config = ConfigDict(frozen=True)


class OutputFormat(str, Enum):
    JSON = "json"
    PLAIN = "plain"


class Family(str, Enum):
    A = "A"
    B = "B"
    C = "C"
    D = "D"
    E = "E"
    F = "F"
    G = "G"
    LUCA1 = "Luca1"
    LUCA2 = "Luca2"
    B1 = "B1"
    OTHER = "other"


class XCYNStatus(str, Enum):
    BOUND_SATISFIED = "bound_satisfied"
    EXCEPTIONAL = "exceptional"
    VIOLATION = "violation"


class TraceBranch(str, Enum):
    ONE_MOD_4 = "x = 1 mod 4"
    THREE_MOD_4 = "x = 3 mod 4"


class TraceOutcome(str, Enum):
    FAMILY_A = "family_a"
    CASE_B = "case_b"
    CASE_C = "case_c"
    REACHED_BOUND = "reached_bound"
    FAILED = "failed"


class ObstructionKind(str, Enum):
    INELIGIBLE = "ineligible"
    MIXED_PRIMES = "mixed_primes"
    NONRESIDUE_MOD5 = "nonresidue_mod5"
    FIVE_DIVIDES_A = "five_divides_a"
    JACOBI_CHAIN = "jacobi_chain"
    NEGATION_ORDER = "negation_order"
    JACOBI_CHAIN_MOD7 = "jacobi_chain_mod7"


# ntheory

class PrimePower(Frozen):
    prime: int = Field(..., ge=2)
    exponent: int = Field(..., ge=1)


class Factorization(Frozen):
    value: int = Field(..., ge=1)
    factors: List[PrimePower] = []

    @model_validator(mode="after")
    def _check_product(self):
        primes = [f.prime for f in self.factors]
        if primes != sorted(set(primes)):
            raise ValueError("primes must be strictly increasing")
        if prod(f.prime ** f.exponent for f in self.factors) != self.value:
            raise ValueError("factors do not multiply to value")
        return self

    @property
    def primes(self) -> List[int]:
        return [f.prime for f in self.factors]


class PrimePowerMatch(Frozen):
    """``|n| = prime ** exponent``; ``unit`` marks ``|n| = 1`` (no prime)."""

    prime: Optional[int] = None
    exponent: int = 0
    unit: bool = False


class SquarefreeSplit(Frozen):
    C: int = Field(..., ge=2)
    P: int = Field(..., ge=1)
    Q: int = Field(..., ge=1)
    s: int = Field(..., ge=1)

    @model_validator(mode="after")
    def _check_split(self):
        if self.P * self.s * self.s != self.C:
            raise ValueError("C != P*s^2")
        return self


# quadfield

class QuadInt(Frozen):
    """The element ``re + im*sqrt(sigma*D)``."""

    re: int
    im: int
    D: int = Field(..., ge=1)
    sigma: Literal[1, -1] = -1

    @property
    def radicand(self) -> int:
        return self.sigma * self.D

    def __str__(self) -> str:
        sign = "-" if self.im < 0 else "+"
        return f"{self.re} {sign} {abs(self.im)}*sqrt({self.radicand})"


class Lemma32Solution(Frozen):
    r: int
    a: int
    im: Literal[1, -1]


class CongruenceCheck(Frozen):
    r: int
    congruence1: Optional[bool] = None
    congruence2: bool
    sign_law: Optional[bool] = None


class Lemma32Report(BaseModel):
    D: int
    r_max: int
    eligible: bool
    solutions: List[Lemma32Solution] = []
    congruence_log: List[CongruenceCheck] = []
    # odd primes r > 3, 3 not dividing r, that both congruences let through
    filtered_candidates: List[int] = []


class Lemma32Obstruction(BaseModel):
    D: int
    kind: ObstructionKind
    excludes: bool
    exceptional_r3: bool = False
    symbols: Dict[str, int] = {}
    note: str = ""


# pell

class CFExpansion(Frozen):
    D: int = Field(..., ge=2)
    a0: int
    period: List[int]

    @model_validator(mode="after")
    def _check_period(self):
        if not self.period or self.period[-1] != 2 * self.a0:
            raise ValueError("period must end in 2*a0")
        return self


class PellSolution(Frozen):
    D: int = Field(..., ge=2)
    X: int
    Y: int
    n: int = Field(1, ge=0)
    target: Literal[1, -1]

    @model_validator(mode="after")
    def _check_norm(self):
        if self.X * self.X - self.D * self.Y * self.Y != self.target:
            raise ValueError(f"X^2 - {self.D}*Y^2 != {self.target}")
        return self


class PellFundamentals(Frozen):
    minus: Optional[PellSolution] = None
    plus: PellSolution


class StormerViolation(Frozen):
    target: Literal[1, -1]
    n: int
    X: int
    Y: int


class ScCondition(Frozen):
    q: int
    q_divides_quotient: bool
    y2q_divides_yj: bool
    cofactor_integral_and_coprime: bool

    @property
    def ok(self) -> bool:
        return self.q_divides_quotient and self.y2q_divides_yj and self.cofactor_integral_and_coprime


class ScLemmaCheck(BaseModel):
    j: int
    foreign_factor: bool
    conditions: List[ScCondition] = []
    witness_q: Optional[int] = None
    passed: bool


class ScLemmaReport(BaseModel):
    y: int
    e: int
    sign: Literal[1, -1]
    D: int
    j_max: int
    checks: List[ScLemmaCheck] = []
    holds: bool


class NormWitness(Frozen):
    n: int
    r: int
    s: int
    norm: int


class NormRepReport(BaseModel):
    D: int
    u: int
    p: int
    checked_up_to: int
    representable: List[int] = []
    witnesses: List[NormWitness] = []
    t: Optional[int] = None

    @property
    def divisibility_law_holds(self) -> bool:
        return self.t is None or all(n % self.t == 0 for n in self.representable)


# classgroup

class QuadForm(Frozen):
    a: int = Field(..., ge=1)
    b: int
    c: int
    disc: int = Field(..., lt=0)

    @model_validator(mode="after")
    def _check_disc(self):
        if self.b * self.b - 4 * self.a * self.c != self.disc:
            raise ValueError("b^2 - 4ac != disc")
        return self

    @property
    def is_reduced(self) -> bool:
        a, b, c = self.a, self.b, self.c
        if not (abs(b) <= a <= c):
            return False
        return b >= 0 if (abs(b) == a or a == c) else True

    def __str__(self) -> str:
        return f"({self.a}, {self.b}, {self.c})"


class ClassGroupTable(Frozen):
    P: int
    disc: int
    forms: Tuple[QuadForm, ...]
    h: int
    exponent: int
    orders: Tuple[int, ...]


# solvers

class PowerSumSolution(Frozen):
    p: int = Field(..., ge=2)
    a: int = Field(..., ge=1)
    b: int = Field(..., ge=1)
    sign: Literal[1, -1] = 1
    const_sign: Literal[1, -1] = 1
    x: int = Field(..., ge=1)
    family: Family = Family.OTHER

    @model_validator(mode="after")
    def _check_equation(self):
        lhs = self.p ** self.a + self.sign * self.p ** self.b + self.const_sign
        if lhs != self.x * self.x:
            raise ValueError("p^a + sign*p^b + const_sign != x^2")
        return self

    @property
    def key(self):
        return (self.p, self.a, self.b, self.sign, self.const_sign, self.x)


class TraceStep(Frozen):
    name: str
    passed: bool
    values: Dict[str, int] = {}
    note: str = ""


class SzalayTrace(BaseModel):
    a: int
    b: int
    x: int
    t: int
    k: int
    branch: TraceBranch
    g: Optional[int] = None
    h: Optional[int] = None
    steps: List[TraceStep] = []
    outcome: TraceOutcome


class Theorem15Witness(BaseModel):
    p: int
    b: int
    value: int
    D: int
    u: int
    k: int
    norms: List[int]
    all_unit: bool
    forbidden_hits: List[int] = []


class LcmTerm(Frozen):
    q: int
    term: int


class BoundCertificate(BaseModel):
    C: int
    split: SquarefreeSplit
    u: Literal[0, 1]
    class_number: int
    h_exponent: int
    lcm_terms: List[LcmTerm] = []
    N: int
    allowed_n: List[int]

    def allows(self, n: int) -> bool:
        return n == 3 or self.N % n == 0


class XCYNSolution(Frozen):
    x: int = Field(..., ge=1)
    y: int = Field(..., ge=1)
    n: int = Field(..., ge=1)
    C: int
    status: XCYNStatus


# cli

class RunMeta(BaseModel):
    version: str
    elapsed_seconds: float
    exit_code: int


class RunReport(BaseModel):
    command: str
    parameters: Dict[str, Any]
    payload: Any
    meta: RunMeta
