"""The GL(2) + Z2 automorphisms of osp(2|2) and their action on r-matrices.

Basis changes act as ``g~ = A g``.  An r-matrix written in the old basis has
coordinates ``r~ = (A^-1)^T r A^-1`` in the new one.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .bialgebra import Cobracket, RMatrix, block_join, block_split
from .linsolve import inverse, matmul, rank, transpose
from .superkernel import ZERO, AlgebraError, SuperAlgebra, rational, zeros

SWAP = ((0, 0, 1, 0), (0, 0, 0, 1), (1, 0, 0, 0), (0, 1, 0, 0))


class SingularParameters(AlgebraError):
    """ad - bc = 0: the fermionic block is not invertible."""


@dataclass(frozen=True)
class AutoParams:
    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction
    m: int = 0

    def __post_init__(self):
        for name in "abcd":
            object.__setattr__(self, name, rational(getattr(self, name)))
        if self.m not in (0, 1):
            raise AlgebraError(f"m must be 0 or 1, got {self.m!r}")
        if not self.k:
            raise SingularParameters(
                f"k = ad - bc must be nonzero (a,b,c,d = {self.a},{self.b},{self.c},{self.d})")

    @property
    def k(self) -> Fraction:
        return self.a * self.d - self.b * self.c


@dataclass(frozen=True)
class BasisChange:
    """Block-diagonal ``diag(A_B, A_F)``; rows give new generators in the old basis."""

    A: tuple

    @property
    def A_B(self):
        return tuple(row[:4] for row in self.A[:4])

    @property
    def A_F(self):
        return tuple(row[4:] for row in self.A[4:])

    def __matmul__(self, other: "BasisChange") -> "BasisChange":
        return BasisChange(_freeze(matmul(self.A, other.A)))

    def inverse(self) -> "BasisChange":
        return BasisChange(_freeze(inverse(self.A)))

    @classmethod
    def identity(cls, n: int = 8) -> "BasisChange":
        return cls(tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)))

    @classmethod
    def from_blocks(cls, A_B, A_F) -> "BasisChange":
        A = zeros(8, 8)
        for i in range(4):
            for j in range(4):
                A[i][j] = rational(A_B[i][j])
                A[i + 4][j + 4] = rational(A_F[i][j])
        return cls(_freeze(A))


def _freeze(rows):
    return tuple(tuple(rational(x) for x in row) for row in rows)


def fermionic_block(p: AutoParams):
    a, b, c, d, k = p.a, p.b, p.c, p.d, p.k
    diag = [[a, b, 0, 0], [c, d, 0, 0], [0, 0, a / k, b / k], [0, 0, c / k, d / k]]
    return matmul(SWAP, diag) if p.m else diag


def bosonic_block(p: AutoParams, printed_h_row: bool = False):
    """Bosonic block of the automorphism.

    The H row is ``(ad + bc, ac, bd, 0) / k``, the one forced by
    ``H~ = ({V~+, W~-} + {W~+, V~-}) / 2``.  ``printed_h_row`` substitutes the
    ``ac + bc`` variant instead; that variant is not an automorphism.
    """
    a, b, c, d, k = p.a, p.b, p.c, p.d, p.k
    h0 = a * c + b * c if printed_h_row else a * d + b * c
    sign = -1 if p.m else 1
    return [[h0 / k, a * c / k, b * d / k, ZERO],
            [2 * a * b / k, a * a / k, b * b / k, ZERO],
            [2 * c * d / k, c * c / k, d * d / k, ZERO],
            [ZERO, ZERO, ZERO, Fraction(sign)]]


def build_automorphism(params: AutoParams, printed_h_row: bool = False) -> BasisChange:
    return BasisChange.from_blocks(bosonic_block(params, printed_h_row), fermionic_block(params))


def automorphism_residual(alg: SuperAlgebra, A) -> list[tuple[int, int, int]]:
    """Triples ``(i, j, s)`` where ``sum A_i^p A_j^q c_pq^s != sum c_ij^t A_t^s``."""
    n = alg.dim
    A = A.A if isinstance(A, BasisChange) else A
    if len(A) != n or any(len(row) != n for row in A):
        raise AlgebraError(f"expected a {n}x{n} matrix")
    if rank(A) < n:
        raise AlgebraError("basis change is singular")
    bad = []
    for i in range(n):
        for j in range(n):
            lhs = [ZERO] * n
            for p_, ap in enumerate(A[i]):
                if not ap:
                    continue
                for q, aq in enumerate(A[j]):
                    if not aq:
                        continue
                    for s, cv in alg.sparse[p_][q]:
                        lhs[s] += ap * aq * cv
            rhs = [ZERO] * n
            for t, cv in alg.sparse[i][j]:
                for s in range(n):
                    rhs[s] += cv * A[t][s]
            bad.extend((i, j, s) for s in range(n) if lhs[s] != rhs[s])
    return bad


def is_automorphism(alg: SuperAlgebra, A) -> bool:
    return not automorphism_residual(alg, A)


def act_on_r(A: BasisChange, r: RMatrix) -> RMatrix:
    """Coordinates ``(A^-1)^T r A^-1`` of ``r`` in the basis ``A g``."""
    inv = inverse(A.A)
    return RMatrix(r.alg, matmul(transpose(inv), matmul(r.r, inv)))


def apply_step(params: AutoParams, r: RMatrix) -> RMatrix:
    """The case-reduction action of a printed ``(a, b, c, d, m)``: ``r -> A^T r A``.

    The reductions transform the fermionic blocks as ``r_VV -> M^T r_VV M`` with
    ``M = [[a, b], [c, d]]``, which is ``act_on_r`` with the inverse basis change.
    """
    return act_on_r(build_automorphism(params).inverse(), r)


def pushforward_cobracket(A: BasisChange, f: Cobracket) -> Cobracket:
    """Coordinates of the same map ``delta`` in the basis ``A g``.

    ``delta(g~_i) = A_i^p f_p^{ab} g_a (x) g_b`` re-expanded with ``g = A^-1 g~``.
    """
    n = f.alg.dim
    inv = inverse(A.A)
    out = zeros(n, n, n)
    for p_, a, b, v in f.entries:
        for i in range(n):
            w = A.A[i][p_] * v
            if not w:
                continue
            for j in range(n):
                if not inv[a][j]:
                    continue
                for k in range(n):
                    if inv[b][k]:
                        out[i][j][k] += w * inv[a][j] * inv[b][k]
    return Cobracket(f.alg, out)


def _sym_block(rF, rows):
    return [[rF[i][j] for j in rows] for i in rows]


def fermionic_normal_step(alg: SuperAlgebra, r: RMatrix):
    """Swap V and W if ``rank r_VV < rank r_WW``, then bring ``r_WW`` to ``diag(1,0)`` or 0.

    Returns ``(r~, change, note)``.  ``note`` is ``None`` when the target form was
    reached and ``"normalizable up to square factor"`` when the diagonal entry of a
    rank-one ``r_WW`` is not a rational square; ``r_WW`` is then ``diag(q, 0)`` with
    ``q`` square-free.  Rank-two ``r_WW`` is only diagonalized.
    """
    change = BasisChange.identity()
    rF = block_split(alg, r).r_F
    if rank(_sym_block(rF, (0, 1))) < rank(_sym_block(rF, (2, 3))):
        change = build_automorphism(AutoParams(1, 0, 0, 1, 1))
        r = act_on_r(change, r)
        rF = block_split(alg, r).r_F
    wW = _sym_block(rF, (2, 3))
    note = None
    if rank(wW) == 0:
        return r, change, note
    # With m=0 and M = [[a,b],[c,d]], r_WW -> N^T r_WW N where N = k M^-1; any
    # invertible N is reached by M = det(N) N^-1.
    P, diag = _congruence_diagonalize(wW)
    P, diag, note = _normalize_diagonal(P, diag)
    N = P
    detN = N[0][0] * N[1][1] - N[0][1] * N[1][0]
    Ninv = inverse(N)
    M = [[detN * Ninv[i][j] for j in range(2)] for i in range(2)]
    step = build_automorphism(AutoParams(M[0][0], M[0][1], M[1][0], M[1][1], 0))
    r = act_on_r(step, r)
    return r, step @ change, note


def _congruence_diagonalize(S):
    """Rational ``P`` with ``P^T S P`` diagonal, for a symmetric 2x2 ``S``."""
    (p, q), (_, s) = S
    if p:
        P = [[Fraction(1), -q / p], [Fraction(0), Fraction(1)]]
    elif s:
        P = [[Fraction(0), Fraction(1)], [Fraction(1), -q / s]]
    elif q:
        P = [[Fraction(1), Fraction(1)], [Fraction(1), Fraction(-1)]]
    else:
        return [[Fraction(1), Fraction(0)], [Fraction(0), Fraction(1)]], [Fraction(0)] * 2
    D = matmul(transpose(P), matmul(S, P))
    if not D[0][0] and D[1][1]:
        P = matmul(P, [[0, 1], [1, 0]])
        D = matmul(transpose(P), matmul(S, P))
    return P, [D[0][0], D[1][1]]


def _normalize_diagonal(P, diag):
    note = None
    scale = []
    for v in diag:
        if not v:
            scale.append(Fraction(1))
            continue
        root = rational_sqrt(v)
        if root is None:
            note = "normalizable up to square factor"
            root = rational_sqrt(v / _squarefree_part(v))
        scale.append(1 / root)
    return matmul(P, [[scale[0], 0], [0, scale[1]]]), diag, note


def rational_sqrt(v: Fraction) -> Fraction | None:
    from math import isqrt

    if v < 0:
        return None
    n, d = v.numerator, v.denominator
    rn, rd = isqrt(n), isqrt(d)
    return Fraction(rn, rd) if rn * rn == n and rd * rd == d else None


def _squarefree_part(v: Fraction) -> Fraction:
    """Smallest-magnitude ``q`` (square-free integer, sign of ``v``) with ``v / q`` a square."""
    num = abs(v.numerator) * v.denominator
    q, f = 1, 2
    while f * f <= num:
        while num % (f * f) == 0:
            num //= f * f
        if num % f == 0:
            q *= f
            num //= f
        f += 1
    q *= num
    return Fraction(q if v > 0 else -q)


def r_blocks(alg: SuperAlgebra, r: RMatrix):
    """``(r_VV, r_VW, r_WW)`` 2x2 sub-blocks of the fermionic part."""
    rF = block_split(alg, r).r_F
    return (_sym_block(rF, (0, 1)), [[rF[i][j] for j in (2, 3)] for i in (0, 1)],
            _sym_block(rF, (2, 3)))


def rebuild(alg: SuperAlgebra, r_B, r_F) -> RMatrix:
    return block_join(alg, r_B, r_F)


# --- equivalence witnesses -------------------------------------------------------

@dataclass(frozen=True)
class Step:
    """One printed transformation; each entry is an expression in the witness variables."""

    a: str
    b: str
    c: str
    d: str
    m: int = 0

    def params(self, env) -> AutoParams:
        from .expr import evaluate

        return AutoParams(*(evaluate(str(x), env) for x in (self.a, self.b, self.c, self.d)),
                          self.m)

    def to_dict(self) -> dict:
        return {"a": str(self.a), "b": str(self.b), "c": str(self.c), "d": str(self.d),
                "m": self.m}


S_STEP = Step("1", "0", "0", "1", 1)


@dataclass(frozen=True)
class EquivalenceWitness:
    """Source family -> target family through a sequence of automorphisms.

    ``variables`` are sampled; ``source_params`` and ``target_params`` give every
    parameter of the two templates as an expression in them.  ``status`` is
    ``"verify"`` or ``"skip"`` (with ``reason``).
    """

    id: str
    source: str
    target: str
    variables: tuple[str, ...]
    source_params: dict
    steps: tuple[Step, ...]
    target_params: dict
    exclusions: tuple[str, ...] = ()
    origin: str = "printed"
    status: str = "verify"
    reason: str = ""
    note: str = ""

    def to_dict(self) -> dict:
        return {"id": self.id, "source": self.source, "target": self.target,
                "variables": list(self.variables),
                "source_params": {k: str(v) for k, v in self.source_params.items()},
                "steps": [s.to_dict() for s in self.steps],
                "target_params": {k: str(v) for k, v in self.target_params.items()},
                "exclusions": list(self.exclusions), "origin": self.origin,
                "status": self.status, "reason": self.reason, "note": self.note}

    @classmethod
    def from_dict(cls, data: dict) -> "EquivalenceWitness":
        steps = tuple(Step(s["a"], s["b"], s["c"], s["d"], int(s.get("m", 0)))
                      for s in data.get("steps", ()))
        return cls(data["id"], data["source"], data["target"], tuple(data["variables"]),
                   dict(data["source_params"]), steps, dict(data.get("target_params", {})),
                   tuple(data.get("exclusions", ())), data.get("origin", "printed"),
                   data.get("status", "verify"), data.get("reason", ""), data.get("note", ""))


class EmptyWitnessDomain(AlgebraError):
    """No sampled point avoided the exclusion sets."""


@dataclass
class EquivalenceReport:
    witness: str
    verdict: str                      # "pass" | "fail" | "skipped"
    samples: list = None
    mismatches: list = None
    rejected: int = 0
    reason: str = ""

    @property
    def ok(self) -> bool:
        return self.verdict == "pass"

    def to_dict(self) -> dict:
        return {"witness": self.witness, "verdict": self.verdict,
                "samples": self.samples or [], "mismatches": self.mismatches or [],
                "rejected": self.rejected, "reason": self.reason}


def _witness_point(witness: EquivalenceWitness, env, resolve):
    """Instantiate source, push it through the steps, and instantiate the target.

    Step formulas and exclusions may use the witness variables and the source
    parameters.  Raises ZeroDivisionError / AlgebraError when ``env`` is outside
    the domain."""
    from .expr import evaluate

    source_values = {k: evaluate(str(v), env) for k, v in witness.source_params.items()}
    env = {**source_values, **env}
    for e in witness.exclusions:
        if not evaluate(e, env):
            raise ZeroDivisionError(f"exclusion {e} vanishes")
    r = resolve(witness.source).evaluate(source_values)
    params = [step.params(env) for step in witness.steps]
    target = resolve(witness.target).evaluate(
        {k: evaluate(str(v), env) for k, v in witness.target_params.items()})
    for p in params:
        r = apply_step(p, r)
    return r, target


def verify_equivalence(witness: EquivalenceWitness, sample_count: int = 5, seed: int | None = None,
                       resolve=None, max_draws: int | None = None) -> EquivalenceReport:
    """Check ``witness`` at ``sample_count`` random rational points.

    Points where a denominator, an exclusion or ``ad - bc`` vanishes are redrawn;
    if none of ``max_draws`` draws is admissible :class:`EmptyWitnessDomain` is raised.
    """
    from .sampling import make_rng, random_rational

    if resolve is None:
        from .catalog import r_template as resolve
    if witness.status == "skip":
        return EquivalenceReport(witness.id, "skipped", reason=witness.reason)
    if sample_count < 1:
        raise AlgebraError("sample_count must be positive")
    rng = make_rng(seed)
    max_draws = max_draws or 40 * sample_count
    samples, mismatches, rejected = [], [], 0
    while len(samples) < sample_count:
        if rejected >= max_draws:
            if samples:
                break
            raise EmptyWitnessDomain(
                f"{witness.id}: all {rejected} sampled points hit an exclusion")
        env = {v: random_rational(rng) for v in witness.variables}
        try:
            got, want = _witness_point(witness, env, resolve)
        except (ZeroDivisionError, AlgebraError) as exc:
            if isinstance(exc, AlgebraError) and not _is_domain_error(exc):
                raise
            rejected += 1
            continue
        point = {k: str(v) for k, v in env.items()}
        samples.append(point)
        if got != want:
            mismatches.append(point)
    if len(samples) < sample_count:
        return EquivalenceReport(witness.id, "fail", samples, mismatches, rejected,
                                 f"only {len(samples)} admissible samples")
    verdict = "fail" if mismatches else "pass"
    return EquivalenceReport(witness.id, verdict, samples, mismatches, rejected)


def _is_domain_error(exc) -> bool:
    from .catalog.templates import ExcludedPoint

    return isinstance(exc, (ExcludedPoint, SingularParameters))
