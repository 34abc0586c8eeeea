"""Every defining relation of both lattice algebras as a named, runnable check.

The catalogue is declarative: each entry pairs a left-hand and right-hand
operator expression (deferred builders over a lattice configuration) with
the index ranges the relation is quantified over, and carries the equation
identifiers it certifies in its ``paper_ref`` field, which is part of the
report wire format.  Checks are grouped into suites:

* ``schwinger``       -- clock/shift commutation, orders, unitarity
* ``almost_unitary``  -- raising/lowering nilpotency and boundary defects
* ``proj_PR``         -- the P/R projection ladder calculus
* ``proj_script``     -- the clock-side spectral projection calculus
* ``conversions``     -- each operator family rebuilt from the other
* ``matrix_units``    -- both standard-basis representations of the full
                         matrix algebra
* ``commutator``      -- the position operator and its commutation relation
* ``tensor``          -- two-factor product-lattice constructions

A failing identity is a reported result, never an exception: in exact mode
a check passes iff its residual is literally zero, in float mode iff the
worst entry-wise residual stays within the configured tolerance.  Runners
are stateless and deterministic for a fixed seed.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Mapping

from . import lattice_ops as ops
from . import tensor_lattice as tensor
from .lattice_ops import LatticeConfig, root_scalar
from .matrix import (
    OperatorMatrix,
    adjoint,
    equals,
    from_rows,
    identity,
    matpow,
    max_residual,
    scalar_mul,
    zeros,
)
from .tensor_lattice import ProductLatticeConfig

SUITES = (
    "schwinger",
    "almost_unitary",
    "proj_PR",
    "proj_script",
    "conversions",
    "matrix_units",
    "commutator",
    "tensor",
)

LATTICE_SUITES = SUITES[:-1]

UNIT_SAMPLE_SIZE = 64


def _single(cfg, seed):
    return ({},)


@dataclass(frozen=True)
class IdentityCheck:
    """A named relation: lhs(cfg, **indices) should equal rhs(cfg, **indices)."""

    name: str
    suite: str
    paper_ref: str
    lhs: Callable[..., OperatorMatrix]
    rhs: Callable[..., OperatorMatrix]
    indices: Callable = field(default=_single)
    record_indices: bool = False


@dataclass(frozen=True)
class CheckResult:
    name: str
    paper_ref: str
    suite: str
    d: int
    mode: str
    indices: Mapping | None
    passed: bool
    max_residual: float
    elapsed: float


@dataclass(frozen=True)
class SuiteReport:
    suite: str
    d: int
    mode: str
    tolerance: float | None
    results: tuple[CheckResult, ...]

    @property
    def passed(self) -> int:
        return sum(1 for r in self.results if r.passed)

    @property
    def failed(self) -> int:
        return sum(1 for r in self.results if not r.passed)

    @property
    def total(self) -> int:
        return len(self.results)

    @property
    def all_passed(self) -> bool:
        return self.failed == 0


def _over(**ranges):
    """Index generator for the cartesian product of per-variable ranges.

    Each range is a callable of the lattice size d returning an iterable.
    """
    names = tuple(ranges)
    fns = tuple(ranges.values())

    def gen(cfg, seed):
        axes = [tuple(fn(cfg.d)) for fn in fns]
        return tuple(
            dict(zip(names, combo)) for combo in itertools.product(*axes)
        )

    return gen


def _boundary_pairs(cfg, seed):
    """All (n, m) with 0 <= n, m <= d and n + m >= d."""
    d = cfg.d
    return tuple(
        {"n": n, "m": m}
        for n in range(d + 1)
        for m in range(d + 1)
        if n + m >= d
    )


def _unit_pairs(cfg, seed):
    d = cfg.d
    return tuple({"m": m, "n": n} for m in range(d) for n in range(d))


def _unit_quadruples(cfg, seed):
    """Exhaustive d^4 index quadruples for d <= 4, else 64 seeded samples."""
    d = cfg.d
    if d <= 4:
        return tuple(
            {"i": i, "j": j, "k": k, "l": l}
            for i, j, k, l in itertools.product(range(d), repeat=4)
        )
    rng = random.Random(seed)
    return tuple(
        {
            "i": rng.randrange(d),
            "j": rng.randrange(d),
            "k": rng.randrange(d),
            "l": rng.randrange(d),
        }
        for _ in range(UNIT_SAMPLE_SIZE)
    )


def _pair_index(pcfg, seed):
    return ({"d1": pcfg.d1, "d2": pcfg.d2},)


def _eye(cfg):
    return identity(cfg.d, cfg.scalar_mode)


def _zero(cfg):
    return zeros(cfg.d, cfg.scalar_mode)


@lru_cache(maxsize=None)
def _rebuilt_raiser(cfg):
    return ops.a_dagger_from_UV(cfg, ops.make_U(cfg), ops.make_V(cfg))


@lru_cache(maxsize=None)
def _edge_powers(cfg):
    return ops.edge_powers_from_UV(cfg, ops.make_U(cfg), ops.make_V(cfg))


@lru_cache(maxsize=None)
def _script_sum(cfg, lo: int, hi: int):
    """proj_scriptP(lo) + ... + proj_scriptP(hi)."""
    total = _zero(cfg)
    for j in range(lo, hi + 1):
        total = total + ops.proj_scriptP(cfg, j)
    return total


@lru_cache(maxsize=None)
def _cyclic_shift_direct(cfg):
    """Cyclic permutation matrix |n+1 mod d><n|, built by index rule alone."""
    d = cfg.d
    return from_rows(
        [[1 if i == (j + 1) % d else 0 for j in range(d)] for i in range(d)],
        cfg.scalar_mode,
    )


@lru_cache(maxsize=None)
def _clock_direct(cfg):
    """diag(1, q, ..., q^(d-1)), built entry by entry."""
    d = cfg.d
    rows = [
        [root_scalar(cfg, i) if i == j else cfg.scalar_mode.zero() for j in range(d)]
        for i in range(d)
    ]
    return OperatorMatrix(cfg.scalar_mode, tuple(tuple(r) for r in rows))


@lru_cache(maxsize=None)
def _position_direct(cfg):
    """diag(0, beta, 2*beta, ...), built entry by entry."""
    d = cfg.d
    return from_rows(
        [[cfg.beta * i if i == j else 0 for j in range(d)] for i in range(d)],
        cfg.scalar_mode,
    )


@lru_cache(maxsize=None)
def _standard_unit(cfg, m: int, n: int):
    d = cfg.d
    return from_rows(
        [[1 if (i, j) == (m, n) else 0 for j in range(d)] for i in range(d)],
        cfg.scalar_mode,
    )


@lru_cache(maxsize=None)
def _clock_phase_doubled(cfg):
    """Deliberately corrupted clock with q^(2n) phases; negative control only."""
    total = _zero(cfg)
    for n in range(cfg.d):
        step = ops.proj_P(cfg, n) - ops.proj_P(cfg, n + 1)
        total = total + scalar_mul(root_scalar(cfg, 2 * n), step)
    return total


@dataclass(frozen=True)
class Mutation:
    """A named single-scalar perturbation used to prove the verifier can fail."""

    name: str
    description: str
    clock: Callable[[LatticeConfig], OperatorMatrix]


MUTATIONS = {
    "clock-phase-doubled": Mutation(
        name="clock-phase-doubled",
        description="replace the clock phases q^n by q^(2n) in the clock "
        "constructor as seen by the schwinger suite",
        clock=_clock_phase_doubled,
    ),
}


def _schwinger_checks(clock):
    u = ops.make_U
    return [
        IdentityCheck(
            name="schwinger.VU_eq_qUV",
            suite="schwinger",
            paper_ref="Eq. (1); Eqs. (29)-(32)",
            lhs=lambda cfg: clock(cfg) @ u(cfg),
            rhs=lambda cfg: root_scalar(cfg, 1) * (u(cfg) @ clock(cfg)),
        ),
        IdentityCheck(
            name="schwinger.U_order_d",
            suite="schwinger",
            paper_ref="Eq. (1); Eq. (24)",
            lhs=lambda cfg: matpow(u(cfg), cfg.d),
            rhs=_eye,
        ),
        IdentityCheck(
            name="schwinger.V_order_d",
            suite="schwinger",
            paper_ref="Eq. (1); Eq. (15)",
            lhs=lambda cfg: matpow(clock(cfg), cfg.d),
            rhs=_eye,
        ),
        IdentityCheck(
            name="schwinger.U_power_recursion",
            suite="schwinger",
            paper_ref="Eq. (23); Eqs. (25)-(27)",
            lhs=lambda cfg, n: u(cfg) @ matpow(u(cfg), n),
            rhs=lambda cfg, n: matpow(ops.make_a_dagger(cfg), n + 1)
            + matpow(ops.make_a(cfg), cfg.d - (n + 1)),
            indices=_over(n=lambda d: range(d)),
        ),
        IdentityCheck(
            name="schwinger.V_power_recursion",
            suite="schwinger",
            paper_ref="Eq. (14); Eqs. (16)-(20)",
            lhs=lambda cfg, k: clock(cfg) @ matpow(clock(cfg), k),
            rhs=_clock_power_expansion,
            indices=_over(k=lambda d: range(d)),
        ),
        IdentityCheck(
            name="schwinger.UUdag_eq_1",
            suite="schwinger",
            paper_ref="Eq. (1); Eq. (28)",
            lhs=lambda cfg: u(cfg) @ adjoint(u(cfg)),
            rhs=_eye,
        ),
        IdentityCheck(
            name="schwinger.UdagU_eq_1",
            suite="schwinger",
            paper_ref="Eq. (1); Eq. (28)",
            lhs=lambda cfg: adjoint(u(cfg)) @ u(cfg),
            rhs=_eye,
        ),
        IdentityCheck(
            name="schwinger.VVdag_eq_1",
            suite="schwinger",
            paper_ref="Eq. (1); Eqs. (21)-(22)",
            lhs=lambda cfg: clock(cfg) @ adjoint(clock(cfg)),
            rhs=_eye,
        ),
        IdentityCheck(
            name="schwinger.VdagV_eq_1",
            suite="schwinger",
            paper_ref="Eq. (1); Eq. (22)",
            lhs=lambda cfg: adjoint(clock(cfg)) @ clock(cfg),
            rhs=_eye,
        ),
    ]


def _clock_power_expansion(cfg, k):
    total = _zero(cfg)
    for n in range(cfg.d):
        step = ops.proj_P(cfg, n) - ops.proj_P(cfg, n + 1)
        total = total + scalar_mul(root_scalar(cfg, (k + 1) * n), step)
    return total


def _almost_unitary_checks():
    raiser, lower = ops.make_a_dagger, ops.make_a
    return [
        IdentityCheck(
            name="almost_unitary.aad_eq_1_minus_boundary",
            suite="almost_unitary",
            paper_ref="Eq. (2)",
            lhs=lambda cfg: lower(cfg) @ raiser(cfg),
            rhs=lambda cfg: _eye(cfg)
            - matpow(raiser(cfg), cfg.d - 1) @ matpow(lower(cfg), cfg.d - 1),
        ),
        IdentityCheck(
            name="almost_unitary.ada_eq_1_minus_boundary",
            suite="almost_unitary",
            paper_ref="Eq. (3)",
            lhs=lambda cfg: raiser(cfg) @ lower(cfg),
            rhs=lambda cfg: _eye(cfg)
            - matpow(lower(cfg), cfg.d - 1) @ matpow(raiser(cfg), cfg.d - 1),
        ),
        IdentityCheck(
            name="almost_unitary.a_dag_nilpotent",
            suite="almost_unitary",
            paper_ref="Eq. (2)",
            lhs=lambda cfg: matpow(raiser(cfg), cfg.d),
            rhs=_zero,
        ),
        IdentityCheck(
            name="almost_unitary.a_nilpotent",
            suite="almost_unitary",
            paper_ref="Eq. (3)",
            lhs=lambda cfg: matpow(lower(cfg), cfg.d),
            rhs=_zero,
        ),
    ]


def _proj_PR_checks():
    raiser, lower = ops.make_a_dagger, ops.make_a
    return [
        IdentityCheck(
            name="proj_PR.P0_eq_identity",
            suite="proj_PR",
            paper_ref="Eq. (4); A-1",
            lhs=lambda cfg: ops.proj_P(cfg, 0),
            rhs=_eye,
        ),
        IdentityCheck(
            name="proj_PR.R0_eq_identity",
            suite="proj_PR",
            paper_ref="Eq. (6); A-1",
            lhs=lambda cfg: ops.proj_R(cfg, 0),
            rhs=_eye,
        ),
        IdentityCheck(
            name="proj_PR.anad_eq_1_minus_P",
            suite="proj_PR",
            paper_ref="Eq. (5)",
            lhs=lambda cfg, n: matpow(lower(cfg), n) @ matpow(raiser(cfg), n),
            rhs=lambda cfg, n: _eye(cfg) - ops.proj_P(cfg, cfg.d - n),
            indices=_over(n=lambda d: range(d + 1)),
        ),
        IdentityCheck(
            name="proj_PR.P_complement",
            suite="proj_PR",
            paper_ref="Eq. (7)",
            lhs=lambda cfg, n: ops.proj_P(cfg, n),
            rhs=lambda cfg, n: _eye(cfg) - ops.proj_R(cfg, cfg.d - n),
            indices=_over(n=lambda d: range(d + 1)),
        ),
        IdentityCheck(
            name="proj_PR.R_complement",
            suite="proj_PR",
            paper_ref="Eq. (7)",
            lhs=lambda cfg, n: ops.proj_R(cfg, n),
            rhs=lambda cfg, n: _eye(cfg) - ops.proj_P(cfg, cfg.d - n),
            indices=_over(n=lambda d: range(d + 1)),
        ),
        IdentityCheck(
            name="proj_PR.P_shift_raiser",
            suite="proj_PR",
            paper_ref="Eq. (8); A-4",
            lhs=lambda cfg, m: ops.proj_P(cfg, m) @ raiser(cfg),
            rhs=lambda cfg, m: raiser(cfg) @ ops.proj_P(cfg, m - 1),
            indices=_over(m=lambda d: range(1, d + 1)),
        ),
        IdentityCheck(
            name="proj_PR.lower_shift_P",
            suite="proj_PR",
            paper_ref="Eq. (8); A-4",
            lhs=lambda cfg, m: lower(cfg) @ ops.proj_P(cfg, m),
            rhs=lambda cfg, m: ops.proj_P(cfg, m - 1) @ lower(cfg),
            indices=_over(m=lambda d: range(1, d + 1)),
        ),
        IdentityCheck(
            name="proj_PR.P_absorb_max",
            suite="proj_PR",
            paper_ref="Eq. (8); A-3; A-12..A-14",
            lhs=lambda cfg, n, m: ops.proj_P(cfg, n) @ ops.proj_P(cfg, m),
            rhs=lambda cfg, n, m: ops.proj_P(cfg, max(n, m)),
            indices=_over(n=lambda d: range(d + 1), m=lambda d: range(d + 1)),
        ),
        IdentityCheck(
            name="proj_PR.P_kills_lower_powers",
            suite="proj_PR",
            paper_ref="Eq. (8); A-2",
            lhs=lambda cfg, n, m: ops.proj_P(cfg, m) @ matpow(lower(cfg), n),
            rhs=lambda cfg, n, m: _zero(cfg),
            indices=_boundary_pairs,
        ),
        IdentityCheck(
            name="proj_PR.raiser_powers_kill_P",
            suite="proj_PR",
            paper_ref="Eq. (8); A-2",
            lhs=lambda cfg, n, m: matpow(raiser(cfg), n) @ ops.proj_P(cfg, m),
            rhs=lambda cfg, n, m: _zero(cfg),
            indices=_boundary_pairs,
        ),
        IdentityCheck(
            name="proj_PR.R_shift_raiser",
            suite="proj_PR",
            paper_ref="Eq. (9); A-16",
            lhs=lambda cfg, m: ops.proj_R(cfg, m) @ raiser(cfg),
            rhs=lambda cfg, m: raiser(cfg) @ ops.proj_R(cfg, m + 1),
            indices=_over(m=lambda d: range(d)),
        ),
        IdentityCheck(
            name="proj_PR.lower_shift_R",
            suite="proj_PR",
            paper_ref="Eq. (9); A-15",
            lhs=lambda cfg, m: lower(cfg) @ ops.proj_R(cfg, m),
            rhs=lambda cfg, m: ops.proj_R(cfg, m + 1) @ lower(cfg),
            indices=_over(m=lambda d: range(d)),
        ),
        IdentityCheck(
            name="proj_PR.R_absorb_max",
            suite="proj_PR",
            paper_ref="Eq. (9); A-5..A-11",
            lhs=lambda cfg, n, m: ops.proj_R(cfg, n) @ ops.proj_R(cfg, m),
            rhs=lambda cfg, n, m: ops.proj_R(cfg, max(n, m)),
            indices=_over(n=lambda d: range(d + 1), m=lambda d: range(d + 1)),
        ),
        IdentityCheck(
            name="proj_PR.lower_powers_kill_R",
            suite="proj_PR",
            paper_ref="Eq. (9); A-2",
            lhs=lambda cfg, n, m: matpow(lower(cfg), n) @ ops.proj_R(cfg, m),
            rhs=lambda cfg, n, m: _zero(cfg),
            indices=_boundary_pairs,
        ),
        IdentityCheck(
            name="proj_PR.R_kills_raiser_powers",
            suite="proj_PR",
            paper_ref="Eq. (9); A-2",
            lhs=lambda cfg, n, m: ops.proj_R(cfg, m) @ matpow(raiser(cfg), n),
            rhs=lambda cfg, n, m: _zero(cfg),
            indices=_boundary_pairs,
        ),
    ]


def _proj_script_checks():
    return [
        IdentityCheck(
            name="proj_script.idempotent",
            suite="proj_script",
            paper_ref="Eq. (34); Eq. (37); A-18..A-19",
            lhs=lambda cfg, n: ops.proj_scriptP(cfg, n) @ ops.proj_scriptP(cfg, n),
            rhs=lambda cfg, n: ops.proj_scriptP(cfg, n),
            indices=_over(n=lambda d: range(d)),
        ),
        IdentityCheck(
            name="proj_script.hermitian",
            suite="proj_script",
            paper_ref="A-21",
            lhs=lambda cfg, n: adjoint(ops.proj_scriptP(cfg, n)),
            rhs=lambda cfg, n: ops.proj_scriptP(cfg, n),
            indices=_over(n=lambda d: range(d)),
        ),
        IdentityCheck(
            name="proj_script.orthogonal",
            suite="proj_script",
            paper_ref="Eq. (37); A-26..A-28",
            lhs=lambda cfg, n, m: ops.proj_scriptP(cfg, n) @ ops.proj_scriptP(cfg, m),
            rhs=lambda cfg, n, m: ops.proj_scriptP(cfg, n) if n == m else _zero(cfg),
            indices=_over(n=lambda d: range(d), m=lambda d: range(d)),
        ),
        IdentityCheck(
            name="proj_script.partition_of_unity",
            suite="proj_script",
            paper_ref="A-23; A-24",
            lhs=lambda cfg: _script_sum(cfg, 0, cfg.d - 1),
            rhs=_eye,
        ),
        IdentityCheck(
            name="proj_script.complement_sum",
            suite="proj_script",
            paper_ref="A-25",
            lhs=_script_complement_sum,
            rhs=lambda cfg: scalar_mul(cfg.d - 1, _eye(cfg)),
        ),
        IdentityCheck(
            name="proj_script.complement_definition",
            suite="proj_script",
            paper_ref="A-17",
            lhs=lambda cfg, n: ops.proj_scriptR(cfg, n),
            rhs=lambda cfg, n: _eye(cfg) - ops.proj_scriptP(cfg, n),
            indices=_over(n=lambda d: range(d)),
        ),
        IdentityCheck(
            name="proj_script.shift_right",
            suite="proj_script",
            paper_ref="Eq. (36); A-20",
            lhs=lambda cfg, n, m: ops.proj_scriptP(cfg, n) @ matpow(ops.make_U(cfg), m),
            rhs=lambda cfg, n, m: matpow(ops.make_U(cfg), m) @ ops.proj_scriptP(cfg, n + m),
            indices=_over(n=lambda d: range(d), m=lambda d: range(d)),
        ),
        IdentityCheck(
            name="proj_script.shift_left",
            suite="proj_script",
            paper_ref="Eq. (36); A-22",
            lhs=lambda cfg, n, m: matpow(adjoint(ops.make_U(cfg)), m) @ ops.proj_scriptP(cfg, n),
            rhs=lambda cfg, n, m: ops.proj_scriptP(cfg, n + m) @ matpow(adjoint(ops.make_U(cfg)), m),
            indices=_over(n=lambda d: range(d), m=lambda d: range(d)),
        ),
        IdentityCheck(
            name="proj_script.periodic_index",
            suite="proj_script",
            paper_ref="Eq. (35)",
            lhs=lambda cfg, n: ops.proj_scriptP(cfg, n + cfg.d),
            rhs=lambda cfg, n: ops.proj_scriptP(cfg, n),
            indices=_over(n=lambda d: range(d)),
        ),
        IdentityCheck(
            name="proj_script.negative_index",
            suite="proj_script",
            paper_ref="Eq. (35)",
            lhs=lambda cfg, n: ops.proj_scriptP(cfg, -n),
            rhs=lambda cfg, n: ops.proj_scriptP(cfg, cfg.d - n),
            indices=_over(n=lambda d: range(d)),
        ),
    ]


def _script_complement_sum(cfg):
    total = _zero(cfg)
    for n in range(cfg.d):
        total = total + ops.proj_scriptR(cfg, n)
    return total


def _conversion_checks():
    return [
        IdentityCheck(
            name="conversions.raiser_from_clock_shift",
            suite="conversions",
            paper_ref="Eq. (33); Eq. (38)",
            lhs=lambda cfg: _rebuilt_raiser(cfg),
            rhs=lambda cfg: ops.make_a_dagger(cfg),
        ),
        IdentityCheck(
            name="conversions.rebuilt_raiser_nilpotent",
            suite="conversions",
            paper_ref="Eq. (40)",
            lhs=lambda cfg: matpow(_rebuilt_raiser(cfg), cfg.d),
            rhs=_zero,
        ),
        IdentityCheck(
            name="conversions.raiser_power_formula",
            suite="conversions",
            paper_ref="Eq. (39); Eqs. (41)-(43)",
            lhs=lambda cfg, l: matpow(_rebuilt_raiser(cfg), l + 1),
            rhs=lambda cfg, l: matpow(ops.make_U(cfg), l + 1)
            @ (_eye(cfg) - _script_sum(cfg, 1, l + 1)),
            indices=_over(l=lambda d: range(d)),
        ),
        IdentityCheck(
            name="conversions.lower_raiser_product",
            suite="conversions",
            paper_ref="Eq. (44)",
            lhs=lambda cfg: adjoint(_rebuilt_raiser(cfg)) @ _rebuilt_raiser(cfg),
            rhs=lambda cfg: _eye(cfg) - ops.proj_scriptP(cfg, 1),
        ),
        IdentityCheck(
            name="conversions.boundary_defect_from_projection",
            suite="conversions",
            paper_ref="Eq. (47)",
            lhs=lambda cfg: _eye(cfg)
            - matpow(ops.make_a_dagger(cfg), cfg.d - 1)
            @ matpow(ops.make_a(cfg), cfg.d - 1),
            rhs=lambda cfg: _eye(cfg) - ops.proj_scriptP(cfg, 1),
        ),
        IdentityCheck(
            name="conversions.edge_raiser_power",
            suite="conversions",
            paper_ref="Eq. (45)",
            lhs=lambda cfg: _edge_powers(cfg)[0],
            rhs=lambda cfg: matpow(ops.make_a_dagger(cfg), cfg.d - 1),
        ),
        IdentityCheck(
            name="conversions.edge_lower_power",
            suite="conversions",
            paper_ref="Eq. (46)",
            lhs=lambda cfg: _edge_powers(cfg)[1],
            rhs=lambda cfg: matpow(ops.make_a(cfg), cfg.d - 1),
        ),
        IdentityCheck(
            name="conversions.edge_powers_adjoint_pair",
            suite="conversions",
            paper_ref="Eq. (46)",
            lhs=lambda cfg: adjoint(_edge_powers(cfg)[0]),
            rhs=lambda cfg: _edge_powers(cfg)[1],
        ),
        IdentityCheck(
            name="conversions.shift_is_cyclic_permutation",
            suite="conversions",
            paper_ref="Eq. (12)",
            lhs=lambda cfg: ops.make_U(cfg),
            rhs=_cyclic_shift_direct,
        ),
        IdentityCheck(
            name="conversions.clock_is_phase_diagonal",
            suite="conversions",
            paper_ref="Eq. (13)",
            lhs=lambda cfg: ops.make_V(cfg),
            rhs=_clock_direct,
        ),
        IdentityCheck(
            name="conversions.round_trip_shift",
            suite="conversions",
            paper_ref="Eq. (12); Eq. (33)",
            lhs=lambda cfg: _rebuilt_raiser(cfg)
            + matpow(adjoint(_rebuilt_raiser(cfg)), cfg.d - 1),
            rhs=lambda cfg: ops.make_U(cfg),
        ),
    ]


def _matrix_unit_checks():
    shift_unit, clock_unit = ops.matrix_unit_shift, ops.matrix_unit_schwinger
    return [
        IdentityCheck(
            name="matrix_units.shift_rep_is_standard",
            suite="matrix_units",
            paper_ref="Eq. (49); A-30",
            lhs=lambda cfg, m, n: shift_unit(cfg, m, n),
            rhs=lambda cfg, m, n: _standard_unit(cfg, m, n),
            indices=_unit_pairs,
        ),
        IdentityCheck(
            name="matrix_units.clock_rep_is_standard",
            suite="matrix_units",
            paper_ref="Eq. (50); A-33",
            lhs=lambda cfg, m, n: clock_unit(cfg, m, n),
            rhs=lambda cfg, m, n: _standard_unit(cfg, m, n),
            indices=_unit_pairs,
        ),
        IdentityCheck(
            name="matrix_units.representations_agree",
            suite="matrix_units",
            paper_ref="Eqs. (49)-(50)",
            lhs=lambda cfg, m, n: shift_unit(cfg, m, n),
            rhs=lambda cfg, m, n: clock_unit(cfg, m, n),
            indices=_unit_pairs,
        ),
        IdentityCheck(
            name="matrix_units.product_rule_shift_rep",
            suite="matrix_units",
            paper_ref="Eq. (48); A-29; A-31",
            lhs=lambda cfg, i, j, k, l: shift_unit(cfg, i, j) @ shift_unit(cfg, k, l),
            rhs=lambda cfg, i, j, k, l: shift_unit(cfg, i, l) if j == k else _zero(cfg),
            indices=_unit_quadruples,
        ),
        IdentityCheck(
            name="matrix_units.product_rule_clock_rep",
            suite="matrix_units",
            paper_ref="Eq. (48); A-33",
            lhs=lambda cfg, i, j, k, l: clock_unit(cfg, i, j) @ clock_unit(cfg, k, l),
            rhs=lambda cfg, i, j, k, l: clock_unit(cfg, i, l) if j == k else _zero(cfg),
            indices=_unit_quadruples,
        ),
        IdentityCheck(
            name="matrix_units.adjoint_rule_shift_rep",
            suite="matrix_units",
            paper_ref="Eq. (48); A-32",
            lhs=lambda cfg, m, n: adjoint(shift_unit(cfg, m, n)),
            rhs=lambda cfg, m, n: shift_unit(cfg, n, m),
            indices=_unit_pairs,
        ),
        IdentityCheck(
            name="matrix_units.adjoint_rule_clock_rep",
            suite="matrix_units",
            paper_ref="Eq. (48)",
            lhs=lambda cfg, m, n: adjoint(clock_unit(cfg, m, n)),
            rhs=lambda cfg, m, n: clock_unit(cfg, n, m),
            indices=_unit_pairs,
        ),
    ]


def _commutator_checks():
    return [
        IdentityCheck(
            name="commutator.position_raiser_commutator",
            suite="commutator",
            paper_ref="Eq. (61)",
            lhs=lambda cfg: ops.position_X(cfg) @ ops.make_a_dagger(cfg)
            - ops.make_a_dagger(cfg) @ ops.position_X(cfg),
            rhs=lambda cfg: scalar_mul(
                cfg.scalar_mode.coerce(cfg.beta), ops.make_a_dagger(cfg)
            ),
        ),
        IdentityCheck(
            name="commutator.position_is_site_diagonal",
            suite="commutator",
            paper_ref="Eqs. (10)-(11)",
            lhs=lambda cfg: ops.position_X(cfg),
            rhs=_position_direct,
        ),
    ]


def _conjugated_flat(pcfg, generator):
    perm = tensor.flatten_permutation(pcfg)
    return perm @ generator(tensor.flat_config(pcfg)) @ adjoint(perm)


def _tensor_checks():
    dim = lambda p: p.dim
    eye = lambda p: identity(p.dim, p.scalar_mode)
    nil = lambda p: zeros(p.dim, p.scalar_mode)
    return [
        IdentityCheck(
            name="tensor.raiser_matches_flattened_chain",
            suite="tensor",
            paper_ref="Eqs. (51)-(52)",
            lhs=lambda p, d1, d2: _conjugated_flat(p, ops.make_a_dagger),
            rhs=lambda p, d1, d2: tensor.coproduct_a_dagger(p),
            indices=_pair_index,
            record_indices=True,
        ),
        IdentityCheck(
            name="tensor.shift_matches_flattened_cycle",
            suite="tensor",
            paper_ref="Eq. (53)",
            lhs=lambda p, d1, d2: _conjugated_flat(p, ops.make_U),
            rhs=lambda p, d1, d2: tensor.coproduct_U(p),
            indices=_pair_index,
            record_indices=True,
        ),
        IdentityCheck(
            name="tensor.raiser_follows_grid_arrows",
            suite="tensor",
            paper_ref="Eq. (52)",
            lhs=lambda p, d1, d2: tensor.coproduct_a_dagger(p),
            rhs=lambda p, d1, d2: tensor.arrow_raiser(p),
            indices=_pair_index,
            record_indices=True,
        ),
        IdentityCheck(
            name="tensor.raiser_nilpotent",
            suite="tensor",
            paper_ref="Eq. (52); Eq. (2)",
            lhs=lambda p, d1, d2: matpow(tensor.coproduct_a_dagger(p), dim(p)),
            rhs=lambda p, d1, d2: nil(p),
            indices=_pair_index,
            record_indices=True,
        ),
        IdentityCheck(
            name="tensor.raiser_boundary_defects",
            suite="tensor",
            paper_ref="Eqs. (2)-(3); Eq. (52)",
            lhs=lambda p, d1, d2: adjoint(tensor.coproduct_a_dagger(p))
            @ tensor.coproduct_a_dagger(p),
            rhs=lambda p, d1, d2: eye(p)
            - matpow(tensor.coproduct_a_dagger(p), dim(p) - 1)
            @ matpow(adjoint(tensor.coproduct_a_dagger(p)), dim(p) - 1),
            indices=_pair_index,
            record_indices=True,
        ),
        IdentityCheck(
            name="tensor.shift_order_D",
            suite="tensor",
            paper_ref="Eq. (53); Eq. (1)",
            lhs=lambda p, d1, d2: matpow(tensor.coproduct_U(p), dim(p)),
            rhs=lambda p, d1, d2: eye(p),
            indices=_pair_index,
            record_indices=True,
        ),
        IdentityCheck(
            name="tensor.shift_unitary",
            suite="tensor",
            paper_ref="Eq. (53); Eq. (1)",
            lhs=lambda p, d1, d2: tensor.coproduct_U(p) @ adjoint(tensor.coproduct_U(p)),
            rhs=lambda p, d1, d2: eye(p),
            indices=_pair_index,
            record_indices=True,
        ),
        IdentityCheck(
            name="tensor.wrap_term_difference",
            suite="tensor",
            paper_ref="Eqs. (52)-(53)",
            lhs=lambda p, d1, d2: tensor.coproduct_U(p) - tensor.coproduct_a_dagger(p),
            rhs=lambda p, d1, d2: tensor.corner_wrap_term(p),
            indices=_pair_index,
            record_indices=True,
        ),
        IdentityCheck(
            name="tensor.flatten_map_unitary",
            suite="tensor",
            paper_ref="Eq. (51)",
            lhs=lambda p, d1, d2: tensor.flatten_permutation(p)
            @ adjoint(tensor.flatten_permutation(p)),
            rhs=lambda p, d1, d2: eye(p),
            indices=_pair_index,
            record_indices=True,
        ),
    ]


def catalogue(mutation: str | None = None) -> list[IdentityCheck]:
    """The full ordered catalogue of identity checks, partitioned into suites.

    A mutation name (see ``MUTATIONS``) swaps a deliberately corrupted
    constructor into the affected suite, for negative-control runs.
    """
    if mutation is None:
        clock = ops.make_V
    else:
        if mutation not in MUTATIONS:
            raise ValueError(
                f"unknown mutation {mutation!r}; known: {sorted(MUTATIONS)}"
            )
        clock = MUTATIONS[mutation].clock
    return (
        _schwinger_checks(clock)
        + _almost_unitary_checks()
        + _proj_PR_checks()
        + _proj_script_checks()
        + _conversion_checks()
        + _matrix_unit_checks()
        + _commutator_checks()
        + _tensor_checks()
    )


def _config_dim(cfg) -> int:
    return cfg.d if isinstance(cfg, LatticeConfig) else cfg.dim


def run_check(check: IdentityCheck, cfg, seed: int = 0) -> CheckResult:
    """Evaluate one check over all its quantified indices.

    Identity failure is data, not an exception; only configuration errors
    propagate.
    """
    start = time.perf_counter()
    exact = cfg.mode == ops.EXACT
    combos = check.indices(cfg, seed)
    passed = True
    worst = 0.0
    worst_idx = None
    for idx in combos:
        lhs = check.lhs(cfg, **idx)
        rhs = check.rhs(cfg, **idx)
        if exact:
            if not equals(lhs, rhs):
                residual = max_residual(lhs, rhs)
                passed = False
                if residual >= worst:
                    worst, worst_idx = residual, idx
        else:
            residual = max_residual(lhs, rhs)
            if residual > worst:
                worst = residual
                worst_idx = idx
            if residual > cfg.tolerance:
                passed = False
    if not passed:
        reported = worst_idx if worst_idx else None
    elif check.record_indices:
        reported = combos[0]
    else:
        reported = None
    return CheckResult(
        name=check.name,
        paper_ref=check.paper_ref,
        suite=check.suite,
        d=_config_dim(cfg),
        mode=cfg.mode,
        indices=reported,
        passed=passed,
        max_residual=0.0 if exact and passed else worst,
        elapsed=time.perf_counter() - start,
    )


def run_suite(suite: str, cfg, seed: int = 0, mutation: str | None = None) -> SuiteReport:
    """Run every check of one suite; result order follows the catalogue."""
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; known: {list(SUITES)}")
    if suite == "tensor" and not isinstance(cfg, ProductLatticeConfig):
        raise ValueError("the tensor suite requires a ProductLatticeConfig")
    if suite != "tensor" and not isinstance(cfg, LatticeConfig):
        raise ValueError(f"suite {suite!r} requires a LatticeConfig")
    results = tuple(
        run_check(check, cfg, seed=seed)
        for check in catalogue(mutation)
        if check.suite == suite
    )
    return SuiteReport(
        suite=suite,
        d=_config_dim(cfg),
        mode=cfg.mode,
        tolerance=cfg.tolerance if cfg.mode == ops.FLOAT else None,
        results=results,
    )


def run_all(cfg: LatticeConfig, seed: int = 0, mutation: str | None = None) -> list[SuiteReport]:
    """Run every lattice suite (everything except tensor) for one configuration."""
    return [run_suite(suite, cfg, seed=seed, mutation=mutation) for suite in LATTICE_SUITES]
