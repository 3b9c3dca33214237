"""2-local Ising models: energy evaluation, exact ground-state search, QUBO.

The energy of a spin configuration sigma in {-1,+1}^N is
sum_i h_i sigma_i + sum_{i<j} J_ij sigma_i sigma_j, each unordered pair
counted once. Pins, chains, and anti-chains are hard constraints handled by
the solver, not energy terms.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from ..diagnostics import Diagnostic, DiagnosticError
from ..position import SourcePosition, Span

ENERGY_TOLERANCE = 1e-9

_NOWHERE = Span(SourcePosition(1, 1, 0), SourcePosition(1, 1, 0))


def sem_error(code: str, message: str, span: Span | None = None) -> DiagnosticError:
    return DiagnosticError(Diagnostic("error", code, message, span or _NOWHERE))


def _pair(a: str, b: str) -> tuple[str, str]:
    return (a, b) if a <= b else (b, a)


@dataclass
class IsingModel:
    h: dict[str, float] = field(default_factory=dict)
    J: dict[tuple[str, str], float] = field(default_factory=dict)
    pins: dict[str, bool] = field(default_factory=dict)
    chains: set[tuple[str, str]] = field(default_factory=set)
    antichains: set[tuple[str, str]] = field(default_factory=set)
    equivalences: set[tuple[str, str]] = field(default_factory=set)

    def symbols(self) -> list[str]:
        seen = set(self.h) | set(self.pins)
        for a, b in list(self.J) + list(self.chains) + list(self.antichains):
            seen.add(a)
            seen.add(b)
        return sorted(seen)

    def to_json(self) -> str:
        """Deterministic JSON emission: symbol keys sorted, pair lists sorted."""
        obj = {
            "h": {s: self.h[s] for s in sorted(self.h)},
            "J": [[a, b, v] for (a, b), v in sorted(self.J.items())],
            "pins": {s: self.pins[s] for s in sorted(self.pins)},
            "chains": [list(p) for p in sorted(self.chains)],
            "antichains": [list(p) for p in sorted(self.antichains)],
            "equiv": [list(p) for p in sorted(self.equivalences)],
        }
        return json.dumps(obj, separators=(",", ":"))


@dataclass(frozen=True)
class SpinConfiguration:
    assignment: dict[str, int]  # symbol -> -1 or +1

    def spins(self, symbols: list[str]) -> tuple[int, ...]:
        return tuple(self.assignment[s] for s in symbols)


@dataclass
class GroundStateResult:
    min_energy: float
    configurations: list[SpinConfiguration]
    feasible_count: int


@dataclass
class QuboModel:
    """Binary (x in {0,1}) counterpart of an Ising model. Coefficients are kept
    as exact rationals so Ising -> QUBO -> Ising is coefficient-exact."""

    linear: dict[str, Fraction] = field(default_factory=dict)
    quadratic: dict[tuple[str, str], Fraction] = field(default_factory=dict)
    offset: Fraction = Fraction(0)

    def energy(self, assignment: dict[str, int]) -> Fraction:
        total = self.offset
        for s, v in self.linear.items():
            total += v * assignment[s]
        for (a, b), v in self.quadratic.items():
            total += v * assignment[a] * assignment[b]
        return total


def energy(model: IsingModel, config: SpinConfiguration) -> float:
    syms = model.symbols()
    missing = [s for s in syms if s not in config.assignment]
    if missing:
        raise sem_error("SEM310", f"partial configuration: missing {missing[0]!r}")
    total = 0.0
    for s, v in model.h.items():
        total += v * config.assignment[s]
    for (a, b), v in model.J.items():
        total += v * config.assignment[a] * config.assignment[b]
    return total


def brute_force_ground_states(model: IsingModel, max_spins: int = 24) -> GroundStateResult:
    """Enumerate all 2^N configurations, drop those violating a pin, chain, or
    anti-chain, and return the minimum energy with every attaining
    configuration (sorted lexicographically by symbol then spin)."""
    syms = model.symbols()
    n = len(syms)
    if n > max_spins:
        raise sem_error("SEM311", f"{n} spins exceed the limit of {max_spins}")
    if n == 0:
        return GroundStateResult(0.0, [SpinConfiguration({})], 1)

    index = {s: i for i, s in enumerate(syms)}
    h = np.zeros(n)
    for s, v in model.h.items():
        h[index[s]] += v
    pairs = [(index[a], index[b], v) for (a, b), v in model.J.items()]
    pin_cols = [(index[s], 1 if goal else -1) for s, goal in model.pins.items()]
    chain_cols = [(index[a], index[b]) for a, b in model.chains]
    anti_cols = [(index[a], index[b]) for a, b in model.antichains]

    # Bit 0 of the enumeration index is the last symbol and maps 0 -> -1,
    # 1 -> +1, so ascending indices are exactly lexicographic configurations.
    shifts = np.arange(n - 1, -1, -1, dtype=np.int64)
    total = 1 << n
    batch = 1 << min(n, 18)
    best = np.inf
    candidates: list[tuple[float, np.ndarray]] = []
    feasible = 0
    for start in range(0, total, batch):
        count = min(batch, total - start)
        nums = np.arange(start, start + count, dtype=np.int64)
        spins = (((nums[:, None] >> shifts) & 1) * 2 - 1).astype(np.float64)
        mask = np.ones(count, dtype=bool)
        for col, goal in pin_cols:
            mask &= spins[:, col] == goal
        for i, j in chain_cols:
            mask &= spins[:, i] == spins[:, j]
        for i, j in anti_cols:
            mask &= spins[:, i] != spins[:, j]
        feasible += int(mask.sum())
        if not mask.any():
            continue
        sub = spins[mask]
        energies = sub @ h
        for i, j, v in pairs:
            energies += v * sub[:, i] * sub[:, j]
        batch_best = float(energies.min())
        if batch_best < best:
            best = batch_best
            candidates = [(e, row) for e, row in candidates if e <= best + ENERGY_TOLERANCE]
        near = energies <= best + ENERGY_TOLERANCE
        for e, row in zip(energies[near], sub[near]):
            candidates.append((float(e), row))

    if feasible == 0:
        raise sem_error("SEM312", "no configuration satisfies the pins/chains/anti-chains")
    configurations = [
        SpinConfiguration({s: int(row[i]) for i, s in enumerate(syms)})
        for e, row in candidates
        if e <= best + ENERGY_TOLERANCE
    ]
    return GroundStateResult(best, configurations, feasible)


def ising_to_qubo(model: IsingModel) -> QuboModel:
    """Substitute sigma = 2x - 1 exactly (rational arithmetic, no rounding)."""
    qubo = QuboModel()
    for s, v in model.h.items():
        hv = Fraction(v)
        qubo.linear[s] = qubo.linear.get(s, Fraction(0)) + 2 * hv
        qubo.offset -= hv
    for (a, b), v in model.J.items():
        jv = Fraction(v)
        qubo.quadratic[_pair(a, b)] = qubo.quadratic.get(_pair(a, b), Fraction(0)) + 4 * jv
        qubo.linear[a] = qubo.linear.get(a, Fraction(0)) - 2 * jv
        qubo.linear[b] = qubo.linear.get(b, Fraction(0)) - 2 * jv
        qubo.offset += jv
    return qubo


def qubo_to_ising(qubo: QuboModel) -> IsingModel:
    """Inverse substitution x = (sigma + 1) / 2. The residual additive constant
    has no home in IsingModel and is dropped; h and J round-trip exactly."""
    h: dict[str, Fraction] = {}
    J: dict[tuple[str, str], Fraction] = {}
    for s, v in qubo.linear.items():
        h[s] = h.get(s, Fraction(0)) + Fraction(v) / 2
    for (a, b), v in qubo.quadratic.items():
        qv = Fraction(v)
        J[_pair(a, b)] = J.get(_pair(a, b), Fraction(0)) + qv / 4
        h[a] = h.get(a, Fraction(0)) + qv / 4
        h[b] = h.get(b, Fraction(0)) + qv / 4
    model = IsingModel()
    model.h = {s: float(v) for s, v in h.items()}
    model.J = {p: float(v) for p, v in J.items()}
    return model
