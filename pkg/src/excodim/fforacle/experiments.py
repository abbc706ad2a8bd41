"""Codimension experiments over small finite fields.

Membership probability of a closed locus decays like q^(-codim), so the
negated log_q hit rate of an exhaustive or sampled run estimates the
codimension and can confront the closed-form predictions.  Sampling is
counter-based (one stream per fixed-size chunk), so results depend only on
the seed and configuration, never on the worker count.
"""

from __future__ import annotations

import math
import time
from concurrent.futures import ThreadPoolExecutor
from functools import lru_cache
from dataclasses import dataclass

import numpy as np

from ..applications import singular_line_codim
from ..errors import BudgetError, InvariantError, ParameterError
from ..strata import span_stratum_exact
from .fields import Field
from .hilbert import projective_dim_hilbert
from .linalg import matrix_rank
from .points import projective_dim_points
from .polynomials import MultiPoly, monomial_index, monomials, n_monomials

DEFAULT_SEED = 271828
CHUNK = 4096
MAX_EXHAUSTIVE = 2**24
SLOW_EXHAUSTIVE_LIMIT = 4096  # per-sample dimension detection is expensive
MARKED_SET_BUDGET = 5_000_000


@dataclass(frozen=True)
class ExperimentResult:
    """Outcome of one oracle run; est_codim is None when nothing hit."""

    kind: str
    q: int
    r: int
    mode: str
    trials: int
    hits: int
    seed: int
    est_codim: float | None
    predicted_codim: int
    status: str
    runtime_s: float
    degrees: tuple[int, ...] | None = None
    ell: int | None = None
    a: int | None = None
    warnings: tuple[str, ...] = ()

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "q": self.q,
            "r": self.r,
            "degrees": list(self.degrees) if self.degrees is not None else None,
            "ell": self.ell,
            "a": self.a,
            "mode": self.mode,
            "trials": self.trials,
            "hits": self.hits,
            "seed": self.seed,
            "est_codim": self.est_codim,
            "predicted_codim": self.predicted_codim,
            "status": self.status,
            "runtime_s": self.runtime_s,
            "warnings": list(self.warnings),
        }

    def key(self) -> tuple:
        """Everything except the wall-clock runtime, for determinism checks."""
        return (
            self.kind, self.q, self.r, self.degrees, self.ell, self.a,
            self.mode, self.trials, self.hits, self.seed,
            self.est_codim, self.predicted_codim, self.status, self.warnings,
        )


def _chunk_rng(seed: int, chunk_index: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(key=[seed, chunk_index]))


def _run_chunks(fn, chunk_args, workers: int):
    if workers <= 1:
        return [fn(arg) for arg in chunk_args]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, chunk_args))


def _estimate(hits: int, trials: int, q: int) -> tuple[float | None, str]:
    if hits == 0:
        return None, "inconclusive"
    return (math.log(trials) - math.log(hits)) / math.log(q), "ok"


def common_zero_dim(generators, field: Field, r: int) -> int:
    """Projective dimension of the common vanishing locus.

    Linear systems are solved exactly by rank (the quotient is a polynomial
    ring); everything else goes through the Hilbert-function detector.
    """
    gens = [g for g in generators if not g.is_zero]
    if not gens:
        return r
    if all(g.d == 1 for g in gens):
        rows = np.stack([g.coeffs for g in gens])
        return r - matrix_rank(field, rows)
    return projective_dim_hilbert(gens, field=field, r=r)


def _crosscheck_sample(generators, field: Field, r: int, dim: int, m_max: int):
    """Dual-detector agreement: a conclusive positive point count must be
    matched by the rank detector, or the run dies with a diagnostic."""
    hil = projective_dim_hilbert(generators, field=field, r=r)
    if hil != dim:
        raise InvariantError(
            f"fast dimension path gave {dim} but the rank detector gave {hil}"
        )
    try:
        probe = projective_dim_points(generators, field=field, r=r, m_max=m_max)
    except BudgetError:
        return
    if probe.positive_dimensional and hil < 1:
        raise InvariantError(
            f"point count {probe.counts} exceeds cutoff {probe.cutoff} "
            f"but the rank detector reports dimension {hil}"
        )


def excess_experiment(r: int, degrees, a: int, field: Field, mode: str = "auto",
                      trials: int | None = None, seed: int = DEFAULT_SEED,
                      workers: int = 1, m_max: int = 2,
                      crosscheck: int = 48) -> ExperimentResult:
    """Estimate the codimension of the locus of tuples whose common vanishing
    locus has dimension at least r - k + a, and attach the predicted value."""
    start = time.perf_counter()
    degrees = tuple(degrees)
    k = len(degrees)
    if a < 1:
        raise ParameterError(f"need a >= 1, got {a}")
    threshold = r - k + a
    if threshold < 0:
        raise ParameterError(f"need r - k + a >= 0, got {threshold}")
    predicted = span_stratum_exact(r, a, tuple(sorted(degrees)))

    q = field.q
    dims = [n_monomials(r, d) for d in degrees]
    total = sum(dims)
    space = q**total

    if mode == "auto":
        feasible = space <= MAX_EXHAUSTIVE and (
            all(d == 1 for d in degrees) or space <= SLOW_EXHAUSTIVE_LIMIT
        )
        mode = "exhaustive" if feasible else "sampled"
    if mode == "exhaustive":
        if space > MAX_EXHAUSTIVE:
            raise BudgetError(
                f"state space {q}^{total} exceeds the exhaustive cap {MAX_EXHAUSTIVE}"
            )
        if space > SLOW_EXHAUSTIVE_LIMIT and not all(d == 1 for d in degrees):
            raise BudgetError(
                f"exhaustive run over {q}^{total} tuples with per-sample rank "
                f"detection is over budget; use sampled mode"
            )
        trials = space
    elif mode == "sampled":
        if trials is None:
            trials = 20_000
    else:
        raise ParameterError(f"unknown mode {mode!r}")

    def decode_tuple(coeff_row) -> list[MultiPoly]:
        gens = []
        pos = 0
        for d, n in zip(degrees, dims):
            gens.append(MultiPoly(field, r, d, coeff_row[pos:pos + n]))
            pos += n
        return gens

    check_every = max(1, trials // max(crosscheck, 1)) if crosscheck else 0

    def handle(sample_index: int, coeff_row) -> int:
        gens = decode_tuple(coeff_row)
        dim = common_zero_dim(gens, field, r)
        if crosscheck and sample_index % check_every == 0 and threshold == 1:
            _crosscheck_sample(gens, field, r, dim, m_max)
        return 1 if dim >= threshold else 0

    if mode == "exhaustive":
        def run_range(bounds) -> int:
            lo, hi = bounds
            hits = 0
            coeff_row = np.zeros(total, dtype=np.uint16)
            for idx in range(lo, hi):
                v = idx
                for i in range(total):
                    v, c = divmod(v, q)
                    coeff_row[i] = c
                hits += handle(idx, coeff_row)
            return hits

        bounds = [(lo, min(lo + CHUNK, space)) for lo in range(0, space, CHUNK)]
        hits = sum(_run_chunks(run_range, bounds, workers))
    else:
        def run_chunk(chunk_index: int) -> int:
            lo = chunk_index * CHUNK
            n = min(CHUNK, trials - lo)
            rng = _chunk_rng(seed, chunk_index)
            rows = rng.integers(0, q, size=(n, total), dtype=np.uint16)
            return sum(handle(lo + i, rows[i]) for i in range(n))

        n_chunks = (trials + CHUNK - 1) // CHUNK
        hits = sum(_run_chunks(run_chunk, range(n_chunks), workers))

    est, status = _estimate(hits, trials, q)
    return ExperimentResult(
        kind="excess", q=q, r=r, degrees=degrees, a=a, mode=mode,
        trials=trials, hits=hits, seed=seed, est_codim=est,
        predicted_codim=predicted, status=status,
        runtime_s=time.perf_counter() - start,
    )


@dataclass(frozen=True)
class SingularMembership:
    sing_dim: int


def singular_membership(F: MultiPoly, crosscheck: bool = False,
                        m_max: int = 2) -> SingularMembership:
    """Projective dimension of the scheme cut out by F and its formal
    partial derivatives (the singular locus, scheme-theoretically)."""
    if F.d < 2:
        raise ParameterError(f"need deg F >= 2, got {F.d}")
    field, r = F.field, F.r
    gens = [F] + [F.partial(i) for i in range(r + 1)]
    gens = [g for g in gens if not g.is_zero]
    dim = r if not gens else projective_dim_hilbert(gens, field=field, r=r)
    if crosscheck and gens:
        try:
            probe = projective_dim_points(gens, field=field, r=r, m_max=m_max)
        except BudgetError:
            probe = None
        if probe is not None and probe.positive_dimensional and dim < 1:
            raise InvariantError(
                f"point count {probe.counts} exceeds cutoff {probe.cutoff} "
                f"but the rank detector reports dimension {dim}"
            )
    return SingularMembership(sing_dim=dim)


def _all_coeff_rows(q: int, n: int) -> np.ndarray:
    """All q^n coefficient vectors, little-endian in the row index."""
    idx = np.arange(q**n, dtype=np.int64)
    out = np.zeros((q**n, n), dtype=np.uint16)
    for j in range(n):
        out[:, j] = (idx // (q**j)) % q
    return out


def _scalar_representatives(field: Field, r: int, d: int):
    """One representative per scalar class of nonzero forms: the first
    nonzero coefficient is normalized to 1."""
    one = field.one
    for coeffs in _all_coeff_rows(field.q, n_monomials(r, d))[1:]:
        first = int(coeffs[np.flatnonzero(coeffs)[0]])
        if first == one:
            yield MultiPoly(field, r, d, coeffs)


@lru_cache(maxsize=8)
def repeated_factor_keys(field: Field, r: int, ell: int,
                         budget: int = MARKED_SET_BUDGET) -> frozenset[bytes]:
    """Coefficient keys of every degree-ell form divisible by the square of a
    positive-degree form (the zero form included).

    In the plane this is exactly the positive-dimensional-singular-locus set:
    the partials of H^2*G are all divisible by H, so V(H) is singular on
    V(H^2*G); conversely a squarefree plane curve has a finite singular
    locus, and over a finite (perfect) field squarefree is a geometric
    property.
    """
    q = field.q
    cost = 0
    for h in range(1, ell // 2 + 1):
        reps = (q ** n_monomials(r, h) - 1) // (q - 1)
        cost += reps * (q ** n_monomials(r, ell - 2 * h))
        cost += q ** n_monomials(r, h)
    if cost > budget:
        raise BudgetError(f"repeated-factor enumeration needs ~{cost} steps, over budget")

    marked: set[bytes] = set()
    n_ell = n_monomials(r, ell)
    index = monomial_index(r, ell)
    for h in range(1, ell // 2 + 1):
        dg = ell - 2 * h
        ng = n_monomials(r, dg)
        all_g = _all_coeff_rows(q, ng)
        for H in _scalar_representatives(field, r, h):
            H2 = H * H
            if field.e == 1:
                # multiplication by a fixed form is linear: batch it as a
                # residue matmul (prime-field codes are residues)
                mat = np.zeros((ng, n_ell), dtype=np.int64)
                for j, em in enumerate(monomials(r, dg)):
                    for exp, code in H2.support():
                        col = index[tuple(a + b for a, b in zip(em, exp))]
                        mat[j, col] = code
                rows = (all_g.astype(np.int64) @ mat % field.p).astype(np.uint16)
                marked.update(row.tobytes() for row in rows)
            else:
                for coeffs in all_g:
                    G = MultiPoly(field, r, dg, coeffs)
                    marked.add((H2 * G).coeffs.tobytes())
    return frozenset(marked)


def singular_experiment(r: int, ell: int, field: Field, mode: str = "auto",
                        trials: int | None = None, seed: int = DEFAULT_SEED,
                        workers: int = 1, verify_samples: int = 24) -> ExperimentResult:
    """Estimate the codimension of the degree-ell forms whose singular locus
    is positive-dimensional, against the singular-line prediction."""
    start = time.perf_counter()
    if field.p != 2:
        raise ParameterError("the singular experiment runs over characteristic 2")
    if r < 2 or ell < 3:
        raise ParameterError(f"need r >= 2 and ell >= 3, got r={r}, ell={ell}")
    predicted = singular_line_codim(r, ell)
    q = field.q
    n = n_monomials(r, ell)
    space = q**n

    if r == 2:
        marked = repeated_factor_keys(field, r, ell)
        if mode == "auto":
            mode = "exhaustive" if space <= MAX_EXHAUSTIVE else "sampled"
        if mode == "exhaustive":
            if space > MAX_EXHAUSTIVE:
                raise BudgetError(f"state space {q}^{n} exceeds the exhaustive cap")
            trials = space
            hits = len(marked)
        elif mode == "sampled":
            if trials is None:
                trials = 1_000_000

            def run_chunk(chunk_index: int) -> int:
                lo = chunk_index * CHUNK
                m = min(CHUNK, trials - lo)
                rng = _chunk_rng(seed, chunk_index)
                rows = rng.integers(0, q, size=(m, n), dtype=np.uint16)
                return sum(1 for i in range(m) if rows[i].tobytes() in marked)

            n_chunks = (trials + CHUNK - 1) // CHUNK
            hits = sum(_run_chunks(run_chunk, range(n_chunks), workers))
        else:
            raise ParameterError(f"unknown mode {mode!r}")

        _verify_marked(field, r, ell, marked, seed, verify_samples)
    else:
        # no squarefree shortcut beyond the plane: per-sample rank detection
        if mode == "auto":
            mode = "sampled"
        if mode == "exhaustive":
            if space > SLOW_EXHAUSTIVE_LIMIT:
                raise BudgetError(
                    f"exhaustive singular run over {q}^{n} forms is over budget"
                )
            trials = space
            hits = 0
            for code in range(space):
                F = MultiPoly.decode(field, r, ell, code)
                if singular_membership(F).sing_dim >= 1:
                    hits += 1
        elif mode == "sampled":
            if trials is None:
                trials = 2_000

            def run_chunk(chunk_index: int) -> int:
                lo = chunk_index * CHUNK
                m = min(CHUNK, trials - lo)
                rng = _chunk_rng(seed, chunk_index)
                rows = rng.integers(0, q, size=(m, n), dtype=np.uint16)
                return sum(
                    1 for i in range(m)
                    if singular_membership(MultiPoly(field, r, ell, rows[i])).sing_dim >= 1
                )

            n_chunks = (trials + CHUNK - 1) // CHUNK
            hits = sum(_run_chunks(run_chunk, range(n_chunks), workers))
        else:
            raise ParameterError(f"unknown mode {mode!r}")

    est, status = _estimate(hits, trials, q)
    return ExperimentResult(
        kind="singular", q=q, r=r, ell=ell, mode=mode,
        trials=trials, hits=hits, seed=seed, est_codim=est,
        predicted_codim=predicted, status=status,
        runtime_s=time.perf_counter() - start,
    )


def _verify_marked(field: Field, r: int, ell: int, marked: frozenset[bytes],
                   seed: int, verify_samples: int):
    """Spot-check the repeated-factor set against the rank detector."""
    if verify_samples <= 0:
        return
    n = n_monomials(r, ell)
    picks: list[bytes] = []
    inside = sorted(marked)
    step = max(1, len(inside) // max(verify_samples // 2, 1))
    picks.extend(inside[::step][: verify_samples // 2])
    rng = _chunk_rng(seed, 2**31)
    rows = rng.integers(0, field.q, size=(verify_samples - len(picks), n), dtype=np.uint16)
    picks.extend(row.tobytes() for row in rows)
    for key in picks:
        coeffs = np.frombuffer(key, dtype=np.uint16)
        F = MultiPoly(field, r, ell, coeffs)
        if F.is_zero:
            continue
        expected = key in marked
        got = singular_membership(F).sing_dim >= 1
        if expected != got:
            raise InvariantError(
                f"repeated-factor set and rank detector disagree on {key!r}"
            )


@dataclass(frozen=True)
class PoonenSample:
    F: MultiPoly
    base: MultiPoly
    fudge: tuple[MultiPoly, ...]


def poonen_combine(base: MultiPoly, fudge) -> MultiPoly:
    """Recombine a base form with squared fudge factors so that the partial
    derivatives decouple (characteristic 2 only).

    Odd degree: F = G + sum_i X_i * G_i^2, so dF/dX_i = dG/dX_i + G_i^2.
    Even degree: F = G + X_0*X_1*G_0^2 + X_0 * sum_{i>=1} X_i*G_i^2, so
    dF/dX_i = dG/dX_i + X_0*G_i^2 for i >= 2, with the G_0/G_1 terms joined
    through X_0*X_1.
    """
    field, r, ell = base.field, base.r, base.d
    if field.p != 2:
        raise ParameterError("fudge-factor decoupling needs characteristic 2")
    fudge = tuple(fudge)
    if len(fudge) != r + 1:
        raise ParameterError(f"need r + 1 = {r + 1} fudge factors, got {len(fudge)}")
    if ell % 2 == 1:
        dg = (ell - 1) // 2
    else:
        dg = ell // 2 - 1
    if dg < 1:
        raise ParameterError(f"degree {ell} leaves no room for fudge factors")
    for G in fudge:
        if G.d != dg or G.field is not field or G.r != r:
            raise ParameterError(f"fudge factors must be degree {dg} forms on the same space")

    X = [MultiPoly.variable(field, r, i) for i in range(r + 1)]
    F = base
    if ell % 2 == 1:
        for i in range(r + 1):
            F = F + X[i] * fudge[i].square()
    else:
        F = F + X[0] * X[1] * fudge[0].square()
        for i in range(1, r + 1):
            F = F + X[0] * X[i] * fudge[i].square()
    return F


def poonen_sample(r: int, ell: int, field: Field, seed: int = DEFAULT_SEED) -> PoonenSample:
    """Draw (G, G_0..G_r) uniformly and recombine; the resulting F is itself
    uniform because G -> F is an affine shift for fixed fudge factors."""
    if ell % 2 == 1:
        dg = (ell - 1) // 2
    else:
        dg = ell // 2 - 1
    rng = _chunk_rng(seed, 0)
    base = MultiPoly.random(field, r, ell, rng)
    fudge = tuple(MultiPoly.random(field, r, dg, rng) for _ in range(r + 1))
    return PoonenSample(F=poonen_combine(base, fudge), base=base, fudge=fudge)


def restriction_codim(r: int, d: int, b: int, field: Field | None = None,
                      seed: int = DEFAULT_SEED) -> int:
    """Rank of the restriction map from degree-d forms on projective r-space
    to a b-plane, computed by explicit linear algebra; a genuine b-plane
    always gives C(d+b, b)."""
    from .fields import gf
    from .polynomials import monomials as mons

    if field is None:
        field = gf(2)
    if not 0 <= b <= r:
        raise ParameterError(f"need 0 <= b <= r, got b={b}, r={r}")
    if d < 1:
        raise ParameterError(f"need d >= 1, got {d}")

    # seeded full-rank parameterization matrix: columns span the plane
    M = None
    for attempt in range(64):
        rng = _chunk_rng(seed, attempt)
        cand = rng.integers(0, field.q, size=(r + 1, b + 1), dtype=np.uint16)
        if matrix_rank(field, cand.T) == b + 1:
            M = cand
            break
    if M is None:  # pragma: no cover - virtually impossible
        raise InvariantError("could not find a full-rank plane parameterization")

    lines = []
    for i in range(r + 1):
        coeffs = np.zeros(n_monomials(b, 1), dtype=np.uint16)
        for j in range(b + 1):
            coeffs[j] = M[i, j]
        lines.append(MultiPoly(field, b, 1, coeffs))

    one_poly = MultiPoly(field, b, 0, np.array([field.one], dtype=np.uint16))
    images: dict[tuple[int, ...], MultiPoly] = {}

    def image(exp: tuple[int, ...]) -> MultiPoly:
        if sum(exp) == 0:
            return one_poly
        if exp not in images:
            i = max(j for j, e in enumerate(exp) if e > 0)
            prev = tuple(e - 1 if j == i else e for j, e in enumerate(exp))
            images[exp] = image(prev) * lines[i]
        return images[exp]

    rows = np.stack([image(exp).coeffs for exp in mons(r, d)])
    return matrix_rank(field, rows)
