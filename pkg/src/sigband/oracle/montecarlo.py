"""
몬테카를로 오라클: 복합 포아송 반례와 표본 추출기가 있는 계열의 경험적 J

표본은 mc_chunk 개씩 나눈 청크 단위로 만들고, 청크 i 의 난수열은
Philox 카운터 기반 생성기에 키 (seed, i) 를 주어 얻습니다. 청크별 적중 수는
정수로 청크 순서대로 더하므로 워커 수와 실행 순서에 관계없이 같은 결과가 나옵니다.
"""
import math
import os
from concurrent.futures import ThreadPoolExecutor
from typing import Callable

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from ..catalog import CompoundPoissonUniform, DistSpec, Geometric, PerturbedPoisson, Poisson
from ..catalog.lattice import poisson_cutoff
from ..catalog.mixtures import POISSON_RATE
from ..coverage import band, integer_range
from ..errors import DomainError, UnsupportedOperationError
from ..logging import get_logger

logger = get_logger("sigband.oracle.montecarlo")

MIN_SAMPLES = 10_000
DEFAULT_CHUNK = 65536
# 양측 99% 정규 분위수 z_{0.995}
Z_99 = 2.5758293035489004
SEED_LIMIT = 2 ** 64


class McEstimate(BaseModel):
    """몬테카를로 포함 확률 추정"""
    model_config = ConfigDict(frozen=True)

    estimate: float = Field(ge=0.0, le=1.0)
    stderr: float = Field(ge=0.0)
    n_samples: int = Field(gt=0)
    seed: int = Field(ge=0, lt=SEED_LIMIT)
    hits: int = Field(ge=0)

    @property
    def upper_99(self) -> float:
        """양측 99% 신뢰구간의 위 끝 (z = Φ⁻¹(0.995), 단측으로는 99.5%)"""
        return self.estimate + Z_99 * self.stderr

    @property
    def lower_99(self) -> float:
        return self.estimate - Z_99 * self.stderr


def chunk_rng(seed: int, index: int) -> np.random.Generator:
    """키 (seed, index) 의 Philox 생성기"""
    key = np.array([seed, index], dtype=np.uint64)
    return np.random.Generator(np.random.Philox(key=key))


def chunk_sizes(n_samples: int, chunk: int) -> list[int]:
    full, rest = divmod(n_samples, chunk)
    return [chunk] * full + ([rest] if rest else [])


def poisson_cdf_table(lam: float) -> np.ndarray:
    """역변환 추출용 누적 질량 표 F(0), F(1), ..."""
    ks = np.arange(poisson_cutoff(lam) + 1, dtype=float)
    return np.cumsum(np.exp(Poisson(lam=lam).log_pmf(ks)))


def sample_poisson(rng: np.random.Generator, table: np.ndarray, size: int) -> np.ndarray:
    """CDF 역변환: N = #{k : F(k) <= u}"""
    u = rng.random(size)
    counts = np.searchsorted(table, u, side="right")
    return np.minimum(counts, len(table) - 1)


def _check_run(n_samples: int, seed: int) -> None:
    if n_samples < MIN_SAMPLES:
        raise DomainError(f"n_samples must be at least {MIN_SAMPLES}, got {n_samples}")
    if not 0 <= seed < SEED_LIMIT:
        raise DomainError(f"seed must be an unsigned 64-bit integer, got {seed}")


def _run_chunks(
    count_hits: Callable[[np.random.Generator, int], int],
    n_samples: int,
    seed: int,
    workers: int | None,
    chunk: int,
) -> McEstimate:
    _check_run(n_samples, seed)
    sizes = chunk_sizes(n_samples, chunk)
    workers = workers or os.cpu_count() or 1
    logger.debug(f"MC: {n_samples} samples, {len(sizes)} chunks of {chunk}, {workers} workers, seed={seed}")

    def task(index: int) -> int:
        return int(count_hits(chunk_rng(seed, index), sizes[index]))

    if workers == 1 or len(sizes) == 1:
        hits = [task(i) for i in range(len(sizes))]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            hits = list(pool.map(task, range(len(sizes))))

    total = sum(hits)
    estimate = total / n_samples
    stderr = math.sqrt(estimate * (1.0 - estimate) / n_samples)
    return McEstimate(estimate=estimate, stderr=stderr, n_samples=n_samples, seed=seed, hits=total)


def _compound_hits(n: int, lo: float, hi: float, table: np.ndarray):
    jump_lo, jump_hi = 1.0 - 1.0 / n, 1.0 + 1.0 / n

    def count(rng: np.random.Generator, size: int) -> int:
        counts = sample_poisson(rng, table, size)
        jumps = rng.uniform(jump_lo, jump_hi, size=int(counts.sum()))
        owner = np.repeat(np.arange(size), counts)
        totals = np.bincount(owner, weights=jumps, minlength=size)
        return np.count_nonzero((totals >= lo) & (totals <= hi))

    return count


def j_mc_compound_poisson(
    n: int,
    n_samples: int,
    seed: int,
    workers: int | None = None,
    chunk: int = DEFAULT_CHUNK,
) -> McEstimate:
    """
    Y = U_1 + ... + U_N (N ~ Poisson(3), U_i ~ Uniform[1-1/n, 1+1/n]) 의
    P{|Y - 3| <= √(3 + 1/n²)} 추정.
    """
    dist = CompoundPoissonUniform(n=n)
    b = band(dist)
    return _run_chunks(
        _compound_hits(n, b.lo, b.hi, poisson_cdf_table(POISSON_RATE)),
        n_samples, seed, workers, chunk,
    )


def _lattice_counter(sampler, first: int, last: int):
    def count(rng: np.random.Generator, size: int) -> int:
        ks = sampler(rng, size)
        return np.count_nonzero((ks >= first) & (ks <= last))
    return count


def j_mc_generic(
    dist: DistSpec,
    n_samples: int,
    seed: int,
    workers: int | None = None,
    chunk: int = DEFAULT_CHUNK,
) -> McEstimate:
    """
    표본 추출기가 있는 계열의 일반 구간 포함 확률 추정.

    지원: Poisson, Geometric, PerturbedPoisson, CompoundPoissonUniform

    Raises:
        UnsupportedOperationError: 추출기가 없는 계열
    """
    if isinstance(dist, CompoundPoissonUniform):
        return j_mc_compound_poisson(dist.n, n_samples, seed, workers, chunk)

    b = band(dist)
    if isinstance(dist, Poisson):
        table = poisson_cdf_table(dist.lam)
        first, last = integer_range(b)
        count = _lattice_counter(lambda rng, size: sample_poisson(rng, table, size), first, last)
    elif isinstance(dist, Geometric):
        p = dist.p

        def sample_geometric(rng: np.random.Generator, size: int) -> np.ndarray:
            if p == 1:
                return np.zeros(size)
            # P{K >= k} = (1-p)^k, u in (0, 1]
            u = 1.0 - rng.random(size)
            return np.floor(np.log(u) / math.log1p(-p))

        first, last = integer_range(b)
        count = _lattice_counter(sample_geometric, first, last)
    elif isinstance(dist, PerturbedPoisson):
        table = poisson_cdf_table(POISSON_RATE)
        eps = dist.eps

        def count(rng: np.random.Generator, size: int) -> int:
            x = sample_poisson(rng, table, size) + eps * rng.standard_normal(size)
            return np.count_nonzero((x >= b.lo) & (x <= b.hi))
    else:
        raise UnsupportedOperationError(f"no Monte-Carlo sampler for {dist.family}")

    return _run_chunks(count, n_samples, seed, workers, chunk)
