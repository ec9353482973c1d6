"""Parity of the interpreted and jitted kernel tables on matched inputs.

Every test takes the `backend` fixture (both tables when numba imports), or
compares the two tables head to head; sizes are kept small because the pure
table is the slow side.
"""

import os
import random
import subprocess
import sys

import numpy as np
import pytest

from periwords import kernels

PY = kernels.python_kernels()
SEED = 90407


def _arr(w: str) -> np.ndarray:
    return np.frombuffer(w.encode("ascii"), np.uint8)


def _rand_word(rng, lo=1, hi=16) -> str:
    return "".join(rng.choice("ab") for _ in range(rng.randint(lo, hi)))


def test_kernel_names_resolve(backend):
    for name in kernels.KERNEL_NAMES:
        assert callable(getattr(backend, name))


def test_active_table_matches_flag():
    assert kernels.BACKEND in ("python", "numba")
    expect = kernels.numba_kernels() if kernels.BACKEND == "numba" else PY
    assert kernels.active is expect


@pytest.mark.skipif(not kernels.HAVE_NUMBA, reason="no jitted table to compare")
def test_profile_parity_random_words():
    rng = random.Random(SEED)
    nb = kernels.numba_kernels()
    for _ in range(250):
        w = _arr(_rand_word(rng))
        assert list(PY.local_periods_finite(w)) == list(nb.local_periods_finite(w))


@pytest.mark.skipif(not kernels.HAVE_NUMBA, reason="no jitted table to compare")
def test_border_and_period_parity():
    rng = random.Random(SEED + 1)
    nb = kernels.numba_kernels()
    for _ in range(250):
        w = _arr(_rand_word(rng))
        assert int(PY.period_of(w)) == int(nb.period_of(w))
        assert int(PY.shortest_border_length(w)) == int(nb.shortest_border_length(w))
        assert list(PY.border_table(w)) == list(nb.border_table(w))
        assert int(PY.least_rotation_index(w)) == int(nb.least_rotation_index(w))


@pytest.mark.skipif(not kernels.HAVE_NUMBA, reason="no jitted table to compare")
def test_stream_parity_on_morphic_prefixes():
    from periwords.words import fibonacci_source, thue_morse_source

    nb = kernels.numba_kernels()
    for src in (fibonacci_source(), thue_morse_source()):
        buf = src.ranks(80 + 400)
        assert list(PY.local_periods_stream(buf, 80, 400)) == list(
            nb.local_periods_stream(buf, 80, 400)
        )


@pytest.mark.skipif(not kernels.HAVE_NUMBA, reason="no jitted table to compare")
def test_search_kernel_parity():
    from periwords.words import fibonacci_source

    nb = kernels.numba_kernels()
    hay = _arr(fibonacci_source().prefix(2000))
    for z in ("a", "ab", "aab", "abaab", "babba"):
        needle = _arr(z)
        assert list(PY.occurrence_list(needle, hay)) == list(nb.occurrence_list(needle, hay))
        assert int(PY.max_power(needle, hay)) == int(nb.max_power(needle, hay))
    assert int(PY.max_run_exponent(hay, 64)) == int(nb.max_run_exponent(hay, 64))


def test_sweep_counts(backend):
    # sum over n<=8 of n*2^n position checks; 2^11 - 2 nonempty words up to length 10
    checks, mismatches, cft_fails = (int(v) for v in backend.oracle_sweep(8, 2)[:3])
    assert checks == sum(n * 2 ** n for n in range(1, 9))
    assert mismatches == 0 and cft_fails == 0
    words, failures = (int(v) for v in backend.cft_sweep(10, 2)[:2])
    assert words == 2 ** 11 - 2
    assert failures == 0


@pytest.mark.skipif(not kernels.HAVE_NUMBA, reason="no jitted table to compare")
def test_sweep_parity():
    nb = kernels.numba_kernels()
    assert list(PY.oracle_sweep(7, 2)) == list(nb.oracle_sweep(7, 2))
    assert list(PY.cft_sweep(8, 2)) == list(nb.cft_sweep(8, 2))
    assert list(PY.cft_sweep(6, 3)) == list(nb.cft_sweep(6, 3))


def _probe_backend(env_value: str | None) -> subprocess.CompletedProcess:
    env = dict(os.environ)
    env.pop(kernels.ENV_FLAG, None)
    if env_value is not None:
        env[kernels.ENV_FLAG] = env_value
    return subprocess.run(
        [sys.executable, "-c", "from periwords import kernels; print(kernels.BACKEND)"],
        capture_output=True,
        text=True,
        env=env,
    )


def test_env_flag_forces_python_backend():
    proc = _probe_backend("python")
    assert proc.returncode == 0, proc.stderr
    assert proc.stdout.strip() == "python"


def test_env_flag_rejects_unknown_value():
    proc = _probe_backend("cuda")
    assert proc.returncode != 0
    assert "PERIWORDS_BACKEND" in proc.stderr
