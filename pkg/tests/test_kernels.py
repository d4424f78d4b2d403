import os
import subprocess
import sys

import pytest
from hypothesis import given
from hypothesis import strategies as st

from freiman3k3 import _pycore, kernels

masks = st.integers(0, (1 << 40) - 1)

needs_core = pytest.mark.skipif(kernels.BACKEND != "cython", reason="compiled core not built")


@given(masks, masks)
def test_sumset_against_pair_loop(a, b):
    want = 0
    for i in _pycore.bits(a):
        for j in _pycore.bits(b):
            want |= 1 << (i + j)
    assert kernels.sumset_mask(a, b) == want


@given(masks)
def test_longest_run(m):
    best = (0, 0)
    run_start, run = 0, 0
    for i in range(m.bit_length() + 1):
        if m >> i & 1:
            if run == 0:
                run_start = i
            run += 1
            if run > best[1]:
                best = (run_start, run)
        else:
            run = 0
    assert kernels.longest_run(m) == best


def test_large_operands_fall_back():
    a = (1 << 70) | 1
    assert kernels.sumset_mask(a, a) == (1 << 140) | (1 << 70) | 1


@needs_core
@given(st.integers(0, (1 << 32) - 1), st.integers(0, (1 << 32) - 1))
def test_backends_agree_sumset(a, b):
    from freiman3k3 import _core
    assert _core.sumset_mask(a, b) == _pycore.sumset_mask(a, b)
    assert _core.longest_run(a) == _pycore.longest_run(a)


@needs_core
@pytest.mark.parametrize("n", [1, 2, 5, 9, 12, 14])
def test_backends_agree_scan(n):
    from freiman3k3 import _core
    top = 1 << (n - 1)
    for lo, hi in [(0, top), (0, top // 2 or 1), (top // 3, top)]:
        assert _core.scan_span(n, lo, hi) == _pycore.scan_span(n, lo, hi)


@needs_core
def test_core_rejects_wide_operands():
    from freiman3k3 import _core
    with pytest.raises(OverflowError):
        _core.sumset_mask(1 << 40, 1)


def test_pure_fallback_selected_by_environment():
    env = dict(os.environ, FREIMAN3K3_PURE="1")
    out = subprocess.run([sys.executable, "-c", "import freiman3k3; print(freiman3k3.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"


def test_coprime_filter():
    assert kernels.coprime_filter(12) == _pycore.coprime_filter(12)
    assert len(kernels.coprime_filter(12)) == 2
