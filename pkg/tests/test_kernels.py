import os
import random
import subprocess
import sys

import pytest
from hypothesis import given

from properindex import _kernels, available_backends, default_backend
from properindex import generators as gen
from properindex.coloring import EdgeColoring, verify_3_proper
from properindex.structure import hamiltonian_path
from strategies import graphs

needs_fast = pytest.mark.skipif("cython" not in available_backends(),
                                reason="compiled kernels not built")


def test_python_backend_always_available():
    assert "python" in available_backends()
    assert default_backend() in available_backends()


def test_env_forces_fallback():
    code = "import properindex; print(properindex.default_backend())"
    env = dict(os.environ, PROPERINDEX_KERNEL="python")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True)
    assert out.stdout.strip() == "python"


def test_unknown_backend():
    with pytest.raises(ValueError):
        _kernels.kernel_graph(3, [(0, 1)], "fortran")


@needs_fast
@given(graphs(min_n=1, max_n=10))
def test_hamiltonian_path_backends_agree(g):
    a = hamiltonian_path(g, backend="python")
    b = hamiltonian_path(g, backend="cython")
    assert (a is None) == (b is None)


@needs_fast
def test_palette_search_backends_agree():
    rng = random.Random(1)
    for _ in range(30):
        g = gen.random_connected(rng.randint(3, 7), rng, p=0.5)
        for t in (2, 3):
            res = [_kernels.kernel_graph(g.n, g.edges, b, max_colors=t).search_palette(t, True)
                   for b in ("python", "cython")]
            assert res[0] == res[1]


@needs_fast
def test_wide_palettes_fall_back():
    g = gen.complete(13)  # 78 edges, more colors than the compiled kernel supports
    c = EdgeColoring(g, list(range(1, g.m + 1)))
    assert verify_3_proper(c, "cython").ok


@pytest.mark.slow
def test_fallback_reproduces_tightness_refutation():
    from properindex.oracle import px3_lower_bound_refute
    g = gen.shared_vertex_cliques(3, [4, 4, 4])
    fast = px3_lower_bound_refute(g, 2)
    slow = px3_lower_bound_refute(g, 2, backend="python")
    assert slow == fast and slow.proved_ge and slow.checked == 2 ** 17
