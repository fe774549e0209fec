import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from cliquereconf import kernels  # noqa: E402

BACKENDS = ["python"] + (["cython"] if kernels._ckernels is not None else [])


@pytest.fixture(params=BACKENDS)
def backend(request, monkeypatch):
    """Run the test once per available kernel backend."""
    if request.param == "python":
        monkeypatch.setattr(kernels, "_ckernels", None)
    return request.param
