import os
from pathlib import Path

import pytest

_CACHE = Path(__file__).resolve().parent.parent / ".cache"
_CACHE.mkdir(exist_ok=True)
# the unlabeled-graph atlas takes ~15s to build; cache it across runs
os.environ.setdefault("UNIGRAPH_ATLAS_CACHE", str(_CACHE / "atlas.pickle"))


@pytest.fixture(scope="session")
def atlas8():
    from unigraph import oracle

    oracle.graphs_with_n(8)
    return oracle
