"""Smoke test for the pyhyptree extension.

Build first:
    cargo build -p hyptree-python --features extension-module
then run from the repository root:
    python python/smoke_test.py
"""

import json
import pathlib
import shutil
import sys
import tempfile

ROOT = pathlib.Path(__file__).resolve().parents[1]


def load():
    built = ROOT / "target" / "debug" / "libpyhyptree.so"
    if not built.exists():
        sys.exit(f"missing {built}; build the extension first")
    tmp = pathlib.Path(tempfile.mkdtemp())
    shutil.copy(built, tmp / "pyhyptree.so")
    sys.path.insert(0, str(tmp))
    import pyhyptree

    return pyhyptree


def main():
    ht = load()

    cube = ht.InformationSystem.from_csv("element,f1,f2\n00,0,0\n01,0,1\n10,1,0\n11,1,1\n")
    assert cube.attributes == ["f1", "f2"] and len(cube) == 4
    assert sorted(cube.solution_set()) == ["00", "01", "10", "11"]
    for model in ht.MODELS:
        got = ht.min_depth(cube, model, extract=True)
        assert got.depth == 2, (model, got)
        assert got.dot.startswith("digraph tree {")
        assert ht.oracle_min_depth(cube, model, 3) == 2

    u7 = ht.InformationSystem.canonical("u7", 7)
    profile = [value for _, value, _ in ht.shannon(u7, "m1", 7)]
    assert profile == [1, 2, 2, 3, 3, 3, 3], profile

    halving = ht.strategy(u7, "halving", r=2)
    assert halving.model == "m4" and halving.depth <= halving.bound
    for kind in ["sequential", "ksystem", "proper-only"]:
        s = ht.strategy(ht.InformationSystem.canonical("u6", 4), kind)
        assert s.depth <= s.bound, (kind, s.depth, s.bound)

    dim, witness = ht.independence_dimension(cube)
    assert dim == 2 and witness == ["f1", "f2"]
    assert ht.k_level(cube) == 2

    report = json.loads(ht.classify_canonical("u3", 3))
    assert report["independence_dimension"] == 1
    assert report["r_i_reduced"]["witness"] == ["p1=0", "p2=0", "p3=0", "l3=0"]
    assert all(ok for _, ok, _ in ht.lemma_witnesses("u4", 4))

    try:
        ht.InformationSystem.from_csv("element,f1\na,2\n")
    except ValueError:
        pass
    else:
        raise AssertionError("bad table accepted")

    print("pyhyptree smoke test ok")


if __name__ == "__main__":
    main()
