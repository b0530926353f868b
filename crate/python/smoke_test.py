"""Smoke test for the Python bindings.

Build and install first:

    maturin build --release -o dist && pip install dist/antiatom-*.whl
    python python/smoke_test.py
"""

import json

import antiatom


def main():
    s = antiatom.NumericalSemigroup([9, 10, 11, 12, 13])
    assert s.frobenius == 17
    assert s.type == 4
    assert s.void == [1, 2, 3, 14, 15, 16]
    assert s.pseudo_frobenius == [14, 15, 16, 17]
    assert str(s) == "<9,10,11,12,13>"
    assert antiatom.NumericalSemigroup.parse("<9,10,11,12,13>") == s

    sol = s.solve()
    assert sol.pa == 6
    assert sol.sizes == [31, 31, 32, 32, 38, 38]
    assert sol.base_size == 32 and sol.min_size == 31
    assert not sol.lambda_minimal
    assert sol.witness_partition().parts == [9, 8, 2, 2, 2, 2, 2, 2, 2]
    assert json.loads(sol.to_json())["witness_ideal"] == [1, 14, 16]
    assert s.solve(cross_check=True).sizes == sol.sizes

    t = antiatom.NumericalSet.parse("{0,5,7,9,->}")
    lam = t.partition()
    assert lam.parts == [3, 2, 1, 1, 1, 1]
    assert lam.hook_lengths()[0] == [8, 3, 1]
    assert lam.hook_set() == t.atom_monoid().gaps
    assert t.dual().partition() == lam.conjugate()
    assert lam.numerical_set() == t

    p = antiatom.Partition([9, 8, 2, 2, 2, 2, 2, 2, 2])
    assert p.size == 31
    assert p.numerical_set().atom_monoid() == s

    assert len(antiatom.semigroups_by_genus(12)) == 592
    assert sum(len(antiatom.semigroups_by_frobenius(f)) for f in range(1, 17)) == 784
    total, failing = antiatom.scan("genus", 12, only=12)
    assert total == 592 and failing == [s]

    try:
        antiatom.NumericalSemigroup([4, 6])
    except ValueError:
        pass
    else:
        raise AssertionError("gcd 2 generators should be rejected")

    print("python smoke test passed")


if __name__ == "__main__":
    main()
