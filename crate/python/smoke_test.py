"""Smoke test for the nilaut extension module.

Build first:  cd crates/py && maturin develop --release
Then run:     python python/smoke_test.py
"""

import json

import nilaut
from nilaut import Automorphism, Element


def main():
    x1 = Element.parse("x1", 2)
    x2 = Element.generator(2, 1)
    assert str(x2 * x1) == "x1*x2*[x1,x2]^-1"
    assert str((x1 * x2).inv()) == "x1^-1*x2^-1*[x1,x2]^-1"
    assert str(x1.commutator(x2)) == "[x1,x2]"
    assert (x1 ** 3).abelian == [3, 0]
    assert Element([0, 0], [1]).is_central()

    theta = Automorphism.symmetry(2)
    assert theta.classify() == "SymmetryModIA"
    assert str(theta(x1 * x2)) == "x1^-1*x2^-1"
    assert (theta * theta) == Automorphism.identity(2)
    assert theta.abelianize() == [[-1, 0], [0, -1]]

    tau = Automorphism.conjugation(x2.inv())
    assert tau.is_ia()
    assert str(tau.inner_witness()) == "x2^-1"
    ia = Automorphism.from_json('{"rank":3,"images":["x1*[x2,x3]","x2","x3"]}')
    assert ia.inner_witness() is None

    plus, minus = Automorphism.from_json(
        '{"rank":3,"images":["x1","x2*[x2,x3]*[x1,x2]","x3"]}'
    ).split_ia(0)
    assert plus.commutes_with(minus)

    kind, basis, roles = nilaut.canonicalize([[2, 1], [-3, -2]])
    assert kind == (0, 0, 1), kind
    assert len(basis) == 2 and roles[0].startswith("swapped")

    left, diag, right = nilaut.smith([[2, 4], [6, 8]])
    assert [diag[0][0], diag[1][1]] == [2, 4]

    twisted = Automorphism.from_json('{"rank":2,"images":["x1^-1*[x1,x2]^2","x2^-1"]}')
    basis = [Element.parse("x1", 2), Element.parse("x2", 2)]
    assert nilaut.is_attached(twisted, basis)
    assert str(nilaut.decode(twisted, basis, 0)) == "x1*[x1,x2]^-1"

    report = json.loads(nilaut.run_verify(rank_min=2, rank_max=3, trials=5, seed=1))
    assert report["passed"], report

    try:
        Element.parse("x3", 2)
    except ValueError:
        pass
    else:
        raise AssertionError("out-of-rank generator accepted")

    print("smoke test passed")


if __name__ == "__main__":
    main()
