#!/usr/bin/env python3
"""Smoke test for the charp_closure extension module.

Builds the cdylib with cargo if needed, loads it, and exercises the main
types and operations end to end. Run from anywhere:

    python3 python/smoke_test.py
"""
import shutil
import subprocess
import sys
import tempfile
from pathlib import Path

REPO = Path(__file__).resolve().parent.parent


def load_module():
    so = REPO / "target" / "release" / "libcharp_closure.so"
    if not so.exists():
        print("building charp-closure-py ...")
        subprocess.run(
            ["cargo", "build", "-p", "charp-closure-py", "--release"],
            cwd=REPO,
            check=True,
        )
    stage = Path(tempfile.mkdtemp(prefix="charp_closure_"))
    shutil.copy2(so, stage / "charp_closure.so")
    sys.path.insert(0, str(stage))
    import charp_closure

    return charp_closure


def main():
    ccl = load_module()

    # the three-plane ring and its test ideal
    R = ccl.Ring(3, ["x", "y", "z", "w"], ["x*y", "y*z", "z*w"])
    assert R.prime == 3
    tau = R.test_ideal()
    assert tau.equals(R.ideal(["y", "z", "x*w"])), str(tau)
    primes = R.minimal_primes()
    assert len(primes) == 3

    # polynomial arithmetic and Frobenius
    f = R.poly("x-w")
    g = R.poly("x-y-z")
    assert str(f * g) == str(R.poly("x^2-x*y-x*z-x*w+y*w+z*w")), str(f * g)
    assert f.frobenius(1) == R.poly("x^3-w^3")

    # ideal operations: the bracket membership and its failure one level up
    I = R.ideal([f, g])
    SR = R.ideal(["x*y", "y*z", "z*w"])
    inside = I.bracket(3).plus(SR)
    assert inside.member(R.poly("x*w") ** 3)
    outside = I.bracket(9).plus(SR)
    assert not outside.member(R.poly("x*w") ** 7)

    # tight closure and the colon route
    star = R.tight_closure(I)
    assert star.member(R.poly("y"))
    pti, stabilized, eliminated = R.parameter_test_ideal([f, g], 4)
    assert pti.equals(tau), str(pti)
    assert stabilized
    assert len(eliminated) == 2  # the drifting pure powers

    # local cohomology: tau kills eta but not its Frobenius image
    sop = R.sop([f, g])
    eta = sop.make_class(R.poly("x*w") ** 2, 3)
    assert not eta.is_zero()
    assert eta.annihilated_by(tau)
    feta = eta.frobenius()
    assert feta.level == 9
    assert not feta.annihilated_by(tau)

    # bounded membership never claims MEMBER
    verdict = R.tc_membership_bounded("y", I, "x*w+y+z", 2)
    assert verdict.startswith(("NON_MEMBER", "UNKNOWN_UP_TO_BOUND")), verdict

    # the end-to-end reproduction
    records = ccl.reproduce(2)
    assert all(verdict for (_, _, verdict, _) in records)
    assert len(records) >= 12

    # the command language round trip
    lines = ccl.run_script(
        'ring R = Fp(3)[x,y,z,w] / (x*y, y*z, z*w);\n'
        'ideal T = testideal(R);\n'
        'print T;\n'
    )
    assert "(y, z, x*w)" in lines, lines

    print("smoke test passed:", len(records), "audit records at p=2")


if __name__ == "__main__":
    main()
