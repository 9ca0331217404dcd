"""Walk through the 3-element chain instance.

Builds the chain with its two truncated-sum tensors and order-reversal
negation, runs every applicable checker, rebuilds the second tensor from
the negations alone, and classifies the interior operators by how much
comonad structure each one carries.

Run:  python demos/chain_walkthrough.py
"""

from __future__ import annotations

from ldlab import Scope
from ldlab.comonads import check_L1, check_L2, check_nu
from ldlab.em import check_em_compat
from ldlab.instances import enumerate_interior_comonads, gen_lukasiewicz
from ldlab.lindist import lindist_from_star, star_from_lindist
from ldlab.suite import run_suite


def main() -> None:
    inst = gen_lukasiewicz(3)
    scope = Scope()

    print("== full checker suite on the 3-chain ==")
    rep = run_suite(inst, None, scope)
    print(rep.summary())

    print()
    print("== rebuilding the second tensor from the negations ==")
    sa, _ = star_from_lindist(inst.bundle, inst.neg, scope)
    bundle2, _, cert = lindist_from_star(sa, scope)
    print("translation notes:")
    for note in cert.notes:
        print("  -", note)
    print("derived vs native par table (rows a, cols b):")
    for a in range(3):
        row = []
        for b in range(3):
            d, n = bundle2.par.obj(a, b), inst.bundle.par.obj(a, b)
            row.append(f"{d}{'=' if d == n else '!'}{n}")
        print("  ", "  ".join(row))

    print()
    print("== interior operators as comonads ==")
    for entry in enumerate_interior_comonads(inst):
        tags = ["comonad"]
        cm = entry["comonad"]
        if entry["has_phi"] and entry["has_psi"]:
            tags.append("monoidal")
            if check_L1(inst.bundle, cm, scope).overall and \
                    check_L2(inst.bundle, cm, scope).overall:
                tags.append("distribution squares")
            if entry["has_nu"] and \
                    check_nu(cm, inst.neg, entry["lift"], scope).overall:
                tags.append("lifts the negation")
                if check_em_compat(inst.bundle, inst.neg, cm,
                                   entry["lift"], scope).overall:
                    tags.append("full evaluation compatibility")
        print(f"  g = {entry['g']}: {', '.join(tags)}")


if __name__ == "__main__":
    main()
