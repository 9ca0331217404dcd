"""A gallery of deliberately broken instances.

Each mutation targets one piece of structure; the checkers isolate the
damage to a small, stable set of axiom identifiers.  This is the negative
half of the regression corpus.

Run:  python demos/mutation_gallery.py
"""

from __future__ import annotations

from ldlab import Scope
from ldlab.instances import (gen_group_hopf, gen_lukasiewicz,
                             mutate_drop_swap_phi, mutate_identity_antipode,
                             mutate_scale_nu, mutate_thin_star_entry,
                             mutate_zero_nu)
from ldlab.suite import parse_axioms, run_suite


def show(label: str, inst, axioms, scope) -> None:
    rep = run_suite(inst, parse_axioms(axioms), scope)
    failing = sorted(set(rep.failing()))
    print(f"{label}:")
    print(f"  overall: {'pass' if rep.overall else 'FAIL'}")
    if failing:
        print(f"  failing axioms: {', '.join(failing)}")
    print()


def main() -> None:
    sc = Scope(objects=(1, 2))

    l3 = gen_lukasiewicz(3)
    show("3-chain with star(1,2) overwritten to 2",
         mutate_thin_star_entry(l3, 1, 2, 2), "kernel", Scope())

    gh22 = gen_group_hopf(2, 2)
    gh33 = gen_group_hopf(3, 3)

    show("group algebra with the lifting transformation zeroed",
         mutate_zero_nu(gh22), "nu,em,star-comonad", sc)

    show("group algebra with the lifting transformation doubled",
         mutate_scale_nu(gh33, 2), "nu,em", sc)

    show("group algebra F_3[Z/3] with the antipode forced to the identity",
         mutate_identity_antipode(gh33), "em,star-comonad", sc)

    show("group algebra with the factor swap dropped from the lax map",
         mutate_drop_swap_phi(gh22), "monoidal,L1,L2,em", sc)

    show("unmutated group algebra, same checks, for contrast",
         gh22, "monoidal,L1,L2,nu,em,star-comonad", sc)


if __name__ == "__main__":
    main()
