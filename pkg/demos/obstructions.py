"""Z/2 zesting of SU(4)_4 and the Mueger centers of zested SU(4)_2."""

from zesting.cohomology import FinAbGroup
from zesting.cyclic import CyclicContext, enumerate_braided
from zesting.engine import ObstructionError, associative_zestings, partial_obstructions, solve_braided, zested_mueger_center
from zesting.gallery import builtin


def main():
    su44 = builtin("su4_4").category
    A = FinAbGroup.cyclic(2)
    proj = lambda u: (u[0] % 2,)
    for label in ("g", "g2"):
        lam = lambda x, y, label=label: label if x[0] + y[0] >= 2 else "1"
        print(f"lambda2(1,1) = {label}")
        print(partial_obstructions(su44, A, lam, proj).render())
        found = 0
        for az in associative_zestings(su44, A, lam, proj):
            try:
                found += len(solve_braided(az, j=None))
            except ObstructionError:
                pass
        print(f"  braided zestings found: {found}")

    su42 = builtin("su4_2").category
    ctx = CyclicContext.build(su42)
    for b in (1, 3):
        res = zested_mueger_center(enumerate_braided(ctx, 1, b)[0])
        print(f"SU(4)_2 (1, {b}): transparent {res.names(su42)} via {res.route}")


if __name__ == "__main__":
    main()
