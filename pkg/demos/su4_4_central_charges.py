"""Central charges of the Z/4 zestings of SU(4)_4.

Only dimensions and twists are tabulated for SU(4)_4, which is enough for
Gauss sums.  The central charge depends on (a, b) but not on s.
"""

from zesting.category import central_charge
from zesting.cyclic import CyclicContext, braided_admissible, enumerate_assoc, enumerate_braided, enumerate_ribbon
from zesting.engine import zested_category, zested_dimension
from zesting.gallery import builtin


def main():
    base = builtin("su4_4").category
    ctx = CyclicContext.build(base)
    for a, b, _ in enumerate_assoc(ctx):
        if not braided_admissible(ctx, a, b):
            continue
        charges = set()
        for bz in enumerate_braided(ctx, a, b):
            for rz in enumerate_ribbon(ctx, bz):
                if all(complex(zested_dimension(rz, x)).real > 0 for x in range(base.rank)):
                    charges.add(str(central_charge(zested_category(rz))))
        print(f"(a, b) = ({a}, {b}): central charge {', '.join(sorted(charges))}")


if __name__ == "__main__":
    main()
