"""Z/3 zestings of SU(3)_3.

Enumerates the nine associative zestings, keeps the braided ones and prints
the zested twists.  The a = 1 family has new fusion rules: the unit no longer
appears in X1^3.
"""

from zesting.cyclic import CyclicContext, braided_admissible, enumerate_assoc, enumerate_braided, enumerate_ribbon
from zesting.engine import zested_fusion, zested_modular_data
from zesting.gallery import builtin


def cube(az, x):
    out = {}
    for y, n in zested_fusion(az, x, x).items():
        for w, m in zested_fusion(az, y, x).items():
            out[w] = out.get(w, 0) + n * m
    return out


def main():
    base = builtin("su3_3").category
    ctx = CyclicContext.build(base)
    print(f"q = {ctx.q} turns, zeta = {ctx.zeta} turns")
    spectra = set()
    for a, b, az in enumerate_assoc(ctx):
        if not braided_admissible(ctx, a, b):
            continue
        print(f"(a, b) = ({a}, {b}); unit in X1^3: {0 in cube(az, 'X1')}")
        for bz in enumerate_braided(ctx, a, b):
            rz = enumerate_ribbon(ctx, bz)[0]
            _, T = zested_modular_data(rz)
            spectra.add(tuple(sorted(map(str, T))))
            print(f"  s = {bz.params['s']}: T = [{', '.join(map(str, T))}]")
    print(f"{len(spectra)} distinct twist spectra")


if __name__ == "__main__":
    main()
