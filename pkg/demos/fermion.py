"""The eight Z/2 zestings attached to a fermion in C(Z/4, zeta_8^(j^2))."""

from zesting.cohomology import FinAbGroup
from zesting.cyclic import fermionic_z2_zestings
from zesting.cyclotomic import root_of_unity
from zesting.engine import zested_category
from zesting.gallery import pointed


def main():
    base = pointed(FinAbGroup.cyclic(4), lambda a: root_of_unity(8, a[0] ** 2))
    for rz in fermionic_z2_zestings(base, "g2"):
        twists = zested_category(rz).twists
        print(f"s = {rz.params['s']} turns: twists {[str(t) for t in twists]}")


if __name__ == "__main__":
    main()
