"""Tabulate the gadget-size recurrence against measured construction sizes.

Usage: python scripts/growth_table.py [max_d]
"""

import sys

from extenders import partition_extender, size_estimate


def main():
    max_d = int(sys.argv[1]) if len(sys.argv) > 1 else 3
    print(f"{'d':>2} {'k':>3} {'codim':>5} {'g':>8} {'bound':>12} "
          f"{'faces':>8} {'added':>8}")
    for d in range(0, max_d + 1):
        for k in range(d, -1, -1):
            codim = d - k
            exact, bound = size_estimate(d, codim)
            marked = partition_extender(d, k)
            faces = len(marked.complex.faces)
            added = faces - 2 ** (d + 1)
            print(f"{d:>2} {k:>3} {codim:>5} {exact:>8} {bound:>12} "
                  f"{faces:>8} {added:>8}")


if __name__ == "__main__":
    main()
