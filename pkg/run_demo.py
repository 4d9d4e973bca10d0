#!/usr/bin/env python3
"""
Demo script to showcase plethyx functionality.
"""

import sys
from pathlib import Path

# Add project root to Python path
project_root = Path(__file__).parent
sys.path.insert(0, str(project_root))

from plethyx_core.domino import domino_families, render_domino
from plethyx_core.partitions import Partition
from plethyx_core.plethysm_sign import decompose_h_square, signed_recording_tableaux
from plethyx_core.rsk import Biword, rsk
from plethyx_core.symfunc import generators, schur_expand, split_square
from runners import create_runner


def main():
    """Run plethyx demo."""
    print("=== plethyx Demo ===")
    print("Splitting h_(2,1)^2 into s_2[h_(2,1)] and s_11[h_(2,1)].")

    print("\n1. RSK of a row tuple's biword...")
    w = Biword.from_words([1, 1, 1, 1, 2, 2, 2, 2, 3, 3, 3, 4, 4, 4],
                          [1, 2, 3, 4, 1, 2, 3, 3, 1, 1, 2, 1, 2, 3])
    pair = rsk(w)
    print(f"   P:\n{_indent(pair.p)}")
    print(f"   Q:\n{_indent(pair.q)}")

    lam = Partition.of(2, 1)
    print("\n2. Signed recording tableaux of shape (3,2,1)...")
    for q, sign in signed_recording_tableaux(Partition.of(3, 2, 1), lam):
        print(f"   sign {sign:+d}: {' / '.join(''.join(map(str, row)) for row in q.rows)}")

    print("\n3. Signed Kostka table...")
    with create_runner(1) as runner:
        table = decompose_h_square(lam, runner=runner)
        print(f"   - Runner: {runner.get_info()}")
    for line in table.render().splitlines():
        print(f"   {line}")

    print("\n4. Power-sum oracle...")
    sym, antisym = split_square(generators("h", lam))
    print(f"   - s_2[h_21]  = {_schur_text(schur_expand(sym))}")
    print(f"   - s_11[h_21] = {_schur_text(schur_expand(antisym))}")

    print("\n5. Domino tableaux for h_2^2...")
    for j, d in enumerate(domino_families(2, "h")):
        print(f"   cospin {j}:")
        print(_indent(render_domino(d)))

    print("\n=== Demo completed ===")


def _indent(item) -> str:
    return "\n".join("     " + line for line in str(item).splitlines())


def _schur_text(terms) -> str:
    return " + ".join(f"{c}*s[{nu}]" if c != 1 else f"s[{nu}]" for nu, c in sorted(terms.items(), reverse=True))


if __name__ == "__main__":
    main()
