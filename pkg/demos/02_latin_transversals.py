"""Latin squares as rainbow-set instances.

A partial transversal of an order-n Latin square is a set of cells, no two
sharing a row, column, or symbol.  Rows become colors, columns one
partition matroid, symbols the other; a rainbow set is then exactly a
partial transversal, and the solver guarantees one of size > n - sqrt(n).

Run: python3 demos/02_latin_transversals.py
"""

from rainbowmat import (bound_floor, brute_force_max, cyclic_latin,
                        latin_to_family, shuffled_latin, solve)


def print_square(ls, marked=()):
    n = ls.n
    for i, row in enumerate(ls.cells):
        cells = []
        for j, sym in enumerate(row):
            mark = "*" if i * n + j in marked else " "
            cells.append(f"{sym}{mark}")
        print("   " + " ".join(cells))


def main():
    print("order 2: the cyclic square famously has no full transversal")
    fam = latin_to_family(cyclic_latin(2))
    opt, _ = brute_force_max(fam)
    print_square(cyclic_latin(2))
    print(f"   brute-force optimum: {opt} (out of n=2)\n")

    for n, seed in [(5, 3), (7, 1)]:
        ls = shuffled_latin(n, seed)
        fam = latin_to_family(ls)
        report = solve(fam)
        marked = {e for _, e in report.rainbow.picks}
        print(f"order {n} (seed {seed}): solver found a transversal of "
              f"size {report.size}, guaranteed floor {bound_floor(n)}")
        print_square(ls, marked)
        if n <= 5:
            opt, _ = brute_force_max(fam)
            print(f"   brute-force optimum for comparison: {opt}")
        print()


if __name__ == "__main__":
    main()
