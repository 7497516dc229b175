"""Tour of the four matroid classes and their oracle operations.

Run: python3 demos/01_matroid_oracles.py
"""

from rainbowmat import Matroid


def show(title, matroid, sample):
    print(f"\n== {title} ==")
    print(f"ground size {matroid.ground_size}, "
          f"full rank {matroid.rank(range(matroid.ground_size))}")
    print(f"independent({sorted(sample)})? {matroid.independent(sample)}")
    basis = matroid.basis_of(range(matroid.ground_size))
    print(f"greedy basis: {sorted(basis)}")
    for x in range(matroid.ground_size):
        if x not in basis and matroid.spans(basis, x):
            support = matroid.circuit_support(basis, x)
            print(f"adding {x} to the basis closes a circuit through "
                  f"{sorted(support)}")
            break


def main():
    show("uniform: any 2 of 5 elements", Matroid.uniform(2, 5), {0, 3, 4})

    # partition: blocks {0,1,2} capacity 1 and {3,4} capacity 2
    show("partition: one per color class",
         Matroid.partition([[0, 1, 2], [3, 4]], [1, 2], 5), {0, 1})

    # graphic: a square with one diagonal; independent = forest
    square = Matroid.graphic(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])
    show("graphic: forests of a braced square", square, {0, 1, 4})

    # linear over GF(5): columns of a 2x4 matrix
    show("linear: column spaces over GF(5)",
         Matroid.linear(5, [[1, 0], [0, 1], [1, 1], [2, 2]]), {2, 3})

    # augment and min_removal, the two workhorses of the solver
    print("\n== exchange operations on the braced square ==")
    print(f"augment({{4}}, basis) adds {sorted(square.augment({4}, {0, 1, 2}))}")
    removed = square.min_removal({0, 1, 2}, {3, 4})
    print(f"min_removal(tree, {{3, 4}}) drops {sorted(removed)} "
          f"to stay acyclic")


if __name__ == "__main__":
    main()
