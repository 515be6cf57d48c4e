"""Survey the best known length bounds for each alphabet size and exponent.

Run: python3 demos/bounds_overview.py
"""

from crucialis import bounds, construct_family


def main():
    print("Minimal crucial length: lower bound, best construction, exact value.")
    print(f"{'n':>3} {'k':>3} {'lower':>6} {'upper':>6} {'exact':>6}  witness family")
    for k in range(2, 7):
        for n in range(1, 13):
            b = bounds(n, k)
            exact = "-" if b.exact is None else str(b.exact)
            print(
                f"{n:>3} {k:>3} {b.lower:>6} {b.upper:>6} {exact:>6}  {b.upper_family.value}"
            )
        print()

    print("Every upper bound is witnessed by a construction of exactly that length:")
    for n, k in [(6, 3), (4, 2), (5, 4), (8, 5)]:
        b = bounds(n, k)
        w = construct_family(b.upper_family, n, k)
        print(f"  n={n} k={k}: {b.upper_family.value} gives length {len(w)} = upper {b.upper}")

    print("\nSquares (k=2) and cubes (k=3) are settled; for k >= 4 the gap is open:")
    for n in (6, 10):
        for k in (4, 5, 6):
            b = bounds(n, k)
            print(f"  n={n} k={k}: somewhere in [{b.lower}, {b.upper}]")


if __name__ == "__main__":
    main()
