"""Decompose the four-pair relation in Q^3 and print the full report."""

from relkit.decompose import decompose
from relkit.linalg import unit, zero_vector
from relkit.relation import LinearRelation
from relkit.report import format_text


def main():
    e = lambda i: unit(i, 3)
    z = zero_vector(3)
    A = LinearRelation.from_pairs(3, [(z, e(0)), (e(0), e(1)), (e(1), z), (e(0), e(2))])
    print(format_text(decompose(A)), end="")


if __name__ == "__main__":
    main()
