"""Normal forms of the simple curve singularities with their exponent vectors."""


def ade_table():
    rows = []
    for k in range(1, 9):
        rows.append((f"A{k}", f"x^{k + 1} + y^2", [(k + 1, 0), (0, 2)], k))
    for k in range(4, 8):
        rows.append((f"D{k}", f"x^{k - 1} + x*y^2", [(k - 1, 0), (1, 2)], k))
    rows.append(("E6", "x^3 + y^4", [(3, 0), (0, 4)], 6))
    rows.append(("E7", "x^3 + x*y^3", [(3, 0), (1, 3)], 7))
    rows.append(("E8", "x^3 + y^5", [(3, 0), (0, 5)], 8))
    return rows
