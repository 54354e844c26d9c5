"""Replay the tangent-plane process on x0*x1^2 + x1*x3^2 + x2^3 and print the representation."""
from pfaffcubic import ProjPoint, parse_poly, represent
from pfaffcubic.multipoly import format_poly
from pfaffcubic.pointfactory import extend_to_frame

CANDIDATES = [[1, 1, 0, 0], [0, 0, 1, 1], [5, 0, -1, 1], [40, 2, -2, 2]]


def main():
    F = parse_poly("x0*x1^2 + x1*x3^2 + x2^3")
    log = []
    pts = extend_to_frame(F, ProjPoint([1, 0, 0, 0]), injected=CANDIDATES, log=log)
    for entry in log:
        print(f"step {entry['step']}: y = {entry['candidate']} -> {entry['reason']} {entry.get('point', '')}")
    rep = represent(F, pts)
    print("frame:", [p.to_strings() for p in pts])
    print("constant:", rep.constant)
    for i, row in enumerate(rep.matrix.entries):
        for j in range(i + 1, len(row)):
            if not row[j].is_zero():
                print(f"  m[{i + 1}][{j + 1}] = {format_poly(row[j].to_poly())}")


if __name__ == "__main__":
    main()
