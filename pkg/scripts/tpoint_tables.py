"""Print T-point status along the point families of two test surfaces."""
from pfaffcubic import ProjPoint, is_T_point, parse_poly


def show(title, F, points):
    print(title)
    for p in points:
        print(f"  {p.to_strings()}  T-point: {is_T_point(F, p)}")


def main():
    ruled = parse_poly("x0^2*x2 + x1^2*x3")
    fams = []
    for s in (1, 2, -3):
        fams += [ProjPoint([1, 0, 0, s]), ProjPoint([1, s, 0, 0]), ProjPoint([0, 1, s, 0])]
    fams += [ProjPoint([1, t, -t * t * s, s]) for s, t in [(1, 1), (3, 2), (-1, 4)]]
    show("x0^2*x2 + x1^2*x3", ruled, fams)
    smooth = parse_poly("x0^2*x3 + x0*x1*x2 + x1^3")
    show("x0^2*x3 + x0*x1*x2 + x1^3", smooth,
         [ProjPoint([1, s, t, -s ** 3 - s * t]) for s in range(-1, 2) for t in range(-1, 2)])
    eckardt = parse_poly("x0*x1*x3 + x2^3 + x2*x3^2")
    show("x0*x1*x3 + x2^3 + x2*x3^2", eckardt, [ProjPoint([0, 0, 0, 1])])


if __name__ == "__main__":
    main()
