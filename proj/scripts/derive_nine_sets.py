#!/usr/bin/env python3
"""Derives the pinned rational coordinates of the nine-sets family.

Eleven witness points sit at angles 90 + 360*c/11 degrees on the circle of
radius 5. Each is pinned exactly on that circle through the rational
parametrisation ((1 - t^2) / (1 + t^2), 2t / (1 + t^2)), with t = tan(phi/2)
rounded to a multiple of 1e-6. The twelfth point is the image of 01458 under
the rotation by 60 degrees about 01356, with sqrt(3) rounded to 1e-6.

Prints one C++ table row per point: label, x numerator/denominator, y
numerator/denominator. The library re-verifies every incidence exactly.
"""
import math
from fractions import Fraction

SCALE = 10**6
RING = ["01456", "01356", "01236", "02356", "23567", "02357",
        "02578", "02478", "04578", "14578", "01458"]


def circle_point(degrees, radius):
    phi = math.radians(degrees)
    phi = math.atan2(math.sin(phi), math.cos(phi))  # (-pi, pi]
    t = Fraction(round(math.tan(phi / 2) * SCALE), SCALE)
    d = 1 + t * t
    return (radius * (1 - t * t) / d, radius * 2 * t / d)


def main():
    pts = {}
    for c, label in enumerate(RING):
        pts[label] = circle_point(90 + 360 * c / 11, 5)
    ax, ay = pts["01356"]
    bx, by = pts["01458"]
    half = Fraction(1, 2)
    s = Fraction(round(math.sqrt(3) * SCALE), SCALE) / 2
    dx, dy = bx - ax, by - ay
    pts["13468"] = (ax + half * dx - s * dy, ay + s * dx + half * dy)
    for label in RING + ["13468"]:
        x, y = pts[label]
        print(f'    {{"{label}", "{x.numerator}", "{x.denominator}", '
              f'"{y.numerator}", "{y.denominator}"}},')


if __name__ == "__main__":
    main()
