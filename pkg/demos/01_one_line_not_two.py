"""Why orthogonal regression: one line instead of two.

Classical least squares minimizes vertical offsets, so regressing y on x and
x on y give two different lines through the same centroid (the "scissors").
Orthogonal regression minimizes the perpendicular distances and gives a
single line, independent of which variable is called dependent.

Run:  python demos/01_one_line_not_two.py
Writes the comparison chart to demo_output/scissors.svg.
"""

from pathlib import Path

import numpy as np

from orthoreg import compare_ols_tls
from orthoreg.cli import emit_plot_svg

# A small cloud where all three fits are easy to write down by hand.
x = np.array([1.0, 3.0, 4.0, 5.0, 7.0])
y = np.array([4.0, 2.0, 6.0, 8.0, 5.0])

report = compare_ols_tls(x, y)


def line_eq(slope, intercept, lhs="y", rhs="x"):
    sign = "+" if intercept >= 0 else "-"
    return f"{lhs} = {slope:.4f} {rhs} {sign} {abs(intercept):.4f}"


print("data centroid:", report.centroid)
print(f"classical y on x : {line_eq(report.ols.slope, report.ols.intercept)}")
print(f"conjugate x on y : {line_eq(report.conjugate.slope, report.conjugate.intercept, 'x', 'y')}")

dx, dy = report.tls.direction
tls_slope = dy / dx
tls_intercept = report.centroid[1] - tls_slope * report.centroid[0]
print(f"orthogonal       : direction ({dx:.4f}, {dy:.4f}) through the centroid")
print(f"                   i.e. {line_eq(tls_slope, tls_intercept)}")
print()

# Swapping the axes moves the classical line but not the orthogonal one.
swapped = compare_ols_tls(y, x)
k, d = swapped.ols.slope, swapped.ols.intercept  # x = k y + d in original coordinates
sx, sy = swapped.tls.direction
print("after swapping x and y, mapped back to the original plane:")
print(f"  classical fit is now {line_eq(1 / k, -d / k)} "
      f"(was {line_eq(report.ols.slope, report.ols.intercept)})")
print(f"  orthogonal fit is the same geometric line: direction ({sy:.4f}, {sx:.4f}) unswapped")
print()

print(f"angle between the classical scissors: {report.angle_ols_conjugate_deg:.2f} deg")
print(f"orthogonal line sits inside the scissors: {report.tls_between_scissors}")
print(f"its residual sum of squares: {report.tls.error.sum_sq:.4f} "
      "(no line does better; try any other)")

out = Path("demo_output")
out.mkdir(exist_ok=True)
(out / "scissors.svg").write_text(emit_plot_svg(report), encoding="utf-8")
print(f"\nchart written to {out / 'scissors.svg'}")
