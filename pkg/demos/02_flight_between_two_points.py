"""Recovering a flight path from noisy 3D observations.

Something flies (roughly) straight from A to B; we only see noisy positions.
In 3D there is no natural "dependent" coordinate, so classical least squares
does not even apply cleanly; the orthogonal fit recovers the direction
directly, and its accuracy improves as observations accumulate.

Run:  python demos/02_flight_between_two_points.py
"""

import numpy as np

from orthoreg import LineCloudSpec, fit_line, generate_line_cloud

A = np.array([0.0, 0.0, 0.0])
B = np.array([10.0, 10.0, 10.0])


def angle_to_truth_deg(sample):
    line = fit_line(sample.cloud)
    cosine = abs(float(line.direction @ sample.true_direction))
    return float(np.degrees(np.arccos(min(1.0, cosine))))


# One flight, moderate noise. The same seed always gives the same cloud.
spec = LineCloudSpec(start=A, end=B, n=50, sigma=0.1, seed=42)
sample = generate_line_cloud(spec)
line = fit_line(sample.cloud)

print("true direction      :", np.round(sample.true_direction, 4))
print("recovered direction :", np.round(line.direction, 4))
print(f"angular error       : {angle_to_truth_deg(sample):.4f} deg")
print(f"residual sum of squares: {line.error.sum_sq:.4f}")
print()

# No noise: the fit is exact.
exact = generate_line_cloud(LineCloudSpec(start=A, end=B, n=50, sigma=0.0, seed=0))
print("noiseless cloud residual:", fit_line(exact.cloud).error.sum_sq)
print()

# More observations, better direction estimates (median over 100 flights).
print("median angular error over 100 seeds:")
for n in (10, 100, 1000):
    errors = [
        angle_to_truth_deg(
            generate_line_cloud(LineCloudSpec(start=A, end=B, n=n, sigma=0.1, seed=seed))
        )
        for seed in range(100)
    ]
    print(f"  n = {n:>4}: {np.median(errors):.4f} deg")
