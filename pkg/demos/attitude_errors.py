"""How the attitude errors behave.

Psi measures how far R is from the setpoint (0 aligned, 2 upside down) and
chi is the error vector the attitude law pushes against. Their relation
explains why the certified constants only hold up to a quarter turn.
"""

import numpy as np
from scipy.spatial.transform import Rotation

from hexftc.se3 import chi_error, psi_error

print(f"{'angle deg':>9}  {'Psi':>6}  {'|chi|^2':>8}  {'Psi/|chi|^2':>11}")
for deg in (10, 45, 90, 120, 150, 179):
    R = Rotation.from_rotvec(np.deg2rad(deg) * np.array([1.0, 0.0, 0.0])).as_matrix()
    psi = psi_error(R, np.eye(3))
    chi2 = float(np.sum(chi_error(R, np.eye(3)) ** 2))
    print(f"{deg:9d}  {psi:6.3f}  {chi2:8.4f}  {psi / chi2:11.3f}")

# The ratio stays in [1/2, 1] until 90 deg and then grows without bound:
# near a half turn chi vanishes while Psi approaches 2.
