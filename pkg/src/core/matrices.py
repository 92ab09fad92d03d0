#!/usr/bin/env python3
"""
Named constant matrices used by the braid representations.

R is the 4x4 Yang-Baxter operator; R_PRIME = -conj(zeta) R is its
Temperley-Lieb normalization. S, SIGMA_X and SIGMA_Z are the 2x2 building
blocks of R^2 = S (x) SIGMA_X, P_S and P_SIGMA_X diagonalize S and SIGMA_X,
and D2, D4, M are the generator blocks of the irreducible extension on
2^k dimensions.
"""

import sys
from pathlib import Path

# Add parent directory to path
sys.path.insert(0, str(Path(__file__).parent.parent.parent))
from src.core.cyclo import I, INV_SQRT2, ONE, ZERO, ZETA, ZETA_BAR
from src.core.linalg import ExactMatrix

_h = INV_SQRT2

I2 = ExactMatrix.identity(2)
I4 = ExactMatrix.identity(4)

R = ExactMatrix([
    [_h, ZERO, ZERO, _h],
    [ZERO, _h, -_h, ZERO],
    [ZERO, _h, _h, ZERO],
    [-_h, ZERO, ZERO, _h],
])

R_PRIME = R.scale(-ZETA_BAR)

S = ExactMatrix([[0, 1], [-1, 0]])
SIGMA_X = ExactMatrix([[0, 1], [1, 0]])
SIGMA_Z = ExactMatrix([[1, 0], [0, -1]])

P_S = ExactMatrix([[ONE, I], [I, ONE]])
P_SIGMA_X = ExactMatrix([[1, -1], [1, 1]])

D2 = ExactMatrix.diag([ZETA, ZETA_BAR])
D4 = ExactMatrix.diag([ZETA, ZETA_BAR, ZETA_BAR, ZETA])
M = ExactMatrix([[_h, _h], [-_h, _h]])

