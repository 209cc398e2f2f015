"""Parameter matrices used in the reference experiments.

``PAIR_A`` .. ``PAIR_D`` are the 2D pairs of the Gaussian simulations.
``GRAY_SWEEP`` and ``COLOR_SWEEP`` are the edge-detection sweeps (axis 1 held at
the Fourier matrix, axis 2 approaching it); the last entry of each is the
classical pair.
"""

from .core import FOURIER, ParamMatrix, ParamPair

A1 = ParamMatrix(6.0, 50.0, 0.7, 6.0)
A2 = ParamMatrix(3.0, 400.0, 0.02, 3.0)
B1 = ParamMatrix(10.0, 330.0, 0.3, 10.0)
C1 = ParamMatrix(20.0, 39.9, 10.0, 20.0)
C2 = ParamMatrix(4.0, 1.0, 15.0, 4.0)
D1 = ParamMatrix(6.0, 500.0, 0.07, 6.0)
D2 = ParamMatrix(4.0, 300.0, 0.05, 4.0)

PAIR_A = ParamPair(A1, A2)
PAIR_B = ParamPair(B1, A2)
PAIR_C = ParamPair(C1, C2)
PAIR_D = ParamPair(D1, D2)
SIMULATION_PAIRS = {"A": PAIR_A, "B": PAIR_B, "C": PAIR_C, "D": PAIR_D}

GRAY_SWEEP_AXIS2 = [
    ParamMatrix(0.0, 1000.0, -0.001, 0.0),
    ParamMatrix(0.0, 500.0, -0.002, 0.0),
    ParamMatrix(0.0, 250.0, -0.004, 0.0),
    ParamMatrix(0.0, 25.0, -0.04, 0.0),
    FOURIER,
]
GRAY_SWEEP = [ParamPair(FOURIER, m) for m in GRAY_SWEEP_AXIS2]
GRAY_SWEEP_SHARPNESS = [-1000000.0, -250000.0, -62500.0, -625.0, -1.0]

COLOR_SWEEP_AXIS2 = [
    ParamMatrix(0.0, 400.0, -1.0 / 400, 0.0),
    ParamMatrix(0.0, 200.0, -0.005, 0.0),
    ParamMatrix(0.0, 125.0, -0.008, 0.0),
    ParamMatrix(0.0, 22.0, -1.0 / 22, 0.0),
    FOURIER,
]
COLOR_SWEEP = [ParamPair(FOURIER, m) for m in COLOR_SWEEP_AXIS2]
COLOR_SWEEP_SHARPNESS = [-160000.0, -40000.0, -15625.0, -484.0, -1.0]

# Unimodular matrices of the second grayscale sweep; two of its listed
# matrices have det != 1 and are left out.
POSITIVE_SWEEP_AXIS2 = [
    ParamMatrix(100.0, 70.0, 9999.0 / 70, 100.0),
    ParamMatrix(100.0, 300.0, 33.33, 100.0),
]


def all_matrices() -> list:
    """Every distinct unimodular matrix above, in a stable order."""
    seen = []
    for m in [A1, A2, B1, C1, C2, D1, D2, *GRAY_SWEEP_AXIS2, *COLOR_SWEEP_AXIS2, *POSITIVE_SWEEP_AXIS2]:
        if m not in seen:
            seen.append(m)
    return seen
